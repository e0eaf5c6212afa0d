//! The reproducible generator behind `gnp` graphs and seeded sampling.
//!
//! Seeding: `state = splitmix64(seed)`, replaced by `0x9E3779B97F4A7C15` if
//! that is zero. Each draw is one xorshift64 step (`x ^= x << 13; x ^= x >> 7;
//! x ^= x << 17`) returning the new state. A Bernoulli(num/den) trial draws
//! `x` and succeeds iff `x < floor(num * 2^64 / den)` (always, when num = den).
//! An edge of `gnp(n, p, seed)` is one trial per vertex pair, pairs visited in
//! graph6 order: `(0,1), (0,2), (1,2), (0,3), ...`.

#[derive(Clone, Debug)]
pub struct XorShift64 {
    state: u64,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        let s = splitmix64(seed);
        XorShift64 { state: if s == 0 { 0x9E37_79B9_7F4A_7C15 } else { s } }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }

    pub fn bernoulli(&mut self, num: u64, den: u64) -> bool {
        let x = self.next_u64();
        if num >= den {
            return true;
        }
        let threshold = ((num as u128) << 64) / den as u128;
        (x as u128) < threshold
    }

    /// Uniform in `0..bound` (bound > 0), by rejection.
    pub fn below(&mut self, bound: u64) -> u64 {
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}
