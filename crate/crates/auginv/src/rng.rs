//! Seeded pseudo-random number generation.
//!
//! Everything stochastic in this crate draws from [`SeededRng`], a
//! xoshiro256++ generator seeded through SplitMix64. Both algorithms are
//! fixed and self-contained, so a given seed produces the same stream on
//! every platform, bit for bit. Derived streams (per image, per grid point,
//! per training step) come from [`SeededRng::derive`], which hashes the
//! parent seed together with a path of integers.

/// Deterministic xoshiro256++ generator.
#[derive(Debug, Clone)]
pub struct SeededRng {
    state: [u64; 4],
    /// Spare Gaussian deviate from the last Box-Muller pair.
    gauss_spare: Option<f64>,
}

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN_GAMMA);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl SeededRng {
    /// Creates a generator whose four state words are the first four
    /// SplitMix64 outputs for `seed`.
    pub fn new(seed: u64) -> Self {
        let mut s = seed;
        let state = [
            splitmix64(&mut s),
            splitmix64(&mut s),
            splitmix64(&mut s),
            splitmix64(&mut s),
        ];
        SeededRng { state, gauss_spare: None }
    }

    /// Derives an independent child stream from `seed` and an integer path.
    ///
    /// The path is folded into the seed one component at a time through
    /// SplitMix64, so `derive(s, &[a, b])` and `derive(s, &[b, a])` disagree.
    pub fn derive(seed: u64, path: &[u64]) -> Self {
        let mut s = seed;
        let mut acc = splitmix64(&mut s);
        for &p in path {
            let mut t = acc ^ p;
            acc = splitmix64(&mut t);
        }
        SeededRng::new(acc)
    }

    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.state;
        let result = s[0].wrapping_add(s[3]).rotate_left(23).wrapping_add(s[0]);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Uniform in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in [0, n). Uses the widening-multiply trick; the bias
    /// for n far below 2^64 is unobservable.
    pub fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (((self.next_u64() as u128) * (n as u128)) >> 64) as usize
    }

    /// Bernoulli draw with probability `p`.
    pub fn coin(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// Standard normal via Box-Muller; the second deviate of each pair is
    /// cached so consecutive calls consume bits predictably.
    pub fn normal(&mut self) -> f64 {
        if let Some(z) = self.gauss_spare.take() {
            return z;
        }
        let u1 = loop {
            let u = self.next_f64();
            if u > 0.0 {
                break u;
            }
        };
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        self.gauss_spare = Some(r * theta.sin());
        r * theta.cos()
    }

    /// In-place Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}
