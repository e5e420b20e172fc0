//! Self-contained deterministic PRNG for the experiment harness.
//!
//! The generator is xoshiro256** seeded through splitmix64, both fixed
//! here by algorithm so that a command line plus a seed pins the byte
//! content of every CSV this crate emits. Statistical quality is far
//! beyond what coefficient sampling needs, state is four words, and there
//! is no global state anywhere — each experiment owns its generator.

/// splitmix64 step: advances the state and returns the next word.
/// Used only to stretch a 64-bit seed into the xoshiro state.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// xoshiro256** with splitmix64 seeding.
#[derive(Debug, Clone)]
pub struct Xoshiro256 {
    s: [u64; 4],
}

impl Xoshiro256 {
    pub fn seeded(seed: u64) -> Self {
        let mut sm = seed;
        let mut s = [0u64; 4];
        for w in &mut s {
            *w = splitmix64(&mut sm);
        }
        // The all-zero state is the one fixed point of the generator;
        // splitmix64 cannot emit four zero words from any seed, but the
        // guard keeps that invariant local and obvious.
        if s == [0; 4] {
            s[0] = 1;
        }
        Xoshiro256 { s }
    }

    pub fn next_u64(&mut self) -> u64 {
        let result = self.s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = self.s[1] << 17;
        self.s[2] ^= self.s[0];
        self.s[3] ^= self.s[1];
        self.s[1] ^= self.s[2];
        self.s[0] ^= self.s[3];
        self.s[2] ^= t;
        self.s[3] = self.s[3].rotate_left(45);
        result
    }

    /// Uniform draw from `0..bound` by rejection, so no modulo bias.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let zone = (u64::MAX / bound) * bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    /// Moves a uniform random `count`-subset of `items` into the first
    /// `count` positions (partial Fisher-Yates shuffle) and returns it as
    /// a sorted copy.
    pub fn subset<T: Clone + Ord>(&mut self, items: &mut [T], count: usize) -> Vec<T> {
        assert!(count <= items.len(), "subset larger than the pool");
        for i in 0..count {
            let j = i + self.below((items.len() - i) as u64) as usize;
            items.swap(i, j);
        }
        let mut picked = items[..count].to_vec();
        picked.sort();
        picked
    }
}
