use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Search knobs shared by every randomized or exponential step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    /// random homogeneous probes per component
    pub probes: usize,
    /// cap on the number of degree subsets `size()` may enumerate
    pub max_subsets: u64,
    /// permutation of the lexicographic enumeration of `P′` used by the
    /// greedy commutative selection
    pub commute_order: Option<Vec<usize>>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0,
            probes: 8,
            max_subsets: 1 << 16,
            commute_order: None,
        }
    }
}

impl Options {
    /// Independent, reproducible stream for `(seed, a, b)`.
    pub fn rng(&self, a: u64, b: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(a.wrapping_mul(0x1_0000_0001).wrapping_add(b));
        rng
    }
}
