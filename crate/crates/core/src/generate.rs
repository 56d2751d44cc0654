//! Seeded random expressions for property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::regex::{Alphabet, Regex, Symbol};

/// Builds a random expression with `size() <= target_size`.
///
/// The same seed always yields the same tree. Leaves become more likely as
/// the remaining size budget shrinks; a budget of 1 always yields a leaf.
pub fn random_regex(seed: u64, target_size: usize, alphabet: &Alphabet, include_extensions: bool) -> Regex {
    assert!(target_size >= 1, "target size must be at least 1");
    let mut g = Generator {
        rng: ChaCha8Rng::seed_from_u64(seed),
        symbols: alphabet.symbols().collect(),
        extensions: include_extensions,
    };
    g.gen(target_size)
}

struct Generator {
    rng: ChaCha8Rng,
    symbols: Vec<Symbol>,
    extensions: bool,
}

impl Generator {
    fn leaf(&mut self) -> Regex {
        // ∅ and ε get weight 1 each, every symbol weight 2
        let n = self.symbols.len();
        let pick = self.rng.gen_range(0..2 + 2 * n);
        match pick {
            0 => Regex::EmptySet,
            1 => Regex::Epsilon,
            k => Regex::Sym(self.symbols[(k - 2) / 2]),
        }
    }

    fn gen(&mut self, budget: usize) -> Regex {
        let leaf_probability = 1.0 / budget as f64;
        if budget == 1 || self.rng.gen_bool(leaf_probability.min(1.0)) {
            return self.leaf();
        }
        if budget == 2 {
            return Regex::star(self.leaf());
        }
        let ops = if self.extensions { 5 } else { 3 };
        let op = self.rng.gen_range(0..ops);
        if op == 0 {
            return Regex::star(self.gen(budget - 1));
        }
        let left_budget = self.rng.gen_range(1..=budget - 2);
        let l = self.gen(left_budget);
        let r = self.gen(budget - 1 - left_budget);
        match op {
            1 => Regex::alt(l, r),
            2 => Regex::cat(l, r),
            3 => Regex::and(l, r),
            _ => Regex::shuffle(l, r),
        }
    }
}
