//! State bounds for expressions using intersection (`&`) and interleaving (`#`).
//!
//! The derivatives of `r1 & r2` and `r1 # r2` are pairs of derivatives of the
//! operands, so the `size + 1` bound no longer holds. It is replaced by a
//! product: an `&`/`#` node may have as many states as its operands' bounds
//! multiplied together.

use crate::builder::reachability_set;
use crate::regex::Regex;
use crate::sos::Mode;

/// Upper bound on `|RS(r)|`.
///
/// Maximal `&`/`#`-free subtrees contribute `size + 1`. Above them,
/// `&` and `#` multiply the bounds of their operands, `+` and concatenation
/// add them, and `*` adds one.
pub fn ext_state_bound(r: &Regex) -> u128 {
    if !r.has_extensions() {
        return r.size() as u128 + 1;
    }
    match r {
        Regex::And(l, x) | Regex::Shuffle(l, x) => ext_state_bound(l).saturating_mul(ext_state_bound(x)),
        Regex::Alt(l, x) | Regex::Cat(l, x) => ext_state_bound(l).saturating_add(ext_state_bound(x)),
        Regex::Star(x) => ext_state_bound(x).saturating_add(1),
        Regex::EmptySet | Regex::Epsilon | Regex::Sym(_) => unreachable!("leaves have no extensions"),
    }
}

/// True iff the literal-mode reachability set of `r` respects [`ext_state_bound`].
pub fn ext_state_bound_check(r: &Regex) -> bool {
    reachability_set(r, Mode::Literal).len() as u128 <= ext_state_bound(r)
}
