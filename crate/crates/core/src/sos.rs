//! Small-step semantics of expressions: nullability and derivative transitions.
//!
//! `r →a r'` means a word of L(r) can start with `a` and continue with a word
//! of L(r'). `nullable(r)` holds exactly when ε ∈ L(r). Together they give an
//! NFA whose states are expressions (see [`crate::builder`]).

use std::collections::BTreeSet;
use std::fmt;

use crate::regex::{Regex, Symbol};

/// How derivative targets are identified as states.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Targets exactly as the transition rules produce them.
    #[default]
    Literal,
    /// Leading `ε·` prefixes stripped from every state.
    Normalized,
}

impl Mode {
    pub fn apply(self, r: Regex) -> Regex {
        match self {
            Mode::Literal => r,
            Mode::Normalized => normalize_leading_eps(&r),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Literal => "literal",
            Mode::Normalized => "normalized",
        })
    }
}

/// The outgoing transitions of an expression, as (symbol, target) pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OutSet(BTreeSet<(Symbol, Regex)>);

impl OutSet {
    pub fn new() -> Self {
        OutSet(BTreeSet::new())
    }

    pub fn insert(&mut self, a: Symbol, target: Regex) -> bool {
        self.0.insert((a, target))
    }

    pub fn contains(&self, a: Symbol, target: &Regex) -> bool {
        self.0.contains(&(a, target.clone()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Symbol, Regex)> {
        self.0.iter()
    }

    fn map_targets(self, f: impl Fn(Regex) -> Regex) -> Self {
        OutSet(self.0.into_iter().map(|(a, t)| (a, f(t))).collect())
    }

    fn union(mut self, other: OutSet) -> Self {
        self.0.extend(other.0);
        self
    }
}

impl IntoIterator for OutSet {
    type Item = (Symbol, Regex);
    type IntoIter = std::collections::btree_set::IntoIter<(Symbol, Regex)>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl FromIterator<(Symbol, Regex)> for OutSet {
    fn from_iter<I: IntoIterator<Item = (Symbol, Regex)>>(iter: I) -> Self {
        OutSet(iter.into_iter().collect())
    }
}

/// True iff ε ∈ L(r), decided structurally.
pub fn nullable(r: &Regex) -> bool {
    match r {
        Regex::EmptySet | Regex::Sym(_) => false,
        Regex::Epsilon | Regex::Star(_) => true,
        Regex::Alt(l, r) => nullable(l) || nullable(r),
        Regex::Cat(l, r) | Regex::And(l, r) | Regex::Shuffle(l, r) => nullable(l) && nullable(r),
    }
}

/// All pairs `(a, r')` with `r →a r'`.
pub fn out(r: &Regex) -> OutSet {
    match r {
        Regex::EmptySet | Regex::Epsilon => OutSet::new(),
        Regex::Sym(a) => [(*a, Regex::Epsilon)].into_iter().collect(),
        Regex::Alt(l, r) => out(l).union(out(r)),
        Regex::Cat(l, r) => {
            let mut set = out(l).map_targets(|l2| Regex::Cat(l2.into(), r.clone()));
            if nullable(l) {
                set = set.union(out(r));
            }
            set
        }
        Regex::Star(inner) => out(inner).map_targets(|i2| Regex::Cat(i2.into(), r.clone().into())),
        Regex::And(l, r) => {
            let right = out(r);
            let mut set = OutSet::new();
            for (a, l2) in out(l) {
                for (b, r2) in right.iter() {
                    if a == *b {
                        set.insert(a, Regex::And(l2.clone().into(), r2.clone().into()));
                    }
                }
            }
            set
        }
        Regex::Shuffle(l, r) => {
            let left_moves = out(l).map_targets(|l2| Regex::Shuffle(l2.into(), r.clone()));
            let right_moves = out(r).map_targets(|r2| Regex::Shuffle(l.clone(), r2.into()));
            left_moves.union(right_moves)
        }
    }
}

/// `{ r' : r →a r' }`.
pub fn step(r: &Regex, a: Symbol) -> BTreeSet<Regex> {
    out(r)
        .into_iter()
        .filter_map(|(b, t)| (a == b).then_some(t))
        .collect()
}

/// Strips leading `ε·` prefixes, so `εbb(abb+a)*` becomes `bb(abb+a)*`.
///
/// Only the left spine of concatenations is rewritten: a concatenation whose
/// left operand normalizes to ε is replaced by its normalized right operand.
/// Nothing else in the tree is touched.
pub fn normalize_leading_eps(r: &Regex) -> Regex {
    match r {
        Regex::Cat(l, rest) => match normalize_leading_eps(l) {
            Regex::Epsilon => normalize_leading_eps(rest),
            l2 if l2 == **l => r.clone(),
            l2 => Regex::Cat(l2.into(), rest.clone()),
        },
        _ => r.clone(),
    }
}
