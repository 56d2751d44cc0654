//! Set-theoretic language semantics, used as the ground-truth oracle.
//!
//! Membership is decided directly from the definition of L(r) by splitting
//! words, with no reference to derivatives or automata.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::regex::{Alphabet, Regex, Symbol, Word};

/// Default bound on `enumerate_language`.
pub const DEFAULT_ENUMERATION_CAP: usize = 10;

/// Memoized membership tester for one expression.
///
/// Subexpressions are numbered once; the memo is keyed on
/// (subexpression, word) so repeated queries share work.
pub struct Membership {
    nodes: Vec<Node>,
    root: usize,
    memo: HashMap<(usize, Vec<Symbol>), bool>,
}

enum Node {
    Empty,
    Eps,
    Sym(Symbol),
    Alt(usize, usize),
    Cat(usize, usize),
    Star(usize),
    And(usize, usize),
    Shuffle(usize, usize),
}

impl Membership {
    pub fn new(r: &Regex) -> Self {
        let mut nodes = Vec::new();
        let root = Self::number(r, &mut nodes);
        Membership {
            nodes,
            root,
            memo: HashMap::new(),
        }
    }

    fn number(r: &Regex, nodes: &mut Vec<Node>) -> usize {
        let node = match r {
            Regex::EmptySet => Node::Empty,
            Regex::Epsilon => Node::Eps,
            Regex::Sym(a) => Node::Sym(*a),
            Regex::Star(x) => Node::Star(Self::number(x, nodes)),
            Regex::Alt(l, x) => {
                let (l, x) = (Self::number(l, nodes), Self::number(x, nodes));
                Node::Alt(l, x)
            }
            Regex::Cat(l, x) => {
                let (l, x) = (Self::number(l, nodes), Self::number(x, nodes));
                Node::Cat(l, x)
            }
            Regex::And(l, x) => {
                let (l, x) = (Self::number(l, nodes), Self::number(x, nodes));
                Node::And(l, x)
            }
            Regex::Shuffle(l, x) => {
                let (l, x) = (Self::number(l, nodes), Self::number(x, nodes));
                Node::Shuffle(l, x)
            }
        };
        nodes.push(node);
        nodes.len() - 1
    }

    pub fn contains(&mut self, w: &[Symbol]) -> bool {
        self.member(self.root, w)
    }

    fn member(&mut self, n: usize, w: &[Symbol]) -> bool {
        // leaves are cheap enough not to memoize
        match self.nodes[n] {
            Node::Empty => return false,
            Node::Eps => return w.is_empty(),
            Node::Sym(a) => return w.len() == 1 && w[0] == a,
            _ => {}
        }
        let key = (n, w.to_vec());
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let result = match self.nodes[n] {
            Node::Alt(l, r) => self.member(l, w) || self.member(r, w),
            Node::And(l, r) => self.member(l, w) && self.member(r, w),
            Node::Cat(l, r) => (0..=w.len()).any(|k| self.member(l, &w[..k]) && self.member(r, &w[k..])),
            // L* = {ε} ∪ L·L*, taking the first chunk non-empty so the recursion shrinks
            Node::Star(inner) => {
                w.is_empty() || (1..=w.len()).any(|k| self.member(inner, &w[..k]) && self.member(n, &w[k..]))
            }
            Node::Shuffle(l, r) => self.shuffle_member(l, r, w),
            Node::Empty | Node::Eps | Node::Sym(_) => unreachable!(),
        };
        self.memo.insert(key, result);
        result
    }

    // Tries every way of dealing the positions of `w` to the left or right operand.
    fn shuffle_member(&mut self, l: usize, r: usize, w: &[Symbol]) -> bool {
        let n = w.len();
        assert!(n < 64, "interleaving oracle limited to words shorter than 64");
        let mut seen = BTreeSet::new();
        for mask in 0u64..(1u64 << n) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, &c) in w.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.push(c);
                } else {
                    right.push(c);
                }
            }
            if !seen.insert((left.clone(), right.clone())) {
                continue;
            }
            if self.member(l, &left) && self.member(r, &right) {
                return true;
            }
        }
        false
    }
}

/// True iff `w` ∈ L(r).
pub fn lang_member(r: &Regex, w: &[Symbol]) -> bool {
    Membership::new(r).contains(w)
}

/// Every word of length at most `max_len` in L(r), found by testing all of
/// Σ^≤max_len. Fails if `max_len` exceeds [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_language(r: &Regex, alphabet: &Alphabet, max_len: usize) -> Result<BTreeSet<Word>> {
    enumerate_language_capped(r, alphabet, max_len, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_language_capped(
    r: &Regex,
    alphabet: &Alphabet,
    max_len: usize,
    cap: usize,
) -> Result<BTreeSet<Word>> {
    if max_len > cap {
        return Err(Error::CapExceeded {
            requested: max_len,
            cap,
        });
    }
    let mut m = Membership::new(r);
    Ok(alphabet
        .words_up_to(max_len)
        .into_iter()
        .filter(|w| m.contains(w.as_slice()))
        .collect())
}
