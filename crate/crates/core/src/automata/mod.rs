//! Finite automata: NFAs, NFAs with ε-transitions, and DFAs.
//!
//! All three share one representation, [`Automaton`], generic over the
//! transition label: [`Symbol`] for plain NFAs and `Option<Symbol>` when ε
//! moves (`None`) are allowed. States are dense integers `0..n`; each carries
//! a display label (an expression, a subset, or just `q<i>`).

mod convert;
mod serial;
mod thompson;

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::hash::Hash;

pub use convert::{determinize, eliminate_eps, eps_closure};
pub use serial::{from_json, AnyAutomaton, Kind};
pub use thompson::thompson;

use crate::error::{Error, Result};
use crate::regex::{Alphabet, Symbol, Word};

pub type StateId = usize;

/// Hard cap for exhaustive bounded comparisons.
pub const MAX_COMPARE_LEN: usize = 12;

/// A transition label: either a symbol, or possibly ε.
pub trait Label: Copy + Ord + Hash + Debug {
    /// The consumed symbol, or `None` for an ε move.
    fn symbol(self) -> Option<Symbol>;
    /// Converts back from the optional form; `None` if ε is not representable.
    fn from_symbol(s: Option<Symbol>) -> Option<Self>;
}

impl Label for Symbol {
    fn symbol(self) -> Option<Symbol> {
        Some(self)
    }

    fn from_symbol(s: Option<Symbol>) -> Option<Self> {
        s
    }
}

impl Label for Option<Symbol> {
    fn symbol(self) -> Option<Symbol> {
        self
    }

    fn from_symbol(s: Option<Symbol>) -> Option<Self> {
        Some(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transition<L> {
    pub from: StateId,
    pub label: L,
    pub to: StateId,
}

impl<L> Transition<L> {
    pub fn new(from: StateId, label: L, to: StateId) -> Self {
        Transition { from, label, to }
    }
}

/// A finite automaton `(Q, Σ, δ, q_I, F)` with `Q = 0..labels.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton<L: Label> {
    alphabet: Alphabet,
    labels: Vec<String>,
    transitions: BTreeSet<Transition<L>>,
    initial: StateId,
    accepting: BTreeSet<StateId>,
    // outgoing edges per state, derived from `transitions`
    edges: Vec<Vec<(L, StateId)>>,
}

pub type Nfa = Automaton<Symbol>;
pub type NfaEps = Automaton<Option<Symbol>>;

impl<L: Label> Automaton<L> {
    /// Builds an automaton, checking that it is well formed: at least one
    /// state, every endpoint a state, every symbol in the alphabet.
    pub fn new(
        alphabet: Alphabet,
        labels: Vec<String>,
        transitions: impl IntoIterator<Item = Transition<L>>,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Schema("automaton has no states".into()));
        }
        if initial >= n {
            return Err(Error::Schema(format!("initial state {initial} does not exist")));
        }
        let accepting: BTreeSet<StateId> = accepting.into_iter().collect();
        if let Some(q) = accepting.iter().find(|q| **q >= n) {
            return Err(Error::Schema(format!("accepting state {q} does not exist")));
        }
        let transitions: BTreeSet<Transition<L>> = transitions.into_iter().collect();
        let mut edges = vec![Vec::new(); n];
        for t in &transitions {
            if t.from >= n || t.to >= n {
                return Err(Error::Schema(format!(
                    "transition {} -> {} refers to a missing state",
                    t.from, t.to
                )));
            }
            if let Some(a) = t.label.symbol() {
                if !alphabet.contains(a) {
                    return Err(Error::SymbolNotInAlphabet(a));
                }
            }
            edges[t.from].push((t.label, t.to));
        }
        Ok(Automaton {
            alphabet,
            labels,
            transitions,
            initial,
            accepting,
            edges,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.labels.len()
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.labels.len()
    }

    pub fn label(&self, q: StateId) -> &str {
        &self.labels[q]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn transitions(&self) -> &BTreeSet<Transition<L>> {
        &self.transitions
    }

    pub fn num_transitions(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(&q)
    }

    /// Outgoing `(label, target)` pairs of `q`, in label order.
    pub fn edges(&self, q: StateId) -> &[(L, StateId)] {
        &self.edges[q]
    }

    /// States reachable from `states` by consuming exactly `a`, without closure.
    pub fn move_on(&self, states: &BTreeSet<StateId>, a: Symbol) -> BTreeSet<StateId> {
        states
            .iter()
            .flat_map(|&q| self.edges[q].iter())
            .filter(|(l, _)| l.symbol() == Some(a))
            .map(|&(_, to)| to)
            .collect()
    }

    /// Acceptance from the initial state: track the set of states reachable
    /// after each symbol, closing under ε moves, and accept iff the final set
    /// meets the accepting states.
    pub fn accepts(&self, w: &[Symbol]) -> bool {
        let mut current = eps_closure(self, &BTreeSet::from([self.initial]));
        for &a in w {
            if current.is_empty() {
                return false;
            }
            current = eps_closure(self, &self.move_on(&current, a));
        }
        current.iter().any(|q| self.accepting.contains(q))
    }
}

impl Nfa {
    /// Views a plain NFA as an NFA-ε with no ε moves.
    pub fn to_eps(&self) -> NfaEps {
        Automaton::new(
            self.alphabet.clone(),
            self.labels.clone(),
            self.transitions
                .iter()
                .map(|t| Transition::new(t.from, Some(t.label), t.to)),
            self.initial,
            self.accepting.iter().copied(),
        )
        .expect("relabelling preserves well-formedness")
    }
}

/// An NFA whose transition relation is total and single-valued.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    nfa: Nfa,
    // next[q][i] is the successor of q on the i-th alphabet symbol
    next: Vec<Vec<StateId>>,
}

impl Dfa {
    /// Checks that every (state, symbol) pair has exactly one successor.
    pub fn from_nfa(nfa: Nfa) -> Result<Self> {
        let symbols: Vec<Symbol> = nfa.alphabet().symbols().collect();
        let mut next = Vec::with_capacity(nfa.num_states());
        for q in nfa.states() {
            let mut row = Vec::with_capacity(symbols.len());
            for &a in &symbols {
                let targets: Vec<StateId> = nfa
                    .edges(q)
                    .iter()
                    .filter(|(l, _)| *l == a)
                    .map(|&(_, t)| t)
                    .collect();
                match targets.as_slice() {
                    [t] => row.push(*t),
                    [] => return Err(Error::Schema(format!("state {q} has no transition on '{a}'"))),
                    _ => {
                        return Err(Error::Schema(format!(
                            "state {q} has several transitions on '{a}'"
                        )))
                    }
                }
            }
            next.push(row);
        }
        Ok(Dfa { nfa, next })
    }

    pub fn as_nfa(&self) -> &Nfa {
        &self.nfa
    }

    pub fn into_nfa(self) -> Nfa {
        self.nfa
    }

    /// The unique successor of `q` on `a`, or `None` if `a` is not in the alphabet.
    pub fn delta(&self, q: StateId, a: Symbol) -> Option<StateId> {
        let i = self.nfa.alphabet().symbols().position(|s| s == a)?;
        Some(self.next[q][i])
    }

    pub fn accepts(&self, w: &[Symbol]) -> bool {
        let mut q = self.nfa.initial();
        for &a in w {
            match self.delta(q, a) {
                Some(next) => q = next,
                None => return false,
            }
        }
        self.nfa.is_accepting(q)
    }
}

impl std::ops::Deref for Dfa {
    type Target = Nfa;

    fn deref(&self) -> &Nfa {
        &self.nfa
    }
}

/// Anything that decides membership of words over an alphabet.
pub trait Acceptor {
    fn alphabet(&self) -> &Alphabet;
    fn accepts(&self, w: &[Symbol]) -> bool;
}

impl<L: Label> Acceptor for Automaton<L> {
    fn alphabet(&self) -> &Alphabet {
        Automaton::alphabet(self)
    }

    fn accepts(&self, w: &[Symbol]) -> bool {
        Automaton::accepts(self, w)
    }
}

impl Acceptor for Dfa {
    fn alphabet(&self) -> &Alphabet {
        self.nfa.alphabet()
    }

    fn accepts(&self, w: &[Symbol]) -> bool {
        Dfa::accepts(self, w)
    }
}

/// Acceptance for a plain NFA.
pub fn nfa_accepts(m: &Nfa, w: &[Symbol]) -> bool {
    m.accepts(w)
}

/// Acceptance for an NFA with ε moves.
pub fn nfa_eps_accepts(m: &NfaEps, w: &[Symbol]) -> bool {
    m.accepts(w)
}

/// The shortest word of length at most `max_len` accepted by exactly one of
/// the two machines, if any.
pub fn distinguishing_word(m1: &dyn Acceptor, m2: &dyn Acceptor, max_len: usize) -> Result<Option<Word>> {
    if max_len > MAX_COMPARE_LEN {
        return Err(Error::CapExceeded {
            requested: max_len,
            cap: MAX_COMPARE_LEN,
        });
    }
    if m1.alphabet() != m2.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(m1
        .alphabet()
        .words_up_to(max_len)
        .into_iter()
        .find(|w| m1.accepts(w.as_slice()) != m2.accepts(w.as_slice())))
}

/// True iff both machines accept the same words of length at most `max_len`.
pub fn equivalent_up_to(m1: &dyn Acceptor, m2: &dyn Acceptor, max_len: usize) -> Result<bool> {
    Ok(distinguishing_word(m1, m2, max_len)?.is_none())
}
