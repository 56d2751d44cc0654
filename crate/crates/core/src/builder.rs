//! NFA construction from expressions by exploring derivative transitions.
//!
//! The states of `M_r` are the expressions reachable from `r`, its
//! transitions are the derivative steps, and its accepting states are the
//! nullable ones. For operators other than `&` and `#` there are at most
//! `size(r) + 1` states.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::automata::{Nfa, StateId, Transition};
use crate::error::Result;
use crate::regex::{Alphabet, Regex, Symbol};
use crate::sos::{nullable, out, step, Mode};

/// An NFA whose states are expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildResult {
    pub nfa: Nfa,
    /// `state_labels[q]` is the expression that state `q` stands for.
    pub state_labels: Vec<Regex>,
    pub mode: Mode,
}

impl BuildResult {
    pub fn state_of(&self, r: &Regex) -> Option<StateId> {
        self.state_labels.iter().position(|s| s == r)
    }
}

/// Worklist construction of `M_r`.
///
/// Starting from `r`, repeatedly take the oldest unexplored expression, mark
/// it accepting if nullable, add an edge for each of its outgoing
/// transitions, and queue any target not seen before. State numbers follow
/// discovery order.
pub fn build_nfa(r: &Regex, alphabet: &Alphabet, mode: Mode) -> Result<BuildResult> {
    r.check_alphabet(alphabet)?;
    let start = mode.apply(r.clone());
    let mut ids: HashMap<Regex, StateId> = HashMap::from([(start.clone(), 0)]);
    let mut states = vec![start];
    let mut work = VecDeque::from([0]);
    let mut accepting = Vec::new();
    let mut delta = Vec::new();
    while let Some(q) = work.pop_front() {
        let current = states[q].clone();
        if nullable(&current) {
            accepting.push(q);
        }
        for (a, target) in out(&current) {
            let target = mode.apply(target);
            let to = match ids.get(&target) {
                Some(&id) => id,
                None => {
                    let id = states.len();
                    ids.insert(target.clone(), id);
                    states.push(target);
                    work.push_back(id);
                    id
                }
            };
            delta.push(Transition::new(q, a, to));
        }
    }
    let nfa = Nfa::new(
        alphabet.clone(),
        states.iter().map(|s| s.to_string()).collect(),
        delta,
        0,
        accepting,
    )?;
    Ok(BuildResult {
        nfa,
        state_labels: states,
        mode,
    })
}

/// RS(r): every expression reachable from `r` by derivative steps, `r` included.
pub fn reachability_set(r: &Regex, mode: Mode) -> BTreeSet<Regex> {
    let start = mode.apply(r.clone());
    let mut seen = BTreeSet::from([start.clone()]);
    let mut work = vec![start];
    while let Some(current) = work.pop() {
        for (_, target) in out(&current) {
            let target = mode.apply(target);
            if seen.insert(target.clone()) {
                work.push(target);
            }
        }
    }
    seen
}

/// One run of derivative steps along a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationPath {
    /// `r0, r1, ..., rn` with `r(i-1) →a(i) r(i)`.
    pub expressions: Vec<Regex>,
    /// Whether `rn` is nullable, i.e. this path witnesses acceptance.
    pub accepting: bool,
}

/// Every derivation of `w` from `r`. Paths that get stuck before the end of
/// the word are dropped, so `w ∈ L(r)` iff some returned path is accepting.
pub fn trace(r: &Regex, w: &[Symbol], mode: Mode) -> Vec<DerivationPath> {
    let mut paths = vec![vec![mode.apply(r.clone())]];
    for &a in w {
        paths = paths
            .into_iter()
            .flat_map(|path| {
                let last = path.last().expect("paths are non-empty").clone();
                step(&last, a).into_iter().map(move |next| {
                    let mut p = path.clone();
                    p.push(mode.apply(next));
                    p
                })
            })
            .collect();
    }
    paths
        .into_iter()
        .map(|expressions| DerivationPath {
            accepting: nullable(expressions.last().expect("paths are non-empty")),
            expressions,
        })
        .collect()
}
