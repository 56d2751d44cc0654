use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{Automaton, Dfa, Label, Nfa, NfaEps, StateId, Transition};

/// The least superset of `states` closed under ε moves.
pub fn eps_closure<L: Label>(m: &Automaton<L>, states: &BTreeSet<StateId>) -> BTreeSet<StateId> {
    let mut closure = states.clone();
    let mut stack: Vec<StateId> = states.iter().copied().collect();
    while let Some(q) = stack.pop() {
        for &(l, to) in m.edges(q) {
            if l.symbol().is_none() && closure.insert(to) {
                stack.push(to);
            }
        }
    }
    closure
}

/// Removes ε moves, keeping the state set.
///
/// `q -a-> q'` whenever some `p` in the closure of `q` has `p -a-> p'` and
/// `q'` is in the closure of `p'`. A state accepts when its closure meets the
/// original accepting set.
pub fn eliminate_eps(m: &NfaEps) -> Nfa {
    let closures: Vec<BTreeSet<StateId>> = m.states().map(|q| eps_closure(m, &BTreeSet::from([q]))).collect();
    let mut transitions = BTreeSet::new();
    for q in m.states() {
        for &p in &closures[q] {
            for &(l, mid) in m.edges(p) {
                if let Some(a) = l.symbol() {
                    for &to in &closures[mid] {
                        transitions.insert(Transition::new(q, a, to));
                    }
                }
            }
        }
    }
    let accepting = m
        .states()
        .filter(|&q| closures[q].iter().any(|p| m.is_accepting(*p)));
    Automaton::new(
        m.alphabet().clone(),
        m.labels().to_vec(),
        transitions,
        m.initial(),
        accepting,
    )
    .expect("ε-elimination preserves well-formedness")
}

fn subset_label(s: &BTreeSet<StateId>) -> String {
    let ids: Vec<String> = s.iter().map(|q| q.to_string()).collect();
    format!("{{{}}}", ids.join(","))
}

/// Subset construction over the subsets reachable from `{initial}`.
///
/// The empty subset is kept as an explicit sink whenever it is reached, so
/// the result is total.
pub fn determinize(m: &Nfa) -> Dfa {
    let start = BTreeSet::from([m.initial()]);
    let mut ids: HashMap<BTreeSet<StateId>, StateId> = HashMap::from([(start.clone(), 0)]);
    let mut subsets = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    let mut transitions = BTreeSet::new();
    let symbols: Vec<_> = m.alphabet().symbols().collect();
    while let Some(s) = queue.pop_front() {
        let from = ids[&s];
        for &a in &symbols {
            let target = m.move_on(&s, a);
            let to = match ids.get(&target) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    ids.insert(target.clone(), id);
                    subsets.push(target.clone());
                    queue.push_back(target);
                    id
                }
            };
            transitions.insert(Transition::new(from, a, to));
        }
    }
    let accepting = subsets
        .iter()
        .enumerate()
        .filter(|(_, s)| s.iter().any(|q| m.is_accepting(*q)))
        .map(|(i, _)| i);
    let nfa = Automaton::new(
        m.alphabet().clone(),
        subsets.iter().map(subset_label).collect(),
        transitions,
        0,
        accepting,
    )
    .expect("subset construction yields a well-formed automaton");
    Dfa::from_nfa(nfa).expect("subset construction yields a total deterministic relation")
}
