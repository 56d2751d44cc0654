//! JSON and Graphviz DOT renderings.
//!
//! JSON layout:
//!
//! ```json
//! { "type": "nfa" | "dfa" | "nfa-eps",
//!   "alphabet": ["a", "b"],
//!   "states": [{"id": 0, "label": "..."}],
//!   "initial": 0,
//!   "accepting": [0],
//!   "transitions": [{"from": 0, "symbol": "a", "to": 1}] }
//! ```
//!
//! An empty `symbol` string encodes ε and is only allowed in `nfa-eps`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Acceptor, Automaton, Dfa, Label, Nfa, NfaEps, Transition};
use crate::error::{Error, Result};
use crate::regex::{Alphabet, Symbol};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Nfa,
    Dfa,
    NfaEps,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Nfa => "nfa",
            Kind::Dfa => "dfa",
            Kind::NfaEps => "nfa-eps",
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonAutomaton {
    #[serde(rename = "type")]
    kind: String,
    alphabet: Vec<String>,
    states: Vec<JsonState>,
    initial: usize,
    accepting: Vec<usize>,
    transitions: Vec<JsonTransition>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonState {
    id: usize,
    label: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTransition {
    from: usize,
    symbol: String,
    to: usize,
}

/// Any of the three automaton kinds, as loaded from JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyAutomaton {
    Nfa(Nfa),
    Dfa(Dfa),
    NfaEps(NfaEps),
}

impl AnyAutomaton {
    pub fn kind(&self) -> Kind {
        match self {
            AnyAutomaton::Nfa(_) => Kind::Nfa,
            AnyAutomaton::Dfa(_) => Kind::Dfa,
            AnyAutomaton::NfaEps(_) => Kind::NfaEps,
        }
    }

    pub fn num_states(&self) -> usize {
        match self {
            AnyAutomaton::Nfa(m) => m.num_states(),
            AnyAutomaton::Dfa(m) => m.num_states(),
            AnyAutomaton::NfaEps(m) => m.num_states(),
        }
    }

    pub fn num_transitions(&self) -> usize {
        match self {
            AnyAutomaton::Nfa(m) => m.num_transitions(),
            AnyAutomaton::Dfa(m) => m.num_transitions(),
            AnyAutomaton::NfaEps(m) => m.num_transitions(),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyAutomaton::Nfa(m) => json_of(m, Kind::Nfa),
            AnyAutomaton::Dfa(m) => json_of(m.as_nfa(), Kind::Dfa),
            AnyAutomaton::NfaEps(m) => json_of(m, Kind::NfaEps),
        }
    }

    pub fn to_dot(&self) -> String {
        match self {
            AnyAutomaton::Nfa(m) => m.to_dot(),
            AnyAutomaton::Dfa(m) => m.to_dot(),
            AnyAutomaton::NfaEps(m) => m.to_dot(),
        }
    }

    /// Plain-text transition table.
    pub fn to_table(&self) -> String {
        match self {
            AnyAutomaton::Nfa(m) => m.to_table(),
            AnyAutomaton::Dfa(m) => m.to_table(),
            AnyAutomaton::NfaEps(m) => m.to_table(),
        }
    }
}

impl Acceptor for AnyAutomaton {
    fn alphabet(&self) -> &Alphabet {
        match self {
            AnyAutomaton::Nfa(m) => m.alphabet(),
            AnyAutomaton::Dfa(m) => m.alphabet(),
            AnyAutomaton::NfaEps(m) => m.alphabet(),
        }
    }

    fn accepts(&self, w: &[Symbol]) -> bool {
        match self {
            AnyAutomaton::Nfa(m) => m.accepts(w),
            AnyAutomaton::Dfa(m) => m.accepts(w),
            AnyAutomaton::NfaEps(m) => m.accepts(w),
        }
    }
}

fn symbol_text<L: Label>(l: L) -> String {
    l.symbol().map(String::from).unwrap_or_default()
}

fn json_of<L: Label>(m: &Automaton<L>, kind: Kind) -> String {
    let doc = JsonAutomaton {
        kind: kind.name().to_string(),
        alphabet: m.alphabet().symbols().map(String::from).collect(),
        states: m
            .states()
            .map(|id| JsonState {
                id,
                label: m.label(id).to_string(),
            })
            .collect(),
        initial: m.initial(),
        accepting: m.accepting().iter().copied().collect(),
        transitions: m
            .transitions()
            .iter()
            .map(|t| JsonTransition {
                from: t.from,
                symbol: symbol_text(t.label),
                to: t.to,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("automaton serializes")
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn single_char(s: &str) -> Option<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}

fn load<L: Label>(doc: &JsonAutomaton) -> Result<Automaton<L>> {
    let alphabet = doc
        .alphabet
        .iter()
        .map(|s| single_char(s).ok_or_else(|| schema(format!("alphabet entry {s:?} is not one character"))))
        .collect::<Result<Vec<_>>>()?;
    let alphabet = Alphabet::new(alphabet)?;
    let n = doc.states.len();
    let mut labels = vec![None; n];
    for st in &doc.states {
        match labels.get_mut(st.id) {
            Some(slot @ None) => *slot = Some(st.label.clone()),
            Some(Some(_)) => return Err(schema(format!("duplicate state id {}", st.id))),
            None => return Err(schema(format!("state ids must be 0..{n}, found {}", st.id))),
        }
    }
    let labels = labels.into_iter().map(|l| l.expect("every id filled")).collect();
    let transitions = doc
        .transitions
        .iter()
        .map(|t| {
            let sym = if t.symbol.is_empty() {
                None
            } else {
                Some(
                    single_char(&t.symbol)
                        .ok_or_else(|| schema(format!("symbol {:?} is not one character", t.symbol)))?,
                )
            };
            let label =
                L::from_symbol(sym).ok_or_else(|| schema("ε transition in an automaton without ε moves"))?;
            Ok(Transition::new(t.from, label, t.to))
        })
        .collect::<Result<Vec<_>>>()?;
    Automaton::new(
        alphabet,
        labels,
        transitions,
        doc.initial,
        doc.accepting.iter().copied(),
    )
}

/// Loads an automaton from the JSON layout described in this module.
pub fn from_json(text: &str) -> Result<AnyAutomaton> {
    let doc: JsonAutomaton = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
    match doc.kind.as_str() {
        "nfa" => Ok(AnyAutomaton::Nfa(load(&doc)?)),
        "nfa-eps" => Ok(AnyAutomaton::NfaEps(load(&doc)?)),
        "dfa" => Ok(AnyAutomaton::Dfa(Dfa::from_nfa(load(&doc)?)?)),
        other => Err(schema(format!("unknown automaton type {other:?}"))),
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl<L: Label> Automaton<L> {
    /// Graphviz rendering: accepting states are double circles and a phantom
    /// point node points at the initial state.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph automaton {\n  rankdir=LR;\n  start [shape=point];\n");
        for q in self.states() {
            let shape = if self.is_accepting(q) {
                "doublecircle"
            } else {
                "circle"
            };
            let _ = writeln!(
                s,
                "  q{q} [label=\"{}\", shape={shape}];",
                dot_escape(self.label(q))
            );
        }
        let _ = writeln!(s, "  start -> q{};", self.initial());
        for t in self.transitions() {
            let label = t.label.symbol().map_or("ε".to_string(), String::from);
            let _ = writeln!(s, "  q{} -> q{} [label=\"{}\"];", t.from, t.to, label);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        for q in self.states() {
            let marker = match (q == self.initial(), self.is_accepting(q)) {
                (true, true) => "->*",
                (true, false) => "-> ",
                (false, true) => "  *",
                (false, false) => "   ",
            };
            let _ = writeln!(s, "{marker} {q}: {}", self.label(q));
            for &(l, to) in self.edges(q) {
                let sym = l.symbol().map_or("ε".to_string(), String::from);
                let _ = writeln!(s, "      --{sym}--> {to}");
            }
        }
        s
    }
}

impl Nfa {
    pub fn to_json(&self) -> String {
        json_of(self, Kind::Nfa)
    }
}

impl NfaEps {
    pub fn to_json(&self) -> String {
        json_of(self, Kind::NfaEps)
    }
}

impl Dfa {
    pub fn to_json(&self) -> String {
        json_of(self.as_nfa(), Kind::Dfa)
    }
}
