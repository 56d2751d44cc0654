use super::{Automaton, NfaEps, StateId, Transition};
use crate::error::{Error, Result};
use crate::regex::{Alphabet, Regex, Symbol};

/// Compositional NFA-ε construction.
///
/// Every fragment has an initial state with no incoming edges and a single
/// accepting state with no outgoing edges:
///
/// * `∅`: two unconnected states.
/// * `ε`, `a`: one edge from initial to final.
/// * `r1 + r2`: fresh initial and final, ε edges into both sub-machines and
///   out of both sub-finals.
/// * `r1 r2`: the final state of `r1` gets an ε edge to the initial of `r2`.
/// * `r*`: fresh `i'`, `f'` with `i' -ε-> i`, `i' -ε-> f'`, `f -ε-> i`, `f -ε-> f'`.
///
/// Intersection and interleaving have no fragment and are rejected.
pub fn thompson(r: &Regex, alphabet: &Alphabet) -> Result<NfaEps> {
    r.check_alphabet(alphabet)?;
    let mut b = Fragments::default();
    let (initial, last) = b.build(r)?;
    let labels = (0..b.count).map(|i| format!("q{i}")).collect();
    Automaton::new(alphabet.clone(), labels, b.edges, initial, [last])
}

#[derive(Default)]
struct Fragments {
    count: usize,
    edges: Vec<Transition<Option<Symbol>>>,
}

impl Fragments {
    fn fresh(&mut self) -> StateId {
        self.count += 1;
        self.count - 1
    }

    fn eps(&mut self, from: StateId, to: StateId) {
        self.edges.push(Transition::new(from, None, to));
    }

    fn build(&mut self, r: &Regex) -> Result<(StateId, StateId)> {
        Ok(match r {
            Regex::EmptySet => (self.fresh(), self.fresh()),
            Regex::Epsilon => {
                let (i, f) = (self.fresh(), self.fresh());
                self.eps(i, f);
                (i, f)
            }
            Regex::Sym(a) => {
                let (i, f) = (self.fresh(), self.fresh());
                self.edges.push(Transition::new(i, Some(*a), f));
                (i, f)
            }
            Regex::Alt(l, r) => {
                let (i, f) = (self.fresh(), self.fresh());
                let (li, lf) = self.build(l)?;
                let (ri, rf) = self.build(r)?;
                self.eps(i, li);
                self.eps(i, ri);
                self.eps(lf, f);
                self.eps(rf, f);
                (i, f)
            }
            Regex::Cat(l, r) => {
                let (li, lf) = self.build(l)?;
                let (ri, rf) = self.build(r)?;
                self.eps(lf, ri);
                (li, rf)
            }
            Regex::Star(inner) => {
                let (i, f) = (self.fresh(), self.fresh());
                let (ii, inf) = self.build(inner)?;
                self.eps(i, ii);
                self.eps(i, f);
                self.eps(inf, ii);
                self.eps(inf, f);
                (i, f)
            }
            Regex::And(..) => return Err(Error::UnsupportedOperator('&')),
            Regex::Shuffle(..) => return Err(Error::UnsupportedOperator('#')),
        })
    }
}
