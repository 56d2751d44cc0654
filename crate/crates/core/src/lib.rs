//! Regular expressions to finite automata.
//!
//! The main construction treats expressions as processes: `nullable(r)`
//! says whether `r` can stop, and `r →a r'` says `r` can read `a` and
//! continue as `r'`. Exploring these steps from `r` yields an NFA with no ε
//! moves and at most `size(r) + 1` states ([`builder::build_nfa`]).
//!
//! For comparison the crate also has the classical route: Thompson's
//! NFA-ε construction, ε-elimination and subset construction
//! ([`automata`]), plus a brute-force membership oracle ([`lang`]) that all
//! constructions are checked against.
//!
//! ```
//! use regex_sos::{build_nfa, parse, Alphabet, Mode};
//!
//! let sigma = Alphabet::new(['a', 'b']).unwrap();
//! let r = parse("(abb+a)*", &sigma).unwrap();
//! let m = build_nfa(&r, &sigma, Mode::Literal).unwrap();
//! assert_eq!(m.nfa.num_states(), 4);
//! assert!(m.nfa.accepts(&['a', 'b', 'b', 'a']));
//! ```

pub mod automata;
pub mod builder;
pub mod error;
pub mod ext;
pub mod generate;
pub mod lang;
pub mod parse;
pub mod regex;
pub mod sos;

pub use automata::{
    determinize, eliminate_eps, eps_closure, equivalent_up_to, from_json, nfa_accepts, nfa_eps_accepts,
    thompson, Acceptor, AnyAutomaton, Dfa, Nfa, NfaEps,
};
pub use builder::{build_nfa, reachability_set, trace, BuildResult, DerivationPath};
pub use error::{Error, Result};
pub use ext::{ext_state_bound, ext_state_bound_check};
pub use generate::random_regex;
pub use lang::{enumerate_language, lang_member};
pub use parse::{parse, parse_unchecked};
pub use regex::{Alphabet, Regex, Symbol, Word};
pub use sos::{normalize_leading_eps, nullable, out, step, Mode, OutSet};
