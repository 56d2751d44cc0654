mod common;

use std::collections::BTreeSet;

use common::{ab, arb_regex, lang_upto, p};
use proptest::prelude::*;
use regex_sos::automata::{distinguishing_word, AnyAutomaton, Transition};
use regex_sos::lang::Membership;
use regex_sos::{
    build_nfa, determinize, eliminate_eps, eps_closure, equivalent_up_to, ext_state_bound,
    ext_state_bound_check, from_json, reachability_set, thompson, trace, Mode, Regex,
};

fn strings(labels: &[Regex]) -> Vec<String> {
    labels.iter().map(|r| r.to_string()).collect()
}

#[test]
fn running_example_sos_nfa() {
    let r = p("(abb+a)*");
    let b = build_nfa(&r, &ab(), Mode::Literal).unwrap();
    assert_eq!(b.nfa.num_states(), 4);
    let names = strings(&b.state_labels);
    let id = |s: &str| names.iter().position(|n| n == s).unwrap();
    let (start, bb, b1, e) = (
        id("(abb+a)*"),
        id("\\ebb(abb+a)*"),
        id("\\eb(abb+a)*"),
        id("\\e(abb+a)*"),
    );
    assert_eq!(b.nfa.accepting(), &BTreeSet::from([start, e]));
    let expected: BTreeSet<Transition<char>> = [
        (start, 'a', bb),
        (start, 'a', e),
        (bb, 'b', b1),
        (b1, 'b', e),
        (e, 'a', bb),
        (e, 'a', e),
    ]
    .into_iter()
    .map(|(f, a, t)| Transition::new(f, a, t))
    .collect();
    assert_eq!(b.nfa.transitions(), &expected);
    assert!(b.nfa.accepts(&['a', 'b', 'b', 'a']));
    assert!(!b.nfa.accepts(&['a', 'b']));
}

#[test]
fn running_example_pipelines_agree() {
    let r = p("(abb+a)*");
    let sos = build_nfa(&r, &ab(), Mode::Literal).unwrap().nfa;
    let t = thompson(&r, &ab()).unwrap();
    let elim = eliminate_eps(&t);
    let dfa = determinize(&sos);
    assert!(t.accepts(&['a', 'b', 'b', 'a']));
    assert!(elim.accepts(&['a', 'b', 'b', 'a']));
    assert!(equivalent_up_to(&sos, &elim, 6).unwrap());
    assert!(equivalent_up_to(&sos, &t, 6).unwrap());
    assert!(equivalent_up_to(&sos, &dfa, 6).unwrap());
    assert!(equivalent_up_to(&dfa, &determinize(dfa.as_nfa()), 6).unwrap());
}

#[test]
fn epsilon_machines() {
    let e = p("\\e");
    let elim = eliminate_eps(&thompson(&e, &ab()).unwrap());
    for w in ab().words_up_to(4) {
        assert_eq!(elim.accepts(w.as_slice()), w.is_empty());
    }
    assert!(!thompson(&p("\\0"), &ab()).unwrap().accepts(&[]));
}

#[test]
fn json_for_running_example() {
    let b = build_nfa(&p("(abb+a)*"), &ab(), Mode::Literal).unwrap();
    let text = b.nfa.to_json();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["states"].as_array().unwrap().len(), 4);
    assert_eq!(from_json(&text).unwrap(), AnyAutomaton::Nfa(b.nfa));
}

#[test]
fn extension_examples() {
    let sigma = regex_sos::Alphabet::new(['a', 'b', 'c', 'd']).unwrap();
    let r = p("ab#cd");
    let m = build_nfa(&r, &sigma, Mode::Literal).unwrap().nfa;
    let accepted: Vec<String> = sigma
        .words_up_to(4)
        .into_iter()
        .filter(|w| m.accepts(w.as_slice()))
        .map(|w| w.to_string())
        .collect();
    assert_eq!(accepted, ["abcd", "acbd", "acdb", "cabd", "cadb", "cdab"]);
    assert!(ext_state_bound_check(&p("(a+b)*&(ab)*")));
}

fn four_machines(r: &Regex) {
    let sigma = ab();
    let sos = build_nfa(r, &sigma, Mode::Literal).unwrap().nfa;
    let t = thompson(r, &sigma).unwrap();
    let elim = eliminate_eps(&t);
    let dfa = determinize(&sos);
    let truth = lang_upto(r, 6);
    for w in sigma.words_up_to(6) {
        let expected = truth.contains(&w.0);
        let s = w.as_slice();
        assert_eq!(sos.accepts(s), expected, "sos {r} on {w}");
        assert_eq!(t.accepts(s), expected, "thompson {r} on {w}");
        assert_eq!(elim.accepts(s), expected, "elim {r} on {w}");
        assert_eq!(dfa.accepts(s), expected, "dfa {r} on {w}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn state_count_bound(r in arb_regex(false)) {
        let rs = reachability_set(&r, Mode::Literal);
        prop_assert!(rs.len() <= r.size() + 1, "{}: {} states", r, rs.len());
    }

    #[test]
    fn builder_states_are_the_reachability_set(r in arb_regex(true)) {
        for mode in [Mode::Literal, Mode::Normalized] {
            let b = build_nfa(&r, &ab(), mode).unwrap();
            let labels: BTreeSet<Regex> = b.state_labels.iter().cloned().collect();
            prop_assert_eq!(labels.len(), b.state_labels.len());
            prop_assert_eq!(labels, reachability_set(&r, mode));
        }
    }

    #[test]
    fn all_constructions_agree(r in arb_regex(false)) {
        four_machines(&r);
    }

    #[test]
    fn modes_agree_and_normalized_is_smaller(r in arb_regex(true)) {
        let lit = build_nfa(&r, &ab(), Mode::Literal).unwrap();
        let norm = build_nfa(&r, &ab(), Mode::Normalized).unwrap();
        prop_assert!(norm.nfa.num_states() <= lit.nfa.num_states());
        prop_assert!(equivalent_up_to(&lit.nfa, &norm.nfa, 6).unwrap());
    }

    #[test]
    fn construction_is_deterministic(r in arb_regex(true)) {
        prop_assert_eq!(build_nfa(&r, &ab(), Mode::Literal).unwrap(), build_nfa(&r, &ab(), Mode::Literal).unwrap());
    }

    #[test]
    fn dfa_is_total(r in arb_regex(false)) {
        let d = determinize(&build_nfa(&r, &ab(), Mode::Literal).unwrap().nfa);
        for q in d.states() {
            for a in ['a', 'b'] {
                prop_assert_eq!(d.edges(q).iter().filter(|(l, _)| *l == a).count(), 1);
            }
        }
    }

    #[test]
    fn thompson_shape(r in arb_regex(false)) {
        let t = thompson(&r, &ab()).unwrap();
        prop_assert!(t.transitions().iter().all(|e| e.to != t.initial()));
        prop_assert_eq!(t.accepting().len(), 1);
        let f = *t.accepting().iter().next().unwrap();
        prop_assert!(t.edges(f).is_empty());
    }

    #[test]
    fn closure_is_monotone_and_idempotent(r in arb_regex(false), picks in proptest::collection::vec(0usize..64, 0..4)) {
        let t = thompson(&r, &ab()).unwrap();
        let s: BTreeSet<usize> = picks.into_iter().map(|i| i % t.num_states()).collect();
        let c = eps_closure(&t, &s);
        prop_assert!(s.is_subset(&c));
        prop_assert_eq!(eps_closure(&t, &c), c);
    }

    #[test]
    fn json_round_trips(r in arb_regex(false)) {
        let t = thompson(&r, &ab()).unwrap();
        let any = AnyAutomaton::NfaEps(t);
        prop_assert_eq!(from_json(&any.to_json()).unwrap(), any);
        let d = AnyAutomaton::Dfa(determinize(&build_nfa(&r, &ab(), Mode::Normalized).unwrap().nfa));
        prop_assert_eq!(from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn trace_decides_membership(r in arb_regex(true)) {
        let mut m = Membership::new(&r);
        for w in ab().words_up_to(4) {
            let accepted = trace(&r, w.as_slice(), Mode::Literal).iter().any(|t| t.accepting);
            prop_assert_eq!(accepted, m.contains(w.as_slice()));
        }
    }

    #[test]
    fn extended_construction_preserves_language(r in arb_regex(true)) {
        prop_assert!(ext_state_bound_check(&r), "{}: bound {}", r, ext_state_bound(&r));
        let m = build_nfa(&r, &ab(), Mode::Literal).unwrap().nfa;
        let truth = lang_upto(&r, 5);
        for w in ab().words_up_to(5) {
            prop_assert_eq!(m.accepts(w.as_slice()), truth.contains(&w.0), "{} on {}", r, w);
        }
    }
}

#[test]
fn distinguishing_word_is_shortest() {
    let a = build_nfa(&p("a*"), &ab(), Mode::Literal).unwrap().nfa;
    let b = build_nfa(&p("a*+ab"), &ab(), Mode::Literal).unwrap().nfa;
    assert_eq!(distinguishing_word(&a, &b, 4).unwrap().unwrap().to_string(), "ab");
}
