//! Oracles shared by the integration tests. None of them call into `sos`,
//! `builder` or `lang`, so they check those modules independently.

#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use regex_sos::{Alphabet, Regex, Symbol, Word};

pub fn ab() -> Alphabet {
    Alphabet::new(['a', 'b']).unwrap()
}

pub fn p(s: &str) -> Regex {
    regex_sos::parse_unchecked(s).unwrap()
}

/// L(r) truncated to words of length at most `n`, computed by finite set
/// algebra on the denotation of each operator.
pub fn lang_upto(r: &Regex, n: usize) -> BTreeSet<Vec<Symbol>> {
    match r {
        Regex::EmptySet => BTreeSet::new(),
        Regex::Epsilon => BTreeSet::from([vec![]]),
        Regex::Sym(a) => {
            if n >= 1 {
                BTreeSet::from([vec![*a]])
            } else {
                BTreeSet::new()
            }
        }
        Regex::Alt(l, r) => lang_upto(l, n).union(&lang_upto(r, n)).cloned().collect(),
        Regex::And(l, r) => lang_upto(l, n).intersection(&lang_upto(r, n)).cloned().collect(),
        Regex::Cat(l, r) => concat(&lang_upto(l, n), &lang_upto(r, n), n),
        Regex::Star(inner) => {
            let base = lang_upto(inner, n);
            let mut acc = BTreeSet::from([vec![]]);
            loop {
                let next: BTreeSet<_> = acc.union(&concat(&base, &acc, n)).cloned().collect();
                if next == acc {
                    return acc;
                }
                acc = next;
            }
        }
        Regex::Shuffle(l, r) => {
            let (ls, rs) = (lang_upto(l, n), lang_upto(r, n));
            let mut out = BTreeSet::new();
            for u in &ls {
                for v in &rs {
                    if u.len() + v.len() <= n {
                        interleavings(u, v, &mut vec![], &mut out);
                    }
                }
            }
            out
        }
    }
}

fn concat(x: &BTreeSet<Vec<Symbol>>, y: &BTreeSet<Vec<Symbol>>, n: usize) -> BTreeSet<Vec<Symbol>> {
    let mut out = BTreeSet::new();
    for u in x {
        for v in y {
            if u.len() + v.len() <= n {
                let mut w = u.clone();
                w.extend(v);
                out.insert(w);
            }
        }
    }
    out
}

fn interleavings(u: &[Symbol], v: &[Symbol], prefix: &mut Vec<Symbol>, out: &mut BTreeSet<Vec<Symbol>>) {
    if u.is_empty() && v.is_empty() {
        out.insert(prefix.clone());
        return;
    }
    if let Some((&c, rest)) = u.split_first() {
        prefix.push(c);
        interleavings(rest, v, prefix, out);
        prefix.pop();
    }
    if let Some((&c, rest)) = v.split_first() {
        prefix.push(c);
        interleavings(u, rest, prefix, out);
        prefix.pop();
    }
}

/// Nullability read off the inference rules, one clause per rule.
fn checked(r: &Regex) -> bool {
    match r {
        Regex::Epsilon | Regex::Star(_) => true,
        Regex::Alt(l, r) => checked(l) || checked(r),
        Regex::Cat(l, r) | Regex::And(l, r) | Regex::Shuffle(l, r) => checked(l) && checked(r),
        Regex::EmptySet | Regex::Sym(_) => false,
    }
}

/// `{ r' : r →a r' }` by applying the transition rules for one symbol at a time.
pub fn derives(r: &Regex, a: Symbol) -> BTreeSet<Regex> {
    let mut out = BTreeSet::new();
    match r {
        // a →a ε
        Regex::Sym(b) if *b == a => {
            out.insert(Regex::Epsilon);
        }
        // r1 →a r1'  gives  r1+r2 →a r1';  likewise for r2
        Regex::Alt(l, r) => {
            out.extend(derives(l, a));
            out.extend(derives(r, a));
        }
        // r1 →a r1'  gives  r1 r2 →a r1' r2;   r1√ and r2 →a r2'  gives  r1 r2 →a r2'
        Regex::Cat(l, r) => {
            for l2 in derives(l, a) {
                out.insert(Regex::Cat(l2.into(), r.clone()));
            }
            if checked(l) {
                out.extend(derives(r, a));
            }
        }
        // r' →a r''  gives  r'* →a r'' r'*
        Regex::Star(inner) => {
            for i2 in derives(inner, a) {
                out.insert(Regex::Cat(i2.into(), std::sync::Arc::new(r.clone())));
            }
        }
        Regex::And(l, r) => {
            let rs = derives(r, a);
            for l2 in derives(l, a) {
                for r2 in &rs {
                    out.insert(Regex::And(l2.clone().into(), r2.clone().into()));
                }
            }
        }
        Regex::Shuffle(l, r) => {
            for l2 in derives(l, a) {
                out.insert(Regex::Shuffle(l2.into(), r.clone()));
            }
            for r2 in derives(r, a) {
                out.insert(Regex::Shuffle(l.clone(), r2.into()));
            }
        }
        _ => {}
    }
    out
}

pub fn words(sigma: &Alphabet, max_len: usize) -> Vec<Word> {
    sigma.words_up_to(max_len)
}

/// Proptest strategy for expressions over {a, b}.
pub fn arb_regex(extensions: bool) -> BoxedStrategy<Regex> {
    let leaf = prop_oneof![
        1 => Just(Regex::EmptySet),
        1 => Just(Regex::Epsilon),
        2 => Just(Regex::sym('a')),
        2 => Just(Regex::sym('b')),
    ];
    leaf.prop_recursive(5, 14, 2, move |inner| {
        let basic = prop_oneof![
            inner.clone().prop_map(Regex::star),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Regex::alt(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Regex::cat(l, r)),
        ];
        if extensions {
            prop_oneof![
                3 => basic,
                1 => (inner.clone(), inner.clone()).prop_map(|(l, r)| Regex::and(l, r)),
                1 => (inner.clone(), inner).prop_map(|(l, r)| Regex::shuffle(l, r)),
            ]
            .boxed()
        } else {
            basic.boxed()
        }
    })
    .boxed()
}
