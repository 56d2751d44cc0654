use std::io::Write;

use regex_sos::automata::{distinguishing_word, Acceptor, AnyAutomaton, MAX_COMPARE_LEN};
use regex_sos::lang::{enumerate_language_capped, Membership};
use regex_sos::{
    build_nfa, determinize, eliminate_eps, ext_state_bound, nullable, parse, parse_unchecked, random_regex,
    reachability_set, thompson, trace, Alphabet, Error, Mode, Regex, Symbol, Word,
};

use crate::{Command, Common, Construction, Format, ModeArg};

type Result<T> = std::result::Result<T, Box<dyn std::error::Error>>;

/// Alphabet used when an expression has no symbols and none was given.
const FALLBACK_ALPHABET: [Symbol; 1] = ['a'];

pub fn run(command: Command, out: &mut impl Write) -> Result<u8> {
    match command {
        Command::Compile {
            expr,
            construction,
            format,
            common,
        } => compile(&expr, construction, format, &common, out),
        Command::Match {
            expr,
            word,
            trace,
            common,
        } => matches(&expr, &word, trace, &common, out),
        Command::Enumerate { expr, length, common } => {
            enumerate(&expr, length.unwrap_or(common.max_len), &common, out)
        }
        Command::Compare {
            expr: Some(expr),
            common,
            ..
        } => compare_one(&expr, &common, out),
        Command::Compare {
            expr: None,
            seed,
            count,
            size,
            common,
        } => compare_corpus(seed, count, size, &common, out),
        Command::Stats { expr, common } => stats(&expr, &common, out),
    }
}

fn mode(common: &Common) -> Mode {
    match common.mode {
        ModeArg::Literal => Mode::Literal,
        ModeArg::Normalized => Mode::Normalized,
    }
}

fn check_len(max_len: usize) -> Result<usize> {
    if max_len > MAX_COMPARE_LEN {
        return Err(Error::CapExceeded {
            requested: max_len,
            cap: MAX_COMPARE_LEN,
        }
        .into());
    }
    Ok(max_len)
}

fn load(expr: &str, common: &Common) -> Result<(Regex, Alphabet)> {
    match &common.alphabet {
        Some(text) => {
            let sigma = Alphabet::parse(text)?;
            Ok((parse(expr, &sigma)?, sigma))
        }
        None => {
            let r = parse_unchecked(expr)?;
            let symbols = r.symbols();
            let sigma = if symbols.is_empty() {
                Alphabet::new(FALLBACK_ALPHABET)?
            } else {
                Alphabet::new(symbols)?
            };
            Ok((r, sigma))
        }
    }
}

fn construct(r: &Regex, sigma: &Alphabet, construction: Construction, mode: Mode) -> Result<AnyAutomaton> {
    Ok(match construction {
        Construction::SosNfa => AnyAutomaton::Nfa(build_nfa(r, sigma, mode)?.nfa),
        Construction::Thompson => AnyAutomaton::NfaEps(thompson(r, sigma)?),
        Construction::ThompsonElim => AnyAutomaton::Nfa(eliminate_eps(&thompson(r, sigma)?)),
        Construction::Dfa => AnyAutomaton::Dfa(determinize(&build_nfa(r, sigma, mode)?.nfa)),
    })
}

fn compile(
    expr: &str,
    construction: Construction,
    format: Format,
    common: &Common,
    out: &mut impl Write,
) -> Result<u8> {
    let (r, sigma) = load(expr, common)?;
    let m = construct(&r, &sigma, construction, mode(common))?;
    let text = match format {
        Format::Json => m.to_json() + "\n",
        Format::Dot => m.to_dot(),
        Format::Table => m.to_table(),
    };
    out.write_all(text.as_bytes())?;
    Ok(0)
}

fn matches(expr: &str, word: &str, show_trace: bool, common: &Common, out: &mut impl Write) -> Result<u8> {
    let (r, sigma) = load(expr, common)?;
    let w = Word::parse(word);
    if let Some(&bad) = w.as_slice().iter().find(|a| !sigma.contains(**a)) {
        return Err(Error::SymbolNotInAlphabet(bad).into());
    }
    let m = build_nfa(&r, &sigma, mode(common))?;
    let accepted = m.nfa.accepts(w.as_slice());
    if show_trace {
        let paths = trace(&r, w.as_slice(), mode(common));
        if paths.is_empty() {
            writeln!(out, "no derivation of {w}")?;
        }
        for path in paths {
            let mut line = path.expressions[0].to_string();
            for (a, e) in w.as_slice().iter().zip(&path.expressions[1..]) {
                line.push_str(&format!(" -{a}-> {e}"));
            }
            let end = if path.accepting {
                "nullable"
            } else {
                "not nullable"
            };
            writeln!(out, "{line}  [{end}]")?;
        }
    }
    writeln!(out, "{}", if accepted { "accept" } else { "reject" })?;
    Ok(if accepted { 0 } else { 1 })
}

fn enumerate(expr: &str, max_len: usize, common: &Common, out: &mut impl Write) -> Result<u8> {
    let (r, sigma) = load(expr, common)?;
    for w in enumerate_language_capped(&r, &sigma, max_len, MAX_COMPARE_LEN)? {
        writeln!(out, "{w}")?;
    }
    Ok(0)
}

struct Row {
    name: &'static str,
    states: Option<(usize, usize)>,
    agrees: Option<bool>,
}

// Every construction that applies to `r`, each checked against the oracle.
fn compare_rows(r: &Regex, sigma: &Alphabet, max_len: usize) -> Result<Vec<Row>> {
    let oracle = Oracle(r.clone(), sigma.clone());
    let mut machines: Vec<(&'static str, Option<AnyAutomaton>)> = vec![
        (
            "sos-nfa",
            Some(construct(r, sigma, Construction::SosNfa, Mode::Literal)?),
        ),
        (
            "sos-nfa-normalized",
            Some(construct(r, sigma, Construction::SosNfa, Mode::Normalized)?),
        ),
    ];
    let extension_free = !r.has_extensions();
    for (name, c) in [
        ("thompson", Construction::Thompson),
        ("thompson-elim", Construction::ThompsonElim),
    ] {
        machines.push((
            name,
            extension_free
                .then(|| construct(r, sigma, c, Mode::Literal))
                .transpose()?,
        ));
    }
    machines.push((
        "dfa",
        Some(construct(r, sigma, Construction::Dfa, Mode::Literal)?),
    ));
    machines
        .into_iter()
        .map(|(name, m)| {
            Ok(match m {
                Some(m) => Row {
                    name,
                    states: Some((m.num_states(), m.num_transitions())),
                    agrees: Some(distinguishing_word(&m, &oracle, max_len)?.is_none()),
                },
                None => Row {
                    name,
                    states: None,
                    agrees: None,
                },
            })
        })
        .collect()
}

struct Oracle(Regex, Alphabet);

impl Acceptor for Oracle {
    fn alphabet(&self) -> &Alphabet {
        &self.1
    }

    fn accepts(&self, w: &[Symbol]) -> bool {
        Membership::new(&self.0).contains(w)
    }
}

fn compare_one(expr: &str, common: &Common, out: &mut impl Write) -> Result<u8> {
    let max_len = check_len(common.max_len)?;
    let (r, sigma) = load(expr, common)?;
    let rows = compare_rows(&r, &sigma, max_len)?;
    writeln!(
        out,
        "{:<20} {:>7} {:>12}  agrees",
        "construction", "states", "transitions"
    )?;
    for row in &rows {
        match (row.states, row.agrees) {
            (Some((s, t)), Some(ok)) => writeln!(
                out,
                "{:<20} {s:>7} {t:>12}  {}",
                row.name,
                if ok { "yes" } else { "NO" }
            )?,
            _ => writeln!(out, "{:<20} {:>7} {:>12}  n/a", row.name, "-", "-")?,
        }
    }
    let all = rows.iter().all(|r| r.agrees != Some(false));
    if all {
        writeln!(out, "all constructions agree on words up to length {max_len}")?;
    } else {
        writeln!(out, "constructions DISAGREE on words up to length {max_len}")?;
    }
    Ok(if all { 0 } else { 1 })
}

fn compare_corpus(seed: u64, count: u64, size: usize, common: &Common, out: &mut impl Write) -> Result<u8> {
    let max_len = check_len(common.max_len)?;
    if size == 0 {
        return Err("--size must be at least 1".into());
    }
    let sigma = match &common.alphabet {
        Some(text) => Alphabet::parse(text)?,
        None => Alphabet::new(['a', 'b'])?,
    };
    let mut failures = 0;
    for s in seed..seed.saturating_add(count) {
        let r = random_regex(s, size, &sigma, false);
        let rows = compare_rows(&r, &sigma, max_len)?;
        if rows.iter().any(|row| row.agrees == Some(false)) {
            failures += 1;
            writeln!(out, "seed {s}: {r}: constructions disagree")?;
        }
    }
    writeln!(out, "{count} expressions, {failures} disagreements")?;
    Ok(if failures == 0 { 0 } else { 1 })
}

fn stats(expr: &str, common: &Common, out: &mut impl Write) -> Result<u8> {
    let (r, sigma) = load(expr, common)?;
    let mut rows: Vec<(&str, String)> = vec![
        ("expression", r.to_string()),
        ("alphabet", sigma.to_string()),
        ("size", r.size().to_string()),
        ("nullable", nullable(&r).to_string()),
        (
            "states (literal)",
            reachability_set(&r, Mode::Literal).len().to_string(),
        ),
        (
            "states (normalized)",
            reachability_set(&r, Mode::Normalized).len().to_string(),
        ),
    ];
    if r.has_extensions() {
        rows.push(("state bound (product)", ext_state_bound(&r).to_string()));
    } else {
        rows.push(("state bound (size+1)", (r.size() + 1).to_string()));
        rows.push(("thompson states", thompson(&r, &sigma)?.num_states().to_string()));
    }
    let dfa = determinize(&build_nfa(&r, &sigma, mode(common))?.nfa);
    rows.push(("dfa states", dfa.num_states().to_string()));
    for (k, v) in rows {
        writeln!(out, "{:<22} {v}", format!("{k}:"))?;
    }
    Ok(0)
}
