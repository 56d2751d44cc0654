//! Expression trees, alphabets and words.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// A single input symbol.
pub type Symbol = char;

/// Characters with a meaning in the concrete syntax. None of them may be a symbol.
pub const METACHARACTERS: &[char] = &['+', '*', '&', '#', '(', ')', '\\'];

/// Returns true if `c` can appear as a symbol in an expression.
pub fn is_symbol_char(c: char) -> bool {
    c.is_alphanumeric() && !METACHARACTERS.contains(&c)
}

/// A finite, non-empty, ordered set of symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: BTreeSet<Symbol>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = Symbol>>(symbols: I) -> Result<Self, Error> {
        let symbols: BTreeSet<Symbol> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if let Some(&bad) = symbols.iter().find(|c| !is_symbol_char(**c)) {
            return Err(Error::InvalidSymbol(bad));
        }
        Ok(Alphabet { symbols })
    }

    /// Parses an alphabet written as `ab`, `a,b` or `a b`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        Alphabet::new(text.chars().filter(|c| *c != ',' && !c.is_whitespace()))
    }

    pub fn contains(&self, a: Symbol) -> bool {
        self.symbols.contains(&a)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.symbols.iter().copied()
    }

    /// All words over this alphabet of length at most `max_len`, shortest first
    /// and lexicographic within a length.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let syms: Vec<Symbol> = self.symbols().collect();
        let mut out = vec![Word::epsilon()];
        let mut layer = vec![Word::epsilon()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * syms.len());
            for w in &layer {
                for &a in &syms {
                    let mut v = w.0.clone();
                    v.push(a);
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.symbols.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// A finite sequence of symbols. The empty word is ε.
///
/// Words order shortest first, then lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn epsilon() -> Self {
        Word(Vec::new())
    }

    /// Reads a word from text. Both `""` and `\e` denote ε.
    pub fn parse(text: &str) -> Self {
        if text == "\\e" {
            Word::epsilon()
        } else {
            Word(text.chars().collect())
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A regular expression, extended with intersection and interleaving.
///
/// Equality is structural. The builder uses it as state identity, so two
/// expressions denoting the same language are still different states.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regex {
    /// ∅, the empty language.
    EmptySet,
    /// ε, the language holding only the empty word.
    Epsilon,
    Sym(Symbol),
    Alt(Arc<Regex>, Arc<Regex>),
    Cat(Arc<Regex>, Arc<Regex>),
    Star(Arc<Regex>),
    /// Intersection (synchronous product).
    And(Arc<Regex>, Arc<Regex>),
    /// Interleaving (shuffle).
    Shuffle(Arc<Regex>, Arc<Regex>),
}

impl Regex {
    pub fn sym(a: Symbol) -> Self {
        Regex::Sym(a)
    }

    pub fn alt(l: Regex, r: Regex) -> Self {
        Regex::Alt(Arc::new(l), Arc::new(r))
    }

    pub fn cat(l: Regex, r: Regex) -> Self {
        Regex::Cat(Arc::new(l), Arc::new(r))
    }

    pub fn star(r: Regex) -> Self {
        Regex::Star(Arc::new(r))
    }

    pub fn and(l: Regex, r: Regex) -> Self {
        Regex::And(Arc::new(l), Arc::new(r))
    }

    pub fn shuffle(l: Regex, r: Regex) -> Self {
        Regex::Shuffle(Arc::new(l), Arc::new(r))
    }

    /// Number of operators and leaves in the tree.
    pub fn size(&self) -> usize {
        match self {
            Regex::EmptySet | Regex::Epsilon | Regex::Sym(_) => 1,
            Regex::Star(r) => r.size() + 1,
            Regex::Alt(l, r) | Regex::Cat(l, r) | Regex::And(l, r) | Regex::Shuffle(l, r) => {
                l.size() + r.size() + 1
            }
        }
    }

    /// True if the tree uses `&` or `#`.
    pub fn has_extensions(&self) -> bool {
        match self {
            Regex::EmptySet | Regex::Epsilon | Regex::Sym(_) => false,
            Regex::Star(r) => r.has_extensions(),
            Regex::Alt(l, r) | Regex::Cat(l, r) => l.has_extensions() || r.has_extensions(),
            Regex::And(..) | Regex::Shuffle(..) => true,
        }
    }

    /// The set of symbols occurring in the tree.
    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut BTreeSet<Symbol>) {
        match self {
            Regex::EmptySet | Regex::Epsilon => {}
            Regex::Sym(a) => {
                out.insert(*a);
            }
            Regex::Star(r) => r.collect_symbols(out),
            Regex::Alt(l, r) | Regex::Cat(l, r) | Regex::And(l, r) | Regex::Shuffle(l, r) => {
                l.collect_symbols(out);
                r.collect_symbols(out);
            }
        }
    }

    /// Checks that every symbol leaf belongs to `alphabet`.
    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<(), Error> {
        match self.symbols().into_iter().find(|a| !alphabet.contains(*a)) {
            Some(a) => Err(Error::SymbolNotInAlphabet(a)),
            None => Ok(()),
        }
    }

    // Binding strength, loosest first: + # & juxtaposition * atom.
    fn precedence(&self) -> u8 {
        match self {
            Regex::Alt(..) => 0,
            Regex::Shuffle(..) => 1,
            Regex::And(..) => 2,
            Regex::Cat(..) => 3,
            Regex::Star(_) => 4,
            Regex::EmptySet | Regex::Epsilon | Regex::Sym(_) => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let paren = self.precedence() < min_prec;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Regex::EmptySet => f.write_str("\\0")?,
            Regex::Epsilon => f.write_str("\\e")?,
            Regex::Sym(a) => write!(f, "{a}")?,
            Regex::Star(r) => {
                r.write_at(f, 4)?;
                f.write_str("*")?;
            }
            Regex::Alt(l, r) | Regex::Cat(l, r) | Regex::And(l, r) | Regex::Shuffle(l, r) => {
                let p = self.precedence();
                l.write_at(f, p)?;
                match self {
                    Regex::Alt(..) => f.write_str("+")?,
                    Regex::Shuffle(..) => f.write_str("#")?,
                    Regex::And(..) => f.write_str("&")?,
                    _ => {}
                }
                // left-associative: an equal-precedence right child needs parentheses
                r.write_at(f, p + 1)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Renders with the fewest parentheses that still parse back to the same tree.
impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
