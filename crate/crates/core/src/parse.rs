//! Recursive-descent parser for the concrete expression syntax.
//!
//! ```text
//! alt   := shf ('+' shf)*
//! shf   := inter ('#' inter)*
//! inter := cat ('&' cat)*
//! cat   := star+
//! star  := atom '*'*
//! atom  := SYMBOL | '\e' | '\0' | '(' alt ')'
//! ```
//!
//! Binary operators are left-associative. Whitespace between tokens is ignored.

use crate::error::{Error, Result};
use crate::regex::{is_symbol_char, Alphabet, Regex};

/// Parses `text` and checks every symbol against `alphabet`.
pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Regex> {
    let r = parse_unchecked(text)?;
    r.check_alphabet(alphabet)?;
    Ok(r)
}

/// Parses `text` without an alphabet; any alphanumeric character is a symbol.
pub fn parse_unchecked(text: &str) -> Result<Regex> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        len: text.len(),
    };
    let r = p.alt()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(r),
        Some((at, c)) => Err(syntax(at, format!("unexpected '{c}'"))),
    }
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |(i, _)| *i)
    }

    fn eat(&mut self, want: char) -> bool {
        match self.peek() {
            Some((_, c)) if c == want => {
                self.pos += 1;
                true
            }
            _ => false,
        }
    }

    fn binary(
        &mut self,
        op: char,
        next: fn(&mut Self) -> Result<Regex>,
        build: fn(Regex, Regex) -> Regex,
    ) -> Result<Regex> {
        let mut acc = next(self)?;
        while self.eat(op) {
            let rhs = next(self)?;
            acc = build(acc, rhs);
        }
        Ok(acc)
    }

    fn alt(&mut self) -> Result<Regex> {
        self.binary('+', Self::shuffle, Regex::alt)
    }

    fn shuffle(&mut self) -> Result<Regex> {
        self.binary('#', Self::inter, Regex::shuffle)
    }

    fn inter(&mut self) -> Result<Regex> {
        self.binary('&', Self::cat, Regex::and)
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some((_, c)) if c == '(' || c == '\\' || is_symbol_char(c))
    }

    fn cat(&mut self) -> Result<Regex> {
        if !self.starts_atom() {
            let at = self.offset();
            return Err(match self.peek() {
                Some((_, c)) => syntax(at, format!("expected an expression, found '{c}'")),
                None => syntax(at, "expected an expression, found end of input"),
            });
        }
        let mut acc = self.star()?;
        while self.starts_atom() {
            let rhs = self.star()?;
            acc = Regex::cat(acc, rhs);
        }
        Ok(acc)
    }

    fn star(&mut self) -> Result<Regex> {
        let mut r = self.atom()?;
        while self.eat('*') {
            r = Regex::star(r);
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex> {
        let Some((at, c)) = self.peek() else {
            return Err(syntax(self.len, "unexpected end of input"));
        };
        self.pos += 1;
        match c {
            '(' => {
                let r = self.alt()?;
                if !self.eat(')') {
                    return Err(syntax(self.offset(), "expected ')'"));
                }
                Ok(r)
            }
            '\\' => match self.chars.get(self.pos) {
                Some((_, 'e')) => {
                    self.pos += 1;
                    Ok(Regex::Epsilon)
                }
                Some((_, '0')) => {
                    self.pos += 1;
                    Ok(Regex::EmptySet)
                }
                _ => Err(syntax(at, "unknown escape; expected \\e or \\0")),
            },
            c if is_symbol_char(c) => Ok(Regex::Sym(c)),
            c => Err(syntax(at, format!("unexpected '{c}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(c: char) -> Regex {
        Regex::sym(c)
    }

    fn ab() -> Alphabet {
        Alphabet::new(['a', 'b']).unwrap()
    }

    #[test]
    fn running_example_tree() {
        let r = parse("(abb+a)*", &ab()).unwrap();
        let expected = Regex::star(Regex::alt(
            Regex::cat(Regex::cat(sym('a'), sym('b')), sym('b')),
            sym('a'),
        ));
        assert_eq!(r, expected);
    }

    #[test]
    fn escapes() {
        assert_eq!(parse("\\e", &ab()).unwrap(), Regex::Epsilon);
        assert_eq!(parse("\\0", &ab()).unwrap(), Regex::EmptySet);
        assert_eq!(
            parse("\\ea*", &ab()).unwrap(),
            Regex::cat(Regex::Epsilon, Regex::star(sym('a')))
        );
    }

    #[test]
    fn intersection_binds_looser_than_concatenation() {
        assert_eq!(
            parse("a&(a+b)", &ab()).unwrap(),
            Regex::and(sym('a'), Regex::alt(sym('a'), sym('b')))
        );
        assert_eq!(
            parse("ab&a", &ab()).unwrap(),
            Regex::and(Regex::cat(sym('a'), sym('b')), sym('a'))
        );
    }

    #[test]
    fn precedence_ladder() {
        // + < # < & < juxtaposition < *
        let r = parse_unchecked("a+b#c&de*").unwrap();
        let expected = Regex::alt(
            sym('a'),
            Regex::shuffle(
                sym('b'),
                Regex::and(sym('c'), Regex::cat(sym('d'), Regex::star(sym('e')))),
            ),
        );
        assert_eq!(r, expected);
    }

    #[test]
    fn left_associative() {
        assert_eq!(
            parse_unchecked("a+b+c").unwrap(),
            Regex::alt(Regex::alt(sym('a'), sym('b')), sym('c'))
        );
        assert_eq!(
            parse_unchecked("a#b#c").unwrap(),
            Regex::shuffle(Regex::shuffle(sym('a'), sym('b')), sym('c'))
        );
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            parse_unchecked(" ( a b ) * ").unwrap(),
            parse_unchecked("(ab)*").unwrap()
        );
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let cases = [
            ("", 0),
            ("a+", 2),
            ("(ab", 3),
            ("a)", 1),
            ("*a", 0),
            ("\\x", 0),
            ("a$", 1),
        ];
        for (text, pos) in cases {
            match parse_unchecked(text) {
                Err(Error::Syntax { position, .. }) => assert_eq!(position, pos, "{text:?}"),
                other => panic!("{text:?}: expected syntax error, got {other:?}"),
            }
        }
    }

    #[test]
    fn symbol_outside_alphabet() {
        assert_eq!(parse("a+c", &ab()), Err(Error::SymbolNotInAlphabet('c')));
    }

    #[test]
    fn format_parse_roundtrip_on_examples() {
        for text in [
            "(abb+a)*",
            "\\e",
            "\\0",
            "a&(a+b)",
            "ab#cd",
            "\\e(\\eb)",
            "a**",
            "(a+b)(a+b)",
        ] {
            let r = parse_unchecked(text).unwrap();
            assert_eq!(r.to_string(), text);
            assert_eq!(parse_unchecked(&r.to_string()).unwrap(), r);
        }
    }
}
