use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Compile regular expressions to finite automata and compare constructions.
///
/// Expression syntax: symbols are single letters or digits, `\e` is the empty
/// word, `\0` the empty language, `+` union, juxtaposition concatenation,
/// `*` star, `&` intersection, `#` interleaving.
#[derive(Parser, Debug)]
#[command(name = "regex-sos", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an automaton for an expression and print it.
    Compile {
        expr: String,
        #[arg(long, value_enum, default_value_t = Construction::SosNfa)]
        construction: Construction,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
    /// Test whether a word is in the language. Exit 0 on accept, 1 on reject.
    Match {
        expr: String,
        /// The word; "" or \e is the empty word.
        word: String,
        /// Print every derivation of the word.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        common: Common,
    },
    /// List the words of the language up to a length, shortest first.
    Enumerate {
        expr: String,
        /// Longest word to list; overrides --max-len.
        #[arg(value_name = "MAX_LEN")]
        length: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Build every construction and check they accept the same words.
    ///
    /// Without an expression, checks a seeded random corpus instead.
    Compare {
        expr: Option<String>,
        /// Seed of the first random expression.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random expressions.
        #[arg(long, default_value_t = 100)]
        count: u64,
        /// Maximum size of random expressions.
        #[arg(long, default_value_t = 10)]
        size: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Print size, state counts and state bounds for an expression.
    Stats {
        expr: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Alphabet, e.g. "ab" or "a,b". Defaults to the symbols of the expression.
    #[arg(long)]
    pub alphabet: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Literal)]
    pub mode: ModeArg,
    /// Word length bound for enumerate and compare (at most 12).
    #[arg(long, default_value_t = 6)]
    pub max_len: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    SosNfa,
    Thompson,
    ThompsonElim,
    Dfa,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Literal,
    Normalized,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match commands::run(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            2
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
