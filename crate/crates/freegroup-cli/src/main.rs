//! Command-line front end: evaluate free-group expressions, reduce and
//! abelianize words, generate seeded random words.

mod expr;

use std::collections::HashMap;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use freegroup::{
    interchange, matrix, notation, rfree, AbelianWord, Alphabet, RandomSpec, WordVector,
};

const EXPRESSION_HELP: &str = "\
Expressions work elementwise over word vectors, recycling the shorter
operand when its length divides the longer. Operators, tightest first:

  -x        inverse (unary)
  x^y       conjugation y^-1 + x + y, left associative
  x*3       integer repetition; the integer may sit on either side and
            may be an inclusive range, e.g. x*(0:3)
  x+y, x-y  juxtaposition and juxtaposition with the inverse
  [x,y]     commutator -x-y+x+y (self-delimiting)

Word literals use canonical notation over the active alphabet
(`a^2.b^-3`, identity `0`); names bound by --let shadow bare literals.";

#[derive(Parser)]
#[command(
    name = "freegroup",
    version,
    about = "Words in the free group: reduce, combine, print",
    after_help = EXPRESSION_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    output: OutputOpts,
}

#[derive(Args)]
struct OutputOpts {
    /// Alphabet file overriding the default a..z: one name per line.
    #[arg(long, global = true, value_name = "FILE")]
    symbols: Option<PathBuf>,

    /// Error on generators past the alphabet instead of printing NA.
    #[arg(long, global = true)]
    strict: bool,

    /// Output format for word vectors.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BindingOpts {
    /// Bind NAME to words (semicolon-separated canonical notation).
    #[arg(long = "let", value_name = "NAME=WORDS")]
    bindings: Vec<String>,

    /// Bind NAME to a random vector described by key=value pairs
    /// (count, syllables, max_symbol, max_abs_exponent, seed).
    #[arg(long = "let-random", value_name = "NAME=SPEC")]
    random_bindings: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print the resulting vector.
    Eval {
        expression: String,
        #[command(flatten)]
        bindings: BindingOpts,
    },
    /// Evaluate an expression and print true/false per element.
    CheckIdentity {
        expression: String,
        #[command(flatten)]
        bindings: BindingOpts,
        /// Exit nonzero unless every element is the identity.
        #[arg(long)]
        assert: bool,
    },
    /// Read words from stdin and print their reduced forms.
    Reduce {
        /// Input notation: canonical strings, compact letter strings, or
        /// two comma-separated matrix rows per word.
        #[arg(long, value_enum, default_value_t = InputForm::Canonical)]
        from: InputForm,
    },
    /// Read canonical words from stdin and print their abelianizations.
    Abelianize,
    /// Generate seeded random words.
    Random {
        #[arg(long, default_value_t = 7)]
        count: usize,
        /// Raw syllables per word before reduction.
        #[arg(long, default_value_t = 5)]
        syllables: usize,
        #[arg(long, default_value_t = 3)]
        max_symbol: u64,
        /// Largest exponent magnitude.
        #[arg(long = "max-exponent", default_value_t = 4)]
        max_abs_exponent: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the first COUNT generators, or their cumulative products.
    Generators {
        count: u64,
        /// Print a, a.b, a.b.c, ... instead of a, b, c, ...
        #[arg(long)]
        cumulative: bool,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Interchange,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum InputForm {
    Canonical,
    Compact,
    Matrix,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    let alphabet = load_alphabet(cli.output.symbols.as_deref())?;

    match &cli.command {
        Command::Eval {
            expression,
            bindings,
        } => {
            let env = build_bindings(bindings, &alphabet)?;
            let words = expr::eval_expression(expression, &env, &alphabet)?;
            print_words(&words, &alphabet, &cli.output)?;
        }
        Command::CheckIdentity {
            expression,
            bindings,
            assert,
        } => {
            let env = build_bindings(bindings, &alphabet)?;
            let words = expr::eval_expression(expression, &env, &alphabet)?;
            let flags = words.is_identity_vec();
            let mut out = io::stdout().lock();
            for flag in &flags {
                writeln!(out, "{flag}")?;
            }
            if *assert && !flags.iter().all(|&f| f) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Reduce { from } => {
            let input = read_stdin()?;
            let words = match from {
                InputForm::Canonical => parse_lines(&input, |line| {
                    notation::parse_canonical(line, &alphabet).map_err(Into::into)
                })?,
                InputForm::Compact => {
                    if cli.output.symbols.is_some() {
                        bail!("compact input is defined over the default alphabet; --symbols does not apply");
                    }
                    parse_lines(&input, |line| {
                        notation::parse_compact(line).map_err(Into::into)
                    })?
                }
                InputForm::Matrix => parse_matrix_stream(&input)?,
            };
            print_words(&words, &alphabet, &cli.output)?;
        }
        Command::Abelianize => {
            let input = read_stdin()?;
            let words = parse_lines(&input, |line| {
                notation::parse_canonical(line, &alphabet).map_err(Into::into)
            })?;
            let abelians = words
                .iter()
                .map(|w| w.abelianize())
                .collect::<freegroup::Result<Vec<_>>>()?;
            print_abelians(&abelians, &alphabet, &cli.output)?;
        }
        Command::Random {
            count,
            syllables,
            max_symbol,
            max_abs_exponent,
            seed,
        } => {
            let spec = RandomSpec {
                count: *count,
                syllables: *syllables,
                max_symbol: *max_symbol,
                max_abs_exponent: *max_abs_exponent,
                seed: *seed,
            };
            let words = rfree(&spec)?;
            print_words(&words, &alphabet, &cli.output)?;
        }
        Command::Generators { count, cumulative } => {
            let words = if *cumulative {
                WordVector::generator_prefixes(*count)?
            } else {
                WordVector::generators(1..=*count)?
            };
            print_words(&words, &alphabet, &cli.output)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_alphabet(path: Option<&std::path::Path>) -> Result<Alphabet> {
    let Some(path) = path else {
        return Ok(Alphabet::latin().clone());
    };
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading alphabet file `{}`", path.display()))?;
    let names: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .collect();
    for name in &names {
        if !expr::is_valid_name(name) {
            bail!("alphabet name {name:?} cannot be written in expressions");
        }
    }
    Alphabet::new(names).map_err(Into::into)
}

fn build_bindings(opts: &BindingOpts, alphabet: &Alphabet) -> Result<HashMap<String, WordVector>> {
    let mut env = HashMap::new();
    let mut bind = |name: &str, words: WordVector| -> Result<()> {
        if !expr::is_valid_name(name) {
            bail!("invalid binding name {name:?}");
        }
        if env.insert(name.to_owned(), words).is_some() {
            bail!("duplicate binding `{name}`");
        }
        Ok(())
    };
    for item in &opts.bindings {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| anyhow!("--let {item:?}: expected NAME=WORDS"))?;
        let words = value
            .split(';')
            .map(|text| notation::parse_canonical(text, alphabet))
            .collect::<freegroup::Result<Vec<_>>>()
            .with_context(|| format!("--let {name}"))?;
        bind(name, WordVector::new(words))?;
    }
    for item in &opts.random_bindings {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| anyhow!("--let-random {item:?}: expected NAME=SPEC"))?;
        let spec = RandomSpec::from_kv(value).with_context(|| format!("--let-random {name}"))?;
        bind(name, rfree(&spec)?)?;
    }
    Ok(env)
}

fn read_stdin() -> Result<String> {
    let mut input = String::new();
    io::stdin()
        .read_to_string(&mut input)
        .context("reading stdin")?;
    Ok(input)
}

/// One word per nonempty line.
fn parse_lines<F>(input: &str, parse: F) -> Result<WordVector>
where
    F: Fn(&str) -> Result<freegroup::Word>,
{
    let mut words = WordVector::default();
    for (i, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        words.push(parse(line).with_context(|| format!("line {}", i + 1))?);
    }
    Ok(words)
}

/// Two comma-separated rows per word: symbols on top, exponents below.
/// A blank row is an empty row, so a pair of blank lines is the identity.
fn parse_matrix_stream(input: &str) -> Result<WordVector> {
    let mut lines: Vec<&str> = input.lines().collect();
    while lines.last().is_some_and(|line| line.trim().is_empty()) {
        lines.pop();
    }
    if lines.len() % 2 != 0 {
        bail!(
            "matrix input needs two rows per word, got {} line(s)",
            lines.len()
        );
    }
    let mut words = WordVector::default();
    for (i, pair) in lines.chunks(2).enumerate() {
        let top = parse_int_row(pair[0]).with_context(|| format!("word {}, symbol row", i + 1))?;
        let bottom =
            parse_int_row(pair[1]).with_context(|| format!("word {}, exponent row", i + 1))?;
        let word =
            matrix::from_rows(&top, &bottom).with_context(|| format!("word {}", i + 1))?;
        words.push(word);
    }
    Ok(words)
}

fn parse_int_row(line: &str) -> Result<Vec<i64>> {
    let line = line.trim();
    if line.is_empty() {
        return Ok(Vec::new());
    }
    line.split(',')
        .map(|token| {
            let token = token.trim();
            token
                .parse::<i64>()
                .map_err(|_| anyhow!("invalid integer `{token}`"))
        })
        .collect()
}

fn print_words(words: &WordVector, alphabet: &Alphabet, opts: &OutputOpts) -> Result<()> {
    let mut out = io::stdout().lock();
    match opts.format {
        Format::Text => {
            for word in words {
                writeln!(out, "{}", notation::format_word(word, alphabet, opts.strict)?)?;
            }
        }
        Format::Interchange => writeln!(out, "{}", interchange::serialize(words))?,
    }
    Ok(())
}

fn print_abelians(words: &[AbelianWord], alphabet: &Alphabet, opts: &OutputOpts) -> Result<()> {
    let mut out = io::stdout().lock();
    match opts.format {
        Format::Text => {
            for word in words {
                writeln!(
                    out,
                    "{}",
                    notation::format_abelian(word, alphabet, opts.strict)?
                )?;
            }
        }
        Format::Interchange => writeln!(out, "{}", interchange::serialize_abelian(words))?,
    }
    Ok(())
}
