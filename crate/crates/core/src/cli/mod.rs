//! The `catcom` command line: argument parsing, input loading, dispatch
//! and the exit-code contract.
//!
//! Exit codes: 0 pass, 1 fail (a witness is printed), 2 unknown (the
//! exhausted bound is printed), 3 input error.

mod report;
mod verbs;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::clone::{parse_algebra, FiniteAlgebra};
use crate::operad::{parse_operad, parse_operad_presentation, OperadPresentation, SymOperadTruncation};
use crate::structcat::{parse_category, parse_premonoidal, parse_sesqui, FiniteCategory, PremonoidalData, SesquiData};
use crate::syntax::{tokenize, ParseError, Tok};
use crate::tensor::{parse_graded, parse_monoid, FiniteMonoid, GradedAlgebra};
use crate::term::{parse_presentation, Presentation};

pub use report::{one_line, parse_structured, Bounds, Format, Outcome, Report, INPUT_ERROR};

#[derive(Debug, Parser)]
#[command(
    name = "catcom",
    version,
    about = "Bounded commutativity checks for theories, monoids, operads and categorical structures"
)]
pub struct Args {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Options {
    /// Arity bound N for clone and operad truncations.
    #[arg(long, global = true, value_name = "N", default_value_t = 4)]
    pub arity: usize,
    /// Carrier size K for model enumeration.
    #[arg(long, global = true, value_name = "K", default_value_t = 3)]
    pub size: usize,
    /// Term-size bound D of the proof search.
    #[arg(long, global = true, value_name = "D", default_value_t = 5, value_parser = positive)]
    pub depth: usize,
    /// Largest model B tried when refuting.
    #[arg(long = "model-bound", global = true, value_name = "B", default_value_t = 4, value_parser = positive)]
    pub model_bound: usize,
    /// Word length L for funny-tensor enumeration.
    #[arg(long = "word-len", global = true, value_name = "L", default_value_t = 8)]
    pub word_len: usize,
    /// The pair of operations (or arrows) to check.
    #[arg(long, global = true, value_name = "F,G", value_delimiter = ',')]
    pub ops: Vec<String>,
    /// Write the report to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Recorded in the report; only `gen` draws from it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Left element of the graded check.
    #[arg(long, global = true, value_name = "ELEM")]
    pub left: Option<String>,
    /// Right element of the graded check.
    #[arg(long, global = true, value_name = "ELEM")]
    pub right: Option<String>,
    /// Number of generated cases for `gen`.
    #[arg(long, global = true, default_value_t = 1000)]
    pub count: usize,
    /// Directory where `gen` writes its cases.
    #[arg(long, global = true, value_name = "DIR")]
    pub corpus: Option<PathBuf>,
}

impl Options {
    pub fn bounds(&self) -> Bounds {
        Bounds {
            arity: self.arity,
            size: self.size,
            depth: self.depth,
            model_bound: self.model_bound,
            word_len: self.word_len,
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Is every pair of generating operations commutative? (theory, algebra or operad file)
    CheckTheory { file: PathBuf },
    /// Does the pair `--ops f,g` commute? (theory, algebra or operad file)
    Commute { file: PathBuf },
    /// Commuting tensor of two theories, or the universal property for two monoids.
    Tensor { first: PathBuf, second: PathBuf },
    /// Count the models of a theory or operad presentation up to `--size`.
    Models { file: PathBuf },
    /// Models of the tensor against commuting pairs of models, up to `--size`.
    VerifyTensor { first: PathBuf, second: PathBuf },
    /// The clone of an algebra (or the theory of an operad) up to `--arity`.
    Clone { file: PathBuf },
    /// Centralizer clone of an algebra, or the centre of a monoid.
    Centralizer { file: PathBuf },
    /// Validate an operad truncation or count algebras of an operad presentation.
    Operad { file: PathBuf },
    /// Boardman-Vogt tensor of two operad presentations.
    Bv { first: PathBuf, second: PathBuf },
    /// Validate a category, or compare the funny tensor of two with their product.
    Cat { file: PathBuf, second: Option<PathBuf> },
    /// Sesquicategory laws and the interchange law.
    Sesqui { file: PathBuf },
    /// Premonoidal laws and central arrows.
    Premonoidal { file: PathBuf },
    /// Centre inclusion as a Freyd category, or the Freyd cospan of `--ops x,y`.
    Freyd { file: PathBuf },
    /// Graded q-commutation of `--left` and `--right`.
    Graded { file: PathBuf },
    /// Randomized soundness stress of the equality procedure.
    Gen,
}

impl Command {
    pub fn verb(&self) -> &'static str {
        match self {
            Command::CheckTheory { .. } => "check-theory",
            Command::Commute { .. } => "commute",
            Command::Tensor { .. } => "tensor",
            Command::Models { .. } => "models",
            Command::VerifyTensor { .. } => "verify-tensor",
            Command::Clone { .. } => "clone",
            Command::Centralizer { .. } => "centralizer",
            Command::Operad { .. } => "operad",
            Command::Bv { .. } => "bv",
            Command::Cat { .. } => "cat",
            Command::Sesqui { .. } => "sesqui",
            Command::Premonoidal { .. } => "premonoidal",
            Command::Freyd { .. } => "freyd",
            Command::Graded { .. } => "graded",
            Command::Gen => "gen",
        }
    }

    pub fn inputs(&self) -> Vec<&Path> {
        match self {
            Command::CheckTheory { file }
            | Command::Commute { file }
            | Command::Models { file }
            | Command::Clone { file }
            | Command::Centralizer { file }
            | Command::Operad { file }
            | Command::Sesqui { file }
            | Command::Premonoidal { file }
            | Command::Freyd { file }
            | Command::Graded { file } => vec![file],
            Command::Tensor { first, second }
            | Command::VerifyTensor { first, second }
            | Command::Bv { first, second } => {
                vec![first, second]
            }
            Command::Cat { file, second } => std::iter::once(file.as_path()).chain(second.as_deref()).collect(),
            Command::Gen => vec![],
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}:{column}: {message}")]
    Parse { path: String, line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn parse(path: &str, e: ParseError) -> Self {
        CliError::Parse { path: path.to_string(), line: e.line, column: e.column, message: e.message }
    }

    pub(crate) fn invalid(path: &str, message: impl ToString) -> Self {
        CliError::Invalid { path: path.to_string(), message: message.to_string() }
    }
}

/// A parsed input file.
#[derive(Debug, Clone)]
pub enum Input {
    Theory(Presentation),
    Algebra(FiniteAlgebra),
    Monoid(FiniteMonoid),
    Graded(GradedAlgebra),
    Operad(SymOperadTruncation),
    OperadPresentation(OperadPresentation),
    Category(FiniteCategory),
    Sesqui(SesquiData),
    Premonoidal(PremonoidalData),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Theory(_) => "theory",
            Input::Algebra(_) => "algebra",
            Input::Monoid(_) => "monoid",
            Input::Graded(_) => "graded",
            Input::Operad(_) => "operad",
            Input::OperadPresentation(_) => "operad_presentation",
            Input::Category(_) => "category",
            Input::Sesqui(_) => "sesqui",
            Input::Premonoidal(_) => "premonoidal",
        }
    }
}

const HEADERS: &str = "theory, algebra, monoid, graded, operad, operad_presentation, category, sesqui or premonoidal";

/// Parses `text`, choosing the grammar from its leading keyword.
pub fn parse_input(text: &str) -> Result<Input, ParseError> {
    let toks = tokenize(text)?;
    let Some((Tok::Ident(head), _)) = toks.first() else {
        let pos = toks.first().map(|t| t.1).unwrap_or_default();
        let pos = if pos.line == 0 { crate::syntax::Pos { line: 1, column: 1 } } else { pos };
        return Err(ParseError::new(pos, format!("expected a file header: {HEADERS}")));
    };
    Ok(match head.as_str() {
        "theory" => Input::Theory(parse_presentation(text)?),
        "algebra" => Input::Algebra(parse_algebra(text)?),
        "monoid" => Input::Monoid(parse_monoid(text)?),
        "graded" => Input::Graded(parse_graded(text)?),
        "operad" => Input::Operad(parse_operad(text)?),
        "operad_presentation" => Input::OperadPresentation(parse_operad_presentation(text)?),
        "category" => Input::Category(parse_category(text)?),
        "sesqui" => Input::Sesqui(parse_sesqui(text)?),
        "premonoidal" => Input::Premonoidal(parse_premonoidal(text)?),
        other => return Err(ParseError::new(toks[0].1, format!("unknown file kind `{other}`; expected {HEADERS}"))),
    })
}

#[derive(Debug, Clone)]
pub struct Loaded {
    pub path: String,
    pub input: Input,
}

pub fn load(path: &Path) -> Result<Loaded, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    let input = parse_input(&text).map_err(|e| CliError::parse(&shown, e))?;
    Ok(Loaded { path: shown, input })
}

/// Runs one invocation, writing the report to `stdout` (or `--out`) and
/// diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => INPUT_ERROR,
            };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let start = Instant::now();
    match dispatch(&args) {
        Ok(mut report) => {
            report.elapsed = Some(start.elapsed());
            let text = report.render(args.options.format);
            if let Some(path) = &args.options.out {
                if let Err(e) = std::fs::write(path, &text) {
                    let _ = writeln!(stderr, "catcom: {}: {e}", path.display());
                    return INPUT_ERROR;
                }
            } else {
                let _ = stdout.write_all(text.as_bytes());
            }
            report.outcome.exit_code()
        }
        Err(e) => {
            let _ = writeln!(stdout, "error: {e}\nverdict: error");
            let _ = writeln!(stderr, "catcom: {e}");
            INPUT_ERROR
        }
    }
}

/// Loads the inputs and runs the verb.
pub fn dispatch(args: &Args) -> Result<Report, CliError> {
    let opts = &args.options;
    let cmd = &args.command;
    let inputs: Vec<Loaded> = cmd.inputs().into_iter().map(load).collect::<Result<_, _>>()?;
    let names = inputs.iter().map(|l| l.path.clone()).collect();
    let mut report = Report::new(cmd.verb(), names, opts.bounds(), opts.seed);
    match cmd {
        Command::CheckTheory { .. } => verbs::check_theory(&inputs[0], opts, &mut report)?,
        Command::Commute { .. } => verbs::commute(&inputs[0], opts, &mut report)?,
        Command::Tensor { .. } => verbs::tensor(&inputs[0], &inputs[1], opts, &mut report)?,
        Command::Models { .. } => verbs::models(&inputs[0], opts, &mut report)?,
        Command::VerifyTensor { .. } => verbs::verify_tensor(&inputs[0], &inputs[1], opts, &mut report)?,
        Command::Clone { .. } => verbs::clone(&inputs[0], opts, &mut report)?,
        Command::Centralizer { .. } => verbs::centralizer(&inputs[0], opts, &mut report)?,
        Command::Operad { .. } => verbs::operad(&inputs[0], opts, &mut report)?,
        Command::Bv { .. } => verbs::bv(&inputs[0], &inputs[1], opts, &mut report)?,
        Command::Cat { .. } => verbs::cat(&inputs, opts, &mut report)?,
        Command::Sesqui { .. } => verbs::sesqui(&inputs[0], &mut report)?,
        Command::Premonoidal { .. } => verbs::premonoidal(&inputs[0], &mut report)?,
        Command::Freyd { .. } => verbs::freyd(&inputs[0], opts, &mut report)?,
        Command::Graded { .. } => verbs::graded(&inputs[0], opts, &mut report)?,
        Command::Gen => verbs::gen(opts, &mut report)?,
    }
    Ok(report)
}

/// Entry point of the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests;
