//! Command-line surface of the workbench.
//!
//! Exit codes: 0 success or accept, 1 verification reject (or goal not
//! derivable), 2 usage, I/O, syntax or budget errors.

pub mod repl;

use std::io::{BufRead, Write};
use std::path::PathBuf;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde_json::json;

use formwork_core::bridge;
use formwork_core::combinator::{self, parse_term, Term};
use formwork_core::derivation::{parse_any_derivation, AnyDerivation, Derivation, Kind};
use formwork_core::string_rewrite::{
    self, increment_system, instantiate_axiom, parse_system, to_binary_word, SearchError,
    StartCheck, StringSystem,
};
use formwork_core::{Verdict, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "formwork",
    version,
    about = "Run and check derivations in small formal systems"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Budget for both derivation search and normalization.
    #[arg(long, global = true, value_name = "N")]
    pub max_steps: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derive bin(n)↑=bin(n+1) in the increment system.
    Increment { n: u64 },
    /// Search for a shortest derivation between two words.
    Derive {
        /// `builtin` or a system definition file.
        system: String,
        start: String,
        goal: String,
        /// Maximum number of distinct words to explore.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Check a transcript.
    Verify {
        /// `builtin` or a definition file for word transcripts, `sk` for term transcripts.
        source: String,
        transcript: PathBuf,
        /// Do not require the first word to be an axiom instance.
        #[arg(long)]
        any_start: bool,
    },
    /// Reduce a combinator term in normal order.
    Normalize {
        term: String,
        #[arg(long)]
        max: Option<usize>,
        /// Print the whole derivation.
        #[arg(long)]
        trace: bool,
    },
    /// Bracket-abstract a variable out of a term.
    Abstract { var: String, term: String },
    /// Compile a lambda expression (`\x. body`) to S and K.
    Compile { lambda: String },
    /// Evaluate `<m> + <n>` or `succ <n>` by S/K reduction.
    Arith { expr: String },
    /// Step through a derivation interactively.
    Repl {
        kind: Kind,
        start: String,
        /// Word system: `builtin` or a definition file.
        #[arg(long, default_value = "builtin")]
        system: String,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            code: EXIT_FAILURE,
            error: e.into(),
        }
    }
}

pub struct Io<'a> {
    pub input: &'a mut dyn BufRead,
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

/// Runs one command and returns its exit code.
pub fn run(cli: &Cli, io: &mut Io<'_>) -> i32 {
    match dispatch(cli, io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {:#}", f.error);
            f.code
        }
    }
}

fn budget(local: Option<usize>, global: Option<usize>, default: usize) -> usize {
    local.or(global).unwrap_or(default)
}

pub fn load_word_system(source: &str) -> anyhow::Result<StringSystem> {
    match source {
        "builtin" | "increment" => Ok(increment_system()),
        path => {
            let text =
                std::fs::read_to_string(path).with_context(|| format!("cannot read {path}"))?;
            parse_system(&text).with_context(|| format!("in {path}"))
        }
    }
}

fn parse_word(text: &str) -> anyhow::Result<Word> {
    Word::parse(text).map_err(|e| anyhow!("bad word '{text}': {e}"))
}

fn parse_term_arg(text: &str) -> anyhow::Result<Term> {
    parse_term(text).map_err(|e| anyhow!("bad term '{text}': {e}"))
}

fn emit_derivation(cli: &Cli, out: &mut dyn Write, d: AnyDerivation) -> anyhow::Result<()> {
    if cli.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&d.to_json())?)?;
    } else {
        write!(out, "{}", d.to_transcript())?;
    }
    Ok(())
}

fn emit_value(cli: &Cli, out: &mut dyn Write, key: &str, text: String) -> anyhow::Result<()> {
    if cli.json {
        writeln!(out, "{}", json!({ key: text }))?;
    } else {
        writeln!(out, "{text}")?;
    }
    Ok(())
}

fn search(
    sys: &StringSystem,
    start: &Word,
    goal: &Word,
    max: usize,
) -> Result<Derivation<Word>, Failure> {
    string_rewrite::derive(sys, start, goal, max).map_err(|e| Failure {
        code: match e {
            SearchError::NotFound { .. } => EXIT_REJECT,
            _ => EXIT_FAILURE,
        },
        error: e.into(),
    })
}

fn dispatch(cli: &Cli, io: &mut Io<'_>) -> Result<i32, Failure> {
    match &cli.command {
        Command::Increment { n } => {
            let sys = increment_system();
            let n1 = n
                .checked_add(1)
                .ok_or_else(|| anyhow!("{n} + 1 overflows"))?;
            let up = parse_word("↑")?;
            let x = to_binary_word(*n).concat(&up);
            let sub = formwork_core::derivation::Substitution::new().with("x", x.clone());
            let start = instantiate_axiom(&sys.axioms()[0], &sub)?;
            let goal = x.concat(&parse_word("=")?).concat(&to_binary_word(n1));
            let max = budget(
                None,
                cli.max_steps,
                string_rewrite::DEFAULT_MAX_ARRANGEMENTS,
            );
            let d = search(&sys, &start, &goal, max)?;
            emit_derivation(cli, io.out, AnyDerivation::Word(d))?;
            Ok(EXIT_OK)
        }
        Command::Derive {
            system,
            start,
            goal,
            max,
        } => {
            let sys = load_word_system(system)?;
            let max = budget(
                *max,
                cli.max_steps,
                string_rewrite::DEFAULT_MAX_ARRANGEMENTS,
            );
            let d = search(&sys, &parse_word(start)?, &parse_word(goal)?, max)?;
            emit_derivation(cli, io.out, AnyDerivation::Word(d))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            source,
            transcript,
            any_start,
        } => {
            let text = std::fs::read_to_string(transcript)
                .with_context(|| format!("cannot read {}", transcript.display()))?;
            let d = parse_any_derivation(&text)
                .with_context(|| format!("in {}", transcript.display()))?;
            let verdict = match (&d, source.as_str()) {
                (AnyDerivation::Term(d), "sk") => combinator::verify_derivation(d),
                (AnyDerivation::Term(_), other) => {
                    return Err(
                        anyhow!("term transcripts are checked against 'sk', not '{other}'").into(),
                    )
                }
                (AnyDerivation::Word(_), "sk") => {
                    return Err(anyhow!("word transcripts need a word system, not 'sk'").into())
                }
                (AnyDerivation::Word(d), source) => {
                    let sys = load_word_system(source)?;
                    let start = if *any_start {
                        StartCheck::Any
                    } else {
                        StartCheck::Axiom
                    };
                    string_rewrite::verify(&sys, d, start)
                }
            };
            report_verdict(cli, io, &verdict)
        }
        Command::Normalize { term, max, trace } => {
            let t = parse_term_arg(term)?;
            let max = budget(*max, cli.max_steps, combinator::DEFAULT_MAX_STEPS);
            let n = combinator::normalize(&t, max)?;
            if *trace {
                emit_derivation(cli, io.out, AnyDerivation::Term(n.derivation))?;
            } else if cli.json {
                writeln!(
                    io.out,
                    "{}",
                    json!({ "normal_form": n.term.to_string(), "steps": n.derivation.len() })
                )?;
            } else {
                writeln!(io.out, "{}", n.term)?;
            }
            Ok(EXIT_OK)
        }
        Command::Abstract { var, term } => {
            if !combinator::is_var_name(var) {
                return Err(anyhow!("'{var}' is not a variable name (lowercase letters)").into());
            }
            let t = parse_term_arg(term)?;
            emit_value(
                cli,
                io.out,
                "term",
                bridge::abstract_var(var, &t).to_string(),
            )?;
            Ok(EXIT_OK)
        }
        Command::Compile { lambda } => {
            let e = bridge::parse_lambda(lambda)
                .map_err(|e| anyhow!("bad lambda expression '{lambda}': {e}"))?;
            emit_value(cli, io.out, "term", bridge::compile_lambda(&e).to_string())?;
            Ok(EXIT_OK)
        }
        Command::Arith { expr } => {
            let e = bridge::parse_arith(expr)?;
            let max = budget(None, cli.max_steps, combinator::DEFAULT_MAX_STEPS);
            let value = bridge::eval_arith(e, max)?;
            if cli.json {
                writeln!(io.out, "{}", json!({ "value": value }))?;
            } else {
                writeln!(io.out, "{value}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Repl {
            kind,
            start,
            system,
        } => {
            match kind {
                Kind::Word => {
                    let sys = load_word_system(system)?;
                    let start = parse_word(start)?;
                    if let Some(s) = sys.foreign_symbol(&start) {
                        return Err(anyhow!("'{s}' is not in the alphabet").into());
                    }
                    let stepper = repl::WordStepper { system: &sys };
                    repl::run_session(&stepper, start, cli.json, io.input, io.out)?;
                }
                Kind::Term => {
                    let start = parse_term_arg(start)?;
                    repl::run_session(&repl::TermStepper, start, cli.json, io.input, io.out)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn report_verdict(cli: &Cli, io: &mut Io<'_>, verdict: &Verdict) -> Result<i32, Failure> {
    match verdict {
        Verdict::Accept => {
            if cli.json {
                writeln!(io.out, "{}", json!({ "verdict": "accept" }))?;
            } else {
                writeln!(io.out, "accept")?;
            }
            Ok(EXIT_OK)
        }
        Verdict::Reject(r) => {
            if cli.json {
                writeln!(
                    io.out,
                    "{}",
                    json!({ "verdict": "reject", "step": r.step, "reason": r.reason.to_string() })
                )?;
            }
            writeln!(io.err, "{r}")?;
            Ok(EXIT_REJECT)
        }
    }
}
