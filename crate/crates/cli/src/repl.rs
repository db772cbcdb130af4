//! Line-oriented stepping session: show the arrangement and its redexes,
//! let the user pick one, undo, or write the transcript so far.

use std::io::{self, BufRead, Write};

use formwork_core::combinator::{self, Match, Term};
use formwork_core::derivation::{Arrangement, Derivation, StepJustification, Substitution};
use formwork_core::string_rewrite::{self, StartCheck, StringSystem};
use formwork_core::{Verdict, Word};

/// What a session needs from an engine.
pub trait Stepper {
    type Item: Arrangement + std::fmt::Display;

    /// Every applicable contraction, in the engine's redex order.
    fn options(&self, current: &Self::Item) -> Vec<(StepJustification<Self::Item>, Self::Item)>;

    fn verify(&self, d: &Derivation<Self::Item>) -> Verdict;
}

pub struct WordStepper<'a> {
    pub system: &'a StringSystem,
}

impl Stepper for WordStepper<'_> {
    type Item = Word;

    fn options(&self, current: &Word) -> Vec<(StepJustification<Word>, Word)> {
        string_rewrite::find_redexes(self.system, current)
            .into_iter()
            .map(|r| {
                let result = string_rewrite::apply_rule(current, r.rule, r.span)
                    .expect("redex was just found");
                let j = StepJustification {
                    rule: r.rule.id().to_string(),
                    position: r.span,
                    substitution: Substitution::new(),
                };
                (j, result)
            })
            .collect()
    }

    fn verify(&self, d: &Derivation<Word>) -> Verdict {
        string_rewrite::verify(self.system, d, StartCheck::Any)
    }
}

pub struct TermStepper;

impl Stepper for TermStepper {
    type Item = Term;

    fn options(&self, current: &Term) -> Vec<(StepJustification<Term>, Term)> {
        combinator::find_redexes(current)
            .into_iter()
            .map(|(rule, path)| {
                let matched: Match =
                    combinator::match_at(current, rule, &path).expect("redex was just found");
                let result = current
                    .replace_at(&path, matched.contractum())
                    .expect("path exists");
                let j = StepJustification {
                    rule: rule.to_string(),
                    position: path,
                    substitution: matched.substitution(),
                };
                (j, result)
            })
            .collect()
    }

    fn verify(&self, d: &Derivation<Term>) -> Verdict {
        combinator::verify_derivation(d)
    }
}

enum Input {
    Select(usize),
    Undo,
    Quit,
    Write(String),
    Blank,
    Unknown(String),
}

fn read_command(line: &str) -> Input {
    let line = line.trim();
    match line {
        "" => Input::Blank,
        "q" => Input::Quit,
        "u" => Input::Undo,
        _ => {
            if let Some(path) = line.strip_prefix("w ") {
                let path = path.trim();
                if !path.is_empty() {
                    return Input::Write(path.to_string());
                }
            }
            match line.parse::<usize>() {
                Ok(i) => Input::Select(i),
                Err(_) => Input::Unknown(line.to_string()),
            }
        }
    }
}

/// Runs until `q` or end of input and returns the derivation built so far.
pub fn run_session<S: Stepper>(
    stepper: &S,
    start: S::Item,
    json: bool,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> io::Result<Derivation<S::Item>> {
    let mut d = Derivation::new(start);
    let mut line = String::new();
    loop {
        let options = stepper.options(d.last());
        writeln!(out, "{}", d.last())?;
        if options.is_empty() {
            writeln!(out, "  (no redexes)")?;
        }
        for (i, (j, _)) in options.iter().enumerate() {
            writeln!(
                out,
                "  [{i}] {} @ {}",
                j.rule,
                S::Item::render_position(&j.position)
            )?;
        }
        write!(out, "> ")?;
        out.flush()?;

        line.clear();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Ok(d);
        }
        match read_command(&line) {
            Input::Quit => return Ok(d),
            Input::Blank => {}
            Input::Undo => {
                if d.pop().is_none() {
                    writeln!(out, "nothing to undo")?;
                }
            }
            Input::Select(i) => match options.into_iter().nth(i) {
                Some((j, result)) => d.push(j, result),
                None => writeln!(out, "no redex [{i}]")?,
            },
            Input::Write(path) => {
                debug_assert!(stepper.verify(&d).is_accept());
                let text = if json {
                    serde_json::to_string_pretty(&d.to_json()).expect("serializable") + "\n"
                } else {
                    d.to_transcript()
                };
                match std::fs::write(&path, text) {
                    Ok(()) => writeln!(out, "wrote {} steps to {path}", d.len())?,
                    Err(e) => writeln!(out, "cannot write {path}: {e}")?,
                }
            }
            Input::Unknown(s) => {
                writeln!(out, "unrecognised input '{s}' (index, u, q or w <path>)")?
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use formwork_core::combinator::{normalize, parse_term};
    use formwork_core::string_rewrite::increment_system;

    fn session<S: Stepper>(
        stepper: &S,
        start: S::Item,
        script: &str,
    ) -> (Derivation<S::Item>, String) {
        let mut input = script.as_bytes();
        let mut out = Vec::new();
        let d = run_session(stepper, start, false, &mut input, &mut out).unwrap();
        (d, String::from_utf8(out).unwrap())
    }

    #[test]
    fn identity_schema_by_hand() {
        let (d, out) = session(&TermStepper, parse_term("S K K a").unwrap(), "0\n0\nq\n");
        assert_eq!(
            d,
            normalize(&parse_term("S K K a").unwrap(), 10)
                .unwrap()
                .derivation
        );
        assert!(out.contains("[0] rule2 @ ε"));
        assert!(out.contains("(no redexes)"));
    }

    #[test]
    fn three_plus_one_by_hand() {
        let sys = increment_system();
        let start = Word::parse("11↑=11↑").unwrap();
        let (d, out) = session(&WordStepper { system: &sys }, start, "1\n1\n1\n");
        let lines: Vec<String> = d.arrangements().map(|w| w.to_string()).collect();
        assert_eq!(lines, ["11↑=11↑", "11↑=1↑0", "11↑=↑00", "11↑=100"]);
        assert!(out.contains("[1] one-up @ 5+2"));
        assert_eq!(
            string_rewrite::verify(&sys, &d, StartCheck::Axiom),
            Verdict::Accept
        );
    }

    #[test]
    fn bad_input_leaves_state_alone() {
        let (d, out) = session(
            &TermStepper,
            parse_term("K S K").unwrap(),
            "7\nzap\n\nu\nq\n",
        );
        assert!(d.is_empty());
        assert!(out.contains("no redex [7]"));
        assert!(out.contains("unrecognised input 'zap'"));
        assert!(out.contains("nothing to undo"));
    }

    #[test]
    fn undo_steps_back() {
        let (d, _) = session(
            &TermStepper,
            parse_term("K K K S K S").unwrap(),
            "0\n0\nu\n",
        );
        assert_eq!(d.len(), 1);
        assert_eq!(d.last(), &parse_term("K S K S").unwrap());
    }

    #[test]
    fn write_emits_a_verifiable_transcript() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.txt");
        let script = format!("0\n0\nw {}\nq\n", path.display());
        let (_, out) = session(&TermStepper, parse_term("S K K a").unwrap(), &script);
        assert!(out.contains("wrote 2 steps"));
        let text = std::fs::read_to_string(&path).unwrap();
        let d: Derivation<Term> = formwork_core::derivation::parse_derivation(&text).unwrap();
        assert_eq!(combinator::verify_derivation(&d), Verdict::Accept);
    }
}
