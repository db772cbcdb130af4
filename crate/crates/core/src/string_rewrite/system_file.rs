//! Loader for the text definition format:
//!
//! ```text
//! alphabet: 0 1 ↑ =
//! axiom: x = x  where x over {0 1 ↑}
//! rule one-up: 1 ↑ => ↑ 0
//! ```
//!
//! Lines starting with `#` and blank lines are ignored.

use std::collections::BTreeMap;

use thiserror::Error;

use super::{AxiomSchema, RewriteRule, StringSystem, SystemError, TemplateItem};
use crate::symbol::{Alphabet, Symbol, Word};

/// The increment system in definition-file form.
pub const INCREMENT_DEFINITION: &str = include_str!("../../systems/increment.sys");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("no 'alphabet:' line")]
    MissingAlphabet,
    #[error(transparent)]
    Invalid(#[from] SystemError),
}

fn err(line: usize, message: impl Into<String>) -> LoadError {
    LoadError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_system(text: &str) -> Result<StringSystem, LoadError> {
    let mut alphabet = None;
    let mut axioms = Vec::new();
    let mut rules = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("alphabet:") {
            if alphabet.is_some() {
                return Err(err(n, "second 'alphabet:' line"));
            }
            let symbols = symbols(rest, n)?;
            alphabet = Some(Alphabet::new(symbols).map_err(|e| err(n, e.to_string()))?);
        } else if let Some(rest) = line.strip_prefix("axiom:") {
            axioms.push(parse_axiom(rest, n)?);
        } else if let Some(rest) = line.strip_prefix("rule ") {
            rules.push(parse_rule(rest, n)?);
        } else {
            return Err(err(n, format!("unrecognised line '{line}'")));
        }
    }
    let alphabet = alphabet.ok_or(LoadError::MissingAlphabet)?;
    Ok(StringSystem::new(alphabet, axioms, rules)?)
}

fn symbol(token: &str, n: usize) -> Result<Symbol, LoadError> {
    let mut chars = token.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Symbol::new(c).map_err(|e| err(n, e.to_string())),
        _ => Err(err(n, format!("'{token}' is not a single symbol"))),
    }
}

fn symbols(text: &str, n: usize) -> Result<Vec<Symbol>, LoadError> {
    text.split_whitespace().map(|t| symbol(t, n)).collect()
}

fn is_metavariable(token: &str) -> bool {
    let mut chars = token.chars();
    matches!((chars.next(), chars.next()), (Some(c), None) if c.is_ascii_lowercase())
}

fn parse_axiom(body: &str, n: usize) -> Result<AxiomSchema, LoadError> {
    let (template_text, where_text) = match body.split_once(" where ") {
        Some((t, w)) => (t, Some(w)),
        None => (body, None),
    };
    let mut ranges = BTreeMap::new();
    if let Some(decls) = where_text {
        for decl in decls.split("},") {
            let decl = decl.trim().trim_end_matches('}');
            let (var, range) = decl
                .split_once(" over ")
                .ok_or_else(|| err(n, format!("expected '<var> over {{...}}' in '{decl}'")))?;
            let var = var.trim();
            if !is_metavariable(var) {
                return Err(err(
                    n,
                    format!("'{var}' is not a metavariable (one lowercase letter)"),
                ));
            }
            let range = range
                .trim()
                .strip_prefix('{')
                .ok_or_else(|| err(n, "range must be written {...}"))?;
            let range = Alphabet::new(symbols(range, n)?).map_err(|e| err(n, e.to_string()))?;
            if ranges.insert(var.to_string(), range).is_some() {
                return Err(err(n, format!("metavariable '{var}' declared twice")));
            }
        }
    }
    let template = template_text
        .split_whitespace()
        .map(|t| {
            if ranges.contains_key(t) {
                Ok(TemplateItem::Var(t.to_string()))
            } else {
                symbol(t, n).map(TemplateItem::Symbol)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AxiomSchema::new(template, ranges)?)
}

fn parse_rule(body: &str, n: usize) -> Result<RewriteRule, LoadError> {
    let (id, sides) = body
        .split_once(':')
        .ok_or_else(|| err(n, "rule line must read 'rule <id>: <lhs> => <rhs>'"))?;
    let tokens: Vec<&str> = sides.split_whitespace().collect();
    let arrows: Vec<usize> = tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| **t == "=>")
        .map(|(i, _)| i)
        .collect();
    let [arrow] = arrows[..] else {
        return Err(err(n, "rule needs exactly one '=>'"));
    };
    let side = |ts: &[&str]| -> Result<Word, LoadError> {
        ts.iter()
            .map(|t| symbol(t, n))
            .collect::<Result<Vec<_>, _>>()
            .map(Word::from_symbols)
    };
    let lhs = side(&tokens[..arrow])?;
    let rhs = side(&tokens[arrow + 1..])?;
    Ok(RewriteRule::new(id.trim(), lhs, rhs)?)
}
