//! The combinator calculus over `S` and `K`.
//!
//! Two rules, applicable to any subtree:
//!
//! * `rule1`: `K x y` contracts to `x`
//! * `rule2`: `S x y z` contracts to `x z (y z)`
//!
//! Variables are inert leaves: they never play the role of `S` or `K`, so
//! derivations over terms with variables are schematic derivations of the
//! ground calculus.

mod enumerate;
mod graph;
mod syntax;
mod term;

use std::fmt;

use thiserror::Error;

use crate::derivation::{
    Arrangement, Derivation, Dir, Kind, Path, RejectReason, StepJustification, Substitution,
    Verdict,
};

pub use enumerate::ground_terms_of_size;
pub use graph::{reduction_graph, Edge, ReductionGraph, DEFAULT_MAX_NODES};
pub use syntax::{parse_term, print_term, TermSyntaxError};
pub use term::{is_var_name, App, Term};

pub const DEFAULT_MAX_STEPS: usize = 10_000;

/// Largest term, in leaves, that normalization will build. Rule 2 shares
/// `z` between two places, so a term can double in size with every step and
/// a step budget alone does not bound the work.
pub const MAX_TERM_SIZE: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// `K x y → x`
    Rule1,
    /// `S x y z → x z (y z)`
    Rule2,
}

impl RuleId {
    pub const ALL: [RuleId; 2] = [RuleId::Rule1, RuleId::Rule2];
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleId::Rule1 => "rule1",
            RuleId::Rule2 => "rule2",
        })
    }
}

impl std::str::FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rule1" => Ok(RuleId::Rule1),
            "rule2" => Ok(RuleId::Rule2),
            other => Err(format!("unknown rule '{other}'")),
        }
    }
}

/// The metavariable bindings of a match: `x`, `y` and, for rule 2, `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Match {
    pub rule: RuleId,
    pub x: Term,
    pub y: Term,
    pub z: Option<Term>,
}

impl Match {
    /// Matches `t` itself (not its subtrees) against both left-hand sides.
    pub fn at_root(t: &Term) -> Option<Match> {
        let (f1, last) = t.as_app()?;
        let (f2, mid) = f1.as_app()?;
        if *f2 == Term::K {
            return Some(Match {
                rule: RuleId::Rule1,
                x: mid.clone(),
                y: last.clone(),
                z: None,
            });
        }
        let (f3, first) = f2.as_app()?;
        (*f3 == Term::S).then(|| Match {
            rule: RuleId::Rule2,
            x: first.clone(),
            y: mid.clone(),
            z: Some(last.clone()),
        })
    }

    pub fn contractum(&self) -> Term {
        match &self.z {
            None => self.x.clone(),
            Some(z) => Term::app(
                Term::app(self.x.clone(), z.clone()),
                Term::app(self.y.clone(), z.clone()),
            ),
        }
    }

    pub fn substitution(&self) -> Substitution<Term> {
        let mut s = Substitution::new()
            .with("x", self.x.clone())
            .with("y", self.y.clone());
        if let Some(z) = &self.z {
            s = s.with("z", z.clone());
        }
        s
    }
}

/// Pre-order walk (node, then function side, then argument side) that stops
/// as soon as `visit` returns `true`.
fn preorder(t: &Term, mut visit: impl FnMut(&Term, &[Dir]) -> bool) {
    let mut path: Vec<Dir> = Vec::new();
    // (node, depth, direction taken from its parent)
    let mut stack: Vec<(&Term, usize, Option<Dir>)> = vec![(t, 0, None)];
    while let Some((node, depth, dir)) = stack.pop() {
        path.truncate(depth.saturating_sub(1));
        if let Some(d) = dir {
            path.push(d);
        }
        if visit(node, &path) {
            return;
        }
        if let Some((fun, arg)) = node.as_app() {
            stack.push((arg, depth + 1, Some(Dir::R)));
            stack.push((fun, depth + 1, Some(Dir::L)));
        }
    }
}

/// Every redex, outermost first and left before right.
pub fn find_redexes(t: &Term) -> Vec<(RuleId, Path)> {
    let mut out = Vec::new();
    preorder(t, |node, path| {
        if let Some(m) = Match::at_root(node) {
            out.push((m.rule, Path(path.to_vec())));
        }
        false
    });
    out
}

/// The leftmost-outermost redex with its match.
pub fn first_redex(t: &Term) -> Option<(Path, Match)> {
    let mut found = None;
    preorder(t, |node, path| match Match::at_root(node) {
        Some(m) => {
            found = Some((Path(path.to_vec()), m));
            true
        }
        None => false,
    });
    found
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractError {
    #[error("position {0} does not exist in the term")]
    BadPosition(Path),
    #[error("no {rule} redex at {path}")]
    NoRedex { rule: RuleId, path: Path },
}

/// The match of `rule` at `path`, if there is one.
pub fn match_at(t: &Term, rule: RuleId, path: &Path) -> Result<Match, ContractError> {
    let sub = t
        .subterm(path)
        .ok_or_else(|| ContractError::BadPosition(path.clone()))?;
    match Match::at_root(sub) {
        Some(m) if m.rule == rule => Ok(m),
        _ => Err(ContractError::NoRedex {
            rule,
            path: path.clone(),
        }),
    }
}

pub fn contract(t: &Term, rule: RuleId, path: &Path) -> Result<Term, ContractError> {
    let m = match_at(t, rule, path)?;
    Ok(t.replace_at(path, m.contractum())
        .expect("path was just resolved"))
}

/// One contraction together with everything a transcript records about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub path: Path,
    pub matched: Match,
    pub result: Term,
}

impl Contraction {
    pub fn justification(&self) -> StepJustification<Term> {
        StepJustification {
            rule: self.matched.rule.to_string(),
            position: self.path.clone(),
            substitution: self.matched.substitution(),
        }
    }
}

/// Contracts the leftmost-outermost redex.
pub fn normal_order_contraction(t: &Term) -> Option<Contraction> {
    let (path, matched) = first_redex(t)?;
    let result = t
        .replace_at(&path, matched.contractum())
        .expect("redex path exists");
    Some(Contraction {
        path,
        matched,
        result,
    })
}

/// `None` iff `t` is in normal form.
pub fn step_normal_order(t: &Term) -> Option<Term> {
    normal_order_contraction(t).map(|c| c.result)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Normalized {
    pub term: Term,
    pub derivation: Derivation<Term>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NormalizeError {
    #[error("no normal form within {} steps", .partial.len())]
    BudgetExceeded { partial: Box<Derivation<Term>> },
    #[error("term outgrew {MAX_TERM_SIZE} leaves after {} steps", .partial.len())]
    TooLarge { partial: Box<Derivation<Term>> },
}

impl NormalizeError {
    pub fn partial(&self) -> &Derivation<Term> {
        match self {
            NormalizeError::BudgetExceeded { partial } | NormalizeError::TooLarge { partial } => {
                partial
            }
        }
    }
}

/// Normal-order reduction for at most `max_steps` contractions and terms of
/// at most [`MAX_TERM_SIZE`] leaves.
pub fn normalize(t: &Term, max_steps: usize) -> Result<Normalized, NormalizeError> {
    let mut d = Derivation::new(t.clone());
    let mut current = t.clone();
    loop {
        let Some(c) = normal_order_contraction(&current) else {
            return Ok(Normalized {
                term: current,
                derivation: d,
            });
        };
        if d.len() == max_steps {
            return Err(NormalizeError::BudgetExceeded {
                partial: Box::new(d),
            });
        }
        let too_large = c.result.size() > MAX_TERM_SIZE;
        d.push(c.justification(), c.result.clone());
        if too_large {
            return Err(NormalizeError::TooLarge {
                partial: Box::new(d),
            });
        }
        current = c.result;
    }
}

/// Normal form only, without keeping the derivation. `None` under the same
/// conditions as [`normalize`] fails.
pub fn normal_form(t: &Term, max_steps: usize) -> Option<Term> {
    let mut current = t.clone();
    for _ in 0..=max_steps {
        match normal_order_contraction(&current) {
            None => return Some(current),
            Some(c) if c.result.size() > MAX_TERM_SIZE => return None,
            Some(c) => current = c.result,
        }
    }
    None
}

/// Checks every step of a term derivation. Variables are opaque, so
/// schematic derivations verify as they are. Recorded bindings, when
/// present, must agree with the match.
pub fn verify_derivation(d: &Derivation<Term>) -> Verdict {
    let mut prev = d.initial();
    for (i, step) in d.steps().iter().enumerate() {
        let index = i + 1;
        let j = &step.justification;
        let Ok(rule) = j.rule.parse::<RuleId>() else {
            return Verdict::reject(index, RejectReason::UnknownRule(j.rule.clone()));
        };
        let m = match match_at(prev, rule, &j.position) {
            Ok(m) => m,
            Err(ContractError::BadPosition(_)) => {
                return Verdict::reject(index, RejectReason::BadPosition)
            }
            Err(ContractError::NoRedex { .. }) => {
                return Verdict::reject(index, RejectReason::NoMatch)
            }
        };
        if !j.substitution.is_empty() && j.substitution != m.substitution() {
            return Verdict::reject(index, RejectReason::SubstitutionMismatch);
        }
        let expected = prev
            .replace_at(&j.position, m.contractum())
            .expect("path exists");
        if expected != step.result {
            return Verdict::reject(index, RejectReason::ResultMismatch);
        }
        prev = &step.result;
    }
    Verdict::Accept
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("variable '{0}' is not bound by the substitution")]
pub struct UnboundVariable(pub String);

/// Uniformly replaces the variables of a schematic derivation, in every
/// arrangement and every recorded binding.
pub fn instantiate_schematic(
    d: &Derivation<Term>,
    sub: &Substitution<Term>,
) -> Result<Derivation<Term>, UnboundVariable> {
    for t in d.arrangements() {
        if let Some(v) = t.free_vars().into_iter().find(|v| sub.get(v).is_none()) {
            return Err(UnboundVariable(v));
        }
    }
    let mut out = Derivation::new(d.initial().substitute_all(sub));
    for step in d.steps() {
        let j = &step.justification;
        let substitution = j
            .substitution
            .try_map(|t| Ok::<_, UnboundVariable>(t.substitute_all(sub)))?;
        out.push(
            StepJustification {
                rule: j.rule.clone(),
                position: j.position.clone(),
                substitution,
            },
            step.result.substitute_all(sub),
        );
    }
    Ok(out)
}

impl Arrangement for Term {
    type Position = Path;

    const KIND: Kind = Kind::Term;

    fn render(&self) -> String {
        self.to_string()
    }

    fn read(text: &str) -> Result<Self, String> {
        parse_term(text).map_err(|e| e.to_string())
    }

    fn render_position(position: &Path) -> String {
        position.to_string()
    }

    fn read_position(text: &str) -> Result<Path, String> {
        text.parse()
    }
}
