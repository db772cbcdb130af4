//! String-rewriting formal systems: an alphabet, axiom schemas that say
//! which words a derivation may start from, and literal rewrite rules that
//! may fire anywhere in a word.

mod binary;
mod search;
mod system_file;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::derivation::{Derivation, RejectReason, Span, Substitution, Verdict};
use crate::symbol::{Alphabet, Symbol, Word};

pub use binary::{split_equation, to_binary_word, word_value, ValueError};
pub use search::{derive, SearchError, DEFAULT_MAX_ARRANGEMENTS};
pub use system_file::{parse_system, LoadError, INCREMENT_DEFINITION};

/// One position of an axiom template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TemplateItem {
    Symbol(Symbol),
    Var(String),
}

/// A word template with metavariables, each restricted to a sub-alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomSchema {
    template: Vec<TemplateItem>,
    ranges: BTreeMap<String, Alphabet>,
}

impl AxiomSchema {
    pub fn new(
        template: Vec<TemplateItem>,
        ranges: BTreeMap<String, Alphabet>,
    ) -> Result<Self, SystemError> {
        for item in &template {
            if let TemplateItem::Var(v) = item {
                if !ranges.contains_key(v) {
                    return Err(SystemError::MissingRange(v.clone()));
                }
            }
        }
        Ok(AxiomSchema { template, ranges })
    }

    pub fn template(&self) -> &[TemplateItem] {
        &self.template
    }

    pub fn ranges(&self) -> &BTreeMap<String, Alphabet> {
        &self.ranges
    }

    pub fn range(&self, var: &str) -> Option<&Alphabet> {
        self.ranges.get(var)
    }

    /// Finds bindings that make the template spell `word`, if any exist.
    pub fn match_word(&self, word: &Word) -> Option<Substitution<Word>> {
        let mut bound = BTreeMap::new();
        if self.match_from(0, word.symbols(), &mut bound) {
            Some(bound.into_iter().collect())
        } else {
            None
        }
    }

    fn match_from(&self, item: usize, rest: &[Symbol], bound: &mut BTreeMap<String, Word>) -> bool {
        let Some(head) = self.template.get(item) else {
            return rest.is_empty();
        };
        match head {
            TemplateItem::Symbol(s) => {
                rest.first() == Some(s) && self.match_from(item + 1, &rest[1..], bound)
            }
            TemplateItem::Var(v) => {
                if let Some(value) = bound.get(v) {
                    let n = value.len();
                    return rest.len() >= n
                        && rest[..n] == *value.symbols()
                        && self.match_from(item + 1, &rest[n..], bound);
                }
                let range = &self.ranges[v];
                let longest = rest.iter().take_while(|&&s| range.contains(s)).count();
                for n in 0..=longest {
                    bound.insert(v.clone(), Word::from_symbols(rest[..n].to_vec()));
                    if self.match_from(item + 1, &rest[n..], bound) {
                        return true;
                    }
                }
                bound.remove(v);
                false
            }
        }
    }
}

impl fmt::Display for AxiomSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .template
            .iter()
            .map(|i| match i {
                TemplateItem::Symbol(s) => s.to_string(),
                TemplateItem::Var(v) => v.clone(),
            })
            .collect();
        f.write_str(&items.join(" "))?;
        if !self.ranges.is_empty() {
            let ranges: Vec<String> = self
                .ranges
                .iter()
                .map(|(v, a)| format!("{v} over {{{a}}}"))
                .collect();
            write!(f, "  where {}", ranges.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    id: String,
    lhs: Word,
    rhs: Word,
}

impl RewriteRule {
    pub fn new(id: impl Into<String>, lhs: Word, rhs: Word) -> Result<Self, SystemError> {
        let id = id.into();
        if id.is_empty() || id.contains(|c: char| c.is_whitespace() || c == ':') {
            return Err(SystemError::BadRuleId(id));
        }
        if lhs.is_empty() {
            return Err(SystemError::EmptyLhs(id));
        }
        Ok(RewriteRule { id, lhs, rhs })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &Word {
        &self.rhs
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spaced = |w: &Word| {
            w.symbols()
                .iter()
                .map(Symbol::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(
            f,
            "{}: {} => {}",
            self.id,
            spaced(&self.lhs),
            spaced(&self.rhs)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error("metavariable '{0}' has no range")]
    MissingRange(String),
    #[error("bad rule id '{0}'")]
    BadRuleId(String),
    #[error("rule '{0}' has an empty left-hand side")]
    EmptyLhs(String),
    #[error("rule id '{0}' is declared twice")]
    DuplicateRule(String),
    #[error("symbol '{0}' is not in the alphabet")]
    ForeignSymbol(char),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringSystem {
    alphabet: Alphabet,
    axioms: Vec<AxiomSchema>,
    rules: Vec<RewriteRule>,
}

impl StringSystem {
    pub fn new(
        alphabet: Alphabet,
        axioms: Vec<AxiomSchema>,
        rules: Vec<RewriteRule>,
    ) -> Result<Self, SystemError> {
        let mut seen = HashSet::new();
        for r in &rules {
            if !seen.insert(r.id()) {
                return Err(SystemError::DuplicateRule(r.id.clone()));
            }
            for &s in r.lhs.symbols().iter().chain(r.rhs.symbols()) {
                if !alphabet.contains(s) {
                    return Err(SystemError::ForeignSymbol(s.glyph()));
                }
            }
        }
        for a in &axioms {
            for item in &a.template {
                if let TemplateItem::Symbol(s) = item {
                    if !alphabet.contains(*s) {
                        return Err(SystemError::ForeignSymbol(s.glyph()));
                    }
                }
            }
            for range in a.ranges.values() {
                if let Some(s) = range.symbols().iter().find(|&&s| !alphabet.contains(s)) {
                    return Err(SystemError::ForeignSymbol(s.glyph()));
                }
            }
        }
        Ok(StringSystem {
            alphabet,
            axioms,
            rules,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn axioms(&self) -> &[AxiomSchema] {
        &self.axioms
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn rule(&self, id: &str) -> Option<&RewriteRule> {
        self.rules.iter().find(|r| r.id == id)
    }

    pub fn is_axiom(&self, word: &Word) -> bool {
        self.axioms.iter().any(|a| a.match_word(word).is_some())
    }

    /// The first symbol of `word` outside the alphabet.
    pub fn foreign_symbol(&self, word: &Word) -> Option<Symbol> {
        word.symbols()
            .iter()
            .copied()
            .find(|&s| !self.alphabet.contains(s))
    }

    /// Renders the system in the definition-file format.
    pub fn to_definition(&self) -> String {
        let mut out = format!("alphabet: {}\n", self.alphabet);
        for a in &self.axioms {
            out.push_str(&format!("axiom: {a}\n"));
        }
        for r in &self.rules {
            out.push_str(&format!("rule {r}\n"));
        }
        out
    }
}

/// The binary increment system: start from `x=x`, then push `↑` leftwards
/// through the digits.
pub fn increment_system() -> StringSystem {
    let sym = |c| Symbol::new(c).expect("printable");
    let word = |s| Word::parse(s).expect("printable");
    let range = Alphabet::from_glyphs("01↑").expect("distinct");
    let axiom = AxiomSchema::new(
        vec![
            TemplateItem::Var("x".into()),
            TemplateItem::Symbol(sym('=')),
            TemplateItem::Var("x".into()),
        ],
        BTreeMap::from([("x".to_string(), range)]),
    )
    .expect("x has a range");
    let rules = vec![
        RewriteRule::new("zero-up", word("0↑"), word("1")),
        RewriteRule::new("one-up", word("1↑"), word("↑0")),
        RewriteRule::new("eq-up", word("=↑"), word("=1")),
    ]
    .into_iter()
    .collect::<Result<Vec<_>, _>>()
    .expect("valid rules");
    StringSystem::new(
        Alphabet::from_glyphs("01↑=").expect("distinct"),
        vec![axiom],
        rules,
    )
    .expect("closed over alphabet")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomError {
    #[error("metavariable '{0}' is unbound")]
    Unbound(String),
    #[error("binding of '{var}' uses '{symbol}', outside its range")]
    OutOfRange { var: String, symbol: char },
}

pub fn instantiate_axiom(
    schema: &AxiomSchema,
    sub: &Substitution<Word>,
) -> Result<Word, AxiomError> {
    for (var, range) in &schema.ranges {
        if let Some(value) = sub.get(var) {
            if let Some(s) = value.symbols().iter().find(|&&s| !range.contains(s)) {
                return Err(AxiomError::OutOfRange {
                    var: var.clone(),
                    symbol: s.glyph(),
                });
            }
        }
    }
    let mut out = Vec::new();
    for item in &schema.template {
        match item {
            TemplateItem::Symbol(s) => out.push(*s),
            TemplateItem::Var(v) => {
                let value = sub.get(v).ok_or_else(|| AxiomError::Unbound(v.clone()))?;
                out.extend_from_slice(value.symbols());
            }
        }
    }
    Ok(Word::from_symbols(out))
}

/// A place where a rule's left-hand side occurs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Redex<'a> {
    pub rule: &'a RewriteRule,
    pub span: Span,
}

/// Every rule occurrence in `word`, ordered by offset, then by rule
/// declaration order.
pub fn find_redexes<'a>(sys: &'a StringSystem, word: &Word) -> Vec<Redex<'a>> {
    rule_occurrences(sys, word)
        .map(|(i, span)| Redex {
            rule: &sys.rules[i],
            span,
        })
        .collect()
}

/// `(rule index, span)` pairs in redex order.
fn rule_occurrences<'a>(
    sys: &'a StringSystem,
    word: &'a Word,
) -> impl Iterator<Item = (usize, Span)> + 'a {
    (0..word.len()).flat_map(move |offset| {
        sys.rules
            .iter()
            .enumerate()
            .filter(move |(_, rule)| word.matches_at(&rule.lhs, offset))
            .map(move |(i, rule)| (i, Span::new(offset, rule.lhs.len())))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("rule '{rule}' does not match at {span}")]
    NoMatch { rule: String, span: Span },
}

pub fn apply_rule(word: &Word, rule: &RewriteRule, span: Span) -> Result<Word, RewriteError> {
    if span.len != rule.lhs.len() || !word.matches_at(&rule.lhs, span.offset) {
        return Err(RewriteError::NoMatch {
            rule: rule.id.clone(),
            span,
        });
    }
    Ok(word.splice(span.offset, span.len, &rule.rhs))
}

/// All one-step results, deduplicated, in redex order.
pub fn successors(sys: &StringSystem, word: &Word) -> Vec<Word> {
    let mut seen = HashSet::new();
    find_redexes(sys, word)
        .into_iter()
        .map(|r| word.splice(r.span.offset, r.span.len, &r.rule.rhs))
        .filter(|w| seen.insert(w.clone()))
        .collect()
}

/// Whether the initial word has to be an axiom instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StartCheck {
    #[default]
    Axiom,
    Any,
}

/// Checks a word derivation step by step without searching.
pub fn verify(sys: &StringSystem, d: &Derivation<Word>, start: StartCheck) -> Verdict {
    if let Some(s) = sys.foreign_symbol(d.initial()) {
        return Verdict::reject(0, RejectReason::ForeignSymbol(s.glyph()));
    }
    if start == StartCheck::Axiom && !sys.is_axiom(d.initial()) {
        return Verdict::reject(0, RejectReason::AxiomViolation);
    }
    let mut prev = d.initial();
    for (i, step) in d.steps().iter().enumerate() {
        let index = i + 1;
        let j = &step.justification;
        let Some(rule) = sys.rule(&j.rule) else {
            return Verdict::reject(index, RejectReason::UnknownRule(j.rule.clone()));
        };
        if !j.substitution.is_empty() {
            return Verdict::reject(index, RejectReason::SubstitutionMismatch);
        }
        if !j.position.fits(prev.len()) {
            return Verdict::reject(index, RejectReason::BadPosition);
        }
        let Ok(expected) = apply_rule(prev, rule, j.position) else {
            return Verdict::reject(index, RejectReason::NoMatch);
        };
        if expected != step.result {
            return Verdict::reject(index, RejectReason::ResultMismatch);
        }
        prev = &step.result;
    }
    Verdict::Accept
}
