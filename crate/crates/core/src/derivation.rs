//! Derivations, the step justifications that make them checkable, and the
//! line-oriented transcript format (plus its JSON mirror).
//!
//! A transcript looks like
//!
//! ```text
//! kind: word
//! init: 11↑=11↑
//! step: one-up @ 5+2
//! to: 11↑=1↑0
//! ```
//!
//! Term transcripts use `kind: term`, paths over `{L,R}` (`ε` for the root)
//! and carry the rule's metavariable bindings in brackets:
//! `step: rule2 @ ε [x=K, y=K, z=a]`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinator::Term;
use crate::symbol::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Word,
    Term,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Word => "word",
            Kind::Term => "term",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "word" => Ok(Kind::Word),
            "term" => Ok(Kind::Term),
            other => Err(format!("unknown kind '{other}' (expected word or term)")),
        }
    }
}

/// Something a formal system derives: a [`Word`] or a [`Term`].
pub trait Arrangement: Clone + PartialEq + fmt::Debug + Sized {
    type Position: Clone + PartialEq + fmt::Debug;

    const KIND: Kind;

    fn render(&self) -> String;
    fn read(text: &str) -> Result<Self, String>;
    fn render_position(position: &Self::Position) -> String;
    fn read_position(text: &str) -> Result<Self::Position, String>;
}

/// A contiguous segment of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    pub offset: usize,
    pub len: usize,
}

impl Span {
    pub fn new(offset: usize, len: usize) -> Self {
        Span { offset, len }
    }

    pub fn fits(&self, word_len: usize) -> bool {
        self.len >= 1
            && self
                .offset
                .checked_add(self.len)
                .is_some_and(|end| end <= word_len)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}", self.offset, self.len)
    }
}

impl std::str::FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (offset, len) = s
            .split_once('+')
            .ok_or_else(|| format!("word position '{s}' is not <offset>+<length>"))?;
        let offset = offset
            .parse::<usize>()
            .map_err(|_| format!("bad offset in position '{s}'"))?;
        let len = len
            .parse::<usize>()
            .map_err(|_| format!("bad length in position '{s}'"))?;
        if len == 0 {
            return Err(format!("position '{s}' has zero length"));
        }
        Ok(Span { offset, len })
    }
}

/// Child selector in a term: `L` is the function side, `R` the argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    L,
    R,
}

/// Address of a subtree, read from the root.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(pub Vec<Dir>);

impl Path {
    pub fn root() -> Self {
        Path(Vec::new())
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, dir: Dir) -> Path {
        let mut dirs = self.0.clone();
        dirs.push(dir);
        Path(dirs)
    }

    pub fn dirs(&self) -> &[Dir] {
        &self.0
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for d in &self.0 {
            f.write_str(match d {
                Dir::L => "L",
                Dir::R => "R",
            })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Path {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "ε" {
            return Ok(Path::root());
        }
        if s.is_empty() {
            return Err("empty term position (use ε for the root)".to_string());
        }
        s.chars()
            .map(|c| match c {
                'L' => Ok(Dir::L),
                'R' => Ok(Dir::R),
                other => Err(format!(
                    "'{other}' is not a path selector (expected L or R)"
                )),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Path)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("metavariable '{0}' is bound twice")]
pub struct DuplicateBinding(pub String);

/// Finite map from metavariable names to arrangements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution<A> {
    bindings: BTreeMap<String, A>,
}

impl<A> Default for Substitution<A> {
    fn default() -> Self {
        Substitution {
            bindings: BTreeMap::new(),
        }
    }
}

impl<A> Substitution<A> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, name: impl Into<String>, value: A) -> Result<(), DuplicateBinding> {
        let name = name.into();
        if self.bindings.contains_key(&name) {
            return Err(DuplicateBinding(name));
        }
        self.bindings.insert(name, value);
        Ok(())
    }

    /// Builder form of [`Substitution::bind`]; panics on a duplicate name.
    pub fn with(mut self, name: impl Into<String>, value: A) -> Self {
        self.bind(name, value).expect("duplicate binding");
        self
    }

    pub fn get(&self, name: &str) -> Option<&A> {
        self.bindings.get(name)
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &A)> {
        self.bindings.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn try_map<B, E>(
        &self,
        mut f: impl FnMut(&A) -> Result<B, E>,
    ) -> Result<Substitution<B>, E> {
        let mut out = BTreeMap::new();
        for (k, v) in &self.bindings {
            out.insert(k.clone(), f(v)?);
        }
        Ok(Substitution { bindings: out })
    }
}

impl<A> FromIterator<(String, A)> for Substitution<A> {
    /// Later duplicates overwrite earlier ones; use [`Substitution::bind`]
    /// when duplicates must be rejected.
    fn from_iter<I: IntoIterator<Item = (String, A)>>(iter: I) -> Self {
        Substitution {
            bindings: iter.into_iter().collect(),
        }
    }
}

/// Which rule was applied, where, and with what bindings.
#[derive(Debug, Clone, PartialEq)]
pub struct StepJustification<A: Arrangement> {
    pub rule: String,
    pub position: A::Position,
    pub substitution: Substitution<A>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Step<A: Arrangement> {
    pub justification: StepJustification<A>,
    pub result: A,
}

/// An initial arrangement and a sequence of justified steps, each storing
/// the arrangement it produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Derivation<A: Arrangement> {
    initial: A,
    steps: Vec<Step<A>>,
}

impl<A: Arrangement> Derivation<A> {
    pub fn new(initial: A) -> Self {
        Derivation {
            initial,
            steps: Vec::new(),
        }
    }

    pub fn push(&mut self, justification: StepJustification<A>, result: A) {
        self.steps.push(Step {
            justification,
            result,
        });
    }

    pub fn pop(&mut self) -> Option<Step<A>> {
        self.steps.pop()
    }

    pub fn initial(&self) -> &A {
        &self.initial
    }

    pub fn steps(&self) -> &[Step<A>] {
        &self.steps
    }

    pub fn steps_mut(&mut self) -> &mut [Step<A>] {
        &mut self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The last arrangement (the initial one for a zero-step derivation).
    pub fn last(&self) -> &A {
        self.steps.last().map_or(&self.initial, |s| &s.result)
    }

    /// Initial arrangement followed by every step result.
    pub fn arrangements(&self) -> impl Iterator<Item = &A> {
        std::iter::once(&self.initial).chain(self.steps.iter().map(|s| &s.result))
    }

    pub fn to_transcript(&self) -> String {
        serialize_derivation(self)
    }

    pub fn to_json(&self) -> TranscriptJson {
        TranscriptJson {
            kind: A::KIND,
            init: self.initial.render(),
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    rule: s.justification.rule.clone(),
                    pos: A::render_position(&s.justification.position),
                    subst: s
                        .justification
                        .substitution
                        .iter()
                        .map(|(k, v)| (k.to_string(), v.render()))
                        .collect(),
                    to: s.result.render(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &TranscriptJson) -> Result<Self, TranscriptError> {
        if json.kind != A::KIND {
            return Err(TranscriptError::KindMismatch {
                expected: A::KIND,
                found: json.kind,
            });
        }
        let bad = |message: String| TranscriptError::Json(message);
        let mut d = Derivation::new(A::read(&json.init).map_err(bad)?);
        for (i, s) in json.steps.iter().enumerate() {
            let ctx = |m: String| bad(format!("steps[{i}]: {m}"));
            let position = A::read_position(&s.pos).map_err(ctx)?;
            let mut substitution = Substitution::new();
            for (k, v) in &s.subst {
                substitution
                    .bind(k.clone(), A::read(v).map_err(ctx)?)
                    .map_err(|e| ctx(e.to_string()))?;
            }
            if s.rule.is_empty() || s.rule.contains(char::is_whitespace) {
                return Err(ctx(format!("bad rule id '{}'", s.rule)));
            }
            d.push(
                StepJustification {
                    rule: s.rule.clone(),
                    position,
                    substitution,
                },
                A::read(&s.to).map_err(ctx)?,
            );
        }
        Ok(d)
    }
}

/// A derivation of either kind, as read from a transcript whose kind is
/// only known from its header.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyDerivation {
    Word(Derivation<Word>),
    Term(Derivation<Term>),
}

impl AnyDerivation {
    pub fn kind(&self) -> Kind {
        match self {
            AnyDerivation::Word(_) => Kind::Word,
            AnyDerivation::Term(_) => Kind::Term,
        }
    }

    pub fn to_transcript(&self) -> String {
        match self {
            AnyDerivation::Word(d) => d.to_transcript(),
            AnyDerivation::Term(d) => d.to_transcript(),
        }
    }

    pub fn to_json(&self) -> TranscriptJson {
        match self {
            AnyDerivation::Word(d) => d.to_json(),
            AnyDerivation::Term(d) => d.to_json(),
        }
    }
}

/// JSON mirror of a transcript.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptJson {
    pub kind: Kind,
    pub init: String,
    pub steps: Vec<StepJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub rule: String,
    pub pos: String,
    #[serde(default)]
    pub subst: BTreeMap<String, String>,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranscriptError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected a {expected} transcript, found {found}")]
    KindMismatch { expected: Kind, found: Kind },
    #[error("malformed JSON transcript: {0}")]
    Json(String),
}

fn syntax(line: usize, message: impl Into<String>) -> TranscriptError {
    TranscriptError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn serialize_derivation<A: Arrangement>(d: &Derivation<A>) -> String {
    let mut out = String::new();
    push_line(&mut out, format!("kind: {}", A::KIND));
    push_line(&mut out, format!("init: {}", d.initial.render()));
    for step in &d.steps {
        let j = &step.justification;
        let mut line = format!("step: {} @ {}", j.rule, A::render_position(&j.position));
        if !j.substitution.is_empty() {
            let bindings: Vec<String> = j
                .substitution
                .iter()
                .map(|(k, v)| format!("{k}={}", v.render()))
                .collect();
            line.push_str(&format!(" [{}]", bindings.join(", ")));
        }
        push_line(&mut out, line);
        push_line(&mut out, format!("to: {}", step.result.render()));
    }
    out
}

fn push_line(out: &mut String, line: String) {
    out.push_str(line.trim_end());
    out.push('\n');
}

/// Reads the `kind:` header without parsing the rest.
pub fn transcript_kind(text: &str) -> Result<Kind, TranscriptError> {
    let mut lines = content_lines(text);
    let (n, first) = lines.next().ok_or_else(|| syntax(1, "empty transcript"))?;
    let rest = field(first, "kind", n)?;
    rest.parse().map_err(|m: String| syntax(n, m))
}

/// Parses a transcript of the requested kind. Rule validity is not checked.
pub fn parse_derivation<A: Arrangement>(text: &str) -> Result<Derivation<A>, TranscriptError> {
    let found = transcript_kind(text)?;
    if found != A::KIND {
        return Err(TranscriptError::KindMismatch {
            expected: A::KIND,
            found,
        });
    }
    let mut lines = content_lines(text).skip(1);
    let (n, init_line) = lines
        .next()
        .ok_or_else(|| syntax(2, "missing 'init:' line"))?;
    let initial = A::read(field(init_line, "init", n)?).map_err(|m| syntax(n, m))?;
    let mut d = Derivation::new(initial);
    while let Some((n, step_line)) = lines.next() {
        let justification = parse_step_line::<A>(field(step_line, "step", n)?, n)?;
        let (m, to_line) = lines
            .next()
            .ok_or_else(|| syntax(n + 1, "step line without a following 'to:' line"))?;
        let result = A::read(field(to_line, "to", m)?).map_err(|msg| syntax(m, msg))?;
        d.push(justification, result);
    }
    Ok(d)
}

/// Parses a transcript of whichever kind its header declares.
pub fn parse_any_derivation(text: &str) -> Result<AnyDerivation, TranscriptError> {
    Ok(match transcript_kind(text)? {
        Kind::Word => AnyDerivation::Word(parse_derivation(text)?),
        Kind::Term => AnyDerivation::Term(parse_derivation(text)?),
    })
}

/// Nonblank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn field<'a>(line: &'a str, name: &str, n: usize) -> Result<&'a str, TranscriptError> {
    line.strip_prefix(name)
        .and_then(|rest| rest.strip_prefix(':'))
        .map(str::trim)
        .ok_or_else(|| syntax(n, format!("expected '{name}:'")))
}

fn parse_step_line<A: Arrangement>(
    body: &str,
    n: usize,
) -> Result<StepJustification<A>, TranscriptError> {
    let (rule, rest) = body
        .split_once(" @ ")
        .ok_or_else(|| syntax(n, "step line must read '<rule> @ <position>'"))?;
    let rule = rule.trim();
    if rule.is_empty() || rule.contains(char::is_whitespace) {
        return Err(syntax(n, format!("bad rule id '{rule}'")));
    }
    let rest = rest.trim();
    let (pos_text, subst_text) = match rest.find('[') {
        Some(open) => {
            let inner = rest[open..]
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| syntax(n, "unterminated substitution"))?;
            (rest[..open].trim(), Some(inner))
        }
        None => (rest, None),
    };
    let position = A::read_position(pos_text).map_err(|m| syntax(n, m))?;
    let mut substitution = Substitution::new();
    if let Some(inner) = subst_text {
        for binding in split_bindings(inner) {
            let (name, value) = binding
                .split_once('=')
                .ok_or_else(|| syntax(n, format!("binding '{binding}' lacks '='")))?;
            let name = name.trim();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_lowercase()) {
                return Err(syntax(n, format!("bad metavariable name '{name}'")));
            }
            let value = A::read(value.trim()).map_err(|m| syntax(n, m))?;
            substitution
                .bind(name, value)
                .map_err(|e| syntax(n, e.to_string()))?;
        }
    }
    Ok(StepJustification {
        rule: rule.to_string(),
        position,
        substitution,
    })
}

/// Splits on commas that are not nested inside parentheses.
fn split_bindings(inner: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = inner[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out
}

/// Why a verifier refused a derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    /// The initial arrangement is no instance of any axiom schema.
    AxiomViolation,
    ForeignSymbol(char),
    UnknownRule(String),
    /// The position does not address anything in the arrangement.
    BadPosition,
    /// The rule's left-hand side does not occur at the position.
    NoMatch,
    /// The recorded bindings disagree with the match at the position.
    SubstitutionMismatch,
    ResultMismatch,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::AxiomViolation => f.write_str("axiom violation"),
            RejectReason::ForeignSymbol(c) => write!(f, "symbol '{c}' outside the alphabet"),
            RejectReason::UnknownRule(r) => write!(f, "unknown rule '{r}'"),
            RejectReason::BadPosition => f.write_str("position out of range"),
            RejectReason::NoMatch => f.write_str("rule does not match at position"),
            RejectReason::SubstitutionMismatch => f.write_str("substitution mismatch"),
            RejectReason::ResultMismatch => f.write_str("result mismatch"),
        }
    }
}

/// Step 0 is the initial arrangement; step `k` (from 1) is the k-th rewrite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub step: usize,
    pub reason: RejectReason,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.step, self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(Rejection),
}

impl Verdict {
    pub fn reject(step: usize, reason: RejectReason) -> Self {
        Verdict::Reject(Rejection { step, reason })
    }

    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            Verdict::Accept => None,
            Verdict::Reject(r) => Some(r),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accept => f.write_str("accept"),
            Verdict::Reject(r) => write!(f, "reject: {r}"),
        }
    }
}

impl Arrangement for Word {
    type Position = Span;

    const KIND: Kind = Kind::Word;

    fn render(&self) -> String {
        self.to_string()
    }

    fn read(text: &str) -> Result<Self, String> {
        Word::parse(text).map_err(|e| e.to_string())
    }

    fn render_position(position: &Span) -> String {
        position.to_string()
    }

    fn read_position(text: &str) -> Result<Span, String> {
        text.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn three_plus_one() -> Derivation<Word> {
        let mut d = Derivation::new(w("11↑=11↑"));
        let step = |rule: &str, offset| StepJustification {
            rule: rule.to_string(),
            position: Span::new(offset, 2),
            substitution: Substitution::new(),
        };
        d.push(step("one-up", 5), w("11↑=1↑0"));
        d.push(step("one-up", 4), w("11↑=↑00"));
        d.push(step("eq-up", 3), w("11↑=100"));
        d
    }

    #[test]
    fn three_plus_one_transcript_lines() {
        let text = serialize_derivation(&three_plus_one());
        let arrangements: Vec<&str> = text
            .lines()
            .filter_map(|l| l.strip_prefix("init: ").or_else(|| l.strip_prefix("to: ")))
            .collect();
        assert_eq!(arrangements, ["11↑=11↑", "11↑=1↑0", "11↑=↑00", "11↑=100"]);
        assert!(text.starts_with("kind: word\n"));
        assert!(text.contains("step: one-up @ 5+2\n"));
    }

    #[test]
    fn three_plus_one_parses_back() {
        let text = serialize_derivation(&three_plus_one());
        let d: Derivation<Word> = parse_derivation(&text).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d, three_plus_one());
    }

    #[test]
    fn zero_step_derivation() {
        let d = Derivation::new(w("0"));
        let text = serialize_derivation(&d);
        assert_eq!(text, "kind: word\ninit: 0\n");
        assert_eq!(parse_derivation::<Word>(&text).unwrap(), d);
    }

    #[test]
    fn empty_word_round_trips() {
        let d = Derivation::new(Word::empty());
        let text = serialize_derivation(&d);
        assert_eq!(text, "kind: word\ninit:\n");
        assert_eq!(parse_derivation::<Word>(&text).unwrap(), d);
    }

    #[test]
    fn malformed_position_names_the_line() {
        let text = "kind: word\ninit: 11↑=11↑\nstep: one-up @ 5-2\nto: 11↑=1↑0\n";
        match parse_derivation::<Word>(text) {
            Err(TranscriptError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        let text = "kind: word\ninit: 1\nstep: one-up @ 0+0\nto: 1\n";
        assert!(matches!(
            parse_derivation::<Word>(text),
            Err(TranscriptError::Syntax { line: 3, .. })
        ));
    }

    #[test]
    fn missing_to_line_is_an_error() {
        let text = "kind: word\ninit: 1↑\nstep: one-up @ 0+2\n";
        assert!(matches!(
            parse_derivation::<Word>(text),
            Err(TranscriptError::Syntax { line: 4, .. })
        ));
    }

    #[test]
    fn kind_mismatch_is_reported() {
        let text = "kind: term\ninit: S K K\n";
        assert_eq!(
            parse_derivation::<Word>(text),
            Err(TranscriptError::KindMismatch {
                expected: Kind::Word,
                found: Kind::Term
            })
        );
        assert!(matches!(
            parse_any_derivation(text),
            Ok(AnyDerivation::Term(_))
        ));
    }

    #[test]
    fn ascii_arrow_in_transcript() {
        let text = "kind: word\ninit: 11^=11^\nstep: one-up @ 5+2\nto: 11^=1^0\n";
        let d = parse_derivation::<Word>(text).unwrap();
        assert_eq!(d.last(), &w("11↑=1↑0"));
    }

    #[test]
    fn json_mirror_round_trips() {
        let d = three_plus_one();
        let json = serde_json::to_string(&d.to_json()).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["kind"], "word");
        assert_eq!(value["steps"][2]["to"], "11↑=100");
        assert_eq!(value["steps"][0]["pos"], "5+2");
        assert_eq!(value["steps"][0]["rule"], "one-up");
        let back: TranscriptJson = serde_json::from_str(&json).unwrap();
        assert_eq!(Derivation::<Word>::from_json(&back).unwrap(), d);
    }

    #[test]
    fn duplicate_binding_rejected() {
        let mut s = Substitution::new();
        s.bind("x", w("1")).unwrap();
        assert_eq!(s.bind("x", w("0")), Err(DuplicateBinding("x".into())));
    }

    #[test]
    fn binding_splitter_respects_parentheses() {
        assert_eq!(split_bindings("x=K (S, y=K"), ["x=K (S, y=K"]);
        assert_eq!(split_bindings("x=K (S K), y=a"), ["x=K (S K)", "y=a"]);
        assert!(split_bindings("").is_empty());
    }

    #[test]
    fn paths_render_and_parse() {
        let p: Path = "LLR".parse().unwrap();
        assert_eq!(p, Path(vec![Dir::L, Dir::L, Dir::R]));
        assert_eq!(p.to_string(), "LLR");
        assert_eq!(Path::root().to_string(), "ε");
        assert_eq!("ε".parse::<Path>().unwrap(), Path::root());
        assert!("LX".parse::<Path>().is_err());
    }
}
