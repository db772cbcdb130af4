//! Church numerals compiled to S and K.

use thiserror::Error;

use super::{compile_lambda, LambdaExpr};
use crate::combinator::{normal_form, Term, DEFAULT_MAX_STEPS};

/// `λf.λx. f (f (... x))` with `n` applications, compiled.
pub fn church(n: u64) -> Term {
    let body = (0..n).fold(LambdaExpr::var("x"), |acc, _| {
        LambdaExpr::apply(LambdaExpr::var("f"), acc)
    });
    compile_lambda(&LambdaExpr::bind("f", LambdaExpr::bind("x", body)))
}

/// `λn.λf.λx. f (n f x)`
pub fn succ_term() -> Term {
    let (n, f, x) = (
        LambdaExpr::var("n"),
        LambdaExpr::var("f"),
        LambdaExpr::var("x"),
    );
    let nfx = LambdaExpr::apply(LambdaExpr::apply(n, f.clone()), x);
    let body = LambdaExpr::apply(f, nfx);
    compile_lambda(&LambdaExpr::bind(
        "n",
        LambdaExpr::bind("f", LambdaExpr::bind("x", body)),
    ))
}

/// `λm.λn.λf.λx. m f (n f x)`
pub fn add_term() -> Term {
    let v = LambdaExpr::var;
    let nfx = LambdaExpr::apply(LambdaExpr::apply(v("n"), v("f")), v("x"));
    let body = LambdaExpr::apply(LambdaExpr::apply(v("m"), v("f")), nfx);
    let binders = ["m", "n", "f", "x"];
    let e = binders
        .iter()
        .rev()
        .fold(body, |acc, name| LambdaExpr::bind(name, acc));
    compile_lambda(&e)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnchurchError {
    #[error("term is not ground")]
    NotGround,
    #[error("no normal form within {0} steps")]
    BudgetExceeded(usize),
    #[error("normal form '{0}' is not of the shape f (f (... x))")]
    NotANumeral(Term),
}

/// Reads a numeral back by normalizing `t f x` and counting the `f`s.
pub fn unchurch(t: &Term) -> Result<u64, UnchurchError> {
    unchurch_within(t, DEFAULT_MAX_STEPS)
}

pub fn unchurch_within(t: &Term, max_steps: usize) -> Result<u64, UnchurchError> {
    if !t.is_ground() {
        return Err(UnchurchError::NotGround);
    }
    let (f, x) = (Term::var("f"), Term::var("x"));
    let applied = Term::apply_all(t.clone(), [f.clone(), x.clone()]);
    let nf = normal_form(&applied, max_steps).ok_or(UnchurchError::BudgetExceeded(max_steps))?;
    let mut count = 0;
    let mut cur = &nf;
    loop {
        if *cur == x {
            return Ok(count);
        }
        match cur.as_app() {
            Some((head, inner)) if *head == f => {
                count += 1;
                cur = inner;
            }
            _ => return Err(UnchurchError::NotANumeral(nf.clone())),
        }
    }
}

/// Largest operand `arith` accepts.
pub const MAX_ARITH_OPERAND: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithExpr {
    Add(u64, u64),
    Succ(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("expected '<int> + <int>' or 'succ <int>', got '{0}'")]
    Parse(String),
    #[error("operand {0} exceeds the limit of {MAX_ARITH_OPERAND}")]
    TooLarge(u64),
    #[error(transparent)]
    Readback(#[from] UnchurchError),
}

pub fn parse_arith(text: &str) -> Result<ArithExpr, ArithError> {
    let bad = || ArithError::Parse(text.trim().to_string());
    let int = |s: &str| -> Result<u64, ArithError> {
        let s = s.trim();
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let n: u64 = s.parse().map_err(|_| ArithError::TooLarge(u64::MAX))?;
        if n > MAX_ARITH_OPERAND {
            return Err(ArithError::TooLarge(n));
        }
        Ok(n)
    };
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("succ") {
        if rest.starts_with(char::is_whitespace) {
            return Ok(ArithExpr::Succ(int(rest)?));
        }
        return Err(bad());
    }
    let (m, n) = text.split_once('+').ok_or_else(bad)?;
    Ok(ArithExpr::Add(int(m)?, int(n)?))
}

/// The combinator an arithmetic expression denotes, before reduction.
pub fn arith_term(e: ArithExpr) -> Term {
    match e {
        ArithExpr::Add(m, n) => Term::apply_all(add_term(), [church(m), church(n)]),
        ArithExpr::Succ(n) => Term::app(succ_term(), church(n)),
    }
}

/// Evaluates by S/K normalization and reads the numeral back.
pub fn eval_arith(e: ArithExpr, max_steps: usize) -> Result<u64, ArithError> {
    let nf =
        normal_form(&arith_term(e), max_steps).ok_or(UnchurchError::BudgetExceeded(max_steps))?;
    Ok(unchurch_within(&nf, max_steps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinator::{normalize, parse_term};

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn applied_nf(n: u64) -> Term {
        let applied = Term::apply_all(church(n), [Term::var("f"), Term::var("x")]);
        normalize(&applied, DEFAULT_MAX_STEPS).unwrap().term
    }

    #[test]
    fn numerals_apply_f_n_times() {
        assert_eq!(applied_nf(0), t("x"));
        assert_eq!(applied_nf(1), t("f x"));
        assert_eq!(applied_nf(3), t("f (f (f x))"));
        assert!(church(7).is_ground());
    }

    #[test]
    fn readback() {
        assert_eq!(unchurch(&church(4)), Ok(4));
        assert_eq!(unchurch(&t("S K K")), Ok(1));
        assert_eq!(unchurch(&t("K (S K K)")), Ok(0));
        assert_eq!(
            unchurch(&t("S")),
            Err(UnchurchError::NotANumeral(t("S f x")))
        );
        assert_eq!(unchurch(&t("a")), Err(UnchurchError::NotGround));
        let omega = t("S (S K K) (S K K) (S (S K K) (S K K))");
        assert_eq!(
            unchurch_within(&omega, 100),
            Err(UnchurchError::BudgetExceeded(100))
        );
    }

    #[test]
    fn successor_and_addition() {
        let nf = |e: Term| normalize(&e, DEFAULT_MAX_STEPS).unwrap().term;
        assert_eq!(unchurch(&nf(Term::app(succ_term(), church(3)))), Ok(4));
        assert_eq!(
            unchurch(&nf(Term::apply_all(add_term(), [church(0), church(5)]))),
            Ok(5)
        );
        assert_eq!(
            unchurch(&nf(Term::apply_all(add_term(), [church(2), church(3)]))),
            Ok(5)
        );
    }

    #[test]
    fn arith_grammar() {
        assert_eq!(parse_arith("3 + 1"), Ok(ArithExpr::Add(3, 1)));
        assert_eq!(parse_arith(" 0+0 "), Ok(ArithExpr::Add(0, 0)));
        assert_eq!(parse_arith("succ 7"), Ok(ArithExpr::Succ(7)));
        assert_eq!(parse_arith("65 + 1"), Err(ArithError::TooLarge(65)));
        assert!(matches!(parse_arith("succ"), Err(ArithError::Parse(_))));
        assert!(matches!(parse_arith("succ7"), Err(ArithError::Parse(_))));
        assert!(matches!(parse_arith("3 * 1"), Err(ArithError::Parse(_))));
        assert!(matches!(parse_arith("-3 + 1"), Err(ArithError::Parse(_))));
        assert!(matches!(
            parse_arith("1 + 2 + 3"),
            Err(ArithError::Parse(_))
        ));
    }

    #[test]
    fn arith_evaluation() {
        assert_eq!(eval_arith(ArithExpr::Add(3, 1), DEFAULT_MAX_STEPS), Ok(4));
        assert_eq!(eval_arith(ArithExpr::Add(0, 0), DEFAULT_MAX_STEPS), Ok(0));
        assert_eq!(eval_arith(ArithExpr::Add(2, 3), DEFAULT_MAX_STEPS), Ok(5));
        assert_eq!(eval_arith(ArithExpr::Succ(9), DEFAULT_MAX_STEPS), Ok(10));
        assert_eq!(
            eval_arith(ArithExpr::Add(64, 64), DEFAULT_MAX_STEPS),
            Ok(128)
        );
        assert_eq!(eval_arith(ArithExpr::Succ(64), DEFAULT_MAX_STEPS), Ok(65));
    }
}
