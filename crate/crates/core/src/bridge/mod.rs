//! Translating terms with variables (and lambda expressions) into ground
//! combinators by bracket abstraction, and Church-numeral arithmetic on top.

mod church;
mod lambda;

use std::collections::BTreeSet;

use crate::combinator::Term;

pub use church::{
    add_term, arith_term, church, eval_arith, parse_arith, succ_term, unchurch, unchurch_within,
    ArithError, ArithExpr, UnchurchError, MAX_ARITH_OPERAND,
};
pub use lambda::{parse_lambda, LambdaExpr, LambdaSyntaxError};

pub fn free_vars(t: &Term) -> BTreeSet<String> {
    t.free_vars()
}

/// Replaces every occurrence of the variable `x` in `t` with `n`. Terms have
/// no binders, so nothing can be captured.
pub fn substitute(t: &Term, x: &str, n: &Term) -> Term {
    match t {
        Term::Var(v) if &**v == x => n.clone(),
        Term::App(_) => {
            let (fun, arg) = t.as_app().expect("application");
            if !t.contains_var(x) {
                return t.clone();
            }
            Term::app(substitute(fun, x, n), substitute(arg, x, n))
        }
        _ => t.clone(),
    }
}

/// `S K K`, the identity.
pub fn identity() -> Term {
    Term::apply_all(Term::S, [Term::K, Term::K])
}

/// Bracket abstraction `[x] t`:
///
/// * `[x] x = S K K`
/// * `[x] t = K t` when `x` does not occur in `t`
/// * `[x] (u v) = S ([x] u) ([x] v)`
pub fn abstract_var(x: &str, t: &Term) -> Term {
    match t {
        Term::Var(v) if &**v == x => identity(),
        _ if !t.contains_var(x) => Term::app(Term::K, t.clone()),
        _ => {
            let (u, v) = t.as_app().expect("only applications can contain x");
            Term::apply_all(Term::S, [abstract_var(x, u), abstract_var(x, v)])
        }
    }
}

/// Compiles a lambda expression to a combinator; free names stay variables.
pub fn compile_lambda(e: &LambdaExpr) -> Term {
    match e {
        LambdaExpr::ConstS => Term::S,
        LambdaExpr::ConstK => Term::K,
        LambdaExpr::Var(v) => Term::var(v),
        LambdaExpr::Apply(f, a) => Term::app(compile_lambda(f), compile_lambda(a)),
        LambdaExpr::Bind(x, body) => abstract_var(x, &compile_lambda(body)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinator::{normal_form, parse_term, DEFAULT_MAX_STEPS};

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn names(v: &[&str]) -> BTreeSet<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn free_variables() {
        assert!(free_vars(&t("S K K")).is_empty());
        assert_eq!(free_vars(&t("K a (K a)")), names(&["a"]));
        assert_eq!(free_vars(&t("a b a")), names(&["a", "b"]));
    }

    #[test]
    fn substitution() {
        assert_eq!(
            substitute(&t("K a (K a)"), "a", &t("S S")),
            t("K (S S) (K (S S))")
        );
        assert_eq!(substitute(&t("S"), "a", &t("K")), t("S"));
        assert_eq!(substitute(&t("a b"), "b", &t("a")), t("a a"));
    }

    #[test]
    fn canonical_abstractions() {
        assert_eq!(abstract_var("x", &t("x")), t("S K K"));
        assert_eq!(abstract_var("x", &t("K")), t("K K"));
        assert_eq!(abstract_var("x", &t("x x")), t("S (S K K) (S K K)"));
        assert_eq!(abstract_var("x", &t("y")), t("K y"));
    }

    #[test]
    fn self_application_abstraction_behaves() {
        // Every ground n of size ≤ 3, compared through normal forms.
        let body = t("x x");
        let abs = abstract_var("x", &body);
        for size in 1..=3 {
            for n in crate::combinator::ground_terms_of_size(size) {
                let lhs = normal_form(&Term::app(abs.clone(), n.clone()), DEFAULT_MAX_STEPS);
                let rhs = normal_form(&substitute(&body, "x", &n), DEFAULT_MAX_STEPS);
                if let (Some(l), Some(r)) = (&lhs, &rhs) {
                    assert_eq!(l, r, "n = {n}");
                }
            }
        }
    }

    #[test]
    fn compile_identity() {
        let e = LambdaExpr::bind("x", LambdaExpr::var("x"));
        assert_eq!(compile_lambda(&e), t("S K K"));
    }

    #[test]
    fn compile_first_projection() {
        let e = parse_lambda("\\x y. x").unwrap();
        let c = compile_lambda(&e);
        assert!(c.is_ground());
        for (a, b) in [("S", "K"), ("K K", "S S"), ("S (K S)", "K")] {
            let applied = Term::apply_all(c.clone(), [t(a), t(b)]);
            assert_eq!(
                normal_form(&applied, DEFAULT_MAX_STEPS),
                normal_form(&t(a), DEFAULT_MAX_STEPS)
            );
        }
    }

    #[test]
    fn compile_application_combinator() {
        let c = compile_lambda(&parse_lambda("\\f x. f x").unwrap());
        for (g, n) in [("K", "S"), ("S K", "K K"), ("S (K K)", "S")] {
            let applied = Term::apply_all(c.clone(), [t(g), t(n)]);
            assert_eq!(
                normal_form(&applied, DEFAULT_MAX_STEPS),
                normal_form(&Term::app(t(g), t(n)), DEFAULT_MAX_STEPS)
            );
        }
    }

    #[test]
    fn compile_keeps_free_names() {
        let c = compile_lambda(&parse_lambda("\\x. y x").unwrap());
        assert_eq!(c.free_vars(), names(&["y"]));
    }
}
