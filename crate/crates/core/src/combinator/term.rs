use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::derivation::{Dir, Path, Substitution};

/// A finite binary tree whose leaves are `S`, `K` or named variables.
///
/// Subtrees are shared, so cloning is cheap and contraction copies only the
/// spine above the redex. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    S,
    K,
    Var(Arc<str>),
    App(Arc<App>),
}

#[derive(PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct App {
    fun: Term,
    arg: Term,
    size: usize,
}

impl App {
    pub fn fun(&self) -> &Term {
        &self.fun
    }

    pub fn arg(&self) -> &Term {
        &self.arg
    }
}

/// Variable names are one or more ASCII lowercase letters.
pub fn is_var_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_lowercase())
}

impl Term {
    /// Panics if `name` is not a valid variable name.
    pub fn var(name: &str) -> Term {
        assert!(is_var_name(name), "invalid variable name '{name}'");
        Term::Var(Arc::from(name))
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        let size = fun.size().saturating_add(arg.size());
        Term::App(Arc::new(App { fun, arg, size }))
    }

    /// `head a1 a2 ...`, associating to the left.
    pub fn apply_all(head: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(head, Term::app)
    }

    /// Number of leaves, saturating at `usize::MAX`.
    pub fn size(&self) -> usize {
        match self {
            Term::App(a) => a.size,
            _ => 1,
        }
    }

    pub fn as_app(&self) -> Option<(&Term, &Term)> {
        match self {
            Term::App(a) => Some((&a.fun, &a.arg)),
            _ => None,
        }
    }

    pub fn is_leaf(&self) -> bool {
        !matches!(self, Term::App(_))
    }

    pub fn is_ground(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                Term::Var(v) => {
                    out.insert(v.to_string());
                }
                Term::App(a) => {
                    stack.push(&a.arg);
                    stack.push(&a.fun);
                }
                _ => {}
            }
        }
        out
    }

    pub fn contains_var(&self, name: &str) -> bool {
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                Term::Var(v) if &**v == name => return true,
                Term::App(a) => {
                    stack.push(&a.arg);
                    stack.push(&a.fun);
                }
                _ => {}
            }
        }
        false
    }

    /// Replaces every variable bound in `sub`; unbound variables stay.
    pub fn substitute_all(&self, sub: &Substitution<Term>) -> Term {
        match self {
            Term::Var(v) => sub.get(v).cloned().unwrap_or_else(|| self.clone()),
            Term::App(a) => {
                let fun = a.fun.substitute_all(sub);
                let arg = a.arg.substitute_all(sub);
                Term::app(fun, arg)
            }
            _ => self.clone(),
        }
    }

    pub fn subterm(&self, path: &Path) -> Option<&Term> {
        let mut t = self;
        for d in path.dirs() {
            let (fun, arg) = t.as_app()?;
            t = match d {
                Dir::L => fun,
                Dir::R => arg,
            };
        }
        Some(t)
    }

    /// Copy of `self` with the subtree at `path` replaced.
    pub fn replace_at(&self, path: &Path, replacement: Term) -> Option<Term> {
        let mut spine = Vec::with_capacity(path.dirs().len());
        let mut t = self;
        for &d in path.dirs() {
            let (fun, arg) = t.as_app()?;
            spine.push((fun, arg, d));
            t = match d {
                Dir::L => fun,
                Dir::R => arg,
            };
        }
        Some(
            spine
                .into_iter()
                .rev()
                .fold(replacement, |inner, (fun, arg, d)| match d {
                    Dir::L => Term::app(inner, arg.clone()),
                    Dir::R => Term::app(fun.clone(), inner),
                }),
        )
    }

    /// Head and arguments of the left spine: `h a1 ... an`.
    pub fn spine(&self) -> (&Term, Vec<&Term>) {
        let mut args = Vec::new();
        let mut t = self;
        while let Some((fun, arg)) = t.as_app() {
            args.push(arg);
            t = fun;
        }
        args.reverse();
        (t, args)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (head, args) = self.spine();
        match head {
            Term::S => f.write_str("S")?,
            Term::K => f.write_str("K")?,
            Term::Var(v) => f.write_str(v)?,
            Term::App(_) => unreachable!("spine head is a leaf"),
        }
        for arg in args {
            if arg.is_leaf() {
                write!(f, " {arg}")?;
            } else {
                write!(f, " ({arg})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl Drop for App {
    // Long chains would otherwise be dropped recursively.
    fn drop(&mut self) {
        let mut pending = Vec::new();
        for child in [&mut self.fun, &mut self.arg] {
            if let Term::App(_) = child {
                pending.push(std::mem::replace(child, Term::S));
            }
        }
        while let Some(t) = pending.pop() {
            if let Term::App(arc) = t {
                if let Ok(mut app) = Arc::try_unwrap(arc) {
                    for child in [&mut app.fun, &mut app.arg] {
                        if let Term::App(_) = child {
                            pending.push(std::mem::replace(child, Term::S));
                        }
                    }
                }
            }
        }
    }
}
