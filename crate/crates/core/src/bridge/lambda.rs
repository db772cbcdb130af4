//! A minimal lambda front end: `\x. body` (or `λx. body`, several binders
//! allowed as in `\f x. f x`), left-associative juxtaposition, and the
//! constants `S` and `K`.

use std::fmt;

use thiserror::Error;

use crate::combinator::is_var_name;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LambdaExpr {
    Var(String),
    Apply(Box<LambdaExpr>, Box<LambdaExpr>),
    Bind(String, Box<LambdaExpr>),
    ConstS,
    ConstK,
}

impl LambdaExpr {
    pub fn var(name: &str) -> Self {
        LambdaExpr::Var(name.to_string())
    }

    pub fn apply(fun: LambdaExpr, arg: LambdaExpr) -> Self {
        LambdaExpr::Apply(Box::new(fun), Box::new(arg))
    }

    pub fn bind(name: &str, body: LambdaExpr) -> Self {
        LambdaExpr::Bind(name.to_string(), Box::new(body))
    }
}

impl fmt::Display for LambdaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LambdaExpr::Var(v) => f.write_str(v),
            LambdaExpr::ConstS => f.write_str("S"),
            LambdaExpr::ConstK => f.write_str("K"),
            LambdaExpr::Bind(x, body) => write!(f, "\\{x}. {body}"),
            LambdaExpr::Apply(fun, arg) => {
                match **fun {
                    LambdaExpr::Bind(..) => write!(f, "({fun})")?,
                    _ => write!(f, "{fun}")?,
                }
                match **arg {
                    LambdaExpr::Apply(..) | LambdaExpr::Bind(..) => write!(f, " ({arg})"),
                    _ => write!(f, " {arg}"),
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct LambdaSyntaxError {
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Lambda,
    Dot,
    Open,
    Close,
    S,
    K,
    Ident(String),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, LambdaSyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let column = i + 1;
        let token = match chars[i] {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '\\' | 'λ' => Token::Lambda,
            '.' => Token::Dot,
            '(' => Token::Open,
            ')' => Token::Close,
            'S' => Token::S,
            'K' => Token::K,
            c if c.is_ascii_lowercase() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_lowercase() {
                    i += 1;
                }
                out.push((column, Token::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(LambdaSyntaxError {
                    column,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((column, token));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(c, _)| *c)
    }

    fn error(&self, message: impl Into<String>) -> LambdaSyntaxError {
        LambdaSyntaxError {
            column: self.column(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<LambdaExpr, LambdaSyntaxError> {
        let mut acc: Option<LambdaExpr> = None;
        loop {
            let item = match self.peek() {
                None | Some(Token::Close) => break,
                Some(Token::Lambda) => {
                    // A binder swallows everything to its right.
                    let abs = self.abstraction()?;
                    acc = Some(match acc {
                        None => abs,
                        Some(f) => LambdaExpr::apply(f, abs),
                    });
                    break;
                }
                Some(Token::Dot) => return Err(self.error("unexpected '.'")),
                Some(Token::S) => {
                    self.at += 1;
                    LambdaExpr::ConstS
                }
                Some(Token::K) => {
                    self.at += 1;
                    LambdaExpr::ConstK
                }
                Some(Token::Ident(name)) => {
                    let v = LambdaExpr::Var(name.clone());
                    self.at += 1;
                    v
                }
                Some(Token::Open) => {
                    let open = self.column();
                    self.at += 1;
                    let inner = self.expr()?;
                    if self.peek() != Some(&Token::Close) {
                        return Err(self.error(format!("unclosed '(' opened at column {open}")));
                    }
                    self.at += 1;
                    inner
                }
            };
            acc = Some(match acc {
                None => item,
                Some(f) => LambdaExpr::apply(f, item),
            });
        }
        acc.ok_or_else(|| self.error("expected an expression"))
    }

    fn abstraction(&mut self) -> Result<LambdaExpr, LambdaSyntaxError> {
        self.at += 1;
        let mut names = Vec::new();
        while let Some(Token::Ident(name)) = self.peek() {
            debug_assert!(is_var_name(name));
            names.push(name.clone());
            self.at += 1;
        }
        if names.is_empty() {
            return Err(self.error("expected a variable after the binder"));
        }
        if self.peek() != Some(&Token::Dot) {
            return Err(self.error("expected '.' after the bound variables"));
        }
        self.at += 1;
        let body = self.expr()?;
        Ok(names
            .into_iter()
            .rev()
            .fold(body, |b, x| LambdaExpr::Bind(x, Box::new(b))))
    }
}

pub fn parse_lambda(text: &str) -> Result<LambdaExpr, LambdaSyntaxError> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        at: 0,
        end: text.chars().count() + 1,
    };
    let e = p.expr()?;
    if p.at < p.tokens.len() {
        return Err(p.error("unmatched ')'"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use LambdaExpr::*;

    #[test]
    fn identity() {
        assert_eq!(
            parse_lambda("\\x. x").unwrap(),
            LambdaExpr::bind("x", LambdaExpr::var("x"))
        );
        assert_eq!(
            parse_lambda("λx.x").unwrap(),
            parse_lambda("\\x. x").unwrap()
        );
    }

    #[test]
    fn binders_extend_right() {
        let e = parse_lambda("\\f x. f (f x)").unwrap();
        let body = LambdaExpr::apply(
            LambdaExpr::var("f"),
            LambdaExpr::apply(LambdaExpr::var("f"), LambdaExpr::var("x")),
        );
        assert_eq!(e, LambdaExpr::bind("f", LambdaExpr::bind("x", body)));
        let e = parse_lambda("a \\x. x b").unwrap();
        assert_eq!(
            e,
            LambdaExpr::apply(
                LambdaExpr::var("a"),
                LambdaExpr::bind(
                    "x",
                    LambdaExpr::apply(LambdaExpr::var("x"), LambdaExpr::var("b"))
                )
            )
        );
    }

    #[test]
    fn constants() {
        assert_eq!(
            parse_lambda("S K").unwrap(),
            LambdaExpr::apply(ConstS, ConstK)
        );
    }

    #[test]
    fn errors() {
        let col = |s: &str| parse_lambda(s).unwrap_err().column;
        assert_eq!(col("\\. x"), 2);
        assert_eq!(col("\\x x"), 5);
        assert_eq!(col("(x"), 3);
        assert_eq!(col("x)"), 2);
        assert_eq!(col(""), 1);
        assert_eq!(col("x + y"), 3);
    }

    #[test]
    fn display_round_trips() {
        for src in [
            "\\m n f x. m f (n f x)",
            "(\\x. x) S",
            "a (b c) (\\y. y)",
            "K",
        ] {
            let e = parse_lambda(src).unwrap();
            assert_eq!(parse_lambda(&e.to_string()).unwrap(), e, "{src}");
        }
    }
}
