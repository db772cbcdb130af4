//! Text syntax for terms: `S`, `K`, lowercase variables and parentheses,
//! with juxtaposition as left-associative application.

use thiserror::Error;

use super::Term;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct TermSyntaxError {
    /// 1-based, in characters.
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    S,
    K,
    Var(String),
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, TermSyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let column = i + 1;
        let c = chars[i];
        let token = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            'S' => Token::S,
            'K' => Token::K,
            '(' => Token::Open,
            ')' => Token::Close,
            c if c.is_ascii_lowercase() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_lowercase() {
                    i += 1;
                }
                out.push((column, Token::Var(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(TermSyntaxError {
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
    end_column: usize,
}

impl Parser {
    fn column(&self) -> usize {
        self.tokens
            .get(self.at)
            .map_or(self.end_column, |(c, _)| *c)
    }

    fn application(&mut self) -> Result<Term, TermSyntaxError> {
        let mut term: Option<Term> = None;
        while let Some((_, token)) = self.tokens.get(self.at) {
            let atom = match token {
                Token::S => Term::S,
                Token::K => Term::K,
                Token::Var(v) => Term::var(v),
                Token::Open => {
                    let open = self.column();
                    self.at += 1;
                    let inner = self.application()?;
                    match self.tokens.get(self.at) {
                        Some((_, Token::Close)) => {}
                        _ => {
                            return Err(TermSyntaxError {
                                column: self.column(),
                                message: format!("unclosed '(' opened at column {open}"),
                            })
                        }
                    }
                    inner
                }
                Token::Close => break,
            };
            self.at += 1;
            term = Some(match term {
                None => atom,
                Some(fun) => Term::app(fun, atom),
            });
        }
        term.ok_or_else(|| TermSyntaxError {
            column: self.column(),
            message: "expected a term".into(),
        })
    }
}

pub fn parse_term(text: &str) -> Result<Term, TermSyntaxError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        at: 0,
        end_column: text.chars().count() + 1,
    };
    let term = parser.application()?;
    if parser.at < parser.tokens.len() {
        return Err(TermSyntaxError {
            column: parser.column(),
            message: "unmatched ')'".into(),
        });
    }
    Ok(term)
}

/// Minimal-parenthesis rendering; inverse of [`parse_term`].
pub fn print_term(t: &Term) -> String {
    t.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn app(f: Term, a: Term) -> Term {
        Term::app(f, a)
    }

    #[test]
    fn left_association() {
        assert_eq!(
            parse_term("S K K").unwrap(),
            app(app(Term::S, Term::K), Term::K)
        );
        assert_eq!(parse_term("SKK").unwrap(), parse_term("S K K").unwrap());
    }

    #[test]
    fn parentheses_override() {
        assert_eq!(
            parse_term("K (K a)").unwrap(),
            app(Term::K, app(Term::K, Term::var("a")))
        );
        assert_eq!(parse_term("((S))").unwrap(), Term::S);
    }

    #[test]
    fn four_ks_and_two_ss() {
        let k = || Term::K;
        let expected = app(app(app(app(app(k(), k()), k()), Term::S), k()), Term::S);
        assert_eq!(parse_term("K K K S K S").unwrap(), expected);
    }

    #[test]
    fn printing() {
        assert_eq!(print_term(&app(app(Term::S, Term::K), Term::K)), "S K K");
        assert_eq!(print_term(&app(Term::K, app(Term::K, Term::S))), "K (K S)");
        assert_eq!(print_term(&parse_term("K a (K a)").unwrap()), "K a (K a)");
        assert_eq!(
            print_term(&parse_term("(S (K x)) (y z)").unwrap()),
            "S (K x) (y z)"
        );
    }

    #[test]
    fn syntax_errors_carry_columns() {
        let col = |s: &str| parse_term(s).unwrap_err().column;
        assert_eq!(col(""), 1);
        assert_eq!(col("S K )"), 5);
        assert_eq!(col("S (K"), 5);
        assert_eq!(col("S ()"), 4);
        assert_eq!(col("S I"), 3);
        assert_eq!(col("K 1"), 3);
    }

    #[test]
    fn multi_letter_variables() {
        assert_eq!(parse_term("foo").unwrap(), Term::var("foo"));
        assert_eq!(parse_term("a b").unwrap().free_vars().len(), 2);
    }
}
