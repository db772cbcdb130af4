//! Reading words of the increment system as numbers.

use thiserror::Error;

use crate::symbol::{Symbol, Word, UP_ARROW};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValueError {
    #[error("empty word has no value")]
    Empty,
    #[error("symbol '{0}' is not 0, 1 or ↑")]
    NotNumeric(char),
    #[error("value does not fit in 128 bits")]
    Overflow,
}

/// Binary numeral without leading zeros; `0` for zero.
pub fn to_binary_word(n: u64) -> Word {
    format!("{n:b}")
        .chars()
        .map(|c| Symbol::new(c).expect("binary digit"))
        .collect()
}

/// Left fold over the word: a digit `d` takes `v` to `2v + d`, an arrow
/// takes `v` to `v + 1`.
pub fn word_value(word: &Word) -> Result<u128, ValueError> {
    if word.is_empty() {
        return Err(ValueError::Empty);
    }
    word.symbols().iter().try_fold(0u128, |v, s| {
        let next = match s.glyph() {
            '0' => v.checked_mul(2),
            '1' => v.checked_mul(2).and_then(|v| v.checked_add(1)),
            UP_ARROW => v.checked_add(1),
            other => return Err(ValueError::NotNumeric(other)),
        };
        next.ok_or(ValueError::Overflow)
    })
}

/// Splits `L=R` at its only `=`.
pub fn split_equation(word: &Word) -> Option<(Word, Word)> {
    let eq = Symbol::new('=').expect("printable");
    if word.count(eq) != 1 {
        return None;
    }
    let at = word.symbols().iter().position(|&s| s == eq)?;
    Some((word.slice(0, at), word.slice(at + 1, word.len() - at - 1)))
}
