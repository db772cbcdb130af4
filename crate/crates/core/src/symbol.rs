//! Symbols, alphabets and words: the sequence-shaped arrangements.

use std::fmt;

use thiserror::Error;

/// The increment arrow.
pub const UP_ARROW: char = '↑';
/// Accepted on input in place of [`UP_ARROW`].
pub const UP_ARROW_ASCII: char = '^';

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("'{0}' is not a printable, non-whitespace character")]
    NotPrintable(char),
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("symbol '{0}' occurs twice in the alphabet")]
    DuplicateSymbol(char),
}

/// A single printable glyph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(char);

impl Symbol {
    /// Builds a symbol, mapping the ASCII fallback `^` onto `↑`.
    pub fn new(glyph: char) -> Result<Self, SymbolError> {
        let glyph = if glyph == UP_ARROW_ASCII {
            UP_ARROW
        } else {
            glyph
        };
        if glyph.is_whitespace() || glyph.is_control() {
            return Err(SymbolError::NotPrintable(glyph));
        }
        Ok(Symbol(glyph))
    }

    pub fn glyph(self) -> char {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered, duplicate-free, nonempty list of symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self, SymbolError> {
        if symbols.is_empty() {
            return Err(SymbolError::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(SymbolError::DuplicateSymbol(s.glyph()));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Parses a string of glyphs, one symbol per character, whitespace ignored.
    pub fn from_glyphs(text: &str) -> Result<Self, SymbolError> {
        let symbols = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(Symbol::new)
            .collect::<Result<Vec<_>, _>>()?;
        Alphabet::new(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn contains(&self, symbol: Symbol) -> bool {
        self.symbols.contains(&symbol)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Every word over the alphabet with length exactly `len`, in
    /// lexicographic order of symbol positions.
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| {
                    self.symbols.iter().map(move |&s| {
                        let mut next = w.clone();
                        next.0.push(s);
                        next
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A finite sequence of symbols.
///
/// Words do not carry their alphabet; membership is checked by the system
/// that consumes them (see [`Word::is_over`]).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    /// Reads one symbol per non-whitespace character.
    pub fn parse(text: &str) -> Result<Self, SymbolError> {
        text.chars()
            .filter(|c| !c.is_whitespace())
            .map(Symbol::new)
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_over(&self, alphabet: &Alphabet) -> bool {
        self.0.iter().all(|&s| alphabet.contains(s))
    }

    /// True if `pattern` occurs at `offset`.
    pub fn matches_at(&self, pattern: &Word, offset: usize) -> bool {
        offset
            .checked_add(pattern.len())
            .is_some_and(|end| end <= self.len() && self.0[offset..end] == pattern.0[..])
    }

    /// Replaces `len` symbols starting at `offset` with `replacement`.
    ///
    /// Panics if the range is out of bounds.
    pub fn splice(&self, offset: usize, len: usize, replacement: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + replacement.len() - len.min(self.len()));
        out.extend_from_slice(&self.0[..offset]);
        out.extend_from_slice(&replacement.0);
        out.extend_from_slice(&self.0[offset + len..]);
        Word(out)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn count(&self, symbol: Symbol) -> usize {
        self.0.iter().filter(|&&s| s == symbol).count()
    }

    pub fn slice(&self, offset: usize, len: usize) -> Word {
        Word(self.0[offset..offset + len].to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_arrow_is_accepted() {
        assert_eq!(Word::parse("11^").unwrap(), Word::parse("11↑").unwrap());
        assert_eq!(Word::parse("11^").unwrap().to_string(), "11↑");
    }

    #[test]
    fn whitespace_is_not_a_symbol() {
        assert_eq!(Symbol::new(' '), Err(SymbolError::NotPrintable(' ')));
        assert_eq!(Symbol::new('\t'), Err(SymbolError::NotPrintable('\t')));
    }

    #[test]
    fn alphabet_rejects_duplicates_and_emptiness() {
        assert_eq!(
            Alphabet::from_glyphs("0 1 0"),
            Err(SymbolError::DuplicateSymbol('0'))
        );
        assert_eq!(Alphabet::from_glyphs(""), Err(SymbolError::EmptyAlphabet));
        assert_eq!(
            Alphabet::from_glyphs("^ ↑"),
            Err(SymbolError::DuplicateSymbol('↑'))
        );
    }

    #[test]
    fn splice_and_match() {
        let w = Word::parse("11↑=11↑").unwrap();
        let pat = Word::parse("1↑").unwrap();
        assert!(w.matches_at(&pat, 5));
        assert!(!w.matches_at(&pat, 6));
        assert!(!w.matches_at(&pat, usize::MAX));
        let out = w.splice(5, 2, &Word::parse("↑0").unwrap());
        assert_eq!(out.to_string(), "11↑=1↑0");
    }

    #[test]
    fn words_of_length_enumerates_everything() {
        let a = Alphabet::from_glyphs("01").unwrap();
        let words = a.words_of_length(3);
        assert_eq!(words.len(), 8);
        assert_eq!(words[0].to_string(), "000");
        assert_eq!(words[7].to_string(), "111");
        assert_eq!(a.words_of_length(0), vec![Word::empty()]);
    }
}
