//! Formal systems as executable artifacts.
//!
//! Two engines share one notion of derivation:
//!
//! * [`string_rewrite`]: systems over words, with the binary increment
//!   system built in;
//! * [`combinator`]: the S/K combinator calculus over binary trees.
//!
//! Every engine emits [`derivation::Derivation`]s that record the rule,
//! position and bindings of each step, and every derivation can be
//! re-checked by a verifier that never searches. [`bridge`] compiles terms
//! with variables and lambda expressions down to S and K, and builds
//! Church-numeral arithmetic from the result.

pub mod bridge;
pub mod combinator;
pub mod derivation;
pub mod string_rewrite;
pub mod symbol;

pub use combinator::Term;
pub use derivation::{AnyDerivation, Derivation, Kind, Verdict};
pub use symbol::{Alphabet, Symbol, Word};
