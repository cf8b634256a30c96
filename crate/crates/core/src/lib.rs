//! Exact computation with expansions in non-integer bases `q ∈ (1, 2]`.

pub mod algebraic;
pub mod b2core;
pub mod bases;
pub mod classify;
pub mod cli;
pub mod dimension;
pub mod enumerate;
pub mod error;
pub mod factor;
pub mod poly;
pub mod words;

pub use algebraic::{AlgBase, FieldElem};
pub use error::{Error, Result};
pub use poly::IntPoly;
pub use words::{check_generator, lex_cmp, omega, thue_morse, ComponentSpec, EPSeq, Word};
