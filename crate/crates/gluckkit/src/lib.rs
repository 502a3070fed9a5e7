//! Exact-arithmetic obstructions to Gluck-twist isotopy of knots in
//! S^1 x S^2: correction-term obstructions for even winding numbers,
//! framing/homology obstructions from the surgery-diagram calculus, and the
//! Kauffman bracket skein module of S^1 x S^2 showing what the skein class
//! cannot detect.

pub mod cli;
pub mod dinvariant;
pub mod error;
pub mod laurent;
pub mod semigroup;
pub mod skein;
pub mod surgery;

pub use error::Error;
