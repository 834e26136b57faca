//! Finite fields `F_q`, their extensions, and polynomial factorisation.

mod cyclotomic;
mod ext;
mod factor;
mod field;
pub mod poly;

pub use cyclotomic::{cyclotomic_polynomial, root_of_unity_traces};
pub use ext::ExtensionField;
pub use factor::{expand, factor_polynomial};
pub use field::{FiniteField, Fq, TABLE_LIMIT};
pub use poly::Poly;
pub use crate::arith::mult_order;
