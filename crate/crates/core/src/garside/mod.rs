//! Normal forms and lattice operations for the Garside structures
//! `(A_S, A_S^+, Δ_S^N)`.

mod element;
mod lattice;
mod mixed;
mod simple;
mod structure;
pub mod word;

pub use element::{CanonicalForm, GroupElement, Letter};
pub(crate) use element::same_group;
pub use mixed::{MixedForm, PnForm};
pub use simple::SimpleElement;
pub use structure::{simple_times_letter_rewrite, GarsideStructure, LetterRewrite, NormalFormN};
