//! Brute-force reference implementations for small groups.
//!
//! Products are formed by concatenating words. The engine's normal form is
//! consulted only to decide equality of two elements and whether an element
//! is positive; everything else here is exhaustive enumeration.

mod ball;
mod lattice;
mod parabolics;

pub use ball::Ball;
pub use lattice::{
    brute_join, brute_meet, brute_normal_form, brute_np, brute_pn, enumerate_simples, signed_length, type_a_permutation,
    Order,
};
pub use parabolics::{closure_oracle, intersect_in, intersect_oracle, EnumeratedParabolics};
