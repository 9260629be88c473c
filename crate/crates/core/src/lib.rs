//! Artin–Tits groups of spherical type: Garside normal forms, conjugacy
//! summit sets, parabolic closures and the lattice of parabolic subgroups.

pub mod complex;
pub mod config;
pub mod conjugacy;
pub mod context;
pub mod coxeter;
pub mod error;
pub mod garside;
pub mod oracle;
pub mod parabolic;

pub use context::{build_context, build_context_with_cap, group, Group, GroupContext};
pub use coxeter::{ComponentType, CoxeterSpec, GeneratorId, GeneratorSet};
pub use error::{Error, Result};
