//! Cycling, summit sets and their conjugator graphs, the `I_∞` search and
//! transport along cycling orbits.

mod classify;
mod export;
mod graph;
mod infinity;
mod summit;
mod transport;

use serde::{Deserialize, Serialize};

pub use classify::{classify_arrow, ArrowType};
pub use export::support_action_dot;
pub use graph::{arrows_from, compute_summit_graph, minimal_conjugators, Arrow, SummitGraph};
pub use infinity::{element_of_i_infinity, in_all_summits, InfinityResult};
pub use summit::{rsss_seed, sss_seed, su_seed, uss_seed, Summit};
pub use transport::{iterated_cycling_conjugator, stable_twisted_conjugator, transport_orbit, TransportRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SummitKind {
    PositiveConjugates,
    Sss,
    Uss,
    Rsss,
    Su,
}

impl SummitKind {
    pub fn parse(text: &str) -> crate::Result<Self> {
        match text.to_ascii_lowercase().as_str() {
            "pos" | "positive" | "c+" => Ok(SummitKind::PositiveConjugates),
            "sss" => Ok(SummitKind::Sss),
            "uss" => Ok(SummitKind::Uss),
            "rsss" => Ok(SummitKind::Rsss),
            "su" => Ok(SummitKind::Su),
            other => Err(crate::Error::Parse(format!("unknown summit kind '{other}'"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SummitKind::PositiveConjugates => "pos",
            SummitKind::Sss => "sss",
            SummitKind::Uss => "uss",
            SummitKind::Rsss => "rsss",
            SummitKind::Su => "su",
        }
    }
}
