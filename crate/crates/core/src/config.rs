use serde::{Deserialize, Serialize};

/// Tunable limits shared by the engines and the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", default)]
pub struct Config {
    pub rank_cap: usize,
    /// Radius of the balls used by searches and oracles.
    pub ball_radius: usize,
    /// Bound on conjugator length for enumerated parabolic subgroups.
    pub conjugator_bound: usize,
    pub intersect_budget: usize,
    pub join_budget: usize,
    /// `|m|` range tested for SU membership.
    pub su_max_power: u32,
    /// Consecutive unchanged values of `N` required to stop the `I_∞` search.
    pub stabilization_window: u32,
    pub max_graph_vertices: usize,
    /// An explicit Coxeter matrix, used instead of a type token when present.
    pub coxeter_matrix: Option<Vec<Vec<u32>>>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            rank_cap: crate::context::DEFAULT_RANK_CAP,
            ball_radius: 5,
            conjugator_bound: 3,
            intersect_budget: 5,
            join_budget: 3,
            su_max_power: 4,
            stabilization_window: 3,
            max_graph_vertices: 100_000,
            coxeter_matrix: None,
        }
    }
}

impl Config {
    pub fn from_json(text: &str) -> crate::Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::Error::Parse(format!("config: {e}")))
    }
}
