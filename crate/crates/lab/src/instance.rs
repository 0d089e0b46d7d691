use std::fmt;

use ewd_core::{Ordinal, TreeOrdinal, Worm};
use serde::{Deserialize, Serialize};

/// One input to a checker, tagged by suite so that it can be saved and replayed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "suite", rename_all = "snake_case")]
pub enum Instance {
    Stepdown { worm: Worm, k: u64 },
    TauNaturality { worm: Worm, x: u64 },
    Bridge { worm: Worm, x: u64 },
    Composition { b: Worm, a: Worm, n: u64 },
    Growth { worm: Worm, n: u64 },
    Superexp { n: u64 },
    Reach { a: Worm, b: Worm, m: u64 },
    Monotonicity { a: Worm, b: Worm, x: u64, y: u64 },
    CrStep { t: TreeOrdinal, x: u64 },
    NormBound { alpha: Ordinal, beta: Ordinal, x: u64 },
    NormTermStep { t: TreeOrdinal, x: u64 },
    RTildeStep { t: TreeOrdinal, u: TreeOrdinal, x: u64 },
    NormDifference { t: TreeOrdinal, u: TreeOrdinal, x: u64 },
    Doubling { s: Ordinal, x: u64, z: u64 },
    Drop { t: TreeOrdinal, x: u64, c: u64 },
    TreeLemmas { t: TreeOrdinal, u: TreeOrdinal, x: u64, c: u64 },
    HComparison { t: TreeOrdinal, beta: Ordinal, n: u64, m: u64 },
    HVsH { t: TreeOrdinal, n: u64, m: u64 },
    FhSandwich { alpha: Ordinal, x: u64 },
    Collapsed { alpha: Ordinal, x: u64 },
    BattleOracle { worm: Worm },
}

impl Instance {
    pub fn suite(&self) -> &'static str {
        match self {
            Instance::Stepdown { .. } => "stepdown",
            Instance::TauNaturality { .. } => "tau_naturality",
            Instance::Bridge { .. } => "bridge",
            Instance::Composition { .. } => "composition",
            Instance::Growth { .. } => "growth",
            Instance::Superexp { .. } => "superexp",
            Instance::Reach { .. } => "reach",
            Instance::Monotonicity { .. } => "monotonicity",
            Instance::CrStep { .. } => "cr_step",
            Instance::NormBound { .. } => "norm_bound",
            Instance::NormTermStep { .. } => "norm_term_step",
            Instance::RTildeStep { .. } => "r_tilde_step",
            Instance::NormDifference { .. } => "norm_difference",
            Instance::Doubling { .. } => "doubling",
            Instance::Drop { .. } => "drop",
            Instance::TreeLemmas { .. } => "tree_lemmas",
            Instance::HComparison { .. } => "h_comparison",
            Instance::HVsH { .. } => "h_vs_h",
            Instance::FhSandwich { .. } => "fh_sandwich",
            Instance::Collapsed { .. } => "collapsed",
            Instance::BattleOracle { .. } => "battle_oracle",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instances serialize")
    }

    pub fn from_json(text: &str) -> Result<Instance, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}
