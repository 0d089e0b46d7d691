//! Hardy functions on ordinals, tree ordinals and worms, the fast-growing
//! hierarchy, and evaluation traces.

mod fast;
mod hardy;
mod trace;

pub use crate::battle::{hardy_worm, hardy_worm_exceeds};
pub use fast::{collapsed_hardy, fast_growing, superexp, BigSummary};
pub use hardy::{
    hardy_ord, hardy_ord_at_most, hardy_ord_traced, hardy_tree_at_most, hardy_tree_wormstyle_at_most, hardy_tree, hardy_tree_traced, hardy_tree_wormstyle, hardy_tree_wormstyle_traced,
    hardy_worm_traced, Evaluation, DEFAULT_TRACE_ENTRIES,
};
pub use trace::{validate_trace, EvalTrace, Flavor, IndexTerm, TraceEntry};
