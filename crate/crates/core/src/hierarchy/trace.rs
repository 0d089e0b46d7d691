use std::fmt;
use std::io::{self, Write};

use serde::Serialize;

use crate::ordinal::Ordinal;
use crate::tree::TreeOrdinal;
use crate::worm::Worm;

/// Which evaluator produced a trace. This fixes the bracket and the argument
/// increment `δ` at limit steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Flavor {
    /// `H_α` on ordinals, standard brackets, `δ = 0` at limits.
    #[serde(rename = "H-ord")]
    HOrd,
    /// `H_t` on tree ordinals, standard brackets, `δ = 0` at limits.
    #[serde(rename = "H-tree")]
    HTree,
    /// `h_t` on tree ordinals, worm-style brackets, `δ = 1` at limits.
    #[serde(rename = "h-tree")]
    HTreeWorm,
    /// `h_A` on worms: one step-down per step, `δ = 1` always.
    #[serde(rename = "h-worm")]
    HWorm,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::HOrd => "H-ord",
            Flavor::HTree => "H-tree",
            Flavor::HTreeWorm => "h-tree",
            Flavor::HWorm => "h-worm",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum IndexTerm {
    Ord(Ordinal),
    Tree(TreeOrdinal),
    Worm(Worm),
}

impl IndexTerm {
    fn is_terminal(&self) -> bool {
        match self {
            IndexTerm::Ord(o) => o.is_zero(),
            IndexTerm::Tree(t) => t.is_zero(),
            IndexTerm::Worm(w) => w.is_top(),
        }
    }
}

impl fmt::Display for IndexTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexTerm::Ord(o) => o.fmt(f),
            IndexTerm::Tree(t) => t.fmt(f),
            IndexTerm::Worm(w) => w.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    /// Steps taken since the start. The conventional backwards index is
    /// `total_steps - step`.
    pub step: u64,
    pub index_term: IndexTerm,
    pub argument: u64,
}

/// An evaluation sequence `(ξ_j, x_j, j)`, stored from the target downwards:
/// `ξ_{j+1} = ξ_j[x_j]` and `x_{j+1} = x_j + δ`.
///
/// Long evaluations keep only a prefix of entries (`truncated`); the chaining
/// conditions are then checked on that prefix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvalTrace {
    pub flavor: Flavor,
    pub target: IndexTerm,
    pub input: u64,
    pub entries: Vec<TraceEntry>,
    /// Whether the computation reached `0` (resp. ⊤).
    pub finished: bool,
    pub truncated: bool,
    pub total_steps: u64,
}

impl EvalTrace {
    pub fn write_json_lines<W: Write>(&self, mut out: W) -> io::Result<()> {
        for e in &self.entries {
            serde_json::to_writer(&mut out, e)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}

/// Collects a bounded prefix of a trace.
pub(crate) struct Recorder {
    pub(crate) entries: Vec<TraceEntry>,
    max_entries: usize,
    stored: u64,
    pub(crate) truncated: bool,
}

/// Total term size kept across all entries of one trace.
const MAX_STORED: u64 = 4_000_000;

impl Recorder {
    pub(crate) fn new(max_entries: usize) -> Self {
        Recorder { entries: Vec::new(), max_entries, stored: 0, truncated: false }
    }

    /// Whether the next step should still be recorded.
    pub(crate) fn active(&self) -> bool {
        !self.truncated
    }

    pub(crate) fn push(&mut self, step: u64, size: u64, index_term: impl FnOnce() -> IndexTerm, argument: u64) {
        if self.entries.len() >= self.max_entries || self.stored + size > MAX_STORED {
            self.truncated = true;
            return;
        }
        self.stored += size;
        self.entries.push(TraceEntry { step, index_term: index_term(), argument });
    }
}

fn bracket(flavor: Flavor, term: &IndexTerm, x: u64) -> Option<(IndexTerm, u64)> {
    let (next, limit) = match (flavor, term) {
        (Flavor::HOrd, IndexTerm::Ord(o)) => (IndexTerm::Ord(o.fund_seq(x)), o.is_limit()),
        (Flavor::HTree, IndexTerm::Tree(t)) => (IndexTerm::Tree(t.fs_std(x as usize)), t.is_limit()),
        (Flavor::HTreeWorm, IndexTerm::Tree(t)) => (IndexTerm::Tree(t.fs_worm(x as usize)), t.is_limit()),
        (Flavor::HWorm, IndexTerm::Worm(w)) => return Some((IndexTerm::Worm(w.step_down(x)), 1)),
        _ => return None,
    };
    let delta = match flavor {
        Flavor::HOrd | Flavor::HTree => u64::from(!limit),
        _ => 1,
    };
    Some((next, delta))
}

/// Checks start, numbering, both chaining conditions, and the terminal entry of
/// a finished trace.
pub fn validate_trace(trace: &EvalTrace) -> bool {
    let Some(first) = trace.entries.first() else {
        return false;
    };
    if first.step != 0 || first.index_term != trace.target || first.argument != trace.input {
        return false;
    }
    for pair in trace.entries.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        if b.step != a.step + 1 || a.index_term.is_terminal() {
            return false;
        }
        match bracket(trace.flavor, &a.index_term, a.argument) {
            Some((next, delta)) if next == b.index_term && a.argument.checked_add(delta) == Some(b.argument) => {}
            _ => return false,
        }
    }
    if !trace.truncated {
        let last = trace.entries.last().expect("nonempty");
        if trace.finished != last.index_term.is_terminal() || last.step != trace.total_steps {
            return false;
        }
    }
    trace.entries.len() as u64 <= trace.total_steps + 1
}
