//! Step evaluators for `H_α`, `H_t`, `h_t` and `h_A`.
//!
//! Each index term is held as a mutable stack of its rightmost structure so a
//! step touches only the tail. Runs of successor steps are taken in one go when
//! no trace is being recorded.

use crate::battle::AnyStack;
use crate::budget::{Budget, Meter};
use crate::error::BudgetExceeded;
use crate::ordinal::{Ordinal, Term};
use crate::tree::TreeOrdinal;
use crate::worm::Worm;

use super::trace::{EvalTrace, Flavor, IndexTerm, Recorder};

/// Default cap on recorded trace entries.
pub const DEFAULT_TRACE_ENTRIES: usize = 100_000;

trait Machine {
    fn done(&self) -> bool;
    fn snapshot(&self) -> IndexTerm;
    /// Rough size of a snapshot, charged against the recorder.
    fn size(&self) -> u64;
    /// Successor steps available before the next limit step, counted up to `cap`.
    fn units(&self, cap: u64) -> u64;
    fn drop_units(&mut self, n: u64);
    /// One limit step at argument `x`.
    fn limit_step(&mut self, x: u64, budget: &Budget) -> Result<(), BudgetExceeded>;
    const LIMIT_DELTA: u64;
}

struct Run {
    /// Final argument.
    x: u64,
    steps: u64,
}

/// Runs to the end, or stops early once the argument passes `cap`: arguments
/// never decrease, so the final value is then known to exceed `cap` too.
fn drive<M: Machine>(
    m: &mut M,
    x0: u64,
    cap: u64,
    budget: &Budget,
    mut rec: Option<&mut Recorder>,
) -> Result<Run, (BudgetExceeded, u64)> {
    let mut meter: Meter = budget.meter();
    let mut x = x0;
    let mut j = 0u64;
    let overflow = || BudgetExceeded::bits(64);
    loop {
        let recording = rec.as_ref().is_some_and(|r| r.active());
        if recording {
            let r = rec.as_deref_mut().expect("recording");
            r.push(j, m.size(), || m.snapshot(), x);
        }
        if m.done() || x > cap {
            return Ok(Run { x, steps: j });
        }
        let room = cap.saturating_sub(x).saturating_add(1);
        let u = m.units(if recording { 1 } else { meter.remaining().min(room).max(1) });
        if u > 0 {
            let n = u;
            meter.charge(n).map_err(|e| (e, j))?;
            m.drop_units(n);
            x = x.checked_add(n).ok_or_else(|| (overflow(), j))?;
            j += n;
        } else {
            meter.charge(1).map_err(|e| (e, j))?;
            m.limit_step(x, budget).map_err(|e| (e, j))?;
            x = x.checked_add(M::LIMIT_DELTA).ok_or_else(|| (overflow(), j))?;
            j += 1;
        }
    }
}

struct OrdMachine {
    terms: Vec<Term>,
}

impl Machine for OrdMachine {
    const LIMIT_DELTA: u64 = 0;

    fn done(&self) -> bool {
        self.terms.is_empty()
    }

    fn snapshot(&self) -> IndexTerm {
        IndexTerm::Ord(Ordinal::from_terms(self.terms.clone()))
    }

    fn size(&self) -> u64 {
        self.terms.len() as u64
    }

    fn units(&self, cap: u64) -> u64 {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => t.coeff.min(cap),
            _ => 0,
        }
    }

    fn drop_units(&mut self, n: u64) {
        let last = self.terms.last_mut().expect("units present");
        last.coeff -= n;
        if last.coeff == 0 {
            self.terms.pop();
        }
    }

    fn limit_step(&mut self, x: u64, budget: &Budget) -> Result<(), BudgetExceeded> {
        budget.check_size(self.terms.len() as u64 + 1)?;
        let last = self.terms.last_mut().expect("nonzero");
        let e = last.exponent.clone();
        last.coeff -= 1;
        if last.coeff == 0 {
            self.terms.pop();
        }
        if e.is_successor() {
            if x > 0 {
                self.terms.push(Term { exponent: e.fund_seq(x), coeff: x });
            }
        } else {
            self.terms.push(Term { exponent: e.fund_seq(x), coeff: 1 });
        }
        Ok(())
    }
}

/// Top-level summand exponents of a tree ordinal, rightmost last.
struct TreeMachine<const WORM: bool> {
    exps: Vec<TreeOrdinal>,
}

impl<const WORM: bool> Machine for TreeMachine<WORM> {
    const LIMIT_DELTA: u64 = WORM as u64;

    fn done(&self) -> bool {
        self.exps.is_empty()
    }

    fn snapshot(&self) -> IndexTerm {
        IndexTerm::Tree(TreeOrdinal::from_exponents(self.exps.clone()))
    }

    fn size(&self) -> u64 {
        self.exps.len() as u64
    }

    fn units(&self, cap: u64) -> u64 {
        self.exps.iter().rev().take(cap.min(usize::MAX as u64) as usize).take_while(|e| e.is_zero()).count() as u64
    }

    fn drop_units(&mut self, n: u64) {
        self.exps.truncate(self.exps.len() - n as usize);
    }

    fn limit_step(&mut self, x: u64, budget: &Budget) -> Result<(), BudgetExceeded> {
        let max = budget.max_term_size;
        let too_big = || BudgetExceeded::term_size(max);
        let s = self.exps.pop().expect("nonzero");
        match s.split_successor() {
            Some((_, pred)) => {
                let copies = if WORM && !pred.is_zero() { 2 } else { 1 };
                let new_len = x
                    .checked_mul(copies)
                    .and_then(|n| n.checked_add(self.exps.len() as u64))
                    .filter(|&n| n <= max)
                    .ok_or_else(too_big)?;
                self.exps.reserve(new_len as usize - self.exps.len());
                for _ in 0..x {
                    self.exps.push(pred.clone());
                    if copies == 2 {
                        self.exps.push(TreeOrdinal::zero());
                    }
                }
            }
            None => {
                if x > max {
                    return Err(too_big());
                }
                let inner = if WORM { s.fs_worm(x as usize) } else { s.fs_std(x as usize) };
                self.exps.push(inner);
            }
        }
        Ok(())
    }
}

/// Value and optional trace of one evaluation. On budget exhaustion the trace
/// holds what was computed before giving up.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub value: Result<u64, BudgetExceeded>,
    pub trace: Option<EvalTrace>,
}

fn finish(
    flavor: Flavor,
    target: IndexTerm,
    input: u64,
    run: Result<Run, (BudgetExceeded, u64)>,
    rec: Option<Recorder>,
    value: impl FnOnce(&Run) -> u64,
) -> Evaluation {
    let (value, finished, total) = match run {
        Ok(r) => (Ok(value(&r)), true, r.steps),
        Err((e, steps)) => (Err(e), false, steps),
    };
    let trace = rec.map(|r| EvalTrace {
        flavor,
        target,
        input,
        entries: r.entries,
        finished,
        truncated: r.truncated || !finished,
        total_steps: total,
    });
    Evaluation { value, trace }
}

fn ord_eval(alpha: &Ordinal, x: u64, budget: &Budget, trace: Option<usize>) -> Evaluation {
    let mut m = OrdMachine { terms: alpha.terms().to_vec() };
    let mut rec = trace.map(Recorder::new);
    let run = drive(&mut m, x, u64::MAX, budget, rec.as_mut());
    finish(Flavor::HOrd, IndexTerm::Ord(alpha.clone()), x, run, rec, |r| r.x)
}

fn tree_eval<const WORM: bool>(t: &TreeOrdinal, x: u64, budget: &Budget, trace: Option<usize>) -> Evaluation {
    let mut m = TreeMachine::<WORM> { exps: t.exponents().to_vec() };
    let mut rec = trace.map(Recorder::new);
    let run = drive(&mut m, x, u64::MAX, budget, rec.as_mut());
    let flavor = if WORM { Flavor::HTreeWorm } else { Flavor::HTree };
    finish(flavor, IndexTerm::Tree(t.clone()), x, run, rec, |r| r.x)
}

fn at_most<M: Machine>(mut m: M, x: u64, cap: u64, budget: &Budget) -> Result<bool, BudgetExceeded> {
    drive(&mut m, x, cap, budget, None).map(|r| r.x <= cap).map_err(|(e, _)| e)
}

/// Whether `H_α(x) ≤ cap`, stopping as soon as the answer is known.
pub fn hardy_ord_at_most(alpha: &Ordinal, x: u64, cap: u64, budget: &Budget) -> Result<bool, BudgetExceeded> {
    at_most(OrdMachine { terms: alpha.terms().to_vec() }, x, cap, budget)
}

/// Whether `H_t(x) ≤ cap`.
pub fn hardy_tree_at_most(t: &TreeOrdinal, x: u64, cap: u64, budget: &Budget) -> Result<bool, BudgetExceeded> {
    at_most(TreeMachine::<false> { exps: t.exponents().to_vec() }, x, cap, budget)
}

/// Whether `h_t(x) ≤ cap`.
pub fn hardy_tree_wormstyle_at_most(t: &TreeOrdinal, x: u64, cap: u64, budget: &Budget) -> Result<bool, BudgetExceeded> {
    at_most(TreeMachine::<true> { exps: t.exponents().to_vec() }, x, cap, budget)
}

/// `H_0(x) = x`, `H_{α+1}(x) = H_α(x+1)`, `H_λ(x) = H_{λ[x]}(x)`.
pub fn hardy_ord(alpha: &Ordinal, x: u64, budget: &Budget) -> Result<u64, BudgetExceeded> {
    ord_eval(alpha, x, budget, None).value
}

pub fn hardy_ord_traced(alpha: &Ordinal, x: u64, budget: &Budget, max_entries: usize) -> Evaluation {
    ord_eval(alpha, x, budget, Some(max_entries))
}

/// `H_t` with standard brackets.
pub fn hardy_tree(t: &TreeOrdinal, x: u64, budget: &Budget) -> Result<u64, BudgetExceeded> {
    tree_eval::<false>(t, x, budget, None).value
}

pub fn hardy_tree_traced(t: &TreeOrdinal, x: u64, budget: &Budget, max_entries: usize) -> Evaluation {
    tree_eval::<false>(t, x, budget, Some(max_entries))
}

/// `h_t`: worm-style brackets, and limit steps also raise the argument.
pub fn hardy_tree_wormstyle(t: &TreeOrdinal, x: u64, budget: &Budget) -> Result<u64, BudgetExceeded> {
    tree_eval::<true>(t, x, budget, None).value
}

pub fn hardy_tree_wormstyle_traced(t: &TreeOrdinal, x: u64, budget: &Budget, max_entries: usize) -> Evaluation {
    tree_eval::<true>(t, x, budget, Some(max_entries))
}

/// [`crate::battle::hardy_worm`] with a trace of the worms visited. Every step is
/// one step-down at the current argument.
pub fn hardy_worm_traced(a: &Worm, m: u64, budget: &Budget, max_entries: usize) -> Evaluation {
    let mut meter = budget.meter();
    let mut stack = AnyStack::new(a);
    let mut rec = Recorder::new(max_entries);
    let mut j = 0u64;
    let mut err = None;
    loop {
        if rec.active() {
            rec.push(j, stack.len() as u64, || IndexTerm::Worm(stack.to_worm()), m + j);
        }
        if stack.is_top() {
            break;
        }
        let limit = if rec.active() { 1 } else { u64::MAX };
        if let Err(e) = stack.run(m + j, limit, &mut meter, &mut j) {
            err = Some(e);
            break;
        }
    }
    let run = match err {
        None => Ok(Run { x: m + j, steps: j }),
        Some(e) => Err((e, j)),
    };
    finish(Flavor::HWorm, IndexTerm::Worm(a.clone()), m, run, Some(rec), |r| r.steps.max(1) - 1)
}
