//! Fast worm battles.
//!
//! The engine keeps the worm reversed in a `Vec`, so the leftmost entry is the
//! top of the stack and a step-down touches only the head. Runs of leading zeros
//! are chopped in one go. Natural-number worms run on `u64` entries.

use std::io::{self, Write};

use serde::Serialize;

use crate::budget::{Budget, Meter};
use crate::error::BudgetExceeded;
use crate::ordinal::Ordinal;
use crate::worm::Worm;

pub(crate) trait Entry: Clone + Ord {
    fn is_zero(&self) -> bool;
    fn is_successor(&self) -> bool;
    /// `self[k]`; for a successor this is the predecessor.
    fn fund(&self, k: u64) -> Self;
    fn to_ordinal(&self) -> Ordinal;
}

impl Entry for u64 {
    #[inline]
    fn is_zero(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn is_successor(&self) -> bool {
        *self > 0
    }
    #[inline]
    fn fund(&self, _: u64) -> Self {
        self.saturating_sub(1)
    }
    fn to_ordinal(&self) -> Ordinal {
        Ordinal::nat(*self)
    }
}

impl Entry for Ordinal {
    fn is_zero(&self) -> bool {
        Ordinal::is_zero(self)
    }
    fn is_successor(&self) -> bool {
        Ordinal::is_successor(self)
    }
    fn fund(&self, k: u64) -> Self {
        self.fund_seq(k)
    }
    fn to_ordinal(&self) -> Ordinal {
        self.clone()
    }
}

/// A worm under repeated step-down, stored leftmost-entry-last.
#[derive(Clone)]
pub(crate) struct Stack<E> {
    rev: Vec<E>,
}

impl<E: Entry> Stack<E> {
    pub(crate) fn new(mut entries: Vec<E>) -> Self {
        entries.reverse();
        Stack { rev: entries }
    }

    pub(crate) fn is_top(&self) -> bool {
        self.rev.is_empty()
    }

    pub(crate) fn len(&self) -> usize {
        self.rev.len()
    }

    pub(crate) fn leading(&self) -> Option<&E> {
        self.rev.last()
    }

    pub(crate) fn to_worm(&self) -> Worm {
        Worm::new(self.rev.iter().rev().map(Entry::to_ordinal).collect())
    }

    /// Number of consecutive zeros at the front.
    fn leading_zeros(&self) -> usize {
        self.rev.iter().rev().take_while(|e| e.is_zero()).count()
    }

    /// One application of `·⟦k⟧`.
    pub(crate) fn step(&mut self, k: u64, max_len: u64) -> Result<(), BudgetExceeded> {
        let Some(first) = self.rev.last() else {
            return Ok(());
        };
        if first.is_zero() {
            self.rev.pop();
        } else if first.is_successor() {
            let top = self.rev.len() - 1;
            let alpha = first.fund(0);
            // head: entries > α, i.e. ≥ α+1
            let mut start = top;
            while start > 0 && self.rev[start - 1] > alpha {
                start -= 1;
            }
            let head = (self.rev.len() - start) as u64;
            let new_len = k
                .checked_mul(head)
                .and_then(|extra| extra.checked_add(self.rev.len() as u64))
                .filter(|&n| n <= max_len)
                .ok_or_else(|| BudgetExceeded::term_size(max_len))?;
            self.rev[top] = alpha;
            self.rev.reserve(new_len as usize - self.rev.len());
            for _ in 0..k {
                self.rev.extend_from_within(start..start + head as usize);
            }
        } else {
            let top = self.rev.len() - 1;
            self.rev[top] = self.rev[top].fund(k);
        }
        Ok(())
    }

    /// Applies `·⟦k⟧, ·⟦k+1⟧, …` at most `limit` times, stopping at ⊤, and adds
    /// the number of applications made to `done`. Leading zeros are removed in bulk.
    pub(crate) fn run(&mut self, k: u64, limit: u64, meter: &mut Meter, done: &mut u64) -> Result<(), BudgetExceeded> {
        let max_len = meter.budget().max_term_size;
        let mut n_done = 0u64;
        let res = loop {
            if n_done == limit || self.is_top() {
                break Ok(());
            }
            let z = self.leading_zeros() as u64;
            let n = if z > 0 { z.min(limit - n_done).min(meter.remaining()).max(1) } else { 1 };
            if let Err(e) = meter.charge(n) {
                break Err(e);
            }
            if z > 0 {
                self.rev.truncate(self.rev.len() - n as usize);
            } else if let Err(e) = self.step(k + n_done, max_len) {
                break Err(e);
            }
            n_done += n;
        };
        *done += n_done;
        res
    }
}

/// A stack of whichever entry type fits the worm.
pub(crate) enum AnyStack {
    Nat(Stack<u64>),
    Ord(Stack<Ordinal>),
}

impl AnyStack {
    pub(crate) fn new(worm: &Worm) -> Self {
        match worm.as_nats() {
            Some(v) => AnyStack::Nat(Stack::new(v)),
            None => AnyStack::Ord(Stack::new(worm.entries().to_vec())),
        }
    }

    pub(crate) fn is_top(&self) -> bool {
        match self {
            AnyStack::Nat(s) => s.is_top(),
            AnyStack::Ord(s) => s.is_top(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        match self {
            AnyStack::Nat(s) => s.len(),
            AnyStack::Ord(s) => s.len(),
        }
    }

    pub(crate) fn leading(&self) -> Option<Ordinal> {
        match self {
            AnyStack::Nat(s) => s.leading().map(Entry::to_ordinal),
            AnyStack::Ord(s) => s.leading().cloned(),
        }
    }

    pub(crate) fn to_worm(&self) -> Worm {
        match self {
            AnyStack::Nat(s) => s.to_worm(),
            AnyStack::Ord(s) => s.to_worm(),
        }
    }

    #[cfg(test)]
    pub(crate) fn step(&mut self, k: u64, max_len: u64) -> Result<(), BudgetExceeded> {
        match self {
            AnyStack::Nat(s) => s.step(k, max_len),
            AnyStack::Ord(s) => s.step(k, max_len),
        }
    }

    pub(crate) fn run(&mut self, k: u64, limit: u64, meter: &mut Meter, done: &mut u64) -> Result<(), BudgetExceeded> {
        match self {
            AnyStack::Nat(s) => s.run(k, limit, meter, done),
            AnyStack::Ord(s) => s.run(k, limit, meter, done),
        }
    }
}

/// `h_A(m)`: the least `k` with `A⟦m⟧⟦m+1⟧…⟦m+k⟧ = ⊤`.
pub fn hardy_worm(a: &Worm, m: u64, budget: &Budget) -> Result<u64, BudgetExceeded> {
    let mut meter = budget.meter();
    let mut s = AnyStack::new(a);
    let mut apps = 0;
    s.run(m, u64::MAX, &mut meter, &mut apps)?;
    // ⊤ still needs its one application
    Ok(apps.max(1) - 1)
}

/// Whether `h_A(m) > c`, decided by making `c+1` applications and checking that
/// the worm is still alive. Much cheaper than [`hardy_worm`] when `h_A(m)` is huge.
pub fn hardy_worm_exceeds(a: &Worm, m: u64, c: u64, budget: &Budget) -> Result<bool, BudgetExceeded> {
    let mut meter = budget.meter();
    let mut s = AnyStack::new(a);
    let want = c.checked_add(1).ok_or_else(|| BudgetExceeded::steps(budget.max_steps))?;
    let mut done = 0;
    s.run(m, want, &mut meter, &mut done)?;
    Ok(done == want && !s.is_top())
}

/// The bracket iteration `A, A⟦m⟧, A⟦m⟧⟦m+1⟧, …`, one application at a time.
pub struct Descent {
    stack: AnyStack,
    next: u64,
    meter: Meter,
}

impl Descent {
    pub fn new(a: &Worm, m: u64, budget: &Budget) -> Self {
        Descent { stack: AnyStack::new(a), next: m, meter: budget.meter() }
    }

    pub fn is_top(&self) -> bool {
        self.stack.is_top()
    }

    pub fn len(&self) -> usize {
        self.stack.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stack.is_top()
    }

    /// The current worm. Costs time linear in its length.
    pub fn worm(&self) -> Worm {
        self.stack.to_worm()
    }

    /// Whether the current worm is `w`, without building it.
    pub fn is(&self, w: &Worm) -> bool {
        if w.len() != self.stack.len() {
            return false;
        }
        let e = w.entries().iter().rev();
        match &self.stack {
            AnyStack::Nat(s) => s.rev.iter().zip(e).all(|(a, b)| b.as_nat() == Some(*a)),
            AnyStack::Ord(s) => s.rev.iter().zip(e).all(|(a, b)| a == b),
        }
    }

    /// Index of the next application.
    pub fn next_index(&self) -> u64 {
        self.next
    }

    /// Applies `·⟦next_index⟧` once. A no-op on ⊤.
    pub fn advance(&mut self) -> Result<(), BudgetExceeded> {
        if self.stack.is_top() {
            return Ok(());
        }
        let mut done = 0;
        self.stack.run(self.next, 1, &mut self.meter, &mut done)?;
        self.next += done;
        Ok(())
    }
}

/// Where to keep full worms and where to fall back to summaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceConfig {
    /// Steps `0..full_limit` are recorded with the whole worm.
    pub full_limit: u64,
    /// After that, a record is kept every `checkpoint_every` steps.
    pub checkpoint_every: u64,
    /// Total worm entries kept across all records; past this, records carry only
    /// the length and leading entry.
    pub max_stored_entries: u64,
}

impl Default for TraceConfig {
    fn default() -> Self {
        TraceConfig { full_limit: 100_000, checkpoint_every: 100_000, max_stored_entries: 4_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BattleRecord {
    pub step: u64,
    pub length: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leading: Option<Ordinal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worm: Option<Worm>,
}

/// `A_0 = A`, `A_{k+1} = A_k⟦k+1⟧` until ⊤ or the budget runs out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BattleTrace {
    pub initial: Worm,
    pub records: Vec<BattleRecord>,
    /// The `m` with `A_m = ⊤`, if reached.
    pub death_step: Option<u64>,
    pub total_steps: u64,
    pub budget_exceeded: Option<BudgetExceeded>,
}

fn record(step: u64, s: &AnyStack, full: bool) -> BattleRecord {
    BattleRecord {
        step,
        length: s.len() as u64,
        leading: s.leading(),
        worm: full.then(|| s.to_worm()),
    }
}

pub fn battle(a: &Worm, budget: &Budget) -> BattleTrace {
    battle_with(a, budget, TraceConfig::default())
}

pub fn battle_with(a: &Worm, budget: &Budget, cfg: TraceConfig) -> BattleTrace {
    let mut meter = budget.meter();
    let mut s = AnyStack::new(a);
    let mut records = vec![record(0, &s, true)];
    let mut step = 0u64;
    let mut exceeded = None;
    let mut stored = a.len() as u64;
    let every = cfg.checkpoint_every.max(1);
    while !s.is_top() {
        let limit = if step < cfg.full_limit { 1 } else { (step / every + 1) * every - step };
        if let Err(e) = s.run(step + 1, limit, &mut meter, &mut step) {
            exceeded = Some(e);
            break;
        }
        if step < cfg.full_limit || step.is_multiple_of(every) || s.is_top() {
            let len = s.len() as u64;
            let full = stored + len <= cfg.max_stored_entries;
            if full {
                stored += len;
            }
            records.push(record(step, &s, full));
        }
    }
    let death_step = s.is_top().then_some(step);
    if death_step.is_none() && records.last().is_none_or(|r| r.step != step) {
        let full = stored + s.len() as u64 <= cfg.max_stored_entries;
        records.push(record(step, &s, full));
    }
    BattleTrace { initial: a.clone(), records, death_step, total_steps: step, budget_exceeded: exceeded }
}

/// Checks the trace against the plain step-down: consecutive full records must
/// chain, every record must be self-consistent, and a death step must end on ⊤.
pub fn validate_battle(trace: &BattleTrace) -> bool {
    let Some(first) = trace.records.first() else {
        return false;
    };
    if first.step != 0 || first.worm.as_ref() != Some(&trace.initial) {
        return false;
    }
    for r in &trace.records {
        if let Some(w) = &r.worm {
            if w.len() as u64 != r.length || w.first() != r.leading.as_ref() {
                return false;
            }
        }
        if (r.length == 0) != r.leading.is_none() {
            return false;
        }
    }
    for pair in trace.records.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        if b.step <= a.step || a.length == 0 {
            return false;
        }
        if let (Some(wa), Some(wb)) = (&a.worm, &b.worm) {
            if b.step == a.step + 1 && wa.step_down(b.step) != *wb {
                return false;
            }
        }
    }
    let last = trace.records.last().expect("nonempty");
    if last.step != trace.total_steps {
        return false;
    }
    match trace.death_step {
        Some(m) => m == last.step && last.length == 0 && trace.budget_exceeded.is_none(),
        None => last.length > 0 && trace.budget_exceeded.is_some(),
    }
}

#[derive(Serialize)]
struct Summary<'a> {
    initial: &'a Worm,
    #[serde(skip_serializing_if = "Option::is_none")]
    death_step: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    budget_exceeded: Option<String>,
    total_steps: u64,
}

impl BattleTrace {
    /// One JSON object per record, then a summary object.
    pub fn write_json_lines<W: Write>(&self, mut out: W) -> io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
        }
        let summary = Summary {
            initial: &self.initial,
            death_step: self.death_step,
            budget_exceeded: self.budget_exceeded.as_ref().map(ToString::to_string),
            total_steps: self.total_steps,
        };
        serde_json::to_writer(&mut out, &summary)?;
        out.write_all(b"\n")
    }

    /// `step,length,leading` rows.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "step,length,leading")?;
        for r in &self.records {
            let lead = r.leading.as_ref().map(ToString::to_string).unwrap_or_default();
            writeln!(out, "{},{},{}", r.step, r.length, lead)?;
        }
        Ok(())
    }
}
