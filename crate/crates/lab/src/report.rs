use std::collections::BTreeMap;
use std::fmt;

use ewd_core::Budget;
use serde::Serialize;

use crate::instance::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// A budget ran out before the statement could be decided.
    BudgetUnknown,
    /// The instance is outside the statement's hypotheses.
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::BudgetUnknown => "budget-unknown",
            Verdict::Skipped => "skipped",
        })
    }
}

/// Outcome of checking one statement on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub lemma: String,
    pub instance: Instance,
    pub verdict: Verdict,
    /// Named values computed along the way, in decimal.
    pub witnesses: BTreeMap<String, String>,
    /// Additive constants this instance pins down, such as a shift or `c*`.
    pub constants: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Position in the sweep, for replay.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn new(lemma: &str, instance: Instance) -> Self {
        CheckReport {
            lemma: lemma.to_string(),
            instance,
            verdict: Verdict::Pass,
            witnesses: BTreeMap::new(),
            constants: BTreeMap::new(),
            seed: None,
            index: None,
            note: None,
        }
    }

    pub fn witness(mut self, name: &str, value: impl ToString) -> Self {
        self.witnesses.insert(name.to_string(), value.to_string());
        self
    }

    pub fn constant(mut self, name: &str, value: i64) -> Self {
        self.constants.insert(name.to_string(), value);
        self
    }

    pub fn verdict(mut self, v: Verdict) -> Self {
        self.verdict = v;
        self
    }

    /// Pass when `ok`, fail otherwise.
    pub fn holds(self, ok: bool) -> Self {
        self.verdict(if ok { Verdict::Pass } else { Verdict::Fail })
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.note = Some(text.into());
        self
    }

    pub fn unknown(self, why: impl fmt::Display) -> Self {
        let text = why.to_string();
        self.verdict(Verdict::BudgetUnknown).note(text)
    }

    pub fn skipped(self, why: impl Into<String>) -> Self {
        self.verdict(Verdict::Skipped).note(why)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: u64,
    pub fail: u64,
    pub budget_unknown: u64,
    pub skipped: u64,
}

impl Counts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::BudgetUnknown => self.budget_unknown += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }
}

/// Aggregate of a sweep: counts per lemma, the fitted constants and the
/// counterexamples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub suite: String,
    pub count: u64,
    pub seed: u64,
    pub budget: Budget,
    pub counts: BTreeMap<String, Counts>,
    /// For each named constant, how many instances produced each value.
    pub constants: BTreeMap<String, BTreeMap<i64, u64>>,
    /// Instances whose constant differs from the most common value.
    pub inconsistent: Vec<CheckReport>,
    pub counterexamples: Vec<CheckReport>,
}

/// Counterexamples kept per sweep.
const MAX_COUNTEREXAMPLES: usize = 20;

impl SweepReport {
    pub fn from_reports(suite: &str, count: u64, seed: u64, budget: Budget, reports: &[CheckReport]) -> Self {
        let mut counts: BTreeMap<String, Counts> = BTreeMap::new();
        let mut constants: BTreeMap<String, BTreeMap<i64, u64>> = BTreeMap::new();
        let mut counterexamples = Vec::new();
        for r in reports {
            counts.entry(r.lemma.clone()).or_default().add(r.verdict);
            for (k, v) in &r.constants {
                *constants.entry(k.clone()).or_default().entry(*v).or_default() += 1;
            }
            if r.verdict == Verdict::Fail && counterexamples.len() < MAX_COUNTEREXAMPLES {
                counterexamples.push(r.clone());
            }
        }
        let mut inconsistent = Vec::new();
        for (name, values) in &constants {
            if values.len() < 2 {
                continue;
            }
            let modal = values.iter().max_by_key(|(v, n)| (**n, -**v)).map(|(v, _)| *v).expect("nonempty");
            inconsistent.extend(
                reports
                    .iter()
                    .filter(|r| r.constants.get(name).is_some_and(|v| *v != modal))
                    .take(MAX_COUNTEREXAMPLES)
                    .cloned(),
            );
        }
        SweepReport { suite: suite.to_string(), count, seed, budget, counts, constants, inconsistent, counterexamples }
    }

    pub fn total(&self) -> Counts {
        let mut t = Counts::default();
        for c in self.counts.values() {
            t.pass += c.pass;
            t.fail += c.fail;
            t.budget_unknown += c.budget_unknown;
            t.skipped += c.skipped;
        }
        t
    }

    /// Every fitted constant took a single value.
    pub fn constants_are_constant(&self) -> bool {
        self.constants.values().all(|v| v.len() <= 1)
    }

    /// No failures and no drifting constants.
    pub fn ok(&self) -> bool {
        self.total().fail == 0 && self.constants_are_constant()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} ({} instances, seed {})", self.suite, self.count, self.seed)?;
        writeln!(
            f,
            "budget: {} steps, {} bits, {} nodes",
            self.budget.max_steps, self.budget.max_bits, self.budget.max_term_size
        )?;
        for (lemma, c) in &self.counts {
            writeln!(
                f,
                "  {lemma}: {} pass, {} fail, {} budget-unknown, {} skipped",
                c.pass, c.fail, c.budget_unknown, c.skipped
            )?;
        }
        for (name, values) in &self.constants {
            let list: Vec<String> = values.iter().map(|(v, n)| format!("{v} (x{n})")).collect();
            writeln!(f, "  constant {name}: {}", list.join(", "))?;
        }
        for r in self.counterexamples.iter().chain(&self.inconsistent) {
            writeln!(f, "  counterexample [{}] {}: {}", r.index.map(|i| i.to_string()).unwrap_or_default(), r.lemma, r.instance)?;
            for (k, v) in &r.witnesses {
                writeln!(f, "      {k} = {v}")?;
            }
        }
        Ok(())
    }
}
