//! The twelve acceptance criteria. Each prints one PASS/FAIL line; the test
//! fails if any criterion does.

use std::time::{Duration, Instant};

use ewd_core::battle::{battle, validate_battle, BattleTrace};
use ewd_core::hierarchy::{
    fast_growing, hardy_ord, hardy_ord_traced, hardy_tree_traced, hardy_tree_wormstyle_traced, hardy_worm,
    hardy_worm_traced, validate_trace, EvalTrace, IndexTerm,
};
use ewd_core::{Budget, Ordinal, TreeOrdinal, Worm};
use ewd_lab::checks::{
    check_battle_oracle, check_bridge, check_collapsed, check_composition, check_drop, check_h_comparison,
    check_h_vs_h, check_stepdown_descent, check_superexp_growth,
};
use ewd_lab::gen::{nat_worm, small_beta_cap};
use ewd_lab::{oracle, sweep, CheckReport, SweepReport, Verdict};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn w(s: &str) -> Worm {
    s.parse().unwrap()
}

fn o(s: &str) -> Ordinal {
    s.parse().unwrap()
}

/// Traces emitted while running the criteria, for criterion 12.
#[derive(Default)]
struct Traces {
    eval: Vec<EvalTrace>,
    battles: Vec<BattleTrace>,
}

impl Traces {
    fn keep(&mut self, t: Option<EvalTrace>) {
        self.eval.push(t.expect("traced evaluation"));
    }
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn all_pass(reports: &[CheckReport]) -> bool {
    !reports.is_empty() && reports.iter().all(|r| r.verdict == Verdict::Pass)
}

fn c1(tr: &mut Traces) -> Outcome {
    let b = Budget::default();
    let golden = [("0", 1), ("1", 3), ("0.0", 2), ("2", 51), ("w", 5)];
    let mut bad = Vec::new();
    for (s, m) in golden {
        let trace = battle(&w(s), &b);
        let plain = oracle::battle_worms(&w(s), &b).map(|v| v.len() as u64 - 1);
        let agree = check_battle_oracle(&w(s), &b).verdict == Verdict::Pass;
        if trace.death_step != Some(m) || plain != Ok(m) || !agree {
            bad.push(format!("{s}: engine {:?}, oracle {plain:?}", trace.death_step));
        }
        tr.battles.push(trace);
    }
    outcome(bad.is_empty(), if bad.is_empty() { "m = 1, 3, 2, 51, 5".into() } else { bad.join("; ") })
}

fn c2(tr: &mut Traces) -> Outcome {
    let b = Budget::default();
    let one = w("1");
    let bad: Vec<u64> = (0..=200).filter(|&n| hardy_worm(&one, n, &b) != Ok(n + 1)).collect();
    let oracle_ok = (0..=200).step_by(20).all(|n| oracle::hardy_worm(&one, n, &b) == Ok(n + 1));
    for n in (0..=200).step_by(10) {
        tr.keep(hardy_worm_traced(&one, n, &b, 1000).trace);
    }
    outcome(bad.is_empty() && oracle_ok, format!("h_1(n) = n+1 for n <= 200; mismatches {bad:?}"))
}

fn c3() -> Outcome {
    let mut reports = Vec::new();
    for i in 0..1000 {
        let mut rng = ewd_lab::sweep::instance_rng(42, i);
        let a = nat_worm(&mut rng, 1, 8, 4);
        reports.extend((0..=5).map(|k| check_stepdown_descent(&a, k)));
    }
    let pass = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
    outcome(pass == reports.len(), format!("{pass}/{} pass", reports.len()))
}

fn c4() -> Outcome {
    let r = sweep("tau_naturality", 1000, 7, &Budget::default()).unwrap();
    let t = r.total();
    outcome(t.pass == 1000, format!("{}/1000 pass", t.pass))
}

fn small_worms(max_len: usize, max_entry: u64) -> Vec<Worm> {
    let mut out = vec![Worm::top()];
    let mut layer = vec![Vec::<u64>::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|v| {
                (0..=max_entry).map(move |e| {
                    let mut v = v.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().map(|v| Worm::from_nats(v)));
    }
    out
}

fn constants(reports: &[CheckReport], budget: Budget) -> SweepReport {
    SweepReport::from_reports("grid", reports.len() as u64, 0, budget, reports)
}

fn c5() -> Outcome {
    let b = Budget::default();
    let mut reports = Vec::new();
    for a in small_worms(3, 1) {
        for x in 0..=3 {
            reports.push(check_bridge(&a, x, &b));
        }
    }
    let agg = constants(&reports, b);
    let values = &agg.constants["c*"];
    let single = values.len() == 1 && values.keys().all(|c| (1..=2).contains(c));
    let odd: Vec<String> = agg.inconsistent.iter().take(4).map(|r| r.instance.to_string()).collect();
    outcome(
        all_pass(&reports) && single,
        format!("c* values (value: count) {values:?}; off the modal value: {} e.g. {}", agg.inconsistent.len(), odd.join(" ")),
    )
}

fn c6() -> Outcome {
    let b = Budget::default();
    let set = ["T", "0", "1", "0.0", "0.1"];
    let mut reports = Vec::new();
    for bs in set {
        for a_s in set {
            for n in 0..=4 {
                reports.push(check_composition(&w(bs), &w(a_s), n, &b));
            }
        }
    }
    let agg = constants(&reports, b);
    let strict_fail: Vec<String> =
        reports.iter().filter(|r| r.verdict != Verdict::Pass).map(|r| r.instance.to_string()).collect();
    outcome(
        strict_fail.is_empty() && agg.constants_are_constant(),
        format!(
            "shift values {:?}; strict inequality fails on {} instances, e.g. {}",
            agg.constants.get("shift"),
            strict_fail.len(),
            strict_fail.first().cloned().unwrap_or_default()
        ),
    )
}

fn c7() -> Outcome {
    let b = Budget::default();
    let mut ok = true;
    let mut unknown = 0;
    for n in 0..=4 {
        for r in check_superexp_growth(n, &b) {
            let must_pass = match r.lemma.as_str() {
                "superexp_h11" => true,
                "superexp_h111" => n <= 2,
                _ => n == 0,
            };
            ok &= r.verdict != Verdict::Fail && (!must_pass || r.verdict == Verdict::Pass);
            unknown += u32::from(r.verdict == Verdict::BudgetUnknown);
        }
    }
    outcome(ok, format!("required legs pass, {unknown} legs budget-unknown, none fail"))
}

fn c8() -> Outcome {
    let b = Budget::default();
    let mut lines = Vec::new();
    let mut ok = true;
    for suite in ["cr_step", "norm_bound", "norm_term_step", "r_tilde_step", "norm_difference"] {
        let reports = ewd_lab::sweep_reports(suite, 1000, 8, &b).unwrap();
        let pass = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
        ok &= pass == 1000;
        lines.push(format!("{suite} {pass}/1000"));
        for r in reports.iter().filter(|r| r.verdict == Verdict::Fail).take(3) {
            lines.push(format!("fails on {} with {:?}", r.instance, r.witnesses));
        }
    }
    outcome(ok, lines.join(", "))
}

/// Trees of up to four summands with exponents 0, 1 or 2, and collapse at most ω^2·3.
fn grid_trees() -> Vec<TreeOrdinal> {
    let exps = [TreeOrdinal::zero(), TreeOrdinal::nat(1), TreeOrdinal::nat(2)];
    let mut out = vec![TreeOrdinal::zero()];
    let mut layer = vec![Vec::<TreeOrdinal>::new()];
    for _ in 0..4 {
        layer = layer
            .iter()
            .flat_map(|v| {
                exps.iter().map(move |e| {
                    let mut v = v.clone();
                    v.push(e.clone());
                    v
                })
            })
            .collect();
        out.extend(layer.iter().map(|v| TreeOrdinal::from_exponents(v.clone())));
    }
    out.retain(|t| t.collapse() <= small_beta_cap());
    out
}

fn c9(tr: &mut Traces) -> Outcome {
    let b = Budget::with_steps(10_000_000);
    let mut reports = Vec::new();
    let trees = grid_trees();
    for t in &trees {
        let ot = t.collapse();
        let mut betas = vec![ot.clone(), ot.succ(), ot.add(&Ordinal::omega()), small_beta_cap()];
        betas.retain(|beta| *beta <= small_beta_cap());
        betas.dedup();
        for n in 0..=4 {
            for m in 0..=10 {
                for beta in &betas {
                    reports.push(check_h_comparison(t, beta, n, m, &b));
                }
                reports.push(check_h_vs_h(t, n, m, &b));
            }
        }
        if t.node_count() <= 4 {
            tr.keep(hardy_tree_traced(t, 2, &b, 100_000).trace);
            tr.keep(hardy_tree_wormstyle_traced(t, 1, &b, 100_000).trace);
        }
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let doubling = (0..=5u64).all(|z| {
        (0..=6u64).all(|x| hardy_ord(&Ordinal::omega_pow(Ordinal::nat(2)).fund_seq(z), x, &b) == Ok((1 << z) * x))
    });
    let drop_exact = hardy_ord(&o("w*2"), 6, &b) == Ok(24)
        && hardy_ord(&o("w^2"), 3, &b) == Ok(24)
        && check_drop(&"w^2".parse().unwrap(), 2, 1, &b).verdict == Verdict::Pass;
    tr.keep(hardy_ord_traced(&o("w*2"), 6, &b, 1000).trace);
    tr.keep(hardy_ord_traced(&o("w^2"), 3, &b, 1000).trace);
    let (pass, fail) = (count(Verdict::Pass), count(Verdict::Fail));
    outcome(
        fail == 0 && pass > 0 && doubling && drop_exact,
        format!(
            "{} trees: {pass} pass, {fail} fail, {} budget-unknown, {} outside hypotheses; doubling exact {doubling}; drop exact {drop_exact}",
            trees.len(),
            count(Verdict::BudgetUnknown),
            count(Verdict::Skipped)
        ),
    )
}

fn c10(tr: &mut Traces) -> Outcome {
    let b = Budget::default();
    let mut alphas = vec![Ordinal::omega_pow(Ordinal::nat(3))];
    for a in 0..=3 {
        for bb in 0..=3 {
            for c in 0..=3 {
                let mono = |e: u64, k: u64| Ordinal::monomial(Ordinal::nat(e), k);
                alphas.push(mono(2, a).add(&mono(1, bb)).add(&Ordinal::nat(c)));
            }
        }
    }
    let mut agree = 0;
    let mut fail = Vec::new();
    for alpha in &alphas {
        for x in 0..=6 {
            let r = check_collapsed(alpha, x, &b);
            match r.verdict {
                Verdict::Pass => agree += 1,
                Verdict::Skipped => {}
                _ => fail.push(r.instance.to_string()),
            }
        }
    }
    for alpha in alphas.iter().take(8) {
        tr.keep(hardy_ord_traced(alpha, 2, &b, 100_000).trace);
    }
    outcome(fail.is_empty() && agree > 0, format!("{agree} agreements, disagreements {fail:?}"))
}

fn c11() -> Outcome {
    let b = Budget::default();
    let exact = fast_growing(&o("0"), 1, &b) == Ok(BigUint::from(2u32))
        && fast_growing(&o("0"), 2, &b) == Ok(BigUint::from(16u32))
        && fast_growing(&o("0"), 3, &b) == Ok(BigUint::from(1u32) << 256usize);
    let mut unknown = true;
    for a in ["1", "2", "3", "w", "w+1", "w^2"] {
        for x in 2..=3 {
            unknown &= fast_growing(&o(a), x, &b).is_err();
        }
    }
    outcome(exact && unknown, format!("exact values {exact}; alpha >= 1, x >= 2 budget-unknown {unknown}"))
}

fn mutate_eval(t: &EvalTrace, rng: &mut ChaCha8Rng) -> EvalTrace {
    let mut m = t.clone();
    let i = rng.gen_range(0..m.entries.len());
    match rng.gen_range(0..5) {
        0 => m.entries[i].argument += 1,
        1 => m.entries[i].step += 1,
        2 => {
            m.entries[i].index_term = match &m.entries[i].index_term {
                IndexTerm::Ord(o) => IndexTerm::Ord(o.succ()),
                IndexTerm::Tree(t) => IndexTerm::Tree(t.concat(&TreeOrdinal::one())),
                IndexTerm::Worm(w) => IndexTerm::Worm(w.prepend(Ordinal::zero())),
            }
        }
        3 => m.input += 1,
        _ => m.total_steps += 1,
    }
    m
}

fn mutate_battle(t: &BattleTrace, rng: &mut ChaCha8Rng) -> BattleTrace {
    let mut m = t.clone();
    let i = rng.gen_range(0..m.records.len());
    match rng.gen_range(0..5) {
        0 => m.records[i].length += 1,
        1 => m.records[i].step += 1,
        2 => {
            let w = m.records[i].worm.take().expect("full record");
            m.records[i].worm = Some(w.prepend(Ordinal::zero()));
        }
        3 => m.death_step = m.death_step.map(|d| d + 1),
        _ => m.total_steps += 1,
    }
    m
}

fn c12(tr: &Traces) -> Outcome {
    let valid_eval = tr.eval.iter().filter(|t| validate_trace(t)).count();
    let valid_battle = tr.battles.iter().filter(|t| validate_battle(t)).count();
    let all_valid = valid_eval == tr.eval.len() && valid_battle == tr.battles.len();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let eval: Vec<&EvalTrace> = tr.eval.iter().filter(|t| !t.truncated && t.entries.len() > 1).collect();
    let mut caught = 0;
    for k in 0..100 {
        let rejected = if k % 2 == 0 {
            !validate_trace(&mutate_eval(eval[rng.gen_range(0..eval.len())], &mut rng))
        } else {
            !validate_battle(&mutate_battle(&tr.battles[rng.gen_range(0..tr.battles.len())], &mut rng))
        };
        caught += u32::from(rejected);
    }
    outcome(
        all_valid && caught == 100,
        format!(
            "{valid_eval}/{} eval traces and {valid_battle}/{} battle traces valid; {caught}/100 mutations rejected",
            tr.eval.len(),
            tr.battles.len()
        ),
    )
}

#[test]
fn acceptance() {
    let mut traces = Traces::default();
    let mut failed = Vec::new();
    let mut run = |id: u32, name: &str, limit: u64, f: &mut dyn FnMut(&mut Traces) -> Outcome| {
        let start = Instant::now();
        let out = f(&mut traces);
        let took = start.elapsed();
        let ok = out.ok && took <= Duration::from_secs(limit);
        println!(
            "criterion {id:>2} {}: {name} ({:.2}s, limit {limit}s): {}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            out.detail
        );
        if !ok {
            failed.push(id);
        }
    };
    run(1, "battle golden values", 1, &mut |t| c1(t));
    run(2, "h_1(n) = n+1", 1, &mut |t| c2(t));
    run(3, "step-down descent sweep", 30, &mut |_| c3());
    run(4, "tau naturality sweep", 10, &mut |_| c4());
    run(5, "bridge constancy", 30, &mut |_| c5());
    run(6, "composition shift and strict inequality", 60, &mut |_| c6());
    run(7, "growth corollaries", 120, &mut |_| c7());
    run(8, "tree-ordinal lemma sweeps", 60, &mut |_| c8());
    run(9, "Hardy comparison theorems, doubling, drop", 120, &mut |t| c9(t));
    run(10, "collapsed evaluator cross-validation", 60, &mut |t| c10(t));
    run(11, "fast-growing exact values", 5, &mut |_| c11());
    run(12, "trace validity and mutations", 10, &mut |t| c12(t));
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
