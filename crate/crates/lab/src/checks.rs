//! One checker per statement. Each takes a concrete instance and a budget and
//! returns a [`CheckReport`]; running out of budget gives
//! [`Verdict::BudgetUnknown`](crate::Verdict::BudgetUnknown), never a pass or a fail.

use ewd_core::battle::battle;
use ewd_core::hierarchy::{
    collapsed_hardy, fast_growing, hardy_ord, hardy_ord_at_most, hardy_tree, hardy_tree_at_most, hardy_tree_wormstyle,
    hardy_tree_wormstyle_at_most, hardy_worm, hardy_worm_exceeds, superexp, BigSummary,
};
use ewd_core::worm::{lt0, sub_m};
use ewd_core::{Budget, BudgetExceeded, Descent, Ordinal, TreeOrdinal, Worm};
use num_bigint::BigUint;

use crate::instance::Instance;
use crate::oracle;
use crate::report::CheckReport;

/// Decimal digits kept in witnesses before switching to a summary.
const WITNESS_DIGITS: u64 = 60;

fn big(v: &BigUint) -> String {
    BigSummary::of(v, WITNESS_DIGITS).to_string()
}

/// `A⟦k⟧ <₀ A`.
pub fn check_stepdown_descent(a: &Worm, k: u64) -> CheckReport {
    let r = CheckReport::new("stepdown_descent", Instance::Stepdown { worm: a.clone(), k });
    if a.is_top() {
        return r.skipped("the worm is ⊤");
    }
    let next = a.step_down(k);
    match (next.ordinal(), a.ordinal(), lt0(&next, a)) {
        (Ok(p), Ok(q), Ok(lt)) => r.witness("o(A[k])", p).witness("o(A)", q).holds(lt),
        (_, _, Err(e)) | (Err(e), _, _) | (_, Err(e), _) => r.skipped(e.to_string()),
    }
}

/// `τ(A⟦x⟧) = τ(A)⟦x+1⟧`.
pub fn check_tau_naturality(a: &Worm, x: u64) -> CheckReport {
    let r = CheckReport::new("tau_naturality", Instance::TauNaturality { worm: a.clone(), x });
    if a.is_top() {
        return r.skipped("the worm is ⊤");
    }
    match (a.step_down(x).tau(), a.tau()) {
        (Ok(lhs), Ok(t)) => {
            let rhs = t.fs_worm(x as usize + 1);
            let ok = lhs == rhs;
            r.witness("tau(A[x])", &lhs).witness("tau(A)[x+1]", &rhs).holds(ok)
        }
        (Err(e), _) | (_, Err(e)) => r.skipped(e.to_string()),
    }
}

/// `h_A(x) + x + c* = h_{τ(A)}(x+1)`; records `c*` for the sweep to compare.
pub fn check_bridge(a: &Worm, x: u64, budget: &Budget) -> CheckReport {
    let r = CheckReport::new("bridge", Instance::Bridge { worm: a.clone(), x });
    let t = match a.tau() {
        Ok(t) => t,
        Err(e) => return r.skipped(e.to_string()),
    };
    let lhs = match hardy_worm(a, x, budget) {
        Ok(v) => v,
        Err(e) => return r.unknown(e),
    };
    let rhs = match hardy_tree_wormstyle(&t, x + 1, budget) {
        Ok(v) => v,
        Err(e) => return r.witness("h_A(x)", lhs).unknown(e),
    };
    let c = rhs as i64 - lhs as i64 - x as i64;
    r.witness("h_A(x)", lhs).witness("h_tau(A)(x+1)", rhs).witness("tau(A)", &t).constant("c*", c)
}

/// `h_{B0A}(n)` against `h_A(n + h_B(n) + 2) + h_B(n) + 1`, recording the shift,
/// and the strict inequality `h_{B0A}(n) > h_A(h_B(n))`.
pub fn check_composition(b: &Worm, a: &Worm, n: u64, budget: &Budget) -> CheckReport {
    let r = CheckReport::new("composition", Instance::Composition { b: b.clone(), a: a.clone(), n });
    let b0a = b.concat(&Worm::from_nats(&[0])).concat(a);
    let run = || -> Result<CheckReport, BudgetExceeded> {
        let lhs = hardy_worm(&b0a, n, budget)?;
        let hb = hardy_worm(b, n, budget)?;
        let inner = hardy_worm(a, hb, budget)?;
        let r = r.clone().witness("h_B0A(n)", lhs).witness("h_B(n)", hb).witness("h_A(h_B(n))", inner);
        let arg = n.checked_add(hb).and_then(|v| v.checked_add(2)).ok_or_else(|| BudgetExceeded::steps(budget.max_steps))?;
        let far = match hardy_worm(a, arg, budget) {
            Ok(v) => v,
            Err(e) => return Ok(r.unknown(e)),
        };
        let rhs = far + hb + 1;
        let shift = lhs as i64 - rhs as i64;
        Ok(r.witness("rhs", rhs).constant("shift", shift).holds(lhs > inner))
    };
    run().unwrap_or_else(|e| r.unknown(e))
}

/// `h_{1A}(n) > h_A^{(n)}(n)` for `A ∈ W_1`.
pub fn check_growth(a: &Worm, n: u64, budget: &Budget) -> CheckReport {
    let r = CheckReport::new("growth", Instance::Growth { worm: a.clone(), n });
    if a.as_nats().is_none_or(|v| v.contains(&0)) {
        return r.skipped("entries must be naturals ≥ 1");
    }
    let mut v = n;
    for _ in 0..n {
        v = match hardy_worm(a, v, budget) {
            Ok(v) => v,
            Err(e) => return r.unknown(e),
        };
    }
    let one_a = a.prepend(Ordinal::one());
    match hardy_worm_exceeds(&one_a, n, v, budget) {
        Ok(ok) => r.witness("h_A^(n)(n)", v).holds(ok),
        Err(e) => r.witness("h_A^(n)(n)", v).unknown(e),
    }
}

/// The three superexponential growth legs: `h_11(n) > 2n`, `h_111(n) > 2^n`
/// and `h_1111(n) > 2^n_n`, each certified by running past the bound.
pub fn check_superexp_growth(n: u64, budget: &Budget) -> Vec<CheckReport> {
    let legs: [(&str, &[u64], Result<BigUint, BudgetExceeded>); 3] = [
        ("superexp_h11", &[1, 1], Ok(BigUint::from(2 * n))),
        ("superexp_h111", &[1, 1, 1], superexp(n, 1, budget)),
        ("superexp_h1111", &[1, 1, 1, 1], superexp(n, n, budget)),
    ];
    legs.into_iter()
        .map(|(lemma, entries, bound)| {
            let r = CheckReport::new(lemma, Instance::Superexp { n });
            let bound = match bound {
                Ok(v) => v,
                Err(e) => return r.unknown(e),
            };
            let r = r.witness("bound", big(&bound));
            let Some(c) = u64::try_from(&bound).ok().filter(|&c| c < budget.max_steps) else {
                return r.unknown(BudgetExceeded::steps(budget.max_steps));
            };
            match hardy_worm_exceeds(&Worm::from_nats(entries), n, c, budget) {
                Ok(ok) => r.holds(ok),
                Err(e) => r.unknown(e),
            }
        })
        .collect()
}

/// Runs the bracket iteration of `a` from index `m` until every target has
/// been seen or ⊤ is reached. Returns which targets were seen.
fn reached(a: &Worm, m: u64, targets: &[Worm], budget: &Budget) -> Result<Vec<bool>, BudgetExceeded> {
    let mut seen = vec![false; targets.len()];
    let mut d = Descent::new(a, m, budget);
    loop {
        for (s, t) in seen.iter_mut().zip(targets) {
            *s |= d.is(t);
        }
        if seen.iter().all(|&s| s) || d.is_top() {
            return Ok(seen);
        }
        d.advance()?;
    }
}

/// If `B ⊴_m A`, the bracket iteration of `A` from `m` passes through `B`.
pub fn check_reach(a: &Worm, b: &Worm, m: u64, budget: &Budget) -> CheckReport {
    let r = CheckReport::new("reach", Instance::Reach { a: a.clone(), b: b.clone(), m });
    if !sub_m(b, a, m) {
        return r.skipped("B is not below A at m");
    }
    match reached(a, m, std::slice::from_ref(b), budget) {
        Ok(seen) => r.holds(seen[0]),
        Err(e) => r.unknown(e),
    }
}

/// If `B ⊴_m A`, the bracket iteration of `A` from `m` passes through `B⟦j⟧`
/// for every `j ≤ m`.
pub fn check_reach_corollary(a: &Worm, b: &Worm, m: u64, budget: &Budget) -> CheckReport {
    let r = CheckReport::new("reach_corollary", Instance::Reach { a: a.clone(), b: b.clone(), m });
    if !sub_m(b, a, m) {
        return r.skipped("B is not below A at m");
    }
    let targets: Vec<Worm> = (0..=m).map(|j| b.step_down(j)).collect();
    if targets.iter().any(|t| t.len() as u64 > budget.max_term_size) {
        return r.unknown(BudgetExceeded::term_size(budget.max_term_size));
    }
    match reached(a, m, &targets, budget) {
        Ok(seen) => {
            let missing: Vec<String> = (0..=m).filter(|&j| !seen[j as usize]).map(|j| j.to_string()).collect();
            let r = r.holds(missing.is_empty());
            if missing.is_empty() {
                r
            } else {
                r.witness("missing j", missing.join(","))
            }
        }
        Err(e) => r.unknown(e),
    }
}

/// If `B ⊴_y A` and `x ≤ y` then `h_B(x) ≤ h_A(y)`.
pub fn check_monotonicity(a: &Worm, b: &Worm, x: u64, y: u64, budget: &Budget) -> CheckReport {
    let r = CheckReport::new("monotonicity", Instance::Monotonicity { a: a.clone(), b: b.clone(), x, y });
    if !sub_m(b, a, y) || x > y {
        return r.skipped("hypotheses not met");
    }
    let hb = match hardy_worm(b, x, budget) {
        Ok(v) => v,
        Err(e) => return r.unknown(e),
    };
    let r = r.witness("h_B(x)", hb);
    if hb == 0 {
        return r.holds(true);
    }
    // h_A(y) ≥ h_B(x) iff h_A(y) > h_B(x) - 1
    match hardy_worm_exceeds(a, y, hb - 1, budget) {
        Ok(ok) => r.holds(ok),
        Err(e) => r.unknown(e),
    }
}

/// `Cr(t[x]) ≤ Cr(t)`. The set-sum reading of `Cr` is reported alongside.
pub fn check_cr_step(t: &TreeOrdinal, x: u64) -> CheckReport {
    let r = CheckReport::new("cr_step", Instance::CrStep { t: t.clone(), x });
    let next = t.fs_std(x as usize);
    let (a, b) = (next.correction(), t.correction());
    let set_sum_ok = next.correction_set_sum() <= t.correction_set_sum();
    r.witness("Cr(t[x])", a).witness("Cr(t)", b).witness("set-sum reading holds", set_sum_ok).holds(a <= b)
}

/// For `α < β`, `x ≥ 2` and `Nα ≤ Nβ + x - 2`: `α ≤ β[x]`, strictly with
/// `Nα ≤ N(β[x]) + x - 2` when `β` is a limit.
pub fn check_norm_bound(alpha: &Ordinal, beta: &Ordinal, x: u64) -> CheckReport {
    let r = CheckReport::new("norm_bound", Instance::NormBound { alpha: alpha.clone(), beta: beta.clone(), x });
    if !(alpha < beta && x >= 2 && alpha.norm() + 2 <= beta.norm() + x) {
        return r.skipped("hypotheses not met");
    }
    let bx = beta.fund_seq(x);
    let ok = if beta.is_limit() { *alpha < bx && alpha.norm() + 2 <= bx.norm() + x } else { *alpha <= bx };
    r.witness("beta[x]", &bx).witness("N(beta[x])", bx.norm()).holds(ok)
}

/// For `x ≥ 2`: `o(t[x]) ≤ o(t)[x+Cr(t)]` and
/// `N(o(t[x])) ≤ N(o(t)[x+Cr(t)]) + x + Cr(t) - 2`.
pub fn check_norm_term_step(t: &TreeOrdinal, x: u64) -> CheckReport {
    let r = CheckReport::new("norm_term_step", Instance::NormTermStep { t: t.clone(), x });
    if x < 2 {
        return r.skipped("x < 2");
    }
    let c = t.correction();
    let lhs = t.fs_std(x as usize).collapse();
    let rhs = t.collapse().fund_seq(x + c);
    let ok = lhs <= rhs && lhs.norm() + 2 <= rhs.norm() + x + c;
    r.witness("o(t[x])", &lhs).witness("o(t)[x+Cr(t)]", &rhs).witness("Cr(t)", c).holds(ok)
}

/// If `t R̃ u` then `t⟦x⟧ R u[x]`.
pub fn check_r_tilde_step(t: &TreeOrdinal, u: &TreeOrdinal, x: u64) -> CheckReport {
    let r = CheckReport::new("r_tilde_step", Instance::RTildeStep { t: t.clone(), u: u.clone(), x });
    if !t.reduces_end(u) {
        return r.skipped("t does not end-agreeably reduce to u");
    }
    let lhs = t.fs_worm(x as usize);
    let rhs = u.fs_std(x as usize);
    let ok = lhs.reduces(&rhs);
    r.witness("t[[x]]", &lhs).witness("u[x]", &rhs).holds(ok)
}

/// For limits `t R̃ u` and `x ≥ 1`:
/// `N(t⟦x⟧) - N(u[x]) ≤ N(t[x]) - N(u[x]) + x ≤ x(Nt - Nu + 1)`.
pub fn check_norm_difference(t: &TreeOrdinal, u: &TreeOrdinal, x: u64) -> CheckReport {
    let r = CheckReport::new("norm_difference", Instance::NormDifference { t: t.clone(), u: u.clone(), x });
    if !(t.is_limit() && u.is_limit() && x >= 1 && t.reduces_end(u)) {
        return r.skipped("hypotheses not met");
    }
    let n = |s: &TreeOrdinal| s.norm() as i64;
    let xi = x as i64;
    let ux = n(&u.fs_std(x as usize));
    let left = n(&t.fs_worm(x as usize)) - ux;
    let mid = n(&t.fs_std(x as usize)) - ux + xi;
    let right = xi * (n(t) - n(u) + 1);
    r.witness("left", left).witness("middle", mid).witness("right", right).holds(left <= mid && mid <= right)
}

/// `2x ≤ H_{ω^s}(x)` for `x > 0`, `s ≠ 0`, and `2^z x ≤ H_{ω^s[z]}(x)` for
/// `z > 1`, `s ≥ 2`.
pub fn check_doubling(s: &Ordinal, x: u64, z: u64, budget: &Budget) -> Vec<CheckReport> {
    let inst = Instance::Doubling { s: s.clone(), x, z };
    let w = Ordinal::omega_pow(s.clone());
    let below = |idx: &Ordinal, bound: u64, r: CheckReport| match bound.checked_sub(1) {
        None => r.holds(true),
        Some(cap) => match hardy_ord_at_most(idx, x, cap, budget) {
            Ok(under) => r.holds(!under),
            Err(e) => r.unknown(e),
        },
    };
    let mut out = Vec::new();
    let r = CheckReport::new("doubling_linear", inst.clone());
    out.push(if s.is_zero() || x == 0 { r.skipped("hypotheses not met") } else { below(&w, 2 * x, r) });
    let r = CheckReport::new("doubling_exp", inst);
    out.push(if z <= 1 || *s < Ordinal::nat(2) {
        r.skipped("hypotheses not met")
    } else {
        match 1u64.checked_shl(z as u32).and_then(|p| p.checked_mul(x)) {
            Some(bound) => below(&w.fund_seq(z), bound, r.witness("bound", bound)),
            None => r.unknown(BudgetExceeded::bits(budget.max_bits)),
        }
    });
    out
}

/// `H_{t[x]}(2^c(x+c)) ≤ H_t(x+c)` for `t = s + ω^r`, `o(r) ≥ 2`, `c ≥ 1`.
pub fn check_drop(t: &TreeOrdinal, x: u64, c: u64, budget: &Budget) -> CheckReport {
    let r = CheckReport::new("drop", Instance::Drop { t: t.clone(), x, c });
    let last_ok = t.exponents().last().is_some_and(|e| e.collapse() >= Ordinal::nat(2));
    if !last_ok || c == 0 {
        return r.skipped("hypotheses not met");
    }
    let rhs = match hardy_tree(t, x + c, budget) {
        Ok(v) => v,
        Err(e) => return r.unknown(e),
    };
    let r = r.witness("H_t(x+c)", rhs);
    let Some(arg) = 1u64.checked_shl(c as u32).and_then(|p| p.checked_mul(x + c)) else {
        return r.unknown(BudgetExceeded::bits(budget.max_bits));
    };
    match hardy_tree_at_most(&t.fs_std(x as usize), arg, rhs, budget) {
        Ok(ok) => r.holds(ok),
        Err(e) => r.unknown(e),
    }
}

/// All tree-ordinal statements on one `(t, u, x, c)`. `u` feeds the `R̃`
/// statements, and `o(u)`, `o(t)` the norm bound.
pub fn check_tree_lemmas(t: &TreeOrdinal, u: &TreeOrdinal, x: u64, c: u64, budget: &Budget) -> Vec<CheckReport> {
    let mut out = vec![
        check_cr_step(t, x),
        check_norm_bound(&u.collapse(), &t.collapse(), x),
        check_norm_term_step(t, x),
        check_r_tilde_step(t, u, x),
        check_norm_difference(t, u, x),
    ];
    out.extend(check_doubling(&t.collapse(), x, c, budget));
    out.push(check_drop(t, x, c, budget));
    out
}

/// If `o(t) ≤ β`, `n + N(o(t)) - Nβ ≤ m - 2` and `n + Cr(t) < m - 2` then
/// `H_t(n) ≤ H_β(m)`.
pub fn check_h_comparison(t: &TreeOrdinal, beta: &Ordinal, n: u64, m: u64, budget: &Budget) -> CheckReport {
    let r = CheckReport::new("h_comparison", Instance::HComparison { t: t.clone(), beta: beta.clone(), n, m });
    let o = t.collapse();
    let (n_i, m_i) = (n as i64, m as i64);
    let hyp = o <= *beta
        && n_i + o.norm() as i64 - beta.norm() as i64 <= m_i - 2
        && n_i + (t.correction() as i64) < m_i - 2;
    if !hyp {
        return r.skipped("hypotheses not met");
    }
    let bound = match hardy_ord(beta, m, budget) {
        Ok(v) => v,
        Err(e) => return r.unknown(e),
    };
    match hardy_tree_at_most(t, n, bound, budget) {
        Ok(ok) => r.witness("H_beta(m)", bound).holds(ok),
        Err(e) => r.witness("H_beta(m)", bound).unknown(e),
    }
}

/// If `m ≥ n + 2` then `h_t(n) ≤ H_t(m)`.
pub fn check_h_vs_h(t: &TreeOrdinal, n: u64, m: u64, budget: &Budget) -> CheckReport {
    let r = CheckReport::new("h_vs_h", Instance::HVsH { t: t.clone(), n, m });
    if m < n + 2 {
        return r.skipped("m < n + 2");
    }
    let bound = match hardy_tree(t, m, budget) {
        Ok(v) => v,
        Err(e) => return r.unknown(e),
    };
    match hardy_tree_wormstyle_at_most(t, n, bound, budget) {
        Ok(ok) => r.witness("H_t(m)", bound).holds(ok),
        Err(e) => r.witness("H_t(m)", bound).unknown(e),
    }
}

/// Both Hardy comparison theorems on `(t, β, n, m)`.
pub fn check_hardy_theorems(t: &TreeOrdinal, beta: &Ordinal, n: u64, m: u64, budget: &Budget) -> Vec<CheckReport> {
    vec![check_h_comparison(t, beta, n, m, budget), check_h_vs_h(t, n, m, budget)]
}

/// `F_α(x) ≤ H_{ω^{3+α}}(x+3) ≤ F_α(x+4)`. Passes when every decidable
/// inequality holds and at least one is decidable.
pub fn check_fh_sandwich(alpha: &Ordinal, x: u64, budget: &Budget) -> CheckReport {
    let r = CheckReport::new("fh_sandwich", Instance::FhSandwich { alpha: alpha.clone(), x });
    let idx = Ordinal::omega_pow(Ordinal::nat(3).add(alpha));
    let legs = [
        ("F_alpha(x)", fast_growing(alpha, x, budget)),
        ("H(x+3)", collapsed_hardy(&idx, x + 3, budget)),
        ("F_alpha(x+4)", fast_growing(alpha, x + 4, budget)),
    ];
    let mut r = r;
    let mut unknown = Vec::new();
    for (name, v) in &legs {
        r = match v {
            Ok(v) => r.witness(name, big(v)),
            Err(e) => {
                unknown.push(format!("{name}: {e}"));
                r.witness(name, "unknown")
            }
        };
    }
    let mut decided = 0;
    let mut ok = true;
    for pair in legs.windows(2) {
        if let (Ok(a), Ok(b)) = (&pair[0].1, &pair[1].1) {
            decided += 1;
            ok &= a <= b;
        }
    }
    if !ok {
        return r.holds(false);
    }
    if decided == 0 {
        return r.verdict(crate::Verdict::BudgetUnknown).note(unknown.join("; "));
    }
    if unknown.is_empty() {
        r.holds(true)
    } else {
        r.holds(true).note(unknown.join("; "))
    }
}

/// Step budget under which [`check_collapsed`] trusts the step evaluator.
pub const STEP_ORACLE_STEPS: u64 = 1_000_000;

/// `collapsed_hardy` against the step evaluator.
pub fn check_collapsed(alpha: &Ordinal, x: u64, budget: &Budget) -> CheckReport {
    let r = CheckReport::new("collapsed", Instance::Collapsed { alpha: alpha.clone(), x });
    let oracle = match hardy_ord(alpha, x, &Budget::with_steps(STEP_ORACLE_STEPS)) {
        Ok(v) => v,
        Err(_) => return r.skipped("beyond the step oracle"),
    };
    match collapsed_hardy(alpha, x, budget) {
        Ok(v) => r.witness("steps", oracle).witness("collapsed", &v).holds(v == BigUint::from(oracle)),
        Err(e) => r.witness("steps", oracle).unknown(e),
    }
}

/// The battle engine against plain simulation: death step and every worm.
pub fn check_battle_oracle(a: &Worm, budget: &Budget) -> CheckReport {
    let r = CheckReport::new("battle_oracle", Instance::BattleOracle { worm: a.clone() });
    let worms = match oracle::battle_worms(a, budget) {
        Ok(w) => w,
        Err(e) => return r.unknown(e),
    };
    let trace = battle(a, budget);
    let death = worms.len() as u64 - 1;
    let same_worms = trace.records.iter().all(|rec| match &rec.worm {
        Some(w) => worms.get(rec.step as usize) == Some(w),
        None => worms.get(rec.step as usize).is_some_and(|o| o.len() as u64 == rec.length),
    });
    let r = r.witness("oracle death step", death);
    let r = match trace.death_step {
        Some(m) => r.witness("engine death step", m),
        None => r.witness("engine death step", "none"),
    };
    r.holds(trace.death_step == Some(death) && same_worms && trace.records.len() as u64 == death + 1)
}

/// Dispatches a saved instance to its checker.
pub fn check_instance(inst: &Instance, budget: &Budget) -> Vec<CheckReport> {
    match inst {
        Instance::Stepdown { worm, k } => vec![check_stepdown_descent(worm, *k)],
        Instance::TauNaturality { worm, x } => vec![check_tau_naturality(worm, *x)],
        Instance::Bridge { worm, x } => vec![check_bridge(worm, *x, budget)],
        Instance::Composition { b, a, n } => vec![check_composition(b, a, *n, budget)],
        Instance::Growth { worm, n } => vec![check_growth(worm, *n, budget)],
        Instance::Superexp { n } => check_superexp_growth(*n, budget),
        Instance::Reach { a, b, m } => vec![check_reach(a, b, *m, budget), check_reach_corollary(a, b, *m, budget)],
        Instance::Monotonicity { a, b, x, y } => vec![check_monotonicity(a, b, *x, *y, budget)],
        Instance::CrStep { t, x } => vec![check_cr_step(t, *x)],
        Instance::NormBound { alpha, beta, x } => vec![check_norm_bound(alpha, beta, *x)],
        Instance::NormTermStep { t, x } => vec![check_norm_term_step(t, *x)],
        Instance::RTildeStep { t, u, x } => vec![check_r_tilde_step(t, u, *x)],
        Instance::NormDifference { t, u, x } => vec![check_norm_difference(t, u, *x)],
        Instance::Doubling { s, x, z } => check_doubling(s, *x, *z, budget),
        Instance::Drop { t, x, c } => vec![check_drop(t, *x, *c, budget)],
        Instance::TreeLemmas { t, u, x, c } => check_tree_lemmas(t, u, *x, *c, budget),
        Instance::HComparison { t, beta, n, m } => vec![check_h_comparison(t, beta, *n, *m, budget)],
        Instance::HVsH { t, n, m } => vec![check_h_vs_h(t, *n, *m, budget)],
        Instance::FhSandwich { alpha, x } => vec![check_fh_sandwich(alpha, *x, budget)],
        Instance::Collapsed { alpha, x } => vec![check_collapsed(alpha, *x, budget)],
        Instance::BattleOracle { worm } => vec![check_battle_oracle(worm, budget)],
    }
}
