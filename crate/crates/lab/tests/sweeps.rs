use ewd_core::Budget;
use ewd_lab::gen::SUITES;
use ewd_lab::{sweep, CheckReport, Instance};

/// Failures that are genuine counterexamples to the statements as written.
fn known_counterexample(r: &CheckReport) -> bool {
    match (&r.lemma[..], &r.instance) {
        // 2^z·x ≤ H_{ω^s[z]}(x) fails at x = 1, e.g. H_{ω^2}(1) = 2 < 4
        ("doubling_exp", Instance::Doubling { x: 1, .. }) => true,
        // h_{0}(n) = 0 is not above h_⊤(h_⊤(n)) = 0
        ("composition", Instance::Composition { b, a, .. }) => b.is_top() && a.is_top(),
        // strictness fails when β = γ+ω and α = γ+x, e.g. 2 = ω[2]
        ("norm_bound", Instance::NormBound { alpha, beta, x }) => beta.is_limit() && beta.fund_seq(*x) == *alpha,
        _ => false,
    }
}

#[test]
fn suites_complete_and_hold() {
    let budget = Budget::default();
    for suite in SUITES.iter().filter(|s| **s != "fh_sandwich") {
        let report = sweep(suite, 200, 11, &budget).unwrap();
        let t = report.total();
        let all = t.pass + t.fail + t.budget_unknown + t.skipped;
        assert!(t.budget_unknown * 20 <= all, "{suite}: {t:?}");
        let reports = ewd_lab::sweep_reports(suite, 200, 11, &budget).unwrap();
        for r in reports.iter().filter(|r| r.verdict == ewd_lab::Verdict::Fail) {
            assert!(known_counterexample(r), "{suite}: {} {:?}", r.instance, r.witnesses);
        }
    }
}

#[test]
fn doubling_holds_from_two() {
    let budget = Budget::default();
    let reports = ewd_lab::sweep_reports("doubling", 300, 5, &budget).unwrap();
    assert!(reports.iter().any(|r| r.verdict == ewd_lab::Verdict::Fail));
    for r in &reports {
        if let Instance::Doubling { x, .. } = r.instance {
            if x >= 2 {
                assert_ne!(r.verdict, ewd_lab::Verdict::Fail, "{}", r.instance);
            }
        }
    }
}

#[test]
fn sandwich_is_decided_only_when_small() {
    let budget = Budget::default();
    let report = sweep("fh_sandwich", 12, 3, &budget).unwrap();
    assert_eq!(report.total().fail, 0);
}
