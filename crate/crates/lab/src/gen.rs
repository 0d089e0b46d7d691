//! Seeded instance generators. Sizes stay small enough that nearly every
//! instance finishes under the default budget.

use ewd_core::hierarchy::hardy_worm;
use ewd_core::worm::sub_m;
use ewd_core::{Budget, Ordinal, TreeOrdinal, Worm};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::instance::Instance;

/// Retries before a generator gives up on its side conditions.
const TRIES: usize = 1000;

pub fn nat_worm<R: Rng>(rng: &mut R, min_len: usize, max_len: usize, max_entry: u64) -> Worm {
    let len = rng.gen_range(min_len..=max_len);
    let v: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=max_entry)).collect();
    Worm::from_nats(&v)
}

/// Entries drawn from `0..=max_nat` and, with probability `p_omega`, `ω+j` for
/// `j ≤ max_omega`.
pub fn worm<R: Rng>(rng: &mut R, max_len: usize, max_nat: u64, p_omega: f64, max_omega: u64) -> Worm {
    let len = rng.gen_range(0..=max_len);
    let v = (0..len)
        .map(|_| {
            if rng.gen_bool(p_omega) {
                Ordinal::omega().add(&Ordinal::nat(rng.gen_range(0..=max_omega)))
            } else {
                Ordinal::nat(rng.gen_range(0..=max_nat))
            }
        })
        .collect();
    Worm::new(v)
}

/// A random tree with at most `width` summands per level and nesting depth at
/// most `depth`.
pub fn tree<R: Rng>(rng: &mut R, depth: usize, width: usize) -> TreeOrdinal {
    if depth == 0 {
        return TreeOrdinal::zero();
    }
    let n = rng.gen_range(0..=width);
    let exps = (0..n)
        .map(|_| if rng.gen_bool(0.4) { TreeOrdinal::zero() } else { tree(rng, depth - 1, width) })
        .collect();
    TreeOrdinal::from_exponents(exps)
}

/// A random limit tree: as [`tree`], with a nonzero last exponent.
pub fn limit_tree<R: Rng>(rng: &mut R, depth: usize, width: usize) -> TreeOrdinal {
    let depth = depth.max(2);
    let mut exps = tree(rng, depth, width).exponents().to_vec();
    while exps.last().is_some_and(TreeOrdinal::is_zero) {
        exps.pop();
    }
    let mut last = tree(rng, depth - 1, width);
    if last.is_zero() {
        last = TreeOrdinal::one();
    }
    exps.push(last);
    TreeOrdinal::from_exponents(exps)
}

/// A random `u` with `t R u`, or `t R̃ u` when `end_agreeable`.
pub fn reduct<R: Rng>(rng: &mut R, t: &TreeOrdinal, end_agreeable: bool) -> TreeOrdinal {
    let exps = t.exponents();
    let last_power = exps.iter().rposition(|e| !e.is_zero());
    let mut out = Vec::with_capacity(exps.len());
    let mut may_drop = false;
    for (i, e) in exps.iter().enumerate() {
        if e.is_zero() {
            let in_last_block = last_power.is_some_and(|p| i > p);
            if may_drop && !(end_agreeable && in_last_block) && rng.gen_bool(0.5) {
                may_drop = false;
                continue;
            }
            out.push(e.clone());
        } else {
            let end = end_agreeable && Some(i) == last_power;
            out.push(reduct(rng, e, end));
            may_drop = true;
        }
    }
    TreeOrdinal::from_exponents(out)
}

/// A random ordinal as the collapse of a random tree.
pub fn ordinal<R: Rng>(rng: &mut R, depth: usize, width: usize) -> Ordinal {
    tree(rng, depth, width).collapse()
}

/// `B ⊴_m A` chosen at random: a suffix of `A` whose first entry is lowered.
pub fn below<R: Rng>(rng: &mut R, a: &Worm, m: u64) -> Worm {
    if a.is_top() || rng.gen_bool(0.1) {
        return Worm::top();
    }
    for _ in 0..TRIES {
        let p = rng.gen_range(0..a.len());
        let alpha = &a.entries()[p];
        let mut choices: Vec<Ordinal> = Vec::new();
        for n in 0..=m.max(4) {
            choices.push(Ordinal::nat(n));
        }
        let mut w = Ordinal::omega();
        while w <= *alpha {
            choices.push(w.clone());
            w = w.succ();
        }
        choices.retain(|c| c <= alpha);
        let beta = choices.choose(rng).expect("0 ≤ α").clone();
        let b = Worm::new(a.entries()[p + 1..].to_vec()).prepend(beta);
        if sub_m(&b, a, m) {
            return b;
        }
    }
    Worm::top()
}

/// Suites with a random generator, in listing order.
pub const SUITES: &[&str] = &[
    "stepdown",
    "tau_naturality",
    "bridge",
    "composition",
    "growth",
    "superexp",
    "reach",
    "monotonicity",
    "cr_step",
    "norm_bound",
    "norm_term_step",
    "r_tilde_step",
    "norm_difference",
    "doubling",
    "drop",
    "tree_lemmas",
    "h_comparison",
    "h_vs_h",
    "fh_sandwich",
    "collapsed",
    "battle_oracle",
];

/// Draws the first candidate satisfying `ok`, or the last candidate tried.
fn until<R: Rng, T>(rng: &mut R, mut draw: impl FnMut(&mut R) -> T, ok: impl Fn(&T) -> bool) -> T {
    let mut x = draw(rng);
    for _ in 0..TRIES {
        if ok(&x) {
            break;
        }
        x = draw(rng);
    }
    x
}

fn small_worm(i: usize) -> Worm {
    ["T", "0", "1", "0.0", "0.1", "1.0"][i].parse().expect("literal")
}

/// One random instance of `suite`, or `None` for an unknown suite.
pub fn instance<R: Rng>(suite: &str, rng: &mut R) -> Option<Instance> {
    Some(match suite {
        "stepdown" => Instance::Stepdown { worm: nat_worm(rng, 1, 8, 4), k: rng.gen_range(0..=5) },
        "tau_naturality" => Instance::TauNaturality { worm: nat_worm(rng, 1, 8, 4), x: rng.gen_range(0..=5) },
        "bridge" => Instance::Bridge { worm: nat_worm(rng, 0, 3, 1), x: rng.gen_range(0..=3) },
        "composition" => Instance::Composition {
            b: small_worm(rng.gen_range(0..6)),
            a: small_worm(rng.gen_range(0..6)),
            n: rng.gen_range(0..=4),
        },
        "growth" => {
            let worm = ["T", "1", "1.1", "2"][rng.gen_range(0..4)].parse().expect("literal");
            let n = if worm == Worm::from_nats(&[1, 1]) || worm == Worm::from_nats(&[2]) { 1 } else { rng.gen_range(0..=4) };
            Instance::Growth { worm, n }
        }
        "superexp" => Instance::Superexp { n: rng.gen_range(0..=2) },
        "reach" | "monotonicity" => {
            let m = rng.gen_range(0..=2);
            let a = until(rng, |r| worm(r, 4, 1, 0.15, 1), |a| hardy_worm(a, m, &feasible()).is_ok());
            let b = below(rng, &a, m);
            if suite == "reach" {
                Instance::Reach { a, b, m }
            } else {
                Instance::Monotonicity { a, b, x: rng.gen_range(0..=m), y: m }
            }
        }
        "cr_step" => Instance::CrStep { t: tree(rng, 4, 3), x: rng.gen_range(0..=6) },
        "norm_bound" => {
            let x = rng.gen_range(2..=6);
            let (alpha, beta) = until(
                rng,
                |r| {
                    let (a, b) = (ordinal(r, 4, 3), ordinal(r, 4, 3));
                    if a <= b {
                        (a, b)
                    } else {
                        (b, a)
                    }
                },
                |(a, b)| a < b && a.norm() + 2 <= b.norm() + x,
            );
            Instance::NormBound { alpha, beta, x }
        }
        "norm_term_step" => Instance::NormTermStep { t: tree(rng, 4, 3), x: rng.gen_range(2..=6) },
        "r_tilde_step" => {
            let t = tree(rng, 4, 3);
            let u = reduct(rng, &t, true);
            Instance::RTildeStep { t, u, x: rng.gen_range(0..=6) }
        }
        "norm_difference" => {
            let t = limit_tree(rng, 4, 3);
            let u = reduct(rng, &t, true);
            Instance::NormDifference { t, u, x: rng.gen_range(1..=6) }
        }
        "doubling" => {
            let s = until(rng, |r| ordinal(r, 2, 3), |s| !s.is_zero());
            Instance::Doubling { s, x: rng.gen_range(1..=6), z: rng.gen_range(2..=5) }
        }
        "drop" => {
            let s = until(rng, |r| tree(r, 2, 2), |s| s.collapse() < Ordinal::omega_pow(Ordinal::nat(2)));
            let last: TreeOrdinal = ["2", "1+1", "w^0*2"][rng.gen_range(0..3)].parse().expect("literal");
            let t = s.concat(&TreeOrdinal::omega_pow(last));
            Instance::Drop { t, x: rng.gen_range(0..=3), c: rng.gen_range(1..=2) }
        }
        "tree_lemmas" => {
            let t = until(rng, |r| tree(r, 4, 3), |t| t.collapse() <= small_beta_cap());
            let u = reduct(rng, &t, true);
            Instance::TreeLemmas { t, u, x: rng.gen_range(0..=6), c: rng.gen_range(1..=2) }
        }
        "h_comparison" => {
            let t = until(rng, |r| tree(r, 3, 3), |t| t.collapse() <= small_beta_cap());
            let o = t.collapse();
            let beta = [o.clone(), o.succ(), o.add(&Ordinal::omega())][rng.gen_range(0..3)].clone();
            let n = rng.gen_range(0..=4);
            let m = until(rng, |r| r.gen_range(0..=10u64), |&m| n + t.correction() + 2 < m);
            Instance::HComparison { t, beta, n, m }
        }
        "h_vs_h" => {
            let t = until(rng, |r| tree(r, 3, 3), |t| t.collapse() <= small_beta_cap());
            let n = rng.gen_range(0..=4);
            Instance::HVsH { t, n, m: rng.gen_range(n + 2..=10) }
        }
        "fh_sandwich" => Instance::FhSandwich {
            alpha: ["0", "1", "2", "w"][rng.gen_range(0..4)].parse().expect("literal"),
            x: rng.gen_range(0..=3),
        },
        "collapsed" => Instance::Collapsed {
            alpha: until(rng, |r| ordinal(r, 3, 3), |a| *a <= Ordinal::omega_pow(Ordinal::nat(3))),
            x: rng.gen_range(0..=6),
        },
        "battle_oracle" => Instance::BattleOracle {
            worm: until(rng, |r| worm(r, 3, 2, 0.1, 0), |w| crate::oracle::battle_worms(w, &oracle_feasible()).is_ok()),
        },
        _ => return None,
    })
}

/// Budget under which generated battle instances must finish.
fn feasible() -> Budget {
    Budget::with_steps(FEASIBLE_STEPS)
}

/// Steps allowed for `h_A(m)` on generated reach and monotonicity instances.
pub const FEASIBLE_STEPS: u64 = 1_000_000;

/// Budget under which generated battles must finish in the plain oracle.
fn oracle_feasible() -> Budget {
    Budget::with_steps(100_000).with_term_size(2_000_000)
}

/// `ω^2·3`, the largest index the Hardy theorem suites draw.
pub fn small_beta_cap() -> Ordinal {
    Ordinal::monomial(Ordinal::nat(2), 3)
}
