use std::cmp::Ordering;

use ewd_core::battle::battle;
use ewd_core::budget::Budget;
use ewd_core::ordinal::Ordinal;
use ewd_core::tree::TreeOrdinal;
use ewd_core::worm::{self, Worm};
use proptest::prelude::*;

fn tree() -> impl Strategy<Value = TreeOrdinal> {
    let leaf = prop::collection::vec(Just(TreeOrdinal::zero()), 0..4).prop_map(TreeOrdinal::from_exponents);
    leaf.prop_recursive(3, 24, 4, |inner| prop::collection::vec(inner, 0..4).prop_map(TreeOrdinal::from_exponents))
}

fn ordinal() -> impl Strategy<Value = Ordinal> {
    tree().prop_map(|t| t.collapse())
}

fn nat_worm(max_len: usize, max_entry: u64) -> impl Strategy<Value = Worm> {
    prop::collection::vec(0..=max_entry, 0..=max_len).prop_map(|v| Worm::from_nats(&v))
}

fn small_worm() -> impl Strategy<Value = Worm> {
    let entry = prop_oneof![
        (0u64..5).prop_map(Ordinal::nat),
        (0u64..4).prop_map(|n| Ordinal::omega().add(&Ordinal::nat(n))),
    ];
    prop::collection::vec(entry, 0..6).prop_map(Worm::new)
}

proptest! {
    #[test]
    fn compare_is_a_total_order(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
    }

    #[test]
    fn fund_seq_descends(a in ordinal(), x in 0u64..6) {
        if !a.is_zero() {
            prop_assert!(a.fund_seq(x) < a);
        }
        if a.is_limit() {
            prop_assert!(a.fund_seq(x) < a.fund_seq(x + 1));
        }
    }

    #[test]
    fn addition_laws(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&Ordinal::zero()), a.clone());
        prop_assert_eq!(Ordinal::zero().add(&a), a);
    }

    #[test]
    fn norm_of_predecessor(a in ordinal(), x in 0u64..6) {
        let s = a.succ();
        prop_assert_eq!(s.fund_seq(x).norm(), s.norm() - 1);
        prop_assert_eq!(a.norm() == 0, a.is_zero());
    }

    #[test]
    fn ordinal_text_round_trips(a in ordinal()) {
        prop_assert_eq!(a.to_string().parse::<Ordinal>().unwrap(), a);
    }

    #[test]
    fn tree_text_round_trips(t in tree()) {
        prop_assert_eq!(t.to_string().parse::<TreeOrdinal>().unwrap(), t);
    }

    #[test]
    fn tree_fs_descends(t in tree(), x in 0usize..5) {
        if !t.is_zero() {
            prop_assert!(t.fs_std(x).collapse() < t.collapse());
            prop_assert!(t.fs_worm(x).collapse() < t.collapse());
        }
        prop_assert!(t.correction() >= t.fs_std(x).correction());
    }

    #[test]
    fn tree_norm_dominates_ordinal_norm(t in tree()) {
        prop_assert!(t.norm() >= t.collapse().norm());
    }

    #[test]
    fn end_agreeable_reduction_is_a_reduction(t in tree(), drop in prop::collection::vec(any::<bool>(), 8)) {
        let u = drop_units(&t, &drop);
        if t.reduces_end(&u) {
            prop_assert!(t.reduces(&u));
        }
        prop_assert!(t.reduces(&u));
    }

    #[test]
    fn head_and_remainder_split(a in small_worm(), alpha in 0u64..5) {
        let alpha = Ordinal::nat(alpha);
        prop_assert_eq!(a.head(&alpha).concat(&a.remainder(&alpha)), a);
    }

    #[test]
    fn q_form_is_step_down(b in small_worm(), alpha in 0u64..4, k in 0u64..4) {
        let alpha = Ordinal::nat(alpha);
        prop_assert_eq!(worm::q_form(&alpha, k, &b), b.prepend(alpha.succ()).step_down(k));
    }

    #[test]
    fn battles_descend(a in nat_worm(5, 2)) {
        let mut cur = a;
        for k in 1..30u64 {
            if cur.is_top() || cur.len() > 2_000 {
                break;
            }
            let next = cur.step_down(k);
            prop_assert!(worm::lt0(&next, &cur).unwrap());
            cur = next;
        }
    }

    #[test]
    fn tau_is_natural(a in nat_worm(6, 3), x in 0u64..6) {
        if !a.is_top() {
            prop_assert_eq!(a.step_down(x).tau().unwrap(), a.tau().unwrap().fs_worm(x as usize + 1));
        }
    }

    #[test]
    fn suffixes_are_below(c in small_worm(), b in small_worm(), m in 0u64..6) {
        let a = c.concat(&b);
        prop_assert!(worm::sub_m(&b, &a, m));
        prop_assert!(worm::sub(&b, &a));
    }

    #[test]
    fn sub_m_is_monotone(a in small_worm(), b in small_worm(), m in 0u64..6) {
        if worm::sub_m(&b, &a, m) {
            prop_assert!(worm::sub_m(&b, &a, m + 1));
            prop_assert!(worm::sub(&b, &a));
        }
    }

    #[test]
    fn worm_text_round_trips(a in small_worm()) {
        prop_assert_eq!(a.to_string().parse::<Worm>().unwrap(), a);
    }

    #[test]
    fn engine_agrees_with_plain_battle(a in nat_worm(4, 1)) {
        let mut plain = a.clone();
        let mut m = 0;
        while !plain.is_top() && m < 10_000 {
            m += 1;
            plain = plain.step_down(m);
        }
        if plain.is_top() {
            prop_assert_eq!(battle(&a, &Budget::default()).death_step, Some(m));
        }
    }
}

/// Removes at most one unit summand after each ω-power, at every depth, as
/// chosen by `drop`.
fn drop_units(t: &TreeOrdinal, drop: &[bool]) -> TreeOrdinal {
    let mut out = Vec::new();
    let mut i = 0;
    let mut after_power = false;
    for e in t.exponents() {
        if e.is_zero() {
            if after_power && drop.get(i).copied().unwrap_or(false) {
                after_power = false;
                i += 1;
                continue;
            }
            out.push(e.clone());
        } else {
            out.push(drop_units(e, &drop[drop.len().min(i + 1)..]));
            after_power = true;
            i += 1;
        }
    }
    TreeOrdinal::from_exponents(out)
}

#[test]
fn end_agreeable_reduction_can_change_the_ordinal() {
    // ω^(ω+1) + ω^ω  R̃  ω^ω + ω^ω, yet the collapses differ
    let t: TreeOrdinal = "w^(w+1)+w^w".parse().unwrap();
    let u: TreeOrdinal = "w^w*2".parse().unwrap();
    assert!(t.reduces_end(&u));
    assert_ne!(t.collapse(), u.collapse());
}
