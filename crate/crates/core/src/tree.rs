//! Tree ordinals: sums `ω^t₁ + … + ω^tₙ` with no ordering constraint on the
//! exponents.
//!
//! Two fundamental-sequence flavors live here. [`TreeOrdinal::fs_std`] is the
//! usual one and [`TreeOrdinal::fs_worm`] is the variant induced by the worm
//! step-down function, which leaves extra unit summands behind.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::budget::DEFAULT_MAX_TERM_SIZE;
use crate::error::{BudgetExceeded, ParseError};
use crate::ordinal::Ordinal;
use crate::syntax::{Atom, Parser, Sum};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TreeOrdinal(Option<Arc<[TreeOrdinal]>>);

impl TreeOrdinal {
    pub const fn zero() -> Self {
        TreeOrdinal(None)
    }

    /// `ω^0`.
    pub fn one() -> Self {
        TreeOrdinal::from_exponents(vec![TreeOrdinal::zero()])
    }

    /// `n` unit summands.
    pub fn nat(n: usize) -> Self {
        TreeOrdinal::from_exponents(vec![TreeOrdinal::zero(); n])
    }

    /// `ω^exponent` as a single summand.
    pub fn omega_pow(exponent: TreeOrdinal) -> Self {
        TreeOrdinal::from_exponents(vec![exponent])
    }

    pub fn from_exponents(exponents: Vec<TreeOrdinal>) -> Self {
        if exponents.is_empty() {
            TreeOrdinal::zero()
        } else {
            TreeOrdinal(Some(Arc::from(exponents)))
        }
    }

    /// The summand exponents, left to right.
    pub fn exponents(&self) -> &[TreeOrdinal] {
        self.0.as_deref().unwrap_or(&[])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_none()
    }

    /// Rightmost summand is `ω^0`.
    pub fn is_successor(&self) -> bool {
        self.exponents().last().is_some_and(TreeOrdinal::is_zero)
    }

    /// Rightmost summand is `ω^t` with `t ≠ 0`.
    pub fn is_limit(&self) -> bool {
        self.exponents().last().is_some_and(|t| !t.is_zero())
    }

    /// Concatenation of summand lists (tree-ordinal `+`).
    pub fn concat(&self, rhs: &TreeOrdinal) -> TreeOrdinal {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let mut v = self.exponents().to_vec();
        v.extend_from_slice(rhs.exponents());
        TreeOrdinal::from_exponents(v)
    }

    /// `t·x`: the summand list repeated `x` times.
    pub fn repeat(&self, x: usize) -> TreeOrdinal {
        let mut v = Vec::with_capacity(self.exponents().len() * x);
        for _ in 0..x {
            v.extend_from_slice(self.exponents());
        }
        TreeOrdinal::from_exponents(v)
    }

    /// The induced ordinal `o(t) = ω^o(t₁) + … + ω^o(tₙ)`, summed with absorption.
    pub fn collapse(&self) -> Ordinal {
        // Summing right to left: each new left summand either absorbs into nothing
        // (it is smaller than the current leading power) or is prepended.
        let mut terms: Vec<crate::ordinal::Term> = Vec::new();
        for e in self.exponents().iter().rev() {
            let exp = e.collapse();
            match terms.first().map(|t| exp.cmp(&t.exponent)) {
                None | Some(Ordering::Greater) => {
                    terms.insert(0, crate::ordinal::Term { exponent: exp, coeff: 1 });
                }
                Some(Ordering::Equal) => terms[0].coeff += 1,
                Some(Ordering::Less) => {}
            }
        }
        Ordinal::from_terms(terms)
    }

    /// Standard fundamental sequences: `0[x] = 0`, `1[x] = 0`, `(t+1)[x] = t`,
    /// `(t+ω^(s+1))[x] = t+ω^s·x`, `(t+ω^λ)[x] = t+ω^(λ[x])`.
    pub fn fs_std(&self, x: usize) -> TreeOrdinal {
        let Some((last, prefix)) = self.exponents().split_last() else {
            return TreeOrdinal::zero();
        };
        let mut v = prefix.to_vec();
        if last.is_zero() {
            // (t+1)[x] = t, which covers 1[x] = 0
        } else if let Some((_, s)) = last.split_successor() {
            v.extend(std::iter::repeat_n(s, x));
        } else {
            v.push(last.fs_std(x));
        }
        TreeOrdinal::from_exponents(v)
    }

    /// Worm-style fundamental sequences: `0⟦x⟧ = 0`, `(t+1)⟦x⟧ = t`, `(t+ω)⟦x⟧ = t+x`,
    /// `(t+ω^(s+1))⟦x⟧ = t+(ω^s+1)·x` for `s ≠ 0`, `(t+ω^λ)⟦x⟧ = t+ω^(λ⟦x⟧)`.
    pub fn fs_worm(&self, x: usize) -> TreeOrdinal {
        let Some((last, prefix)) = self.exponents().split_last() else {
            return TreeOrdinal::zero();
        };
        let mut v = prefix.to_vec();
        if last.is_zero() {
        } else if let Some((_, s)) = last.split_successor() {
            if s.is_zero() {
                v.extend(std::iter::repeat_n(TreeOrdinal::zero(), x));
            } else {
                for _ in 0..x {
                    v.push(s.clone());
                    v.push(TreeOrdinal::zero());
                }
            }
        } else {
            v.push(last.fs_worm(x));
        }
        TreeOrdinal::from_exponents(v)
    }

    /// For a successor `s+1`, returns `(1, s)`.
    pub(crate) fn split_successor(&self) -> Option<((), TreeOrdinal)> {
        let (last, prefix) = self.exponents().split_last()?;
        last.is_zero().then(|| ((), TreeOrdinal::from_exponents(prefix.to_vec())))
    }

    /// `N0 = 0` and `N(ω^t + s) = 1 + Nt + Ns`, with no canonicity requirement.
    pub fn norm(&self) -> u64 {
        self.exponents().iter().map(|e| 1 + e.norm()).sum()
    }

    /// `Cr(0) = 0` and `Cr(t) = Σ{N(ω^tᵢ) : tᵢ < tⱼ for some j > i} + max Cr(tᵢ)`, with
    /// `tᵢ < tⱼ` meaning `o(tᵢ) < o(tⱼ)`. Each qualifying index contributes once.
    pub fn correction(&self) -> u64 {
        let exps = self.exponents();
        if exps.is_empty() {
            return 0;
        }
        let collapsed: Vec<Ordinal> = exps.iter().map(TreeOrdinal::collapse).collect();
        // suffix maxima decide "some later exponent is larger"
        let mut later_max: Option<&Ordinal> = None;
        let mut absorbed = 0u64;
        for (e, o) in exps.iter().zip(&collapsed).rev() {
            if later_max.is_some_and(|m| o < m) {
                absorbed += 1 + e.norm();
            }
            if later_max.is_none_or(|m| o > m) {
                later_max = Some(o);
            }
        }
        absorbed + exps.iter().map(TreeOrdinal::correction).max().unwrap_or(0)
    }

    /// Same as [`correction`](Self::correction) but summing the *set* of values
    /// `N(ω^tᵢ)`, so equal contributions count once.
    pub fn correction_set_sum(&self) -> u64 {
        let exps = self.exponents();
        if exps.is_empty() {
            return 0;
        }
        let collapsed: Vec<Ordinal> = exps.iter().map(TreeOrdinal::collapse).collect();
        let mut values = std::collections::BTreeSet::new();
        for i in 0..exps.len() {
            if collapsed[i + 1..].iter().any(|o| collapsed[i] < *o) {
                values.insert(1 + exps[i].norm());
            }
        }
        values.iter().sum::<u64>() + exps.iter().map(TreeOrdinal::correction_set_sum).max().unwrap_or(0)
    }

    /// Splits `k₋₁ + ω^t₀ + k₀ + … + ω^tₙ + kₙ` into the leading unit count and
    /// `(tᵢ, kᵢ)` pairs, where every `tᵢ ≠ 0`.
    pub fn blocks(&self) -> (usize, Vec<(&TreeOrdinal, usize)>) {
        let mut lead = 0;
        let mut out: Vec<(&TreeOrdinal, usize)> = Vec::new();
        for e in self.exponents() {
            if e.is_zero() {
                match out.last_mut() {
                    Some(last) => last.1 += 1,
                    None => lead += 1,
                }
            } else {
                out.push((e, 0));
            }
        }
        (lead, out)
    }

    /// The reduction relation `R`: `u` is `self` with at most one unit summand
    /// removed from each unit block that follows an ω-power, recursively inside the
    /// exponents.
    pub fn reduces(&self, u: &TreeOrdinal) -> bool {
        self.reduces_with(u, false)
    }

    /// The end-agreeable relation `R̃`: as [`reduces`](Self::reduces), but the final
    /// unit block must agree exactly and the last exponents relate by `R̃`.
    pub fn reduces_end(&self, u: &TreeOrdinal) -> bool {
        self.reduces_with(u, true)
    }

    fn reduces_with(&self, u: &TreeOrdinal, end_agreeable: bool) -> bool {
        if self == u {
            return true;
        }
        let (lead_t, blocks_t) = self.blocks();
        let (lead_u, blocks_u) = u.blocks();
        if lead_t != lead_u || blocks_t.len() != blocks_u.len() {
            return false;
        }
        let n = blocks_t.len();
        blocks_t.iter().zip(&blocks_u).enumerate().all(|(i, ((et, kt), (eu, ku)))| {
            let last = i + 1 == n;
            if end_agreeable && last {
                kt == ku && et.reduces_with(eu, true)
            } else {
                (kt == ku || *kt == ku + 1) && et.reduces_with(eu, false)
            }
        })
    }

    /// `t ≤ₙ s`: whether iterating `·[n]` from `s` reaches `self` within `budget` steps.
    pub fn reachable_from(&self, s: &TreeOrdinal, n: usize, budget: u64) -> Result<bool, BudgetExceeded> {
        let target = self.collapse();
        let mut cur = s.clone();
        let mut steps = 0u64;
        loop {
            if cur == *self {
                return Ok(true);
            }
            // The sequence strictly descends in ordinal value, so once it falls
            // below the target it can never come back.
            if cur.is_zero() || cur.collapse() < target {
                return Ok(false);
            }
            if steps == budget {
                return Err(BudgetExceeded::steps(budget));
            }
            cur = cur.fs_std(n);
            steps += 1;
        }
    }

    pub fn node_count(&self) -> u64 {
        self.exponents().iter().map(|e| 1 + e.node_count()).sum()
    }

    pub fn depth(&self) -> usize {
        self.exponents().iter().map(|e| 1 + e.depth()).max().unwrap_or(0)
    }

    pub fn parse(src: &str) -> Result<TreeOrdinal, ParseError> {
        TreeOrdinal::parse_within(src, DEFAULT_MAX_TERM_SIZE)
    }

    /// Parses the ordinal grammar without canonicalizing: summands keep the order
    /// and multiplicity in which they are written.
    pub fn parse_within(src: &str, max_nodes: u64) -> Result<TreeOrdinal, ParseError> {
        let ast = Parser::parse(src)?;
        let mut nodes = 0u64;
        from_sum(&ast, max_nodes, &mut nodes).ok_or_else(|| ParseError {
            offset: 0,
            token: src.chars().take(16).collect(),
            message: format!("term exceeds {max_nodes} nodes"),
        })
    }
}

fn from_sum(sum: &Sum, max: u64, nodes: &mut u64) -> Option<TreeOrdinal> {
    let mut v: Vec<TreeOrdinal> = Vec::new();
    for s in &sum.0 {
        let piece: Vec<TreeOrdinal> = match &s.atom {
            Atom::Nat(n) => {
                *nodes = nodes.checked_add(*n)?;
                if *nodes > max {
                    return None;
                }
                vec![TreeOrdinal::zero(); *n as usize]
            }
            Atom::Power(e) => {
                *nodes += 1;
                vec![from_sum(e, max, nodes)?]
            }
            Atom::Group(inner) => from_sum(inner, max, nodes)?.exponents().to_vec(),
        };
        let extra = (piece.len() as u64).checked_mul(s.coeff.saturating_sub(1))?;
        *nodes = nodes.checked_add(extra)?;
        if *nodes > max {
            return None;
        }
        for _ in 0..s.coeff {
            v.extend(piece.iter().cloned());
        }
    }
    Some(TreeOrdinal::from_exponents(v))
}

fn fmt_summands(exps: &[TreeOrdinal], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if exps.is_empty() {
        return f.write_str("0");
    }
    let mut i = 0;
    let mut first = true;
    while i < exps.len() {
        let mut run = 1;
        while i + run < exps.len() && exps[i + run] == exps[i] {
            run += 1;
        }
        if !first {
            f.write_str("+")?;
        }
        first = false;
        let e = &exps[i];
        if e.is_zero() {
            write!(f, "{run}")?;
        } else {
            f.write_str("w")?;
            if *e != TreeOrdinal::one() {
                f.write_str("^")?;
                let simple = e.exponents().iter().all(TreeOrdinal::is_zero) || *e == TreeOrdinal::omega_pow(TreeOrdinal::one());
                if simple {
                    write!(f, "{e}")?;
                } else {
                    write!(f, "({e})")?;
                }
            }
            if run > 1 {
                write!(f, "*{run}")?;
            }
        }
        i += run;
    }
    Ok(())
}

impl fmt::Display for TreeOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_summands(self.exponents(), f)
    }
}

impl fmt::Debug for TreeOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({self})")
    }
}

impl FromStr for TreeOrdinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TreeOrdinal::parse(s)
    }
}

impl serde::Serialize for TreeOrdinal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for TreeOrdinal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = <std::borrow::Cow<'de, str>>::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Canonical tree for an ordinal: CNF terms written out with repetitions.
impl From<&Ordinal> for TreeOrdinal {
    fn from(o: &Ordinal) -> Self {
        let mut v = Vec::new();
        for t in o.terms() {
            let e = TreeOrdinal::from(&t.exponent);
            v.extend(std::iter::repeat_n(e, t.coeff as usize));
        }
        TreeOrdinal::from_exponents(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TreeOrdinal {
        s.parse().unwrap()
    }

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn parser_preserves_order() {
        assert_eq!(t("1+w").exponents(), &[TreeOrdinal::zero(), TreeOrdinal::one()]);
        assert_eq!(t("w+1").exponents(), &[TreeOrdinal::one(), TreeOrdinal::zero()]);
        assert_eq!(t("3"), TreeOrdinal::nat(3));
        assert_eq!(t("(w+1)*2").exponents().len(), 4);
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(TreeOrdinal::zero().collapse(), o("0"));
        assert_eq!(t("1+w").collapse(), o("w"));
        assert_eq!(t("w+1").collapse(), o("w+1"));
        assert_eq!(t("w+w^2+w").collapse(), o("w^2+w"));
        assert_eq!(t("w^(1+w)").collapse(), o("w^w"));
    }

    #[test]
    fn fs_std_examples() {
        assert_eq!(t("1").fs_std(7), TreeOrdinal::zero());
        assert_eq!(t("w").fs_std(3), TreeOrdinal::nat(3));
        // ω^ω[2] = ω^(ω^0+ω^0)
        assert_eq!(t("w^w").fs_std(2), TreeOrdinal::omega_pow(TreeOrdinal::nat(2)));
        assert_eq!(t("1+w").fs_std(2), TreeOrdinal::nat(3));
    }

    #[test]
    fn fs_worm_examples() {
        assert_eq!(t("w").fs_worm(3), TreeOrdinal::nat(3));
        let w1 = TreeOrdinal::one();
        let z = TreeOrdinal::zero();
        assert_eq!(t("w^2").fs_worm(3).exponents(), &[w1.clone(), z.clone(), w1.clone(), z.clone(), w1, z]);
        let base = t("w^w+3+w");
        assert_eq!(base.concat(&TreeOrdinal::one()).fs_worm(9), base);
        assert_eq!(TreeOrdinal::zero().fs_worm(4), TreeOrdinal::zero());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(TreeOrdinal::zero().norm(), 0);
        assert_eq!(t("1+1").norm(), 2);
        assert_eq!(TreeOrdinal::omega_pow(TreeOrdinal::one()).norm(), 2);
        assert_eq!(t("w^w+1").norm(), 4);
    }

    #[test]
    fn correction_examples() {
        assert_eq!(TreeOrdinal::zero().correction(), 0);
        assert_eq!(t("1+w").correction(), 1);
        assert_eq!(t("w+1").correction(), 0);
        // both leading units are absorbed by ω: two indices, equal values
        assert_eq!(t("1+1+w").correction(), 2);
        assert_eq!(t("1+1+w").correction_set_sum(), 1);
        // inner correction propagates through max
        assert_eq!(t("w^(1+w)").correction(), 1);
    }

    #[test]
    fn reduces_examples() {
        let x = t("w^(w+1)+2+w");
        assert!(x.reduces(&x));
        assert!(t("w+1").reduces(&t("w")));
        assert!(!t("w").reduces(&t("w+1")));
        // at most one unit may go per block
        assert!(!t("w+2").reduces(&t("w")));
        // leading units are never removed
        assert!(!t("1+w").reduces(&t("w")));
        assert!(t("w^(w+1)+1").reduces(&t("w^w")));
    }

    #[test]
    fn reduces_end_examples() {
        let x = t("w^(w+1)+1");
        assert!(x.reduces_end(&x));
        assert!(!t("w+1").reduces_end(&t("w")));
        // the last exponent must relate end-agreeably, so dropping its trailing
        // unit is not allowed
        assert!(!t("w^(w+1)+1").reduces_end(&t("w^w+1")));
        // units after a non-final power may go
        assert!(t("w^2+1+w").reduces_end(&t("w^2+w")));
        assert!(t("w^(w+1)+w^(w^2)").reduces_end(&t("w^w+w^(w^2)")));
    }

    #[test]
    fn reachable_examples() {
        let s = t("w^2+w");
        assert_eq!(s.reachable_from(&s, 4, 0), Ok(true));
        assert_eq!(TreeOrdinal::zero().reachable_from(&t("2"), 5, 10), Ok(true));
        assert_eq!(TreeOrdinal::one().reachable_from(&t("w"), 3, 10), Ok(true));
        assert_eq!(t("w").reachable_from(&t("w^2"), 3, 100), Ok(true));
        assert_eq!(t("w").reachable_from(&t("w^2"), 0, 100), Ok(false));
        assert_eq!(t("w*2").reachable_from(&t("w^2"), 3, 100), Ok(true));
        assert_eq!(TreeOrdinal::zero().reachable_from(&t("w^2"), 3, 2), Err(BudgetExceeded::steps(2)));
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "3", "w", "1+w", "w^2*3+1", "w^(1+w)+2", "w^w", "w^(w^2)+w"] {
            assert_eq!(t(s).to_string(), s, "{s}");
            assert_eq!(t(&t(s).to_string()), t(s));
        }
    }

    #[test]
    fn canonical_tree_collapses_back() {
        for s in ["0", "w^2*2+w+3", "w^(w+1)+w^w*2"] {
            assert_eq!(TreeOrdinal::from(&o(s)).collapse(), o(s));
        }
    }
}
