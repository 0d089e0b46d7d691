//! Worms: finite sequences of ordinals, leftmost entry first. The empty worm is ⊤.
//!
//! Everything here is the plain, allocation-happy definition. The battle engine in
//! [`crate::battle`] is the fast path and is cross-checked against
//! [`Worm::step_down`].

use std::fmt;
use std::str::FromStr;

use crate::error::{DomainError, ParseError};
use crate::ordinal::Ordinal;
use crate::tree::TreeOrdinal;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Worm(Vec<Ordinal>);

impl Worm {
    /// ⊤.
    pub const fn top() -> Self {
        Worm(Vec::new())
    }

    pub fn new(entries: Vec<Ordinal>) -> Self {
        Worm(entries)
    }

    pub fn from_nats(entries: &[u64]) -> Self {
        Worm(entries.iter().map(|&n| Ordinal::nat(n)).collect())
    }

    pub fn entries(&self) -> &[Ordinal] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Ordinal> {
        self.0
    }

    pub fn is_top(&self) -> bool {
        self.0.is_empty()
    }

    /// `|A|`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entries as naturals, if all of them are finite.
    pub fn as_nats(&self) -> Option<Vec<u64>> {
        self.0.iter().map(Ordinal::as_nat).collect()
    }

    pub fn first(&self) -> Option<&Ordinal> {
        self.0.first()
    }

    /// `A·B`.
    pub fn concat(&self, rhs: &Worm) -> Worm {
        let mut v = self.0.clone();
        v.extend_from_slice(&rhs.0);
        Worm(v)
    }

    /// `⟨α⟩A`.
    pub fn prepend(&self, alpha: Ordinal) -> Worm {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(alpha);
        v.extend_from_slice(&self.0);
        Worm(v)
    }

    fn head_len(&self, alpha: &Ordinal) -> usize {
        self.0.iter().take_while(|e| *e >= alpha).count()
    }

    /// `h_α(A)`: the longest prefix whose entries are all `≥ α`.
    pub fn head(&self, alpha: &Ordinal) -> Worm {
        Worm(self.0[..self.head_len(alpha)].to_vec())
    }

    /// `r_α(A)`: what follows the α-head.
    pub fn remainder(&self, alpha: &Ordinal) -> Worm {
        Worm(self.0[self.head_len(alpha)..].to_vec())
    }

    /// `c(⊤) = ⊤`, `c(⟨0⟩B) = B`, `c(⟨α+1⟩B) = ⟨α⟩B`.
    pub fn chop(&self) -> Result<Worm, DomainError> {
        let Some(first) = self.0.first() else {
            return Ok(Worm::top());
        };
        if first.is_zero() {
            Ok(Worm(self.0[1..].to_vec()))
        } else if first.is_successor() {
            let mut v = self.0.clone();
            v[0] = first.fund_seq(0);
            Ok(Worm(v))
        } else {
            Err(DomainError::ChopLimit(first.to_string()))
        }
    }

    /// The step-down `A⟦k⟧`.
    pub fn step_down(&self, k: u64) -> Worm {
        let Some(first) = self.0.first() else {
            return Worm::top();
        };
        if first.is_zero() {
            Worm(self.0[1..].to_vec())
        } else if first.is_successor() {
            let head = self.head(first);
            let rest = &self.0[head.len()..];
            let chopped = head.chop().expect("head starts with a successor");
            let mut v = Vec::with_capacity(chopped.len() * (k as usize + 1) + rest.len());
            for _ in 0..=k {
                v.extend_from_slice(&chopped.0);
            }
            v.extend_from_slice(rest);
            Worm(v)
        } else {
            let mut v = self.0.clone();
            v[0] = first.fund_seq(k);
            Worm(v)
        }
    }

    /// `A⁺`: every entry raised by one.
    pub fn promote(&self) -> Worm {
        Worm(self.0.iter().map(Ordinal::succ).collect())
    }

    /// `A⁻` on a worm whose entries are all `≥ 1`, lowering each natural entry by
    /// one. Used to undo [`promote`](Self::promote) on blocks.
    fn demote_nats(block: &[u64]) -> Vec<u64> {
        block.iter().map(|&e| e - 1).collect()
    }

    /// The translation into tree ordinals. Only natural-number entries are
    /// accepted.
    pub fn tau(&self) -> Result<TreeOrdinal, DomainError> {
        let nats = self.nat_entries()?;
        Ok(tau_nats(&nats))
    }

    /// `o(A) = o(τ(A))`.
    pub fn ordinal(&self) -> Result<Ordinal, DomainError> {
        Ok(self.tau()?.collapse())
    }

    fn nat_entries(&self) -> Result<Vec<u64>, DomainError> {
        self.0
            .iter()
            .map(|e| e.as_nat().ok_or_else(|| DomainError::TransfiniteEntry(e.to_string())))
            .collect()
    }

    pub fn parse(src: &str) -> Result<Worm, ParseError> {
        let trimmed = src.trim();
        if trimmed.is_empty() || trimmed == "T" || trimmed == "⊤" {
            return Ok(Worm::top());
        }
        let mut entries = Vec::new();
        let mut offset = src.len() - src.trim_start().len();
        for piece in trimmed.split('.') {
            let e = Ordinal::parse(piece).map_err(|mut err| {
                err.offset += offset;
                err
            })?;
            entries.push(e);
            offset += piece.len() + 1;
        }
        Ok(Worm(entries))
    }
}

fn tau_nats(entries: &[u64]) -> TreeOrdinal {
    let mut summands = Vec::new();
    let mut end = entries.len();
    while end > 0 {
        if entries[end - 1] == 0 {
            summands.push(TreeOrdinal::zero());
            end -= 1;
        } else {
            let mut start = end;
            while start > 0 && entries[start - 1] > 0 {
                start -= 1;
            }
            summands.push(tau_nats(&Worm::demote_nats(&entries[start..end])));
            end = start;
        }
    }
    TreeOrdinal::from_exponents(summands)
}

/// `(⟨α⟩ h_{α+1}(B))^{k+1} r_{α+1}(B)`.
pub fn q_form(alpha: &Ordinal, k: u64, b: &Worm) -> Worm {
    let level = alpha.succ();
    let head = b.head(&level).prepend(alpha.clone());
    let mut v = Vec::new();
    for _ in 0..=k {
        v.extend_from_slice(head.entries());
    }
    v.extend_from_slice(b.remainder(&level).entries());
    Worm(v)
}

/// `A <₀ B`, decided by comparing `o(A)` and `o(B)`.
pub fn lt0(a: &Worm, b: &Worm) -> Result<bool, DomainError> {
    Ok(a.ordinal()? < b.ordinal()?)
}

/// `B ⊴ A`: `B = ⊤`, or `A = D⟨α⟩C` and `B = ⟨β⟩C` with `β ≤ α`.
pub fn sub(b: &Worm, a: &Worm) -> bool {
    matched_entry(b, a).is_some_and(|m| m.is_none_or(|(beta, alpha)| beta <= alpha))
}

/// `B ⊴_m A`: as [`sub`], and additionally a finite `β` below a transfinite `α`
/// must be at most `m`.
pub fn sub_m(b: &Worm, a: &Worm, m: u64) -> bool {
    matched_entry(b, a).is_some_and(|pair| {
        pair.is_none_or(|(beta, alpha)| {
            beta <= alpha && (alpha.is_finite() || beta.as_nat().is_none_or(|n| n <= m))
        })
    })
}

/// For `B = ⟨β⟩C`, finds the `α` of `A = D⟨α⟩C`. `Some(None)` means `B = ⊤`.
fn matched_entry<'a>(b: &'a Worm, a: &'a Worm) -> Option<Option<(&'a Ordinal, &'a Ordinal)>> {
    let Some(beta) = b.first() else {
        return Some(None);
    };
    if a.len() < b.len() {
        return None;
    }
    let off = a.len() - b.len();
    (a.0[off + 1..] == b.0[1..]).then(|| Some((beta, &a.0[off])))
}

impl fmt::Display for Worm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("T");
        }
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Worm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Worm({self})")
    }
}

impl FromStr for Worm {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Worm::parse(s)
    }
}

impl serde::Serialize for Worm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Worm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = <std::borrow::Cow<'de, str>>::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Worm {
        s.parse().unwrap()
    }

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn length() {
        assert_eq!(Worm::top().len(), 0);
        assert_eq!(w("1.0").len(), 2);
        assert_eq!(w("0.0.0.0.0").len(), 5);
    }

    #[test]
    fn head_and_remainder() {
        assert_eq!(Worm::top().head(&o("3")), Worm::top());
        let a = w("2.1.3");
        assert_eq!(a.head(&o("2")), w("2"));
        assert_eq!(a.remainder(&o("2")), w("1.3"));
        let b = w("0.4.4");
        assert_eq!(b.remainder(&o("1")), b);
    }

    #[test]
    fn chop_clauses() {
        assert_eq!(Worm::top().chop(), Ok(Worm::top()));
        assert_eq!(w("0.1").chop(), Ok(w("1")));
        assert_eq!(w("w+1").chop(), Ok(w("w")));
        assert!(matches!(w("w.0").chop(), Err(DomainError::ChopLimit(_))));
    }

    #[test]
    fn step_down_examples() {
        assert_eq!(w("1").step_down(1), w("0.0"));
        assert_eq!(w("w").step_down(3), w("3"));
        assert_eq!(w("2.1").step_down(1), w("1.1.1"));
        assert_eq!(Worm::top().step_down(9), Worm::top());
        assert_eq!(w("0.5").step_down(9), w("5"));
    }

    #[test]
    fn promote_examples() {
        assert_eq!(Worm::top().promote(), Worm::top());
        assert_eq!(w("0.1").promote(), w("1.2"));
        assert_eq!(w("w").promote(), w("w+1"));
    }

    #[test]
    fn q_form_examples() {
        assert_eq!(q_form(&o("0"), 1, &Worm::top()), w("0.0"));
        assert_eq!(q_form(&o("1"), 0, &w("1")), w("1.1"));
        let b = w("3.2.0.5");
        for k in 0..4 {
            assert_eq!(q_form(&o("1"), k, &b), b.prepend(o("2")).step_down(k));
        }
    }

    #[test]
    fn tau_examples() {
        let z = TreeOrdinal::zero();
        let one = TreeOrdinal::one();
        assert_eq!(Worm::top().tau(), Ok(z.clone()));
        assert_eq!(w("0").tau(), Ok(one.clone()));
        assert_eq!(w("1").tau(), Ok(TreeOrdinal::omega_pow(one.clone())));
        let t = w("0.1").tau().unwrap();
        assert_eq!(t.exponents(), &[one.clone(), z.clone()]);
        assert_eq!(t.collapse(), o("w+1"));
        let t = w("1.0").tau().unwrap();
        assert_eq!(t.exponents(), &[z, one]);
        assert_eq!(t.collapse(), o("w"));
        assert!(matches!(w("w").tau(), Err(DomainError::TransfiniteEntry(_))));
    }

    #[test]
    fn worm_ordinals() {
        for n in 0..3 {
            assert_eq!(Worm::from_nats(&[n]).ordinal(), Ok(Ordinal::omega_tower(n).unwrap()));
        }
        assert_eq!(Worm::top().ordinal(), Ok(Ordinal::zero()));
        assert_eq!(w("0.1").ordinal(), Ok(o("w+1")));
    }

    #[test]
    fn lt0_examples() {
        let a = w("1.0.2");
        assert_eq!(lt0(&a, &a), Ok(false));
        assert_eq!(lt0(&w("0"), &w("1")), Ok(true));
        assert_eq!(lt0(&a.step_down(3), &a), Ok(true));
    }

    #[test]
    fn sub_examples() {
        let c = w("0.3");
        assert!(sub(&Worm::top(), &w("4.4")));
        assert!(sub(&w("1").concat(&c), &w("7.2").concat(&c)));
        assert!(!sub(&w("3").concat(&c), &w("7.2").concat(&c)));
        assert!(!sub(&w("1.0.0"), &w("1.0")));
        let d = w("1");
        assert!(!sub_m(&w("5").concat(&c), &d.concat(&w("w")).concat(&c), 3));
        assert!(sub_m(&w("2").concat(&c), &d.concat(&w("w")).concat(&c), 3));
        assert!(sub_m(&w("w").concat(&c), &w("w+1").concat(&c), 0));
    }

    #[test]
    fn text_round_trip() {
        for s in ["T", "1.0.w+2", "0", "w^w.3"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert_eq!(w(""), Worm::top());
        let e = Worm::parse("1.x").unwrap_err();
        assert_eq!((e.offset, e.token.as_str()), (2, "x"));
    }
}
