//! Ordinals below ε₀ in Cantor normal form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::budget::DEFAULT_MAX_TERM_SIZE;
use crate::error::{BudgetExceeded, ParseError};
use crate::syntax::{Atom, Parser, Sum};

/// One summand `ω^exponent · coeff` of a Cantor normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub exponent: Ordinal,
    pub coeff: u64,
}

/// An ordinal below ε₀, `ω^e₁·c₁ + … + ω^eₙ·cₙ` with `e₁ > … > eₙ` and every `cᵢ ≥ 1`.
///
/// The representation is canonical, so structural equality is ordinal equality
/// and the derived lexicographic comparison is the ordinal order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal(Option<Arc<[Term]>>);

impl Ordinal {
    pub const fn zero() -> Self {
        Ordinal(None)
    }

    pub fn one() -> Self {
        Ordinal::nat(1)
    }

    pub fn nat(n: u64) -> Self {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal(Some(Arc::from(vec![Term { exponent: Ordinal::zero(), coeff: n }])))
        }
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `ω^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal::monomial(exponent, 1)
    }

    /// `ω^exponent · coeff`.
    pub fn monomial(exponent: Ordinal, coeff: u64) -> Self {
        if coeff == 0 {
            return Ordinal::zero();
        }
        Ordinal(Some(Arc::from(vec![Term { exponent, coeff }])))
    }

    /// Builds an ordinal from CNF terms. Terms must already be canonical:
    /// strictly decreasing exponents and positive coefficients.
    pub fn from_terms(terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| t.coeff > 0));
        debug_assert!(terms.windows(2).all(|w| w[0].exponent > w[1].exponent));
        if terms.is_empty() {
            Ordinal::zero()
        } else {
            Ordinal(Some(Arc::from(terms)))
        }
    }

    pub fn terms(&self) -> &[Term] {
        self.0.as_deref().unwrap_or(&[])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_none()
    }

    pub fn is_successor(&self) -> bool {
        self.terms().last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        self.terms().last().is_some_and(|t| !t.exponent.is_zero())
    }

    /// The value as a natural number, if finite.
    pub fn as_nat(&self) -> Option<u64> {
        match self.terms() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coeff),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_nat().is_some()
    }

    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms().first().map(|t| &t.exponent)
    }

    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// Ordinal sum `self + rhs`. Summands of `self` below the leading power of
    /// `rhs` are absorbed.
    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        let Some(lead) = rhs.terms().first() else {
            return self.clone();
        };
        let mut out: Vec<Term> = Vec::with_capacity(self.terms().len() + rhs.terms().len());
        let mut merged = false;
        for t in self.terms() {
            match t.exponent.cmp(&lead.exponent) {
                Ordering::Greater => out.push(t.clone()),
                Ordering::Equal => {
                    out.push(Term { exponent: t.exponent.clone(), coeff: t.coeff.saturating_add(lead.coeff) });
                    merged = true;
                    break;
                }
                Ordering::Less => break,
            }
        }
        let rest = if merged { &rhs.terms()[1..] } else { rhs.terms() };
        out.extend(rest.iter().cloned());
        Ordinal::from_terms(out)
    }

    /// `self · n` for a natural number `n`, i.e. `self` added to itself `n` times.
    pub fn mul_nat(&self, n: u64) -> Ordinal {
        if n == 0 || self.is_zero() {
            return Ordinal::zero();
        }
        let mut terms = self.terms().to_vec();
        terms[0].coeff = terms[0].coeff.saturating_mul(n);
        Ordinal::from_terms(terms)
    }

    /// The `x`-th element of the fundamental sequence: `0[x] = 0`, `(α+1)[x] = α`,
    /// `(γ+ω^(β+1))[x] = γ+ω^β·x` and `(γ+ω^λ)[x] = γ+ω^(λ[x])`.
    pub fn fund_seq(&self, x: u64) -> Ordinal {
        let terms = self.terms();
        let Some(last) = terms.last() else {
            return Ordinal::zero();
        };
        let mut out: Vec<Term> = terms[..terms.len() - 1].to_vec();
        if last.coeff > 1 {
            out.push(Term { exponent: last.exponent.clone(), coeff: last.coeff - 1 });
        }
        if last.exponent.is_zero() {
            // successor: dropping one unit is all there is to do
        } else if last.exponent.is_successor() {
            if x > 0 {
                out.push(Term { exponent: last.exponent.fund_seq(x), coeff: x });
            }
        } else {
            out.push(Term { exponent: last.exponent.fund_seq(x), coeff: 1 });
        }
        Ordinal::from_terms(out)
    }

    /// `N0 = 0`, `N(ω^α + β) = 1 + Nα + Nβ` on the CNF decomposition.
    pub fn norm(&self) -> u64 {
        self.terms()
            .iter()
            .fold(0u64, |acc, t| acc.saturating_add(t.coeff.saturating_mul(1u64.saturating_add(t.exponent.norm()))))
    }

    /// Number of CNF terms in the whole term tree.
    pub fn node_count(&self) -> u64 {
        self.terms().iter().map(|t| 1 + t.exponent.node_count()).sum()
    }

    /// `ω_0 = 1`, `ω_{n+1} = ω^(ω_n)`.
    pub fn omega_tower(n: u64) -> Result<Ordinal, BudgetExceeded> {
        Ordinal::omega_tower_within(n, DEFAULT_MAX_TERM_SIZE)
    }

    pub fn omega_tower_within(n: u64, max_nodes: u64) -> Result<Ordinal, BudgetExceeded> {
        if n.saturating_add(1) > max_nodes {
            return Err(BudgetExceeded::term_size(max_nodes));
        }
        let mut o = Ordinal::one();
        for _ in 0..n {
            o = Ordinal::omega_pow(o);
        }
        Ok(o)
    }

    pub fn parse(src: &str) -> Result<Ordinal, ParseError> {
        Ordinal::parse_within(src, DEFAULT_MAX_TERM_SIZE)
    }

    pub fn parse_within(src: &str, max_nodes: u64) -> Result<Ordinal, ParseError> {
        let ast = Parser::parse(src)?;
        let o = from_sum(&ast);
        if o.node_count() > max_nodes {
            return Err(ParseError {
                offset: 0,
                token: src.chars().take(16).collect(),
                message: format!("term exceeds {max_nodes} nodes"),
            });
        }
        Ok(o)
    }
}

fn from_sum(sum: &Sum) -> Ordinal {
    sum.0.iter().fold(Ordinal::zero(), |acc, s| {
        let base = match &s.atom {
            Atom::Nat(n) => Ordinal::nat(*n),
            Atom::Power(e) => Ordinal::omega_pow(from_sum(e)),
            Atom::Group(inner) => from_sum(inner),
        };
        acc.add(&base.mul_nat(s.coeff))
    })
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Some(a), Some(b)) = (&self.0, &other.0) {
            if Arc::ptr_eq(a, b) {
                return Ordering::Equal;
            }
        }
        for (a, b) in self.terms().iter().zip(other.terms()) {
            match a.exponent.cmp(&b.exponent).then(a.coeff.cmp(&b.coeff)) {
                Ordering::Equal => continue,
                // a larger coefficient on an equal power, or a larger power, decides
                ord => return ord,
            }
        }
        self.terms().len().cmp(&other.terms().len())
    }
}

/// Three-way comparison in the ordinal order.
pub fn compare(a: &Ordinal, b: &Ordinal) -> Ordering {
    a.cmp(b)
}

fn fmt_exponent(e: &Ordinal, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if e.is_finite() || *e == Ordinal::omega() {
        write!(f, "{e}")
    } else {
        write!(f, "({e})")
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms().iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coeff)?;
                continue;
            }
            f.write_str("w")?;
            if t.exponent != Ordinal::one() {
                f.write_str("^")?;
                fmt_exponent(&t.exponent, f)?;
            }
            if t.coeff > 1 {
                write!(f, "*{}", t.coeff)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ordinal({self})")
    }
}

impl FromStr for Ordinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ordinal::parse(s)
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

impl serde::Serialize for Ordinal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Ordinal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = <std::borrow::Cow<'de, str>>::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
