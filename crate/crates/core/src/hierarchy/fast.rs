//! Big-integer evaluators: `2^x_n`, the fast-growing `F_α`, and a Hardy
//! evaluator that works on whole CNF terms instead of single steps.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::budget::{Budget, Meter};
use crate::error::BudgetExceeded;
use crate::ordinal::Ordinal;

fn pow2(y: &BigUint, budget: &Budget) -> Result<BigUint, BudgetExceeded> {
    let bits = y
        .to_u64()
        .and_then(|e| e.checked_add(1))
        .ok_or_else(|| BudgetExceeded::bits(budget.max_bits))?;
    budget.check_bits(bits)?;
    Ok(BigUint::one() << e_usize(bits - 1))
}

fn e_usize(n: u64) -> usize {
    usize::try_from(n).expect("bit counts within the budget fit in usize")
}

fn u64_arg(x: &BigUint, budget: &Budget) -> Result<u64, BudgetExceeded> {
    x.to_u64().ok_or_else(|| BudgetExceeded::steps(budget.max_steps))
}

/// `2^x_0 = x`, `2^x_{n+1} = 2^{2^x_n}`.
pub fn superexp(x: u64, n: u64, budget: &Budget) -> Result<BigUint, BudgetExceeded> {
    superexp_big(BigUint::from(x), n, budget)
}

fn superexp_big(x: BigUint, n: u64, budget: &Budget) -> Result<BigUint, BudgetExceeded> {
    let mut y = x;
    for _ in 0..n {
        y = pow2(&y, budget)?;
    }
    Ok(y)
}

/// `F_0(x) = 2^x_x`, `F_{α+1}(x) = F_α^{(x)}(x)`, `F_λ(x) = F_{λ[x]}(x)`.
///
/// For `α ≥ 1` and `x ≥ 2` the value is far beyond any realistic budget; the
/// expected outcome is [`BudgetExceeded`].
pub fn fast_growing(alpha: &Ordinal, x: u64, budget: &Budget) -> Result<BigUint, BudgetExceeded> {
    let mut meter = budget.meter();
    fast_rec(alpha, BigUint::from(x), budget, &mut meter)
}

fn fast_rec(alpha: &Ordinal, x: BigUint, budget: &Budget, meter: &mut Meter) -> Result<BigUint, BudgetExceeded> {
    meter.charge(1)?;
    if alpha.is_zero() {
        let n = u64_arg(&x, budget)?;
        return superexp_big(x, n, budget);
    }
    if alpha.is_successor() {
        let pred = alpha.fund_seq(0);
        let times = u64_arg(&x, budget)?;
        let mut y = x;
        for _ in 0..times {
            y = fast_rec(&pred, y, budget, meter)?;
        }
        return Ok(y);
    }
    let n = u64_arg(&x, budget)?;
    fast_rec(&alpha.fund_seq(n), x, budget, meter)
}

/// `H_α(x)` computed by composition: `H_{β+γ} = H_β ∘ H_γ` over the CNF terms,
/// `H_{ω^e·c} = H_{ω^e}^c`, the closed forms `x+1`, `2x`, `x·2^x` for
/// `e = 0, 1, 2`, `H_{ω^{e+1}}(x) = H_{ω^e}^x(x)` and `H_{ω^λ}(x) = H_{ω^{λ[x]}}(x)`.
pub fn collapsed_hardy(alpha: &Ordinal, x: u64, budget: &Budget) -> Result<BigUint, BudgetExceeded> {
    let mut meter = budget.meter();
    collapsed_rec(alpha, BigUint::from(x), budget, &mut meter)
}

fn collapsed_rec(alpha: &Ordinal, x: BigUint, budget: &Budget, meter: &mut Meter) -> Result<BigUint, BudgetExceeded> {
    let mut y = x;
    for term in alpha.terms().iter().rev() {
        for _ in 0..term.coeff {
            y = omega_power(&term.exponent, y, budget, meter)?;
        }
    }
    Ok(y)
}

fn omega_power(e: &Ordinal, x: BigUint, budget: &Budget, meter: &mut Meter) -> Result<BigUint, BudgetExceeded> {
    meter.charge(1)?;
    let check = |v: BigUint| budget.check_bits(v.bits()).map(|_| v);
    match e.as_nat() {
        Some(0) => return check(x + 1u32),
        Some(1) => return check(x << 1u32),
        Some(2) => {
            let shift = x.to_u64().filter(|&s| s.saturating_add(x.bits()) <= budget.max_bits);
            let shift = shift.ok_or_else(|| BudgetExceeded::bits(budget.max_bits))?;
            return Ok(x << e_usize(shift));
        }
        _ => {}
    }
    if e.is_successor() {
        let pred = e.fund_seq(0);
        let times = u64_arg(&x, budget)?;
        let mut y = x;
        for _ in 0..times {
            y = omega_power(&pred, y, budget, meter)?;
        }
        Ok(y)
    } else {
        let n = u64_arg(&x, budget)?;
        // ω^(λ[n]) is a single term, but λ[n] may be 0 when n = 0
        collapsed_rec(&Ordinal::omega_pow(e.fund_seq(n)), x, budget, meter)
    }
}

/// Value rendering: the exact decimal up to `max_digits`, otherwise a summary.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(untagged)]
pub enum BigSummary {
    Exact(String),
    Summary {
        bits: u64,
        digits: u64,
        leading_digits: String,
        /// Whether `digits` and `leading_digits` are estimates.
        approximate: bool,
        hash: String,
    },
}

/// Values up to this many bits are converted to decimal exactly for summaries.
const EXACT_DECIMAL_BITS: u64 = 1 << 20;

impl BigSummary {
    pub fn of(v: &BigUint, max_digits: u64) -> BigSummary {
        let bits = v.bits();
        // 10^d has more than 3.32·d bits
        if bits <= max_digits.saturating_mul(3).saturating_add(3) {
            let s = v.to_str_radix(10);
            if s.len() as u64 <= max_digits {
                return BigSummary::Exact(s);
            }
        }
        let hash = {
            use sha2::{Digest, Sha256};
            let digest = Sha256::digest(v.to_bytes_le());
            digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
        };
        if bits <= EXACT_DECIMAL_BITS {
            let s = v.to_str_radix(10);
            return BigSummary::Summary {
                bits,
                digits: s.len() as u64,
                leading_digits: s[..20.min(s.len())].to_string(),
                approximate: false,
                hash,
            };
        }
        // log10 from the top 64 bits; about ten significant digits survive
        let shift = bits - 64;
        let top = (v >> e_usize(shift)).to_u64().expect("64 bits");
        let log10 = (top as f64).log10() + shift as f64 * std::f64::consts::LOG10_2;
        let frac = log10.fract();
        let lead = 10f64.powf(frac + 9.0);
        BigSummary::Summary {
            bits,
            digits: log10.floor() as u64 + 1,
            leading_digits: format!("{:.0}", lead.floor()),
            approximate: true,
            hash,
        }
    }
}

impl std::fmt::Display for BigSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BigSummary::Exact(s) => f.write_str(s),
            BigSummary::Summary { bits, digits, leading_digits, approximate, hash } => {
                let tilde = if *approximate { "~" } else { "" };
                write!(f, "{tilde}{leading_digits}... ({tilde}{digits} digits, {bits} bits, sha256:{hash})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::hardy::hardy_ord;
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn superexp_values() {
        let b = Budget::default();
        assert_eq!(superexp(7, 0, &b).unwrap(), BigUint::from(7u32));
        assert_eq!(superexp(2, 2, &b).unwrap(), BigUint::from(16u32));
        assert_eq!(superexp(1, 1, &b).unwrap(), BigUint::from(2u32));
        assert_eq!(superexp(3, 3, &b).unwrap(), BigUint::one() << 256usize);
        assert!(superexp(0, 100, &b).is_err());
    }

    #[test]
    fn fast_growing_values() {
        let b = Budget::default();
        assert_eq!(fast_growing(&o("0"), 1, &b).unwrap(), BigUint::from(2u32));
        assert_eq!(fast_growing(&o("0"), 2, &b).unwrap(), BigUint::from(16u32));
        assert_eq!(fast_growing(&o("0"), 3, &b).unwrap(), BigUint::one() << 256usize);
        assert_eq!(fast_growing(&o("1"), 1, &b).unwrap(), BigUint::from(2u32));
        for a in ["0", "1", "w", "w^w+3"] {
            use num_traits::Zero;
            assert!(fast_growing(&o(a), 0, &b).unwrap().is_zero());
        }
        for a in ["1", "2", "w"] {
            assert!(fast_growing(&o(a), 2, &b).is_err(), "{a}");
        }
    }

    #[test]
    fn collapsed_matches_steps() {
        let b = Budget::default();
        assert_eq!(collapsed_hardy(&o("w*2"), 3, &b).unwrap(), BigUint::from(12u32));
        assert_eq!(collapsed_hardy(&o("w^2"), 2, &b).unwrap(), BigUint::from(8u32));
        for a in ["0", "5", "w+2", "w^2*2+w", "w^3", "w^w", "w^(w+1)"] {
            for x in 0..4 {
                let slow = hardy_ord(&o(a), x, &Budget::with_steps(1_000_000));
                if let Ok(v) = slow {
                    assert_eq!(collapsed_hardy(&o(a), x, &b).unwrap(), BigUint::from(v), "{a} {x}");
                }
            }
        }
    }

    #[test]
    fn summaries() {
        assert_eq!(BigSummary::of(&BigUint::from(12345u32), 10), BigSummary::Exact("12345".into()));
        let big = BigUint::one() << 256usize;
        let BigSummary::Summary { digits, leading_digits, approximate, .. } = BigSummary::of(&big, 10) else {
            panic!()
        };
        assert_eq!((digits, approximate), (78, false));
        assert_eq!(leading_digits, "11579208923731619542");
        let huge = BigUint::one() << (1usize << 21);
        let BigSummary::Summary { digits, leading_digits, approximate, .. } = BigSummary::of(&huge, 10) else {
            panic!()
        };
        assert!(approximate);
        assert_eq!(digits, 631_306);
        assert_eq!(leading_digits, "4544297019");
    }
}
