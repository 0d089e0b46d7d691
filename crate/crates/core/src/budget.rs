use crate::error::BudgetExceeded;

pub const DEFAULT_MAX_STEPS: u64 = 100_000_000;
pub const DEFAULT_MAX_BITS: u64 = 1 << 33;
pub const DEFAULT_MAX_TERM_SIZE: u64 = 1_000_000;

/// Resource limits for evaluators. Running out yields [`BudgetExceeded`], never a
/// wrong number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Budget {
    /// Evaluation-sequence steps (one per fundamental-sequence or successor step).
    pub max_steps: u64,
    /// Bit length of any big-integer value produced.
    pub max_bits: u64,
    /// Node count of any term or worm built along the way.
    pub max_term_size: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_steps: DEFAULT_MAX_STEPS,
            max_bits: DEFAULT_MAX_BITS,
            max_term_size: DEFAULT_MAX_TERM_SIZE,
        }
    }
}

impl Budget {
    pub fn with_steps(steps: u64) -> Self {
        Budget { max_steps: steps.max(1), ..Budget::default() }
    }

    pub fn with_bits(mut self, bits: u64) -> Self {
        self.max_bits = bits.max(1);
        self
    }

    pub fn with_term_size(mut self, size: u64) -> Self {
        self.max_term_size = size.max(1);
        self
    }

    pub fn meter(&self) -> Meter {
        Meter { budget: *self, used: 0 }
    }

    pub fn check_bits(&self, bits: u64) -> Result<(), BudgetExceeded> {
        if bits > self.max_bits {
            Err(BudgetExceeded::bits(self.max_bits))
        } else {
            Ok(())
        }
    }

    pub fn check_size(&self, size: u64) -> Result<(), BudgetExceeded> {
        if size > self.max_term_size {
            Err(BudgetExceeded::term_size(self.max_term_size))
        } else {
            Ok(())
        }
    }
}

/// Step counter charged against a [`Budget`].
#[derive(Debug, Clone)]
pub struct Meter {
    budget: Budget,
    used: u64,
}

impl Meter {
    #[inline]
    pub fn charge(&mut self, steps: u64) -> Result<(), BudgetExceeded> {
        match self.used.checked_add(steps) {
            Some(total) if total <= self.budget.max_steps => {
                self.used = total;
                Ok(())
            }
            _ => Err(BudgetExceeded::steps(self.budget.max_steps)),
        }
    }

    pub fn remaining(&self) -> u64 {
        self.budget.max_steps - self.used
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meter_stops_exactly_at_limit() {
        let mut m = Budget::with_steps(10).meter();
        assert!(m.charge(10).is_ok());
        assert_eq!(m.charge(1), Err(BudgetExceeded::steps(10)));
        assert_eq!(m.used(), 10);
    }

    #[test]
    fn overflowing_charge_is_an_error() {
        let mut m = Budget::with_steps(u64::MAX).meter();
        m.charge(u64::MAX - 1).unwrap();
        assert!(m.charge(u64::MAX).is_err());
    }
}
