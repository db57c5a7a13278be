//! Step budgets for observations of infinite objects.
//!
//! Every operation that inspects a name carries a [`FuelMeter`]. Fuel is a
//! global budget shared by an entire evaluation tree: a machine charging one
//! unit per executed instruction, a search charging per candidate inspected,
//! and so on. Running out of fuel is not an error condition of the kernel,
//! it is the third truth value: "not yet observed".

use thiserror::Error;

/// Why an observation stopped before producing a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Interrupt {
    /// The step budget ran out before the requested bit was produced.
    #[error("fuel exhausted")]
    FuelExhausted,
    /// A partial name was queried beyond its materialized prefix. Only
    /// raised by names constructed for finite-depth searches; total names
    /// never produce it.
    #[error("query beyond the materialized prefix of a partial name")]
    BeyondPrefix,
}

/// Outcome of a fuel-bounded bit query.
pub type Observation<T> = Result<T, Interrupt>;

/// A mutable step budget.
#[derive(Debug)]
pub struct FuelMeter {
    remaining: u64,
}

impl FuelMeter {
    pub fn new(fuel: u64) -> Self {
        FuelMeter { remaining: fuel }
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }

    /// Deduct `cost` steps, failing with [`Interrupt::FuelExhausted`] if the
    /// budget cannot cover them.
    pub fn charge(&mut self, cost: u64) -> Observation<()> {
        if self.remaining >= cost {
            self.remaining -= cost;
            Ok(())
        } else {
            self.remaining = 0;
            Err(Interrupt::FuelExhausted)
        }
    }

    /// Run `f` with the budget capped at `cap` steps. Whatever the capped
    /// run consumes is deducted from this meter. Returns the result together
    /// with a flag telling whether a `FuelExhausted` coming out of `f` was
    /// merely the cap (the parent still has fuel) rather than true
    /// exhaustion.
    pub fn run_capped<T>(
        &mut self,
        cap: u64,
        f: impl FnOnce(&mut FuelMeter) -> Observation<T>,
    ) -> CappedOutcome<T> {
        let granted = cap.min(self.remaining);
        let mut child = FuelMeter::new(granted);
        let result = f(&mut child);
        let consumed = granted - child.remaining;
        self.remaining -= consumed;
        let cap_limited = matches!(result, Err(Interrupt::FuelExhausted)) && self.remaining > 0;
        CappedOutcome {
            result,
            consumed,
            cap_limited,
        }
    }
}

/// Result of [`FuelMeter::run_capped`].
pub struct CappedOutcome<T> {
    pub result: Observation<T>,
    pub consumed: u64,
    /// True when the inner run hit its cap while the outer meter still has
    /// fuel; the caller may reschedule the work later.
    pub cap_limited: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charge_exhausts_exactly() {
        let mut m = FuelMeter::new(3);
        assert!(m.charge(2).is_ok());
        assert!(m.charge(1).is_ok());
        assert_eq!(m.charge(1), Err(Interrupt::FuelExhausted));
    }

    #[test]
    fn capped_run_deducts_only_consumption() {
        let mut m = FuelMeter::new(100);
        let out = m.run_capped(10, |c| c.charge(4));
        assert!(out.result.is_ok());
        assert_eq!(out.consumed, 4);
        assert_eq!(m.remaining(), 96);
    }

    #[test]
    fn cap_limited_is_distinguished_from_true_exhaustion() {
        let mut m = FuelMeter::new(100);
        let out = m.run_capped(5, |c| c.charge(10));
        assert!(out.cap_limited);
        assert_eq!(m.remaining(), 95);

        let mut tight = FuelMeter::new(5);
        let out = tight.run_capped(5, |c| c.charge(10));
        assert!(!out.cap_limited);
        assert_eq!(tight.remaining(), 0);
    }
}
