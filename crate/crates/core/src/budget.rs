use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::Error;

/// Shared work counter for the potentially explosive computations
/// (Graver completion, fiber enumeration, partition search).
///
/// One `Budget` is charged by every operation dispatched from a single
/// run, so the total work across phases is bounded by a single limit.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    spent: AtomicU64,
}

pub const DEFAULT_BUDGET: u64 = 1_000_000;

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            spent: AtomicU64::new(0),
        }
    }

    pub fn charge(&self, amount: u64, phase: &'static str) -> Result<(), Error> {
        let before = self.spent.fetch_add(amount, Ordering::Relaxed);
        if before + amount > self.limit {
            Err(Error::BudgetExhausted {
                phase,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn spent(&self) -> u64 {
        self.spent.load(Ordering::Relaxed)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}
