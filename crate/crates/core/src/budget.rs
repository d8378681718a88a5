use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Upper bound on the number of group elements an enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub limit: u64,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 100_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit }
    }

    pub fn unlimited() -> Self {
        Budget { limit: u64::MAX }
    }

    pub fn check(&self, needed: &BigUint) -> Result<()> {
        if *needed > BigUint::from(self.limit) {
            return Err(Error::BudgetExceeded {
                needed: needed.to_string(),
                limit: self.limit,
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_LIMIT)
    }
}
