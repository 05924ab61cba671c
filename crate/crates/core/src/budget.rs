use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Wall-clock allowance for long enumerations and checks.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    start: Instant,
    limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget {
            start: Instant::now(),
            limit: None,
        }
    }

    pub fn millis(ms: u64) -> Budget {
        Budget {
            start: Instant::now(),
            limit: Some(Duration::from_millis(ms)),
        }
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    pub fn check(&self) -> Result<()> {
        match self.limit {
            Some(limit) if self.start.elapsed() > limit => Err(Error::BudgetExceeded {
                budget_ms: limit.as_millis() as u64,
            }),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::unlimited()
    }
}
