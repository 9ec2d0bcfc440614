use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Cooperative wall-clock limit, polled by the long-running kernels.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn with_timeout(limit: Duration) -> Self {
        Budget {
            deadline: Instant::now().checked_add(limit),
        }
    }

    pub fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}
