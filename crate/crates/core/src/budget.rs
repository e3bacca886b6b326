//! Cooperative node budgets and cancellation for the exponential searches.

use crate::error::{Error, Result};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

/// Shared cancellation flag. Cloning shares the flag.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// Per-search accounting: a node counter against a limit plus an optional
/// cancellation token checked every few thousand nodes.
#[derive(Debug)]
pub struct SearchCtx {
    used: u64,
    limit: u64,
    cancel: Option<CancelToken>,
}

impl SearchCtx {
    pub fn unlimited() -> Self {
        Self { used: 0, limit: u64::MAX, cancel: None }
    }

    pub fn with_budget(limit: u64) -> Self {
        Self { used: 0, limit, cancel: None }
    }

    pub fn with_cancel(mut self, token: CancelToken) -> Self {
        self.cancel = Some(token);
        self
    }

    /// Charge one search node. Errors once the budget is gone or the
    /// token fires.
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::BudgetExhausted);
        }
        if self.used & 0xfff == 0 {
            if let Some(tok) = &self.cancel {
                if tok.is_cancelled() {
                    return Err(Error::Cancelled);
                }
            }
        }
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

impl Default for SearchCtx {
    fn default() -> Self {
        Self::unlimited()
    }
}
