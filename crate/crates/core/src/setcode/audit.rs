//! Per-thread recording of the measure bounds promised by the code operations.
//!
//! Auditing is off by default. While a [`Session`] is alive on a thread, every
//! bounded operation on that thread (including nested recursive calls)
//! recomputes the measures of its inputs and output and records the outcome.

use std::cell::RefCell;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditLog {
    pub checks: u64,
    pub violations: Vec<String>,
}

impl AuditLog {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: AuditLog) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
    }
}

thread_local! {
    static LOG: RefCell<Option<AuditLog>> = const { RefCell::new(None) };
}

/// Guard that keeps auditing enabled on the current thread.
#[must_use]
pub struct Session {
    _private: (),
}

impl Session {
    pub fn start() -> Self {
        LOG.with(|l| *l.borrow_mut() = Some(AuditLog::default()));
        Session { _private: () }
    }

    /// Stops auditing and returns what was recorded.
    pub fn finish(self) -> AuditLog {
        LOG.with(|l| l.borrow_mut().take()).unwrap_or_default()
    }
}

impl Drop for Session {
    fn drop(&mut self) {
        LOG.with(|l| l.borrow_mut().take());
    }
}

pub fn enabled() -> bool {
    LOG.with(|l| l.borrow().is_some())
}

pub(crate) fn check(op: &str, ok: bool, detail: impl FnOnce() -> String) {
    LOG.with(|l| {
        if let Some(log) = l.borrow_mut().as_mut() {
            log.checks += 1;
            if !ok {
                log.violations.push(format!("{op}: {}", detail()));
            }
        }
    });
}
