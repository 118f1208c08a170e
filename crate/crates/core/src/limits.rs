//! Enumeration caps.
//!
//! Every exhaustive routine refuses to start when the object it would walk is
//! larger than [`max_cells`]. The cap defaults to [`DEFAULT_MAX_CELLS`] and can
//! be lowered or raised through the `WM_MAX_CELLS` environment variable, read
//! once per process.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_CELLS: u64 = 20_000_000;

/// Largest group materialized by the breadth-first word-length oracle.
pub const MAX_CAYLEY_TABLE: u64 = 4_000_000;

pub fn max_cells() -> u64 {
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("WM_MAX_CELLS")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_CELLS)
    })
}

pub(crate) fn ensure_within(what: impl Into<String>, size: u128, cap: u64) -> Result<()> {
    if size > cap as u128 {
        return Err(Error::OverCap { what: what.into(), size, cap });
    }
    Ok(())
}
