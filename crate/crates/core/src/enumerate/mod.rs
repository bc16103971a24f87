//! Enumeration of finite BCK-algebras up to isomorphism, and the infinite
//! counterexample `U`.

mod canonical;
mod search;
mod sweep;
pub mod wronski;

pub use canonical::{canonical_form, is_canonical, CanonicalForm, CANONICAL_MAX_ORDER};
pub use search::{canonical_tables, labeled_tables};
pub use sweep::{sweep, SweepRecord};

use crate::algebra::FiniteBck;
use crate::error::{BckError, Result};
use crate::Element;

/// Largest order [`enumerate_bck`] will attempt.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// One representative per isomorphism class of BCK-algebras of order `n`,
/// each in canonical form, sorted by table.
pub fn enumerate_bck(n: usize) -> Result<Vec<FiniteBck>> {
    if n == 0 {
        return Err(BckError::Malformed("order must be at least 1".into()));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(BckError::TooLarge(format!(
            "enumeration is limited to order {MAX_ENUMERATION_ORDER}, asked for {n}"
        )));
    }
    Ok(canonical_tables(n))
}

/// The chain `0 < 1 < ... < n` with `x*y = 0` if `x <= y` and `x` otherwise.
pub fn chain_algebra(n: usize) -> FiniteBck {
    let size = n + 1;
    let table: Vec<Element> = (0..size)
        .flat_map(|x| (0..size).map(move |y| if x <= y { 0 } else { x }))
        .collect();
    FiniteBck::from_flat_unchecked(size, table)
}
