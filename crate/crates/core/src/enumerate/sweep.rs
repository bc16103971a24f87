use crate::closure::derived_ideal;
use crate::error::{BckError, Result};
use crate::series::{lower_central_series, pseudo_center, solvability_class, upper_central_series};

use super::{canonical_form, enumerate_bck, CanonicalForm};

/// Invariants of one isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRecord {
    pub canonical: CanonicalForm,
    pub order: usize,
    pub nilpotence_class: usize,
    pub solvability_class: usize,
    pub commutative: bool,
    pub pseudo_center_size: usize,
    pub derived_ideal_size: usize,
}

/// One record per isomorphism class of every order `1..=n_max`.
///
/// Fails with [`BckError::NotNilpotent`] on any algebra whose central series
/// do not both reach the end, and panics if the solvability class exceeds
/// the nilpotence class.
pub fn sweep(n_max: usize) -> Result<Vec<SweepRecord>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for a in enumerate_bck(n)? {
            let lower = lower_central_series(&a).class_value;
            let upper = upper_central_series(&a).class_value;
            let (Some(nil), Some(_)) = (lower, upper) else {
                return Err(BckError::NotNilpotent { table: a.rows() });
            };
            let solv = solvability_class(&a).ok_or_else(|| BckError::NotNilpotent {
                table: a.rows(),
            })?;
            assert!(solv <= nil, "solvability class {solv} > nilpotence class {nil}");
            let commutative = a.is_commutative();
            assert_eq!(commutative, nil <= 1);
            out.push(SweepRecord {
                canonical: canonical_form(&a),
                order: n,
                nilpotence_class: nil,
                solvability_class: solv,
                commutative,
                pseudo_center_size: pseudo_center(&a).len(),
                derived_ideal_size: derived_ideal(&a).len(),
            });
        }
    }
    Ok(out)
}
