//! Quotients by ideals, commutativization, homomorphisms, direct products and
//! isomorphism testing.

mod iso;
mod morphism;
mod product;

pub use iso::{is_isomorphic, relabel};
pub use morphism::{
    all_homomorphisms, induced_commutativization_map, universal_property_check, Morphism,
    HOM_SEARCH_LIMIT,
};
pub use product::{direct_product, pair_index, split_index};

use crate::algebra::FiniteBck;
use crate::closure::{derived_ideal, require_ideal};
use crate::error::Result;
use crate::set::ElementSet;
use crate::Element;

/// `A/I` together with the projection data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAlgebra {
    pub algebra: FiniteBck,
    /// Class index of each element of the source.
    pub class_of: Vec<usize>,
    pub ideal: ElementSet,
    /// Least element of each class.
    pub representative: Vec<Element>,
}

impl QuotientAlgebra {
    /// Members of class `c`.
    pub fn class(&self, c: usize) -> ElementSet {
        ElementSet::from_elements(
            self.class_of.len(),
            self.class_of
                .iter()
                .enumerate()
                .filter(|&(_, &k)| k == c)
                .map(|(x, _)| x),
        )
    }

    /// The natural projection `A -> A/I`.
    pub fn projection(&self, source: &FiniteBck) -> Morphism {
        Morphism::new(source.clone(), self.algebra.clone(), self.class_of.clone())
            .expect("class map is total")
    }
}

/// `A/I` for an ideal `I`, with `x ~ y` iff `x*y, y*x ∈ I`.
///
/// Classes are numbered by ascending least member, so the class of `0`
/// (which is `I` itself) is class `0`.
pub fn quotient(a: &FiniteBck, ideal: &ElementSet) -> Result<QuotientAlgebra> {
    require_ideal(a, ideal)?;
    let n = a.order();
    let mut class_of = vec![usize::MAX; n];
    let mut representative = Vec::new();
    for x in a.elements() {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = representative.len();
        representative.push(x);
        for (y, slot) in class_of.iter_mut().enumerate().skip(x) {
            if ideal.contains(a.op(x, y)) && ideal.contains(a.op(y, x)) {
                *slot = c;
            }
        }
    }
    let m = representative.len();
    let mut rows = vec![vec![0; m]; m];
    for (i, &x) in representative.iter().enumerate() {
        for (j, &y) in representative.iter().enumerate() {
            rows[i][j] = class_of[a.op(x, y)];
        }
    }
    // ideals induce congruences, so the quotient table needs no re-check
    debug_assert!(crate::algebra::validate(&rows).unwrap().is_valid());
    Ok(QuotientAlgebra {
        algebra: FiniteBck::from_rows_unchecked(&rows),
        class_of,
        ideal: ideal.clone(),
        representative,
    })
}

/// `A^comm = A / DI(A)`.
pub fn commutativization(a: &FiniteBck) -> QuotientAlgebra {
    quotient(a, &derived_ideal(a)).expect("the derived ideal is an ideal")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{derived_ideal, derived_subalgebra};
    use crate::enumerate::chain_algebra;
    use crate::error::{BckError, IdealFailure};
    use crate::examples::{table1, two_element};

    #[test]
    fn table1_commutativization_is_two_element() {
        let a = table1();
        let q = commutativization(&a);
        assert_eq!(q.algebra, two_element());
        assert!(q.algebra.is_commutative());
        assert_eq!(q.class(0), derived_ideal(&a));
        assert_eq!(q.representative, vec![0, 3]);
    }

    #[test]
    fn trivial_ideals() {
        let a = table1();
        let q = quotient(&a, &a.zero_set()).unwrap();
        assert_eq!(q.algebra, a);
        let q = quotient(&a, &a.carrier()).unwrap();
        assert!(q.algebra.is_trivial());
    }

    #[test]
    fn rejects_non_ideal_with_witness() {
        let a = table1();
        let err = quotient(&a, &derived_subalgebra(&a)).unwrap_err();
        assert_eq!(
            err,
            BckError::NotAnIdeal {
                reason: IdealFailure::Implication { x: 4, y: 2, product: 2 }
            }
        );
    }

    #[test]
    fn commutative_algebra_is_its_own_commutativization() {
        let c = two_element();
        assert_eq!(commutativization(&c).algebra, c);
    }

    #[test]
    fn m3_commutativization() {
        // DI(M_3) = {0,1,2}, so the quotient has two classes
        let q = commutativization(&chain_algebra(3));
        assert_eq!(q.algebra, two_element());
    }

    #[test]
    fn projection_is_surjective_hom_with_kernel_ideal() {
        let a = table1();
        let q = commutativization(&a);
        let pi = q.projection(&a);
        assert!(pi.is_hom() && pi.is_surjective());
        assert_eq!(pi.kernel(), &derived_ideal(&a));
    }
}
