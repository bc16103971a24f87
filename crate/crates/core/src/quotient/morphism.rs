use crate::algebra::FiniteBck;
use crate::closure::derived_ideal;
use crate::error::{BckError, Result};
use crate::set::ElementSet;
use crate::Element;

use super::commutativization;

/// A total map between carriers, with its homomorphism data computed once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: FiniteBck,
    target: FiniteBck,
    map: Vec<Element>,
    counterexample: Option<(Element, Element)>,
    surjective: bool,
    kernel: ElementSet,
}

impl Morphism {
    pub fn new(source: FiniteBck, target: FiniteBck, map: Vec<Element>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(BckError::Malformed(format!(
                "map has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        for &v in &map {
            target.check_element(v)?;
        }
        let counterexample = hom_counterexample(&source, &target, &map);
        let mut hit = vec![false; target.order()];
        for &v in &map {
            hit[v] = true;
        }
        let kernel = source.set(source.elements().filter(|&x| map[x] == 0));
        Ok(Morphism {
            surjective: hit.into_iter().all(|h| h),
            source,
            target,
            map,
            counterexample,
            kernel,
        })
    }

    pub fn identity(a: &FiniteBck) -> Self {
        Self::new(a.clone(), a.clone(), a.elements().collect()).expect("identity is total")
    }

    pub fn source(&self) -> &FiniteBck {
        &self.source
    }

    pub fn target(&self) -> &FiniteBck {
        &self.target
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    /// `f(x*y) = f(x)*f(y)` for all pairs. This forces `f(0) = 0`.
    pub fn is_hom(&self) -> bool {
        self.counterexample.is_none()
    }

    /// First pair breaking the homomorphism law.
    pub fn counterexample(&self) -> Option<(Element, Element)> {
        self.counterexample
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn is_bijective(&self) -> bool {
        self.surjective && self.source.order() == self.target.order()
    }

    /// Preimage of `0`.
    pub fn kernel(&self) -> &ElementSet {
        &self.kernel
    }

    pub fn image_of(&self, s: &ElementSet) -> ElementSet {
        self.target.set(s.iter().map(|x| self.map[x]))
    }

    pub fn image(&self) -> ElementSet {
        self.image_of(&self.source.carrier())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        if self.target != other.source {
            return Err(BckError::Malformed("composition of mismatched maps".into()));
        }
        Morphism::new(
            self.source.clone(),
            other.target.clone(),
            self.map.iter().map(|&x| other.map[x]).collect(),
        )
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Morphism::new(self.target.clone(), self.source.clone(), inv).ok()
    }
}

fn hom_counterexample(
    source: &FiniteBck,
    target: &FiniteBck,
    map: &[Element],
) -> Option<(Element, Element)> {
    source
        .elements()
        .flat_map(|x| source.elements().map(move |y| (x, y)))
        .find(|&(x, y)| map[source.op(x, y)] != target.op(map[x], map[y]))
}

/// `Φ: A^comm -> B^comm`, `Φ(C_x) = C_f(x)`, for a homomorphism `f: A -> B`.
///
/// # Panics
///
/// If `Φ` turns out not to be well defined or not a homomorphism. Both are
/// theorems for BCK-homomorphisms, so a panic means a bug.
pub fn induced_commutativization_map(f: &Morphism) -> Result<Morphism> {
    if let Some((x, y)) = f.counterexample() {
        return Err(BckError::NotAHomomorphism { x, y });
    }
    let (a, b) = (f.source(), f.target());
    let qa = commutativization(a);
    let qb = commutativization(b);
    assert!(
        f.image_of(&derived_ideal(a)).is_subset(&derived_ideal(b)),
        "f(DI(A)) not inside DI(B)"
    );
    let mut map = vec![usize::MAX; qa.algebra.order()];
    for x in a.elements() {
        let image = qb.class_of[f.apply(x)];
        let slot = &mut map[qa.class_of[x]];
        assert!(
            *slot == usize::MAX || *slot == image,
            "induced map is not well defined at {x}"
        );
        *slot = image;
    }
    let phi = Morphism::new(qa.algebra, qb.algebra, map)?;
    assert!(phi.is_hom(), "induced map is not a homomorphism");
    Ok(phi)
}

/// Upper bound on the number of candidate maps a brute-force hom search may
/// visit.
pub const HOM_SEARCH_LIMIT: u64 = 10_000_000;

/// Every homomorphism `a -> c`, as maps on carrier indices.
///
/// Extends partial maps element by element, pruning as soon as some pair of
/// assigned elements breaks the law. Refused when the raw search space
/// `|C|^(|A|-1)` exceeds [`HOM_SEARCH_LIMIT`].
pub fn all_homomorphisms(a: &FiniteBck, c: &FiniteBck) -> Result<Vec<Vec<Element>>> {
    let space = (c.order() as u64)
        .checked_pow(a.order().saturating_sub(1) as u32)
        .unwrap_or(u64::MAX);
    if space > HOM_SEARCH_LIMIT {
        return Err(BckError::TooLarge(format!(
            "{space} candidate maps from order {} to order {}",
            a.order(),
            c.order()
        )));
    }
    let mut out = Vec::new();
    let mut map = vec![0; a.order()];
    extend_hom(a, c, &mut map, 1, &mut out);
    Ok(out)
}

fn extend_hom(
    a: &FiniteBck,
    c: &FiniteBck,
    map: &mut Vec<Element>,
    next: usize,
    out: &mut Vec<Vec<Element>>,
) {
    if next == a.order() {
        out.push(map.clone());
        return;
    }
    for v in c.elements() {
        map[next] = v;
        // check pairs among 0..=next whose product is also assigned
        let consistent = (0..=next).all(|x| {
            (0..=next).all(|y| {
                let p = a.op(x, y);
                p > next || map[p] == c.op(map[x], map[y])
            })
        });
        if consistent {
            extend_hom(a, c, map, next + 1, out);
        }
    }
}

/// For every homomorphism `φ: A -> C`, checks that exactly one homomorphism
/// `ψ: A^comm -> C` satisfies `φ = ψ ∘ π`.
pub fn universal_property_check(a: &FiniteBck, c: &FiniteBck) -> Result<bool> {
    if !c.is_commutative() {
        return Err(BckError::NotCommutative);
    }
    let q = commutativization(a);
    let phis = all_homomorphisms(a, c)?;
    let psis = all_homomorphisms(&q.algebra, c)?;
    Ok(phis.iter().all(|phi| {
        psis.iter()
            .filter(|psi| a.elements().all(|x| psi[q.class_of[x]] == phi[x]))
            .count()
            == 1
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::chain_algebra;
    use crate::examples::{table1, two_element};
    use crate::quotient::commutativization;

    #[test]
    fn identity_and_zero_maps_are_homs() {
        let a = table1();
        let id = Morphism::identity(&a);
        assert!(id.is_hom() && id.is_bijective());
        assert!(id.kernel().is_zero());
        let zero = Morphism::new(a.clone(), two_element(), vec![0; 5]).unwrap();
        assert!(zero.is_hom());
        assert!(zero.kernel().is_full());
    }

    #[test]
    fn non_hom_reports_pair() {
        let a = chain_algebra(2);
        // 0 -> 1 breaks 0*0 = 0
        let f = Morphism::new(a.clone(), a.clone(), vec![1, 1, 2]).unwrap();
        assert_eq!(f.counterexample(), Some((0, 0)));
        assert!(induced_commutativization_map(&f).is_err());
    }

    #[test]
    fn rejects_out_of_range_map() {
        let a = two_element();
        assert!(Morphism::new(a.clone(), a.clone(), vec![0, 2]).is_err());
        assert!(Morphism::new(a.clone(), a, vec![0]).is_err());
    }

    #[test]
    fn induced_maps() {
        let a = table1();
        let id = induced_commutativization_map(&Morphism::identity(&a)).unwrap();
        assert_eq!(id, Morphism::identity(&commutativization(&a).algebra));

        let q = commutativization(&a);
        let pi = q.projection(&a);
        let phi = induced_commutativization_map(&pi).unwrap();
        assert!(phi.is_bijective() && phi.is_hom());
    }

    #[test]
    fn homs_factor_through_commutativization() {
        let a = table1();
        let c = two_element();
        let q = commutativization(&a);
        let pi = q.projection(&a);
        for phi in all_homomorphisms(&a, &c).unwrap() {
            let phi = Morphism::new(a.clone(), c.clone(), phi).unwrap();
            assert!(q.ideal.is_subset(phi.kernel()));
            let psi: Vec<_> = q.representative.iter().map(|&r| phi.apply(r)).collect();
            let psi = Morphism::new(q.algebra.clone(), c.clone(), psi).unwrap();
            assert_eq!(pi.then(&psi).unwrap(), phi);
        }
    }

    #[test]
    fn universal_property_small_cases() {
        assert!(universal_property_check(&table1(), &two_element()).unwrap());
        assert!(universal_property_check(&FiniteBck::trivial(), &FiniteBck::trivial()).unwrap());
        assert!(universal_property_check(&chain_algebra(3), &chain_algebra(1)).unwrap());
        assert_eq!(
            universal_property_check(&two_element(), &table1()),
            Err(BckError::NotCommutative)
        );
    }

    #[test]
    fn homs_from_m3_to_m1_by_brute_force() {
        // all 2^3 maps fixing 0, filtered directly by the law
        let a = chain_algebra(3);
        let c = chain_algebra(1);
        let mut brute = Vec::new();
        for bits in 0..8usize {
            let map: Vec<_> = std::iter::once(0).chain((0..3).map(|i| bits >> i & 1)).collect();
            if Morphism::new(a.clone(), c.clone(), map.clone()).unwrap().is_hom() {
                brute.push(map);
            }
        }
        assert_eq!(all_homomorphisms(&a, &c).unwrap(), brute);
    }

    #[test]
    fn hom_search_is_guarded() {
        let big = chain_algebra(30);
        assert!(matches!(all_homomorphisms(&big, &big), Err(BckError::TooLarge(_))));
    }
}
