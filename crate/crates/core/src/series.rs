//! Derived, lower central and upper central series, and the nilpotence and
//! solvability classes they determine.

use std::fmt;

use crate::algebra::FiniteBck;
use crate::closure::{commutator_subalgebra, subalgebra_closure};
use crate::set::ElementSet;
use crate::Element;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `A^(0) = A`, `A^(k+1) = [A^(k), A^(k)]`.
    Derived,
    /// `A_0 = A`, `A_(k+1) = [A_k, A]`.
    LowerCentral,
    /// `Z_0 = {0}`, `Z_k = <x | [x,y1,..,yk] = 0 for all y>`.
    UpperCentral,
}

impl SeriesKind {
    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::Derived => "derived",
            SeriesKind::LowerCentral => "lower-central",
            SeriesKind::UpperCentral => "upper-central",
        }
    }
}

/// A series computed up to stabilization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Terms from index 0; the last two are equal.
    pub terms: Vec<ElementSet>,
    pub stabilized: bool,
    /// Least index whose term is `{0}` (descending kinds) or the whole
    /// carrier (upper central), if the series gets there.
    pub class_value: Option<usize>,
}

impl SeriesReport {
    /// Term `k`, extended past stabilization by the stable value.
    pub fn term(&self, k: usize) -> &ElementSet {
        &self.terms[k.min(self.terms.len() - 1)]
    }
}

impl fmt::Display for SeriesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.kind {
            SeriesKind::Derived => "A^",
            SeriesKind::LowerCentral => "A",
            SeriesKind::UpperCentral => "Z",
        };
        for (k, t) in self.terms.iter().enumerate() {
            if self.kind == SeriesKind::Derived {
                writeln!(f, "{sym}({k}) = {t}")?;
            } else {
                writeln!(f, "{sym}{k} = {t}")?;
            }
        }
        match self.class_value {
            Some(c) => write!(f, "class = {c}"),
            None => write!(f, "class = none"),
        }
    }
}

/// Iterates `next` from `start` until two consecutive terms agree.
///
/// Strict descent of commutators bounds the number of distinct terms by the
/// order, so running past `order + 1` steps means a bug.
fn stabilize(
    a: &FiniteBck,
    kind: SeriesKind,
    start: ElementSet,
    target: &ElementSet,
    mut next: impl FnMut(usize, &ElementSet) -> ElementSet,
) -> SeriesReport {
    let mut terms = vec![start];
    loop {
        let k = terms.len() - 1;
        let t = next(k, &terms[k]);
        let done = t == terms[k];
        terms.push(t);
        if done {
            break;
        }
        assert!(
            terms.len() <= a.order() + 2,
            "{} series failed to stabilize within {} steps",
            kind.name(),
            a.order()
        );
    }
    let class_value = terms.iter().position(|t| t == target);
    SeriesReport {
        kind,
        terms,
        stabilized: true,
        class_value,
    }
}

pub fn derived_series(a: &FiniteBck) -> SeriesReport {
    stabilize(a, SeriesKind::Derived, a.carrier(), &a.zero_set(), |_, t| {
        commutator_subalgebra(a, t, t)
    })
}

pub fn lower_central_series(a: &FiniteBck) -> SeriesReport {
    let all = a.carrier();
    stabilize(a, SeriesKind::LowerCentral, a.carrier(), &a.zero_set(), |_, t| {
        commutator_subalgebra(a, t, &all)
    })
}

/// The raw generating sets `S_k = {x | [x,y1,..,yk] = 0 for all y}`.
///
/// Uses `S_0 = {0}` and `S_k = {x | [x,y] ∈ S_(k-1) for all y}`, which is the
/// left-normed definition unrolled one step at a time. Returns `S_0..=S_k`.
pub fn upper_central_raw_sets(a: &FiniteBck, k: usize) -> Vec<ElementSet> {
    let mut sets = vec![a.zero_set()];
    for _ in 0..k {
        let prev = sets.last().expect("nonempty");
        let next = a.set(
            a.elements()
                .filter(|&x| a.elements().all(|y| prev.contains(a.commutator(x, y)))),
        );
        sets.push(next);
    }
    sets
}

/// `Z_k = <S_k>` for the raw sets of [`upper_central_raw_sets`].
///
/// Runs until the raw sets stop growing. Two generated terms can agree while
/// the raw sets are still growing, so equal consecutive terms do not end the
/// series by themselves.
pub fn upper_central_series(a: &FiniteBck) -> SeriesReport {
    let mut raw = vec![a.zero_set()];
    loop {
        let prev = raw.last().expect("nonempty");
        let next = a.set(
            a.elements()
                .filter(|&x| a.elements().all(|y| prev.contains(a.commutator(x, y)))),
        );
        let done = &next == prev;
        raw.push(next);
        if done {
            break;
        }
        assert!(
            raw.len() <= a.order() + 2,
            "upper central raw sets failed to stabilize"
        );
    }
    let terms: Vec<ElementSet> = raw.iter().map(|s| subalgebra_closure(a, s)).collect();
    let class_value = terms.iter().position(ElementSet::is_full);
    SeriesReport {
        kind: SeriesKind::UpperCentral,
        terms,
        stabilized: true,
        class_value,
    }
}

/// Elements whose every commutator vanishes; generates the pseudo-center.
pub fn pseudo_center_raw(a: &FiniteBck) -> ElementSet {
    upper_central_raw_sets(a, 1).pop().expect("two sets")
}

/// `Z_1(A)`.
pub fn pseudo_center(a: &FiniteBck) -> ElementSet {
    subalgebra_closure(a, &pseudo_center_raw(a))
}

/// Nilpotence class: least `c` with `A_c = {0}`.
///
/// This is the length of the lower central series, which agrees with
/// [`is_in_bck_c`]. The upper central series can reach `A` sooner (see
/// [`upper_central_class`]), so it is not used here.
///
/// # Panics
///
/// If the lower central series stabilizes above `{0}`, which cannot happen
/// for a finite BCK-algebra.
pub fn nilpotence_class(a: &FiniteBck) -> usize {
    lower_central_series(a)
        .class_value
        .expect("finite BCK-algebras are nilpotent")
}

/// Least `n` with `Z_n = A`; at most [`nilpotence_class`].
pub fn upper_central_class(a: &FiniteBck) -> Option<usize> {
    upper_central_series(a).class_value
}

/// Least `n` with `A^(n) = {0}`.
pub fn solvability_class(a: &FiniteBck) -> Option<usize> {
    derived_series(a).class_value
}

/// Result of testing membership in the class of algebras of nilpotence class
/// at most `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMembership {
    pub holds: bool,
    /// A tuple `(x0, .., xc)` with nonzero left-normed commutator.
    pub witness: Option<Vec<Element>>,
}

/// Whether every left-normed commutator `[x0, x1, .., xc]` with `c + 1`
/// entries vanishes, which is the case exactly when the nilpotence class is
/// at most `c`.
///
/// Explores the values reachable as commutators of each length rather than
/// all tuples, keeping one producing tuple per value.
pub fn is_in_bck_c(a: &FiniteBck, c: usize) -> ClassMembership {
    // tuple producing each reachable value at the current length
    let mut reach: Vec<Option<Vec<Element>>> = a.elements().map(|x| Some(vec![x])).collect();
    for _ in 0..c {
        let mut next: Vec<Option<Vec<Element>>> = vec![None; a.order()];
        for (v, tuple) in reach.iter().enumerate() {
            let Some(tuple) = tuple else { continue };
            if v == 0 {
                continue;
            }
            for y in a.elements() {
                let w = a.commutator(v, y);
                if next[w].is_none() {
                    let mut t = tuple.clone();
                    t.push(y);
                    next[w] = Some(t);
                }
            }
        }
        reach = next;
    }
    let witness = reach.into_iter().skip(1).flatten().next();
    ClassMembership {
        holds: witness.is_none(),
        witness,
    }
}

/// Checks `{0} = B_0 ⊆ B_1 ⊆ ..` with `[B_(i+1), A] ⊆ B_i`.
pub fn is_ascending_central_series(a: &FiniteBck, terms: &[ElementSet]) -> bool {
    let all = a.carrier();
    terms.first().is_some_and(ElementSet::is_zero)
        && terms.iter().all(|t| crate::closure::is_subalgebra(a, t))
        && terms.windows(2).all(|w| {
            w[0].is_subset(&w[1]) && commutator_subalgebra(a, &w[1], &all).is_subset(&w[0])
        })
}

/// Checks `A = B_0 ⊇ B_1 ⊇ ..` with `[B_i, A] ⊆ B_(i+1)`.
pub fn is_descending_central_series(a: &FiniteBck, terms: &[ElementSet]) -> bool {
    let all = a.carrier();
    terms.first().is_some_and(ElementSet::is_full)
        && terms.iter().all(|t| crate::closure::is_subalgebra(a, t))
        && terms.windows(2).all(|w| {
            w[1].is_subset(&w[0]) && commutator_subalgebra(a, &w[0], &all).is_subset(&w[1])
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::chain_algebra;
    use crate::examples::{table1, table3, two_element};

    fn sets(r: &SeriesReport) -> Vec<String> {
        r.terms.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn derived_series_of_m3() {
        let r = derived_series(&chain_algebra(3));
        assert_eq!(sets(&r), ["{0,1,2,3}", "{0,1,2}", "{0,1}", "{0}", "{0}"]);
        assert_eq!(r.class_value, Some(3));
        assert_eq!(derived_series(&two_element()).class_value, Some(1));
        assert_eq!(derived_series(&FiniteBck::trivial()).class_value, Some(0));
    }

    #[test]
    fn lower_series_of_chains() {
        for n in 1..=6 {
            let r = lower_central_series(&chain_algebra(n));
            for k in 1..=n {
                assert_eq!(r.term(k).to_vec(), (0..=n - k).collect::<Vec<_>>());
            }
            assert_eq!(r.class_value, Some(n));
        }
    }

    #[test]
    fn table3_series() {
        let b = table3();
        let lower = lower_central_series(&b);
        assert_eq!(lower.term(1).to_vec(), vec![0, 1]);
        assert!(lower.term(2).is_zero());
        assert_eq!(lower.class_value, Some(2));
        let upper = upper_central_series(&b);
        assert_eq!(upper.term(1).to_vec(), vec![0, 1, 2, 4, 5, 6]);
        assert!(upper.term(2).is_full());
        assert_eq!(upper.class_value, Some(2));
        assert_eq!(nilpotence_class(&b), 2);
    }

    #[test]
    fn pseudo_center_of_table3_is_not_an_ideal() {
        let b = table3();
        let z1 = pseudo_center(&b);
        assert_eq!(z1.to_vec(), vec![0, 1, 2, 4, 5, 6]);
        assert!(z1.contains(b.op(3, 1)) && z1.contains(1) && !z1.contains(3));
        assert!(!crate::closure::is_ideal(&b, &z1));
    }

    #[test]
    fn classes_of_small_cases() {
        assert_eq!(nilpotence_class(&FiniteBck::trivial()), 0);
        assert_eq!(nilpotence_class(&two_element()), 1);
        assert_eq!(nilpotence_class(&table1()), 2);
        for n in 0..=8 {
            assert_eq!(nilpotence_class(&chain_algebra(n)), n);
        }
    }

    #[test]
    fn class_membership() {
        assert!(is_in_bck_c(&table3(), 2).holds);
        let m3 = is_in_bck_c(&chain_algebra(3), 2);
        assert!(!m3.holds);
        let w = m3.witness.unwrap();
        assert_eq!(w.len(), 3);
        assert_ne!(chain_algebra(3).weighted_commutator(&w).unwrap(), 0);
        assert!(is_in_bck_c(&chain_algebra(3), 3).holds);
        // c = 0 holds only for the trivial algebra
        assert!(is_in_bck_c(&FiniteBck::trivial(), 0).holds);
        assert!(!is_in_bck_c(&two_element(), 0).holds);
    }

    #[test]
    fn central_series_checks() {
        let b = table3();
        let upper = upper_central_series(&b);
        let lower = lower_central_series(&b);
        assert!(is_ascending_central_series(&b, &upper.terms));
        assert!(is_descending_central_series(&b, &lower.terms));
        assert!(!is_ascending_central_series(&b, &[b.zero_set(), b.carrier()]));
    }

    #[test]
    fn display_lists_terms() {
        let r = lower_central_series(&chain_algebra(2));
        assert_eq!(r.to_string(), "A0 = {0,1,2}\nA1 = {0,1}\nA2 = {0}\nA3 = {0}\nclass = 2");
    }

    /// A commutator of generated members of `Z_1` need not vanish, so the
    /// upper series can reach `A` before the lower one reaches `{0}`.
    #[test]
    fn upper_series_can_be_shorter() {
        let a = FiniteBck::new(&[
            vec![0, 0, 0, 0],
            vec![1, 0, 0, 0],
            vec![2, 2, 0, 0],
            vec![3, 2, 1, 0],
        ])
        .unwrap();
        assert_eq!(pseudo_center_raw(&a).to_string(), "{0,1,3}");
        assert!(pseudo_center(&a).is_full());
        assert_eq!(upper_central_class(&a), Some(1));
        assert_eq!(nilpotence_class(&a), 2);
        assert!(!a.is_commutative());
        let upper = upper_central_series(&a);
        assert!(!is_ascending_central_series(&a, &upper.terms));
        assert!(is_in_bck_c(&a, 2).holds);
        assert_eq!(is_in_bck_c(&a, 1).witness, Some(vec![2, 1]));
    }
}
