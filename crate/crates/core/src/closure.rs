//! Generated subalgebras and ideals, commutator subalgebras `[S,T]`, the
//! derived subalgebra and the derived ideal.

use std::collections::VecDeque;

use crate::algebra::FiniteBck;
use crate::error::{BckError, IdealFailure, Result};
use crate::set::ElementSet;
use crate::Element;

/// Least `*`-closed superset of `s ∪ {0}`.
pub fn subalgebra_closure(a: &FiniteBck, s: &ElementSet) -> ElementSet {
    let mut closed = s.union(&a.zero_set());
    let mut members = closed.to_vec();
    let mut queue: VecDeque<Element> = members.iter().copied().collect();
    while let Some(u) = queue.pop_front() {
        let mut fresh = Vec::new();
        for &v in &members {
            for p in [a.op(u, v), a.op(v, u)] {
                if closed.insert(p) {
                    fresh.push(p);
                }
            }
        }
        for p in fresh {
            members.push(p);
            queue.push_back(p);
        }
    }
    closed
}

/// Least ideal containing `s`.
///
/// Fixpoint of "if `x*y ∈ I` and `y ∈ I` then `x ∈ I`" starting from
/// `s ∪ {0}`.
pub fn ideal_closure(a: &FiniteBck, s: &ElementSet) -> ElementSet {
    let mut ideal = s.union(&a.zero_set());
    loop {
        let mut grew = false;
        for x in a.elements() {
            if ideal.contains(x) {
                continue;
            }
            if ideal.iter().any(|y| ideal.contains(a.op(x, y))) {
                ideal.insert(x);
                grew = true;
            }
        }
        if !grew {
            return ideal;
        }
    }
}

pub fn is_subalgebra(a: &FiniteBck, s: &ElementSet) -> bool {
    subalgebra_violation(a, s).is_none() && s.contains(0)
}

/// First pair `(x, y)` of members with `x*y` outside `s`.
pub fn subalgebra_violation(a: &FiniteBck, s: &ElementSet) -> Option<(Element, Element)> {
    s.iter()
        .flat_map(|x| s.iter().map(move |y| (x, y)))
        .find(|&(x, y)| !s.contains(a.op(x, y)))
}

/// Reason `s` is not an ideal, if any; implication failures are reported at
/// the lexicographically first `(x, y)`.
pub fn ideal_violation(a: &FiniteBck, s: &ElementSet) -> Option<IdealFailure> {
    if !s.contains(0) {
        return Some(IdealFailure::MissingZero);
    }
    for x in a.elements().filter(|&x| !s.contains(x)) {
        for y in s.iter() {
            let product = a.op(x, y);
            if s.contains(product) {
                return Some(IdealFailure::Implication { x, y, product });
            }
        }
    }
    None
}

pub fn is_ideal(a: &FiniteBck, s: &ElementSet) -> bool {
    ideal_violation(a, s).is_none()
}

pub(crate) fn require_ideal(a: &FiniteBck, s: &ElementSet) -> Result<()> {
    a.check_set(s)?;
    match ideal_violation(a, s) {
        None => Ok(()),
        Some(reason) => Err(BckError::NotAnIdeal { reason }),
    }
}

/// Evidence that `element` lies in the ideal generated by some set: the
/// left-associated product `((element*s1)*s2)*...*sk` is `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealWitness {
    pub element: Element,
    pub chain: Vec<Element>,
}

impl IdealWitness {
    /// Replays the chain through the table.
    pub fn replay(&self, a: &FiniteBck) -> Element {
        self.chain.iter().fold(self.element, |acc, &s| a.op(acc, s))
    }
}

/// Shortest chain from `s` that sends `x` to `0`, found breadth-first.
///
/// `0` gets the empty chain; any other element with an empty generating set
/// has no witness.
pub fn ideal_witness(a: &FiniteBck, s: &ElementSet, x: Element) -> Option<IdealWitness> {
    if x == 0 {
        return Some(IdealWitness {
            element: 0,
            chain: Vec::new(),
        });
    }
    let n = a.order();
    let mut parent: Vec<Option<(Element, Element)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        for g in s.iter() {
            let w = a.op(v, g);
            if seen[w] {
                continue;
            }
            seen[w] = true;
            parent[w] = Some((v, g));
            if w == 0 {
                let mut chain = Vec::new();
                let mut cur = 0;
                while let Some((prev, g)) = parent[cur] {
                    chain.push(g);
                    cur = prev;
                }
                chain.reverse();
                return Some(IdealWitness { element: x, chain });
            }
            queue.push_back(w);
        }
    }
    None
}

/// All pseudo-commutators `[s,t]` with `s ∈ S`, `t ∈ T`.
pub fn commutator_generators(a: &FiniteBck, s: &ElementSet, t: &ElementSet) -> ElementSet {
    a.set(s.iter().flat_map(|x| t.iter().map(move |y| a.commutator(x, y))))
}

/// `[S,T]`: the subalgebra generated by all `[s,t]`.
pub fn commutator_subalgebra(a: &FiniteBck, s: &ElementSet, t: &ElementSet) -> ElementSet {
    subalgebra_closure(a, &commutator_generators(a, s, t))
}

/// `A' = [A,A]`.
pub fn derived_subalgebra(a: &FiniteBck) -> ElementSet {
    let all = a.carrier();
    commutator_subalgebra(a, &all, &all)
}

/// The ideal generated by `A'`.
pub fn derived_ideal(a: &FiniteBck) -> ElementSet {
    ideal_closure(a, &derived_subalgebra(a))
}

/// Every ideal of `a`, in increasing order of bitmask over `1..n`.
///
/// Brute force over the `2^(n-1)` subsets containing `0`; intended for small
/// algebras.
pub fn all_ideals(a: &FiniteBck) -> Result<Vec<ElementSet>> {
    all_subsets_with_zero(a, is_ideal)
}

/// Every subalgebra of `a`, by the same brute force as [`all_ideals`].
pub fn all_subalgebras(a: &FiniteBck) -> Result<Vec<ElementSet>> {
    all_subsets_with_zero(a, is_subalgebra)
}

const SUBSET_LIMIT: usize = 20;

fn all_subsets_with_zero(
    a: &FiniteBck,
    keep: impl Fn(&FiniteBck, &ElementSet) -> bool,
) -> Result<Vec<ElementSet>> {
    let n = a.order();
    if n > SUBSET_LIMIT {
        return Err(BckError::TooLarge(format!(
            "subset enumeration over {n} elements (limit {SUBSET_LIMIT})"
        )));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << (n - 1)) {
        let s = a.set(std::iter::once(0).chain((1..n).filter(|&e| mask >> (e - 1) & 1 == 1)));
        if keep(a, &s) {
            out.push(s);
        }
    }
    Ok(out)
}
