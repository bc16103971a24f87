use crate::algebra::FiniteBck;
use crate::Element;

use super::Morphism;

/// Relabeling-invariant fingerprint of an element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Profile {
    level: usize,
    below: usize,
    above: usize,
    /// number of `y` with `x*y = x`
    fixed: usize,
    /// sorted level of `x*y` over all `y`
    row_levels: Vec<usize>,
}

fn profiles(a: &FiniteBck) -> Vec<Profile> {
    let levels: Vec<usize> = a.elements().map(|x| a.level(x)).collect();
    a.elements()
        .map(|x| {
            let mut row_levels: Vec<usize> = a.elements().map(|y| levels[a.op(x, y)]).collect();
            row_levels.sort_unstable();
            Profile {
                level: levels[x],
                below: a.elements().filter(|&y| a.leq(y, x)).count(),
                above: a.elements().filter(|&y| a.leq(x, y)).count(),
                fixed: a.elements().filter(|&y| a.op(x, y) == x).count(),
                row_levels,
            }
        })
        .collect()
}

/// An isomorphism `a -> b`, if one exists.
///
/// Backtracks over bijections fixing `0`, matching only elements with equal
/// profiles and checking the table on every fully assigned pair.
pub fn is_isomorphic(a: &FiniteBck, b: &FiniteBck) -> Option<Morphism> {
    if a.order() != b.order() {
        return None;
    }
    let pa = profiles(a);
    let pb = profiles(b);
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    // most constrained first: elements with the rarest profile
    let mut order: Vec<Element> = (1..a.order()).collect();
    order.sort_by_key(|&x| (pa.iter().filter(|p| **p == pa[x]).count(), x));

    let n = a.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    if search(a, b, &pa, &pb, &order, 0, &mut map, &mut used) {
        Some(Morphism::new(a.clone(), b.clone(), map).expect("bijection is total"))
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    a: &FiniteBck,
    b: &FiniteBck,
    pa: &[Profile],
    pb: &[Profile],
    order: &[Element],
    depth: usize,
    map: &mut [Element],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for y in 1..b.order() {
        if used[y] || pa[x] != pb[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if consistent(a, b, map, x) && search(a, b, pa, pb, order, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

/// Checks every pair involving `x` whose product is already mapped.
fn consistent(a: &FiniteBck, b: &FiniteBck, map: &[Element], x: Element) -> bool {
    a.elements().filter(|&u| map[u] != usize::MAX).all(|u| {
        [(x, u), (u, x)].into_iter().all(|(p, q)| {
            let r = map[a.op(p, q)];
            r == usize::MAX || r == b.op(map[p], map[q])
        })
    })
}

/// The algebra obtained by renaming each `x` to `perm[x]`. `perm` must be a
/// permutation with `perm[0] = 0`.
pub fn relabel(a: &FiniteBck, perm: &[Element]) -> FiniteBck {
    let n = a.order();
    assert_eq!(perm.len(), n);
    assert_eq!(perm[0], 0, "relabeling must fix 0");
    let mut table = vec![0; n * n];
    for x in a.elements() {
        for y in a.elements() {
            table[perm[x] * n + perm[y]] = perm[a.op(x, y)];
        }
    }
    FiniteBck::from_flat_unchecked(n, table)
}
