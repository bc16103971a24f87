use crate::algebra::FiniteBck;
use crate::Element;

/// Index of the pair `(x, y)` in `A × B`, row-major: `x * |B| + y`.
pub fn pair_index(b_order: usize, x: Element, y: Element) -> Element {
    x * b_order + y
}

pub fn split_index(b_order: usize, p: Element) -> (Element, Element) {
    (p / b_order, p % b_order)
}

/// `A × B` with the componentwise operation.
pub fn direct_product(a: &FiniteBck, b: &FiniteBck) -> FiniteBck {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = Vec::with_capacity(n * n);
    for p in 0..n {
        let (x1, y1) = split_index(nb, p);
        for q in 0..n {
            let (x2, y2) = split_index(nb, q);
            table.push(pair_index(nb, a.op(x1, x2), b.op(y1, y2)));
        }
    }
    FiniteBck::from_flat_unchecked(n, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate;
    use crate::enumerate::chain_algebra;
    use crate::examples::table1;
    use crate::quotient::is_isomorphic;

    #[test]
    fn product_is_valid() {
        let p = direct_product(&chain_algebra(2), &table1());
        assert_eq!(p.order(), 15);
        assert!(validate(&p.rows()).unwrap().is_valid());
    }

    #[test]
    fn product_with_trivial_is_isomorphic() {
        let a = table1();
        let p = direct_product(&a, &FiniteBck::trivial());
        assert_eq!(p, a);
        assert!(is_isomorphic(&direct_product(&FiniteBck::trivial(), &a), &a).is_some());
    }

    #[test]
    fn indexing_round_trips() {
        for p in 0..12 {
            let (x, y) = split_index(4, p);
            assert_eq!(pair_index(4, x, y), p);
        }
    }
}
