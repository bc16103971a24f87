//! Small named algebras used throughout the tests and the CLI.

use crate::algebra::FiniteBck;

/// Five-element algebra with a non-ideal derived subalgebra.
///
/// Order: `0 < 1 < 3`, `0 < 2 < 3`, `2 < 4`.
pub fn table1() -> FiniteBck {
    FiniteBck::new(&[
        vec![0, 0, 0, 0, 0],
        vec![1, 0, 1, 0, 1],
        vec![2, 2, 0, 0, 0],
        vec![3, 3, 3, 0, 3],
        vec![4, 4, 2, 2, 0],
    ])
    .expect("table 1 is a BCK-algebra")
}

/// Meet table `x∧y` of [`table1`], as printed alongside it.
pub const TABLE1_MEETS: [[usize; 5]; 5] = [
    [0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [0, 0, 2, 0, 2],
    [0, 1, 2, 3, 2],
    [0, 0, 2, 0, 4],
];

/// Cayley table of the four-element chain `M_3`.
pub const TABLE2: [[usize; 4]; 4] = [[0, 0, 0, 0], [1, 0, 0, 0], [2, 2, 0, 0], [3, 3, 3, 0]];

/// Meet table printed alongside [`TABLE2`].
pub const TABLE2_MEETS: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 1, 0, 0], [0, 1, 2, 0], [0, 1, 2, 3]];

/// The eight-element Cayley table exactly as printed. Entry `(4,4)` is `1`,
/// which breaks `x*x = 0`, so this is not a BCK-algebra.
pub const TABLE3_PRINTED: [[usize; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 1, 0, 0, 0],
    [2, 1, 0, 0, 2, 1, 0, 0],
    [3, 1, 1, 0, 3, 1, 1, 0],
    [4, 4, 4, 4, 1, 0, 0, 0],
    [5, 4, 4, 4, 1, 0, 0, 0],
    [6, 5, 4, 4, 2, 1, 0, 0],
    [7, 5, 5, 4, 3, 1, 1, 0],
];

/// Meet table printed alongside [`TABLE3_PRINTED`].
pub const TABLE3_MEETS: [[usize; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 1, 1, 1],
    [0, 1, 2, 1, 0, 1, 2, 1],
    [0, 1, 2, 3, 0, 0, 2, 3],
    [0, 0, 0, 0, 4, 4, 4, 4],
    [0, 1, 1, 1, 4, 5, 5, 5],
    [0, 1, 2, 1, 4, 5, 6, 5],
    [0, 1, 2, 3, 4, 5, 6, 7],
];

/// Eight-element nilpotent algebra of class 2.
///
/// This is [`TABLE3_PRINTED`] with `4*4` set to `0`, the only BCK-algebra
/// within two cell edits of the printed table.
pub fn table3() -> FiniteBck {
    let mut rows: Vec<Vec<usize>> = TABLE3_PRINTED.iter().map(|r| r.to_vec()).collect();
    rows[4][4] = 0;
    FiniteBck::new(&rows).expect("corrected table 3 is a BCK-algebra")
}

/// The unique two-element algebra.
pub fn two_element() -> FiniteBck {
    FiniteBck::new(&[vec![0, 0], vec![1, 0]]).expect("two-element algebra")
}
