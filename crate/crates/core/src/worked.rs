//! Small fixed matrices with known determinant data.

use crate::algebras::Quaternion;
use crate::group_algebra::{FiniteGroup, GroupRingElem};
use crate::linalg::Matrix;
use crate::ring::rat;
use num_rational::BigRational;

/// [[i, j], [j, i]] over the rational Hamilton quaternions.
pub fn real_quaternion_matrix() -> Matrix<Quaternion<BigRational>> {
    let q = |b: [i64; 4]| Quaternion::new(rat(b[0]), rat(b[1]), rat(b[2]), rat(b[3]));
    let (i, j) = (q([0, 1, 0, 0]), q([0, 0, 1, 0]));
    Matrix::from_rows(vec![vec![i.clone(), j.clone()], vec![j, i]])
}

/// [[9 + x + 2y, 1 + y], [1 + xy, 9 + x]] over Q[H_8], all entries in the
/// Jacobson radical of Z_2[H_8].
pub fn h8_matrix() -> Matrix<GroupRingElem<BigRational>> {
    let g = FiniteGroup::quaternion8();
    let e = |terms: &[(&str, i64)]| {
        let t: Vec<(&str, BigRational)> = terms.iter().map(|&(w, c)| (w, rat(c))).collect();
        GroupRingElem::from_words(&g, &t).expect("valid words")
    };
    Matrix::from_rows(vec![
        vec![e(&[("1", 9), ("x", 1), ("y", 2)]), e(&[("1", 1), ("y", 1)])],
        vec![e(&[("1", 1), ("x*y", 1)]), e(&[("1", 9), ("x", 1)])],
    ])
}
