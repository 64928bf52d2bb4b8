//! Seeded inputs for the kernel benchmarks.

use dieudonne_core::algebras::Hurwitz;
use dieudonne_core::group_algebra::{FiniteGroup, GroupRingElem};
use dieudonne_core::weierstrass::SkewSeries;
use dieudonne_core::{random, Matrix, PAdic};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn h8_matrix(n: usize, prec: u32) -> Matrix<GroupRingElem<PAdic>> {
    random::group_matrix(&mut rng(1), &FiniteGroup::quaternion8(), 2, prec, n)
}

/// A D_2p matrix with entries in a maximal ideal, so the integral search
/// has to do real work.
pub fn dihedral_matrix(p: u64, n: usize, prec: u32) -> Matrix<GroupRingElem<PAdic>> {
    let g = FiniteGroup::dihedral(p).expect("odd prime");
    let mut r = rng(2);
    Matrix::from_fn(n, n, |i, j| random::dihedral_ideal_elem(&mut r, &g, p, prec, (i + j) % 2 == 0))
}

pub fn hurwitz_series(m: usize, prec: u32) -> SkewSeries<Hurwitz> {
    random::hurwitz_series(&mut rng(3), prec, m, 4)
}

pub fn hurwitz_series_matrix(m: usize, prec: u32) -> Matrix<SkewSeries<Hurwitz>> {
    let mut r = rng(4);
    Matrix::from_fn(2, 2, |_, _| random::hurwitz_series(&mut r, prec, m, 2))
}

pub fn padic_pair(p: u64, prec: u32) -> (PAdic, PAdic) {
    let mut r = rng(5);
    (random::padic(&mut r, p, prec), random::padic(&mut r, p, prec))
}
