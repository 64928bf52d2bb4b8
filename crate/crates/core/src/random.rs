//! Seeded sample generators shared by the test suites, the CLI property
//! harness and the benchmarks.

use crate::algebras::{Cyclo, DihedralElem, Hurwitz};
use crate::group_algebra::{Group, GroupRingElem, IwasawaSeries, LambdaGElem};
use crate::linalg::Matrix;
use crate::padic::PAdic;
use crate::ring::Ring;
use crate::weierstrass::SkewSeries;
use rand::Rng;

pub fn padic<R: Rng + ?Sized>(rng: &mut R, p: u64, prec: u32) -> PAdic {
    let m = PAdic::zero(p, prec).modulus();
    PAdic::from_u64(p, prec, rng.gen_range(0..m))
}

/// A p-adic integer divisible by p.
pub fn padic_non_unit<R: Rng + ?Sized>(rng: &mut R, p: u64, prec: u32) -> PAdic {
    padic(rng, p, prec).mul_p_power(1)
}

pub fn group_elem<R: Rng + ?Sized>(rng: &mut R, group: &Group, p: u64, prec: u32) -> GroupRingElem<PAdic> {
    GroupRingElem::new(group.clone(), (0..group.order()).map(|_| padic(rng, p, prec)).collect())
}

/// Coefficients drawn from [-bound, bound].
pub fn small_group_elem<R: Rng + ?Sized>(
    rng: &mut R,
    group: &Group,
    p: u64,
    prec: u32,
    bound: i64,
) -> GroupRingElem<PAdic> {
    GroupRingElem::new(
        group.clone(),
        (0..group.order()).map(|_| PAdic::new(p, prec, rng.gen_range(-bound..=bound))).collect(),
    )
}

pub fn group_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    group: &Group,
    p: u64,
    prec: u32,
    n: usize,
) -> Matrix<GroupRingElem<PAdic>> {
    Matrix::from_fn(n, n, |_, _| group_elem(rng, group, p, prec))
}

pub fn cyclo<R: Rng + ?Sized>(rng: &mut R, p: u64, prec: u32) -> Cyclo<PAdic> {
    Cyclo::from_coords(p, (0..p - 1).map(|_| padic(rng, p, prec)).collect())
}

pub fn dihedral_elem<R: Rng + ?Sized>(rng: &mut R, p: u64, prec: u32) -> DihedralElem<PAdic> {
    DihedralElem::new(cyclo(rng, p, prec), cyclo(rng, p, prec))
}

pub fn hurwitz<R: Rng + ?Sized>(rng: &mut R, prec: u32) -> Hurwitz {
    Hurwitz::new(std::array::from_fn(|_| padic(rng, 2, prec)))
}

pub fn hurwitz_unit<R: Rng + ?Sized>(rng: &mut R, prec: u32) -> Hurwitz {
    loop {
        let h = hurwitz(rng, prec);
        if h.is_unit() {
            return h;
        }
    }
}

/// A series whose coefficients below `order` are divisible by the
/// uniformizer and whose coefficient at `order` is a unit; with
/// probability one half the whole series is scaled by a power of π.
pub fn hurwitz_series<R: Rng + ?Sized>(rng: &mut R, prec: u32, m: usize, max_order: usize) -> SkewSeries<Hurwitz> {
    let order = rng.gen_range(0..=max_order.min(m - 1));
    let pi = Hurwitz::uniformizer(prec);
    let coeffs: Vec<Hurwitz> = (0..m)
        .map(|k| match k.cmp(&order) {
            std::cmp::Ordering::Less => pi.mul(&hurwitz(rng, prec)),
            std::cmp::Ordering::Equal => hurwitz_unit(rng, prec),
            std::cmp::Ordering::Greater => hurwitz(rng, prec),
        })
        .collect();
    let s = SkewSeries::new(m, coeffs, &pi);
    if rng.gen_bool(0.5) {
        s.mul_pi_left(rng.gen_range(1..=3))
    } else {
        s
    }
}

/// The commutative analogue over Z_p.
pub fn padic_series<R: Rng + ?Sized>(rng: &mut R, p: u64, prec: u32, m: usize, max_order: usize) -> SkewSeries<PAdic> {
    let order = rng.gen_range(0..=max_order.min(m - 1));
    let coeffs: Vec<PAdic> = (0..m)
        .map(|k| match k.cmp(&order) {
            std::cmp::Ordering::Less => padic_non_unit(rng, p, prec),
            std::cmp::Ordering::Equal => loop {
                let x = padic(rng, p, prec);
                if x.is_unit() {
                    break x;
                }
            },
            std::cmp::Ordering::Greater => padic(rng, p, prec),
        })
        .collect();
    let t = PAdic::zero(p, prec);
    let s = SkewSeries::new(m, coeffs, &t);
    if rng.gen_bool(0.5) {
        s.mul_pi_left(rng.gen_range(1..=2))
    } else {
        s
    }
}

/// A series over Z_p with small coefficients.
pub fn iwasawa_series<R: Rng + ?Sized>(rng: &mut R, p: u64, prec: u32, m: usize) -> IwasawaSeries {
    let c: Vec<i64> = (0..m).map(|_| rng.gen_range(0..(p * p) as i64)).collect();
    IwasawaSeries::from_ints(p, prec, m, &c)
}

pub fn lambda_g_elem<R: Rng + ?Sized>(rng: &mut R, group: &Group, p: u64, prec: u32, m: usize) -> LambdaGElem {
    GroupRingElem::new(group.clone(), (0..group.order()).map(|_| iwasawa_series(rng, p, prec, m)).collect())
}

/// An element of Z_p[D_2p] lying in 𝔪 (`dual = false`) or in 𝔪′
/// (`dual = true`).
pub fn dihedral_ideal_elem<R: Rng + ?Sized>(
    rng: &mut R,
    group: &Group,
    p: u64,
    prec: u32,
    dual: bool,
) -> GroupRingElem<PAdic> {
    let mut c: Vec<PAdic> = (0..group.order()).map(|_| padic(rng, p, prec)).collect();
    let q = group.order() / 2;
    let x_part = c[q..].iter().fold(PAdic::zero(p, prec), |acc, x| acc.add(x));
    let y_part = c[1..q].iter().fold(PAdic::zero(p, prec), |acc, x| acc.add(x));
    let fixed = if dual { x_part.sub(&y_part) } else { x_part.add(&y_part).neg() };
    c[0] = fixed.add(&padic_non_unit(rng, p, prec));
    GroupRingElem::new(group.clone(), c)
}
