use dieudonne_core::dieudonne::{
    attainable_norms_mod8, det_via_elimination, dihedral_integral_representative, element_class, h8_obstruction,
};
use dieudonne_core::group_algebra::{FiniteGroup, Group, GroupRingElem};
use dieudonne_core::linalg::berkowitz_det;
use dieudonne_core::{det_class, random, Matrix, PAdic, Ring, Verdict};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn leibniz<R: Ring>(a: &Matrix<R>) -> R {
    let n = a.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = a.get(0, 0).zero_like();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let term = (0..n).fold(a.get(0, 0).one_like(), |acc, i| acc.mul(a.get(i, p[i])));
        total = if inversions % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    });
    total
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// The nk×nk matrix of left multiplications.
fn regular_blocks(a: &Matrix<GroupRingElem<PAdic>>) -> Matrix<PAdic> {
    let k = a.get(0, 0).group().order();
    let blocks: Vec<Matrix<PAdic>> = a.entries().iter().map(|x| x.left_regular_matrix()).collect();
    Matrix::from_fn(a.rows() * k, a.cols() * k, |i, j| *blocks[(i / k) * a.cols() + j / k].get(i % k, j % k))
}

fn matrix(rng: &mut ChaCha8Rng, g: &Group, p: u64, n: usize) -> Matrix<GroupRingElem<PAdic>> {
    random::group_matrix(rng, g, p, 16, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn commutative_class_is_the_leibniz_determinant(
        (spec, p) in prop::sample::select(vec![("C2", 3u64), ("Klein4", 3), ("Cp:5", 5), ("Cp:3", 7)]),
        n in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = matrix(&mut rng, &g, p, n);
        if let Ok(class) = det_class(&a) {
            prop_assert_eq!(class.commutative().unwrap(), &leibniz(&a));
        }
    }

    /// The regular representation splits into the Wedderburn components with
    /// multiplicities equal to their degrees.
    #[test]
    fn dihedral_class_matches_regular_determinant(p in prop::sample::select(vec![3u64, 5]), n in 1usize..=2, seed in any::<u64>()) {
        let g = FiniteGroup::dihedral(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = matrix(&mut rng, &g, p, n);
        if let Ok(class) = det_class(&a) {
            let d1 = class.commutative().unwrap();
            let (s, t) = (d1.coeff(0), d1.coeff(1));
            let expected = s.add(t).mul(&s.sub(t)).mul(&class.central().unwrap().norm());
            prop_assert_eq!(berkowitz_det(&regular_blocks(&a)), expected);
        }
    }

    #[test]
    fn h8_class_matches_regular_determinant(n in 1usize..=2, seed in any::<u64>()) {
        let g = FiniteGroup::quaternion8();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = matrix(&mut rng, &g, 2, n);
        if let Ok(class) = det_class(&a) {
            let d1 = class.commutative().unwrap();
            let chars = (0..4usize).map(|chi| {
                (0..4usize).fold(PAdic::zero(2, 16), |acc, k| {
                    let sign = if (chi & k).count_ones() % 2 == 0 { 1 } else { -1 };
                    acc.add(&d1.coeff(k).mul(&PAdic::new(2, 16, sign)))
                })
            });
            let nrd = class.scalar().unwrap();
            let expected = chars.fold(nrd.mul(nrd), |acc, c| acc.mul(&c));
            prop_assert_eq!(berkowitz_det(&regular_blocks(&a)), expected);
        }
    }

    #[test]
    fn elimination_agrees_with_components(
        (spec, p) in prop::sample::select(vec![("D2p:3", 3u64), ("D2p:5", 5), ("H8", 2), ("Klein4", 3)]),
        n in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let g = FiniteGroup::from_spec(spec).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = matrix(&mut rng, &g, p, n);
        if let (Ok(class), Ok((elim, _))) = (det_class(&a), det_via_elimination(&a)) {
            prop_assert_eq!(class, elim);
        }
    }
}

#[test]
fn attainable_norms_match_enumeration() {
    for odd in 0..=4 {
        let mut seen: Vec<u64> = Vec::new();
        for b in 0..8u64.pow(4) {
            let c: Vec<u64> = (0..4).map(|k| (b >> (3 * k)) & 7).collect();
            if c.iter().filter(|&&x| x % 2 == 1).count() == odd {
                seen.push(c.iter().map(|x| x * x).sum::<u64>() % 8);
            }
        }
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(attainable_norms_mod8(odd), seen, "odd = {odd}");
    }
}

/// Every element with coefficients in {0, 1, 2, 3} satisfies the mod-8
/// constraint that the obstruction relies on.
#[test]
fn obstruction_rule_holds_for_group_ring_elements() {
    let g = FiniteGroup::quaternion8();
    for code in 0..4u32.pow(8) {
        let c: Vec<i64> = (0..8).map(|k| ((code >> (2 * k)) & 3) as i64).collect();
        let eps = dieudonne_core::group_algebra::padic_group_elem(&g, 2, 8, &c);
        let Ok(class) = element_class(&eps) else { continue };
        let odd = class.commutative().unwrap().coeffs().iter().filter(|x| x.residue() % 2 == 1).count();
        let nu = class.scalar().unwrap().residue() % 8;
        assert!(attainable_norms_mod8(odd).contains(&nu), "{c:?}");
    }
}

#[test]
fn h8_certificates_are_consistent() {
    let g = FiniteGroup::quaternion8();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let (mut found, mut obstructed) = (0, 0);
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        let a = matrix(&mut rng, &g, 2, n);
        let Ok(class) = det_class(&a) else { continue };
        match h8_obstruction(&a).unwrap().verdict {
            Verdict::NoIntegralRepresentative(ob) => {
                assert!(!ob.required.contains(&ob.actual));
                assert_eq!(class.scalar().unwrap().residue() % 8, ob.actual);
                obstructed += 1;
            }
            Verdict::RepresentativeFound(eps) => {
                assert_eq!(element_class(&eps).unwrap(), class);
                found += 1;
            }
            Verdict::Inconclusive(_) => {}
        }
    }
    assert!(found > 0 && obstructed > 0);
}

#[test]
fn dihedral_representatives_for_larger_primes() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for p in [5u64, 7] {
        let g = FiniteGroup::dihedral(p).unwrap();
        for _ in 0..30 {
            let n = rng.gen_range(1..=3);
            let a = matrix(&mut rng, &g, p, n);
            let Ok(class) = det_class(&a) else { continue };
            let cert = dihedral_integral_representative(&a).unwrap();
            let eps = cert.representative().expect("representative");
            assert_eq!(element_class(eps).unwrap(), class);
        }
    }
}

#[test]
fn non_square_and_unsupported_inputs() {
    let g = FiniteGroup::dihedral(3).unwrap();
    let t = PAdic::zero(3, 8);
    let one = GroupRingElem::one(&g, &t);
    let rect = Matrix::new(1, 2, vec![one.clone(), one.clone()]);
    assert!(det_class(&rect).is_err());
    let k4 = FiniteGroup::klein4();
    let id = Matrix::identity(2, &GroupRingElem::one(&k4, &PAdic::zero(2, 8)));
    assert!(h8_obstruction(&id).is_err());
}
