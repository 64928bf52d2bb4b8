use dieudonne_core::algebras::Hurwitz;
use dieudonne_core::weierstrass::{
    diagonal_reduce, integral_det_representative, nrd_integral, series_det_class, weierstrass_prepare,
    weierstrass_prepare_right, LocalizedSeries, ReducedOrder, SkewSeries,
};
use dieudonne_core::{random, Error, Matrix, PAdic, Ring};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const M: usize = 10;
const N: u32 = 10;

fn zero() -> Hurwitz {
    Hurwitz::from_ints(N, [0; 4])
}

/// U·J (or J·U) with U a polynomial unit and J distinguished, of total
/// degree below M.
fn constructed(rng: &mut ChaCha8Rng, right: bool) -> (SkewSeries<Hurwitz>, Vec<Hurwitz>, SkewSeries<Hurwitz>) {
    let d = rng.gen_range(0..=M / 2 - 1);
    let pi = Hurwitz::uniformizer(N);
    let mut j: Vec<Hurwitz> = (0..d).map(|_| pi.mul(&random::hurwitz(rng, N))).collect();
    j.push(zero().one_like());
    let mut u: Vec<Hurwitz> = (0..M - d).map(|_| random::hurwitz(rng, N)).collect();
    u[0] = random::hurwitz_unit(rng, N);
    let (us, js) = (SkewSeries::from_poly(M, &u, &zero()), SkewSeries::from_poly(M, &j, &zero()));
    let f = if right { js.mul(&us) } else { us.mul(&js) };
    (f, j, us)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn division_identity_holds_on_both_sides(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f1 = random::hurwitz_series(&mut rng, N, M, 6);
        let f2 = random::hurwitz_series(&mut rng, N, M, 4);
        let f2 = if f2.reduced_order() == ReducedOrder::Infinite { f2.div_pi_left(f2.pi_content().finite().unwrap()).unwrap() } else { f2 };
        let d = f2.reduced_order().finite().unwrap();
        let (a, r) = SkewSeries::divide_left(&f1, &f2).unwrap();
        prop_assert_eq!(r.len(), d);
        prop_assert_eq!(a.mul(&f2).add(&SkewSeries::from_poly(M, &r, &zero())), f1.clone());
        let (b, s) = SkewSeries::divide_right(&f1, &f2).unwrap();
        prop_assert_eq!(f2.mul(&b).add(&SkewSeries::from_poly(M, &s, &zero())), f1);
    }

    #[test]
    fn left_preparation_recovers_constructed_factors(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, j, u) = constructed(&mut rng, false);
        let w = weierstrass_prepare(&f).unwrap();
        prop_assert_eq!(w.mu, 0);
        prop_assert_eq!(&w.monic, &j);
        prop_assert_eq!(w.unit, u);
    }

    #[test]
    fn right_preparation_recovers_constructed_factors(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, j, u) = constructed(&mut rng, true);
        let w = weierstrass_prepare_right(&f.mul_pi_right(1)).unwrap();
        prop_assert_eq!(w.mu, 1);
        prop_assert_eq!(&w.monic, &j);
        prop_assert_eq!(w.unit, u);
    }

    #[test]
    fn series_class_is_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gen = |rng: &mut ChaCha8Rng| Matrix::from_fn(2, 2, |_, _| random::hurwitz_series(rng, 40, M, 2));
        let (a, b) = (gen(&mut rng), gen(&mut rng));
        let lift = |m: &Matrix<SkewSeries<Hurwitz>>| m.map(|s| LocalizedSeries::from_series(s.clone()));
        if let (Ok(ca), Ok(cb)) = (series_det_class(&lift(&a)), series_det_class(&lift(&b))) {
            let cab = series_det_class(&lift(&a.mul(&b))).unwrap();
            let digits = [&ca, &cb, &cab].iter().map(|c| c.nrd.padic_precision()).min().unwrap();
            prop_assume!(digits >= 8);
            prop_assert_eq!(cab, ca.mul(&cb).unwrap());
        }
    }
}

#[test]
fn diagonal_reduction_reassembles() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..10 {
        let a = Matrix::from_fn(2, 2, |_, _| LocalizedSeries::from_series(random::hurwitz_series(&mut rng, 16, M, 2)));
        let Ok(red) = diagonal_reduce(&a) else { continue };
        let back = red.u.mul(&red.b).mul(&red.v);
        let cleared = |x: &LocalizedSeries<Hurwitz>| LocalizedSeries::new(x.body.clone(), x.pi_power + 12).to_series().unwrap();
        for (x, y) in back.entries().iter().zip(a.entries()) {
            assert_eq!(cleared(x), cleared(y));
        }
        assert!(red.b.get(0, 1).is_zero() && red.b.get(1, 0).is_zero());
    }
}

#[test]
fn representative_of_diagonal_matrix() {
    let t = zero();
    let pi = SkewSeries::constant(M, &Hurwitz::uniformizer(N));
    let x = SkewSeries::x(M, &t);
    let a = Matrix::diagonal(&[pi.mul(&x.add(&pi)), x.add(&t.one_like().neg().into_series(M))]);
    let rep = integral_det_representative(&a).unwrap();
    assert_eq!(rep.r, 1);
    let n = nrd_integral(&Matrix::from_rows(vec![vec![rep.representative.clone()]])).unwrap();
    assert_eq!(n, nrd_integral(&a).unwrap());
}

trait IntoSeries {
    fn into_series(self, m: usize) -> SkewSeries<Hurwitz>;
}

impl IntoSeries for Hurwitz {
    fn into_series(self, m: usize) -> SkewSeries<Hurwitz> {
        SkewSeries::constant(m, &self)
    }
}

#[test]
fn commutative_nrd_is_the_determinant() {
    let t = PAdic::zero(3, 8);
    let s = |c: &[i64]| SkewSeries::new(6, c.iter().map(|&v| t.with_value(v)).collect(), &t);
    let a = Matrix::from_rows(vec![vec![s(&[1, 2]), s(&[3])], vec![s(&[0, 1]), s(&[2, 0, 1])]]);
    let n = nrd_integral(&a).unwrap();
    let expected = [2, 1, 1, 2, 0, 0];
    assert_eq!(n.coeffs(), expected.map(|v| t.with_value(v)).as_slice());
}

#[test]
fn preparation_errors() {
    let t = zero();
    let zero_series = SkewSeries::constant(M, &t);
    assert_eq!(weierstrass_prepare(&zero_series).unwrap_err(), Error::ZeroAtPrecision);
    let mut c = vec![t.clone(); M];
    c[M - 1] = t.one_like();
    c[0] = Hurwitz::uniformizer(N);
    let late = SkewSeries::new(M, c, &t);
    assert!(matches!(weierstrass_prepare(&late), Err(Error::PrecisionTooLow(_))));
}
