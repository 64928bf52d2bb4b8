use dieudonne_core::padic::{validate_context, PAdic, Valuation};
use dieudonne_core::Ring;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn modulus(p: u64, n: u32) -> i128 {
    (p as i128).pow(n)
}

fn arb_ctx() -> impl Strategy<Value = (u64, u32)> {
    (prop::sample::select(vec![2u64, 3, 5, 7, 11]), 1u32..=12)
}

proptest! {
    #[test]
    fn arithmetic_matches_integer_oracle((p, n) in arb_ctx(), a in -1_000_000i64..1_000_000, b in -1_000_000i64..1_000_000) {
        let m = modulus(p, n);
        let (x, y) = (PAdic::new(p, n, a), PAdic::new(p, n, b));
        prop_assert_eq!(x.add(&y).residue() as i128, (a as i128 + b as i128).rem_euclid(m));
        prop_assert_eq!(x.sub(&y).residue() as i128, (a as i128 - b as i128).rem_euclid(m));
        prop_assert_eq!(x.mul(&y).residue() as i128, (a as i128 * b as i128).rem_euclid(m));
        prop_assert_eq!(x.neg().residue() as i128, (-(a as i128)).rem_euclid(m));
    }

    #[test]
    fn inverse_exists_iff_unit((p, n) in arb_ctx(), a in -1_000_000i64..1_000_000) {
        let x = PAdic::new(p, n, a);
        match x.inverse() {
            Some(inv) => {
                prop_assert!(a.rem_euclid(p as i64) != 0);
                prop_assert!(x.mul(&inv).is_one());
            }
            None => prop_assert_eq!(a.rem_euclid(p as i64), 0),
        }
    }

    #[test]
    fn valuation_counts_factors((p, n) in arb_ctx(), a in 1i64..1_000_000) {
        let mut k = 0;
        let mut v = a;
        while v % p as i64 == 0 {
            v /= p as i64;
            k += 1;
        }
        let expected = if k >= n { Valuation::TopOfPrecision } else { Valuation::Finite(k) };
        prop_assert_eq!(PAdic::new(p, n, a).valuation(), expected);
    }

    #[test]
    fn division_by_p_loses_digits((p, n) in arb_ctx(), a in 0i64..1_000_000, k in 0u32..4) {
        let x = PAdic::new(p, n, a).mul_p_power(k);
        if k < n {
            let back = x.div_p_power(k).unwrap();
            prop_assert_eq!(back.precision(), n - k);
            prop_assert_eq!(back, PAdic::new(p, n - k, a));
        }
    }
}

#[test]
fn rationals_with_unit_denominators() {
    let q = BigRational::new(BigInt::from(1), BigInt::from(3));
    let x = PAdic::from_rational(5, 6, &q).unwrap();
    assert!(x.mul(&PAdic::new(5, 6, 3)).is_one());
    assert!(PAdic::from_rational(3, 6, &q).is_err());
}

#[test]
fn comparison_at_common_precision() {
    let a = PAdic::new(3, 8, 10);
    let b = PAdic::new(3, 2, 1);
    assert_eq!(a, b);
    assert_eq!(a.add(&b).precision(), 2);
}

#[test]
fn rejects_bad_contexts() {
    assert!(validate_context(4, 8).is_err());
    assert!(validate_context(3, 0).is_err());
    assert!(validate_context(3, 8).is_ok());
}
