use crate::error::CliError;
use dieudonne_core::dieudonne::{det_class, element_class};
use dieudonne_core::group_algebra::{FiniteGroup, Group};
use dieudonne_core::iwasawa::{sigma_char, IsogenyCharacter};
use dieudonne_core::linalg::berkowitz_det;
use dieudonne_core::weierstrass::weierstrass_prepare;
use dieudonne_core::{random, Matrix, PAdic, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

pub const DEFAULT_CASES: usize = 64;

/// One sampled case: Ok(digest) or Err(description).
type Case = Result<String, String>;

fn padic_ring(rng: &mut ChaCha8Rng) -> Case {
    let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
    let prec = rng.gen_range(1..=12);
    let (a, b) = (random::padic(rng, p, prec), random::padic(rng, p, prec));
    let m = a.modulus() as i128;
    let (x, y) = (a.residue() as i128, b.residue() as i128);
    let ok = a.add(&b).residue() as i128 == (x + y) % m
        && a.mul(&b).residue() as i128 == (x * y) % m
        && a.sub(&b).residue() as i128 == (x - y).rem_euclid(m);
    if ok {
        Ok(format!("{p} {prec} {x} {y}"))
    } else {
        Err(format!("p = {p}, N = {prec}, a = {x}, b = {y}"))
    }
}

fn group_and_prime(rng: &mut ChaCha8Rng) -> (Group, u64) {
    if rng.gen_bool(0.5) {
        (FiniteGroup::dihedral(3).unwrap(), 3)
    } else {
        (FiniteGroup::quaternion8(), 2)
    }
}

fn det_multiplicative(rng: &mut ChaCha8Rng) -> Case {
    let (g, p) = group_and_prime(rng);
    let n = rng.gen_range(1..=3);
    let a = random::group_matrix(rng, &g, p, 16, n);
    let b = random::group_matrix(rng, &g, p, 16, n);
    match (det_class(&a), det_class(&b)) {
        (Ok(ca), Ok(cb)) => {
            let ab = det_class(&a.mul(&b)).map_err(|e| e.to_string())?;
            if ab == ca.mul(&cb) {
                Ok(format!("{ab:?}"))
            } else {
                Err(format!("det(AB) != det(A)det(B) over {g}, n = {n}"))
            }
        }
        _ => Ok("singular".into()),
    }
}

fn det_elementary(rng: &mut ChaCha8Rng) -> Case {
    let (g, p) = group_and_prime(rng);
    let n = rng.gen_range(2..=3);
    let a = random::group_matrix(rng, &g, p, 16, n);
    let Ok(ca) = det_class(&a) else { return Ok("singular".into()) };
    let i = rng.gen_range(0..n);
    let j = (i + rng.gen_range(1..n)) % n;
    let lam = random::group_elem(rng, &g, p, 16);
    let mut e = a.clone();
    e.add_row_multiple(i, j, &lam);
    let ce = det_class(&e).map_err(|e| e.to_string())?;
    if ce == ca {
        Ok(format!("{ce:?}"))
    } else {
        Err(format!("row operation changed the class over {g}"))
    }
}

fn diagonal_rule(rng: &mut ChaCha8Rng) -> Case {
    let (g, p) = group_and_prime(rng);
    let x = random::group_elem(rng, &g, p, 16);
    let y = random::group_elem(rng, &g, p, 16);
    match (element_class(&x), element_class(&y)) {
        (Ok(cx), Ok(cy)) => {
            let d = det_class(&Matrix::diagonal(&[x, y])).map_err(|e| e.to_string())?;
            if d == cx.mul(&cy) {
                Ok(format!("{d:?}"))
            } else {
                Err(format!("diag(x, y) over {g}"))
            }
        }
        _ => Ok("singular".into()),
    }
}

fn weierstrass(rng: &mut ChaCha8Rng) -> Case {
    let f = random::hurwitz_series(rng, 12, 10, 4);
    let w = weierstrass_prepare(&f).map_err(|e| e.to_string())?;
    if w.reconstruct() == f && w.is_distinguished() && w.unit.coeff(0).is_unit() {
        Ok(format!("{} {}", w.mu, w.degree()))
    } else {
        Err(format!("preparation failed: mu = {}, degree = {}", w.mu, w.degree()))
    }
}

fn sigma_commutes(rng: &mut ChaCha8Rng) -> Case {
    let g = FiniteGroup::cyclic(3).unwrap();
    let value = [1, 4, 7][rng.gen_range(0..3)];
    let chi = IsogenyCharacter::new(&g, 3, value).map_err(|e| e.to_string())?;
    let n = rng.gen_range(1..=3);
    let a = Matrix::from_fn(n, n, |_, _| random::lambda_g_elem(rng, &g, 3, 4, 12));
    let lhs = sigma_char(&berkowitz_det(&a), &chi).map_err(|e| e.to_string())?;
    let rhs = berkowitz_det(&a.try_map(|x| sigma_char(x, &chi)).map_err(|e| e.to_string())?);
    if lhs == rhs {
        Ok(format!("{:?}", lhs.coeffs().iter().map(PAdic::residue).collect::<Vec<_>>()))
    } else {
        Err(format!("det and sigma disagree, n = {n}, chi(g) = {value}"))
    }
}

const PROPERTIES: [(&str, fn(&mut ChaCha8Rng) -> Case); 6] = [
    ("padic_ring_ops", padic_ring),
    ("det_multiplicative", det_multiplicative),
    ("det_elementary_invariance", det_elementary),
    ("det_diagonal_rule", diagonal_rule),
    ("weierstrass_reconstruction", weierstrass),
    ("det_commutes_with_characters", sigma_commutes),
];

pub fn run(seed: u64, cases: usize) -> Result<(Value, Vec<String>), CliError> {
    if cases == 0 {
        return Err(CliError::Usage("--cases must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hasher = DefaultHasher::new();
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for (name, prop) in PROPERTIES {
        let mut passed = 0usize;
        let mut first_failure = None;
        for case in 0..cases {
            let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| prop(&mut rng)))
                .unwrap_or_else(|_| Err("panicked".into()));
            match outcome {
                Ok(digest) => {
                    passed += 1;
                    digest.hash(&mut hasher);
                }
                Err(why) => {
                    why.hash(&mut hasher);
                    first_failure.get_or_insert(format!("case {case}: {why}"));
                }
            }
        }
        if let Some(f) = &first_failure {
            failures.push(format!("{name}: {f}"));
        }
        results.push(json!({
            "property": name,
            "cases": cases.to_string(),
            "passed": passed.to_string(),
            "first_failure": first_failure,
        }));
    }
    let out = json!({
        "seed": seed.to_string(),
        "properties": results,
        "fingerprint": format!("{:016x}", hasher.finish()),
    });
    Ok((out, failures))
}
