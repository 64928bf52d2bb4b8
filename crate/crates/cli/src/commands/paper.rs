use crate::error::CliError;
use dieudonne_core::algebras::{Cyclo, DihedralElem, Hurwitz, Quaternion};
use dieudonne_core::dieudonne::{det_2x2_formula, det_class, h8_obstruction, Verdict};
use dieudonne_core::group_algebra::{padic_group_elem, FiniteGroup, IwasawaSeries, LambdaGElem};
use dieudonne_core::iwasawa::{verify_isogeny_identity, IsogenyCharacter};
use dieudonne_core::ring::rat;
use dieudonne_core::weierstrass::{weierstrass_prepare, LocalCoeff, SkewSeries};
use dieudonne_core::{worked, Matrix, PAdic, Ring};
use serde_json::{json, Value};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn real_scalar(x: i64) -> Quaternion<num_rational::BigRational> {
    Quaternion::new(rat(x), rat(0), rat(0), rat(0))
}

fn quaternion_square() -> Check {
    let a = worked::real_quaternion_matrix();
    ensure(a.mul(&a) == Matrix::diagonal(&[real_scalar(-2), real_scalar(-2)]), || "A^2 != diag(-2,-2)".into())?;
    Ok("A^2 = diag(-2, -2)".into())
}

fn quaternion_formula() -> Check {
    let a = worked::real_quaternion_matrix();
    let d = det_2x2_formula(a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1)).map_err(err)?;
    ensure(d == real_scalar(-2), || format!("formula gave {d:?}"))?;
    Ok("ad - ac a^-1 b = -2".into())
}

fn quaternion_naive_minors() -> Check {
    let a = worked::real_quaternion_matrix();
    let (w, x, y, z) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
    let minors = [w.mul(z).sub(&x.mul(y)), z.mul(w).sub(&x.mul(y)), w.mul(z).sub(&y.mul(x)), z.mul(w).sub(&y.mul(x))];
    ensure(minors.iter().all(|m| m.is_zero()), || "a naive minor is non-zero".into())?;
    Ok("all four naive minors vanish".into())
}

fn quaternion_nrd() -> Check {
    let class = det_class(&worked::real_quaternion_matrix()).map_err(err)?;
    ensure(class.scalar() == Some(&rat(4)), || format!("Nrd = {:?}", class.scalar()))?;
    Ok("Nrd = 4 = N(-2)".into())
}

fn h8_det1() -> Check {
    let class = det_class(&worked::h8_matrix()).map_err(err)?;
    let d = class.commutative().ok_or("no commutative component")?;
    ensure(d.coeffs() == [rat(81), rat(17), rat(17), rat(1)], || format!("Det1 = {:?}", d.coeffs()))?;
    Ok(format!("Det1 = {}", d.display_with(|c| c.to_string())))
}

fn h8_nrd() -> Check {
    let class = det_class(&worked::h8_matrix()).map_err(err)?;
    let n = class.scalar().ok_or("no reduced-norm component")?;
    ensure(*n == rat(6856) && rat(8).mul(&rat(857)) == *n, || format!("Nrd = {n}"))?;
    Ok("Nrd = 6856 = 8 * 857".into())
}

fn h8_obstructed() -> Check {
    match h8_obstruction(&worked::h8_matrix()).map_err(err)?.verdict {
        Verdict::NoIntegralRepresentative(ob) if ob.modulus == 8 && ob.required == [4] && ob.actual == 0 => {
            Ok("integral Nrd would be 4 mod 8, actual 0 mod 8".into())
        }
        other => Err(format!("unexpected verdict {other:?}")),
    }
}

fn dihedral_nrd() -> Check {
    for p in [3u64, 5, 7] {
        let t = PAdic::zero(p, 8);
        let nrd = DihedralElem::from_cyclo(Cyclo::one_minus_zeta(p, &t)).nrd().map_err(err)?;
        // 2 - ζ - ζ^{-1} = 3 + 0ζ + 1ζ² + … in the basis 1, ζ, …, ζ^{p-2}.
        let expected: Vec<PAdic> = (0..p as i64 - 1).map(|k| t.with_value(if k == 0 { 3 } else if k == 1 { 0 } else { 1 })).collect();
        ensure(nrd.coords() == expected.as_slice(), || format!("p = {p}: Nrd = {:?}", nrd.coords()))?;
    }
    Ok("Nrd(1 - zeta) = 2 - zeta - zeta^-1 for p = 3, 5, 7".into())
}

fn dihedral_residues() -> Check {
    for p in [3u64, 5, 7] {
        let g = FiniteGroup::dihedral(p).map_err(err)?;
        let mut seen = std::collections::HashSet::new();
        for c0 in 0..p as i64 {
            for c1 in 0..p as i64 {
                let mut c = vec![0; 2 * p as usize];
                c[0] = c0;
                c[p as usize] = c1;
                let (in_m, in_mp) = padic_group_elem(&g, p, 8, &c).maximal_ideal_membership().map_err(err)?;
                let (plus, minus) = ((c0 + c1).rem_euclid(p as i64), (c0 - c1).rem_euclid(p as i64));
                ensure(in_m == (plus == 0) && in_mp == (minus == 0), || format!("membership at p = {p}"))?;
                seen.insert((plus, minus));
            }
        }
        ensure(seen.len() == (p * p) as usize, || format!("residue map not bijective at p = {p}"))?;
    }
    Ok("a + bx maps bijectively onto F_p x F_p for p = 3, 5, 7".into())
}

fn hurwitz_uniformizer() -> Check {
    let pi = Hurwitz::uniformizer(12);
    let n = pi.nrd();
    ensure(n == PAdic::new(2, 12, 2), || format!("Nrd(pi) = {n}"))?;
    Ok("Nrd(1 + i) = 2".into())
}

fn hurwitz_ramification() -> Check {
    let two = Hurwitz::from_ints(12, [2, 0, 0, 0]);
    let u = two.div_pi_left(2).map_err(err)?;
    ensure(u.is_unit() && u.mul(&Hurwitz::uniformizer(12).pow(2)) == two, || "2 != u * pi^2".into())?;
    ensure(Hurwitz::RAMIFICATION == 2, || "ramification index is not 2".into())?;
    Ok("2 = u * pi^2 with u a unit, so d' = 2".into())
}

fn weierstrass_example() -> Check {
    let h = |c: [i64; 4]| Hurwitz::from_ints(12, c);
    // f = 2 + (1+i)x + x² + x³ over O_D[[x]].
    let f = SkewSeries::new(10, vec![h([2, 0, 0, 0]), h([1, 1, 0, 0]), h([1, 0, 0, 0]), h([1, 0, 0, 0])], &h([0; 4]));
    let w = weierstrass_prepare(&f).map_err(err)?;
    ensure(w.reconstruct() == f, || "pi^mu U J != f".into())?;
    ensure(w.is_distinguished() && w.degree() == 2 && w.mu == 0, || {
        format!("mu = {}, degree = {}", w.mu, w.degree())
    })?;
    ensure(w.unit.coeff(0).is_unit(), || "U(0) is not a unit".into())?;
    Ok("f = U J with deg J = 2, residual 0".into())
}

fn isogeny_inputs() -> Result<(Matrix<IwasawaSeries>, Matrix<LambdaGElem>, Matrix<LambdaGElem>, IsogenyCharacter), String> {
    let g = FiniteGroup::cyclic(3).map_err(err)?;
    let chi = IsogenyCharacter::new(&g, 3, 4).map_err(err)?;
    let s = |c: &[i64]| IwasawaSeries::from_ints(3, 4, 16, c);
    // A_phi = [T + 3g], A_phi~ = [T + 3]; under chi(g) = 4 their product is
    // (T + 12)(T + 3) = T² + 15T + 36.
    let gen = g.generator("g").ok_or("no generator g")?;
    let mut a = vec![s(&[0, 1]), s(&[]), s(&[])];
    a[gen] = s(&[3]);
    let a_phi = Matrix::from_rows(vec![vec![LambdaGElem::new(g.clone(), a)]]);
    let a_tilde = Matrix::from_rows(vec![vec![LambdaGElem::scalar(&g, &s(&[3, 1]))]]);
    let a_e = Matrix::from_rows(vec![vec![s(&[36, 15, 1])]]);
    Ok((a_e, a_phi, a_tilde, chi))
}

fn isogeny_example() -> Check {
    let (a_e, a_phi, a_tilde, chi) = isogeny_inputs()?;
    let r = verify_isogeny_identity(&a_e, &a_phi, &a_tilde, &chi, &chi).map_err(err)?;
    ensure(r.holds, || "ideals differ".into())?;
    Ok("(det A_E) = (det A_phi)(det A_phi~) in Lambda/(p^2)".into())
}

fn isogeny_perturbed() -> Check {
    let (a_e, a_phi, a_tilde, chi) = isogeny_inputs()?;
    let t = IwasawaSeries::t(3, 4, 16);
    let bumped = Matrix::from_rows(vec![vec![a_e.get(0, 0).mul(&t)]]);
    let r = verify_isogeny_identity(&bumped, &a_phi, &a_tilde, &chi, &chi).map_err(err)?;
    ensure(!r.holds, || "perturbed identity still holds".into())?;
    Ok("multiplying det A_E by T breaks the identity".into())
}

pub const CHECKS: [(&str, fn() -> Check); 14] = [
    ("quaternion_square", quaternion_square),
    ("quaternion_2x2_formula", quaternion_formula),
    ("quaternion_naive_minors", quaternion_naive_minors),
    ("quaternion_reduced_norm", quaternion_nrd),
    ("h8_det1", h8_det1),
    ("h8_reduced_norm", h8_nrd),
    ("h8_obstruction", h8_obstructed),
    ("dihedral_reduced_norm", dihedral_nrd),
    ("dihedral_residues", dihedral_residues),
    ("hurwitz_uniformizer", hurwitz_uniformizer),
    ("hurwitz_ramification", hurwitz_ramification),
    ("weierstrass_example", weierstrass_example),
    ("isogeny_example", isogeny_example),
    ("isogeny_perturbed", isogeny_perturbed),
];

pub fn run() -> Result<(Value, Vec<String>), CliError> {
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for (name, check) in CHECKS {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => results.push(json!({ "check": name, "passed": true, "detail": detail })),
            Err(why) => {
                failures.push(format!("{name}: {why}"));
                results.push(json!({ "check": name, "passed": false, "detail": why }));
            }
        }
    }
    Ok((Value::Array(results), failures))
}
