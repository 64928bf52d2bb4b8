//! End-to-end acceptance run: one PASS/FAIL line per criterion, each with a
//! pinned time bound.

use dieudonne_core::algebras::{Cyclo, DihedralElem, Hurwitz, Quaternion};
use dieudonne_core::dieudonne::{
    det_2x2_formula, det_class, dihedral_integral_representative, element_class, h8_obstruction, Verdict,
};
use dieudonne_core::group_algebra::{
    is_integral_member, padic_group_elem, wedderburn_project, FiniteGroup, Group, GroupRingElem, IwasawaSeries,
    LambdaGElem,
};
use dieudonne_core::iwasawa::{sigma_char, verify_isogeny_identity, IsogenyCharacter, LambdaModP2};
use dieudonne_core::linalg::berkowitz_det;
use dieudonne_core::ring::rat;
use dieudonne_core::weierstrass::{
    integral_det_representative, nrd_integral, weierstrass_prepare, LocalCoeff, SkewSeries,
};
use dieudonne_core::{random, worked, Matrix, PAdic, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_real_quaternions() -> Outcome {
    let a = worked::real_quaternion_matrix();
    let q = |x: i64| Quaternion::new(rat(x), rat(0), rat(0), rat(0));
    ensure(a.mul(&a) == Matrix::diagonal(&[q(-2), q(-2)]), || "A^2 != diag(-2, -2)".into())?;
    let (w, x, y, z) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
    let d = det_2x2_formula(w, x, y, z).map_err(|e| e.to_string())?;
    ensure(d == q(-2), || format!("2x2 formula gave {d:?}"))?;
    let naive = [
        w.mul(z).sub(&x.mul(y)),
        z.mul(w).sub(&x.mul(y)),
        w.mul(z).sub(&y.mul(x)),
        z.mul(w).sub(&y.mul(x)),
    ];
    ensure(naive.iter().all(|m| m.is_zero()), || "a naive minor is non-zero".into())?;
    let class = det_class(&a).map_err(|e| e.to_string())?;
    ensure(class.scalar() == Some(&rat(4)), || format!("Nrd = {:?}", class.scalar()))?;
    Ok("A^2 = diag(-2,-2), formula -2, naive minors 0, Nrd 4".into())
}

fn c2_h8() -> Outcome {
    let a = worked::h8_matrix();
    let class = det_class(&a).map_err(|e| e.to_string())?;
    let det1 = class.commutative().ok_or("no commutative part")?;
    ensure(det1.coeffs() == [rat(81), rat(17), rat(17), rat(1)], || format!("Det1 = {:?}", det1.coeffs()))?;
    let nrd = class.scalar().ok_or("no norm part")?;
    ensure(*nrd == rat(6856) && rat(8).mul(&rat(857)) == rat(6856), || format!("Nrd = {nrd}"))?;
    let cert = h8_obstruction(&a).map_err(|e| e.to_string())?;
    match cert.verdict {
        Verdict::NoIntegralRepresentative(ob) if ob.modulus == 8 && ob.required == [4] && ob.actual == 0 => {
            Ok("Det1 = 81+17e+17f+ef, Nrd = 6856, obstruction required {4} actual 0 mod 8".into())
        }
        other => Err(format!("unexpected verdict {other:?}")),
    }
}

fn random_dihedral_matrix(rng: &mut ChaCha8Rng, g: &Group, p: u64, prec: u32) -> Matrix<GroupRingElem<PAdic>> {
    let n = rng.gen_range(1..=4);
    match rng.gen_range(0..3) {
        0 => random::group_matrix(rng, g, p, prec, n),
        1 => {
            let dual = rng.gen_bool(0.5);
            Matrix::from_fn(n, n, |_, _| random::dihedral_ideal_elem(rng, g, p, prec, dual))
        }
        _ => Matrix::from_fn(n, n, |_, _| {
            let dual = rng.gen_bool(0.5);
            random::dihedral_ideal_elem(rng, g, p, prec, dual)
        }),
    }
}

fn c3_dihedral_representatives() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut found = 0;
    let mut inconclusive = Vec::new();
    for p in [3u64, 5] {
        let g = FiniteGroup::dihedral(p).map_err(|e| e.to_string())?;
        let mut done = 0;
        while done < 200 {
            let a = random_dihedral_matrix(&mut rng, &g, p, 8);
            let Ok(class) = det_class(&a) else { continue };
            done += 1;
            let cert = dihedral_integral_representative(&a).map_err(|e| format!("p = {p}: {e}"))?;
            match cert.verdict {
                Verdict::RepresentativeFound(eps) => {
                    let w = wedderburn_project(&eps).map_err(|e| e.to_string())?;
                    ensure(is_integral_member(&w), || "representative fails the fiber-product test".into())?;
                    let c = element_class(&eps).map_err(|e| e.to_string())?;
                    ensure(c == class, || format!("class mismatch at p = {p}"))?;
                    found += 1;
                }
                Verdict::Inconclusive(why) => inconclusive.push(format!("p = {p}, n = {}: {why}", a.rows())),
                Verdict::NoIntegralRepresentative(ob) => return Err(format!("unexpected obstruction {ob:?}")),
            }
        }
    }
    if inconclusive.is_empty() {
        Ok(format!("{found}/400 representatives found and verified, 0 inconclusive"))
    } else {
        Err(format!("{} inconclusive, e.g. {}", inconclusive.len(), inconclusive[0]))
    }
}

fn c4_dihedral_values() -> Outcome {
    for p in [3u64, 5, 7] {
        let t = PAdic::zero(p, 8);
        let u = DihedralElem::from_cyclo(Cyclo::one_minus_zeta(p, &t));
        let mut expected = vec![t; p as usize - 1];
        // 2 − ζ − ζ^{-1} with ζ^{-1} = ζ^{p-1} = −(1 + ζ + … + ζ^{p-2}).
        for (k, c) in expected.iter_mut().enumerate() {
            let mut v = 1;
            if k == 0 {
                v += 2;
            }
            if k == 1 {
                v -= 1;
            }
            *c = t.with_value(v);
        }
        let nrd = u.nrd().map_err(|e| e.to_string())?;
        ensure(nrd.coords() == expected.as_slice(), || format!("Nrd(1 - zeta_{p}) = {:?}", nrd.coords()))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..500 {
        let p = [3u64, 5, 7][rng.gen_range(0..3)];
        let x = random::dihedral_elem(&mut rng, p, 10);
        let formula = x.c.mul(&x.c.alpha()).sub(&x.d.mul(&x.d.alpha()));
        ensure(berkowitz_det(&x.embed()) == formula, || "embedding determinant differs from the formula".into())?;
        ensure(x.nrd().map_err(|e| e.to_string())? == formula, || "nrd differs from the formula".into())?;
    }
    for p in [3u64, 5, 7] {
        let g = FiniteGroup::dihedral(p).map_err(|e| e.to_string())?;
        let mut seen = std::collections::HashSet::new();
        for c0 in 0..p as i64 {
            for c1 in 0..p as i64 {
                let mut c = vec![0; 2 * p as usize];
                c[0] = c0;
                c[p as usize] = c1;
                let e = padic_group_elem(&g, p, 8, &c);
                let (in_m, in_mp) = e.maximal_ideal_membership().map_err(|e| e.to_string())?;
                let plus = (c0 + c1).rem_euclid(p as i64);
                let minus = (c0 - c1).rem_euclid(p as i64);
                ensure(in_m == (plus == 0) && in_mp == (minus == 0), || "ideal membership".into())?;
                ensure(e.is_unit().unwrap() == (plus != 0 && minus != 0), || "unit criterion".into())?;
                seen.insert((plus, minus));
            }
        }
        ensure(seen.len() == (p * p) as usize, || format!("residue map not bijective at p = {p}"))?;
    }
    Ok("Nrd(1 - zeta) exact for p = 3, 5, 7; 500 norm samples; residue maps bijective".into())
}

/// p^μ·U·J for a random polynomial unit U and a random distinguished J
/// whose product has degree below M, so the factorization is known exactly.
fn constructed_series(rng: &mut ChaCha8Rng, p: u64, m: usize) -> (SkewSeries<PAdic>, u32, Vec<PAdic>) {
    let t = PAdic::zero(p, 12);
    let d = rng.gen_range(0..=4);
    let mut j: Vec<PAdic> = (0..d).map(|_| random::padic_non_unit(rng, p, 12)).collect();
    j.push(t.one_like());
    let mut u: Vec<PAdic> = (0..m - d).map(|_| random::padic(rng, p, 12)).collect();
    while !u[0].is_unit() {
        u[0] = random::padic(rng, p, 12);
    }
    let mu = rng.gen_range(0..=2);
    let f = SkewSeries::from_poly(m, &u, &t).mul(&SkewSeries::from_poly(m, &j, &t)).mul_pi_left(mu);
    (f, mu, j)
}

fn c5_weierstrass() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..100 {
        let f = random::hurwitz_series(&mut rng, 12, 12, 4);
        let w = weierstrass_prepare(&f).map_err(|e| format!("case {case}: {e}"))?;
        ensure(w.reconstruct() == f, || format!("case {case}: nonzero residual"))?;
        ensure(w.is_distinguished(), || format!("case {case}: J not distinguished"))?;
        ensure(w.unit.coeff(0).is_unit(), || format!("case {case}: U not a unit"))?;
    }
    for case in 0..100 {
        let p = [2u64, 3, 5][case % 3];
        let (f, mu, j) = constructed_series(&mut rng, p, 12);
        let w = weierstrass_prepare(&f).map_err(|e| format!("commutative case {case}: {e}"))?;
        ensure(w.reconstruct() == f, || format!("commutative case {case}: nonzero residual"))?;
        ensure(w.mu == mu && w.monic == j, || format!("commutative case {case}: J differs from the constructed factor"))?;
    }
    let two = Hurwitz::from_ints(12, [2, 0, 0, 0]);
    let u1 = two.div_pi_left(2).map_err(|e| e.to_string())?;
    let pi2 = Hurwitz::uniformizer(12).pow(2);
    ensure(u1.is_unit() && u1.mul(&pi2) == two && Hurwitz::RAMIFICATION == 2, || "p != unit * pi^2".into())?;
    Ok("100 quaternionic + 100 commutative preparations exact; p = u*pi^2 (d' = 2)".into())
}

fn random_group_matrix_q(rng: &mut ChaCha8Rng, g: &Group, p: u64, n: usize) -> Matrix<GroupRingElem<PAdic>> {
    random::group_matrix(rng, g, p, 16, n)
}

fn c6_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    for (g, p) in [(FiniteGroup::dihedral(3).unwrap(), 3u64), (FiniteGroup::quaternion8(), 2)] {
        let mut unit = vec![0; g.order()];
        unit[0] = 1;
        let one = padic_group_elem(&g, p, 16, &unit);
        let mut cases = 0;
        while cases < 300 {
            let n = rng.gen_range(1..=3);
            let a = random_group_matrix_q(&mut rng, &g, p, n);
            let b = random_group_matrix_q(&mut rng, &g, p, n);
            let (Ok(ca), Ok(cb)) = (det_class(&a), det_class(&b)) else { continue };
            cases += 1;
            let ab = det_class(&a.mul(&b)).map_err(|e| e.to_string())?;
            ensure(ab == ca.mul(&cb), || format!("multiplicativity over {g}"))?;
            if n >= 2 {
                let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n - 1));
                let j = if j >= i { j + 1 } else { j };
                let lam = random::group_elem(&mut rng, &g, p, 16);
                let mut e = a.clone();
                if rng.gen_bool(0.5) {
                    e.add_row_multiple(i, j, &lam);
                } else {
                    e.add_col_multiple(i, j, &lam);
                }
                ensure(det_class(&e).map_err(|e| e.to_string())? == ca, || format!("elementary invariance over {g}"))?;
            }
            let t = random::group_elem(&mut rng, &g, p, 16);
            if let Ok(ct) = element_class(&t) {
                let mut d = Matrix::identity(n, &one);
                d.set(0, 0, t.clone());
                let lhs = det_class(&d.mul(&a)).map_err(|e| e.to_string())?;
                ensure(lhs == ct.mul(&ca), || format!("diagonal rule over {g}"))?;
            }
            let mut perm = Matrix::identity(n, &one);
            for k in (1..n).rev() {
                perm.swap_rows(k, rng.gen_range(0..=k));
            }
            let cp = det_class(&perm).map_err(|e| e.to_string())?;
            ensure(cp.mul(&cp).is_one(), || format!("permutation class squared over {g}"))?;
            let tri = Matrix::from_fn(n, n, |r, c| if r <= c { a.get(r, c).clone() } else { one.zero_like() });
            if let Ok(ctri) = det_class(&tri) {
                let prod = (0..n)
                    .map(|k| element_class(tri.get(k, k)).unwrap())
                    .reduce(|x, y| x.mul(&y))
                    .unwrap();
                ensure(ctri == prod, || format!("triangular rule over {g}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} cases over Z_3[D_6] and Z_2[H_8], zero violations"))
}

fn c7_integral_representatives() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut max_r = 0;
    let mut done = 0;
    while done < 50 {
        let a = Matrix::from_fn(2, 2, |_, _| random::hurwitz_series(&mut rng, 12, 12, 2));
        let nrd = nrd_integral(&a).map_err(|e| format!("integrality: {e}"))?;
        if nrd.coeffs().iter().all(|c| c.is_zero()) {
            continue;
        }
        done += 1;
        let rep = integral_det_representative(&a).map_err(|e| format!("case {done}: {e}"))?;
        ensure(rep.r >= 0, || "negative exponent".into())?;
        let c = nrd_integral(&Matrix::from_rows(vec![vec![rep.representative.clone()]])).map_err(|e| e.to_string())?;
        ensure(c == nrd, || format!("case {done}: Nrd of representative differs"))?;
        max_r = max_r.max(rep.r);
    }
    Ok(format!("50 representatives, r >= 0 (max {max_r}), reduced norms match"))
}

fn lambda_matrix(rng: &mut ChaCha8Rng, g: &Group, n: usize) -> Matrix<LambdaGElem> {
    Matrix::from_fn(n, n, |_, _| random::lambda_g_elem(rng, g, 3, 4, 16))
}

fn c8_isogeny() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let g = FiniteGroup::cyclic(3).map_err(|e| e.to_string())?;
    let chis: Vec<IsogenyCharacter> =
        [1, 4, 7].iter().map(|&v| IsogenyCharacter::new(&g, 3, v).unwrap()).collect();
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        let a = lambda_matrix(&mut rng, &g, n);
        let chi = &chis[rng.gen_range(0..3)];
        let lhs = sigma_char(&berkowitz_det(&a), chi).map_err(|e| e.to_string())?;
        let rhs = berkowitz_det(&a.try_map(|x| sigma_char(x, chi)).map_err(|e| e.to_string())?);
        ensure(lhs == rhs, || "det and sigma do not commute".into())?;
    }
    let mut held = 0;
    let mut refuted = 0;
    while held < 50 {
        let (n1, n2) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let a_phi = lambda_matrix(&mut rng, &g, n1);
        let a_tilde = lambda_matrix(&mut rng, &g, n2);
        let (c1, c2) = (&chis[rng.gen_range(0..3)], &chis[rng.gen_range(0..3)]);
        let d1 = berkowitz_det(&a_phi.try_map(|x| sigma_char(x, c1)).unwrap());
        let d2 = berkowitz_det(&a_tilde.try_map(|x| sigma_char(x, c2)).unwrap());
        let prod = d1.mul(&d2);
        if !prod.is_non_zero_divisor() || prod.distinguished().is_err() {
            continue;
        }
        let lift = |s: &LambdaModP2| IwasawaSeries::new(3, 4, 16, &s.coeffs().iter().map(|c| c.with_precision(4)).collect::<Vec<_>>());
        let one = IwasawaSeries::from_ints(3, 4, 16, &[1]);
        let t = IwasawaSeries::t(3, 4, 16);
        let e_dim = rng.gen_range(1..=2);
        let mut a_e = Matrix::identity(e_dim, &one);
        a_e.set(0, 0, lift(&prod));
        let report = verify_isogeny_identity(&a_e, &a_phi, &a_tilde, c1, c2).map_err(|e| e.to_string())?;
        ensure(report.holds && report.lhs_over_rhs.is_some() && report.rhs_over_lhs.is_some(), || {
            "constructed triple not verified".into()
        })?;
        held += 1;

        let mut e2 = a_e.clone();
        e2.set(0, 0, a_e.get(0, 0).mul(&t));
        let tt = LambdaGElem::scalar(&g, &t);
        let mut p2 = a_phi.clone();
        for j in 0..n1 {
            p2.set(0, j, p2.get(0, j).mul(&tt));
        }
        let mut t2 = a_tilde.clone();
        for j in 0..n2 {
            t2.set(0, j, t2.get(0, j).mul(&tt));
        }
        for (ae, ap, at) in [(&e2, &a_phi, &a_tilde), (&a_e, &p2, &a_tilde), (&a_e, &a_phi, &t2)] {
            let r = verify_isogeny_identity(ae, ap, at, c1, c2).map_err(|e| format!("perturbed: {e}"))?;
            ensure(!r.holds, || "T-perturbation not detected".into())?;
            refuted += 1;
        }
    }
    Ok(format!("200 det/sigma commutations; {held} identities verified; {refuted} perturbations refuted"))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome, Duration); 8] = [
        (1, "real quaternion 2x2 example", c1_real_quaternions, Duration::from_secs(1)),
        (2, "H8 determinant and mod-8 obstruction", c2_h8, Duration::from_secs(1)),
        (3, "dihedral integral representatives", c3_dihedral_representatives, Duration::from_secs(60)),
        (4, "dihedral reduced norms and residues", c4_dihedral_values, Duration::from_secs(5)),
        (5, "Weierstrass preparation", c5_weierstrass, Duration::from_secs(30)),
        (6, "Dieudonné axioms", c6_axioms, Duration::from_secs(60)),
        (7, "integral determinant representatives over O_D[[x]]", c7_integral_representatives, Duration::from_secs(60)),
        (8, "isogeny ideal identity", c8_isogeny, Duration::from_secs(30)),
    ];
    let mut failed = 0;
    for (n, name, run, bound) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let line = match outcome {
            Ok(detail) if elapsed <= bound => format!("PASS  criterion {n}: {name} ({detail}) [{elapsed:.2?} <= {bound:?}]"),
            Ok(detail) => format!("FAIL  criterion {n}: {name} ({detail}) [{elapsed:.2?} exceeds {bound:?}]"),
            Err(why) => format!("FAIL  criterion {n}: {name} ({why}) [{elapsed:.2?}]"),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line}");
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 8 acceptance criteria passed");
}
