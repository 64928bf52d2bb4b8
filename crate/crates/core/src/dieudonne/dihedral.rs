//! Integral representatives of Dieudonné determinants over Z_p[D_2p].

use super::{det_class, element_class, split_unit_pivot, IntegralityCertificate, TraceOp, Verdict};
use crate::algebras::{nrd_principal_unit_preimage, nrd_unit_preimage_dihedral, Cyclo, DihedralElem};
use crate::error::{Error, Result};
use crate::group_algebra::{dihedral_preimage, GroupKind, GroupRingElem};
use crate::linalg::Matrix;
use crate::padic::{validate_context, PAdic, Valuation};
use crate::ring::{Ring, Scalar};

type Elem = GroupRingElem<PAdic>;

enum Step {
    Found(Elem),
    Stuck(String),
}

fn is_unit(x: &Elem) -> bool {
    x.is_unit().unwrap_or(false)
}

/// Finds ε ∈ Z_p[D_2p] whose determinant class equals that of `a`.
///
/// Works at a raised internal precision and truncates the result back to the
/// precision of `a`; the returned representative is checked against the
/// class of `a` before it is reported.
pub fn dihedral_integral_representative(a: &Matrix<Elem>) -> Result<IntegralityCertificate<PAdic>> {
    if a.rows() == 0 || !a.is_square() {
        return Err(Error::InvalidInput("expected a non-empty square matrix".into()));
    }
    let group = a.get(0, 0).group().clone();
    let GroupKind::Dihedral(p) = group.kind() else {
        return Err(Error::UnsupportedGroup(format!("{group} is not dihedral")));
    };
    let q = a.get(0, 0).prime();
    if q != p {
        return Err(Error::ContextMismatch(format!("D2p:{p} over Z_{q}")));
    }
    let prec = a.entries().iter().map(|e| e.precision()).min().unwrap();
    let class = det_class(a)?;
    let Valuation::Finite(v) = class.central().expect("dihedral class has a central part").valuation() else {
        return Err(Error::SingularAtPrecision("reduced norm vanishes at working precision".into()));
    };

    let mut guard = v + 4;
    let mut last = String::new();
    for _ in 0..4 {
        let mut work = prec + guard;
        while validate_context(p, work).is_err() {
            work -= 1;
        }
        let lifted = a.map(|e| e.with_precision(work));
        let mut trace = Vec::new();
        match reduce(lifted, &mut trace)? {
            Step::Stuck(reason) => {
                return Ok(IntegralityCertificate { verdict: Verdict::Inconclusive(reason), trace })
            }
            Step::Found(eps) => {
                if eps.precision() >= prec {
                    let eps = eps.with_precision(prec);
                    if element_class(&eps)? == class {
                        return Ok(IntegralityCertificate { verdict: Verdict::RepresentativeFound(eps), trace });
                    }
                    last = "candidate class differs from the target".into();
                } else {
                    last = format!("only {} digits survived", eps.precision());
                }
            }
        }
        if work < prec + guard {
            break;
        }
        guard *= 2;
    }
    Ok(IntegralityCertificate { verdict: Verdict::Inconclusive(last), trace: Vec::new() })
}

fn reduce(mut m: Matrix<Elem>, trace: &mut Vec<TraceOp>) -> Result<Step> {
    if m.rows() == 1 {
        return Ok(Step::Found(m.get(0, 0).clone()));
    }
    if !m.entries().iter().any(is_unit) {
        let members = m
            .entries()
            .iter()
            .map(|e| e.maximal_ideal_membership())
            .collect::<Result<Vec<_>>>()?;
        if members.iter().all(|x| x.0) || members.iter().all(|x| x.1) {
            return one_maximal_ideal(&m);
        }
        match search_unit(&m) {
            Some((next, ops)) => {
                trace.extend(ops);
                m = next;
            }
            None => return Ok(Step::Stuck("no unit entry within two elementary operations".into())),
        }
    }
    let mut swaps = 0;
    let u = split_unit_pivot(&mut m, 0, &is_unit, trace, &mut swaps).expect("a unit entry exists");
    let rest = match reduce(m.minor(0, 0), trace)? {
        Step::Found(r) => r,
        stuck => return Ok(stuck),
    };
    let eps = u.mul(&rest);
    Ok(Step::Found(if swaps % 2 == 1 { eps.neg() } else { eps }))
}

/// Breadth-first search over row and column additions with coefficient 1,
/// up to depth two, for a matrix with a unit entry.
fn search_unit(m: &Matrix<Elem>) -> Option<(Matrix<Elem>, Vec<TraceOp>)> {
    let n = m.rows();
    let one = m.get(0, 0).one_like();
    let moves: Vec<TraceOp> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .flat_map(|(i, j)| [TraceOp::RowAdd { target: i, source: j }, TraceOp::ColAdd { target: i, source: j }])
        .collect();
    let apply = |m: &Matrix<Elem>, op: &TraceOp| {
        let mut out = m.clone();
        match *op {
            TraceOp::RowAdd { target, source } => out.add_row_multiple(target, source, &one),
            TraceOp::ColAdd { target, source } => out.add_col_multiple(target, source, &one),
            _ => unreachable!(),
        }
        out
    };
    let mut frontier = vec![(m.clone(), Vec::new())];
    for _ in 0..2 {
        let mut next = Vec::new();
        for (state, ops) in &frontier {
            for op in &moves {
                let s = apply(state, op);
                let mut path = ops.clone();
                path.push(*op);
                if s.entries().iter().any(is_unit) {
                    return Some((s, path));
                }
                next.push((s, path));
            }
        }
        frontier = next;
    }
    None
}

/// All entries lie in one of the two maximal ideals: build the
/// representative from its Wedderburn components.
fn one_maximal_ideal(m: &Matrix<Elem>) -> Result<Step> {
    let class = det_class(m)?;
    let det1 = class.commutative().expect("dihedral class has a commutative part").clone();
    let nrd = class.central().expect("dihedral class has a central part").clone();
    let p = nrd.prime();
    let (a, b) = (*det1.coeff(0), *det1.coeff(1));
    let (ra, rb) = (a.residue_mod(p).unwrap(), b.residue_mod(p).unwrap());
    let Valuation::Finite(k) = nrd.valuation() else {
        return Ok(Step::Stuck("reduced norm vanishes at working precision".into()));
    };
    if k == 0 || k % 2 == 1 {
        return Ok(Step::Stuck(format!("reduced norm has valuation {k}")));
    }
    let t = a.zero_like();
    let z = if ra == 0 && rb == 0 {
        let n = k / 2;
        let mut w = nrd.div_one_minus_zeta_pow(2 * n)?.mul(&Cyclo::zeta_pow(p, 1, &t).neg().pow(n as u64));
        let half = Cyclo::from_scalar(p, &t.from_int_like(2).try_inverse()?);
        w = w.add(&w.alpha()).mul(&half);
        let u = nrd_unit_preimage_dihedral(&w)?;
        DihedralElem::from_cyclo(Cyclo::one_minus_zeta(p, &t).pow(n as u64)).mul(&u)
    } else if ra != 0 && rb != 0 && (ra == rb || ra + rb == p) {
        let a_sq_inv = Cyclo::from_scalar(p, &a.mul(&a).try_inverse()?);
        let u1 = nrd_principal_unit_preimage(&nrd.mul(&a_sq_inv).add(&nrd.one_like()))?;
        let ac = Cyclo::from_scalar(p, &a);
        let a_tau = DihedralElem::new(ac.zero_like(), if ra == rb { ac.clone() } else { ac.neg() });
        DihedralElem::from_cyclo(u1.mul(&ac)).add(&a_tau)
    } else {
        return Ok(Step::Stuck(format!(
            "commutative determinant {ra} + {rb}e mod {p} admits no recipe"
        )));
    };
    Ok(Step::Found(dihedral_preimage(&det1, &z)?))
}
