//! Explicit Wedderburn projections for the supported groups.
//!
//! D_2p: σ₁(x) = e, σ₁(y) = 1 into R[C₂]; σ₂(x) = τ, σ₂(y) = ζ into L⟨τ⟩.
//! H₈: σ₁(x) = e, σ₁(y) = f into R[C₂ ⊕ C₂]; σ₂(x) = i, σ₂(y) = j.

use super::group::{FiniteGroup, GroupKind};
use super::group_ring::GroupRingElem;
use crate::algebras::{Cyclo, DihedralElem, Quaternion};
use crate::error::{Error, Result};
use crate::padic::PAdic;
use crate::ring::{Ring, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum WedderburnImage<S> {
    /// Commutative groups are their own decomposition.
    Commutative(GroupRingElem<S>),
    Dihedral { sigma1: GroupRingElem<S>, sigma2: DihedralElem<S> },
    Quaternion { sigma1: GroupRingElem<S>, sigma2: Quaternion<S> },
}

/// i^a j^b.
fn h8_quaternion<S: Ring>(a: usize, b: usize, template: &S) -> Quaternion<S> {
    let i = Quaternion::i(template);
    let j = Quaternion::j(template);
    i.pow(a as u64).mul(&j.pow(b as u64))
}

/// Applies the Wedderburn projections to a group-ring element.
pub fn wedderburn_project<S: Ring>(a: &GroupRingElem<S>) -> Result<WedderburnImage<S>> {
    let g = a.group();
    let t = &a.coeffs()[0];
    match g.kind() {
        GroupKind::C2 | GroupKind::Klein4 | GroupKind::Cyclic(_) => {
            Ok(WedderburnImage::Commutative(a.clone()))
        }
        GroupKind::Dihedral(p) => {
            let pu = p as usize;
            let c2 = FiniteGroup::c2();
            let c = a.coeffs();
            let sum = |r: std::ops::Range<usize>| r.fold(t.zero_like(), |acc, k| acc.add(&c[k]));
            let sigma1 = GroupRingElem::new(c2, vec![sum(0..pu), sum(pu..2 * pu)]);
            let mut full_c = vec![t.zero_like(); pu];
            let mut full_d = vec![t.zero_like(); pu];
            for k in 0..pu {
                full_c[k] = c[k].clone();
                full_d[(pu - k) % pu] = c[pu + k].clone();
            }
            let reduce = |full: Vec<S>| {
                let top = full[pu - 1].clone();
                Cyclo::from_coords(p, full[..pu - 1].iter().map(|x| x.sub(&top)).collect())
            };
            let sigma2 = DihedralElem::new(reduce(full_c), reduce(full_d));
            Ok(WedderburnImage::Dihedral { sigma1, sigma2 })
        }
        GroupKind::Quaternion8 => {
            let k4 = FiniteGroup::klein4();
            let mut s1 = vec![t.zero_like(); 4];
            let mut s2 = Quaternion::scalar(t.zero_like());
            for (idx, coeff) in a.coeffs().iter().enumerate() {
                let (x_pow, y_pow) = (idx % 4, idx / 4);
                let slot = (x_pow % 2) + 2 * y_pow;
                s1[slot] = s1[slot].add(coeff);
                let q = h8_quaternion(x_pow, y_pow, t).map(|b| b.mul(coeff));
                s2 = s2.add(&q);
            }
            Ok(WedderburnImage::Quaternion { sigma1: GroupRingElem::new(k4, s1), sigma2: s2 })
        }
        GroupKind::Table => Err(Error::UnsupportedGroup(format!(
            "no Wedderburn decomposition for {g}"
        ))),
    }
}

impl<S: Ring> Ring for WedderburnImage<S> {
    fn zero_like(&self) -> Self {
        self.map2(self, |a, _| a.zero_like(), |a, _| a.zero_like(), |a, _| a.zero_like())
    }
    fn one_like(&self) -> Self {
        self.map2(self, |a, _| a.one_like(), |a, _| a.one_like(), |a, _| a.one_like())
    }
    fn from_int_like(&self, n: i64) -> Self {
        self.map2(self, |a, _| a.from_int_like(n), |a, _| a.from_int_like(n), |a, _| a.from_int_like(n))
    }
    fn add(&self, o: &Self) -> Self {
        self.map2(o, |a, b| a.add(b), |a, b| a.add(b), |a, b| a.add(b))
    }
    fn sub(&self, o: &Self) -> Self {
        self.map2(o, |a, b| a.sub(b), |a, b| a.sub(b), |a, b| a.sub(b))
    }
    fn mul(&self, o: &Self) -> Self {
        self.map2(o, |a, b| a.mul(b), |a, b| a.mul(b), |a, b| a.mul(b))
    }
    fn neg(&self) -> Self {
        self.map2(self, |a, _| a.neg(), |a, _| a.neg(), |a, _| a.neg())
    }
    fn is_zero(&self) -> bool {
        match self {
            WedderburnImage::Commutative(a) => a.is_zero(),
            WedderburnImage::Dihedral { sigma1, sigma2 } => sigma1.is_zero() && sigma2.is_zero(),
            WedderburnImage::Quaternion { sigma1, sigma2 } => sigma1.is_zero() && sigma2.is_zero(),
        }
    }
    fn inverse(&self) -> Option<Self> {
        Some(match self {
            WedderburnImage::Commutative(a) => WedderburnImage::Commutative(a.inverse()?),
            WedderburnImage::Dihedral { sigma1, sigma2 } => WedderburnImage::Dihedral {
                sigma1: sigma1.inverse()?,
                sigma2: sigma2.inverse()?,
            },
            WedderburnImage::Quaternion { sigma1, sigma2 } => WedderburnImage::Quaternion {
                sigma1: sigma1.inverse()?,
                sigma2: sigma2.inverse()?,
            },
        })
    }
}

impl<S: Ring> WedderburnImage<S> {
    fn map2(
        &self,
        o: &Self,
        f: impl Fn(&GroupRingElem<S>, &GroupRingElem<S>) -> GroupRingElem<S>,
        g: impl Fn(&DihedralElem<S>, &DihedralElem<S>) -> DihedralElem<S>,
        h: impl Fn(&Quaternion<S>, &Quaternion<S>) -> Quaternion<S>,
    ) -> Self {
        use WedderburnImage::*;
        match (self, o) {
            (Commutative(a), Commutative(b)) => Commutative(f(a, b)),
            (Dihedral { sigma1: a1, sigma2: a2 }, Dihedral { sigma1: b1, sigma2: b2 }) => {
                Dihedral { sigma1: f(a1, b1), sigma2: g(a2, b2) }
            }
            (Quaternion { sigma1: a1, sigma2: a2 }, Quaternion { sigma1: b1, sigma2: b2 }) => {
                Quaternion { sigma1: f(a1, b1), sigma2: h(a2, b2) }
            }
            _ => panic!("Wedderburn images of different shapes"),
        }
    }
}

/// Fiber-product congruences cutting out the integral group ring inside the
/// product of its Wedderburn components.
pub fn is_integral_member<S: Scalar>(w: &WedderburnImage<S>) -> bool {
    match w {
        WedderburnImage::Commutative(_) => true,
        WedderburnImage::Dihedral { sigma1, sigma2 } => {
            let p = sigma2.prime();
            let res = |c: &Cyclo<S>| -> Option<u64> {
                let mut s = 0u64;
                for x in c.coords() {
                    s = (s + x.residue_mod(p)?) % p;
                }
                Some(s)
            };
            let (Some(a), Some(b)) = (sigma1.coeff(0).residue_mod(p), sigma1.coeff(1).residue_mod(p))
            else {
                return false;
            };
            let (Some(c), Some(d)) = (res(&sigma2.c), res(&sigma2.d)) else {
                return false;
            };
            a == c && b == d
        }
        WedderburnImage::Quaternion { sigma1, sigma2 } => (0..4).all(|t| {
            match (sigma1.coeff(t).residue_mod(2), sigma2.b[t].residue_mod(2)) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            }
        }),
    }
}

/// Recovers the element of Z_p[D_2p] with the given Wedderburn image.
///
/// Loses one digit of precision (the fiber product is glued modulo p).
pub fn dihedral_preimage(
    sigma1: &GroupRingElem<PAdic>,
    sigma2: &DihedralElem<PAdic>,
) -> Result<GroupRingElem<PAdic>> {
    let p = sigma2.prime();
    let group = FiniteGroup::dihedral(p)?;
    let lift = |total: &PAdic, c: &Cyclo<PAdic>| -> Result<Vec<PAdic>> {
        let coords = c.coords();
        let s = coords.iter().fold(total.zero_like(), |acc, x| acc.add(x));
        let t = total.sub(&s).div_p_power(1).map_err(|_| Error::NotInOrder)?;
        let prec = t.precision();
        let mut out: Vec<PAdic> = coords.iter().map(|x| x.with_precision(prec).add(&t)).collect();
        out.push(t);
        Ok(out)
    };
    let a = lift(sigma1.coeff(0), &sigma2.c)?;
    // d = Σ b_k ζ^{-k}, so α(d) carries the b_k in the power basis.
    let b = lift(sigma1.coeff(1), &sigma2.d.alpha())?;
    let mut coeffs = a;
    coeffs.extend(b);
    Ok(GroupRingElem::new(group, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::group_ring::padic_group_elem;
    use crate::ring::rat;
    use num_rational::BigRational;

    #[test]
    fn h8_projection_of_worked_entry() {
        let g = FiniteGroup::quaternion8();
        let a = GroupRingElem::from_words(&g, &[("1", rat(9)), ("x", rat(1)), ("y", rat(2))]).unwrap();
        let WedderburnImage::Quaternion { sigma1, sigma2 } = wedderburn_project(&a).unwrap() else {
            panic!("wrong shape");
        };
        assert_eq!(sigma1.coeffs(), &[rat(9), rat(1), rat(2), rat(0)]);
        assert_eq!(sigma2, Quaternion::<BigRational>::new(rat(9), rat(1), rat(2), rat(0)));
    }

    #[test]
    fn dihedral_projection_of_y() {
        let g = FiniteGroup::dihedral(5).unwrap();
        let t = PAdic::zero(5, 6);
        let y = GroupRingElem::basis(&g, g.generator("y").unwrap(), &t);
        let WedderburnImage::Dihedral { sigma1, sigma2 } = wedderburn_project(&y).unwrap() else {
            panic!("wrong shape");
        };
        assert!(sigma1.is_one());
        assert_eq!(sigma2, DihedralElem::from_cyclo(Cyclo::zeta(5, &t)));
        let x = GroupRingElem::basis(&g, g.generator("x").unwrap(), &t);
        let WedderburnImage::Dihedral { sigma2, .. } = wedderburn_project(&x).unwrap() else {
            panic!("wrong shape");
        };
        assert_eq!(sigma2, DihedralElem::tau(5, &t));
    }

    #[test]
    fn projection_is_multiplicative() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let a = padic_group_elem(&g, 3, 6, &[1, 4, -2, 0, 7, 3]);
        let b = padic_group_elem(&g, 3, 6, &[5, 0, 1, 2, -1, 1]);
        let pa = wedderburn_project(&a).unwrap();
        let pb = wedderburn_project(&b).unwrap();
        assert_eq!(wedderburn_project(&a.mul(&b)).unwrap(), pa.mul(&pb));
        assert!(is_integral_member(&pa));
    }

    #[test]
    fn preimage_round_trip() {
        let g = FiniteGroup::dihedral(5).unwrap();
        let a = padic_group_elem(&g, 5, 6, &[1, 4, -2, 0, 7, 3, 3, 9, 0, 1]);
        let WedderburnImage::Dihedral { sigma1, sigma2 } = wedderburn_project(&a).unwrap() else {
            panic!("wrong shape");
        };
        assert_eq!(dihedral_preimage(&sigma1, &sigma2).unwrap(), a);
    }

    #[test]
    fn fiber_product_rejects_mismatched_pairs() {
        let k4 = FiniteGroup::klein4();
        let w = WedderburnImage::Quaternion {
            sigma1: GroupRingElem::one(&k4, &rat(0)),
            sigma2: Quaternion::scalar(rat(0)),
        };
        assert!(!is_integral_member(&w));
    }
}
