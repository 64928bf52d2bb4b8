//! The twisted group algebra L⟨τ⟩ with τ a = α(a) τ and τ² = 1.

use super::cyclotomic::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::padic::PAdic;
use crate::ring::Ring;

/// `c + d·τ`.
#[derive(Clone, Debug, PartialEq)]
pub struct DihedralElem<S> {
    pub c: Cyclo<S>,
    pub d: Cyclo<S>,
}

impl<S: Ring> DihedralElem<S> {
    pub fn new(c: Cyclo<S>, d: Cyclo<S>) -> Self {
        assert_eq!(c.prime(), d.prime());
        DihedralElem { c, d }
    }

    pub fn from_cyclo(c: Cyclo<S>) -> Self {
        let d = c.zero_like();
        DihedralElem { c, d }
    }

    pub fn tau(p: u64, template: &S) -> Self {
        let zero = Cyclo::from_scalar(p, &template.zero_like());
        DihedralElem { c: zero.clone(), d: zero.one_like() }
    }

    pub fn prime(&self) -> u64 {
        self.c.prime()
    }

    /// c·α(c) − d·α(d), without the consistency check.
    pub fn nrd_unchecked(&self) -> Cyclo<S> {
        self.c.mul(&self.c.alpha()).sub(&self.d.mul(&self.d.alpha()))
    }

    /// Reduced norm, checked to lie in the real subring.
    pub fn nrd(&self) -> Result<Cyclo<S>> {
        let n = self.nrd_unchecked();
        if n.is_alpha_fixed() {
            Ok(n)
        } else {
            Err(Error::NotInRealSubfield)
        }
    }

    /// Image under ζ ↦ diag(ζ, ζ^{-1}), τ ↦ [[0, 1], [1, 0]].
    pub fn embed(&self) -> Matrix<Cyclo<S>> {
        Matrix::from_rows(vec![
            vec![self.c.clone(), self.d.clone()],
            vec![self.d.alpha(), self.c.alpha()],
        ])
    }
}

impl<S: Ring> Ring for DihedralElem<S> {
    fn zero_like(&self) -> Self {
        DihedralElem::from_cyclo(self.c.zero_like())
    }
    fn one_like(&self) -> Self {
        DihedralElem::from_cyclo(self.c.one_like())
    }
    fn from_int_like(&self, n: i64) -> Self {
        DihedralElem::from_cyclo(self.c.from_int_like(n))
    }
    fn add(&self, o: &Self) -> Self {
        DihedralElem { c: self.c.add(&o.c), d: self.d.add(&o.d) }
    }
    fn sub(&self, o: &Self) -> Self {
        DihedralElem { c: self.c.sub(&o.c), d: self.d.sub(&o.d) }
    }
    fn mul(&self, o: &Self) -> Self {
        DihedralElem {
            c: self.c.mul(&o.c).add(&self.d.mul(&o.d.alpha())),
            d: self.c.mul(&o.d).add(&self.d.mul(&o.c.alpha())),
        }
    }
    fn neg(&self) -> Self {
        DihedralElem { c: self.c.neg(), d: self.d.neg() }
    }
    fn is_zero(&self) -> bool {
        self.c.is_zero() && self.d.is_zero()
    }
    fn inverse(&self) -> Option<Self> {
        let n_inv = self.nrd_unchecked().inverse()?;
        Some(DihedralElem { c: self.c.alpha().mul(&n_inv), d: self.d.neg().mul(&n_inv) })
    }
}

impl DihedralElem<PAdic> {
    pub fn precision(&self) -> u32 {
        self.c.precision().min(self.d.precision())
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        DihedralElem { c: self.c.with_precision(prec), d: self.d.with_precision(prec) }
    }
}

/// Some c ≡ 1 mod (1 − ζ) with c·α(c) = t, for t a principal unit of the real
/// subring. The returned c is itself real.
pub fn nrd_principal_unit_preimage(t: &Cyclo<PAdic>) -> Result<Cyclo<PAdic>> {
    if !t.is_alpha_fixed() || t.residue() != 1 {
        return Err(Error::NotPrincipalUnit);
    }
    t.sqrt_principal()
}

/// A unit u of the order with Nrd(u) = v, for v a unit of the real subring.
pub fn nrd_unit_preimage_dihedral(v: &Cyclo<PAdic>) -> Result<DihedralElem<PAdic>> {
    let p = v.prime();
    let r = v.residue();
    if r == 0 {
        return Err(Error::NotAUnit("reduced norm target lies in the prime".into()));
    }
    if !v.is_alpha_fixed() {
        return Err(Error::NotInRealSubfield);
    }
    let (c0, d0) = (0..p)
        .flat_map(|d| (0..p).map(move |c| (c, d)))
        .find(|&(c, d)| (c * c + p * p - d * d % p) % p == r)
        .expect("every residue is a difference of squares");
    let template = v.coords()[0];
    let c0 = template.with_value(c0 as i64);
    let d0 = template.with_value(d0 as i64);
    let base = c0.mul(&c0).sub(&d0.mul(&d0));
    let base_inv = Cyclo::from_scalar(p, &base.try_inverse()?);
    let w = nrd_principal_unit_preimage(&v.mul(&base_inv))?;
    let u0 = DihedralElem::new(Cyclo::from_scalar(p, &c0), Cyclo::from_scalar(p, &d0));
    Ok(DihedralElem::from_cyclo(w).mul(&u0))
}
