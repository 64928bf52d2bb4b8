//! The cyclotomic integers Z_p[ζ] in the power basis 1, ζ, ..., ζ^{p-2}.

use crate::error::{Error, Result};
use crate::padic::{PAdic, Valuation};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct Cyclo<S> {
    p: u64,
    coords: Vec<S>,
}

impl<S: Ring> Cyclo<S> {
    pub fn from_coords(p: u64, coords: Vec<S>) -> Self {
        assert!(p >= 3 && p % 2 == 1, "cyclotomic ring needs an odd prime");
        assert_eq!(coords.len() as u64, p - 1, "expected p - 1 coordinates");
        Cyclo { p, coords }
    }

    pub fn from_scalar(p: u64, s: &S) -> Self {
        let mut coords = vec![s.zero_like(); (p - 1) as usize];
        coords[0] = s.clone();
        Cyclo::from_coords(p, coords)
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(p: u64, k: i64, template: &S) -> Self {
        let mut full = vec![template.zero_like(); p as usize];
        full[k.rem_euclid(p as i64) as usize] = template.one_like();
        Cyclo::reduce_full(p, full)
    }

    pub fn zeta(p: u64, template: &S) -> Self {
        Cyclo::zeta_pow(p, 1, template)
    }

    /// 1 − ζ, a uniformizer of Z_p[ζ].
    pub fn one_minus_zeta(p: u64, template: &S) -> Self {
        Cyclo::from_scalar(p, &template.one_like()).sub(&Cyclo::zeta(p, template))
    }

    /// 2 − ζ − ζ^{-1}, a uniformizer of the real subring.
    pub fn real_uniformizer(p: u64, template: &S) -> Self {
        let two = Cyclo::from_scalar(p, &template.from_int_like(2));
        two.sub(&Cyclo::zeta_pow(p, 1, template)).sub(&Cyclo::zeta_pow(p, -1, template))
    }

    /// Reduces a length-p coefficient vector using ζ^{p-1} = −(1 + ... + ζ^{p-2}).
    fn reduce_full(p: u64, full: Vec<S>) -> Self {
        let top = full[(p - 1) as usize].clone();
        let coords = full[..(p - 1) as usize].iter().map(|c| c.sub(&top)).collect();
        Cyclo { p, coords }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    /// The automorphism ζ ↦ ζ^a, a prime to p.
    pub fn galois(&self, a: u64) -> Self {
        let p = self.p;
        let mut full = vec![self.coords[0].zero_like(); p as usize];
        for (k, c) in self.coords.iter().enumerate() {
            let idx = ((k as u64 * a) % p) as usize;
            full[idx] = full[idx].add(c);
        }
        Cyclo::reduce_full(p, full)
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn alpha(&self) -> Self {
        self.galois(self.p - 1)
    }

    pub fn is_alpha_fixed(&self) -> bool {
        self.alpha() == *self
    }

    /// Norm down to the coefficient ring.
    pub fn norm(&self) -> S {
        let mut acc = self.clone();
        for a in 2..self.p {
            acc = acc.mul(&self.galois(a));
        }
        acc.coords[0].clone()
    }

    /// Constant coefficient if the element lies in the coefficient ring.
    pub fn as_scalar(&self) -> Option<S> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn map_coords<T: Ring>(&self, f: impl FnMut(&S) -> T) -> Cyclo<T> {
        Cyclo { p: self.p, coords: self.coords.iter().map(f).collect() }
    }
}

impl<S: Ring> Ring for Cyclo<S> {
    fn zero_like(&self) -> Self {
        Cyclo { p: self.p, coords: self.coords.iter().map(|c| c.zero_like()).collect() }
    }
    fn one_like(&self) -> Self {
        Cyclo::from_scalar(self.p, &self.coords[0].one_like())
    }
    fn from_int_like(&self, n: i64) -> Self {
        Cyclo::from_scalar(self.p, &self.coords[0].from_int_like(n))
    }
    fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "cyclotomic prime mismatch");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect();
        Cyclo { p: self.p, coords }
    }
    fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "cyclotomic prime mismatch");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a.sub(b)).collect();
        Cyclo { p: self.p, coords }
    }
    fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p, "cyclotomic prime mismatch");
        let p = self.p as usize;
        let mut full = vec![self.coords[0].zero_like(); p];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                let k = (i + j) % p;
                full[k] = full[k].add(&a.mul(b));
            }
        }
        Cyclo::reduce_full(self.p, full)
    }
    fn neg(&self) -> Self {
        Cyclo { p: self.p, coords: self.coords.iter().map(|c| c.neg()).collect() }
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
    fn inverse(&self) -> Option<Self> {
        let mut others = self.one_like();
        for a in 2..self.p {
            others = others.mul(&self.galois(a));
        }
        let n = self.mul(&others).coords[0].clone();
        let n_inv = n.inverse()?;
        Some(others.map_coords(|c| c.mul(&n_inv)))
    }
}

impl Cyclo<PAdic> {
    pub fn precision(&self) -> u32 {
        self.coords.iter().map(|c| c.precision()).min().unwrap()
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        self.map_coords(|c| c.with_precision(prec))
    }

    /// Image in the residue field O_L/(1 − ζ) = F_p.
    pub fn residue(&self) -> u64 {
        let s = self.coords.iter().fold(self.coords[0].zero_like(), |acc, c| acc.add(c));
        s.residue() % self.p
    }

    pub fn is_unit(&self) -> bool {
        self.residue() != 0
    }

    pub fn try_inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit("cyclotomic integer in (1 - ζ)".into()));
        }
        Ok(self.inverse().expect("unit norm"))
    }

    /// Exact division by 1 − ζ; loses one digit of coordinate precision.
    pub fn div_one_minus_zeta(&self) -> Result<Self> {
        let p = self.p;
        let total = self.coords.iter().fold(self.coords[0].zero_like(), |acc, c| acc.add(c));
        if total.residue() % p != 0 {
            return Err(Error::NotAUnit("not divisible by 1 - ζ".into()));
        }
        let s = total.div_p_power(1)?;
        let prec = s.precision();
        let mut out = Vec::with_capacity((p - 1) as usize);
        let mut partial = s.zero_like();
        for (k, c) in self.coords.iter().enumerate() {
            partial = partial.add(&c.with_precision(prec));
            out.push(partial.sub(&s.scale_int(k as i64 + 1)));
        }
        Ok(Cyclo { p, coords: out })
    }

    /// Valuation with respect to the prime (1 − ζ).
    pub fn valuation(&self) -> Valuation {
        let k = self.coords.iter().map(|c| c.valuation()).min().unwrap();
        let Valuation::Finite(k) = k else {
            return Valuation::TopOfPrecision;
        };
        let mut rest = self.map_coords(|c| {
            if k == 0 {
                *c
            } else {
                c.div_p_power(k).unwrap_or_else(|_| c.zero_like())
            }
        });
        let mut extra = 0;
        while !rest.is_unit() {
            match rest.div_one_minus_zeta() {
                Ok(next) => {
                    rest = next;
                    extra += 1;
                }
                Err(_) => return Valuation::TopOfPrecision,
            }
        }
        Valuation::Finite(k * (self.p as u32 - 1) + extra)
    }

    /// Exact division by (1 − ζ)^n.
    pub fn div_one_minus_zeta_pow(&self, n: u32) -> Result<Self> {
        let mut out = self.clone();
        for _ in 0..n {
            out = out.div_one_minus_zeta()?;
        }
        Ok(out)
    }

    /// Square root of a principal unit of the real subring, itself fixed by
    /// complex conjugation.
    pub fn sqrt_principal(&self) -> Result<Self> {
        if self.residue() != 1 {
            return Err(Error::NotPrincipalUnit);
        }
        let p = self.p;
        let prec = self.precision();
        let half = PAdic::new(p, prec, 2).try_inverse()?;
        let mut c = self.one_like();
        // Each step doubles the (1 − ζ)-adic accuracy.
        let steps = 2 + (64 - ((prec as u64) * (p - 1)).leading_zeros());
        for _ in 0..steps {
            let q = self.mul(&c.try_inverse()?);
            c = c.add(&q).map_coords(|x| x.mul(&half));
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(p: u64, n: u32, v: i64) -> PAdic {
        PAdic::new(p, n, v)
    }

    #[test]
    fn conjugation_of_zeta_for_p3() {
        let t = e(3, 3, 0);
        let z = Cyclo::zeta(3, &t);
        let expected = Cyclo::from_coords(3, vec![e(3, 3, -1), e(3, 3, -1)]);
        assert_eq!(z.alpha(), expected);
        let five = Cyclo::from_scalar(3, &e(3, 3, 5));
        assert_eq!(five.alpha(), five);
    }

    #[test]
    fn zeta_has_order_p() {
        let t = e(7, 4, 0);
        let z = Cyclo::zeta(7, &t);
        assert!(z.pow(7).is_one());
        assert!(!z.pow(3).is_one());
        assert!(z.mul(&z.alpha()).is_one());
    }

    #[test]
    fn uniformizer_valuations() {
        for p in [3u64, 5, 7] {
            let t = e(p, 6, 0);
            let pi = Cyclo::one_minus_zeta(p, &t);
            assert_eq!(pi.valuation(), Valuation::Finite(1));
            assert_eq!(Cyclo::real_uniformizer(p, &t).valuation(), Valuation::Finite(2));
            let pp = Cyclo::from_scalar(p, &e(p, 6, p as i64));
            assert_eq!(pp.valuation(), Valuation::Finite(p as u32 - 1));
            assert_eq!(pi.mul(&pi.alpha()), Cyclo::real_uniformizer(p, &t));
        }
    }

    #[test]
    fn division_by_uniformizer() {
        let t = e(5, 6, 0);
        let pi = Cyclo::one_minus_zeta(5, &t);
        let x = Cyclo::from_coords(5, vec![e(5, 6, 3), e(5, 6, 1), e(5, 6, 4), e(5, 6, 2)]);
        let y = x.mul(&pi).div_one_minus_zeta().unwrap();
        assert_eq!(y, x);
        assert_eq!(y.precision(), 5);
    }

    #[test]
    fn unit_inverse() {
        let x = Cyclo::from_coords(5, vec![e(5, 6, 2), e(5, 6, 7), e(5, 6, 0), e(5, 6, 3)]);
        assert!(x.is_unit());
        assert!(x.mul(&x.try_inverse().unwrap()).is_one());
    }

    #[test]
    fn principal_square_root() {
        let t = e(3, 4, 0);
        let v = Cyclo::from_scalar(3, &t.one_like()).add(&Cyclo::real_uniformizer(3, &t));
        let c = v.sqrt_principal().unwrap();
        assert!(c.is_alpha_fixed());
        assert_eq!(c.mul(&c.alpha()), v);
    }
}
