//! Truncated power series Z/p^N[[T]]/(T^M), a working model of Λ = Z_p[[T]].

use super::group::Group;
use super::group_ring::GroupRingElem;
use crate::error::{Error, Result};
use crate::padic::PAdic;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct IwasawaSeries {
    coeffs: Vec<PAdic>,
}

/// Elements of Λ[G].
pub type LambdaGElem = GroupRingElem<IwasawaSeries>;

impl IwasawaSeries {
    /// Pads or truncates `coeffs` to length `m`.
    pub fn new(p: u64, prec: u32, m: usize, coeffs: &[PAdic]) -> Self {
        assert!(m >= 1, "series precision must be positive");
        let mut c: Vec<PAdic> = coeffs.iter().take(m).copied().collect();
        c.resize(m, PAdic::zero(p, prec));
        IwasawaSeries { coeffs: c }
    }

    pub fn from_ints(p: u64, prec: u32, m: usize, coeffs: &[i64]) -> Self {
        let c: Vec<PAdic> = coeffs.iter().map(|&v| PAdic::new(p, prec, v)).collect();
        IwasawaSeries::new(p, prec, m, &c)
    }

    pub fn constant(s: PAdic, m: usize) -> Self {
        IwasawaSeries::new(s.prime(), s.precision(), m, &[s])
    }

    /// The variable T.
    pub fn t(p: u64, prec: u32, m: usize) -> Self {
        IwasawaSeries::from_ints(p, prec, m, &[0, 1])
    }

    pub fn coeffs(&self) -> &[PAdic] {
        &self.coeffs
    }

    pub fn series_precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn prime(&self) -> u64 {
        self.coeffs[0].prime()
    }

    pub fn padic_precision(&self) -> u32 {
        self.coeffs.iter().map(|c| c.precision()).min().unwrap()
    }

    /// Value at T = 0.
    pub fn eval_zero(&self) -> PAdic {
        self.coeffs[0]
    }

    pub fn map_coeffs(&self, f: impl FnMut(&PAdic) -> PAdic) -> Self {
        IwasawaSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn with_padic_precision(&self, prec: u32) -> Self {
        self.map_coeffs(|c| c.with_precision(prec))
    }

    /// Index of the first coefficient that is a unit, if any below T^M.
    pub fn weierstrass_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.is_unit())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() || self.prime() != other.prime() {
            return Err(Error::ContextMismatch(format!(
                "series over (p = {}, M = {}) and (p = {}, M = {})",
                self.prime(),
                self.coeffs.len(),
                other.prime(),
                other.coeffs.len()
            )));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.coeffs.len();
        let mut out = vec![self.coeffs[0].zero_like(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(m - i).enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Ok(IwasawaSeries { coeffs: out })
    }

    pub fn display(&self) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}*T"),
                _ => format!("{c}*T^{k}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl Ring for IwasawaSeries {
    fn zero_like(&self) -> Self {
        self.map_coeffs(|c| c.zero_like())
    }
    fn one_like(&self) -> Self {
        let mut out = self.zero_like();
        out.coeffs[0] = self.coeffs[0].one_like();
        out
    }
    fn from_int_like(&self, n: i64) -> Self {
        let mut out = self.zero_like();
        out.coeffs[0] = self.coeffs[0].from_int_like(n);
        out
    }
    fn add(&self, o: &Self) -> Self {
        self.check(o).expect("series context mismatch");
        IwasawaSeries { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect() }
    }
    fn sub(&self, o: &Self) -> Self {
        self.check(o).expect("series context mismatch");
        IwasawaSeries { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }
    fn mul(&self, o: &Self) -> Self {
        self.checked_mul(o).expect("series context mismatch")
    }
    fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn inverse(&self) -> Option<Self> {
        let c0_inv = self.coeffs[0].inverse()?;
        let m = self.coeffs.len();
        let mut out = vec![self.coeffs[0].zero_like(); m];
        out[0] = c0_inv;
        for k in 1..m {
            let mut acc = self.coeffs[0].zero_like();
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out[k] = acc.mul(&c0_inv).neg();
        }
        Some(IwasawaSeries { coeffs: out })
    }
}

/// Z_p[G] ⊂ Λ[G] via constant series.
pub fn lambda_embed(a: &GroupRingElem<PAdic>, m: usize) -> LambdaGElem {
    a.map_coeffs(|c| IwasawaSeries::constant(*c, m))
}

/// The element γ − 1 ↦ T of Λ[G], i.e. T times the identity.
pub fn lambda_t(group: &Group, p: u64, prec: u32, m: usize) -> LambdaGElem {
    GroupRingElem::scalar(group, &IwasawaSeries::t(p, prec, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::group::FiniteGroup;

    #[test]
    fn truncated_product() {
        let f = IwasawaSeries::from_ints(3, 4, 3, &[1, 1]);
        let g = IwasawaSeries::from_ints(3, 4, 3, &[1, -1]);
        assert_eq!(f.mul(&g), IwasawaSeries::from_ints(3, 4, 3, &[1, 0, -1]));
        let t = IwasawaSeries::t(3, 4, 3);
        assert!(t.mul(&t).mul(&t).is_zero());
    }

    #[test]
    fn unit_series_inverse() {
        let f = IwasawaSeries::from_ints(5, 6, 8, &[2, 3, 0, 7]);
        assert!(f.mul(&f.inverse().unwrap()).is_one());
        assert!(IwasawaSeries::t(5, 6, 8).inverse().is_none());
    }

    #[test]
    fn constant_embedding() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let a = crate::group_algebra::group_ring::padic_group_elem(&g, 3, 4, &[1, 2, 5]);
        let b = crate::group_algebra::group_ring::padic_group_elem(&g, 3, 4, &[0, 1, 1]);
        let la = lambda_embed(&a, 5);
        assert_eq!(la.coeffs()[1].eval_zero(), a.coeffs()[1]);
        assert_eq!(lambda_embed(&a.mul(&b), 5), la.mul(&lambda_embed(&b, 5)));
        assert!(lambda_embed(&a.one_like(), 5).is_one());
    }
}
