use super::SkewSeries;
use crate::algebras::{Hurwitz, Quaternion};
use crate::dieudonne::quaternion_matrix_nrd;
use crate::error::{Error, Result};
use crate::group_algebra::IwasawaSeries;
use crate::linalg::{berkowitz_det, Matrix};
use crate::padic::{PAdic, Valuation};
use crate::ring::Ring;

/// Coefficient rings of O_D[[x]]: complete discrete valuation rings, possibly
/// non-commutative, with a fixed uniformizer π.
pub trait LocalCoeff: Ring {
    /// Index of the algebra over its center (deg Nrd = INDEX · deg).
    const INDEX: u32;
    /// e with p = unit · π^e.
    const RAMIFICATION: u32;

    fn prime(&self) -> u64;
    fn precision(&self) -> u32;
    fn with_precision(&self, prec: u32) -> Self;
    fn uniformizer_like(&self) -> Self;
    fn is_unit_coeff(&self) -> bool;
    fn pi_valuation(&self) -> Valuation;
    /// π^{-k}·self.
    fn div_pi_left(&self, k: u32) -> Result<Self>;
    /// self·π^{-k}.
    fn div_pi_right(&self, k: u32) -> Result<Self>;
    /// π^k·self·π^{-k}.
    fn conj_pi(&self, k: i64) -> Self;
    /// Reduced norm of a matrix over the series ring, as a series over Z_p.
    fn nrd_matrix(a: &Matrix<SkewSeries<Self>>) -> Result<IwasawaSeries>;
}

fn series_of(p: u64, prec: u32, m: usize, coeffs: Vec<PAdic>) -> IwasawaSeries {
    IwasawaSeries::new(p, prec, m, &coeffs)
}

impl LocalCoeff for PAdic {
    const INDEX: u32 = 1;
    const RAMIFICATION: u32 = 1;

    fn prime(&self) -> u64 {
        PAdic::prime(self)
    }
    fn precision(&self) -> u32 {
        PAdic::precision(self)
    }
    fn with_precision(&self, prec: u32) -> Self {
        PAdic::with_precision(self, prec)
    }
    fn uniformizer_like(&self) -> Self {
        self.with_value(PAdic::prime(self) as i64)
    }
    fn is_unit_coeff(&self) -> bool {
        self.is_unit()
    }
    fn pi_valuation(&self) -> Valuation {
        self.valuation()
    }
    fn div_pi_left(&self, k: u32) -> Result<Self> {
        self.div_p_power(k)
    }
    fn div_pi_right(&self, k: u32) -> Result<Self> {
        self.div_p_power(k)
    }
    fn conj_pi(&self, _k: i64) -> Self {
        *self
    }
    fn nrd_matrix(a: &Matrix<SkewSeries<Self>>) -> Result<IwasawaSeries> {
        let e = a.get(0, 0);
        let prec = a.entries().iter().map(|s| s.precision()).min().unwrap();
        let m = a.map(|s| series_of(e.coeff(0).prime(), prec, s.len(), s.coeffs().to_vec()));
        Ok(berkowitz_det(&m))
    }
}

fn minus_i(prec: u32) -> Hurwitz {
    Hurwitz::from_ints(prec, [0, -1, 0, 0])
}

fn halve(q: &Hurwitz) -> Result<Hurwitz> {
    let c = q.coords();
    let mut out = *c;
    for x in out.iter_mut() {
        *x = x.div_p_power(1).map_err(|_| Error::NotAUnit("not divisible by the uniformizer".into()))?;
    }
    Ok(Hurwitz::new(out))
}

impl LocalCoeff for Hurwitz {
    const INDEX: u32 = 2;
    const RAMIFICATION: u32 = 2;

    fn prime(&self) -> u64 {
        2
    }
    fn precision(&self) -> u32 {
        Hurwitz::precision(self)
    }
    fn with_precision(&self, prec: u32) -> Self {
        Hurwitz::with_precision(self, prec)
    }
    fn uniformizer_like(&self) -> Self {
        Hurwitz::uniformizer(Hurwitz::precision(self))
    }
    fn is_unit_coeff(&self) -> bool {
        self.is_unit()
    }
    fn pi_valuation(&self) -> Valuation {
        self.valuation()
    }
    // π² = 2i, so π^{-2} = −i/2.
    fn div_pi_left(&self, k: u32) -> Result<Self> {
        let mut q = self.clone();
        for _ in 0..k / 2 {
            q = halve(&minus_i(Hurwitz::precision(&q)).mul(&q))?;
        }
        if k % 2 == 1 {
            q = q.div_uniformizer_left()?;
        }
        Ok(q)
    }
    fn div_pi_right(&self, k: u32) -> Result<Self> {
        let mut q = self.clone();
        for _ in 0..k / 2 {
            q = halve(&q.mul(&minus_i(Hurwitz::precision(&q))))?;
        }
        if k % 2 == 1 {
            q = q.div_uniformizer_right()?;
        }
        Ok(q)
    }
    fn conj_pi(&self, k: i64) -> Self {
        self.conj_uniformizer(k)
    }
    /// Embeds 2·A into M_{2n} over the Gaussian series, then divides by 4ⁿ.
    fn nrd_matrix(a: &Matrix<SkewSeries<Self>>) -> Result<IwasawaSeries> {
        let n = a.rows() as u32;
        let prec = a.entries().iter().map(|s| s.precision()).min().unwrap();
        let m = a.get(0, 0).len();
        let doubled = a.map(|s| {
            let d: Vec<[PAdic; 4]> = s.coeffs().iter().map(|q| q.standard_doubled()).collect();
            let part = |t: usize| series_of(2, prec, m, d.iter().map(|c| c[t]).collect());
            Quaternion::new(part(0), part(1), part(2), part(3))
        });
        let det = quaternion_matrix_nrd(&doubled).map_err(|_| Error::NonIntegralNrd)?;
        let coeffs = det
            .coeffs()
            .iter()
            .map(|c| c.div_p_power(2 * n).map_err(|_| Error::NonIntegralNrd))
            .collect::<Result<Vec<_>>>()?;
        Ok(IwasawaSeries::new(2, prec.saturating_sub(2 * n).max(1), m, &coeffs))
    }
}
