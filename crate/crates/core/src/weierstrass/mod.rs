//! Power series O_D[[x]] over a complete local coefficient ring with a
//! central variable, and non-commutative Weierstrass division and
//! preparation.

mod coeff;
mod localized;
mod pipeline;

pub use coeff::LocalCoeff;
pub use localized::{diagonal_reduce, series_det_class, DiagonalReduction, LocalizedSeries, SeriesClass};
pub use pipeline::{integral_det_representative, nrd_integral, IntegralDetRepresentative};

use crate::error::{Error, Result};
use crate::padic::Valuation;
use crate::ring::Ring;

/// A truncated series Σ aₙ xⁿ, n < M.
///
/// `trusted` counts the leading coefficients that do not depend on how the
/// inputs of a division were extended past x^M.
#[derive(Clone, Debug)]
pub struct SkewSeries<C> {
    coeffs: Vec<C>,
    trusted: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducedOrder {
    Finite(usize),
    Infinite,
}

impl ReducedOrder {
    pub fn finite(self) -> Option<usize> {
        match self {
            ReducedOrder::Finite(n) => Some(n),
            ReducedOrder::Infinite => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// f = π^μ · U · J.
    Left,
    /// f = J · U · π^μ.
    Right,
}

/// A Weierstrass factorization; `monic` lists the coefficients of J from
/// x⁰ up to the leading 1.
#[derive(Clone, Debug)]
pub struct WeierstrassFactorization<C> {
    pub mu: u32,
    pub unit: SkewSeries<C>,
    pub monic: Vec<C>,
    pub side: Side,
}

impl<C: Ring> PartialEq for SkewSeries<C> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.len() == other.coeffs.len() && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl<C: LocalCoeff> SkewSeries<C> {
    /// Pads with zeros or truncates to length `m`.
    pub fn new(m: usize, coeffs: Vec<C>, template: &C) -> Self {
        assert!(m >= 1, "series precision must be positive");
        let mut c = coeffs;
        c.truncate(m);
        c.resize(m, template.zero_like());
        SkewSeries { coeffs: c, trusted: m }
    }

    pub fn constant(m: usize, c: &C) -> Self {
        SkewSeries::new(m, vec![c.clone()], c)
    }

    pub fn x(m: usize, template: &C) -> Self {
        SkewSeries::new(m, vec![template.zero_like(), template.one_like()], template)
    }

    pub fn from_poly(m: usize, poly: &[C], template: &C) -> Self {
        SkewSeries::new(m, poly.to_vec(), template)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn trusted(&self) -> usize {
        self.trusted
    }

    pub fn precision(&self) -> u32 {
        self.coeffs.iter().map(|c| c.precision()).min().unwrap()
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        self.map(|c| c.with_precision(prec))
    }

    pub fn map(&self, f: impl FnMut(&C) -> C) -> Self {
        SkewSeries { coeffs: self.coeffs.iter().map(f).collect(), trusted: self.trusted }
    }

    pub fn try_map(&self, f: impl FnMut(&C) -> Result<C>) -> Result<Self> {
        Ok(SkewSeries { coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?, trusted: self.trusted })
    }

    fn template(&self) -> &C {
        &self.coeffs[0]
    }

    /// Least n with aₙ a unit.
    pub fn reduced_order(&self) -> ReducedOrder {
        match self.coeffs.iter().position(|c| c.is_unit_coeff()) {
            Some(n) => ReducedOrder::Finite(n),
            None => ReducedOrder::Infinite,
        }
    }

    /// The π-adic content min vπ(aₙ).
    pub fn pi_content(&self) -> Valuation {
        self.coeffs.iter().map(|c| c.pi_valuation()).min().unwrap()
    }

    /// π^k · f.
    pub fn mul_pi_left(&self, k: u32) -> Self {
        let pi = self.template().uniformizer_like().pow(k as u64);
        self.map(|c| pi.mul(c))
    }

    /// f · π^k.
    pub fn mul_pi_right(&self, k: u32) -> Self {
        let pi = self.template().uniformizer_like().pow(k as u64);
        self.map(|c| c.mul(&pi))
    }

    pub fn div_pi_left(&self, k: u32) -> Result<Self> {
        self.try_map(|c| c.div_pi_left(k))
    }

    pub fn div_pi_right(&self, k: u32) -> Result<Self> {
        self.try_map(|c| c.div_pi_right(k))
    }

    /// π^k f π^{-k}.
    pub fn conj_pi(&self, k: i64) -> Self {
        self.map(|c| c.conj_pi(k))
    }

    /// Multiplication by x^k (dropping what falls past x^M).
    pub fn shift_up(&self, k: usize) -> Self {
        let m = self.len();
        let mut c = vec![self.template().zero_like(); k.min(m)];
        c.extend(self.coeffs.iter().take(m.saturating_sub(k)).cloned());
        SkewSeries { coeffs: c, trusted: self.trusted }
    }

    fn with_len(&self, m: usize) -> Self {
        SkewSeries::new(m, self.coeffs.clone(), self.template())
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.len(), other.len(), "series of different lengths");
    }

    /// Degree-d Weierstrass division on either side, computed on extensions
    /// by zero to length M + d so that the identity holds exactly mod x^M.
    fn divide(f1: &Self, f2: &Self, side: Side) -> Result<(Self, Vec<C>)> {
        f1.check(f2);
        let m = f1.len();
        let d = f2.reduced_order().finite().ok_or(Error::InfiniteOrder)?;
        if 2 * d > m {
            return Err(Error::PrecisionTooLow(format!(
                "divisor of reduced order {d} leaves fewer than half of {m} coefficients"
            )));
        }
        // Truncating the quotient at length `work` perturbs its coefficients
        // below x^M only after (work - M)/d contractions by π.
        let prec = f1.precision().min(f2.precision());
        let work = m + d * (prec as usize * C::RAMIFICATION as usize + 1);
        let ext = work + d;
        let g1 = f1.with_len(ext);
        let g2 = f2.with_len(ext);
        let tail = |s: &Self| SkewSeries::new(work, s.coeffs[d..].to_vec(), s.template());
        let low: Vec<C> = g2.coeffs[..d].to_vec();
        let u_inv = tail(&g2).inverse().expect("coefficient at the reduced order is a unit");
        let t1 = tail(&g1);
        let max_iter = 4 * (prec as usize + 2) * C::RAMIFICATION as usize + work;
        let mut q = SkewSeries::new(work, Vec::new(), f1.template());
        let mut converged = false;
        for _ in 0..max_iter {
            // τ(q·P) or τ(P·q): the part of the product at x^d and above.
            let mut tp = vec![f1.template().zero_like(); work];
            for (k, qk) in q.coeffs.iter().enumerate() {
                for (j, pj) in low.iter().enumerate() {
                    if k + j >= d && k + j - d < work {
                        let prod = match side {
                            Side::Left => qk.mul(pj),
                            Side::Right => pj.mul(qk),
                        };
                        tp[k + j - d] = tp[k + j - d].add(&prod);
                    }
                }
            }
            let rhs = t1.sub(&SkewSeries { coeffs: tp, trusted: work });
            let next = match side {
                Side::Left => rhs.mul(&u_inv),
                Side::Right => u_inv.mul(&rhs),
            };
            if next == q {
                converged = true;
                break;
            }
            q = next;
        }
        if !converged {
            return Err(Error::PrecisionTooLow("Weierstrass division did not stabilize".into()));
        }
        let qe = q.with_len(ext);
        let prod = match side {
            Side::Left => qe.mul(&g2),
            Side::Right => g2.mul(&qe),
        };
        let r: Vec<C> = (0..d).map(|n| g1.coeffs[n].sub(&prod.coeffs[n])).collect();
        let mut q = q.with_len(m);
        q.trusted = f1.trusted.min(f2.trusted).saturating_sub(d);
        Ok((q, r))
    }

    /// f1 = a·f2 + r with deg r < reduced_order(f2).
    pub fn divide_left(f1: &Self, f2: &Self) -> Result<(Self, Vec<C>)> {
        SkewSeries::divide(f1, f2, Side::Left)
    }

    /// f1 = f2·b + s with deg s < reduced_order(f2).
    pub fn divide_right(f1: &Self, f2: &Self) -> Result<(Self, Vec<C>)> {
        SkewSeries::divide(f1, f2, Side::Right)
    }
}

/// f = π^μ · U · J with U a unit series and J monic of degree
/// reduced_order(π^{-μ} f).
pub fn weierstrass_prepare<C: LocalCoeff>(f: &SkewSeries<C>) -> Result<WeierstrassFactorization<C>> {
    prepare(f, Side::Left)
}

/// f = J · U · π^μ.
pub fn weierstrass_prepare_right<C: LocalCoeff>(f: &SkewSeries<C>) -> Result<WeierstrassFactorization<C>> {
    prepare(f, Side::Right)
}

fn prepare<C: LocalCoeff>(f: &SkewSeries<C>, side: Side) -> Result<WeierstrassFactorization<C>> {
    let Valuation::Finite(mu) = f.pi_content() else {
        return Err(Error::ZeroAtPrecision);
    };
    let g = match side {
        Side::Left => f.div_pi_left(mu)?,
        Side::Right => f.div_pi_right(mu)?,
    };
    let d = g.reduced_order().finite().ok_or(Error::InfiniteOrder)?;
    let t = g.template().clone();
    let mut xd = vec![t.zero_like(); d];
    xd.push(t.one_like());
    let xd_series = SkewSeries::from_poly(g.len(), &xd, &t);
    let (q, r) = match side {
        Side::Left => SkewSeries::divide_left(&xd_series, &g)?,
        Side::Right => SkewSeries::divide_right(&xd_series, &g)?,
    };
    let unit = q.inverse().ok_or_else(|| Error::NotAUnit("Weierstrass quotient".into()))?;
    let mut monic: Vec<C> = r.iter().map(|c| c.neg()).collect();
    monic.push(t.one_like());
    Ok(WeierstrassFactorization { mu, unit, monic, side })
}

impl<C: LocalCoeff> WeierstrassFactorization<C> {
    pub fn degree(&self) -> usize {
        self.monic.len() - 1
    }

    pub fn monic_series(&self) -> SkewSeries<C> {
        SkewSeries::from_poly(self.unit.len(), &self.monic, &self.monic[0])
    }

    /// Multiplies the factors back together.
    pub fn reconstruct(&self) -> SkewSeries<C> {
        match self.side {
            Side::Left => self.unit.mul(&self.monic_series()).mul_pi_left(self.mu),
            Side::Right => self.monic_series().mul(&self.unit).mul_pi_right(self.mu),
        }
    }

    /// Lower coefficients of J lie in the maximal ideal.
    pub fn is_distinguished(&self) -> bool {
        self.monic.last().is_some_and(|c| c.is_one()) && self.monic[..self.degree()].iter().all(|c| !c.is_unit_coeff())
    }
}

impl<C: LocalCoeff> Ring for SkewSeries<C> {
    fn zero_like(&self) -> Self {
        self.map(|c| c.zero_like())
    }
    fn one_like(&self) -> Self {
        SkewSeries::constant(self.len(), &self.template().one_like())
    }
    fn from_int_like(&self, n: i64) -> Self {
        SkewSeries::constant(self.len(), &self.template().from_int_like(n))
    }
    fn add(&self, o: &Self) -> Self {
        self.check(o);
        SkewSeries {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect(),
            trusted: self.trusted.min(o.trusted),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        self.check(o);
        SkewSeries {
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect(),
            trusted: self.trusted.min(o.trusted),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let m = self.len();
        let mut out = vec![self.template().zero_like(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(m - i).enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        SkewSeries { coeffs: out, trusted: self.trusted.min(o.trusted) }
    }
    fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn inverse(&self) -> Option<Self> {
        let c0_inv = self.coeffs[0].inverse()?;
        let m = self.len();
        let mut out: Vec<C> = Vec::with_capacity(m);
        out.push(c0_inv.clone());
        for n in 1..m {
            let mut acc = self.template().zero_like();
            for j in 1..=n {
                acc = acc.add(&self.coeffs[j].mul(&out[n - j]));
            }
            out.push(c0_inv.mul(&acc).neg());
        }
        Some(SkewSeries { coeffs: out, trusted: self.trusted })
    }
}
