//! O_D[[x]][1/p] with elements stored as π^r·β, and diagonal reduction of
//! matrices over it.

use super::{LocalCoeff, SkewSeries};
use crate::dieudonne::TraceOp;
use crate::error::{Error, Result};
use crate::group_algebra::IwasawaSeries;
use crate::linalg::Matrix;
use crate::padic::Valuation;
use crate::ring::Ring;

/// π^{pi_power}·body.
#[derive(Clone, Debug)]
pub struct LocalizedSeries<C> {
    pub body: SkewSeries<C>,
    pub pi_power: i64,
}

impl<C: LocalCoeff> LocalizedSeries<C> {
    pub fn new(body: SkewSeries<C>, pi_power: i64) -> Self {
        LocalizedSeries { body, pi_power }
    }

    pub fn from_series(body: SkewSeries<C>) -> Self {
        LocalizedSeries { body, pi_power: 0 }
    }

    /// Moves the π-content of the body into the exponent.
    pub fn normalize(&self) -> Result<Self> {
        let Valuation::Finite(m) = self.body.pi_content() else {
            return Err(Error::ZeroAtPrecision);
        };
        if m == 0 {
            return Ok(self.clone());
        }
        Ok(LocalizedSeries { body: self.body.div_pi_left(m)?, pi_power: self.pi_power + m as i64 })
    }

    /// (reduced order of the π-free part, π-exponent), or None for zero.
    pub fn pivot_key(&self) -> Option<(usize, i64)> {
        let n = self.normalize().ok()?;
        Some((n.body.reduced_order().finite()?, n.pi_power))
    }

    /// The element as a series, when the exponent is non-negative.
    pub fn to_series(&self) -> Result<SkewSeries<C>> {
        if self.pi_power < 0 {
            return Err(Error::NegativeExponent(self.pi_power));
        }
        Ok(self.body.mul_pi_left(self.pi_power as u32))
    }

    pub fn precision(&self) -> u32 {
        self.body.precision()
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        LocalizedSeries { body: self.body.with_precision(prec), pi_power: self.pi_power }
    }
}

impl<C: LocalCoeff> PartialEq for LocalizedSeries<C> {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl<C: LocalCoeff> Ring for LocalizedSeries<C> {
    fn zero_like(&self) -> Self {
        LocalizedSeries::from_series(self.body.zero_like())
    }
    fn one_like(&self) -> Self {
        LocalizedSeries::from_series(self.body.one_like())
    }
    fn from_int_like(&self, n: i64) -> Self {
        LocalizedSeries::from_series(self.body.from_int_like(n))
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let t = self.pi_power.min(o.pi_power);
        let a = self.body.mul_pi_left((self.pi_power - t) as u32);
        let b = o.body.mul_pi_left((o.pi_power - t) as u32);
        LocalizedSeries { body: a.add(&b), pi_power: t }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    // (π^r β)(π^s γ) = π^{r+s} (π^{-s} β π^s) γ.
    fn mul(&self, o: &Self) -> Self {
        LocalizedSeries {
            body: self.body.conj_pi(-o.pi_power).mul(&o.body),
            pi_power: self.pi_power + o.pi_power,
        }
    }
    fn neg(&self) -> Self {
        LocalizedSeries { body: self.body.neg(), pi_power: self.pi_power }
    }
    fn is_zero(&self) -> bool {
        self.body.is_zero()
    }
    fn inverse(&self) -> Option<Self> {
        let n = self.normalize().ok()?;
        let inv = n.body.inverse()?;
        // (π^a β)^{-1} = β^{-1} π^{-a} = π^{-a} (π^a β^{-1} π^{-a}).
        Some(LocalizedSeries { body: inv.conj_pi(n.pi_power), pi_power: -n.pi_power })
    }
}

/// Nrd of a matrix over the localized ring, as p^{p_exp}·nrd with nrd of
/// p-content zero (Nrd π = p up to a unit).
#[derive(Clone, Debug)]
pub struct SeriesClass {
    pub p_exp: i64,
    pub nrd: IwasawaSeries,
}

impl SeriesClass {
    pub fn new(p_exp: i64, nrd: IwasawaSeries) -> Result<Self> {
        let Valuation::Finite(c) = nrd.coeffs().iter().map(|x| x.valuation()).min().unwrap() else {
            return Err(Error::SingularAtPrecision("reduced norm vanishes at working precision".into()));
        };
        let nrd = nrd.map_coeffs(|x| x.div_p_power(c).expect("content divides every coefficient"));
        Ok(SeriesClass { p_exp: p_exp + c as i64, nrd })
    }

    /// Truncation at x^M can push p-content into the product, so it is
    /// extracted again.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        SeriesClass::new(self.p_exp + other.p_exp, self.nrd.mul(&other.nrd))
    }
}

impl PartialEq for SeriesClass {
    fn eq(&self, other: &Self) -> bool {
        self.p_exp == other.p_exp && self.nrd == other.nrd
    }
}

/// Determinant class of a matrix over O_D[[x]][1/p] through the reduced
/// norm: rows are first scaled by π-powers into O_D[[x]].
pub fn series_det_class<C: LocalCoeff>(a: &Matrix<LocalizedSeries<C>>) -> Result<SeriesClass> {
    if a.rows() == 0 || !a.is_square() {
        return Err(Error::InvalidInput("expected a non-empty square matrix".into()));
    }
    let mut scaled = Vec::with_capacity(a.rows());
    let mut total = 0i64;
    for i in 0..a.rows() {
        let row: Vec<Option<LocalizedSeries<C>>> =
            a.row(i).iter().map(|e| if e.is_zero() { None } else { e.normalize().ok() }).collect();
        let rho = row.iter().flatten().map(|e| e.pi_power).min().ok_or_else(|| {
            Error::SingularAtPrecision(format!("row {i} vanishes at working precision"))
        })?;
        total += rho;
        let prec = row.iter().flatten().map(|e| e.precision()).min().unwrap();
        scaled.push(
            row.into_iter()
                .zip(a.row(i))
                .map(|(e, orig)| match e {
                    Some(e) => e.body.mul_pi_left((e.pi_power - rho) as u32).with_precision(prec),
                    None => orig.body.zero_like(),
                })
                .collect::<Vec<_>>(),
        );
    }
    let nrd = C::nrd_matrix(&Matrix::from_rows(scaled))?;
    SeriesClass::new(total, nrd)
}

/// A = U·B·V with B diagonal; U and V are products of the elementary and
/// permutation matrices recorded in `trace`.
#[derive(Clone, Debug)]
pub struct DiagonalReduction<C> {
    pub u: Matrix<LocalizedSeries<C>>,
    pub b: Matrix<LocalizedSeries<C>>,
    pub v: Matrix<LocalizedSeries<C>>,
    pub trace: Vec<TraceOp>,
    pub swaps: u32,
}

/// Diagonal reduction by repeated Weierstrass division.
///
/// The pivot is the entry whose π-free part has the least reduced order,
/// ties broken by the π-exponent.
pub fn diagonal_reduce<C: LocalCoeff>(a: &Matrix<LocalizedSeries<C>>) -> Result<DiagonalReduction<C>> {
    if a.rows() == 0 || !a.is_square() {
        return Err(Error::InvalidInput("expected a non-empty square matrix".into()));
    }
    let n = a.rows();
    let one = a.get(0, 0).one_like();
    let mut b = a.clone();
    let mut u = Matrix::identity(n, &one);
    let mut v = Matrix::identity(n, &one);
    let mut trace = Vec::new();
    let mut swaps = 0;
    let budget = 8 * n * n * a.get(0, 0).body.len();

    for k in 0..n {
        let mut steps = 0;
        loop {
            steps += 1;
            if steps > budget {
                return Err(Error::PrecisionTooLow("diagonal reduction did not terminate".into()));
            }
            let pivot = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .filter_map(|(i, j)| b.get(i, j).pivot_key().map(|key| (key, i, j)))
                .min();
            let Some((_, pi, pj)) = pivot else {
                return Err(Error::SingularAtPrecision(format!("trailing block at {k} vanishes")));
            };
            if pi != k {
                b.swap_rows(pi, k);
                u.swap_cols(pi, k);
                trace.push(TraceOp::SwapRows(pi, k));
                swaps += 1;
            }
            if pj != k {
                b.swap_cols(pj, k);
                v.swap_rows(pj, k);
                trace.push(TraceOp::SwapCols(pj, k));
                swaps += 1;
            }
            let piv = b.get(k, k).normalize()?;
            for i in k + 1..n {
                if b.get(i, k).is_zero() {
                    continue;
                }
                let e = b.get(i, k).normalize()?;
                let (q0, _) = SkewSeries::divide_left(&e.body, &piv.body)?;
                // q·π^b β_k = π^a q0 β_k with q = π^{a-b}·(π^b q0 π^{-b}).
                let q = LocalizedSeries::new(q0.conj_pi(piv.pi_power), e.pi_power - piv.pi_power);
                b.add_row_multiple(i, k, &q.neg());
                u.add_col_multiple(k, i, &q);
                trace.push(TraceOp::RowAdd { target: i, source: k });
            }
            for j in k + 1..n {
                if b.get(k, j).is_zero() {
                    continue;
                }
                let e = b.get(k, j).normalize()?;
                let s = e.pi_power - piv.pi_power;
                // π^a β_j = π^b (π^s β_j π^{-s}) π^s, and q0 π^s = π^s (π^{-s} q0 π^s).
                let (q0, _) = SkewSeries::divide_right(&e.body.conj_pi(s), &piv.body)?;
                let q = LocalizedSeries::new(q0.conj_pi(-s), s);
                b.add_col_multiple(j, k, &q.neg());
                v.add_row_multiple(k, j, &q);
                trace.push(TraceOp::ColAdd { target: j, source: k });
            }
            let clear = (k + 1..n).all(|i| b.get(i, k).is_zero() && b.get(k, i).is_zero());
            if clear {
                break;
            }
        }
    }
    Ok(DiagonalReduction { u, b, v, trace, swaps })
}
