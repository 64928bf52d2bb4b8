//! Integral representatives π^r·β·J for Dieudonné determinants over
//! O_D[[x]].

use super::{
    diagonal_reduce, series_det_class, weierstrass_prepare, LocalCoeff, LocalizedSeries, SeriesClass, SkewSeries,
};
use crate::dieudonne::TraceOp;
use crate::error::{Error, Result};
use crate::group_algebra::IwasawaSeries;
use crate::linalg::Matrix;
use crate::padic::{validate_context, Valuation};
use crate::ring::Ring;

#[derive(Clone, Debug)]
pub struct IntegralDetRepresentative<C> {
    /// Exponent of π.
    pub r: i64,
    /// A unit series.
    pub beta: SkewSeries<C>,
    /// Monic polynomial, constant term first.
    pub monic: Vec<C>,
    /// π^r·β·J.
    pub representative: SkewSeries<C>,
    pub trace: Vec<TraceOp>,
    /// Extra p-adic digits used internally.
    pub guard: u32,
}

/// Nrd(A) over Z_p[[x]]; fails if the splitting-embedding computation does
/// not land in the integral series.
pub fn nrd_integral<C: LocalCoeff>(a: &Matrix<SkewSeries<C>>) -> Result<IwasawaSeries> {
    if a.rows() == 0 || !a.is_square() {
        return Err(Error::InvalidInput("expected a non-empty square matrix".into()));
    }
    C::nrd_matrix(a)
}

fn p_content(s: &IwasawaSeries) -> Valuation {
    s.coeffs().iter().map(|c| c.valuation()).min().unwrap()
}

/// Diagonalizes A over O_D[[x]][1/p], writes each diagonal entry as
/// π^{r_i}·U_i·J_i and multiplies the pieces; r ≥ 0 is checked against the
/// p-content of Nrd(A).
pub fn integral_det_representative<C: LocalCoeff>(
    a: &Matrix<SkewSeries<C>>,
) -> Result<IntegralDetRepresentative<C>> {
    let nrd_a = nrd_integral(a)?;
    let Valuation::Finite(content) = p_content(&nrd_a) else {
        return Err(Error::SingularAtPrecision("reduced norm vanishes at working precision".into()));
    };
    let target = SeriesClass::new(0, nrd_a.clone())?;
    let prec = a.entries().iter().map(|s| s.precision()).min().unwrap();
    let p = a.get(0, 0).coeff(0).prime();
    let mut last = Error::PrecisionTooLow("no guard level succeeded".into());
    for guard in [8u32, 16, 32] {
        let mut work = prec + guard;
        while validate_context(p, work).is_err() {
            work -= 1;
        }
        match attempt(a, work, prec) {
            Ok((rep, class)) => {
                if rep.r < 0 {
                    return Err(Error::NegativeExponent(rep.r));
                }
                if rep.r != content as i64 {
                    return Err(Error::InvalidInput(format!(
                        "π-exponent {} disagrees with the p-content {content} of Nrd(A)",
                        rep.r
                    )));
                }
                if class == target {
                    return Ok(IntegralDetRepresentative { guard: work - prec, ..rep });
                }
                last = Error::PrecisionTooLow("representative class differs from Nrd(A)".into());
            }
            Err(e @ Error::NegativeExponent(_)) => return Err(e),
            Err(e) => last = e,
        }
        if work < prec + guard {
            break;
        }
    }
    Err(last)
}

fn attempt<C: LocalCoeff>(
    a: &Matrix<SkewSeries<C>>,
    work: u32,
    prec: u32,
) -> Result<(IntegralDetRepresentative<C>, SeriesClass)> {
    let lifted = a.map(|s| LocalizedSeries::from_series(s.with_precision(work)));
    let red = diagonal_reduce(&lifted)?;
    let t = a.get(0, 0).coeff(0).with_precision(work);
    let m = a.get(0, 0).len();
    let mut r = 0i64;
    let mut beta = SkewSeries::constant(m, &t.one_like());
    if red.swaps % 2 == 1 {
        beta = beta.neg();
    }
    let mut j = SkewSeries::constant(m, &t.one_like());
    let mut degree = 0;
    for i in 0..a.rows() {
        let b = red.b.get(i, i).normalize()?;
        let w = weierstrass_prepare(&b.body)?;
        debug_assert_eq!(w.mu, 0);
        r += b.pi_power;
        beta = beta.mul(&w.unit);
        j = j.mul(&w.monic_series());
        degree += w.degree();
    }
    if r < 0 {
        return Err(Error::NegativeExponent(r));
    }
    let mut monic: Vec<C> = j.coeffs()[..=degree.min(m - 1)].iter().map(|c| c.with_precision(prec)).collect();
    monic.truncate(degree + 1);
    let beta = beta.with_precision(prec);
    let representative = beta.mul(&j.with_precision(prec)).mul_pi_left(r as u32);
    let class = series_det_class(&Matrix::from_rows(vec![vec![LocalizedSeries::from_series(representative.clone())]]))?;
    let rep = IntegralDetRepresentative { r, beta, monic, representative, trace: red.trace, guard: 0 };
    Ok((rep, class))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::Hurwitz;

    #[test]
    fn uniformizer_norm_and_two() {
        let t = Hurwitz::from_ints(12, [0; 4]);
        let pi = Matrix::from_rows(vec![vec![SkewSeries::constant(6, &Hurwitz::uniformizer(12))]]);
        let n = nrd_integral(&pi).unwrap();
        assert_eq!(n.coeffs()[0].residue(), 2);
        assert!(n.coeffs()[1..].iter().all(|c| c.is_zero()));
        let two = Matrix::from_rows(vec![vec![SkewSeries::constant(6, &t.from_int_like(2))]]);
        let rep = integral_det_representative(&two).unwrap();
        assert_eq!(rep.r, 2);
        assert!(rep.beta.coeff(0).is_unit());
        assert_eq!(rep.monic.len(), 1);
    }

    #[test]
    fn identity_representative() {
        let t = Hurwitz::from_ints(12, [0; 4]);
        let one = SkewSeries::constant(6, &t.one_like());
        let id = Matrix::identity(2, &one);
        let rep = integral_det_representative(&id).unwrap();
        assert_eq!(rep.r, 0);
        assert!(rep.representative.is_one());
    }
}
