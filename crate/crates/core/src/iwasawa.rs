//! Reductions Λ → Λ/(p²), characters of Λ[G], and the isogeny ideal
//! identity in Λ/(p², T^M).

use crate::error::{Error, Result};
use crate::group_algebra::{Group, GroupKind, IwasawaSeries, LambdaGElem};
use crate::linalg::{berkowitz_det, solve_mod, Matrix};
use crate::padic::PAdic;
use crate::ring::Ring;
use crate::weierstrass::{weierstrass_prepare, SkewSeries};
use std::fmt;

/// An element of Z/p²[[T]]/(T^M).
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaModP2(IwasawaSeries);

impl LambdaModP2 {
    pub fn from_ints(p: u64, m: usize, coeffs: &[i64]) -> Self {
        LambdaModP2(IwasawaSeries::from_ints(p, 2, m, coeffs))
    }

    pub fn series(&self) -> &IwasawaSeries {
        &self.0
    }

    pub fn coeffs(&self) -> &[PAdic] {
        self.0.coeffs()
    }

    pub fn prime(&self) -> u64 {
        self.0.prime()
    }

    pub fn series_precision(&self) -> usize {
        self.0.series_precision()
    }

    /// Not nilpotent, i.e. some coefficient is a unit.
    pub fn is_non_zero_divisor(&self) -> bool {
        self.0.weierstrass_degree().is_some()
    }

    /// The unique distinguished polynomial P with (self) = (P), constant
    /// term first.
    pub fn distinguished(&self) -> Result<Vec<PAdic>> {
        let lambda = self.0.weierstrass_degree().ok_or(Error::NilpotentDeterminant)?;
        let m = self.series_precision();
        if 2 * lambda > m {
            return Err(Error::PrecisionTooLow(format!(
                "Weierstrass degree {lambda} needs at least {} series coefficients, have {m}",
                2 * lambda
            )));
        }
        let t = self.coeffs()[0].zero_like();
        let w = weierstrass_prepare(&SkewSeries::new(m, self.coeffs().to_vec(), &t))?;
        Ok(w.monic)
    }

    /// Some h with self = other·h, if one exists.
    pub fn quotient_by(&self, other: &Self) -> Result<Option<Self>> {
        let m = self.series_precision();
        let g = other.coeffs();
        let t = g[0].zero_like();
        let mat = Matrix::from_fn(m, m, |i, j| if j <= i { g[i - j] } else { t });
        Ok(solve_mod(&mat, self.coeffs())?
            .map(|h| LambdaModP2(IwasawaSeries::new(self.prime(), 2, m, &h))))
    }
}

impl fmt::Display for LambdaModP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display())
    }
}

impl Ring for LambdaModP2 {
    fn zero_like(&self) -> Self {
        LambdaModP2(self.0.zero_like())
    }
    fn one_like(&self) -> Self {
        LambdaModP2(self.0.one_like())
    }
    fn from_int_like(&self, n: i64) -> Self {
        LambdaModP2(self.0.from_int_like(n))
    }
    fn add(&self, o: &Self) -> Self {
        LambdaModP2(self.0.add(&o.0))
    }
    fn sub(&self, o: &Self) -> Self {
        LambdaModP2(self.0.sub(&o.0))
    }
    fn mul(&self, o: &Self) -> Self {
        LambdaModP2(self.0.mul(&o.0))
    }
    fn neg(&self) -> Self {
        LambdaModP2(self.0.neg())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inverse(&self) -> Option<Self> {
        self.0.inverse().map(LambdaModP2)
    }
}

/// Coefficient-wise reduction Λ → Λ/(p²).
pub fn sigma_p2(f: &IwasawaSeries) -> Result<LambdaModP2> {
    if f.padic_precision() < 2 {
        return Err(Error::InsufficientPrecision(format!(
            "reduction mod p^2 needs p-adic precision 2, have {}",
            f.padic_precision()
        )));
    }
    Ok(LambdaModP2(f.with_padic_precision(2)))
}

/// A character G → (Z/p²)^× of a cyclic group, fixed by its value on the
/// generator.
#[derive(Clone, Debug)]
pub struct IsogenyCharacter {
    group: Group,
    value: PAdic,
    /// Value on each group element, by index.
    table: Vec<PAdic>,
}

impl IsogenyCharacter {
    pub fn new(group: &Group, p: u64, value: i64) -> Result<Self> {
        let gen_name = match group.kind() {
            GroupKind::Cyclic(_) => "g",
            GroupKind::C2 => "e",
            _ => return Err(Error::UnsupportedGroup(format!("characters need a cyclic group, got {group}"))),
        };
        let g = group.generator(gen_name).expect("cyclic groups have a generator");
        let value = PAdic::new(p, 2, value);
        if !value.is_unit() {
            return Err(Error::NotAUnit(format!("character value {value}")));
        }
        let n = group.order();
        if !value.pow(n as u64).is_one() {
            return Err(Error::InvalidInput(format!(
                "character value {value} does not have order dividing {n} mod {p}^2"
            )));
        }
        let mut table = vec![value.one_like(); n];
        for k in 0..n {
            table[group.pow(g, k as i64)] = value.pow(k as u64);
        }
        Ok(IsogenyCharacter { group: group.clone(), value, table })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn value(&self) -> PAdic {
        self.value
    }

    pub fn prime(&self) -> u64 {
        self.value.prime()
    }
}

/// σ_χ: Λ[G] → Λ/(p²), g ↦ χ(g).
pub fn sigma_char(a: &LambdaGElem, chi: &IsogenyCharacter) -> Result<LambdaModP2> {
    if a.group().spec() != chi.group.spec() {
        return Err(Error::GroupMismatch(format!("element over {}, character on {}", a.group(), chi.group)));
    }
    let coeffs = a.coeffs();
    if coeffs[0].prime() != chi.prime() {
        return Err(Error::PrimeMismatch(coeffs[0].prime(), chi.prime()));
    }
    let mut acc = sigma_p2(&coeffs[0])?.zero_like();
    for (g, c) in coeffs.iter().enumerate() {
        let chi_g = LambdaModP2(IwasawaSeries::constant(chi.table[g], c.series_precision()));
        acc = acc.add(&sigma_p2(c)?.mul(&chi_g));
    }
    Ok(acc)
}

/// A principal ideal of Λ/(p², T^M).
#[derive(Clone, Debug, PartialEq)]
pub struct PrincipalIdealModP2 {
    pub generator: LambdaModP2,
}

impl PrincipalIdealModP2 {
    pub fn new(generator: LambdaModP2) -> Result<Self> {
        if !generator.is_non_zero_divisor() {
            return Err(Error::NilpotentDeterminant);
        }
        Ok(PrincipalIdealModP2 { generator })
    }

    /// Equality through the distinguished generators.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.generator.distinguished()? == other.generator.distinguished()?)
    }

    pub fn mul(&self, other: &Self) -> Self {
        PrincipalIdealModP2 { generator: self.generator.mul(&other.generator) }
    }
}

/// Determinant over Λ/(p², T^M), as an ideal generator.
pub fn det_mod_p2(a: &Matrix<LambdaModP2>) -> Result<PrincipalIdealModP2> {
    if a.rows() == 0 || !a.is_square() {
        return Err(Error::InvalidInput("expected a non-empty square matrix".into()));
    }
    PrincipalIdealModP2::new(berkowitz_det(a))
}

#[derive(Clone, Debug)]
pub struct IsogenyReport {
    pub lhs: LambdaModP2,
    pub rhs_phi: LambdaModP2,
    pub rhs_phi_tilde: LambdaModP2,
    pub rhs: LambdaModP2,
    pub lhs_distinguished: Vec<PAdic>,
    pub rhs_distinguished: Vec<PAdic>,
    /// h with lhs = rhs·h.
    pub lhs_over_rhs: Option<LambdaModP2>,
    /// h with rhs = lhs·h.
    pub rhs_over_lhs: Option<LambdaModP2>,
    pub holds: bool,
    pub series_precision: usize,
    pub assumptions: Vec<String>,
}

/// Checks σ_{p²}((det A_E)) = σ_φ((det A_φ))·σ_φ̃((det A_φ̃)) in Λ/(p², T^M).
pub fn verify_isogeny_identity(
    a_e: &Matrix<IwasawaSeries>,
    a_phi: &Matrix<LambdaGElem>,
    a_phi_tilde: &Matrix<LambdaGElem>,
    chi_phi: &IsogenyCharacter,
    chi_phi_tilde: &IsogenyCharacter,
) -> Result<IsogenyReport> {
    for (name, r, c) in [
        ("A_E", a_e.rows(), a_e.cols()),
        ("A_phi", a_phi.rows(), a_phi.cols()),
        ("A_phi_tilde", a_phi_tilde.rows(), a_phi_tilde.cols()),
    ] {
        if r == 0 || r != c {
            return Err(Error::InvalidInput(format!("{name} is {r}x{c}, expected square")));
        }
    }
    let lhs = PrincipalIdealModP2::new(sigma_p2(&berkowitz_det(a_e))?)?;
    let phi = det_mod_p2(&a_phi.try_map(|x| sigma_char(x, chi_phi))?)?;
    let phi_tilde = det_mod_p2(&a_phi_tilde.try_map(|x| sigma_char(x, chi_phi_tilde))?)?;
    let rhs = phi.mul(&phi_tilde);
    let lhs_distinguished = lhs.generator.distinguished()?;
    let rhs_distinguished = rhs.generator.distinguished()?;
    let holds = lhs_distinguished == rhs_distinguished;
    Ok(IsogenyReport {
        lhs_over_rhs: lhs.generator.quotient_by(&rhs.generator)?,
        rhs_over_lhs: rhs.generator.quotient_by(&lhs.generator)?,
        series_precision: lhs.generator.series_precision(),
        lhs: lhs.generator,
        rhs_phi: phi.generator,
        rhs_phi_tilde: phi_tilde.generator,
        rhs: rhs.generator,
        lhs_distinguished,
        rhs_distinguished,
        holds,
        assumptions: vec!["L_phi ∩ Q_∞ = Q is assumed, not checked".into()],
    })
}
