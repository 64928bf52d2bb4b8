//! Dieudonné determinants through their abelianized invariant: ordinary
//! determinants on commutative Wedderburn components and reduced norms on
//! the simple ones.

mod dihedral;
mod h8;

pub use dihedral::dihedral_integral_representative;
pub use h8::{attainable_norms_mod8, h8_obstruction};

use crate::algebras::{Cyclo, DihedralElem, Gaussian, Quaternion};
use crate::error::{Error, Result};
use crate::group_algebra::{wedderburn_project, GroupKind, GroupRingElem, WedderburnImage};
use crate::linalg::{berkowitz_det, Matrix};
use crate::padic::PAdic;
use crate::ring::Ring;
use num_rational::BigRational;

/// One component of a [`DetClass`].
#[derive(Clone, Debug, PartialEq)]
pub enum ClassPart<S> {
    /// Determinant in a commutative group ring.
    Commutative(GroupRingElem<S>),
    /// Reduced norm in the real cyclotomic center of L⟨τ⟩.
    Central(Cyclo<S>),
    /// Reduced norm in the coefficient ring (quaternion components).
    Scalar(S),
}

impl<S: Ring> ClassPart<S> {
    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (ClassPart::Commutative(a), ClassPart::Commutative(b)) => ClassPart::Commutative(a.mul(b)),
            (ClassPart::Central(a), ClassPart::Central(b)) => ClassPart::Central(a.mul(b)),
            (ClassPart::Scalar(a), ClassPart::Scalar(b)) => ClassPart::Scalar(a.mul(b)),
            _ => panic!("determinant classes of different shapes"),
        }
    }

    fn is_one(&self) -> bool {
        match self {
            ClassPart::Commutative(a) => a.is_one(),
            ClassPart::Central(a) => a.is_one(),
            ClassPart::Scalar(a) => a.is_one(),
        }
    }
}

/// The image of the Dieudonné determinant in the product of the component
/// unit groups (commutative parts) and centers (reduced norms).
#[derive(Clone, Debug, PartialEq)]
pub struct DetClass<S> {
    parts: Vec<ClassPart<S>>,
}

impl<S: Ring> DetClass<S> {
    pub fn new(parts: Vec<ClassPart<S>>) -> Self {
        DetClass { parts }
    }

    pub fn parts(&self) -> &[ClassPart<S>] {
        &self.parts
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.parts.len(), other.parts.len(), "determinant classes of different shapes");
        DetClass { parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn is_one(&self) -> bool {
        self.parts.iter().all(|p| p.is_one())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = self.clone();
        for _ in 1..e {
            out = out.mul(self);
        }
        out
    }

    /// The commutative component, when there is exactly one.
    pub fn commutative(&self) -> Option<&GroupRingElem<S>> {
        self.parts.iter().find_map(|p| match p {
            ClassPart::Commutative(a) => Some(a),
            _ => None,
        })
    }

    /// The reduced-norm component in a real cyclotomic center.
    pub fn central(&self) -> Option<&Cyclo<S>> {
        self.parts.iter().find_map(|p| match p {
            ClassPart::Central(a) => Some(a),
            _ => None,
        })
    }

    /// The reduced-norm component in the coefficient ring.
    pub fn scalar(&self) -> Option<&S> {
        self.parts.iter().find_map(|p| match p {
            ClassPart::Scalar(a) => Some(a),
            _ => None,
        })
    }
}

/// Matrix entries whose Dieudonné determinant class is computable.
pub trait DetEntry: Ring {
    type Coeff: Ring;

    fn det_class(a: &Matrix<Self>) -> Result<DetClass<Self::Coeff>>;

    fn is_unit_entry(&self) -> bool {
        self.inverse().is_some()
    }
}

fn require_square<R>(a: &Matrix<R>) -> Result<()>
where
    R: Ring,
{
    if a.rows() == 0 || !a.is_square() {
        return Err(Error::InvalidInput(format!(
            "expected a non-empty square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(())
}

fn singular(what: &str) -> Error {
    Error::SingularAtPrecision(format!("{what} vanishes at working precision"))
}

/// Whether some character of a commutative group ring kills the element.
fn commutative_is_singular<S: Ring>(a: &GroupRingElem<S>) -> bool {
    let c = a.coeffs();
    let signed = |signs: &[i64]| {
        c.iter()
            .zip(signs)
            .fold(c[0].zero_like(), |acc, (x, &s)| if s > 0 { acc.add(x) } else { acc.sub(x) })
    };
    match a.group().kind() {
        GroupKind::C2 => signed(&[1, 1]).is_zero() || signed(&[1, -1]).is_zero(),
        GroupKind::Klein4 => [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]
            .iter()
            .any(|s| signed(s).is_zero()),
        GroupKind::Cyclic(p) => {
            let top = c[c.len() - 1].clone();
            let chi = Cyclo::from_coords(p, c[..c.len() - 1].iter().map(|x| x.sub(&top)).collect());
            a.augmentation().is_zero() || chi.is_zero()
        }
        _ => a.is_zero(),
    }
}

fn scalar_part<S: Ring>(det: Gaussian<S>) -> Result<S> {
    if !det.im.is_zero() {
        return Err(Error::NotInRealSubfield);
    }
    Ok(det.re)
}

/// Reduced norm of a matrix over a quaternion algebra, via the splitting
/// embedding into M₂ of the Gaussian numbers.
pub fn quaternion_matrix_nrd<S: Ring>(a: &Matrix<Quaternion<S>>) -> Result<S> {
    scalar_part(berkowitz_det(&embed_blocks(a, |q| q.embed())))
}

/// Reduced norm of a matrix over L⟨τ⟩, via the embedding into M₂(L).
pub fn dihedral_matrix_nrd<S: Ring>(a: &Matrix<DihedralElem<S>>) -> Result<Cyclo<S>> {
    let det = berkowitz_det(&embed_blocks(a, |x| x.embed()));
    if det.is_alpha_fixed() {
        Ok(det)
    } else {
        Err(Error::NotInRealSubfield)
    }
}

/// Replaces each entry by its 2×2 image.
pub fn embed_blocks<R: Ring, T: Ring>(a: &Matrix<R>, f: impl Fn(&R) -> Matrix<T>) -> Matrix<T> {
    let n = a.rows();
    let blocks: Vec<Matrix<T>> = a.entries().iter().map(f).collect();
    Matrix::from_fn(2 * n, 2 * a.cols(), |i, j| {
        blocks[(i / 2) * a.cols() + j / 2].get(i % 2, j % 2).clone()
    })
}

impl<S: Ring> DetEntry for GroupRingElem<S> {
    type Coeff = S;

    fn det_class(a: &Matrix<Self>) -> Result<DetClass<S>> {
        require_square(a)?;
        let group = a.get(0, 0).group().clone();
        match group.kind() {
            GroupKind::C2 | GroupKind::Klein4 | GroupKind::Cyclic(_) => {
                let d = berkowitz_det(a);
                if commutative_is_singular(&d) {
                    return Err(singular("a character of the determinant"));
                }
                Ok(DetClass::new(vec![ClassPart::Commutative(d)]))
            }
            GroupKind::Dihedral(_) | GroupKind::Quaternion8 => {
                let images = a.try_map(wedderburn_project)?;
                let sigma1 = images.map(|w| match w {
                    WedderburnImage::Dihedral { sigma1, .. } | WedderburnImage::Quaternion { sigma1, .. } => {
                        sigma1.clone()
                    }
                    WedderburnImage::Commutative(x) => x.clone(),
                });
                let det1 = berkowitz_det(&sigma1);
                if commutative_is_singular(&det1) {
                    return Err(singular("a character of the commutative component"));
                }
                let second = if let GroupKind::Dihedral(_) = group.kind() {
                    let m = images.map(|w| match w {
                        WedderburnImage::Dihedral { sigma2, .. } => sigma2.clone(),
                        _ => unreachable!(),
                    });
                    let nrd = dihedral_matrix_nrd(&m)?;
                    if nrd.is_zero() {
                        return Err(singular("the reduced norm of the simple component"));
                    }
                    ClassPart::Central(nrd)
                } else {
                    let m = images.map(|w| match w {
                        WedderburnImage::Quaternion { sigma2, .. } => sigma2.clone(),
                        _ => unreachable!(),
                    });
                    let nrd = quaternion_matrix_nrd(&m)?;
                    if nrd.is_zero() {
                        return Err(singular("the reduced norm of the quaternion component"));
                    }
                    ClassPart::Scalar(nrd)
                };
                Ok(DetClass::new(vec![ClassPart::Commutative(det1), second]))
            }
            GroupKind::Table => Err(Error::UnsupportedGroup(format!(
                "no determinant class for {group}"
            ))),
        }
    }
}

impl<S: Ring> DetEntry for Quaternion<S> {
    type Coeff = S;

    fn det_class(a: &Matrix<Self>) -> Result<DetClass<S>> {
        require_square(a)?;
        let nrd = quaternion_matrix_nrd(a)?;
        if nrd.is_zero() {
            return Err(singular("the reduced norm"));
        }
        Ok(DetClass::new(vec![ClassPart::Scalar(nrd)]))
    }
}

impl<S: Ring> DetEntry for DihedralElem<S> {
    type Coeff = S;

    fn det_class(a: &Matrix<Self>) -> Result<DetClass<S>> {
        require_square(a)?;
        let nrd = dihedral_matrix_nrd(a)?;
        if nrd.is_zero() {
            return Err(singular("the reduced norm"));
        }
        Ok(DetClass::new(vec![ClassPart::Central(nrd)]))
    }
}

macro_rules! commutative_scalar_entry {
    ($t:ty) => {
        impl DetEntry for $t {
            type Coeff = $t;

            fn det_class(a: &Matrix<Self>) -> Result<DetClass<$t>> {
                require_square(a)?;
                let d = berkowitz_det(a);
                if Ring::is_zero(&d) {
                    return Err(singular("the determinant"));
                }
                Ok(DetClass::new(vec![ClassPart::Scalar(d)]))
            }
        }
    };
}

commutative_scalar_entry!(PAdic);
commutative_scalar_entry!(BigRational);

/// Component-wise Dieudonné determinant class.
pub fn det_class<R: DetEntry>(a: &Matrix<R>) -> Result<DetClass<R::Coeff>> {
    R::det_class(a)
}

/// Class of a single element, i.e. of the 1×1 matrix [x].
pub fn element_class<R: DetEntry>(x: &R) -> Result<DetClass<R::Coeff>> {
    R::det_class(&Matrix::from_rows(vec![vec![x.clone()]]))
}

/// ad − a·c·a⁻¹·b, a representative of the Dieudonné determinant of
/// [[a, b], [c, d]] when a is invertible.
pub fn det_2x2_formula<R: Ring>(a: &R, b: &R, c: &R, d: &R) -> Result<R> {
    let a_inv = a
        .inverse()
        .ok_or_else(|| Error::NotAUnit("top-left entry of the 2x2 matrix".into()))?;
    Ok(a.mul(d).sub(&a.mul(c).mul(&a_inv).mul(b)))
}

/// One step of an elimination trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceOp {
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    /// row[target] += λ·row[source].
    RowAdd { target: usize, source: usize },
    /// col[target] += col[source]·λ.
    ColAdd { target: usize, source: usize },
    /// A unit pivot was split off at this position.
    Pivot(usize),
}

/// A congruence that every integral representative would have to satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub modulus: u64,
    /// Residues attainable by integral representatives.
    pub required: Vec<u64>,
    /// Residue of the actual invariant.
    pub actual: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict<S> {
    RepresentativeFound(GroupRingElem<S>),
    NoIntegralRepresentative(Obstruction),
    Inconclusive(String),
}

/// Outcome of an integrality search together with the operations performed.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralityCertificate<S> {
    pub verdict: Verdict<S>,
    pub trace: Vec<TraceOp>,
}

impl<S> IntegralityCertificate<S> {
    pub fn representative(&self) -> Option<&GroupRingElem<S>> {
        match &self.verdict {
            Verdict::RepresentativeFound(e) => Some(e),
            _ => None,
        }
    }
}

/// Brings a unit to (k, k) by row-major search of the trailing block, clears
/// its row and column, and returns the pivot.
pub(crate) fn split_unit_pivot<R: Ring>(
    m: &mut Matrix<R>,
    k: usize,
    is_unit: &impl Fn(&R) -> bool,
    trace: &mut Vec<TraceOp>,
    swaps: &mut u32,
) -> Option<R> {
    let n = m.rows();
    let (pi, pj) = (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).find(|&(i, j)| is_unit(m.get(i, j)))?;
    if pi != k {
        m.swap_rows(pi, k);
        trace.push(TraceOp::SwapRows(pi, k));
        *swaps += 1;
    }
    if pj != k {
        m.swap_cols(pj, k);
        trace.push(TraceOp::SwapCols(pj, k));
        *swaps += 1;
    }
    let u = m.get(k, k).clone();
    let u_inv = u.inverse().expect("pivot is a unit");
    for i in k + 1..n {
        if !m.get(i, k).is_zero() {
            let f = m.get(i, k).mul(&u_inv).neg();
            m.add_row_multiple(i, k, &f);
            trace.push(TraceOp::RowAdd { target: i, source: k });
        }
    }
    for j in k + 1..n {
        if !m.get(k, j).is_zero() {
            let f = u_inv.mul(m.get(k, j)).neg();
            m.add_col_multiple(j, k, &f);
            trace.push(TraceOp::ColAdd { target: j, source: k });
        }
    }
    trace.push(TraceOp::Pivot(k));
    Some(u)
}

/// Diagonalizes by unit-pivot elimination and multiplies the classes of the
/// pivots, one factor of the class of −1 per transposition.
pub fn det_via_elimination<R: DetEntry>(a: &Matrix<R>) -> Result<(DetClass<R::Coeff>, Vec<TraceOp>)> {
    require_square(a)?;
    let mut m = a.clone();
    let mut trace = Vec::new();
    let mut swaps = 0;
    let mut class: Option<DetClass<R::Coeff>> = None;
    for k in 0..m.rows() {
        let u = split_unit_pivot(&mut m, k, &R::is_unit_entry, &mut trace, &mut swaps).ok_or(Error::NoUnitPivot)?;
        let c = element_class(&u)?;
        class = Some(match class {
            None => c,
            Some(acc) => acc.mul(&c),
        });
    }
    let mut class = class.expect("non-empty matrix");
    if swaps % 2 == 1 {
        class = class.mul(&element_class(&a.get(0, 0).from_int_like(-1))?);
    }
    Ok((class, trace))
}
