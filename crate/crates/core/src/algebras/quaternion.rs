//! Gaussian numbers and Hamilton quaternions over a coefficient ring.

use crate::linalg::Matrix;
use crate::ring::Ring;

/// `re + im·√−1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Gaussian<S> {
    pub re: S,
    pub im: S,
}

impl<S: Ring> Gaussian<S> {
    pub fn new(re: S, im: S) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: S) -> Self {
        let im = re.zero_like();
        Gaussian { re, im }
    }

    pub fn sqrt_minus_one(template: &S) -> Self {
        Gaussian { re: template.zero_like(), im: template.one_like() }
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn norm(&self) -> S {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }
}

impl<S: Ring> Ring for Gaussian<S> {
    fn zero_like(&self) -> Self {
        Gaussian::real(self.re.zero_like())
    }
    fn one_like(&self) -> Self {
        Gaussian::real(self.re.one_like())
    }
    fn from_int_like(&self, n: i64) -> Self {
        Gaussian::real(self.re.from_int_like(n))
    }
    fn add(&self, o: &Self) -> Self {
        Gaussian { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }
    fn sub(&self, o: &Self) -> Self {
        Gaussian { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }
    fn mul(&self, o: &Self) -> Self {
        Gaussian {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }
    fn neg(&self) -> Self {
        Gaussian { re: self.re.neg(), im: self.im.neg() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inverse(&self) -> Option<Self> {
        let n_inv = self.norm().inverse()?;
        let c = self.conj();
        Some(Gaussian { re: c.re.mul(&n_inv), im: c.im.mul(&n_inv) })
    }
}

/// `b[0] + b[1]·i + b[2]·j + b[3]·ij` with i² = j² = −1, ij = −ji.
#[derive(Clone, Debug, PartialEq)]
pub struct Quaternion<S> {
    pub b: [S; 4],
}

impl<S: Ring> Quaternion<S> {
    pub fn new(b1: S, b2: S, b3: S, b4: S) -> Self {
        Quaternion { b: [b1, b2, b3, b4] }
    }

    pub fn scalar(s: S) -> Self {
        let z = s.zero_like();
        Quaternion::new(s, z.clone(), z.clone(), z)
    }

    pub fn i(template: &S) -> Self {
        let (z, o) = (template.zero_like(), template.one_like());
        Quaternion::new(z.clone(), o, z.clone(), z)
    }

    pub fn j(template: &S) -> Self {
        let (z, o) = (template.zero_like(), template.one_like());
        Quaternion::new(z.clone(), z.clone(), o, z)
    }

    pub fn k(template: &S) -> Self {
        let (z, o) = (template.zero_like(), template.one_like());
        Quaternion::new(z.clone(), z.clone(), z, o)
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.b;
        Quaternion::new(a.clone(), b.neg(), c.neg(), d.neg())
    }

    /// Reduced norm, the sum of the four squares.
    pub fn nrd(&self) -> S {
        self.b.iter().fold(self.b[0].zero_like(), |acc, x| acc.add(&x.mul(x)))
    }

    pub fn reduced_trace(&self) -> S {
        self.b[0].add(&self.b[0])
    }

    pub fn map<T: Ring>(&self, mut f: impl FnMut(&S) -> T) -> Quaternion<T> {
        Quaternion { b: [f(&self.b[0]), f(&self.b[1]), f(&self.b[2]), f(&self.b[3])] }
    }

    /// Image in M₂ of the Gaussian numbers under
    /// i ↦ diag(√−1, −√−1), j ↦ [[0, 1], [−1, 0]].
    pub fn embed(&self) -> Matrix<Gaussian<S>> {
        let [a, b, c, d] = &self.b;
        Matrix::from_rows(vec![
            vec![Gaussian::new(a.clone(), b.clone()), Gaussian::new(c.clone(), d.clone())],
            vec![Gaussian::new(c.neg(), d.clone()), Gaussian::new(a.clone(), b.neg())],
        ])
    }
}

impl<S: Ring> Ring for Quaternion<S> {
    fn zero_like(&self) -> Self {
        Quaternion::scalar(self.b[0].zero_like())
    }
    fn one_like(&self) -> Self {
        Quaternion::scalar(self.b[0].one_like())
    }
    fn from_int_like(&self, n: i64) -> Self {
        Quaternion::scalar(self.b[0].from_int_like(n))
    }
    fn add(&self, o: &Self) -> Self {
        Quaternion { b: std::array::from_fn(|t| self.b[t].add(&o.b[t])) }
    }
    fn sub(&self, o: &Self) -> Self {
        Quaternion { b: std::array::from_fn(|t| self.b[t].sub(&o.b[t])) }
    }
    fn mul(&self, o: &Self) -> Self {
        let [a1, b1, c1, d1] = &self.b;
        let [a2, b2, c2, d2] = &o.b;
        let m = |x: &S, y: &S| x.mul(y);
        Quaternion::new(
            m(a1, a2).sub(&m(b1, b2)).sub(&m(c1, c2)).sub(&m(d1, d2)),
            m(a1, b2).add(&m(b1, a2)).add(&m(c1, d2)).sub(&m(d1, c2)),
            m(a1, c2).sub(&m(b1, d2)).add(&m(c1, a2)).add(&m(d1, b2)),
            m(a1, d2).add(&m(b1, c2)).sub(&m(c1, b2)).add(&m(d1, a2)),
        )
    }
    fn neg(&self) -> Self {
        Quaternion { b: std::array::from_fn(|t| self.b[t].neg()) }
    }
    fn is_zero(&self) -> bool {
        self.b.iter().all(|x| x.is_zero())
    }
    fn inverse(&self) -> Option<Self> {
        let n_inv = self.nrd().inverse()?;
        Some(self.conj().map(|x| x.mul(&n_inv)))
    }
}
