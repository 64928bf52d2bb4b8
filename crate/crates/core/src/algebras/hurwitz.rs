//! The maximal order of the 2-adic quaternion division algebra, in the
//! basis 1, i, j, ω with ω = (1 + i + j + ij)/2.

use super::quaternion::Quaternion;
use crate::error::{Error, Result};
use crate::padic::{PAdic, Valuation};
use crate::ring::{rat, rat_frac, Ring};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::sync::OnceLock;

type Table = [[[i64; 4]; 4]; 4];

struct Constants {
    mul: Table,
    /// Matrix of q ↦ π q π^{-1} acting on coordinates (column t = image of e_t).
    conj_pi: [[i64; 4]; 4],
}

fn basis() -> [Quaternion<BigRational>; 4] {
    let h = rat_frac(1, 2);
    [
        Quaternion::new(rat(1), rat(0), rat(0), rat(0)),
        Quaternion::new(rat(0), rat(1), rat(0), rat(0)),
        Quaternion::new(rat(0), rat(0), rat(1), rat(0)),
        Quaternion::new(h.clone(), h.clone(), h.clone(), h),
    ]
}

fn integral_coords(q: &Quaternion<BigRational>) -> [i64; 4] {
    let [b1, b2, b3, b4] = &q.b;
    let c = [b1 - b4, b2 - b4, b3 - b4, b4 + b4];
    c.map(|x| {
        assert!(x.is_integer(), "basis product left the maximal order");
        x.to_integer().to_i64().unwrap()
    })
}

fn constants() -> &'static Constants {
    static CELL: OnceLock<Constants> = OnceLock::new();
    CELL.get_or_init(|| {
        let e = basis();
        let mut mul = [[[0; 4]; 4]; 4];
        for a in 0..4 {
            for b in 0..4 {
                mul[a][b] = integral_coords(&e[a].mul(&e[b]));
            }
        }
        let pi = Quaternion::new(rat(1), rat(1), rat(0), rat(0));
        let pi_inv = pi.inverse().unwrap();
        let mut conj_pi = [[0; 4]; 4];
        for t in 0..4 {
            let img = integral_coords(&pi.mul(&e[t]).mul(&pi_inv));
            for s in 0..4 {
                conj_pi[s][t] = img[s];
            }
        }
        Constants { mul, conj_pi }
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Hurwitz {
    c: [PAdic; 4],
}

impl Hurwitz {
    pub fn new(c: [PAdic; 4]) -> Self {
        assert!(c.iter().all(|x| x.prime() == 2), "the maximal order lives over Z_2");
        Hurwitz { c }
    }

    pub fn from_ints(prec: u32, c: [i64; 4]) -> Self {
        Hurwitz::new(c.map(|v| PAdic::new(2, prec, v)))
    }

    pub fn scalar(s: PAdic) -> Self {
        let z = s.zero_like();
        Hurwitz::new([s, z, z, z])
    }

    /// From integral coordinates on 1, i, j, ij.
    pub fn from_standard(b: [PAdic; 4]) -> Self {
        let [b1, b2, b3, b4] = b;
        Hurwitz::new([b1.sub(&b4), b2.sub(&b4), b3.sub(&b4), b4.add(&b4)])
    }

    /// From exact rational coordinates on 1, i, j, ij.
    pub fn from_rational(prec: u32, q: &Quaternion<BigRational>) -> Result<Self> {
        let [b1, b2, b3, b4] = &q.b;
        let c = [b1 - b4, b2 - b4, b3 - b4, b4 + b4];
        let mut out = [PAdic::zero(2, prec); 4];
        for (o, x) in out.iter_mut().zip(&c) {
            *o = PAdic::from_rational(2, prec, x).map_err(|_| Error::NotInOrder)?;
        }
        Ok(Hurwitz::new(out))
    }

    /// The uniformizer 1 + i.
    pub fn uniformizer(prec: u32) -> Self {
        Hurwitz::from_ints(prec, [1, 1, 0, 0])
    }

    pub fn coords(&self) -> &[PAdic; 4] {
        &self.c
    }

    pub fn precision(&self) -> u32 {
        self.c.iter().map(|x| x.precision()).min().unwrap()
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Hurwitz::new(self.c.map(|x| x.with_precision(prec)))
    }

    /// Twice the element, in coordinates on 1, i, j, ij.
    pub fn standard_doubled(&self) -> [PAdic; 4] {
        let [c0, c1, c2, c3] = self.c;
        [c0.add(&c0).add(&c3), c1.add(&c1).add(&c3), c2.add(&c2).add(&c3), c3]
    }

    pub fn to_rational(&self) -> Quaternion<BigRational> {
        let lift = |x: &PAdic| rat(x.signed() as i64);
        let [c0, c1, c2, c3] = self.c.each_ref().map(lift);
        let h = c3.mul(&rat_frac(1, 2));
        Quaternion::new(c0.add(&h), c1.add(&h), c2.add(&h), h)
    }

    pub fn conj(&self) -> Self {
        let [c0, c1, c2, c3] = self.c;
        Hurwitz::new([c0.add(&c3), c1.neg(), c2.neg(), c3.neg()])
    }

    pub fn nrd(&self) -> PAdic {
        let [c0, c1, c2, c3] = self.c;
        let squares = c0.mul(&c0).add(&c1.mul(&c1)).add(&c2.mul(&c2)).add(&c3.mul(&c3));
        squares.add(&c3.mul(&c0.add(&c1).add(&c2)))
    }

    pub fn is_unit(&self) -> bool {
        self.nrd().is_unit()
    }

    pub fn try_inverse(&self) -> Result<Self> {
        let n_inv = self.nrd().try_inverse()?;
        Ok(Hurwitz::new(self.conj().c.map(|x| x.mul(&n_inv))))
    }

    /// Valuation normalized so that the uniformizer has valuation 1.
    pub fn valuation(&self) -> Valuation {
        let Valuation::Finite(k) = self.c.iter().map(|x| x.valuation()).min().unwrap() else {
            return Valuation::TopOfPrecision;
        };
        let rest = Hurwitz::new(self.c.map(|x| x.div_p_power(k).unwrap_or_else(|_| x.zero_like())));
        let extra = if rest.is_unit() { 0 } else { 1 };
        Valuation::Finite(2 * k + extra)
    }

    /// π^k q π^{-k}.
    pub fn conj_uniformizer(&self, k: i64) -> Self {
        let m = &constants().conj_pi;
        let mut out = self.clone();
        for _ in 0..k.rem_euclid(4) {
            let c = out.c;
            out = Hurwitz::new(std::array::from_fn(|s| {
                (0..4).fold(c[0].zero_like(), |acc, t| acc.add(&c[t].scale_int(m[s][t])))
            }));
        }
        out
    }

    fn halve(&self) -> Result<Self> {
        let mut out = self.c;
        for x in out.iter_mut() {
            *x = x.div_p_power(1).map_err(|_| Error::NotAUnit("not divisible by 1 + i".into()))?;
        }
        Ok(Hurwitz::new(out))
    }

    /// x with π·x = self; loses one digit of precision.
    pub fn div_uniformizer_left(&self) -> Result<Self> {
        let pi_bar = Hurwitz::uniformizer(self.precision()).conj();
        pi_bar.mul(self).halve()
    }

    /// x with x·π = self; loses one digit of precision.
    pub fn div_uniformizer_right(&self) -> Result<Self> {
        let pi_bar = Hurwitz::uniformizer(self.precision()).conj();
        self.mul(&pi_bar).halve()
    }
}

impl Ring for Hurwitz {
    fn zero_like(&self) -> Self {
        Hurwitz::scalar(self.c[0].zero_like())
    }
    fn one_like(&self) -> Self {
        Hurwitz::scalar(self.c[0].one_like())
    }
    fn from_int_like(&self, n: i64) -> Self {
        Hurwitz::scalar(self.c[0].from_int_like(n))
    }
    fn add(&self, o: &Self) -> Self {
        Hurwitz::new(std::array::from_fn(|t| self.c[t].add(&o.c[t])))
    }
    fn sub(&self, o: &Self) -> Self {
        Hurwitz::new(std::array::from_fn(|t| self.c[t].sub(&o.c[t])))
    }
    fn mul(&self, o: &Self) -> Self {
        let table = &constants().mul;
        let mut out = [self.c[0].zero_like(); 4];
        for a in 0..4 {
            if self.c[a].is_zero() {
                continue;
            }
            for b in 0..4 {
                let prod = self.c[a].mul(&o.c[b]);
                if prod.is_zero() {
                    continue;
                }
                for (s, slot) in out.iter_mut().enumerate() {
                    let k = table[a][b][s];
                    if k != 0 {
                        *slot = slot.add(&prod.scale_int(k));
                    }
                }
            }
        }
        Hurwitz::new(out)
    }
    fn neg(&self) -> Self {
        Hurwitz::new(self.c.map(|x| x.neg()))
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn inverse(&self) -> Option<Self> {
        self.try_inverse().ok()
    }
}
