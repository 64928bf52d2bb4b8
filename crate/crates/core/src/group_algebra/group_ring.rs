//! Group rings R[G] with dense coefficient vectors indexed by group element.

use super::group::{FiniteGroup, Group, GroupKind};
use crate::error::{Error, Result};
use crate::linalg::{inverse_unit_pivot, Matrix};
use crate::padic::PAdic;
use crate::ring::{Ring, Scalar};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct GroupRingElem<S> {
    group: Group,
    coeffs: Vec<S>,
}

fn same_group(a: &Group, b: &Group) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<S: Ring> GroupRingElem<S> {
    pub fn new(group: Group, coeffs: Vec<S>) -> Self {
        assert_eq!(coeffs.len(), group.order(), "one coefficient per group element");
        GroupRingElem { group, coeffs }
    }

    pub fn zero(group: &Group, template: &S) -> Self {
        GroupRingElem::new(group.clone(), vec![template.zero_like(); group.order()])
    }

    pub fn one(group: &Group, template: &S) -> Self {
        GroupRingElem::basis(group, group.identity(), template)
    }

    /// The group element at `index`, as a ring element.
    pub fn basis(group: &Group, index: usize, template: &S) -> Self {
        let mut out = GroupRingElem::zero(group, template);
        out.coeffs[index] = template.one_like();
        out
    }

    pub fn scalar(group: &Group, s: &S) -> Self {
        let mut out = GroupRingElem::zero(group, s);
        out.coeffs[group.identity()] = s.clone();
        out
    }

    /// Σ coeff·word over (word, coeff) pairs.
    pub fn from_words(group: &Group, terms: &[(&str, S)]) -> Result<Self> {
        let template = terms
            .first()
            .map(|(_, s)| s.clone())
            .ok_or_else(|| Error::InvalidInput("empty term list".into()))?;
        let mut out = GroupRingElem::zero(group, &template);
        for (w, s) in terms {
            let g = group.parse_word(w)?;
            out.coeffs[g] = out.coeffs[g].add(s);
        }
        Ok(out)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> &S {
        &self.coeffs[index]
    }

    /// Sum of the coefficients.
    pub fn augmentation(&self) -> S {
        self.coeffs.iter().fold(self.coeffs[0].zero_like(), |acc, c| acc.add(c))
    }

    pub fn map_coeffs<T: Ring>(&self, f: impl FnMut(&S) -> T) -> GroupRingElem<T> {
        GroupRingElem { group: self.group.clone(), coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map_coeffs<T: Ring>(
        &self,
        f: impl FnMut(&S) -> Result<T>,
    ) -> Result<GroupRingElem<T>> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<T>>>()?;
        Ok(GroupRingElem { group: self.group.clone(), coeffs })
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "group rings over {} and {}",
                self.group, other.group
            )))
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let g = &self.group;
        let mut out = self.zero_like();
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let ab = g.mul(a, b);
                out.coeffs[ab] = out.coeffs[ab].add(&ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a.add(b)))
    }

    fn zip(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        GroupRingElem { group: self.group.clone(), coeffs }
    }

    /// Matrix of left multiplication by `self` on the basis of group elements.
    pub fn left_regular_matrix(&self) -> Matrix<S> {
        let n = self.group.order();
        let mut m = Matrix::from_fn(n, n, |_, _| self.coeffs[0].zero_like());
        for (a, ca) in self.coeffs.iter().enumerate() {
            for b in 0..n {
                let ab = self.group.mul(a, b);
                let v = m.get(ab, b).add(ca);
                m.set(ab, b, v);
            }
        }
        m
    }

    /// The anti-involution Σ a_g g ↦ Σ a_g g⁻¹.
    pub fn involution(&self) -> Self {
        let mut out = self.zero_like();
        for (g, c) in self.coeffs.iter().enumerate() {
            out.coeffs[self.group.inv(g)] = c.clone();
        }
        out
    }

    pub fn display_with(&self, fmt_coeff: impl Fn(&S) -> String) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| {
                let w = self.group.word(g);
                if w == "1" {
                    fmt_coeff(c)
                } else {
                    format!("{}*{}", fmt_coeff(c), w)
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl<S: PartialEq> PartialEq for GroupRingElem<S> {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl<S: Ring> Ring for GroupRingElem<S> {
    fn zero_like(&self) -> Self {
        GroupRingElem::zero(&self.group, &self.coeffs[0])
    }
    fn one_like(&self) -> Self {
        GroupRingElem::one(&self.group, &self.coeffs[0])
    }
    fn from_int_like(&self, n: i64) -> Self {
        GroupRingElem::scalar(&self.group, &self.coeffs[0].from_int_like(n))
    }
    fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("group mismatch")
    }
    fn sub(&self, other: &Self) -> Self {
        self.check(other).expect("group mismatch");
        self.zip(other, |a, b| a.sub(b))
    }
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("group mismatch")
    }
    fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    /// Solves a·b = 1 through the left regular representation; a one-sided
    /// inverse in a group ring is two-sided.
    fn inverse(&self) -> Option<Self> {
        let inv = inverse_unit_pivot(&self.left_regular_matrix())?;
        let e = self.group.identity();
        let coeffs = (0..self.group.order()).map(|g| inv.get(g, e).clone()).collect();
        Some(GroupRingElem { group: self.group.clone(), coeffs })
    }
}

/// Character values mod p used by the unit criteria.
fn residues<S: Scalar>(a: &GroupRingElem<S>, p: u64) -> Result<Vec<u64>> {
    a.coeffs
        .iter()
        .map(|c| c.residue_mod(p).ok_or_else(|| Error::NotInOrder))
        .collect()
}

impl<S: Scalar> GroupRingElem<S> {
    /// Unit test in Z_p[G] through the semisimple quotient, for the supported
    /// groups.
    pub fn is_unit_at(&self, p: u64) -> Result<bool> {
        let r = residues(self, p)?;
        let sum = |idx: &mut dyn Iterator<Item = (usize, i64)>| -> u64 {
            let s: i128 = idx.map(|(g, sign)| sign as i128 * r[g] as i128).sum();
            s.rem_euclid(p as i128) as u64
        };
        match self.group.kind() {
            GroupKind::Quaternion8 if p == 2 => Ok(sum(&mut (0..8).map(|g| (g, 1))) != 0),
            GroupKind::Dihedral(q) if q == p => {
                let (m, mp) = self.maximal_ideal_membership_at(p)?;
                Ok(!m && !mp)
            }
            GroupKind::Cyclic(q) if q == p => Ok(sum(&mut (0..q as usize).map(|g| (g, 1))) != 0),
            GroupKind::C2 | GroupKind::Klein4 if p == 2 => {
                let n = self.group.order();
                Ok(sum(&mut (0..n).map(|g| (g, 1))) != 0)
            }
            GroupKind::C2 => Ok(sum(&mut [(0, 1), (1, 1)].into_iter()) != 0
                && sum(&mut [(0, 1), (1, -1)].into_iter()) != 0),
            GroupKind::Klein4 => Ok([(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)].iter().all(|&(se, sf)| {
                sum(&mut [(0, 1), (1, se), (2, sf), (3, se * sf)].into_iter()) != 0
            })),
            _ => Err(Error::UnsupportedGroup(format!(
                "no unit criterion for {} at p = {p}",
                self.group
            ))),
        }
    }

    /// Membership in 𝔪 = (p, y − 1, x − 1) and 𝔪′ = (p, y − 1, x + 1) of
    /// Z_p[D_2p].
    pub fn maximal_ideal_membership_at(&self, p: u64) -> Result<(bool, bool)> {
        let GroupKind::Dihedral(q) = self.group.kind() else {
            return Err(Error::UnsupportedGroup(format!("{} is not dihedral", self.group)));
        };
        if q != p {
            return Err(Error::ContextMismatch(format!("D2p:{q} over Z_{p}")));
        }
        let r = residues(self, p)?;
        let q = q as usize;
        let plus: u64 = r.iter().sum::<u64>() % p;
        let minus = (r[..q].iter().sum::<u64>() + p * q as u64 - r[q..].iter().sum::<u64>() % p) % p;
        Ok((plus == 0, minus == 0))
    }
}

impl GroupRingElem<PAdic> {
    pub fn prime(&self) -> u64 {
        self.coeffs[0].prime()
    }

    pub fn is_unit(&self) -> Result<bool> {
        self.is_unit_at(self.prime())
    }

    pub fn maximal_ideal_membership(&self) -> Result<(bool, bool)> {
        self.maximal_ideal_membership_at(self.prime())
    }

    pub fn precision(&self) -> u32 {
        self.coeffs.iter().map(|c| c.precision()).min().unwrap()
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        self.map_coeffs(|c| c.with_precision(prec))
    }
}

/// Convenience constructor from integer coefficients on canonical indices.
pub fn padic_group_elem(group: &Group, p: u64, prec: u32, coeffs: &[i64]) -> GroupRingElem<PAdic> {
    GroupRingElem::new(group.clone(), coeffs.iter().map(|&c| PAdic::new(p, prec, c)).collect())
}

/// Builds `FiniteGroup::from_spec` and checks it against a prime.
pub fn group_for_prime(spec: &str, p: u64) -> Result<Group> {
    let g = FiniteGroup::from_spec(spec)?;
    match g.kind() {
        GroupKind::Quaternion8 if p != 2 => {
            Err(Error::ContextMismatch("H8 computations run over Z_2".into()))
        }
        GroupKind::Dihedral(q) | GroupKind::Cyclic(q) if q != p => {
            Err(Error::ContextMismatch(format!("{spec} over Z_{p}")))
        }
        _ => Ok(g),
    }
}
