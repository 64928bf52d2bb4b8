//! Dense matrices over a [`Ring`], a division-free determinant, and a linear
//! solver over Z/p^N.

use crate::error::{Error, Result};
use crate::padic::{inv_mod_u64, PAdic};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn identity(n: usize, template: &R) -> Self {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                template.one_like()
            } else {
                template.zero_like()
            }
        })
    }

    pub fn diagonal(entries: &[R]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                entries[0].zero_like()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<S>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<S>(&self, f: impl FnMut(&R) -> Result<S>) -> Result<Matrix<S>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<S>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = self.get(i, 0).mul(other.get(0, j));
            for k in 1..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source] (factor on the left).
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &R) {
        for j in 0..self.cols {
            let v = self.get(target, j).add(&factor.mul(self.get(source, j)));
            self.set(target, j, v);
        }
    }

    /// col[target] += col[source] * factor (factor on the right).
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &R) {
        for i in 0..self.rows {
            let v = self.get(i, target).add(&self.get(i, source).mul(factor));
            self.set(i, target, v);
        }
    }

    /// Drops row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }
}

/// Determinant by Berkowitz's division-free algorithm.
///
/// The entries must commute pairwise; no inverses are taken.
pub fn berkowitz_det<R: Ring>(a: &Matrix<R>) -> R {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        panic!("determinant of an empty matrix needs a template element");
    }
    let zero = a.get(0, 0).zero_like();
    let mut v = vec![a.get(0, 0).one_like(), a.get(0, 0).neg()];
    for r in 1..n {
        let mut t = Vec::with_capacity(r + 2);
        t.push(zero.one_like());
        t.push(a.get(r, r).neg());
        let mut w: Vec<R> = (0..r).map(|i| a.get(i, r).clone()).collect();
        for _ in 0..r {
            let mut dot = zero.clone();
            for (j, wj) in w.iter().enumerate() {
                dot = dot.add(&a.get(r, j).mul(wj));
            }
            t.push(dot.neg());
            w = (0..r)
                .map(|i| {
                    let mut acc = zero.clone();
                    for (j, wj) in w.iter().enumerate() {
                        acc = acc.add(&a.get(i, j).mul(wj));
                    }
                    acc
                })
                .collect();
        }
        let next: Vec<R> = (0..r + 2)
            .map(|i| {
                let mut acc = zero.clone();
                for (j, vj) in v.iter().enumerate().take(i + 1) {
                    acc = acc.add(&t[i - j].mul(vj));
                }
                acc
            })
            .collect();
        v = next;
    }
    if n % 2 == 0 {
        v[n].clone()
    } else {
        v[n].neg()
    }
}

/// Inverse by Gauss-Jordan elimination with invertible pivots.
///
/// Works over non-commutative rings; returns `None` when no invertible
/// pivot is found in some column.
pub fn inverse_unit_pivot<R: Ring>(a: &Matrix<R>) -> Option<Matrix<R>> {
    assert!(a.is_square());
    let n = a.rows();
    let mut m = a.clone();
    let mut inv = Matrix::identity(n, a.get(0, 0));
    for c in 0..n {
        let (r, pivot_inv) = (c..n).find_map(|r| m.get(r, c).inverse().map(|i| (r, i)))?;
        m.swap_rows(r, c);
        inv.swap_rows(r, c);
        for j in 0..n {
            m.set(c, j, pivot_inv.mul(m.get(c, j)));
            inv.set(c, j, pivot_inv.mul(inv.get(c, j)));
        }
        for i in 0..n {
            if i != c && !m.get(i, c).is_zero() {
                let f = m.get(i, c).neg();
                m.add_row_multiple(i, c, &f);
                inv.add_row_multiple(i, c, &f);
            }
        }
    }
    Some(inv)
}

/// Solves `A x = b` over Z/p^N by a Smith-form reduction.
///
/// Returns one solution (free coordinates set to zero), or `None` when the
/// system is inconsistent modulo p^N.
pub fn solve_mod(a: &Matrix<PAdic>, b: &[PAdic]) -> Result<Option<Vec<PAdic>>> {
    let (m, n) = (a.rows(), a.cols());
    if b.len() != m {
        return Err(Error::InvalidInput("right-hand side has wrong length".into()));
    }
    let first = *a.get(0, 0);
    let p = first.prime();
    let prec = a.entries().iter().chain(b).map(|x| x.precision()).min().unwrap();
    let d_mod = first.with_precision(prec).modulus();
    let mut d = a.map(|x| x.with_precision(prec));
    let mut rhs: Vec<PAdic> = b.iter().map(|x| x.with_precision(prec)).collect();
    let mut v = Matrix::identity(n, &first.with_precision(prec));
    let mut pivots: Vec<(u32, u64)> = Vec::new();
    for t in 0..m.min(n) {
        let mut best: Option<(u32, usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if let Some(k) = d.get(i, j).valuation().finite() {
                    if best.map_or(true, |(bk, _, _)| k < bk) {
                        best = Some((k, i, j));
                    }
                }
            }
        }
        let Some((k, bi, bj)) = best else { break };
        d.swap_rows(t, bi);
        rhs.swap(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        let pk = p.pow(k);
        let unit = d.get(t, t).residue() / pk;
        let unit_inv = inv_mod_u64(unit, d_mod).expect("pivot unit part");
        let scale = |x: &PAdic| -> PAdic {
            PAdic::from_u64(p, prec, x.residue() / pk).mul(&PAdic::from_u64(p, prec, unit_inv))
        };
        for i in t + 1..m {
            if d.get(i, t).is_zero() {
                continue;
            }
            let f = scale(d.get(i, t)).neg();
            d.add_row_multiple(i, t, &f);
            rhs[i] = rhs[i].add(&f.mul(&rhs[t]));
        }
        for j in t + 1..n {
            if d.get(t, j).is_zero() {
                continue;
            }
            let f = scale(d.get(t, j)).neg();
            d.add_col_multiple(j, t, &f);
            v.add_col_multiple(j, t, &f);
        }
        pivots.push((k, unit_inv));
    }
    let rank = pivots.len();
    if rhs[rank..].iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    let mut y = vec![first.with_precision(prec).zero_like(); n];
    for (t, &(k, unit_inv)) in pivots.iter().enumerate() {
        let pk = p.pow(k);
        if rhs[t].residue() % pk != 0 {
            return Ok(None);
        }
        y[t] = PAdic::from_u64(p, prec, rhs[t].residue() / pk)
            .mul(&PAdic::from_u64(p, prec, unit_inv));
    }
    let x = (0..n)
        .map(|i| {
            let mut acc = y[0].zero_like();
            for (j, yj) in y.iter().enumerate() {
                acc = acc.add(&v.get(i, j).mul(yj));
            }
            acc
        })
        .collect();
    Ok(Some(x))
}
