//! Dense exact linear algebra over a [`Field`].
//!
//! Matrices act on column vectors: an `r x c` matrix maps `F^c` to `F^r`.

use crate::gf::{Fe, Field};

pub fn vec_add(f: &Field, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn vec_sub(f: &Field, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

pub fn vec_scale(f: &Field, c: Fe, a: &[Fe]) -> Vec<Fe> {
    a.iter().map(|&x| f.mul(c, x)).collect()
}

pub fn vec_is_zero(a: &[Fe]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Entrywise `x -> x^{p^k}`.
pub fn vec_frobenius(f: &Field, a: &[Fe], k: u32) -> Vec<Fe> {
    a.iter().map(|&x| f.frobenius(x, k)).collect()
}

/// `a += c * b` in place.
fn axpy(f: &Field, a: &mut [Fe], c: Fe, b: &[Fe]) {
    if c.is_zero() {
        return;
    }
    for (x, &y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = f.add(*x, f.mul(c, y));
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Fe>]) -> Self {
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length");
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    pub fn from_cols(field: &Field, rows: usize, cols: &[Vec<Fe>]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Fe) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Fe> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() {
                    axpy(f, orow, a, other.row(k));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Fe::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        out.data = vec_add(&self.field, &self.data, &other.data);
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        out.data = vec_sub(&self.field, &self.data, &other.data);
        out
    }

    /// Entrywise `x -> x^{p^k}`.
    pub fn frobenius_entries(&self, k: u32) -> Matrix {
        let mut out = self.clone();
        out.data = vec_frobenius(&self.field, &self.data, k);
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let x = m.get(r, j);
                m.set(r, j, f.mul(inv, x));
            }
            let prow: Vec<Fe> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let a = m.get(i, c);
                    if !a.is_zero() {
                        let cols = m.cols;
                        axpy(f, &mut m.data[i * cols..(i + 1) * cols], f.neg(a), &prow);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Fe>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Fe::ZERO; self.cols];
            v[free] = Fe::ONE;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `A x = b`, if one exists.
    pub fn solve(&self, b: &[Fe]) -> Option<Vec<Fe>> {
        assert_eq!(b.len(), self.rows);
        let f = &self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Fe::ZERO; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols);
        }
        Some(x)
    }

    /// Basis of the column space.
    pub fn image(&self) -> Vec<Vec<Fe>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.col(c)).collect()
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut out = self.clone();
        out.rows += other.rows;
        out.data.extend_from_slice(&other.data);
        out
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols || self.rank() != self.rows {
            return None;
        }
        let cols: Option<Vec<Vec<Fe>>> = (0..self.cols)
            .map(|j| {
                let mut e = vec![Fe::ZERO; self.rows];
                e[j] = Fe::ONE;
                self.solve(&e)
            })
            .collect();
        Some(Matrix::from_cols(&self.field, self.rows, &cols?))
    }

    /// Row-major entries as integer codes.
    pub fn to_int_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.value()).collect())
            .collect()
    }
}

/// A subspace of `F^n` kept as a fully reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Self {
        let mut s = Subspace::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![Fe::ZERO; ambient];
            v[i] = Fe::ONE;
            s.insert(&v);
        }
        s
    }

    pub fn span<'a>(field: &Field, ambient: usize, vs: impl IntoIterator<Item = &'a Vec<Fe>>) -> Self {
        let mut s = Subspace::zero(field, ambient);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after clearing the pivot coordinates.
    pub fn reduce(&self, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(v.len(), self.ambient);
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p];
            if !c.is_zero() {
                axpy(f, &mut w, f.neg(c), row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Fe]) -> bool {
        let f = self.field.clone();
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(w[p]).expect("nonzero");
        let w = vec_scale(&f, inv, &w);
        for row in self.rows.iter_mut() {
            let c = row[p];
            if !c.is_zero() {
                axpy(&f, row, f.neg(c), &w);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, w);
        true
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coords(&self, v: &[Fe]) -> Option<Vec<Fe>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    /// Positions not used as pivots: a monomial complement of the subspace.
    pub fn complement_positions(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Coordinates of the class of `v` in `F^n / self`, in the monomial
    /// complement basis.
    pub fn quotient_coords(&self, v: &[Fe]) -> Vec<Fe> {
        let w = self.reduce(v);
        self.complement_positions().iter().map(|&i| w[i]).collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn intersect_is_zero(&self, other: &Subspace) -> bool {
        let mut s = self.clone();
        other.rows.iter().all(|r| s.insert(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    fn v(xs: &[u32]) -> Vec<Fe> {
        xs.iter().map(|&x| Fe(x)).collect()
    }

    #[test]
    fn kernel_and_solve() {
        let k = f(5);
        let a = Matrix::from_rows(&k, 3, &[v(&[1, 2, 3]), v(&[2, 4, 0])]);
        let ker = a.kernel();
        assert_eq!(ker.len(), 1);
        assert!(vec_is_zero(&a.mul_vec(&ker[0])));
        let b = v(&[1, 0]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        let singular = Matrix::from_rows(&k, 2, &[v(&[1, 1]), v(&[2, 2])]);
        assert!(singular.solve(&v(&[1, 0])).is_none());
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn subspace_quotient() {
        let k = f(3);
        let mut s = Subspace::zero(&k, 3);
        assert!(s.insert(&v(&[1, 1, 0])));
        assert!(!s.insert(&v(&[2, 2, 0])));
        assert!(s.contains(&v(&[2, 2, 0])));
        assert_eq!(s.complement_positions(), vec![1, 2]);
        assert_eq!(s.quotient_coords(&v(&[1, 0, 0])), v(&[2, 0]));
        assert_eq!(s.coords(&v(&[2, 2, 0])), Some(v(&[2])));
    }

    #[test]
    fn product_shapes() {
        let k = f(2);
        let a = Matrix::from_rows(&k, 2, &[v(&[1, 1]), v(&[0, 1])]);
        assert_eq!(a.mul(&a), Matrix::from_rows(&k, 2, &[v(&[1, 0]), v(&[0, 1])]));
        assert_eq!(a.transpose().transpose(), a);
    }
}
