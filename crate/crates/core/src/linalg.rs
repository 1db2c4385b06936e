//! Sparse matrices over exact rings, and rational rank computations.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::qalg::{LaurentFraction, LaurentPoly};
use crate::Error;

/// The coefficient rings matrices are built over.
pub trait Scalar: Clone + PartialEq + Zero + One + fmt::Display + fmt::Debug + Send + Sync {
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

macro_rules! impl_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn add_ref(&self, o: &Self) -> Self {
                self + o
            }
            fn sub_ref(&self, o: &Self) -> Self {
                self - o
            }
            fn mul_ref(&self, o: &Self) -> Self {
                self * o
            }
            fn neg_ref(&self) -> Self {
                -self
            }
        }
    };
}

impl_scalar!(LaurentPoly);
impl_scalar!(LaurentFraction);
impl_scalar!(BigRational);

/// Scalars that can be divided, for elimination.
pub trait Field: Scalar {
    fn inv_ref(&self) -> Self;
}

impl Field for LaurentFraction {
    fn inv_ref(&self) -> Self {
        self.inv().expect("pivot is nonzero")
    }
}

impl Field for BigRational {
    fn inv_ref(&self) -> Self {
        self.recip()
    }
}

/// Row-major sparse matrix; each row keeps its nonzero entries sorted by
/// column.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, cols: n, data: (0..n).map(|i| vec![(i, T::one())]).collect() }
    }

    /// Builds from `(row, col, value)` triples; duplicates are summed.
    pub fn from_triples(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({}, {}) outside {}x{}", r, c, rows, cols);
            let slot = acc[r].entry(c).or_insert_with(T::zero);
            *slot = slot.add_ref(&v);
        }
        Self::from_row_maps(cols, acc)
    }

    fn from_row_maps(cols: usize, acc: Vec<BTreeMap<usize, T>>) -> Self {
        let rows = acc.len();
        let data = acc.into_iter().map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect();
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        match self.data[r].binary_search_by_key(&c, |e| e.0) {
            Ok(i) => self.data[r][i].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn row(&self, r: usize) -> &[(usize, T)] {
        &self.data[r]
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.data.iter().enumerate().all(|(i, row)| row.len() == 1 && row[0].0 == i && row[0].1.is_one())
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut data = Vec::with_capacity(self.rows);
        let mut acc: BTreeMap<usize, T> = BTreeMap::new();
        for row in &self.data {
            acc.clear();
            for (k, a) in row {
                for (j, b) in &rhs.data[*k] {
                    let p = a.mul_ref(b);
                    match acc.get_mut(j) {
                        Some(slot) => *slot = slot.add_ref(&p),
                        None => {
                            acc.insert(*j, p);
                        }
                    }
                }
            }
            data.push(core::mem::take(&mut acc).into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Matrix { rows: self.rows, cols: rhs.cols, data }
    }

    /// Kronecker product; the left factor is the slowest-varying index.
    pub fn kron(&self, rhs: &Matrix<T>) -> Matrix<T> {
        if self.is_identity() && rhs.is_identity() {
            return Matrix::identity(self.rows * rhs.rows);
        }
        let mut data = Vec::with_capacity(self.rows * rhs.rows);
        for arow in &self.data {
            for brow in &rhs.data {
                let mut row = Vec::with_capacity(arow.len() * brow.len());
                for (ja, a) in arow {
                    for (jb, b) in brow {
                        row.push((ja * rhs.cols + jb, a.mul_ref(b)));
                    }
                }
                row.retain(|(_, v): &(usize, T)| !v.is_zero());
                data.push(row);
            }
        }
        Matrix { rows: self.rows * rhs.rows, cols: self.cols * rhs.cols, data }
    }

    pub fn add(&self, rhs: &Matrix<T>) -> Matrix<T> {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &Matrix<T>) -> Matrix<T> {
        self.combine(rhs, true)
    }

    fn combine(&self, rhs: &Matrix<T>, negate: bool) -> Matrix<T> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix sum shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
                    let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
                    if take_a {
                        out.push(a[i].clone());
                        i += 1;
                    } else if take_b {
                        let v = if negate { b[j].1.neg_ref() } else { b[j].1.clone() };
                        out.push((b[j].0, v));
                        j += 1;
                    } else {
                        let v = if negate { a[i].1.sub_ref(&b[j].1) } else { a[i].1.add_ref(&b[j].1) };
                        if !v.is_zero() {
                            out.push((a[i].0, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                out
            })
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &T) -> Matrix<T> {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        if c.is_one() {
            return self.clone();
        }
        self.map(|v| v.mul_ref(c))
    }

    pub fn neg(&self) -> Matrix<T> {
        self.map(|v| v.neg_ref())
    }

    pub fn transpose(&self) -> Matrix<T> {
        let mut data = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Entrywise map into another ring; zero images are dropped.
    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, f(v))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn try_map<U: Scalar, E>(&self, mut f: impl FnMut(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut out = Vec::with_capacity(row.len());
            for (c, v) in row {
                let u = f(v)?;
                if !u.is_zero() {
                    out.push((*c, u));
                }
            }
            data.push(out);
        }
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// First position where two equally shaped matrices differ.
    pub fn first_difference(&self, rhs: &Matrix<T>) -> Option<(usize, usize, T, T)> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Some((self.rows, self.cols, T::zero(), T::zero()));
        }
        for r in 0..self.rows {
            if self.data[r] != rhs.data[r] {
                let mut cols: Vec<usize> = self.data[r].iter().chain(&rhs.data[r]).map(|e| e.0).collect();
                cols.sort_unstable();
                for c in cols {
                    let (a, b) = (self.get(r, c), rhs.get(r, c));
                    if a != b {
                        return Some((r, c, a, b));
                    }
                }
            }
        }
        None
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }
}

impl<T: Field> Matrix<T> {
    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix<T>> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.to_dense();
        let mut inv = Matrix::<T>::identity(n).to_dense();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let p = a[col][col].inv_ref();
            for j in 0..n {
                a[col][j] = a[col][j].mul_ref(&p);
                inv[col][j] = inv[col][j].mul_ref(&p);
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    if !a[col][j].is_zero() {
                        a[r][j] = a[r][j].sub_ref(&f.mul_ref(&a[col][j]));
                    }
                    if !inv[col][j].is_zero() {
                        inv[r][j] = inv[r][j].sub_ref(&f.mul_ref(&inv[col][j]));
                    }
                }
            }
        }
        Some(Matrix::from_triples(
            n,
            n,
            inv.into_iter().enumerate().flat_map(|(r, row)| row.into_iter().enumerate().map(move |(c, v)| (r, c, v))),
        ))
    }
}

impl Matrix<LaurentPoly> {
    pub fn to_fraction(&self) -> Matrix<LaurentFraction> {
        self.map(|v| LaurentFraction::from(v.clone()))
    }
}

impl Matrix<LaurentFraction> {
    /// Converts back to Laurent entries if every entry is integral.
    pub fn to_poly(&self) -> Option<Matrix<LaurentPoly>> {
        self.try_map(|v| v.as_poly().cloned().ok_or(())).ok()
    }

    pub fn is_integral(&self) -> bool {
        self.entries().all(|(_, _, v)| v.is_integral())
    }

    /// Applies `u -> u0` entrywise, `u = q^(1/root)`.
    pub fn specialize(&self, root: u32, u0: &BigRational) -> Result<Matrix<BigRational>, Error> {
        self.try_map(|v| v.specialize(root, u0))
    }
}

/// Rank of a dense rational matrix (row echelon reduction).
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, piv);
        let p = rows[rank][col].recip();
        for j in col..ncols {
            rows[rank][j] = &rows[rank][j] * &p;
        }
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for j in col..ncols {
                if !rows[rank][j].is_zero() {
                    let d = &f * &rows[rank][j];
                    rows[r][j] -= d;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
