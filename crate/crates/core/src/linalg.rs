//! Dense exact linear algebra over a [`FieldSpec`].

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// Row-major dense matrix with exact entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> Mat {
        let mut m = Mat::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        if self.field == FieldSpec::Rationals && (self.has_big_entries() || o.has_big_entries()) {
            return scaled::mul(self, o);
        }
        let mut out = Mat::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let v = &out[(i, j)] + &(a * b);
                    out[(i, j)] = v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        if self.field == FieldSpec::Rationals && (self.has_big_entries() || v.iter().any(|x| x.height() > SMALL_HEIGHT))
        {
            let col = Mat::from_columns(self.field, v.len(), &[v.to_vec()]);
            return scaled::mul(self, &col).data;
        }
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (k, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self[(i, k)].is_zero() {
                        acc = &acc + &(&self[(i, k)] * x);
                    }
                }
                acc
            })
            .collect()
    }

    fn has_big_entries(&self) -> bool {
        self.data.iter().any(|x| x.height() > SMALL_HEIGHT)
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Stacks `self` on top of `o`.
    pub fn vstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Mat {
            field: self.field,
            rows: self.rows + o.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `self` left of `o`.
    pub fn hstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.rows, o.rows);
        let mut m = Mat::zeros(self.field, self.rows, self.cols + o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..o.cols {
                m[(r, self.cols + c)] = o[(r, c)].clone();
            }
        }
        m
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, o: &Mat) -> Mat {
        let mut m = Mat::zeros(self.field, self.rows + o.rows, self.cols + o.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, o);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(r0 + r, c0 + c)] = b[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut m = Mat::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = self[(r0 + r, c0 + c)].clone();
            }
        }
        m
    }

    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m[(r, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.field, rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..self.cols {
                m[(i, c)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        if self.field == FieldSpec::Rationals && self.rows * self.cols >= MODULAR_CUTOFF {
            // A full rank modulo a prime is the rank over Q.
            if crate::modular::rank_mod_mat(self) == Some(self.rows.min(self.cols)) {
                return self.rows.min(self.cols);
            }
            if let Some(k) = crate::modular::kernel_q(self) {
                return self.cols - k.len();
            }
        }
        rref(self).1.len()
    }

    pub fn pow(&self, e: usize) -> Mat {
        let mut r = Mat::identity(self.field, self.rows);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        if self.field == FieldSpec::Rationals && self.has_big_entries() {
            if let Some(inv) = crate::modular::inverse_q(self) {
                return Some(inv);
            }
        }
        let aug = self.hstack(&Mat::identity(self.field, n));
        let (r, piv) = rref(&aug);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t = &t + &self[(i, i)];
        }
        t
    }
}

/// Entries above this many bits switch products to integer arithmetic.
const SMALL_HEIGHT: u64 = 64;

/// Products over Q with denominators cleared per row and per column, so
/// that each entry is one integer dot product and one normalization.
mod scaled {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    use super::Mat;
    use crate::scalar::Scalar;

    /// Integer entries and the common denominator of a line of rationals.
    fn clear(line: impl Iterator<Item = BigRational>) -> (Vec<BigInt>, BigInt) {
        let q: Vec<BigRational> = line.collect();
        let d = q.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints = q.iter().map(|x| x.numer() * (&d / x.denom())).collect();
        (ints, d)
    }

    pub(super) fn mul(a: &Mat, b: &Mat) -> Mat {
        let rows: Vec<(Vec<BigInt>, BigInt)> = (0..a.rows)
            .map(|i| clear((0..a.cols).map(|k| a[(i, k)].to_big_rational())))
            .collect();
        let cols: Vec<(Vec<BigInt>, BigInt)> = (0..b.cols)
            .map(|j| clear((0..b.rows).map(|k| b[(k, j)].to_big_rational())))
            .collect();
        let mut out = Mat::zeros(a.field, a.rows, b.cols);
        for (i, (ri, di)) in rows.iter().enumerate() {
            for (j, (cj, dj)) in cols.iter().enumerate() {
                let mut acc = BigInt::zero();
                for (x, y) in ri.iter().zip(cj) {
                    if !x.is_zero() && !y.is_zero() {
                        acc += x * y;
                    }
                }
                if !acc.is_zero() {
                    out[(i, j)] = Scalar::from_big_rational(BigRational::new(acc, di * dj));
                }
            }
        }
        out
    }
}

/// Matrices with at least this many entries get multimodular kernels over Q.
const MODULAR_CUTOFF: usize = 400;

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let mut a = m.clone();
    let exact_q = a.field == crate::scalar::FieldSpec::Rationals;
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        // Any nonzero pivot gives the same echelon form; over Q the sparsest,
        // smallest row limits coefficient growth.
        let cand = (row..a.rows).filter(|&r| !a[(r, col)].is_zero());
        let p = if exact_q {
            cand.min_by_key(|&r| {
                let nz = (col..a.cols).filter(|&c| !a[(r, c)].is_zero()).count();
                (nz, a[(r, col)].height())
            })
        } else {
            cand.min()
        };
        let Some(p) = p else {
            continue;
        };
        if p != row {
            for c in 0..a.cols {
                a.data.swap(p * a.cols + c, row * a.cols + c);
            }
        }
        let inv = a[(row, col)].inv();
        if !inv.is_one() {
            for c in col..a.cols {
                if !a[(row, c)].is_zero() {
                    a[(row, c)] = &a[(row, c)] * &inv;
                }
            }
        }
        let pivot_row: Vec<(usize, Scalar)> = (col..a.cols)
            .filter(|&c| !a[(row, c)].is_zero())
            .map(|c| (c, a[(row, c)].clone()))
            .collect();
        for r in 0..a.rows {
            if r == row || a[(r, col)].is_zero() {
                continue;
            }
            let f = a[(r, col)].clone();
            for (c, v) in &pivot_row {
                let nv = &a[(r, *c)] - &(&f * v);
                a[(r, *c)] = nv;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Basis of the right null space `{x : m x = 0}` as column vectors. Each
/// basis vector has a single 1 among the free coordinates, so the free
/// coordinates of any null vector are its coordinates in this basis.
pub fn kernel_basis(m: &Mat) -> Vec<Vec<Scalar>> {
    if m.field == FieldSpec::Rationals && m.rows * m.cols >= MODULAR_CUTOFF {
        if let Some(k) = crate::modular::kernel_q(m) {
            return k;
        }
    }
    let (r, piv) = rref(m);
    kernel_from_rref(&r, &piv)
}

pub(crate) fn kernel_from_rref(r: &Mat, piv: &[usize]) -> Vec<Vec<Scalar>> {
    let f = r.field;
    let free = free_columns(r.cols, piv);
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); r.cols];
            v[fc] = f.one();
            for (i, &pc) in piv.iter().enumerate() {
                if !r[(i, fc)].is_zero() {
                    v[pc] = -&r[(i, fc)];
                }
            }
            v
        })
        .collect()
}

pub fn free_columns(cols: usize, piv: &[usize]) -> Vec<usize> {
    let mut is_piv = vec![false; cols];
    for &p in piv {
        is_piv[p] = true;
    }
    (0..cols).filter(|&c| !is_piv[c]).collect()
}

/// Some `x` with `a x = b`, or `None` when inconsistent.
pub fn solve_linear(a: &Mat, b: &Mat) -> Result<Option<Mat>> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "solve_linear: {} rows vs {} rows",
            a.rows, b.rows
        )));
    }
    let aug = a.hstack(b);
    let (r, piv) = rref(&aug);
    if piv.iter().any(|&p| p >= a.cols) {
        return Ok(None);
    }
    let mut x = Mat::zeros(a.field, a.cols, b.cols);
    for (i, &pc) in piv.iter().enumerate() {
        for j in 0..b.cols {
            x[(pc, j)] = r[(i, a.cols + j)].clone();
        }
    }
    Ok(Some(x))
}

/// Column-space basis helper: returns indices of a maximal independent
/// subset of columns, scanning left to right.
pub fn independent_columns(m: &Mat) -> Vec<usize> {
    rref(m).1
}

/// Incremental echelon basis of a subspace of `F^n`, supporting membership
/// tests and coordinate-free reduction.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub field: FieldSpec,
    pub n: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub fn new(field: FieldSpec, n: usize) -> Self {
        Echelon {
            field,
            n,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (c, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    v[c] = &v[c] - &(&f * x);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns `true` if it enlarged the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv();
        let r: Vec<Scalar> = r.iter().map(|x| x * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (c, x) in r.iter().enumerate() {
                    if !x.is_zero() {
                        row[c] = &row[c] - &(&f * x);
                    }
                }
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    /// Stored rows with their pivot columns. Rows are fully reduced: each
    /// pivot column is zero in every other row.
    pub fn pivot_rows(&self) -> &[(usize, Vec<Scalar>)] {
        &self.rows
    }
}

/// Matrix whose columns are a basis of the column space of `m`.
pub fn column_basis(m: &Mat) -> Mat {
    m.select_columns(&independent_columns(m))
}

/// Matrix whose columns are a basis of `{x : m x = 0}`.
pub fn kernel_matrix(m: &Mat) -> Mat {
    Mat::from_columns(m.field, m.cols, &kernel_basis(m))
}

/// Standard basis vectors completing the columns of `sub` (full column
/// rank) to a basis of `F^n`, as columns.
pub fn complement_columns(field: FieldSpec, n: usize, sub: &Mat) -> Mat {
    let mut ech = Echelon::new(field, n);
    for c in 0..sub.cols {
        ech.insert(&sub.column(c));
    }
    let mut cols = Vec::new();
    for i in 0..n {
        let mut e = vec![field.zero(); n];
        e[i] = field.one();
        if ech.insert(&e) {
            cols.push(e);
        }
    }
    Mat::from_columns(field, n, &cols)
}

/// Basis of the intersection of the column spaces of `a` and `b`.
pub fn intersect_columns(a: &Mat, b: &Mat) -> Mat {
    let k = kernel_basis(&a.hstack(&b.scale(&a.field.from_i64(-1))));
    let coeffs: Vec<Vec<Scalar>> = k.into_iter().map(|v| v[..a.cols].to_vec()).collect();
    let m = Mat::from_columns(a.field, a.cols, &coeffs);
    column_basis(&a.mul(&m))
}

impl Mat {
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        if self.rows == 0 {
            return true;
        }
        let mut p = self.clone();
        let mut r = p.rank();
        loop {
            if r == 0 {
                return true;
            }
            p = p.mul(self);
            let nr = p.rank();
            if nr == r {
                return false;
            }
            r = nr;
        }
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar], field: FieldSpec) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

/// Coordinates with respect to a fixed list of independent vectors.
#[derive(Clone, Debug)]
pub struct Coordinates {
    basis: Mat,
    rows: Vec<usize>,
    inv: Mat,
}

impl Coordinates {
    /// `vectors` must be linearly independent, each of length `n`.
    pub fn new(field: FieldSpec, n: usize, vectors: &[Vec<Scalar>]) -> Coordinates {
        let basis = Mat::from_columns(field, n, vectors);
        let t = basis.transpose();
        let fast = if t.has_big_entries() {
            crate::modular::pivots_mod(&t)
        } else {
            None
        };
        let rows = match fast {
            Some(p) if p.len() == vectors.len() => p,
            _ => independent_columns(&t),
        };
        assert_eq!(rows.len(), vectors.len(), "coordinate basis is not independent");
        let inv = basis.select_rows(&rows).inverse().expect("independent rows");
        Coordinates { basis, rows, inv }
    }

    pub fn len(&self) -> usize {
        self.basis.cols
    }

    pub fn is_empty(&self) -> bool {
        self.basis.cols == 0
    }

    /// Coordinates of `v`, which must lie in the span; unchecked.
    pub fn of_member(&self, v: &[Scalar]) -> Vec<Scalar> {
        let sel: Vec<Scalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        self.inv.mul_vec(&sel)
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let sel: Vec<Scalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inv.mul_vec(&sel);
        (self.basis.mul_vec(&c) == v).then_some(c)
    }
}
