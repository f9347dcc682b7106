//! Exact rational linear algebra: dense matrices, multilinear tensors and
//! the elimination routines every axiom check reduces to.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// A column vector of rationals.
pub type Vector = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`; panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn basis_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self[(r, c)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from a flat row-major buffer.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::shape(alloc::format!(
                "matrix {}x{} needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Integer entries, one inner slice per row. Panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::from_fn(r, c, |i, j| int(rows[i][j]))
    }

    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
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

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        (0..k).fold(Matrix::identity(self.rows), |acc, _| &acc * self)
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Self {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for c in col..m.cols {
                let v = &m[(row, c)] * &inv;
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(row, c)].is_zero() {
                        continue;
                    }
                    let v = &factor * &m[(row, c)];
                    m[(r, c)] -= v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank together with a basis of the right kernel `{v : M v = 0}`.
    ///
    /// Kernel vectors are the standard free-variable basis read off the
    /// reduced echelon form, so they are linearly independent by
    /// construction.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vector>) {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let kernel = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = zero_vec(self.cols);
                v[free] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, free)].clone();
                }
                v
            })
            .collect();
        (pivots.len(), kernel)
    }

    pub fn kernel(&self) -> Vec<Vector> {
        self.rank_and_kernel().1
    }

    /// Solves `M x = b`; `Ok(None)` iff `b` is outside the column space.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::shape(alloc::format!(
                "right-hand side has length {}, matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let augmented = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = zero_vec(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red[(i, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let augmented = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (red, pivots) = augmented.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| red[(r, n + c)].clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// Decides whether `target` is a rational combination of `vectors`.
pub fn in_span(vectors: &[Vector], target: &[Rational]) -> bool {
    if is_zero_vec(target) {
        return true;
    }
    if vectors.is_empty() {
        return false;
    }
    let m = Matrix::from_columns(target.len(), vectors);
    matches!(m.solve(target), Ok(Some(_)))
}

/// Rank of a list of vectors of common length `len`.
pub fn span_rank(len: usize, vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        0
    } else {
        Matrix::from_columns(len, vectors).rank()
    }
}

/// A basis of the intersection of two subspaces given by spanning sets.
pub fn intersect_spans(len: usize, u: &[Vector], w: &[Vector]) -> Vec<Vector> {
    if u.is_empty() || w.is_empty() {
        return Vec::new();
    }
    // Kernel of [U | -W] gives the coefficient pairs with U a = W b.
    let stacked = Matrix::from_fn(len, u.len() + w.len(), |r, c| {
        if c < u.len() {
            u[c][r].clone()
        } else {
            -w[c - u.len()][r].clone()
        }
    });
    let mut out: Vec<Vector> = Vec::new();
    for coeffs in stacked.kernel() {
        let mut v = zero_vec(len);
        for (a, col) in coeffs[..u.len()].iter().zip(u) {
            axpy(&mut v, a, col);
        }
        if !is_zero_vec(&v) && !in_span(&out, &v) {
            out.push(v);
        }
    }
    out
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: add_vec(&self.data, &rhs.data),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: sub_vec(&self.data, &rhs.data),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&int(-1))
    }
}

/// Multilinear map `V_1 x ... x V_k -> W` stored as a dense row-major
/// array; the last axis is the output coordinate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<Rational>,
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor{:?} [", self.shape)?;
        for (i, x) in self.data.iter().enumerate() {
            if !x.is_zero() {
                write!(f, " {:?}={}", self.unflatten(i), x)?;
            }
        }
        write!(f, " ]")
    }
}

impl Tensor {
    /// `shape` lists the input dimensions followed by the output dimension.
    pub fn zeros(shape: &[usize]) -> Self {
        assert!(!shape.is_empty(), "tensor needs an output axis");
        Tensor {
            shape: shape.to_vec(),
            data: vec![Rational::zero(); shape.iter().product()],
        }
    }

    pub fn from_row_major(shape: &[usize], data: Vec<Rational>) -> Result<Self> {
        let expected: usize = shape.iter().product();
        if shape.is_empty() || data.len() != expected {
            return Err(Error::shape(alloc::format!(
                "tensor of shape {:?} needs {} entries, got {}",
                shape,
                expected,
                data.len()
            )));
        }
        Ok(Tensor {
            shape: shape.to_vec(),
            data,
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    /// Number of inputs.
    pub fn arity(&self) -> usize {
        self.shape.len() - 1
    }

    pub fn input_dims(&self) -> &[usize] {
        &self.shape[..self.arity()]
    }

    pub fn output_dim(&self) -> usize {
        self.shape[self.arity()]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn offset(&self, inputs: &[usize]) -> usize {
        debug_assert_eq!(inputs.len(), self.arity());
        let mut off = 0;
        for (i, &idx) in inputs.iter().enumerate() {
            debug_assert!(idx < self.shape[i]);
            off = off * self.shape[i] + idx;
        }
        off * self.output_dim()
    }

    fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.shape.len()];
        for (slot, &d) in idx.iter_mut().zip(&self.shape).rev() {
            *slot = flat % d;
            flat /= d;
        }
        idx
    }

    /// Output vector on the given basis inputs.
    pub fn fiber(&self, inputs: &[usize]) -> &[Rational] {
        let off = self.offset(inputs);
        &self.data[off..off + self.output_dim()]
    }

    pub fn fiber_mut(&mut self, inputs: &[usize]) -> &mut [Rational] {
        let off = self.offset(inputs);
        let w = self.output_dim();
        &mut self.data[off..off + w]
    }

    pub fn set_fiber(&mut self, inputs: &[usize], value: &[Rational]) {
        self.fiber_mut(inputs).clone_from_slice(value);
    }

    /// Entry with the output coordinate given last.
    pub fn get(&self, index: &[usize]) -> &Rational {
        let (inputs, out) = index.split_at(self.arity());
        &self.fiber(inputs)[out[0]]
    }

    pub fn get_mut(&mut self, index: &[usize]) -> &mut Rational {
        let (inputs, out) = index.split_at(self.arity());
        &mut self.fiber_mut(inputs)[out[0]]
    }

    /// All input index tuples in lexicographic order.
    pub fn input_tuples(&self) -> Vec<Vec<usize>> {
        index_tuples(self.input_dims())
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn apply(&self, args: &[&[Rational]]) -> Vector {
        assert_eq!(args.len(), self.arity(), "wrong number of tensor arguments");
        for (a, &d) in args.iter().zip(self.input_dims()) {
            assert_eq!(a.len(), d, "tensor argument has wrong dimension");
        }
        let mut out = zero_vec(self.output_dim());
        let mut idx = vec![0usize; self.arity()];
        self.apply_rec(args, 0, &Rational::one(), &mut idx, &mut out);
        out
    }

    fn apply_rec(
        &self,
        args: &[&[Rational]],
        depth: usize,
        coeff: &Rational,
        idx: &mut Vec<usize>,
        out: &mut Vector,
    ) {
        if depth == args.len() {
            axpy(out, coeff, self.fiber(idx));
            return;
        }
        for (i, x) in args[depth].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            idx[depth] = i;
            self.apply_rec(args, depth + 1, &(coeff * x), idx, out);
        }
    }

    /// Applies a linear map to the output axis.
    pub fn map_output(&self, m: &Matrix) -> Tensor {
        assert_eq!(m.cols(), self.output_dim());
        let mut shape = self.shape.clone();
        *shape.last_mut().unwrap() = m.rows();
        let mut out = Tensor::zeros(&shape);
        for t in self.input_tuples() {
            let v = m.mul_vec(self.fiber(&t));
            out.set_fiber(&t, &v);
        }
        out
    }
}

/// Every tuple `(i_1, ..., i_k)` with `i_j < dims[j]`, lexicographically.
pub fn index_tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..d).map(move |i| {
                    let mut t = prefix.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Strictly increasing `k`-tuples drawn from `0..n`.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Sorts `tuple` and returns the permutation sign, or `None` if an index
/// repeats.
pub fn sort_with_sign(tuple: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut t = tuple.to_vec();
    let mut sign = 1;
    for i in 0..t.len() {
        for j in 0..t.len() - 1 - i {
            if t[j] > t[j + 1] {
                t.swap(j, j + 1);
                sign = -sign;
            } else if t[j] == t[j + 1] {
                return None;
            }
        }
    }
    if t.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((t, sign))
}
