//! Dense row-major matrices over exact scalars.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision integer.
pub type Integer = BigInt;
/// Exact rational with normalized sign and reduced fraction.
pub type Rational = BigRational;

/// Value-level bounds shared by the dense kernels below. Reference
/// arithmetic is spelled out at each use site.
pub trait Scalar: Clone + PartialEq + Zero + One + fmt::Debug {}

impl<T: Clone + PartialEq + Zero + One + fmt::Debug> Scalar for T {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type IntMatrix = Matrix<Integer>;
pub type RatMatrix = Matrix<Rational>;

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.entries[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from row-major entries. Returns `None` when the
    /// entry count is not `rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<T>) -> Option<Self> {
        (entries.len() == rows * cols).then_some(Matrix { rows, cols, entries })
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }
}

impl<T: Clone> Matrix<T> {
    /// Rows given as vectors of equal length. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, entries }
    }

    /// Columns given as vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        for c in columns {
            assert_eq!(c.len(), rows, "ragged columns");
        }
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }
}

impl<T: Scalar> Matrix<T>
where
    for<'a> &'a T: Add<&'a T, Output = T>
        + Sub<&'a T, Output = T>
        + Mul<&'a T, Output = T>
        + Neg<Output = T>,
{
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        let idx = r * other.cols + c;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| dot(self.row(r), v))
            .collect()
    }

    /// `v^T · self`, i.e. a linear functional pulled back through the matrix.
    pub fn vec_mul(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.rows, v.len(), "dimension mismatch in vector-matrix product");
        let mut out = vec![T::zero(); self.cols];
        for (r, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (c, slot) in out.iter_mut().enumerate() {
                let e = &self[(r, c)];
                if !e.is_zero() {
                    *slot = &*slot + &(coeff * e);
                }
            }
        }
        out
    }

    /// `row[target] += factor * row[source]`
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let s = &self.entries[source * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let delta = factor * s;
            let t = &mut self.entries[target * self.cols + c];
            *t = &*t + &delta;
        }
    }

    /// `col[target] += factor * col[source]`
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let s = &self.entries[r * self.cols + source];
            if s.is_zero() {
                continue;
            }
            let delta = factor * s;
            let t = &mut self.entries[r * self.cols + target];
            *t = &*t + &delta;
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let e = &mut self.entries[r * self.cols + c];
            *e = -&*e;
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let e = &mut self.entries[r * self.cols + c];
            *e = -&*e;
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T
where
    for<'a> &'a T: Add<&'a T, Output = T>
        + Sub<&'a T, Output = T>
        + Mul<&'a T, Output = T>
        + Neg<Output = T>,
{
    assert_eq!(a.len(), b.len(), "dot product of unequal lengths");
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

pub fn to_rational(m: &IntMatrix) -> RatMatrix {
    m.map(|x| Rational::from_integer(x.clone()))
}

pub fn int_vec_to_rational(v: &[Integer]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// Returns the integer vector if every entry is integral.
pub fn rational_vec_to_int(v: &[Rational]) -> Option<Vec<Integer>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

pub fn add_vec<T: Scalar>(a: &[T], b: &[T]) -> Vec<T>
where
    for<'a> &'a T: Add<&'a T, Output = T>
        + Sub<&'a T, Output = T>
        + Mul<&'a T, Output = T>
        + Neg<Output = T>,
{
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec<T: Scalar>(a: &[T], b: &[T]) -> Vec<T>
where
    for<'a> &'a T: Add<&'a T, Output = T>
        + Sub<&'a T, Output = T>
        + Mul<&'a T, Output = T>
        + Neg<Output = T>,
{
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec<T: Scalar>(s: &T, a: &[T]) -> Vec<T>
where
    for<'a> &'a T: Add<&'a T, Output = T>
        + Sub<&'a T, Output = T>
        + Mul<&'a T, Output = T>
        + Neg<Output = T>,
{
    a.iter().map(|x| s * x).collect()
}

/// Least common multiple of all denominators (1 for an empty slice).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Integer {
    use num_integer::Integer as _;
    values
        .into_iter()
        .fold(Integer::one(), |acc, x| acc.lcm(x.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: usize, cols: usize, v: &[i64]) -> IntMatrix {
        Matrix::from_entries(rows, cols, v.iter().map(|&x| Integer::from(x)).collect()).unwrap()
    }

    #[test]
    fn product_and_transpose() {
        let a = im(2, 3, &[1, 2, 3, 4, 5, 6]);
        let b = a.transpose();
        let p = a.mul_mat(&b);
        assert_eq!(p, im(2, 2, &[14, 32, 32, 77]));
        let v: Vec<Integer> = [1, 0, -1].iter().map(|&x| Integer::from(x)).collect();
        assert_eq!(a.mul_vec(&v), vec![Integer::from(-2), Integer::from(-2)]);
        let w: Vec<Integer> = [1, 1].iter().map(|&x| Integer::from(x)).collect();
        assert_eq!(a.vec_mul(&w), b.mul_vec(&w));
    }

    #[test]
    fn rejects_wrong_entry_count() {
        assert!(Matrix::from_entries(2, 2, vec![Integer::one(); 3]).is_none());
    }

    #[test]
    fn empty_shapes_multiply() {
        let a: IntMatrix = Matrix::zeros(0, 3);
        let b: IntMatrix = Matrix::zeros(3, 2);
        assert_eq!(a.mul_mat(&b).rows(), 0);
        let c: IntMatrix = Matrix::zeros(2, 0);
        let d: IntMatrix = Matrix::zeros(0, 2);
        assert!(c.mul_mat(&d).is_zero());
    }
}
