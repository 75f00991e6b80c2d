//! Exact linear solvers over ℤ and ℚ.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::matrix::{int_vec_to_rational, to_rational, IntMatrix, Integer, RatMatrix, Rational};
use super::snf::{snf, SmithForm};

/// Why an integer system `A·x = b` has no solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegerObstruction {
    /// `functional·A = 0` but `functional·b ≠ 0`.
    Inconsistent { functional: Vec<Rational> },
    /// `functional·A` is integral but `functional·b` is not.
    Residue { functional: Vec<Rational> },
}

/// A Smith decomposition kept around so that repeated right-hand sides
/// cost two matrix-vector products each.
#[derive(Clone, Debug)]
pub struct IntegerSolver {
    matrix: IntMatrix,
    smith: SmithForm,
}

impl IntegerSolver {
    pub fn new(matrix: &IntMatrix) -> Self {
        IntegerSolver {
            matrix: matrix.clone(),
            smith: snf(matrix),
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn smith(&self) -> &SmithForm {
        &self.smith
    }

    pub fn rank(&self) -> usize {
        self.smith.rank
    }

    /// Integer solution for a rational right-hand side, or a functional
    /// certifying that none exists.
    pub fn solve_rational(&self, b: &[Rational]) -> Result<Vec<Integer>, IntegerObstruction> {
        assert_eq!(b.len(), self.matrix.rows(), "right-hand side length");
        let u = to_rational(&self.smith.left);
        let y = u.mul_vec(b);
        let mut w = vec![Integer::zero(); self.matrix.cols()];
        for (i, yi) in y.iter().enumerate() {
            if i >= self.smith.rank {
                if !yi.is_zero() {
                    return Err(IntegerObstruction::Inconsistent {
                        functional: u.row(i).to_vec(),
                    });
                }
                continue;
            }
            let d = Rational::from_integer(self.smith.diagonal[(i, i)].clone());
            let q = yi / &d;
            if !q.is_integer() {
                let functional = u.row(i).iter().map(|x| x / &d).collect();
                return Err(IntegerObstruction::Residue { functional });
            }
            w[i] = q.to_integer();
        }
        Ok(self.smith.right.mul_vec(&w))
    }

    pub fn solve(&self, b: &[Integer]) -> Option<Vec<Integer>> {
        self.solve_rational(&int_vec_to_rational(b)).ok()
    }
}

/// Solves `A·x = b` over ℤ; `None` when no integer solution exists.
pub fn integer_solve(a: &IntMatrix, b: &[Integer]) -> Option<Vec<Integer>> {
    IntegerSolver::new(a).solve(b)
}

/// A ℤ-basis of `{x ∈ ℤ^n : A·x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<Integer>> {
    let s = snf(a);
    (s.rank..a.cols()).map(|c| s.right.column(c)).collect()
}

/// A ℤ-basis of the lattice spanned by the columns of `gens`.
pub fn lattice_basis(gens: &IntMatrix) -> Vec<Vec<Integer>> {
    let s = snf(gens);
    let gv = gens.mul_mat(&s.right);
    (0..s.rank).map(|c| gv.column(c)).collect()
}

/// A ℤ-basis of `ℤ^m ∩ span_ℚ(columns of A)`: the integer points of the
/// rational column space.
pub fn saturated_column_lattice(a: &IntMatrix) -> Vec<Vec<Integer>> {
    let rows: Vec<Vec<Integer>> = RowReduction::from_int(a)
        .left_kernel()
        .into_iter()
        .map(|row| {
            let d = Rational::from_integer(super::matrix::common_denominator(row.iter()));
            row.iter().map(|x| (x * &d).to_integer()).collect()
        })
        .collect();
    integer_kernel(&super::matrix::Matrix::from_rows(a.rows(), &rows))
}

/// Reduced row echelon form together with the row transform that
/// produced it: `transform · matrix = rref`.
#[derive(Clone, Debug)]
pub struct RowReduction {
    rref: RatMatrix,
    transform: RatMatrix,
    pivots: Vec<usize>,
}

impl RowReduction {
    pub fn new(matrix: &RatMatrix) -> Self {
        let rows = matrix.rows();
        let cols = matrix.cols();
        let mut r = matrix.clone();
        let mut e = RatMatrix::identity(rows);
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..cols {
            if next == rows {
                break;
            }
            let Some(p) = (next..rows).find(|&i| !r[(i, c)].is_zero()) else {
                continue;
            };
            r.swap_rows(next, p);
            e.swap_rows(next, p);
            let inv = r[(next, c)].recip();
            scale_row(&mut r, next, &inv);
            scale_row(&mut e, next, &inv);
            for i in 0..rows {
                if i == next || r[(i, c)].is_zero() {
                    continue;
                }
                let f = -r[(i, c)].clone();
                r.add_row_multiple(i, next, &f);
                e.add_row_multiple(i, next, &f);
            }
            pivots.push(c);
            next += 1;
        }
        RowReduction {
            rref: r,
            transform: e,
            pivots,
        }
    }

    pub fn from_int(matrix: &IntMatrix) -> Self {
        Self::new(&to_rational(matrix))
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rref(&self) -> &RatMatrix {
        &self.rref
    }

    /// Solution with every free variable set to zero.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rref.rows(), "right-hand side length");
        let y = self.transform.mul_vec(b);
        if y[self.rank()..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.rref.cols()];
        for (i, &c) in self.pivots.iter().enumerate() {
            x[c] = y[i].clone();
        }
        Some(x)
    }

    /// Basis of `{f : f·A = 0}`; any of these not vanishing on `b`
    /// certifies that `A·x = b` is inconsistent.
    pub fn left_kernel(&self) -> Vec<Vec<Rational>> {
        (self.rank()..self.rref.rows())
            .map(|i| self.transform.row(i).to_vec())
            .collect()
    }

    /// Basis of `{x : A·x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let cols = self.rref.cols();
        let mut out = Vec::new();
        for free in (0..cols).filter(|c| !self.pivots.contains(c)) {
            let mut x = vec![Rational::zero(); cols];
            x[free] = Rational::one();
            for (i, &p) in self.pivots.iter().enumerate() {
                x[p] = -self.rref[(i, free)].clone();
            }
            out.push(x);
        }
        out
    }
}

fn scale_row(m: &mut RatMatrix, r: usize, f: &Rational) {
    for c in 0..m.cols() {
        let v = &m[(r, c)] * f;
        m[(r, c)] = v;
    }
}

/// Solves `A·x = b` over ℚ; `None` when the system is inconsistent.
pub fn rational_solve(a: &RatMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    RowReduction::new(a).solve(b)
}

pub fn rational_rank(a: &RatMatrix) -> usize {
    RowReduction::new(a).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::matrix::{dot, Matrix};

    fn int(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    fn rat(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter()
            .map(|&(p, q)| Rational::new(Integer::from(p), Integer::from(q)))
            .collect()
    }

    fn im(rows: usize, cols: usize, v: &[i64]) -> IntMatrix {
        Matrix::from_entries(rows, cols, int(v)).unwrap()
    }

    #[test]
    fn integer_parity() {
        let a = im(1, 1, &[2]);
        assert_eq!(integer_solve(&a, &int(&[4])), Some(int(&[2])));
        assert_eq!(integer_solve(&a, &int(&[3])), None);
        match IntegerSolver::new(&a).solve_rational(&rat(&[(3, 1)])) {
            Err(IntegerObstruction::Residue { functional }) => {
                assert_eq!(functional, rat(&[(1, 2)]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn inconsistent_integer_system_yields_functional() {
        let a = im(2, 1, &[1, 1]);
        let b = int(&[1, 2]);
        match IntegerSolver::new(&a).solve_rational(&int_vec_to_rational(&b)) {
            Err(IntegerObstruction::Inconsistent { functional }) => {
                let fa = to_rational(&a).vec_mul(&functional);
                assert!(fa.iter().all(Zero::is_zero));
                assert!(!dot(&functional, &int_vec_to_rational(&b)).is_zero());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rational_cases() {
        let id: RatMatrix = Matrix::identity(3);
        let b = rat(&[(1, 2), (-3, 1), (5, 7)]);
        assert_eq!(rational_solve(&id, &b), Some(b.clone()));

        let a = to_rational(&im(2, 2, &[1, 1, 2, 2]));
        assert_eq!(rational_solve(&a, &rat(&[(1, 1), (3, 1)])), None);
        let x = rational_solve(&a, &rat(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(&x[0] + &x[1], Rational::one());
    }

    #[test]
    fn kernels() {
        let a = im(1, 3, &[1, 1, 1]);
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
        let rr = RowReduction::from_int(&a);
        assert_eq!(rr.kernel().len(), 2);
        assert_eq!(rr.left_kernel().len(), 0);
    }

    #[test]
    fn lattice_basis_drops_dependent_generators() {
        // (2,0), (0,2), (2,2): rank 2, index 4 in ℤ²
        let g = im(2, 3, &[2, 0, 2, 0, 2, 2]);
        let b = lattice_basis(&g);
        assert_eq!(b.len(), 2);
        let det = &b[0][0] * &b[1][1] - &b[0][1] * &b[1][0];
        assert_eq!(num_traits::Signed::abs(&det), Integer::from(4));
    }
}
