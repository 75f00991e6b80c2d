//! Smith normal form over the integers.
//!
//! `snf` returns unimodular `U`, `V` (and their inverses) with `U·M·V = D`,
//! where `D` is diagonal and `d_1 | d_2 | …`. All transforms are tracked
//! exactly; the inverses make it cheap to move between the original and
//! the diagonal coordinates.

use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, Integer, Matrix};

#[derive(Clone, Debug)]
pub struct SmithForm {
    pub left: IntMatrix,
    pub left_inv: IntMatrix,
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
    pub right_inv: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order; each divides the next.
    pub fn invariant_factors(&self) -> Vec<Integer> {
        (0..self.rank).map(|i| self.diagonal[(i, i)].clone()).collect()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    /// row[t] += f * row[s]
    fn row_add(&mut self, t: usize, s: usize, f: &Integer) {
        self.a.add_row_multiple(t, s, f);
        self.u.add_row_multiple(t, s, f);
        self.u_inv.add_col_multiple(s, t, &-f);
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn row_negate(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// col[t] += f * col[s]
    fn col_add(&mut self, t: usize, s: usize, f: &Integer) {
        self.a.add_col_multiple(t, s, f);
        self.v.add_col_multiple(t, s, f);
        self.v_inv.add_row_multiple(s, t, &-f);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.a.rows() {
            for c in t..self.a.cols() {
                let e = &self.a[(r, c)];
                if e.is_zero() {
                    continue;
                }
                match best {
                    Some((br, bc)) if self.a[(br, bc)].abs() <= e.abs() => {}
                    _ => best = Some((r, c)),
                }
            }
        }
        best
    }

    /// Smallest nonzero entry in column t (rows ≥ t) or row t (cols ≥ t).
    fn smallest_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_abs: Option<Integer> = None;
        let mut consider = |r: usize, c: usize, e: &Integer| {
            if e.is_zero() {
                return;
            }
            let abs = e.abs();
            if best_abs.as_ref().is_none_or(|b| abs < *b) {
                best_abs = Some(abs);
                best = (r, c);
            }
        };
        for r in t..self.a.rows() {
            consider(r, t, &self.a[(r, t)]);
        }
        for c in t..self.a.cols() {
            consider(t, c, &self.a[(t, c)]);
        }
        best
    }

    fn place(&mut self, t: usize, (r, c): (usize, usize)) {
        self.row_swap(t, r);
        self.col_swap(t, c);
    }

    /// Clears row and column `t` outside the pivot. Returns false if some
    /// remainder survived and the pivot has to be replaced.
    fn clear_cross(&mut self, t: usize) -> bool {
        let mut clean = true;
        let pivot = self.a[(t, t)].clone();
        for r in t + 1..self.a.rows() {
            if self.a[(r, t)].is_zero() {
                continue;
            }
            let q = &self.a[(r, t)] / &pivot;
            self.row_add(r, t, &-q);
            if !self.a[(r, t)].is_zero() {
                clean = false;
            }
        }
        for c in t + 1..self.a.cols() {
            if self.a[(t, c)].is_zero() {
                continue;
            }
            let q = &self.a[(t, c)] / &pivot;
            self.col_add(c, t, &-q);
            if !self.a[(t, c)].is_zero() {
                clean = false;
            }
        }
        clean
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let pivot = &self.a[(t, t)];
        for r in t + 1..self.a.rows() {
            for c in t + 1..self.a.cols() {
                if !self.a[(r, c)].is_multiple_of(pivot) {
                    return Some(r);
                }
            }
        }
        None
    }
}

pub fn snf(m: &IntMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut red = Reducer {
        a: m.clone(),
        u: Matrix::identity(rows),
        u_inv: Matrix::identity(rows),
        v: Matrix::identity(cols),
        v_inv: Matrix::identity(cols),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some(pos) = red.smallest_in_block(t) else {
            break;
        };
        red.place(t, pos);
        loop {
            if !red.clear_cross(t) {
                let pos = red.smallest_in_cross(t);
                red.place(t, pos);
                continue;
            }
            match red.non_divisible_row(t) {
                Some(r) => red.row_add(t, r, &Integer::one()),
                None => break,
            }
        }
        if red.a[(t, t)].is_negative() {
            red.row_negate(t);
        }
        t += 1;
    }
    SmithForm {
        left: red.u,
        left_inv: red.u_inv,
        diagonal: red.a,
        right: red.v,
        right_inv: red.v_inv,
        rank: t,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn im(rows: usize, cols: usize, v: &[i64]) -> IntMatrix {
        Matrix::from_entries(rows, cols, v.iter().map(|&x| Integer::from(x)).collect()).unwrap()
    }

    fn check(m: &IntMatrix) -> SmithForm {
        let s = snf(m);
        assert_eq!(s.left.mul_mat(m).mul_mat(&s.right), s.diagonal);
        assert_eq!(s.left.mul_mat(&s.left_inv), Matrix::identity(m.rows()));
        assert_eq!(s.right.mul_mat(&s.right_inv), Matrix::identity(m.cols()));
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if r != c {
                    assert!(s.diagonal[(r, c)].is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&Matrix::identity(3));
        assert_eq!(s.diagonal, Matrix::identity(3));
        assert_eq!(s.left, Matrix::identity(3));
        assert_eq!(s.right, Matrix::identity(3));
    }

    #[test]
    fn zero_matrix() {
        let s = check(&Matrix::zeros(2, 3));
        assert!(s.diagonal.is_zero());
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn circle_boundary() {
        // columns (01), (12), (02); rows 0, 1, 2
        let d1 = im(3, 3, &[-1, 0, -1, 1, -1, 0, 0, 1, 1]);
        let s = check(&d1);
        assert_eq!(s.invariant_factors(), vec![Integer::from(1), Integer::from(1)]);
    }

    #[test]
    fn divisibility_is_enforced() {
        let s = check(&im(2, 2, &[2, 0, 0, 3]));
        assert_eq!(s.invariant_factors(), vec![Integer::from(1), Integer::from(6)]);
        // 2x2 minors -4, -6, 0 have gcd 2
        let s = check(&im(3, 2, &[4, 6, 6, 9, 2, 2]));
        assert_eq!(s.invariant_factors(), vec![Integer::from(1), Integer::from(2)]);
    }

    #[test]
    fn empty_dimensions() {
        check(&Matrix::zeros(0, 4));
        check(&Matrix::zeros(3, 0));
    }
}
