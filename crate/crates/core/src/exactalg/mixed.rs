//! Subgroups of ℚ^n of the form `ℤ·L + ℚ·W`.
//!
//! Membership is decided in two phases. The ℚ-span of `W` is projected
//! away with an integral basis `P` of its annihilator; what remains is the
//! integer system `(P·L)·z = P·x`, solved through a Smith form. A solution
//! `z` leaves a residual `x − L·z` inside `span(W)`, which is then solved
//! over ℚ. A failure in the first phase produces a functional `g` with
//! `g·W = 0`, `g·L ⊂ ℤ` and `g·x ∉ ℤ`, which anyone can re-check.

use alloc::vec::Vec;

use num_traits::Zero;

use super::matrix::{
    common_denominator, dot, int_vec_to_rational, sub_vec, Integer, Matrix, RatMatrix, Rational,
};
use super::solve::{IntegerObstruction, IntegerSolver, RowReduction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedSubgroup {
    ambient_dim: usize,
    lattice_gens: Vec<Vec<Rational>>,
    space_gens: Vec<Vec<Rational>>,
}

/// Coefficients expressing a member in terms of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub lattice: Vec<Integer>,
    pub space: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Vanishes on every generator but not on the element.
    Functional(Vec<Rational>),
    /// Vanishes on the space part, integral on the lattice part,
    /// non-integral on the element.
    Residue(Vec<Rational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member(Witness),
    NotMember(Certificate),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }

    pub fn witness(self) -> Option<Witness> {
        match self {
            Membership::Member(w) => Some(w),
            Membership::NotMember(_) => None,
        }
    }
}

impl MixedSubgroup {
    pub fn new(ambient_dim: usize) -> Self {
        MixedSubgroup {
            ambient_dim,
            lattice_gens: Vec::new(),
            space_gens: Vec::new(),
        }
    }

    pub fn with_lattice(mut self, gens: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        for g in gens {
            assert_eq!(g.len(), self.ambient_dim, "lattice generator length");
            self.lattice_gens.push(g);
        }
        self
    }

    pub fn with_integer_lattice(self, gens: impl IntoIterator<Item = Vec<Integer>>) -> Self {
        self.with_lattice(gens.into_iter().map(|g| int_vec_to_rational(&g)))
    }

    pub fn with_space(mut self, gens: impl IntoIterator<Item = Vec<Rational>>) -> Self {
        for g in gens {
            assert_eq!(g.len(), self.ambient_dim, "space generator length");
            self.space_gens.push(g);
        }
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn lattice_gens(&self) -> &[Vec<Rational>] {
        &self.lattice_gens
    }

    pub fn space_gens(&self) -> &[Vec<Rational>] {
        &self.space_gens
    }

    /// `Σ z_i·L_i + Σ q_j·W_j`
    pub fn combine(&self, lattice: &[Integer], space: &[Rational]) -> Vec<Rational> {
        assert_eq!(lattice.len(), self.lattice_gens.len());
        assert_eq!(space.len(), self.space_gens.len());
        let mut out = alloc::vec![Rational::zero(); self.ambient_dim];
        for (z, g) in lattice.iter().zip(&self.lattice_gens) {
            if z.is_zero() {
                continue;
            }
            let z = Rational::from_integer(z.clone());
            for (o, x) in out.iter_mut().zip(g) {
                *o = &*o + &(&z * x);
            }
        }
        for (q, g) in space.iter().zip(&self.space_gens) {
            if q.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(g) {
                *o = &*o + &(q * x);
            }
        }
        out
    }

    pub fn prepare(&self) -> PreparedSubgroup {
        PreparedSubgroup::new(self.clone())
    }

    /// One-shot membership; use [`PreparedSubgroup`] for repeated queries.
    pub fn membership(&self, x: &[Rational]) -> Membership {
        self.prepare().membership(x)
    }
}

impl Witness {
    pub fn verifies(&self, group: &MixedSubgroup, x: &[Rational]) -> bool {
        self.lattice.len() == group.lattice_gens.len()
            && self.space.len() == group.space_gens.len()
            && group.combine(&self.lattice, &self.space) == x
    }
}

impl Certificate {
    pub fn functional(&self) -> &[Rational] {
        match self {
            Certificate::Functional(g) | Certificate::Residue(g) => g,
        }
    }

    /// Re-checks the obstruction from scratch against the generators.
    pub fn verifies(&self, group: &MixedSubgroup, x: &[Rational]) -> bool {
        let g = self.functional();
        if g.len() != group.ambient_dim || x.len() != group.ambient_dim {
            return false;
        }
        if group.space_gens.iter().any(|w| !dot(g, w).is_zero()) {
            return false;
        }
        let gx = dot(g, x);
        match self {
            Certificate::Functional(_) => {
                group.lattice_gens.iter().all(|l| dot(g, l).is_zero()) && !gx.is_zero()
            }
            Certificate::Residue(_) => {
                group.lattice_gens.iter().all(|l| dot(g, l).is_integer()) && !gx.is_integer()
            }
        }
    }
}

/// A [`MixedSubgroup`] with its decompositions precomputed.
#[derive(Clone, Debug)]
pub struct PreparedSubgroup {
    group: MixedSubgroup,
    /// Rows span the annihilator of the space part, scaled so that
    /// `annihilator · L` is integral.
    annihilator: RatMatrix,
    lattice_solver: IntegerSolver,
    space_solver: RowReduction,
}

impl PreparedSubgroup {
    pub fn new(group: MixedSubgroup) -> Self {
        let n = group.ambient_dim;
        let w = Matrix::from_columns(n, &group.space_gens);
        let space_solver = RowReduction::new(&w);
        let mut annihilator_rows = space_solver.left_kernel();
        for row in annihilator_rows.iter_mut() {
            let d = Rational::from_integer(common_denominator(row.iter()));
            for x in row.iter_mut() {
                *x = &*x * &d;
            }
        }
        let mut annihilator = Matrix::from_rows(n, &annihilator_rows);
        let l = Matrix::from_columns(n, &group.lattice_gens);
        let pl = annihilator.mul_mat(&l);
        let scale = Rational::from_integer(common_denominator(pl.entries()));
        annihilator = annihilator.map(|x| x * &scale);
        let pl_int = pl.map(|x| (x * &scale).to_integer());
        PreparedSubgroup {
            group,
            annihilator,
            lattice_solver: IntegerSolver::new(&pl_int),
            space_solver,
        }
    }

    pub fn group(&self) -> &MixedSubgroup {
        &self.group
    }

    pub fn membership(&self, x: &[Rational]) -> Membership {
        assert_eq!(x.len(), self.group.ambient_dim, "element length");
        let y = self.annihilator.mul_vec(x);
        let z = match self.lattice_solver.solve_rational(&y) {
            Ok(z) => z,
            Err(obstruction) => {
                let (coeffs, residue) = match obstruction {
                    IntegerObstruction::Inconsistent { functional } => (functional, false),
                    IntegerObstruction::Residue { functional } => (functional, true),
                };
                let g = self.annihilator.vec_mul(&coeffs);
                return Membership::NotMember(if residue {
                    Certificate::Residue(g)
                } else {
                    Certificate::Functional(g)
                });
            }
        };
        let lattice_part = self
            .group
            .combine(&z, &alloc::vec![Rational::zero(); self.group.space_gens.len()]);
        let residual = sub_vec(x, &lattice_part);
        let q = self
            .space_solver
            .solve(&residual)
            .expect("residual annihilated by the space annihilator lies in its span");
        Membership::Member(Witness {
            lattice: z,
            space: q,
        })
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.membership(x).is_member()
    }
}

/// Decides `x ∈ S`, returning re-checkable evidence either way.
pub fn mixed_membership(x: &[Rational], group: &MixedSubgroup) -> Membership {
    group.membership(x)
}
