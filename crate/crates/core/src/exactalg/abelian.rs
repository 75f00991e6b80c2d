//! Finitely generated abelian groups in invariant-factor form.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::matrix::{common_denominator, IntMatrix, Integer, Matrix, Rational};
use super::mixed::MixedSubgroup;
use super::snf::snf;
use super::solve::{lattice_basis, IntegerSolver};

/// `ℤ^rank ⊕ ℤ/d_1 ⊕ … ⊕ ℤ/d_m` with `d_1 | … | d_m`, every `d_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    rank: usize,
    torsion: Vec<Integer>,
}

impl FgAbelianGroup {
    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// Builds the canonical form from a divisibility chain. Factors equal to
    /// one are dropped; zero factors count toward the rank.
    pub fn from_invariant_factors(rank: usize, factors: impl IntoIterator<Item = Integer>) -> Self {
        let mut rank = rank;
        let mut torsion = Vec::new();
        for f in factors {
            let f = num_traits::Signed::abs(&f);
            if f.is_zero() {
                rank += 1;
            } else if !f.is_one() {
                torsion.push(f);
            }
        }
        torsion.sort();
        debug_assert!(torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        FgAbelianGroup { rank, torsion }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[Integer] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> Integer {
        self.torsion.iter().fold(Integer::one(), |a, b| a * b)
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        if self.rank > 0 {
            if self.rank == 1 {
                write!(f, "Z")?;
            } else {
                write!(f, "Z^{}", self.rank)?;
            }
            first = false;
        }
        for d in &self.torsion {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "Z/{d}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientError {
    /// The quotient is only defined for lattices.
    SpacePartNotZero,
    /// Generator `index` of the subgroup does not lie in the ambient lattice.
    NotSubgroup { index: usize },
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::SpacePartNotZero => write!(f, "quotient requires lattices (no space part)"),
            QuotientError::NotSubgroup { index } => {
                write!(f, "subgroup generator {index} is not in the ambient lattice")
            }
        }
    }
}

/// Invariant factors of `Z/B` for lattices `B ⊆ Z`.
pub fn quotient_group(
    outer: &MixedSubgroup,
    inner: &MixedSubgroup,
) -> Result<FgAbelianGroup, QuotientError> {
    if !outer.space_gens().is_empty() || !inner.space_gens().is_empty() {
        return Err(QuotientError::SpacePartNotZero);
    }
    assert_eq!(outer.ambient_dim(), inner.ambient_dim(), "ambient dimensions differ");
    let n = outer.ambient_dim();
    // Scaling both lattices by a common integer does not change Z/B.
    let scale = common_denominator(
        outer
            .lattice_gens()
            .iter()
            .chain(inner.lattice_gens())
            .flatten(),
    );
    let to_int = |g: &Vec<Rational>| -> Vec<Integer> {
        g.iter()
            .map(|x| (x * Rational::from_integer(scale.clone())).to_integer())
            .collect()
    };
    let outer_int: Vec<Vec<Integer>> = outer.lattice_gens().iter().map(to_int).collect();
    let inner_int: Vec<Vec<Integer>> = inner.lattice_gens().iter().map(to_int).collect();

    let basis = lattice_basis(&Matrix::from_columns(n, &outer_int));
    let basis_solver = IntegerSolver::new(&Matrix::from_columns(n, &basis));
    let mut coords = Vec::with_capacity(inner_int.len());
    for (index, g) in inner_int.iter().enumerate() {
        match basis_solver.solve(g) {
            Some(c) => coords.push(c),
            None => return Err(QuotientError::NotSubgroup { index }),
        }
    }
    let relations: IntMatrix = Matrix::from_columns(basis.len(), &coords);
    let s = snf(&relations);
    Ok(FgAbelianGroup::from_invariant_factors(
        basis.len() - s.rank,
        s.invariant_factors(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn iv(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn two_z_in_z() {
        let z = MixedSubgroup::new(1).with_integer_lattice([iv(&[1])]);
        let b = MixedSubgroup::new(1).with_integer_lattice([iv(&[2])]);
        let g = quotient_group(&z, &b).unwrap();
        assert_eq!(g.rank(), 0);
        assert_eq!(g.torsion(), &[Integer::from(2)]);
        assert_eq!(g.to_string(), "Z/2");
    }

    #[test]
    fn free_rank_two() {
        let z = MixedSubgroup::new(2).with_integer_lattice([iv(&[1, 0]), iv(&[0, 1])]);
        let b = MixedSubgroup::new(2);
        let g = quotient_group(&z, &b).unwrap();
        assert_eq!(g, FgAbelianGroup::free(2));
    }

    #[test]
    fn rejects_non_subgroup() {
        let z = MixedSubgroup::new(1).with_integer_lattice([iv(&[2])]);
        let b = MixedSubgroup::new(1).with_integer_lattice([iv(&[3])]);
        assert_eq!(quotient_group(&z, &b), Err(QuotientError::NotSubgroup { index: 0 }));
    }

    #[test]
    fn canonical_form_drops_units() {
        let g = FgAbelianGroup::from_invariant_factors(
            1,
            [Integer::from(1), Integer::from(2), Integer::from(0)],
        );
        assert_eq!(g.rank(), 2);
        assert_eq!(g.torsion(), &[Integer::from(2)]);
        assert_eq!(g.to_string(), "Z^2 + Z/2");
        assert_eq!(FgAbelianGroup::trivial().to_string(), "0");
    }
}
