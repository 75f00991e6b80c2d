//! (Co)homology of a complex computed from its (co)boundary matrices.

use alloc::vec::Vec;
use core::fmt;

use super::cochain::{boundary, coboundary_matrix, Chain, Ring};
use super::complex::SimplicialComplex;
use crate::exactalg::matrix::int_vec_to_rational;
use crate::exactalg::{
    integer_kernel, quotient_group, snf, FgAbelianGroup, IntMatrix, Integer, IntegerSolver, Matrix,
    MixedSubgroup, Rational, RowReduction,
};

/// Matrix of `∂_k` for any `k` (zero-sized outside the complex).
pub fn chain_boundary_matrix(complex: &SimplicialComplex, k: isize) -> IntMatrix {
    coboundary_matrix(complex, k - 1).transpose()
}

/// ℤ-basis of the integral `k`-cocycles.
pub fn integral_cocycle_basis(complex: &SimplicialComplex, k: isize) -> Vec<Vec<Integer>> {
    integer_kernel(&coboundary_matrix(complex, k))
}

/// ℚ-basis of the rational `k`-cocycles.
pub fn rational_cocycle_basis(complex: &SimplicialComplex, k: isize) -> Vec<Vec<Rational>> {
    RowReduction::from_int(&coboundary_matrix(complex, k)).kernel()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyGroup {
    Integral(FgAbelianGroup),
    Rational { rank: usize },
    /// `(ℚ/ℤ)^divisible_rank ⊕ finite`
    ModInteger {
        divisible_rank: usize,
        finite: FgAbelianGroup,
    },
}

impl fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyGroup::Integral(g) => write!(f, "{g}"),
            CohomologyGroup::Rational { rank: 0 } => write!(f, "0"),
            CohomologyGroup::Rational { rank: 1 } => write!(f, "Q"),
            CohomologyGroup::Rational { rank } => write!(f, "Q^{rank}"),
            CohomologyGroup::ModInteger {
                divisible_rank,
                finite,
            } => {
                let mut parts = Vec::new();
                match divisible_rank {
                    0 => {}
                    1 => parts.push(alloc::string::String::from("Q/Z")),
                    r => parts.push(alloc::format!("(Q/Z)^{r}")),
                }
                if !finite.is_trivial() {
                    parts.push(alloc::format!("{finite}"));
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
        }
    }
}

fn rational_rank_of(m: &IntMatrix) -> usize {
    RowReduction::from_int(m).rank()
}

/// `H^k(X; ring)`.
///
/// Over ℚ/ℤ the divisible part has the rational rank of `H^k` and the
/// finite part is the torsion of `coker δ^k`, i.e. the torsion of
/// `H^{k+1}(X; ℤ)`.
pub fn cohomology(complex: &SimplicialComplex, k: usize, ring: Ring) -> CohomologyGroup {
    let k = k as isize;
    match ring {
        Ring::Integer => {
            let n = complex.count(k);
            let cocycles = MixedSubgroup::new(n).with_integer_lattice(integral_cocycle_basis(complex, k));
            let coboundaries =
                MixedSubgroup::new(n).with_integer_lattice(coboundary_matrix(complex, k - 1).columns());
            let group = quotient_group(&cocycles, &coboundaries)
                .expect("coboundaries are cocycles");
            CohomologyGroup::Integral(group)
        }
        Ring::Rational => CohomologyGroup::Rational {
            rank: rational_betti(complex, k),
        },
        Ring::RationalModInteger => {
            let s = snf(&coboundary_matrix(complex, k));
            CohomologyGroup::ModInteger {
                divisible_rank: rational_betti(complex, k),
                finite: FgAbelianGroup::from_invariant_factors(0, s.invariant_factors()),
            }
        }
    }
}

/// `dim H^k(X; ℚ)`
pub fn rational_betti(complex: &SimplicialComplex, k: isize) -> usize {
    complex.count(k)
        - rational_rank_of(&coboundary_matrix(complex, k))
        - rational_rank_of(&coboundary_matrix(complex, k - 1))
}

/// Cycles whose classes form a ℤ-basis of `H_k / torsion`, together with
/// the full group `H_k(X; ℤ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyBasis {
    pub degree: isize,
    pub free_cycles: Vec<Chain>,
    pub group: FgAbelianGroup,
    /// ℤ-basis of all `k`-cycles; kept for certification.
    pub cycle_lattice: Vec<Vec<Integer>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisDefect {
    NotCycle { index: usize },
    Dependent,
    NotSpanning { cycle: usize },
}

impl fmt::Display for BasisDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisDefect::NotCycle { index } => write!(f, "basis element {index} is not a cycle"),
            BasisDefect::Dependent => write!(f, "basis cycles are dependent modulo boundaries"),
            BasisDefect::NotSpanning { cycle } => {
                write!(f, "cycle {cycle} is not in the span of the basis modulo boundaries")
            }
        }
    }
}

pub fn homology_group(complex: &SimplicialComplex, k: usize) -> FgAbelianGroup {
    homology_basis(complex, k).group
}

pub fn homology_basis(complex: &SimplicialComplex, k: usize) -> HomologyBasis {
    let k = k as isize;
    let n = complex.count(k);
    let cycles = integer_kernel(&chain_boundary_matrix(complex, k));
    let boundaries = chain_boundary_matrix(complex, k + 1).columns();
    let m = cycles.len();
    let cycle_matrix = Matrix::from_columns(n, &cycles);
    let solver = IntegerSolver::new(&cycle_matrix);
    let coords: Vec<Vec<Integer>> = boundaries
        .iter()
        .map(|b| solver.solve(b).expect("boundaries are cycles"))
        .collect();
    let relations: IntMatrix = Matrix::from_columns(m, &coords);
    let s = snf(&relations);
    // cycles · U^{-1} is a basis adapted to the boundary sublattice
    let adapted = cycle_matrix.mul_mat(&s.left_inv);
    let free_cycles = (s.rank..m)
        .map(|c| Chain::new(k, adapted.column(c)))
        .collect();
    HomologyBasis {
        degree: k,
        free_cycles,
        group: FgAbelianGroup::from_invariant_factors(m - s.rank, s.invariant_factors()),
        cycle_lattice: cycles,
    }
}

impl HomologyBasis {
    pub fn rank(&self) -> usize {
        self.free_cycles.len()
    }

    /// Re-checks that the free cycles are cycles, independent modulo
    /// rational boundaries, and that every integral cycle lies in their
    /// ℤ-span plus the ℚ-span of the boundaries.
    pub fn certify(&self, complex: &SimplicialComplex) -> Result<(), BasisDefect> {
        let k = self.degree;
        let n = complex.count(k);
        for (index, z) in self.free_cycles.iter().enumerate() {
            if !boundary(complex, z).is_zero() {
                return Err(BasisDefect::NotCycle { index });
            }
        }
        let boundaries = chain_boundary_matrix(complex, k + 1);
        let b_rank = rational_rank_of(&boundaries);
        let mut all = boundaries.columns();
        all.extend(self.free_cycles.iter().map(|z| z.coeffs().to_vec()));
        if rational_rank_of(&Matrix::from_columns(n, &all)) != b_rank + self.free_cycles.len() {
            return Err(BasisDefect::Dependent);
        }
        let span = MixedSubgroup::new(n)
            .with_integer_lattice(self.free_cycles.iter().map(|z| z.coeffs().to_vec()))
            .with_space(boundaries.columns().iter().map(|b| int_vec_to_rational(b)))
            .prepare();
        for (cycle, z) in self.cycle_lattice.iter().enumerate() {
            if !span.contains(&int_vec_to_rational(z)) {
                return Err(BasisDefect::NotSpanning { cycle });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn circle() -> SimplicialComplex {
        SimplicialComplex::from_facets("circle", 3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn circle_cohomology() {
        let x = circle();
        assert_eq!(
            cohomology(&x, 1, Ring::Integer),
            CohomologyGroup::Integral(FgAbelianGroup::free(1))
        );
        assert_eq!(cohomology(&x, 0, Ring::Rational), CohomologyGroup::Rational { rank: 1 });
        assert_eq!(
            cohomology(&x, 0, Ring::RationalModInteger),
            CohomologyGroup::ModInteger {
                divisible_rank: 1,
                finite: FgAbelianGroup::trivial()
            }
        );
    }

    #[test]
    fn circle_fundamental_cycle() {
        let x = circle();
        let b = homology_basis(&x, 1);
        assert_eq!(b.rank(), 1);
        let z = &b.free_cycles[0];
        // ±((01) − (02) + (12))
        let c = z.coeffs();
        assert_eq!(c[0], c[2]);
        assert_eq!(c[1], -c[0].clone());
        assert!(c[0] == Integer::from(1) || c[0] == Integer::from(-1));
        b.certify(&x).unwrap();
    }
}
