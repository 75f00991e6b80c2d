//! The verification suite for one complex and degree.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::*;
use crate::cone::{cone_cohomology_compare, les_exactness};
use crate::report::{CheckReport, DegreeReport};

/// Names of the checks `run_suite` performs, sorted.
pub const SUITE: [&str; 12] = [
    "bunke_schick",
    "character_compatibility",
    "cone_comparison",
    "cone_delta_squared",
    "cone_les",
    "derham",
    "dhat_squared",
    "faces",
    "induced_hexagon",
    "main_diagonal",
    "surjectivity",
    "validate",
];

pub fn default_degrees(x: &SimplicialComplex) -> RangeInclusive<isize> {
    1..=x.dim() as isize + 1
}

pub fn run_suite(x: &SimplicialComplex, k: isize, seed: u64, trials: usize) -> DegreeReport {
    run_suite_with(HexagonMaps::new(), x, k, seed, trials)
}

pub fn run_suite_with(maps: HexagonMaps, x: &SimplicialComplex, k: isize, seed: u64, trials: usize) -> DegreeReport {
    let ctx = HexagonContext::new(x, k, seed, trials).with_maps(maps);
    let checks: Vec<CheckReport> = alloc::vec![
        check_validate(&ctx),
        check_dhat_squared(&ctx),
        check_cone_delta_squared(&ctx),
        check_derham(&ctx),
        check_faces(&ctx),
        check_main_diagonal(&ctx),
        check_surjectivity(&ctx),
        check_character_compatibility(&ctx),
        check_induced_hexagon(&ctx),
        check_bunke_schick(&ctx),
        cone_cohomology_compare(x, k - 1, trials, seed),
        les_exactness(x, k - 1, trials, seed),
    ];
    DegreeReport::new(x.name(), k, seed, checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::catalog;

    #[test]
    fn circle_degree_one_passes() {
        let x = catalog("circle").unwrap();
        let r = run_suite(&x, 1, 42, 10);
        for c in &r.checks {
            assert!(c.passed(), "{} failed: {:?}", c.name, c.counterexample);
        }
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, SUITE);
    }

    #[test]
    fn every_mutation_is_caught_on_the_circle() {
        let x = catalog("circle").unwrap();
        for map in HexagonMap::ALL {
            let r = run_suite_with(HexagonMaps::mutated(map), &x, 1, 42, 5);
            assert!(!r.all_pass(), "mutation of {map} went unnoticed");
        }
    }

    #[test]
    fn off_diagonal_on_point_and_circle() {
        let p = catalog("point").unwrap();
        let ctx = HexagonContext::new(&p, 1, 0, 1);
        assert_eq!(check_off_diagonal_note(&ctx).status, crate::report::Status::NoCounterexample);
        let c = catalog("circle").unwrap();
        let ctx = HexagonContext::new(&c, 1, 0, 1);
        assert_eq!(check_off_diagonal_note(&ctx).status, crate::report::Status::NotExactConfirmed);
    }
}
