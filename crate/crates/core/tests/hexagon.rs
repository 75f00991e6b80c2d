//! The hexagon checks on the named complexes and degrees.

use hexad_core::hexagon::{
    check_bunke_schick, check_faces, check_induced_hexagon, check_main_diagonal, check_off_diagonal_note,
    CocyclePair, HexagonContext, HexagonMap, HexagonMaps,
};
use hexad_core::report::{CheckReport, Status};
use hexad_core::sample::Sampler;
use hexad_core::simplicial::{catalog, coboundary, Cochain, Ring};

fn on(name: &str, k: isize, check: fn(&HexagonContext<'_>) -> CheckReport) -> CheckReport {
    let x = catalog(name).unwrap();
    let ctx = HexagonContext::new(&x, k, 3, 10);
    check(&ctx)
}

fn assert_pass(r: &CheckReport) {
    assert_eq!(r.status, Status::Pass, "{}: {:?}", r.name, r.counterexample);
    assert!(r.witness_count > 0, "{} checked nothing", r.name);
}

#[test]
fn main_diagonal() {
    for (name, k) in [("point", 1), ("circle", 1), ("torus", 2)] {
        assert_pass(&on(name, k, check_main_diagonal));
    }
}

#[test]
fn faces_and_a_flipped_beta() {
    assert_pass(&on("point", 1, check_faces));
    assert_pass(&on("projective-plane", 2, check_faces));
    let x = catalog("projective-plane").unwrap();
    let ctx = HexagonContext::new(&x, 2, 3, 10).with_maps(HexagonMaps::mutated(HexagonMap::Beta));
    let r = check_faces(&ctx);
    assert_eq!(r.status, Status::Fail);
    assert!(!r.counterexample.unwrap().elements.is_empty());
}

#[test]
fn i_preimages() {
    let x = catalog("torus").unwrap();
    let ctx = HexagonContext::new(&x, 1, 0, 1);
    let zero = CocyclePair {
        cocycle: Cochain::zero(&x, 1, Ring::Integer),
        exact: Cochain::zero(&x, 1, Ring::Rational),
    };
    assert!(ctx.witness_i_surjective(&zero).unwrap().is_zero());

    let lattice = ctx.cocycle_lattice();
    let mut s = Sampler::new(11);
    for n in 0..50 {
        let c = lattice[n % lattice.len()].c().clone();
        let exact = coboundary(&x, &s.rat_cochain(&x, 0));
        let pair = CocyclePair { cocycle: c, exact };
        let p = ctx.witness_i_surjective(&pair).unwrap();
        let q = ctx.witness_i_surjective_adjusted(&pair).unwrap();
        assert_eq!(ctx.maps().big_i(&x, &p), pair);
        assert_eq!(ctx.maps().big_i(&x, &q), pair);
    }
}

#[test]
fn induced_hexagon() {
    for (name, k) in [("sphere", 2), ("circle", 1), ("projective-plane", 2)] {
        assert_pass(&on(name, k, check_induced_hexagon));
    }
}

#[test]
fn bunke_schick() {
    for (name, k) in [("point", 1), ("circle", 1), ("torus", 1)] {
        assert_pass(&on(name, k, check_bunke_schick));
    }
}

#[test]
fn off_diagonal() {
    assert_eq!(on("point", 1, check_off_diagonal_note).status, Status::NoCounterexample);
    let r = on("circle", 1, check_off_diagonal_note);
    assert_eq!(r.status, Status::NotExactConfirmed);
    assert!(r.counterexample.is_some());
    assert_eq!(on("sphere", 2, check_off_diagonal_note).status, Status::NotExactConfirmed);
}
