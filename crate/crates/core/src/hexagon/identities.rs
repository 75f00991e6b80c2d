//! Structural identities: complex validity, `d̂² = 0`, `δ_j² = 0` and the
//! de Rham/Whitney relations.

use alloc::format;
use num_traits::Zero;
use alloc::vec;
use alloc::vec::Vec;

use super::HexagonContext;
use crate::cone::{delta_cone, ConeCochain};
use crate::exactalg::{integer_solve, saturated_column_lattice};
use crate::hscomplex::{dhat, DiffCochain};
use crate::plforms::{d, derham_cochain, integrate, whitney, WhitneyForm};
use crate::report::{CheckBuilder, CheckReport};
use crate::sample::Sampler;
use crate::simplicial::{
    coboundary, rational_cocycle_basis, chain_boundary_matrix, Chain, Cochain, Ring, SimplicialComplex,
};

pub fn check_validate(ctx: &HexagonContext<'_>) -> CheckReport {
    let x = ctx.complex();
    let mut check = CheckBuilder::new("validate");
    match x.validate() {
        Ok(()) => {
            for k in 0..=x.dim() as isize {
                for _ in 0..x.count(k) {
                    check.witness();
                }
            }
        }
        Err(violations) => check.fail(format!("{}", violations[0]), Vec::new()),
    }
    check.finish()
}

fn diff_units(x: &SimplicialComplex, q: isize, j: isize) -> Vec<DiffCochain> {
    let zero = DiffCochain::zero(x, q, j);
    let mut out = Vec::new();
    for s in 0..x.count(j) {
        let c = Cochain::indicator(x, j, s, Ring::Integer);
        out.push(DiffCochain::new(q, c, zero.t().clone(), zero.omega().cloned()).expect("well-formed"));
    }
    for s in 0..x.count(j - 1) {
        let t = Cochain::indicator(x, j - 1, s, Ring::Rational);
        out.push(DiffCochain::new(q, zero.c().clone(), t, zero.omega().cloned()).expect("well-formed"));
    }
    if j >= q {
        for s in 0..x.count(j) {
            let w = WhitneyForm::elementary(x, j, s);
            out.push(DiffCochain::new(q, zero.c().clone(), zero.t().clone(), Some(w)).expect("well-formed"));
        }
    }
    out
}

fn diff_random(x: &SimplicialComplex, q: isize, j: isize, s: &mut Sampler) -> DiffCochain {
    let omega = (j >= q).then(|| s.form(x, j));
    DiffCochain::new(q, s.int_cochain(x, j), s.rat_cochain(x, j - 1), omega).expect("well-formed")
}

/// `d̂∘d̂ = 0` at level `k` in degrees `k − 2`, `k − 1`, `k`, which covers
/// all three regimes of `d̂`.
pub fn check_dhat_squared(ctx: &HexagonContext<'_>) -> CheckReport {
    let x = ctx.complex();
    let q = ctx.degree();
    let mut check = CheckBuilder::new("dhat_squared");
    let mut s = ctx.sampler("dhat_squared");
    for j in (q - 2).max(0)..=q {
        let mut elements = diff_units(x, q, j);
        elements.extend((0..ctx.trials()).map(|_| diff_random(x, q, j, &mut s)));
        for y in elements {
            let dd = dhat(x, &dhat(x, &y));
            check.expect(dd.is_zero(), "d̂∘d̂ ≠ 0", || vec![("element", y.clone().into()), ("d̂d̂", dd.clone().into())]);
        }
    }
    check.finish()
}

/// `δ_j∘δ_j = 0` on cone cochains of degrees `k − 1` and `k`.
pub fn check_cone_delta_squared(ctx: &HexagonContext<'_>) -> CheckReport {
    let x = ctx.complex();
    let mut check = CheckBuilder::new("cone_delta_squared");
    let mut s = ctx.sampler("cone_delta_squared");
    for n in [ctx.degree() - 1, ctx.degree()] {
        let zero = ConeCochain::zero(x, n);
        let mut elements = Vec::new();
        for i in 0..x.count(n + 1) {
            elements.push(ConeCochain::new(Cochain::indicator(x, n + 1, i, Ring::Integer), zero.v().clone()).unwrap());
        }
        for i in 0..x.count(n) {
            elements.push(ConeCochain::new(zero.u().clone(), Cochain::indicator(x, n, i, Ring::Rational)).unwrap());
        }
        for _ in 0..ctx.trials() {
            elements.push(ConeCochain::new(s.int_cochain(x, n + 1), s.rat_cochain(x, n)).unwrap());
        }
        for y in elements {
            let dd = delta_cone(x, &delta_cone(x, &y));
            check.expect(dd.is_zero(), "δ_j∘δ_j ≠ 0", || vec![("element", y.clone().into()), ("δδ", dd.clone().into())]);
        }
    }
    check.finish()
}

/// Integral `degree`-cycles that are not boundaries but have a multiple
/// that is.
pub fn torsion_cycles(x: &SimplicialComplex, degree: isize) -> Vec<Chain> {
    let boundaries = chain_boundary_matrix(x, degree + 1);
    saturated_column_lattice(&boundaries)
        .into_iter()
        .filter(|z| integer_solve(&boundaries, z).is_none())
        .map(|z| Chain::new(degree, z))
        .collect()
}

/// `∫∘W = id`, `d∘W = W∘δ`, `δ∘∫ = ∫∘d`, vanishing periods on torsion
/// cycles, `Ω_ℤ`-membership invariant under exact forms, and primitives
/// that re-verify.
pub fn check_derham(ctx: &HexagonContext<'_>) -> CheckReport {
    let x = ctx.complex();
    let k = ctx.degree();
    let mut check = CheckBuilder::new("derham");
    let mut s = ctx.sampler("derham");
    for j in [k - 1, k] {
        let mut cochains: Vec<Cochain> = (0..x.count(j)).map(|i| Cochain::indicator(x, j, i, Ring::Rational)).collect();
        cochains.extend((0..ctx.trials()).map(|_| s.rat_cochain(x, j)));
        for c in cochains {
            let w = whitney(&c);
            check.expect(derham_cochain(&w) == c, "∫∘W ≠ id", || vec![("cochain", c.clone().into())]);
            check.expect(d(x, &w) == whitney(&coboundary(x, &c)), "d∘W ≠ W∘δ", || vec![("cochain", c.clone().into())]);
            let omega = s.form(x, j);
            let ok = coboundary(x, &derham_cochain(&omega)) == derham_cochain(&d(x, &omega));
            check.expect(ok, "δ∘∫ ≠ ∫∘d", || vec![("form", omega.clone().into())]);
        }

        let closed = rational_cocycle_basis(x, j);
        for z in torsion_cycles(x, j) {
            for _ in 0..ctx.trials().min(10) {
                let v = s.combination(x.count(j), &[], &closed);
                let omega = &WhitneyForm::new(j, v) + &d(x, &s.form(x, j - 1));
                let ok = integrate(&omega, &z).is_ok_and(|p| p.is_zero());
                check.expect(ok, "closed form has a nonzero period on a torsion cycle", || {
                    vec![("form", omega.clone().into()), ("cycle", z.clone().into())]
                });
            }
        }
    }

    for _ in 0..ctx.trials() {
        let (eta, _, _) = ctx.sample_integral_form(&mut s);
        let candidates = [eta.clone(), eta.scale(&crate::exactalg::Rational::new(1.into(), 3.into())), ctx.sample_closed_form(&mut s)];
        for eta in candidates {
            let moved = &eta + &d(x, &s.form(x, k - 2));
            let periods = ctx.periods(k - 1);
            let ok = periods.in_omega_a(x, &eta) == periods.in_omega_a(x, &moved);
            check.expect(ok, "Omega_Z membership changes under an exact form", || {
                vec![("eta", eta.clone().into()), ("eta + dθ", moved.clone().into())]
            });
        }

        let t = coboundary(x, &s.rat_cochain(x, k - 1));
        let ok = ctx.rational_primitive(&t).is_some_and(|p| coboundary(x, &p) == t);
        check.expect(ok, "primitive of an exact cochain does not re-verify", || vec![("target", t.clone().into())]);
    }
    check.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::catalog;

    #[test]
    fn projective_plane_has_one_torsion_loop() {
        let x = catalog("projective-plane").unwrap();
        let cycles = torsion_cycles(&x, 1);
        assert!(!cycles.is_empty());
        let b = chain_boundary_matrix(&x, 2);
        for z in cycles {
            let doubled: Vec<_> = z.coeffs().iter().map(|c| c * 2).collect();
            assert!(integer_solve(&b, &doubled).is_some());
        }
        assert!(torsion_cycles(&catalog("torus").unwrap(), 1).is_empty());
    }
}
