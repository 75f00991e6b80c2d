//! Descent of the hexagon to cohomology, and the differential-extension
//! axioms for ordinary cohomology.

use alloc::vec;
use alloc::vec::Vec;

use super::{closed_form_with_periods, CocyclePair, HexagonContext};
use crate::cone::{alpha, delta_cone, ConeCochain};
use crate::exactalg::Rational;
use crate::hscomplex::{dhat, evaluate_character, CoboundaryTest, DiffCochain};
use crate::plforms::{d, derham_cochain, derham_representative, whitney, WhitneyForm};
use crate::report::{CheckBuilder, CheckReport};
use crate::sample::Sampler;
use crate::simplicial::{coboundary, Chain, Cochain, Ring};

type Ctx<'c, 'a> = &'c HexagonContext<'a>;

fn preimage_checks(ctx: Ctx<'_, '_>, check: &mut CheckBuilder, x: &DiffCochain, violation: &str) -> Option<DiffCochain> {
    match ctx.characters().is_coboundary(x) {
        CoboundaryTest::Coboundary(y) => {
            let ok = dhat(ctx.complex(), &y) == *x;
            check.expect(ok, "coboundary witness does not re-verify", || {
                vec![("element", x.clone().into()), ("preimage", y.clone().into())]
            });
            Some(y)
        }
        _ => {
            check.fail(violation, vec![("element", x.clone().into())]);
            None
        }
    }
}

/// `R(B̂) = 0`, `I(B̂) ⊂ B(ℤ) × B(ℚ)`, `a(Ω_ℤ) ⊂ B̂`, `i(B(j)) ⊂ B̂`.
fn well_definedness(ctx: Ctx<'_, '_>, check: &mut CheckBuilder, s: &mut Sampler) {
    let x = ctx.complex();
    let k = ctx.degree();
    let m = ctx.maps();

    for g in ctx.coboundary_generators() {
        let r = m.r(&g);
        check.expect(r.is_zero(), "R does not vanish on a coboundary", || {
            vec![("coboundary", g.clone().into()), ("R", r.clone().into())]
        });
        let pair = m.big_i(x, &g);
        let c_ok = ctx
            .integral_primitive(&pair.cocycle)
            .is_some_and(|w| coboundary(x, &w) == pair.cocycle);
        let t_ok = ctx
            .rational_primitive(&pair.exact)
            .is_some_and(|w| coboundary(x, &w) == pair.exact);
        check.expect(c_ok && t_ok, "I of a coboundary is not in B(Z) x B(Q)", || {
            vec![("coboundary", g.clone().into())]
        });
    }

    // a(W(z) + dθ) = d̂(−z, −∫θ)
    let mut forms: Vec<(WhitneyForm, Cochain, WhitneyForm)> = ctx
        .integral_cocycles(k - 1)
        .iter()
        .map(|z| {
            let z = Cochain::rational(k - 1, z.clone()).retag(Ring::Integer).expect("integral");
            (whitney(&z), z, WhitneyForm::zero(x, k - 2))
        })
        .collect();
    forms.extend((0..x.count(k - 2)).map(|f| {
        let theta = WhitneyForm::elementary(x, k - 2, f);
        (d(x, &theta), Cochain::zero(x, k - 1, Ring::Integer), theta)
    }));
    forms.extend((0..ctx.trials()).map(|_| ctx.sample_integral_form(s)));
    for (eta, z, theta) in forms {
        let a = m.a(x, &eta);
        let explicit = DiffCochain::new(k, -&z, -&derham_cochain(&theta), None).expect("well-formed");
        check.expect(dhat(x, &explicit) == a, "a(η) ≠ d̂(−z, −∫θ) for η = W(z) + dθ", || {
            vec![("eta", eta.clone().into()), ("a(eta)", a.clone().into()), ("preimage", explicit.clone().into())]
        });
        preimage_checks(ctx, check, &a, "a of a form in Omega_Z is not a coboundary");
    }

    // i(δ_j(ũ, ṽ)) = d̂(ũ, −ṽ)
    let mut pre: Vec<ConeCochain> = Vec::new();
    for j in 0..x.count(k - 1) {
        pre.push(ConeCochain::new(Cochain::indicator(x, k - 1, j, Ring::Integer), Cochain::zero(x, k - 2, Ring::Rational)).unwrap());
    }
    for j in 0..x.count(k - 2) {
        pre.push(ConeCochain::new(Cochain::zero(x, k - 1, Ring::Integer), Cochain::indicator(x, k - 2, j, Ring::Rational)).unwrap());
    }
    for y in pre {
        let lhs = m.i(x, &delta_cone(x, &y));
        let explicit = DiffCochain::new(k, y.u().clone(), -y.v(), None).expect("well-formed");
        check.expect(lhs == dhat(x, &explicit), "i(δ_j(u, v)) ≠ d̂(u, −v)", || {
            vec![("cone preimage", y.clone().into()), ("i(delta(y))", lhs.clone().into())]
        });
    }
}

/// `0 → H^{k−1}(ℚ/ℤ) → Ĥ → Ω^k_ℤ → 0`.
fn curvature_diagonal(ctx: Ctx<'_, '_>, check: &mut CheckBuilder, s: &mut Sampler) {
    let x = ctx.complex();
    let m = ctx.maps();
    let cone = ctx.cone();

    // induced i is injective: i(y) ∈ B̂ exactly when y ∈ B(j)
    let mut samples: Vec<ConeCochain> = cone.cocycle_lattice().to_vec();
    for _ in 0..ctx.trials() {
        samples.push(ctx.sample_cone_cocycle(s));
        samples.push(cone.sample_coboundary(s));
    }
    for y in samples {
        let iy = m.i(x, &y);
        let hat = ctx.characters().is_coboundary(&iy);
        let below = cone.coboundary_preimage(&y);
        if let CoboundaryTest::Coboundary(p) = &hat {
            // i(y) = d̂(c', T') gives y = δ_j(c', −T')
            let explicit = ConeCochain::new(p.c().clone(), -p.t()).expect("well-formed");
            check.expect(delta_cone(x, &explicit) == y, "trivial i-image from a nontrivial cone class", || {
                vec![("cone cocycle", y.clone().into()), ("preimage", explicit.clone().into())]
            });
        }
        if let CoboundaryTest::NotCoboundary(cert) = &hat {
            check.expect(ctx.characters().certificate_verifies(cert, &iy), "certificate fails", || {
                vec![("element", iy.clone().into())]
            });
        }
        check.expect(hat.is_coboundary() == below.is_some(), "induced i is not injective", || {
            vec![("cone cocycle", y.clone().into())]
        });
    }

    // ker R = im i on classes, R onto Ω_ℤ
    for _ in 0..ctx.trials() {
        let y = ctx.sample_cone_cocycle(s);
        let el = &m.i(x, &y) + &ctx.sample_coboundary(s);
        let pre = ConeCochain::new(-el.c(), el.t().clone()).expect("well-formed");
        let ok = m.r(&el).is_zero() && delta_cone(x, &pre).is_zero() && m.i(x, &pre) == el;
        check.expect(ok, "class in ker R is not in im i", || {
            vec![("x", el.clone().into()), ("preimage", pre.clone().into())]
        });
        let omega = ctx.sample_integral_top_form(s);
        let w = ctx.witness_r_surjective(&omega);
        let ok = w.as_ref().is_ok_and(|w| m.r(w) == omega);
        check.expect(ok, "induced R is not onto Omega_Z", || vec![("omega", omega.clone().into())]);
    }
}

/// `0 → Ω^{k−1}/Ω^{k−1}_ℤ → Ĥ → H^k(ℤ) → 0`.
fn flat_diagonal(ctx: Ctx<'_, '_>, check: &mut CheckBuilder, s: &mut Sampler) {
    let x = ctx.complex();
    let k = ctx.degree();
    let m = ctx.maps();

    // a(η) ∈ B̂ exactly when η ∈ Ω_ℤ
    let mut forms = Vec::new();
    for _ in 0..ctx.trials() {
        let (eta, _, _) = ctx.sample_integral_form(s);
        forms.push(eta.scale(&Rational::new(1.into(), 2.into())));
        forms.push(eta);
        forms.push(ctx.sample_closed_form(s));
        forms.push(s.form(x, k - 1));
    }
    for eta in forms {
        let in_omega_z = ctx.periods(k - 1).in_omega_a(x, &eta) == Ok(true);
        let a = m.a(x, &eta);
        let test = ctx.characters().is_coboundary(&a);
        check.expect(test.is_coboundary() == in_omega_z, "ker a ≠ Omega_Z", || {
            vec![("eta", eta.clone().into()), ("a(eta)", a.clone().into())]
        });
        if let Some(p) = test.preimage() {
            // (0, ∫η, dη) = d̂(c', T') forces η = W(−c') + d W(−T')
            let rebuilt = &whitney(&(-p.c())) + &d(x, &whitney(&(-p.t())));
            check.expect(rebuilt == eta, "a-kernel witness does not rebuild η", || {
                vec![("eta", eta.clone().into()), ("preimage", p.clone().into())]
            });
        }
    }

    // ker I = im a on classes: x = a(W(T + c')) + d̂(c', 0) when c = δc'
    let mut classes = Vec::new();
    for _ in 0..ctx.trials() {
        classes.push(&m.a(x, &s.form(x, k - 1)) + &ctx.sample_coboundary(s));
        classes.push(ctx.sample_cocycle(s));
    }
    for (n, el) in classes.into_iter().enumerate() {
        let pair = m.big_i(x, &el);
        let Some(c1) = ctx.integral_primitive(&pair.cocycle) else {
            if n % 2 == 0 {
                check.fail("I of an a-image is not a coboundary class", vec![("x", el.clone().into())]);
            }
            continue;
        };
        let eta = whitney(&(el.t() + &c1.to_rational()));
        let shift = dhat(
            x,
            &DiffCochain::new(k, c1.clone(), Cochain::zero(x, k - 2, Ring::Rational), None).expect("well-formed"),
        );
        check.expect(&m.a(x, &eta) + &shift == el, "class in ker I is not in im a", || {
            vec![("x", el.clone().into()), ("eta", eta.clone().into()), ("c'", c1.clone().into())]
        });
    }

    // I onto H^k(ℤ), torsion included
    for c in ctx.integral_cocycles(k) {
        let c = Cochain::rational(k, c.clone()).retag(Ring::Integer).expect("integral");
        let pair = CocyclePair {
            cocycle: c.clone(),
            exact: Cochain::zero(x, k, Ring::Rational),
        };
        let ok = ctx
            .witness_i_surjective(&pair)
            .is_ok_and(|w| m.big_i(x, &w).cocycle == c);
        check.expect(ok, "integral class not hit by I", || vec![("c", c.clone().into())]);
    }
}

/// `ch∘I = ∫∘R` in `H^k(ℚ)`, also after changing representatives.
fn right_square(ctx: Ctx<'_, '_>, check: &mut CheckBuilder, s: &mut Sampler) {
    let x = ctx.complex();
    let m = ctx.maps();
    for _ in 0..ctx.trials() {
        let el = ctx.sample_cocycle(s);
        let other = &el + &ctx.sample_coboundary(s);
        let diff = &m.ch(&m.big_i(x, &other)) - &m.der(&m.r(&el));
        let ok = ctx.rational_primitive(&diff).is_some_and(|t| coboundary(x, &t) == diff);
        check.expect(ok, "ch∘I ≠ ∫∘R in rational cohomology", || {
            vec![("x", el.clone().into()), ("x'", other.clone().into())]
        });
    }
}

/// Left square, upper and lower triangle on classes.
fn squares(ctx: Ctx<'_, '_>, check: &mut CheckBuilder, s: &mut Sampler) {
    let x = ctx.complex();
    let k = ctx.degree();
    let m = ctx.maps();
    for _ in 0..ctx.trials() {
        // i∘α = a∘s, with α applied to another representative u + δw
        let u = Cochain::rational(k - 1, s.combination(x.count(k - 1), &[], ctx.rational_cocycles_km1()));
        let shifted = &u + &coboundary(x, &s.rat_cochain(x, k - 2));
        let lhs = m.i(x, &alpha(x, &shifted));
        let rhs = m.a(x, &m.iota(&derham_representative(x, &u).expect("cocycle")));
        preimage_checks(ctx, check, &(&lhs - &rhs), "i∘α ≠ a∘s on classes");

        // I∘i = β on classes
        let y = ctx.sample_cone_cocycle(s);
        let y2 = &y + &ctx.cone().sample_coboundary(s);
        let diff = &m.big_i(x, &m.i(x, &y2)).cocycle - &m.beta(x, &y).cocycle;
        let ok = ctx.integral_primitive(&diff).is_some_and(|w| coboundary(x, &w) == diff);
        check.expect(ok, "I∘i ≠ β on classes", || {
            vec![("y", y.clone().into()), ("y'", y2.clone().into())]
        });

        // R∘a = d on Ω^{k−1}/Ω^{k−1}_ℤ
        let eta = s.form(x, k - 1);
        let (zeta, _, _) = ctx.sample_integral_form(s);
        let lhs = m.r(&m.a(x, &(&eta + &zeta)));
        check.expect(lhs == d(x, &eta), "R∘a ≠ d on classes", || {
            vec![("eta", eta.clone().into()), ("zeta", zeta.clone().into())]
        });
    }
}

/// Cohomologous cocycles have equal `R`, equal `I`-classes and equal
/// characters.
fn descent_consistency(ctx: Ctx<'_, '_>, check: &mut CheckBuilder, s: &mut Sampler) {
    let x = ctx.complex();
    let k = ctx.degree();
    let m = ctx.maps();
    let basis = ctx.periods(k - 1).basis();
    let cycles: Vec<Chain> = basis
        .cycle_lattice
        .iter()
        .map(|z| Chain::new(k - 1, z.clone()))
        .collect();
    for _ in 0..ctx.trials() {
        let el = ctx.sample_cocycle(s);
        let other = &el + &ctx.sample_coboundary(s);
        check.expect(m.r(&el) == m.r(&other), "R differs on cohomologous cocycles", || {
            vec![("x", el.clone().into()), ("x'", other.clone().into())]
        });
        let diff = &m.big_i(x, &el).cocycle - &m.big_i(x, &other).cocycle;
        let ok = ctx.integral_primitive(&diff).is_some_and(|w| coboundary(x, &w) == diff);
        check.expect(ok, "I-classes differ on cohomologous cocycles", || {
            vec![("x", el.clone().into()), ("x'", other.clone().into())]
        });
        for z in &cycles {
            let ok = evaluate_character(x, &el, z) == evaluate_character(x, &other, z);
            check.expect(ok, "characters differ on cohomologous cocycles", || {
                vec![("x", el.clone().into()), ("x'", other.clone().into()), ("cycle", z.clone().into())]
            });
        }
    }
}

/// Well-definedness of the induced maps, exactness of both diagonals on
/// classes, and the squares and triangles on classes.
pub fn check_induced_hexagon(ctx: &HexagonContext<'_>) -> CheckReport {
    let mut check = CheckBuilder::new("induced_hexagon");
    let mut s = ctx.sampler("induced_hexagon");
    well_definedness(ctx, &mut check, &mut s);
    curvature_diagonal(ctx, &mut check, &mut s);
    flat_diagonal(ctx, &mut check, &mut s);
    right_square(ctx, &mut check, &mut s);
    squares(ctx, &mut check, &mut s);
    descent_consistency(ctx, &mut check, &mut s);
    check.finish()
}

/// The square `ch∘I = ∫∘R` and exactness of
/// `H^{k−1}(ℤ) → Ω^{k−1}/im d → Ĥ → H^k(ℤ) → 0`.
pub fn check_bunke_schick(ctx: &HexagonContext<'_>) -> CheckReport {
    let x = ctx.complex();
    let k = ctx.degree();
    let m = ctx.maps();
    let mut check = CheckBuilder::new("bunke_schick");
    let mut s = ctx.sampler("bunke_schick");

    right_square(ctx, &mut check, &mut s);

    // images of integral classes die under a
    for z in ctx.integral_cocycles(k - 1) {
        let z = Cochain::rational(k - 1, z.clone()).retag(Ring::Integer).expect("integral");
        let pair = CocyclePair {
            cocycle: z.clone(),
            exact: Cochain::zero(x, k - 1, Ring::Rational),
        };
        let theta = s.form(x, k - 2);
        let eta = &whitney(&m.ch(&pair)) + &d(x, &theta);
        let a = m.a(x, &eta);
        let explicit = DiffCochain::new(k, -&z, -&derham_cochain(&theta), None).expect("well-formed");
        check.expect(dhat(x, &explicit) == a, "a∘ch of an integral class is not d̂(−z, −∫θ)", || {
            vec![("z", z.clone().into()), ("theta", theta.clone().into())]
        });
        preimage_checks(ctx, &mut check, &a, "a∘ch of an integral class is not a coboundary");
    }

    // a closed form with first period 1 dies, its half survives
    let basis = ctx.periods(k - 1).basis();
    if basis.rank() > 0 {
        let mut periods = vec![Rational::from_integer(0.into()); basis.rank()];
        periods[0] = Rational::from_integer(1.into());
        match closed_form_with_periods(x, basis, &periods) {
            Some(theta) => {
                let a = m.a(x, &theta);
                preimage_checks(ctx, &mut check, &a, "a of a period-1 form is not a coboundary");
                let half = theta.scale(&Rational::new(1.into(), 2.into()));
                let a = m.a(x, &half);
                let ok = match ctx.characters().is_coboundary(&a) {
                    CoboundaryTest::NotCoboundary(cert) => ctx.characters().certificate_verifies(&cert, &a),
                    _ => false,
                };
                check.expect(ok, "a of a period-1/2 form is a coboundary", || {
                    vec![("eta", half.clone().into()), ("a(eta)", a.clone().into())]
                });
            }
            None => check.fail("no closed form with prescribed periods", Vec::new()),
        }
    }

    // exactness at Ĥ and surjectivity of I
    flat_diagonal(ctx, &mut check, &mut s);
    check.finish()
}
