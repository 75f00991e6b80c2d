//! Cochain-level statements about the hexagon.

use alloc::vec;
use alloc::vec::Vec;

use super::{CocyclePair, HexagonContext};
use crate::cone::{delta_cone, ConeCochain};
use crate::exactalg::{Matrix, Rational, RowReduction};
use crate::hscomplex::{evaluate_character, is_cocycle, DiffCochain};
use crate::plforms::{d, integrate, WhitneyForm};
use crate::report::{CheckBuilder, CheckReport, Element};
use crate::simplicial::{boundary, mod_one, Chain, Cochain, Ring};

fn pair_elements(name_c: &'static str, name_s: &'static str, p: &CocyclePair) -> [(&'static str, Element); 2] {
    [(name_c, p.cocycle.clone().into()), (name_s, p.exact.clone().into())]
}

pub(crate) fn flatten(x: &DiffCochain) -> Vec<Rational> {
    let mut out = x.c().values().to_vec();
    out.extend_from_slice(x.t().values());
    if let Some(w) = x.omega() {
        out.extend_from_slice(w.coefficients());
    }
    out
}

/// Elementary `(k−1)`-forms followed by random ones.
fn forms_below(ctx: &HexagonContext<'_>, s: &mut crate::sample::Sampler) -> Vec<WhitneyForm> {
    let x = ctx.complex();
    let k = ctx.degree();
    let mut out: Vec<_> = (0..x.count(k - 1)).map(|i| WhitneyForm::elementary(x, k - 1, i)).collect();
    out.extend((0..ctx.trials()).map(|_| s.form(x, k - 1)));
    out
}

/// Closed `(k−1)`-forms spanning the closed forms, followed by random ones.
fn closed_forms_below(ctx: &HexagonContext<'_>, s: &mut crate::sample::Sampler) -> Vec<WhitneyForm> {
    let x = ctx.complex();
    let k = ctx.degree();
    let mut out: Vec<_> = ctx
        .rational_cocycles_km1()
        .iter()
        .map(|v| WhitneyForm::new(k - 1, v.clone()))
        .collect();
    out.extend((0..x.count(k - 2)).map(|i| d(x, &WhitneyForm::elementary(x, k - 2, i))));
    out.extend((0..ctx.trials()).map(|_| ctx.sample_closed_form(s)));
    out
}

fn cone_cocycles(ctx: &HexagonContext<'_>, s: &mut crate::sample::Sampler) -> Vec<ConeCochain> {
    let mut out: Vec<_> = ctx.cone().cocycle_lattice().to_vec();
    out.extend_from_slice(ctx.cone().cocycle_space());
    out.extend((0..ctx.trials()).map(|_| ctx.sample_cone_cocycle(s)));
    out
}

fn diff_cocycles(ctx: &HexagonContext<'_>, s: &mut crate::sample::Sampler) -> Vec<DiffCochain> {
    let mut out = ctx.cocycle_generators();
    out.extend((0..ctx.trials()).map(|_| ctx.sample_cocycle(s)));
    out
}

/// `R∘a = d`, `I∘i = β`, `i∘b = a∘ι` and `ch∘I = ∫∘R`, on spanning sets and
/// random elements, together with the codomain of each map.
pub fn check_faces(ctx: &HexagonContext<'_>) -> CheckReport {
    let x = ctx.complex();
    let m = ctx.maps();
    let mut check = CheckBuilder::new("faces");
    let mut s = ctx.sampler("faces");

    for eta in forms_below(ctx, &mut s) {
        let a = m.a(x, &eta);
        let lhs = m.r(&a);
        let rhs = d(x, &eta);
        check.expect(lhs == rhs, "R∘a ≠ d", || {
            vec![("eta", eta.clone().into()), ("R(a(eta))", lhs.clone().into()), ("d(eta)", rhs.clone().into())]
        });
        check.expect(is_cocycle(x, &a), "a(η) is not a cocycle", || {
            vec![("eta", eta.clone().into()), ("a(eta)", a.clone().into())]
        });
    }

    for y in cone_cocycles(ctx, &mut s) {
        let iy = m.i(x, &y);
        let lhs = m.big_i(x, &iy);
        let rhs = m.beta(x, &y);
        check.expect(lhs == rhs, "I∘i ≠ β", || {
            let mut e = vec![("cone cocycle", y.clone().into())];
            e.extend(pair_elements("I(i(y)).c", "I(i(y)).dT", &lhs));
            e.extend(pair_elements("beta(y).c", "beta(y).dT", &rhs));
            e
        });
        check.expect(is_cocycle(x, &iy), "i(y) is not a cocycle", || {
            vec![("cone cocycle", y.clone().into()), ("i(y)", iy.clone().into())]
        });
    }

    for w in closed_forms_below(ctx, &mut s) {
        let b = m.b(x, &w);
        let lhs = m.i(x, &b);
        let rhs = m.a(x, &m.iota(&w));
        check.expect(lhs == rhs, "i∘b ≠ a∘ι", || {
            vec![("omega", w.clone().into()), ("i(b(omega))", lhs.clone().into()), ("a(iota(omega))", rhs.clone().into())]
        });
        check.expect(delta_cone(x, &b).is_zero(), "b(ω) is not a cone cocycle", || {
            vec![("omega", w.clone().into()), ("b(omega)", b.clone().into())]
        });
    }

    for y in diff_cocycles(ctx, &mut s) {
        let pair = m.big_i(x, &y);
        let lhs = m.ch(&pair);
        let omega = m.r(&y);
        let rhs = m.der(&omega);
        check.expect(lhs == rhs, "ch∘I ≠ ∫∘R", || {
            vec![("x", y.clone().into()), ("ch(I(x))", lhs.clone().into()), ("der(R(x))", rhs.clone().into())]
        });
        let in_omega_z = ctx.periods(ctx.degree()).in_omega_a(x, &omega) == Ok(true);
        check.expect(in_omega_z, "R(x) is not closed with integral periods", || {
            vec![("x", y.clone().into()), ("R(x)", omega.clone().into())]
        });
        let closed = crate::simplicial::coboundary(x, &lhs).is_zero();
        check.expect(closed, "ch(I(x)) is not a cocycle", || vec![("x", y.clone().into())]);
    }
    check.finish()
}

/// `im(i) = ker(R)` in `Ẑ(k)^k`, with `i` and `a` injective.
pub fn check_main_diagonal(ctx: &HexagonContext<'_>) -> CheckReport {
    let x = ctx.complex();
    let k = ctx.degree();
    let m = ctx.maps();
    let mut check = CheckBuilder::new("main_diagonal");
    let mut s = ctx.sampler("main_diagonal");

    for y in cone_cocycles(ctx, &mut s) {
        let r = m.r(&m.i(x, &y));
        check.expect(r.is_zero(), "R∘i ≠ 0", || {
            vec![("cone cocycle", y.clone().into()), ("R(i(y))", r.clone().into())]
        });
    }

    // ker R ⊂ im i: every (c, T, 0) in ker R is i(−c, T)
    let mut kernel = Vec::new();
    for _ in 0..ctx.samples() {
        let eta = ctx.sample_closed_form(&mut s);
        kernel.push(m.a(x, &eta));
        let v = ctx.sample_cone_cocycle(&mut s).v().clone();
        let c = -&crate::simplicial::coboundary(x, &v);
        let c = c.retag(Ring::Integer).expect("δv is integral on cone cocycles");
        kernel.push(DiffCochain::character(c, v, WhitneyForm::zero(x, k)).expect("well-formed"));
    }
    for el in kernel {
        if !is_cocycle(x, &el) || !m.r(&el).is_zero() {
            check.fail(
                "sampled kernel element of R is not a cocycle with R = 0",
                vec![("x", el.clone().into())],
            );
            continue;
        }
        let pre = ConeCochain::new(-el.c(), el.t().clone()).expect("well-formed");
        let ok = delta_cone(x, &pre).is_zero() && m.i(x, &pre) == el;
        check.expect(ok, "element of ker R has no i-preimage (−c, T)", || {
            vec![("x", el.clone().into()), ("preimage", pre.clone().into())]
        });
    }

    // injectivity of i and a as linear maps
    let n_u = x.count(k);
    let n_v = x.count(k - 1);
    let mut images = Vec::new();
    for j in 0..n_u {
        let y = ConeCochain::new(
            Cochain::indicator(x, k, j, Ring::Integer),
            Cochain::zero(x, k - 1, Ring::Rational),
        )
        .expect("well-formed");
        images.push(flatten(&m.i(x, &y)));
    }
    for j in 0..n_v {
        let y = ConeCochain::new(
            Cochain::zero(x, k, Ring::Integer),
            Cochain::indicator(x, k - 1, j, Ring::Rational),
        )
        .expect("well-formed");
        images.push(flatten(&m.i(x, &y)));
    }
    injective(&mut check, &images, n_u + n_v, "i has a nonzero kernel");
    let images: Vec<_> = (0..n_v)
        .map(|j| flatten(&m.a(x, &WhitneyForm::elementary(x, k - 1, j))))
        .collect();
    injective(&mut check, &images, n_v, "a has a nonzero kernel");
    check.finish()
}

fn injective(check: &mut CheckBuilder, images: &[Vec<Rational>], domain: usize, violation: &str) {
    if domain == 0 {
        check.witness();
        return;
    }
    let rows = images[0].len();
    let reduction = RowReduction::new(&Matrix::from_columns(rows, images));
    if reduction.rank() == domain {
        check.witness();
    } else {
        let kernel = reduction.kernel().into_iter().next().expect("rank deficit");
        let coords = Cochain::rational(0, kernel);
        check.fail(violation, vec![("kernel coordinates", coords.into())]);
    }
}

/// `witness_r_surjective` and both constructions of
/// `witness_i_surjective` on random targets.
pub fn check_surjectivity(ctx: &HexagonContext<'_>) -> CheckReport {
    let x = ctx.complex();
    let k = ctx.degree();
    let m = ctx.maps();
    let mut check = CheckBuilder::new("surjectivity");
    let mut s = ctx.sampler("surjectivity");

    let mut targets = vec![WhitneyForm::zero(x, k), d(x, &s.form(x, k - 1))];
    targets.extend((0..ctx.samples()).map(|_| ctx.sample_integral_top_form(&mut s)));
    for omega in targets {
        match ctx.witness_r_surjective(&omega) {
            Ok(w) => {
                let ok = is_cocycle(x, &w) && m.r(&w) == omega;
                check.expect(ok, "R-preimage does not re-verify", || {
                    vec![("omega", omega.clone().into()), ("preimage", w.clone().into())]
                });
            }
            Err(e) => check.fail(
                alloc::format!("no R-preimage for a form in Omega_Z: {e}"),
                vec![("omega", omega.clone().into())],
            ),
        }
    }

    let mut pairs = vec![CocyclePair {
        cocycle: Cochain::zero(x, k, Ring::Integer),
        exact: Cochain::zero(x, k, Ring::Rational),
    }];
    for _ in 0..ctx.samples() {
        let c = ctx.integral_cocycle(&mut s, k);
        let t = s.rat_cochain(x, k - 1);
        pairs.push(CocyclePair {
            cocycle: c,
            exact: crate::simplicial::coboundary(x, &t),
        });
    }
    for pair in pairs {
        let direct = ctx.witness_i_surjective(&pair);
        let adjusted = ctx.witness_i_surjective_adjusted(&pair);
        match (direct, adjusted) {
            (Ok(p), Ok(q)) => {
                for w in [&p, &q] {
                    let ok = is_cocycle(x, w) && m.big_i(x, w) == pair;
                    check.expect(ok, "I-preimage does not re-verify", || {
                        let mut e = pair_elements("c", "dT", &pair).to_vec();
                        e.push(("preimage", w.clone().into()));
                        e
                    });
                }
                check.expect(m.big_i(x, &p) == m.big_i(x, &q), "the two I-preimages disagree", || {
                    vec![("direct", p.clone().into()), ("adjusted", q.clone().into())]
                });
            }
            (p, q) => {
                let e = p.err().or(q.err()).expect("one side failed");
                check.fail(alloc::format!("no I-preimage: {e}"), pair_elements("c", "dT", &pair).to_vec());
            }
        }
    }
    check.finish()
}

/// `T(∂b) ≡ ∫_b ω mod ℤ` for cocycles `(c, T, ω)` and `k`-chains `b`, and
/// characters of coboundaries vanish.
pub fn check_character_compatibility(ctx: &HexagonContext<'_>) -> CheckReport {
    let x = ctx.complex();
    let k = ctx.degree();
    let mut check = CheckBuilder::new("character_compatibility");
    let mut s = ctx.sampler("character_compatibility");

    let mut chains: Vec<Chain> = (0..x.count(k)).map(|j| Chain::simplex(x, k, j)).collect();
    chains.extend((0..ctx.trials().min(10)).map(|_| Chain::new(k, s.integers(x.count(k)))));
    for y in diff_cocycles(ctx, &mut s) {
        let omega = y.omega().expect("level equals degree");
        for b in &chains {
            let lhs = y.t().evaluate(&boundary(x, b));
            let flux = integrate(omega, b).expect("degrees match");
            let exact = &flux - &y.c().evaluate(b);
            check.expect(lhs == exact && mod_one(&lhs) == mod_one(&flux), "T(∂b) ≢ ∫_b ω mod Z", || {
                vec![("x", y.clone().into()), ("b", b.clone().into())]
            });
        }
    }

    let basis = ctx.periods(k - 1).basis();
    let cycles: Vec<Chain> = basis
        .cycle_lattice
        .iter()
        .map(|z| Chain::new(k - 1, z.clone()))
        .chain(basis.free_cycles.iter().cloned())
        .collect();
    for _ in 0..ctx.trials() {
        let b = ctx.sample_coboundary(&mut s);
        let p = ctx.sample_cocycle(&mut s);
        let q = ctx.sample_cocycle(&mut s);
        let sum = &p + &q;
        for z in &cycles {
            let v = evaluate_character(x, &b, z);
            check.expect(v == Ok(Rational::from_integer(0.into())), "character of a coboundary is nonzero", || {
                vec![("coboundary", b.clone().into()), ("cycle", z.clone().into())]
            });
            let fp = evaluate_character(x, &p, z).expect("cocycle");
            let fq = evaluate_character(x, &q, z).expect("cocycle");
            let fs = evaluate_character(x, &sum, z).expect("cocycle");
            check.expect(fs == mod_one(&(&fp + &fq)), "character is not additive", || {
                vec![("x", p.clone().into()), ("y", q.clone().into()), ("cycle", z.clone().into())]
            });
        }
    }
    check.finish()
}
