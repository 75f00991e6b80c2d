//! Acceptance criteria 1–11, each reported on one line.
//!
//! The full suite runs once over every catalog complex in degrees
//! `1..=dim + 1` with 100 random elements per check; the criteria then
//! read the relevant checks and add their own targeted probes.

mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use hexad::commands::{cmd_verify, Format, RunConfig};
use hexad_core::exactalg::Rational;
use hexad_core::hexagon::{
    closed_form_with_periods, default_degrees, run_suite, run_suite_with, torsion_cycles, HexagonContext,
    HexagonMap, HexagonMaps,
};
use hexad_core::hscomplex::{dhat, CoboundaryTest};
use hexad_core::report::DegreeReport;
use hexad_core::simplicial::{
    catalog, catalog_entry, catalog_names, cohomology, homology_basis, CohomologyGroup, Ring, SimplicialComplex,
};
use support::oracle;

const SEED: u64 = 42;
const TRIALS: usize = 100;

struct Run {
    complex: SimplicialComplex,
    reports: Vec<DegreeReport>,
}

fn full_run() -> Vec<Run> {
    catalog_names()
        .into_iter()
        .map(|name| {
            let complex = catalog(name).unwrap();
            let reports = default_degrees(&complex)
                .map(|k| run_suite(&complex, k, SEED, TRIALS))
                .collect();
            Run { complex, reports }
        })
        .collect()
}

/// Every named check passed on every complex and degree.
fn all_passed(runs: &[Run], names: &[&str]) -> Result<(), String> {
    for run in runs {
        for r in &run.reports {
            for name in names {
                let c = r.check(name).ok_or_else(|| format!("check {name} missing"))?;
                if !c.passed() {
                    let why = c.counterexample.as_ref().map_or("", |e| e.violation.as_str());
                    return Err(format!("{name} failed on {} k={}: {why}", r.complex, r.degree));
                }
                if c.witness_count == 0 && run.complex.count(r.degree - 1) > 0 {
                    return Err(format!("{name} on {} k={} checked nothing", r.complex, r.degree));
                }
            }
        }
    }
    Ok(())
}

fn integral(x: &SimplicialComplex, k: usize) -> (usize, Vec<i64>) {
    match cohomology(x, k, Ring::Integer) {
        CohomologyGroup::Integral(g) => (
            g.rank(),
            g.torsion().iter().map(|t| i64::try_from(t).unwrap()).collect(),
        ),
        other => panic!("unexpected {other:?}"),
    }
}

fn group_facts() -> Result<(), String> {
    for (name, k, rank, torsion) in [
        ("circle", 1, 1, vec![]),
        ("projective-plane", 2, 0, vec![2]),
        ("torus", 1, 2, vec![]),
    ] {
        let entry = catalog_entry(name).unwrap();
        let want = &oracle::cohomology(entry.vertices, &(entry.facets)())[k];
        if (want.rank, &want.torsion) != (rank, &torsion) {
            return Err(format!("oracle disagrees with the expected H^{k}({name})"));
        }
        let got = integral(&catalog(name).unwrap(), k);
        if got != (rank, torsion) {
            return Err(format!("H^{k}({name}) computed as {got:?}"));
        }
    }
    // and every catalog group against the oracle
    for name in catalog_names() {
        let entry = catalog_entry(name).unwrap();
        let x = catalog(name).unwrap();
        for (k, want) in oracle::cohomology(entry.vertices, &(entry.facets)()).iter().enumerate() {
            if integral(&x, k) != (want.rank, want.torsion.clone()) {
                return Err(format!("H^{k}({name}) disagrees with the oracle"));
            }
        }
    }
    Ok(())
}

fn torsion_in_cone(runs: &[Run]) -> Result<(), String> {
    for name in ["projective-plane", "klein-bottle"] {
        let x = catalog(name).unwrap();
        let CohomologyGroup::ModInteger { finite, .. } = cohomology(&x, 1, Ring::RationalModInteger) else {
            unreachable!()
        };
        if finite.torsion().len() != 1 || finite.torsion()[0] != 2.into() {
            return Err(format!("H^1({name}; Q/Z) lacks its Z/2"));
        }
        let run = runs.iter().find(|r| r.complex.name() == name).unwrap();
        // cone degree 1 is checked by the suite at k = 2
        let r = run.reports.iter().find(|r| r.degree == 2).unwrap();
        if !r.check("cone_comparison").unwrap().passed() {
            return Err(format!("cone comparison failed on {name}"));
        }
    }
    Ok(())
}

fn torsion_periods() -> Result<(), String> {
    let x = catalog("projective-plane").unwrap();
    if torsion_cycles(&x, 1).is_empty() {
        return Err("no torsion cycle found on RP2".into());
    }
    Ok(())
}

fn circle_periods() -> Result<(), String> {
    let x = catalog("circle").unwrap();
    let ctx = HexagonContext::new(&x, 1, SEED, 1);
    let basis = homology_basis(&x, 0);
    let one = vec![Rational::from_integer(1.into())];
    let theta = closed_form_with_periods(&x, &basis, &one).ok_or("no period-1 form")?;
    let a = ctx.maps().a(&x, &theta);
    match ctx.characters().is_coboundary(&a) {
        CoboundaryTest::Coboundary(p) if dhat(&x, &p) == a => {}
        _ => return Err("period-1 form survives a".into()),
    }
    let half = theta.scale(&Rational::new(1.into(), 2.into()));
    let a = ctx.maps().a(&x, &half);
    match ctx.characters().is_coboundary(&a) {
        CoboundaryTest::NotCoboundary(cert) if ctx.characters().certificate_verifies(&cert, &a) => Ok(()),
        _ => Err("period-1/2 form dies under a".into()),
    }
}

fn mutations() -> Result<(), String> {
    let x = catalog("circle").unwrap();
    for map in HexagonMap::ALL {
        let r = run_suite_with(HexagonMaps::mutated(map), &x, 1, SEED, 10);
        let failing: Vec<&str> = r.checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
        if failing.is_empty() {
            return Err(format!("sign flip in {map} went unnoticed"));
        }
        let ce = r.checks.iter().find_map(|c| c.counterexample.as_ref()).unwrap();
        if ce.elements.is_empty() && ce.violation.is_empty() {
            return Err(format!("sign flip in {map} failed without a counterexample"));
        }
    }
    Ok(())
}

fn determinism() -> Result<(), String> {
    let bin = env!("CARGO_BIN_EXE_hexad");
    let args = ["verify", "--complex", "circle", "--degree", "1", "--seed", "42", "--trials", "100", "--format", "json"];
    let a = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
    let b = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
    if a.status.code() != Some(0) {
        return Err(format!("verify exited with {:?}", a.status.code()));
    }
    if a.stdout.is_empty() || a.stdout != b.stdout {
        return Err("circle reports differ between runs".into());
    }
    let config = RunConfig {
        complex: "klein-bottle".into(),
        degrees: Vec::new(),
        seed: 7,
        trials: 5,
        format: Format::Json,
    };
    let first = cmd_verify(&config).map_err(|e| e.to_string())?;
    let second = cmd_verify(&config).map_err(|e| e.to_string())?;
    if first != second {
        return Err("klein-bottle reports differ between runs".into());
    }
    Ok(())
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Result<(), String> + 'a>);

#[test]
fn acceptance() {
    let runs = full_run();
    let criteria: Vec<Criterion<'_>> = vec![
        ("d̂² = 0 and δ_j² = 0", Box::new(|| all_passed(&runs, &["dhat_squared", "cone_delta_squared"]))),
        ("face identities", Box::new(|| all_passed(&runs, &["faces"]))),
        ("main diagonal exact", Box::new(|| all_passed(&runs, &["main_diagonal"]))),
        ("constructive surjectivity", Box::new(|| all_passed(&runs, &["surjectivity"]))),
        ("descent to cohomology", Box::new(|| {
            all_passed(&runs, &["induced_hexagon"])?;
            group_facts()
        })),
        ("character compatibility", Box::new(|| all_passed(&runs, &["character_compatibility"]))),
        ("mapping cone", Box::new(|| {
            all_passed(&runs, &["cone_comparison", "cone_les"])?;
            torsion_in_cone(&runs)
        })),
        ("de Rham/Whitney identities", Box::new(|| {
            all_passed(&runs, &["derham"])?;
            torsion_periods()
        })),
        ("Bunke-Schick axioms", Box::new(|| {
            all_passed(&runs, &["bunke_schick"])?;
            circle_periods()
        })),
        ("mutation sensitivity", Box::new(mutations)),
        ("determinism", Box::new(determinism)),
    ];
    let mut failures = 0;
    for (n, (name, criterion)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(criterion)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS {name}", n + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL {name}: {why}", n + 1);
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
