//! The four commands, as functions from a configuration to output text.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::{env, fs, io};

use hexad_core::exactalg::FgAbelianGroup;
use hexad_core::hexagon::{check_off_diagonal_note, default_degrees, run_suite, CocyclePair, HexagonContext};
use hexad_core::hscomplex::{evaluate_character, CoboundaryTest, DiffCochain};
use hexad_core::report::{DegreeReport, Element};
use hexad_core::simplicial::{
    catalog, catalog_entry, catalog_names, cohomology, homology_basis, homology_group, Chain, Cochain, Ring,
    SimplicialComplex,
};
use serde::Serialize;
use thiserror::Error;

use crate::format::{self, LoadError, ParseError, Short};
use crate::report::{check_json, element_json, to_json, to_text};

pub const CATALOG_DIR_VAR: &str = "HEXAD_CATALOG_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub complex: String,
    /// Empty means the default range `1..=dim + 1`.
    pub degrees: Vec<isize>,
    pub seed: u64,
    pub trials: usize,
    pub format: Format,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{name}: {error}")]
    Load { name: String, error: LoadError },
    #[error("{path}: {error}")]
    Element { path: String, error: ParseError },
    #[error("unknown complex `{0}`: not a catalog name, not in ${CATALOG_DIR_VAR}, not a file")]
    UnknownComplex(String),
    #[error("catalog entry `{0}`")]
    Catalog(String),
    #[error("{path}: {error}")]
    Io { path: String, error: io::Error },
    #[error("degree {degree} is outside 1..={max} for complex `{complex}`")]
    Degree { degree: isize, max: isize, complex: String },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Witness { path: String, message: String },
}

/// Text to print and whether any check failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub failed: bool,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|error| CliError::Io {
        path: path.display().to_string(),
        error,
    })
}

fn load_file(path: &Path) -> Result<SimplicialComplex, CliError> {
    format::parse_complex(&read(path)?).map_err(|error| CliError::Load {
        name: path.display().to_string(),
        error,
    })
}

/// `*.cplx` files in `$HEXAD_CATALOG_DIR`, sorted by name.
pub fn user_catalog() -> Vec<(String, PathBuf)> {
    let Some(dir) = env::var_os(CATALOG_DIR_VAR) else {
        return Vec::new();
    };
    let Ok(entries) = fs::read_dir(dir) else {
        return Vec::new();
    };
    let mut out: Vec<(String, PathBuf)> = entries
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|e| e == "cplx"))
        .filter_map(|p| Some((p.file_stem()?.to_str()?.to_string(), p)))
        .collect();
    out.sort();
    out
}

/// A catalog name, a user catalog name, or a path.
pub fn resolve_complex(spec: &str) -> Result<SimplicialComplex, CliError> {
    if catalog_entry(spec).is_some() {
        return catalog(spec).map_err(|e| CliError::Catalog(e.to_string()));
    }
    if let Some((_, path)) = user_catalog().into_iter().find(|(n, _)| n == spec) {
        return load_file(&path);
    }
    let path = Path::new(spec);
    if path.is_file() {
        return load_file(path);
    }
    Err(CliError::UnknownComplex(spec.to_string()))
}

fn degrees(x: &SimplicialComplex, requested: &[isize]) -> Result<Vec<isize>, CliError> {
    let range = default_degrees(x);
    if requested.is_empty() {
        return Ok(range.collect());
    }
    for &degree in requested {
        if !range.contains(&degree) {
            return Err(CliError::Degree {
                degree,
                max: *range.end(),
                complex: x.name().to_string(),
            });
        }
    }
    let mut out = requested.to_vec();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn homology_row(x: &SimplicialComplex) -> Vec<String> {
    (0..=x.dim()).map(|k| homology_group(x, k).to_string()).collect()
}

#[derive(Serialize)]
struct CatalogRow {
    name: String,
    source: String,
    vertices: usize,
    dimension: usize,
    description: String,
    homology: Vec<String>,
}

pub fn cmd_catalog(format: Format) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    for name in catalog_names() {
        let entry = catalog_entry(name).expect("listed");
        let x = catalog(name).map_err(|e| CliError::Catalog(e.to_string()))?;
        rows.push(CatalogRow {
            name: name.to_string(),
            source: "builtin".into(),
            vertices: x.count(0),
            dimension: x.dim(),
            description: entry.description.to_string(),
            homology: homology_row(&x),
        });
    }
    for (name, path) in user_catalog() {
        let x = load_file(&path)?;
        rows.push(CatalogRow {
            name,
            source: path.display().to_string(),
            vertices: x.count(0),
            dimension: x.dim(),
            description: String::new(),
            homology: homology_row(&x),
        });
    }
    let output = match format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("serializes") + "\n",
        Format::Text => {
            let mut out = String::new();
            for r in rows {
                let h = r
                    .homology
                    .iter()
                    .enumerate()
                    .map(|(k, g)| format!("H{k}={g}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(out, "{:<18} v={:<3} dim={} {}  {}", r.name, r.vertices, r.dimension, h, r.description).unwrap();
            }
            out
        }
    };
    Ok(Outcome { output, failed: false })
}

#[derive(Serialize)]
struct CohomologyRow {
    degree: usize,
    homology_z: String,
    cohomology_z: String,
    cohomology_q: String,
    cohomology_q_mod_z: String,
}

#[derive(Serialize)]
struct PeriodCycle {
    degree: isize,
    cycle: serde_json::Value,
}

#[derive(Serialize)]
struct DegreeData {
    degree: isize,
    integral_cocycle_rank: usize,
    period_cycles: Vec<PeriodCycle>,
    off_diagonal: serde_json::Value,
}

#[derive(Serialize)]
struct ComputeOutput {
    complex: String,
    cohomology: Vec<CohomologyRow>,
    degrees: Vec<DegreeData>,
}

fn group(g: &FgAbelianGroup) -> String {
    g.to_string()
}

pub fn cmd_compute(config: &RunConfig) -> Result<Outcome, CliError> {
    let x = resolve_complex(&config.complex)?;
    let degrees = degrees(&x, &config.degrees)?;
    let rows: Vec<CohomologyRow> = (0..=x.dim())
        .map(|k| CohomologyRow {
            degree: k,
            homology_z: group(&homology_group(&x, k)),
            cohomology_z: cohomology(&x, k, Ring::Integer).to_string(),
            cohomology_q: cohomology(&x, k, Ring::Rational).to_string(),
            cohomology_q_mod_z: cohomology(&x, k, Ring::RationalModInteger).to_string(),
        })
        .collect();
    let mut per_degree = Vec::new();
    for &k in &degrees {
        let ctx = HexagonContext::new(&x, k, config.seed, config.trials);
        let mut cycles = Vec::new();
        for j in [k - 1, k] {
            if j < 0 || j > x.dim() as isize {
                continue;
            }
            for z in &homology_basis(&x, j as usize).free_cycles {
                cycles.push(PeriodCycle {
                    degree: j,
                    cycle: element_json(&x, &Element::Chain(z.clone())),
                });
            }
        }
        let note = check_off_diagonal_note(&ctx);
        let note = check_json(&x, &note);
        per_degree.push(DegreeData {
            degree: k,
            integral_cocycle_rank: ctx.cocycle_lattice().len(),
            period_cycles: cycles,
            off_diagonal: note,
        });
    }
    let data = ComputeOutput {
        complex: x.name().to_string(),
        cohomology: rows,
        degrees: per_degree,
    };
    let output = match config.format {
        Format::Json => serde_json::to_string_pretty(&data).expect("serializes") + "\n",
        Format::Text => compute_text(&data),
    };
    Ok(Outcome { output, failed: false })
}

fn compute_text(data: &ComputeOutput) -> String {
    let mut out = String::new();
    writeln!(out, "complex {}", data.complex).unwrap();
    writeln!(out, "k   H_k(Z)       H^k(Z)       H^k(Q)       H^k(Q/Z)").unwrap();
    for r in &data.cohomology {
        writeln!(
            out,
            "{:<3} {:<12} {:<12} {:<12} {}",
            r.degree, r.homology_z, r.cohomology_z, r.cohomology_q, r.cohomology_q_mod_z
        )
        .unwrap();
    }
    for d in &data.degrees {
        writeln!(out, "degree {}: rank Z^k(Z) = {}", d.degree, d.integral_cocycle_rank).unwrap();
        for c in &d.period_cycles {
            let entries = c.cycle["entries"]
                .as_array()
                .map(|es| {
                    es.iter()
                        .map(|e| format!("{}={}", e["simplex"].as_str().unwrap_or(""), e["value"].as_str().unwrap_or("")))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_default();
            writeln!(out, "  period cycle in degree {}: {}", c.degree, entries).unwrap();
        }
        writeln!(
            out,
            "  off-diagonal sequence: {}",
            d.off_diagonal["status"].as_str().unwrap_or("")
        )
        .unwrap();
    }
    out
}

pub fn verify_reports(config: &RunConfig) -> Result<(SimplicialComplex, Vec<DegreeReport>), CliError> {
    let x = resolve_complex(&config.complex)?;
    let degrees = degrees(&x, &config.degrees)?;
    let reports = degrees
        .iter()
        .map(|&k| run_suite(&x, k, config.seed, config.trials))
        .collect();
    Ok((x, reports))
}

pub fn cmd_verify(config: &RunConfig) -> Result<Outcome, CliError> {
    let (x, reports) = verify_reports(config)?;
    let failed = reports.iter().any(|r| !r.all_pass());
    let output = match config.format {
        Format::Json => to_json(&x, &reports),
        Format::Text => to_text(&x, &reports),
    };
    Ok(Outcome { output, failed })
}

#[derive(Serialize)]
struct WitnessItem {
    file: String,
    kind: &'static str,
    elements: Vec<(String, serde_json::Value)>,
}

fn witness_error(path: &Path, message: impl Into<String>) -> CliError {
    CliError::Witness {
        path: path.display().to_string(),
        message: message.into(),
    }
}

/// A label for what was computed and the named elements.
type WitnessOutput = (&'static str, Vec<(String, Element)>);

fn witness_one(ctx: &HexagonContext<'_>, path: &Path) -> Result<WitnessOutput, CliError> {
    let x = ctx.complex();
    let k = ctx.degree();
    let m = ctx.maps();
    let text = read(path)?;
    let parse_error = |error| CliError::Element {
        path: path.display().to_string(),
        error,
    };
    if format::is_form_file(&text) {
        let omega = format::parse_form(x, &text).map_err(parse_error)?;
        if omega.degree() != k {
            return Err(witness_error(path, format!("R-preimages need a {k}-form")));
        }
        let w = ctx
            .witness_r_surjective(&omega)
            .map_err(|e| witness_error(path, e.to_string()))?;
        debug_assert_eq!(m.r(&w), omega);
        return Ok(("R-preimage", vec![("x".into(), w.into())]));
    }
    if format::is_diff_file(&text) {
        let d = format::parse_diff_cochain(x, &text).map_err(parse_error)?;
        return diff_summary(ctx, path, d);
    }
    let c = format::parse_cochain(x, &text).map_err(parse_error)?;
    if c.degree() != k {
        return Err(witness_error(path, format!("I-preimages need a {k}-cochain")));
    }
    let pair = match c.ring() {
        Ring::Integer => CocyclePair {
            exact: Cochain::zero(x, k, Ring::Rational),
            cocycle: c,
        },
        Ring::Rational => CocyclePair {
            cocycle: Cochain::zero(x, k, Ring::Integer),
            exact: c,
        },
        Ring::RationalModInteger => {
            return Err(witness_error(path, "I-preimages need ring Z (cocycle) or Q (coboundary)"));
        }
    };
    let w = ctx
        .witness_i_surjective(&pair)
        .map_err(|e| witness_error(path, e.to_string()))?;
    debug_assert_eq!(m.big_i(x, &w), pair);
    Ok(("I-preimage", vec![("x".into(), w.into())]))
}

fn diff_summary(
    ctx: &HexagonContext<'_>,
    path: &Path,
    d: DiffCochain,
) -> Result<WitnessOutput, CliError> {
    let x = ctx.complex();
    let k = ctx.degree();
    let m = ctx.maps();
    if d.level() != k || d.degree() != k {
        return Err(witness_error(path, format!("expected a character of level and degree {k}")));
    }
    if !ctx.characters().is_cocycle(&d) {
        return Err(witness_error(path, "not a cocycle"));
    }
    let pair = m.big_i(x, &d);
    let mut out: Vec<(String, Element)> = vec![
        ("R".into(), m.r(&d).into()),
        ("I.cocycle".into(), pair.cocycle.into()),
        ("I.exact".into(), pair.exact.into()),
    ];
    match ctx.characters().is_coboundary(&d) {
        CoboundaryTest::Coboundary(p) => out.push(("coboundary preimage".into(), p.into())),
        CoboundaryTest::NotCoboundary(cert) => {
            // a functional on (c, T) that kills every coboundary but not d
            let (on_c, on_t) = cert.functional().split_at(x.count(k));
            out.push(("separating functional on c".into(), Cochain::rational(k, on_c.to_vec()).into()));
            out.push(("separating functional on T".into(), Cochain::rational(k - 1, on_t.to_vec()).into()));
        }
        CoboundaryTest::FormNonzero => {}
    }
    for (n, z) in homology_basis(x, (k - 1) as usize).free_cycles.iter().enumerate() {
        let value = evaluate_character(x, &d, z).map_err(|e| witness_error(path, e.to_string()))?;
        out.push((format!("character on cycle {n}"), value.into()));
        out.push((format!("cycle {n}"), Chain::clone(z).into()));
    }
    Ok(("character summary", out))
}

pub fn cmd_witness(config: &RunConfig, files: &[PathBuf]) -> Result<Outcome, CliError> {
    let x = resolve_complex(&config.complex)?;
    let degrees = degrees(&x, &config.degrees)?;
    let [k] = degrees[..] else {
        return Err(CliError::Usage("witness needs exactly one --degree".into()));
    };
    if files.is_empty() {
        return Err(CliError::Usage("witness needs at least one element file".into()));
    }
    let ctx = HexagonContext::new(&x, k, config.seed, config.trials);
    let mut items = Vec::new();
    for path in files {
        let (kind, elements) = witness_one(&ctx, path)?;
        items.push((path.display().to_string(), kind, elements));
    }
    let output = match config.format {
        Format::Json => {
            let items: Vec<WitnessItem> = items
                .into_iter()
                .map(|(file, kind, elements)| WitnessItem {
                    file,
                    kind,
                    elements: elements.iter().map(|(n, e)| (n.clone(), element_json(&x, e))).collect(),
                })
                .collect();
            serde_json::to_string_pretty(&items).expect("serializes") + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            for (file, kind, elements) in items {
                writeln!(out, "# {file}: {kind}").unwrap();
                for (name, e) in elements {
                    match e {
                        Element::Diff(d) => {
                            writeln!(out, "# {name}").unwrap();
                            out.push_str(&format::write_diff_cochain(&x, &d));
                        }
                        Element::Cochain(c) => {
                            writeln!(out, "# {name}").unwrap();
                            out.push_str(&format::write_cochain(&x, &c));
                        }
                        Element::Form(w) => {
                            writeln!(out, "# {name}").unwrap();
                            out.push_str(&format::write_form(&x, &w));
                        }
                        Element::Rational(r) => writeln!(out, "# {name} = {}", Short(&r)).unwrap(),
                        other => {
                            let v = element_json(&x, &other);
                            writeln!(out, "# {name} = {v}").unwrap();
                        }
                    }
                }
            }
            out
        }
    };
    Ok(Outcome { output, failed: false })
}
