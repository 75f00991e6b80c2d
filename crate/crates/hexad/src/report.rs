//! JSON and text renderings of check reports.
//!
//! JSON is the contract; text is a projection of it for reading. Rationals
//! are strings (`"-1/2"`, `"3"`) and cochain-like elements list their
//! nonzero entries by simplex, in the complex's simplex order.

use std::fmt::Write as _;

use hexad_core::exactalg::Rational;
use hexad_core::report::{CheckReport, DegreeReport, Element};
use hexad_core::simplicial::{simplex_label, SimplicialComplex};
use serde::Serialize;

use crate::format::Short;

#[derive(Serialize)]
struct Entry {
    simplex: String,
    value: String,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum JsonElement {
    Rational {
        value: String,
    },
    Chain {
        degree: isize,
        entries: Vec<Entry>,
    },
    Cochain {
        degree: isize,
        ring: String,
        entries: Vec<Entry>,
    },
    Form {
        degree: isize,
        entries: Vec<Entry>,
    },
    Differential {
        level: isize,
        degree: isize,
        c: Vec<Entry>,
        #[serde(rename = "T")]
        t: Vec<Entry>,
        #[serde(skip_serializing_if = "Option::is_none")]
        omega: Option<Vec<Entry>>,
    },
    Cone {
        degree: isize,
        u: Vec<Entry>,
        v: Vec<Entry>,
    },
}

#[derive(Serialize)]
struct NamedElement {
    name: String,
    element: JsonElement,
}

#[derive(Serialize)]
struct JsonCounterexample {
    violation: String,
    elements: Vec<NamedElement>,
}

#[derive(Serialize)]
struct JsonCheck {
    name: String,
    status: &'static str,
    witness_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<JsonCounterexample>,
}

#[derive(Serialize)]
struct JsonReport {
    complex: String,
    degree: isize,
    seed: u64,
    checks: Vec<JsonCheck>,
}

fn entries(x: &SimplicialComplex, degree: isize, values: &[Rational]) -> Vec<Entry> {
    x.simplices(degree)
        .iter()
        .zip(values)
        .filter(|(_, v)| *v != &Rational::from_integer(0.into()))
        .map(|(s, v)| Entry {
            simplex: simplex_label(s),
            value: Short(v).to_string(),
        })
        .collect()
}

fn element(x: &SimplicialComplex, e: &Element) -> JsonElement {
    match e {
        Element::Rational(r) => JsonElement::Rational {
            value: Short(r).to_string(),
        },
        Element::Chain(c) => {
            let values: Vec<Rational> = c.coeffs().iter().map(|n| Rational::from_integer(n.clone())).collect();
            JsonElement::Chain {
                degree: c.degree(),
                entries: entries(x, c.degree(), &values),
            }
        }
        Element::Cochain(c) => JsonElement::Cochain {
            degree: c.degree(),
            ring: c.ring().tag().to_string(),
            entries: entries(x, c.degree(), c.values()),
        },
        Element::Form(w) => JsonElement::Form {
            degree: w.degree(),
            entries: entries(x, w.degree(), w.coefficients()),
        },
        Element::Diff(d) => JsonElement::Differential {
            level: d.level(),
            degree: d.degree(),
            c: entries(x, d.degree(), d.c().values()),
            t: entries(x, d.degree() - 1, d.t().values()),
            omega: d.omega().map(|w| entries(x, w.degree(), w.coefficients())),
        },
        Element::Cone(y) => JsonElement::Cone {
            degree: y.degree(),
            u: entries(x, y.degree() + 1, y.u().values()),
            v: entries(x, y.degree(), y.v().values()),
        },
    }
}

pub(crate) fn element_json(x: &SimplicialComplex, e: &Element) -> serde_json::Value {
    serde_json::to_value(element(x, e)).expect("elements serialize")
}

pub(crate) fn check_json(x: &SimplicialComplex, c: &CheckReport) -> serde_json::Value {
    serde_json::to_value(check(x, c)).expect("checks serialize")
}

fn check(x: &SimplicialComplex, c: &CheckReport) -> JsonCheck {
    JsonCheck {
        name: c.name.clone(),
        status: c.status.label(),
        witness_count: c.witness_count,
        counterexample: c.counterexample.as_ref().map(|ce| JsonCounterexample {
            violation: ce.violation.clone(),
            elements: ce
                .elements
                .iter()
                .map(|(name, e)| NamedElement {
                    name: name.clone(),
                    element: element(x, e),
                })
                .collect(),
        }),
    }
}

fn report(x: &SimplicialComplex, r: &DegreeReport) -> JsonReport {
    JsonReport {
        complex: r.complex.clone(),
        degree: r.degree,
        seed: r.seed,
        checks: r.checks.iter().map(|c| check(x, c)).collect(),
    }
}

/// One report renders as an object, several as an array.
pub fn to_json(x: &SimplicialComplex, reports: &[DegreeReport]) -> String {
    let mut out = if let [single] = reports {
        serde_json::to_string_pretty(&report(x, single))
    } else {
        serde_json::to_string_pretty(&reports.iter().map(|r| report(x, r)).collect::<Vec<_>>())
    }
    .expect("reports serialize");
    out.push('\n');
    out
}

fn text_entries(entries: &[Entry]) -> String {
    if entries.is_empty() {
        return "0".into();
    }
    entries
        .iter()
        .map(|e| format!("{}={}", e.simplex, e.value))
        .collect::<Vec<_>>()
        .join(" ")
}

fn text_element(e: &JsonElement) -> String {
    match e {
        JsonElement::Rational { value } => value.clone(),
        JsonElement::Chain { degree, entries } => format!("{degree}-chain {}", text_entries(entries)),
        JsonElement::Cochain { degree, ring, entries } => {
            format!("{degree}-cochain over {ring}: {}", text_entries(entries))
        }
        JsonElement::Form { degree, entries } => format!("{degree}-form {}", text_entries(entries)),
        JsonElement::Differential { level, degree, c, t, omega } => {
            let mut s = format!("level {level} degree {degree}: c: {} | T: {}", text_entries(c), text_entries(t));
            if let Some(w) = omega {
                write!(s, " | omega: {}", text_entries(w)).unwrap();
            }
            s
        }
        JsonElement::Cone { degree, u, v } => {
            format!("cone degree {degree}: u: {} | v: {}", text_entries(u), text_entries(v))
        }
    }
}

pub fn to_text(x: &SimplicialComplex, reports: &[DegreeReport]) -> String {
    let mut out = String::new();
    for r in reports {
        writeln!(out, "complex {}  degree {}  seed {}", r.complex, r.degree, r.seed).unwrap();
        for c in &r.checks {
            let c = check(x, c);
            writeln!(out, "  {:<4} {} ({} witnesses)", c.status, c.name, c.witness_count).unwrap();
            if let Some(ce) = c.counterexample {
                writeln!(out, "       violation: {}", ce.violation).unwrap();
                for e in &ce.elements {
                    writeln!(out, "       {} = {}", e.name, text_element(&e.element)).unwrap();
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hexad_core::report::{CheckBuilder, Status};
    use hexad_core::simplicial::{catalog, Cochain, Ring};

    #[test]
    fn json_shape() {
        let x = catalog("circle").unwrap();
        let mut b = CheckBuilder::new("faces");
        b.fail("R∘a ≠ d", vec![("c", Cochain::indicator(&x, 1, 2, Ring::Integer).into())]);
        let r = DegreeReport::new("circle", 1, 42, vec![b.finish(), CheckBuilder::new("a").finish_with(Status::Pass)]);
        let v: serde_json::Value = serde_json::from_str(&to_json(&x, std::slice::from_ref(&r))).unwrap();
        assert_eq!(v["complex"], "circle");
        assert_eq!(v["seed"], 42);
        assert_eq!(v["checks"][0]["name"], "a");
        assert!(v["checks"][0].get("counterexample").is_none());
        let e = &v["checks"][1]["counterexample"]["elements"][0]["element"];
        assert_eq!(e["kind"], "cochain");
        assert_eq!(e["entries"][0]["simplex"], "(1 2)");
        assert_eq!(e["entries"][0]["value"], "1");

        let arr: serde_json::Value = serde_json::from_str(&to_json(&x, &[r.clone(), r.clone()])).unwrap();
        assert_eq!(arr.as_array().unwrap().len(), 2);
        assert!(to_text(&x, &[r]).contains("FAIL faces"));
    }
}
