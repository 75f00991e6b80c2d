//! Text formats for complexes, cochains, Whitney forms and differential
//! cochains.
//!
//! All formats are line based, `#` starts a comment and blank lines are
//! ignored. A complex file reads
//!
//! ```text
//! name circle
//! vertices 3
//! facet 0 1
//! facet 1 2
//! facet 0 2
//! ```
//!
//! A cochain file gives a degree, a ring and one `value` line per
//! simplex; simplices without a line are zero.
//!
//! ```text
//! degree 1
//! ring Q
//! value (0 1) 1/2
//! ```
//!
//! A form file starts with `whitney-form` and otherwise reads like a
//! cochain file with `ring Q`; the `ring` line may be left out. A differential cochain file has an optional
//! `level <q>` line and sections headed `c`, `T` and `omega`, each holding
//! a cochain or form body.

use std::fmt::{self, Write as _};

use hexad_core::exactalg::{Integer, Rational};
use hexad_core::hscomplex::DiffCochain;
use hexad_core::plforms::WhitneyForm;
use hexad_core::simplicial::{simplex_label, Cochain, Ring, SimplexListing, SimplicialComplex, Violation};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("invalid complex: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

fn error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// A meaningful line: 1-based number, text with the comment removed.
#[derive(Clone, Copy, Debug)]
struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    /// Whitespace separated tokens with their 1-based columns.
    fn tokens(&self) -> Vec<(usize, &'a str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, ch) in self.text.char_indices() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    out.push((s, &self.text[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((s, &self.text[s..]));
        }
        out.into_iter().map(|(s, t)| (self.column(s), t)).collect()
    }

    fn column(&self, byte: usize) -> usize {
        self.text[..byte].chars().count() + 1
    }

    fn end_column(&self) -> usize {
        self.text.chars().count() + 1
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let text = raw.split('#').next().unwrap_or("");
            (!text.trim().is_empty()).then_some(Line { number: i + 1, text })
        })
        .collect()
}

fn end_of(text: &str) -> usize {
    text.lines().count() + 1
}

fn parse_usize(line: &Line<'_>, (col, tok): (usize, &str), what: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| error(line.number, col, format!("expected {what}, found `{tok}`")))
}

fn parse_isize(line: &Line<'_>, (col, tok): (usize, &str), what: &str) -> Result<isize, ParseError> {
    tok.parse()
        .map_err(|_| error(line.number, col, format!("expected {what}, found `{tok}`")))
}

/// `p/q` or `p` with arbitrary-size integers.
pub fn parse_rational(tok: &str) -> Option<Rational> {
    let (p, q) = match tok.split_once('/') {
        Some((p, q)) => (p, q),
        None => (tok, "1"),
    };
    let p: Integer = p.parse().ok()?;
    let q: Integer = q.parse().ok()?;
    (!q.is_zero()).then(|| Rational::new(p, q))
}

/// Always `p/q`, as the file formats ask.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn expect_arity(line: &Line<'_>, tokens: &[(usize, &str)], n: usize) -> Result<(), ParseError> {
    if tokens.len() > n {
        let (col, tok) = tokens[n];
        return Err(error(line.number, col, format!("unexpected `{tok}`")));
    }
    if tokens.len() < n {
        return Err(error(line.number, line.end_column(), format!("`{}` needs {} argument(s)", tokens[0].1, n - 1)));
    }
    Ok(())
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, LoadError> {
    let mut name: Option<String> = None;
    let mut vertices: Option<usize> = None;
    let mut facets = Vec::new();
    for line in lines(text) {
        let tokens = line.tokens();
        let (col, keyword) = tokens[0];
        match keyword {
            "name" => {
                expect_arity(&line, &tokens, 2)?;
                if name.is_some() {
                    return Err(error(line.number, col, "duplicate `name` line").into());
                }
                name = Some(tokens[1].1.to_string());
            }
            "vertices" => {
                expect_arity(&line, &tokens, 2)?;
                if vertices.is_some() {
                    return Err(error(line.number, col, "duplicate `vertices` line").into());
                }
                vertices = Some(parse_usize(&line, tokens[1], "a vertex count")?);
            }
            "facet" => {
                if tokens.len() < 2 {
                    return Err(error(line.number, line.end_column(), "`facet` needs at least one vertex").into());
                }
                let facet = tokens[1..]
                    .iter()
                    .map(|&t| parse_usize(&line, t, "a vertex index"))
                    .collect::<Result<Vec<_>, _>>()?;
                facets.push(facet);
            }
            other => return Err(error(line.number, col, format!("unknown keyword `{other}`")).into()),
        }
    }
    let end = end_of(text);
    let name = name.ok_or_else(|| error(end, 1, "missing `name` line"))?;
    let vertices = vertices.ok_or_else(|| error(end, 1, "missing `vertices` line"))?;
    let listing = SimplexListing::from_facets(&name, vertices, &facets);
    SimplicialComplex::from_listing(listing).map_err(LoadError::Invalid)
}

pub fn write_complex(x: &SimplicialComplex) -> String {
    let mut out = String::new();
    writeln!(out, "name {}", x.name()).unwrap();
    writeln!(out, "vertices {}", x.count(0)).unwrap();
    for f in x.facets() {
        let vs: Vec<String> = f.iter().map(ToString::to_string).collect();
        writeln!(out, "facet {}", vs.join(" ")).unwrap();
    }
    out
}

/// Reads `(v0 v1 ...)` starting at the token at `index`; returns the
/// simplex, the column of `(` and the index of the first token after `)`.
fn parse_simplex(line: &Line<'_>, tokens: &[(usize, &str)], index: usize) -> Result<(Vec<usize>, usize, usize), ParseError> {
    let Some(&(col, first)) = tokens.get(index) else {
        return Err(error(line.number, line.end_column(), "expected a simplex `(v0 v1 ...)`"));
    };
    if !first.starts_with('(') {
        return Err(error(line.number, col, format!("expected a simplex `(v0 v1 ...)`, found `{first}`")));
    }
    let mut body = String::new();
    let mut next = index;
    loop {
        let Some(&(_, tok)) = tokens.get(next) else {
            return Err(error(line.number, line.end_column(), "unterminated simplex, missing `)`"));
        };
        next += 1;
        body.push(' ');
        body.push_str(tok);
        if tok.ends_with(')') {
            break;
        }
    }
    let inner = body.trim().trim_start_matches('(').trim_end_matches(')');
    let simplex = inner
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| error(line.number, col, format!("bad vertex `{s}` in simplex")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((simplex, col, next))
}

struct Body {
    degree: isize,
    ring: Ring,
    values: Vec<Rational>,
}

/// `default_ring` stands in for a missing `ring` line.
fn parse_body(
    x: &SimplicialComplex,
    lines: &[Line<'_>],
    end: usize,
    default_ring: Option<Ring>,
) -> Result<Body, ParseError> {
    let mut degree: Option<isize> = None;
    let mut ring: Option<Ring> = None;
    let mut values: Option<Vec<Rational>> = None;
    let mut seen = Vec::new();
    for line in lines {
        let tokens = line.tokens();
        let (col, keyword) = tokens[0];
        match keyword {
            "degree" => {
                expect_arity(line, &tokens, 2)?;
                if degree.is_some() {
                    return Err(error(line.number, col, "duplicate `degree` line"));
                }
                let k = parse_isize(line, tokens[1], "a degree")?;
                if k < 0 {
                    return Err(error(line.number, tokens[1].0, "degree must be non-negative"));
                }
                degree = Some(k);
                values = Some(vec![Rational::zero(); x.count(k)]);
                seen = vec![false; x.count(k)];
            }
            "ring" => {
                expect_arity(line, &tokens, 2)?;
                let (rc, tag) = tokens[1];
                ring = Some(Ring::from_tag(tag).ok_or_else(|| {
                    error(line.number, rc, format!("unknown ring `{tag}`, expected Z, Q or QmodZ"))
                })?);
            }
            "value" => {
                let (Some(k), Some(values)) = (degree, values.as_mut()) else {
                    return Err(error(line.number, col, "`value` before `degree`"));
                };
                let (simplex, scol, next) = parse_simplex(line, &tokens, 1)?;
                let label = simplex_label(&simplex);
                if simplex.len() as isize != k + 1 {
                    return Err(error(line.number, scol, format!("simplex {label} does not have degree {k}")));
                }
                let index = x
                    .index_of(&simplex)
                    .ok_or_else(|| error(line.number, scol, format!("simplex {label} is not in complex `{}`", x.name())))?;
                if seen[index] {
                    return Err(error(line.number, scol, format!("simplex {label} has two values")));
                }
                seen[index] = true;
                let Some(&(vcol, tok)) = tokens.get(next) else {
                    return Err(error(line.number, line.end_column(), format!("missing value for simplex {label}")));
                };
                if let Some(&(ecol, extra)) = tokens.get(next + 1) {
                    return Err(error(line.number, ecol, format!("unexpected `{extra}`")));
                }
                values[index] = parse_rational(tok)
                    .ok_or_else(|| error(line.number, vcol, format!("expected a rational p/q, found `{tok}`")))?;
                if ring == Some(Ring::Integer) && !values[index].is_integer() {
                    return Err(error(line.number, vcol, format!("`{tok}` is not an integer")));
                }
            }
            other => return Err(error(line.number, col, format!("unknown keyword `{other}`"))),
        }
    }
    let first = lines.first().map_or(end, |l| l.number);
    let degree = degree.ok_or_else(|| error(first, 1, "missing `degree` line"))?;
    let ring = ring.or(default_ring).ok_or_else(|| error(first, 1, "missing `ring` line"))?;
    let values = values.unwrap_or_default();
    if ring == Ring::Integer {
        if let Some(i) = values.iter().position(|v| !v.is_integer()) {
            let label = simplex_label(&x.simplices(degree)[i]);
            return Err(error(first, 1, format!("value on {label} is not an integer")));
        }
    }
    Ok(Body { degree, ring, values })
}

pub fn parse_cochain(x: &SimplicialComplex, text: &str) -> Result<Cochain, ParseError> {
    let body = parse_body(x, &lines(text), end_of(text), None)?;
    Ok(Cochain::new(body.degree, body.ring, body.values).expect("ring checked while parsing"))
}

fn form_from_body(body: Body, line: usize) -> Result<WhitneyForm, ParseError> {
    if body.ring != Ring::Rational {
        return Err(error(line, 1, format!("forms need `ring Q`, found {}", body.ring)));
    }
    Ok(WhitneyForm::new(body.degree, body.values))
}

pub fn parse_form(x: &SimplicialComplex, text: &str) -> Result<WhitneyForm, ParseError> {
    let all = lines(text);
    let end = end_of(text);
    let Some(head) = all.first() else {
        return Err(error(end, 1, "empty form file"));
    };
    if head.text.trim() != "whitney-form" {
        return Err(error(head.number, 1, "form files start with `whitney-form`"));
    }
    let body = parse_body(x, &all[1..], end, Some(Ring::Rational))?;
    form_from_body(body, head.number)
}

/// Whether `text` is a form file, judged by its first line.
pub fn is_form_file(text: &str) -> bool {
    lines(text).first().is_some_and(|l| l.text.trim() == "whitney-form")
}

/// Whether `text` is a differential cochain file.
pub fn is_diff_file(text: &str) -> bool {
    lines(text)
        .first()
        .is_some_and(|l| matches!(l.tokens()[0].1, "level" | "c" | "T" | "omega"))
}

pub fn parse_diff_cochain(x: &SimplicialComplex, text: &str) -> Result<DiffCochain, ParseError> {
    let all = lines(text);
    let end = end_of(text);
    let mut level: Option<(usize, isize)> = None;
    let mut sections: Vec<(&str, usize, Vec<Line<'_>>)> = Vec::new();
    for line in all {
        let tokens = line.tokens();
        match tokens[0].1 {
            "level" if sections.is_empty() => {
                expect_arity(&line, &tokens, 2)?;
                level = Some((line.number, parse_isize(&line, tokens[1], "a level")?));
            }
            name @ ("c" | "T" | "omega") if tokens.len() == 1 => {
                if sections.iter().any(|(n, _, _)| *n == name) {
                    return Err(error(line.number, 1, format!("duplicate section `{name}`")));
                }
                sections.push((name, line.number, Vec::new()));
            }
            _ => match sections.last_mut() {
                Some((_, _, body)) => body.push(line),
                None => return Err(error(line.number, 1, "expected `level` or a section header `c`, `T` or `omega`")),
            },
        }
    }
    let section = |name: &str| sections.iter().find(|(n, _, _)| *n == name);
    let (_, c_line, c_body) = section("c").ok_or_else(|| error(end, 1, "missing section `c`"))?;
    let (_, t_line, t_body) = section("T").ok_or_else(|| error(end, 1, "missing section `T`"))?;
    let c = parse_body(x, c_body, *c_line, None)?;
    if c.ring != Ring::Integer {
        return Err(error(*c_line, 1, "section `c` needs `ring Z`"));
    }
    let t = parse_body(x, t_body, *t_line, None)?;
    if t.ring != Ring::Rational {
        return Err(error(*t_line, 1, "section `T` needs `ring Q`"));
    }
    let omega = match section("omega") {
        Some((_, line, body)) => Some(form_from_body(parse_body(x, body, *line, Some(Ring::Rational))?, *line)?),
        None => None,
    };
    let (level_line, level) = level.unwrap_or((1, c.degree));
    let c = Cochain::new(c.degree, Ring::Integer, c.values).expect("checked");
    let t = Cochain::new(t.degree, Ring::Rational, t.values).expect("checked");
    DiffCochain::new(level, c, t, omega).map_err(|e| error(level_line, 1, e.to_string()))
}

fn write_values(out: &mut String, x: &SimplicialComplex, degree: isize, values: &[Rational]) {
    for (s, v) in x.simplices(degree).iter().zip(values) {
        if !v.is_zero() {
            writeln!(out, "value {} {}", simplex_label(s), format_rational(v)).unwrap();
        }
    }
}

pub fn write_cochain(x: &SimplicialComplex, c: &Cochain) -> String {
    let mut out = String::new();
    writeln!(out, "degree {}", c.degree()).unwrap();
    writeln!(out, "ring {}", c.ring()).unwrap();
    write_values(&mut out, x, c.degree(), c.values());
    out
}

pub fn write_form(x: &SimplicialComplex, w: &WhitneyForm) -> String {
    let mut out = String::from("whitney-form\n");
    writeln!(out, "degree {}", w.degree()).unwrap();
    out.push_str("ring Q\n");
    write_values(&mut out, x, w.degree(), w.coefficients());
    out
}

pub fn write_diff_cochain(x: &SimplicialComplex, d: &DiffCochain) -> String {
    let mut out = String::new();
    writeln!(out, "level {}", d.level()).unwrap();
    out.push_str("c\n");
    out.push_str(&write_cochain(x, d.c()));
    out.push_str("T\n");
    out.push_str(&write_cochain(x, d.t()));
    if let Some(w) = d.omega() {
        out.push_str("omega\n");
        let body = write_form(x, w);
        out.push_str(body.strip_prefix("whitney-form\n").unwrap_or(&body));
    }
    out
}

/// `1`, `-1/2`: the shortest exact spelling, for reports.
pub struct Short<'a>(pub &'a Rational);

impl fmt::Display for Short<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hexad_core::simplicial::catalog;

    #[test]
    fn complex_round_trip() {
        for name in ["circle", "torus", "projective-plane"] {
            let x = catalog(name).unwrap();
            let y = parse_complex(&write_complex(&x)).unwrap();
            assert_eq!(x, y);
        }
    }

    #[test]
    fn missing_face_names_the_simplex() {
        let err = parse_complex("name bad\nvertices 2\nfacet 0 1 2\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("(2)") && msg.contains("(0 1 2)"), "{msg}");
    }

    #[test]
    fn malformed_facet_reports_line_and_column() {
        let err = parse_complex("name x\n# comment\nvertices 3\nfacet 0 one\n").unwrap_err();
        assert_eq!(
            err,
            LoadError::Parse(ParseError {
                line: 4,
                column: 9,
                message: "expected a vertex index, found `one`".into()
            })
        );
    }

    #[test]
    fn cochain_round_trip_and_errors() {
        let x = catalog("circle").unwrap();
        let c = parse_cochain(&x, "degree 1\nring Q\nvalue (0 1) 1/2\nvalue (1 2) -3\n").unwrap();
        assert_eq!(c.values()[x.index_of(&[0, 1]).unwrap()], Rational::new(1.into(), 2.into()));
        assert_eq!(parse_cochain(&x, &write_cochain(&x, &c)).unwrap(), c);

        let e = parse_cochain(&x, "degree 1\nring Z\nvalue (0 1) 1/2\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 13));
        let e = parse_cochain(&x, "degree 1\nring Q\nvalue (0 5) 1\n").unwrap_err();
        assert!(e.message.contains("(0 5)"));
        let e = parse_cochain(&x, "degree 1\nring R\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 6));
    }

    #[test]
    fn mod_one_values_are_reduced() {
        let x = catalog("circle").unwrap();
        let c = parse_cochain(&x, "degree 0\nring QmodZ\nvalue (0) 7/4\n").unwrap();
        assert_eq!(c.values()[0], Rational::new(3.into(), 4.into()));
    }

    #[test]
    fn form_and_diff_round_trip() {
        let x = catalog("circle").unwrap();
        let w = parse_form(&x, "whitney-form\ndegree 1\nring Q\nvalue (0 2) 2/3\n").unwrap();
        assert!(is_form_file(&write_form(&x, &w)));
        assert_eq!(parse_form(&x, &write_form(&x, &w)).unwrap(), w);
        assert_eq!(parse_form(&x, "whitney-form\ndegree 1\nvalue (0 2) 2/3\n").unwrap(), w);
        assert!(parse_form(&x, "whitney-form\ndegree 1\nring Z\n").is_err());

        let c = Cochain::indicator(&x, 1, 0, Ring::Integer);
        let t = Cochain::indicator(&x, 0, 1, Ring::Rational);
        let d = DiffCochain::character(c, t, w).unwrap();
        let text = write_diff_cochain(&x, &d);
        assert!(is_diff_file(&text));
        assert_eq!(parse_diff_cochain(&x, &text).unwrap(), d);
    }
}
