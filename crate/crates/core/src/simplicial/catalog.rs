//! Built-in triangulations. Each entry carries its integral homology,
//! which is recomputed and compared whenever the entry is loaded.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::cohomology::homology_group;
use super::complex::{SimplicialComplex, Violation};
use crate::exactalg::{FgAbelianGroup, Integer};

pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub vertices: usize,
    pub facets: fn() -> Vec<Vec<usize>>,
    /// `(free rank, torsion factors)` of `H_k(X; ℤ)` for `k = 0..=dim`.
    pub homology: &'static [(usize, &'static [u32])],
}

impl CatalogEntry {
    pub fn expected_homology(&self) -> Vec<FgAbelianGroup> {
        self.homology
            .iter()
            .map(|(rank, torsion)| {
                FgAbelianGroup::from_invariant_factors(*rank, torsion.iter().map(|&t| Integer::from(t)))
            })
            .collect()
    }
}

fn point() -> Vec<Vec<usize>> {
    vec![vec![0]]
}

fn interval() -> Vec<Vec<usize>> {
    vec![vec![0, 1]]
}

fn circle() -> Vec<Vec<usize>> {
    vec![vec![0, 1], vec![1, 2], vec![0, 2]]
}

fn sphere() -> Vec<Vec<usize>> {
    vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
}

/// Möbius–Császár 7-vertex torus: triangles `{i, i+1, i+3}` and
/// `{i, i+2, i+3}` mod 7.
fn torus() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..7 {
        out.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        out.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    out
}

/// Minimal 6-vertex projective plane (half of the icosahedron).
fn projective_plane() -> Vec<Vec<usize>> {
    vec![
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 5, 1],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![3, 4, 1],
        vec![4, 5, 2],
        vec![5, 1, 3],
    ]
}

/// 3×3 grid with the horizontal sides glued straight and the vertical
/// sides glued with a flip.
fn klein_bottle() -> Vec<Vec<usize>> {
    let vertex = |i: usize, j: usize| -> usize {
        let (i, j) = if j == 3 { ((3 - i % 3) % 3, 0) } else { (i % 3, j) };
        3 * i + j
    };
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let a = vertex(i, j);
            let b = vertex(i + 1, j);
            let c = vertex(i, j + 1);
            let d = vertex(i + 1, j + 1);
            out.push(vec![a, b, d]);
            out.push(vec![a, c, d]);
        }
    }
    out
}

pub static CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        name: "point",
        description: "single vertex",
        vertices: 1,
        facets: point,
        homology: &[(1, &[])],
    },
    CatalogEntry {
        name: "interval",
        description: "one edge",
        vertices: 2,
        facets: interval,
        homology: &[(1, &[]), (0, &[])],
    },
    CatalogEntry {
        name: "circle",
        description: "boundary of a triangle",
        vertices: 3,
        facets: circle,
        homology: &[(1, &[]), (1, &[])],
    },
    CatalogEntry {
        name: "sphere",
        description: "boundary of the 3-simplex",
        vertices: 4,
        facets: sphere,
        homology: &[(1, &[]), (0, &[]), (1, &[])],
    },
    CatalogEntry {
        name: "torus",
        description: "7-vertex torus",
        vertices: 7,
        facets: torus,
        homology: &[(1, &[]), (2, &[]), (1, &[])],
    },
    CatalogEntry {
        name: "projective-plane",
        description: "6-vertex real projective plane",
        vertices: 6,
        facets: projective_plane,
        homology: &[(1, &[]), (0, &[2]), (0, &[])],
    },
    CatalogEntry {
        name: "klein-bottle",
        description: "9-vertex Klein bottle",
        vertices: 9,
        facets: klein_bottle,
        homology: &[(1, &[]), (1, &[2]), (0, &[])],
    },
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogError {
    Unknown(String),
    Invalid(Vec<Violation>),
    HomologyMismatch {
        name: String,
        degree: usize,
        expected: FgAbelianGroup,
        computed: FgAbelianGroup,
    },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::Unknown(name) => write!(f, "unknown catalog complex `{name}`"),
            CatalogError::Invalid(v) => {
                write!(f, "invalid catalog complex:")?;
                for x in v {
                    write!(f, " {x};")?;
                }
                Ok(())
            }
            CatalogError::HomologyMismatch {
                name,
                degree,
                expected,
                computed,
            } => write!(
                f,
                "{name}: H_{degree} computed as {computed}, expected {expected}"
            ),
        }
    }
}

pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

pub fn catalog_entry(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

/// Loads a catalog complex and checks its homology against the stored
/// values.
pub fn catalog(name: &str) -> Result<SimplicialComplex, CatalogError> {
    let entry = catalog_entry(name).ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
    let complex = SimplicialComplex::from_facets(entry.name, entry.vertices, &(entry.facets)())
        .map_err(CatalogError::Invalid)?;
    let expected = entry.expected_homology();
    if expected.len() != complex.dim() + 1 {
        return Err(CatalogError::HomologyMismatch {
            name: name.to_string(),
            degree: complex.dim() + 1,
            expected: FgAbelianGroup::trivial(),
            computed: FgAbelianGroup::trivial(),
        });
    }
    for (degree, expected) in expected.into_iter().enumerate() {
        let computed = homology_group(&complex, degree);
        if computed != expected {
            return Err(CatalogError::HomologyMismatch {
                name: name.to_string(),
                degree,
                expected,
                computed,
            });
        }
    }
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_loads() {
        for name in catalog_names() {
            let x = catalog(name).unwrap();
            x.validate().unwrap();
        }
    }

    #[test]
    fn sizes() {
        let c = catalog("circle").unwrap();
        assert_eq!((c.count(0), c.count(1)), (3, 3));
        let t = catalog("torus").unwrap();
        assert_eq!((t.count(0), t.count(1), t.count(2)), (7, 21, 14));
        let k = catalog("klein-bottle").unwrap();
        assert_eq!((k.count(0), k.count(1), k.count(2)), (9, 27, 18));
    }

    #[test]
    fn unknown_name() {
        assert_eq!(catalog("mobius"), Err(CatalogError::Unknown("mobius".into())));
    }
}
