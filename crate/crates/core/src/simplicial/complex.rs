use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Strictly increasing vertex indices.
pub type Simplex = Vec<usize>;

/// Formats a simplex as `(0 1 2)`.
pub fn simplex_label(s: &[usize]) -> String {
    let mut out = String::from("(");
    for (i, v) in s.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&format!("{v}"));
    }
    out.push(')');
    out
}

/// Raw, unchecked description of a complex: every simplex listed by
/// dimension. [`validate`] decides whether it is a simplicial complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexListing {
    pub name: String,
    pub vertices: Vec<String>,
    pub simplices: Vec<Vec<Simplex>>,
}

impl SimplexListing {
    /// Vertices `0..n` plus the face closure of `facets`. Facets are
    /// sorted; out-of-range vertices and repeated vertices are kept so
    /// that validation can report them.
    pub fn from_facets(name: &str, n_vertices: usize, facets: &[Vec<usize>]) -> Self {
        let mut by_dim: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new()];
        for v in 0..n_vertices {
            by_dim[0].insert(vec![v]);
        }
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            if f.is_empty() {
                continue;
            }
            let top = f.len() - 1;
            while by_dim.len() <= top {
                by_dim.push(BTreeSet::new());
            }
            if top == 0 {
                by_dim[0].insert(f);
                continue;
            }
            // every sub-tuple of size ≥ 2; vertices come from the declared range
            let n = f.len();
            for mask in 1u64..(1u64 << n) {
                let size = mask.count_ones() as usize;
                if size < 2 {
                    continue;
                }
                let sub: Simplex = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                by_dim[size - 1].insert(sub);
            }
        }
        SimplexListing {
            name: String::from(name),
            vertices: (0..n_vertices).map(|v| format!("{v}")).collect(),
            simplices: by_dim.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    WrongSize { dim: usize, simplex: Simplex },
    NotIncreasing { simplex: Simplex },
    UnknownVertex { simplex: Simplex, vertex: usize },
    Duplicate { simplex: Simplex },
    MissingFace { simplex: Simplex, face: Simplex },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "complex has no vertices"),
            Violation::WrongSize { dim, simplex } => write!(
                f,
                "simplex {} listed in dimension {dim} has {} vertices",
                simplex_label(simplex),
                simplex.len()
            ),
            Violation::NotIncreasing { simplex } => {
                write!(f, "simplex {} is not strictly increasing", simplex_label(simplex))
            }
            Violation::UnknownVertex { simplex, vertex } => write!(
                f,
                "simplex {} uses unknown vertex {vertex}",
                simplex_label(simplex)
            ),
            Violation::Duplicate { simplex } => {
                write!(f, "simplex {} is listed twice", simplex_label(simplex))
            }
            Violation::MissingFace { simplex, face } => write!(
                f,
                "missing face {} of simplex {}",
                simplex_label(face),
                simplex_label(simplex)
            ),
        }
    }
}

/// Checks face-closure, ordering and uniqueness. Every violation found
/// is reported, in listing order.
pub fn validate(listing: &SimplexListing) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    if listing.simplices.first().is_none_or(Vec::is_empty) {
        out.push(Violation::Empty);
    }
    let sets: Vec<BTreeSet<&Simplex>> = listing.simplices.iter().map(|s| s.iter().collect()).collect();
    for (dim, simplices) in listing.simplices.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for s in simplices {
            if s.len() != dim + 1 {
                out.push(Violation::WrongSize {
                    dim,
                    simplex: s.clone(),
                });
                continue;
            }
            if s.windows(2).any(|w| w[0] >= w[1]) {
                out.push(Violation::NotIncreasing { simplex: s.clone() });
            }
            if let Some(&v) = s.iter().find(|&&v| v >= listing.vertices.len()) {
                out.push(Violation::UnknownVertex {
                    simplex: s.clone(),
                    vertex: v,
                });
            }
            if !seen.insert(s) {
                out.push(Violation::Duplicate { simplex: s.clone() });
            }
            if dim == 0 {
                continue;
            }
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                if !sets[dim - 1].contains(&face) {
                    out.push(Violation::MissingFace {
                        simplex: s.clone(),
                        face,
                    });
                }
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// A finite abstract simplicial complex with oriented simplices.
///
/// Simplices are stored sorted in each dimension; the orientation of a
/// simplex is the one given by its increasing vertex order, and the
/// `i`-th face (vertex `i` removed) carries the sign `(-1)^i`. Face
/// tables are built once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    name: String,
    vertices: Vec<String>,
    simplices: Vec<Vec<Simplex>>,
    faces: Vec<Vec<Vec<(usize, i8)>>>,
}

impl SimplicialComplex {
    pub fn from_listing(listing: SimplexListing) -> Result<Self, Vec<Violation>> {
        validate(&listing)?;
        let SimplexListing {
            name,
            vertices,
            mut simplices,
        } = listing;
        while simplices.last().is_some_and(Vec::is_empty) {
            simplices.pop();
        }
        for s in simplices.iter_mut() {
            s.sort();
        }
        let mut faces = vec![Vec::new()];
        for dim in 1..simplices.len() {
            let table = simplices[dim]
                .iter()
                .map(|s| {
                    (0..s.len())
                        .map(|i| {
                            let mut face = s.clone();
                            face.remove(i);
                            let idx = simplices[dim - 1]
                                .binary_search(&face)
                                .expect("validated complexes are closed under faces");
                            (idx, if i % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                })
                .collect();
            faces.push(table);
        }
        Ok(SimplicialComplex {
            name,
            vertices,
            simplices,
            faces,
        })
    }

    pub fn from_facets(name: &str, n_vertices: usize, facets: &[Vec<usize>]) -> Result<Self, Vec<Violation>> {
        Self::from_listing(SimplexListing::from_facets(name, n_vertices, facets))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    /// Simplices of dimension `k`; empty outside `0..=dim`.
    pub fn simplices(&self, k: isize) -> &[Simplex] {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.simplices.get(k))
            .map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, k: isize) -> usize {
        self.simplices(k).len()
    }

    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        let k = simplex.len() as isize - 1;
        self.simplices(k).binary_search_by(|s| s.as_slice().cmp(simplex)).ok()
    }

    /// `(face index, sign)` pairs for simplex `index` of dimension `k ≥ 1`.
    pub fn faces(&self, k: usize, index: usize) -> &[(usize, i8)] {
        &self.faces[k][index]
    }

    pub fn listing(&self) -> SimplexListing {
        SimplexListing {
            name: self.name.clone(),
            vertices: self.vertices.clone(),
            simplices: self.simplices.clone(),
        }
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        validate(&self.listing())
    }

    pub fn euler_characteristic(&self) -> isize {
        (0..=self.dim() as isize)
            .map(|k| if k % 2 == 0 { self.count(k) as isize } else { -(self.count(k) as isize) })
            .sum()
    }

    /// Facets: simplices that are not a face of any other simplex.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut is_face: Vec<Vec<bool>> = self.simplices.iter().map(|s| vec![false; s.len()]).collect();
        for k in 1..self.simplices.len() {
            for j in 0..self.simplices[k].len() {
                for &(f, _) in &self.faces[k][j] {
                    is_face[k - 1][f] = true;
                }
            }
        }
        let mut out = Vec::new();
        for (k, simplices) in self.simplices.iter().enumerate() {
            for (j, s) in simplices.iter().enumerate() {
                if !is_face[k][j] {
                    out.push(s.clone());
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_is_valid() {
        let facets = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        let x = SimplicialComplex::from_facets("sphere", 4, &facets).unwrap();
        assert_eq!((x.count(0), x.count(1), x.count(2)), (4, 6, 4));
        assert_eq!(x.euler_characteristic(), 2);
        assert_eq!(x.count(3), 0);
        assert_eq!(x.count(-1), 0);
        assert_eq!(x.facets().len(), 4);
    }

    #[test]
    fn missing_vertex_is_reported() {
        let listing = SimplexListing {
            name: "bad".into(),
            vertices: vec!["0".into(), "1".into()],
            simplices: vec![vec![vec![0]], vec![vec![0, 1]]],
        };
        let errs = validate(&listing).unwrap_err();
        assert_eq!(
            errs,
            vec![Violation::MissingFace {
                simplex: vec![0, 1],
                face: vec![1]
            }]
        );
        assert_eq!(alloc::string::ToString::to_string(&errs[0]), "missing face (1) of simplex (0 1)");
    }

    #[test]
    fn out_of_range_facet_vertex() {
        let errs = SimplicialComplex::from_facets("bad", 2, &[vec![0, 2]]).unwrap_err();
        assert!(errs.contains(&Violation::UnknownVertex {
            simplex: vec![0, 2],
            vertex: 2
        }));
        assert!(errs.contains(&Violation::MissingFace {
            simplex: vec![0, 2],
            face: vec![2]
        }));
    }

    #[test]
    fn unsorted_and_duplicate() {
        let listing = SimplexListing {
            name: "bad".into(),
            vertices: vec!["0".into(), "1".into()],
            simplices: vec![vec![vec![0], vec![1], vec![1]], vec![vec![1, 0]]],
        };
        let errs = validate(&listing).unwrap_err();
        assert!(errs.contains(&Violation::Duplicate { simplex: vec![1] }));
        assert!(errs.contains(&Violation::NotIncreasing { simplex: vec![1, 0] }));
    }

    #[test]
    fn face_signs_alternate() {
        let x = SimplicialComplex::from_facets("tri", 3, &[vec![0, 1, 2]]).unwrap();
        // (012) -> (12), (02), (01) with signs +, -, +
        let faces = x.faces(2, 0);
        let edges = x.simplices(1);
        assert_eq!(edges[faces[0].0], vec![1, 2]);
        assert_eq!(faces[0].1, 1);
        assert_eq!(edges[faces[1].0], vec![0, 2]);
        assert_eq!(faces[1].1, -1);
        assert_eq!(edges[faces[2].0], vec![0, 1]);
        assert_eq!(faces[2].1, 1);
    }
}
