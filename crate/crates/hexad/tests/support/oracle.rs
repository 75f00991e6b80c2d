//! Homology from facet lists with plain `i64` arithmetic.
//!
//! Shares no code with the library: simplices, boundary matrices and the
//! Smith normal form are all rebuilt here.

use std::collections::BTreeSet;

pub struct Group {
    pub rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<i64>,
}

fn simplices(vertices: usize, facets: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut by_dim: Vec<BTreeSet<Vec<usize>>> = vec![(0..vertices).map(|v| vec![v]).collect()];
    for f in facets {
        let mut f = f.clone();
        f.sort_unstable();
        let n = f.len();
        for mask in 1u32..1 << n {
            let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
            while by_dim.len() < s.len() {
                by_dim.push(BTreeSet::new());
            }
            by_dim[s.len() - 1].insert(s);
        }
    }
    by_dim.into_iter().map(|s| s.into_iter().collect()).collect()
}

/// `∂_k` as rows = (k−1)-simplices, columns = k-simplices.
fn boundary(s: &[Vec<Vec<usize>>], k: usize) -> Vec<Vec<i64>> {
    if k == 0 || k >= s.len() {
        let rows = if k == 0 { 0 } else { s.get(k - 1).map_or(0, Vec::len) };
        let cols = s.get(k).map_or(0, Vec::len);
        return vec![vec![0; cols]; rows];
    }
    let mut m = vec![vec![0i64; s[k].len()]; s[k - 1].len()];
    for (j, simplex) in s[k].iter().enumerate() {
        for i in 0..simplex.len() {
            let mut face = simplex.clone();
            face.remove(i);
            let r = s[k - 1].binary_search(&face).unwrap();
            m[r][j] = if i % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Nonzero diagonal of the Smith normal form.
pub fn smith_diagonal(mut a: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry becomes the pivot
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| a[r][c] != 0)
            .min_by_key(|&(r, c)| a[r][c].abs())
        else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..rows {
            let q = a[r][t] / a[t][t];
            for c in t..cols {
                a[r][c] -= q * a[t][c];
            }
            clean &= a[r][t] == 0;
        }
        for c in t + 1..cols {
            let q = a[t][c] / a[t][t];
            for r in t..rows {
                a[r][c] -= q * a[r][t];
            }
            clean &= a[t][c] == 0;
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        if let Some(r) = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| a[r][c] % a[t][t] != 0)) {
            for c in t..cols {
                a[t][c] += a[r][c];
            }
            continue;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

pub fn homology(vertices: usize, facets: &[Vec<usize>]) -> Vec<Group> {
    let s = simplices(vertices, facets);
    let dim = s.len() - 1;
    let diags: Vec<Vec<i64>> = (0..=dim + 1).map(|k| smith_diagonal(boundary(&s, k))).collect();
    (0..=dim)
        .map(|k| Group {
            rank: s[k].len() - diags[k].len() - diags[k + 1].len(),
            torsion: diags[k + 1].iter().copied().filter(|&d| d > 1).collect(),
        })
        .collect()
}

/// `H^k(X; ℤ) = free part of H_k ⊕ torsion of H_{k−1}`.
pub fn cohomology(vertices: usize, facets: &[Vec<usize>]) -> Vec<Group> {
    let h = homology(vertices, facets);
    (0..h.len())
        .map(|k| Group {
            rank: h[k].rank,
            torsion: if k == 0 { Vec::new() } else { h[k - 1].torsion.clone() },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_by_hand() {
        assert_eq!(smith_diagonal(vec![vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(smith_diagonal(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }
}
