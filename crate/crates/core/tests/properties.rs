//! Randomized invariants of the exact engine and the cochain complexes.

use hexad_core::cone::{delta_cone, ConeCochain};
use hexad_core::exactalg::{mixed_membership, snf, IntMatrix, Integer, Matrix, MixedSubgroup, Rational};
use hexad_core::hscomplex::{dhat, DiffCochain};
use hexad_core::plforms::WhitneyForm;
use hexad_core::simplicial::{catalog, catalog_names, coboundary, Cochain, Ring};
use num_integer::Integer as _;
use proptest::prelude::*;

fn int_matrix(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
    Matrix::from_fn(rows, cols, |r, c| Integer::from(entries[r * cols + c]))
}

fn det(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| *v).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// `d_i`, the gcd of all `i × i` minors.
fn determinantal_divisor(rows: usize, cols: usize, e: &[i64], i: usize) -> i64 {
    let mut g = 0i64;
    for rs in subsets(rows, i) {
        for cs in subsets(cols, i) {
            let m: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| e[r * cols + c]).collect()).collect();
            g = g.gcd(&det(&m));
        }
    }
    g
}

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariant_factors_match_determinantal_divisors(
        rows in 1usize..4,
        cols in 1usize..4,
        raw in proptest::collection::vec(-6i64..=6, 16),
    ) {
        let e = &raw[..rows * cols];
        let f = snf(&int_matrix(rows, cols, e)).invariant_factors();
        let mut prefix = Integer::from(1);
        for i in 1..=rows.min(cols) {
            let d = determinantal_divisor(rows, cols, e, i);
            if i <= f.len() {
                prefix *= &f[i - 1];
                prop_assert_eq!(prefix.clone(), Integer::from(d));
            } else {
                prop_assert_eq!(d, 0);
            }
        }
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]) == Integer::from(0));
        }
    }

    #[test]
    fn mixed_membership_sound_and_complete(
        dim in 1usize..5,
        lat in proptest::collection::vec((-4i64..=4, 1i64..=3), 0..12),
        spc in proptest::collection::vec((-4i64..=4, 1i64..=3), 0..8),
        coeffs in proptest::collection::vec(-5i64..=5, 6),
        probe in proptest::collection::vec((-6i64..=6, 1i64..=4), 5),
    ) {
        let gens = |v: &[(i64, i64)]| -> Vec<Vec<Rational>> {
            v.chunks_exact(dim).map(|c| c.iter().map(|&(n, d)| rational(n, d)).collect()).collect()
        };
        let lattice = gens(&lat);
        let space = gens(&spc);
        let group = MixedSubgroup::new(dim).with_lattice(lattice.clone()).with_space(space.clone());

        // assembled from known coefficients: always accepted
        let n: Vec<Integer> = (0..lattice.len()).map(|i| Integer::from(coeffs[i % coeffs.len()])).collect();
        let r: Vec<Rational> = (0..space.len()).map(|i| rational(coeffs[(i + 1) % coeffs.len()], 2)).collect();
        let x = group.combine(&n, &r);
        match mixed_membership(&x, &group) {
            hexad_core::exactalg::Membership::Member(w) => prop_assert!(w.verifies(&group, &x)),
            other => prop_assert!(false, "constructed member rejected: {:?}", other),
        }

        // arbitrary elements: whichever answer comes back re-verifies
        let y: Vec<Rational> = probe[..dim].iter().map(|&(n, d)| rational(n, d)).collect();
        match mixed_membership(&y, &group) {
            hexad_core::exactalg::Membership::Member(w) => prop_assert!(w.verifies(&group, &y)),
            hexad_core::exactalg::Membership::NotMember(c) => prop_assert!(c.verifies(&group, &y)),
        }
    }

    #[test]
    fn differentials_square_to_zero(
        which in 0usize..7,
        k in 0isize..4,
        level in 0isize..4,
        seed in proptest::collection::vec((-9i64..=9, 1i64..=6), 40),
    ) {
        let x = catalog(catalog_names()[which]).unwrap();
        let mut it = seed.iter().cycle();
        let mut rat = |n: usize| -> Vec<Rational> { (0..n).map(|_| { let &(a, b) = it.next().unwrap(); rational(a, b) }).collect() };
        let c = rat(x.count(k));
        prop_assert!(coboundary(&x, &coboundary(&x, &Cochain::rational(k, c.clone()))).is_zero());

        let ints: Vec<Rational> = c.iter().map(|v| Rational::from_integer(v.numer().clone())).collect();
        let cz = Cochain::new(k, Ring::Integer, ints).unwrap();
        let t = Cochain::rational(k - 1, rat(x.count(k - 1)));
        let omega = (k >= level).then(|| WhitneyForm::new(k, rat(x.count(k))));
        let y = DiffCochain::new(level, cz.clone(), t, omega).unwrap();
        prop_assert!(dhat(&x, &dhat(&x, &y)).is_zero());

        let cone = ConeCochain::new(
            Cochain::new(k + 1, Ring::Integer, vec![Rational::from_integer(3.into()); x.count(k + 1)]).unwrap(),
            Cochain::rational(k, rat(x.count(k))),
        ).unwrap();
        prop_assert!(delta_cone(&x, &delta_cone(&x, &cone)).is_zero());
    }
}
