//! The refined hexagon of differential characters at level `q = k`:
//! its nine maps, the identities and exactness statements they satisfy,
//! constructive surjectivity, and descent to cohomology.

mod checks;
mod identities;
mod induced;
mod maps;
mod offdiag;
mod suite;
mod witness;

pub use checks::{check_character_compatibility, check_faces, check_main_diagonal, check_surjectivity};
pub use identities::{check_cone_delta_squared, check_derham, check_dhat_squared, check_validate, torsion_cycles};
pub use induced::{check_bunke_schick, check_induced_hexagon};
pub use maps::{CocyclePair, HexagonMap, HexagonMaps};
pub use offdiag::check_off_diagonal_note;
pub use suite::{default_degrees, run_suite, run_suite_with, SUITE};
pub use witness::{closed_form_with_periods, SurjectivityError};

use alloc::format;
use alloc::vec::Vec;

use crate::cone::{ConeCochain, ConeGroup};
use crate::exactalg::matrix::int_vec_to_rational;
use crate::exactalg::{Integer, IntegerSolver, MixedSubgroup, PreparedSubgroup, Rational};
use crate::hscomplex::{dhat, CharacterGroup, DiffCochain};
use crate::plforms::{d, whitney, PeriodMap, PrimitiveSolver, WhitneyForm};
use crate::sample::Sampler;
use crate::simplicial::{
    coboundary, coboundary_matrix, integral_cocycle_basis, rational_cocycle_basis, Cochain, Ring,
    SimplicialComplex,
};

/// Everything the checks at one degree share: the complex, the degree,
/// the seed, the maps under test and the prepared linear algebra.
pub struct HexagonContext<'a> {
    complex: &'a SimplicialComplex,
    k: isize,
    seed: u64,
    trials: usize,
    maps: HexagonMaps,
    characters: CharacterGroup<'a>,
    cone: ConeGroup<'a>,
    cocycles_k: Vec<Vec<Rational>>,
    cocycles_km1: Vec<Vec<Rational>>,
    rational_cocycles_km1: Vec<Vec<Rational>>,
    primitives_k: PrimitiveSolver,
    integral_primitives_k: IntegerSolver,
    periods_k: PeriodMap,
    periods_km1: PeriodMap,
    /// `ℤ·Z^k(ℤ) + ℚ·B^k(ℚ)`, the de Rham image of `Ω^k_ℤ`.
    omega_z_k: PreparedSubgroup,
    /// `ℤ·Z^{k−1}(ℤ) + ℚ·B^{k−1}(ℚ)`.
    omega_z_km1: PreparedSubgroup,
}

fn omega_z(complex: &SimplicialComplex, k: isize, cocycles: &[Vec<Rational>]) -> PreparedSubgroup {
    MixedSubgroup::new(complex.count(k))
        .with_lattice(cocycles.to_vec())
        .with_space(
            coboundary_matrix(complex, k - 1)
                .columns()
                .iter()
                .map(|c| int_vec_to_rational(c))
                .collect::<Vec<_>>(),
        )
        .prepare()
}

fn rational_basis(basis: Vec<Vec<Integer>>) -> Vec<Vec<Rational>> {
    basis.iter().map(|c| int_vec_to_rational(c)).collect()
}

impl<'a> HexagonContext<'a> {
    pub fn new(complex: &'a SimplicialComplex, k: isize, seed: u64, trials: usize) -> Self {
        assert!(k >= 1, "degree must be positive");
        let cocycles_k = rational_basis(integral_cocycle_basis(complex, k));
        let cocycles_km1 = rational_basis(integral_cocycle_basis(complex, k - 1));
        HexagonContext {
            complex,
            k,
            seed,
            trials,
            maps: HexagonMaps::new(),
            characters: CharacterGroup::new(complex, k),
            cone: ConeGroup::new(complex, k - 1),
            omega_z_k: omega_z(complex, k, &cocycles_k),
            omega_z_km1: omega_z(complex, k - 1, &cocycles_km1),
            cocycles_k,
            cocycles_km1,
            rational_cocycles_km1: rational_cocycle_basis(complex, k - 1),
            primitives_k: PrimitiveSolver::new(complex, k),
            integral_primitives_k: IntegerSolver::new(&coboundary_matrix(complex, k - 1)),
            periods_k: PeriodMap::new(complex, k),
            periods_km1: PeriodMap::new(complex, k - 1),
        }
    }

    pub fn with_maps(mut self, maps: HexagonMaps) -> Self {
        self.maps = maps;
        self
    }

    pub fn complex(&self) -> &'a SimplicialComplex {
        self.complex
    }

    pub fn degree(&self) -> isize {
        self.k
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn trials(&self) -> usize {
        self.trials
    }

    pub fn maps(&self) -> &HexagonMaps {
        &self.maps
    }

    pub fn characters(&self) -> &CharacterGroup<'a> {
        &self.characters
    }

    pub fn cone(&self) -> &ConeGroup<'a> {
        &self.cone
    }

    pub fn periods(&self, degree: isize) -> &PeriodMap {
        if degree == self.k {
            &self.periods_k
        } else {
            assert_eq!(degree, self.k - 1, "period degree");
            &self.periods_km1
        }
    }

    pub(crate) fn sampler(&self, name: &str) -> Sampler {
        Sampler::for_check(self.seed, &format!("{name}/{}", self.k))
    }

    /// At least 25 samples for the statements that promise that many.
    pub(crate) fn samples(&self) -> usize {
        self.trials.max(25)
    }

    // generators of Ẑ(k)^k

    /// `(c_i, 0, W(c_i))` for a ℤ-basis `c_i` of the integral cocycles.
    pub fn cocycle_lattice(&self) -> Vec<DiffCochain> {
        self.cocycles_k
            .iter()
            .map(|c| {
                let c = Cochain::rational(self.k, c.clone());
                DiffCochain::character(
                    c.retag(Ring::Integer).expect("integral"),
                    Cochain::zero(self.complex, self.k - 1, Ring::Rational),
                    whitney(&c),
                )
                .expect("well-formed")
            })
            .collect()
    }

    /// `(0, e, W(δe))` for the unit `(k−1)`-cochains `e`.
    pub fn cocycle_space(&self) -> Vec<DiffCochain> {
        (0..self.complex.count(self.k - 1))
            .map(|s| {
                let e = Cochain::indicator(self.complex, self.k - 1, s, Ring::Rational);
                let w = whitney(&coboundary(self.complex, &e));
                DiffCochain::character(
                    Cochain::zero(self.complex, self.k, Ring::Integer),
                    e,
                    w,
                )
                .expect("well-formed")
            })
            .collect()
    }

    pub fn cocycle_generators(&self) -> Vec<DiffCochain> {
        let mut out = self.cocycle_lattice();
        out.extend(self.cocycle_space());
        out
    }

    /// `d̂(e, 0)` and `d̂(0, f)` for unit cochains `e`, `f`.
    pub fn coboundary_generators(&self) -> Vec<DiffCochain> {
        let x = self.complex;
        let k = self.k;
        let mut out = Vec::new();
        for s in 0..x.count(k - 1) {
            let y = DiffCochain::new(
                k,
                Cochain::indicator(x, k - 1, s, Ring::Integer),
                Cochain::zero(x, k - 2, Ring::Rational),
                None,
            )
            .expect("well-formed");
            out.push(dhat(x, &y));
        }
        for f in 0..x.count(k - 2) {
            let y = DiffCochain::new(
                k,
                Cochain::zero(x, k - 1, Ring::Integer),
                Cochain::indicator(x, k - 2, f, Ring::Rational),
                None,
            )
            .expect("well-formed");
            out.push(dhat(x, &y));
        }
        out
    }

    // random elements

    pub(crate) fn integral_cocycle(&self, s: &mut Sampler, degree: isize) -> Cochain {
        let basis = if degree == self.k { &self.cocycles_k } else { &self.cocycles_km1 };
        let v = s.combination(self.complex.count(degree), basis, &[]);
        Cochain::rational(degree, v)
            .retag(Ring::Integer)
            .expect("integral combination")
    }

    /// `(c, T, W(c + δT))` with random integral cocycle `c` and random `T`.
    pub fn sample_cocycle(&self, s: &mut Sampler) -> DiffCochain {
        let c = self.integral_cocycle(s, self.k);
        let t = s.rat_cochain(self.complex, self.k - 1);
        let omega = whitney(&(&c.to_rational() + &coboundary(self.complex, &t)));
        DiffCochain::character(c, t, omega).expect("well-formed")
    }

    /// `d̂(c', T')` for random `c'`, `T'`.
    pub fn sample_coboundary(&self, s: &mut Sampler) -> DiffCochain {
        dhat(self.complex, &self.sample_preimage(s))
    }

    pub(crate) fn sample_preimage(&self, s: &mut Sampler) -> DiffCochain {
        DiffCochain::new(
            self.k,
            s.int_cochain(self.complex, self.k - 1),
            s.rat_cochain(self.complex, self.k - 2),
            None,
        )
        .expect("well-formed")
    }

    pub(crate) fn sample_cone_cocycle(&self, s: &mut Sampler) -> ConeCochain {
        self.cone.sample_cocycle(s)
    }

    /// A random closed `(k−1)`-form: a rational cocycle plus an exact form.
    pub(crate) fn sample_closed_form(&self, s: &mut Sampler) -> WhitneyForm {
        let v = s.combination(self.complex.count(self.k - 1), &[], &self.rational_cocycles_km1);
        let exact = d(self.complex, &s.form(self.complex, self.k - 2));
        &WhitneyForm::new(self.k - 1, v) + &exact
    }

    /// A random element of `Ω^{k−1}_ℤ` as `(W(z) + dθ, z, θ)`.
    pub(crate) fn sample_integral_form(&self, s: &mut Sampler) -> (WhitneyForm, Cochain, WhitneyForm) {
        let z = self.integral_cocycle(s, self.k - 1);
        let theta = s.form(self.complex, self.k - 2);
        let eta = &whitney(&z) + &d(self.complex, &theta);
        (eta, z, theta)
    }

    /// A random element of `Ω^k_ℤ`.
    pub(crate) fn sample_integral_top_form(&self, s: &mut Sampler) -> WhitneyForm {
        let c = self.integral_cocycle(s, self.k);
        let theta = s.form(self.complex, self.k - 1);
        &whitney(&c) + &d(self.complex, &theta)
    }

    /// Whether `c ∈ B^k(ℤ)`, with a witness `c'` such that `δc' = c`.
    pub(crate) fn integral_primitive(&self, c: &Cochain) -> Option<Cochain> {
        self.integral_primitives_k
            .solve_rational(c.values())
            .ok()
            .map(|v| Cochain::integral(self.k - 1, &v))
    }

    /// `T` with `δT = t`, if `t` is exact.
    pub(crate) fn rational_primitive(&self, t: &Cochain) -> Option<Cochain> {
        self.primitives_k
            .solve(t)
            .ok()
            .map(|w| crate::plforms::derham_cochain(&w))
    }

    pub(crate) fn omega_z(&self, degree: isize) -> &PreparedSubgroup {
        if degree == self.k {
            &self.omega_z_k
        } else {
            &self.omega_z_km1
        }
    }

    pub(crate) fn rational_cocycles_km1(&self) -> &[Vec<Rational>] {
        &self.rational_cocycles_km1
    }

    pub(crate) fn integral_cocycles(&self, degree: isize) -> &[Vec<Rational>] {
        if degree == self.k {
            &self.cocycles_k
        } else {
            &self.cocycles_km1
        }
    }
}
