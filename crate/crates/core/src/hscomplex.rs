//! The differential cochain complex `Ĉ(q)^*` with `A = ℤ`, real
//! coefficients modeled by ℚ and forms by Whitney forms.
//!
//! A cochain of level `q` and degree `k` is a triple `(c, T, ω)` with `c`
//! an integral `k`-cochain, `T` a rational `(k−1)`-cochain and `ω` a
//! `k`-form, the form being present only when `k ≥ q`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::exactalg::matrix::int_vec_to_rational;
use crate::exactalg::{Certificate, Membership, MixedSubgroup, PreparedSubgroup, Rational};
use crate::plforms::{d, derham_cochain, WhitneyForm};
use crate::simplicial::{
    boundary, coboundary, coboundary_matrix, mod_one, Chain, Cochain, Ring, SimplicialComplex,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffCochain {
    level: isize,
    c: Cochain,
    t: Cochain,
    omega: Option<WhitneyForm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiffError {
    Malformed(&'static str),
    WrongLength { slot: &'static str, expected: usize, found: usize },
    NotCocycle,
    NotCycle,
    LevelMismatch { level: isize, degree: isize },
}

impl fmt::Display for DiffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffError::Malformed(what) => write!(f, "malformed differential cochain: {what}"),
            DiffError::WrongLength {
                slot,
                expected,
                found,
            } => write!(f, "slot {slot} needs {expected} values, found {found}"),
            DiffError::NotCocycle => write!(f, "differential cochain is not a cocycle"),
            DiffError::NotCycle => write!(f, "chain is not a cycle"),
            DiffError::LevelMismatch { level, degree } => {
                write!(f, "expected level equal to degree, found level {level} degree {degree}")
            }
        }
    }
}

impl DiffCochain {
    pub fn new(
        level: isize,
        c: Cochain,
        t: Cochain,
        omega: Option<WhitneyForm>,
    ) -> Result<Self, DiffError> {
        let k = c.degree();
        if c.ring() != Ring::Integer {
            return Err(DiffError::Malformed("c must be integral"));
        }
        if t.ring() != Ring::Rational {
            return Err(DiffError::Malformed("T must be rational"));
        }
        if t.degree() != k - 1 {
            return Err(DiffError::Malformed("T must have degree one less than c"));
        }
        match (&omega, k >= level) {
            (Some(w), true) if w.degree() == k => {}
            (Some(_), true) => return Err(DiffError::Malformed("form degree differs from c")),
            (None, true) => return Err(DiffError::Malformed("form slot missing")),
            (Some(_), false) => return Err(DiffError::Malformed("form slot present below the level")),
            (None, false) => {}
        }
        Ok(DiffCochain { level, c, t, omega })
    }

    /// `(c, T, ω)` at level `q = k`.
    pub fn character(c: Cochain, t: Cochain, omega: WhitneyForm) -> Result<Self, DiffError> {
        let level = c.degree();
        Self::new(level, c, t, Some(omega))
    }

    pub fn zero(complex: &SimplicialComplex, level: isize, degree: isize) -> Self {
        DiffCochain {
            level,
            c: Cochain::zero(complex, degree, Ring::Integer),
            t: Cochain::zero(complex, degree - 1, Ring::Rational),
            omega: (degree >= level).then(|| WhitneyForm::zero(complex, degree)),
        }
    }

    pub fn level(&self) -> isize {
        self.level
    }

    pub fn degree(&self) -> isize {
        self.c.degree()
    }

    pub fn c(&self) -> &Cochain {
        &self.c
    }

    pub fn t(&self) -> &Cochain {
        &self.t
    }

    pub fn omega(&self) -> Option<&WhitneyForm> {
        self.omega.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero() && self.t.is_zero() && self.omega.as_ref().is_none_or(WhitneyForm::is_zero)
    }

    pub fn check_shape(&self, complex: &SimplicialComplex) -> Result<(), DiffError> {
        let check = |slot, expected: usize, found: usize| {
            if expected == found {
                Ok(())
            } else {
                Err(DiffError::WrongLength {
                    slot,
                    expected,
                    found,
                })
            }
        };
        let k = self.degree();
        check("c", complex.count(k), self.c.len())?;
        check("T", complex.count(k - 1), self.t.len())?;
        if let Some(w) = &self.omega {
            check("omega", complex.count(k), w.len())?;
        }
        Ok(())
    }

    fn combine(
        &self,
        other: &DiffCochain,
        fc: impl Fn(&Cochain, &Cochain) -> Cochain,
        fw: impl Fn(&WhitneyForm, &WhitneyForm) -> WhitneyForm,
    ) -> DiffCochain {
        assert_eq!(self.level, other.level, "levels differ");
        DiffCochain {
            level: self.level,
            c: fc(&self.c, &other.c),
            t: fc(&self.t, &other.t),
            omega: match (&self.omega, &other.omega) {
                (Some(a), Some(b)) => Some(fw(a, b)),
                (None, None) => None,
                _ => panic!("degrees differ"),
            },
        }
    }
}

impl Add for &DiffCochain {
    type Output = DiffCochain;
    fn add(self, rhs: &DiffCochain) -> DiffCochain {
        self.combine(rhs, |a, b| a + b, |a, b| a + b)
    }
}

impl Sub for &DiffCochain {
    type Output = DiffCochain;
    fn sub(self, rhs: &DiffCochain) -> DiffCochain {
        self.combine(rhs, |a, b| a - b, |a, b| a - b)
    }
}

impl Neg for &DiffCochain {
    type Output = DiffCochain;
    fn neg(self) -> DiffCochain {
        DiffCochain {
            level: self.level,
            c: -&self.c,
            t: -&self.t,
            omega: self.omega.as_ref().map(|w| -w),
        }
    }
}

/// The differential `d̂`.
///
/// * `k ≥ q`: `(δc, ∫ω − c − δT, dω)`
/// * `k = q − 1`: `(δc, −c − δT, 0)`
/// * `k < q − 1`: `(δc, −c − δT)`
pub fn dhat(complex: &SimplicialComplex, x: &DiffCochain) -> DiffCochain {
    let k = x.degree();
    let q = x.level;
    let dc = coboundary(complex, &x.c);
    let mut t = &(-&x.c.to_rational()) - &coboundary(complex, &x.t);
    let omega = match &x.omega {
        Some(w) => {
            t = &t + &derham_cochain(w);
            Some(d(complex, w))
        }
        None if k + 1 == q => Some(WhitneyForm::zero(complex, k + 1)),
        None => None,
    };
    DiffCochain {
        level: q,
        c: dc,
        t,
        omega,
    }
}

pub fn is_cocycle(complex: &SimplicialComplex, x: &DiffCochain) -> bool {
    dhat(complex, x).is_zero()
}

/// Outcome of a coboundary test at level `q = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoboundaryTest {
    /// `y` at level `k`, degree `k − 1`, with `d̂y = x`.
    Coboundary(DiffCochain),
    /// Coboundaries at this level have zero form part.
    FormNonzero,
    /// A functional on the `(c, T)` coordinates separating `x` from the
    /// coboundaries; see [`Certificate`].
    NotCoboundary(Certificate),
}

impl CoboundaryTest {
    pub fn preimage(&self) -> Option<&DiffCochain> {
        match self {
            CoboundaryTest::Coboundary(y) => Some(y),
            _ => None,
        }
    }

    pub fn is_coboundary(&self) -> bool {
        self.preimage().is_some()
    }
}

/// Cocycles and coboundaries of `Ĉ(k)^k`, with the linear data needed to
/// test coboundary membership prepared once.
#[derive(Clone, Debug)]
pub struct CharacterGroup<'a> {
    complex: &'a SimplicialComplex,
    degree: isize,
    /// `d̂(e, 0)` for the `(k−1)`-simplices `e` (lattice part) and
    /// `d̂(0, f)` for the `(k−2)`-simplices `f` (space part), flattened to
    /// `(c, T)` coordinates.
    coboundaries: PreparedSubgroup,
}

impl<'a> CharacterGroup<'a> {
    pub fn new(complex: &'a SimplicialComplex, degree: isize) -> Self {
        let n_k = complex.count(degree);
        let n_km1 = complex.count(degree - 1);
        let n_km2 = complex.count(degree - 2);
        let d_km1 = coboundary_matrix(complex, degree - 1);
        let d_km2 = coboundary_matrix(complex, degree - 2);
        let lattice = (0..n_km1).map(|e| {
            let mut v = int_vec_to_rational(&d_km1.column(e));
            let mut t = alloc::vec![Rational::from_integer(0.into()); n_km1];
            t[e] = Rational::from_integer((-1).into());
            v.append(&mut t);
            v
        });
        let space = (0..n_km2).map(|f| {
            let mut v = alloc::vec![Rational::from_integer(0.into()); n_k];
            v.extend(d_km2.column(f).iter().map(|x| Rational::from_integer(-x)));
            v
        });
        let group = MixedSubgroup::new(n_k + n_km1)
            .with_lattice(lattice.collect::<Vec<_>>())
            .with_space(space.collect::<Vec<_>>());
        CharacterGroup {
            complex,
            degree,
            coboundaries: group.prepare(),
        }
    }

    pub fn complex(&self) -> &'a SimplicialComplex {
        self.complex
    }

    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn zero(&self) -> DiffCochain {
        DiffCochain::zero(self.complex, self.degree, self.degree)
    }

    pub fn is_cocycle(&self, x: &DiffCochain) -> bool {
        is_cocycle(self.complex, x)
    }

    pub fn is_coboundary(&self, x: &DiffCochain) -> CoboundaryTest {
        assert_eq!(x.degree(), self.degree, "degree");
        if x.omega.as_ref().is_some_and(|w| !w.is_zero()) {
            return CoboundaryTest::FormNonzero;
        }
        let mut target = x.c.values().to_vec();
        target.extend_from_slice(x.t.values());
        match self.coboundaries.membership(&target) {
            Membership::Member(w) => {
                let c = Cochain::integral(self.degree - 1, &w.lattice);
                let t = Cochain::rational(self.degree - 2, w.space);
                let y = DiffCochain::new(self.degree, c, t, None).expect("well-formed preimage");
                CoboundaryTest::Coboundary(y)
            }
            Membership::NotMember(cert) => CoboundaryTest::NotCoboundary(cert),
        }
    }

    /// Re-checks a non-membership certificate against `x`.
    pub fn certificate_verifies(&self, cert: &Certificate, x: &DiffCochain) -> bool {
        let mut target = x.c.values().to_vec();
        target.extend_from_slice(x.t.values());
        cert.verifies(self.coboundaries.group(), &target)
    }

    /// Whether `x − y` is a coboundary.
    pub fn cohomologous(&self, x: &DiffCochain, y: &DiffCochain) -> bool {
        self.is_coboundary(&(x - y)).is_coboundary()
    }
}

pub fn is_coboundary(complex: &SimplicialComplex, x: &DiffCochain) -> CoboundaryTest {
    CharacterGroup::new(complex, x.degree()).is_coboundary(x)
}

/// A cocycle of `Ĉ(k)^k`, standing for its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffClass {
    representative: DiffCochain,
}

impl DiffClass {
    pub fn new(complex: &SimplicialComplex, representative: DiffCochain) -> Result<Self, DiffError> {
        if representative.level != representative.degree() {
            return Err(DiffError::LevelMismatch {
                level: representative.level,
                degree: representative.degree(),
            });
        }
        representative.check_shape(complex)?;
        if !is_cocycle(complex, &representative) {
            return Err(DiffError::NotCocycle);
        }
        Ok(DiffClass { representative })
    }

    pub fn representative(&self) -> &DiffCochain {
        &self.representative
    }

    pub fn evaluate(&self, complex: &SimplicialComplex, z: &Chain) -> Result<Rational, DiffError> {
        evaluate_character(complex, &self.representative, z)
    }
}

/// The character of a cocycle on a `(k−1)`-cycle: `T(z) mod 1`.
pub fn evaluate_character(
    complex: &SimplicialComplex,
    x: &DiffCochain,
    z: &Chain,
) -> Result<Rational, DiffError> {
    if !is_cocycle(complex, x) {
        return Err(DiffError::NotCocycle);
    }
    if z.degree() != x.degree() - 1 || !boundary(complex, z).is_zero() {
        return Err(DiffError::NotCycle);
    }
    Ok(mod_one(&x.t.evaluate(z)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Integer;
    use crate::plforms::whitney;
    use crate::simplicial::{catalog, homology_basis};

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(Integer::from(p), Integer::from(d))
    }

    #[test]
    fn dhat_of_vertex_indicator() {
        let x = catalog("circle").unwrap();
        let t = Cochain::indicator(&x, 0, 0, Ring::Rational);
        let y = DiffCochain::character(Cochain::zero(&x, 1, Ring::Integer), t, WhitneyForm::zero(&x, 1)).unwrap();
        let dy = dhat(&x, &y);
        assert!(dy.c().is_zero());
        assert!(dy.omega().unwrap().is_zero());
        let e = |a, b| x.index_of(&[a, b]).unwrap();
        assert_eq!(dy.t().values()[e(0, 1)], q(1, 1));
        assert_eq!(dy.t().values()[e(1, 2)], q(0, 1));
        assert_eq!(dy.t().values()[e(0, 2)], q(1, 1));
    }

    #[test]
    fn regimes() {
        let x = catalog("sphere").unwrap();
        // k = q − 1 gains a zero form; k < q − 1 stays formless
        let y = DiffCochain::zero(&x, 2, 1);
        assert!(dhat(&x, &y).omega().is_some());
        let y = DiffCochain::zero(&x, 3, 1);
        assert!(dhat(&x, &y).omega().is_none());
        assert!(DiffCochain::new(1, Cochain::zero(&x, 1, Ring::Integer), Cochain::zero(&x, 0, Ring::Rational), None).is_err());
    }

    #[test]
    fn circle_generator_is_a_nontrivial_cocycle() {
        let x = catalog("circle").unwrap();
        let c = Cochain::integral(1, &[Integer::from(1), Integer::from(0), Integer::from(0)]);
        let g = DiffCochain::character(c.clone(), Cochain::zero(&x, 0, Ring::Rational), whitney(&c)).unwrap();
        let group = CharacterGroup::new(&x, 1);
        assert!(group.is_cocycle(&g));
        assert_eq!(group.is_coboundary(&g), CoboundaryTest::FormNonzero);
        assert!(group.is_coboundary(&group.zero()).is_coboundary());
    }

    #[test]
    fn coboundary_witness_reverifies() {
        let x = catalog("torus").unwrap();
        let c = Cochain::integral(0, &(0..7).map(|i| Integer::from(i * 3 - 5)).collect::<Vec<_>>());
        let y = DiffCochain::new(1, c, Cochain::zero(&x, -1, Ring::Rational), None).unwrap();
        let target = dhat(&x, &y);
        let group = CharacterGroup::new(&x, 1);
        let w = group.is_coboundary(&target);
        assert_eq!(dhat(&x, w.preimage().unwrap()), target);
    }

    #[test]
    fn character_of_a_third() {
        // (0, ∫η, dη) in degree 2 with ∫η = 1/3 around the circle
        let x = catalog("circle").unwrap();
        let z = homology_basis(&x, 1).free_cycles[0].clone();
        let e01 = x.index_of(&[0, 1]).unwrap();
        let t = Cochain::indicator(&x, 1, e01, Ring::Rational).scale(&q(1, 3));
        let a = DiffCochain::character(Cochain::zero(&x, 2, Ring::Integer), t.clone(), d(&x, &whitney(&t))).unwrap();
        assert!(is_cocycle(&x, &a));
        let v = evaluate_character(&x, &a, &z).unwrap();
        assert!(v == q(1, 3) || v == q(2, 3));
        let bad = homology_basis(&x, 0).free_cycles[0].clone();
        assert_eq!(evaluate_character(&x, &a, &bad), Err(DiffError::NotCycle));
    }
}
