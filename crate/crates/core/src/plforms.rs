//! Whitney (piecewise-linear) forms.
//!
//! A `k`-form is stored by its coordinates in the elementary Whitney
//! basis `w_σ`, normalized so that `∫_τ w_σ` is 1 for `τ = σ` and 0
//! otherwise. In these coordinates integration is the identity, the
//! Whitney map `W` is the identity, and `d` acts by the coboundary matrix.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::exactalg::matrix::{dot, int_vec_to_rational};
use crate::exactalg::{Rational, RowReduction};
use crate::simplicial::{
    coboundary, coboundary_matrix, homology_basis, Chain, Cochain, HomologyBasis, Ring,
    SimplicialComplex,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WhitneyForm {
    degree: isize,
    coefficients: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormError {
    WrongLength { degree: isize, expected: usize, found: usize },
    DegreeMismatch { expected: isize, found: isize },
    NotClosed,
    NotCocycle,
    /// `functional` kills every coboundary but not the target.
    NotExact { functional: Vec<Rational> },
    IntegralCoefficients,
}

impl fmt::Display for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormError::WrongLength {
                degree,
                expected,
                found,
            } => write!(
                f,
                "degree-{degree} form needs {expected} coefficients, found {found}"
            ),
            FormError::DegreeMismatch { expected, found } => {
                write!(f, "expected degree {expected}, found {found}")
            }
            FormError::NotClosed => write!(f, "form is not closed"),
            FormError::NotCocycle => write!(f, "cochain is not a cocycle"),
            FormError::NotExact { .. } => write!(f, "cochain is not a coboundary"),
            FormError::IntegralCoefficients => {
                write!(f, "expected a rational or integral cochain")
            }
        }
    }
}

impl WhitneyForm {
    pub fn new(degree: isize, coefficients: Vec<Rational>) -> Self {
        WhitneyForm {
            degree,
            coefficients,
        }
    }

    pub fn zero(complex: &SimplicialComplex, degree: isize) -> Self {
        WhitneyForm::new(degree, vec![Rational::zero(); complex.count(degree)])
    }

    /// The elementary form `w_σ` of the `index`-th `degree`-simplex.
    pub fn elementary(complex: &SimplicialComplex, degree: isize, index: usize) -> Self {
        let mut w = Self::zero(complex, degree);
        w.coefficients[index] = Rational::from_integer(1.into());
        w
    }

    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        WhitneyForm::new(
            self.degree,
            self.coefficients.iter().map(|c| c * factor).collect(),
        )
    }

    pub fn check_shape(&self, complex: &SimplicialComplex) -> Result<(), FormError> {
        let expected = complex.count(self.degree);
        if expected != self.coefficients.len() {
            return Err(FormError::WrongLength {
                degree: self.degree,
                expected,
                found: self.coefficients.len(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &WhitneyForm, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.degree, other.degree, "form degrees differ");
        assert_eq!(self.len(), other.len(), "form lengths differ");
        WhitneyForm::new(
            self.degree,
            self.coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| f(a, b))
                .collect(),
        )
    }
}

impl Add for &WhitneyForm {
    type Output = WhitneyForm;
    fn add(self, rhs: &WhitneyForm) -> WhitneyForm {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &WhitneyForm {
    type Output = WhitneyForm;
    fn sub(self, rhs: &WhitneyForm) -> WhitneyForm {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &WhitneyForm {
    type Output = WhitneyForm;
    fn neg(self) -> WhitneyForm {
        WhitneyForm::new(self.degree, self.coefficients.iter().map(|c| -c).collect())
    }
}

/// Exterior derivative.
pub fn d(complex: &SimplicialComplex, omega: &WhitneyForm) -> WhitneyForm {
    whitney(&coboundary(complex, &derham_cochain(omega)))
}

pub fn is_closed(complex: &SimplicialComplex, omega: &WhitneyForm) -> bool {
    d(complex, omega).is_zero()
}

/// `∫_c ω`.
pub fn integrate(omega: &WhitneyForm, chain: &Chain) -> Result<Rational, FormError> {
    if omega.degree != chain.degree() {
        return Err(FormError::DegreeMismatch {
            expected: omega.degree,
            found: chain.degree(),
        });
    }
    if omega.len() != chain.coeffs().len() {
        return Err(FormError::WrongLength {
            degree: omega.degree,
            expected: chain.coeffs().len(),
            found: omega.len(),
        });
    }
    Ok(dot(&omega.coefficients, &int_vec_to_rational(chain.coeffs())))
}

/// The de Rham map `∫`: the rational cochain `σ ↦ ∫_σ ω`.
pub fn derham_cochain(omega: &WhitneyForm) -> Cochain {
    Cochain::rational(omega.degree, omega.coefficients.clone())
}

/// The Whitney map `W`. Integral cochains are included into ℚ first.
pub fn whitney(x: &Cochain) -> WhitneyForm {
    assert!(
        x.ring() != Ring::RationalModInteger,
        "Whitney map needs real representatives"
    );
    WhitneyForm::new(x.degree(), x.values().to_vec())
}

/// Periods over the free homology basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodVector {
    pub degree: isize,
    pub periods: Vec<Rational>,
}

impl PeriodVector {
    pub fn is_integral(&self) -> bool {
        self.periods.iter().all(|p| p.is_integer())
    }
}

/// Homology basis of one degree, kept for repeated period computations.
#[derive(Clone, Debug)]
pub struct PeriodMap {
    basis: HomologyBasis,
}

impl PeriodMap {
    pub fn new(complex: &SimplicialComplex, degree: isize) -> Self {
        let basis = if degree < 0 {
            HomologyBasis {
                degree,
                free_cycles: Vec::new(),
                group: crate::exactalg::FgAbelianGroup::trivial(),
                cycle_lattice: Vec::new(),
            }
        } else {
            homology_basis(complex, degree as usize)
        };
        PeriodMap { basis }
    }

    pub fn basis(&self) -> &HomologyBasis {
        &self.basis
    }

    pub fn period_vector(
        &self,
        complex: &SimplicialComplex,
        omega: &WhitneyForm,
    ) -> Result<PeriodVector, FormError> {
        if omega.degree != self.basis.degree {
            return Err(FormError::DegreeMismatch {
                expected: self.basis.degree,
                found: omega.degree,
            });
        }
        omega.check_shape(complex)?;
        if !is_closed(complex, omega) {
            return Err(FormError::NotClosed);
        }
        let periods = self
            .basis
            .free_cycles
            .iter()
            .map(|z| integrate(omega, z))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PeriodVector {
            degree: omega.degree,
            periods,
        })
    }

    pub fn in_omega_a(&self, complex: &SimplicialComplex, omega: &WhitneyForm) -> Result<bool, FormError> {
        Ok(self.period_vector(complex, omega)?.is_integral())
    }
}

pub fn period_vector(complex: &SimplicialComplex, omega: &WhitneyForm) -> Result<PeriodVector, FormError> {
    PeriodMap::new(complex, omega.degree).period_vector(complex, omega)
}

/// Whether `ω` is closed with integral periods, i.e. lies in `Ω^k_ℤ`.
pub fn in_omega_a(complex: &SimplicialComplex, omega: &WhitneyForm) -> Result<bool, FormError> {
    Ok(period_vector(complex, omega)?.is_integral())
}

/// Solver for `δy = t` in a fixed degree.
#[derive(Clone, Debug)]
pub struct PrimitiveSolver {
    degree: isize,
    reduction: RowReduction,
}

impl PrimitiveSolver {
    /// Primitives of `degree`-cochains, i.e. solutions in degree `degree − 1`.
    pub fn new(complex: &SimplicialComplex, degree: isize) -> Self {
        PrimitiveSolver {
            degree,
            reduction: RowReduction::from_int(&coboundary_matrix(complex, degree - 1)),
        }
    }

    pub fn solve(&self, t: &Cochain) -> Result<WhitneyForm, FormError> {
        if t.degree() != self.degree {
            return Err(FormError::DegreeMismatch {
                expected: self.degree,
                found: t.degree(),
            });
        }
        if t.ring() == Ring::RationalModInteger {
            return Err(FormError::IntegralCoefficients);
        }
        match self.reduction.solve(t.values()) {
            Some(y) => Ok(WhitneyForm::new(self.degree - 1, y)),
            None => {
                let functional = self
                    .reduction
                    .left_kernel()
                    .into_iter()
                    .find(|g| !dot(g, t.values()).is_zero())
                    .expect("inconsistent system has a separating functional");
                Err(FormError::NotExact { functional })
            }
        }
    }
}

/// `η` with `∫dη = t`, for an exact rational cochain `t`.
pub fn find_primitive(complex: &SimplicialComplex, t: &Cochain) -> Result<WhitneyForm, FormError> {
    PrimitiveSolver::new(complex, t.degree()).solve(t)
}

/// Closed form representing the class of a rational cocycle: `W(x)`.
pub fn derham_representative(complex: &SimplicialComplex, x: &Cochain) -> Result<WhitneyForm, FormError> {
    if x.ring() == Ring::RationalModInteger {
        return Err(FormError::IntegralCoefficients);
    }
    if !coboundary(complex, x).is_zero() {
        return Err(FormError::NotCocycle);
    }
    Ok(whitney(&x.to_rational()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Integer;
    use crate::simplicial::catalog;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(Integer::from(p), Integer::from(d))
    }

    #[test]
    fn elementary_zero_form_on_circle() {
        let x = catalog("circle").unwrap();
        let dw = d(&x, &WhitneyForm::elementary(&x, 0, 0));
        let e = |a, b| x.index_of(&[a, b]).unwrap();
        assert_eq!(dw.coefficients()[e(0, 1)], q(-1, 1));
        assert_eq!(dw.coefficients()[e(1, 2)], q(0, 1));
        assert_eq!(dw.coefficients()[e(0, 2)], q(-1, 1));
    }

    #[test]
    fn integration_normalization() {
        let x = catalog("circle").unwrap();
        let e01 = x.index_of(&[0, 1]).unwrap();
        let e12 = x.index_of(&[1, 2]).unwrap();
        let w = WhitneyForm::elementary(&x, 1, e01);
        assert_eq!(integrate(&w, &Chain::simplex(&x, 1, e01)).unwrap(), q(1, 1));
        assert_eq!(integrate(&w, &Chain::simplex(&x, 1, e12)).unwrap(), q(0, 1));
        assert!(integrate(&w, &Chain::simplex(&x, 0, 0)).is_err());
        let z = &homology_basis(&x, 1).free_cycles[0];
        let two = w.scale(&q(2, 1));
        let sign = z.coeffs()[e01].clone();
        assert_eq!(integrate(&two, z).unwrap(), Rational::from_integer(sign * 2));
    }

    #[test]
    fn circle_periods() {
        let x = catalog("circle").unwrap();
        assert!(in_omega_a(&x, &WhitneyForm::zero(&x, 1)).unwrap());
        let half = WhitneyForm::elementary(&x, 1, 0).scale(&q(1, 2));
        assert!(!in_omega_a(&x, &half).unwrap());
        let c = Cochain::integral(1, &[Integer::from(3), Integer::from(0), Integer::from(0)]);
        let p = period_vector(&x, &whitney(&c)).unwrap();
        assert_eq!(p.periods.len(), 1);
        assert_eq!(num_traits::Signed::abs(&p.periods[0]), q(3, 1));
        assert!(p.is_integral());
    }

    #[test]
    fn non_closed_forms_are_rejected() {
        let x = catalog("sphere").unwrap();
        let w = WhitneyForm::elementary(&x, 1, 0);
        assert_eq!(period_vector(&x, &w), Err(FormError::NotClosed));
    }

    #[test]
    fn primitives() {
        let x = catalog("circle").unwrap();
        let eta = find_primitive(&x, &Cochain::zero(&x, 1, Ring::Rational)).unwrap();
        assert!(eta.is_zero());
        let gen = Cochain::integral(1, &[Integer::from(1), Integer::from(0), Integer::from(0)]);
        match find_primitive(&x, &gen.to_rational()) {
            Err(FormError::NotExact { functional }) => {
                assert!(!dot(&functional, gen.values()).is_zero());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn representative_of_generator_has_period_one() {
        let x = catalog("circle").unwrap();
        let gen = Cochain::integral(1, &[Integer::from(1), Integer::from(0), Integer::from(0)]);
        let w = derham_representative(&x, &gen).unwrap();
        let p = period_vector(&x, &w).unwrap();
        assert_eq!(num_traits::Signed::abs(&p.periods[0]), q(1, 1));
        let t = Cochain::indicator(&x, 0, 0, Ring::Rational);
        assert_eq!(
            derham_representative(&x, &t),
            Err(FormError::NotCocycle)
        );
    }
}
