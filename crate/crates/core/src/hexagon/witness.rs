//! Constructive surjectivity of `R` and `I`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::{CocyclePair, HexagonContext};
use crate::exactalg::matrix::int_vec_to_rational;
use crate::exactalg::{Certificate, Membership, Rational, RowReduction, Matrix};
use crate::hscomplex::DiffCochain;
use crate::plforms::{d, derham_cochain, derham_representative, whitney, FormError, WhitneyForm};
use crate::simplicial::{coboundary, coboundary_matrix, Cochain, HomologyBasis, Ring, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurjectivityError {
    Form(FormError),
    /// Closed, but some period is not an integer.
    NotIntegral(Certificate),
    NotCocycle,
    NotExact,
}

impl fmt::Display for SurjectivityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurjectivityError::Form(e) => write!(f, "{e}"),
            SurjectivityError::NotIntegral(_) => write!(f, "form has a non-integral period"),
            SurjectivityError::NotCocycle => write!(f, "c is not an integral cocycle"),
            SurjectivityError::NotExact => write!(f, "second component is not a coboundary"),
        }
    }
}

impl From<FormError> for SurjectivityError {
    fn from(e: FormError) -> Self {
        SurjectivityError::Form(e)
    }
}

impl HexagonContext<'_> {
    /// `(c, T, ω)` with `R = ω`: `c` is an integral cocycle with
    /// `[∫ω] = j[c]` and `∫ω − c = δT`.
    pub fn witness_r_surjective(&self, omega: &WhitneyForm) -> Result<DiffCochain, SurjectivityError> {
        let x = self.complex();
        let k = self.degree();
        // rejects forms that are not closed
        self.periods(k).period_vector(x, omega)?;
        let w = match self.omega_z(k).membership(omega.coefficients()) {
            Membership::Member(w) => w,
            Membership::NotMember(cert) => return Err(SurjectivityError::NotIntegral(cert)),
        };
        let mut c = alloc::vec![Rational::zero(); x.count(k)];
        for (n, g) in w.lattice.iter().zip(self.integral_cocycles(k)) {
            let n = Rational::from_integer(n.clone());
            for (ci, gi) in c.iter_mut().zip(g) {
                *ci += gi * &n;
            }
        }
        let c = Cochain::new(k, Ring::Integer, c).expect("integral combination");
        let t = Cochain::rational(k - 1, w.space);
        Ok(DiffCochain::character(c, t, omega.clone()).expect("well-formed"))
    }

    fn check_pair(&self, pair: &CocyclePair) -> Result<Cochain, SurjectivityError> {
        let x = self.complex();
        if pair.cocycle.ring() != Ring::Integer
            || pair.cocycle.degree() != self.degree()
            || !coboundary(x, &pair.cocycle).is_zero()
        {
            return Err(SurjectivityError::NotCocycle);
        }
        self.rational_primitive(&pair.exact).ok_or(SurjectivityError::NotExact)
    }

    /// `(c, T, W(c + δT))`, which `I` sends to `(c, δT)`.
    pub fn witness_i_surjective(&self, pair: &CocyclePair) -> Result<DiffCochain, SurjectivityError> {
        let t = self.check_pair(pair)?;
        let omega = whitney(&(&pair.cocycle.to_rational() + &pair.exact));
        Ok(DiffCochain::character(pair.cocycle.clone(), t, omega).expect("well-formed"))
    }

    /// The same preimage reached the long way: start from a de Rham
    /// representative `ω₀` of `[c]`, write `∫ω₀ − c − δT = δT'`, pick `η`
    /// with `∫dη = δT'` and return `(c, T, ω₀ − dη)`.
    pub fn witness_i_surjective_adjusted(&self, pair: &CocyclePair) -> Result<DiffCochain, SurjectivityError> {
        let x = self.complex();
        let t = self.check_pair(pair)?;
        let omega0 = derham_representative(x, &pair.cocycle)?;
        let residual = &(&derham_cochain(&omega0) - &pair.cocycle.to_rational()) - &pair.exact;
        let eta = crate::plforms::find_primitive(x, &residual)?;
        let omega = &omega0 - &d(x, &eta);
        Ok(DiffCochain::character(pair.cocycle.clone(), t, omega).expect("well-formed"))
    }
}

/// A closed form of degree `basis.degree` whose periods over the free
/// cycles of `basis` are `periods`.
pub fn closed_form_with_periods(
    complex: &SimplicialComplex,
    basis: &HomologyBasis,
    periods: &[Rational],
) -> Option<WhitneyForm> {
    let k = basis.degree;
    let n = complex.count(k);
    let delta = coboundary_matrix(complex, k);
    let mut rows: Vec<Vec<Rational>> = (0..delta.rows()).map(|r| int_vec_to_rational(delta.row(r))).collect();
    rows.extend(basis.free_cycles.iter().map(|z| int_vec_to_rational(z.coeffs())));
    let mut rhs = alloc::vec![Rational::zero(); delta.rows()];
    rhs.extend_from_slice(periods);
    let v = RowReduction::new(&Matrix::from_rows(n, &rows)).solve(&rhs)?;
    Some(WhitneyForm::new(k, v))
}
