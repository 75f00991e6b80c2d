use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::complex::SimplicialComplex;
use crate::exactalg::{IntMatrix, Integer, Matrix, Rational};

/// Coefficient tag. ℚ stands in for ℝ and ℚ/ℤ for ℝ/ℤ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integer,
    Rational,
    RationalModInteger,
}

impl Ring {
    pub fn tag(self) -> &'static str {
        match self {
            Ring::Integer => "Z",
            Ring::Rational => "Q",
            Ring::RationalModInteger => "QmodZ",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Ring> {
        match tag {
            "Z" => Some(Ring::Integer),
            "Q" => Some(Ring::Rational),
            "QmodZ" => Some(Ring::RationalModInteger),
            _ => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CochainError {
    NotIntegral { index: usize },
    WrongLength { degree: isize, expected: usize, found: usize },
    DegreeMismatch { expected: isize, found: isize },
    RingMismatch { expected: Ring, found: Ring },
}

impl fmt::Display for CochainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CochainError::NotIntegral { index } => {
                write!(f, "value {index} of an integral cochain is not an integer")
            }
            CochainError::WrongLength {
                degree,
                expected,
                found,
            } => write!(
                f,
                "degree-{degree} cochain needs {expected} values, found {found}"
            ),
            CochainError::DegreeMismatch { expected, found } => {
                write!(f, "expected degree {expected}, found {found}")
            }
            CochainError::RingMismatch { expected, found } => {
                write!(f, "expected ring {expected}, found {found}")
            }
        }
    }
}

/// Fractional part in `[0, 1)`.
pub fn mod_one(x: &Rational) -> Rational {
    x - Rational::from_integer(x.floor().to_integer())
}

/// One value per `degree`-simplex. Integral cochains store integral
/// rationals; ℚ/ℤ cochains store representatives in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: isize,
    ring: Ring,
    values: Vec<Rational>,
}

impl Cochain {
    pub fn new(degree: isize, ring: Ring, values: Vec<Rational>) -> Result<Self, CochainError> {
        let values = match ring {
            Ring::Integer => {
                if let Some(index) = values.iter().position(|v| !v.is_integer()) {
                    return Err(CochainError::NotIntegral { index });
                }
                values
            }
            Ring::Rational => values,
            Ring::RationalModInteger => values.iter().map(mod_one).collect(),
        };
        Ok(Cochain {
            degree,
            ring,
            values,
        })
    }

    pub fn integral(degree: isize, values: &[Integer]) -> Self {
        Cochain {
            degree,
            ring: Ring::Integer,
            values: values.iter().map(|v| Rational::from_integer(v.clone())).collect(),
        }
    }

    pub fn rational(degree: isize, values: Vec<Rational>) -> Self {
        Cochain {
            degree,
            ring: Ring::Rational,
            values,
        }
    }

    pub fn mod_one(degree: isize, values: &[Rational]) -> Self {
        Cochain {
            degree,
            ring: Ring::RationalModInteger,
            values: values.iter().map(mod_one).collect(),
        }
    }

    pub fn zero(complex: &SimplicialComplex, degree: isize, ring: Ring) -> Self {
        Cochain {
            degree,
            ring,
            values: vec![Rational::zero(); complex.count(degree)],
        }
    }

    /// Value 1 on simplex `index`, 0 elsewhere.
    pub fn indicator(complex: &SimplicialComplex, degree: isize, index: usize, ring: Ring) -> Self {
        let mut c = Self::zero(complex, degree, ring);
        c.values[index] = Rational::one();
        c
    }

    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn integer_values(&self) -> Option<Vec<Integer>> {
        crate::exactalg::matrix::rational_vec_to_int(&self.values)
    }

    pub fn check_shape(&self, complex: &SimplicialComplex) -> Result<(), CochainError> {
        let expected = complex.count(self.degree);
        if expected != self.values.len() {
            return Err(CochainError::WrongLength {
                degree: self.degree,
                expected,
                found: self.values.len(),
            });
        }
        Ok(())
    }

    /// Same values, retagged. Integral cochains become rational ones; this
    /// is the coefficient inclusion `ℤ ↪ ℚ`.
    pub fn to_rational(&self) -> Cochain {
        Cochain {
            degree: self.degree,
            ring: Ring::Rational,
            values: self.values.clone(),
        }
    }

    /// Reduction `ℚ → ℚ/ℤ`.
    pub fn reduce_mod_one(&self) -> Cochain {
        Cochain::mod_one(self.degree, &self.values)
    }

    pub fn retag(&self, ring: Ring) -> Result<Cochain, CochainError> {
        Cochain::new(self.degree, ring, self.values.clone())
    }

    pub fn scale(&self, factor: &Rational) -> Cochain {
        let values = self.values.iter().map(|v| v * factor).collect();
        Cochain::new(self.degree, self.ring, values).expect("scaling kept within ring")
    }

    /// Pairing with a chain of the same degree.
    pub fn evaluate(&self, chain: &Chain) -> Rational {
        assert_eq!(self.degree, chain.degree(), "pairing degrees differ");
        assert_eq!(self.values.len(), chain.coeffs().len(), "pairing lengths differ");
        let mut acc = Rational::zero();
        for (v, c) in self.values.iter().zip(chain.coeffs()) {
            if !c.is_zero() {
                acc += v * Rational::from_integer(c.clone());
            }
        }
        if self.ring == Ring::RationalModInteger {
            mod_one(&acc)
        } else {
            acc
        }
    }

    fn zip_with(&self, other: &Cochain, f: impl Fn(&Rational, &Rational) -> Rational) -> Cochain {
        assert_eq!(self.degree, other.degree, "cochain degrees differ");
        assert_eq!(self.ring, other.ring, "cochain rings differ");
        assert_eq!(self.values.len(), other.values.len(), "cochain lengths differ");
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Cochain::new(self.degree, self.ring, values).expect("ring closed under addition")
    }
}

impl Add for &Cochain {
    type Output = Cochain;

    fn add(self, rhs: &Cochain) -> Cochain {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Cochain {
    type Output = Cochain;

    fn sub(self, rhs: &Cochain) -> Cochain {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Cochain {
    type Output = Cochain;

    fn neg(self) -> Cochain {
        let values = self.values.iter().map(|v| -v).collect();
        Cochain::new(self.degree, self.ring, values).expect("ring closed under negation")
    }
}

/// Integer chain, one coefficient per `degree`-simplex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain {
    degree: isize,
    coeffs: Vec<Integer>,
}

impl Chain {
    pub fn new(degree: isize, coeffs: Vec<Integer>) -> Self {
        Chain { degree, coeffs }
    }

    pub fn zero(complex: &SimplicialComplex, degree: isize) -> Self {
        Chain {
            degree,
            coeffs: vec![Integer::zero(); complex.count(degree)],
        }
    }

    pub fn simplex(complex: &SimplicialComplex, degree: isize, index: usize) -> Self {
        let mut c = Self::zero(complex, degree);
        c.coeffs[index] = Integer::one();
        c
    }

    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Integer) -> Chain {
        Chain {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }
}

impl Add for &Chain {
    type Output = Chain;

    fn add(self, rhs: &Chain) -> Chain {
        assert_eq!(self.degree, rhs.degree, "chain degrees differ");
        Chain {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

/// `∂` on chains.
pub fn boundary(complex: &SimplicialComplex, chain: &Chain) -> Chain {
    let k = chain.degree;
    let mut out = Chain::zero(complex, k - 1);
    if k <= 0 {
        return out;
    }
    for (j, c) in chain.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for &(f, sign) in complex.faces(k as usize, j) {
            if sign > 0 {
                out.coeffs[f] += c;
            } else {
                out.coeffs[f] -= c;
            }
        }
    }
    out
}

/// `(δx)(σ) = x(∂σ)`; preserves the ring tag.
pub fn coboundary(complex: &SimplicialComplex, x: &Cochain) -> Cochain {
    let k = x.degree;
    let target = k + 1;
    let mut values = vec![Rational::zero(); complex.count(target)];
    if target >= 1 {
        for (j, slot) in values.iter_mut().enumerate() {
            for &(f, sign) in complex.faces(target as usize, j) {
                let v = &x.values[f];
                if sign > 0 {
                    *slot += v;
                } else {
                    *slot -= v;
                }
            }
        }
    }
    Cochain::new(target, x.ring, values).expect("coboundary preserves the ring")
}

/// Matrix of `δ: C^k → C^{k+1}`, shape `count(k+1) × count(k)`. Defined
/// for every `k`, including the zero maps at the ends.
pub fn coboundary_matrix(complex: &SimplicialComplex, k: isize) -> IntMatrix {
    let rows = complex.count(k + 1);
    let cols = complex.count(k);
    let mut m: IntMatrix = Matrix::zeros(rows, cols);
    if k + 1 >= 1 && cols > 0 {
        for j in 0..rows {
            for &(f, sign) in complex.faces((k + 1) as usize, j) {
                m[(j, f)] += Integer::from(sign);
            }
        }
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeOutOfRange {
    pub degree: usize,
    pub dim: usize,
}

impl fmt::Display for DegreeOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "boundary degree {} outside 1..={}",
            self.degree, self.dim
        )
    }
}

/// Matrix of `∂_k: C_k → C_{k-1}` for `1 ≤ k ≤ dim`; columns are
/// `k`-simplices, rows `(k-1)`-simplices.
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize) -> Result<IntMatrix, DegreeOutOfRange> {
    if k == 0 || k > complex.dim() {
        return Err(DegreeOutOfRange {
            degree: k,
            dim: complex.dim(),
        });
    }
    Ok(coboundary_matrix(complex, k as isize - 1).transpose())
}
