//! The nine cochain-level maps of the refined hexagon.
//!
//! Each map can be replaced by a sign-flipped variant. The checks only
//! reach the maps through [`HexagonMaps`], so a flipped sign anywhere shows
//! up as a failed identity.

use core::fmt;

use crate::cone::ConeCochain;
use crate::hscomplex::DiffCochain;
use crate::plforms::{d, derham_cochain, WhitneyForm};
use crate::simplicial::{coboundary, Cochain, Ring, SimplicialComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HexagonMap {
    I,
    R,
    Der,
    A,
    Ch,
    Beta,
    B,
    Iota,
    SmallI,
}

impl HexagonMap {
    pub const ALL: [HexagonMap; 9] = [
        HexagonMap::I,
        HexagonMap::R,
        HexagonMap::Der,
        HexagonMap::A,
        HexagonMap::Ch,
        HexagonMap::Beta,
        HexagonMap::B,
        HexagonMap::Iota,
        HexagonMap::SmallI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HexagonMap::I => "I",
            HexagonMap::R => "R",
            HexagonMap::Der => "der",
            HexagonMap::A => "a",
            HexagonMap::Ch => "ch",
            HexagonMap::Beta => "beta",
            HexagonMap::B => "b",
            HexagonMap::Iota => "iota",
            HexagonMap::SmallI => "i",
        }
    }
}

impl fmt::Display for HexagonMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(c, δT)` in `Z^k(ℤ) × B^k(ℚ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CocyclePair {
    pub cocycle: Cochain,
    pub exact: Cochain,
}

/// The maps, optionally with one sign flipped.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HexagonMaps {
    mutation: Option<HexagonMap>,
}

impl HexagonMaps {
    pub fn new() -> Self {
        HexagonMaps { mutation: None }
    }

    pub fn mutated(map: HexagonMap) -> Self {
        HexagonMaps {
            mutation: Some(map),
        }
    }

    pub fn mutation(&self) -> Option<HexagonMap> {
        self.mutation
    }

    fn flips(&self, map: HexagonMap) -> bool {
        self.mutation == Some(map)
    }

    /// `I(c, T, ω) = (c, δT)`
    pub fn big_i(&self, x: &SimplicialComplex, y: &DiffCochain) -> CocyclePair {
        let dt = coboundary(x, y.t());
        CocyclePair {
            cocycle: y.c().clone(),
            exact: if self.flips(HexagonMap::I) { -&dt } else { dt },
        }
    }

    /// `R(c, T, ω) = ω`
    pub fn r(&self, y: &DiffCochain) -> WhitneyForm {
        let w = y.omega().expect("level equals degree").clone();
        if self.flips(HexagonMap::R) {
            -&w
        } else {
            w
        }
    }

    /// `der(ω) = ∫ω`
    pub fn der(&self, omega: &WhitneyForm) -> Cochain {
        let c = derham_cochain(omega);
        if self.flips(HexagonMap::Der) {
            -&c
        } else {
            c
        }
    }

    /// `a(η) = (0, ∫η, dη)`
    pub fn a(&self, x: &SimplicialComplex, eta: &WhitneyForm) -> DiffCochain {
        let k = eta.degree() + 1;
        let deta = d(x, eta);
        let omega = if self.flips(HexagonMap::A) { -&deta } else { deta };
        DiffCochain::character(Cochain::zero(x, k, Ring::Integer), self.der(eta), omega)
            .expect("well-formed")
    }

    /// `ch(u, δS) = j(u) + δS`
    pub fn ch(&self, pair: &CocyclePair) -> Cochain {
        let u = pair.cocycle.to_rational();
        if self.flips(HexagonMap::Ch) {
            &u - &pair.exact
        } else {
            &u + &pair.exact
        }
    }

    /// `β(u, v) = (−u, δv)`
    pub fn beta(&self, x: &SimplicialComplex, y: &ConeCochain) -> CocyclePair {
        CocyclePair {
            cocycle: if self.flips(HexagonMap::Beta) { y.u().clone() } else { -y.u() },
            exact: coboundary(x, y.v()),
        }
    }

    /// `b(ω) = (0, ∫ω)`
    pub fn b(&self, x: &SimplicialComplex, omega: &WhitneyForm) -> ConeCochain {
        let v = self.der(omega);
        let v = if self.flips(HexagonMap::B) { -&v } else { v };
        ConeCochain::new(Cochain::zero(x, omega.degree() + 1, Ring::Integer), v).expect("well-formed")
    }

    /// `ι(ω) = ω`
    pub fn iota(&self, omega: &WhitneyForm) -> WhitneyForm {
        if self.flips(HexagonMap::Iota) {
            -omega
        } else {
            omega.clone()
        }
    }

    /// `i(u, v) = (−u, v, 0)`
    pub fn i(&self, x: &SimplicialComplex, y: &ConeCochain) -> DiffCochain {
        let c = if self.flips(HexagonMap::SmallI) { y.u().clone() } else { -y.u() };
        let k = c.degree();
        DiffCochain::character(c, y.v().clone(), WhitneyForm::zero(x, k)).expect("well-formed")
    }
}
