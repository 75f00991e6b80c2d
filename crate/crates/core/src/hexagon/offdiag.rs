//! The off-diagonal sequence `Ω^{k−1} → Ẑ(k)^k → Z^k(ℤ) × B^k(ℚ)`.
//!
//! `ker I = {(0, T, 0) : δT = 0}` lies in the image of `a`, but `I∘a`
//! is `(0, δ∫η)`, so the sequence fails to be a complex as soon as some
//! `(k−1)`-cochain has nonzero coboundary.

use alloc::string::String;
use alloc::vec;

use super::HexagonContext;
use crate::plforms::WhitneyForm;
use crate::report::{CheckReport, Counterexample, Element, Status};
use crate::simplicial::coboundary_matrix;

pub fn check_off_diagonal_note(ctx: &HexagonContext<'_>) -> CheckReport {
    let x = ctx.complex();
    let k = ctx.degree();
    let m = ctx.maps();
    let delta = coboundary_matrix(x, k - 1);
    let column = (0..delta.cols()).find(|&c| delta.column(c).iter().any(|v| *v != 0.into()));
    let Some(column) = column else {
        return CheckReport {
            name: "off_diagonal".into(),
            status: Status::NoCounterexample,
            witness_count: 0,
            counterexample: None,
        };
    };
    let eta = WhitneyForm::elementary(x, k - 1, column);
    let a = m.a(x, &eta);
    let pair = m.big_i(x, &a);
    let elements = vec![
        (String::from("eta"), Element::from(eta)),
        (String::from("a(eta)"), Element::from(a)),
        (String::from("I(a(eta)).cocycle"), Element::from(pair.cocycle)),
        (String::from("I(a(eta)).exact"), Element::from(pair.exact)),
    ];
    CheckReport {
        name: "off_diagonal".into(),
        status: Status::NotExactConfirmed,
        witness_count: 1,
        counterexample: Some(Counterexample {
            violation: "I∘a ≠ 0, so im a is not contained in ker I".into(),
            elements,
        }),
    }
}
