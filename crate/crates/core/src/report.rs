//! Check outcomes as plain data.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cone::ConeCochain;
use crate::exactalg::Rational;
use crate::hscomplex::DiffCochain;
use crate::plforms::WhitneyForm;
use crate::simplicial::{Chain, Cochain};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    /// An explicit element shows a sequence is not exact.
    NotExactConfirmed,
    /// No such element exists at this degree.
    NoCounterexample,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotExactConfirmed => "NOT-EXACT-CONFIRMED",
            Status::NoCounterexample => "NO-COUNTEREXAMPLE-AT-THIS-DEGREE",
        }
    }

    pub fn is_fail(self) -> bool {
        self == Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Rational(Rational),
    Chain(Chain),
    Cochain(Cochain),
    Form(WhitneyForm),
    Diff(DiffCochain),
    Cone(ConeCochain),
}

impl From<Rational> for Element {
    fn from(x: Rational) -> Self {
        Element::Rational(x)
    }
}

impl From<Chain> for Element {
    fn from(x: Chain) -> Self {
        Element::Chain(x)
    }
}

impl From<Cochain> for Element {
    fn from(x: Cochain) -> Self {
        Element::Cochain(x)
    }
}

impl From<WhitneyForm> for Element {
    fn from(x: WhitneyForm) -> Self {
        Element::Form(x)
    }
}

impl From<DiffCochain> for Element {
    fn from(x: DiffCochain) -> Self {
        Element::Diff(x)
    }
}

impl From<ConeCochain> for Element {
    fn from(x: ConeCochain) -> Self {
        Element::Cone(x)
    }
}

/// A named violation together with the elements exhibiting it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub violation: String,
    pub elements: Vec<(String, Element)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub witness_count: usize,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        !self.status.is_fail()
    }
}

/// Accumulates witnesses and keeps the first violation.
#[derive(Debug)]
pub struct CheckBuilder {
    name: String,
    witnesses: usize,
    counterexample: Option<Counterexample>,
}

impl CheckBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        CheckBuilder {
            name: name.into(),
            witnesses: 0,
            counterexample: None,
        }
    }

    pub fn witness(&mut self) {
        self.witnesses += 1;
    }

    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    pub fn fail(&mut self, violation: impl Into<String>, elements: Vec<(&str, Element)>) {
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                violation: violation.into(),
                elements: elements
                    .into_iter()
                    .map(|(k, v)| (String::from(k), v))
                    .collect(),
            });
        }
    }

    /// Counts a witness when `ok`, records the violation built by
    /// `details` otherwise. Returns `ok`.
    pub fn expect(
        &mut self,
        ok: bool,
        violation: &str,
        details: impl FnOnce() -> Vec<(&'static str, Element)>,
    ) -> bool {
        if ok {
            self.witness();
        } else {
            self.fail(violation, details());
        }
        ok
    }

    pub fn finish(self) -> CheckReport {
        self.finish_with(Status::Pass)
    }

    /// Uses `status` unless a violation was recorded.
    pub fn finish_with(self, status: Status) -> CheckReport {
        let status = if self.counterexample.is_some() {
            Status::Fail
        } else {
            status
        };
        CheckReport {
            name: self.name,
            status,
            witness_count: self.witnesses,
            counterexample: self.counterexample,
        }
    }
}

/// All checks for one complex and degree, sorted by check name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub complex: String,
    pub degree: isize,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
}

impl DegreeReport {
    pub fn new(complex: impl Into<String>, degree: isize, seed: u64, mut checks: Vec<CheckReport>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        DegreeReport {
            complex: complex.into(),
            degree,
            seed,
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_violation_wins() {
        let mut b = CheckBuilder::new("x");
        b.witness();
        b.fail("first", Vec::new());
        b.fail("second", Vec::new());
        let r = b.finish_with(Status::NoCounterexample);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness_count, 1);
        assert_eq!(r.counterexample.unwrap().violation, "first");
    }

    #[test]
    fn reports_sort_checks() {
        let a = CheckBuilder::new("b").finish();
        let b = CheckBuilder::new("a").finish();
        let r = DegreeReport::new("point", 1, 0, alloc::vec![a, b]);
        assert_eq!(r.checks[0].name, "a");
        assert!(r.all_pass());
    }
}
