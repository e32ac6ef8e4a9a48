//! Numeric witnesses attached to every yes/no answer.

use alloc::string::String;
use alloc::vec::Vec;

use crate::Tolerance;

/// One compared equality `lhs = rhs`, admissible up to `bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub bound: f64,
}

impl Witness {
    /// Compares `lhs` and `rhs` at the scale of the larger of the two.
    pub fn compare(label: impl Into<String>, lhs: f64, rhs: f64, tol: &Tolerance) -> Self {
        let bound = tol.bound(lhs.abs().max(rhs.abs()));
        Witness { label: label.into(), lhs, rhs, bound }
    }

    /// Compares at an explicit scale (for sums with cancellation).
    pub fn scaled(label: impl Into<String>, lhs: f64, rhs: f64, scale: f64, tol: &Tolerance) -> Self {
        Witness { label: label.into(), lhs, rhs, bound: tol.bound(scale) }
    }

    pub fn residual(&self) -> f64 {
        (self.lhs - self.rhs).abs()
    }

    pub fn holds(&self) -> bool {
        self.residual() <= self.bound
    }
}

/// A yes/no answer together with the comparisons that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    /// Holds iff every witness holds.
    pub fn all(witnesses: Vec<Witness>) -> Self {
        let holds = witnesses.iter().all(Witness::holds);
        Verdict { holds, witnesses }
    }

    pub fn single(w: Witness) -> Self {
        Self::all(alloc::vec![w])
    }

    /// Largest `residual / bound` ratio, useful to spot tolerance-boundary cases.
    pub fn worst_ratio(&self) -> f64 {
        self.witnesses
            .iter()
            .map(|w| w.residual() / w.bound.max(f64::MIN_POSITIVE))
            .fold(0.0, f64::max)
    }
}

/// Two independently computed verdicts for the same statement.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossChecked {
    /// Closed-form or sum criterion.
    pub criterion: Verdict,
    /// Direct comparison of eigenmatrix entries.
    pub direct: Verdict,
}

impl CrossChecked {
    pub fn agree(&self) -> bool {
        self.criterion.holds == self.direct.holds
    }

    pub fn holds(&self) -> bool {
        self.criterion.holds && self.direct.holds
    }
}
