
/// Mixed relative/absolute comparison policy shared by every verdict.
///
/// Two values agree when `|a - b| <= max(abs, rel * scale)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { rel: 1e-8, abs: 1e-10 }
    }
}

impl Tolerance {
    pub fn with_rel(rel: f64) -> Self {
        Tolerance { rel, ..Tolerance::default() }
    }

    /// At least `rel` relative tolerance (keeps a looser user setting).
    pub fn with_floor(&self, rel: f64) -> Self {
        Tolerance { rel: self.rel.max(rel), abs: self.abs }
    }

    /// Admissible deviation for quantities of magnitude `scale`.
    pub fn bound(&self, scale: f64) -> f64 {
        (self.rel * scale.abs()).max(self.abs)
    }

    pub fn eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.bound(a.abs().max(b.abs()))
    }

    pub fn is_zero(&self, value: f64, scale: f64) -> bool {
        value.abs() <= self.bound(scale)
    }
}
