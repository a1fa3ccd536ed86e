//! Relative-tolerance sign tests.
//!
//! Every threshold comparison in the classifiers goes through [`Tolerance::compare`]:
//! a difference is treated as zero when it is within `eps` times the magnitude of
//! the largest term of the expression being tested.

use std::cmp::Ordering;

/// Comparisons whose margin is at most this many tolerance units are flagged
/// as boundary-fragile.
pub const FRAGILE_FACTOR: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eps: 1e-9 }
    }
}

impl Tolerance {
    pub fn new(eps: f64) -> Self {
        assert!(eps >= 0.0 && eps.is_finite(), "tolerance must be finite and non-negative");
        Tolerance { eps }
    }

    /// Compare `value` against `threshold` with the given term scale.
    pub fn compare(
        &self,
        quantity: &'static str,
        against: &'static str,
        value: f64,
        threshold: f64,
        scale: f64,
    ) -> Comparison {
        let scale = scale.abs().max(value.abs()).max(threshold.abs());
        let diff = value - threshold;
        let unit = self.eps * scale;
        let margin = if unit > 0.0 {
            diff / unit
        } else if diff == 0.0 {
            0.0
        } else {
            diff.signum() * f64::INFINITY
        };
        let ordering = if margin.abs() <= 1.0 {
            Ordering::Equal
        } else if diff > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        };
        Comparison { quantity, against, value, threshold, scale, margin, ordering }
    }

    /// Sign of `value` relative to a term scale.
    pub fn sign(&self, quantity: &'static str, value: f64, scale: f64) -> Comparison {
        self.compare(quantity, "0", value, 0.0, scale)
    }
}

/// One threshold decision with its margin in tolerance units.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub quantity: &'static str,
    pub against: &'static str,
    pub value: f64,
    pub threshold: f64,
    pub scale: f64,
    /// `(value - threshold) / (eps * scale)`.
    pub margin: f64,
    pub ordering: Ordering,
}

impl Comparison {
    pub fn is_fragile(&self) -> bool {
        self.margin.abs() <= FRAGILE_FACTOR
    }

    /// Record of an exact (rational) decision: the margin is zero on equality
    /// and infinite otherwise.
    pub fn exact(
        quantity: &'static str,
        against: &'static str,
        value: f64,
        threshold: f64,
        ordering: Ordering,
    ) -> Comparison {
        let margin = match ordering {
            Ordering::Equal => 0.0,
            Ordering::Greater => f64::INFINITY,
            Ordering::Less => f64::NEG_INFINITY,
        };
        Comparison { quantity, against, value, threshold, scale: 0.0, margin, ordering }
    }
}

/// Largest absolute value in a list of terms.
pub(crate) fn max_abs(terms: &[f64]) -> f64 {
    terms.iter().fold(0.0_f64, |m, t| m.max(t.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_within_relative_tolerance() {
        let tol = Tolerance::default();
        let c = tol.compare("c", "C0", 1.0 + 5e-10, 1.0, 1.0);
        assert_eq!(c.ordering, Ordering::Equal);
        assert!(c.is_fragile());
        let c = tol.compare("c", "C0", 1.0 + 5e-8, 1.0, 1.0);
        assert_eq!(c.ordering, Ordering::Greater);
        assert!(!c.is_fragile());
    }

    #[test]
    fn zero_scale_is_exact() {
        let tol = Tolerance::default();
        assert_eq!(tol.sign("k", 0.0, 0.0).ordering, Ordering::Equal);
        assert_eq!(tol.sign("k", 0.0, 0.0).margin, 0.0);
    }

    #[test]
    fn scale_grows_with_operands() {
        let tol = Tolerance::new(1e-3);
        // difference 0.5 against operands of size 1000 is inside 1e-3 relative
        assert_eq!(tol.compare("d", "d1", 1000.5, 1000.0, 1.0).ordering, Ordering::Equal);
    }
}
