use crate::error::{Error, Result};

/// The absolute constants the bounds are stated in terms of, made explicit.
///
/// * `d`: separator constant (separator size at most `d * sqrt(m) * log2 m`).
/// * `b`: biclique exponent (dense string graphs contain `K_{s,s}` with
///   `s >= eps^b * n / log2 n`).
/// * `c`: exponent constant of the independent-set and colouring bounds.
/// * `base_case_n`: graphs up to this size are solved exactly by the
///   recursive independent-set search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSet {
    pub d: f64,
    pub b: f64,
    pub c: f64,
    pub base_case_n: usize,
}

impl Default for ParamSet {
    fn default() -> Self {
        ParamSet {
            d: 1.0,
            b: 1.0,
            c: 8.0,
            base_case_n: 18,
        }
    }
}

impl ParamSet {
    /// Builds a parameter set, defaulting `c` to `max(8d, 6b + 1)`.
    pub fn new(d: f64, b: f64, c: Option<f64>, base_case_n: usize) -> Result<Self> {
        let params = ParamSet {
            d,
            b,
            c: c.unwrap_or_else(|| Self::min_c(d, b)),
            base_case_n,
        };
        params.validate()?;
        Ok(params)
    }

    /// Smallest `C` for which the independent-set induction closes.
    pub fn min_c(d: f64, b: f64) -> f64 {
        (8.0 * d).max(6.0 * b + 1.0)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.d.is_finite() && self.d >= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "d must be >= 1, got {}",
                self.d
            )));
        }
        if !(self.b.is_finite() && self.b >= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "b must be >= 1, got {}",
                self.b
            )));
        }
        if !(self.c.is_finite() && self.c > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "C must be positive, got {}",
                self.c
            )));
        }
        if self.base_case_n < 4 {
            return Err(Error::InvalidParameter(format!(
                "base_case_n must be at least 4, got {}",
                self.base_case_n
            )));
        }
        Ok(())
    }

    /// Whether `C >= max(8d, 6b + 1)`, the range where the independent-set
    /// size target is backed by the induction.
    pub fn c_closes_induction(&self) -> bool {
        self.c >= Self::min_c(self.d, self.b)
    }
}
