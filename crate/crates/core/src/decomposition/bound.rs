//! Edge bound for `K_{t,t}`-free string graphs, evaluated numerically.
//!
//! With `x = (2^8 d b)^(16 b)`, `a = 8 b` and `n0 = x t (log2 t)^a`, the
//! separator function is
//! `phi(n) = 2 d t^(1/(2b)) (log2 n)^(1 + 1/(2b)) n^(-1/(2b))`, and such a
//! graph on `n >= n0` vertices has fewer than `q n0 / 2` edges per vertex with
//! `q = prod_{i >= 0} (1 + phi((4/3)^i n0))`.
//!
//! All quantities are handled through `log2 n`, since `n0` overflows `f64`
//! quickly as `b` grows.

use crate::error::{Error, Result};
use crate::params::ParamSet;

/// Factors with `phi` below this are folded into the tail bound.
pub const PHI_CUTOFF: f64 = 1e-12;
const MAX_FACTORS: usize = 1_000_000;

/// Two-sided enclosure of an infinite product `prod (1 + phi_i)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductBracket {
    /// Product of the explicitly multiplied factors (a lower bound).
    pub lower: f64,
    /// `lower * exp(tail)` with the tail sum bounded geometrically, padded
    /// for rounding.
    pub upper: f64,
    pub factors: usize,
    pub tail_bound: f64,
}

/// Multiplies `1 + phi(i)` while `phi(i) >= cutoff`; the remaining tail is
/// bounded by `exp(phi(K) / (1 - ratio))`, valid when
/// `phi(i + 1) <= ratio * phi(i)` from `K` on.
pub fn certified_product(
    phi: impl Fn(usize) -> f64,
    ratio: f64,
    cutoff: f64,
) -> Result<ProductBracket> {
    if !(0.0..1.0).contains(&ratio) {
        return Err(Error::InvalidParameter(format!(
            "decay ratio must lie in [0, 1), got {ratio}"
        )));
    }
    let mut ln_sum = 0.0;
    let mut i = 0;
    let mut value = phi(0);
    while value >= cutoff {
        if value.is_nan() || value < 0.0 || i >= MAX_FACTORS {
            return Err(Error::InvalidParameter(format!(
                "phi({i}) = {value} is not usable"
            )));
        }
        ln_sum += value.ln_1p();
        i += 1;
        value = phi(i);
    }
    let tail_bound = value.max(0.0) / (1.0 - ratio);
    let lower = ln_sum.exp();
    let slack = 1.0 + 4.0 * (i as f64 + 2.0) * f64::EPSILON;
    Ok(ProductBracket {
        lower,
        upper: (ln_sum + tail_bound).exp() * slack,
        factors: i,
        tail_bound,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundParams {
    pub t: usize,
    pub d: f64,
    pub b: f64,
    pub log2_x: f64,
    pub a: f64,
    pub log2_n0: f64,
    /// `2^log2_n0`; infinite when it overflows.
    pub n0: f64,
    pub phi_n0: f64,
    /// `phi((4/3) n0) / phi(n0)`, which bounds every later ratio.
    pub ratio_n0: f64,
    pub product: ProductBracket,
    /// Certified upper bound on `q`.
    pub q: f64,
    /// `q n0 / 2`; infinite when it overflows.
    pub bound_per_vertex: f64,
    pub log2_bound_per_vertex: f64,
}

impl BoundParams {
    /// `phi` evaluated at `n = 2^log2_n`.
    pub fn phi_log2(&self, log2_n: f64) -> f64 {
        phi_log2(self.t, self.d, self.b, log2_n)
    }

    pub fn phi(&self, n: f64) -> f64 {
        self.phi_log2(n.log2())
    }

    /// `n0 >= e^(2b + 1)`, where `phi` starts decreasing.
    pub fn n0_in_monotone_range(&self) -> bool {
        self.log2_n0 >= (2.0 * self.b + 1.0) * std::f64::consts::LOG2_E
    }

    pub fn phi_n0_ok(&self) -> bool {
        self.phi_n0 <= 1.0 / 12.0
    }

    pub fn ratio_ok(&self) -> bool {
        self.ratio_n0 <= 1.0 - 1.0 / (12.0 * self.b)
    }

    pub fn q_ok(&self) -> bool {
        self.q <= self.b.exp()
    }
}

fn phi_log2(t: usize, d: f64, b: f64, log2_n: f64) -> f64 {
    let inv = 1.0 / (2.0 * b);
    let log2_phi =
        1.0 + d.log2() + inv * (t as f64).log2() + (1.0 + inv) * log2_n.log2() - inv * log2_n;
    log2_phi.exp2()
}

/// Builds the bound constants for `t` and checks every hypothesis the bound
/// rests on: `n0` in the monotone range, `phi(n0) <= 1/12`, the decay ratio
/// at most `1 - 1/(12b)`, and `q <= e^b`.
pub fn theorem3_bound(t: usize, params: &ParamSet) -> Result<BoundParams> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "edge bound needs t >= 2, got {t}"
        )));
    }
    params.validate()?;
    let (d, b) = (params.d, params.b);
    let log2_x = 16.0 * b * (8.0 + d.log2() + b.log2());
    let a = 8.0 * b;
    let log2_t = (t as f64).log2();
    let log2_n0 = log2_x + log2_t + a * log2_t.log2();

    let step = (4.0f64 / 3.0).log2();
    let phi_n0 = phi_log2(t, d, b, log2_n0);
    let inv = 1.0 / (2.0 * b);
    let ratio_n0 = (1.0 + step / log2_n0).powf(1.0 + inv) * (4.0f64 / 3.0).powf(-inv);

    let product = certified_product(
        |i| phi_log2(t, d, b, log2_n0 + i as f64 * step),
        ratio_n0.min(1.0 - f64::EPSILON),
        PHI_CUTOFF,
    )?;
    let q = product.upper;
    let log2_bound = q.log2() + log2_n0 - 1.0;
    let out = BoundParams {
        t,
        d,
        b,
        log2_x,
        a,
        log2_n0,
        n0: log2_n0.exp2(),
        phi_n0,
        ratio_n0,
        product,
        q,
        bound_per_vertex: log2_bound.exp2(),
        log2_bound_per_vertex: log2_bound,
    };

    let checks = [
        (out.n0_in_monotone_range(), "n0 >= e^(2b+1)"),
        (out.phi_n0_ok(), "phi(n0) <= 1/12"),
        (out.ratio_ok(), "phi(4n/3)/phi(n) <= 1 - 1/(12b) at n0"),
        (out.q_ok(), "q <= e^b"),
    ];
    if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(Error::HypothesisFailed(format!(
            "{what} fails for t = {t}, d = {d}, b = {b}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_phi_gives_unit_product() {
        let p = certified_product(|_| 0.0, 0.5, PHI_CUTOFF).unwrap();
        assert_eq!(p.lower, 1.0);
        assert_eq!(p.factors, 0);
        assert!(p.upper >= 1.0 && p.upper < 1.0 + 1e-14);
    }

    #[test]
    fn geometric_phi_bracket() {
        // direct product over enough factors to reach machine precision
        let phi = |i: usize| (11.0f64 / 12.0).powi(i as i32) / 12.0;
        let direct: f64 = (0..2000).map(|i| 1.0 + phi(i)).product();
        let p = certified_product(phi, 11.0 / 12.0, PHI_CUTOFF).unwrap();
        assert!(p.lower <= direct * (1.0 + 1e-12));
        assert!(direct <= p.upper);
        assert!(p.upper - p.lower < 1e-9);
        assert!(p.upper <= std::f64::consts::E);
    }

    #[test]
    fn default_constants_pass_every_check() {
        for t in [2, 4, 16, 256] {
            let bp = theorem3_bound(t, &ParamSet::default()).unwrap();
            assert!(bp.phi_n0 <= 1.0 / 12.0);
            assert!(bp.ratio_n0 <= 1.0 - 1.0 / 12.0);
            assert!(bp.q <= std::f64::consts::E);
            assert!(bp.q >= bp.product.lower && bp.product.lower >= 1.0);
        }
    }

    #[test]
    fn n0_for_t2_is_two_to_the_129() {
        let bp = theorem3_bound(2, &ParamSet::default()).unwrap();
        assert_eq!(bp.log2_x, 128.0);
        assert_eq!(bp.log2_n0, 129.0);
        assert_eq!(bp.n0, 2f64.powi(129));
    }

    #[test]
    fn phi_is_decreasing_past_n0() {
        let bp = theorem3_bound(16, &ParamSet::default()).unwrap();
        let mut prev = bp.phi_log2(bp.log2_n0);
        for k in 1..200 {
            let next = bp.phi_log2(bp.log2_n0 + k as f64);
            assert!(next < prev);
            prev = next;
        }
    }

    #[test]
    fn rejects_small_t_and_bad_ratio() {
        assert!(theorem3_bound(1, &ParamSet::default()).is_err());
        assert!(certified_product(|_| 0.1, 1.0, PHI_CUTOFF).is_err());
    }
}
