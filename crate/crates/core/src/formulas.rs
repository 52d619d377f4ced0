//! Closed-form bound expressions.
//!
//! Rational expressions are evaluated exactly in integers. Only the expressions
//! involving the Laplacian spectral radius go through floating point, generic over
//! the scalar, with a guarded rounding step so that a value like `3.9999999996`
//! produced from an exact `4` cannot flip a ceiling or floor the wrong way.

use num_traits::Float;

use crate::error::{Error, Result};

/// Guard applied before rounding real-valued bounds.
pub const ROUNDING_EPS: f64 = 1e-9;

#[inline]
pub fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

#[inline]
pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// `ceil(x - eps)`: never larger than the true ceiling when `x` carries error below `eps`.
pub fn guarded_ceil<F: Float>(x: F, eps: F) -> i64 {
    (x - eps).ceil().to_i64().unwrap_or(i64::MAX)
}

/// `floor(x + eps)`: never smaller than the true floor when `x` carries error below `eps`.
pub fn guarded_floor<F: Float>(x: F, eps: F) -> i64 {
    (x + eps).floor().to_i64().unwrap_or(i64::MIN)
}

fn i(x: usize) -> i64 {
    x as i64
}

/// `⌈kn/(Δ+k)⌉`, a lower bound on the k-domination number.
pub fn k_domination_lower(n: usize, max_deg: usize, k: usize) -> i64 {
    ceil_div(i(k) * i(n), i(max_deg) + i(k))
}

/// Degree-parity lower bound on γ_o; `None` when the denominator vanishes (Δ = 0, δ even).
pub fn global_offensive_degree_lower(n: usize, min_deg: usize, max_deg: usize) -> Option<i64> {
    let (num, den) = if min_deg % 2 == 1 {
        (i(n) * (i(min_deg) + 1), 2 * i(max_deg) + i(min_deg) + 1)
    } else {
        (i(n) * i(min_deg), 2 * i(max_deg) + i(min_deg))
    };
    (den > 0).then(|| ceil_div(num, den))
}

/// Degree-parity lower bound on γ_ô.
pub fn global_strong_degree_lower(n: usize, min_deg: usize, max_deg: usize) -> i64 {
    let (num, den) = if min_deg % 2 == 1 {
        (i(n) * (i(min_deg) + 3), 2 * i(max_deg) + i(min_deg) + 3)
    } else {
        (i(n) * (i(min_deg) + 2), 2 * i(max_deg) + i(min_deg) + 2)
    };
    ceil_div(num, den)
}

/// Smallest nonnegative integer `s >= (p - sqrt(r)) / 4`, evaluated exactly.
fn ceil_quarter_minus_sqrt(p: i64, r: i64) -> Result<i64> {
    if r < 0 {
        return Err(Error::Domain(format!("negative radicand {r}")));
    }
    // p - 4s <= sqrt(r)  <=>  p - 4s <= 0  or  (p - 4s)^2 <= r
    let ok = |s: i64| {
        let d = p - 4 * s;
        d <= 0 || d.checked_mul(d).is_some_and(|sq| sq <= r)
    };
    Ok((0..)
        .find(|&s| ok(s))
        .expect("p - 4s eventually turns nonpositive"))
}

/// `9n² − 8n − 16m`.
pub fn order_size_radicand(n: usize, m: usize) -> i64 {
    9 * i(n) * i(n) - 8 * i(n) - 16 * i(m)
}

/// `9n² − 10n − 16m + 1`.
pub fn order_size_radicand_strong(n: usize, m: usize) -> i64 {
    9 * i(n) * i(n) - 10 * i(n) - 16 * i(m) + 1
}

/// `⌈(3n − √(9n²−8n−16m))/4⌉`.
pub fn global_offensive_order_size_lower(n: usize, m: usize) -> Result<i64> {
    ceil_quarter_minus_sqrt(3 * i(n), order_size_radicand(n, m))
}

/// `⌈(3n + 1 − √(9n²−10n−16m+1))/4⌉`.
pub fn global_strong_order_size_lower(n: usize, m: usize) -> Result<i64> {
    ceil_quarter_minus_sqrt(3 * i(n) + 1, order_size_radicand_strong(n, m))
}

/// `⌈(2m+n)/(3Δ+1)⌉`.
pub fn global_offensive_size_degree_lower(n: usize, m: usize, max_deg: usize) -> i64 {
    ceil_div(2 * i(m) + i(n), 3 * i(max_deg) + 1)
}

/// `⌈2(m+n)/(3Δ+2)⌉`.
pub fn global_strong_size_degree_lower(n: usize, m: usize, max_deg: usize) -> i64 {
    ceil_div(2 * (i(m) + i(n)), 3 * i(max_deg) + 2)
}

/// `⌈(3n−2)/(Δ+3)⌉`.
pub fn minimal_connected_complement_lower(n: usize, max_deg: usize) -> i64 {
    ceil_div(3 * i(n) - 2, i(max_deg) + 3)
}

/// `⌈(4n−2)/(Δ+4)⌉`.
pub fn minimal_connected_complement_lower_strong(n: usize, max_deg: usize) -> i64 {
    ceil_div(4 * i(n) - 2, i(max_deg) + 4)
}

/// `⌈(2m+n+2(D−1)²)/(2n+Δ+1)⌉`.
pub fn global_connected_lower(n: usize, m: usize, max_deg: usize, diam: usize) -> i64 {
    let d1 = i(diam) - 1;
    ceil_div(2 * i(m) + i(n) + 2 * d1 * d1, 2 * i(n) + i(max_deg) + 1)
}

/// `⌈2(m+n+(D−1)²)/(2n+Δ+2)⌉`.
pub fn global_connected_lower_strong(n: usize, m: usize, max_deg: usize, diam: usize) -> i64 {
    let d1 = i(diam) - 1;
    ceil_div(2 * (i(m) + i(n) + d1 * d1), 2 * i(n) + i(max_deg) + 2)
}

/// `⌊(n + p)/2⌋` for a parameter `p` (α, γ, γ_c or γ₂).
pub fn half_sum_upper(n: usize, p: usize) -> i64 {
    floor_div(i(n) + i(p), 2)
}

/// `⌊a·n/b⌋`.
pub fn fraction_of_order(n: usize, a: i64, b: i64) -> i64 {
    floor_div(a * i(n), b)
}

/// `⌊(2n − Δ)/2⌋`.
pub fn max_degree_upper(n: usize, max_deg: usize) -> i64 {
    floor_div(2 * i(n) - i(max_deg), 2)
}

/// Real value and guarded floor of `n(2μ−δ)/(2μ)`, evaluated at `mu` (callers pass
/// the upper end of the certified interval, which only weakens the bound).
pub fn spectral_upper<F: Float>(n: usize, min_deg: usize, mu: F) -> Option<(F, i64)> {
    let two = F::one() + F::one();
    if mu <= F::zero() {
        return None;
    }
    let n = F::from(n)?;
    let d = F::from(min_deg)?;
    let x = n * (two * mu - d) / (two * mu);
    Some((x, guarded_floor(x, F::from(ROUNDING_EPS)?)))
}

/// Real value and guarded ceiling of `(n/μ)·c` with `c = ⌈(δ+1)/2⌉` (plain) or
/// `⌈δ/2⌉+1` (strong).
pub fn spectral_lower<F: Float>(n: usize, min_deg: usize, mu: F, strong: bool) -> Option<(F, i64)> {
    if mu <= F::zero() {
        return None;
    }
    let c = if strong {
        min_deg.div_ceil(2) + 1
    } else {
        (min_deg + 1).div_ceil(2)
    };
    let x = F::from(n)? / mu * F::from(c)?;
    Some((x, guarded_ceil(x, F::from(ROUNDING_EPS)?)))
}

/// Real value and guarded floor of `n(μ−δ)/μ`.
pub fn spectral_independence_upper<F: Float>(n: usize, min_deg: usize, mu: F) -> Option<(F, i64)> {
    if mu <= F::zero() {
        return None;
    }
    let x = F::from(n)? * (mu - F::from(min_deg)?) / mu;
    Some((x, guarded_floor(x, F::from(ROUNDING_EPS)?)))
}
