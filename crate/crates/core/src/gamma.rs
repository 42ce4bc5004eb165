//! Real-argument Gamma function and relatives.
//!
//! `gamma` uses a 13-term rational Lanczos approximation (g ≈ 6.0247) with
//! reflection below 0.5. Relative error stays under 1e-13 across [-170, 170];
//! integer arguments up to 23 return exact factorials.

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 6.024680040776729583740234375;

const LANCZOS_NUM: [f64; 13] = [
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
];

const LANCZOS_DEN: [f64; 13] = [
    0.0,
    39916800.0,
    120543840.0,
    150917976.0,
    105258076.0,
    45995730.0,
    13339535.0,
    2637558.0,
    357423.0,
    32670.0,
    1925.0,
    66.0,
    1.0,
];

/// (n-1)! for n = 1..=23; all values exactly representable in f64.
const FACTORIALS: [f64; 23] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
    51090942171709440000.0,
    1124000727777607680000.0,
];

fn lanczos_sum(x: f64) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    if x < 10.0 {
        for k in (0..13).rev() {
            num = num * x + LANCZOS_NUM[k];
            den = den * x + LANCZOS_DEN[k];
        }
    } else {
        // Horner in 1/x keeps intermediate magnitudes flat for large x.
        let xi = 1.0 / x;
        for k in 0..13 {
            num = num * xi + LANCZOS_NUM[k];
            den = den * xi + LANCZOS_DEN[k];
        }
    }
    num / den
}

/// sin(pi x) with the integer part of the reduction carried exactly.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let s = (std::f64::consts::PI * (x - n)).sin();
    if n.rem_euclid(2.0) == 1.0 { -s } else { s }
}

fn is_non_positive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Lanczos core, valid for x >= 0.5.
fn gamma_positive(x: f64) -> f64 {
    let zgh = x + LANCZOS_G - 0.5;
    let p = lanczos_sum(x);
    if x > 140.0 {
        // zgh^(x-0.5) alone overflows before gamma itself does; split the power.
        let h = zgh.powf((x - 0.5) / 2.0);
        p * h * ((-zgh).exp() * h)
    } else {
        p * zgh.powf(x - 0.5) * (-zgh).exp()
    }
}

/// Gamma(x). Poles (x a non-positive integer) return NaN.
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() || is_non_positive_integer(x) {
        return f64::NAN;
    }
    if x == x.floor() && x <= 23.0 {
        return FACTORIALS[(x as usize) - 1];
    }
    if x >= 0.5 {
        return gamma_positive(x);
    }
    if x < -170.5 {
        // Reflection through gamma(1-x) overflows; assemble in log space so
        // the subnormal tail comes out right.
        let s = sin_pi(x);
        let lg = (std::f64::consts::PI / s.abs()).ln() - log_gamma(1.0 - x);
        return lg.exp().copysign(s);
    }
    std::f64::consts::PI / (sin_pi(x) * gamma_positive(1.0 - x))
}

/// ln Gamma(x) for x > 0; NaN otherwise.
pub fn log_gamma(x: f64) -> f64 {
    if !(x > 0.0) {
        return f64::NAN;
    }
    if x < 0.5 {
        // gamma(x) is positive and far from overflow on (0, 0.5).
        return gamma(x).ln();
    }
    let zgh = x + LANCZOS_G - 0.5;
    lanczos_sum(x).ln() + (x - 0.5) * zgh.ln() - zgh
}

/// 1/Gamma(x), entire: poles map to exactly 0.
pub fn recip_gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_non_positive_integer(x) {
        return 0.0;
    }
    if x >= 0.5 {
        let g = gamma(x);
        if g.is_finite() {
            return 1.0 / g;
        }
        // x beyond ~171.6: gamma overflows but its reciprocal is an honest
        // subnormal; go through logs.
        return (-log_gamma(x)).exp();
    }
    sin_pi(x) * gamma_positive(1.0 - x) / std::f64::consts::PI
}

/// Gamma(a)/Gamma(b) for a, b > 0, stable when both arguments are large.
pub fn gamma_ratio(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0) || !(b > 0.0) {
        return Err(Error::Domain(format!(
            "gamma_ratio requires positive arguments, got ({a}, {b})"
        )));
    }
    if a > 20.0 && b > 20.0 {
        // Direct evaluation overflows near 171; the log difference stays small.
        Ok((log_gamma(a) - log_gamma(b)).exp())
    } else {
        Ok(gamma(a) * recip_gamma(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_arguments_are_exact() {
        assert_eq!(gamma(1.0), 1.0);
        assert_eq!(gamma(2.0), 1.0);
        assert_eq!(gamma(3.0), 2.0);
        assert_eq!(gamma(7.0), 720.0);
        assert_eq!(gamma(23.0), 1124000727777607680000.0);
        assert_eq!(recip_gamma(1.0), 1.0);
        assert_eq!(recip_gamma(3.0), 0.5);
    }

    #[test]
    fn poles_are_nan_and_reciprocal_poles_are_zero() {
        for x in [0.0, -1.0, -2.0, -37.0] {
            assert!(gamma(x).is_nan());
            assert_eq!(recip_gamma(x), 0.0);
        }
    }

    #[test]
    fn sin_pi_exact_at_half_integers() {
        assert_eq!(sin_pi(0.5), 1.0);
        assert_eq!(sin_pi(1.5), -1.0);
        assert_eq!(sin_pi(-0.5), -1.0);
        assert_eq!(sin_pi(100.5), 1.0);
        assert_eq!(sin_pi(3.0), 0.0);
    }

    #[test]
    fn half_integer_value() {
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((gamma(0.5) - sqrt_pi).abs() < 1e-15 * sqrt_pi);
        assert!((gamma(-0.5) + 2.0 * sqrt_pi).abs() < 1e-14 * sqrt_pi);
    }

    #[test]
    fn log_gamma_outside_domain_is_nan() {
        assert!(log_gamma(0.0).is_nan());
        assert!(log_gamma(-3.2).is_nan());
    }

    #[test]
    fn ratio_large_arguments() {
        // Gamma(x+1)/Gamma(x) = x even where Gamma overflows.
        let r = gamma_ratio(200.5, 199.5).unwrap();
        assert!((r - 199.5).abs() < 1e-10 * 199.5);
    }

    #[test]
    fn ratio_rejects_non_positive() {
        assert!(gamma_ratio(-1.0, 2.0).is_err());
        assert!(gamma_ratio(1.0, 0.0).is_err());
    }

    #[test]
    fn recip_gamma_beyond_overflow_is_subnormal_not_zero() {
        let v = recip_gamma(172.4);
        assert!(v > 0.0 && v < 1e-300);
    }
}
