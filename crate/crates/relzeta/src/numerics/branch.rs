use crate::error::{Error, Result};
use num_complex::Complex64;

/// Side of the cut [0, inf) from which a boundary value is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rim {
    Upper,
    Lower,
}

/// Square root with `Im sqrt(lambda) > 0` on C \ [0, inf).
///
/// On the positive real axis the upper-rim limit is returned (real positive
/// root). Input on the cut from below must be requested through
/// [`sqrt_on_cut`] instead of relying on signed zeros.
pub fn sqrt_upper(lambda: Complex64) -> Result<Complex64> {
    if !lambda.re.is_finite() || !lambda.im.is_finite() {
        return Err(Error::NonFinite("sqrt_upper"));
    }
    if lambda == Complex64::new(0.0, 0.0) {
        return Err(Error::domain("sqrt_upper: lambda = 0"));
    }
    let w = lambda.sqrt();
    if w.im < 0.0 || (w.im == 0.0 && w.re < 0.0) {
        Ok(-w)
    } else {
        Ok(w)
    }
}

/// Boundary value of the upper-branch square root at lambda = v^2 > 0.
///
/// Upper rim: +v. Lower rim (arg lambda -> 2pi): -v.
pub fn sqrt_on_cut(v: f64, rim: Rim) -> Complex64 {
    match rim {
        Rim::Upper => Complex64::new(v, 0.0),
        Rim::Lower => Complex64::new(-v, 0.0),
    }
}

/// Principal square root of -lambda; has positive real part on C \ [0, inf).
///
/// Coincides with `-i * sqrt_upper(lambda)`.
pub fn sqrt_neg(lambda: Complex64) -> Result<Complex64> {
    let w = sqrt_upper(lambda)?;
    Ok(Complex64::new(0.0, -1.0) * w)
}

/// Principal logarithm of -lambda; real for lambda < 0.
pub fn log_neg(lambda: Complex64) -> Result<Complex64> {
    if !lambda.re.is_finite() || !lambda.im.is_finite() {
        return Err(Error::NonFinite("log_neg"));
    }
    if lambda == Complex64::new(0.0, 0.0) {
        return Err(Error::domain("log_neg: lambda = 0"));
    }
    Ok((-lambda).ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sqrt_upper_examples() {
        assert!((sqrt_upper(c(-1.0, 0.0)).unwrap() - c(0.0, 1.0)).norm() < 1e-15);
        assert!((sqrt_upper(c(3.0, 4.0)).unwrap() - c(2.0, 1.0)).norm() < 1e-15);
        // positive real axis: upper-rim limit
        assert!((sqrt_upper(c(4.0, 0.0)).unwrap() - c(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn sqrt_upper_squares_back_and_stays_upper() {
        // deterministic pseudo-random sample off the cut
        let mut x = 0.123_f64;
        let mut step = || {
            x = (x * 9301.0 + 49297.0) % 233280.0 / 233280.0;
            x
        };
        for _ in 0..10_000 {
            let re = 20.0 * step() - 10.0;
            let im = 20.0 * step() - 10.0;
            if im.abs() < 1e-3 && re >= 0.0 {
                continue;
            }
            let l = c(re, im);
            let w = sqrt_upper(l).unwrap();
            assert!((w * w - l).norm() <= 1e-14 * l.norm().max(1.0));
            if !(l.im == 0.0 && l.re > 0.0) {
                assert!(w.im > 0.0, "Im sqrt not positive at {l}");
            }
        }
    }

    #[test]
    fn sqrt_zero_rejected() {
        assert!(sqrt_upper(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn log_neg_examples() {
        assert!(log_neg(c(-1.0, 0.0)).unwrap().norm() < 1e-15);
        let e2 = -(2.0_f64.exp());
        assert!((log_neg(c(e2, 0.0)).unwrap() - c(2.0, 0.0)).norm() < 1e-14);
        // principal branch: log(-i) = -i pi/2
        let v = log_neg(c(0.0, 1.0)).unwrap();
        assert!((v - c(0.0, -std::f64::consts::FRAC_PI_2)).norm() < 1e-15);
    }

    #[test]
    fn sqrt_neg_positive_real_part() {
        for &(re, im) in &[(-1.0, 0.0), (1.0, 1.0), (-2.0, 3.0), (5.0, -0.1)] {
            let l = c(re, im);
            let w = sqrt_neg(l).unwrap();
            assert!(w.re > 0.0, "Re sqrt(-lambda) <= 0 at {l}");
            assert!((w * w + l).norm() < 1e-13 * l.norm().max(1.0));
        }
    }

    #[test]
    fn rim_values() {
        assert_eq!(sqrt_on_cut(2.0, Rim::Upper), c(2.0, 0.0));
        assert_eq!(sqrt_on_cut(2.0, Rim::Lower), c(-2.0, 0.0));
    }
}
