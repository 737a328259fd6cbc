//! Scalar math routed through `libm` so the crate stays `no_std`-clean and
//! results are bit-identical across targets.

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

/// Wraps `x` into the half-open interval `[lo, hi)`.
#[inline]
pub fn wrap(x: f64, lo: f64, hi: f64) -> f64 {
    let width = hi - lo;
    let mut r = libm::fmod(x - lo, width);
    if r < 0.0 {
        r += width;
    }
    lo + r
}

#[inline]
pub fn clamp(x: f64, lo: f64, hi: f64) -> f64 {
    if x < lo {
        lo
    } else if x > hi {
        hi
    } else {
        x
    }
}
