//! Radian helpers.

use std::f64::consts::TAU;

/// Maps any angle into `[0, 2π)`.
pub fn normalize(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Counterclockwise sweep from direction `from` to direction `to`, in `[0, 2π)`.
pub fn ccw_delta(from: f64, to: f64) -> f64 {
    normalize(to - from)
}
