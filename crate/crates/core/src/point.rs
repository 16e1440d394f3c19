//! Exact planar points.
//!
//! Coordinates are decimal values scaled by `10^9` and stored as `i64`.
//! Magnitudes are capped at `10^9` units so every orientation determinant
//! fits in an `i128`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{GeomError, Result};

/// Number of fractional decimal digits kept by the coordinate grid.
pub const DECIMALS: u32 = 9;
pub const SCALE: i64 = 1_000_000_000;
/// Largest admissible absolute coordinate, in scaled units.
pub const MAX_SCALED: i64 = 1_000_000_000 * SCALE;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

/// Floating point used for circle geometry, viewpoints and angles.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn minus(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }

    pub fn plus(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }

    pub fn scale(self, k: f64) -> Vec2 {
        Vec2::new(self.x * k, self.y * k)
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Vec2) -> f64 {
        self.minus(o).norm()
    }

    /// Direction angle in `[0, 2π)`.
    pub fn angle(self) -> f64 {
        crate::angle::normalize(self.y.atan2(self.x))
    }
}

impl Point {
    pub const fn from_scaled(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Point with integral coordinates.
    pub fn from_int(x: i64, y: i64) -> Self {
        Point {
            x: x * SCALE,
            y: y * SCALE,
        }
    }

    pub fn parse(x: &str, y: &str) -> Result<Self> {
        Ok(Point {
            x: parse_scaled(x)?,
            y: parse_scaled(y)?,
        })
    }

    /// Nearest grid point to a floating coordinate pair.
    pub fn from_f64(x: f64, y: f64) -> Result<Self> {
        Ok(Point {
            x: scaled_from_f64(x)?,
            y: scaled_from_f64(y)?,
        })
    }

    pub fn to_vec2(self) -> Vec2 {
        Vec2::new(self.x as f64 / SCALE as f64, self.y as f64 / SCALE as f64)
    }

    pub fn x_decimal(&self) -> String {
        format_scaled(self.x)
    }

    pub fn y_decimal(&self) -> String {
        format_scaled(self.y)
    }

    /// Lexicographic (x, then y) order used by the sweep and the hull.
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        (self.x, self.y).cmp(&(other.x, other.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x_decimal(), self.y_decimal())
    }
}

fn scaled_from_f64(v: f64) -> Result<i64> {
    if !v.is_finite() {
        return Err(GeomError::Coordinate {
            text: v.to_string(),
            reason: "not finite",
        });
    }
    let s = (v * SCALE as f64).round();
    if s.abs() > MAX_SCALED as f64 {
        return Err(GeomError::Coordinate {
            text: v.to_string(),
            reason: "magnitude exceeds 1e9",
        });
    }
    Ok(s as i64)
}

/// Parses a decimal literal (`-12`, `0.25`, `1.5e-3`, ...) onto the `10^-9`
/// grid. Extra fractional digits are rounded half away from zero.
pub fn parse_scaled(text: &str) -> Result<i64> {
    let err = |reason| GeomError::Coordinate {
        text: text.to_string(),
        reason,
    };
    let s = text.trim();
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = body[pos + 1..].parse().map_err(|_| err("bad exponent"))?;
            (&body[..pos], exp)
        }
        None => (body, 0),
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(pos) => (&mantissa[..pos], &mantissa[pos + 1..]),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err("no digits"));
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(err("not a decimal number"));
    }
    // value = digits * 10^(exponent - frac_len); we want value * 10^DECIMALS.
    let digits: String = int_part.chars().chain(frac_part.chars()).collect();
    let digits = digits.trim_start_matches('0');
    let shift = exponent as i64 - frac_part.len() as i64 + DECIMALS as i64;
    if digits.is_empty() {
        return Ok(0);
    }
    let too_big = || err("magnitude exceeds 1e9");
    let magnitude: i128 = if shift >= 0 {
        if digits.len() as i64 + shift > 20 {
            return Err(too_big());
        }
        let base: i128 = digits.parse().map_err(|_| too_big())?;
        base * 10i128.pow(shift as u32)
    } else {
        let drop = (-shift) as usize;
        if drop >= digits.len() {
            // Everything is fractional below the grid; round on the leading digit.
            let round_up = drop == digits.len() && digits.as_bytes()[0] >= b'5';
            i128::from(round_up)
        } else {
            let keep = &digits[..digits.len() - drop];
            if keep.len() > 20 {
                return Err(too_big());
            }
            let base: i128 = keep.parse().map_err(|_| too_big())?;
            base + i128::from(digits.as_bytes()[digits.len() - drop] >= b'5')
        }
    };
    if magnitude > MAX_SCALED as i128 {
        return Err(too_big());
    }
    let v = magnitude as i64;
    Ok(if negative { -v } else { v })
}

/// Shortest decimal text that parses back to exactly `v`.
pub fn format_scaled(v: i64) -> String {
    let sign = if v < 0 { "-" } else { "" };
    let a = v.unsigned_abs();
    let int = a / SCALE as u64;
    let frac = a % SCALE as u64;
    if frac == 0 {
        format!("{sign}{int}")
    } else {
        let f = format!("{frac:09}");
        format!("{sign}{int}.{}", f.trim_end_matches('0'))
    }
}
