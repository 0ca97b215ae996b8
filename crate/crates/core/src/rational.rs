//! Exact non-negative rationals compared by cross-multiplication.
//!
//! Bonds are stored as the raw `conj/disj` pair so that `3/3` and `2/4` print
//! the way the counts were observed; equality and ordering are by value.

use alloc::format;
use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct Rational {
    num: u64,
    den: u64,
}

const fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidRational(format!(
                "{num}/0 has a zero denominator"
            )));
        }
        Ok(Rational { num, den })
    }

    /// Builds `num/den` without validation. Panics if `den == 0`.
    pub(crate) fn from_counts(num: u64, den: u64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Rational { num, den }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn reduced(&self) -> Rational {
        let g = gcd(self.num, self.den);
        if g <= 1 {
            return *self;
        }
        Rational {
            num: self.num / g,
            den: self.den / g,
        }
    }

    /// True iff the value lies in `[0, 1]`.
    pub fn is_unit(&self) -> bool {
        self.num <= self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        (self.num as u128) * (other.den as u128) == (other.num as u128) * (self.den as u128)
    }
}

impl Eq for Rational {}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = (self.num as u128) * (other.den as u128);
        let rhs = (other.num as u128) * (self.den as u128);
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let r = self.reduced();
        r.num.hash(state);
        r.den.hash(state);
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Accepts `p/q`, a plain integer, or a decimal such as `0.15` which becomes
/// `15/100` (never routed through floating point).
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidRational(s.to_string());
        let digits = |t: &str| -> Result<u64> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<u64>().map_err(|_| bad())
        };
        if let Some((p, q)) = s.split_once('/') {
            return Rational::new(digits(p.trim())?, digits(q.trim())?);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() && int.is_empty() {
                return Err(bad());
            }
            let int_part = if int.is_empty() { 0 } else { digits(int)? };
            let frac_part = if frac.is_empty() { 0 } else { digits(frac)? };
            let scale = u32::try_from(frac.len())
                .ok()
                .and_then(|e| 10u64.checked_pow(e))
                .ok_or_else(bad)?;
            let num = int_part
                .checked_mul(scale)
                .and_then(|v| v.checked_add(frac_part))
                .ok_or_else(bad)?;
            return Rational::new(num, scale);
        }
        Rational::new(digits(s)?, 1)
    }
}
