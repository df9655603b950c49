//! Exact fractions for densities and charges.

use core::cmp::Ordering;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

/// A fraction in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

const fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
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

    /// Panics if `den == 0`.
    pub const fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        let sign = if den < 0 { -1 } else { 1 };
        Rational { num: sign * num / g, den: sign * den / g }
    }

    pub const fn integer(n: i64) -> Rational {
        Rational { num: n, den: 1 }
    }

    pub const fn numer(&self) -> i64 {
        self.num
    }

    pub const fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    fn from_wide(num: i128, den: i128) -> Rational {
        let mut a = num.abs();
        let mut b = den.abs();
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        let g = if a == 0 { 1 } else { a };
        let sign = if den < 0 { -1 } else { 1 };
        let n = sign * num / g;
        let d = sign * den / g;
        Rational {
            num: i64::try_from(n).expect("rational numerator overflow"),
            den: i64::try_from(d).expect("rational denominator overflow"),
        }
    }

    /// The value written over the denominator 11, if it is a whole number of
    /// elevenths: `"3/11"`, `"-8/11"`, `"0/11"`.
    pub fn elevenths(&self) -> Option<i64> {
        (11 % self.den == 0).then(|| self.num * (11 / self.den))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::from_wide(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational::from_wide(self.num as i128 * rhs.num as i128, self.den as i128 * rhs.den as i128)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(rhs.num != 0, "division by zero");
        Rational::from_wide(self.num as i128 * rhs.den as i128, self.den as i128 * rhs.num as i128)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = *self + rhs;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = *self - rhs;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.copied().sum()
    }
}

/// Always `p/q`, including integers (`3/1`).
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError;

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected a rational of the form p/q or an integer")
    }
}

impl core::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: i64 = p.parse().map_err(|_| ParseRationalError)?;
        let q: i64 = q.parse().map_err(|_| ParseRationalError)?;
        if q == 0 {
            return Err(ParseRationalError);
        }
        Ok(Rational::new(p, q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn lowest_terms() {
        let r = Rational::new(6, -4);
        assert_eq!((r.numer(), r.denom()), (-3, 2));
        assert_eq!(Rational::new(0, -7), Rational::ZERO);
        assert_eq!(Rational::new(24, 10).to_string(), "12/5");
        assert_eq!(Rational::integer(3).to_string(), "3/1");
    }

    #[test]
    fn arithmetic_and_order() {
        let a = Rational::new(30, 11);
        assert!(Rational::new(8, 3) < a);
        assert!(Rational::new(12, 5) < a);
        assert_eq!(Rational::integer(2) - a + Rational::new(6, 11) + Rational::new(2, 11), Rational::ZERO);
        assert_eq!(Rational::new(1, 3) * Rational::new(3, 5), Rational::new(1, 5));
        assert_eq!(Rational::new(1, 3) / Rational::new(2, 3), Rational::new(1, 2));
    }

    #[test]
    fn elevenths() {
        assert_eq!(Rational::new(-8, 11).elevenths(), Some(-8));
        assert_eq!(Rational::integer(2).elevenths(), Some(22));
        assert_eq!(Rational::new(1, 2).elevenths(), None);
    }

    #[test]
    fn parsing() {
        assert_eq!("30/11".parse::<Rational>().unwrap(), Rational::new(30, 11));
        assert_eq!("3".parse::<Rational>().unwrap(), Rational::integer(3));
        assert!("3/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }
}
