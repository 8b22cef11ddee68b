//! Exact rationals and the specialized parameter `q0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(x: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(x))
}

/// `base^e` for any integer `e`; `base` must be nonzero when `e < 0`.
pub fn pow(base: &Scalar, e: i64) -> Scalar {
    let mut result = Scalar::one();
    let mut b = if e < 0 { base.recip() } else { base.clone() };
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            result *= &b;
        }
        b = &b * &b;
        k >>= 1;
    }
    result
}

/// `p/q` or `p` with optional sign; denominators must be positive and nonzero.
pub fn parse_rational(s: &str) -> Result<Scalar> {
    let bad = || Error::Parse {
        what: "rational",
        input: s.to_string(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(num, den))
}

/// `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// The specialization of `q`, with `q²` cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QParam {
    q: Scalar,
    q2: Scalar,
}

impl QParam {
    /// Rejects `|q0| ∈ {0, 1}`; every other rational is not a root of unity.
    pub fn new(q: Scalar) -> Result<Self> {
        if q.is_zero() || q.abs().is_one() {
            return Err(Error::BadQ(format_rational(&q)));
        }
        let q2 = &q * &q;
        Ok(QParam { q, q2 })
    }

    pub fn parse(s: &str) -> Result<Self> {
        QParam::new(parse_rational(s)?)
    }

    pub fn from_int(x: i64) -> Result<Self> {
        QParam::new(int(x))
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn q2(&self) -> &Scalar {
        &self.q2
    }

    /// `q^e`.
    pub fn q_pow(&self, e: i64) -> Scalar {
        pow(&self.q, e)
    }

    /// `q^{2e}`, the scalar of a residue exponent `e`.
    pub fn res(&self, e: i64) -> Scalar {
        pow(&self.q2, e)
    }
}

impl Default for QParam {
    fn default() -> Self {
        QParam::from_int(2).expect("2 is a valid parameter")
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.q))
    }
}

impl FromStr for QParam {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        QParam::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_formats() {
        assert_eq!(
            parse_rational("5/2").unwrap(),
            Scalar::new(5.into(), 2.into())
        );
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rejects_unit_and_zero() {
        assert!(QParam::parse("1").is_err());
        assert!(QParam::parse("-1").is_err());
        assert!(QParam::parse("0").is_err());
        assert!(QParam::parse("2/2").is_err());
        assert_eq!(QParam::parse("5/2").unwrap().to_string(), "5/2");
    }

    #[test]
    fn powers() {
        let q = QParam::default();
        assert_eq!(q.q_pow(-2), Scalar::new(1.into(), 4.into()));
        assert_eq!(q.res(3), int(64));
        assert_eq!(pow(&int(3), 0), int(1));
    }
}
