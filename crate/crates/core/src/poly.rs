//! Dense univariate polynomials in `q` with exact integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Coefficient `i` multiplies `q^i`. Trailing zeros are never stored, so
/// the zero polynomial has no coefficients and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `1 + q^k`.
    pub fn one_plus_power(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] += 1;
        c[k] += 1;
        Self::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^k` with negative powers reading as zero.
    pub fn coeff_signed(&self, k: i64) -> BigInt {
        usize::try_from(k).map(|k| self.coeff(k)).unwrap_or_default()
    }

    /// `q^k · self`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs: c }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, o: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, o: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, o: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || o.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPolynomial::new(c)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial[{self}]")
    }
}

/// Comma-separated coefficients, lowest power first; `0` for the zero polynomial.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let coeffs = v
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad coefficient {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = IntPolynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPolynomial::from_i64s(&[0, 0]), IntPolynomial::zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
        let d = &p - &p;
        assert!(d.is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = IntPolynomial::one_plus_power(1);
        let b = IntPolynomial::one_plus_power(3);
        assert_eq!(&a * &b, IntPolynomial::from_i64s(&[1, 1, 0, 1, 1]));
        assert_eq!(&a + &b, IntPolynomial::from_i64s(&[2, 1, 0, 1]));
        assert_eq!(a.shift(2), IntPolynomial::from_i64s(&[0, 0, 1, 1]));
        assert_eq!((&a * &b).eval_at_one(), BigInt::from(4));
        assert_eq!(b.coeff_signed(-1), BigInt::zero());
    }

    #[test]
    fn json_round_trip() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = IntPolynomial::new(vec![BigInt::from(-3), BigInt::zero(), big]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["-3","0","123456789012345678901234567890"]"#);
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
        assert!(serde_json::from_str::<IntPolynomial>(r#"["x"]"#).is_err());
    }
}
