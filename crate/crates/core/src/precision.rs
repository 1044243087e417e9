//! Fixed high-precision reals for the analytic gap bounds.
//!
//! Every value carries [`PRECISION_BITS`] of binary mantissa (about 77
//! decimal digits) and is rounded to nearest-even. Exact integers are
//! converted through their decimal expansion, so no precision is lost on
//! entry.

use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;

pub const PRECISION_BITS: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

fn consts() -> Consts {
    Consts::new().expect("constant cache allocation")
}

#[derive(Clone, Debug)]
pub struct Real(BigFloat);

impl Real {
    pub fn from_u64(x: u64) -> Self {
        Real(BigFloat::from_u64(x, PRECISION_BITS))
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        Self::parse(&x.to_str_radix(10))
    }

    /// Parses decimal text such as `"-12.5e-3"`.
    pub fn parse(s: &str) -> Self {
        Real(BigFloat::parse(s, Radix::Dec, PRECISION_BITS, RM, &mut consts()))
    }

    pub fn pi() -> Self {
        Real(consts().pi(PRECISION_BITS, RM))
    }

    pub fn add(&self, o: &Real) -> Real {
        Real(self.0.add(&o.0, PRECISION_BITS, RM))
    }

    pub fn sub(&self, o: &Real) -> Real {
        Real(self.0.sub(&o.0, PRECISION_BITS, RM))
    }

    pub fn mul(&self, o: &Real) -> Real {
        Real(self.0.mul(&o.0, PRECISION_BITS, RM))
    }

    pub fn div(&self, o: &Real) -> Real {
        Real(self.0.div(&o.0, PRECISION_BITS, RM))
    }

    pub fn sqrt(&self) -> Real {
        Real(self.0.sqrt(PRECISION_BITS, RM))
    }

    /// `self^e` for a positive base.
    pub fn pow(&self, e: &Real) -> Real {
        Real(self.0.pow(&e.0, PRECISION_BITS, RM, &mut consts()))
    }

    pub fn is_nan(&self) -> bool {
        self.0.is_nan()
    }

    /// Scientific notation with `digits` significant digits, truncated.
    pub fn to_sci(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".into();
        }
        let s = self
            .0
            .format(Radix::Dec, RM, &mut consts())
            .unwrap_or_else(|_| "NaN".into());
        let (sign, body) = match s.strip_prefix('-') {
            Some(b) => ("-", b),
            None => ("", s.as_str()),
        };
        let Some((mant, exp)) = body.split_once('e') else {
            return s;
        };
        let Some((int, frac)) = mant.split_once('.') else {
            return s;
        };
        let frac: String = frac
            .chars()
            .chain(std::iter::repeat('0'))
            .take(digits.saturating_sub(1))
            .collect();
        format!("{sign}{int}.{frac}e{exp}")
    }

    /// Fixed notation with `places` digits after the point, truncated.
    pub fn to_fixed(&self, places: usize) -> String {
        if self.0.is_zero() {
            return if places == 0 {
                "0".into()
            } else {
                format!("0.{}", "0".repeat(places))
            };
        }
        let sci = self.to_sci(places + 80);
        let (sign, body) = match sci.strip_prefix('-') {
            Some(b) => ("-", b),
            None => ("", sci.as_str()),
        };
        let Some((mant, exp)) = body.split_once('e') else {
            return sci;
        };
        let exp: i64 = exp.parse().unwrap_or(0);
        let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
        // value = 0.d1 d2 d3 ... × 10^(exp + 1)
        let point = exp + 1;
        let (int_part, frac_part) = if point <= 0 {
            ("0".to_string(), format!("{}{}", "0".repeat((-point) as usize), digits))
        } else if point as usize >= digits.len() {
            (
                format!("{}{}", digits, "0".repeat(point as usize - digits.len())),
                String::new(),
            )
        } else {
            (
                digits[..point as usize].to_string(),
                digits[point as usize..].to_string(),
            )
        };
        if places == 0 {
            return format!("{sign}{int_part}");
        }
        let frac: String = frac_part.chars().chain(std::iter::repeat('0')).take(places).collect();
        format!("{sign}{int_part}.{frac}")
    }

    pub fn to_f64(&self) -> f64 {
        self.to_sci(20).parse().unwrap_or(f64::NAN)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|c| c.cmp(&0))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci(40))
    }
}
