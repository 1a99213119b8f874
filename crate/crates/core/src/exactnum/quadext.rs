use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{rational_is_square, Field, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadExtError {
    #[error("radicand must be nonzero")]
    ZeroRadicand,
    #[error("radicand {radicand} is a rational square (root {root}); use plain rationals")]
    SquareRadicand { radicand: String, root: String },
    #[error("mismatched radicands {left} and {right}")]
    MismatchedRadicand { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
}

/// A nonzero rational that is not a square, i.e. a valid `d` for ℚ(√d).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Radicand(Rational);

impl Radicand {
    pub fn new(d: Rational) -> Result<Self, QuadExtError> {
        if d.is_zero() {
            return Err(QuadExtError::ZeroRadicand);
        }
        if let Some(root) = rational_is_square(&d) {
            return Err(QuadExtError::SquareRadicand {
                radicand: d.to_string(),
                root: root.to_string(),
            });
        }
        Ok(Radicand(d))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl<'de> Deserialize<'de> for Radicand {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let d = Rational::deserialize(deserializer)?;
        Radicand::new(d).map_err(serde::de::Error::custom)
    }
}

/// Element `a + b·√d` of ℚ(√d).
///
/// `d` is `None` for elements built without a field context (`zero`, `one`,
/// `from_rational`); such elements always have `b = 0` and combine with any
/// radicand.
#[derive(Clone, Serialize, Deserialize)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: Option<Radicand>,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: &Radicand) -> Self {
        QuadExt {
            a,
            b,
            d: Some(d.clone()),
        }
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: None,
        }
    }

    /// The generator √d.
    pub fn sqrt(d: &Radicand) -> Self {
        QuadExt::new(Rational::zero(), Rational::one(), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> Option<&Radicand> {
        self.d.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn join(&self, rhs: &Self) -> Result<Option<Radicand>, QuadExtError> {
        match (&self.d, &rhs.d) {
            (None, d) | (d, None) => Ok(d.clone()),
            (Some(x), Some(y)) if x == y => Ok(Some(x.clone())),
            (Some(x), Some(y)) => Err(QuadExtError::MismatchedRadicand {
                left: x.0.to_string(),
                right: y.0.to_string(),
            }),
        }
    }

    fn d_value(d: &Option<Radicand>) -> Rational {
        d.as_ref()
            .map(|r| r.0.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, QuadExtError> {
        let d = self.join(rhs)?;
        Ok(QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, QuadExtError> {
        let d = self.join(rhs)?;
        Ok(QuadExt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            d,
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, QuadExtError> {
        let d = self.join(rhs)?;
        let dv = Self::d_value(&d);
        let a = &self.a * &rhs.a + (&self.b * &rhs.b) * &dv;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(QuadExt { a, b, d })
    }

    /// `a² − b²d`; nonzero for every nonzero element because `d` is not a square.
    pub fn norm(&self) -> Rational {
        let dv = Self::d_value(&self.d);
        &self.a * &self.a - (&self.b * &self.b) * &dv
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    pub fn checked_inv(&self) -> Result<Self, QuadExtError> {
        let n = self.norm();
        let n_inv = n.recip().ok_or(QuadExtError::DivisionByZero)?;
        Ok(QuadExt {
            a: &self.a * &n_inv,
            b: -(&self.b * &n_inv),
            d: self.d.clone(),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, QuadExtError> {
        self.join(rhs)?;
        self.checked_mul(&rhs.checked_inv()?)
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadExt {}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.d {
            Some(d) if !self.b.is_zero() => {
                if self.a.is_zero() {
                    write!(f, "{}*sqrt({})", self.b, d.0)
                } else {
                    write!(f, "{} + {}*sqrt({})", self.a, self.b, d.0)
                }
            }
            _ => write!(f, "{}", self.a),
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! panicking_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$checked(&rhs)
                    .expect("QuadExt operands from different fields")
            }
        }
        impl<'a> $tr<&'a QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &'a QuadExt) -> QuadExt {
                self.$checked(rhs)
                    .expect("QuadExt operands from different fields")
            }
        }
    };
}

panicking_binop!(Add, add, checked_add);
panicking_binop!(Sub, sub, checked_sub);
panicking_binop!(Mul, mul, checked_mul);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }
    fn one() -> Self {
        QuadExt::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn from_i64(n: i64) -> Self {
        QuadExt::rational(Rational::from(n))
    }
}

impl Field for QuadExt {
    fn inv(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
    fn from_rational(r: &Rational) -> Self {
        QuadExt::rational(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn two() -> Radicand {
        Radicand::new(q(2)).unwrap()
    }

    #[test]
    fn rejects_bad_radicands() {
        assert_eq!(Radicand::new(q(0)), Err(QuadExtError::ZeroRadicand));
        assert!(matches!(
            Radicand::new(q(4)),
            Err(QuadExtError::SquareRadicand { .. })
        ));
        assert!(matches!(
            Radicand::new("9/4".parse().unwrap()),
            Err(QuadExtError::SquareRadicand { .. })
        ));
        assert!(Radicand::new(q(-1)).is_ok());
    }

    #[test]
    fn norm_identity() {
        let d = two();
        let x = QuadExt::new(q(1), q(1), &d);
        let y = QuadExt::new(q(1), q(-1), &d);
        assert_eq!(x.clone() * &y, QuadExt::from_i64(-1));
        let r = QuadExt::sqrt(&d);
        assert_eq!(r.clone() * &r, QuadExt::from_i64(2));
        assert_eq!(x.checked_div(&x).unwrap(), QuadExt::one());
    }

    #[test]
    fn errors() {
        let a = QuadExt::sqrt(&two());
        let b = QuadExt::sqrt(&Radicand::new(q(3)).unwrap());
        assert!(matches!(
            a.checked_add(&b),
            Err(QuadExtError::MismatchedRadicand { .. })
        ));
        assert_eq!(
            a.checked_div(&QuadExt::zero()),
            Err(QuadExtError::DivisionByZero)
        );
    }

    #[test]
    fn equality_ignores_context_for_rationals() {
        let d = two();
        assert_eq!(QuadExt::new(q(3), q(0), &d), QuadExt::from_i64(3));
        assert_ne!(QuadExt::new(q(3), q(1), &d), QuadExt::from_i64(3));
    }

    #[test]
    fn json_shape() {
        let x = QuadExt::new("1/2".parse().unwrap(), q(-3), &two());
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v, serde_json::json!({"a": "1/2", "b": "-3", "d": "2"}));
        let back: QuadExt = serde_json::from_value(v).unwrap();
        assert_eq!(back, x);
        let bad = serde_json::json!({"a": "1", "b": "1", "d": "4"});
        assert!(serde_json::from_value::<QuadExt>(bad).is_err());
    }
}
