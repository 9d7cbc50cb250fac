//! The scalar tagged union: an exact rational, or an element of Q(lambda).
//!
//! Every series and polynomial fixes one variant for all of its
//! coefficients; mixing variants in an operation is an error, and promotion
//! from Q into Q(lambda) is always explicit.

use std::fmt;

use num::{BigInt, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

use super::{eval_at_lambda, ratfunc_normalize, LambdaPoly, LambdaRatFunc, Rational};

/// Which coefficient field a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Lambda,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Lambda => write!(f, "lambda-rational"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Lam(LambdaRatFunc),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic on same-variant scalars.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b),
    }
}

impl Scalar {
    pub fn kind(&self) -> FieldKind {
        match self {
            Scalar::Rat(_) => FieldKind::Rational,
            Scalar::Lam(_) => FieldKind::Lambda,
        }
    }

    pub fn zero(kind: FieldKind) -> Scalar {
        match kind {
            FieldKind::Rational => Scalar::Rat(Rational::from_integer(0.into())),
            FieldKind::Lambda => Scalar::Lam(LambdaRatFunc::zero()),
        }
    }

    pub fn one(kind: FieldKind) -> Scalar {
        Scalar::from_int(kind, 1)
    }

    pub fn from_int(kind: FieldKind, v: i64) -> Scalar {
        Scalar::from_rational(kind, Rational::from_integer(v.into()))
    }

    pub fn from_rational(kind: FieldKind, r: Rational) -> Scalar {
        match kind {
            FieldKind::Rational => Scalar::Rat(r),
            FieldKind::Lambda => Scalar::Lam(LambdaRatFunc::from_rational(r)),
        }
    }

    /// The generator lambda (Lambda variant).
    pub fn lambda() -> Scalar {
        Scalar::Lam(LambdaRatFunc::lambda())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Lam(l) => l.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => *r == Rational::from_integer(1.into()),
            Scalar::Lam(l) => l.is_one(),
        }
    }

    fn check_kind(&self, rhs: &Scalar) -> Result<()> {
        if self.kind() != rhs.kind() {
            Err(Error::VariantMismatch(self.kind(), rhs.kind()))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_kind(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Lam(a), Scalar::Lam(b)) => Scalar::Lam(a.add(b)?),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_kind(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Lam(a), Scalar::Lam(b)) => Scalar::Lam(a.sub(b)?),
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_kind(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Lam(a), Scalar::Lam(b)) => Scalar::Lam(a.mul(b)?),
            _ => unreachable!(),
        })
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_kind(rhs)?;
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a / b),
            (Scalar::Lam(a), Scalar::Lam(b)) => Scalar::Lam(a.div(b)?),
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a.clone()),
            Scalar::Lam(a) => Scalar::Lam(a.neg()),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Lam(a) => Scalar::Lam(a.inv()?),
        })
    }

    /// Cheap scaling by an integer; preserves canonical form in both variants.
    pub fn mul_int(&self, c: &BigInt) -> Scalar {
        self.mul_rat(&Rational::from_integer(c.clone()))
    }

    /// Cheap scaling by a plain rational constant.
    pub fn mul_rat(&self, c: &Rational) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(a * c),
            Scalar::Lam(a) => Scalar::Lam(a.mul_rat(c)),
        }
    }

    pub fn pow_i64(&self, k: i64) -> Result<Scalar> {
        if k < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(a) => {
                let e = i32::try_from(k)
                    .map_err(|_| Error::ParamOutOfRange(format!("exponent {k}")))?;
                Scalar::Rat(a.pow(e))
            }
            Scalar::Lam(a) => Scalar::Lam(a.pow_i64(k)?),
        })
    }

    /// Embeds a rational-variant scalar into Q(lambda); Lambda stays as is.
    pub fn promoted(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Lam(LambdaRatFunc::from_rational(r.clone())),
            s @ Scalar::Lam(_) => s.clone(),
        }
    }

    /// Numeric specialization at lambda = v; rational scalars pass through.
    pub fn eval_lambda(&self, v: &Rational) -> Result<Rational> {
        match self {
            Scalar::Rat(r) => Ok(r.clone()),
            Scalar::Lam(l) => eval_at_lambda(l, v),
        }
    }
}

// --- JSON wire format -------------------------------------------------------
//
// Rational:      {"num": "<decimal>", "den": "<decimal>"}   (strings, exact)
// LambdaRatFunc: {"num": [Rational, ...], "den": [Rational, ...]}  (index = power)

pub(crate) fn rational_to_json(r: &Rational) -> serde_json::Value {
    serde_json::json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub(crate) fn rational_from_json(v: &serde_json::Value) -> Result<Rational> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Malformed("rational must be an object".into()))?;
    let num = obj
        .get("num")
        .and_then(|x| x.as_str())
        .ok_or_else(|| Error::Malformed("rational num must be a string".into()))?;
    let den = obj
        .get("den")
        .and_then(|x| x.as_str())
        .ok_or_else(|| Error::Malformed("rational den must be a string".into()))?;
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Malformed(format!("bad integer: {num}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Malformed(format!("bad integer: {den}")))?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

fn poly_to_json(p: &LambdaPoly) -> serde_json::Value {
    serde_json::Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

fn poly_from_json(v: &serde_json::Value) -> Result<LambdaPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Malformed("lambda polynomial must be an array".into()))?;
    let coeffs = arr
        .iter()
        .map(rational_from_json)
        .collect::<Result<Vec<_>>>()?;
    Ok(LambdaPoly::new(coeffs))
}

impl Scalar {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Rat(r) => rational_to_json(r),
            Scalar::Lam(l) => serde_json::json!({
                "num": poly_to_json(l.num()),
                "den": poly_to_json(l.den()),
            }),
        }
    }

    /// The two variants are distinguished by shape: string fields mean a
    /// rational, array fields mean an element of Q(lambda).
    pub fn from_json(v: &serde_json::Value) -> Result<Scalar> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Malformed("scalar must be an object".into()))?;
        match obj.get("num") {
            Some(serde_json::Value::String(_)) => Ok(Scalar::Rat(rational_from_json(v)?)),
            Some(serde_json::Value::Array(_)) => {
                let num = poly_from_json(
                    obj.get("num")
                        .ok_or_else(|| Error::Malformed("missing num".into()))?,
                )?;
                let den = poly_from_json(
                    obj.get("den")
                        .ok_or_else(|| Error::Malformed("missing den".into()))?,
                )?;
                Ok(Scalar::Lam(ratfunc_normalize(num, den)?))
            }
            _ => Err(Error::Malformed("scalar num must be string or array".into())),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        Scalar::from_json(&v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rat;

    #[test]
    fn rational_arithmetic() {
        let a = Scalar::from_rational(FieldKind::Rational, rat(1, 2));
        let b = Scalar::from_rational(FieldKind::Rational, rat(1, 3));
        assert_eq!(
            scalar_arith(&a, &b, ArithOp::Add).unwrap(),
            Scalar::from_rational(FieldKind::Rational, rat(5, 6))
        );
    }

    #[test]
    fn variant_mismatch_is_an_error() {
        let a = Scalar::one(FieldKind::Rational);
        let b = Scalar::one(FieldKind::Lambda);
        assert_eq!(
            scalar_arith(&a, &b, ArithOp::Mul),
            Err(Error::VariantMismatch(FieldKind::Rational, FieldKind::Lambda))
        );
    }

    #[test]
    fn lambda_inverse_cancellation() {
        // (1/(1-lambda)) * (1-lambda) = 1
        let one = Scalar::one(FieldKind::Lambda);
        let one_minus_lambda = one.sub(&Scalar::lambda()).unwrap();
        let inv = one_minus_lambda.inv().unwrap();
        assert!(scalar_arith(&inv, &one_minus_lambda, ArithOp::Mul)
            .unwrap()
            .is_one());
    }

    #[test]
    fn division_by_zero() {
        let a = Scalar::one(FieldKind::Rational);
        let z = Scalar::zero(FieldKind::Rational);
        assert_eq!(scalar_arith(&a, &z, ArithOp::Div), Err(Error::DivisionByZero));
        assert_eq!(Scalar::zero(FieldKind::Lambda).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn promotion_embeds_rationals() {
        let a = Scalar::from_rational(FieldKind::Rational, rat(-3, 7));
        let p = a.promoted();
        assert_eq!(p.kind(), FieldKind::Lambda);
        assert_eq!(p.eval_lambda(&rat(2, 1)).unwrap(), rat(-3, 7));
    }

    #[test]
    fn json_round_trip_both_variants() {
        let a = Scalar::from_rational(FieldKind::Rational, rat(-22, 7));
        let b = Scalar::one(FieldKind::Lambda)
            .sub(&Scalar::lambda())
            .unwrap()
            .inv()
            .unwrap();
        for s in [a, b] {
            let v = s.to_json();
            assert_eq!(Scalar::from_json(&v).unwrap(), s);
        }
    }
}
