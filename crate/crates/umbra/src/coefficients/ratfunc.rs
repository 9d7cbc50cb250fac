//! The field Q(lambda): rational functions in lambda with exact arithmetic.
//!
//! Canonical form is a reduced fraction with a monic denominator, so equality
//! is structural comparison. The constraint lambda != 1 is honored by
//! forbidding numeric evaluation at 1, not by restricting the symbol.

use num::Zero;

use crate::error::{Error, Result};

use super::{LambdaPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LambdaRatFunc {
    num: LambdaPoly,
    den: LambdaPoly,
}

/// Canonicalizes num/den: reduced fraction, monic denominator, zero as 0/1.
/// Equal field elements yield bit-identical results.
pub fn ratfunc_normalize(num: LambdaPoly, den: LambdaPoly) -> Result<LambdaRatFunc> {
    if den.is_zero() {
        return Err(Error::ZeroDenominatorPoly);
    }
    if num.is_zero() {
        return Ok(LambdaRatFunc {
            num: LambdaPoly::zero(),
            den: LambdaPoly::one(),
        });
    }
    let g = LambdaPoly::gcd(&num, &den);
    let (num, den) = if g.is_constant() {
        (num, den)
    } else {
        (num.exact_div(&g)?, den.exact_div(&g)?)
    };
    let lead_inv = den.leading().unwrap().recip();
    Ok(LambdaRatFunc {
        num: num.mul_rat(&lead_inv),
        den: den.mul_rat(&lead_inv),
    })
}

impl LambdaRatFunc {
    pub fn zero() -> Self {
        LambdaRatFunc {
            num: LambdaPoly::zero(),
            den: LambdaPoly::one(),
        }
    }

    pub fn one() -> Self {
        LambdaRatFunc {
            num: LambdaPoly::one(),
            den: LambdaPoly::one(),
        }
    }

    pub fn from_poly(p: LambdaPoly) -> Self {
        LambdaRatFunc {
            num: p,
            den: LambdaPoly::one(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        LambdaRatFunc::from_poly(LambdaPoly::constant(r))
    }

    /// The generator lambda itself.
    pub fn lambda() -> Self {
        LambdaRatFunc::from_poly(LambdaPoly::lambda())
    }

    pub fn num(&self) -> &LambdaPoly {
        &self.num
    }

    pub fn den(&self) -> &LambdaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == LambdaPoly::one() && self.den == LambdaPoly::one()
    }

    /// True when the element lies in Q (denominator 1, numerator constant).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den == LambdaPoly::one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    // Inputs already coprime (e.g. after cross-cancellation); only the
    // monic-denominator scaling remains.
    fn from_coprime(num: LambdaPoly, den: LambdaPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return LambdaRatFunc::zero();
        }
        debug_assert!(LambdaPoly::gcd(&num, &den).is_constant());
        let lead_inv = den.leading().unwrap().recip();
        LambdaRatFunc {
            num: num.mul_rat(&lead_inv),
            den: den.mul_rat(&lead_inv),
        }
    }

    pub fn add(&self, rhs: &LambdaRatFunc) -> Result<LambdaRatFunc> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.den == rhs.den {
            return ratfunc_normalize(self.num.add(&rhs.num), self.den.clone());
        }
        let g = LambdaPoly::gcd(&self.den, &rhs.den);
        let (b1, d1) = if g.is_constant() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (self.den.exact_div(&g)?, rhs.den.exact_div(&g)?)
        };
        // self = a/(g b1), rhs = c/(g d1): sum = (a d1 + c b1)/(g b1 d1)
        let num = self.num.mul(&d1).add(&rhs.num.mul(&b1));
        let den = self.den.mul(&d1);
        ratfunc_normalize(num, den)
    }

    pub fn sub(&self, rhs: &LambdaRatFunc) -> Result<LambdaRatFunc> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> LambdaRatFunc {
        LambdaRatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &LambdaRatFunc) -> Result<LambdaRatFunc> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(LambdaRatFunc::zero());
        }
        // Cross-cancel before multiplying to keep degrees minimal.
        let g1 = LambdaPoly::gcd(&self.num, &rhs.den);
        let g2 = LambdaPoly::gcd(&rhs.num, &self.den);
        let a = maybe_div(&self.num, &g1)?;
        let d = maybe_div(&rhs.den, &g1)?;
        let c = maybe_div(&rhs.num, &g2)?;
        let b = maybe_div(&self.den, &g2)?;
        Ok(LambdaRatFunc::from_coprime(a.mul(&c), b.mul(&d)))
    }

    pub fn div(&self, rhs: &LambdaRatFunc) -> Result<LambdaRatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.mul(&rhs.inv()?)
    }

    pub fn inv(&self) -> Result<LambdaRatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(LambdaRatFunc::from_coprime(
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn mul_rat(&self, c: &Rational) -> LambdaRatFunc {
        if c.is_zero() {
            return LambdaRatFunc::zero();
        }
        LambdaRatFunc {
            num: self.num.mul_rat(c),
            den: self.den.clone(),
        }
    }

    pub fn pow_i64(&self, k: i64) -> Result<LambdaRatFunc> {
        if k == 0 {
            return Ok(LambdaRatFunc::one());
        }
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = LambdaRatFunc::one();
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }
}

fn maybe_div(p: &LambdaPoly, g: &LambdaPoly) -> Result<LambdaPoly> {
    if g.is_constant() {
        Ok(p.mul_rat(&g.leading().unwrap().recip()))
    } else {
        p.exact_div(g)
    }
}

/// Exact numeric specialization at lambda = v. The excluded point lambda = 1
/// is rejected before any pole check.
pub fn eval_at_lambda(a: &LambdaRatFunc, v: &Rational) -> Result<Rational> {
    if *v == Rational::from_integer(1.into()) {
        return Err(Error::LambdaIsOne);
    }
    let den = a.den.eval(v);
    if den.is_zero() {
        return Err(Error::PoleAtLambda(v.to_string()));
    }
    Ok(a.num.eval(v) / den)
}
