//! Truncated formal power series in t over a scalar field.
//!
//! Coefficients are stored in the exponential convention: `coeffs[k]` is the
//! a_k of sum a_k t^k / k!, and `precision = coeffs.len()` means a_0 ..
//! a_{precision-1} are known. The convention makes the umbral pairing
//! <f | x^n> = a_n a field lookup, and multiplication becomes the binomial
//! convolution c_n = sum_k C(n,k) a_k b_{n-k}.
//!
//! Composition is Horner-style at O(N^3) scalar operations; exactness is the
//! point here, not asymptotics, and working degrees stay small.

use num::{BigInt, One};

use crate::coefficients::{
    big_factorial, FieldKind, PascalTriangle, Rational, Scalar,
};
use crate::error::{Error, Result};

/// Classification by order: delta series admit compositional inverses,
/// invertible series admit multiplicative inverses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesClass {
    Delta,
    Invertible,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    kind: FieldKind,
    coeffs: Vec<Scalar>,
}

/// Default working precision for a pipeline that must produce degrees up to
/// `n_max`: transfer-formula chains multiply up to n series factors, so we
/// pad rather than silently lose coefficients.
pub fn working_precision(n_max: usize) -> usize {
    2 * n_max + 4
}

impl Series {
    /// Builds from exponential-convention coefficients. Must be nonempty and
    /// of a uniform variant.
    pub fn from_exp_coeffs(kind: FieldKind, coeffs: Vec<Scalar>) -> Result<Series> {
        if coeffs.is_empty() {
            return Err(Error::InsufficientPrecision { needed: 1, have: 0 });
        }
        for c in &coeffs {
            if c.kind() != kind {
                return Err(Error::VariantMismatch(kind, c.kind()));
            }
        }
        Ok(Series { kind, coeffs })
    }

    /// Builds from ordinary coefficients b_k (series = sum b_k t^k), i.e.
    /// a_k = k! b_k.
    pub fn from_ordinary_coeffs(kind: FieldKind, coeffs: Vec<Scalar>) -> Result<Series> {
        let scaled = coeffs
            .into_iter()
            .enumerate()
            .map(|(k, c)| c.mul_int(&big_factorial(k)))
            .collect();
        Series::from_exp_coeffs(kind, scaled)
    }

    pub fn zero(kind: FieldKind, precision: usize) -> Series {
        Series {
            kind,
            coeffs: vec![Scalar::zero(kind); precision.max(1)],
        }
    }

    pub fn one(kind: FieldKind, precision: usize) -> Series {
        Series::constant(Scalar::one(kind), precision)
    }

    pub fn constant(c: Scalar, precision: usize) -> Series {
        let kind = c.kind();
        let mut s = Series::zero(kind, precision);
        s.coeffs[0] = c;
        s
    }

    /// The identity delta series t.
    pub fn t(kind: FieldKind, precision: usize) -> Series {
        Series::t_pow(kind, 1, precision)
    }

    /// The monomial t^k (exponential coefficient a_k = k!).
    pub fn t_pow(kind: FieldKind, k: usize, precision: usize) -> Series {
        let mut s = Series::zero(kind, precision.max(k + 1));
        s.coeffs[k] = Scalar::from_int(kind, 1).mul_int(&big_factorial(k));
        s
    }

    /// e^{ct}: a_k = c^k.
    pub fn exp_ct(c: &Scalar, precision: usize) -> Result<Series> {
        let mut coeffs = Vec::with_capacity(precision.max(1));
        let mut acc = Scalar::one(c.kind());
        for _ in 0..precision.max(1) {
            coeffs.push(acc.clone());
            acc = acc.mul(c)?;
        }
        Series::from_exp_coeffs(c.kind(), coeffs)
    }

    /// e^t in the given field.
    pub fn exp_t(kind: FieldKind, precision: usize) -> Series {
        Series {
            kind,
            coeffs: vec![Scalar::one(kind); precision.max(1)],
        }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Ordinary coefficient a_k / k!.
    pub fn ordinary_coeff(&self, k: usize) -> Scalar {
        self.coeffs[k].mul_rat(&Rational::new(BigInt::one(), big_factorial(k)))
    }

    pub fn truncate(&self, precision: usize) -> Series {
        let p = precision.clamp(1, self.coeffs.len());
        Series {
            kind: self.kind,
            coeffs: self.coeffs[..p].to_vec(),
        }
    }

    pub fn is_zero_truncation(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Embeds a rational-variant series into Q(lambda).
    pub fn promoted(&self) -> Series {
        Series {
            kind: FieldKind::Lambda,
            coeffs: self.coeffs.iter().map(|c| c.promoted()).collect(),
        }
    }

    fn same_kind(&self, rhs: &Series) -> Result<FieldKind> {
        if self.kind != rhs.kind {
            return Err(Error::VariantMismatch(self.kind, rhs.kind));
        }
        Ok(self.kind)
    }

    /// Smallest k with a_k != 0; undefined for a zero truncation.
    pub fn order(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::OrderUndefined)
    }

    pub fn classify(&self) -> Result<SeriesClass> {
        Ok(match self.order()? {
            0 => SeriesClass::Invertible,
            1 => SeriesClass::Delta,
            _ => SeriesClass::Other,
        })
    }

    pub fn add(&self, rhs: &Series) -> Result<Series> {
        let kind = self.same_kind(rhs)?;
        let n = self.precision().min(rhs.precision());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeffs[k].add(&rhs.coeffs[k])?);
        }
        Series::from_exp_coeffs(kind, out)
    }

    pub fn sub(&self, rhs: &Series) -> Result<Series> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            kind: self.kind,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Result<Series> {
        if c.kind() != self.kind {
            return Err(Error::VariantMismatch(self.kind, c.kind()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.mul(c))
            .collect::<Result<Vec<_>>>()?;
        Series::from_exp_coeffs(self.kind, coeffs)
    }

    /// Binomial convolution: c_n = sum_k C(n,k) a_k b_{n-k}.
    pub fn mul(&self, rhs: &Series) -> Result<Series> {
        let kind = self.same_kind(rhs)?;
        let n = self.precision().min(rhs.precision());
        let pascal = PascalTriangle::new(n - 1);
        let mut out = Vec::with_capacity(n);
        for t in 0..n {
            let mut acc = Scalar::zero(kind);
            for k in 0..=t {
                let a = &self.coeffs[k];
                let b = &rhs.coeffs[t - k];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let term = a.mul(b)?.mul_int(pascal.at(t, k));
                acc = acc.add(&term)?;
            }
            out.push(acc);
        }
        Series::from_exp_coeffs(kind, out)
    }

    /// Multiplicative inverse of an order-0 series, to the same precision.
    pub fn inverse(&self) -> Result<Series> {
        let ord = self.order()?;
        if ord != 0 {
            return Err(Error::NotInvertible(ord));
        }
        let n = self.precision();
        let pascal = PascalTriangle::new(n.saturating_sub(1));
        let a0_inv = self.coeffs[0].inv()?;
        let mut out: Vec<Scalar> = Vec::with_capacity(n);
        out.push(a0_inv.clone());
        for m in 1..n {
            // sum_{k=0}^{m} C(m,k) a_k b_{m-k} = 0 with b_m unknown
            let mut acc = Scalar::zero(self.kind);
            for k in 1..=m {
                let a = &self.coeffs[k];
                if a.is_zero() || out[m - k].is_zero() {
                    continue;
                }
                let term = a.mul(&out[m - k])?.mul_int(pascal.at(m, k));
                acc = acc.add(&term)?;
            }
            out.push(acc.neg().mul(&a0_inv)?);
        }
        Series::from_exp_coeffs(self.kind, out)
    }

    /// Divides out t^m, m <= order: result_j = a_{j+m} j!/(j+m)!.
    fn shift_down(&self, m: usize) -> Result<Series> {
        if m == 0 {
            return Ok(self.clone());
        }
        if self.precision() <= m {
            return Err(Error::InsufficientPrecision {
                needed: m + 1,
                have: self.precision(),
            });
        }
        let mut out = Vec::with_capacity(self.precision() - m);
        for j in 0..self.precision() - m {
            let scale = Rational::new(big_factorial(j), big_factorial(j + m));
            out.push(self.coeffs[j + m].mul_rat(&scale));
        }
        Series::from_exp_coeffs(self.kind, out)
    }

    /// Exact quotient of power series. Requires order(rhs) <= order(self)
    /// (a zero numerator truncation is allowed and yields zero); the result
    /// has precision reduced by order(rhs).
    pub fn div(&self, rhs: &Series) -> Result<Series> {
        let kind = self.same_kind(rhs)?;
        let den_order = rhs.order().map_err(|_| Error::DivisionByZero)?;
        let prec = self.precision().min(rhs.precision());
        if self.is_zero_truncation() {
            if prec <= den_order {
                return Err(Error::InsufficientPrecision {
                    needed: den_order + 1,
                    have: prec,
                });
            }
            return Ok(Series::zero(kind, prec - den_order));
        }
        let num_order = self.order()?;
        if den_order > num_order {
            return Err(Error::QuotientNotPowerSeries {
                num_order,
                den_order,
            });
        }
        let num = self.truncate(prec).shift_down(den_order)?;
        let den = rhs.truncate(prec).shift_down(den_order)?;
        num.mul(&den.inverse()?)
    }

    /// Horner-style composition outer(inner); inner must be a delta-or-higher
    /// series (zero constant term). Composing with inner = t returns outer.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        let kind = self.same_kind(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionRequiresDelta);
        }
        let prec = self.precision().min(inner.precision());
        // Identity short-circuit: inner == t exactly.
        if inner
            .coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| if k == 1 { c.is_one() } else { c.is_zero() })
        {
            return Ok(self.truncate(prec));
        }
        let inner = inner.truncate(prec);
        // acc = sum_j (a_j / j!) inner^j; inner^j has order >= j for order >= 1
        let mut acc = Series::constant(self.coeffs[0].clone(), prec);
        let mut power = Series::one(kind, prec);
        for j in 1..prec {
            power = power.mul(&inner)?;
            let c = self.ordinary_coeff(j);
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&power.scalar_mul(&c)?)?;
        }
        Ok(acc)
    }

    /// Compositional inverse of a delta series, by Newton iteration:
    /// g <- g - (f(g) - t) / f'(g). Exact arithmetic, quadratic t-adic
    /// convergence, terminated at the fixed point.
    ///
    /// Every coefficient of the result depends only on coefficients of `self`
    /// up to the same index, so the iteration runs one coefficient wider than
    /// requested (padding with a zero) and the widened slot is discarded;
    /// this keeps the top requested coefficient exact even though the
    /// derivative loses one coefficient of precision.
    pub fn comp_inverse(&self) -> Result<Series> {
        if self.classify()? != SeriesClass::Delta {
            return Err(Error::NotDelta);
        }
        let prec = self.precision();
        let kind = self.kind;
        if *self == Series::t(kind, prec) {
            return Ok(self.clone());
        }
        let wide = prec + 1;
        let mut padded_coeffs = self.coeffs.clone();
        padded_coeffs.push(Scalar::zero(kind));
        let f = Series::from_exp_coeffs(kind, padded_coeffs)?;
        let t = Series::t(kind, wide);
        let fprime = f.derivative()?; // precision = prec
        let mut g = t.scalar_mul(&self.coeffs[1].inv()?)?;
        let mut steps = 0usize;
        loop {
            let residual = f.compose(&g)?.sub(&t)?;
            // Converged once f(g) = t through the requested precision; the
            // widened top slot carries the padding artifact and is dropped.
            if residual.truncate(prec).is_zero_truncation() {
                return Ok(g.truncate(prec));
            }
            let deriv = fprime.compose(&g.truncate(prec))?;
            let delta = residual.truncate(prec).div(&deriv)?;
            let mut up = delta.coeffs;
            up.resize(wide, Scalar::zero(kind));
            g = g.sub(&Series::from_exp_coeffs(kind, up)?)?;
            steps += 1;
            if steps > prec + 2 {
                return Err(Error::InternalConsistency(
                    "compositional inverse did not converge".into(),
                ));
            }
        }
    }

    /// exp of a series of positive order.
    pub fn exp(&self) -> Result<Series> {
        if self.precision() == 0 || !self.coeffs[0].is_zero() {
            return Err(Error::ExpRequiresPositiveOrder);
        }
        // y' = u' y: y_{m+1} = sum_k C(m,k) u_{k+1} y_{m-k}
        let n = self.precision();
        let pascal = PascalTriangle::new(n.saturating_sub(1));
        let mut y: Vec<Scalar> = Vec::with_capacity(n);
        y.push(Scalar::one(self.kind));
        for m in 0..n - 1 {
            let mut acc = Scalar::zero(self.kind);
            for k in 0..=m {
                let u = &self.coeffs[k + 1];
                if u.is_zero() || y[m - k].is_zero() {
                    continue;
                }
                acc = acc.add(&u.mul(&y[m - k])?.mul_int(pascal.at(m, k)))?;
            }
            y.push(acc);
        }
        Series::from_exp_coeffs(self.kind, y)
    }

    /// log of a series with constant term 1: integral of s'/s.
    pub fn log(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne { op: "log" });
        }
        if self.precision() == 1 {
            return Ok(Series::zero(self.kind, 1));
        }
        let ratio = self.derivative()?.div(&self.truncate(self.precision() - 1))?;
        // integrate: result_{k+1} = ratio_k, result_0 = 0
        let mut out = Vec::with_capacity(self.precision());
        out.push(Scalar::zero(self.kind));
        out.extend(ratio.coeffs.iter().cloned());
        Series::from_exp_coeffs(self.kind, out)
    }

    /// Square root of a series with constant term 1.
    pub fn sqrt(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne { op: "sqrt" });
        }
        // y^2 = s: 2 y_m = s_m - sum_{k=1}^{m-1} C(m,k) y_k y_{m-k}
        let n = self.precision();
        let pascal = PascalTriangle::new(n.saturating_sub(1));
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut y: Vec<Scalar> = Vec::with_capacity(n);
        y.push(Scalar::one(self.kind));
        for m in 1..n {
            let mut acc = self.coeffs[m].clone();
            for k in 1..m {
                if y[k].is_zero() || y[m - k].is_zero() {
                    continue;
                }
                acc = acc.sub(&y[k].mul(&y[m - k])?.mul_int(pascal.at(m, k)))?;
            }
            y.push(acc.mul_rat(&half));
        }
        Series::from_exp_coeffs(self.kind, y)
    }

    /// Integer power by repeated squaring; negative exponents require an
    /// invertible series. s^0 = 1.
    pub fn pow_int(&self, k: i64) -> Result<Series> {
        if k == 0 {
            return Ok(Series::one(self.kind, self.precision()));
        }
        let base = if k < 0 {
            match self.order() {
                Ok(0) => self.inverse()?,
                _ => return Err(Error::NegativePowerNotInvertible),
            }
        } else {
            self.clone()
        };
        let mut acc: Option<Series> = None;
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(a) => a.mul(&sq)?,
                });
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc.unwrap())
    }

    /// Derivative in t; in the exponential convention this is the coefficient
    /// shift a'_k = a_{k+1}. Precision drops by one.
    pub fn derivative(&self) -> Result<Series> {
        if self.precision() < 2 {
            return Err(Error::InsufficientPrecision {
                needed: 2,
                have: self.precision(),
            });
        }
        Series::from_exp_coeffs(self.kind, self.coeffs[1..].to_vec())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "convention": "exponential",
            "precision": self.precision(),
            "coeffs": self.coeffs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rat;

    const K: FieldKind = FieldKind::Rational;

    fn s_int(coeffs: &[i64]) -> Series {
        Series::from_exp_coeffs(
            K,
            coeffs.iter().map(|&c| Scalar::from_int(K, c)).collect(),
        )
        .unwrap()
    }

    fn exp_minus_one(prec: usize) -> Series {
        let mut s = Series::exp_t(K, prec);
        s.coeffs[0] = Scalar::zero(K);
        s
    }

    fn exp_plus_one(prec: usize) -> Series {
        let mut s = Series::exp_t(K, prec);
        s.coeffs[0] = Scalar::from_int(K, 2);
        s
    }

    /// Independent Bernoulli-number oracle: sum_j C(n+1,j) B_j = 0.
    fn bernoulli_numbers(n_max: usize) -> Vec<Rational> {
        let mut b: Vec<Rational> = vec![rat(1, 1)];
        for n in 1..=n_max {
            let mut acc = rat(0, 1);
            for (j, bj) in b.iter().enumerate() {
                let c = crate::coefficients::big_binomial(n + 1, j);
                acc += Rational::from_integer(c) * bj;
            }
            let lead = Rational::from_integer(crate::coefficients::big_binomial(n + 1, n).into());
            b.push(-acc / lead);
        }
        b
    }

    #[test]
    fn mul_exponential_convolution() {
        // (e^t - 1)(e^t + 1) = e^{2t} - 1: a_0 = 0, a_n = 2^n
        let prod = exp_minus_one(8).mul(&exp_plus_one(8)).unwrap();
        assert!(prod.coeff(0).is_zero());
        for n in 1..8 {
            assert_eq!(*prod.coeff(n), Scalar::from_int(K, 1 << n));
        }
    }

    #[test]
    fn additive_identity_and_scalar_mul() {
        let s = s_int(&[3, 1, 4, 1, 5]);
        assert_eq!(s.add(&Series::zero(K, 5)).unwrap(), s);
        let doubled = Series::exp_t(K, 6)
            .scalar_mul(&Scalar::from_int(K, 2))
            .unwrap();
        for k in 0..6 {
            assert_eq!(*doubled.coeff(k), Scalar::from_int(K, 2));
        }
    }

    #[test]
    fn inverse_of_one_minus_t_is_geometric() {
        // 1 - t: a_0 = 1, a_1 = -1. Inverse has a_k = k!.
        let s = s_int(&[1, -1, 0, 0, 0, 0]);
        let inv = s.inverse().unwrap();
        for k in 0..6 {
            assert_eq!(
                *inv.coeff(k),
                Scalar::from_rational(K, Rational::from_integer(big_factorial(k)))
            );
        }
        assert_eq!(s.mul(&inv).unwrap(), Series::one(K, 6));
    }

    #[test]
    fn inverse_of_exp_is_exp_neg() {
        let inv = Series::exp_t(K, 8).inverse().unwrap();
        for k in 0..8 {
            assert_eq!(*inv.coeff(k), Scalar::from_int(K, if k % 2 == 0 { 1 } else { -1 }));
        }
        assert_eq!(Series::one(K, 3).inverse().unwrap(), Series::one(K, 3));
    }

    #[test]
    fn inverse_requires_order_zero() {
        assert_eq!(
            exp_minus_one(5).inverse(),
            Err(Error::NotInvertible(1))
        );
    }

    #[test]
    fn div_gives_bernoulli_series() {
        let b = Series::t(K, 10).div(&exp_minus_one(10)).unwrap();
        assert_eq!(b.precision(), 9);
        let oracle = bernoulli_numbers(8);
        for (k, expect) in oracle.iter().enumerate() {
            assert_eq!(*b.coeff(k), Scalar::from_rational(K, expect.clone()), "B_{k}");
        }
    }

    #[test]
    fn div_self_is_one_and_order_check() {
        let a = s_int(&[0, 3, -2, 5, 7, 1]);
        let q = a.div(&a).unwrap();
        assert_eq!(q, Series::one(K, 5));
        assert_eq!(
            Series::t(K, 6).div(&Series::t_pow(K, 2, 6)),
            Err(Error::QuotientNotPowerSeries { num_order: 1, den_order: 2 })
        );
    }

    #[test]
    fn tanh_half_structure() {
        // (e^t - 1)/(e^t + 1) = t/2 - t^3/24 + ...: a_1 = 1/2, a_2 = 0, a_3 = -1/4
        let f = exp_minus_one(8).div(&exp_plus_one(8)).unwrap();
        assert!(f.coeff(0).is_zero());
        assert_eq!(*f.coeff(1), Scalar::from_rational(K, rat(1, 2)));
        assert!(f.coeff(2).is_zero());
        assert_eq!(*f.coeff(3), Scalar::from_rational(K, rat(-1, 4)));
    }

    #[test]
    fn compose_with_t_is_identity() {
        let f = s_int(&[2, -1, 3, 0, 7]);
        assert_eq!(f.compose(&Series::t(K, 5)).unwrap(), f);
    }

    #[test]
    fn compose_requires_zero_constant() {
        let f = s_int(&[1, 1, 1]);
        assert_eq!(
            f.compose(&s_int(&[1, 1, 0])),
            Err(Error::CompositionRequiresDelta)
        );
    }

    #[test]
    fn exp_log_round_trip() {
        // exp(log(1+t)) = 1 + t exactly
        let one_plus_t = s_int(&[1, 1, 0, 0, 0, 0, 0, 0]);
        let log = one_plus_t.log().unwrap();
        // log(1+t): a_k = (-1)^{k-1} (k-1)!
        for k in 1..8 {
            let expect = Rational::from_integer(big_factorial(k - 1))
                * rat(if k % 2 == 1 { 1 } else { -1 }, 1);
            assert_eq!(*log.coeff(k), Scalar::from_rational(K, expect));
        }
        let back = log.exp().unwrap();
        assert_eq!(back, one_plus_t);
        // exp(0) = 1
        assert_eq!(Series::zero(K, 5).exp().unwrap(), Series::one(K, 5));
    }

    #[test]
    fn comp_inverse_of_exp_minus_one() {
        let f = exp_minus_one(10);
        let g = f.comp_inverse().unwrap();
        // g = log(1+t)
        for k in 1..10 {
            let expect = Rational::from_integer(big_factorial(k - 1))
                * rat(if k % 2 == 1 { 1 } else { -1 }, 1);
            assert_eq!(*g.coeff(k), Scalar::from_rational(K, expect));
        }
        assert_eq!(f.compose(&g).unwrap(), Series::t(K, 10));
        assert_eq!(g.compose(&f).unwrap(), Series::t(K, 10));
        assert_eq!(Series::t(K, 6).comp_inverse().unwrap(), Series::t(K, 6));
    }

    #[test]
    fn comp_inverse_of_tanh_like() {
        // inverse of (e^t-1)/(e^t+1) is log((1+t)/(1-t)) = 2(t + t^3/3 + t^5/5 + ...)
        let f = exp_minus_one(12).div(&exp_plus_one(12)).unwrap();
        let g = f.comp_inverse().unwrap();
        for k in 1..g.precision() {
            let expect = if k % 2 == 1 {
                Rational::from_integer(big_factorial(k - 1)) * rat(2, 1)
            } else {
                rat(0, 1)
            };
            assert_eq!(*g.coeff(k), Scalar::from_rational(K, expect), "k={k}");
        }
        let t = Series::t(K, g.precision());
        assert_eq!(f.truncate(g.precision()).compose(&g).unwrap(), t);
    }

    #[test]
    fn sqrt_of_one_minus_t_squared() {
        // 1 - t^2 has a_2 = -2
        let s = s_int(&[1, 0, -2, 0, 0, 0, 0, 0]);
        let r = s.sqrt().unwrap();
        assert_eq!(*r.coeff(2), Scalar::from_int(K, -1));
        assert_eq!(*r.coeff(4), Scalar::from_int(K, -3));
        assert_eq!(*r.coeff(6), Scalar::from_int(K, -45));
        assert_eq!(r.mul(&r).unwrap(), s);
        assert_eq!(
            s_int(&[2, 1]).sqrt(),
            Err(Error::ConstantTermNotOne { op: "sqrt" })
        );
    }

    #[test]
    fn pow_int_cases() {
        let s = s_int(&[0, 2, 0, 1]);
        assert_eq!(s.pow_int(1).unwrap(), s);
        assert_eq!(s.pow_int(0).unwrap(), Series::one(K, 4));
        // ((e^t-1)/t)^(-1) = t/(e^t-1)
        let unit = exp_minus_one(10).div(&Series::t(K, 10)).unwrap();
        let inv = unit.pow_int(-1).unwrap();
        let direct = Series::t(K, 9).div(&exp_minus_one(9)).unwrap();
        assert_eq!(inv.truncate(direct.precision()), direct);
        assert_eq!(
            exp_minus_one(5).pow_int(-2),
            Err(Error::NegativePowerNotInvertible)
        );
    }

    #[test]
    fn order_and_classify() {
        assert_eq!(exp_minus_one(6).order().unwrap(), 1);
        assert_eq!(exp_minus_one(6).classify().unwrap(), SeriesClass::Delta);
        assert_eq!(Series::exp_t(K, 4).classify().unwrap(), SeriesClass::Invertible);
        assert_eq!(Series::t_pow(K, 2, 6).classify().unwrap(), SeriesClass::Other);
        assert_eq!(Series::zero(K, 4).order(), Err(Error::OrderUndefined));
    }

    #[test]
    fn derivative_shifts_coefficients() {
        let s = s_int(&[5, 4, 3, 2]);
        assert_eq!(s.derivative().unwrap(), s_int(&[4, 3, 2]));
    }

    #[test]
    fn precision_monotonicity() {
        let a = s_int(&[1, 2, 3, 4, 5, 6]);
        let b = s_int(&[0, 1, -1, 2, -2, 3]);
        let full = a.mul(&b).unwrap().truncate(4);
        let cut = a.truncate(4).mul(&b.truncate(4)).unwrap();
        assert_eq!(full, cut);
        let comp_full = a.compose(&b).unwrap().truncate(4);
        let comp_cut = a.truncate(4).compose(&b.truncate(4)).unwrap();
        assert_eq!(comp_full, comp_cut);
    }
}
