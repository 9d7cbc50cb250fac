//! Dense polynomials in the formal parameter lambda over the rationals.
//!
//! These are the numerator/denominator material for [`super::LambdaRatFunc`].
//! Coefficients are stored ascending by power of lambda with no trailing
//! zeros; the zero polynomial is the empty list.

use num::{BigInt, Signed, Zero};

use crate::error::{Error, Result};

use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LambdaPoly {
    coeffs: Vec<Rational>,
}

impl LambdaPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn zero() -> Self {
        LambdaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LambdaPoly::constant(Rational::from_integer(1.into()))
    }

    pub fn constant(c: Rational) -> Self {
        LambdaPoly::new(vec![c])
    }

    /// The monomial lambda.
    pub fn lambda() -> Self {
        LambdaPoly::new(vec![
            Rational::from_integer(0.into()),
            Rational::from_integer(1.into()),
        ])
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        LambdaPoly::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Rational::from_integer(0.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        LambdaPoly::new(out)
    }

    pub fn sub(&self, rhs: &LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        LambdaPoly::new(out)
    }

    pub fn neg(&self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &LambdaPoly) -> LambdaPoly {
        if self.is_zero() || rhs.is_zero() {
            return LambdaPoly::zero();
        }
        let mut out =
            vec![Rational::from_integer(0.into()); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        LambdaPoly::new(out)
    }

    pub fn mul_rat(&self, c: &Rational) -> LambdaPoly {
        if c.is_zero() {
            return LambdaPoly::zero();
        }
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> LambdaPoly {
        match self.leading() {
            None => LambdaPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.mul_rat(&inv)
            }
        }
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        let mut acc = Rational::from_integer(0.into());
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// Euclidean division: self = q * rhs + r with deg r < deg rhs.
    pub fn divrem(&self, rhs: &LambdaPoly) -> Result<(LambdaPoly, LambdaPoly)> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominatorPoly);
        }
        let dv = rhs.coeffs.len() - 1;
        let lead_inv = rhs.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![
            Rational::from_integer(0.into());
            self.coeffs.len().saturating_sub(dv)
        ];
        while rem.len() > dv && !rem.is_empty() {
            let dr = rem.len() - 1;
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                quot[dr - dv] = factor.clone();
                for (i, b) in rhs.coeffs.iter().enumerate() {
                    let idx = dr - dv + i;
                    let t = &factor * b;
                    rem[idx] -= t;
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((LambdaPoly::new(quot), LambdaPoly::new(rem)))
    }

    /// Division that must be exact; used to strip a known common factor.
    pub fn exact_div(&self, rhs: &LambdaPoly) -> Result<LambdaPoly> {
        let (q, r) = self.divrem(rhs)?;
        if !r.is_zero() {
            return Err(Error::InternalConsistency(
                "inexact polynomial division".into(),
            ));
        }
        Ok(q)
    }

    /// Monic gcd via a primitive integer remainder sequence; the remainder is
    /// reduced to primitive integer form at each step to keep coefficients small.
    pub fn gcd(a: &LambdaPoly, b: &LambdaPoly) -> LambdaPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        // Nonzero constants are units.
        if a.is_constant() || b.is_constant() {
            return LambdaPoly::one();
        }
        let mut u = int_primitive(a);
        let mut v = int_primitive(b);
        if u.len() < v.len() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_empty() {
            let r = normalize_int(pseudo_rem(u, &v));
            u = v;
            v = r;
        }
        LambdaPoly::new(u.into_iter().map(Rational::from_integer).collect()).monic()
    }
}

/// Clears denominators and divides out the integer content; leading
/// coefficient ends up positive.
fn int_primitive(p: &LambdaPoly) -> Vec<BigInt> {
    let mut lcm = BigInt::from(1);
    for c in p.coeffs() {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    normalize_int(ints)
}

fn normalize_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::from(0);
    for c in &v {
        content = num::integer::gcd(content, c.clone());
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    for c in &mut v {
        *c = &*c / &content;
    }
    v
}

/// One pseudo-remainder of u by v (deg u >= deg v >= 0, v nonzero).
fn pseudo_rem(mut r: Vec<BigInt>, v: &[BigInt]) -> Vec<BigInt> {
    let dv = v.len() - 1;
    let lv = v.last().unwrap().clone();
    while r.len() > dv {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        for c in &mut r {
            *c = &*c * &lv;
        }
        for (i, b) in v.iter().enumerate() {
            let idx = dr - dv + i;
            r[idx] -= &lr * b;
        }
        r.pop();
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rat;

    fn p(coeffs: &[i64]) -> LambdaPoly {
        LambdaPoly::from_int_coeffs(coeffs)
    }

    #[test]
    fn trims_trailing_zeros() {
        let q = LambdaPoly::new(vec![rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(q.degree(), Some(0));
        assert!(LambdaPoly::new(vec![rat(0, 1)]).is_zero());
    }

    #[test]
    fn mul_and_divrem_agree() {
        let a = p(&[1, 2, 3]);
        let b = p(&[-1, 1]);
        let prod = a.mul(&b);
        let (q, r) = prod.divrem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, a);
    }

    #[test]
    fn gcd_cancels_common_factor() {
        // (lambda^2 - 1) and (lambda - 1) share (lambda - 1).
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let g = LambdaPoly::gcd(&a, &b);
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = p(&[1, 1]);
        let b = p(&[2, 0, 1]);
        assert_eq!(LambdaPoly::gcd(&a, &b), LambdaPoly::one());
        // constants are units
        assert_eq!(LambdaPoly::gcd(&p(&[4]), &a), LambdaPoly::one());
    }

    #[test]
    fn gcd_is_monic() {
        let a = p(&[-2, 2]); // 2(lambda - 1)
        let b = p(&[-4, 0, 4]); // 4(lambda^2 - 1)
        assert_eq!(LambdaPoly::gcd(&a, &b), p(&[-1, 1]));
    }

    #[test]
    fn eval_horner() {
        let a = p(&[1, -3, 2]); // 1 - 3 l + 2 l^2
        assert_eq!(a.eval(&rat(2, 1)), rat(3, 1));
    }
}
