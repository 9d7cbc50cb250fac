//! Polynomials in x over a scalar field, and the action of series on them
//! as linear operators: t acts as d/dx, e^{yt} acts as the shift x -> x + y,
//! and a general series acts through sum a_k/k! d^k/dx^k.

use num::BigInt;

use crate::coefficients::{
    big_binomial, big_factorial, falling_number, FieldKind, PascalTriangle, Rational, Scalar,
};
use crate::error::{Error, Result};
use crate::series::Series;

/// Dense polynomial in x, ascending coefficients, no trailing zeros; the zero
/// polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    kind: FieldKind,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn from_coeffs(kind: FieldKind, mut coeffs: Vec<Scalar>) -> Result<Poly> {
        for c in &coeffs {
            if c.kind() != kind {
                return Err(Error::VariantMismatch(kind, c.kind()));
            }
        }
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(Poly { kind, coeffs })
    }

    pub fn zero(kind: FieldKind) -> Poly {
        Poly {
            kind,
            coeffs: Vec::new(),
        }
    }

    pub fn one(kind: FieldKind) -> Poly {
        Poly::constant(Scalar::one(kind))
    }

    pub fn constant(c: Scalar) -> Poly {
        let kind = c.kind();
        if c.is_zero() {
            Poly::zero(kind)
        } else {
            Poly {
                kind,
                coeffs: vec![c],
            }
        }
    }

    /// The monomial x^k.
    pub fn monomial(kind: FieldKind, k: usize) -> Poly {
        let mut coeffs = vec![Scalar::zero(kind); k + 1];
        coeffs[k] = Scalar::one(kind);
        Poly { kind, coeffs }
    }

    pub fn x(kind: FieldKind) -> Poly {
        Poly::monomial(kind, 1)
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
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

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.kind))
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn promoted(&self) -> Poly {
        Poly {
            kind: FieldKind::Lambda,
            coeffs: self.coeffs.iter().map(|c| c.promoted()).collect(),
        }
    }

    fn same_kind(&self, rhs: &Poly) -> Result<FieldKind> {
        if self.kind != rhs.kind {
            return Err(Error::VariantMismatch(self.kind, rhs.kind));
        }
        Ok(self.kind)
    }

    pub fn add(&self, rhs: &Poly) -> Result<Poly> {
        let kind = self.same_kind(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&rhs.coeff(k))?);
        }
        Poly::from_coeffs(kind, out)
    }

    pub fn sub(&self, rhs: &Poly) -> Result<Poly> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            kind: self.kind,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Result<Poly> {
        let kind = self.same_kind(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Poly::zero(kind));
        }
        let mut out = vec![Scalar::zero(kind); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b)?)?;
            }
        }
        Poly::from_coeffs(kind, out)
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Result<Poly> {
        if c.kind() != self.kind {
            return Err(Error::VariantMismatch(self.kind, c.kind()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.mul(c))
            .collect::<Result<Vec<_>>>()?;
        Poly::from_coeffs(self.kind, coeffs)
    }

    /// Cheap scaling by a plain rational constant (either variant).
    pub fn mul_rat(&self, c: &Rational) -> Poly {
        let mut coeffs: Vec<Scalar> = self.coeffs.iter().map(|a| a.mul_rat(c)).collect();
        if num::Zero::is_zero(c) {
            coeffs.clear();
        }
        Poly {
            kind: self.kind,
            coeffs,
        }
    }

    pub fn eval(&self, v: &Scalar) -> Result<Scalar> {
        if v.kind() != self.kind {
            return Err(Error::VariantMismatch(self.kind, v.kind()));
        }
        let mut acc = Scalar::zero(self.kind);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(v)?.add(c)?;
        }
        Ok(acc)
    }

    /// k-th derivative with respect to x.
    pub fn derivative(&self, k: usize) -> Poly {
        if k == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= k {
            return Poly::zero(self.kind);
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - k);
        for j in k..self.coeffs.len() {
            let scale = Rational::new(big_factorial(j) / big_factorial(j - k), BigInt::from(1));
            out.push(self.coeffs[j].mul_rat(&scale));
        }
        Poly {
            kind: self.kind,
            coeffs: out,
        }
    }

    /// Taylor shift p(x + y), exact, by binomial expansion.
    pub fn shift(&self, y: &Scalar) -> Result<Poly> {
        if y.kind() != self.kind {
            return Err(Error::VariantMismatch(self.kind, y.kind()));
        }
        if y.is_zero() || self.is_zero() {
            return Ok(self.clone());
        }
        let deg = self.coeffs.len() - 1;
        let pascal = PascalTriangle::new(deg);
        let mut out = vec![Scalar::zero(self.kind); deg + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c (x+y)^k = c sum_j C(k,j) y^{k-j} x^j
            let mut ypow = Scalar::one(self.kind);
            for j in (0..=k).rev() {
                let term = c.mul(&ypow)?.mul_int(pascal.at(k, j));
                out[j] = out[j].add(&term)?;
                if j > 0 {
                    ypow = ypow.mul(y)?;
                }
            }
        }
        Poly::from_coeffs(self.kind, out)
    }

    pub fn mul_by_x(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Scalar::zero(self.kind));
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            kind: self.kind,
            coeffs,
        }
    }

    /// Strips one factor of x; the constant term must vanish.
    pub fn div_by_x(&self) -> Result<Poly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::TransferNonzeroConstant);
        }
        Ok(Poly {
            kind: self.kind,
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "var": "x",
            "coeffs": self.coeffs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Applies a series as a linear operator: f(t) p(x) = sum a_k/k! p^(k)(x).
/// The series must carry strictly more coefficients than deg p, so nothing
/// the polynomial needs was truncated away.
pub fn apply_series(f: &Series, p: &Poly) -> Result<Poly> {
    if f.kind() != p.kind() {
        return Err(Error::VariantMismatch(f.kind(), p.kind()));
    }
    let deg = match p.degree() {
        None => return Ok(Poly::zero(p.kind())),
        Some(d) => d,
    };
    if f.precision() <= deg {
        return Err(Error::InsufficientPrecision {
            needed: deg + 1,
            have: f.precision(),
        });
    }
    let mut acc = Poly::zero(p.kind());
    let mut dk = p.clone();
    for k in 0..=deg {
        if k > 0 {
            dk = dk.derivative(1);
        }
        let a = f.coeff(k);
        if a.is_zero() {
            continue;
        }
        let scale = Rational::new(BigInt::from(1), big_factorial(k));
        acc = acc.add(&dk.mul_rat(&scale).scalar_mul(a)?)?;
    }
    Ok(acc)
}

/// The falling factorial (x)_n = x (x-1) ... (x-n+1).
pub fn falling_factorial(kind: FieldKind, n: usize) -> Poly {
    let mut acc = Poly::one(kind);
    for i in 0..n {
        let factor = Poly::from_coeffs(
            kind,
            vec![Scalar::from_int(kind, -(i as i64)), Scalar::one(kind)],
        )
        .expect("uniform kind");
        acc = acc.mul(&factor).expect("same kind");
    }
    acc
}

/// Signed Stirling number of the first kind: the coefficient of x^l in (x)_n.
pub fn stirling1(n: usize, l: usize) -> Scalar {
    falling_factorial(FieldKind::Rational, n).coeff(l)
}

/// Stirling number of the second kind S2(l, n), read off the series
/// (e^t - 1)^n whose exponential coefficient at t^l is n! S2(l, n).
pub fn stirling2(l: usize, n: usize) -> Scalar {
    if n > l {
        return Scalar::zero(FieldKind::Rational);
    }
    let kind = FieldKind::Rational;
    let mut coeffs = Series::exp_t(kind, l + 1).coeffs().to_vec();
    coeffs[0] = Scalar::zero(kind);
    let em1 = Series::from_exp_coeffs(kind, coeffs).expect("nonempty");
    let pow = em1.pow_int(n as i64).expect("nonnegative power");
    let inv_nfact = Rational::new(BigInt::from(1), big_factorial(n));
    pow.coeff(l).mul_rat(&inv_nfact)
}

/// (n)_k as a scalar of the requested kind, for formula assembly.
pub fn falling_scalar(kind: FieldKind, n: i64, k: usize) -> Scalar {
    Scalar::from_int(kind, 1).mul_int(&falling_number(n, k))
}

/// C(n, k) as a scalar of the requested kind.
pub fn binomial_scalar(kind: FieldKind, n: usize, k: usize) -> Scalar {
    Scalar::from_int(kind, 1).mul_int(&big_binomial(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rat;

    const K: FieldKind = FieldKind::Rational;

    fn p_int(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(K, coeffs.iter().map(|&c| Scalar::from_int(K, c)).collect()).unwrap()
    }

    fn bernoulli_x2() -> Poly {
        Poly::from_coeffs(
            K,
            vec![
                Scalar::from_rational(K, rat(1, 6)),
                Scalar::from_int(K, -1),
                Scalar::one(K),
            ],
        )
        .unwrap()
    }

    #[test]
    fn derivative_shift_eval() {
        assert_eq!(Poly::monomial(K, 3).derivative(1), p_int(&[0, 0, 3]));
        assert_eq!(
            Poly::monomial(K, 2).shift(&Scalar::one(K)).unwrap(),
            p_int(&[1, 2, 1])
        );
        assert_eq!(
            bernoulli_x2().eval(&Scalar::zero(K)).unwrap(),
            Scalar::from_rational(K, rat(1, 6))
        );
    }

    #[test]
    fn t_power_acts_as_iterated_derivative() {
        // t^k x^n = n!/(n-k)! x^{n-k} for k <= n, else 0
        for n in 0..6usize {
            for k in 0..8usize {
                let lhs = apply_series(&Series::t_pow(K, k, 8), &Poly::monomial(K, n)).unwrap();
                let rhs = if k <= n {
                    Poly::monomial(K, n - k).mul_rat(&Rational::new(
                        big_factorial(n) / big_factorial(n - k),
                        BigInt::from(1),
                    ))
                } else {
                    Poly::zero(K)
                };
                assert_eq!(lhs, rhs, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn exp_t_shifts_by_one() {
        let lhs = apply_series(&Series::exp_t(K, 4), &Poly::monomial(K, 2)).unwrap();
        assert_eq!(lhs, p_int(&[1, 2, 1]));
    }

    #[test]
    fn bernoulli_operator_on_x_squared() {
        // t/(e^t - 1) applied to x^2 gives x^2 - x + 1/6
        let mut coeffs = Series::exp_t(K, 8).coeffs().to_vec();
        coeffs[0] = Scalar::zero(K);
        let em1 = Series::from_exp_coeffs(K, coeffs).unwrap();
        let op = Series::t(K, 8).div(&em1).unwrap();
        let got = apply_series(&op, &Poly::monomial(K, 2)).unwrap();
        assert_eq!(got, bernoulli_x2());
    }

    #[test]
    fn apply_requires_precision() {
        let f = Series::exp_t(K, 3);
        assert_eq!(
            apply_series(&f, &Poly::monomial(K, 3)),
            Err(Error::InsufficientPrecision { needed: 4, have: 3 })
        );
    }

    #[test]
    fn x_multiplication_and_division() {
        assert_eq!(p_int(&[0, 2, 0, 1]).div_by_x().unwrap(), p_int(&[2, 0, 1]));
        let p = p_int(&[0, -1, 4]);
        assert_eq!(p.div_by_x().unwrap().mul_by_x(), p);
        assert_eq!(
            p_int(&[1, 1]).div_by_x(),
            Err(Error::TransferNonzeroConstant)
        );
    }

    #[test]
    fn falling_factorial_x3() {
        // (x)_3 = x^3 - 3x^2 + 2x
        assert_eq!(falling_factorial(K, 3), p_int(&[0, 2, -3, 1]));
        assert_eq!(falling_factorial(K, 0), Poly::one(K));
    }

    /// Brute-force oracle: partitions of an l-set into exactly n nonempty
    /// blocks, enumerated as restricted growth strings.
    fn set_partitions(l: usize, n: usize) -> u64 {
        fn rec(len: usize, l: usize, blocks: usize, n: usize) -> u64 {
            if len == l {
                return u64::from(blocks == n);
            }
            let mut total = 0;
            for b in 0..=blocks.min(n - 1) {
                total += rec(len + 1, l, blocks.max(b + 1), n);
            }
            total
        }
        if n == 0 {
            return u64::from(l == 0);
        }
        rec(0, l, 0, n)
    }

    #[test]
    fn stirling2_matches_set_partition_oracle() {
        assert_eq!(stirling2(4, 2), Scalar::from_int(K, 7));
        for l in 0..=7usize {
            for n in 0..=l {
                assert_eq!(
                    stirling2(l, n),
                    Scalar::from_int(K, set_partitions(l, n) as i64),
                    "S2({l},{n})"
                );
            }
        }
    }

    #[test]
    fn stirling_diagonals_and_signs() {
        for n in 0..8usize {
            assert_eq!(stirling1(n, n), Scalar::one(K));
            assert_eq!(stirling2(n, n), Scalar::one(K));
        }
        assert_eq!(stirling1(3, 1), Scalar::from_int(K, 2));
        assert_eq!(stirling1(3, 2), Scalar::from_int(K, -3));
    }

    #[test]
    fn stirling_arrays_are_mutually_inverse() {
        // sum_n S2(m, n) s1(n, l) = delta_{m,l}
        for m in 0..=8usize {
            for l in 0..=8usize {
                let mut acc = Scalar::zero(K);
                for n in 0..=m {
                    acc = acc
                        .add(&stirling2(m, n).mul(&stirling1(n, l)).unwrap())
                        .unwrap();
                }
                assert_eq!(acc, Scalar::from_int(K, i64::from(m == l)), "m={m} l={l}");
            }
        }
    }

    #[test]
    fn operator_homomorphism_small() {
        // apply(f*g, p) = apply(f, apply(g, p))
        let f = Series::exp_t(K, 8);
        let g = Series::t(K, 8).add(&Series::t_pow(K, 2, 8)).unwrap();
        let p = p_int(&[1, 0, -2, 5]);
        let lhs = apply_series(&f.mul(&g).unwrap(), &p).unwrap();
        let rhs = apply_series(&f, &apply_series(&g, &p).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
