//! Exact scalar arithmetic: arbitrary-precision rationals and the field
//! Q(lambda) of rational functions in the formal parameter lambda.
//!
//! All identity checks run in Q(lambda), so a verified identity holds for
//! every admissible numeric lambda at once; [`eval_at_lambda`] provides the
//! numeric specialization (which refuses lambda = 1).

mod lambda_poly;
mod ratfunc;
mod scalar;

pub use lambda_poly::LambdaPoly;
pub use ratfunc::{eval_at_lambda, ratfunc_normalize, LambdaRatFunc};
pub use scalar::{scalar_arith, ArithOp, FieldKind, Scalar};

pub use num::BigInt;

/// Arbitrary-precision rational: reduced, positive denominator, zero as 0/1.
/// Backed by `num`'s big rational, which maintains exactly those invariants.
pub type Rational = num::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn big_factorial(n: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

pub fn big_binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num::integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// The falling factorial (n)_k = n (n-1) ... (n-k+1) for integer n.
pub fn falling_number(n: i64, k: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k as i64 {
        acc *= BigInt::from(n - i);
    }
    acc
}

/// Rows 0..n of Pascal's triangle; shared by the convolution loops.
pub(crate) struct PascalTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl PascalTriangle {
    pub fn new(n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut row = vec![BigInt::from(1); i + 1];
            for j in 1..i {
                row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
            }
            rows.push(row);
        }
        PascalTriangle { rows }
    }

    pub fn at(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinatorial_helpers() {
        assert_eq!(big_factorial(5), BigInt::from(120));
        assert_eq!(big_binomial(10, 3), BigInt::from(120));
        assert_eq!(big_binomial(3, 7), BigInt::from(0));
        assert_eq!(falling_number(5, 3), BigInt::from(60));
        assert_eq!(falling_number(1, 2), BigInt::from(0)); // (1)_2 = 1*0
        assert_eq!(falling_number(-1, 2), BigInt::from(2)); // (-1)(-2)
        assert_eq!(falling_number(4, 0), BigInt::from(1));
    }

    #[test]
    fn pascal_matches_binomial() {
        let t = PascalTriangle::new(12);
        for n in 0..=12usize {
            for k in 0..=n {
                assert_eq!(t.at(n, k), &big_binomial(n, k));
            }
        }
    }
}
