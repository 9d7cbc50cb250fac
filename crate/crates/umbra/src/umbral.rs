//! The umbral-calculus core: the linear-functional pairing <f(t) | p(x)>,
//! Sheffer and associated sequence construction from a (g, f) pair, the
//! biorthogonality (duality) check, the transfer formula between associated
//! sequences, and the Pincherle derivative.
//!
//! A sequence S_n for the pair (g, f) is produced from the two-variable
//! expansion of g(fbar(t))^{-1} e^{x fbar(t)}: the exponential factor is kept
//! as a series in t whose coefficients are polynomials in x, so each S_n
//! falls out symbolically in one pass.

use num::BigInt;

use crate::coefficients::{big_factorial, FieldKind, PascalTriangle, Rational, Scalar};
use crate::error::{Error, Result};
use crate::polyop::{apply_series, binomial_scalar, Poly};
use crate::series::{Series, SeriesClass};

/// A Sheffer pair: g invertible (order 0), f delta (order 1), checked at
/// construction. The two series may live in different coefficient fields
/// (e.g. g in Q(lambda), f in Q); sequence construction promotes as needed
/// and the resulting polynomials live in g's field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShefferPair {
    g: Series,
    f: Series,
}

impl ShefferPair {
    pub fn new(g: Series, f: Series) -> Result<ShefferPair> {
        if g.order()? != 0 {
            return Err(Error::NotInvertible(g.order()?));
        }
        if f.classify()? != SeriesClass::Delta {
            return Err(Error::NotDelta);
        }
        Ok(ShefferPair { g, f })
    }

    /// The associated pair (1, f).
    pub fn associated(f: Series) -> Result<ShefferPair> {
        let one = Series::one(f.kind(), f.precision());
        ShefferPair::new(one, f)
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    /// The field the sequence polynomials will live in.
    pub fn sequence_kind(&self) -> FieldKind {
        if self.g.kind() == FieldKind::Lambda || self.f.kind() == FieldKind::Lambda {
            FieldKind::Lambda
        } else {
            FieldKind::Rational
        }
    }
}

/// A polynomial sequence with deg polys[n] = n, remembering its pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySequence {
    polys: Vec<Poly>,
    pair: ShefferPair,
}

impl PolySequence {
    pub fn new(polys: Vec<Poly>, pair: ShefferPair) -> Result<PolySequence> {
        for (n, p) in polys.iter().enumerate() {
            if p.degree() != Some(n) {
                return Err(Error::InternalConsistency(format!(
                    "sequence member {n} has degree {:?}, expected {n}",
                    p.degree()
                )));
            }
        }
        Ok(PolySequence { polys, pair })
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn poly(&self, n: usize) -> &Poly {
        &self.polys[n]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn pair(&self) -> &ShefferPair {
        &self.pair
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.polys.iter().map(|p| p.to_json()).collect())
    }
}

/// The umbral pairing <f(t) | p(x)> = sum_k a_k [x^k] p. Agrees with
/// evaluating apply_series(f, p) at x = 0.
pub fn pairing(f: &Series, p: &Poly) -> Result<Scalar> {
    if f.kind() != p.kind() {
        return Err(Error::VariantMismatch(f.kind(), p.kind()));
    }
    let deg = match p.degree() {
        None => return Ok(Scalar::zero(f.kind())),
        Some(d) => d,
    };
    if f.precision() <= deg {
        return Err(Error::InsufficientPrecision {
            needed: deg + 1,
            have: f.precision(),
        });
    }
    let mut acc = Scalar::zero(f.kind());
    for k in 0..=deg {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&c.mul(f.coeff(k))?)?;
    }
    Ok(acc)
}

/// Coefficient polynomials E_n(x) of e^{x h(t)} = sum_n E_n(x) t^n/n! for a
/// delta-or-higher series h: E_n = sum_k (a_n(h^k)/k!) x^k, a finite sum
/// because h^k has order >= k.
pub(crate) fn exp_poly_series(h: &Series, n_max: usize) -> Result<Vec<Poly>> {
    if h.precision() < n_max + 1 {
        return Err(Error::InsufficientPrecision {
            needed: n_max + 1,
            have: h.precision(),
        });
    }
    if !h.coeff(0).is_zero() {
        return Err(Error::CompositionRequiresDelta);
    }
    let kind = h.kind();
    let h = h.truncate(n_max + 1);
    // grid[n][k] = coefficient of x^k in E_n
    let mut grid = vec![vec![Scalar::zero(kind); n_max + 1]; n_max + 1];
    let mut power = Series::one(kind, n_max + 1);
    for k in 0..=n_max {
        if k > 0 {
            power = power.mul(&h)?;
        }
        let scale = Rational::new(BigInt::from(1), big_factorial(k));
        for n in k..=n_max {
            grid[n][k] = power.coeff(n).mul_rat(&scale);
        }
    }
    grid.into_iter()
        .map(|row| Poly::from_coeffs(kind, row))
        .collect()
}

/// Binomial convolution of a scalar series with polynomial coefficients:
/// S_n = sum_j C(n,j) s_j P_{n-j}.
pub(crate) fn convolve_scalar_with_polys(s: &Series, polys: &[Poly]) -> Result<Vec<Poly>> {
    let n_max = polys.len().saturating_sub(1);
    if s.precision() < polys.len() {
        return Err(Error::InsufficientPrecision {
            needed: polys.len(),
            have: s.precision(),
        });
    }
    let kind = s.kind();
    let pascal = PascalTriangle::new(n_max);
    let mut out = Vec::with_capacity(polys.len());
    for n in 0..polys.len() {
        let mut acc = Poly::zero(kind);
        for j in 0..=n {
            let c = s.coeff(j);
            if c.is_zero() {
                continue;
            }
            let term = polys[n - j].scalar_mul(c)?.mul_rat(&Rational::from_integer(
                pascal.at(n, j).clone(),
            ));
            acc = acc.add(&term)?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Builds S_0 .. S_{n_max} for a Sheffer pair via the generating expansion
/// g(fbar)^{-1} e^{x fbar}. Series precisions must be at least n_max + 1.
///
/// The compositional inverse runs in f's own field, so a rational f paired
/// with a lambda-rational g does not pay for Q(lambda) arithmetic where Q
/// suffices.
pub fn sheffer_sequence(pair: &ShefferPair, n_max: usize) -> Result<PolySequence> {
    let needed = n_max + 1;
    let kind = pair.sequence_kind();
    let fbar = pair.f.comp_inverse()?;
    let mut e_polys = exp_poly_series(&fbar, n_max)?;
    if kind == FieldKind::Lambda && pair.f.kind() == FieldKind::Rational {
        e_polys = e_polys.iter().map(|p| p.promoted()).collect();
    }
    let g = if kind == FieldKind::Lambda && pair.g.kind() == FieldKind::Rational {
        pair.g.promoted()
    } else {
        pair.g.clone()
    };
    let polys = if g
        .coeffs()
        .iter()
        .enumerate()
        .all(|(k, c)| if k == 0 { c.is_one() } else { c.is_zero() })
    {
        e_polys
    } else {
        let fbar_k = if kind == FieldKind::Lambda && fbar.kind() == FieldKind::Rational {
            fbar.promoted()
        } else {
            fbar
        };
        let ginv = g.compose(&fbar_k)?.inverse()?;
        if ginv.precision() < needed {
            return Err(Error::InsufficientPrecision {
                needed,
                have: ginv.precision(),
            });
        }
        convolve_scalar_with_polys(&ginv, &e_polys)?
    };
    PolySequence::new(polys, pair.clone())
}

/// The associated sequence for a delta series f (the Sheffer sequence with
/// g = 1).
pub fn associated_sequence(f: &Series, n_max: usize) -> Result<PolySequence> {
    sheffer_sequence(&ShefferPair::associated(f.clone())?, n_max)
}

/// A failed biorthogonality entry: <g f^k | S_n> came out as `got` instead of
/// n! delta_{n,k}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityFailure {
    pub n: usize,
    pub k: usize,
    pub got: Scalar,
}

/// Checks <g(t) f(t)^k | S_n(x)> = n! delta_{n,k} for all n, k below the
/// sequence length; returns the first failing entry, scanning k outer, n
/// inner in increasing order.
pub fn verify_duality_report(
    pair: &ShefferPair,
    seq: &PolySequence,
) -> Result<Option<DualityFailure>> {
    let n_max = seq.len().saturating_sub(1);
    let kind = pair.sequence_kind();
    let promote = |s: &Series| {
        if kind == FieldKind::Lambda && s.kind() == FieldKind::Rational {
            s.promoted()
        } else {
            s.clone()
        }
    };
    let g = promote(&pair.g);
    let f = promote(&pair.f);
    let mut gfk = g;
    for k in 0..=n_max {
        if k > 0 {
            gfk = gfk.mul(&f)?;
        }
        for n in 0..=n_max {
            let got = pairing(&gfk, seq.poly(n))?;
            let expect = if n == k {
                Scalar::from_int(kind, 1).mul_int(&big_factorial(n))
            } else {
                Scalar::zero(kind)
            };
            if got != expect {
                return Ok(Some(DualityFailure { n, k, got }));
            }
        }
    }
    Ok(None)
}

pub fn verify_duality(pair: &ShefferPair, seq: &PolySequence) -> Result<bool> {
    Ok(verify_duality_report(pair, seq)?.is_none())
}

/// Transfer formula between associated sequences: given p_n associated to f,
/// returns q_n = x (f/g)^n x^{-1} p_n, the n-th member of the sequence
/// associated to g. Both f and g must be delta series, and p_n(0) = 0 for
/// n >= 1. q_0 = 1 by convention (the n = 0 operator expression is
/// degenerate, and every associated sequence starts at 1).
pub fn transfer(p_seq: &PolySequence, f: &Series, g: &Series, n: usize) -> Result<Poly> {
    if f.classify()? != SeriesClass::Delta || g.classify()? != SeriesClass::Delta {
        return Err(Error::NotDelta);
    }
    let kind = if f.kind() == FieldKind::Lambda || g.kind() == FieldKind::Lambda {
        FieldKind::Lambda
    } else {
        FieldKind::Rational
    };
    if n == 0 {
        return Ok(Poly::one(kind));
    }
    let promote_s = |s: &Series| {
        if kind == FieldKind::Lambda && s.kind() == FieldKind::Rational {
            s.promoted()
        } else {
            s.clone()
        }
    };
    let p_n = {
        let p = p_seq.poly(n);
        if kind == FieldKind::Lambda && p.kind() == FieldKind::Rational {
            p.promoted()
        } else {
            p.clone()
        }
    };
    let inner = p_n.div_by_x()?;
    let ratio = promote_s(f).div(&promote_s(g))?;
    let ratio_n = ratio.pow_int(n as i64)?;
    Ok(apply_series(&ratio_n, &inner)?.mul_by_x())
}

/// The Pincherle derivative of g as an operator equals the t-derivative of
/// the series; in the exponential convention that is the coefficient shift
/// a'_k = a_{k+1}.
pub fn pincherle(g: &Series) -> Result<Series> {
    g.derivative()
}

/// Checks the commutator identity g'(t) p = g(t) (x p) - x (g(t) p) exactly.
pub fn verify_pincherle(g: &Series, p: &Poly) -> Result<bool> {
    let lhs = apply_series(&pincherle(g)?, p)?;
    let g_xp = apply_series(g, &p.mul_by_x())?;
    let x_gp = apply_series(g, p)?.mul_by_x();
    Ok(lhs == g_xp.sub(&x_gp)?)
}

/// Reconstructs p from its functional expansion p(x) = sum_k <t^k|p>/k! x^k.
pub fn expand_by_functionals(p: &Poly) -> Result<Poly> {
    let kind = p.kind();
    let deg = match p.degree() {
        None => return Ok(Poly::zero(kind)),
        Some(d) => d,
    };
    let mut coeffs = Vec::with_capacity(deg + 1);
    for k in 0..=deg {
        let tk = Series::t_pow(kind, k, deg + 1);
        let val = pairing(&tk, p)?;
        coeffs.push(val.mul_rat(&Rational::new(BigInt::from(1), big_factorial(k))));
    }
    Poly::from_coeffs(kind, coeffs)
}

/// Both evaluation routes for <f_1 f_2 ... f_m | x^n>: the pairing of the
/// product series, and the multinomial expansion over compositions of n.
pub(crate) fn multinomial_routes(fs: &[Series], n: usize) -> Result<(Scalar, Scalar)> {
    if fs.is_empty() {
        return Err(Error::ParamOutOfRange("empty functional list".into()));
    }
    let kind = fs[0].kind();
    let xn = Poly::monomial(kind, n);
    let mut product = fs[0].clone();
    for f in &fs[1..] {
        product = product.mul(f)?;
    }
    let direct = pairing(&product, &xn)?;
    // sum over i_1 + ... + i_m = n of n!/(i_1! ... i_m!) prod <f_j | x^{i_j}>
    fn rec(
        fs: &[Series],
        idx: usize,
        remaining: usize,
        partial: &Scalar,
        acc: &mut Scalar,
    ) -> Result<()> {
        if idx == fs.len() - 1 {
            let a = fs[idx].coeff(remaining);
            let term = partial
                .mul(a)?
                .mul_rat(&Rational::new(BigInt::from(1), big_factorial(remaining)));
            *acc = acc.add(&term)?;
            return Ok(());
        }
        for i in 0..=remaining {
            let a = fs[idx].coeff(i);
            if a.is_zero() {
                continue;
            }
            let next = partial
                .mul(a)?
                .mul_rat(&Rational::new(BigInt::from(1), big_factorial(i)));
            rec(fs, idx + 1, remaining - i, &next, acc)?;
        }
        Ok(())
    }
    for f in fs {
        if f.kind() != kind {
            return Err(Error::VariantMismatch(kind, f.kind()));
        }
        if f.precision() <= n {
            return Err(Error::InsufficientPrecision {
                needed: n + 1,
                have: f.precision(),
            });
        }
    }
    let mut acc = Scalar::zero(kind);
    rec(fs, 0, n, &Scalar::one(kind), &mut acc)?;
    let expanded = acc.mul_rat(&Rational::from_integer(big_factorial(n)));
    Ok((direct, expanded))
}

/// Computes <f_1 ... f_m | x^n> by both routes; the two must agree (an
/// internal-consistency error otherwise, signalling an engine bug).
pub fn multinomial_pairing(fs: &[Series], n: usize) -> Result<Scalar> {
    let (direct, expanded) = multinomial_routes(fs, n)?;
    if direct != expanded {
        return Err(Error::InternalConsistency(
            "multinomial expansion disagrees with direct pairing".into(),
        ));
    }
    Ok(direct)
}

/// Checks the binomial convolution S_n(x+y) = sum_k C(n,k) p_k(y) S_{n-k}(x)
/// with p_k = g(t) S_k, exactly.
pub fn binomial_convolution_check(pair: &ShefferPair, n: usize, y: &Scalar) -> Result<bool> {
    let seq = sheffer_sequence(pair, n)?;
    let kind = pair.sequence_kind();
    let y = if kind == FieldKind::Lambda && y.kind() == FieldKind::Rational {
        y.promoted()
    } else {
        y.clone()
    };
    let g = if kind == FieldKind::Lambda && pair.g.kind() == FieldKind::Rational {
        pair.g.promoted()
    } else {
        pair.g.clone()
    };
    let lhs = seq.poly(n).shift(&y)?;
    let mut rhs = Poly::zero(kind);
    for k in 0..=n {
        let p_k = apply_series(&g, seq.poly(k))?;
        let p_k_at_y = p_k.eval(&y)?;
        let coeff = binomial_scalar(kind, n, k).mul(&p_k_at_y)?;
        rhs = rhs.add(&seq.poly(n - k).scalar_mul(&coeff)?)?;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rat;

    const K: FieldKind = FieldKind::Rational;
    const L: FieldKind = FieldKind::Lambda;

    fn exp_minus_one(prec: usize) -> Series {
        let mut coeffs = Series::exp_t(K, prec).coeffs().to_vec();
        coeffs[0] = Scalar::zero(K);
        Series::from_exp_coeffs(K, coeffs).unwrap()
    }

    fn exp_plus_one(prec: usize) -> Series {
        let mut coeffs = Series::exp_t(K, prec).coeffs().to_vec();
        coeffs[0] = Scalar::from_int(K, 2);
        Series::from_exp_coeffs(K, coeffs).unwrap()
    }

    fn mittag_f(prec: usize) -> Series {
        exp_minus_one(prec + 1).div(&exp_plus_one(prec + 1)).unwrap()
    }

    /// (1 - lambda) t / (e^t - lambda), the delta series behind the
    /// lambda-deformed associated family.
    fn s_lambda_f(prec: usize) -> Series {
        let lam = Scalar::lambda();
        let one = Scalar::one(L);
        let et = Series::exp_t(L, prec + 1);
        let et_minus_lam = et
            .sub(&Series::constant(lam.clone(), prec + 1))
            .unwrap();
        let numer = Series::t(L, prec + 1)
            .scalar_mul(&one.sub(&lam).unwrap())
            .unwrap();
        numer.div(&et_minus_lam).unwrap()
    }

    #[test]
    fn pairing_kronecker() {
        // <t^k | x^n> = n! delta_{n,k}
        for n in 0..5usize {
            for k in 0..5usize {
                let got = pairing(&Series::t_pow(K, k, 6), &Poly::monomial(K, n)).unwrap();
                let expect = if n == k {
                    Scalar::from_rational(K, Rational::from_integer(big_factorial(n)))
                } else {
                    Scalar::zero(K)
                };
                assert_eq!(got, expect);
            }
        }
    }

    #[test]
    fn pairing_evaluates_at_y() {
        // <e^{yt} | x^2> = y^2 with y = 3
        let f = Series::exp_ct(&Scalar::from_int(K, 3), 4).unwrap();
        assert_eq!(
            pairing(&f, &Poly::monomial(K, 2)).unwrap(),
            Scalar::from_int(K, 9)
        );
    }

    #[test]
    fn pairing_bernoulli_constant() {
        // <t/(e^t-1) | x^2> = 1/6
        let op = Series::t(K, 8).div(&exp_minus_one(8)).unwrap();
        assert_eq!(
            pairing(&op, &Poly::monomial(K, 2)).unwrap(),
            Scalar::from_rational(K, rat(1, 6))
        );
    }

    #[test]
    fn sheffer_pair_construction_guards() {
        assert!(ShefferPair::new(Series::exp_t(K, 4), Series::t(K, 4)).is_ok());
        assert!(ShefferPair::new(Series::t(K, 4), Series::t(K, 4)).is_err());
        assert!(ShefferPair::new(Series::exp_t(K, 4), Series::exp_t(K, 4)).is_err());
    }

    #[test]
    fn trivial_pair_gives_monomials() {
        let seq = associated_sequence(&Series::t(K, 8), 6).unwrap();
        for n in 0..=6 {
            assert_eq!(*seq.poly(n), Poly::monomial(K, n));
        }
    }

    #[test]
    fn mittag_leffler_first_members() {
        // associated to (e^t-1)/(e^t+1): M_1 = 2x, M_2 = 4x^2
        let seq = associated_sequence(&mittag_f(10), 3).unwrap();
        assert_eq!(*seq.poly(0), Poly::one(K));
        assert_eq!(
            *seq.poly(1),
            Poly::x(K).mul_rat(&rat(2, 1))
        );
        assert_eq!(
            *seq.poly(2),
            Poly::monomial(K, 2).mul_rat(&rat(4, 1))
        );
    }

    #[test]
    fn lambda_associated_degree_two() {
        // associated to (1-lambda)t/(e^t-lambda): S_2 = x^2 + 2x/(1-lambda)
        let seq = associated_sequence(&s_lambda_f(8), 2).unwrap();
        let lam = Scalar::lambda();
        let one = Scalar::one(L);
        let two_over = Scalar::from_int(L, 2).div(&one.sub(&lam).unwrap()).unwrap();
        let expect = Poly::from_coeffs(L, vec![Scalar::zero(L), two_over, Scalar::one(L)]).unwrap();
        assert_eq!(*seq.poly(2), expect);
    }

    #[test]
    fn t_star_first_member() {
        // associated to 2t/(1+t^2): T*_1 = x/2
        let two_t = Series::t(K, 8).scalar_mul(&Scalar::from_int(K, 2)).unwrap();
        let denom = Series::one(K, 8).add(&Series::t_pow(K, 2, 8)).unwrap();
        let f = two_t.div(&denom).unwrap();
        let seq = associated_sequence(&f, 1).unwrap();
        assert_eq!(*seq.poly(1), Poly::x(K).mul_rat(&rat(1, 2)));
    }

    #[test]
    fn duality_for_trivial_and_perturbed() {
        let pair = ShefferPair::associated(Series::t(K, 8)).unwrap();
        let seq = sheffer_sequence(&pair, 5).unwrap();
        assert!(verify_duality(&pair, &seq).unwrap());
        // perturb: {x^n + 1} breaks <1 | S_1> = 0 at (n, k) = (1, 0)
        let mut polys: Vec<Poly> = seq.polys().to_vec();
        polys[1] = polys[1].add(&Poly::one(K)).unwrap();
        let bad = PolySequence::new(polys, pair.clone()).unwrap();
        let fail = verify_duality_report(&pair, &bad).unwrap().unwrap();
        assert_eq!((fail.n, fail.k), (1, 0));
        assert_eq!(fail.got, Scalar::one(K));
    }

    #[test]
    fn transfer_identity_when_g_equals_f() {
        let f = mittag_f(12);
        let seq = associated_sequence(&f, 4).unwrap();
        for n in 0..=4 {
            let q = transfer(&seq, &f, &f, n).unwrap();
            assert_eq!(q, *seq.poly(n));
        }
    }

    #[test]
    fn transfer_reproduces_lambda_family() {
        // from x^n to the sequence of (1-lambda)t/(e^t-lambda) at n = 2
        let xseq = associated_sequence(&Series::t(L, 10), 4).unwrap();
        let g = s_lambda_f(8);
        let q2 = transfer(&xseq, &Series::t(L, 9), &g, 2).unwrap();
        let direct = associated_sequence(&g, 2).unwrap();
        assert_eq!(q2, *direct.poly(2));
    }

    #[test]
    fn transfer_to_half_exp_pair() {
        // f = t, g = t/(e^t+1): q_1 = 2x
        let g = Series::t(K, 10).div(&exp_plus_one(10)).unwrap();
        let xseq = associated_sequence(&Series::t(K, 10), 3).unwrap();
        let q1 = transfer(&xseq, &Series::t(K, 9), &g, 1).unwrap();
        assert_eq!(q1, Poly::x(K).mul_rat(&rat(2, 1)));
    }

    #[test]
    fn pincherle_examples() {
        assert_eq!(
            pincherle(&Series::exp_t(K, 6)).unwrap(),
            Series::exp_t(K, 5)
        );
        // (t^2)' = 2t
        let d = pincherle(&Series::t_pow(K, 2, 6)).unwrap();
        assert_eq!(
            d,
            Series::t(K, 5).scalar_mul(&Scalar::from_int(K, 2)).unwrap()
        );
    }

    #[test]
    fn pincherle_commutator_on_cubes() {
        assert!(verify_pincherle(&Series::exp_t(K, 8), &Poly::monomial(K, 3)).unwrap());
        // (e^t - lambda)/(1 - lambda)
        let one = Scalar::one(L);
        let denom = one.sub(&Scalar::lambda()).unwrap();
        let g = Series::exp_t(L, 8)
            .sub(&Series::constant(Scalar::lambda(), 8))
            .unwrap()
            .scalar_mul(&denom.inv().unwrap())
            .unwrap();
        assert!(verify_pincherle(&g, &Poly::monomial(L, 3)).unwrap());
    }

    #[test]
    fn functional_expansion_reconstructs() {
        let p = Poly::from_coeffs(
            K,
            vec![
                Scalar::zero(K),
                Scalar::from_int(K, -1),
                Scalar::zero(K),
                Scalar::one(K),
            ],
        )
        .unwrap();
        assert_eq!(expand_by_functionals(&p).unwrap(), p);
    }

    #[test]
    fn multinomial_examples() {
        // <e^t e^t | x^2> = 4
        let fs = vec![Series::exp_t(K, 4), Series::exp_t(K, 4)];
        assert_eq!(
            multinomial_pairing(&fs, 2).unwrap(),
            Scalar::from_int(K, 4)
        );
        // <t | x> = 1
        assert_eq!(
            multinomial_pairing(&[Series::t(K, 3)], 1).unwrap(),
            Scalar::one(K)
        );
    }

    #[test]
    fn binomial_convolution_for_monomials() {
        let pair = ShefferPair::associated(Series::t(K, 12)).unwrap();
        for y in [rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 2)] {
            assert!(binomial_convolution_check(&pair, 5, &Scalar::from_rational(K, y)).unwrap());
        }
    }
}
