//! Named special polynomial families as constructors returning sequences or
//! number tables, each tied to its generating function.
//!
//! Families whose generating function is given directly as a series in t
//! (Daehee, Changhee, second-kind Daehee, and the arcsine-like T* family)
//! are built twice — once from the Sheffer pair and once from the printed
//! generating function — and the two routes must agree exactly; a mismatch
//! is an internal-consistency error, never silently accepted.

use num::BigInt;

use crate::coefficients::{
    big_binomial, big_factorial, FieldKind, Rational, Scalar,
};
use crate::error::{Error, Result};
use crate::polyop::{falling_factorial, Poly};
use crate::series::{working_precision, Series};
use crate::umbral::{self, PolySequence, ShefferPair};

/// Stable identifiers for the built-in families. Orders are integers,
/// positive or negative where the generating function permits; the Changhee
/// order must be nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    BernoulliOrder(i64),
    FrobeniusEulerOrder(i64),
    Daehee,
    Changhee(i64),
    MittagLeffler,
    MittagLefflerLambda,
    DaeheeSecondKind,
    AssocSThm1,
    AssocTStar,
    RemarkS44,
}

impl FamilyId {
    /// The stable CLI name (orders travel separately as flags).
    pub fn cli_name(&self) -> &'static str {
        match self {
            FamilyId::BernoulliOrder(_) => "bernoulli",
            FamilyId::FrobeniusEulerOrder(_) => "frobenius-euler",
            FamilyId::Daehee => "daehee",
            FamilyId::Changhee(_) => "changhee",
            FamilyId::MittagLeffler => "mittag-leffler",
            FamilyId::MittagLefflerLambda => "mittag-leffler-lambda",
            FamilyId::DaeheeSecondKind => "daehee2",
            FamilyId::AssocSThm1 => "assoc-s",
            FamilyId::AssocTStar => "assoc-t",
            FamilyId::RemarkS44 => "remark-s44",
        }
    }

    /// Resolves a CLI name plus order flags into a family id.
    pub fn from_cli(name: &str, order: Option<i64>, a: Option<i64>) -> Result<FamilyId> {
        match name {
            "bernoulli" => Ok(FamilyId::BernoulliOrder(order.unwrap_or(1))),
            "frobenius-euler" => Ok(FamilyId::FrobeniusEulerOrder(order.unwrap_or(1))),
            "daehee" => Ok(FamilyId::Daehee),
            "changhee" => Ok(FamilyId::Changhee(a.unwrap_or(1))),
            "mittag-leffler" => Ok(FamilyId::MittagLeffler),
            "mittag-leffler-lambda" => Ok(FamilyId::MittagLefflerLambda),
            "daehee2" => Ok(FamilyId::DaeheeSecondKind),
            "assoc-s" => Ok(FamilyId::AssocSThm1),
            "assoc-t" => Ok(FamilyId::AssocTStar),
            "remark-s44" => Ok(FamilyId::RemarkS44),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    pub fn all_cli_names() -> &'static [&'static str] {
        &[
            "bernoulli",
            "frobenius-euler",
            "daehee",
            "changhee",
            "mittag-leffler",
            "mittag-leffler-lambda",
            "daehee2",
            "assoc-s",
            "assoc-t",
            "remark-s44",
        ]
    }

    /// The coefficient field the sequence polynomials live in.
    pub fn kind(&self) -> FieldKind {
        match self {
            FamilyId::BernoulliOrder(_)
            | FamilyId::MittagLeffler
            | FamilyId::AssocTStar => FieldKind::Rational,
            _ => FieldKind::Lambda,
        }
    }
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyId::BernoulliOrder(a) => write!(f, "bernoulli(order={a})"),
            FamilyId::FrobeniusEulerOrder(a) => write!(f, "frobenius-euler(order={a})"),
            FamilyId::Changhee(a) => write!(f, "changhee(a={a})"),
            other => write!(f, "{}", other.cli_name()),
        }
    }
}

// --- base series builders ----------------------------------------------------

pub mod builders {
    use super::*;

    pub fn one_minus_lambda() -> Scalar {
        Scalar::one(FieldKind::Lambda)
            .sub(&Scalar::lambda())
            .expect("same kind")
    }

    /// e^t - 1 over the rationals.
    pub fn exp_minus_one(prec: usize) -> Series {
        let kind = FieldKind::Rational;
        let mut coeffs = Series::exp_t(kind, prec).coeffs().to_vec();
        coeffs[0] = Scalar::zero(kind);
        Series::from_exp_coeffs(kind, coeffs).expect("nonempty")
    }

    /// e^t + 1 over the rationals.
    pub fn exp_plus_one(prec: usize) -> Series {
        let kind = FieldKind::Rational;
        let mut coeffs = Series::exp_t(kind, prec).coeffs().to_vec();
        coeffs[0] = Scalar::from_int(kind, 2);
        Series::from_exp_coeffs(kind, coeffs).expect("nonempty")
    }

    /// e^t - lambda in Q(lambda).
    pub fn exp_minus_lambda(prec: usize) -> Series {
        Series::exp_t(FieldKind::Lambda, prec)
            .sub(&Series::constant(Scalar::lambda(), prec))
            .expect("same kind")
    }

    /// (e^t - 1)/(e^t + 1), the delta series of the Mittag-Leffler family.
    pub fn mittag_f(prec: usize) -> Series {
        exp_minus_one(prec + 1)
            .div(&exp_plus_one(prec + 1))
            .expect("order-1 by order-1")
    }

    /// (1 - lambda)/(e^t - lambda), the invertible prefactor shared by the
    /// lambda families.
    pub fn daehee_g(prec: usize) -> Series {
        Series::constant(one_minus_lambda(), prec)
            .div(&exp_minus_lambda(prec))
            .expect("invertible denominator")
    }

    /// ((e^t - lambda)/(1 - lambda))^alpha; alpha may be negative.
    pub fn fe_ratio_pow(alpha: i64, prec: usize) -> Series {
        exp_minus_lambda(prec)
            .scalar_mul(&one_minus_lambda().inv().expect("nonzero"))
            .expect("same kind")
            .pow_int(alpha)
            .expect("invertible base")
    }

    /// ((e^t - 1)/t)^alpha over the rationals; alpha may be negative.
    pub fn bernoulli_g(alpha: i64, prec: usize) -> Series {
        exp_minus_one(prec + 1)
            .div(&Series::t(FieldKind::Rational, prec + 1))
            .expect("order match")
            .pow_int(alpha)
            .expect("invertible base")
    }

    /// (1 - lambda) t / (e^t - lambda): the delta series of the
    /// lambda-deformed associated family (also the f of the remark pair).
    pub fn s_lambda_f(prec: usize) -> Series {
        Series::t(FieldKind::Lambda, prec)
            .scalar_mul(&one_minus_lambda())
            .expect("same kind")
            .div(&exp_minus_lambda(prec))
            .expect("invertible denominator")
    }

    /// (e^t - 1)/(e^t - lambda): the delta series of the lambda-analogue
    /// Mittag-Leffler family.
    pub fn mittag_lambda_f(prec: usize) -> Series {
        exp_minus_one(prec)
            .promoted()
            .div(&exp_minus_lambda(prec))
            .expect("invertible denominator")
    }

    /// 2t/(1 + t^2), the delta series of the T* family.
    pub fn t_star_f(prec: usize) -> Series {
        let kind = FieldKind::Rational;
        let num = Series::t(kind, prec)
            .scalar_mul(&Scalar::from_int(kind, 2))
            .expect("same kind");
        let den = Series::one(kind, prec)
            .add(&Series::t_pow(kind, 2, prec))
            .expect("same kind");
        num.div(&den).expect("invertible denominator")
    }

    /// (1 - sqrt(1 - t^2))/t, the compositional inverse of 2t/(1+t^2),
    /// built through the series square root. Result precision is prec - 1.
    pub fn t_star_fbar(prec: usize) -> Series {
        let kind = FieldKind::Rational;
        let one_minus_t2 = Series::one(kind, prec)
            .sub(&Series::t_pow(kind, 2, prec))
            .expect("same kind");
        let root = one_minus_t2.sqrt().expect("unit constant term");
        let num = Series::one(kind, prec).sub(&root).expect("same kind");
        num.div(&Series::t(kind, prec)).expect("order >= 1")
    }

    /// (1 + t)/(1 - t) over the rationals.
    pub fn ratio_one_plus_t(prec: usize) -> Series {
        let kind = FieldKind::Rational;
        let num = Series::from_ordinary_coeffs(
            kind,
            vec![Scalar::one(kind), Scalar::one(kind)],
        )
        .expect("nonempty")
        .truncate(prec);
        let mut num_c = num.coeffs().to_vec();
        num_c.resize(prec, Scalar::zero(kind));
        let num = Series::from_exp_coeffs(kind, num_c).expect("nonempty");
        let den = one_minus_t(kind, prec);
        num.div(&den).expect("invertible denominator")
    }

    /// 1 - t in the requested field.
    pub fn one_minus_t(kind: FieldKind, prec: usize) -> Series {
        let mut coeffs = vec![Scalar::zero(kind); prec.max(2)];
        coeffs[0] = Scalar::one(kind);
        coeffs[1] = Scalar::from_int(kind, -1);
        Series::from_exp_coeffs(kind, coeffs.into_iter().take(prec.max(2)).collect())
            .expect("nonempty")
            .truncate(prec)
    }

    /// The printed Daehee prefactor ((1-lambda) + t(1+lambda)) /
    /// ((1-lambda)(1-t)), taken verbatim; its consistency with the Sheffer
    /// pair is a verified property of the family constructor.
    pub fn daehee_gf_prefactor(prec: usize) -> Series {
        let kind = FieldKind::Lambda;
        let one = Scalar::one(kind);
        let lam = Scalar::lambda();
        let num = Series::from_ordinary_coeffs(
            kind,
            vec![
                one.sub(&lam).expect("kind"),
                one.add(&lam).expect("kind"),
            ],
        )
        .expect("nonempty");
        let mut num_c = num.coeffs().to_vec();
        num_c.resize(prec, Scalar::zero(kind));
        let num = Series::from_exp_coeffs(kind, num_c).expect("nonempty");
        let den = one_minus_t(kind, prec)
            .scalar_mul(&one_minus_lambda())
            .expect("kind");
        num.div(&den).expect("invertible denominator")
    }

    /// ((t + 1 - lambda)/(1 - lambda))^a, the Changhee prefactor.
    pub fn changhee_gf_prefactor(a: i64, prec: usize) -> Series {
        let kind = FieldKind::Lambda;
        let inv = one_minus_lambda().inv().expect("nonzero");
        let base = Series::from_ordinary_coeffs(kind, vec![Scalar::one(kind), inv])
            .expect("nonempty");
        let mut c = base.coeffs().to_vec();
        c.resize(prec, Scalar::zero(kind));
        Series::from_exp_coeffs(kind, c)
            .expect("nonempty")
            .pow_int(a)
            .expect("invertible base")
    }

    /// (1 - lambda t)/(1 - t) in Q(lambda).
    pub fn daehee2_gf_ratio(prec: usize) -> Series {
        let kind = FieldKind::Lambda;
        let num = {
            let mut coeffs = vec![Scalar::zero(kind); prec.max(2)];
            coeffs[0] = Scalar::one(kind);
            coeffs[1] = Scalar::lambda().neg();
            Series::from_exp_coeffs(kind, coeffs).expect("nonempty").truncate(prec)
        };
        num.div(&one_minus_t(kind, prec)).expect("invertible denominator")
    }
}

/// The Sheffer pair of a family, with all series built at `precision`.
pub fn sheffer_pair(id: FamilyId, precision: usize) -> Result<ShefferPair> {
    use builders::*;
    let prec = precision.max(3);
    match id {
        FamilyId::BernoulliOrder(alpha) => ShefferPair::new(
            bernoulli_g(alpha, prec),
            Series::t(FieldKind::Rational, prec),
        ),
        FamilyId::FrobeniusEulerOrder(alpha) => ShefferPair::new(
            fe_ratio_pow(alpha, prec),
            Series::t(FieldKind::Rational, prec),
        ),
        FamilyId::Daehee => ShefferPair::new(daehee_g(prec), mittag_f(prec)),
        FamilyId::Changhee(a) => {
            if a == 0 {
                return Err(Error::ChangheeOrderZero);
            }
            ShefferPair::new(fe_ratio_pow(-a, prec), exp_minus_one(prec))
        }
        FamilyId::MittagLeffler => ShefferPair::associated(mittag_f(prec)),
        FamilyId::MittagLefflerLambda => ShefferPair::associated(mittag_lambda_f(prec)),
        FamilyId::DaeheeSecondKind => {
            ShefferPair::new(daehee_g(prec), mittag_lambda_f(prec))
        }
        FamilyId::AssocSThm1 => ShefferPair::associated(s_lambda_f(prec)),
        FamilyId::AssocTStar => ShefferPair::associated(t_star_f(prec)),
        FamilyId::RemarkS44 => ShefferPair::new(daehee_g(prec), s_lambda_f(prec)),
    }
}

/// The generating-function route for families whose generating function is
/// printed directly as a series in t; None where only the pair form exists.
fn gf_route(id: FamilyId, n_max: usize, prec: usize) -> Result<Option<Vec<Poly>>> {
    use builders::*;
    let polys = match id {
        FamilyId::Daehee => {
            let h = ratio_one_plus_t(prec).log()?;
            let e = umbral::exp_poly_series(&h, n_max)?;
            let e: Vec<Poly> = e.iter().map(|p| p.promoted()).collect();
            let prefactor = daehee_gf_prefactor(prec);
            Some(umbral::convolve_scalar_with_polys(&prefactor, &e)?)
        }
        FamilyId::Changhee(a) => {
            if a == 0 {
                return Err(Error::ChangheeOrderZero);
            }
            let kind = FieldKind::Rational;
            let mut one_plus_t = vec![Scalar::zero(kind); prec];
            one_plus_t[0] = Scalar::one(kind);
            one_plus_t[1] = Scalar::one(kind);
            let h = Series::from_exp_coeffs(kind, one_plus_t)?.log()?;
            let e = umbral::exp_poly_series(&h, n_max)?;
            let e: Vec<Poly> = e.iter().map(|p| p.promoted()).collect();
            let prefactor = changhee_gf_prefactor(a, prec);
            Some(umbral::convolve_scalar_with_polys(&prefactor, &e)?)
        }
        FamilyId::DaeheeSecondKind => {
            let h = daehee2_gf_ratio(prec).log()?;
            let e = umbral::exp_poly_series(&h, n_max)?;
            let prefactor = one_minus_t(FieldKind::Lambda, prec).inverse()?;
            Some(umbral::convolve_scalar_with_polys(&prefactor, &e)?)
        }
        FamilyId::AssocTStar => {
            let h = t_star_fbar(prec);
            Some(umbral::exp_poly_series(&h, n_max)?)
        }
        _ => None,
    };
    Ok(polys)
}

/// Builds the family sequence S_0 .. S_{n_max} at the default working
/// precision.
pub fn family_sequence(id: FamilyId, n_max: usize) -> Result<PolySequence> {
    family_sequence_prec(id, n_max, working_precision(n_max))
}

/// As [`family_sequence`] with an explicit internal series precision.
pub fn family_sequence_prec(id: FamilyId, n_max: usize, precision: usize) -> Result<PolySequence> {
    let pair = sheffer_pair(id, precision)?;
    let seq = umbral::sheffer_sequence(&pair, n_max)?;
    if let Some(gf) = gf_route(id, n_max, precision)? {
        for (n, (a, b)) in seq.polys().iter().zip(gf.iter()).enumerate() {
            if a != b {
                return Err(Error::InternalConsistency(format!(
                    "family {id}: generating-function route disagrees with the Sheffer-pair route at degree {n}"
                )));
            }
        }
    }
    Ok(seq)
}

/// The family's number sequence: constant terms of the polynomials.
pub fn family_numbers(id: FamilyId, n_max: usize) -> Result<Vec<Scalar>> {
    let seq = family_sequence(id, n_max)?;
    Ok(seq.polys().iter().map(|p| p.coeff(0)).collect())
}

/// Single Frobenius-Euler polynomial H_m^(alpha)(x | lambda) computed by
/// operator action ((1-lambda)/(e^t-lambda))^alpha x^m; alpha may be negative.
pub fn frobenius_euler_poly(alpha: i64, m: usize) -> Result<Poly> {
    let op = builders::fe_ratio_pow(-alpha, m + 2);
    crate::polyop::apply_series(&op, &Poly::monomial(FieldKind::Lambda, m))
}

/// Single Bernoulli polynomial B_m^(alpha)(x) by operator action
/// (t/(e^t-1))^alpha x^m; alpha may be negative.
pub fn bernoulli_poly_order(alpha: i64, m: usize) -> Result<Poly> {
    let op = builders::bernoulli_g(-alpha, m + 2);
    crate::polyop::apply_series(&op, &Poly::monomial(FieldKind::Rational, m))
}

/// Bernoulli number B_m^(alpha) (the x = 0 value).
pub fn bernoulli_number_order(alpha: i64, m: usize) -> Result<Scalar> {
    Ok(bernoulli_poly_order(alpha, m)?.coeff(0))
}

/// The printed closed forms, built strictly as stated with no correction;
/// the identity registry compares them against the generating-function
/// routes. Formulas that come from the transfer derivation are degenerate at
/// n = 0 and return the conventional S_0 = 1 there.
pub fn closed_form(id: FamilyId, n: usize) -> Result<Poly> {
    match id {
        FamilyId::MittagLeffler => mittag_closed(n),
        FamilyId::AssocSThm1 => assoc_s_closed(n),
        FamilyId::Daehee => daehee_closed(n),
        FamilyId::AssocTStar => t_star_closed(n),
        FamilyId::BernoulliOrder(alpha) => appell_closed(FamilyId::BernoulliOrder(alpha), n),
        FamilyId::FrobeniusEulerOrder(alpha) => {
            appell_closed(FamilyId::FrobeniusEulerOrder(alpha), n)
        }
        other => Err(Error::ClosedFormUnavailable(other.to_string())),
    }
}

/// M_n(x) = sum_k C(n,k) (n-1)_{n-k} 2^k (x)_k.
fn mittag_closed(n: usize) -> Result<Poly> {
    let kind = FieldKind::Rational;
    let mut acc = Poly::zero(kind);
    for k in 0..=n {
        let coeff = Rational::from_integer(big_binomial(n, k))
            * Rational::from_integer(crate::coefficients::falling_number(n as i64 - 1, n - k))
            * Rational::from_integer(BigInt::from(2).pow(k as u32));
        if num::Zero::is_zero(&coeff) {
            continue;
        }
        acc = acc.add(&falling_factorial(kind, k).mul_rat(&coeff))?;
    }
    Ok(acc)
}

/// S_n(x|lambda) = x/(1-lambda)^n sum_l C(n,l) (-lambda)^{n-l} (x+l)^{n-1};
/// at n = 0 the conventional value 1.
fn assoc_s_closed(n: usize) -> Result<Poly> {
    let kind = FieldKind::Lambda;
    if n == 0 {
        return Ok(Poly::one(kind));
    }
    let lam = Scalar::lambda();
    let neg_lam = lam.neg();
    let mut acc = Poly::zero(kind);
    for l in 0..=n {
        let coeff = neg_lam
            .pow_i64((n - l) as i64)?
            .mul_int(&big_binomial(n, l));
        let shifted = Poly::monomial(kind, n - 1).shift(&Scalar::from_int(kind, l as i64))?;
        acc = acc.add(&shifted.scalar_mul(&coeff)?)?;
    }
    let scale = builders::one_minus_lambda().pow_i64(-(n as i64))?;
    acc.scalar_mul(&scale).map(|p| p.mul_by_x())
}

/// D_n(x|lambda) = 1/(1-lambda) sum_k C(n,k) (n-1)_{n-k} 2^k
/// { (x+1)_k - lambda (x)_k }.
fn daehee_closed(n: usize) -> Result<Poly> {
    let kind = FieldKind::Lambda;
    let one = Scalar::one(kind);
    let lam = Scalar::lambda();
    let mut acc = Poly::zero(kind);
    for k in 0..=n {
        let coeff = Rational::from_integer(big_binomial(n, k))
            * Rational::from_integer(crate::coefficients::falling_number(n as i64 - 1, n - k))
            * Rational::from_integer(BigInt::from(2).pow(k as u32));
        if num::Zero::is_zero(&coeff) {
            continue;
        }
        let fk = falling_factorial(kind, k);
        let shifted = fk.shift(&one)?;
        let brace = shifted.sub(&fk.scalar_mul(&lam)?)?;
        acc = acc.add(&brace.mul_rat(&coeff))?;
    }
    acc.scalar_mul(&builders::one_minus_lambda().inv()?)
}

/// T*_n(x) = (1/2)^n sum_{l=0}^{floor((n-1)/2)} C(n,l) (n-1)!/(n-2l-1)!
/// x^{n-2l}; at n = 0 the conventional value 1.
fn t_star_closed(n: usize) -> Result<Poly> {
    let kind = FieldKind::Rational;
    if n == 0 {
        return Ok(Poly::one(kind));
    }
    let mut acc = Poly::zero(kind);
    for l in 0..=(n - 1) / 2 {
        let coeff = Rational::from_integer(big_binomial(n, l))
            * Rational::new(big_factorial(n - 1), big_factorial(n - 2 * l - 1));
        acc = acc.add(&Poly::monomial(kind, n - 2 * l).mul_rat(&coeff))?;
    }
    Ok(acc.mul_rat(&Rational::new(BigInt::from(1), BigInt::from(2).pow(n as u32))))
}

/// The Appell re-expansion S_n(x) = sum_k C(n,k) S_{n-k}(0) x^k for the
/// order-alpha Bernoulli and Frobenius-Euler families.
fn appell_closed(id: FamilyId, n: usize) -> Result<Poly> {
    let kind = id.kind();
    let numbers = family_numbers(id, n)?;
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        coeffs.push(numbers[n - k].mul_int(&big_binomial(n, k)));
    }
    Poly::from_coeffs(kind, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyop::apply_series;

    const K: FieldKind = FieldKind::Rational;
    const L: FieldKind = FieldKind::Lambda;

    fn inv_one_minus_lambda() -> Scalar {
        builders::one_minus_lambda().inv().unwrap()
    }

    fn lam_poly(coeffs: Vec<Scalar>) -> Poly {
        Poly::from_coeffs(L, coeffs).unwrap()
    }

    #[test]
    fn bernoulli_first_three() {
        let seq = family_sequence(FamilyId::BernoulliOrder(1), 2).unwrap();
        assert_eq!(*seq.poly(0), Poly::one(K));
        let b1 = Poly::from_coeffs(
            K,
            vec![Scalar::from_rational(K, rat(-1, 2)), Scalar::one(K)],
        )
        .unwrap();
        assert_eq!(*seq.poly(1), b1);
        let b2 = Poly::from_coeffs(
            K,
            vec![
                Scalar::from_rational(K, rat(1, 6)),
                Scalar::from_int(K, -1),
                Scalar::one(K),
            ],
        )
        .unwrap();
        assert_eq!(*seq.poly(2), b2);
    }

    #[test]
    fn bernoulli_numbers_table() {
        let numbers = family_numbers(FamilyId::BernoulliOrder(1), 4).unwrap();
        let expect = [rat(1, 1), rat(-1, 2), rat(1, 6), rat(0, 1), rat(-1, 30)];
        for (got, want) in numbers.iter().zip(expect.iter()) {
            assert_eq!(*got, Scalar::from_rational(K, want.clone()));
        }
    }

    #[test]
    fn frobenius_euler_degree_one() {
        // H_1(x|lambda) = x - 1/(1-lambda)
        let seq = family_sequence(FamilyId::FrobeniusEulerOrder(1), 1).unwrap();
        let expect = lam_poly(vec![inv_one_minus_lambda().neg(), Scalar::one(L)]);
        assert_eq!(*seq.poly(1), expect);
    }

    #[test]
    fn daehee_degree_one_and_two() {
        // D_1 = 2x + 2/(1-lambda); the constructor also cross-checks the
        // printed generating function against the Sheffer pair.
        let seq = family_sequence(FamilyId::Daehee, 2).unwrap();
        let two_over = Scalar::from_int(L, 2).mul(&inv_one_minus_lambda()).unwrap();
        assert_eq!(
            *seq.poly(1),
            lam_poly(vec![two_over.clone(), Scalar::from_int(L, 2)])
        );
        // D_2 = 4x^2 + 8x/(1-lambda) + 4/(1-lambda)
        let expect2 = lam_poly(vec![
            two_over.mul_int(&BigInt::from(2)),
            Scalar::from_int(L, 8).mul(&inv_one_minus_lambda()).unwrap(),
            Scalar::from_int(L, 4),
        ]);
        assert_eq!(*seq.poly(2), expect2);
    }

    #[test]
    fn daehee_second_kind_degree_one() {
        // D*_1 = (1-lambda) x + 1
        let seq = family_sequence(FamilyId::DaeheeSecondKind, 1).unwrap();
        let expect = lam_poly(vec![Scalar::one(L), builders::one_minus_lambda()]);
        assert_eq!(*seq.poly(1), expect);
    }

    #[test]
    fn changhee_degree_one_and_numbers() {
        for a in [1i64, 2, -1] {
            let seq = family_sequence(FamilyId::Changhee(a), 1).unwrap();
            let expect = lam_poly(vec![
                Scalar::from_int(L, a).mul(&inv_one_minus_lambda()).unwrap(),
                Scalar::one(L),
            ]);
            assert_eq!(*seq.poly(1), expect, "a={a}");
        }
        let numbers = family_numbers(FamilyId::Changhee(1), 1).unwrap();
        assert_eq!(numbers[0], Scalar::one(L));
        assert_eq!(numbers[1], inv_one_minus_lambda());
        assert_eq!(
            family_sequence(FamilyId::Changhee(0), 1),
            Err(Error::ChangheeOrderZero)
        );
    }

    #[test]
    fn mittag_leffler_numbers_are_delta_like() {
        let numbers = family_numbers(FamilyId::MittagLeffler, 5).unwrap();
        assert_eq!(numbers[0], Scalar::one(K));
        for n in 1..=5 {
            assert!(numbers[n].is_zero());
        }
    }

    #[test]
    fn mittag_closed_form_spots() {
        // n = 2 -> 4x^2
        assert_eq!(
            closed_form(FamilyId::MittagLeffler, 2).unwrap(),
            Poly::monomial(K, 2).mul_rat(&rat(4, 1))
        );
        // n = 3 -> 8x^3 + 4x
        let m3 = closed_form(FamilyId::MittagLeffler, 3).unwrap();
        let expect = Poly::from_coeffs(
            K,
            vec![
                Scalar::zero(K),
                Scalar::from_int(K, 4),
                Scalar::zero(K),
                Scalar::from_int(K, 8),
            ],
        )
        .unwrap();
        assert_eq!(m3, expect);
        // matches the sequence route
        let seq = family_sequence(FamilyId::MittagLeffler, 3).unwrap();
        assert_eq!(m3, *seq.poly(3));
    }

    #[test]
    fn assoc_s_closed_form_spot() {
        // n = 2 -> x^2 + 2x/(1-lambda), matching the sequence route
        let c2 = closed_form(FamilyId::AssocSThm1, 2).unwrap();
        let expect = lam_poly(vec![
            Scalar::zero(L),
            Scalar::from_int(L, 2).mul(&inv_one_minus_lambda()).unwrap(),
            Scalar::one(L),
        ]);
        assert_eq!(c2, expect);
        let seq = family_sequence(FamilyId::AssocSThm1, 2).unwrap();
        assert_eq!(c2, *seq.poly(2));
        assert_eq!(closed_form(FamilyId::AssocSThm1, 0).unwrap(), Poly::one(L));
    }

    #[test]
    fn t_star_closed_form_spots() {
        // n = 1 -> x/2
        assert_eq!(
            closed_form(FamilyId::AssocTStar, 1).unwrap(),
            Poly::x(K).mul_rat(&rat(1, 2))
        );
        // n = 3 -> x^3/8 + 3x/4, matching the sequence (and its gf route)
        let c3 = closed_form(FamilyId::AssocTStar, 3).unwrap();
        let seq = family_sequence(FamilyId::AssocTStar, 3).unwrap();
        assert_eq!(c3, *seq.poly(3));
    }

    #[test]
    fn remark_pair_degree_one() {
        // S_1 = x + 1/(1-lambda) for the remark pair
        let seq = family_sequence(FamilyId::RemarkS44, 1).unwrap();
        let expect = lam_poly(vec![inv_one_minus_lambda(), Scalar::one(L)]);
        assert_eq!(*seq.poly(1), expect);
    }

    #[test]
    fn mittag_lambda_degree_two() {
        // M*_2 = (1-lambda)^2 x^2 + (1-lambda^2) x
        let seq = family_sequence(FamilyId::MittagLefflerLambda, 2).unwrap();
        let one_minus = builders::one_minus_lambda();
        let lin = Scalar::one(L)
            .sub(&Scalar::lambda().mul(&Scalar::lambda()).unwrap())
            .unwrap();
        let expect = lam_poly(vec![
            Scalar::zero(L),
            lin,
            one_minus.mul(&one_minus).unwrap(),
        ]);
        assert_eq!(*seq.poly(2), expect);
    }

    #[test]
    fn appell_closed_forms_match_sequences() {
        for alpha in [1i64, 2, 3, -1] {
            let seq = family_sequence(FamilyId::BernoulliOrder(alpha), 5).unwrap();
            for n in 0..=5 {
                assert_eq!(
                    closed_form(FamilyId::BernoulliOrder(alpha), n).unwrap(),
                    *seq.poly(n),
                    "bernoulli alpha={alpha} n={n}"
                );
            }
            let seq = family_sequence(FamilyId::FrobeniusEulerOrder(alpha), 4).unwrap();
            for n in 0..=4 {
                assert_eq!(
                    closed_form(FamilyId::FrobeniusEulerOrder(alpha), n).unwrap(),
                    *seq.poly(n),
                    "frobenius-euler alpha={alpha} n={n}"
                );
            }
        }
    }

    #[test]
    fn closed_form_unavailable_families() {
        assert!(matches!(
            closed_form(FamilyId::DaeheeSecondKind, 2),
            Err(Error::ClosedFormUnavailable(_))
        ));
    }

    #[test]
    fn mittag_from_daehee_by_operator() {
        // (1-lambda)/(e^t-lambda) D_n = M_n
        let d = family_sequence(FamilyId::Daehee, 6).unwrap();
        let m = family_sequence(FamilyId::MittagLeffler, 6).unwrap();
        let op = builders::daehee_g(10);
        for n in 0..=6 {
            let got = apply_series(&op, d.poly(n)).unwrap();
            assert_eq!(got, m.poly(n).promoted(), "n={n}");
        }
    }

    #[test]
    fn changhee_reduces_to_falling_factorials() {
        // ((1-lambda)/(e^t-lambda))^a C_n^(a) is the associated sequence of
        // e^t - 1, i.e. the falling factorials.
        for a in [1i64, 2] {
            let c = family_sequence(FamilyId::Changhee(a), 5).unwrap();
            let op = builders::fe_ratio_pow(-a, 9);
            for n in 0..=5 {
                let got = apply_series(&op, c.poly(n)).unwrap();
                assert_eq!(got, falling_factorial(K, n).promoted(), "a={a} n={n}");
            }
        }
    }

    #[test]
    fn frobenius_euler_poly_helper_matches_family() {
        let seq = family_sequence(FamilyId::FrobeniusEulerOrder(2), 3).unwrap();
        for m in 0..=3 {
            assert_eq!(frobenius_euler_poly(2, m).unwrap(), *seq.poly(m));
        }
        // negative order: H_1^(-2) = x + 2/(1-lambda)
        let h = frobenius_euler_poly(-2, 1).unwrap();
        let expect = lam_poly(vec![
            Scalar::from_int(L, 2).mul(&inv_one_minus_lambda()).unwrap(),
            Scalar::one(L),
        ]);
        assert_eq!(h, expect);
    }

    #[test]
    fn bernoulli_poly_helper_matches_family() {
        let seq = family_sequence(FamilyId::BernoulliOrder(3), 4).unwrap();
        for m in 0..=4 {
            assert_eq!(bernoulli_poly_order(3, m).unwrap(), *seq.poly(m));
        }
        assert_eq!(
            bernoulli_number_order(2, 1).unwrap(),
            Scalar::from_rational(K, rat(-1, 1))
        );
    }

    #[test]
    fn family_cli_names_round_trip() {
        for name in FamilyId::all_cli_names() {
            let id = FamilyId::from_cli(name, Some(2), Some(2)).unwrap();
            assert_eq!(id.cli_name(), *name);
        }
        assert!(FamilyId::from_cli("nope", None, None).is_err());
    }
}
