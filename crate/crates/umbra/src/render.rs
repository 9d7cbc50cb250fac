//! Plain-text and LaTeX rendering.
//!
//! Plain polynomial syntax: descending powers, explicit `*`, lambda spelled
//! out, rationals as `p/q` — grep-able and locale-free, e.g.
//! `2*x + 2/(1-lambda)`. Rational functions display with the sign arranged
//! so the denominator's lowest nonzero coefficient is positive, which keeps
//! the familiar `1-lambda` orientation instead of the canonical monic
//! `lambda-1`.

use num::{BigInt, One, Signed, Zero};

use crate::coefficients::{LambdaPoly, LambdaRatFunc, Rational, Scalar};
use crate::polyop::Poly;
use crate::series::Series;

fn rational_plain(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_latex(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else if r.numer().is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Ascending, tight rendering of a lambda polynomial: `1-lambda`,
/// `2+3*lambda^2`.
fn lambda_poly_plain(p: &LambdaPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign = c.is_negative();
        if out.is_empty() {
            if sign {
                out.push('-');
            }
        } else {
            out.push(if sign { '-' } else { '+' });
        }
        let var = match k {
            0 => String::new(),
            1 => "lambda".to_string(),
            _ => format!("lambda^{k}"),
        };
        if k == 0 {
            out.push_str(&rational_plain(&mag));
        } else if mag.is_one() {
            out.push_str(&var);
        } else {
            out.push_str(&rational_plain(&mag));
            out.push('*');
            out.push_str(&var);
        }
    }
    out
}

fn lambda_poly_latex(p: &LambdaPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign = c.is_negative();
        if out.is_empty() {
            if sign {
                out.push('-');
            }
        } else {
            out.push_str(if sign { " - " } else { " + " });
        }
        let var = match k {
            0 => String::new(),
            1 => "\\lambda".to_string(),
            _ => format!("\\lambda^{{{k}}}"),
        };
        if k == 0 {
            out.push_str(&rational_latex(&mag));
        } else if mag.is_one() {
            out.push_str(&var);
        } else {
            out.push_str(&rational_latex(&mag));
            out.push(' ');
            out.push_str(&var);
        }
    }
    out
}

/// Display orientation for a rational function: flip both signs when the
/// denominator's lowest nonzero coefficient is negative, so `(-2)/(lambda-1)`
/// prints as `2/(1-lambda)`.
fn display_parts(rf: &LambdaRatFunc) -> (LambdaPoly, LambdaPoly) {
    let flip = rf
        .den()
        .coeffs()
        .iter()
        .find(|c| !c.is_zero())
        .map_or(false, |c| c.is_negative());
    if flip {
        (rf.num().neg(), rf.den().neg())
    } else {
        (rf.num().clone(), rf.den().clone())
    }
}

/// A scalar split for term assembly: (leading sign, magnitude string, whether
/// the magnitude needs parentheses when used as a coefficient).
fn scalar_sign_split(s: &Scalar) -> (bool, String, bool) {
    match s {
        Scalar::Rat(r) => (r.is_negative(), rational_plain(&r.abs()), false),
        Scalar::Lam(rf) => {
            let (num, den) = display_parts(rf);
            let den_is_one = den == LambdaPoly::one();
            let num_terms = num.coeffs().iter().filter(|c| !c.is_zero()).count();
            if den_is_one {
                let lowest_negative = num
                    .coeffs()
                    .iter()
                    .find(|c| !c.is_zero())
                    .map_or(false, |c| c.is_negative());
                let shown = if lowest_negative { num.neg() } else { num };
                (
                    lowest_negative,
                    lambda_poly_plain(&shown),
                    num_terms > 1,
                )
            } else {
                let raw = lambda_poly_plain(&num);
                let num_str = if num_terms > 1 || raw.contains('/') {
                    format!("({raw})")
                } else {
                    raw
                };
                (
                    false,
                    format!("{num_str}/({})", lambda_poly_plain(&den)),
                    false,
                )
            }
        }
    }
}

/// The full plain atom, sign included: `-1/2`, `2/(1-lambda)`, `1-lambda`.
pub fn scalar_plain(s: &Scalar) -> String {
    let (neg, mag, _) = scalar_sign_split(s);
    if neg {
        format!("-{mag}")
    } else {
        mag
    }
}

pub fn scalar_latex(s: &Scalar) -> String {
    match s {
        Scalar::Rat(r) => rational_latex(r),
        Scalar::Lam(rf) => {
            let (num, den) = display_parts(rf);
            if den == LambdaPoly::one() {
                lambda_poly_latex(&num)
            } else {
                format!(
                    "\\frac{{{}}}{{{}}}",
                    lambda_poly_latex(&num),
                    lambda_poly_latex(&den)
                )
            }
        }
    }
}

/// Descending-power plain rendering: `x^2 - x + 1/6`, `2*x + 2/(1-lambda)`.
pub fn poly_plain(p: &Poly) -> String {
    let deg = match p.degree() {
        None => return "0".to_string(),
        Some(d) => d,
    };
    let mut out = String::new();
    for k in (0..=deg).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let (neg, mag, needs_parens) = scalar_sign_split(&c);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let var = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        if k == 0 {
            if needs_parens && neg {
                out.push_str(&format!("({mag})"));
            } else {
                out.push_str(&mag);
            }
        } else if mag == "1" {
            out.push_str(&var);
        } else {
            if needs_parens {
                out.push_str(&format!("({mag})"));
            } else {
                out.push_str(&mag);
            }
            out.push('*');
            out.push_str(&var);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

pub fn poly_latex(p: &Poly) -> String {
    let deg = match p.degree() {
        None => return "0".to_string(),
        Some(d) => d,
    };
    let mut out = String::new();
    for k in (0..=deg).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let s = scalar_latex(&c);
        let (body, neg) = match s.strip_prefix('-') {
            Some(rest) => (rest.to_string(), true),
            None => (s, false),
        };
        let composite = body.contains('+') || body.contains(" - ");
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let var = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{{{k}}}"),
        };
        if k == 0 {
            if composite && neg {
                out.push_str(&format!("\\left({body}\\right)"));
            } else {
                out.push_str(&body);
            }
        } else if body == "1" {
            out.push_str(&var);
        } else {
            if composite {
                out.push_str(&format!("\\left({body}\\right)"));
            } else {
                out.push_str(&body);
            }
            out.push(' ');
            out.push_str(&var);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// The series text form `a0 + a1/1! t + a2/2! t^2 + ...`, one term per known
/// coefficient. Non-integer atoms are parenthesized so the `/k!` stays
/// unambiguous.
pub fn series_plain(s: &Series) -> String {
    let mut out = String::new();
    for k in 0..s.precision() {
        let atom = scalar_plain(s.coeff(k));
        let simple = atom.parse::<BigInt>().is_ok();
        let wrapped = if simple { atom } else { format!("({atom})") };
        if k > 0 {
            out.push_str(" + ");
        }
        match k {
            0 => out.push_str(&wrapped),
            1 => out.push_str(&format!("{wrapped}/1! t")),
            _ => out.push_str(&format!("{wrapped}/{k}! t^{k}")),
        }
    }
    out
}

pub fn series_latex(s: &Series) -> String {
    let mut out = String::new();
    for k in 0..s.precision() {
        let atom = scalar_latex(s.coeff(k));
        let composite = atom.contains('+') || atom.contains(" - ") || atom.starts_with('-');
        let wrapped = if composite {
            format!("\\left({atom}\\right)")
        } else {
            atom
        };
        if k > 0 {
            out.push_str(" + ");
        }
        match k {
            0 => out.push_str(&wrapped),
            _ => out.push_str(&format!("{wrapped} \\frac{{t^{{{k}}}}}{{{k}!}}")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{rat, FieldKind};

    const K: FieldKind = FieldKind::Rational;
    const L: FieldKind = FieldKind::Lambda;

    fn inv_one_minus_lambda() -> Scalar {
        Scalar::one(L)
            .sub(&Scalar::lambda())
            .unwrap()
            .inv()
            .unwrap()
    }

    #[test]
    fn scalar_displays_one_minus_lambda_orientation() {
        // canonical (-2)/(lambda-1) prints as 2/(1-lambda)
        let two_over = Scalar::from_int(L, 2).mul(&inv_one_minus_lambda()).unwrap();
        assert_eq!(scalar_plain(&two_over), "2/(1-lambda)");
        assert_eq!(scalar_plain(&two_over.neg()), "-2/(1-lambda)");
        assert_eq!(scalar_plain(&Scalar::from_rational(K, rat(-1, 2))), "-1/2");
        assert_eq!(scalar_plain(&Scalar::lambda().neg()), "-lambda");
    }

    #[test]
    fn daehee_degree_one_plain() {
        let two_over = Scalar::from_int(L, 2).mul(&inv_one_minus_lambda()).unwrap();
        let p = Poly::from_coeffs(L, vec![two_over, Scalar::from_int(L, 2)]).unwrap();
        assert_eq!(poly_plain(&p), "2*x + 2/(1-lambda)");
    }

    #[test]
    fn bernoulli_poly_plain() {
        let p = Poly::from_coeffs(
            K,
            vec![
                Scalar::from_rational(K, rat(1, 6)),
                Scalar::from_int(K, -1),
                Scalar::one(K),
            ],
        )
        .unwrap();
        assert_eq!(poly_plain(&p), "x^2 - x + 1/6");
    }

    #[test]
    fn multi_term_coefficient_gets_parentheses() {
        // (1-lambda)*x + 1
        let one_minus = Scalar::one(L).sub(&Scalar::lambda()).unwrap();
        let p = Poly::from_coeffs(L, vec![Scalar::one(L), one_minus]).unwrap();
        assert_eq!(poly_plain(&p), "(1-lambda)*x + 1");
    }

    #[test]
    fn zero_and_constant() {
        assert_eq!(poly_plain(&Poly::zero(K)), "0");
        assert_eq!(poly_plain(&Poly::one(K)), "1");
        assert_eq!(poly_plain(&Poly::monomial(K, 2)), "x^2");
    }

    #[test]
    fn series_text_form() {
        let s = Series::from_exp_coeffs(
            K,
            vec![
                Scalar::one(K),
                Scalar::from_rational(K, rat(-1, 2)),
                Scalar::from_rational(K, rat(1, 6)),
            ],
        )
        .unwrap();
        assert_eq!(series_plain(&s), "1 + (-1/2)/1! t + (1/6)/2! t^2");
    }

    #[test]
    fn latex_forms() {
        let two_over = Scalar::from_int(L, 2).mul(&inv_one_minus_lambda()).unwrap();
        let p = Poly::from_coeffs(L, vec![two_over, Scalar::from_int(L, 2)]).unwrap();
        assert_eq!(poly_latex(&p), "2 x + \\frac{2}{1 - \\lambda}");
    }
}
