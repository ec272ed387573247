//! Truncated power series of algebra elements.
//!
//! Analytic functions of `P₀/κ` are expanded at construction time; the
//! truncation policy bounds the mass parameter and therefore the series.

use crate::element::{Element, TensorElement};
use crate::error::{Result, TwistError};
use crate::presentation::Presentation;
use crate::scalar::{inv_factorial, Coeff, GaussRat, Mono, Param, Q};

/// Guard against policies that never cut a series off.
pub const MAX_SERIES_TERMS: u32 = 64;

/// `Σ_{n ≥ start} a(n) · p^{n+shift} · xⁿ`, with the upper limit set by the
/// policy's bound on `p`.
pub fn param_series(
    alg: &Presentation,
    x: &Element,
    p: Param,
    shift: i8,
    start: u32,
    a: impl Fn(u32) -> GaussRat,
) -> Result<Element> {
    let max = alg.policy().max(p).ok_or_else(|| {
        TwistError::NonTerminating(format!("no truncation order set for {}", p.name()))
    })?;
    let top = max as i32 - shift as i32;
    let mut out = Element::zero();
    let mut pow = alg.power(x, start);
    for n in start..=top.max(0) as u32 {
        if (n as i32) > top {
            break;
        }
        let coef = a(n);
        let e = n as i32 + shift as i32;
        if !coef.is_zero() {
            if e < 0 {
                return Err(TwistError::PositiveMassPower(format!(
                    "series term {} carries {}^{}",
                    n,
                    p.name(),
                    e
                )));
            }
            let c = Coeff::monomial(coef, Mono::param(p, e as i8));
            out += pow.scale(&c, alg.policy());
        }
        pow = alg.multiply(&pow, x);
    }
    Ok(out)
}

/// `e^{λ p x}`.
pub fn exp_param(alg: &Presentation, x: &Element, p: Param, lambda: Q) -> Result<Element> {
    param_series(alg, x, p, 0, 0, |n| GaussRat::real(qpow(lambda, n) * inv_factorial(n)))
}

/// `(e^{λ p x} − 1) / p`, e.g. `κ(e^{−P₀/κ} − 1)` for `λ = −1`, `p = κ⁻¹`.
pub fn expm1_over_param(alg: &Presentation, x: &Element, p: Param, lambda: Q) -> Result<Element> {
    param_series(alg, x, p, -1, 1, |n| GaussRat::real(qpow(lambda, n) * inv_factorial(n)))
}

/// `sin(λ p x)`.
pub fn sin_param(alg: &Presentation, x: &Element, p: Param, lambda: Q) -> Result<Element> {
    param_series(alg, x, p, 0, 1, |n| {
        if n % 2 == 0 {
            GaussRat::zero()
        } else {
            let s = if n % 4 == 1 { 1 } else { -1 };
            GaussRat::real(qpow(lambda, n) * inv_factorial(n) * Q::from_integer(s))
        }
    })
}

/// `cos(λ p x) − 1`.
pub fn cosm1_param(alg: &Presentation, x: &Element, p: Param, lambda: Q) -> Result<Element> {
    param_series(alg, x, p, 0, 1, |n| {
        if n % 2 == 1 {
            GaussRat::zero()
        } else {
            let s = if n % 4 == 0 { 1 } else { -1 };
            GaussRat::real(qpow(lambda, n) * inv_factorial(n) * Q::from_integer(s))
        }
    })
}

/// `sinh(λ p x) / p`.
pub fn sinh_over_param(alg: &Presentation, x: &Element, p: Param, lambda: Q) -> Result<Element> {
    param_series(alg, x, p, -1, 1, |n| {
        if n % 2 == 0 {
            GaussRat::zero()
        } else {
            GaussRat::real(qpow(lambda, n) * inv_factorial(n))
        }
    })
}

fn qpow(x: Q, n: u32) -> Q {
    (0..n).fold(Q::from_integer(1), |acc, _| acc * x)
}

/// `exp(e)` for an element without constant term; the series must be cut
/// off by the truncation policy.
pub fn exp_element(alg: &Presentation, e: &Element) -> Result<Element> {
    if !e.constant_part().is_zero() {
        return Err(TwistError::Unsupported("exp of an element with a constant term".into()));
    }
    let mut out = Element::one();
    let mut term = Element::one();
    for n in 1..=MAX_SERIES_TERMS {
        term = alg.multiply(&term, e).scale_gauss(GaussRat::real(Q::new(1, n as i128)));
        if term.is_zero() {
            return Ok(out);
        }
        out += term.clone();
    }
    Err(TwistError::NonTerminating(format!("exp series exceeded {} terms", MAX_SERIES_TERMS)))
}

/// `(1 + n)⁻¹ = Σ (−n)^k` for an element `1 + n` with nilpotent `n`.
pub fn inverse_element(alg: &Presentation, u: &Element) -> Result<Element> {
    let c = u.constant_part();
    let c0 = c.as_gauss().filter(|g| *g == GaussRat::one()).ok_or_else(|| {
        TwistError::Unsupported(format!("inverse of an element with constant part {}", c))
    })?;
    let n = u.clone() - Element::scalar(Coeff::from_gauss(c0));
    let mut out = Element::one();
    let mut term = Element::one();
    for _ in 1..=MAX_SERIES_TERMS {
        term = -alg.multiply(&term, &n);
        if term.is_zero() {
            return Ok(out);
        }
        out += term.clone();
    }
    Err(TwistError::NonTerminating("inverse series did not terminate".into()))
}

/// `exp(t)` for a tensor without constant term.
pub fn exp_tensor(alg: &Presentation, t: &TensorElement) -> Result<TensorElement> {
    let rank = t.rank();
    let unit: Vec<crate::element::Word> = vec![Vec::new(); rank];
    if !t.lincomb().coeff(&unit).is_zero() {
        return Err(TwistError::Unsupported("exp of a tensor with a constant term".into()));
    }
    let mut out = TensorElement::one(rank);
    let mut term = TensorElement::one(rank);
    for n in 1..=MAX_SERIES_TERMS {
        term = alg.multiply_tensors(&term, t).scale_gauss(GaussRat::real(Q::new(1, n as i128)));
        if term.is_zero() {
            return Ok(out);
        }
        out += term.clone();
    }
    Err(TwistError::NonTerminating(format!("exp series exceeded {} terms", MAX_SERIES_TERMS)))
}

/// `e^{t} T e^{−t} = Σ adₜⁿ(T)/n!`.
pub fn adjoint_exp(alg: &Presentation, t: &TensorElement, x: &TensorElement) -> Result<TensorElement> {
    let mut out = x.clone();
    let mut term = x.clone();
    for n in 1..=MAX_SERIES_TERMS {
        term = alg
            .tensor_commutator(t, &term)
            .scale_gauss(GaussRat::real(Q::new(1, n as i128)));
        if term.is_zero() {
            return Ok(out);
        }
        out += term.clone();
    }
    Err(TwistError::NonTerminating(format!("adjoint series exceeded {} terms", MAX_SERIES_TERMS)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Gen;
    use crate::scalar::{q, TruncationPolicy};

    fn momenta() -> Presentation {
        Presentation::new("momenta", (0..4).map(Gen::p), vec![], TruncationPolicy::default()).unwrap()
    }

    #[test]
    fn exp_times_inverse_exp_is_one() {
        let alg = momenta();
        let p0 = Element::gen(Gen::p(0));
        let a = exp_param(&alg, &p0, Param::Kinv, q(-1, 1)).unwrap();
        let b = exp_param(&alg, &p0, Param::Kinv, q(1, 1)).unwrap();
        assert_eq!(alg.multiply(&a, &b), Element::one());
        assert_eq!(inverse_element(&alg, &a).unwrap(), b);
    }

    #[test]
    fn expm1_has_no_negative_mass_powers() {
        let alg = momenta();
        let p0 = Element::gen(Gen::p(0));
        let e = expm1_over_param(&alg, &p0, Param::Kinv, q(-1, 1)).unwrap();
        assert_eq!(e.exponent_range(Param::Kinv), Some((0, 4)));
        assert_eq!(e.coeff(&vec![Gen::p(0)]), Coeff::int(-1));
    }

    #[test]
    fn sin_squared_plus_cos_squared() {
        let alg = momenta();
        let p0 = Element::gen(Gen::p(0));
        let s = sin_param(&alg, &p0, Param::Khinv, q(1, 2)).unwrap();
        let c = cosm1_param(&alg, &p0, Param::Khinv, q(1, 2)).unwrap() + Element::one();
        let sum = alg.multiply(&s, &s) + alg.multiply(&c, &c);
        assert_eq!(sum, Element::one());
    }
}
