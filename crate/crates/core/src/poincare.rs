//! The classical and κ-deformed Poincaré Hopf algebras.
//!
//! Generators are `M[μ,ν]` with `μ<ν` and `P[μ]` (lower index). `M^{νμ}` is
//! `−M[μ,ν]`; in particular the boosts `M^{i0}` are `−M[0,i]`.

use std::collections::BTreeMap;

use crate::element::{Element, TensorElement};
use crate::error::Result;
use crate::generator::{eta, Family, Gen};
use crate::hopf::HopfPresentation;
use crate::presentation::Presentation;
use crate::scalar::{q, Coeff, GaussRat, Param, TruncationPolicy};
use crate::series::{exp_param, expm1_over_param};

/// `M^{μν}` as a signed generator (zero on the diagonal).
pub fn m_up(mu: u8, nu: u8) -> Element {
    match Gen::canonical(Family::M, &[mu, nu]).expect("index in range") {
        None => Element::zero(),
        Some((s, g)) => Element::gen(g).scale_gauss(GaussRat::int(s as i128)),
    }
}

pub fn p_low(mu: u8) -> Element {
    Element::gen(Gen::p(mu))
}

pub fn lorentz_generators() -> Vec<Gen> {
    let mut v = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            v.push(Gen::m(a, b));
        }
    }
    v
}

pub fn poincare_generators() -> Vec<Gen> {
    let mut v = lorentz_generators();
    v.extend((0..4).map(Gen::p));
    v
}

fn ig(e: Element, re: i128, im: i128) -> Element {
    e.scale_gauss(GaussRat::new(q(re, 1), q(im, 1)))
}

/// `[M^{μν}, M^{λσ}] = i(η^{νλ}M^{μσ} − η^{μλ}M^{νσ} − η^{νσ}M^{μλ} + η^{μσ}M^{νλ})`.
pub fn lorentz_bracket(mu: u8, nu: u8, la: u8, si: u8) -> Element {
    let d = |a: u8, b: u8| if a == b { eta(a) } else { 0 };
    let mut out = Element::zero();
    for (c, x, y) in [
        (d(nu, la), mu, si),
        (-d(mu, la), nu, si),
        (-d(nu, si), mu, la),
        (d(mu, si), nu, la),
    ] {
        if c != 0 {
            out += ig(m_up(x, y), 0, c);
        }
    }
    out
}

/// `κ/2 (1 − e^{−2P₀/κ}) + (1/2κ) P⃗²`, the deformed energy function.
pub fn boost_energy(alg: &Presentation, p0: &Element, spatial: &[Element], kinv: Param) -> Result<Element> {
    let mut e = expm1_over_param(alg, p0, kinv, q(-2, 1))?.scale_gauss(GaussRat::real(q(-1, 2)));
    let half_k = Coeff::monomial(GaussRat::real(q(1, 2)), crate::scalar::Mono::param(kinv, 1));
    for p in spatial {
        e += alg.multiply(p, p).scale(&half_k, alg.policy());
    }
    Ok(e.truncate(alg.policy()))
}

/// Commutation table of the Poincaré algebra; `deformed` selects the
/// bicrossproduct boost–momentum relation.
fn brackets(alg: Option<&Presentation>) -> Result<Vec<(Gen, Gen, Element)>> {
    let mut out = Vec::new();
    let lorentz = lorentz_generators();
    for (k, g) in lorentz.iter().enumerate() {
        for h in &lorentz[..k] {
            let v = lorentz_bracket(g.idx[0], g.idx[1], h.idx[0], h.idx[1]);
            out.push((*g, *h, v));
        }
    }
    for g in &lorentz {
        let (a, b) = (g.idx[0], g.idx[1]);
        for rho in 0..4u8 {
            let v = if a == 0 {
                let i = b;
                if rho == 0 {
                    // [M^{0i}, P₀] = −[M^{i0}, P₀] = −iP_i
                    ig(p_low(i), 0, -1)
                } else {
                    // −[M^{i0}, P_j]
                    match alg {
                        None => {
                            if rho == i {
                                ig(p_low(0), 0, -1)
                            } else {
                                Element::zero()
                            }
                        }
                        Some(alg) => {
                            let mut v = Element::zero();
                            if rho == i {
                                let spatial: Vec<Element> = (1..4).map(p_low).collect();
                                let en = boost_energy(alg, &p_low(0), &spatial, Param::Kinv)?;
                                v += ig(en, 0, -1);
                            }
                            let pp = alg.multiply(&p_low(i), &p_low(rho));
                            v += pp.scale(&Coeff::monomial(GaussRat::i(), crate::scalar::Mono::param(Param::Kinv, 1)), alg.policy());
                            v
                        }
                    }
                }
            } else if rho == 0 {
                Element::zero()
            } else {
                // [M^{ij}, P_k] = i(δ^j_k P_i − δ^i_k P_j)
                let mut v = Element::zero();
                if b == rho {
                    v += ig(p_low(a), 0, 1);
                }
                if a == rho {
                    v += ig(p_low(b), 0, -1);
                }
                v
            };
            out.push((*g, Gen::p(rho), v));
        }
    }
    Ok(out)
}

fn primitive(g: Gen) -> TensorElement {
    TensorElement::simple(&[Element::gen(g), Element::one()])
        + TensorElement::simple(&[Element::one(), Element::gen(g)])
}

fn zero_counits(gens: &[Gen]) -> BTreeMap<Gen, Coeff> {
    gens.iter().map(|g| (*g, Coeff::zero())).collect()
}

/// Undeformed Poincaré Hopf algebra.
pub fn poincare_classical(policy: TruncationPolicy) -> Result<HopfPresentation> {
    let gens = poincare_generators();
    let alg = Presentation::new("poincare-classical", gens.clone(), brackets(None)?, policy)?;
    let coproducts = gens.iter().map(|g| (*g, primitive(*g))).collect();
    let antipodes = gens.iter().map(|g| (*g, -Element::gen(*g))).collect();
    HopfPresentation::new("poincare-classical", alg, coproducts, antipodes, zero_counits(&gens))
}

/// The κ-Poincaré Hopf algebra in the bicrossproduct basis.
pub fn kappa_poincare(policy: TruncationPolicy) -> Result<HopfPresentation> {
    let gens = poincare_generators();
    // the deformed table refers to series, which need the generators in place
    let bare = Presentation::new("kappa-poincare", gens.clone(), vec![], policy.clone())?;
    let alg = Presentation::new("kappa-poincare", gens.clone(), brackets(Some(&bare))?, policy)?;
    let pol = alg.policy().clone();
    let p0 = p_low(0);
    let em = exp_param(&alg, &p0, Param::Kinv, q(-1, 1))?;
    let ep = exp_param(&alg, &p0, Param::Kinv, q(1, 1))?;
    let kinv = Coeff::param(Param::Kinv);

    let mut coproducts = BTreeMap::new();
    let mut antipodes = BTreeMap::new();
    coproducts.insert(Gen::p(0), primitive(Gen::p(0)));
    antipodes.insert(Gen::p(0), -p0.clone());
    for i in 1..4u8 {
        let pi = p_low(i);
        coproducts.insert(
            Gen::p(i),
            alg.tensor(&[pi.clone(), em.clone()]) + TensorElement::simple(&[Element::one(), pi.clone()]),
        );
        antipodes.insert(Gen::p(i), -alg.multiply(&pi, &ep));
    }
    for g in lorentz_generators() {
        let (a, b) = (g.idx[0], g.idx[1]);
        if a != 0 {
            coproducts.insert(g, primitive(g));
            antipodes.insert(g, -Element::gen(g));
            continue;
        }
        let i = b;
        // Δ(M^{i0}) = M^{i0}⊗e^{−P₀/κ} + 1⊗M^{i0} − κ⁻¹ M^{ij}⊗P_j, negated for M[0,i]
        let boost = m_up(i, 0);
        let mut d = alg.tensor(&[boost.clone(), em.clone()])
            + TensorElement::simple(&[Element::one(), boost.clone()]);
        let mut rot_p = Element::zero();
        for j in 1..4u8 {
            let mij = m_up(i, j);
            if mij.is_zero() {
                continue;
            }
            d += alg.tensor(&[mij.clone(), p_low(j)]).scale(&(-kinv.clone()), &pol);
            rot_p += alg.multiply(&mij, &p_low(j));
        }
        coproducts.insert(g, -d);
        // S(M^{i0}) = −(M^{i0} + κ⁻¹ M^{ij}P_j) e^{P₀/κ}
        let inner = boost + rot_p.scale(&kinv, &pol);
        antipodes.insert(g, alg.multiply(&inner, &ep));
    }
    HopfPresentation::new("kappa-poincare", alg, coproducts, antipodes, zero_counits(&gens))
}

/// Printed mass Casimir with `sinh(λP₀/κ)`: `(2κ sinh(λP₀/κ))² − P⃗² e^{P₀/κ}`.
pub fn mass_casimir(h: &HopfPresentation, lambda: crate::scalar::Q) -> Result<Element> {
    let alg = h.algebra();
    let p0 = p_low(0);
    let s = crate::series::sinh_over_param(alg, &p0, Param::Kinv, lambda)?.scale_gauss(GaussRat::int(2));
    let ep = exp_param(alg, &p0, Param::Kinv, q(1, 1))?;
    let mut p2 = Element::zero();
    for i in 1..4 {
        p2 += alg.multiply(&p_low(i), &p_low(i));
    }
    Ok(alg.multiply(&s, &s) - alg.multiply(&p2, &ep))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_brackets() {
        // [M¹², M²³] = iM¹³
        assert_eq!(lorentz_bracket(1, 2, 2, 3), ig(m_up(1, 3), 0, 1));
    }

    #[test]
    fn momentum_moves_past_rotation() {
        let h = kappa_poincare(TruncationPolicy::default()).unwrap();
        let alg = h.algebra();
        let prod = alg.multiply(&p_low(1), &m_up(1, 2));
        let expected = Element::gen_word(vec![Gen::m(1, 2), Gen::p(1)]) + ig(p_low(2), 0, 1);
        assert_eq!(prod, expected);
    }
}
