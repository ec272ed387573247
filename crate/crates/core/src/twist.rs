//! Drinfeld twists `F = exp(t)`: conjugated coproducts, the Sweedler
//! u-element, twisted antipodes and the cocycle condition.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::element::{Element, TensorElement};
use crate::error::Result;
use crate::generator::Gen;
use crate::hopf::HopfPresentation;
use crate::poincare::p_low;
use crate::report::Residual;
use crate::scalar::{q, Coeff, GaussRat, Mono, Param};
use crate::series::{adjoint_exp, exp_tensor, expm1_over_param, inverse_element};

/// `F = exp(t)` with its expansion and inverse cached under the policy of
/// the algebra it was built for.
#[derive(Clone, Debug)]
pub struct TwistElement {
    name: String,
    exponent: TensorElement,
    expanded: TensorElement,
    inverse: TensorElement,
}

impl TwistElement {
    pub fn new(name: impl Into<String>, exponent: TensorElement, h: &HopfPresentation) -> Result<Self> {
        let alg = h.algebra();
        alg.check_tensor(&exponent)?;
        let exponent = exponent.truncate(h.policy());
        let expanded = exp_tensor(alg, &exponent)?;
        let inverse = exp_tensor(alg, &(-exponent.clone()))?;
        Ok(TwistElement { name: name.into(), exponent, expanded, inverse })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn exponent(&self) -> &TensorElement {
        &self.exponent
    }

    pub fn expanded(&self) -> &TensorElement {
        &self.expanded
    }

    pub fn inverse(&self) -> &TensorElement {
        &self.inverse
    }

    /// Part of the expansion linear in `p` (all other parameters kept).
    pub fn first_order(&self, p: Param) -> TensorElement {
        self.expanded.filter_params(|m| m.exp(p) == 1)
    }
}

/// `F_{ξ,κ} = exp(iκ(ξ/2) P₃⊗(e^{−P₀/κ} − 1))`.
pub fn canonical_twist(h: &HopfPresentation) -> Result<TwistElement> {
    let alg = h.algebra();
    let f = expm1_over_param(alg, &p_low(0), Param::Kinv, q(-1, 1))?;
    let c = Coeff::monomial(GaussRat::new(q(0, 1), q(1, 2)), Mono::param(Param::Xi, 1));
    let t = alg.tensor(&[p_low(3), f]).scale(&c, h.policy());
    TwistElement::new("F-xi-kappa", t, h)
}

/// `F_{κ̂,κ} = exp((i/2κ̂) M₁₂∧P₀)` with the wedge expanded before
/// exponentiation.
pub fn lie_twist(h: &HopfPresentation) -> Result<TwistElement> {
    let m12 = Element::gen(Gen::m(1, 2));
    let wedge = TensorElement::simple(&[m12.clone(), p_low(0)]) - TensorElement::simple(&[p_low(0), m12]);
    let c = Coeff::monomial(GaussRat::new(q(0, 1), q(1, 2)), Mono::param(Param::Khinv, 1));
    TwistElement::new("F-hat-kappa", wedge.scale(&c, h.policy()), h)
}

/// The undeformed canonical twist `exp(−i(ξ/2) P₃⊗P₀)`, the κ→∞ limit of
/// [`canonical_twist`].
pub fn flat_canonical_twist(h: &HopfPresentation) -> Result<TwistElement> {
    let c = Coeff::monomial(GaussRat::new(q(0, 1), q(-1, 2)), Mono::param(Param::Xi, 1));
    let t = TensorElement::simple(&[p_low(3), p_low(0)]).scale(&c, h.policy());
    TwistElement::new("F-xi-flat", t, h)
}

/// `F T F⁻¹ = Σ adₜⁿ(T)/n!`.
pub fn twist_conjugate(h: &HopfPresentation, f: &TwistElement, t: &TensorElement) -> Result<TensorElement> {
    adjoint_exp(h.algebra(), &f.exponent, t)
}

pub fn twisted_coproduct(h: &HopfPresentation, f: &TwistElement, e: &Element) -> Result<TensorElement> {
    twist_conjugate(h, f, &h.coproduct(e)?)
}

/// `u = Σ f₍₁₎ S(f₍₂₎)` over the expansion of `F`.
pub fn compute_u(h: &HopfPresentation, f: &TwistElement) -> Result<Element> {
    let alg = h.algebra();
    let mut u = Element::zero();
    for (ws, c) in f.expanded.iter() {
        let a = Element::gen_word(ws[0].clone());
        let sb = h.antipode(&Element::gen_word(ws[1].clone()))?;
        u += alg.multiply(&a, &sb).scale(c, h.policy());
    }
    Ok(u)
}

/// `S_F(a) = u S(a) u⁻¹`.
pub fn twisted_antipode(h: &HopfPresentation, u: &Element, e: &Element) -> Result<Element> {
    let alg = h.algebra();
    let uinv = inverse_element(alg, u)?;
    Ok(alg.product(&[u.clone(), h.antipode(e)?, uinv]))
}

/// Cocycle residual `F₁₂(Δ⊗1)F − F₂₃(1⊗Δ)F` and the normalization
/// residuals `(ε⊗1)F − 1`, `(1⊗ε)F − 1`.
pub struct CocycleResult {
    pub cocycle: Residual,
    pub left_normalization: Residual,
    pub right_normalization: Residual,
}

impl CocycleResult {
    pub fn is_zero(&self) -> bool {
        self.cocycle.is_zero() && self.left_normalization.is_zero() && self.right_normalization.is_zero()
    }
}

pub fn check_cocycle(h: &HopfPresentation, f: &TwistElement) -> Result<CocycleResult> {
    let alg = h.algebra();
    let p = h.policy();
    let fx = &f.expanded;
    let lhs = alg.multiply_tensors(&fx.embed3([0, 1]), &h.coproduct_on_leg(fx, 0)?);
    let rhs = alg.multiply_tensors(&fx.embed3([1, 2]), &h.coproduct_on_leg(fx, 1)?);
    let one = TensorElement::one(1);
    Ok(CocycleResult {
        cocycle: Residual::new(lhs - rhs, p),
        left_normalization: Residual::new(h.counit_on_leg(fx, 0)? - one.clone(), p),
        right_normalization: Residual::new(h.counit_on_leg(fx, 1)? - one, p),
    })
}

/// The Hopf algebra with coproducts `FΔF⁻¹` and antipodes `uSu⁻¹`; the
/// algebra sector and counits are unchanged.
pub fn twisted_hopf(h: &HopfPresentation, f: &TwistElement, name: &str) -> Result<HopfPresentation> {
    let u = compute_u(h, f)?;
    let gens = h.generators();
    let rows: Vec<(Gen, TensorElement, Element)> = gens
        .par_iter()
        .map(|g| {
            let e = Element::gen(*g);
            Ok((*g, twisted_coproduct(h, f, &e)?, twisted_antipode(h, &u, &e)?))
        })
        .collect::<Result<_>>()?;
    let mut coproducts = BTreeMap::new();
    let mut antipodes = BTreeMap::new();
    for (g, d, s) in rows {
        coproducts.insert(g, d);
        antipodes.insert(g, s);
    }
    h.with_tables(name, coproducts, antipodes)
}
