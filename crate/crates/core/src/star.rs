//! Star products on polynomial functions of `x₀..x₃`, realized by
//! bidifferential operators acting on `f⊗g` before pointwise multiplication.
//!
//! `∂^μ` differentiates with respect to the lower coordinate `x_μ`
//! (`∂^μ x_ν = δ^μ_ν`), i.e. `∂^μ = η^{μν}∂/∂x^ν`. In the κ operator the
//! coordinates `x_μ` multiplying `γ^μ` stand outside both legs and are never
//! differentiated.

use std::fmt;

use crate::element::{Element, LinComb};
use crate::error::{Result, TwistError};
use crate::generator::{Family, Gen};
use crate::scalar::{q, Coeff, GaussRat, Mono, Param, TruncationPolicy, Q};

/// Exponents of `x₀..x₃`.
pub type Exps = [u8; 4];

fn unit(mu: u8) -> Exps {
    let mut e = [0; 4];
    e[mu as usize] = 1;
    e
}

fn add_exps(a: &Exps, b: &Exps) -> Exps {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn degree(e: &Exps) -> u32 {
    e.iter().map(|&k| k as u32).sum()
}

fn exact() -> TruncationPolicy {
    TruncationPolicy::unbounded()
}

fn mono_coeff(re: Q, im: Q, p: Param, e: i8) -> Coeff {
    Coeff::monomial(GaussRat::new(re, im), Mono::param(p, e))
}

/// Commutative polynomial in the coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoordPolynomial(LinComb<Exps>);

impl CoordPolynomial {
    pub fn zero() -> Self {
        CoordPolynomial(LinComb::zero())
    }

    pub fn constant(c: Coeff) -> Self {
        CoordPolynomial(LinComb::term([0; 4], c))
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn coord(mu: u8) -> Self {
        CoordPolynomial(LinComb::term(unit(mu), Coeff::one()))
    }

    pub fn monomial(e: Exps, c: Coeff) -> Self {
        CoordPolynomial(LinComb::term(e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exps, &Coeff)> {
        self.0.iter()
    }

    pub fn degree(&self) -> u32 {
        self.0.keys().map(degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        CoordPolynomial(self.0.scale(c, &exact()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = LinComb::zero();
        for (a, ca) in self.0.iter() {
            for (b, cb) in o.0.iter() {
                out.add_term(add_exps(a, b), ca.mul_trunc(cb, &exact()));
            }
        }
        CoordPolynomial(out)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Coeff) -> Coeff) -> Self {
        CoordPolynomial(self.0.map_coeffs(f))
    }

    /// As an element over the coordinate generators `x[μ]`, words sorted.
    pub fn to_element(&self) -> Element {
        let mut out = Element::zero();
        for (e, c) in self.0.iter() {
            let mut w = Vec::new();
            for mu in 0..4u8 {
                for _ in 0..e[mu as usize] {
                    w.push(Gen::new(Family::X, &[mu]));
                }
            }
            out.add_term(w, c.clone());
        }
        out
    }

    pub fn from_element(e: &Element) -> Result<Self> {
        let mut out = LinComb::zero();
        for (w, c) in e.iter() {
            let mut ex = [0u8; 4];
            for g in w {
                if g.family != Family::X {
                    return Err(TwistError::UnknownGenerator(g.to_string(), "minkowski".into()));
                }
                ex[g.idx[0] as usize] += 1;
            }
            out.add_term(ex, c.clone());
        }
        Ok(CoordPolynomial(out))
    }
}

impl std::ops::Add for CoordPolynomial {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        CoordPolynomial(self.0 + o.0)
    }
}

impl std::ops::Sub for CoordPolynomial {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        CoordPolynomial(self.0 - o.0)
    }
}

impl fmt::Display for CoordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::render_element(&self.to_element()))
    }
}

/// `x^mult ∂^deriv` acting on one leg (derivative first).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LegOp {
    pub mult: Exps,
    pub deriv: Exps,
}

impl LegOp {
    pub fn deriv(d: Exps) -> Self {
        LegOp { mult: [0; 4], deriv: d }
    }

    fn apply(&self, e: &Exps) -> Option<(Exps, i128)> {
        let mut out = *e;
        let mut factor = 1i128;
        for mu in 0..4 {
            for _ in 0..self.deriv[mu] {
                if out[mu] == 0 {
                    return None;
                }
                factor *= out[mu] as i128;
                out[mu] -= 1;
            }
        }
        Some((add_exps(&out, &self.mult), factor))
    }
}

/// Term key: outer coordinate monomial and one operator per leg.
pub type OpKey = (Exps, [LegOp; 2]);

/// Sum of terms `c · x^ext · (A⊗B)` acting on `f⊗g`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffOperator(LinComb<OpKey>);

/// Intermediate `Σ c · x^ext · (f'⊗g')` before multiplication.
type BiState = LinComb<(Exps, Exps, Exps)>;

impl DiffOperator {
    pub fn zero() -> Self {
        DiffOperator(LinComb::zero())
    }

    pub fn add_term(&mut self, ext: Exps, legs: [LegOp; 2], c: Coeff) {
        self.0.add_term((ext, legs), c);
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OpKey, &Coeff)> {
        self.0.iter()
    }

    fn apply(&self, s: &BiState) -> BiState {
        let mut out = BiState::zero();
        for ((ext, [a, b]), c) in self.0.iter() {
            for ((se, s1, s2), sc) in s.iter() {
                let (Some((n1, f1)), Some((n2, f2))) = (a.apply(s1), b.apply(s2)) else {
                    continue;
                };
                let k = GaussRat::int(f1 * f2);
                out.add_term((add_exps(se, ext), n1, n2), c.mul_trunc(sc, &exact()).scale(k));
            }
        }
        out
    }

    /// `exp(self)` applied to a state. Every registered exponent lowers the
    /// total leg degree, so the series terminates.
    fn apply_exp(&self, s: &BiState) -> Result<BiState> {
        let mut acc = s.clone();
        let mut cur = s.clone();
        for n in 1..=crate::series::MAX_SERIES_TERMS as i128 {
            cur = self.apply(&cur).map_coeffs(|c| c.scale_q(q(1, n)));
            if cur.is_zero() {
                return Ok(acc);
            }
            acc += cur.clone();
        }
        Err(TwistError::NonTerminating("star operator exponential".into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarKind {
    Kappa,
    Xi,
    KappaHat,
    /// `O_ξ ∘ O_κ`
    KappaXi,
    /// `O_κ̂ ∘ O_κ`
    KappaKappaHat,
}

impl StarKind {
    pub const ALL: [StarKind; 5] =
        [StarKind::Kappa, StarKind::Xi, StarKind::KappaHat, StarKind::KappaXi, StarKind::KappaKappaHat];

    pub fn name(self) -> &'static str {
        match self {
            StarKind::Kappa => "kappa",
            StarKind::Xi => "xi",
            StarKind::KappaHat => "hat",
            StarKind::KappaXi => "kappa-xi",
            StarKind::KappaKappaHat => "kappa-hat",
        }
    }

    pub fn from_name(s: &str) -> Option<StarKind> {
        StarKind::ALL.iter().copied().find(|k| k.name() == s)
    }
}

/// A star operator: exponents applied in sequence (first entry first).
#[derive(Clone, Debug)]
pub struct StarOperator {
    kind: StarKind,
    gamma_order: u8,
    printed_second_order: bool,
}

/// `c^μ_{ρτ}`: `c^i_{0i} = −1/2κ`, `c^i_{i0} = 1/2κ`, others zero.
fn structure_c(mu: u8, rho: u8, tau: u8) -> Q {
    if mu == 0 {
        return q(0, 1);
    }
    if rho == 0 && tau == mu {
        q(-1, 2)
    } else if rho == mu && tau == 0 {
        q(1, 2)
    } else {
        q(0, 1)
    }
}

fn d2(a: u8, b: u8) -> Exps {
    add_exps(&unit(a), &unit(b))
}

/// `i x_μ γ^μ(∂⊗1, 1⊗∂)` to the requested order in the `c` coefficients.
///
/// The second-order term enters as the real `(1/3)c c`, the value fixed by
/// the Baker–Campbell–Hausdorff composition of plane waves given the
/// first-order `c`; `printed` uses the literal `i(1/12)c c` instead, which
/// leaves an associator at order κ⁻².
fn kappa_exponent(gamma_order: u8, printed: bool) -> DiffOperator {
    let mut op = DiffOperator::zero();
    for mu in 1..4u8 {
        for rho in 0..4u8 {
            for tau in 0..4u8 {
                let c1 = structure_c(mu, rho, tau);
                if c1 == q(0, 1) {
                    continue;
                }
                let legs = [LegOp::deriv(unit(rho)), LegOp::deriv(unit(tau))];
                op.add_term(unit(mu), legs, mono_coeff(q(0, 1), c1, Param::Kinv, 1));
                if gamma_order < 2 {
                    continue;
                }
                // (1/12) c^μ_{ρτ} c^ρ_{λν} (∂^τ∂^λ⊗∂^ν + ∂^ν⊗∂^τ∂^λ)
                for la in 0..4u8 {
                    for nu in 0..4u8 {
                        let c2 = structure_c(rho, la, nu);
                        if c2 == q(0, 1) {
                            continue;
                        }
                        let w = c1 * c2;
                        let coeff = if printed {
                            mono_coeff(q(0, 1), w * q(1, 12), Param::Kinv, 2)
                        } else {
                            mono_coeff(w * q(1, 3), q(0, 1), Param::Kinv, 2)
                        };
                        let a = [LegOp::deriv(d2(tau, la)), LegOp::deriv(unit(nu))];
                        let b = [LegOp::deriv(unit(nu)), LegOp::deriv(d2(tau, la))];
                        op.add_term(unit(mu), a, coeff.clone());
                        op.add_term(unit(mu), b, coeff);
                    }
                }
            }
        }
    }
    op
}

/// `−iκ(ξ/2) ∂³⊗(e^{−∂⁰/κ} − 1)`, with the inner series cut at `max_deriv`.
fn xi_exponent(max_deriv: u32) -> DiffOperator {
    let mut op = DiffOperator::zero();
    let mut fact: i128 = 1;
    for n in 1..=max_deriv.max(1) {
        fact *= n as i128;
        // −i(ξ/2)(−1)ⁿ κ^{1−n}/n!
        let sign = if n % 2 == 0 { -1 } else { 1 };
        let mut c = mono_coeff(q(0, 1), q(sign, 2 * fact), Param::Xi, 1);
        c = c.mul_mono(&Mono::param(Param::Kinv, n as i8 - 1));
        let mut d0 = [0u8; 4];
        d0[0] = n as u8;
        op.add_term([0; 4], [LegOp::deriv(unit(3)), LegOp::deriv(d0)], c);
    }
    op
}

/// `−(i/2κ̂)(x₁∂² − x₂∂¹)∧∂⁰`.
fn hat_exponent() -> DiffOperator {
    let mut op = DiffOperator::zero();
    let rot = [(unit(1), unit(2), 1i128), (unit(2), unit(1), -1i128)];
    let d0 = LegOp::deriv(unit(0));
    for (m, d, s) in rot {
        let r = LegOp { mult: m, deriv: d };
        let c = mono_coeff(q(0, 1), q(-s, 2), Param::Khinv, 1);
        op.add_term([0; 4], [r, d0], c.clone());
        op.add_term([0; 4], [d0, r], -c);
    }
    op
}

/// `gamma_order` selects how many displayed orders of the γ-series enter
/// the κ operator (1 or 2).
pub fn build_star_operator(kind: StarKind, gamma_order: u8) -> Result<StarOperator> {
    if !(1..=2).contains(&gamma_order) {
        return Err(TwistError::Unsupported(format!("gamma order {} (1 or 2)", gamma_order)));
    }
    Ok(StarOperator { kind, gamma_order, printed_second_order: false })
}

impl StarOperator {
    pub fn kind(&self) -> StarKind {
        self.kind
    }

    pub fn gamma_order(&self) -> u8 {
        self.gamma_order
    }

    /// Same operator with the literal second-order γ coefficient.
    pub fn with_printed_second_order(mut self) -> Self {
        self.printed_second_order = true;
        self
    }

    pub fn uses_printed_second_order(&self) -> bool {
        self.printed_second_order
    }

    /// The exponents in application order, exact on legs of total degree
    /// at most `max_deriv`.
    pub fn exponents(&self, max_deriv: u32) -> Vec<DiffOperator> {
        let k = || kappa_exponent(self.gamma_order, self.printed_second_order);
        match self.kind {
            StarKind::Kappa => vec![k()],
            StarKind::Xi => vec![xi_exponent(max_deriv)],
            StarKind::KappaHat => vec![hat_exponent()],
            StarKind::KappaXi => vec![k(), xi_exponent(max_deriv)],
            StarKind::KappaKappaHat => vec![k(), hat_exponent()],
        }
    }
}

/// `ω(O(f⊗g))`.
pub fn star_multiply(f: &CoordPolynomial, g: &CoordPolynomial, op: &StarOperator) -> Result<CoordPolynomial> {
    let mut s = BiState::zero();
    for (a, ca) in f.iter() {
        for (b, cb) in g.iter() {
            s.add_term(([0; 4], *a, *b), ca.mul_trunc(cb, &exact()));
        }
    }
    for e in op.exponents(f.degree() + g.degree()) {
        s = e.apply_exp(&s)?;
    }
    let mut out = LinComb::zero();
    for ((e, a, b), c) in s.iter() {
        out.add_term(add_exps(&add_exps(e, a), b), c.clone());
    }
    Ok(CoordPolynomial(out))
}

pub fn star_commutator(f: &CoordPolynomial, g: &CoordPolynomial, op: &StarOperator) -> Result<CoordPolynomial> {
    Ok(star_multiply(f, g, op)? - star_multiply(g, f, op)?)
}

/// `(f⋆g)⋆h − f⋆(g⋆h)`.
pub fn associator(
    f: &CoordPolynomial,
    g: &CoordPolynomial,
    h: &CoordPolynomial,
    op: &StarOperator,
) -> Result<CoordPolynomial> {
    let l = star_multiply(&star_multiply(f, g, op)?, h, op)?;
    let r = star_multiply(f, &star_multiply(g, h, op)?, op)?;
    Ok(l - r)
}
