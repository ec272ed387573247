//! Inönü–Wigner contraction `c → ∞`: rescale generators and parameters,
//! expand in powers of `c`, refuse divergent terms and keep the `c⁰` part.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::element::{Element, TensorElement};
use crate::error::{Result, TwistError};
use crate::generator::{Family, Gen};
use crate::groebner::{groebner_basis, rational, Monomial, QPoly};
use crate::hopf::HopfPresentation;
use crate::poisson::{self, reduce_modulo, CommutatorTable};
use crate::presentation::{Presentation, Substitution};
use crate::render::{render_element, render_tensor};
use crate::twist::TwistElement;
use crate::scalar::{q, Coeff, GaussRat, Mono, Param, TruncationPolicy, Q};

type Images = Arc<dyn Fn(u32) -> HashMap<Gen, Element> + Send + Sync>;

/// A target generator defined as `lim_{c→∞} scale · source`.
#[derive(Clone, Debug)]
pub struct Target {
    pub target: Gen,
    pub source: Gen,
    pub scale: Coeff,
}

/// Generator images (with a binomial order for half-integer powers), the
/// parameter map and the target presentation used for normal ordering.
#[derive(Clone)]
pub struct ContractionSpec {
    pub name: String,
    targets: Vec<Target>,
    images: Images,
    params: Vec<(Param, Coeff)>,
    target: Presentation,
    /// Normal form applied before the limit, for relations that hold only
    /// modulo an ideal.
    reduce: Option<fn(&Element) -> Element>,
}

impl fmt::Debug for ContractionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ContractionSpec")
            .field("name", &self.name)
            .field("targets", &self.targets)
            .field("params", &self.params)
            .finish()
    }
}

fn c_pow(e: i8) -> Coeff {
    Coeff::param_pow(Param::C, e)
}

fn mono_coeff(g: GaussRat, p: Param, e: i8) -> Coeff {
    Coeff::monomial(g, Mono::param(p, e))
}

/// Parameter rescalings `κ = κ̄/c`, `κ̂ = κ̄̂/c`, `ξ = ξ̄c`.
pub fn galilei_parameters() -> Vec<(Param, Coeff)> {
    vec![
        (Param::Kinv, Coeff::monomial(GaussRat::one(), Mono::param(Param::C, 1).mul(&Mono::param(Param::KbarInv, 1)))),
        (Param::Khinv, Coeff::monomial(GaussRat::one(), Mono::param(Param::C, 1).mul(&Mono::param(Param::KhbarInv, 1)))),
        (Param::Xi, Coeff::monomial(GaussRat::one(), Mono::param(Param::C, 1).mul(&Mono::param(Param::XiBar, 1)))),
    ]
}

/// Orders of the rescaled parameters follow the source orders.
fn target_policy(source: &TruncationPolicy, params: &[(Param, Coeff)]) -> TruncationPolicy {
    let mut t = TruncationPolicy::default();
    for (p, img) in params {
        for s in img.terms() {
            for q in Param::ALL {
                if q != Param::C && s.params.exp(q) != 0 {
                    t.set(q, source.max(*p));
                }
            }
        }
    }
    t.set(Param::C, None);
    t
}

impl ContractionSpec {
    /// A spec whose generator images are single terms `coef · G`; the target
    /// generators are `G = coef⁻¹ · source`. The target presentation is the
    /// contraction of `source`'s commutation table, which must be linear in
    /// the generators it reorders (true for Lie-type tables).
    pub fn from_map(
        name: impl Into<String>,
        source: &Presentation,
        gens: Vec<(Gen, Element)>,
        params: Vec<(Param, Coeff)>,
    ) -> Result<Self> {
        let name = name.into();
        let mut targets = Vec::new();
        let mut images = HashMap::new();
        for (s, img) in gens {
            let mut it = img.iter();
            let (w, c) = match (it.next(), it.next()) {
                (Some(t), None) => t,
                _ => return Err(TwistError::Unsupported(format!("image of {} is not a single term", s))),
            };
            let (g, m) = c.single_term().ok_or_else(|| TwistError::Unsupported(format!("image of {}", s)))?;
            if w.len() != 1 {
                return Err(TwistError::Unsupported(format!("image of {} is not a generator", s)));
            }
            let inv = g.inv().ok_or_else(|| TwistError::Unsupported(format!("zero image of {}", s)))?;
            targets.push(Target { target: w[0], source: s, scale: Coeff::monomial(inv, m.pow(-1)) });
            images.insert(s, img.clone());
        }
        targets.sort_by_key(|t| t.target);
        let policy = target_policy(source.policy(), &params);
        let gens: Vec<Gen> = targets.iter().map(|t| t.target).collect();
        let frame = Presentation::new(format!("{}-frame", name), gens.clone(), vec![], policy.clone())?;
        let images: Images = Arc::new(move |_| images.clone());
        let mut spec = ContractionSpec { name: name.clone(), targets, images, params, target: frame, reduce: None };
        let brackets = spec.contract_table(|a, b| Ok(source.bracket(a, b)))?;
        let brackets = brackets.into_iter().map(|((a, b), v)| (a, b, v)).collect();
        spec.target = Presentation::new(name, gens, brackets, policy)?;
        Ok(spec)
    }

    /// `P₀ = Π₀/c`, `P_i = Π_i`, `M^{ij} = K^{ij}`, `M^{i0} = cV^i` with the
    /// Galilean parameter rescalings.
    pub fn galilei_algebra(name: impl Into<String>, source: &Presentation) -> Result<Self> {
        let mut gens = vec![(Gen::p(0), Element::gen(Gen::pi(0)).scale(&c_pow(-1), &TruncationPolicy::unbounded()))];
        for i in 1..4u8 {
            gens.push((Gen::p(i), Element::gen(Gen::pi(i))));
            // M[0,i] = M^{0i} = −M^{i0}
            gens.push((Gen::m(0, i), Element::gen(Gen::v(i)).scale(&mono_coeff(GaussRat::int(-1), Param::C, 1), &TruncationPolicy::unbounded())));
            for j in i + 1..4u8 {
                gens.push((Gen::m(i, j), Element::gen(Gen::k(i, j))));
            }
        }
        ContractionSpec::from_map(name, source, gens, galilei_parameters())
    }

    /// `Λ⁰₀ = γ`, `Λ^i₀ = v^i/c`, `Λ⁰_i = v^kR^k_i/c`,
    /// `Λ^k_i = (δ^{kl} + (γ−1)v^kv^l/v²)R^l_i`, `a^0 = cτ`, `a^i = b^i`, with
    /// `γ = (1 + v²/c²)^{1/2}` expanded binomially.
    pub fn galilei_group() -> Result<Self> {
        let gens = galilei_group_generators();
        let policy = target_policy(&TruncationPolicy::default(), &galilei_parameters());
        let target = Presentation::new("galilei-group", gens, vec![], policy)?;
        let mut targets = Vec::new();
        for k in 1..4u8 {
            for l in 1..4u8 {
                targets.push(Target { target: rot(k, l), source: poisson::lam(k, l), scale: Coeff::one() });
            }
            targets.push(Target { target: vg(k), source: poisson::lam(k, 0), scale: c_pow(1) });
            targets.push(Target { target: b(k), source: poisson::trans(k), scale: Coeff::one() });
        }
        targets.push(Target { target: tau(), source: poisson::trans(0), scale: c_pow(-1) });
        targets.sort_by_key(|t| t.target);
        let frame = target.clone();
        let images: Images = Arc::new(move |order| group_images(&frame, order));
        Ok(ContractionSpec {
            name: "galilei-group".into(),
            targets,
            images,
            params: galilei_parameters(),
            target,
            reduce: Some(reduce_rotations),
        })
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn targets(&self) -> &[Target] {
        &self.targets
    }

    pub fn params(&self) -> &[(Param, Coeff)] {
        &self.params
    }

    fn substitution(&self, order: u32) -> Substitution {
        let mut s = Substitution::new();
        for (g, img) in (self.images)(order) {
            s = s.gen(g, img);
        }
        for (p, img) in &self.params {
            s = s.param(*p, img.clone());
        }
        s
    }

    /// Largest power of `c` a term can carry before cancellations; binomial
    /// corrections of order `c^{−2k}` matter only for `2k` up to this.
    fn needed_order<'a>(&self, terms: impl Iterator<Item = (Vec<&'a [Gen]>, &'a Coeff)>, extra: i8) -> Result<u32> {
        let leading = (self.images)(0);
        let sub = self.substitution(0);
        let mut worst = 0i32;
        for (words, c) in terms {
            let c2 = sub.apply_coeff(c, &TruncationPolicy::unbounded())?;
            let mut e = c2.exponent_range(Param::C).map(|r| r.1 as i32).unwrap_or(0) + extra as i32;
            for w in words {
                for g in w {
                    if let Some(img) = leading.get(g) {
                        e += img.exponent_range(Param::C).map(|r| r.1 as i32).unwrap_or(0);
                    }
                }
            }
            worst = worst.max(e);
        }
        Ok((worst.max(0) / 2) as u32)
    }

    fn substitute(&self, e: &Element, extra: i8) -> Result<Element> {
        let order = self.needed_order(e.iter().map(|(w, c)| (vec![w.as_slice()], c)), extra)?;
        self.target.substitute(e, &self.substitution(order))
    }

    fn substitute_tensor(&self, t: &TensorElement, extra: i8) -> Result<TensorElement> {
        let order = self.needed_order(t.iter().map(|(ws, c)| (ws.iter().map(|w| w.as_slice()).collect(), c)), extra)?;
        self.target.substitute_tensor(t, &self.substitution(order))
    }

    /// Contracts `[S₁, S₂]` for every pair of target generators, given the
    /// source commutators.
    fn contract_table(&self, source: impl Fn(Gen, Gen) -> Result<Element> + Sync) -> Result<CommutatorTable> {
        let mut pairs = Vec::new();
        for (i, a) in self.targets.iter().enumerate() {
            for b in &self.targets[i + 1..] {
                pairs.push((a.clone(), b.clone()));
            }
        }
        let entries: Vec<_> = pairs
            .into_par_iter()
            .map(|(a, b)| {
                let v = source(a.source, b.source)?;
                let scale = a.scale.mul_trunc(&b.scale, &TruncationPolicy::unbounded());
                let entry = format!("[{}, {}]", a.target, b.target);
                let e = self.contract_scaled(&v, &scale, &entry)?;
                Ok(((a.target, b.target), e))
            })
            .collect::<Result<_>>()?;
        Ok(entries.into_iter().filter(|(_, v): &(_, Element)| !v.is_zero()).collect())
    }

    fn reduced(&self, e: Element) -> Element {
        match self.reduce {
            Some(f) => f(&e),
            None => e,
        }
    }

    fn contract_scaled(&self, e: &Element, scale: &Coeff, entry: &str) -> Result<Element> {
        let extra = scale.exponent_range(Param::C).map(|r| r.1).unwrap_or(0);
        let s = self.substitute(e, extra)?.scale(scale, &TruncationPolicy::unbounded());
        limit(&self.reduced(s), entry)
    }

    fn contract_tensor_scaled(&self, t: &TensorElement, scale: &Coeff, entry: &str) -> Result<TensorElement> {
        let extra = scale.exponent_range(Param::C).map(|r| r.1).unwrap_or(0);
        let s = self.substitute_tensor(t, extra)?.scale(scale, &TruncationPolicy::unbounded());
        limit_tensor(&s, entry)
    }
}

/// Keeps the `c⁰` part; any positive power of `c` is a divergence.
pub fn limit(e: &Element, entry: &str) -> Result<Element> {
    let divergent = e.filter_params(|m| m.exp(Param::C) > 0);
    if !divergent.is_zero() {
        return Err(TwistError::DivergentLimit { entry: entry.to_string(), terms: render_element(&divergent) });
    }
    Ok(e.filter_params(|m| m.exp(Param::C) == 0))
}

pub fn limit_tensor(t: &TensorElement, entry: &str) -> Result<TensorElement> {
    let divergent = t.filter_params(|m| m.exp(Param::C) > 0);
    if !divergent.is_zero() {
        return Err(TwistError::DivergentLimit { entry: entry.to_string(), terms: render_tensor(&divergent) });
    }
    Ok(t.filter_params(|m| m.exp(Param::C) == 0))
}

/// Substitute and take the limit.
pub fn contract_expression(e: &Element, spec: &ContractionSpec) -> Result<Element> {
    let s = spec.substitute(e, 0)?;
    limit(&spec.reduced(s), &render_element(e))
}

pub fn contract_tensor(t: &TensorElement, spec: &ContractionSpec) -> Result<TensorElement> {
    let s = spec.substitute_tensor(t, 0)?;
    limit_tensor(&s, &render_tensor(t))
}

/// Contracted Hopf algebra: commutators, coproducts (factorwise), antipodes
/// and counits of the target generators.
pub fn contract_presentation(h: &HopfPresentation, spec: &ContractionSpec, name: &str) -> Result<HopfPresentation> {
    let alg = spec.target.clone();
    let mut coproducts = BTreeMap::new();
    let mut antipodes = BTreeMap::new();
    let mut counits = BTreeMap::new();
    let parts: Vec<_> = spec
        .targets
        .par_iter()
        .map(|t| {
            let src = Element::gen(t.source);
            let d = spec.contract_tensor_scaled(&h.coproduct(&src)?, &t.scale, &format!("Δ({})", t.target))?;
            let s = spec.contract_scaled(&h.antipode(&src)?, &t.scale, &format!("S({})", t.target))?;
            let e = spec.contract_scaled(&Element::scalar(h.counit(&src)?), &t.scale, &format!("ε({})", t.target))?;
            Ok((t.target, d, s, e.constant_part()))
        })
        .collect::<Result<_>>()?;
    for (g, d, s, e) in parts {
        coproducts.insert(g, d);
        antipodes.insert(g, s);
        counits.insert(g, e);
    }
    HopfPresentation::new(name, alg, coproducts, antipodes, counits)
}

/// Contracted twist, built on the contracted algebra `target`.
pub fn contract_twist(f: &TwistElement, spec: &ContractionSpec, target: &HopfPresentation, name: &str) -> Result<TwistElement> {
    let e = spec.contract_tensor_scaled(f.exponent(), &Coeff::one(), &format!("log {}", f.name()))?;
    TwistElement::new(name, e, target)
}

/// Entries (commutators, coproducts, antipodes) where `a` and `b` differ
/// after discarding scalar terms rejected by `keep` on both sides.
pub fn hopf_mismatches(a: &HopfPresentation, b: &HopfPresentation, keep: impl Fn(&Mono) -> bool + Copy) -> Vec<String> {
    let gens = a.generators();
    if gens != b.generators() {
        return vec!["generators".into()];
    }
    let mut out = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            let d = a.algebra().bracket(*x, *y).filter_params(keep) - b.algebra().bracket(*x, *y).filter_params(keep);
            if !d.is_zero() {
                out.push(format!("[{}, {}]", x, y));
            }
        }
    }
    for g in &gens {
        let d = a.coproduct_table()[g].filter_params(keep) - b.coproduct_table()[g].filter_params(keep);
        if !d.is_zero() {
            out.push(format!("Δ({})", g));
        }
        let d = a.antipode_table()[g].filter_params(keep) - b.antipode_table()[g].filter_params(keep);
        if !d.is_zero() {
            out.push(format!("S({})", g));
        }
    }
    out
}

pub fn rot(k: u8, l: u8) -> Gen {
    Gen::new(Family::R, &[k, l])
}

pub fn vg(i: u8) -> Gen {
    Gen::new(Family::Vg, &[i])
}

pub fn b(i: u8) -> Gen {
    Gen::new(Family::B, &[i])
}

pub fn tau() -> Gen {
    Gen::new(Family::Tau, &[])
}

pub fn galilei_group_generators() -> Vec<Gen> {
    let mut g = Vec::new();
    for k in 1..4 {
        for l in 1..4 {
            g.push(rot(k, l));
        }
    }
    g.extend((1..4).map(vg));
    g.extend((1..4).map(b));
    g.push(tau());
    g
}

/// `binom(1/2, k)`.
fn half_binomial(k: u32) -> Q {
    let mut acc = q(1, 1);
    for j in 0..k {
        acc = acc * (q(1, 2) - q(j as i128, 1)) / q(j as i128 + 1, 1);
    }
    acc
}

fn group_images(frame: &Presentation, order: u32) -> HashMap<Gen, Element> {
    let el = Element::gen;
    let un = TruncationPolicy::unbounded();
    let mut v2 = Element::zero();
    for i in 1..4 {
        v2 += frame.multiply(&el(vg(i)), &el(vg(i)));
    }
    // γ = Σ_k binom(1/2,k) v^{2k} c^{−2k};  (γ−1)/v² = Σ_{k≥1} binom(1/2,k) v^{2(k−1)} c^{−2k}
    let mut gamma = Element::one();
    let mut gm1_over_v2 = Element::zero();
    let mut pow = Element::one();
    for k in 1..=order {
        let coef = Coeff::monomial(GaussRat::real(half_binomial(k)), Mono::param(Param::C, -2 * k as i8));
        gm1_over_v2 += pow.scale(&coef, &un);
        pow = frame.multiply(&pow, &v2);
        gamma += pow.scale(&coef, &un);
    }
    let cinv = c_pow(-1);
    let mut out = HashMap::new();
    out.insert(poisson::lam(0, 0), gamma);
    for i in 1..4u8 {
        out.insert(poisson::lam(i, 0), el(vg(i)).scale(&cinv, &un));
        let mut l0i = Element::zero();
        for k in 1..4 {
            l0i += frame.multiply(&el(vg(k)), &el(rot(k, i)));
        }
        out.insert(poisson::lam(0, i), l0i.scale(&cinv, &un));
        out.insert(poisson::trans(i), el(b(i)));
        for k in 1..4u8 {
            let mut e = el(rot(k, i));
            for l in 1..4u8 {
                let vv = frame.product(&[el(vg(k)), el(vg(l)), el(rot(l, i))]);
                e += frame.multiply(&gm1_over_v2, &vv);
            }
            out.insert(poisson::lam(k, i), e);
        }
    }
    out.insert(poisson::trans(0), el(tau()).scale(&c_pow(1), &un));
    out
}

/// Contracted group commutators from a table of `[Λ, a]`, `[a, a]`,
/// `[Λ, Λ]` relations.
pub fn contract_group_table(t: &CommutatorTable, spec: &ContractionSpec) -> Result<CommutatorTable> {
    spec.contract_table(|x, y| {
        Ok(if x <= y {
            t.get(&(x, y)).cloned().unwrap_or_default()
        } else {
            -t.get(&(y, x)).cloned().unwrap_or_default()
        })
    })
}

/// Contracted undeformed group coproducts.
pub fn contract_group_coproducts(spec: &ContractionSpec) -> Result<BTreeMap<Gen, TensorElement>> {
    let src = poisson::group_coproducts();
    spec.targets
        .iter()
        .map(|t| Ok((t.target, spec.contract_tensor_scaled(&src[&t.source], &t.scale, &format!("Δ({})", t.target))?)))
        .collect()
}

fn rotation_var(g: Gen) -> Option<usize> {
    (g.family == Family::R).then(|| ((g.idx[0] - 1) * 3 + g.idx[1] - 1) as usize)
}

/// Reduced Gröbner basis of `RR^T = 1`, `R^TR = 1`.
pub fn rotation_basis() -> &'static [QPoly] {
    static GB: OnceLock<Vec<QPoly>> = OnceLock::new();
    GB.get_or_init(|| {
        let mut rels = Vec::new();
        for a in 0..3usize {
            for bb in a..3usize {
                for transpose in [false, true] {
                    let mut p = QPoly::zero();
                    for m in 0..3usize {
                        let (x, y) = if transpose { (a * 3 + m, bb * 3 + m) } else { (m * 3 + a, m * 3 + bb) };
                        p.add_term(Monomial::var(9, x).mul(&Monomial::var(9, y)), rational(1));
                    }
                    if a == bb {
                        p.add_term(Monomial::one(9), rational(-1));
                    }
                    rels.push(p);
                }
            }
        }
        groebner_basis(&rels)
    })
}

/// Normal form modulo rotation orthogonality.
pub fn reduce_rotations(f: &Element) -> Element {
    reduce_modulo(f, 9, rotation_var, |v| rot(v as u8 / 3 + 1, v as u8 % 3 + 1), rotation_basis())
}

fn gc(re: i128, im: i128, p: Param) -> Coeff {
    Coeff::monomial(GaussRat::new(q(re, 1), q(im, 1)), Mono::param(p, 1))
}

fn kd(a: u8, b: u8) -> i128 {
    (a == b) as i128
}

/// Printed relations of the contracted deformed group, keyed in generator
/// order (`[b^i, τ]` is stored as the negative of the printed `[τ, b^i]`).
/// κ and κ̂ are read as κ̄, κ̄̂.
pub fn printed_galilei_group_table(s: poisson::Sectors) -> CommutatorTable {
    let un = TruncationPolicy::unbounded();
    let el = Element::gen;
    let ints = |e: Element, n: i128| e.scale_gauss(GaussRat::int(n));
    let vv = |a: u8, c: u8| Element::gen_word(if a <= c { vec![vg(a), vg(c)] } else { vec![vg(c), vg(a)] });
    let vr = |a: u8, k: u8, l: u8| Element::gen_word(vec![rot(k, l), vg(a)]);
    let kappa = |x: Element, re: i128, im: i128| if s.kappa { x.scale(&gc(re, im, Param::KbarInv), &un) } else { Element::zero() };
    let hat = |x: Element, re: i128, im: i128| if s.hat { x.scale(&gc(re, im, Param::KhbarInv), &un) } else { Element::zero() };
    let half_xi = |x: Element| {
        if s.xi {
            x.scale(&Coeff::monomial(GaussRat::new(q(0, 1), q(1, 2)), Mono::param(Param::XiBar, 1)), &un)
        } else {
            Element::zero()
        }
    };
    let mut v2 = Element::zero();
    for r in 1..4 {
        v2 += vv(r, r);
    }
    let mut t = CommutatorTable::new();
    let mut put = |k: (Gen, Gen), v: Element| {
        if !v.is_zero() {
            t.insert(k, v);
        }
    };
    for k in 1..4u8 {
        for l in 1..4u8 {
            // δ_{2l}R^k_1 − δ_{1l}R^k_2
            let rl = ints(el(rot(k, 1)), kd(2, l)) - ints(el(rot(k, 2)), kd(1, l));
            for i in 1..4u8 {
                let mut sum = Element::zero();
                for r in 1..4 {
                    sum += vr(r, r, l);
                }
                let a = vr(k, i, l) - ints(sum, kd(k, i));
                let h = Element::gen_word(vec![rot(k, 1), vg(i)]).scale_gauss(GaussRat::int(kd(2, l)))
                    - Element::gen_word(vec![rot(k, 2), vg(i)]).scale_gauss(GaussRat::int(kd(1, l)));
                put((rot(k, l), b(i)), kappa(a, 0, -1) + hat(h, 1, 0));
            }
            // (δ_{2l}R^k_1 − δ_{1l}R^k_2) − (δ^k_2R_{1l} − δ^k_1R_{2l})
            let rr = rl.clone() - ints(el(rot(1, l)), kd(k, 2)) + ints(el(rot(2, l)), kd(k, 1));
            put((rot(k, l), tau()), hat(rr, 1, 0));
        }
    }
    for i in 1..4u8 {
        for j in 1..4u8 {
            let a = vv(i, j) - ints(v2.clone(), kd(i, j)).scale_gauss(GaussRat::real(q(1, 2)));
            put((vg(i), b(j)), kappa(a, 0, -1));
        }
        let rot2 = ints(el(vg(1)), kd(i, 2)) - ints(el(vg(2)), kd(i, 1));
        put((vg(i), tau()), kappa(el(vg(i)), 0, -1) + hat(rot2, -1, 0));
        // −[τ, b^i]
        let b2 = ints(el(b(1)), kd(i, 2)) - ints(el(b(2)), kd(i, 1));
        let xi_part = el(rot(i, 3)) + ints(Element::one(), kd(i, 3));
        put((b(i), tau()), kappa(el(b(i)), 0, 1) + hat(b2, 0, -1) - half_xi(xi_part));
        for j in i + 1..4u8 {
            put((b(i), b(j)), half_xi(vr(i, j, 3) - vr(j, i, 3)));
        }
    }
    t
}

/// Printed undeformed Galilei group coproducts.
pub fn printed_galilei_group_coproducts() -> BTreeMap<Gen, TensorElement> {
    let el = Element::gen;
    let one = Element::one;
    let ts = TensorElement::simple;
    let mut out = BTreeMap::new();
    for k in 1..4u8 {
        for l in 1..4u8 {
            let mut t = TensorElement::zero(2);
            for m in 1..4 {
                t += ts(&[el(rot(k, m)), el(rot(m, l))]);
            }
            out.insert(rot(k, l), t);
        }
        let mut dv = ts(&[el(vg(k)), one()]);
        let mut db = ts(&[el(b(k)), one()]) + ts(&[el(vg(k)), el(tau())]);
        for j in 1..4 {
            dv += ts(&[el(rot(k, j)), el(vg(j))]);
            db += ts(&[el(rot(k, j)), el(b(j))]);
        }
        out.insert(vg(k), dv);
        out.insert(b(k), db);
    }
    out.insert(tau(), ts(&[el(tau()), one()]) + ts(&[one(), el(tau())]));
    out
}

/// Entries of `a − b` that survive reduction modulo rotation orthogonality.
pub fn group_table_difference(a: &CommutatorTable, b: &CommutatorTable) -> CommutatorTable {
    poisson::table_difference(a, b, reduce_rotations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poincare::kappa_poincare;

    #[test]
    fn boost_alone_diverges() {
        let h = kappa_poincare(TruncationPolicy::default()).unwrap();
        let spec = ContractionSpec::galilei_algebra("galilei", h.algebra()).unwrap();
        let err = contract_expression(&Element::gen(Gen::m(0, 1)), &spec).unwrap_err();
        assert!(matches!(err, TwistError::DivergentLimit { .. }));
    }

    #[test]
    fn momentum_rescaling() {
        let h = kappa_poincare(TruncationPolicy::default()).unwrap();
        let spec = ContractionSpec::galilei_algebra("galilei", h.algebra()).unwrap();
        // c-independent input is a fixed point up to renaming
        let e = Element::gen(Gen::p(2));
        assert_eq!(contract_expression(&e, &spec).unwrap(), Element::gen(Gen::pi(2)));
        // P₀ alone vanishes in the limit
        assert!(contract_expression(&Element::gen(Gen::p(0)), &spec).unwrap().is_zero());
    }

    #[test]
    fn half_binomials() {
        assert_eq!(half_binomial(1), q(1, 2));
        assert_eq!(half_binomial(2), q(-1, 8));
        assert_eq!(half_binomial(3), q(1, 16));
    }

    #[test]
    fn rotation_relation_reduces() {
        let mut f = Element::zero();
        for m in 1..4 {
            f += Element::gen_word(vec![rot(m, 2), rot(m, 2)]);
        }
        assert_eq!(reduce_rotations(&f), Element::one());
    }
}
