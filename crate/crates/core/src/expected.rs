//! Closed forms as printed, entered by hand and series-expanded. These are
//! the comparison targets for the generated tables, never their source.

use std::collections::BTreeMap;

use crate::element::{Element, TensorElement};
use crate::error::Result;
use crate::generator::Gen;
use crate::hopf::HopfPresentation;
use crate::poincare::{boost_energy, lorentz_generators, m_up, p_low};
use crate::presentation::Presentation;
use crate::scalar::{q, Coeff, GaussRat, Mono, Param, Q};
use crate::series::{cosm1_param, exp_param, expm1_over_param, sin_param};

fn pc(p: Param, num: i128, den: i128) -> Coeff {
    Coeff::monomial(GaussRat::real(q(num, den)), Mono::param(p, 1))
}

fn delta(a: u8, b: u8) -> i128 {
    (a == b) as i128
}

fn ints(e: Element, n: i128) -> Element {
    e.scale_gauss(GaussRat::int(n))
}

/// Recurring series of one algebra with a chosen mass parameter.
struct Fns<'a> {
    alg: &'a Presentation,
    kinv: Param,
    /// `e^{−P₀/κ}`
    em: Element,
    /// `e^{P₀/κ}`
    ep: Element,
    /// `κ(e^{−P₀/κ} − 1)`
    km: Element,
    /// `κ(e^{P₀/κ} − 1)`
    kp: Element,
}

impl<'a> Fns<'a> {
    fn new(alg: &'a Presentation, p0: &Element, kinv: Param) -> Result<Self> {
        Ok(Fns {
            alg,
            kinv,
            em: exp_param(alg, p0, kinv, q(-1, 1))?,
            ep: exp_param(alg, p0, kinv, q(1, 1))?,
            km: expm1_over_param(alg, p0, kinv, q(-1, 1))?,
            kp: expm1_over_param(alg, p0, kinv, q(1, 1))?,
        })
    }

    fn mul(&self, xs: &[Element]) -> Element {
        self.alg.product(xs)
    }

    fn t(&self, a: Element, b: Element) -> TensorElement {
        self.alg.tensor(&[a, b])
    }

    fn kinv(&self) -> Coeff {
        Coeff::param(self.kinv)
    }
}

/// Maps an entry stated for `M^{νμ}`-style signed elements onto the stored
/// generator `M[μ,ν]`.
fn store_m(out: &mut BTreeMap<Gen, TensorElement>, a: u8, b: u8, value: TensorElement) {
    let (s, g) = Gen::canonical(crate::generator::Family::M, &[a, b]).unwrap().unwrap();
    out.insert(g, value.scale_gauss(GaussRat::int(s as i128)));
}

fn store_m_elem(out: &mut BTreeMap<Gen, Element>, a: u8, b: u8, value: Element) {
    let (s, g) = Gen::canonical(crate::generator::Family::M, &[a, b]).unwrap().unwrap();
    out.insert(g, value.scale_gauss(GaussRat::int(s as i128)));
}

/// Sign choice for two terms of the twisted boost coproduct: the
/// `(1/κ)P_iP₃` term and the final `(δ^j_3P_i − δ^i_3P_j)⊗P_j(e^{−P₀/κ}−1)`
/// term. `Flipped` is the Hopf-consistent version.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoostSigns {
    Printed,
    Flipped,
}

impl BoostSigns {
    fn sign(self) -> i128 {
        match self {
            BoostSigns::Printed => 1,
            BoostSigns::Flipped => -1,
        }
    }
}

/// Printed coproducts of the canonically twisted algebra. `xi_scale`
/// multiplies ξ throughout (1 reproduces the print).
pub fn canonical_coproducts(kappa: &HopfPresentation, xi_scale: Q, signs: BoostSigns) -> Result<BTreeMap<Gen, TensorElement>> {
    let alg = kappa.algebra();
    let pol = alg.policy();
    let f = Fns::new(alg, &p_low(0), Param::Kinv)?;
    let half_xi = Coeff::monomial(GaussRat::real(xi_scale * q(1, 2)), Mono::param(Param::Xi, 1));
    let dk = |e: &Element| kappa.coproduct(e);
    let mut out = BTreeMap::new();
    for mu in 0..4u8 {
        out.insert(Gen::p(mu), dk(&p_low(mu))?);
    }
    let spatial: Vec<Element> = (1..4).map(p_low).collect();
    let energy = boost_energy(alg, &p_low(0), &spatial, Param::Kinv)?;
    let twisted_rot = |i: u8, j: u8| -> Element {
        // δ^j_3 P_i − δ^i_3 P_j
        ints(p_low(i), delta(j, 3)) - ints(p_low(j), delta(i, 3))
    };
    for g in lorentz_generators() {
        let (a, b) = (g.idx[0], g.idx[1]);
        if a != 0 {
            let (i, j) = (a, b);
            let v = dk(&m_up(i, j))? + f.t(twisted_rot(i, j), f.km.clone()).scale(&half_xi, pol);
            store_m(&mut out, i, j, v);
            continue;
        }
        let i = b;
        let mut v = dk(&m_up(i, 0))?;
        v += f.t(p_low(3), f.mul(&[p_low(i), f.em.clone()])).scale(&(-half_xi.clone()), pol);
        let left = ints(energy.clone(), delta(i, 3))
            + ints(f.mul(&[p_low(i), p_low(3)]).scale(&f.kinv(), pol), signs.sign());
        v += f.t(left, f.mul(&[f.km.clone(), f.em.clone()])).scale(&half_xi, pol);
        for j in 1..4u8 {
            let r = twisted_rot(i, j);
            if r.is_zero() {
                continue;
            }
            let right = f.mul(&[p_low(j), f.em.clone() - Element::one()]);
            v += f.t(r, right).scale(&half_xi, pol).scale_gauss(GaussRat::int(signs.sign()));
        }
        store_m(&mut out, i, 0, v);
    }
    Ok(out)
}

/// Printed antipodes of the canonically twisted algebra, with ξ scaled by
/// `xi_scale`.
pub fn canonical_antipodes(kappa: &HopfPresentation, xi_scale: Q) -> Result<BTreeMap<Gen, Element>> {
    let alg = kappa.algebra();
    let pol = alg.policy();
    let f = Fns::new(alg, &p_low(0), Param::Kinv)?;
    let xi = Coeff::monomial(GaussRat::real(xi_scale), Mono::param(Param::Xi, 1));
    let sk = |e: &Element| kappa.antipode(e);
    let mut out = BTreeMap::new();
    for mu in 0..4u8 {
        out.insert(Gen::p(mu), sk(&p_low(mu))?);
    }
    let spatial: Vec<Element> = (1..4).map(p_low).collect();
    let energy = boost_energy(alg, &p_low(0), &spatial, Param::Kinv)?;
    let rot = |i: u8, j: u8| ints(p_low(i), delta(j, 3)) - ints(p_low(j), delta(i, 3));
    for g in lorentz_generators() {
        let (a, b) = (g.idx[0], g.idx[1]);
        if a != 0 {
            let v = sk(&m_up(a, b))? - f.mul(&[rot(a, b), f.kp.clone()]).scale(&xi, pol);
            store_m_elem(&mut out, a, b, v);
            continue;
        }
        let i = b;
        let mut v = sk(&m_up(i, 0))?;
        for j in 1..4u8 {
            let r = rot(i, j);
            if r.is_zero() {
                continue;
            }
            // ξ(δ^j_3 P_i − δ^i_3 P_j) P_j e^{P₀/κ} (e^{P₀/κ} − 1)
            let ep_m1 = f.ep.clone() - Element::one();
            v = v - f.mul(&[r, p_low(j), f.ep.clone(), ep_m1]).scale(&xi, pol);
        }
        let e2 = exp_param(alg, &p_low(0), Param::Kinv, q(2, 1))?;
        v = v - f.mul(&[p_low(3), p_low(i), e2]).scale(&xi, pol);
        let inner = ints(energy.clone(), delta(i, 3)) - f.mul(&[p_low(i), p_low(3)]).scale(&f.kinv(), pol);
        v = v - f.mul(&[inner, f.ep.clone(), f.kp.clone()]).scale(&xi, pol);
        store_m_elem(&mut out, i, 0, v);
    }
    Ok(out)
}

/// Printed u-element `exp(iκξ P₃(e^{P₀/κ} − 1))` with ξ scaled.
pub fn canonical_u(kappa: &HopfPresentation, xi_scale: Q) -> Result<Element> {
    let alg = kappa.algebra();
    let f = Fns::new(alg, &p_low(0), Param::Kinv)?;
    let c = Coeff::monomial(GaussRat::new(q(0, 1), xi_scale), Mono::param(Param::Xi, 1));
    let x = f.mul(&[p_low(3), f.kp.clone()]).scale(&c, alg.policy());
    crate::series::exp_element(alg, &x)
}

/// `a ⊥ b = a⊗b + b⊗a`, the reading adopted for the undefined symbol.
fn perp(alg: &Presentation, a: Element, b: Element) -> TensorElement {
    alg.tensor(&[a.clone(), b.clone()]) + alg.tensor(&[b, a])
}

fn wedge(alg: &Presentation, a: Element, b: Element) -> TensorElement {
    alg.tensor(&[a.clone(), b.clone()]) - alg.tensor(&[b, a])
}

/// Printed coproducts of the Lie-twisted algebra.
pub fn lie_coproducts(kappa: &HopfPresentation) -> Result<BTreeMap<Gen, TensorElement>> {
    let alg = kappa.algebra();
    let pol = alg.policy();
    let f = Fns::new(alg, &p_low(0), Param::Kinv)?;
    let sin = sin_param(alg, &p_low(0), Param::Khinv, q(1, 2))?;
    let cm1 = cosm1_param(alg, &p_low(0), Param::Khinv, q(1, 2))?;
    let dk = |e: &Element| kappa.coproduct(e);
    let i_unit = GaussRat::i();
    let m12 = m_up(1, 2);
    let br = |a: &Element, b: &Element| alg.commutator(a, b);
    let hk = |n: i128| pc(Param::Khinv, n, 2);
    let kk = f.kinv();

    let mut out = BTreeMap::new();
    out.insert(Gen::p(0), dk(&p_low(0))?);
    out.insert(Gen::p(3), dk(&p_low(3))?);
    let sin_em = f.mul(&[sin.clone(), f.em.clone()]);
    let cm1_em = f.mul(&[cm1.clone(), f.em.clone()]);
    out.insert(
        Gen::p(1),
        dk(&p_low(1))? - f.t(sin.clone(), p_low(2)) + f.t(p_low(2), sin_em.clone())
            - f.t(cm1.clone(), p_low(1))
            - f.t(p_low(1), cm1_em.clone()),
    );
    out.insert(
        Gen::p(2),
        dk(&p_low(2))? + f.t(sin.clone(), p_low(1)) - f.t(p_low(1), sin_em.clone())
            - f.t(cm1.clone(), p_low(2))
            - f.t(p_low(2), cm1_em.clone()),
    );
    for g in lorentz_generators() {
        let (a, b) = (g.idx[0], g.idx[1]);
        if a != 0 {
            let m = m_up(a, b);
            let c1 = br(&m, &m12);
            let c2 = br(&c1, &m12);
            let v = dk(&m)? - wedge(alg, c1, sin.clone()).scale_gauss(i_unit)
                - perp(alg, c2, cm1.clone());
            store_m(&mut out, a, b, v);
            continue;
        }
        let i = b;
        let m = m_up(i, 0);
        let c1 = br(&m, &m12);
        let c2 = br(&c1, &m12);
        let pa = ints(p_low(2), delta(1, i)) - ints(p_low(1), delta(2, i));
        let pb = ints(p_low(1), delta(1, i)) + ints(p_low(2), delta(2, i));
        let mut v = dk(&m)?;
        v += f.t(m12.clone(), p_low(i)).scale(&-hk(1), pol);
        v += f.t(p_low(i), f.mul(&[m12.clone(), f.em.clone()])).scale(&hk(1), pol);
        v += f.t(c1.clone(), sin_em.clone()).scale_gauss(-i_unit);
        v += f.t(sin.clone(), c1.clone()).scale_gauss(i_unit);
        v = v - f.t(c2.clone(), cm1_em.clone());
        v = v - f.t(cm1.clone(), c2.clone());
        v += f.t(f.mul(&[m12.clone(), sin.clone()]), pa.clone()).scale(&-hk(1), pol);
        v += f.t(pa, f.mul(&[m12.clone(), sin.clone(), f.em.clone()])).scale(&-hk(1), pol);
        v += f.t(pb.clone(), f.mul(&[m12.clone(), cm1.clone(), f.em.clone()])).scale(&hk(1), pol);
        v += f.t(f.mul(&[m12.clone(), cm1.clone()]), pb).scale(&-hk(1), pol);
        for j in 1..4u8 {
            let mij = m_up(i, j);
            if mij.is_zero() {
                continue;
            }
            let d1 = br(&mij, &m12);
            let d2 = br(&d1, &m12);
            let pj = p_low(j);
            let qa = ints(p_low(2), delta(1, j)) - ints(p_low(1), delta(2, j));
            let qb = ints(p_low(1), delta(1, j)) + ints(p_low(2), delta(2, j));
            v += f.t(d1, f.mul(&[sin.clone(), pj.clone()])).scale(&kk.scale(i_unit), pol);
            v += f.t(d2, f.mul(&[cm1.clone(), pj])).scale(&kk, pol);
            v += f.t(f.mul(&[sin.clone(), mij.clone()]), qa).scale(&kk, pol);
            v += f.t(f.mul(&[cm1.clone(), mij]), qb).scale(&kk, pol);
        }
        store_m(&mut out, i, 0, v);
    }
    Ok(out)
}

fn k_up(i: u8, j: u8) -> Element {
    match Gen::canonical(crate::generator::Family::K, &[i, j]).expect("index in range") {
        None => Element::zero(),
        Some((s, g)) => Element::gen(g).scale_gauss(GaussRat::int(s as i128)),
    }
}

fn pi(mu: u8) -> Element {
    Element::gen(Gen::pi(mu))
}

/// Printed commutators of the contracted algebra (galilean generators
/// `K^{ij}`, `V^i`, `Π_μ`); `with_i` multiplies the `[V, Π_j]` display by `i`.
pub fn galilei_brackets(alg: &Presentation, with_i: bool) -> BTreeMap<(Gen, Gen), Element> {
    let mut out = BTreeMap::new();
    let rename = |e: Element| -> Element {
        let mut r = Element::zero();
        for (w, c) in e.iter() {
            let w: Vec<Gen> = w.iter().map(|g| Gen::k(g.idx[0], g.idx[1])).collect();
            r += Element::gen_word(w).scale(c, alg.policy());
        }
        r
    };
    let rot: Vec<Gen> = (1..4u8).flat_map(|i| (i + 1..4).map(move |j| Gen::k(i, j))).collect();
    let kb = Coeff::param(Param::KbarInv);
    let mut p2 = Element::zero();
    for k in 1..4 {
        p2 += alg.multiply(&pi(k), &pi(k));
    }
    for (n, a) in rot.iter().enumerate() {
        let (i, j) = (a.idx[0], a.idx[1]);
        for b in &rot[n + 1..] {
            out.insert((*a, *b), rename(crate::poincare::lorentz_bracket(i, j, b.idx[0], b.idx[1])));
        }
        for k in 1..4u8 {
            // [K^{ij}, V^k] = i(δ^{jk}V^i − δ^{ik}V^j), [K^{ij}, Π_k] = i(δ^j_kΠ_i − δ^i_kΠ_j)
            let v = ints(Element::gen(Gen::v(i)), delta(j, k)) - ints(Element::gen(Gen::v(j)), delta(i, k));
            out.insert((*a, Gen::v(k)), v.scale_gauss(GaussRat::i()));
            let p = ints(pi(i), delta(j, k)) - ints(pi(j), delta(i, k));
            out.insert((*a, Gen::pi(k)), p.scale_gauss(GaussRat::i()));
        }
    }
    for i in 1..4u8 {
        out.insert((Gen::v(i), Gen::pi(0)), pi(i).scale_gauss(GaussRat::i()));
        for j in 1..4u8 {
            // δ^{ij}(1/2κ̄)Π⃗² − (1/κ̄)Π_iΠ_j
            let v = ints(p2.clone(), delta(i, j)).scale(&pc(Param::KbarInv, 1, 2), alg.policy())
                - alg.multiply(&pi(i), &pi(j)).scale(&kb, alg.policy());
            out.insert((Gen::v(i), Gen::pi(j)), if with_i { v.scale_gauss(GaussRat::i()) } else { v });
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Printed Casimir `Π⃗² e^{Π₀/κ}` of the contracted algebra; κ is read as κ̄.
pub fn galilei_casimir(alg: &Presentation) -> Result<Element> {
    let mut p2 = Element::zero();
    for k in 1..4 {
        p2 += alg.multiply(&pi(k), &pi(k));
    }
    Ok(alg.multiply(&p2, &exp_param(alg, &pi(0), Param::KbarInv, q(1, 1))?))
}

/// Printed coproducts of the contracted canonically twisted algebra, on top
/// of the contracted κ̄ coproducts of `base`.
pub fn galilei_canonical_coproducts(base: &HopfPresentation, xi_scale: Q, signs: BoostSigns) -> Result<BTreeMap<Gen, TensorElement>> {
    let alg = base.algebra();
    let pol = alg.policy();
    let f = Fns::new(alg, &pi(0), Param::KbarInv)?;
    let half_xi = Coeff::monomial(GaussRat::real(xi_scale * q(1, 2)), Mono::param(Param::XiBar, 1));
    let dk = |e: &Element| base.coproduct(e);
    let twisted_rot = |i: u8, j: u8| ints(pi(i), delta(j, 3)) - ints(pi(j), delta(i, 3));
    let mut p2 = Element::zero();
    for k in 1..4 {
        p2 += alg.multiply(&pi(k), &pi(k));
    }
    let mut out = BTreeMap::new();
    for mu in 0..4u8 {
        out.insert(Gen::pi(mu), dk(&pi(mu))?);
    }
    for i in 1..4u8 {
        for j in i + 1..4u8 {
            let v = dk(&k_up(i, j))? + f.t(twisted_rot(i, j), f.km.clone()).scale(&half_xi, pol);
            out.insert(Gen::k(i, j), v);
        }
        let mut v = dk(&Element::gen(Gen::v(i)))?;
        v += f.t(pi(3), f.mul(&[pi(i), f.em.clone()])).scale(&(-half_xi.clone()), pol);
        let left = ints(p2.clone(), delta(i, 3)).scale(&pc(Param::KbarInv, 1, 2), pol)
            + ints(f.mul(&[pi(i), pi(3)]).scale(&f.kinv(), pol), signs.sign());
        v += f.t(left, f.mul(&[f.km.clone(), f.em.clone()])).scale(&half_xi, pol);
        for j in 1..4u8 {
            let r = twisted_rot(i, j);
            if !r.is_zero() {
                let t = f.t(r, f.mul(&[pi(j), f.em.clone() - Element::one()])).scale(&half_xi, pol);
                v += t.scale_gauss(GaussRat::int(signs.sign()));
            }
        }
        out.insert(Gen::v(i), v);
    }
    Ok(out)
}

/// Printed antipodes of the contracted canonically twisted algebra, with ξ̄
/// scaled by `xi_scale`.
pub fn galilei_canonical_antipodes(base: &HopfPresentation, xi_scale: Q) -> Result<BTreeMap<Gen, Element>> {
    let alg = base.algebra();
    let pol = alg.policy();
    let f = Fns::new(alg, &pi(0), Param::KbarInv)?;
    let xi = Coeff::monomial(GaussRat::real(xi_scale), Mono::param(Param::XiBar, 1));
    let sk = |e: &Element| base.antipode(e);
    let rot = |i: u8, j: u8| ints(pi(i), delta(j, 3)) - ints(pi(j), delta(i, 3));
    let mut p2 = Element::zero();
    for k in 1..4 {
        p2 += alg.multiply(&pi(k), &pi(k));
    }
    let e2 = exp_param(alg, &pi(0), Param::KbarInv, q(2, 1))?;
    let mut out = BTreeMap::new();
    for mu in 0..4u8 {
        out.insert(Gen::pi(mu), sk(&pi(mu))?);
    }
    for i in 1..4u8 {
        for j in i + 1..4u8 {
            let v = sk(&k_up(i, j))? - f.mul(&[rot(i, j), f.kp.clone()]).scale(&xi, pol);
            out.insert(Gen::k(i, j), v);
        }
        let mut v = sk(&Element::gen(Gen::v(i)))?;
        for j in 1..4u8 {
            let r = rot(i, j);
            if !r.is_zero() {
                let ep_m1 = f.ep.clone() - Element::one();
                v = v - f.mul(&[r, pi(j), f.ep.clone(), ep_m1]).scale(&xi, pol);
            }
        }
        v = v - f.mul(&[pi(3), pi(i), e2.clone()]).scale(&xi, pol);
        let inner = ints(p2.clone(), delta(i, 3)).scale(&pc(Param::KbarInv, 1, 2), pol)
            - f.mul(&[pi(i), pi(3)]).scale(&f.kinv(), pol);
        v = v - f.mul(&[inner, f.ep.clone(), f.kp.clone()]).scale(&xi, pol);
        out.insert(Gen::v(i), v);
    }
    Ok(out)
}
