//! Wedge algebra over the classical Poincaré Lie algebra, Schouten brackets
//! and Yang–Baxter checks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::element::{Element, TensorElement};
use crate::error::{Result, TwistError};
use crate::generator::{eta, Gen};
use crate::poincare::poincare_classical;
use crate::presentation::Presentation;
use crate::report::{Report, Status};
use crate::scalar::{q, Coeff, GaussRat, Mono, Param, TruncationPolicy, Q};

/// Real structure constants `[T_A, T_B] = f_{AB}^C T_C` (the quantum
/// brackets carry an extra factor `i`).
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    basis: Vec<Gen>,
    index: HashMap<Gen, usize>,
    f: Vec<Vec<Vec<(usize, Q)>>>,
    real: Presentation,
}

impl LieAlgebra {
    /// Reads `f` off a presentation whose brackets are `i·(real linear)`.
    pub fn from_presentation(p: &Presentation) -> Result<Self> {
        let basis: Vec<Gen> = p.generators().collect();
        let index: HashMap<Gen, usize> = basis.iter().enumerate().map(|(k, g)| (*g, k)).collect();
        let n = basis.len();
        let mut f = vec![vec![Vec::new(); n]; n];
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let v = p.bracket(basis[a], basis[b]);
                let mut real = Element::zero();
                for (w, c) in v.iter() {
                    let g = c.as_gauss().filter(|g| g.re == Q::from_integer(0)).ok_or_else(|| {
                        TwistError::Unsupported(format!("[{},{}] is not i times a real constant", basis[a], basis[b]))
                    })?;
                    if w.len() != 1 {
                        return Err(TwistError::Unsupported(format!(
                            "[{},{}] is not linear in the generators",
                            basis[a], basis[b]
                        )));
                    }
                    f[a][b].push((index[&w[0]], g.im));
                    real += Element::gen(w[0]).scale_gauss(GaussRat::real(g.im));
                }
                if a > b {
                    brackets.push((basis[a], basis[b], real));
                }
            }
        }
        let real = Presentation::new("lie-real", basis.clone(), brackets, TruncationPolicy::unbounded())?;
        let g = LieAlgebra { basis, index, f, real };
        g.check_jacobi()?;
        Ok(g)
    }

    /// Classical Poincaré algebra, the κ→∞ limit of the deformed tables.
    pub fn poincare() -> Self {
        let h = poincare_classical(TruncationPolicy::unbounded()).expect("classical tables");
        LieAlgebra::from_presentation(h.algebra()).expect("classical structure constants")
    }

    pub fn basis(&self) -> &[Gen] {
        &self.basis
    }

    pub fn index_of(&self, g: &Gen) -> Result<usize> {
        self.index
            .get(g)
            .copied()
            .ok_or_else(|| TwistError::Mismatch(format!("{} is not a basis element", g)))
    }

    pub fn structure(&self, a: usize, b: usize) -> &[(usize, Q)] {
        &self.f[a][b]
    }

    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.basis.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for &(d, f1) in &self.f[y][z] {
                            for &(e, f2) in &self.f[x][d] {
                                *acc.entry(e).or_insert_with(|| q(0, 1)) += f1 * f2;
                            }
                        }
                    }
                    if acc.values().any(|v| *v != q(0, 1)) {
                        return Err(TwistError::Registry(format!(
                            "Jacobi identity fails for {}, {}, {}",
                            self.basis[a], self.basis[b], self.basis[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `Σ_{A<B} r^{AB} T_A∧T_B` with `a∧b = a⊗b − b⊗a`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct WedgeBivector {
    terms: BTreeMap<(Gen, Gen), Coeff>,
}

impl WedgeBivector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c · (a∧b)` for linear combinations `a`, `b` of basis generators.
    pub fn wedge(a: &Element, b: &Element, c: &Coeff) -> Self {
        let mut out = WedgeBivector::zero();
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                assert!(wa.len() == 1 && wb.len() == 1, "wedge of non-linear elements");
                let coef = c.mul_trunc(&ca.mul_trunc(cb, &TruncationPolicy::unbounded()), &TruncationPolicy::unbounded());
                out.add_wedge(wa[0], wb[0], coef);
            }
        }
        out
    }

    pub fn add_wedge(&mut self, a: Gen, b: Gen, c: Coeff) {
        if a == b || c.is_zero() {
            return;
        }
        let (key, c) = if a < b { ((a, b), c) } else { ((b, a), -c) };
        let e = self.terms.entry(key).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Gen, Gen), &Coeff)> {
        self.terms.iter()
    }

    /// Full antisymmetric components `r^{AB}` with `r = Σ r^{AB} T_A⊗T_B`.
    pub fn component(&self, a: Gen, b: Gen) -> Coeff {
        if a < b {
            self.terms.get(&(a, b)).cloned().unwrap_or_default()
        } else if a > b {
            -self.terms.get(&(b, a)).cloned().unwrap_or_default()
        } else {
            Coeff::zero()
        }
    }

    /// As a rank-2 tensor `Σ r^{AB}(T_A⊗T_B − T_B⊗T_A)`.
    pub fn to_tensor(&self) -> TensorElement {
        let mut t = TensorElement::zero(2);
        for ((a, b), c) in &self.terms {
            t.add_term(vec![vec![*a], vec![*b]], c.clone());
            t.add_term(vec![vec![*b], vec![*a]], -c.clone());
        }
        t
    }

    pub fn filter_params(&self, keep: impl Fn(&Mono) -> bool) -> Self {
        let mut out = WedgeBivector::zero();
        for ((a, b), c) in &self.terms {
            out.add_wedge(*a, *b, c.filter(&keep));
        }
        out
    }
}

impl std::ops::Add for WedgeBivector {
    type Output = WedgeBivector;
    fn add(mut self, o: WedgeBivector) -> WedgeBivector {
        for ((a, b), c) in o.terms {
            self.add_wedge(a, b, c);
        }
        self
    }
}

impl fmt::Display for WedgeBivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((a, b), c)| format!("({})*{}^{}", c, a, b)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Σ_{A<B<C} t^{ABC} T_A∧T_B∧T_C` with the unnormalized six-term wedge.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct WedgeTrivector {
    terms: BTreeMap<(Gen, Gen, Gen), Coeff>,
}

impl WedgeTrivector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Adds `c · a∧b∧c`, reordering with the permutation sign.
    pub fn add_wedge(&mut self, a: Gen, b: Gen, cg: Gen, c: Coeff) {
        if a == b || b == cg || a == cg || c.is_zero() {
            return;
        }
        let mut v = [a, b, cg];
        let mut sign = 1;
        for i in 0..3 {
            for j in 0..2 - i {
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        let key = (v[0], v[1], v[2]);
        let e = self.terms.entry(key).or_default();
        *e += if sign > 0 { c } else { -c };
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `c · (a∧b∧d)` for linear combinations of basis generators.
    pub fn wedge3(a: &Element, b: &Element, d: &Element, c: &Coeff) -> Self {
        let t = TruncationPolicy::unbounded();
        let mut out = WedgeTrivector::zero();
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                for (wd, cd) in d.iter() {
                    let coef = c.mul_trunc(ca, &t).mul_trunc(cb, &t).mul_trunc(cd, &t);
                    out.add_wedge(wa[0], wb[0], wd[0], coef);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Gen, Gen, Gen), &Coeff)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = WedgeTrivector::zero();
        for ((a, b, d), v) in &self.terms {
            out.add_wedge(*a, *b, *d, v.mul_trunc(c, &TruncationPolicy::unbounded()));
        }
        out
    }
}

impl std::ops::Sub for WedgeTrivector {
    type Output = WedgeTrivector;
    fn sub(mut self, o: WedgeTrivector) -> WedgeTrivector {
        for ((a, b, d), c) in o.terms {
            self.add_wedge(a, b, d, -c);
        }
        self
    }
}

impl std::ops::Add for WedgeTrivector {
    type Output = WedgeTrivector;
    fn add(mut self, o: WedgeTrivector) -> WedgeTrivector {
        for ((a, b, d), c) in o.terms {
            self.add_wedge(a, b, d, c);
        }
        self
    }
}

impl fmt::Display for WedgeTrivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b, d), c)| format!("({})*{}^{}^{}", c, a, b, d))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn check_basis(r: &WedgeBivector, g: &LieAlgebra) -> Result<()> {
    for ((a, b), _) in r.terms() {
        g.index_of(a)?;
        g.index_of(b)?;
    }
    Ok(())
}

/// Leg-placement expansion `[r₁₂, r₁₃ + r₂₃] + [r₁₃, r₂₃]` in the rank-3
/// tensor algebra of `g`, symmetrized in the two arguments.
pub fn schouten(r1: &WedgeBivector, r2: &WedgeBivector, g: &LieAlgebra) -> Result<WedgeTrivector> {
    check_basis(r1, g)?;
    check_basis(r2, g)?;
    let half = Coeff::rat(1, 2);
    let mut full = leg_expansion(r1, r2, g)?;
    for (k, c) in leg_expansion(r2, r1, g)? {
        *full.entry(k).or_default() += &c;
    }
    full.retain(|_, c| !c.is_zero());
    Ok(antisymmetrize(&full)?.scale(&half))
}

/// Raw rank-3 components; only the sum over both argument orders is
/// totally antisymmetric.
fn leg_expansion(r1: &WedgeBivector, r2: &WedgeBivector, g: &LieAlgebra) -> Result<HashMap<[Gen; 3], Coeff>> {
    let alg = &g.real;
    let (t1, t2) = (r1.to_tensor(), r2.to_tensor());
    let (a12, a13) = (t1.embed3([0, 1]), t1.embed3([0, 2]));
    let (b13, b23) = (t2.embed3([0, 2]), t2.embed3([1, 2]));
    let total = alg.tensor_commutator(&a12, &(b13 + b23.clone())) + alg.tensor_commutator(&a13, &b23);
    let mut full: HashMap<[Gen; 3], Coeff> = HashMap::new();
    for (ws, c) in total.iter() {
        if ws.iter().any(|w| w.len() != 1) {
            return Err(TwistError::Unsupported("Schouten expansion left a nonlinear leg".into()));
        }
        full.insert([ws[0][0], ws[1][0], ws[2][0]], c.clone());
    }
    Ok(full)
}

/// Projects a rank-3 component array onto `Λ³`, failing if it is not
/// already totally antisymmetric.
fn antisymmetrize(full: &HashMap<[Gen; 3], Coeff>) -> Result<WedgeTrivector> {
    let mut out = WedgeTrivector::zero();
    for (k, c) in full {
        let sorted = k[0] < k[1] && k[1] < k[2];
        let perms = [
            ([k[1], k[0], k[2]], -1),
            ([k[0], k[2], k[1]], -1),
            ([k[2], k[1], k[0]], -1),
            ([k[1], k[2], k[0]], 1),
            ([k[2], k[0], k[1]], 1),
        ];
        for (p, s) in perms {
            let other = full.get(&p).cloned().unwrap_or_default();
            let expect = if s > 0 { c.clone() } else { -c.clone() };
            if other != expect {
                return Err(TwistError::Unsupported(format!(
                    "Schouten output is not totally antisymmetric at {}, {}, {}",
                    k[0], k[1], k[2]
                )));
            }
        }
        if sorted {
            out.add_wedge(k[0], k[1], k[2], c.clone());
        }
    }
    Ok(out)
}

/// Component formula `T^{XYZ} = Cyc f_{AC}^X r^{AY} r^{CZ}`, polarized.
/// Independent of the tensor-algebra route; used as a cross-check.
pub fn schouten_components(r1: &WedgeBivector, r2: &WedgeBivector, g: &LieAlgebra) -> Result<WedgeTrivector> {
    check_basis(r1, g)?;
    check_basis(r2, g)?;
    let n = g.basis.len();
    let t = TruncationPolicy::unbounded();
    let comp = |r: &WedgeBivector| -> Vec<Vec<Coeff>> {
        (0..n).map(|a| (0..n).map(|b| r.component(g.basis[a], g.basis[b])).collect()).collect()
    };
    let (c1, c2) = (comp(r1), comp(r2));
    // raw[x][y][z] = Σ f_{ac}^x (r1^{ay} r2^{cz} + r2^{ay} r1^{cz}) / 2
    let mut raw: HashMap<(usize, usize, usize), Coeff> = HashMap::new();
    for a in 0..n {
        for cc in 0..n {
            for &(x, fv) in g.structure(a, cc) {
                let fv = Coeff::from_q(fv * q(1, 2));
                for y in 0..n {
                    for z in 0..n {
                        let v = c1[a][y].mul_trunc(&c2[cc][z], &t) + c2[a][y].mul_trunc(&c1[cc][z], &t);
                        if v.is_zero() {
                            continue;
                        }
                        *raw.entry((x, y, z)).or_default() += v.mul_trunc(&fv, &t);
                    }
                }
            }
        }
    }
    let mut full: HashMap<[Gen; 3], Coeff> = HashMap::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut s = Coeff::zero();
                for k in [(x, y, z), (y, z, x), (z, x, y)] {
                    if let Some(v) = raw.get(&k) {
                        s += v;
                    }
                }
                if !s.is_zero() {
                    full.insert([g.basis[x], g.basis[y], g.basis[z]], s);
                }
            }
        }
    }
    antisymmetrize(&full)
}

pub fn check_cybe(id: &str, r: &WedgeBivector, g: &LieAlgebra) -> Result<Report> {
    let s = schouten(r, r, g)?;
    let mut rep = Report::new(id, if s.is_zero() { Status::Pass } else { Status::Fail }, &TruncationPolicy::unbounded());
    if !s.is_zero() {
        rep.residual = s.to_string();
    }
    Ok(rep)
}

pub fn check_mybe(id: &str, r: &WedgeBivector, rhs: &WedgeTrivector, g: &LieAlgebra) -> Result<Report> {
    let s = schouten(r, r, g)?;
    let d = s - rhs.clone();
    let mut rep = Report::new(id, if d.is_zero() { Status::Pass } else { Status::Fail }, &TruncationPolicy::unbounded());
    if !d.is_zero() {
        rep.residual = d.to_string();
    }
    Ok(rep)
}

fn p_up(mu: u8) -> Element {
    Element::gen(Gen::p(mu)).scale_gauss(GaussRat::int(eta(mu)))
}

/// `M_{μν} = η_{μμ}η_{νν} M^{μν}`.
fn m_low(mu: u8, nu: u8) -> Element {
    crate::poincare::m_up(mu, nu).scale_gauss(GaussRat::int(eta(mu) * eta(nu)))
}

/// `r_κ` built from its components `r^{μν;α} = (1/2κ)(δ^μ₀η^{να} − δ^ν₀η^{μα})`
/// against `M_{μν}∧P_α`; the loader asserts the re-summed form
/// `(1/κ) M_{0μ}∧P^μ`.
pub fn r_kappa() -> WedgeBivector {
    let kinv = Coeff::param(Param::Kinv);
    let mut from_components = WedgeBivector::zero();
    for mu in 0..4u8 {
        for nu in 0..4u8 {
            for al in 0..4u8 {
                let d = |a: u8, b: u8| -> i128 { if a == b { 1 } else { 0 } };
                let e = |a: u8, b: u8| -> i128 { if a == b { eta(a) } else { 0 } };
                let c = d(mu, 0) * e(nu, al) - d(nu, 0) * e(mu, al);
                if c == 0 {
                    continue;
                }
                let coef = kinv.scale(GaussRat::real(q(c, 2)));
                from_components = from_components + WedgeBivector::wedge(&m_low(mu, nu), &Element::gen(Gen::p(al)), &coef);
            }
        }
    }
    let mut resummed = WedgeBivector::zero();
    for mu in 0..4u8 {
        resummed = resummed + WedgeBivector::wedge(&m_low(0, mu), &p_up(mu), &kinv);
    }
    assert_eq!(from_components, resummed, "r_kappa component form does not re-sum");
    from_components
}

/// `r_κ̂ = (1/2κ̂) M₁₂∧P₀`.
pub fn r_kappa_hat() -> WedgeBivector {
    let c = Coeff::monomial(GaussRat::real(q(1, 2)), Mono::param(Param::Khinv, 1));
    WedgeBivector::wedge(&m_low(1, 2), &Element::gen(Gen::p(0)), &c)
}

/// `r_ξ = (ξ/2) P₃∧P₀`.
pub fn r_xi() -> WedgeBivector {
    let c = Coeff::monomial(GaussRat::real(q(1, 2)), Mono::param(Param::Xi, 1));
    WedgeBivector::wedge(&Element::gen(Gen::p(3)), &Element::gen(Gen::p(0)), &c)
}

/// `(1/κ²) Σ_{μ<ν} M_{μν}∧P^μ∧P^ν`.
pub fn mybe_rhs() -> WedgeTrivector {
    let k2 = Coeff::param_pow(Param::Kinv, 2);
    let mut t = WedgeTrivector::zero();
    for mu in 0..4u8 {
        for nu in mu + 1..4 {
            t = t + WedgeTrivector::wedge3(&m_low(mu, nu), &p_up(mu), &p_up(nu), &k2);
        }
    }
    t
}

/// Renders a bivector as `Σ r^{AB} T_A ∧ T_B` in the expression grammar's
/// tensor form.
pub fn render_bivector(r: &WedgeBivector) -> String {
    crate::render::render_tensor(&r.to_tensor())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_holds_for_poincare() {
        LieAlgebra::poincare().check_jacobi().unwrap();
    }

    #[test]
    fn kappa_matrix_satisfies_modified_equation() {
        let g = LieAlgebra::poincare();
        let s = schouten(&r_kappa(), &r_kappa(), &g).unwrap();
        assert_eq!(s, mybe_rhs());
    }

    #[test]
    fn both_routes_agree() {
        let g = LieAlgebra::poincare();
        let r = r_kappa() + r_kappa_hat() + r_xi();
        assert_eq!(schouten(&r, &r, &g).unwrap(), schouten_components(&r, &r, &g).unwrap());
    }
}
