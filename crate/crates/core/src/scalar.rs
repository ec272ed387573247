//! Exact coefficient arithmetic.
//!
//! A [`Coeff`] is a Laurent polynomial in the formal deformation parameters
//! with Gaussian-rational coefficients. A single term of it is a [`Scalar`].
//! Nothing in here touches floating point.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Exact rational number.
pub type Q = Ratio<i128>;

pub fn q(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

pub fn qi(n: i128) -> Q {
    Q::from_integer(n)
}

/// Gaussian rational `re + i·im`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Q,
    pub im: Q,
}

impl GaussRat {
    pub const fn new(re: Q, im: Q) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Q) -> Self {
        GaussRat { re, im: Q::zero() }
    }

    pub fn int(n: i128) -> Self {
        GaussRat::real(qi(n))
    }

    pub fn i() -> Self {
        GaussRat { re: Q::zero(), im: Q::one() }
    }

    pub fn zero() -> Self {
        GaussRat::default()
    }

    pub fn one() -> Self {
        GaussRat::int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re, im: -self.im }
    }

    pub fn scale(&self, s: Q) -> Self {
        GaussRat { re: self.re * s, im: self.im * s }
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.re * self.re + self.im * self.im;
        if n.is_zero() {
            return None;
        }
        Some(GaussRat { re: self.re / n, im: -self.im / n })
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        GaussRat { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: GaussRat) -> GaussRat {
        GaussRat { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re, im: -self.im }
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: GaussRat) -> GaussRat {
        GaussRat {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_q(&self.re)),
            (true, false) => {
                if self.im == Q::one() {
                    write!(f, "I")
                } else if self.im == -Q::one() {
                    write!(f, "-I")
                } else {
                    write!(f, "{}*I", fmt_q(&self.im))
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                let im = self.im.abs();
                if im == Q::one() {
                    write!(f, "({}{}I)", fmt_q(&self.re), sign)
                } else {
                    write!(f, "({}{}{}*I)", fmt_q(&self.re), sign, fmt_q(&im))
                }
            }
        }
    }
}

/// Formal deformation parameters.
///
/// `Kinv` is κ⁻¹, `Khinv` is κ̂⁻¹, `C` the light velocity (negative exponents
/// give c⁻¹), and the barred ones are the rescaled nonrelativistic parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Kinv,
    Khinv,
    Xi,
    C,
    KbarInv,
    KhbarInv,
    XiBar,
}

pub const NPARAM: usize = 7;

impl Param {
    pub const ALL: [Param; NPARAM] = [
        Param::Kinv,
        Param::Khinv,
        Param::Xi,
        Param::C,
        Param::KbarInv,
        Param::KhbarInv,
        Param::XiBar,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Name used by the expression grammar.
    pub fn name(self) -> &'static str {
        match self {
            Param::Kinv => "kinv",
            Param::Khinv => "khinv",
            Param::Xi => "xi",
            Param::C => "c",
            Param::KbarInv => "kbar_inv",
            Param::KhbarInv => "khbar_inv",
            Param::XiBar => "xibar",
        }
    }

    pub fn from_name(s: &str) -> Option<Param> {
        Param::ALL.iter().copied().find(|p| p.name() == s)
    }

    /// Parameters that are inverse masses: positive powers of the mass itself
    /// (negative exponents here) must not survive in final results.
    pub fn is_inverse_mass(self) -> bool {
        matches!(self, Param::Kinv | Param::Khinv | Param::KbarInv | Param::KhbarInv)
    }
}

/// Laurent monomial in the parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(pub [i8; NPARAM]);

impl Mono {
    pub fn one() -> Self {
        Mono::default()
    }

    pub fn param(p: Param, e: i8) -> Self {
        let mut m = Mono::default();
        m.0[p.index()] = e;
        m
    }

    pub fn exp(&self, p: Param) -> i8 {
        self.0[p.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for (a, b) in m.0.iter_mut().zip(o.0.iter()) {
            *a += *b;
        }
        m
    }

    pub fn pow(&self, n: i8) -> Mono {
        let mut m = *self;
        for a in m.0.iter_mut() {
            *a *= n;
        }
        m
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in Param::ALL {
            let e = self.exp(p);
            if e == 0 {
                continue;
            }
            let (name, n) = match (p, e) {
                (Param::C, e) if e < 0 => ("cinv", (-e) as usize),
                (p, e) => (p.name(), e.unsigned_abs() as usize),
            };
            for _ in 0..n {
                if !first {
                    write!(f, "*")?;
                }
                write!(f, "{}", name)?;
                first = false;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Per-parameter upper bound on the exponent kept in products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationPolicy {
    max: [Option<i8>; NPARAM],
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        let mut t = TruncationPolicy::unbounded();
        t.set(Param::Kinv, Some(4));
        t.set(Param::Khinv, Some(4));
        t.set(Param::Xi, Some(2));
        t.set(Param::XiBar, Some(2));
        t.set(Param::KbarInv, Some(4));
        t.set(Param::KhbarInv, Some(4));
        t
    }
}

impl TruncationPolicy {
    pub fn unbounded() -> Self {
        TruncationPolicy { max: [None; NPARAM] }
    }

    pub fn set(&mut self, p: Param, max: Option<i8>) -> &mut Self {
        self.max[p.index()] = max;
        self
    }

    pub fn with(mut self, p: Param, max: i8) -> Self {
        self.set(p, Some(max));
        self
    }

    pub fn max(&self, p: Param) -> Option<i8> {
        self.max[p.index()]
    }

    pub fn keeps(&self, m: &Mono) -> bool {
        self.max
            .iter()
            .zip(m.0.iter())
            .all(|(mx, &e)| mx.map_or(true, |mx| e <= mx))
    }

    /// The pointwise minimum of two policies.
    pub fn meet(&self, o: &TruncationPolicy) -> TruncationPolicy {
        let mut t = self.clone();
        for i in 0..NPARAM {
            t.max[i] = match (self.max[i], o.max[i]) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
        t
    }

    pub fn describe(&self) -> BTreeMap<String, i64> {
        Param::ALL
            .iter()
            .filter_map(|p| self.max(*p).map(|m| (p.name().to_string(), m as i64)))
            .collect()
    }
}

/// One term of a coefficient: Gaussian rational times a parameter monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scalar {
    pub value: GaussRat,
    pub params: Mono,
}

impl Scalar {
    pub fn new(value: GaussRat, params: Mono) -> Self {
        Scalar { value, params }
    }
}

/// Laurent polynomial in the parameters with Gaussian-rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Coeff {
    terms: BTreeMap<Mono, GaussRatKey>,
}

/// `GaussRat` wrapped for storage in ordered maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct GaussRatKey(GaussRat);

impl PartialOrd for GaussRatKey {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for GaussRatKey {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (self.0.re, self.0.im).cmp(&(o.0.re, o.0.im))
    }
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::default()
    }

    pub fn one() -> Self {
        Coeff::from_gauss(GaussRat::one())
    }

    pub fn i() -> Self {
        Coeff::from_gauss(GaussRat::i())
    }

    pub fn int(n: i128) -> Self {
        Coeff::from_gauss(GaussRat::int(n))
    }

    pub fn rat(n: i128, d: i128) -> Self {
        Coeff::from_gauss(GaussRat::real(q(n, d)))
    }

    pub fn from_q(x: Q) -> Self {
        Coeff::from_gauss(GaussRat::real(x))
    }

    pub fn from_gauss(g: GaussRat) -> Self {
        Coeff::monomial(g, Mono::one())
    }

    pub fn monomial(g: GaussRat, m: Mono) -> Self {
        let mut c = Coeff::zero();
        c.add_term(g, m);
        c
    }

    pub fn param(p: Param) -> Self {
        Coeff::monomial(GaussRat::one(), Mono::param(p, 1))
    }

    pub fn param_pow(p: Param, e: i8) -> Self {
        Coeff::monomial(GaussRat::one(), Mono::param(p, e))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, g: GaussRat, m: Mono) {
        if g.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert(GaussRatKey(GaussRat::zero()));
        e.0 = e.0 + g;
        if e.0.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = Scalar> + '_ {
        self.terms.iter().map(|(m, g)| Scalar::new(g.0, *m))
    }

    /// Constant (parameter-free) part.
    pub fn constant(&self) -> GaussRat {
        self.terms.get(&Mono::one()).map(|g| g.0).unwrap_or_default()
    }

    pub fn as_gauss(&self) -> Option<GaussRat> {
        match self.terms.len() {
            0 => Some(GaussRat::zero()),
            1 if self.terms.contains_key(&Mono::one()) => Some(self.constant()),
            _ => None,
        }
    }

    pub fn scale(&self, g: GaussRat) -> Coeff {
        if g.is_zero() {
            return Coeff::zero();
        }
        Coeff {
            terms: self.terms.iter().map(|(m, c)| (*m, GaussRatKey(c.0 * g))).collect(),
        }
    }

    pub fn scale_q(&self, s: Q) -> Coeff {
        self.scale(GaussRat::real(s))
    }

    pub fn mul_mono(&self, m: &Mono) -> Coeff {
        Coeff {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), *c)).collect(),
        }
    }

    pub fn mul_trunc(&self, o: &Coeff, t: &TruncationPolicy) -> Coeff {
        let mut out = Coeff::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &o.terms {
                let m = ma.mul(mb);
                if t.keeps(&m) {
                    out.add_term(a.0 * b.0, m);
                }
            }
        }
        out
    }

    pub fn truncate(&self, t: &TruncationPolicy) -> Coeff {
        Coeff {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| t.keeps(m))
                .map(|(m, c)| (*m, *c))
                .collect(),
        }
    }

    /// Keep only terms accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(&Mono) -> bool) -> Coeff {
        Coeff {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, *c))
                .collect(),
        }
    }

    /// Substitute each parameter by a coefficient expression. Negative
    /// exponents require the image to be a single monomial.
    pub fn substitute(
        &self,
        map: &dyn Fn(Param) -> Option<Coeff>,
        t: &TruncationPolicy,
    ) -> Option<Coeff> {
        let mut out = Coeff::zero();
        for (m, c) in &self.terms {
            let mut acc = Coeff::from_gauss(c.0);
            for p in Param::ALL {
                let e = m.exp(p);
                if e == 0 {
                    continue;
                }
                let img = map(p).unwrap_or_else(|| Coeff::param(p));
                let base = if e < 0 {
                    let (g, mono) = img.single_term()?;
                    Coeff::monomial(g.inv()?, mono.pow(-1))
                } else {
                    img
                };
                for _ in 0..e.unsigned_abs() {
                    acc = acc.mul_trunc(&base, t);
                }
            }
            out = out + acc;
        }
        Some(out.truncate(t))
    }

    pub fn single_term(&self) -> Option<(GaussRat, Mono)> {
        if self.terms.len() == 1 {
            let (m, g) = self.terms.iter().next().unwrap();
            Some((g.0, *m))
        } else {
            None
        }
    }

    /// Lowest and highest exponent of `p` across terms.
    pub fn exponent_range(&self, p: Param) -> Option<(i8, i8)> {
        let mut it = self.terms.keys().map(|m| m.exp(p));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn conj(&self) -> Coeff {
        Coeff {
            terms: self.terms.iter().map(|(m, c)| (*m, GaussRatKey(c.0.conj()))).collect(),
        }
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(mut self, o: Coeff) -> Coeff {
        self += o;
        self
    }
}

impl AddAssign for Coeff {
    fn add_assign(&mut self, o: Coeff) {
        for (m, c) in o.terms {
            self.add_term(c.0, m);
        }
    }
}

impl<'a> AddAssign<&'a Coeff> for Coeff {
    fn add_assign(&mut self, o: &'a Coeff) {
        for (m, c) in &o.terms {
            self.add_term(c.0, *m);
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.scale(-GaussRat::one())
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, o: Coeff) -> Coeff {
        self + (-o)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let s = render_scalar(&c.0, m);
            if k > 0 {
                if let Some(rest) = s.strip_prefix('-') {
                    write!(f, " - {}", rest)?;
                } else {
                    write!(f, " + {}", s)?;
                }
            } else {
                write!(f, "{}", s)?;
            }
        }
        Ok(())
    }
}

/// Text rendering of a single scalar that parses back with the expression
/// grammar, e.g. `-1/2*I*kinv*kinv`.
pub fn render_scalar(g: &GaussRat, m: &Mono) -> String {
    let params = if m.is_one() { String::new() } else { m.to_string() };
    let num = if g.im.is_zero() || g.re.is_zero() {
        g.to_string()
    } else {
        format!("{}", g)
    };
    match (num.as_str(), params.is_empty()) {
        (n, true) => n.to_string(),
        ("1", false) => params,
        ("-1", false) => format!("-{}", params),
        (n, false) => format!("{}*{}", n, params),
    }
}

/// `1/n!` as an exact rational.
pub fn inv_factorial(n: u32) -> Q {
    let mut f: i128 = 1;
    for k in 2..=n as i128 {
        f *= k;
    }
    q(1, f)
}

pub fn binomial(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    let mut r: i128 = 1;
    for j in 0..k as i128 {
        r = r * (n as i128 - j) / (j + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_arithmetic_is_exact() {
        let a = GaussRat::new(q(1, 3), q(-2, 5));
        let b = a.inv().unwrap();
        assert_eq!(a * b, GaussRat::one());
        assert_eq!(GaussRat::i() * GaussRat::i(), GaussRat::int(-1));
        assert!(GaussRat::zero().inv().is_none());
    }

    #[test]
    fn zero_coefficient_has_no_terms() {
        let mut c = Coeff::param(Param::Kinv);
        c.add_term(-GaussRat::one(), Mono::param(Param::Kinv, 1));
        assert!(c.is_zero());
        assert_eq!(c.terms().count(), 0);
    }

    #[test]
    fn truncation_is_idempotent_and_drops_high_orders() {
        let t = TruncationPolicy::default();
        let k = Coeff::param(Param::Kinv);
        let mut p = Coeff::one();
        for _ in 0..6 {
            p = p.mul_trunc(&(Coeff::one() + k.clone()), &TruncationPolicy::unbounded());
        }
        let once = p.truncate(&t);
        assert_eq!(once.truncate(&t), once);
        assert_eq!(once.exponent_range(Param::Kinv), Some((0, 4)));
    }

    #[test]
    fn laurent_substitution() {
        // kinv -> c * kbar_inv, then kinv^-1 maps to cinv * kbar_inv^-1
        let c = Coeff::param_pow(Param::Kinv, -1) + Coeff::param(Param::Kinv);
        let img = Coeff::monomial(
            GaussRat::one(),
            Mono::param(Param::C, 1).mul(&Mono::param(Param::KbarInv, 1)),
        );
        let out = c
            .substitute(
                &|p| (p == Param::Kinv).then(|| img.clone()),
                &TruncationPolicy::unbounded(),
            )
            .unwrap();
        assert_eq!(out.exponent_range(Param::C), Some((-1, 1)));
        assert_eq!(out.len(), 2);
    }

    #[test]
    fn scalar_rendering() {
        assert_eq!(render_scalar(&-GaussRat::i(), &Mono::one()), "-I");
        assert_eq!(
            render_scalar(&GaussRat::real(q(1, 2)), &Mono::param(Param::Kinv, 2)),
            "1/2*kinv*kinv"
        );
        assert_eq!(render_scalar(&GaussRat::one(), &Mono::param(Param::C, -1)), "cinv");
    }
}
