//! Algebras presented by generators and a commutation table, with PBW-style
//! normal ordering.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::element::{Element, LinComb, TensorElement, Word};
use crate::error::{Result, TwistError};
use crate::generator::Gen;
use crate::scalar::{Coeff, Param, TruncationPolicy};

/// Generators, their total order (the global [`Gen`] order) and the table of
/// nonzero commutators `[g, h]` for `g > h`. Missing pairs commute.
pub struct Presentation {
    name: String,
    generators: BTreeSet<Gen>,
    table: HashMap<(Gen, Gen), Element>,
    policy: TruncationPolicy,
    memo: Mutex<HashMap<(Word, Gen), Element>>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("generators", &self.generators.len())
            .field("table", &self.table.len())
            .finish()
    }
}

impl Clone for Presentation {
    fn clone(&self) -> Self {
        Presentation {
            name: self.name.clone(),
            generators: self.generators.clone(),
            table: self.table.clone(),
            policy: self.policy.clone(),
            memo: Mutex::new(HashMap::new()),
        }
    }
}

impl Presentation {
    /// Builds a presentation from `[g, h]` values given for any orientation;
    /// entries are stored for `g > h` and normal-ordered against the table
    /// assembled so far, so the input may be given in any term order.
    pub fn new(
        name: impl Into<String>,
        generators: impl IntoIterator<Item = Gen>,
        brackets: Vec<(Gen, Gen, Element)>,
        policy: TruncationPolicy,
    ) -> Result<Self> {
        let mut p = Presentation {
            name: name.into(),
            generators: generators.into_iter().collect(),
            table: HashMap::new(),
            policy,
            memo: Mutex::new(HashMap::new()),
        };
        let mut oriented = Vec::new();
        for (g, h, v) in brackets {
            for x in [g, h].into_iter().chain(v.generators()) {
                if !p.generators.contains(&x) {
                    return Err(TwistError::UnknownGenerator(x.to_string(), p.name.clone()));
                }
            }
            if g == h {
                continue;
            }
            if g > h {
                oriented.push(((g, h), v));
            } else {
                oriented.push(((h, g), -v));
            }
        }
        // Table entries only ever involve generators that are not larger than
        // both bracketed generators, so ordering needs only plain insertion
        // followed by a normalization pass.
        for (k, v) in &oriented {
            p.table.insert(*k, v.truncate(&p.policy));
        }
        let normalized: Vec<_> = oriented
            .iter()
            .map(|(k, v)| Ok((*k, p.normal_order(v)?)))
            .collect::<Result<_>>()?;
        p.table.clear();
        for (k, v) in normalized {
            if !v.is_zero() {
                p.table.insert(k, v);
            }
        }
        p.memo.lock().unwrap().clear();
        Ok(p)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn policy(&self) -> &TruncationPolicy {
        &self.policy
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> + '_ {
        self.generators.iter().copied()
    }

    pub fn contains(&self, g: &Gen) -> bool {
        self.generators.contains(g)
    }

    /// Stored commutator `[g, h]`, for either orientation.
    pub fn bracket(&self, g: Gen, h: Gen) -> Element {
        if g > h {
            self.table.get(&(g, h)).cloned().unwrap_or_default()
        } else if g < h {
            self.table.get(&(h, g)).cloned().map(|e| -e).unwrap_or_default()
        } else {
            Element::zero()
        }
    }

    pub fn table(&self) -> impl Iterator<Item = (&(Gen, Gen), &Element)> {
        self.table.iter()
    }

    /// Same generators and table, new truncation orders.
    pub fn with_policy(&self, policy: TruncationPolicy) -> Result<Presentation> {
        let brackets = self.table.iter().map(|((g, h), v)| (*g, *h, v.clone())).collect();
        Presentation::new(self.name.clone(), self.generators.clone(), brackets, policy)
    }

    pub fn check_element(&self, e: &Element) -> Result<()> {
        for g in e.generators() {
            if !self.contains(&g) {
                return Err(TwistError::UnknownGenerator(g.to_string(), self.name.clone()));
            }
        }
        Ok(())
    }

    pub fn check_tensor(&self, t: &TensorElement) -> Result<()> {
        for (ws, _) in t.iter() {
            for g in ws.iter().flatten() {
                if !self.contains(g) {
                    return Err(TwistError::UnknownGenerator(g.to_string(), self.name.clone()));
                }
            }
        }
        Ok(())
    }

    /// `w · g` for a normal-ordered word `w`.
    fn word_times_gen(&self, w: &[Gen], g: Gen) -> Element {
        match w.last() {
            None => return Element::gen(g),
            Some(&h) if h <= g => {
                let mut v = w.to_vec();
                v.push(g);
                return Element::gen_word(v);
            }
            _ => {}
        }
        let key = (w.to_vec(), g);
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let (&h, prefix) = w.split_last().unwrap();
        // prefix · h · g = prefix · g · h + prefix · [h, g]
        let moved = self.word_times_gen(prefix, g);
        let mut out = self.elem_times_gen(&moved, h);
        if let Some(c) = self.table.get(&(h, g)) {
            out += self.word_times_elem(prefix, c);
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    fn elem_times_gen(&self, e: &Element, g: Gen) -> Element {
        let mut out = Element::zero();
        for (w, c) in e.iter() {
            let prod = self.word_times_gen(w, g);
            if c.as_gauss() == Some(crate::scalar::GaussRat::one()) {
                out += prod;
            } else {
                out += prod.scale(c, &self.policy);
            }
        }
        out
    }

    fn word_times_elem(&self, w: &[Gen], e: &Element) -> Element {
        let mut out = Element::zero();
        for (v, c) in e.iter() {
            out += self.words_product(w, v).scale(c, &self.policy);
        }
        out
    }

    /// Product of two normal-ordered words.
    pub fn words_product(&self, u: &[Gen], v: &[Gen]) -> Element {
        let mut acc = Element::gen_word(u.to_vec());
        for &g in v {
            acc = self.elem_times_gen(&acc, g);
        }
        acc
    }

    /// Normal form of an arbitrary (not necessarily ordered) sum of words.
    pub fn normal_order(&self, raw: &LinComb<Word>) -> Result<Element> {
        self.check_element(raw)?;
        let mut out = Element::zero();
        for (w, c) in raw.iter() {
            let c = c.truncate(&self.policy);
            if c.is_zero() {
                continue;
            }
            out += self.words_product(&[], w).scale(&c, &self.policy);
        }
        Ok(out)
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                let c = ca.mul_trunc(cb, &self.policy);
                if c.is_zero() {
                    continue;
                }
                out += self.words_product(wa, wb).scale(&c, &self.policy);
            }
        }
        out
    }

    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        self.multiply(a, b) - self.multiply(b, a)
    }

    pub fn product(&self, factors: &[Element]) -> Element {
        factors.iter().fold(Element::one(), |acc, f| self.multiply(&acc, f))
    }

    pub fn power(&self, a: &Element, n: u32) -> Element {
        (0..n).fold(Element::one(), |acc, _| self.multiply(&acc, a))
    }

    /// Factorwise product of tensors of equal rank.
    pub fn multiply_tensors(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        assert_eq!(a.rank(), b.rank(), "tensor rank mismatch");
        let mut out = TensorElement::zero(a.rank());
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                let c = ca.mul_trunc(cb, &self.policy);
                if c.is_zero() {
                    continue;
                }
                let legs: Vec<Element> =
                    wa.iter().zip(wb.iter()).map(|(x, y)| self.words_product(x, y)).collect();
                out += self.tensor_from_legs(&legs, &c);
            }
        }
        out
    }

    pub fn tensor_commutator(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        self.multiply_tensors(a, b) - self.multiply_tensors(b, a)
    }

    /// `c · (l₁ ⊗ l₂ ⊗ …)` truncated under the policy.
    pub fn tensor_from_legs(&self, legs: &[Element], c: &Coeff) -> TensorElement {
        let mut acc: Vec<(Vec<Word>, Coeff)> = vec![(Vec::new(), c.clone())];
        for leg in legs {
            let mut next = Vec::with_capacity(acc.len() * leg.len());
            for (ws, c) in &acc {
                for (w, d) in leg.iter() {
                    let cd = c.mul_trunc(d, &self.policy);
                    if cd.is_zero() {
                        continue;
                    }
                    let mut ws2 = ws.clone();
                    ws2.push(w.clone());
                    next.push((ws2, cd));
                }
            }
            acc = next;
        }
        let mut t = TensorElement::zero(legs.len());
        for (ws, c) in acc {
            t.add_term(ws, c);
        }
        t
    }

    /// `a ⊗ b ⊗ …` with truncation.
    pub fn tensor(&self, legs: &[Element]) -> TensorElement {
        self.tensor_from_legs(legs, &Coeff::one())
    }

    /// Multiply legs of a tensor together (`m: a ⊗ b ↦ ab`).
    pub fn contract_legs(&self, t: &TensorElement) -> Element {
        let mut out = Element::zero();
        for (ws, c) in t.iter() {
            let mut acc = Element::one();
            for w in ws {
                acc = self.multiply(&acc, &Element::gen_word(w.clone()));
            }
            out += acc.scale(c, &self.policy);
        }
        out
    }

    /// Simultaneous substitution of generators and parameters, normal-ordered
    /// in `self` (the target presentation). Unmapped generators map to
    /// themselves and must belong to the target.
    pub fn substitute(&self, e: &Element, sub: &Substitution) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in e.iter() {
            let c2 = sub.apply_coeff(c, &self.policy)?;
            if c2.is_zero() {
                continue;
            }
            let mut acc = Element::scalar(c2);
            for g in w {
                let img = match sub.gens.get(g) {
                    Some(img) => img.clone(),
                    None => Element::gen(*g),
                };
                self.check_element(&img)?;
                acc = self.multiply(&acc, &img);
                if acc.is_zero() {
                    break;
                }
            }
            out += acc;
        }
        Ok(out)
    }

    /// Leg-wise substitution of a tensor.
    pub fn substitute_tensor(&self, t: &TensorElement, sub: &Substitution) -> Result<TensorElement> {
        let mut out = TensorElement::zero(t.rank());
        for (ws, c) in t.iter() {
            let c2 = sub.apply_coeff(c, &self.policy)?;
            if c2.is_zero() {
                continue;
            }
            let legs = ws
                .iter()
                .map(|w| self.substitute(&Element::gen_word(w.clone()), &Substitution::gens_only(sub)))
                .collect::<Result<Vec<_>>>()?;
            out += self.tensor_from_legs(&legs, &c2);
        }
        Ok(out)
    }
}

/// Generator and parameter images for [`Presentation::substitute`].
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    pub gens: HashMap<Gen, Element>,
    pub params: HashMap<Param, Coeff>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn gen(mut self, g: Gen, img: Element) -> Self {
        self.gens.insert(g, img);
        self
    }

    pub fn param(mut self, p: Param, img: Coeff) -> Self {
        self.params.insert(p, img);
        self
    }

    fn gens_only(other: &Substitution) -> Substitution {
        Substitution { gens: other.gens.clone(), params: HashMap::new() }
    }

    pub fn apply_coeff(&self, c: &Coeff, t: &TruncationPolicy) -> Result<Coeff> {
        if self.params.is_empty() {
            return Ok(c.truncate(t));
        }
        c.substitute(&|p| self.params.get(&p).cloned(), t).ok_or_else(|| {
            TwistError::Unsupported(format!("negative power of a non-monomial parameter image in {}", c))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRat;

    /// A two-generator toy algebra `[y, x] = x` with `x < y`.
    fn toy() -> Presentation {
        let x = Gen::p(0);
        let y = Gen::m(0, 1);
        // y sorts before x, so [x, y] = -x is the stored orientation
        Presentation::new(
            "toy",
            [x, y],
            vec![(y, x, Element::gen(x))],
            TruncationPolicy::default(),
        )
        .unwrap()
    }

    #[test]
    fn reordering_produces_commutator_terms() {
        let p = toy();
        let x = Element::gen(Gen::p(0));
        let y = Element::gen(Gen::m(0, 1));
        // x·y = y·x - [y, x] = y·x - x
        let xy = p.multiply(&x, &y);
        let expected = Element::gen_word(vec![Gen::m(0, 1), Gen::p(0)]) - x.clone();
        assert_eq!(xy, expected);
        assert_eq!(p.commutator(&y, &x), x);
    }

    #[test]
    fn unknown_generator_is_rejected() {
        let p = toy();
        let e = Element::gen(Gen::p(2));
        assert!(matches!(p.normal_order(&e), Err(TwistError::UnknownGenerator(..))));
    }

    #[test]
    fn substitution_identity_is_noop() {
        let p = toy();
        let e = Element::gen_word(vec![Gen::p(0), Gen::m(0, 1)]).scale_gauss(GaussRat::i());
        let n = p.normal_order(&e).unwrap();
        assert_eq!(p.substitute(&n, &Substitution::new()).unwrap(), n);
    }
}
