//! Finite linear combinations over exact coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::generator::Gen;
use crate::scalar::{Coeff, GaussRat, Mono, Param, TruncationPolicy};

/// Ordered generator word (normal-ordered once it lives in an [`Element`]).
pub type Word = Vec<Gen>;

/// `Σ coeff · key` with no zero coefficients and unique keys.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Coeff>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(k: K, c: Coeff) -> Self {
        let mut s = Self::zero();
        s.add_term(k, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, k: K, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Coeff)> {
        self.terms.iter()
    }

    pub fn into_iter_terms(self) -> impl Iterator<Item = (K, Coeff)> {
        self.terms.into_iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, k: &K) -> Coeff {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Coeff, t: &TruncationPolicy) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul_trunc(c, t));
        }
        out
    }

    pub fn scale_gauss(&self, g: GaussRat) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.scale(g));
        }
        out
    }

    pub fn truncate(&self, t: &TruncationPolicy) -> Self {
        self.map_coeffs(|c| c.truncate(t))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Coeff) -> Coeff) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v));
        }
        out
    }

    pub fn map_keys<K2: Ord + Clone>(&self, f: impl Fn(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }

    /// Every scalar term, flattened.
    pub fn scalar_terms(&self) -> impl Iterator<Item = (&K, GaussRat, Mono)> {
        self.terms
            .iter()
            .flat_map(|(k, c)| c.terms().map(move |s| (k, s.value, s.params)))
    }

    /// Exponent range of `p` over all coefficients.
    pub fn exponent_range(&self, p: Param) -> Option<(i8, i8)> {
        self.terms
            .values()
            .filter_map(|c| c.exponent_range(p))
            .reduce(|(a, b), (c, d)| (a.min(c), b.max(d)))
    }

    /// Projection onto monomials accepted by `keep`.
    pub fn filter_params(&self, keep: impl Fn(&Mono) -> bool) -> Self {
        self.map_coeffs(|c| c.filter(&keep))
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self += o;
        self
    }
}

impl<K: Ord + Clone> AddAssign for LinComb<K> {
    fn add_assign(&mut self, o: Self) {
        for (k, v) in o.terms {
            self.add_term(k, v);
        }
    }
}

impl<'a, K: Ord + Clone> AddAssign<&'a LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, o: &'a LinComb<K>) {
        for (k, v) in &o.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale_gauss(-GaussRat::one())
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<K: Ord + Clone> SubAssign for LinComb<K> {
    fn sub_assign(&mut self, o: Self) {
        for (k, v) in o.terms {
            self.add_term(k, -v);
        }
    }
}

/// Noncommutative polynomial: `Σ coeff · word`.
pub type Element = LinComb<Word>;

impl Element {
    pub fn one() -> Element {
        Element::scalar(Coeff::one())
    }

    pub fn scalar(c: Coeff) -> Element {
        Element::term(Vec::new(), c)
    }

    pub fn gen(g: Gen) -> Element {
        Element::term(vec![g], Coeff::one())
    }

    /// Counit-style constant part (coefficient of the empty word).
    pub fn constant_part(&self) -> Coeff {
        self.coeff(&Vec::new())
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> + '_ {
        self.keys().flat_map(|w| w.iter().copied())
    }
}

/// Rank-2 or rank-3 tensor: `Σ coeff · (w₁ ⊗ w₂ [⊗ w₃])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement {
    rank: usize,
    inner: LinComb<Vec<Word>>,
}

impl TensorElement {
    pub fn zero(rank: usize) -> Self {
        TensorElement { rank, inner: LinComb::zero() }
    }

    pub fn one(rank: usize) -> Self {
        TensorElement::simple(&vec![Element::one(); rank])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rank-1 wrapper, used for residuals of element identities.
    pub fn from_element(e: Element) -> Self {
        TensorElement { rank: 1, inner: e.map_keys(|w| vec![w.clone()]) }
    }

    /// Inverse of [`TensorElement::from_element`].
    pub fn to_element(&self) -> Element {
        assert_eq!(self.rank, 1);
        self.inner.map_keys(|k| k[0].clone())
    }

    pub fn from_lincomb(rank: usize, inner: LinComb<Vec<Word>>) -> Self {
        debug_assert!(inner.keys().all(|k| k.len() == rank));
        TensorElement { rank, inner }
    }

    pub fn lincomb(&self) -> &LinComb<Vec<Word>> {
        &self.inner
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: Coeff) {
        assert_eq!(words.len(), self.rank, "tensor rank mismatch");
        self.inner.add_term(words, c);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Word>, &Coeff)> {
        self.inner.iter()
    }

    /// `a ⊗ b ⊗ …` of already normal-ordered factors.
    pub fn simple(factors: &[Element]) -> Self {
        let mut acc: Vec<(Vec<Word>, Coeff)> = vec![(Vec::new(), Coeff::one())];
        for f in factors {
            let mut next = Vec::new();
            for (ws, c) in &acc {
                for (w, d) in f.iter() {
                    let mut ws2 = ws.clone();
                    ws2.push(w.clone());
                    next.push((ws2, c.mul_trunc(d, &TruncationPolicy::unbounded())));
                }
            }
            acc = next;
        }
        let mut t = TensorElement::zero(factors.len());
        for (ws, c) in acc {
            t.add_term(ws, c);
        }
        t
    }

    pub fn scale(&self, c: &Coeff, t: &TruncationPolicy) -> Self {
        TensorElement { rank: self.rank, inner: self.inner.scale(c, t) }
    }

    pub fn scale_gauss(&self, g: GaussRat) -> Self {
        TensorElement { rank: self.rank, inner: self.inner.scale_gauss(g) }
    }

    pub fn truncate(&self, t: &TruncationPolicy) -> Self {
        TensorElement { rank: self.rank, inner: self.inner.truncate(t) }
    }

    pub fn map_coeffs(&self, f: impl Fn(&Coeff) -> Coeff) -> Self {
        TensorElement { rank: self.rank, inner: self.inner.map_coeffs(f) }
    }

    pub fn filter_params(&self, keep: impl Fn(&Mono) -> bool) -> Self {
        TensorElement { rank: self.rank, inner: self.inner.filter_params(keep) }
    }

    pub fn exponent_range(&self, p: Param) -> Option<(i8, i8)> {
        self.inner.exponent_range(p)
    }

    /// Swap the two legs of a rank-2 tensor.
    pub fn flip(&self) -> Self {
        assert_eq!(self.rank, 2);
        TensorElement {
            rank: 2,
            inner: self.inner.map_keys(|k| vec![k[1].clone(), k[0].clone()]),
        }
    }

    /// Embed a rank-2 tensor into rank 3 at the given leg positions
    /// (`[0,1]` is `T₁₂`, `[0,2]` is `T₁₃`, `[1,2]` is `T₂₃`).
    pub fn embed3(&self, legs: [usize; 2]) -> Self {
        assert_eq!(self.rank, 2);
        TensorElement {
            rank: 3,
            inner: self.inner.map_keys(|k| {
                let mut out = vec![Vec::new(); 3];
                out[legs[0]] = k[0].clone();
                out[legs[1]] = k[1].clone();
                out
            }),
        }
    }

    /// Leg-wise decomposition `Σ c · a₁ ⊗ a₂` as element pairs.
    pub fn legs(&self) -> impl Iterator<Item = (Vec<Element>, Coeff)> + '_ {
        self.inner
            .iter()
            .map(|(ws, c)| (ws.iter().map(|w| Element::gen_word(w.clone())).collect(), c.clone()))
    }
}

impl Element {
    pub fn gen_word(w: Word) -> Element {
        Element::term(w, Coeff::one())
    }
}

impl Add for TensorElement {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        assert_eq!(self.rank, o.rank, "tensor rank mismatch");
        TensorElement { rank: self.rank, inner: self.inner + o.inner }
    }
}

impl AddAssign for TensorElement {
    fn add_assign(&mut self, o: Self) {
        assert_eq!(self.rank, o.rank, "tensor rank mismatch");
        self.inner += o.inner;
    }
}

impl Neg for TensorElement {
    type Output = Self;
    fn neg(self) -> Self {
        TensorElement { rank: self.rank, inner: -self.inner }
    }
}

impl Sub for TensorElement {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms_merge_and_cancel() {
        let p1 = Element::gen(Gen::p(1));
        let s = p1.clone() + p1.clone() - p1.scale_gauss(GaussRat::int(2));
        assert!(s.is_zero());
    }

    #[test]
    fn embedding_places_legs() {
        let t = TensorElement::simple(&[Element::gen(Gen::p(1)), Element::gen(Gen::p(2))]);
        let t13 = t.embed3([0, 2]);
        let (k, _) = t13.iter().next().unwrap();
        assert_eq!(k[0], vec![Gen::p(1)]);
        assert!(k[1].is_empty());
        assert_eq!(k[2], vec![Gen::p(2)]);
        assert_eq!(t.flip().flip(), t);
    }
}
