//! Buchberger completion over arbitrary-precision rationals, graded reverse
//! lexicographic order, for polynomial ideals in a fixed number of variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Exponent vector; variable 0 is the largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u8>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming divisibility.
    pub fn quotient(&self, o: &Monomial) -> Monomial {
        Monomial(o.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic.
    fn cmp(&self, o: &Self) -> Ordering {
        match self.degree().cmp(&o.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&o.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial with rational coefficients; terms ordered, leading term last.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.leading() {
            let inv = c.recip();
            for v in self.terms.values_mut() {
                *v *= &inv;
            }
        }
        self
    }

    /// `self − c·m·g`
    fn sub_scaled(&mut self, c: &BigRational, m: &Monomial, g: &QPoly) {
        for (gm, gc) in &g.terms {
            self.add_term(m.mul(gm), -(c * gc));
        }
    }
}

/// Normal form of `f` modulo `basis` (fully reduced).
pub fn reduce(f: &QPoly, basis: &[QPoly]) -> QPoly {
    let mut p = f.clone();
    let mut rem = QPoly::zero();
    while let Some((m, c)) = p.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = basis.iter().find(|g| g.leading().map(|(lm, _)| lm.divides(&m)).unwrap_or(false));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading().unwrap();
                let q = lm.quotient(&m);
                let coef = &c / lc;
                p.sub_scaled(&coef, &q, g);
            }
            None => {
                p.terms.remove(&m);
                rem.add_term(m, c);
            }
        }
    }
    rem
}

fn s_polynomial(f: &QPoly, g: &QPoly) -> QPoly {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let mut s = QPoly::zero();
    s.sub_scaled(&-fc.recip(), &fm.quotient(&l), f);
    s.sub_scaled(&gc.recip(), &gm.quotient(&l), g);
    s
}

/// Reduced Gröbner basis, deterministic for a given input order.
pub fn groebner_basis(gens: &[QPoly]) -> Vec<QPoly> {
    let mut g: Vec<QPoly> = Vec::new();
    for f in gens {
        let r = reduce(f, &g);
        if !r.is_zero() {
            g.push(r.monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let lcm_deg = |g: &[QPoly], (i, j): (usize, usize)| {
        g[i].leading().unwrap().0.lcm(g[j].leading().unwrap().0).degree()
    };
    while !pairs.is_empty() {
        // normal selection strategy, ties broken by position
        let k = (0..pairs.len()).min_by_key(|&k| (lcm_deg(&g, pairs[k]), pairs[k])).unwrap();
        let (i, j) = pairs.swap_remove(k);
        let (li, lj) = (g[i].leading().unwrap().0.clone(), g[j].leading().unwrap().0.clone());
        if li.coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        let chain = (0..g.len()).any(|m| {
            m != i
                && m != j
                && g[m].leading().unwrap().0.divides(&l)
                && !pairs.contains(&(i.min(m), i.max(m)))
                && !pairs.contains(&(j.min(m), j.max(m)))
        });
        if chain {
            continue;
        }
        let r = reduce(&s_polynomial(&g[i], &g[j]), &g);
        if r.is_zero() {
            continue;
        }
        let n = g.len();
        g.push(r.monic());
        for m in 0..n {
            pairs.push((m, n));
        }
    }
    // minimize, then interreduce
    let mut minimal: Vec<QPoly> = Vec::new();
    for (k, f) in g.iter().enumerate() {
        let lf = f.leading().unwrap().0;
        let redundant = g.iter().enumerate().any(|(m, h)| {
            let lh = h.leading().unwrap().0;
            m != k && lh.divides(lf) && (lh != lf || m < k)
        });
        if !redundant {
            minimal.push(f.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<QPoly> =
            minimal.iter().enumerate().filter(|(m, _)| *m != k).map(|(_, h)| h.clone()).collect();
        let (lm, lc) = minimal[k].leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut tail = minimal[k].clone();
        tail.terms.remove(&lm);
        let mut f = reduce(&tail, &others);
        f.add_term(lm, lc);
        out.push(f.monic());
    }
    out.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    out
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(nv: usize, terms: &[(&[u8], i64)]) -> QPoly {
        let mut p = QPoly::zero();
        for (e, c) in terms {
            assert_eq!(e.len(), nv);
            p.add_term(Monomial(e.to_vec()), rational(*c));
        }
        p
    }

    #[test]
    fn grevlex_order() {
        // x > y > z; grevlex: x² > xy > y² > xz > yz > z²
        let ms = [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]];
        for w in ms.windows(2) {
            assert!(Monomial(w[0].to_vec()) > Monomial(w[1].to_vec()));
        }
    }

    #[test]
    fn circle_and_line() {
        // x² + y² − 1, x − y  →  {x − y, y² − 1/2}
        let f = poly(2, &[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -1)]);
        let g = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let gb = groebner_basis(&[f, g]);
        assert_eq!(gb.len(), 2);
        let y2 = poly(2, &[(&[0, 2], 1)]);
        let nf = reduce(&y2, &gb);
        let mut half = QPoly::zero();
        half.add_term(Monomial::one(2), BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(nf, half);
    }
}
