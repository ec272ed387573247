//! Hopf algebras given by generators: coproduct, antipode and counit tables
//! extended (anti)multiplicatively, plus axiom and centrality checks.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::element::{Element, TensorElement, Word};
use crate::error::{Result, TwistError};
use crate::generator::Gen;
use crate::presentation::Presentation;
use crate::report::{combine, Report, Residual};
use crate::scalar::{Coeff, TruncationPolicy};

#[derive(Clone, Debug)]
pub struct HopfPresentation {
    name: String,
    algebra: Presentation,
    coproducts: BTreeMap<Gen, TensorElement>,
    antipodes: BTreeMap<Gen, Element>,
    counits: BTreeMap<Gen, Coeff>,
}

impl HopfPresentation {
    /// Every generator of `algebra` needs a coproduct, antipode and counit.
    pub fn new(
        name: impl Into<String>,
        algebra: Presentation,
        coproducts: BTreeMap<Gen, TensorElement>,
        antipodes: BTreeMap<Gen, Element>,
        counits: BTreeMap<Gen, Coeff>,
    ) -> Result<Self> {
        let name = name.into();
        for g in algebra.generators() {
            let missing = if !coproducts.contains_key(&g) {
                Some("coproduct")
            } else if !antipodes.contains_key(&g) {
                Some("antipode")
            } else if !counits.contains_key(&g) {
                Some("counit")
            } else {
                None
            };
            if let Some(what) = missing {
                return Err(TwistError::MissingEntry(format!("{} of {} in {}", what, g, name)));
            }
        }
        for t in coproducts.values() {
            algebra.check_tensor(t)?;
        }
        for e in antipodes.values() {
            algebra.check_element(e)?;
        }
        let p = algebra.policy().clone();
        Ok(HopfPresentation {
            name,
            coproducts: coproducts.into_iter().map(|(g, t)| (g, t.truncate(&p))).collect(),
            antipodes: antipodes.into_iter().map(|(g, e)| (g, e.truncate(&p))).collect(),
            counits,
            algebra,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &Presentation {
        &self.algebra
    }

    pub fn policy(&self) -> &TruncationPolicy {
        self.algebra.policy()
    }

    pub fn generators(&self) -> Vec<Gen> {
        self.algebra.generators().collect()
    }

    pub fn coproduct_table(&self) -> &BTreeMap<Gen, TensorElement> {
        &self.coproducts
    }

    pub fn antipode_table(&self) -> &BTreeMap<Gen, Element> {
        &self.antipodes
    }

    pub fn counit_table(&self) -> &BTreeMap<Gen, Coeff> {
        &self.counits
    }

    pub fn with_policy(&self, policy: TruncationPolicy) -> Result<HopfPresentation> {
        HopfPresentation::new(
            self.name.clone(),
            self.algebra.with_policy(policy)?,
            self.coproducts.clone(),
            self.antipodes.clone(),
            self.counits.clone(),
        )
    }

    /// Same algebra, replaced coalgebra tables.
    pub fn with_tables(
        &self,
        name: impl Into<String>,
        coproducts: BTreeMap<Gen, TensorElement>,
        antipodes: BTreeMap<Gen, Element>,
    ) -> Result<HopfPresentation> {
        HopfPresentation::new(name, self.algebra.clone(), coproducts, antipodes, self.counits.clone())
    }

    fn gen_coproduct(&self, g: &Gen) -> Result<&TensorElement> {
        self.coproducts
            .get(g)
            .ok_or_else(|| TwistError::MissingEntry(format!("coproduct of {} in {}", g, self.name)))
    }

    fn word_coproduct(&self, w: &Word) -> Result<TensorElement> {
        let mut acc = TensorElement::one(2);
        for g in w {
            acc = self.algebra.multiply_tensors(&acc, self.gen_coproduct(g)?);
        }
        Ok(acc)
    }

    pub fn coproduct(&self, e: &Element) -> Result<TensorElement> {
        self.algebra.check_element(e)?;
        let mut out = TensorElement::zero(2);
        for (w, c) in e.iter() {
            out += self.word_coproduct(w)?.scale(c, self.policy());
        }
        Ok(out)
    }

    pub fn counit(&self, e: &Element) -> Result<Coeff> {
        let mut out = Coeff::zero();
        for (w, c) in e.iter() {
            let mut acc = c.clone();
            for g in w {
                let eg = self.counits.get(g).ok_or_else(|| {
                    TwistError::MissingEntry(format!("counit of {} in {}", g, self.name))
                })?;
                acc = acc.mul_trunc(eg, self.policy());
            }
            out += acc;
        }
        Ok(out)
    }

    /// Antihomomorphic extension of the antipode table.
    pub fn antipode(&self, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in e.iter() {
            let mut acc = Element::one();
            for g in w {
                let sg = self.antipodes.get(g).ok_or_else(|| {
                    TwistError::MissingEntry(format!("antipode of {} in {}", g, self.name))
                })?;
                acc = self.algebra.multiply(sg, &acc);
            }
            out += acc.scale(c, self.policy());
        }
        Ok(out)
    }

    /// Apply `Δ` to one leg, raising the rank by one.
    pub fn coproduct_on_leg(&self, t: &TensorElement, leg: usize) -> Result<TensorElement> {
        let mut out = TensorElement::zero(t.rank() + 1);
        for (ws, c) in t.iter() {
            let d = self.word_coproduct(&ws[leg])?;
            for (pair, dc) in d.iter() {
                let coef = c.mul_trunc(dc, self.policy());
                if coef.is_zero() {
                    continue;
                }
                let mut key = ws.clone();
                key[leg] = pair[1].clone();
                key.insert(leg, pair[0].clone());
                out.add_term(key, coef);
            }
        }
        Ok(out)
    }

    /// Apply `ε` to one leg, lowering the rank by one.
    pub fn counit_on_leg(&self, t: &TensorElement, leg: usize) -> Result<TensorElement> {
        let mut out = TensorElement::zero(t.rank() - 1);
        for (ws, c) in t.iter() {
            let e = self.counit(&Element::gen_word(ws[leg].clone()))?;
            let coef = c.mul_trunc(&e, self.policy());
            if coef.is_zero() {
                continue;
            }
            let mut key = ws.clone();
            key.remove(leg);
            out.add_term(key, coef);
        }
        Ok(out)
    }

    /// Apply the antipode to one leg of a tensor.
    pub fn antipode_on_leg(&self, t: &TensorElement, leg: usize) -> Result<TensorElement> {
        let mut out = TensorElement::zero(t.rank());
        for (ws, c) in t.iter() {
            let legs: Vec<Element> = ws
                .iter()
                .enumerate()
                .map(|(k, w)| {
                    let e = Element::gen_word(w.clone());
                    if k == leg {
                        self.antipode(&e)
                    } else {
                        Ok(e)
                    }
                })
                .collect::<Result<_>>()?;
            out += self.algebra.tensor_from_legs(&legs, c);
        }
        Ok(out)
    }

    fn residual_report(&self, id: String, r: Result<Residual>) -> Report {
        match r {
            Ok(r) => Report::from_residual(id, &r),
            Err(e) => Report::new(id, crate::report::Status::Fail, self.policy()).with_note(e.to_string()),
        }
    }

    fn per_generator<F>(&self, axiom: &str, f: F) -> Report
    where
        F: Fn(Gen) -> Result<Vec<Residual>> + Sync,
    {
        let gens = self.generators();
        let parts: Vec<Report> = gens
            .par_iter()
            .map(|g| {
                let first_bad = f(*g).map(|rs| {
                    let fallback = rs[0].clone();
                    rs.into_iter().find(|r| !r.is_zero()).unwrap_or(fallback)
                });
                self.residual_report(format!("{}.{}.{}", self.name, axiom, g), first_bad)
            })
            .collect();
        combine(format!("{}.{}", self.name, axiom), &parts, self.policy())
    }

    /// Coassociativity, both counit laws, both antipode laws, and `Δ`
    /// respecting every commutation relation, each to truncation.
    pub fn check_hopf_axioms(&self) -> Vec<Report> {
        let p = self.policy().clone();
        let mut out = Vec::new();
        out.push(self.per_generator("coassociativity", |g| {
            let d = self.gen_coproduct(&g)?;
            let left = self.coproduct_on_leg(d, 0)?;
            let right = self.coproduct_on_leg(d, 1)?;
            Ok(vec![Residual::new(left - right, &p)])
        }));
        out.push(self.per_generator("counit", |g| {
            let d = self.gen_coproduct(&g)?;
            let x = TensorElement::from_element(Element::gen(g));
            let l = self.counit_on_leg(d, 0)? - x.clone();
            let r = self.counit_on_leg(d, 1)? - x;
            Ok(vec![Residual::new(l, &p), Residual::new(r, &p)])
        }));
        out.push(self.per_generator("antipode", |g| {
            let d = self.gen_coproduct(&g)?;
            let eps = Element::scalar(self.counits[&g].clone());
            let l = self.algebra.contract_legs(&self.antipode_on_leg(d, 0)?) - eps.clone();
            let r = self.algebra.contract_legs(&self.antipode_on_leg(d, 1)?) - eps;
            Ok(vec![Residual::of_element(l, &p), Residual::of_element(r, &p)])
        }));
        let gens = self.generators();
        let pairs: Vec<(Gen, Gen)> = gens
            .iter()
            .flat_map(|g| gens.iter().filter(move |h| *h < g).map(move |h| (*g, *h)))
            .collect();
        let parts: Vec<Report> = pairs
            .par_iter()
            .map(|(g, h)| {
                let r = (|| {
                    let lhs = self.coproduct(&self.algebra.bracket(*g, *h))?;
                    let rhs = self
                        .algebra
                        .tensor_commutator(self.gen_coproduct(g)?, self.gen_coproduct(h)?);
                    Ok(Residual::new(lhs - rhs, &p))
                })();
                self.residual_report(format!("{}.homomorphism.[{},{}]", self.name, g, h), r)
            })
            .collect();
        out.push(combine(format!("{}.homomorphism", self.name), &parts, &p));
        out
    }

    /// `[e, g] = 0` for every generator `g`, to truncation.
    pub fn check_centrality(&self, id: &str, e: &Element) -> Report {
        let gens = self.generators();
        let parts: Vec<Report> = gens
            .par_iter()
            .map(|g| {
                let c = self.algebra.commutator(e, &Element::gen(*g));
                Report::from_residual(format!("{}.[{}]", id, g), &Residual::of_element(c, self.policy()))
            })
            .collect();
        combine(id, &parts, self.policy())
    }
}
