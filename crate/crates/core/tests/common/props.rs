//! Property checks shared by the property tests and the acceptance run.

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use twistkit::element::Element;
use twistkit::generator::Gen;
use twistkit::hopf::HopfPresentation;
use twistkit::parser::parse_element;
use twistkit::poincare::{kappa_poincare, poincare_generators};
use twistkit::poisson::{group_generators, poisson_jacobiator, reduce_orthogonality};
use twistkit::registry::r_matrix;
use twistkit::render::render_element;
use twistkit::rmatrix::{schouten, LieAlgebra, WedgeBivector};
use twistkit::scalar::{Coeff, GaussRat, Mono, Param, TruncationPolicy, Q};

pub const CASES: u32 = 200;

pub fn runner() -> TestRunner {
    TestRunner::new(Config::with_cases(CASES))
}

pub fn kappa() -> &'static HopfPresentation {
    static K: OnceLock<HopfPresentation> = OnceLock::new();
    K.get_or_init(|| kappa_poincare(TruncationPolicy::default().with(Param::Kinv, 2)).unwrap())
}

pub fn pgen() -> impl Strategy<Value = Gen> {
    let gens = poincare_generators();
    (0..gens.len()).prop_map(move |i| gens[i])
}

pub fn group_coord() -> impl Strategy<Value = Gen> {
    let gens = group_generators();
    (0..gens.len()).prop_map(move |i| gens[i])
}

pub fn coeff() -> impl Strategy<Value = Coeff> {
    (-5i128..=5, 1i128..=4, -3i128..=3, prop::option::of((0usize..3, 1i8..=2))).prop_map(|(re, d, im, p)| {
        let g = GaussRat::new(Q::new(re, d), Q::new(im, d));
        let params = [Param::Kinv, Param::Xi, Param::Khinv];
        let m = p.map(|(i, e)| Mono::param(params[i], e)).unwrap_or_else(Mono::one);
        Coeff::monomial(g, m)
    })
}

pub fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec((prop::collection::vec(pgen(), 0..3), coeff()), 1..4).prop_map(|terms| {
        let alg = kappa().algebra();
        let mut e = Element::zero();
        for (w, c) in terms {
            let x = alg.product(&w.into_iter().map(Element::gen).collect::<Vec<_>>());
            e += x.scale(&c, alg.policy());
        }
        e
    })
}

pub fn bivector() -> impl Strategy<Value = WedgeBivector> {
    prop::collection::vec((pgen(), pgen(), -3i128..=3), 1..4).prop_map(|ts| {
        let mut r = WedgeBivector::zero();
        for (a, b, n) in ts {
            if a != b {
                r.add_wedge(a, b, Coeff::int(n));
            }
        }
        r
    })
}

/// `(ab)c = a(bc)` after normal ordering.
pub fn associativity((a, b, c): (Gen, Gen, Gen)) -> Result<(), TestCaseError> {
    let alg = kappa().algebra();
    let (a, b, c) = (Element::gen(a), Element::gen(b), Element::gen(c));
    prop_assert_eq!(alg.multiply(&alg.multiply(&a, &b), &c), alg.multiply(&a, &alg.multiply(&b, &c)));
    Ok(())
}

pub fn algebra_jacobi((a, b, c): (Gen, Gen, Gen)) -> Result<(), TestCaseError> {
    let alg = kappa().algebra();
    let (a, b, c) = (Element::gen(a), Element::gen(b), Element::gen(c));
    let j = alg.commutator(&a, &alg.commutator(&b, &c))
        + alg.commutator(&b, &alg.commutator(&c, &a))
        + alg.commutator(&c, &alg.commutator(&a, &b));
    prop_assert!(j.is_zero());
    Ok(())
}

/// Jacobi for the full Sklyanin bracket, modulo orthogonality.
pub fn poisson_jacobi((f, g, h): (Gen, Gen, Gen)) -> Result<(), TestCaseError> {
    let r = r_matrix("r-total").unwrap();
    let j = poisson_jacobiator(&Element::gen(f), &Element::gen(g), &Element::gen(h), &r).unwrap();
    prop_assert!(reduce_orthogonality(&j).is_zero());
    Ok(())
}

pub fn schouten_symmetry((r1, r2): (WedgeBivector, WedgeBivector)) -> Result<(), TestCaseError> {
    let g = LieAlgebra::poincare();
    prop_assert_eq!(schouten(&r1, &r2, &g).unwrap(), schouten(&r2, &r1, &g).unwrap());
    Ok(())
}

pub fn parser_round_trip(e: Element) -> Result<(), TestCaseError> {
    prop_assert_eq!(parse_element(&render_element(&e), kappa().algebra()).unwrap(), e);
    Ok(())
}
