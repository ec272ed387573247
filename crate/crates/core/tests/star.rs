mod common;

use common::*;
use twistkit::scalar::{Coeff, Param};
use twistkit::star::{associator, build_star_operator, star_commutator, star_multiply, CoordPolynomial, StarKind};

fn x(mu: u8) -> CoordPolynomial {
    CoordPolynomial::coord(mu)
}

fn i_over(p: Param, den: i128) -> Coeff {
    c(rat(0, 1), rat(1, den), Some((p, 1)))
}

fn upto_kinv(p: &CoordPolynomial, n: i8) -> CoordPolynomial {
    p.map_coeffs(|k| k.filter(|m| m.exp(Param::Kinv) <= n))
}

#[test]
fn extended_minkowski_relations() {
    for kind in [StarKind::Kappa, StarKind::KappaXi, StarKind::KappaKappaHat] {
        let op = build_star_operator(kind, 2).unwrap();
        for i in 1..4u8 {
            let mut expect = x(i).scale(&i_over(Param::Kinv, 1));
            match (kind, i) {
                (StarKind::KappaXi, 3) => expect = expect + CoordPolynomial::constant(i_over(Param::Xi, 2)),
                (StarKind::KappaKappaHat, 1) => expect = expect + x(2).scale(&i_over(Param::Khinv, 1)),
                (StarKind::KappaKappaHat, 2) => expect = expect - x(1).scale(&i_over(Param::Khinv, 1)),
                _ => {}
            }
            assert_eq!(star_commutator(&x(i), &x(0), &op).unwrap(), expect, "{:?} x{}", kind, i);
            for j in 1..4u8 {
                assert!(star_commutator(&x(i), &x(j), &op).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn xi_product_by_hand() {
    // only ∂³ ⊗ ∂⁰ survives on linear legs: x₃⋆x₀ = x₃x₀ + iξ/2
    let op = build_star_operator(StarKind::Xi, 1).unwrap();
    let expect = x(3).mul(&x(0)) + CoordPolynomial::constant(i_over(Param::Xi, 2));
    assert_eq!(star_multiply(&x(3), &x(0), &op).unwrap(), expect);
    assert_eq!(star_multiply(&x(0), &x(3), &op).unwrap(), x(0).mul(&x(3)));
}

#[test]
fn hat_product_is_rotation_by_time() {
    let op = build_star_operator(StarKind::KappaHat, 1).unwrap();
    assert_eq!(star_commutator(&x(1), &x(0), &op).unwrap(), x(2).scale(&i_over(Param::Khinv, 1)));
    assert!(star_commutator(&x(3), &x(0), &op).unwrap().is_zero());
}

#[test]
fn classical_limit_commutes() {
    let op = build_star_operator(StarKind::Kappa, 2).unwrap();
    let f = x(1).mul(&x(0));
    let g = x(0).mul(&x(0));
    let comm = star_commutator(&f, &g, &op).unwrap();
    assert!(comm.map_coeffs(|k| k.filter(|m| m.exp(Param::Kinv) == 0)).is_zero());
    assert!(!comm.is_zero());
}

#[test]
fn commutator_is_a_derivation_to_second_order() {
    let op = build_star_operator(StarKind::Kappa, 2).unwrap();
    let s = |a: &CoordPolynomial, b: &CoordPolynomial| star_multiply(a, b, &op).unwrap();
    let x00 = s(&x(0), &x(0));
    for i in 1..4 {
        let lhs = star_commutator(&x(i), &x00, &op).unwrap();
        let c0 = star_commutator(&x(i), &x(0), &op).unwrap();
        let rhs = s(&c0, &x(0)) + s(&x(0), &c0);
        assert!(upto_kinv(&(lhs - rhs), 2).is_zero());
    }
}

#[test]
fn associator_vanishes_only_with_default_second_order() {
    let op = build_star_operator(StarKind::Kappa, 2).unwrap();
    let printed = op.clone().with_printed_second_order();
    let triples = [(x(1), x(0), x(0)), (x(0), x(1), x(0)), (x(1), x(2), x(0))];
    for (f, g, h) in &triples {
        assert!(upto_kinv(&associator(f, g, h, &op).unwrap(), 2).is_zero());
        assert!(upto_kinv(&associator(f, g, h, &printed).unwrap(), 1).is_zero());
    }
    assert!(!upto_kinv(&associator(&x(1), &x(0), &x(0), &printed).unwrap(), 2).is_zero());
}

#[test]
fn element_round_trip() {
    let p = x(1).mul(&x(0)).scale(&i_over(Param::Kinv, 3)) + x(2);
    assert_eq!(CoordPolynomial::from_element(&p.to_element()).unwrap(), p);
}
