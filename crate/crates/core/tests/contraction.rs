mod common;

use common::*;
use twistkit::contraction::{
    b, contract_expression, contract_group_coproducts, contract_group_table, contract_presentation, rot, tau, vg,
    ContractionSpec,
};
use twistkit::element::{Element, TensorElement};
use twistkit::error::TwistError;
use twistkit::generator::Gen;
use twistkit::hopf::HopfPresentation;
use twistkit::poincare::{kappa_poincare, mass_casimir};
use twistkit::poisson::{quantize_bracket_table, reduce_orthogonality};
use twistkit::registry::{r_matrix, Registry};
use twistkit::scalar::{Param, TruncationPolicy, Q};

fn galilei_kappa() -> (HopfPresentation, ContractionSpec) {
    let k = kappa_poincare(TruncationPolicy::default()).unwrap();
    let spec = ContractionSpec::galilei_algebra("galilei-kappa", k.algebra()).unwrap();
    (contract_presentation(&k, &spec, "galilei-kappa").unwrap(), spec)
}

fn pi(mu: u8) -> Element {
    gen(Gen::pi(mu))
}

/// `e^{λΠ₀/κ̄}` to fourth order.
fn exp_pi0(lambda: i128) -> Element {
    let mut out = Element::zero();
    for n in 0..=4u32 {
        let k = c(rat(lambda.pow(n), n_factorial(n)), rat(0, 1), Some((Param::KbarInv, n as i8)));
        out += times(&word(&vec![Gen::pi(0); n as usize]), k);
    }
    out
}

fn pi_squared(h: &HopfPresentation) -> Element {
    (1..4).map(|k| h.algebra().multiply(&pi(k), &pi(k))).fold(Element::zero(), |a, b| a + b)
}

#[test]
fn boost_brackets() {
    let (h, _) = galilei_kappa();
    let alg = h.algebra();
    let i1 = c(rat(0, 1), rat(1, 1), None);
    let p2 = pi_squared(&h);
    for i in 1..4u8 {
        assert_eq!(alg.bracket(Gen::v(i), Gen::pi(0)), times(&pi(i), i1.clone()));
        for j in 1..4u8 {
            assert!(alg.bracket(Gen::v(i), Gen::v(j)).is_zero());
            // i(δ_ij Π⃗²/2κ̄ − Π_iΠ_j/κ̄): carries the i the display omits
            let mut expect = times(&alg.multiply(&pi(i), &pi(j)), c(rat(0, 1), rat(-1, 1), Some((Param::KbarInv, 1))));
            if i == j {
                expect += times(&p2, c(rat(0, 1), rat(1, 2), Some((Param::KbarInv, 1))));
            }
            assert_eq!(alg.bracket(Gen::v(i), Gen::pi(j)), expect, "[V{}, Pi{}]", i, j);
        }
    }
}

#[test]
fn lone_boost_diverges() {
    let (_, spec) = galilei_kappa();
    let r = contract_expression(&gen(Gen::m(0, 1)), &spec);
    assert!(matches!(r, Err(TwistError::DivergentLimit { .. })));
    assert_eq!(contract_expression(&gen(Gen::p(2)), &spec).unwrap(), pi(2));
}

#[test]
fn momentum_hopf_structure() {
    let r = Registry::new(TruncationPolicy::default()).unwrap();
    for name in ["galilei-kappa-xi", "galilei-kappa-hat"] {
        let h = r.algebra(name).unwrap();
        let alg = h.algebra();
        let t = |a: Element, b: Element| alg.tensor(&[a, b]);
        assert_eq!(h.coproduct(&pi(0)).unwrap(), t(pi(0), Element::one()) + t(Element::one(), pi(0)));
        assert_eq!(h.antipode(&pi(0)).unwrap(), -pi(0));
        for i in [1u8, 3] {
            if name.ends_with("xi") || i == 3 {
                assert_eq!(h.coproduct(&pi(i)).unwrap(), t(pi(i), exp_pi0(-1)) + t(Element::one(), pi(i)));
                assert_eq!(h.antipode(&pi(i)).unwrap(), -alg.multiply(&pi(i), &exp_pi0(1)));
            }
        }
    }
}

#[test]
fn casimir_contracts_to_kinetic_term() {
    let k = kappa_poincare(TruncationPolicy::default()).unwrap();
    let (h, spec) = galilei_kappa();
    let cas = contract_expression(&mass_casimir(&k, Q::new(1, 2)).unwrap(), &spec).unwrap();
    let expect = -h.algebra().multiply(&pi_squared(&h), &exp_pi0(1));
    assert_eq!(cas, expect);
    for g in h.generators() {
        assert!(h.algebra().commutator(&cas, &gen(g)).is_zero(), "{}", g);
    }
}

fn entry(t: &twistkit::poisson::CommutatorTable, x: Gen, y: Gen) -> Element {
    if x <= y {
        t.get(&(x, y)).cloned().unwrap_or_default()
    } else {
        -t.get(&(y, x)).cloned().unwrap_or_default()
    }
}

#[test]
fn galilei_group_relations() {
    let spec = ContractionSpec::galilei_group().unwrap();
    let engine = quantize_bracket_table(&r_matrix("r-total").unwrap()).unwrap();
    let engine: twistkit::poisson::CommutatorTable =
        engine.into_iter().map(|(k, v)| (k, reduce_orthogonality(&v))).collect();
    let g = contract_group_table(&engine, &spec).unwrap();
    for k in 1..4 {
        for l in 1..4 {
            for m in 1..4 {
                for n in 1..4 {
                    assert!(entry(&g, rot(k, l), rot(m, n)).is_zero());
                }
            }
        }
    }
    // [τ, b^i] = (i/κ̄)b^i + i(ξ̄/2)(R^i₃ − δ^i₃) away from the κ̂ sector
    let no_hat = |e: Element| e.filter_params(|m| m.exp(Param::KhbarInv) == 0);
    for i in 1..4u8 {
        let delta = if i == 3 { Element::one() } else { Element::zero() };
        let expect = times(&gen(b(i)), c(rat(0, 1), rat(1, 1), Some((Param::KbarInv, 1))))
            + times(&(gen(rot(i, 3)) - delta), c(rat(0, 1), rat(1, 2), Some((Param::XiBar, 1))));
        assert_eq!(no_hat(entry(&g, tau(), b(i))), expect);
    }
}

#[test]
fn galilei_group_coproducts() {
    let spec = ContractionSpec::galilei_group().unwrap();
    let alg = spec.target();
    let d = contract_group_coproducts(&spec).unwrap();
    let t = |a: Element, b: Element| alg.tensor(&[a, b]);
    assert_eq!(d[&tau()], t(gen(tau()), Element::one()) + t(Element::one(), gen(tau())));
    for i in 1..4 {
        let mut db = t(gen(vg(i)), gen(tau())) + t(gen(b(i)), Element::one());
        let mut dv = t(Element::one(), gen(vg(i)));
        for j in 1..4 {
            db += t(gen(rot(i, j)), gen(b(j)));
            dv += t(gen(rot(i, j)), gen(vg(j)));
        }
        assert_eq!(d[&b(i)], db);
        // Λ^i₀ = v^i/c gives Δv^i = R^i_j ⊗ v^j + v^i ⊗ 1
        assert_eq!(d[&vg(i)], dv - t(Element::one(), gen(vg(i))) + t(gen(vg(i)), Element::one()));
        let mut dr = TensorElement::zero(2);
        for j in 1..4 {
            dr += t(gen(rot(i, j)), gen(rot(j, 1)));
        }
        assert_eq!(d[&rot(i, 1)], dr);
    }
}
