use twistkit::generator::eta;
use twistkit::poincare::{m_up, p_low};
use twistkit::report::Status;
use twistkit::rmatrix::{
    check_cybe, check_mybe, r_kappa, r_kappa_hat, r_xi, schouten, schouten_components, LieAlgebra, WedgeBivector,
    WedgeTrivector,
};
use twistkit::scalar::{Coeff, GaussRat, Mono, Param};

fn kinv2() -> Coeff {
    Coeff::monomial(GaussRat::one(), Mono::param(Param::Kinv, 2))
}

/// `(1/κ²) Σ_{μ<ν} M_{μν} ∧ P^μ ∧ P^ν`, built from the metric directly.
fn modified_rhs() -> WedgeTrivector {
    let mut out = WedgeTrivector::zero();
    for mu in 0..4u8 {
        for nu in mu + 1..4 {
            let m = m_up(mu, nu).scale_gauss(GaussRat::int(eta(mu) * eta(nu)));
            let pm = p_low(mu).scale_gauss(GaussRat::int(eta(mu)));
            let pn = p_low(nu).scale_gauss(GaussRat::int(eta(nu)));
            out = out + WedgeTrivector::wedge3(&m, &pm, &pn, &kinv2());
        }
    }
    out
}

#[test]
fn kappa_schouten_bracket() {
    let g = LieAlgebra::poincare();
    let s = schouten(&r_kappa(), &r_kappa(), &g).unwrap();
    assert_eq!(s, modified_rhs());
    assert!(!s.is_zero());
}

#[test]
fn classical_equations() {
    let g = LieAlgebra::poincare();
    for r in [r_xi(), r_kappa_hat()] {
        assert!(schouten(&r, &r, &g).unwrap().is_zero());
    }
    assert_eq!(check_cybe("xi", &r_xi(), &g).unwrap().status, Status::Pass);
    assert_eq!(check_cybe("hat", &r_kappa_hat(), &g).unwrap().status, Status::Pass);
    let k = check_cybe("kappa", &r_kappa(), &g).unwrap();
    assert_eq!(k.status, Status::Fail);
    assert!(!k.residual.is_empty());
}

#[test]
fn mixed_brackets_vanish_both_ways() {
    let g = LieAlgebra::poincare();
    let rs = [r_kappa(), r_kappa_hat(), r_xi()];
    for a in 0..3 {
        for b in 0..3 {
            if a != b {
                assert!(schouten(&rs[a], &rs[b], &g).unwrap().is_zero(), "[[{}, {}]]", a, b);
                assert!(schouten_components(&rs[a], &rs[b], &g).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn modified_equation() {
    let g = LieAlgebra::poincare();
    let total = r_kappa() + r_kappa_hat() + r_xi();
    assert!(check_mybe("total", &total, &modified_rhs(), &g).unwrap().passed());
    assert!(check_mybe("kappa", &r_kappa(), &modified_rhs(), &g).unwrap().passed());
    assert!(check_mybe("zero", &WedgeBivector::zero(), &WedgeTrivector::zero(), &g).unwrap().passed());
    assert!(!check_mybe("xi", &r_xi(), &modified_rhs(), &g).unwrap().passed());
}

#[test]
fn r_kappa_resummed_form() {
    // (1/κ) M_{0μ} ∧ P^μ
    let mut expect = WedgeBivector::zero();
    let kinv = Coeff::param(Param::Kinv);
    for mu in 1..4u8 {
        let m = m_up(0, mu).scale_gauss(GaussRat::int(eta(0) * eta(mu)));
        let p = p_low(mu).scale_gauss(GaussRat::int(eta(mu)));
        expect = expect + WedgeBivector::wedge(&m, &p, &kinv);
    }
    assert_eq!(r_kappa(), expect);
}
