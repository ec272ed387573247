mod common;

use std::sync::OnceLock;

use common::props::*;
use proptest::prelude::*;
use twistkit::element::Element;
use twistkit::registry::Registry;
use twistkit::scalar::{Coeff, Param, TruncationPolicy};
use twistkit::star::{associator, build_star_operator, CoordPolynomial, StarKind};

fn twisted() -> &'static Registry {
    static R: OnceLock<Registry> = OnceLock::new();
    R.get_or_init(|| {
        let policy = TruncationPolicy::default().with(Param::Kinv, 2).with(Param::Xi, 1).with(Param::Khinv, 1);
        Registry::new(policy).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn normal_ordering_is_associative(t in (pgen(), pgen(), pgen())) {
        associativity(t)?;
    }

    #[test]
    fn commutator_satisfies_jacobi(t in (pgen(), pgen(), pgen())) {
        algebra_jacobi(t)?;
    }

    #[test]
    fn sklyanin_jacobi_on_the_group(t in (group_coord(), group_coord(), group_coord())) {
        poisson_jacobi(t)?;
    }

    #[test]
    fn schouten_is_symmetric_on_bivectors(t in (bivector(), bivector())) {
        schouten_symmetry(t)?;
    }

    #[test]
    fn render_parse_round_trip(e in element()) {
        parser_round_trip(e)?;
    }

    #[test]
    fn twisted_coproduct_is_multiplicative(
        a in pgen(), b in pgen(), name in prop::sample::select(vec!["kappa-poincare-xi", "kappa-poincare-hat"])
    ) {
        let h = twisted().algebra(name).unwrap();
        let (a, b) = (Element::gen(a), Element::gen(b));
        let lhs = h.coproduct(&h.algebra().multiply(&a, &b)).unwrap();
        let rhs = h.algebra().multiply_tensors(&h.coproduct(&a).unwrap(), &h.coproduct(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kappa_star_is_associative_to_second_order(
        f in prop::collection::vec(0u8..2, 4), g in prop::collection::vec(0u8..2, 4), h in prop::collection::vec(0u8..2, 4)
    ) {
        let op = build_star_operator(StarKind::Kappa, 2).unwrap();
        let mono = |v: &[u8]| CoordPolynomial::monomial([v[0], v[1], v[2], v[3]], Coeff::one());
        let a = associator(&mono(&f), &mono(&g), &mono(&h), &op).unwrap();
        prop_assert!(a.map_coeffs(|k| k.filter(|m| m.exp(Param::Kinv) <= 2)).is_zero());
    }
}
