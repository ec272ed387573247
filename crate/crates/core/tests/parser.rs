use twistkit::error::TwistError;
use twistkit::parser::{parse_element, parse_expression};
use twistkit::registry::Registry;
use twistkit::render::{render_element, render_tensor};
use twistkit::scalar::TruncationPolicy;

#[test]
fn registry_tables_round_trip() {
    let r = Registry::new(TruncationPolicy::default()).unwrap();
    let mut checked = 0;
    for h in r.algebras() {
        let alg = h.algebra();
        for (_, v) in alg.table() {
            assert_eq!(&parse_element(&render_element(v), alg).unwrap(), v);
            checked += 1;
        }
        for (g, d) in h.coproduct_table() {
            let back = parse_expression(&render_tensor(d), alg).unwrap().into_tensor();
            assert_eq!(&back, d, "{} Δ({})", h.name(), g);
            checked += 1;
        }
        for (g, s) in h.antipode_table() {
            assert_eq!(&parse_element(&render_element(s), alg).unwrap(), s, "{} S({})", h.name(), g);
            checked += 1;
        }
    }
    assert!(checked > 100, "{}", checked);
}

#[test]
fn errors_carry_positions() {
    let r = Registry::new(TruncationPolicy::default()).unwrap();
    let alg = r.algebra("kappa-poincare").unwrap().algebra();
    assert!(matches!(parse_element("P[1] + * P[2]", alg), Err(TwistError::Syntax { pos: 7, .. })));
    assert!(matches!(parse_element("M[1,1]", alg), Err(TwistError::ZeroGenerator(..)) | Err(TwistError::IndexOutOfRange(..)) | Err(TwistError::Syntax { .. })));
    assert!(matches!(parse_element("Q[1]", alg), Err(TwistError::UnknownGenerator(..))));
    assert!(matches!(parse_element("zeta * P[1]", alg), Err(TwistError::UnknownParameter(..)) | Err(TwistError::UnknownGenerator(..))));
}

#[test]
fn antisymmetric_index_order() {
    let r = Registry::new(TruncationPolicy::default()).unwrap();
    let alg = r.algebra("kappa-poincare").unwrap().algebra();
    let a = parse_element("M[1,0]", alg).unwrap();
    let b = parse_element("-M[0,1]", alg).unwrap();
    assert_eq!(a, b);
    let t = parse_expression("P[1] ox P[0] - P[0] ox P[1]", alg).unwrap();
    assert_eq!(t.rank(), 2);
}
