#![allow(dead_code)]

pub mod props;

use twistkit::element::Element;
use twistkit::generator::Gen;
use twistkit::scalar::{Coeff, GaussRat, Mono, Param, Q};

pub fn gen(g: Gen) -> Element {
    Element::gen(g)
}

pub fn word(gs: &[Gen]) -> Element {
    Element::gen_word(gs.to_vec())
}

pub fn rat(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

/// `(re + i·im) · p^e`.
pub fn c(re: Q, im: Q, p: Option<(Param, i8)>) -> Coeff {
    let g = GaussRat::new(re, im);
    match p {
        Some((p, e)) => Coeff::monomial(g, Mono::param(p, e)),
        None => Coeff::from_gauss(g),
    }
}

pub fn times(e: &Element, k: Coeff) -> Element {
    e.scale(&k, &twistkit::scalar::TruncationPolicy::unbounded())
}

pub fn n_factorial(n: u32) -> i128 {
    (1..=n as i128).product()
}
