//! Text and structured renderings of elements and tensors.
//!
//! The text form parses back with [`crate::parser`]; the structured form is a
//! versioned JSON document.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::element::{Element, TensorElement, Word};
use crate::scalar::{render_scalar, GaussRat, Mono, Param, Q};

pub const SCHEMA_VERSION: &str = "twistkit.expr/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

fn render_word(w: &Word) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
    }
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, t) in terms.into_iter().enumerate() {
        if k == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

fn scalar_times(g: &GaussRat, m: &Mono, body: &str) -> String {
    let s = render_scalar(g, m);
    match s.as_str() {
        "1" => body.to_string(),
        "-1" => format!("-{}", body),
        _ => format!("{}*{}", s, body),
    }
}

pub fn render_element(e: &Element) -> String {
    let mut terms = Vec::new();
    for (w, g, m) in e.scalar_terms() {
        if w.is_empty() {
            terms.push(render_scalar(&g, &m));
        } else {
            terms.push(scalar_times(&g, &m, &render_word(w)));
        }
    }
    join_terms(terms)
}

pub fn render_tensor(t: &TensorElement) -> String {
    let mut terms = Vec::new();
    for (ws, g, m) in t.lincomb().scalar_terms() {
        let body =
            ws.iter().map(|w| format!("({})", render_word(w))).collect::<Vec<_>>().join(" ox ");
        terms.push(scalar_times(&g, &m, &body));
    }
    join_terms(terms)
}

#[derive(Serialize)]
struct CoefficientJson {
    re: String,
    im: String,
    params: BTreeMap<&'static str, i64>,
}

#[derive(Serialize)]
struct TermJson {
    coefficient: CoefficientJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    words: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
struct ExprJson {
    schema: &'static str,
    rank: usize,
    terms: Vec<TermJson>,
}

fn q_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn coefficient_json(g: &GaussRat, m: &Mono) -> CoefficientJson {
    let params = Param::ALL
        .iter()
        .filter(|p| m.exp(**p) != 0)
        .map(|p| (p.name(), m.exp(*p) as i64))
        .collect();
    CoefficientJson { re: q_string(&g.re), im: q_string(&g.im), params }
}

fn word_json(w: &Word) -> Vec<String> {
    w.iter().map(|g| g.to_string()).collect()
}

pub fn structured_element(e: &Element) -> serde_json::Value {
    let terms = e
        .scalar_terms()
        .map(|(w, g, m)| TermJson {
            coefficient: coefficient_json(&g, &m),
            word: Some(word_json(w)),
            words: None,
        })
        .collect();
    serde_json::to_value(ExprJson { schema: SCHEMA_VERSION, rank: 1, terms }).unwrap()
}

pub fn structured_tensor(t: &TensorElement) -> serde_json::Value {
    let terms = t
        .lincomb()
        .scalar_terms()
        .map(|(ws, g, m)| TermJson {
            coefficient: coefficient_json(&g, &m),
            word: None,
            words: Some(ws.iter().map(word_json).collect()),
        })
        .collect();
    serde_json::to_value(ExprJson { schema: SCHEMA_VERSION, rank: t.rank(), terms }).unwrap()
}

/// Render either an element (rank 1) or a tensor.
pub fn render_any(t: &TensorElement, format: Format) -> String {
    match (format, t.rank()) {
        (Format::Text, 1) => render_element(&t.to_element()),
        (Format::Text, _) => render_tensor(t),
        (Format::Structured, 1) => {
            serde_json::to_string_pretty(&structured_element(&t.to_element())).unwrap()
        }
        (Format::Structured, _) => serde_json::to_string_pretty(&structured_tensor(t)).unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Gen;
    use crate::scalar::Coeff;

    #[test]
    fn renders_negative_imaginary_unit() {
        let e = Element::gen(Gen::p(2)).scale_gauss(-GaussRat::i());
        assert_eq!(render_element(&e), "-I*P[2]");
    }

    #[test]
    fn renders_tensor_with_unit_leg() {
        let t = TensorElement::simple(&[Element::gen(Gen::p(1)), Element::one()]);
        assert_eq!(render_tensor(&t), "(P[1]) ox (1)");
    }

    #[test]
    fn structured_schema_instance() {
        let e = Element::term(vec![Gen::new(crate::generator::Family::X, &[1])], Coeff::param(Param::Kinv));
        let v = structured_element(&e);
        assert_eq!(v["terms"][0]["coefficient"]["re"], "1");
        assert_eq!(v["terms"][0]["coefficient"]["im"], "0");
        assert_eq!(v["terms"][0]["coefficient"]["params"]["kinv"], 1);
        assert_eq!(v["terms"][0]["word"][0], "x[1]");
    }
}
