//! Expression grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := unary ('ox' unary)*
//! unary  := '-' unary | atom
//! atom   := INT ('/' INT)? | 'I' | PARAM | NAME ('[' INT (',' INT)* ']')?
//!         | 'exp' '(' expr ')' | '(' expr ')'
//! ```
//!
//! Parameters are `kinv khinv xi c cinv kbar_inv khbar_inv xibar`. Results are
//! normal-ordered and truncated in the given presentation.

use crate::element::{Element, TensorElement};
use crate::error::{Result, TwistError};
use crate::generator::{Family, Gen};
use crate::presentation::Presentation;
use crate::scalar::{q, Coeff, GaussRat, Param};
use crate::series::exp_element;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i128),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer;

impl Lexer {
    fn tokens(src: &str) -> Result<Vec<(usize, Tok)>> {
        let b = src.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < b.len() {
            let c = b[i] as char;
            if c.is_ascii_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let s = i;
                while i < b.len() && (b[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let n = src[s..i]
                    .parse::<i128>()
                    .map_err(|_| TwistError::Syntax { pos: s, msg: "integer too large".into() })?;
                out.push((s, Tok::Int(n)));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let s = i;
                while i < b.len() && ((b[i] as char).is_ascii_alphanumeric() || b[i] == b'_') {
                    i += 1;
                }
                out.push((s, Tok::Ident(src[s..i].to_string())));
            } else if "+-*/()[],".contains(c) {
                out.push((i, Tok::Sym(c)));
                i += 1;
            } else {
                return Err(TwistError::Syntax { pos: i, msg: format!("unexpected character `{}`", c) });
            }
        }
        out.push((src.len(), Tok::End));
        Ok(out)
    }
}

/// A parsed value: an element (rank 1) or a tensor of rank 2 or 3.
#[derive(Clone, Debug, PartialEq)]
pub enum Parsed {
    Element(Element),
    Tensor(TensorElement),
}

impl Parsed {
    pub fn rank(&self) -> usize {
        match self {
            Parsed::Element(_) => 1,
            Parsed::Tensor(t) => t.rank(),
        }
    }

    /// Rank-1 values become rank-1 tensors.
    pub fn into_tensor(self) -> TensorElement {
        match self {
            Parsed::Element(e) => TensorElement::from_element(e),
            Parsed::Tensor(t) => t,
        }
    }

    pub fn into_element(self) -> Option<Element> {
        match self {
            Parsed::Element(e) => Some(e),
            Parsed::Tensor(_) => None,
        }
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    p: &'a Presentation,
}

fn syntax(pos: usize, msg: impl Into<String>) -> TwistError {
    TwistError::Syntax { pos, msg: msg.into() }
}

/// The parameter monomial named by `s`, if any.
fn parameter(s: &str) -> Option<Coeff> {
    if s == "cinv" {
        return Some(Coeff::param_pow(Param::C, -1));
    }
    Param::from_name(s).map(Coeff::param)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected `{}`", c)))
        }
    }

    fn expr(&mut self) -> Result<Parsed> {
        let mut acc = self.term()?;
        loop {
            let sign = match self.peek() {
                Tok::Sym('+') => 1,
                Tok::Sym('-') => -1,
                _ => return Ok(acc),
            };
            let pos = self.pos();
            self.bump();
            let rhs = self.term()?;
            acc = self.add(acc, rhs, sign, pos)?;
        }
    }

    fn term(&mut self) -> Result<Parsed> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Sym('*') {
            let pos = self.pos();
            self.bump();
            let rhs = self.factor()?;
            acc = self.mul(acc, rhs, pos)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Parsed> {
        let mut acc = self.unary()?;
        while matches!(self.peek(), Tok::Ident(s) if s == "ox") {
            let pos = self.pos();
            self.bump();
            let rhs = self.unary()?;
            if acc.rank() + rhs.rank() > 3 {
                return Err(syntax(pos, "tensor rank above 3"));
            }
            let mut legs = Vec::new();
            let mut t = TensorElement::zero(acc.rank() + rhs.rank());
            let (a, b) = (acc.into_tensor(), rhs.into_tensor());
            for (la, ca) in a.legs() {
                for (lb, cb) in b.legs() {
                    legs.clear();
                    legs.extend(la.iter().cloned());
                    legs.extend(lb.iter().cloned());
                    t += self.p.tensor_from_legs(&legs, &ca.mul_trunc(&cb, self.p.policy()));
                }
            }
            acc = Parsed::Tensor(t);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Parsed> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(match self.unary()? {
                Parsed::Element(e) => Parsed::Element(-e),
                Parsed::Tensor(t) => Parsed::Tensor(-t),
            });
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Parsed> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                let mut x = q(n, 1);
                if *self.peek() == Tok::Sym('/') {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Tok::Int(0) => return Err(syntax(dpos, "division by zero")),
                        Tok::Int(d) => x = q(n, d),
                        _ => return Err(syntax(dpos, "expected integer denominator")),
                    }
                }
                Ok(Parsed::Element(Element::scalar(Coeff::from_q(x))))
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(s) => self.named(&s, pos),
            Tok::End => Err(syntax(pos, "unexpected end of input")),
            Tok::Sym(c) => Err(syntax(pos, format!("unexpected `{}`", c))),
        }
    }

    fn named(&mut self, s: &str, pos: usize) -> Result<Parsed> {
        if s == "I" {
            return Ok(Parsed::Element(Element::scalar(Coeff::i())));
        }
        if s == "exp" {
            self.expect('(')?;
            let arg = self.expr()?;
            self.expect(')')?;
            let e = arg.into_element().ok_or_else(|| syntax(pos, "exp of a tensor"))?;
            return Ok(Parsed::Element(exp_element(self.p, &e)?));
        }
        if let Some(c) = parameter(s) {
            return Ok(Parsed::Element(Element::scalar(c.truncate(self.p.policy()))));
        }
        let family = Family::from_name(s).ok_or_else(|| TwistError::UnknownGenerator(s.to_string(), self.p.name().to_string()))?;
        let mut idx = Vec::new();
        if *self.peek() == Tok::Sym('[') {
            self.bump();
            loop {
                let ipos = self.pos();
                match self.bump() {
                    Tok::Int(n) if (0..=255).contains(&n) => idx.push(n as u8),
                    _ => return Err(syntax(ipos, "expected index")),
                }
                match self.bump() {
                    Tok::Sym(',') => continue,
                    Tok::Sym(']') => break,
                    _ => return Err(syntax(self.toks[self.at - 1].0, "expected `,` or `]`")),
                }
            }
        }
        let text = if idx.is_empty() {
            s.to_string()
        } else {
            format!("{}[{}]", s, idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
        };
        let (sign, g) = Gen::canonical(family, &idx)?.ok_or(TwistError::ZeroGenerator(text.clone()))?;
        if !self.p.contains(&g) {
            return Err(TwistError::UnknownGenerator(text, self.p.name().to_string()));
        }
        Ok(Parsed::Element(Element::gen(g).scale_gauss(GaussRat::int(sign as i128))))
    }

    fn add(&self, a: Parsed, b: Parsed, sign: i128, pos: usize) -> Result<Parsed> {
        let s = GaussRat::int(sign);
        match (a, b) {
            (Parsed::Element(x), Parsed::Element(y)) => Ok(Parsed::Element(x + y.scale_gauss(s))),
            (Parsed::Tensor(x), Parsed::Tensor(y)) if x.rank() == y.rank() => Ok(Parsed::Tensor(x + y.scale_gauss(s))),
            _ => Err(syntax(pos, "sum of terms with different tensor ranks")),
        }
    }

    fn mul(&self, a: Parsed, b: Parsed, pos: usize) -> Result<Parsed> {
        let pol = self.p.policy();
        let scalar = |e: &Element| e.iter().all(|(w, _)| w.is_empty());
        match (a, b) {
            (Parsed::Element(x), Parsed::Element(y)) => Ok(Parsed::Element(self.p.multiply(&x, &y))),
            (Parsed::Tensor(x), Parsed::Tensor(y)) if x.rank() == y.rank() => {
                Ok(Parsed::Tensor(self.p.multiply_tensors(&x, &y)))
            }
            (Parsed::Element(x), Parsed::Tensor(t)) | (Parsed::Tensor(t), Parsed::Element(x)) if scalar(&x) => {
                Ok(Parsed::Tensor(t.scale(&x.constant_part(), pol)))
            }
            _ => Err(syntax(pos, "product of tensors with different ranks")),
        }
    }
}

/// Parses `text` in presentation `p`.
pub fn parse_expression(text: &str, p: &Presentation) -> Result<Parsed> {
    let toks = Lexer::tokens(text)?;
    let mut parser = Parser { toks, at: 0, p };
    let v = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(syntax(parser.pos(), "trailing input"));
    }
    Ok(v)
}

/// Parses an expression that must be rank 1.
pub fn parse_element(text: &str, p: &Presentation) -> Result<Element> {
    parse_expression(text, p)?
        .into_element()
        .ok_or_else(|| TwistError::Mismatch("expected an element, got a tensor".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poincare::{kappa_poincare, p_low};
    use crate::render::{render_element, render_tensor};
    use crate::scalar::TruncationPolicy;

    fn kp() -> crate::hopf::HopfPresentation {
        kappa_poincare(TruncationPolicy::default()).unwrap()
    }

    #[test]
    fn product_of_generators() {
        let h = kp();
        let e = parse_element("M[1,2]*P[1]", h.algebra()).unwrap();
        assert_eq!(e, Element::gen_word(vec![Gen::m(1, 2), Gen::p(1)]));
    }

    #[test]
    fn coproduct_of_momentum() {
        let h = kp();
        let t = parse_expression("P[1] ox exp(-kinv*P[0]) + 1 ox P[1]", h.algebra()).unwrap().into_tensor();
        assert_eq!(t, h.coproduct(&p_low(1)).unwrap());
    }

    #[test]
    fn equal_antisymmetric_indices_rejected() {
        let h = kp();
        assert!(matches!(parse_expression("M[1,1]", h.algebra()), Err(TwistError::ZeroGenerator(_))));
    }

    #[test]
    fn swapped_indices_carry_sign() {
        let h = kp();
        let e = parse_element("M[2,1]", h.algebra()).unwrap();
        assert_eq!(e, -Element::gen(Gen::m(1, 2)));
    }

    #[test]
    fn syntax_error_position() {
        let h = kp();
        match parse_expression("P[1] + * P[2]", h.algebra()) {
            Err(TwistError::Syntax { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn unknown_names() {
        let h = kp();
        assert!(matches!(parse_expression("Q[1]", h.algebra()), Err(TwistError::UnknownGenerator(..))));
        assert!(matches!(parse_expression("V[1]", h.algebra()), Err(TwistError::UnknownGenerator(..))));
        assert!(matches!(parse_expression("P[7]", h.algebra()), Err(TwistError::IndexOutOfRange(_))));
    }

    #[test]
    fn inverse_light_speed() {
        let h = kp();
        let e = parse_element("c*cinv", h.algebra()).unwrap();
        assert_eq!(e, Element::one());
    }

    #[test]
    fn rendered_forms_reparse() {
        let h = kp();
        let e = h.antipode(&Element::gen(Gen::m(0, 1))).unwrap();
        assert_eq!(parse_element(&render_element(&e), h.algebra()).unwrap(), e);
        let t = h.coproduct(&Element::gen(Gen::m(0, 2))).unwrap();
        assert_eq!(parse_expression(&render_tensor(&t), h.algebra()).unwrap().into_tensor(), t);
        let mixed = parse_element("(1+1/2*I)*kinv*P[1]", h.algebra()).unwrap();
        assert_eq!(render_element(&mixed), "(1+1/2*I)*kinv*P[1]");
    }
}
