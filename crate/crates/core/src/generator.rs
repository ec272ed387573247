//! Generator alphabet shared by every algebra in the crate.

use std::fmt;

use crate::error::{Result, TwistError};

/// Generator family. The declaration order is the global generator order:
/// rotation/boost families sort before momenta, so commuting a momentum past
/// a Lorentz generator never reintroduces Lorentz generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Lorentz generators `M^{μν}`, antisymmetric.
    M,
    /// Galilean rotations `K^{ij}`, antisymmetric.
    K,
    /// Galilean boosts `V^i`.
    V,
    /// Four-momenta `P_μ`.
    P,
    /// Galilean momenta `Π_μ`.
    Pi,
    /// Space-time coordinates `x_μ`.
    X,
    /// Derivatives `∂^μ`.
    D,
    /// Lorentz matrix entries `Λ^μ_ν` of the group.
    Lambda,
    /// Translations `a^μ` of the group.
    A,
    /// Galilei group rotation entries `R^i_j`.
    R,
    /// Galilei group boost parameters `v^i`.
    Vg,
    /// Galilei group spatial translations `b^i`.
    B,
    /// Galilei group time translation `τ`.
    Tau,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::M,
        Family::K,
        Family::V,
        Family::P,
        Family::Pi,
        Family::X,
        Family::D,
        Family::Lambda,
        Family::A,
        Family::R,
        Family::Vg,
        Family::B,
        Family::Tau,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::M => "M",
            Family::K => "K",
            Family::V => "V",
            Family::P => "P",
            Family::Pi => "Pi",
            Family::X => "x",
            Family::D => "d",
            Family::Lambda => "L",
            Family::A => "a",
            Family::R => "R",
            Family::Vg => "v",
            Family::B => "b",
            Family::Tau => "tau",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.name() == s)
    }

    pub fn arity(self) -> usize {
        match self {
            Family::M | Family::K | Family::Lambda | Family::R => 2,
            Family::Tau => 0,
            _ => 1,
        }
    }

    pub fn antisymmetric(self) -> bool {
        matches!(self, Family::M | Family::K)
    }

    /// Inclusive index range.
    pub fn index_range(self) -> (u8, u8) {
        match self {
            Family::M | Family::P | Family::Pi | Family::X | Family::D | Family::Lambda | Family::A => {
                (0, 3)
            }
            _ => (1, 3),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub family: Family,
    pub idx: [u8; 2],
}

impl Gen {
    /// Builds a generator, canonicalizing antisymmetric families to `μ<ν`.
    /// Returns the sign absorbed by the canonicalization, or `None` when the
    /// generator vanishes (equal antisymmetric indices).
    pub fn canonical(family: Family, indices: &[u8]) -> Result<Option<(i8, Gen)>> {
        if indices.len() != family.arity() {
            return Err(TwistError::IndexOutOfRange(format!(
                "{} takes {} indices, got {}",
                family.name(),
                family.arity(),
                indices.len()
            )));
        }
        let (lo, hi) = family.index_range();
        if let Some(bad) = indices.iter().find(|&&i| i < lo || i > hi) {
            return Err(TwistError::IndexOutOfRange(format!(
                "{}: index {} outside {}..={}",
                family.name(),
                bad,
                lo,
                hi
            )));
        }
        let mut idx = [0u8; 2];
        idx[..indices.len()].copy_from_slice(indices);
        if family.antisymmetric() {
            if idx[0] == idx[1] {
                return Ok(None);
            }
            if idx[0] > idx[1] {
                idx.swap(0, 1);
                return Ok(Some((-1, Gen { family, idx })));
            }
        }
        Ok(Some((1, Gen { family, idx })))
    }

    /// Infallible constructor for canonical index data.
    pub fn new(family: Family, indices: &[u8]) -> Gen {
        match Gen::canonical(family, indices) {
            Ok(Some((1, g))) => g,
            _ => panic!("non-canonical generator {}{:?}", family.name(), indices),
        }
    }

    pub fn m(a: u8, b: u8) -> Gen {
        Gen::new(Family::M, &[a, b])
    }

    pub fn p(a: u8) -> Gen {
        Gen::new(Family::P, &[a])
    }

    pub fn k(a: u8, b: u8) -> Gen {
        Gen::new(Family::K, &[a, b])
    }

    pub fn v(a: u8) -> Gen {
        Gen::new(Family::V, &[a])
    }

    pub fn pi(a: u8) -> Gen {
        Gen::new(Family::Pi, &[a])
    }

    pub fn indices(&self) -> &[u8] {
        &self.idx[..self.family.arity()]
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family.arity() {
            0 => write!(f, "{}", self.family.name()),
            1 => write!(f, "{}[{}]", self.family.name(), self.idx[0]),
            _ => write!(f, "{}[{},{}]", self.family.name(), self.idx[0], self.idx[1]),
        }
    }
}

/// Minkowski metric `η = diag(-1, 1, 1, 1)`.
pub fn eta(mu: u8) -> i128 {
    if mu == 0 {
        -1
    } else {
        1
    }
}

pub fn delta(a: u8, b: u8) -> i128 {
    (a == b) as i128
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisymmetric_canonicalization() {
        let (s, g) = Gen::canonical(Family::M, &[1, 0]).unwrap().unwrap();
        assert_eq!((s, g), (-1, Gen::m(0, 1)));
        assert!(Gen::canonical(Family::M, &[1, 1]).unwrap().is_none());
        assert!(Gen::canonical(Family::K, &[0, 1]).is_err());
        assert!(Gen::canonical(Family::P, &[4]).is_err());
    }

    #[test]
    fn order_puts_lorentz_before_momenta() {
        assert!(Gen::m(2, 3) < Gen::p(0));
        assert!(Gen::m(0, 1) < Gen::m(0, 2));
        assert!(Gen::k(1, 2) < Gen::v(1));
        assert!(Gen::v(3) < Gen::pi(0));
    }
}
