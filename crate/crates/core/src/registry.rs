//! Named presentations, twists and r-matrices, built once per truncation
//! policy.

use std::collections::BTreeMap;

use crate::contraction::{contract_presentation, ContractionSpec};
use crate::error::{Result, TwistError};
use crate::hopf::HopfPresentation;
use crate::poincare::{kappa_poincare, poincare_classical};
use crate::rmatrix::{r_kappa, r_kappa_hat, r_xi, WedgeBivector};
use crate::scalar::TruncationPolicy;
use crate::twist::{canonical_twist, flat_canonical_twist, lie_twist, twisted_hopf, TwistElement};

pub const ALGEBRAS: [&str; 6] = [
    "poincare-classical",
    "kappa-poincare",
    "kappa-poincare-xi",
    "kappa-poincare-hat",
    "galilei-kappa-xi",
    "galilei-kappa-hat",
];

pub const TWISTS: [&str; 3] = ["F-xi-kappa", "F-hat-kappa", "F-xi-flat"];

pub const R_MATRICES: [&str; 4] = ["r-kappa", "r-kappa-hat", "r-xi", "r-total"];

/// Presentation a twist acts on.
pub fn twist_base(name: &str) -> Result<&'static str> {
    match name {
        "F-xi-kappa" | "F-hat-kappa" => Ok("kappa-poincare"),
        "F-xi-flat" => Ok("poincare-classical"),
        _ => Err(TwistError::Registry(format!("unknown twist `{}`", name))),
    }
}

/// Twisted presentation named after the twist.
pub fn twisted_name(twist: &str) -> Result<&'static str> {
    match twist {
        "F-xi-kappa" => Ok("kappa-poincare-xi"),
        "F-hat-kappa" => Ok("kappa-poincare-hat"),
        _ => Err(TwistError::Registry(format!("no registered algebra for twist `{}`", twist))),
    }
}

pub fn r_matrix(name: &str) -> Result<WedgeBivector> {
    match name {
        "r-kappa" => Ok(r_kappa()),
        "r-kappa-hat" => Ok(r_kappa_hat()),
        "r-xi" => Ok(r_xi()),
        "r-total" => Ok(r_kappa() + r_kappa_hat() + r_xi()),
        _ => Err(TwistError::Registry(format!("unknown r-matrix `{}`", name))),
    }
}

pub struct Registry {
    policy: TruncationPolicy,
    algebras: BTreeMap<String, HopfPresentation>,
    twists: BTreeMap<String, TwistElement>,
}

impl Registry {
    pub fn new(policy: TruncationPolicy) -> Result<Self> {
        let classical = poincare_classical(policy.clone())?;
        let kappa = kappa_poincare(policy.clone())?;
        let fxi = canonical_twist(&kappa)?;
        let fhat = lie_twist(&kappa)?;
        let flat = flat_canonical_twist(&classical)?;
        let kxi = twisted_hopf(&kappa, &fxi, "kappa-poincare-xi")?;
        let khat = twisted_hopf(&kappa, &fhat, "kappa-poincare-hat")?;
        let gxi = contract_presentation(&kxi, &ContractionSpec::galilei_algebra("galilei-kappa-xi", kxi.algebra())?, "galilei-kappa-xi")?;
        let ghat =
            contract_presentation(&khat, &ContractionSpec::galilei_algebra("galilei-kappa-hat", khat.algebra())?, "galilei-kappa-hat")?;
        let mut algebras = BTreeMap::new();
        for h in [classical, kappa, kxi, khat, gxi, ghat] {
            algebras.insert(h.name().to_string(), h);
        }
        let mut twists = BTreeMap::new();
        for f in [fxi, fhat, flat] {
            twists.insert(f.name().to_string(), f);
        }
        Ok(Registry { policy, algebras, twists })
    }

    pub fn policy(&self) -> &TruncationPolicy {
        &self.policy
    }

    pub fn algebra(&self, name: &str) -> Result<&HopfPresentation> {
        self.algebras.get(name).ok_or_else(|| TwistError::Registry(format!("unknown algebra `{}`", name)))
    }

    /// Registered algebras in the fixed listing order.
    pub fn algebras(&self) -> impl Iterator<Item = &HopfPresentation> {
        ALGEBRAS.iter().map(move |n| &self.algebras[*n])
    }

    pub fn twist(&self, name: &str) -> Result<&TwistElement> {
        self.twists.get(name).ok_or_else(|| TwistError::Registry(format!("unknown twist `{}`", name)))
    }

    /// The Galilean contraction spec for a relativistic registered algebra.
    pub fn contraction(&self, algebra: &str) -> Result<ContractionSpec> {
        let h = self.algebra(algebra)?;
        if algebra.starts_with("galilei") {
            return Err(TwistError::Registry(format!("`{}` is already contracted", algebra)));
        }
        let target = match algebra {
            "poincare-classical" => "galilei",
            "kappa-poincare" => "galilei-kappa",
            "kappa-poincare-xi" => "galilei-kappa-xi",
            _ => "galilei-kappa-hat",
        };
        ContractionSpec::galilei_algebra(target, h.algebra())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_six_algebras() {
        let r = Registry::new(TruncationPolicy::default()).unwrap();
        let names: Vec<_> = r.algebras().map(|h| h.name().to_string()).collect();
        assert_eq!(names, ALGEBRAS);
        assert!(r.algebra("nope").is_err());
    }

    #[test]
    fn twist_lookup() {
        let r = Registry::new(TruncationPolicy::default()).unwrap();
        for t in TWISTS {
            assert_eq!(r.twist(t).unwrap().name(), t);
            twist_base(t).unwrap();
        }
    }
}
