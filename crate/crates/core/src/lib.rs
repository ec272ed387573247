//! Exact symbolic computation with twisted κ-Poincaré Hopf algebras.

pub mod contraction;
pub mod element;
pub mod error;
pub mod expected;
pub mod generator;
pub mod groebner;
pub mod hopf;
pub mod parser;
pub mod poincare;
pub mod poisson;
pub mod presentation;
pub mod registry;
pub mod render;
pub mod report;
pub mod rmatrix;
pub mod scalar;
pub mod series;
pub mod star;
pub mod suite;
pub mod twist;

pub use element::{Element, LinComb, TensorElement, Word};
pub use error::{Result, TwistError};
pub use generator::{Family, Gen};
pub use hopf::HopfPresentation;
pub use presentation::{Presentation, Substitution};
pub use report::{Report, Residual, Status};
pub use scalar::{Coeff, GaussRat, Mono, Param, TruncationPolicy, Q};
