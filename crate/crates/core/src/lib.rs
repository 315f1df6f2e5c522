//! Exact computation in the modified q-Weyl algebras `A_q(S)` attached to the
//! two quasi-split type AIII Satake diagrams, together with the braid group
//! operators, the homomorphism from the ıquantum group, and the polynomial
//! module.

pub mod coeff;
pub mod error;
pub mod expr;
pub mod iqg;
pub mod operators;
pub mod polymod;
pub mod report;
pub mod variant;
pub mod weylcore;

pub use coeff::{qdoublefact, qfact, qint, QPoly, QScalar};
pub use error::{Error, Result};
pub use expr::{Direction, Expr, Twist};
pub use iqg::{big_omega, big_psi, phi, tau, IExpr, ILetter, ISubst, Realization};
pub use operators::{braid_t, omega_spec, psi_spec, BraidKind, BraidParams, Fault, Tables};
pub use polymod::{act, tcal, PolyElement};
pub use report::{Check, Report, Status, Summary};
pub use variant::{cartan, Sign, Variant, VariantKind};
pub use weylcore::{
    check_confluence, check_weyl_relations, random_words, reduce, EndoSpec, FreeExpr, WeylElement,
    WeylLetter, WeylMonomial,
};
