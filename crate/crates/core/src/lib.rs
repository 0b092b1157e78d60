//! Exact and numerical machinery for axial monogenic functions in the real
//! Clifford algebra `R_{0,m}`.
//!
//! The crate is layered bottom-up:
//!
//! * [`clifford`]: blades, multivectors and paravectors over exact rationals
//!   or `f64`.
//! * [`poly`]: polynomials in `x0, x1, ..., xm` with multivector coefficients,
//!   the Dirac / Cauchy-Riemann / Laplace operators, Cauchy-Kowalevski
//!   extension of polynomials and the generalized Hermite polynomials.
//! * [`axial`]: a closed term algebra of functions of `(x0, r)` with exact
//!   differentiation, the radial operators `D_r(n)` / `D^r(n)` and a decision
//!   procedure for equality.
//! * [`fueter`]: holomorphic seeds, the Fueter transform through the radial
//!   operators, the Vekua system and the catalogue of closed forms.
//! * [`numeric`]: `f64` evaluation, Gaussian series, finite-difference
//!   monogenicity checks, decay scans and CSV/JSON export.
//! * [`suite`]: the named verification suites driven by the command line.

pub mod axial;
pub mod clifford;
mod error;
pub mod exact;
pub mod fueter;
pub mod numeric;
pub mod poly;
pub mod suite;

pub use axial::{AxialExpr, AxialTerm, TermKey, Trig, Var};
pub use clifford::{BladeMask, ExactMultivector, Multivector, NumMultivector, Paravector, MAX_DIM};
pub use error::{Error, Result};
pub use exact::Rational;
pub use fueter::{
    axial_to_poly, closed_form, coeff_a, double_factorial, fueter, fueter_via_laplacian, seed,
    AxialPair, ClosedFormId, CoeffTableA, FormParams, HoloSeed, SeedKind,
};
pub use numeric::{DecayReport, EvalPoint, FdConfig, FdSide, GridRange};
pub use poly::{CliffPoly, ExponentVector, HermiteResult};
