//! Exact computer algebra for germs of holomorphic vector fields at the
//! origin of `C^2` and `C^3`.
//!
//! Everything is computed over the Gaussian rationals `Q(i)` with no
//! floating point. Polynomials and truncated series live in [`PolySeries`];
//! fields in [`VectorFieldJet`]. On top of that sit jet-level centralizers
//! and first integrals ([`centralizer`]), plane blow-ups and resolution
//! trees ([`blowup`]) and integrability identities ([`integrability`]).

pub mod blowup;
pub mod centralizer;
pub mod error;
pub mod field;
pub mod gaussian;
pub mod integrability;
pub mod linalg;
pub mod monomial;
pub mod resonance;
pub mod series;
pub mod table;
pub mod text;
pub mod univariate;

pub use error::{Error, Result};
pub use field::{
    apply, divergence, dual_form, hamiltonian, lie_bracket, quasi_decompose_field, quasi_decompose_function,
    wedge, weighted_euler, DualForm, OneFormJet, TwoFormJet, VectorFieldJet,
};
pub use gaussian::GaussianRational;
pub use monomial::{Monomial, MAX_VARS};
pub use series::{Order, PolySeries, Precision, Weight};
pub use centralizer::{
    ad_kernel, first_integral_kernel, generic_rank, CentralizerReport, Certification, FirstIntegralReport,
    KernelElement, Stabilization,
};
pub use resonance::{classify_linear, resonances, LinearCase, LinearClass, RatioRationality, Resonance, ResonanceSet};
pub use table::{table_oracle, TableDimension, TableEntry, TableParams};
pub use blowup::{
    blowup_pullback, classify_singularity, dicritical_test, divisor_singularities, is_isolated, resolve,
    strict_transform, BlownUpField, Chart, Classification, DicriticalTest, DivisorCoordinate, NodeStatus,
    ResolutionNode, ResolveOptions, SingularPoint, SingularityClass,
};
pub use univariate::UniPoly;
pub use integrability::{
    closedness_check, cr_pair, dual_pair, integrating_factor_check, invariance_check, log_decomposition,
    meromorphic_first_integral_check, Closedness, DualPair, LogDecomposition, LogOutcome, MeromorphicRatio,
};
