//! Exact computer algebra for finite-rank Grassmann algebras and the
//! supergeometry built on them: graded homomorphisms, points of polynomial
//! superdomains, the semigroup of finite-range endomorphisms acting on the
//! direct limit of point sets, and the super de Rham complex.
//!
//! All coefficients are exact rationals and every value is immutable.

pub mod derham;
pub mod error;
pub mod grassmann;
pub mod hom;
pub mod linalg;
pub mod monomial;
pub mod points;
pub mod scalar;
pub mod semigroup;
pub mod syntax;

pub use derham::{
    antiderivative, cohomology_dims, cohomology_dims_homotopy, euler_contract,
    graded_derivation_apply, Derivation, FormMonomial, Generator, SuperForm,
};
pub use error::{Error, Result};
pub use grassmann::{monomial_basis, GrassmannElement, Level, Parity, RankChange};
pub use hom::{
    compose_hom, j_family, lemma1_epi, verify_hom, GradedHom, GradedMap, JMap, OddLineHom,
    SubalgebraBasis, VerificationReport,
};
pub use monomial::Monomial;
pub use points::{
    body_of_point, embed_point, eval_superfunction, induced_point_map, points_dim, FibreLine,
    QPoint, SuperDomainSpec, SuperFunction,
};
pub use scalar::Scalar;
pub use semigroup::{
    act, act_at, classes_equal, endo_compose, normalize_class, reconstruct_pt_n, retract,
    FiniteRangeEndo, PtInftyClass, ReconstructionReport,
};
