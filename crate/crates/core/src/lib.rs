//! Exact computations with graded path algebras, Hopf actions, smash
//! products, minimal resolutions and Ext algebras.
//!
//! Everything is generic over a [`Field`]; the aliases below fix the ground
//! field to the rationals, which is what the command line tool uses.

pub mod action;
pub mod algebra;
pub mod catalog;
pub mod dg;
pub mod error;
pub mod ext;
pub mod field;
pub mod formats;
pub mod frobenius;
pub mod group;
pub mod hopf;
pub mod ideal;
pub mod linalg;
pub mod modules;
pub mod presentation;
pub mod quiver;
pub mod report;
pub mod resolution;
pub mod smash;
pub mod superpotential;
pub mod transfer;

pub use action::{verify_module_algebra, HAction};
pub use algebra::{GradedAlgebra, Peirce};
pub use dg::{cohomology_algebra, dg_smash, dg_smash_cohomology_check, verify_dg, verify_dg_action, CohomologyAlgebra, DgAction, DgAlgebra};
pub use error::{Error, Result};
pub use ext::{generation_check, gorenstein_check_bounded, h_action_on_ext, yoneda_ext_algebra, ExtAlgebra};
pub use field::Field;
pub use formats::{load_bundle, parse_bundle, ActionData, Bundle};
pub use frobenius::{cy_check, graded_symmetric_check, SymmetricFormCertificate};
pub use group::FiniteGroup;
pub use ideal::{ideal_dims, ideal_equality_check};
pub use hopf::{HopfAlgebra, IntegralCertificate, Invariants};
pub use linalg::{Echelon, Matrix, Subspace};
pub use modules::{adjoint_phi, grading_hom_action, hom_a, hom_action, hom_invariants_check, hom_smash, theta_check, HModule, HomSpace, ModuleRep};
pub use presentation::{GradedBasis, Presentation, QuotientAlgebra};
pub use quiver::{Arrow, Path, PathElement, Quiver};
pub use report::{Bounds, Check, Report, Verdict};
pub use resolution::{d_koszul_check, koszul_degree, minimal_resolution, FreeModule, Generator, MinimalResolution};
pub use smash::{basic_smash_product, basic_smash_product_q, covering_presentation, smash_product, verify_covering_iso, Covering};
pub use superpotential::{least_rotation, Superpotential};
pub use transfer::{verify_cor_ext, verify_thm_koszul_transfer};

pub type Rational = num_rational::BigRational;
pub type MatrixQ = Matrix<Rational>;
pub type PresentationQ = Presentation<Rational>;
pub type QuotientAlgebraQ = QuotientAlgebra<Rational>;
pub type HopfAlgebraQ = HopfAlgebra<Rational>;
pub type GradedAlgebraQ = GradedAlgebra<Rational>;

/// Deterministic generator used by every randomized check.
pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// Vector with small random integer entries in `-3..=3`.
pub fn random_vector<F: Field>(rng: &mut impl rand::Rng, n: usize) -> Vec<F> {
    (0..n).map(|_| F::from_int(rng.gen_range(-3..=3))).collect()
}
