//! Exact matrix algebra over commutative, additively idempotent semirings:
//! permanents, permanental adjoints, fast assignment-style permanents, and a
//! harness that checks identities between them on seeded random instances.
//!
//! ```
//! use semiperm::{Matrix, Semiring, adj, per_subset_dp};
//!
//! let a = Matrix::parse(Semiring::MaxTimes, &[&["1", "1/2"], &["2", "2"]]).unwrap();
//! assert_eq!(per_subset_dp(&a).unwrap().to_string(), "2");
//! assert_eq!(adj(&a).unwrap().entry(1, 2).unwrap().to_string(), "1/2");
//! ```

pub mod adjoint;
pub mod assignment;
pub mod axioms;
pub mod error;
pub mod format;
pub mod matrix;
pub mod permanent;
pub mod permutation;
pub mod semiring;
pub mod verify;

pub use adjoint::{adj, adj_via_power, per_adj_star, satisfies_star, StarWitness};
pub use assignment::{per_boolean, per_fast, per_maxmin, per_maxplus, AssignmentSolution};
pub use axioms::{check_axioms, default_samples, is_incline, AxiomReport, NonIdempotentControl, SemiringLaws};
pub use error::{Error, Result};
pub use format::{parse_matrix, to_canonical, MatrixDoc};
pub use matrix::{omega, permutation_matrix, IndexTuple, Matrix};
pub use permanent::{
    per_diag_dominant, per_enumerate, per_laplace, per_row_expansion, per_subset_dp, permanent, Algorithm, Caps,
    PermanentResult,
};
pub use permutation::Permutation;
pub use semiring::{Element, Semiring};
