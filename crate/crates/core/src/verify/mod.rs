//! Executable checks of the permanent and adjoint identities, instance
//! generation, and counterexample search.

pub mod checks;
pub mod gen;
pub mod phi;
pub mod report;
pub mod search;

pub use checks::{run_suite, Suite, SuiteRun};
pub use gen::{gen_matrix, gen_pair, GenSpec, Profile};
pub use phi::{lemma42_combine, phi_graph, phi_set, Combination, CombineCase, PhiSet};
pub use report::{CheckReport, Counterexample, Outcome};
pub use search::{search_counterexample, SearchTarget};
