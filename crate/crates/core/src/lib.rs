//! Schubert problems in Grassmannians and their Galois groups.

pub mod error;
pub mod fibration;
pub mod frobenius;
pub mod group;
pub mod lr;
pub mod partition;
pub mod problem;
pub mod vakil;

pub use error::SchubertError;
pub use frobenius::{decide, run_sampler, GroupVerdict, SampleReport, SamplerOptions};
pub use lr::{lr_multiply, CohomologyClass, LrTable};
pub use partition::{GrassmannianSpec, Partition};
pub use problem::{degree, dual_problem, enumerate_problems, is_essential, SchubertProblem};
pub use vakil::{build_tournament, vakil_scan, VakilOutcome, VakilVerdict};
