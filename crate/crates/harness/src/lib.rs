//! Instance generation, the named corpus, the stress pipeline and the
//! scaling measurement behind the `eds` tool.

pub mod corpus;
pub mod gen;
pub mod scaling;
pub mod stress;

pub use corpus::{corpus, CorpusEntry};
pub use gen::{gen_in_class, generate, GenError, GenMode, GenSpec, Instance, Rng};
pub use stress::{stress, StressConfig, StressReport};
