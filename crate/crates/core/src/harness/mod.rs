//! Instance generation and the sweeps that check colourers, partitions
//! and perfectness against exact oracles.

pub mod canon;
pub mod generate;
pub mod suite;

pub use generate::{enumerate_all, generate_class_instances, structured_seeds, Instance, Mode, SweepConfig};
pub use suite::{run_on, run_suite, Colourer, Failure, InstanceRecord, SweepReport};
