//! Instance checkers and seeded sweeps for the worm and Hardy-hierarchy
//! statements.

pub mod checks;
pub mod gen;
pub mod instance;
pub mod oracle;
pub mod report;
pub mod sweep;

pub use instance::Instance;
pub use report::{CheckReport, Counts, SweepReport, Verdict};
pub use sweep::{replay, sweep, sweep_reports, UnknownSuite};
