//! Named scenarios that recompute known identities among colored
//! degree-two diagrams, and the reports the `jdr` tool prints for them.

mod error;
mod report;
mod scenarios;

pub use error::VerifyError;
pub use report::{ScenarioReport, Status, SuiteReport, Summary};
pub use scenarios::{named, registry, run_scenario, run_suite, Env, Mutation, Outcome, Scenario};
