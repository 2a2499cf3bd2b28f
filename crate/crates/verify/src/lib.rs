//! Named checks over the bilevel-6 computations, run into a JSON report.

pub mod checks;
pub mod forms;
pub mod report;
