//! JSON front end for the forca engine.

pub mod corpus;
pub mod document;
pub mod jobs;
pub mod report;

pub use document::{JobDocument, Task};
pub use jobs::{parse_document, run_job, JobError, RunOptions};
pub use report::Report;
