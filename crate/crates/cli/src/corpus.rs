//! Batch runs over a directory of job documents.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::jobs::{expectation_mismatches, parse_document, run_job, JobError, RunOptions};

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CorpusEntry {
    pub file: String,
    pub task: Option<String>,
    pub passed: bool,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<serde_json::Value>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CorpusReport {
    pub directory: String,
    pub passed: usize,
    pub failed: usize,
    pub entries: Vec<CorpusEntry>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let mark = if e.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("{mark} {} ({})\n", e.file, e.task.as_deref().unwrap_or("?")));
            for f in &e.failures {
                out.push_str(&format!("       {f}\n"));
            }
        }
        out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        out
    }
}

/// `*.json` files of `dir`, sorted by name.
pub fn documents(dir: &Path) -> Result<Vec<PathBuf>, JobError> {
    let read = std::fs::read_dir(dir).map_err(|e| JobError::Schema(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = read
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(JobError::Schema(format!("{}: no *.json documents", dir.display())));
    }
    Ok(files)
}

fn run_one(path: &Path, opts: &RunOptions) -> CorpusEntry {
    let file = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let outcome = std::fs::read_to_string(path)
        .map_err(|e| JobError::Schema(e.to_string()))
        .and_then(|text| parse_document(&text))
        .and_then(|doc| run_job(&doc, opts).map(|r| (doc, r)));
    match outcome {
        Ok((doc, report)) => {
            let mut failures = expectation_mismatches(&doc, &report);
            if doc.expect.is_none() {
                failures.push("document has no `expect` block".into());
            }
            CorpusEntry {
                file,
                task: Some(report.task.clone()),
                passed: failures.is_empty(),
                failures,
                result: Some(report.result),
            }
        }
        Err(e) => CorpusEntry { file, task: None, passed: false, failures: vec![e.to_string()], result: None },
    }
}

pub fn run_corpus(dir: &Path, opts: &RunOptions) -> Result<CorpusReport, JobError> {
    let files = documents(dir)?;
    let entries: Vec<CorpusEntry> = files.par_iter().map(|p| run_one(p, opts)).collect();
    let passed = entries.iter().filter(|e| e.passed).count();
    Ok(CorpusReport {
        directory: dir.display().to_string(),
        passed,
        failed: entries.len() - passed,
        entries,
    })
}
