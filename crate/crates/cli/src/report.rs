//! Uniform run reports: command, seed, counts, first counterexample.
//! Deterministic for a fixed seed.

use std::fmt;

#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub command: String,
    pub seed: Option<u64>,
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_counterexample: Option<String>,
}

impl RunReport {
    pub fn new(command: &str, seed: Option<u64>) -> RunReport {
        RunReport {
            command: command.to_string(),
            seed,
            ..Default::default()
        }
    }

    pub fn record(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(counterexample());
            }
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: checked={} passed={} failed={}",
            self.command, self.checked, self.passed, self.failed
        )?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        if let Some(ce) = &self.first_counterexample {
            write!(f, "\nfirst counterexample:\n{ce}")?;
        }
        Ok(())
    }
}
