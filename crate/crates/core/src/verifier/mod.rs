//! Exhaustive and sampled checks of the structural hypotheses.
//!
//! Every check returns a [`CheckReport`]. Enumerations are exact (all
//! elements up to a word length, deduplicated by normal form); sampling uses
//! a seeded ChaCha generator whose seed is recorded in the report.

mod conditions;
mod cone;
mod cross;
mod enumerate;
mod lemmas;
mod oracle;

pub use conditions::{check_condition_a, check_condition_b};
pub use cone::{check_cone_axioms, check_order_laws, check_trichotomy};
pub use cross::{check_breadth_criterion, check_crisp_signs, check_handle_signs, cross_validate_signs};
pub use enumerate::{enumerate_group, enumerate_monoid, enumerate_unmovable, random_signed_word};
pub use lemmas::check_lemma_suite;
pub use oracle::{brute_force_tail, check_tail_oracle, word_class};

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

/// Bounds for a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationBudget {
    /// Maximum word length of enumerated elements.
    pub max_len: usize,
    /// Maximum Δ-power.
    pub max_power: usize,
    /// Number of random samples.
    pub samples: usize,
    pub seed: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_len: 4,
            max_power: 3,
            samples: 200,
            seed: 0,
        }
    }
}

/// Keep at most this many counterexample traces per report.
const MAX_TRACES: usize = 20;

/// Outcome of one check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub instances: u64,
    pub failure_count: u64,
    /// Full traces of the first failures.
    pub failures: Vec<String>,
    /// How often each notable case occurred.
    pub coverage: BTreeMap<String, u64>,
    /// Computed values worth reporting, such as depths.
    pub data: BTreeMap<String, Value>,
    pub seed: Option<u64>,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            instances: 0,
            failure_count: 0,
            failures: Vec::new(),
            coverage: BTreeMap::new(),
            data: BTreeMap::new(),
            seed: None,
            pass: true,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn instance(&mut self) {
        self.instances += 1;
    }

    pub fn fail(&mut self, trace: impl Into<String>) {
        self.failure_count += 1;
        self.pass = false;
        if self.failures.len() < MAX_TRACES {
            self.failures.push(trace.into());
        }
    }

    /// Records `ok`, adding the lazily built trace on failure.
    pub fn check(&mut self, ok: bool, trace: impl FnOnce() -> String) {
        self.instance();
        if !ok {
            self.fail(trace());
        }
    }

    pub fn count(&mut self, key: &str) {
        *self.coverage.entry(key.to_string()).or_insert(0) += 1;
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.data.insert(key.to_string(), value.into());
    }

    /// Folds another report into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.instances += other.instances;
        for f in other.failures {
            if self.failures.len() < MAX_TRACES {
                self.failures.push(format!("[{}] {f}", other.name));
            }
        }
        self.failure_count += other.failure_count;
        self.pass &= other.pass;
        for (k, v) in other.coverage {
            *self.coverage.entry(format!("{}.{k}", other.name)).or_insert(0) += v;
        }
        for (k, v) in other.data {
            self.data.insert(format!("{}.{k}", other.name), v);
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({} instances, {} failures)",
            self.name,
            if self.pass { "pass" } else { "FAIL" },
            self.instances,
            self.failure_count
        )?;
        if let Some(seed) = self.seed {
            writeln!(f, "  seed: {seed}")?;
        }
        for (k, v) in &self.data {
            writeln!(f, "  {k}: {v}")?;
        }
        for (k, v) in &self.coverage {
            writeln!(f, "  coverage {k}: {v}")?;
        }
        for t in &self.failures {
            writeln!(f, "  counterexample: {t}")?;
        }
        Ok(())
    }
}
