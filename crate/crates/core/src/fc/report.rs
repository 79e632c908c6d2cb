use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Enumeration bounds for exhaustive checking.
///
/// `max_arity` bounds the length of every source path that occurs, including
/// the sources of composites. `max_nesting` selects how deep pasting is
/// exercised: 0 checks only the vertical category, 1 adds the identity laws
/// and closure of single compositions, 2 or more adds two-level
/// associativity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_arity: usize,
    pub max_nesting: usize,
    pub max_cells_per_frame: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_arity: 3,
            max_nesting: 2,
            max_cells_per_frame: 10_000,
        }
    }
}

impl Bounds {
    pub fn new(max_arity: usize, max_nesting: usize, max_cells_per_frame: usize) -> Self {
        Bounds {
            max_arity,
            max_nesting,
            max_cells_per_frame,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub law: String,
    pub witness: String,
}

/// Outcome of a law check. `pass` holds exactly when `violations` is empty;
/// use the methods below to keep it that way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub pass: bool,
    pub violations: Vec<Violation>,
    pub checked: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
}

impl Default for LawReport {
    fn default() -> Self {
        LawReport::new()
    }
}

impl LawReport {
    pub fn new() -> Self {
        LawReport {
            pass: true,
            violations: Vec::new(),
            checked: BTreeMap::new(),
            bounds: None,
        }
    }

    pub fn with_bounds(bounds: Bounds) -> Self {
        LawReport {
            bounds: Some(bounds),
            ..LawReport::new()
        }
    }

    pub fn count(&mut self, law: &str) {
        *self.checked.entry(law.to_owned()).or_default() += 1;
    }

    pub fn violate(&mut self, law: &str, witness: impl Into<String>) {
        self.pass = false;
        self.violations.push(Violation {
            law: law.to_owned(),
            witness: witness.into(),
        });
    }

    /// Counts one instance of `law` and records a violation unless `ok`.
    pub fn expect(&mut self, law: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.count(law);
        if !ok {
            self.violate(law, witness());
        }
    }

    pub fn merge(&mut self, other: LawReport) {
        for (law, n) in other.checked {
            *self.checked.entry(law).or_default() += n;
        }
        self.pass &= other.pass;
        self.violations.extend(other.violations);
    }

    pub fn checked_total(&self) -> u64 {
        self.checked.values().sum()
    }

    pub fn checked_for(&self, law: &str) -> u64 {
        self.checked.get(law).copied().unwrap_or(0)
    }

    /// Violations in a canonical order, for comparing runs.
    pub fn normalized(&self) -> LawReport {
        let mut out = self.clone();
        out.violations.sort();
        out
    }
}
