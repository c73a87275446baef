use bei_algebra::{format_list, Ideal};
use serde::Serialize;

use crate::CoreError;

/// One ideal equality or containment, with both reduced Groebner bases so a
/// failure can be read off directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealComparison {
    pub name: String,
    pub left: String,
    pub right: String,
    pub holds: bool,
}

/// Outcome of a structural check: every comparison made, plus free-form notes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub comparisons: Vec<IdealComparison>,
    pub notes: Vec<String>,
}

impl Evidence {
    pub fn new() -> Evidence {
        Evidence::default()
    }

    pub fn holds(&self) -> bool {
        self.comparisons.iter().all(|c| c.holds)
    }

    /// The first comparison that fails.
    pub fn first_failure(&self) -> Option<&IdealComparison> {
        self.comparisons.iter().find(|c| !c.holds)
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn equal(
        &mut self,
        name: impl Into<String>,
        left: &Ideal,
        right: &Ideal,
    ) -> Result<bool, CoreError> {
        let holds = left.equals(right)?;
        self.record(name.into(), left, right, holds)
    }

    /// `left ⊆ right`.
    pub fn contained(
        &mut self,
        name: impl Into<String>,
        left: &Ideal,
        right: &Ideal,
    ) -> Result<bool, CoreError> {
        let holds = right.contains_ideal(left)?;
        self.record(name.into(), left, right, holds)
    }

    /// A comparison that is not an ideal relation, such as a numeric bound.
    pub fn fact(
        &mut self,
        name: impl Into<String>,
        left: String,
        right: String,
        holds: bool,
    ) -> bool {
        self.comparisons.push(IdealComparison {
            name: name.into(),
            left,
            right,
            holds,
        });
        holds
    }

    fn record(
        &mut self,
        name: String,
        left: &Ideal,
        right: &Ideal,
        holds: bool,
    ) -> Result<bool, CoreError> {
        let left = format_list(left.gb()?);
        let right = format_list(right.gb()?);
        self.comparisons.push(IdealComparison {
            name,
            left,
            right,
            holds,
        });
        Ok(holds)
    }

    pub fn extend(&mut self, other: Evidence) {
        self.comparisons.extend(other.comparisons);
        self.notes.extend(other.notes);
    }
}
