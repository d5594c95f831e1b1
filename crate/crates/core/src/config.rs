use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::Fin2Category;

/// Resource bounds shared by every enumerating or closing construction.
///
/// Exceeding a bound is always a hard error; nothing is ever truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Operand bound on objects for exhaustive enumerations.
    pub max_objects: usize,
    /// Operand bound on 1-cells for exhaustive enumerations.
    pub max_one_cells: usize,
    /// Operand bound on 2-cells for exhaustive enumerations.
    pub max_two_cells: usize,
    /// Longest reduced word the funny-tensor closure may produce.
    pub max_word_len: usize,
    /// Bound on the number of 1-cells or 2-cells of any constructed 2-category.
    pub max_cells: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_objects: 6,
            max_one_cells: 40,
            max_two_cells: 200,
            max_word_len: 12,
            max_cells: 5000,
        }
    }
}

impl Limits {
    /// Checks an operand of an exhaustive enumeration.
    pub fn check_operand(&self, what: &str, c: &Fin2Category) -> Result<()> {
        if c.num_objects() > self.max_objects {
            return Err(Error::size(format!("{what} objects"), c.num_objects(), self.max_objects));
        }
        if c.num_one_cells() > self.max_one_cells {
            return Err(Error::size(format!("{what} 1-cells"), c.num_one_cells(), self.max_one_cells));
        }
        if c.num_two_cells() > self.max_two_cells {
            return Err(Error::size(format!("{what} 2-cells"), c.num_two_cells(), self.max_two_cells));
        }
        Ok(())
    }

    pub fn check_cells(&self, what: &str, count: usize) -> Result<()> {
        if count > self.max_cells {
            Err(Error::size(what, count, self.max_cells))
        } else {
            Ok(())
        }
    }

    /// Limits large enough for the four-fold tensors used in coherence runs.
    pub fn generous() -> Self {
        Limits {
            max_objects: 64,
            max_one_cells: 4000,
            max_two_cells: 20000,
            max_word_len: 12,
            max_cells: 100_000,
        }
    }
}
