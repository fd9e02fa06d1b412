//! Size limits for the exhaustive computations.

use serde::{Deserialize, Serialize};

use crate::Error;

/// Upper bounds on the exhaustive searches. Every field can be overridden
/// from the CLI configuration file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    /// Largest group order that may be enumerated element by element.
    pub group_order: usize,
    /// Largest sum-closure `C_A` that may be built.
    pub closure_size: usize,
    /// Largest building set for nested-set enumeration.
    pub building_set_size: usize,
    /// Largest number of nested sets produced by one enumeration.
    pub nested_sets: usize,
    /// Largest number of lines in one subspace for the bipartition search.
    pub bipartition_lines: usize,
    /// Longest word used by the random relator fuzzing.
    pub fuzz_word_length: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group_order: 100_000,
            closure_size: 20_000,
            building_set_size: 2_000,
            nested_sets: 2_000_000,
            bipartition_lines: 18,
            fuzz_word_length: 20,
        }
    }
}

impl Caps {
    pub(crate) fn check(
        &self,
        value: usize,
        cap: usize,
        what: impl Into<String>,
        key: &'static str,
    ) -> Result<(), Error> {
        if value > cap {
            Err(Error::CapExceeded {
                what: what.into(),
                cap,
                key,
            })
        } else {
            Ok(())
        }
    }
}
