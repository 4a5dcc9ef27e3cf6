//! Fusion-ring engine and bound verifier for the rank <= 2 Weyl alcove
//! categories attached to sl2, sl3, so5 and g2 at a positive integer level.
//!
//! The crate is organised in layers: `lie_core` holds the root data and
//! Weyl-group combinatorics, `charweights` computes classical weight
//! multiplicities, `fusion` implements the affine folding algorithm for
//! fusion products, `qnum` provides quantum integers in double and
//! double-double precision, `catdata` derives categorical invariants
//! (quantum dimensions, twists, root-lattice gradings), and `etale_scan`
//! runs the inequality machinery and survivor scans built on top.

pub mod lie_core;
pub mod qnum;
pub mod charweights;
pub mod fusion;
pub mod catdata;
pub mod etale_scan;

use std::fmt;

/// Error returned when the hypotheses of a published statement are not met
/// by the supplied parameters, as opposed to the statement being false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisError {
    message: String,
}

impl HypothesisError {
    pub fn new(message: impl Into<String>) -> Self {
        HypothesisError { message: message.into() }
    }

    pub fn message(&self) -> &str {
        &self.message
    }
}

impl fmt::Display for HypothesisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hypothesis not satisfied: {}", self.message)
    }
}

impl std::error::Error for HypothesisError {}
