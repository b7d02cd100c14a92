use serde::Serialize;

use crate::witness::WitnessSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Cyclic,
    NotCyclic,
    Unknown,
}

/// Which argument settled the question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Reason {
    /// Both Trybula inequalities hold (n = 3).
    TrybulaBothHold,
    /// `min(x + yz, y + zx, z + xy) > 1`.
    TrybulaIneq1Fails,
    /// The complemented form of the first inequality fails.
    TrybulaIneq2Fails,
    /// Some `i` has `s_i >= 1` and `s_{i+2} <= 1`; a witness can be built.
    UpDownConditionMet,
    /// The tuple lies in neither all-sums-below-one nor all-sums-above-one.
    MixedPairwiseSums,
    /// `min(t) > pi_n`.
    MinExceedsPiN,
    /// `max(t) < 1 - pi_n`.
    MaxBelowOneMinusPiN,
    /// No available criterion applies.
    Undecided,
}

impl Reason {
    pub fn status(self) -> Status {
        match self {
            Reason::TrybulaBothHold | Reason::UpDownConditionMet | Reason::MixedPairwiseSums => {
                Status::Cyclic
            }
            Reason::TrybulaIneq1Fails
            | Reason::TrybulaIneq2Fails
            | Reason::MinExceedsPiN
            | Reason::MaxBelowOneMinusPiN => Status::NotCyclic,
            Reason::Undecided => Status::Unknown,
        }
    }
}

/// Outcome of a cyclicity decision. The status is derived from the reason,
/// so the two can never disagree.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    status: Status,
    reason: Reason,
    witness: Option<WitnessSystem>,
}

impl Verdict {
    pub fn new(reason: Reason) -> Self {
        Self {
            status: reason.status(),
            reason,
            witness: None,
        }
    }

    /// Attach a witness. Only meaningful for cyclic verdicts.
    pub fn with_witness(mut self, witness: WitnessSystem) -> Self {
        debug_assert_eq!(self.status, Status::Cyclic);
        self.witness = Some(witness);
        self
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn reason(&self) -> Reason {
        self.reason
    }

    pub fn witness(&self) -> Option<&WitnessSystem> {
        self.witness.as_ref()
    }

    pub fn is_cyclic(&self) -> bool {
        self.status == Status::Cyclic
    }

    pub fn is_decisive(&self) -> bool {
        self.status != Status::Unknown
    }
}
