//! Check verdicts and their replayable certificates.

use serde::{Deserialize, Serialize};

/// Outcome of a check. `Undetermined` is reserved for search-backed checks
/// whose node budget ran out; it is distinct from a negative verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    True,
    False,
    Undetermined,
}

impl Verdict {
    pub fn holds(self) -> bool {
        matches!(self, Verdict::True)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::True => write!(f, "true"),
            Verdict::False => write!(f, "false"),
            Verdict::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// A witness that replays to the stated verdict. Subsets are written as
/// label lists so certificates read the same way the input documents do.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    None,
    /// An exhibited positroid order.
    Order {
        order: Vec<String>,
    },
    /// A set that is a basis of exactly one of the matroid and its
    /// Grassmann-necklace reconstruction.
    NecklaceMismatch {
        set: Vec<String>,
        basis_of_matroid: bool,
    },
    /// A basis pair whose sorted halves are not both bases.
    SortingFailure {
        b1: Vec<String>,
        b2: Vec<String>,
        odd: Vec<String>,
        even: Vec<String>,
    },
    /// A connected flat and a component of the contraction by it that fits
    /// in no cyclic interval disjoint from the flat.
    FlatComponent {
        flat: Vec<String>,
        component: Vec<String>,
    },
    /// A cyclic set with connected contraction whose restriction does not
    /// decompose along the maximal cyclic intervals inside it.
    CyclicSetSplit {
        cyclic_set: Vec<String>,
        intervals: Vec<Vec<String>>,
    },
    /// A four-element minor that is a 2-circuit plus a 2-cocircuit whose
    /// circuit is not a cyclic interval in the induced order.
    ForbiddenMinor {
        deleted: Vec<String>,
        contracted: Vec<String>,
        circuit: Vec<String>,
        cocircuit: Vec<String>,
    },
    /// A flat with connected restriction and contraction of which neither
    /// it nor its complement is an interval.
    FlatNotInterval {
        flat: Vec<String>,
    },
    /// A flag of flats with connected quotients whose difference partition
    /// crosses.
    CrossingFlag {
        flats: Vec<Vec<String>>,
    },
    /// Two blocks that cross in the order.
    CrossingBlocks {
        block1: Vec<String>,
        block2: Vec<String>,
    },
    /// Exhaustive search failed; every candidate order must make each of
    /// these connected flats (with connected contraction) a cyclic
    /// interval, and no order does.
    Unsatisfiable {
        constraints: Vec<Vec<String>>,
    },
    /// The search node budget ran out before a conclusion.
    BudgetExhausted {
        visited: u64,
    },
    /// Loops were removed before the check ran; they never affect the
    /// verdict.
    LoopsStripped {
        loops: Vec<String>,
        inner: Box<Certificate>,
    },
}

/// Verdict plus certificate, the result shape shared by every boolean
/// check in the crate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub certificate: Certificate,
}

impl CheckReport {
    pub fn yes() -> CheckReport {
        CheckReport {
            verdict: Verdict::True,
            certificate: Certificate::None,
        }
    }

    pub fn yes_with(certificate: Certificate) -> CheckReport {
        CheckReport {
            verdict: Verdict::True,
            certificate,
        }
    }

    pub fn no(certificate: Certificate) -> CheckReport {
        CheckReport {
            verdict: Verdict::False,
            certificate,
        }
    }

    pub fn undetermined(visited: u64) -> CheckReport {
        CheckReport {
            verdict: Verdict::Undetermined,
            certificate: Certificate::BudgetExhausted { visited },
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }
}
