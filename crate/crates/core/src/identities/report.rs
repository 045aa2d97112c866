use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// Every identity the crate can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    FirstOverlap,
    CorMaxIndex,
    SecondOverlap,
    FirstOverlapSchur,
    SecondOverlapSchur,
    WalkSplit,
    LabeledWalkSchur,
    SubpartitionLs,
    SubpartitionSchur,
    DualCauchy,
    Counterexample,
    FactorRule,
    ComplementReciprocity,
    LittlewoodSquare,
    LsRoutes,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::FirstOverlap,
        IdentityId::CorMaxIndex,
        IdentityId::SecondOverlap,
        IdentityId::FirstOverlapSchur,
        IdentityId::SecondOverlapSchur,
        IdentityId::WalkSplit,
        IdentityId::LabeledWalkSchur,
        IdentityId::SubpartitionLs,
        IdentityId::SubpartitionSchur,
        IdentityId::DualCauchy,
        IdentityId::Counterexample,
        IdentityId::FactorRule,
        IdentityId::ComplementReciprocity,
        IdentityId::LittlewoodSquare,
        IdentityId::LsRoutes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::FirstOverlap => "first-overlap",
            IdentityId::CorMaxIndex => "cor-max-index",
            IdentityId::SecondOverlap => "second-overlap",
            IdentityId::FirstOverlapSchur => "first-overlap-schur",
            IdentityId::SecondOverlapSchur => "second-overlap-schur",
            IdentityId::WalkSplit => "walk-split",
            IdentityId::LabeledWalkSchur => "labeled-walk-schur",
            IdentityId::SubpartitionLs => "subpartition-ls",
            IdentityId::SubpartitionSchur => "subpartition-schur",
            IdentityId::DualCauchy => "dual-cauchy",
            IdentityId::Counterexample => "counterexample",
            IdentityId::FactorRule => "factor-rule",
            IdentityId::ComplementReciprocity => "complement-reciprocity",
            IdentityId::LittlewoodSquare => "littlewood-square",
            IdentityId::LsRoutes => "ls-routes",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// How an identity was checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Exact comparison of canonical polynomials.
    Symbolic,
    /// Exact rational evaluation on a degree-certified grid.
    Grid,
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "symbolic" => Ok(Mode::Symbolic),
            "grid" => Ok(Mode::Grid),
            _ => Err(format!("unknown mode {s:?}; expected symbolic or grid")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    /// The hypotheses of the identity do not hold for this instance.
    Inapplicable,
}

/// The result of checking one instance of one identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub instance: serde_json::Value,
    pub mode: Mode,
    pub outcome: Outcome,
    /// On failure, the nonzero difference (or the offending point); on an
    /// inapplicable instance, the violated hypothesis.
    pub witness: Option<String>,
}

impl VerificationReport {
    pub fn pass(identity: IdentityId, instance: serde_json::Value, mode: Mode) -> Self {
        VerificationReport {
            identity,
            instance,
            mode,
            outcome: Outcome::Pass,
            witness: None,
        }
    }

    pub fn fail(identity: IdentityId, instance: serde_json::Value, mode: Mode, witness: String) -> Self {
        VerificationReport {
            identity,
            instance,
            mode,
            outcome: Outcome::Fail,
            witness: Some(witness),
        }
    }

    pub fn inapplicable(identity: IdentityId, instance: serde_json::Value, mode: Mode, reason: String) -> Self {
        VerificationReport {
            identity,
            instance,
            mode,
            outcome: Outcome::Inapplicable,
            witness: Some(reason),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}
