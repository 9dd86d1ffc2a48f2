use std::fmt;
use std::process::ExitCode;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use twisted_core::chars::CharError;
use twisted_core::dynamics::DynamicsError;
use twisted_core::io::IoError;
use twisted_core::lattice::LatticeError;
use twisted_core::twisted::CheckReport;
use twisted_core::verify::VerifyError;
use twisted_core::GroupError;

/// Exit codes: 0 success, 1 a check failed, 2 bad input, 3 a mathematical
/// precondition is not met, 4 internal inconsistency.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Precondition(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Internal(_) => 4,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Precondition(m) => write!(f, "precondition not met: {m}"),
            CliError::Internal(m) => write!(f, "internal inconsistency: {m}"),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Lattice(e) => e.into(),
            IoError::Group(e) => e.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        use LatticeError::*;
        match e {
            Group(e) => e.into(),
            NotSquare | NotUnimodular { .. } | DimensionMismatch { .. } | InvalidModulus | InvalidBound(_) => {
                CliError::Input(e.to_string())
            }
            InfiniteFixedSet
            | InfiniteReidemeister
            | EnumerationTooLarge { .. }
            | WitnessNotFound { .. }
            | QuotientTooLarge { .. } => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<CharError> for CliError {
    fn from(e: CharError) -> Self {
        match e {
            CharError::PrimeSearchFailed => CliError::Precondition(e.to_string()),
            e => CliError::Internal(e.to_string()),
        }
    }
}

impl From<DynamicsError> for CliError {
    fn from(e: DynamicsError) -> Self {
        match e {
            DynamicsError::InfiniteValueEncountered { .. } => CliError::Precondition(e.to_string()),
            DynamicsError::InvalidLength(_) => CliError::Input(e.to_string()),
            DynamicsError::Lattice(e) => e.into(),
            DynamicsError::Char(e) => e.into(),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Group(e) => e.into(),
            VerifyError::Char(e) => e.into(),
        }
    }
}

/// SHA-256 over labelled inputs, so equal inputs give equal digests.
#[derive(Default)]
pub struct InputDigest {
    hasher: Sha256,
}

impl InputDigest {
    pub fn add(&mut self, label: &str, bytes: &[u8]) {
        for part in [label.as_bytes(), bytes] {
            self.hasher.update((part.len() as u64).to_le_bytes());
            self.hasher.update(part);
        }
    }

    pub fn finish(self) -> String {
        hex::encode(self.hasher.finalize())
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub inputs_digest: String,
    pub results: Value,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
    pub wall_time_ms: u128,
}

/// What a command hands back before timing and digesting.
pub struct Outcome {
    pub results: Value,
    pub checks: Vec<CheckReport>,
    pub pretty: String,
}

impl Outcome {
    pub fn new(results: impl Serialize, checks: Vec<CheckReport>, pretty: String) -> Result<Self, CliError> {
        let results = serde_json::to_value(results).map_err(|e| CliError::Internal(e.to_string()))?;
        Ok(Outcome { results, checks, pretty })
    }
}
