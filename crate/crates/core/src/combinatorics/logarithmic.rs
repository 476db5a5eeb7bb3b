//! Deciding whether `l(w^k) = k l(w)` for every `k`.

use std::fmt;

use super::bands::detect_bands;
use super::fc::{is_cfc, is_cyclically_reduced, is_torsion_free};
use crate::error::{Error, Result};
use crate::roots::RootEngine;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Logarithmic,
    NotLogarithmic,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    NotCyclicallyReduced,
    NotTorsionFree,
    /// Torsion-free CFC with no large band.
    CfcNoLargeBands,
    /// `l(w^k) < k l(w)` at this `k`.
    BoundedCheckFailed(usize),
    /// Every `k` up to the bound passed.
    BoundedCheckInconclusive(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogVerdict {
    pub outcome: Outcome,
    pub reason: Reason,
}

impl fmt::Display for LogVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outcome = match self.outcome {
            Outcome::Logarithmic => "yes",
            Outcome::NotLogarithmic => "no",
            Outcome::Unknown => "unknown",
        };
        let reason = match self.reason {
            Reason::NotCyclicallyReduced => "not cyclically reduced".to_string(),
            Reason::NotTorsionFree => "not torsion-free".to_string(),
            Reason::CfcNoLargeBands => "torsion-free CFC without large bands".to_string(),
            Reason::BoundedCheckFailed(k) => format!("length drops at k={k}"),
            Reason::BoundedCheckInconclusive(k) => format!("no length drop up to k={k}"),
        };
        write!(f, "{outcome} ({reason})")
    }
}

fn verdict(outcome: Outcome, reason: Reason) -> LogVerdict {
    LogVerdict { outcome, reason }
}

/// Decides logarithmicity of a reduced word, falling back to a bounded check.
pub fn decide_logarithmic(engine: &RootEngine, w: &Word, bound: usize, cap: usize) -> Result<LogVerdict> {
    if !engine.is_reduced(w) {
        return Err(Error::Precondition("decide_logarithmic needs a reduced word".into()));
    }
    let cfc = is_cfc(engine, w);
    // CFC words are cyclically reduced by definition.
    if !cfc && !is_cyclically_reduced(engine, w, cap)? {
        return Ok(verdict(Outcome::NotLogarithmic, Reason::NotCyclicallyReduced));
    }
    if !is_torsion_free(engine.system(), w) {
        return Ok(verdict(Outcome::NotLogarithmic, Reason::NotTorsionFree));
    }
    if cfc && !detect_bands(engine, w, cap)?.iter().any(|b| b.is_large) {
        return Ok(verdict(Outcome::Logarithmic, Reason::CfcNoLargeBands));
    }
    Ok(match engine.first_log_failure(w, bound) {
        Some(k) => verdict(Outcome::NotLogarithmic, Reason::BoundedCheckFailed(k)),
        None => verdict(Outcome::Unknown, Reason::BoundedCheckInconclusive(bound)),
    })
}
