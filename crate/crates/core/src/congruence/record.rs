use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::exactpoly::IntPoly;

/// Which statement a record verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Thm11,
    Eq21,
    Thm12,
    Thm13,
    Eq41,
    Chu,
    Id31,
    Lemma32,
    Eq38,
    Case1,
    Case2,
    Case3,
    Classical11,
    Classical12,
    Classical13,
}

impl Theorem {
    pub const ALL: [Theorem; 15] = [
        Theorem::Thm11,
        Theorem::Eq21,
        Theorem::Thm12,
        Theorem::Thm13,
        Theorem::Eq41,
        Theorem::Chu,
        Theorem::Id31,
        Theorem::Lemma32,
        Theorem::Eq38,
        Theorem::Case1,
        Theorem::Case2,
        Theorem::Case3,
        Theorem::Classical11,
        Theorem::Classical12,
        Theorem::Classical13,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Theorem::Thm11 => "thm11",
            Theorem::Eq21 => "eq21",
            Theorem::Thm12 => "thm12",
            Theorem::Thm13 => "thm13",
            Theorem::Eq41 => "eq41",
            Theorem::Chu => "chu",
            Theorem::Id31 => "id31",
            Theorem::Lemma32 => "lemma32",
            Theorem::Eq38 => "eq38",
            Theorem::Case1 => "case1",
            Theorem::Case2 => "case2",
            Theorem::Case3 => "case3",
            Theorem::Classical11 => "classical11",
            Theorem::Classical12 => "classical12",
            Theorem::Classical13 => "classical13",
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            Theorem::Classical11 | Theorem::Classical12 | Theorem::Classical13
        )
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownTheorem(pub String);

impl fmt::Display for UnknownTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown theorem tag `{}`", self.0)
    }
}

impl std::error::Error for UnknownTheorem {}

impl FromStr for Theorem {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Skipped,
}

impl Status {
    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Status::Holds
        } else {
            Status::Fails
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Skipped => "skipped",
        })
    }
}

/// Result of one theorem instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub theorem: Theorem,
    pub params: Vec<i64>,
    pub status: Status,
    pub remainder_digest: Option<String>,
    pub elapsed_ms: u64,
    /// Full nonzero remainder of a failing check, when one exists.
    #[serde(skip)]
    pub remainder: Option<String>,
}

impl VerificationRecord {
    pub fn new(theorem: Theorem, params: Vec<i64>, status: Status) -> Self {
        VerificationRecord {
            theorem,
            params,
            status,
            remainder_digest: None,
            elapsed_ms: 0,
            remainder: None,
        }
    }

    pub fn with_digest(mut self, digest: String) -> Self {
        self.remainder_digest = Some(digest);
        self
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    /// Equality ignoring timing.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.theorem == other.theorem
            && self.params == other.params
            && self.status == other.status
            && self.remainder_digest == other.remainder_digest
    }

    pub fn sort_key(&self) -> (Theorem, &[i64]) {
        (self.theorem, &self.params)
    }
}

/// How a check came out, before timing is attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    Holds,
    Skipped,
    /// The nonzero residue that witnesses failure.
    Residue(IntPoly),
    /// Failure without a polynomial witness.
    Failed(String),
}

impl Outcome {
    pub(crate) fn from_residue(r: IntPoly) -> Self {
        if r.is_zero() {
            Outcome::Holds
        } else {
            Outcome::Residue(r)
        }
    }

    pub(crate) fn holds(&self) -> bool {
        *self == Outcome::Holds
    }

    /// Combine two sub-checks; the first failure wins.
    pub(crate) fn and(self, other: Outcome) -> Outcome {
        match self {
            Outcome::Holds => other,
            failed => failed,
        }
    }
}

pub(crate) fn timed(
    theorem: Theorem,
    params: Vec<i64>,
    f: impl FnOnce() -> Outcome,
) -> VerificationRecord {
    let start = Instant::now();
    let outcome = f();
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let mut rec = match outcome {
        Outcome::Holds => VerificationRecord::new(theorem, params, Status::Holds),
        Outcome::Skipped => VerificationRecord::new(theorem, params, Status::Skipped),
        Outcome::Residue(r) => {
            let mut rec =
                VerificationRecord::new(theorem, params, Status::Fails).with_digest(digest(&r));
            rec.remainder = Some(r.to_string());
            rec
        }
        Outcome::Failed(why) => {
            VerificationRecord::new(theorem, params, Status::Fails).with_digest(why)
        }
    };
    rec.elapsed_ms = elapsed_ms;
    rec
}

/// Short fingerprint of a nonzero remainder: length, end coefficients and a
/// truncated SHA-256 of the full coefficient sequence.
pub fn digest(p: &IntPoly) -> String {
    let mut hasher = Sha256::new();
    for c in p.coeffs() {
        let bytes = c.to_signed_bytes_le();
        hasher.update((bytes.len() as u64).to_le_bytes());
        hasher.update(&bytes);
    }
    let hash: String = hasher
        .finalize()
        .iter()
        .take(8)
        .map(|b| format!("{b:02x}"))
        .collect();
    let first = p
        .coeffs()
        .first()
        .map(abbreviate)
        .unwrap_or_else(|| "0".into());
    let last = p
        .coeffs()
        .last()
        .map(abbreviate)
        .unwrap_or_else(|| "0".into());
    format!(
        "len={};first={first};last={last};sha256={hash}",
        p.coeffs().len()
    )
}

fn abbreviate(c: &num_bigint::BigInt) -> String {
    let s = c.to_string();
    if s.len() <= 24 {
        s
    } else {
        format!("{}..{}({} chars)", &s[..10], &s[s.len() - 6..], s.len())
    }
}
