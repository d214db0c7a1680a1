//! Line bundles and split bundles on the projective line.
//!
//! A [`SplittingType`] is the multiset of degrees of `⊕ O(a_i)`, kept sorted
//! in descending order. Specialization between two types of equal rank and
//! degree is decided by majorization of the descending partial sums; the
//! equivalent twist-by-twist comparison of `h⁰` is available through
//! [`specialization_check`], which reports the first twist that fails.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible absolute value of a single part or twist.
pub const PART_LIMIT: i64 = 1 << 40;
/// Largest admissible rank.
pub const RANK_LIMIT: usize = 1 << 20;

/// `h⁰(P¹, O(d))`.
pub fn h0_p1(d: i64) -> i64 {
    if d < 0 {
        0
    } else {
        d.checked_add(1).expect("h0_p1: degree overflow")
    }
}

/// `h¹(P¹, O(d))`, by Serre duality `h¹(O(d)) = h⁰(O(-d-2))`.
pub fn h1_p1(d: i64) -> i64 {
    if d >= -1 {
        0
    } else {
        -1 - d
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SplittingType {
    parts: Vec<i64>,
}

impl SplittingType {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptySplittingType);
        }
        if parts.len() > RANK_LIMIT {
            return Err(Error::OutOfRange {
                what: "rank",
                value: parts.len() as i64,
                limit: RANK_LIMIT as i64,
            });
        }
        if let Some(&bad) = parts.iter().find(|a| a.abs() > PART_LIMIT) {
            return Err(Error::OutOfRange {
                what: "splitting part",
                value: bad,
                limit: PART_LIMIT,
            });
        }
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    /// Total degree. Cannot overflow thanks to the construction limits.
    pub fn degree(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn max_part(&self) -> i64 {
        self.parts[0]
    }

    pub fn min_part(&self) -> i64 {
        self.parts[self.parts.len() - 1]
    }

    /// Twists outside this window give `h⁰ = 0` or `h¹ = 0` on every part.
    pub fn twist_window(&self) -> RangeInclusive<i64> {
        -self.max_part() - 1..=-self.min_part() + 1
    }

    /// Direct sum of two split bundles.
    pub fn direct_sum(&self, other: &SplittingType) -> Result<SplittingType> {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        SplittingType::new(parts)
    }
}

impl TryFrom<Vec<i64>> for SplittingType {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        SplittingType::new(parts)
    }
}

impl From<SplittingType> for Vec<i64> {
    fn from(t: SplittingType) -> Self {
        t.parts
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for SplittingType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::ParseSplittingType {
            input: s.to_string(),
            reason,
        };
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>()
                    .map_err(|e| parse_err(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SplittingType::new(parts)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCohomology {
    pub h0: i64,
    pub h1: i64,
}

/// Cohomology of `⊕ O(a_i + twist)`.
pub fn splitting_cohomology(t: &SplittingType, twist: i64) -> Result<SplitCohomology> {
    if twist.abs() > PART_LIMIT {
        return Err(Error::OutOfRange {
            what: "twist",
            value: twist,
            limit: PART_LIMIT,
        });
    }
    let (h0, h1) = t.parts.iter().fold((0i64, 0i64), |(h0, h1), &a| {
        (h0 + h0_p1(a + twist), h1 + h1_p1(a + twist))
    });
    Ok(SplitCohomology { h0, h1 })
}

fn h0_at(t: &SplittingType, twist: i64) -> i64 {
    t.parts.iter().map(|&a| h0_p1(a + twist)).sum()
}

/// True iff `special` is a flat specialization of `general`: equal rank and
/// degree, and every descending partial sum of `special` is at least the
/// corresponding partial sum of `general`.
pub fn specializes(general: &SplittingType, special: &SplittingType) -> bool {
    general.rank() == special.rank()
        && general.degree() == special.degree()
        && majorizes(special, general)
}

fn majorizes(upper: &SplittingType, lower: &SplittingType) -> bool {
    let mut su = 0i64;
    let mut sl = 0i64;
    upper.parts.iter().zip(&lower.parts).all(|(&u, &l)| {
        su += u;
        sl += l;
        su >= sl
    })
}

/// Why a specialization fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpecializationFailure {
    RankMismatch {
        general: usize,
        special: usize,
    },
    DegreeMismatch {
        general: i64,
        special: i64,
    },
    Twist {
        twist: i64,
        h0_general: i64,
        h0_special: i64,
    },
}

impl fmt::Display for SpecializationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecializationFailure::RankMismatch { general, special } => {
                write!(f, "rank mismatch {general} ≠ {special}")
            }
            SpecializationFailure::DegreeMismatch { general, special } => {
                write!(f, "degree mismatch {general} ≠ {special}")
            }
            SpecializationFailure::Twist {
                twist,
                h0_general,
                h0_special,
            } => write!(
                f,
                "h0 at twist {twist}: general {h0_general} > special {h0_special}"
            ),
        }
    }
}

/// Like [`specializes`], but explains a negative answer. On failure of the
/// partial-sum test the smallest twist with `h⁰(general(t)) > h⁰(special(t))`
/// is reported.
pub fn specialization_check(
    general: &SplittingType,
    special: &SplittingType,
) -> std::result::Result<(), SpecializationFailure> {
    if general.rank() != special.rank() {
        return Err(SpecializationFailure::RankMismatch {
            general: general.rank(),
            special: special.rank(),
        });
    }
    if general.degree() != special.degree() {
        return Err(SpecializationFailure::DegreeMismatch {
            general: general.degree(),
            special: special.degree(),
        });
    }
    if majorizes(special, general) {
        return Ok(());
    }
    let lo = (-general.max_part()).min(-special.max_part()) - 1;
    let hi = (-general.min_part()).max(-special.min_part()) + 1;
    let failure = (lo..=hi)
        .find_map(|t| {
            let (g, s) = (h0_at(general, t), h0_at(special, t));
            (g > s).then_some(SpecializationFailure::Twist {
                twist: t,
                h0_general: g,
                h0_special: s,
            })
        })
        .expect("majorization failed but every twist satisfies h0 semicontinuity");
    Err(failure)
}
