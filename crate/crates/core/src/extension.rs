//! Rank-two bundles `E` on `F_e` given as extensions `0 → A → E → B → 0`
//! with `c₁(E) = 3C + bf` and `c₂(E) = k`.
//!
//! The piecewise closed forms (`dim Ext¹(B, A)`, `h¹(A)`, `h⁰(E ⊗ E^∨)`) are
//! kept separate from the direct divisor-cohomology routes so the two can be
//! compared in tests rather than silently merged.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::divisor::{cohomology, intersect, DivisorClass};
use crate::error::{Error, Result};

/// Bound on `e` for a [`ScrollConfig`].
pub const INDEX_LIMIT: i64 = 10_000;
/// Bound on `|b|` and `|k|` for a [`ScrollConfig`].
pub const CHERN_LIMIT: i64 = 100_000;

/// The triple `(e, b, k)`: base `F_e`, `c₁ = 3C + bf`, `c₂ = k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawConfig")]
pub struct ScrollConfig {
    e: i64,
    b: i64,
    k: i64,
}

#[derive(Deserialize)]
struct RawConfig {
    e: i64,
    b: i64,
    k: i64,
}

impl TryFrom<RawConfig> for ScrollConfig {
    type Error = Error;

    fn try_from(r: RawConfig) -> Result<Self> {
        ScrollConfig::new(r.e, r.b, r.k)
    }
}

impl ScrollConfig {
    pub fn new(e: i64, b: i64, k: i64) -> Result<Self> {
        if e < 2 {
            return Err(Error::IndexTooSmall { min: 2, got: e });
        }
        if e > INDEX_LIMIT {
            return Err(Error::OutOfRange {
                what: "e",
                value: e,
                limit: INDEX_LIMIT,
            });
        }
        for (what, value) in [("b", b), ("k", k)] {
            if value.abs() > CHERN_LIMIT {
                return Err(Error::OutOfRange {
                    what,
                    value,
                    limit: CHERN_LIMIT,
                });
            }
        }
        Ok(Self { e, b, k })
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn k(&self) -> i64 {
        self.k
    }
}

impl fmt::Display for ScrollConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(e={}, b={}, k={})", self.e, self.b, self.k)
    }
}

/// Numerical conditions on `(e, b, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Condition {
    /// `h⁰(E) >= 7`
    H0AtLeastSeven,
    /// `b >= 3e + 1`
    BLowerBound,
    /// `k + e > b`
    KAboveBMinusE,
    /// `k < 2b - 4e`
    KBelowStrictUpper,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::H0AtLeastSeven => "h0≥7",
            Condition::BLowerBound => "b≥3e+1",
            Condition::KAboveBMinusE => "k+e>b",
            Condition::KBelowStrictUpper => "k<2b−4e",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakAdmissibility {
    pub holds: bool,
    pub violated: Vec<Condition>,
    /// Conditions that cannot be decided without knowing `h¹(E)`.
    pub undetermined: Vec<Condition>,
}

impl WeakAdmissibility {
    pub fn violated_labels(&self) -> Vec<&'static str> {
        self.violated.iter().map(|c| c.label()).collect()
    }
}

/// The weak gate `h⁰(E) >= 7`, `b >= 3e+1`, `k+e > b`.
///
/// `h⁰(E) = 4b - k - 6e + 5 + h¹(E)` with `0 <= h¹(E) <= h¹(A)`, and
/// `h¹(E) = 0` whenever `k < 2b + 2 - 4e`. Outside that range the `h⁰`
/// condition is reported as undetermined unless even `h¹(E) = h¹(A)`
/// cannot rescue it.
pub fn admissible_weak(cfg: &ScrollConfig) -> WeakAdmissibility {
    let (e, b, k) = (cfg.e, cfg.b, cfg.k);
    let mut violated = Vec::new();
    let mut undetermined = Vec::new();

    let chi_e = 4 * b - k - 6 * e + 5;
    if chi_e < 7 {
        if k < 2 * b + 2 - 4 * e {
            violated.push(Condition::H0AtLeastSeven);
        } else {
            let h1a = h1a_direct(cfg).expect("cohomology of A");
            if chi_e + h1a < 7 {
                violated.push(Condition::H0AtLeastSeven);
            } else {
                undetermined.push(Condition::H0AtLeastSeven);
            }
        }
    }
    if b < 3 * e + 1 {
        violated.push(Condition::BLowerBound);
    }
    if k + e <= b {
        violated.push(Condition::KAboveBMinusE);
    }
    WeakAdmissibility {
        holds: violated.is_empty() && undetermined.is_empty(),
        violated,
        undetermined,
    }
}

/// Conditions of the strict regime `b >= 3e+1`, `b - e < k < 2b - 4e` that fail.
pub fn strict_violations(cfg: &ScrollConfig) -> Vec<Condition> {
    let (e, b, k) = (cfg.e, cfg.b, cfg.k);
    let mut out = Vec::new();
    if b < 3 * e + 1 {
        out.push(Condition::BLowerBound);
    }
    if k + e <= b {
        out.push(Condition::KAboveBMinusE);
    }
    if k >= 2 * b - 4 * e {
        out.push(Condition::KBelowStrictUpper);
    }
    out
}

pub fn admissible_strict(cfg: &ScrollConfig) -> bool {
    strict_violations(cfg).is_empty()
}

pub(crate) fn require_strict(cfg: &ScrollConfig) -> Result<()> {
    let v = strict_violations(cfg);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Inadmissible(v.iter().map(|c| c.label()).collect()))
    }
}

/// The piecewise formulas need `b >= 3e+1` and `k + e > b`. An undetermined
/// `h⁰` condition is accepted since the formulas hold for every `k > b - e`.
pub(crate) fn require_weak(cfg: &ScrollConfig) -> Result<()> {
    let w = admissible_weak(cfg);
    if w.violated.is_empty() {
        Ok(())
    } else {
        Err(Error::Inadmissible(w.violated_labels()))
    }
}

/// `A`, `B` and the Chern data of `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BundlePair {
    pub a: DivisorClass,
    pub b: DivisorClass,
    pub c1: DivisorClass,
    pub c2: i64,
}

impl BundlePair {
    /// `A - B ≡ C + (3b - 2k - 4e) f`; `Ext¹(B, A) ≅ H¹(A - B)`.
    pub fn a_minus_b(&self) -> DivisorClass {
        self.a - self.b
    }
}

/// `A ≡ 2C + (2b - k - 2e) f`, `B ≡ C + (k - b + 2e) f` on `F_e`, any `e >= 0`.
pub fn bundle_classes(e: i64, b: i64, k: i64) -> Result<BundlePair> {
    let a_cls = DivisorClass::new(e, 2, 2 * b - k - 2 * e)?;
    let b_cls = DivisorClass::new(e, 1, k - b + 2 * e)?;
    let c1 = a_cls + b_cls;
    if c1 != DivisorClass::new(e, 3, b)? {
        return Err(Error::Internal(format!("c1 = {c1} is not 3C+{b}f")));
    }
    let c2 = intersect(&a_cls, &b_cls)?;
    if c2 != k {
        return Err(Error::Internal(format!("A·B = {c2} differs from k = {k}")));
    }
    Ok(BundlePair {
        a: a_cls,
        b: b_cls,
        c1,
        c2,
    })
}

pub fn bundle_pair(cfg: &ScrollConfig) -> BundlePair {
    bundle_classes(cfg.e, cfg.b, cfg.k).expect("config limits keep classes in range")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ECohomology {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

/// `h^i(E)` in the strict regime, where `E` is non-special.
pub fn cohomology_e(cfg: &ScrollConfig) -> Result<ECohomology> {
    if !admissible_strict(cfg) {
        return Err(Error::OutsideNonSpecialRegime);
    }
    Ok(ECohomology {
        h0: 4 * cfg.b - cfg.k - 6 * cfg.e + 5,
        h1: 0,
        h2: 0,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SubQuotientCohomology {
    pub h0_a: i64,
    pub h1_a: i64,
    pub h0_b: i64,
}

/// `h⁰(A)`, `h¹(A)`, `h⁰(B)` from the closed forms, checked against the
/// divisor cohomology of the classes themselves.
pub fn cohomology_a_b(cfg: &ScrollConfig) -> Result<SubQuotientCohomology> {
    require_weak(cfg)?;
    let (e, b, k) = (cfg.e, cfg.b, cfg.k);
    let h1_a = h1a_direct(cfg)?;
    let out = SubQuotientCohomology {
        h0_a: 6 * b - 3 * k - 9 * e + 3 + h1_a,
        h1_a,
        h0_b: 2 * k - 2 * b + 3 * e + 2,
    };
    let pair = bundle_pair(cfg);
    let ca = cohomology(&pair.a)?;
    let cb = cohomology(&pair.b)?;
    if ca.h0 != out.h0_a || ca.h2 != 0 || cb.h0 != out.h0_b || cb.h1 != 0 || cb.h2 != 0 {
        return Err(Error::Internal(format!(
            "closed forms {out:?} disagree with h(A) = {ca:?}, h(B) = {cb:?} for {cfg}"
        )));
    }
    Ok(out)
}

/// `2k` compared against the half-integer thresholds `(num)/2`.
fn twice_k(cfg: &ScrollConfig) -> i64 {
    2 * cfg.k
}

pub fn dim_ext1_piecewise(cfg: &ScrollConfig) -> Result<i64> {
    require_weak(cfg)?;
    let (e, b, k) = (cfg.e, cfg.b, cfg.k);
    let tk = twice_k(cfg);
    Ok(if tk < 3 * b + 2 - 5 * e {
        0
    } else if tk < 3 * b + 2 - 4 * e {
        5 * e + 2 * k - 3 * b - 1
    } else {
        9 * e + 4 * k - 6 * b - 2
    })
}

/// `h¹(A - B)`.
pub fn dim_ext1_direct(cfg: &ScrollConfig) -> Result<i64> {
    Ok(cohomology(&bundle_pair(cfg).a_minus_b())?.h1)
}

pub fn h1a_piecewise(cfg: &ScrollConfig) -> Result<i64> {
    require_weak(cfg)?;
    let (e, b, k) = (cfg.e, cfg.b, cfg.k);
    Ok(if k < 2 * b + 2 - 4 * e {
        0
    } else if k < 2 * b + 2 - 3 * e {
        4 * e + k - 2 * b - 1
    } else if k < 2 * b + 2 - 2 * e {
        7 * e + 2 * k - 4 * b - 2
    } else {
        9 * e + 3 * k - 6 * b - 3
    })
}

/// `h¹(A)` from the cohomology table of `A`.
pub fn h1a_direct(cfg: &ScrollConfig) -> Result<i64> {
    Ok(cohomology(&bundle_pair(cfg).a)?.h1)
}

/// `h⁰(E ⊗ E^∨)`. In the split range the value is checked against
/// `h⁰(O²) + h⁰(A - B) + h⁰(B - A)`. The other two branches are only known
/// for a general extension; `generic = false` there is refused.
pub fn h0_end_e(cfg: &ScrollConfig, generic: bool) -> Result<i64> {
    require_weak(cfg)?;
    let (e, b, k) = (cfg.e, cfg.b, cfg.k);
    let tk = twice_k(cfg);
    if tk < 3 * b + 2 - 5 * e {
        let value = 6 * b - 4 * k - 9 * e + 4;
        let pair = bundle_pair(cfg);
        let split = 2 + cohomology(&(pair.a - pair.b))?.h0 + cohomology(&(pair.b - pair.a))?.h0;
        if split != value {
            return Err(Error::Internal(format!(
                "h0(End E) = {value} but the split bundle gives {split} for {cfg}"
            )));
        }
        return Ok(value);
    }
    if !generic {
        return Err(Error::NonGenericUndefined);
    }
    Ok(if tk <= 3 * b - 4 * e {
        3 * b - 2 * k - 4 * e + 2
    } else {
        1
    })
}
