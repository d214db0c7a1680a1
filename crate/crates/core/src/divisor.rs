//! Numerical divisor classes `aC + bf` on the Hirzebruch surface `F_e`.
//!
//! `Num(F_e) = Z[C] ⊕ Z[f]` with `C² = -e`, `f² = 0`, `C·f = 1` and
//! `K = -2C - (e+2)f`. Cohomology of a class is computed from the pushforward
//! to `P¹`, `π_* O(aC + bf) = ⊕_{i=0}^{a} O(b - ie)`, together with Serre
//! duality and Riemann–Roch; `h¹` is whatever remains of `χ`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::splitting::SplittingType;

/// Bound on `e`, `|a|` and `|b|` for user-constructed classes.
pub const COEFF_LIMIT: i64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawClass")]
pub struct DivisorClass {
    e: i64,
    a: i64,
    b: i64,
}

#[derive(Deserialize)]
struct RawClass {
    e: i64,
    a: i64,
    b: i64,
}

impl TryFrom<RawClass> for DivisorClass {
    type Error = Error;

    fn try_from(r: RawClass) -> Result<Self> {
        DivisorClass::new(r.e, r.a, r.b)
    }
}

impl DivisorClass {
    pub fn new(e: i64, a: i64, b: i64) -> Result<Self> {
        if e < 0 {
            return Err(Error::IndexTooSmall { min: 0, got: e });
        }
        for (what, value) in [("e", e), ("a", a), ("b", b)] {
            if value.abs() > COEFF_LIMIT {
                return Err(Error::OutOfRange {
                    what,
                    value,
                    limit: COEFF_LIMIT,
                });
            }
        }
        Ok(Self { e, a, b })
    }

    /// Skips the range check; used for classes derived from validated ones.
    pub(crate) fn derived(e: i64, a: i64, b: i64) -> Self {
        debug_assert!(e >= 0);
        Self { e, a, b }
    }

    pub fn zero(e: i64) -> Result<Self> {
        Self::new(e, 0, 0)
    }

    /// The negative section `C_e`.
    pub fn section(e: i64) -> Result<Self> {
        Self::new(e, 1, 0)
    }

    /// A fibre `f`.
    pub fn fiber(e: i64) -> Result<Self> {
        Self::new(e, 0, 1)
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    fn same_surface(&self, other: &Self) -> Result<()> {
        if self.e == other.e {
            Ok(())
        } else {
            Err(Error::SurfaceMismatch(self.e, other.e))
        }
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        self.same_surface(&other)?;
        Ok(Self::derived(self.e, self.a + other.a, self.b + other.b))
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        self.same_surface(&other)?;
        Ok(Self::derived(self.e, self.a - other.a, self.b - other.b))
    }
}

/// Panics on a surface mismatch; use [`DivisorClass::checked_add`] otherwise.
impl Add for DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("surface mismatch")
    }
}

/// Panics on a surface mismatch; use [`DivisorClass::checked_sub`] otherwise.
impl Sub for DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("surface mismatch")
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> Self {
        Self::derived(self.e, -self.a, -self.b)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b < 0 { '-' } else { '+' };
        write!(f, "{}C{}{}f@F{}", self.a, sign, self.b.abs(), self.e)
    }
}

fn narrow(v: i128, what: &str) -> i64 {
    i64::try_from(v).unwrap_or_else(|_| panic!("{what} overflows i64: {v}"))
}

/// Intersection pairing `-e·a1·a2 + a1·b2 + a2·b1`.
pub fn intersect(d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
    d1.same_surface(d2)?;
    let (e, a1, b1, a2, b2) = (
        d1.e as i128,
        d1.a as i128,
        d1.b as i128,
        d2.a as i128,
        d2.b as i128,
    );
    Ok(narrow(
        -e * a1 * a2 + a1 * b2 + a2 * b1,
        "intersection number",
    ))
}

pub fn canonical_class(e: i64) -> DivisorClass {
    assert!(e >= 0, "Hirzebruch index must be non-negative");
    DivisorClass::derived(e, -2, -e - 2)
}

/// The effective cone of `F_e` is spanned by `C` and `f`.
pub fn is_effective(d: &DivisorClass) -> bool {
    d.a >= 0 && d.b >= 0
}

/// On `F_e` ample and very ample coincide: `a > 0` and `b > a·e`.
pub fn is_very_ample(d: &DivisorClass) -> bool {
    d.a > 0 && d.b > d.a * d.e
}

/// Riemann–Roch: `χ(D) = D·(D - K)/2 + 1`.
pub fn chi_rr(d: &DivisorClass) -> i64 {
    let k = canonical_class(d.e);
    let twice = intersect(d, &(*d - k)).expect("same surface");
    assert!(twice % 2 == 0, "D·(D-K) = {twice} is odd for {d}");
    twice / 2 + 1
}

/// `π_*(O(D)) = ⊕_{i=0}^{a} O(b - ie)`, or `None` when `a < 0` (the
/// pushforward vanishes).
pub fn pushforward(d: &DivisorClass) -> Result<Option<SplittingType>> {
    if d.a < 0 {
        return Ok(None);
    }
    let parts = (0..=d.a).map(|i| d.b - i * d.e).collect();
    SplittingType::new(parts).map(Some)
}

/// `h⁰(D)` as the closed-form sum `Σ_{i=0}^{a} h⁰(P¹, O(b - ie))`.
fn h0_leray(d: &DivisorClass) -> i64 {
    if d.a < 0 || d.b < 0 {
        return 0;
    }
    let (e, a, b) = (d.e as i128, d.a as i128, d.b as i128);
    // summands b - ie + 1 are positive exactly for i <= b/e
    let m = if e == 0 { a } else { a.min(b / e) };
    narrow((m + 1) * (b + 1) - e * m * (m + 1) / 2, "h0")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
    pub chi: i64,
}

pub fn cohomology(d: &DivisorClass) -> Result<CohomologyTable> {
    let h0 = h0_leray(d);
    let dual = canonical_class(d.e) - *d;
    let h2 = h0_leray(&dual);
    let chi = chi_rr(d);
    let h1 = h0 + h2 - chi;
    if h1 < 0 {
        return Err(Error::Internal(format!(
            "negative h1 = {h1} for {d} (h0 = {h0}, h2 = {h2}, chi = {chi})"
        )));
    }
    Ok(CohomologyTable { h0, h1, h2, chi })
}

/// Independent `h⁰` oracle: counts lattice points `(u, v)` with
/// `0 <= v <= a` and `0 <= u <= b - e·v` one by one.
pub fn lattice_point_h0_oracle(d: &DivisorClass) -> i64 {
    let mut count = 0;
    for v in 0..=d.a {
        let mut u = 0;
        while u <= d.b - d.e * v {
            count += 1;
            u += 1;
        }
    }
    count
}
