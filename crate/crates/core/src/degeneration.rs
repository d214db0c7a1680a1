//! Moving a scroll over `F_e` to the scroll over `F_ε`, `ε = e mod 2`, with
//! the same Hilbert polynomial, and comparing the two bundles pushed down to
//! the line.

use serde::Serialize;

use crate::divisor::{cohomology, intersect, is_very_ample, pushforward, DivisorClass};
use crate::error::{Error, Result};
use crate::extension::{bundle_classes, bundle_pair, require_strict, BundlePair, ScrollConfig};
use crate::scroll::{dim_component_closed, invariants};
use crate::splitting::{specializes, splitting_cohomology, SplittingType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EpsilonConfig {
    pub eps: i64,
    pub b_eps: i64,
    pub k_eps: i64,
    pub parent: ScrollConfig,
}

/// `(ε, b_ε)` for base index `e` and fiber coefficient `b`, with no
/// admissibility requirement. For `e ∈ {0, 1}` this is the identity.
pub fn epsilon_shift(e: i64, b: i64) -> (i64, i64) {
    let eps = e.rem_euclid(2);
    (eps, b - 3 * (e - eps) / 2)
}

/// Bounds on `(ε, b_ε, k_ε)` that mirror the strict regime of the parent.
pub fn translated_bounds_hold(ec: &EpsilonConfig) -> bool {
    let (e, eps, b, k) = (ec.parent.e(), ec.eps, ec.b_eps, ec.k_eps);
    2 * b >= 3 * (e + eps) + 2 && 2 * b + e - 3 * eps < 2 * k && k < 2 * b - 3 * eps - e
}

pub fn epsilon_config(cfg: &ScrollConfig) -> Result<EpsilonConfig> {
    require_strict(cfg)?;
    let (eps, b_eps) = epsilon_shift(cfg.e(), cfg.b());
    if 2 * b_eps != 2 * cfg.b() - 3 * (cfg.e() - eps) {
        return Err(Error::Internal(format!("inexact shift of b for {cfg}")));
    }
    let ec = EpsilonConfig {
        eps,
        b_eps,
        k_eps: cfg.k(),
        parent: *cfg,
    };
    if !translated_bounds_hold(&ec) {
        return Err(Error::Internal(format!("shifted bounds fail for {cfg}")));
    }
    Ok(ec)
}

/// `A_ε`, `B_ε` on `F_ε`; both must be very ample.
pub fn epsilon_classes(ec: &EpsilonConfig) -> Result<BundlePair> {
    let pair = bundle_classes(ec.eps, ec.b_eps, ec.k_eps)?;
    for cls in [pair.a, pair.b] {
        if !is_very_ample(&cls) {
            return Err(Error::Internal(format!("{cls} is not very ample")));
        }
    }
    Ok(pair)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EpsilonInvariance {
    pub deg_match: bool,
    pub h0_match: bool,
    pub dim_match: bool,
    pub d_eps: i64,
    pub h0_eps: i64,
    pub dim_eps: i64,
}

impl EpsilonInvariance {
    pub fn all(&self) -> bool {
        self.deg_match && self.h0_match && self.dim_match
    }
}

/// Compares degree, `h⁰` and component dimension on both sides. The `ε` side
/// is computed from the classes on `F_ε` alone.
pub fn epsilon_invariance(cfg: &ScrollConfig) -> Result<EpsilonInvariance> {
    let ec = epsilon_config(cfg)?;
    let pair = epsilon_classes(&ec)?;
    let inv = invariants(cfg)?;

    let d_eps = intersect(&pair.c1, &pair.c1)? - pair.c2;
    let ca = cohomology(&pair.a)?;
    let cb = cohomology(&pair.b)?;
    if ca.h1 != 0 || ca.h2 != 0 || cb.h1 != 0 || cb.h2 != 0 {
        return Err(Error::Internal(format!(
            "A_ε or B_ε is special for {cfg}: {ca:?}, {cb:?}"
        )));
    }
    let h0_eps = ca.h0 + cb.h0;
    let n_eps = h0_eps - 1;
    let dim_eps = n_eps * (n_eps + 1) + 3 * ec.k_eps - 2 * ec.b_eps + 3 * ec.eps - 5;

    Ok(EpsilonInvariance {
        deg_match: d_eps == inv.d,
        h0_match: h0_eps == inv.n + 1,
        dim_match: dim_eps == dim_component_closed(cfg)?,
        d_eps,
        h0_eps,
        dim_eps,
    })
}

pub fn dim_ext1_eps_piecewise(ec: &EpsilonConfig) -> i64 {
    let (eps, b, k) = (ec.eps, ec.b_eps, ec.k_eps);
    if 2 * k < 3 * b + 2 - 5 * eps {
        0
    } else {
        4 * k - 6 * b - 2 + 9 * eps
    }
}

pub fn dim_ext1_eps_direct(ec: &EpsilonConfig) -> Result<i64> {
    let pair = epsilon_classes(ec)?;
    Ok(cohomology(&pair.a_minus_b())?.h1)
}

/// `h⁰(E_ε ⊗ E_ε^∨)` for a general extension on `F_ε`.
pub fn aut_eps(ec: &EpsilonConfig) -> Result<i64> {
    let (eps, b, k) = (ec.eps, ec.b_eps, ec.k_eps);
    if 2 * k >= 3 * b + 2 - 5 * eps {
        return Ok(1);
    }
    let value = 6 * b - 4 * k - 9 * eps + 4;
    let pair = epsilon_classes(ec)?;
    let split = 2 + cohomology(&pair.a_minus_b())?.h0 + cohomology(&(pair.b - pair.a))?.h0;
    if split != value {
        return Err(Error::Internal(format!(
            "h0(End E_ε) = {value} but the split bundle gives {split}"
        )));
    }
    Ok(value)
}

fn push_pair(pair: &BundlePair) -> Result<SplittingType> {
    let pa = pushforward(&pair.a)?.ok_or_else(|| Error::Internal("A has a < 0".into()))?;
    let pb = pushforward(&pair.b)?.ok_or_else(|| Error::Internal("B has a < 0".into()))?;
    pa.direct_sum(&pb)
}

/// `π_*(A) ⊕ π_*(B)` on the line; its degree is `4b - k - 6e`.
pub fn pushforward_type(cfg: &ScrollConfig) -> Result<SplittingType> {
    require_strict(cfg)?;
    let t = push_pair(&bundle_pair(cfg))?;
    let want = 4 * cfg.b() - cfg.k() - 6 * cfg.e();
    if t.degree() != want {
        return Err(Error::Internal(format!(
            "pushforward degree {} differs from {want}",
            t.degree()
        )));
    }
    Ok(t)
}

pub fn pushforward_type_eps(cfg: &ScrollConfig) -> Result<SplittingType> {
    let ec = epsilon_config(cfg)?;
    let t = push_pair(&epsilon_classes(&ec)?)?;
    let te = pushforward_type(cfg)?;
    if t.degree() != te.degree() {
        return Err(Error::Internal(format!(
            "pushforward degrees {} and {} differ for {cfg}",
            t.degree(),
            te.degree()
        )));
    }
    Ok(t)
}

/// Parts of the `ε`-side pushforward written in terms of the parent data:
/// `ξ = 2b - k - 3e + (ε, 0, -ε)` and `η = k - b + (3e ± ε)/2`.
pub fn xi_eta(cfg: &ScrollConfig) -> ([i64; 3], [i64; 2]) {
    let (e, b, k) = (cfg.e(), cfg.b(), cfg.k());
    let eps = e.rem_euclid(2);
    let x = 2 * b - k - 3 * e;
    (
        [x + eps, x, x - eps],
        [k - b + (3 * e + eps) / 2, k - b + (3 * e - eps) / 2],
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GapEntry {
    pub twist: i64,
    pub h0_eps: i64,
    pub h0_e: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecializationCertificate {
    pub cfg: ScrollConfig,
    pub eps_cfg: EpsilonConfig,
    pub type_e: SplittingType,
    pub type_eps: SplittingType,
    pub dominates: bool,
    pub gap_profile: Vec<GapEntry>,
}

pub fn specialization_certificate(cfg: &ScrollConfig) -> Result<SpecializationCertificate> {
    let eps_cfg = epsilon_config(cfg)?;
    let type_e = pushforward_type(cfg)?;
    let type_eps = pushforward_type_eps(cfg)?;
    let dominates = specializes(&type_eps, &type_e);

    let lo = (-type_e.max_part()).min(-type_eps.max_part()) - 1;
    let hi = (-type_e.min_part()).max(-type_eps.min_part()) + 1;
    let gap_profile = (lo..=hi)
        .map(|t| {
            Ok(GapEntry {
                twist: t,
                h0_eps: splitting_cohomology(&type_eps, t)?.h0,
                h0_e: splitting_cohomology(&type_e, t)?.h0,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SpecializationCertificate {
        cfg: *cfg,
        eps_cfg,
        type_e,
        type_eps,
        dominates,
        gap_profile,
    })
}

/// Projective dimensions of the spans of the surfaces embedded by `|A|`
/// and `|B|`.
pub fn join_spans(cfg: &ScrollConfig) -> Result<(i64, i64)> {
    let pair = bundle_pair(cfg);
    Ok((cohomology(&pair.a)?.h0 - 1, cohomology(&pair.b)?.h0 - 1))
}

/// Convenience for reports: the class pair on `F_ε` as a tuple.
pub fn epsilon_class_pair(cfg: &ScrollConfig) -> Result<(DivisorClass, DivisorClass)> {
    let pair = epsilon_classes(&epsilon_config(cfg)?)?;
    Ok((pair.a, pair.b))
}
