//! Invariants of the scroll `X = P(E) ⊂ P^n` embedded by `O(1)`, and the
//! dimension counts for its Hilbert scheme component.

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::divisor::intersect;
use crate::error::{Error, Result};
use crate::extension::{bundle_pair, dim_ext1_direct, h0_end_e, require_strict, ScrollConfig};
use crate::hrr::{chi_normal_bundle, TopNumbers, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScrollInvariants {
    pub n: i64,
    pub d: i64,
    pub g: i64,
}

pub fn invariants(cfg: &ScrollConfig) -> Result<ScrollInvariants> {
    require_strict(cfg)?;
    let (e, b, k) = (cfg.e(), cfg.b(), cfg.k());
    let n = 4 * b - k - 6 * e + 4;
    let d = 6 * b - 9 * e - k;
    let g = 2 * b - 3 * e - 2;
    let c1 = bundle_pair(cfg).c1;
    let c1_sq = intersect(&c1, &c1)?;
    if c1_sq - k != d {
        return Err(Error::Internal(format!(
            "c1² - c2 = {} but d = {d} for {cfg}",
            c1_sq - k
        )));
    }
    Ok(ScrollInvariants { n, d, g })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct IntersectionTable {
    pub K3: i64,
    pub K2L: i64,
    pub KL2: i64,
    pub L3: i64,
    pub c2L: i64,
    pub c2K: i64,
    pub c3: i64,
}

impl IntersectionTable {
    pub fn top_numbers(&self) -> TopNumbers {
        TopNumbers {
            k3: self.K3,
            k2l: self.K2L,
            kl2: self.KL2,
            l3: self.L3,
            c2k: self.c2K,
            c2l: self.c2L,
            c3: self.c3,
        }
    }
}

pub fn intersection_table(cfg: &ScrollConfig) -> Result<IntersectionTable> {
    let inv = invariants(cfg)?;
    let (e, b, d) = (cfg.e(), cfg.b(), inv.d);
    let table = IntersectionTable {
        K3: -8 * d + 36 * b - 54 * e - 48,
        K2L: 4 * d - 14 * b + 21 * e + 20,
        KL2: -2 * d + 4 * b - 6 * e - 6,
        L3: d,
        c2L: 2 * b - 3 * e + 10,
        c2K: -24,
        c3: 8,
    };
    // adjunction on a hyperplane section: 2g - 2 = (K + 2L)L²
    if table.KL2 + 2 * d != 2 * inv.g - 2 {
        return Err(Error::Internal(format!(
            "genus does not match KL² for {cfg}"
        )));
    }
    Ok(table)
}

/// `P(m) = c3 m³ + c2 m² + c1 m + c0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    pub coeffs: [Q; 4],
}

impl HilbertPolynomial {
    pub fn eval(&self, m: i64) -> Q {
        let m = Q::from(m as i128);
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, &c| acc * m + c)
    }

    /// Integer value at `m`; panics if the polynomial is not integer-valued there.
    pub fn eval_int(&self, m: i64) -> i64 {
        let v = self.eval(m);
        assert!(v.is_integer(), "P({m}) = {v} is not an integer");
        v.to_integer().to_i64().expect("P(m) fits in i64")
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if *c < Q::zero() { ("-", -c) } else { ("+", *c) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{abs}")?,
                1 => write!(f, "{abs}*m")?,
                _ => write!(f, "{abs}*m^{deg}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for HilbertPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

pub fn hilbert_polynomial(cfg: &ScrollConfig) -> Result<HilbertPolynomial> {
    let t = intersection_table(cfg)?;
    let r = |n: i64, d: i64| Q::new(n as i128, d as i128);
    Ok(HilbertPolynomial {
        coeffs: [Q::from(1), r(t.K2L + t.c2L, 12), r(-t.KL2, 4), r(t.L3, 6)],
    })
}

pub fn dim_component_closed(cfg: &ScrollConfig) -> Result<i64> {
    let n = invariants(cfg)?.n;
    let (e, b, k) = (cfg.e(), cfg.b(), cfg.k());
    Ok(n * (n + 1) + 3 * k - 2 * b + 3 * e - 5)
}

/// `h⁰(N) = χ(N)` evaluated through Hirzebruch–Riemann–Roch.
pub fn dim_component_hrr(cfg: &ScrollConfig) -> Result<i64> {
    let n = invariants(cfg)?.n;
    let table = intersection_table(cfg)?;
    chi_normal_bundle(n, &table.top_numbers())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TangentCohomology {
    #[serde(rename = "chi_T")]
    pub chi: i64,
    #[serde(rename = "h0_T")]
    pub h0: Option<i64>,
    #[serde(rename = "h1_T")]
    pub h1: Option<i64>,
}

/// `χ(T_X)` always; `h⁰` and `h¹` only when the extension splits.
pub fn tangent_cohomology(cfg: &ScrollConfig) -> Result<TangentCohomology> {
    let inv = invariants(cfg)?;
    let (e, b, k) = (cfg.e(), cfg.b(), cfg.k());
    let chi = 6 * b - 4 * k + 9 - 9 * e;
    let euler = (inv.n + 1) * (inv.n + 1) - 1 - dim_component_closed(cfg)?;
    if chi != euler {
        return Err(Error::Internal(format!(
            "χ(T_X) = {chi} but (n+1)² - 1 - dim = {euler} for {cfg}"
        )));
    }
    if dim_ext1_direct(cfg)? != 0 {
        return Ok(TangentCohomology {
            chi,
            h0: None,
            h1: None,
        });
    }
    let h0 = 6 * b - 4 * k - 8 * e + 8;
    let h1 = e - 1;
    if h0 - h1 != chi {
        return Err(Error::Internal(format!(
            "h0_T - h1_T differs from χ_T for {cfg}"
        )));
    }
    Ok(TangentCohomology {
        chi,
        h0: Some(h0),
        h1: Some(h1),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CodimKind {
    Exact,
    UpperBound,
}

impl CodimKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CodimKind::Exact => "exact",
            CodimKind::UpperBound => "upper_bound",
        }
    }
}

/// Codimension of the locus of scrolls over `F_e` inside its component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodimRecord {
    pub kind: CodimKind,
    pub value: i64,
    #[serde(rename = "dimY_lower_bound")]
    pub dim_y_lower_bound: i64,
    /// `-1` when the extension splits.
    pub tau: i64,
    #[serde(rename = "h0End_generic")]
    pub h0_end_generic: i64,
}

pub fn codim_scroll_locus(cfg: &ScrollConfig) -> Result<CodimRecord> {
    let n = invariants(cfg)?.n;
    let e = cfg.e();
    let dim = dim_component_closed(cfg)?;
    let ext = dim_ext1_direct(cfg)?;
    let h0_end = h0_end_e(cfg, true)?;
    let orbit = n * (n + 2);

    let rec = if ext == 0 {
        let h0_t = tangent_cohomology(cfg)?
            .h0
            .expect("h0_T is defined for split extensions");
        let rec = CodimRecord {
            kind: CodimKind::Exact,
            value: e - 1,
            dim_y_lower_bound: orbit - h0_t,
            tau: -1,
            h0_end_generic: h0_end,
        };
        if rec.dim_y_lower_bound + e - 1 != dim {
            return Err(Error::Internal(format!(
                "dim Y = {} does not have codimension e - 1 in {dim} for {cfg}",
                rec.dim_y_lower_bound
            )));
        }
        rec
    } else {
        let tau = ext - 1;
        let rec = CodimRecord {
            kind: CodimKind::UpperBound,
            value: e - 1,
            dim_y_lower_bound: tau + orbit - h0_end - 4 - e,
            tau,
            h0_end_generic: h0_end,
        };
        if dim - rec.dim_y_lower_bound > e - 1 {
            return Err(Error::Internal(format!(
                "codimension bound {} exceeds e - 1 for {cfg}",
                dim - rec.dim_y_lower_bound
            )));
        }
        rec
    };
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(e: i64, b: i64, k: i64) -> ScrollConfig {
        ScrollConfig::new(e, b, k).unwrap()
    }

    #[test]
    fn basic_invariants() {
        let want = [
            (cfg(2, 11, 11), (25, 37, 14)),
            (cfg(4, 18, 18), (34, 54, 22)),
            (cfg(3, 15, 15), (31, 48, 19)),
        ];
        for (c, (n, d, g)) in want {
            assert_eq!(invariants(&c).unwrap(), ScrollInvariants { n, d, g });
        }
        assert!(matches!(
            invariants(&cfg(2, 9, 6)),
            Err(Error::Inadmissible(v)) if v == vec!["k+e>b"]
        ));
    }

    #[test]
    fn table_for_degree_37() {
        let t = intersection_table(&cfg(2, 11, 11)).unwrap();
        assert_eq!(
            t,
            IntersectionTable {
                K3: -56,
                K2L: 56,
                KL2: -48,
                L3: 37,
                c2L: 26,
                c2K: -24,
                c3: 8
            }
        );
    }

    #[test]
    fn hilbert_values() {
        let p = hilbert_polynomial(&cfg(2, 11, 11)).unwrap();
        assert_eq!(p.eval_int(0), 1);
        assert_eq!(p.eval_int(1), 26);
        assert_eq!(p.to_string(), "37/6*m^3 + 12*m^2 + 41/6*m + 1");
        assert_eq!(hilbert_polynomial(&cfg(4, 18, 18)).unwrap().eval_int(1), 35);
        for m in -10..=10 {
            p.eval_int(m);
        }
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"["1","41/6","12","37/6"]"#
        );
    }

    #[test]
    fn component_dimension() {
        for (c, want) in [
            (cfg(2, 11, 11), 662),
            (cfg(3, 15, 15), 1011),
            (cfg(4, 18, 18), 1215),
        ] {
            assert_eq!(dim_component_closed(&c).unwrap(), want);
            assert_eq!(dim_component_hrr(&c).unwrap(), want);
        }
        let inv = invariants(&cfg(2, 11, 11)).unwrap();
        let (e, b, d, n) = (2, 11, inv.d, inv.n);
        assert_eq!(
            (d + 3 * e - 2 * b + 5) * n - 5 - 24 * e + 16 * b - 3 * d,
            662
        );
    }

    #[test]
    fn tangent() {
        let t = tangent_cohomology(&cfg(2, 11, 11)).unwrap();
        assert_eq!((t.chi, t.h0, t.h1), (13, Some(14), Some(1)));
        let t = tangent_cohomology(&cfg(4, 18, 18)).unwrap();
        assert_eq!((t.chi, t.h0, t.h1), (9, None, None));
    }

    #[test]
    fn codimension() {
        let r = codim_scroll_locus(&cfg(2, 11, 11)).unwrap();
        assert_eq!(
            (r.kind, r.value, r.tau, r.dim_y_lower_bound),
            (CodimKind::Exact, 1, -1, 661)
        );
        let r = codim_scroll_locus(&cfg(4, 18, 18)).unwrap();
        assert_eq!(
            (
                r.kind,
                r.value,
                r.tau,
                r.h0_end_generic,
                r.dim_y_lower_bound
            ),
            (CodimKind::UpperBound, 3, 0, 4, 1212)
        );
        assert_eq!(
            dim_component_closed(&cfg(4, 18, 18)).unwrap() - r.dim_y_lower_bound,
            3
        );
    }
}
