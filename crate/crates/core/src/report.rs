//! Per-configuration reports and range scans.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::degeneration::{
    aut_eps, dim_ext1_eps_direct, epsilon_classes, epsilon_config, epsilon_invariance, join_spans,
    specialization_certificate, EpsilonConfig, EpsilonInvariance, SpecializationCertificate,
};
use crate::divisor::DivisorClass;
use crate::error::{Error, Result};
use crate::extension::{
    admissible_strict, bundle_pair, cohomology_e, dim_ext1_direct, h0_end_e, require_strict,
    ScrollConfig,
};
use crate::scroll::{
    codim_scroll_locus, dim_component_closed, dim_component_hrr, hilbert_polynomial,
    intersection_table, invariants, tangent_cohomology, CodimRecord, HilbertPolynomial,
    IntersectionTable,
};

pub const SCHEMA: &str = "scrollcalc/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassPair {
    #[serde(rename = "A")]
    pub a: DivisorClass,
    #[serde(rename = "B")]
    pub b: DivisorClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpsilonReport {
    pub config: EpsilonConfig,
    pub classes: ClassPair,
    pub dim_ext1: i64,
    pub h0_end_generic: i64,
    pub invariance: EpsilonInvariance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct ComponentReport {
    pub schema: &'static str,
    pub cfg: ScrollConfig,
    pub classes: ClassPair,
    pub h0_E: i64,
    pub dim_ext1: i64,
    pub h0_end_generic: i64,
    pub n: i64,
    pub d: i64,
    pub g: i64,
    pub intersection_table: IntersectionTable,
    pub hilbert_polynomial: HilbertPolynomial,
    pub dim_component: i64,
    pub dim_component_hrr: i64,
    pub chi_T: i64,
    pub h0_T: Option<i64>,
    pub h1_T: Option<i64>,
    pub codim: CodimRecord,
    pub span_A: i64,
    pub span_B: i64,
    pub epsilon: EpsilonReport,
    pub certificate: SpecializationCertificate,
    pub consistent: bool,
    pub flags: Vec<String>,
}

impl ComponentReport {
    /// JSON with lexicographically sorted keys.
    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("report serializes")
    }

    pub fn push_flag(&mut self, flag: String) {
        self.flags.push(flag);
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let c = &self.cfg;
        let _ = writeln!(
            s,
            "scroll over F{} with c1 = 3C+{}f, c2 = {}",
            c.e(),
            c.b(),
            c.k()
        );
        let _ = writeln!(s, "  A = {}, B = {}", self.classes.a, self.classes.b);
        let _ = writeln!(
            s,
            "  h0(E) = {}, dim Ext1(B,A) = {}",
            self.h0_E, self.dim_ext1
        );
        let _ = writeln!(s, "  n = {}, d = {}, g = {}", self.n, self.d, self.g);
        let _ = writeln!(s, "  P(m) = {}", self.hilbert_polynomial);
        let _ = writeln!(
            s,
            "  dim component = {} (HRR: {})",
            self.dim_component, self.dim_component_hrr
        );
        let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
        let _ = writeln!(
            s,
            "  chi(T) = {}, h0(T) = {}, h1(T) = {}",
            self.chi_T,
            opt(self.h0_T),
            opt(self.h1_T)
        );
        let _ = writeln!(
            s,
            "  codim of scroll locus: {} {} (dim Y >= {})",
            self.codim.kind.as_str(),
            self.codim.value,
            self.codim.dim_y_lower_bound
        );
        let ec = &self.epsilon.config;
        let _ = writeln!(
            s,
            "  eps = {}, b_eps = {}: A_eps = {}, B_eps = {}",
            ec.eps, ec.b_eps, self.epsilon.classes.a, self.epsilon.classes.b
        );
        let _ = writeln!(
            s,
            "  pushforward {} specializes from {}: {}",
            self.certificate.type_e, self.certificate.type_eps, self.certificate.dominates
        );
        for f in &self.flags {
            let _ = writeln!(s, "  flag: {f}");
        }
        s
    }
}

/// Full report for one configuration. Disagreements between independent
/// routes are recorded as flags and clear `consistent`.
pub fn analyze(cfg: &ScrollConfig) -> Result<ComponentReport> {
    require_strict(cfg)?;
    let pair = bundle_pair(cfg);
    let inv = invariants(cfg)?;
    let tangent = tangent_cohomology(cfg)?;
    let dim_ext1 = dim_ext1_direct(cfg)?;
    let (span_a, span_b) = join_spans(cfg)?;

    let ec = epsilon_config(cfg)?;
    let eps_pair = epsilon_classes(&ec)?;
    let epsilon = EpsilonReport {
        config: ec,
        classes: ClassPair {
            a: eps_pair.a,
            b: eps_pair.b,
        },
        dim_ext1: dim_ext1_eps_direct(&ec)?,
        h0_end_generic: aut_eps(&ec)?,
        invariance: epsilon_invariance(cfg)?,
    };

    let mut report = ComponentReport {
        schema: SCHEMA,
        cfg: *cfg,
        classes: ClassPair {
            a: pair.a,
            b: pair.b,
        },
        h0_E: cohomology_e(cfg)?.h0,
        dim_ext1,
        h0_end_generic: h0_end_e(cfg, true)?,
        n: inv.n,
        d: inv.d,
        g: inv.g,
        intersection_table: intersection_table(cfg)?,
        hilbert_polynomial: hilbert_polynomial(cfg)?,
        dim_component: dim_component_closed(cfg)?,
        dim_component_hrr: dim_component_hrr(cfg)?,
        chi_T: tangent.chi,
        h0_T: tangent.h0,
        h1_T: tangent.h1,
        codim: codim_scroll_locus(cfg)?,
        span_A: span_a,
        span_B: span_b,
        epsilon,
        certificate: specialization_certificate(cfg)?,
        consistent: true,
        flags: Vec::new(),
    };

    let mut problems = Vec::new();
    if report.dim_component != report.dim_component_hrr {
        problems.push(format!(
            "dim_component mismatch: closed {}, HRR {}",
            report.dim_component, report.dim_component_hrr
        ));
    }
    let p = &report.hilbert_polynomial;
    if p.eval(0) != 1.into() || p.eval(1) != (report.n as i128 + 1).into() {
        problems.push("Hilbert polynomial fails P(0) = 1 or P(1) = n + 1".to_string());
    }
    let inv_eps = &report.epsilon.invariance;
    for (ok, what) in [
        (inv_eps.deg_match, "degree"),
        (inv_eps.h0_match, "h0"),
        (inv_eps.dim_match, "component dimension"),
    ] {
        if !ok {
            problems.push(format!("{what} differs on the shifted base"));
        }
    }
    if !report.certificate.dominates {
        problems.push("pushforward type does not specialize from the shifted one".to_string());
    }
    if !problems.is_empty() {
        report.consistent = false;
        report.flags.extend(problems);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub e: i64,
    pub b: i64,
    pub k: i64,
    pub n: i64,
    pub d: i64,
    pub g: i64,
    pub dim_ext1: i64,
    pub h0_end_generic: i64,
    pub dim_component: i64,
    pub codim_kind: &'static str,
    pub codim_value: i64,
    pub dominates: bool,
}

pub const TSV_HEADER: [&str; 12] = [
    "e",
    "b",
    "k",
    "n",
    "d",
    "g",
    "dim_ext1",
    "h0_end_generic",
    "dim_component",
    "codim_kind",
    "codim_value",
    "dominates",
];

impl ScanRow {
    pub fn to_tsv(&self) -> String {
        [
            self.e.to_string(),
            self.b.to_string(),
            self.k.to_string(),
            self.n.to_string(),
            self.d.to_string(),
            self.g.to_string(),
            self.dim_ext1.to_string(),
            self.h0_end_generic.to_string(),
            self.dim_component.to_string(),
            self.codim_kind.to_string(),
            self.codim_value.to_string(),
            self.dominates.to_string(),
        ]
        .join("\t")
    }

    pub fn to_json_line(&self) -> String {
        let v = serde_json::to_value(self).expect("row serializes");
        serde_json::to_string(&v).expect("row serializes")
    }
}

fn scan_row(cfg: &ScrollConfig) -> Result<ScanRow> {
    let inv = invariants(cfg)?;
    let codim = codim_scroll_locus(cfg)?;
    Ok(ScanRow {
        e: cfg.e(),
        b: cfg.b(),
        k: cfg.k(),
        n: inv.n,
        d: inv.d,
        g: inv.g,
        dim_ext1: dim_ext1_direct(cfg)?,
        h0_end_generic: h0_end_e(cfg, true)?,
        dim_component: dim_component_closed(cfg)?,
        codim_kind: codim.kind.as_str(),
        codim_value: codim.value,
        dominates: specialization_certificate(cfg)?.dominates,
    })
}

/// Every strictly admissible `(e, b, k)` with `b_min <= b <= b_max`.
pub fn scan_configs(e: i64, b_min: i64, b_max: i64) -> Result<Vec<ScrollConfig>> {
    if b_min > b_max {
        return Err(Error::OutOfRange {
            what: "b_min - b_max",
            value: b_min - b_max,
            limit: 0,
        });
    }
    let mut out = Vec::new();
    for b in b_min.max(3 * e + 1)..=b_max {
        for k in (b - e + 1)..(2 * b - 4 * e) {
            let cfg = ScrollConfig::new(e, b, k)?;
            debug_assert!(admissible_strict(&cfg));
            out.push(cfg);
        }
    }
    Ok(out)
}

/// Rows sorted by `(b, k)`. `threads = None` uses the global pool.
pub fn scan(e: i64, b_min: i64, b_max: i64, threads: Option<usize>) -> Result<Vec<ScanRow>> {
    ScrollConfig::new(e, 0, 0)?;
    let cfgs = scan_configs(e, b_min, b_max)?;
    let work = || cfgs.par_iter().map(scan_row).collect::<Result<Vec<_>>>();
    let mut rows = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|err| Error::Internal(format!("thread pool: {err}")))?
            .install(work)?,
        None => work()?,
    };
    rows.sort_by_key(|r| (r.b, r.k));
    Ok(rows)
}

pub fn render_tsv(rows: &[ScanRow]) -> String {
    let mut s = TSV_HEADER.join("\t");
    s.push('\n');
    for r in rows {
        s.push_str(&r.to_tsv());
        s.push('\n');
    }
    s
}

pub fn render_json_lines(rows: &[ScanRow]) -> String {
    rows.iter().map(|r| r.to_json_line() + "\n").collect()
}
