use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use super::ranges::{discriminant_ranges, in_ranges};
use crate::covolume::{chi_principal_with, field_lower_bound, minimal_group, ZetaMode};
use crate::error::{Error, Result};
use crate::exact::{decimal_string, ExactRational, RealInterval};
use crate::localdata::LocalPlaceData;
use crate::numberfields::FieldDescriptor;
use crate::zeta::ZetaOptions;

/// Field counts per degree inside the discriminant ranges of the reference
/// field tables.
pub const REFERENCE_STAGE1_COUNTS: [(u32, usize); 5] =
    [(2, 109), (3, 98), (4, 182), (5, 45), (6, 32)];

#[derive(Clone, Debug)]
pub struct SieveConfig {
    pub chi_max: ExactRational,
    /// Always 2: the sieve targets hyperbolic 4-manifolds.
    pub rank: u32,
    pub field_table: Vec<FieldDescriptor>,
    pub numerator_even_max: BigInt,
    pub numerator_odd_max: BigInt,
    /// Worker threads for stage 3; `None` uses the rayon default.
    pub workers: Option<usize>,
    pub zeta: ZetaOptions,
}

impl SieveConfig {
    /// Numerator thresholds follow `chi_max`: an even ν up to `⌊χ_max⌋`, an
    /// odd one up to `⌊χ_max/2⌋`.
    pub fn new(field_table: Vec<FieldDescriptor>, chi_max: ExactRational) -> Result<Self> {
        if !chi_max.is_positive() {
            return Err(Error::InvalidArgument(format!("chi_max = {chi_max} must be positive")));
        }
        Ok(SieveConfig {
            numerator_even_max: chi_max.floor(),
            numerator_odd_max: (&chi_max / &ExactRational::from_integer(2)).floor(),
            chi_max,
            rank: 2,
            field_table,
            workers: None,
            zeta: ZetaOptions::default(),
        })
    }

    fn validate(&self) -> Result<()> {
        if self.field_table.is_empty() {
            return Err(Error::InvalidArgument("empty field table".into()));
        }
        if self.rank != 2 {
            return Err(Error::InvalidArgument(format!(
                "the sieve is for rank 2, got {}",
                self.rank
            )));
        }
        if !self.chi_max.is_positive()
            || self.numerator_even_max.is_negative()
            || self.numerator_odd_max.is_negative()
        {
            return Err(Error::InvalidArgument("thresholds must be non-negative".into()));
        }
        Ok(())
    }

    fn numerator_admissible(&self, nu: &BigInt) -> bool {
        nu <= &self.numerator_even_max && (nu.is_even() || nu <= &self.numerator_odd_max)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Survives,
    DiscardedByBound,
    DiscardedByNumerator,
    NeedsData,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub field: FieldDescriptor,
    /// Lower bound for χ of any maximal group over the field.
    pub lower_bound: RealInterval,
    /// Set for fields that reached stage 3.
    pub chi_principal: Option<ExactRational>,
    #[serde_as(as = "Option<DisplayFromStr>")]
    pub numerator: Option<BigInt>,
    pub bad_places: Vec<LocalPlaceData>,
    pub verdict: Verdict,
    pub trace: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCounts {
    pub stage1_by_degree: BTreeMap<u32, usize>,
    pub stage1_total: usize,
    pub stage2_by_degree: BTreeMap<u32, usize>,
    pub stage2_total: usize,
    pub survivors: usize,
    pub needs_data: usize,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SieveOutcome {
    #[serde_as(as = "Vec<(_, DisplayFromStr)>")]
    pub ranges: Vec<(u32, BigInt)>,
    pub counts: StageCounts,
    /// Reports for every field inside the ranges, by ascending χ then label.
    pub reports: Vec<CandidateReport>,
    pub diagnostics: Vec<String>,
}

impl SieveOutcome {
    pub fn survivors(&self) -> impl Iterator<Item = &CandidateReport> {
        self.reports.iter().filter(|r| r.verdict == Verdict::Survives)
    }

    pub fn complete(&self) -> bool {
        self.counts.needs_data == 0
    }
}

fn stage3(config: &SieveConfig, field: &FieldDescriptor, report: &mut CandidateReport) {
    let result = minimal_group(field, config.rank)
        .and_then(|spec| chi_principal_with(&spec, ZetaMode::Exact, &config.zeta).map(|c| (spec, c)));
    let (spec, chi) = match result {
        Ok(x) => x,
        Err(e) => {
            report.trace.push(format!("stage 3: {e}"));
            report.verdict = Verdict::NeedsData;
            return;
        }
    };
    report.bad_places = spec.bad_places().to_vec();
    report.trace.extend(chi.trace);
    let value = chi
        .chi_principal
        .rational()
        .cloned()
        .expect("exact mode yields a rational");
    let nu = value.numer().clone();
    report.trace.push(format!("χ = {value}, ν = {nu}"));
    report.verdict = if config.numerator_admissible(&nu) {
        Verdict::Survives
    } else {
        Verdict::DiscardedByNumerator
    };
    report.chi_principal = Some(value);
    report.numerator = Some(nu);
}

fn sort_key(r: &CandidateReport) -> (u8, Option<ExactRational>, u32, BigInt, String) {
    (
        u8::from(r.chi_principal.is_none()),
        r.chi_principal.clone(),
        r.field.degree(),
        r.field.discriminant().clone(),
        r.field.label().to_string(),
    )
}

/// Run the three-stage search for fields that can carry a compact
/// arithmetic 4-manifold with `χ ≤ chi_max`.
pub fn run_sieve(config: &SieveConfig) -> Result<SieveOutcome> {
    config.validate()?;
    let ranges = discriminant_ranges(&config.chi_max);
    let mut counts = StageCounts::default();
    let mut diagnostics = Vec::new();

    let stage1: Vec<&FieldDescriptor> = config
        .field_table
        .iter()
        .filter(|f| in_ranges(&ranges, f.degree(), f.discriminant()))
        .collect();
    for f in &stage1 {
        *counts.stage1_by_degree.entry(f.degree()).or_default() += 1;
    }
    counts.stage1_total = stage1.len();
    let reference: usize = REFERENCE_STAGE1_COUNTS.iter().map(|&(_, n)| n).sum();
    if config.chi_max == ExactRational::from_integer(24) && counts.stage1_total != reference {
        diagnostics.push(format!(
            "table provenance: {} fields inside the ranges, reference tables give {reference}",
            counts.stage1_total
        ));
    }

    let run = || -> Vec<CandidateReport> {
        stage1
            .par_iter()
            .map(|field| {
                let lower_bound = field_lower_bound(field, config.rank);
                let mut report = CandidateReport {
                    field: (*field).clone(),
                    chi_principal: None,
                    numerator: None,
                    bad_places: Vec::new(),
                    verdict: Verdict::DiscardedByBound,
                    trace: vec![format!("stage 2: χ > {}", lower_bound.to_decimal(6))],
                    lower_bound,
                };
                if !report.lower_bound.certainly_gt_rational(&config.chi_max) {
                    stage3(config, field, &mut report);
                }
                report
            })
            .collect()
    };
    let mut reports = match config.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run),
        None => run(),
    };
    reports.sort_by_cached_key(sort_key);

    for r in &reports {
        if r.verdict != Verdict::DiscardedByBound {
            *counts.stage2_by_degree.entry(r.field.degree()).or_default() += 1;
            counts.stage2_total += 1;
        }
        match r.verdict {
            Verdict::Survives => counts.survivors += 1,
            Verdict::NeedsData => counts.needs_data += 1,
            _ => {}
        }
    }
    diagnostics.push(format!(
        "after the class-number bound: {} fields ({})",
        counts.stage2_total,
        counts
            .stage2_by_degree
            .iter()
            .map(|(d, n)| format!("d={d}: {n}"))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    Ok(SieveOutcome {
        ranges,
        counts,
        reports,
        diagnostics,
    })
}

/// A torsion-free subgroup a manifold would have to be.
#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldCandidate {
    pub field_label: String,
    pub group_chi: ExactRational,
    pub manifold_chi: u64,
    #[serde_as(as = "DisplayFromStr")]
    pub index: BigInt,
}

/// For each survivor and each even `χ(M) ≤ chi_max`, the index
/// `χ(M)/χ(Γ)` when it is an integer.
pub fn manifold_candidates(
    reports: &[CandidateReport],
    chi_max: &ExactRational,
) -> Vec<ManifoldCandidate> {
    let top: u64 = chi_max.floor().try_into().unwrap_or(0);
    let mut out = Vec::new();
    for r in reports.iter().filter(|r| r.verdict == Verdict::Survives) {
        let chi = r.chi_principal.as_ref().expect("survivors carry χ");
        for m in (2..=top).step_by(2) {
            let index = ExactRational::from_integer(m) / chi.clone();
            if index.is_integer() {
                out.push(ManifoldCandidate {
                    field_label: r.field.label().to_string(),
                    group_chi: chi.clone(),
                    manifold_chi: m,
                    index: index.numer().clone(),
                });
            }
        }
    }
    out
}

/// One JSON object per report.
pub fn render_jsonl(reports: &[CandidateReport]) -> String {
    reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("serializable") + "\n")
        .collect()
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Survives => "survives",
        Verdict::DiscardedByBound => "discarded_by_bound",
        Verdict::DiscardedByNumerator => "discarded_by_numerator",
        Verdict::NeedsData => "needs_data",
    }
}

/// Aligned table of the reports that reached stage 3.
pub fn render_text(reports: &[CandidateReport]) -> String {
    let rows: Vec<[String; 6]> = reports
        .iter()
        .filter(|r| r.verdict != Verdict::DiscardedByBound)
        .map(|r| {
            [
                r.field.label().to_string(),
                r.field.class_number().to_string(),
                r.chi_principal.as_ref().map_or("-".into(), ToString::to_string),
                r.chi_principal
                    .as_ref()
                    .map_or("-".into(), |c| decimal_string(c, 4)),
                r.bad_places
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("; "),
                verdict_name(r.verdict).to_string(),
            ]
        })
        .collect();
    let header = ["field", "h", "chi", "approx", "T", "verdict"].map(String::from);
    let mut widths = header.clone().map(|h| h.chars().count());
    for row in &rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String; 6]| {
        let mut s = String::new();
        for (c, w) in cells.iter().zip(widths) {
            s.push_str(c);
            s.push_str(&" ".repeat(w - c.chars().count() + 2));
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(&header);
    for row in &rows {
        out.push_str(&line(row));
    }
    out
}
