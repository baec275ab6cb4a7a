//! Search for the fields and principal arithmetic groups that can carry a
//! compact orientable arithmetic hyperbolic 4-manifold of small χ.

mod ranges;
mod run;

pub use ranges::{discriminant_lower_bound, discriminant_ranges, discriminant_upper_bound, in_ranges};
pub use run::{
    manifold_candidates, render_jsonl, render_text, run_sieve, CandidateReport,
    ManifoldCandidate, SieveConfig, SieveOutcome, StageCounts, Verdict, REFERENCE_STAGE1_COUNTS,
};
