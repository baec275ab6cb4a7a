use std::time::Instant;

use num_bigint::BigInt;
use orbivol::covolume::chi_closed_form_compact;
use orbivol::exact::{rat, ExactRational};
use orbivol::numberfields::bundled_fields;
use orbivol::sieve::*;
use proptest::prelude::*;

fn config(chi_max: ExactRational) -> SieveConfig {
    let mut c = SieveConfig::new(bundled_fields().to_vec(), chi_max).unwrap();
    c.workers = Some(4);
    c
}

#[test]
fn lemma_ranges() {
    let got: Vec<(u32, BigInt)> = discriminant_ranges(&rat(24, 1));
    let want: Vec<(u32, BigInt)> = [(2, 362), (3, 3104), (4, 26574), (5, 227481), (6, 1947276)]
        .into_iter()
        .map(|(d, b)| (d, BigInt::from(b)))
        .collect();
    assert_eq!(got, want);
    // degree 7 is excluded by the exact minimal discriminant 11.051…^7
    let y7 = discriminant_upper_bound(&rat(24, 1), 7, 128);
    assert!(y7.certainly_lt_rational(&discriminant_lower_bound(7)));
    assert!(!y7.certainly_lt_rational(&discriminant_lower_bound(6)));
}

#[test]
fn ten_to_the_d_alone_leaves_degrees_eight_to_ten() {
    for d in 8..=10 {
        let y = discriminant_upper_bound(&rat(24, 1), d, 128);
        assert!(y.certainly_gt_rational(&discriminant_lower_bound(d)), "d={d}");
    }
    for d in 11..=30 {
        let y = discriminant_upper_bound(&rat(24, 1), d, 128);
        assert!(y.certainly_lt_rational(&discriminant_lower_bound(d)), "d={d}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn ranges_are_monotone(a in 1i64..400, b in 1i64..400) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let small = discriminant_ranges(&rat(lo, 4));
        let large = discriminant_ranges(&rat(hi, 4));
        prop_assert!(small.len() <= large.len());
        for ((d1, m1), (d2, m2)) in small.iter().zip(&large) {
            prop_assert_eq!(d1, d2);
            prop_assert!(m1 <= m2);
        }
    }
}

#[test]
fn default_sieve() {
    let start = Instant::now();
    let out = run_sieve(&config(rat(24, 1))).unwrap();
    eprintln!("sieve: {:?}", start.elapsed());
    for d in &out.diagnostics {
        eprintln!("{d}");
    }
    let stage1: Vec<(u32, usize)> = out.counts.stage1_by_degree.clone().into_iter().collect();
    assert_eq!(stage1, REFERENCE_STAGE1_COUNTS);
    assert_eq!(out.counts.stage1_total, 466);
    assert_eq!(out.reports.len(), 466);
    assert_eq!(out.counts.needs_data, 0);
    let surv: Vec<(&str, ExactRational)> = out
        .survivors()
        .map(|r| (r.field.label(), r.chi_principal.clone().unwrap()))
        .collect();
    assert_eq!(surv, [("2.2.5.1", rat(1, 7200)), ("2.2.8.1", rat(11, 5760))]);

    let floor = chi_closed_form_compact(2);
    for r in &out.reports {
        if let Some(c) = &r.chi_principal {
            assert!(c >= &floor, "{} has χ = {c}", r.field.label());
        }
        if r.verdict == Verdict::Survives {
            let nu = r.numerator.as_ref().unwrap();
            assert!(nu <= &BigInt::from(24));
            assert!(nu % 2u32 == BigInt::from(0) || nu <= &BigInt::from(12));
        }
    }

    let cands = manifold_candidates(&out.reports, &rat(24, 1));
    let g2: Vec<_> = cands.iter().filter(|c| c.field_label == "2.2.8.1").collect();
    assert_eq!(g2.len(), 1);
    assert_eq!((g2[0].manifold_chi, g2[0].index.clone()), (22, BigInt::from(11520)));
    let g1: Vec<(u64, BigInt)> = cands
        .iter()
        .filter(|c| c.field_label == "2.2.5.1")
        .map(|c| (c.manifold_chi, c.index.clone()))
        .collect();
    assert_eq!(g1.len(), 12);
    assert_eq!(g1[0], (2, BigInt::from(14400)));
    assert_eq!(g1[11], (24, BigInt::from(172800)));
    for c in &cands {
        // ν divides the numerator of χ(M) = index·χ(Γ)
        let chi_m = ExactRational::from_integer(c.index.clone()) * c.group_chi.clone();
        assert!((chi_m.numer() % c.group_chi.numer()) == BigInt::from(0));
    }

    let text = render_text(&out.reports);
    assert!(text.lines().next().unwrap().starts_with("field"));
    let jsonl = render_jsonl(&out.reports);
    let back: Vec<CandidateReport> = jsonl
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(back, out.reports);
}

#[test]
fn small_chi_max() {
    let out = run_sieve(&config(rat(1, 10000))).unwrap();
    assert_eq!(out.survivors().count(), 0);
    let out = run_sieve(&config(rat(2, 1))).unwrap();
    let surv: Vec<&str> = out.survivors().map(|r| r.field.label()).collect();
    assert_eq!(surv, ["2.2.5.1"]);
}

#[test]
fn deterministic_across_workers() {
    let mut c = config(rat(6, 1));
    c.workers = Some(1);
    let a = run_sieve(&c).unwrap();
    c.workers = Some(3);
    let b = run_sieve(&c).unwrap();
    assert_eq!(a, b);
}

#[test]
fn config_validation() {
    assert!(SieveConfig::new(vec![], rat(24, 1)).is_ok());
    assert!(run_sieve(&SieveConfig::new(vec![], rat(24, 1)).unwrap()).is_err());
    assert!(SieveConfig::new(bundled_fields().to_vec(), rat(0, 1)).is_err());
    let c = SieveConfig::new(bundled_fields().to_vec(), rat(24, 1)).unwrap();
    assert_eq!(c.numerator_even_max, BigInt::from(24));
    assert_eq!(c.numerator_odd_max, BigInt::from(12));
}
