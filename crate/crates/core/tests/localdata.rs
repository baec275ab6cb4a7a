use num_bigint::BigInt;
use orbivol::exact::{rat, ExactRational};
use orbivol::localdata::*;
use orbivol::Error;
use proptest::prelude::*;

const QS: [u64; 8] = [2, 3, 4, 5, 7, 8, 9, 11];

fn place(q: u64, t: ParahoricType) -> LocalPlaceData {
    LocalPlaceData::new(q, t).unwrap()
}

#[test]
fn table_examples() {
    for r in 2..=5 {
        let t = ParahoricType::hyperspecial(r).unwrap();
        assert_eq!(lambda_factor(&place(7, t), r).unwrap(), rat(1, 1));
    }
    let t = ParahoricType::split_zero_one(2).unwrap();
    assert_eq!(lambda_factor(&place(3, t), 2).unwrap(), rat(40, 1));
    let t = ParahoricType::nonsplit(1, 2).unwrap();
    assert_eq!(lambda_factor(&place(2, t), 2).unwrap(), rat(3, 2));
}

#[test]
fn oracle_examples() {
    let t = ParahoricType::split(2, 2).unwrap();
    assert_eq!(lambda_factor_via_orders(&place(2, t), 2).unwrap(), rat(5, 2));
    let t = ParahoricType::nonsplit(0, 2).unwrap();
    assert_eq!(lambda_factor_via_orders(&place(3, t), 2).unwrap(), rat(10, 1));
    let t = ParahoricType::split(2, 3).unwrap();
    let q = 2i64;
    let want = ExactRational::new(
        (q.pow(2) + 1) * (q.pow(6) - 1),
        2 * (q.pow(2) - 1),
    );
    assert_eq!(lambda_factor_via_orders(&place(2, t), 3).unwrap(), want);
}

#[test]
fn group_orders() {
    // |SO_3(q)| = q (q^2 - 1), |O^+_2(q)| = 2 (q - 1), |O^-_4(2)| = 2·|PSL_2(4)|
    assert_eq!(FiniteGroup::SoOdd(1).order(5), BigInt::from(120));
    assert_eq!(FiniteGroup::OEvenPlus(1).order(7), BigInt::from(12));
    assert_eq!(FiniteGroup::OEvenMinus(2).order(2), BigInt::from(120));
    assert_eq!(FiniteGroup::SoOdd(2).order(2), BigInt::from(720));
    assert_eq!(FiniteGroup::SoOdd(3).positive_roots(), 9);
    let g = reductive_quotient(&ParahoricType::split(2, 4).unwrap());
    assert_eq!(
        g,
        FiniteGroup::Product(vec![FiniteGroup::OEvenPlus(2), FiniteGroup::SoOdd(2)])
    );
    assert_eq!(g.positive_roots(), 2 + 4);
}

#[test]
fn exhaustive_oracle_agreement() {
    for r in 2..=6 {
        for t in ParahoricType::all(r) {
            for q in QS {
                let p = place(q, t);
                assert_eq!(
                    lambda_factor(&p, r).unwrap(),
                    lambda_factor_via_orders(&p, r).unwrap(),
                    "{p} r={r}"
                );
            }
        }
    }
}

#[test]
fn proposition_lower_bounds() {
    let one = rat(1, 1);
    let two = rat(2, 1);
    let mut exceptions = Vec::new();
    for r in 2..=6 {
        for t in ParahoricType::all(r) {
            if t.is_hyperspecial() {
                continue;
            }
            for q in QS {
                let l = lambda_factor(&place(q, t), r).unwrap();
                assert!(l > one, "λ ≤ 1 at {t} q={q} r={r}");
                if l <= two {
                    exceptions.push((r, q, t, l));
                }
            }
        }
    }
    assert_eq!(
        exceptions,
        vec![(2, 2, ParahoricType::nonsplit(1, 2).unwrap(), rat(3, 2))]
    );
}

#[test]
fn legal_types() {
    let r2: Vec<String> = ParahoricType::all(2).iter().map(|t| t.to_string()).collect();
    assert_eq!(r2, ["Δ1\\{α0}", "Δ1\\{α0,α1}", "Δ1\\{α2}", "Δ2\\{α0}", "Δ2\\{α1}"]);
    assert_eq!(ParahoricType::all(5).len(), 6 + 5);
    assert_eq!(
        ParahoricType::split(1, 3).unwrap(),
        ParahoricType::split(0, 3).unwrap()
    );
    assert!(matches!(ParahoricType::split(4, 3), Err(Error::IllegalType(_))));
    assert!(matches!(ParahoricType::nonsplit(3, 3), Err(Error::IllegalType(_))));
    assert!(matches!(ParahoricType::split(0, 1), Err(Error::IllegalType(_))));
    assert!(LocalPlaceData::new(6, ParahoricType::split(0, 2).unwrap()).is_err());
    let p = place(4, ParahoricType::nonsplit(1, 2).unwrap());
    assert!(matches!(lambda_factor(&p, 3), Err(Error::IllegalType(_))));
}

#[test]
fn type_json_round_trip() {
    for t in ParahoricType::all(4) {
        let p = place(9, t);
        let js = serde_json::to_string(&p).unwrap();
        let back: LocalPlaceData = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }
}

#[test]
fn xi_orders() {
    assert_eq!(xi_order(&place(2, ParahoricType::nonsplit(0, 2).unwrap())), 1);
    assert_eq!(xi_order(&place(2, ParahoricType::split(0, 2).unwrap())), 1);
    assert_eq!(xi_order(&place(2, ParahoricType::split(2, 2).unwrap())), 2);
    assert_eq!(xi_order(&place(3, ParahoricType::split_zero_one(3).unwrap())), 2);
}

#[test]
fn kottwitz_signs() {
    assert_eq!(epsilon_finite(true), 1);
    assert_eq!(epsilon_finite(false), -1);
    assert_eq!(epsilon_archimedean(2, true), -1);
    assert_eq!(epsilon_archimedean(2, false), -1);
    assert_eq!(epsilon_archimedean(4, true), 1);
    assert_eq!(epsilon_archimedean(3, false), 1);
    assert!(parity_check(2, 2, 0));
    assert!(parity_check(3, 2, 1));
    assert!(!parity_check(3, 2, 0));
    assert_eq!(required_nonsplit_parity(2, 3), 1);
    assert_eq!(required_nonsplit_parity(2, 1), 1);
    assert_eq!(required_nonsplit_parity(4, 5), 0);
}

#[test]
fn quadratic_parity_statement() {
    // over a quadratic field the number of nonsplit places is odd for odd r
    // and even for even r
    for r in 2..=9 {
        for n in 0..10 {
            assert_eq!(parity_check(r, 2, n), n % 2 == (r % 2) as usize, "r={r} n={n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]
    #[test]
    fn parity_invariant_under_two_more(r in 2u32..40, d in 1u32..12, n in 0usize..50) {
        prop_assert_eq!(parity_check(r, d, n), parity_check(r, d, n + 2));
    }
}
