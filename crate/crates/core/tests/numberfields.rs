use num_bigint::BigInt;
use orbivol::numberfields::arith::{is_fundamental_discriminant, kronecker, primes_up_to};
use orbivol::numberfields::{
    bundled_field, bundled_fields, bundled_quadratic, ingest_field_table, serialize_field_table,
    FieldDescriptor, SplittingSource,
};
use orbivol::Error;
use proptest::prelude::*;

const SMALL: &str = r#"# two quadratic fields, out of order
{"label": "2.2.8.1", "degree": 2, "disc": 8, "h": 1, "poly": [-2, 0, 1]}
{"label": "2.2.5.1", "degree": 2, "disc": 5, "h": 1, "poly": [-1, -1, 1]}
"#;

#[test]
fn ingest_sorts_and_skips_comments() {
    let fields = ingest_field_table(SMALL.as_bytes()).unwrap();
    assert_eq!(fields.len(), 2);
    assert_eq!(fields[0].discriminant(), &BigInt::from(5));
    assert_eq!(fields[0].degree(), 2);
    assert_eq!(fields[1].discriminant(), &BigInt::from(8));
    assert!(ingest_field_table("".as_bytes()).unwrap().is_empty());
}

#[test]
fn ingest_rejects_bad_records() {
    let dup = r#"{"label": "a", "degree": 2, "disc": 5, "h": 1, "poly": [-1, -1, 1]}
{"label": "a", "degree": 2, "disc": 8, "h": 1, "poly": [-2, 0, 1]}"#;
    assert_eq!(
        ingest_field_table(dup.as_bytes()),
        Err(Error::DuplicateLabel("a".into()))
    );

    let non_monic = r#"{"label": "b", "degree": 2, "disc": 8, "h": 1, "poly": [-1, 0, 2]}"#;
    assert!(matches!(
        ingest_field_table(non_monic.as_bytes()),
        Err(Error::InvariantViolation(_))
    ));

    let wrong_disc = r#"{"label": "c", "degree": 2, "disc": 13, "h": 1, "poly": [-2, 0, 1]}"#;
    assert!(matches!(
        ingest_field_table(wrong_disc.as_bytes()),
        Err(Error::InvariantViolation(_))
    ));

    let imaginary = r#"{"label": "d", "degree": 2, "disc": 4, "h": 1, "poly": [1, 0, 1]}"#;
    assert!(matches!(
        ingest_field_table(imaginary.as_bytes()),
        Err(Error::InvariantViolation(_))
    ));

    let garbage = "# header\n\nnot json\n";
    assert!(matches!(
        ingest_field_table(garbage.as_bytes()),
        Err(Error::Parse { line: 3, .. })
    ));
}

#[test]
fn serialize_round_trip_on_bundled_table() {
    let fields = bundled_fields();
    let mut buf = Vec::new();
    serialize_field_table(fields, &mut buf).unwrap();
    let back = ingest_field_table(buf.as_slice()).unwrap();
    assert_eq!(back.as_slice(), fields);
}

#[test]
fn bundled_counts_by_degree() {
    let mut counts = [0usize; 7];
    for f in bundled_fields() {
        counts[f.degree() as usize] += 1;
    }
    assert_eq!(counts, [0, 1, 109, 98, 182, 45, 32]);
}

#[test]
fn golden_field_splitting() {
    let k = bundled_quadratic(5).unwrap();
    let s2 = k.splitting_type(2);
    assert_eq!(s2.factors, vec![(2, 1)]);
    assert!(s2.certified);
    assert_eq!(s2.residue_sizes(), vec![4]);
    assert_eq!(k.splitting_type(11).factors, vec![(1, 1), (1, 1)]);
    let s5 = k.splitting_type(5);
    assert_eq!(s5.factors, vec![(1, 2)]);
    assert!(s5.is_ramified() && s5.certified);
}

#[test]
fn residue_size_queries() {
    let cubic = bundled_field("3.3.49.1").unwrap();
    assert!(!cubic.has_place_of_residue_size(2, 100).unwrap());
    assert!(cubic.has_place_of_residue_size(8, 100).unwrap());
    let k = bundled_quadratic(5).unwrap();
    assert!(k.has_place_of_residue_size(4, 100).unwrap());
    assert!(!k.has_place_of_residue_size(2, 100).unwrap());
    assert!(FieldDescriptor::rationals()
        .has_place_of_residue_size(2, 100)
        .unwrap());
    assert!(k.has_place_of_residue_size(6, 100).is_err());
}

#[test]
fn index_primes_need_overrides() {
    // x^3 - x^2 - 10x + 8 generates an order of index 2 in the field of discriminant 961
    let poly = [8, -10, -1, 1].map(BigInt::from).to_vec();
    let bare = FieldDescriptor::new("t", 3, 961, 1, poly, vec![]).unwrap();
    assert_eq!(bare.polynomial_index(), &BigInt::from(2));
    assert!(!bare.splitting_type(2).certified);
    assert_eq!(
        bare.place_splitting(2),
        Err(Error::UncertifiedPrime {
            label: "t".into(),
            prime: 2
        })
    );
    assert!(bare.has_place_of_residue_size(2, 100).is_err());

    let table = bundled_field("3.3.961.1").unwrap();
    let s = table.place_splitting(2).unwrap();
    assert_eq!(s.source, SplittingSource::Override);
    assert_eq!(s.factors, vec![(1, 1), (1, 1), (1, 1)]);
}

#[test]
fn every_bundled_prime_resolves_with_degree_sum() {
    let primes = primes_up_to(200);
    for f in bundled_fields() {
        for &p in &primes {
            let s = f.place_splitting(p).unwrap_or_else(|e| panic!("{}: {e}", f.label()));
            let sum: u32 = s.factors.iter().map(|&(g, e)| g * e).sum();
            assert_eq!(sum, f.degree(), "{} at {p}", f.label());
        }
    }
}

#[test]
fn ramified_primes_divide_the_discriminant() {
    for f in bundled_fields().iter().filter(|f| f.degree() >= 2) {
        for p in primes_up_to(100) {
            let s = f.place_splitting(p).unwrap();
            let divides = (f.discriminant() % BigInt::from(p)) == BigInt::from(0);
            assert_eq!(s.is_ramified(), divides, "{} at {p}", f.label());
        }
    }
}

proptest! {
    #[test]
    fn quadratic_splitting_matches_kronecker(i in 0usize..109, pi in 0usize..300) {
        let quadratics: Vec<_> = bundled_fields().iter().filter(|f| f.degree() == 2).collect();
        let k = quadratics[i];
        let d: i64 = k.discriminant().try_into().unwrap();
        prop_assert!(is_fundamental_discriminant(d));
        let p = primes_up_to(2000)[pi];
        let s = k.place_splitting(p).unwrap();
        match kronecker(d, p as i64) {
            1 => prop_assert_eq!(s.factors, vec![(1, 1), (1, 1)]),
            -1 => prop_assert_eq!(s.factors, vec![(2, 1)]),
            _ => prop_assert_eq!(s.factors, vec![(1, 2)]),
        }
    }
}
