use num_bigint::BigInt;
use orbivol::exact::{bernoulli, rat, ExactRational, RealInterval};
use orbivol::numberfields::{bundled_field, bundled_fields, bundled_quadratic, FieldDescriptor};
use orbivol::zeta::*;
use orbivol::Error;
use proptest::prelude::*;

fn golden() -> &'static FieldDescriptor {
    bundled_quadratic(5).unwrap()
}

fn exact(v: ZetaValue) -> ExactRational {
    v.exact.unwrap()
}

#[test]
fn riemann_values() {
    assert_eq!(riemann_zeta_negative(1), rat(-1, 12));
    assert_eq!(riemann_zeta_negative(2), rat(1, 120));
    assert_eq!(riemann_zeta_negative(3), rat(-1, 252));
}

#[test]
fn kronecker_tables() {
    let c5 = kronecker_character(5).unwrap();
    assert_eq!([1, 2, 3, 4].map(|a| c5.value(a)), [1, -1, -1, 1]);
    let c8 = kronecker_character(8).unwrap();
    assert_eq!([1, 3, 5, 7].map(|a| c8.value(a)), [1, -1, -1, 1]);
    let c12 = kronecker_character(12).unwrap();
    assert_eq!([1, 5, 7, 11].map(|a| c12.value(a)), [1, -1, -1, 1]);
    assert_eq!(
        kronecker_character(20),
        Err(Error::NotFundamental(BigInt::from(20)))
    );
    assert!(kronecker_character(-4).is_err());
}

#[test]
fn l_values_at_negative_integers() {
    let c5 = kronecker_character(5).unwrap();
    assert_eq!(dirichlet_l_negative(&c5, 1).unwrap(), rat(-2, 5));
    assert_eq!(generalized_bernoulli(&c5, 2), rat(4, 5));
    // ζ(-3)·L(-3, χ_5) must reproduce ζ_{ℚ(√5)}(-3)
    let l3 = dirichlet_l_negative(&c5, 2).unwrap();
    assert_eq!(riemann_zeta_negative(2) * l3, rat(1, 60));
    let trivial = DirichletCharacter::trivial();
    assert_eq!(dirichlet_l_negative(&trivial, 1).unwrap(), rat(-1, 12));

    let chi4 = DirichletCharacter::from_values(vec![0, 1, 0, -1]).unwrap();
    assert_eq!(dirichlet_l_negative(&chi4, 1), Err(Error::OddCharacter));
    assert!(DirichletCharacter::from_values(vec![0, 1, 1, 1]).is_err());
}

#[test]
fn generalized_bernoulli_by_brute_force_power_sums() {
    // B_{n,χ} = lim (1/N') Σ χ(a) ... ; here via the identity
    // Σ_{a=1}^{fM} χ(a) a^{n} = (B_{n+1,χ}(fM) - B_{n+1,χ}) / (n+1) with
    // B_{n+1,χ}(X) = Σ C(n+1,j) B_{j,χ} X^{n+1-j}; at M = 1 and χ even this
    // pins down B_{2,χ} from the first power sums.
    for d in [5i64, 8, 12, 13, 17, 21, 24] {
        let chi = kronecker_character(d).unwrap();
        // Σ χ(a) a = 0 and Σ χ(a) a^2 = f·B_{2,χ} for even χ
        let s1: i64 = (1..=d).map(|a| i64::from(chi.value(a)) * a).sum();
        let s2: i64 = (1..=d).map(|a| i64::from(chi.value(a)) * a * a).sum();
        assert_eq!(s1, 0);
        assert_eq!(generalized_bernoulli(&chi, 2), rat(s2, d));
    }
}

#[test]
fn dedekind_negative_examples() {
    assert_eq!(exact(dedekind_zeta_negative(golden(), 1, None).unwrap()), rat(1, 30));
    assert_eq!(exact(dedekind_zeta_negative(golden(), 2, None).unwrap()), rat(1, 60));
    let q = FieldDescriptor::rationals();
    let v = dedekind_zeta_negative(&q, 2, None).unwrap();
    assert_eq!(v.method, ZetaMethod::BernoulliExact);
    assert_eq!(v.argument, -3);
    assert_eq!(exact(v), rat(1, 120));
    let sqrt2 = bundled_quadratic(8).unwrap();
    assert_eq!(exact(dedekind_zeta_negative(sqrt2, 1, None).unwrap()), rat(1, 12));
    assert_eq!(exact(dedekind_zeta_negative(sqrt2, 2, None).unwrap()), rat(11, 120));
    let sqrt3 = bundled_quadratic(12).unwrap();
    assert_eq!(exact(dedekind_zeta_negative(sqrt3, 1, None).unwrap()), rat(1, 6));
    assert_eq!(exact(dedekind_zeta_negative(sqrt3, 2, None).unwrap()), rat(23, 60));
}

#[test]
fn reconstructed_values_for_higher_degree() {
    // reference values computed independently with PARI/GP's lfun
    let cases = [
        ("3.3.49.1", rat(-1, 21), rat(79, 210)),
        ("3.3.81.1", rat(-1, 9), rat(199, 90)),
        ("4.4.725.1", rat(2, 15), rat(541, 15)),
        ("5.5.14641.1", rat(-20, 33), rat(1695622, 165)),
        ("5.5.24217.1", rat(-4, 3), rat(898526, 15)),
    ];
    for (label, z1, z3) in cases {
        let k = bundled_field(label).unwrap();
        let v1 = dedekind_zeta_negative(k, 1, None).unwrap();
        assert_eq!(v1.method, ZetaMethod::FunctionalEquationReconstructed);
        let e1 = v1.exact.clone().unwrap();
        assert_eq!(e1, z1, "{label} at -1");
        assert!(v1.enclosure.unwrap().contains(&e1));
        assert_eq!(exact(dedekind_zeta_negative(k, 2, None).unwrap()), z3, "{label} at -3");
    }
}

#[test]
fn explicit_denominator_bound_uses_continued_fractions() {
    let k = bundled_field("3.3.49.1").unwrap();
    let v = dedekind_zeta_negative(k, 2, Some(&BigInt::from(1000))).unwrap();
    assert_eq!(v.exact.unwrap(), rat(79, 210));
    assert!(default_denominator_bound(k, 1) > BigInt::from(1000));
}

#[test]
fn positive_enclosures() {
    let q = FieldDescriptor::rationals();
    let z2 = dedekind_zeta_positive_enclosure(&q, 2, 10_000).unwrap();
    let pi = RealInterval::pi(256);
    let pi2_6 = (&pi * &pi)
        .checked_div(&RealInterval::from_integer(6, 256))
        .unwrap();
    assert!(z2.contains_interval(&pi2_6));

    let big = dedekind_zeta_positive_enclosure(golden(), 40, 10_000).unwrap();
    assert!(big.certainly_gt_rational(&rat(1, 1)));
    assert!(big.upper() <= rat(1, 1) + rat(1, 10_000_000_000));

    assert!(dedekind_zeta_positive_enclosure(&q, 3, 10_000).is_err());
    assert!(dedekind_zeta_positive_enclosure(&q, 2, 50).is_err());
}

#[test]
fn golden_zeta_two_matches_functional_equation() {
    // invert the functional equation at ζ_k(-1) = 1/30
    let k = golden();
    let fe = functional_equation_factor(k, 1, 256);
    let forced = RealInterval::from_rational(&rat(1, 30), 256)
        .checked_div(&fe)
        .unwrap();
    let euler = dedekind_zeta_positive_enclosure(k, 2, 10_000).unwrap();
    assert!(euler.intersect(&forced).is_some());
    let em = dedekind_zeta_positive(k, 2, &ZetaOptions::default()).unwrap();
    assert_eq!(em.method, ZetaMethod::EulerMaclaurinEnclosure);
    let em = em.enclosure.unwrap();
    assert!(em.intersect(&forced).is_some());
    assert!(em.relative_width().unwrap() < rat(1, 1_000_000_000_000_000_000));
}

#[test]
fn sign_pattern() {
    for k in bundled_fields().iter().filter(|k| k.degree() <= 2).take(40) {
        for i in 1..=4 {
            let v = exact(dedekind_zeta_negative(k, i, None).unwrap());
            assert_eq!(v.signum(), negative_value_sign(k.degree(), i), "{}", k.label());
        }
    }
}

#[test]
fn inequality_star() {
    let k = golden();
    let mut prod = RealInterval::from_integer(1, 256);
    let two = rat(2, 1);
    for i in 1..=100u32 {
        prod = &prod * &dedekind_zeta_positive_enclosure(k, 2 * i, 10_000).unwrap();
        assert!(prod.certainly_lt_rational(&two), "r = {i}");
    }
    let z2 = dedekind_zeta_positive_enclosure(k, 2, 10_000).unwrap();
    let e = RealInterval::from_rational(&rat(1, 3), 256).exp();
    assert!((&z2 * &e).certainly_lt_rational(&two));
}

#[test]
fn riemann_zeta_small_excess() {
    let q = FieldDescriptor::rationals();
    for n in (4..=40).step_by(2) {
        let z = dedekind_zeta_positive_enclosure(&q, n, 10_000).unwrap();
        let bound = rat(1, 1) + rat(2, 1) / ExactRational::from(2).pow(n as i32);
        assert!(z.certainly_lt_rational(&bound), "n = {n}");
    }
    // odd n through Euler–Maclaurin
    for n in (5..=39).step_by(2) {
        let z = hurwitz_zeta_enclosure(n, &rat(1, 1), 256);
        let bound = rat(1, 1) + rat(2, 1) / ExactRational::from(2).pow(n as i32);
        assert!(z.certainly_lt_rational(&bound), "n = {n}");
    }
}

#[test]
fn bernoulli_exact_agrees_with_hurwitz_at_rationals() {
    // ζ(2i) = |B_{2i}| (2π)^{2i} / (2 (2i)!)
    for i in 1..=6u32 {
        let z = hurwitz_zeta_enclosure(2 * i, &rat(1, 1), 256);
        let fact: BigInt = (1..=2 * i).map(BigInt::from).product();
        let two_pi = &RealInterval::pi(256) * &RealInterval::from_integer(2, 256);
        let want = (&RealInterval::from_rational(&bernoulli(2 * i).abs(), 256)
            * &two_pi.powi(2 * i64::from(i)))
            .checked_div(&RealInterval::from_integer(fact * 2, 256))
            .unwrap();
        assert!(z.intersect(&want).is_some(), "i = {i}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn quadratic_round_trip(idx in 0usize..109, i in 1u32..=8) {
        let quadratics: Vec<_> = bundled_fields().iter().filter(|f| f.degree() == 2).collect();
        let k = quadratics[idx];
        let ex = exact(dedekind_zeta_negative(k, i, None).unwrap());
        let z = dedekind_zeta_positive_enclosure(k, 2 * i, 10_000).unwrap();
        let analytic = &z * &functional_equation_factor(k, i, 256);
        prop_assert!(analytic.contains(&ex.abs()), "{} i={}", k.label(), i);
    }
}
