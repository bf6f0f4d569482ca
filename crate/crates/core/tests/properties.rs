//! Randomized properties tying the exact kernels together: census code
//! against constructed root sets, symbolic against resultant discriminants,
//! hull geometry against inequality checks, and closure laws of the
//! multiplier tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use polyclass::archgeo::{arch_newton, cone_member, Cone, ConeSpec, Region, Strictness};
use polyclass::archgeo::log_concavity;
use polyclass::discriminant::{discriminant_value, symbolic_discriminant_cached};
use polyclass::multiplier::{fiber_path_check, ms_check, witness_si_search, MsKind};
use polyclass::realroots::{classify, root_report, si_check_exhaustive};
use polyclass::{GammaSeq, Poly};
use proptest::prelude::*;

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

prop_compose! {
    fn small_rational()(num in -9i64..=9, den in 1i64..=4) -> BigRational {
        rat(num, den)
    }
}

prop_compose! {
    fn positive_rational()(num in 1i64..=9, den in 1i64..=4) -> BigRational {
        rat(num, den)
    }
}

prop_compose! {
    fn real_rooted_poly(max_deg: usize)(
        roots in prop::collection::vec(small_rational(), 1..=max_deg),
    ) -> Poly {
        Poly::from_roots(&roots)
    }
}

/// Entries `c, c r_1, c r_1 r_2, ...` with nonincreasing ratios. Sorting the
/// ratios makes log-concavity hold by construction.
fn concave_from_ratios(c: BigRational, mut ratios: Vec<BigRational>) -> GammaSeq {
    ratios.sort_by(|a, b| b.cmp(a));
    let mut entries = vec![c];
    for r in ratios {
        let last = entries.last().unwrap().clone();
        entries.push(last * r);
    }
    GammaSeq::new(entries).expect("positive entries")
}

prop_compose! {
    fn log_concave_gamma(len: usize)(
        c in positive_rational(),
        ratios in prop::collection::vec(positive_rational(), len - 1),
    ) -> GammaSeq {
        concave_from_ratios(c, ratios)
    }
}

proptest! {
    #[test]
    fn geometric_sequences_preserve_real_rootedness(
        p in real_rooted_poly(5),
        c in positive_rational(),
        r in positive_rational(),
    ) {
        let mut entries = Vec::with_capacity(p.degree() + 1);
        let mut cur = c;
        for _ in 0..=p.degree() {
            entries.push(cur.clone());
            cur *= &r;
        }
        let gamma = GammaSeq::new(entries).unwrap();
        let image = gamma.apply(&p).unwrap();
        prop_assert!(polyclass::realroots::is_real_rooted(&image).unwrap());
    }

    #[test]
    fn symbolic_and_resultant_discriminants_agree(
        coeffs in prop::collection::vec(small_rational(), 3..=6),
    ) {
        prop_assume!(!coeffs.first().unwrap().is_zero());
        prop_assume!(!coeffs.last().unwrap().is_zero());
        let p = Poly::new(coeffs.clone());
        let k = coeffs.len() - 1;
        prop_assume!(p.degree() == k);
        let sym = symbolic_discriminant_cached(k).unwrap();
        let direct = discriminant_value(&p).unwrap();
        prop_assert_eq!(sym.eval(&coeffs).unwrap(), direct);
    }

    #[test]
    fn repeated_roots_zero_the_discriminant(
        roots in prop::collection::vec(small_rational(), 1..=3),
        dup in small_rational(),
    ) {
        let mut all = roots;
        all.push(dup.clone());
        all.push(dup);
        let p = Poly::from_roots(&all);
        prop_assert!(discriminant_value(&p).unwrap().is_zero());
    }

    #[test]
    fn distinct_roots_keep_the_discriminant_nonzero(
        a in -9i64..=9, b in -9i64..=9, c in -9i64..=9,
    ) {
        prop_assume!(a != b && b != c && a != c);
        let roots = [rat(a, 1), rat(b, 1), rat(c, 1)];
        let p = Poly::from_roots(&roots);
        prop_assert!(!discriminant_value(&p).unwrap().is_zero());
    }

    #[test]
    fn census_counts_constructed_roots(
        roots in prop::collection::vec(small_rational(), 1..=5),
    ) {
        let p = Poly::from_roots(&roots);
        let report = root_report(&p).unwrap();
        prop_assert_eq!(report.total_real_with_mult, roots.len());

        // A quadratic factor with no real zero leaves the census unchanged.
        let shifted = &p * &Poly::from_integers(&[1, 0, 1]);
        let report2 = root_report(&shifted).unwrap();
        prop_assert_eq!(report2.total_real_with_mult, roots.len());
        prop_assert_eq!(report2.degree, roots.len() + 2);
    }

    #[test]
    fn strict_concavity_matches_full_vertex_hulls(
        entries in prop::collection::vec(positive_rational(), 3..=7),
    ) {
        let gamma = GammaSeq::new(entries.clone()).unwrap();
        let strict = log_concavity(&gamma, Strictness::Strict).unwrap().holds;
        let p = Poly::new(entries.clone());
        let hull = arch_newton(&p).unwrap();
        prop_assert_eq!(strict, hull.vertices.len() == entries.len());
    }

    #[test]
    fn strengthened_interior_lies_in_the_concave_interior(
        entries in prop::collection::vec(positive_rational(), 3..=7),
    ) {
        let k = entries.len() - 1;
        let strong =
            cone_member(ConeSpec { cone: Cone::Strengthened, k }, &entries).unwrap();
        let weak =
            cone_member(ConeSpec { cone: Cone::LogConcave, k }, &entries).unwrap();
        if strong.region == Region::Interior {
            prop_assert_eq!(weak.region, Region::Interior);
        }
        for i in &weak.violated {
            prop_assert!(strong.violated.contains(i));
        }
    }

    #[test]
    fn hadamard_products_stay_log_concave(
        c1 in positive_rational(),
        c2 in positive_rational(),
        r1 in prop::collection::vec(positive_rational(), 3),
        r2 in prop::collection::vec(positive_rational(), 3),
    ) {
        let g1 = concave_from_ratios(c1, r1);
        let g2 = concave_from_ratios(c2, r2);
        let prod = g1.hadamard(&g2).unwrap();
        prop_assert!(ms_check(&g1, MsKind::Kind3).unwrap().pass);
        prop_assert!(ms_check(&g2, MsKind::Kind3).unwrap().pass);
        prop_assert!(ms_check(&prod, MsKind::Kind3).unwrap().pass);
    }

    #[test]
    fn the_first_kind_implies_the_second(
        entries in prop::collection::vec(positive_rational(), 3..=6),
    ) {
        let gamma = GammaSeq::new(entries).unwrap();
        let first = ms_check(&gamma, MsKind::Kind1Finite).unwrap();
        if first.pass {
            prop_assert!(ms_check(&gamma, MsKind::Kind2Finite).unwrap().pass);
        }
    }

    #[test]
    fn classification_ignores_scaling(
        roots in prop::collection::vec(small_rational(), 2..=4),
        lambda in positive_rational(),
    ) {
        let p = Poly::from_roots(&roots);
        let scaled = p.scale(&lambda);
        let a = classify(&p).unwrap();
        let b = classify(&scaled).unwrap();
        prop_assert_eq!(a.in_rr, b.in_rr);
        prop_assert_eq!(a.in_ss, b.in_ss);
        prop_assert_eq!(a.in_si_geq, b.in_si_geq);
        prop_assert_eq!(a.in_ii_geq, b.in_ii_geq);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fiber_quotients_verify_exhaustively(
        k in 2usize..=4,
        c in positive_rational(),
        ratios in prop::collection::vec(positive_rational(), 4),
    ) {
        let base = witness_si_search(k, &BigRational::one()).unwrap().1;
        let gamma = concave_from_ratios(c, ratios[..k].to_vec());
        let image = gamma.apply(&base).unwrap();
        for p in [base, image] {
            let report = fiber_path_check(&p, 6).unwrap();
            prop_assert_eq!(report.quotient.degree(), k - 1);
            prop_assert!(si_check_exhaustive(&report.quotient).unwrap());
        }
    }
}

#[test]
fn quadratic_discriminant_is_the_classical_formula() {
    // b^2 - 4ac for a + bx + cx^2 read in ascending order.
    let p = Poly::from_integers(&[3, 7, 2]);
    let expected = rat(7 * 7 - 4 * 3 * 2, 1);
    assert_eq!(discriminant_value(&p).unwrap(), expected);
    assert!(!BigRational::one().is_zero());
}
