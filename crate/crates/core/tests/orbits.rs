mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use springer_levels::field::{jordan_type, kx_span, quotient_action, random_invertible};
use springer_levels::orbits::{
    classify_type, flag_dims, in_stratum_open, in_unipotent_variety, quotient_type_after_ui,
    semi_standard_element, standard_element, EnhancedPoint, PointJson, SemiStandardCoeffs,
};
use springer_levels::partitions::{LevelComposition, MultiPartition};

fn label_strategy() -> impl Strategy<Value = MultiPartition> {
    (0usize..=4, 1usize..=3).prop_flat_map(|(n, r)| {
        let all = MultiPartition::enumerate(n, r);
        prop::sample::select(all)
    })
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn type_is_conjugation_invariant(label in label_strategy(), q in prime(), seed in any::<u64>()) {
        let f = common::field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coeffs = SemiStandardCoeffs::sample(&label, f, &mut rng);
        let p = semi_standard_element(&label, f, &coeffs).unwrap();
        for _ in 0..50 {
            let g = random_invertible(f, p.n(), &mut rng);
            let (ty, _) = classify_type(&p.conjugate(&g).unwrap()).unwrap();
            prop_assert_eq!(&ty, &label);
        }
    }

    #[test]
    fn first_components_add_to_jordan_type(n in 0usize..=3, r in 1usize..=3, q in prime(), seed in any::<u64>()) {
        let f = common::field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let unip = common::unipotent_matrices(f, n);
        let x = unip[rand::Rng::gen_range(&mut rng, 0..unip.len())].clone();
        let vs = (1..r).map(|_| springer_levels::field::random_vector(f, n, &mut rng)).collect();
        let p = EnhancedPoint::new(x.clone(), vs).unwrap();
        let (ty, trace) = classify_type(&p).unwrap();
        prop_assert_eq!(ty.total(), jordan_type(&x).unwrap());
        let dims = trace.cumulative_dims();
        prop_assert!(dims.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(dims.last().copied().unwrap_or(0), n);
    }

    #[test]
    fn point_json_round_trip(label in label_strategy(), q in prime()) {
        let p = standard_element(&label, common::field(q));
        let json = serde_json::to_string(&PointJson::from(&p)).unwrap();
        let back: PointJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(EnhancedPoint::try_from(back).unwrap(), p);
    }
}

/// Scalars commute with everything, so `c·I` only rescales the vectors.
#[test]
fn scalar_conjugation_preserves_type_and_flag() {
    let f = common::field(5);
    for label in MultiPartition::enumerate(3, 3) {
        let p = standard_element(&label, f);
        let g = springer_levels::field::Matrix::identity(f, 3).scale(2);
        let h = p.conjugate(&g).unwrap();
        assert_eq!(classify_type(&h).unwrap().0, label);
        assert_eq!(flag_dims(&h).unwrap(), flag_dims(&p).unwrap());
    }
}

#[test]
fn prefix_span_variant_at_first_level() {
    // U_1 = k[x]v_1 is also the first prefix span, so the two readings agree at i = 1
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 0..=4 {
        for r in 2..=3 {
            for label in MultiPartition::enumerate(n, r) {
                let f = common::field(3);
                let coeffs = SemiStandardCoeffs::sample(&label, f, &mut rng);
                let p = semi_standard_element(&label, f, &coeffs).unwrap();
                let prefix = kx_span(p.x(), &p.vs()[..1]).unwrap();
                let got = jordan_type(&quotient_action(p.x(), &prefix).unwrap()).unwrap();
                assert_eq!(got, quotient_type_after_ui(&label, 1).unwrap(), "{label}");
            }
        }
    }
}

#[test]
fn standard_points_lie_in_their_unipotent_variety() {
    for n in 0..=4 {
        for r in 1..=3 {
            for m in LevelComposition::enumerate(n, r, false) {
                for label in m.labels() {
                    let p = standard_element(&label, common::field(2));
                    assert!(in_unipotent_variety(&p, &m).unwrap(), "{label} in m={:?}", m.entries());
                }
                let open = standard_element(&m.lambda(), common::field(2));
                assert!(in_stratum_open(&open, &m).unwrap(), "open stratum of m={:?}", m.entries());
            }
        }
    }
}

#[test]
fn exhaustive_types_are_well_formed() {
    for q in [2u64, 3] {
        let f = common::field(q);
        for n in 0..=2 {
            let vectors = common::all_vectors(f, n);
            for x in common::unipotent_matrices(f, n) {
                let nu = jordan_type(&x).unwrap();
                for v in &vectors {
                    let p = EnhancedPoint::new(x.clone(), vec![v.clone()]).unwrap();
                    let (ty, _) = classify_type(&p).unwrap();
                    assert_eq!(ty.total(), nu);
                    assert_eq!(ty.level(), 2);
                }
            }
        }
    }
}

#[test]
fn max_module_dim_matches_search_on_random_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let f = common::field(2);
    for n in 1..=3 {
        for r in 2..=3 {
            for label in MultiPartition::enumerate(n, r) {
                let coeffs = SemiStandardCoeffs::sample(&label, f, &mut rng);
                let p = semi_standard_element(&label, f, &coeffs).unwrap();
                for a in 0..r {
                    for k in 0..=label.total().len() {
                        let formula = springer_levels::orbits::max_module_dim_formula(&label, k, a).unwrap();
                        assert_eq!(common::max_module_dim_search(&p, k, a), formula, "{label} k={k} a={a}");
                    }
                }
            }
        }
    }
}
