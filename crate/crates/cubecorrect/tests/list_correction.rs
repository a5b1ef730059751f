//! End-to-end behaviour of the advice algorithm, Psi and the local list
//! corrector at small scale.

use num_rational::Ratio;

use cubecorrect::groups::GroupSpec;
use cubecorrect::lab::collision_experiment;
use cubecorrect::listdecode::{build_advice, find_computing_oracle, local_list_correct, psi_evaluate, AdviceTriple, ListConfig};
use cubecorrect::oracle::{CorruptedOracle, CorruptionSpec};
use cubecorrect::poly::{CubePoint, MultilinearPoly, RandomModel};
use cubecorrect::seeding::rng_from_seed;
use cubecorrect::subcube::{random_permutation, SubcubeEmbedding};

fn z2() -> GroupSpec {
    GroupSpec::cyclic(2).unwrap()
}

#[test]
fn advice_contains_restriction_of_far_planted_polynomial() {
    let spec = z2();
    let mut rng = rng_from_seed(1);
    let p = MultilinearPoly::random(16, 1, &spec, RandomModel::UniformDense, &mut rng).unwrap();
    let f = CorruptedOracle::new(p.clone(), CorruptionSpec::iid(Ratio::new(3, 10), &spec), 2).unwrap();
    let cfg = ListConfig::new(1, Ratio::new(1, 5), 6, 60, 3);
    let advice = build_advice(&f, &cfg).unwrap();
    assert_eq!(advice.queries, 60 * 64);
    let mut hits = 0;
    let mut start = 0;
    for &size in &advice.list_sizes {
        let group = &advice.triples[start..start + size];
        hits += group.iter().any(|t| t.q == p.restrict_to_subcube(&t.cube).unwrap()) as usize;
        start += size;
    }
    assert!(hits as f64 / 60.0 >= 0.9, "{hits}/60 iterations list P|_C");
}

#[test]
fn psi_is_close_to_planted_polynomial() {
    let spec = z2();
    let mut rng = rng_from_seed(4);
    let p = MultilinearPoly::random(16, 1, &spec, RandomModel::UniformDense, &mut rng).unwrap();
    let f = CorruptedOracle::new(p.clone(), CorruptionSpec::iid(Ratio::new(3, 10), &spec), 5).unwrap();
    let cube = SubcubeEmbedding::sample_uniform(CubePoint::random(16, &mut rng), 4, &mut rng).unwrap();
    let triple = AdviceTriple { q: p.restrict_to_subcube(&cube).unwrap(), cube, sigma: random_permutation(8, &mut rng) };
    let cfg = ListConfig::new(1, Ratio::new(1, 5), 4, 1, 6);
    let trials = 400;
    let wrong = (0..trials)
        .filter(|_| {
            let b = CubePoint::random(16, &mut rng);
            psi_evaluate(&f, &triple, &b, &cfg).unwrap().value != p.evaluate(&b).unwrap()
        })
        .count();
    assert!((wrong as f64 / trials as f64) <= 1.0 / 40.0, "Psi wrong on {wrong}/{trials}");
}

#[test]
fn psi_is_deterministic() {
    let spec = GroupSpec::cyclic(3).unwrap();
    let mut rng = rng_from_seed(7);
    let p = MultilinearPoly::random(12, 1, &spec, RandomModel::UniformDense, &mut rng).unwrap();
    let f = CorruptedOracle::new(p.clone(), CorruptionSpec::iid(Ratio::new(1, 5), &spec), 8).unwrap();
    let cube = SubcubeEmbedding::sample_uniform(CubePoint::random(12, &mut rng), 3, &mut rng).unwrap();
    let triple = AdviceTriple { q: p.restrict_to_subcube(&cube).unwrap(), cube, sigma: random_permutation(6, &mut rng) };
    let cfg = ListConfig::new(1, Ratio::new(1, 5), 3, 1, 0);
    let b = CubePoint::random(12, &mut rng);
    let first = psi_evaluate(&f, &triple, &b, &cfg).unwrap();
    for _ in 0..3 {
        assert_eq!(psi_evaluate(&f, &triple, &b, &cfg).unwrap(), first);
    }
}

#[test]
fn clean_oracle_is_reproduced_by_some_output() {
    let spec = z2();
    let mut rng = rng_from_seed(9);
    let p = MultilinearPoly::random(12, 1, &spec, RandomModel::UniformDense, &mut rng).unwrap();
    let f = CorruptedOracle::new(p.clone(), CorruptionSpec::none(&spec), 0).unwrap();
    let cfg = ListConfig::new(1, Ratio::new(1, 5), 3, 2, 10);
    let result = local_list_correct(&f, &cfg).unwrap();
    assert!(result.oracles.len() <= cfg.ell * cfg.list_cap);
    let inputs: Vec<CubePoint> = (0..30).map(|_| CubePoint::random(12, &mut rng)).collect();
    assert!(find_computing_oracle(&result, &p, &inputs, Ratio::new(1, 1)).unwrap().is_some());
}

#[test]
fn planted_mode_over_the_integers() {
    let spec = GroupSpec::Integers;
    let mut rng = rng_from_seed(11);
    let p = MultilinearPoly::random(12, 1, &spec, RandomModel::UniformDense, &mut rng).unwrap();
    let decoy = MultilinearPoly::random(12, 1, &spec, RandomModel::UniformDense, &mut rng).unwrap();
    let f = CorruptedOracle::new(p.clone(), CorruptionSpec::iid(Ratio::new(1, 5), &spec), 12).unwrap();
    let mut cfg = ListConfig::new(1, Ratio::new(1, 5), 4, 3, 13);
    cfg.planted = Some(vec![p.clone(), decoy]);
    let result = local_list_correct(&f, &cfg).unwrap();
    let inputs: Vec<CubePoint> = (0..40).map(|_| CubePoint::random(12, &mut rng)).collect();
    assert!(find_computing_oracle(&result, &p, &inputs, Ratio::new(9, 10)).unwrap().is_some());
    cfg.planted = None;
    assert!(build_advice(&f, &cfg).is_err());
}

#[test]
fn collision_rate_falls_with_cube_dimension() {
    let report = collision_experiment(16, 1, &[2, 3, 4], Ratio::new(1, 5), 300, 1).unwrap();
    assert!(report.pass, "{:?}", report.rows);
}
