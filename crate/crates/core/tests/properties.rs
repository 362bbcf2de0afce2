use cosymplectic::properties::{
    extension_trials, kernel_round_trips, lift_trials, run_all, symplectization_checks,
    volume_trials, PropertyReport,
};
use cosymplectic::sampling::Sampling;

fn assert_clean(r: &PropertyReport) {
    assert!(r.ok(), "{}: {:?}", r.name, &r.counterexamples[..r.counterexamples.len().min(5)]);
    // both outcomes must actually occur, or the equivalence was never tested
    assert!(r.positives > 0, "{}: no positive trials", r.name);
}

#[test]
fn extension_conditions_match_jacobi() {
    let r = extension_trials(Sampling::default()).unwrap();
    assert_clean(&r);
    assert!(r.trials >= 200 * 8);
    assert!(r.positives < r.trials, "no negative trials");
}

#[test]
fn lift_conditions_match_direct_check() {
    let r = lift_trials(Sampling::default()).unwrap();
    assert_clean(&r);
    assert!(r.trials >= 200);
    assert!(r.positives < r.trials);
}

#[test]
fn symplectization_matches_on_catalog_and_broken_inputs() {
    let r = symplectization_checks().unwrap();
    assert_clean(&r);
    assert!(r.positives < r.trials);
}

#[test]
fn kernel_round_trip_on_dim3() {
    let r = kernel_round_trips().unwrap();
    assert_clean(&r);
    // four families and five normal forms, several samples each
    assert!(r.trials >= 9);
}

#[test]
fn volume_matches_det_phi() {
    let r = volume_trials(Sampling::default()).unwrap();
    assert_clean(&r);
    assert!(r.positives < r.trials);
}

#[test]
fn fixed_sampling_is_also_clean() {
    for r in run_all(Sampling::Fixed).unwrap() {
        assert!(r.ok(), "{}: {:?}", r.name, r.counterexamples.first());
    }
}
