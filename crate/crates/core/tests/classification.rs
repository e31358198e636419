use biharm::forms::{classify, Classification, ClassifyInput};
use biharm::groups::{CMatrix, GroupSpec};
use biharm::verify::{check_classification, sample_classify_input, tol, Campaign};
use biharm::{Complex64, Error};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn real(v: &[f64]) -> Vec<Complex64> {
    v.iter().map(|&x| c(x, 0.0)).collect()
}

fn specs() -> [GroupSpec; 4] {
    [
        GroupSpec::unitary(2).unwrap(),
        GroupSpec::unitary(4).unwrap(),
        GroupSpec::special_orthogonal(5).unwrap(),
        GroupSpec::quaternionic(2).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn prediction_agrees_with_operators(which in 0usize..4, target in 0usize..3, seed in 0u64..10_000) {
        let spec = specs()[which];
        let target = [Classification::HarmonicCaseI, Classification::HarmonicCaseII, Classification::ProperBiharmonic][target];
        let input = sample_classify_input(&spec, seed, target);
        let outcome = check_classification(&input, &Campaign::new(&spec, seed, 8)).unwrap();
        prop_assert_eq!(outcome.predicted, target);
        prop_assert!(outcome.agrees, "{:?}", outcome);
    }
}

#[test]
fn unitary_example_cases() {
    let spec = GroupSpec::unitary(3).unwrap();
    let campaign = Campaign::new(&spec, 21, 16);

    // P = Q scaled columnwise: case (i).
    let q = real(&[1.0, -1.0, 2.0]);
    let case1 = ClassifyInput {
        m_p: CMatrix::from_fn(3, 3, |i, j| q[i] * c(j as f64 + 1.0, 0.5)),
        q: q.clone(),
        a: real(&[1.0, 0.0, 1.0]),
    };
    let out = check_classification(&case1, &campaign).unwrap();
    assert_eq!(out.predicted, Classification::HarmonicCaseI);
    assert!(out.tension < 1e-10);

    // z11/z21: case (ii).
    let mut m = CMatrix::zeros(3, 3);
    m[(0, 0)] = c(1.0, 0.0);
    let case2 = ClassifyInput { m_p: m, q: real(&[0.0, 1.0, 0.0]), a: real(&[1.0, 0.0, 0.0]) };
    let out = check_classification(&case2, &campaign).unwrap();
    assert_eq!(out.predicted, Classification::HarmonicCaseII);
    assert!(out.tension < 1e-10);

    // z12/z21: proper.
    let mut m = CMatrix::zeros(3, 3);
    m[(0, 1)] = c(1.0, 0.0);
    let proper = ClassifyInput { m_p: m, ..case2 };
    let out = check_classification(&proper, &campaign).unwrap();
    assert_eq!(out.predicted, Classification::ProperBiharmonic);
    assert!(out.tension_magnitude >= tol::PROPER_FLOOR);
    assert!(out.bitension <= tol::BIHARMONIC);
}

#[test]
fn quaternionic_rank_one_has_no_proper_quotients() {
    // On Sp(1) κ(L, L') = −½LL' for all linear forms, so every P/Q is harmonic
    // even when `classify` reports a proper shape.
    let spec = GroupSpec::quaternionic(1).unwrap();
    let campaign = Campaign::new(&spec, 5, 16);
    for seed in 0..10 {
        let input = sample_classify_input(&spec, seed, Classification::ProperBiharmonic);
        let f = input.quotient(&spec).unwrap();
        assert!(campaign.tension_residual(&f).unwrap() < 1e-10, "seed {seed}");
    }
}

#[test]
fn orthogonal_hypotheses_are_necessary() {
    // Case (i) shape with (q,q) ≠ 0: the quotient is not harmonic, so
    // `classify` must refuse instead of predicting harmonicity.
    let spec = GroupSpec::special_orthogonal(4).unwrap();
    let q = real(&[1.0, 0.5, 0.0, -1.0]);
    let cv = real(&[1.0, 2.0, 0.0, -1.0]);
    let input = ClassifyInput {
        m_p: CMatrix::from_fn(4, 4, |i, j| q[i] * cv[j]),
        q: q.clone(),
        a: real(&[0.0, 1.0, 1.0, 0.5]),
    };
    assert!(matches!(classify(&input, &spec), Err(Error::HypothesisViolation(_))));
    let f = input.quotient(&spec).unwrap();
    let campaign = Campaign::new(&spec, 13, 16);
    assert!(campaign.tension_magnitude(&f).unwrap() > 1e-3);

    // Same shape with (q,q) = 0 and qᵀM_P = 0 satisfied: harmonic.
    let q = vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)];
    let input = ClassifyInput {
        m_p: CMatrix::from_fn(4, 4, |i, j| q[i] * cv[j]),
        q,
        a: real(&[0.0, 1.0, 1.0, 0.5]),
    };
    let out = check_classification(&input, &campaign).unwrap();
    assert_eq!(out.predicted, Classification::HarmonicCaseI);
    assert!(out.agrees);
}

#[test]
fn orthogonal_rejects_isotropic_a() {
    let spec = GroupSpec::special_orthogonal(4).unwrap();
    let iso = vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)];
    let input = ClassifyInput { m_p: CMatrix::from_fn(4, 4, |i, j| iso[i] * iso[j]), q: iso.clone(), a: iso };
    assert!(matches!(classify(&input, &spec), Err(Error::HypothesisViolation(_))));
}
