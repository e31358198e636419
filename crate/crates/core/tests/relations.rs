use biharm::construct::mu_rational;
use biharm::forms::{
    make_quadruple, quotient, Block, Expr, Layout, LinearForm, QuadrupleFamily, QuadrupleOptions, SpChoice,
};
use biharm::groups::{sample_point, CMatrix, GroupPoint, GroupSpec};
use biharm::operators::OperatorContext;
use biharm::verify::{isotropic_vector, verify_quadruple, Campaign};
use biharm::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn real(v: &[f64]) -> Vec<Complex64> {
    v.iter().map(|&x| c(x, 0.0)).collect()
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / 1.0_f64.max(a.norm()).max(b.norm())
}

fn random_form(spec: &GroupSpec, seed: u64, label: &str) -> LinearForm {
    use rand_distr::{Distribution, StandardNormal};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = CMatrix::from_fn(spec.n, spec.coordinate_cols(), |_, _| {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        c(re, im)
    });
    LinearForm::from_coordinate_matrix(spec, label, &m).unwrap()
}

fn specs() -> Vec<GroupSpec> {
    vec![
        GroupSpec::unitary(3).unwrap(),
        GroupSpec::special_orthogonal(4).unwrap(),
        GroupSpec::quaternionic(2).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_rule(which in 0usize..3, s in 0u64..1000) {
        let spec = specs()[which];
        let ctx = OperatorContext::new(&spec);
        let p = sample_point(&spec, s);
        let f = quotient(&random_form(&spec, s + 1, "A"), &random_form(&spec, s + 2, "B")).unwrap();
        let h = &random_form(&spec, s + 3, "C").expr() * &random_form(&spec, s + 4, "D").expr();
        let lhs = ctx.tension(&(&f * &h), &p).unwrap();
        let rhs = ctx.tension(&f, &p).unwrap() * h.eval_at(&p).unwrap()
            + ctx.conformality(&f, &h, &p).unwrap() * 2.0
            + f.eval_at(&p).unwrap() * ctx.tension(&h, &p).unwrap();
        prop_assert!(rel(lhs, rhs) <= 1e-9);
    }

    #[test]
    fn kappa_expansion(which in 0usize..3, s in 0u64..1000) {
        let spec = specs()[which];
        let ctx = OperatorContext::new(&spec);
        let p = sample_point(&spec, s);
        let e: Vec<Expr> = (0..4).map(|i| random_form(&spec, s * 7 + i, "L").expr()).collect();
        let (f, ft, h, ht) = (&e[0], &e[1], &e[2], &e[3]);
        let k = |a: &Expr, b: &Expr| ctx.conformality(a, b, &p).unwrap();
        let v = |a: &Expr| a.eval_at(&p).unwrap();
        let lhs = k(&(f * ft), &(h * ht));
        let rhs = v(ft) * v(ht) * k(f, h) + v(ft) * v(h) * k(f, ht) + v(f) * v(ht) * k(ft, h) + v(f) * v(h) * k(ft, ht);
        prop_assert!(rel(lhs, rhs) <= 1e-9);
    }

    #[test]
    fn quotient_formulas(which in 0usize..3, s in 0u64..1000) {
        let spec = specs()[which];
        let ctx = OperatorContext::new(&spec);
        let x = sample_point(&spec, s);
        let (pf, qf) = (random_form(&spec, s + 10, "P"), random_form(&spec, s + 11, "Q"));
        let (pe, qe) = (pf.expr(), qf.expr());
        let f = quotient(&pf, &qf).unwrap();
        let (p, q) = (pe.eval_at(&x).unwrap(), qe.eval_at(&x).unwrap());
        let k = |a: &Expr, b: &Expr| ctx.conformality(a, b, &x).unwrap();
        let t = |a: &Expr| ctx.tension(a, &x).unwrap();
        let kff = (k(&pe, &pe) * q * q - 2.0 * p * q * k(&pe, &qe) + p * p * k(&qe, &qe)) / q.powi(4);
        prop_assert!(rel(k(&f, &f), kff) <= 1e-9);
        let tf = t(&pe) / q - 2.0 * k(&pe, &qe) / (q * q) - p * t(&qe) / (q * q) + 2.0 * p * k(&qe, &qe) / q.powi(3);
        prop_assert!(rel(t(&f), tf) <= 1e-9);
    }

    #[test]
    fn conformality_is_symmetric(which in 0usize..3, s in 0u64..1000) {
        let spec = specs()[which];
        let ctx = OperatorContext::new(&spec);
        let p = sample_point(&spec, s);
        let a = quotient(&random_form(&spec, s, "A"), &random_form(&spec, s + 1, "B")).unwrap();
        let b = random_form(&spec, s + 2, "C").expr().powi(3);
        prop_assert_eq!(ctx.conformality(&a, &b, &p).unwrap(), ctx.conformality(&b, &a, &p).unwrap());
    }
}

fn family(spec: &GroupSpec, p: &[Complex64], q: &[Complex64], a: &[Complex64], b: &[Complex64], opts: QuadrupleOptions) -> QuadrupleFamily {
    make_quadruple(spec, p, q, a, b, &opts).unwrap()
}

#[test]
fn unitary_quadruple_example() {
    let spec = GroupSpec::unitary(3).unwrap();
    let ones = real(&[1.0, 1.0, 1.0]);
    let fam = family(&spec, &real(&[1.0, 0.0, 0.0]), &real(&[0.0, 1.0, 0.0]), &ones, &ones, QuadrupleOptions::default());
    let report = verify_quadruple(&fam, &Campaign::new(&spec, 1, 20), 1e-9).unwrap();
    assert!(report.verdict, "{}", report.to_json());
    assert_eq!(fam.mu, -1.0);
}

#[test]
fn orthogonal_quadruple_examples() {
    let spec = GroupSpec::special_orthogonal(4).unwrap();
    let iso = vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)];
    let generic_p = vec![c(0.3, 1.0), c(-1.2, 0.0), c(0.7, 0.4), c(2.0, -0.5)];
    let generic_q = vec![c(1.1, 0.0), c(0.4, -0.3), c(-0.5, 0.2), c(0.9, 1.0)];
    let full = family(&spec, &generic_p, &generic_q, &iso, &iso, QuadrupleOptions::default());
    assert_eq!(full.data.layout, Layout::Full);
    let campaign = Campaign::new(&spec, 2, 20);
    assert!(verify_quadruple(&full, &campaign, 1e-9).unwrap().verdict);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (p, uv) = isotropic_vector(&mut rng, 4, &[]);
    let (q, _) = isotropic_vector(&mut rng, 4, &uv);
    let column = family(&spec, &p, &q, &generic_p, &generic_q, QuadrupleOptions::default());
    assert_eq!(column.data.layout, Layout::Column);
    let report = verify_quadruple(&column, &campaign, 1e-9).unwrap();
    assert!(report.verdict, "{}", report.to_json());
}

#[test]
fn orthogonal_rejects_non_isotropic_vectors() {
    let spec = GroupSpec::special_orthogonal(4).unwrap();
    let generic = real(&[0.3, -1.2, 0.7, 2.0]);
    let err = make_quadruple(&spec, &real(&[1.0, 0.0, 0.0, 0.0]), &generic, &generic, &generic, &QuadrupleOptions::default());
    assert!(matches!(err, Err(biharm::Error::IsotropyViolation(_))), "{err:?}");
}

#[test]
fn quaternionic_choices() {
    let spec = GroupSpec::quaternionic(2).unwrap();
    let v = |s: f64| vec![c(1.0, s), c(-0.5 * s, 2.0)];
    let campaign = Campaign::new(&spec, 4, 20);
    for choice in [SpChoice::Nine, SpChoice::Ten, SpChoice::Eleven] {
        let opts = QuadrupleOptions { choice: Some(choice), ..Default::default() };
        let fam = family(&spec, &v(0.3), &v(-0.7), &v(1.1), &v(0.2), opts);
        let report = verify_quadruple(&fam, &campaign, 1e-9).unwrap();
        assert!(report.verdict, "choice {}: {}", choice.tag(), report.to_json());
        assert_eq!(fam.mu, -0.5);
        // μ = −1/2 halves the unitary prefactor of the closed form.
        let x = &campaign.points[0];
        let num = fam.p_list[0].expr().eval_at(x).unwrap() * fam.q.expr().eval_at(x).unwrap()
            - fam.r.expr().eval_at(x).unwrap() * fam.s_list[0].expr().eval_at(x).unwrap();
        let q2 = fam.q.expr().eval_at(x).unwrap().powi(2);
        let closed = fam.tau_closed_form(0).eval_at(x).unwrap();
        assert!(rel(closed, -num / q2) < 1e-12);
    }
}

#[test]
fn unitary_harmonic_column() {
    let spec = GroupSpec::unitary(3).unwrap();
    let opts = QuadrupleOptions { beta: 0, columns: Some(vec![0, 1, 2]), ..Default::default() };
    let fam = family(&spec, &real(&[0.5, 1.0, -1.0]), &real(&[2.0, -1.0, 0.3]), &real(&[1.0, 2.0, 3.0]), &real(&[1.0, -1.0, 0.5]), opts);
    let ctx = OperatorContext::new(&spec);
    for s in 0..5 {
        let p = sample_point(&spec, s);
        assert!(fam.tau_closed_form(0).eval_at(&p).unwrap().norm() < 1e-12);
        assert!(ctx.tension(&fam.quotient(0), &p).unwrap().norm() < 1e-10);
        let t = ctx.tension(&fam.quotient(1), &p).unwrap();
        assert!(rel(t, fam.tau_closed_form(1).eval_at(&p).unwrap()) < 1e-9);
        assert!(t.norm() > 1e-6);
    }
}

/// Power and product identities for `f = P/Q` from a quadruple.
fn basic_identities(fam: &QuadrupleFamily, points: &[GroupPoint]) -> f64 {
    let ctx = OperatorContext::new(&fam.spec);
    let mu = fam.mu;
    let mut worst = 0.0_f64;
    let f = fam.quotient(0);
    let g = fam.quotient(fam.len() - 1);
    let tf = fam.tau_closed_form(0);
    let tg = fam.tau_closed_form(fam.len() - 1);
    for p in points {
        let v = |e: &Expr| e.eval_at(p).unwrap();
        let k = |a: &Expr, b: &Expr| ctx.conformality(a, b, p).unwrap();
        for (m, l) in [(1, 1), (2, 1), (2, 3)] {
            let (mf, lf) = (m as f64, l as f64);
            // (1) 2κ(f^m, g^l) = m l f^{m−1} g^{l−1} (f τg + τf g)
            let lhs = k(&f.powi(m), &g.powi(l)) * 2.0;
            let rhs = v(&f).powi(m - 1) * v(&g).powi(l - 1) * (v(&f) * v(&tg) + v(&tf) * v(&g)) * (mf * lf);
            worst = worst.max(rel(lhs, rhs));
            // (2) κ(f^m, τ(g)^l) = m l f^{m−1} τ(f) τ(g)^l
            let lhs = k(&f.powi(m), &tg.powi(l));
            let rhs = v(&f).powi(m - 1) * v(&tf) * v(&tg).powi(l) * (mf * lf);
            worst = worst.max(rel(lhs, rhs));
            // (3) κ(τ(f)^m, τ(g)^l) = 2μ m l τ(f)^m τ(g)^l
            let lhs = k(&tf.powi(m), &tg.powi(l));
            let rhs = v(&tf).powi(m) * v(&tg).powi(l) * (2.0 * mu * mf * lf);
            worst = worst.max(rel(lhs, rhs));
            // (4) τ(f^m) = m² f^{m−1} τ(f)
            let lhs = ctx.tension(&f.powi(m), p).unwrap();
            let rhs = v(&f).powi(m - 1) * v(&tf) * (mf * mf);
            worst = worst.max(rel(lhs, rhs));
            // (5) τ(τ(f)^l) = 2μ l(l−1) τ(f)^l
            let lhs = ctx.tension(&tf.powi(l), p).unwrap();
            let rhs = v(&tf).powi(l) * (2.0 * mu * lf * (lf - 1.0));
            worst = worst.max(rel(lhs, rhs));
        }
    }
    worst
}

#[test]
fn basic_identities_hold_for_both_constants() {
    let u = GroupSpec::unitary(3).unwrap();
    let fam_u = family(&u, &[c(1.0, 0.5), c(-0.3, 1.0), c(0.2, 0.0)], &real(&[0.4, 1.0, -2.0]), &real(&[1.0, 2.0, -1.0]), &[c(0.5, 0.5), c(1.0, 0.0), c(0.0, -1.0)], QuadrupleOptions::default());
    assert!(basic_identities(&fam_u, &Campaign::new(&u, 5, 10).points) < 1e-9);

    let sp = GroupSpec::quaternionic(2).unwrap();
    let opts = QuadrupleOptions { choice: Some(SpChoice::Ten), ..Default::default() };
    let fam_sp = family(&sp, &[c(1.0, 0.5), c(-0.3, 1.0)], &real(&[0.4, 1.0]), &real(&[1.0, 2.0]), &[c(0.5, 0.5), c(1.0, 0.0)], opts);
    assert!(basic_identities(&fam_sp, &Campaign::new(&sp, 6, 10).points) < 1e-9);

    let so = GroupSpec::special_orthogonal(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (p, uv) = isotropic_vector(&mut rng, 5, &[]);
    let (q, _) = isotropic_vector(&mut rng, 5, &uv);
    let fam_so = family(&so, &p, &q, &real(&[1.0, -1.0, 2.0, 0.5, 1.5]), &real(&[0.3, 1.0, 1.0, -2.0, 0.1]), QuadrupleOptions::default());
    assert!(basic_identities(&fam_so, &Campaign::new(&so, 7, 10).points) < 1e-9);
    assert_eq!(mu_rational(&so), biharm::algebra::rat(-1, 2));
}

#[test]
fn unitary_tension_identities() {
    // κ(f,f) = fτ(f), κ(f,τ(f)) = τ(f)², κ(τ(f),τ(f)) = −2τ(f)².
    let spec = GroupSpec::unitary(3).unwrap();
    let fam = family(&spec, &real(&[1.0, 2.0, 0.0]), &[c(0.0, 1.0), c(1.0, 0.0), c(1.0, 1.0)], &real(&[1.0, -1.0, 2.0]), &real(&[2.0, 1.0, 1.0]), QuadrupleOptions::default());
    let ctx = OperatorContext::new(&spec);
    let (f, tf) = (fam.quotient(1), fam.tau_closed_form(1));
    for p in Campaign::new(&spec, 9, 10).points {
        let (fv, tv) = (f.eval_at(&p).unwrap(), tf.eval_at(&p).unwrap());
        assert!(rel(ctx.conformality(&f, &f, &p).unwrap(), fv * tv) < 1e-9);
        assert!(rel(ctx.conformality(&f, &tf, &p).unwrap(), tv * tv) < 1e-9);
        assert!(rel(ctx.conformality(&tf, &tf, &p).unwrap(), -2.0 * tv * tv) < 1e-9);
    }
}

#[test]
fn inverse_square_of_denominator() {
    // τ(Q^{-2}) = 2(n − 3)Q^{-2} for a rank-one Q on U(n).
    for n in 2..=5 {
        let spec = GroupSpec::unitary(n).unwrap();
        let q = LinearForm::rank_one(&spec, "Q", Block::Z, &vec![c(1.0, 0.5); n], &(0..n).map(|i| c(i as f64 + 1.0, 0.0)).collect::<Vec<_>>()).unwrap();
        let inv2 = q.expr().powi(-2);
        let ctx = OperatorContext::new(&spec);
        for p in Campaign::new(&spec, 10, 10).points {
            let want = inv2.eval_at(&p).unwrap() * (2.0 * (n as f64 - 3.0));
            assert!(rel(ctx.tension(&inv2, &p).unwrap(), want) < 1e-9);
        }
    }
}

#[test]
fn bitension_vanishes_on_harmonic_functions() {
    let spec = GroupSpec::unitary(3).unwrap();
    let ctx = OperatorContext::new(&spec);
    let q1 = LinearForm::coordinate(&spec, Block::Z, 0, 0).unwrap();
    let q2 = LinearForm::coordinate(&spec, Block::Z, 0, 1).unwrap();
    let f = quotient(&q2, &q1).unwrap();
    for p in Campaign::new(&spec, 12, 5).points {
        let s = ctx.tension2_scaled(&f, &p).unwrap();
        assert!(s.relative() < 1e-8);
    }
}
