use std::f64::consts::TAU;

use proptest::prelude::*;
use zalcman_core::asymptotics::{
    bieberbach_iterate, conjecture_scan, ratio_convergence, zalcman_equivalence_audit, AuditGrids, ClosedForm,
    Predicate,
};
use zalcman_core::classes::{coefficient_a, ClassTag, Phases};
use zalcman_core::functional::{
    caratheodory_checks, critical_lambdas, lemma_equivalence, regime, sharp_bound, sum_form_check, zalcman,
};
use zalcman_core::herglotz::sample_measure;
use zalcman_core::rng::stream;
use zalcman_core::search::{maximize_functional, project_budget, project_simplex};
use zalcman_core::{
    Branch, ClassSpec, Complex64, EquivalenceInstance, FunctionalSpec, HerglotzMeasure, PowerSeries, SearchConfig,
    TruncatedSeries,
};

fn complex(r: f64) -> impl Strategy<Value = Complex64> {
    (-r..r, -r..r).prop_map(|(a, b)| Complex64::new(a, b))
}

fn power_series(order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(complex(1.0), order + 1).prop_map(|c| PowerSeries::new(c).unwrap())
}

fn unimodular() -> impl Strategy<Value = Complex64> {
    (0.0..TAU).prop_map(|t| Complex64::from_polar(1.0, t))
}

fn herglotz_class() -> impl Strategy<Value = ClassSpec> {
    prop_oneof![
        Just(ClassSpec::NoshiroWarschawski),
        Just(ClassSpec::HullConvex),
        (-1.0..0.9f64).prop_map(|alpha| ClassSpec::HullConvexOrderAlpha { alpha }),
        Just(ClassSpec::HullStarlike),
    ]
}

fn bounded_class() -> impl Strategy<Value = ClassSpec> {
    prop_oneof![Just(ClassSpec::Hurwitz), herglotz_class()]
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiply_is_commutative_and_associative(
        order in 0usize..64,
        seed in any::<u64>(),
    ) {
        let mut rng = stream(seed, 0);
        let draw = |rng: &mut _| {
            use rand::Rng;
            PowerSeries::from_fn(order, |_| Complex64::new(Rng::random_range(rng, -1.0..1.0), Rng::random_range(rng, -1.0..1.0)))
        };
        let (f, g, h) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let fg = f.multiply(&g, order).unwrap();
        let gf = g.multiply(&f, order).unwrap();
        let left = fg.multiply(&h, order).unwrap();
        let right = f.multiply(&g.multiply(&h, order).unwrap(), order).unwrap();
        for k in 0..=order {
            prop_assert!(close(fg.coeff(k), gf.coeff(k), 1e-14));
            // sums of up to 64² terms of size ≤ 2 accumulate more rounding
            prop_assert!((left.coeff(k) - right.coeff(k)).norm() <= 1e-14 * 64.0 * 64.0 * 4.0);
        }
    }

    #[test]
    fn product_rule(f in power_series(24), g in power_series(24)) {
        let lhs = f.multiply(&g, 24).unwrap().differentiate();
        let df = f.differentiate();
        let dg = g.differentiate();
        let a = df.multiply(&g, 23).unwrap();
        let b = f.multiply(&dg, 23).unwrap();
        for k in 0..=23 {
            prop_assert!((lhs.coeff(k) - a.coeff(k) - b.coeff(k)).norm() <= 1e-12);
        }
    }

    #[test]
    fn rotation_preserves_moduli(coeffs in prop::collection::vec(complex(2.0), 2..40), c in unimodular()) {
        let f = TruncatedSeries::normalized_from_fn(coeffs.len(), |k| coeffs[k - 1]);
        let g = f.rotate(c).unwrap();
        for k in 1..=f.order() {
            prop_assert!((f.coeff(k).norm() - g.coeff(k).norm()).abs() <= 1e-14 * (1.0 + f.coeff(k).norm()));
        }
    }

    #[test]
    fn truncated_geometric_matches_closed_form(r in 0.0..0.5f64, t in 0.0..TAU, order in 50usize..80) {
        let z = Complex64::from_polar(r, t);
        let f = TruncatedSeries::from_fn(order, |_| Complex64::new(1.0, 0.0));
        let closed = z / (Complex64::new(1.0, 0.0) - z);
        prop_assert!((f.evaluate(z).unwrap() - closed).norm() <= 1e-6);
    }

    #[test]
    fn zalcman_is_rotation_invariant(
        coeffs in prop::collection::vec(complex(1.0), 10),
        c in unimodular(),
        lam in complex(5.0),
        m in 2usize..6,
        n in 2usize..6,
    ) {
        let f = TruncatedSeries::normalized_from_fn(10, |k| coeffs[k - 1]);
        let spec = FunctionalSpec::new(lam, m, n).unwrap();
        let a = zalcman(&f, &spec).unwrap().norm();
        let b = zalcman(&f.rotate(c).unwrap(), &spec).unwrap().norm();
        prop_assert!((a - b).abs() <= 1e-14 * (1.0 + a));
    }

    #[test]
    fn caratheodory_coefficients_are_bounded_and_linear(seed in any::<u64>(), atoms in 1usize..20, t in 0.0..1.0f64) {
        let mut rng = stream(seed, 1);
        let mu = sample_measure(atoms, &mut rng).unwrap();
        let nu = sample_measure(atoms, &mut rng).unwrap();
        let p = mu.caratheodory_coefficients(64);
        let q = nu.caratheodory_coefficients(64);
        let mix = mu.mix(&nu, t).unwrap().caratheodory_coefficients(64);
        for k in 1..=64 {
            prop_assert!(p.coeff(k).norm() <= 2.0 + 1e-12);
            let expect = p.coeff(k) * (1.0 - t) + q.coeff(k) * t;
            prop_assert!((mix.coeff(k) - expect).norm() <= 1e-14 * 4.0);
        }
        prop_assert!(mu.verify_positive_real_part(&[0.5, 0.9, 0.99], 64).unwrap() > 0.0);
    }

    #[test]
    fn caratheodory_inequalities_on_polar_w_grid(seed in any::<u64>(), atoms in 1usize..12) {
        let mut rng = stream(seed, 2);
        let p = sample_measure(atoms, &mut rng).unwrap().caratheodory_coefficients(16);
        for n in 2..=16 {
            for k in 1..n {
                for rho in [0.0, 0.25, 0.5, 1.0, 2.0, 5.0] {
                    for j in 0..16 {
                        let w = Complex64::from_polar(rho, TAU * j as f64 / 16.0);
                        let (a, b) = caratheodory_checks(&p, n, k, w).unwrap();
                        prop_assert!(a >= -1e-9 && b >= -1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn measure_json_round_trip(seed in any::<u64>(), atoms in 1usize..10) {
        let mu = sample_measure(atoms, &mut stream(seed, 3)).unwrap();
        let text = serde_json::to_string(&mu).unwrap();
        let back: HerglotzMeasure = serde_json::from_str(&text).unwrap();
        for (a, b) in mu.atoms().iter().zip(back.atoms()) {
            prop_assert_eq!(a.theta, b.theta);
            prop_assert!((a.w - b.w).abs() <= 1e-15);
        }
    }

    #[test]
    fn samples_are_members_with_class_coefficient_bounds(class in bounded_class(), seed in any::<u64>()) {
        let f = class.sample(12, &mut stream(seed, 4)).unwrap();
        prop_assert!(class.membership_residual(&f).value() <= 1e-9);
        for k in 2..=12 {
            let bound = match class {
                ClassSpec::Hurwitz => 1.0 / k as f64,
                ClassSpec::NoshiroWarschawski => 2.0 / k as f64,
                ClassSpec::HullConvex => 1.0,
                ClassSpec::HullConvexOrderAlpha { alpha } => coefficient_a(k, alpha).unwrap(),
                _ => k as f64,
            };
            prop_assert!(f.coeff(k).norm() <= bound * (1.0 + 1e-12));
        }
        if class == ClassSpec::Hurwitz {
            prop_assert_eq!(ClassSpec::NoshiroWarschawski.membership_residual(&f).value(), 0.0);
        }
    }

    #[test]
    fn extremals_are_members(
        class in bounded_class(),
        m in 2usize..6,
        n in 2usize..6,
        resonant in any::<bool>(),
        alpha in unimodular(),
        beta in unimodular(),
    ) {
        let branch = if resonant { Branch::Resonant } else { Branch::Generic };
        let f = class.extremal(m, n, branch, Phases::new(alpha, beta).unwrap(), 2 * m.max(n)).unwrap();
        prop_assert!(class.membership_residual(&f).value() <= 1e-9);
    }

    #[test]
    fn sum_form_agrees_with_max_form(class in bounded_class(), seed in any::<u64>(), m in 2usize..5, n in 2usize..5) {
        // members of the class: both forms hold together
        let f = class.sample(8, &mut stream(seed, 5)).unwrap();
        let sum_ok = sum_form_check(&class, &f, m, n).unwrap() >= -1e-9;
        let mut lams = critical_lambdas(&class, m, n).unwrap();
        lams.extend((0..32).map(|k| Complex64::from_polar(0.3 * (k % 8) as f64 + 0.1, TAU * k as f64 / 32.0)));
        let max_ok = lams.iter().all(|&lam| {
            let spec = FunctionalSpec::new(lam, m, n).unwrap();
            zalcman(&f, &spec).unwrap().norm() <= sharp_bound(&class, &spec).unwrap() + 1e-9
        });
        prop_assert_eq!(sum_ok, max_ok);
        prop_assert!(sum_ok);
    }

    #[test]
    fn hurwitz_proof_chain(seed in any::<u64>(), m in 2usize..6, n in 2usize..6) {
        prop_assume!(m != n);
        let f = ClassSpec::Hurwitz.sample(10, &mut stream(seed, 6)).unwrap();
        let x = m as f64 * f.coeff(m).norm();
        let y = n as f64 * f.coeff(n).norm();
        prop_assert!(4.0 * x * y <= (x + y) * (x + y) + 1e-15);
        prop_assert!((x + y) * (x + y) <= x + y + 1e-15);
    }

    #[test]
    fn bounds_depend_on_the_documented_quantity(lam in complex(10.0), c in unimodular(), m in 2usize..6, n in 2usize..6) {
        let b1 = sharp_bound(&ClassSpec::Hurwitz, &FunctionalSpec::new(lam, m, n).unwrap()).unwrap();
        let b2 = sharp_bound(&ClassSpec::Hurwitz, &FunctionalSpec::new(lam * c, m, n).unwrap()).unwrap();
        prop_assert!((b1 - b2).abs() <= 1e-14 * b1.max(1.0));
        // same |1 − λ| through a rotation about 1
        let one = Complex64::new(1.0, 0.0);
        let mu = one - (one - lam) * c;
        let h1 = sharp_bound(&ClassSpec::HullConvex, &FunctionalSpec::new(lam, m, n).unwrap()).unwrap();
        let h2 = sharp_bound(&ClassSpec::HullConvex, &FunctionalSpec::new(mu, m, n).unwrap()).unwrap();
        prop_assert!((h1 - h2).abs() <= 1e-13 * h1.max(1.0));
    }

    #[test]
    fn extremal_attains_bound_for_random_lambda(class in bounded_class(), lam in complex(8.0), m in 2usize..6, n in 2usize..6) {
        let spec = FunctionalSpec::new(lam, m, n).unwrap();
        let bound = sharp_bound(&class, &spec).unwrap();
        for branch in regime(&class, &spec).unwrap().branches(1e-12) {
            let f = class.extremal(m, n, branch, Phases::default(), spec.default_order()).unwrap();
            let v = zalcman(&f, &spec).unwrap().norm();
            prop_assert!((v - bound).abs() <= 1e-12 * bound.max(1.0));
        }
    }

    #[test]
    fn lemma_sum_and_max_agree(a in complex(3.0), b in complex(3.0), c in 0.1..5.0f64, m in 0.1..5.0f64) {
        let out = lemma_equivalence(&EquivalenceInstance::new(a, b, c, m).unwrap());
        prop_assert_eq!(out.sum_holds, out.max_holds_on_grid);
    }

    #[test]
    fn koebe_ratio_is_exactly_one(m in 2usize..300, n in 2usize..300, lam in complex(4.0)) {
        let denom = (lam * (m * n) as f64 - (m + n - 1) as f64).norm();
        prop_assume!(denom > 1e-9);
        let r = ratio_convergence(&ClosedForm::Koebe, lam, &[(m, n)]).unwrap();
        prop_assert!((r[0] - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn audit_statements_agree(n in 2usize..12, seed in any::<u64>()) {
        let (a, b) = zalcman_core::cli::random_admissible_pair(n, &mut stream(seed, 7));
        let out = zalcman_equivalence_audit(a, b, n, &AuditGrids::default()).unwrap();
        prop_assert!(out.agree());
        let nf = n as f64;
        let koebe = zalcman_equivalence_audit(
            Complex64::new(nf, 0.0), Complex64::new(2.0 * nf - 1.0, 0.0), n, &AuditGrids::default()).unwrap();
        prop_assert!(koebe.a_equality);
    }

    #[test]
    fn b_zero_never_fails_and_b_slack_is_convex(tag_index in 0usize..6, seed in any::<u64>(), s in 0.0..1.0f64, t in 0.0..1.0f64) {
        let tag = ClassTag::ALL[tag_index];
        let class = ClassSpec::from_tag(tag, (tag == ClassTag::HullConvexOrderAlpha).then_some(0.3)).unwrap();
        let samples: Vec<_> = (0..4).map(|i| class.sample(15, &mut stream(seed, 8 + i)).unwrap()).collect();
        let ns: Vec<usize> = (2..=8).collect();
        let zero = conjecture_scan(&samples, Predicate::B(0.0), &ns).unwrap();
        prop_assert!(zero.witness.is_none());
        let bs = conjecture_scan(&samples, Predicate::B(s), &ns).unwrap();
        let bt = conjecture_scan(&samples, Predicate::B(t), &ns).unwrap();
        let mid = conjecture_scan(&samples, Predicate::B((s + t) / 2.0), &ns).unwrap();
        for ((x, y), z) in bs.rows.iter().zip(&bt.rows).zip(&mid.rows) {
            if x.slack >= 0.0 && y.slack >= 0.0 {
                prop_assert!(z.slack >= -1e-9);
            }
        }
    }

    #[test]
    fn square_root_iteration_decreases_to_one(c0 in 1.001..100.0f64, t in 0.01..1.0f64) {
        let it = bieberbach_iterate(c0, t, 30).unwrap();
        prop_assert!(it.sequence.windows(2).all(|w| w[1] < w[0] && w[1] > 1.0));
        prop_assert!(it.steps_valid);
    }

    #[test]
    fn projections_land_in_feasible_sets(mut w in prop::collection::vec(-3.0..3.0f64, 1..20), budget in 0.1..2.0f64) {
        let mut v = w.clone();
        project_simplex(&mut w, 1.0);
        prop_assert!(w.iter().all(|&x| x >= 0.0));
        prop_assert!((w.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        project_budget(&mut v, budget);
        prop_assert!(v.iter().all(|&x| x >= 0.0));
        prop_assert!(v.iter().sum::<f64>() <= budget + 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn search_never_exceeds_bound_and_is_reproducible(
        class in herglotz_class(),
        lam in complex(4.0),
        seed in any::<u64>(),
    ) {
        let spec = FunctionalSpec::new(lam, 2, 3).unwrap();
        let cfg = SearchConfig { restarts: 2, max_iterations: 200, seed, ..SearchConfig::default() };
        let a = maximize_functional(&class, &spec, &cfg).unwrap();
        let b = maximize_functional(&class, &spec, &cfg).unwrap();
        prop_assert!(a.best_value <= a.bound + 1e-9);
        prop_assert_eq!(a, b);
    }
}
