//! Checks against values computed independently of the library code paths:
//! closed forms, polynomial root scans, brute-force maximization.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tensile_domain::{
    asymptote, boundary, critical_activation, critical_activation_numeric, free_actuation,
    max_activation_for_prestretch, natural_width, optimal_prestretch, plane_stress,
    prestretched_actuation, reduced_energy, vertices, Error, MaterialModel, StretchState,
    RESIDUAL_TOLERANCE,
};

/// Real root of `u³ − 3u − 4 = 0` (Cardano), with `u = λ²` the squared
/// critical stretch of MR(1,1).
fn mr11_critical_oracle() -> (f64, f64) {
    let s3 = 3f64.sqrt();
    let u = (2.0 + s3).cbrt() + (2.0 - s3).cbrt();
    let lambda = u.sqrt();
    let k = 1.0 / u - 1.0 / u.powi(4) + 1.0 - 1.0 / u.powi(3);
    (lambda, k)
}

/// Positive roots of `2k λ⁸ − μ λ⁶ + μ` by dense sign scan.
fn equibiaxial_polynomial_roots(mu: f64, k: f64, points: usize) -> Vec<f64> {
    let p = |l: f64| 2.0 * k * l.powi(8) - mu * l.powi(6) + mu;
    let (lo, hi) = (0.5f64, 5.0f64);
    let mut roots = Vec::new();
    let mut prev = (lo, p(lo));
    for i in 1..points {
        let l = lo + (hi - lo) * i as f64 / (points - 1) as f64;
        let v = p(l);
        if v.signum() != prev.1.signum() {
            let (mut a, mut b) = (prev.0, l);
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                if p(m).signum() == p(a).signum() {
                    a = m;
                } else {
                    b = m;
                }
            }
            roots.push(0.5 * (a + b));
        }
        prev = (l, v);
    }
    roots
}

#[test]
fn mooney_rivlin_11_critical_point() {
    let (lambda, k) = mr11_critical_oracle();
    assert!((lambda - 1.481_8).abs() < 1e-4);
    assert!((k - 1.318_0).abs() < 1e-4);
    let cp = critical_activation(&MaterialModel::mooney_rivlin(1.0, 1.0).unwrap()).unwrap();
    assert!((cp.k_v_crit - k).abs() < 1e-9 * k, "{} vs {k}", cp.k_v_crit);
    assert!((cp.lambda_crit - lambda).abs() < 1e-6 * lambda);
}

#[test]
fn neo_hookean_vertices_match_polynomial() {
    for &mu in &[0.5, 1.0, 2.0] {
        for &frac in &[0.1, 0.5, 0.9, 0.99] {
            let kc = 3.0 * mu / 2f64.powf(11.0 / 3.0);
            let k = frac * kc;
            let ours = vertices(&MaterialModel::neo_hookean(mu).unwrap(), k).unwrap();
            let oracle = equibiaxial_polynomial_roots(mu, k, 10_000);
            assert_eq!(ours.len(), oracle.len(), "mu={mu} k={k}");
            for (a, b) in ours.iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-10, "{a} vs {b}");
            }
        }
    }
}

#[test]
fn brute_force_critical_for_random_mooney_rivlin() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let c1 = rng.gen_range(0.1..3.0);
        let c2 = rng.gen_range(0.0..3.0);
        let m = MaterialModel::mooney_rivlin(c1, c2).unwrap();
        // Dense linear scan of the diagonal zero-stress activation.
        let f = |l: f64| c1 * (l.powi(-2) - l.powi(-8)) + c2 * (1.0 - l.powi(-6));
        let (mut best_l, mut best_k) = (1.0, f(1.0));
        for i in 0..200_000 {
            let l = 1.0 + 20.0 * i as f64 / 200_000.0;
            if f(l) > best_k {
                best_k = f(l);
                best_l = l;
            }
        }
        let centre = best_l;
        for i in 0..=100_000 {
            let l = centre - 1e-4 + 2e-4 * i as f64 / 100_000.0;
            if f(l) > best_k {
                best_k = f(l);
                best_l = l;
            }
        }
        let cp = critical_activation(&m).unwrap();
        assert!(
            (cp.k_v_crit - best_k).abs() < 1e-12 * best_k,
            "c1={c1} c2={c2} {} {best_l} {} {best_k}",
            cp.lambda_crit,
            cp.k_v_crit
        );
        assert!(
            (cp.lambda_crit - best_l).abs() < 1e-6,
            "c1={c1} c2={c2} {} {best_l} {} {best_k}",
            cp.lambda_crit,
            cp.k_v_crit
        );
        // Both vertices exist just below, none just above.
        assert_eq!(vertices(&m, cp.k_v_crit * (1.0 - 1e-4)).unwrap().len(), 2);
        assert!(vertices(&m, cp.k_v_crit * (1.0 + 1e-4)).unwrap().is_empty());
    }
}

#[test]
fn energy_gradient_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let d = 1e-6;
    for _ in 0..1000 {
        let m = MaterialModel::mooney_rivlin(rng.gen_range(0.0..2.0), rng.gen_range(0.01..2.0))
            .unwrap();
        let mu = m.shear_modulus().unwrap();
        let (l1, l2, k) = (
            rng.gen_range(0.3..3.0),
            rng.gen_range(0.3..3.0),
            rng.gen_range(0.0..1.0),
        );
        let w = |a: f64, b: f64| reduced_energy(&m, &StretchState::new(a, b).unwrap(), k).unwrap();
        let g1 = l1 * (w(l1 + d, l2) - w(l1 - d, l2)) / (2.0 * d);
        let g2 = l2 * (w(l1, l2 + d) - w(l1, l2 - d)) / (2.0 * d);
        let p = plane_stress(&m, &StretchState::new(l1, l2).unwrap(), k).unwrap();
        assert!((p.t1 - g1).abs() <= 1e-5 * (p.t1.abs() + mu));
        assert!((p.t2 - g2).abs() <= 1e-5 * (p.t2.abs() + mu));
    }
}

/// Neo-Hookean core with a quadratic first-invariant stiffening term.
fn stiffening(c1: f64, alpha: f64) -> MaterialModel {
    MaterialModel::generic(
        move |l1, l2| {
            let i1 = l1 * l1 + l2 * l2 + 1.0 / (l1 * l1 * l2 * l2);
            2.0 * c1 * (1.0 + alpha * (i1 - 3.0))
        },
        |_, _| 0.0,
        Some(2.0 * c1),
    )
    .unwrap()
}

#[test]
fn generic_model_boundary_residuals() {
    let m = stiffening(0.5, 0.05);
    for &k in &[0.0, 0.1, 0.2] {
        let b = boundary(&m, k, (0.8, 4.0), 60).unwrap();
        assert!(!b.samples.is_empty());
        for s in &b.samples {
            let p = plane_stress(&m, &StretchState::new(s.lambda1, s.lambda2).unwrap(), k).unwrap();
            let tol = RESIDUAL_TOLERANCE * (1.0 + s.lambda1.powi(2)) * (1.0 + s.lambda2.powi(2));
            assert!(p.t2.abs() <= tol, "{s:?}");
        }
    }
}

#[test]
fn generic_model_critical_point_by_brute_force() {
    let m = stiffening(0.5, 0.05);
    let keq = |l: f64| {
        let p = plane_stress(&m, &StretchState::equibiaxial(l).unwrap(), 0.0).unwrap();
        p.t1 / (2.0 * l.powi(4))
    };
    let mut best = (1.0, keq(1.0));
    for i in 0..100_000 {
        let l = 1.0 + 4.0 * i as f64 / 100_000.0;
        let v = keq(l);
        if v > best.1 {
            best = (l, v);
        }
    }
    let cp = critical_activation_numeric(&m).unwrap();
    assert!((cp.k_v_crit - best.1).abs() < 1e-9);
    assert!((cp.lambda_crit - best.0).abs() < 1e-3);
    // Stiffening postpones pull-in relative to the plain Neo-Hookean solid.
    assert!(cp.k_v_crit > 3.0 / 2f64.powf(11.0 / 3.0));
    let roots = vertices(&m, 0.9 * cp.k_v_crit).unwrap();
    assert_eq!(roots.len(), 2);
    for r in roots {
        let p = plane_stress(
            &m,
            &StretchState::equibiaxial(r).unwrap(),
            0.9 * cp.k_v_crit,
        )
        .unwrap();
        assert!(p.t1.abs() < 1e-9 * r.powi(4));
    }
}

#[test]
fn generic_model_without_modulus_is_not_available() {
    let m = MaterialModel::generic(|_, _| 1.0, |_, _| -0.5, None).unwrap();
    assert!(matches!(m.shear_modulus(), Err(Error::NotAvailable(_))));
    let s = StretchState::equibiaxial(1.2).unwrap();
    assert!(matches!(
        reduced_energy(&m, &s, 0.0),
        Err(Error::NotAvailable(_))
    ));
}

#[test]
fn asymptote_onset_is_sharp() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let c1 = rng.gen_range(0.1..3.0);
        let c2 = rng.gen_range(0.0..2.0);
        let k = c2 + rng.gen_range(0.01..3.0);
        let m = MaterialModel::mooney_rivlin(c1, c2).unwrap();
        let a = asymptote(&m, k).unwrap().unwrap();
        assert!((a - (c1 / (k - c2)).sqrt()).abs() < 1e-15 * a);
        assert_eq!(natural_width(&m, a, k).unwrap(), None);
        assert_eq!(natural_width(&m, a * 1.5, k).unwrap(), None);
        let w = natural_width(&m, a * (1.0 - 1e-12), k).unwrap();
        assert!(w.is_some_and(f64::is_finite), "{c1} {c2} {k}");
    }
}

#[test]
fn branch_ordering_around_critical_stretch() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let m =
            MaterialModel::mooney_rivlin(rng.gen_range(0.2..2.0), rng.gen_range(0.0..2.0)).unwrap();
        let cp = critical_activation(&m).unwrap();
        let k = cp.k_v_crit * rng.gen_range(0.3..0.999);
        let states = free_actuation(&m, k).unwrap().states;
        if states.len() == 2 {
            assert!(states[0].lambda < cp.lambda_crit && cp.lambda_crit < states[1].lambda);
        }
    }
}

#[test]
fn feasibility_is_a_down_set() {
    let m = MaterialModel::neo_hookean(1.0).unwrap();
    for &p in &[1.05, 1.26, 1.8, 3.0] {
        let kmax = max_activation_for_prestretch(&m, p).unwrap();
        let mut seen_infeasible = false;
        for i in 0..=400 {
            let k = 0.3 * i as f64 / 400.0;
            let f = prestretched_actuation(&m, p, k).unwrap().feasible;
            if seen_infeasible {
                assert!(!f, "feasible again at k={k} for prestretch {p}");
            }
            seen_infeasible |= !f;
            assert_eq!(f, k <= kmax, "p={p} k={k} kmax={kmax}");
        }
    }
}

#[test]
fn optimal_prestretch_matches_critical_for_mooney_rivlin() {
    let m = MaterialModel::mooney_rivlin(1.0, 1.0).unwrap();
    let cp = critical_activation(&m).unwrap();
    let opt = optimal_prestretch(&m).unwrap();
    assert!((opt.k_v - cp.k_v_crit).abs() < 1e-6 * cp.k_v_crit);
    assert!((opt.prestretch - cp.lambda_crit).abs() < 1e-4 * cp.lambda_crit);
}
