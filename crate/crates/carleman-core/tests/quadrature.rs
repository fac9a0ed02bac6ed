//! Quadrature validation of every integral identity: moments against the
//! exact coefficient tables, the reciprocal moments, the numeric route to
//! `d_n`, the residual identity, and the series decompositions.

use carleman_core::coeffs::{b_table, d_table};
use carleman_core::gquad::{rational_to_f64, GquadEngine, Precision};
use carleman_core::series;
use carleman_core::Rational;
use num_traits::Signed;

const E: f64 = std::f64::consts::E;

fn engine() -> GquadEngine {
    GquadEngine::new(Precision::default()).unwrap()
}

#[test]
fn kernel_pointwise_values() {
    let mut eng = engine();
    assert_eq!(eng.g_eval_f64(0.0).unwrap(), 0.0);
    assert_eq!(eng.g_eval_f64(1.0).unwrap(), 0.0);
    let half = eng.g_eval_f64(0.5).unwrap();
    assert!((half - 1.0 / (2.0 * std::f64::consts::PI)).abs() < 1e-15);
    // Mirror pair: the formula is symmetric about 1/2.
    assert_eq!(eng.g_eval_f64(0.25).unwrap(), eng.g_eval_f64(0.75).unwrap());
    assert!(eng.g_eval_f64(1.25).is_err());
    assert!(eng.g_eval_f64(-0.25).is_err());
}

#[test]
fn kernel_symmetry_at_working_precision() {
    // g(s) = g(1-s) must hold to working precision, not just to f64: build
    // s and 1-s as exact-precision reals and compare the kernel values far
    // below anything f64 can see.
    use astro_float::{BigFloat, RoundingMode};
    const P: usize = 256;
    const RM: RoundingMode = RoundingMode::ToEven;

    let mut eng = engine();
    let one = BigFloat::from_f64(1.0, P);
    let eps = BigFloat::from_f64(1e-45, P);
    let mut state = 0xDA3E39CB94B95BDBu64;
    for _ in 0..100 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let s = ((state >> 11) as f64 / (1u64 << 53) as f64).clamp(1e-12, 1.0 - 1e-12);
        let s_bf = BigFloat::from_f64(s, P);
        let oms = one.sub(&s_bf, P, RM);
        let g1 = eng.g_eval(&s_bf).unwrap();
        let g2 = eng.g_eval(&oms).unwrap();
        let diff = g1.sub(&g2, P, RM).abs();
        assert!(
            matches!(diff.cmp(&eps), Some(c) if c <= 0),
            "s = {s}: |g(s) - g(1-s)| = {diff}"
        );
    }
}

#[test]
fn kernel_symmetry_and_bounds() {
    let mut eng = engine();
    // Deterministic pseudo-random sweep; symmetry g(s) = g(1-s) and the
    // bound 0 <= g <= 1/pi hold at every point.
    let mut state = 0x2545F491_4F6CDD1Du64;
    let bound = 1.0 / std::f64::consts::PI;
    for _ in 0..1000 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let s = (state >> 11) as f64 / (1u64 << 53) as f64;
        let g1 = eng.g_eval_f64(s).unwrap();
        let g2 = eng.g_eval_f64(1.0 - s).unwrap();
        assert!((g1 - g2).abs() <= 1e-15, "s = {s}");
        assert!((0.0..=bound + 1e-15).contains(&g1), "s = {s}: {g1}");
    }
}

#[test]
fn reciprocal_integrand_extension() {
    let mut eng = engine();
    assert_eq!(eng.reciprocal_integrand_f64(0.0).unwrap(), 1.0);
    assert_eq!(eng.reciprocal_integrand_f64(1.0).unwrap(), 0.0);
    // Approaches 1 smoothly from the interior.
    let near = eng.reciprocal_integrand_f64(1e-9).unwrap();
    assert!((near - 1.0).abs() < 1e-7);
}

#[test]
fn first_moments_match_closed_forms() {
    let mut eng = engine();
    let m2 = eng.moment(2).unwrap();
    assert!(m2.converged);
    assert!((m2.value_f64() - E / 24.0).abs() <= 1e-10);

    let m3 = eng.moment(3).unwrap();
    assert!((m3.value_f64() - E / 48.0).abs() <= 1e-10);

    // moment(6) against e*b_6 from the exact table.
    let b = b_table(6).unwrap();
    let m6 = eng.moment(6).unwrap();
    assert!((m6.value_f64() - E * rational_to_f64(b.get(6).unwrap())).abs() <= 1e-10);

    assert!(eng.moment(1).is_err());
}

#[test]
fn moments_match_b_table_and_decrease() {
    let mut eng = engine();
    let b = b_table(20).unwrap();
    let mut last = f64::INFINITY;
    for k in 2..=20 {
        let m = eng.moment(k).unwrap();
        assert!(m.converged, "k = {k}");
        let v = m.value_f64();
        assert!(
            (v / E - rational_to_f64(b.get(k).unwrap())).abs() <= 1e-10,
            "k = {k}"
        );
        assert!(v < last, "k = {k}: moment not strictly decreasing");
        last = v;
    }
}

#[test]
fn mirrored_moments_agree() {
    let mut eng = engine();
    for k in [2usize, 5, 9] {
        let a = eng.moment(k).unwrap();
        let b = eng.mirrored_moment(k).unwrap();
        let tol = eng.precision().target_abs_tol;
        assert!(
            (a.value_f64() - b.value_f64()).abs() <= 2.0 * tol,
            "k = {k}"
        );
    }
}

#[test]
fn reciprocal_moments() {
    let mut eng = engine();
    let r = eng.reciprocal_moment().unwrap();
    assert!(r.converged);
    assert!((r.value_f64() - (E / 2.0 - 1.0)).abs() <= 1e-10);

    let mirrored = eng.mirrored_reciprocal_moment().unwrap();
    assert!((mirrored.value_f64() - r.value_f64()).abs() <= 2e-12);
}

#[test]
fn d_numeric_cross_checks() {
    let mut eng = engine();
    let d = d_table(12).unwrap();

    // d_2 = 0: absolute comparison.
    let n2 = eng.d_numeric(2).unwrap();
    assert!(n2.converged);
    assert!(n2.value_f64().abs() <= 1e-10);

    let n3 = eng.d_numeric(3).unwrap();
    assert!((n3.value_f64() - 5.0 / 288.0).abs() <= 1e-10);

    for n in 3..=12 {
        let numeric = eng.d_numeric(n).unwrap();
        assert!(numeric.converged, "n = {n}");
        let exact = rational_to_f64(d.get(n).unwrap());
        let rel = (numeric.value_f64() - exact).abs() / exact.abs();
        assert!(rel <= 1e-8, "n = {n}: relative error {rel:e}");
    }

    assert!(eng.d_numeric(1).is_err());
    assert!(eng.d_numeric(13).is_err());
}

#[test]
fn residual_identity() {
    let mut eng = engine();
    for x in [0.1, 1.0, 10.0] {
        let h = eng.h_identity_check(x).unwrap();
        assert!(h.quad.converged);
        assert!(h.abs_diff <= 1e-10, "x = {x}: {:e}", h.abs_diff);
    }
    // x = 1 closed form: lhs = 2(e - 2).
    let h1 = eng.h_identity_check(1.0).unwrap();
    assert!((h1.lhs - 2.0 * (E - 2.0)).abs() < 1e-14);
    assert!(eng.h_identity_check(0.0).is_err());
}

#[test]
fn residual_identity_asymptotics() {
    let mut eng = engine();
    let x = 1e6;
    let h = eng.h_identity_check(x).unwrap();
    // lhs -> e/2 with the integral term ~ (e/24)/x.
    assert!((h.lhs - E / 2.0).abs() < 2.0 * (E / 24.0) / x);
    let integral_term = h.rhs - E / 2.0;
    assert!((integral_term * x - E / 24.0).abs() < 1e-4);
}

#[test]
fn sigma_decomposition_spot_checks() {
    let mut eng = engine();
    for (m, x) in [(2usize, 1.0f64), (2, 100.0), (10, 0.5)] {
        let c = eng.sigma_decomposition_check(m, x).unwrap();
        assert!(c.converged, "m={m} x={x}");
        assert!(c.abs_diff <= 1e-9, "m={m} x={x}: {:e}", c.abs_diff);
    }
    // m = 2, x = 1: the exact side is e * sigma_2(1) = e * 25/96.
    let c = eng.sigma_decomposition_check(2, 1.0).unwrap();
    assert!((c.exact_side - E * 25.0 / 96.0).abs() < 1e-12);
    assert!(eng.sigma_decomposition_check(1, 1.0).is_err());
}

#[test]
fn s_decomposition_spot_checks() {
    let mut eng = engine();
    for (m, x) in [(2usize, 1.0f64), (3, 2.0), (8, 0.25)] {
        let c = eng.s_decomposition_check(m, x).unwrap();
        assert!(c.converged, "m={m} x={x}");
        assert!(c.abs_diff <= 1e-9, "m={m} x={x}: {:e}", c.abs_diff);
    }
    // m = 2, x = 1: the exact side is e/(2 * 23/12) since d_2 = 0.
    let c = eng.s_decomposition_check(2, 1.0).unwrap();
    assert!((c.exact_side - E * 6.0 / 23.0).abs() < 1e-12);
}

#[test]
fn difference_decomposition_matches_delta() {
    let mut eng = engine();
    let b = b_table(8).unwrap();
    let d = d_table(8).unwrap();
    for (m, x) in [(2usize, 1.0f64), (5, 0.5), (8, 3.0)] {
        let c = eng.difference_decomposition_check(m, x).unwrap();
        assert!(c.abs_diff <= 1e-9, "m={m} x={x}: {:e}", c.abs_diff);
        // The exact side is e * delta_m(x) and must be positive.
        let xr = Rational::from_float(x).unwrap();
        assert!(series::delta(&b, &d, m, &xr).unwrap().is_positive());
        assert!(c.exact_side > 0.0);
    }
}
