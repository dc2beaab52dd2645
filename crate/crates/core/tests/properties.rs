use std::f64::consts::TAU;

use proptest::prelude::*;
use trigspline::alias::{aliased_residual, band_component, folded_coeffs, residual_component};
use trigspline::kernel::filter_response;
use trigspline::sampling::alias_class;
use trigspline::{
    build_spline, discrete_coeffs, make_grid, sample, AnalyticSignal, Harmonic, KernelConfig,
    PeriodicFunction, SampleVector, SigmaVariant,
};

/// Textbook DFT with the angle computed directly, no reduction or tables.
fn naive_dft(values: &[f64], k: usize) -> (f64, f64) {
    let len = values.len() as f64;
    let (mut a, mut b) = (0.0, 0.0);
    for (j, v) in values.iter().enumerate() {
        let t = TAU * j as f64 / len;
        a += v * (k as f64 * t).cos();
        b += v * (k as f64 * t).sin();
    }
    (2.0 * a / len, 2.0 * b / len)
}

/// Up to five harmonics with distinct indices.
fn harmonics(max_k: u32) -> impl Strategy<Value = Vec<Harmonic>> {
    prop::collection::btree_map(0..=max_k, (-2.0f64..2.0, -2.0f64..2.0), 1..6).prop_map(|m| {
        m.into_iter()
            .map(|(k, (a, b))| Harmonic::new(k, a, if k == 0 { 0.0 } else { b }))
            .collect()
    })
}

fn variant() -> impl Strategy<Value = SigmaVariant> {
    prop::sample::select(SigmaVariant::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dft_matches_naive_sum(n in 1usize..20, values in prop::collection::vec(-5.0f64..5.0, 41)) {
        let grid = make_grid(n).unwrap();
        let samples = SampleVector::new(grid, values[..grid.len()].to_vec()).unwrap();
        let spectrum = discrete_coeffs(&samples);
        for k in 0..=n {
            let (a, b) = naive_dft(samples.values(), k);
            let (da, db) = spectrum.coeff(k);
            prop_assert!((a - da).abs() < 1e-12 && (b - db).abs() < 1e-12);
        }
    }

    #[test]
    fn dft_is_linear(
        n in 1usize..12,
        x in prop::collection::vec(-3.0f64..3.0, 25),
        y in prop::collection::vec(-3.0f64..3.0, 25),
        c in -4.0f64..4.0,
    ) {
        let grid = make_grid(n).unwrap();
        let len = grid.len();
        let sx = discrete_coeffs(&SampleVector::new(grid, x[..len].to_vec()).unwrap());
        let sy = discrete_coeffs(&SampleVector::new(grid, y[..len].to_vec()).unwrap());
        let combo: Vec<f64> = (0..len).map(|i| x[i] + c * y[i]).collect();
        let sc = discrete_coeffs(&SampleVector::new(grid, combo).unwrap());
        for k in 0..=n {
            let (ax, bx) = sx.coeff(k);
            let (ay, by) = sy.coeff(k);
            let (ac, bc) = sc.coeff(k);
            prop_assert!((ac - ax - c * ay).abs() < 1e-12);
            prop_assert!((bc - bx - c * by).abs() < 1e-12);
        }
    }

    #[test]
    fn discrete_parseval(n in 1usize..16, values in prop::collection::vec(-5.0f64..5.0, 33)) {
        let grid = make_grid(n).unwrap();
        let v = values[..grid.len()].to_vec();
        let energy = 2.0 / grid.len() as f64 * v.iter().map(|x| x * x).sum::<f64>();
        let s = discrete_coeffs(&SampleVector::new(grid, v).unwrap());
        let mut spectral = 0.5 * s.a0() * s.a0();
        for k in 1..=n {
            let (a, b) = s.coeff(k);
            spectral += a * a + b * b;
        }
        prop_assert!((energy - spectral).abs() < 1e-10 * energy.max(1.0));
    }

    #[test]
    fn band_limited_round_trip(n in 1usize..10, terms in harmonics(9)) {
        let terms: Vec<Harmonic> = terms.into_iter().filter(|h| h.k as usize <= n).collect();
        prop_assume!(!terms.is_empty());
        let f = AnalyticSignal::harmonic_sum(terms, 3).unwrap();
        let s = discrete_coeffs(&sample(&f, make_grid(n).unwrap()).unwrap());
        for k in 0..=n {
            let (a, b) = f.true_coeff(k as u64);
            let (da, db) = s.coeff(k);
            prop_assert!((a - da).abs() < 1e-12 && (b - db).abs() < 1e-12);
        }
    }

    #[test]
    fn extension_follows_alias_classes(n in 1usize..10, values in prop::collection::vec(-2.0f64..2.0, 21), j in 1u64..400) {
        let grid = make_grid(n).unwrap();
        let s = discrete_coeffs(&SampleVector::new(grid, values[..grid.len()].to_vec()).unwrap());
        let class = alias_class(j, grid.len());
        let (ea, eb) = s.extended_coeff(j);
        let (a, b) = s.coeff(class.k);
        prop_assert_eq!(ea, a);
        if class.k == 0 {
            prop_assert_eq!(eb, 0.0);
        } else {
            prop_assert_eq!(eb, f64::from(class.sin_sign) * b);
        }
        // the sampled harmonic j is indistinguishable from its class representative
        let from_j = |t: f64| (j as f64 * t).cos() + (j as f64 * t).sin();
        let sj = discrete_coeffs(&sample(&from_j, grid).unwrap());
        let (ca, cb) = sj.coeff(class.k);
        if class.k == 0 {
            prop_assert!((ca - 2.0).abs() < 1e-9);
        } else {
            prop_assert!((ca - 1.0).abs() < 1e-9);
            prop_assert!((cb - f64::from(class.sin_sign)).abs() < 1e-9);
        }
    }

    #[test]
    fn fold_identity_for_harmonic_sums(n in 1usize..6, terms in harmonics(60)) {
        let f = AnalyticSignal::harmonic_sum(terms, 2).unwrap();
        let grid = make_grid(n).unwrap();
        let s = discrete_coeffs(&sample(&f, grid).unwrap());
        for k in 0..=n {
            let fold = folded_coeffs(&f, &grid, k, 1e-12).unwrap();
            let (a, b) = s.coeff(k);
            prop_assert!((fold.folded_value_a - a).abs() < 1e-11);
            prop_assert!((fold.folded_value_b - b).abs() < 1e-11);
        }
    }

    #[test]
    fn band_plus_residual_at_nodes(n in 1usize..6, terms in harmonics(40)) {
        let f = AnalyticSignal::harmonic_sum(terms, 2).unwrap();
        let grid = make_grid(n).unwrap();
        let dc_family: f64 = f.terms().iter()
            .filter(|h| h.k != 0 && (h.k as usize).is_multiple_of(grid.len()))
            .map(|h| h.a)
            .sum();
        for i in 0..grid.len() {
            let t = grid.node(i);
            let lhs = f.value(t);
            let rhs = band_component(&f, n, t).unwrap() + residual_component(&f, &grid, t, 1e-12).unwrap() + dc_family;
            prop_assert!((lhs - rhs).abs() < 1e-10);
        }
    }

    #[test]
    fn interpolant_is_band_plus_aliased_residual(n in 1usize..6, terms in harmonics(40), t in 0.0f64..TAU) {
        let f = AnalyticSignal::harmonic_sum(terms, 2).unwrap();
        let grid = make_grid(n).unwrap();
        let poly = discrete_coeffs(&sample(&f, grid).unwrap());
        let rhs = band_component(&f, n, t).unwrap() + aliased_residual(&f, &grid, t, 1e-12).unwrap();
        prop_assert!((poly.value(t) - rhs).abs() < 1e-10);
    }

    #[test]
    fn partition_of_unity(n in 1usize..20, r in 1u32..12, v in variant(), m in 0u64..50) {
        let cfg = KernelConfig::new(r, make_grid(n).unwrap(), v).unwrap();
        let table = filter_response(&cfg, n).unwrap();
        for k in 1..=n {
            let s = table.class_partition_sum(k, m).unwrap();
            prop_assert!((s - 1.0).abs() < 1e-9, "k={} sum={}", k, s);
        }
    }

    #[test]
    fn spline_interpolates_and_is_linear(
        n in 1usize..8,
        r in 1u32..6,
        v in variant(),
        x in prop::collection::vec(-2.0f64..2.0, 17),
        y in prop::collection::vec(-2.0f64..2.0, 17),
        t in 0.0f64..TAU,
    ) {
        let grid = make_grid(n).unwrap();
        let len = grid.len();
        let cfg = KernelConfig::new(r, grid, v).unwrap();
        let sx = SampleVector::new(grid, x[..len].to_vec()).unwrap();
        let sy = SampleVector::new(grid, y[..len].to_vec()).unwrap();
        let sum: Vec<f64> = (0..len).map(|i| x[i] + y[i]).collect();
        let px = build_spline(&sx, &cfg).unwrap();
        let py = build_spline(&sy, &cfg).unwrap();
        let ps = build_spline(&SampleVector::new(grid, sum).unwrap(), &cfg).unwrap();
        for i in 0..len {
            prop_assert!((px.eval(grid.node(i)) - x[i]).abs() < 1e-9);
        }
        prop_assert!((ps.eval(t) - px.eval(t) - py.eval(t)).abs() < 1e-9);
    }
}
