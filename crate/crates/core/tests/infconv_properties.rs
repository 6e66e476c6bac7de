mod common;

use common::{lipschitz, minplus_1d};
use infconv::catalog::sample;
use infconv::grid::{make_grid, GridFunction, GridSpec};
use infconv::harness::random_finite_spec;
use infconv::infconv::{
    infconv_convex_fast_1d, infconv_direct, infconv_fold, infconv_on, infconv_pair, infconv_separable,
    symmetric_surrogate, ConvexSequence,
};
use infconv::FunctionSpec;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn grid_fn(grid: GridSpec, values: Vec<f64>) -> GridFunction {
    GridFunction::new(grid, values).unwrap()
}

fn values_1d(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(prop_oneof![9 => -5.0..5.0f64, 1 => Just(f64::INFINITY)], n)
        .prop_filter("needs a finite sample", |v| v.iter().any(|x| x.is_finite()))
}

fn odd_n() -> impl Strategy<Value = usize> {
    (1usize..16).prop_map(|k| 2 * k + 1)
}

fn scale_of(fs: &[&GridFunction]) -> f64 {
    fs.iter().map(|f| f.scale()).fold(1.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pair_matches_sequential_scan((n, a, b) in odd_n().prop_flat_map(|n| (Just(n), values_1d(n), values_1d(n)))) {
        let g = make_grid(1, 1.0, n).unwrap();
        let h = infconv_pair(&grid_fn(g, a.clone()), &grid_fn(g, b.clone())).unwrap();
        let expect = minplus_1d(&a, &b);
        prop_assert_eq!(h.samples(), expect.as_slice());
    }

    #[test]
    fn commutative((n, a, b) in odd_n().prop_flat_map(|n| (Just(n), values_1d(n), values_1d(n)))) {
        let g = make_grid(1, 1.0, n).unwrap();
        let (f, k) = (grid_fn(g, a), grid_fn(g, b));
        let ab = infconv_pair(&f, &k).unwrap();
        let ba = infconv_pair(&k, &f).unwrap();
        prop_assert!(ab.max_abs_diff(&ba) <= 1e-12 * scale_of(&[&f, &k]));
    }

    #[test]
    fn associative_on_uncropped_intermediates(
        (n, a, b, c) in odd_n().prop_flat_map(|n| (Just(n), values_1d(n), values_1d(n), values_1d(n)))
    ) {
        let g = make_grid(1, 1.0, n).unwrap();
        let wide = g.widened(2).unwrap();
        let (f, k, l) = (grid_fn(g, a), grid_fn(g, b), grid_fn(g, c));
        let left = infconv_on(&infconv_on(&f, &k, &wide).unwrap(), &l, &g).unwrap();
        let right = infconv_on(&f, &infconv_on(&k, &l, &wide).unwrap(), &g).unwrap();
        let scale = scale_of(&[&f, &k, &l]);
        prop_assert!(left.max_abs_diff(&right) <= 1e-12 * scale);
        prop_assert!(left.max_abs_diff(&infconv_fold(&[f, k, l]).unwrap()) <= 1e-12 * scale);
    }

    #[test]
    fn fold_equals_direct_2d(a in values_1d(25), b in values_1d(25), c in values_1d(25)) {
        let g = make_grid(2, 1.0, 5).unwrap();
        let fs = [grid_fn(g, a), grid_fn(g, b), grid_fn(g, c)];
        let fold = infconv_fold(&fs).unwrap();
        let direct = infconv_direct(&fs).unwrap();
        prop_assert!(fold.max_abs_diff(&direct) <= 1e-12 * scale_of(&[&fs[0], &fs[1], &fs[2]]));
    }

    #[test]
    fn monotone_in_inputs(
        (n, a, b, da, db) in odd_n().prop_flat_map(|n| (
            Just(n), values_1d(n), values_1d(n),
            prop::collection::vec(0.0..3.0f64, n), prop::collection::vec(0.0..3.0f64, n),
        ))
    ) {
        let g = make_grid(1, 1.0, n).unwrap();
        let up = |v: &[f64], d: &[f64]| v.iter().zip(d).map(|(x, y)| x + y).collect::<Vec<_>>();
        let low = infconv_pair(&grid_fn(g, a.clone()), &grid_fn(g, b.clone())).unwrap();
        let high = infconv_pair(&grid_fn(g, up(&a, &da)), &grid_fn(g, up(&b, &db))).unwrap();
        for (l, h) in low.samples().iter().zip(high.samples()) {
            prop_assert!(l <= h);
        }
    }
}

#[test]
fn fold_equals_direct_when_partial_sums_leave_the_box() {
    // f and g vanish only at +L, h only at -L; the optimal split of x = L has y1 + y2 = 2L
    let g = make_grid(1, 1.0, 5).unwrap();
    let big = 100.0;
    let at = |i: usize| grid_fn(g, (0..5).map(|k| if k == i { 0.0 } else { big }).collect());
    let fs = [at(4), at(4), at(0)];
    let fold = infconv_fold(&fs).unwrap();
    let direct = infconv_direct(&fs).unwrap();
    assert_eq!(fold.samples()[4], 0.0);
    assert_eq!(fold, direct);
}

#[test]
fn fold_equals_direct_randomized_three_way() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let g = make_grid(1, 2.0, 33).unwrap();
        let fs: Vec<GridFunction> = (0..3)
            .map(|_| sample(&random_finite_spec(&mut rng, 2.0, 1), &g).unwrap())
            .collect();
        let fold = infconv_fold(&fs).unwrap();
        let direct = infconv_direct(&fs).unwrap();
        let scale = fs.iter().map(|f| f.scale()).fold(1.0, f64::max);
        assert!(fold.max_abs_diff(&direct) <= 1e-12 * scale);
    }
}

#[test]
fn direct_m3_quadratics_match_fold() {
    let g = make_grid(1, 4.0, 9).unwrap();
    let q = sample(&FunctionSpec::Quadratic { c: 1.0 }, &g).unwrap();
    let fs = [q.clone(), q.clone(), q];
    let fold = infconv_fold(&fs).unwrap();
    assert!(fold.max_abs_diff(&infconv_direct(&fs).unwrap()) <= 1e-12);
}

#[test]
fn fold_with_identities_returns_input() {
    for d in 1..=2 {
        let g = make_grid(d, 2.0, 7).unwrap();
        let id = sample(&FunctionSpec::IndicatorOrigin, &g).unwrap();
        let f = sample(&FunctionSpec::Tent { radius: 1.5 }, &g).unwrap();
        assert_eq!(infconv_fold(&[f.clone(), id.clone(), id]).unwrap(), f);
    }
}

#[test]
fn domination_by_symmetric_split() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for d in 1..=2 {
        let n = if d == 1 { 101 } else { 17 };
        let half_width = 3.0;
        let g = make_grid(d, half_width, n).unwrap();
        for _ in 0..10 {
            for m in 2..=3usize {
                let specs: Vec<FunctionSpec> =
                    (0..m).map(|_| random_finite_spec(&mut rng, half_width, d)).collect();
                let fs: Vec<GridFunction> = specs.iter().map(|s| sample(s, &g).unwrap()).collect();
                let h = infconv_fold(&fs).unwrap();
                let c_lip: f64 = specs.iter().map(|s| lipschitz(s, half_width, d)).sum::<f64>()
                    * (d as f64).sqrt();
                let mut x = [0.0; 3];
                for i in 0..g.len() {
                    g.coordinates(i, &mut x);
                    let y: Vec<f64> = x[..d].iter().map(|v| v / m as f64).collect();
                    let split: f64 = specs.iter().map(|s| s.eval(&y)).sum();
                    assert!(
                        h.samples()[i] <= split + c_lip * g.spacing() + 1e-12,
                        "{specs:?} at {:?}",
                        &x[..d]
                    );
                }
            }
        }
    }
}

#[test]
fn surrogate_bounds_true_convolution() {
    let half_width = 4.0;
    let g = make_grid(1, half_width, 201).unwrap();
    for spec in [
        FunctionSpec::Gaussian,
        FunctionSpec::Tent { radius: 2.0 },
        FunctionSpec::Quadratic { c: 0.5 },
        FunctionSpec::TruncatedQuadratic { c: 1.0, radius: 4.0 },
    ] {
        for m in 2..=3usize {
            let f = sample(&spec, &g).unwrap();
            let h = infconv_fold(&vec![f; m]).unwrap();
            let s = symmetric_surrogate(&spec, m, &g).unwrap();
            let slack = m as f64 * lipschitz(&spec, half_width, 1) * g.spacing();
            for (hv, sv) in h.samples().iter().zip(s.samples()) {
                assert!(*hv <= sv + slack + 1e-12, "{spec} m={m}");
                if spec.is_convex() {
                    assert!((hv - sv).abs() <= m as f64 * g.spacing().powi(2) * 1.0 + 1e-12, "{spec} m={m}");
                }
            }
        }
    }
}

#[test]
fn quadratic_pair_matches_analytic_and_surrogate() {
    let g = make_grid(1, 6.0, 5).unwrap();
    let q = sample(&FunctionSpec::Quadratic { c: 1.0 }, &g).unwrap();
    let h = infconv_pair(&q, &q).unwrap();
    let s = symmetric_surrogate(&FunctionSpec::Quadratic { c: 1.0 }, 2, &g).unwrap();
    // node x = 3: the split 1.5 + 1.5 is not on the h = 3 grid, so h(3) = 0 + 9
    assert_eq!(s.samples()[3], 4.5);
    assert_eq!(h.samples()[3], 9.0);
    assert_eq!(h.samples()[4], 18.0);
}

fn random_convex(rng: &mut ChaCha8Rng, grid: GridSpec) -> ConvexSequence {
    use rand::Rng;
    let n = grid.points_per_axis();
    let mut inc: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-5.0..5.0)).collect();
    inc.sort_by(f64::total_cmp);
    let mut v = vec![rng.gen_range(-3.0..3.0)];
    for d in inc {
        let last = *v.last().unwrap();
        v.push(last + d);
    }
    ConvexSequence::new(grid, v).unwrap()
}

#[test]
fn convex_fast_path_matches_brute_force() {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    for _ in 0..1000 {
        let n = 2 * rng.gen_range(1..=128) + 1;
        let g = make_grid(1, rng.gen_range(0.5..5.0), n).unwrap();
        let a = random_convex(&mut rng, g);
        let b = random_convex(&mut rng, g);
        let fast = infconv_convex_fast_1d(&a, &b).unwrap().to_grid_function();
        let brute = infconv_pair(&a.to_grid_function(), &b.to_grid_function()).unwrap();
        let scale = a.to_grid_function().scale().max(b.to_grid_function().scale());
        assert!(fast.max_abs_diff(&brute) <= 1e-12 * scale);
    }
}

#[test]
fn separable_engine_matches_brute_force() {
    for d in 2..=3 {
        let n = if d == 2 { 17 } else { 7 };
        let g = make_grid(d, 2.0, n).unwrap();
        let specs = [
            FunctionSpec::Quadratic { c: 0.5 },
            FunctionSpec::Quadratic { c: 2.0 },
            FunctionSpec::IndicatorOrigin,
        ];
        let fast = infconv_separable(&specs, &g).unwrap();
        let fs: Vec<GridFunction> = specs.iter().map(|s| sample(s, &g).unwrap()).collect();
        let brute = infconv_fold(&fs).unwrap();
        assert!(fast.max_abs_diff(&brute) <= 1e-10 * brute.scale(), "d={d}");
    }
}

#[test]
fn catalog_sampling_invariants() {
    let specs = [
        "gaussian",
        "gaussian:c=0.3",
        "quadratic:c=2",
        "tent:R=1.5",
        "indicator-origin",
        "trunc-quadratic:c=1,R=2",
    ];
    for d in 1..=3 {
        let g = make_grid(d, 2.5, 9).unwrap();
        for s in specs {
            let spec: FunctionSpec = s.parse().unwrap();
            let a = sample(&spec, &g).unwrap();
            let b = sample(&spec, &g).unwrap();
            assert_eq!(
                a.samples().iter().map(|v| v.to_bits()).collect::<Vec<_>>(),
                b.samples().iter().map(|v| v.to_bits()).collect::<Vec<_>>()
            );
            for i in 0..g.len() {
                assert!(a.samples()[i] >= 0.0);
                assert_eq!(a.samples()[i], a.samples()[g.mirror(i)], "{s} d={d}");
            }
        }
    }
}
