use frechet_core::generators::*;
use frechet_core::*;

const LONG_EDGED_GOLDEN: &str = include_str!("data/long_edged_n6_seed42.csv");
const PERTURBED_GOLDEN: &str = include_str!("data/perturbed_d10_seed7.csv");

#[test]
fn long_edged_golden() {
    let p = random_long_edged_curve(6, 100.0, &mut rng_from_seed(42)).unwrap();
    assert_eq!(write_curve(&p), LONG_EDGED_GOLDEN);
}

#[test]
fn perturbed_golden() {
    let p = parse_curve(LONG_EDGED_GOLDEN).unwrap();
    let q = perturbed_curve(&p, 10, &mut rng_from_seed(7)).unwrap();
    assert_eq!(write_curve(&q), PERTURBED_GOLDEN);
}

#[test]
fn unit_circle_stream_golden() {
    let mut rng = rng_from_seed(42);
    let first = random_point_on_unit_circle(&mut rng);
    let p = parse_curve(LONG_EDGED_GOLDEN).unwrap();
    assert_eq!(first.as_slice(), p.point(0));
}

#[test]
fn perturbed_copy_is_within_d_sqrt2() {
    for seed in 0..50 {
        let cfg = GenConfig {
            n: 40,
            edge_length: 100.0,
            perturb: 10,
            seed,
        };
        let (p, q) = long_edged_instance(&cfg).unwrap();
        let f = classical_rolling(&CurvePair::new(&p, &q).unwrap()).unwrap();
        assert!(f <= 10.0 * 2f64.sqrt() + 1e-9, "seed {seed}: {f}");
        // every edge is longer than the distance
        for k in 1..p.len() {
            let e = euclidean_distance(
                &Point::new(p.point(k - 1).to_vec()).unwrap(),
                &Point::new(p.point(k).to_vec()).unwrap(),
            )
            .unwrap();
            assert!(e > f);
        }
    }
}

#[test]
fn long_edged_euclidean_matrix_is_diagonally_dominant() {
    let (p, q) = long_edged_instance(&GenConfig {
        n: 12,
        edge_length: 100.0,
        perturb: 10,
        seed: 4,
    })
    .unwrap();
    let e = euclidean_matrix(&p, &q).unwrap();
    for i in 0..p.len() {
        let direct = euclidean_distance(
            &Point::new(p.point(i).to_vec()).unwrap(),
            &Point::new(q.point(i).to_vec()).unwrap(),
        )
        .unwrap();
        assert_eq!(e.get(i, i), direct);
        for j in 0..q.len() {
            if i.abs_diff(j) == 1 {
                assert!(e.get(i, j) > e.get(i, i).max(e.get(j, j)), "({i},{j})");
            }
        }
    }
}

#[test]
fn long_edged_probe_is_at_most_two() {
    for seed in 0..20 {
        let (p, q) = long_edged_instance(&GenConfig {
            n: 100,
            edge_length: 100.0,
            perturb: 10,
            seed,
        })
        .unwrap();
        let pair = CurvePair::new(&p, &q).unwrap();
        assert!(probe_min_unbreached_width(&pair).unwrap() <= 2);
        assert_eq!(
            adaptive_compute(&pair).value,
            classical_rolling(&pair).unwrap()
        );
    }
}

#[test]
fn identical_curves_have_zero_euclidean_diagonal() {
    let p = random_long_edged_curve(8, 3.0, &mut rng_from_seed(1)).unwrap();
    let e = euclidean_matrix(&p, &p).unwrap();
    for i in 0..8 {
        assert_eq!(e.get(i, i), 0.0);
    }
}
