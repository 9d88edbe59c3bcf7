use std::collections::VecDeque;

use frechet_core::*;
use proptest::prelude::*;

// ---------------------------------------------------------------------------
// strategies

fn coord() -> impl Strategy<Value = f64> {
    prop_oneof![(-10i32..=10).prop_map(f64::from), -10.0f64..10.0,]
}

fn curve(dim: usize, max_len: usize) -> impl Strategy<Value = Curve> {
    prop::collection::vec(prop::collection::vec(coord(), dim), 1..=max_len).prop_map(move |pts| {
        Curve::new(pts.into_iter().map(|c| Point::new(c).unwrap()).collect()).unwrap()
    })
}

fn curve_pair(max_len: usize) -> impl Strategy<Value = (Curve, Curve)> {
    (1usize..=3).prop_flat_map(move |d| (curve(d, max_len), curve(d, max_len)))
}

/// Small integer costs so that ties and equal-to-threshold cases are common.
fn int_matrix(max: usize) -> impl Strategy<Value = CostMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(n, m)| {
        prop::collection::vec((0u8..12).prop_map(f64::from), n * m)
            .prop_map(move |data| CostMatrix::new(n, m, data).unwrap())
    })
}

fn threshold() -> impl Strategy<Value = f64> {
    prop_oneof![Just(f64::INFINITY), (0u8..14).prop_map(f64::from)]
}

fn cutoff() -> impl Strategy<Value = Cutoff> {
    prop_oneof![Just(Cutoff::Strict), Just(Cutoff::Inclusive)]
}

// ---------------------------------------------------------------------------
// oracles (independent of the library's sweeps)

fn passes(cost: f64, t: f64, cutoff: Cutoff) -> bool {
    match cutoff {
        Cutoff::Strict => cost < t,
        Cutoff::Inclusive => cost <= t,
    }
}

/// Minimum over in-band monotone paths of the largest effective cost.
fn band_brute(c: &CostMatrix, w: usize, t: f64, cutoff: Cutoff) -> f64 {
    #[allow(clippy::too_many_arguments)]
    fn go(
        c: &CostMatrix,
        w: usize,
        t: f64,
        k: Cutoff,
        i: usize,
        j: usize,
        width: f64,
        best: &mut f64,
    ) {
        let cost = c.get(i, j);
        let e = if passes(cost, t, k) {
            cost
        } else {
            f64::INFINITY
        };
        let width = width.max(e);
        if width == f64::INFINITY {
            return;
        }
        if i + 1 == c.rows() && j + 1 == c.cols() {
            *best = best.min(width);
            return;
        }
        for (a, b) in [(i + 1, j), (i, j + 1), (i + 1, j + 1)] {
            if a < c.rows() && b < c.cols() && a.abs_diff(b) < w {
                go(c, w, t, k, a, b, width, best);
            }
        }
    }
    let mut best = f64::INFINITY;
    go(c, w, t, cutoff, 0, 0, 0.0, &mut best);
    best
}

/// Breach by forward reachability over in-band passing cells.
fn breach_oracle(c: &CostMatrix, w: usize, t: f64, cutoff: Cutoff) -> bool {
    let (n, m) = (c.rows(), c.cols());
    let ok = |i: usize, j: usize| i.abs_diff(j) < w && passes(c.get(i, j), t, cutoff);
    if !ok(0, 0) {
        return false;
    }
    let mut seen = vec![false; n * m];
    let mut queue = VecDeque::from([(0, 0)]);
    seen[0] = true;
    while let Some((i, j)) = queue.pop_front() {
        for (a, b) in [(i + 1, j), (i, j + 1), (i + 1, j + 1)] {
            if a >= n || b >= m {
                continue;
            }
            if a.abs_diff(b) >= w {
                return true;
            }
            if ok(a, b) && !seen[a * m + b] {
                seen[a * m + b] = true;
                queue.push_back((a, b));
            }
        }
    }
    false
}

fn pass(c: &CostMatrix, w: usize, t: f64, cutoff: Cutoff) -> BandedOutcome {
    banded_pass(c, &BandParams::new(w, t).unwrap().with_cutoff(cutoff)).unwrap()
}

// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn engines_agree_with_brute_force((p, q) in curve_pair(8)) {
        let c = CurvePair::new(&p, &q).unwrap();
        let f = brute_force(&c).unwrap();
        prop_assert_eq!(classical_full(&c).unwrap().distance(), f);
        prop_assert_eq!(classical_rolling(&c).unwrap(), f);
        prop_assert_eq!(adaptive_compute(&c).value, f);
        prop_assert!(f >= c.cost(0, 0).max(c.cost(c.rows() - 1, c.cols() - 1)));
    }

    #[test]
    fn distance_is_symmetric((p, q) in curve_pair(12)) {
        let pq = CurvePair::new(&p, &q).unwrap();
        let qp = CurvePair::new(&q, &p).unwrap();
        prop_assert_eq!(classical_rolling(&pq).unwrap(), classical_rolling(&qp).unwrap());
        prop_assert_eq!(adaptive_compute(&pq).value, adaptive_compute(&qp).value);
    }

    #[test]
    fn full_table_satisfies_recurrence(c in int_matrix(7)) {
        let t = classical_full(&c).unwrap();
        for i in 0..c.rows() {
            for j in 0..c.cols() {
                let best = match (i, j) {
                    (0, 0) => 0.0,
                    (0, _) => t.get(0, j - 1),
                    (_, 0) => t.get(i - 1, 0),
                    _ => t.get(i - 1, j).min(t.get(i - 1, j - 1)).min(t.get(i, j - 1)),
                };
                prop_assert_eq!(t.get(i, j), c.get(i, j).max(best));
                prop_assert!(t.get(i, j) >= c.get(i, j));
            }
        }
        prop_assert_eq!(frechet_matrix(&c).unwrap(), t);
    }

    #[test]
    fn raising_a_cost_never_lowers_the_distance(
        c in int_matrix(8), pick in any::<prop::sample::Index>(), bump in 0u8..10
    ) {
        let before = classical_rolling(&c).unwrap();
        let k = pick.index(c.rows() * c.cols());
        let (i, j) = (k / c.cols(), k % c.cols());
        let mut raised = c.clone();
        raised.set(i, j, c.get(i, j) + f64::from(bump));
        prop_assert!(classical_rolling(&raised).unwrap() >= before);
    }

    #[test]
    fn banded_pass_matches_oracles(
        c in int_matrix(7), w in 1usize..9, t in threshold(), k in cutoff()
    ) {
        let out = pass(&c, w, t, k);
        prop_assert_eq!(out.value, band_brute(&c, w, t, k));
        prop_assert_eq!(out.breached, breach_oracle(&c, w, t, k));
        let (n, m) = (c.rows() as u64, c.cols() as u64);
        let w64 = w as u64;
        prop_assert!(out.cells_computed <= (2 * w64 - 1) * n.min(m) + w64 * n.abs_diff(m));
        prop_assert!(out.cells_computed <= 2 * w64 * (n + m));
        prop_assert!(out.distance_evals <= out.cells_computed);
        if out.value.is_finite() {
            prop_assert!(out.value >= classical_rolling(&c).unwrap());
        }
    }

    #[test]
    fn banded_value_is_monotone(c in int_matrix(8), w in 1usize..9, t in threshold(), k in cutoff()) {
        let a = pass(&c, w, t, k).value;
        let wider = pass(&c, w + 1, t, k).value;
        prop_assert!(a >= wider);
        let t2 = if t.is_finite() { t + 1.0 } else { t };
        prop_assert!(a >= pass(&c, w, t2, k).value);
    }

    #[test]
    fn full_band_is_exact(c in int_matrix(8), extra in 0usize..3) {
        let f = classical_full(&c).unwrap().distance();
        let w = c.rows().max(c.cols()) + extra;
        let out = pass(&c, w, f64::INFINITY, Cutoff::Strict);
        prop_assert_eq!(out.value, f);
        prop_assert!(!out.breached);
        // threshold above f changes nothing
        prop_assert_eq!(pass(&c, w, f + 0.5, Cutoff::Strict).value, f);
    }

    #[test]
    fn unbreached_pass_recovers_the_distance(
        c in int_matrix(8), w in 1usize..9, slack in 1u8..6
    ) {
        let f = classical_rolling(&c).unwrap();
        let t = f + f64::from(slack) * 0.5;
        let out = pass(&c, w, t, Cutoff::Strict);
        if !out.breached {
            prop_assert_eq!(out.value, f);
        }
        // realizable threshold equal to f
        let at_f = pass(&c, w, f, Cutoff::Strict);
        if !at_f.breached {
            prop_assert_eq!(at_f.value.min(f), f);
        }
    }

    #[test]
    fn adaptive_is_exact_and_bounded(c in int_matrix(16)) {
        let (n, m) = (c.rows(), c.cols());
        let f = classical_full(&c).unwrap().distance();
        let out = adaptive_compute(&c);
        prop_assert_eq!(out.value, f);

        let cap = n.max(m);
        let its = &out.iterations;
        prop_assert_eq!(its[0].width, 1);
        prop_assert_eq!(its[0].threshold, f64::INFINITY);
        for pair in its.windows(2) {
            prop_assert!(pair[1].width > pair[0].width);
            prop_assert!(pair[1].width <= 2 * pair[0].width);
            prop_assert!(pair[0].breached);
        }
        let mut running = f64::INFINITY;
        for it in its {
            prop_assert!(it.width <= cap);
            prop_assert_eq!(it.threshold, running);
            prop_assert!(it.threshold >= f);
            running = running.min(it.value);
        }
        prop_assert_eq!(running, out.value);
        let last = its.last().unwrap();
        prop_assert!(!last.breached || last.width == cap);
        prop_assert_eq!(out.final_width, last.width);
        prop_assert_eq!(out.total_cells, its.iter().map(|i| i.cells_computed).sum::<u64>());
        prop_assert!(out.total_cells <= 8 * out.final_width as u64 * (n + m) as u64);

        // the driver stops at most one doubling after its first width >= probe
        // (it may stop earlier once the threshold has reached f)
        let probe = probe_min_unbreached_width(&c).unwrap();
        if let Some(first_covering) = its.iter().map(|i| i.width).find(|&w| w >= probe) {
            prop_assert!(out.final_width <= (2 * first_covering).min(cap));
        }
        prop_assert!(out.final_width < 4 * probe || out.final_width == cap);
    }

    #[test]
    fn probe_is_the_smallest_unbreached_width(c in int_matrix(12)) {
        let f = classical_rolling(&c).unwrap();
        let probe = probe_min_unbreached_width(&c).unwrap();
        let cap = c.rows().max(c.cols());
        prop_assert!((1..=cap).contains(&probe));
        let scan = (1..=cap)
            .find(|&w| !pass(&c, w, f, Cutoff::Inclusive).breached)
            .unwrap();
        prop_assert_eq!(probe, scan);
        let out = pass(&c, probe, f, Cutoff::Inclusive);
        prop_assert_eq!(out.value.min(f), f);
    }

    #[test]
    fn dump_agrees_with_pass(c in int_matrix(9), w in 1usize..10, t in threshold(), k in cutoff()) {
        let params = BandParams::new(w, t).unwrap().with_cutoff(k);
        let dump = banded_matrix_dump(&c, &params).unwrap();
        let out = banded_pass(&c, &params).unwrap();
        prop_assert_eq!(dump.outcome(), &out);
        let corner = dump.get(c.rows() - 1, c.cols() - 1).as_cost();
        prop_assert_eq!(corner, out.value);
        let mut computed = 0;
        for i in 0..c.rows() {
            for j in 0..c.cols() {
                let state = dump.get(i, j);
                prop_assert_eq!(state == CellState::OutOfBand, i.abs_diff(j) >= w);
                if state != CellState::OutOfBand {
                    computed += 1;
                }
                if let CellState::Value(v) = state {
                    let pred = |a: Option<usize>, b: Option<usize>| match (a, b) {
                        (Some(a), Some(b)) => dump.get(a, b).as_cost(),
                        _ => f64::INFINITY,
                    };
                    let best = if i == 0 && j == 0 {
                        0.0
                    } else {
                        pred(i.checked_sub(1), Some(j))
                            .min(pred(Some(i), j.checked_sub(1)))
                            .min(pred(i.checked_sub(1), j.checked_sub(1)))
                    };
                    prop_assert_eq!(v, c.get(i, j).max(best));
                }
            }
        }
        prop_assert_eq!(computed, out.cells_computed);

        let text = render_annotated(&dump, true);
        let back = parse_matrix(&text, MatrixParseOptions { dash_as_inf: true }).unwrap();
        prop_assert_eq!((back.rows(), back.cols()), (c.rows(), c.cols()));
    }

    #[test]
    fn metric_axioms(
        a in prop::collection::vec(coord(), 3),
        b in prop::collection::vec(coord(), 3),
        c in prop::collection::vec(coord(), 3),
    ) {
        let (a, b, c) = (Point::new(a).unwrap(), Point::new(b).unwrap(), Point::new(c).unwrap());
        let ab = euclidean_distance(&a, &b).unwrap();
        prop_assert_eq!(ab, euclidean_distance(&b, &a).unwrap());
        prop_assert!(ab >= 0.0);
        let ac = euclidean_distance(&a, &c).unwrap();
        let bc = euclidean_distance(&b, &c).unwrap();
        prop_assert!(ac <= (ab + bc) * (1.0 + 1e-9) + 1e-12);
        prop_assert_eq!(euclidean_distance(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn curve_text_round_trip(
        dim in 1usize..4,
        raw in prop::collection::vec(any::<f64>().prop_filter("finite", |x| x.is_finite()), 0..40),
    ) {
        let len = raw.len() / dim * dim;
        let c = Curve::from_flat(dim, raw[..len].to_vec()).unwrap();
        let back = parse_curve(&write_curve(&c)).unwrap();
        prop_assert_eq!(back.len(), c.len());
        for (x, y) in c.iter().flatten().zip(back.iter().flatten()) {
            prop_assert_eq!(x.to_bits(), y.to_bits());
        }
    }
}
