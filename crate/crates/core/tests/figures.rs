//! Goldens built on the published 6×6 long-edged instance.

use frechet_core::matrices::render_dp_matrix;
use frechet_core::*;

const FIG1: &str = include_str!("data/fig1.tsv");
const FIG2_PUBLISHED: &str = include_str!("data/fig2_published.txt");
const FIG3_PUBLISHED: &str = include_str!("data/fig3_published.txt");
const FIG2_GOLDEN: &str = include_str!("data/fig2.golden");
const FIG3_GOLDEN: &str = include_str!("data/fig3_corrected.golden");

fn fig1() -> CostMatrix {
    parse_matrix(FIG1, MatrixParseOptions::default()).unwrap()
}

fn tokens(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(str::to_owned).collect())
        .collect()
}

/// Published numbers re-rendered at two decimals; `-1.0` becomes `-`.
fn published_as_rendered(text: &str) -> Vec<Vec<String>> {
    tokens(text)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|t| match t.as_str() {
                    "inf" => t,
                    "-1.0" => "-".to_owned(),
                    _ => format!("{:.2}", t.parse::<f64>().unwrap()),
                })
                .collect()
        })
        .collect()
}

#[test]
fn all_engines_give_13_45() {
    let m = fig1();
    assert_eq!(classical_full(&m).unwrap().distance(), 13.45);
    assert_eq!(classical_rolling(&m).unwrap(), 13.45);
    assert_eq!(adaptive_compute(&m).value, 13.45);
    assert_eq!(brute_force(&m).unwrap(), 13.45);
}

#[test]
fn frechet_matrix_matches_published_table() {
    let table = frechet_matrix(&fig1()).unwrap();
    let rendered = render_dp_matrix(&table);
    assert_eq!(tokens(&rendered), published_as_rendered(FIG2_PUBLISHED));
    assert_eq!(rendered, FIG2_GOLDEN);
}

#[test]
fn banded_dump_matches_published_except_two_leaked_cells() {
    let params = BandParams::new(3, 20.0).unwrap();
    let dump = banded_matrix_dump(&fig1(), &params).unwrap();
    let ours = tokens(&render_annotated(&dump, false));
    let published = published_as_rendered(FIG3_PUBLISHED);

    let mut differing = Vec::new();
    for i in 0..6 {
        for j in 0..6 {
            if ours[i][j] != published[i][j] {
                differing.push((i, j, published[i][j].clone(), ours[i][j].clone()));
            }
        }
    }
    assert_eq!(
        differing,
        vec![
            (2, 4, "6.13".to_owned(), "inf".to_owned()),
            (4, 2, "13.17".to_owned(), "inf".to_owned()),
        ]
    );
    assert_eq!(dump.get(2, 4), CellState::Cut);
    assert_eq!(dump.get(4, 2), CellState::Cut);
    assert_eq!(render_annotated(&dump, true), FIG3_GOLDEN);
}

#[test]
fn banded_pass_at_width_three() {
    let out = banded_pass(&fig1(), &BandParams::new(3, 20.0).unwrap()).unwrap();
    assert_eq!(out.value, 13.45);
    assert!(!out.breached);
    // 6 + 2*5 + 2*4 band cells
    assert_eq!(out.cells_computed, 24);
}

#[test]
fn adaptive_trace() {
    let out = adaptive_compute(&fig1());
    let trace: Vec<_> = out
        .iterations
        .iter()
        .map(|it| (it.width, it.threshold, it.value, it.breached))
        .collect();
    // at w=2 the strict cutoff at 13.45 removes (1,1), so the pass value is
    // +inf, while no finite cell can leave the band
    assert_eq!(
        trace,
        vec![
            (1, f64::INFINITY, 13.45, true),
            (2, 13.45, f64::INFINITY, false),
        ]
    );
    assert_eq!(out.final_width, 2);
    assert_eq!(out.total_cells, 6 + 16);
}

#[test]
fn probe_width_is_two() {
    let m = fig1();
    assert_eq!(probe_min_unbreached_width(&m).unwrap(), 2);
    // linear-scan cross-check
    let f = classical_rolling(&m).unwrap();
    let breached = |w| {
        let p = BandParams::new(w, f)
            .unwrap()
            .with_cutoff(Cutoff::Inclusive);
        banded_pass(&m, &p).unwrap().breached
    };
    assert!(breached(1));
    assert!(!breached(2));
}

#[test]
fn dumps_read_back_as_matrices() {
    let m = fig1();
    let dump = banded_matrix_dump(&m, &BandParams::new(3, 20.0).unwrap()).unwrap();
    let text = render_annotated(&dump, true);
    assert!(parse_matrix(&text, MatrixParseOptions::default()).is_err());
    let back = parse_matrix(&text, MatrixParseOptions { dash_as_inf: true }).unwrap();
    assert_eq!((back.rows(), back.cols()), (6, 6));
    assert_eq!(back.get(0, 0), 1.41);
    assert_eq!(back.get(0, 5), f64::INFINITY);

    let fm = parse_matrix(FIG2_GOLDEN, MatrixParseOptions::default()).unwrap();
    assert_eq!(fm.get(5, 5), 13.45);
}
