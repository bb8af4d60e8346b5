//! Library routes against independent computations done here.

use qboson_core::boxcount::{count_box_transfer, genfun_box_transfer, BoxSpec};
use qboson_core::partitions::partitions_of;
use qboson_core::symfunc::{hl_eval, hl_eval_branching, hl_eval_symmetrized, schur_eval};
use qboson_core::{Partition, Rational};

/// Weighted sum over semistandard tableaux of shape `lambda` with entries
/// below `x.len()`, filled cell by cell in reading order.
fn schur_by_tableaux(lambda: &Partition, x: &[Rational]) -> Rational {
    let rows = lambda.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&r| vec![0; r]).collect();
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
        .collect();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        x: &[Rational],
        acc: &mut Rational,
    ) {
        if k == cells.len() {
            let w: Rational = grid.iter().flatten().map(|&e| x[e].clone()).product();
            *acc += &w;
            return;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 0 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 0 };
        for e in lo_row.max(lo_col)..x.len() {
            grid[i][j] = e;
            go(k + 1, cells, grid, x, acc);
        }
    }
    let mut acc = Rational::zero();
    go(0, &cells, &mut grid, x, &mut acc);
    acc
}

fn points() -> Vec<Rational> {
    vec![
        Rational::new(1, 2),
        Rational::new(-2, 3),
        Rational::new(3, 1),
        Rational::new(5, 7),
    ]
}

#[test]
fn schur_matches_tableaux() {
    let x = points();
    for d in 0..=5 {
        for lambda in partitions_of(d, d, None) {
            for n in 1..=x.len() {
                assert_eq!(
                    schur_eval(&lambda, &x[..n]),
                    schur_by_tableaux(&lambda, &x[..n]),
                    "{lambda} in {n}"
                );
            }
        }
    }
    let ones = vec![Rational::one(); 3];
    assert_eq!(
        schur_eval(&Partition::of(&[2, 2]), &ones),
        Rational::from_int(6)
    );
}

#[test]
fn hall_littlewood_routes_agree() {
    let x = points();
    for t in [Rational::new(1, 2), Rational::new(-1, 3), Rational::zero()] {
        for d in 0..=4 {
            for lambda in partitions_of(d, d, Some(3)) {
                let n = 3;
                let main = hl_eval(&lambda, &x[..n], &t);
                assert_eq!(
                    main,
                    hl_eval_branching(&lambda, &x[..n], &t),
                    "{lambda} t={t}"
                );
                if let Some(sym) = hl_eval_symmetrized(&lambda, &x[..n], &t) {
                    assert_eq!(main, sym, "{lambda} t={t}");
                }
            }
        }
    }
}

/// `∏ (i + j + k - 1) / (i + j + k - 2)` over the cells of the box.
fn macmahon(a: usize, b: usize, c: usize) -> Rational {
    let mut p = Rational::one();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                p = p * Rational::new((i + j + k - 1) as i64, (i + j + k - 2) as i64);
            }
        }
    }
    p
}

#[test]
fn box_counts_match_the_product_formula() {
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                let s = BoxSpec::new(a, b, c).unwrap();
                assert_eq!(count_box_transfer(&s), macmahon(a, b, c), "{s}");
            }
        }
    }
}

#[test]
fn box_generating_functions_are_palindromic() {
    for (a, b, c) in [(2, 2, 2), (2, 3, 1), (3, 3, 2)] {
        let g = genfun_box_transfer(&BoxSpec::new(a, b, c).unwrap());
        let coeffs = g.coeffs();
        assert_eq!(coeffs.len(), a * b * c + 1);
        assert!(coeffs.iter().eq(coeffs.iter().rev()));
    }
}
