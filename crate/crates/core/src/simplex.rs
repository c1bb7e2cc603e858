//! Dense two-phase simplex over exact rationals.
//!
//! Solves `min c.x` subject to `A x = b`, `x >= 0` with Bland's rule, so
//! termination is unconditional. Problems here are tiny (tens of rows and
//! columns), so a dense tableau is the right tool. Infeasibility comes with
//! a Farkas certificate `y` satisfying `y.A <= 0` componentwise and
//! `y.b > 0`, which callers turn into separating hyperplanes.

use crate::rational::Rational;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

pub(crate) enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible { farkas: Vec<Rational> },
    Unbounded,
}

/// Pivots the tableau on `(row, col)`: row `row` is scaled so the pivot
/// entry becomes 1 and the column is eliminated everywhere else, including
/// the cost row.
fn pivot(
    tableau: &mut [Vec<Rational>],
    cost: &mut [Rational],
    basis: &mut [usize],
    row: usize,
    col: usize,
) {
    let p = tableau[row][col].clone();
    for x in tableau[row].iter_mut() {
        *x /= &p;
    }
    let pivot_row = tableau[row].clone();
    for (i, r) in tableau.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (x, pr) in r.iter_mut().zip(&pivot_row) {
            *x -= &f * pr;
        }
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        for (x, pr) in cost.iter_mut().zip(&pivot_row) {
            *x -= &f * pr;
        }
    }
    basis[row] = col;
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

/// Runs simplex iterations until no candidate column (the first `n` ones)
/// improves the objective. Bland's rule: smallest improving column enters,
/// ties in the ratio test broken by smallest basic variable.
fn run_phase(
    tableau: &mut [Vec<Rational>],
    cost: &mut [Rational],
    basis: &mut [usize],
    n: usize,
    rhs_col: usize,
) -> PhaseEnd {
    loop {
        let Some(col) = (0..n).find(|&j| cost[j].is_negative()) else {
            return PhaseEnd::Optimal;
        };
        let mut best: Option<(usize, Rational)> = None;
        for (i, row) in tableau.iter().enumerate() {
            if !row[col].is_positive() {
                continue;
            }
            let ratio = &row[rhs_col] / &row[col];
            let better = match &best {
                None => true,
                Some((bi, br)) => ratio < *br || (ratio == *br && basis[i] < basis[*bi]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        let Some((row, _)) = best else {
            return PhaseEnd::Unbounded;
        };
        pivot(tableau, cost, basis, row, col);
    }
}

/// Solves `min objective.x` subject to `rows.x = rhs`, `x >= 0`.
pub(crate) fn solve(
    rows: &[Vec<Rational>],
    rhs: &[Rational],
    objective: &[Rational],
) -> LpOutcome {
    let m = rows.len();
    let n = objective.len();
    debug_assert!(rhs.len() == m && rows.iter().all(|r| r.len() == n));
    let ncols = n + m;
    let rhs_col = ncols;

    // Tableau [A | I | b] with b made nonnegative by row flips; the identity
    // block is the artificial basis for phase 1.
    let mut flip = vec![false; m];
    let mut tableau: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        flip[i] = rhs[i].is_negative();
        let mut row: Vec<Rational> = Vec::with_capacity(ncols + 1);
        for j in 0..n {
            row.push(if flip[i] { -&rows[i][j] } else { rows[i][j].clone() });
        }
        for a in 0..m {
            row.push(if a == i { Rational::one() } else { Rational::zero() });
        }
        row.push(if flip[i] { -&rhs[i] } else { rhs[i].clone() });
        tableau.push(row);
    }
    let mut basis: Vec<usize> = (n..ncols).collect();

    // Phase 1: minimize the sum of the artificials. Reduced costs relative
    // to the artificial basis; the last entry tracks minus the objective.
    let mut cost = vec![Rational::zero(); ncols + 1];
    for (j, c) in cost.iter_mut().enumerate() {
        let mut s = Rational::zero();
        for row in &tableau {
            s += &row[j];
        }
        *c = if (n..ncols).contains(&j) {
            Rational::one() - s
        } else {
            -s
        };
    }
    match run_phase(&mut tableau, &mut cost, &mut basis, n, rhs_col) {
        PhaseEnd::Unbounded => unreachable!("phase 1 objective is bounded below by zero"),
        PhaseEnd::Optimal => {}
    }

    if cost[rhs_col].is_negative() {
        // Positive residual: infeasible. The dual solution read off the
        // artificial columns is the Farkas certificate, mapped back through
        // the row flips.
        let farkas = (0..m)
            .map(|i| {
                let y = Rational::one() - &cost[n + i];
                if flip[i] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        return LpOutcome::Infeasible { farkas };
    }

    // Feasible. Drive leftover artificials out of the basis (their value is
    // zero); a row with no real coefficients left is redundant and dropped.
    let mut i = 0;
    while i < tableau.len() {
        if basis[i] >= n {
            match (0..n).find(|&j| !tableau[i][j].is_zero()) {
                Some(j) => {
                    pivot(&mut tableau, &mut cost, &mut basis, i, j);
                    i += 1;
                }
                None => {
                    tableau.remove(i);
                    basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }

    // Phase 2: the real objective, re-expressed over the current basis.
    let mut cost = vec![Rational::zero(); ncols + 1];
    for (j, c) in cost.iter_mut().enumerate() {
        let mut s = Rational::zero();
        for (row, &b) in tableau.iter().zip(&basis) {
            if !objective[b].is_zero() {
                s += &objective[b] * &row[j];
            }
        }
        *c = if j < n { &objective[j] - &s } else { -s };
    }
    match run_phase(&mut tableau, &mut cost, &mut basis, n, rhs_col) {
        PhaseEnd::Unbounded => LpOutcome::Unbounded,
        PhaseEnd::Optimal => {
            let mut x = vec![Rational::zero(); n];
            for (row, &b) in tableau.iter().zip(&basis) {
                x[b] = row[rhs_col].clone();
            }
            let value = -cost[rhs_col].clone();
            LpOutcome::Optimal { x, value }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn r(v: i64) -> Rational {
        ratio(v, 1)
    }

    fn rv(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| r(v)).collect()
    }

    fn check_feasible(rows: &[Vec<Rational>], rhs: &[Rational], x: &[Rational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for (row, b) in rows.iter().zip(rhs) {
            let lhs: Rational = row.iter().zip(x).map(|(a, v)| a * v).sum();
            assert_eq!(&lhs, b);
        }
    }

    fn check_farkas(rows: &[Vec<Rational>], rhs: &[Rational], y: &[Rational]) {
        let n = rows.first().map_or(0, Vec::len);
        for j in 0..n {
            let yaj: Rational = rows.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
            assert!(!yaj.is_positive(), "y.A has a positive entry");
        }
        let yb: Rational = rhs.iter().zip(y).map(|(b, yi)| b * yi).sum();
        assert!(yb.is_positive(), "y.b is not positive");
    }

    #[test]
    fn minimizes_over_a_segment() {
        // min -x - y on x + 2y = 4.
        let rows = [rv(&[1, 2])];
        let rhs = rv(&[4]);
        match solve(&rows, &rhs, &rv(&[-1, -1])) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(x, rv(&[4, 0]));
                assert_eq!(value, r(-4));
            }
            _ => panic!("expected optimum"),
        }
    }

    #[test]
    fn reports_infeasibility_with_certificate() {
        let rows = [rv(&[1, 1])];
        let rhs = rv(&[-1]);
        match solve(&rows, &rhs, &rv(&[0, 0])) {
            LpOutcome::Infeasible { farkas } => check_farkas(&rows, &rhs, &farkas),
            _ => panic!("expected infeasible"),
        }
        // Inconsistent pair of rows, each feasible alone.
        let rows = [rv(&[1, 1]), rv(&[1, 1])];
        let rhs = rv(&[1, 2]);
        match solve(&rows, &rhs, &rv(&[0, 0])) {
            LpOutcome::Infeasible { farkas } => check_farkas(&rows, &rhs, &farkas),
            _ => panic!("expected infeasible"),
        }
    }

    #[test]
    fn detects_unboundedness() {
        // min -x on x - y = 0.
        let rows = [rv(&[1, -1])];
        let rhs = rv(&[0]);
        assert!(matches!(
            solve(&rows, &rhs, &rv(&[-1, 0])),
            LpOutcome::Unbounded
        ));
    }

    #[test]
    fn drops_redundant_rows() {
        let rows = [rv(&[1, 1]), rv(&[1, 1]), rv(&[2, 2])];
        let rhs = rv(&[1, 1, 2]);
        match solve(&rows, &rhs, &rv(&[1, 0])) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(value, r(0));
                check_feasible(&rows, &rhs, &x);
            }
            _ => panic!("expected optimum"),
        }
    }

    #[test]
    fn handles_empty_shapes() {
        match solve(&[], &[], &rv(&[1, 1])) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(x, rv(&[0, 0]));
                assert!(value.is_zero());
            }
            _ => panic!("expected optimum"),
        }
        assert!(matches!(solve(&[], &[], &rv(&[-1])), LpOutcome::Unbounded));
        // No variables: solvable exactly when rhs is zero.
        match solve(&[vec![], vec![]], &rv(&[0, 0]), &[]) {
            LpOutcome::Optimal { x, value } => {
                assert!(x.is_empty() && value.is_zero());
            }
            _ => panic!("expected optimum"),
        }
        match solve(&[vec![]], &rv(&[3]), &[]) {
            LpOutcome::Infeasible { farkas } => check_farkas(&[vec![]], &rv(&[3]), &farkas),
            _ => panic!("expected infeasible"),
        }
    }

    #[test]
    fn exact_fractional_optimum() {
        // min x + y on 2x + 3y = 1, x >= 0, y >= 0: best is y = 1/3.
        let rows = [rv(&[2, 3])];
        let rhs = [Rational::one()];
        match solve(&rows, &rhs, &rv(&[1, 1])) {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(x, [ratio(0, 1), ratio(1, 3)]);
                assert_eq!(value, ratio(1, 3));
            }
            _ => panic!("expected optimum"),
        }
    }

    proptest::proptest! {
        /// With a nonnegative objective the solver must either exhibit a
        /// feasible optimum or a valid Farkas certificate.
        #[test]
        fn small_random_systems_are_classified_correctly(
            entries in proptest::collection::vec(-3i64..=3, 6),
            rhs in proptest::collection::vec(-4i64..=4, 2),
        ) {
            let rows = [rv(&entries[..3]), rv(&entries[3..])];
            let rhs = rv(&rhs);
            let obj = rv(&[1, 1, 1]);
            match solve(&rows, &rhs, &obj) {
                LpOutcome::Optimal { x, .. } => check_feasible(&rows, &rhs, &x),
                LpOutcome::Infeasible { farkas } => check_farkas(&rows, &rhs, &farkas),
                LpOutcome::Unbounded => panic!("nonnegative objective cannot be unbounded"),
            }
        }
    }
}
