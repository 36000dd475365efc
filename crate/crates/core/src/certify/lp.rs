//! Exact phase-1 simplex for `A x = b, x >= 0`.
//!
//! Revised form with an explicit dense basis inverse over `BigRational`.
//! Columns are sparse with small integer entries (set-function generators
//! have at most four nonzeros), so pricing is cheap and the inverse update
//! dominates. Infeasibility is reported with the phase-1 dual, which is a
//! Farkas functional for the original system.

use num_traits::{One, Signed, Zero};

use crate::setfun::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Column {
    pub entries: Vec<(usize, i64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Smallest-index entering and leaving variables throughout.
    #[default]
    Bland,
    /// Most negative reduced cost, falling back to Bland for good after a run
    /// of degenerate pivots.
    DantzigThenBland,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    /// A nonnegative solution, one value per column.
    Feasible(Vec<Rational>),
    /// `z` with `z·a_j >= 0` for every column and `z·b < 0`.
    Infeasible(Vec<Rational>),
}

const DEGENERATE_RUN: usize = 50;

/// Finds `x >= 0` with `Σ_j x_j a_j = b` over `rows` equations, or a Farkas
/// functional proving none exists.
pub fn solve(rows: usize, columns: &[Column], rhs: &[Rational], rule: PivotRule) -> Outcome {
    assert_eq!(rhs.len(), rows);
    let n = columns.len();
    let m = rows;
    let sign: Vec<i64> = rhs.iter().map(|b| if b.is_negative() { -1 } else { 1 }).collect();
    let mut xb: Vec<Rational> = rhs.iter().map(|b| b.abs()).collect();
    // Basis variable per row; indices >= n are artificial.
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut binv: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = vec![Rational::zero(); m];
            row[i] = Rational::one();
            row
        })
        .collect();
    let mut is_basic = vec![false; n];
    let mut degenerate_run = 0usize;
    let mut bland = rule == PivotRule::Bland;

    loop {
        let objective: Rational = (0..m).filter(|&i| basis[i] >= n).map(|i| xb[i].clone()).sum();
        if objective.is_zero() {
            let mut x = vec![Rational::zero(); n];
            for i in 0..m {
                if basis[i] < n {
                    x[basis[i]] = xb[i].clone();
                }
            }
            return Outcome::Feasible(x);
        }

        // y = c_B B^{-1}, with cost 1 on artificials.
        let mut y = vec![Rational::zero(); m];
        for i in (0..m).filter(|&i| basis[i] >= n) {
            for (yj, bij) in y.iter_mut().zip(&binv[i]) {
                if !bij.is_zero() {
                    *yj += bij;
                }
            }
        }

        let reduced = |j: usize| -> Rational {
            let mut d = Rational::zero();
            for &(r, a) in &columns[j].entries {
                if !y[r].is_zero() {
                    d -= &y[r] * Rational::from_integer((a * sign[r]).into());
                }
            }
            d
        };

        let entering = if bland {
            (0..n).filter(|&j| !is_basic[j]).find(|&j| reduced(j).is_negative())
        } else {
            let mut best: Option<(usize, Rational)> = None;
            for j in (0..n).filter(|&j| !is_basic[j]) {
                let d = reduced(j);
                if d.is_negative() && best.as_ref().is_none_or(|(_, bd)| d < *bd) {
                    best = Some((j, d));
                }
            }
            best.map(|(j, _)| j)
        };

        let Some(j) = entering else {
            let z: Vec<Rational> = (0..m).map(|r| -&y[r] * Rational::from_integer(sign[r].into())).collect();
            return Outcome::Infeasible(z);
        };

        // u = B^{-1} ã_j
        let mut u = vec![Rational::zero(); m];
        for (i, ui) in u.iter_mut().enumerate() {
            for &(r, a) in &columns[j].entries {
                let bir = &binv[i][r];
                if !bir.is_zero() {
                    *ui += bir * Rational::from_integer((a * sign[r]).into());
                }
            }
        }

        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !u[i].is_positive() {
                continue;
            }
            let ratio = &xb[i] / &u[i];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (p, step) = leave.expect("phase-1 objective is bounded below");

        if step.is_zero() {
            degenerate_run += 1;
            if degenerate_run >= DEGENERATE_RUN {
                bland = true;
            }
        } else {
            degenerate_run = 0;
        }

        let piv = u[p].clone();
        for v in binv[p].iter_mut() {
            if !v.is_zero() {
                *v /= &piv;
            }
        }
        xb[p] /= &piv;
        let pivot_row = binv[p].clone();
        let pivot_x = xb[p].clone();
        for i in 0..m {
            if i == p || u[i].is_zero() {
                continue;
            }
            let f = &u[i];
            for (v, pv) in binv[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= f * pv;
                }
            }
            xb[i] -= f * &pivot_x;
        }
        let old = basis[p];
        if old < n {
            is_basic[old] = false;
        }
        basis[p] = j;
        is_basic[j] = true;
    }
}
