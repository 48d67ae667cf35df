//! Exact rational simplex with Bland's rule.
//!
//! Problems here are tiny (at most ~200 constraints, ~15 variables), so a
//! dense tableau over `BigRational` is plenty. Only the form needed by the
//! facet and implication checks is supported: maximize `c.x` subject to
//! `A x <= b` with `x >= 0` and `b >= 0`, so the slack basis is feasible and
//! no phase-one is required.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Q;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Q, point: Vec<Q> },
    Unbounded,
}

/// Maximize `objective . x` subject to `rows[i] . x <= rhs[i]`, `x >= 0`.
/// Every `rhs[i]` must be nonnegative.
pub fn maximize(objective: &[Q], rows: &[Vec<Q>], rhs: &[Q]) -> Result<LpOutcome> {
    let n = objective.len();
    let m = rows.len();
    if rows.iter().any(|r| r.len() != n) || rhs.len() != m {
        return Err(Error::Internal("LP dimension mismatch".into()));
    }
    if rhs.iter().any(|b| b.is_negative()) {
        return Err(Error::Internal("LP requires nonnegative right-hand sides".into()));
    }

    // Tableau: m rows of [A | I | b], objective row keeps reduced costs.
    let width = n + m + 1;
    let mut tab: Vec<Vec<Q>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(width);
        row.extend(rows[i].iter().cloned());
        for j in 0..m {
            row.push(if i == j { Q::from_integer(1.into()) } else { Q::zero() });
        }
        row.push(rhs[i].clone());
        tab.push(row);
    }
    let mut cost: Vec<Q> = Vec::with_capacity(width);
    cost.extend(objective.iter().cloned());
    cost.extend(std::iter::repeat(Q::zero()).take(m + 1));
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        // Bland: entering variable = smallest index with positive reduced cost.
        let enter = match (0..n + m).find(|&j| cost[j].is_positive()) {
            Some(j) => j,
            None => break,
        };
        // Ratio test, ties broken by smallest basis variable (Bland).
        let mut best: Option<(Q, usize, usize)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let cand = (ratio, basis[i], i);
                best = Some(match best {
                    None => cand,
                    Some(cur) => {
                        if (cand.0.clone(), cand.1) < (cur.0.clone(), cur.1) {
                            cand
                        } else {
                            cur
                        }
                    }
                });
            }
        }
        let (_, _, pivot_row) = match best {
            Some(b) => b,
            None => return Ok(LpOutcome::Unbounded),
        };
        // Pivot.
        let p = tab[pivot_row][enter].clone();
        for x in tab[pivot_row].iter_mut() {
            *x /= &p;
        }
        for i in 0..m {
            if i != pivot_row && !tab[i][enter].is_zero() {
                let f = tab[i][enter].clone();
                for j in 0..width {
                    let t = &tab[pivot_row][j] * &f;
                    tab[i][j] -= t;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for j in 0..width {
                let t = &tab[pivot_row][j] * &f;
                cost[j] -= t;
            }
        }
        basis[pivot_row] = enter;
    }

    let mut point = vec![Q::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            point[b] = tab[i][width - 1].clone();
        }
    }
    // cost[width-1] accumulated -objective value.
    Ok(LpOutcome::Optimal { value: -cost[width - 1].clone(), point })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q_from;

    #[test]
    fn simple_bounded() {
        // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x,y >= 0 -> (8/5, 6/5), 14/5.
        let obj = vec![q_from(1), q_from(1)];
        let rows = vec![vec![q_from(1), q_from(2)], vec![q_from(3), q_from(1)]];
        let rhs = vec![q_from(4), q_from(6)];
        match maximize(&obj, &rows, &rhs).unwrap() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, crate::q_ratio(14, 5));
                assert_eq!(point, vec![crate::q_ratio(8, 5), crate::q_ratio(6, 5)]);
            }
            LpOutcome::Unbounded => panic!("bounded"),
        }
    }

    #[test]
    fn detects_unbounded() {
        let obj = vec![q_from(1)];
        let rows = vec![vec![q_from(-1)]];
        let rhs = vec![q_from(1)];
        assert_eq!(maximize(&obj, &rows, &rhs).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn degenerate_cycling_guard() {
        // A classic degenerate instance; Bland's rule must terminate.
        let obj = vec![q_from(10), q_from(-57), q_from(-9), q_from(-24)];
        let rows = vec![
            vec![crate::q_ratio(1, 2), crate::q_ratio(-11, 2), crate::q_ratio(-5, 2), q_from(9)],
            vec![crate::q_ratio(1, 2), crate::q_ratio(-3, 2), crate::q_ratio(-1, 2), q_from(1)],
            vec![q_from(1), q_from(0), q_from(0), q_from(0)],
        ];
        let rhs = vec![q_from(0), q_from(0), q_from(1)];
        match maximize(&obj, &rows, &rhs).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q_from(1)),
            LpOutcome::Unbounded => panic!("bounded"),
        }
    }
}
