use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `left * m * right = diag(diagonal)` with `left`, `right` unimodular and
/// `diagonal[0] | diagonal[1] | ...`, all entries non-negative.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    /// Invariant factors different from one; the cyclic decomposition of the
    /// cokernel (zeros stand for free summands).
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| *d != &BigInt::from(1)).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let steps = rows.min(cols);

    'diagonal: for t in 0..steps {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'diagonal;
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let mut cleared = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, t)] / &a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                left.add_row_multiple(i, t, &q);
                cleared &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(t, j)] / &a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                right.add_col_multiple(j, t, &q);
                cleared &= a[(t, j)].is_zero();
            }
            if !cleared {
                continue;
            }

            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[(i, j)] % &a[(t, t)]).is_zero()));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, i, &one);
                    left.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }

    let diagonal = (0..steps).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diagonal, left, right }
}
