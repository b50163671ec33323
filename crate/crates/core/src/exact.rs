//! Exact rational certificates for Perron eigenvalues.
//!
//! A nonnegative matrix that has a strictly positive eigenvector `x` for an
//! eigenvalue `d` has spectral radius exactly `d` (Collatz–Wielandt bounds
//! are attained). Deciding whether `d` is the Perron eigenvalue therefore
//! reduces to the feasibility of `(M - dI) x = 0, x >= 1`, which we decide
//! with a phase-one simplex over the rationals using Bland's rule.

use num::{BigInt, BigRational, One, Signed, Zero};

type Q = BigRational;

/// True iff `matrix` (square, nonnegative integers) has `d` as an eigenvalue
/// with a strictly positive eigenvector.
pub fn has_positive_eigenvector(matrix: &[Vec<u64>], d: u64) -> bool {
    let n = matrix.len();
    if n == 0 {
        return false;
    }
    // A = M - dI, y = x - 1 >= 0, A y = -A 1.
    let a: Vec<Vec<Q>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let v = BigInt::from(matrix[r][c])
                        - if r == c {
                            BigInt::from(d)
                        } else {
                            BigInt::zero()
                        };
                    Q::from_integer(v)
                })
                .collect()
        })
        .collect();
    let b: Vec<Q> = a
        .iter()
        .map(|row| -row.iter().fold(Q::zero(), |acc, x| acc + x))
        .collect();
    phase_one_feasible(a, b)
}

/// Feasibility of `{ y >= 0 : A y = b }` by minimising the sum of artificials.
fn phase_one_feasible(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> bool {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    for r in 0..rows {
        if b[r].is_negative() {
            b[r] = -b[r].clone();
            for x in a[r].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    // Tableau columns: structural 0..cols, artificial cols..cols+rows, then rhs.
    let width = cols + rows;
    let mut t: Vec<Vec<Q>> = (0..rows)
        .map(|r| {
            let mut row = a[r].clone();
            row.extend((0..rows).map(|k| if k == r { Q::one() } else { Q::zero() }));
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (cols..cols + rows).collect();

    // Reduced costs of the objective min sum(artificials): c_j - c_B B^-1 A_j.
    let mut cost: Vec<Q> = vec![Q::zero(); width + 1];
    for row in &t {
        for (j, v) in row.iter().enumerate() {
            if j < cols || j == width {
                cost[j] -= v;
            }
        }
    }

    loop {
        // Bland: smallest index with negative reduced cost.
        let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for r in 0..rows {
            if t[r][enter].is_positive() {
                let ratio = &t[r][width] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // Unbounded direction cannot occur for a bounded-below objective.
            break;
        };
        pivot(&mut t, &mut cost, pr, enter);
        basis[pr] = enter;
    }
    // Objective value is -cost[width].
    cost[width].is_zero()
}

fn pivot(t: &mut [Vec<Q>], cost: &mut [Q], pr: usize, pc: usize) {
    let p = t[pr][pc].clone();
    for x in t[pr].iter_mut() {
        *x = &*x / &p;
    }
    let pivot_row = t[pr].clone();
    for (r, row) in t.iter_mut().enumerate() {
        if r == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (x, y) in row.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (x, y) in cost.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

/// `a * b` for square integer matrices.
pub fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}
