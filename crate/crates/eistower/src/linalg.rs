//! Exact solving of linear systems with a unique solution.

use crate::error::Error;
use crate::ring::Field;

pub struct LinearSystem<T> {
    /// rows x cols
    pub matrix: Vec<Vec<T>>,
    pub rhs: Vec<T>,
}

impl<T> LinearSystem<T> {
    pub fn new(matrix: Vec<Vec<T>>, rhs: Vec<T>) -> Self {
        assert_eq!(matrix.len(), rhs.len(), "inconsistent dimensions");
        let cols = matrix.first().map(|r| r.len()).unwrap_or(0);
        assert!(matrix.iter().all(|r| r.len() == cols), "ragged matrix");
        LinearSystem { matrix, rhs }
    }
}

/// Solves a system required to have exactly one solution, by exact Gaussian
/// elimination with pivot selection via `Field::pivot_score`. The system may
/// be overdetermined; extra rows must be consistent.
pub fn solve_unique<F: Field>(
    field: &F,
    sys: &LinearSystem<F::Elem>,
) -> Result<Vec<F::Elem>, Error> {
    let rows = sys.matrix.len();
    let cols = sys.matrix.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<F::Elem>> = sys
        .matrix
        .iter()
        .zip(&sys.rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    let mut pivot_row = 0usize;
    let mut pivot_cols: Vec<usize> = Vec::with_capacity(cols);
    for col in 0..cols {
        // choose pivot among remaining rows
        let mut best: Option<(usize, u64)> = None;
        for (r, row) in m.iter().enumerate().skip(pivot_row) {
            if !field.is_zero(&row[col]) {
                let score = field.pivot_score(&row[col]);
                if best.map(|(_, s)| score > s).unwrap_or(true) {
                    best = Some((r, score));
                }
            }
        }
        let Some((r, _)) = best else {
            // free column: more than one solution if the system is consistent
            return Err(Error::Underdetermined);
        };
        m.swap(pivot_row, r);
        let inv = field.inv(&m[pivot_row][col]);
        for k in col..=cols {
            m[pivot_row][k] = field.mul(&m[pivot_row][k], &inv);
        }
        let pivot = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == pivot_row || field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for k in col..=cols {
                let t = field.mul(&factor, &pivot[k]);
                row[k] = field.sub(&row[k], &t);
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    if pivot_cols.len() < cols {
        return Err(Error::Underdetermined);
    }
    // remaining rows must be identically zero
    for row in m.iter().skip(cols) {
        if !field.is_zero(&row[cols]) {
            return Err(Error::Inconsistent);
        }
    }
    let mut solution = Vec::with_capacity(cols);
    for (k, &col) in pivot_cols.iter().enumerate() {
        debug_assert_eq!(k, col);
        solution.push(m[k][cols].clone());
    }
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{RatRing, Ring};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn identity_system() {
        let f = RatRing;
        let sys = LinearSystem::new(
            vec![
                vec![q(1, 1), q(0, 1), q(0, 1)],
                vec![q(0, 1), q(1, 1), q(0, 1)],
                vec![q(0, 1), q(0, 1), q(1, 1)],
            ],
            vec![q(2, 1), q(-3, 1), q(1, 2)],
        );
        assert_eq!(
            solve_unique(&f, &sys).unwrap(),
            vec![q(2, 1), q(-3, 1), q(1, 2)]
        );
    }

    #[test]
    fn one_by_one() {
        let sys = LinearSystem::new(vec![vec![q(2, 1)]], vec![q(3, 1)]);
        assert_eq!(solve_unique(&RatRing, &sys).unwrap(), vec![q(3, 2)]);
    }

    #[test]
    fn overdetermined_consistent() {
        let sys = LinearSystem::new(
            vec![vec![q(1, 1)], vec![q(2, 1)], vec![q(3, 1)]],
            vec![q(5, 1), q(10, 1), q(15, 1)],
        );
        assert_eq!(solve_unique(&RatRing, &sys).unwrap(), vec![q(5, 1)]);
    }

    #[test]
    fn error_paths() {
        let inconsistent = LinearSystem::new(
            vec![vec![q(1, 1)], vec![q(1, 1)]],
            vec![q(1, 1), q(2, 1)],
        );
        assert!(matches!(
            solve_unique(&RatRing, &inconsistent),
            Err(Error::Inconsistent)
        ));
        let under = LinearSystem::new(
            vec![vec![q(1, 1), q(1, 1)]],
            vec![q(1, 1)],
        );
        assert!(matches!(
            solve_unique(&RatRing, &under),
            Err(Error::Underdetermined)
        ));
    }

    #[test]
    fn solution_reproduces_rhs() {
        let f = RatRing;
        let matrix = vec![
            vec![q(2, 1), q(1, 3), q(-1, 1)],
            vec![q(0, 1), q(4, 1), q(1, 1)],
            vec![q(5, 1), q(-2, 1), q(7, 2)],
        ];
        let rhs = vec![q(1, 1), q(-2, 1), q(3, 1)];
        let sys = LinearSystem::new(matrix.clone(), rhs.clone());
        let x = solve_unique(&f, &sys).unwrap();
        for (row, b) in matrix.iter().zip(&rhs) {
            let mut acc = f.zero();
            for (a, xi) in row.iter().zip(&x) {
                acc = f.add(&acc, &f.mul(a, xi));
            }
            assert_eq!(&acc, b);
        }
    }
}
