//! Exact linear algebra helpers: Gaussian elimination over the rationals and
//! fraction-free (Bareiss) determinants over a polynomial ring.

use super::mpoly::{MPoly, Rational};
use num_traits::{One, Zero};

/// Outcome of an exact linear solve.
#[derive(Debug, Clone)]
pub enum SolveOutcome {
    /// A solution vector (free variables, if any, set to zero).
    Solution(Vec<Rational>),
    /// The system is inconsistent; carries the index of the offending row.
    Inconsistent { row: usize },
}

/// Solve `A x = b` exactly by Gaussian elimination with partial (first
/// nonzero) pivoting. `a` is row-major, possibly overdetermined.
pub fn solve_exact(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> SolveOutcome {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = Rational::one() / a[r][c].clone();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        b[r] *= &inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let v = &a[r][j] * &f;
                    a[i][j] -= v;
                }
                let v = &b[r] * &f;
                b[i] -= v;
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Remaining rows must be 0 = 0.
    for i in r..rows {
        if !b[i].is_zero() {
            return SolveOutcome::Inconsistent { row: i };
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for c in 0..cols {
        if let Some(p) = pivot_of_col[c] {
            x[c] = b[p].clone();
        }
    }
    SolveOutcome::Solution(x)
}

/// Fraction-free determinant (Bareiss) of a square matrix of polynomials.
/// Every division performed is exact; intended for small matrices.
pub fn bareiss_det<const N: usize>(mut m: Vec<Vec<MPoly<N>>>) -> MPoly<N> {
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    for row in &m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let mut sign = 1i32;
    let mut prev = MPoly::<N>::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return MPoly::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss pivot division is exact by construction");
            }
        }
        for i in k + 1..n {
            m[i][k] = MPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        &MPoly::zero() - &det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::mpoly::{rat, Poly4};

    #[test]
    fn solve_2x2() {
        // x + y = 3, x - y = 1 -> (2, 1)
        let a = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
        let b = vec![rat(3), rat(1)];
        match solve_exact(a, b) {
            SolveOutcome::Solution(x) => assert_eq!(x, vec![rat(2), rat(1)]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        let b = vec![rat(1), rat(3)];
        assert!(matches!(solve_exact(a, b), SolveOutcome::Inconsistent { .. }));
    }

    #[test]
    fn overdetermined_consistent() {
        let a = vec![vec![rat(1)], vec![rat(2)], vec![rat(3)]];
        let b = vec![rat(5), rat(10), rat(15)];
        match solve_exact(a, b) {
            SolveOutcome::Solution(x) => assert_eq!(x, vec![rat(5)]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bareiss_matches_cofactor_2x2() {
        let z = Poly4::var(0);
        let w = Poly4::var(1);
        // det [[z, w], [w, z]] = z^2 - w^2
        let det = bareiss_det(vec![vec![z.clone(), w.clone()], vec![w.clone(), z.clone()]]);
        assert_eq!(det, &z.pow(2) - &w.pow(2));
    }

    #[test]
    fn bareiss_empty_is_one() {
        let det = bareiss_det::<4>(vec![]);
        assert_eq!(det, Poly4::one());
    }

    #[test]
    fn bareiss_singular_is_zero() {
        let z = Poly4::var(0);
        let det = bareiss_det(vec![
            vec![z.clone(), z.clone()],
            vec![z.clone(), z.clone()],
        ]);
        assert!(det.is_zero());
    }

    #[test]
    fn bareiss_3x3_integer() {
        let c = |n: i64| Poly4::from_int(n);
        let det = bareiss_det(vec![
            vec![c(2), c(0), c(1)],
            vec![c(1), c(3), c(2)],
            vec![c(0), c(1), c(4)],
        ]);
        // 2*(12-2) - 0 + 1*(1-0) = 21
        assert_eq!(det, c(21));
    }
}
