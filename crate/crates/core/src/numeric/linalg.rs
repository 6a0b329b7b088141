//! Dense Gaussian elimination over any [`Scalar`] field.

use super::scalar::Scalar;

pub type Matrix<F> = Vec<Vec<F>>;

fn matrix_scale<F: Scalar>(a: &Matrix<F>) -> f64 {
    a.iter().flatten().map(|v| v.magnitude()).fold(0.0, f64::max).max(1.0)
}

fn pivot_row<F: Scalar>(a: &Matrix<F>, col: usize, from: usize, scale: f64) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (r, row) in a.iter().enumerate().skip(from) {
        if row[col].is_negligible(scale) {
            continue;
        }
        let m = row[col].magnitude();
        // exact modes take the first nonzero entry so results never depend on
        // float magnitudes of huge rationals
        if F::EXACT {
            return Some(r);
        }
        if best.is_none_or(|(_, bm)| m > bm) {
            best = Some((r, m));
        }
    }
    best.map(|(r, _)| r)
}

/// Solves `a x = b`; `None` when `a` is singular.
pub fn solve<F: Scalar>(mut a: Matrix<F>, mut b: Vec<F>) -> Option<Vec<F>> {
    let n = a.len();
    let scale = matrix_scale(&a);
    for col in 0..n {
        let p = pivot_row(&a, col, col, scale)?;
        a.swap(col, p);
        b.swap(col, p);
        let piv = a[col][col].clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / piv.clone();
            for c in col..n {
                let v = a[col][c].clone();
                a[r][c] = a[r][c].clone() - f.clone() * v;
            }
            let bv = b[col].clone();
            b[r] = b[r].clone() - f * bv;
        }
    }
    let mut x = vec![F::zero(); n];
    for r in (0..n).rev() {
        let mut acc = b[r].clone();
        for c in r + 1..n {
            acc = acc - a[r][c].clone() * x[c].clone();
        }
        x[r] = acc / a[r][r].clone();
    }
    Some(x)
}

/// No pivot threshold: callers judge a tiny float determinant against their
/// own bound, so only an exactly vanishing column gives zero.
pub fn determinant<F: Scalar>(mut a: Matrix<F>) -> F {
    let n = a.len();
    let scale = 0.0;
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = pivot_row(&a, col, col, scale) else {
            return F::zero();
        };
        if p != col {
            a.swap(col, p);
            det = -det;
        }
        let piv = a[col][col].clone();
        det = det * piv.clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / piv.clone();
            for c in col..n {
                let v = a[col][c].clone();
                a[r][c] = a[r][c].clone() - f.clone() * v;
            }
        }
    }
    det
}

/// Basis of the right null space of an `m x ncols` matrix, one vector per
/// free column, each with a 1 in its free position.
pub fn nullspace<F: Scalar>(mut a: Matrix<F>, ncols: usize) -> Vec<Vec<F>> {
    let m = a.len();
    let scale = matrix_scale(&a);
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m {
            break;
        }
        let Some(p) = pivot_row(&a, col, row, scale) else {
            continue;
        };
        a.swap(row, p);
        let inv = F::one() / a[row][col].clone();
        for c in col..ncols {
            a[row][c] = a[row][c].clone() * inv.clone();
        }
        for r in 0..m {
            if r == row || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..ncols {
                let v = a[row][c].clone();
                a[r][c] = a[r][c].clone() - f.clone() * v;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![F::zero(); ncols];
            v[free] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][free].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::scalar::Rational;

    fn q(p: i64, d: i64) -> Rational {
        Rational::from_ratio(p, d)
    }

    #[test]
    fn determinant_2x2() {
        let a = vec![vec![q(1, 1), q(1, 2)], vec![q(1, 1), q(2, 3)]];
        assert_eq!(determinant(a), q(1, 6));
    }

    #[test]
    fn determinant_row_swap_flips_sign() {
        let a = vec![vec![q(2, 1), q(3, 1), q(1, 1)], vec![q(1, 2), q(0, 1), q(4, 1)], vec![q(1, 1), q(5, 3), q(2, 1)]];
        let mut b = a.clone();
        b.swap(0, 2);
        assert_eq!(determinant(a), -determinant(b));
    }

    #[test]
    fn solve_exact() {
        let a = vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(3, 1)]];
        let x = solve(a, vec![q(3, 1), q(5, 1)]).unwrap();
        assert_eq!(x, vec![q(4, 5), q(7, 5)]);
        assert!(solve(vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]], vec![q(0, 1), q(0, 1)]).is_none());
    }

    #[test]
    fn nullspace_2x3() {
        let a = vec![vec![q(1, 1), q(1, 2), q(1, 3)], vec![q(1, 1), q(2, 3), q(1, 2)]];
        let ns = nullspace(a, 3);
        assert_eq!(ns, vec![vec![q(1, 6), q(-1, 1), q(1, 1)]]);
    }
}
