//! Dense exact linear algebra. Matrices are row-major `Vec<Vec<F>>`.

use super::{Field, Rational, Scalar};

pub type Matrix<F> = Vec<Vec<F>>;

pub fn zeros<F: Field>(rows: usize, cols: usize) -> Matrix<F> {
    vec![vec![F::zero(); cols]; rows]
}

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = F::one();
    }
    m
}

pub fn transpose<F: Clone>(m: &[Vec<F>]) -> Matrix<F> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_vec<F: Field>(m: &[Vec<F>], v: &[F]) -> Vec<F> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

pub fn mat_mul<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Matrix<F> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(F::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone())
                })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = f.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut w = m.to_vec();
    rref(&mut w).len()
}

/// Basis of `{v : M v = 0}`: one vector per free column, with a 1 in that
/// column and zeros in the other free columns, ordered by free column.
pub fn nullspace<F: Field>(m: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut w = m.to_vec();
    let pivots = rref(&mut w);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -w[row][f].clone();
            }
            v
        })
        .collect()
}

/// Unique solution of `M x = b` for square invertible `M`.
pub fn solve<F: Field>(m: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let n = m.len();
    let mut aug: Matrix<F> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Some solution of a possibly rectangular `M x = b` (free variables set to
/// zero), or `None` when the system is inconsistent.
pub fn solve_any<F: Field>(m: &[Vec<F>], b: &[F], cols: usize) -> Option<Vec<F>> {
    let mut aug: Matrix<F> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    if aug.is_empty() {
        return Some(vec![F::zero(); cols]);
    }
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][cols].clone();
    }
    Some(x)
}

pub fn inverse<F: Field>(m: &[Vec<F>]) -> Option<Matrix<F>> {
    let n = m.len();
    let mut aug: Matrix<F> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Determinant over a field by Gaussian elimination.
pub fn det<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut w = m.to_vec();
    let mut acc = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !w[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            w.swap(p, c);
            acc = -acc;
        }
        let piv = w[c][c].clone();
        acc = acc * piv.clone();
        for i in c + 1..n {
            if w[i][c].is_zero() {
                continue;
            }
            let f = w[i][c].clone() / piv.clone();
            for j in c..n {
                let delta = f.clone() * w[c][j].clone();
                w[i][j] = w[i][j].clone() - delta;
            }
        }
    }
    acc
}

/// Exact determinant of a matrix of scalars by fraction-free (Bareiss)
/// elimination. Every intermediate division is exact in ℚ[params].
pub fn det_poly(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    let zero_row = m.iter().any(|r| r.iter().all(Scalar::is_zero));
    let zero_col = (0..n).any(|c| m.iter().all(|r| r[c].is_zero()));
    if zero_row || zero_col {
        return Scalar::zero();
    }
    let mut w = m.to_vec();
    let mut sign = false;
    let mut prev = Scalar::one();
    for k in 0..n - 1 {
        if w[k][k].is_zero() {
            // prefer the sparsest usable pivot row
            let Some(p) = (k + 1..n)
                .filter(|&i| !w[i][k].is_zero())
                .min_by_key(|&i| pivot_weight(&w[i][k]))
            else {
                return Scalar::zero();
            };
            w.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&w[i][j] * &w[k][k]) - &(&w[i][k] * &w[k][j]);
                w[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            w[i][k] = Scalar::zero();
        }
        prev = w[k][k].clone();
    }
    let d = w[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

fn pivot_weight(s: &Scalar) -> usize {
    match s {
        Scalar::Rat(_) => 0,
        Scalar::Poly(p) => p.num_terms(),
    }
}

/// Converts a scalar matrix into field entries, `None` if any entry is not representable.
pub fn to_field<F: Field>(m: &[Vec<Scalar>]) -> Option<Matrix<F>> {
    m.iter()
        .map(|row| row.iter().map(F::from_scalar).collect())
        .collect()
}

pub fn rational_matrix(m: &[Vec<Scalar>]) -> Option<Matrix<Rational>> {
    to_field(m)
}

pub fn scalar_matrix(m: &[Vec<Rational>]) -> Matrix<Scalar> {
    m.iter()
        .map(|row| row.iter().cloned().map(Scalar::Rat).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn nullspace_of_coordinate_functional() {
        let basis = nullspace(&qm(&[&[1, 0, 0]]), 3);
        assert_eq!(basis, vec![vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]]);
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        assert!(nullspace(&identity::<Rational>(3), 3).is_empty());
    }

    #[test]
    fn nullspace_of_empty_system_is_everything() {
        assert_eq!(nullspace::<Rational>(&[], 2).len(), 2);
    }

    #[test]
    fn inverse_and_solve() {
        let m = qm(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(2));
        assert_eq!(solve(&m, &[q(3), q(2)]).unwrap(), vec![q(1), q(1)]);
        assert!(inverse(&qm(&[&[1, 2], &[2, 4]])).is_none());
        assert!(solve(&qm(&[&[1, 2], &[2, 4]]), &[q(1), q(1)]).is_none());
    }

    #[test]
    fn rectangular_solve() {
        let m = qm(&[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(solve_any(&m, &[q(2), q(3)], 3).unwrap(), vec![q(2), q(0), q(3)]);
        assert!(solve_any(&qm(&[&[1, 1], &[1, 1]]), &[q(1), q(2)], 2).is_none());
    }

    #[test]
    fn bareiss_symbolic_2x2() {
        let m = vec![
            vec![Scalar::var("a"), Scalar::var("b")],
            vec![Scalar::var("c"), Scalar::var("d")],
        ];
        assert_eq!(det_poly(&m), Scalar::parse("a*d-b*c").unwrap());
    }

    #[test]
    fn bareiss_identity_and_zero_pivot() {
        let id = scalar_matrix(&identity::<Rational>(3));
        assert_eq!(det_poly(&id), Scalar::one());
        let m = scalar_matrix(&qm(&[&[0, 1], &[1, 0]]));
        assert_eq!(det_poly(&m), Scalar::int(-1));
        assert!(det(&qm(&[&[0, 0], &[1, 1]])).is_zero());
        assert!(det(&qm(&[&[0, 1], &[1, 0]])) == -Rational::one());
    }
}
