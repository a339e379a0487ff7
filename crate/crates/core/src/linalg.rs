//! Exact integer linear algebra on small dense matrices (row-major).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &Matrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Solves `m x = rhs` over the rationals; `None` if `m` is singular.
pub fn solve(m: &Matrix, rhs: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            row.iter()
                .chain(std::iter::once(b))
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..=n {
                    let t = &factor * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

/// Column-style Hermite normal form of a nonsingular square matrix.
///
/// Returns `h` lower triangular with positive diagonal and
/// `0 <= h[i][j] < h[i][i]` for `j < i`, spanning the same column lattice.
pub fn hermite_lower(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut h = m.clone();
    for i in 0..n {
        // Clear row i to the right of the diagonal with gcd column operations.
        for j in i + 1..n {
            if h[i][j].is_zero() {
                continue;
            }
            let a = h[i][i].clone();
            let b = h[i][j].clone();
            let e = a.extended_gcd(&b);
            let (u, v) = (e.x, e.y);
            let (p, q) = (&a / &e.gcd, &b / &e.gcd);
            for row in h.iter_mut().skip(i) {
                let ci = row[i].clone();
                let cj = row[j].clone();
                row[i] = &u * &ci + &v * &cj;
                row[j] = &p * &cj - &q * &ci;
            }
        }
        if h[i][i].is_zero() {
            return None;
        }
        if h[i][i].is_negative() {
            for row in h.iter_mut().skip(i) {
                row[i] = -row[i].clone();
            }
        }
        for j in 0..i {
            let f = h[i][j].div_floor(&h[i][i]);
            if f.is_zero() {
                continue;
            }
            for row in h.iter_mut().skip(i) {
                let t = &f * &row[i];
                row[j] -= t;
            }
        }
    }
    Some(h)
}

/// Characteristic polynomial `det(xI - m)`, little-endian and monic
/// (Faddeev-LeVerrier; every division is exact for integer input).
pub fn charpoly(m: &Matrix) -> Vec<BigInt> {
    let n = m.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk: Matrix = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // mk <- m * mk + c_{n-k+1} I
        let c_prev = coeffs[n - k + 1].clone();
        let mut next = matmul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c_prev;
        }
        mk = next;
        let am = matmul(m, &mk);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -trace / BigInt::from(k);
    }
    coeffs
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..inner).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn cofactor_det(m: &Matrix) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        (0..n)
            .map(|j| {
                let minor: Matrix = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let s = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                s * &m[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let cases = [
            mat(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]),
            mat(&[&[0, 1], &[1, 0]]),
            mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]),
            mat(&[&[0, 0, 1, 2], &[3, 1, 0, 0], &[1, 1, 1, 1], &[2, -7, 5, 0]]),
        ];
        for m in &cases {
            assert_eq!(det(m), cofactor_det(m));
        }
    }

    #[test]
    fn hermite_form_properties() {
        let m = mat(&[&[-1, -1], &[1, -1]]);
        let h = hermite_lower(&m).unwrap();
        assert!(h[0][1].is_zero());
        assert_eq!(&h[0][0] * &h[1][1], det(&m).abs());
        assert!(h[1][0] >= BigInt::zero() && h[1][0] < h[1][1]);
    }

    #[test]
    fn charpoly_of_companion() {
        // Companion of x^3 - x - 1.
        let m = mat(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 0]]);
        let cp = charpoly(&m);
        let expect: Vec<BigInt> = [-1, -1, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(cp, expect);
    }

    #[test]
    fn solve_small_system() {
        let m = mat(&[&[2, 1], &[1, 3]]);
        let x = solve(&m, &[BigInt::from(3), BigInt::from(5)]).unwrap();
        assert_eq!(x[0], BigRational::new(4.into(), 5.into()));
        assert_eq!(x[1], BigRational::new(7.into(), 5.into()));
        assert!(solve(&mat(&[&[1, 2], &[2, 4]]), &[BigInt::one(), BigInt::one()]).is_none());
    }
}
