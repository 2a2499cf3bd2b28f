//! Fraction-free elimination on dense integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Bareiss elimination with row pivoting. Returns the rank and, for square
/// input, the determinant.
fn bareiss(mut a: Vec<Vec<BigInt>>) -> (usize, Option<BigInt>) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let square = rows == cols;
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign = 1i32;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            if square {
                return (rank, Some(BigInt::zero()));
            }
            continue;
        };
        if piv != rank {
            a.swap(piv, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    let det = square.then(|| if rank == rows { prev * sign } else { BigInt::zero() });
    (rank, if rows == 0 && square { Some(BigInt::one()) } else { det })
}

pub fn rank(a: &[Vec<BigInt>]) -> usize {
    bareiss(a.to_vec()).0
}

/// Determinant of a square integer matrix.
pub fn det(a: &[Vec<BigInt>]) -> BigInt {
    assert!(a.iter().all(|r| r.len() == a.len()), "det of a non-square matrix");
    bareiss(a.to_vec()).1.expect("square")
}

/// Basis of the integer kernel `{x : A x = 0}`, each vector primitive with
/// its first nonzero entry positive.
pub fn integer_kernel(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let s = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &s;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..cols {
                    let v = &f * &m[row][c];
                    m[r][c] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i][f].clone();
            }
            primitive(&v)
        })
        .collect()
}

/// Clears denominators and content; first nonzero entry made positive.
pub fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    normalize_content(ints)
}

pub fn normalize_content(ints: Vec<BigInt>) -> Vec<BigInt> {
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let neg = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.into_iter()
        .map(|x| if neg { -(x / &g) } else { x / &g })
        .collect()
}
