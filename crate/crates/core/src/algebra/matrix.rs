use std::array;
use std::fmt;
use std::ops::Mul;

use super::Poly;
use crate::scalar::{Field, Ring};

/// Square 4×4 matrix over a ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat4<T>(pub [[T; 4]; 4]);

/// Square 2×2 matrix over a ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2<T>(pub [[T; 2]; 2]);

impl<T: Ring> Mat4<T> {
    pub fn from_fn(f: impl Fn(usize, usize) -> T) -> Self {
        Mat4(array::from_fn(|i| array::from_fn(|j| f(i, j))))
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| T::zero())
    }

    pub fn diag(d: [T; 4]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { T::zero() })
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.0[i][j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat4<U> {
        Mat4::from_fn(|i, j| f(&self.0[i][j]))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].clone() - o.0[i][j].clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| &acc * self)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Determinant by cofactor expansion; works over any commutative ring,
    /// including polynomial rings.
    pub fn det(&self) -> T {
        let m = &self.0;
        let minor2 = |r0: usize, r1: usize, c0: usize, c1: usize| {
            m[r0][c0].clone() * m[r1][c1].clone() - m[r0][c1].clone() * m[r1][c0].clone()
        };
        // Laplace along the first two rows.
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut acc = T::zero();
        for &(c0, c1) in &pairs {
            let rest: Vec<usize> = (0..4).filter(|c| *c != c0 && *c != c1).collect();
            let top = minor2(0, 1, c0, c1);
            let bottom = minor2(2, 3, rest[0], rest[1]);
            let term = top * bottom;
            // sign of the column permutation (c0, c1, rest...)
            if (c0 + c1 + 1) % 2 == 0 {
                acc = acc + term;
            } else {
                acc = acc - term;
            }
        }
        acc
    }

    /// `det(M − x·I)`.
    pub fn charpoly(&self) -> Poly<T> {
        let x = Poly::<T>::x();
        Mat4::from_fn(|i, j| {
            let c = Poly::constant(self.0[i][j].clone());
            if i == j {
                c - x.clone()
            } else {
                c
            }
        })
        .det()
    }
}

impl<T: Field> Mat4<T> {
    /// Gauss–Jordan inverse; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let mut a = self.0.clone();
        let mut inv = Self::identity().0;
        for col in 0..4 {
            let piv = (col..4).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let s = a[col][col].inv()?;
            for j in 0..4 {
                a[col][j] = a[col][j].clone() * s.clone();
                inv[col][j] = inv[col][j].clone() * s.clone();
            }
            for r in 0..4 {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..4 {
                        a[r][j] = a[r][j].clone() - f.clone() * a[col][j].clone();
                        inv[r][j] = inv[r][j].clone() - f.clone() * inv[col][j].clone();
                    }
                }
            }
        }
        Some(Mat4(inv))
    }
}

impl<T: Ring> Mul for &Mat4<T> {
    type Output = Mat4<T>;
    fn mul(self, o: &Mat4<T>) -> Mat4<T> {
        Mat4::from_fn(|i, j| {
            (0..4).fold(T::zero(), |acc, k| acc + self.0[i][k].clone() * o.0[k][j].clone())
        })
    }
}

impl<T: Ring> Mul for Mat4<T> {
    type Output = Mat4<T>;
    fn mul(self, o: Mat4<T>) -> Mat4<T> {
        &self * &o
    }
}

impl<T: fmt::Display> fmt::Display for Mat4<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl<T: Ring> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn identity() -> Self {
        Mat2::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn det(&self) -> T {
        let m = &self.0;
        m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone()
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Mat2::new(m[0][0].clone(), m[1][0].clone(), m[0][1].clone(), m[1][1].clone())
    }
}

impl<T: Field> Mat2<T> {
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det().inv()?;
        let m = &self.0;
        Some(Mat2::new(
            m[1][1].clone() * d.clone(),
            -(m[0][1].clone() * d.clone()),
            -(m[1][0].clone() * d.clone()),
            m[0][0].clone() * d,
        ))
    }
}

impl<T: Ring> Mul for &Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, o: &Mat2<T>) -> Mat2<T> {
        let (a, b) = (&self.0, &o.0);
        let e = |i: usize, j: usize| a[i][0].clone() * b[0][j].clone() + a[i][1].clone() * b[1][j].clone();
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl<T: Ring> Mul for Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, o: Mat2<T>) -> Mat2<T> {
        &self * &o
    }
}

impl<T: fmt::Display> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}
