use std::fmt;

use crate::ffpoly::{Elem, FiniteField};

pub const MAX_DIM: usize = 8;

/// Square matrix over a small field, stored row-major in a fixed buffer.
/// Entries outside the `dim x dim` block are zero, so the buffer is the
/// canonical encoding used for hashing and ordering.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    dim: u8,
    e: [Elem; MAX_DIM * MAX_DIM],
}

pub type Vector = [Elem; MAX_DIM];

impl Mat {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM);
        Mat { dim: dim as u8, e: [0; MAX_DIM * MAX_DIM] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Mat::zero(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Elem>]) -> Self {
        let mut m = Mat::zero(rows.len());
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), rows.len());
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(dim: usize, cols: &[Vector]) -> Self {
        let mut m = Mat::zero(dim);
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate().take(dim) {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.e[i * MAX_DIM + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.e[i * MAX_DIM + j] = x;
    }

    pub fn column(&self, j: usize) -> Vector {
        let mut v = [0; MAX_DIM];
        for (i, x) in v.iter_mut().enumerate().take(self.dim()) {
            *x = self.get(i, j);
        }
        v
    }

    pub fn mul(&self, other: &Mat, f: &FiniteField) -> Mat {
        let n = self.dim();
        let mut out = Mat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat, f: &FiniteField) -> Mat {
        let n = self.dim();
        let mut out = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, f.add(self.get(i, j), other.get(i, j)));
            }
        }
        out
    }

    pub fn apply(&self, v: &Vector, f: &FiniteField) -> Vector {
        let n = self.dim();
        let mut out = [0; MAX_DIM];
        for (i, o) in out.iter_mut().enumerate().take(n) {
            for (j, &x) in v.iter().enumerate().take(n) {
                *o = f.add(*o, f.mul(self.get(i, j), x));
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.dim())
    }

    pub fn squares_to_identity(&self, f: &FiniteField) -> bool {
        self.mul(self, f).is_identity()
    }

    /// Row echelon form; returns the rank and the determinant.
    fn eliminate(&self, f: &FiniteField) -> (usize, Elem) {
        let n = self.dim();
        let mut m = *self;
        let mut det = 1;
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| m.get(r, col) != 0) else {
                det = 0;
                continue;
            };
            if p != rank {
                for j in 0..n {
                    let (a, b) = (m.get(p, j), m.get(rank, j));
                    m.set(p, j, b);
                    m.set(rank, j, a);
                }
                det = f.neg(det);
            }
            let pivot = m.get(rank, col);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot);
            for r in rank + 1..n {
                let factor = f.mul(m.get(r, col), inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(rank, j)));
                    m.set(r, j, v);
                }
            }
            rank += 1;
        }
        (rank, if rank == n { det } else { 0 })
    }

    pub fn rank(&self, f: &FiniteField) -> usize {
        self.eliminate(f).0
    }

    pub fn det(&self, f: &FiniteField) -> Elem {
        self.eliminate(f).1
    }

    pub fn inverse(&self, f: &FiniteField) -> Option<Mat> {
        let n = self.dim();
        let mut a = *self;
        let mut b = Mat::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| a.get(r, col) != 0)?;
            for j in 0..n {
                let (x, y) = (a.get(p, j), a.get(col, j));
                a.set(p, j, y);
                a.set(col, j, x);
                let (x, y) = (b.get(p, j), b.get(col, j));
                b.set(p, j, y);
                b.set(col, j, x);
            }
            let inv = f.inv(a.get(col, col));
            for j in 0..n {
                a.set(col, j, f.mul(a.get(col, j), inv));
                b.set(col, j, f.mul(b.get(col, j), inv));
            }
            for r in 0..n {
                let factor = a.get(r, col);
                if r == col || factor == 0 {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, f.sub(a.get(r, j), f.mul(factor, a.get(col, j))));
                    b.set(r, j, f.sub(b.get(r, j), f.mul(factor, b.get(col, j))));
                }
            }
        }
        Some(b)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let rows: Vec<Vec<Elem>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect();
        write!(f, "{rows:?}")
    }
}

/// All vectors of `F_q^dim`, in lexicographic order of their coordinates.
pub fn all_vectors(dim: usize, q: u32) -> Vec<Vector> {
    let total = (q as usize).pow(dim as u32);
    (0..total)
        .map(|mut code| {
            let mut v = [0; MAX_DIM];
            for x in v.iter_mut().take(dim).rev() {
                *x = (code % q as usize) as Elem;
                code /= q as usize;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let f = FiniteField::new(3).unwrap();
        let m = Mat::from_rows(&[vec![1, 2], vec![0, 1]]);
        let inv = m.inverse(&f).unwrap();
        assert!(m.mul(&inv, &f).is_identity());
        assert_eq!(m.det(&f), 1);
        let s = Mat::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(s.rank(&f), 1);
        assert_eq!(s.det(&f), 0);
        assert!(s.inverse(&f).is_none());
        let swap = Mat::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.det(&f), 2);
    }

    #[test]
    fn vectors_enumerated() {
        let vs = all_vectors(2, 3);
        assert_eq!(vs.len(), 9);
        assert_eq!(vs[1][..2], [0, 1]);
    }
}
