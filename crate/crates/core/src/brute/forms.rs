use std::sync::Arc;

use super::matrix::{Mat, Vector, MAX_DIM};
use crate::error::{Error, Result};
use crate::ffpoly::{Elem, FiniteField};
use crate::Sign;

/// A quadratic form `Q(v) = sum_{i <= j} a_ij v_i v_j` on `F_q^dim`, with its
/// polar form `B(u, v) = Q(u + v) - Q(u) - Q(v)`.
#[derive(Clone, Debug)]
pub struct QuadraticSpace {
    pub field: Arc<FiniteField>,
    pub dim: usize,
    pub sign: Sign,
    upper: [[Elem; MAX_DIM]; MAX_DIM],
    polar: [[Elem; MAX_DIM]; MAX_DIM],
}

impl QuadraticSpace {
    /// `x_1 x_{2n} + ... + x_n x_{n+1}`; for the minus type the middle pair
    /// `x_n x_{n+1}` is replaced by an anisotropic binary form.
    pub fn new(n: usize, q: u32, sign: Sign) -> Result<Self> {
        let dim = 2 * n;
        if n == 0 || dim > MAX_DIM {
            return Err(Error::Infeasible(format!("dimension {dim} not supported")));
        }
        let field = FiniteField::shared(q)?;
        let mut upper = [[0; MAX_DIM]; MAX_DIM];
        for i in 0..n {
            upper[i][dim - 1 - i] = 1;
        }
        if sign == Sign::Minus {
            let (a, b) = (n - 1, n);
            upper[a][b] = 0;
            upper[a][a] = 1;
            if field.is_odd() {
                let delta = field.elements().find(|&d| d != 0 && !field.is_square(d)).expect("non-square");
                upper[b][b] = field.neg(delta);
            } else {
                let f = &field;
                let c = f
                    .elements()
                    .find(|&c| f.elements().all(|t| f.add(f.add(f.mul(t, t), t), c) != 0))
                    .expect("irreducible t^2 + t + c");
                upper[a][b] = 1;
                upper[b][b] = c;
            }
        }
        let mut polar = [[0; MAX_DIM]; MAX_DIM];
        for i in 0..dim {
            for j in 0..dim {
                polar[i][j] = field.add(upper[i][j], upper[j][i]);
            }
        }
        Ok(QuadraticSpace { field, dim, sign, upper, polar })
    }

    pub fn q_value(&self, v: &Vector) -> Elem {
        let f = &self.field;
        let mut acc = 0;
        for i in 0..self.dim {
            if v[i] == 0 {
                continue;
            }
            for j in i..self.dim {
                let a = self.upper[i][j];
                if a != 0 && v[j] != 0 {
                    acc = f.add(acc, f.mul(a, f.mul(v[i], v[j])));
                }
            }
        }
        acc
    }

    pub fn polar(&self, u: &Vector, v: &Vector) -> Elem {
        bilinear(&self.field, &self.polar, self.dim, u, v)
    }

    /// `Q(e_i)`.
    pub fn basis_value(&self, i: usize) -> Elem {
        self.upper[i][i]
    }

    pub fn basis_polar(&self, i: usize, j: usize) -> Elem {
        self.polar[i][j]
    }

    pub fn preserves(&self, g: &Mat) -> bool {
        let cols: Vec<Vector> = (0..self.dim).map(|j| g.column(j)).collect();
        (0..self.dim).all(|i| {
            self.q_value(&cols[i]) == self.basis_value(i)
                && (0..i).all(|j| self.polar(&cols[i], &cols[j]) == self.basis_polar(i, j))
        })
    }

    /// `v -> v - (B(v, w) / Q(w)) w`, for `Q(w) != 0`. For even `q` this is an
    /// orthogonal transvection.
    pub fn reflection(&self, w: &Vector) -> Option<Mat> {
        let f = &self.field;
        let qw = self.q_value(w);
        if qw == 0 {
            return None;
        }
        let mut cols = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let mut e = [0; MAX_DIM];
            e[j] = 1;
            let c = f.div(self.polar(&e, w), qw);
            for i in 0..self.dim {
                e[i] = f.sub(e[i], f.mul(c, w[i]));
            }
            cols.push(e);
        }
        Some(Mat::from_columns(self.dim, &cols))
    }

    /// The coordinate swap of the middle pair, an element of `O \ SO` for the
    /// split form.
    pub fn middle_swap(&self) -> Mat {
        let n = self.dim / 2;
        let mut m = Mat::identity(self.dim);
        m.set(n - 1, n - 1, 0);
        m.set(n, n, 0);
        m.set(n - 1, n, 1);
        m.set(n, n - 1, 1);
        m
    }
}

fn bilinear(f: &FiniteField, m: &[[Elem; MAX_DIM]; MAX_DIM], dim: usize, u: &Vector, v: &Vector) -> Elem {
    let mut acc = 0;
    for i in 0..dim {
        if u[i] == 0 {
            continue;
        }
        for j in 0..dim {
            let a = m[i][j];
            if a != 0 && v[j] != 0 {
                acc = f.add(acc, f.mul(u[i], f.mul(a, v[j])));
            }
        }
    }
    acc
}

/// `<v, w> = v^T [[0, -I], [I, 0]] w` on `F_q^{2n}`.
#[derive(Clone, Debug)]
pub struct SymplecticSpace {
    pub field: Arc<FiniteField>,
    pub dim: usize,
    gram: [[Elem; MAX_DIM]; MAX_DIM],
}

impl SymplecticSpace {
    pub fn new(n: usize, q: u32) -> Result<Self> {
        let dim = 2 * n;
        if n == 0 || dim > MAX_DIM {
            return Err(Error::Infeasible(format!("dimension {dim} not supported")));
        }
        let field = FiniteField::shared(q)?;
        let mut gram = [[0; MAX_DIM]; MAX_DIM];
        for i in 0..n {
            gram[i][n + i] = field.neg(1);
            gram[n + i][i] = 1;
        }
        Ok(SymplecticSpace { field, dim, gram })
    }

    pub fn pairing(&self, u: &Vector, v: &Vector) -> Elem {
        bilinear(&self.field, &self.gram, self.dim, u, v)
    }

    pub fn basis_pairing(&self, i: usize, j: usize) -> Elem {
        self.gram[i][j]
    }

    pub fn preserves(&self, g: &Mat) -> bool {
        let cols: Vec<Vector> = (0..self.dim).map(|j| g.column(j)).collect();
        (0..self.dim).all(|i| (0..i).all(|j| self.pairing(&cols[i], &cols[j]) == self.gram[i][j]))
    }

    /// `x -> x + lambda <x, v> v`.
    pub fn transvection(&self, v: &Vector, lambda: Elem) -> Mat {
        let f = &self.field;
        let mut cols = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let mut e = [0; MAX_DIM];
            e[j] = 1;
            let c = f.mul(lambda, self.pairing(&e, v));
            for i in 0..self.dim {
                e[i] = f.add(e[i], f.mul(c, v[i]));
            }
            cols.push(e);
        }
        Mat::from_columns(self.dim, &cols)
    }

    /// `diag(I_n, -I_n)`, which scales the form by `-1`.
    pub fn skew_involution(&self) -> Mat {
        let n = self.dim / 2;
        let mut m = Mat::identity(self.dim);
        for i in n..self.dim {
            m.set(i, i, self.field.neg(1));
        }
        m
    }
}

#[derive(Clone, Debug)]
pub enum FormSpace {
    Quadratic(QuadraticSpace),
    Symplectic(SymplecticSpace),
}

impl FormSpace {
    pub fn field(&self) -> &Arc<FiniteField> {
        match self {
            FormSpace::Quadratic(s) => &s.field,
            FormSpace::Symplectic(s) => &s.field,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            FormSpace::Quadratic(s) => s.dim,
            FormSpace::Symplectic(s) => s.dim,
        }
    }

    pub fn preserves(&self, g: &Mat) -> bool {
        match self {
            FormSpace::Quadratic(s) => s.preserves(g),
            FormSpace::Symplectic(s) => s.preserves(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute::matrix::all_vectors;

    #[test]
    fn minus_forms_are_anisotropic_in_the_middle() {
        for q in [2, 3, 4, 5] {
            let s = QuadraticSpace::new(1, q, Sign::Minus).unwrap();
            let zeros = all_vectors(2, q).iter().filter(|v| s.q_value(v) == 0).count();
            assert_eq!(zeros, 1, "q={q}");
            let p = QuadraticSpace::new(1, q, Sign::Plus).unwrap();
            let zeros = all_vectors(2, q).iter().filter(|v| p.q_value(v) == 0).count();
            assert_eq!(zeros as u32, 2 * q - 1, "q={q}");
        }
    }

    #[test]
    fn even_q_polar_form_is_alternating() {
        let s = QuadraticSpace::new(2, 2, Sign::Minus).unwrap();
        for v in all_vectors(4, 2) {
            assert_eq!(s.polar(&v, &v), 0);
        }
    }

    #[test]
    fn reflections_and_transvections_preserve_forms() {
        let s = QuadraticSpace::new(2, 3, Sign::Plus).unwrap();
        let f = s.field.clone();
        for w in all_vectors(4, 3) {
            if let Some(r) = s.reflection(&w) {
                assert!(s.preserves(&r));
                assert!(r.squares_to_identity(&f));
            }
        }
        let sp = SymplecticSpace::new(2, 3).unwrap();
        for v in all_vectors(4, 3).iter().skip(1) {
            assert!(sp.preserves(&sp.transvection(v, 1)));
        }
        let y = sp.skew_involution();
        let u = [1, 0, 0, 0, 0, 0, 0, 0];
        let v = [0, 0, 1, 0, 0, 0, 0, 0];
        assert_eq!(sp.pairing(&y.apply(&u, &f), &y.apply(&v, &f)), f.neg(sp.pairing(&u, &v)));
    }
}
