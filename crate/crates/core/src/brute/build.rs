use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use num_traits::ToPrimitive;

use super::forms::{FormSpace, QuadraticSpace, SymplecticSpace};
use super::matrix::{all_vectors, Mat, Vector};
use crate::degree_sums::{group_order, GroupKind, GroupSpec};
use crate::error::{Error, Result};
use crate::ffpoly::FiniteField;
use crate::Sign;

/// Largest group the oracle will build.
pub const MAX_BRUTE_ORDER: u64 = 200_000;
/// Full enumeration is chosen when `q^(dim^2)` is at most this.
pub const ENUMERATION_BOUND: f64 = 4.5e7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildStrategy {
    /// Enumeration when `q^(dim^2) <= ENUMERATION_BOUND`, closure otherwise.
    Auto,
    /// Every matrix preserving the form, found column by column.
    Enumerate,
    /// Breadth-first closure from reflections or transvections.
    Closure,
}

/// A complete, sorted element list of a classical group.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub spec: GroupSpec,
    pub form: FormSpace,
    elements: Vec<Mat>,
}

impl MatrixGroup {
    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.form.field()
    }

    pub fn contains(&self, g: &Mat) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn quadratic(&self) -> Option<&QuadraticSpace> {
        match &self.form {
            FormSpace::Quadratic(s) => Some(s),
            FormSpace::Symplectic(_) => None,
        }
    }
}

fn target_order(spec: &GroupSpec) -> Result<u64> {
    let order = group_order(spec)?;
    match order.to_u64() {
        Some(o) if o <= MAX_BRUTE_ORDER => Ok(o),
        _ => Err(Error::Infeasible(format!("{spec} has order {order} > {MAX_BRUTE_ORDER}"))),
    }
}

fn form_for(spec: &GroupSpec) -> Result<FormSpace> {
    let n = spec.n as usize;
    Ok(match spec.kind {
        GroupKind::Sp => FormSpace::Symplectic(SymplecticSpace::new(n, spec.q)?),
        _ => FormSpace::Quadratic(QuadraticSpace::new(n, spec.q, spec.sign.unwrap_or(Sign::Plus))?),
    })
}

/// Backtracking over columns: column `i` must have the right `Q` value (or
/// none, for the symplectic form) and the right pairing with every earlier
/// column. This lists exactly the matrices preserving the form.
fn enumerate(form: &FormSpace) -> Vec<Mat> {
    let dim = form.dim();
    let field = form.field().clone();
    let vectors = all_vectors(dim, field.q());
    let candidates: Vec<Vec<Vector>> = (0..dim)
        .map(|i| match form {
            FormSpace::Quadratic(s) => vectors.iter().copied().filter(|v| s.q_value(v) == s.basis_value(i)).collect(),
            FormSpace::Symplectic(_) => vectors.iter().copied().skip(1).collect(),
        })
        .collect();
    let pair_ok = |i: usize, j: usize, u: &Vector, v: &Vector| match form {
        FormSpace::Quadratic(s) => s.polar(u, v) == s.basis_polar(i, j),
        FormSpace::Symplectic(s) => s.pairing(u, v) == s.basis_pairing(i, j),
    };
    let mut out = Vec::new();
    let mut cols: Vec<Vector> = Vec::with_capacity(dim);
    fn go(
        i: usize,
        dim: usize,
        cols: &mut Vec<Vector>,
        candidates: &[Vec<Vector>],
        pair_ok: &dyn Fn(usize, usize, &Vector, &Vector) -> bool,
        out: &mut Vec<Mat>,
    ) {
        if i == dim {
            out.push(Mat::from_columns(dim, cols));
            return;
        }
        for v in &candidates[i] {
            if (0..i).all(|j| pair_ok(i, j, v, &cols[j])) {
                cols.push(*v);
                go(i + 1, dim, cols, candidates, pair_ok, out);
                cols.pop();
            }
        }
    }
    go(0, dim, &mut cols, &candidates, &pair_ok, &mut out);
    out
}

fn generators(form: &FormSpace) -> Vec<Mat> {
    let dim = form.dim();
    let field = form.field();
    let mut gens: Vec<Mat> = match form {
        FormSpace::Quadratic(s) => all_vectors(dim, field.q()).iter().filter_map(|w| s.reflection(w)).collect(),
        FormSpace::Symplectic(s) => {
            let vs = all_vectors(dim, field.q());
            let mut g = Vec::new();
            for v in vs.iter().skip(1) {
                for lambda in field.elements().skip(1) {
                    g.push(s.transvection(v, lambda));
                }
            }
            g
        }
    };
    gens.sort();
    gens.dedup();
    gens
}

fn closure(gens: &[Mat], dim: usize, field: &FiniteField, limit: u64) -> Vec<Mat> {
    let mut seen: HashSet<Mat> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = Mat::identity(dim);
    seen.insert(id);
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.mul(s, field);
            if seen.insert(h) {
                queue.push_back(h);
                if seen.len() as u64 > limit {
                    return seen.into_iter().collect();
                }
            }
        }
    }
    seen.into_iter().collect()
}

fn so_filter(elements: Vec<Mat>, space: &QuadraticSpace) -> Result<Vec<Mat>> {
    let mut out = Vec::with_capacity(elements.len() / 2);
    for g in elements {
        if super::count::so_membership(&g, space)? {
            out.push(g);
        }
    }
    Ok(out)
}

/// Builds `O`, `SO` or `Sp` as a full element list, asserting the order.
pub fn build_group(spec: &GroupSpec) -> Result<MatrixGroup> {
    build_group_with(spec, BuildStrategy::Auto)
}

pub fn build_group_with(spec: &GroupSpec, strategy: BuildStrategy) -> Result<MatrixGroup> {
    if spec.kind != GroupKind::Sp && spec.sign.is_none() {
        return Err(Error::OutOfRange("orthogonal groups need a type".into()));
    }
    let target = target_order(spec)?;
    let form = form_for(spec)?;
    let field = form.field().clone();
    let dim = form.dim();
    let full_target = match spec.kind {
        GroupKind::SO => target * 2,
        _ => target,
    };
    let enumerate_first = match strategy {
        BuildStrategy::Enumerate => true,
        BuildStrategy::Closure => false,
        BuildStrategy::Auto => (field.q() as f64).powi((dim * dim) as i32) <= ENUMERATION_BOUND,
    };
    let mut elements = if enumerate_first {
        enumerate(&form)
    } else {
        let found = closure(&generators(&form), dim, &field, full_target);
        if found.len() as u64 == full_target {
            found
        } else if strategy == BuildStrategy::Closure {
            return Err(Error::ClosureStalled { reached: found.len(), target: full_target as usize });
        } else {
            // reflections fail to generate in a few small cases
            enumerate(&form)
        }
    };
    if let (GroupKind::SO, FormSpace::Quadratic(space)) = (spec.kind, &form) {
        let total = elements.len();
        elements = so_filter(elements, space)?;
        if elements.len() * 2 != total {
            return Err(Error::Infeasible(format!("SO is not of index 2 in {total} elements")));
        }
    }
    if elements.len() as u64 != target {
        return Err(Error::ClosureStalled { reached: elements.len(), target: target as usize });
    }
    elements.sort();
    Ok(MatrixGroup { spec: *spec, form, elements })
}

/// The orthogonal group containing an `SO` spec, or the spec itself.
pub fn ambient_orthogonal(spec: &GroupSpec) -> GroupSpec {
    GroupSpec { kind: GroupKind::O, ..*spec }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_groups() {
        let o = build_group(&GroupSpec::orthogonal(1, 2, Sign::Plus)).unwrap();
        assert_eq!(o.len(), 2);
        let sp = build_group(&GroupSpec::symplectic(1, 3)).unwrap();
        assert_eq!(sp.len(), 24);
        let so = build_group(&GroupSpec::special_orthogonal(1, 3, Sign::Minus)).unwrap();
        assert_eq!(so.len(), 4);
    }

    #[test]
    fn closure_stalls_for_split_four_two() {
        let spec = GroupSpec::orthogonal(2, 2, Sign::Plus);
        let err = build_group_with(&spec, BuildStrategy::Closure).unwrap_err();
        assert!(matches!(err, Error::ClosureStalled { .. }));
        assert_eq!(build_group(&spec).unwrap().len(), 72);
    }

    #[test]
    fn closure_agrees_with_enumeration() {
        for spec in [
            GroupSpec::orthogonal(2, 2, Sign::Minus),
            GroupSpec::orthogonal(2, 3, Sign::Plus),
            GroupSpec::symplectic(2, 2),
        ] {
            let a = build_group_with(&spec, BuildStrategy::Closure).unwrap();
            let b = build_group_with(&spec, BuildStrategy::Enumerate).unwrap();
            assert_eq!(a.elements(), b.elements(), "{spec}");
        }
    }

    #[test]
    fn infeasible_is_reported() {
        assert!(matches!(build_group(&GroupSpec::orthogonal(3, 3, Sign::Plus)), Err(Error::Infeasible(_))));
    }
}
