use rayon::prelude::*;

use super::build::MatrixGroup;
use super::forms::{FormSpace, QuadraticSpace};
use super::matrix::Mat;
use crate::degree_sums::GroupKind;
use crate::error::{Error, Result};
use crate::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coset {
    All,
    SO,
    OMinusSO,
}

/// Whether an orthogonal `g` lies in `SO`: `det g = 1` for odd `q`, even
/// `rank(g + I)` for even `q`.
pub fn so_membership(g: &Mat, space: &QuadraticSpace) -> Result<bool> {
    if g.dim() != space.dim || !space.preserves(g) {
        return Err(Error::NotInGroup);
    }
    let f = &space.field;
    Ok(if f.is_odd() { g.det(f) == 1 } else { g.add(&Mat::identity(space.dim), f).rank(f).is_multiple_of(2) })
}

fn in_coset(g: &Mat, space: &QuadraticSpace, coset: Coset) -> Result<bool> {
    Ok(match coset {
        Coset::All => true,
        Coset::SO => so_membership(g, space)?,
        Coset::OMinusSO => !so_membership(g, space)?,
    })
}

/// `#{g in the coset : g^2 = 1}`, identity included.
pub fn count_involutions(group: &MatrixGroup, coset: Coset) -> Result<u64> {
    let f = group.field().clone();
    let space = match (&group.form, coset) {
        (_, Coset::All) => None,
        (FormSpace::Quadratic(s), _) => Some(s),
        (FormSpace::Symplectic(_), _) => return Err(Error::InvalidCoset(group.spec.to_string())),
    };
    group
        .elements()
        .par_iter()
        .map(|g| {
            if !g.squares_to_identity(&f) {
                return Ok(0);
            }
            match space {
                Some(s) => Ok(in_coset(g, s, coset)? as u64),
                None => Ok(1),
            }
        })
        .sum()
}

/// `#{g in Sp : y g y^-1 = g^-1}` with `y = diag(I, -I)`, i.e. `#{g : (yg)^2 = 1}`.
pub fn count_twisted_involutions_sp(group: &MatrixGroup) -> Result<u64> {
    let FormSpace::Symplectic(space) = &group.form else {
        return Err(Error::OutOfRange(format!("{} is not symplectic", group.spec)));
    };
    let f = group.field().clone();
    if !f.is_odd() {
        return Err(Error::ParityMismatch(format!("twisted count needs odd q, got {}", f.q())));
    }
    let y = space.skew_involution();
    Ok(group.elements().par_iter().filter(|g| y.mul(g, &f).squares_to_identity(&f)).count() as u64)
}

/// Involutions of `O \ SO`, in the ambient group's order.
pub fn coset_involutions(ambient: &MatrixGroup) -> Result<Vec<Mat>> {
    let space = ambient.quadratic().ok_or_else(|| Error::InvalidCoset(ambient.spec.to_string()))?;
    let f = ambient.field().clone();
    let mut out = Vec::new();
    for g in ambient.elements() {
        if g.squares_to_identity(&f) && !so_membership(g, space)? {
            out.push(*g);
        }
    }
    Ok(out)
}

/// An involution `h` in `O \ SO` defining `sigma`: the middle coordinate swap
/// for the split form, the first coset involution otherwise.
pub fn coset_representative(ambient: &MatrixGroup) -> Result<Mat> {
    let space = ambient.quadratic().ok_or_else(|| Error::InvalidCoset(ambient.spec.to_string()))?;
    if space.sign == Sign::Plus {
        return Ok(space.middle_swap());
    }
    coset_involutions(ambient)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Infeasible(format!("no involution outside SO in {}", ambient.spec)))
}

/// `#{g in SO : h g h^-1 = g^-1}` for an involution `h` outside `SO`.
pub fn count_sigma_twisted(so: &MatrixGroup, h: &Mat) -> u64 {
    let f = so.field().clone();
    so.elements().par_iter().filter(|g| h.mul(g, &f).squares_to_identity(&f)).count() as u64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaRealReport {
    pub checked: usize,
    pub coset_involutions: usize,
    pub failures: Vec<Mat>,
}

impl SigmaRealReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that each `g` in `SO` is inverted by some involution `k` in
/// `O \ SO`; `k g k = g^-1` is tested as `(kg)^2 = 1`.
pub fn check_strongly_sigma_real(so: &MatrixGroup, ambient: &MatrixGroup) -> Result<SigmaRealReport> {
    if so.spec.kind != GroupKind::SO || ambient.spec.kind != GroupKind::O {
        return Err(Error::OutOfRange("expected an SO group and its orthogonal group".into()));
    }
    if so.spec.n.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!("dimension {} is not 2 mod 4", 2 * so.spec.n)));
    }
    let ks = coset_involutions(ambient)?;
    let f = so.field().clone();
    let mut failures: Vec<Mat> = so
        .elements()
        .par_iter()
        .filter(|g| !ks.iter().any(|k| k.mul(g, &f).squares_to_identity(&f)))
        .copied()
        .collect();
    failures.sort();
    Ok(SigmaRealReport { checked: so.len(), coset_involutions: ks.len(), failures })
}
