use serde::Serialize;

use super::{Builder, IshidaError};
use crate::linalg::binomial;
use crate::polyhedral::{face_cone, FaceId, FaceLattice};

/// Cohomology of the intrinsic Ishida complexes of one face.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FaceCohomology {
    pub face: FaceId,
    pub dim: usize,
    /// `h[m][i] = dim H^i(Ish_τ^m)` for `0 <= m <= dim τ`.
    pub h: Vec<Vec<usize>>,
}

impl FaceCohomology {
    pub fn get(&self, m: usize, i: usize) -> usize {
        self.h.get(m).and_then(|row| row.get(i)).copied().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct Depth {
    pub value: usize,
    /// No Ext in positive degree.
    pub maximal: bool,
}

/// Graded pieces of `Ext^i(Ω̄^k_X, ω_X)` for the affine toric variety of a cone.
///
/// A degree `u` in the relative interior of `σ^∨ ∩ τ^⊥` sees
/// `Λ^• (τ^⊥) ⊗ Ish_τ`, so everything is assembled from the intrinsic
/// complexes of the faces.
#[derive(Clone, Debug, Serialize)]
pub struct ExtTable {
    pub n: usize,
    pub faces: Vec<FaceCohomology>,
}

impl ExtTable {
    pub fn compute(fl: &FaceLattice) -> Result<ExtTable, IshidaError> {
        let faces = fl
            .faces()
            .iter()
            .map(|f| {
                let sub = FaceLattice::new(&face_cone(fl, f.id)?);
                let mut b = Builder::new(&sub);
                let h = (0..=f.dim).map(|m| b.full(m).map(|c| c.cohomology_dims())).collect::<Result<_, _>>()?;
                Ok(FaceCohomology { face: f.id, dim: f.dim, h })
            })
            .collect::<Result<Vec<_>, IshidaError>>()?;
        Ok(ExtTable { n: fl.dim(), faces })
    }

    pub fn face(&self, tau: FaceId) -> &FaceCohomology {
        &self.faces[tau]
    }

    /// Dimensions of `H^i(Ish_X^l)_u` for `u` in the class of `τ`, `0 <= i <= l`.
    pub fn graded_piece_dims(&self, tau: FaceId, l: usize) -> Vec<usize> {
        let fc = &self.faces[tau];
        let codim = self.n - fc.dim;
        (0..=l)
            .map(|i| {
                (0..=codim.min(l))
                    .filter(|&j| l - j <= fc.dim)
                    .map(|j| binomial(codim as i64, j as i64) as usize * fc.get(l - j, i))
                    .sum()
            })
            .collect()
    }

    /// Graded piece of `Ext^i(Ω̄^k, ω)` in the class of `τ`.
    pub fn ext_dim(&self, tau: FaceId, i: usize, k: usize) -> usize {
        if k > self.n || i > self.n - k {
            return 0;
        }
        self.graded_piece_dims(tau, self.n - k)[i]
    }

    /// Whether `Ext^i(Ω̄^k, ω)` is nonzero in some degree.
    pub fn ext_nonzero(&self, i: usize, k: usize) -> bool {
        (0..self.faces.len()).any(|t| self.ext_dim(t, i, k) != 0)
    }

    pub fn depth(&self, k: usize) -> Depth {
        let top = (1..=self.n - k.min(self.n)).rev().find(|&i| self.ext_nonzero(i, k));
        match top {
            Some(i) => Depth { value: self.n - i, maximal: false },
            None => Depth { value: self.n, maximal: true },
        }
    }

    /// `max(0, max{i - k : Ext^i(Ω̄^k, ω) ≠ 0})`.
    pub fn lcdef(&self) -> usize {
        let mut best = 0;
        for k in 0..=self.n {
            for i in k + 1..=self.n - k {
                if self.ext_nonzero(i, k) {
                    best = best.max(i - k);
                }
            }
        }
        best
    }
}
