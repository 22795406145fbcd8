//! Ishida complexes of a cone and the Ext groups they compute.
//!
//! The degree-`i` term of `Ish_σ^l` is `⊕_{dim μ = i} Λ^{l-i} μ^⊥`, and the
//! component `μ → τ` of the differential is contraction with the normal step
//! vector `n_{μ,τ}`.

mod checks;
mod ext;

pub use checks::{
    d_squared_failures, verify_d_squared, verify_h0, verify_ish_n_exact, verify_simple_vanishing, verify_simplicial_link_exactness,
    verify_surjectivity, CheckReport,
};
pub use ext::{Depth, ExtTable, FaceCohomology};

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{interior_product_matrix, rank_exact, to_rational, LinalgError, WedgeBasis};
use crate::polyhedral::{normal_step_vector, FaceId, FaceLattice, PolyError};
use crate::{RatMatrix, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IshidaError {
    #[error("degree {l} is outside 0..={n}")]
    DegreeOutOfRange { l: usize, n: usize },
    #[error("face {0} is not a face of this cone")]
    UnknownFace(FaceId),
    #[error("quotient by face {0} is not simplicial")]
    QuotientNotSimplicial(FaceId),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// One summand `Λ^{l - dim μ} μ^⊥` of a term.
#[derive(Clone, Debug)]
pub struct Block {
    pub face: FaceId,
    pub offset: usize,
    pub basis: WedgeBasis,
}

#[derive(Clone, Debug)]
pub struct IshidaComplex {
    pub n: usize,
    pub l: usize,
    /// Dimension of the faces sitting in degree 0.
    pub base_dim: usize,
    pub terms: Vec<Vec<Block>>,
    pub term_dims: Vec<usize>,
    /// `d^i : C^i → C^{i+1}`, rows indexing `C^{i+1}`.
    pub differentials: Vec<RatMatrix>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ComplexSummary {
    pub l: usize,
    pub term_dims: Vec<usize>,
    pub cohomology: Vec<usize>,
}

impl IshidaComplex {
    /// `h^i = dim C^i - rank d^i - rank d^{i-1}`.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(rank_exact).collect();
        (0..self.term_dims.len())
            .map(|i| {
                let out = ranks.get(i).copied().unwrap_or(0);
                let inc = if i == 0 { 0 } else { ranks[i - 1] };
                self.term_dims[i] - out - inc
            })
            .collect()
    }

    pub fn summary(&self) -> ComplexSummary {
        ComplexSummary { l: self.l, term_dims: self.term_dims.clone(), cohomology: self.cohomology_dims() }
    }
}

/// Builds Ishida complexes for one cone, caching step vectors.
pub struct Builder<'a> {
    fl: &'a FaceLattice,
    steps: HashMap<(FaceId, FaceId), Vec<Rational>>,
    lift_seed: Option<u64>,
}

impl<'a> Builder<'a> {
    pub fn new(fl: &'a FaceLattice) -> Self {
        Builder { fl, steps: HashMap::new(), lift_seed: None }
    }

    /// Step vectors are only defined modulo `span μ`. This builder adds a
    /// seeded random lattice vector of `span μ` to each one; the resulting
    /// complexes must be identical.
    pub fn with_lift_shift(fl: &'a FaceLattice, seed: u64) -> Self {
        Builder { fl, steps: HashMap::new(), lift_seed: Some(seed) }
    }

    fn step(&mut self, mu: FaceId, tau: FaceId) -> Result<Vec<Rational>, IshidaError> {
        if let Some(v) = self.steps.get(&(mu, tau)) {
            return Ok(v.clone());
        }
        let mut v = normal_step_vector(self.fl, mu, tau)?;
        if let Some(seed) = self.lift_seed {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((mu as u64) << 32) ^ tau as u64);
            for b in self.fl.lattice_basis(mu) {
                let c = BigInt::from(rng.gen_range(-5i64..=5));
                for (x, y) in v.iter_mut().zip(&b) {
                    *x += &c * y;
                }
            }
        }
        let v = to_rational(&v);
        self.steps.insert((mu, tau), v.clone());
        Ok(v)
    }

    /// `Ish_σ^l`.
    pub fn full(&mut self, l: usize) -> Result<IshidaComplex, IshidaError> {
        let n = self.fl.dim();
        if l > n {
            return Err(IshidaError::DegreeOutOfRange { l, n });
        }
        let faces: Vec<FaceId> = (0..self.fl.len()).collect();
        self.on_faces(l, &faces, 0)
    }

    /// The complex `V_μ^l → ⊕ V_λ^l → …` over faces containing `μ`, starting
    /// in degree 0 at `μ`.
    pub fn above(&mut self, mu: FaceId, l: usize) -> Result<IshidaComplex, IshidaError> {
        let n = self.fl.dim();
        if l > n {
            return Err(IshidaError::DegreeOutOfRange { l, n });
        }
        if mu >= self.fl.len() {
            return Err(IshidaError::UnknownFace(mu));
        }
        let faces = self.fl.superfaces(mu);
        self.on_faces(l, &faces, self.fl.face(mu).dim)
    }

    /// Complex on a set of faces closed under the relevant covers, with faces of
    /// dimension `base_dim + i` in degree `i`, up to dimension `l`.
    fn on_faces(&mut self, l: usize, faces: &[FaceId], base_dim: usize) -> Result<IshidaComplex, IshidaError> {
        let fl = self.fl;
        let n = fl.dim();
        let mut terms: Vec<Vec<Block>> = Vec::new();
        let mut term_dims = Vec::new();
        let mut position: HashMap<FaceId, (usize, usize)> = HashMap::new();
        for d in base_dim..=l {
            let mut blocks = Vec::new();
            let mut offset = 0;
            for &f in fl.faces_of_dim(d) {
                if !faces.contains(&f) {
                    continue;
                }
                let basis = WedgeBasis::new(&fl.face(f).perp_basis, n, l - d)?;
                position.insert(f, (d - base_dim, blocks.len()));
                let size = basis.dim();
                blocks.push(Block { face: f, offset, basis });
                offset += size;
            }
            terms.push(blocks);
            term_dims.push(offset);
        }
        let mut differentials = Vec::new();
        for i in 0..terms.len().saturating_sub(1) {
            let mut m = RatMatrix::zeros(term_dims[i + 1], term_dims[i]);
            for src in &terms[i] {
                for &tau in fl.covers_up(src.face) {
                    let Some(&(deg, idx)) = position.get(&tau) else { continue };
                    debug_assert_eq!(deg, i + 1);
                    let tgt = &terms[i + 1][idx];
                    let step = self.step(src.face, tau)?;
                    let block = interior_product_matrix(&src.basis, &tgt.basis, &step)?;
                    for r in 0..block.nrows() {
                        for c in 0..block.ncols() {
                            let v = block.get(r, c);
                            if !num_traits::Zero::is_zero(v) {
                                m.set(tgt.offset + r, src.offset + c, v.clone());
                            }
                        }
                    }
                }
            }
            differentials.push(m);
        }
        Ok(IshidaComplex { n, l, base_dim, terms, term_dims, differentials })
    }
}

/// `Ish_σ^l` for a cone given by its face lattice.
pub fn build(fl: &FaceLattice, l: usize) -> Result<IshidaComplex, IshidaError> {
    Builder::new(fl).full(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::binomial;
    use crate::Cone;
    use num_bigint::BigInt;

    fn cone(rays: &[&[i64]]) -> Cone {
        let n = rays[0].len();
        Cone::from_rays(n, rays.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn term_dims_count_faces() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let fl = FaceLattice::new(&c);
        let ish = build(&fl, 3).unwrap();
        assert_eq!(ish.term_dims, vec![1, 4, 4, 1]);
        for l in 0..=3 {
            let ish = build(&fl, l).unwrap();
            for i in 0..=l {
                let expected: i64 =
                    fl.faces_of_dim(i).len() as i64 * binomial(3 - i as i64, (l - i) as i64);
                assert_eq!(ish.term_dims[i] as i64, expected);
            }
        }
    }

    #[test]
    fn degree_out_of_range() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        let fl = FaceLattice::new(&c);
        assert_eq!(build(&fl, 3).unwrap_err(), IshidaError::DegreeOutOfRange { l: 3, n: 2 });
    }

    #[test]
    fn shifted_lifts_give_the_same_differentials() {
        let c = cone(&[&[1, 0, 0, 1], &[0, 1, 0, 1], &[1, 1, 0, 1], &[0, 0, 1, 1], &[1, 0, 1, 1]]);
        let fl = FaceLattice::new(&c);
        for seed in 0..3 {
            let mut plain = Builder::new(&fl);
            let mut shifted = Builder::with_lift_shift(&fl, seed);
            for l in 0..=4 {
                let a = plain.full(l).unwrap();
                let b = shifted.full(l).unwrap();
                assert_eq!(a.differentials, b.differentials);
            }
        }
    }

    #[test]
    fn orthant_top_complex_is_exact() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let fl = FaceLattice::new(&c);
        assert_eq!(build(&fl, 3).unwrap().cohomology_dims(), vec![0, 0, 0, 0]);
        assert_eq!(build(&fl, 0).unwrap().cohomology_dims(), vec![1]);
    }
}
