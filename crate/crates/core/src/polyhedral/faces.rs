use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{Cone, PolyError};
use crate::linalg::{
    coordinates_in, dot_int, integer_kernel, integer_rank, primitive, saturated_basis, to_rational,
};
use crate::{IntVector, RatMatrix, Rational};

pub type FaceId = usize;

#[derive(Clone, Debug, Serialize)]
pub struct Face {
    pub id: FaceId,
    pub dim: usize,
    /// Indices into the cone's ray list, ascending.
    pub rays: Vec<usize>,
    /// Indices of the facet normals vanishing on this face, ascending.
    pub facets: Vec<usize>,
    /// Reduced row echelon basis of the linear span.
    #[serde(skip)]
    pub span_basis: Vec<Vec<Rational>>,
    /// Reduced row echelon basis of the annihilator in `M_Q`.
    #[serde(skip)]
    pub perp_basis: Vec<Vec<Rational>>,
}

impl Face {
    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim
    }
}

/// All faces of a cone, ordered by dimension and then by ray set.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    cone: Cone,
    faces: Vec<Face>,
    by_dim: Vec<Vec<FaceId>>,
    up: Vec<Vec<FaceId>>,
    down: Vec<Vec<FaceId>>,
    index: HashMap<Vec<usize>, FaceId>,
}

impl FaceLattice {
    pub fn new(cone: &Cone) -> FaceLattice {
        let n = cone.lattice_rank();
        let rays = cone.rays();
        let incidence: Vec<Vec<usize>> = cone
            .facet_normals()
            .iter()
            .map(|h| (0..rays.len()).filter(|&i| dot_int(h, &rays[i]).is_zero()).collect())
            .collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let top: Vec<usize> = (0..rays.len()).collect();
        seen.insert(top.clone());
        let mut queue = vec![top];
        while let Some(f) = queue.pop() {
            for inc in &incidence {
                let g: Vec<usize> = f.iter().filter(|i| inc.binary_search(i).is_ok()).copied().collect();
                if seen.insert(g.clone()) {
                    queue.push(g);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|ray_set| {
                let vecs: Vec<IntVector> = ray_set.iter().map(|&i| rays[i].clone()).collect();
                let dim = integer_rank(vecs.clone(), n);
                let facets = (0..incidence.len())
                    .filter(|&f| ray_set.iter().all(|r| incidence[f].binary_search(r).is_ok()))
                    .collect();
                let rows: Vec<Vec<Rational>> = vecs.iter().map(|v| to_rational(v)).collect();
                let m = RatMatrix::from_rows(&rows, n).expect("width");
                let span_basis = m.rref().0.to_rows();
                let perp_basis = m.kernel();
                Face { id: 0, dim, rays: ray_set, facets, span_basis, perp_basis }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.rays).cmp(&(b.dim, &b.rays)));
        for (i, f) in faces.iter_mut().enumerate() {
            f.id = i;
        }
        let mut by_dim = vec![Vec::new(); n + 1];
        for f in &faces {
            by_dim[f.dim].push(f.id);
        }
        let mut up = vec![Vec::new(); faces.len()];
        let mut down = vec![Vec::new(); faces.len()];
        for d in 0..n {
            for &a in &by_dim[d] {
                for &b in &by_dim[d + 1] {
                    if faces[a].rays.iter().all(|r| faces[b].rays.binary_search(r).is_ok()) {
                        up[a].push(b);
                        down[b].push(a);
                    }
                }
            }
        }
        let index = faces.iter().map(|f| (f.rays.clone(), f.id)).collect();
        FaceLattice { cone: cone.clone(), faces, by_dim, up, down, index }
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn dim(&self) -> usize {
        self.cone.lattice_rank()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn apex(&self) -> FaceId {
        0
    }

    pub fn top(&self) -> FaceId {
        self.faces.len() - 1
    }

    pub fn faces_of_dim(&self, d: usize) -> &[FaceId] {
        self.by_dim.get(d).map_or(&[], |v| v.as_slice())
    }

    /// Faces of one dimension more that contain `id`.
    pub fn covers_up(&self, id: FaceId) -> &[FaceId] {
        &self.up[id]
    }

    /// Faces of one dimension less contained in `id`.
    pub fn covers_down(&self, id: FaceId) -> &[FaceId] {
        &self.down[id]
    }

    pub fn contains(&self, big: FaceId, small: FaceId) -> bool {
        let b = &self.faces[big].rays;
        self.faces[small].rays.iter().all(|r| b.binary_search(r).is_ok())
    }

    /// Faces contained in `id`, including itself.
    pub fn subfaces(&self, id: FaceId) -> Vec<FaceId> {
        (0..self.faces.len()).filter(|&g| self.contains(id, g)).collect()
    }

    /// Faces containing `id`, including itself.
    pub fn superfaces(&self, id: FaceId) -> Vec<FaceId> {
        (0..self.faces.len()).filter(|&g| self.contains(g, id)).collect()
    }

    pub fn face_by_rays(&self, rays: &[usize]) -> Option<FaceId> {
        let mut key = rays.to_vec();
        key.sort_unstable();
        key.dedup();
        self.index.get(&key).copied()
    }

    /// Number of faces in each dimension `0..=n`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(|v| v.len()).collect()
    }

    pub fn ray_vectors(&self, id: FaceId) -> Vec<IntVector> {
        self.faces[id].rays.iter().map(|&i| self.cone.rays()[i].clone()).collect()
    }

    /// Z-basis of `N ∩ span(τ)`.
    pub fn lattice_basis(&self, id: FaceId) -> Vec<IntVector> {
        saturated_basis(&self.ray_vectors(id), self.dim())
    }

    /// Z-basis of `τ^⊥ ∩ M`.
    pub fn perp_lattice_basis(&self, id: FaceId) -> Vec<IntVector> {
        integer_kernel(&self.ray_vectors(id), self.dim())
    }

    /// Every interval of length two has exactly four elements.
    pub fn check_diamond(&self) -> bool {
        for a in 0..self.faces.len() {
            for &b in &self.up[a] {
                for &c in &self.up[b] {
                    let middle = self.up[a].iter().filter(|m| self.down[c].contains(m)).count();
                    if middle != 2 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The cone `σ/τ` in the lattice `N/(N ∩ span τ)`.
pub fn quotient_cone(fl: &FaceLattice, tau: FaceId) -> Result<Cone, PolyError> {
    let face = fl.face(tau);
    let m = fl.dim() - face.dim;
    if m == 0 {
        return Ok(Cone::zero());
    }
    let basis = fl.perp_lattice_basis(tau);
    let images = fl
        .cone()
        .rays()
        .iter()
        .enumerate()
        .filter(|(i, _)| face.rays.binary_search(i).is_err())
        .map(|(_, r)| basis.iter().map(|b| dot_int(b, r)).collect())
        .collect();
    Cone::from_rays(m, images)
}

/// The face `τ` as a full-dimensional cone in the lattice `N ∩ span τ`.
pub fn face_cone(fl: &FaceLattice, tau: FaceId) -> Result<Cone, PolyError> {
    let face = fl.face(tau);
    if face.dim == 0 {
        return Ok(Cone::zero());
    }
    if tau == fl.top() {
        return Ok(fl.cone().clone());
    }
    let basis = fl.lattice_basis(tau);
    let coords = fl
        .ray_vectors(tau)
        .iter()
        .map(|r| {
            let c = coordinates_in(&basis, r).expect("ray lies in its own span");
            c.into_iter().map(|x| x.to_integer()).collect()
        })
        .collect();
    Cone::from_rays(face.dim, coords)
}

/// True when every quotient `σ/τ` with `dim τ = c` is simplicial.
///
/// The rays of `σ/τ` are the images of the faces covering `τ`, so the test
/// reduces to counting covers.
pub fn is_simple_in_dim(fl: &FaceLattice, c: usize) -> bool {
    let n = fl.dim();
    fl.faces_of_dim(c).iter().all(|&t| fl.covers_up(t).len() == n - c)
}

/// Every ray lies on exactly `n - 1` facets.
pub fn is_cone_over_simple(fl: &FaceLattice) -> bool {
    is_simple_in_dim(fl, 1)
}

/// Every proper face is simplicial.
pub fn is_cone_over_simplicial(fl: &FaceLattice) -> bool {
    fl.faces().iter().filter(|f| f.id != fl.top()).all(Face::is_simplicial)
}

/// Lattice vector `n_{μ,τ} ∈ N ∩ span τ` whose pairing with `τ^∨ ∩ μ^⊥ ∩ M`
/// is onto `Z_{≥0}`. Defined modulo `span μ`.
pub fn normal_step_vector(fl: &FaceLattice, mu: FaceId, tau: FaceId) -> Result<IntVector, PolyError> {
    if fl.face(mu).dim + 1 != fl.face(tau).dim || !fl.contains(tau, mu) {
        return Err(PolyError::NotACover(mu, tau));
    }
    let mu_rays = &fl.face(mu).rays;
    let r_idx = fl.face(tau).rays.iter().find(|r| mu_rays.binary_search(r).is_err()).expect("tau has a new ray");
    let r = &fl.cone().rays()[*r_idx];
    let perp = fl.perp_lattice_basis(mu);
    let image = |v: &IntVector| -> IntVector { perp.iter().map(|b| dot_int(b, v)).collect() };
    let g = primitive(&image(r))?;
    let pivot = g.iter().position(|x| !x.is_zero()).expect("primitive vector is nonzero");
    let w = fl.lattice_basis(tau);
    let c: Vec<BigInt> = w.iter().map(|wk| &image(wk)[pivot] / &g[pivot]).collect();
    // Bezout coefficients for gcd(c) = 1.
    let mut coeffs = vec![BigInt::zero(); c.len()];
    let mut acc = BigInt::zero();
    for (k, ck) in c.iter().enumerate() {
        let e = acc.extended_gcd(ck);
        for a in coeffs.iter_mut().take(k) {
            *a *= &e.x;
        }
        coeffs[k] = e.y;
        acc = e.gcd;
    }
    assert!(acc.is_one(), "span of a face maps onto the quotient lattice");
    let mut n = vec![BigInt::zero(); fl.dim()];
    for (a, wk) in coeffs.iter().zip(&w) {
        for (x, y) in n.iter_mut().zip(wk) {
            *x += a * y;
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVector {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn quadric() -> Cone {
        Cone::from_rays(3, vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[1, 0, 1]), iv(&[0, 1, 1])]).unwrap()
    }

    #[test]
    fn quadric_lattice() {
        let fl = FaceLattice::new(&quadric());
        assert_eq!(fl.f_vector(), vec![1, 4, 4, 1]);
        assert!(fl.check_diamond());
        assert!(is_cone_over_simple(&fl));
        assert!(is_cone_over_simplicial(&fl));
        assert!(!fl.cone().is_simplicial());
    }

    #[test]
    fn quotients_by_rays_are_two_dimensional() {
        let fl = FaceLattice::new(&quadric());
        for &r in fl.faces_of_dim(1) {
            let q = quotient_cone(&fl, r).unwrap();
            assert_eq!(q.lattice_rank(), 2);
            assert_eq!(q.rays().len(), 2);
        }
        assert_eq!(quotient_cone(&fl, fl.apex()).unwrap().rays().len(), 4);
        assert_eq!(quotient_cone(&fl, fl.top()).unwrap(), Cone::zero());
    }

    #[test]
    fn step_vector_pairs_to_one() {
        // Cone spanned by e1 and e1 + 3 e2: the step from the ray e1 + 3 e2 must pair to 1
        // with the primitive generator of its annihilator on the far side.
        let c = Cone::from_rays(2, vec![iv(&[1, 0]), iv(&[1, 3])]).unwrap();
        let fl = FaceLattice::new(&c);
        let ray = fl.face_by_rays(&[1]).unwrap();
        let n = normal_step_vector(&fl, ray, fl.top()).unwrap();
        let u = fl.perp_lattice_basis(ray)[0].clone();
        let side = dot_int(&u, &c.rays()[0]);
        let pairing = dot_int(&u, &n);
        assert_eq!(pairing.magnitude(), &1u32.into());
        // same side as the other ray
        assert!(pairing * side > BigInt::zero());
    }

    #[test]
    fn step_vector_rejects_non_covers() {
        let fl = FaceLattice::new(&quadric());
        assert!(normal_step_vector(&fl, fl.apex(), fl.top()).is_err());
    }
}
