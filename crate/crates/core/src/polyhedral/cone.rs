use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::PolyError;
use crate::linalg::{clear_denominators, dot_int, integer_rank, primitive, to_rational};
use crate::{IntVector, RatMatrix};

/// A full-dimensional strongly convex rational cone in `N_R = R^n`.
///
/// Rays are the primitive generators of the extreme rays. Facet normals are
/// the primitive inward normals, that is the primitive generators of the dual
/// cone, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    lattice_rank: usize,
    rays: Vec<IntVector>,
    facet_normals: Vec<IntVector>,
}

impl Cone {
    /// Cone generated by `rays`. Non-extreme and repeated generators are dropped;
    /// the remaining rays keep their input order.
    pub fn from_rays(lattice_rank: usize, rays: Vec<IntVector>) -> Result<Cone, PolyError> {
        let rays = primitive_generators(lattice_rank, rays)?;
        let span = integer_rank(rays.clone(), lattice_rank);
        if span < lattice_rank {
            return Err(PolyError::NotFullDimensional { span, rank: lattice_rank });
        }
        let mut facet_normals = extreme_rays_of_dual(&rays, lattice_rank);
        if integer_rank(facet_normals.clone(), lattice_rank) < lattice_rank {
            return Err(PolyError::NotPointed);
        }
        facet_normals.sort();
        let extreme: Vec<IntVector> = rays
            .into_iter()
            .filter(|r| {
                let tight: Vec<IntVector> =
                    facet_normals.iter().filter(|h| dot_int(h, r).is_zero()).cloned().collect();
                integer_rank(tight, lattice_rank) + 1 == lattice_rank
            })
            .collect();
        Ok(Cone { lattice_rank, rays: extreme, facet_normals })
    }

    /// The cone `{x : ⟨u, x⟩ ≥ 0 for all u in dual_rays}`. Rays come out sorted.
    pub fn from_dual_rays(lattice_rank: usize, dual_rays: Vec<IntVector>) -> Result<Cone, PolyError> {
        let dual = primitive_generators(lattice_rank, dual_rays)?;
        if integer_rank(dual.clone(), lattice_rank) < lattice_rank {
            return Err(PolyError::NotPointed);
        }
        let mut rays = extreme_rays_of_dual(&dual, lattice_rank);
        if integer_rank(rays.clone(), lattice_rank) < lattice_rank {
            return Err(PolyError::NotFullDimensional {
                span: integer_rank(rays, lattice_rank),
                rank: lattice_rank,
            });
        }
        rays.sort();
        Cone::from_rays(lattice_rank, rays)
    }

    /// The zero cone in the rank-0 lattice.
    pub fn zero() -> Cone {
        Cone { lattice_rank: 0, rays: Vec::new(), facet_normals: Vec::new() }
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn dim(&self) -> usize {
        self.lattice_rank
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn facet_normals(&self) -> &[IntVector] {
        &self.facet_normals
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.lattice_rank
    }

    /// The dual cone in `M_R`.
    pub fn dual(&self) -> Cone {
        if self.lattice_rank == 0 {
            return Cone::zero();
        }
        Cone::from_rays(self.lattice_rank, self.facet_normals.clone()).expect("dual of a proper cone is proper")
    }

    /// Some point in the interior: the sum of the rays.
    pub fn interior_point(&self) -> IntVector {
        let mut s = vec![BigInt::zero(); self.lattice_rank];
        for r in &self.rays {
            for (a, b) in s.iter_mut().zip(r) {
                *a += b;
            }
        }
        s
    }
}

fn primitive_generators(lattice_rank: usize, rays: Vec<IntVector>) -> Result<Vec<IntVector>, PolyError> {
    let mut out: Vec<IntVector> = Vec::with_capacity(rays.len());
    for (index, r) in rays.into_iter().enumerate() {
        if r.len() != lattice_rank {
            return Err(PolyError::DimensionMismatch { index, len: r.len(), rank: lattice_rank });
        }
        let p = primitive(&r).map_err(|_| PolyError::ZeroRay(index))?;
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Extreme rays of `{h : ⟨h, r⟩ ≥ 0 for all r}` by the double description
/// method. The generators must span `Q^n`, so the result is pointed.
pub(crate) fn extreme_rays_of_dual(rays: &[IntVector], n: usize) -> Vec<IntVector> {
    if n == 0 {
        return Vec::new();
    }
    // Pick n independent constraints greedily.
    let mut basis: Vec<usize> = Vec::new();
    for (i, _) in rays.iter().enumerate() {
        let mut trial: Vec<IntVector> = basis.iter().map(|&b| rays[b].clone()).collect();
        trial.push(rays[i].clone());
        if integer_rank(trial, n) == basis.len() + 1 {
            basis.push(i);
        }
        if basis.len() == n {
            break;
        }
    }
    if basis.len() < n {
        // Not spanning; the caller checks ranks and reports the error.
        return Vec::new();
    }
    let b_rows: Vec<_> = basis.iter().map(|&b| to_rational(&rays[b])).collect();
    let b = RatMatrix::from_rows(&b_rows, n).expect("square");
    // The dual basis solves B h = e_j.
    let mut gens: Vec<(IntVector, Vec<usize>)> = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![crate::Rational::zero(); n];
        e[j] = crate::Rational::one();
        let h = b.solve(&e).expect("invertible");
        let zeros: Vec<usize> = basis.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &b)| b).collect();
        gens.push((clear_denominators(&h), zeros));
    }
    for (c, r) in rays.iter().enumerate() {
        if basis.contains(&c) {
            continue;
        }
        let vals: Vec<BigInt> = gens.iter().map(|(g, _)| dot_int(g, r)).collect();
        let mut next: Vec<(IntVector, Vec<usize>)> = Vec::new();
        for (k, (g, z)) in gens.iter().enumerate() {
            if vals[k].is_positive() {
                next.push((g.clone(), z.clone()));
            } else if vals[k].is_zero() {
                let mut z = z.clone();
                z.push(c);
                next.push((g.clone(), z));
            }
        }
        for p in 0..gens.len() {
            if !vals[p].is_positive() {
                continue;
            }
            for q in 0..gens.len() {
                if !vals[q].is_negative() {
                    continue;
                }
                let common: Vec<usize> = gens[p].1.iter().filter(|x| gens[q].1.contains(x)).copied().collect();
                if common.len() + 2 < n {
                    continue;
                }
                let blocked = gens
                    .iter()
                    .enumerate()
                    .any(|(w, (_, zw))| w != p && w != q && common.iter().all(|x| zw.contains(x)));
                if blocked {
                    continue;
                }
                let vp = &vals[p];
                let vq = -&vals[q];
                let combined: IntVector =
                    gens[p].0.iter().zip(&gens[q].0).map(|(a, b)| vp * b + &vq * a).collect();
                let mut z = common;
                z.push(c);
                next.push((primitive(&combined).expect("adjacent rays are independent"), z));
            }
        }
        gens = next;
    }
    let mut out: Vec<IntVector> = Vec::new();
    for (g, _) in gens {
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

/// Cone over a lattice polytope: rays `(v, 1)`.
pub fn homogenize_polytope(vertices: &[IntVector]) -> Result<Cone, PolyError> {
    let d = vertices.first().map_or(0, |v| v.len());
    let rays = vertices
        .iter()
        .map(|v| {
            let mut r = v.clone();
            r.push(BigInt::one());
            r
        })
        .collect();
    Cone::from_rays(d + 1, rays)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVector {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn orthant_facets() {
        let c = Cone::from_rays(3, vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])]).unwrap();
        assert_eq!(c.facet_normals(), &[iv(&[0, 0, 1]), iv(&[0, 1, 0]), iv(&[1, 0, 0])]);
        assert!(c.is_simplicial());
    }

    #[test]
    fn drops_interior_generators() {
        let c = Cone::from_rays(2, vec![iv(&[1, 0]), iv(&[1, 1]), iv(&[0, 1]), iv(&[2, 0])]).unwrap();
        assert_eq!(c.rays(), &[iv(&[1, 0]), iv(&[0, 1])]);
    }

    #[test]
    fn rejects_lines_and_flat_cones() {
        assert_eq!(Cone::from_rays(2, vec![iv(&[1, 0]), iv(&[-1, 0]), iv(&[0, 1])]), Err(PolyError::NotPointed));
        assert!(matches!(
            Cone::from_rays(3, vec![iv(&[1, 0, 0]), iv(&[0, 1, 0])]),
            Err(PolyError::NotFullDimensional { span: 2, rank: 3 })
        ));
        assert_eq!(Cone::from_rays(2, vec![iv(&[0, 0]), iv(&[1, 0])]), Err(PolyError::ZeroRay(0)));
    }

    #[test]
    fn square_cone_has_four_facets() {
        let c = Cone::from_rays(3, vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[1, 0, 1]), iv(&[0, 1, 1])]).unwrap();
        assert_eq!(c.facet_normals().len(), 4);
        assert_eq!(c.dual().rays().len(), 4);
    }

    #[test]
    fn dual_of_dual_is_original() {
        let c = Cone::from_rays(3, vec![iv(&[1, 1, 1]), iv(&[-1, 1, 1]), iv(&[1, -1, 1]), iv(&[-1, -1, 1]), iv(&[0, 0, 1])])
            .unwrap();
        let cc = Cone::from_dual_rays(3, c.facet_normals().to_vec()).unwrap();
        let mut a = c.rays().to_vec();
        a.sort();
        assert_eq!(cc.rays(), a.as_slice());
    }
}
