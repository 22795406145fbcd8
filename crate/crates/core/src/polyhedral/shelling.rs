//! Line shellings of the facets of a cone and a recursive shelling checker.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{FaceId, FaceLattice, PolyError};
use crate::linalg::{dot_int, dot_rat, to_rational};
use crate::Rational;

#[derive(Clone, Debug, Serialize)]
pub struct ShellingCertificate {
    pub facet: FaceId,
    /// Facets of `facet` shared with earlier facets of the shelling.
    pub shared: Vec<FaceId>,
    /// A shelling of the facets of `facet` that starts with `shared`.
    pub facet_shelling: Vec<FaceId>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Shelling {
    pub order: Vec<FaceId>,
    pub certificates: Vec<ShellingCertificate>,
    /// Parameter of the moment-curve direction that gave a generic line.
    pub perturbation: u64,
}

/// A Bruggesser–Mani line shelling of the facets.
///
/// The cross-section `{⟨w, x⟩ = 1}` with `w` the sum of facet normals is a
/// polytope whose facets are the facets of the cone. A line through its
/// centroid in direction `(1, k, k², …)` projected into the slice is used, with
/// `k` increased until all crossing times are distinct and finite.
pub fn shelling(fl: &FaceLattice) -> Result<Shelling, PolyError> {
    let n = fl.dim();
    let facets: Vec<FaceId> = fl.covers_down(fl.top()).to_vec();
    if n <= 1 {
        return Ok(Shelling { order: facets, certificates: Vec::new(), perturbation: 0 });
    }
    let cone = fl.cone();
    let mut w = vec![BigInt::zero(); n];
    for h in cone.facet_normals() {
        for (a, b) in w.iter_mut().zip(h) {
            *a += b;
        }
    }
    let w_q = to_rational(&w);
    let mut p = vec![Rational::zero(); n];
    for r in cone.rays() {
        let s = Rational::from_integer(dot_int(&w, r));
        for (a, b) in p.iter_mut().zip(r) {
            *a += Rational::from_integer(b.clone()) / &s;
        }
    }
    let count = Rational::from_integer(BigInt::from(cone.rays().len()));
    for a in p.iter_mut() {
        *a /= &count;
    }
    // facet normal of each facet face: the unique normal vanishing on it
    let normals: Vec<Vec<Rational>> = facets
        .iter()
        .map(|&f| {
            let idx = fl.face(f).facets[0];
            to_rational(&cone.facet_normals()[idx])
        })
        .collect();
    for k in 2u64..400 {
        let mut v = Vec::with_capacity(n);
        let mut pow = BigInt::from(1);
        for _ in 0..n {
            v.push(Rational::from_integer(pow.clone()));
            pow *= k;
        }
        let wv = dot_rat(&w_q, &v);
        let d: Vec<Rational> = v.iter().zip(&p).map(|(vi, pi)| vi - &wv * pi).collect();
        let mut times: Vec<(Rational, FaceId)> = Vec::with_capacity(facets.len());
        let mut generic = true;
        for (h, &f) in normals.iter().zip(&facets) {
            let hd = dot_rat(h, &d);
            if hd.is_zero() {
                generic = false;
                break;
            }
            times.push((-dot_rat(h, &p) / hd, f));
        }
        if !generic {
            continue;
        }
        let distinct: BTreeSet<&Rational> = times.iter().map(|(t, _)| t).collect();
        if distinct.len() != times.len() {
            continue;
        }
        let (mut pos, mut neg): (Vec<_>, Vec<_>) = times.into_iter().partition(|(t, _)| t.is_positive());
        pos.sort();
        neg.sort();
        let order: Vec<FaceId> = pos.into_iter().chain(neg).map(|(_, f)| f).collect();
        let mut checker = Checker::new(fl);
        let mut certificates = Vec::new();
        for j in 1..order.len() {
            let Some((shared, facet_shelling)) = checker.step(order[j], &order[..j]) else {
                return Err(PolyError::NoGenericLine);
            };
            certificates.push(ShellingCertificate { facet: order[j], shared, facet_shelling });
        }
        return Ok(Shelling { order, certificates, perturbation: k });
    }
    Err(PolyError::NoGenericLine)
}

/// True iff `order` lists the facets of the cone as a shelling.
///
/// The first facet must itself be shellable; every later facet must meet the
/// union of the earlier ones in a nonempty union of its own facets that forms
/// the start of some shelling of it. Lower-dimensional shellability is decided
/// by exhaustive search with memoization.
pub fn verify_shelling(fl: &FaceLattice, order: &[FaceId]) -> bool {
    let mut facets: Vec<FaceId> = fl.covers_down(fl.top()).to_vec();
    let mut given = order.to_vec();
    facets.sort_unstable();
    given.sort_unstable();
    if facets != given {
        return false;
    }
    if fl.dim() <= 1 {
        return true;
    }
    let mut checker = Checker::new(fl);
    if checker.find(order[0], &[]).is_none() {
        return false;
    }
    (1..order.len()).all(|j| checker.step(order[j], &order[..j]).is_some())
}

struct Checker<'a> {
    fl: &'a FaceLattice,
    memo: HashMap<(FaceId, Vec<FaceId>), Option<Vec<FaceId>>>,
}

impl<'a> Checker<'a> {
    fn new(fl: &'a FaceLattice) -> Self {
        Checker { fl, memo: HashMap::new() }
    }

    fn meet(&self, a: FaceId, b: FaceId) -> FaceId {
        let rb = &self.fl.face(b).rays;
        let rays: Vec<usize> =
            self.fl.face(a).rays.iter().filter(|r| rb.binary_search(r).is_ok()).copied().collect();
        self.fl.face_by_rays(&rays).expect("intersection of faces is a face")
    }

    /// Checks that `f` may follow `earlier`, returning the shared facets of `f`
    /// and a shelling of `f` that starts with them.
    fn step(&mut self, f: FaceId, earlier: &[FaceId]) -> Option<(Vec<FaceId>, Vec<FaceId>)> {
        let d = self.fl.face(f).dim;
        let meets: Vec<FaceId> = earlier.iter().map(|&e| self.meet(f, e)).collect();
        let mut shared: Vec<FaceId> = meets.iter().copied().filter(|&m| self.fl.face(m).dim + 1 == d).collect();
        shared.sort_unstable();
        shared.dedup();
        if shared.is_empty() {
            return None;
        }
        if !meets.iter().all(|&m| shared.iter().any(|&s| self.fl.contains(s, m))) {
            return None;
        }
        let order = self.find(f, &shared)?;
        Some((shared, order))
    }

    /// A shelling of the facets of `g` whose first elements are `prefix`.
    fn find(&mut self, g: FaceId, prefix: &[FaceId]) -> Option<Vec<FaceId>> {
        let key = (g, prefix.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let facets = self.fl.covers_down(g).to_vec();
        let result = if self.fl.face(g).dim <= 1 {
            Some(facets)
        } else {
            let mut visited = BTreeSet::new();
            let mut order = Vec::new();
            self.dfs(&facets, prefix, &mut order, &mut visited).then_some(order)
        };
        self.memo.insert(key, result.clone());
        result
    }

    fn dfs(
        &mut self,
        facets: &[FaceId],
        prefix: &[FaceId],
        order: &mut Vec<FaceId>,
        visited: &mut BTreeSet<Vec<FaceId>>,
    ) -> bool {
        if order.len() == facets.len() {
            return true;
        }
        let mut chosen = order.clone();
        chosen.sort_unstable();
        if !visited.insert(chosen) {
            return false;
        }
        let pool: Vec<FaceId> = if order.len() < prefix.len() { prefix.to_vec() } else { facets.to_vec() };
        for f in pool {
            if order.contains(&f) {
                continue;
            }
            let ok = if order.is_empty() { self.find(f, &[]).is_some() } else { self.step(f, order).is_some() };
            if !ok {
                continue;
            }
            order.push(f);
            if self.dfs(facets, prefix, order, visited) {
                return true;
            }
            order.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Cone, IntVector};

    fn iv(v: &[i64]) -> IntVector {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn quadric_line_shelling_verifies() {
        let c = Cone::from_rays(3, vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[1, 0, 1]), iv(&[0, 1, 1])]).unwrap();
        let fl = FaceLattice::new(&c);
        let s = shelling(&fl).unwrap();
        assert_eq!(s.order.len(), 4);
        assert!(verify_shelling(&fl, &s.order));
    }

    #[test]
    fn opposite_facets_first_is_not_a_shelling() {
        let c = Cone::from_rays(3, vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[1, 0, 1]), iv(&[0, 1, 1])]).unwrap();
        let fl = FaceLattice::new(&c);
        let facets = fl.covers_down(fl.top()).to_vec();
        let a = facets[0];
        let opposite = *facets.iter().find(|&&b| b != a && fl.face(fl_meet(&fl, a, b)).dim == 0).unwrap();
        let mut bad = vec![a, opposite];
        bad.extend(facets.iter().filter(|&&f| f != a && f != opposite));
        assert!(!verify_shelling(&fl, &bad));
    }

    fn fl_meet(fl: &FaceLattice, a: FaceId, b: FaceId) -> FaceId {
        Checker::new(fl).meet(a, b)
    }
}
