//! Library results against independent brute-force computations.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use toric_ishida::combinatorics::{
    g_polynomial, h_tilde_simple, h_vector_simplicial, hodge_du_bois_table, FVector, PolytopeFVector,
};
use toric_ishida::corpus::{self, named_cone, named_cones, named_polytopes};
use toric_ishida::ishida::{d_squared_failures, Builder};
use toric_ishida::linalg::binomial;
use toric_ishida::polyhedral::{homogenize_polytope, is_cone_over_simple, shelling, verify_shelling};
use toric_ishida::{Cone, FaceLattice};

fn small(cone: &Cone) -> Vec<Vec<i64>> {
    cone.rays().iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect()
}

fn det(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|c| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect()).collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            s * m[0][c] * det(&minor)
        })
        .sum()
}

/// Facets as ray sets: hyperplanes through `n - 1` independent rays with all
/// rays on one side. Normals come from cofactor expansion.
fn brute_force_facets(rays: &[Vec<i64>], n: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for sub in (0..rays.len()).combinations(n - 1) {
        let rows: Vec<Vec<i64>> = sub.iter().map(|&i| rays[i].clone()).collect();
        let normal: Vec<i64> = (0..n)
            .map(|k| {
                let minor: Vec<Vec<i64>> =
                    rows.iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != k).map(|(_, &x)| x).collect()).collect();
                if k % 2 == 0 { det(&minor) } else { -det(&minor) }
            })
            .collect();
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        let dots: Vec<i64> = rays.iter().map(|r| r.iter().zip(&normal).map(|(a, b)| a * b).sum()).collect();
        if dots.iter().all(|&d| d >= 0) || dots.iter().all(|&d| d <= 0) {
            out.insert((0..rays.len()).filter(|&i| dots[i] == 0).collect());
        }
    }
    out
}

fn brute_force_faces(rays: &[Vec<i64>], n: usize) -> BTreeSet<Vec<usize>> {
    let facets = brute_force_facets(rays, n);
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    faces.insert((0..rays.len()).collect());
    loop {
        let mut new = Vec::new();
        for f in &faces {
            for h in &facets {
                let g: Vec<usize> = f.iter().filter(|i| h.contains(i)).copied().collect();
                if !faces.contains(&g) {
                    new.push(g);
                }
            }
        }
        if new.is_empty() {
            return faces;
        }
        faces.extend(new);
    }
}

fn test_cones() -> Vec<(String, Cone)> {
    let mut out: Vec<(String, Cone)> =
        named_cones().into_iter().filter(|(_, c)| c.dim() <= 5).map(|(n, c)| (n.to_string(), c)).collect();
    let mut rng = corpus::rng(11);
    for dim in 3..=5 {
        for i in 0..4 {
            out.push((format!("box{dim}_{i}"), corpus::random_box_cone(&mut rng, dim)));
            out.push((format!("zero_one{dim}_{i}"), corpus::random_degenerate(&mut rng, dim)));
        }
    }
    out
}

#[test]
fn face_lattice_matches_brute_force_enumeration() {
    for (name, cone) in test_cones() {
        let fl = FaceLattice::new(&cone);
        let ours: BTreeSet<Vec<usize>> = fl.faces().iter().map(|f| f.rays.clone()).collect();
        let oracle = brute_force_faces(&small(&cone), cone.dim());
        assert_eq!(ours, oracle, "{name}");
        let f = fl.f_vector();
        let euler: i64 = f.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        assert_eq!(euler, 0, "{name}: alternating face count");
        assert!(fl.check_diamond(), "{name}");
    }
}

#[test]
fn facet_count_matches_brute_force() {
    for (name, cone) in test_cones() {
        let oracle = brute_force_facets(&small(&cone), cone.dim());
        assert_eq!(cone.facet_normals().len(), oracle.len(), "{name}");
    }
}

/// For a polygon cross-section, an edge order is a shelling exactly when each
/// edge but the last meets the union of the earlier ones in one vertex.
fn polygon_order_is_shelling(fl: &FaceLattice, order: &[usize]) -> bool {
    let verts = |f: usize| -> BTreeSet<usize> { fl.covers_down(f).iter().copied().collect() };
    let mut seen: BTreeSet<usize> = verts(order[0]);
    for (k, &f) in order.iter().enumerate().skip(1) {
        let vs = verts(f);
        let shared = vs.intersection(&seen).count();
        let want = if k + 1 == order.len() { 2 } else { 1 };
        if shared != want {
            return false;
        }
        seen.extend(vs);
    }
    true
}

#[test]
fn shelling_checker_matches_polygon_oracle_on_all_orders() {
    for name in ["quadric", "pentagon", "orthant3"] {
        let fl = FaceLattice::new(&named_cone(name).unwrap());
        let facets = fl.covers_down(fl.top()).to_vec();
        let mut good = 0;
        for order in facets.iter().copied().permutations(facets.len()) {
            let expected = polygon_order_is_shelling(&fl, &order);
            assert_eq!(verify_shelling(&fl, &order), expected, "{name} {order:?}");
            good += expected as usize;
        }
        // a shelling of an m-gon grows a path: m first edges, then one of two ends each step
        let m = facets.len();
        assert_eq!(good, m << (m - 2), "{name}");
    }
}

#[test]
fn line_shellings_verify_on_named_cones() {
    for (name, cone) in named_cones() {
        let fl = FaceLattice::new(&cone);
        let s = shelling(&fl).unwrap();
        assert!(verify_shelling(&fl, &s.order), "{name}");
    }
}

#[test]
fn known_bad_order_fails() {
    // the two opposite facets of the cube cone first
    let fl = FaceLattice::new(&named_cone("cube").unwrap());
    let facets = fl.covers_down(fl.top()).to_vec();
    let a = facets[0];
    let opposite = *facets
        .iter()
        .find(|&&b| fl.face(a).rays.iter().all(|r| !fl.face(b).rays.contains(r)))
        .expect("a cube facet has an opposite");
    let mut order = vec![a, opposite];
    order.extend(facets.iter().copied().filter(|&f| f != a && f != opposite));
    assert!(!verify_shelling(&fl, &order));
}

#[test]
fn dehn_sommerville_symmetry() {
    let mut rng = corpus::rng(5);
    for dim in 3..=5 {
        for _ in 0..5 {
            let fl = FaceLattice::new(&corpus::random_simplicial_type(&mut rng, dim));
            let h = h_vector_simplicial(&FVector::of(&fl));
            let mut rev = h.clone();
            rev.reverse();
            assert_eq!(h, rev);
            let g = g_polynomial(&fl);
            assert_eq!(g.h, h, "toric h equals h for simplicial polytopes");
            let fl = FaceLattice::new(&corpus::random_simple_type(&mut rng, dim));
            let ht = h_tilde_simple(&FVector::of(&fl));
            let mut rev = ht.clone();
            rev.reverse();
            assert_eq!(ht, rev);
        }
    }
}

#[test]
fn g_vectors_of_named_cones() {
    let g = |n: &str| g_polynomial(&FaceLattice::new(&named_cone(n).unwrap())).g;
    assert_eq!(g("octahedron"), vec![1, 2]);
    assert_eq!(g("cube"), vec![1, 4]);
    assert_eq!(g("quadric"), vec![1, 1]);
    assert_eq!(g("orthant4"), vec![1, 0]);
}

#[test]
fn hodge_tables_of_small_polytopes() {
    for (name, verts) in named_polytopes() {
        let cone = homogenize_polytope(&verts).unwrap();
        let fl = FaceLattice::new(&cone);
        if !is_cone_over_simple(&fl) {
            continue;
        }
        let t = hodge_du_bois_table(&FVector::of(&fl).polytope());
        let betti = t.betti_numbers();
        assert_eq!(betti[0], 1, "{name}");
        assert_eq!(*betti.last().unwrap(), 1, "{name}");
    }
    // P^1 x P^1 from the square
    let sq = hodge_du_bois_table(&PolytopeFVector { f: vec![4, 4] });
    assert_eq!(sq.table, vec![vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 1]]);
    // projective space from the simplex
    for n in 2..6i64 {
        let f: Vec<i64> = (0..n).map(|i| binomial(n + 1, i + 1)).collect();
        let t = hodge_du_bois_table(&PolytopeFVector { f });
        for p in 0..=n as usize {
            for q in 0..=n as usize {
                assert_eq!(t.get(p, q), (p == q) as i64);
            }
        }
    }
}

#[test]
fn corrupted_differential_is_caught() {
    let fl = FaceLattice::new(&named_cone("octahedron").unwrap());
    let mut ish = Builder::new(&fl).full(3).unwrap();
    assert!(d_squared_failures(&ish).unwrap().is_empty());
    let d = &mut ish.differentials[0];
    let (r, c) = (0..d.nrows()).cartesian_product(0..d.ncols()).find(|&(r, c)| !num_traits::Zero::is_zero(d.get(r, c))).unwrap();
    let v = d.get(r, c).clone();
    d.set(r, c, v * toric_ishida::Rational::from_integer(BigInt::from(2)));
    assert!(!d_squared_failures(&ish).unwrap().is_empty());
}
