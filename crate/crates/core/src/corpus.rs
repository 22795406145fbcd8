//! Named test cones and seeded random cone generators.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polyhedral::{homogenize_polytope, is_cone_over_simple, is_cone_over_simplicial, FaceLattice};
use crate::{Cone, IntVector};

fn iv(v: &[i64]) -> IntVector {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn rays(n: usize, rs: &[&[i64]]) -> Cone {
    Cone::from_rays(n, rs.iter().map(|r| iv(r)).collect()).expect("named cone is valid")
}

fn polytope(vs: &[&[i64]]) -> Cone {
    homogenize_polytope(&vs.iter().map(|v| iv(v)).collect::<Vec<_>>()).expect("named polytope is full-dimensional")
}

fn product(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            out.push(x.iter().chain(y).copied().collect());
        }
    }
    out
}

fn simplex_vertices(d: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0; d]];
    for i in 0..d {
        let mut v = vec![0; d];
        v[i] = 1;
        out.push(v);
    }
    out
}

fn cross_vertices(d: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..d {
        for s in [1, -1] {
            let mut v = vec![0; d];
            v[i] = s;
            out.push(v);
        }
    }
    out
}

fn cube_vertices(d: usize) -> Vec<Vec<i64>> {
    (0..1usize << d).map(|m| (0..d).map(|i| ((m >> i) & 1) as i64).collect()).collect()
}

fn pyramid(base: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = base.iter().map(|v| v.iter().copied().chain([0]).collect()).collect();
    let d = base[0].len();
    out.push((0..d).map(|_| 0).chain([1]).collect());
    out
}

fn from_vertices(vs: &[Vec<i64>]) -> Cone {
    homogenize_polytope(&vs.iter().map(|v| iv(v)).collect::<Vec<_>>()).expect("named polytope is full-dimensional")
}

/// Generators of the dual of a five-dimensional cone whose cross-section is
/// simple with f-vector (9, 18, 15, 6).
pub fn dual_generators_example() -> Vec<IntVector> {
    vec![
        iv(&[1, 0, 0, 0, 0]),
        iv(&[0, 1, 1, 0, 0]),
        iv(&[0, 0, 0, 1, 1]),
        iv(&[0, 0, 0, 0, 1]),
        iv(&[0, 0, 1, 1, 0]),
        iv(&[1, 1, 0, 0, 0]),
    ]
}

/// Named cones used in documentation and tests.
pub fn named_cones() -> Vec<(&'static str, Cone)> {
    vec![
        ("orthant3", rays(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
        ("quadric", rays(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]])),
        ("pentagon", polytope(&[&[0, 0], &[1, 0], &[2, 1], &[1, 2], &[0, 1]])),
        ("octahedron", from_vertices(&cross_vertices(3))),
        ("cube", rays(4, &[
            &[1, 1, 1, 1], &[1, 1, -1, 1], &[1, -1, 1, 1], &[1, -1, -1, 1],
            &[-1, 1, 1, 1], &[-1, 1, -1, 1], &[-1, -1, 1, 1], &[-1, -1, -1, 1],
        ])),
        ("square_pyramid", from_vertices(&pyramid(&cube_vertices(2)))),
        ("prism", from_vertices(&product(&simplex_vertices(2), &simplex_vertices(1)))),
        ("orthant4", from_vertices(&simplex_vertices(3))),
        ("example_dual", Cone::from_dual_rays(5, dual_generators_example()).expect("valid dual generators")),
        ("cross4", from_vertices(&cross_vertices(4))),
        ("triangle_product", from_vertices(&product(&simplex_vertices(2), &simplex_vertices(2)))),
        ("cube_pyramid", from_vertices(&pyramid(&cube_vertices(3)))),
        ("bipyramid_prism", from_vertices(&bipyramid(&product(&simplex_vertices(2), &simplex_vertices(1))))),
        ("cross5", from_vertices(&cross_vertices(5))),
        ("simplex_segment", from_vertices(&product(&simplex_vertices(4), &simplex_vertices(1)))),
        ("triangle_product_pyramid", from_vertices(&pyramid(&product(&simplex_vertices(2), &simplex_vertices(2))))),
    ]
}

fn bipyramid(base: &[Vec<i64>]) -> Vec<Vec<i64>> {
    // base scaled by 3 and centred near the origin keeps both apexes outside
    let d = base[0].len();
    let mut out: Vec<Vec<i64>> = base
        .iter()
        .map(|v| v.iter().map(|x| 3 * x - 1).chain([0]).collect())
        .collect();
    out.push((0..d).map(|_| 0).chain([1]).collect());
    out.push((0..d).map(|_| 0).chain([-1]).collect());
    out
}

pub fn named_cone(name: &str) -> Option<Cone> {
    named_cones().into_iter().find(|(n, _)| *n == name).map(|(_, c)| c)
}

/// Lattice polytopes for Hodge tables.
pub fn named_polytopes() -> Vec<(&'static str, Vec<IntVector>)> {
    let wrap = |vs: Vec<Vec<i64>>| vs.iter().map(|v| iv(v)).collect::<Vec<_>>();
    vec![
        ("segment", wrap(simplex_vertices(1))),
        ("triangle", wrap(simplex_vertices(2))),
        ("square", wrap(cube_vertices(2))),
        ("tetrahedron", wrap(simplex_vertices(3))),
        ("cube", wrap(cube_vertices(3))),
        ("prism", wrap(product(&simplex_vertices(2), &simplex_vertices(1)))),
        ("triangle_product", wrap(product(&simplex_vertices(2), &simplex_vertices(2)))),
        ("tesseract", wrap(cube_vertices(4))),
    ]
}

/// Random cone generated by integer rays in the box `[-3, 3]^dim`.
///
/// Samples between `dim` and `dim + 3` rays and retries until the cone is
/// pointed and full-dimensional.
pub fn random_box_cone(rng: &mut ChaCha8Rng, dim: usize) -> Cone {
    loop {
        let count = rng.gen_range(dim..=dim + 3);
        let rays: Vec<IntVector> =
            (0..count).map(|_| (0..dim).map(|_| BigInt::from(rng.gen_range(-3i64..=3))).collect()).collect();
        if let Ok(c) = Cone::from_rays(dim, rays) {
            return c;
        }
    }
}

/// Cone over a random lattice polytope whose proper faces are all simplices.
pub fn random_simplicial_type(rng: &mut ChaCha8Rng, dim: usize) -> Cone {
    loop {
        let count = rng.gen_range(dim + 1..=dim + 3);
        let pts: Vec<IntVector> = (0..count)
            .map(|_| (0..dim - 1).map(|_| BigInt::from(rng.gen_range(-3i64..=3))).collect())
            .collect();
        let Ok(c) = homogenize_polytope(&pts) else { continue };
        if c.rays().len() <= 12 && is_cone_over_simplicial(&FaceLattice::new(&c)) {
            return c;
        }
    }
}

/// Cone over a random simple polytope: the dual of a simplicial-type cone.
pub fn random_simple_type(rng: &mut ChaCha8Rng, dim: usize) -> Cone {
    loop {
        let c = random_simplicial_type(rng, dim).dual();
        if c.rays().len() <= 14 && is_cone_over_simple(&FaceLattice::new(&c)) {
            return c;
        }
    }
}

/// Cone over a 0/1 polytope, usually neither simple nor simplicial.
pub fn random_degenerate(rng: &mut ChaCha8Rng, dim: usize) -> Cone {
    let mut cube: Vec<Vec<i64>> = cube_vertices(dim - 1);
    loop {
        cube.shuffle(rng);
        let count = rng.gen_range(dim + 1..=(dim + 4).min(cube.len()));
        let pts: Vec<IntVector> = cube[..count].iter().map(|v| iv(v)).collect();
        if let Ok(c) = homogenize_polytope(&pts) {
            return c;
        }
    }
}

/// `count` box-sampled cones of dimension `dim`, reproducible from `seed`.
pub fn random_cones(dim: usize, count: usize, seed: u64) -> Vec<Cone> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_box_cone(&mut rng, dim)).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
