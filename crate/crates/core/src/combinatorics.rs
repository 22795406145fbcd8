//! Face-count invariants: h, h̃ and g vectors, Hodge–Deligne polynomials and
//! Hodge–Du Bois tables.
//!
//! Two indexing conventions appear. In cone mode `f[i]` counts the
//! `i`-dimensional faces of an `n`-cone, so `f[0] = f[n] = 1`. In polytope mode
//! `f[i]` counts `i`-faces of a polytope `P` for `0 <= i < dim P`, and
//! `f_{-1} = 1` is implicit. They are related by `f_l(P) = f_{l+1}(cone)`.

use serde::Serialize;

use crate::linalg::binomial;
use crate::polyhedral::FaceLattice;

/// Cone-mode f-vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector {
    pub f: Vec<i64>,
}

impl FVector {
    pub fn of(fl: &FaceLattice) -> FVector {
        FVector { f: fl.f_vector().into_iter().map(|x| x as i64).collect() }
    }

    pub fn n(&self) -> usize {
        self.f.len() - 1
    }

    /// `f_i` with zero outside `0..=n`.
    pub fn get(&self, i: i64) -> i64 {
        if i < 0 {
            return 0;
        }
        self.f.get(i as usize).copied().unwrap_or(0)
    }

    /// Proper faces of the cross-section: `f_0(P), …, f_{n-2}(P)`.
    pub fn polytope(&self) -> PolytopeFVector {
        let n = self.n();
        PolytopeFVector { f: if n >= 2 { self.f[1..n].to_vec() } else { Vec::new() } }
    }
}

/// Polytope-mode f-vector of a polytope of dimension `f.len()`, without the
/// empty face and the polytope itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolytopeFVector {
    pub f: Vec<i64>,
}

impl PolytopeFVector {
    pub fn dim(&self) -> usize {
        self.f.len()
    }

    /// `f_i` with `f_{-1} = 1`.
    pub fn get(&self, i: i64) -> i64 {
        if i == -1 {
            1
        } else if i < -1 {
            0
        } else {
            self.f.get(i as usize).copied().unwrap_or(0)
        }
    }
}

/// `h_j = Σ_{l=j}^{n-1} (-1)^{l-j} C(l, j) f_{n-1-l}` for `0 <= j < n`.
pub fn h_vector_simplicial(f: &FVector) -> Vec<i64> {
    let n = f.n() as i64;
    (0..n)
        .map(|j| (j..n).map(|l| sign(l - j) * binomial(l, j) * f.get(n - 1 - l)).sum())
        .collect()
}

/// `h̃_j = Σ_{l=0}^{j} f_{n-l} C(n-1-l, j-l) (-1)^{j-l}` for `0 <= j < n`.
pub fn h_tilde_simple(f: &FVector) -> Vec<i64> {
    let n = f.n() as i64;
    (0..n)
        .map(|j| (0..=j).map(|l| f.get(n - l) * binomial(n - 1 - l, j - l) * sign(j - l)).sum())
        .collect()
}

/// The three expressions for the first differences of `h̃`:
/// `h̃_j - h̃_{j-1}`, `Σ (-1)^l f_{n-j+l} C(n-j+l, l)` and
/// `Σ (-1)^{j-l} f_{n-l} C(n-l, j-l)`.
pub fn simple_a_forms(f: &FVector, j: usize) -> [i64; 3] {
    let n = f.n() as i64;
    let j = j as i64;
    let ht = h_tilde_simple(f);
    let at = |k: i64| if k < 0 { 0 } else { ht.get(k as usize).copied().unwrap_or(0) };
    let first = at(j) - at(j - 1);
    let second = (0..=j).map(|l| sign(l) * f.get(n - j + l) * binomial(n - j + l, l)).sum();
    let third = (0..=j).map(|l| sign(j - l) * f.get(n - l) * binomial(n - l, j - l)).sum();
    [first, second, third]
}

/// Right-hand side of the Euler-characteristic identity for `H^1(Ish_σ^{n-j})`
/// on a cone over a simple polytope:
/// `-C(n, j) + Σ_{l=1}^{n-j} (-1)^{l-1} f_l C(n-l, j)`.
pub fn simple_h1_euler(f: &FVector, j: usize) -> i64 {
    let n = f.n() as i64;
    let j = j as i64;
    -binomial(n, j) + (1..=n - j).map(|l| sign(l - 1) * f.get(l) * binomial(n - l, j)).sum::<i64>()
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Toric g-vector of the cross-section polytope, equivalently the
/// coefficients of the intersection-cohomology stalk polynomial in `q²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ICStalkPoly {
    pub g: Vec<i64>,
    /// Toric h-polynomial of the cross-section, lowest degree first.
    pub h: Vec<i64>,
}

/// Stanley's recursion on the face poset of the cross-section.
///
/// For a face `F` of polytope dimension `m` (cone dimension `m + 1`),
/// `h(F) = Σ_{G ⊊ F} g(G) (t-1)^{m-1-dim G}` over all proper faces including
/// the empty one, and `g(F)` keeps `h_0` and the first differences up to
/// degree `⌊m/2⌋`. The empty face (the apex) has `g = h = 1`.
pub fn g_polynomial(fl: &FaceLattice) -> ICStalkPoly {
    let mut gs: Vec<Vec<i64>> = vec![Vec::new(); fl.len()];
    let mut hs: Vec<Vec<i64>> = vec![Vec::new(); fl.len()];
    for face in fl.faces() {
        if face.dim == 0 {
            gs[face.id] = vec![1];
            hs[face.id] = vec![1];
            continue;
        }
        let mut h = vec![0i64; face.dim];
        for g_face in fl.subfaces(face.id) {
            if g_face == face.id {
                continue;
            }
            let e = face.dim - fl.face(g_face).dim - 1;
            let term = poly_mul(&gs[g_face], &t_minus_one_pow(e));
            for (k, c) in term.into_iter().enumerate() {
                if k >= h.len() {
                    h.resize(k + 1, 0);
                }
                h[k] += c;
            }
        }
        let m = face.dim - 1;
        let g: Vec<i64> = (0..=m / 2).map(|i| h[i] - if i == 0 { 0 } else { h[i - 1] }).collect();
        gs[face.id] = g;
        hs[face.id] = h;
    }
    let top = fl.top();
    ICStalkPoly { g: gs[top].clone(), h: hs[top].clone() }
}

fn t_minus_one_pow(e: usize) -> Vec<i64> {
    let mut p = vec![1i64];
    for _ in 0..e {
        p = poly_mul(&p, &[-1, 1]);
    }
    p
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients `c_p` of `(uv)^p` in `E(X) = Σ_{j=0}^{n} f_{j-1} (uv-1)^{n-j}`.
pub fn hodge_deligne_polynomial(f: &PolytopeFVector) -> Vec<i64> {
    let n = f.dim() as i64;
    (0..=n)
        .map(|p| (0..=n).map(|j| f.get(j - 1) * sign(n - j - p) * binomial(n - j, p)).sum())
        .collect()
}

/// Hodge–Du Bois numbers `h̄^{p,q}` of the projective toric variety of a
/// simple polytope, stored as `table[p][q]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeTable {
    pub n: usize,
    pub table: Vec<Vec<i64>>,
}

impl HodgeTable {
    pub fn get(&self, p: usize, q: usize) -> i64 {
        self.table[p][q]
    }

    /// `b_k = Σ_{p+q=k} h̄^{p,q}` for `0 <= k <= 2n`.
    pub fn betti_numbers(&self) -> Vec<i64> {
        let n = self.n;
        (0..=2 * n).map(|k| (0..=n).filter(|&p| k >= p && k - p <= n).map(|p| self.table[p][k - p]).sum()).collect()
    }

    /// `Σ_q (-1)^{p+q} h̄^{p,q}` for each `p`. For Hodge–Tate cohomology this
    /// is the coefficient of `(uv)^p` in `E(X)`.
    pub fn signed_columns(&self) -> Vec<i64> {
        let n = self.n;
        (0..=n).map(|p| (0..=n).map(|q| sign((p + q) as i64) * self.table[p][q]).sum()).collect()
    }
}

/// Diagonal of ones except `h̄^{n-1,n-1} = f_0 - n`; the row `q = n-1` carries
/// `h̄^{p,n-1} = Σ_{j=0}^{n-p} f_{j-1}(-1)^{j-1} C(n-j, p) + (-1)^{n-p}` for
/// `1 <= p < n-1`; everything else vanishes. For `n < 2` the table is the
/// identity.
pub fn hodge_du_bois_table(f: &PolytopeFVector) -> HodgeTable {
    let n = f.dim();
    let mut table = vec![vec![0i64; n + 1]; n + 1];
    for (p, row) in table.iter_mut().enumerate() {
        row[p] = 1;
    }
    if n >= 2 {
        let ni = n as i64;
        table[n - 1][n - 1] = f.get(0) - ni;
        for p in 1..n - 1 {
            let pi = p as i64;
            let s: i64 = (0..=ni - pi).map(|j| f.get(j - 1) * sign(j - 1) * binomial(ni - j, pi)).sum();
            table[p][n - 1] = s + sign(ni - pi);
        }
    }
    HodgeTable { n, table }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(f: &[i64]) -> FVector {
        FVector { f: f.to_vec() }
    }

    #[test]
    fn h_vectors() {
        assert_eq!(h_vector_simplicial(&fv(&[1, 4, 4, 1])), vec![1, 2, 1]);
        assert_eq!(h_vector_simplicial(&fv(&[1, 6, 12, 8, 1])), vec![1, 3, 3, 1]);
        assert_eq!(h_vector_simplicial(&fv(&[1, 3, 3, 1])), vec![1, 1, 1]);
        assert_eq!(h_tilde_simple(&fv(&[1, 8, 12, 6, 1])), vec![1, 3, 3, 1]);
        assert_eq!(h_tilde_simple(&fv(&[1, 4, 4, 1])), vec![1, 2, 1]);
    }

    #[test]
    fn simple_forms_agree_on_example() {
        let f = fv(&[1, 9, 18, 15, 6, 1]);
        let ht = h_tilde_simple(&f);
        assert_eq!(ht, vec![1, 2, 3, 2, 1]);
        for j in 1..3 {
            let [a, b, c] = simple_a_forms(&f, j);
            assert_eq!(a, b);
            assert_eq!(a, c);
        }
    }

    #[test]
    fn deligne_polynomial_of_square() {
        assert_eq!(hodge_deligne_polynomial(&PolytopeFVector { f: vec![4, 4] }), vec![1, 2, 1]);
    }

    #[test]
    fn deligne_polynomial_of_simplex_is_projective_space() {
        for n in 1..6i64 {
            let f: Vec<i64> = (0..n).map(|i| binomial(n + 1, i + 1)).collect();
            assert_eq!(hodge_deligne_polynomial(&PolytopeFVector { f }), vec![1; n as usize + 1]);
        }
    }

    #[test]
    fn example_diamond() {
        let t = hodge_du_bois_table(&PolytopeFVector { f: vec![9, 18, 15, 6] });
        let row3: Vec<i64> = (0..=4).map(|p| t.get(p, 3)).collect();
        assert_eq!(row3, vec![0, 1, 4, 5, 0]);
        let diag: Vec<i64> = (0..=4).map(|p| t.get(p, p)).collect();
        assert_eq!(diag, vec![1, 1, 1, 5, 1]);
    }

    #[test]
    fn degenerate_dimensions_give_identity() {
        let t = hodge_du_bois_table(&PolytopeFVector { f: vec![2] });
        assert_eq!(t.table, vec![vec![1, 0], vec![0, 1]]);
    }
}
