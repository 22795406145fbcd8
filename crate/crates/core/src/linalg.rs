//! Exact linear algebra over Q and Z.
//!
//! Dense matrices are generic over any exact [`Scalar`]; field routines (RREF,
//! rank, kernels) need a [`Field`]. Lattice routines (saturation, primitive
//! vectors, integer kernels) work on `BigInt` directly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::{IntVector, RatMatrix, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("subspace basis is not linearly independent")]
    DependentBasis,
    #[error("target subspace does not contain image")]
    ImageNotContained,
}

/// Exact ring element usable as a matrix entry.
pub trait Scalar: Clone + fmt::Debug + PartialEq + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + fmt::Debug + PartialEq + Num + Neg<Output = T> {}

/// Scalars with exact division.
pub trait Field: Scalar {}

impl<I> Field for Ratio<I> where I: Clone + Integer + fmt::Debug + Neg<Output = I> {}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds a matrix from row vectors, all of length `cols`.
    pub fn from_rows(rows: &[Vec<T>], cols: usize) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut m = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = T::one() / m[r][c].clone();
            for x in m[r].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..self.cols {
                        let v = m[i][j].clone() - f.clone() * m[r][j].clone();
                        m[i][j] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        let out = Matrix::from_rows(&m, self.cols).expect("rows keep their width");
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}` in reduced row echelon form, one vector per row.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![T::zero(); self.cols];
            x[f] = T::one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -r.get(row, f).clone();
            }
            basis.push(x);
        }
        if basis.is_empty() {
            return basis;
        }
        Matrix::from_rows(&basis, self.cols).expect("width").rref().0.to_rows()
    }

    /// Some solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.to_rows();
        let n = self.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return T::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det = det * m[c][c].clone();
            for i in c + 1..n {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = m[i][c].clone() / m[c][c].clone();
                for j in c..n {
                    let v = m[i][j].clone() - f.clone() * m[c][j].clone();
                    m[i][j] = v;
                }
            }
        }
        det
    }
}

/// Rank of a rational matrix by fraction-free elimination.
///
/// Rows are scaled to primitive integer vectors first. Elimination runs in
/// `i64` with overflow checks and restarts in `BigInt` if anything overflows.
pub fn rank_exact(m: &RatMatrix) -> usize {
    let rows: Vec<Vec<BigInt>> = (0..m.nrows())
        .map(|i| clear_denominators(m.row(i)))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    integer_rank(rows, m.ncols())
}

/// Rank of an integer matrix given by rows.
pub fn integer_rank(rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let small: Option<Vec<Vec<i64>>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64()).collect::<Option<Vec<_>>>())
        .collect();
    if let Some(small) = small {
        if let Some(r) = rank_i64(small, cols) {
            return r;
        }
    }
    rank_big(rows, cols)
}

fn rank_i64(mut rows: Vec<Vec<i64>>, cols: usize) -> Option<usize> {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(pivot) = (rank..rows.len())
            .filter(|&i| rows[i][c] != 0)
            .min_by_key(|&i| rows[i][c].unsigned_abs())
        else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][c];
        for i in rank + 1..rows.len() {
            let a = rows[i][c];
            if a == 0 {
                continue;
            }
            let g = p.gcd(&a);
            let (pf, af) = (p / g, a / g);
            let mut content = 0i64;
            for j in c..cols {
                let v = rows[i][j]
                    .checked_mul(pf)?
                    .checked_sub(rows[rank][j].checked_mul(af)?)?;
                if v == i64::MIN {
                    return None;
                }
                rows[i][j] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for x in rows[i][c..].iter_mut() {
                    *x /= content;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn rank_big(mut rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(pivot) = (rank..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&i, &j| rows[i][c].abs().cmp(&rows[j][c].abs()))
        else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][c].clone();
        for i in rank + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let a = rows[i][c].clone();
            let g = p.gcd(&a);
            let (pf, af) = (&p / &g, &a / &g);
            let mut content = BigInt::zero();
            for j in c..cols {
                let v = &rows[i][j] * &pf - &rows[rank][j] * &af;
                content = content.gcd(&v);
                rows[i][j] = v;
            }
            if content > BigInt::one() {
                for x in rows[i][c..].iter_mut() {
                    *x = &*x / &content;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn to_rational(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides out the content of a nonzero integer vector.
pub fn primitive(v: &[BigInt]) -> Result<IntVector, LinalgError> {
    let g = content(v);
    if g.is_zero() {
        return Err(LinalgError::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// The primitive integer vector on the ray through a rational vector.
/// The zero vector maps to the zero vector.
pub fn clear_denominators(v: &[Rational]) -> IntVector {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive(&ints).unwrap_or(ints)
}

/// Z-basis of `{x in Z^n : A x = 0}` for integer `A` given by rows.
///
/// Column operations by extended gcd bring `A` to echelon form while the
/// same operations are recorded in a unimodular matrix; its columns past the
/// pivots span the integer kernel.
pub fn integer_kernel(rows: &[IntVector], n: usize) -> Vec<IntVector> {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    // u[j] is column j of the transform.
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut k = 0;
    for i in 0..a.len() {
        if k == n {
            break;
        }
        for j in k + 1..n {
            if a[i][j].is_zero() {
                continue;
            }
            let x = a[i][k].clone();
            let y = a[i][j].clone();
            let e = x.extended_gcd(&y);
            let (s, t, g) = (e.x, e.y, e.gcd);
            let (yg, xg) = (&y / &g, &x / &g);
            combine_columns(&mut a, k, j, &s, &t, &yg, &xg);
            combine_u(&mut u, k, j, &s, &t, &yg, &xg);
        }
        if !a[i][k].is_zero() {
            k += 1;
        }
    }
    let mut basis: Vec<IntVector> = u.split_off(k);
    size_reduce(&mut basis);
    basis
}

fn combine_columns(
    a: &mut [Vec<BigInt>],
    k: usize,
    j: usize,
    s: &BigInt,
    t: &BigInt,
    yg: &BigInt,
    xg: &BigInt,
) {
    for row in a.iter_mut() {
        let ck = row[k].clone();
        let cj = row[j].clone();
        row[k] = s * &ck + t * &cj;
        row[j] = xg * &cj - yg * &ck;
    }
}

fn combine_u(u: &mut [Vec<BigInt>], k: usize, j: usize, s: &BigInt, t: &BigInt, yg: &BigInt, xg: &BigInt) {
    let ck = u[k].clone();
    let cj = u[j].clone();
    u[k] = ck.iter().zip(&cj).map(|(p, q)| s * p + t * q).collect();
    u[j] = ck.iter().zip(&cj).map(|(p, q)| xg * q - yg * p).collect();
}

/// Greedy pairwise reduction to keep lattice bases short. Unimodular.
fn size_reduce(basis: &mut [IntVector]) {
    let norm = |v: &IntVector| v.iter().map(|x| x * x).sum::<BigInt>();
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                let nj = norm(&basis[j]);
                if nj.is_zero() {
                    continue;
                }
                let d = dot_int(&basis[i], &basis[j]);
                // nearest integer to d / nj
                let two = BigInt::from(2);
                let q = (&d * &two + &nj).div_floor(&(&nj * &two));
                if q.is_zero() {
                    continue;
                }
                let cand: IntVector = basis[i].iter().zip(&basis[j]).map(|(x, y)| x - &q * y).collect();
                if norm(&cand) < norm(&basis[i]) {
                    basis[i] = cand;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
}

/// Z-basis of `Z^n ∩ span(vectors)`.
pub fn saturated_basis(vectors: &[IntVector], n: usize) -> Vec<IntVector> {
    let perp = integer_kernel(vectors, n);
    integer_kernel(&perp, n)
}

/// Coordinates of an integer vector in a lattice basis, if it lies in the span.
pub fn coordinates_in(basis: &[IntVector], v: &[BigInt]) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return v.iter().all(|x| x.is_zero()).then(Vec::new);
    }
    let cols: Vec<Vec<Rational>> = basis.iter().map(|b| to_rational(b)).collect();
    let m = Matrix::from_rows(&cols, v.len()).ok()?.transpose();
    m.solve(&to_rational(v))
}

/// Basis of `Λ^k V` for a subspace `V ⊂ Q^n`, indexed by k-subsets of a
/// reduced row echelon basis of `V` in lexicographic order.
#[derive(Clone, Debug)]
pub struct WedgeBasis {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    degree: usize,
    subsets: Vec<Vec<usize>>,
}

impl WedgeBasis {
    pub fn new(subspace: &[Vec<Rational>], ambient_dim: usize, degree: usize) -> Result<Self, LinalgError> {
        let (r, pivots) = if subspace.is_empty() {
            (Matrix::zeros(0, ambient_dim), Vec::new())
        } else {
            Matrix::from_rows(subspace, ambient_dim)?.rref()
        };
        if pivots.len() != subspace.len() {
            return Err(LinalgError::DependentBasis);
        }
        let m = pivots.len();
        let subsets = if degree <= m { (0..m).combinations(degree).collect() } else { Vec::new() };
        Ok(WedgeBasis { ambient_dim, basis: r.to_rows(), pivots, degree, subsets })
    }

    pub fn dim(&self) -> usize {
        self.subsets.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn subspace_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn subspace_basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Plücker expansion of one basis element in `Λ^k Q^n`.
    fn expand_element(&self, idx: usize) -> Multivector {
        let vs: Vec<&[Rational]> = self.subsets[idx].iter().map(|&i| self.basis[i].as_slice()).collect();
        expand(&vs, self.ambient_dim)
    }
}

/// Sparse element of `Λ^j Q^n` keyed by sorted column subsets.
type Multivector = BTreeMap<Vec<usize>, Rational>;

fn expand(vs: &[&[Rational]], n: usize) -> Multivector {
    let j = vs.len();
    let mut out = Multivector::new();
    for cols in (0..n).combinations(j) {
        let d = minor(vs, &cols);
        if !d.is_zero() {
            out.insert(cols, d);
        }
    }
    out
}

fn minor(vs: &[&[Rational]], cols: &[usize]) -> Rational {
    if vs.is_empty() {
        return Rational::one();
    }
    let rows: Vec<Vec<Rational>> = vs.iter().map(|v| cols.iter().map(|&c| v[c].clone()).collect()).collect();
    Matrix::from_rows(&rows, cols.len()).expect("square").det()
}

fn add_scaled(acc: &mut Multivector, x: &Multivector, s: &Rational) {
    for (k, v) in x {
        let e = acc.entry(k.clone()).or_insert_with(Rational::zero);
        *e += v * s;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// Matrix of contraction `ι_n : Λ^k V → Λ^{k-1} W` in the given bases.
///
/// `ι_n(u_1 ∧ … ∧ u_k) = Σ (-1)^{i+1} ⟨u_i, n⟩ u_1 ∧ … û_i … ∧ u_k`.
/// Rows index the target basis, columns the source basis. Fails if some
/// image does not lie in `Λ^{k-1} W`.
pub fn interior_product_matrix(
    source: &WedgeBasis,
    target: &WedgeBasis,
    n: &[Rational],
) -> Result<RatMatrix, LinalgError> {
    if source.ambient_dim != target.ambient_dim || n.len() != source.ambient_dim {
        return Err(LinalgError::DimensionMismatch("ambient dimensions differ".into()));
    }
    if source.degree == 0 {
        if target.dim() != 0 {
            return Err(LinalgError::DimensionMismatch("target degree must be one less than source".into()));
        }
        return Ok(RatMatrix::zeros(0, source.dim()));
    }
    if target.degree + 1 != source.degree {
        return Err(LinalgError::DimensionMismatch("target degree must be one less than source".into()));
    }
    let pairings: Vec<Rational> = source.basis.iter().map(|b| dot_rat(b, n)).collect();
    let target_expanded: Vec<Multivector> = (0..target.dim()).map(|t| target.expand_element(t)).collect();
    let target_keys: Vec<Vec<usize>> = target
        .subsets
        .iter()
        .map(|s| s.iter().map(|&i| target.pivots[i]).collect())
        .collect();
    let mut out = RatMatrix::zeros(target.dim(), source.dim());
    for (col, subset) in source.subsets.iter().enumerate() {
        let mut image = Multivector::new();
        for (a, &i) in subset.iter().enumerate() {
            if pairings[i].is_zero() {
                continue;
            }
            let rest: Vec<&[Rational]> = subset
                .iter()
                .enumerate()
                .filter(|&(b, _)| b != a)
                .map(|(_, &s)| source.basis[s].as_slice())
                .collect();
            let sign = if a % 2 == 0 { Rational::one() } else { -Rational::one() };
            add_scaled(&mut image, &expand(&rest, source.ambient_dim), &(sign * &pairings[i]));
        }
        let mut rebuilt = Multivector::new();
        for (t, key) in target_keys.iter().enumerate() {
            let c = image.get(key).cloned().unwrap_or_else(Rational::zero);
            if !c.is_zero() {
                add_scaled(&mut rebuilt, &target_expanded[t], &c);
                out.set(t, col, c);
            }
        }
        if rebuilt != image {
            return Err(LinalgError::ImageNotContained);
        }
    }
    Ok(out)
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn iv(v: &[i64]) -> IntVector {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = RatMatrix::from_rows(&[vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]], 3)
            .unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(rank_exact(&m), 2);
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = RatMatrix::from_rows(&[vec![q(1), q(1), q(0), q(2)], vec![q(0), q(1), q(1), q(1)]], 4).unwrap();
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            for i in 0..2 {
                assert!(dot_rat(m.row(i), v).is_zero());
            }
        }
    }

    #[test]
    fn integer_kernel_is_saturated() {
        // x + 2y + 3z = 0 has a Z-basis of two vectors; any integer solution is an integer combination.
        let k = integer_kernel(&[iv(&[1, 2, 3])], 3);
        assert_eq!(k.len(), 2);
        let target = iv(&[1, 1, -1]);
        let c = coordinates_in(&k, &target).unwrap();
        assert!(c.iter().all(|x| x.is_integer()));
    }

    #[test]
    fn saturation_of_non_primitive_span() {
        // span{(2,0),(0,2)} ∩ Z^2 is all of Z^2.
        let b = saturated_basis(&[iv(&[2, 0]), iv(&[0, 2])], 2);
        let m = Matrix::from_rows(&b.iter().map(|v| to_rational(v)).collect::<Vec<_>>(), 2).unwrap();
        assert_eq!(m.det().abs(), q(1));
    }

    #[test]
    fn primitive_rejects_zero() {
        assert_eq!(primitive(&iv(&[0, 0])), Err(LinalgError::ZeroVector));
        assert_eq!(primitive(&iv(&[4, -6])).unwrap(), iv(&[2, -3]));
    }

    #[test]
    fn contraction_of_top_form() {
        let e = |i: usize| (0..3).map(|j| q((i == j) as i64)).collect::<Vec<_>>();
        let src = WedgeBasis::new(&[e(0), e(1), e(2)], 3, 2).unwrap();
        let tgt = WedgeBasis::new(&[e(1), e(2)], 3, 1).unwrap();
        // n = e_0 kills e1*, e2* so contraction of e0∧e1 gives e1, e0∧e2 gives e2, e1∧e2 gives 0.
        let m = interior_product_matrix(&src, &tgt, &e(0)).unwrap();
        assert_eq!(m.nrows(), 2);
        assert_eq!(m.ncols(), 3);
        assert_eq!(*m.get(0, 0), q(1));
        assert_eq!(*m.get(1, 1), q(1));
        assert!(m.get(0, 2).is_zero() && m.get(1, 2).is_zero());
    }

    #[test]
    fn contraction_outside_target_fails() {
        let e = |i: usize| (0..2).map(|j| q((i == j) as i64)).collect::<Vec<_>>();
        let src = WedgeBasis::new(&[e(0), e(1)], 2, 1).unwrap();
        let tgt = WedgeBasis::new(&[e(1)], 2, 0).unwrap();
        // degree 0 target always contains scalars
        assert!(interior_product_matrix(&src, &tgt, &e(0)).is_ok());
        let src2 = WedgeBasis::new(&[e(0), e(1)], 2, 2).unwrap();
        let tgt2 = WedgeBasis::new(&[e(1)], 2, 1).unwrap();
        // ι_{e1}(e0∧e1) = -e0 which is not in span{e1}
        assert_eq!(interior_product_matrix(&src2, &tgt2, &e(1)), Err(LinalgError::ImageNotContained));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(4, -1), 0);
    }
}
