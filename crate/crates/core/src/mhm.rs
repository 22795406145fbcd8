//! Multiplicities `a_λ^{l,j}` of the summands `IC_{S_λ}(-j)` in the weight
//! graded pieces of `H^{-l}` of the trivial Hodge module, and the report that
//! assembles them.
//!
//! Three methods are available. Cones over simplicial polytopes and cones
//! over simple polytopes have closed forms in the h and h̃ vectors. Every face
//! of dimension at most six is also handled by reading the numbers off the
//! degree-zero Ishida cohomology through the Ext spectral sequence; in
//! dimension six two entries stay undetermined. Whenever two methods apply to
//! the same face they must agree.

use std::collections::BTreeMap;

use serde::ser::Serializer;
use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::{h_tilde_simple, h_vector_simplicial, FVector};
use crate::ishida::{ExtTable, IshidaError};
use crate::polyhedral::{FaceId, FaceLattice};

/// Largest face dimension the spectral-sequence method handles.
pub const MAX_SPECTRAL_DIM: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MhmError {
    #[error("spectral-sequence method limited to dimension <= 6, face {face} has dimension {dim}")]
    DimensionLimit { face: FaceId, dim: usize },
    #[error("methods disagree on face {face} at (l, j) = ({l}, {j}): {left:?} gives {a}, {right:?} gives {b}")]
    Disagreement { face: FaceId, l: usize, j: usize, left: Method, right: Method, a: i64, b: i64 },
    #[error("negative multiplicity {value} on face {face} at (l, j) = ({l}, {j}) from {method:?}")]
    Negative { face: FaceId, l: usize, j: usize, value: i64, method: Method },
    #[error("cone is not a cone over a {0} polytope")]
    NotInClass(&'static str),
    #[error(transparent)]
    Ishida(#[from] IshidaError),
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    SpectralSequence,
    SimplicialClosedForm,
    SimpleClosedForm,
}

/// A multiplicity, or an explicit marker where the method has no answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AValue {
    Determined(u64),
    Undetermined,
}

impl AValue {
    pub fn determined(self) -> Option<u64> {
        match self {
            AValue::Determined(v) => Some(v),
            AValue::Undetermined => None,
        }
    }
}

impl Serialize for AValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            AValue::Determined(v) => s.serialize_u64(*v),
            AValue::Undetermined => s.serialize_str("undetermined"),
        }
    }
}

/// `(l, j)` pairs allowed for a face of dimension `d`: `j >= 1` and
/// `l + 1 <= d - 2j`, sorted by `(l, j)`.
pub fn admissible_pairs(d: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut j = 1;
    while 2 * j < d {
        for l in 0..d - 2 * j {
            out.push((l, j));
        }
        j += 1;
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AEntry {
    pub l: usize,
    pub j: usize,
    pub value: AValue,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FaceANumbers {
    pub face: FaceId,
    pub dim: usize,
    pub rays: Vec<usize>,
    /// Method whose values are reported.
    pub method: Method,
    /// Every method that was evaluated on this face; all of them agree.
    pub methods: Vec<Method>,
    /// One entry per admissible `(l, j)`.
    pub entries: Vec<AEntry>,
    /// Rank of the connecting map in the dimension-five system.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
}

impl FaceANumbers {
    pub fn get(&self, l: usize, j: usize) -> AValue {
        self.entries.iter().find(|e| e.l == l && e.j == j).map(|e| e.value).unwrap_or(AValue::Determined(0))
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MHMDecomposition {
    pub n: usize,
    pub faces: Vec<FaceANumbers>,
}

impl MHMDecomposition {
    pub fn face(&self, id: FaceId) -> &FaceANumbers {
        &self.faces[id]
    }

    pub fn top(&self) -> &FaceANumbers {
        self.faces.last().expect("a face lattice is never empty")
    }

    /// `(face, l, j)` triples no method could determine.
    pub fn undetermined(&self) -> Vec<(FaceId, usize, usize)> {
        self.faces
            .iter()
            .flat_map(|f| f.entries.iter().filter(|e| e.value == AValue::Undetermined).map(move |e| (f.face, e.l, e.j)))
            .collect()
    }
}

type Values = BTreeMap<(usize, usize), AValue>;

struct FaceInfo {
    f: FVector,
    over_simplicial: bool,
    over_simple: bool,
}

fn face_info(fl: &FaceLattice, lambda: FaceId) -> FaceInfo {
    let d = fl.face(lambda).dim;
    let subs = fl.subfaces(lambda);
    let mut f = vec![0i64; d + 1];
    for &s in &subs {
        f[fl.face(s).dim] += 1;
    }
    let over_simplicial = subs.iter().filter(|&&s| s != lambda).all(|&s| fl.face(s).is_simplicial());
    let over_simple = fl.faces_of_dim(1).iter().filter(|&&r| fl.contains(lambda, r)).all(|&r| {
        fl.covers_up(r).iter().filter(|&&g| fl.contains(lambda, g)).count() == d - 1
    });
    FaceInfo { f: FVector { f }, over_simplicial, over_simple }
}

fn zeros(d: usize) -> Values {
    admissible_pairs(d).into_iter().map(|k| (k, AValue::Determined(0))).collect()
}

fn set(values: &mut Values, face: FaceId, l: usize, j: usize, v: i64, method: Method) -> Result<(), MhmError> {
    if v < 0 {
        return Err(MhmError::Negative { face, l, j, value: v, method });
    }
    values.insert((l, j), AValue::Determined(v as u64));
    Ok(())
}

/// `a^{d-2j-1, j} = h_j - h_{j-1}` for `1 <= j < d/2`.
fn simplicial_values(face: FaceId, d: usize, f: &FVector) -> Result<Values, MhmError> {
    let mut values = zeros(d);
    if d == 0 {
        return Ok(values);
    }
    let h = h_vector_simplicial(f);
    let mut j = 1;
    while 2 * j < d {
        set(&mut values, face, d - 2 * j - 1, j, h[j] - h[j - 1], Method::SimplicialClosedForm)?;
        j += 1;
    }
    Ok(values)
}

/// `a^{0,j} = h̃_j - h̃_{j-1}` for `1 <= j < d/2`, zero for `l > 0`.
fn simple_values(face: FaceId, d: usize, f: &FVector) -> Result<Values, MhmError> {
    let mut values = zeros(d);
    if d == 0 {
        return Ok(values);
    }
    let ht = h_tilde_simple(f);
    let mut j = 1;
    while 2 * j < d {
        set(&mut values, face, 0, j, ht[j] - ht[j - 1], Method::SimpleClosedForm)?;
        j += 1;
    }
    Ok(values)
}

/// Values read off the degree-zero Ishida cohomology of the face itself.
/// `facet_values` supplies the (already computed) numbers of its facets.
fn spectral_values(
    fl: &FaceLattice,
    table: &ExtTable,
    lambda: FaceId,
    f: &FVector,
    facet_values: impl Fn(FaceId) -> Values,
) -> Result<(Values, Option<i64>), MhmError> {
    let d = fl.face(lambda).dim;
    let h = table.face(lambda);
    let hh = |m: usize, i: usize| h.get(m, i) as i64;
    let m = Method::SpectralSequence;
    let mut values = zeros(d);
    let mut r = None;
    match d {
        0..=2 => {}
        3 => set(&mut values, lambda, 0, 1, f.get(1) - 3, m)?,
        4 => {
            set(&mut values, lambda, 0, 1, hh(3, 1), m)?;
            set(&mut values, lambda, 1, 1, hh(3, 2), m)?;
        }
        5 => {
            for l in 0..=2 {
                set(&mut values, lambda, l, 1, hh(4, l + 1), m)?;
            }
            let (mut s01, mut s11) = (0i64, 0i64);
            for &mu in fl.covers_down(lambda) {
                let v = facet_values(mu);
                s01 += v[&(0, 1)].determined().expect("four-dimensional faces are determined") as i64;
                s11 += v[&(1, 1)].determined().expect("four-dimensional faces are determined") as i64;
            }
            let rank = s01 - hh(3, 1);
            r = Some(rank);
            set(&mut values, lambda, 0, 2, hh(3, 2) + rank - s11, m)?;
        }
        6 => {
            for l in 0..=3 {
                set(&mut values, lambda, l, 1, hh(5, l + 1), m)?;
            }
            values.insert((0, 2), AValue::Undetermined);
            values.insert((1, 2), AValue::Undetermined);
        }
        _ => return Err(MhmError::DimensionLimit { face: lambda, dim: d }),
    }
    Ok((values, r))
}

fn agree(face: FaceId, a: (Method, &Values), b: (Method, &Values)) -> Result<(), MhmError> {
    for (&(l, j), va) in a.1 {
        if let (AValue::Determined(x), AValue::Determined(y)) = (va, b.1[&(l, j)]) {
            if *x != y {
                return Err(MhmError::Disagreement { face, l, j, left: a.0, right: b.0, a: *x as i64, b: y as i64 });
            }
        }
    }
    Ok(())
}

/// Fill undetermined slots of `base` from `other`.
fn merge(base: &mut Values, other: &Values) {
    for (k, v) in base.iter_mut() {
        if *v == AValue::Undetermined {
            *v = other[k];
        }
    }
}

fn entries(values: &Values) -> Vec<AEntry> {
    values.iter().map(|(&(l, j), &value)| AEntry { l, j, value }).collect()
}

/// Numbers for every face, using every method that applies and checking that
/// they agree. Closed forms take priority in the report; faces of dimension
/// above six outside both closed-form classes are an error.
pub fn a_numbers(fl: &FaceLattice, table: &ExtTable) -> Result<MHMDecomposition, MhmError> {
    let mut computed: Vec<Values> = Vec::with_capacity(fl.len());
    let mut faces = Vec::with_capacity(fl.len());
    for face in fl.faces() {
        let lambda = face.id;
        let d = face.dim;
        let info = face_info(fl, lambda);
        let mut results: Vec<(Method, Values)> = Vec::new();
        if info.over_simplicial {
            results.push((Method::SimplicialClosedForm, simplicial_values(lambda, d, &info.f)?));
        }
        if info.over_simple {
            results.push((Method::SimpleClosedForm, simple_values(lambda, d, &info.f)?));
        }
        let mut r = None;
        if d <= MAX_SPECTRAL_DIM {
            let (v, rank) = spectral_values(fl, table, lambda, &info.f, |mu| computed[mu].clone())?;
            r = rank;
            results.push((Method::SpectralSequence, v));
        } else if results.is_empty() {
            return Err(MhmError::DimensionLimit { face: lambda, dim: d });
        }
        for i in 0..results.len() {
            for k in i + 1..results.len() {
                agree(lambda, (results[i].0, &results[i].1), (results[k].0, &results[k].1))?;
            }
        }
        let method = results[0].0;
        let mut values = results[0].1.clone();
        for (_, other) in &results[1..] {
            merge(&mut values, other);
        }
        faces.push(FaceANumbers {
            face: lambda,
            dim: d,
            rays: face.rays.clone(),
            method,
            methods: results.iter().map(|(m, _)| *m).collect(),
            entries: entries(&values),
            r,
        });
        computed.push(values);
    }
    Ok(MHMDecomposition { n: fl.dim(), faces })
}

/// Numbers from the spectral-sequence method alone, facets included. Every
/// face must have dimension at most six.
pub fn a_numbers_spectral(fl: &FaceLattice, table: &ExtTable) -> Result<MHMDecomposition, MhmError> {
    let mut computed: Vec<Values> = Vec::with_capacity(fl.len());
    let mut faces = Vec::with_capacity(fl.len());
    for face in fl.faces() {
        let info = face_info(fl, face.id);
        let (values, r) = spectral_values(fl, table, face.id, &info.f, |mu| computed[mu].clone())?;
        faces.push(FaceANumbers {
            face: face.id,
            dim: face.dim,
            rays: face.rays.clone(),
            method: Method::SpectralSequence,
            methods: vec![Method::SpectralSequence],
            entries: entries(&values),
            r,
        });
        computed.push(values);
    }
    Ok(MHMDecomposition { n: fl.dim(), faces })
}

fn closed_form(
    fl: &FaceLattice,
    method: Method,
    eval: fn(FaceId, usize, &FVector) -> Result<Values, MhmError>,
) -> Result<MHMDecomposition, MhmError> {
    let faces = fl
        .faces()
        .iter()
        .map(|face| {
            let info = face_info(fl, face.id);
            let values = eval(face.id, face.dim, &info.f)?;
            Ok(FaceANumbers {
                face: face.id,
                dim: face.dim,
                rays: face.rays.clone(),
                method,
                methods: vec![method],
                entries: entries(&values),
                r: None,
            })
        })
        .collect::<Result<Vec<_>, MhmError>>()?;
    Ok(MHMDecomposition { n: fl.dim(), faces })
}

/// Closed form for cones over simplicial polytopes, in any dimension.
pub fn a_numbers_simplicial_closed_form(fl: &FaceLattice) -> Result<MHMDecomposition, MhmError> {
    if !face_info(fl, fl.top()).over_simplicial {
        return Err(MhmError::NotInClass("simplicial"));
    }
    closed_form(fl, Method::SimplicialClosedForm, simplicial_values)
}

/// Closed form for cones over simple polytopes, in any dimension. Faces of a
/// simple polytope are simple, so every face is in the class as well.
pub fn a_numbers_simple_closed_form(fl: &FaceLattice) -> Result<MHMDecomposition, MhmError> {
    if !face_info(fl, fl.top()).over_simple {
        return Err(MhmError::NotInClass("simple"));
    }
    closed_form(fl, Method::SimpleClosedForm, simple_values)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ExtEntry {
    pub i: usize,
    pub k: usize,
    pub dim: i64,
}

/// Predicted positive-degree Ext groups `Ext^i(Ω̄^k, ω)` of a cone over a
/// simplicial polytope. They are concentrated in the degree `u = 0`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ExtPrediction {
    pub n: usize,
    pub h: Vec<i64>,
    /// Nonzero entries only, sorted by `(i, k)`.
    pub entries: Vec<ExtEntry>,
}

impl ExtPrediction {
    pub fn get(&self, i: usize, k: usize) -> i64 {
        self.entries.iter().find(|e| e.i == i && e.k == k).map(|e| e.dim).unwrap_or(0)
    }
}

/// For `1 <= l <= n-1`: `Ext^l(Ω̄^{n-l}) = h_l - h_{l-1}` when `l <= n/2` and
/// `Ext^{l-1}(Ω̄^{n-l}) = h_{l-1} - h_l` when `l >= n/2`. Everything else in
/// positive degree vanishes, including `Ω̄^0 = O_X`.
pub fn ext_dims_simplicial_polytope_cone(fl: &FaceLattice) -> Result<ExtPrediction, MhmError> {
    if !face_info(fl, fl.top()).over_simplicial {
        return Err(MhmError::NotInClass("simplicial"));
    }
    let n = fl.dim();
    let f = FVector::of(fl);
    let h = if n == 0 { Vec::new() } else { h_vector_simplicial(&f) };
    let mut map: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for l in 1..n {
        if 2 * l <= n {
            *map.entry((l, n - l)).or_default() += h[l] - h[l - 1];
        }
        if 2 * l >= n && l >= 2 {
            *map.entry((l - 1, n - l)).or_default() += h[l - 1] - h[l];
        }
    }
    let entries = map.into_iter().filter(|&(_, v)| v != 0).map(|((i, k), dim)| ExtEntry { i, k, dim }).collect();
    Ok(ExtPrediction { n, h, entries })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Summand {
    /// Rays of `λ`, as indices into the cone's ray list.
    pub face: Vec<usize>,
    pub face_dim: usize,
    pub twist: usize,
    pub multiplicity: AValue,
}

/// Weight-graded piece `gr^W_w H^{-l}`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WeightPiece {
    pub l: usize,
    pub weight: usize,
    /// Present only for `(l, w) = (0, n)`.
    pub ic_x: bool,
    pub summands: Vec<Summand>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DecompositionReport {
    pub n: usize,
    pub pieces: Vec<WeightPiece>,
    /// Largest `l` with a determined nonzero summand.
    pub lcdef_implied: usize,
    /// False when undetermined entries could raise `lcdef_implied`.
    pub lcdef_exact: bool,
    /// lcdef read off the Ext table.
    pub lcdef_ext: usize,
    pub lcdef_consistent: bool,
    pub undetermined: Vec<Summand>,
}

/// Assemble `gr^W_{n-k} H^{-l} = ⊕_j ⊕_{dim λ = k + 2j} IC_{S_λ}(-j)^{a_λ^{l,j}}`
/// and the `IC_X` summand at `(0, n)`.
pub fn decomposition_report(dec: &MHMDecomposition, table: &ExtTable) -> DecompositionReport {
    let n = dec.n;
    let mut pieces: BTreeMap<(usize, usize), Vec<Summand>> = BTreeMap::new();
    let mut undetermined = Vec::new();
    let mut lcdef_implied = 0;
    let mut max_undetermined = None;
    for f in &dec.faces {
        for e in &f.entries {
            let s = Summand { face: f.rays.clone(), face_dim: f.dim, twist: e.j, multiplicity: e.value };
            let weight = n - (f.dim - 2 * e.j);
            match e.value {
                AValue::Determined(0) => continue,
                AValue::Determined(_) => lcdef_implied = lcdef_implied.max(e.l),
                AValue::Undetermined => {
                    max_undetermined = max_undetermined.max(Some(e.l));
                    undetermined.push(s.clone());
                }
            }
            pieces.entry((e.l, weight)).or_default().push(s);
        }
    }
    pieces.entry((0, n)).or_default();
    let lcdef_exact = max_undetermined.is_none_or(|m| m <= lcdef_implied);
    let lcdef_ext = table.lcdef();
    let lcdef_consistent = if lcdef_exact { lcdef_implied == lcdef_ext } else { lcdef_implied <= lcdef_ext };
    // order: H^0 first, weights descending within a degree
    let mut keys: Vec<(usize, usize)> = pieces.keys().copied().collect();
    keys.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let pieces = keys
        .into_iter()
        .map(|(l, weight)| WeightPiece { l, weight, ic_x: l == 0 && weight == n, summands: pieces[&(l, weight)].clone() })
        .collect();
    DecompositionReport { n, pieces, lcdef_implied, lcdef_exact, lcdef_ext, lcdef_consistent, undetermined }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Dim5Inequalities {
    pub face: FaceId,
    /// `Σ_{facets} a^{0,1}` and `h^1(Ish^3)`.
    pub lower: (i64, i64),
    /// `Σ_{facets} a^{1,1}` and `h^2(Ish^3)`.
    pub upper: (i64, i64),
    pub holds: bool,
}

/// `Σ_{λ ∈ P_4} a_λ^{0,1} >= h^1(Ish_σ^3)` and `Σ_{λ ∈ P_4} a_λ^{1,1} <= h^2(Ish_σ^3)`
/// for every five-dimensional face.
pub fn dim5_inequalities(fl: &FaceLattice, table: &ExtTable, dec: &MHMDecomposition) -> Vec<Dim5Inequalities> {
    let det = |v: AValue| v.determined().unwrap_or(0) as i64;
    fl.faces_of_dim(5)
        .iter()
        .map(|&face| {
            let facets = fl.covers_down(face);
            let s01 = facets.iter().map(|&mu| det(dec.face(mu).get(0, 1))).sum();
            let s11 = facets.iter().map(|&mu| det(dec.face(mu).get(1, 1))).sum();
            let h = table.face(face);
            let lower = (s01, h.get(3, 1) as i64);
            let upper = (s11, h.get(3, 2) as i64);
            Dim5Inequalities { face, lower, upper, holds: lower.0 >= lower.1 && upper.0 <= upper.1 }
        })
        .collect()
}

/// For cones over simplicial polytopes, `a^{n-2j_0-1, j_0} = 0` forces
/// `a^{n-2j-1, j} = 0` for all `j >= j_0`. Returns the first violating `j`.
pub fn braden_violation(dec: &MHMDecomposition) -> Option<usize> {
    let top = dec.top();
    let n = dec.n;
    let mut seen_zero = false;
    let mut j = 1;
    while 2 * j < n {
        let v = top.get(n - 2 * j - 1, j);
        if seen_zero && v != AValue::Determined(0) {
            return Some(j);
        }
        seen_zero |= v == AValue::Determined(0);
        j += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named_cone;

    fn run(name: &str) -> (FaceLattice, ExtTable, MHMDecomposition) {
        let fl = FaceLattice::new(&named_cone(name).unwrap());
        let table = ExtTable::compute(&fl).unwrap();
        let dec = a_numbers(&fl, &table).unwrap();
        (fl, table, dec)
    }

    #[test]
    fn admissible_ranges() {
        assert!(admissible_pairs(2).is_empty());
        assert_eq!(admissible_pairs(3), vec![(0, 1)]);
        assert_eq!(admissible_pairs(5), vec![(0, 1), (0, 2), (1, 1), (2, 1)]);
    }

    #[test]
    fn quadric_has_one_point_summand() {
        let (_, table, dec) = run("quadric");
        assert_eq!(dec.top().get(0, 1), AValue::Determined(1));
        assert_eq!(dec.top().methods.len(), 3);
        let rep = decomposition_report(&dec, &table);
        assert_eq!(rep.lcdef_implied, 0);
        assert!(rep.lcdef_consistent);
    }

    #[test]
    fn octahedron_and_cube() {
        let (_, _, oct) = run("octahedron");
        assert_eq!(oct.top().get(1, 1), AValue::Determined(2));
        assert_eq!(oct.top().get(0, 1), AValue::Determined(0));
        let (_, _, cube) = run("cube");
        assert_eq!(cube.top().get(0, 1), AValue::Determined(2));
        assert_eq!(cube.top().get(1, 1), AValue::Determined(0));
    }

    #[test]
    fn closed_forms_reject_wrong_class() {
        let fl = FaceLattice::new(&named_cone("cube").unwrap());
        assert_eq!(a_numbers_simplicial_closed_form(&fl), Err(MhmError::NotInClass("simplicial")));
        let fl = FaceLattice::new(&named_cone("octahedron").unwrap());
        assert_eq!(a_numbers_simple_closed_form(&fl), Err(MhmError::NotInClass("simple")));
    }

    #[test]
    fn octahedron_ext_prediction() {
        let fl = FaceLattice::new(&named_cone("octahedron").unwrap());
        let p = ext_dims_simplicial_polytope_cone(&fl).unwrap();
        assert_eq!(p.get(1, 3), 2);
        assert_eq!(p.get(2, 2), 0);
        assert_eq!(p.get(2, 1), 2);
    }
}
