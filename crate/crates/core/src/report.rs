//! Output documents for the command-line tool: JSON with sorted keys and a
//! plain-text table rendering.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{
    g_polynomial, hodge_deligne_polynomial, hodge_du_bois_table, FVector, HodgeTable, ICStalkPoly, PolytopeFVector,
};
use crate::input::InputForm;
use crate::ishida::{ComplexSummary, Depth, ExtTable};
use crate::mhm::{AValue, DecompositionReport, MHMDecomposition};
use crate::polyhedral::{is_cone_over_simple, is_cone_over_simplicial, is_simple_in_dim, FaceId, FaceLattice, Shelling};
use crate::verify::SuiteReport;

pub const SCHEMA_VERSION: u32 = 1;

/// Coordinates that fit in `i64` become numbers, larger ones strings.
pub fn int_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

/// `{"command", "schema_version", "result", ...}` with keys sorted.
pub fn envelope(command: &str, name: Option<&str>, result: &impl Serialize) -> Value {
    let mut v = json!({
        "command": command,
        "schema_version": SCHEMA_VERSION,
        "result": serde_json::to_value(result).expect("reports serialize"),
    });
    if let Some(n) = name {
        v["name"] = json!(n);
    }
    v
}

pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub trait Render: Serialize {
    fn table(&self) -> String;
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceSummary {
    pub id: FaceId,
    pub dim: usize,
    pub rays: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FacesReport {
    pub input_form: InputForm,
    pub lattice_rank: usize,
    pub rays: Vec<Vec<Value>>,
    pub facet_normals: Vec<Vec<Value>>,
    pub f_vector: Vec<usize>,
    pub simplicial: bool,
    pub cone_over_simplicial: bool,
    pub cone_over_simple: bool,
    /// Entry `c` says whether the cone is simple in dimension `c`.
    pub simple_in_dim: Vec<bool>,
    pub diamond_property: bool,
    pub faces: Vec<FaceSummary>,
}

pub fn faces_report(form: InputForm, fl: &FaceLattice) -> FacesReport {
    let c = fl.cone();
    let vecs = |vs: &[Vec<BigInt>]| vs.iter().map(|v| v.iter().map(int_json).collect()).collect();
    FacesReport {
        input_form: form,
        lattice_rank: c.lattice_rank(),
        rays: vecs(c.rays()),
        facet_normals: vecs(c.facet_normals()),
        f_vector: fl.f_vector(),
        simplicial: c.is_simplicial(),
        cone_over_simplicial: is_cone_over_simplicial(fl),
        cone_over_simple: is_cone_over_simple(fl),
        simple_in_dim: (0..=fl.dim()).map(|k| is_simple_in_dim(fl, k)).collect(),
        diamond_property: fl.check_diamond(),
        faces: fl.faces().iter().map(|f| FaceSummary { id: f.id, dim: f.dim, rays: f.rays.clone() }).collect(),
    }
}

impl Render for FacesReport {
    fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "f-vector: {}", join(&self.f_vector));
        let _ = writeln!(s, "rays: {}", self.rays.len());
        let _ = writeln!(s, "simplicial: {}", self.simplicial);
        let _ = writeln!(s, "cone over simplicial polytope: {}", self.cone_over_simplicial);
        let _ = writeln!(s, "cone over simple polytope: {}", self.cone_over_simple);
        let simple: Vec<usize> = (0..self.simple_in_dim.len()).filter(|&c| self.simple_in_dim[c]).collect();
        let _ = writeln!(s, "simple in dimensions: {}", join(&simple));
        let _ = writeln!(s, "{:>5} {:>4}  rays", "face", "dim");
        for f in &self.faces {
            let _ = writeln!(s, "{:>5} {:>4}  {}", f.id, f.dim, join(&f.rays));
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassPiece {
    pub face: Vec<usize>,
    pub dim: usize,
    /// The class of the degree `u = 0`.
    pub degree_zero: bool,
    pub cohomology: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IshidaReport {
    pub l: usize,
    /// The degree-zero complex `Ish_σ^l`.
    pub complex: ComplexSummary,
    /// Graded cohomology of `Ish_X^l` per degree class.
    pub classes: Vec<ClassPiece>,
}

pub fn ishida_report(fl: &FaceLattice, table: &ExtTable, complex: ComplexSummary, face: Option<FaceId>) -> IshidaReport {
    let l = complex.l;
    let ids: Vec<FaceId> = match face {
        Some(f) => vec![f],
        None => (0..fl.len()).collect(),
    };
    let classes = ids
        .into_iter()
        .map(|t| ClassPiece {
            face: fl.face(t).rays.clone(),
            dim: fl.face(t).dim,
            degree_zero: t == fl.top(),
            cohomology: table.graded_piece_dims(t, l),
        })
        .collect();
    IshidaReport { l, complex, classes }
}

impl Render for IshidaReport {
    fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "Ish^{} in degree 0", self.l);
        let _ = writeln!(s, "  term dims:  {}", join(&self.complex.term_dims));
        let _ = writeln!(s, "  cohomology: {}", join(&self.complex.cohomology));
        let _ = writeln!(s, "graded cohomology by class");
        for c in &self.classes {
            let mark = if c.degree_zero { " (u = 0)" } else { "" };
            let _ = writeln!(s, "  face [{}] dim {}{mark}: {}", join(&c.face), c.dim, join(&c.cohomology));
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtClass {
    pub face: Vec<usize>,
    pub dim: usize,
    pub degree_zero: bool,
    /// Intrinsic `h^i(Ish_τ^m)`, indexed `[m][i]`.
    pub ishida: Vec<Vec<usize>>,
    /// `Ext^i(Ω̄^k, ω)` in this class, indexed `[k][i]`.
    pub ext: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtReport {
    pub n: usize,
    pub classes: Vec<ExtClass>,
    /// Depth of `Ω̄^k` for `k = 0..=n`.
    pub depth: Vec<Depth>,
    pub lcdef: usize,
}

pub fn ext_report(fl: &FaceLattice, table: &ExtTable) -> ExtReport {
    let n = table.n;
    let classes = table
        .faces
        .iter()
        .map(|fc| ExtClass {
            face: fl.face(fc.face).rays.clone(),
            dim: fc.dim,
            degree_zero: fc.face == fl.top(),
            ishida: fc.h.clone(),
            ext: (0..=n).map(|k| (0..=n - k).map(|i| table.ext_dim(fc.face, i, k)).collect()).collect(),
        })
        .collect();
    ExtReport { n, classes, depth: (0..=n).map(|k| table.depth(k)).collect(), lcdef: table.lcdef() }
}

impl Render for ExtReport {
    fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "lcdef: {}", self.lcdef);
        for (k, d) in self.depth.iter().enumerate() {
            let _ = writeln!(s, "depth Ω^{k}: {}{}", d.value, if d.maximal { " (maximal)" } else { "" });
        }
        for c in &self.classes {
            let nonzero: Vec<String> = c
                .ext
                .iter()
                .enumerate()
                .flat_map(|(k, row)| {
                    row.iter().enumerate().filter(|&(i, &v)| i > 0 && v > 0).map(move |(i, v)| format!("Ext^{i}(Ω^{k})={v}"))
                })
                .collect();
            if nonzero.is_empty() {
                continue;
            }
            let mark = if c.degree_zero { " (u = 0)" } else { "" };
            let _ = writeln!(s, "face [{}]{mark}: {}", join(&c.face), nonzero.join(", "));
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LcdefReport {
    pub lcdef: usize,
}

impl Render for LcdefReport {
    fn table(&self) -> String {
        format!("{}\n", self.lcdef)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecomposeReport {
    pub a_numbers: MHMDecomposition,
    pub report: DecompositionReport,
}

impl Render for DecomposeReport {
    fn table(&self) -> String {
        let mut s = String::new();
        let r = &self.report;
        for p in &r.pieces {
            let mut parts = Vec::new();
            if p.ic_x {
                parts.push("IC_X".to_string());
            }
            for sm in &p.summands {
                let m = match sm.multiplicity {
                    AValue::Determined(v) => v.to_string(),
                    AValue::Undetermined => "?".to_string(),
                };
                parts.push(format!("IC[{}](-{})^{m}", join(&sm.face), sm.twist));
            }
            let degree = if p.l == 0 { "0".to_string() } else { format!("-{}", p.l) };
            let _ = writeln!(s, "gr^W_{} H^{degree}: {}", p.weight, parts.join(" + "));
        }
        let exact = if r.lcdef_exact { "" } else { " (lower bound)" };
        let _ = writeln!(s, "lcdef from decomposition: {}{exact}; from Ext: {}", r.lcdef_implied, r.lcdef_ext);
        if !r.undetermined.is_empty() {
            let _ = writeln!(s, "undetermined summands: {}", r.undetermined.len());
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GpolyReport {
    pub f_vector: Vec<i64>,
    pub g: Vec<i64>,
    pub toric_h: Vec<i64>,
}

pub fn gpoly_report(fl: &FaceLattice) -> GpolyReport {
    let ICStalkPoly { g, h } = g_polynomial(fl);
    GpolyReport { f_vector: FVector::of(fl).f, g, toric_h: h }
}

impl Render for GpolyReport {
    fn table(&self) -> String {
        format!("f-vector: {}\ng: {}\ntoric h: {}\n", join(&self.f_vector), join(&self.g), join(&self.toric_h))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HodgeReport {
    pub polytope_f_vector: Vec<i64>,
    pub hodge_du_bois: HodgeTable,
    pub betti: Vec<i64>,
    pub hodge_deligne: Vec<i64>,
    /// Signed column sums of the table agree with `hodge_deligne`.
    pub consistent: bool,
}

pub fn hodge_report(f: &PolytopeFVector) -> HodgeReport {
    let table = hodge_du_bois_table(f);
    let e = hodge_deligne_polynomial(f);
    HodgeReport {
        polytope_f_vector: f.f.clone(),
        betti: table.betti_numbers(),
        consistent: table.signed_columns() == e,
        hodge_deligne: e,
        hodge_du_bois: table,
    }
}

impl Render for HodgeReport {
    fn table(&self) -> String {
        let t = &self.hodge_du_bois;
        let mut s = String::new();
        let _ = writeln!(s, "Hodge-Du Bois numbers, rows q = {}..0, columns p = 0..{}", t.n, t.n);
        for q in (0..=t.n).rev() {
            let row: Vec<String> = (0..=t.n).map(|p| format!("{:>4}", t.get(p, q))).collect();
            let _ = writeln!(s, "q={q:<2}{}", row.join(""));
        }
        let _ = writeln!(s, "Betti numbers: {}", join(&self.betti));
        let _ = writeln!(s, "E(X) coefficients of (uv)^p: {}", join(&self.hodge_deligne));
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ShellingReport {
    /// Facets in shelling order, as ray sets.
    pub order: Vec<Vec<usize>>,
    pub facet_ids: Vec<FaceId>,
    pub shelling: Shelling,
    pub verified: bool,
}

pub fn shelling_report(fl: &FaceLattice, shelling: Shelling, verified: bool) -> ShellingReport {
    ShellingReport {
        order: shelling.order.iter().map(|&f| fl.face(f).rays.clone()).collect(),
        facet_ids: shelling.order.clone(),
        shelling,
        verified,
    }
}

impl Render for ShellingReport {
    fn table(&self) -> String {
        let mut s = String::new();
        for (i, f) in self.order.iter().enumerate() {
            let _ = writeln!(s, "{:>3}: [{}]", i + 1, join(f));
        }
        let _ = writeln!(s, "verified: {}", self.verified);
        s
    }
}

impl Render for SuiteReport {
    fn table(&self) -> String {
        let mut s = String::new();
        for c in &self.results {
            let checked: usize = c.checks.iter().map(|x| x.checked).sum();
            let status = if c.passed() { "pass" } else { "FAIL" };
            let _ = writeln!(s, "{status} {:<28} dim {} rays {:>2} checks {checked}", c.name, c.dim, c.rays);
        }
        for f in &self.failures {
            let _ = writeln!(s, "  {f}");
        }
        let _ = writeln!(
            s,
            "suite {}: {} ({} cones, {} checks, {} failures)",
            self.suite,
            if self.passed { "pass" } else { "FAIL" },
            self.cases,
            self.checks,
            self.failures.len()
        );
        s
    }
}
