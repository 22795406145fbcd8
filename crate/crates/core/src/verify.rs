//! Verification suites run on single cones or whole corpora.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::combinatorics::{
    hodge_deligne_polynomial, hodge_du_bois_table, simple_a_forms, simple_h1_euler, FVector,
};
use crate::corpus;
use crate::ishida::{
    verify_d_squared, verify_h0, verify_ish_n_exact, verify_simple_vanishing, verify_simplicial_link_exactness,
    verify_surjectivity, CheckReport, ExtTable,
};
use crate::mhm::{
    a_numbers, a_numbers_simple_closed_form, a_numbers_simplicial_closed_form, admissible_pairs, braden_violation,
    decomposition_report, dim5_inequalities, ext_dims_simplicial_polytope_cone, AValue, MHMDecomposition,
};
use crate::polyhedral::{
    is_cone_over_simple, is_cone_over_simplicial, quotient_cone, shelling, verify_shelling, FaceLattice,
};
use crate::Cone;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    D2,
    IshN,
    Surjectivity,
    Codim,
    Link,
    Shelling,
    Inequalities,
    ClosedForms,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::D2,
        Suite::IshN,
        Suite::Surjectivity,
        Suite::Codim,
        Suite::Link,
        Suite::Shelling,
        Suite::Inequalities,
        Suite::ClosedForms,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::D2 => "d2",
            Suite::IshN => "ish_n",
            Suite::Surjectivity => "surjectivity",
            Suite::Codim => "codim",
            Suite::Link => "link",
            Suite::Shelling => "shelling",
            Suite::Inequalities => "inequalities",
            Suite::ClosedForms => "closed_forms",
            Suite::All => "all",
        }
    }

    fn expand(self) -> Vec<Suite> {
        if self == Suite::All {
            Suite::EACH.to_vec()
        } else {
            vec![self]
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub name: String,
    pub dim: usize,
    pub rays: usize,
    pub checks: Vec<CheckReport>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub cases: usize,
    pub checks: usize,
    pub failures: Vec<String>,
    pub results: Vec<CaseReport>,
}

/// Lazily computed data for one cone.
struct Case<'a> {
    fl: &'a FaceLattice,
    table: Option<Result<ExtTable, String>>,
    dec: Option<Result<MHMDecomposition, String>>,
}

impl<'a> Case<'a> {
    fn table(&mut self) -> Result<&ExtTable, String> {
        let fl = self.fl;
        self.table
            .get_or_insert_with(|| ExtTable::compute(fl).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn dec(&mut self) -> Result<&MHMDecomposition, String> {
        if self.dec.is_none() {
            let fl = self.fl;
            let d = match self.table() {
                Ok(t) => a_numbers(fl, t).map_err(|e| e.to_string()),
                Err(e) => Err(e),
            };
            self.dec = Some(d);
        }
        self.dec.as_ref().expect("just set").as_ref().map_err(Clone::clone)
    }
}

fn error_report(name: &str, err: String) -> CheckReport {
    let mut r = CheckReport::new(name);
    r.expect(false, || format!("computation error: {err}"));
    r
}

/// Run `suite` on one cone.
pub fn run_case(name: &str, fl: &FaceLattice, suite: Suite) -> CaseReport {
    let mut case = Case { fl, table: None, dec: None };
    let mut checks = Vec::new();
    for s in suite.expand() {
        match s {
            Suite::D2 => checks.push(verify_d_squared(fl).unwrap_or_else(|e| error_report("d_squared", e.to_string()))),
            Suite::IshN => match case.table() {
                Ok(t) => {
                    checks.push(verify_ish_n_exact(t));
                    checks.push(verify_h0(t));
                }
                Err(e) => checks.push(error_report("ish_n", e)),
            },
            Suite::Surjectivity => match case.table() {
                Ok(t) => checks.push(verify_surjectivity(t)),
                Err(e) => checks.push(error_report("surjectivity", e)),
            },
            Suite::Codim => match case.table() {
                Ok(t) => checks.push(verify_simple_vanishing(fl, t)),
                Err(e) => checks.push(error_report("codim", e)),
            },
            Suite::Link => checks.push(link_suite(fl)),
            Suite::Shelling => checks.push(shelling_suite(fl)),
            Suite::Inequalities => checks.push(inequality_suite(&mut case)),
            Suite::ClosedForms => checks.extend(closed_form_suite(&mut case)),
            Suite::All => unreachable!("expanded above"),
        }
    }
    CaseReport { name: name.to_string(), dim: fl.dim(), rays: fl.cone().rays().len(), checks }
}

/// Every face whose quotient is simplicial.
fn link_suite(fl: &FaceLattice) -> CheckReport {
    let mut report = CheckReport::new("link");
    for face in fl.faces() {
        let simplicial = match quotient_cone(fl, face.id) {
            Ok(q) => q.is_simplicial(),
            Err(e) => {
                report.expect(false, || format!("face {}: {e}", face.id));
                continue;
            }
        };
        if !simplicial {
            continue;
        }
        match verify_simplicial_link_exactness(fl, face.id) {
            Ok(sub) => {
                report.checked += sub.checked;
                if !sub.passed {
                    report.passed = false;
                    report.failures.extend(sub.failures);
                }
            }
            Err(e) => report.expect(false, || format!("face {}: {e}", face.id)),
        }
    }
    report
}

fn shelling_suite(fl: &FaceLattice) -> CheckReport {
    let mut report = CheckReport::new("shelling");
    match shelling(fl) {
        Ok(s) => {
            report.expect(verify_shelling(fl, &s.order), || format!("line shelling {:?} does not verify", s.order));
            report.expect(s.order.len() == fl.faces_of_dim(fl.dim().saturating_sub(1)).len(), || {
                "shelling does not list every facet".to_string()
            });
        }
        Err(e) => report.expect(false, || format!("no shelling: {e}")),
    }
    report
}

fn inequality_suite(case: &mut Case) -> CheckReport {
    let mut report = CheckReport::new("inequalities");
    let fl = case.fl;
    if fl.faces_of_dim(5).is_empty() {
        return report;
    }
    let dec = match case.dec() {
        Ok(d) => d.clone(),
        Err(e) => return error_report("inequalities", e),
    };
    let table = case.table().expect("decomposition implies a table");
    for ineq in dim5_inequalities(fl, table, &dec) {
        report.expect(ineq.holds, || {
            format!(
                "face {}: Σ a^(0,1) = {} < h^1 = {} or Σ a^(1,1) = {} > h^2 = {}",
                ineq.face, ineq.lower.0, ineq.lower.1, ineq.upper.0, ineq.upper.1
            )
        });
    }
    report
}

fn closed_form_suite(case: &mut Case) -> Vec<CheckReport> {
    let fl = case.fl;
    let n = fl.dim();
    let dec = match case.dec() {
        Ok(d) => d.clone(),
        Err(e) => return vec![error_report("a_numbers", e)],
    };
    let table = case.table().expect("decomposition implies a table").clone();
    let mut out = Vec::new();

    let mut shape = CheckReport::new("a_number_shape");
    for f in &dec.faces {
        let pairs: Vec<(usize, usize)> = f.entries.iter().map(|e| (e.l, e.j)).collect();
        shape.expect(pairs == admissible_pairs(f.dim), || format!("face {}: entries at {pairs:?}", f.face));
        if fl.face(f.face).is_simplicial() {
            shape.expect(f.entries.iter().all(|e| e.value == AValue::Determined(0)), || {
                format!("simplicial face {} has a nonzero multiplicity", f.face)
            });
        }
    }
    let rep = decomposition_report(&dec, &table);
    shape.expect(rep.lcdef_consistent, || {
        format!("decomposition lcdef {} vs Ext lcdef {}", rep.lcdef_implied, rep.lcdef_ext)
    });
    out.push(shape);

    let f = FVector::of(fl);
    if is_cone_over_simplicial(fl) {
        let mut r = CheckReport::new("simplicial_closed_form");
        match a_numbers_simplicial_closed_form(fl) {
            Ok(cf) => compare_decompositions(&mut r, &dec, &cf),
            Err(e) => r.expect(false, || e.to_string()),
        }
        r.expect(braden_violation(&dec).is_none(), || "vanishing does not propagate upwards".to_string());
        match ext_dims_simplicial_polytope_cone(fl) {
            Ok(pred) => {
                let top = fl.top();
                for k in 0..=n {
                    for i in 1..=n - k {
                        for fc in &table.faces {
                            let want = if fc.face == top { pred.get(i, k) } else { 0 };
                            let got = table.ext_dim(fc.face, i, k) as i64;
                            r.expect(got == want, || {
                                format!("Ext^{i}(Ω^{k}) at face {}: computed {got}, predicted {want}", fc.face)
                            });
                        }
                    }
                }
            }
            Err(e) => r.expect(false, || e.to_string()),
        }
        out.push(r);
    }
    if is_cone_over_simple(fl) {
        let mut r = CheckReport::new("simple_closed_form");
        match a_numbers_simple_closed_form(fl) {
            Ok(cf) => compare_decompositions(&mut r, &dec, &cf),
            Err(e) => r.expect(false, || e.to_string()),
        }
        let top = table.face(fl.top());
        for j in 0..n.div_ceil(2) {
            if j >= 1 {
                let forms = simple_a_forms(&f, j);
                r.expect(forms[0] == forms[1] && forms[1] == forms[2], || format!("j = {j}: forms {forms:?} differ"));
            }
            let got = top.get(n - j, 1) as i64;
            let want = simple_h1_euler(&f, j);
            r.expect(got == want, || format!("j = {j}: H^1(Ish^{}) = {got}, Euler count {want}", n - j));
        }
        if n >= 2 {
            let pf = f.polytope();
            let hodge = hodge_du_bois_table(&pf);
            let e = hodge_deligne_polynomial(&pf);
            r.expect(hodge.signed_columns() == e, || {
                format!("signed Hodge columns {:?} vs E(X) {:?}", hodge.signed_columns(), e)
            });
            let betti = hodge.betti_numbers();
            let chi: i64 = betti.iter().enumerate().map(|(k, b)| if k % 2 == 0 { *b } else { -b }).sum();
            r.expect(chi == e.iter().sum::<i64>(), || format!("Euler characteristic {chi} vs E(1,1)"));
        }
        out.push(r);
    }
    out
}

fn compare_decompositions(r: &mut CheckReport, a: &MHMDecomposition, b: &MHMDecomposition) {
    for (fa, fb) in a.faces.iter().zip(&b.faces) {
        for (ea, eb) in fa.entries.iter().zip(&fb.entries) {
            r.expect(ea == eb, || {
                format!("face {} (l, j) = ({}, {}): {:?} vs closed form {:?}", fa.face, ea.l, ea.j, ea.value, eb.value)
            });
        }
    }
}

pub fn run_suite(suite: Suite, cones: &[(String, Cone)]) -> SuiteReport {
    let results: Vec<CaseReport> =
        cones.iter().map(|(name, c)| run_case(name, &FaceLattice::new(c), suite)).collect();
    let mut failures = Vec::new();
    let mut checks = 0;
    for case in &results {
        for c in &case.checks {
            checks += c.checked;
            failures.extend(c.failures.iter().map(|f| format!("{} [{}]: {f}", case.name, c.name)));
        }
    }
    SuiteReport { suite, passed: failures.is_empty(), cases: results.len(), checks, failures, results }
}

/// Named cones plus seeded random cones of dimensions 3 to 6: per dimension,
/// box-sampled, simplicial-type, simple-type and 0/1-polytope cones.
pub fn verification_corpus(seed: u64) -> Vec<(String, Cone)> {
    let mut out: Vec<(String, Cone)> = corpus::named_cones().into_iter().map(|(n, c)| (n.to_string(), c)).collect();
    let mut rng = corpus::rng(seed);
    for dim in 3..=6 {
        let per = if dim == 6 { 1 } else { 3 };
        for i in 0..per {
            out.push((format!("box{dim}_{i}"), corpus::random_box_cone(&mut rng, dim)));
            out.push((format!("simplicial{dim}_{i}"), corpus::random_simplicial_type(&mut rng, dim)));
            out.push((format!("simple{dim}_{i}"), corpus::random_simple_type(&mut rng, dim)));
            out.push((format!("zero_one{dim}_{i}"), corpus::random_degenerate(&mut rng, dim)));
        }
    }
    out
}

/// `count` box-sampled cones of dimension `dim`.
pub fn random_corpus(dim: usize, count: usize, seed: u64) -> Vec<(String, Cone)> {
    corpus::random_cones(dim, count, seed).into_iter().enumerate().map(|(i, c)| (format!("random{dim}_{i}"), c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.iter().chain([Suite::All].iter()) {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), *s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn all_suites_pass_on_small_cones() {
        let cones: Vec<(String, Cone)> = ["quadric", "octahedron", "cube", "square_pyramid"]
            .iter()
            .map(|n| (n.to_string(), corpus::named_cone(n).unwrap()))
            .collect();
        let rep = run_suite(Suite::All, &cones);
        assert!(rep.passed, "{:?}", rep.failures);
        assert!(rep.checks > 100);
    }
}
