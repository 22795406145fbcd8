//! Structural identities every Ishida computation must satisfy.

use serde::Serialize;

use super::{Builder, ExtTable, IshidaComplex, IshidaError};
use crate::linalg::binomial;
use crate::polyhedral::{is_simple_in_dim, quotient_cone, FaceId, FaceLattice};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport { name: name.to_string(), passed: true, checked: 0, failures: Vec::new() }
    }

    pub fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            self.failures.push(what());
        }
    }
}

/// Degrees `i` with `d^{i+1} ∘ d^i != 0`.
pub fn d_squared_failures(ish: &IshidaComplex) -> Result<Vec<usize>, IshidaError> {
    let mut out = Vec::new();
    for i in 0..ish.differentials.len().saturating_sub(1) {
        if !ish.differentials[i + 1].mul(&ish.differentials[i])?.is_zero() {
            out.push(i);
        }
    }
    Ok(out)
}

/// `d^{i+1} ∘ d^i = 0` for every `Ish_σ^l`.
pub fn verify_d_squared(fl: &FaceLattice) -> Result<CheckReport, IshidaError> {
    let mut report = CheckReport::new("d_squared");
    let mut b = Builder::new(fl);
    for l in 0..=fl.dim() {
        let ish = b.full(l)?;
        let bad = d_squared_failures(&ish)?;
        report.expect(bad.is_empty(), || format!("d^(i+1) d^i != 0 for l = {l} at i in {bad:?}"));
    }
    Ok(report)
}

/// `H^0(Ish_X^l)_u` has dimension `C(n - dim τ, l)` in the class of `τ`.
pub fn verify_h0(table: &ExtTable) -> CheckReport {
    let mut report = CheckReport::new("h0");
    let n = table.n;
    for fc in &table.faces {
        for l in 0..=n {
            let got = table.graded_piece_dims(fc.face, l)[0];
            let want = binomial((n - fc.dim) as i64, l as i64) as usize;
            report.expect(got == want, || format!("face {} l = {l}: H^0 = {got}, expected {want}", fc.face));
        }
    }
    report
}

/// `Ish_X^n` resolves `ω_X`: only `H^0` survives and it has the graded
/// dimension of `ω_X`, one in the interior class and zero elsewhere.
pub fn verify_ish_n_exact(table: &ExtTable) -> CheckReport {
    let mut report = CheckReport::new("ish_n");
    let n = table.n;
    let top = table.faces.len() - 1;
    if n > 0 {
        let h = &table.face(top).h[n];
        report.expect(h.iter().all(|&x| x == 0), || format!("Ish_σ^n has cohomology {h:?}"));
    }
    for fc in &table.faces {
        let dims = table.graded_piece_dims(fc.face, n);
        let omega = binomial((n - fc.dim) as i64, n as i64) as usize;
        report.expect(dims[0] == omega && dims[1..].iter().all(|&x| x == 0), || {
            format!("face {}: graded cohomology {dims:?}, expected {omega} in degree 0 only", fc.face)
        });
    }
    report
}

/// For `k <= n/2` the top cohomology `H^{n-k}(Ish_X^{n-k})` vanishes.
pub fn verify_surjectivity(table: &ExtTable) -> CheckReport {
    let mut report = CheckReport::new("surjectivity");
    let n = table.n;
    for k in 0..=n / 2 {
        for fc in &table.faces {
            let got = table.ext_dim(fc.face, n - k, k);
            report.expect(got == 0, || format!("face {} k = {k}: top cohomology {got}", fc.face));
        }
    }
    report
}

/// If `σ` is simple in dimension `c` then `Ext^i(Ω̄^k, ω) = 0` for `i > c`
/// and `lcdef <= max(0, c - 1)`.
pub fn verify_simple_vanishing(fl: &FaceLattice, table: &ExtTable) -> CheckReport {
    let mut report = CheckReport::new("codim");
    let n = table.n;
    let lcdef = table.lcdef();
    for c in 0..=n {
        if !is_simple_in_dim(fl, c) {
            continue;
        }
        for k in 0..=n {
            for i in c + 1..=n - k {
                for fc in &table.faces {
                    let got = table.ext_dim(fc.face, i, k);
                    report.expect(got == 0, || format!("simple in dim {c}: Ext^{i}(Ω^{k}) = {got} at face {}", fc.face));
                }
            }
        }
        let bound = c.saturating_sub(1);
        report.expect(lcdef <= bound, || format!("simple in dim {c}: lcdef {lcdef} > {bound}"));
    }
    report
}

/// Over a face `μ` of dimension `m` with simplicial quotient, the complex on
/// faces containing `μ` is exact for every `l > m`; for `l = m` it is a single
/// copy of `Q`.
pub fn verify_simplicial_link_exactness(fl: &FaceLattice, mu: FaceId) -> Result<CheckReport, IshidaError> {
    if mu >= fl.len() {
        return Err(IshidaError::UnknownFace(mu));
    }
    if !quotient_cone(fl, mu)?.is_simplicial() {
        return Err(IshidaError::QuotientNotSimplicial(mu));
    }
    let mut report = CheckReport::new("link");
    let m = fl.face(mu).dim;
    let mut b = Builder::new(fl);
    let base = b.above(mu, m)?.cohomology_dims();
    report.expect(base == vec![1], || format!("face {mu}: l = m complex has cohomology {base:?}"));
    for l in m + 1..=fl.dim() {
        let h = b.above(mu, l)?.cohomology_dims();
        report.expect(h.iter().all(|&x| x == 0), || format!("face {mu} l = {l}: cohomology {h:?}"));
    }
    Ok(report)
}
