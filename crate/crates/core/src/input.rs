//! Cone files.
//!
//! ```json
//! { "name": "quadric", "lattice_rank": 3, "rays": [[1,0,0],[0,1,0],[1,0,1],[0,1,1]] }
//! ```
//!
//! Exactly one of `rays`, `dual_rays` and `polytope_vertices` must be given.
//! `rays` generate the cone in `N ≅ Z^lattice_rank`. `dual_rays` generate
//! `σ^∨` in `M` and the cone is recovered by dualizing. `polytope_vertices`
//! are points of `Z^{lattice_rank - 1}`; the cone is the cone over
//! `P × {1}`, so its cross-section is `P` itself.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyhedral::{homogenize_polytope, PolyError};
use crate::{Cone, IntVector};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("malformed cone file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid cone file: {0}")]
    Schema(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
#[serde(deny_unknown_fields)]
pub struct ConeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub lattice_rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_rays: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polytope_vertices: Option<Vec<Vec<i64>>>,
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum InputForm {
    Rays,
    DualRays,
    PolytopeVertices,
}

#[derive(Clone, Debug)]
pub struct ConeInput {
    pub name: Option<String>,
    pub form: InputForm,
    pub cone: Cone,
}

fn vectors(key: &str, vs: &[Vec<i64>], len: usize) -> Result<Vec<IntVector>, InputError> {
    if vs.is_empty() {
        return Err(InputError::Schema(format!("\"{key}\" is empty")));
    }
    vs.iter()
        .enumerate()
        .map(|(i, v)| {
            if v.len() != len {
                return Err(InputError::Schema(format!(
                    "\"{key}\"[{i}] has {} coordinates, expected {len}",
                    v.len()
                )));
            }
            Ok(v.iter().map(|&x| BigInt::from(x)).collect())
        })
        .collect()
}

impl ConeFile {
    pub fn into_cone(self) -> Result<ConeInput, InputError> {
        let n = self.lattice_rank;
        if n == 0 {
            return Err(InputError::Schema("lattice_rank must be positive".into()));
        }
        let given = [self.rays.is_some(), self.dual_rays.is_some(), self.polytope_vertices.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(InputError::Schema(
                "exactly one of \"rays\", \"dual_rays\", \"polytope_vertices\" is required".into(),
            ));
        }
        let (form, cone) = if let Some(rs) = &self.rays {
            (InputForm::Rays, Cone::from_rays(n, vectors("rays", rs, n)?)?)
        } else if let Some(rs) = &self.dual_rays {
            (InputForm::DualRays, Cone::from_dual_rays(n, vectors("dual_rays", rs, n)?)?)
        } else {
            let vs = self.polytope_vertices.as_deref().unwrap_or_default();
            (InputForm::PolytopeVertices, homogenize_polytope(&vectors("polytope_vertices", vs, n - 1)?)?)
        };
        Ok(ConeInput { name: self.name, form, cone })
    }
}

pub fn parse_cone(text: &str) -> Result<ConeInput, InputError> {
    serde_json::from_str::<ConeFile>(text)?.into_cone()
}

/// Cone file listing the rays of `cone`. Fails if a coordinate exceeds `i64`.
pub fn cone_file(name: Option<&str>, cone: &Cone) -> Option<ConeFile> {
    let rays = cone
        .rays()
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).ok()).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    Some(ConeFile { name: name.map(str::to_string), lattice_rank: cone.lattice_rank(), rays: Some(rays), ..Default::default() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FaceLattice;

    #[test]
    fn three_forms() {
        let q = parse_cone(r#"{"lattice_rank": 3, "rays": [[1,0,0],[0,1,0],[1,0,1],[0,1,1]]}"#).unwrap();
        assert_eq!(FaceLattice::new(&q.cone).f_vector(), vec![1, 4, 4, 1]);
        let sq = parse_cone(r#"{"name": "sq", "lattice_rank": 3, "polytope_vertices": [[0,0],[1,0],[0,1],[1,1]]}"#).unwrap();
        assert_eq!(sq.form, InputForm::PolytopeVertices);
        assert_eq!(FaceLattice::new(&sq.cone).f_vector(), vec![1, 4, 4, 1]);
        let d = parse_cone(
            r#"{"lattice_rank": 5, "dual_rays": [[1,0,0,0,0],[0,1,1,0,0],[0,0,0,1,1],[0,0,0,0,1],[0,0,1,1,0],[1,1,0,0,0]]}"#,
        )
        .unwrap();
        assert_eq!(FaceLattice::new(&d.cone).f_vector(), vec![1, 9, 18, 15, 6, 1]);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(parse_cone("{"), Err(InputError::Json(_))));
        assert!(matches!(parse_cone(r#"{"lattice_rank": 2}"#), Err(InputError::Schema(_))));
        assert!(matches!(
            parse_cone(r#"{"lattice_rank": 2, "rays": [[1,0]], "dual_rays": [[1,0]]}"#),
            Err(InputError::Schema(_))
        ));
        assert!(matches!(parse_cone(r#"{"lattice_rank": 2, "rays": [[1,0,0]]}"#), Err(InputError::Schema(_))));
        assert!(matches!(parse_cone(r#"{"lattice_rank": 2, "rays": [[1,0],[-1,0],[0,1]]}"#), Err(InputError::Poly(_))));
        assert!(matches!(parse_cone(r#"{"lattice_rank": 2, "rays": [[1,0]], "extra": 1}"#), Err(InputError::Json(_))));
    }

    #[test]
    fn round_trip() {
        let q = parse_cone(r#"{"lattice_rank": 3, "rays": [[1,0,0],[0,1,0],[1,0,1],[0,1,1]]}"#).unwrap();
        let text = serde_json::to_string(&cone_file(Some("q"), &q.cone).unwrap()).unwrap();
        let back = parse_cone(&text).unwrap();
        assert_eq!(back.cone.rays(), q.cone.rays());
    }
}
