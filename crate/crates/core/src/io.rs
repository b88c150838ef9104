//! JSON forms of algebras, modules and loop-construction requests.
//!
//! Every document carries `"format": 1`. Scalars are literals such as
//! `"1/2 - 3*z^2"`; brackets list only `i < j`. Errors name the offending
//! JSON path.
//!
//! ```
//! use gsla_core::catalog::pauli_sl2;
//! use gsla_core::exactfield::Field;
//! use gsla_core::io::{algebra_to_json, parse_algebra};
//! let g = pauli_sl2(&Field::rationals()).unwrap();
//! let text = serde_json::to_string(&algebra_to_json(&g)).unwrap();
//! let back = parse_algebra(&text).unwrap();
//! assert!(back.same_structure(&g));
//! let err = parse_algebra(&text.replace("\"dim\":3", "\"dim\":\"3\"")).unwrap_err();
//! assert!(err.to_string().contains("dim"));
//! ```

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::abgroup::{FinAbGroup, GroupElem};
use crate::action::SparseVec;
use crate::error::{Error, Result};
use crate::exactfield::{format_scalar, parse_scalar, Field, FieldSpec, Matrix};
use crate::gradedmod::GradedModule;
use crate::liecore::GradedLieAlgebra;

pub const FORMAT: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub moduli: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quotient_by: Vec<GroupElem>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffJson {
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<CoeffJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub format: u32,
    pub field: FieldSpec,
    pub group: GroupJson,
    pub dim: usize,
    pub degrees: Vec<GroupElem>,
    pub brackets: Vec<BracketJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionJson {
    pub xi: usize,
    pub vj: usize,
    pub coeffs: Vec<CoeffJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub format: u32,
    pub algebra: AlgebraJson,
    /// defaults to the algebra's group
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupJson>,
    pub dim: usize,
    pub degrees: Vec<GroupElem>,
    pub action: Vec<ActionJson>,
}

/// Input of `loop-build`: `Q`, generators of `P`, and `a` graded by `Q/P`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopBuildJson {
    pub format: u32,
    pub group: GroupJson,
    #[serde(rename = "P")]
    pub p: Vec<GroupElem>,
    pub a: AlgebraJson,
}

fn at(path: impl std::fmt::Display, msg: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("{path}: {msg}"))
}

/// Deserializes `text`, reporting the JSON path of any type error.
pub fn from_str<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let path = if path.is_empty() || path == "." { "$".to_string() } else { format!("$.{path}") };
        at(path, e.into_inner())
    })
}

fn check_format(path: &str, f: u32) -> Result<()> {
    if f != FORMAT {
        return Err(at(format!("{path}format"), format!("unsupported format {f}, expected {FORMAT}")));
    }
    Ok(())
}

pub fn group_from_json(path: &str, g: &GroupJson) -> Result<FinAbGroup> {
    let q = FinAbGroup::new(g.moduli.clone()).map_err(|e| at(format!("{path}.moduli"), e))?;
    if g.quotient_by.is_empty() {
        return Ok(q);
    }
    for (n, a) in g.quotient_by.iter().enumerate() {
        elem_from_json(&format!("{path}.quotient_by[{n}]"), &q, a)?;
    }
    q.quotient(&g.quotient_by).map_err(|e| at(format!("{path}.quotient_by"), e))
}

pub fn group_to_json(q: &FinAbGroup) -> GroupJson {
    GroupJson {
        moduli: q.moduli().to_vec(),
        quotient_by: q.quotient_generators().to_vec(),
    }
}

/// Coordinates must already be reduced: `0 ≤ a_i < n_i`.
fn elem_from_json(path: &str, q: &FinAbGroup, a: &GroupElem) -> Result<GroupElem> {
    if a.coords().len() != q.rank() {
        return Err(at(path, format!("expected {} coordinates, got {}", q.rank(), a.coords().len())));
    }
    if let Some((x, n)) = a.coords().iter().zip(q.moduli()).find(|(x, n)| x >= n) {
        return Err(at(path, format!("coordinate {x} not reduced modulo {n}")));
    }
    q.canonical(a).map_err(|e| at(path, e))
}

fn degrees_from_json(path: &str, q: &FinAbGroup, dim: usize, degrees: &[GroupElem]) -> Result<Vec<GroupElem>> {
    if degrees.len() != dim {
        return Err(at(format!("{path}.degrees"), format!("{} degrees for dimension {dim}", degrees.len())));
    }
    degrees
        .iter()
        .enumerate()
        .map(|(n, d)| elem_from_json(&format!("{path}.degrees[{n}]"), q, d))
        .collect()
}

fn coeffs_from_json(path: &str, field: &Field, dim: usize, coeffs: &[CoeffJson]) -> Result<SparseVec> {
    let mut out = SparseVec::new();
    for (m, c) in coeffs.iter().enumerate() {
        if c.k >= dim {
            return Err(at(format!("{path}.coeffs[{m}].k"), format!("index {} out of range for dimension {dim}", c.k)));
        }
        if out.iter().any(|(k, _)| *k == c.k) {
            return Err(at(format!("{path}.coeffs[{m}].k"), format!("index {} repeated", c.k)));
        }
        let x = parse_scalar(field, &c.c).map_err(|e| at(format!("{path}.coeffs[{m}].c"), e))?;
        out.push((c.k, x));
    }
    Ok(out)
}

fn coeffs_to_json(v: &SparseVec) -> Vec<CoeffJson> {
    v.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| CoeffJson { k: *k, c: format_scalar(c) })
        .collect()
}

pub fn algebra_from_json(path: &str, a: &AlgebraJson) -> Result<GradedLieAlgebra> {
    check_format(path, a.format)?;
    let field = Field::new(a.field).map_err(|e| at(format!("{path}field"), e))?;
    let q = group_from_json(&format!("{path}group"), &a.group)?;
    let degrees = degrees_from_json(path.trim_end_matches('.'), &q, a.dim, &a.degrees)?;
    let mut entries = Vec::with_capacity(a.brackets.len());
    for (n, b) in a.brackets.iter().enumerate() {
        let bp = format!("{path}brackets[{n}]");
        if b.i >= b.j {
            return Err(at(&bp, format!("needs i < j, got i = {}, j = {}", b.i, b.j)));
        }
        if b.j >= a.dim {
            return Err(at(format!("{bp}.j"), format!("index {} out of range for dimension {}", b.j, a.dim)));
        }
        entries.push((b.i, b.j, coeffs_from_json(&bp, &field, a.dim, &b.coeffs)?));
    }
    GradedLieAlgebra::new(&field, &q, degrees, entries).map_err(|e| at(format!("{path}brackets"), e))
}

pub fn algebra_to_json(g: &GradedLieAlgebra) -> AlgebraJson {
    let mut brackets = Vec::new();
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let coeffs = coeffs_to_json(g.bracket_basis(i, j));
            if !coeffs.is_empty() {
                brackets.push(BracketJson { i, j, coeffs });
            }
        }
    }
    AlgebraJson {
        format: FORMAT,
        field: g.field().spec(),
        group: group_to_json(g.group()),
        dim: g.dim(),
        degrees: g.degrees().to_vec(),
        brackets,
    }
}

pub fn module_from_json(m: &ModuleJson) -> Result<GradedModule> {
    check_format("$.", m.format)?;
    let g = algebra_from_json("$.algebra.", &m.algebra)?;
    let q = match &m.group {
        Some(gj) => group_from_json("$.group", gj)?,
        None => g.group().clone(),
    };
    let degrees = degrees_from_json("$", &q, m.dim, &m.degrees)?;
    let mut entries = Vec::with_capacity(m.action.len());
    for (n, a) in m.action.iter().enumerate() {
        let ap = format!("$.action[{n}]");
        if a.xi >= g.dim() {
            return Err(at(format!("{ap}.xi"), format!("index {} out of range for dimension {}", a.xi, g.dim())));
        }
        if a.vj >= m.dim {
            return Err(at(format!("{ap}.vj"), format!("index {} out of range for dimension {}", a.vj, m.dim)));
        }
        entries.push((a.xi, a.vj, coeffs_from_json(&ap, g.field(), m.dim, &a.coeffs)?));
    }
    GradedModule::new(&g, &q, degrees, entries).map_err(|e| at("$.action", e))
}

pub fn module_to_json(w: &GradedModule) -> ModuleJson {
    let g = w.algebra();
    let mut action = Vec::new();
    for xi in 0..g.dim() {
        for vj in 0..w.dim() {
            let coeffs = coeffs_to_json(w.action_entry(xi, vj));
            if !coeffs.is_empty() {
                action.push(ActionJson { xi, vj, coeffs });
            }
        }
    }
    ModuleJson {
        format: FORMAT,
        algebra: algebra_to_json(g),
        group: (w.group() != g.group()).then(|| group_to_json(w.group())),
        dim: w.dim(),
        degrees: w.degrees().to_vec(),
        action,
    }
}

pub fn parse_algebra(text: &str) -> Result<GradedLieAlgebra> {
    algebra_from_json("$.", &from_str::<AlgebraJson>(text)?)
}

pub fn parse_module(text: &str) -> Result<GradedModule> {
    module_from_json(&from_str::<ModuleJson>(text)?)
}

/// `(Q, P, a)` from a loop-build request.
pub fn parse_loop_build(text: &str) -> Result<(FinAbGroup, crate::abgroup::Subgroup, GradedLieAlgebra)> {
    let req: LoopBuildJson = from_str(text)?;
    check_format("$.", req.format)?;
    let q = group_from_json("$.group", &req.group)?;
    for (n, a) in req.p.iter().enumerate() {
        elem_from_json(&format!("$.P[{n}]"), &q, a)?;
    }
    let p = q.subgroup(&req.p);
    let a = algebra_from_json("$.a.", &req.a)?;
    Ok((q, p, a))
}

/// Rows of scalar literals.
pub fn matrix_to_json(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(format_scalar).collect()).collect()
}

pub fn vector_to_json(v: &[crate::exactfield::FieldElem]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}
