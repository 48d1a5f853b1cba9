//! JSON model files: finite categories, groupoids, separable Frobenius
//! monoids, and weak bimonoids given by explicit matrices.
//!
//! Matrices are dense, row-major, indexed by target basis (rows) and source
//! basis (columns); tensor powers of the basis are ordered lexicographically.
//! Entries are integers or strings such as `"-2/3"`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::constructions::{category_algebra, functions_frobenius, group_frobenius, groupoid_algebra, FiniteCategoryPresentation};
use crate::error::{Error, Result};
use crate::exact_linear::{Bicharacter, Group, LinMap, Space};
use crate::scalar::{FieldSpec, Scalar};
use crate::structures::{ComonoidData, FrobeniusData, MonoidData, WeakBimonoidData, WeakHopfData};

pub const MODEL_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    pub schema_version: u32,
    #[serde(flatten)]
    pub body: ModelBody,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Grading>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelBody {
    Category(FiniteCategoryPresentation),
    Groupoid(FiniteCategoryPresentation),
    Frobenius { frobenius: FrobeniusSpec },
    WeakBimonoidRaw(RawBimonoid),
}

/// Grading group `Z/n1 x ... x Z/nk` and the bicharacter's values on pairs
/// of generators; omitted values mean the trivial bicharacter.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grading {
    pub cyclic: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bicharacter: Option<Vec<Vec<Entry>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FrobeniusSpec {
    /// Functions on an `n`-point set.
    Functions(usize),
    /// Group algebra of `Z/n1 x ...` with the scaled coproduct; graded by
    /// itself when the model's grading group equals it.
    Group(Vec<u32>),
    Raw(RawFrobenius),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BasisEntry {
    Plain(String),
    Graded { label: String, grade: Vec<u32> },
}

pub type Matrix = Vec<Vec<Entry>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawFrobenius {
    pub basis: Vec<BasisEntry>,
    pub mu: Matrix,
    pub eta: Matrix,
    pub delta: Matrix,
    pub epsilon: Matrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RawBimonoid {
    pub basis: Vec<BasisEntry>,
    pub mu: Matrix,
    pub eta: Matrix,
    pub delta: Matrix,
    pub epsilon: Matrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu_inv: Option<Matrix>,
}

/// Parse and schema-check a model. Semantic problems (failing axioms) are
/// left to the checkers.
pub fn parse_model(text: &str) -> Result<ModelFile> {
    let model: ModelFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    validate(&model)?;
    Ok(model)
}

pub fn to_json(model: &ModelFile) -> String {
    serde_json::to_string_pretty(model).expect("plain data") + "\n"
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn unique_ascii<'a>(what: &str, names: impl IntoIterator<Item = &'a String>) -> Result<()> {
    let mut seen = BTreeSet::new();
    for n in names {
        if n.is_empty() || !n.is_ascii() {
            return Err(schema(format!("{what} name `{n}` must be non-empty ASCII")));
        }
        if !seen.insert(n) {
            return Err(schema(format!("duplicate {what} name `{n}`")));
        }
    }
    Ok(())
}

fn validate(m: &ModelFile) -> Result<()> {
    if m.schema_version != MODEL_SCHEMA_VERSION {
        return Err(schema(format!("unsupported schema_version {}", m.schema_version)));
    }
    FieldSpec::parse(&m.field)?;
    if let Some(g) = &m.grading {
        Group::new(g.cyclic.clone()).map_err(|e| schema(e.to_string()))?;
    }
    match &m.body {
        ModelBody::Category(p) | ModelBody::Groupoid(p) => {
            if m.grading.is_some() {
                return Err(schema("category models are trivially graded"));
            }
            unique_ascii("object", &p.objects)?;
            unique_ascii("morphism", p.morphisms.iter().map(|(n, _, _)| n))?;
            if matches!(m.body, ModelBody::Groupoid(_)) && p.inverse.is_none() {
                return Err(schema("groupoid models need an `inverse` table"));
            }
        }
        ModelBody::Frobenius { frobenius: FrobeniusSpec::Raw(r) } => basis_names(&r.basis)?,
        ModelBody::WeakBimonoidRaw(r) => basis_names(&r.basis)?,
        ModelBody::Frobenius { .. } => {}
    }
    Ok(())
}

fn basis_names(basis: &[BasisEntry]) -> Result<()> {
    let labels: Vec<String> = basis.iter().map(|b| label_of(b).to_string()).collect();
    unique_ascii("basis", &labels)
}

fn label_of(b: &BasisEntry) -> &str {
    match b {
        BasisEntry::Plain(l) | BasisEntry::Graded { label: l, .. } => l,
    }
}

/// A model instantiated over a field.
#[derive(Clone, Debug)]
pub enum Built<S> {
    Category(WeakBimonoidData<S>),
    Groupoid(WeakHopfData<S>),
    Frobenius(FrobeniusData<S>),
    /// A weak bimonoid with an optionally supplied antipode.
    Raw(WeakBimonoidData<S>, Option<WeakHopfData<S>>),
}

impl<S: Scalar> Built<S> {
    pub fn bimonoid(&self) -> Option<&WeakBimonoidData<S>> {
        match self {
            Built::Category(w) | Built::Raw(w, _) => Some(w),
            Built::Groupoid(h) => Some(&h.bimonoid),
            Built::Frobenius(_) => None,
        }
    }

    /// The supplied antipode, if the model carries one.
    pub fn hopf(&self) -> Option<&WeakHopfData<S>> {
        match self {
            Built::Groupoid(h) | Built::Raw(_, Some(h)) => Some(h),
            _ => None,
        }
    }
}

fn entry<S: Scalar>(ctx: &S::Ctx, e: &Entry) -> Result<S> {
    match e {
        Entry::Int(n) => Ok(S::from_int(ctx, *n)),
        Entry::Text(t) => S::parse(ctx, t),
    }
}

fn grading_of<S: Scalar>(g: Option<&Grading>, ctx: &S::Ctx) -> Result<(Group, Bicharacter<S>)> {
    let one = S::from_int(ctx, 1);
    let Some(g) = g else {
        return Ok((Group::trivial(), Bicharacter::trivial_with(Group::trivial(), one)));
    };
    let group = Group::new(g.cyclic.clone())?;
    let chi = match &g.bicharacter {
        None => Bicharacter::trivial_with(group.clone(), one),
        Some(rows) => {
            let q = rows
                .iter()
                .map(|row| row.iter().map(|e| entry(ctx, e)).collect::<Result<Vec<S>>>())
                .collect::<Result<Vec<_>>>()?;
            Bicharacter::from_generator_matrix(group.clone(), q)?
        }
    };
    Ok((group, chi))
}

fn space_of(group: &Group, basis: &[BasisEntry]) -> Result<Space> {
    let k = group.moduli().len();
    Space::new(
        group,
        basis
            .iter()
            .map(|b| match b {
                BasisEntry::Plain(l) => (l.clone(), vec![0; k]),
                BasisEntry::Graded { label, grade } => (label.clone(), grade.clone()),
            })
            .collect(),
    )
}

fn matrix<S: Scalar>(name: &str, ctx: &S::Ctx, src: &Space, tgt: &Space, m: &Matrix) -> Result<LinMap<S>> {
    if m.len() != tgt.dim() || m.iter().any(|row| row.len() != src.dim()) {
        return Err(schema(format!("`{name}` must be a {} x {} matrix", tgt.dim(), src.dim())));
    }
    let mut entries = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let v: S = entry(ctx, e)?;
            if !v.is_zero() {
                entries.push((i, j, v));
            }
        }
    }
    LinMap::from_entries(src, tgt, entries)
}

/// Instantiate a model over the field with context `ctx`.
pub fn build<S: Scalar>(m: &ModelFile, ctx: &S::Ctx) -> Result<Built<S>> {
    match &m.body {
        ModelBody::Category(p) => Ok(Built::Category(category_algebra(p, ctx)?)),
        ModelBody::Groupoid(p) => Ok(Built::Groupoid(groupoid_algebra(p, ctx)?)),
        ModelBody::Frobenius { frobenius } => {
            let (group, chi) = grading_of::<S>(m.grading.as_ref(), ctx)?;
            Ok(Built::Frobenius(match frobenius {
                FrobeniusSpec::Functions(n) => functions_frobenius(*n, ctx),
                FrobeniusSpec::Group(moduli) => {
                    let g = Group::new(moduli.clone())?;
                    let chi = if group == g { Some(chi) } else if m.grading.is_none() { None } else {
                        return Err(schema("a graded group Frobenius model must be graded by the group itself"));
                    };
                    group_frobenius(&g, ctx, chi)?
                }
                FrobeniusSpec::Raw(r) => {
                    let a = space_of(&group, &r.basis)?;
                    let (aa, unit) = (a.tensor(&a), Space::unit(&group));
                    FrobeniusData::new(
                        MonoidData::new(&a, matrix("mu", ctx, &aa, &a, &r.mu)?, matrix("eta", ctx, &unit, &a, &r.eta)?)?,
                        ComonoidData::new(&a, matrix("delta", ctx, &a, &aa, &r.delta)?, matrix("epsilon", ctx, &a, &unit, &r.epsilon)?)?,
                        chi,
                    )?
                }
            }))
        }
        ModelBody::WeakBimonoidRaw(r) => {
            let (group, chi) = grading_of::<S>(m.grading.as_ref(), ctx)?;
            let a = space_of(&group, &r.basis)?;
            let (aa, unit) = (a.tensor(&a), Space::unit(&group));
            let w = WeakBimonoidData::new(
                &a,
                matrix("mu", ctx, &aa, &a, &r.mu)?,
                matrix("eta", ctx, &unit, &a, &r.eta)?,
                matrix("delta", ctx, &a, &aa, &r.delta)?,
                matrix("epsilon", ctx, &a, &unit, &r.epsilon)?,
                chi,
            )?;
            let hopf = match &r.nu {
                None => None,
                Some(nu) => {
                    let nu = matrix("nu", ctx, &a, &a, nu)?;
                    let nu_inv = r.nu_inv.as_ref().map(|ni| matrix("nu_inv", ctx, &a, &a, ni)).transpose()?;
                    Some(WeakHopfData::new(w.clone(), nu, nu_inv)?)
                }
            };
            Ok(Built::Raw(w, hopf))
        }
    }
}

fn dense<S: Scalar>(f: &LinMap<S>) -> Matrix {
    (0..f.tgt().dim())
        .map(|i| {
            (0..f.src().dim())
                .map(|j| {
                    let v = f.get(i, j);
                    let text = v.to_string();
                    text.parse::<i64>().map(Entry::Int).unwrap_or(Entry::Text(text))
                })
                .collect()
        })
        .collect()
}

fn basis_of(a: &Space) -> Vec<BasisEntry> {
    let graded = !a.group().moduli().is_empty();
    (0..a.dim())
        .map(|i| {
            let label = a.label(i).replace('⊗', "_");
            if graded {
                BasisEntry::Graded { label, grade: a.grade(i) }
            } else {
                BasisEntry::Plain(label)
            }
        })
        .collect()
}

/// A raw model file for a weak Hopf monoid, e.g. the output of the
/// Frobenius square construction.
pub fn raw_model<S: Scalar>(h: &WeakHopfData<S>, field: &str, grading: Option<Grading>) -> ModelFile {
    let w = &h.bimonoid;
    ModelFile {
        schema_version: MODEL_SCHEMA_VERSION,
        body: ModelBody::WeakBimonoidRaw(RawBimonoid {
            basis: basis_of(&w.carrier),
            mu: dense(&w.mu),
            eta: dense(&w.eta),
            delta: dense(&w.delta),
            epsilon: dense(&w.epsilon),
            nu: Some(dense(&h.nu)),
            nu_inv: h.nu_inv.as_ref().map(dense),
        }),
        field: field.into(),
        grading,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::frobenius_square;
    use crate::scalar::Rat;

    #[test]
    fn duplicate_morphisms_are_rejected() {
        let text = r#"{"schema_version":1,"kind":"category","field":"Q","objects":["A"],
            "morphisms":[["f","A","A"],["f","A","A"]],"compose":[]}"#;
        assert!(matches!(parse_model(text), Err(Error::Schema(_))));
    }

    #[test]
    fn bad_json_reports_position() {
        let err = parse_model("{\n  \"kind\": }").unwrap_err();
        assert!(matches!(&err, Error::Parse(m) if m.contains("line 2")), "{err}");
    }

    #[test]
    fn composite_modulus_is_rejected() {
        let text = r#"{"schema_version":1,"kind":"frobenius","field":"Fp:6","frobenius":{"functions":2}}"#;
        assert!(matches!(parse_model(text), Err(Error::Parse(_))));
    }

    #[test]
    fn square_round_trips_through_raw_model() {
        let text = r#"{"schema_version":1,"kind":"frobenius","field":"Q","frobenius":{"functions":2}}"#;
        let m = parse_model(text).unwrap();
        let Built::Frobenius(r) = build::<Rat>(&m, &()).unwrap() else { panic!() };
        let h = frobenius_square(&r).unwrap();
        let raw = raw_model(&h, "Q", None);
        let again = parse_model(&to_json(&raw)).unwrap();
        assert_eq!(again, raw);
        let Built::Raw(w, Some(h2)) = build::<Rat>(&again, &()).unwrap() else { panic!() };
        assert_eq!(w.mu.to_mat(), h.bimonoid.mu.to_mat());
        assert_eq!(h2.nu.to_mat(), h.nu.to_mat());
    }
}
