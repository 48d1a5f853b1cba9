//! Verification reports: one verdict per named identity.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::diagram::{compare, parse_with_default, Env};
use crate::exact_linear::{Difference, LinMap};
use crate::scalar::Scalar;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// Where two sides first differ: the basis pair and both scalar values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub row: String,
    pub col: String,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn from_difference<S: Scalar>(d: &Difference<S>, map: &LinMap<S>) -> Self {
        Witness {
            row: map.tgt().label(d.row),
            col: map.src().label(d.col),
            lhs: d.lhs.to_string(),
            rhs: d.rhs.to_string(),
        }
    }

    /// A witness that is not an entry comparison, e.g. a missing solution.
    pub fn note(text: &str) -> Self {
        Witness {
            row: String::new(),
            col: String::new(),
            lhs: text.to_string(),
            rhs: String::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub id: String,
    pub citation: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Item {
    pub fn pass(id: &str, citation: &str) -> Self {
        Item {
            id: id.into(),
            citation: citation.into(),
            verdict: Verdict::Pass,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(id: &str, citation: &str, witness: Witness) -> Self {
        Item {
            id: id.into(),
            citation: citation.into(),
            verdict: Verdict::Fail,
            witness: Some(witness),
            detail: None,
        }
    }

    pub fn skipped(id: &str, citation: &str, why: &str) -> Self {
        Item {
            id: id.into(),
            citation: citation.into(),
            verdict: Verdict::Skipped,
            witness: None,
            detail: Some(why.into()),
        }
    }

    pub fn check(id: &str, citation: &str, ok: bool, witness: impl FnOnce() -> Witness) -> Self {
        if ok {
            Item::pass(id, citation)
        } else {
            Item::fail(id, citation, witness())
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub items: Vec<Item>,
    /// Wall-clock time; omitted unless timings were requested, so that
    /// reports stay byte-identical across runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.into(),
            items: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn push(&mut self, item: Item) {
        self.items.push(item);
    }

    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.verdict != Verdict::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(|i| i.verdict == Verdict::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn verdict(&self, id: &str) -> Option<Verdict> {
        self.get(id).map(|i| i.verdict)
    }

    /// Sort items by id; ids are unique within a suite.
    pub fn finish(mut self, started: Option<Instant>) -> Self {
        self.items.sort_by(|a, b| a.id.cmp(&b.id));
        self.elapsed_ms = started.map(|t| t.elapsed().as_millis() as u64);
        self
    }
}

/// An equation between two terms of the diagram language.
#[derive(Clone, Copy, Debug)]
pub struct Identity {
    pub id: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

impl Identity {
    pub const fn new(id: &'static str, lhs: &'static str, rhs: &'static str) -> Self {
        Identity { id, lhs, rhs }
    }

    pub fn statement(&self) -> String {
        format!("{} = {}", self.lhs, self.rhs)
    }
}

/// Evaluate one identity in `env`. Ill-typed terms are reported as failures
/// carrying the boundary error, never silently passed.
pub fn check_identity<S: Scalar>(env: &Env<S>, ident: &Identity) -> Item {
    check_equation(env, ident.id, ident.lhs, ident.rhs)
}

/// As [`check_identity`], for terms built at run time.
pub fn check_equation<S: Scalar>(env: &Env<S>, id: &str, lhs: &str, rhs: &str) -> Item {
    let citation = format!("{lhs} = {rhs}");
    let default = env.default_object.as_deref();
    let parsed = parse_with_default(lhs, default).and_then(|l| parse_with_default(rhs, default).map(|r| (l, r)));
    let (lhs, rhs) = match parsed {
        Ok(p) => p,
        Err(e) => return Item::fail(id, &citation, Witness::note(&e.to_string())),
    };
    match compare(&lhs, &rhs, env) {
        Ok(None) => Item::pass(id, &citation),
        Ok(Some(d)) => {
            let map = crate::diagram::evaluate(&lhs, env).expect("already evaluated");
            Item::fail(id, &citation, Witness::from_difference(&d, &map))
        }
        Err(e) => Item::fail(id, &citation, Witness::note(&e.to_string())),
    }
}

/// Check a list of `(id, lhs, rhs)` equations built at run time.
pub fn run_equations<S: Scalar>(env: &Env<S>, r: &mut Report, eqs: &[(String, String, String)]) {
    for (id, lhs, rhs) in eqs {
        r.push(check_equation(env, id, lhs, rhs));
    }
}

/// Run a list of identities as one suite.
pub fn run_identities<S: Scalar>(suite: &str, env: &Env<S>, idents: &[Identity]) -> Report {
    let mut r = Report::new(suite);
    for ident in idents {
        r.push(check_identity(env, ident));
    }
    r
}

/// Compare two already-evaluated maps.
pub fn check_maps<S: Scalar>(id: &str, citation: &str, lhs: &LinMap<S>, rhs: &LinMap<S>) -> Item {
    match lhs.first_difference(rhs) {
        Ok(None) => Item::pass(id, citation),
        Ok(Some(d)) => Item::fail(id, citation, Witness::from_difference(&d, lhs)),
        Err(e) => Item::fail(id, citation, Witness::note(&e.to_string())),
    }
}
