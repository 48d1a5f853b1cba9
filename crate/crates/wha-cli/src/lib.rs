//! Command dispatch for the `wha` binary: build a model over the chosen
//! field, run the requested suites, and collect their reports.

use serde::{Deserialize, Serialize};

use wha_core::cauchy::{check_object_of_objects, check_st_comonoid_morphisms};
use wha_core::comodules::check_comodules;
use wha_core::constructions::{frobenius_square, square_closed_forms, validate_category};
use wha_core::model::{build, raw_model, Built, ModelBody, ModelFile};
use wha_core::quantum::{check_quantum_category, check_quantum_groupoid, quantum_category, quantum_groupoid};
use wha_core::report::{Report, Verdict, REPORT_SCHEMA_VERSION};
use wha_core::scalar::FieldSpec;
use wha_core::structures::{
    antipode_report, antipode_search, check_frobenius, check_st_properties, check_weak_bimonoid, check_weak_hopf,
    weakness_witnesses, WeakBimonoidData, WeakHopfData,
};
use wha_core::{Error, Fp, Rat, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    CheckBimonoid,
    CheckHopf,
    CheckObjectOfObjects,
    CheckComodules,
    CheckQuantum,
    BuildFrobeniusSquare,
    All,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckBimonoid => "check-bimonoid",
            Command::CheckHopf => "check-hopf",
            Command::CheckObjectOfObjects => "check-object-of-objects",
            Command::CheckComodules => "check-comodules",
            Command::CheckQuantum => "check-quantum",
            Command::BuildFrobeniusSquare => "build-frobenius-square",
            Command::All => "all",
        }
    }
}

/// Everything a run produces; serialized as the JSON report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: Command,
    pub field: String,
    pub verdict: Verdict,
    pub reports: Vec<Report>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_FAILED: i32 = 3;

pub struct Outcome {
    pub report: RunReport,
    pub derived_model: Option<ModelFile>,
    pub exit_code: i32,
}

/// Run `command` on `model`, over `field` (the model's own field when `None`).
pub fn execute(command: Command, model: &ModelFile, field: Option<FieldSpec>) -> Result<Outcome, Error> {
    let field = match field {
        Some(f) => f,
        None => FieldSpec::parse(&model.field)?,
    };
    let mut reports = Vec::new();
    let result = match field {
        FieldSpec::Rational => run::<Rat>(command, model, &(), &field, &mut reports),
        FieldSpec::Prime(p) => run::<Fp>(command, model, &p, &field, &mut reports),
    };
    let (derived_model, error) = match result {
        Ok(d) => (d, None),
        Err(e @ (Error::Parse(_) | Error::Schema(_))) => return Err(e),
        Err(e) => (None, Some(e.to_string())),
    };
    let failed = reports.iter().any(|r| !r.passed());
    let exit_code = if error.is_some() {
        EXIT_PRECONDITION
    } else if failed {
        EXIT_FAILED
    } else {
        EXIT_OK
    };
    let verdict = if error.is_none() && !failed { Verdict::Pass } else { Verdict::Fail };
    Ok(Outcome {
        report: RunReport { schema_version: REPORT_SCHEMA_VERSION, command, field: field.name(), verdict, reports, error },
        derived_model,
        exit_code,
    })
}

fn run<S: Scalar>(
    command: Command,
    model: &ModelFile,
    ctx: &S::Ctx,
    field: &FieldSpec,
    reports: &mut Vec<Report>,
) -> Result<Option<ModelFile>, Error> {
    if let ModelBody::Category(p) | ModelBody::Groupoid(p) = &model.body {
        let (report, _) = validate_category(p);
        let ok = report.passed();
        reports.push(report);
        if !ok {
            return Err(Error::InvalidPresentation("the presentation is not a category".into()));
        }
    }
    let built = build::<S>(model, ctx)?;
    // Frobenius models are checked through their square R ⊗ R.
    let (w, supplied) = match &built {
        Built::Frobenius(r) => {
            reports.push(check_frobenius(r));
            let h = frobenius_square(r)?;
            reports.push(square_closed_forms(r, &h));
            if command == Command::BuildFrobeniusSquare {
                reports.push(check_weak_bimonoid(&h.bimonoid));
                reports.push(check_weak_hopf(&h));
                return Ok(Some(raw_model(&h, &field.name(), model.grading.clone())));
            }
            (h.bimonoid.clone(), Some(h))
        }
        other => {
            if command == Command::BuildFrobeniusSquare {
                return Err(Error::Precondition("build-frobenius-square needs a frobenius model".into()));
            }
            (other.bimonoid().expect("non-Frobenius models carry a bimonoid").clone(), other.hopf().cloned())
        }
    };
    let wants = |c: Command| command == c || command == Command::All;
    if wants(Command::CheckBimonoid) || command == Command::CheckHopf {
        reports.push(check_weak_bimonoid(&w));
        reports.push(check_st_properties(&w));
        reports.push(weakness_witnesses(&w));
    }
    let needs_hopf = wants(Command::CheckHopf) || wants(Command::CheckComodules) || wants(Command::CheckQuantum);
    let hopf = if needs_hopf { hopf_of(&w, supplied.as_ref(), wants(Command::CheckHopf), reports) } else { None };
    if wants(Command::CheckObjectOfObjects) {
        reports.push(check_object_of_objects(&w));
        reports.push(check_st_comonoid_morphisms(&w));
    }
    if wants(Command::CheckComodules) {
        reports.push(check_comodules(&w, hopf.as_ref()));
    }
    if wants(Command::CheckQuantum) {
        let qc = quantum_category(&w)?;
        reports.push(check_quantum_category(&qc));
        if let Some(h) = hopf.as_ref().filter(|h| h.nu_inv.is_some()) {
            reports.push(check_quantum_groupoid(&quantum_groupoid(h)?));
        }
    }
    Ok(None)
}

/// The supplied antipode, or the one found by the exact search. When
/// `report` is set, the search and the antipode suite are recorded.
fn hopf_of<S: Scalar>(
    w: &WeakBimonoidData<S>,
    supplied: Option<&WeakHopfData<S>>,
    report: bool,
    reports: &mut Vec<Report>,
) -> Option<WeakHopfData<S>> {
    if report {
        reports.push(antipode_report(w, supplied.map(|h| &h.nu)));
    }
    let h = match supplied {
        Some(h) => h.clone(),
        None => {
            let nu = antipode_search(w).ok()?.antipode?;
            WeakHopfData::new(w.clone(), nu, None).ok()?
        }
    };
    let h = if h.nu_inv.is_none() { h.clone().with_computed_inverse().unwrap_or(h) } else { h };
    if report {
        reports.push(check_weak_hopf(&h));
    }
    Some(h)
}

/// One line per suite, then one line per failing item.
pub fn summary(r: &RunReport) -> String {
    let mut out = String::new();
    for rep in &r.reports {
        let count = |v: Verdict| rep.items.iter().filter(|i| i.verdict == v).count();
        out += &format!(
            "{:<22} {:>4} pass {:>4} fail {:>4} skipped\n",
            rep.suite,
            count(Verdict::Pass),
            count(Verdict::Fail),
            count(Verdict::Skipped)
        );
        for item in rep.failures() {
            out += &format!("  FAIL {}: {}\n", item.id, item.citation);
            if let Some(w) = &item.witness {
                if w.row.is_empty() {
                    out += &format!("       {}\n", w.lhs);
                } else {
                    out += &format!("       at ({}, {}): {} vs {}\n", w.row, w.col, w.lhs, w.rhs);
                }
            }
        }
    }
    if let Some(e) = &r.error {
        out += &format!("error: {e}\n");
    }
    out += &format!("{} [{}]: {}\n", r.command.name(), r.field, if r.verdict == Verdict::Pass { "PASS" } else { "FAIL" });
    out
}

pub fn to_json(r: &RunReport) -> String {
    serde_json::to_string_pretty(r).expect("plain data") + "\n"
}
