//! One `RunConfig` in; exit status and rendered output out.

use std::fmt::Write as _;

use serde::Serialize;

use shoda_core::families::catalogue;
use shoda_core::gf::FiniteField;
use shoda_core::group::Group;
use shoda_core::idempotents::IdempotentEntry;
use shoda_core::oracle::{oracle_decomposition, OracleReport};
use shoda_core::wedderburn::{aut_description, Decomposition, SimpleComponent};
use shoda_core::Error;

use crate::parse::{parse_group_spec, ParseError};
use crate::pipeline::{analyse, idempotents, Analysis};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_NOT_COPRIME: i32 = 2;
pub const EXIT_ORACLE_MISMATCH: i32 = 3;
pub const EXIT_INVALID: i32 = 4;

/// Thread count used when `--threads` is absent.
pub const THREADS_ENV: &str = "SHODA_THREADS";
pub const DEFAULT_MAX_ORDER: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Decompose,
    ShodaPairs,
    Idempotents,
    Verify,
    Families,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub group: String,
    pub q: u64,
    pub emit_idempotents: bool,
    pub emit_shoda_pairs: bool,
    pub emit_aut: bool,
    pub verify_oracle: bool,
    pub format: Format,
    pub threads: Option<usize>,
    pub max_order: usize,
}

impl RunConfig {
    /// Defaults for `command`; the subcommand switches on its own section.
    pub fn new(command: Command, group: &str, q: u64) -> Self {
        RunConfig {
            command,
            group: group.to_string(),
            q,
            emit_idempotents: command == Command::Idempotents,
            emit_shoda_pairs: command == Command::ShodaPairs,
            emit_aut: false,
            verify_oracle: command == Command::Verify,
            format: Format::Text,
            threads: None,
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotCoprime { .. } => EXIT_NOT_COPRIME,
        Error::InvalidGroup(_)
        | Error::InconsistentPresentation(_)
        | Error::OrderLimitExceeded { .. }
        | Error::NotPrimePower(_)
        | Error::FieldTooLarge(..)
        | Error::InvalidParameters(_)
        | Error::OracleLimit(_) => EXIT_INVALID,
        _ => EXIT_FAILURE,
    }
}

/// The flag wins over the environment; zero or garbage is rejected.
pub fn resolve_threads(flag: Option<usize>, env: Option<&str>) -> Result<Option<usize>, String> {
    let n = match (flag, env) {
        (Some(n), _) => n,
        (None, Some(v)) => v.trim().parse().map_err(|_| format!("{THREADS_ENV}={v:?} is not a thread count"))?,
        (None, None) => return Ok(None),
    };
    if n == 0 {
        return Err("thread count must be positive".into());
    }
    Ok(Some(n))
}

pub fn run(cfg: &RunConfig) -> Outcome {
    if cfg.command == Command::Families {
        return families(cfg.format);
    }
    let env = std::env::var(THREADS_ENV).ok();
    let threads = match resolve_threads(cfg.threads, env.as_deref()) {
        Ok(t) => t,
        Err(msg) => return Outcome::fail(EXIT_INVALID, msg),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    match builder.build() {
        Ok(pool) => pool.install(|| execute(cfg)),
        Err(e) => Outcome::fail(EXIT_FAILURE, e),
    }
}

fn parse_failure(e: ParseError) -> Outcome {
    Outcome::fail(EXIT_INVALID, format!("invalid group: {e}"))
}

fn core_failure(e: Error) -> Outcome {
    Outcome::fail(exit_code(&e), e)
}

struct Verification {
    report: OracleReport,
    decompose_only: Vec<SimpleComponent>,
    oracle_only: Vec<SimpleComponent>,
    idempotents_agree: bool,
}

impl Verification {
    fn agrees(&self) -> bool {
        self.decompose_only.is_empty()
            && self.oracle_only.is_empty()
            && self.idempotents_agree
            && self.report.q_class_count == self.report.idempotents.len() as u64
    }
}

/// Components of `a` not matched in `b`, with the surplus multiplicity.
fn surplus(a: &[SimpleComponent], b: &[SimpleComponent]) -> Vec<SimpleComponent> {
    a.iter()
        .filter_map(|c| {
            let other = b.iter().find(|d| (d.n, d.f) == (c.n, c.f)).map_or(0, |d| d.multiplicity);
            (c.multiplicity > other).then(|| SimpleComponent { multiplicity: c.multiplicity - other, ..*c })
        })
        .collect()
}

fn verify(g: &Group, q: u64, d: &Decomposition, entries: &[IdempotentEntry]) -> Result<Verification, Error> {
    let report = oracle_decomposition(g, q)?;
    let mut ours: Vec<_> = entries.iter().map(|e| e.element.clone()).collect();
    ours.sort();
    ours.dedup();
    Ok(Verification {
        decompose_only: surplus(&d.components, &report.component_multiset),
        oracle_only: surplus(&report.component_multiset, &d.components),
        idempotents_agree: ours == report.idempotents && ours.len() == entries.len(),
        report,
    })
}

fn execute(cfg: &RunConfig) -> Outcome {
    let spec = match parse_group_spec(&cfg.group) {
        Ok(s) => s,
        Err(e) => return parse_failure(e),
    };
    let g = match spec.build(cfg.max_order) {
        Ok(g) => g,
        Err(e) => return core_failure(e),
    };
    let analysis = match analyse(&g, cfg.q) {
        Ok(a) => a,
        Err(e) => return core_failure(e),
    };
    let field = match FiniteField::new(cfg.q) {
        Ok(f) => f,
        Err(e) => return core_failure(e),
    };
    let entries = if cfg.emit_idempotents || cfg.verify_oracle {
        match idempotents(&g, &field, &analysis.pairs) {
            Ok(e) => e,
            Err(e) => return core_failure(e),
        }
    } else {
        Vec::new()
    };
    let aut = if cfg.emit_aut {
        match aut_description(&analysis.decomposition) {
            Ok(a) => Some(a.to_string()),
            Err(e) => return core_failure(e),
        }
    } else {
        None
    };
    let verification = if cfg.verify_oracle {
        match verify(&g, cfg.q, &analysis.decomposition, &entries) {
            Ok(v) => Some(v),
            Err(e) => return core_failure(e),
        }
    } else {
        None
    };
    let code = match &verification {
        Some(v) if !v.agrees() => EXIT_ORACLE_MISMATCH,
        _ => EXIT_OK,
    };
    let view = View { cfg, group: &g, field: &field, analysis: &analysis, entries: &entries, aut, verification };
    let stdout = match cfg.format {
        Format::Text => view.text(),
        Format::Json => view.json(),
    };
    Outcome::ok(stdout, code)
}

struct View<'a> {
    cfg: &'a RunConfig,
    group: &'a Group,
    field: &'a FiniteField,
    analysis: &'a Analysis,
    entries: &'a [IdempotentEntry],
    aut: Option<String>,
    verification: Option<Verification>,
}

fn single(n: u64, f: u64) -> SimpleComponent {
    SimpleComponent { n, f, multiplicity: 1 }
}

impl View<'_> {
    fn coefficients(&self, e: &IdempotentEntry) -> Vec<String> {
        e.element.support().map(|(x, c)| format!("{x}:{}", self.field.format(c))).collect()
    }

    fn text(&self) -> String {
        let d = &self.analysis.decomposition;
        let mut out = String::new();
        writeln!(out, "{d}").unwrap();
        if !d.normally_monomial {
            writeln!(
                out,
                "normally monomial: no (components cover {} of {})",
                d.total_dimension, d.group_order
            )
            .unwrap();
        }
        if self.cfg.emit_shoda_pairs {
            for (i, ((p, od), src)) in self.analysis.pairs.iter().zip(&d.sources).enumerate() {
                let comp = SimpleComponent { n: src.n, f: src.f, multiplicity: od.orbits.len() as u64 };
                writeln!(
                    out,
                    "#{i} |A|={} |D|={} |core|={} [A:D]={} orbits={} -> {}",
                    p.a.order(),
                    p.d.order(),
                    p.core.order(),
                    p.index,
                    od.orbits.len(),
                    d.render_component(&comp)
                )
                .unwrap();
            }
        }
        if self.cfg.emit_idempotents {
            for e in self.entries {
                let coeffs = self.coefficients(e).join(" ");
                writeln!(out, "P{} C{} {}: {coeffs}", e.pair, e.coset_label, d.render_component(&single(e.n, e.f)))
                    .unwrap();
            }
        }
        if let Some(aut) = &self.aut {
            writeln!(out, "aut: {aut}").unwrap();
        }
        if let Some(v) = &self.verification {
            if v.agrees() {
                writeln!(
                    out,
                    "oracle: agree ({} components, {} q-classes, idempotents identical)",
                    v.report.idempotents.len(),
                    v.report.q_class_count
                )
                .unwrap();
            } else {
                writeln!(out, "oracle: MISMATCH").unwrap();
                for c in &v.decompose_only {
                    writeln!(out, "- {}", d.render_component(c)).unwrap();
                }
                for c in &v.oracle_only {
                    writeln!(out, "+ {}", d.render_component(c)).unwrap();
                }
                writeln!(
                    out,
                    "q-classes: {}, oracle idempotents: {}, idempotents {}",
                    v.report.q_class_count,
                    v.report.idempotents.len(),
                    if v.idempotents_agree { "identical" } else { "differ" }
                )
                .unwrap();
            }
        }
        out
    }

    fn json(&self) -> String {
        let d = &self.analysis.decomposition;
        let doc = Document {
            group: GroupJson { spec: self.cfg.group.trim().to_string(), order: self.group.order() },
            q: self.cfg.q,
            components: d.components.iter().map(ComponentJson::from).collect(),
            normally_monomial: d.normally_monomial,
            shoda_pairs: self.cfg.emit_shoda_pairs.then(|| {
                self.analysis
                    .pairs
                    .iter()
                    .map(|(p, od)| PairJson {
                        a: p.a.members().to_vec(),
                        d: p.d.members().to_vec(),
                        core: p.core.members().to_vec(),
                        orbits: od.orbits.len(),
                    })
                    .collect()
            }),
            idempotents: self.cfg.emit_idempotents.then(|| {
                self.entries
                    .iter()
                    .map(|e| IdempotentJson {
                        pair: e.pair,
                        coset: e.coset_label,
                        n: e.n,
                        f: e.f,
                        coefficients: self.coefficients(e),
                    })
                    .collect()
            }),
            aut: self.aut.clone(),
            verify: self.verification.as_ref().map(|v| VerifyJson {
                agree: v.agrees(),
                q_class_count: v.report.q_class_count,
                decompose_only: v.decompose_only.iter().map(ComponentJson::from).collect(),
                oracle_only: v.oracle_only.iter().map(ComponentJson::from).collect(),
                idempotents_agree: v.idempotents_agree,
            }),
        };
        canonical_json(&doc)
    }
}

/// Pretty JSON with object keys sorted, so that parsing and re-emitting it
/// reproduces the same bytes.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("plain data serialises");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialise");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct Document {
    group: GroupJson,
    q: u64,
    components: Vec<ComponentJson>,
    normally_monomial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    shoda_pairs: Option<Vec<PairJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    idempotents: Option<Vec<IdempotentJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    aut: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verify: Option<VerifyJson>,
}

#[derive(Serialize)]
struct GroupJson {
    spec: String,
    order: usize,
}

#[derive(Serialize)]
struct ComponentJson {
    n: u64,
    f: u64,
    multiplicity: u64,
}

impl From<&SimpleComponent> for ComponentJson {
    fn from(c: &SimpleComponent) -> Self {
        ComponentJson { n: c.n, f: c.f, multiplicity: c.multiplicity }
    }
}

#[derive(Serialize)]
struct PairJson {
    #[serde(rename = "A")]
    a: Vec<u32>,
    #[serde(rename = "D")]
    d: Vec<u32>,
    core: Vec<u32>,
    orbits: usize,
}

#[derive(Serialize)]
struct IdempotentJson {
    pair: usize,
    coset: u64,
    n: u64,
    f: u64,
    /// `element_index:field_element`
    coefficients: Vec<String>,
}

#[derive(Serialize)]
struct VerifyJson {
    agree: bool,
    q_class_count: u64,
    decompose_only: Vec<ComponentJson>,
    oracle_only: Vec<ComponentJson>,
    idempotents_agree: bool,
}

#[derive(Serialize)]
struct FamilyJson {
    spec: String,
    order: Option<u64>,
}

fn families(format: Format) -> Outcome {
    let list: Vec<FamilyJson> =
        catalogue().into_iter().map(|f| FamilyJson { spec: f.to_string(), order: f.order() }).collect();
    let stdout = match format {
        Format::Json => canonical_json(&list),
        Format::Text => {
            let mut out = String::new();
            for f in &list {
                let order = f.order.map_or_else(|| "?".to_string(), |o| o.to_string());
                writeln!(out, "{:<16} order {order}", f.spec).unwrap();
            }
            writeln!(out, "{:<16} order n", "cyclic:n").unwrap();
            writeln!(out, "{:<16} order n*m*..", "abelian:n,m,..").unwrap();
            out
        }
    };
    Outcome::ok(stdout, EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_resolution() {
        assert_eq!(resolve_threads(Some(3), Some("8")), Ok(Some(3)));
        assert_eq!(resolve_threads(None, Some("8")), Ok(Some(8)));
        assert_eq!(resolve_threads(None, None), Ok(None));
        assert!(resolve_threads(None, Some("many")).is_err());
        assert!(resolve_threads(Some(0), None).is_err());
    }

    #[test]
    fn multiset_surplus() {
        let a = [SimpleComponent { n: 1, f: 1, multiplicity: 4 }, SimpleComponent { n: 2, f: 1, multiplicity: 1 }];
        let b = [SimpleComponent { n: 1, f: 1, multiplicity: 2 }];
        assert_eq!(
            surplus(&a, &b),
            vec![SimpleComponent { n: 1, f: 1, multiplicity: 2 }, SimpleComponent { n: 2, f: 1, multiplicity: 1 }]
        );
        assert!(surplus(&b, &a).is_empty());
    }
}
