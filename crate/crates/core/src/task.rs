//! Reasoning tasks over a framework and the engines that answer them.
//!
//! Output is deterministic: extensions print as `[i j k]` in canonical
//! order, decisions as `YES` / `NO`. Skeptical acceptance over an empty set
//! of extensions answers `YES` (every extension contains the argument,
//! vacuously).

use std::fmt;
use std::fmt::Write;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::argset::{canonicalize, ArgId, ArgSet};
use crate::framework::Setaf;
use crate::io::serialize_framework;
use crate::modular::enumerate_modular;
use crate::scc::{gf_evaluate, gf_stable, sccs, verify_preferred, Incremental};
use crate::semantics::{enumerate, is_extension, LocalContext, Semantics, SemanticsError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    /// Some extension.
    SE,
    /// Every extension.
    EE,
    /// Credulous acceptance.
    DC,
    /// Skeptical acceptance.
    DS,
    /// Extension verification.
    VE,
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "SE" => Ok(Task::SE),
            "EE" => Ok(Task::EE),
            "DC" => Ok(Task::DC),
            "DS" => Ok(Task::DS),
            "VE" => Ok(Task::VE),
            _ => Err(format!("unknown task `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    BruteForce,
    Scc,
    Modular,
    Incremental,
}

impl Engine {
    pub const ALL: [Engine; 4] = [Engine::BruteForce, Engine::Scc, Engine::Modular, Engine::Incremental];

    pub fn name(self) -> &'static str {
        match self {
            Engine::BruteForce => "bruteforce",
            Engine::Scc => "scc",
            Engine::Modular => "modular",
            Engine::Incremental => "incremental",
        }
    }

    pub fn supports(self, sigma: Semantics) -> bool {
        use Semantics::*;
        match self {
            Engine::BruteForce => true,
            Engine::Scc | Engine::Incremental => {
                matches!(sigma, Stable | Admissible | Complete | Grounded | Preferred)
            }
            Engine::Modular => matches!(
                sigma,
                Stable | Admissible | Complete | Grounded | Preferred | SemiStable
            ),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown engine `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskSpec {
    pub task: Task,
    pub semantics: Semantics,
    pub engine: Engine,
    pub argument: Option<ArgId>,
    pub extension: Option<ArgSet>,
}

impl TaskSpec {
    pub fn new(task: Task, semantics: Semantics) -> Self {
        TaskSpec {
            task,
            semantics,
            engine: Engine::default(),
            argument: None,
            extension: None,
        }
    }

    pub fn with_engine(self, engine: Engine) -> Self {
        TaskSpec { engine, ..self }
    }

    pub fn with_argument(self, argument: ArgId) -> Self {
        TaskSpec {
            argument: Some(argument),
            ..self
        }
    }

    pub fn with_extension(self, extension: ArgSet) -> Self {
        TaskSpec {
            extension: Some(extension),
            ..self
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TaskError {
    #[error("engine {engine} does not support {semantics}")]
    UnsupportedCombination { engine: Engine, semantics: Semantics },
    #[error("task needs {0}")]
    MissingParameter(&'static str),
    #[error("argument {id} is not in 1..={n}")]
    InvalidArgument { id: u32, n: usize },
    #[error("extension {0} mentions arguments outside the framework")]
    InvalidExtension(ArgSet),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

/// Whether an answer was positive; `NO`-type answers map to exit code 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Answer,
    No,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: Status,
}

impl Output {
    fn decision(yes: bool) -> Self {
        Output {
            text: if yes { "YES\n" } else { "NO\n" }.into(),
            status: if yes { Status::Answer } else { Status::No },
        }
    }

    fn no() -> Self {
        Output::decision(false)
    }
}

/// All extensions of `sf` under `sigma` computed by `engine`, canonical.
pub fn extensions_with(
    engine: Engine,
    sf: &Setaf,
    sigma: Semantics,
) -> Result<Vec<ArgSet>, TaskError> {
    if !engine.supports(sigma) {
        return Err(TaskError::UnsupportedCombination {
            engine,
            semantics: sigma,
        });
    }
    Ok(match engine {
        Engine::BruteForce => enumerate(sf, sigma)?,
        Engine::Scc if sigma == Semantics::Stable => gf_stable(sf)?,
        Engine::Scc => gf_evaluate(sf, sigma, &LocalContext::unrestricted(sf))?,
        Engine::Modular => enumerate_modular(sf, sigma)?,
        Engine::Incremental => canonicalize(Incremental::new(sf, sigma)?.collect()),
    })
}

fn check_argument(sf: &Setaf, spec: &TaskSpec) -> Result<ArgId, TaskError> {
    let a = spec.argument.ok_or(TaskError::MissingParameter("an argument (-a)"))?;
    if a.index() >= sf.num_arguments() {
        return Err(TaskError::InvalidArgument {
            id: a.get(),
            n: sf.num_arguments(),
        });
    }
    Ok(a)
}

pub fn run(spec: &TaskSpec, sf: &Setaf) -> Result<Output, TaskError> {
    let sigma = spec.semantics;
    if !spec.engine.supports(sigma) {
        return Err(TaskError::UnsupportedCombination {
            engine: spec.engine,
            semantics: sigma,
        });
    }
    match spec.task {
        Task::SE => {
            let all = extensions_with(spec.engine, sf, sigma)?;
            Ok(match all.first() {
                Some(e) => Output {
                    text: format!("{e}\n"),
                    status: Status::Answer,
                },
                None => Output::no(),
            })
        }
        Task::EE => {
            let all = extensions_with(spec.engine, sf, sigma)?;
            if all.is_empty() {
                return Ok(Output::no());
            }
            let mut text = String::new();
            for e in &all {
                writeln!(text, "{e}").unwrap();
            }
            Ok(Output {
                text,
                status: Status::Answer,
            })
        }
        Task::DC => {
            let a = check_argument(sf, spec)?;
            let all = extensions_with(spec.engine, sf, sigma)?;
            Ok(Output::decision(all.iter().any(|e| e.contains(a))))
        }
        Task::DS => {
            let a = check_argument(sf, spec)?;
            let all = extensions_with(spec.engine, sf, sigma)?;
            Ok(Output::decision(all.iter().all(|e| e.contains(a))))
        }
        Task::VE => {
            let e = spec
                .extension
                .as_ref()
                .ok_or(TaskError::MissingParameter("an extension (--ext)"))?;
            if !e.is_subset(&sf.arguments()) {
                return Err(TaskError::InvalidExtension(e.clone()));
            }
            let yes = match (spec.engine, sigma) {
                (Engine::BruteForce, _) => is_extension(sf, sigma, e)?,
                (Engine::Scc, Semantics::Preferred) => verify_preferred(sf, e)?,
                _ => extensions_with(spec.engine, sf, sigma)?.contains(e),
            };
            Ok(Output::decision(yes))
        }
    }
}

/// The `e`-reduct in the instance format, preceded by a comment mapping its
/// argument ids back to `sf`.
pub fn emit_reduct(sf: &Setaf, e: &ArgSet) -> Result<String, TaskError> {
    if !e.is_subset(&sf.arguments()) {
        return Err(TaskError::InvalidExtension(e.clone()));
    }
    let reduct = sf.reduct(e);
    let mut out = String::from("# ids");
    for id in reduct.ids() {
        write!(out, " {id}").unwrap();
    }
    out.push('\n');
    out.push_str(&serialize_framework(reduct.framework()));
    Ok(out)
}

/// SCCs in topological order as `scc <k> [members]`, then the condensation
/// edges as `edge <from> <to>`, components numbered by smallest member.
pub fn emit_scc(sf: &Setaf) -> String {
    let dec = sccs(sf);
    let mut out = format!("# {} components, {} edges\n", dec.len(), dec.dag().len());
    for &c in dec.topo_order() {
        writeln!(out, "scc {} {}", c + 1, dec.component(c)).unwrap();
    }
    for &(from, to) in dec.dag() {
        writeln!(out, "edge {} {}", from + 1, to + 1).unwrap();
    }
    out
}

/// Wall-clock time of `EE` for every engine that supports `sigma`, as
/// `engine<TAB>milliseconds<TAB>extensions` rows.
pub fn bench(sf: &Setaf, sigma: Semantics) -> Result<String, TaskError> {
    let mut out = String::new();
    for engine in Engine::ALL.into_iter().filter(|e| e.supports(sigma)) {
        let start = Instant::now();
        let found = extensions_with(engine, sf, sigma);
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match found {
            Ok(all) => writeln!(out, "{engine}\t{ms:.3}\t{}", all.len()).unwrap(),
            Err(err) => writeln!(out, "{engine}\t-\t{err}").unwrap(),
        }
    }
    Ok(out)
}
