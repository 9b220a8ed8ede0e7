//! Principle checking on single frameworks, and randomized search for
//! counterexamples.
//!
//! Every principle quantifies over all frameworks; [`check_instance`] tests
//! the condition on one framework, so a pass is evidence and a failure is a
//! re-checkable counterexample.

mod influence;

use std::fmt;
use std::str::FromStr;

use crate::argset::{canonicalize, ArgId, ArgSet};
use crate::framework::Setaf;
use crate::generate::{generate, GenerateError, GeneratorConfig};
use crate::modular::check_modularization;
use crate::scc::{gf_evaluate, gf_stable};
use crate::semantics::{enumerate, LocalContext, Semantics, SemanticsError};

pub use influence::{is_isolated, is_uninfluenced, uninfluenced_sets};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrincipleId {
    ConflictFreeness,
    Defense,
    Admissibility,
    Reinstatement,
    CFReinstatement,
    Naivety,
    IMaximality,
    AllowingAbstention,
    CrashResistance,
    Modularization,
    Directionality,
    NonInterference,
    SccRecursiveness,
}

impl PrincipleId {
    pub const ALL: [PrincipleId; 13] = [
        PrincipleId::ConflictFreeness,
        PrincipleId::Defense,
        PrincipleId::Admissibility,
        PrincipleId::Reinstatement,
        PrincipleId::CFReinstatement,
        PrincipleId::Naivety,
        PrincipleId::IMaximality,
        PrincipleId::AllowingAbstention,
        PrincipleId::CrashResistance,
        PrincipleId::Modularization,
        PrincipleId::Directionality,
        PrincipleId::NonInterference,
        PrincipleId::SccRecursiveness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PrincipleId::ConflictFreeness => "conflict-freeness",
            PrincipleId::Defense => "defense",
            PrincipleId::Admissibility => "admissibility",
            PrincipleId::Reinstatement => "reinstatement",
            PrincipleId::CFReinstatement => "cf-reinstatement",
            PrincipleId::Naivety => "naivety",
            PrincipleId::IMaximality => "i-maximality",
            PrincipleId::AllowingAbstention => "allowing-abstention",
            PrincipleId::CrashResistance => "crash-resistance",
            PrincipleId::Modularization => "modularization",
            PrincipleId::Directionality => "directionality",
            PrincipleId::NonInterference => "non-interference",
            PrincipleId::SccRecursiveness => "scc-recursiveness",
        }
    }

    /// Whether `check_instance` can evaluate this principle for `sigma`.
    pub fn supports(self, sigma: Semantics) -> bool {
        self != PrincipleId::SccRecursiveness
            || sigma == Semantics::Stable
            || sigma.is_contextual()
    }
}

impl fmt::Display for PrincipleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PrincipleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        PrincipleId::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown principle `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    HoldsOnTested,
    CounterexampleFound,
    Unsupported,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::HoldsOnTested => "holds-on-tested",
            Verdict::CounterexampleFound => "counterexample-found",
            Verdict::Unsupported => "unsupported",
        })
    }
}

/// Everything needed to re-check a violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub framework: Setaf,
    /// `σ(framework)`.
    pub extensions: Vec<ArgSet>,
    /// The offending extension or (uninfluenced, isolated) set, if any.
    pub set: Option<ArgSet>,
    /// The framework added next to `framework`, for crash resistance.
    pub attachment: Option<Setaf>,
    pub detail: String,
    /// Generator seed of the framework, when it came from a search.
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipleReport {
    pub principle: PrincipleId,
    pub semantics: Semantics,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub instances_tested: usize,
    pub seed: Option<u64>,
    pub note: Option<String>,
}

impl PrincipleReport {
    /// `principle<TAB>semantics<TAB>verdict<TAB>seed`, with `-` for no seed.
    pub fn tsv_row(&self) -> String {
        let seed = self.seed.map_or_else(|| "-".to_string(), |s| s.to_string());
        format!("{}\t{}\t{}\t{}", self.principle, self.semantics, self.verdict, seed)
    }
}

impl fmt::Display for PrincipleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} under {}: {} ({} instance{})",
            self.principle,
            self.semantics,
            self.verdict,
            self.instances_tested,
            if self.instances_tested == 1 { "" } else { "s" }
        )?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {:?}\n  {}", w.framework, w.detail)?;
        }
        if let Some(note) = &self.note {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

fn note_for(principle: PrincipleId, sigma: Semantics) -> Option<String> {
    match (principle, sigma) {
        (PrincipleId::CrashResistance, _) => Some(
            "checked by composition with a fixed set of attachments; empirically consistent \
             with the known results, not a proof"
                .into(),
        ),
        (PrincipleId::Modularization, Semantics::Stable | Semantics::Preferred | Semantics::SemiStable) => Some(
            "only the trivial form is exercised: the reduct of such an extension admits \
             only the empty set"
                .into(),
        ),
        _ => None,
    }
}

/// Small frameworks placed next to the checked one for crash resistance.
pub fn attachment_library() -> Vec<Setaf> {
    vec![
        Setaf::isolated(1),
        Setaf::from_raw(1, &[(vec![1], 1)]).unwrap(),
        Setaf::from_raw(2, &[(vec![1], 2), (vec![2], 1)]).unwrap(),
        Setaf::from_raw(3, &[(vec![1], 2), (vec![2], 3), (vec![3], 1)]).unwrap(),
        Setaf::from_raw(3, &[(vec![1, 2], 3), (vec![3], 1)]).unwrap(),
    ]
}

struct Violation {
    set: Option<ArgSet>,
    attachment: Option<Setaf>,
    detail: String,
}

impl Violation {
    fn on(set: &ArgSet, detail: String) -> Self {
        Violation {
            set: Some(set.clone()),
            attachment: None,
            detail,
        }
    }
}

type Check = Result<Option<Violation>, SemanticsError>;

/// Evaluates `principle` for `sigma` on `sf`.
pub fn check_instance(
    sf: &Setaf,
    sigma: Semantics,
    principle: PrincipleId,
) -> Result<PrincipleReport, SemanticsError> {
    let mut report = PrincipleReport {
        principle,
        semantics: sigma,
        verdict: Verdict::Unsupported,
        witness: None,
        instances_tested: 0,
        seed: None,
        note: note_for(principle, sigma),
    };
    if !principle.supports(sigma) {
        report.note = Some(format!("no SCC-recursive scheme for {sigma}"));
        return Ok(report);
    }
    let extensions = enumerate(sf, sigma)?;
    let found = match principle {
        PrincipleId::ConflictFreeness => first(&extensions, |e| {
            (!sf.is_conflict_free(e)).then(|| "extension is not conflict-free".into())
        }),
        PrincipleId::Defense => first(&extensions, |e| {
            e.iter()
                .find(|&a| !sf.defends(e, a))
                .map(|a| format!("member {a} is not defended"))
        }),
        PrincipleId::Admissibility => {
            let adm = enumerate(sf, Semantics::Admissible)?;
            first(&extensions, |e| {
                (!adm.contains(e)).then(|| "extension is not admissible".into())
            })
        }
        PrincipleId::Reinstatement => first(&extensions, |e| {
            sf.characteristic(e)
                .difference(e)
                .first()
                .map(|a| format!("{a} is defended but not included"))
        }),
        PrincipleId::CFReinstatement => first(&extensions, |e| {
            sf.characteristic(e)
                .difference(e)
                .iter()
                .find(|&a| {
                    let mut grown = e.clone();
                    grown.insert(a);
                    sf.is_conflict_free(&grown)
                })
                .map(|a| format!("{a} is defended and compatible but not included"))
        }),
        PrincipleId::Naivety => {
            let cf = enumerate(sf, Semantics::ConflictFree)?;
            first(&extensions, |e| {
                cf.iter()
                    .find(|c| e.is_proper_subset(c))
                    .map(|c| format!("conflict-free {c} strictly contains it"))
            })
        }
        PrincipleId::IMaximality => first(&extensions, |e| {
            extensions
                .iter()
                .find(|o| e.is_proper_subset(o))
                .map(|o| format!("extension {o} strictly contains it"))
        }),
        PrincipleId::AllowingAbstention => Ok(allowing_abstention(sf, &extensions)),
        PrincipleId::CrashResistance => crash_resistance(sf, sigma, &extensions),
        PrincipleId::Modularization => modularization(sf, sigma, &extensions),
        PrincipleId::Directionality => {
            let sets = uninfluenced_sets(sf);
            projections_commute(sf, sigma, &extensions, &sets, "uninfluenced")
        }
        PrincipleId::NonInterference => {
            let sets: Vec<ArgSet> = uninfluenced_sets(sf)
                .into_iter()
                .filter(|s| is_isolated(sf, s))
                .collect();
            projections_commute(sf, sigma, &extensions, &sets, "isolated")
        }
        PrincipleId::SccRecursiveness => {
            let gf = match sigma {
                Semantics::Stable => gf_stable(sf)?,
                _ => gf_evaluate(sf, sigma, &LocalContext::unrestricted(sf))?,
            };
            Ok((gf != extensions).then(|| Violation {
                set: None,
                attachment: None,
                detail: format!("SCC-wise evaluation gives {gf:?}, extensions are {extensions:?}"),
            }))
        }
    }?;
    report.instances_tested = 1;
    match found {
        None => report.verdict = Verdict::HoldsOnTested,
        Some(v) => {
            report.verdict = Verdict::CounterexampleFound;
            report.witness = Some(Witness {
                framework: sf.clone(),
                extensions,
                set: v.set,
                attachment: v.attachment,
                detail: v.detail,
                seed: None,
            });
        }
    }
    Ok(report)
}

fn first(extensions: &[ArgSet], mut bad: impl FnMut(&ArgSet) -> Option<String>) -> Check {
    Ok(extensions
        .iter()
        .find_map(|e| bad(e).map(|why| Violation::on(e, format!("{e}: {why}")))))
}

fn allowing_abstention(sf: &Setaf, extensions: &[ArgSet]) -> Option<Violation> {
    let ranges: Vec<ArgSet> = extensions.iter().map(|e| sf.range(e)).collect();
    let pluses: Vec<ArgSet> = extensions.iter().map(|e| sf.plus(e)).collect();
    sf.arguments().iter().find_map(|a| {
        let accepted = extensions.iter().any(|e| e.contains(a));
        let rejected = pluses.iter().any(|p| p.contains(a));
        let undecided = ranges.iter().any(|r| !r.contains(a));
        (accepted && rejected && !undecided).then(|| Violation {
            set: Some(ArgSet::singleton(a)),
            attachment: None,
            detail: format!("{a} is accepted by one extension and attacked by another, but no extension leaves it undecided"),
        })
    })
}

fn shifted(s: &ArgSet, by: usize) -> ArgSet {
    s.iter().map(|a| ArgId::new(a.get() + by as u32)).collect()
}

fn crash_resistance(sf: &Setaf, sigma: Semantics, extensions: &[ArgSet]) -> Check {
    let n = sf.num_arguments();
    let trivial = extensions.len() == 1 && extensions[0].is_empty();
    for attachment in attachment_library() {
        let combined = enumerate(&sf.disjoint_union(&attachment), sigma)?;
        let theirs: Vec<ArgSet> = enumerate(&attachment, sigma)?
            .iter()
            .map(|e| shifted(e, n))
            .collect();
        let composed = canonicalize(
            extensions
                .iter()
                .flat_map(|e| theirs.iter().map(move |t| e.union(t)))
                .collect(),
        );
        let detail = if combined != composed {
            Some(format!(
                "adding {attachment:?} gives {combined:?} instead of the pairwise unions {composed:?}"
            ))
        } else if !trivial && combined == canonicalize(theirs) {
            Some(format!(
                "adding {attachment:?} leaves only its own extensions {combined:?}"
            ))
        } else {
            None
        };
        if let Some(detail) = detail {
            return Ok(Some(Violation {
                set: None,
                attachment: Some(attachment),
                detail,
            }));
        }
    }
    Ok(None)
}

fn modularization(sf: &Setaf, sigma: Semantics, extensions: &[ArgSet]) -> Check {
    for e in extensions {
        let reduct = sf.reduct(e);
        for local in enumerate(reduct.framework(), sigma)? {
            let e2 = reduct.lift(&local);
            let holds = match sigma {
                Semantics::Admissible | Semantics::Complete => {
                    check_modularization(sf, sigma, e, &e2).map_err(|err| match err {
                        crate::modular::ModularError::Semantics(s) => s,
                        other => unreachable!("preconditions hold by construction: {other}"),
                    })?
                }
                _ => extensions.contains(&e.union(&e2)),
            };
            if !holds {
                return Ok(Some(Violation::on(
                    e,
                    format!("{e} extended by {e2} from its reduct is not an extension"),
                )));
            }
        }
    }
    Ok(None)
}

fn projections_commute(
    sf: &Setaf,
    sigma: Semantics,
    extensions: &[ArgSet],
    sets: &[ArgSet],
    kind: &str,
) -> Check {
    for s in sets {
        let projection = sf.projection(s);
        let local: Vec<ArgSet> = canonicalize(
            enumerate(projection.framework(), sigma)?
                .iter()
                .map(|e| projection.lift(e))
                .collect(),
        );
        let restricted = canonicalize(extensions.iter().map(|e| e.intersection(s)).collect());
        if local != restricted {
            return Ok(Some(Violation::on(
                s,
                format!(
                    "on the {kind} set {s} the projection gives {local:?}, restricting the extensions gives {restricted:?}"
                ),
            )));
        }
    }
    Ok(None)
}

/// Runs [`check_instance`] on `budget` frameworks drawn with seeds
/// `seed, seed + 1, ...` and stops at the first counterexample.
pub fn search_counterexample(
    sigma: Semantics,
    principle: PrincipleId,
    config: &GeneratorConfig,
    seed: u64,
    budget: usize,
) -> Result<PrincipleReport, SearchError> {
    let mut report = PrincipleReport {
        principle,
        semantics: sigma,
        verdict: Verdict::Unsupported,
        witness: None,
        instances_tested: 0,
        seed: Some(seed),
        note: note_for(principle, sigma),
    };
    if !principle.supports(sigma) {
        report.note = Some(format!("no SCC-recursive scheme for {sigma}"));
        return Ok(report);
    }
    report.verdict = Verdict::HoldsOnTested;
    for i in 0..budget as u64 {
        let instance_seed = seed.wrapping_add(i);
        let sf = generate(config, instance_seed)?;
        let single = check_instance(&sf, sigma, principle)?;
        report.instances_tested += 1;
        if single.verdict == Verdict::CounterexampleFound {
            report.verdict = Verdict::CounterexampleFound;
            report.witness = single.witness.map(|w| Witness {
                seed: Some(instance_seed),
                ..w
            });
            break;
        }
    }
    Ok(report)
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
}
