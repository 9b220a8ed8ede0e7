//! Brute-force reference engine for the extension semantics, and for the
//! variants of admissible, complete, preferred and grounded semantics that are
//! relative to a candidate set `C` and a set `M` of mitigated attacks.
//!
//! Everything here scans subsets directly from the definitions. It is the
//! correctness oracle for the other engines, so it favours clarity over speed
//! and refuses frameworks above [`BRUTE_FORCE_LIMIT`] arguments.

pub(crate) mod mask;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::argset::{canonicalize, ArgId, ArgSet};
use crate::framework::{Attack, Setaf};
use mask::{bit, mask_of, maximal, range_maximal, Compiled};

/// Largest framework the subset scans accept.
pub const BRUTE_FORCE_LIMIT: usize = 24;

/// Largest framework the superset scan of [`is_extension`] accepts.
pub const VERIFY_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semantics {
    ConflictFree,
    Naive,
    Admissible,
    Complete,
    Grounded,
    Preferred,
    Stable,
    Stage,
    SemiStable,
}

impl Semantics {
    pub const ALL: [Semantics; 9] = [
        Semantics::ConflictFree,
        Semantics::Naive,
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Preferred,
        Semantics::Stable,
        Semantics::Stage,
        Semantics::SemiStable,
    ];

    /// The eight semantics of the principle matrix, in its column order.
    pub const MATRIX: [Semantics; 8] = [
        Semantics::Grounded,
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Stable,
        Semantics::Preferred,
        Semantics::Naive,
        Semantics::SemiStable,
        Semantics::Stage,
    ];

    /// Semantics that have a variant relative to `(C, M)`.
    pub const CONTEXTUAL: [Semantics; 4] = [
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Preferred,
    ];

    /// Two-letter code, as used on the command line.
    pub fn code(self) -> &'static str {
        match self {
            Semantics::ConflictFree => "CF",
            Semantics::Naive => "NA",
            Semantics::Admissible => "AD",
            Semantics::Complete => "CO",
            Semantics::Grounded => "GR",
            Semantics::Preferred => "PR",
            Semantics::Stable => "ST",
            Semantics::Stage => "SG",
            Semantics::SemiStable => "SM",
        }
    }

    pub fn is_contextual(self) -> bool {
        Semantics::CONTEXTUAL.contains(&self)
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Semantics {
    type Err = SemanticsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Semantics::ALL
            .into_iter()
            .find(|sem| sem.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| SemanticsError::UnknownSemantics(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("framework has {n} arguments; this operation handles at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("{operation} is not defined for {semantics} semantics")]
    Unsupported {
        semantics: Semantics,
        operation: &'static str,
    },
    #[error("mitigated attack {0} is not an attack of the framework")]
    ForeignMitigatedAttack(Attack),
    #[error("candidate set {0} leaves the framework's arguments")]
    CandidatesOutOfRange(ArgSet),
    #[error("unknown semantics `{0}`")]
    UnknownSemantics(String),
}

/// Candidate set `C` and mitigated attacks `M` for the relative semantics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalContext {
    pub candidates: ArgSet,
    pub mitigated: BTreeSet<Attack>,
}

impl LocalContext {
    /// `C = A`, `M = ∅`: the relative semantics coincide with the plain ones.
    pub fn unrestricted(sf: &Setaf) -> Self {
        LocalContext {
            candidates: sf.arguments(),
            mitigated: BTreeSet::new(),
        }
    }

    pub fn new(candidates: ArgSet, mitigated: BTreeSet<Attack>) -> Self {
        LocalContext {
            candidates,
            mitigated,
        }
    }

    fn validate(&self, sf: &Setaf) -> Result<(), SemanticsError> {
        if !self.candidates.is_subset(&sf.arguments()) {
            return Err(SemanticsError::CandidatesOutOfRange(self.candidates.clone()));
        }
        if let Some(att) = self.mitigated.iter().find(|att| !sf.contains_attack(att)) {
            return Err(SemanticsError::ForeignMitigatedAttack(att.clone()));
        }
        Ok(())
    }
}

fn check_size(sf: &Setaf, limit: usize) -> Result<(), SemanticsError> {
    match sf.num_arguments() {
        n if n > limit => Err(SemanticsError::TooLarge { n, limit }),
        _ => Ok(()),
    }
}

fn to_sets(masks: impl IntoIterator<Item = u64>) -> Vec<ArgSet> {
    canonicalize(masks.into_iter().map(ArgSet::from_mask).collect())
}

/// All extensions of `sf` under `sigma`, in canonical order.
pub fn enumerate(sf: &Setaf, sigma: Semantics) -> Result<Vec<ArgSet>, SemanticsError> {
    check_size(sf, BRUTE_FORCE_LIMIT)?;
    let cm = Compiled::new(sf);
    let full = cm.full();
    let cf = cm.cf_family(full);
    let admissible = || -> Vec<u64> {
        cf.iter()
            .copied()
            .filter(|&s| cm.is_admissible_in(s, full))
            .collect()
    };
    let family = match sigma {
        Semantics::ConflictFree => cf,
        Semantics::Naive => cf
            .iter()
            .copied()
            .filter(|&s| (0..cm.n()).all(|p| s & bit(p) != 0 || !cm.is_cf(s | bit(p))))
            .collect(),
        Semantics::Admissible => admissible(),
        Semantics::Complete => cf
            .iter()
            .copied()
            .filter(|&s| cm.is_complete_in(s, full))
            .collect(),
        Semantics::Grounded => vec![cm.least_fixpoint(full)],
        Semantics::Preferred => maximal(&admissible()),
        Semantics::Stable => cf.iter().copied().filter(|&s| cm.range(s) == full).collect(),
        Semantics::Stage => range_maximal(&cm, &cf),
        Semantics::SemiStable => range_maximal(&cm, &admissible()),
    };
    Ok(to_sets(family))
}

/// Whether `e` is a `sigma`-extension of `sf`, decided straight from the
/// definition. Preferred extensions are confirmed by scanning every strict
/// superset of `e`, so the cost grows with `2^(n - |e|)`.
pub fn is_extension(sf: &Setaf, sigma: Semantics, e: &ArgSet) -> Result<bool, SemanticsError> {
    match sigma {
        Semantics::Stage | Semantics::SemiStable => {
            return Ok(enumerate(sf, sigma)?.contains(e));
        }
        _ => check_size(sf, VERIFY_LIMIT)?,
    }
    if !e.is_subset(&sf.arguments()) {
        return Ok(false);
    }
    let cm = Compiled::new(sf);
    let full = cm.full();
    let s = mask_of(e);
    Ok(match sigma {
        Semantics::ConflictFree => cm.is_cf(s),
        Semantics::Naive => cm.is_cf(s) && (0..cm.n()).all(|p| s & bit(p) != 0 || !cm.is_cf(s | bit(p))),
        Semantics::Admissible => cm.is_admissible_in(s, full),
        Semantics::Complete => cm.is_complete_in(s, full),
        Semantics::Grounded => cm.least_fixpoint(full) == s,
        Semantics::Stable => cm.is_cf(s) && cm.range(s) == full,
        Semantics::Preferred => {
            cm.is_admissible_in(s, full) && !has_admissible_strict_superset(&cm, s, full)
        }
        Semantics::Stage | Semantics::SemiStable => unreachable!(),
    })
}

fn has_admissible_strict_superset(cm: &Compiled, s: u64, candidates: u64) -> bool {
    let free = candidates & !s;
    // iterate the non-empty subsets of `free`
    let mut sub = free;
    while sub != 0 {
        if cm.is_admissible_in(s | sub, candidates) {
            return true;
        }
        sub = (sub - 1) & free;
    }
    false
}

/// Whether every attack on `a` is countered by a non-mitigated attack whose
/// tail lies inside `e`.
pub fn acceptable_considering(
    sf: &Setaf,
    a: ArgId,
    e: &ArgSet,
    mitigated: &BTreeSet<Attack>,
) -> bool {
    let defeated = plus_active(sf, e, mitigated);
    sf.attacks_on(a).all(|att| att.tail().intersects(&defeated))
}

/// Arguments attacked by `e` through attacks outside `mitigated`.
pub fn plus_active(sf: &Setaf, e: &ArgSet, mitigated: &BTreeSet<Attack>) -> ArgSet {
    sf.attacks()
        .iter()
        .filter(|att| att.tail().is_subset(e) && !mitigated.contains(att))
        .map(Attack::head)
        .collect()
}

/// All `sigma`-extensions of `sf` in `ctx.candidates` considering
/// `ctx.mitigated`, in canonical order.
pub fn enumerate_cm(
    sf: &Setaf,
    sigma: Semantics,
    ctx: &LocalContext,
) -> Result<Vec<ArgSet>, SemanticsError> {
    if !sigma.is_contextual() {
        return Err(SemanticsError::Unsupported {
            semantics: sigma,
            operation: "evaluation relative to candidates and mitigated attacks",
        });
    }
    ctx.validate(sf)?;
    check_size(sf, BRUTE_FORCE_LIMIT)?;
    let cm = Compiled::with_mitigated(sf, &ctx.mitigated);
    let cand = mask_of(&ctx.candidates);
    if sigma == Semantics::Grounded {
        return Ok(to_sets([cm.least_fixpoint(cand)]));
    }
    let admissible: Vec<u64> = cm
        .cf_family(cand)
        .into_iter()
        .filter(|&s| cm.is_admissible_in(s, cand))
        .collect();
    let family = match sigma {
        Semantics::Admissible => admissible,
        Semantics::Complete => admissible
            .into_iter()
            .filter(|&s| cm.is_complete_in(s, cand))
            .collect(),
        Semantics::Preferred => maximal(&admissible),
        _ => unreachable!(),
    };
    Ok(to_sets(family))
}

/// Membership test for the relative semantics that only scans subsets of the
/// candidate set, which keeps it usable on larger frameworks as long as the
/// candidates are few.
pub fn is_extension_cm(
    sf: &Setaf,
    sigma: Semantics,
    ctx: &LocalContext,
    e: &ArgSet,
) -> Result<bool, SemanticsError> {
    if !sigma.is_contextual() {
        return Err(SemanticsError::Unsupported {
            semantics: sigma,
            operation: "evaluation relative to candidates and mitigated attacks",
        });
    }
    ctx.validate(sf)?;
    check_size(sf, VERIFY_LIMIT)?;
    let cm = Compiled::with_mitigated(sf, &ctx.mitigated);
    let cand = mask_of(&ctx.candidates);
    let s = mask_of(e);
    Ok(match sigma {
        Semantics::Admissible => cm.is_admissible_in(s, cand),
        Semantics::Complete => cm.is_complete_in(s, cand),
        Semantics::Grounded => cm.least_fixpoint(cand) == s,
        Semantics::Preferred => {
            cm.is_admissible_in(s, cand) && !has_admissible_strict_superset(&cm, s, cand)
        }
        _ => unreachable!(),
    })
}

/// One application of the relative characteristic function: the candidates
/// acceptable considering `ctx.mitigated` w.r.t. `e`.
pub fn characteristic_cm(sf: &Setaf, ctx: &LocalContext, e: &ArgSet) -> ArgSet {
    let defeated = plus_active(sf, e, &ctx.mitigated);
    ctx.candidates
        .iter()
        .filter(|&a| sf.attacks_on(a).all(|att| att.tail().intersects(&defeated)))
        .collect()
}

/// Least fixpoint of the relative characteristic function, by iteration
/// from the empty set. Works on frameworks of any size.
pub fn fixpoint_f(sf: &Setaf, ctx: &LocalContext) -> ArgSet {
    let mut e = ArgSet::new();
    loop {
        let next = characteristic_cm(sf, ctx, &e);
        if next == e {
            return e;
        }
        e = next;
    }
}

/// The grounded extension, as least fixpoint of the characteristic function.
pub fn grounded(sf: &Setaf) -> ArgSet {
    fixpoint_f(sf, &LocalContext::unrestricted(sf))
}

/// Decides membership of the conflict-free set `e` through its reduct:
///
/// * stable: the reduct is empty;
/// * admissible: for every attack `(T, x)` on `e`, `T \ e` leaves the
///   reduct's arguments (checking tails suffices, larger attacking sets only
///   add members);
/// * preferred: admissible, and the reduct has no non-empty admissible set;
/// * complete: admissible, and the reduct has no unattacked argument;
/// * semi-stable: preferred, and no preferred set has a strictly smaller
///   reduct argument set.
pub fn check_alt_characterization(
    sf: &Setaf,
    sigma: Semantics,
    e: &ArgSet,
) -> Result<bool, SemanticsError> {
    let reduct = sf.reduct(e);
    let remaining = reduct.domain();
    let admissible = || {
        e.iter().all(|x| {
            sf.attacks_on(x)
                .all(|att| !att.tail().difference(e).is_subset(&remaining))
        })
    };
    let reduct_admits_nothing = || -> Result<bool, SemanticsError> {
        Ok(enumerate(reduct.framework(), Semantics::Admissible)?
            .iter()
            .all(ArgSet::is_empty))
    };
    match sigma {
        Semantics::Stable => Ok(remaining.is_empty()),
        Semantics::Admissible => Ok(admissible()),
        Semantics::Preferred => Ok(admissible() && reduct_admits_nothing()?),
        Semantics::Complete => Ok(admissible() && reduct.framework().unattacked().is_empty()),
        Semantics::SemiStable => {
            if !(admissible() && reduct_admits_nothing()?) {
                return Ok(false);
            }
            for other in enumerate(sf, Semantics::Preferred)? {
                if sf.reduct(&other).domain().is_proper_subset(&remaining) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Err(SemanticsError::Unsupported {
            semantics: sigma,
            operation: "reduct-based characterization",
        }),
    }
}
