//! Algorithms built on the reduct: accept a part of an extension, pass to
//! the reduct, and continue there.

use std::collections::HashSet;

use thiserror::Error;

use crate::argset::{canonicalize, ArgSet};
use crate::framework::Setaf;
use crate::semantics::{enumerate, is_extension, Semantics, SemanticsError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModularError {
    #[error("modularization check needs {which} to be a {semantics} extension, got {set}")]
    PreconditionViolated {
        which: &'static str,
        semantics: Semantics,
        set: ArgSet,
    },
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
}

/// The grounded extension: collect the unattacked arguments, pass to the
/// reduct they induce, and repeat until nothing is unattacked.
pub fn grounded_iterative(sf: &Setaf) -> ArgSet {
    let mut grounded = ArgSet::new();
    loop {
        let reduct = sf.reduct(&grounded);
        let fresh = reduct.lift(&reduct.framework().unattacked());
        if fresh.is_empty() {
            return grounded;
        }
        grounded.union_with(&fresh);
    }
}

/// Non-empty admissible sets of `sf`, smallest first and lexicographic
/// within a size.
fn nonempty_admissible(sf: &Setaf) -> Result<Vec<ArgSet>, SemanticsError> {
    let mut found: Vec<ArgSet> = enumerate(sf, Semantics::Admissible)?
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    found.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(found)
}

/// One preferred extension: keep adding a non-empty admissible set of the
/// current reduct until the reduct admits none.
pub fn one_preferred(sf: &Setaf) -> Result<ArgSet, SemanticsError> {
    let mut accepted = ArgSet::new();
    loop {
        let reduct = sf.reduct(&accepted);
        match nonempty_admissible(reduct.framework())?.first() {
            Some(next) => accepted.union_with(&reduct.lift(next)),
            None => return Ok(accepted),
        }
    }
}

/// Every admissible set reachable by repeatedly extending with non-empty
/// admissible sets of reducts, together with whether the walk ended there.
/// Memoized on the accepted set, since reducts compose.
fn explore(sf: &Setaf) -> Result<Vec<(ArgSet, bool)>, SemanticsError> {
    let mut seen = HashSet::new();
    let mut nodes = Vec::new();
    let mut stack = vec![ArgSet::new()];
    while let Some(accepted) = stack.pop() {
        if !seen.insert(accepted.clone()) {
            continue;
        }
        let reduct = sf.reduct(&accepted);
        let next = nonempty_admissible(reduct.framework())?;
        for ext in next.iter().rev() {
            let union = accepted.union(&reduct.lift(ext));
            if !seen.contains(&union) {
                stack.push(union);
            }
        }
        nodes.push((accepted, next.is_empty()));
    }
    Ok(nodes)
}

/// All preferred extensions, as the end points of the extension walk.
pub fn all_preferred_modular(sf: &Setaf) -> Result<Vec<ArgSet>, SemanticsError> {
    Ok(canonicalize(
        explore(sf)?
            .into_iter()
            .filter(|(_, last)| *last)
            .map(|(e, _)| e)
            .collect(),
    ))
}

/// Extensions through the reduct: admissible sets are the nodes of the
/// extension walk, complete ones leave nothing unattacked in their reduct,
/// stable ones leave an empty reduct, and semi-stable ones are the preferred
/// extensions with a `⊆`-minimal reduct.
pub fn enumerate_modular(sf: &Setaf, sigma: Semantics) -> Result<Vec<ArgSet>, SemanticsError> {
    let found = match sigma {
        Semantics::Grounded => vec![grounded_iterative(sf)],
        Semantics::Preferred => all_preferred_modular(sf)?,
        Semantics::Admissible => explore(sf)?.into_iter().map(|(e, _)| e).collect(),
        Semantics::Complete => explore(sf)?
            .into_iter()
            .map(|(e, _)| e)
            .filter(|e| sf.reduct(e).framework().unattacked().is_empty())
            .collect(),
        Semantics::Stable => all_preferred_modular(sf)?
            .into_iter()
            .filter(|e| sf.reduct(e).framework().num_arguments() == 0)
            .collect(),
        Semantics::SemiStable => {
            let preferred = all_preferred_modular(sf)?;
            let left: Vec<ArgSet> = preferred.iter().map(|e| sf.reduct(e).domain()).collect();
            preferred
                .iter()
                .zip(&left)
                .filter(|(_, mine)| !left.iter().any(|other| other.is_proper_subset(mine)))
                .map(|(e, _)| e.clone())
                .collect()
        }
        _ => {
            return Err(SemanticsError::Unsupported {
                semantics: sigma,
                operation: "reduct-based evaluation",
            })
        }
    };
    Ok(canonicalize(found))
}

/// Given `e ∈ σ(sf)` and `e2 ∈ σ(sf^e)`, whether `e ∪ e2 ∈ σ(sf)`. Only
/// admissible and complete semantics are accepted; `e2` is in the ids of
/// `sf`.
pub fn check_modularization(
    sf: &Setaf,
    sigma: Semantics,
    e: &ArgSet,
    e2: &ArgSet,
) -> Result<bool, ModularError> {
    if !matches!(sigma, Semantics::Admissible | Semantics::Complete) {
        return Err(SemanticsError::Unsupported {
            semantics: sigma,
            operation: "modularization check",
        }
        .into());
    }
    if !is_extension(sf, sigma, e)? {
        return Err(ModularError::PreconditionViolated {
            which: "the first set",
            semantics: sigma,
            set: e.clone(),
        });
    }
    let reduct = sf.reduct(e);
    let local = reduct.lower(e2);
    if reduct.lift(&local) != *e2 || !is_extension(reduct.framework(), sigma, &local)? {
        return Err(ModularError::PreconditionViolated {
            which: "the second set, in the reduct,",
            semantics: sigma,
            set: e2.clone(),
        });
    }
    Ok(is_extension(sf, sigma, &e.union(e2))?)
}
