use std::collections::BTreeSet;

use crate::argset::{ArgId, ArgSet};
use crate::framework::{Attack, Setaf, Subframework};
use crate::semantics::LocalContext;

use super::{sccs, SccError};

/// Defeated, provisionally defeated and undefeated arguments of an SCC
/// relative to a set `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpuPartition {
    pub d: ArgSet,
    pub p: ArgSet,
    pub u: ArgSet,
}

impl DpuPartition {
    /// `U ∪ P`, the arguments that survive into the local framework.
    pub fn up(&self) -> ArgSet {
        self.u.union(&self.p)
    }
}

/// The framework an SCC is evaluated in, with its candidates and mitigated
/// attacks in local ids.
#[derive(Clone, Debug)]
pub struct LocalFramework {
    pub sub: Subframework,
    pub context: LocalContext,
    pub partition: DpuPartition,
}

impl LocalFramework {
    pub fn framework(&self) -> &Setaf {
        self.sub.framework()
    }
}

/// How mitigated attacks of an enclosing level reach nested levels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Inheritance {
    /// Attacks mitigated at an enclosing level stay mitigated: they neither
    /// defeat arguments nor keep restricted attacks alive.
    #[default]
    Propagate,
    /// Only the mitigated attacks computed at the current level are passed
    /// on; incoming ones are forgotten.
    Discard,
}

pub fn partition_dpu(sf: &Setaf, s: &ArgSet, e: &ArgSet) -> Result<DpuPartition, SccError> {
    ensure_scc(sf, s)?;
    Ok(dpu(sf, s, e, &BTreeSet::new()))
}

/// The local framework of SCC `s` under `e`, at top level (`C = A`, `M = ∅`).
pub fn local_framework(sf: &Setaf, s: &ArgSet, e: &ArgSet) -> Result<LocalFramework, SccError> {
    ensure_scc(sf, s)?;
    Ok(build_local(sf, s, e, &sf.arguments(), &BTreeSet::new()))
}

fn ensure_scc(sf: &Setaf, s: &ArgSet) -> Result<(), SccError> {
    if sccs(sf).contains(s) {
        Ok(())
    } else {
        Err(SccError::NotAnScc(s.clone()))
    }
}

/// Whether `x` is attacked from inside `by` through an attack outside
/// `mitigated`.
fn defeated(sf: &Setaf, x: ArgId, by: &ArgSet, mitigated: &BTreeSet<Attack>) -> bool {
    sf.attacks_on(x)
        .any(|att| att.tail().is_subset(by) && !mitigated.contains(att))
}

/// D/P/U where attacks in `mitigated` defeat nothing. They still count as
/// provisional threats. Only attacks on `s` and on their tails are visited.
pub(crate) fn dpu(sf: &Setaf, s: &ArgSet, e: &ArgSet, mitigated: &BTreeSet<Attack>) -> DpuPartition {
    let outside = e.difference(s);
    let d: ArgSet = s
        .iter()
        .filter(|&a| defeated(sf, a, &outside, mitigated))
        .collect();
    let p: ArgSet = s
        .difference(&d)
        .iter()
        .filter(|&a| {
            sf.attacks_on(a).any(|att| {
                att.tail().is_disjoint(s)
                    && att.tail().iter().all(|t| !defeated(sf, t, e, mitigated))
            })
        })
        .collect();
    let u = s.difference(&d.union(&p));
    DpuPartition { d, p, u }
}

/// Local framework of SCC `s` given the decided part `e` of an extension,
/// inside a context with candidates `candidates` and incoming mitigated
/// attacks `mitigated` (both in `sf`'s ids).
///
/// A restricted attack `(X, h)` is mitigated unless some original attack
/// `(T', h)` outside `mitigated` has `T' ⊇ X` and `T' \ X ⊆ e`. With no
/// incoming mitigated attacks this is the plain definition.
pub(crate) fn build_local(
    sf: &Setaf,
    s: &ArgSet,
    e: &ArgSet,
    candidates: &ArgSet,
    mitigated: &BTreeSet<Attack>,
) -> LocalFramework {
    let partition = dpu(sf, s, e, mitigated);
    let up = partition.up();
    let outside = e.difference(s);
    let incoming: Vec<&Attack> = up.iter().flat_map(|a| sf.attacks_on(a)).collect();
    let rejected: ArgSet = incoming
        .iter()
        .flat_map(|att| att.tail().iter())
        .filter(|&t| defeated(sf, t, &outside, mitigated))
        .collect();
    let sub = sf.restriction_over(&rejected, &up, incoming.into_iter());
    let local_mitigated: BTreeSet<Attack> = sub
        .framework()
        .attacks()
        .iter()
        .filter(|att| {
            let lifted = sub.lift_attack(att);
            !sf.attacks_on(lifted.head()).any(|orig| {
                !mitigated.contains(orig)
                    && orig.tail().is_superset(lifted.tail())
                    && orig.tail().difference(lifted.tail()).is_subset(e)
            })
        })
        .cloned()
        .collect();
    let context = LocalContext::new(
        sub.lower(&partition.u.intersection(candidates)),
        local_mitigated,
    );
    LocalFramework {
        sub,
        context,
        partition,
    }
}
