use std::collections::BTreeSet;

use crate::argset::{canonicalize, ArgSet};
use crate::framework::{Attack, Setaf};
use crate::semantics::{enumerate, enumerate_cm, LocalContext, Semantics, SemanticsError};

use super::local::{build_local, Inheritance};
use super::sccs;

/// Stable extensions, assembled SCC by SCC in topological order. Each SCC
/// is restricted by the arguments the decided part attacks; local frameworks
/// that are a single SCC are solved directly.
pub fn gf_stable(sf: &Setaf) -> Result<Vec<ArgSet>, SemanticsError> {
    if sf.num_arguments() == 0 {
        return Ok(vec![ArgSet::new()]);
    }
    let dec = sccs(sf);
    if dec.len() == 1 {
        return enumerate(sf, Semantics::Stable);
    }
    let mut partials = vec![ArgSet::new()];
    for s in dec.ordered() {
        let mut next = Vec::new();
        for e in &partials {
            let sub = stable_local(sf, s, e);
            for local in gf_stable(sub.framework())? {
                next.push(e.union(&sub.lift(&local)));
            }
        }
        partials = next;
    }
    Ok(canonicalize(partials))
}

pub(crate) fn stable_local(sf: &Setaf, s: &ArgSet, e: &ArgSet) -> crate::framework::Subframework {
    let rejected = sf.plus(&e.difference(s));
    let up = s.difference(&rejected);
    sf.restriction(&rejected, &up)
}

/// Extensions of `sf` under one of the contextual semantics relative to
/// `ctx`, assembled SCC by SCC. Equal to
/// [`enumerate_cm`](crate::semantics::enumerate_cm), but only ever
/// enumerates subsets of local frameworks, so the size limit applies per SCC.
pub fn gf_evaluate(
    sf: &Setaf,
    sigma: Semantics,
    ctx: &LocalContext,
) -> Result<Vec<ArgSet>, SemanticsError> {
    gf_evaluate_with(sf, sigma, ctx, Inheritance::Propagate)
}

pub fn gf_evaluate_with(
    sf: &Setaf,
    sigma: Semantics,
    ctx: &LocalContext,
    inheritance: Inheritance,
) -> Result<Vec<ArgSet>, SemanticsError> {
    if !sigma.is_contextual() {
        return Err(SemanticsError::Unsupported {
            semantics: sigma,
            operation: "SCC-recursive evaluation",
        });
    }
    if sf.num_arguments() == 0 {
        return Ok(vec![ArgSet::new()]);
    }
    let dec = sccs(sf);
    if dec.len() == 1 {
        return enumerate_cm(sf, sigma, ctx);
    }
    let empty = BTreeSet::new();
    let incoming = inherited(ctx, inheritance, &empty);
    let mut partials = vec![ArgSet::new()];
    for s in dec.ordered() {
        let mut next = Vec::new();
        for e in &partials {
            let local = build_local(sf, s, e, &ctx.candidates, incoming);
            for found in gf_evaluate_with(local.framework(), sigma, &local.context, inheritance)? {
                next.push(e.union(&local.sub.lift(&found)));
            }
        }
        partials = next;
    }
    Ok(canonicalize(partials))
}

fn inherited<'a>(
    ctx: &'a LocalContext,
    inheritance: Inheritance,
    empty: &'a BTreeSet<Attack>,
) -> &'a BTreeSet<Attack> {
    match inheritance {
        Inheritance::Propagate => &ctx.mitigated,
        Inheritance::Discard => empty,
    }
}

/// Membership in the SCC-recursive scheme checked the way it is defined:
/// for every SCC `S`, `e ∩ S` must be accepted by the local framework of
/// `S` under the whole of `e`. Stable semantics ignores `ctx`.
pub fn is_gf_member(
    sf: &Setaf,
    sigma: Semantics,
    ctx: &LocalContext,
    e: &ArgSet,
    inheritance: Inheritance,
) -> Result<bool, SemanticsError> {
    if !e.is_subset(&sf.arguments()) {
        return Ok(false);
    }
    if sf.num_arguments() == 0 {
        return Ok(e.is_empty());
    }
    let dec = sccs(sf);
    if dec.len() == 1 {
        return Ok(match sigma {
            Semantics::Stable => enumerate(sf, sigma)?.contains(e),
            _ => enumerate_cm(sf, sigma, ctx)?.contains(e),
        });
    }
    let empty = BTreeSet::new();
    let incoming = inherited(ctx, inheritance, &empty);
    for s in dec.components() {
        let part = e.intersection(s);
        let ok = if sigma == Semantics::Stable {
            let sub = stable_local(sf, s, e);
            let local = sub.lower(&part);
            sub.lift(&local) == part
                && is_gf_member(sub.framework(), sigma, ctx, &local, inheritance)?
        } else {
            let lf = build_local(sf, s, e, &ctx.candidates, incoming);
            let local = lf.sub.lower(&part);
            lf.sub.lift(&local) == part
                && is_gf_member(lf.framework(), sigma, &lf.context, &local, inheritance)?
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
