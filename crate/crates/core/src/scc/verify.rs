use std::collections::BTreeSet;

use crate::argset::ArgSet;
use crate::framework::Setaf;
use crate::semantics::{is_extension_cm, Semantics, SemanticsError};

use super::local::build_local;
use super::sccs;

/// Whether `e` is a preferred extension of `sf`, checked one SCC at a time:
/// `e ∩ S` has to be preferred in the local framework of every SCC `S`
/// relative to its candidates and mitigated attacks. Each check scans
/// subsets of the local candidates only, so the cost is exponential in the
/// largest SCC and polynomial in the rest.
pub fn verify_preferred(sf: &Setaf, e: &ArgSet) -> Result<bool, SemanticsError> {
    if !e.is_subset(&sf.arguments()) {
        return Ok(false);
    }
    let all = sf.arguments();
    let none = BTreeSet::new();
    let dec = sccs(sf);
    for s in dec.ordered() {
        let local = build_local(sf, s, e, &all, &none);
        let part = e.intersection(s);
        let lowered = local.sub.lower(&part);
        if local.sub.lift(&lowered) != part
            || !is_extension_cm(local.framework(), Semantics::Preferred, &local.context, &lowered)?
        {
            return Ok(false);
        }
    }
    Ok(true)
}
