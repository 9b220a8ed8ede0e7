use crate::argset::ArgSet;
use crate::framework::Setaf;
use crate::semantics::{LocalContext, Semantics, SemanticsError, BRUTE_FORCE_LIMIT};

use super::gf::{gf_evaluate, gf_stable, stable_local};
use super::local::build_local;
use super::{sccs, SccDecomposition};

struct Frame {
    partial: ArgSet,
    pending: std::vec::IntoIter<ArgSet>,
}

/// Lazy SCC-wise enumeration: a depth-first walk over the components in
/// topological order that yields each extension as soon as the last
/// component is decided. Extensions come out in no particular order; collect
/// and [`canonicalize`](crate::canonicalize) for canonical output.
pub struct Incremental<'a> {
    sf: &'a Setaf,
    sigma: Semantics,
    dec: SccDecomposition,
    stack: Vec<Frame>,
    empty_pending: bool,
}

impl<'a> Incremental<'a> {
    /// Fails up front when some SCC is too large for the base case or
    /// `sigma` has no SCC-wise evaluation; after that the walk cannot fail.
    pub fn new(sf: &'a Setaf, sigma: Semantics) -> Result<Self, SemanticsError> {
        if !(sigma == Semantics::Stable || sigma.is_contextual()) {
            return Err(SemanticsError::Unsupported {
                semantics: sigma,
                operation: "SCC-wise enumeration",
            });
        }
        let dec = sccs(sf);
        let largest = dec.largest_component();
        if largest > BRUTE_FORCE_LIMIT {
            return Err(SemanticsError::TooLarge {
                n: largest,
                limit: BRUTE_FORCE_LIMIT,
            });
        }
        let mut walk = Incremental {
            sf,
            sigma,
            dec,
            stack: Vec::new(),
            empty_pending: sf.num_arguments() == 0,
        };
        if !walk.dec.is_empty() {
            let first = walk.expand(0, ArgSet::new());
            walk.stack.push(first);
        }
        Ok(walk)
    }

    fn expand(&self, depth: usize, partial: ArgSet) -> Frame {
        let s = self.dec.component(self.dec.topo_order()[depth]);
        let found = if self.sigma == Semantics::Stable {
            let sub = stable_local(self.sf, s, &partial);
            gf_stable(sub.framework())
                .expect("component fits the size limit")
                .iter()
                .map(|local| sub.lift(local))
                .collect()
        } else {
            let ctx = LocalContext::unrestricted(self.sf);
            let local = build_local(self.sf, s, &partial, &ctx.candidates, &ctx.mitigated);
            gf_evaluate(local.framework(), self.sigma, &local.context)
                .expect("component fits the size limit")
                .iter()
                .map(|found| local.sub.lift(found))
                .collect::<Vec<_>>()
        };
        Frame {
            partial,
            pending: found.into_iter(),
        }
    }
}

impl Iterator for Incremental<'_> {
    type Item = ArgSet;

    fn next(&mut self) -> Option<ArgSet> {
        if self.empty_pending {
            self.empty_pending = false;
            return Some(ArgSet::new());
        }
        loop {
            let top = self.stack.last_mut()?;
            let Some(local) = top.pending.next() else {
                self.stack.pop();
                continue;
            };
            let e = top.partial.union(&local);
            let depth = self.stack.len();
            if depth == self.dec.len() {
                return Some(e);
            }
            let frame = self.expand(depth, e);
            self.stack.push(frame);
        }
    }
}
