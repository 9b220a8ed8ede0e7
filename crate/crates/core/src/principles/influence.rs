use crate::argset::ArgSet;
use crate::framework::Setaf;
use crate::scc::sccs;

/// Every uninfluenced set of `sf`: the unions of SCCs that are closed under
/// taking condensation-DAG predecessors. Listed in canonical order.
pub fn uninfluenced_sets(sf: &Setaf) -> Vec<ArgSet> {
    let dec = sccs(sf);
    let k = dec.len();
    let preds: Vec<Vec<usize>> = (0..k).map(|c| dec.predecessors(c).collect()).collect();
    let mut found = Vec::new();
    // a component may join only after all of its predecessors did
    let order = dec.topo_order().to_vec();
    let mut chosen = vec![false; k];
    fn walk(
        depth: usize,
        order: &[usize],
        preds: &[Vec<usize>],
        chosen: &mut Vec<bool>,
        dec: &crate::scc::SccDecomposition,
        found: &mut Vec<ArgSet>,
    ) {
        if depth == order.len() {
            let mut s = ArgSet::new();
            for (c, &on) in chosen.iter().enumerate() {
                if on {
                    s.union_with(dec.component(c));
                }
            }
            found.push(s);
            return;
        }
        let c = order[depth];
        walk(depth + 1, order, preds, chosen, dec, found);
        if preds[c].iter().all(|&p| chosen[p]) {
            chosen[c] = true;
            walk(depth + 1, order, preds, chosen, dec, found);
            chosen[c] = false;
        }
    }
    walk(0, &order, &preds, &mut chosen, &dec, &mut found);
    crate::argset::canonicalize(found)
}

/// Whether no argument outside `s` reaches `s` in the primal graph.
pub fn is_uninfluenced(sf: &Setaf, s: &ArgSet) -> bool {
    sf.primal().is_closed_under_predecessors(s)
}

/// Whether no primal edge crosses between `s` and its complement.
pub fn is_isolated(sf: &Setaf, s: &ArgSet) -> bool {
    let rest = sf.arguments().difference(s);
    is_uninfluenced(sf, s) && is_uninfluenced(sf, &rest)
}
