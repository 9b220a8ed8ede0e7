use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::argset::{ArgId, ArgSet};
use crate::framework::Setaf;

/// Strongly connected components of the primal graph, with the condensation
/// DAG and a deterministic topological order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccDecomposition {
    // sorted by smallest member
    components: Vec<ArgSet>,
    component_of: Vec<usize>,
    dag: BTreeSet<(usize, usize)>,
    topo_order: Vec<usize>,
}

/// Decomposes `sf` into SCCs. Components are numbered by their smallest
/// member; the topological order breaks ties the same way.
pub fn sccs(sf: &Setaf) -> SccDecomposition {
    let n = sf.num_arguments();
    let primal = sf.primal();
    let mut graph = DiGraph::<(), ()>::with_capacity(n, primal.edges().len());
    for _ in 0..n {
        graph.add_node(());
    }
    for &(from, to) in primal.edges() {
        graph.add_edge(NodeIndex::new(from.index()), NodeIndex::new(to.index()), ());
    }
    let mut components: Vec<ArgSet> = tarjan_scc(&graph)
        .into_iter()
        .map(|nodes| nodes.into_iter().map(|v| ArgId::from_index(v.index())).collect())
        .collect();
    components.sort_by_key(|c: &ArgSet| c.first());

    let mut component_of = vec![0; n];
    for (i, comp) in components.iter().enumerate() {
        for a in comp {
            component_of[a.index()] = i;
        }
    }
    let dag: BTreeSet<(usize, usize)> = primal
        .edges()
        .iter()
        .map(|&(from, to)| (component_of[from.index()], component_of[to.index()]))
        .filter(|(x, y)| x != y)
        .collect();

    // Kahn's algorithm, smallest component index first
    let mut indegree = vec![0usize; components.len()];
    for &(_, to) in &dag {
        indegree[to] += 1;
    }
    let mut ready: BinaryHeap<Reverse<usize>> = indegree
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 0)
        .map(|(i, _)| Reverse(i))
        .collect();
    let mut topo_order = Vec::with_capacity(components.len());
    while let Some(Reverse(c)) = ready.pop() {
        topo_order.push(c);
        for &(_, to) in dag.range((c, 0)..(c + 1, 0)) {
            indegree[to] -= 1;
            if indegree[to] == 0 {
                ready.push(Reverse(to));
            }
        }
    }
    debug_assert_eq!(topo_order.len(), components.len());

    SccDecomposition {
        components,
        component_of,
        dag,
        topo_order,
    }
}

impl SccDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[ArgSet] {
        &self.components
    }

    pub fn component(&self, index: usize) -> &ArgSet {
        &self.components[index]
    }

    pub fn component_of(&self, a: ArgId) -> usize {
        self.component_of[a.index()]
    }

    /// Edges `(from, to)` between component indices.
    pub fn dag(&self) -> &BTreeSet<(usize, usize)> {
        &self.dag
    }

    pub fn topo_order(&self) -> &[usize] {
        &self.topo_order
    }

    /// Components in topological order.
    pub fn ordered(&self) -> impl Iterator<Item = &ArgSet> + '_ {
        self.topo_order.iter().map(|&i| &self.components[i])
    }

    pub fn predecessors(&self, index: usize) -> impl Iterator<Item = usize> + '_ {
        self.dag
            .iter()
            .filter(move |&&(_, to)| to == index)
            .map(|&(from, _)| from)
    }

    pub fn contains(&self, s: &ArgSet) -> bool {
        s.first()
            .filter(|&a| a.index() < self.component_of.len())
            .is_some_and(|a| &self.components[self.component_of(a)] == s)
    }

    pub fn largest_component(&self) -> usize {
        self.components.iter().map(ArgSet::len).max().unwrap_or(0)
    }
}
