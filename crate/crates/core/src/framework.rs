//! The SETAF data model and the structural operations every engine builds on:
//! range, defense, the primal graph, projection, restriction, reduct and
//! disjoint union.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use crate::argset::{ArgId, ArgSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameworkError {
    #[error("attack #{index} has an empty tail")]
    EmptyTail { index: usize },
    #[error("argument id {id} is outside 1..={n}")]
    IdOutOfRange { id: u32, n: usize },
    #[error("attack #{index} duplicates an earlier attack")]
    DuplicateAttack { index: usize },
}

/// A collective attack: the arguments in `tail` jointly attack `head`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Attack {
    tail: ArgSet,
    head: ArgId,
}

impl Attack {
    pub fn new(tail: ArgSet, head: ArgId) -> Self {
        Attack { tail, head }
    }

    /// Shorthand for tests and fixtures: `Attack::from_ids([1, 2], 3)`.
    pub fn from_ids<I: IntoIterator<Item = u32>>(tail: I, head: u32) -> Self {
        Attack::new(ArgSet::from_ids(tail), ArgId::new(head))
    }

    pub fn tail(&self) -> &ArgSet {
        &self.tail
    }

    pub fn head(&self) -> ArgId {
        self.head
    }
}

impl fmt::Debug for Attack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

impl fmt::Display for Attack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An argumentation framework with collective attacks over arguments `1..=n`.
///
/// Attacks are stored verbatim in insertion order; subsumed attacks are kept.
/// Equality is structural: same argument count and same attack *set*.
#[derive(Clone)]
pub struct Setaf {
    n: usize,
    attacks: Vec<Attack>,
    // attack indices per head, indexed by ArgId::index()
    attackers: Vec<Vec<usize>>,
}

impl Setaf {
    /// Validates and builds a framework.
    pub fn new(n: usize, attacks: Vec<Attack>) -> Result<Self, FrameworkError> {
        let mut seen = HashSet::with_capacity(attacks.len());
        let mut attackers = vec![Vec::new(); n];
        for (index, att) in attacks.iter().enumerate() {
            if att.tail.is_empty() {
                return Err(FrameworkError::EmptyTail { index });
            }
            let top = att.tail.last().map_or(0, ArgId::get).max(att.head.get());
            if top as usize > n {
                return Err(FrameworkError::IdOutOfRange { id: top, n });
            }
            if !seen.insert(att) {
                return Err(FrameworkError::DuplicateAttack { index });
            }
            attackers[att.head.index()].push(index);
        }
        Ok(Setaf {
            n,
            attacks,
            attackers,
        })
    }

    /// Builds a framework from raw `(tail, head)` id pairs; id `0` is reported
    /// as out of range.
    pub fn from_raw<T: AsRef<[u32]>>(
        n: usize,
        attacks: &[(T, u32)],
    ) -> Result<Self, FrameworkError> {
        let mut built = Vec::with_capacity(attacks.len());
        for (tail, head) in attacks {
            let tail = tail.as_ref();
            if let Some(&id) = tail.iter().chain([head]).find(|&&id| id == 0) {
                return Err(FrameworkError::IdOutOfRange { id, n });
            }
            built.push(Attack::from_ids(tail.iter().copied(), *head));
        }
        Setaf::new(n, built)
    }

    /// A framework without attacks.
    pub fn isolated(n: usize) -> Self {
        Setaf {
            n,
            attacks: Vec::new(),
            attackers: vec![Vec::new(); n],
        }
    }

    pub fn num_arguments(&self) -> usize {
        self.n
    }

    pub fn arguments(&self) -> ArgSet {
        ArgSet::full(self.n)
    }

    pub fn attacks(&self) -> &[Attack] {
        &self.attacks
    }

    pub fn attack_set(&self) -> BTreeSet<Attack> {
        self.attacks.iter().cloned().collect()
    }

    pub fn contains_attack(&self, attack: &Attack) -> bool {
        attack.head.index() < self.n && self.attacks_on(attack.head).any(|a| a == attack)
    }

    /// All attacks whose head is `a`.
    pub fn attacks_on(&self, a: ArgId) -> impl Iterator<Item = &Attack> + '_ {
        self.attackers[a.index()].iter().map(|&i| &self.attacks[i])
    }

    /// Whether `s` attacks `a`, i.e. some attack on `a` has its tail inside `s`.
    pub fn attacks_arg(&self, s: &ArgSet, a: ArgId) -> bool {
        self.attacks_on(a).any(|att| att.tail.is_subset(s))
    }

    /// Whether `s` attacks some member of `targets`.
    pub fn attacks_any(&self, s: &ArgSet, targets: &ArgSet) -> bool {
        targets.iter().any(|a| self.attacks_arg(s, a))
    }

    /// The arguments attacked by `s`.
    pub fn plus(&self, s: &ArgSet) -> ArgSet {
        self.attacks
            .iter()
            .filter(|att| att.tail.is_subset(s))
            .map(|att| att.head)
            .collect()
    }

    /// `s` together with everything it attacks.
    pub fn range(&self, s: &ArgSet) -> ArgSet {
        s.union(&self.plus(s))
    }

    pub fn is_conflict_free(&self, s: &ArgSet) -> bool {
        !self
            .attacks
            .iter()
            .any(|att| s.contains(att.head) && att.tail.is_subset(s))
    }

    /// Whether `s` counter-attacks every attack on `a`.
    pub fn defends(&self, s: &ArgSet, a: ArgId) -> bool {
        let plus = self.plus(s);
        self.attacks_on(a).all(|att| att.tail.intersects(&plus))
    }

    /// The characteristic function: all arguments defended by `s`.
    pub fn characteristic(&self, s: &ArgSet) -> ArgSet {
        let plus = self.plus(s);
        (0..self.n)
            .map(ArgId::from_index)
            .filter(|&a| self.attacks_on(a).all(|att| att.tail.intersects(&plus)))
            .collect()
    }

    /// Arguments that are the head of no attack.
    pub fn unattacked(&self) -> ArgSet {
        (0..self.n)
            .map(ArgId::from_index)
            .filter(|a| self.attackers[a.index()].is_empty())
            .collect()
    }

    /// The primal graph: every attack `(T, h)` split into edges `t -> h`.
    pub fn primal(&self) -> PrimalGraph {
        let mut edges = BTreeSet::new();
        for att in &self.attacks {
            for t in &att.tail {
                edges.insert((t, att.head));
            }
        }
        PrimalGraph { n: self.n, edges }
    }

    /// Projection onto `s`: keep attacks with head in `s` and tail meeting
    /// `s`, cutting tails down to `s`.
    pub fn projection(&self, s: &ArgSet) -> Subframework {
        let domain = s.intersection(&self.arguments());
        let attacks = self.attacks.iter().filter_map(|att| {
            let cut = att.tail.intersection(&domain);
            (domain.contains(att.head) && !cut.is_empty()).then(|| Attack::new(cut, att.head))
        });
        Subframework::build(&domain, attacks)
    }

    /// Projection that only keeps attacks lying entirely inside `s`.
    pub fn skeptical_projection(&self, s: &ArgSet) -> Subframework {
        let domain = s.intersection(&self.arguments());
        let attacks = self
            .attacks
            .iter()
            .filter(|att| domain.contains(att.head) && att.tail.is_subset(&domain))
            .cloned();
        Subframework::build(&domain, attacks)
    }

    /// Restriction to `s` after discarding the rejected arguments `d`: attacks
    /// with a tail member in `d` vanish, the remaining tails are cut to the
    /// surviving arguments.
    pub fn restriction(&self, d: &ArgSet, s: &ArgSet) -> Subframework {
        self.restriction_over(d, s, self.attacks.iter())
    }

    /// [`restriction`](Self::restriction) over `candidates`, which must
    /// include every attack on a surviving argument. `d` only matters on the
    /// tails of those attacks.
    pub(crate) fn restriction_over<'a>(
        &self,
        d: &ArgSet,
        s: &ArgSet,
        candidates: impl Iterator<Item = &'a Attack>,
    ) -> Subframework {
        let domain = s.intersection(&self.arguments()).difference(d);
        let attacks = candidates.filter_map(|att| {
            if !domain.contains(att.head) || att.tail.intersects(d) {
                return None;
            }
            let cut = att.tail.intersection(&domain);
            (!cut.is_empty()).then(|| Attack::new(cut, att.head))
        });
        Subframework::build(&domain, attacks)
    }

    /// The `e`-reduct: what remains after accepting `e` and discarding its
    /// range. Tails are partially evaluated against `e`; attacks whose tail is
    /// hit by `e` disappear. Defined for any `e`, conflict-free or not.
    pub fn reduct(&self, e: &ArgSet) -> Subframework {
        let plus = self.plus(e);
        let domain = self.arguments().difference(&e.union(&plus));
        let attacks = self
            .attacks
            .iter()
            .filter(|att| {
                domain.contains(att.head) && !att.tail.intersects(&plus) && !att.tail.is_subset(e)
            })
            .map(|att| Attack::new(att.tail.difference(e), att.head));
        Subframework::build(&domain, attacks)
    }

    /// Disjoint union; the arguments of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Setaf) -> Setaf {
        let shift = self.n as u32;
        let mut attacks = self.attacks.clone();
        attacks.extend(other.attacks.iter().map(|att| {
            Attack::new(
                att.tail.iter().map(|t| ArgId::new(t.get() + shift)).collect(),
                ArgId::new(att.head.get() + shift),
            )
        }));
        Setaf::new(self.n + other.n, attacks).expect("disjoint union of valid frameworks is valid")
    }
}

impl PartialEq for Setaf {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.attacks.len() == other.attacks.len()
            && self.attack_set() == other.attack_set()
    }
}

impl Eq for Setaf {}

impl fmt::Debug for Setaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Setaf")
            .field("n", &self.n)
            .field("attacks", &self.attacks)
            .finish()
    }
}

/// Directed graph on `1..=n` without multi-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimalGraph {
    n: usize,
    edges: BTreeSet<(ArgId, ArgId)>,
}

impl PrimalGraph {
    pub fn num_nodes(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(ArgId, ArgId)> {
        &self.edges
    }

    pub fn successors(&self) -> Vec<Vec<ArgId>> {
        let mut succ = vec![Vec::new(); self.n];
        for &(from, to) in &self.edges {
            succ[from.index()].push(to);
        }
        succ
    }

    /// Whether no edge enters `s` from outside.
    pub fn is_closed_under_predecessors(&self, s: &ArgSet) -> bool {
        !self
            .edges
            .iter()
            .any(|&(from, to)| s.contains(to) && !s.contains(from))
    }
}

/// A framework derived from a parent, re-indexed to dense ids `1..=k`, with
/// the mapping back to the parent's ids.
#[derive(Clone, Debug)]
pub struct Subframework {
    framework: Setaf,
    // local index -> parent id
    ids: Vec<ArgId>,
}

impl Subframework {
    /// Builds from a parent-id domain and parent-id attacks inside it.
    /// Coinciding attacks are merged.
    fn build(domain: &ArgSet, attacks: impl Iterator<Item = Attack>) -> Self {
        let ids: Vec<ArgId> = domain.iter().collect();
        let local_of = |a: ArgId| ArgId::from_index(ids.binary_search(&a).expect("id in domain"));
        let mut seen = HashSet::new();
        let mut local = Vec::new();
        for att in attacks {
            if seen.insert(att.clone()) {
                local.push(Attack::new(
                    att.tail.iter().map(local_of).collect(),
                    local_of(att.head),
                ));
            }
        }
        let framework = Setaf::new(ids.len(), local).expect("derived framework is valid");
        Subframework { framework, ids }
    }

    /// Treats a whole framework as its own subframework.
    pub fn identity(sf: &Setaf) -> Self {
        Subframework {
            framework: sf.clone(),
            ids: (0..sf.n).map(ArgId::from_index).collect(),
        }
    }

    pub fn framework(&self) -> &Setaf {
        &self.framework
    }

    pub fn into_framework(self) -> Setaf {
        self.framework
    }

    /// The parent ids of the arguments, in local order.
    pub fn ids(&self) -> &[ArgId] {
        &self.ids
    }

    /// The argument set, in parent ids.
    pub fn domain(&self) -> ArgSet {
        self.ids.iter().copied().collect()
    }

    pub fn parent_id(&self, local: ArgId) -> ArgId {
        self.ids[local.index()]
    }

    /// The local id of a parent argument, if it survived.
    pub fn local_id(&self, parent: ArgId) -> Option<ArgId> {
        self.ids
            .binary_search(&parent)
            .ok()
            .map(ArgId::from_index)
    }

    /// Maps a local set to parent ids.
    pub fn lift(&self, s: &ArgSet) -> ArgSet {
        s.iter().map(|a| self.parent_id(a)).collect()
    }

    /// Maps the members of a parent set that survived into local ids.
    pub fn lower(&self, s: &ArgSet) -> ArgSet {
        s.iter().filter_map(|a| self.local_id(a)).collect()
    }

    pub fn lift_attack(&self, att: &Attack) -> Attack {
        Attack::new(self.lift(&att.tail), self.parent_id(att.head))
    }

    /// Maps a parent attack into local ids, if all its arguments survived.
    pub fn lower_attack(&self, att: &Attack) -> Option<Attack> {
        let head = self.local_id(att.head)?;
        let tail = self.lower(&att.tail);
        (tail.len() == att.tail.len()).then(|| Attack::new(tail, head))
    }

    /// The attack relation expressed in parent ids.
    pub fn lifted_attacks(&self) -> BTreeSet<Attack> {
        self.framework
            .attacks
            .iter()
            .map(|att| self.lift_attack(att))
            .collect()
    }

    /// Structural equality modulo the id mappings.
    pub fn same_as(&self, other: &Subframework) -> bool {
        self.ids == other.ids && self.lifted_attacks() == other.lifted_attacks()
    }

    /// Re-expresses `inner`, a subframework of `self.framework()`, in the ids
    /// of `self`'s parent.
    pub fn compose(&self, inner: &Subframework) -> Subframework {
        Subframework {
            framework: inner.framework.clone(),
            ids: inner.ids.iter().map(|&a| self.parent_id(a)).collect(),
        }
    }
}
