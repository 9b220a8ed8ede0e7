//! Frameworks of at most 64 arguments compiled to `u64` bitmasks. Bit `i`
//! stands for argument `i + 1`.

use std::collections::{BTreeSet, HashSet};

use crate::argset::ArgSet;
use crate::framework::{Attack, Setaf};

#[derive(Clone, Copy)]
struct MaskAttack {
    tail: u64,
    head: u64,
    mitigated: bool,
}

pub(crate) struct Compiled {
    n: usize,
    full: u64,
    attacks: Vec<MaskAttack>,
    // attack indices per head position
    on: Vec<Vec<usize>>,
    // attack indices whose tail or head contains the position
    touching: Vec<Vec<usize>>,
}

pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

pub(crate) fn mask_of(s: &ArgSet) -> u64 {
    s.to_mask().expect("argument set fits into 64 bits")
}

impl Compiled {
    pub(crate) fn new(sf: &Setaf) -> Self {
        Compiled::with_mitigated(sf, &BTreeSet::new())
    }

    pub(crate) fn with_mitigated(sf: &Setaf, mitigated: &BTreeSet<Attack>) -> Self {
        let n = sf.num_arguments();
        assert!(n <= 64, "compiled frameworks hold at most 64 arguments");
        let mut on = vec![Vec::new(); n];
        let mut touching = vec![Vec::new(); n];
        let attacks: Vec<MaskAttack> = sf
            .attacks()
            .iter()
            .map(|att| MaskAttack {
                tail: mask_of(att.tail()),
                head: bit(att.head().index()),
                mitigated: mitigated.contains(att),
            })
            .collect();
        for (i, att) in attacks.iter().enumerate() {
            on[att.head.trailing_zeros() as usize].push(i);
            let scope = att.tail | att.head;
            for (pos, list) in touching.iter_mut().enumerate() {
                if scope & bit(pos) != 0 {
                    list.push(i);
                }
            }
        }
        Compiled {
            n,
            full: if n == 64 { u64::MAX } else { bit(n) - 1 },
            attacks,
            on,
            touching,
        }
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn full(&self) -> u64 {
        self.full
    }

    /// Arguments attacked by `s`, over all attacks.
    pub(crate) fn plus(&self, s: u64) -> u64 {
        self.attacks
            .iter()
            .filter(|a| a.tail & !s == 0)
            .fold(0, |acc, a| acc | a.head)
    }

    /// Arguments attacked by `s` through non-mitigated attacks.
    pub(crate) fn plus_active(&self, s: u64) -> u64 {
        self.attacks
            .iter()
            .filter(|a| !a.mitigated && a.tail & !s == 0)
            .fold(0, |acc, a| acc | a.head)
    }

    pub(crate) fn is_cf(&self, s: u64) -> bool {
        self.attacks.iter().all(|a| (a.tail | a.head) & !s != 0)
    }

    /// Whether adding position `x` to the conflict-free set `s` keeps it
    /// conflict-free.
    fn extends_cf(&self, s: u64, x: usize) -> bool {
        let t = s | bit(x);
        self.touching[x]
            .iter()
            .all(|&i| (self.attacks[i].tail | self.attacks[i].head) & !t != 0)
    }

    /// Arguments all of whose attacks are countered by a non-mitigated attack
    /// from `e`. With no mitigated attacks this is the characteristic function.
    pub(crate) fn acceptable(&self, e: u64) -> u64 {
        let defeated = self.plus_active(e);
        (0..self.n)
            .filter(|&p| {
                self.on[p]
                    .iter()
                    .all(|&i| self.attacks[i].tail & defeated != 0)
            })
            .fold(0, |acc, p| acc | bit(p))
    }

    pub(crate) fn is_admissible_in(&self, e: u64, candidates: u64) -> bool {
        e & !candidates == 0 && self.is_cf(e) && e & !self.acceptable(e) == 0
    }

    pub(crate) fn is_complete_in(&self, e: u64, candidates: u64) -> bool {
        self.is_admissible_in(e, candidates) && self.acceptable(e) & candidates & !e == 0
    }

    /// Least fixpoint of `e -> acceptable(e) & candidates`.
    pub(crate) fn least_fixpoint(&self, candidates: u64) -> u64 {
        let mut e = 0;
        loop {
            let next = self.acceptable(e) & candidates;
            if next == e {
                return e;
            }
            e = next;
        }
    }

    /// All conflict-free subsets of `candidates`, by depth-first extension.
    pub(crate) fn cf_family(&self, candidates: u64) -> Vec<u64> {
        let positions: Vec<usize> = (0..self.n).filter(|&p| candidates & bit(p) != 0).collect();
        let mut out = Vec::new();
        self.cf_rec(&positions, 0, 0, &mut out);
        out
    }

    fn cf_rec(&self, positions: &[usize], from: usize, s: u64, out: &mut Vec<u64>) {
        out.push(s);
        for k in from..positions.len() {
            let x = positions[k];
            if self.extends_cf(s, x) {
                self.cf_rec(positions, k + 1, s | bit(x), out);
            }
        }
    }

    pub(crate) fn range(&self, s: u64) -> u64 {
        s | self.plus(s)
    }
}

/// The `⊆`-maximal members of `family`.
pub(crate) fn maximal(family: &[u64]) -> Vec<u64> {
    let mut sorted: Vec<u64> = family.to_vec();
    sorted.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    let mut kept: Vec<u64> = Vec::new();
    for s in sorted {
        if !kept.iter().any(|&k| k != s && s & !k == 0) && !kept.contains(&s) {
            kept.push(s);
        }
    }
    kept
}

/// Members of `family` whose range is `⊆`-maximal among the family's ranges.
pub(crate) fn range_maximal(cm: &Compiled, family: &[u64]) -> Vec<u64> {
    let ranges: Vec<u64> = family.iter().map(|&s| cm.range(s)).collect();
    let distinct: Vec<u64> = ranges
        .iter()
        .copied()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    let best: HashSet<u64> = maximal(&distinct).into_iter().collect();
    family
        .iter()
        .zip(&ranges)
        .filter(|(_, r)| best.contains(r))
        .map(|(&s, _)| s)
        .collect()
}
