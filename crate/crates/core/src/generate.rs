//! Seeded random frameworks and structured benchmark families.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::argset::{ArgId, ArgSet};
use crate::framework::{Attack, Setaf};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("infeasible generator configuration: {0}")]
    InfeasibleConfig(String),
}

/// Distribution of random frameworks.
///
/// The argument count is uniform in `args`. Unless `attacks` fixes it, the
/// attack count is uniform in `1..=min(2n, max_attacks)`. Tail sizes follow a
/// geometric distribution with ratio 1/2 capped at `max_tail`; heads and tail
/// members are uniform. Duplicate attacks are redrawn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub args: RangeInclusive<usize>,
    pub attacks: Option<usize>,
    pub max_attacks: usize,
    pub max_tail: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            args: 2..=8,
            attacks: None,
            max_attacks: 14,
            max_tail: 3,
        }
    }
}

impl GeneratorConfig {
    /// Exactly `n` arguments and `m` attacks.
    pub fn fixed(n: usize, m: usize) -> Self {
        GeneratorConfig {
            args: n..=n,
            attacks: Some(m),
            max_attacks: m,
            ..GeneratorConfig::default()
        }
    }

    fn validate(&self) -> Result<(), GenerateError> {
        let infeasible = |why: String| Err(GenerateError::InfeasibleConfig(why));
        if self.args.is_empty() {
            return infeasible(format!("empty argument range {:?}", self.args));
        }
        if self.max_tail == 0 {
            return infeasible("tails need at least one argument".into());
        }
        if let Some(m) = self.attacks {
            let n = *self.args.start();
            let available = distinct_attacks(n, self.max_tail);
            if m as u128 > available {
                return infeasible(format!(
                    "{m} attacks requested but only {available} distinct attacks exist over {n} arguments"
                ));
            }
            if n == 0 && m > 0 {
                return infeasible("attacks need arguments".into());
            }
        }
        Ok(())
    }
}

/// Number of attacks over `n` arguments with tails of at most `max_tail`.
fn distinct_attacks(n: usize, max_tail: usize) -> u128 {
    let mut tails = 0u128;
    let mut binom = 1u128;
    for k in 1..=max_tail.min(n) {
        binom = binom * (n - k + 1) as u128 / k as u128;
        tails += binom;
    }
    tails * n as u128
}

/// A random framework; the same configuration and seed always give the
/// same framework.
pub fn generate(config: &GeneratorConfig, seed: u64) -> Result<Setaf, GenerateError> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(config.args.clone());
    if n == 0 {
        return Ok(Setaf::isolated(0));
    }
    let m = match config.attacks {
        Some(m) => m,
        None => {
            let cap = (2 * n).min(config.max_attacks).max(1);
            rng.gen_range(1..=cap)
        }
    };
    let cap_tail = config.max_tail.min(n);
    let mut seen = HashSet::new();
    let mut attacks = Vec::with_capacity(m);
    while attacks.len() < m {
        let mut size = 1;
        while size < cap_tail && rng.gen_bool(0.5) {
            size += 1;
        }
        let tail: ArgSet = sample(&mut rng, n, size)
            .into_iter()
            .map(ArgId::from_index)
            .collect();
        let head = ArgId::from_index(rng.gen_range(0..n));
        let attack = Attack::new(tail, head);
        if seen.insert(attack.clone()) {
            attacks.push(attack);
        }
    }
    Ok(Setaf::new(n, attacks).expect("generated attacks are valid"))
}

/// `c` blocks of `k` arguments. Each block is a directed cycle; block `i`
/// attacks the first argument of block `i + 1` collectively with its first
/// two arguments (with its only argument when `k = 1`).
pub fn scc_chain(c: usize, k: usize) -> Result<Setaf, GenerateError> {
    if k == 0 && c > 0 {
        return Err(GenerateError::InfeasibleConfig("blocks need at least one argument".into()));
    }
    let id = |block: usize, pos: usize| (block * k + pos + 1) as u32;
    let mut raw: Vec<(Vec<u32>, u32)> = Vec::new();
    for block in 0..c {
        if k > 1 {
            for pos in 0..k {
                raw.push((vec![id(block, pos)], id(block, (pos + 1) % k)));
            }
        }
        if block + 1 < c {
            let tail = (0..k.min(2)).map(|pos| id(block, pos)).collect();
            raw.push((tail, id(block + 1, 0)));
        }
    }
    Ok(Setaf::from_raw(c * k, &raw).expect("chain attacks are valid"))
}
