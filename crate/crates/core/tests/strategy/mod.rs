#![allow(dead_code)]

use proptest::prelude::*;
use setaf::Setaf;

/// Frameworks with up to `max_n` arguments and at most 12 distinct attacks.
pub fn framework(max_n: usize) -> impl Strategy<Value = Setaf> {
    (1..=max_n).prop_flat_map(|n| {
        let attack = (1u64..(1 << n), 0..n);
        proptest::collection::btree_set(attack, 0..12).prop_map(move |raw| {
            let attacks: Vec<(Vec<u32>, u32)> = raw
                .into_iter()
                .map(|(mask, h)| {
                    let tail = (0..n as u32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                    (tail, h as u32 + 1)
                })
                .collect();
            Setaf::from_raw(n, &attacks).unwrap()
        })
    })
}

/// A framework with a subset of its arguments, given as a bit mask.
pub fn framework_and_set(max_n: usize) -> impl Strategy<Value = (Setaf, u64)> {
    framework(max_n).prop_flat_map(|sf| {
        let n = sf.num_arguments();
        (Just(sf), 0u64..(1 << n))
    })
}
