//! Corpus, oracles and criterion checks shared by the integration tests and
//! the acceptance target.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use setaf::generate::{generate, GeneratorConfig};
use setaf::io::{parse, Instance};
use setaf::principles::{attachment_library, check_instance, Verdict, is_isolated, uninfluenced_sets, PrincipleId};
use setaf::scc::{gf_evaluate, gf_stable, partition_dpu, sccs, local_framework, is_gf_member, Inheritance};
use setaf::semantics::{
    characteristic_cm, check_alt_characterization, enumerate, enumerate_cm, fixpoint_f, is_extension,
};
use setaf::task::{extensions_with, Engine};
use setaf::{canonicalize, ArgId, ArgSet, Attack, LocalContext, Semantics, Setaf};

pub const RANDOM_INSTANCES: u64 = 500;
pub const CONTEXT_SAMPLES: usize = 200;

pub struct Case {
    pub name: String,
    pub sf: Setaf,
}

/// Failure messages of one check. Only the first few are kept.
#[derive(Default)]
pub struct Failures {
    pub count: usize,
    pub messages: Vec<String>,
}

impl Failures {
    pub fn push(&mut self, message: impl Into<String>) {
        self.count += 1;
        if self.messages.len() < 10 {
            self.messages.push(message.into());
        }
    }

    pub fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        if !ok {
            self.push(message());
        }
    }

    pub fn is_ok(&self) -> bool {
        self.count == 0
    }

    pub fn assert_ok(&self, what: &str) {
        assert!(
            self.is_ok(),
            "{what}: {} failure(s)\n{}",
            self.count,
            self.messages.join("\n")
        );
    }
}

// works for this crate and for crates that include this module by path
pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures")
}

pub fn instance(rel: &str) -> Instance {
    let path = fixtures_dir().join(rel);
    let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn fixture(rel: &str) -> Setaf {
    instance(rel).framework
}

/// Every `.setaf` file below the fixture directory, sorted.
pub fn fixture_files() -> Vec<PathBuf> {
    fn walk(dir: &Path, out: &mut Vec<PathBuf>) {
        for entry in fs::read_dir(dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                walk(&path, out);
            } else if path.extension().is_some_and(|x| x == "setaf") {
                out.push(path);
            }
        }
    }
    let mut out = Vec::new();
    walk(&fixtures_dir(), &mut out);
    out.sort();
    out
}

/// The seeded random frameworks followed by every fixture.
pub fn corpus() -> Vec<Case> {
    let config = GeneratorConfig::default();
    let mut cases: Vec<Case> = (0..RANDOM_INSTANCES)
        .map(|seed| Case {
            name: format!("seed {seed}"),
            sf: generate(&config, seed).unwrap(),
        })
        .collect();
    let root = fixtures_dir();
    for path in fixture_files() {
        let rel = path.strip_prefix(&root).unwrap().to_string_lossy().into_owned();
        cases.push(Case {
            sf: fixture(&rel),
            name: rel,
        });
    }
    cases
}

/// Ids of the named arguments of a fixture.
pub fn named(inst: &Instance, names: &[&str]) -> ArgSet {
    names
        .iter()
        .map(|n| {
            *inst
                .names
                .iter()
                .find(|(_, v)| v.as_str() == *n)
                .unwrap_or_else(|| panic!("no argument named {n}"))
                .0
        })
        .collect()
}

fn attack(inst: &Instance, tail: &[&str], head: &str) -> Attack {
    Attack::new(named(inst, tail), named(inst, &[head]).first().unwrap())
}

fn sets(inst: &Instance, family: &[&[&str]]) -> Vec<ArgSet> {
    canonicalize(family.iter().map(|f| named(inst, f)).collect())
}

fn subsets(s: &ArgSet) -> Vec<ArgSet> {
    let items = s.to_vec();
    (0u64..1 << items.len())
        .map(|m| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, &a)| ArgId::new(a))
                .collect()
        })
        .collect()
}

fn shift(s: &ArgSet, by: usize) -> ArgSet {
    s.iter().map(|a| ArgId::new(a.get() + by as u32)).collect()
}

fn restrict_family(family: &[ArgSet], to: &ArgSet) -> BTreeSet<ArgSet> {
    family.iter().map(|e| e.intersection(to)).collect()
}

// ---------------------------------------------------------------------------
// Criterion 1: worked examples

pub fn worked_examples() -> Vec<(&'static str, Failures)> {
    let mut out = Vec::new();
    let run = instance("running.setaf");
    let sf = &run.framework;

    let mut f = Failures::default();
    let r = sf.reduct(&named(&run, &["a", "f"]));
    f.check(r.domain() == named(&run, &["c", "d", "e", "h"]), || {
        format!("reduct arguments {}", r.domain())
    });
    let expected: BTreeSet<Attack> = [
        attack(&run, &["d"], "e"),
        attack(&run, &["e"], "d"),
        attack(&run, &["d"], "h"),
    ]
    .into();
    f.check(r.lifted_attacks() == expected, || {
        format!("reduct attacks {:?}", r.lifted_attacks())
    });
    out.push(("reduct of the running example w.r.t. {a,f}", f));

    let mut f = Failures::default();
    let dec = sccs(sf);
    let expected = sets(&run, &[&["a"], &["b", "d", "e"], &["c"], &["f", "g", "h"]]);
    f.check(dec.components() == expected.as_slice(), || {
        format!("components {:?}", dec.components())
    });
    out.push(("SCCs of the running example", f));

    let mut f = Failures::default();
    let bde = named(&run, &["b", "d", "e"]);
    let fgh = named(&run, &["f", "g", "h"]);
    let empty = ArgSet::new();
    let p = partition_dpu(sf, &bde, &empty).unwrap();
    f.check(
        p.d.is_empty() && p.p == named(&run, &["b"]) && p.u == named(&run, &["d", "e"]),
        || format!("D/P/U of {{b,d,e}}: {} {} {}", p.d, p.p, p.u),
    );
    let local = local_framework(sf, &bde, &empty).unwrap();
    let expected: BTreeSet<Attack> = [
        attack(&run, &["b"], "d"),
        attack(&run, &["d"], "b"),
        attack(&run, &["d"], "e"),
        attack(&run, &["e"], "d"),
    ]
    .into();
    f.check(local.sub.domain() == bde && local.sub.lifted_attacks() == expected, || {
        format!("local framework of {{b,d,e}}: {:?}", local.sub.lifted_attacks())
    });
    let p = partition_dpu(sf, &fgh, &empty).unwrap();
    f.check(p.d.is_empty() && p.p.is_empty() && p.u == fgh, || {
        format!("D/P/U of {{f,g,h}}: {} {} {}", p.d, p.p, p.u)
    });
    let local = local_framework(sf, &fgh, &empty).unwrap();
    let expected: BTreeSet<Attack> = [
        attack(&run, &["f"], "h"),
        attack(&run, &["g"], "h"),
        attack(&run, &["h"], "g"),
        attack(&run, &["f"], "g"),
        attack(&run, &["g"], "f"),
    ]
    .into();
    f.check(local.sub.lifted_attacks() == expected, || {
        format!("local framework of {{f,g,h}}: {:?}", local.sub.lifted_attacks())
    });
    let mitigated: BTreeSet<Attack> = local
        .context
        .mitigated
        .iter()
        .map(|a| local.sub.lift_attack(a))
        .collect();
    f.check(mitigated == [attack(&run, &["f"], "h")].into(), || {
        format!("mitigated attacks {mitigated:?}")
    });
    out.push(("partition, local frameworks and mitigated attacks under E = {}", f));

    let mut f = Failures::default();
    let inc = instance("incremental.setaf");
    let found = gf_stable(&inc.framework).unwrap();
    let expected = sets(&inc, &[&["a", "d", "f"], &["a", "e", "f"]]);
    f.check(found == expected, || format!("gf_stable gave {found:?}"));
    out.push(("stable extensions assembled SCC by SCC", f));

    let mut f = Failures::default();
    let e = named(&run, &["a", "c", "d", "f"]);
    f.check(is_extension(sf, Semantics::Stable, &e).unwrap(), || {
        format!("{e} is not stable")
    });
    f.check(enumerate(sf, Semantics::Stable).unwrap().contains(&e), || {
        format!("{e} not enumerated as stable")
    });
    out.push(("{a,c,d,f} is stable in the running example", f));

    let mut f = Failures::default();
    let dir = instance("directionality.setaf");
    let grd = enumerate(&dir.framework, Semantics::Grounded).unwrap();
    f.check(grd == vec![named(&dir, &["a"])], || format!("grounded {grd:?}"));
    let e = named(&dir, &["a", "c"]);
    f.check(enumerate(&dir.framework, Semantics::Stable).unwrap().contains(&e), || {
        format!("{e} is not stable")
    });
    out.push(("grounded and stable sets of the directionality example", f));

    let mut f = Failures::default();
    let res = instance("restriction.setaf");
    let s = named(&res, &["c", "d", "e"]);
    let r = res.framework.restriction(&named(&res, &["b"]), &s);
    let dc = attack(&res, &["d"], "c");
    f.check(!r.lifted_attacks().contains(&dc), || {
        format!("restriction keeps (d,c): {:?}", r.lifted_attacks())
    });
    f.check(res.framework.projection(&s).lifted_attacks().contains(&dc), || {
        "projection lacks (d,c)".into()
    });
    out.push(("restriction drops the attack (d,c)", f));
    out
}

// ---------------------------------------------------------------------------
// Criterion 2: engines against the brute-force oracle

pub fn oracle_equivalence(corpus: &[Case]) -> (Failures, usize) {
    let mut f = Failures::default();
    let mut comparisons = 0;
    for case in corpus {
        for sigma in Semantics::ALL {
            let reference = enumerate(&case.sf, sigma).unwrap();
            for engine in [Engine::Scc, Engine::Modular, Engine::Incremental] {
                if !engine.supports(sigma) {
                    continue;
                }
                comparisons += 1;
                match extensions_with(engine, &case.sf, sigma) {
                    Ok(found) if found == reference => {}
                    Ok(found) => f.push(format!(
                        "{}: {} {sigma}: {found:?}, expected {reference:?}",
                        case.name,
                        engine.name()
                    )),
                    Err(e) => f.push(format!("{}: {} {sigma}: {e}", case.name, engine.name())),
                }
            }
        }
    }
    (f, comparisons)
}

// ---------------------------------------------------------------------------
// Criterion 3: properties

fn ext(sf: &Setaf, sigma: Semantics) -> Vec<ArgSet> {
    enumerate(sf, sigma).unwrap()
}

fn included(a: &[ArgSet], b: &[ArgSet]) -> bool {
    a.iter().all(|e| b.contains(e))
}

pub fn inclusion_chains(corpus: &[Case]) -> Failures {
    use Semantics::*;
    let mut f = Failures::default();
    for case in corpus {
        let fam = |s| ext(&case.sf, s);
        let chains: [&[Semantics]; 2] = [
            &[Stable, SemiStable, Preferred, Complete, Admissible],
            &[Stable, Stage, Naive, ConflictFree],
        ];
        for chain in chains {
            for w in chain.windows(2) {
                f.check(included(&fam(w[0]), &fam(w[1])), || {
                    format!("{}: {} not within {}", case.name, w[0], w[1])
                });
            }
        }
        f.check(fam(Grounded).len() == 1, || format!("{}: grounded not unique", case.name));
    }
    f
}

/// Disjoint pairs `(E, E')` for the reduct properties: every pair on small
/// frameworks, a seeded sample otherwise.
fn disjoint_pairs(sf: &Setaf, seed: u64) -> Vec<(ArgSet, ArgSet)> {
    let n = sf.num_arguments();
    if n <= 5 {
        let mut out = Vec::new();
        for e in subsets(&sf.arguments()) {
            for e2 in subsets(&sf.arguments().difference(&e)) {
                out.push((e.clone(), e2));
            }
        }
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..200)
        .map(|_| {
            let (mut e, mut e2) = (ArgSet::new(), ArgSet::new());
            for a in sf.arguments().iter() {
                match rng.gen_range(0..3) {
                    0 => {
                        e.insert(a);
                    }
                    1 => {
                        e2.insert(a);
                    }
                    _ => {}
                }
            }
            (e, e2)
        })
        .collect()
}

fn attacked_in_reduct(sub: &setaf::Subframework, targets: &ArgSet) -> bool {
    sub.lifted_attacks().iter().any(|att| targets.contains(att.head()))
}

pub fn reduct_basics(corpus: &[Case]) -> Failures {
    let mut f = Failures::default();
    for (i, case) in corpus.iter().enumerate() {
        let sf = &case.sf;
        for (e, e2) in disjoint_pairs(sf, i as u64) {
            let r = sf.reduct(&e);
            let both = e.union(&e2);
            let tag = || format!("{}: E={e} E'={e2}", case.name);
            let unattacked = !sf.attacks().iter().any(|att| e2.contains(att.head()));
            if unattacked {
                f.check(!attacked_in_reduct(&r, &e2), || format!("unattacked set attacked in the reduct, {}", tag()));
            }
            if sf.is_conflict_free(&e2) && !sf.attacks_any(&e, &e2) {
                let defends = e2.iter().all(|a| sf.defends(&e, a));
                f.check(defends == !attacked_in_reduct(&r, &e2), || format!("defense disagrees with the reduct, {}", tag()));
            }
            if sf.is_conflict_free(&e)
                && !sf.attacks_any(&both, &e)
                && e2.is_subset(&r.domain())
                && r.framework().is_conflict_free(&r.lower(&e2))
            {
                f.check(sf.is_conflict_free(&both), || format!("conflict-freeness does not lift, {}", tag()));
            }
            if sf.is_conflict_free(&both) {
                let local = r.lower(&e2);
                for att in r.framework().attacks() {
                    if att.tail().is_subset(&local) {
                        let a = r.parent_id(att.head());
                        f.check(sf.attacks_arg(&both, a), || format!("reduct attack on {a} does not lift, {}", tag()));
                    }
                }
                let nested = r.compose(&r.framework().reduct(&r.lower(&e2)));
                f.check(sf.reduct(&both).same_as(&nested), || format!("reducts do not compose, {}", tag()));
            }
        }
    }
    f
}

pub fn restriction_reduct_identity(corpus: &[Case]) -> Failures {
    let mut f = Failures::default();
    for (i, case) in corpus.iter().enumerate() {
        let sf = &case.sf;
        let mut candidates: Vec<ArgSet> = sccs(sf).components().to_vec();
        candidates.extend(disjoint_pairs(sf, 1000 + i as u64).into_iter().take(30).map(|(s, _)| s));
        for s in candidates {
            for (e, _) in disjoint_pairs(sf, 2000 + i as u64).into_iter().take(30) {
                let outside = e.difference(&s);
                let left = sf.restriction(&sf.plus(&outside), &s);
                let r = sf.reduct(&outside);
                let right = r.compose(&r.framework().projection(&r.lower(&s)));
                f.check(left.same_as(&right), || {
                    format!("{}: S={s} E={e}: {:?} vs {:?}", case.name, left.lifted_attacks(), right.lifted_attacks())
                });
            }
        }
    }
    f
}

pub fn modularization_both_ways(corpus: &[Case]) -> Failures {
    let mut f = Failures::default();
    for case in corpus {
        let sf = &case.sf;
        for sigma in [Semantics::Admissible, Semantics::Complete] {
            let family = ext(sf, sigma);
            for e in &family {
                let r = sf.reduct(e);
                for local in ext(r.framework(), sigma) {
                    let e2 = r.lift(&local);
                    f.check(family.contains(&e.union(&e2)), || {
                        format!("{}: {sigma}: {e} then {e2} not an extension", case.name)
                    });
                }
                for big in &family {
                    if !e.is_subset(big) {
                        continue;
                    }
                    let e2 = big.difference(e);
                    let local = r.lower(&e2);
                    let ok = r.lift(&local) == e2 && is_extension(r.framework(), sigma, &local).unwrap();
                    f.check(ok, || {
                        format!("{}: {sigma}: {big} minus {e} not an extension of the reduct", case.name)
                    });
                }
            }
        }
    }
    f
}

pub fn reduct_characterizations(corpus: &[Case]) -> Failures {
    use Semantics::*;
    let mut f = Failures::default();
    for case in corpus {
        let sf = &case.sf;
        let cf = ext(sf, ConflictFree);
        for sigma in [Stable, Admissible, Preferred, Complete, SemiStable] {
            let family = ext(sf, sigma);
            for e in &cf {
                let alt = check_alt_characterization(sf, sigma, e).unwrap();
                f.check(alt == family.contains(e), || {
                    format!("{}: {sigma}: {e} characterization says {alt}", case.name)
                });
            }
        }
    }
    f
}

pub fn stable_has_no_provisional(corpus: &[Case]) -> Failures {
    let mut f = Failures::default();
    for case in corpus {
        let dec = sccs(&case.sf);
        for e in ext(&case.sf, Semantics::Stable) {
            for s in dec.components() {
                let p = partition_dpu(&case.sf, s, &e).unwrap();
                f.check(p.p.is_empty(), || format!("{}: E={e} S={s} P={}", case.name, p.p));
            }
        }
    }
    f
}

/// Seeded `(framework, C, M)` triples drawn from the corpus.
pub fn random_contexts(corpus: &[Case], count: usize, seed: u64) -> Vec<(usize, LocalContext)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let i = rng.gen_range(0..corpus.len());
            let sf = &corpus[i].sf;
            let candidates = sf.arguments().iter().filter(|_| rng.gen_bool(0.7)).collect();
            let mitigated = sf.attacks().iter().filter(|_| rng.gen_bool(0.3)).cloned().collect();
            (i, LocalContext::new(candidates, mitigated))
        })
        .collect()
}

pub fn fixpoint_structure(corpus: &[Case]) -> Failures {
    let mut f = Failures::default();
    for (i, ctx) in random_contexts(corpus, CONTEXT_SAMPLES, 7) {
        let case = &corpus[i];
        let sf = &case.sf;
        let all = subsets(&ctx.candidates);
        let image: Vec<ArgSet> = all.iter().map(|x| characteristic_cm(sf, &ctx, x)).collect();
        for (x, fx) in all.iter().zip(&image) {
            for (y, fy) in all.iter().zip(&image) {
                if x.is_subset(y) {
                    f.check(fx.is_subset(fy), || {
                        format!("{}: F not monotone on {x} within {y}", case.name)
                    });
                }
            }
        }
        let com = enumerate_cm(sf, Semantics::Complete, &ctx).unwrap();
        let grd = fixpoint_f(sf, &ctx);
        f.check(com.contains(&grd) && com.iter().all(|c| grd.is_subset(c)), || {
            format!("{}: {grd} is not the least complete set among {com:?}", case.name)
        });
        f.check(
            enumerate_cm(sf, Semantics::Grounded, &ctx).unwrap() == vec![grd.clone()],
            || format!("{}: grounded differs from the least fixpoint", case.name),
        );
        let maximal = canonicalize(
            com.iter()
                .filter(|c| !com.iter().any(|d| c.is_proper_subset(d)))
                .cloned()
                .collect(),
        );
        let pref = enumerate_cm(sf, Semantics::Preferred, &ctx).unwrap();
        f.check(pref == maximal, || {
            format!("{}: preferred {pref:?}, maximal complete {maximal:?}", case.name)
        });
    }
    f
}

pub fn dpu_partitions(corpus: &[Case]) -> Failures {
    let mut f = Failures::default();
    for (i, case) in corpus.iter().enumerate() {
        let sf = &case.sf;
        for (e, _) in disjoint_pairs(sf, 3000 + i as u64).into_iter().take(20) {
            for s in sccs(sf).components() {
                let p = partition_dpu(sf, s, &e).unwrap();
                let disjoint = p.d.is_disjoint(&p.p) && p.d.is_disjoint(&p.u) && p.p.is_disjoint(&p.u);
                f.check(disjoint && p.d.union(&p.up()) == *s, || {
                    format!("{}: E={e} S={s}: {} {} {}", case.name, p.d, p.p, p.u)
                });
            }
        }
    }
    f
}

pub fn scc_recursive_agreement(corpus: &[Case]) -> Failures {
    let mut f = Failures::default();
    for case in corpus {
        let sf = &case.sf;
        let ctx = LocalContext::unrestricted(sf);
        for sigma in [Semantics::Stable, Semantics::Admissible, Semantics::Complete, Semantics::Grounded, Semantics::Preferred] {
            let reference = ext(sf, sigma);
            if sigma != Semantics::Stable {
                f.check(gf_evaluate(sf, sigma, &ctx).unwrap() == reference, || {
                    format!("{}: gf_evaluate {sigma}", case.name)
                });
            }
            if sf.num_arguments() <= 6 {
                for e in subsets(&sf.arguments()) {
                    let member = is_gf_member(sf, sigma, &ctx, &e, Inheritance::Propagate).unwrap();
                    f.check(member == reference.contains(&e), || {
                        format!("{}: {sigma}: membership of {e} is {member}", case.name)
                    });
                }
            }
        }
    }
    f
}

pub fn uninfluenced_structure(corpus: &[Case]) -> Failures {
    let mut f = Failures::default();
    for case in corpus {
        let sf = &case.sf;
        let family = uninfluenced_sets(sf);
        for a in &family {
            for b in &family {
                f.check(family.contains(&a.union(b)) && family.contains(&a.intersection(b)), || {
                    format!("{}: {a} and {b} not closed", case.name)
                });
            }
            let p = sf.projection(a);
            f.check(p.same_as(&sf.skeptical_projection(a)), || {
                format!("{}: projections differ on {a}", case.name)
            });
            f.check(p.same_as(&sf.restriction(&ArgSet::new(), a)), || {
                format!("{}: restriction differs on {a}", case.name)
            });
        }
    }
    f
}

pub fn property_checks(corpus: &[Case]) -> Vec<(&'static str, Failures)> {
    vec![
        ("inclusion chains", inclusion_chains(corpus)),
        ("basic reduct properties", reduct_basics(corpus)),
        ("restriction equals projection of the reduct", restriction_reduct_identity(corpus)),
        ("modularization, both directions, AD and CO", modularization_both_ways(corpus)),
        ("reduct characterizations of ST/AD/PR/CO/SM", reduct_characterizations(corpus)),
        ("no provisionally defeated arguments under stable", stable_has_no_provisional(corpus)),
        ("relative characteristic function on random (C,M)", fixpoint_structure(corpus)),
    ]
}

// ---------------------------------------------------------------------------
// Criterion 4: principle matrix

/// Cells of the principle table where the principle fails.
pub fn expected_failures(p: PrincipleId) -> &'static [Semantics] {
    use PrincipleId::*;
    use Semantics::*;
    match p {
        ConflictFreeness => &[],
        Defense | Admissibility | Modularization => &[Naive, Stage],
        Reinstatement => &[Admissible, Naive, Stage],
        CFReinstatement => &[Admissible],
        Naivety => &[Grounded, Admissible, Complete, Preferred, SemiStable],
        IMaximality => &[Admissible, Complete],
        AllowingAbstention => &[Stable, Preferred, Naive, SemiStable, Stage],
        CrashResistance | NonInterference => &[Stable],
        Directionality => &[Stable, Naive, SemiStable, Stage],
        SccRecursiveness => &[],
    }
}

pub fn expected_unsupported(p: PrincipleId, sigma: Semantics) -> bool {
    p == PrincipleId::SccRecursiveness && matches!(sigma, Semantics::Naive | Semantics::SemiStable | Semantics::Stage)
}

pub fn counterexample_file(p: PrincipleId, sigma: Semantics) -> String {
    format!("counterexamples/{}-{}.setaf", p.name(), sigma.code())
}

fn reinstating(sf: &Setaf, e: &ArgSet, needs_cf: bool) -> bool {
    sf.arguments().iter().all(|a| {
        e.contains(a)
            || !sf.defends(e, a)
            || (needs_cf && !sf.is_conflict_free(&{
                let mut x = e.clone();
                x.insert(a);
                x
            }))
    })
}

/// The principle evaluated straight from its definition on brute-force
/// extensions. `true` means `sf` violates it.
pub fn oracle_violates(sf: &Setaf, sigma: Semantics, p: PrincipleId) -> bool {
    use PrincipleId::*;
    let fam = ext(sf, sigma);
    match p {
        ConflictFreeness => fam.iter().any(|e| !sf.is_conflict_free(e)),
        Defense => fam.iter().any(|e| e.iter().any(|a| !sf.defends(e, a))),
        Admissibility => fam.iter().any(|e| !is_extension(sf, Semantics::Admissible, e).unwrap()),
        Reinstatement => fam.iter().any(|e| !reinstating(sf, e, false)),
        CFReinstatement => fam.iter().any(|e| !reinstating(sf, e, true)),
        Naivety => fam.iter().any(|e| !is_extension(sf, Semantics::Naive, e).unwrap()),
        IMaximality => fam.iter().any(|e| fam.iter().any(|o| e.is_proper_subset(o))),
        AllowingAbstention => sf.arguments().iter().any(|a| {
            fam.iter().any(|e| e.contains(a))
                && fam.iter().any(|e| sf.attacks_arg(e, a))
                && !fam.iter().any(|e| !sf.range(e).contains(a))
        }),
        CrashResistance => attachment_library().iter().any(|att| {
            let union = sf.disjoint_union(att);
            let n = sf.num_arguments();
            let lifted = canonicalize(ext(att, sigma).iter().map(|e| shift(e, n)).collect());
            ext(&union, sigma) == lifted && fam != vec![ArgSet::new()]
        }),
        Modularization => fam.iter().any(|e| {
            let r = sf.reduct(e);
            ext(r.framework(), sigma)
                .iter()
                .any(|l| !fam.contains(&e.union(&r.lift(l))))
        }),
        Directionality | NonInterference => uninfluenced_sets(sf).iter().any(|u| {
            if p == NonInterference && !is_isolated(sf, u) {
                return false;
            }
            let sub = sf.projection(u);
            let local: BTreeSet<ArgSet> = ext(sub.framework(), sigma).iter().map(|e| sub.lift(e)).collect();
            local != restrict_family(&fam, u)
        }),
        SccRecursiveness => {
            let ctx = LocalContext::unrestricted(sf);
            let gf = if sigma == Semantics::Stable {
                gf_stable(sf).unwrap()
            } else {
                gf_evaluate(sf, sigma, &ctx).unwrap()
            };
            gf != fam
        }
    }
}

/// Every holding cell on the corpus: no counterexample.
pub fn holding_cells(corpus: &[Case]) -> Failures {
    let mut f = Failures::default();
    for p in PrincipleId::ALL {
        for sigma in Semantics::MATRIX {
            if expected_failures(p).contains(&sigma) || expected_unsupported(p, sigma) {
                continue;
            }
            for case in corpus {
                let report = check_instance(&case.sf, sigma, p).unwrap();
                f.check(report.verdict == Verdict::HoldsOnTested, || {
                    format!("{p} {sigma} on {}: {report}", case.name)
                });
            }
        }
    }
    f
}

/// Every failing cell: its committed fixture is flagged by the checker and
/// confirmed by the oracle.
pub fn failing_cells() -> Failures {
    let mut f = Failures::default();
    for p in PrincipleId::ALL {
        for &sigma in expected_failures(p) {
            let file = counterexample_file(p, sigma);
            if !fixtures_dir().join(&file).exists() {
                f.push(format!("missing {file}"));
                continue;
            }
            let sf = fixture(&file);
            let report = check_instance(&sf, sigma, p).unwrap();
            f.check(
                report.verdict == Verdict::CounterexampleFound && report.witness.is_some(),
                || format!("{file} not flagged: {report}"),
            );
            f.check(oracle_violates(&sf, sigma, p), || format!("{file} not confirmed by the oracle"));
        }
    }
    f
}

/// The SCC-recursiveness row reports Unsupported exactly where expected.
pub fn unsupported_cells() -> Failures {
    let mut f = Failures::default();
    let sf = fixture("running.setaf");
    for sigma in Semantics::MATRIX {
        let report = check_instance(&sf, sigma, PrincipleId::SccRecursiveness).unwrap();
        let expected = expected_unsupported(PrincipleId::SccRecursiveness, sigma);
        f.check((report.verdict == Verdict::Unsupported) == expected, || {
            format!("scc-recursiveness under {sigma}: {}", report.verdict)
        });
    }
    f
}
