//! Acceptance suite: one PASS/FAIL line per criterion, all at zero tolerance.
//!
//! Runs without the libtest harness so the lines are always printed. The
//! process fails if a criterion fails unexpectedly, or if a criterion listed
//! in `UNATTAINABLE` stops failing for its documented reason.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

use orbicover::fixtures;
use orbicover::{run_pipeline, PipelineOptions, PipelineReport};
use orbicover_core::enumerate::{MonodromyTuple, TupleKind};
use orbicover_core::mcg::admissible_moves;
use orbicover_core::orbifold::{candidate_signatures, parity_exclusion, surviving_pairs};
use orbicover_core::perm::closure;
use orbicover_core::{
    block_systems, candidate_table, canonicalize_tuple, cone_surface_area, orbifold_area, subgroup_summary,
    ConeData, CycleType, LocalProfile, MoveTables, Permutation, PiMultiple, Signature, TupleMove,
};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

/// Criterion 4 asks for 2 conjugacy classes over (1;2) in degree 3; there are
/// 3 (all in one orbit). This is the only sub-check allowed to fail.
const UNATTAINABLE: &[(u8, &str)] = &[(4, "(1;2)/3 classes: 3, expected 2")];

struct Outcome {
    ok: bool,
    /// Failed sub-checks, or a one-line summary when everything passed.
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn from(failures: Vec<String>, summary: impl Into<String>) -> Self {
        Outcome { ok: failures.is_empty(), failures, summary: summary.into() }
    }
}

fn sig(s: &str) -> Signature {
    Signature::parse(s).unwrap()
}

fn pi(n: i64, d: i64) -> PiMultiple {
    PiMultiple::new(n, d)
}

fn criterion_1() -> Outcome {
    let expected: Vec<(Signature, Vec<u32>, PiMultiple)> = vec![
        (sig("0:2,2,2,3"), vec![3, 6, 9], pi(1, 3)),
        (sig("0:2,2,3,3"), vec![3], pi(2, 3)),
        (sig("0:2,3,3,3"), vec![3], pi(1, 1)),
        (sig("0:2,2,2,4"), vec![4, 5, 6, 7], pi(1, 2)),
        (sig("0:2,2,2,5"), vec![5], pi(3, 5)),
        (sig("0:2,2,2,2,2"), vec![3], pi(1, 1)),
        (sig("1:2"), vec![3], pi(1, 1)),
    ];
    let got: Vec<_> = candidate_table().into_iter().map(|r| (r.signature, r.degrees, r.area)).collect();
    let mut failures = Vec::new();
    if got.len() != expected.len() {
        failures.push(format!("{} rows, expected {}", got.len(), expected.len()));
    }
    for (g, e) in got.iter().zip(&expected) {
        if g != e {
            failures.push(format!("row {} {:?} {} ≠ {} {:?} {}", g.0, g.1, g.2, e.0, e.1, e.2));
        }
    }
    Outcome::from(failures, format!("{} rows match", got.len()))
}

fn criterion_2() -> Outcome {
    let expected: BTreeSet<(Signature, u32)> =
        [("0:2,2,2,3", 9), ("0:2,2,2,4", 5), ("0:2,2,2,4", 7), ("0:2,2,2,5", 5), ("0:2,2,2,2,2", 3)]
            .into_iter()
            .map(|(s, d)| (sig(s), d))
            .collect();
    let removed: BTreeSet<(Signature, u32)> =
        candidate_signatures().into_iter().filter(|(s, d)| !parity_exclusion(s, *d).is_kept()).collect();
    let surviving = surviving_pairs();
    let mut failures = Vec::new();
    if removed != expected {
        failures.push(format!("removed {removed:?}"));
    }
    if surviving.len() != 7 {
        failures.push(format!("{} surviving pairs, expected 7", surviving.len()));
    }
    Outcome::from(failures, format!("{} pairs removed, {} survive", removed.len(), surviving.len()))
}

fn profile(s: &Signature, parts: &[&[usize]]) -> LocalProfile {
    LocalProfile::new(s, parts.iter().map(|p| CycleType::new(p.to_vec()).unwrap()).collect()).unwrap()
}

fn criterion_3(r: &PipelineReport) -> Outcome {
    let mut failures = Vec::new();
    for (s, d, profiles) in fixtures::PROFILES {
        let s = sig(s);
        let expected: BTreeSet<LocalProfile> = profiles.iter().map(|p| profile(&s, p)).collect();
        match r.case(&s, d) {
            None => failures.push(format!("{s}/{d} missing")),
            Some(c) => {
                let got: BTreeSet<LocalProfile> = c.profiles.iter().cloned().collect();
                if got != expected {
                    failures.push(format!("{s}/{d}: {got:?}"));
                }
            }
        }
    }
    if r.cases.len() != fixtures::PROFILES.len() {
        failures.push(format!("{} cases", r.cases.len()));
    }
    Outcome::from(failures, "profile sets equal on all 7 pairs, two profiles for (0;2,2,2,3)/6")
}

fn criterion_4(r: &PipelineReport) -> Outcome {
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for c in &fixtures::CASE_COUNTS {
        let s = sig(c.signature);
        let Some(case) = r.case(&s, c.degree) else {
            failures.push(format!("{s}/{} missing", c.degree));
            continue;
        };
        let p = c.profile.map(|p| profile(&s, p));
        let in_scope = |q: &LocalProfile| p.as_ref().is_none_or(|p| p == q);
        let classes =
            case.classes.iter().filter(|k| k.is_canonical_variant() && in_scope(&k.profile)).count();
        let orbits = case.orbits.iter().filter(|o| in_scope(o.base_profile())).count();
        let label = match &p {
            Some(p) => format!("{s}/{} {p}", c.degree),
            None => format!("{s}/{}", c.degree),
        };
        if let Some(expected) = c.classes {
            if classes != expected {
                failures.push(format!("{label} classes: {classes}, expected {expected}"));
            }
        }
        if orbits != c.orbits {
            failures.push(format!("{label} orbits: {orbits}, expected {}", c.orbits));
        }
        seen.push(format!("{label} {classes}/{orbits}"));
    }
    Outcome::from(failures, seen.join("; "))
}

/// Brute-force conjugacy: some g in Sym(d) with g a g⁻¹ = b entrywise.
fn conjugate_naive(a: &[Permutation], b: &[Permutation]) -> bool {
    let d = a[0].degree();
    orbicover_core::perm::all_permutations(d)
        .any(|g| a.iter().zip(b).all(|(x, y)| (0..d).all(|i| g.image(x.image(i)) == y.image(g.image(i)))))
}

fn criterion_5(r: &PipelineReport) -> Outcome {
    let listings: [(&str, u32, &[&[&str]]); 7] = [
        ("1:2", 3, &fixtures::TORUS_LISTING_A),
        ("1:2", 3, &fixtures::TORUS_LISTING_B),
        ("0:2,2,2,3", 3, &fixtures::DEGREE_3),
        ("0:2,2,2,4", 4, &fixtures::DEGREE_4),
        ("0:2,2,2,4", 6, &fixtures::DEGREE_6_2224),
        ("0:2,2,2,3", 6, &fixtures::DEGREE_6_2223_FOUR),
        ("0:2,2,2,3", 6, &fixtures::DEGREE_6_2223_THREE),
    ];
    let mut failures = Vec::new();
    let mut total = 0;
    for (s, d, list) in listings {
        let s = sig(s);
        let case = r.case(&s, d).expect("case exists");
        let kind = TupleKind::for_signature(&s).unwrap();
        for entries in list {
            total += 1;
            let t = MonodromyTuple::parse(kind, d as usize, entries).unwrap();
            let found = case.classes.iter().any(|c| conjugate_naive(t.entries(), c.tuple.entries()));
            if !found || !t.satisfies_relation() {
                failures.push(format!("{s}/{d} {t} not found"));
            }
        }
    }
    Outcome::from(failures, format!("{total} printed tuples found, 0 mismatches"))
}

fn criterion_6(r: &PipelineReport) -> Outcome {
    let mut failures = Vec::new();
    for (case, o) in r.orbits() {
        for m in &o.class.members {
            let g = subgroup_summary(m.entries()).unwrap();
            if g != o.class.group {
                failures.push(format!(
                    "{}/{}: {m} has {}, orbit has {}",
                    case.signature, case.degree, g.label, o.class.group.label
                ));
            }
        }
    }
    let s = sig("0:2,2,2,3");
    let p = profile(&s, &[&[3, 3], &[2, 2, 2], &[2, 2, 2], &[3, 3]]);
    let case = r.case(&s, 6).expect("case exists");
    let mut got: Vec<(usize, bool)> = case
        .orbits
        .iter()
        .filter(|o| *o.base_profile() == p)
        .map(|o| (o.class.group.order, o.class.group.is_cyclic))
        .collect();
    got.sort();
    // order 6 non-cyclic, order 6 cyclic, order 24 (not cyclic: no 24-cycle in Sym(6))
    let expected = vec![(6, false), (6, true), (24, false)];
    if got != expected {
        failures.push(format!("(3,3) orbit groups {got:?}"));
    }
    Outcome::from(failures, "groups constant on every orbit; (3,3) orbits: order 6 cyclic, 24, 6 non-cyclic")
}

fn criterion_7(r: &PipelineReport) -> Outcome {
    let mut failures = Vec::new();
    let total = r.signature_class_count();
    let non: Vec<_> = r.orbits().filter(|(_, o)| !o.holonomy.is_holonomy()).collect();
    if total != 12 || non.len() != 3 {
        failures.push(format!("{} of {total} non-holonomy", non.len()));
    }
    let pairs = [(sig("0:2,2,3,3"), sig("0:2,2,2,3")), (sig("1:2"), sig("0:2,2,2,4"))];
    let mut orders = Vec::new();
    for (case, o) in &non {
        let w = o.holonomy.witness().unwrap();
        if !pairs.contains(&(w.intermediate.clone(), case.signature.clone())) {
            failures.push(format!("witness {} over {}", w.intermediate, case.signature));
        }
        if orbifold_area(&w.intermediate) != orbifold_area(&case.signature) * w.q_degree as i64 {
            failures
                .push(format!("area of {} is not {}·area of {}", w.intermediate, w.q_degree, case.signature));
        }
        // the order bound is stated for covers factoring through (0;2,2,3,3)
        if case.signature == pairs[0].1 && o.class.group.order > 6 {
            failures.push(format!("{} has order {}", o.class.representative.tuple, o.class.group.order));
        }
        orders.push(format!("{}/{}: order {}", case.signature, case.degree, o.class.group.order));
    }
    let finals = r.final_orbit_count();
    if finals != 9 {
        failures.push(format!("final count {finals}"));
    }
    Outcome::from(failures, format!("3 of 12 non-holonomy ({}); final 9", orders.join(", ")))
}

fn random<T: std::fmt::Debug>(runner: &mut TestRunner, s: impl Strategy<Value = T>) -> T {
    s.new_tree(runner).unwrap().current()
}

fn perm(d: usize) -> impl Strategy<Value = Permutation> {
    Just((0..d).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn equal_partitions(points: &[usize], size: usize) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = points.split_first() else {
        return vec![vec![]];
    };
    let mut out = Vec::new();
    for mask in 0u32..(1 << rest.len()) {
        if mask.count_ones() as usize != size - 1 {
            continue;
        }
        let mut block = vec![first];
        let mut others = Vec::new();
        for (k, &x) in rest.iter().enumerate() {
            if mask & (1 << k) != 0 {
                block.push(x)
            } else {
                others.push(x)
            }
        }
        for mut tail in equal_partitions(&others, size) {
            tail.push(block.clone());
            out.push(tail);
        }
    }
    out
}

fn oracle_blocks(gens: &[Permutation], d: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let points: Vec<usize> = (0..d).collect();
    let mut out = BTreeSet::new();
    for size in (2..d).filter(|s| d.is_multiple_of(*s)) {
        for mut part in equal_partitions(&points, size) {
            let block_of = |x: usize| part.iter().position(|b| b.contains(&x)).unwrap();
            let ok = gens.iter().all(|g| {
                part.iter().all(|b| b.iter().all(|&x| block_of(g.image(x)) == block_of(g.image(b[0]))))
            });
            if ok {
                part.iter_mut().for_each(|b| b.sort());
                part.sort();
                out.insert(part);
            }
        }
    }
    out
}

fn criterion_8(r: &PipelineReport) -> Outcome {
    let mut failures = Vec::new();
    let mut runner = TestRunner::deterministic();

    // (a) canonical form: idempotent, conjugation-invariant, decides conjugacy
    for _ in 0..1000 {
        let (a, g, c) = random(
            &mut runner,
            (1usize..=6, 1usize..=4).prop_flat_map(|(d, k)| {
                (proptest::collection::vec(perm(d), k), perm(d), proptest::collection::vec(perm(d), k))
            }),
        );
        let ca = canonicalize_tuple(&a).unwrap();
        let b: Vec<Permutation> = a.iter().map(|s| s.conjugate_by(&g).unwrap()).collect();
        let cc = canonicalize_tuple(&c).unwrap();
        if canonicalize_tuple(&ca).unwrap() != ca
            || canonicalize_tuple(&b).unwrap() != ca
            || (ca == cc) != conjugate_naive(&a, &c)
        {
            failures.push(format!("(a) canonical form wrong on {a:?}"));
            break;
        }
    }

    // (b) 500 random admissible move applications
    let tables = MoveTables::standard();
    let all: Vec<_> = r.cases.iter().flat_map(|c| c.classes.iter().map(move |k| (c, k))).collect();
    let mut t = None;
    for step in 0..500 {
        if step % 10 == 0 {
            t = Some(all[random(&mut runner, 0..all.len())]);
        }
        let (case, class) = t.unwrap();
        let moves = admissible_moves(&case.signature);
        let m = moves[random(&mut runner, 0..moves.len())];
        let out = tables.apply(m, &class.tuple, &case.signature).unwrap();
        let same_group = closure(out.entries()).unwrap() == closure(class.tuple.entries()).unwrap();
        if !out.satisfies_relation() || !out.is_transitive() || !same_group {
            failures.push(format!("(b) {m} on {}", class.tuple));
            break;
        }
        match case.classes.iter().find(|k| k.tuple == out.canonical()) {
            Some(k) => t = Some((case, k)),
            None => {
                failures.push(format!("(b) {m} on {} leaves the class set", class.tuple));
                break;
            }
        }
    }

    // (c) H(i,j)² = F(i,j) for all ordered pairs, on every sphere class
    let mut squared = 0;
    for (_, class) in all.iter().filter(|(_, k)| k.tuple.kind() == TupleKind::SphereQuad) {
        for i in 1..=4u8 {
            for j in (1..=4u8).filter(|&j| j != i) {
                let h = TupleMove::HalfTwist(i, j);
                let twice = tables.rewrite(h, &tables.rewrite(h, &class.tuple).unwrap()).unwrap();
                if twice != tables.rewrite(TupleMove::FullTwist(i, j), &class.tuple).unwrap() {
                    failures.push(format!("(c) H({i},{j})² ≠ F({i},{j}) on {}", class.tuple));
                }
                squared += 1;
            }
        }
    }

    // (d) block systems of every enumerated transitive group
    let mut groups = BTreeMap::new();
    for (_, class) in &all {
        groups.entry(closure(class.tuple.entries()).unwrap()).or_insert_with(|| class.tuple.clone());
    }
    for t in groups.values() {
        let d = t.degree();
        let lib: BTreeSet<Vec<Vec<usize>>> =
            block_systems(t.entries(), d).unwrap().into_iter().map(|b| b.blocks().to_vec()).collect();
        if lib != oracle_blocks(t.entries(), d) {
            failures.push(format!("(d) block systems of {t}"));
        }
    }

    // (e) area(φ) = D·area(ψ), exactly
    for (case, class) in &all {
        let cone = ConeData::new(class.genus, class.cone_angles.clone()).unwrap();
        if cone_surface_area(&cone) != orbifold_area(&case.signature) * case.degree as i64 {
            failures.push(format!("(e) area identity fails on {}", class.tuple));
        }
    }

    Outcome::from(
        failures,
        format!(
            "(a) 1000 tuples (b) 500 moves (c) {squared} H²=F checks (d) {} groups (e) {} classes",
            groups.len(),
            all.len()
        ),
    )
}

fn main() -> ExitCode {
    let report = match run_pipeline(&PipelineOptions::default()) {
        Ok(r) => r,
        Err(e) => {
            println!("pipeline failed: {e}");
            return ExitCode::FAILURE;
        }
    };
    let results = [
        (1, "signature table", criterion_1()),
        (2, "parity exclusion", criterion_2()),
        (3, "allowed profiles", criterion_3(&report)),
        (4, "conjugacy-class and orbit counts", criterion_4(&report)),
        (5, "printed representatives", criterion_5(&report)),
        (6, "orbit group invariants", criterion_6(&report)),
        (7, "holonomy classification", criterion_7(&report)),
        (8, "property suites", criterion_8(&report)),
    ];

    let mut unexpected = Vec::new();
    for (n, name, o) in &results {
        let status = if o.ok { "PASS" } else { "FAIL" };
        let detail = if o.ok { o.summary.clone() } else { o.failures.join("; ") };
        println!("criterion {n} ({name}): {status} — {detail}");
        match UNATTAINABLE.iter().find(|(k, _)| k == n) {
            Some((_, why)) if o.failures != [why.to_string()] => {
                unexpected.push(format!("criterion {n} no longer fails only with \"{why}\""))
            }
            Some(_) => {}
            None if !o.ok => unexpected.push(format!("criterion {n} failed")),
            None => {}
        }
    }
    let passed = results.iter().filter(|(_, _, o)| o.ok).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    for (n, why) in UNATTAINABLE {
        println!("  criterion {n} is unattainable as stated: {why}");
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            println!("unexpected: {u}");
        }
        ExitCode::FAILURE
    }
}
