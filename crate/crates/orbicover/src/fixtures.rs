//! Reference values the pipeline is checked against: stated counts, printed
//! representative tuples and printed move results.
//!
//! Tuples are written in cycle notation with 0-based points. Everything here
//! is data; the comparisons live in [`crate::verify`] and
//! [`crate::report`].

use orbicover_core::mcg::{Letter, MoveTables, TupleMove};

/// `(signature, degrees, area as (num, den) of π)`, in table order.
pub const CANDIDATE_TABLE: [(&str, &[u32], (i64, i64)); 7] = [
    ("0:2,2,2,3", &[3, 6, 9], (1, 3)),
    ("0:2,2,3,3", &[3], (2, 3)),
    ("0:2,3,3,3", &[3], (1, 1)),
    ("0:2,2,2,4", &[4, 5, 6, 7], (1, 2)),
    ("0:2,2,2,5", &[5], (3, 5)),
    ("0:2,2,2,2,2", &[3], (1, 1)),
    ("1:2", &[3], (1, 1)),
];

/// Pairs removed by the odd-degree parity argument.
pub const EXCLUDED_PAIRS: [(&str, u32); 5] =
    [("0:2,2,2,3", 9), ("0:2,2,2,4", 5), ("0:2,2,2,4", 7), ("0:2,2,2,5", 5), ("0:2,2,2,2,2", 3)];

/// Cone-point summary table: degree, signature, and the alternatives.
/// The first row is reproduced exactly as printed.
pub const COVER_TABLE: [(u32, &str, &[&str]); 7] = [
    (3, "0:2,2,2,3", &["1 point with angle 3π"]),
    (3, "0:2,2,3,3", &["2 points with angle 3π"]),
    (3, "0:2,2,2,3", &["3 points with angle 3π"]),
    (3, "1:2", &["1 point with angle 3π"]),
    (4, "0:2,2,2,4", &["1 point with angle 4π"]),
    (6, "0:2,2,2,4", &["1 point with angle 3π"]),
    (6, "0:2,2,2,3", &["2 points with angle 3π", "1 point with angle 4π"]),
];

/// One cycle type per point, in signature order.
pub type ProfileParts = &'static [&'static [usize]];

/// Stated local-degree profiles, in canonical placement.
pub const PROFILES: [(&str, u32, &[ProfileParts]); 7] = [
    ("0:2,2,2,3", 3, &[&[&[3], &[3], &[3], &[3]]]),
    ("0:2,2,3,3", 3, &[&[&[3], &[3], &[3], &[3]]]),
    ("0:2,3,3,3", 3, &[&[&[3], &[3], &[3], &[3]]]),
    ("1:2", 3, &[&[&[3]]]),
    ("0:2,2,2,4", 4, &[&[&[4], &[2, 2], &[2, 2], &[4]]]),
    ("0:2,2,2,4", 6, &[&[&[2, 2, 2], &[2, 2, 2], &[2, 2, 2], &[6]]]),
    (
        "0:2,2,2,3",
        6,
        &[&[&[3, 3], &[2, 2, 2], &[2, 2, 2], &[3, 3]], &[&[2, 4], &[2, 2, 2], &[2, 2, 2], &[3, 3]]],
    ),
];

/// Stated counts for one case. `classes` counts conjugacy classes in the
/// canonical placement of `profile` (`None`: all profiles), `orbits` counts
/// signature-equivalence classes.
pub struct CaseCount {
    pub signature: &'static str,
    pub degree: u32,
    pub profile: Option<&'static [&'static [usize]]>,
    pub classes: Option<usize>,
    pub orbits: usize,
}

pub const CASE_COUNTS: [CaseCount; 8] = [
    CaseCount { signature: "1:2", degree: 3, profile: None, classes: Some(2), orbits: 1 },
    CaseCount { signature: "0:2,2,2,3", degree: 3, profile: None, classes: Some(3), orbits: 1 },
    CaseCount { signature: "0:2,2,3,3", degree: 3, profile: None, classes: None, orbits: 2 },
    CaseCount { signature: "0:2,3,3,3", degree: 3, profile: None, classes: None, orbits: 1 },
    CaseCount { signature: "0:2,2,2,4", degree: 4, profile: None, classes: Some(3), orbits: 2 },
    CaseCount { signature: "0:2,2,2,4", degree: 6, profile: None, classes: Some(3), orbits: 1 },
    CaseCount {
        signature: "0:2,2,2,3",
        degree: 6,
        profile: Some(&[&[2, 4], &[2, 2, 2], &[2, 2, 2], &[3, 3]]),
        classes: Some(2),
        orbits: 1,
    },
    CaseCount {
        signature: "0:2,2,2,3",
        degree: 6,
        profile: Some(&[&[3, 3], &[2, 2, 2], &[2, 2, 2], &[3, 3]]),
        classes: Some(9),
        orbits: 3,
    },
];

pub const SIGNATURE_CLASSES: usize = 12;
pub const NON_HOLONOMY_CLASSES: usize = 3;
pub const FINAL_ORBITS: usize = 9;
/// Allowed `(intermediate, base, bound on the group order)` for a
/// non-holonomy witness.
pub const NESTED_PAIRS: [(&str, &str, Option<usize>); 2] =
    [("0:2,2,3,3", "0:2,2,2,3", Some(6)), ("1:2", "0:2,2,2,4", None)];

/// Printed representatives: `(signature, degree, tuples)`.
pub const TORUS_LISTING_A: [&[&str]; 2] = [&["(021)", "(01)", "(012)"], &["(01)", "(021)", "(021)"]];
pub const TORUS_LISTING_B: [&[&str]; 2] = [&["(021)", "(01)", "(012)"], &["(01)", "(12)", "(021)"]];
pub const TORUS_STATED_CLASSES: usize = 2;

pub const DEGREE_3: [&[&str]; 3] = [
    &["(012)", "(012)", "(021)", "(021)"],
    &["(012)", "(021)", "(012)", "(021)"],
    &["(012)", "(021)", "(021)", "(012)"],
];

pub const DEGREE_4: [&[&str]; 3] = [
    &["(0123)", "(01)(23)", "(01)(23)", "(0321)"],
    &["(0123)", "(01)(23)", "(03)(12)", "(0123)"],
    &["(0123)", "(02)(13)", "(02)(13)", "(0321)"],
];

pub const DEGREE_6_2224: [&[&str]; 3] = [
    &["(02)(15)(34)", "(01)(24)(35)", "(03)(15)(24)", "(025341)"],
    &["(02)(15)(34)", "(02)(13)(45)", "(05)(13)(24)", "(051243)"],
    &["(02)(15)(34)", "(02)(13)(45)", "(03)(15)(24)", "(031245)"],
];

pub const DEGREE_6_2223_FOUR: [&[&str]; 2] = [
    &["(0145)(23)", "(03)(15)(24)", "(04)(15)(23)", "(053)(124)"],
    &["(0145)(23)", "(04)(15)(23)", "(03)(15)(24)", "(053)(124)"],
];

pub const DEGREE_6_2223_THREE: [&[&str]; 9] = [
    &["(031)(245)", "(02)(15)(34)", "(02)(15)(34)", "(013)(254)"],
    &["(031)(245)", "(01)(24)(35)", "(01)(24)(35)", "(013)(254)"],
    &["(031)(245)", "(01)(24)(35)", "(03)(12)(45)", "(032)(145)"],
    &["(031)(245)", "(01)(24)(35)", "(02)(14)(35)", "(025)(134)"],
    &["(031)(245)", "(01)(24)(35)", "(05)(12)(34)", "(051)(243)"],
    &["(031)(245)", "(04)(15)(23)", "(01)(24)(35)", "(032)(145)"],
    &["(031)(245)", "(04)(15)(23)", "(03)(15)(24)", "(014)(253)"],
    &["(031)(245)", "(04)(15)(23)", "(04)(15)(23)", "(013)(254)"],
    &["(031)(245)", "(04)(15)(23)", "(02)(14)(35)", "(031)(245)"],
];

/// How a printed move result relates to the computed one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Match {
    Exact,
    UpToConjugacy,
}

/// `(signature, degree, move, input, printed output, match)`.
pub type MoveExample =
    (&'static str, usize, TupleMove, &'static [&'static str], &'static [&'static str], Match);

pub const MOVE_EXAMPLES: [MoveExample; 12] = [
    (
        "0:2,2,2,4",
        4,
        TupleMove::FullTwist(2, 1),
        DEGREE_4[0],
        &["(0321)", "(03)(12)", "(01)(23)", "(0321)"],
        Match::Exact,
    ),
    ("0:2,2,2,4", 4, TupleMove::FullTwist(2, 1), DEGREE_4[0], DEGREE_4[1], Match::UpToConjugacy),
    (
        "0:2,2,2,4",
        6,
        TupleMove::HalfTwist(2, 3),
        DEGREE_6_2224[0],
        &["(02)(15)(34)", "(03)(15)(24)", "(01)(24)(35)", "(025341)"],
        Match::Exact,
    ),
    (
        "0:2,2,2,4",
        6,
        TupleMove::HalfTwist(1, 3),
        DEGREE_6_2224[0],
        &["(03)(15)(24)", "(03)(14)(25)", "(02)(15)(34)", "(025341)"],
        Match::Exact,
    ),
    ("0:2,2,2,3", 6, TupleMove::HalfTwist(3, 2), DEGREE_6_2223_FOUR[0], DEGREE_6_2223_FOUR[1], Match::Exact),
    (
        "0:2,2,2,3",
        6,
        TupleMove::FullTwist(1, 2),
        DEGREE_6_2223_THREE[1],
        &["(015)(234)", "(05)(12)(34)", "(01)(24)(35)", "(013)(254)"],
        Match::Exact,
    ),
    (
        "0:2,2,2,3",
        6,
        TupleMove::FullTwist(1, 3),
        DEGREE_6_2223_THREE[1],
        DEGREE_6_2223_THREE[5],
        Match::Exact,
    ),
    (
        "0:2,2,2,3",
        6,
        TupleMove::FullTwist(2, 4),
        DEGREE_6_2223_THREE[1],
        &["(015)(234)", "(01)(24)(35)", "(04)(13)(25)", "(013)(254)"],
        Match::UpToConjugacy,
    ),
    (
        "0:2,2,2,3",
        6,
        TupleMove::FullTwist(1, 2),
        DEGREE_6_2223_THREE[3],
        &["(015)(234)", "(05)(12)(34)", "(02)(14)(35)", "(025)(134)"],
        Match::UpToConjugacy,
    ),
    (
        "0:2,2,2,3",
        6,
        TupleMove::HalfTwist(2, 3),
        DEGREE_6_2223_THREE[3],
        &["(031)(245)", "(02)(14)(35)", "(01)(24)(35)", "(025)(134)"],
        Match::UpToConjugacy,
    ),
    (
        "0:2,2,2,3",
        6,
        TupleMove::FullTwist(1, 2),
        DEGREE_6_2223_THREE[7],
        DEGREE_6_2223_THREE[8],
        Match::UpToConjugacy,
    ),
    ("1:2", 3, TupleMove::TorusSwap, TORUS_LISTING_A[0], TORUS_LISTING_A[1], Match::Exact),
];

/// A printed move result that cannot be right: `F(1,2)` leaves entries 3
/// and 4 alone, but the printed tuple changes them. Its stated class is
/// checked in [`MOVE_EXAMPLES`]; the tuple itself is reported.
pub const MISPRINTED_MOVE: MoveExample = (
    "0:2,2,2,3",
    6,
    TupleMove::FullTwist(1, 2),
    DEGREE_6_2223_THREE[7],
    &["(013)(254)", "(02)(14)(35)", "(02)(14)(35)", "(031)(245)"],
    Match::Exact,
);

/// Group invariants stated for the degree-6 `(3,3)` representatives:
/// `(index into DEGREE_6_2223_THREE, order, cyclic, abelian)`.
pub const GROUP_INVARIANTS: [(usize, usize, Option<bool>, Option<bool>); 3] =
    [(0, 6, Some(true), Some(true)), (1, 24, None, None), (7, 6, Some(false), Some(false))];

/// The printed rewrite of `s_{i+1}` under `F_{i+2,i}`, as offsets from `i`.
pub fn printed_full_back2_word() -> Vec<Letter> {
    let l = |slot, inverse| Letter { slot, inverse };
    vec![l(0, true), l(2, true), l(1, false), l(2, false), l(1, false)]
}

/// The standard tables with the printed `F_{i+2,i}` word swapped in.
pub fn printed_tables() -> MoveTables {
    let mut t = MoveTables::standard();
    t.full[3].words[1] = printed_full_back2_word();
    t
}
