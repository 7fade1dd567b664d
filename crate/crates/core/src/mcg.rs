//! Mapping-class-group action on monodromy tuples and the resulting
//! signature-equivalence classes.
//!
//! Sphere moves are half twists `H(i,j)` exchanging the points `i` and `j`
//! and full twists `F(i,j) = H(i,j)²`; indices are 1-based and taken mod 4.
//! The rewrite rules are data ([`MoveTables`]) so that a corrupted table can
//! be fed through the same pipeline as a sensitivity check.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::enumerate::{CoverClass, MonodromyTuple, TupleKind};
use crate::orbifold::Signature;
use crate::perm::{GroupSummary, Permutation};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TupleMove {
    /// Half twist swapping points `i` and `j` (1-based).
    HalfTwist(u8, u8),
    /// Full twist `H(i,j)²`.
    FullTwist(u8, u8),
    /// `[a, b, c] → [b, a, c⁻¹]`.
    TorusSwap,
    /// `[a, b, c] → [a, ba, c]`.
    TorusTwistA,
    /// `[a, b, c] → [ab, b, c]`.
    TorusTwistB,
}

impl fmt::Display for TupleMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TupleMove::HalfTwist(i, j) => write!(f, "H({i},{j})"),
            TupleMove::FullTwist(i, j) => write!(f, "F({i},{j})"),
            TupleMove::TorusSwap => f.write_str("swap"),
            TupleMove::TorusTwistA => f.write_str("twist-a"),
            TupleMove::TorusTwistB => f.write_str("twist-b"),
        }
    }
}

/// One factor of a rewrite word: an input entry, possibly inverted.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Letter {
    pub slot: u8,
    pub inverse: bool,
}

const fn l(slot: u8) -> Letter {
    Letter { slot, inverse: false }
}

const fn li(slot: u8) -> Letter {
    Letter { slot, inverse: true }
}

/// Output entry `k` is the product (left to right, composed) of the word
/// `words[k]`. For sphere rules the slots are offsets from a base index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoveRule {
    pub words: Vec<Vec<Letter>>,
}

impl MoveRule {
    fn new(words: &[&[Letter]]) -> Self {
        MoveRule { words: words.iter().map(|w| w.to_vec()).collect() }
    }

    fn eval(&self, entries: &[Permutation], base: usize) -> Result<Vec<Permutation>> {
        let n = entries.len();
        let mut out = entries.to_vec();
        for (off, word) in self.words.iter().enumerate() {
            let mut acc = Permutation::identity(entries[0].degree());
            for letter in word {
                let p = entries[(base + letter.slot as usize) % n];
                let p = if letter.inverse { p.inverse() } else { p };
                acc = acc.compose(&p)?;
            }
            out[(base + off) % n] = acc;
        }
        Ok(out)
    }
}

/// The rewrite tables, by index distance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoveTables {
    /// `H_{i,i+1}`, `H_{i+1,i}`, `H_{i,i+2}`, `H_{i+2,i}` relative to base `i`.
    pub half: [MoveRule; 4],
    /// `F_{i,i+1}`, `F_{i+1,i}`, `F_{i,i+2}`, `F_{i+2,i}` relative to base `i`.
    pub full: [MoveRule; 4],
    pub torus_swap: MoveRule,
    pub torus_twist_a: MoveRule,
    pub torus_twist_b: MoveRule,
}

/// Which of the four relative tables a move uses, and at which base.
fn resolve(i: u8, j: u8) -> Result<(usize, usize)> {
    if !(1..=4).contains(&i) || !(1..=4).contains(&j) || i == j {
        return Err(Error::InvalidInput(format!("point indices ({i},{j}) must be distinct in 1..=4")));
    }
    let (i0, j0) = (i as usize - 1, j as usize - 1);
    Ok(match (j0 + 4 - i0) % 4 {
        1 => (0, i0),
        3 => (1, j0),
        _ if i0 < j0 => (2, i0),
        _ => (3, j0),
    })
}

impl MoveTables {
    pub fn standard() -> Self {
        MoveTables {
            half: [
                MoveRule::new(&[&[l(1)], &[li(1), l(0), l(1)]]),
                MoveRule::new(&[&[l(0), l(1), li(0)], &[l(0)]]),
                MoveRule::new(&[&[l(2)], &[l(0), l(1), li(0)], &[l(0)], &[l(2), l(3), li(2)]]),
                MoveRule::new(&[&[l(2)], &[li(2), l(1), l(2)], &[l(0)], &[li(0), l(3), l(0)]]),
            ],
            full: [
                MoveRule::new(&[&[li(1), l(0), l(1)], &[li(1), li(0), l(1), l(0), l(1)]]),
                MoveRule::new(&[&[l(0), l(1), l(0), li(1), li(0)], &[l(0), l(1), li(0)]]),
                MoveRule::new(&[
                    &[l(0)],
                    &[l(2), l(0), l(1), li(0), li(2)],
                    &[l(2)],
                    &[l(0), l(2), l(3), li(2), li(0)],
                ]),
                MoveRule::new(&[
                    &[l(0)],
                    &[li(0), li(2), l(1), l(2), l(0)],
                    &[l(2)],
                    &[li(2), li(0), l(3), l(0), l(2)],
                ]),
            ],
            torus_swap: MoveRule::new(&[&[l(1)], &[l(0)], &[li(2)]]),
            torus_twist_a: MoveRule::new(&[&[l(0)], &[l(1), l(0)], &[l(2)]]),
            torus_twist_b: MoveRule::new(&[&[l(0), l(1)], &[l(1)], &[l(2)]]),
        }
    }

    /// The relative rule and base index a move resolves to.
    pub fn rule_for(&self, m: TupleMove) -> Result<(&MoveRule, usize)> {
        Ok(match m {
            TupleMove::HalfTwist(i, j) => {
                let (k, base) = resolve(i, j)?;
                (&self.half[k], base)
            }
            TupleMove::FullTwist(i, j) => {
                let (k, base) = resolve(i, j)?;
                (&self.full[k], base)
            }
            TupleMove::TorusSwap => (&self.torus_swap, 0),
            TupleMove::TorusTwistA => (&self.torus_twist_a, 0),
            TupleMove::TorusTwistB => (&self.torus_twist_b, 0),
        })
    }

    /// Mutable access for building deliberately corrupted tables.
    pub fn rule_mut(&mut self, m: TupleMove) -> Result<&mut MoveRule> {
        Ok(match m {
            TupleMove::HalfTwist(i, j) => &mut self.half[resolve(i, j)?.0],
            TupleMove::FullTwist(i, j) => &mut self.full[resolve(i, j)?.0],
            TupleMove::TorusSwap => &mut self.torus_swap,
            TupleMove::TorusTwistA => &mut self.torus_twist_a,
            TupleMove::TorusTwistB => &mut self.torus_twist_b,
        })
    }

    /// Applies the rewrite rule without checking admissibility against a
    /// signature; only the tuple kind is checked.
    pub fn rewrite(&self, m: TupleMove, t: &MonodromyTuple) -> Result<MonodromyTuple> {
        let sphere = matches!(m, TupleMove::HalfTwist(..) | TupleMove::FullTwist(..));
        let expected = if sphere { TupleKind::SphereQuad } else { TupleKind::TorusTriple };
        if t.kind() != expected {
            return Err(Error::InadmissibleMove(format!("{m} on a {:?} tuple", t.kind())));
        }
        let (rule, base) = self.rule_for(m)?;
        MonodromyTuple::from_parts(t.kind(), rule.eval(t.entries(), base)?)
    }

    /// Applies `m` after checking it is a homeomorphism of the orbifold:
    /// a half twist may only exchange points of equal order.
    pub fn apply(&self, m: TupleMove, t: &MonodromyTuple, sig: &Signature) -> Result<MonodromyTuple> {
        if !is_admissible(m, sig) {
            return Err(Error::InadmissibleMove(format!("{m} over {sig}")));
        }
        self.rewrite(m, t)
    }
}

impl Default for MoveTables {
    fn default() -> Self {
        MoveTables::standard()
    }
}

pub fn is_admissible(m: TupleMove, sig: &Signature) -> bool {
    let kind = TupleKind::for_signature(sig).ok();
    match m {
        TupleMove::HalfTwist(i, j) => {
            kind == Some(TupleKind::SphereQuad)
                && resolve(i, j).is_ok()
                && sig.orders()[i as usize - 1] == sig.orders()[j as usize - 1]
        }
        TupleMove::FullTwist(i, j) => kind == Some(TupleKind::SphereQuad) && resolve(i, j).is_ok(),
        TupleMove::TorusSwap | TupleMove::TorusTwistA | TupleMove::TorusTwistB => {
            kind == Some(TupleKind::TorusTriple)
        }
    }
}

/// Every admissible move for `sig`, in a fixed order.
pub fn admissible_moves(sig: &Signature) -> Vec<TupleMove> {
    let mut out = Vec::new();
    for i in 1..=4u8 {
        for j in 1..=4u8 {
            if i != j {
                out.push(TupleMove::HalfTwist(i, j));
                out.push(TupleMove::FullTwist(i, j));
            }
        }
    }
    out.extend([TupleMove::TorusSwap, TupleMove::TorusTwistA, TupleMove::TorusTwistB]);
    out.retain(|&m| is_admissible(m, sig));
    out
}

/// Applies an admissible move using the standard tables.
pub fn apply_move(m: TupleMove, t: &MonodromyTuple, sig: &Signature) -> Result<MonodromyTuple> {
    MoveTables::standard().apply(m, t, sig)
}

/// One orbit of conjugacy classes under the mapping class group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignatureClass {
    /// The member with the least canonical tuple.
    pub representative: CoverClass,
    /// Canonical tuples of all members, sorted.
    pub members: Vec<MonodromyTuple>,
    pub group: GroupSummary,
}

pub fn signature_orbits(classes: &[CoverClass], sig: &Signature) -> Result<Vec<SignatureClass>> {
    signature_orbits_with(&MoveTables::standard(), classes, sig)
}

/// Partitions `classes` into orbits under every admissible move.
///
/// The class set must be closed under the moves; an image outside it is
/// reported as an inconsistency, as is a group invariant that changes
/// within an orbit.
pub fn signature_orbits_with(
    tables: &MoveTables,
    classes: &[CoverClass],
    sig: &Signature,
) -> Result<Vec<SignatureClass>> {
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by(|&a, &b| classes[a].tuple.cmp(&classes[b].tuple));
    let index: BTreeMap<&MonodromyTuple, usize> =
        classes.iter().enumerate().map(|(k, c)| (&c.tuple, k)).collect();
    if index.len() != classes.len() {
        return Err(Error::InvalidInput("duplicate classes in orbit input".into()));
    }
    let moves = admissible_moves(sig);
    let mut orbit_of: Vec<Option<usize>> = vec![None; classes.len()];
    let mut out = Vec::new();

    for &start in &order {
        if orbit_of[start].is_some() {
            continue;
        }
        let id = out.len();
        orbit_of[start] = Some(id);
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            for &m in &moves {
                let image = tables.apply(m, &classes[k].tuple, sig)?.canonical();
                let &target = index.get(&image).ok_or_else(|| {
                    Error::Inconsistency(format!(
                        "{m} maps {} to {image}, which is not an enumerated class of {sig}",
                        classes[k].tuple
                    ))
                })?;
                if orbit_of[target].is_none() {
                    orbit_of[target] = Some(id);
                    members.push(target);
                    queue.push_back(target);
                }
            }
        }
        let group = classes[start].group.clone();
        if let Some(&bad) = members.iter().find(|&&k| classes[k].group != group) {
            return Err(Error::Inconsistency(format!(
                "group invariant changes inside the orbit of {}: {} vs {}",
                classes[start].tuple, group.label, classes[bad].group.label
            )));
        }
        let mut member_tuples: Vec<MonodromyTuple> =
            members.iter().map(|&k| classes[k].tuple.clone()).collect();
        member_tuples.sort();
        out.push(SignatureClass { representative: classes[start].clone(), members: member_tuples, group });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_cover_classes;

    fn sphere(d: usize, e: &[&str]) -> MonodromyTuple {
        MonodromyTuple::parse(TupleKind::SphereQuad, d, e).unwrap()
    }

    fn sig(s: &str) -> Signature {
        Signature::parse(s).unwrap()
    }

    #[test]
    fn full_twist_example_degree_four() {
        let t = sphere(4, &["(0123)", "(01)(23)", "(01)(23)", "(0321)"]);
        let out = apply_move(TupleMove::FullTwist(2, 1), &t, &sig("0:2,2,2,4")).unwrap();
        assert_eq!(out, sphere(4, &["(0321)", "(03)(12)", "(01)(23)", "(0321)"]));
    }

    #[test]
    fn half_twist_example_degree_six() {
        let t1 = sphere(6, &["(0145)(23)", "(03)(15)(24)", "(04)(15)(23)", "(053)(124)"]);
        let t2 = sphere(6, &["(0145)(23)", "(04)(15)(23)", "(03)(15)(24)", "(053)(124)"]);
        assert_eq!(apply_move(TupleMove::HalfTwist(3, 2), &t1, &sig("0:2,2,2,3")).unwrap(), t2);
    }

    #[test]
    fn half_twist_distance_two() {
        let t = sphere(6, &["(02)(15)(34)", "(01)(24)(35)", "(03)(15)(24)", "(025341)"]);
        let out = apply_move(TupleMove::HalfTwist(1, 3), &t, &sig("0:2,2,2,4")).unwrap();
        assert_eq!(out, sphere(6, &["(03)(15)(24)", "(03)(14)(25)", "(02)(15)(34)", "(025341)"]));
    }

    #[test]
    fn torus_swap_example() {
        let t = MonodromyTuple::parse(TupleKind::TorusTriple, 3, &["(021)", "(01)", "(012)"]).unwrap();
        let out = apply_move(TupleMove::TorusSwap, &t, &sig("1:2")).unwrap();
        assert_eq!(
            out,
            MonodromyTuple::parse(TupleKind::TorusTriple, 3, &["(01)", "(021)", "(021)"]).unwrap()
        );
    }

    #[test]
    fn half_twist_needs_equal_orders() {
        let t = sphere(4, &["(0123)", "(01)(23)", "(01)(23)", "(0321)"]);
        let err = apply_move(TupleMove::HalfTwist(3, 4), &t, &sig("0:2,2,2,4")).unwrap_err();
        assert!(matches!(err, Error::InadmissibleMove(_)));
        assert!(apply_move(TupleMove::TorusSwap, &t, &sig("0:2,2,2,4")).is_err());
        assert!(apply_move(TupleMove::HalfTwist(1, 1), &t, &sig("0:2,2,2,4")).is_err());
    }

    #[test]
    fn half_twists_invert_each_other() {
        let tables = MoveTables::standard();
        let t = sphere(6, &["(02)(15)(34)", "(01)(24)(35)", "(03)(15)(24)", "(025341)"]);
        for i in 1..=4u8 {
            for j in 1..=4u8 {
                if i == j {
                    continue;
                }
                let there = tables.rewrite(TupleMove::HalfTwist(i, j), &t).unwrap();
                let back = tables.rewrite(TupleMove::HalfTwist(j, i), &there).unwrap();
                assert_eq!(back, t, "H({j},{i}) H({i},{j})");
            }
        }
    }

    #[test]
    fn orbit_counts_small_cases() {
        let cases = [("0:2,2,2,3", 3, 1), ("0:2,2,3,3", 3, 2), ("0:2,3,3,3", 3, 1), ("1:2", 3, 1)];
        for (s, d, expected) in cases {
            let s = sig(s);
            let classes = enumerate_cover_classes(&s, d).unwrap();
            assert_eq!(signature_orbits(&classes, &s).unwrap().len(), expected, "{s} degree {d}");
        }
    }

    #[test]
    fn non_closed_input_is_an_inconsistency() {
        let s = sig("0:2,2,3,3");
        let classes = enumerate_cover_classes(&s, 3).unwrap();
        let orbits = signature_orbits(&classes, &s).unwrap();
        let big = orbits.iter().find(|o| o.members.len() > 1).expect("a merged orbit");
        let dropped = &big.members[1];
        let rest: Vec<CoverClass> = classes.iter().filter(|c| c.tuple != *dropped).cloned().collect();
        assert!(matches!(signature_orbits(&rest, &s), Err(Error::Inconsistency(_))));
    }
}
