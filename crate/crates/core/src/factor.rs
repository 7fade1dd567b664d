//! Factorizations of a cover through an intermediate orbifold, detected by
//! block systems of the monodromy group, and the holonomy test built on them.
//!
//! A block system with `k` blocks splits `p = q ∘ r` with `q` of degree `k`
//! (the action on blocks) and `r` of degree `D/k`. A class is a holonomy
//! cover exactly when no such `r` is itself a flexible cover.

use alloc::format;
use alloc::vec::Vec;

use crate::enumerate::{CoverClass, MonodromyTuple, TupleKind};
use crate::orbifold::{PiMultiple, Signature, MIN_DEGREE};
use crate::perm::{block_systems, BlockSystem, CycleType};
use crate::{Error, Result};

/// A point of the intermediate orbifold together with what `r` does over it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntermediatePoint {
    /// Index of the base point it lies over (signature order).
    pub base_point: usize,
    /// Length of the block cycle, i.e. the local degree of `q`.
    pub q_local_degree: u32,
    /// `r_i / q_local_degree`; 1 means a regular point.
    pub order: u32,
    /// Local degrees of `r` over this point.
    pub r_local_degrees: Vec<u32>,
    /// Angles of the covering surface over this point, in units of π.
    pub angles: Vec<PiMultiple>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub blocks: BlockSystem,
    pub q_degree: u32,
    pub r_degree: u32,
    pub intermediate: Signature,
    /// Per base point: cycle type of the induced action on blocks.
    pub q_branch_data: Vec<CycleType>,
    pub points: Vec<IntermediatePoint>,
    pub r_flexible: bool,
}

/// Every block system of `c`'s monodromy that defines an orbifold
/// factorization (block-cycle lengths divide the point orders).
pub fn factorizations(c: &CoverClass) -> Result<Vec<Factorization>> {
    factorizations_of_tuple(&c.tuple, &c.signature)
}

pub fn factorizations_of_tuple(t: &MonodromyTuple, sig: &Signature) -> Result<Vec<Factorization>> {
    let kind = TupleKind::for_signature(sig)?;
    if kind != t.kind() {
        return Err(Error::InvalidInput(format!("{:?} tuple over {sig}", t.kind())));
    }
    let d = t.degree();
    let mut out = Vec::new();
    for blocks in block_systems(t.entries(), d)? {
        if let Some(f) = factor_through(t, sig, blocks)? {
            out.push(f);
        }
    }
    Ok(out)
}

fn factor_through(t: &MonodromyTuple, sig: &Signature, blocks: BlockSystem) -> Result<Option<Factorization>> {
    let k = blocks.block_count();
    let d = t.degree();
    let mut q_branch_data = Vec::new();
    let mut points = Vec::new();
    let mut branching = 0i64;

    for (i, &r) in sig.orders().iter().enumerate() {
        let s = t.point_monodromy(i);
        let induced = blocks
            .induced(s)
            .ok_or_else(|| Error::Inconsistency(format!("{s} does not preserve {blocks:?}")))?;
        let block_cycles = cycles_with_fixed(&induced);
        if block_cycles.iter().any(|bc| r % bc.len() as u32 != 0) {
            return Ok(None);
        }
        q_branch_data.push(induced.cycle_type());

        let tuple_cycles = cycles_with_fixed(s);
        for bc in &block_cycles {
            let c = bc.len() as u32;
            branching += c as i64 - 1;
            let mut r_local_degrees = Vec::new();
            let mut angles = Vec::new();
            for cyc in &tuple_cycles {
                if bc.contains(&blocks.block_of(cyc[0])) {
                    let len = cyc.len() as u32;
                    r_local_degrees.push(len / c);
                    angles.push(PiMultiple::new(2 * len as i64, r as i64));
                }
            }
            r_local_degrees.sort_unstable();
            angles.sort_unstable();
            points.push(IntermediatePoint {
                base_point: i,
                q_local_degree: c,
                order: r / c,
                r_local_degrees,
                angles,
            });
        }
    }

    // Riemann–Hurwitz for the underlying surfaces of q
    let chi = k as i64 * (2 - 2 * sig.genus() as i64) - branching;
    if chi > 2 || chi % 2 != 0 {
        return Err(Error::Inconsistency(format!(
            "block action on {blocks:?} gives Euler characteristic {chi}"
        )));
    }
    let genus = ((2 - chi) / 2) as u32;
    let orders: Vec<u32> = points.iter().map(|p| p.order).filter(|&o| o > 1).collect();
    let intermediate = Signature::new(genus, orders)?;

    let r_degree = (d / k) as u32;
    let two = PiMultiple::integer(2);
    let cones_ok = points.iter().all(|p| p.angles.iter().all(|a| *a <= two) || p.order % 2 == 0);
    let some_cone = points.iter().any(|p| p.angles.iter().any(|a| *a > two));
    let no_small_angles = points.iter().all(|p| p.angles.iter().all(|a| *a >= two));
    let r_flexible = cones_ok
        && some_cone
        && no_small_angles
        && r_degree >= MIN_DEGREE
        && intermediate.is_hyperbolic()
        && !intermediate.is_triangular();

    Ok(Some(Factorization {
        blocks,
        q_degree: k as u32,
        r_degree,
        intermediate,
        q_branch_data,
        points,
        r_flexible,
    }))
}

/// All cycles including fixed points, each as a list of points.
fn cycles_with_fixed(s: &crate::perm::Permutation) -> Vec<Vec<usize>> {
    let mut seen = alloc::vec![false; s.degree()];
    let mut out = Vec::new();
    for start in 0..s.degree() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push(x);
            x = s.image(x);
        }
        out.push(cyc);
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Holonomy {
    Holonomy,
    /// Factors through a smaller flexible cover; the witness names it.
    NonHolonomy(Factorization),
}

impl Holonomy {
    pub fn is_holonomy(&self) -> bool {
        matches!(self, Holonomy::Holonomy)
    }

    pub fn witness(&self) -> Option<&Factorization> {
        match self {
            Holonomy::Holonomy => None,
            Holonomy::NonHolonomy(f) => Some(f),
        }
    }
}

/// A class is non-holonomy iff it factors through a flexible cover of
/// strictly smaller degree; the first such factorization is the witness.
pub fn holonomy_classify(c: &CoverClass) -> Result<Holonomy> {
    Ok(factorizations(c)?
        .into_iter()
        .find(|f| f.r_flexible && f.r_degree < c.degree)
        .map_or(Holonomy::Holonomy, Holonomy::NonHolonomy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::orbifold_area;

    fn sig(s: &str) -> Signature {
        Signature::parse(s).unwrap()
    }

    fn class(s: &str, d: usize, e: &[&str]) -> CoverClass {
        let t = MonodromyTuple::parse(TupleKind::SphereQuad, d, e).unwrap();
        CoverClass::from_tuple(&t, &sig(s)).unwrap()
    }

    #[test]
    fn degree_six_over_2224_factors_through_torus() {
        let t = MonodromyTuple::parse(
            TupleKind::SphereQuad,
            6,
            &["(02)(15)(34)", "(01)(24)(35)", "(03)(15)(24)", "(025341)"],
        )
        .unwrap();
        let fs = factorizations_of_tuple(&t, &sig("0:2,2,2,4")).unwrap();
        let f = fs.iter().find(|f| f.r_flexible).expect("a flexible factorization");
        assert_eq!(f.q_degree, 2);
        assert_eq!(f.intermediate, sig("1:2"));
        assert_eq!(orbifold_area(&f.intermediate), orbifold_area(&sig("0:2,2,2,4")) * 2);
    }

    #[test]
    fn cyclic_degree_six_class_is_not_holonomy() {
        let c = class("0:2,2,2,3", 6, &["(031)(245)", "(02)(15)(34)", "(02)(15)(34)", "(013)(254)"]);
        let h = holonomy_classify(&c).unwrap();
        let w = h.witness().expect("non-holonomy");
        assert_eq!((w.q_degree, w.r_degree), (2, 3));
        assert_eq!(w.intermediate, sig("0:2,2,3,3"));
    }

    #[test]
    fn order_24_class_is_holonomy() {
        let c = class("0:2,2,2,3", 6, &["(031)(245)", "(01)(24)(35)", "(01)(24)(35)", "(013)(254)"]);
        assert!(holonomy_classify(&c).unwrap().is_holonomy());
        assert!(factorizations(&c).unwrap().iter().all(|f| !f.r_flexible));
    }

    #[test]
    fn degree_three_is_primitive() {
        let c = class("0:2,2,3,3", 3, &["(012)", "(012)", "(021)", "(021)"]);
        assert!(factorizations(&c).unwrap().is_empty());
        assert!(holonomy_classify(&c).unwrap().is_holonomy());
    }

    #[test]
    fn degree_four_factorizations_are_not_flexible() {
        let c = class("0:2,2,2,4", 4, &["(0123)", "(02)(13)", "(02)(13)", "(0321)"]);
        assert!(holonomy_classify(&c).unwrap().is_holonomy());
    }
}
