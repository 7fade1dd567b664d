//! Local-degree profiles and exhaustive enumeration of monodromy tuples.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::orbifold::{genus_from_area, orbifold_area, PiMultiple, Signature};
use crate::perm::{
    canonicalize_tuple, elements_with_cycle_type, is_transitive, subgroup_summary, CycleType, GroupSummary,
    Permutation,
};
use crate::{Error, Result, COVER_GENUS};

/// Which surface-group relation a tuple satisfies.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TupleKind {
    /// `[s1, s2, s3, s4]` over a sphere with four points: `s1 s2 s3 = s4⁻¹`.
    SphereQuad,
    /// `[a, b, c]` over a torus with one point: `a b a⁻¹ b⁻¹ = c`.
    TorusTriple,
}

impl TupleKind {
    pub fn arity(self) -> usize {
        match self {
            TupleKind::SphereQuad => 4,
            TupleKind::TorusTriple => 3,
        }
    }

    pub fn for_signature(sig: &Signature) -> Result<Self> {
        match (sig.genus(), sig.point_count()) {
            (0, 4) => Ok(TupleKind::SphereQuad),
            (1, 1) => Ok(TupleKind::TorusTriple),
            _ => Err(Error::InvalidSignature(format!(
                "{sig}: only four-point spheres and one-point tori are supported"
            ))),
        }
    }

    /// Tuple index of the generator encircling orbifold point `point`.
    pub fn point_slot(self, point: usize) -> usize {
        match self {
            TupleKind::SphereQuad => point,
            TupleKind::TorusTriple => 2,
        }
    }
}

/// Permutation monodromy of a cover, one entry per generator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MonodromyTuple {
    kind: TupleKind,
    entries: Vec<Permutation>,
}

impl MonodromyTuple {
    /// Validates arity, common degree and the defining relation.
    pub fn new(kind: TupleKind, entries: Vec<Permutation>) -> Result<Self> {
        let t = Self::from_parts(kind, entries)?;
        if !t.satisfies_relation() {
            return Err(Error::InvalidInput(format!("{t} does not satisfy its {kind:?} relation")));
        }
        Ok(t)
    }

    /// Validates arity and common degree only.
    pub fn from_parts(kind: TupleKind, entries: Vec<Permutation>) -> Result<Self> {
        if entries.len() != kind.arity() {
            return Err(Error::InvalidInput(format!(
                "{kind:?} needs {} entries, got {}",
                kind.arity(),
                entries.len()
            )));
        }
        let d = entries[0].degree();
        if let Some(bad) = entries.iter().find(|e| e.degree() != d) {
            return Err(Error::DegreeMismatch { left: d, right: bad.degree() });
        }
        Ok(MonodromyTuple { kind, entries })
    }

    /// Parses entries written in cycle notation.
    pub fn parse(kind: TupleKind, degree: usize, entries: &[&str]) -> Result<Self> {
        let perms = entries.iter().map(|s| Permutation::parse(degree, s)).collect::<Result<Vec<_>>>()?;
        Self::new(kind, perms)
    }

    pub fn kind(&self) -> TupleKind {
        self.kind
    }

    pub fn entries(&self) -> &[Permutation] {
        &self.entries
    }

    pub fn degree(&self) -> usize {
        self.entries[0].degree()
    }

    pub fn satisfies_relation(&self) -> bool {
        let e = &self.entries;
        match self.kind {
            TupleKind::SphereQuad => {
                let lhs = e[0].compose_unchecked(&e[1].compose_unchecked(&e[2]));
                lhs == e[3].inverse()
            }
            TupleKind::TorusTriple => commutator(&e[0], &e[1]) == e[2],
        }
    }

    pub fn is_transitive(&self) -> bool {
        is_transitive(&self.entries, self.degree())
    }

    /// Least simultaneous conjugate; equal for conjugate tuples only.
    pub fn canonical(&self) -> MonodromyTuple {
        let entries = canonicalize_tuple(&self.entries).expect("entries share a degree");
        MonodromyTuple { kind: self.kind, entries }
    }

    pub fn is_conjugate_to(&self, other: &MonodromyTuple) -> bool {
        self.kind == other.kind && self.degree() == other.degree() && self.canonical() == other.canonical()
    }

    /// Monodromy around the orbifold point at `point` (signature order).
    pub fn point_monodromy(&self, point: usize) -> &Permutation {
        &self.entries[self.kind.point_slot(point)]
    }
}

/// `a b a⁻¹ b⁻¹`.
pub(crate) fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    a.compose_unchecked(&b.compose_unchecked(&a.inverse().compose_unchecked(&b.inverse())))
}

impl fmt::Display for MonodromyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// One cycle type per orbifold point: the local degrees over that point.
///
/// A part `L` over a point of order `r` is a regular preimage when `L = r`
/// and a cone point of angle `(2L/r)π` otherwise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LocalProfile {
    orders: Vec<u32>,
    parts: Vec<CycleType>,
}

impl LocalProfile {
    pub fn new(sig: &Signature, parts: Vec<CycleType>) -> Result<Self> {
        if parts.len() != sig.point_count() {
            return Err(Error::InvalidInput(format!(
                "{sig} has {} points but {} cycle types were given",
                sig.point_count(),
                parts.len()
            )));
        }
        Ok(LocalProfile { orders: sig.orders().to_vec(), parts })
    }

    /// The profile a tuple realizes.
    pub fn of_tuple(t: &MonodromyTuple, sig: &Signature) -> Result<Self> {
        let kind = TupleKind::for_signature(sig)?;
        if kind != t.kind() {
            return Err(Error::InvalidInput(format!("{:?} tuple over {sig}", t.kind())));
        }
        let parts = (0..sig.point_count()).map(|i| t.point_monodromy(i).cycle_type()).collect();
        Self::new(sig, parts)
    }

    pub fn parts(&self) -> &[CycleType] {
        &self.parts
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Cone angles of the covering surface, sorted.
    pub fn cone_angles(&self) -> Vec<PiMultiple> {
        let mut out = Vec::new();
        for (ct, &r) in self.parts.iter().zip(&self.orders) {
            for &l in ct.parts() {
                if l as u32 != r {
                    out.push(PiMultiple::new(2 * l as i64, r as i64));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Cone angles listed per orbifold point.
    pub fn cone_angles_by_point(&self) -> Vec<Vec<PiMultiple>> {
        self.parts
            .iter()
            .zip(&self.orders)
            .map(|(ct, &r)| {
                ct.parts()
                    .iter()
                    .filter(|&&l| l as u32 != r)
                    .map(|&l| PiMultiple::new(2 * l as i64, r as i64))
                    .collect()
            })
            .collect()
    }

    /// Canonical representative up to permuting points of equal order: within
    /// each run of equal orders, cycle types appear in decreasing order, so
    /// the point carrying cone points comes first.
    pub fn canonical(&self) -> LocalProfile {
        let mut parts = self.parts.clone();
        let mut start = 0;
        while start < parts.len() {
            let mut end = start + 1;
            while end < parts.len() && self.orders[end] == self.orders[start] {
                end += 1;
            }
            parts[start..end].sort_unstable_by(|a, b| b.cmp(a));
            start = end;
        }
        LocalProfile { orders: self.orders.clone(), parts }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Every distinct placement of these cycle types onto points of matching
    /// order. The canonical placement comes first.
    pub fn variants(&self) -> Vec<LocalProfile> {
        let base = self.canonical();
        let mut found = BTreeSet::new();
        let mut parts = base.parts.clone();
        permute_runs(&base.orders, &mut parts, 0, &mut found);
        let mut out: Vec<LocalProfile> =
            found.into_iter().map(|parts| LocalProfile { orders: base.orders.clone(), parts }).collect();
        out.sort_by(|a, b| b.parts.cmp(&a.parts));
        out
    }
}

fn permute_runs(
    orders: &[u32],
    parts: &mut Vec<CycleType>,
    pos: usize,
    found: &mut BTreeSet<Vec<CycleType>>,
) {
    if pos == parts.len() {
        found.insert(parts.clone());
        return;
    }
    for k in pos..parts.len() {
        if orders[k] != orders[pos] {
            break;
        }
        parts.swap(pos, k);
        permute_runs(orders, parts, pos + 1, found);
        parts.swap(pos, k);
    }
}

impl fmt::Display for LocalProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, ct) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{ct}")?;
        }
        f.write_str("]")
    }
}

/// Partitions of `total` into parts from `allowed` (ascending), each sorted
/// ascending.
fn partitions_with_parts(total: usize, allowed: &[usize]) -> Vec<Vec<usize>> {
    fn go(rest: usize, allowed: &[usize], from: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for (k, &p) in allowed.iter().enumerate().skip(from) {
            if p > rest {
                break;
            }
            acc.push(p);
            go(rest - p, allowed, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(total, allowed, 0, &mut Vec::new(), &mut out);
    out
}

/// Local degrees `L` allowed over a point of order `r` in a flexible cover:
/// `L = r`, or `L > r` when `r` is even.
fn allowed_local_degrees(r: u32, degree: u32) -> Vec<usize> {
    if r.is_multiple_of(2) {
        (r..=degree).map(|l| l as usize).collect()
    } else {
        vec![r as usize]
    }
}

/// All canonical local-degree profiles of flexible genus-2 covers of
/// `sig` of the given degree.
///
/// Derived from the constraints alone: every local degree is at least the
/// point order, cone points sit only over even orders, there is at least one
/// cone point, and the area identity forces genus 2.
pub fn allowed_profiles(sig: &Signature, degree: u32) -> Vec<LocalProfile> {
    let area = orbifold_area(sig) * degree as i64;
    if !area.is_positive() {
        return Vec::new();
    }
    let per_point: Vec<Vec<CycleType>> = sig
        .orders()
        .iter()
        .map(|&r| {
            partitions_with_parts(degree as usize, &allowed_local_degrees(r, degree))
                .into_iter()
                .map(|p| CycleType::new(p).expect("nonempty positive parts"))
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen: Vec<CycleType> = Vec::with_capacity(per_point.len());
    product(&per_point, &mut chosen, &mut |parts| {
        let profile = LocalProfile { orders: sig.orders().to_vec(), parts: parts.to_vec() };
        if !profile.is_canonical() {
            return;
        }
        let angles = profile.cone_angles();
        if angles.is_empty() {
            return;
        }
        if genus_from_area(&angles, area) == Ok(COVER_GENUS) {
            out.push(profile);
        }
    });
    out.sort();
    out
}

fn product(lists: &[Vec<CycleType>], acc: &mut Vec<CycleType>, visit: &mut dyn FnMut(&[CycleType])) {
    if acc.len() == lists.len() {
        visit(acc);
        return;
    }
    for ct in &lists[acc.len()] {
        acc.push(ct.clone());
        product(lists, acc, visit);
        acc.pop();
    }
}

/// Genus, cone angles and flexibility of the cover a tuple describes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverInvariants {
    pub genus: u32,
    /// Sorted; units of π.
    pub cone_angles: Vec<PiMultiple>,
    pub flexible: bool,
}

/// Derives the covering surface from the monodromy: a cycle of length `L`
/// over a point of order `r` has angle `(2L/r)π`, and the genus is solved from
/// the area identity `A(φ) = D·A(ψ)`.
pub fn cover_invariants(t: &MonodromyTuple, sig: &Signature) -> Result<CoverInvariants> {
    let profile = LocalProfile::of_tuple(t, sig)?;
    let cone_angles = profile.cone_angles();
    let area = orbifold_area(sig) * t.degree() as i64;
    let genus = genus_from_area(&cone_angles, area)?;
    let cones_ok = profile
        .parts
        .iter()
        .zip(&profile.orders)
        .all(|(ct, &r)| ct.parts().iter().all(|&l| l as u32 == r || (r % 2 == 0 && l as u32 > r)));
    let flexible = cones_ok && !cone_angles.is_empty() && sig.is_hyperbolic() && !sig.is_triangular();
    Ok(CoverInvariants { genus, cone_angles, flexible })
}

/// One conjugacy class of flexible genus-2 covers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverClass {
    /// Canonical representative.
    pub tuple: MonodromyTuple,
    pub signature: Signature,
    pub degree: u32,
    pub genus: u32,
    pub cone_angles: Vec<PiMultiple>,
    /// Positional profile realized by `tuple`.
    pub profile: LocalProfile,
    /// Canonical profile this class belongs to.
    pub base_profile: LocalProfile,
    pub group: GroupSummary,
    pub transitive: bool,
    pub flexible: bool,
}

impl CoverClass {
    pub fn from_tuple(t: &MonodromyTuple, sig: &Signature) -> Result<Self> {
        if !t.satisfies_relation() {
            return Err(Error::InvalidInput(format!("{t} does not satisfy its relation")));
        }
        let tuple = t.canonical();
        let inv = cover_invariants(&tuple, sig)?;
        let profile = LocalProfile::of_tuple(&tuple, sig)?;
        let base_profile = profile.canonical();
        let group = subgroup_summary(tuple.entries())?;
        Ok(CoverClass {
            transitive: tuple.is_transitive(),
            degree: tuple.degree() as u32,
            signature: sig.clone(),
            genus: inv.genus,
            cone_angles: inv.cone_angles,
            flexible: inv.flexible,
            profile,
            base_profile,
            group,
            tuple,
        })
    }

    /// Whether this class uses the canonical placement of its profile.
    pub fn is_canonical_variant(&self) -> bool {
        self.profile == self.base_profile
    }
}

/// Conjugacy classes of transitive tuples realizing exactly the positional
/// profile `profile`, sorted by canonical tuple.
pub fn enumerate_variant(sig: &Signature, degree: u32, profile: &LocalProfile) -> Result<Vec<CoverClass>> {
    let kind = TupleKind::for_signature(sig)?;
    if profile.orders() != sig.orders() {
        return Err(Error::InvalidInput(format!("profile {profile} does not fit {sig}")));
    }
    let d = degree as usize;
    let mut found: BTreeSet<Vec<Permutation>> = BTreeSet::new();
    match kind {
        TupleKind::SphereQuad => {
            let classes = profile
                .parts()
                .iter()
                .map(|ct| elements_with_cycle_type(ct, d))
                .collect::<Result<Vec<_>>>()?;
            let last_type = profile.parts()[3].parts();
            for s1 in &classes[0] {
                for s2 in &classes[1] {
                    let s12 = s1.compose_unchecked(s2);
                    for s3 in &classes[2] {
                        let s4 = s12.compose_unchecked(s3).inverse();
                        if !has_cycle_type(&s4, last_type) {
                            continue;
                        }
                        let entries = [*s1, *s2, *s3, s4];
                        if is_transitive(&entries, d) {
                            found.insert(canonicalize_tuple(&entries)?);
                        }
                    }
                }
            }
        }
        TupleKind::TorusTriple => {
            let target = profile.parts()[0].parts();
            let all: Vec<Permutation> = crate::perm::all_permutations(d).collect();
            for a in &all {
                for b in &all {
                    let c = commutator(a, b);
                    if !has_cycle_type(&c, target) {
                        continue;
                    }
                    let entries = [*a, *b, c];
                    if is_transitive(&entries, d) {
                        found.insert(canonicalize_tuple(&entries)?);
                    }
                }
            }
        }
    }
    found
        .into_iter()
        .map(|entries| {
            let t = MonodromyTuple::new(kind, entries)?;
            let class = CoverClass::from_tuple(&t, sig)?;
            check_class(&class)?;
            Ok(class)
        })
        .collect()
}

fn has_cycle_type(s: &Permutation, parts: &[usize]) -> bool {
    let mut lengths = s.cycle_lengths();
    lengths.sort_unstable();
    lengths == parts
}

fn check_class(c: &CoverClass) -> Result<()> {
    if c.genus != COVER_GENUS || !c.flexible || !c.transitive || c.cone_angles.is_empty() {
        return Err(Error::Inconsistency(format!(
            "enumerated class {} over {} has genus {}, flexible {}, transitive {}",
            c.tuple, c.signature, c.genus, c.flexible, c.transitive
        )));
    }
    Ok(())
}

/// All conjugacy classes of flexible genus-2 covers of `sig` of degree
/// `degree`, across every profile and every placement of it, sorted by
/// canonical tuple.
pub fn enumerate_cover_classes(sig: &Signature, degree: u32) -> Result<Vec<CoverClass>> {
    TupleKind::for_signature(sig)?;
    let mut out = Vec::new();
    for profile in allowed_profiles(sig, degree) {
        for variant in profile.variants() {
            out.extend(enumerate_variant(sig, degree, &variant)?);
        }
    }
    out.sort_by(|a, b| a.tuple.cmp(&b.tuple));
    Ok(out)
}
