//! Finite symmetric group primitives.
//!
//! Points are `0..degree` with `degree <= MAX_DEGREE`. A [`Permutation`] is a
//! fixed-size image array so it is `Copy` and cheap to compare, which matters
//! for the brute-force canonical forms below.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

pub const MAX_DEGREE: usize = 12;

/// A bijection of `{0, .., degree - 1}`.
///
/// Slots at and beyond `degree` hold their own index, so the derived
/// ordering compares degree first and then the image arrays
/// lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    degree: u8,
    images: [u8; MAX_DEGREE],
}

const fn identity_array() -> [u8; MAX_DEGREE] {
    let mut a = [0u8; MAX_DEGREE];
    let mut i = 0;
    while i < MAX_DEGREE {
        a[i] = i as u8;
        i += 1;
    }
    a
}

impl Permutation {
    /// # Panics
    /// If `degree > MAX_DEGREE`.
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Permutation { degree: degree as u8, images: identity_array() }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!("degree {degree} exceeds {MAX_DEGREE}")));
        }
        let mut seen = [false; MAX_DEGREE];
        let mut out = identity_array();
        for (i, &x) in images.iter().enumerate() {
            if x >= degree || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
            out[i] = x as u8;
        }
        Ok(Permutation { degree: degree as u8, images: out })
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!("degree {degree} exceeds {MAX_DEGREE}")));
        }
        let mut seen = [false; MAX_DEGREE];
        let mut out = identity_array();
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree || seen[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle {cycle:?} repeats a point or leaves 0..{degree}"
                    )));
                }
                seen[x] = true;
                out[x] = cycle[(k + 1) % cycle.len()] as u8;
            }
        }
        Ok(Permutation { degree: degree as u8, images: out })
    }

    /// Parses cycle notation such as `(0 1)(2 3)`, `(0123)` or `(0,3,1)`.
    ///
    /// Inside a cycle, points are separated by whitespace or commas. A cycle
    /// with no separators is read one digit per point. `()` and the empty
    /// string are the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body_start = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {text:?}")))?;
            let close = body_start
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {text:?}")))?;
            let body = body_start[..close].trim();
            rest = body_start[close + 1..].trim_start();

            let separated = body.contains(|c: char| c.is_whitespace() || c == ',');
            let mut cycle = Vec::new();
            if separated {
                for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                    if tok.is_empty() {
                        continue;
                    }
                    let p = tok
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad point {tok:?} in {text:?}")))?;
                    cycle.push(p);
                }
            } else {
                for ch in body.chars() {
                    let p = ch
                        .to_digit(10)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad point {ch:?} in {text:?}")))?;
                    cycle.push(p as usize);
                }
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        Self::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        debug_assert!(point < self.degree());
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images[..self.degree()]
    }

    pub fn images_vec(&self) -> Vec<usize> {
        self.images().iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images == identity_array()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_same_degree(self, other)?;
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        let mut out = identity_array();
        let d = self.degree();
        for (o, &y) in out[..d].iter_mut().zip(&other.images[..d]) {
            *o = self.images[y as usize];
        }
        Permutation { degree: self.degree, images: out }
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = identity_array();
        for x in 0..self.degree() {
            out[self.images[x] as usize] = x as u8;
        }
        Permutation { degree: self.degree, images: out }
    }

    /// `g ∘ self ∘ g⁻¹`, i.e. `self` with its points relabelled by `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        check_same_degree(self, g)?;
        Ok(self.conjugate_unchecked(g))
    }

    #[inline]
    pub(crate) fn conjugate_unchecked(&self, g: &Permutation) -> Permutation {
        let mut out = identity_array();
        for x in 0..self.degree() {
            out[g.images[x] as usize] = g.images[self.images[x] as usize];
        }
        Permutation { degree: self.degree, images: out }
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// All cycle lengths including fixed points.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.image(x);
            }
            out.push(len);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts = self.cycle_lengths();
        parts.sort_unstable();
        CycleType { parts }
    }

    pub fn order(&self) -> usize {
        self.cycle_lengths().into_iter().fold(1, lcm)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree, self)
    }
}

fn check_same_degree(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.degree != b.degree {
        return Err(Error::DegreeMismatch { left: a.degree(), right: b.degree() });
    }
    Ok(())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// `s ∘ t`.
pub fn compose(s: &Permutation, t: &Permutation) -> Result<Permutation> {
    s.compose(t)
}

/// Lexicographic iteration over all of `Sym(degree)`, starting at the identity.
pub fn all_permutations(degree: usize) -> AllPermutations {
    AllPermutations { next: Some(Permutation::identity(degree)) }
}

pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next?;
        let n = current.degree();
        let mut a = current.images;
        // next lexicographic arrangement of a[..n]
        let mut i = n;
        while i > 1 && a[i - 2] >= a[i - 1] {
            i -= 1;
        }
        if i <= 1 {
            self.next = None;
        } else {
            let pivot = i - 2;
            let mut j = n - 1;
            while a[j] <= a[pivot] {
                j -= 1;
            }
            a.swap(pivot, j);
            a[pivot + 1..n].reverse();
            self.next = Some(Permutation { degree: current.degree, images: a });
        }
        Some(current)
    }
}

/// Multiset of cycle lengths, fixed points included, sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidCycleType(format!("{parts:?} must be nonempty and positive")));
        }
        parts.sort_unstable();
        Ok(CycleType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `D! / ∏ λ_k · ∏ m_j!`, the size of the conjugacy class.
    pub fn class_size(&self) -> u64 {
        let d = self.degree() as u64;
        let mut denom: u64 = self.parts.iter().map(|&p| p as u64).product();
        let mut k = 0;
        while k < self.parts.len() {
            let mut m = 1;
            while k + m < self.parts.len() && self.parts[k + m] == self.parts[k] {
                m += 1;
            }
            denom *= factorial(m as u64);
            k += m;
        }
        factorial(d) / denom
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Every element of `Sym(degree)` with the given cycle type, sorted.
///
/// Built cycle by cycle: each new cycle starts at the least unused point, so
/// every element is produced exactly once.
pub fn elements_with_cycle_type(ct: &CycleType, degree: usize) -> Result<Vec<Permutation>> {
    if ct.degree() != degree {
        return Err(Error::InvalidCycleType(format!("{ct} does not sum to {degree}")));
    }
    if degree > MAX_DEGREE {
        return Err(Error::InvalidCycleType(format!("degree {degree} exceeds {MAX_DEGREE}")));
    }
    let mut counts = [0usize; MAX_DEGREE + 1];
    for &p in ct.parts() {
        counts[p] += 1;
    }
    let mut out = Vec::new();
    let mut state =
        Builder { degree, images: identity_array(), used: [false; MAX_DEGREE], counts, out: &mut out };
    state.next_cycle();
    out.sort_unstable();
    Ok(out)
}

struct Builder<'a> {
    degree: usize,
    images: [u8; MAX_DEGREE],
    used: [bool; MAX_DEGREE],
    counts: [usize; MAX_DEGREE + 1],
    out: &'a mut Vec<Permutation>,
}

impl Builder<'_> {
    fn next_cycle(&mut self) {
        let Some(start) = (0..self.degree).find(|&p| !self.used[p]) else {
            self.out.push(Permutation { degree: self.degree as u8, images: self.images });
            return;
        };
        for len in 1..=self.degree {
            if self.counts[len] == 0 {
                continue;
            }
            self.counts[len] -= 1;
            self.used[start] = true;
            let mut cycle = vec![start];
            self.extend_cycle(&mut cycle, len);
            self.used[start] = false;
            self.counts[len] += 1;
        }
    }

    fn extend_cycle(&mut self, cycle: &mut Vec<usize>, len: usize) {
        if cycle.len() == len {
            for k in 0..len {
                self.images[cycle[k]] = cycle[(k + 1) % len] as u8;
            }
            self.next_cycle();
            for &p in cycle.iter() {
                self.images[p] = p as u8;
            }
            return;
        }
        for p in 0..self.degree {
            if self.used[p] {
                continue;
            }
            self.used[p] = true;
            cycle.push(p);
            self.extend_cycle(cycle, len);
            cycle.pop();
            self.used[p] = false;
        }
    }
}

/// Isomorphism-class fingerprint of a permutation group plus a short label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupSummary {
    pub order: usize,
    /// Element orders, sorted ascending; one entry per element.
    pub element_orders: Vec<usize>,
    pub is_abelian: bool,
    pub is_cyclic: bool,
    pub label: String,
}

impl GroupSummary {
    /// `(order, element-order multiset, abelian)`: the invariant used to
    /// separate signature-equivalence classes.
    pub fn fingerprint(&self) -> (usize, &[usize], bool) {
        (self.order, &self.element_orders, self.is_abelian)
    }
}

/// All elements of the group generated by `gens`, sorted.
pub fn closure(gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let first = gens.first().ok_or_else(|| Error::InvalidInput("empty generator list".into()))?;
    for g in gens {
        check_same_degree(first, g)?;
    }
    let id = Permutation::identity(first.degree());
    let mut seen = BTreeSet::new();
    seen.insert(id);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose_unchecked(&x);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

pub fn subgroup_summary(gens: &[Permutation]) -> Result<GroupSummary> {
    let elements = closure(gens)?;
    let order = elements.len();
    let mut element_orders: Vec<usize> = elements.iter().map(Permutation::order).collect();
    element_orders.sort_unstable();
    let is_abelian =
        gens.iter().all(|a| gens.iter().all(|b| a.compose_unchecked(b) == b.compose_unchecked(a)));
    let is_cyclic = element_orders.last() == Some(&order);
    let label = group_label(order, &element_orders, is_abelian, is_cyclic);
    Ok(GroupSummary { order, element_orders, is_abelian, is_cyclic, label })
}

fn group_label(order: usize, element_orders: &[usize], abelian: bool, cyclic: bool) -> String {
    if cyclic {
        return format!("C{order}");
    }
    if abelian {
        return format!("abelian-order-{order}");
    }
    // dihedral fingerprint: a rotation of order n/2 and at least n/2 involutions
    let involutions = element_orders.iter().filter(|&&o| o == 2).count();
    let max = element_orders.last().copied().unwrap_or(1);
    if order.is_multiple_of(2) && max == order / 2 && involutions >= order / 2 {
        return format!("D{order}-style");
    }
    format!("order-{order}")
}

/// True iff the orbit of point 0 under `gens` is all of `0..degree`.
pub fn is_transitive(gens: &[Permutation], degree: usize) -> bool {
    if degree <= 1 {
        return true;
    }
    let mut seen = [false; MAX_DEGREE];
    seen[0] = true;
    let mut stack = vec![0usize];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == degree
}

/// A partition of `0..degree` into blocks of equal size.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockSystem {
    /// Each block sorted; blocks ordered by least element.
    blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let degree: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; degree];
        let size = blocks.first().map_or(0, Vec::len);
        for b in &mut blocks {
            b.sort_unstable();
            if b.len() != size || b.is_empty() {
                return Err(Error::InvalidInput(format!("blocks {blocks:?} are not of equal size")));
            }
            for &p in b.iter() {
                if p >= degree || seen[p] {
                    return Err(Error::InvalidInput(format!("blocks do not partition 0..{degree}")));
                }
                seen[p] = true;
            }
        }
        blocks.sort();
        Ok(BlockSystem { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn degree(&self) -> usize {
        self.block_count() * self.block_size()
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.blocks.iter().position(|b| b.binary_search(&point).is_ok()).expect("point outside the partition")
    }

    pub fn is_invariant_under(&self, s: &Permutation) -> bool {
        self.blocks.iter().all(|b| {
            let target = self.block_of(s.image(b[0]));
            b.iter().all(|&p| self.block_of(s.image(p)) == target)
        })
    }

    /// The permutation `s` induces on the blocks, or `None` if `s` does not
    /// preserve the system.
    pub fn induced(&self, s: &Permutation) -> Option<Permutation> {
        if !self.is_invariant_under(s) {
            return None;
        }
        let images: Vec<usize> = self.blocks.iter().map(|b| self.block_of(s.image(b[0]))).collect();
        Permutation::from_images(&images).ok()
    }
}

impl fmt::Debug for BlockSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.blocks)
    }
}

struct UnionFind {
    parent: [u8; MAX_DEGREE],
}

impl UnionFind {
    fn new() -> Self {
        UnionFind { parent: identity_array() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let up = self.parent[x] as usize;
            self.parent[x] = self.parent[up];
            x = up;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo as u8;
        true
    }
}

/// Finest block system in which all of `seed` lies in one block
/// (Atkinson's congruence closure).
fn minimal_block_system(gens: &[Permutation], degree: usize, seed: &[usize]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new();
    let mut pending = Vec::new();
    for &p in &seed[1..] {
        if uf.union(seed[0], p) {
            pending.push((seed[0], p));
        }
    }
    while let Some((a, b)) = pending.pop() {
        for g in gens {
            let (x, y) = (g.image(a), g.image(b));
            if uf.union(x, y) {
                pending.push((x, y));
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); degree];
    for p in 0..degree {
        let r = uf.find(p);
        classes[r].push(p);
    }
    classes.retain(|c| !c.is_empty());
    classes
}

/// All nontrivial block systems of a transitive group, ordered by block size
/// and then by blocks.
pub fn block_systems(gens: &[Permutation], degree: usize) -> Result<Vec<BlockSystem>> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch { left: g.degree(), right: degree });
        }
    }
    if !is_transitive(gens, degree) {
        return Err(Error::NotTransitive { degree });
    }
    let mut found: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = (1..degree).map(|j| vec![0, j]).collect();
    let mut tried: BTreeSet<Vec<usize>> = BTreeSet::new();
    while let Some(seed) = frontier.pop() {
        if !tried.insert(seed.clone()) {
            continue;
        }
        let system = minimal_block_system(gens, degree, &seed);
        if system.len() == 1 {
            continue;
        }
        let zero_block = system[0].clone();
        if found.insert(system) {
            for j in 0..degree {
                if zero_block.binary_search(&j).is_err() {
                    let mut next = zero_block.clone();
                    next.push(j);
                    next.sort_unstable();
                    frontier.push(next);
                }
            }
        }
    }
    let mut out: Vec<BlockSystem> =
        found.into_iter().map(|b| BlockSystem::new(b).expect("congruence classes")).collect();
    out.sort_by(|a, b| a.block_size().cmp(&b.block_size()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Lexicographically least simultaneous conjugate of `entries`, comparing the
/// concatenated image arrays, over all of `Sym(D)`.
pub fn canonicalize_tuple(entries: &[Permutation]) -> Result<Vec<Permutation>> {
    let Some(first) = entries.first() else {
        return Ok(Vec::new());
    };
    for e in entries {
        check_same_degree(first, e)?;
    }
    let mut best: Vec<Permutation> = entries.to_vec();
    let mut candidate: Vec<Permutation> = Vec::with_capacity(entries.len());
    for g in all_permutations(first.degree()) {
        candidate.clear();
        let mut ordering = Ordering::Equal;
        for (k, s) in entries.iter().enumerate() {
            let c = s.conjugate_unchecked(&g);
            if ordering == Ordering::Equal {
                ordering = c.images.cmp(&best[k].images);
                if ordering == Ordering::Greater {
                    break;
                }
            }
            candidate.push(c);
        }
        if ordering == Ordering::Less {
            core::mem::swap(&mut best, &mut candidate);
        }
    }
    Ok(best)
}

/// Some `g` with `g·a_i·g⁻¹ = b_i` for every `i`, if one exists.
pub fn conjugator(a: &[Permutation], b: &[Permutation]) -> Option<Permutation> {
    if a.len() != b.len() {
        return None;
    }
    let first = a.first()?;
    if a.iter().chain(b).any(|p| p.degree() != first.degree()) {
        return None;
    }
    all_permutations(first.degree()).find(|g| a.iter().zip(b).all(|(x, y)| x.conjugate_unchecked(g) == *y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: usize, s: &str) -> Permutation {
        Permutation::parse(d, s).unwrap()
    }

    #[test]
    fn transposition_squared_is_identity() {
        let t = p(2, "(01)");
        assert!(compose(&t, &t).unwrap().is_identity());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // (0123)(01) = (023) under s∘t
        assert_eq!(compose(&p(4, "(0123)"), &p(4, "(01)")).unwrap(), p(4, "(023)"));
    }

    #[test]
    fn degree_four_sphere_relation() {
        let s1 = p(4, "(0123)");
        let s2 = p(4, "(01)(23)");
        let inner = compose(&s2, &s2).unwrap();
        let lhs = compose(&s1, &inner).unwrap();
        assert_eq!(lhs, p(4, "(0123)"));
        assert_eq!(lhs, p(4, "(0321)").inverse());
    }

    #[test]
    fn degree_six_sphere_relation() {
        let s1 = p(6, "(02)(15)(34)");
        let s2 = p(6, "(01)(24)(35)");
        let s3 = p(6, "(03)(15)(24)");
        let lhs = compose(&s1, &compose(&s2, &s3).unwrap()).unwrap();
        assert_eq!(lhs, p(6, "(014352)"));
        assert_eq!(lhs, p(6, "(025341)").inverse());
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let err = compose(&p(3, "(01)"), &p(4, "(01)")).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn parse_and_display_round_trip() {
        let s = p(6, "(0 3 1)(2 4 5)");
        assert_eq!(s.to_string(), "(0 3 1)(2 4 5)");
        assert_eq!(p(6, "(031)(245)"), s);
        assert_eq!(p(6, "(0,3,1)(2,4,5)"), s);
        assert_eq!(p(3, "()").to_string(), "()");
        assert!(Permutation::parse(3, "(0 0)").is_err());
        assert!(Permutation::parse(3, "(0 3)").is_err());
        assert!(Permutation::parse(3, "(0 1").is_err());
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(&[0, 0, 1]).is_err());
        assert!(Permutation::from_images(&[0, 3, 1]).is_err());
        assert_eq!(Permutation::from_images(&[1, 0, 3, 2]).unwrap(), p(4, "(01)(23)"));
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(6).cycle_type().parts(), &[1, 1, 1, 1, 1, 1]);
        assert_eq!(p(6, "(01)(23)(45)").cycle_type().parts(), &[2, 2, 2]);
        assert_eq!(p(6, "(0145)(23)").cycle_type().parts(), &[2, 4]);
    }

    #[test]
    fn three_cycles_of_sym3() {
        let ct = CycleType::new(vec![3]).unwrap();
        let els = elements_with_cycle_type(&ct, 3).unwrap();
        assert_eq!(els, vec![p(3, "(012)"), p(3, "(021)")]);
    }

    #[test]
    fn cycle_type_class_sizes() {
        let ct = |v: &[usize]| CycleType::new(v.to_vec()).unwrap();
        assert_eq!(elements_with_cycle_type(&ct(&[2, 2, 2]), 6).unwrap().len(), 15);
        assert_eq!(elements_with_cycle_type(&ct(&[3, 3]), 6).unwrap().len(), 40);
        assert_eq!(ct(&[2, 2, 2]).class_size(), 15);
        assert_eq!(ct(&[3, 3]).class_size(), 40);
        assert_eq!(ct(&[2, 4]).class_size(), 90);
        assert_eq!(ct(&[6]).class_size(), 120);
    }

    #[test]
    fn malformed_cycle_type() {
        assert!(CycleType::new(vec![]).is_err());
        assert!(CycleType::new(vec![0, 3]).is_err());
        let ct = CycleType::new(vec![3]).unwrap();
        assert!(elements_with_cycle_type(&ct, 4).is_err());
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(all_permutations(0).count(), 1);
        assert_eq!(all_permutations(1).count(), 1);
        assert_eq!(all_permutations(4).count(), 24);
        let v: Vec<_> = all_permutations(6).collect();
        assert_eq!(v.len(), 720);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    fn gens(d: usize, list: &[&str]) -> Vec<Permutation> {
        list.iter().map(|s| p(d, s)).collect()
    }

    #[test]
    fn summaries_of_reference_groups() {
        let c4 = subgroup_summary(&gens(4, &["(0123)", "(02)(13)", "(02)(13)", "(0321)"])).unwrap();
        assert_eq!((c4.order, c4.is_cyclic), (4, true));
        assert_eq!(c4.label, "C4");

        let t1 = gens(6, &["(031)(245)", "(02)(15)(34)", "(02)(15)(34)", "(013)(254)"]);
        let s = subgroup_summary(&t1).unwrap();
        assert_eq!((s.order, s.is_cyclic), (6, true));

        let t8 = gens(6, &["(031)(245)", "(04)(15)(23)", "(04)(15)(23)", "(013)(254)"]);
        let s = subgroup_summary(&t8).unwrap();
        assert_eq!((s.order, s.is_abelian, s.is_cyclic), (6, false, false));
        assert_eq!(s.label, "D6-style");

        let t2 = gens(6, &["(031)(245)", "(01)(24)(35)", "(01)(24)(35)", "(013)(254)"]);
        let s = subgroup_summary(&t2).unwrap();
        assert_eq!(s.order, 24);
        assert_eq!(s.element_orders.len(), 24);
    }

    #[test]
    fn transitivity() {
        assert!(is_transitive(&gens(4, &["(0123)"]), 4));
        assert!(!is_transitive(&gens(4, &["(01)", "(23)"]), 4));
        assert!(is_transitive(&gens(3, &["(012)", "(01)"]), 3));
    }

    #[test]
    fn block_systems_of_cyclic_four() {
        let systems = block_systems(&gens(4, &["(0123)"]), 4).unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].blocks(), &[vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn block_systems_reject_intransitive_input() {
        assert_eq!(
            block_systems(&gens(4, &["(01)", "(23)"]), 4).unwrap_err(),
            Error::NotTransitive { degree: 4 }
        );
    }

    #[test]
    fn cyclic_six_has_triple_blocks() {
        let t1 = gens(6, &["(031)(245)", "(02)(15)(34)", "(02)(15)(34)", "(013)(254)"]);
        let systems = block_systems(&t1, 6).unwrap();
        let triples = BlockSystem::new(vec![vec![0, 3, 1], vec![2, 4, 5]]).unwrap();
        assert!(systems.contains(&triples));
        let t2 = gens(6, &["(031)(245)", "(01)(24)(35)", "(01)(24)(35)", "(013)(254)"]);
        assert!(block_systems(&t2, 6).unwrap().iter().all(|b| b.block_size() != 3));
    }

    #[test]
    fn induced_block_action() {
        let b = BlockSystem::new(vec![vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(b.induced(&p(4, "(0123)")).unwrap(), p(2, "(01)"));
        assert!(b.induced(&p(4, "(01)")).is_none());
    }

    #[test]
    fn canonical_form_of_identities() {
        let id = Permutation::identity(5);
        assert_eq!(canonicalize_tuple(&[id, id, id]).unwrap(), vec![id, id, id]);
    }

    #[test]
    fn conjugate_torus_tuples_share_canonical_form() {
        let a = gens(3, &["(021)", "(01)", "(012)"]);
        let b = gens(3, &["(012)", "(02)", "(021)"]);
        assert_eq!(canonicalize_tuple(&a).unwrap(), canonicalize_tuple(&b).unwrap());
        let g = conjugator(&a, &b).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.conjugate_by(&g).unwrap(), *y);
        }
    }
}
