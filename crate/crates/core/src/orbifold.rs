//! Orbifold signatures, exact area arithmetic, and the filters that cut the
//! search down to a finite table of (signature, degree) candidates.
//!
//! Areas and angles are exact rational multiples of π; see [`PiMultiple`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_rational::Ratio;

use crate::{Error, Result};

/// Smallest and largest degree a flexible genus-2 cover can have.
pub const MIN_DEGREE: u32 = 3;
pub const MAX_DEGREE: u32 = 12;

/// Area of the closed genus-2 surface without cone points, in units of π.
const SURFACE_AREA_BOUND: i64 = 4;

/// `q·π` for an exact rational `q`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PiMultiple(pub Ratio<i64>);

impl PiMultiple {
    pub const ZERO: PiMultiple = PiMultiple(Ratio::new_raw(0, 1));

    pub fn new(num: i64, den: i64) -> Self {
        PiMultiple(Ratio::new(num, den))
    }

    pub fn integer(n: i64) -> Self {
        PiMultiple(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.numer() > 0
    }
}

impl Add for PiMultiple {
    type Output = PiMultiple;
    fn add(self, rhs: Self) -> Self {
        PiMultiple(self.0 + rhs.0)
    }
}

impl Sub for PiMultiple {
    type Output = PiMultiple;
    fn sub(self, rhs: Self) -> Self {
        PiMultiple(self.0 - rhs.0)
    }
}

impl Mul<i64> for PiMultiple {
    type Output = PiMultiple;
    fn mul(self, rhs: i64) -> Self {
        PiMultiple(self.0 * rhs)
    }
}

/// `π/3`, `2π/3`, `3π`, `-π`, `0`.
impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = (self.numer(), self.denom());
        if n == 0 {
            return f.write_str("0");
        }
        match n {
            1 => f.write_str("π")?,
            -1 => f.write_str("-π")?,
            _ => write!(f, "{n}π")?,
        }
        if d != 1 {
            write!(f, "/{d}")?;
        }
        Ok(())
    }
}

/// `(g; r_1, .., r_m)` with orders sorted ascending.
///
/// Ordered by genus, then number of points, then colexicographically on the
/// orders (largest order first), which lists
/// `(0;2,2,2,3) < (0;2,2,3,3) < (0;2,3,3,3) < (0;2,2,2,4)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Signature {
    genus: u32,
    orders: Vec<u32>,
}

impl Ord for Signature {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.genus
            .cmp(&other.genus)
            .then(self.orders.len().cmp(&other.orders.len()))
            .then_with(|| self.orders.iter().rev().cmp(other.orders.iter().rev()))
    }
}

impl PartialOrd for Signature {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Signature {
    pub fn new(genus: u32, mut orders: Vec<u32>) -> Result<Self> {
        if let Some(bad) = orders.iter().find(|&&r| r < 2) {
            return Err(Error::InvalidSignature(format!("point order {bad} is below 2")));
        }
        orders.sort_unstable();
        Ok(Signature { genus, orders })
    }

    /// Accepts `0:2,2,2,3` and `(0;2,2,2,3)`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidSignature(format!("cannot parse {text:?}; expected <genus>:<r1>,<r2>,.."));
        let t = text.trim();
        let t = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
        let (g, rest) = t.split_once([':', ';']).ok_or_else(bad)?;
        let genus = g.trim().parse::<u32>().map_err(|_| bad())?;
        let mut orders = Vec::new();
        for tok in rest.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            orders.push(tok.parse::<u32>().map_err(|_| bad())?);
        }
        Signature::new(genus, orders)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn point_count(&self) -> usize {
        self.orders.len()
    }

    pub fn is_hyperbolic(&self) -> bool {
        orbifold_area(self).is_positive()
    }

    /// Sphere with exactly three orbifold points; such orbifolds are rigid.
    pub fn is_triangular(&self) -> bool {
        self.genus == 0 && self.orders.len() == 3
    }

    pub fn largest_even_order(&self) -> Option<u32> {
        self.orders.iter().rev().copied().find(|r| r % 2 == 0)
    }

    pub fn even_order_count(&self) -> usize {
        self.orders.iter().filter(|&&r| r % 2 == 0).count()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.genus)?;
        for (k, r) in self.orders.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

/// Genus and cone angles of a cone surface.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConeData {
    pub genus: u32,
    /// Sorted ascending.
    pub angles: Vec<PiMultiple>,
}

impl ConeData {
    pub fn new(genus: u32, mut angles: Vec<PiMultiple>) -> Result<Self> {
        if angles.iter().any(|a| !a.is_positive()) {
            return Err(Error::InvalidInput("cone angles must be positive".into()));
        }
        angles.sort_unstable();
        Ok(ConeData { genus, angles })
    }

    /// Every angle exceeds 2π and there is at least one cone point.
    pub fn is_negatively_curved(&self) -> bool {
        !self.angles.is_empty() && self.angles.iter().all(|a| *a > PiMultiple::integer(2))
    }
}

/// `−2π(2 − 2g − Σ(1 − 1/r_i))`.
pub fn orbifold_area(sig: &Signature) -> PiMultiple {
    let mut chi = Ratio::from_integer(2 - 2 * sig.genus as i64);
    for &r in sig.orders() {
        chi -= Ratio::new(r as i64 - 1, r as i64);
    }
    PiMultiple(chi * -2)
}

/// `−2π(2 − 2h − Σ(1 − Θ_i/2π))`.
pub fn cone_surface_area(c: &ConeData) -> PiMultiple {
    let mut chi = Ratio::from_integer(2 - 2 * c.genus as i64);
    for a in &c.angles {
        chi -= Ratio::from_integer(1) - a.0 / 2;
    }
    PiMultiple(chi * -2)
}

/// Solves the cone-surface area formula for the genus, given the angles and
/// the area. Errors if the result is not a non-negative integer.
pub fn genus_from_area(angles: &[PiMultiple], area: PiMultiple) -> Result<u32> {
    let mut twice_h = Ratio::from_integer(2) + area.0 / 2;
    for a in angles {
        twice_h -= Ratio::from_integer(1) - a.0 / 2;
    }
    let h = twice_h / 2;
    if !h.is_integer() || *h.numer() < 0 {
        return Err(Error::Inconsistency(format!(
            "angles {angles:?} with area {area} give non-integral genus {h}"
        )));
    }
    Ok(*h.numer() as u32)
}

/// Upper bound on the number of cone points of a genus-`h` flexible cover of
/// degree `degree`: `⌊−r(A·D − 4h + 4)/2⌋` with `r` the largest even order and
/// `A` the orbifold area over π. Clamped at zero.
pub fn max_cone_points(sig: &Signature, degree: u32, h: u32) -> Result<u32> {
    let r = sig
        .largest_even_order()
        .ok_or_else(|| Error::InvalidInput(format!("{sig} has no even order point to carry cone points")))?;
    let a = orbifold_area(sig).0;
    let inner = a * degree as i64 - Ratio::from_integer(4 * h as i64) + Ratio::from_integer(4);
    let value = (inner * -(r as i64) / 2).floor();
    Ok((*value.numer()).max(0) as u32)
}

/// Orbifold shapes `(g, m)` that a genus-2 surface can flexibly cover.
const SHAPES: [(u32, usize); 3] = [(0, 4), (0, 5), (1, 1)];

/// All `(signature, degree)` pairs passing the order bound, odd-order
/// divisibility and area inequality `0 < D·A(ψ) < 4π`, sorted by signature
/// then degree.
pub fn candidate_signatures() -> Vec<(Signature, u32)> {
    let mut out = Vec::new();
    for (genus, m) in SHAPES {
        let mut orders = Vec::with_capacity(m);
        nondecreasing_orders(m, 2, &mut orders, &mut |orders| {
            let sig = Signature { genus, orders: orders.to_vec() };
            let area = orbifold_area(&sig);
            for d in MIN_DEGREE..=MAX_DEGREE {
                let total = area * d as i64;
                let fits = orders.iter().all(|&r| r <= d && (r % 2 == 0 || d % r == 0));
                if fits && total.is_positive() && total < PiMultiple::integer(SURFACE_AREA_BOUND) {
                    out.push((sig.clone(), d));
                }
            }
        });
    }
    out.sort();
    out
}

fn nondecreasing_orders(m: usize, min: u32, acc: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if acc.len() == m {
        visit(acc);
        return;
    }
    for r in min..=MAX_DEGREE {
        acc.push(r);
        nondecreasing_orders(m, r, acc, visit);
        acc.pop();
    }
}

/// One row of the candidate table: a signature with all admissible degrees.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CandidateRow {
    pub signature: Signature,
    pub degrees: Vec<u32>,
    pub area: PiMultiple,
}

pub fn candidate_table() -> Vec<CandidateRow> {
    let mut rows: Vec<CandidateRow> = Vec::new();
    for (sig, d) in candidate_signatures() {
        match rows.last_mut() {
            Some(row) if row.signature == sig => row.degrees.push(d),
            _ => {
                let area = orbifold_area(&sig);
                rows.push(CandidateRow { signature: sig, degrees: alloc::vec![d], area });
            }
        }
    }
    rows
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Exclusion {
    Kept,
    Excluded(String),
}

impl Exclusion {
    pub fn is_kept(&self) -> bool {
        matches!(self, Exclusion::Kept)
    }
}

/// An odd-degree cover has, over every even order point, at least one
/// cycle whose length is not a multiple of 2 — which over an order-2 point
/// (or any even order) must be a cone point. If there are fewer cone points
/// available than even order points, the pair is impossible.
pub fn parity_exclusion(sig: &Signature, degree: u32) -> Exclusion {
    if degree.is_multiple_of(2) {
        return Exclusion::Kept;
    }
    let evens = sig.even_order_count();
    match max_cone_points(sig, degree, 2) {
        Err(_) => Exclusion::Excluded(format!("{sig} has no even order point")),
        Ok(n) if (n as usize) < evens => Exclusion::Excluded(format!(
            "odd degree {degree} needs a cone point over each of the {evens} even order points of {sig}, but at most {n} fit"
        )),
        Ok(_) => Exclusion::Kept,
    }
}

/// Candidate pairs that survive [`parity_exclusion`].
pub fn surviving_pairs() -> Vec<(Signature, u32)> {
    candidate_signatures().into_iter().filter(|(s, d)| parity_exclusion(s, *d).is_kept()).collect()
}
