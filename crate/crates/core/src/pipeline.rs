//! End-to-end analysis of one (signature, degree) case: profiles, classes,
//! orbits and holonomy flags.

use alloc::format;
use alloc::vec::Vec;

use crate::enumerate::{allowed_profiles, enumerate_cover_classes, CoverClass, LocalProfile};
use crate::factor::{holonomy_classify, Holonomy};
use crate::mcg::{signature_orbits_with, MoveTables, SignatureClass};
use crate::orbifold::Signature;
use crate::{Error, Result};

pub use crate::orbifold::surviving_pairs;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitAnalysis {
    pub class: SignatureClass,
    pub holonomy: Holonomy,
}

impl OrbitAnalysis {
    pub fn base_profile(&self) -> &LocalProfile {
        &self.class.representative.base_profile
    }
}

/// Per canonical profile: class counts in the canonical placement, over all
/// placements, and the number of orbits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProfileCounts {
    pub profile: LocalProfile,
    pub canonical_variant_classes: usize,
    pub all_variant_classes: usize,
    pub orbits: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CaseAnalysis {
    pub signature: Signature,
    pub degree: u32,
    pub profiles: Vec<LocalProfile>,
    /// Every conjugacy class over every placement, sorted by canonical tuple.
    pub classes: Vec<CoverClass>,
    pub orbits: Vec<OrbitAnalysis>,
}

impl CaseAnalysis {
    pub fn profile_counts(&self) -> Vec<ProfileCounts> {
        self.profiles
            .iter()
            .map(|p| ProfileCounts {
                profile: p.clone(),
                canonical_variant_classes: self.classes.iter().filter(|c| c.profile == *p).count(),
                all_variant_classes: self.classes.iter().filter(|c| c.base_profile == *p).count(),
                orbits: self.orbits.iter().filter(|o| o.base_profile() == p).count(),
            })
            .collect()
    }

    pub fn holonomy_orbits(&self) -> usize {
        self.orbits.iter().filter(|o| o.holonomy.is_holonomy()).count()
    }
}

/// Runs profiles → enumeration → orbits → holonomy for one case.
///
/// Every member of an orbit is classified, and the flags must agree.
pub fn analyze_case(sig: &Signature, degree: u32, tables: &MoveTables) -> Result<CaseAnalysis> {
    let profiles = allowed_profiles(sig, degree);
    let classes = enumerate_cover_classes(sig, degree)?;
    let orbits = signature_orbits_with(tables, &classes, sig)?
        .into_iter()
        .map(|class| {
            let holonomy = holonomy_classify(&class.representative)?;
            for member in &class.members {
                let c = classes
                    .iter()
                    .find(|c| c.tuple == *member)
                    .ok_or_else(|| Error::Inconsistency(format!("orbit member {member} not enumerated")))?;
                if holonomy_classify(c)?.is_holonomy() != holonomy.is_holonomy() {
                    return Err(Error::Inconsistency(format!(
                        "holonomy flag differs between {} and {member}",
                        class.representative.tuple
                    )));
                }
            }
            Ok(OrbitAnalysis { class, holonomy })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CaseAnalysis { signature: sig.clone(), degree, profiles, classes, orbits })
}

/// Every surviving case, in table order.
pub fn analyze_all(tables: &MoveTables) -> Result<Vec<CaseAnalysis>> {
    surviving_pairs().iter().map(|(s, d)| analyze_case(s, *d, tables)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals() {
        let cases = analyze_all(&MoveTables::standard()).unwrap();
        let orbits: usize = cases.iter().map(|c| c.orbits.len()).sum();
        let holonomy: usize = cases.iter().map(CaseAnalysis::holonomy_orbits).sum();
        assert_eq!((orbits, holonomy), (12, 9));
    }
}
