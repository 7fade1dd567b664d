//! Serializable views of pipeline results. Every top-level document carries
//! `"schema": 1`; permutations are image arrays, angles and areas are exact
//! fractions of π.

use orbicover_core::factor::Factorization;
use orbicover_core::orbifold::CandidateRow;
use orbicover_core::pipeline::{CaseAnalysis, OrbitAnalysis};
use orbicover_core::{
    CoverClass, GroupSummary, Holonomy, LocalProfile, MonodromyTuple, PiMultiple, Signature,
};
use serde::Serialize;

use crate::report::{Discrepancy, PipelineReport};
use crate::verify::VerifyReport;

pub const SCHEMA: u32 = 1;

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct SignatureJson {
    pub genus: u32,
    pub orders: Vec<u32>,
}

impl From<&Signature> for SignatureJson {
    fn from(s: &Signature) -> Self {
        SignatureJson { genus: s.genus(), orders: s.orders().to_vec() }
    }
}

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
pub struct PiJson {
    pub num: i64,
    pub den: i64,
}

impl From<PiMultiple> for PiJson {
    fn from(p: PiMultiple) -> Self {
        PiJson { num: p.numer(), den: p.denom() }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct GroupJson {
    pub order: usize,
    pub abelian: bool,
    pub cyclic: bool,
    pub label: String,
}

impl From<&GroupSummary> for GroupJson {
    fn from(g: &GroupSummary) -> Self {
        GroupJson { order: g.order, abelian: g.is_abelian, cyclic: g.is_cyclic, label: g.label.clone() }
    }
}

fn images(t: &MonodromyTuple) -> Vec<Vec<usize>> {
    t.entries().iter().map(|p| p.images_vec()).collect()
}

fn cycles(t: &MonodromyTuple) -> Vec<String> {
    t.entries().iter().map(|p| p.to_string()).collect()
}

fn profile(p: &LocalProfile) -> Vec<Vec<usize>> {
    p.parts().iter().map(|c| c.parts().to_vec()).collect()
}

#[derive(Serialize, Clone, Debug)]
pub struct ClassJson {
    pub signature: SignatureJson,
    pub degree: u32,
    pub tuple: Vec<Vec<usize>>,
    pub tuple_cycles: Vec<String>,
    pub cone_angles_pi: Vec<PiJson>,
    pub genus: u32,
    pub group: GroupJson,
    pub profile: Vec<Vec<usize>>,
    pub base_profile: Vec<Vec<usize>>,
}

impl From<&CoverClass> for ClassJson {
    fn from(c: &CoverClass) -> Self {
        ClassJson {
            signature: (&c.signature).into(),
            degree: c.degree,
            tuple: images(&c.tuple),
            tuple_cycles: cycles(&c.tuple),
            cone_angles_pi: c.cone_angles.iter().map(|&a| a.into()).collect(),
            genus: c.genus,
            group: (&c.group).into(),
            profile: profile(&c.profile),
            base_profile: profile(&c.base_profile),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct WitnessJson {
    pub blocks: Vec<Vec<usize>>,
    pub intermediate: SignatureJson,
    pub q_degree: u32,
    pub r_degree: u32,
}

impl From<&Factorization> for WitnessJson {
    fn from(f: &Factorization) -> Self {
        WitnessJson {
            blocks: f.blocks.blocks().to_vec(),
            intermediate: (&f.intermediate).into(),
            q_degree: f.q_degree,
            r_degree: f.r_degree,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct HolonomyJson {
    pub holonomy: bool,
    pub witness: Option<WitnessJson>,
}

impl From<&Holonomy> for HolonomyJson {
    fn from(h: &Holonomy) -> Self {
        HolonomyJson { holonomy: h.is_holonomy(), witness: h.witness().map(Into::into) }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct OrbitJson {
    pub representative: ClassJson,
    pub members: Vec<Vec<String>>,
    pub group: GroupJson,
    pub holonomy: HolonomyJson,
}

impl From<&OrbitAnalysis> for OrbitJson {
    fn from(o: &OrbitAnalysis) -> Self {
        OrbitJson {
            representative: (&o.class.representative).into(),
            members: o.class.members.iter().map(cycles).collect(),
            group: (&o.class.group).into(),
            holonomy: (&o.holonomy).into(),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ProfileCountJson {
    pub profile: Vec<Vec<usize>>,
    pub canonical_variant_classes: usize,
    pub all_variant_classes: usize,
    pub orbits: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct CaseJson {
    pub signature: SignatureJson,
    pub degree: u32,
    pub profiles: Vec<ProfileCountJson>,
    pub classes: Vec<ClassJson>,
    pub orbits: Vec<OrbitJson>,
}

impl From<&CaseAnalysis> for CaseJson {
    fn from(c: &CaseAnalysis) -> Self {
        CaseJson {
            signature: (&c.signature).into(),
            degree: c.degree,
            profiles: c
                .profile_counts()
                .iter()
                .map(|p| ProfileCountJson {
                    profile: profile(&p.profile),
                    canonical_variant_classes: p.canonical_variant_classes,
                    all_variant_classes: p.all_variant_classes,
                    orbits: p.orbits,
                })
                .collect(),
            classes: c.classes.iter().map(Into::into).collect(),
            orbits: c.orbits.iter().map(Into::into).collect(),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct CandidateJson {
    pub signature: SignatureJson,
    pub degrees: Vec<u32>,
    pub area_pi: PiJson,
}

impl From<&CandidateRow> for CandidateJson {
    fn from(r: &CandidateRow) -> Self {
        CandidateJson { signature: (&r.signature).into(), degrees: r.degrees.clone(), area_pi: r.area.into() }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ExclusionJson {
    pub signature: SignatureJson,
    pub degree: u32,
    pub kept: bool,
    pub reason: Option<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct DiscrepancyJson {
    pub topic: String,
    pub printed: String,
    pub derived: String,
    pub resolution: String,
}

impl From<&Discrepancy> for DiscrepancyJson {
    fn from(d: &Discrepancy) -> Self {
        DiscrepancyJson {
            topic: d.topic.clone(),
            printed: d.printed.clone(),
            derived: d.derived.clone(),
            resolution: d.resolution.clone(),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ReportJson {
    pub schema: u32,
    pub candidates: Vec<CandidateJson>,
    pub exclusions: Vec<ExclusionJson>,
    pub cases: Vec<CaseJson>,
    pub signature_classes: usize,
    pub final_orbits: usize,
    pub discrepancies: Vec<DiscrepancyJson>,
}

pub fn report(r: &PipelineReport) -> ReportJson {
    ReportJson {
        schema: SCHEMA,
        candidates: r.table.iter().map(Into::into).collect(),
        exclusions: r
            .exclusions
            .iter()
            .map(|e| ExclusionJson {
                signature: (&e.signature).into(),
                degree: e.degree,
                kept: e.exclusion.is_kept(),
                reason: match &e.exclusion {
                    orbicover_core::Exclusion::Kept => None,
                    orbicover_core::Exclusion::Excluded(why) => Some(why.clone()),
                },
            })
            .collect(),
        cases: r.cases.iter().map(Into::into).collect(),
        signature_classes: r.signature_class_count(),
        final_orbits: r.final_orbit_count(),
        discrepancies: r.discrepancies.iter().map(Into::into).collect(),
    }
}

/// Wraps any payload with the schema tag.
#[derive(Serialize, Clone, Debug)]
pub struct Tagged<T: Serialize> {
    pub schema: u32,
    #[serde(flatten)]
    pub body: T,
}

pub fn tagged<T: Serialize>(body: T) -> Tagged<T> {
    Tagged { schema: SCHEMA, body }
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckJson {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct VerifyJson {
    pub schema: u32,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

pub fn verify(v: &VerifyReport) -> VerifyJson {
    VerifyJson {
        schema: SCHEMA,
        passed: v.passed(),
        checks: v
            .checks
            .iter()
            .map(|c| CheckJson {
                name: c.name.clone(),
                status: c.outcome.to_string().to_lowercase(),
                detail: c.detail.clone(),
            })
            .collect(),
    }
}
