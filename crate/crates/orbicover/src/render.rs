//! Plain-text and CSV rendering.

use std::fmt::Write as _;

use orbicover_core::pipeline::CaseAnalysis;
use orbicover_core::{CoverClass, Exclusion, Holonomy};

use crate::report::{case_cone_summaries, PipelineReport};
use crate::verify::VerifyReport;

pub fn candidates_text(r: &PipelineReport) -> String {
    let mut out = String::from("signature        area   degrees\n");
    for row in &r.table {
        let degrees = row.degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(", ");
        let _ = writeln!(out, "{:<16} {:<6} {degrees}", row.signature.to_string(), row.area.to_string());
    }
    out.push('\n');
    for e in &r.exclusions {
        if let Exclusion::Excluded(why) = &e.exclusion {
            let _ = writeln!(out, "excluded {}/{}: {why}", e.signature, e.degree);
        }
    }
    out
}

fn class_line(c: &CoverClass) -> String {
    let angles = c.cone_angles.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ");
    format!("{}  profile {}  angles [{angles}]  group {}", c.tuple, c.profile, c.group.label)
}

pub fn classes_text(case: &CaseAnalysis) -> String {
    let mut out =
        format!("{} degree {}: {} conjugacy classes\n", case.signature, case.degree, case.classes.len());
    for p in case.profile_counts() {
        let _ = writeln!(
            out,
            "  profile {}: {} in canonical placement, {} over all placements",
            p.profile, p.canonical_variant_classes, p.all_variant_classes
        );
    }
    for c in &case.classes {
        let _ = writeln!(out, "  {}", class_line(c));
    }
    out
}

fn holonomy_text(h: &Holonomy) -> String {
    match h {
        Holonomy::Holonomy => "holonomy".into(),
        Holonomy::NonHolonomy(w) => format!(
            "non-holonomy: degree {} through {} (blocks {:?})",
            w.q_degree,
            w.intermediate,
            w.blocks.blocks()
        ),
    }
}

pub fn orbits_text(case: &CaseAnalysis) -> String {
    let mut out = format!("{} degree {}: {} orbits\n", case.signature, case.degree, case.orbits.len());
    for (k, o) in case.orbits.iter().enumerate() {
        let _ = writeln!(
            out,
            "  orbit {}: {} members, group {} (order {}), {}",
            k + 1,
            o.class.members.len(),
            o.class.group.label,
            o.class.group.order,
            holonomy_text(&o.holonomy)
        );
        for m in &o.class.members {
            let _ = writeln!(out, "    {m}");
        }
    }
    out
}

pub fn classify_text(case: &CaseAnalysis) -> String {
    let mut out = String::new();
    for o in &case.orbits {
        let _ = writeln!(
            out,
            "{} degree {}  {}  {}",
            case.signature,
            case.degree,
            o.class.representative.tuple,
            holonomy_text(&o.holonomy)
        );
    }
    out
}

pub fn report_text(r: &PipelineReport) -> String {
    let mut out = candidates_text(r);
    out.push('\n');
    for case in &r.cases {
        let _ = writeln!(
            out,
            "{} degree {}: {}",
            case.signature,
            case.degree,
            case_cone_summaries(case).join(" or ")
        );
    }
    out.push('\n');
    for case in &r.cases {
        out.push_str(&orbits_text(case));
    }
    let _ = writeln!(
        out,
        "\nsignature-equivalence classes: {}\nnon-holonomy classes: {}\nfinal orbits: {}",
        r.signature_class_count(),
        r.signature_class_count() - r.final_orbit_count(),
        r.final_orbit_count()
    );
    if !r.discrepancies.is_empty() {
        out.push_str("\ndiscrepancies with reference values:\n");
        for d in &r.discrepancies {
            let _ = writeln!(
                out,
                "- {}\n  printed:    {}\n  derived:    {}\n  resolution: {}",
                d.topic, d.printed, d.derived, d.resolution
            );
        }
    }
    out
}

/// One row per signature-equivalence class.
pub fn report_csv(r: &PipelineReport) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "signature",
        "degree",
        "profile",
        "cone_angles",
        "representative",
        "members",
        "group",
        "group_order",
        "holonomy",
        "intermediate",
    ])?;
    for (case, o) in r.orbits() {
        let rep = &o.class.representative;
        let angles = rep.cone_angles.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ");
        w.write_record([
            case.signature.to_string(),
            case.degree.to_string(),
            o.base_profile().to_string(),
            angles,
            rep.tuple.to_string(),
            o.class.members.len().to_string(),
            o.class.group.label.clone(),
            o.class.group.order.to_string(),
            o.holonomy.is_holonomy().to_string(),
            o.holonomy.witness().map(|w| w.intermediate.to_string()).unwrap_or_default(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn verify_text(v: &VerifyReport) -> String {
    let mut out = String::new();
    for c in &v.checks {
        let _ = writeln!(out, "{:<5} {}: {}", c.outcome.to_string(), c.name, c.detail);
    }
    let failed = v.failures().count();
    let unexplained = v.unexplained().count();
    let _ = writeln!(
        out,
        "{} checks, {failed} not passing ({} known discrepancies, {unexplained} unexplained)",
        v.checks.len(),
        failed - unexplained
    );
    out
}
