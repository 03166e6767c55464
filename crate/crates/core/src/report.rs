//! Text and JSON rendering of a [`MetricsReport`].

use std::fmt::Write;

use serde::Serialize;

use crate::adg::Adg;
use crate::dependence::{DependenceKind, VertexId};
use crate::metrics::{KindCounts, MetricsReport};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Include the pairs of the transitive closure.
    pub show_closure: bool,
}

#[derive(Serialize)]
struct JsonArc<'a> {
    from: &'a VertexId,
    to: &'a VertexId,
    kind: DependenceKind,
}

#[derive(Serialize)]
struct JsonPair<'a> {
    from: &'a VertexId,
    to: &'a VertexId,
}

#[derive(Serialize)]
struct JsonMetrics<'a> {
    m_t: u64,
    m_t_by_kind: KindCounts,
    m_g: u64,
    m_t_star: u64,
    m_g_star: u64,
    m_s: u64,
    m_s_witnesses: &'a [VertexId],
    m_s_star: u64,
    m_s_star_witnesses: &'a [VertexId],
}

#[derive(Serialize)]
struct JsonReport<'a> {
    architecture: &'a str,
    vertices: &'a [VertexId],
    arcs: Vec<JsonArc<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closure: Option<Vec<JsonPair<'a>>>,
    metrics: JsonMetrics<'a>,
}

fn closure_pairs(adg: &Adg) -> Vec<(&VertexId, &VertexId)> {
    adg.untyped()
        .transitive_closure()
        .pairs()
        .map(|(a, b)| (adg.vertex(a), adg.vertex(b)))
        .collect()
}

/// Pretty-printed JSON (two-space indent, trailing newline). Keys appear in
/// a fixed order and arrays in vertex order.
pub fn render_json(report: &MetricsReport, adg: &Adg, options: &RenderOptions) -> String {
    let doc = JsonReport {
        architecture: adg.name(),
        vertices: adg.vertices(),
        arcs: adg
            .arcs()
            .iter()
            .map(|a| JsonArc {
                from: adg.vertex(a.source),
                to: adg.vertex(a.target),
                kind: a.kind,
            })
            .collect(),
        closure: options.show_closure.then(|| {
            closure_pairs(adg)
                .into_iter()
                .map(|(from, to)| JsonPair { from, to })
                .collect()
        }),
        metrics: JsonMetrics {
            m_t: report.m_t,
            m_t_by_kind: report.m_t_by_kind,
            m_g: report.m_g,
            m_t_star: report.m_t_star,
            m_g_star: report.m_g_star,
            m_s: report.m_s,
            m_s_witnesses: &report.m_s_witnesses,
            m_s_star: report.m_s_star,
            m_s_star_witnesses: &report.m_s_star_witnesses,
        },
    };
    // plain structs of strings and integers always serialize
    let mut out = serde_json::to_string_pretty(&doc).expect("report serializes");
    out.push('\n');
    out
}

fn join(witnesses: &[VertexId]) -> String {
    witnesses
        .iter()
        .map(VertexId::as_str)
        .collect::<Vec<_>>()
        .join(", ")
}

/// One line per metric in a fixed order, followed by the per-kind arc
/// counts and, optionally, the closure pairs.
pub fn render_text(report: &MetricsReport, adg: &Adg, options: &RenderOptions) -> String {
    let mut out = String::new();
    let _ = write_text(&mut out, report, adg, options);
    out
}

fn write_text(
    out: &mut String,
    report: &MetricsReport,
    adg: &Adg,
    options: &RenderOptions,
) -> std::fmt::Result {
    writeln!(out, "architecture {}", adg.name())?;
    writeln!(
        out,
        "ports {}, components {}",
        adg.vertices().len(),
        adg.components().len()
    )?;
    writeln!(out, "M_T = {}", report.m_t)?;
    writeln!(out, "M_G = {}", report.m_g)?;
    writeln!(out, "M'_T = {}", report.m_t_star)?;
    writeln!(out, "M'_G = {}", report.m_g_star)?;
    writeln!(
        out,
        "M_S = {} [{}]",
        report.m_s,
        join(&report.m_s_witnesses)
    )?;
    writeln!(
        out,
        "M'_S = {} [{}]",
        report.m_s_star,
        join(&report.m_s_star_witnesses)
    )?;
    writeln!(out, "arcs by kind:")?;
    for kind in DependenceKind::ALL {
        writeln!(out, "  {} = {}", kind, report.m_t_by_kind.get(kind))?;
    }
    if options.show_closure {
        writeln!(out, "closure:")?;
        for (a, b) in closure_pairs(adg) {
            writeln!(out, "  {a} -> {b}")?;
        }
    }
    Ok(())
}
