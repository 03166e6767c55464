//! Graphviz rendering of an [`Adg`].

use std::fmt::Write;

use crate::adg::Adg;
use crate::dependence::DependenceKind;

fn style(kind: DependenceKind) -> &'static str {
    match kind {
        DependenceKind::Shared => "solid",
        DependenceKind::Flow => "dashed",
        DependenceKind::Constrained => "dotted",
    }
}

/// DOT digraph with one cluster per component and one edge per arc.
/// Output depends only on the graph, so equal graphs render to equal bytes.
pub fn to_dot(adg: &Adg) -> String {
    let mut out = String::new();
    let _ = write_dot(&mut out, adg);
    out
}

fn write_dot(out: &mut String, adg: &Adg) -> std::fmt::Result {
    writeln!(out, "digraph \"{}\" {{", adg.name())?;
    for (ci, component) in adg.components().iter().enumerate() {
        writeln!(out, "  subgraph \"cluster_{component}\" {{")?;
        writeln!(out, "    label=\"{component}\";")?;
        for (v, id) in adg.vertices().iter().enumerate() {
            if adg.component_index_of(v) == ci {
                writeln!(out, "    \"{id}\";")?;
            }
        }
        writeln!(out, "  }}")?;
    }
    for arc in adg.arcs() {
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\", style={}];",
            adg.vertex(arc.source),
            adg.vertex(arc.target),
            arc.kind,
            style(arc.kind)
        )?;
    }
    writeln!(out, "}}")
}
