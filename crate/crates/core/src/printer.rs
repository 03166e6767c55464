//! Canonical MiniADL rendering.
//!
//! Output order is fixed: resources, components (ports, complexity,
//! accesses), then `attach`, `before`, `exclusive` and `internal`
//! declarations, each group in model order. Complexity is omitted when zero.

use std::fmt::Write;

use crate::model::Architecture;

pub fn pretty_print(arch: &Architecture) -> String {
    let mut out = String::new();
    // writing into a String cannot fail
    let _ = write_architecture(&mut out, arch);
    out
}

fn write_architecture(out: &mut String, arch: &Architecture) -> std::fmt::Result {
    writeln!(out, "architecture {} {{", arch.name)?;
    for r in &arch.resources {
        writeln!(out, "  resource {};", r.name)?;
    }
    for c in &arch.components {
        writeln!(out, "  component {} {{", c.name)?;
        for p in &c.ports {
            writeln!(out, "    port {} : {};", p.name, p.direction)?;
        }
        if c.complexity != 0 {
            writeln!(out, "    complexity {};", c.complexity)?;
        }
        for a in &c.accesses {
            writeln!(
                out,
                "    {} {} via {};",
                a.mode.keyword(),
                a.resource,
                a.via
            )?;
        }
        writeln!(out, "  }}")?;
    }
    for a in &arch.attachments {
        writeln!(out, "  attach {} -> {};", a.from, a.to)?;
    }
    for a in &arch.befores {
        writeln!(out, "  before {} -> {};", a.from, a.to)?;
    }
    for e in &arch.exclusives {
        writeln!(out, "  exclusive {}, {};", e.a, e.b)?;
    }
    for f in &arch.internal_flows {
        writeln!(
            out,
            "  internal {c}.{} <- {c}.{};",
            f.out_port,
            f.in_port,
            c = f.component
        )?;
    }
    writeln!(out, "}}")
}
