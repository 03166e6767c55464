//! Dependence inference: turns an [`Architecture`] into classified arcs.
//!
//! An arc `(u, v)` always reads "port `u` depends on port `v`".
//!
//! - **flow**: `attach A.p -> B.q` and `before A.p -> B.q` give `(B.q, A.p)`.
//!   Inside a component every sending port depends on every receiving port,
//!   unless the component lists its flows with `internal`, in which case
//!   only those are used.
//! - **shared**: two distinct ports accessing the same resource depend on
//!   each other, whatever the access modes.
//! - **constrained**: `exclusive A.p, B.q` makes each port depend on the
//!   other.
//!
//! Symmetric dependences are stored as both ordered pairs and every
//! inference returns a set, so repeated declarations count once.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::model::{Architecture, PortRef};

/// Qualified port name, `Component.port`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(component: &str, port: &str) -> Self {
        VertexId(format!("{component}.{port}"))
    }

    /// Wraps an already qualified `Component.port` name.
    pub fn from_qualified(name: &str) -> Self {
        VertexId(name.to_string())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&PortRef> for VertexId {
    fn from(r: &PortRef) -> Self {
        VertexId::new(&r.component, &r.port)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DependenceKind {
    Shared,
    Flow,
    Constrained,
}

impl DependenceKind {
    pub const ALL: [DependenceKind; 3] = [
        DependenceKind::Shared,
        DependenceKind::Flow,
        DependenceKind::Constrained,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DependenceKind::Shared => "shared",
            DependenceKind::Flow => "flow",
            DependenceKind::Constrained => "constrained",
        }
    }
}

impl fmt::Display for DependenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    /// The dependent port.
    pub source: VertexId,
    /// The port depended upon.
    pub target: VertexId,
    pub kind: DependenceKind,
}

impl Arc {
    pub fn new(source: VertexId, target: VertexId, kind: DependenceKind) -> Self {
        Arc {
            source,
            target,
            kind,
        }
    }
}

pub type ArcSet = BTreeSet<Arc>;

fn insert(arcs: &mut ArcSet, source: VertexId, target: VertexId, kind: DependenceKind) {
    if source != target {
        arcs.insert(Arc::new(source, target, kind));
    }
}

fn insert_both(arcs: &mut ArcSet, a: &VertexId, b: &VertexId, kind: DependenceKind) {
    insert(arcs, a.clone(), b.clone(), kind);
    insert(arcs, b.clone(), a.clone(), kind);
}

/// Flow arcs from `attach` and `before` declarations only.
pub fn connection_arcs(arch: &Architecture) -> ArcSet {
    let mut arcs = ArcSet::new();
    for a in arch.attachments.iter().chain(&arch.befores) {
        insert(
            &mut arcs,
            (&a.to).into(),
            (&a.from).into(),
            DependenceKind::Flow,
        );
    }
    arcs
}

/// Intra-component flow arcs. Components with `internal` declarations use
/// exactly those; the others get every (sending, receiving) port pair when
/// `default_internal` is set and nothing otherwise.
pub fn internal_arcs(arch: &Architecture, default_internal: bool) -> ArcSet {
    let mut arcs = ArcSet::new();
    let explicit: HashSet<&str> = arch
        .internal_flows
        .iter()
        .map(|f| f.component.as_str())
        .collect();

    for f in &arch.internal_flows {
        insert(
            &mut arcs,
            VertexId::new(&f.component, &f.out_port),
            VertexId::new(&f.component, &f.in_port),
            DependenceKind::Flow,
        );
    }
    if !default_internal {
        return arcs;
    }
    for c in &arch.components {
        if explicit.contains(c.name.as_str()) {
            continue;
        }
        for out in c.ports.iter().filter(|p| p.direction.can_send()) {
            for input in c.ports.iter().filter(|p| p.direction.can_receive()) {
                insert(
                    &mut arcs,
                    VertexId::new(&c.name, &out.name),
                    VertexId::new(&c.name, &input.name),
                    DependenceKind::Flow,
                );
            }
        }
    }
    arcs
}

/// All flow dependences, with default intra-component flows enabled.
pub fn infer_flow(arch: &Architecture) -> ArcSet {
    let mut arcs = connection_arcs(arch);
    arcs.extend(internal_arcs(arch, true));
    arcs
}

pub fn infer_shared(arch: &Architecture) -> ArcSet {
    let mut arcs = ArcSet::new();
    for resource in &arch.resources {
        let mut users: Vec<VertexId> = Vec::new();
        for c in &arch.components {
            for a in c.accesses.iter().filter(|a| a.resource == resource.name) {
                let v = VertexId::new(&c.name, &a.via);
                if !users.contains(&v) {
                    users.push(v);
                }
            }
        }
        for (i, a) in users.iter().enumerate() {
            for b in &users[i + 1..] {
                insert_both(&mut arcs, a, b, DependenceKind::Shared);
            }
        }
    }
    arcs
}

pub fn infer_constrained(arch: &Architecture) -> ArcSet {
    let mut arcs = ArcSet::new();
    for e in &arch.exclusives {
        insert_both(
            &mut arcs,
            &(&e.a).into(),
            &(&e.b).into(),
            DependenceKind::Constrained,
        );
    }
    arcs
}

/// Union of the three inferences.
pub fn infer_all(arch: &Architecture, default_internal: bool) -> ArcSet {
    let mut arcs = connection_arcs(arch);
    arcs.extend(internal_arcs(arch, default_internal));
    arcs.extend(infer_shared(arch));
    arcs.extend(infer_constrained(arch));
    arcs
}
