//! Architectural dependence graph: one vertex per declared port, one arc
//! per classified dependence.

use std::collections::HashMap;

use thiserror::Error;

use crate::dependence::{infer_all, DependenceKind, VertexId};
use crate::model::Architecture;
use crate::relation::Relation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdgError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

/// A classified arc between two vertex indices. `source` depends on
/// `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexedArc {
    pub source: usize,
    pub target: usize,
    pub kind: DependenceKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adg {
    name: String,
    /// Component names in declaration order, including port-less ones.
    components: Vec<String>,
    vertices: Vec<VertexId>,
    component_of: Vec<usize>,
    index: HashMap<VertexId, usize>,
    /// Sorted by (source, target, kind) in vertex order.
    arcs: Vec<IndexedArc>,
}

impl Adg {
    /// Builds the graph of a valid architecture. Vertices follow component
    /// then port declaration order.
    pub fn build(arch: &Architecture, default_internal: bool) -> Adg {
        let mut components = Vec::with_capacity(arch.components.len());
        let mut vertices = Vec::new();
        let mut component_of = Vec::new();
        let mut index = HashMap::new();
        for (ci, c) in arch.components.iter().enumerate() {
            components.push(c.name.clone());
            for p in &c.ports {
                let v = VertexId::new(&c.name, &p.name);
                index.entry(v.clone()).or_insert(vertices.len());
                vertices.push(v);
                component_of.push(ci);
            }
        }

        let mut arcs: Vec<IndexedArc> = infer_all(arch, default_internal)
            .into_iter()
            .filter_map(|a| {
                Some(IndexedArc {
                    source: *index.get(&a.source)?,
                    target: *index.get(&a.target)?,
                    kind: a.kind,
                })
            })
            .collect();
        arcs.sort();
        arcs.dedup();

        Adg {
            name: arch.name.clone(),
            components,
            vertices,
            component_of,
            index,
            arcs,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn components(&self) -> &[String] {
        &self.components
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &VertexId {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(&VertexId::from_qualified(name)).copied()
    }

    /// Name of the component owning vertex `v`.
    pub fn component_of(&self, v: usize) -> &str {
        &self.components[self.component_of[v]]
    }

    /// Index into [`Adg::components`] of the component owning vertex `v`.
    pub fn component_index_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    /// `D_t`, in canonical order.
    pub fn arcs(&self) -> &[IndexedArc] {
        &self.arcs
    }

    pub fn arc_count(&self, kind: DependenceKind) -> usize {
        self.arcs.iter().filter(|a| a.kind == kind).count()
    }

    /// Projection of `D_t` onto vertex pairs, dropping the arc kinds.
    pub fn untyped(&self) -> Relation {
        Relation::from_pairs(
            self.vertices.len(),
            self.arcs.iter().map(|a| (a.source, a.target)),
        )
    }

    /// Vertices reachable from `v` in one or more steps, found by
    /// depth-first search over the arc list. Independent of
    /// [`Relation::transitive_closure`]; used to cross-check it.
    pub fn reachable_oracle(&self, v: &str) -> Result<Vec<usize>, AdgError> {
        let start = self
            .vertex_index(v)
            .ok_or_else(|| AdgError::UnknownVertex(v.to_string()))?;
        Ok(self.reachable_from(start))
    }

    pub fn reachable_from(&self, start: usize) -> Vec<usize> {
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for a in &self.arcs {
            adjacency[a.source].push(a.target);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack: Vec<usize> = adjacency[start].clone();
        while let Some(u) = stack.pop() {
            if seen[u] {
                continue;
            }
            seen[u] = true;
            stack.extend(adjacency[u].iter().copied().filter(|&w| !seen[w]));
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }
}
