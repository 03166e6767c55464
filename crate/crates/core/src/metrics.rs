//! Dependence-based complexity metrics over an [`Adg`].
//!
//! | metric | value |
//! |--------|-------|
//! | `M_T`  | number of classified arcs, `|D_t|` |
//! | `M_G`  | `M_T` plus the declared component complexities |
//! | `M'_T` | size of the transitive closure of the untyped arc relation |
//! | `M'_G` | `M'_T` plus the declared component complexities |
//! | `M_S`  | largest number of distinct ports one port directly depends on |
//! | `M'_S` | the same, counting indirect dependences |
//!
//! All values are plain counts. Ties for `M_S` and `M'_S` are reported in
//! full, in vertex order.

use serde::Serialize;

use crate::adg::Adg;
use crate::dependence::{DependenceKind, VertexId};
use crate::model::Architecture;
use crate::relation::Relation;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct KindCounts {
    pub shared: u64,
    pub flow: u64,
    pub constrained: u64,
}

impl KindCounts {
    pub fn of(adg: &Adg) -> Self {
        let count = |k| adg.arc_count(k) as u64;
        KindCounts {
            shared: count(DependenceKind::Shared),
            flow: count(DependenceKind::Flow),
            constrained: count(DependenceKind::Constrained),
        }
    }

    pub fn get(&self, kind: DependenceKind) -> u64 {
        match kind {
            DependenceKind::Shared => self.shared,
            DependenceKind::Flow => self.flow,
            DependenceKind::Constrained => self.constrained,
        }
    }

    pub fn total(&self) -> u64 {
        self.shared + self.flow + self.constrained
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsReport {
    pub m_t: u64,
    pub m_t_by_kind: KindCounts,
    pub m_g: u64,
    pub m_t_star: u64,
    pub m_g_star: u64,
    pub m_s: u64,
    pub m_s_witnesses: Vec<VertexId>,
    pub m_s_star: u64,
    pub m_s_star_witnesses: Vec<VertexId>,
}

fn sum(complexities: &[u64]) -> u64 {
    complexities
        .iter()
        .fold(0u64, |acc, &c| acc.saturating_add(c))
}

/// `M_T`: arcs counted with kind multiplicity.
pub fn m_total(adg: &Adg) -> u64 {
    adg.arcs().len() as u64
}

/// `M_G = M_T + Σ M_i`, with `complexities` in component order.
pub fn m_global(adg: &Adg, complexities: &[u64]) -> u64 {
    m_total(adg).saturating_add(sum(complexities))
}

/// `M'_T`: pairs in the transitive closure of the untyped arc relation.
pub fn m_total_star(adg: &Adg) -> u64 {
    adg.untyped().transitive_closure().len() as u64
}

/// `M'_G = M'_T + Σ M_i`. Indirect component complexities are taken to be
/// the declared ones.
pub fn m_global_star(adg: &Adg, complexities: &[u64]) -> u64 {
    m_total_star(adg).saturating_add(sum(complexities))
}

/// `M_S` and the vertices attaining it.
pub fn m_most_affected(adg: &Adg) -> (u64, Vec<VertexId>) {
    max_fan_out(adg, &adg.untyped())
}

/// `M'_S` and the vertices attaining it.
pub fn m_most_affected_star(adg: &Adg) -> (u64, Vec<VertexId>) {
    max_fan_out(adg, &adg.untyped().transitive_closure())
}

/// Largest `|σ_[1]=v(r)|` over the vertices of `adg`, with every argmax.
/// No vertices gives `(0, [])`; no pairs gives 0 with every vertex tied.
fn max_fan_out(adg: &Adg, r: &Relation) -> (u64, Vec<VertexId>) {
    let degrees: Vec<usize> = (0..adg.vertices().len()).map(|v| r.out_degree(v)).collect();
    let Some(&max) = degrees.iter().max() else {
        return (0, Vec::new());
    };
    let witnesses = degrees
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d == max)
        .map(|(v, _)| adg.vertex(v).clone())
        .collect();
    (max as u64, witnesses)
}

/// Graph, closure and metrics of one architecture, computed together.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub adg: Adg,
    pub closure: Relation,
    pub report: MetricsReport,
}

impl Analysis {
    pub fn run(arch: &Architecture, default_internal: bool) -> Analysis {
        let adg = Adg::build(arch, default_internal);
        let complexities: Vec<u64> = arch.components.iter().map(|c| c.complexity).collect();
        let code_level = sum(&complexities);

        let direct = adg.untyped();
        let closure = direct.transitive_closure();
        let m_t = m_total(&adg);
        let m_t_star = closure.len() as u64;
        let (m_s, m_s_witnesses) = max_fan_out(&adg, &direct);
        let (m_s_star, m_s_star_witnesses) = max_fan_out(&adg, &closure);

        let report = MetricsReport {
            m_t,
            m_t_by_kind: KindCounts::of(&adg),
            m_g: m_t.saturating_add(code_level),
            m_t_star,
            m_g_star: m_t_star.saturating_add(code_level),
            m_s,
            m_s_witnesses,
            m_s_star,
            m_s_star_witnesses,
        };
        Analysis {
            adg,
            closure,
            report,
        }
    }
}

pub fn compute_report(arch: &Architecture, default_internal: bool) -> MetricsReport {
    Analysis::run(arch, default_internal).report
}
