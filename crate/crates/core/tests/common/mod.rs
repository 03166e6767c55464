//! Test support: architecture generators and a naive metric oracle that
//! shares no code with the library's inference, closure or metrics paths.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use adg_metrics::{
    AccessMode, Architecture, Attachment, Component, Direction, ExclusivePair, InternalFlow,
    PortRef, Resource,
};
use rand::seq::SliceRandom;
use rand::Rng;

const DIRECTIONS: [Direction; 3] = [Direction::In, Direction::Out, Direction::InOut];

#[derive(Debug, Clone, Copy)]
pub struct GenParams {
    pub max_components: usize,
    pub max_ports: usize,
    pub max_resources: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            max_components: 12,
            max_ports: 4,
            max_resources: 3,
        }
    }
}

fn all_ports(arch: &Architecture) -> Vec<(String, String, Direction)> {
    arch.components
        .iter()
        .flat_map(|c| {
            c.ports
                .iter()
                .map(move |p| (c.name.clone(), p.name.clone(), p.direction))
        })
        .collect()
}

fn pick_pair<R: Rng>(
    rng: &mut R,
    ports: &[(String, String, Direction)],
    first: impl Fn(Direction) -> bool,
    second: impl Fn(Direction) -> bool,
) -> Option<(PortRef, PortRef)> {
    let a: Vec<_> = ports.iter().filter(|p| first(p.2)).collect();
    let b: Vec<_> = ports.iter().filter(|p| second(p.2)).collect();
    for _ in 0..8 {
        let x = a.choose(rng)?;
        let y = b.choose(rng)?;
        if (x.0 != y.0) || (x.1 != y.1) {
            return Some((PortRef::new(&x.0, &x.1), PortRef::new(&y.0, &y.1)));
        }
    }
    None
}

/// Adds one random `attach`, `before`, `exclusive` or resource access to a
/// valid architecture, keeping it valid. Returns a short description, or
/// `None` when no declaration of the drawn shape fits.
pub fn add_random_declaration<R: Rng>(rng: &mut R, arch: &mut Architecture) -> Option<String> {
    let ports = all_ports(arch);
    match rng.gen_range(0..4) {
        0 => {
            let (from, to) = pick_pair(rng, &ports, Direction::can_send, Direction::can_receive)?;
            let d = format!("attach {from} -> {to}");
            arch.attachments.push(Attachment::new(from, to));
            Some(d)
        }
        1 => {
            let (from, to) = pick_pair(rng, &ports, Direction::can_send, Direction::can_receive)?;
            let d = format!("before {from} -> {to}");
            arch.befores.push(Attachment::new(from, to));
            Some(d)
        }
        2 => {
            let (a, b) = pick_pair(rng, &ports, |_| true, |_| true)?;
            let d = format!("exclusive {a}, {b}");
            arch.exclusives.push(ExclusivePair::new(a, b));
            Some(d)
        }
        _ => {
            let (c, p, _) = ports.choose(rng)?.clone();
            if arch.resources.is_empty() || rng.gen_bool(0.2) {
                let name = format!("r{}", arch.resources.len());
                arch.resources.push(Resource::new(name));
            }
            let resource = arch.resources.choose(rng)?.name.clone();
            let mode = if rng.gen_bool(0.5) {
                AccessMode::Reads
            } else {
                AccessMode::Writes
            };
            let d = format!("{} {resource} via {c}.{p}", mode.keyword());
            let comp = arch.components.iter_mut().find(|x| x.name == c)?;
            comp.accesses
                .push(adg_metrics::ResourceAccess::new(mode, resource, p));
            Some(d)
        }
    }
}

/// Random valid architecture: up to `max_components` components of up to
/// `max_ports` ports, with random connections, exclusions, accesses and
/// occasional explicit internal flows.
pub fn random_architecture<R: Rng>(rng: &mut R, params: GenParams) -> Architecture {
    let mut arch = Architecture::new(format!("Gen{}", rng.gen_range(0..1000)));
    for r in 0..rng.gen_range(0..=params.max_resources) {
        arch.resources.push(Resource::new(format!("r{r}")));
    }
    let ncomp = rng.gen_range(0..=params.max_components);
    for ci in 0..ncomp {
        let mut c = Component::new(format!("C{ci}")).with_complexity(rng.gen_range(0..20));
        for pi in 0..rng.gen_range(0..=params.max_ports) {
            c = c.with_port(format!("p{pi}"), *DIRECTIONS.choose(rng).unwrap());
        }
        arch.components.push(c);
    }
    let ports = all_ports(&arch);
    if ports.is_empty() {
        return arch;
    }

    let budget = ports.len();
    for _ in 0..rng.gen_range(0..=budget) {
        add_random_declaration(rng, &mut arch);
    }
    // explicit internal flows on some components
    for ci in 0..arch.components.len() {
        if !rng.gen_bool(0.25) {
            continue;
        }
        let c = &arch.components[ci];
        let outs: Vec<_> = c.ports.iter().filter(|p| p.direction.can_send()).collect();
        let ins: Vec<_> = c
            .ports
            .iter()
            .filter(|p| p.direction.can_receive())
            .collect();
        let mut flows = Vec::new();
        for _ in 0..rng.gen_range(1..=2) {
            if let (Some(o), Some(i)) = (outs.choose(rng), ins.choose(rng)) {
                if o.name != i.name {
                    flows.push(InternalFlow::new(&c.name, &o.name, &i.name));
                }
            }
        }
        arch.internal_flows.extend(flows);
    }
    debug_assert!(arch.validate().is_ok(), "{:?}", arch.validate());
    arch
}

/// Bijective renaming of components and ports.
#[derive(Debug, Clone)]
pub struct Renaming {
    pub components: HashMap<String, String>,
    /// Keyed by (old component, old port).
    pub ports: HashMap<(String, String), String>,
}

impl Renaming {
    pub fn random<R: Rng>(rng: &mut R, arch: &Architecture) -> Renaming {
        let mut ids: Vec<usize> = (0..arch.components.len()).collect();
        ids.shuffle(rng);
        let salt = rng.gen_range(0..100);
        let mut components = HashMap::new();
        let mut ports = HashMap::new();
        for (c, id) in arch.components.iter().zip(ids) {
            components.insert(c.name.clone(), format!("Node{salt}_{id}"));
            let mut pids: Vec<usize> = (0..c.ports.len()).collect();
            pids.shuffle(rng);
            for (p, pid) in c.ports.iter().zip(pids) {
                ports.insert((c.name.clone(), p.name.clone()), format!("x{pid}"));
            }
        }
        Renaming { components, ports }
    }

    pub fn port(&self, component: &str, port: &str) -> String {
        self.ports[&(component.to_string(), port.to_string())].clone()
    }

    /// Maps a qualified `Component.port` name.
    pub fn qualified(&self, name: &str) -> String {
        let (c, p) = name.split_once('.').unwrap();
        format!("{}.{}", self.components[c], self.port(c, p))
    }

    fn port_ref(&self, r: &PortRef) -> PortRef {
        PortRef::new(
            &self.components[&r.component],
            self.port(&r.component, &r.port),
        )
    }

    pub fn apply(&self, arch: &Architecture) -> Architecture {
        let mut out = arch.clone();
        for c in &mut out.components {
            let old = c.name.clone();
            for p in &mut c.ports {
                p.name = self.port(&old, &p.name);
            }
            for a in &mut c.accesses {
                a.via = self.port(&old, &a.via);
            }
            c.name = self.components[&old].clone();
        }
        for a in out.attachments.iter_mut().chain(out.befores.iter_mut()) {
            a.from = self.port_ref(&a.from);
            a.to = self.port_ref(&a.to);
        }
        for e in &mut out.exclusives {
            e.a = self.port_ref(&e.a);
            e.b = self.port_ref(&e.b);
        }
        for f in &mut out.internal_flows {
            f.out_port = self.port(&f.component, &f.out_port);
            f.in_port = self.port(&f.component, &f.in_port);
            f.component = self.components[&f.component].clone();
        }
        out
    }
}

/// Metric values recomputed from first principles: arcs enumerated
/// straight from the declarations, reachability by breadth-first search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveMetrics {
    pub m_t: u64,
    pub m_g: u64,
    pub m_t_star: u64,
    pub m_g_star: u64,
    pub m_s: u64,
    pub m_s_witnesses: Vec<String>,
    pub m_s_star: u64,
    pub m_s_star_witnesses: Vec<String>,
    /// Distinct (dependent, dependee) pairs.
    pub untyped: BTreeSet<(String, String)>,
    pub by_kind: BTreeMap<&'static str, u64>,
}

/// Typed arcs of `arch` as `(dependent, dependee, kind)` strings.
pub fn naive_arcs(
    arch: &Architecture,
    default_internal: bool,
) -> BTreeSet<(String, String, &'static str)> {
    let q = |c: &str, p: &str| format!("{c}.{p}");
    let mut arcs = BTreeSet::new();
    let mut add = |a: String, b: String, k: &'static str| {
        if a != b {
            arcs.insert((a, b, k));
        }
    };
    for a in arch.attachments.iter().chain(&arch.befores) {
        add(
            q(&a.to.component, &a.to.port),
            q(&a.from.component, &a.from.port),
            "flow",
        );
    }
    for c in &arch.components {
        let declared: Vec<_> = arch
            .internal_flows
            .iter()
            .filter(|f| f.component == c.name)
            .collect();
        if declared.is_empty() {
            if default_internal {
                for o in &c.ports {
                    for i in &c.ports {
                        let sends = matches!(o.direction, Direction::Out | Direction::InOut);
                        let receives = matches!(i.direction, Direction::In | Direction::InOut);
                        if sends && receives {
                            add(q(&c.name, &o.name), q(&c.name, &i.name), "flow");
                        }
                    }
                }
            }
        } else {
            for f in declared {
                add(q(&c.name, &f.out_port), q(&c.name, &f.in_port), "flow");
            }
        }
    }
    let mut users: Vec<(String, String)> = Vec::new();
    for c in &arch.components {
        for a in &c.accesses {
            users.push((a.resource.clone(), q(&c.name, &a.via)));
        }
    }
    for (r1, u1) in &users {
        for (r2, u2) in &users {
            if r1 == r2 {
                add(u1.clone(), u2.clone(), "shared");
            }
        }
    }
    for e in &arch.exclusives {
        let a = q(&e.a.component, &e.a.port);
        let b = q(&e.b.component, &e.b.port);
        add(a.clone(), b.clone(), "constrained");
        add(b, a, "constrained");
    }
    arcs
}

pub fn naive_metrics(arch: &Architecture, default_internal: bool) -> NaiveMetrics {
    let vertices: Vec<String> = arch
        .components
        .iter()
        .flat_map(|c| {
            c.ports
                .iter()
                .map(move |p| format!("{}.{}", c.name, p.name))
        })
        .collect();
    let arcs = naive_arcs(arch, default_internal);
    let mut by_kind = BTreeMap::new();
    for k in ["shared", "flow", "constrained"] {
        by_kind.insert(k, arcs.iter().filter(|a| a.2 == k).count() as u64);
    }
    let untyped: BTreeSet<(String, String)> = arcs
        .iter()
        .map(|(a, b, _)| (a.clone(), b.clone()))
        .collect();

    let mut succ: HashMap<&str, Vec<&str>> = HashMap::new();
    for (a, b) in &untyped {
        succ.entry(a.as_str()).or_default().push(b.as_str());
    }
    let reach = |start: &str| -> BTreeSet<String> {
        let mut seen = BTreeSet::new();
        let mut queue: VecDeque<&str> = succ.get(start).cloned().unwrap_or_default().into();
        while let Some(u) = queue.pop_front() {
            if seen.insert(u.to_string()) {
                queue.extend(succ.get(u).cloned().unwrap_or_default());
            }
        }
        seen
    };

    let direct: Vec<u64> = vertices
        .iter()
        .map(|v| untyped.iter().filter(|(a, _)| a == v).count() as u64)
        .collect();
    let indirect: Vec<u64> = vertices.iter().map(|v| reach(v).len() as u64).collect();

    let argmax = |vals: &[u64]| -> (u64, Vec<String>) {
        let max = vals.iter().copied().max().unwrap_or(0);
        let w = if vals.is_empty() {
            Vec::new()
        } else {
            vertices
                .iter()
                .zip(vals)
                .filter(|(_, &d)| d == max)
                .map(|(v, _)| v.clone())
                .collect()
        };
        (max, w)
    };
    let (m_s, m_s_witnesses) = argmax(&direct);
    let (m_s_star, m_s_star_witnesses) = argmax(&indirect);
    let code: u64 = arch.components.iter().map(|c| c.complexity).sum();
    let m_t = arcs.len() as u64;
    let m_t_star: u64 = indirect.iter().sum();
    NaiveMetrics {
        m_t,
        m_g: m_t + code,
        m_t_star,
        m_g_star: m_t_star + code,
        m_s,
        m_s_witnesses,
        m_s_star,
        m_s_star_witnesses,
        untyped,
        by_kind,
    }
}

/// Compares a library report with the naive recomputation; returns a
/// description of the first difference.
pub fn compare_with_naive(
    report: &adg_metrics::MetricsReport,
    naive: &NaiveMetrics,
) -> Result<(), String> {
    let names =
        |w: &[adg_metrics::VertexId]| -> Vec<String> { w.iter().map(|v| v.to_string()).collect() };
    let checks: [(&str, String, String); 8] = [
        ("m_t", report.m_t.to_string(), naive.m_t.to_string()),
        ("m_g", report.m_g.to_string(), naive.m_g.to_string()),
        (
            "m_t_star",
            report.m_t_star.to_string(),
            naive.m_t_star.to_string(),
        ),
        (
            "m_g_star",
            report.m_g_star.to_string(),
            naive.m_g_star.to_string(),
        ),
        ("m_s", report.m_s.to_string(), naive.m_s.to_string()),
        (
            "m_s_star",
            report.m_s_star.to_string(),
            naive.m_s_star.to_string(),
        ),
        (
            "m_s_witnesses",
            format!("{:?}", names(&report.m_s_witnesses)),
            format!("{:?}", naive.m_s_witnesses),
        ),
        (
            "m_s_star_witnesses",
            format!("{:?}", names(&report.m_s_star_witnesses)),
            format!("{:?}", naive.m_s_star_witnesses),
        ),
    ];
    for (name, got, want) in checks {
        if got != want {
            return Err(format!("{name}: library {got}, naive {want}"));
        }
    }
    let kinds = [
        ("shared", report.m_t_by_kind.shared),
        ("flow", report.m_t_by_kind.flow),
        ("constrained", report.m_t_by_kind.constrained),
    ];
    for (k, v) in kinds {
        if naive.by_kind[k] != v {
            return Err(format!(
                "m_t_by_kind.{k}: library {v}, naive {}",
                naive.by_kind[k]
            ));
        }
    }
    Ok(())
}

/// Declarations available to the exhaustive enumerator.
#[derive(Debug, Clone)]
enum Decl {
    Attach(PortRef, PortRef),
    Before(PortRef, PortRef),
    Exclusive(PortRef, PortRef),
    Access(AccessMode, PortRef),
    Internal(String, String, String),
}

fn compositions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=max_part.min(n) {
        for mut rest in compositions(n - first, max_part) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn direction_patterns(sizes: &[usize]) -> Vec<Vec<Vec<Direction>>> {
    let n: usize = sizes.iter().sum();
    let split = |flat: Vec<Direction>| -> Vec<Vec<Direction>> {
        let mut out = Vec::new();
        let mut i = 0;
        for &s in sizes {
            out.push(flat[i..i + s].to_vec());
            i += s;
        }
        out
    };
    if n <= 3 {
        let mut all = vec![Vec::new()];
        for _ in 0..n {
            all = all
                .into_iter()
                .flat_map(|prefix: Vec<Direction>| {
                    DIRECTIONS.iter().map(move |&d| {
                        let mut p = prefix.clone();
                        p.push(d);
                        p
                    })
                })
                .collect();
        }
        all.into_iter().map(split).collect()
    } else {
        let all_inout = vec![Direction::InOut; n];
        let mut first_in = Vec::new();
        for &s in sizes {
            first_in.push(Direction::In);
            first_in.extend(std::iter::repeat_n(Direction::Out, s - 1));
        }
        vec![split(all_inout), split(first_in)]
    }
}

fn candidates(arch: &Architecture, rich: bool) -> Vec<Decl> {
    let ports = all_ports(arch);
    let mut out = Vec::new();
    for (ca, pa, da) in &ports {
        for (cb, pb, db) in &ports {
            if (ca, pa) == (cb, pb) {
                continue;
            }
            let (a, b) = (PortRef::new(ca, pa), PortRef::new(cb, pb));
            if da.can_send() && db.can_receive() {
                out.push(Decl::Attach(a.clone(), b.clone()));
                if rich {
                    out.push(Decl::Before(a.clone(), b.clone()));
                }
                if ca == cb {
                    out.push(Decl::Internal(ca.clone(), pa.clone(), pb.clone()));
                }
            }
            if (ca, pa) < (cb, pb) {
                out.push(Decl::Exclusive(a, b));
            }
        }
        out.push(Decl::Access(AccessMode::Reads, PortRef::new(ca, pa)));
        if rich {
            out.push(Decl::Access(AccessMode::Writes, PortRef::new(ca, pa)));
        }
    }
    out
}

fn apply_decl(arch: &mut Architecture, d: &Decl) {
    match d {
        Decl::Attach(a, b) => arch.attachments.push(Attachment::new(a.clone(), b.clone())),
        Decl::Before(a, b) => arch.befores.push(Attachment::new(a.clone(), b.clone())),
        Decl::Exclusive(a, b) => arch
            .exclusives
            .push(ExclusivePair::new(a.clone(), b.clone())),
        Decl::Access(mode, r) => {
            if arch.resources.is_empty() {
                arch.resources.push(Resource::new("r"));
            }
            let c = arch
                .components
                .iter_mut()
                .find(|c| c.name == r.component)
                .unwrap();
            c.accesses
                .push(adg_metrics::ResourceAccess::new(*mode, "r", r.port.clone()));
        }
        Decl::Internal(c, o, i) => {
            arch.internal_flows
                .push(InternalFlow::new(c.clone(), o.clone(), i.clone()))
        }
    }
}

/// Multisets of size `0..=k` over `0..n`, as non-decreasing index lists.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for m in &frontier {
            let start = m.last().copied().unwrap_or(0);
            for i in start..n {
                let mut e: Vec<usize> = m.clone();
                e.push(i);
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Every architecture of the bounded constructor grammar with at most
/// `max_ports` ports: components of 1 to 3 ports; all direction
/// assignments up to 3 ports and two fixed patterns beyond; up to three
/// declarations (repetition allowed) for at most 2 ports, two for 3, and
/// two drawn from a reduced set (no `before`, reads only) above that.
pub fn for_each_small_architecture(max_ports: usize, mut visit: impl FnMut(&Architecture)) {
    for n in 0..=max_ports {
        for sizes in compositions(n, 3) {
            for dirs in direction_patterns(&sizes) {
                let mut base = Architecture::new("Small");
                for (ci, ds) in dirs.iter().enumerate() {
                    let mut c = Component::new(format!("C{ci}")).with_complexity(ci as u64 + 1);
                    for (pi, &d) in ds.iter().enumerate() {
                        c = c.with_port(format!("p{pi}"), d);
                    }
                    base.components.push(c);
                }
                let rich = n <= 3;
                let k = if n <= 2 { 3 } else { 2 };
                let cands = candidates(&base, rich);
                for pick in multisets(cands.len(), k) {
                    let mut arch = base.clone();
                    for &i in &pick {
                        apply_decl(&mut arch, &cands[i]);
                    }
                    visit(&arch);
                }
            }
        }
    }
}
