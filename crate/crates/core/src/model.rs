//! Architecture model: components, ports, resources and the declarations
//! that connect them.
//!
//! Every declaration carries the [`SourcePos`] it was parsed from so that
//! validation can point back into the input. Positions are metadata and do
//! not take part in equality: a model built by hand compares equal to the
//! same model parsed from text.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

/// 1-based line/column of a token in the source text. `(0, 0)` means the
/// value was not produced by the parser.
#[derive(Debug, Clone, Copy, Default)]
pub struct SourcePos {
    pub line: u32,
    pub column: u32,
}

impl SourcePos {
    pub fn new(line: u32, column: u32) -> Self {
        SourcePos { line, column }
    }

    pub fn is_known(&self) -> bool {
        self.line > 0
    }
}

impl PartialEq for SourcePos {
    fn eq(&self, _other: &Self) -> bool {
        true
    }
}

impl Eq for SourcePos {}

impl Hash for SourcePos {
    fn hash<H: Hasher>(&self, _state: &mut H) {}
}

impl PartialOrd for SourcePos {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SourcePos {
    fn cmp(&self, _other: &Self) -> Ordering {
        Ordering::Equal
    }
}

impl fmt::Display for SourcePos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    In,
    Out,
    InOut,
}

impl Direction {
    /// Whether the port can act as the producing end of a connection.
    pub fn can_send(self) -> bool {
        matches!(self, Direction::Out | Direction::InOut)
    }

    /// Whether the port can act as the consuming end of a connection.
    pub fn can_receive(self) -> bool {
        matches!(self, Direction::In | Direction::InOut)
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Direction::In => "in",
            Direction::Out => "out",
            Direction::InOut => "inout",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AccessMode {
    Reads,
    Writes,
}

impl AccessMode {
    pub fn keyword(self) -> &'static str {
        match self {
            AccessMode::Reads => "reads",
            AccessMode::Writes => "writes",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Port {
    pub name: String,
    pub direction: Direction,
    pub pos: SourcePos,
}

impl Port {
    pub fn new(name: impl Into<String>, direction: Direction) -> Self {
        Port {
            name: name.into(),
            direction,
            pos: SourcePos::default(),
        }
    }
}

/// A component reads or writes a global resource through one of its ports.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResourceAccess {
    pub resource: String,
    pub mode: AccessMode,
    pub via: String,
    pub pos: SourcePos,
}

impl ResourceAccess {
    pub fn new(mode: AccessMode, resource: impl Into<String>, via: impl Into<String>) -> Self {
        ResourceAccess {
            resource: resource.into(),
            mode,
            via: via.into(),
            pos: SourcePos::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub name: String,
    pub ports: Vec<Port>,
    /// Declared code-level complexity of the component (0 when undeclared).
    pub complexity: u64,
    pub accesses: Vec<ResourceAccess>,
    pub pos: SourcePos,
}

impl Component {
    pub fn new(name: impl Into<String>) -> Self {
        Component {
            name: name.into(),
            ports: Vec::new(),
            complexity: 0,
            accesses: Vec::new(),
            pos: SourcePos::default(),
        }
    }

    pub fn with_port(mut self, name: impl Into<String>, direction: Direction) -> Self {
        self.ports.push(Port::new(name, direction));
        self
    }

    pub fn with_complexity(mut self, complexity: u64) -> Self {
        self.complexity = complexity;
        self
    }

    pub fn with_access(
        mut self,
        mode: AccessMode,
        resource: impl Into<String>,
        via: impl Into<String>,
    ) -> Self {
        self.accesses.push(ResourceAccess::new(mode, resource, via));
        self
    }

    pub fn port(&self, name: &str) -> Option<&Port> {
        self.ports.iter().find(|p| p.name == name)
    }
}

/// `Component.port`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PortRef {
    pub component: String,
    pub port: String,
    pub pos: SourcePos,
}

impl PortRef {
    pub fn new(component: impl Into<String>, port: impl Into<String>) -> Self {
        PortRef {
            component: component.into(),
            port: port.into(),
            pos: SourcePos::default(),
        }
    }

    /// Qualified vertex name, `Component.port`.
    pub fn qualified(&self) -> String {
        format!("{}.{}", self.component, self.port)
    }

    fn same_port(&self, other: &PortRef) -> bool {
        self.component == other.component && self.port == other.port
    }
}

impl fmt::Display for PortRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.component, self.port)
    }
}

/// Directed connection between two ports. Used both for `attach` (data
/// passed from `from` to `to`) and `before` (`from` completes before control
/// reaches `to`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Attachment {
    pub from: PortRef,
    pub to: PortRef,
    pub pos: SourcePos,
}

impl Attachment {
    pub fn new(from: PortRef, to: PortRef) -> Self {
        Attachment {
            from,
            to,
            pos: SourcePos::default(),
        }
    }
}

/// Two ports that may not execute at the same time.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExclusivePair {
    pub a: PortRef,
    pub b: PortRef,
    pub pos: SourcePos,
}

impl ExclusivePair {
    pub fn new(a: PortRef, b: PortRef) -> Self {
        ExclusivePair {
            a,
            b,
            pos: SourcePos::default(),
        }
    }
}

/// Explicit intra-component flow: `out_port` of `component` depends on its
/// `in_port`. Written `internal C.o <- C.i;`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InternalFlow {
    pub component: String,
    pub out_port: String,
    pub in_port: String,
    pub pos: SourcePos,
    /// Position of the right-hand port reference.
    pub in_pos: SourcePos,
}

impl InternalFlow {
    pub fn new(
        component: impl Into<String>,
        out_port: impl Into<String>,
        in_port: impl Into<String>,
    ) -> Self {
        InternalFlow {
            component: component.into(),
            out_port: out_port.into(),
            in_port: in_port.into(),
            pos: SourcePos::default(),
            in_pos: SourcePos::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Resource {
    pub name: String,
    pub pos: SourcePos,
}

impl Resource {
    pub fn new(name: impl Into<String>) -> Self {
        Resource {
            name: name.into(),
            pos: SourcePos::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Architecture {
    pub name: String,
    pub components: Vec<Component>,
    /// Declared resources, in declaration order.
    pub resources: Vec<Resource>,
    pub attachments: Vec<Attachment>,
    pub befores: Vec<Attachment>,
    pub exclusives: Vec<ExclusivePair>,
    pub internal_flows: Vec<InternalFlow>,
}

impl Architecture {
    pub fn new(name: impl Into<String>) -> Self {
        Architecture {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn component(&self, name: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.name == name)
    }

    pub fn resolve(&self, r: &PortRef) -> Option<&Port> {
        self.component(&r.component)?.port(&r.port)
    }

    /// Sum of the declared component complexities.
    pub fn total_complexity(&self) -> u64 {
        self.components
            .iter()
            .fold(0u64, |acc, c| acc.saturating_add(c.complexity))
    }

    /// Checks every structural invariant and returns the violations found,
    /// in a deterministic order (declaration order of the offending items).
    pub fn validate(&self) -> ValidationOutcome {
        Validator::new(self).run()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    DuplicateComponent,
    DuplicatePort,
    DuplicateResource,
    UnknownComponent,
    UnknownPort,
    UndeclaredResource,
    /// Port used as the sending end of a connection is not `out`/`inout`.
    NotSendable,
    /// Port used as the receiving end of a connection is not `in`/`inout`.
    NotReceivable,
    /// A connection or exclusion names the same port on both sides.
    SelfReference,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    /// The offending identifier (qualified for port references).
    pub subject: String,
    pub message: String,
    pub pos: SourcePos,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationOutcome {
    pub violations: Vec<Violation>,
}

impl ValidationOutcome {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Validator<'a> {
    arch: &'a Architecture,
    components: HashMap<&'a str, &'a Component>,
    out: Vec<Violation>,
}

enum End {
    Send,
    Receive,
    Any,
}

impl<'a> Validator<'a> {
    fn new(arch: &'a Architecture) -> Self {
        let mut components = HashMap::new();
        for c in &arch.components {
            components.entry(c.name.as_str()).or_insert(c);
        }
        Validator {
            arch,
            components,
            out: Vec::new(),
        }
    }

    fn push(&mut self, kind: ViolationKind, subject: String, message: String, pos: SourcePos) {
        self.out.push(Violation {
            kind,
            subject,
            message,
            pos,
        });
    }

    fn run(mut self) -> ValidationOutcome {
        let arch = self.arch;

        let mut seen = HashSet::new();
        for r in &arch.resources {
            if !seen.insert(r.name.as_str()) {
                self.push(
                    ViolationKind::DuplicateResource,
                    r.name.clone(),
                    format!("resource `{}` declared more than once", r.name),
                    r.pos,
                );
            }
        }
        let resources = seen;

        let mut seen = HashSet::new();
        for c in &arch.components {
            if !seen.insert(c.name.as_str()) {
                self.push(
                    ViolationKind::DuplicateComponent,
                    c.name.clone(),
                    format!("component `{}` declared more than once", c.name),
                    c.pos,
                );
            }
            let mut ports = HashSet::new();
            for p in &c.ports {
                if !ports.insert(p.name.as_str()) {
                    self.push(
                        ViolationKind::DuplicatePort,
                        format!("{}.{}", c.name, p.name),
                        format!("port `{}` declared more than once in `{}`", p.name, c.name),
                        p.pos,
                    );
                }
            }
            for a in &c.accesses {
                if !resources.contains(a.resource.as_str()) {
                    self.push(
                        ViolationKind::UndeclaredResource,
                        a.resource.clone(),
                        format!("resource `{}` is not declared", a.resource),
                        a.pos,
                    );
                }
                if c.port(&a.via).is_none() {
                    self.push(
                        ViolationKind::UnknownPort,
                        format!("{}.{}", c.name, a.via),
                        format!("component `{}` has no port `{}`", c.name, a.via),
                        a.pos,
                    );
                }
            }
        }

        for att in &arch.attachments {
            self.check_connection(att, "attach");
        }
        for att in &arch.befores {
            self.check_connection(att, "before");
        }
        for ex in &arch.exclusives {
            self.check_ref(&ex.a, End::Any);
            self.check_ref(&ex.b, End::Any);
            if ex.a.same_port(&ex.b) {
                self.push(
                    ViolationKind::SelfReference,
                    ex.a.qualified(),
                    format!("`exclusive` pairs port `{}` with itself", ex.a),
                    ex.pos,
                );
            }
        }
        for flow in &arch.internal_flows {
            self.check_internal(flow);
        }

        ValidationOutcome {
            violations: self.out,
        }
    }

    fn check_connection(&mut self, att: &Attachment, keyword: &str) {
        self.check_ref(&att.from, End::Send);
        self.check_ref(&att.to, End::Receive);
        if att.from.same_port(&att.to) {
            self.push(
                ViolationKind::SelfReference,
                att.from.qualified(),
                format!("`{keyword}` connects port `{}` to itself", att.from),
                att.pos,
            );
        }
    }

    fn check_ref(&mut self, r: &PortRef, end: End) {
        let Some(component) = self.components.get(r.component.as_str()).copied() else {
            self.push(
                ViolationKind::UnknownComponent,
                r.component.clone(),
                format!("unknown component `{}`", r.component),
                r.pos,
            );
            return;
        };
        let Some(port) = component.port(&r.port) else {
            self.push(
                ViolationKind::UnknownPort,
                r.qualified(),
                format!("component `{}` has no port `{}`", r.component, r.port),
                r.pos,
            );
            return;
        };
        self.check_direction(r.qualified(), port.direction, end, r.pos);
    }

    fn check_direction(&mut self, subject: String, dir: Direction, end: End, pos: SourcePos) {
        match end {
            End::Send if !dir.can_send() => self.push(
                ViolationKind::NotSendable,
                subject.clone(),
                format!("port `{subject}` is `{dir}` and cannot be a source"),
                pos,
            ),
            End::Receive if !dir.can_receive() => self.push(
                ViolationKind::NotReceivable,
                subject.clone(),
                format!("port `{subject}` is `{dir}` and cannot be a target"),
                pos,
            ),
            _ => {}
        }
    }

    fn check_internal(&mut self, flow: &InternalFlow) {
        let Some(component) = self.components.get(flow.component.as_str()).copied() else {
            self.push(
                ViolationKind::UnknownComponent,
                flow.component.clone(),
                format!("unknown component `{}`", flow.component),
                flow.pos,
            );
            return;
        };
        for (name, end, pos) in [
            (&flow.out_port, End::Send, flow.pos),
            (&flow.in_port, End::Receive, flow.in_pos),
        ] {
            let subject = format!("{}.{}", flow.component, name);
            match component.port(name) {
                Some(port) => self.check_direction(subject, port.direction, end, pos),
                None => self.push(
                    ViolationKind::UnknownPort,
                    subject,
                    format!("component `{}` has no port `{}`", flow.component, name),
                    pos,
                ),
            }
        }
        if flow.out_port == flow.in_port {
            self.push(
                ViolationKind::SelfReference,
                format!("{}.{}", flow.component, flow.out_port),
                format!(
                    "`internal` connects port `{}.{}` to itself",
                    flow.component, flow.out_port
                ),
                flow.pos,
            );
        }
    }
}
