//! Architectural dependence analysis for MiniADL descriptions.
//!
//! [`parse`] reads an architecture, [`Adg::build`] infers its classified
//! dependence arcs and [`Analysis::run`] computes the dependence-based
//! complexity metrics. [`render_json`], [`render_text`] and [`to_dot`]
//! produce byte-stable output.
//!
//! ```
//! use adg_metrics::{parse_str, Analysis};
//!
//! let arch = parse_str(adg_metrics::fixtures::PIPELINE).unwrap();
//! let report = Analysis::run(&arch, true).report;
//! assert_eq!((report.m_t, report.m_t_star, report.m_s_star), (3, 6, 3));
//! ```

pub mod adg;
pub mod cli;
pub mod dependence;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod lexer;
pub mod metrics;
pub mod model;
pub mod parser;
pub mod printer;
pub mod relation;
pub mod report;

pub use adg::{Adg, AdgError, IndexedArc};
pub use dependence::{
    infer_all, infer_constrained, infer_flow, infer_shared, Arc, ArcSet, DependenceKind, VertexId,
};
pub use dot::to_dot;
pub use error::{ParseError, ParseErrorKind};
pub use lexer::tokenize;
pub use metrics::{
    compute_report, m_global, m_global_star, m_most_affected, m_most_affected_star, m_total,
    m_total_star, Analysis, KindCounts, MetricsReport,
};
pub use model::{
    AccessMode, Architecture, Attachment, Component, Direction, ExclusivePair, InternalFlow, Port,
    PortRef, Resource, ResourceAccess, SourcePos, ValidationOutcome, Violation, ViolationKind,
};
pub use parser::{parse, parse_str};
pub use printer::pretty_print;
pub use relation::Relation;
pub use report::{render_json, render_text, RenderOptions};
