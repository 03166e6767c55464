//! `adg-metrics` command line.
//!
//! Exit codes: 0 success, 1 parse or validation error, 2 usage error,
//! 3 I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::dot::to_dot;
use crate::metrics::Analysis;
use crate::parser::parse;
use crate::report::{render_json, render_text, RenderOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "adg-metrics",
    version,
    about = "Dependence-based architecture metrics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze a MiniADL architecture file
    Analyze(AnalyzeArgs),
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Architecture description to analyze
    path: PathBuf,
    /// Emit the report as JSON
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Emit the report as plain text (default)
    #[arg(long)]
    text: bool,
    /// Also write the dependence graph in DOT format to this file
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Do not assume intra-component flow between a component's ports
    #[arg(long)]
    no_default_internal: bool,
    /// Include the transitive closure pairs in the report
    #[arg(long)]
    closure: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub input_path: PathBuf,
    pub output_format: OutputFormat,
    pub dot_path: Option<PathBuf>,
    pub default_internal: bool,
    pub show_closure: bool,
}

impl CliConfig {
    pub fn new(input_path: impl Into<PathBuf>) -> Self {
        CliConfig {
            input_path: input_path.into(),
            output_format: OutputFormat::Text,
            dot_path: None,
            default_internal: true,
            show_closure: false,
        }
    }

    pub fn render_options(&self) -> RenderOptions {
        RenderOptions {
            show_closure: self.show_closure,
        }
    }
}

impl From<AnalyzeArgs> for CliConfig {
    fn from(args: AnalyzeArgs) -> Self {
        CliConfig {
            input_path: args.path,
            output_format: if args.json {
                OutputFormat::Json
            } else {
                OutputFormat::Text
            },
            dot_path: args.dot,
            default_internal: !args.no_default_internal,
            show_closure: args.closure,
        }
    }
}

/// Parses `argv` (including the program name) into a configuration, or
/// returns the exit code and the message clap produced.
pub fn parse_args<I, T>(argv: I) -> Result<CliConfig, (i32, String)>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(Cli {
            command: Command::Analyze(args),
        }) => Ok(args.into()),
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            Err((code, e.render().to_string()))
        }
    }
}

/// Runs the tool against the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_args(argv) {
        Ok(config) => analyze(&config, stdout, stderr),
        Err((code, message)) => {
            let sink: &mut dyn Write = if code == EXIT_OK { stdout } else { stderr };
            let _ = sink.write_all(message.as_bytes());
            code
        }
    }
}

fn io_error(stderr: &mut dyn Write, path: &Path, err: &std::io::Error) -> i32 {
    let _ = writeln!(stderr, "{}: error: {}", path.display(), err);
    EXIT_IO
}

/// Analyzes one file as described by `config`.
pub fn analyze(config: &CliConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let path = &config.input_path;
    let source = match std::fs::read(path) {
        Ok(bytes) => bytes,
        Err(e) => return io_error(stderr, path, &e),
    };
    let arch = match parse(&source) {
        Ok(arch) => arch,
        Err(e) => {
            let _ = writeln!(
                stderr,
                "{}:{}:{}: error: {}",
                path.display(),
                e.line,
                e.column,
                e.message
            );
            return EXIT_PARSE;
        }
    };

    let analysis = Analysis::run(&arch, config.default_internal);
    let options = config.render_options();
    let rendered = match config.output_format {
        OutputFormat::Json => render_json(&analysis.report, &analysis.adg, &options),
        OutputFormat::Text => render_text(&analysis.report, &analysis.adg, &options),
    };

    if let Some(dot_path) = &config.dot_path {
        if let Err(e) = std::fs::write(dot_path, to_dot(&analysis.adg)) {
            return io_error(stderr, dot_path, &e);
        }
    }
    if let Err(e) = stdout
        .write_all(rendered.as_bytes())
        .and_then(|_| stdout.flush())
    {
        let _ = writeln!(stderr, "<stdout>: error: {e}");
        return EXIT_IO;
    }
    EXIT_OK
}
