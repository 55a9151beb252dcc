//! The `sgrass` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation error, 3 verification
//! mismatch, 4 resource guard.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bruhat_graph::{self, DotStyle, DEFAULT_MAX_GRAPH_RANK};
use crate::covering::{self, CoveringEdge};
use crate::error::Error;
use crate::grassmannian::{self, GrassmannPerm};
use crate::maya::MayaDiagram;
use crate::oracle::{self, DEFAULT_MAX_RANK};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "sgrass",
    version,
    about = "Signed k-Grassmannian permutations and their Bruhat covering relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Maya,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Length, partition pair (α, λ) and the counts μ, d of a representative.
    Length {
        #[arg(long)]
        k: usize,
        #[arg(allow_hyphen_values = true)]
        perm: String,
    },
    /// List every element of W_n^(k) in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Elements covered by a representative, tagged B1..B4.
    CoveredBy {
        #[arg(long)]
        k: usize,
        #[arg(allow_hyphen_values = true)]
        perm: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Elements covering a representative, tagged B1..B4.
    Covers {
        #[arg(long)]
        k: usize,
        #[arg(allow_hyphen_values = true)]
        perm: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Type of the pair (w, w2) if w covers w2, otherwise "none".
    Classify {
        #[arg(long)]
        k: usize,
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(allow_hyphen_values = true)]
        w2: String,
    },
    /// The dual w·w0.
    Dual {
        #[arg(long)]
        k: usize,
        #[arg(allow_hyphen_values = true)]
        perm: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Convert between one-line notation and Maya diagrams.
    Maya {
        #[command(subcommand)]
        action: MayaAction,
    },
    /// Build the Bruhat graph of W_n^(k) and export it.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// DOT attributes for B1 arrows.
        #[arg(long)]
        b1_style: Option<String>,
        #[arg(long)]
        b2_style: Option<String>,
        #[arg(long)]
        b3_style: Option<String>,
        #[arg(long)]
        b4_style: Option<String>,
        /// Link each node to its dual with an undirected gray edge.
        #[arg(long)]
        dual_links: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_GRAPH_RANK)]
        max_rank: usize,
    },
    /// Compare the covering moves with the brute-force oracle for all n <= max-n.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Directory for cached full-group tables.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_RANK)]
        max_rank: usize,
    },
}

#[derive(Debug, Subcommand)]
enum MayaAction {
    Encode {
        #[arg(long)]
        k: usize,
        #[arg(allow_hyphen_values = true)]
        perm: String,
        /// Print ∘ • × instead of o b x.
        #[arg(long)]
        unicode: bool,
    },
    Decode {
        diagram: String,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceGuard { .. } => EXIT_RESOURCE,
        Error::Invariant(_) => EXIT_MISMATCH,
        _ => EXIT_VALIDATION,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

type CmdResult = std::result::Result<i32, Error>;

#[derive(Serialize)]
struct EdgeJson<'a> {
    #[serde(rename = "type")]
    ctype: covering::CoverType,
    upper: &'a GrassmannPerm,
    lower: &'a GrassmannPerm,
}

fn render(g: &GrassmannPerm, format: Format) -> String {
    match format {
        Format::Maya => MayaDiagram::from(g).ascii(),
        Format::Text | Format::Json => g.to_string(),
    }
}

fn print_edges(
    out: &mut dyn Write,
    edges: &[CoveringEdge],
    format: Format,
    pick: fn(&CoveringEdge) -> &GrassmannPerm,
) -> CmdResult {
    if format == Format::Json {
        let docs: Vec<EdgeJson<'_>> = edges
            .iter()
            .map(|e| EdgeJson {
                ctype: e.ctype,
                upper: &e.upper,
                lower: &e.lower,
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&docs)?)?;
    } else {
        for e in edges {
            writeln!(out, "{}\t{}", e.ctype, render(pick(e), format))?;
        }
    }
    Ok(EXIT_OK)
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn execute(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Length { k, perm } => {
            let g = GrassmannPerm::parse(&perm, k)?;
            let pp = g.partition_pair()?;
            let via_inversions = g.to_signed().length();
            if via_inversions != pp.length() {
                return Err(Error::Invariant(format!(
                    "inversion length {via_inversions} differs from |α| + |λ| = {}",
                    pp.length()
                )));
            }
            writeln!(out, "length: {}", pp.length())?;
            writeln!(out, "alpha: {}", join(&pp.alpha))?;
            writeln!(out, "lambda: {}", join(&pp.lambda))?;
            writeln!(out, "mu: {}", join(&pp.mu))?;
            writeln!(out, "d: {}", join(&pp.d))?;
            Ok(EXIT_OK)
        }
        Command::Enumerate { n, k, format } => {
            if n == 0 || k > n {
                return Err(Error::Contract(format!(
                    "need n >= 1 and k <= n, got n = {n}, k = {k}"
                )));
            }
            if n > DEFAULT_MAX_GRAPH_RANK {
                return Err(Error::ResourceGuard {
                    n,
                    max: DEFAULT_MAX_GRAPH_RANK,
                });
            }
            if format == Format::Json {
                let all: Vec<GrassmannPerm> = grassmannian::enumerate(n, k).collect();
                writeln!(out, "{}", serde_json::to_string_pretty(&all)?)?;
            } else {
                for g in grassmannian::enumerate(n, k) {
                    writeln!(out, "{}", render(&g, format))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::CoveredBy { k, perm, format } => {
            let g = GrassmannPerm::parse(&perm, k)?;
            print_edges(out, &covering::covered_by(&g), format, |e| &e.lower)
        }
        Command::Covers { k, perm, format } => {
            let g = GrassmannPerm::parse(&perm, k)?;
            print_edges(out, &covering::covers_of(&g), format, |e| &e.upper)
        }
        Command::Classify { k, w, w2 } => {
            let w = GrassmannPerm::parse(&w, k)?;
            let w2 = GrassmannPerm::parse(&w2, k)?;
            match covering::classify(&w, &w2)? {
                Some(t) => writeln!(out, "{t}")?,
                None => writeln!(out, "none")?,
            }
            Ok(EXIT_OK)
        }
        Command::Dual { k, perm, format } => {
            let g = GrassmannPerm::parse(&perm, k)?.dual();
            if format == Format::Json {
                writeln!(out, "{}", serde_json::to_string(&g)?)?;
            } else {
                writeln!(out, "{}", render(&g, format))?;
            }
            Ok(EXIT_OK)
        }
        Command::Maya { action } => {
            match action {
                MayaAction::Encode { k, perm, unicode } => {
                    let d = MayaDiagram::from(&GrassmannPerm::parse(&perm, k)?);
                    if unicode {
                        writeln!(out, "{}", d.to_unicode())?;
                    } else {
                        writeln!(out, "{d}")?;
                    }
                }
                MayaAction::Decode { diagram } => {
                    let d: MayaDiagram = diagram.parse()?;
                    writeln!(out, "{}", GrassmannPerm::from(&d))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Graph {
            n,
            k,
            dot,
            json,
            b1_style,
            b2_style,
            b3_style,
            b4_style,
            dual_links,
            max_rank,
        } => {
            let graph = bruhat_graph::build_graph_bounded(n, k, max_rank)?;
            let mut style = DotStyle {
                dual_links,
                ..DotStyle::default()
            };
            for (slot, custom) in [
                (&mut style.b1, b1_style),
                (&mut style.b2, b2_style),
                (&mut style.b3, b3_style),
                (&mut style.b4, b4_style),
            ] {
                if let Some(s) = custom {
                    *slot = s;
                }
            }
            if let Some(path) = dot {
                fs::write(path, graph.export_dot_with(&style))?;
            }
            if let Some(path) = json {
                fs::write(path, graph.export_json())?;
            }
            writeln!(out, "nodes: {}", graph.nodes().len())?;
            writeln!(out, "edges: {}", graph.edges().len())?;
            writeln!(out, "rank sizes: {}", join(&graph.rank_sizes()))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            max_n,
            cache,
            max_rank,
        } => {
            let report = oracle::verify_theorem_bounded(max_n, max_rank, cache.as_deref())?;
            writeln!(out, "n\tk\tnodes\toracle\ttheorem\tB1\tB2\tB3\tB4\tstatus")?;
            for c in &report.checks {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    c.n,
                    c.k,
                    c.nodes,
                    c.oracle_edges,
                    c.theorem_edges,
                    c.type_counts[0],
                    c.type_counts[1],
                    c.type_counts[2],
                    c.type_counts[3],
                    if c.is_ok() { "ok" } else { "MISMATCH" }
                )?;
                for (lo, hi) in &c.missing {
                    writeln!(out, "  missing: {hi} covers {lo}")?;
                }
                for (lo, hi) in &c.extra {
                    writeln!(out, "  extra: {hi} covers {lo}")?;
                }
                for (lo, hi) in &c.mislabeled {
                    writeln!(out, "  mislabeled: {hi} covers {lo}")?;
                }
            }
            if report.is_ok() {
                writeln!(out, "OK")?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "MISMATCH")?;
                Ok(EXIT_MISMATCH)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sgrass").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn length_reports_partition_pair() {
        let (code, out, _) = call(&["length", "--k", "3", "2 5 6 | -8 -7 -4 -1 3"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "length: 34\nalpha: 4 5 5\nlambda: 8 7 4 1\nmu: 1 0 0\nd: 3 2 2\n"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["length", "2 1"]).0, EXIT_USAGE);
        assert_eq!(call(&["length", "--k", "1", "1 1"]).0, EXIT_VALIDATION);
        assert_eq!(
            call(&["length", "--k", "2", "2 5 6 | -8 -7 -4 -1 3"]).0,
            EXIT_VALIDATION
        );
        assert_eq!(call(&["verify", "--max-n", "8"]).0, EXIT_RESOURCE);
        assert_eq!(call(&["graph", "--n", "20", "--k", "2"]).0, EXIT_RESOURCE);
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("covered-by"));
    }

    #[test]
    fn leading_negative_entry() {
        let (code, out, err) = call(&["maya", "encode", "--k", "0", "-2 -1"]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out, "bb\n");
    }
}
