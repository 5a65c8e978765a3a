//! Command-line front end: parse inputs, dispatch to the computation
//! modules, and emit deterministic text tables or JSON (one object per
//! invocation, stable field order, schema-versioned, no floating point).

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{Polynomial, Var};
use crate::blowup::{hoskin_deligne_check, lech_check, multiplicity_from_cluster, ClusterTree};
use crate::bounds::{konno_bounds_hypersurface, konno_bounds_k3};
use crate::corpus::run_corpus;
use crate::error::{Error, Result};
use crate::parse::{parse_monomial_ideal, parse_polynomial};
use crate::pencil::{resolve_pencil, Pencil, PencilReport};
use crate::staircase::MonomialIdeal;

#[derive(Parser, Debug)]
#[command(
    name = "konno",
    version,
    about = "Exact blow-up invariants of plane pencils and monomial ideals",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a single JSON object instead of a text table
    #[arg(long, global = true)]
    json: bool,
    /// Maximum blow-up nesting before giving up (at most 2048)
    #[arg(long, global = true, default_value_t = 64)]
    depth_cap: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of a finite-colength monomial ideal like "x^3, y^2"
    Ideal {
        /// Generators in the ideal grammar
        input: Option<String>,
        /// Read one ideal per line from a file instead
        #[arg(long, conflicts_with = "input")]
        file: Option<PathBuf>,
    },
    /// Resolve a pencil of plane curves spanned by two forms
    Pencil {
        f: Option<String>,
        g: Option<String>,
        /// Read one pencil per line ("f ; g") from a file instead
        #[arg(long, conflicts_with_all = ["f", "g"])]
        file: Option<PathBuf>,
        /// Treat the inputs as affine polynomials in x, y and homogenize
        #[arg(long)]
        affine: bool,
        /// Homogenization degree for --affine (default: larger input degree)
        #[arg(long, requires = "affine")]
        degree: Option<u64>,
    },
    /// Genus bounds for a degree-d hypersurface in P^(n+1)
    Hypersurface {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
    },
    /// Genus window for a polarized K3 surface of genus d
    K3 {
        #[arg(long)]
        d: Option<u64>,
        /// Sweep every genus from 3 to MAX, emitting one row per value
        #[arg(long, value_name = "MAX", conflicts_with = "d")]
        sweep: Option<u64>,
    },
    /// Seeded randomized verification sweep over ideals and pencils
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
    },
}

/// Run the CLI on the given arguments (without the program name), writing
/// all output to `out`. Returns the process exit code: 0 success, 2 input
/// errors, 3 violated mathematical preconditions, 4 caps.
pub fn run<W: Write>(args: &[String], out: &mut W) -> i32 {
    let mut argv = vec!["konno".to_string()];
    argv.extend_from_slice(args);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch<W: Write>(cli: &Cli, out: &mut W) -> Result<()> {
    // Nested report serialization is recursion-bound, so the cap has a
    // hard ceiling.
    if cli.depth_cap > 2048 {
        return Err(Error::Parse {
            offset: 0,
            expected: "a depth cap of at most 2048".to_string(),
            found: cli.depth_cap.to_string(),
        });
    }
    match &cli.command {
        Command::Ideal { input, file } => {
            let inputs = gather_inputs(input.as_deref(), file.as_deref())?;
            let reports = inputs
                .iter()
                .map(|text| ideal_report(text, cli.depth_cap))
                .collect::<Result<Vec<_>>>()?;
            emit_all(out, cli.json, &reports, ideal_text)
        }
        Command::Pencil {
            f,
            g,
            file,
            affine,
            degree,
        } => {
            let pairs: Vec<(String, String)> = match (f, g, file) {
                (Some(f), Some(g), None) => vec![(f.clone(), g.clone())],
                (None, None, Some(path)) => read_lines(path)?
                    .into_iter()
                    .map(|line| split_pencil_line(&line))
                    .collect::<Result<Vec<_>>>()?,
                _ => {
                    return Err(Error::Parse {
                        offset: 0,
                        expected: "two polynomials or --file".to_string(),
                        found: "incomplete pencil input".to_string(),
                    })
                }
            };
            let reports = pairs
                .iter()
                .map(|(ftext, gtext)| {
                    let pencil = build_pencil(ftext, gtext, *affine, *degree)?;
                    let report = resolve_pencil(&pencil, cli.depth_cap)?;
                    Ok(WithSchema::new(report))
                })
                .collect::<Result<Vec<_>>>()?;
            emit_all(out, cli.json, &reports, |r, out| pencil_text(&r.inner, out))
        }
        Command::Hypersurface { n, d } => {
            if *n < 2 {
                return Err(Error::Parse {
                    offset: 0,
                    expected: "a dimension n >= 2".to_string(),
                    found: n.to_string(),
                });
            }
            if *d < 1 {
                return Err(Error::Parse {
                    offset: 0,
                    expected: "a degree d >= 1".to_string(),
                    found: d.to_string(),
                });
            }
            let bounds = WithSchema::new(konno_bounds_hypersurface(*n, *d)?);
            if cli.json {
                emit_json(out, &bounds)?;
            } else {
                let b = &bounds.inner;
                writeln!(out, "hypersurface  n {}  d {}", b.n, b.d).map_err_io()?;
                kv(out, "h0(K)", b.h0_k)?;
                kv(out, "h0(K - H)", b.h0_k_minus_h)?;
                kv(out, "h0(K + H)", b.h0_k_plus_h)?;
                kv(out, "lower bound", b.lower)?;
                kv(out, "upper bound", b.upper)?;
                if b.degenerate {
                    writeln!(out, "note: degenerate range (d <= n + 1), bounds are zero")
                        .map_err_io()?;
                }
            }
            Ok(())
        }
        Command::K3 { d, sweep } => match (d, sweep) {
            (Some(d), None) => {
                let bounds = WithSchema::new(konno_bounds_k3(*d)?);
                if cli.json {
                    emit_json(out, &bounds)?;
                } else {
                    let b = &bounds.inner;
                    writeln!(out, "k3  d {}", b.d).map_err_io()?;
                    kv(out, "m", b.m)?;
                    kv(out, "g_min", b.g_min)?;
                    kv(out, "g_max", b.g_max)?;
                }
                Ok(())
            }
            (None, Some(max)) => {
                if *max < 3 {
                    return Err(Error::Parse {
                        offset: 0,
                        expected: "a sweep bound of at least 3".to_string(),
                        found: max.to_string(),
                    });
                }
                let rows = (3..=*max)
                    .map(konno_bounds_k3)
                    .collect::<Result<Vec<_>>>()?;
                if cli.json {
                    #[derive(Serialize)]
                    struct Sweep<'a> {
                        schema: &'static str,
                        rows: &'a [crate::bounds::K3Bounds],
                    }
                    emit_json(
                        out,
                        &Sweep {
                            schema: "1",
                            rows: &rows,
                        },
                    )?;
                } else {
                    writeln!(out, "{:>6} {:>6} {:>8} {:>8}", "d", "m", "g_min", "g_max")
                        .map_err_io()?;
                    for b in &rows {
                        writeln!(out, "{:>6} {:>6} {:>8} {:>8}", b.d, b.m, b.g_min, b.g_max)
                            .map_err_io()?;
                    }
                }
                Ok(())
            }
            _ => Err(Error::Parse {
                offset: 0,
                expected: "exactly one of --d or --sweep".to_string(),
                found: "neither".to_string(),
            }),
        },
        Command::Corpus { seed, count } => {
            if *count < 1 {
                return Err(Error::Parse {
                    offset: 0,
                    expected: "a count of at least 1".to_string(),
                    found: count.to_string(),
                });
            }
            let report = WithSchema::new(run_corpus(*seed, *count, None));
            if cli.json {
                emit_json(out, &report)?;
            } else {
                let r = &report.inner;
                writeln!(out, "corpus  seed {}  count {}", r.seed, r.count).map_err_io()?;
                kv(out, "ideal instances", r.ideal_instances)?;
                kv(out, "pencil instances", r.pencil_instances)?;
                kv(out, "passes", r.passes)?;
                kv(out, "failures", r.failures.len() as u64)?;
                for dump in &r.failures {
                    writeln!(
                        out,
                        "FAIL [{}] {} input: {}  checks: {}",
                        dump.index,
                        dump.kind,
                        dump.input,
                        dump.failed_checks.join(", ")
                    )
                    .map_err_io()?;
                }
            }
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------
// ideal subcommand plumbing
// ---------------------------------------------------------------------

#[derive(Serialize)]
struct HoskinDeligneView {
    colength: u64,
    hd_sum: u64,
    closed: bool,
    verdict: String,
    clusters_equal: bool,
}

#[derive(Serialize)]
struct LechView {
    e: u64,
    colength: u64,
    lhs_holds: bool,
    slack: String,
}

#[derive(Serialize)]
struct IdealReport {
    schema: &'static str,
    input: String,
    generators: Vec<String>,
    colength: u64,
    order: u64,
    e: u64,
    integrally_closed: bool,
    closure_generators: Vec<String>,
    multiplicity_from_cluster: u64,
    hoskin_deligne: HoskinDeligneView,
    lech: LechView,
    cluster: ClusterTree,
    closure_cluster: ClusterTree,
}

fn ideal_report(text: &str, depth_cap: u32) -> Result<IdealReport> {
    let ideal = MonomialIdeal::minimalize(&parse_monomial_ideal(text)?)?;
    if !ideal.has_finite_colength() {
        return Err(Error::InfiniteColength);
    }
    let hd = hoskin_deligne_check(&ideal, depth_cap)?;
    let lech = lech_check(&ideal)?;
    let closure = ideal.integral_closure()?;
    Ok(IdealReport {
        schema: "1",
        input: text.to_string(),
        generators: ideal.generator_strings(),
        colength: ideal.colength()?,
        order: ideal.order(),
        e: ideal.samuel_multiplicity()?,
        integrally_closed: hd.closed,
        closure_generators: closure.generator_strings(),
        multiplicity_from_cluster: multiplicity_from_cluster(&ideal, depth_cap)?,
        hoskin_deligne: HoskinDeligneView {
            colength: hd.colength,
            hd_sum: hd.hd_sum,
            closed: hd.closed,
            verdict: hd.verdict.clone(),
            clusters_equal: hd.clusters_equal,
        },
        lech: LechView {
            e: lech.e,
            colength: lech.colength,
            lhs_holds: lech.lhs_holds,
            slack: lech.slack,
        },
        cluster: hd.cluster,
        closure_cluster: hd.closure_cluster,
    })
}

fn ideal_text<W: Write>(r: &IdealReport, out: &mut W) -> Result<()> {
    writeln!(out, "ideal: {}", r.generators.join(", ")).map_err_io()?;
    kv(out, "colength", r.colength)?;
    kv(out, "order", r.order)?;
    kv(out, "samuel multiplicity e", r.e)?;
    writeln!(
        out,
        "{:<22} {}",
        "integrally closed",
        if r.integrally_closed { "yes" } else { "no" }
    )
    .map_err_io()?;
    writeln!(out, "{:<22} {}", "closure", r.closure_generators.join(", ")).map_err_io()?;
    writeln!(
        out,
        "{:<22} colength {} vs sum m(m+1)/2 {} ({})",
        "hoskin-deligne",
        r.hoskin_deligne.colength,
        r.hoskin_deligne.hd_sum,
        r.hoskin_deligne.verdict
    )
    .map_err_io()?;
    writeln!(
        out,
        "{:<22} e + sqrt(e) <= 2 colength: {} (slack {})",
        "lech",
        if r.lech.lhs_holds { "holds" } else { "FAILS" },
        r.lech.slack
    )
    .map_err_io()?;
    writeln!(
        out,
        "{:<22} {}",
        "closure cluster",
        cluster_line(&r.closure_cluster)
    )
    .map_err_io()?;
    Ok(())
}

fn cluster_line(tree: &ClusterTree) -> String {
    let ms = tree.multiplicities();
    if ms.is_empty() {
        "(empty)".to_string()
    } else {
        format!(
            "multiplicities ({})",
            ms.iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

fn pencil_text<W: Write>(r: &PencilReport, out: &mut W) -> Result<()> {
    writeln!(out, "pencil: <{}> , <{}>", r.f, r.g).map_err_io()?;
    kv(out, "degree d", r.degree)?;
    kv(out, "base points", r.cluster.roots.len() as u64)?;
    kv(out, "sum m", r.sums.sum_m)?;
    kv(out, "sum m^2", r.sums.sum_m_sq)?;
    kv(out, "sum m(m-1)", r.sums.sum_m_m_minus_1)?;
    writeln!(out, "{:<22} {}", "L^2", r.l2).map_err_io()?;
    writeln!(out, "{:<22} {}", "K.L", r.kl).map_err_io()?;
    writeln!(out, "{:<22} {}", "arithmetic genus", r.pa).map_err_io()?;
    writeln!(out, "{:<22} {}", "geometric genus", r.genus).map_err_io()?;
    let c = &r.checks;
    for (name, value) in [
        ("self_intersection_zero", c.self_intersection_zero),
        ("genus_formula", c.genus_formula),
        ("genus_integral", c.genus_integral),
        ("thm21", c.thm21),
        ("thm21_exact_identity", c.thm21_exact_identity),
        ("eq2", c.eq2),
    ] {
        writeln!(out, "check {:<26} {}", name, value).map_err_io()?;
    }
    Ok(())
}

// ---------------------------------------------------------------------
// shared plumbing
// ---------------------------------------------------------------------

#[derive(Serialize)]
struct WithSchema<T: Serialize> {
    schema: &'static str,
    #[serde(flatten)]
    inner: T,
}

impl<T: Serialize> WithSchema<T> {
    fn new(inner: T) -> WithSchema<T> {
        WithSchema { schema: "1", inner }
    }
}

fn emit_json<W: Write, T: Serialize>(out: &mut W, value: &T) -> Result<()> {
    let json = serde_json::to_string(value).map_err_io()?;
    writeln!(out, "{json}").map_err_io()
}

#[derive(Serialize)]
struct Batch<'a, T: Serialize> {
    schema: &'static str,
    results: &'a [T],
}

fn emit_all<W: Write, T: Serialize>(
    out: &mut W,
    json: bool,
    reports: &[T],
    text: impl Fn(&T, &mut W) -> Result<()>,
) -> Result<()> {
    if json {
        if reports.len() == 1 {
            emit_json(out, &reports[0])?;
        } else {
            emit_json(
                out,
                &Batch {
                    schema: "1",
                    results: reports,
                },
            )?;
        }
    } else {
        for (i, r) in reports.iter().enumerate() {
            if i > 0 {
                writeln!(out).map_err_io()?;
            }
            text(r, out)?;
        }
    }
    Ok(())
}

fn gather_inputs(input: Option<&str>, file: Option<&std::path::Path>) -> Result<Vec<String>> {
    match (input, file) {
        (Some(text), None) => Ok(vec![text.to_string()]),
        (None, Some(path)) => read_lines(path),
        _ => Err(Error::Parse {
            offset: 0,
            expected: "an ideal argument or --file".to_string(),
            found: "neither".to_string(),
        }),
    }
}

fn read_lines(path: &std::path::Path) -> Result<Vec<String>> {
    let content = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        offset: 0,
        expected: format!("a readable file at {}", path.display()),
        found: e.to_string(),
    })?;
    Ok(content
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect())
}

fn split_pencil_line(line: &str) -> Result<(String, String)> {
    match line.split_once(';') {
        Some((f, g)) => Ok((f.trim().to_string(), g.trim().to_string())),
        None => Err(Error::Parse {
            offset: 0,
            expected: "a line of the form 'f ; g'".to_string(),
            found: line.to_string(),
        }),
    }
}

fn build_pencil(ftext: &str, gtext: &str, affine: bool, degree: Option<u64>) -> Result<Pencil> {
    if affine {
        let vars = [Var::X, Var::Y];
        let fa = parse_polynomial(ftext, &vars)?;
        let ga = parse_polynomial(gtext, &vars)?;
        if fa.is_zero() || ga.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let d = degree.unwrap_or_else(|| {
            fa.total_degree()
                .unwrap_or(0)
                .max(ga.total_degree().unwrap_or(0))
        });
        Pencil::new(fa.homogenize(d)?, ga.homogenize(d)?)
    } else {
        let vars = [Var::X, Var::Y, Var::Z];
        let f: Polynomial = parse_polynomial(ftext, &vars)?;
        let g: Polynomial = parse_polynomial(gtext, &vars)?;
        Pencil::new(f, g)
    }
}

fn kv<W: Write>(out: &mut W, key: &str, value: u64) -> Result<()> {
    writeln!(out, "{key:<22} {value}").map_err_io()
}

trait IoResultExt<T> {
    fn map_err_io(self) -> Result<T>;
}

impl<T> IoResultExt<T> for std::io::Result<T> {
    fn map_err_io(self) -> Result<T> {
        self.map_err(|e| Error::Parse {
            offset: 0,
            expected: "a writable output stream".to_string(),
            found: e.to_string(),
        })
    }
}

impl<T> IoResultExt<T> for serde_json::Result<T> {
    fn map_err_io(self) -> Result<T> {
        self.map_err(|e| Error::Parse {
            offset: 0,
            expected: "serializable report".to_string(),
            found: e.to_string(),
        })
    }
}
