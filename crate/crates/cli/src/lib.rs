//! Command-line front end for the facet-counting toolkit: generate the
//! extremal configurations, count facets, check lower bounds and
//! identities, inspect structure, and run the half-net explorer.
//!
//! Reports print as aligned tables by default; `--jsonl` switches to
//! line-delimited JSON records with every non-integer quantity rendered as
//! an exact rational string.
//!
//! Exit codes: 0 success, 1 bad input (unreadable file, degenerate points,
//! divisibility errors), 2 invariant violation (a bound, identity, check
//! or oracle comparison failed; these signal bugs, not bad input),
//! 64 usage errors.

pub mod format;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use format::{FormatError, PointFile};
use kfacets::bounds::verify_bounds;
use kfacets::conjecture::{explore, ConjectureError};
use kfacets::construct::{
    gen_tight_planar_basic, gen_tight_planar_extended, gen_tight_simplicial,
    verify_extended_properties, verify_ray_config, ChainedConfig, ConstructError,
    ConstructionReport,
};
use kfacets::count::{count_facets, crossing_identity, sweep_count_2d};
use kfacets::structure::{
    check_structural_optimality, find_half_net_2d, verify_eps_net, StructureError,
};
use kfacets::{GeomError, PointSet, Rational};

#[derive(Parser)]
#[command(
    name = "kfacets",
    version,
    about = "Exact k-facet counting and extremal configuration tools"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an extremal configuration and write it as a point file
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Count k-facets; prints k, e_k and the running total E_k
    Count {
        file: PathBuf,
        /// Use the rotating-sweep counter (planar sets only)
        #[arg(long)]
        sweep: bool,
        /// Largest k to print (default: all)
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long)]
        jsonl: bool,
    },
    /// Check every applicable lower bound against the counted E_k
    Bounds {
        file: PathBuf,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        jsonl: bool,
    },
    /// Report the structural cascade forced by an optimal count at k
    Structure {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        jsonl: bool,
    },
    /// Evaluate both sides of the convex-quadrilateral identity
    Crossing {
        file: PathBuf,
        #[arg(long)]
        jsonl: bool,
    },
    /// Build a simplicial half-net of a planar set and verify it
    Halfnet {
        file: PathBuf,
        #[arg(long)]
        jsonl: bool,
    },
    /// Search seeded random sets for simplicial half-nets
    Explore {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jsonl: bool,
    },
    /// Cross-check the enumeration and sweep counters on one planar set
    Compare { file: PathBuf },
    /// Re-verify the defining properties of a labeled configuration
    VerifyConstruction {
        file: PathBuf,
        #[arg(long)]
        jsonl: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Planar set of n = 3m points, optimal out to k = n/3 - 1
    Basic {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Planar set of n = 12m points, tight out to k = 5n/12 - 1
    Extended {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// d+1 chains of m points along simplex rays in dimension d
    Simplicial {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

enum CmdError {
    /// Exit 1: the input cannot be processed.
    Input(String),
    /// Exit 2: a mathematical invariant failed to hold.
    Violation(String),
}

type CmdResult = Result<(), CmdError>;

impl From<FormatError> for CmdError {
    fn from(e: FormatError) -> Self {
        CmdError::Input(e.to_string())
    }
}

impl From<GeomError> for CmdError {
    fn from(e: GeomError) -> Self {
        CmdError::Input(e.to_string())
    }
}

impl From<ConstructError> for CmdError {
    fn from(e: ConstructError) -> Self {
        CmdError::Input(e.to_string())
    }
}

impl From<ConjectureError> for CmdError {
    fn from(e: ConjectureError) -> Self {
        CmdError::Input(e.to_string())
    }
}

impl From<StructureError> for CmdError {
    fn from(e: StructureError) -> Self {
        match e {
            // The iteration invariant is proved to hold; breaking it is a
            // bug, not a property of the input.
            StructureError::IterationInvariant(msg) => CmdError::Violation(msg),
            other => CmdError::Input(other.to_string()),
        }
    }
}

/// Parses `argv` and runs one command, returning the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok(()) => 0,
        Err(CmdError::Input(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CmdError::Violation(msg)) => {
            eprintln!("violation: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Cmd) -> CmdResult {
    match cmd {
        Cmd::Gen { family } => cmd_gen(family),
        Cmd::Count {
            file,
            sweep,
            kmax,
            jsonl,
        } => cmd_count(&file, sweep, kmax, jsonl),
        Cmd::Bounds { file, kmax, jsonl } => cmd_bounds(&file, kmax, jsonl),
        Cmd::Structure { file, k, jsonl } => cmd_structure(&file, k, jsonl),
        Cmd::Crossing { file, jsonl } => cmd_crossing(&file, jsonl),
        Cmd::Halfnet { file, jsonl } => cmd_halfnet(&file, jsonl),
        Cmd::Explore {
            trials,
            n,
            d,
            seed,
            jsonl,
        } => cmd_explore(trials, n, d, seed, jsonl),
        Cmd::Compare { file } => cmd_compare(&file),
        Cmd::VerifyConstruction { file, jsonl } => cmd_verify_construction(&file, jsonl),
    }
}

fn load_point_file(path: &Path) -> Result<PointFile, CmdError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))?;
    PointFile::parse(&text).map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))
}

fn load_set(path: &Path) -> Result<PointSet, CmdError> {
    let s = load_point_file(path)?.to_set()?;
    if s.len() <= s.dim() {
        return Err(CmdError::Input(format!(
            "need more than {} points in dimension {}, got {}",
            s.dim(),
            s.dim(),
            s.len()
        )));
    }
    Ok(s)
}

fn load_config(path: &Path) -> Result<ChainedConfig, CmdError> {
    Ok(load_point_file(path)?.to_config()?)
}

fn emit(file: &PointFile, out: Option<&Path>) -> CmdResult {
    let text = file.render();
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CmdError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_gen(family: Family) -> CmdResult {
    match family {
        Family::Basic { n, out } => {
            let cfg = gen_tight_planar_basic(n)?;
            emit(&PointFile::from_config(&cfg), out.as_deref())
        }
        Family::Extended { n, out } => {
            let cfg = gen_tight_planar_extended(n)?;
            emit(&PointFile::from_config(&cfg), out.as_deref())
        }
        Family::Simplicial { d, m, out } => {
            let cfg = gen_tight_simplicial(d, m)?;
            emit(&PointFile::from_config(&cfg), out.as_deref())
        }
    }
}

/// Right-aligns every cell under its header with a two-space gutter.
fn print_table(headers: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        let rendered: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c:>w$}", w = widths[i]))
            .collect();
        println!("{}", rendered.join("  ").trim_end());
    };
    line(&headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in rows {
        line(row);
    }
}

fn jsonl<T: Serialize>(record: &T) {
    println!(
        "{}",
        serde_json::to_string(record).expect("record serializes")
    );
}

fn yesno(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

#[derive(Serialize)]
struct CountLine {
    k: usize,
    e: u64,
    #[serde(rename = "E")]
    leq: u64,
}

fn cmd_count(file: &Path, sweep: bool, kmax: Option<usize>, use_jsonl: bool) -> CmdResult {
    let s = load_set(file)?;
    let fv = if sweep {
        sweep_count_2d(&s)?
    } else {
        count_facets(&s)?
    };
    let hi = kmax.unwrap_or(fv.max_k()).min(fv.max_k());
    if use_jsonl {
        for k in 0..=hi {
            jsonl(&CountLine {
                k,
                e: fv.e(k),
                leq: fv.leq(k),
            });
        }
    } else {
        let rows: Vec<Vec<String>> = (0..=hi)
            .map(|k| vec![k.to_string(), fv.e(k).to_string(), fv.leq(k).to_string()])
            .collect();
        print_table(&["k", "e_k", "E_k"], &rows);
    }
    Ok(())
}

#[derive(Serialize)]
struct BoundLine {
    k: usize,
    counted: u64,
    basic: Option<u64>,
    improved: Option<u64>,
    simplicial: Option<u64>,
    satisfied: bool,
    tight: bool,
    optimal: bool,
}

fn opt_cell(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn cmd_bounds(file: &Path, kmax: usize, use_jsonl: bool) -> CmdResult {
    let s = load_set(file)?;
    let rep = verify_bounds(&s, kmax)?;
    if use_jsonl {
        for r in &rep.rows {
            jsonl(&BoundLine {
                k: r.k,
                counted: r.counted,
                basic: r.basic,
                improved: r.improved,
                simplicial: r.simplicial,
                satisfied: r.satisfied,
                tight: r.tight,
                optimal: r.optimal,
            });
        }
    } else {
        let rows: Vec<Vec<String>> = rep
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.k.to_string(),
                    r.counted.to_string(),
                    opt_cell(r.basic),
                    opt_cell(r.improved),
                    opt_cell(r.simplicial),
                    yesno(r.satisfied),
                    yesno(r.tight),
                    yesno(r.optimal),
                ]
            })
            .collect();
        print_table(
            &["k", "E_k", "basic", "improved", "simplicial", "ok", "tight", "optimal"],
            &rows,
        );
    }
    if !rep.all_satisfied() {
        let bad = rep.rows.iter().filter(|r| !r.satisfied).count();
        return Err(CmdError::Violation(format!(
            "{bad} of {} rows fall below a lower bound",
            rep.rows.len()
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct StructureRowLine {
    j: usize,
    #[serde(rename = "E")]
    counted_leq: u64,
    #[serde(rename = "E_expected")]
    expected_leq: u64,
    leq_optimal: bool,
    e: u64,
    e_expected: u64,
    exact_matches: bool,
}

#[derive(Serialize)]
struct StructureSummaryLine {
    k: usize,
    optimal_at_k: bool,
    hull_is_triangle: bool,
    triangular_layers: usize,
    required_layers: usize,
    cascade_holds: bool,
}

fn cmd_structure(file: &Path, k: usize, use_jsonl: bool) -> CmdResult {
    let s = load_set(file)?;
    let rep = check_structural_optimality(&s, k)?;
    let summary = StructureSummaryLine {
        k: rep.k,
        optimal_at_k: rep.optimal_at_k,
        hull_is_triangle: rep.hull_is_triangle,
        triangular_layers: rep.triangular_layers,
        required_layers: rep.required_layers,
        cascade_holds: rep.cascade_holds,
    };
    if use_jsonl {
        for r in &rep.rows {
            jsonl(&StructureRowLine {
                j: r.j,
                counted_leq: r.counted_leq,
                expected_leq: r.expected_leq,
                leq_optimal: r.leq_optimal,
                e: r.counted_exact,
                e_expected: r.expected_exact,
                exact_matches: r.exact_matches,
            });
        }
        jsonl(&summary);
    } else {
        let rows: Vec<Vec<String>> = rep
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.j.to_string(),
                    r.counted_leq.to_string(),
                    r.expected_leq.to_string(),
                    yesno(r.leq_optimal),
                    r.counted_exact.to_string(),
                    r.expected_exact.to_string(),
                    yesno(r.exact_matches),
                ]
            })
            .collect();
        print_table(
            &["j", "E_j", "E_opt", "ok", "e_j", "e_opt", "ok"],
            &rows,
        );
        println!("optimal at k={k}: {}", yesno(rep.optimal_at_k));
        println!("hull is a triangle: {}", yesno(rep.hull_is_triangle));
        println!(
            "triangular layers: {} (required {})",
            rep.triangular_layers, rep.required_layers
        );
        println!("cascade holds: {}", yesno(rep.cascade_holds));
    }
    if !rep.cascade_holds {
        return Err(CmdError::Violation(
            "optimal count without the forced structure".into(),
        ));
    }
    Ok(())
}

#[derive(Serialize)]
struct CrossingLine {
    lhs: u64,
    rhs: String,
    equal: bool,
}

fn cmd_crossing(file: &Path, use_jsonl: bool) -> CmdResult {
    let s = load_set(file)?;
    let id = crossing_identity(&s)?;
    if use_jsonl {
        jsonl(&CrossingLine {
            lhs: id.lhs,
            rhs: id.rhs.to_string(),
            equal: id.equal,
        });
    } else {
        println!("lhs    {}", id.lhs);
        println!("rhs    {}", id.rhs);
        println!("equal  {}", yesno(id.equal));
    }
    if !id.equal {
        return Err(CmdError::Violation(
            "crossing identity does not hold".into(),
        ));
    }
    Ok(())
}

#[derive(Serialize)]
struct HalfnetLine {
    n: usize,
    hull_size: usize,
    iterations: usize,
    net: Vec<usize>,
    epsilon: String,
    verified: bool,
}

fn cmd_halfnet(file: &Path, use_jsonl: bool) -> CmdResult {
    let s = load_set(file)?;
    let run = find_half_net_2d(&s)?;
    let witness = verify_eps_net(&s, &run.net.vertices, &run.net.epsilon)?;
    let line = HalfnetLine {
        n: s.len(),
        hull_size: run.hull_size,
        iterations: run.iterations,
        net: run.net.vertices.clone(),
        epsilon: run.net.epsilon.to_string(),
        verified: witness.is_none(),
    };
    if use_jsonl {
        jsonl(&line);
    } else {
        println!("n           {}", line.n);
        println!("hull size   {}", line.hull_size);
        println!("iterations  {}", line.iterations);
        println!(
            "net         [{}]",
            line.net
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        );
        println!("epsilon     {}", line.epsilon);
        println!("verified    {}", yesno(line.verified));
    }
    if let Some(w) = witness {
        return Err(CmdError::Violation(format!(
            "net misses the closed halfspace of facet {:?} (sign {}, {} points)",
            w.facet, w.sign, w.count
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct TrialLine {
    trial: usize,
    seed: u64,
    n: usize,
    d: usize,
    hull: usize,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    net: Option<Vec<usize>>,
    verified: bool,
    subsets_examined: u64,
    work_units: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
struct ExploreSummaryLine {
    trials: usize,
    found: usize,
    verification_failures: usize,
}

fn cmd_explore(trials: usize, n: usize, d: usize, seed: u64, use_jsonl: bool) -> CmdResult {
    let rep = explore(trials, n, d, seed)?;
    let ver_failures = rep
        .records
        .iter()
        .filter(|r| r.found.is_some() && !r.verified)
        .count();
    if use_jsonl {
        for (t, r) in rep.records.iter().enumerate() {
            jsonl(&TrialLine {
                trial: t,
                seed: r.seed,
                n: r.n,
                d: r.d,
                hull: r.hull_count,
                found: r.found.is_some(),
                net: r.found.as_ref().map(|net| net.vertices.clone()),
                verified: r.verified,
                subsets_examined: r.subsets_examined,
                work_units: r.work_units,
                counterexample: r.counterexample.as_ref().map(|s| {
                    s.points()
                        .iter()
                        .map(|p| p.coords().iter().map(Rational::to_string).collect())
                        .collect()
                }),
            });
        }
        jsonl(&ExploreSummaryLine {
            trials: rep.trials,
            found: rep.found_count,
            verification_failures: ver_failures,
        });
    } else {
        let rows: Vec<Vec<String>> = rep
            .records
            .iter()
            .enumerate()
            .map(|(t, r)| {
                vec![
                    t.to_string(),
                    r.seed.to_string(),
                    r.hull_count.to_string(),
                    r.found.as_ref().map_or_else(
                        || "-".to_string(),
                        |net| {
                            net.vertices
                                .iter()
                                .map(usize::to_string)
                                .collect::<Vec<_>>()
                                .join(",")
                        },
                    ),
                    yesno(r.verified),
                    r.subsets_examined.to_string(),
                    r.work_units.to_string(),
                ]
            })
            .collect();
        print_table(
            &["trial", "seed", "hull", "net", "verified", "subsets", "work"],
            &rows,
        );
        println!(
            "found {}/{} nets, {} verification failures",
            rep.found_count, rep.trials, ver_failures
        );
    }
    if ver_failures > 0 {
        return Err(CmdError::Violation(format!(
            "{ver_failures} found nets failed verification"
        )));
    }
    if d == 2 && rep.found_count < rep.trials {
        return Err(CmdError::Violation(format!(
            "a planar set always has a simplicial half-net, yet {} of {} trials found none",
            rep.trials - rep.found_count,
            rep.trials
        )));
    }
    Ok(())
}

fn cmd_compare(file: &Path) -> CmdResult {
    let s = load_set(file)?;
    let swept = sweep_count_2d(&s)?;
    let enumerated = count_facets(&s)?;
    let rows: Vec<Vec<String>> = (0..=enumerated.max_k())
        .map(|k| {
            vec![
                k.to_string(),
                enumerated.e(k).to_string(),
                swept.e(k).to_string(),
                yesno(enumerated.e(k) == swept.e(k)),
            ]
        })
        .collect();
    print_table(&["k", "enumerated", "sweep", "match"], &rows);
    if swept != enumerated {
        return Err(CmdError::Violation(
            "sweep and enumeration histograms differ".into(),
        ));
    }
    println!("histograms match");
    Ok(())
}

#[derive(Serialize)]
struct CheckLine<'a> {
    family: &'a str,
    name: &'a str,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a str>,
}

fn print_report(family: &str, rep: &ConstructionReport, use_jsonl: bool) {
    if use_jsonl {
        for c in &rep.checks {
            jsonl(&CheckLine {
                family,
                name: c.name,
                pass: c.pass,
                witness: c.witness.as_deref(),
            });
        }
    } else {
        println!("family: {family}");
        let rows: Vec<Vec<String>> = rep
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.name.to_string(),
                    yesno(c.pass),
                    c.witness.clone().unwrap_or_default(),
                ]
            })
            .collect();
        print_table(&["check", "pass", "witness"], &rows);
    }
}

fn cmd_verify_construction(file: &Path, use_jsonl: bool) -> CmdResult {
    let cfg = load_config(file)?;
    let (family, rep) = if cfg.has_subchains() {
        ("extended planar", verify_extended_properties(&cfg)?)
    } else {
        ("ray", verify_ray_config(&cfg)?)
    };
    print_report(family, &rep, use_jsonl);
    let failures = rep.failures().len();
    if failures > 0 {
        return Err(CmdError::Violation(format!(
            "{failures} of {} checks failed",
            rep.checks.len()
        )));
    }
    Ok(())
}
