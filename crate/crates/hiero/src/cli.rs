//! Command-line surface: subcommand dispatch over the pipeline stages, the
//! example families, and the sweep harnesses.
//!
//! `run` is the whole interface; `main` only forwards process arguments.
//! Exit codes: 0 success, 1 computation error or a failed sweep, 2 usage or
//! input-file error. Output is deterministic byte for byte.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigInt;
use num::Zero;

use crate::families::bpds::bpds;
use crate::families::checks::{run_checks, CheckKind};
use crate::families::pipe_dreams::{pipe_dreams, PipeDream};
use crate::families::{
    commuting_ideal, commuting_order, row_reading_lex, schubert_ideal, FamilyError, Permutation,
};
use crate::fixtures;
use crate::groebner::{buchberger, initial_ideal, Ideal};
use crate::kpoly::{degree, kpoly_faces, kpoly_split, kpoly_taylor, LaurentPoly};
use crate::monomial::MonomialIdeal;
use crate::parse::{parse_ideal_file, ParsedFile};
use crate::ring::{Grading, OrderKind, Ring, TermOrder};
use crate::stanley_reisner::minimal_primes;
use crate::tablet::{build_tablet, tablet_multidegree, tablet_to_json, RenderMode};

#[derive(Parser)]
#[command(
    name = "hiero",
    about = "Groebner degeneration, polarization, and tablets of monomial primes",
    version,
    color = clap::ColorChoice::Never
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full pipeline: initial ideal, polarization, decomposition, tablet
    Tablet {
        #[command(flatten)]
        input: InputArgs,
        /// Override the declared term order, as kind:var,var,... (all variables)
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Reduced Groebner basis of the input ideal
    Groebner {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Minimal generators of the initial ideal
    Init {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Polarization of the initial ideal
    Polarize {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Minimal primes of the polarized initial ideal
    Decompose {
        #[command(flatten)]
        input: InputArgs,
    },
    /// K-polynomial of the initial ideal in the declared grading
    Kpoly {
        #[command(flatten)]
        input: InputArgs,
        /// faces requires a squarefree initial ideal; taylor caps at 20 generators
        #[arg(long, value_enum, default_value_t = Algo::Split)]
        algo: Algo,
    },
    /// Schubert determinantal ideal pipeline for a permutation
    Schubert {
        /// Permutation in one-line notation, digits or comma-separated
        w: String,
        /// Row-reading order: read rows in this sequence instead of 1..n
        #[arg(long)]
        rows: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Commuting generic matrices pipeline (n = 1, 2, 3)
    Commuting {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// All reduced pipe dreams of a permutation
    Pipedreams {
        w: String,
    },
    /// All bumpless pipe dreams of a permutation
    Bpds {
        w: String,
    },
    /// Sweep a check over all of S_1..S_upto; fails (exit 1) if any report fails
    Check {
        #[arg(value_enum)]
        kind: CheckArg,
        #[arg(long)]
        upto: usize,
    },
    /// List the built-in example ideals
    Fixtures,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Path to an ideal file
    file: Option<PathBuf>,
    /// Built-in example id instead of a file (see `hiero fixtures`)
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Ascii,
    Unicode,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Taylor,
    Split,
    Faces,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Km,
    Bpd,
    Equidim,
}

struct Failure {
    code: i32,
    msg: String,
}

fn fail(code: i32, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        fail(1, format!("io error: {e}"))
    }
}

pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args.iter().map(|s| s.as_str())) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                return 0;
            }
            let _ = write!(err, "{rendered}");
            return 2;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.cmd {
        Cmd::Tablet { input, order, format } => {
            let file = load_input(&input)?;
            let ord = match order {
                Some(spec) => parse_order_spec(&spec, &file.ring).map_err(|m| fail(2, m))?,
                None => file.order.clone(),
            };
            print_tablet_pipeline(&file.ideal, &ord, &file.grading, format, out)?;
        }
        Cmd::Groebner { input } => {
            let file = load_input(&input)?;
            let gb = buchberger(&file.ideal, &file.order);
            for p in gb.elements() {
                writeln!(out, "{}", p.display(&file.ring, Some(&file.order)))?;
            }
        }
        Cmd::Init { input } => {
            let file = load_input(&input)?;
            let j = init_of(&file)?;
            for m in j.gens() {
                writeln!(out, "{}", m.display(&file.ring))?;
            }
        }
        Cmd::Polarize { input } => {
            let file = load_input(&input)?;
            let j = init_of(&file)?;
            let polar = j.polarize(&file.grading);
            let names: Vec<String> =
                polar.ideal.ring().vars().iter().map(|v| v.name()).collect();
            writeln!(out, "ring: {}", names.join(" "))?;
            for m in polar.ideal.gens() {
                writeln!(out, "{}", m.display(polar.ideal.ring()))?;
            }
        }
        Cmd::Decompose { input } => {
            let file = load_input(&input)?;
            let j = init_of(&file)?;
            let polar = j.polarize(&file.grading);
            let primes = minimal_primes(&polar.ideal).expect("polarization is squarefree");
            let equi = primes.windows(2).all(|w| w[0].len() == w[1].len());
            writeln!(out, "components: {}", primes.len())?;
            writeln!(out, "equidimensional: {equi}")?;
            for p in &primes {
                let names: Vec<String> =
                    p.iter().map(|&id| polar.ideal.ring().name(id)).collect();
                writeln!(out, "{{{}}}", names.join(", "))?;
            }
        }
        Cmd::Kpoly { input, algo } => {
            let file = load_input(&input)?;
            let j = init_of(&file)?;
            let k = match algo {
                Algo::Taylor => kpoly_taylor(&j, &file.grading)
                    .map_err(|e| fail(1, e.to_string()))?,
                Algo::Split => kpoly_split(&j, &file.grading),
                Algo::Faces => kpoly_faces(&j, &file.grading)
                    .map_err(|e| fail(1, e.to_string()))?,
            };
            writeln!(out, "K = {}", laurent_text(&k))?;
            if file.grading.dim() == 1 {
                let d = degree(&k).map_err(|e| fail(1, e.to_string()))?;
                writeln!(out, "degree: {d}")?;
            }
        }
        Cmd::Schubert { w, rows, format } => {
            let w = parse_perm(&w)?;
            let sigma = match rows {
                Some(s) => {
                    let sigma = parse_perm(&s)?;
                    if sigma.n() != w.n() {
                        return Err(fail(2, "--rows must be a permutation of the same size as w"));
                    }
                    sigma
                }
                None => Permutation::identity(w.n()),
            };
            let ideal = schubert_ideal(&w);
            let ring = ideal.ring().clone();
            let ord = row_reading_lex(&ring, &sigma);
            let grading = fixtures::row_grading(&ring, w.n());
            print_tablet_pipeline(&ideal, &ord, &grading, format, out)?;
        }
        Cmd::Commuting { n, format } => {
            if n == 0 || n > 3 {
                return Err(fail(2, "n must be 1, 2, or 3"));
            }
            let ideal = commuting_ideal(n);
            let ring = ideal.ring().clone();
            let ord = commuting_order(&ring);
            let grading = Grading::standard(&ring);
            print_tablet_pipeline(&ideal, &ord, &grading, format, out)?;
        }
        Cmd::Pipedreams { w } => {
            let w = parse_perm(&w)?;
            let dreams = pipe_dreams(&w).map_err(family_err)?;
            writeln!(out, "{} pipe dreams for {}", dreams.len(), w)?;
            for pd in &dreams {
                writeln!(out)?;
                write!(out, "{}", pipe_dream_text(pd, w.n()))?;
            }
        }
        Cmd::Bpds { w } => {
            let w = parse_perm(&w)?;
            let all = bpds(&w).map_err(family_err)?;
            writeln!(out, "{} bumpless pipe dreams for {}", all.len(), w)?;
            for b in &all {
                writeln!(out)?;
                write!(out, "{}", b.render())?;
            }
        }
        Cmd::Check { kind, upto } => {
            if upto > 5 {
                return Err(fail(2, "sweeps are supported up to n = 5"));
            }
            let kind = match kind {
                CheckArg::Km => CheckKind::Km,
                CheckArg::Bpd => CheckKind::Bpd,
                CheckArg::Equidim => CheckKind::Equidim,
            };
            let reports = run_checks(kind, upto);
            writeln!(out, "{}", serde_json::to_string_pretty(&reports).expect("reports serialize"))?;
            if !reports.iter().all(|r| r.pass) {
                return Ok(1);
            }
        }
        Cmd::Fixtures => {
            let width = fixtures::FIXTURES.iter().map(|f| f.id.len()).max().unwrap_or(0);
            for f in fixtures::FIXTURES {
                writeln!(out, "{:width$}  {}", f.id, f.summary)?;
            }
        }
    }
    Ok(0)
}

fn load_input(input: &InputArgs) -> Result<ParsedFile, Failure> {
    match (&input.file, &input.builtin) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())))?;
            parse_ideal_file(&text).map_err(|e| fail(2, format!("{}: {e}", path.display())))
        }
        (None, Some(id)) => fixtures::build(id).ok_or_else(|| {
            let ids: Vec<&str> = fixtures::FIXTURES.iter().map(|f| f.id).collect();
            fail(2, format!("unknown builtin {id}; available: {}", ids.join(", ")))
        }),
        _ => unreachable!("clap enforces exactly one input"),
    }
}

fn init_of(file: &ParsedFile) -> Result<MonomialIdeal, Failure> {
    initial_ideal(&file.ideal, &file.order).map_err(|e| fail(1, e.to_string()))
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    Permutation::parse(s).map_err(|e| fail(2, e.to_string()))
}

fn family_err(e: FamilyError) -> Failure {
    match e {
        FamilyError::TooLarge(..) => fail(1, e.to_string()),
        _ => fail(2, e.to_string()),
    }
}

fn parse_order_spec(spec: &str, ring: &Ring) -> Result<TermOrder, String> {
    let (kind, list) = spec
        .split_once(':')
        .ok_or_else(|| format!("bad order spec {spec:?}: expected kind:var,var,..."))?;
    let kind = match kind {
        "lex" => OrderKind::Lex,
        "grevlex" => OrderKind::GRevLex,
        other => return Err(format!("unknown order kind {other:?}")),
    };
    let mut reading = Vec::new();
    let mut seen = vec![false; ring.num_vars()];
    for name in list.split(',') {
        let name = name.trim();
        let id = ring
            .var_by_name(name)
            .ok_or_else(|| format!("unknown variable {name:?} in order spec"))?;
        if seen[id] {
            return Err(format!("variable {name} listed twice in order spec"));
        }
        seen[id] = true;
        reading.push(id);
    }
    if reading.len() != ring.num_vars() {
        return Err("order spec must list every variable".to_string());
    }
    Ok(TermOrder::new(kind, reading))
}

/// Weight of x_ij is the i-th coordinate vector, matching the grading of the
/// Schubert fixtures; the multidegree is then the Schubert polynomial.
fn print_tablet_pipeline(
    ideal: &Ideal,
    ord: &TermOrder,
    grading: &Grading,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let t = build_tablet(ideal, ord, grading).map_err(|e| fail(1, e.to_string()))?;
    if format == Format::Json {
        writeln!(out, "{}", tablet_to_json(&t))?;
        return Ok(());
    }
    let mode = if format == Format::Unicode { RenderMode::Unicode } else { RenderMode::Ascii };
    let shown = t.render(mode).map_err(|e| fail(1, e.to_string()))?;
    if !shown.is_empty() {
        writeln!(out, "{shown}")?;
        writeln!(out)?;
    }
    writeln!(out, "tablet size: {}", t.size())?;
    writeln!(out, "equidimensional: {}", t.equidimensional)?;
    writeln!(out, "degree: {}", standard_degree(ideal, ord)?)?;
    match tablet_multidegree(&t) {
        Ok(md) => writeln!(out, "multidegree: {}", laurent_text(&md))?,
        Err(_) => writeln!(out, "multidegree: n/a (variables have unequal total degrees)")?,
    }
    Ok(())
}

/// Degree from the K-polynomial side, independent of the tablet it is
/// printed next to.
fn standard_degree(ideal: &Ideal, ord: &TermOrder) -> Result<u64, Failure> {
    let j = initial_ideal(ideal, ord).map_err(|e| fail(1, e.to_string()))?;
    let k = kpoly_split(&j, &Grading::standard(ideal.ring()));
    degree(&k).map_err(|e| fail(1, e.to_string()))
}

fn laurent_text(k: &LaurentPoly) -> String {
    if k.is_zero() {
        return "0".to_string();
    }
    let d = k.dim();
    let var = |i: usize| if d == 1 { "t".to_string() } else { format!("t{}", i + 1) };
    let mut out = String::new();
    for (idx, (e, c)) in k.terms().iter().enumerate() {
        let neg = c < &BigInt::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let factors: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| if a == 1 { var(i) } else { format!("{}^{}", var(i), a) })
            .collect();
        if factors.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs == BigInt::from(1) {
            out.push_str(&factors.join("*"));
        } else {
            out.push_str(&format!("{}*{}", abs, factors.join("*")));
        }
    }
    out
}

/// Staircase grid, one row per line: '+' for a cross, '.' for an elbow.
fn pipe_dream_text(pd: &PipeDream, n: usize) -> String {
    let mut out = String::new();
    for i in 1..n as u32 {
        let cells: Vec<&str> = (1..=(n as u32 - i))
            .map(|j| if pd.crosses.contains(&(i, j)) { "+" } else { "." })
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tablet::tablet_from_json;

    fn run_vec(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> =
            std::iter::once("hiero").chain(args.iter().copied()).map(String::from).collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_vec(&[]).0, 2);
        assert_eq!(run_vec(&["tablet"]).0, 2);
        assert_eq!(run_vec(&["tablet", "--builtin", "nope"]).0, 2);
        assert_eq!(run_vec(&["tablet", "x.ideal", "--builtin", "minors-3x3"]).0, 2);
        assert_eq!(run_vec(&["tablet", "/no/such/file.ideal"]).0, 2);
        assert_eq!(run_vec(&["check", "km", "--upto", "9"]).0, 2);
        assert_eq!(run_vec(&["commuting", "4"]).0, 2);
        assert_eq!(run_vec(&["schubert", "1123"]).0, 2);
        let (code, out, _) = run_vec(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("tablet"));
    }

    #[test]
    fn tablet_builtin_text_and_json() {
        let (code, out, _) = run_vec(&["tablet", "--builtin", "minors-3x3"]);
        assert_eq!(code, 0);
        assert!(out.contains("tablet size: 6"));
        assert!(out.contains("equidimensional: true"));
        assert!(out.contains("degree: 6"));
        assert!(out.contains("multidegree: 6*t^4"));

        let (code, js, _) = run_vec(&["tablet", "--builtin", "minors-3x3", "--format", "json"]);
        assert_eq!(code, 0);
        let parsed = tablet_from_json(&js).unwrap();
        assert_eq!(parsed.tablet_size, 6);
        assert_eq!(parsed.degree, 6);
        assert!(parsed.equidimensional);

        // determinism, byte for byte
        assert_eq!(run_vec(&["tablet", "--builtin", "minors-3x3"]).1, out);
    }

    #[test]
    fn stage_commands_on_a_fixture_file() {
        let path = format!("{}/fixtures/minors-3x3.ideal", env!("CARGO_MANIFEST_DIR"));
        let (code, gb, _) = run_vec(&["groebner", &path]);
        assert_eq!(code, 0);
        assert_eq!(gb.lines().count(), 9);

        let (code, init, _) = run_vec(&["init", &path]);
        assert_eq!(code, 0);
        assert_eq!(init.lines().count(), 9);
        assert!(init.lines().all(|l| !l.contains('+') && !l.contains('-')));

        let (code, dec, _) = run_vec(&["decompose", &path]);
        assert_eq!(code, 0);
        assert!(dec.starts_with("components: 6\nequidimensional: true\n"));

        let (code, kp, _) = run_vec(&["kpoly", &path, "--algo", "taylor"]);
        assert_eq!(code, 0);
        assert!(kp.contains("degree: 6"));
        let (_, kp2, _) = run_vec(&["kpoly", &path, "--algo", "split"]);
        assert_eq!(kp.lines().next(), kp2.lines().next());
    }

    #[test]
    fn schubert_matches_tablet_on_builtin() {
        let a = run_vec(&["schubert", "2143"]);
        let b = run_vec(&["tablet", "--builtin", "schubert-2143"]);
        assert_eq!(a.0, 0);
        assert_eq!(a, b);
        assert!(a.1.contains("tablet size: 3"));
        // Schubert polynomial of 2143 in the row grading
        assert!(a.1.contains("multidegree: t1*t3 + t1*t2 + t1^2"));
    }

    #[test]
    fn enumerators_and_checks() {
        let (code, out, _) = run_vec(&["pipedreams", "2143"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("3 pipe dreams for 2143\n"));
        assert!(out.contains("+ . +"));

        let (code, out, _) = run_vec(&["bpds", "2143"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("3 bumpless pipe dreams for 2143\n"));

        let (code, out, _) = run_vec(&["check", "km", "--upto", "3"]);
        assert_eq!(code, 0);
        let reports: Vec<crate::families::checks::CheckReport> =
            serde_json::from_str(&out).unwrap();
        assert_eq!(reports.len(), 9);
        assert!(reports.iter().all(|r| r.pass));

        let (code, out, _) = run_vec(&["fixtures"]);
        assert_eq!(code, 0);
        for f in fixtures::FIXTURES {
            assert!(out.contains(f.id));
        }
    }

    #[test]
    fn order_override_changes_the_tablet() {
        let diag = run_vec(&["tablet", "--builtin", "schubert-2143"]);
        let anti = run_vec(&[
            "tablet",
            "--builtin",
            "schubert-2143",
            "--order",
            "lex:x41,x42,x43,x44,x31,x32,x33,x34,x21,x22,x23,x24,x11,x12,x13,x14",
        ]);
        assert_eq!(anti.0, 0);
        assert!(anti.1.contains("tablet size: 3"));
        assert_ne!(diag.1, anti.1);
        assert_eq!(run_vec(&["tablet", "--builtin", "schubert-2143", "--order", "lex:x11"]).0, 2);
        assert_eq!(run_vec(&["tablet", "--builtin", "schubert-2143", "--order", "weird:x11"]).0, 2);
    }
}
