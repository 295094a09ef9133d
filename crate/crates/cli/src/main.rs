//! Command-line front end: load a curve (file or built-in), find all its
//! symmetries, and print a text or JSON report. Exit codes: 0 success,
//! 1 input error, 2 structured refusal (degenerate curve).

mod plot;
mod report;

use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};
use curve_invariants::{
    crunode, curve_from_json, daisy, degeneracy, invariants, random_central_curve, twisted_cubic,
    DegeneracyKind, ParamCurve3,
};
use curve_symmetry::{build_equations, reconstruct, run_sign, SymmetryRecord};
use report::Timings;
use std::path::PathBuf;
use std::time::{Duration, Instant};

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Signs {
    /// Direct symmetries only (rotations, identity)
    Plus,
    /// Opposite symmetries only (mirrors, inversions)
    Minus,
    /// Both
    Both,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Finds all symmetries (mirror, rotational, central) of a rational space
/// curve, in exact arithmetic.
#[derive(Parser)]
#[command(name = "curve-symmetry", disable_version_flag = true)]
struct Cli {
    /// Path to a curve file: JSON {"x": {"num": [...], "den": [...]}, "y": ..., "z": ...}
    /// with integer (or integer-string) coefficients, lowest degree first
    #[arg(long, conflicts_with = "builtin")]
    input: Option<PathBuf>,

    /// Built-in curve: twisted-cubic, crunode, daisy:<j>, random-central:<m>
    #[arg(long)]
    builtin: Option<String>,

    /// Which symmetry classes to search for
    #[arg(long, value_enum, default_value = "both")]
    signs: Signs,

    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Decimal digits in approximate renderings (exact strings are authoritative)
    #[arg(long, default_value_t = 30)]
    digits: u32,

    /// Write plot data (curve samples and fixed-set geometry) as CSV
    #[arg(long)]
    plot: Option<PathBuf>,

    /// Seed for the random built-in curves
    #[arg(long)]
    seed: Option<u64>,
}

fn fail(msg: &str) -> i32 {
    eprintln!("error: {}", msg);
    1
}

fn resolve_builtin(name: &str, seed: u64) -> Result<ParamCurve3, String> {
    if let Some(arg) = name.strip_prefix("daisy:") {
        let j: u32 = arg
            .parse()
            .map_err(|_| format!("daisy index must be a positive integer, got {:?}", arg))?;
        if j == 0 {
            return Err("daisy index must be at least 1".into());
        }
        return Ok(daisy(j));
    }
    if let Some(arg) = name.strip_prefix("random-central:") {
        let m: usize = arg
            .parse()
            .map_err(|_| format!("random-central degree must be an integer, got {:?}", arg))?;
        if m < 4 || m % 2 != 0 {
            return Err("random-central degree must be even and at least 4".into());
        }
        return Ok(random_central_curve(m, 8, seed));
    }
    match name {
        "twisted-cubic" => Ok(twisted_cubic()),
        "crunode" => Ok(crunode()),
        _ => Err(format!(
            "unknown builtin {:?}; available: twisted-cubic, crunode, daisy:<j>, random-central:<m>",
            name
        )),
    }
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    if cli.digits == 0 {
        return fail("--digits must be at least 1");
    }

    let (source, curve) = match (&cli.input, &cli.builtin) {
        (Some(path), None) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return fail(&format!("cannot read {}: {}", path.display(), e)),
            };
            match curve_from_json(&text) {
                Ok(c) => (path.display().to_string(), c),
                Err(e) => return fail(&format!("{}: {}", path.display(), e)),
            }
        }
        (None, Some(name)) => match resolve_builtin(name, cli.seed.unwrap_or(0)) {
            Ok(c) => (name.clone(), c),
            Err(e) => return fail(&e),
        },
        _ => return fail("exactly one of --input or --builtin is required"),
    };

    let t_total = Instant::now();
    let t = Instant::now();
    let inv = match invariants(&curve) {
        Ok(i) => i,
        Err(e) => return fail(&format!("invalid curve: {:?}", e)),
    };
    let t_inv = t.elapsed();

    let degen = degeneracy(&inv);
    if degen != DegeneracyKind::NonDegenerate {
        let timings = Timings {
            invariants: t_inv,
            equations: Duration::ZERO,
            detect_direct: None,
            detect_opposite: None,
            reconstruct: Duration::ZERO,
            total: t_total.elapsed(),
        };
        match cli.format {
            Format::Json => {
                let rep = report::report_json(&source, &curve, &degen, None, None, cli.digits, &timings);
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            }
            Format::Text => {
                eprintln!(
                    "refused: the curve is degenerate ({})",
                    report::degeneracy_label(&degen)
                );
                match degen {
                    DegeneracyKind::Line | DegeneracyKind::Circle => eprintln!(
                        "a {} has infinitely many symmetries; this tool only handles curves with finite symmetry groups",
                        report::degeneracy_label(&degen)
                    ),
                    DegeneracyKind::Planar => eprintln!("{}", report::PLANAR_NOTE),
                    DegeneracyKind::NonDegenerate => unreachable!(),
                }
            }
        }
        return 2;
    }

    let t = Instant::now();
    let eqs = match build_equations(&inv) {
        Ok(e) => e,
        Err(e) => return fail(&format!("{}", e)),
    };
    let t_eqs = t.elapsed();

    let deg = curve.degree();
    let want_plus = cli.signs != Signs::Minus;
    let want_minus = cli.signs != Signs::Plus;
    let mut direct_cands = None;
    let mut opposite_cands = None;
    let mut t_plus = None;
    let mut t_minus = None;
    std::thread::scope(|sc| {
        let plus = want_plus.then(|| {
            sc.spawn(|| {
                let t = Instant::now();
                let r = run_sign(&eqs.gplus, &inv.speed2, deg, 1);
                (r, t.elapsed())
            })
        });
        let minus = want_minus.then(|| {
            sc.spawn(|| {
                let t = Instant::now();
                let r = run_sign(&eqs.gminus, &inv.speed2, deg, -1);
                (r, t.elapsed())
            })
        });
        if let Some(h) = plus {
            let (r, d) = h.join().expect("direct detection thread");
            direct_cands = Some(r);
            t_plus = Some(d);
        }
        if let Some(h) = minus {
            let (r, d) = h.join().expect("opposite detection thread");
            opposite_cands = Some(r);
            t_minus = Some(d);
        }
    });

    let t = Instant::now();
    let rebuild = |cands: &Option<curve_symmetry::SignResult>| -> Result<Option<Vec<SymmetryRecord>>, String> {
        match cands {
            None => Ok(None),
            Some(sr) => sr
                .candidates
                .iter()
                .map(|c| reconstruct(&curve, c).map_err(|e| format!("{}", e)))
                .collect::<Result<Vec<_>, _>>()
                .map(Some),
        }
    };
    let direct = match rebuild(&direct_cands) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let opposite = match rebuild(&opposite_cands) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let t_rec = t.elapsed();

    let timings = Timings {
        invariants: t_inv,
        equations: t_eqs,
        detect_direct: t_plus,
        detect_opposite: t_minus,
        reconstruct: t_rec,
        total: t_total.elapsed(),
    };

    match cli.format {
        Format::Json => {
            let rep = report::report_json(
                &source,
                &curve,
                &degen,
                direct.as_deref(),
                opposite.as_deref(),
                cli.digits,
                &timings,
            );
            println!("{}", serde_json::to_string_pretty(&rep).unwrap());
        }
        Format::Text => print!(
            "{}",
            report::report_text(
                &source,
                &curve,
                &degen,
                direct.as_deref(),
                opposite.as_deref(),
                cli.digits,
                &timings,
            )
        ),
    }

    if let Some(path) = &cli.plot {
        let all: Vec<&SymmetryRecord> = direct
            .iter()
            .flatten()
            .chain(opposite.iter().flatten())
            .collect();
        if let Err(e) = plot::emit_plot_data(&curve, &all, cli.digits, path) {
            return fail(&format!("cannot write {}: {}", path.display(), e));
        }
    }
    0
}

fn main() {
    std::process::exit(run());
}
