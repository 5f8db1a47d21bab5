use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tropical_conics::check::check_poly;
use tropical_conics::conic::{anchor_labels, classify, corner_locus, invariants_of, vertices, Chart};
use tropical_conics::corpus::corpus;
use tropical_conics::error::Result;
use tropical_conics::factor::{factorize, is_reducible, Factorization};
use tropical_conics::io::{self, RenderFormat};
use tropical_conics::quadratic::{matrix_of, poly_of, trop_det};
use tropical_conics::reconstruct::recover_polynomial;

#[derive(Parser)]
#[command(name = "tropconic", version, about = "Tropical conics: classify, sketch, factor and reconstruct")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class, shape invariants and vertices of a polynomial.
    Classify { poly: String },
    /// The conic as a weighted tree in one chart.
    Sketch {
        poly: String,
        #[arg(long, default_value = "Z", value_parser = parse_chart)]
        chart: Chart,
        /// Also write an SVG drawing to this file.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Print an ASCII drawing instead of JSON.
        #[arg(long)]
        ascii: bool,
    },
    /// Factor into two linear forms, or report `irreducible`.
    Factor {
        poly: String,
        #[arg(long)]
        json: bool,
    },
    /// Rebuild a polynomial from a tree document (`-` reads stdin).
    Reconstruct { tree: PathBuf },
    /// Tropical determinant of a 3×3 matrix document (`-` reads stdin).
    Det { matrix: PathBuf },
    /// Compare closed-form results with the corner-locus oracle.
    Check {
        /// Check this polynomial only; otherwise run a seeded random corpus.
        poly: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Forced samples per class added to the corpus.
        #[arg(long, default_value_t = 10)]
        per_class: usize,
    },
}

fn parse_chart(s: &str) -> std::result::Result<Chart, String> {
    Chart::from_name(s).ok_or_else(|| format!("unknown chart `{s}`, expected X, Y or Z"))
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

/// Prints to stdout; returns `false` if a self-check failed.
fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Classify { poly } => {
            let p = io::parse_poly(&poly)?;
            let inv = invariants_of(&matrix_of(&p));
            let class = classify(&inv);
            let vs = vertices(&p);
            let labels: Vec<String> = anchor_labels(&p, Chart::Z).into_iter().map(|(_, l)| l).collect();
            let doc = io::classification_to_json(&inv, &class, &vs, &labels, is_reducible(&p));
            print!("{}", io::to_pretty(&doc));
        }
        Command::Sketch { poly, chart, svg, ascii } => {
            let p = io::parse_poly(&poly)?;
            let sk = corner_locus(&p, chart)?;
            let labels = anchor_labels(&p, chart);
            if let Some(path) = svg {
                fs::write(path, io::render(&sk, RenderFormat::Svg, &labels))?;
            }
            if ascii {
                print!("{}", io::render(&sk, RenderFormat::Ascii, &labels));
            } else {
                print!("{}", io::to_pretty(&io::sketch_to_json(&sk)));
            }
        }
        Command::Factor { poly, json } => {
            let p = io::parse_poly(&poly)?;
            match (factorize(&p), json) {
                (Factorization::Product(f, g), false) => println!("{}", io::format_product(&f, &g)),
                (Factorization::Product(f, g), true) => {
                    let doc = serde_json::json!({
                        "format": io::FORMAT,
                        "factors": [io::linform_to_json(&f), io::linform_to_json(&g)],
                    });
                    print!("{}", io::to_pretty(&doc));
                }
                (Factorization::Irreducible, false) => println!("irreducible"),
                (Factorization::Irreducible, true) => {
                    print!("{}", io::to_pretty(&serde_json::json!({"format": io::FORMAT, "factors": null})));
                }
            }
        }
        Command::Reconstruct { tree } => {
            let t = io::tree_from_json(&read_input(&tree)?)?;
            let a = recover_polynomial(&t)?;
            println!("{}", io::format_poly(&poly_of(&a)));
            print!("{}", io::to_pretty(&io::matrix_to_json(&a)));
        }
        Command::Det { matrix } => {
            let m = io::general_matrix_from_json(&read_input(&matrix)?)?;
            print!("{}", io::to_pretty(&io::det_to_json(&trop_det(&m))));
        }
        Command::Check { poly: Some(poly), .. } => {
            let report = check_poly(&io::parse_poly(&poly)?)?;
            print!("{report}");
            return Ok(report.passed());
        }
        Command::Check { poly: None, seed, count, per_class } => {
            let mut failed = 0;
            let samples = corpus(seed, count, per_class);
            for a in &samples {
                let p = poly_of(a);
                let report = check_poly(&p)?;
                if !report.passed() {
                    failed += 1;
                    println!("mismatch for {}", io::format_poly(&p));
                    for item in report.failures() {
                        println!("  {}: {}", item.name, item.detail);
                    }
                }
            }
            println!("checked {} polynomials (seed {seed}), {failed} mismatches", samples.len());
            return Ok(failed == 0);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
    }
}
