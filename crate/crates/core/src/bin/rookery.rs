//! Command-line front end: builds complexes, dualizes, constructs Bier
//! spheres and discrete Morse matchings, computes exact homology, solves
//! bottleneck problems, and runs the claim suite. Reports are
//! deterministic; identical inputs give byte-identical output.
//!
//! Exit codes: 0 success, 2 input error, 3 verification failure.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rookery::bier::bier_sphere_with_cap;
use rookery::bottleneck::{
    blocker, bottleneck_via_morse_with_cap, maxmin_bruteforce, minmax_bruteforce, Clutter,
    Weighting,
};
use rookery::chessboard::{multiple_chessboard_with_cap, GridSpec, MultiplicityProfile};
use rookery::complex::DEFAULT_FACE_CAP;
use rookery::error::Error;
use rookery::homology::{betti, homological_connectivity, Coefficients};
use rookery::io::{facet_line, parse_complex_with_cap, write_complex};
use rookery::morse::{bier_dmf, multiple_chessboard_dmf_with_cap, Acyclicity};
use rookery::report::Report;
use rookery::verification::{run_claim_suite, SuiteConfig};
use rookery::SimplicialComplex;

#[derive(Parser)]
#[command(
    name = "rookery",
    version,
    about = "chessboard complexes, Bier spheres, and discrete Morse matchings"
)]
struct Cli {
    /// Seed for all randomized verification sampling.
    #[arg(long, global = true, default_value_t = rookery::verification::DEFAULT_SEED)]
    seed: u64,

    /// Override the face-count enumeration cap.
    #[arg(long, global = true, default_value_t = DEFAULT_FACE_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a chessboard complex (or normalize a facet file) and print
    /// its facet list.
    Build(BuildArgs),
    /// Print the Alexander dual of a complex as a facet list.
    Dual(InputArgs),
    /// Build the Bier sphere of a complex; report facets and the triple
    /// decoding table.
    Bier(BierArgs),
    /// Construct a discrete Morse matching and report its critical cells.
    Morse(MorseArgs),
    /// Exact Betti numbers (integer coefficients by default).
    Homology(HomologyArgs),
    /// Edmonds-Fulkerson bottleneck extrema on a clutter.
    Bottleneck(BottleneckArgs),
    /// Run a verification suite; exits 3 when any criterion fails.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Grid dimensions: columns then rows.
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    grid: Option<Vec<usize>>,
    /// Per-row caps k_1,...,k_n (requires --grid; default all 1).
    #[arg(long, value_delimiter = ',')]
    row_caps: Option<Vec<usize>>,
    /// Per-column caps l_1,...,l_m (requires --grid; default all 1).
    #[arg(long, value_delimiter = ',')]
    col_caps: Option<Vec<usize>>,
    /// Facet file to normalize instead of a grid ("-" for stdin).
    #[arg(long)]
    input: Option<String>,
}

#[derive(Args)]
struct InputArgs {
    /// Facet file ("-" for stdin).
    #[arg(long)]
    input: String,
}

#[derive(Args)]
struct BierArgs {
    /// Facet file of the base complex K ("-" for stdin).
    #[arg(long)]
    input: String,
    /// Print only the facet list of the sphere (pipeable).
    #[arg(long)]
    raw: bool,
}

#[derive(Args)]
struct MorseArgs {
    /// Which construction to run.
    #[arg(long, value_parser = ["bier", "multichess"])]
    dmf: String,
    /// Base complex K for the Bier matching ("-" for stdin).
    #[arg(long)]
    complex: Option<String>,
    /// Grid for the chessboard matching: columns then rows.
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    grid: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    row_caps: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    col_caps: Option<Vec<usize>>,
    /// Also dump the matched pairs, one per line.
    #[arg(long)]
    emit_matching: bool,
}

#[derive(Args)]
struct HomologyArgs {
    /// Facet file ("-" for stdin).
    #[arg(long)]
    complex: String,
    /// Use coefficients in the two-element field instead of the integers.
    #[arg(long)]
    z2: bool,
}

#[derive(Args)]
struct BottleneckArgs {
    /// Ground-set size.
    #[arg(long)]
    ground: usize,
    /// Clutter members: elements space-separated, members ";"-separated,
    /// e.g. "1 2;1 3".
    #[arg(long)]
    clutter: String,
    /// Comma-separated rational weights, e.g. "3.5,1,2/3".
    #[arg(long)]
    weights: String,
    /// Skip the Bier-sphere route and report brute force only.
    #[arg(long)]
    oracle_only: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name; `paper` runs the full claim suite.
    #[arg(long, default_value = "paper")]
    suite: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(cli, &echo) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
    }
}

fn load_complex(path: &str, cap: usize) -> Result<(SimplicialComplex, String), Error> {
    let text = read_input(path)?;
    Ok((parse_complex_with_cap(&text, cap)?, text))
}

fn grid_args(
    grid: &Option<Vec<usize>>,
    row_caps: &Option<Vec<usize>>,
    col_caps: &Option<Vec<usize>>,
) -> Result<(GridSpec, MultiplicityProfile), Error> {
    let dims = grid
        .as_ref()
        .ok_or_else(|| Error::Parse("missing --grid M N".into()))?;
    let grid_spec = GridSpec::new(dims[0], dims[1])?;
    let profile = MultiplicityProfile::new(
        row_caps.clone().unwrap_or_else(|| vec![1; grid_spec.rows]),
        col_caps.clone().unwrap_or_else(|| vec![1; grid_spec.cols]),
    );
    Ok((grid_spec, profile))
}

fn run(cli: Cli, echo: &str) -> Result<ExitCode, Error> {
    let cap = cli.cap;
    match &cli.command {
        Command::Build(args) => {
            let complex = match (&args.input, &args.grid) {
                (Some(path), None) => load_complex(path, cap)?.0,
                (None, Some(_)) => {
                    let (grid_spec, profile) = grid_args(&args.grid, &args.row_caps, &args.col_caps)?;
                    multiple_chessboard_with_cap(&grid_spec, &profile, cap)?
                }
                _ => {
                    return Err(Error::Parse(
                        "build needs exactly one of --grid or --input".into(),
                    ))
                }
            };
            print!("{}", write_complex(&complex));
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual(args) => {
            let (complex, _) = load_complex(&args.input, cap)?;
            print!("{}", write_complex(&complex.alexander_dual_with_cap(cap)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bier(args) => {
            let (base, text) = load_complex(&args.input, cap)?;
            let bier = bier_sphere_with_cap(&base, cap)?;
            if args.raw {
                print!("{}", write_complex(bier.complex()));
                return Ok(ExitCode::SUCCESS);
            }
            let mut report = Report::new(echo);
            report.set_input(text.as_bytes());
            {
                let facets = report.section("facets");
                for line in write_complex(bier.complex()).lines() {
                    facets.push(line.to_string());
                }
            }
            {
                let triples = report.section("facet triples (A1,A2;B)");
                for (face, triple) in bier.facet_triples() {
                    triples.push(format!("{face} = {triple}"));
                }
            }
            report.push_value("ground_size", bier.complex().ground_size());
            report.push_value("face_count", bier.complex().face_count());
            report.push_value("sphere_dimension", bier.m() as i64 - 2);
            print!("{}", report.render());
            Ok(ExitCode::SUCCESS)
        }
        Command::Morse(args) => {
            let mut report = Report::new(echo);
            let dvf = match args.dmf.as_str() {
                "bier" => {
                    let path = args
                        .complex
                        .as_ref()
                        .ok_or_else(|| Error::Parse("--dmf bier needs --complex".into()))?;
                    let (base, text) = load_complex(path, cap)?;
                    report.set_input(text.as_bytes());
                    let bier = bier_sphere_with_cap(&base, cap)?;
                    bier_dmf(&bier)?
                }
                "multichess" => {
                    let (grid_spec, profile) = grid_args(&args.grid, &args.row_caps, &args.col_caps)?;
                    report.set_input(
                        format!(
                            "grid {} {} rows {:?} cols {:?}",
                            grid_spec.cols, grid_spec.rows, profile.row_caps, profile.col_caps
                        )
                        .as_bytes(),
                    );
                    multiple_chessboard_dmf_with_cap(&grid_spec, &profile, cap)?.0
                }
                other => return Err(Error::Parse(format!("unknown matching `{other}`"))),
            };

            let cells = dvf.critical_cells()?;
            {
                let section = report.section("critical cells");
                for c in &cells {
                    section.push(format!("dim {} {}", c.dim(), c));
                }
            }
            let acyclic = dvf.is_acyclic()?;
            if let Acyclicity::ClosedPath(p) = &acyclic {
                report.section("closed path").push(p.to_string());
            }
            if args.emit_matching {
                let section = report.section("matching");
                for (lower, upper) in dvf.pairs() {
                    section.push(format!("{} : {}", facet_line(*lower), facet_line(*upper)));
                }
            }
            report.push_value("valid", dvf.validate().is_valid());
            report.push_value("acyclic", acyclic.is_acyclic());
            report.push_value("critical_cells", cells.len());
            match dvf.connectivity_certificate() {
                Ok(cert) => report.push_value("connectivity_certificate", cert),
                Err(e) => report.push_value("connectivity_certificate", format!("n/a ({e})")),
            }
            print!("{}", report.render());
            Ok(ExitCode::SUCCESS)
        }
        Command::Homology(args) => {
            let (complex, text) = load_complex(&args.complex, cap)?;
            let coeffs = if args.z2 {
                Coefficients::F2
            } else {
                Coefficients::Integer
            };
            let profile = betti(&complex, coeffs)?;
            let mut report = Report::new(echo);
            report.set_input(text.as_bytes());
            {
                let table = report.section(format!("betti ({coeffs} coefficients)"));
                for (d, b) in profile.betti.iter().enumerate() {
                    let torsion = profile.torsion_at(d as i64);
                    if torsion.is_empty() {
                        table.push(format!("b_{d} = {b}"));
                    } else {
                        let list: Vec<String> = torsion.iter().map(|t| format!("Z/{t}")).collect();
                        table.push(format!("b_{d} = {b}  torsion {}", list.join(" + ")));
                    }
                }
            }
            report.push_value(
                "betti",
                format!(
                    "({})",
                    profile
                        .betti
                        .iter()
                        .map(|b| b.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
            );
            report.push_value("torsion_free", !profile.has_torsion());
            report.push_value("euler", complex.euler_characteristic());
            if !args.z2 {
                report.push_value(
                    "homological_connectivity",
                    homological_connectivity(&complex)?,
                );
            }
            print!("{}", report.render());
            Ok(ExitCode::SUCCESS)
        }
        Command::Bottleneck(args) => {
            let clutter = Clutter::parse(args.ground, &args.clutter)?;
            let weights = Weighting::parse(&args.weights)?;
            if weights.len() != args.ground {
                return Err(Error::GroundMismatch {
                    expected: args.ground,
                    got: weights.len(),
                });
            }
            let mut report = Report::new(echo);
            report.set_input(format!("{clutter:?} {weights:?}").as_bytes());

            let a = minmax_bruteforce(&clutter, &weights)?;
            let complementary = blocker(&clutter)?;
            let b = maxmin_bruteforce(&complementary, &weights)?;
            {
                let section = report.section("blocker");
                for member in complementary.members() {
                    section.push(facet_line(*member));
                }
            }
            report.push_value("minmax_a", a.value);
            report.push_value("minmax_witness", a.witness);
            report.push_value("maxmin_b", b.value);
            report.push_value("maxmin_witness", b.witness);

            let mut agree = a.value == b.value;
            if !args.oracle_only {
                let morse = bottleneck_via_morse_with_cap(&clutter, &weights, cap)?;
                report.push_value("morse_value", morse.value);
                report.push_value("bottleneck_element", morse.element + 1);
                report.push_value("critical_cell", morse.critical);
                agree = agree && morse.value == a.value;
            } else {
                report.push_value("bottleneck_element", a.element + 1);
            }
            report.push_value("agreement", agree);
            print!("{}", report.render());
            if agree {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
        Command::Verify(args) => {
            if args.suite != "paper" {
                return Err(Error::Parse(format!("unknown suite `{}`", args.suite)));
            }
            let results = run_claim_suite(&SuiteConfig { seed: cli.seed });
            let mut all_passed = true;
            for r in &results {
                println!("{}", r.summary_line());
                all_passed &= r.passed;
            }
            if all_passed {
                println!("suite: all {} criteria passed", results.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("suite: FAILURES present");
                Ok(ExitCode::from(3))
            }
        }
    }
}
