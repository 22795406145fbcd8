//! `ishida`: face lattices, Ishida complexes, Ext tables, lcdef, Hodge module
//! multiplicities and Hodge–Du Bois numbers of toric varieties from cone files.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure,
//! 3 computation error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use toric_ishida::combinatorics::FVector;
use toric_ishida::input::{parse_cone, ConeInput};
use toric_ishida::ishida::{Builder, ExtTable};
use toric_ishida::mhm::{a_numbers, decomposition_report};
use toric_ishida::polyhedral::{is_cone_over_simple, shelling, verify_shelling};
use toric_ishida::report::{
    envelope, ext_report, faces_report, gpoly_report, hodge_report, ishida_report, shelling_report, to_json_string,
    DecomposeReport, LcdefReport, Render,
};
use toric_ishida::verify::{random_corpus, run_suite, verification_corpus, Suite};
use toric_ishida::{Cone, FaceLattice};

#[derive(Parser)]
#[command(name = "ishida", version, about = "Exact invariants of affine toric varieties from cone files")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to PATH instead of stdout.
    #[arg(short = 'o', long = "output", global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// f-vector, face lattice and class predicates.
    Faces { file: PathBuf },
    /// Term and cohomology dimensions of the Ishida complex of degree L.
    Ishida {
        file: PathBuf,
        #[arg(long = "l", value_name = "L")]
        l: usize,
        /// Restrict the graded report to one face, given by ray indices, e.g. "0,2".
        #[arg(long, value_name = "RAYSET")]
        face: Option<String>,
    },
    /// Ext groups of the reflexive differentials, depths and lcdef.
    Ext { file: PathBuf },
    /// Local cohomological dimension defect.
    Lcdef { file: PathBuf },
    /// Weight-graded decomposition of the trivial Hodge module.
    Decompose { file: PathBuf },
    /// Toric g-vector of the cross-section.
    Gpoly { file: PathBuf },
    /// Hodge–Du Bois numbers of the projective toric variety of a simple polytope.
    Hodge { file: PathBuf },
    /// Line shelling of the facets, checked recursively.
    Shelling { file: PathBuf },
    /// Run a verification suite.
    Verify {
        /// Cone file to verify.
        file: Option<PathBuf>,
        /// d2, ish_n, surjectivity, codim, link, shelling, inequalities, closed_forms or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random box-sampled cones: dimension and count.
        #[arg(long, num_args = 2, value_names = ["N_DIM", "N_COUNT"])]
        random: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// The built-in corpus: named cones plus seeded random cones in dimensions 3 to 6.
        #[arg(long)]
        corpus: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

fn computation(message: impl ToString) -> Failure {
    Failure { code: 3, message: message.to_string() }
}

fn load(path: &PathBuf) -> Result<ConeInput, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_cone(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Document to print plus whether it reports a verification failure.
struct Output {
    json: Value,
    table: String,
    failed: bool,
}

fn emit<R: Render>(command: &str, name: Option<&str>, r: &R) -> Output {
    Output { json: envelope(command, name, r), table: r.table(), failed: false }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Faces { file } => {
            let input = load(file)?;
            let fl = FaceLattice::new(&input.cone);
            Ok(emit("faces", input.name.as_deref(), &faces_report(input.form, &fl)))
        }
        Command::Ishida { file, l, face } => {
            let input = load(file)?;
            let fl = FaceLattice::new(&input.cone);
            let face_id = match face {
                Some(sel) => {
                    let mut rays = sel
                        .split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(|s| s.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| usage(format!("bad --face {sel:?}: {e}")))?;
                    rays.sort_unstable();
                    rays.dedup();
                    Some(fl.face_by_rays(&rays).ok_or_else(|| usage(format!("rays {rays:?} do not span a face")))?)
                }
                None => None,
            };
            let complex = Builder::new(&fl).full(*l).map_err(|e| usage(e.to_string()))?;
            let table = ExtTable::compute(&fl).map_err(computation)?;
            Ok(emit("ishida", input.name.as_deref(), &ishida_report(&fl, &table, complex.summary(), face_id)))
        }
        Command::Ext { file } => {
            let input = load(file)?;
            let fl = FaceLattice::new(&input.cone);
            let table = ExtTable::compute(&fl).map_err(computation)?;
            Ok(emit("ext", input.name.as_deref(), &ext_report(&fl, &table)))
        }
        Command::Lcdef { file } => {
            let input = load(file)?;
            let fl = FaceLattice::new(&input.cone);
            let table = ExtTable::compute(&fl).map_err(computation)?;
            Ok(emit("lcdef", input.name.as_deref(), &LcdefReport { lcdef: table.lcdef() }))
        }
        Command::Decompose { file } => {
            let input = load(file)?;
            let fl = FaceLattice::new(&input.cone);
            let table = ExtTable::compute(&fl).map_err(computation)?;
            let dec = a_numbers(&fl, &table).map_err(computation)?;
            let report = decomposition_report(&dec, &table);
            Ok(emit("decompose", input.name.as_deref(), &DecomposeReport { a_numbers: dec, report }))
        }
        Command::Gpoly { file } => {
            let input = load(file)?;
            let fl = FaceLattice::new(&input.cone);
            Ok(emit("gpoly", input.name.as_deref(), &gpoly_report(&fl)))
        }
        Command::Hodge { file } => {
            let input = load(file)?;
            let fl = FaceLattice::new(&input.cone);
            if fl.dim() < 2 {
                return Err(computation("the cross-section must be a polytope of dimension at least 1"));
            }
            if !is_cone_over_simple(&fl) {
                return Err(computation("the cross-section is not a simple polytope"));
            }
            Ok(emit("hodge", input.name.as_deref(), &hodge_report(&FVector::of(&fl).polytope())))
        }
        Command::Shelling { file } => {
            let input = load(file)?;
            let fl = FaceLattice::new(&input.cone);
            let s = shelling(&fl).map_err(computation)?;
            let ok = verify_shelling(&fl, &s.order);
            let mut out = emit("shelling", input.name.as_deref(), &shelling_report(&fl, s, ok));
            out.failed = !ok;
            Ok(out)
        }
        Command::Verify { file, suite, random, seed, corpus } => {
            let suite: Suite = suite.parse().map_err(usage)?;
            let mut cones: Vec<(String, Cone)> = Vec::new();
            if let Some(path) = file {
                let input = load(path)?;
                let name = input.name.unwrap_or_else(|| path.display().to_string());
                cones.push((name, input.cone));
            }
            if let Some(r) = random {
                let (dim, count) = (r[0], r[1]);
                if dim == 0 {
                    return Err(usage("random cones need dimension at least 1"));
                }
                cones.extend(random_corpus(dim, count, *seed));
            }
            if *corpus {
                cones.extend(verification_corpus(*seed));
            }
            if cones.is_empty() {
                return Err(usage("verify needs a cone file, --random N_DIM N_COUNT or --corpus"));
            }
            let report = run_suite(suite, &cones);
            let mut out = emit("verify", None, &report);
            out.failed = !report.passed;
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => to_json_string(&out.json),
                Format::Table => out.table,
            };
            match &cli.output {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(if out.failed { 2 } else { 0 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
