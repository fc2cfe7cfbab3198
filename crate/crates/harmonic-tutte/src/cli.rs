//! Command-line surface over the library: reads generator-matrix and
//! harmonic-function files, emits polynomials, tables, and verification
//! reports in a human or line-delimited JSON format.
//!
//! The binary is a thin shim over [`run`]; everything here is plain
//! library code so the whole surface is testable in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::LinearCode;
use crate::harmonic::{harmonic_basis, load_harmonic, HarmonicFunction};
use crate::linalg::FieldMatrix;
use crate::matroid::VectorMatroid;
use crate::poly::BivariatePoly;
use crate::scalar::rational_string;
use crate::subset::Subset;
use crate::verify::{
    self, design_check, selftest, verify_btf, verify_duality, verify_greene,
    verify_lemma_slices, verify_macwilliams_harmonic, verify_reinterpretation, Identity, Verdict,
    VerificationReport,
};
use crate::{EnumCaps, Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "hartutte",
    about = "Exact Tutte polynomials, harmonic weight enumerators, and identity checks \
             for linear codes and vector matroids",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Seed for randomized subcommands (selftest, sampled subsets).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cap on the ground-set size for 2^n subset sums
    /// (default 20; env HARTUTTE_MAX_N).
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Cap on the number of codewords enumerated
    /// (default 2^24; env HARTUTTE_MAX_WORDS).
    #[arg(long, global = true)]
    max_words: Option<u128>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    JsonLines,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tutte polynomial of the vector matroid of a matrix file.
    Tutte { matrix: PathBuf },
    /// Harmonic Tutte polynomial for a matrix and a harmonic function.
    HarmonicTutte { matrix: PathBuf, function: PathBuf },
    /// Weight enumerator of the code generated by a matrix file.
    WeightEnum { matrix: PathBuf },
    /// Harmonic weight enumerator of a code and a harmonic function.
    HarmonicWeightEnum { matrix: PathBuf, function: PathBuf },
    /// Harmonic weight enumerator with its forced (xy)^d factor removed.
    Zeta { matrix: PathBuf, function: PathBuf },
    /// Canonical basis of the degree-d harmonic functions on {1..n}.
    HarmBasis {
        n: usize,
        /// Degree; may also be given via --degree.
        d: Option<usize>,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Generator matrix of the dual code, in the same file format.
    Dual { matrix: PathBuf },
    /// The table t -> B_{t,f} of extension-weighted shortened-word counts.
    BTable { matrix: PathBuf, function: PathBuf },
    /// Check one identity (or `all`) on explicit inputs.
    ///
    /// Names: duality | greene | macwilliams | btf | reinterpretation |
    /// lemma-slices | all. All take a matrix file and an optional harmonic
    /// function file (default: the constant degree-0 function), except
    /// lemma-slices, which takes only the function file.
    Verify { name: String, inputs: Vec<PathBuf> },
    /// Test whether the fixed-weight supports form t-designs, two ways.
    DesignCheck { matrix: PathBuf, t: usize },
    /// Run the seeded random corpus for every identity.
    Selftest {
        /// Random instances per identity.
        #[arg(long, default_value_t = 200)]
        instances: usize,
    },
}

/// Entry point used by the binary: parses `argv`, runs the command, and
/// returns the process exit code. Verification mismatches and input errors
/// exit nonzero.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };
    let mut stdout = std::io::stdout().lock();
    match dispatch(&cli, &mut stdout) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

/// Test hook: run with string arguments, capturing stdout.
pub fn run_captured(args: &[&str]) -> (i32, String) {
    let mut full = vec!["hartutte"];
    full.extend_from_slice(args);
    let cli = match Cli::try_parse_from(&full) {
        Ok(cli) => cli,
        Err(err) => return (err.exit_code(), err.to_string()),
    };
    let mut out = Vec::new();
    let code = match dispatch(&cli, &mut out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(err) => {
            out.extend_from_slice(format!("error: {err}\n").as_bytes());
            1
        }
    };
    (code, String::from_utf8(out).expect("output is utf-8"))
}

fn env_cap<T: std::str::FromStr>(name: &str) -> Option<T> {
    std::env::var(name).ok()?.parse().ok()
}

impl Cli {
    fn caps(&self) -> EnumCaps {
        let defaults = EnumCaps::default();
        EnumCaps {
            max_ground: self
                .max_n
                .or_else(|| env_cap("HARTUTTE_MAX_N"))
                .unwrap_or(defaults.max_ground),
            max_words: self
                .max_words
                .or_else(|| env_cap("HARTUTTE_MAX_WORDS"))
                .unwrap_or(defaults.max_words),
        }
    }
}

fn load_function_for(matrix: &FieldMatrix, path: Option<&PathBuf>) -> Result<HarmonicFunction> {
    match path {
        Some(p) => {
            let f = load_harmonic(p)?;
            if f.ground_size() != matrix.cols() {
                return Err(Error::GroundSizeMismatch {
                    left: matrix.cols(),
                    right: f.ground_size(),
                });
            }
            Ok(f)
        }
        None => Ok(HarmonicFunction::constant_one(matrix.cols())),
    }
}

/// Runs one parsed command, writing all output to `out`. Returns `false`
/// when a verification subcommand found a mismatch.
fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let caps = cli.caps();
    match &cli.command {
        Command::Tutte { matrix } => {
            let m = VectorMatroid::new(FieldMatrix::load(matrix)?);
            emit_poly(out, cli.format, &m.tutte_with(&caps)?)?;
        }
        Command::HarmonicTutte { matrix, function } => {
            let rep = FieldMatrix::load(matrix)?;
            let f = load_function_for(&rep, Some(function))?;
            let m = VectorMatroid::new(rep);
            emit_poly(out, cli.format, &m.harmonic_tutte_with(&f, &caps)?)?;
        }
        Command::WeightEnum { matrix } => {
            let c = LinearCode::from_matrix(FieldMatrix::load(matrix)?);
            emit_poly(out, cli.format, &c.weight_enumerator(&caps)?)?;
        }
        Command::HarmonicWeightEnum { matrix, function } => {
            let c = LinearCode::from_matrix(FieldMatrix::load(matrix)?);
            let f = load_function_for(c.generator(), Some(function))?;
            emit_poly(out, cli.format, &c.harmonic_weight_enumerator(&f, &caps)?)?;
        }
        Command::Zeta { matrix, function } => {
            let c = LinearCode::from_matrix(FieldMatrix::load(matrix)?);
            let f = load_function_for(c.generator(), Some(function))?;
            emit_poly(out, cli.format, &c.zeta(&f, &caps)?)?;
        }
        Command::HarmBasis { n, d, degree } => {
            let d = d.or(*degree).ok_or_else(|| {
                Error::Parse("harm-basis needs a degree: positional or --degree".into())
            })?;
            let basis = harmonic_basis(*n, d)?;
            match cli.format {
                Format::Human => {
                    writeln!(out, "n={n} d={d} dim={}", basis.len())?;
                    for (i, f) in basis.iter().enumerate() {
                        writeln!(out, "f{} = {f}", i + 1)?;
                    }
                }
                Format::JsonLines => {
                    for f in &basis {
                        writeln!(out, "{}", f.to_json_string())?;
                    }
                }
            }
        }
        Command::Dual { matrix } => {
            let c = LinearCode::from_matrix(FieldMatrix::load(matrix)?);
            let dual = c.dual();
            match cli.format {
                Format::Human => {
                    write!(out, "{}", dual.generator().to_file_string())?;
                }
                Format::JsonLines => {
                    #[derive(Serialize)]
                    struct MatrixRecord {
                        q: u64,
                        n: usize,
                        k: usize,
                        rows: Vec<Vec<u64>>,
                    }
                    let g = dual.generator();
                    let record = MatrixRecord {
                        q: g.field().order(),
                        n: g.cols(),
                        k: g.rows(),
                        rows: (0..g.rows()).map(|r| g.row(r).to_vec()).collect(),
                    };
                    writeln!(out, "{}", serde_json::to_string(&record)?)?;
                }
            }
        }
        Command::BTable { matrix, function } => {
            let c = LinearCode::from_matrix(FieldMatrix::load(matrix)?);
            let f = load_function_for(c.generator(), Some(function))?;
            let table = c.b_table(&f, &caps)?;
            for (t, value) in table.iter().enumerate() {
                match cli.format {
                    Format::Human => writeln!(out, "t={t} B={}", rational_string(value))?,
                    Format::JsonLines => {
                        #[derive(Serialize)]
                        struct Row<'a> {
                            t: usize,
                            value: &'a str,
                        }
                        let value = rational_string(value);
                        let row = Row { t, value: &value };
                        writeln!(out, "{}", serde_json::to_string(&row)?)?;
                    }
                }
            }
        }
        Command::Verify { name, inputs } => {
            return run_verify(cli, name, inputs, &caps, out);
        }
        Command::DesignCheck { matrix, t } => {
            let c = LinearCode::from_matrix(FieldMatrix::load(matrix)?);
            let report = design_check(&c, *t, &caps)?;
            match cli.format {
                Format::Human => {
                    writeln!(out, "design check: t={t}")?;
                    for d in &report.degrees {
                        write!(
                            out,
                            "d={}: basis {}, enumerators {}, tutte {}",
                            d.d,
                            d.basis_size,
                            if d.enumerators_all_zero { "all zero" } else { "nonzero" },
                            if d.tutte_all_zero { "all zero" } else { "nonzero" },
                        )?;
                        match &d.witness {
                            Some(w) => {
                                writeln!(out, " (witness {} -> {})", w.function, w.enumerator)?
                            }
                            None => writeln!(out)?,
                        }
                    }
                    for w in &report.weight_classes {
                        match w.lambda {
                            Some(l) => writeln!(
                                out,
                                "weight {}: {} blocks, every {}-subset in {} blocks",
                                w.weight, w.blocks, t, l
                            )?,
                            None => writeln!(
                                out,
                                "weight {}: {} blocks, counts not constant",
                                w.weight, w.blocks
                            )?,
                        }
                    }
                    writeln!(
                        out,
                        "harmonic criterion: {}",
                        if report.harmonic_pass { "PASS" } else { "FAIL" }
                    )?;
                    writeln!(
                        out,
                        "counting oracle: {}",
                        if report.oracle_pass { "PASS" } else { "FAIL" }
                    )?;
                }
                Format::JsonLines => {
                    writeln!(out, "{}", serde_json::to_string(&report)?)?;
                }
            }
        }
        Command::Selftest { instances } => {
            let report = selftest(cli.seed, *instances)?;
            match cli.format {
                Format::Human => {
                    writeln!(out, "seed: {}", report.seed)?;
                    for o in &report.outcomes {
                        writeln!(
                            out,
                            "{}: {} instances, {} checks, {} failures",
                            o.identity.name(),
                            o.instances,
                            o.checks,
                            o.failures.len()
                        )?;
                        for failure in &o.failures {
                            writeln!(out, "{failure}")?;
                        }
                    }
                    writeln!(
                        out,
                        "selftest: {}",
                        if report.passed() { "PASS" } else { "FAIL" }
                    )?;
                }
                Format::JsonLines => {
                    #[derive(Serialize)]
                    struct Row<'a> {
                        identity: &'a str,
                        instances: usize,
                        checks: usize,
                        failures: usize,
                    }
                    for o in &report.outcomes {
                        let row = Row {
                            identity: o.identity.name(),
                            instances: o.instances,
                            checks: o.checks,
                            failures: o.failures.len(),
                        };
                        writeln!(out, "{}", serde_json::to_string(&row)?)?;
                    }
                }
            }
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn run_verify(
    cli: &Cli,
    name: &str,
    inputs: &[PathBuf],
    caps: &EnumCaps,
    out: &mut dyn Write,
) -> Result<bool> {
    let identities: Vec<Identity> = if name == "all" {
        Identity::ALL.to_vec()
    } else {
        vec![name.parse()?]
    };

    let mut reports = Vec::new();
    for identity in &identities {
        reports.extend(run_one_identity(cli, *identity, inputs, caps)?);
    }

    let mut all_equal = true;
    for report in &reports {
        match cli.format {
            Format::Human => writeln!(out, "{report}\n")?,
            Format::JsonLines => {
                #[derive(Serialize)]
                struct Row<'a> {
                    identity: &'a str,
                    instance: &'a str,
                    verdict: &'a str,
                    lhs: Vec<crate::poly::TermRecord>,
                    rhs: Vec<crate::poly::TermRecord>,
                    diff: Vec<crate::poly::TermRecord>,
                }
                let diff = match &report.verdict {
                    Verdict::Equal => BivariatePoly::zero(),
                    Verdict::Mismatch { diff } => diff.clone(),
                };
                let row = Row {
                    identity: report.identity,
                    instance: &report.instance,
                    verdict: if report.is_equal() { "equal" } else { "mismatch" },
                    lhs: report.lhs.term_records(),
                    rhs: report.rhs.term_records(),
                    diff: diff.term_records(),
                };
                writeln!(out, "{}", serde_json::to_string(&row)?)?;
            }
        }
        all_equal &= report.is_equal();
    }
    if cli.format == Format::Human {
        writeln!(
            out,
            "{} checks: {}",
            reports.len(),
            if all_equal { "all equal" } else { "MISMATCH FOUND" }
        )?;
    }
    Ok(all_equal)
}

fn run_one_identity(
    cli: &Cli,
    identity: Identity,
    inputs: &[PathBuf],
    caps: &EnumCaps,
) -> Result<Vec<VerificationReport>> {
    let usage = |what: &str| Error::Parse(format!("verify {}: {what}", identity.name()));

    if identity == Identity::LemmaSlices {
        // takes only the harmonic function; any matrix argument is ignored
        let path = match inputs {
            [single] => single,
            [_, function] => function,
            _ => return Err(usage("expected a harmonic function file")),
        };
        let f = load_harmonic(path)?;
        let n = f.ground_size();
        return if n <= 16 {
            verify::verify_lemma_slices_all(&f, caps)
        } else {
            // sample subsets; exhaustive iteration is out of reach
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let reports = (0..4096)
                .map(|_| {
                    let mask = rng.random_range(0..(1u64 << n.min(62)));
                    verify_lemma_slices(&f, &Subset::from_mask(mask))
                })
                .collect();
            Ok(reports)
        };
    }

    let matrix_path = inputs
        .first()
        .ok_or_else(|| usage("expected a matrix file"))?;
    let matrix = FieldMatrix::load(matrix_path)?;
    let f = load_function_for(&matrix, inputs.get(1))?;

    let report = match identity {
        Identity::Duality => verify_duality(&VectorMatroid::new(matrix), &f, caps)?,
        Identity::Greene => verify_greene(&LinearCode::from_matrix(matrix), &f, caps)?,
        Identity::MacWilliams => {
            verify_macwilliams_harmonic(&LinearCode::from_matrix(matrix), &f, caps)?
        }
        Identity::BTable => verify_btf(&LinearCode::from_matrix(matrix), &f, caps)?,
        Identity::Reinterpretation => {
            verify_reinterpretation(&LinearCode::from_matrix(matrix), &f, caps)?
        }
        Identity::LemmaSlices => unreachable!(),
    };
    Ok(vec![report])
}

fn emit_poly(out: &mut dyn Write, format: Format, poly: &BivariatePoly) -> Result<()> {
    match format {
        Format::Human => writeln!(out, "{poly}")?,
        Format::JsonLines => {
            for record in poly.term_records() {
                writeln!(out, "{}", serde_json::to_string(&record)?)?;
            }
        }
    }
    Ok(())
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (code, _) = run_captured(&["frobnicate"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn missing_file_is_runtime_error() {
        let (code, out) = run_captured(&["tutte", "/nonexistent/file.txt"]);
        assert_eq!(code, 1);
        assert!(out.starts_with("error:"), "{out}");
    }

    #[test]
    fn unknown_verify_name_is_rejected() {
        let (code, out) = run_captured(&["verify", "nonsense", "/dev/null"]);
        assert_eq!(code, 1);
        assert!(out.contains("unknown identity"), "{out}");
    }
}
