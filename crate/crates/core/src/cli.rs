//! Command-line front end. Reports are JSON-lines on the output stream.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::braiding::BraidingMatrix;
use crate::degsearch::{enumerate_e, EnumerateOptions, Enumeration, QuadraticForm, ThetaForm};
use crate::error::{Error, Result};
use crate::identities::{braid_suite, calculus_suite, symmetrizer_suite};
use crate::io::{block_to_value, classical_to_value, table_from_json, table_header, table_to_value, tensor_to_value, MatrixSource};
use crate::relations::{constants, prerelations, redundancy, RelationSet, Side};
use crate::specialize::{r_minus_witness, serre_ideal_member, specialize_element, CartanMatrix, Verdict};

/// Environment variable holding the number of worker threads.
pub const WORKERS_ENV: &str = "NICHOLS_WORKERS";

#[derive(Parser, Debug)]
#[command(name = "nichols", version, about = "Defining relations of Nichols algebras of diagonal type")]
pub struct JobConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct MatrixArg {
    /// JSON matrix file with exactly one of "cartan", "averaged_from_cartan", "braiding_exponents_doubled".
    #[arg(long)]
    pub matrix: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the braid and calculus identity suites on random braidings.
    CheckIdentities {
        /// Largest number of strands.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random braidings, seeded consecutively from --seed.
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 2)]
        letters: usize,
    },
    /// Pre-relations (or constants) in one degree.
    Relations {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value = "right")]
        side: Side,
        /// Emit constants instead of pre-relations.
        #[arg(long)]
        constants: bool,
        /// Flag relations already in the ideal generated by lower-degree pre-relations.
        #[arg(long)]
        redundancy: bool,
        /// Also write the whole relation table to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Multidegrees where the full twist acts trivially.
    Degrees {
        #[command(flatten)]
        matrix: MatrixArg,
        /// Search bound used when the form is not semi-positive.
        #[arg(long)]
        max: usize,
        /// Allow negative coordinates.
        #[arg(long)]
        all_integers: bool,
    },
    /// Specialize pre-relations at q = 1.
    Specialize {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        degree: usize,
        /// Read relations from a saved table instead of computing them.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Also test membership in the classical Serre ideal.
        #[arg(long)]
        serre: bool,
    },
    /// Search for commutator chains showing a specialized relation is outside the radical.
    Witness {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Graded dimensions of the Nichols algebra per block.
    Dims {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        max: usize,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_) => 1,
        _ => 2,
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cfg = match JobConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    if let Err(e) = configure_workers() {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    match execute(&cfg.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn configure_workers() -> Result<()> {
    let Ok(v) = std::env::var(WORKERS_ENV) else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Input(format!("{WORKERS_ENV} must be a positive integer, got {v:?}")))?;
    // a pool that is already set up (repeated in-process runs) is kept
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn line(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{v}").and_then(|_| out.flush()).map_err(|e| Error::Input(format!("write failed: {e}")))
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_matrix(arg: &MatrixArg) -> Result<MatrixSource> {
    MatrixSource::from_json(&read(&arg.matrix)?)
}

fn check_degree(degree: usize) -> Result<()> {
    if degree < 2 {
        return Err(Error::Input(format!("degree must be at least 2, got {degree}")));
    }
    Ok(())
}

fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::CheckIdentities { n, seed, count, letters } => check_identities(*n, *seed, *count, *letters, out),
        Command::Relations { matrix, degree, side, constants, redundancy, output } => {
            relations_cmd(&load_matrix(matrix)?, *degree, *side, *constants, *redundancy, output.as_ref(), out)
        }
        Command::Degrees { matrix, max, all_integers } => degrees_cmd(&load_matrix(matrix)?, *max, *all_integers, out),
        Command::Specialize { matrix, degree, table, serre } => {
            specialize_cmd(&load_matrix(matrix)?, *degree, table.as_ref(), None, *serre, out)
        }
        Command::Witness { matrix, degree, depth, table } => {
            specialize_cmd(&load_matrix(matrix)?, *degree, table.as_ref(), Some(*depth), false, out)
        }
        Command::Dims { matrix, max } => dims_cmd(&load_matrix(matrix)?.braiding(), *max, out),
    }
}

fn check_identities(n: usize, seed: u64, count: u64, letters: usize, out: &mut dyn Write) -> Result<i32> {
    check_degree(n)?;
    if !(1..=8).contains(&letters) {
        return Err(Error::Input(format!("letters must be in 1..=8, got {letters}")));
    }
    let mut failed = false;
    for s in seed..seed.saturating_add(count) {
        let a = BraidingMatrix::random_monomial(letters, s, 4)?;
        for degree in 2..=n {
            for r in braid_suite(&a, degree)?.into_iter().chain(calculus_suite(&a, degree)?).chain(symmetrizer_suite(&a, degree)?) {
                failed |= !r.passed();
                let mut v = json!({ "seed": s, "degree": degree, "identity": r.name, "pass": r.passed() });
                if let Some(f) = &r.failure {
                    v["failure"] = Value::String(f.clone());
                }
                line(out, &v)?;
            }
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn compute_set(m: &MatrixSource, degree: usize, side: Side, want_constants: bool) -> Result<RelationSet> {
    check_degree(degree)?;
    let a = m.braiding();
    if want_constants {
        constants(&a, degree, side)
    } else {
        prerelations(&a, degree, side)
    }
}

/// Round-trips the table through the loader, which re-verifies every relation.
fn self_check(m: &MatrixSource, set: &RelationSet) -> Result<Value> {
    let table = table_to_value(m, set);
    let (_, reloaded) = table_from_json(&table.to_string())?;
    if reloaded.blocks != set.blocks {
        return Err(Error::Verification("relation table changed on reload".into()));
    }
    Ok(table)
}

fn relations_cmd(
    m: &MatrixSource,
    degree: usize,
    side: Side,
    want_constants: bool,
    want_redundancy: bool,
    output: Option<&PathBuf>,
    out: &mut dyn Write,
) -> Result<i32> {
    let set = compute_set(m, degree, side, want_constants)?;
    let table = self_check(m, &set)?;
    let flags = if want_redundancy {
        let a = m.braiding();
        let mut lower = Vec::new();
        for d in 2..degree {
            lower.extend(prerelations(&a, d, side)?.elements().cloned());
        }
        Some(redundancy(a.n_letters(), &lower, &set)?)
    } else {
        None
    };
    line(out, &table_header(m, &set))?;
    for (k, b) in set.blocks.iter().enumerate() {
        let mut v = block_to_value(b);
        if let Some(f) = &flags {
            v["redundant"] = json!(f[k].1);
        }
        line(out, &v)?;
    }
    if let Some(path) = output {
        std::fs::write(path, format!("{table}\n")).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(0)
}

fn degrees_cmd(m: &MatrixSource, max: usize, all_integers: bool, out: &mut dyn Write) -> Result<i32> {
    let tf = ThetaForm::new(&m.braiding())?;
    let qf = QuadraticForm::from_theta(&tf).map_err(|e| Error::Input(e.to_string()))?;
    let e = enumerate_e(&qf, EnumerateOptions { all_integers, bound: max });
    let mut v = json!({ "semipositive": matches!(e, Enumeration::Finite(_)), "points": e.points() });
    if let Enumeration::Unbounded { bound, .. } = e {
        v["truncated_at"] = json!(bound);
    }
    line(out, &v)?;
    Ok(0)
}

fn cartan_of(m: &MatrixSource) -> Result<&CartanMatrix> {
    m.cartan()
        .ok_or_else(|| Error::Input("specialization needs a \"cartan\" or \"averaged_from_cartan\" matrix".into()))
}

fn specialize_cmd(
    m: &MatrixSource,
    degree: usize,
    table: Option<&PathBuf>,
    depth: Option<usize>,
    serre: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let c = cartan_of(m)?.clone();
    let set = match table {
        Some(path) => {
            let (tm, set) = table_from_json(&read(path)?)?;
            if &tm != m || set.degree != degree {
                return Err(Error::Input("relation table does not match --matrix and --degree".into()));
            }
            set
        }
        None => compute_set(m, degree, Side::Right, false)?,
    };
    for b in &set.blocks {
        for x in &b.relations {
            let u = specialize_element(x)?;
            let mut v = json!({
                "multidegree": b.multidegree.counts(),
                "relation": tensor_to_value(x),
                "specialized": u.to_string(),
                "specialized_terms": classical_to_value(&u),
            });
            if serre {
                v["serre_member"] = json!(serre_ideal_member(&c, &u, degree)?);
            }
            if let Some(d) = depth {
                let verdict = r_minus_witness(&c, &u, d)?;
                v["verdict"] = json!(verdict.name());
                if let Verdict::NotInRadical { chain, steps } = &verdict {
                    v["chain"] = json!(chain);
                    v["steps"] = Value::Array(
                        steps.iter().map(|s| json!({ "letter": s.letter, "value": s.value.to_string() })).collect(),
                    );
                }
            }
            line(out, &v)?;
        }
    }
    Ok(0)
}

fn dims_cmd(a: &BraidingMatrix, max: usize, out: &mut dyn Write) -> Result<i32> {
    if max > 12 {
        return Err(Error::Input(format!("--max {max} is too large; use at most 12")));
    }
    for (n, blocks) in crate::relations::nichols_dims(a, max)?.into_iter().enumerate() {
        let total: usize = blocks.iter().map(|(_, d)| d).sum();
        let list: Vec<Value> = blocks.iter().map(|(md, d)| json!({ "multidegree": md.counts(), "dim": d })).collect();
        line(out, &json!({ "degree": n, "total": total, "blocks": list }))?;
    }
    Ok(0)
}
