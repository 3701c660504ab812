//! `sytmaj`: exact major index statistics on standard Young tableaux.
//!
//! Exit status: 0 success, 1 engine error or failed theorem check, 2 bad
//! arguments or input, 3 conjecture counterexample found.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::json;

use sytmaj::fakedeg::{maj_gf, maj_gf_block_diagonal, maj_gf_wreath, support_classification};
use sytmaj::limits::{ks_distance, local_limit_deviation, normal_pdf, normalized_distribution, ReferenceLaw};
use sytmaj::moments::{cumulants_from_formula, cumulants_to_moments, moments_from_gf, normalized_cumulant};
use sytmaj::rotation::{negative_rotations, phi, phi_graph_dot, positive_rotations, rotation_fixed_points_with_cap, verify_ranked_increment};
use sytmaj::scan::{self, SweepReport};
use sytmaj::tableaux::{brute_force_maj_gf_with_cap, StandardTableau, DEFAULT_CAP};
use sytmaj::{BlockDiagonalShape, Partition, QPolynomial, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "sytmaj", version, about = "Major index statistics on standard Young tableaux")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generating function of maj over SYT of a shape.
    Gf {
        shape: String,
        /// Count tableaux instead of using the closed form.
        #[arg(long)]
        brute: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Predicted support and gaps of the generating function.
    Support { shape: String },
    /// Check the zero pattern of every partition up to N.
    CheckZeros {
        #[arg(long)]
        n: usize,
    },
    /// Exact moments and cumulants from the closed forms.
    Moments {
        shape: String,
        #[arg(long, default_value_t = 4)]
        max_d: usize,
    },
    /// Apply the rotation map to one tableau.
    Rotate {
        shape: String,
        /// Rows as JSON, e.g. [[1,3],[2]], or a full {"shape","rows"} object.
        #[arg(long)]
        tableau: String,
    },
    /// Tableaux on which no rotation applies.
    FixedPoints {
        shape: String,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Check that the rotation map raises maj by one; `--format dot` draws it.
    VerifyRanked { shape: String },
    /// Kolmogorov distance of each shape in a JSONL file to a reference law.
    LimitDiagnose {
        #[arg(long)]
        shapes: PathBuf,
        /// normal or ih:M
        #[arg(long, default_value = "normal")]
        law: String,
    },
    /// Distance of point probabilities from the matching normal density.
    LocalLimit { shape: String },
    /// Rows (k, count) of the maj distribution.
    Hist {
        shape: String,
        /// Same as --format csv.
        #[arg(long)]
        csv: bool,
        /// Add the scaled normal approximation as a third column.
        #[arg(long)]
        gaussian: bool,
    },
    /// Sweep every partition up to N.
    Sweep {
        #[arg(value_enum)]
        kind: SweepKind,
        #[arg(long)]
        n: usize,
        /// Largest n for the (n,n) rectangles in the parity sweep.
        #[arg(long, default_value_t = 0)]
        catalan: usize,
        /// Smallest n for the bounds sweep.
        #[arg(long, default_value_t = 10)]
        n_min: usize,
    },
    /// Wreath product fake degrees (d = 1 only).
    WreathGf {
        shape: String,
        /// Defaults to the number of blocks.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 1)]
        d: usize,
    },
    /// Generating function of a block diagonal shape via the product formula.
    BlockGf {
        shape: String,
        #[arg(long)]
        brute: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepKind {
    Zeros,
    Unimodal,
    Parity,
    Oracle,
    Bounds,
}

enum Failure {
    Usage(String),
    Engine(String),
    Conjecture(String),
}

impl From<sytmaj::Error> for Failure {
    fn from(e: sytmaj::Error) -> Self {
        Failure::Engine(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Engine(e.to_string())
    }
}

type Outcome = Result<Vec<u8>, Failure>;

fn parse_shape(s: &str) -> Result<Shape, Failure> {
    s.parse().map_err(|e: sytmaj::Error| Failure::Usage(e.to_string()))
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e: sytmaj::Error| Failure::Usage(e.to_string()))
}

fn parse_blocks(s: &str) -> Result<BlockDiagonalShape, Failure> {
    s.parse().map_err(|e: sytmaj::Error| Failure::Usage(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> Outcome {
    let mut out = serde_json::to_vec(value).map_err(|e| Failure::Engine(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}

fn poly_csv(p: &QPolynomial) -> Outcome {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "count"]).map_err(csv_err)?;
    if let Some(lo) = p.min_degree() {
        for (t, c) in p.support_slice().iter().enumerate() {
            w.write_record([(lo + t).to_string(), c.to_string()]).map_err(csv_err)?;
        }
    }
    w.into_inner().map_err(|e| Failure::Engine(e.to_string()))
}

fn csv_err(e: csv::Error) -> Failure {
    Failure::Engine(e.to_string())
}

fn emit_poly(p: &QPolynomial, format: Option<Format>) -> Outcome {
    match format {
        Some(Format::Csv) => poly_csv(p),
        _ => to_json(p),
    }
}

fn sweep_outcome(report: SweepReport, conjecture: bool) -> Outcome {
    let body = to_json(&report)?;
    if report.passed() {
        return Ok(body);
    }
    let text = String::from_utf8_lossy(&body).into_owned();
    if conjecture {
        Err(Failure::Conjecture(text))
    } else {
        Err(Failure::Engine(text))
    }
}

fn hist(shape: &Shape, format: Option<Format>, gaussian: bool) -> Outcome {
    let p = maj_gf(shape);
    if format == Some(Format::Json) {
        let rows: Vec<(usize, String)> = (p.min_degree().unwrap_or(0)..=p.degree().unwrap_or(0))
            .map(|k| (k, p.coeff(k).to_string()))
            .collect();
        return to_json(&rows);
    }
    if !gaussian {
        return poly_csv(&p);
    }
    let table = moments_from_gf(&p, 2)?;
    let mean = table.mean.to_f64().unwrap_or(f64::NAN);
    let sigma = table.variance.to_f64().unwrap_or(f64::NAN).sqrt();
    let total = p.eval_at_one().to_f64().unwrap_or(f64::NAN);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "count", "gaussian"]).map_err(csv_err)?;
    for (t, c) in p.support_slice().iter().enumerate() {
        let k = p.min_degree().unwrap_or(0) + t;
        let g = if sigma > 0.0 {
            total * normal_pdf((k as f64 - mean) / sigma) / sigma
        } else {
            total
        };
        w.write_record([k.to_string(), c.to_string(), format!("{g:.16e}")]).map_err(csv_err)?;
    }
    w.into_inner().map_err(|e| Failure::Engine(e.to_string()))
}

fn read_shapes(path: &PathBuf) -> Result<Vec<Shape>, Failure> {
    let file = File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut shapes = Vec::new();
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let value: serde_json::Value = serde_json::from_str(line)
            .map_err(|e| Failure::Usage(format!("line {}: {e}", idx + 1)))?;
        let shape = match value {
            serde_json::Value::String(s) => parse_shape(&s)?,
            other => serde_json::from_value(other).map_err(|e| Failure::Usage(format!("line {}: {e}", idx + 1)))?,
        };
        shapes.push(shape);
    }
    Ok(shapes)
}

fn limit_diagnose(path: &PathBuf, law: &str) -> Outcome {
    let law: ReferenceLaw = law.parse().map_err(|e: sytmaj::Error| Failure::Usage(e.to_string()))?;
    let shapes = read_shapes(path)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["shape", "n", "aft", "ks", "kappa4_star"]).map_err(csv_err)?;
    for shape in shapes {
        let (ks, k4) = match normalized_distribution(&shape) {
            Ok(dist) => {
                let ks = ks_distance(&dist, law)?;
                let k4 = normalized_cumulant(&shape, 4)?.to_f64().unwrap_or(f64::NAN);
                (format!("{ks:.16e}"), format!("{k4:.16e}"))
            }
            Err(sytmaj::Error::ZeroVariance) => (String::new(), String::new()),
            Err(e) => return Err(e.into()),
        };
        w.write_record([shape.to_string(), shape.size().to_string(), shape.aft().to_string(), ks, k4])
            .map_err(csv_err)?;
    }
    w.into_inner().map_err(|e| Failure::Engine(e.to_string()))
}

fn parse_tableau(shape: &Shape, text: &str) -> Result<StandardTableau, Failure> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Failure::Usage(format!("tableau: {e}")))?;
    let tableau = if value.is_object() {
        serde_json::from_value::<StandardTableau>(value).map_err(|e| Failure::Usage(format!("tableau: {e}")))?
    } else {
        let rows: Vec<Vec<usize>> =
            serde_json::from_value(value).map_err(|e| Failure::Usage(format!("tableau: {e}")))?;
        StandardTableau::new(shape.clone(), rows).map_err(|e| Failure::Usage(e.to_string()))?
    };
    if tableau.shape() != shape {
        return Err(Failure::Usage(format!("tableau has shape {}, expected {shape}", tableau.shape())));
    }
    Ok(tableau)
}

fn triples(ws: &[sytmaj::rotation::RotationWitness]) -> Vec<[usize; 3]> {
    ws.iter().map(|w| [w.i, w.j, w.k]).collect()
}

fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Gf { shape, brute, cap } => {
            let shape = parse_shape(shape)?;
            let p = if *brute { brute_force_maj_gf_with_cap(&shape, *cap)? } else { maj_gf(&shape) };
            emit_poly(&p, format)
        }
        Command::Support { shape } => {
            let s = support_classification(&parse_partition(shape)?)?;
            to_json(&json!({"min": s.min_maj, "max": s.max_maj, "gaps": s.gaps}))
        }
        Command::CheckZeros { n } => sweep_outcome(scan::sweep_zeros_theorem(*n), false),
        Command::Moments { shape, max_d } => {
            let shape = parse_shape(shape)?;
            let kappa = cumulants_from_formula(&shape, (*max_d).max(2));
            to_json(&cumulants_to_moments(&kappa, (*max_d).max(2))?)
        }
        Command::Rotate { shape, tableau } => {
            let shape = parse_shape(shape)?;
            let t = parse_tableau(&shape, tableau)?;
            to_json(&json!({
                "maj": t.maj(),
                "phi": phi(&t),
                "positive": triples(&positive_rotations(&t)),
                "negative": triples(&negative_rotations(&t)),
            }))
        }
        Command::FixedPoints { shape, count_only, cap } => {
            let fixed = rotation_fixed_points_with_cap(&parse_partition(shape)?, *cap)?;
            if *count_only {
                Ok(format!("{}\n", fixed.len()).into_bytes())
            } else {
                to_json(&fixed)
            }
        }
        Command::VerifyRanked { shape } => {
            let lam = parse_partition(shape)?;
            if format == Some(Format::Dot) {
                return Ok(phi_graph_dot(&lam)?.into_bytes());
            }
            let report = verify_ranked_increment(&lam)?;
            let body = to_json(&report)?;
            if report.increments_valid() {
                Ok(body)
            } else {
                Err(Failure::Engine(String::from_utf8_lossy(&body).into_owned()))
            }
        }
        Command::LimitDiagnose { shapes, law } => limit_diagnose(shapes, law),
        Command::LocalLimit { shape } => to_json(&local_limit_deviation(&parse_shape(shape)?)?),
        Command::Hist { shape, csv, gaussian } => {
            let format = if *csv { Some(Format::Csv) } else { format };
            hist(&parse_shape(shape)?, format, *gaussian)
        }
        Command::Sweep { kind, n, catalan, n_min } => match kind {
            SweepKind::Zeros => sweep_outcome(scan::sweep_zeros_theorem(*n), false),
            SweepKind::Oracle => {
                if *n > DEFAULT_CAP {
                    return Err(Failure::Usage(format!("oracle sweep needs n <= {DEFAULT_CAP}")));
                }
                sweep_outcome(scan::sweep_formula_vs_oracle(*n), false)
            }
            SweepKind::Bounds => sweep_outcome(scan::sweep_hook_bounds(*n_min, *n, &[1, 2, 3, 4]), false),
            SweepKind::Unimodal => sweep_outcome(scan::sweep_unimodality_conjecture(*n), true),
            SweepKind::Parity => sweep_outcome(scan::sweep_parity_unimodality(*n, *catalan), true),
        },
        Command::WreathGf { shape, m, d } => {
            let blocks = parse_blocks(shape)?;
            let m = m.unwrap_or(blocks.blocks().len());
            emit_poly(&maj_gf_wreath(&blocks, m, *d)?, format)
        }
        Command::BlockGf { shape, brute } => {
            let blocks = parse_blocks(shape)?;
            let p = if *brute {
                brute_force_maj_gf_with_cap(&Shape::Block(blocks), DEFAULT_CAP)?
            } else {
                maj_gf_block_diagonal(&blocks, 1)?
            };
            emit_poly(&p, format)
        }
    }
}

fn write_output(cli: &Cli, bytes: &[u8]) -> io::Result<()> {
    match &cli.out {
        Some(path) => File::create(path)?.write_all(bytes),
        None => io::stdout().lock().write_all(bytes),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (bytes, code, message) = match run(&cli) {
        Ok(bytes) => (Some(bytes), 0, None),
        Err(Failure::Usage(m)) => (None, 2, Some(m)),
        Err(Failure::Engine(m)) => (None, 1, Some(m)),
        Err(Failure::Conjecture(m)) => (Some(m.clone().into_bytes()), 3, Some("conjecture counterexample found".into())),
    };
    if let Some(bytes) = bytes {
        if let Err(e) = write_output(&cli, &bytes) {
            eprintln!("sytmaj: {e}");
            return ExitCode::from(1);
        }
    }
    if let Some(m) = message {
        eprintln!("sytmaj: {}", m.trim_end());
    }
    ExitCode::from(code)
}
