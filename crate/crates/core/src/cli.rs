//! Command-line front end. Every subcommand builds one serializable output
//! value; `--format json` prints it with serde, `--format table` renders the
//! same value as aligned text.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diophantine::{
    case_certificates, enumerate_norm_solutions, fundamental_unit, norm_orbit_generators,
    pell_fundamental, prop46_bound, scan_q_squares, CaseCertificate, CaseStatus, NormOrbitSet,
    PellSolution, Prop46Report, QuadraticInteger, ScanReport,
};
use crate::error::{Error, Result};
use crate::exact::{self, fmt_rational, Int, Rational};
use crate::grassmann::{parse_pair, Field, GrassContext, IndexSet, Partition, Shape};
use crate::lefschetz::{
    definiteness_sign, pairing_matrix, primitive_generators, v2_norm_closed_form,
};
use crate::maps::{
    analyze_map, dimension_matches, MapAnalysisReport, MapProblem, Verdict, DEFAULT_LAMBDA_MAX,
};
use crate::poly::PolynomialTerm;
use crate::schubert::{
    evaluate_special, giambelli_expand, grassmannian_degree, multiply, schubert_degree_formula,
    schubert_degree_pieri, CohElement, CohElementJson,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "grassdeg",
    version,
    about = "Exact Schubert calculus and map-degree obstructions for Grassmannians"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Ground field: C (complex) or H (quaternionic, degrees doubled).
    #[arg(long, global = true, default_value = "C", value_parser = parse_field)]
    pub field: Field,
    /// Worker threads for scans.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Betti numbers, rank and degree of G(n,k), optionally with the Schubert bases.
    Ring(RingArgs),
    /// Degree of a Schubert variety by the product formula and by Pieri.
    Degree(DegreeArgs),
    /// Product of Schubert classes given as partitions.
    Multiply(MultiplyArgs),
    /// Giambelli determinant of a Schubert class in the special classes.
    Giambelli(PartitionArgs),
    /// Matrix of the form (a,b) = <a b w^(N-2r), mu> on the Schubert basis of grade r.
    Pairing(GradeArgs),
    /// Gram-Schmidt primitive classes v_r and their norms.
    Primitive(CtxArgs),
    /// (v_2, v_2) by Gram-Schmidt and by the closed form.
    V2norm(CtxArgs),
    /// Degree obstructions for maps G(n,k) -> G(m,l).
    Analyze(AnalyzeArgs),
    /// Dimension-matched pairs (n, m) with k(n-k) = l(m-l) and their verdicts.
    Matches(MatchesArgs),
    /// Fundamental solution of y^2 - d x^2 = 1 and the fundamental unit.
    Pell(PellArgs),
    /// Orbit representatives and positive solutions of x^2 - d y^2 = target.
    NormOrbits(NormOrbitsArgs),
    /// Lower bound on 2c for Q(2,k,2c,kc) to be a square, k = 3 or 7.
    Prop46(Prop46Args),
    /// Bounded scan for y^2 = Q(a,b,x,z) with a z = b x.
    ScanQ(ScanArgs),
}

#[derive(Args, Debug)]
pub struct CtxArgs {
    /// Grassmannian as n,k.
    #[arg(long, value_parser = parse_shape)]
    pub ctx: (u32, u32),
}

#[derive(Args, Debug)]
pub struct RingArgs {
    #[arg(long, value_parser = parse_shape)]
    pub ctx: (u32, u32),
    /// List the Schubert basis of every grade.
    #[arg(long)]
    pub basis: bool,
}

#[derive(Args, Debug)]
pub struct DegreeArgs {
    #[arg(long, value_parser = parse_shape)]
    pub ctx: (u32, u32),
    /// Index set such as "[3,4]".
    #[arg(long, value_parser = parse_index, conflicts_with = "partition", required_unless_present = "partition")]
    pub index: Option<IndexArg>,
    /// Partition such as 2,1.
    #[arg(long, value_parser = parse_partition)]
    pub partition: Option<Partition>,
}

#[derive(Args, Debug)]
pub struct MultiplyArgs {
    #[arg(long, value_parser = parse_shape)]
    pub ctx: (u32, u32),
    /// Factors as partitions, e.g. 2 1,1.
    #[arg(required = true, value_parser = parse_partition)]
    pub factors: Vec<Partition>,
}

#[derive(Args, Debug)]
pub struct PartitionArgs {
    #[arg(long, value_parser = parse_shape)]
    pub ctx: (u32, u32),
    #[arg(long, value_parser = parse_partition)]
    pub partition: Partition,
}

#[derive(Args, Debug)]
pub struct GradeArgs {
    #[arg(long, value_parser = parse_shape)]
    pub ctx: (u32, u32),
    /// Ring grade r (cohomological degree 2r over C).
    #[arg(long)]
    pub grade: u32,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Source as n,k.
    #[arg(long, value_parser = parse_shape)]
    pub source: (u32, u32),
    /// Target as m,l.
    #[arg(long, value_parser = parse_shape)]
    pub target: (u32, u32),
    /// Bound on |lambda| for the candidate degrees.
    #[arg(long, default_value_t = DEFAULT_LAMBDA_MAX)]
    pub lambda_max: u32,
}

#[derive(Args, Debug)]
pub struct MatchesArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub l: u32,
    #[arg(long)]
    pub n_max: u32,
}

#[derive(Args, Debug)]
pub struct PellArgs {
    #[arg(long)]
    pub d: u64,
}

#[derive(Args, Debug)]
pub struct NormOrbitsArgs {
    #[arg(long)]
    pub d: u64,
    #[arg(long, allow_negative_numbers = true)]
    pub target: i64,
    /// Number of solutions with both coordinates > 1 to list.
    #[arg(long, default_value_t = 6)]
    pub count: usize,
}

#[derive(Args, Debug)]
pub struct Prop46Args {
    /// 3 or 7.
    #[arg(long)]
    pub k: u32,
    /// Number of norm solutions to test.
    #[arg(long)]
    pub probe: usize,
    /// Also print the modular certificates for the square-free class pairs.
    #[arg(long)]
    pub cases: bool,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
    #[arg(long)]
    pub xmax: u64,
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_shape(s: &str) -> std::result::Result<(u32, u32), String> {
    parse_pair(s).map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Raw index-set entries, validated against `n` once the context is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexArg(pub Vec<u32>);

fn parse_index(s: &str) -> std::result::Result<IndexArg, String> {
    let t = s.trim();
    let t = t
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(t);
    t.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid index set {s:?}"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(IndexArg)
}

// ---------- output values ----------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradeRow {
    pub grade: u32,
    pub cohomological_degree: u32,
    pub betti: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Partition>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingOutput {
    pub shape: Shape,
    pub field: Field,
    pub dimension: u32,
    #[serde(with = "exact::int_str")]
    pub rank: Int,
    #[serde(with = "exact::int_str")]
    pub degree: Int,
    pub grades: Vec<GradeRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeOutput {
    pub shape: Shape,
    pub field: Field,
    pub index: IndexSet,
    pub partition: Partition,
    pub dimension: u32,
    #[serde(with = "exact::int_str")]
    pub formula: Int,
    #[serde(with = "exact::int_str")]
    pub pieri: Int,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductOutput {
    pub shape: Shape,
    pub factors: Vec<Partition>,
    pub product: CohElementJson,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GiambelliOutput {
    pub shape: Shape,
    pub partition: Partition,
    pub determinant: Vec<PolynomialTerm>,
    pub determinant_text: String,
    pub in_ring: Vec<PolynomialTerm>,
    pub in_ring_text: String,
    pub reproduces: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingOutput {
    pub shape: Shape,
    pub grade: u32,
    pub cohomological_degree: u32,
    pub basis: Vec<Partition>,
    #[serde(with = "exact::rational_matrix")]
    pub matrix: Vec<Vec<Rational>>,
    #[serde(with = "exact::rational")]
    pub determinant: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveVectorOutput {
    pub label: String,
    pub element: CohElementJson,
    pub text: String,
    #[serde(with = "exact::rational")]
    pub norm: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveLevelOutput {
    pub grade: u32,
    pub cohomological_degree: u32,
    pub dimension: usize,
    /// Sign `s` with `s·(·,·)` positive definite on the primitive subspace.
    pub sign: i8,
    pub vectors: Vec<PrimitiveVectorOutput>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveOutput {
    pub shape: Shape,
    pub levels: Vec<PrimitiveLevelOutput>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct V2NormOutput {
    pub shape: Shape,
    #[serde(with = "exact::rational")]
    pub gram_schmidt: Rational,
    #[serde(with = "exact::rational")]
    pub closed_form: Rational,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchRow {
    pub n: u32,
    pub m: u32,
    pub dimension: u32,
    #[serde(with = "exact::rational")]
    pub degree_ratio: Rational,
    #[serde(with = "exact::opt_int_str")]
    pub q: Option<Int>,
    pub q_is_square: Option<bool>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchesOutput {
    pub k: u32,
    pub l: u32,
    pub n_max: u32,
    pub field: Field,
    pub pairs: Vec<MatchRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellOutput {
    pub solution: PellSolution,
    pub unit: Option<QuadraticInteger>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormSolution {
    #[serde(with = "exact::int_str")]
    pub xi: Int,
    #[serde(with = "exact::int_str")]
    pub eta: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormOrbitsOutput {
    pub orbits: NormOrbitSet,
    pub solutions: Vec<NormSolution>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop46Output {
    pub report: Prop46Report,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cases: Option<Vec<CaseCertificate>>,
}

// ---------- entry points ----------

/// Runs the CLI on `argv` (including the program name), writing results to
/// `out` and diagnostics to `err`. Exit codes: 0 success, 1 domain error,
/// 2 usage error.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(_) => 1,
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse(_) => 2,
                _ => 1,
            }
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

fn ctx_of(pair: (u32, u32), field: Field) -> Result<GrassContext> {
    GrassContext::with_field(pair.0, pair.1, field)
}

fn emit<T: Serialize>(
    format: Format,
    value: &T,
    table: impl FnOnce(&T) -> String,
) -> Result<String> {
    match format {
        Format::Json => serde_json::to_string_pretty(value)
            .map(|s| s + "\n")
            .map_err(|e| Error::Internal(format!("json: {e}"))),
        Format::Table => Ok(table(value)),
    }
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs <= 1 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

pub fn execute(cli: &Cli) -> Result<String> {
    let field = cli.field;
    let format = cli.format;
    match &cli.command {
        Command::Ring(a) => emit(format, &ring(a, field)?, table_ring),
        Command::Degree(a) => {
            let d = degree(a, field)?;
            if !d.agree {
                return Err(Error::Internal(format!(
                    "formula {} and Pieri {} disagree for {}",
                    d.formula, d.pieri, d.index
                )));
            }
            emit(format, &d, table_degree)
        }
        Command::Multiply(a) => emit(format, &product(a, field)?, table_product),
        Command::Giambelli(a) => emit(format, &giambelli(a, field)?, table_giambelli),
        Command::Pairing(a) => emit(format, &pairing(a, field)?, table_pairing),
        Command::Primitive(a) => emit(format, &primitive(a, field)?, table_primitive),
        Command::V2norm(a) => emit(format, &v2norm(a, field)?, table_v2norm),
        Command::Analyze(a) => {
            let problem = MapProblem::new(a.source, a.target, field)?;
            emit(
                format,
                &analyze_map(&problem, a.lambda_max)?,
                table_analysis,
            )
        }
        Command::Matches(a) => emit(format, &matches(a, field, cli.jobs)?, table_matches),
        Command::Pell(a) => {
            let out = PellOutput {
                solution: pell_fundamental(a.d)?,
                unit: fundamental_unit(a.d).ok(),
            };
            emit(format, &out, table_pell)
        }
        Command::NormOrbits(a) => {
            let target = Int::from(a.target);
            let out = NormOrbitsOutput {
                orbits: norm_orbit_generators(a.d, &target)?,
                solutions: enumerate_norm_solutions(a.d, &target, a.count)?
                    .into_iter()
                    .map(|(xi, eta)| NormSolution { xi, eta })
                    .collect(),
            };
            emit(format, &out, table_norm_orbits)
        }
        Command::Prop46(a) => {
            let out = Prop46Output {
                report: prop46_bound(a.k, a.probe)?,
                cases: if a.cases {
                    Some(case_certificates(a.k)?)
                } else {
                    None
                },
            };
            emit(format, &out, table_prop46)
        }
        Command::ScanQ(a) => emit(
            format,
            &scan_q_squares(a.a, a.b, a.xmax, cli.jobs)?,
            table_scan,
        ),
    }
}

fn ring(a: &RingArgs, field: Field) -> Result<RingOutput> {
    let ctx = ctx_of(a.ctx, field)?;
    let grades = (0..=ctx.dim())
        .map(|r| {
            Ok(GradeRow {
                grade: r,
                cohomological_degree: ctx.cohomological_degree(r),
                betti: ctx.betti(r as i64),
                basis: if a.basis {
                    Some(ctx.enumerate_basis(r)?)
                } else {
                    None
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RingOutput {
        shape: ctx.shape(),
        field,
        dimension: ctx.dim(),
        rank: ctx.rank(),
        degree: grassmannian_degree(&ctx),
        grades,
    })
}

fn degree(a: &DegreeArgs, field: Field) -> Result<DegreeOutput> {
    let ctx = ctx_of(a.ctx, field)?;
    let (index, partition) = match (&a.index, &a.partition) {
        (Some(i), _) => {
            let index = IndexSet::new(i.0.clone(), ctx.n())?;
            let p = ctx.index_to_partition(&index)?;
            (index, p)
        }
        (None, Some(p)) => (ctx.partition_to_index(p)?, p.clone()),
        (None, None) => return Err(Error::Parse("give --index or --partition".into())),
    };
    let formula = schubert_degree_formula(&ctx, &index)?;
    let pieri = schubert_degree_pieri(&ctx, &index)?;
    Ok(DegreeOutput {
        shape: ctx.shape(),
        field,
        dimension: index.dimension(),
        index,
        partition,
        agree: formula == pieri,
        formula,
        pieri,
    })
}

fn product(a: &MultiplyArgs, field: Field) -> Result<ProductOutput> {
    let ctx = ctx_of(a.ctx, field)?;
    let mut acc = CohElement::one(&ctx);
    for p in &a.factors {
        acc = multiply(&ctx, &acc, &CohElement::schubert(&ctx, p)?)?;
    }
    Ok(ProductOutput {
        shape: ctx.shape(),
        factors: a.factors.clone(),
        text: acc.to_string(),
        product: acc.to_json(),
    })
}

fn giambelli(a: &PartitionArgs, field: Field) -> Result<GiambelliOutput> {
    let ctx = ctx_of(a.ctx, field)?;
    let g = giambelli_expand(&ctx, &a.partition)?;
    let reproduced = evaluate_special(&ctx, &g.in_ring, &CohElement::one(&ctx));
    Ok(GiambelliOutput {
        shape: ctx.shape(),
        partition: g.partition.clone(),
        determinant: g.determinant.to_terms(),
        determinant_text: g.determinant.display_with("c̄"),
        in_ring: g.in_ring.to_terms(),
        in_ring_text: g.in_ring.display_with("c̄"),
        reproduces: reproduced == CohElement::schubert(&ctx, &a.partition)?,
    })
}

fn pairing(a: &GradeArgs, field: Field) -> Result<PairingOutput> {
    let ctx = ctx_of(a.ctx, field)?;
    let pm = pairing_matrix(&ctx, a.grade)?;
    Ok(PairingOutput {
        shape: ctx.shape(),
        grade: a.grade,
        cohomological_degree: ctx.cohomological_degree(a.grade),
        determinant: pm.matrix.determinant(),
        matrix: pm.matrix.to_rows(),
        basis: pm.basis,
    })
}

fn primitive(a: &CtxArgs, field: Field) -> Result<PrimitiveOutput> {
    let ctx = ctx_of(a.ctx, field)?;
    let basis = primitive_generators(&ctx)?;
    let levels = basis
        .levels
        .iter()
        .map(|level| {
            let cert = definiteness_sign(&ctx, level.grade, 0)?;
            Ok(PrimitiveLevelOutput {
                grade: level.grade,
                cohomological_degree: ctx.cohomological_degree(level.grade),
                dimension: level.primitive.len(),
                sign: cert.sign,
                vectors: level
                    .primitive
                    .iter()
                    .map(|v| PrimitiveVectorOutput {
                        label: v.label.display_with("c̄"),
                        element: v.element.to_json(),
                        text: v.element.to_string(),
                        norm: v.norm.clone(),
                    })
                    .collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PrimitiveOutput {
        shape: ctx.shape(),
        levels,
    })
}

fn v2norm(a: &CtxArgs, field: Field) -> Result<V2NormOutput> {
    let ctx = ctx_of(a.ctx, field)?;
    let closed_form = v2_norm_closed_form(ctx.n(), ctx.k())?;
    if ctx.k() < 2 {
        return Err(Error::Domain(format!("{} has no v_2 (k < 2)", ctx.shape())));
    }
    let basis = crate::lefschetz::primitive_generators_up_to(&ctx, 2)?;
    let gram_schmidt = basis
        .generator_norm(2)
        .cloned()
        .ok_or_else(|| Error::Internal("missing v_2".into()))?;
    Ok(V2NormOutput {
        shape: ctx.shape(),
        agree: gram_schmidt == closed_form,
        gram_schmidt,
        closed_form,
    })
}

fn matches(a: &MatchesArgs, field: Field, jobs: usize) -> Result<MatchesOutput> {
    let pairs = dimension_matches(a.k, a.l, a.n_max);
    let row = |&(n, m): &(u32, u32)| -> Result<MatchRow> {
        let problem = MapProblem::new((n, a.k), (m, a.l), field)?;
        let report = analyze_map(&problem, 0)?;
        Ok(MatchRow {
            n,
            m,
            dimension: problem.dim(),
            degree_ratio: report.degree_ratio,
            q: report.q.as_ref().map(|q| q.value.clone()),
            q_is_square: report.q.as_ref().map(|q| q.is_square),
            verdict: report.verdict,
        })
    };
    let rows = with_jobs(jobs, || {
        pairs.par_iter().map(row).collect::<Result<Vec<_>>>()
    })??;
    Ok(MatchesOutput {
        k: a.k,
        l: a.l,
        n_max: a.n_max,
        field,
        pairs: rows,
    })
}

// ---------- tables ----------

/// Display width, ignoring combining marks such as the bar in `c̄`.
fn text_width(s: &str) -> usize {
    s.chars()
        .filter(|c| !('\u{0300}'..='\u{036f}').contains(c))
        .count()
}

/// Left-aligned columns separated by two spaces.
fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| text_width(h)).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            width[i] = width[i].max(text_width(c));
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(c);
                s.push_str(&" ".repeat(width[i] - text_width(c) + 2));
            }
        }
        let mut s = s.trim_end().to_string();
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn table_ring(o: &RingOutput) -> String {
    let mut s = format!(
        "{} over {}: dimension {}, rank {}, degree {}\n",
        o.shape, o.field, o.dimension, o.rank, o.degree
    );
    let with_basis = o.grades.iter().any(|g| g.basis.is_some());
    let rows: Vec<Vec<String>> = o
        .grades
        .iter()
        .map(|g| {
            let mut r = vec![
                g.grade.to_string(),
                g.cohomological_degree.to_string(),
                g.betti.to_string(),
            ];
            if let Some(b) = &g.basis {
                r.push(list(b));
            }
            r
        })
        .collect();
    if with_basis {
        s += &columns(&["grade", "H^", "betti", "basis"], &rows);
    } else {
        s += &columns(&["grade", "H^", "betti"], &rows);
    }
    s
}

fn table_degree(o: &DegreeOutput) -> String {
    columns(
        &["field", "value"],
        &[
            vec!["ctx".into(), o.shape.to_string()],
            vec!["index".into(), o.index.to_string()],
            vec!["partition".into(), o.partition.to_string()],
            vec!["dimension".into(), o.dimension.to_string()],
            vec!["formula".into(), o.formula.to_string()],
            vec!["pieri".into(), o.pieri.to_string()],
            vec!["agree".into(), yes_no(o.agree)],
        ],
    )
}

fn table_product(o: &ProductOutput) -> String {
    let lhs = o
        .factors
        .iter()
        .map(|p| format!("σ{p}"))
        .collect::<Vec<_>>()
        .join(" · ");
    format!("{}: {lhs} = {}\n", o.shape, o.text)
}

fn table_giambelli(o: &GiambelliOutput) -> String {
    columns(
        &["field", "value"],
        &[
            vec!["ctx".into(), o.shape.to_string()],
            vec!["partition".into(), o.partition.to_string()],
            vec!["determinant".into(), o.determinant_text.clone()],
            vec!["in ring".into(), o.in_ring_text.clone()],
            vec!["reproduces".into(), yes_no(o.reproduces)],
        ],
    )
}

fn table_pairing(o: &PairingOutput) -> String {
    let mut header = vec![String::new()];
    header.extend(o.basis.iter().map(|p| p.to_string()));
    let rows: Vec<Vec<String>> = o
        .basis
        .iter()
        .zip(&o.matrix)
        .map(|(p, row)| {
            let mut r = vec![p.to_string()];
            r.extend(row.iter().map(fmt_rational));
            r
        })
        .collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    format!(
        "{} grade {} (H^{}), determinant {}\n{}",
        o.shape,
        o.grade,
        o.cohomological_degree,
        fmt_rational(&o.determinant),
        columns(&header, &rows)
    )
}

fn table_primitive(o: &PrimitiveOutput) -> String {
    let rows: Vec<Vec<String>> = o
        .levels
        .iter()
        .flat_map(|l| {
            l.vectors.iter().map(move |v| {
                vec![
                    l.grade.to_string(),
                    l.cohomological_degree.to_string(),
                    l.dimension.to_string(),
                    format!("{:+}", l.sign),
                    v.label.clone(),
                    fmt_rational(&v.norm),
                    v.text.clone(),
                ]
            })
        })
        .collect();
    format!(
        "{}\n{}",
        o.shape,
        columns(
            &["grade", "H^", "dim", "sign", "from", "norm", "class"],
            &rows
        )
    )
}

fn table_v2norm(o: &V2NormOutput) -> String {
    columns(
        &["field", "value"],
        &[
            vec!["ctx".into(), o.shape.to_string()],
            vec!["gram-schmidt".into(), fmt_rational(&o.gram_schmidt)],
            vec!["closed form".into(), fmt_rational(&o.closed_form)],
            vec!["agree".into(), yes_no(o.agree)],
        ],
    )
}

fn table_analysis(r: &MapAnalysisReport) -> String {
    let i = &r.inputs;
    let mut s = format!(
        "map {} -> {} over {}, dimension {}\nverdict: {}\n",
        i.source, i.target, i.field, i.dimension, r.verdict
    );
    if !r.reasons.is_empty() {
        s += "reasons:\n";
        for reason in &r.reasons {
            s += &format!("  {reason}\n");
        }
    }
    match &r.q {
        Some(q) if q.is_square => {
            s += &format!("Q: {} = {}^2\n", q.value, q.root.as_ref().expect("root"))
        }
        Some(q) => s += &format!("Q: {} (not a square)\n", q.value),
        None => s += "Q: n/a\n",
    }
    s += &format!("degree ratio: {}\n", fmt_rational(&r.degree_ratio));
    if !r.lambda_squares.is_empty() {
        s += "lambda squares:\n";
        let rows: Vec<Vec<String>> = r
            .lambda_squares
            .iter()
            .map(|l| {
                vec![
                    l.j.to_string(),
                    l.cohomological_degree.to_string(),
                    fmt_rational(&l.value),
                    yes_no(l.is_square),
                ]
            })
            .collect();
        s += &indent(&columns(&["j", "H^", "coefficient", "square"], &rows));
    }
    s += &format!("candidate degrees (|lambda| <= {}):\n", i.lambda_max);
    let rows: Vec<Vec<String>> = r
        .candidate_degrees
        .iter()
        .map(|c| {
            vec![
                c.lambda.to_string(),
                fmt_rational(&c.value),
                yes_no(c.integral),
                yes_no(c.admissible),
            ]
        })
        .collect();
    s += &indent(&columns(
        &["lambda", "degree", "integral", "admissible"],
        &rows,
    ));
    if !r.notes.is_empty() {
        s += "notes:\n";
        for n in &r.notes {
            s += &format!("  {n}\n");
        }
    }
    s
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}

fn table_matches(o: &MatchesOutput) -> String {
    let rows: Vec<Vec<String>> = o
        .pairs
        .iter()
        .map(|p| {
            vec![
                p.n.to_string(),
                p.m.to_string(),
                p.dimension.to_string(),
                fmt_rational(&p.degree_ratio),
                p.q.as_ref().map_or("n/a".into(), Int::to_string),
                p.q_is_square.map_or("n/a".into(), yes_no),
                p.verdict.to_string(),
            ]
        })
        .collect();
    format!(
        "k={} l={} n<={} over {}\n{}",
        o.k,
        o.l,
        o.n_max,
        o.field,
        columns(&["n", "m", "N", "ratio", "Q", "square", "verdict"], &rows)
    )
}

fn table_pell(o: &PellOutput) -> String {
    let p = &o.solution;
    let mut s = format!("y^2 - {} x^2 = 1: y = {}, x = {}\n", p.d, p.y, p.x);
    match &o.unit {
        Some(u) => s += &format!("fundamental unit: {u} (norm {})\n", u.norm()),
        None => s += "fundamental unit: unsupported for this d\n",
    }
    s
}

fn table_norm_orbits(o: &NormOrbitsOutput) -> String {
    let set = &o.orbits;
    let mut s = format!(
        "x^2 - {} y^2 = {}\nunit: {}  orbit unit: {}\norbits: {}\n",
        set.d,
        set.target,
        set.unit,
        set.orbit_unit,
        set.generators
            .iter()
            .map(QuadraticInteger::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    let rows: Vec<Vec<String>> = o
        .solutions
        .iter()
        .map(|x| vec![x.xi.to_string(), x.eta.to_string()])
        .collect();
    s += &columns(&["xi", "eta"], &rows);
    s
}

fn table_prop46(o: &Prop46Output) -> String {
    let r = &o.report;
    let mut s = format!("k={}: x^2 - {} y^2 = {}\n", r.k, r.d, r.target);
    let rows: Vec<Vec<String>> = r
        .candidates
        .iter()
        .map(|c| {
            vec![
                c.xi.to_string(),
                c.eta.to_string(),
                c.value.to_string(),
                if c.satisfied { "holds" } else { "fails" }.to_string(),
            ]
        })
        .collect();
    s += &columns(&["xi", "eta", "xi^2 eta^2 + 2", "= 3v^2"], &rows);
    if let Some(n) = &r.next {
        s += &format!("next: ({}, {})\n", n.xi, n.eta);
    }
    match &r.bound {
        Some(b) => s += &format!("bound: 2c > {b}\n"),
        None => s += "bound: none\n",
    }
    if let Some(cases) = &o.cases {
        let rows: Vec<Vec<String>> = cases
            .iter()
            .map(|c| {
                let status = match &c.status {
                    CaseStatus::Obstructed { modulus } => format!("no solution mod {modulus}"),
                    CaseStatus::Survives {
                        witness: Some((a, b)),
                    } => format!("survives, e.g. ({a}, {b})"),
                    CaseStatus::Survives { witness: None } => "survives".into(),
                };
                vec![
                    c.pair.clone(),
                    format!("({},{})", c.p, c.q),
                    c.equation.clone(),
                    status,
                ]
            })
            .collect();
        s += &columns(&["pair", "classes", "equation", "status"], &rows);
    }
    s
}

fn table_scan(o: &ScanReport) -> String {
    let rows: Vec<Vec<String>> = o
        .hits
        .iter()
        .map(|h| {
            vec![
                h.x.to_string(),
                h.z.to_string(),
                h.y.to_string(),
                if h.degenerate { "degenerate" } else { "" }.to_string(),
            ]
        })
        .collect();
    format!(
        "y^2 = Q({},{},x,z), {} z = {} x, x <= {}: {} hits\n{}",
        o.a,
        o.b,
        o.a,
        o.b,
        o.x_max,
        o.hits.len(),
        columns(&["x", "z", "y", "note"], &rows)
    )
}
