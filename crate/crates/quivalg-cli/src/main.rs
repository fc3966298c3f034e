//! Command-line front end: build algebras from presentation files or the
//! built-in catalog, compute and compare invariant reports, and verify the
//! reference tables.
//!
//! Exit codes: 0 success, 1 input error, 2 computation guard,
//! 3 verification table failure.

use clap::{Args, Parser, Subcommand};
use quivalg::algebra::FdAlgebra;
use quivalg::catalog::{self, FamilyId, ParamSet};
use quivalg::field::FieldSpec;
use quivalg::presentation::Presentation;
use quivalg::report::{
    build_report, compare_reports, AlgebraIdentity, InvariantReport, MaybeComputed, ReportConfig,
};
use quivalg::rewrite::{complete_rewriting, CompletionError};
use quivalg::verify::{verify_paper_tables, CharSelector};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "quivalg",
    about = "Exact invariants of finite-dimensional quiver algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a presentation file, complete it, and print a basis summary.
    Build {
        file: String,
        #[command(flatten)]
        opts: ComputeOpts,
        /// Emit the constructed algebra as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Compute the invariant report of one algebra.
    Invariants {
        /// Presentation file; omit when using --family.
        file: Option<String>,
        #[command(flatten)]
        family: FamilyOpts,
        #[command(flatten)]
        opts: ComputeOpts,
        #[arg(long)]
        json: bool,
    },
    /// Compare the invariant reports of two algebras. Inputs are
    /// presentation files or inline specs `family:NAME[,key=value,...]`.
    Compare {
        a: String,
        b: String,
        #[command(flatten)]
        field: FieldOpts,
        #[command(flatten)]
        opts: ComputeOpts,
        #[arg(long)]
        json: bool,
    },
    /// Catalog operations.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Check the reference invariant tables and print one row per
    /// expectation.
    VerifyPaper {
        /// 0, 2, 3, or all.
        #[arg(long = "char", default_value = "all")]
        characteristic: String,
        #[command(flatten)]
        opts: ComputeOpts,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the built-in families with constraints and expected flags.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Write the presentation file of a catalog algebra to stdout.
    Emit {
        family: String,
        #[command(flatten)]
        family_opts: FamilyParams,
        #[command(flatten)]
        field: FieldOpts,
    },
}

#[derive(Args, Clone)]
struct FamilyOpts {
    /// Catalog family name (see `catalog list`).
    #[arg(long)]
    family: Option<String>,
    #[command(flatten)]
    params: FamilyParams,
    #[command(flatten)]
    field: FieldOpts,
}

#[derive(Args, Clone)]
struct FamilyParams {
    /// Family parameter, repeatable: n=2, p=1, q=2, lambda=2, lambda=t+1.
    #[arg(long = "param")]
    params: Vec<String>,
}

#[derive(Args, Clone)]
struct FieldOpts {
    /// Field characteristic; 0 means the rationals.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    /// Extension degree k for GF(p^k).
    #[arg(long, default_value_t = 1)]
    degree: u32,
    /// Comma-separated modulus coefficients c0,...,ck (required when
    /// degree > 1).
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Args, Clone)]
struct ComputeOpts {
    /// Kulshammer tower depth.
    #[arg(long = "n-max", default_value_t = 3)]
    n_max: u32,
    /// Largest Hochschild degree (at most 3).
    #[arg(long = "hh-max", default_value_t = 2)]
    hh_max: usize,
    /// Seed for all randomized searches.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sample budget for form searches.
    #[arg(long, default_value_t = 64)]
    samples: u32,
    /// Completion degree bound.
    #[arg(long = "degree-bound", default_value_t = 30)]
    degree_bound: usize,
}

impl ComputeOpts {
    fn config(&self) -> ReportConfig {
        ReportConfig {
            n_max: self.n_max,
            hh_max: self.hh_max,
            seed: self.seed,
            samples: self.samples,
            degree_bound: self.degree_bound,
            ..ReportConfig::default()
        }
    }
}

enum CliError {
    Input(String),
    Guard(String),
}

impl CliError {
    fn report(self) -> ExitCode {
        match self {
            CliError::Input(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            CliError::Guard(msg) => {
                eprintln!("computation guard: {msg}");
                ExitCode::from(2)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build { file, opts, json } => cmd_build(&file, &opts, json),
        Command::Invariants {
            file,
            family,
            opts,
            json,
        } => cmd_invariants(file.as_deref(), &family, &opts, json),
        Command::Compare {
            a,
            b,
            field,
            opts,
            json,
        } => cmd_compare(&a, &b, &field, &opts, json),
        Command::Catalog(CatalogCommand::List { json }) => cmd_catalog_list(json),
        Command::Catalog(CatalogCommand::Emit {
            family,
            family_opts,
            field,
        }) => cmd_catalog_emit(&family, &family_opts, &field),
        Command::VerifyPaper {
            characteristic,
            opts,
            json,
        } => {
            return match cmd_verify(&characteristic, &opts, json) {
                Ok(true) => ExitCode::SUCCESS,
                Ok(false) => ExitCode::from(3),
                Err(e) => e.report(),
            };
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => e.report(),
    }
}

fn parse_field(opts: &FieldOpts) -> Result<FieldSpec, CliError> {
    match (opts.characteristic, opts.degree) {
        (0, 1) => Ok(FieldSpec::rationals()),
        (0, d) => Err(CliError::Input(format!(
            "degree {d} is invalid for characteristic 0"
        ))),
        (p, 1) => FieldSpec::prime_field(p).map_err(|e| CliError::Input(e.to_string())),
        (p, k) => {
            let text = opts.modulus.as_ref().ok_or_else(|| {
                CliError::Input(format!("GF({p}^{k}) requires --modulus c0,...,ck"))
            })?;
            let coeffs: Result<Vec<i64>, _> = text.split(',').map(|c| c.parse()).collect();
            let coeffs =
                coeffs.map_err(|_| CliError::Input(format!("bad modulus list `{text}`")))?;
            if coeffs.len() != k as usize + 1 {
                return Err(CliError::Input(format!(
                    "modulus needs {} coefficients for degree {k}",
                    k + 1
                )));
            }
            FieldSpec::extension(p, &coeffs).map_err(|e| CliError::Input(e.to_string()))
        }
    }
}

fn parse_params(raw: &[String], field: &FieldSpec) -> Result<ParamSet, CliError> {
    let mut params = ParamSet::default();
    for item in raw {
        if item.is_empty() {
            continue;
        }
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Input(format!("bad --param `{item}`, expected key=value")))?;
        match key {
            "n" => {
                params.n = Some(value.parse().map_err(|_| {
                    CliError::Input(format!("bad integer `{value}` for parameter n"))
                })?)
            }
            "p" => {
                params.p = Some(value.parse().map_err(|_| {
                    CliError::Input(format!("bad integer `{value}` for parameter p"))
                })?)
            }
            "q" => {
                params.q = Some(value.parse().map_err(|_| {
                    CliError::Input(format!("bad integer `{value}` for parameter q"))
                })?)
            }
            "lambda" => {
                params.lambda = Some(
                    field
                        .parse_scalar(value)
                        .map_err(|e| CliError::Input(format!("bad lambda `{value}`: {e}")))?,
                )
            }
            other => return Err(CliError::Input(format!("unknown parameter `{other}`"))),
        }
    }
    Ok(params)
}

fn build_algebra(presentation: &Presentation, degree_bound: usize) -> Result<FdAlgebra, CliError> {
    let rs = complete_rewriting(presentation, degree_bound).map_err(|e| match e {
        CompletionError::NotBounded { .. } | CompletionError::DimensionGuard { .. } => {
            CliError::Guard(e.to_string())
        }
        other => CliError::Input(other.to_string()),
    })?;
    FdAlgebra::construct(rs).map_err(|e| CliError::Guard(e.to_string()))
}

/// Resolve an input: a presentation file path or `family:NAME[,k=v,...]`.
fn resolve_input(
    input: &str,
    field_opts: &FieldOpts,
) -> Result<(Presentation, AlgebraIdentity), CliError> {
    if let Some(spec) = input.strip_prefix("family:") {
        let mut parts = spec.split(',');
        let name = parts.next().unwrap_or_default();
        let id = FamilyId::parse(name).map_err(|e| CliError::Input(e.to_string()))?;
        let field = parse_field(field_opts)?;
        let raw: Vec<String> = parts.map(|s| s.to_string()).collect();
        let params = parse_params(&raw, &field)?;
        let presentation = catalog::instantiate(id, &params, &field)
            .map_err(|e| CliError::Input(e.to_string()))?;
        let identity = AlgebraIdentity::Family {
            family: id.name().into(),
            params: raw
                .iter()
                .filter_map(|s| s.split_once('=').map(|(k, v)| (k.into(), v.into())))
                .collect(),
        };
        Ok((presentation, identity))
    } else {
        let text = std::fs::read_to_string(input)
            .map_err(|e| CliError::Input(format!("cannot read `{input}`: {e}")))?;
        let presentation =
            Presentation::parse(&text).map_err(|e| CliError::Input(e.to_string()))?;
        Ok((presentation, AlgebraIdentity::from_file_text(&text)))
    }
}

fn cmd_build(file: &str, opts: &ComputeOpts, json: bool) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Input(format!("cannot read `{file}`: {e}")))?;
    let presentation = Presentation::parse(&text).map_err(|e| CliError::Input(e.to_string()))?;
    let algebra = build_algebra(&presentation, opts.degree_bound)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&algebra.to_json()).unwrap()
        );
        return Ok(());
    }
    println!("dimension: {}", algebra.dim());
    println!("vertices:  {}", algebra.quiver.vertices.join(" "));
    println!(
        "arrows:    {}",
        algebra
            .quiver
            .arrows
            .iter()
            .map(|a| format!(
                "{}:{}->{}",
                a.name, algebra.quiver.vertices[a.source], algebra.quiver.vertices[a.target]
            ))
            .collect::<Vec<_>>()
            .join(" ")
    );
    let words: Vec<String> = algebra
        .basis
        .iter()
        .map(|b| {
            if b.word.is_empty() {
                format!("e({})", algebra.quiver.vertices[b.source])
            } else {
                algebra.quiver.word_name(&b.word)
            }
        })
        .collect();
    println!("basis:     {}", words.join(" "));
    Ok(())
}

fn cmd_invariants(
    file: Option<&str>,
    family: &FamilyOpts,
    opts: &ComputeOpts,
    json: bool,
) -> Result<(), CliError> {
    let (presentation, identity) = match (file, &family.family) {
        (Some(path), None) => resolve_input(path, &family.field)?,
        (None, Some(name)) => resolve_input(
            &format!("family:{name},{}", family.params.params.join(",")),
            &family.field,
        )?,
        (Some(_), Some(_)) => {
            return Err(CliError::Input(
                "give either a file or --family, not both".into(),
            ))
        }
        (None, None) => return Err(CliError::Input("need a file or --family".into())),
    };
    let algebra = build_algebra(&presentation, opts.degree_bound)?;
    let report = build_report(&algebra, identity, &opts.config())
        .map_err(|e| CliError::Guard(e.to_string()))?;
    if json {
        println!("{}", serde_json::to_string(&report).unwrap());
    } else {
        print_report(&report);
    }
    Ok(())
}

fn print_report(r: &InvariantReport) {
    println!("{:32} {}", "algebra", r.algebra.label());
    println!(
        "{:32} char {} degree {}",
        "field", r.field.characteristic, r.field.degree
    );
    println!("{:32} {}", "dimension", r.dimension);
    let rows: Vec<String> = r
        .cartan
        .matrix
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            format!("[{}]", cells.join(" "))
        })
        .collect();
    println!("{:32} {}", "cartan.matrix", rows.join(" "));
    println!("{:32} {}", "cartan.det", r.cartan.det);
    println!(
        "{:32} {}",
        "cartan.divisors",
        r.cartan
            .divisors
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    println!("{:32} {}", "dim_commutator", r.dim_commutator);
    println!("{:32} {}", "dim_center", r.dim_center);
    println!(
        "{:32} {}",
        "dim_center_mod_reynolds", r.dim_center_mod_reynolds
    );
    println!(
        "{:32} {}",
        "dim_center_mod_central_radical", r.dim_center_mod_central_radical
    );
    match &r.kulshammer {
        MaybeComputed::Value(v) => println!("{:32} {:?}", "kulshammer.dims", v.dims),
        MaybeComputed::Skipped { skipped } => println!("{:32} {}", "kulshammer.dims", skipped),
    }
    println!(
        "{:32} found={} confidence={:?}",
        "symmetrizing_form", r.symmetrizing_form.found, r.symmetrizing_form.confidence
    );
    match &r.orthogonal_quotient {
        MaybeComputed::Value(v) => println!("{:32} {:?}", "orthogonal_quotient.dims", v.dims),
        MaybeComputed::Skipped { skipped } => {
            println!("{:32} {}", "orthogonal_quotient.dims", skipped)
        }
    }
    match &r.hh {
        MaybeComputed::Value(v) => println!("{:32} {:?}", "hh.dims", v.dims),
        MaybeComputed::Skipped { skipped } => println!("{:32} {}", "hh.dims", skipped),
    }
    println!(
        "{:32} local={} commutative={} special_biserial={} nakayama={} weakly_symmetric_socle={} frobenius={}",
        "flags",
        r.flags.local,
        r.flags.commutative,
        r.flags.special_biserial,
        r.flags.nakayama,
        r.flags.weakly_symmetric_socle,
        r.flags.frobenius_certificate
    );
    println!("{:32} {}", "loewy_length", r.loewy_length);
}

fn cmd_compare(
    a: &str,
    b: &str,
    field: &FieldOpts,
    opts: &ComputeOpts,
    json: bool,
) -> Result<(), CliError> {
    let config = opts.config();
    let (pa, ia) = resolve_input(a, field)?;
    let (pb, ib) = resolve_input(b, field)?;
    let alg_a = build_algebra(&pa, opts.degree_bound)?;
    let alg_b = build_algebra(&pb, opts.degree_bound)?;
    let ra = build_report(&alg_a, ia, &config).map_err(|e| CliError::Guard(e.to_string()))?;
    let rb = build_report(&alg_b, ib, &config).map_err(|e| CliError::Guard(e.to_string()))?;
    let cmp = compare_reports(&ra, &rb);
    if json {
        println!("{}", serde_json::to_string(&cmp).unwrap());
        return Ok(());
    }
    println!(
        "{:32} {:>20} {:>20}  verdict",
        "invariant",
        ra.algebra.label(),
        rb.algebra.label()
    );
    for v in &cmp.verdicts {
        println!(
            "{:32} {:>20} {:>20}  {:?}{}",
            v.invariant,
            v.left,
            v.right,
            v.verdict,
            if v.morita_type { " [morita]" } else { "" }
        );
    }
    println!("overall: {:?}", cmp.overall);
    if !cmp.distinguishing.is_empty() {
        println!("distinguished by: {}", cmp.distinguishing.join(", "));
    } else {
        println!("note: these invariants do not separate the algebras; no equivalence is claimed");
    }
    Ok(())
}

fn cmd_catalog_list(json: bool) -> Result<(), CliError> {
    let families = catalog::list_families();
    if json {
        println!("{}", serde_json::to_string(&families).unwrap());
        return Ok(());
    }
    println!(
        "{:12} {:20} {:34} {:20} {:8} {}",
        "name", "label", "constraint", "symmetric", "biserial", "context"
    );
    for e in families {
        println!(
            "{:12} {:20} {:34} {:20} {:8} {}",
            e.id.name(),
            e.label,
            e.constraint,
            format!("{:?}", e.symmetric),
            e.special_biserial
                .map_or("-".to_string(), |b| b.to_string()),
            e.citation
        );
    }
    Ok(())
}

fn cmd_catalog_emit(
    family: &str,
    params: &FamilyParams,
    field_opts: &FieldOpts,
) -> Result<(), CliError> {
    let id = FamilyId::parse(family).map_err(|e| CliError::Input(e.to_string()))?;
    let field = parse_field(field_opts)?;
    let params = parse_params(&params.params, &field)?;
    let presentation =
        catalog::instantiate(id, &params, &field).map_err(|e| CliError::Input(e.to_string()))?;
    print!("{}", presentation.emit());
    Ok(())
}

fn cmd_verify(selector: &str, opts: &ComputeOpts, json: bool) -> Result<bool, CliError> {
    let selector = CharSelector::parse(selector)
        .ok_or_else(|| CliError::Input(format!("bad --char `{selector}`, expected 0|2|3|all")))?;
    let table = verify_paper_tables(selector, &opts.config())
        .map_err(|e| CliError::Guard(e.to_string()))?;
    if json {
        println!("{}", serde_json::to_string(&table).unwrap());
    } else {
        for row in &table.rows {
            println!(
                "{} {:18} {:44} {:18} expected {:>3}  got {}",
                if row.pass { "PASS" } else { "FAIL" },
                row.section,
                row.algebra,
                row.invariant,
                row.expected,
                row.got
            );
        }
        if table.rows.iter().any(|r| r.section == "dim-z-mod-r") {
            match table.center_quotient_candidate {
                Some(c) => println!("center-quotient candidate matching the dim row: {c}"),
                None => {
                    println!("center-quotient candidate: no single candidate matches every column")
                }
            }
        }
        println!(
            "{}",
            if table.all_pass() {
                "all rows pass"
            } else {
                "some rows FAIL"
            }
        );
    }
    Ok(table.all_pass())
}
