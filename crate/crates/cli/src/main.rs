//! Command-line surface over the rank-bound library: Landau tables, alpha
//! sweeps, bound queries, root-system data, Smith normal form, and
//! verification sweeps.
//!
//! Exit codes: 0 on success, 1 when a verification sweep finds a violation,
//! 2 on usage or input errors. With `--json` each run emits exactly one
//! JSON document; identical argv yields byte-identical output. Big natural
//! numbers are serialized as decimal strings, never floats.

use std::collections::BTreeMap;
use std::io::Read;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use mtrank::bounds::{
    char_count_bound, commutative_rank_bound, count_distinct_characters,
    division_field_exponent, general_rank_bound, product_rank_bound, triple_noncommutative_check,
    BoundReport,
};
use mtrank::landau::{brute, LandauTable};
use mtrank::lattice::{smith_normal_form, IntMatrix, QuotientInvariants};
use mtrank::pow2;
use mtrank::rootsys::{
    cartan_matrix, fundamental_group_exponent, fundamental_group_invariants, minuscule_catalog,
    verify_u_vs_g1, weyl_orbit, SimpleType,
};
use mtrank::sharpness::{admissible_ns, run_example, ExampleId, ExampleReport};

#[derive(Parser)]
#[command(
    name = "mtrank",
    version,
    about = "Exact rank bounds for Mumford-Tate groups: Landau tables, root-system data, verification sweeps"
)]
struct Cli {
    /// Emit one JSON document on standard output instead of the listing
    #[arg(long, global = true)]
    json: bool,
    /// Suppress standard output; the exit code still reports violations
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Landau's function g(n) or the variant g1(n)
    Landau { function: LandauFn, n: u64 },
    /// Rows of alpha(n) = log2 g1(n) / sqrt(n ln n) over a range
    Alpha(AlphaArgs),
    /// Minimal-rank queries from dimension data
    Bound(BoundArgs),
    /// Division-field growth exponent n (log2 g + 2)
    Exponent { g: BigUint, n: u64 },
    /// Root-system data for one simple type label such as A4 or E7
    Rootsys {
        what: RootsysWhat,
        label: SimpleType,
    },
    /// Smith normal form of a matrix read from standard input as a JSON
    /// array of arrays of integers
    Snf,
    /// Verification sweeps; exit 1 when any checked inequality fails
    Verify {
        what: VerifyWhat,
        /// Upper end of the sweep (each sweep has a sensible default)
        #[arg(long)]
        max: Option<u64>,
    },
    /// Sharpness example families
    Examples {
        which: ExampleWhich,
        /// Largest family parameter n to run (default 12)
        #[arg(long)]
        max: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LandauFn {
    G,
    G1,
}

#[derive(Args)]
struct AlphaArgs {
    /// First n (must be at least 2)
    #[arg(long)]
    from: u64,
    /// Last n, inclusive
    #[arg(long)]
    to: u64,
    /// Include the analytic envelope column
    #[arg(long)]
    envelope: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BoundArgs {
    /// Smallest rank with 2^(rank-2) >= g
    #[arg(long, value_name = "G")]
    commutative: Option<BigUint>,
    /// Smallest rank n with 2^n g1(n) >= 4g
    #[arg(long, value_name = "G")]
    general: Option<BigUint>,
    /// General bound for a product: comma-separated factor dimensions
    #[arg(long, value_name = "G1,G2,...", value_delimiter = ',', num_args = 1..)]
    product: Option<Vec<BigUint>>,
    /// Check u * 2^(rank-1) >= dim
    #[arg(long, num_args = 3, value_names = ["RANK", "U", "DIM"])]
    triple: Option<Vec<String>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RootsysWhat {
    /// Cartan matrix
    Cartan,
    /// Elementary divisors of the Cartan matrix
    FundamentalGroup,
    /// Minuscule representation catalog
    Minuscule,
    /// Weyl orbit sizes of the minuscule highest weights
    Orbit,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyWhat {
    /// Compare the g/g1 tables against brute-force enumeration
    LandauOracle,
    /// g(n) <= g1(n) <= g(n + floor(sqrt(2n)))
    Sandwich,
    /// ln g(n) < 1.05314 sqrt(n ln n)
    Massias,
    /// lcm of fundamental-group exponents <= g1(total rank) over multisets
    #[value(name = "u-vs-g1")]
    UVsG1,
    /// Minuscule orbit sizes within char_count_bound(rank + 1)
    CharCount,
    /// All sharpness families report clean checks
    Examples,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleWhich {
    Cm,
    Spin,
    Sl2,
    Largemult,
    All,
}

#[derive(Serialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum Status {
    Ok,
    Violation,
    Error,
}

/// The single machine-readable document a run emits under `--json`.
#[derive(Serialize)]
struct OutputRecord {
    command: String,
    inputs: BTreeMap<String, Value>,
    results: BTreeMap<String, Value>,
    status: Status,
}

struct Out {
    record: OutputRecord,
    human: Vec<String>,
}

fn big(v: &BigUint) -> Value {
    Value::String(v.to_string())
}

fn map(pairs: Vec<(&str, Value)>) -> BTreeMap<String, Value> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

struct Ctx {
    command: &'static str,
    inputs: BTreeMap<String, Value>,
}

impl Ctx {
    fn new(command: &'static str, inputs: Vec<(&str, Value)>) -> Self {
        Ctx {
            command,
            inputs: map(inputs),
        }
    }

    fn finish(self, status: Status, results: Vec<(&str, Value)>, human: Vec<String>) -> Out {
        Out {
            record: OutputRecord {
                command: self.command.to_string(),
                inputs: self.inputs,
                results: map(results),
                status,
            },
            human,
        }
    }

    fn ok(self, results: Vec<(&str, Value)>, human: Vec<String>) -> Out {
        self.finish(Status::Ok, results, human)
    }

    /// Ok or violation depending on whether the sweep found failures.
    fn checked(self, clean: bool, results: Vec<(&str, Value)>, human: Vec<String>) -> Out {
        let status = if clean { Status::Ok } else { Status::Violation };
        self.finish(status, results, human)
    }

    fn error(self, message: String) -> Out {
        self.finish(Status::Error, vec![("message", json!(message))], Vec::new())
    }
}

/// Writes one line, exiting the way line tools do when the reader has
/// closed the pipe (e.g. `mtrank alpha ... | head`) instead of panicking.
fn emit(out: &mut impl std::io::Write, line: &str) {
    if writeln!(out, "{line}").is_err() {
        std::process::exit(141);
    }
}

fn main() {
    let cli = Cli::parse();
    let out = dispatch(&cli.cmd);
    if !cli.quiet {
        let stdout = std::io::stdout();
        let mut w = stdout.lock();
        if cli.json {
            emit(&mut w, &serde_json::to_string_pretty(&out.record).unwrap());
        } else {
            for line in &out.human {
                emit(&mut w, line);
            }
        }
    }
    let code = match out.record.status {
        Status::Ok => 0,
        Status::Violation => 1,
        Status::Error => {
            if let Some(Value::String(m)) = out.record.results.get("message") {
                eprintln!("error: {m}");
            }
            2
        }
    };
    std::process::exit(code);
}

fn dispatch(cmd: &Cmd) -> Out {
    match cmd {
        Cmd::Landau { function, n } => cmd_landau(*function, *n),
        Cmd::Alpha(args) => cmd_alpha(args),
        Cmd::Bound(args) => cmd_bound(args),
        Cmd::Exponent { g, n } => cmd_exponent(g, *n),
        Cmd::Rootsys { what, label } => cmd_rootsys(*what, *label),
        Cmd::Snf => cmd_snf(),
        Cmd::Verify { what, max } => cmd_verify(*what, *max),
        Cmd::Examples { which, max } => cmd_examples(*which, max.unwrap_or(12)),
    }
}

fn cmd_landau(function: LandauFn, n: u64) -> Out {
    let name = match function {
        LandauFn::G => "g",
        LandauFn::G1 => "g1",
    };
    let ctx = Ctx::new("landau", vec![("function", json!(name)), ("n", json!(n))]);
    let table = LandauTable::build(n);
    let value = match function {
        LandauFn::G => table.g(n),
        LandauFn::G1 => table.g1(n),
    };
    ctx.ok(
        vec![("value", big(value))],
        vec![value.to_string()],
    )
}

fn cmd_alpha(args: &AlphaArgs) -> Out {
    let ctx = Ctx::new(
        "alpha",
        vec![
            ("from", json!(args.from)),
            ("to", json!(args.to)),
            ("envelope", json!(args.envelope)),
        ],
    );
    if args.from < 2 {
        return ctx.error(format!("alpha(n) needs n >= 2, got --from {}", args.from));
    }
    if args.from > args.to {
        return ctx.error(format!("empty range: --from {} > --to {}", args.from, args.to));
    }
    let table = LandauTable::build(args.to);
    let rows = table.alpha_rows(args.from, args.to).expect("from >= 2");
    let mut human = Vec::with_capacity(rows.len());
    let mut json_rows = Vec::with_capacity(rows.len());
    for row in &rows {
        let mut line = format!("n={} alpha={:.6}", row.n, row.alpha);
        let mut obj = vec![
            ("n".to_string(), json!(row.n)),
            ("alpha".to_string(), json!(row.alpha)),
            ("log2_g1".to_string(), json!(row.log2_g1)),
        ];
        if args.envelope {
            line.push_str(&format!(" envelope={:.6}", row.envelope));
            obj.push(("envelope".to_string(), json!(row.envelope)));
        }
        human.push(line);
        json_rows.push(Value::Object(obj.into_iter().collect()));
    }
    ctx.ok(vec![("rows", Value::Array(json_rows))], human)
}

fn report_results(report: &BoundReport) -> Vec<(&'static str, Value)> {
    vec![
        ("bound_kind", json!(report.bound_kind.to_string())),
        ("equality", json!(report.equality)),
        ("input_dimension", big(&report.input_dimension)),
        ("min_rank", json!(report.min_rank)),
        ("witness_lhs", big(&report.witness_lhs)),
        ("witness_rhs", big(&report.witness_rhs)),
    ]
}

fn report_human(report: &BoundReport) -> Vec<String> {
    vec![
        format!("min_rank: {}", report.min_rank),
        format!("equality: {}", report.equality),
        format!("witness: {} >= {}", report.witness_lhs, report.witness_rhs),
    ]
}

fn cmd_bound(args: &BoundArgs) -> Out {
    if let Some(g) = &args.commutative {
        let ctx = Ctx::new(
            "bound",
            vec![("kind", json!("commutative")), ("g", big(g))],
        );
        return match commutative_rank_bound(g) {
            Ok(report) => ctx.ok(report_results(&report), report_human(&report)),
            Err(e) => ctx.error(e.to_string()),
        };
    }
    if let Some(g) = &args.general {
        let ctx = Ctx::new("bound", vec![("kind", json!("general")), ("g", big(g))]);
        return match general_rank_bound(g) {
            Ok(report) => ctx.ok(report_results(&report), report_human(&report)),
            Err(e) => ctx.error(e.to_string()),
        };
    }
    if let Some(dims) = &args.product {
        let ctx = Ctx::new(
            "bound",
            vec![
                ("kind", json!("product")),
                (
                    "factors",
                    Value::Array(dims.iter().map(big).collect()),
                ),
            ],
        );
        return match product_rank_bound(dims) {
            Ok(report) => ctx.ok(report_results(&report), report_human(&report)),
            Err(e) => ctx.error(e.to_string()),
        };
    }
    // The argument group guarantees exactly one kind, so this is --triple.
    let raw = args.triple.as_ref().expect("clap group");
    let ctx = Ctx::new(
        "bound",
        vec![
            ("kind", json!("triple")),
            ("args", json!(raw.clone())),
        ],
    );
    let rank = match u64::from_str(&raw[0]) {
        Ok(r) if r >= 1 => r,
        _ => return ctx.error(format!("rank must be a positive integer, got {}", raw[0])),
    };
    let (u, dim) = match (BigUint::from_str(&raw[1]), BigUint::from_str(&raw[2])) {
        (Ok(u), Ok(d)) if !u.is_zero() && !d.is_zero() => (u, d),
        _ => {
            return ctx.error(format!(
                "u and dim must be positive integers, got {} and {}",
                raw[1], raw[2]
            ))
        }
    };
    let satisfied = triple_noncommutative_check(rank, &u, &dim);
    let lhs = &u * pow2(rank - 1);
    ctx.ok(
        vec![
            ("dim", big(&dim)),
            ("lhs", big(&lhs)),
            ("rank", json!(rank)),
            ("satisfied", json!(satisfied)),
            ("u", big(&u)),
        ],
        vec![
            format!("satisfied: {satisfied}"),
            format!("witness: {lhs} {} {dim}", if satisfied { ">=" } else { "<" }),
        ],
    )
}

fn cmd_exponent(g: &BigUint, n: u64) -> Out {
    let ctx = Ctx::new("exponent", vec![("g", big(g)), ("n", json!(n))]);
    match division_field_exponent(g, n) {
        Ok(e) => {
            let mut results = vec![("value", json!(e.value))];
            let mut human = vec![format!("value: {:.6}", e.value)];
            if let Some(exact) = &e.exact {
                results.push(("exact", big(exact)));
                human.push(format!("exact: {exact}"));
            }
            ctx.ok(results, human)
        }
        Err(e) => ctx.error(e.to_string()),
    }
}

fn invariant_results(inv: &QuotientInvariants) -> Vec<(&'static str, Value)> {
    vec![
        (
            "elementary_divisors",
            Value::Array(inv.elementary_divisors.iter().map(big).collect()),
        ),
        ("free_rank", json!(inv.free_rank)),
        ("torsion_exponent", big(&inv.torsion_exponent())),
        ("torsion_order", big(&inv.torsion_order())),
    ]
}

fn invariant_human(inv: &QuotientInvariants) -> Vec<String> {
    let divisors = if inv.elementary_divisors.is_empty() {
        "none".to_string()
    } else {
        inv.elementary_divisors
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    vec![
        format!("elementary_divisors: {divisors}"),
        format!("free_rank: {}", inv.free_rank),
    ]
}

fn cmd_rootsys(what: RootsysWhat, label: SimpleType) -> Out {
    let what_name = match what {
        RootsysWhat::Cartan => "cartan",
        RootsysWhat::FundamentalGroup => "fundamental-group",
        RootsysWhat::Minuscule => "minuscule",
        RootsysWhat::Orbit => "orbit",
    };
    let ctx = Ctx::new(
        "rootsys",
        vec![
            ("query", json!(what_name)),
            ("type", json!(label.to_string())),
        ],
    );
    match what {
        RootsysWhat::Cartan => {
            let m = cartan_matrix(label);
            let rows: Vec<Value> = m
                .row_vectors()
                .iter()
                .map(|row| {
                    Value::Array(
                        row.iter()
                            .map(|e| json!(i64::try_from(e).expect("cartan entries are small")))
                            .collect(),
                    )
                })
                .collect();
            let human = m.to_string().lines().map(str::to_string).collect();
            ctx.ok(vec![("matrix", Value::Array(rows))], human)
        }
        RootsysWhat::FundamentalGroup => {
            let inv = fundamental_group_invariants(label);
            let exponent = fundamental_group_exponent(label);
            let mut results = invariant_results(&inv);
            results.push(("exponent", json!(exponent)));
            let mut human = invariant_human(&inv);
            human.push(format!("exponent: {exponent}"));
            ctx.ok(results, human)
        }
        RootsysWhat::Minuscule => {
            let catalog = minuscule_catalog(label);
            let rows: Vec<Value> = catalog
                .iter()
                .map(|r| {
                    json!({
                        "weight_index": r.fundamental_weight_index,
                        "dimension": r.dimension.to_string(),
                    })
                })
                .collect();
            let human = if catalog.is_empty() {
                vec!["none".to_string()]
            } else {
                catalog
                    .iter()
                    .map(|r| {
                        format!(
                            "varpi_{} dimension {}",
                            r.fundamental_weight_index, r.dimension
                        )
                    })
                    .collect()
            };
            ctx.ok(vec![("representations", Value::Array(rows))], human)
        }
        RootsysWhat::Orbit => {
            let catalog = minuscule_catalog(label);
            let mut rows = Vec::new();
            let mut human = Vec::new();
            let mut clean = true;
            for r in &catalog {
                let orbit = weyl_orbit(label, &r.highest_weight()).expect("catalog weight");
                let size = BigUint::from(orbit.len());
                clean &= size == r.dimension;
                human.push(format!(
                    "varpi_{} orbit {} (dimension {})",
                    r.fundamental_weight_index, size, r.dimension
                ));
                rows.push(json!({
                    "weight_index": r.fundamental_weight_index,
                    "dimension": r.dimension.to_string(),
                    "orbit_size": size.to_string(),
                }));
            }
            if catalog.is_empty() {
                human.push("none".to_string());
            }
            ctx.checked(clean, vec![("orbits", Value::Array(rows))], human)
        }
    }
}

fn cmd_snf() -> Out {
    let ctx = Ctx::new("snf", vec![("source", json!("stdin"))]);
    let mut input = String::new();
    if let Err(e) = std::io::stdin().read_to_string(&mut input) {
        return ctx.error(format!("reading standard input: {e}"));
    }
    let parsed: Vec<Vec<serde_json::Number>> = match serde_json::from_str(&input) {
        Ok(v) => v,
        Err(e) => return ctx.error(format!("expected a JSON array of arrays of integers: {e}")),
    };
    if parsed.is_empty() || parsed[0].is_empty() {
        return ctx.error("matrix must have at least one row and one column".to_string());
    }
    let cols = parsed[0].len();
    let mut entries = Vec::with_capacity(parsed.len() * cols);
    for row in &parsed {
        if row.len() != cols {
            return ctx.error(format!(
                "ragged matrix: expected {cols} columns, found a row with {}",
                row.len()
            ));
        }
        for n in row {
            match BigInt::from_str(&n.to_string()) {
                Ok(v) => entries.push(v),
                Err(_) => return ctx.error(format!("matrix entries must be integers, got {n}")),
            }
        }
    }
    let m = IntMatrix::new(parsed.len(), cols, entries).expect("shape checked");
    let inv = smith_normal_form(&m);
    let mut results = invariant_results(&inv);
    results.push(("cols", json!(cols)));
    results.push(("rows", json!(parsed.len())));
    ctx.ok(results, invariant_human(&inv))
}

fn cmd_verify(what: VerifyWhat, max: Option<u64>) -> Out {
    match what {
        VerifyWhat::LandauOracle => {
            let max = max.unwrap_or(18);
            let ctx = Ctx::new(
                "verify",
                vec![("check", json!("landau-oracle")), ("max", json!(max))],
            );
            let table = LandauTable::build(max);
            let bad = brute::oracle_mismatches(&table, max);
            sweep_out(ctx, max, &bad)
        }
        VerifyWhat::Sandwich => {
            let max = max.unwrap_or(300);
            let ctx = Ctx::new(
                "verify",
                vec![("check", json!("sandwich")), ("max", json!(max))],
            );
            let table = LandauTable::build(max + (2 * max).sqrt() + 1);
            let bad = table.sandwich_violations(1, max);
            sweep_out(ctx, max, &bad)
        }
        VerifyWhat::Massias => {
            let max = max.unwrap_or(300);
            let ctx = Ctx::new(
                "verify",
                vec![("check", json!("massias")), ("max", json!(max))],
            );
            let table = LandauTable::build(max);
            let bad = table.massias_violations(2, max);
            sweep_out(ctx, max, &bad)
        }
        VerifyWhat::UVsG1 => {
            let max = max.unwrap_or(10) as usize;
            let ctx = Ctx::new(
                "verify",
                vec![("check", json!("u-vs-g1")), ("max", json!(max))],
            );
            let report = verify_u_vs_g1(max);
            let maxima: Vec<Value> = report
                .per_rank
                .iter()
                .map(|m| {
                    json!({
                        "rank": m.rank,
                        "max_lcm": m.max_lcm.to_string(),
                        "factors": m.factors.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let violations: Vec<Value> = report
                .violations
                .iter()
                .map(|v| {
                    json!({
                        "factors": v.factors.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                        "lcm": v.lcm.to_string(),
                        "bound": v.bound.to_string(),
                    })
                })
                .collect();
            let clean = report.is_clean();
            let human = vec![
                format!("multisets checked: {}", report.multisets_checked),
                format!("violations: {}", report.violations.len()),
            ];
            ctx.checked(
                clean,
                vec![
                    ("multisets_checked", json!(report.multisets_checked)),
                    ("per_rank_maxima", Value::Array(maxima)),
                    ("violations", Value::Array(violations)),
                ],
                human,
            )
        }
        VerifyWhat::CharCount => {
            let max = max.unwrap_or(8) as usize;
            let ctx = Ctx::new(
                "verify",
                vec![("check", json!("char-count")), ("max", json!(max))],
            );
            let mut checked = 0u64;
            let mut bad = Vec::new();
            for t in SimpleType::all_with_rank_at_most(max) {
                for rep in minuscule_catalog(t) {
                    let orbit = weyl_orbit(t, &rep.highest_weight()).expect("catalog weight");
                    let count = count_distinct_characters(&orbit);
                    let bound = char_count_bound(t.rank() as u64 + 1).expect("rank >= 1");
                    checked += 1;
                    if count > bound {
                        bad.push(json!({
                            "type": t.to_string(),
                            "weight_index": rep.fundamental_weight_index,
                            "count": count.to_string(),
                            "bound": bound.to_string(),
                        }));
                    }
                }
            }
            let clean = bad.is_empty();
            let human = vec![
                format!("representations checked: {checked}"),
                format!("violations: {}", bad.len()),
            ];
            ctx.checked(
                clean,
                vec![
                    ("representations_checked", json!(checked)),
                    ("violations", Value::Array(bad)),
                ],
                human,
            )
        }
        VerifyWhat::Examples => {
            let max = max.unwrap_or(12);
            let ctx = Ctx::new(
                "verify",
                vec![("check", json!("examples")), ("max", json!(max))],
            );
            let mut checked = 0u64;
            let mut bad = Vec::new();
            for id in [
                ExampleId::Cm,
                ExampleId::Spin,
                ExampleId::Sl2Product,
                ExampleId::LargeMultiplicity,
            ] {
                for n in admissible_ns(id, max) {
                    let report = run_example(id, n).expect("admissible n");
                    checked += 1;
                    if !example_clean(&report) {
                        bad.push(json!({
                            "family": report.example_id.to_string(),
                            "n": n,
                            "failed": report
                                .failed_checks()
                                .iter()
                                .map(|c| c.name)
                                .collect::<Vec<_>>(),
                        }));
                    }
                }
            }
            let clean = bad.is_empty();
            let human = vec![
                format!("reports checked: {checked}"),
                format!("violations: {}", bad.len()),
            ];
            ctx.checked(
                clean,
                vec![
                    ("reports_checked", json!(checked)),
                    ("violations", Value::Array(bad)),
                ],
                human,
            )
        }
    }
}

/// A report is clean when all named checks pass and, for the three
/// power-of-two families, the commutative bound is met with equality.
fn example_clean(report: &ExampleReport) -> bool {
    let equality_expected = report.example_id != ExampleId::LargeMultiplicity;
    report.all_checks_pass() && (!equality_expected || report.bound_value_equalled)
}

fn sweep_out(ctx: Ctx, max: u64, bad: &[u64]) -> Out {
    let clean = bad.is_empty();
    let human = vec![
        format!("checked up to: {max}"),
        if clean {
            "violations: none".to_string()
        } else {
            format!(
                "violations: {}",
                bad.iter()
                    .map(|n| n.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        },
    ];
    ctx.checked(
        clean,
        vec![
            ("checked_up_to", json!(max)),
            ("violations", json!(bad)),
        ],
        human,
    )
}

fn cmd_examples(which: ExampleWhich, max: u64) -> Out {
    let ids: Vec<ExampleId> = match which {
        ExampleWhich::Cm => vec![ExampleId::Cm],
        ExampleWhich::Spin => vec![ExampleId::Spin],
        ExampleWhich::Sl2 => vec![ExampleId::Sl2Product],
        ExampleWhich::Largemult => vec![ExampleId::LargeMultiplicity],
        ExampleWhich::All => vec![
            ExampleId::Cm,
            ExampleId::Spin,
            ExampleId::Sl2Product,
            ExampleId::LargeMultiplicity,
        ],
    };
    let which_name = match which {
        ExampleWhich::Cm => "cm",
        ExampleWhich::Spin => "spin",
        ExampleWhich::Sl2 => "sl2",
        ExampleWhich::Largemult => "largemult",
        ExampleWhich::All => "all",
    };
    let ctx = Ctx::new(
        "examples",
        vec![("which", json!(which_name)), ("max", json!(max))],
    );
    let mut rows = Vec::new();
    let mut human = Vec::new();
    let mut clean = true;
    for id in ids {
        for n in admissible_ns(id, max) {
            let report = run_example(id, n).expect("admissible n");
            clean &= example_clean(&report);
            human.push(format!(
                "{} n={} dim={} rank={} equality={} checks={}",
                report.example_id,
                report.n,
                report.abelian_dim,
                report.mt_rank,
                report.bound_value_equalled,
                if report.all_checks_pass() { "ok" } else { "FAILED" },
            ));
            rows.push(json!({
                "family": report.example_id.to_string(),
                "n": report.n,
                "abelian_dim": report.abelian_dim.to_string(),
                "mt_rank": report.mt_rank,
                "bound_value_equalled": report.bound_value_equalled,
                "all_checks_pass": report.all_checks_pass(),
                "notes": report
                    .notes
                    .iter()
                    .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                    .collect::<Vec<_>>(),
            }));
        }
    }
    ctx.checked(clean, vec![("reports", Value::Array(rows))], human)
}
