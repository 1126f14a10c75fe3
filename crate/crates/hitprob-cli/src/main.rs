//! Command-line front end for the hit-problem engine: admissible bases of
//! the cohit quotient, GL-invariants, the det-twisted top-exterior slice,
//! per-level digit reports, and a self-check against the pinned corpus.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a mismatch (or on an
//! internal error), 2 on invalid usage — including the degree-parity
//! refusal for `slice`.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hitprob::arith::PrimeModulus;
use hitprob::cohit::{build_quotient_blocks, cohit_basis, CohitBasis};
use hitprob::fixtures::run_all;
use hitprob::glinv::{invariants, Twist};
use hitprob::monomials::{monomial_string, Order};
use hitprob::report::digit_report;
use hitprob::steenrod::{leading_row_collisions, Mode};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "hitprob",
    version,
    about = "Exact hit-problem computations over odd primes",
    long_about = "Exact linear algebra over F_p for the Steenrod-power hit problem on \
                  a polynomial algebra in h variables (each of degree 2): admissible \
                  monomial bases of the cohit quotient, GL(h, F_p)-invariants, the \
                  det-twisted top-exterior slice, and p-adic digit reports."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Admissible monomial basis of the cohit quotient in exponent degree m
    Basis(BasisArgs),
    /// GL(h, F_p)-invariants of the cohit quotient in exponent degree m
    Invariants(InvariantsArgs),
    /// Top-exterior slice in cohomological degree n = 2m + h, with its
    /// det-twisted invariants
    Slice(SliceArgs),
    /// Active p-adic digit levels of degree m with pivot/kept signatures
    DigitReport(DigitReportArgs),
    /// Re-derive the pinned result corpus and report any mismatch
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Number of polynomial variables
    #[arg(long = "h")]
    h: usize,
    /// Odd prime modulus
    #[arg(long = "p")]
    p: u32,
    /// Hit-matrix construction mode
    #[arg(long, value_enum, default_value_t = ModeArg::EdgeSum)]
    mode: ModeArg,
    /// Candidate order for the greedy basis walk
    #[arg(long, value_enum, default_value_t = OrderArg::Balanced)]
    order: OrderArg,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct BasisArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Exponent degree
    #[arg(long = "m")]
    m: u32,
    /// Show at most this many representatives in text output
    #[arg(long)]
    limit: Option<usize>,
    /// Diagnostic: report duplicate leading rows within any level/weight
    /// block of the hit matrix and exit nonzero when one is found
    #[arg(long)]
    assert_triangular: bool,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Exponent degree
    #[arg(long = "m")]
    m: u32,
    /// Character twist applied to the action
    #[arg(long, value_enum, default_value_t = TwistArg::None)]
    twist: TwistArg,
}

#[derive(Args)]
struct SliceArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Cohomological degree (must satisfy n = h mod 2)
    #[arg(long = "n")]
    n: u64,
    /// Show at most this many slice basis elements in text output
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct DigitReportArgs {
    /// Number of polynomial variables
    #[arg(long = "h")]
    h: usize,
    /// Odd prime modulus
    #[arg(long = "p")]
    p: u32,
    /// Exponent degree
    #[arg(long = "m")]
    m: u32,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Only run corpus entries whose id contains this substring
    #[arg(long)]
    filter: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    EdgeSum,
    Graded,
    Full,
}

impl From<ModeArg> for Mode {
    fn from(v: ModeArg) -> Mode {
        match v {
            ModeArg::EdgeSum => Mode::EdgeSum,
            ModeArg::Graded => Mode::Graded,
            ModeArg::Full => Mode::Full,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Lex,
    Antilex,
    Balanced,
}

impl From<OrderArg> for Order {
    fn from(v: OrderArg) -> Order {
        match v {
            OrderArg::Lex => Order::Lex,
            OrderArg::Antilex => Order::Antilex,
            OrderArg::Balanced => Order::Balanced,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TwistArg {
    None,
    DetInverse,
}

impl From<TwistArg> for Twist {
    fn from(v: TwistArg) -> Twist {
        match v {
            TwistArg::None => Twist::None,
            TwistArg::DetInverse => Twist::DetInverse,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

const USAGE_ERROR: u8 = 2;
const INTERNAL_ERROR: u8 = 1;

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE_ERROR)
}

fn prime(p: u32) -> Result<PrimeModulus, ExitCode> {
    PrimeModulus::new(p).map_err(|e| usage_error(&format!("--p {p}: {e}")))
}

fn check_h(h: usize) -> Result<(), ExitCode> {
    if h == 0 {
        return Err(usage_error("--h must be at least 1"));
    }
    Ok(())
}

/// `[8, 10]`-style rendering of an exponent tuple.
fn exps_string(e: &[u32]) -> String {
    let inner: Vec<String> = e.iter().map(u32::to_string).collect();
    format!("[{}]", inner.join(", "))
}

/// Exterior generators written as one word: `uv` for h = 2, `uvw` for
/// h = 3, `u1...uh` beyond that.
fn exterior_symbols(h: usize) -> String {
    match h {
        1 => "u".into(),
        2 => "uv".into(),
        3 => "uvw".into(),
        _ => (1..=h).map(|j| format!("u{j}")).collect(),
    }
}

/// `1*e_2 + 2*e_3`-style combination of labelled basis elements.
fn combination_string(coeffs: &[u32], label: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(j, &c)| format!("{c}*{label}_{}", j + 1))
        .collect();
    terms.join(" + ")
}

/// Python-tuple rendering of signature lists: `[(0, 1), (1, 0)]`, `[(2,)]`.
fn signatures_string(sigs: &[Vec<u32>]) -> String {
    let inner: Vec<String> = sigs
        .iter()
        .map(|s| {
            let parts: Vec<String> = s.iter().map(u32::to_string).collect();
            if parts.len() == 1 {
                format!("({},)", parts[0])
            } else {
                format!("({})", parts.join(", "))
            }
        })
        .collect();
    format!("[{}]", inner.join(", "))
}

fn compute_basis(common: &CommonArgs, m: u32) -> Result<(PrimeModulus, CohitBasis), ExitCode> {
    check_h(common.h)?;
    let f = prime(common.p)?;
    let basis = cohit_basis(common.h, f, m, common.mode.into(), common.order.into(), &[]);
    Ok((f, basis))
}

fn basis_json(basis: &CohitBasis) -> serde_json::Value {
    let exps: Vec<Vec<u32>> = basis.rep_exponents();
    json!({
        "dim": basis.dims.dim,
        "ambient": basis.dims.ambient,
        "rank": basis.dims.rank,
        "basis": exps,
    })
}

fn run_basis(args: &BasisArgs) -> Result<(), ExitCode> {
    let (_, basis) = compute_basis(&args.common, args.m)?;
    let h = args.common.h;
    let p = args.common.p;
    match args.common.format {
        FormatArg::Json => {
            let mut v = basis_json(&basis);
            let obj = v.as_object_mut().unwrap();
            obj.insert("schema".into(), json!(1));
            obj.insert("command".into(), json!("basis"));
            obj.insert("h".into(), json!(h));
            obj.insert("p".into(), json!(p));
            obj.insert("m".into(), json!(args.m));
            obj.insert("mode".into(), serde_json::to_value(Mode::from(args.common.mode)).unwrap());
            obj.insert("order".into(), serde_json::to_value(Order::from(args.common.order)).unwrap());
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        FormatArg::Text => {
            let d = basis.dims.dim;
            println!(
                "Q(P_{h})_m over F_{p}: dim = {d} (ambient {}, rank(Im) {})",
                basis.dims.ambient, basis.dims.rank
            );
            if d == 0 {
                println!("  Basis: [empty]");
            } else {
                let exps = basis.rep_exponents();
                let toshow = args.limit.unwrap_or(exps.len()).min(exps.len());
                println!(
                    "  Admissible monomial basis (order={}; showing {toshow} of {}):",
                    Order::from(args.common.order),
                    exps.len()
                );
                let prefixes: Vec<String> = exps[..toshow]
                    .iter()
                    .enumerate()
                    .map(|(t, e)| format!("e_{} := {}", t + 1, exps_string(e)))
                    .collect();
                let width = prefixes.iter().map(String::len).max().unwrap_or(0);
                for (prefix, e) in prefixes.iter().zip(&exps[..toshow]) {
                    println!("    {prefix:<width$}   ( {} )", monomial_string(e));
                }
            }
        }
    }
    if args.assert_triangular {
        let collisions = leading_row_collisions(&basis.hit);
        if collisions.is_empty() {
            eprintln!("triangularity: OK (no duplicate leading rows in any level/weight block)");
        } else {
            for c in &collisions {
                let sources: Vec<String> = c
                    .columns
                    .iter()
                    .map(|&j| exps_string(&basis.hit.columns[j].source))
                    .collect();
                eprintln!(
                    "triangularity: level s={} weight {} leading row {} shared by sources {}",
                    c.level,
                    exps_string(&c.weight),
                    exps_string(&basis.hit.ambient[c.row]),
                    sources.join(", ")
                );
            }
            return Err(ExitCode::from(INTERNAL_ERROR));
        }
    }
    Ok(())
}

fn run_invariants(args: &InvariantsArgs) -> Result<(), ExitCode> {
    let (_, basis) = compute_basis(&args.common, args.m)?;
    let h = args.common.h;
    let p = args.common.p;
    let twist: Twist = args.twist.into();
    let inv = if basis.dims.dim == 0 {
        None
    } else {
        let blocks = build_quotient_blocks(&basis).map_err(|e| {
            eprintln!("error: {e}");
            ExitCode::from(INTERNAL_ERROR)
        })?;
        Some(invariants(&blocks, twist))
    };
    let dim_inv = inv.as_ref().map_or(0, |i| i.dim());
    match args.common.format {
        FormatArg::Json => {
            let vectors: Vec<Vec<u32>> = inv.map(|i| i.vectors).unwrap_or_default();
            let v = json!({
                "schema": 1,
                "command": "invariants",
                "h": h,
                "p": p,
                "m": args.m,
                "mode": Mode::from(args.common.mode),
                "order": Order::from(args.common.order),
                "twist": match args.twist { TwistArg::None => "none", TwistArg::DetInverse => "det_inverse" },
                "dim_quotient": basis.dims.dim,
                "dim_invariants": dim_inv,
                "basis": basis.rep_exponents(),
                "vectors": vectors,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        FormatArg::Text => {
            let note = match args.twist {
                TwistArg::None => String::new(),
                TwistArg::DetInverse => " [twist=det-inverse]".into(),
            };
            println!(">> Invariants in Q(P_{h})_m over F_{p} (m={}){note}", args.m);
            match inv {
                None => println!("    Quotient is zero; invariants dim = 0."),
                Some(inv) => {
                    println!("    dim Invariants = {dim_inv}");
                    if let Some(c) = inv.vectors.first() {
                        println!("    INV = {}", combination_string(c, "e"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn run_slice(args: &SliceArgs) -> Result<(), ExitCode> {
    check_h(args.common.h)?;
    let f = prime(args.common.p)?;
    let h = args.common.h;
    let p = args.common.p;
    let n = args.n;
    if n % 2 != (h as u64) % 2 {
        // The refusal banner names the degree symbolically.
        eprintln!(
            "== QH^n({h})^(Lambda^{h}) over F_{p}: wrong parity; n must satisfy n = h (mod 2). =="
        );
        return Err(ExitCode::from(USAGE_ERROR));
    }
    if n < h as u64 {
        return Err(usage_error(&format!("--n {n} is below the minimum degree h = {h}")));
    }
    let m: u32 = ((n - h as u64) / 2)
        .try_into()
        .map_err(|_| usage_error(&format!("--n {n} is out of range")))?;
    let basis = cohit_basis(h, f, m, args.common.mode.into(), args.common.order.into(), &[]);
    let inv = if basis.dims.dim == 0 {
        None
    } else {
        let blocks = build_quotient_blocks(&basis).map_err(|e| {
            eprintln!("error: {e}");
            ExitCode::from(INTERNAL_ERROR)
        })?;
        Some(invariants(&blocks, Twist::DetInverse))
    };
    let dim_inv = inv.as_ref().map_or(0, |i| i.dim());
    match args.common.format {
        FormatArg::Json => {
            let vectors: Vec<Vec<u32>> = inv.map(|i| i.vectors).unwrap_or_default();
            let v = json!({
                "schema": 1,
                "command": "slice",
                "h": h,
                "p": p,
                "n": n,
                "m": m,
                "mode": Mode::from(args.common.mode),
                "order": Order::from(args.common.order),
                "dim": basis.dims.dim,
                "ambient": basis.dims.ambient,
                "rank": basis.dims.rank,
                "basis": basis.rep_exponents(),
                "invariants": { "twist": "det_inverse", "dim": dim_inv, "vectors": vectors },
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        FormatArg::Text => {
            let d = basis.dims.dim;
            println!(
                "== QH^{n}({h})^(Lambda^{h}) over F_{p} (top exterior) with n=2m+h, m={m} =="
            );
            println!(
                "    dim QH^{n}({h})^(Lambda^{h}) = {d}   (ambient {}, rank(Im) {})",
                basis.dims.ambient, basis.dims.rank
            );
            let exps = basis.rep_exponents();
            let toshow = args.limit.unwrap_or(exps.len()).min(exps.len());
            println!(
                "  Admissible basis of the slice (write U:={}). Showing {toshow} of {}:",
                exterior_symbols(h),
                exps.len()
            );
            for (t, e) in exps[..toshow].iter().enumerate() {
                println!("    E_{} := [({})U]", t + 1, monomial_string(e));
            }
            println!("  Invariant subspace in QH^{n}({h})^(Lambda^{h}): dim = {dim_inv}");
            if let Some(c) = inv.as_ref().and_then(|i| i.vectors.first()) {
                println!("    INV = {}", combination_string(c, "E"));
            }
        }
    }
    Ok(())
}

fn run_digit_report(args: &DigitReportArgs) -> Result<(), ExitCode> {
    check_h(args.h)?;
    let f = prime(args.p)?;
    let levels = digit_report(args.h, f, args.m);
    match args.format {
        FormatArg::Json => {
            let v = json!({
                "schema": 1,
                "command": "digit_report",
                "h": args.h,
                "p": args.p,
                "m": args.m,
                "levels": levels,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        FormatArg::Text => {
            println!("p={}, h={}, m={}", args.p, args.h, args.m);
            for lvl in &levels {
                println!("Level s={}: d_s={}", lvl.s, lvl.d);
                println!(
                    "  Pure pivot signatures (annihilated by H_s): {}",
                    signatures_string(&lvl.pivots)
                );
                println!(
                    "  Non-pivot signatures kept (count={}): {}",
                    lvl.kept.len(),
                    signatures_string(&lvl.kept)
                );
            }
        }
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> Result<(), ExitCode> {
    let results = run_all(args.filter.as_deref());
    let failed = results.iter().filter(|r| !r.passed).count();
    match args.format {
        FormatArg::Json => {
            let rows: Vec<serde_json::Value> = results
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "passed": r.passed,
                        "detail": r.detail,
                        "seconds": r.seconds,
                    })
                })
                .collect();
            let v = json!({
                "schema": 1,
                "command": "verify",
                "passed": failed == 0,
                "results": rows,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        FormatArg::Text => {
            for r in &results {
                let mark = if r.passed { "PASS" } else { "FAIL" };
                println!("[{mark}] {}: {} [{:.2}s]", r.id, r.detail, r.seconds);
            }
            println!(
                "summary: {} passed, {failed} failed",
                results.len() - failed
            );
        }
    }
    if failed > 0 {
        return Err(ExitCode::from(INTERNAL_ERROR));
    }
    Ok(())
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes (e.g. `hitprob ... | head`)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Basis(a) => run_basis(a),
        Command::Invariants(a) => run_invariants(a),
        Command::Slice(a) => run_slice(a),
        Command::DigitReport(a) => run_digit_report(a),
        Command::Verify(a) => run_verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
