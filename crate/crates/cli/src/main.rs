use std::process::ExitCode;

use bch3::charsums::{self, EisensteinInt};
use bch3::codes::{
    closed_form_distribution, code_from_defining_set, construct_family, is_lcd, verify_bch_bound,
    weight_distribution_exhaustive, weight_distribution_trace, CyclicCode, Family,
    WeightDistribution, DEFAULT_MAX_DIMENSION,
};
use bch3::cosets::{top_acl_oracle, AclTable};
use bch3::field::{Elem, Field};
use bch3::verify::{self, Scope, Status, VerifyOptions};
use bch3::{parse, Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

/// Ternary primitive BCH and LCD BCH codes: construction, weights, sums.
#[derive(Parser)]
#[command(name = "bch3", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Global {
    /// Worker threads for parallel scans (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Lift capacity limits.
    #[arg(long, global = true)]
    force: bool,
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV where a table is available.
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// The field GF(3^m) and its modulus.
    Field {
        #[arg(long)]
        m: u32,
        /// Monic primitive modulus, coefficients lowest degree first.
        #[arg(long)]
        modulus: Option<String>,
    },
    /// Ranked absolute coset leaders modulo 3^m - 1.
    Cosets {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 3)]
        top: usize,
        /// List the leader of every attaining coset.
        #[arg(long)]
        verbose: bool,
    },
    /// Build a code and compute its weight distribution.
    Code(CodeArgs),
    /// Kloosterman sums K(a, b) over GF(3^m).
    Kloosterman {
        #[arg(long)]
        m: u32,
        /// Scan all pairs against the bound (odd m).
        #[arg(long, conflicts_with_all = ["a", "b"])]
        scan: bool,
        /// `a` as a discrete log of α, or `zero`.
        #[arg(long, required_unless_present = "scan")]
        a: Option<String>,
        /// `b` as a discrete log of α, or `zero`.
        #[arg(long, required_unless_present = "scan")]
        b: Option<String>,
    },
    /// Quadratic Gauss sum over GF(3^s).
    Gauss {
        #[arg(long)]
        s: u32,
    },
    /// Run the verification sweep.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_scope)]
        scope: Scope,
        #[arg(long = "max-m", default_value_t = verify::DEFAULT_MAX_M)]
        max_m: u32,
    },
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long, required_unless_present = "defining_set", conflicts_with = "defining_set")]
    family: Option<String>,
    /// Residues of a coset-closed defining set, e.g. `4` or `1,3`.
    #[arg(long = "defining-set", allow_hyphen_values = true)]
    defining_set: Option<String>,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Exhaustive)]
    weights: Method,
    /// Largest dimension enumerated exhaustively.
    #[arg(long = "max-dim", env = "BCH3_MAX_DIM")]
    max_dim: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Exhaustive,
    Trace,
    Closed,
    All,
}

fn parse_scope(s: &str) -> std::result::Result<Scope, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn field_for(m: u32, modulus: Option<&str>) -> Result<Field> {
    match modulus {
        None => Field::new(m),
        Some(text) => {
            let f = Field::with_modulus(parse::modulus(text)?)?;
            if f.degree() != m {
                return Err(Error::Usage(format!(
                    "modulus has degree {}, but m = {m}",
                    f.degree()
                )));
            }
            Ok(f)
        }
    }
}

fn emit(g: &Global, value: Value, text: impl FnOnce() -> String) {
    if g.json {
        println!("{}", serde_json::to_string_pretty(&value).expect("JSON value serializes"));
    } else {
        print!("{}", text());
    }
}

fn cmd_field(g: &Global, m: u32, modulus: Option<&str>) -> Result<()> {
    let f = field_for(m, modulus)?;
    let value = json!({
        "m": m,
        "n": f.group_order(),
        "modulus": f.modulus().coeffs(),
        "primitive_check": true,
    });
    emit(g, value, || {
        format!(
            "GF(3^{m}), n = {}\nmodulus: {} (coefficients {})\nprimitive: true\n",
            f.group_order(),
            f.modulus(),
            join(f.modulus().coeffs())
        )
    });
    Ok(())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_cosets(g: &Global, m: u32, top: usize, verbose: bool) -> Result<()> {
    let ranks = top_acl_oracle(m, top)?;
    let n = AclTable::new(m).map(|t| t.modulus()).unwrap_or(0);
    let value = json!({
        "m": m,
        "n": n,
        "ranks": ranks.iter().enumerate().map(|(i, r)| json!({
            "rank": i + 1,
            "acl": r.acl,
            "cosets": r.cosets.iter().map(|c| json!({"leader": c.leader, "size": c.size})).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    emit(g, value, || {
        let mut out = String::new();
        for (i, r) in ranks.iter().enumerate() {
            let sizes: Vec<u32> = r.cosets.iter().map(|c| c.size).collect();
            out.push_str(&format!(
                "rank {}: {} coset(s), sizes {}, acl {}\n",
                i + 1,
                sizes.len(),
                join(&sizes),
                r.acl
            ));
            if verbose {
                for c in &r.cosets {
                    out.push_str(&format!("  leader {} size {}\n", c.leader, c.size));
                }
            }
        }
        out
    });
    Ok(())
}

/// Distributions by the requested methods, in the order exhaustive, trace,
/// closed.
fn weight_methods(
    g: &Global,
    args: &CodeArgs,
    code: &CyclicCode,
    field: &Field,
) -> Result<Vec<(&'static str, WeightDistribution)>> {
    let wants = |m: Method| args.weights == m || args.weights == Method::All;
    let family = code.family;
    let need_family = |what: &str| {
        family.ok_or_else(|| Error::Unsupported(format!("{what} weights need --family")))
    };
    let mut out = Vec::new();
    if wants(Method::Exhaustive) {
        let budget = match (args.max_dim, g.force) {
            (Some(d), _) => d,
            (None, true) => u32::MAX,
            (None, false) => DEFAULT_MAX_DIMENSION,
        };
        out.push(("exhaustive", weight_distribution_exhaustive(code, budget, g.workers)?));
    }
    if wants(Method::Trace) {
        let fam = need_family("trace")?;
        let m = field.degree();
        if matches!(fam, Family::E | Family::G) && m >= 5 && !g.force {
            return Err(Error::Capacity(format!(
                "the family {fam} trace enumeration at m = {m} visits 3^{} pairs; pass --force",
                2 * m
            )));
        }
        match weight_distribution_trace(fam, field, g.workers) {
            Ok(wd) => out.push(("trace", wd)),
            Err(Error::Unsupported(_)) if args.weights == Method::All => {}
            Err(e) => return Err(e),
        }
    }
    if wants(Method::Closed) {
        match closed_form_distribution(need_family("closed-form")?, field.degree()) {
            Ok(wd) => out.push(("closed", wd)),
            Err(Error::Unsupported(_)) if args.weights == Method::All => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn cmd_code(g: &Global, args: &CodeArgs) -> Result<()> {
    let field = field_for(args.m, args.modulus.as_deref())?;
    let code = match (&args.family, &args.defining_set) {
        (Some(f), _) => construct_family(f.parse()?, args.m, &field)?,
        (None, Some(z)) => code_from_defining_set(&field, &parse::residues(z)?)?,
        (None, None) => return Err(Error::Usage("pass --family or --defining-set".into())),
    };
    let methods = weight_methods(g, args, &code, &field)?;
    let (_, wd) = methods
        .first()
        .ok_or_else(|| Error::Unsupported("no weight method applies".into()))?;
    for (name, other) in &methods[1..] {
        if other != wd {
            return Err(Error::Verification(format!(
                "{name} distribution {other} differs from {} {wd}",
                methods[0].0
            )));
        }
    }
    wd.check_sane(code.dimension)?;
    let bch = verify_bch_bound(&code, wd);
    let lcd = is_lcd(&code);

    if g.csv {
        print!("{}", wd.to_csv());
        return Ok(());
    }
    let mut obj = Map::new();
    obj.insert("family".into(), code.family.map_or(Value::Null, |f| f.to_string().into()));
    obj.insert("m".into(), code.m.into());
    obj.insert("n".into(), code.n.into());
    obj.insert("k".into(), code.dimension.into());
    if let Some(d) = code.designed_distance {
        obj.insert("designed_distance".into(), d.into());
    }
    obj.insert("generator".into(), json!(code.generator.coeffs()));
    obj.insert("defining_set".into(), json!(code.defining_set));
    obj.insert("lcd".into(), lcd.into());
    obj.insert("weights".into(), serde_json::to_value(wd).expect("map serializes"));
    obj.insert("weight_methods".into(), json!(methods.iter().map(|(n, _)| *n).collect::<Vec<_>>()));
    obj.insert("min_distance".into(), json!(wd.min_distance()));
    obj.insert("bch_bound_report".into(), serde_json::to_value(&bch).expect("report serializes"));
    emit(g, Value::Object(obj), || {
        let name = code.family.map_or("custom".to_string(), |f| format!("family {f}"));
        let mut out = format!("{name}, m = {}, n = {}, k = {}\n", code.m, code.n, code.dimension);
        if let Some(d) = code.designed_distance {
            out.push_str(&format!("designed distance: {d}\n"));
        }
        out.push_str(&format!("generator: {}\n", code.generator));
        out.push_str(&format!("defining set: {} residues\n", code.defining_set.len()));
        out.push_str(&format!("lcd: {lcd}\n"));
        let names: Vec<&str> = methods.iter().map(|(n, _)| *n).collect();
        out.push_str(&format!("weights ({}): {wd}\n", names.join(", ")));
        let d = wd.min_distance().map_or("none".into(), |d| d.to_string());
        out.push_str(&format!("minimum distance: {d}\n"));
        out.push_str(&format!(
            "bch bound: run {}, bound {}, {}\n",
            bch.longest_run,
            bch.bound,
            if bch.pass { "pass" } else { "fail" }
        ));
        out
    });
    Ok(())
}

fn parse_log(field: &Field, s: &str) -> Result<Elem> {
    if s.trim().eq_ignore_ascii_case("zero") {
        return Ok(Elem::ZERO);
    }
    let k: i64 = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("{s:?} is neither a discrete log nor `zero`")))?;
    Ok(field.alpha_pow(k))
}

fn cmd_kloosterman(g: &Global, m: u32, scan: bool, a: Option<&str>, b: Option<&str>) -> Result<()> {
    let field = Field::new(m)?;
    if scan {
        let r = charsums::kloosterman_bound_scan(&field, g.force, g.workers)?;
        let value = serde_json::to_value(&r).expect("report serializes");
        emit(g, value, || {
            format!(
                "m = {}: max K = {} at (a, b) = ({}, {}), bound {}, gap {}, {}\n",
                r.m,
                r.max,
                r.argmax.0,
                r.argmax.1,
                r.bound,
                r.gap,
                if r.pass { "pass" } else { "fail" }
            )
        });
        return Ok(());
    }
    let (a, b) = (
        parse_log(&field, a.unwrap_or("zero"))?,
        parse_log(&field, b.unwrap_or("zero"))?,
    );
    let k = charsums::kloosterman(&field, a, b);
    let weight = if m % 2 == 1 && !(a.is_zero() && b.is_zero()) {
        Some(charsums::kloosterman_weight_bridge(&field, a, b)?)
    } else {
        None
    };
    let mut obj = Map::new();
    obj.insert("m".into(), m.into());
    obj.insert("a".into(), a.value().into());
    obj.insert("b".into(), b.value().into());
    obj.insert("value".into(), k.into());
    if let Some(w) = weight {
        obj.insert("weight".into(), w.into());
    }
    emit(g, Value::Object(obj), || match weight {
        Some(w) => format!("K = {k}\nweight = {w}\n"),
        None => format!("K = {k}\n"),
    });
    Ok(())
}

fn cmd_gauss(g: &Global, s: u32) -> Result<()> {
    let v: EisensteinInt = charsums::gauss_quadratic(s)?;
    let mut obj = Map::new();
    obj.insert("s".into(), s.into());
    obj.insert("a".into(), v.a.into());
    if !v.is_real() {
        obj.insert("b".into(), v.b.into());
    }
    emit(g, Value::Object(obj), || format!("{v}\n"));
    Ok(())
}

fn cmd_verify(g: &Global, scope: Scope, max_m: u32) -> Result<()> {
    let opts = VerifyOptions {
        scope,
        max_m,
        force: g.force,
        workers: g.workers,
    };
    let report = verify::run(&opts)?;
    let value = serde_json::to_value(&report).expect("report serializes");
    emit(g, value, || {
        let mut out = String::new();
        for r in &report.records {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            out.push_str(&format!(
                "{tag} {}: expected {}; actual {} ({} ms)\n",
                r.id, r.expected, r.actual, r.runtime_ms
            ));
        }
        let failed = report.failures().count();
        out.push_str(&format!(
            "{} records, {failed} failed: {}\n",
            report.records.len(),
            if report.pass { "pass" } else { "fail" }
        ));
        out
    });
    if report.pass {
        Ok(())
    } else {
        Err(Error::Verification(format!(
            "{} check(s) failed",
            report.failures().count()
        )))
    }
}

fn run(cli: Cli) -> Result<()> {
    let g = &cli.global;
    match &cli.command {
        Command::Field { m, modulus } => cmd_field(g, *m, modulus.as_deref()),
        Command::Cosets { m, top, verbose } => cmd_cosets(g, *m, *top, *verbose),
        Command::Code(args) => cmd_code(g, args),
        Command::Kloosterman { m, scan, a, b } => cmd_kloosterman(g, *m, *scan, a.as_deref(), b.as_deref()),
        Command::Gauss { s } => cmd_gauss(g, *s),
        Command::Verify { scope, max_m } => cmd_verify(g, *scope, *max_m),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
