//! Command-line driver: character tables, hook listings, verification
//! sweeps and the pair-formula comparison.
//!
//! Every command builds a document in memory and renders it as JSON or
//! CSV; nothing in the output depends on the thread count.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use akregev::combin::{
    count_semistandard, count_standard_multitableaux, list_hook_multipartitions, list_multipartitions,
    MultiPartition,
};
use akregev::regev::{evaluate, hook_sum_rhs, pair_regev_rhs, wreath_hook_value, CharSpec, Specialization};
use akregev::ring::{expand_at_q1, specialize_to_group, CycloRing};
use akregev::superrep::char_value_oracle;
use akregev::verify::{run_suite, Bounds, Suite};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] akregev::Error),
    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),
    #[error("writing csv: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "akregev", version, about = "Character values of the permutation super representation of Ariki-Koike algebras")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character values on g_mu for every multipartition of n.
    Chars(CharsArgs),
    /// Hook multipartitions with semistandard and standard tableau counts.
    Hooks(DimArgs),
    /// Run verification sweeps.
    Verify(VerifyArgs),
    /// Evaluate the type B pair formula next to the traced values.
    ComparePairRegev(CompareArgs),
}

#[derive(Debug, Args)]
pub struct DimArgs {
    /// Number of colors (default: length of --k, or 1).
    #[arg(long)]
    pub m: Option<usize>,
    /// Even dimensions per color, comma separated (default: all ones).
    #[arg(long, value_delimiter = ',')]
    pub k: Option<Vec<usize>>,
    /// Odd dimensions per color, comma separated (default: all ones).
    #[arg(long, value_delimiter = ',')]
    pub l: Option<Vec<usize>>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CharsArgs {
    #[command(flatten)]
    pub dims: DimArgs,
    /// A single multipartition, e.g. "[[2,1],[1]]".
    #[arg(long)]
    pub mu: Option<String>,
    /// generic | group | t2 | t2:D
    #[arg(long, default_value = "generic")]
    pub spec: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name or "all".
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Largest size swept.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Largest number of colors swept.
    #[arg(long)]
    pub max_m: Option<usize>,
    /// Sweep this number of colors only.
    #[arg(long)]
    pub m: Option<usize>,
    /// Sweep this size only.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    /// Truncation order of the (1-q)-adic expansion.
    #[arg(long, default_value_t = 2)]
    pub order: usize,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub code: i32,
}

struct Dims {
    k: Vec<usize>,
    l: Vec<usize>,
}

fn resolve_dims(d: &DimArgs) -> Result<Dims, CliError> {
    let m = d
        .m
        .or(d.k.as_ref().map(Vec::len))
        .or(d.l.as_ref().map(Vec::len))
        .unwrap_or(1);
    if m == 0 {
        return Err(CliError::Invalid("--m must be at least 1".into()));
    }
    let k = d.k.clone().unwrap_or_else(|| vec![1; m]);
    let l = d.l.clone().unwrap_or_else(|| vec![1; m]);
    if k.len() != m || l.len() != m {
        return Err(CliError::Invalid(format!(
            "--k and --l must have m = {m} entries (got {} and {})",
            k.len(),
            l.len()
        )));
    }
    Ok(Dims { k, l })
}

fn count_json(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| Value::from(x.to_string()), Value::from)
}

fn render(doc: &Value, header: &[&str], records: &[Vec<String>], format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("documents are plain JSON");
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header)?;
            for r in records {
                w.write_record(r)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
        }
    }
}

pub fn run_chars(args: &CharsArgs, format: Format) -> Result<Output, CliError> {
    let dims = resolve_dims(&args.dims)?;
    let spec_tag: Specialization = args.spec.parse()?;
    let m = dims.k.len();
    let (n, mus) = match &args.mu {
        Some(text) => {
            let mu: MultiPartition = text.parse()?;
            if mu.m() != m {
                return Err(CliError::Invalid(format!("--mu has {} components, expected {m}", mu.m())));
            }
            if let Some(n) = args.dims.n.filter(|&n| n != mu.size()) {
                return Err(CliError::Invalid(format!("--mu has size {}, but --n is {n}", mu.size())));
            }
            (mu.size(), vec![mu])
        }
        None => {
            let n = args
                .dims
                .n
                .ok_or_else(|| CliError::Invalid("chars needs --n or --mu".into()))?;
            (n, list_multipartitions(m, n))
        }
    };
    let spec = CharSpec::new(dims.k.clone(), dims.l.clone(), n, spec_tag)?;
    let values = mus
        .par_iter()
        .map(|mu| evaluate::<BigInt>(mu, &spec))
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<Value> = mus
        .iter()
        .zip(&values)
        .map(|(mu, v)| json!({ "mu": mu.to_json(), "value": v.to_json(), "text": v.to_string() }))
        .collect();
    let records: Vec<Vec<String>> = mus.iter().zip(&values).map(|(mu, v)| vec![mu.to_string(), v.to_string()]).collect();
    let doc = json!({ "config": { "command": "chars", "spec": spec.to_json() }, "rows": rows });
    Ok(Output {
        body: render(&doc, &["mu", "value"], &records, format)?,
        code: EXIT_OK,
    })
}

pub fn run_hooks(args: &DimArgs, format: Format) -> Result<Output, CliError> {
    let dims = resolve_dims(args)?;
    let n = args.n.ok_or_else(|| CliError::Invalid("hooks needs --n".into()))?;
    let hooks = list_hook_multipartitions(n, &dims.k, &dims.l)?;
    let counts = hooks
        .par_iter()
        .map(|lam| Ok((count_semistandard(lam, &dims.k, &dims.l)?, count_standard_multitableaux(lam))))
        .collect::<Result<Vec<_>, akregev::Error>>()?;
    let total: u128 = counts.iter().map(|(s, f)| s * f).sum();
    let letters: usize = dims.k.iter().chain(&dims.l).sum();
    let power = (letters as u128).pow(n as u32);
    let rows: Vec<Value> = hooks
        .iter()
        .zip(&counts)
        .map(|(lam, (s, f))| json!({ "lambda": lam.to_json(), "semistandard": count_json(*s), "standard": count_json(*f) }))
        .collect();
    let mut records: Vec<Vec<String>> = hooks
        .iter()
        .zip(&counts)
        .map(|(lam, (s, f))| vec![lam.to_string(), s.to_string(), f.to_string()])
        .collect();
    records.push(vec!["total".into(), total.to_string(), power.to_string()]);
    let doc = json!({
        "config": { "command": "hooks", "m": dims.k.len(), "k": dims.k, "l": dims.l, "n": n },
        "rows": rows,
        "footer": {
            "sum": count_json(total),
            "dimension_power": count_json(power),
            "status": if total == power { "pass" } else { "fail" },
        },
    });
    Ok(Output {
        body: render(&doc, &["lambda", "semistandard", "standard"], &records, format)?,
        code: if total == power { EXIT_OK } else { EXIT_FAILED },
    })
}

pub fn run_verify(args: &VerifyArgs, format: Format) -> Result<Output, CliError> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse()?]
    };
    let mut reports = Vec::new();
    for suite in suites {
        let mut b: Bounds = suite.default_bounds();
        if let Some(x) = args.max_n {
            b.max_n = x;
        }
        if let Some(x) = args.max_m {
            b.max_m = x;
        }
        b.fixed_m = args.m;
        b.fixed_n = args.n;
        reports.push(run_suite(suite, &b));
    }
    let ok = reports.iter().all(|r| r.ok());
    let records: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.suite.name().to_string(),
                r.checked.to_string(),
                r.passed.to_string(),
                if r.ok() { "pass" } else { "fail" }.to_string(),
                r.counterexample
                    .as_ref()
                    .map(|c| format!("{} expected {} got {}", c.case, c.expected, c.actual))
                    .unwrap_or_default(),
            ]
        })
        .collect();
    let doc = json!({
        "config": { "command": "verify", "suite": args.suite, "max_n": args.max_n, "max_m": args.max_m, "m": args.m, "n": args.n },
        "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        "status": if ok { "pass" } else { "fail" },
    });
    Ok(Output {
        body: render(&doc, &["suite", "checked", "passed", "status", "counterexample"], &records, format)?,
        code: if ok { EXIT_OK } else { EXIT_FAILED },
    })
}

pub fn run_compare_pair_regev(args: &CompareArgs, format: Format) -> Result<Output, CliError> {
    if args.order == 0 {
        return Err(CliError::Invalid("--order must be at least 1".into()));
    }
    let mus: Vec<MultiPartition> = (1..=args.max_n).flat_map(|n| list_multipartitions(2, n)).collect();
    let ones = [1usize, 1];
    let ring = CycloRing::<BigInt>::new(2)?;
    let rows = mus
        .par_iter()
        .map(|mu| -> Result<Value, akregev::Error> {
            let traced = char_value_oracle::<BigInt>(mu, &ones, &ones)?;
            let traced_series = expand_at_q1(&traced.set_u_to_one(1), args.order)?;
            let traced_group = specialize_to_group(&traced, &ring)?;
            let hook_sum = hook_sum_rhs::<BigInt>(mu, 2, args.order)?.map_coeffs(|c| c.set_u_to_one(1));
            let (literal, literal_group) = pair_regev_rhs::<BigInt>(mu, args.order)?;
            let wreath = wreath_hook_value::<BigInt>(mu, 2)?;
            let group_value = traced_group.as_integer();
            Ok(json!({
                "mu": mu.to_json(),
                "traced": traced_series.to_string(),
                "hook_sum": hook_sum.to_string(),
                "literal": literal.to_string(),
                "series_match": literal == traced_series,
                "traced_group": group_value.as_ref().map(ToString::to_string),
                "wreath": wreath.to_string(),
                "literal_group": literal_group.to_string(),
                "group_match": group_value.as_ref() == Some(&literal_group),
            }))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let cols = ["mu", "traced", "hook_sum", "literal", "series_match", "traced_group", "wreath", "literal_group", "group_match"];
    let records: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            cols.iter()
                .map(|c| match &r[*c] {
                    Value::String(s) => s.clone(),
                    Value::Null => String::new(),
                    v => v.to_string(),
                })
                .collect()
        })
        .collect();
    let doc = json!({
        "config": { "command": "compare-pair-regev", "max_n": args.max_n, "order": args.order, "u1": 1 },
        "rows": rows,
    });
    Ok(Output {
        body: render(&doc, &cols, &records, format)?,
        code: EXIT_OK,
    })
}

/// Run a parsed command on a pool of `cli.jobs` threads.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(CliError::Invalid("--jobs must be at least 1".into()));
        }
        pool = pool.num_threads(j);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Invalid(format!("thread pool: {e}")))?;
    pool.install(|| match &cli.command {
        Command::Chars(a) => run_chars(a, cli.format),
        Command::Hooks(a) => run_hooks(a, cli.format),
        Command::Verify(a) => run_verify(a, cli.format),
        Command::ComparePairRegev(a) => run_compare_pair_regev(a, cli.format),
    })
}

/// Parse, run and emit; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &out.body),
        None => std::io::stdout().lock().write_all(out.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return EXIT_INVALID;
    }
    if out.code == EXIT_FAILED {
        eprintln!("verification failed");
    }
    out.code
}
