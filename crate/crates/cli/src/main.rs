//! `dyckl`: counts, series, bijections and verification suites.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 bad flags or unparsable
//! word, 3 oracle bound exceeded, 4 not a prime, 5 input outside a map's
//! domain.

mod output;

use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::Value;

use dyckl::bijections::{self, OneReturnPreimage, PairPreimage, TwoReturnPreimage, Type4Preimage};
use dyckl::counting::{CountQuery, CountTarget};
use dyckl::series::{self, TruncatedSeries};
use dyckl::verify::{self, Suite};
use dyckl::{DyckWord, Error, MotzkinWord, Oracle, OracleBounds, StarWord};

use output::{int, opt_int, text, Format, Table};

#[derive(Parser, Debug)]
#[command(
    name = "dyckl",
    version,
    about = "Dyck paths counted by the Catalan-word statistic L"
)]
struct Cli {
    /// Output format for data.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,
    /// Largest semilength enumerated by brute force.
    #[arg(long, env = "DYCKL_MAX_ORACLE_N", default_value_t = 12, global = true)]
    max_oracle_n: usize,
    /// Largest n for Catalan words of length 3n.
    #[arg(long, env = "DYCKL_MAX_CATALAN_N", default_value_t = 5, global = true)]
    max_catalan_n: usize,
    /// Largest permutation length.
    #[arg(long, env = "DYCKL_MAX_PERM_M", default_value_t = 9, global = true)]
    max_perm_m: usize,
    /// Worker threads for enumeration; 0 uses every core.
    #[arg(long, env = "DYCKL_WORKERS", default_value_t = 0, global = true)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count paths by L, by a single star column, or the weighted sum.
    Count(CountArgs),
    /// Coefficients of a generating function.
    Series(SeriesArgs),
    /// Apply a bijection or its inverse.
    #[command(subcommand)]
    Bijection(BijectionOp),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("target").required(true).args(["k", "rs", "sum_eq1"])))]
struct CountArgs {
    /// Paths with L(D) = K.
    #[arg(long)]
    k: Option<u64>,
    /// Paths whose only star column is (R, S).
    #[arg(long, num_args = 2, value_names = ["R", "S"])]
    rs: Option<Vec<usize>>,
    /// Sum of L(D) 2^returns(D) over all paths.
    #[arg(long)]
    sum_eq1: bool,
    /// Semilengths: `N`, `A..B` or `A..=B` (both inclusive).
    #[arg(long, value_parser = parse_range)]
    n: RangeInclusive<usize>,
    /// Skip the brute-force column.
    #[arg(long)]
    no_oracle: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("gf").required(true).args(["l2", "lp", "rs", "motzkin", "ballot"])))]
struct SeriesArgs {
    #[arg(long)]
    l2: bool,
    /// An odd prime.
    #[arg(long, value_name = "P")]
    lp: Option<u64>,
    #[arg(long, num_args = 2, value_names = ["R", "S"])]
    rs: Option<Vec<usize>>,
    #[arg(long)]
    motzkin: bool,
    /// Position of the first down step.
    #[arg(long, value_name = "K")]
    ballot: Option<usize>,
    #[arg(long, default_value_t = 10)]
    order: usize,
}

#[derive(Subcommand, Debug)]
enum BijectionOp {
    /// Dyck word to star word.
    ToStar { word: String },
    /// Star word to Dyck word.
    FromStar { word: String },
    /// Cut a ballot path into (P_r, P_s).
    SplitBallot {
        #[arg(long)]
        p: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Single star column, two returns.
    Rshit2 {
        #[arg(long)]
        p: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Single star column, one return.
    Rshit1 {
        #[arg(long)]
        m: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
    /// Two (1,1) star columns, x1 not in {y2, y2+1}.
    #[command(name = "l4-t1")]
    L4T1 {
        #[arg(long)]
        m: String,
        #[arg(long)]
        j1: usize,
        #[arg(long)]
        j2: usize,
    },
    /// Two (1,1) star columns, x1 = 1 and y2 = 0.
    #[command(name = "l4-t2")]
    L4T2 {
        #[arg(long)]
        m: String,
    },
    /// Two (1,1) star columns, x1 = y2 + 1 >= 2.
    #[command(name = "l4-t3")]
    L4T3 {
        #[arg(long)]
        m: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        j: usize,
    },
    /// Two (1,1) star columns, x1 = y2.
    #[command(name = "l4-t4")]
    L4T4 {
        #[arg(long, required_unless_present = "singleton")]
        m: Option<String>,
        #[arg(long, required_unless_present = "singleton")]
        p: Option<String>,
        #[arg(long, required_unless_present = "singleton")]
        j: Option<usize>,
        /// The semilength-3 path with star word `**`.
        #[arg(long, conflicts_with_all = ["m", "p", "j"])]
        singleton: bool,
    },
    /// Decide from a two-star word whether both star columns are (1,1).
    DmCheck { word: String },
    /// Invert one of the maps on a Dyck word.
    Inverse {
        #[arg(value_parser = ["rshit2", "rshit1", "l4-t1", "l4-t2", "l4-t3", "l4-t4"])]
        map: String,
        word: String,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_parser = ["all", "figures", "bijections", "eq1", "gf"])]
    suite: String,
    /// Size override for the chosen suite.
    #[arg(long)]
    n: Option<usize>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidCharacter { .. }
            | Error::PrefixViolation { .. }
            | Error::UnbalancedWord(_) => 2,
            Error::OracleBoundExceeded { .. } => 3,
            Error::NotPrime(_) => 4,
            _ => 5,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn dyck(s: &str) -> Result<DyckWord, Failure> {
    Ok(DyckWord::parse(s)?)
}

fn motzkin(s: &str) -> Result<MotzkinWord, Failure> {
    Ok(MotzkinWord::parse(s)?)
}

fn star(s: &str) -> Result<StarWord, Failure> {
    Ok(StarWord::parse(s)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bounds = OracleBounds {
        dyck_n: cli.max_oracle_n,
        catalan_n: cli.max_catalan_n,
        permutation_m: cli.max_perm_m,
        ..OracleBounds::default()
    };
    let oracle = Oracle::new(bounds).with_workers(cli.workers);
    match run(&cli, &oracle) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli, oracle: &Oracle) -> Result<(String, u8), Failure> {
    match &cli.command {
        Command::Count(args) => Ok((count(args, oracle)?.render(cli.format, false), 0)),
        Command::Series(args) => Ok((series_table(args)?.render(cli.format, false), 0)),
        Command::Bijection(op) => Ok((bijection(op)?.render(cli.format, true), 0)),
        Command::Verify(args) => verify_suite(args, cli.format, oracle),
    }
}

fn count(args: &CountArgs, oracle: &Oracle) -> Result<Table, Failure> {
    let target = match (&args.k, &args.rs) {
        (Some(k), _) => CountTarget::L(*k),
        (_, Some(rs)) => CountTarget::Rs(rs[0], rs[1]),
        _ => CountTarget::WeightedSum,
    };
    let mut table = Table::new(vec![
        "n",
        "target",
        "closed_form",
        "gf",
        "oracle",
        "agree",
        "note",
    ]);
    for n in args.n.clone() {
        let query = CountQuery::new(n, target);
        let reachable = match target {
            CountTarget::WeightedSum => 3 * n <= oracle.bounds.permutation_m,
            _ => n <= oracle.bounds.dyck_n,
        };
        let report = query.report(oracle, reachable && !args.no_oracle)?;
        if report.closed_form.is_none() && report.oracle.is_none() {
            return Err(Error::OracleBoundExceeded {
                what: "Dyck semilength (no closed form for this target)",
                requested: n,
                bound: oracle.bounds.dyck_n,
            }
            .into());
        }
        let note = match (&report.closed_form, report.brute_forced) {
            (None, _) => "no closed form implemented".to_string(),
            (Some(_), Some(part)) => format!("{part} enumerated by brute force"),
            _ => String::new(),
        };
        table.push(vec![
            int(n),
            text(target),
            opt_int(report.closed_form.as_ref()),
            opt_int(report.gf.as_ref()),
            opt_int(report.oracle.as_ref()),
            Value::Bool(report.agree()),
            text(note),
        ]);
    }
    Ok(table)
}

fn series_table(args: &SeriesArgs) -> Result<Table, Failure> {
    let order = args.order;
    let s: TruncatedSeries = if args.l2 {
        series::gf_l2(order)
    } else if let Some(p) = args.lp {
        series::gf_lp(p, order)?
    } else if let Some(rs) = &args.rs {
        series::gf_rs(rs[0], rs[1], order)?
    } else if args.motzkin {
        series::motzkin_gf(order)
    } else if let Some(k) = args.ballot {
        series::ballot_gf(k, order)?
    } else {
        return Err(usage("choose one generating function"));
    };
    let mut table = Table::new(vec!["n", "coefficient"]);
    for (n, c) in s.coeffs().iter().enumerate() {
        table.push(vec![int(n), int(c)]);
    }
    Ok(table)
}

fn stars_of(w: &StarWord) -> Value {
    Value::Array(
        w.star_context()
            .stars
            .iter()
            .map(|s| int(s.position))
            .collect(),
    )
}

/// One output row: the named fields, then the Dyck word with its star word,
/// `L`, returns and star positions.
fn certified(
    mut header: Vec<&'static str>,
    mut row: Vec<Value>,
    d: &DyckWord,
) -> Result<Table, Failure> {
    header.extend(["dyck_word", "star_word", "L", "returns", "stars"]);
    let (w, stars) = match bijections::to_star_word(d) {
        Ok(w) => (text(&w), stars_of(&w)),
        Err(Error::EmptyPath) => (Value::Null, Value::Array(Vec::new())),
        Err(e) => return Err(e.into()),
    };
    row.extend([text(d), w, int(d.l_statistic()), int(d.returns()), stars]);
    let mut t = Table::new(header);
    t.push(row);
    Ok(t)
}

fn bijection(op: &BijectionOp) -> Result<Table, Failure> {
    match op {
        BijectionOp::ToStar { word } => certified(vec![], vec![], &dyck(word)?),
        BijectionOp::FromStar { word } => {
            certified(vec![], vec![], &bijections::from_star_word(&star(word)?))
        }
        BijectionOp::SplitBallot { p, r, s } => {
            let pair = bijections::split_ballot(&motzkin(p)?, *r, *s)?;
            let mut t = Table::new(vec!["p_r", "p_s", "r", "s"]);
            t.push(vec![text(&pair.p_r), text(&pair.p_s), int(r), int(s)]);
            Ok(t)
        }
        BijectionOp::Rshit2 { p, r, s } => {
            let d = bijections::rs_two_returns_forward(&motzkin(p)?, *r, *s)?;
            certified(vec![], vec![], &d)
        }
        BijectionOp::Rshit1 { m, p, j, r, s } => {
            let d = bijections::rs_one_return_forward(&motzkin(m)?, &motzkin(p)?, *j, *r, *s)?;
            certified(vec![], vec![], &d)
        }
        BijectionOp::L4T1 { m, j1, j2 } => certified(
            vec![],
            vec![],
            &bijections::l4_type1_forward(&motzkin(m)?, *j1, *j2)?,
        ),
        BijectionOp::L4T2 { m } => {
            certified(vec![], vec![], &bijections::l4_type2_forward(&motzkin(m)?))
        }
        BijectionOp::L4T3 { m, p, j } => certified(
            vec![],
            vec![],
            &bijections::l4_type3_forward(&motzkin(m)?, &motzkin(p)?, *j)?,
        ),
        BijectionOp::L4T4 { m, p, j, singleton } => {
            let d = if *singleton {
                bijections::l4_type4_singleton()
            } else {
                let (m, p, j) = match (m, p, j) {
                    (Some(m), Some(p), Some(j)) => (m, p, *j),
                    _ => return Err(usage("l4-t4 needs --m, --p and --j, or --singleton")),
                };
                bijections::l4_type4_forward(&motzkin(m)?, &motzkin(p)?, j)?
            };
            certified(vec![], vec![], &d)
        }
        BijectionOp::DmCheck { word } => {
            let w = star(word)?;
            let verdict = bijections::dm_check(&w)?;
            let mut t = Table::new(vec!["star_word", "both_columns_1_1"]);
            t.push(vec![text(&w), Value::Bool(verdict)]);
            Ok(t)
        }
        BijectionOp::Inverse { map, word } => inverse(map, &dyck(word)?),
    }
}

fn inverse(map: &str, d: &DyckWord) -> Result<Table, Failure> {
    match map {
        "rshit2" => {
            let TwoReturnPreimage { p, r, s } = bijections::rs_two_returns_inverse(d)?;
            certified(vec!["p", "r", "s"], vec![text(p), int(r), int(s)], d)
        }
        "rshit1" => {
            let OneReturnPreimage { m, p, j, r, s } = bijections::rs_one_return_inverse(d)?;
            certified(
                vec!["m", "p", "j", "r", "s"],
                vec![text(m), text(p), int(j), int(r), int(s)],
                d,
            )
        }
        "l4-t1" => {
            let pre = bijections::l4_type1_inverse(d)?;
            certified(
                vec!["m", "j1", "j2"],
                vec![text(pre.m), int(pre.j1), int(pre.j2)],
                d,
            )
        }
        "l4-t2" => {
            let m = bijections::l4_type2_inverse(d)?;
            certified(vec!["m"], vec![text(m)], d)
        }
        "l4-t3" => {
            let PairPreimage { m, p, j } = bijections::l4_type3_inverse(d)?;
            certified(vec!["m", "p", "j"], vec![text(m), text(p), int(j)], d)
        }
        "l4-t4" => match bijections::l4_type4_inverse(d)? {
            Type4Preimage::Singleton => certified(
                vec!["m", "p", "j", "singleton"],
                vec![Value::Null, Value::Null, Value::Null, Value::Bool(true)],
                d,
            ),
            Type4Preimage::Pair(PairPreimage { m, p, j }) => certified(
                vec!["m", "p", "j", "singleton"],
                vec![text(m), text(p), int(j), Value::Bool(false)],
                d,
            ),
        },
        other => Err(usage(format!("unknown map {other}"))),
    }
}

fn verify_suite(
    args: &VerifyArgs,
    format: Format,
    oracle: &Oracle,
) -> Result<(String, u8), Failure> {
    let suite =
        Suite::parse(&args.suite).ok_or_else(|| usage(format!("unknown suite {}", args.suite)))?;
    let checks = verify::run_suite(suite, args.n, oracle)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    let out = match format {
        Format::Csv => {
            let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
            s.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
            s
        }
        Format::Json => {
            let mut t = Table::new(vec!["name", "passed", "detail"]);
            for c in &checks {
                t.push(vec![text(&c.name), Value::Bool(c.passed), text(&c.detail)]);
            }
            t.render(Format::Json, false)
        }
    };
    Ok((out, u8::from(failed > 0)))
}
