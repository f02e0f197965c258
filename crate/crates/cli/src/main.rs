mod checks;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orthocount::brute::{
    build_group, check_strongly_sigma_real, count_involutions, count_twisted_involutions_sp, Coset, MAX_BRUTE_ORDER,
};
use orthocount::degree_sums::{
    default_config, fgs_involution_series, identity_sides, GroupSpec, InvolutionKind, IDENTITY_NAMES, MAX_FIELD,
    MAX_RANK,
};
use orthocount::ffpoly::prime_power;
use orthocount::series::{GradedSeries, TruncatedSeries};
use orthocount::symbols::{series_g_sum, series_r_sum, series_t_sum, series_w_sum};
use orthocount::Sign;
use serde_json::json;

use report::{Meta, Report};

/// Exact degree sums and involution counts for finite orthogonal and symplectic groups.
#[derive(Parser, Debug)]
#[command(name = "orthocount", version)]
struct Cli {
    /// Worker threads (default: logical processors).
    #[arg(long, global = true, env = "ORTHOCOUNT_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Format {
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    #[arg(long)]
    tsv: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check identities from the registry.
    Verify {
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// Identity names (comma separated or repeated).
        #[arg(long, value_delimiter = ',')]
        id: Vec<String>,
        /// Field sizes; each identity's defaults when omitted.
        #[arg(long, value_delimiter = ',')]
        q: Vec<u32>,
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        format: Format,
    },
    /// Print the exact coefficients of a series.
    Expand {
        #[arg(long)]
        series: SeriesName,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Brute-force computations on explicit matrix groups.
    Brute {
        #[command(subcommand)]
        action: BruteAction,
    },
    /// Full cross-check matrix.
    Report {
        #[arg(long, default_value_t = 3)]
        max_n: u32,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        q: Vec<u32>,
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[arg(long)]
        skip_brute: bool,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
enum SeriesName {
    T,
    G,
    R,
    W,
    #[value(name = "fgs-O")]
    FgsO,
    #[value(name = "fgs-SO")]
    FgsSO,
    #[value(name = "fgs-OminusSO")]
    FgsOMinusSO,
    #[value(name = "genfunO-rhs")]
    GenfunORhs,
    #[value(name = "genfunSO-rhs")]
    GenfunSORhs,
    #[value(name = "euler-rhs")]
    EulerRhs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
enum Kind {
    O,
    SO,
    Sp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CosetArg {
    All,
    So,
    OMinusSo,
}

#[derive(Args, Debug, Clone, Copy)]
struct GroupArgs {
    /// Matrix size 2n.
    #[arg(long)]
    dim: u32,
    #[arg(long)]
    q: u32,
}

#[derive(Subcommand, Debug)]
enum BruteAction {
    /// Count g with g^2 = 1 in a group or coset.
    CountInvolutions {
        #[arg(long, default_value = "O")]
        kind: Kind,
        #[arg(long = "type", value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Option<Sign>,
        #[arg(long, default_value = "all")]
        coset: CosetArg,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        json: bool,
    },
    /// Count g in Sp with y g y^-1 = g^-1, y = diag(I, -I), q odd.
    TwistedSp {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check that every element of SO is inverted by an involution outside SO.
    SigmaReal {
        #[arg(long = "type", value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Sign,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        json: bool,
    },
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" | "plus" => Ok(Sign::Plus),
        "-" | "minus" => Ok(Sign::Minus),
        _ => Err(format!("expected + or -, got `{s}`")),
    }
}

enum Failure {
    Usage(String),
    Check,
}

type Outcome = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn check_q(q: u32) -> Outcome {
    if prime_power(q).is_none() || q > MAX_FIELD {
        return Err(usage(format!("q = {q} is not a prime power up to {MAX_FIELD}")));
    }
    Ok(())
}

/// Largest truncation order for series built from symbol sums.
const MAX_ORDER: usize = 24;

fn check_order(order: usize, limit: usize) -> Outcome {
    if order > limit {
        return Err(usage(format!("order {order} exceeds {limit}")));
    }
    Ok(())
}

/// Identities whose sides involve degree sums are limited to rank `MAX_RANK`.
fn order_limit(name: &str) -> usize {
    match name {
        "genfun-O" | "genfun-SO" | "indicators-O-even" | "indicators-SO-even" | "sp-chain" => MAX_RANK as usize,
        _ => MAX_ORDER,
    }
}

fn emit(report: &Report, format: Format) -> Outcome {
    if format.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_tsv());
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn verify(all: bool, ids: Vec<String>, qs: Vec<u32>, order: Option<usize>, format: Format) -> Outcome {
    let names: Vec<String> = if all {
        IDENTITY_NAMES.iter().map(|s| s.to_string()).collect()
    } else if ids.is_empty() {
        return Err(usage("pass --all or --id NAME"));
    } else {
        ids
    };
    for &q in &qs {
        check_q(q)?;
    }
    let mut records = Vec::new();
    for name in &names {
        let config = default_config(name).map_err(usage)?;
        let order = order.unwrap_or(config.order);
        check_order(order, order_limit(name))?;
        let qs = if qs.is_empty() { config.qs } else { qs.clone() };
        records.extend(checks::identity_records(std::slice::from_ref(name), &qs, order));
    }
    let meta =
        Meta { command: "verify".into(), qs, order, max_n: None, max_brute_order: MAX_BRUTE_ORDER, skip_brute: true };
    emit(&Report::new(meta, records), format)
}

enum Expanded {
    Plain(TruncatedSeries),
    Graded(GradedSeries),
}

fn expand_series(name: SeriesName, q: u32, order: usize) -> Result<Expanded, Failure> {
    let fgs = |kind| fgs_involution_series(kind, q, order).map(Expanded::Graded).map_err(usage);
    let rhs = |id| identity_sides(id, q, order).map(|(_, r)| Expanded::Plain(r.total())).map_err(usage);
    match name {
        SeriesName::T => Ok(Expanded::Plain(series_t_sum(q, order))),
        SeriesName::G => Ok(Expanded::Plain(series_g_sum(q, order))),
        SeriesName::R => Ok(Expanded::Plain(series_r_sum(q, order))),
        SeriesName::W => Ok(Expanded::Plain(series_w_sum(q, order))),
        SeriesName::FgsO => fgs(InvolutionKind::orthogonal_for(q)),
        SeriesName::FgsSO => fgs(InvolutionKind::SO),
        SeriesName::FgsOMinusSO => fgs(InvolutionKind::OMinusSO),
        SeriesName::GenfunORhs => rhs("genfun-O"),
        SeriesName::GenfunSORhs => rhs("genfun-SO"),
        SeriesName::EulerRhs => rhs("euler"),
    }
}

fn strings(f: &TruncatedSeries) -> Vec<String> {
    f.coeffs().iter().map(|c| c.to_string()).collect()
}

fn expand(name: SeriesName, q: u32, order: usize, format: Format) -> Outcome {
    check_q(q)?;
    check_order(order, MAX_ORDER)?;
    let series = expand_series(name, q, order)?;
    let label = name.to_possible_value().expect("named").get_name().to_string();
    if format.json {
        let body = match &series {
            Expanded::Plain(f) => json!({ "series": label, "q": q, "order": order, "coefficients": strings(f) }),
            Expanded::Graded(g) => json!({
                "series": label, "q": q, "order": order,
                "plus": strings(&g.plus), "minus": strings(&g.minus),
            }),
        };
        println!("{}", serde_json::to_string_pretty(&body).expect("serializable"));
        return Ok(());
    }
    match &series {
        Expanded::Plain(f) => {
            println!("n\tcoefficient");
            for (i, c) in strings(f).iter().enumerate() {
                println!("{i}\t{c}");
            }
        }
        Expanded::Graded(g) => {
            println!("n\tplus\tminus");
            for (i, (a, b)) in strings(&g.plus).iter().zip(strings(&g.minus)).enumerate() {
                println!("{i}\t{a}\t{b}");
            }
        }
    }
    Ok(())
}

fn rank_of(group: GroupArgs) -> Result<u32, Failure> {
    check_q(group.q)?;
    if group.dim == 0 || group.dim % 2 == 1 {
        return Err(usage(format!("dimension must be even and positive, got {}", group.dim)));
    }
    Ok(group.dim / 2)
}

fn print_count(json: bool, spec: &GroupSpec, what: &str, count: u64) {
    if json {
        println!("{}", json!({ "group": spec.to_string(), "count": what, "value": count }));
    } else {
        println!("{count}");
    }
}

fn brute(action: BruteAction) -> Outcome {
    match action {
        BruteAction::CountInvolutions { kind, sign, coset, group, json } => {
            let n = rank_of(group)?;
            let spec = match (kind, sign) {
                (Kind::Sp, None) => GroupSpec::symplectic(n, group.q),
                (Kind::Sp, Some(_)) => return Err(usage("--type does not apply to Sp")),
                (_, None) => return Err(usage("--type is required for orthogonal groups")),
                (Kind::O, Some(s)) => GroupSpec::orthogonal(n, group.q, s),
                (Kind::SO, Some(s)) => GroupSpec::special_orthogonal(n, group.q, s),
            };
            let (coset, what) = match coset {
                CosetArg::All => (Coset::All, "involutions"),
                CosetArg::So => (Coset::SO, "involutions in SO"),
                CosetArg::OMinusSo => (Coset::OMinusSO, "involutions outside SO"),
            };
            let g = build_group(&spec).map_err(usage)?;
            let count = count_involutions(&g, coset).map_err(usage)?;
            print_count(json, &spec, what, count);
            Ok(())
        }
        BruteAction::TwistedSp { group, json } => {
            let n = rank_of(group)?;
            if group.q % 2 == 0 {
                return Err(usage("twisted-sp needs odd q"));
            }
            let spec = GroupSpec::symplectic(n, group.q);
            let g = build_group(&spec).map_err(usage)?;
            let count = count_twisted_involutions_sp(&g).map_err(usage)?;
            print_count(json, &spec, "twisted involutions", count);
            Ok(())
        }
        BruteAction::SigmaReal { sign, group, json } => {
            let n = rank_of(group)?;
            if n % 2 == 0 {
                return Err(usage(format!("dimension {} is not 2 mod 4", group.dim)));
            }
            let so_spec = GroupSpec::special_orthogonal(n, group.q, sign);
            let o = build_group(&GroupSpec::orthogonal(n, group.q, sign)).map_err(usage)?;
            let so = build_group(&so_spec).map_err(usage)?;
            let r = check_strongly_sigma_real(&so, &o).map_err(usage)?;
            let witnesses: Vec<String> = r.failures.iter().take(10).map(|g| format!("{g:?}")).collect();
            if json {
                println!(
                    "{}",
                    json!({
                        "group": so_spec.to_string(), "passed": r.passed(), "checked": r.checked,
                        "coset_involutions": r.coset_involutions, "failures": r.failures.len(),
                        "witnesses": witnesses,
                    })
                );
            } else {
                println!("{}", if r.passed() { "pass" } else { "fail" });
                println!("checked {} elements against {} involutions outside SO", r.checked, r.coset_involutions);
                for w in &witnesses {
                    println!("not inverted: {w}");
                }
            }
            if r.passed() {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
    }
}

fn report(max_n: u32, qs: Vec<u32>, order: usize, skip_brute: bool, format: Format) -> Outcome {
    for &q in &qs {
        check_q(q)?;
    }
    if max_n == 0 || max_n > MAX_RANK {
        return Err(usage(format!("--max-n must be between 1 and {MAX_RANK}")));
    }
    let names: Vec<String> = IDENTITY_NAMES.iter().map(|s| s.to_string()).collect();
    for name in &names {
        check_order(order, order_limit(name))?;
    }
    let mut records = checks::identity_records(&names, &qs, order);
    records.extend(checks::group_records(max_n, &qs, skip_brute));
    let meta = Meta {
        command: "report".into(),
        qs,
        order: Some(order),
        max_n: Some(max_n),
        max_brute_order: MAX_BRUTE_ORDER,
        skip_brute,
    };
    emit(&Report::new(meta, records), format)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match cli.command {
        Command::Verify { all, id, q, order, format } => verify(all, id, q, order, format),
        Command::Expand { series, q, order, format } => expand(series, q, order, format),
        Command::Brute { action } => brute(action),
        Command::Report { max_n, q, order, skip_brute, format } => report(max_n, q, order, skip_brute, format),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
