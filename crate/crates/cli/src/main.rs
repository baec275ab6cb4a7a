use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use orbivol::covolume::{
    chi_closed_form_compact, chi_closed_form_noncompact, chi_principal_with,
    chi_unimodular_stabilizer, hyperbolic_volume_at, minimal_bad_places, unimodular_branch_factor,
    ChiValue, GroupSpec, ZetaMode, DEFAULT_NORM_BOUND,
};
use orbivol::exact::{decimal_string, ExactRational, RealInterval};
use orbivol::localdata::{
    lambda_factor, xi_order, DeletedVertex, Form, LocalPlaceData, ParahoricType,
};
use orbivol::numberfields::{bundled_fields, ingest_field_table, FieldDescriptor};
use orbivol::sieve::{
    discriminant_lower_bound, discriminant_ranges, manifold_candidates, render_text, run_sieve,
    SieveConfig,
};
use orbivol::zeta::{dedekind_zeta_negative_with, dedekind_zeta_positive, ZetaOptions};

#[derive(Parser)]
#[command(name = "orbivol", version, about = "Euler characteristics of arithmetic hyperbolic orbifolds")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Field table in JSON Lines; the bundled table when omitted.
    #[arg(long, global = true)]
    fields: Option<PathBuf>,
    #[arg(long, global = true, env = "ORBIVOL_PRECISION_BITS", default_value_t = 256)]
    precision_bits: u32,
    /// Worker threads for the sieve (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Compact,
    Noncompact,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Enclosure,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal Euler characteristics in each even dimension.
    Table2 {
        #[arg(long, default_value_t = 9)]
        max_rank: u32,
        #[arg(long, value_enum, default_value_t = Variant::Both)]
        variant: Variant,
    },
    /// χ of a principal arithmetic subgroup.
    Chi {
        /// Field label, quadratic discriminant, or `Q`.
        #[arg(long)]
        field: String,
        #[arg(long)]
        rank: u32,
        /// Bad place as `q:split:v` or `q:nonsplit:v` (v may be `0,1`);
        /// the minimal admissible set when none is given.
        #[arg(long = "place")]
        places: Vec<String>,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// λ-factors of every maximal type.
    LambdaTable {
        #[arg(long)]
        rank: u32,
        #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 4, 5, 7, 8, 9, 11])]
        q: Vec<u64>,
    },
    /// Discriminant ranges for fields that can carry a 4-manifold with χ ≤ chi-max.
    LemmaBounds {
        #[arg(long, default_value = "24")]
        chi_max: String,
    },
    /// Search for the groups that can contain a 4-manifold with χ ≤ chi-max.
    Sieve {
        #[arg(long, default_value = "24")]
        chi_max: String,
    },
    /// A special value of the Dedekind zeta function.
    Zeta {
        /// Field label, quadratic discriminant, or `Q`.
        #[arg(long)]
        field: String,
        /// A negative odd or positive even integer.
        #[arg(long, allow_hyphen_values = true)]
        arg: i64,
    },
    /// χ of the stabilizer of the unimodular lattice I_{1,2r}.
    Example34 {
        #[arg(long, default_value_t = 9)]
        max_rank: u32,
    },
    /// Hyperbolic volume of an orbifold with the given χ.
    Volume {
        #[arg(long)]
        chi: String,
        #[arg(long)]
        rank: u32,
    },
}

/// Failure classes with their exit codes.
enum Failure {
    Usage(String),
    Incomplete(String),
}

impl From<orbivol::Error> for Failure {
    fn from(e: orbivol::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_rational(s: &str) -> Res<ExactRational> {
    s.parse()
        .map_err(|_| usage(format!("`{s}` is not a rational number")))
}

fn load_fields(path: &Option<PathBuf>) -> Res<Vec<FieldDescriptor>> {
    match path {
        None => Ok(bundled_fields().to_vec()),
        Some(p) => {
            let f = File::open(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            Ok(ingest_field_table(BufReader::new(f))?)
        }
    }
}

fn find_field(table: &[FieldDescriptor], key: &str) -> Res<FieldDescriptor> {
    if key.eq_ignore_ascii_case("q") || key == "1" {
        return Ok(FieldDescriptor::rationals());
    }
    let hit = match key.parse::<u64>() {
        Ok(d) => table
            .iter()
            .find(|f| f.degree() == 2 && *f.discriminant() == d.into()),
        Err(_) => table.iter().find(|f| f.label() == key),
    };
    hit.cloned()
        .ok_or_else(|| usage(format!("no field `{key}` in the table")))
}

fn parse_place(s: &str, rank: u32) -> Res<LocalPlaceData> {
    let bad = || usage(format!("bad place `{s}`, expected q:split|nonsplit:vertex"));
    let mut it = s.splitn(3, ':');
    let q: u64 = it.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
    let form = match it.next().ok_or_else(bad)? {
        "split" => Form::Split,
        "nonsplit" => Form::Nonsplit,
        _ => return Err(bad()),
    };
    let vertex: DeletedVertex = it.next().ok_or_else(bad)?.parse()?;
    Ok(LocalPlaceData::new(q, ParahoricType::new(form, vertex, rank)?)?)
}

fn check_rank(r: u32) -> Res<()> {
    if r < 2 {
        Err(usage(format!("rank must be at least 2, got {r}")))
    } else {
        Ok(())
    }
}

fn approx(q: &ExactRational) -> String {
    decimal_string(q, 6)
}

fn interval_json(iv: &RealInterval) -> Value {
    serde_json::to_value(iv).expect("serializable")
}

fn table2(max_rank: u32, variant: Variant) -> Res<(String, Value)> {
    check_rank(max_rank)?;
    let mut cols: Vec<(&str, fn(u32) -> ExactRational)> = Vec::new();
    if variant != Variant::Noncompact {
        cols.push(("compact", chi_closed_form_compact));
    }
    if variant != Variant::Compact {
        cols.push(("noncompact", chi_closed_form_noncompact));
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    for (name, f) in cols {
        let values: Vec<(u32, ExactRational)> = (2..=max_rank).map(|r| (r, f(r))).collect();
        let min = values.iter().min_by(|a, b| a.1.cmp(&b.1)).map(|(r, _)| *r);
        text.push_str(&format!("{name}\n"));
        for (r, v) in &values {
            let mark = if Some(*r) == min { "  *" } else { "" };
            text.push_str(&format!("  n={:<3} {v}  ≈ {}{mark}\n", 2 * r, approx(v)));
            rows.push(json!({"variant": name, "rank": r, "dimension": 2 * r, "chi": v}));
        }
        if let Some(r) = min {
            text.push_str(&format!("  * smallest among the rows shown (n = {})\n", 2 * r));
        }
    }
    Ok((text, Value::Array(rows)))
}

fn chi_cmd(cli: &Cli, field: &str, rank: u32, places: &[String], mode: Mode) -> Res<(String, Value)> {
    check_rank(rank)?;
    let table = load_fields(&cli.fields)?;
    let k = find_field(&table, field)?;
    let t = if places.is_empty() {
        minimal_bad_places(&k, rank, DEFAULT_NORM_BOUND)?
    } else {
        places
            .iter()
            .map(|p| parse_place(p, rank))
            .collect::<Res<Vec<_>>>()?
    };
    let spec = GroupSpec::new(rank, k, t)?;
    let opts = ZetaOptions {
        precision_bits: cli.precision_bits,
        ..ZetaOptions::default()
    };
    let mode = match mode {
        Mode::Exact => ZetaMode::Exact,
        Mode::Enclosure => ZetaMode::Enclosure,
    };
    let res = chi_principal_with(&spec, mode, &opts)?;
    let mut text = format!(
        "field {}  rank {}  T = [{}]\n",
        spec.field().label(),
        rank,
        spec.bad_places()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    match &res.chi_principal {
        ChiValue::Exact(q) => text.push_str(&format!("chi          {q}  ≈ {}\n", approx(q))),
        ChiValue::Enclosure {
            interval,
            candidate,
        } => {
            text.push_str(&format!("chi          {}\n", interval.to_decimal(30)));
            if let Some(c) = candidate {
                text.push_str(&format!("exact        {c}\n"));
            }
        }
    }
    text.push_str(&format!("index bound  {}\n", res.index_bound));
    let value = json!({
        "field": spec.field().label(),
        "rank": rank,
        "bad_places": spec.bad_places(),
        "result": res,
    });
    Ok((text, value))
}

fn lambda_table(rank: u32, qs: &[u64]) -> Res<(String, Value)> {
    check_rank(rank)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for t in ParahoricType::all(rank) {
        for &q in qs {
            let p = LocalPlaceData::new(q, t)?;
            let l = lambda_factor(&p, rank)?;
            text.push_str(&format!(
                "{:<14} q={:<4} λ = {l}  Ξ ≤ {}\n",
                t.to_string(),
                q,
                xi_order(&p)
            ));
            rows.push(json!({"type": t, "q": q, "lambda": l, "xi": xi_order(&p)}));
        }
    }
    Ok((text, Value::Array(rows)))
}

fn lemma_bounds(chi_max: &str) -> Res<(String, Value)> {
    let chi_max = parse_rational(chi_max)?;
    if !chi_max.is_positive() {
        return Err(usage("chi-max must be positive"));
    }
    let ranges = discriminant_ranges(&chi_max);
    let last = ranges.last().map_or(2, |(d, _)| d + 1);
    let mut text = String::new();
    for (d, b) in &ranges {
        text.push_str(&format!("d = {d}  D ≤ {b}\n"));
    }
    text.push_str(&format!(
        "d = {last} excluded: lower bound {}\n",
        approx(&discriminant_lower_bound(last))
    ));
    let rows: Vec<Value> = ranges
        .iter()
        .map(|(d, b)| json!({"degree": d, "max_discriminant": b.to_string()}))
        .collect();
    Ok((text, json!({"ranges": rows, "excluded_from": last})))
}

fn sieve_cmd(cli: &Cli, chi_max: &str) -> Res<(String, Value, bool)> {
    let chi_max = parse_rational(chi_max)?;
    let mut config = SieveConfig::new(load_fields(&cli.fields)?, chi_max)?;
    config.workers = cli.workers;
    config.zeta.precision_bits = cli.precision_bits;
    let out = run_sieve(&config)?;
    let cands = manifold_candidates(&out.reports, &config.chi_max);
    let c = &out.counts;
    let mut text = String::new();
    text.push_str(&format!(
        "stage 1: {} fields inside the discriminant ranges ({})\n",
        c.stage1_total,
        c.stage1_by_degree
            .iter()
            .map(|(d, n)| format!("d={d}: {n}"))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    text.push_str(&format!("stage 2: {} fields\n", c.stage2_total));
    text.push_str(&format!(
        "stage 3: {} survivors, {} need data\n\n",
        c.survivors, c.needs_data
    ));
    text.push_str(&render_text(&out.reports));
    text.push('\n');
    for cand in &cands {
        text.push_str(&format!(
            "{}  χ(Γ) = {}  χ(M) = {:<2}  index {}\n",
            cand.field_label, cand.group_chi, cand.manifold_chi, cand.index
        ));
    }
    for d in &out.diagnostics {
        text.push_str(&format!("note: {d}\n"));
    }
    let value = json!({"outcome": out, "manifold_candidates": cands});
    Ok((text, value, out.complete()))
}

fn zeta_cmd(cli: &Cli, field: &str, arg: i64) -> Res<(String, Value)> {
    let table = load_fields(&cli.fields)?;
    let k = find_field(&table, field)?;
    let opts = ZetaOptions {
        precision_bits: cli.precision_bits,
        ..ZetaOptions::default()
    };
    let z = if arg < 0 && arg % 2 != 0 {
        dedekind_zeta_negative_with(&k, ((1 - arg) / 2) as u32, &opts)?
    } else if arg >= 2 && arg % 2 == 0 {
        dedekind_zeta_positive(&k, arg as u32, &opts)?
    } else {
        return Err(usage(format!(
            "argument {arg} is neither a negative odd nor a positive even integer"
        )));
    };
    let text = match (&z.exact, &z.enclosure) {
        (Some(q), _) => format!("ζ_{}({arg}) = {q}  ≈ {}\n", k.label(), approx(q)),
        (None, Some(iv)) => format!(
            "ζ_{}({arg}) = {}  ({} certified digits)\n",
            k.label(),
            iv.to_decimal(iv.certified_digits().max(1)),
            iv.certified_digits()
        ),
        (None, None) => unreachable!("zeta values carry a value"),
    };
    Ok((text, json!({"field": k.label(), "value": z})))
}

fn example34(max_rank: u32) -> Res<(String, Value)> {
    check_rank(max_rank)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for r in 2..=max_rank {
        let chi = chi_unimodular_stabilizer(r);
        let f = unimodular_branch_factor(r);
        text.push_str(&format!("r={r:<3} χ = {chi}  ≈ {}  (factor {f})\n", approx(&chi)));
        rows.push(json!({"rank": r, "chi": chi, "branch_factor": f}));
    }
    Ok((text, Value::Array(rows)))
}

fn volume(cli: &Cli, chi: &str, rank: u32) -> Res<(String, Value)> {
    check_rank(rank)?;
    let chi = parse_rational(chi)?;
    if !chi.is_positive() {
        return Err(usage("χ must be positive"));
    }
    let v = hyperbolic_volume_at(&chi, rank, cli.precision_bits);
    let text = format!("vol = {}\n", v.to_decimal(30.min(v.certified_digits().max(1))));
    Ok((text, json!({"chi": chi, "rank": rank, "volume": interval_json(&v)})))
}

fn run(cli: &Cli) -> Res<()> {
    let (text, value, complete) = match &cli.command {
        Command::Table2 { max_rank, variant } => with_complete(table2(*max_rank, *variant)),
        Command::Chi {
            field,
            rank,
            places,
            mode,
        } => with_complete(chi_cmd(cli, field, *rank, places, *mode)),
        Command::LambdaTable { rank, q } => with_complete(lambda_table(*rank, q)),
        Command::LemmaBounds { chi_max } => with_complete(lemma_bounds(chi_max)),
        Command::Sieve { chi_max } => sieve_cmd(cli, chi_max),
        Command::Zeta { field, arg } => with_complete(zeta_cmd(cli, field, *arg)),
        Command::Example34 { max_rank } => with_complete(example34(*max_rank)),
        Command::Volume { chi, rank } => with_complete(volume(cli, chi, *rank)),
    }?;
    match cli.format {
        Format::Text => print!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
    }
    if complete {
        Ok(())
    } else {
        Err(Failure::Incomplete("some fields need more data".into()))
    }
}

fn with_complete(r: Res<(String, Value)>) -> Res<(String, Value, bool)> {
    r.map(|(t, v)| (t, v, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Incomplete(m)) => {
            eprintln!("orbivol: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("orbivol: {m}");
            ExitCode::from(2)
        }
    }
}
