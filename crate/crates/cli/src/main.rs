mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use config::{Format, RunConfig};
use k3nl::bpsk3::kkv_table;
use k3nl::bridge::{fit_theta_from_gw, bps_from_nl, NlTable, Provenance};
use k3nl::lattice::{disc, mu, mu_refined, solutions, Gram};
use k3nl::mirror::fiber_bps;
use k3nl::modforms::{describe_constraint, scalarize, FittedForm, Preset};
use k3nl::picrank::{bruinier_eval, NEAR_INTEGER_TOLERANCE};
use k3nl::qseries::FracSeries;
use k3nl::rational::fmt_exponent;
use k3nl::verify::{run_suite, Context, SUITES};

/// Noether-Lefschetz numbers, modular forms and BPS invariants of K3 fibrations.
#[derive(Parser, Debug)]
#[command(name = "k3nl", version)]
struct Cli {
    /// key = value configuration file; flags override it
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<Format>,
    /// Shorthand for --format json
    #[arg(long, global = true, conflicts_with = "format")]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fit a family's vector-valued form and print its scalar series
    Theta {
        #[command(flatten)]
        family: FamilyArgs,
        /// q-order to which the form is known
        #[arg(long)]
        trunc: Option<i64>,
    },
    /// Noether-Lefschetz numbers of a family
    Nl {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 8)]
        dmax: i64,
        /// Number of copies of the family (the table is scaled by it)
        #[arg(long, default_value_t = 1)]
        multiplier: i64,
        #[arg(long, value_enum, default_value_t = Source::Modular)]
        source: Source,
    },
    /// Genus-0 fiber invariants of the quartic K3 fibration from the mirror
    Gw {
        #[arg(long)]
        dmax: Option<usize>,
    },
    /// K3 BPS tables
    Bps {
        #[command(subcommand)]
        table: BpsTable,
    },
    /// Fiber-class BPS numbers of the quartic fibration from NL numbers
    Predict {
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long, default_value_t = 8)]
        dmax: i64,
        #[arg(long, value_enum, default_value_t = Source::Modular)]
        source: Source,
    },
    /// Lattice utilities
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
    /// Rank of the NL span in the Picard group of the degree-l moduli
    Picrank {
        #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep")]
        l: Option<i64>,
        /// Tabulate every even l from 2 to this bound
        #[arg(long)]
        sweep: Option<i64>,
    },
    /// Run the reproducibility checks
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Named family; overrides --l/--family
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    l: Option<i64>,
    #[arg(long, default_value_t = 1)]
    family: u8,
}

#[derive(Subcommand, Debug)]
enum BpsTable {
    /// r_{g,h} from the KKV product formula
    Kkv {
        #[arg(long)]
        gmax: Option<usize>,
        #[arg(long)]
        hmax: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum LatticeOp {
    /// Number of classes in a rank-2 lattice realizing (h, d)
    Mu {
        #[arg(long)]
        l: i64,
        #[arg(long, allow_hyphen_values = true)]
        h: i64,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        /// Gram matrix as a,b,c (meaning [[a,b],[b,c]]) or a,b,b,c
        #[arg(long, allow_hyphen_values = true)]
        gram: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Source {
    Modular,
    Mirror,
}

/// Output of one command in a format-neutral shape.
struct Report {
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Value,
    text: Option<String>,
    ok: bool,
}

impl Report {
    fn table(columns: Vec<&'static str>, rows: Vec<Vec<String>>, json: Value) -> Self {
        Report { columns, rows, json, text: None, ok: true }
    }

    fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json)
                .map(|s| s + "\n")
                .map_err(|e| e.to_string()),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).map_err(|e| e.to_string())?;
                for r in &self.rows {
                    w.write_record(r).map_err(|e| e.to_string())?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
            Format::Text => Ok(match &self.text {
                Some(t) => t.clone(),
                None => aligned(&self.columns, &self.rows),
            }),
        }
    }
}

fn aligned(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(columns.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

fn terms_json(s: &FracSeries) -> Value {
    Value::Array(
        s.terms()
            .map(|(e, c)| json!([fmt_exponent(e), c.to_string()]))
            .collect(),
    )
}

fn resolve_preset(args: &FamilyArgs, cfg: &RunConfig) -> k3nl::Result<Preset> {
    match (&args.preset, args.l) {
        (Some(name), _) => Preset::from_name(name),
        (None, Some(l)) => Preset::for_level(l, args.family),
        (None, None) => match &cfg.preset {
            Some(name) => Preset::from_name(name),
            None => Ok(Preset::Quartic),
        },
    }
}

fn theta(p: Preset, trunc: i64) -> k3nl::Result<Report> {
    let FittedForm { coefficients, form } = p.fit(trunc)?;
    let scalar = scalarize(&form);
    let coeffs: Vec<String> = coefficients.iter().map(ToString::to_string).collect();
    let mut rows = Vec::new();
    for (e, c) in scalar.terms() {
        rows.push(vec!["scalar".to_string(), fmt_exponent(e), c.to_string()]);
    }
    for (gamma, comp) in form.components().iter().enumerate() {
        for (e, c) in comp.terms() {
            rows.push(vec![gamma.to_string(), fmt_exponent(e), c.to_string()]);
        }
    }
    let mut text = format!(
        "{} (l = {}, weight {}/2)\n",
        p.name(),
        p.level(),
        form.weight2()
    );
    for c in p.constraints() {
        text += &format!("  constraint {}\n", describe_constraint(&c));
    }
    text += &format!("coefficients: {}\n", coeffs.join(", "));
    text += &format!("scalar series, known below q^{}:\n", fmt_exponent(scalar.truncation()));
    for (e, c) in scalar.terms() {
        text += &format!("  q^{:<8} {}\n", fmt_exponent(e), c);
    }
    let json = json!({
        "preset": p.name(),
        "level": p.level(),
        "weight": format!("{}/2", form.weight2()),
        "truncation": fmt_exponent(scalar.truncation()),
        "coefficients": coeffs,
        "scalar": terms_json(&scalar),
        "components": form.components().iter().map(terms_json).collect::<Vec<_>>(),
    });
    Ok(Report { text: Some(text), ..Report::table(vec!["series", "exponent", "coefficient"], rows, json) })
}

/// Quartic NL table from either computation, known through degree `dmax`.
fn quartic_nl(dmax: i64, multiplier: i64, source: Source) -> k3nl::Result<NlTable> {
    match source {
        Source::Modular => {
            let form = Preset::Quartic.fit(dmax * dmax / 8 + 2)?.form;
            NlTable::from_form(&form, dmax, multiplier, Provenance::FittedModular)
        }
        Source::Mirror => {
            let n = dmax.max(12) as usize;
            let f = fiber_bps(n)?;
            let bps: Vec<_> = (1..=n).map(|d| f.bps(d).clone()).collect();
            let fit = fit_theta_from_gw(&bps)?;
            NlTable::from_quartic_theta(&fit.theta, dmax, multiplier, Provenance::MirrorSolved)
        }
    }
}

fn nl(p: Preset, dmax: i64, multiplier: i64, source: Source) -> k3nl::Result<Report> {
    if dmax < 1 || multiplier < 1 {
        return Err(k3nl::Error::InvalidArgument("dmax and multiplier must be >= 1".into()));
    }
    let table = match (p, source) {
        (Preset::Quartic, s) => quartic_nl(dmax, multiplier, s)?,
        (_, Source::Modular) => {
            let trunc = dmax * dmax / (2 * p.level()) + 2;
            NlTable::from_form(&p.fit(trunc)?.form, dmax, multiplier, Provenance::FittedModular)?
        }
        (_, Source::Mirror) => {
            return Err(k3nl::Error::InvalidArgument(
                "the mirror source is only available for quartic-pencil".into(),
            ))
        }
    };
    let rows: Vec<Vec<String>> = table
        .rows()
        .into_iter()
        .map(|r| vec![r.h.to_string(), r.d.to_string(), r.disc.to_string(), r.coset.to_string(), r.value.to_string()])
        .collect();
    let json = json!({
        "preset": p.name(),
        "level": table.level,
        "multiplier": table.multiplier,
        "provenance": table.provenance.as_str(),
        "dmax": table.dmax,
        "rows": table.rows().iter().map(|r| json!({
            "h": r.h, "d": r.d, "disc": r.disc, "coset": r.coset, "value": r.value.to_string()
        })).collect::<Vec<_>>(),
    });
    Ok(Report::table(vec!["h", "d", "disc", "coset", "value"], rows, json))
}

fn gw(dmax: usize) -> k3nl::Result<Report> {
    let f = fiber_bps(dmax)?;
    let rows: Vec<Vec<String>> = (1..=dmax)
        .map(|d| vec![d.to_string(), f.gw[d - 1].to_string(), f.bps(d).to_string()])
        .collect();
    let json = json!({
        "dmax": dmax,
        "rows": rows.iter().map(|r| json!({"d": r[0].parse::<usize>().unwrap_or(0), "gw": r[1], "bps": r[2]})).collect::<Vec<_>>(),
        "integrality_warnings": f.bps.warnings.iter().map(|w| json!({
            "g": w.g, "d": w.d, "value": w.value.to_string()
        })).collect::<Vec<_>>(),
    });
    Ok(Report::table(vec!["d", "gw", "bps"], rows, json))
}

fn kkv(gmax: usize, hmax: usize) -> k3nl::Result<Report> {
    let t = kkv_table(gmax, hmax)?;
    let mut rows = Vec::new();
    for g in 0..=gmax {
        for h in 0..=hmax {
            rows.push(vec![g.to_string(), h.to_string(), t.values[g][h].to_string()]);
        }
    }
    let json = json!({
        "gmax": gmax,
        "hmax": hmax,
        "r": t.values.iter().map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    Ok(Report::table(vec!["g", "h", "r"], rows, json))
}

fn predict(genus: usize, dmax: i64, source: Source) -> k3nl::Result<Report> {
    if dmax < 1 {
        return Err(k3nl::Error::InvalidArgument("dmax must be >= 1".into()));
    }
    let table = quartic_nl(dmax, 2, source)?;
    let hmax = bridge_hmax(dmax);
    let r = kkv_table(genus, hmax)?;
    let mut rows = Vec::new();
    for d in 1..=dmax {
        rows.push(vec![genus.to_string(), d.to_string(), bps_from_nl(genus, &table, &r, d)?.to_string()]);
    }
    let json = json!({
        "genus": genus,
        "provenance": table.provenance.as_str(),
        "rows": rows.iter().map(|r| json!({"d": r[1].parse::<i64>().unwrap_or(0), "bps": r[2]})).collect::<Vec<_>>(),
    });
    Ok(Report::table(vec!["g", "d", "bps"], rows, json))
}

fn bridge_hmax(dmax: i64) -> usize {
    k3nl::bridge::h_top(4, dmax) as usize
}

fn parse_gram(l: i64, s: &str) -> k3nl::Result<Gram> {
    let bad = || k3nl::Error::InvalidArgument(format!("gram must be a,b,c or a,b,b,c; got {s:?}"));
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let g = match v.as_slice() {
        [a, b, c] => Gram::new(*a, *b, *c),
        [a, b, b2, c] if b == b2 => Gram::new(*a, *b, *c),
        _ => return Err(bad()),
    };
    if g.a != l {
        return Err(k3nl::Error::InvalidArgument(format!("gram entry a = {} must equal l = {l}", g.a)));
    }
    Ok(g)
}

fn lattice_mu(l: i64, h: i64, d: i64, gram: &str) -> k3nl::Result<Report> {
    let g = parse_gram(l, gram)?;
    let total = mu(l, h, d, &g)?;
    let sols = solutions(l, h, d, &g)?;
    let max = sols.iter().map(|(x, y)| x.abs().max(y.abs())).max().unwrap_or(0);
    let mut rows = vec![vec!["total".to_string(), total.to_string()]];
    let mut refined = Vec::new();
    for m in 1..=max {
        let n = mu_refined(m, l, h, d, &g)?;
        if n > 0 {
            rows.push(vec![format!("divisibility {m}"), n.to_string()]);
            refined.push(json!({"m": m, "count": n}));
        }
    }
    let text = format!(
        "mu = {total}  (Delta = {}, gram disc = {})\nclasses: {}\n{}",
        disc(l, h, d),
        g.disc(),
        sols.iter().map(|(x, y)| format!("({x}, {y})")).collect::<Vec<_>>().join(" "),
        rows[1..].iter().map(|r| format!("  {}: {}\n", r[0], r[1])).collect::<String>()
    );
    let json = json!({
        "l": l, "h": h, "d": d,
        "gram": [[g.a, g.b], [g.b, g.c]],
        "mu": total,
        "classes": sols.iter().map(|(x, y)| json!([x, y])).collect::<Vec<_>>(),
        "refined": refined,
    });
    Ok(Report { text: Some(text), ..Report::table(vec!["count", "value"], rows, json) })
}

fn picrank(l: Option<i64>, sweep: Option<i64>) -> k3nl::Result<Report> {
    let levels: Vec<i64> = match (l, sweep) {
        (Some(l), _) => vec![l],
        (None, Some(m)) => (2..=m).step_by(2).collect(),
        (None, None) => unreachable!("clap requires one of --l, --sweep"),
    };
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    let mut ok = true;
    for l in &levels {
        let e = bruinier_eval(*l)?;
        let near = e.residual < NEAR_INTEGER_TOLERANCE;
        ok &= near;
        rows.push(vec![l.to_string(), e.rank.to_string(), format!("{:.12}", e.value), near.to_string()]);
        json_rows.push(json!({"l": l, "rank": e.rank, "value": format!("{:.12}", e.value), "near_integer": near}));
    }
    let text = match (levels.len(), ok) {
        (1, true) => Some(format!("{}\n", rows[0][1])),
        _ => None,
    };
    if !ok {
        let bad: Vec<&str> = rows.iter().filter(|r| r[3] == "false").map(|r| r[0].as_str()).collect();
        return Err(k3nl::Error::InvalidArgument(format!("formula is not near an integer for l = {}", bad.join(", "))));
    }
    let json = if levels.len() == 1 { json_rows.remove(0) } else { Value::Array(json_rows) };
    Ok(Report { text, ..Report::table(vec!["l", "rank", "value", "near_integer"], rows, json) })
}

fn verify(suite: &str) -> k3nl::Result<Report> {
    let checks = run_suite(suite, &Context::new())?;
    let ok = checks.iter().all(|c| c.passed);
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| vec![c.id.clone(), if c.passed { "PASS" } else { "FAIL" }.to_string(), c.title.clone(), c.detail.clone()])
        .collect();
    let passed = checks.iter().filter(|c| c.passed).count();
    let mut text: String = checks.iter().map(|c| c.line() + "\n").collect();
    text += &format!("{passed}/{} checks passed\n", checks.len());
    let json = json!({
        "suite": suite,
        "passed": ok,
        "checks": checks.iter().map(|c| json!({
            "id": c.id, "title": c.title, "passed": c.passed, "detail": c.detail
        })).collect::<Vec<_>>(),
    });
    Ok(Report { text: Some(text), ok, ..Report::table(vec!["id", "status", "title", "detail"], rows, json) })
}

fn run(cli: Cli) -> Result<(Report, Format), String> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if cli.json {
        cfg.format = Format::Json;
    }
    let report = match cli.command {
        Command::Theta { family, trunc } => {
            let p = resolve_preset(&family, &cfg).map_err(|e| e.to_string())?;
            theta(p, trunc.unwrap_or(cfg.scalar_q_order))
        }
        Command::Nl { family, dmax, multiplier, source } => {
            let p = resolve_preset(&family, &cfg).map_err(|e| e.to_string())?;
            nl(p, dmax, multiplier, source)
        }
        Command::Gw { dmax } => gw(dmax.unwrap_or(cfg.d1max)),
        Command::Bps { table: BpsTable::Kkv { gmax, hmax } } => {
            kkv(gmax.unwrap_or(cfg.gmax), hmax.unwrap_or(cfg.hmax))
        }
        Command::Predict { genus, dmax, source } => predict(genus, dmax, source),
        Command::Lattice { op: LatticeOp::Mu { l, h, d, gram } } => lattice_mu(l, h, d, &gram),
        Command::Picrank { l, sweep } => picrank(l, sweep),
        Command::Verify { suite } => verify(&suite),
    };
    Ok((report.map_err(|e| e.to_string())?, cfg.format))
}

fn main() -> ExitCode {
    let (report, format) = match run(Cli::parse()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match report.render(format) {
        Ok(s) => print!("{s}"),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
