use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use seaweed_core::series::{a300574_gf, two_colored_gf};
use seaweed_core::stats::{
    check_reference_tail, conj_statistic, conjecture_rows, detect_period, divisor_count,
    frobenius_counts, ones_table, rev_statistic, self_conjugate_count,
};
use seaweed_core::{build_meander, components, wind_down, Error, SeaweedType};

const MAX_TYPE_N: u32 = 100_000;

/// Index computations for seaweed subalgebras of sl(n) and the partition
/// statistics built on them.
#[derive(Parser)]
#[command(name = "seaweed", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Meander of a seaweed type such as `2|4/1|2|3`, with its index.
    Index { seaweed: String },
    /// Winding-down trace of a seaweed type.
    Wind { seaweed: String },
    /// Number of partitions of n by all-ones index value.
    OnesTable {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=60))]
        n_max: u32,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=200))]
        i_max: u32,
    },
    /// Frobenius partitions of n with parts at most d, for n up to n-max.
    Frobenius {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=8))]
        d: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=200))]
        n_max: u32,
    },
    /// Eventual period of the Frobenius counts, checked against the
    /// published tail when one exists.
    Period {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=8))]
        d: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=200))]
        n_max: u32,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=50))]
        min_repeats: u32,
    },
    /// Parity of the maximal parabolic index over odd-part partitions,
    /// compared with the product coefficients.
    Conjecture {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=100))]
        n_max: u32,
    },
    /// Count of partitions whose paired seaweed has index n - 1.
    Stat {
        #[arg(long, value_enum)]
        kind: StatKind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=60))]
        n_max: u32,
    },
    /// Coefficients of a generating function.
    Series {
        #[arg(long, value_enum)]
        which: SeriesKind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=200))]
        order: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatKind {
    /// Pairs λ with its reversal; expected d(n).
    Rev,
    /// Pairs λ with its conjugate; expected twice the self-conjugate count.
    Conjugate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    TwoColored,
    A300574,
}

struct Outcome {
    body: String,
    mismatch: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, mismatch: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("seaweed: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &outcome.body),
        None => io::stdout().lock().write_all(outcome.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("seaweed: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if outcome.mismatch {
        eprintln!("seaweed: verification mismatch");
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::StepCapExceeded { .. } | Error::Overflow(_) => 4,
        Error::NotStabilized { .. } => 3,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let f = cli.format;
    match &cli.command {
        Command::Index { seaweed } => cmd_index(seaweed, f),
        Command::Wind { seaweed } => cmd_wind(seaweed, f),
        Command::OnesTable { n_max, i_max } => cmd_ones_table(*n_max, *i_max, f),
        Command::Frobenius { d, n_max } => cmd_frobenius(*d, *n_max, f),
        Command::Period { d, n_max, min_repeats } => cmd_period(*d, *n_max, *min_repeats, f),
        Command::Conjecture { n_max } => cmd_conjecture(*n_max, f),
        Command::Stat { kind, n_max } => cmd_stat(*kind, *n_max, f),
        Command::Series { which, order } => cmd_series(*which, *order, f),
    }
}

fn parse_type(text: &str) -> Result<SeaweedType, Error> {
    let s: SeaweedType = text.parse()?;
    if s.is_empty() {
        return Err(Error::EmptyType);
    }
    if s.n() > MAX_TYPE_N {
        return Err(Error::InvalidArgument(format!(
            "n = {} exceeds the limit of {MAX_TYPE_N}",
            s.n()
        )));
    }
    Ok(s)
}

fn arcs_text(arcs: &[(usize, usize)], sep: &str) -> String {
    arcs.iter()
        .map(|(j, k)| format!("{j}-{k}"))
        .collect::<Vec<_>>()
        .join(sep)
}

fn cmd_index(text: &str, f: Format) -> Result<Outcome, Error> {
    let s = parse_type(text)?;
    let m = build_meander(&s);
    let c = components(&m);
    let index = c.index().ok_or(Error::EmptyType)?;
    let body = match f {
        Format::Text => format!(
            "type={s}\nn={}\ntop_arcs={}\nbottom_arcs={}\ncycles={}\npaths={}\nindex={index}\n",
            s.n(),
            arcs_text(m.top_arcs(), " "),
            arcs_text(m.bottom_arcs(), " "),
            c.cycles,
            c.paths,
        ),
        Format::Csv => format!(
            "type,n,top_arcs,bottom_arcs,cycles,paths,index\n{s},{},{},{},{},{},{index}\n",
            s.n(),
            arcs_text(m.top_arcs(), ";"),
            arcs_text(m.bottom_arcs(), ";"),
            c.cycles,
            c.paths,
        ),
        Format::Json => json_line(&json!({
            "type": s.to_string(),
            "n": s.n(),
            "top_arcs": m.top_arcs(),
            "bottom_arcs": m.bottom_arcs(),
            "cycles": c.cycles,
            "paths": c.paths,
            "index": index,
        })),
    };
    Ok(Outcome::ok(body))
}

fn cmd_wind(text: &str, f: Format) -> Result<Outcome, Error> {
    let s = parse_type(text)?;
    let trace = wind_down(&s)?;
    let body = match f {
        Format::Text => format!("{}index={}\n", trace.to_text(), trace.index()),
        Format::Csv => {
            let rows = trace
                .steps()
                .iter()
                .enumerate()
                .map(|(i, step)| vec![(i + 1).to_string(), step.kind.to_string(), step.result.to_string()])
                .collect();
            csv(&["step", "kind", "result"], rows)
        }
        Format::Json => json_line(&json!({
            "type": s.to_string(),
            "steps": trace.steps(),
            "index": trace.index(),
        })),
    };
    Ok(Outcome::ok(body))
}

fn cmd_ones_table(n_max: u32, i_max: u32, f: Format) -> Result<Outcome, Error> {
    let t = ones_table(n_max, i_max)?;
    let body = match f {
        Format::Text => {
            let mut headers = vec!["n\\i".to_string()];
            headers.extend((0..i_max).map(|i| i.to_string()));
            let rows = (1..=n_max)
                .map(|n| {
                    let mut row = vec![n.to_string()];
                    row.extend(t.row(n).iter().map(u64::to_string));
                    row
                })
                .collect();
            table(&headers, rows)
        }
        Format::Csv => t.to_csv(),
        Format::Json => json_line(&t),
    };
    Ok(Outcome::ok(body))
}

fn cmd_frobenius(d: u32, n_max: u32, f: Format) -> Result<Outcome, Error> {
    let counts = frobenius_counts(d, n_max)?;
    let rows: Vec<Vec<String>> = counts
        .iter()
        .map(|c| vec![c.n.to_string(), c.d.to_string(), c.count.to_string()])
        .collect();
    let body = match f {
        Format::Text => table(&strings(&["n", "d", "count"]), rows),
        Format::Csv => csv(&["n", "d", "count"], rows),
        Format::Json => json_line(&counts),
    };
    Ok(Outcome::ok(body))
}

fn cmd_period(d: u32, n_max: u32, min_repeats: u32, f: Format) -> Result<Outcome, Error> {
    let counts = frobenius_counts(d, n_max)?;
    let values: Vec<u64> = counts.iter().map(|c| c.count).collect();
    let detected = detect_period(&values, 1, min_repeats as usize);
    let check = check_reference_tail(d, &counts, min_repeats as usize);
    let status = match &check {
        None => "none",
        Some(c) if n_max < c.reference_onset => "unchecked",
        Some(c) if c.matches => "match",
        Some(_) => "mismatch",
    };
    let mismatch = status == "mismatch";

    if f == Format::Json {
        let body = json_line(&json!({
            "d": d,
            "n_max": n_max,
            "min_repeats": min_repeats,
            "detected": detected,
            "reference": check,
            "reference_status": status,
        }));
        return Ok(Outcome { body, mismatch });
    }

    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    let opt = |v: Option<u32>| v.map_or("none".to_string(), |x| x.to_string());
    let mut fields = vec![
        ("d", d.to_string()),
        ("n_max", n_max.to_string()),
        ("min_repeats", min_repeats.to_string()),
        ("detected_period", opt(detected.as_ref().map(|p| p.period))),
        ("detected_onset", opt(detected.as_ref().map(|p| p.onset))),
        ("detected_values", detected.as_ref().map_or(String::new(), |p| join(&p.values))),
        ("verified_up_to", opt(detected.as_ref().map(|p| p.verified_up_to))),
        ("reference_status", status.to_string()),
    ];
    if let Some(c) = &check {
        fields.extend([
            ("reference_onset", c.reference_onset.to_string()),
            ("reference_values", join(&c.reference_values)),
            ("first_mismatch", opt(c.first_mismatch)),
            ("stated_period", c.stated_period.to_string()),
            ("period_discrepancy", c.period_discrepancy.to_string()),
        ]);
    }
    let body = match f {
        Format::Csv => csv(
            &["field", "value"],
            fields.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect(),
        ),
        _ => fields.into_iter().map(|(k, v)| format!("{k}={v}\n")).collect(),
    };
    Ok(Outcome { body, mismatch })
}

fn cmd_conjecture(n_max: u32, f: Format) -> Result<Outcome, Error> {
    let rows = conjecture_rows(n_max)?;
    let mismatch = rows.iter().any(|r| !r.matches);
    let headers = ["n", "e_n", "o_n", "abs_diff", "signed_diff", "coefficient", "status"];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.e_n.to_string(),
                r.o_n.to_string(),
                r.abs_diff.to_string(),
                r.signed_diff.to_string(),
                r.coefficient.to_string(),
                status(r.matches).to_string(),
            ]
        })
        .collect();
    let body = match f {
        Format::Text => table(&strings(&headers), cells),
        Format::Csv => csv(&headers, cells),
        Format::Json => json_line(&rows),
    };
    Ok(Outcome { body, mismatch })
}

fn cmd_stat(kind: StatKind, n_max: u32, f: Format) -> Result<Outcome, Error> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let (count, expected) = match kind {
            StatKind::Rev => (rev_statistic(n)?, divisor_count(n)),
            StatKind::Conjugate => (conj_statistic(n)?, 2 * self_conjugate_count(n)),
        };
        rows.push((n, count, expected));
    }
    let mismatch = rows.iter().any(|&(_, c, e)| c != e);
    let headers = ["n", "count", "expected", "status"];
    let body = match f {
        Format::Json => json_line(
            &rows
                .iter()
                .map(|&(n, count, expected)| {
                    json!({ "n": n, "count": count, "expected": expected, "matches": count == expected })
                })
                .collect::<Vec<_>>(),
        ),
        _ => {
            let cells = rows
                .iter()
                .map(|&(n, c, e)| vec![n.to_string(), c.to_string(), e.to_string(), status(c == e).to_string()])
                .collect();
            if f == Format::Csv {
                csv(&headers, cells)
            } else {
                table(&strings(&headers), cells)
            }
        }
    };
    Ok(Outcome { body, mismatch })
}

fn cmd_series(which: SeriesKind, order: u32, f: Format) -> Result<Outcome, Error> {
    let s = match which {
        SeriesKind::TwoColored => two_colored_gf(order as usize)?,
        SeriesKind::A300574 => a300574_gf(order as usize)?,
    };
    let body = match f {
        Format::Text => table(
            &strings(&["n", "coefficient"]),
            s.coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| vec![n.to_string(), c.to_string()])
                .collect(),
        ),
        Format::Csv => s.to_csv(),
        Format::Json => format!("{}\n", s.to_json()),
    };
    Ok(Outcome::ok(body))
}

fn status(matches: bool) -> &'static str {
    if matches {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn json_line<T: serde::Serialize + ?Sized>(value: &T) -> String {
    let mut out = serde_json::to_string(value).expect("report values serialize");
    out.push('\n');
    out
}

fn csv(headers: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut out = headers.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Right-aligned columns separated by two spaces.
fn table(headers: &[String], rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = headers.iter().map(String::len).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        let mut s = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        s.push('\n');
        s
    };
    let mut out = line(headers);
    for row in &rows {
        out.push_str(&line(row));
    }
    out
}
