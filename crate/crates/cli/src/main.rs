//! `motzkin`: command-line access to the row of Motzkin words.

mod table;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;

use motzkin_core::series::functional_residual;
use motzkin_core::verify::{self, Level};
use motzkin_core::{
    catalan, delta, enumerate_range, increment_gf, motzkin, motzkin_gf, motzkin_increment,
    pair_gf_parts, pair_weight, pair_word, rank, tetrahedral, triangle_table, triangular, unrank,
    weight_triangle, MotzkinWord, Orientation, TruncatedSeries, Weight,
};

use table::{json_int, json_ints, object, OutputFormat, Row, Table};

const MAX_TERMS: u64 = 5000;
const MAX_TABLE_N: u64 = 400;
const MAX_SERIES_ORDER: u64 = 512;
const MAX_RANGE_N: u64 = 16;

#[derive(Parser, Debug)]
#[command(
    name = "motzkin",
    version,
    about = "Rank, unrank and tabulate the naturalized row of Motzkin words"
)]
struct Cli {
    #[command(flatten)]
    output: OutputArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output format for tables.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Print a header line (CSV and text).
    #[arg(long, global = true)]
    header: bool,
    /// Print runs of three or more zeros as 0{k}.
    #[arg(long, global = true)]
    compact: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// First terms of an integer sequence.
    Numbers {
        #[arg(value_enum)]
        sequence: Sequence,
        #[arg(value_parser = clap::value_parser!(u64).range(1..=MAX_TERMS))]
        count: u64,
    },
    /// Weight (index in the row) of a word.
    Rank { word: String },
    /// Word with the given weight.
    Unrank { index: Weight },
    /// Prime pairs of a word with their weights.
    Decompose { word: String },
    /// All unique words of one length, in row order.
    Range {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=MAX_RANGE_N))]
        n: u64,
    },
    /// Weights of prime pairs, one row per length.
    Pairs {
        #[arg(value_parser = clap::value_parser!(u64).range(2..=MAX_TABLE_N))]
        max_n: u64,
    },
    /// The Motzkin triangle U(n, k).
    Triangle {
        #[arg(value_parser = clap::value_parser!(u64).range(2..=MAX_TABLE_N))]
        max_n: u64,
        /// One line per pair count k.
        #[arg(long, conflicts_with = "by_rows_n")]
        by_rows_k: bool,
        /// One line per length n (default).
        #[arg(long)]
        by_rows_n: bool,
    },
    /// Coefficients of a generating function.
    Series {
        #[arg(value_enum)]
        name: SeriesName,
        #[arg(value_parser = clap::value_parser!(u64).range(1..=MAX_SERIES_ORDER))]
        order: u64,
    },
    /// Run the self-check suite.
    Verify {
        #[arg(value_enum, default_value_t = VerifyLevel::Quick)]
        level: VerifyLevel,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Sequence {
    Motzkin,
    Increment,
    Delta,
    Catalan,
    Triangular,
    Tetrahedral,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeriesName {
    /// M(x)
    Motzkin,
    /// U(x)
    Increment,
    /// x-part of the pair weight function
    PairX,
    /// y-part of the pair weight function
    PairY,
    /// M - 1 - xM - x^2 M^2
    Residual,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyLevel {
    Quick,
    Full,
}

/// Domain failure: reported on stderr, exit code 1.
struct Failure(String);

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn render(w: &MotzkinWord, compact: bool) -> String {
    if compact {
        w.render_compact()
    } else {
        w.to_string()
    }
}

fn parse_word(text: &str) -> Result<MotzkinWord, Failure> {
    MotzkinWord::parse(text).map_err(|e| Failure(format!("invalid word {text:?}: {e}")))
}

fn numbers(sequence: Sequence, count: usize) -> Table {
    let mut t = Table::new(&["index", "value"]);
    let first = if matches!(sequence, Sequence::Delta) {
        1
    } else {
        0
    };
    for i in first..first + count {
        let v = match sequence {
            Sequence::Motzkin => motzkin(i),
            Sequence::Increment => motzkin_increment(i),
            Sequence::Delta => delta(i).expect("index >= 1"),
            Sequence::Catalan => catalan(i),
            Sequence::Triangular => triangular(i),
            Sequence::Tetrahedral => tetrahedral(i),
        };
        let json = object(vec![("index", Value::from(i)), ("value", json_int(&v))]);
        t.push(Row::new(vec![i.to_string(), v.to_string()], json));
    }
    t
}

fn decompose(w: &MotzkinWord, compact: bool) -> Table {
    let mut t = Table::new(&["n", "r", "word", "weight"]);
    for p in w.decompose() {
        let word = render(&pair_word(p), compact);
        let weight = pair_weight(p).into_inner();
        let json = object(vec![
            ("n", Value::from(p.n())),
            ("r", Value::from(p.r())),
            ("word", Value::from(word.clone())),
            ("weight", json_int(&weight)),
        ]);
        t.push(Row::new(
            vec![
                p.n().to_string(),
                p.r().to_string(),
                word,
                weight.to_string(),
            ],
            json,
        ));
    }
    t
}

fn pairs(max_n: usize) -> Table {
    let mut header = vec!["n\\r".to_string()];
    header.extend((1..max_n).map(|r| r.to_string()));
    let mut t = Table::with_header(header);
    for row in weight_triangle(max_n) {
        let mut cells = vec![row.n.to_string()];
        cells.extend(row.weights.iter().map(|w| w.to_string()));
        let json = object(vec![
            ("n", Value::from(row.n)),
            ("weights", json_ints(&row.weights)),
        ]);
        t.push(Row::new(cells, json));
    }
    t
}

fn triangle(max_n: usize, orientation: Orientation) -> Result<Table, Failure> {
    let tab = triangle_table(max_n);
    if !tab.sums_match() {
        return Err(Failure("triangle sums differ from the range sizes".into()));
    }
    let cell = |v: &BigInt| {
        if v.is_zero() {
            String::new()
        } else {
            v.to_string()
        }
    };
    let t = match orientation {
        Orientation::ByRowsN => {
            let mut header = vec!["n\\k".to_string()];
            header.extend((1..=tab.max_k()).map(|k| k.to_string()));
            header.push("sum".into());
            let mut t = Table::with_header(header);
            for n in 2..=max_n {
                let values = tab.row_n(n);
                let sum = tab.column_sum(n);
                let mut cells = vec![n.to_string()];
                cells.extend((0..tab.max_k()).map(|i| values.get(i).map(cell).unwrap_or_default()));
                cells.push(sum.to_string());
                let json = object(vec![
                    ("n", Value::from(n)),
                    ("values", json_ints(values)),
                    ("sum", json_int(&sum)),
                ]);
                t.push(Row::new(cells, json));
            }
            t
        }
        Orientation::ByRowsK => {
            let mut header = vec!["k\\n".to_string()];
            header.extend((2..=max_n).map(|n| n.to_string()));
            let mut t = Table::with_header(header);
            for k in 1..=tab.max_k() {
                let entries = tab.row_k(k);
                let mut cells = vec![k.to_string()];
                cells.extend((2..=max_n).map(|n| cell(&tab.get(n, k))));
                let values: Vec<BigInt> = entries.into_iter().map(|(_, v)| v).collect();
                let json = object(vec![
                    ("k", Value::from(k)),
                    ("n_from", Value::from(2 * k)),
                    ("values", json_ints(&values)),
                ]);
                t.push(Row::new(cells, json));
            }
            let sums: Vec<BigInt> = (2..=max_n).map(|n| tab.column_sum(n)).collect();
            let mut cells = vec!["sum".to_string()];
            cells.extend(sums.iter().map(|s| s.to_string()));
            let json = object(vec![
                ("k", Value::Null),
                ("n_from", Value::from(2)),
                ("values", json_ints(&sums)),
            ]);
            t.push(Row::new(cells, json));
            t
        }
    };
    Ok(t)
}

fn series(name: SeriesName, order: usize) -> Table {
    let s: TruncatedSeries = match name {
        SeriesName::Motzkin => motzkin_gf(order),
        SeriesName::Increment => increment_gf(order),
        SeriesName::PairX => pair_gf_parts(order).x_part,
        SeriesName::PairY => pair_gf_parts(order).y_part,
        SeriesName::Residual => functional_residual(&motzkin_gf(order)),
    };
    let mut t = Table::new(&["index", "coefficient"]);
    for (i, c) in s.coeffs().iter().enumerate() {
        let json_c = if c.is_integer() {
            json_int(&c.to_integer())
        } else {
            Value::from(c.to_string())
        };
        let json = object(vec![("index", Value::from(i)), ("coefficient", json_c)]);
        t.push(Row::new(vec![i.to_string(), c.to_string()], json));
    }
    t
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let OutputArgs {
        format,
        header,
        compact,
    } = cli.output;
    let table = match cli.command {
        Command::Numbers { sequence, count } => numbers(sequence, count as usize),
        Command::Rank { word } => {
            let w = parse_word(&word)?;
            writeln!(out, "{}", rank(&w)?)?;
            return Ok(());
        }
        Command::Unrank { index } => {
            writeln!(out, "{}", render(&unrank(&index), compact))?;
            return Ok(());
        }
        Command::Decompose { word } => decompose(&parse_word(&word)?, compact),
        Command::Range { n } => {
            let mut t = Table::new(&["word"]);
            for w in enumerate_range(n as usize) {
                let s = render(&w, compact);
                t.push(Row::new(
                    vec![s.clone()],
                    object(vec![("word", Value::from(s))]),
                ));
            }
            t
        }
        Command::Pairs { max_n } => pairs(max_n as usize),
        Command::Triangle {
            max_n, by_rows_k, ..
        } => {
            let orientation = if by_rows_k {
                Orientation::ByRowsK
            } else {
                Orientation::ByRowsN
            };
            triangle(max_n as usize, orientation)?
        }
        Command::Series { name, order } => series(name, order as usize),
        Command::Verify { level } => {
            let level = match level {
                VerifyLevel::Quick => Level::Quick,
                VerifyLevel::Full => Level::Full,
            };
            let report = verify::run(level);
            let mut t = Table::new(&["status", "id", "check", "detail"]);
            for c in &report.checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                let detail = c.failure.clone().unwrap_or_default();
                let json = object(vec![
                    ("id", Value::from(c.id)),
                    ("name", Value::from(c.name)),
                    ("passed", Value::from(c.passed())),
                    (
                        "failure",
                        c.failure.clone().map(Value::from).unwrap_or(Value::Null),
                    ),
                ]);
                let cells = match format {
                    OutputFormat::Text => vec![c.to_string()],
                    _ => vec![status.into(), c.id.to_string(), c.name.into(), detail],
                };
                t.push(Row::new(cells, json));
            }
            if format == OutputFormat::Text {
                // one pre-formatted line per check
                for row in &t.rows {
                    writeln!(out, "{}", row.cells[0])?;
                }
            } else {
                t.write(format, header, out)?;
            }
            let passed = report.checks.iter().filter(|c| c.passed()).count();
            if !report.passed() {
                return Err(Failure(format!(
                    "verification failed: {passed}/{} checks passed",
                    report.checks.len()
                )));
            }
            if format == OutputFormat::Text {
                writeln!(out, "all {passed} checks passed")?;
            }
            return Ok(());
        }
    };
    table.write(format, header, out)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(msg)) => {
            let _ = out.flush();
            eprintln!("motzkin: {msg}");
            ExitCode::from(1)
        }
    }
}
