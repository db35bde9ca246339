use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use segre::arith::{format_rational, parse_rational};
use segre::classify::{catalog, table_rows};
use segre::cli::{analyze, pencil_from_forms, pencil_from_json, pencil_to_json, render_form};
use segre::symbol::{build_normal_form, random_instance, SegreSymbol};
use segre::{verify, Error};

#[derive(Parser)]
#[command(name = "segre", version, about = "Segre symbols and Segre quartic surfaces of pencils of quadrics in CP4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the intersection of two quadrics.
    Analyze {
        /// Two forms separated by ';', e.g. "2*X0*X1 + X2^2; X3^2 - X4^2".
        #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
        poly: Option<String>,
        /// JSON file with 5x5 matrices of rational strings under "U" and "V".
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Human-readable table instead of JSON.
        #[arg(long)]
        pretty: bool,
        /// Exit with status 3 on any non-Segre verdict.
        #[arg(long)]
        strict: bool,
    },
    /// Print the table rows and the distinct surfaces.
    Catalog {
        #[arg(long)]
        json: bool,
    },
    /// Build the normal pencil of a symbol.
    NormalForm {
        symbol: String,
        /// One root per group, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        roots: Vec<String>,
    },
    /// Run every self-check.
    Verify,
    /// A random pencil with the given symbol, as a matrix file.
    Random {
        #[arg(long)]
        symbol: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn exit_status(e: &Error) -> u8 {
    match e {
        Error::Consistency(_) => 4,
        Error::DegeneratePencil | Error::NoSmoothMember => 3,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Analyze { poly, matrix, pretty, strict } => {
            let pencil = match (poly, matrix) {
                (Some(text), _) => pencil_from_forms(&text)?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    pencil_from_json(&text)?
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            let report = analyze(&pencil)?;
            if pretty {
                print!("{}", report.to_table());
            } else {
                println!("{}", report.to_json());
            }
            Ok(report.exit_code(strict) as u8)
        }
        Command::Catalog { json } => {
            if json {
                let rows: Vec<_> = catalog()
                    .iter()
                    .map(|e| {
                        serde_json::json!({
                            "symbol": e.symbol,
                            "rows": e.rows.iter().map(|r| r.label).collect::<Vec<_>>(),
                            "singularities": e.singularities,
                            "class": e.class,
                            "lines": e.lines,
                            "planes_in_dual": e.planes_in_dual,
                            "aut_e": e.aut_e,
                            "notes": e.notes(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).expect("catalog serializes"));
            } else {
                println!("{:<6}{:<14}{:<16}{:>6}{:>7}{:>5}{:>8}  {:<14}Aut_e", "table", "symbol", "singularities", "class", "lines", "Q*", "planes", "vertex");
                for r in table_rows() {
                    let sing: Vec<String> = r.singularities.iter().map(ToString::to_string).collect();
                    let opt = |v: Option<u32>| v.map_or("-".to_string(), |v| v.to_string());
                    let class = if r.printed_class == r.class {
                        r.class.to_string()
                    } else {
                        format!("{}*", r.class)
                    };
                    println!(
                        "{:<6}{:<14}{:<16}{:>6}{:>7}{:>5}{:>8}  {:<14}{}",
                        r.table,
                        r.label,
                        if sing.is_empty() { "-".into() } else { sing.join("+") },
                        class,
                        r.lines,
                        opt(r.q_star),
                        opt(r.planes_in_dual),
                        r.vertex.map_or("-".to_string(), |v| v.to_string()),
                        r.aut_e,
                    );
                }
                println!("* printed as 8; the class formula gives 10");
            }
            Ok(0)
        }
        Command::NormalForm { symbol, roots } => {
            let s: SegreSymbol = symbol.parse()?;
            let roots = roots.iter().map(|r| parse_rational(r)).collect::<Result<Vec<_>, _>>()?;
            let p = build_normal_form(&s, &roots)?;
            println!("U: {}", render_form(p.u()));
            println!("V: {}", render_form(p.v()));
            let shown: Vec<String> = roots.iter().map(format_rational).collect();
            println!("roots: {}", shown.join(", "));
            Ok(0)
        }
        Command::Verify => {
            let results = verify::run_all();
            for r in &results {
                println!("{}", r.line());
            }
            Ok(if results.iter().all(|r| r.passed) { 0 } else { 4 })
        }
        Command::Random { symbol, seed } => {
            let s: SegreSymbol = symbol.parse()?;
            let p = random_instance(&s, seed)?;
            println!("{}", serde_json::to_string_pretty(&pencil_to_json(&p)).expect("json"));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_status(&e))
        }
    }
}
