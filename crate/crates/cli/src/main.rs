use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use pqeuler::harness::{self, CheckReport, CHECKS, THREADS_ENV};
use pqeuler::maps::{csz_trace, fv, fv_star, fz, invol_phi, invol_psi};
use pqeuler::permstat::{basic_stats, stat_polynomial, Family, Permutation, Weight};
use pqeuler::qeuler::euler_table;
use pqeuler::{contfrac, Error};

#[derive(Parser)]
#[command(
    name = "pqeuler",
    version,
    about = "Exact checks for (p,q)-tangent and secant number identities",
    after_help = "Worker threads: set PQEULER_THREADS (default: available parallelism)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every statistic of a permutation, e.g. `stats 231`.
    Stats {
        perm: Permutation,
        #[arg(long)]
        json: bool,
    },
    /// Run a named check (or `all` at default parameters).
    Verify(VerifyArgs),
    /// Expand a continued-fraction preset.
    Cf {
        preset: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Sum a weight over a permutation family, or print the Euler table.
    Table(TableArgs),
    /// Apply a bijection or involution, or verify one exhaustively.
    Bij(BijArgs),
    /// Write the cross-checked Euler table as JSON.
    Export {
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id, or `all`.
    #[arg(required_unless_present = "list")]
    id: Option<String>,
    #[arg(long, conflicts_with = "order")]
    n: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    json: bool,
    /// List the registered checks.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Family: S, D, Dstar, A, Astar, Aprime, Adoubleprime.
    #[arg(long, default_value = "S")]
    family: Family,
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Product of factors such as `x^wex*(-1/q)^exc*(q^2)^thto`.
    #[arg(long, default_value = "1")]
    weight: Weight,
    /// `euler` prints the Euler table for sizes 0..=n instead.
    #[arg(long)]
    what: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BijArgs {
    /// One of csz, phi, psi, fv, fv_star, fz.
    name: String,
    #[arg(required_unless_present = "verify")]
    perm: Option<Permutation>,
    /// Run the exhaustive checks for the named map up to `--n`.
    #[arg(long)]
    verify: bool,
    #[arg(long, default_value_t = 7)]
    n: usize,
    #[arg(long)]
    json: bool,
}

/// Exit 0 on success, 1 on a failed check, 2 on usage errors.
enum Status {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = harness::init_thread_pool() {
        eprintln!("error: {e} ({THREADS_ENV} must be a positive integer)");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn run(command: Command) -> Result<Status, Error> {
    match command {
        Command::Stats { perm, json } => {
            let rec = basic_stats(&perm);
            if json {
                print_json(&rec)?;
            } else {
                println!("{}", rec.to_kv_line());
            }
            Ok(Status::Ok)
        }
        Command::Verify(args) => verify(args),
        Command::Cf {
            preset,
            order,
            json,
        } => {
            let series = contfrac::preset(&preset)?.expand(order)?;
            if json {
                print_json(&json!({ "preset": preset, "order": order, "series": series }))?;
            } else {
                println!("{series}");
            }
            Ok(Status::Ok)
        }
        Command::Table(args) => table(args),
        Command::Bij(args) => bij(args),
        Command::Export { n, out } => {
            let table = euler_table(n)?;
            let text =
                serde_json::to_string_pretty(&table).map_err(|e| Error::Internal(e.to_string()))?;
            match out {
                Some(path) => fs::write(&path, text + "\n")
                    .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?,
                None => println!("{text}"),
            }
            Ok(Status::Ok)
        }
    }
}

fn verify(args: VerifyArgs) -> Result<Status, Error> {
    if args.list {
        for c in CHECKS {
            let kind = c.kind.name();
            println!(
                "{:<16} {kind}={:<3} max {:<3} {}",
                c.id,
                c.default_param(),
                c.max,
                c.summary
            );
        }
        return Ok(Status::Ok);
    }
    let id = args.id.unwrap_or_default();
    let reports: Vec<CheckReport> = if id == "all" {
        if args.n.is_some() || args.order.is_some() {
            return Err(Error::InvalidArgument(
                "`verify all` runs default parameters".into(),
            ));
        }
        harness::check_all()?
    } else {
        let spec = harness::find(&id)?;
        // Either size flag is accepted whatever the check's parameter kind.
        let param = args.n.or(args.order).unwrap_or_else(|| spec.default_param());
        vec![harness::check(&id, param)?]
    };
    if args.json {
        if reports.len() == 1 {
            print_json(&reports[0])?;
        } else {
            print_json(&reports)?;
        }
    } else {
        for r in &reports {
            println!("{r}");
        }
    }
    Ok(if reports.iter().all(|r| r.passed) {
        Status::Ok
    } else {
        Status::Failed
    })
}

fn table(args: TableArgs) -> Result<Status, Error> {
    match args.what.as_deref() {
        None => {
            let poly = stat_polynomial(args.family, args.n, &args.weight)?;
            if args.json {
                print_json(&json!({
                    "family": args.family.name(),
                    "n": args.n,
                    "weight": args.weight.to_string(),
                    "polynomial": poly,
                }))?;
            } else {
                println!("{poly}");
            }
        }
        Some("euler") => {
            let table = euler_table(args.n)?;
            if args.json {
                print_json(&table)?;
            } else {
                for row in &table.rows {
                    println!(
                        "{:>2}  {:>12}  {}  [{}]",
                        row.n,
                        row.e_int,
                        row.e_pq,
                        row.methods.join(", ")
                    );
                }
            }
        }
        Some(other) => return Err(Error::UnknownName(format!("table `{other}`"))),
    }
    Ok(Status::Ok)
}

fn bij(args: BijArgs) -> Result<Status, Error> {
    if args.verify {
        let id = match args.name.as_str() {
            "csz" => "thm3_2",
            "phi" | "psi" => "sz_linear",
            "fv" | "fv_star" | "fz" => "oracle",
            other => return Err(Error::UnknownName(format!("map `{other}`"))),
        };
        return verify(VerifyArgs {
            id: Some(id.to_string()),
            n: Some(args.n),
            order: None,
            json: args.json,
            list: false,
        });
    }
    let perm = args.perm.expect("clap requires a permutation");
    let image = match args.name.as_str() {
        "csz" => {
            let (tau, biword) = csz_trace(&perm);
            if args.json {
                print_json(
                    &json!({ "input": perm.to_string(), "image": tau.to_string(), "biword": biword }),
                )?;
            } else {
                println!("{tau}");
                println!("f  = {:?}\nf' = {:?}", biword.f, biword.f_prime);
                println!("g  = {:?}\ng' = {:?}", biword.g, biword.g_prime);
                println!("top    = {:?}\nbottom = {:?}", biword.top, biword.bottom);
            }
            return Ok(Status::Ok);
        }
        "phi" => invol_phi(&perm).to_string(),
        "psi" => invol_psi(&perm)?.to_string(),
        "fv" => fv(&perm)?.to_string(),
        "fv_star" => fv_star(&perm)?.to_string(),
        "fz" => fz(&perm).to_string(),
        other => return Err(Error::UnknownName(format!("map `{other}`"))),
    };
    if args.json {
        print_json(&json!({ "map": args.name, "input": perm.to_string(), "image": image }))?;
    } else {
        println!("{image}");
    }
    Ok(Status::Ok)
}
