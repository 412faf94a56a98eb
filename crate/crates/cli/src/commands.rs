use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::Subcommand;

use semischur::cayley::{parse_cay_stream, write_cay, CayMeta, CayleyTable};
use semischur::census;
use semischur::families;
use semischur::partition::Partition;
use semischur::schur::{self, SchurMode, Strategy};
use semischur::stats::{round2, StatsSummary};

/// Exit statuses: 0 success, 1 verification or invariant failure, 2 input
/// or parse error.
const EXIT_OK: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_INPUT: i32 = 2;

#[derive(Subcommand)]
pub enum Command {
    /// Compile a family spec (e.g. `LO(3)`, `roster(K1(2), x=0, H={1}, K={2})`)
    /// into a `.cay` table.
    Gen {
        /// Family spec in the constructor mini-language.
        spec: String,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether a partition is a Schur ring of a table.
    Check {
        /// `.cay` file holding one table.
        file: PathBuf,
        /// Partition in class syntax `0|1+2|3` or RGS syntax `0.0.1.2`.
        partition: String,
        #[arg(long, default_value = "semigroup")]
        mode: SchurMode,
    },
    /// Enumerate all Schur rings of a table.
    Enumerate {
        /// `.cay` file holding one table (omit with --spec).
        file: Option<PathBuf>,
        /// Family spec instead of a file.
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, default_value = "semigroup")]
        mode: SchurMode,
        #[arg(long, default_value = "pruned")]
        strategy: Strategy,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Print the unique coarsest Schur ring of a table.
    Coarsest {
        file: Option<PathBuf>,
        #[arg(long)]
        spec: Option<String>,
    },
    /// Generate the census of an order and print it as TSV.
    Census {
        #[arg(long)]
        order: usize,
        /// Also enumerate the Schur rings of every row.
        #[arg(long)]
        schur: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the census as a `.cay` stream to this file as well.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Cap on the parameter ranges within the suite.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Ring-count statistics over a full order.
    Stats {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Reformat tables and partitions.
    Convert {
        #[command(subcommand)]
        what: ConvertTarget,
    },
}

#[derive(Subcommand)]
pub enum ConvertTarget {
    /// Re-emit a `.cay` stream (validates every record).
    Table {
        file: PathBuf,
        /// Canonicalize each table up to equivalence first.
        #[arg(long)]
        canonical: bool,
    },
    /// Print a partition in both class and RGS syntax.
    Partition {
        text: String,
        #[arg(long)]
        n: usize,
    },
}

pub fn run(command: Command) -> i32 {
    match dispatch(command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_INPUT
        }
    }
}

fn load_single_table(file: Option<&PathBuf>, spec: Option<&str>) -> Result<CayleyTable> {
    match (file, spec) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let records = parse_cay_stream(&text)?;
            match records.len() {
                1 => Ok(records.into_iter().next().unwrap().0),
                n => bail!("expected exactly one table, found {n}"),
            }
        }
        (None, Some(spec)) => Ok(families::build_str(spec)?),
        _ => bail!("provide exactly one of FILE or --spec"),
    }
}

fn ring_report(t: &CayleyTable, p: &Partition) -> String {
    match t.order() {
        3 | 4 => format!("{p} [{}]", p.paper_index().unwrap()),
        _ => p.to_string(),
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Gen { spec, out } => {
            let family = families::parse(&spec)?;
            let normalized = families::normalize(&family)?;
            if normalized != family {
                eprintln!("note: spec normalizes to {normalized}");
            }
            let table = families::build(&family)?;
            let mut text = String::new();
            write_cay(
                &table,
                &CayMeta {
                    name: Some(family.to_string()),
                    forsythe: None,
                    gap: None,
                },
                &mut text,
            );
            match out {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            file,
            partition,
            mode,
        } => {
            let table = load_single_table(Some(&file), None)?;
            let p = Partition::parse(&partition, table.order())?;
            match schur::schur_violation(&table, &p, mode)? {
                None => {
                    println!("true");
                    Ok(EXIT_OK)
                }
                Some(witness) => {
                    println!("false: {witness}");
                    Ok(EXIT_FAIL)
                }
            }
        }
        Command::Enumerate {
            file,
            spec,
            mode,
            strategy,
            jobs,
        } => {
            let table = load_single_table(file.as_ref(), spec.as_deref())?;
            let rings =
                schur::enumerate_schur_rings_jobs(&table, mode, strategy, None, jobs)?;
            println!("omega={}", rings.len());
            for p in &rings.rings {
                println!("{}", ring_report(&table, p));
            }
            Ok(EXIT_OK)
        }
        Command::Coarsest { file, spec } => {
            let table = load_single_table(file.as_ref(), spec.as_deref())?;
            let coarsest = schur::coarsest_schur_ring(&table)?;
            println!("{}", ring_report(&table, &coarsest));
            Ok(EXIT_OK)
        }
        Command::Census {
            order,
            schur: with_schur,
            jobs,
            out,
        } => {
            let checkpoint = std::env::var_os("SCHUR_CHECKPOINT_DIR").map(PathBuf::from);
            let records = census::generate_all_jobs(order, jobs, checkpoint.as_deref())?;
            println!("forsythe\tgap\tfamily\tomega\trings");
            for r in &records {
                let (omega, rings) = if with_schur {
                    let set = schur::enumerate_schur_rings_jobs(
                        &r.table,
                        SchurMode::Semigroup,
                        Strategy::Pruned,
                        None,
                        jobs,
                    )?;
                    let shown: Vec<String> =
                        set.rings.iter().map(|p| ring_report(&r.table, p)).collect();
                    (set.len().to_string(), shown.join(";"))
                } else {
                    (String::new(), String::new())
                };
                println!(
                    "{:0width$}\t{}\t{}\t{}\t{}",
                    r.forsythe,
                    r.gap.map_or(String::new(), |g| g.to_string()),
                    r.family.as_deref().unwrap_or(""),
                    omega,
                    rings,
                    width = if order == 4 { 3 } else { 2 },
                );
            }
            if let Some(path) = out {
                std::fs::write(&path, census::export_tables(&records))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, max_n, jobs } => {
            let names: Vec<&str> = if suite == "all" {
                semischur::verify::SUITE_NAMES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut failed = false;
            for name in names {
                let result = semischur::verify::run_suite(name, max_n, jobs)
                    .map_err(|e| anyhow!(e))?;
                for instance in &result.instances {
                    match &instance.outcome {
                        Ok(()) => println!("pass: [{}] {}", result.suite, instance.name),
                        Err(msg) => {
                            failed = true;
                            println!("FAIL: [{}] {} -- {msg}", result.suite, instance.name);
                        }
                    }
                }
            }
            Ok(if failed { EXIT_FAIL } else { EXIT_OK })
        }
        Command::Stats { order, jobs } => {
            let checkpoint = std::env::var_os("SCHUR_CHECKPOINT_DIR").map(PathBuf::from);
            let records = census::generate_all_jobs(order, jobs, checkpoint.as_deref())?;
            let omegas: Vec<usize> = records
                .iter()
                .map(|r| {
                    schur::enumerate_schur_rings_jobs(
                        &r.table,
                        SchurMode::Semigroup,
                        Strategy::Pruned,
                        None,
                        jobs,
                    )
                    .map(|s| s.len())
                })
                .collect::<Result<_, _>>()?;
            let summary = StatsSummary::from_counts(order, &omegas);
            println!("order={order}");
            println!("count={}", summary.total());
            let dist: Vec<String> = summary
                .pairs()
                .iter()
                .map(|(w, c)| format!("{w}:{c}"))
                .collect();
            println!("distribution={}", dist.join(" "));
            println!("mean={:.2}", round2(summary.mean));
            println!("stdev={:.2}", round2(summary.stdev));
            println!("bell_fraction={:.3}", summary.bell_fraction);
            println!("schur_dense={}", summary.schur_dense_count);
            Ok(EXIT_OK)
        }
        Command::Convert { what } => match what {
            ConvertTarget::Table { file, canonical } => {
                let text = std::fs::read_to_string(&file)
                    .with_context(|| format!("reading {}", file.display()))?;
                let mut records = census::import_tables(&text)?;
                if canonical {
                    records = census::rank_imported(records);
                }
                print!("{}", census::export_tables(&records));
                Ok(EXIT_OK)
            }
            ConvertTarget::Partition { text, n } => {
                let p = Partition::parse(&text, n)?;
                println!("classes={p}");
                println!("rgs={}", p.rgs_string());
                if matches!(n, 3 | 4) {
                    println!("index={}", p.paper_index()?);
                }
                Ok(EXIT_OK)
            }
        },
    }
}
