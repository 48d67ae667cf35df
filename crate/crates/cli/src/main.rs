//! Command-line surface for the eigencone library.
//!
//! Exit codes: 0 on success, 1 on a mathematical mismatch (golden diffs,
//! failed suite criteria, non-membership), 2 on usage errors.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use eigencones::acceptance::{self, SuiteOptions};
use eigencones::eigencone::{self, Criterion};
use eigencones::rootsys::{Label, RootSystem};
use eigencones::schubert::{CupTable, Space};
use eigencones::tensor::{self, TensorCtx};
use eigencones::typea::{self, HornCtx, Partition};
use eigencones::weyl::{Parabolic, WeylGroup};
use eigencones::{Error, Result};

#[derive(Parser)]
#[command(
    name = "eigencones",
    about = "Saturated tensor cones of low-rank simple Lie algebras, exactly",
    version
)]
struct Cli {
    /// Worker threads for parallel scans (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigencone inequality systems: generation, membership, facets, goldens.
    Eigencone {
        #[command(subcommand)]
        cmd: EigenconeCmd,
    },
    /// Deformed (Belkale-Kumar) product tables and checks.
    Bk {
        #[command(subcommand)]
        cmd: BkCmd,
    },
    /// Schubert structure constants.
    Schubert {
        #[command(subcommand)]
        cmd: SchubertCmd,
    },
    /// Horn index sets and Hermitian membership.
    Horn {
        #[command(subcommand)]
        cmd: HornCmd,
    },
    /// One Littlewood-Richardson coefficient.
    Lr(LrArgs),
    /// Tensor multiplicities, saturation scans, rigidity.
    Tensor {
        #[command(subcommand)]
        cmd: TensorCmd,
    },
    /// Run the full acceptance suite, one verdict line per criterion.
    Suite {
        /// Skip the D4 stretch count.
        #[arg(long)]
        skip_d4: bool,
        /// Sample count for the diagram-automorphism agreement check.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 20240617)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum EigenconeCmd {
    /// Generate the inequality system for one type.
    Gen {
        #[arg(long = "type")]
        label: String,
        #[arg(long, default_value_t = 3)]
        s: usize,
        #[arg(long, default_value = "bk")]
        criterion: String,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test membership of dominant points listed in a JSON file.
    Member {
        #[arg(long = "type")]
        label: String,
        #[arg(long)]
        points: PathBuf,
        #[arg(long, default_value = "bk")]
        criterion: String,
    },
    /// Facet verdicts for every inequality (exact LP).
    Facets {
        #[arg(long = "type")]
        label: String,
        #[arg(long, default_value = "bk")]
        criterion: String,
    },
    /// Compare the generated system against the published facet list.
    Golden {
        #[arg(long = "type")]
        label: String,
    },
}

#[derive(Subcommand)]
enum BkCmd {
    /// Print the deformed multiplication table of one maximal parabolic.
    Table {
        #[arg(long = "type")]
        label: String,
        #[arg(long)]
        parabolic: usize,
        /// Compare against the embedded published table and report cell diffs.
        #[arg(long)]
        diff_golden: bool,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Associativity, duality and exponent checks for one type.
    Check {
        #[arg(long = "type")]
        label: String,
    },
}

#[derive(Subcommand)]
enum SchubertCmd {
    /// Dump the full cup multiplication table of G/P.
    Dump {
        #[arg(long = "type")]
        label: String,
        #[arg(long)]
        parabolic: usize,
        #[arg(long, default_value = "epsilon")]
        basis: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Subcommand)]
enum HornCmd {
    /// Print the Horn set S^r_n (or the relaxed variant with --hat).
    Set {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        hat: bool,
    },
    /// Hermitian triple membership from a JSON file.
    Member {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Args)]
struct LrArgs {
    #[arg(long)]
    lam: String,
    #[arg(long)]
    mu: String,
    #[arg(long)]
    nu: String,
}

#[derive(Subcommand)]
enum TensorCmd {
    /// Invariant dimension of a weight triple.
    Mult {
        #[arg(long = "type")]
        label: String,
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Saturation scan: failing triples and restoring multipliers (CSV).
    Satscan {
        #[arg(long = "type")]
        label: String,
        #[arg(long, default_value_t = 2)]
        bound: i64,
        #[arg(long)]
        dmax: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rigidity scan for SL(r).
    Rigidity {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command) {
        Ok(clean) => {
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Error::Precondition(msg)) | Err(Error::Config(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}

/// Returns Ok(false) for a clean run that found a mathematical mismatch.
fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Eigencone { cmd } => eigencone_cmd(cmd),
        Command::Bk { cmd } => bk_cmd(cmd),
        Command::Schubert { cmd } => schubert_cmd(cmd),
        Command::Horn { cmd } => horn_cmd(cmd),
        Command::Lr(args) => {
            let lam = parse_partition(&args.lam)?;
            let mu = parse_partition(&args.mu)?;
            let nu = parse_partition(&args.nu)?;
            println!("{}", typea::lr_coefficient(&lam, &mu, &nu));
            Ok(true)
        }
        Command::Tensor { cmd } => tensor_cmd(cmd),
        Command::Suite { skip_d4, samples, seed } => {
            let opts = SuiteOptions { include_d4: !skip_d4, samples, seed };
            let results = acceptance::run_all(&opts);
            let mut all = true;
            for r in &results {
                println!(
                    "criterion {:2} ({}): {} [{:.2}s]",
                    r.id,
                    r.name,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.seconds
                );
                println!("    {}", r.detail);
                all &= r.passed;
            }
            Ok(all)
        }
    }
}

fn label_of(s: &str) -> Result<Label> {
    Label::parse(s)
}

fn eigencone_cmd(cmd: EigenconeCmd) -> Result<bool> {
    match cmd {
        EigenconeCmd::Gen { label, s, criterion, format, out } => {
            let rs = RootSystem::new(label_of(&label)?)?;
            let system = eigencone::generate(&rs, s, Criterion::parse(&criterion)?)?;
            let text = match format.as_str() {
                "json" => output::system_json(&system)?,
                "csv" => output::system_csv(&system),
                "text" => output::system_text(&system),
                other => return Err(Error::Config(format!("unknown format '{other}'"))),
            };
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Error::Internal(format!("write {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(true)
        }
        EigenconeCmd::Member { label, points, criterion } => {
            let rs = RootSystem::new(label_of(&label)?)?;
            let system = eigencone::generate(&rs, 3, Criterion::parse(&criterion)?)?;
            let pts = output::read_points(&rs, &points)?;
            let (ok, violated) = eigencone::membership(&pts, &system)?;
            if ok {
                println!("member");
            } else {
                println!("not a member; {} violated inequalities:", violated.len());
                for k in violated {
                    println!("  {}", output::inequality_text(&system, &system.ineqs[k]));
                }
            }
            Ok(ok)
        }
        EigenconeCmd::Facets { label, criterion } => {
            let rs = RootSystem::new(label_of(&label)?)?;
            let system = eigencone::generate(&rs, 3, Criterion::parse(&criterion)?)?;
            let verdicts = eigencone::irredundancy_check(&system)?;
            let mut facets = 0usize;
            for (ineq, v) in system.ineqs.iter().zip(&verdicts) {
                let tag = match v {
                    eigencone::FacetVerdict::Facet => {
                        facets += 1;
                        "facet"
                    }
                    eigencone::FacetVerdict::Redundant => "redundant",
                };
                println!("{tag}: {}", output::inequality_text(&system, ineq));
            }
            println!("{facets}/{} facets", system.ineqs.len());
            Ok(facets == system.ineqs.len())
        }
        EigenconeCmd::Golden { label } => {
            let rs = RootSystem::new(label_of(&label)?)?;
            let system = eigencone::generate(&rs, 3, Criterion::Bk)?;
            let diff = eigencone::compare_with_golden(&system)?;
            for (ip, mine, gold) in &diff.per_parabolic {
                println!("P{ip}: generated {mine}, published {gold}");
            }
            if diff.matches() {
                println!("exact match");
                Ok(true)
            } else {
                println!(
                    "MISMATCH: {} extra, {} missing",
                    diff.extra.len(),
                    diff.missing.len()
                );
                Ok(false)
            }
        }
    }
}

fn bk_cmd(cmd: BkCmd) -> Result<bool> {
    match cmd {
        BkCmd::Table { label, parabolic, diff_golden, format } => {
            let rs = RootSystem::new(label_of(&label)?)?;
            let wg = WeylGroup::enumerate(&rs);
            let p = Parabolic::maximal(rs.rank, parabolic)?;
            let table = CupTable::build(Space::parabolic(&wg, &p)?)?;
            match format.as_str() {
                "json" => println!("{}", output::bk_table_json(&table)?),
                "text" => print!("{}", output::bk_table_text(&table)?),
                other => return Err(Error::Config(format!("unknown format '{other}'"))),
            }
            if diff_golden {
                match eigencones::golden::table(&label.to_uppercase(), parabolic) {
                    None => {
                        println!("no published table embedded for {label} P{parabolic}");
                        return Ok(false);
                    }
                    Some(gold) => {
                        let diff = acceptance::compare_table(gold)?;
                        println!(
                            "golden diff: {}/{} cells match",
                            diff.cells_matched, diff.cells_total
                        );
                        for m in &diff.mismatches {
                            println!(
                                "  [{} x {}]: printed {} vs computed {}{}",
                                m.row,
                                m.col,
                                m.printed,
                                m.computed,
                                if m.documented { " (documented typo)" } else { "" }
                            );
                        }
                        for issue in &diff.label_issues {
                            println!("  label issue: {issue}");
                        }
                        return Ok(diff.mismatches.is_empty());
                    }
                }
            }
            Ok(true)
        }
        BkCmd::Check { label } => {
            let rs = RootSystem::new(label_of(&label)?)?;
            let wg = WeylGroup::enumerate(&rs);
            let mut ok = true;
            for ip in 1..=rs.rank {
                let p = Parabolic::maximal(rs.rank, ip)?;
                let table = CupTable::build(Space::parabolic(&wg, &p)?)?;
                let n = table.space.len();
                let nvars = table.space.complement().len();
                let unit = |pos| eigencones::bkprod::DeformedClass::unit(pos, nvars);
                let mut assoc_bad = 0usize;
                for a in 0..n {
                    for b in a..n {
                        let ab = eigencones::bkprod::deformed_product(&table, a, b)?;
                        for c in b..n {
                            let ab_c =
                                eigencones::bkprod::deformed_mul(&table, &ab, &unit(c))?;
                            let bc = eigencones::bkprod::deformed_product(&table, b, c)?;
                            let a_bc =
                                eigencones::bkprod::deformed_mul(&table, &bc, &unit(a))?;
                            if ab_c != a_bc {
                                assoc_bad += 1;
                            }
                        }
                    }
                }
                println!(
                    "{label} P{ip}: {} classes, associativity violations {assoc_bad}",
                    n
                );
                ok &= assoc_bad == 0;
            }
            Ok(ok)
        }
    }
}

fn schubert_cmd(cmd: SchubertCmd) -> Result<bool> {
    match cmd {
        SchubertCmd::Dump { label, parabolic, basis, format } => {
            let rs = RootSystem::new(label_of(&label)?)?;
            let wg = WeylGroup::enumerate(&rs);
            let p = Parabolic::maximal(rs.rank, parabolic)?;
            let table = CupTable::build(Space::parabolic(&wg, &p)?)?;
            let x_basis = match basis.as_str() {
                "epsilon" | "eps" => false,
                "x" => true,
                other => return Err(Error::Config(format!("unknown basis '{other}'"))),
            };
            match format.as_str() {
                "json" => println!("{}", output::cup_table_json(&table, x_basis)?),
                "text" => print!("{}", output::cup_table_text(&table, x_basis)),
                other => return Err(Error::Config(format!("unknown format '{other}'"))),
            }
            Ok(true)
        }
    }
}

fn horn_cmd(cmd: HornCmd) -> Result<bool> {
    match cmd {
        HornCmd::Set { r, n, hat } => {
            let set = output::cached_horn_set(r, n, hat)?;
            for (i, j, k) in &set {
                println!(
                    "({}; {}; {})",
                    output::join_u32(i),
                    output::join_u32(j),
                    output::join_u32(k)
                );
            }
            println!("{} triples", set.len());
            Ok(true)
        }
        HornCmd::Member { file } => {
            let (a1, a2, a3) = output::read_hermitian_triple(&file)?;
            let ctx = HornCtx::new();
            let (ok, violations) = typea::hermitian_membership(&ctx, &a1, &a2, &a3)?;
            if ok {
                println!("member");
            } else {
                println!("not a member; violated Horn inequalities:");
                for (r, (i, j, k)) in violations {
                    println!(
                        "  r={r}: ({}; {}; {})",
                        output::join_u32(&i),
                        output::join_u32(&j),
                        output::join_u32(&k)
                    );
                }
            }
            Ok(ok)
        }
    }
}

fn tensor_cmd(cmd: TensorCmd) -> Result<bool> {
    match cmd {
        TensorCmd::Mult { label, lam, mu, nu } => {
            let rs = RootSystem::new(label_of(&label)?)?;
            let ctx = TensorCtx::new(&rs);
            let lam = parse_coords(&lam, rs.rank)?;
            let mu = parse_coords(&mu, rs.rank)?;
            let nu = parse_coords(&nu, rs.rank)?;
            println!("{}", ctx.invariant_dim(&lam, &mu, &nu)?);
            Ok(true)
        }
        TensorCmd::Satscan { label, bound, dmax, out } => {
            let rs = RootSystem::new(label_of(&label)?)?;
            let dmax = dmax.unwrap_or(rs.k_g() * rs.k_g());
            let scan = tensor::saturation_scan(&rs, bound, dmax)?;
            let csv = output::satscan_csv(&scan);
            match out {
                Some(path) => std::fs::write(&path, csv)
                    .map_err(|e| Error::Internal(format!("write {}: {e}", path.display())))?,
                None => print!("{csv}"),
            }
            println!(
                "scanned {} root-lattice triples, {} members, {} failing",
                scan.triples_scanned,
                scan.members_scanned,
                scan.failing.len()
            );
            Ok(true)
        }
        TensorCmd::Rigidity { r, bound } => {
            let (violations, checked) = tensor::rigidity_scan(r, bound)?;
            println!("{checked} multiplicity-one triples checked, {violations} violations");
            Ok(violations == 0)
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    let parts: Vec<u32> = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("bad partition part '{t}'")))
        })
        .collect::<Result<_>>()?;
    Partition::new(parts)
}

fn parse_coords(s: &str, rank: usize) -> Result<Vec<i64>> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Precondition(format!("bad coordinate '{t}'")))
        })
        .collect::<Result<_>>()?;
    if v.len() != rank {
        return Err(Error::Precondition(format!(
            "expected {rank} coordinates, got {}",
            v.len()
        )));
    }
    Ok(v)
}
