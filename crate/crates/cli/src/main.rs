//! Command-line entry point: generate Q-function hierarchies, run the
//! verification suites, compute individual T-functions along any route,
//! and evaluate supercharacters.

mod source;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use baxterq::diagrams::{self, GradedTuple, Partition};
use baxterq::qhierarchy::QHierarchy;
use baxterq::ratfn::RationalFn;
use baxterq::scalar;
use baxterq::tfun::boxes::{normalized_f, normalized_f_via_jt, JTAxis};
use baxterq::tfun::chars::{sergeev_pragacz, super_schur_tab, wronskian_char};
use baxterq::tfun::wronskian::{laplace_t, typical_t, weyl_sum_t, wronskian_t, LaplaceRegime};
use baxterq::tfun::TCtx;
use baxterq::verify::{mutation_seeds, run_suite, Mode, Suite, SuiteConfig, VerifyReport};

use source::SourceArgs;

#[derive(Parser)]
#[command(
    name = "baxterq",
    about = "Exact Baxter Q-function hierarchies and functional-relation verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a hierarchy file from seeded free data.
    Gen(GenArgs),
    /// Run verification suites and stream one report line per identity.
    Verify(VerifyArgs),
    /// Compute a T-function along one or more routes.
    Tfun(TfunArgs),
    /// Evaluate the x -> 0 supercharacter three ways.
    Char(CharArgs),
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Output hierarchy file (stdout when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites: all, or a comma list of
    /// qq,tsystem,backlund,baxter,pole,conserved,detids,conj,tf,char,conv,reverse,typical.
    #[arg(default_value = "all")]
    suite: String,
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value_t = 3)]
    a_max: i64,
    #[arg(long, default_value_t = 3)]
    s_max: i64,
    /// Pointwise mode: checks at max-degree-plus-one sample points, which
    /// still proves equality for the known degree bound.
    #[arg(long)]
    fast: bool,
    /// Extra sample points beyond the degree bound in fast mode.
    #[arg(long, default_value_t = 2)]
    samples: u32,
    /// Run this many seeded single-coefficient mutations and expect
    /// failures (sensitivity testing).
    #[arg(long, default_value_t = 0)]
    mutate: usize,
    /// Base seed for the mutation sequence.
    #[arg(long, default_value_t = 0)]
    mutation_seed: u64,
    /// Omit the timing field so report streams are byte-comparable.
    #[arg(long)]
    no_timing: bool,
    /// Parallel suite evaluation bound (reports stay in suite order).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Report stream output (stdout when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TfunArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Young diagram as comma-separated parts; empty for the Q-function
    /// itself.
    #[arg(long, default_value = "")]
    mu: String,
    /// Boson indices (defaults to all).
    #[arg(long = "B")]
    bosons: Option<String>,
    /// Fermion indices (defaults to all).
    #[arg(long = "F")]
    fermions: Option<String>,
    /// Routes: all, or a comma list of wronskian,tab,jt,weyl,laplace,typical.
    #[arg(long, default_value = "wronskian")]
    route: String,
    /// Use the barred convention (mirrored shifts).
    #[arg(long)]
    barred: bool,
    /// Check that all selected routes agree exactly.
    #[arg(long)]
    check: bool,
    /// Evaluate at an exact rational point instead of printing the
    /// function.
    #[arg(long)]
    at: Option<String>,
}

#[derive(Args)]
struct CharArgs {
    #[arg(long = "M")]
    m_bos: usize,
    #[arg(long = "N")]
    n_fer: usize,
    #[arg(long, default_value = "")]
    mu: String,
    /// Twist parameters (defaults to the first primes).
    #[arg(long)]
    z: Option<String>,
    #[arg(long, default_value = "2")]
    t: String,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Gen(args) => cmd_gen(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Tfun(args) => cmd_tfun(args),
        Cmd::Char(args) => cmd_char(args),
    }
}

fn cmd_gen(args: GenArgs) -> Result<i32> {
    let h = args.source.build_single().context(
        "generation failed; a genericity error usually means the twists resonate -- change --z or --seed",
    )?;
    let text = h.save_to_string();
    match &args.output {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    eprintln!(
        "wrote {} subset records (M={}, N={}, max degree {}, seed {})",
        1 << h.size(),
        h.twist().m_bos(),
        h.twist().n_fer(),
        h.max_degree(),
        h.seed()
    );
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    let suites = Suite::parse(&args.suite)
        .with_context(|| format!("unknown suite selector {:?}", args.suite))?;
    let (unbarred, barred) = args.source.build_pair()?;
    let cfg = SuiteConfig {
        a_max: args.a_max,
        s_max: args.s_max,
        mode: if args.fast {
            Mode::Fast {
                extra: args.samples,
            }
        } else {
            Mode::Exact
        },
    };
    let mut out: Box<dyn Write> = match &args.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut all_reports: Vec<VerifyReport> = Vec::new();
    if args.mutate == 0 {
        all_reports.extend(run_parallel(&suites, &unbarred, &barred, &cfg, args.jobs));
    } else {
        for seed in mutation_seeds(args.mutation_seed, args.mutate) {
            let (mutated, witness) = unbarred.with_mutation(seed);
            writeln!(out, "mutation\t{witness}")?;
            all_reports.extend(run_parallel(&suites, &mutated, &barred, &cfg, args.jobs));
        }
    }
    let mut fails = 0usize;
    for r in &all_reports {
        writeln!(out, "{}", r.line(!args.no_timing))?;
        if !r.pass {
            fails += 1;
        }
    }
    writeln!(out, "# summary")?;
    let mut ids: Vec<&str> = all_reports.iter().map(|r| r.id.as_str()).collect();
    ids.sort();
    ids.dedup();
    for id in ids {
        let total = all_reports.iter().filter(|r| r.id == id).count();
        let bad = all_reports.iter().filter(|r| r.id == id && !r.pass).count();
        writeln!(out, "# {id}: {}/{} pass", total - bad, total)?;
    }
    writeln!(
        out,
        "# overall: {} checks, {} failures -> {}",
        all_reports.len(),
        fails,
        if fails == 0 { "PASS" } else { "FAIL" }
    )?;
    out.flush()?;
    Ok(if fails == 0 { 0 } else { 1 })
}

fn run_parallel(
    suites: &[Suite],
    unbarred: &QHierarchy,
    barred: &QHierarchy,
    cfg: &SuiteConfig,
    jobs: usize,
) -> Vec<VerifyReport> {
    if jobs <= 1 || suites.len() <= 1 {
        let mut out = Vec::new();
        for &s in suites {
            out.extend(run_suite(s, unbarred, barred, cfg));
        }
        return out;
    }
    // Suites are the parallel unit; the merge keeps suite order, so the
    // stream is deterministic regardless of the job count.
    let mut slots: Vec<Option<Vec<VerifyReport>>> = vec![None; suites.len()];
    let mut next = 0usize;
    while next < suites.len() {
        let batch_end = (next + jobs).min(suites.len());
        let batch: Vec<(usize, Suite)> = (next..batch_end).map(|i| (i, suites[i])).collect();
        let results = std::thread::scope(|scope| {
            let handles: Vec<_> = batch
                .iter()
                .map(|&(i, s)| scope.spawn(move || (i, run_suite(s, unbarred, barred, cfg))))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("suite thread"))
                .collect::<Vec<_>>()
        });
        for (i, reports) in results {
            slots[i] = Some(reports);
        }
        next = batch_end;
    }
    slots.into_iter().flatten().flatten().collect()
}

fn cmd_tfun(args: TfunArgs) -> Result<i32> {
    let h = args.source.build_single()?;
    let twist = h.twist();
    let mu: Partition = args.mu.parse()?;
    let bs = parse_indices(args.bosons.as_deref(), &twist.bosons())?;
    let fs = parse_indices(args.fermions.as_deref(), &twist.fermions())?;
    for &b in &bs {
        if !twist.is_boson(b) {
            bail!("index {b} is not bosonic for M={}", twist.m_bos());
        }
    }
    for &f in &fs {
        if twist.is_boson(f) {
            bail!("index {f} is not fermionic for M={}", twist.m_bos());
        }
    }
    let barred = args.barred || h.convention().is_barred();
    let routes: Vec<&str> = if args.route == "all" {
        vec!["wronskian", "tab", "jt", "weyl"]
    } else {
        args.route.split(',').map(str::trim).collect()
    };
    let mut tuple_indices = bs.clone();
    tuple_indices.extend(&fs);
    let tuple = GradedTuple::new(tuple_indices, twist.m_bos() as u8);
    let ctx = TCtx::new(&h);
    let mut values: Vec<(String, RationalFn)> = Vec::new();
    for route in &routes {
        let value = match *route {
            "wronskian" => RationalFn::from_poly(wronskian_t(&h, barred, &bs, &fs, &mu)),
            "tab" => normalized_f(&ctx, &tuple, &mu, barred).to_ratfn(&ctx),
            "jt" => normalized_f_via_jt(&ctx, &tuple, &mu, barred, JTAxis::Row).to_ratfn(&ctx),
            "weyl" => RationalFn::from_poly(weyl_sum_t(&h, barred, &bs, &fs, &mu)),
            "laplace" => {
                let (a, s) = rectangle_of(&mu)?;
                let (m, n) = (bs.len() as i64, fs.len() as i64);
                let regime = if a - s <= m - n {
                    LaplaceRegime::Boson
                } else {
                    LaplaceRegime::Fermion
                };
                RationalFn::from_poly(laplace_t(&h, barred, &bs, &fs, a, s, regime, true)?)
            }
            "typical" => RationalFn::from_poly(typical_t(&h, barred, &bs, &fs, &mu, 0, 0)?),
            other => bail!("unknown route {other:?}"),
        };
        values.push((route.to_string(), value));
    }
    let mut agree = true;
    for (name, value) in &values {
        match &args.at {
            Some(x0) => {
                let x0 = scalar::parse_scalar(x0)?;
                match value.eval(&x0) {
                    Ok(v) => println!("{name}: {}", scalar::display_scalar(&v)),
                    Err(_) => println!("{name}: pole at sample"),
                }
            }
            None => println!("{name}: {value}"),
        }
        if !value.eq_exact(&values[0].1) {
            agree = false;
        }
    }
    if args.check {
        println!("{}", if agree { "AGREE" } else { "DISAGREE" });
        return Ok(if agree { 0 } else { 1 });
    }
    Ok(0)
}

fn cmd_char(args: CharArgs) -> Result<i32> {
    let source = SourceArgs::for_char(args.m_bos, args.n_fer, args.z.clone(), args.t.clone());
    let h = source.build_single()?;
    let twist = h.twist();
    let mu: Partition = args.mu.parse()?;
    if !diagrams::hook_check(&mu, args.m_bos, args.n_fer) {
        eprintln!(
            "warning: {mu} lies outside the ({},{})-hook; supercharacter is 0 by convention",
            args.m_bos, args.n_fer
        );
        println!("sergeev-pragacz: 0\ntableaux: 0\nwronskian: 0\nAGREE");
        return Ok(0);
    }
    let sp = sergeev_pragacz(twist, &mu).map_err(|e| anyhow::anyhow!(e.to_string()))?;
    let tab = super_schur_tab(twist, &mu).map_err(|e| anyhow::anyhow!(e.to_string()))?;
    let wr = wronskian_char(&h, &mu).map_err(|e| anyhow::anyhow!(e.to_string()))?;
    println!("sergeev-pragacz: {}", scalar::display_scalar(&sp));
    println!("tableaux: {}", scalar::display_scalar(&tab));
    println!("wronskian: {}", scalar::display_scalar(&wr));
    let agree = sp == tab && tab == wr;
    println!("{}", if agree { "AGREE" } else { "DISAGREE" });
    if args.m_bos >= 1 && args.n_fer >= 1 {
        let labels = diagrams::kac_dynkin(&mu, args.m_bos, args.n_fer)
            .map_err(|e| anyhow::anyhow!(e.to_string()))?;
        let typ = if diagrams::is_typical(&mu, args.m_bos, args.n_fer) {
            "typical"
        } else {
            "atypical"
        };
        println!("kac-dynkin: {labels:?} ({typ})");
    }
    Ok(if agree { 0 } else { 1 })
}

fn parse_indices(arg: Option<&str>, default: &[u8]) -> Result<Vec<u8>> {
    match arg {
        None => Ok(default.to_vec()),
        Some("") => Ok(Vec::new()),
        Some(s) => s
            .split(',')
            .map(|p| p.trim().parse::<u8>().context("bad index list"))
            .collect(),
    }
}

fn rectangle_of(mu: &Partition) -> Result<(i64, i64)> {
    let parts = mu.parts();
    if parts.is_empty() {
        return Ok((0, 0));
    }
    if parts.iter().any(|&p| p != parts[0]) {
        bail!("laplace route needs a rectangular diagram, got {mu}");
    }
    Ok((parts.len() as i64, parts[0] as i64))
}
