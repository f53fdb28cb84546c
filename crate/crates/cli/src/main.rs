use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use zonobez::grassmann::{abs_map, check_gp3, check_quad_ineq, pluecker};
use zonobez::io::{self, Body};
use zonobez::reduction::extremal_config;
use zonobez::rng::SplitMix64;
use zonobez::verify::{bezout_volumes, check_af_square, check_bezout, check_lemma_matrix, fuzz_trials, summarize};
use zonobez::witness::{pyramid_equality_report, volume_polytope};
use zonobez::zonotope::{mixed_volume, mixed_volume_f64, volume, volume_f64};
use zonobez::{FuzzConfig, FuzzTarget, IneqReport, Mat3xM, Rat, SStats, Vec3, Zonotope3};

/// Exact mixed volumes of zonotopes in R³ and checks of the Bézout-type
/// inequality V(A,A,A)·V(A,B,C) ≤ (3/2)·V(A,A,B)·V(A,A,C).
#[derive(Parser, Debug)]
#[command(name = "zonobez", version)]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Floating point is only accepted by `mixedvol` and `volume`.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Output {
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// V(A,B,C) of three zonotope files.
    Mixedvol { a: PathBuf, b: PathBuf, c: PathBuf },
    /// Volume of a zonotope or polytope file.
    Volume { file: PathBuf },
    /// Check one inequality or identity on given inputs.
    Check {
        #[command(subcommand)]
        target: CheckTarget,
    },
    /// Random trials of one inequality.
    Fuzz(FuzzArgs),
    /// The four-generator family s1[0,(λ,μ,1)] + s2[0,(λ,μ',1)] + s3[0,(λ',μ,1)] + s4[0,(λ',μ',1)].
    Extremal(Box<ExtremalArgs>),
    /// A random 3×n matrix and its Plücker vector.
    GrassmannSample {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 16)]
        coeff_bound: i64,
    },
    /// Reference instances plus a short fuzz run of every target.
    Report {
        #[arg(long, default_value_t = 200)]
        trials: u64,
    },
}

#[derive(Subcommand, Debug)]
enum CheckTarget {
    Bezout { a: PathBuf, b: PathBuf, c: PathBuf },
    /// Matrix file whose columns are the generators.
    Lemma { matrix: PathBuf },
    AfSquare { a: PathBuf, b: PathBuf, c: PathBuf, d: PathBuf },
    /// Three-term Plücker relations and the quadratic inequality on |p|.
    Grassmann { matrix: PathBuf },
}

#[derive(Args, Debug)]
struct FuzzArgs {
    #[arg(long, value_parser = parse_target)]
    target: FuzzTarget,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 6)]
    m_max: usize,
    #[arg(long, default_value_t = 16)]
    coeff_bound: i64,
}

#[derive(Args, Debug)]
struct ExtremalArgs {
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    s1: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    s2: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    s3: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    s4: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "0")]
    lambda: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "1")]
    lambda_prime: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "0")]
    mu: Rat,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true, default_value = "1")]
    mu_prime: Rat,
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse().map_err(|e: zonobez::Error| e.to_string())
}

fn parse_target(s: &str) -> Result<FuzzTarget, String> {
    s.parse().map_err(|e: zonobez::Error| e.to_string())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Status {
    Holds,
    Violated,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Holds
        } else {
            Status::Violated
        }
    }
}

/// Named quantities, printed as `name = value (~approx)` or as
/// `quantity,value` CSV rows.
#[derive(Default)]
struct Table {
    rows: Vec<(String, String, Option<String>)>,
}

impl Table {
    fn rat(&mut self, name: impl Into<String>, v: &Rat) -> &mut Self {
        let approx = (!v.is_integer()).then(|| v.approx_string());
        self.rows.push((name.into(), v.to_string(), approx));
        self
    }

    fn text(&mut self, name: impl Into<String>, v: impl ToString) -> &mut Self {
        self.rows.push((name.into(), v.to_string(), None));
        self
    }

    fn report(&mut self, prefix: &str, r: &IneqReport) -> &mut Self {
        self.rat(format!("{prefix}lhs"), &r.lhs).rat(format!("{prefix}rhs"), &r.rhs);
        self.rat(format!("{prefix}slack"), &r.slack);
        match &r.ratio {
            Some(q) => self.rat(format!("{prefix}ratio"), q),
            None => self.text(format!("{prefix}ratio"), "undefined"),
        };
        self.text(format!("{prefix}holds"), r.holds)
    }

    fn render(&self, output: Output) -> String {
        let mut s = String::new();
        match output {
            Output::Text => {
                for (k, v, approx) in &self.rows {
                    match approx {
                        Some(a) => s.push_str(&format!("{k} = {v} (~{a})\n")),
                        None => s.push_str(&format!("{k} = {v}\n")),
                    }
                }
            }
            Output::Csv => {
                s.push_str("quantity,value\n");
                for (k, v, _) in &self.rows {
                    s.push_str(&format!("{k},{v}\n"));
                }
            }
        }
        s
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn zonotope(path: &Path) -> Result<Zonotope3> {
    io::parse_zonotope(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn matrix(path: &Path) -> Result<Mat3xM> {
    io::parse_matrix(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn require_exact(mode: Mode, what: &str) -> Result<()> {
    if mode == Mode::Float {
        bail!("{what} runs in exact mode only");
    }
    Ok(())
}

fn float_value(x: f64) -> String {
    x.to_string()
}

fn run(cli: &Cli) -> Result<(String, Status)> {
    let mut table = Table::default();
    let mut status = Status::Holds;
    match &cli.command {
        Command::Mixedvol { a, b, c } => {
            let (a, b, c) = (zonotope(a)?, zonotope(b)?, zonotope(c)?);
            match cli.mode {
                Mode::Exact => table.rat("mixed_volume", &mixed_volume(&a, &b, &c)),
                Mode::Float => table.text("mixed_volume", float_value(mixed_volume_f64(&a, &b, &c))),
            };
        }
        Command::Volume { file } => {
            let body = io::parse_body(&read(file)?).with_context(|| format!("parsing {}", file.display()))?;
            match (body, cli.mode) {
                (Body::Zonotope(z), Mode::Exact) => table.rat("volume", &volume(&z)),
                (Body::Zonotope(z), Mode::Float) => table.text("volume", float_value(volume_f64(&z))),
                (Body::Polytope(p), Mode::Exact) => table.rat("volume", &volume_polytope(&p)),
                (Body::Polytope(p), Mode::Float) => table.text("volume", float_value(volume_polytope(&p).to_f64())),
                (Body::Matrix(_), _) => bail!("{}: expected a zonotope3 or polytope3 file", file.display()),
            };
        }
        Command::Check { target } => {
            require_exact(cli.mode, "check")?;
            status = check(target, &mut table)?;
        }
        Command::Fuzz(args) => {
            require_exact(cli.mode, "fuzz")?;
            let config = FuzzConfig {
                trials: args.trials,
                m_max: args.m_max,
                coeff_bound: args.coeff_bound,
                target: args.target,
                seed: cli.seed,
            };
            let records = fuzz_trials(&config)?;
            let summary = summarize(&config, &records);
            let status = Status::of(summary.failures == 0);
            let text = match cli.output {
                Output::Csv => io::render_fuzz_csv(&records),
                Output::Text => format!("target    = {}\n{summary}", config.target),
            };
            return Ok((text, status));
        }
        Command::Extremal(x) => {
            require_exact(cli.mode, "extremal")?;
            let s = SStats::new(x.s1.clone(), x.s2.clone(), x.s3.clone(), x.s4.clone())?;
            let (a, b, c) = extremal_config(&s, &x.lambda, &x.lambda_prime, &x.mu, &x.mu_prime)?;
            let (vol, abc, aab, aac) = bezout_volumes(&a, &b, &c);
            table.rat("V(A,A,A)", &vol).rat("V(A,B,C)", &abc).rat("V(A,A,B)", &aab).rat("V(A,A,C)", &aac);
            let rep = check_bezout(&a, &b, &c);
            match &rep.ratio {
                Some(q) => table.rat("ratio", q),
                None => table.text("ratio", "undefined"),
            };
            table.text("balanced", s.is_balanced()).text("equality", rep.is_equality());
            status = Status::of(rep.holds);
        }
        Command::GrassmannSample { n, coeff_bound } => {
            require_exact(cli.mode, "grassmann-sample")?;
            if *n < 3 || *coeff_bound < 1 {
                bail!("need n >= 3 and coeff-bound >= 1");
            }
            let m = Mat3xM::new(SplitMix64::new(cli.seed).vectors(*n, *coeff_bound));
            let p = pluecker(&m)?;
            let text = match cli.output {
                Output::Csv => io::render_pluecker_csv(&p),
                Output::Text => format!("{}{}", io::render_matrix(&m), io::render_pluecker_csv(&p)),
            };
            return Ok((text, status));
        }
        Command::Report { trials } => {
            require_exact(cli.mode, "report")?;
            status = report(*trials, cli.seed, &mut table)?;
        }
    }
    Ok((table.render(cli.output), status))
}

fn check(target: &CheckTarget, table: &mut Table) -> Result<Status> {
    let (rep, witness) = match target {
        CheckTarget::Bezout { a, b, c } => {
            let (a, b, c) = (zonotope(a)?, zonotope(b)?, zonotope(c)?);
            let w = [&a, &b, &c].map(io::render_zonotope).concat();
            (check_bezout(&a, &b, &c), w)
        }
        CheckTarget::Lemma { matrix: path } => {
            let m = matrix(path)?;
            (check_lemma_matrix(m.columns()), io::render_matrix(&m))
        }
        CheckTarget::AfSquare { a, b, c, d } => {
            let zs = [zonotope(a)?, zonotope(b)?, zonotope(c)?, zonotope(d)?];
            let w = zs.iter().map(io::render_zonotope).collect::<String>();
            (check_af_square(&zs[0], &zs[1], &zs[2], &zs[3]), w)
        }
        CheckTarget::Grassmann { matrix: path } => return check_grassmann(&matrix(path)?, table),
    };
    table.report("", &rep);
    if !rep.holds {
        table.text("witness", witness.replace('\n', ";"));
    }
    Ok(Status::of(rep.holds))
}

fn check_grassmann(m: &Mat3xM, table: &mut Table) -> Result<Status> {
    let p = pluecker(m)?;
    let residuals = check_gp3(&p);
    let nonzero: Vec<_> = residuals.iter().filter(|g| !g.residual.is_zero()).collect();
    table.text("columns", m.ncols()).text("relations", residuals.len()).text("nonzero_residuals", nonzero.len());
    for g in &nonzero {
        let [a, b, c, d] = g.abcd.map(|i| i + 1);
        table.rat(format!("residual[{};{},{},{},{}]", g.s + 1, a, b, c, d), &g.residual);
    }
    let mut ok = nonzero.is_empty();
    if m.ncols() >= 5 {
        let rep = check_quad_ineq(&abs_map(&p), m.ncols() - 2)?;
        table.report("quad_", &rep);
        ok &= rep.holds;
    }
    Ok(Status::of(ok))
}

fn report(trials: u64, seed: u64, table: &mut Table) -> Result<Status> {
    let mut ok = true;
    let cube = Zonotope3::unit_cube();
    let (e1, e2) = (Zonotope3::segment(Vec3::e1()), Zonotope3::segment(Vec3::e2()));
    table.rat("V(cube,[0,e1],[0,e2])", &mixed_volume(&cube, &e1, &e2));

    let ones = SStats::from_ints([1, 1, 1, 1])?;
    let (zero, one) = (Rat::zero(), Rat::one());
    let (a, b, c) = extremal_config(&ones, &zero, &one, &zero, &one)?;
    let rep = check_bezout(&a, &b, &c);
    ok &= rep.holds;
    table.report("extremal_", &rep);

    let rep = check_lemma_matrix(a.generators());
    ok &= rep.holds;
    table.report("lemma_", &rep);

    let rep = pyramid_equality_report();
    ok &= rep.holds;
    table.report("pyramid_", &rep);

    for target in [FuzzTarget::Bezout, FuzzTarget::Lemma, FuzzTarget::AfSquare] {
        let config = FuzzConfig::new(target, trials, seed);
        let summary = summarize(&config, &fuzz_trials(&config)?);
        ok &= summary.failures == 0;
        table.text(format!("fuzz_{target}_trials"), summary.trials);
        table.text(format!("fuzz_{target}_failures"), summary.failures);
        table.rat(format!("fuzz_{target}_min_slack"), &summary.min_slack);
        match &summary.max_ratio {
            Some(q) => table.rat(format!("fuzz_{target}_max_ratio"), q),
            None => table.text(format!("fuzz_{target}_max_ratio"), "undefined"),
        };
    }
    Ok(Status::of(ok))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|(text, status)| emit(cli.out.as_deref(), &text).map(|_| status)) {
        Ok(Status::Holds) => ExitCode::SUCCESS,
        Ok(Status::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
