use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use delta_slide::sweep::{self, SweepReport};
use delta_slide::{
    binary_representation, check_conjecture_instance, is_binary, normalize, parse_bouquet, parse_matrix,
    parse_set_system, serialize_bouquet, serialize_classification, serialize_matrix, serialize_set_system,
    Bouquet, Error, SetSystem, SymMatrix, DEFAULT_ORBIT_LIMIT,
};

#[derive(Parser)]
#[command(name = "delta-slide", version, about = "Handle slides on delta-matroids, matrices and bouquets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether a set system is a (binary) delta-matroid.
    Validate {
        #[arg(long)]
        set_system: PathBuf,
    },
    /// Slide `a` over `b` in a set system or matrix, or an edge end over a
    /// neighbouring edge in a bouquet.
    Slide {
        #[command(flatten)]
        input: AnyInput,
        /// `a b` for set systems and matrices; the edge to slide over for bouquets.
        #[arg(long, num_args = 1..=2, required = true)]
        over: Vec<String>,
        /// Rotation position of the sliding end (bouquets only).
        #[arg(long)]
        end: Option<usize>,
    },
    /// Twist a set system by a set of elements.
    Twist {
        #[arg(long)]
        set_system: PathBuf,
        #[arg(long, num_args = 0..)]
        by: Vec<String>,
    },
    /// Direct sum of two set systems on disjoint grounds.
    Sum {
        #[arg(long, num_args = 2, required = true)]
        set_system: Vec<PathBuf>,
    },
    /// Slide a binary delta-matroid with the empty set feasible to canonical form.
    Normalize {
        #[command(flatten)]
        input: SystemInput,
    },
    /// Canonical form of a bouquet.
    ClassifyBouquet {
        #[arg(long)]
        bouquet: PathBuf,
    },
    /// The delta-matroid of a bouquet or matrix.
    Dmatroid {
        #[command(flatten)]
        input: SourceInput,
    },
    /// A matrix representing a twist of a binary delta-matroid.
    Represent {
        #[arg(long)]
        set_system: PathBuf,
    },
    /// Interlacement matrix of a bouquet.
    Interlace {
        #[arg(long)]
        bouquet: PathBuf,
    },
    /// Exhaustive small-case checks.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Largest ground set (or edge count for bouquet sweeps).
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Search the slide orbit of a binary delta-matroid for `D_{i,j,k,l}`.
    Conjecture {
        #[arg(long)]
        set_system: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORBIT_LIMIT)]
        limit: usize,
    },
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct AnyInput {
    #[arg(long)]
    set_system: Option<PathBuf>,
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long)]
    bouquet: Option<PathBuf>,
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct SystemInput {
    #[arg(long)]
    set_system: Option<PathBuf>,
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct SourceInput {
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long)]
    bouquet: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    /// Matrix slides commute with taking delta-matroids.
    Con2,
    /// Minor identities under matrix slides.
    Det,
    /// Ribbon slides commute with taking delta-matroids.
    Ths,
    /// Normal forms, uniqueness and reachable spectra.
    Thm1,
    /// Binary delta-matroids are closed under slides.
    Closure,
    /// No coloop appears in the slide orbit of U_{2,4}.
    U24,
    /// Bouquets, interlacement matrices and normal forms agree.
    Triangle,
    /// The slide that leaves the class of delta-matroids.
    Escape,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: fn(&str) -> delta_slide::Result<T>) -> std::result::Result<T, Failure> {
    parse(&read(path)?).map_err(|e| match e {
        Error::Parse(p) => Failure::Usage(format!("{}: {p}", path.display())),
        other => other.into(),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn system_of(input: &SystemInput) -> std::result::Result<SetSystem, Failure> {
    match (&input.set_system, &input.matrix) {
        (Some(p), _) => load(p, parse_set_system),
        (_, Some(p)) => Ok(load(p, parse_matrix)?.delta_matroid()),
        _ => unreachable!("clap requires one input"),
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Validate { set_system } => {
            let d = load(&set_system, parse_set_system)?;
            let dm = d.is_delta_matroid();
            let mut out = format!("delta-matroid: {}\n", yes_no(dm));
            out.push_str(&format!("binary: {}\n", yes_no(dm && is_binary(&d)?)));
            if dm {
                out.push_str(&format!("parity: {}\n", d.parity()?));
            }
            Ok(out)
        }
        Command::Slide { input, over, end } => slide(input, &over, end),
        Command::Twist { set_system, by } => {
            let d = load(&set_system, parse_set_system)?;
            Ok(serialize_set_system(&d.twist(&by)?))
        }
        Command::Sum { set_system } => {
            let a = load(&set_system[0], parse_set_system)?;
            let b = load(&set_system[1], parse_set_system)?;
            Ok(serialize_set_system(&a.direct_sum(&b)?))
        }
        Command::Normalize { input } => {
            let d = system_of(&input)?;
            let res = normalize(&d)?;
            Ok(serialize_classification(&d, &res))
        }
        Command::ClassifyBouquet { bouquet } => {
            let b = load(&bouquet, parse_bouquet)?;
            Ok(format!("canonical: {}\n", b.classify()))
        }
        Command::Dmatroid { input } => {
            let d = match (&input.matrix, &input.bouquet) {
                (Some(p), _) => load(p, parse_matrix)?.delta_matroid(),
                (_, Some(p)) => load(p, parse_bouquet)?.delta_matroid(),
                _ => unreachable!("clap requires one input"),
            };
            Ok(serialize_set_system(&d))
        }
        Command::Represent { set_system } => {
            let d = load(&set_system, parse_set_system)?;
            let rep = binary_representation(&d)?.ok_or(Error::NotBinary)?;
            let twist = d.labels_of(rep.twist).join(" ");
            Ok(format!("# twisted by: {twist}\n{}", serialize_matrix(&rep.matrix)))
        }
        Command::Interlace { bouquet } => {
            let b = load(&bouquet, parse_bouquet)?;
            Ok(serialize_matrix(&b.interlacement_matrix()))
        }
        Command::Verify { theorem, max_n } => verify(theorem, max_n),
        Command::Conjecture { set_system, limit } => {
            let d = load(&set_system, parse_set_system)?;
            let r = check_conjecture_instance(&d, limit)?;
            let mut out = format!("orbit: {}\nfound: {}\n", r.orbit_size, yes_no(r.found));
            if let Some(s) = r.signature {
                out.push_str(&format!("signature: {s}\n"));
            }
            for s in &r.attained {
                out.push_str(&format!("attained: {s}\n"));
            }
            out.push_str(&format!("bookkeeping: {}\n", if r.bookkeeping_ok { "ok" } else { "mismatch" }));
            out.push_str(&format!(
                "j-spectrum: {}\n",
                if r.spectrum_complete { "complete" } else { "incomplete" }
            ));
            Ok(out)
        }
    }
}

fn slide(input: AnyInput, over: &[String], end: Option<usize>) -> Outcome {
    let pair = || match over {
        [a, b] => Ok((a.as_str(), b.as_str())),
        _ => Err(Failure::Usage("--over takes two elements `a b`".into())),
    };
    if let Some(p) = &input.set_system {
        let (a, b) = pair()?;
        let d = load(p, parse_set_system)?;
        return Ok(serialize_set_system(&d.handle_slide(a, b)?));
    }
    if let Some(p) = &input.matrix {
        let (a, b) = pair()?;
        let m: SymMatrix = load(p, parse_matrix)?;
        return Ok(serialize_matrix(&m.handle_slide(a, b)?));
    }
    let p = input.bouquet.as_ref().expect("clap requires one input");
    let (Some(end), [b]) = (end, over) else {
        return Err(Failure::Usage("bouquet slides take --end N --over b".into()));
    };
    let bq: Bouquet = load(p, parse_bouquet)?;
    Ok(serialize_bouquet(&bq.handle_slide(end, b)?))
}

fn verify(theorem: Theorem, max_n: usize) -> Outcome {
    let reports: Vec<SweepReport> = match theorem {
        Theorem::Con2 => sweep::verify_con2(max_n),
        Theorem::Det => vec![sweep::verify_det_identities(max_n)],
        Theorem::Ths => vec![sweep::verify_ths(max_n)],
        Theorem::Thm1 => vec![sweep::verify_thm1(max_n)],
        Theorem::Closure => vec![sweep::verify_closure(max_n)],
        Theorem::U24 => vec![sweep::verify_u24()],
        Theorem::Triangle => vec![sweep::verify_triangle(max_n, max_n + 1)],
        Theorem::Escape => vec![sweep::verify_slide_escape()],
    };
    // only the largest size is reported for per-size sweeps
    let shown: Vec<&SweepReport> = match theorem {
        Theorem::Con2 => reports.last().into_iter().collect(),
        _ => reports.iter().collect(),
    };
    let mut out: String = shown.iter().map(|r| format!("{r}\n")).collect();
    if let Some(bad) = reports.iter().find(|r| !r.is_ok()) {
        if !shown.iter().any(|r| std::ptr::eq(*r, bad)) {
            out.push_str(&format!("{bad}\n"));
        }
        print!("{out}");
        return Err(Failure::Domain(format!("{} failed", bad.name)));
    }
    Ok(out)
}

fn configure_threads() -> std::result::Result<(), Failure> {
    let Ok(raw) = std::env::var("DELTA_SLIDE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("DELTA_SLIDE_THREADS must be a number, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli.command)) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
