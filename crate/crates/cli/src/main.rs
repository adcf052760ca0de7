use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fibcube::factorization::{factorize_with, format_factorization};
use fibcube::graph::{
    all_pairs_distances_with, is_isomorphic, parse_edge_list, to_dot, to_edge_list,
};
use fibcube::relations::is_prime_with;
use fibcube::suites::{run_suite, to_tap, GridBounds, Suite};
use fibcube::{build_cube, count_words, enumerate_words, CubeParams, Exec, Family, Graph};

/// Largest cube `gen` and `build` will materialize.
const MAX_CUBE_VERTICES: u128 = 1 << 22;
/// All-pairs distances for `stats` are quadratic in memory.
const STATS_VERTEX_LIMIT: usize = 4096;

#[derive(Parser)]
#[command(
    name = "fibcube",
    version,
    about = "Fibonacci (p,r)-cubes and Cartesian product factorization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the words of a cube, one per line, in lexicographic order
    Gen(CubeArgs),
    /// Print the number of words of a cube
    Count(CubeArgs),
    /// Write a cube or graph file as an edge list or DOT
    Build {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Print `prime` or the factorization into prime factors
    Factor(Source),
    /// Print `prime` or `composite`
    Prime(Source),
    /// Decide isomorphism of two graphs, each `family:p:r:n` or a file path
    Iso { a: String, b: String },
    /// Vertex and edge counts, degree sequence and diameter
    Stats(Source),
    /// Run a verification suite over the parameter grid, TAP output
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u16).range(1..))]
        pmax: u16,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u16).range(1..))]
        rmax: u16,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u16).range(0..=64))]
        nmax: u16,
        #[arg(long, default_value_t = 300, value_parser = clap::value_parser!(u64).range(1..))]
        cap: u64,
    },
}

#[derive(Args)]
struct CubeArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(short = 'p', value_parser = clap::value_parser!(u16).range(1..))]
    p: u16,
    #[arg(short = 'r', value_parser = clap::value_parser!(u16).range(1..))]
    r: u16,
    #[arg(short = 'n', value_parser = clap::value_parser!(u8).range(0..=64))]
    n: u8,
}

impl CubeArgs {
    fn params(&self) -> CubeParams {
        CubeParams::new(self.family, self.p.into(), self.r.into(), self.n.into())
            .expect("flags validated by clap")
    }
}

/// A cube given by flags, or a graph file.
#[derive(Args)]
#[group(required = true, multiple = true)]
struct Source {
    #[arg(long, value_parser = parse_family, requires_all = ["p", "r", "n"], conflicts_with = "input")]
    family: Option<Family>,
    #[arg(short = 'p', value_parser = clap::value_parser!(u16).range(1..), requires = "family")]
    p: Option<u16>,
    #[arg(short = 'r', value_parser = clap::value_parser!(u16).range(1..), requires = "family")]
    r: Option<u16>,
    #[arg(short = 'n', value_parser = clap::value_parser!(u8).range(0..=64), requires = "family")]
    n: Option<u8>,
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<Graph> {
        match (&self.input, self.family, self.p, self.r, self.n) {
            (Some(path), ..) => read_graph(path),
            (None, Some(family), Some(p), Some(r), Some(n)) => {
                let params = CubeParams::new(family, p.into(), r.into(), n.into())?;
                checked_cube(params)
            }
            _ => unreachable!("clap enforces a complete source"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Dot,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|_| format!("expected o or i, got {s:?}"))
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse()
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn check_size(params: CubeParams) -> Result<()> {
    let count = count_words(params);
    if count > MAX_CUBE_VERTICES {
        bail!("graph too large: {params} has {count} vertices, limit {MAX_CUBE_VERTICES}");
    }
    Ok(())
}

fn checked_cube(params: CubeParams) -> Result<Graph> {
    check_size(params)?;
    Ok(build_cube(params))
}

/// `family:p:r:n`, e.g. `o:2:2:4`.
fn parse_cube_spec(s: &str) -> Option<CubeParams> {
    let fields: Vec<&str> = s.split(':').collect();
    let [family, p, r, n] = fields[..] else {
        return None;
    };
    CubeParams::new(
        family.parse().ok()?,
        p.parse().ok()?,
        r.parse().ok()?,
        n.parse().ok()?,
    )
    .ok()
}

fn load_operand(s: &str) -> Result<Graph> {
    match parse_cube_spec(s) {
        Some(params) => checked_cube(params),
        None => read_graph(Path::new(s)),
    }
}

fn configure_threads() -> std::result::Result<(), String> {
    let Ok(value) = std::env::var("FIBCUBE_THREADS") else {
        return Ok(());
    };
    let threads: usize = match value.trim().parse() {
        Ok(t) if t >= 1 => t,
        _ => {
            return Err(format!(
                "FIBCUBE_THREADS must be a positive integer, got {value:?}"
            ))
        }
    };
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())?;
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode> {
    let exec = Exec::default();
    match cli.command {
        Command::Gen(cube) => {
            let params = cube.params();
            check_size(params)?;
            for w in enumerate_words(params) {
                writeln!(out, "{w}")?;
            }
        }
        Command::Count(cube) => writeln!(out, "{}", count_words(cube.params()))?,
        Command::Build {
            source,
            format,
            output,
        } => {
            let g = source.load()?;
            let text = match format {
                Format::Edges => to_edge_list(&g),
                Format::Dot => to_dot(&g),
            };
            match output {
                Some(path) => {
                    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
                }
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Factor(source) => {
            let f = factorize_with(&source.load()?, exec)?;
            out.write_all(format_factorization(&f).as_bytes())?;
        }
        Command::Prime(source) => {
            let prime = is_prime_with(&source.load()?, exec)?;
            writeln!(out, "{}", if prime { "prime" } else { "composite" })?;
        }
        Command::Iso { a, b } => {
            let same = is_isomorphic(&load_operand(&a)?, &load_operand(&b)?)?;
            writeln!(
                out,
                "{}",
                if same { "isomorphic" } else { "not-isomorphic" }
            )?;
        }
        Command::Stats(source) => {
            let g = source.load()?;
            if g.vertex_count() > STATS_VERTEX_LIMIT {
                bail!(
                    "graph too large: {} vertices, stats limit {STATS_VERTEX_LIMIT}",
                    g.vertex_count()
                );
            }
            let degrees: Vec<String> = g.degree_sequence().iter().map(usize::to_string).collect();
            let diameter = match all_pairs_distances_with(&g, exec).diameter() {
                Some(d) => d.to_string(),
                None => "infinite".to_string(),
            };
            writeln!(out, "vertices {}", g.vertex_count())?;
            writeln!(out, "edges {}", g.edge_count())?;
            writeln!(out, "degrees {}", degrees.join(" "))?;
            writeln!(out, "diameter {diameter}")?;
        }
        Command::Verify {
            suite,
            pmax,
            rmax,
            nmax,
            cap,
        } => {
            let bounds = GridBounds {
                p_max: pmax.into(),
                r_max: rmax.into(),
                n_max: nmax.into(),
                vertex_cap: cap.try_into().unwrap_or(usize::MAX),
            };
            let reports = run_suite(suite, bounds, exec);
            out.write_all(to_tap(&reports).as_bytes())?;
            if !reports.iter().all(|r| r.passed()) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<io::Error>()
        .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
}
