use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};

use trifree_core::io::{parse_coloring, read_graph, write_coloring, write_dual, write_rotation};
use trifree_core::timing::bench;
use trifree_core::verify::{check_structure, find_monochromatic_triangle};
use trifree_core::{
    build_dual, color_graph, generate, hierarchy::hierarchy, make_maximal, perfect_matching_with,
    render_svg, run_pipeline, Error, GeneratorKind, MatcherKind,
};

const SEED_VAR: &str = "TRIFREE_SEED";

#[derive(Parser, Debug)]
#[command(name = "trifree", version, about = "Triangle-free 2-colorings of planar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Color a graph file so that no triangle is monochromatic.
    Color {
        input: PathBuf,
        #[command(flatten)]
        out: OutputArg,
        #[arg(long, default_value_t = MatcherKind::Fast)]
        matcher: MatcherKind,
        /// Also write an SVG drawing (coordinate-form input only).
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Run the structural checks on the intermediate artifacts.
        #[arg(long)]
        debug_asserts: bool,
        /// Check the drawing for crossing straight edges (quadratic).
        #[arg(long)]
        validate_geometry: bool,
    },
    /// Check a coloring against a graph; exits 1 with a witness on failure.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Emit a generated maximal planar graph in rotation form.
    Gen {
        kind: GeneratorKind,
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Add edges until every face is a triangle.
    Triangulate {
        input: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Emit the dual graph, optionally with a perfect matching.
    Dual {
        input: PathBuf,
        /// Append `m <dual-edge>` lines for a perfect matching.
        #[arg(long = "match")]
        with_matching: bool,
        #[arg(long, default_value_t = MatcherKind::Fast)]
        matcher: MatcherKind,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Print the triangle hierarchy of the triangulated input.
    Hierarchy {
        input: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Draw a colored coordinate-form graph as SVG.
    Render {
        graph: PathBuf,
        coloring: PathBuf,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Time the coloring pipeline and fit a log-log slope.
    Bench {
        #[arg(long, default_value_t = GeneratorKind::Apollonian)]
        kind: GeneratorKind,
        #[arg(long, value_delimiter = ',', default_values_t = [1024usize, 4096, 16384, 65536])]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [0u64, 1, 2])]
        seeds: Vec<u64>,
        #[arg(long, default_value_t = MatcherKind::Fast)]
        matcher: MatcherKind,
    },
}

#[derive(Args, Debug)]
struct OutputArg {
    /// Write here instead of stdout.
    #[arg(short, long, value_name = "PATH")]
    output: Option<PathBuf>,
}

/// Flattened view of one invocation.
#[derive(Debug, Default)]
struct RunConfig {
    input: Option<PathBuf>,
    output: Option<PathBuf>,
    seed: u64,
    matcher: MatcherKind,
    emit_svg: Option<PathBuf>,
    debug_asserts: bool,
    validate_geometry: bool,
}

enum Failure {
    Usage(String),
    Input(anyhow::Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInvariantViolation(_) => Failure::Verify(e.to_string()),
            other => Failure::Input(anyhow!(other)),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &Path) -> Result<trifree_core::EmbeddedGraph, Failure> {
    let text = read_text(path)?;
    read_graph(&text).map_err(|e| Failure::Input(anyhow!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes()).context("writing stdout")?;
        }
    }
    Ok(())
}

fn seed_from_env(flag: u64) -> Result<u64, Failure> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{SEED_VAR}={v} is not an unsigned integer"))),
        Err(_) => Ok(flag),
    }
}

fn cmd_color(cfg: &RunConfig) -> Result<(), Failure> {
    let path = cfg.input.as_deref().expect("color has an input");
    let g = load(path)?;
    if cfg.validate_geometry {
        g.check_geometry()?;
    }
    let coloring = if cfg.debug_asserts && g.n() > 4 {
        let run = run_pipeline(&g, cfg.matcher)?;
        let problems = check_structure(&run.maximal, &run.dual, &run.matching, &run.hierarchy);
        if let Some(p) = problems.first() {
            return Err(Failure::Verify(p.to_string()));
        }
        run.coloring
    } else {
        color_graph(&g, cfg.matcher)?
    };
    if cfg.debug_asserts {
        if let Some(v) = find_monochromatic_triangle(&g, &coloring)? {
            return Err(Failure::Verify(v.to_string()));
        }
    }
    if let Some(svg) = &cfg.emit_svg {
        let drawing = render_svg(&g, &coloring)?;
        fs::write(svg, drawing).with_context(|| format!("writing {}", svg.display()))?;
    }
    emit(cfg.output.as_deref(), &write_coloring(&coloring))
}

fn cmd_verify(graph: &Path, coloring: &Path) -> Result<(), Failure> {
    let g = load(graph)?;
    let c = parse_coloring(&read_text(coloring)?)
        .map_err(|e| Failure::Input(anyhow!("{}: {e}", coloring.display())))?;
    match find_monochromatic_triangle(&g, &c)? {
        Some(v) => Err(Failure::Verify(v.to_string())),
        None => {
            println!("ok: {} vertices, no monochromatic triangle", g.n());
            Ok(())
        }
    }
}

fn cmd_gen(kind: GeneratorKind, size: usize, cfg: &RunConfig) -> Result<(), Failure> {
    if size < kind.min_size() {
        return Err(Failure::Usage(format!(
            "{kind} needs size >= {}, got {size}",
            kind.min_size()
        )));
    }
    let g = generate(kind, size, cfg.seed)?;
    emit(cfg.output.as_deref(), &write_rotation(&g))
}

fn cmd_triangulate(cfg: &RunConfig) -> Result<(), Failure> {
    let g = load(cfg.input.as_deref().expect("input"))?;
    let t = make_maximal(&g)?;
    emit(cfg.output.as_deref(), &write_rotation(&t.graph))
}

fn cmd_dual(with_matching: bool, cfg: &RunConfig) -> Result<(), Failure> {
    let g = load(cfg.input.as_deref().expect("input"))?;
    let d = build_dual(&g);
    let m = if with_matching {
        Some(perfect_matching_with(&d, cfg.matcher)?)
    } else {
        None
    };
    emit(cfg.output.as_deref(), &write_dual(&g, &d, m.as_ref())?)
}

fn cmd_hierarchy(cfg: &RunConfig) -> Result<(), Failure> {
    let g = load(cfg.input.as_deref().expect("input"))?;
    let maximal = if g.is_maximal() { g } else { make_maximal(&g)?.graph };
    let h = hierarchy(&maximal)?;
    emit(cfg.output.as_deref(), &h.to_text())
}

fn cmd_render(graph: &Path, coloring: &Path, cfg: &RunConfig) -> Result<(), Failure> {
    let g = load(graph)?;
    let c = parse_coloring(&read_text(coloring)?)
        .map_err(|e| Failure::Input(anyhow!("{}: {e}", coloring.display())))?;
    emit(cfg.output.as_deref(), &render_svg(&g, &c)?)
}

fn cmd_bench(kind: GeneratorKind, sizes: &[usize], seeds: &[u64], matcher: MatcherKind) -> Result<(), Failure> {
    if sizes.is_empty() || seeds.is_empty() {
        return Err(Failure::Usage("bench needs at least one size and one seed".into()));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::Usage("bench sizes must be strictly ascending".into()));
    }
    if let Some(&n) = sizes.iter().find(|&&n| n < kind.min_size()) {
        return Err(Failure::Usage(format!("{kind} needs size >= {}, got {n}", kind.min_size())));
    }
    if matcher == MatcherKind::Reference {
        // Correctness only: every coloring is checked, the slope is informational.
        for &n in sizes {
            for &seed in seeds {
                let g = generate(kind, n, seed)?;
                let c = color_graph(&g, matcher)?;
                if let Some(v) = find_monochromatic_triangle(&g, &c)? {
                    return Err(Failure::Verify(format!("n={n} seed={seed}: {v}")));
                }
            }
        }
    }
    let report = bench(kind, sizes, seeds, matcher)?;
    println!("bench {kind} matcher={matcher} seeds={}", seeds.len());
    for row in &report.rows {
        println!("n={} median_s={:.6}", row.n, row.median);
    }
    match (report.slope, matcher) {
        (None, _) => println!("slope=undefined"),
        (Some(s), MatcherKind::Fast) => println!("slope={s:.3}"),
        (Some(s), MatcherKind::Reference) => println!("slope={s:.3} (exempt)"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut cfg = RunConfig::default();
    match cli.command {
        Command::Color {
            input,
            out,
            matcher,
            svg,
            debug_asserts,
            validate_geometry,
        } => {
            cfg.input = Some(input);
            cfg.output = out.output;
            cfg.matcher = matcher;
            cfg.emit_svg = svg;
            cfg.debug_asserts = debug_asserts;
            cfg.validate_geometry = validate_geometry;
            cmd_color(&cfg)
        }
        Command::Verify { graph, coloring } => cmd_verify(&graph, &coloring),
        Command::Gen { kind, size, seed, out } => {
            cfg.seed = seed_from_env(seed)?;
            cfg.output = out.output;
            cmd_gen(kind, size, &cfg)
        }
        Command::Triangulate { input, out } => {
            cfg.input = Some(input);
            cfg.output = out.output;
            cmd_triangulate(&cfg)
        }
        Command::Dual {
            input,
            with_matching,
            matcher,
            out,
        } => {
            cfg.input = Some(input);
            cfg.output = out.output;
            cfg.matcher = matcher;
            cmd_dual(with_matching, &cfg)
        }
        Command::Hierarchy { input, out } => {
            cfg.input = Some(input);
            cfg.output = out.output;
            cmd_hierarchy(&cfg)
        }
        Command::Render { graph, coloring, out } => {
            cfg.output = out.output;
            cmd_render(&graph, &coloring, &cfg)
        }
        Command::Bench {
            kind,
            sizes,
            seeds,
            matcher,
        } => cmd_bench(kind, &sizes, &seeds, matcher),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Input(e)) => {
            eprintln!("invalid input: {e:#}");
            ExitCode::from(3)
        }
    }
}
