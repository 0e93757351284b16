//! `ribbon`: solve, count, and inspect tilings by ribbon L-shaped n-ominoes.
//!
//! Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage
//! or input error.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ribbon_tiling::constructions::{
    bar_tileable, k_copy_fixture, mixed_6x10_tiling, odd_rect_tiling, rect_tileable_tn, rect_tileable_tn_plus,
};
use ribbon_tiling::flipgraph::{flip_connected, two_tiling_region};
use ribbon_tiling::geometry::rect_region;
use ribbon_tiling::pattern::follows_rectangular_pattern;
use ribbon_tiling::render::{render_svg, render_text};
use ribbon_tiling::solver::{validate_tiling, SolveOptions};
use ribbon_tiling::verify::{self, Suite};
use ribbon_tiling::{Cell, Region, Solver, TileSet, Tiling, TilingError};

#[derive(Parser)]
#[command(name = "ribbon", version, about = "Tilings by translated ribbon L-shaped n-ominoes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first tiling in canonical order.
    Solve {
        #[command(flatten)]
        problem: Problem,
        #[arg(long, value_enum, default_value_t = Format::Tiling)]
        render: Format,
    },
    /// Count tilings.
    Count {
        #[command(flatten)]
        problem: Problem,
        /// Give up past this many tilings (exit 2).
        #[arg(long, default_value_t = 10_000_000)]
        cap: u64,
        /// Count tilings up to reflection in y = x (not a raw count).
        #[arg(long)]
        dedup_diagonal: bool,
    },
    /// Print tilings in canonical order, separated by blank lines.
    Enumerate {
        #[command(flatten)]
        problem: Problem,
        #[arg(long, default_value_t = 100)]
        limit: usize,
        #[arg(long, value_enum, default_value_t = Format::Tiling)]
        render: Format,
    },
    /// Decide whether a tiling follows the rectangular pattern.
    CheckPattern(TilingInput),
    /// Flip graph of all tilings under the square move.
    Flip {
        #[command(flatten)]
        problem: Problem,
        /// Refuse regions with more tilings than this (exit 2).
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        /// Also print the edge list.
        #[arg(long)]
        edges: bool,
    },
    /// Rectangle tileability from the known classifications.
    Classify {
        /// `Tn:N` with N even, `Tn+:N` with N even, or `bars:K`.
        #[arg(long)]
        tiles: String,
        /// Rectangle as HEIGHTxBASE.
        #[arg(long, value_parser = parse_rect)]
        rect: (i32, i32),
    },
    /// Draw a tiling file.
    Render {
        #[command(flatten)]
        input: TilingInput,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        render: Format,
    },
    /// Emit one of the explicit constructions.
    Fixture {
        #[command(subcommand)]
        which: Fixture,
    },
    /// Compare the classifications with the solver and print a transcript.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        max_side: Option<i32>,
        #[arg(long)]
        k: Option<i32>,
    },
}

#[derive(Args)]
struct Problem {
    /// `rect:AxB` (A = height) or `@FILE` in grid or cells format.
    #[arg(long)]
    region: String,
    /// Tile set, e.g. `Tn:4`, `Tn+:6`, `bars:3`, `Tn:4,rect:2x3`, `Tn:4+Tn:6`.
    #[arg(long)]
    tiles: String,
}

#[derive(Args)]
struct TilingInput {
    /// Tiling file (`TILE x y` per line) or `-` for stdin.
    tiling: String,
    /// Region the tiling must cover; defaults to the union of its tiles.
    #[arg(long)]
    region: Option<String>,
}

#[derive(Subcommand)]
enum Fixture {
    /// (3n)x(3n+1) rectangle tiled by T_n for odd n.
    Fig2c {
        #[arg(long, default_value_t = 5)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Tiling)]
        render: Format,
    },
    /// 6x10 rectangle tiled by T_4 and T_6 off the pattern.
    Fig6b {
        #[arg(long, value_enum, default_value_t = Format::Tiling)]
        render: Format,
    },
    /// Region with exactly two tilings by T_n; prints the first.
    Twotiling {
        #[arg(long, default_value_t = 6)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        extra: u32,
        #[arg(long, value_enum, default_value_t = Format::Tiling)]
        render: Format,
    },
    /// The T1 tile scaled by k, as a region file.
    Kcopy {
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        k: i32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// `TILE x y` lines.
    Tiling,
    /// Letter grid.
    Text,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Thm6,
    Cor3,
    Cor4,
    Flip,
    Fixtures,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Thm6 => Suite::TnRectangles,
            SuiteArg::Cor3 => Suite::TnPlusRectangles,
            SuiteArg::Cor4 => Suite::KCopies,
            SuiteArg::Flip => Suite::Flip,
            SuiteArg::Fixtures => Suite::Fixtures,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Outcome of a command: text to print and whether the verdict is negative.
struct Output {
    text: String,
    negative: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, negative: false }
    }

    fn verdict(text: String, affirmative: bool) -> Output {
        Output { text, negative: !affirmative }
    }
}

type CliResult = Result<Output, String>;

fn parse_rect(s: &str) -> Result<(i32, i32), String> {
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected HEIGHTxBASE, got `{s}`"))?;
    let side =
        |v: &str| v.trim().parse::<i32>().ok().filter(|&v| v > 0).ok_or_else(|| format!("bad side `{v}` in `{s}`"));
    Ok((side(a)?, side(b)?))
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        return io::read_to_string(io::stdin()).map_err(|e| format!("stdin: {e}"));
    }
    fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn load_region(spec: &str) -> Result<Region, String> {
    if let Some(dims) = spec.strip_prefix("rect:") {
        let (a, b) = parse_rect(dims)?;
        return rect_region(a, b, Cell::ORIGIN).map_err(|e| e.to_string());
    }
    if let Some(path) = spec.strip_prefix('@') {
        return Region::parse(&read_input(path)?).map_err(|e| format!("{path}: {e}"));
    }
    Err(format!("region must be `rect:AxB` or `@FILE`, got `{spec}`"))
}

fn load_tiles(spec: &str) -> Result<TileSet, String> {
    spec.parse().map_err(|e: TilingError| e.to_string())
}

fn load_tiling(input: &TilingInput) -> Result<Tiling, String> {
    let region = input.region.as_deref().map(load_region).transpose()?;
    let tiling = Tiling::parse(&read_input(&input.tiling)?, region).map_err(|e| format!("{}: {e}", input.tiling))?;
    if let Some(problem) = validate_tiling(&tiling).first_problem() {
        return Err(format!("invalid tiling: {problem}"));
    }
    Ok(tiling)
}

fn draw(t: &Tiling, format: Format) -> String {
    match format {
        Format::Tiling => t.to_text(),
        Format::Text => render_text(t),
        Format::Svg => render_svg(t),
    }
}

/// Rule-based verdict and its reason for an `a × b` rectangle.
fn classify(tiles: &str, a: i32, b: i32) -> Result<(bool, &'static str), String> {
    let (kind, param) = tiles.split_once(':').ok_or_else(|| format!("expected KIND:N, got `{tiles}`"))?;
    let n: u32 = param.parse().map_err(|_| format!("bad parameter in `{tiles}`"))?;
    let odd_side = a % 2 != 0 || b % 2 != 0;
    match kind {
        "Tn" => {
            let yes = rect_tileable_tn(n, a, b).map_err(|e| e.to_string())?;
            Ok(match (yes, odd_side) {
                (true, _) => (true, "Theorem: both sides even and n divides a side"),
                (false, true) => (false, "Theorem: a side is odd"),
                (false, false) => (false, "Theorem: n divides neither side"),
            })
        }
        "Tn+" if n >= 4 && n.is_multiple_of(2) => Ok(if rect_tileable_tn_plus(a, b) {
            (true, "Theorem: both sides even")
        } else {
            (false, "Theorem: a side is odd")
        }),
        "Tn+" => Err(format!("no rectangle classification is known for Tn+ with n = {n}; only even n >= 4")),
        "bars" if n >= 1 => Ok(if bar_tileable(n as i32, a, b) {
            (true, "Theorem: k divides a side")
        } else {
            (false, "Theorem: k divides neither side")
        }),
        _ => Err(format!("no classification for tile set `{tiles}`; use Tn:N, Tn+:N, or bars:K")),
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Solve { problem, render } => {
            let (region, ts) = (load_region(&problem.region)?, load_tiles(&problem.tiles)?);
            Ok(match Solver::new(&region, &ts).find() {
                Some(t) => Output::ok(draw(&t, render)),
                None => Output::verdict("UNTILEABLE\n".into(), false),
            })
        }
        Command::Count { problem, cap, dedup_diagonal } => {
            let (region, ts) = (load_region(&problem.region)?, load_tiles(&problem.tiles)?);
            let solver = Solver::new(&region, &ts).options(SolveOptions { dedup_diagonal });
            let (count, stats) = solver.count(cap).map_err(|e| e.to_string())?;
            if stats.truncated {
                return Err(format!("more than {cap} tilings; raise --cap"));
            }
            Ok(Output::ok(format!("{count}\n")))
        }
        Command::Enumerate { problem, limit, render } => {
            if limit == 0 {
                return Err("--limit must be at least 1".into());
            }
            let (region, ts) = (load_region(&problem.region)?, load_tiles(&problem.tiles)?);
            let mut text = String::new();
            let mut seen = 0usize;
            let stats = Solver::new(&region, &ts).for_each(limit, |t| {
                if seen > 0 {
                    text.push('\n');
                }
                seen += 1;
                text.push_str(&draw(&t, render));
            });
            if stats.truncated {
                let _ = writeln!(text, "\n# stopped after {limit} tilings");
            }
            Ok(Output::verdict(text, seen > 0))
        }
        Command::CheckPattern(input) => {
            let verdict = follows_rectangular_pattern(&load_tiling(&input)?);
            Ok(Output::verdict(verdict.report(), verdict.follows))
        }
        Command::Flip { problem, limit, edges } => {
            let (region, ts) = (load_region(&problem.region)?, load_tiles(&problem.tiles)?);
            let (connected, graph) = flip_connected(&region, &ts, limit).map_err(|e| match e {
                TilingError::Truncated { .. } => format!("more than {limit} tilings; raise --limit"),
                other => other.to_string(),
            })?;
            let mut text = graph.summary();
            if edges {
                text.push_str(&graph.edge_list());
            }
            Ok(Output::verdict(text, connected))
        }
        Command::Classify { tiles, rect: (a, b) } => {
            let (yes, reason) = classify(&tiles, a, b)?;
            let word = if yes { "tileable" } else { "untileable" };
            Ok(Output::verdict(format!("{word} ({reason})\n"), yes))
        }
        Command::Render { input, render } => Ok(Output::ok(draw(&load_tiling(&input)?, render))),
        Command::Fixture { which } => {
            let (tiling, render) = match which {
                Fixture::Fig2c { n, render } => (odd_rect_tiling(n), render),
                Fixture::Fig6b { render } => (Ok(mixed_6x10_tiling()), render),
                Fixture::Twotiling { n, extra, render } => (two_tiling_region(n, extra).map(|(_, t)| t), render),
                Fixture::Kcopy { n, k } => {
                    let region = k_copy_fixture(n, k).map_err(|e| e.to_string())?;
                    return Ok(Output::ok(region.to_grid_text()));
                }
            };
            Ok(Output::ok(draw(&tiling.map_err(|e| e.to_string())?, render)))
        }
        Command::Verify { suite, n, max_side, k } => {
            let suite = Suite::from(suite);
            let mut params = suite.default_params();
            params.n = n.unwrap_or(params.n);
            params.max_side = max_side.unwrap_or(params.max_side);
            params.k = k.unwrap_or(params.k);
            let report = verify::run(suite, params).map_err(|e| e.to_string())?;
            Ok(Output::verdict(verify::transcript(&report), report.all_agree()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(if out.negative { 1 } else { 0 })
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
