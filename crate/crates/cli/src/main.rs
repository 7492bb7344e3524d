//! `brickforge`: render DSL programs, compare artifacts, run gallery pieces
//! and L-systems, writing BVOX or LXFML.
//!
//! Exit codes: 0 ok, 2 parse/type/spec error, 3 render error, 4 I/O error,
//! 5 bad gallery parameter.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};

use brickforge::dsl::{compile_brickfn, compile_predicate, DslError};
use brickforge::gallery::{self, CheckerboardParams, SierpinskiParams};
use brickforge::io::{emit_bvox, emit_lxfml};
use brickforge::lsystem::{LSystem, SpecError};
use brickforge::setops;
use brickforge::traversal::{brickfn_show, predicate_show};
use brickforge::turtle::TurtleState;
use brickforge::{Brick, Point, VirtualSpace};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Longest L-system expansion we are willing to interpret.
const MAX_SYMBOLS: usize = 1 << 26;

#[derive(Parser)]
#[command(name = "brickforge", version, about = "Voxel artifacts from predicates, brick functions and L-systems")]
struct Cli {
    /// Reserved for randomized recipes; nothing uses it yet.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Render a predicate or brick-function program over an N-cube.
    Render(RenderArgs),
    /// Combine two predicate programs with a set operation.
    Compare(CompareArgs),
    /// Run a built-in construction.
    Gallery(GalleryArgs),
    /// Expand an L-system spec and draw it with the turtle.
    Lsystem(LsystemArgs),
}

#[derive(Args)]
struct Output {
    /// Output file, `.bvox` or `.lxfml`; repeatable. BVOX goes to stdout if omitted.
    #[arg(long = "out", value_name = "FILE")]
    out: Vec<PathBuf>,
    /// Open LXFML outputs with the viewer named by BRICKFORGE_VIEWER.
    #[arg(long)]
    open: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Predicate,
    Brickfn,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long)]
    size: usize,
    #[arg(long, value_name = "FILE")]
    expr: PathBuf,
    /// Brick placed where a predicate holds.
    #[arg(long, default_value = "BLUE")]
    brick: Brick,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetOp {
    Xor,
    Union,
    Intersection,
    Difference,
    #[value(alias = "compliment")]
    Complement,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long, value_enum)]
    op: SetOp,
    #[arg(long)]
    size: usize,
    #[arg(long, value_name = "FILE")]
    a: PathBuf,
    #[arg(long, value_name = "FILE")]
    b: Option<PathBuf>,
    #[arg(long, default_value = "BLUE")]
    brick_a: Brick,
    #[arg(long, default_value = "YELLOW")]
    brick_b: Brick,
    #[arg(long, default_value = "GREEN")]
    brick_both: Brick,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct GalleryArgs {
    #[command(subcommand)]
    piece: Piece,
    /// Output file, `.bvox` or `.lxfml`; repeatable. BVOX goes to stdout if omitted.
    #[arg(long = "out", value_name = "FILE", global = true)]
    out: Vec<PathBuf>,
    /// Open LXFML outputs with the viewer named by BRICKFORGE_VIEWER.
    #[arg(long, global = true)]
    open: bool,
}

#[derive(Subcommand)]
enum Piece {
    /// Pascal's triangle mod 2; n must be 2^m + 1.
    Sierpinski {
        #[arg(long)]
        n: usize,
    },
    /// Checkerboard of square_size squares on a board_size floor.
    Checkerboard {
        #[arg(long)]
        board_size: usize,
        #[arg(long)]
        square_size: usize,
    },
    /// Wireframe cubes shrinking by `inset` per side.
    NestedCubes {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        inset: usize,
        #[arg(long, default_value = "BLUE")]
        brick: Brick,
    },
    /// Sine wave terrain shaded by height.
    Sine {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2.0)]
        amplitude: f64,
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4)]
        frequency: f64,
        /// Comma-separated bricks, lowest band first.
        #[arg(long, value_delimiter = ',', default_value = "LIGHT_BLUE,MEDIUM_BLUE,BLUE,DARK_BLUE")]
        palette: Vec<Brick>,
    },
    /// 3D Hilbert curve.
    Hilbert {
        #[arg(long)]
        order: u32,
        #[arg(long, default_value_t = 1)]
        step: u32,
        #[arg(long, default_value = "BLUE")]
        brick: Brick,
    },
}

#[derive(Args)]
struct LsystemArgs {
    #[arg(long, value_name = "FILE")]
    spec: PathBuf,
    /// Defaults to the spec's `iterations:` line, else 0.
    #[arg(long)]
    iterations: Option<usize>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i32).range(1..=1024))]
    step: i32,
    /// Space dimensions `N` or `X,Y,Z`; fitted to the drawing if omitted.
    #[arg(long, value_parser = parse_dims)]
    size: Option<[usize; 3]>,
    #[arg(long, default_value = "BLUE")]
    brick: Brick,
    #[command(flatten)]
    output: Output,
}

fn parse_dims(s: &str) -> Result<[usize; 3], String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<_, _>>()?;
    match parts.as_slice() {
        [n] => Ok([*n; 3]),
        [x, y, z] => Ok([*x, *y, *z]),
        _ => Err("expected N or X,Y,Z".into()),
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl ToString) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

fn syntax(path: &Path, e: DslError) -> Failure {
    fail(2, format!("{}: {e}", path.display()))
}

fn render_err(e: brickforge::Error) -> Failure {
    fail(3, e)
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(4, format!("{}: {e}", path.display())))
}

enum Format {
    Bvox,
    Lxfml,
}

fn format_of(path: &Path) -> Result<Format, Failure> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("bvox") => Ok(Format::Bvox),
        Some("lxfml") => Ok(Format::Lxfml),
        _ => Err(fail(
            4,
            format!("{}: unsupported output extension (use .bvox or .lxfml)", path.display()),
        )),
    }
}

fn write_outputs(space: &VirtualSpace, output: &Output) -> Result<(), Failure> {
    if output.out.is_empty() {
        print!("{}", emit_bvox(space));
        return Ok(());
    }
    // check every extension before writing anything
    let formats = output.out.iter().map(|p| format_of(p)).collect::<Result<Vec<_>, _>>()?;
    for (path, format) in output.out.iter().zip(formats) {
        let text = match format {
            Format::Bvox => emit_bvox(space),
            Format::Lxfml => {
                let title = path.file_stem().and_then(|s| s.to_str()).unwrap_or("brickforge");
                emit_lxfml(space, title)
            }
        };
        fs::write(path, text).map_err(|e| fail(4, format!("{}: {e}", path.display())))?;
    }
    if output.open {
        open_viewer(&output.out);
    }
    Ok(())
}

fn open_viewer(paths: &[PathBuf]) {
    let Some(viewer) = std::env::var_os("BRICKFORGE_VIEWER") else {
        eprintln!("warning: --open given but BRICKFORGE_VIEWER is not set");
        return;
    };
    for path in paths.iter().filter(|p| matches!(format_of(p), Ok(Format::Lxfml))) {
        if let Err(e) = Command::new(&viewer).arg(path).spawn() {
            eprintln!("warning: could not start viewer: {e}");
        }
    }
}

fn render(args: RenderArgs) -> Result<(), Failure> {
    let text = read(&args.expr)?;
    let space = match args.mode {
        Mode::Predicate => {
            let p = compile_predicate(&text).map_err(|e| syntax(&args.expr, e))?;
            predicate_show(args.size, &p, args.brick)
        }
        Mode::Brickfn => {
            let f = compile_brickfn(&text).map_err(|e| syntax(&args.expr, e))?;
            brickfn_show(args.size, &f)
        }
    }
    .map_err(render_err)?;
    write_outputs(&space, &args.output)
}

fn compare(args: CompareArgs) -> Result<(), Failure> {
    // stdout carries the counts line only
    if args.output.out.is_empty() {
        return Err(fail(2, "compare needs at least one --out file"));
    }
    let a = compile_predicate(&read(&args.a)?).map_err(|e| syntax(&args.a, e))?;
    let b_path = match (args.op, &args.b) {
        (SetOp::Complement, Some(_)) => {
            eprintln!("warning: complement ignores --b");
            None
        }
        (SetOp::Complement, None) => None,
        (_, Some(path)) => Some(path),
        (_, None) => return Err(fail(2, "--b is required for this operation")),
    };
    let b = match b_path {
        Some(path) => Some(compile_predicate(&read(path)?).map_err(|e| syntax(path, e))?),
        None => None,
    };

    let n = args.size;
    let count_a = predicate_show(n, &a, args.brick_a).map_err(render_err)?.occupied_count();
    let count_b = match &b {
        Some(b) => predicate_show(n, b, args.brick_b).map_err(render_err)?.occupied_count(),
        None => 0,
    };
    let space = match (args.op, &b) {
        (SetOp::Complement, _) => setops::complement_show(n, &a, args.brick_a),
        (SetOp::Xor, Some(b)) => setops::xor_show(n, &a, args.brick_a, b, args.brick_b),
        (SetOp::Union, Some(b)) => {
            setops::union_show(n, &a, args.brick_a, b, args.brick_b, args.brick_both)
        }
        (SetOp::Intersection, Some(b)) => setops::intersection_show(n, &a, b, args.brick_both),
        (SetOp::Difference, Some(b)) => setops::difference_show(n, &a, b, args.brick_a),
        (_, None) => unreachable!("binary operations always have --b"),
    }
    .map_err(render_err)?;
    write_outputs(&space, &args.output)?;
    println!(
        "counts: A={count_a} B={count_b} result={}",
        space.occupied_count()
    );
    Ok(())
}

fn run_gallery(args: GalleryArgs) -> Result<(), Failure> {
    let space = match args.piece {
        Piece::Sierpinski { n } => gallery::sierpinski(SierpinskiParams::new(n)),
        Piece::Checkerboard {
            board_size,
            square_size,
        } => gallery::big_checkerboard(CheckerboardParams::new(board_size, square_size)),
        Piece::NestedCubes { n, inset, brick } => gallery::nested_cubes(n, inset, brick),
        Piece::Sine {
            n,
            amplitude,
            frequency,
            palette,
        } => gallery::sine_shading(n, amplitude, frequency, &palette),
        Piece::Hilbert { order, step, brick } => gallery::hilbert_cube_scaled(order, step, brick),
    }
    .map_err(|e| fail(5, e))?;
    write_outputs(
        &space,
        &Output {
            out: args.out,
            open: args.open,
        },
    )
}

fn lsystem(args: LsystemArgs) -> Result<(), Failure> {
    let text = read(&args.spec)?;
    let spec_err = |e: SpecError| fail(2, format!("{}: {e}", args.spec.display()));
    let sys = LSystem::parse_spec(&text).map_err(spec_err)?;
    let k = args.iterations.or(sys.iterations).unwrap_or(0);
    let symbols = sys
        .expand_limited(k, MAX_SYMBOLS)
        .map_err(|e| fail(3, format!("{}: {e}", args.spec.display())))?;

    let turtle = || {
        let mut t = TurtleState::default();
        t.pen = args.brick;
        t
    };
    let dims = match args.size {
        Some(d) => d,
        None => {
            // the far corner of everything drawn; negative cells are
            // reported by interpret below
            let segments = turtle().segments(&symbols, args.step).map_err(render_err)?;
            let mut far = Point::ORIGIN;
            for (p, q) in segments {
                for c in [p, q] {
                    far = Point::new(far.x.max(c.x), far.y.max(c.y), far.z.max(c.z));
                }
            }
            far.to_array().map(|v| v as usize + 1)
        }
    };
    let mut space = VirtualSpace::new(dims[0], dims[1], dims[2]).map_err(render_err)?;
    turtle()
        .interpret(&symbols, args.step, &mut space)
        .map_err(render_err)?;
    write_outputs(&space, &args.output)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.seed;
    let result = match cli.command {
        Cmd::Render(a) => render(a),
        Cmd::Compare(a) => compare(a),
        Cmd::Gallery(a) => run_gallery(a),
        Cmd::Lsystem(a) => lsystem(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("brickforge: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
