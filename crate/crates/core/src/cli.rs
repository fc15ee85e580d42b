//! Command-line front end.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::combined_table;
use crate::dissimilarity::{distance_matrix, Measure};
use crate::field::{Connectivity, ScalarField};
use crate::hierarchy::HierarchyVariant;
use crate::io::{load_field_1d, load_grid_vtk, write_field_1d, write_grid_vtk};
use crate::pipeline::{Analysis, Sweep};
use crate::synth::{synth_case, Extents, SynthCase, SynthOptions};

pub const DEFAULT_SEED: u64 = 2017;

#[derive(Debug, Parser)]
#[command(
    name = "isph",
    version,
    about = "Persistence pairs, hierarchies and hierarchy distances of scalar fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Persistence pairs as TSV.
    Diagram(FieldArgs),
    /// Regular or interlevel set persistence hierarchy as DOT or JSON.
    Hierarchy(FieldArgs),
    /// Per-node `birth death rank stability essential` table.
    Analyze(FieldArgs),
    /// Pairwise distance matrix over several fields.
    Distmat(DistmatArgs),
    /// Write a synthetic field to a file.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// Input file; `.vtk` is read as a grid, anything else as a 1D text file.
    #[arg(long, conflicts_with = "synth", required_unless_present = "synth")]
    pub input: Option<PathBuf>,
    /// Synthetic case, e.g. `fig1-blue` or `oscillate(3,4)`.
    #[arg(long)]
    pub synth: Option<SynthCase>,
    #[command(flatten)]
    pub shape: ShapeArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ShapeArgs {
    /// Grid size of synthetic grid cases.
    #[arg(long, value_name = "COLSxROWS", default_value = "100x50")]
    pub resolution: Extents,
    /// Samples between consecutive critical points of synthetic 1D cases.
    #[arg(long, default_value_t = 3)]
    pub ramp: usize,
    #[arg(long, default_value_t = Connectivity::Four)]
    pub connectivity: Connectivity,
}

impl ShapeArgs {
    fn synth_options(&self) -> SynthOptions {
        SynthOptions {
            grid: self.resolution,
            connectivity: self.connectivity,
            ramp: self.ramp,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output file (default: standard output).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, default_value_t = Sweep::Sublevel)]
    pub mode: Sweep,
    #[arg(long, default_value_t = HierarchyVariant::Isph)]
    pub variant: HierarchyVariant,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DistmatArgs {
    /// Input files (repeat the flag).
    #[arg(long = "input", conflicts_with_all = ["synth", "series"])]
    pub inputs: Vec<PathBuf>,
    /// Synthetic cases (repeat the flag).
    #[arg(long = "synth", conflicts_with = "series")]
    pub synth: Vec<SynthCase>,
    /// Use the series `oscillate(0..STEPS, period)`.
    #[arg(long, value_name = "STEPS")]
    pub series: Option<u32>,
    #[arg(long, default_value_t = 4, requires = "series")]
    pub period: u32,
    #[arg(long, value_enum, default_value_t = MeasureArg::IsphTed)]
    pub measure: MeasureArg,
    /// Wasserstein exponent.
    #[arg(long, default_value_t = 2.0)]
    pub q: f64,
    #[arg(long, default_value_t = Sweep::Sublevel)]
    pub mode: Sweep,
    /// Write `i j d` triplets instead of a dense matrix.
    #[arg(long)]
    pub sparse: bool,
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub synth: SynthCase,
    /// Add uniform noise in `[-AMP, AMP]` to every sample.
    #[arg(long, value_name = "AMP", default_value_t = 0.0)]
    pub noise: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Dot,
    Json,
    Vtk,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Tsv => "tsv",
            Format::Dot => "dot",
            Format::Json => "json",
            Format::Vtk => "vtk",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    IsphTed,
    Wasserstein,
}

/// Picks the format, rejecting ones the command cannot produce.
fn resolve_format(requested: Option<Format>, allowed: &[Format], command: &str) -> Result<Format> {
    match requested {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => bail!("`{command}` cannot write format `{f}`"),
    }
}

pub fn load_field(path: &Path, connectivity: Connectivity) -> Result<ScalarField> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_vtk = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("vtk"));
    let field = if is_vtk {
        load_grid_vtk(&text, connectivity)
    } else {
        load_field_1d(&text)
    };
    field.with_context(|| format!("parsing {}", path.display()))
}

impl SourceArgs {
    fn field(&self) -> Result<ScalarField> {
        match (&self.input, self.synth) {
            (Some(path), _) => load_field(path, self.shape.connectivity),
            (None, Some(case)) => Ok(synth_case(case, &self.shape.synth_options())?),
            (None, None) => bail!("one of --input or --synth is required"),
        }
    }
}

fn emit(out: &OutputArgs, stdout: &mut dyn Write, content: &str) -> Result<()> {
    match &out.output {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            stdout.write_all(content.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Runs one parsed command, writing data to `stdout` unless `--output` is set.
pub fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Diagram(args) => {
            resolve_format(args.out.format, &[Format::Tsv], "diagram")?;
            let field = args.source.field()?;
            let diagram = Analysis::new(&field, args.mode).diagram();
            emit(&args.out, stdout, &diagram.to_tsv())
        }
        Command::Hierarchy(args) => {
            let format =
                resolve_format(args.out.format, &[Format::Dot, Format::Json], "hierarchy")?;
            let field = args.source.field()?;
            let h = Analysis::new(&field, args.mode).hierarchy(args.variant);
            let text = match format {
                Format::Json => h.to_json() + "\n",
                _ => h.to_dot(),
            };
            emit(&args.out, stdout, &text)
        }
        Command::Analyze(args) => {
            resolve_format(args.out.format, &[Format::Tsv], "analyze")?;
            let field = args.source.field()?;
            let h = Analysis::new(&field, args.mode).hierarchy(args.variant);
            emit(&args.out, stdout, &combined_table(&h))
        }
        Command::Distmat(args) => {
            resolve_format(args.out.format, &[Format::Tsv], "distmat")?;
            let measure = match args.measure {
                MeasureArg::IsphTed => Measure::IsphTed,
                MeasureArg::Wasserstein => Measure::Wasserstein { q: args.q },
            };
            if let Measure::Wasserstein { q } = measure {
                if !(q.is_finite() && q >= 1.0) {
                    bail!("--q must be finite and >= 1, got {q}");
                }
            }
            if args.period == 0 {
                bail!("--period must be positive");
            }
            let fields = distmat_fields(&args)?;
            let m = distance_matrix(&fields, measure, args.mode)?;
            let text = if args.sparse {
                m.to_triplets_tsv()
            } else {
                m.to_dense_tsv()
            };
            emit(&args.out, stdout, &text)
        }
        Command::Generate(args) => {
            let native = if args.synth.is_grid() {
                Format::Vtk
            } else {
                Format::Tsv
            };
            resolve_format(args.out.format, &[native], "generate")?;
            if !(args.noise.is_finite() && args.noise >= 0.0) {
                bail!(
                    "--noise must be finite and non-negative, got {}",
                    args.noise
                );
            }
            let mut field = synth_case(args.synth, &args.shape.synth_options())?;
            if args.noise > 0.0 {
                let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
                let amp = args.noise;
                let noisy = field
                    .values()
                    .iter()
                    .map(|&v| v + rng.gen_range(-amp..=amp))
                    .collect();
                field = field.with_values(noisy)?;
            }
            let text = match native {
                Format::Vtk => write_grid_vtk(&field, "scalars"),
                _ => write_field_1d(&field),
            };
            emit(&args.out, stdout, &text)
        }
    }
}

fn distmat_fields(args: &DistmatArgs) -> Result<Vec<ScalarField>> {
    let opts = args.shape.synth_options();
    if let Some(steps) = args.series {
        return (0..steps)
            .map(|t| {
                let case = SynthCase::Oscillate {
                    t: i64::from(t),
                    period: args.period,
                };
                Ok(synth_case(case, &opts)?)
            })
            .collect();
    }
    if !args.inputs.is_empty() {
        return args
            .inputs
            .iter()
            .map(|p| load_field(p, args.shape.connectivity))
            .collect();
    }
    if !args.synth.is_empty() {
        return args
            .synth
            .iter()
            .map(|&c| Ok(synth_case(c, &opts)?))
            .collect();
    }
    bail!("distmat needs --input files, --synth cases or --series")
}
