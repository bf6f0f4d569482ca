//! Amoeba subcommands: point-cloud sampling, membership queries, Ronkin
//! averages, complement component counts, and the cubic slice picture.

use clap::{Args, Subcommand};
use polyclass::amoeba::{
    amoeba_member, component_label, count_reflected_components, render_cubic_slice,
    ronkin_estimate, sample_amoeba, ComponentLabel, LogPoint, MembershipVerdict,
    DEFAULT_PHASE_GRID, DEFAULT_TOL_INSIDE, DEFAULT_TOL_OUTSIDE,
};
use serde::Serialize;

use crate::{parse_arg, to_json, CliError, Format, Rendered};

#[derive(Subcommand)]
pub enum AmoebaCmd {
    /// Sample points on the amoeba slice from seeded double-root polynomials.
    Sample(SampleArgs),
    /// Membership test for one point in slice coordinates.
    Member(MemberArgs),
    /// Torus average of the log-discriminant at a point.
    Ronkin(RonkinArgs),
    /// Count complement components of the reflected discriminant zero set.
    Components(ComponentsArgs),
    /// SVG picture of the cubic slice: contours, cones, and samples.
    Plot(PlotArgs),
}

#[derive(Args)]
pub struct SampleArgs {
    #[arg(long)]
    k: usize,
    /// Number of points to sample.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Phase grid for the membership annotation; coarse by default so large
    /// clouds stay fast. Raise it for sharper min_abs_delta values.
    #[arg(long, default_value_t = 32)]
    grid: usize,
}

#[derive(Args)]
pub struct MemberArgs {
    #[arg(long)]
    k: usize,
    /// Interior slice coordinates "x1,...,x{k-1}".
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    #[arg(long, default_value_t = DEFAULT_PHASE_GRID)]
    grid: usize,
    #[arg(long, default_value_t = DEFAULT_TOL_INSIDE)]
    tol_inside: f64,
    #[arg(long, default_value_t = DEFAULT_TOL_OUTSIDE)]
    tol_outside: f64,
}

#[derive(Args)]
pub struct RonkinArgs {
    #[arg(long)]
    k: usize,
    /// Interior slice coordinates "x1,...,x{k-1}".
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    #[arg(long, default_value_t = DEFAULT_PHASE_GRID)]
    grid: usize,
}

#[derive(Args)]
pub struct ComponentsArgs {
    #[arg(long)]
    k: usize,
    /// Cells per axis over the fixed square domain.
    #[arg(long, default_value_t = 128)]
    grid: usize,
    /// Relative floor below which a cell is left unmarked.
    #[arg(long, default_value_t = 1e-7)]
    tol_inside: f64,
}

/// The picture uses a fixed 640 px canvas over the square window
/// [-4, 4]^2 in slice coordinates, matching the component-count domain.
const PLOT_SIZE: u32 = 640;
const PLOT_DOMAIN: (f64, f64) = (-4.0, 4.0);

#[derive(Args)]
pub struct PlotArgs {
    /// Number of sample points to overlay.
    #[arg(long, default_value_t = 2000)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Contour grid per axis for the marching-squares curves.
    #[arg(long, default_value_t = 160)]
    grid: usize,
}

pub fn run(cmd: AmoebaCmd, format: Option<Format>) -> Result<Rendered, CliError> {
    match cmd {
        AmoebaCmd::Sample(args) => sample(args, format),
        AmoebaCmd::Member(args) => {
            crate::expect_format(format, Format::Json, "amoeba member")?;
            member(args)
        }
        AmoebaCmd::Ronkin(args) => {
            crate::expect_format(format, Format::Json, "amoeba ronkin")?;
            ronkin(args)
        }
        AmoebaCmd::Components(args) => {
            crate::expect_format(format, Format::Json, "amoeba components")?;
            components(args)
        }
        AmoebaCmd::Plot(args) => {
            crate::expect_format(format, Format::Svg, "amoeba plot")?;
            plot(args)
        }
    }
}

#[derive(Serialize)]
struct SamplePoint {
    /// Interior slice coordinates of the projected point.
    slice: Vec<f64>,
    /// Lower-hull bitmask of the labeling vertex monomial.
    label: u64,
    label_margin: f64,
    status: polyclass::amoeba::MemberStatus,
    min_abs_delta: f64,
}

#[derive(Serialize)]
struct SampleReport {
    k: usize,
    n: usize,
    seed: u64,
    grid: usize,
    points: Vec<SamplePoint>,
}

fn sample(args: SampleArgs, format: Option<Format>) -> Result<Rendered, CliError> {
    let raw = sample_amoeba(args.k, args.n, args.seed)?;
    let mut points = Vec::with_capacity(raw.len());
    for x in &raw {
        let label = component_label(args.k, x)?;
        let verdict = amoeba_member(args.k, x, args.grid, DEFAULT_TOL_INSIDE, DEFAULT_TOL_OUTSIDE)?;
        let slice = x.slice();
        points.push(SamplePoint {
            slice: slice[1..slice.len() - 1].to_vec(),
            label: label.subdivision.bitmask(),
            label_margin: label.margin,
            status: verdict.status,
            min_abs_delta: verdict.min_abs_delta,
        });
    }
    let report =
        SampleReport { k: args.k, n: args.n, seed: args.seed, grid: args.grid, points };
    match format {
        Some(Format::Json) => Ok(Rendered::ok(to_json(&report)?)),
        None | Some(Format::Csv) => {
            let mut body: String =
                (1..args.k).map(|j| format!("x{j},")).collect();
            body.push_str("label,min_abs_delta\n");
            for p in &report.points {
                for v in &p.slice {
                    body.push_str(&format!("{v},"));
                }
                body.push_str(&format!("{},{}\n", p.label, p.min_abs_delta));
            }
            Ok(Rendered::ok(body))
        }
        Some(Format::Svg) => {
            Err(CliError::Usage("amoeba sample emits Json or Csv output, not Svg".into()))
        }
    }
}

#[derive(Serialize)]
struct MemberReport {
    k: usize,
    point: Vec<f64>,
    grid: usize,
    verdict: MembershipVerdict,
    label: ComponentLabel,
}

fn parse_point(text: &str, k: usize) -> Result<LogPoint, CliError> {
    let interior = text
        .split(',')
        .map(|s| parse_arg::<f64>(s, "coordinate"))
        .collect::<Result<Vec<f64>, _>>()?;
    if interior.len() + 1 != k {
        return Err(CliError::Usage(format!(
            "expected {} slice coordinates for k={k}, got {}",
            k - 1,
            interior.len()
        )));
    }
    if interior.iter().any(|v| !v.is_finite()) {
        return Err(CliError::Usage("coordinates must be finite".into()));
    }
    Ok(LogPoint::from_slice_interior(&interior))
}

fn member(args: MemberArgs) -> Result<Rendered, CliError> {
    if args.k < 2 {
        return Err(CliError::Usage("membership needs k >= 2".into()));
    }
    let x = parse_point(&args.point, args.k)?;
    let verdict = amoeba_member(args.k, &x, args.grid, args.tol_inside, args.tol_outside)?;
    let label = component_label(args.k, &x)?;
    let report = MemberReport {
        k: args.k,
        point: x.slice_form.clone().unwrap_or_default(),
        grid: args.grid,
        verdict,
        label,
    };
    Ok(Rendered::ok(to_json(&report)?))
}

#[derive(Serialize)]
struct RonkinReport {
    k: usize,
    point: Vec<f64>,
    estimate: polyclass::amoeba::RonkinEstimate,
}

fn ronkin(args: RonkinArgs) -> Result<Rendered, CliError> {
    if args.k < 2 {
        return Err(CliError::Usage("the Ronkin average needs k >= 2".into()));
    }
    let x = parse_point(&args.point, args.k)?;
    let estimate = ronkin_estimate(args.k, &x, args.grid)?;
    let report =
        RonkinReport { k: args.k, point: x.slice_form.clone().unwrap_or_default(), estimate };
    Ok(Rendered::ok(to_json(&report)?))
}

fn components(args: ComponentsArgs) -> Result<Rendered, CliError> {
    let report = count_reflected_components(args.k, args.grid, args.tol_inside)?;
    Ok(Rendered::ok(to_json(&report)?))
}

fn plot(args: PlotArgs) -> Result<Rendered, CliError> {
    let samples = sample_amoeba(3, args.n, args.seed)?;
    let svg = render_cubic_slice(&samples, PLOT_DOMAIN, args.grid, PLOT_SIZE)?;
    Ok(Rendered::ok(svg))
}
