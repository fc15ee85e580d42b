//! Deterministic synthetic fields.
//!
//! The 1D cases are piecewise-linear through a list of critical values with
//! `ramp` interpolated samples per segment; linear ramps between alternating
//! extrema add no critical points. Grid cases are sums of Gaussians on the
//! rectangle `[0, 2] x [0, 1]` (x along columns, y along rows).
//!
//! | case | critical structure |
//! |------|--------------------|
//! | `fig1-red`  | `b=1 y=2 a=0 z=4 c=3`: the two shallow minima reach each other only through `a` |
//! | `fig1-blue` | `a=0 y=2 b=1 z=4 c=3`: `b` and `c` are adjacent |
//! | `reeb-1` / `stable`   | `x=1 b=5 y=2 a=6 z=3 c=4`: peaks `b`, `c` on both sides of `a` |
//! | `reeb-2` / `unstable` | `x=1 a=6 z=3 c=4 y=2 b=5`: peaks `a`, `c`, `b` in a row |
//! | `three-peaks` | heights 1.0 (center), 0.8 (left), 0.6 (right) |
//! | `three-peaks-ridge` | heights 1.0, 0.6, 0.8 in a row, the first two close together |
//! | `peaks-craters-1/2` | two peaks, two craters and a moving peak: isolated vs. on a ridge |
//! | `oscillate(t,p)` | five peaks whose amplitudes follow `sin(2 pi t / p + phase_i)` |
//!
//! The grid cases carry a shallow dome centered on the highest peak so that
//! boundary edges have no interior dips; their sublevel sets then have one
//! minimum per corner.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::field::{Connectivity, FieldError, ScalarField, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SynthCase {
    Fig1Red,
    Fig1Blue,
    Reeb1,
    Reeb2,
    Stable,
    Unstable,
    ThreePeaks,
    ThreePeaksRidge,
    PeaksCraters1,
    PeaksCraters2,
    Oscillate { t: i64, period: u32 },
}

impl SynthCase {
    pub const NAMES: [&'static str; 11] = [
        "fig1-red",
        "fig1-blue",
        "reeb-1",
        "reeb-2",
        "stable",
        "unstable",
        "three-peaks",
        "three-peaks-ridge",
        "peaks-craters-1",
        "peaks-craters-2",
        "oscillate(t,period)",
    ];

    pub fn is_grid(&self) -> bool {
        matches!(
            self,
            SynthCase::ThreePeaks
                | SynthCase::ThreePeaksRidge
                | SynthCase::PeaksCraters1
                | SynthCase::PeaksCraters2
                | SynthCase::Oscillate { .. }
        )
    }

    /// Labeled critical values of the 1D cases, in domain order.
    pub fn critical_points(&self) -> Option<&'static [(char, f64)]> {
        match self {
            SynthCase::Fig1Red => Some(&FIG1_RED),
            SynthCase::Fig1Blue => Some(&FIG1_BLUE),
            SynthCase::Reeb1 | SynthCase::Stable => Some(&REEB_1),
            SynthCase::Reeb2 | SynthCase::Unstable => Some(&REEB_2),
            _ => None,
        }
    }
}

const FIG1_RED: [(char, f64); 5] = [('b', 1.0), ('y', 2.0), ('a', 0.0), ('z', 4.0), ('c', 3.0)];
const FIG1_BLUE: [(char, f64); 5] = [('a', 0.0), ('y', 2.0), ('b', 1.0), ('z', 4.0), ('c', 3.0)];
const REEB_1: [(char, f64); 6] = [
    ('x', 1.0),
    ('b', 5.0),
    ('y', 2.0),
    ('a', 6.0),
    ('z', 3.0),
    ('c', 4.0),
];
const REEB_2: [(char, f64); 6] = [
    ('x', 1.0),
    ('a', 6.0),
    ('z', 3.0),
    ('c', 4.0),
    ('y', 2.0),
    ('b', 5.0),
];

impl fmt::Display for SynthCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SynthCase::Fig1Red => "fig1-red",
            SynthCase::Fig1Blue => "fig1-blue",
            SynthCase::Reeb1 => "reeb-1",
            SynthCase::Reeb2 => "reeb-2",
            SynthCase::Stable => "stable",
            SynthCase::Unstable => "unstable",
            SynthCase::ThreePeaks => "three-peaks",
            SynthCase::ThreePeaksRidge => "three-peaks-ridge",
            SynthCase::PeaksCraters1 => "peaks-craters-1",
            SynthCase::PeaksCraters2 => "peaks-craters-2",
            SynthCase::Oscillate { t, period } => return write!(f, "oscillate({t},{period})"),
        };
        f.write_str(name)
    }
}

impl FromStr for SynthCase {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || FieldError::UnknownCase(s.to_string());
        let name = s.trim();
        Ok(match name {
            "fig1-red" => SynthCase::Fig1Red,
            "fig1-blue" => SynthCase::Fig1Blue,
            "reeb-1" => SynthCase::Reeb1,
            "reeb-2" => SynthCase::Reeb2,
            "stable" => SynthCase::Stable,
            "unstable" => SynthCase::Unstable,
            "three-peaks" => SynthCase::ThreePeaks,
            "three-peaks-ridge" => SynthCase::ThreePeaksRidge,
            "peaks-craters-1" => SynthCase::PeaksCraters1,
            "peaks-craters-2" => SynthCase::PeaksCraters2,
            _ => {
                let args = name
                    .strip_prefix("oscillate(")
                    .and_then(|rest| rest.strip_suffix(')'))
                    .ok_or_else(unknown)?;
                let (t, period) = args.split_once(',').ok_or_else(unknown)?;
                let t = t.trim().parse().map_err(|_| unknown())?;
                let period: u32 = period.trim().parse().map_err(|_| unknown())?;
                if period == 0 {
                    return Err(unknown());
                }
                SynthCase::Oscillate { t, period }
            }
        })
    }
}

/// Grid size in vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extents {
    pub cols: usize,
    pub rows: usize,
}

impl Default for Extents {
    fn default() -> Self {
        Extents {
            cols: 100,
            rows: 50,
        }
    }
}

impl FromStr for Extents {
    type Err = String;

    /// `COLSxROWS`, e.g. `100x50`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (c, r) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("expected COLSxROWS, got `{s}`"))?;
        let cols = c
            .trim()
            .parse()
            .map_err(|_| format!("bad column count `{c}`"))?;
        let rows = r
            .trim()
            .parse()
            .map_err(|_| format!("bad row count `{r}`"))?;
        Ok(Extents { cols, rows })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SynthOptions {
    pub grid: Extents,
    pub connectivity: Connectivity,
    /// Interpolated samples between consecutive critical points (1D cases).
    pub ramp: usize,
}

impl Default for SynthOptions {
    fn default() -> Self {
        SynthOptions {
            grid: Extents::default(),
            connectivity: Connectivity::Four,
            ramp: 3,
        }
    }
}

pub fn synth_case(case: SynthCase, opts: &SynthOptions) -> Result<ScalarField, FieldError> {
    if let Some(points) = case.critical_points() {
        let values: Vec<f64> = points.iter().map(|&(_, v)| v).collect();
        return ramp_chain(&values, opts.ramp);
    }
    let bumps = match case {
        SynthCase::ThreePeaks => three_peaks(),
        SynthCase::ThreePeaksRidge => three_peaks_ridge(),
        SynthCase::PeaksCraters1 => peaks_craters(false),
        SynthCase::PeaksCraters2 => peaks_craters(true),
        SynthCase::Oscillate { t, period } => oscillate(t, period),
        _ => unreachable!("1D cases handled above"),
    };
    gaussian_grid(&bumps, opts.grid, opts.connectivity)
}

/// Vertex of the `k`-th critical point in a [`ramp_chain`].
pub fn critical_vertex(k: usize, ramp: usize) -> VertexId {
    k * (ramp + 1)
}

/// Piecewise-linear chain through `critical` with `ramp` samples strictly
/// inside each segment.
pub fn ramp_chain(critical: &[f64], ramp: usize) -> Result<ScalarField, FieldError> {
    let mut values = Vec::with_capacity(critical.len() * (ramp + 1));
    for (k, w) in critical.windows(2).enumerate() {
        if k == 0 {
            values.push(w[0]);
        }
        for s in 1..=ramp {
            let t = s as f64 / (ramp + 1) as f64;
            values.push(w[0] + (w[1] - w[0]) * t);
        }
        values.push(w[1]);
    }
    if critical.len() == 1 {
        values.push(critical[0]);
    }
    ScalarField::chain(values)
}

#[derive(Debug, Clone, Copy)]
struct Bump {
    amp: f64,
    x: f64,
    y: f64,
    sx: f64,
    sy: f64,
}

const fn bump(amp: f64, x: f64, y: f64, s: f64) -> Bump {
    Bump {
        amp,
        x,
        y,
        sx: s,
        sy: s,
    }
}

struct Landscape {
    bumps: Vec<Bump>,
    /// Center of the dome `-DOME * |p - center|^2`, if any.
    dome: Option<(f64, f64)>,
}

const DOME: f64 = 0.05;

fn three_peaks() -> Landscape {
    Landscape {
        bumps: vec![
            bump(1.0, 1.0, 0.5, 0.12),
            bump(0.8, 0.45, 0.5, 0.12),
            bump(0.6, 1.55, 0.5, 0.12),
        ],
        dome: Some((1.0, 0.5)),
    }
}

fn three_peaks_ridge() -> Landscape {
    Landscape {
        bumps: vec![
            bump(1.0, 0.5, 0.5, 0.12),
            bump(0.6, 0.85, 0.5, 0.12),
            bump(0.8, 1.45, 0.5, 0.12),
        ],
        dome: Some((0.5, 0.5)),
    }
}

fn peaks_craters(on_ridge: bool) -> Landscape {
    let mut bumps = vec![
        bump(1.0, 0.45, 0.5, 0.12),
        bump(0.75, 1.55, 0.5, 0.12),
        bump(-1.0, 1.0, 0.5, 0.14),
        bump(-0.6, 1.5, 0.12, 0.1),
    ];
    let moving = if on_ridge {
        bump(0.55, 0.8, 0.5, 0.1)
    } else {
        bump(0.55, 1.0, 0.9, 0.1)
    };
    bumps.push(moving);
    Landscape {
        bumps,
        dome: Some((0.45, 0.5)),
    }
}

fn oscillate(t: i64, period: u32) -> Landscape {
    let period = i64::from(period);
    let phase = 2.0 * PI * t.rem_euclid(period) as f64 / period as f64;
    const CENTERS: [(f64, f64); 5] = [
        (0.3, 0.3),
        (0.65, 0.72),
        (1.0, 0.3),
        (1.35, 0.72),
        (1.7, 0.3),
    ];
    let bumps = CENTERS
        .iter()
        .enumerate()
        .map(|(i, &(x, y))| {
            let shift = 2.0 * PI * i as f64 / CENTERS.len() as f64;
            bump(1.0 + 0.45 * (phase + shift).sin(), x, y, 0.12)
        })
        .collect();
    Landscape {
        bumps,
        dome: Some((1.0, 0.5)),
    }
}

fn gaussian_grid(
    land: &Landscape,
    extents: Extents,
    connectivity: Connectivity,
) -> Result<ScalarField, FieldError> {
    let Extents { cols, rows } = extents;
    let coord = |i: usize, n: usize, len: f64| {
        if n > 1 {
            len * i as f64 / (n - 1) as f64
        } else {
            len / 2.0
        }
    };
    let mut values = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let y = coord(r, rows, 1.0);
        for c in 0..cols {
            let x = coord(c, cols, 2.0);
            let mut v: f64 = land
                .bumps
                .iter()
                .map(|b| {
                    let dx = (x - b.x) / b.sx;
                    let dy = (y - b.y) / b.sy;
                    b.amp * (-0.5 * (dx * dx + dy * dy)).exp()
                })
                .sum();
            if let Some((cx, cy)) = land.dome {
                v -= DOME * ((x - cx).powi(2) + (y - cy).powi(2));
            }
            values.push(v);
        }
    }
    ScalarField::grid(rows, cols, values, connectivity)
}
