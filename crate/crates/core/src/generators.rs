//! Deterministic rasterizers for reference fractals with known box
//! dimensions, used as oracles for the estimator.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::raster::BinaryImage;

#[derive(Debug, Error, PartialEq)]
pub enum GeneratorError {
    #[error("{kind} at level {level} needs a canvas of at least {min} pixels, got {size}")]
    SizeTooSmall { kind: FractalKind, level: u32, min: u32, size: u32 },
    #[error("level {0} is too deep for a pixel raster")]
    LevelTooDeep(u32),
    #[error("unknown fractal kind {0:?}")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FractalKind {
    KochCurve,
    SierpinskiTriangle,
    SierpinskiCarpet,
    CantorDust,
    Line,
    FilledSquare,
}

impl FractalKind {
    pub const ALL: [FractalKind; 6] = [
        FractalKind::KochCurve,
        FractalKind::SierpinskiTriangle,
        FractalKind::SierpinskiCarpet,
        FractalKind::CantorDust,
        FractalKind::Line,
        FractalKind::FilledSquare,
    ];

    /// Self-similarity (box) dimension of the ideal set.
    pub fn analytic_dimension(self) -> f64 {
        match self {
            FractalKind::KochCurve => f64::ln(4.0) / f64::ln(3.0),
            FractalKind::SierpinskiTriangle => f64::ln(3.0) / f64::ln(2.0),
            FractalKind::SierpinskiCarpet => f64::ln(8.0) / f64::ln(3.0),
            FractalKind::CantorDust => f64::ln(2.0) / f64::ln(3.0),
            FractalKind::Line => 1.0,
            FractalKind::FilledSquare => 2.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FractalKind::KochCurve => "koch_curve",
            FractalKind::SierpinskiTriangle => "sierpinski_triangle",
            FractalKind::SierpinskiCarpet => "sierpinski_carpet",
            FractalKind::CantorDust => "cantor_dust",
            FractalKind::Line => "line",
            FractalKind::FilledSquare => "filled_square",
        }
    }

    /// Subdivision base: canvas must be at least base^level wide.
    fn base(self) -> u32 {
        match self {
            FractalKind::SierpinskiTriangle => 2,
            FractalKind::Line | FractalKind::FilledSquare => 1,
            _ => 3,
        }
    }
}

impl fmt::Display for FractalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FractalKind {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FractalKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| GeneratorError::UnknownKind(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: FractalKind,
    pub level: u32,
    pub size: u32,
}

impl GeneratorSpec {
    fn validate(&self) -> Result<(), GeneratorError> {
        let min = self
            .kind
            .base()
            .checked_pow(self.level)
            .ok_or(GeneratorError::LevelTooDeep(self.level))?;
        if self.size < min.max(1) {
            return Err(GeneratorError::SizeTooSmall {
                kind: self.kind,
                level: self.level,
                min,
                size: self.size,
            });
        }
        Ok(())
    }
}

/// Axis-aligned half-open region in pixel coordinates.
#[derive(Clone, Copy)]
struct Rect {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

/// Marks every pixel whose center lies inside `r`.
fn fill_rect(img: &mut BinaryImage, r: Rect) {
    let first = |lo: f64| (lo - 0.5).ceil().max(0.0) as u32;
    let (fx, fy) = (first(r.x0), first(r.y0));
    for y in fy..img.height() {
        if y as f64 + 0.5 >= r.y1 {
            break;
        }
        for x in fx..img.width() {
            if x as f64 + 0.5 >= r.x1 {
                break;
            }
            img.set(x, y, true);
        }
    }
}

/// Recursive keep-list subdivision: split `r` into a `base`x`base` array and
/// recurse into the cells listed in `keep`.
fn subdivide(img: &mut BinaryImage, r: Rect, level: u32, base: u32, keep: &[(u32, u32)]) {
    if level == 0 {
        fill_rect(img, r);
        return;
    }
    let (sw, sh) = ((r.x1 - r.x0) / base as f64, (r.y1 - r.y0) / base as f64);
    for &(i, j) in keep {
        let sub = Rect {
            x0: r.x0 + i as f64 * sw,
            y0: r.y0 + j as f64 * sh,
            x1: r.x0 + (i + 1) as f64 * sw,
            y1: r.y0 + (j + 1) as f64 * sh,
        };
        subdivide(img, sub, level - 1, base, keep);
    }
}

/// 1-pixel-wide line stroke (Bresenham).
fn stroke(img: &mut BinaryImage, from: (f64, f64), to: (f64, f64)) {
    let clamp = |v: f64, hi: u32| (v.round().max(0.0) as u32).min(hi - 1);
    let (mut x0, mut y0) = (clamp(from.0, img.width()) as i64, clamp(from.1, img.height()) as i64);
    let (x1, y1) = (clamp(to.0, img.width()) as i64, clamp(to.1, img.height()) as i64);
    let dx = (x1 - x0).abs();
    let dy = -(y1 - y0).abs();
    let sx = if x0 < x1 { 1 } else { -1 };
    let sy = if y0 < y1 { 1 } else { -1 };
    let mut err = dx + dy;
    loop {
        img.set(x0 as u32, y0 as u32, true);
        if x0 == x1 && y0 == y1 {
            return;
        }
        let e2 = 2 * err;
        if e2 >= dy {
            err += dy;
            x0 += sx;
        }
        if e2 <= dx {
            err += dx;
            y0 += sy;
        }
    }
}

/// Middle-third removal on `[x0, x1)`, inked into a 1-pixel-tall strip.
fn cantor_intervals(img: &mut BinaryImage, x0: f64, x1: f64, level: u32) {
    if level == 0 {
        fill_rect(img, Rect { x0, y0: 0.0, x1, y1: 1.0 });
        return;
    }
    let third = (x1 - x0) / 3.0;
    cantor_intervals(img, x0, x0 + third, level - 1);
    cantor_intervals(img, x1 - third, x1, level - 1);
}

type Segment = ((f64, f64), (f64, f64));

/// Koch subdivision of the segment `a -> b`, emitting depth-`level` segment
/// endpoints into `out`. The peak is placed on the upward side (decreasing
/// y) of a left-to-right segment.
fn koch_segments(a: (f64, f64), b: (f64, f64), level: u32, out: &mut Vec<Segment>) {
    if level == 0 {
        out.push((a, b));
        return;
    }
    let (dx, dy) = ((b.0 - a.0) / 3.0, (b.1 - a.1) / 3.0);
    let p1 = (a.0 + dx, a.1 + dy);
    let p2 = (a.0 + 2.0 * dx, a.1 + 2.0 * dy);
    let (sin60, cos60) = (f64::sqrt(3.0) / 2.0, 0.5);
    let peak = (p1.0 + cos60 * dx + sin60 * dy, p1.1 - sin60 * dx + cos60 * dy);
    for (u, v) in [(a, p1), (p1, peak), (peak, p2), (p2, b)] {
        koch_segments(u, v, level - 1, out);
    }
}

/// Rasterizes the requested construction. Canvases are square `size x size`
/// except Cantor dust, which is a `size x 1` strip.
pub fn generate(spec: &GeneratorSpec) -> Result<BinaryImage, GeneratorError> {
    spec.validate()?;
    let size = spec.size;
    let full = Rect { x0: 0.0, y0: 0.0, x1: size as f64, y1: size as f64 };
    Ok(match spec.kind {
        FractalKind::FilledSquare => {
            BinaryImage::from_bits(size, size, vec![true; size as usize * size as usize])
                .expect("validated size")
        }
        FractalKind::Line => {
            let mut img = BinaryImage::blank(size, size).expect("validated size");
            for x in 0..size {
                img.set(x, size / 2, true);
            }
            img
        }
        FractalKind::CantorDust => {
            let mut img = BinaryImage::blank(size, 1).expect("validated size");
            cantor_intervals(&mut img, 0.0, size as f64, spec.level);
            img
        }
        FractalKind::SierpinskiCarpet => {
            let mut img = BinaryImage::blank(size, size).expect("validated size");
            let keep: Vec<(u32, u32)> =
                (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|&c| c != (1, 1)).collect();
            subdivide(&mut img, full, spec.level, 3, &keep);
            img
        }
        FractalKind::SierpinskiTriangle => {
            let mut img = BinaryImage::blank(size, size).expect("validated size");
            subdivide(&mut img, full, spec.level, 2, &[(0, 0), (1, 0), (0, 1)]);
            img
        }
        FractalKind::KochCurve => {
            let mut img = BinaryImage::blank(size, size).expect("validated size");
            let y = size as f64 - 1.0;
            let mut segments = Vec::new();
            koch_segments((0.0, y), (size as f64 - 1.0, y), spec.level, &mut segments);
            for (a, b) in segments {
                stroke(&mut img, a, b);
            }
            img
        }
    })
}
