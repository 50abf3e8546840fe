//! Box-counting dimension estimation: occupied-cell counts over a halving
//! scale series, pairwise and least-squares slope estimates, and the
//! aesthetic-band classification of the resulting average.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::raster::{ink_bounding_box, BinaryImage};

#[derive(Debug, Error, PartialEq)]
pub enum BoxCountError {
    #[error("image has no ink pixels")]
    NoInk,
    #[error("initial delta must be positive and finite, got {0}")]
    BadDelta(f64),
    #[error("need at least 2 scale levels, got {0}")]
    TooFewLevels(u32),
    #[error("need at least 2 records, got {0}")]
    TooFewRecords(usize),
    #[error("record at delta {delta} has zero count")]
    ZeroCount { delta: f64 },
    #[error("scale series is degenerate (deltas do not decrease)")]
    DegenerateScales,
}

/// One grid scale: cell edge length in pixels and the occupied-cell count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoxCountRecord {
    pub delta: f64,
    pub count: u64,
}

/// Counts over a strictly decreasing (halving) delta series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxCountSeries {
    pub image_id: String,
    pub records: Vec<BoxCountRecord>,
}

/// Dimension estimate from one adjacent pair of scales.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairwiseDimension {
    pub delta_large: f64,
    pub delta_small: f64,
    pub dim: f64,
}

/// Full analysis of one image: the raw series, per-pair estimates, their
/// mean, the regression slope, and whether the mean falls in the
/// empirically preferred band [1.1, 1.5].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub series: BoxCountSeries,
    pub pairwise: Vec<PairwiseDimension>,
    pub average_dim: f64,
    pub lsq_dim: f64,
    pub in_preferred_band: bool,
}

/// Grids bigger than this fall back to sparse cell collection.
const DENSE_CELL_LIMIT: usize = 1 << 24;

/// Number of grid cells of edge `delta` containing at least one ink pixel.
/// A pixel `(x, y)` sits in the cell of its center `(x+0.5, y+0.5)` relative
/// to `origin`. Rows are scanned in parallel; the cell-set union is
/// order-independent, so the result does not depend on thread count.
pub fn count_boxes(img: &BinaryImage, delta: f64, origin: (f64, f64)) -> u64 {
    assert!(delta.is_finite() && delta > 0.0, "delta must be positive");
    if img.ink_count() == 0 {
        return 0;
    }
    let (w, h) = (img.width() as usize, img.height() as usize);
    let cell = |coord: usize, o: f64| (((coord as f64 + 0.5) - o) / delta).floor() as i64;
    let col_cell: Vec<i64> = (0..w).map(|x| cell(x, origin.0)).collect();
    let row_cell: Vec<i64> = (0..h).map(|y| cell(y, origin.1)).collect();
    let (min_cx, max_cx) = (col_cell[0], col_cell[w - 1]);
    let (min_cy, max_cy) = (row_cell[0], row_cell[h - 1]);
    let grid_w = (max_cx - min_cx + 1) as usize;
    let grid_h = (max_cy - min_cy + 1) as usize;

    match grid_w.checked_mul(grid_h) {
        Some(cells) if cells <= DENSE_CELL_LIMIT => {
            let hit = img
                .bits()
                .par_chunks(w)
                .enumerate()
                .fold(
                    || vec![false; cells],
                    |mut acc, (y, row)| {
                        let base = (row_cell[y] - min_cy) as usize * grid_w;
                        for (x, &ink) in row.iter().enumerate() {
                            if ink {
                                acc[base + (col_cell[x] - min_cx) as usize] = true;
                            }
                        }
                        acc
                    },
                )
                .reduce(
                    || vec![false; cells],
                    |mut a, b| {
                        for (a, b) in a.iter_mut().zip(&b) {
                            *a |= b;
                        }
                        a
                    },
                );
            hit.into_iter().filter(|&occupied| occupied).count() as u64
        }
        _ => {
            let mut ids: Vec<(i64, i64)> = img
                .bits()
                .par_chunks(w)
                .enumerate()
                .flat_map_iter(|(y, row)| {
                    let cy = row_cell[y];
                    let col_cell = &col_cell;
                    row.iter()
                        .enumerate()
                        .filter(|&(_, &ink)| ink)
                        .map(move |(x, _)| (cy, col_cell[x]))
                })
                .collect();
            ids.par_sort_unstable();
            ids.dedup();
            ids.len() as u64
        }
    }
}

/// The scale series for `img`: `levels` counts at deltas halving from
/// `initial_delta` (default: the longer edge of the ink bounding box). The
/// grid is anchored at the bounding box's top-left corner, so counts do not
/// change when the image is padded or cropped around the ink.
pub fn box_count_series(
    img: &BinaryImage,
    image_id: &str,
    levels: u32,
    initial_delta: Option<f64>,
) -> Result<BoxCountSeries, BoxCountError> {
    if levels < 2 {
        return Err(BoxCountError::TooFewLevels(levels));
    }
    let (x0, y0, x1, y1) = ink_bounding_box(img).ok_or(BoxCountError::NoInk)?;
    let origin = (x0 as f64, y0 as f64);
    let extent = (x1 - x0 + 1).max(y1 - y0 + 1) as f64;
    let mut delta = initial_delta.unwrap_or(extent);
    if !(delta.is_finite() && delta > 0.0) {
        return Err(BoxCountError::BadDelta(delta));
    }
    let mut records = Vec::with_capacity(levels as usize);
    for _ in 0..levels {
        records.push(BoxCountRecord { delta, count: count_boxes(img, delta, origin) });
        delta /= 2.0;
    }
    Ok(BoxCountSeries { image_id: image_id.to_owned(), records })
}

/// Dimension estimates between adjacent scales:
/// `ln(N_small/N_large) / ln(delta_large/delta_small)`.
pub fn pairwise_dimensions(s: &BoxCountSeries) -> Result<Vec<PairwiseDimension>, BoxCountError> {
    if s.records.len() < 2 {
        return Err(BoxCountError::TooFewRecords(s.records.len()));
    }
    s.records
        .windows(2)
        .map(|pair| {
            let (large, small) = (pair[0], pair[1]);
            for r in [large, small] {
                if r.count == 0 {
                    return Err(BoxCountError::ZeroCount { delta: r.delta });
                }
            }
            if large.delta <= small.delta {
                return Err(BoxCountError::DegenerateScales);
            }
            Ok(PairwiseDimension {
                delta_large: large.delta,
                delta_small: small.delta,
                dim: f64::ln(small.count as f64 / large.count as f64)
                    / f64::ln(large.delta / small.delta),
            })
        })
        .collect()
}

/// Ordinary least-squares slope of `ln N` against `-ln delta`.
pub fn fit_dimension(s: &BoxCountSeries) -> Result<f64, BoxCountError> {
    let n = s.records.len();
    if n < 2 {
        return Err(BoxCountError::TooFewRecords(n));
    }
    for r in &s.records {
        if r.count == 0 {
            return Err(BoxCountError::ZeroCount { delta: r.delta });
        }
    }
    let xs: Vec<f64> = s.records.iter().map(|r| -r.delta.ln()).collect();
    let ys: Vec<f64> = s.records.iter().map(|r| (r.count as f64).ln()).collect();
    let x_mean = xs.iter().sum::<f64>() / n as f64;
    let y_mean = ys.iter().sum::<f64>() / n as f64;
    let sxx: f64 = xs.iter().map(|x| (x - x_mean).powi(2)).sum();
    if sxx == 0.0 {
        return Err(BoxCountError::DegenerateScales);
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - x_mean) * (y - y_mean)).sum();
    Ok(sxy / sxx)
}

/// Full box-counting report for one image, with the default initial delta.
pub fn analyze(
    img: &BinaryImage,
    image_id: &str,
    levels: u32,
) -> Result<DimensionReport, BoxCountError> {
    let series = box_count_series(img, image_id, levels, None)?;
    let pairwise = pairwise_dimensions(&series)?;
    let average_dim = pairwise.iter().map(|p| p.dim).sum::<f64>() / pairwise.len() as f64;
    let lsq_dim = fit_dimension(&series)?;
    Ok(DimensionReport {
        series,
        pairwise,
        average_dim,
        lsq_dim,
        in_preferred_band: (1.1..=1.5).contains(&average_dim),
    })
}
