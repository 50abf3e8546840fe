//! One function per subcommand. Each prints a human-readable summary to
//! stdout and, when `--out` is given, writes the machine-readable report.

use std::f64::consts::PI;
use std::path::Path;

use archgeom_core::boxcount::{analyze, DimensionReport};
use archgeom_core::generators::GeneratorSpec;
use archgeom_core::hyperbolic::{
    dist_disc, dist_half_plane, geodesic_through, limiting_parallels, pythagoras_residual, to_disc,
    to_half_plane, triangle_angle_sum, DiscPoint, Geodesic, HTriangle, HalfPlanePoint, IdealPoint,
};
use archgeom_core::raster::{binarize, read_pgm, write_pgm};
use archgeom_core::stats::{pearson, summarize};
use serde_json::{json, Value};

use crate::csvio;
use crate::error::CliError;
use crate::report::{canonical_json, ReportDocument};
use crate::svg;
use crate::{BoxcountArgs, GenerateArgs, HypArgs, HypCommand, PlotArgs, StatsArgs};

fn write_report(
    path: &Path,
    command: &str,
    inputs: Vec<String>,
    payload: Value,
) -> Result<(), CliError> {
    let doc = ReportDocument::new(command, inputs, payload);
    csvio::io_write(path, canonical_json(&doc)?.as_bytes())
}

pub fn boxcount(args: &BoxcountArgs) -> Result<(), CliError> {
    let bytes = csvio::io_read(&args.image)?;
    let gray = read_pgm(&bytes)?;
    let threshold = args.threshold.unwrap_or_else(|| gray.default_threshold());
    let ink = binarize(&gray, threshold)?;
    let image_id = args.image.file_stem().and_then(|s| s.to_str()).unwrap_or("image").to_owned();
    let report = analyze(&ink, &image_id, args.levels)?;

    println!(
        "image {image_id}: {}x{} px, threshold {threshold}, {} ink pixels",
        gray.width(),
        gray.height(),
        ink.ink_count()
    );
    println!("{:>12}  {:>10}  {:>12}", "delta", "count", "pairwise_dim");
    for (i, r) in report.series.records.iter().enumerate() {
        let dim = match i.checked_sub(1).and_then(|k| report.pairwise.get(k)) {
            Some(p) => format!("{:.2}", p.dim),
            None => "-".to_owned(),
        };
        println!("{:>12.2}  {:>10}  {:>12}", r.delta, r.count, dim);
    }
    println!("average dimension {:.3}", report.average_dim);
    println!("least-squares dimension {:.3}", report.lsq_dim);
    println!(
        "preferred band [1.1, 1.5]: {}",
        if report.in_preferred_band { "inside" } else { "outside" }
    );

    if let Some(csv_path) = &args.csv {
        csvio::io_write(csv_path, csvio::boxcount_csv(&report).as_bytes())?;
    }
    if let Some(out) = &args.out {
        let inputs = vec![args.image.display().to_string()];
        write_report(out, "boxcount", inputs, serde_json::to_value(&report)?)?;
    }
    Ok(())
}

pub fn generate(args: &GenerateArgs) -> Result<(), CliError> {
    let spec = GeneratorSpec { kind: args.kind, level: args.level, size: args.size };
    let img = archgeom_core::generators::generate(&spec)?;
    let gray = img.to_gray(255);
    csvio::io_write(&args.out, &write_pgm(&gray, args.ascii))?;
    println!(
        "wrote {}: {} level {}, {}x{} px, {} ink pixels",
        args.out.display(),
        spec.kind,
        spec.level,
        img.width(),
        img.height(),
        img.ink_count()
    );
    Ok(())
}

fn fmt_f(x: f64) -> String {
    // Negative zero reads as noise in output; fold it into plain zero.
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.12}")
}

fn fmt_complex(re: f64, im: f64) -> String {
    if im >= 0.0 {
        format!("{} + {}i", fmt_f(re), fmt_f(im))
    } else {
        format!("{} - {}i", fmt_f(re), fmt_f(-im))
    }
}

fn geodesic_text(g: &Geodesic) -> String {
    match g {
        Geodesic::VerticalRay { foot } => format!("vertical ray, foot {}", fmt_f(*foot)),
        Geodesic::Semicircle { center, radius } => {
            format!("semicircle, center {}, radius {}", fmt_f(*center), fmt_f(*radius))
        }
    }
}

fn endpoint_text(e: &IdealPoint) -> String {
    match e {
        IdealPoint::Infinity => "infinity".to_owned(),
        IdealPoint::Foot(f) => fmt_f(*f),
    }
}

fn pt(re: f64, im: f64) -> Value {
    json!({ "re": re, "im": im })
}

pub fn hyp(args: &HypArgs) -> Result<(), CliError> {
    let (name, payload) = match args.command {
        HypCommand::DistH { x1, y1, x2, y2 } => {
            let p = HalfPlanePoint::new(x1, y1)?;
            let q = HalfPlanePoint::new(x2, y2)?;
            let d = dist_half_plane(p, q);
            println!("{}", fmt_f(d));
            (
                "dist-h",
                json!({ "model": "half_plane", "p": pt(x1, y1), "q": pt(x2, y2), "distance": d }),
            )
        }
        HypCommand::DistD { x1, y1, x2, y2 } => {
            let p = DiscPoint::new(x1, y1)?;
            let q = DiscPoint::new(x2, y2)?;
            let d = dist_disc(p, q);
            println!("{}", fmt_f(d));
            ("dist-d", json!({ "model": "disc", "p": pt(x1, y1), "q": pt(x2, y2), "distance": d }))
        }
        HypCommand::ToDisc { x, y } => {
            let w = to_disc(HalfPlanePoint::new(x, y)?);
            println!("{}", fmt_complex(w.re(), w.im()));
            ("to-disc", json!({ "model": "disc", "point": pt(w.re(), w.im()) }))
        }
        HypCommand::ToHalf { x, y } => {
            let z = to_half_plane(DiscPoint::new(x, y)?);
            println!("{}", fmt_complex(z.re(), z.im()));
            ("to-half", json!({ "model": "half_plane", "point": pt(z.re(), z.im()) }))
        }
        HypCommand::Geodesic { x1, y1, x2, y2 } => {
            let g = geodesic_through(HalfPlanePoint::new(x1, y1)?, HalfPlanePoint::new(x2, y2)?)?;
            println!("{}", geodesic_text(&g));
            ("geodesic", json!({ "geodesic": g }))
        }
        HypCommand::Parallels { px, py, foot, center, radius } => {
            let g = match (foot, center, radius) {
                (Some(f), None, None) => Geodesic::VerticalRay { foot: f },
                (None, Some(c), Some(r)) if r > 0.0 => {
                    Geodesic::Semicircle { center: c, radius: r }
                }
                (None, Some(_), Some(_)) => {
                    return Err(CliError::Usage("--radius must be positive".to_owned()))
                }
                _ => {
                    return Err(CliError::Usage(
                        "the line needs either --foot, or --center together with --radius"
                            .to_owned(),
                    ))
                }
            };
            let p = HalfPlanePoint::new(px, py)?;
            let (g1, g2) = limiting_parallels(&g, p)?;
            for (endpoint, parallel) in g.ideal_endpoints().iter().zip([&g1, &g2]) {
                println!(
                    "shared endpoint {}: {}",
                    endpoint_text(endpoint),
                    geodesic_text(parallel)
                );
            }
            ("parallels", json!({ "line": g, "point": pt(px, py), "parallels": [g1, g2] }))
        }
        HypCommand::AngleSum { ax, ay, bx, by, cx, cy } => {
            let t = HTriangle::new(
                HalfPlanePoint::new(ax, ay)?,
                HalfPlanePoint::new(bx, by)?,
                HalfPlanePoint::new(cx, cy)?,
            )?;
            let sum = triangle_angle_sum(&t);
            println!("angle_sum {}", fmt_f(sum));
            println!("defect {}", fmt_f(PI - sum));
            ("angle-sum", json!({ "angle_sum": sum, "defect": PI - sum }))
        }
        HypCommand::Pythagoras { r, u, v } => {
            let residual = pythagoras_residual(r, u, v)?;
            let apex = HalfPlanePoint::new(0.0, r)?;
            let corner = HalfPlanePoint::new(0.0, 1.0)?;
            let foot = HalfPlanePoint::new(u, v)?;
            let leg_a = dist_half_plane(corner, apex);
            let leg_b = dist_half_plane(corner, foot);
            let hyp = dist_half_plane(apex, foot);
            println!("cosh_a {}", fmt_f(leg_a.cosh()));
            println!("cosh_b {}", fmt_f(leg_b.cosh()));
            println!("cosh_c {}", fmt_f(hyp.cosh()));
            println!("residual {}", fmt_f(residual));
            (
                "pythagoras",
                json!({
                    "leg_a": leg_a,
                    "leg_b": leg_b,
                    "hypotenuse": hyp,
                    "cosh_a": leg_a.cosh(),
                    "cosh_b": leg_b.cosh(),
                    "cosh_c": hyp.cosh(),
                    "residual": residual,
                }),
            )
        }
    };
    if let Some(out) = &args.out {
        write_report(out, &format!("hyp {name}"), Vec::new(), payload)?;
    }
    Ok(())
}

pub fn stats(args: &StatsArgs) -> Result<(), CliError> {
    let series = csvio::read_series(&args.csv)?;
    let find = |label: &str| {
        series.iter().find(|s| s.label() == label).ok_or_else(|| {
            CliError::Input(format!("{}: no column named {label:?}", args.csv.display()))
        })
    };

    println!("{:<24} {:>8} {:>8} {:>4}", "column", "mean", "std", "n");
    let mut columns = Vec::new();
    for s in &series {
        let st = summarize(s);
        println!("{:<24} {:>8.3} {:>8.3} {:>4}", s.label(), st.mean, st.sample_std, st.n);
        columns.push(json!({
            "label": s.label(),
            "mean": st.mean,
            "sample_std": st.sample_std,
            "n": st.n,
        }));
    }

    let mut pairs = Vec::new();
    if let Some(spec) = &args.pairs {
        for (a, b) in csvio::parse_pairs(spec)? {
            let r = pearson(find(&a)?, find(&b)?)?;
            println!("r({a}, {b}) = {r:.3}");
            pairs.push(json!({ "a": a, "b": b, "r": r }));
        }
    }

    if let Some(out) = &args.out {
        let inputs = vec![args.csv.display().to_string()];
        write_report(out, "stats", inputs, json!({ "columns": columns, "pairs": pairs }))?;
    }
    Ok(())
}

pub fn plot(args: &PlotArgs) -> Result<(), CliError> {
    let bytes = csvio::io_read(&args.report)?;
    let value: Value = serde_json::from_slice(&bytes)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.report.display())))?;
    // Accept either a full report document or a bare dimension report.
    let payload = value.get("report").cloned().unwrap_or(value);
    let report: DimensionReport = serde_json::from_value(payload).map_err(|e| {
        CliError::Input(format!("{}: not a dimension report: {e}", args.report.display()))
    })?;
    if report.series.records.len() < 2 {
        return Err(CliError::Input(format!(
            "{}: need at least 2 records to plot, got {}",
            args.report.display(),
            report.series.records.len()
        )));
    }
    csvio::io_write(&args.out, svg::dimension_plot(&report).as_bytes())?;
    println!("wrote {} (slope {:.3})", args.out.display(), report.lsq_dim);
    Ok(())
}
