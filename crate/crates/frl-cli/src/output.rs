//! CSV/JSON/SVG emitters. All numeric output uses Rust's shortest
//! round-trip float formatting, so repeated runs produce byte-identical
//! files.

use anyhow::{Context, Result};
use frl_core::spectral::{SampledSignal, Spectrum};
use std::fmt::Write as _;
use std::path::Path;

pub fn write_signal_csv(path: &Path, signal: &SampledSignal) -> Result<()> {
    let mut out = String::from("t,f\n");
    for (i, v) in signal.samples.iter().enumerate() {
        let _ = writeln!(out, "{:e},{:e}", signal.time(i), v);
    }
    std::fs::write(path, out).with_context(|| format!("writing {}", path.display()))
}

pub fn write_spectrum_csv(path: &Path, spectrum: &Spectrum) -> Result<()> {
    let mut out = String::from("k,re,im,abs\n");
    for (k, c) in spectrum.coeffs.iter().enumerate() {
        let _ = writeln!(out, "{k},{:e},{:e},{:e}", c.re, c.im, c.norm());
    }
    std::fs::write(path, out).with_context(|| format!("writing {}", path.display()))
}

pub fn write_columns_csv(
    path: &Path,
    header: (&str, &str),
    rows: impl Iterator<Item = (f64, f64)>,
) -> Result<()> {
    let mut out = format!("{},{}\n", header.0, header.1);
    for (a, b) in rows {
        let _ = writeln!(out, "{a:e},{b:e}");
    }
    std::fs::write(path, out).with_context(|| format!("writing {}", path.display()))
}

pub fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut body = serde_json::to_string_pretty(value)?;
    body.push('\n');
    std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))
}

/// Minimal log-log SVG: scatter of (k, |c_k|) envelope points plus the fitted
/// line, with decade gridlines.
pub fn write_loglog_svg(
    path: &Path,
    title: &str,
    points: &[(f64, f64)],
    slope: f64,
    intercept_log10: f64,
) -> Result<()> {
    const W: f64 = 800.0;
    const H: f64 = 560.0;
    const ML: f64 = 70.0;
    const MR: f64 = 20.0;
    const MT: f64 = 40.0;
    const MB: f64 = 50.0;

    let xs: Vec<f64> = points.iter().map(|p| p.0.log10()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.log10()).collect();
    let (x0, x1) = bounds(&xs);
    let (y0, y1) = bounds(&ys);
    let px = |x: f64| ML + (x - x0) / (x1 - x0) * (W - ML - MR);
    let py = |y: f64| H - MB - (y - y0) / (y1 - y0) * (H - MT - MB);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">"
    );
    let _ = writeln!(svg, "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>");
    let _ = writeln!(
        svg,
        "<text x=\"{}\" y=\"24\" font-family=\"monospace\" font-size=\"15\">{}</text>",
        ML,
        xml_escape(title)
    );
    // decade gridlines and tick labels
    for d in (x0.ceil() as i64)..=(x1.floor() as i64) {
        let x = px(d as f64);
        let _ = writeln!(
            svg,
            "<line x1=\"{x:.1}\" y1=\"{MT}\" x2=\"{x:.1}\" y2=\"{:.1}\" stroke=\"#ddd\"/>",
            H - MB
        );
        let _ = writeln!(
            svg,
            "<text x=\"{x:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">1e{d}</text>",
            H - MB + 18.0
        );
    }
    for d in (y0.ceil() as i64)..=(y1.floor() as i64) {
        let y = py(d as f64);
        let _ = writeln!(
            svg,
            "<line x1=\"{ML}\" y1=\"{y:.1}\" x2=\"{:.1}\" y2=\"{y:.1}\" stroke=\"#ddd\"/>",
            W - MR
        );
        let _ = writeln!(
            svg,
            "<text x=\"{:.1}\" y=\"{y:.1}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">1e{d}</text>",
            ML - 6.0
        );
    }
    let _ = writeln!(
        svg,
        "<rect x=\"{ML}\" y=\"{MT}\" width=\"{:.1}\" height=\"{:.1}\" fill=\"none\" stroke=\"black\"/>",
        W - ML - MR,
        H - MT - MB
    );
    // fitted line across the x-range
    let (lx0, lx1) = (x0, x1);
    let (ly0, ly1) = (intercept_log10 + slope * lx0, intercept_log10 + slope * lx1);
    let _ = writeln!(
        svg,
        "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#c33\" stroke-width=\"1.5\"/>",
        px(lx0),
        py(ly0.clamp(y0, y1)),
        px(lx1),
        py(ly1.clamp(y0, y1))
    );
    for (x, y) in xs.iter().zip(ys.iter()) {
        let _ = writeln!(
            svg,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.4\" fill=\"#226\"/>",
            px(*x),
            py(*y)
        );
    }
    let _ = writeln!(
        svg,
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">k</text>",
        ML + (W - ML - MR) / 2.0,
        H - 12.0
    );
    let _ = writeln!(
        svg,
        "<text x=\"16\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"13\" transform=\"rotate(-90 16 {:.1})\">|c_k|</text>",
        MT + (H - MT - MB) / 2.0,
        MT + (H - MT - MB) / 2.0
    );
    let _ = writeln!(svg, "</svg>");
    std::fs::write(path, svg).with_context(|| format!("writing {}", path.display()))
}

fn bounds(v: &[f64]) -> (f64, f64) {
    let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if (hi - lo).abs() < 1e-12 {
        (lo - 1.0, hi + 1.0)
    } else {
        (lo, hi)
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
