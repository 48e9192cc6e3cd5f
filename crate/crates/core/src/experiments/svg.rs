//! Standalone SVG line plot of a sweep.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::sweep::SweepResult;
use crate::error::{EcdError, Result};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 60.0;
const BOTTOM: f64 = 70.0;
const TICKS: usize = 5;

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Axis range with a little headroom; a flat series gets a unit-height band.
fn padded(lo: f64, hi: f64) -> (f64, f64) {
    if hi - lo < 1e-12 {
        let pad = if hi.abs() > 0.0 { hi.abs() * 0.5 } else { 0.5 };
        (lo - pad, hi + pad)
    } else {
        (lo, hi + 0.05 * (hi - lo))
    }
}

pub fn render_svg(result: &SweepResult) -> Result<String> {
    if result.rows.len() < 2 {
        return Err(EcdError::InsufficientData(format!(
            "a plot needs at least 2 points, got {}",
            result.rows.len()
        )));
    }
    let (x_lo, x_hi) = (result.rows[0].a, result.rows[result.rows.len() - 1].a);
    let (d_lo, d_hi) = result
        .rows
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(r.d), hi.max(r.d)));
    let (y_lo, y_hi) = padded(d_lo.min(0.0), d_hi);
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let sy = |y: f64| TOP + (1.0 - (y - y_lo) / (y_hi - y_lo)) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="30" text-anchor="middle" font-size="15">{}</text>"#,
        WIDTH / 2.0,
        escape(&format!("Chaos degree D vs {}: {}", result.metadata.parameter, result.metadata.summary))
    );
    let _ = writeln!(
        svg,
        r#"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    );

    for i in 0..=TICKS {
        let t = i as f64 / TICKS as f64;
        let xv = x_lo + t * (x_hi - x_lo);
        let yv = y_lo + t * (y_hi - y_lo);
        let (px, py) = (sx(xv), sy(yv));
        let _ = writeln!(
            svg,
            r#"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/><text x="{px:.2}" y="{:.2}" text-anchor="middle" font-size="12">{}</text>"#,
            TOP + plot_h,
            TOP + plot_h + 6.0,
            TOP + plot_h + 22.0,
            escape(&format!("{xv:.3}"))
        );
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{LEFT}" y2="{py:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end" font-size="12">{}</text>"#,
            LEFT - 6.0,
            LEFT - 10.0,
            py + 4.0,
            escape(&format!("{yv:.3}"))
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="14">{}</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 20.0,
        escape(&result.metadata.parameter)
    );
    let _ = writeln!(
        svg,
        r#"<text x="20" y="{:.2}" text-anchor="middle" font-size="14" transform="rotate(-90 20 {:.2})">D (nats)</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );

    let points: Vec<String> = result
        .rows
        .iter()
        .map(|r| format!("{:.2},{:.2}", sx(r.a), sy(r.d)))
        .collect();
    let _ = writeln!(
        svg,
        r##"<polyline fill="none" stroke="#1f77b4" stroke-width="1.2" points="{}"/>"##,
        points.join(" ")
    );
    for r in &result.rows {
        let _ = writeln!(
            svg,
            r##"<circle cx="{:.2}" cy="{:.2}" r="2" fill="#1f77b4"/>"##,
            sx(r.a),
            sy(r.d)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

pub fn emit_svg(result: &SweepResult, path: &Path) -> Result<()> {
    fs::write(path, render_svg(result)?)?;
    Ok(())
}
