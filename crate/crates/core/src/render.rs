//! Drawing diagrams as SVG or as a coarse text grid.
//!
//! Endpoint `k` of a diagram with `n` chords sits at angle
//! `360/(4n) + k * 360/(2n)` degrees, counterclockwise from the positive x
//! axis, so with four chords the endpoints land on 22.5 + 45k degrees. Each
//! chord is an arrow from tail to head, labeled at its tail, with its sign
//! at the midpoint. Chords are emitted in order of first appearance.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::diagram::GaussDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: RenderFormat,
    /// Pixel width (and height) of the SVG.
    pub size: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            format: RenderFormat::Svg,
            size: 480,
        }
    }
}

/// Angle of endpoint `position`, in radians.
pub fn endpoint_angle(d: &GaussDiagram, position: usize) -> f64 {
    let len = d.len().max(1) as f64;
    let step = 2.0 * PI / len;
    step / 2.0 + position as f64 * step
}

pub fn render(d: &GaussDiagram, opts: RenderOptions) -> String {
    match opts.format {
        RenderFormat::Svg => render_svg(d, opts.size.max(16)),
        RenderFormat::Ascii => render_ascii(d),
    }
}

/// One legend line per chord: `label: tailpos→headpos sign`.
pub fn legend(d: &GaussDiagram) -> Vec<String> {
    d.labels_by_position()
        .into_iter()
        .map(|label| {
            let place = d.place(label).unwrap();
            format!("{label}: {}\u{2192}{} {}", place.tail, place.head, place.sign)
        })
        .collect()
}

fn render_svg(d: &GaussDiagram, size: u32) -> String {
    let s = size as f64;
    let (cx, cy) = (s / 2.0, s / 2.0);
    let r = s * 0.38;
    let point = |position: usize, scale: f64| {
        let theta = endpoint_angle(d, position);
        (cx + r * scale * theta.cos(), cy - r * scale * theta.sin())
    };

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    out.push_str(concat!(
        r#"  <defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" "#,
        r#"markerWidth="7" markerHeight="7" orient="auto"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>"#,
        "\n"
    ));
    writeln!(
        out,
        r#"  <circle cx="{cx:.2}" cy="{cy:.2}" r="{r:.2}" fill="none" stroke="black" stroke-width="2"/>"#
    )
    .unwrap();
    for label in d.labels_by_position() {
        let place = d.place(label).unwrap();
        let (x1, y1) = point(place.tail, 1.0);
        let (x2, y2) = point(place.head, 1.0);
        let (lx, ly) = point(place.tail, 1.12);
        let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        writeln!(out, r#"  <g class="chord" data-chord="{label}" data-sign="{}">"#, place.sign).unwrap();
        writeln!(
            out,
            r#"    <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="1.5" marker-end="url(#arrow)"/>"#
        )
        .unwrap();
        writeln!(
            out,
            r#"    <text class="label" x="{lx:.2}" y="{ly:.2}" text-anchor="middle" dominant-baseline="middle">{label}</text>"#
        )
        .unwrap();
        writeln!(
            out,
            r#"    <text class="sign" x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            mx + 6.0,
            my - 6.0,
            place.sign
        )
        .unwrap();
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

const GRID_W: usize = 41;
const GRID_H: usize = 21;

fn render_ascii(d: &GaussDiagram) -> String {
    let mut grid = vec![vec![' '; GRID_W]; GRID_H];
    let (cx, cy) = ((GRID_W - 1) as f64 / 2.0, (GRID_H - 1) as f64 / 2.0);
    let (rx, ry) = (cx - 1.0, cy - 1.0);
    let cell = |theta: f64, scale: f64| {
        let x = (cx + rx * scale * theta.cos()).round() as usize;
        let y = (cy - ry * scale * theta.sin()).round() as usize;
        (x.min(GRID_W - 1), y.min(GRID_H - 1))
    };

    for step in 0..360 {
        let (x, y) = cell(step as f64 * PI / 180.0, 1.0);
        grid[y][x] = '.';
    }
    for label in d.labels_by_position() {
        let place = d.place(label).unwrap();
        let (x1, y1) = cell(endpoint_angle(d, place.tail), 1.0);
        let (x2, y2) = cell(endpoint_angle(d, place.head), 1.0);
        let steps = 2 * GRID_W;
        for i in 1..steps {
            let t = i as f64 / steps as f64;
            let x = (x1 as f64 + t * (x2 as f64 - x1 as f64)).round() as usize;
            let y = (y1 as f64 + t * (y2 as f64 - y1 as f64)).round() as usize;
            if grid[y][x] == ' ' {
                grid[y][x] = ':';
            }
        }
    }
    for label in d.labels_by_position() {
        let place = d.place(label).unwrap();
        let (x, y) = cell(endpoint_angle(d, place.tail), 1.0);
        grid[y][x] = 'o';
        let (x, y) = cell(endpoint_angle(d, place.head), 1.0);
        grid[y][x] = '>';
    }

    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str("o tail, > head\n");
    for line in legend(d) {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::parse_gauss_code;

    #[test]
    fn trefoil_legend() {
        let d = parse_gauss_code("O1-O2-U1-U2-").unwrap();
        let text = render(
            &d,
            RenderOptions {
                format: RenderFormat::Ascii,
                size: 480,
            },
        );
        let lines: Vec<_> = text.lines().collect();
        assert!(lines.contains(&"1: 0\u{2192}2 -"));
        assert!(lines.contains(&"2: 1\u{2192}3 -"));
    }

    #[test]
    fn angles_start_half_a_step_in() {
        let d = parse_gauss_code("O1+O2+O3+O4+U1+U2+U3+U4+").unwrap();
        let degrees: Vec<_> = (0..8).map(|k| endpoint_angle(&d, k).to_degrees()).collect();
        for (k, deg) in degrees.iter().enumerate() {
            assert!((deg - (22.5 + 45.0 * k as f64)).abs() < 1e-9);
        }
    }

    #[test]
    fn empty_svg_has_only_the_circle() {
        let svg = render(&GaussDiagram::empty(), RenderOptions::default());
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<line").count(), 0);
    }
}
