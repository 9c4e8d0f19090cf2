//! Static Likert plot: one 100% stacked bar per indicator, one segment per
//! variant sized by its mean grade.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::harness::GradeTable;

const LABEL_W: f64 = 60.0;
const BAR_W: f64 = 600.0;
const BAR_H: f64 = 24.0;
const GAP: f64 = 10.0;
const TOP: f64 = 40.0;
const LEGEND_H: f64 = 30.0;

/// Diverging palette from the most degraded variant (red) to the ground truth (blue).
fn colour(index: usize, count: usize) -> String {
    let t = if count <= 1 {
        1.0
    } else {
        index as f64 / (count - 1) as f64
    };
    let lerp = |a: f64, b: f64| (a + (b - a) * t).round() as u8;
    format!(
        "#{:02x}{:02x}{:02x}",
        lerp(215.0, 44.0),
        lerp(48.0, 123.0),
        lerp(39.0, 182.0)
    )
}

pub fn render_likert_svg(table: &GradeTable) -> Result<String> {
    let aggregate = table.aggregate();
    if aggregate.is_empty() {
        return Err(Error::EmptyTable);
    }
    let indicators = table.indicators();
    let mut variants = table.variants();
    variants.sort_by(|a, b| a.truth_order().total_cmp(&b.truth_order()));

    let width = LABEL_W + BAR_W + 20.0;
    let height = TOP + indicators.len() as f64 * (BAR_H + GAP) + LEGEND_H + 10.0;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif" font-size="10">"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="20" font-size="13" text-anchor="middle">Preferences of the indicators ({})</text>"#,
        width / 2.0,
        table.experiment
    );
    for (row, indicator) in indicators.iter().enumerate() {
        let y = TOP + row as f64 * (BAR_H + GAP);
        let segments: Vec<_> = variants
            .iter()
            .enumerate()
            .filter_map(|(vi, v)| {
                aggregate
                    .iter()
                    .find(|a| a.indicator == *indicator && a.scenario == *v)
                    .map(|a| (vi, a))
            })
            .collect();
        let total: f64 = segments.iter().map(|(_, a)| a.mean_grade).sum();
        let _ = writeln!(
            s,
            r#"<g class="bar" data-indicator="{}">"#,
            indicator.name()
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#,
            LABEL_W - 6.0,
            y + BAR_H / 2.0 + 4.0,
            indicator.name()
        );
        let mut x = LABEL_W;
        for (vi, a) in segments {
            let w = if total > 0.0 {
                BAR_W * a.mean_grade / total
            } else {
                0.0
            };
            let _ = writeln!(
                s,
                r#"<rect class="seg" data-variant="{}" x="{x:.2}" y="{y:.1}" width="{w:.2}" height="{BAR_H:.1}" fill="{}" stroke="white"/>"#,
                a.scenario.level(),
                colour(vi, variants.len())
            );
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.1}" text-anchor="middle" fill="white">{:.1}</text>"#,
                x + w / 2.0,
                y + BAR_H / 2.0 + 4.0,
                a.mean_grade
            );
            x += w;
        }
        s.push_str("</g>\n");
    }
    let ly = TOP + indicators.len() as f64 * (BAR_H + GAP) + 5.0;
    let step = BAR_W / variants.len() as f64;
    s.push_str("<g class=\"legend\">\n");
    for (vi, v) in variants.iter().enumerate() {
        let x = LABEL_W + vi as f64 * step;
        let _ = writeln!(
            s,
            r#"<rect x="{x:.2}" y="{ly:.1}" width="10" height="10" fill="{}"/><text x="{:.2}" y="{:.1}">{}</text>"#,
            colour(vi, variants.len()),
            x + 13.0,
            ly + 9.0,
            v.level()
        );
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}

pub fn emit_likert_svg(table: &GradeTable, path: &Path) -> Result<()> {
    let svg = render_likert_svg(table)?;
    fs::write(path, svg).map_err(|e| Error::io(path, e))
}
