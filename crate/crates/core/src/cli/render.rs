//! ASCII and SVG pictures of Ferrers diagrams and labelled staircase walks.

use std::fmt::Write;

use crate::partitions::Partition;
use crate::walks::{StaircaseWalk, Step, WalkError};

const CELL: usize = 24;

/// One row of `#` per part; the empty partition renders as the empty string.
pub fn partition_ascii(lambda: &Partition) -> String {
    lambda.parts().iter().map(|&p| "#".repeat(p) + "\n").collect()
}

pub fn partition_svg(lambda: &Partition) -> String {
    let (w, h) = (lambda.part(1) * CELL, lambda.length() * CELL);
    let mut out = svg_open(w, h);
    for (r, &p) in lambda.parts().iter().enumerate() {
        for c in 0..p {
            rect(&mut out, c, r, "#ddd");
        }
    }
    out.push_str("</svg>\n");
    out
}

/// The walk inside its rectangle: in row `i`, the first `mu_i` cells lie
/// above the walk (`#`) and the rest below it (`.`), with `|` marking the
/// vertical step. Steps, their times and any labels are listed underneath.
/// `marked` holds 1-based step times drawn with a `*`.
pub fn walk_ascii(walk: &StaircaseWalk, labels: Option<&[i64]>, marked: &[usize]) -> Result<String, WalkError> {
    check_labels(walk, labels)?;
    let (n, m) = (walk.width(), walk.height());
    let mu = walk.mu();
    let mut out = format!("width {n} height {m}\n");
    out.push('+');
    out.push_str(&"-".repeat(n));
    out.push_str("+\n");
    for i in 1..=m {
        let above = mu.part(i);
        let _ = writeln!(out, "|{}|{}|", "#".repeat(above), ".".repeat(n - above));
    }
    out.push('+');
    out.push_str(&"-".repeat(n));
    out.push_str("+\n");
    for (t, s) in walk.steps().iter().enumerate() {
        let _ = write!(out, "{:>3} {}", t + 1, s.as_char());
        if let Some(l) = labels {
            let _ = write!(out, " {}", l[t]);
        }
        if marked.contains(&(t + 1)) {
            out.push_str(" *");
        }
        out.push('\n');
    }
    Ok(out)
}

/// Recovers the walk from the picture drawn by [`walk_ascii`].
pub fn parse_walk_ascii(text: &str) -> Result<StaircaseWalk, String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty picture")?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .filter_map(|t| t.parse().ok())
        .collect();
    let [n, m] = dims[..] else {
        return Err(format!("bad header {header:?}"));
    };
    lines.next();
    let mut v_times = Vec::with_capacity(m);
    for i in 1..=m {
        let row = lines.next().ok_or("picture has too few rows")?;
        let above = row.chars().filter(|&c| c == '#').count();
        if above > n {
            return Err(format!("row {i} is wider than {n}"));
        }
        v_times.push(n + i - above);
    }
    Ok(StaircaseWalk::from_v_times(n + m, &v_times))
}

/// SVG of the walk: cells above the walk shaded, the walk drawn as a path,
/// and each label written beside its step.
pub fn walk_svg(walk: &StaircaseWalk, labels: Option<&[i64]>, marked: &[usize]) -> Result<String, WalkError> {
    check_labels(walk, labels)?;
    let (n, m) = (walk.width(), walk.height());
    let mu = walk.mu();
    let pad = CELL;
    let mut out = svg_open(n * CELL + 2 * pad, m * CELL + 2 * pad);
    let _ = writeln!(out, r#"<g transform="translate({pad},{pad})">"#);
    for i in 1..=m {
        for c in 0..n {
            rect(&mut out, c, i - 1, if c < mu.part(i) { "#ccc" } else { "#fff" });
        }
    }
    let (mut x, mut y) = (n * CELL, 0);
    let mut path = format!("M{x},{y}");
    for (t, s) in walk.steps().iter().enumerate() {
        let (x0, y0) = (x, y);
        match s {
            Step::H => x -= CELL,
            Step::V => y += CELL,
        }
        let _ = write!(path, " L{x},{y}");
        let colour = if marked.contains(&(t + 1)) { "red" } else { "black" };
        if let Some(l) = labels {
            // horizontal steps are labelled above, vertical steps to the right
            let (lx, ly) = match s {
                Step::H => ((x0 + x) / 2, y0.saturating_sub(4).max(10)),
                Step::V => (x0 + 6, (y0 + y) / 2 + 4),
            };
            let _ = writeln!(
                out,
                r#"<text x="{lx}" y="{ly}" font-size="11" fill="{colour}" text-anchor="middle">{}</text>"#,
                l[t]
            );
        }
    }
    let _ = writeln!(out, r#"<path d="{path}" fill="none" stroke="black" stroke-width="2"/>"#);
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

fn check_labels(walk: &StaircaseWalk, labels: Option<&[i64]>) -> Result<(), WalkError> {
    match labels {
        Some(l) if l.len() != walk.len() => Err(WalkError::LengthMismatch {
            labels: l.len(),
            steps: walk.len(),
        }),
        _ => Ok(()),
    }
}

fn svg_open(w: usize, h: usize) -> String {
    format!(r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#) + "\n"
}

fn rect(out: &mut String, col: usize, row: usize, fill: &str) {
    let _ = writeln!(
        out,
        r#"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="black"/>"#,
        col * CELL,
        row * CELL
    );
}
