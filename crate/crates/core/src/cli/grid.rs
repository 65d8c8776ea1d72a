//! Probability surfaces over a rectangle of the plane.

use std::io::Write;

use serde::Serialize;

use crate::measurement::family_probability;

/// How the second state is chosen at each grid point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GridMode {
    /// `y` fixed for the whole grid.
    Fixed([f64; 2]),
    /// `y = x` at every point.
    Diagonal,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub mode: GridMode,
    pub phi_x: f64,
    pub phi_y: f64,
    pub x1_range: [f64; 2],
    pub x2_range: [f64; 2],
    pub steps: usize,
}

impl GridSpec {
    /// `y = (1, 1)`, both states in the rest frame, `[−3, 3]²` at 61 steps.
    pub fn same_frame() -> Self {
        GridSpec {
            mode: GridMode::Fixed([1.0, 1.0]),
            phi_x: 0.0,
            phi_y: 0.0,
            x1_range: [-3.0, 3.0],
            x2_range: [-3.0, 3.0],
            steps: 61,
        }
    }

    /// `x = y` with `φx = 1`, `φy = 2` on the same rectangle.
    pub fn volcano() -> Self {
        GridSpec { mode: GridMode::Diagonal, phi_x: 1.0, phi_y: 2.0, ..Self::same_frame() }
    }

    pub fn validate(&self) -> Result<(), String> {
        for (name, [lo, hi]) in [("x1", self.x1_range), ("x2", self.x2_range)] {
            if !(lo < hi) {
                return Err(format!("{name} range needs lo < hi, got [{lo}, {hi}]"));
            }
        }
        if self.steps < 2 {
            return Err(format!("steps must be at least 2, got {}", self.steps));
        }
        if ![self.phi_x, self.phi_y].iter().all(|p| p.is_finite()) {
            return Err("rapidities must be finite".into());
        }
        if let GridMode::Fixed(y) = self.mode {
            if !y.iter().all(|v| v.is_finite()) {
                return Err("y must be finite".into());
            }
        }
        Ok(())
    }

    fn axis(&self, [lo, hi]: [f64; 2], k: usize) -> f64 {
        lo + (hi - lo) * k as f64 / (self.steps - 1) as f64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridRow {
    pub x1: f64,
    pub x2: f64,
    pub value: f64,
    #[serde(rename = "value_I")]
    pub value_i: f64,
    pub is_prob: bool,
}

/// The value at one point; rows do not depend on each other.
pub fn grid_point(spec: &GridSpec, x: [f64; 2]) -> GridRow {
    let y = match spec.mode {
        GridMode::Fixed(y) => y,
        GridMode::Diagonal => x,
    };
    let p = family_probability(x, spec.phi_x, y, spec.phi_y);
    GridRow { x1: x[0], x2: x[1], value: p.value.scalar, value_i: p.value.pseudo, is_prob: p.is_probability }
}

/// All rows with `x1` varying slowest.
pub fn grid_rows(spec: &GridSpec) -> Vec<GridRow> {
    let n = spec.steps;
    (0..n * n)
        .map(|idx| {
            let x = [spec.axis(spec.x1_range, idx / n), spec.axis(spec.x2_range, idx % n)];
            grid_point(spec, x)
        })
        .collect()
}

/// Rounds to twelve decimals and clears negative zero.
fn round12(v: f64) -> f64 {
    let r = (v * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn rounded(row: &GridRow) -> GridRow {
    GridRow {
        x1: round12(row.x1),
        x2: round12(row.x2),
        value: round12(row.value),
        value_i: round12(row.value_i),
        is_prob: row.is_prob,
    }
}

pub fn write_csv<W: Write>(rows: &[GridRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(rounded(row))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(rows: &[GridRow], mut out: W) -> std::io::Result<()> {
    let rows: Vec<GridRow> = rows.iter().map(rounded).collect();
    serde_json::to_writer_pretty(&mut out, &rows)?;
    writeln!(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_frame_surface() {
        let rows = grid_rows(&GridSpec::same_frame());
        assert_eq!(rows.len(), 61 * 61);
        assert!(rows.iter().all(|r| r.is_prob && (-1e-12..=1.0 + 1e-12).contains(&r.value)));
        let max = rows.iter().max_by(|a, b| a.value.total_cmp(&b.value)).unwrap();
        assert_eq!((max.x1, max.x2), (1.0, 1.0));
        assert!((max.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn volcano_surface() {
        let rows = grid_rows(&GridSpec::volcano());
        assert!(rows.iter().all(|r| r.value >= 1.0 - 1e-12));
        let min = rows.iter().min_by(|a, b| a.value.total_cmp(&b.value)).unwrap();
        assert_eq!((min.x1, min.x2), (0.0, 0.0));
        assert!((min.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_step_grid() {
        let spec = GridSpec { steps: 2, ..GridSpec::same_frame() };
        let rows = grid_rows(&spec);
        assert_eq!(rows.len(), 4);
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("x1,x2,value,value_I,is_prob"));
        assert_eq!(lines.count(), 4);
        let mut buf = Vec::new();
        write_json(&rows, &mut buf).unwrap();
        let parsed: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(parsed.as_array().unwrap().len(), 4);
        assert!(parsed[0].get("value_I").is_some());
    }

    #[test]
    fn invalid_specs() {
        assert!(GridSpec { steps: 1, ..GridSpec::same_frame() }.validate().is_err());
        assert!(GridSpec { x1_range: [1.0, 1.0], ..GridSpec::same_frame() }.validate().is_err());
        assert!(GridSpec::volcano().validate().is_ok());
    }

    #[test]
    fn evaluation_order_does_not_matter() {
        let spec = GridSpec { steps: 7, ..GridSpec::volcano() };
        let rows = grid_rows(&spec);
        for r in rows.iter().rev() {
            assert_eq!(grid_point(&spec, [r.x1, r.x2]), *r);
        }
    }
}
