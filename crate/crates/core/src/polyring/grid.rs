use serde::Serialize;

use super::BiPoly;
use crate::error::{Error, Result};

/// One lattice sample of a polynomial surface.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridPoint {
    pub x: f64,
    pub y: f64,
    pub value: f64,
}

fn lattice(lo: f64, hi: f64, steps: usize, axis: &str) -> Result<Vec<f64>> {
    if !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidRange(format!("{axis} bounds must be finite, got {lo}..{hi}")));
    }
    Ok((0..steps)
        .map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64)
        .collect())
}

/// Samples `p` on a `steps x steps` lattice over `x_range x y_range`.
/// Rows are ordered by x, then y.
pub fn eval_grid(
    p: &BiPoly,
    x_range: (f64, f64),
    y_range: (f64, f64),
    steps: usize,
) -> Result<Vec<GridPoint>> {
    if steps < 2 {
        return Err(Error::InvalidRange(format!("steps must be >= 2, got {steps}")));
    }
    let xs = lattice(x_range.0, x_range.1, steps, "x")?;
    let ys = lattice(y_range.0, y_range.1, steps, "y")?;
    let mut out = Vec::with_capacity(steps * steps);
    for &x in &xs {
        for &y in &ys {
            out.push(GridPoint { x, y, value: p.eval(x, y) });
        }
    }
    Ok(out)
}

/// CSV rendering with header `x,y,value`, LF line endings.
pub fn grid_to_csv(points: &[GridPoint]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(["x", "y", "value"]).expect("in-memory write");
    for pt in points {
        w.serialize((pt.x, pt.y, pt.value)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::RadScalar;

    #[test]
    fn xy_on_unit_square() {
        let p = BiPoly::monomial(RadScalar::one(), 1, 1);
        let g = eval_grid(&p, (0.0, 1.0), (0.0, 1.0), 2).unwrap();
        let vals: Vec<f64> = g.iter().map(|pt| pt.value).collect();
        assert_eq!(vals, vec![0.0, 0.0, 0.0, 1.0]);
        assert_eq!((g[1].x, g[1].y), (0.0, 1.0));
    }

    #[test]
    fn vphy_at_one() {
        let p = BiPoly::monomial(RadScalar::integer(9), 3, 3);
        let g = eval_grid(&p, (1.0, 2.0), (1.0, 2.0), 3).unwrap();
        assert_eq!(g[0].value, 9.0);
    }

    #[test]
    fn constant_everywhere() {
        let p = BiPoly::monomial(RadScalar::one(), 0, 0);
        let g = eval_grid(&p, (-3.0, 3.0), (-1.0, 5.0), 4).unwrap();
        assert!(g.iter().all(|pt| pt.value == 1.0));
    }

    #[test]
    fn bad_ranges() {
        let p = BiPoly::zero();
        assert!(eval_grid(&p, (0.0, f64::INFINITY), (0.0, 1.0), 3).is_err());
        assert!(eval_grid(&p, (0.0, 1.0), (f64::NAN, 1.0), 3).is_err());
        assert!(eval_grid(&p, (0.0, 1.0), (0.0, 1.0), 1).is_err());
    }

    #[test]
    fn csv_shape() {
        let p = BiPoly::monomial(RadScalar::one(), 1, 1);
        let g = eval_grid(&p, (0.0, 1.0), (0.0, 1.0), 2).unwrap();
        assert_eq!(grid_to_csv(&g), "x,y,value\n0.0,0.0,0.0\n0.0,1.0,0.0\n1.0,0.0,0.0\n1.0,1.0,1.0\n");
    }
}
