use crate::distributions::DistributionSpec;
use crate::error::{Error, Result};

/// A strictly increasing grid `x_1 < ... < x_N` with `N >= 2`. When tied to
/// a law, `x_1 = a` and `x_N = b`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualGrid {
    points: Vec<f64>,
}

impl DualGrid {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidGrid(format!("need at least two points, got {}", points.len())));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidGrid("grid points must be finite".into()));
        }
        for (i, w) in points.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err(Error::InvalidGrid(format!(
                    "points {} and {} not strictly increasing ({} >= {})",
                    i + 1,
                    i + 2,
                    w[0],
                    w[1]
                )));
            }
        }
        Ok(Self { points })
    }

    /// Grid over the support of `dist`. Endpoints within `1e-12 (b - a)` of
    /// the support are snapped onto it; anything further is rejected.
    pub fn for_dist(dist: &DistributionSpec, mut points: Vec<f64>) -> Result<Self> {
        let tol = 1e-12 * dist.len();
        let (first, last) = match (points.first(), points.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return Err(Error::InvalidGrid("empty grid".into())),
        };
        if (first - dist.a()).abs() > tol || (last - dist.b()).abs() > tol {
            return Err(Error::InvalidGrid(format!(
                "grid must start at a = {} and end at b = {}, got {first} .. {last}",
                dist.a(),
                dist.b()
            )));
        }
        points[0] = dist.a();
        let n = points.len();
        points[n - 1] = dist.b();
        Self::new(points)
    }

    /// `x_i = a + (i - 1)(b - a)/(N - 1)`.
    pub fn equidistant(a: f64, b: f64, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGrid(format!("need at least two points, got {n}")));
        }
        let m = (n - 1) as f64;
        let mut pts: Vec<f64> = (0..n).map(|i| a + (b - a) * (i as f64 / m)).collect();
        pts[n - 1] = b;
        Self::new(pts)
    }

    /// Grid `{a, interior..., b}`.
    pub fn from_interior(a: f64, interior: &[f64], b: f64) -> Result<Self> {
        let mut pts = Vec::with_capacity(interior.len() + 2);
        pts.push(a);
        pts.extend_from_slice(interior);
        pts.push(b);
        Self::new(pts)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn a(&self) -> f64 {
        self.points[0]
    }

    pub fn b(&self) -> f64 {
        self.points[self.points.len() - 1]
    }

    pub fn interior(&self) -> &[f64] {
        &self.points[1..self.points.len() - 1]
    }

    /// Cell widths `Delta x_i = x_i - x_{i-1}`, `i = 2..N`.
    pub fn widths(&self) -> Vec<f64> {
        self.points.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Index `i` (0-based) with `x_i <= xi < x_{i+1}`, clamped to the last
    /// cell at `xi = b`.
    pub fn cell_index(&self, xi: f64) -> usize {
        let k = self.points.partition_point(|&p| p <= xi);
        k.saturating_sub(1).min(self.points.len() - 2)
    }
}
