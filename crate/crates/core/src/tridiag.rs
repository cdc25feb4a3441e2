//! Tridiagonal matrices: symmetric ones for Hessians, general ones for
//! Jacobians of the Lloyd map and their products.

use crate::error::{Error, Result};

/// Symmetric tridiagonal matrix stored as its diagonal and first
/// off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagSym {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl TridiagSym {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::Domain(format!(
                "tridiagonal shape mismatch: {} diagonal and {} off-diagonal entries",
                diag.len(),
                off.len()
            )));
        }
        Ok(Self { diag, off })
    }

    /// Constant-diagonal matrix with `2a` on the diagonal and `b` beside it.
    pub fn toeplitz(a: f64, b: f64, n: usize) -> Self {
        Self { diag: vec![2.0 * a; n], off: vec![b; n.saturating_sub(1)] }
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    pub fn scale(&mut self, s: f64) {
        self.diag.iter_mut().chain(self.off.iter_mut()).for_each(|v| *v *= s);
    }

    /// `Lambda_i = sum_j m_ij`.
    pub fn row_sums(&self) -> Vec<f64> {
        let n = self.size();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i];
                if i > 0 {
                    s += self.off[i - 1];
                }
                if i + 1 < n {
                    s += self.off[i];
                }
                s
            })
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        Tridiag::from(self.clone()).to_dense()
    }
}

/// General tridiagonal matrix: `lower[i] = m[i+1][i]`, `upper[i] = m[i][i+1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiag {
    pub lower: Vec<f64>,
    pub diag: Vec<f64>,
    pub upper: Vec<f64>,
}

impl From<TridiagSym> for Tridiag {
    fn from(m: TridiagSym) -> Self {
        Self { lower: m.off.clone(), diag: m.diag, upper: m.off }
    }
}

impl Tridiag {
    pub fn new(lower: Vec<f64>, diag: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        let n = diag.len();
        if n == 0 || lower.len() + 1 != n || upper.len() + 1 != n {
            return Err(Error::Domain("tridiagonal shape mismatch".into()));
        }
        Ok(Self { lower, diag, upper })
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    /// Entry `(i, j)`, zero off the three bands.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i == j {
            self.diag[i]
        } else if j == i + 1 {
            self.upper[i]
        } else if i == j + 1 {
            self.lower[j]
        } else {
            0.0
        }
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.size())
            .map(|i| {
                let mut s = self.diag[i];
                if i > 0 {
                    s += self.lower[i - 1];
                }
                if i < self.upper.len() {
                    s += self.upper[i];
                }
                s
            })
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        let n = self.size();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.lower[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    s += self.upper[i] * v[i + 1];
                }
                s
            })
            .collect()
    }
}

/// Dense product `m_k ... m_2 m_1` (the last matrix acts last).
pub fn product(matrices: &[Tridiag]) -> Vec<Vec<f64>> {
    let n = matrices.first().map_or(0, Tridiag::size);
    let mut acc: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| f64::from(u8::from(i == j))).collect()).collect();
    for m in matrices {
        let mut next = vec![vec![0.0; n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let lo = i.saturating_sub(1);
                let hi = (i + 1).min(n - 1);
                *cell = (lo..=hi).map(|k| m.get(i, k) * acc[k][j]).sum();
            }
        }
        acc = next;
    }
    acc
}

/// Maximum absolute row sum.
pub fn inf_norm(m: &[Vec<f64>]) -> f64 {
    m.iter().map(|row| row.iter().map(|v| v.abs()).sum::<f64>()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_sums_and_dense_layout() {
        let m = Tridiag::new(vec![1.0, 2.0], vec![0.0, 0.0, 0.0], vec![3.0, 4.0]).unwrap();
        assert_eq!(m.to_dense(), vec![vec![0.0, 3.0, 0.0], vec![1.0, 0.0, 4.0], vec![0.0, 2.0, 0.0]]);
        assert_eq!(m.row_sums(), vec![3.0, 5.0, 2.0]);
        assert_eq!(m.mul_vec(&[1.0, 1.0, 1.0]), vec![3.0, 5.0, 2.0]);
    }

    #[test]
    fn product_order_and_norm() {
        let a = Tridiag::new(vec![0.5], vec![0.0, 0.0], vec![0.5]).unwrap();
        let b = Tridiag::new(vec![1.0], vec![1.0, 1.0], vec![0.0]).unwrap();
        // b * a
        let p = product(&[a.clone(), b.clone()]);
        assert_eq!(p, vec![vec![0.0, 0.5], vec![0.5, 0.5]]);
        assert_eq!(inf_norm(&p), 1.0);
        assert_eq!(inf_norm(&product(&[a])), 0.5);
    }

    #[test]
    fn shape_checks() {
        assert!(TridiagSym::new(vec![1.0, 2.0], vec![]).is_err());
        assert!(TridiagSym::new(vec![], vec![]).is_err());
        let t = TridiagSym::toeplitz(1.0, -1.0, 3);
        assert_eq!(t.row_sums(), vec![1.0, 0.0, 1.0]);
    }
}
