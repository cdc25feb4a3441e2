use super::{distortion, DualGrid};
use crate::distributions::DistributionSpec;
use crate::error::{Error, Result};

/// Exhaustive minimization of the distortion for `N` in `{3, 4}`.
///
/// Interior points range over the lattice `a + k (b - a)/resolution`. The
/// best lattice grid (first in lexicographic order on ties) is refined by
/// coordinate descent on a lattice ten times finer.
pub fn brute_force_optimal(dist: &DistributionSpec, n: usize, r: f64, resolution: usize) -> Result<DualGrid> {
    if !(3..=4).contains(&n) {
        return Err(Error::Domain(format!("brute force only handles N = 3 or 4, got {n}")));
    }
    if resolution < n {
        return Err(Error::Domain(format!("resolution {resolution} too coarse for N = {n}")));
    }
    let (a, b) = (dist.a(), dist.b());
    let eval = |idx: &[usize], steps: usize| -> Result<f64> {
        let interior: Vec<f64> = idx.iter().map(|&k| a + (b - a) * (k as f64 / steps as f64)).collect();
        let g = DualGrid::from_interior(a, &interior, b)?;
        Ok(distortion(&g, dist, r)?.lr)
    };

    let mut best: Option<(f64, Vec<usize>)> = None;
    let mut consider = |idx: Vec<usize>| -> Result<()> {
        let v = eval(&idx, resolution)?;
        if best.as_ref().is_none_or(|(bv, _)| v < *bv) {
            best = Some((v, idx));
        }
        Ok(())
    };
    if n == 3 {
        for k in 1..resolution {
            consider(vec![k])?;
        }
    } else {
        for k1 in 1..resolution {
            for k2 in k1 + 1..resolution {
                consider(vec![k1, k2])?;
            }
        }
    }
    let (mut value, coarse) = best.expect("lattice is nonempty");

    let fine = 10 * resolution;
    let mut idx: Vec<usize> = coarse.iter().map(|k| 10 * k).collect();
    loop {
        let mut improved = false;
        for c in 0..idx.len() {
            for dir in [-1i64, 1] {
                loop {
                    let cand = idx[c] as i64 + dir;
                    let lower = if c == 0 { 0 } else { idx[c - 1] as i64 };
                    let upper = if c + 1 == idx.len() { fine as i64 } else { idx[c + 1] as i64 };
                    if cand <= lower || cand >= upper {
                        break;
                    }
                    let mut trial = idx.clone();
                    trial[c] = cand as usize;
                    let v = eval(&trial, fine)?;
                    if v < value {
                        value = v;
                        idx = trial;
                        improved = true;
                    } else {
                        break;
                    }
                }
            }
        }
        if !improved {
            break;
        }
    }
    let interior: Vec<f64> = idx.iter().map(|&k| a + (b - a) * (k as f64 / fine as f64)).collect();
    DualGrid::from_interior(a, &interior, b)
}
