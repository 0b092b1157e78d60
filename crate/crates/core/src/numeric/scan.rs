use std::num::NonZeroUsize;
use std::thread;

use serde::{Deserialize, Serialize};

use super::{CompiledPair, EvalPoint, GridRange};
use crate::error::{Error, Result};
use crate::fueter::AxialPair;

/// Edge ratio above which a scan is flagged as growing in `r`.
pub const GROWTH_RATIO: f64 = 10.0;

/// `sup |F(x)| exp(r^2/2)` over `|x0| ≤ K`, `Rmin ≤ r ≤ Rmax`, along `x̲ = r e1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecayReport {
    #[serde(rename = "K")]
    pub k_bound: f64,
    pub r_min: f64,
    pub r_max: f64,
    pub x0_count: usize,
    pub r_count: usize,
    pub sup_value: f64,
    pub argmax_x0: f64,
    pub argmax_r: f64,
    /// Column sup at `Rmax` over column sup at `Rmin`.
    pub growth_ratio: f64,
    pub grows: bool,
}

impl DecayReport {
    /// Finite sup with no growth toward `Rmax`.
    pub fn bounded(&self) -> bool {
        self.sup_value.is_finite() && !self.grows
    }
}

/// Worker count: `FUETER_LAB_THREADS` if set and positive, else the
/// available parallelism.
pub fn default_threads() -> usize {
    std::env::var("FUETER_LAB_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| {
            thread::available_parallelism()
                .map(NonZeroUsize::get)
                .unwrap_or(1)
        })
}

/// Scans `p` on a uniform `x0_count × r_count` grid over `|x0| ≤ K`,
/// `Rmin ≤ r ≤ Rmax` using up to `threads` workers.
pub fn decay_scan(
    p: &AxialPair,
    k_bound: f64,
    r_min: f64,
    r_max: f64,
    grid: (usize, usize),
    threads: usize,
) -> Result<DecayReport> {
    if !(k_bound > 0.0) {
        return Err(Error::Domain(format!("K must be positive, got {k_bound}")));
    }
    if !(0.0 < r_min && r_min < r_max) {
        return Err(Error::Domain(format!(
            "need 0 < Rmin < Rmax, got {r_min}, {r_max}"
        )));
    }
    if grid.0 == 0 || grid.1 == 0 {
        return Err(Error::EmptyGrid);
    }
    let xs = if grid.0 == 1 {
        GridRange::point(0.0)
    } else {
        GridRange::new(-k_bound, k_bound, grid.0)?
    };
    let rs = if grid.1 == 1 {
        GridRange::point(r_min)
    } else {
        GridRange::new(r_min, r_max, grid.1)?
    };
    decay_scan_grid(p, &xs, &rs, threads)
}

/// [`decay_scan`] over explicit grids. Columns are split across workers and
/// merged by max, ties going to the lowest grid index, so the result does
/// not depend on `threads`.
pub fn decay_scan_grid(
    p: &AxialPair,
    xs: &GridRange,
    rs: &GridRange,
    threads: usize,
) -> Result<DecayReport> {
    if !(rs.lo > 0.0) {
        return Err(Error::Domain(format!(
            "scan needs r > 0, got r from {}",
            rs.lo
        )));
    }
    let (xs, rs) = (*xs, *rs);
    let f = CompiledPair::new(p);
    let m = p.m;

    // (sup, argmax) over one r-column
    let column = |j: usize| -> Result<(f64, usize)> {
        let r = rs.value(j);
        let weight = (r * r / 2.0).exp();
        let mut best = (f64::NEG_INFINITY, 0);
        for i in 0..xs.count {
            let v = f.eval(&EvalPoint::on_ray(xs.value(i), r, m))?.norm() * weight;
            let v = if v.is_nan() { f64::INFINITY } else { v };
            if v > best.0 {
                best = (v, i);
            }
        }
        Ok(best)
    };

    let workers = threads.clamp(1, rs.count);
    let chunk = rs.count.div_ceil(workers);
    let columns: Vec<(f64, usize)> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let column = &column;
                s.spawn(move || {
                    let lo = w * chunk;
                    let hi = ((w + 1) * chunk).min(rs.count);
                    (lo..hi).map(column).collect::<Result<Vec<_>>>()
                })
            })
            .collect();
        let mut out = Vec::with_capacity(rs.count);
        for h in handles {
            out.extend(h.join().expect("scan worker panicked")?);
        }
        Ok::<_, Error>(out)
    })?;

    let mut best = (f64::NEG_INFINITY, 0, 0);
    for (j, &(v, i)) in columns.iter().enumerate() {
        if v > best.0 {
            best = (v, i, j);
        }
    }
    let first = columns[0].0;
    let last = columns[columns.len() - 1].0;
    let growth_ratio = if first > 0.0 {
        last / first
    } else {
        f64::INFINITY
    };
    Ok(DecayReport {
        k_bound: xs.lo.abs().max(xs.hi.abs()),
        r_min: rs.lo,
        r_max: rs.hi,
        x0_count: xs.count,
        r_count: rs.count,
        sup_value: best.0,
        argmax_x0: xs.value(best.1),
        argmax_r: rs.value(best.2),
        growth_ratio,
        grows: !(growth_ratio <= GROWTH_RATIO),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fueter::{fueter, gaussian_fundamental_pair, seed, SeedKind};
    use crate::poly::CliffPoly;

    #[test]
    fn gauss_fund_is_bounded_and_stable() {
        let p = gaussian_fundamental_pair(3).unwrap();
        let coarse = decay_scan(&p, 2.0, 3.0, 8.0, (41, 41), 2).unwrap();
        let fine = decay_scan(&p, 2.0, 3.0, 8.0, (81, 81), 3).unwrap();
        assert!(coarse.bounded(), "{coarse:?}");
        assert!((fine.sup_value - coarse.sup_value).abs() <= 0.05 * coarse.sup_value);
    }

    #[test]
    fn inverse_is_flagged() {
        let p = fueter(&seed(SeedKind::InvZ).unwrap(), 0, 3, &CliffPoly::one(3)).unwrap();
        let rep = decay_scan(&p, 2.0, 3.0, 8.0, (21, 21), 1).unwrap();
        assert!(rep.grows);
        assert!(!rep.bounded());
    }

    #[test]
    fn thread_count_does_not_matter() {
        let p = gaussian_fundamental_pair(5).unwrap();
        let a = decay_scan(&p, 1.0, 3.0, 4.0, (9, 13), 1).unwrap();
        let b = decay_scan(&p, 1.0, 3.0, 4.0, (9, 13), 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bad_arguments() {
        let p = gaussian_fundamental_pair(3).unwrap();
        assert!(matches!(
            decay_scan(&p, 1.0, 3.0, 4.0, (0, 5), 1),
            Err(Error::EmptyGrid)
        ));
        assert!(decay_scan(&p, 1.0, 4.0, 3.0, (5, 5), 1).is_err());
        assert!(decay_scan(&p, -1.0, 3.0, 4.0, (5, 5), 1).is_err());
    }
}
