//! `f64` evaluation of axial pairs, the Gaussian CK series, finite-difference
//! monogenicity checks, decay scans and sampling.

mod mp;
mod sample;
mod scan;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::axial::CompiledExpr;
use crate::clifford::{check_dim, BladeMask, Multivector, NumMultivector};
use crate::error::{Error, Result};
use crate::exact::{factorial, int_rat, to_f64, Rational};
use crate::fueter::AxialPair;
use crate::poly::{coeff_c, hermite_radial_rec, CliffPoly};

pub use mp::{entire_part_probe, pole_probe, ProbeReport, PROBE_PRECISION};
pub use sample::{read_csv, sample, write_csv, SampleRow, SampleTarget};
pub use scan::{decay_scan, decay_scan_grid, default_threads, DecayReport, GROWTH_RATIO};

/// A point `x0 + x̲` of `R^{m+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalPoint {
    pub x0: f64,
    pub xs: Vec<f64>,
}

impl EvalPoint {
    pub fn new(x0: f64, xs: Vec<f64>) -> Self {
        EvalPoint { x0, xs }
    }

    /// `x0 + r e1` in dimension `m`.
    pub fn on_ray(x0: f64, r: f64, m: usize) -> Self {
        let mut xs = vec![0.0; m];
        xs[0] = r;
        EvalPoint { x0, xs }
    }

    pub fn dim(&self) -> usize {
        self.xs.len()
    }

    pub fn r(&self) -> f64 {
        self.xs.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// `|x| = sqrt(x0^2 + r^2)`.
    pub fn norm(&self) -> f64 {
        (self.x0 * self.x0 + self.xs.iter().map(|x| x * x).sum::<f64>()).sqrt()
    }

    pub fn omega(&self) -> Result<NumMultivector> {
        let r = self.r();
        if r <= 0.0 {
            return Err(Error::Domain(
                "ω = x̲/r is undefined at x̲ = 0; use the restriction formula".into(),
            ));
        }
        Ok(NumMultivector::vector(&self.xs).scale(&(1.0 / r)))
    }

    fn shifted(&self, coord: usize, h: f64) -> Self {
        let mut p = self.clone();
        if coord == 0 {
            p.x0 += h;
        } else {
            p.xs[coord - 1] += h;
        }
        p
    }
}

/// An [`AxialPair`] frozen to `f64` for repeated evaluation.
#[derive(Clone, Debug)]
pub struct CompiledPair {
    m: usize,
    a: CompiledExpr,
    b: CompiledExpr,
    pk: Option<CliffPoly>,
}

impl CompiledPair {
    pub fn new(p: &AxialPair) -> Self {
        let pk = (p.pk != CliffPoly::one(p.m)).then(|| p.pk.clone());
        CompiledPair {
            m: p.m,
            a: p.a.compile(),
            b: p.b.compile(),
            pk,
        }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn eval(&self, pt: &EvalPoint) -> Result<NumMultivector> {
        if pt.dim() != self.m {
            return Err(Error::DimensionMismatch {
                left: self.m,
                right: pt.dim(),
            });
        }
        let omega = pt.omega()?;
        let r = pt.r();
        let a = self.a.eval(pt.x0, r)?;
        let b = self.b.eval(pt.x0, r)?;
        let mut v = omega.scale(&b);
        v.add_term(BladeMask::SCALAR, a);
        match &self.pk {
            None => Ok(v),
            Some(pk) => v.gp(&pk.eval(pt.x0, &pt.xs)?),
        }
    }
}

/// `(A + ω B) P_k(x̲)` at `pt`; refuses points on the axis.
pub fn eval_axial(p: &AxialPair, pt: &EvalPoint) -> Result<NumMultivector> {
    CompiledPair::new(p).eval(pt)
}

/// Default truncation of the Gaussian series.
pub const DEFAULT_SERIES_ORDER: u32 = 60;
/// Relative size below which the first omitted term counts as negligible.
pub const SERIES_TAIL_TOL: f64 = 1e-14;

/// `exp(-r^2/2) Σ_{n ≤ N} x0^n/n! H_n(x̲)` with `H_n` held in the `x̲^j`
/// basis, so `H_n(x̲) = S_n(r) + V_n(r) x̲`.
#[derive(Clone, Debug)]
pub struct GaussSeries {
    m: usize,
    order: u32,
    // coefficients h_j / n! of x̲^j, rows 0..=order+1
    rows: Vec<Vec<f64>>,
}

/// A series value together with the size of the first omitted term.
#[derive(Clone, Debug)]
pub struct SeriesValue {
    pub value: NumMultivector,
    pub next_term: f64,
}

impl SeriesValue {
    pub fn tail_ok(&self) -> bool {
        self.next_term < SERIES_TAIL_TOL * self.value.norm()
    }
}

impl GaussSeries {
    pub fn new(m: usize, order: u32) -> Result<Self> {
        check_dim(m)?;
        let rows = hermite_radial_rec(order + 1, m)
            .into_iter()
            .enumerate()
            .map(|(n, row)| {
                let nf = int_rat(factorial(n as u32));
                row.into_iter()
                    .map(|h| to_f64(&(int_rat(h) / &nf)))
                    .collect()
            })
            .collect();
        Ok(GaussSeries { m, order, rows })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    fn term(&self, n: usize, x0: f64, r2: f64) -> (f64, f64) {
        // x̲^{2s} = (-r^2)^s, x̲^{2s+1} = (-r^2)^s x̲
        let (mut s, mut v) = (0.0, 0.0);
        let mut pow = 1.0;
        for (j, h) in self.rows[n].iter().enumerate() {
            if j % 2 == 0 {
                if j > 0 {
                    pow *= -r2;
                }
                s += h * pow;
            } else {
                v += h * pow;
            }
        }
        let x0n = x0.powi(n as i32);
        (s * x0n, v * x0n)
    }

    pub fn eval(&self, pt: &EvalPoint) -> Result<SeriesValue> {
        if pt.dim() != self.m {
            return Err(Error::DimensionMismatch {
                left: self.m,
                right: pt.dim(),
            });
        }
        let r2 = pt.xs.iter().map(|x| x * x).sum::<f64>();
        let (mut s, mut v) = (0.0, 0.0);
        for n in 0..=self.order as usize {
            let (ds, dv) = self.term(n, pt.x0, r2);
            s += ds;
            v += dv;
        }
        let damp = (-r2 / 2.0).exp();
        let (ns, nv) = self.term(self.order as usize + 1, pt.x0, r2);
        let mut value = NumMultivector::vector(&pt.xs).scale(&(v * damp));
        value.add_term(BladeMask::SCALAR, s * damp);
        let next_term = damp * (ns * ns + nv * nv * r2).sqrt();
        Ok(SeriesValue { value, next_term })
    }
}

/// The CK-extension of `exp(-|x̲|^2/2)` by its series, truncated at `order`.
/// Valid on the axis too.
pub fn ck_gauss_series(pt: &EvalPoint, m: usize, order: u32) -> Result<NumMultivector> {
    Ok(GaussSeries::new(m, order)?.eval(pt)?.value)
}

fn restriction_factors(m: usize) -> Result<Vec<Rational>> {
    check_dim(m)?;
    if m % 2 == 0 {
        return Err(Error::EvenDimension(m));
    }
    // Π_{ν=1}^{n} (m - (2ν-1)) / (2n)!, n = 0..=(m-1)/2
    let mut out = vec![Rational::one()];
    let mut prod = Rational::one();
    for n in 1..=(m as i64 - 1) / 2 {
        prod *= Rational::from_integer((m as i64 - (2 * n - 1)).into());
        out.push(&prod / int_rat(factorial(2 * n as u32)));
    }
    Ok(out)
}

/// The CK-extended Gaussian on the axis `x̲ = 0`, odd `m`.
pub fn ck_gauss_restriction(x0: f64, m: usize) -> Result<f64> {
    let factors = restriction_factors(m)?;
    let x2 = x0 * x0;
    let poly: f64 = factors
        .iter()
        .enumerate()
        .map(|(n, c)| to_f64(c) * x2.powi(n as i32))
        .sum();
    Ok((x2 / 2.0).exp() * poly)
}

/// Exact Taylor coefficients `t_j` of [`ck_gauss_restriction`] in `x0^{2j}`,
/// `j = 0..=terms-1`.
pub fn restriction_taylor(m: usize, terms: usize) -> Result<Vec<Rational>> {
    let factors = restriction_factors(m)?;
    let mut out = vec![Rational::zero(); terms];
    for (j, slot) in out.iter_mut().enumerate() {
        for (n, c) in factors.iter().enumerate().take(j + 1) {
            let i = (j - n) as u32;
            // exp(t/2) = Σ t^i / (2^i i!)
            let e = Rational::new(1.into(), num_bigint::BigInt::from(2).pow(i) * factorial(i));
            *slot += c * e;
        }
    }
    Ok(out)
}

/// `c_j(j) / (2j)!`, the axis coefficients predicted by the series.
pub fn restriction_taylor_from_series(m: usize, terms: usize) -> Result<Vec<Rational>> {
    (0..terms as u32)
        .map(|j| Ok(int_rat(coeff_c(j, j, m)?) / int_rat(factorial(2 * j))))
        .collect()
}

/// Which side the generators act from in the Cauchy-Riemann operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdSide {
    Left,
    Right,
}

/// Central-difference settings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FdConfig {
    pub h: f64,
    /// Scale `h` by `max(1, |x|)` at each point.
    pub relative: bool,
}

impl Default for FdConfig {
    fn default() -> Self {
        FdConfig {
            h: 1e-5,
            relative: true,
        }
    }
}

impl FdConfig {
    pub fn absolute(h: f64) -> Result<Self> {
        let cfg = FdConfig { h, relative: false };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.h > 0.0 && self.h.is_finite() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "finite-difference step must be positive, got {}",
                self.h
            )))
        }
    }

    pub fn step_at(&self, pt: &EvalPoint) -> f64 {
        if self.relative {
            self.h * pt.norm().max(1.0)
        } else {
            self.h
        }
    }
}

/// Tolerance on finite-difference residuals at the default step.
pub const FD_TOL: f64 = 1e-6;

/// `|∂_x F|` by central differences; the left variant multiplies the
/// `x_j`-difference by `e_j` from the left, the right variant from the right.
pub fn fd_cr_residual<F>(f: F, pt: &EvalPoint, cfg: &FdConfig, side: FdSide) -> Result<f64>
where
    F: Fn(&EvalPoint) -> Result<NumMultivector>,
{
    cfg.validate()?;
    let m = pt.dim();
    let h = cfg.step_at(pt);
    let diff = |coord: usize| -> Result<NumMultivector> {
        let plus = f(&pt.shifted(coord, h))?;
        let minus = f(&pt.shifted(coord, -h))?;
        Ok((&plus - &minus).scale(&(0.5 / h)))
    };
    let mut acc = diff(0)?;
    for j in 1..=m {
        let e = Multivector::generator(m, j);
        let d = diff(j)?;
        let term = match side {
            FdSide::Left => e.gp(&d)?,
            FdSide::Right => d.gp(&e)?,
        };
        acc = acc.try_add(&term)?;
    }
    Ok(acc.norm())
}

/// Residual at `h` divided by the residual at `h/2`; close to 4 for a
/// second-order scheme on a monogenic input.
pub fn fd_convergence_ratio<F>(f: F, pt: &EvalPoint, h: f64, side: FdSide) -> Result<f64>
where
    F: Fn(&EvalPoint) -> Result<NumMultivector>,
{
    let coarse = fd_cr_residual(&f, pt, &FdConfig::absolute(h)?, side)?;
    let fine = fd_cr_residual(&f, pt, &FdConfig::absolute(h / 2.0)?, side)?;
    Ok(coarse / fine)
}

/// An inclusive uniform grid `lo:hi:count`; a bare number is a single point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridRange {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl GridRange {
    pub fn new(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::EmptyGrid);
        }
        if !lo.is_finite() || !hi.is_finite() || hi < lo {
            return Err(Error::Parse(format!(
                "grid bounds must be finite with lo ≤ hi, got {lo}:{hi}"
            )));
        }
        if count == 1 && lo != hi {
            return Err(Error::Parse(format!(
                "a one-point grid needs lo = hi, got {lo}:{hi}"
            )));
        }
        Ok(GridRange { lo, hi, count })
    }

    pub fn point(x: f64) -> Self {
        GridRange {
            lo: x,
            hi: x,
            count: 1,
        }
    }

    pub fn value(&self, i: usize) -> f64 {
        if self.count == 1 {
            return self.lo;
        }
        if i + 1 == self.count {
            return self.hi;
        }
        self.lo + (self.hi - self.lo) * i as f64 / (self.count - 1) as f64
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.value(i)).collect()
    }

    /// The grid with every gap halved, which keeps the old nodes.
    pub fn refined(&self) -> Self {
        GridRange {
            count: 2 * self.count - 1,
            ..*self
        }
    }
}

impl FromStr for GridRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `lo:hi:count` or a number, got `{s}`"));
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [x] => {
                let x: f64 = x.trim().parse().map_err(|_| bad())?;
                GridRange::new(x, x, 1)
            }
            [lo, hi, n] => {
                let lo = lo.trim().parse().map_err(|_| bad())?;
                let hi = hi.trim().parse().map_err(|_| bad())?;
                let n = n.trim().parse().map_err(|_| bad())?;
                GridRange::new(lo, hi, n)
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GridRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.count == 1 {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}:{}:{}", self.lo, self.hi, self.count)
        }
    }
}

/// `|a - b| / max(|b|, floor)`.
pub fn relative_error(a: &NumMultivector, b: &NumMultivector, floor: f64) -> f64 {
    a.max_abs_diff(b) / b.norm().max(floor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::fueter::{fueter, gaussian_ck_pair, gaussian_fundamental_pair, seed, SeedKind};

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol * b.abs().max(1.0), "{a} vs {b}");
    }

    #[test]
    fn axial_evaluation() {
        let g = gaussian_ck_pair(3).unwrap();
        let v = eval_axial(&g, &EvalPoint::new(0.0, vec![0.3, -1.2, 0.4])).unwrap();
        let r2: f64 = 0.09 + 1.44 + 0.16;
        assert_close(v.scalar_part(), (-r2 / 2.0).exp(), 1e-14);
        assert!(v.max_abs_diff(&NumMultivector::scalar(3, (-r2 / 2.0).exp())) < 1e-14);

        let inv = fueter(&seed(SeedKind::InvZ).unwrap(), 0, 3, &CliffPoly::one(3)).unwrap();
        let v = eval_axial(
            &inv.scale(&crate::exact::ratio(-1, 4)),
            &EvalPoint::on_ray(1.0, 1.0, 3),
        )
        .unwrap();
        assert!(v.max_abs_diff(&NumMultivector::parse(3, "0.25 - 0.25*e1").unwrap()) < 1e-15);

        assert!(matches!(
            eval_axial(&g, &EvalPoint::new(1.0, vec![0.0; 3])),
            Err(Error::Domain(_))
        ));
        assert!(eval_axial(&g, &EvalPoint::on_ray(1.0, 1.0, 5)).is_err());
    }

    #[test]
    fn series_examples() {
        let v = ck_gauss_series(&EvalPoint::new(0.0, vec![0.5, 0.5, 0.0]), 3, 60).unwrap();
        assert_close(v.scalar_part(), (-0.25f64).exp(), 1e-15);
        assert_eq!(v.len(), 1);
        let v = ck_gauss_series(&EvalPoint::new(1.0, vec![0.0; 3]), 3, 40).unwrap();
        assert_close(v.scalar_part(), 0.5f64.exp() * 2.0, 1e-13);

        let pt = EvalPoint::on_ray(0.5, 1.0, 3);
        let s = GaussSeries::new(3, 60).unwrap().eval(&pt).unwrap();
        assert!(s.tail_ok());
        let c = eval_axial(&gaussian_ck_pair(3).unwrap(), &pt).unwrap();
        assert!(relative_error(&s.value, &c, 1e-300) < 1e-10);
    }

    #[test]
    fn restriction() {
        assert_close(
            ck_gauss_restriction(0.7, 3).unwrap(),
            (0.245f64).exp() * 1.49,
            1e-15,
        );
        assert_eq!(ck_gauss_restriction(0.0, 7).unwrap(), 1.0);
        let expect = 0.5f64.exp() * (1.0 + 2.0 + 8.0 / 24.0);
        assert_close(ck_gauss_restriction(1.0, 5).unwrap(), expect, 1e-15);
        assert!(matches!(
            ck_gauss_restriction(1.0, 4),
            Err(Error::EvenDimension(4))
        ));
        assert_eq!(
            restriction_taylor(3, 12).unwrap(),
            restriction_taylor_from_series(3, 12).unwrap()
        );
        assert_eq!(restriction_taylor(3, 2).unwrap(), vec![rat(1), ratio(3, 2)]);
    }

    #[test]
    fn finite_differences() {
        let g = gaussian_ck_pair(3).unwrap();
        let pt = EvalPoint::new(0.3, vec![0.4, -0.7, 0.5]);
        let f = |p: &EvalPoint| eval_axial(&g, p);
        assert!(fd_cr_residual(f, &pt, &FdConfig::default(), FdSide::Left).unwrap() < FD_TOL);
        let x0 = |p: &EvalPoint| Ok(NumMultivector::scalar(3, p.x0));
        assert_close(
            fd_cr_residual(x0, &pt, &FdConfig::default(), FdSide::Left).unwrap(),
            1.0,
            1e-8,
        );
        let e = gaussian_fundamental_pair(3).unwrap();
        let f = |p: &EvalPoint| eval_axial(&e, p);
        let ratio = fd_convergence_ratio(f, &pt, 1e-3, FdSide::Right).unwrap();
        assert!((3.5..=4.5).contains(&ratio), "{ratio}");
        assert!(FdConfig::absolute(0.0).is_err());
    }

    #[test]
    fn grid_ranges() {
        let g: GridRange = "0.1:3:100".parse().unwrap();
        assert_eq!(g.values().len(), 100);
        assert_eq!(g.value(0), 0.1);
        assert_eq!(g.value(99), 3.0);
        let g: GridRange = "0".parse().unwrap();
        assert_eq!(g.values(), vec![0.0]);
        assert!(matches!(
            "1:2:0".parse::<GridRange>(),
            Err(Error::EmptyGrid)
        ));
        assert!("1:2".parse::<GridRange>().is_err());
        assert!("2:1:5".parse::<GridRange>().is_err());
        let g: GridRange = "-2:2:41".parse().unwrap();
        assert_eq!(g.refined().count, 81);
        assert_eq!(g.refined().value(2), g.value(1));
        assert_eq!(g.to_string(), "-2:2:41");
    }
}
