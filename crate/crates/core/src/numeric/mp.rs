//! Pole-cancellation probe in multiprecision. Near the origin the subtracted
//! pair is a small difference of terms of size `r^{-(m+1)}` and more, which
//! `f64` cannot resolve at `m = 5`, `r = 1e-4`.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use crate::axial::{AxialExpr, Trig};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::fueter::{entire_part_pair, AxialPair};

/// Working precision of the probe in bits.
pub const PROBE_PRECISION: usize = 256;

const RM: RoundingMode = RoundingMode::ToEven;

/// Values of an axial pair along `x0 = 0`, `x̲ = r e1` at decreasing radii.
#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub m: usize,
    pub radii: Vec<f64>,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    /// `sqrt(A^2 + B^2)`, the norm of `A + ω B`.
    pub norms: Vec<f64>,
}

impl ProbeReport {
    /// No step to a smaller radius more than doubles the value. A pole of
    /// order `m` multiplies it by about `10^m` per decade.
    pub fn bounded(&self) -> bool {
        self.norms.iter().all(|v| v.is_finite())
            && self.norms.windows(2).all(|w| w[1] <= 2.0 * w[0] + 1e-12)
    }
}

struct Mp {
    cc: Consts,
}

impl Mp {
    fn new() -> Result<Self> {
        let cc = Consts::new()
            .map_err(|e| Error::Domain(format!("multiprecision setup failed: {e:?}")))?;
        Ok(Mp { cc })
    }

    fn rational(&mut self, q: &Rational) -> BigFloat {
        let p = PROBE_PRECISION;
        let n = BigFloat::parse(&q.numer().to_string(), Radix::Dec, p, RM, &mut self.cc);
        let d = BigFloat::parse(&q.denom().to_string(), Radix::Dec, p, RM, &mut self.cc);
        n.div(&d, p, RM)
    }

    fn eval(&mut self, e: &AxialExpr, x0: f64, r: f64) -> BigFloat {
        let p = PROBE_PRECISION;
        let x0 = BigFloat::from_f64(x0, p);
        let r = BigFloat::from_f64(r, p);
        let q = x0.mul(&x0, p, RM).add(&r.mul(&r, p, RM), p, RM);
        let half = BigFloat::from_f64(0.5, p);
        let ex = x0
            .mul(&x0, p, RM)
            .sub(&r.mul(&r, p, RM), p, RM)
            .mul(&half, p, RM)
            .exp(p, RM, &mut self.cc);
        let t = x0.mul(&r, p, RM);
        let (c, s) = (t.cos(p, RM, &mut self.cc), t.sin(p, RM, &mut self.cc));
        let mut acc = BigFloat::from_f64(0.0, p);
        for term in e.terms() {
            let k = term.key;
            let mut v = self.rational(&term.coeff);
            v = v.mul(&x0.powi(k.x0_pow as usize, p, RM), p, RM);
            let rb = r.powi(k.r_pow.unsigned_abs() as usize, p, RM);
            v = if k.r_pow >= 0 {
                v.mul(&rb, p, RM)
            } else {
                v.div(&rb, p, RM)
            };
            v = v.div(&q.powi(k.q_pow as usize, p, RM), p, RM);
            if k.exp {
                v = v.mul(&ex, p, RM);
            }
            match k.trig {
                Trig::None => {}
                Trig::Cos => v = v.mul(&c, p, RM),
                Trig::Sin => v = v.mul(&s, p, RM),
            }
            acc = acc.add(&v, p, RM);
        }
        acc
    }
}

fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    x.to_string().parse().unwrap_or(f64::NAN)
}

/// Evaluates `p` at `x0 = 0`, `x̲ = r e1` for each radius.
pub fn pole_probe(p: &AxialPair, radii: &[f64]) -> Result<ProbeReport> {
    if let Some(r) = radii.iter().find(|r| !(**r > 0.0)) {
        return Err(Error::Domain(format!(
            "probe radii must be positive, got {r}"
        )));
    }
    let mut mp = Mp::new()?;
    let prec = PROBE_PRECISION;
    let (mut a, mut b, mut norms) = (Vec::new(), Vec::new(), Vec::new());
    for &r in radii {
        let va = mp.eval(&p.a, 0.0, r);
        let vb = mp.eval(&p.b, 0.0, r);
        let n = va
            .mul(&va, prec, RM)
            .add(&vb.mul(&vb, prec, RM), prec, RM)
            .sqrt(prec, RM);
        a.push(to_f64(&va));
        b.push(to_f64(&vb));
        norms.push(to_f64(&n));
    }
    Ok(ProbeReport {
        m: p.m,
        radii: radii.to_vec(),
        a,
        b,
        norms,
    })
}

/// [`pole_probe`] on `M = E - x̄/|x|^{m+1}` for the normalized Gaussian
/// fundamental solution `E`.
pub fn entire_part_probe(m: usize, radii: &[f64]) -> Result<ProbeReport> {
    pole_probe(&entire_part_pair(m)?, radii)
}
