//! Grid sampling and the CSV format: `x0, x1..xm, r`, one column per blade
//! (`scalar`, `e1`, `e2`, `e12`, ...) in mask order, then `|value|`.

use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use super::{CompiledPair, EvalPoint, GridRange};
use crate::clifford::{check_dim, BladeMask, NumMultivector};
use crate::error::{Error, Result};
use crate::fueter::{gaussian_ck_pair, gaussian_fundamental_pair, AxialPair};

/// What `sample` evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleTarget {
    /// The CK-extension of `exp(-|x̲|^2/2)`.
    CkGauss,
    /// The Gaussian fundamental solution normalized to `x̄/|x|^{m+1} + M`.
    GaussFund,
}

impl SampleTarget {
    pub const ALL: [SampleTarget; 2] = [SampleTarget::CkGauss, SampleTarget::GaussFund];

    pub fn pair(self, m: usize) -> Result<AxialPair> {
        match self {
            SampleTarget::CkGauss => gaussian_ck_pair(m),
            SampleTarget::GaussFund => gaussian_fundamental_pair(m),
        }
    }
}

impl FromStr for SampleTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ck-gauss" => Ok(SampleTarget::CkGauss),
            "gauss-fund" => Ok(SampleTarget::GaussFund),
            _ => Err(Error::Parse(format!("unknown sample target `{s}`"))),
        }
    }
}

impl fmt::Display for SampleTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SampleTarget::CkGauss => "ck-gauss",
            SampleTarget::GaussFund => "gauss-fund",
        })
    }
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleRow {
    pub point: EvalPoint,
    pub value: NumMultivector,
}

impl SampleRow {
    pub fn abs(&self) -> f64 {
        self.value.norm()
    }
}

/// Evaluates `target` on `x0 × r` along `x̲ = r e1`, `x0` outer, `r` inner.
pub fn sample(
    target: SampleTarget,
    m: usize,
    x0: &GridRange,
    r: &GridRange,
) -> Result<Vec<SampleRow>> {
    if !(r.lo > 0.0) {
        return Err(Error::Domain(format!(
            "sampling needs r > 0, got r from {}",
            r.lo
        )));
    }
    let f = CompiledPair::new(&target.pair(m)?);
    let mut rows = Vec::with_capacity(x0.count * r.count);
    for a in x0.values() {
        for b in r.values() {
            let point = EvalPoint::on_ray(a, b, m);
            let value = f.eval(&point)?;
            rows.push(SampleRow { point, value });
        }
    }
    Ok(rows)
}

fn blade_name(mask: BladeMask, m: usize) -> String {
    if mask.is_scalar() {
        "scalar".to_string()
    } else {
        mask.render(m)
    }
}

fn header(m: usize) -> Vec<String> {
    let mut h = vec!["x0".to_string()];
    h.extend((1..=m).map(|j| format!("x{j}")));
    h.push("r".into());
    h.extend(
        (0..1u32 << m).map(|bits| blade_name(BladeMask::new(bits, m).expect("mask in range"), m)),
    );
    h.push("|value|".into());
    h
}

pub fn write_csv<W: Write>(m: usize, rows: &[SampleRow], out: W) -> Result<()> {
    check_dim(m)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header(m))?;
    for row in rows {
        if row.point.dim() != m || row.value.dim() != m {
            return Err(Error::DimensionMismatch {
                left: m,
                right: row.point.dim(),
            });
        }
        let mut rec = vec![row.point.x0.to_string()];
        rec.extend(row.point.xs.iter().map(f64::to_string));
        rec.push(row.point.r().to_string());
        rec.extend((0..1u32 << m).map(|bits| {
            row.value
                .coeff(BladeMask::new(bits, m).expect("mask in range"))
                .to_string()
        }));
        rec.push(row.abs().to_string());
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a file written by [`write_csv`], returning `m` and the rows.
pub fn read_csv<R: Read>(input: R) -> Result<(usize, Vec<SampleRow>)> {
    let mut rd = csv::Reader::from_reader(input);
    let head: Vec<String> = rd.headers()?.iter().map(str::to_string).collect();
    let m = head
        .iter()
        .skip(1)
        .take_while(|h| h.as_str() != "r")
        .count();
    check_dim(m)?;
    if head != header(m) {
        return Err(Error::Parse(format!("unexpected CSV header for m = {m}")));
    }
    let num = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| Error::Parse(format!("bad number `{s}` in CSV")))
    };
    let mut rows = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        let vals = rec.iter().map(num).collect::<Result<Vec<f64>>>()?;
        if vals.len() != head.len() {
            return Err(Error::Parse(format!(
                "row has {} fields, expected {}",
                vals.len(),
                head.len()
            )));
        }
        let point = EvalPoint::new(vals[0], vals[1..=m].to_vec());
        let terms = (0..1u32 << m).map(|bits| {
            (
                BladeMask::new(bits, m).expect("mask in range"),
                vals[m + 2 + bits as usize],
            )
        });
        let value = NumMultivector::from_terms(m, terms)?;
        rows.push(SampleRow { point, value });
    }
    Ok((m, rows))
}
