//! Named verification suites. Every check yields one line
//! `<id> <PASS|FAIL> <max_error>`, where `max_error` is `exact` for symbolic
//! checks and the measured error for numeric ones.

use std::fmt;
use std::fs::File;
use std::path::PathBuf;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axial::{AxialExpr, TermKey, Trig, Var};
use crate::clifford::{BladeMask, ExactMultivector, NumMultivector};
use crate::error::{Error, Result};
use crate::exact::{binomial, int_rat, rat, Rational};
use crate::fueter::{
    cauchy_kernel_pair, closed_form, coeff_a, double_factorial, entire_part_pair, fueter,
    fundamental_scale, gaussian_ck_pair, gaussian_fundamental_pair, seed, triangle_check,
    ClosedFormId, FormParams, SeedKind,
};
use crate::numeric::{
    ck_gauss_restriction, decay_scan, fd_convergence_ratio, fd_cr_residual, pole_probe, read_csv,
    relative_error, restriction_taylor, restriction_taylor_from_series, CompiledPair, EvalPoint,
    FdConfig, FdSide, GaussSeries, SampleTarget, DEFAULT_SERIES_ORDER, FD_TOL,
};
use crate::poly::{
    ck_extend_poly, hermite_closed, hermite_closed_coeffs, hermite_radial_rec, hermite_rec,
    sample_pk, CliffPoly, ExponentVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Core,
    Operators,
    Examples,
    Hermite,
    Gauss,
    GaussFund,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "core" => Suite::Core,
            "operators" => Suite::Operators,
            "examples" => Suite::Examples,
            "hermite" => Suite::Hermite,
            "gauss" => Suite::Gauss,
            "gauss_fund" => Suite::GaussFund,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite `{s}`"))),
        })
    }
}

/// Knobs shared by the suites.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Restricts the dimension-dependent checks to one `m`.
    pub m: Option<usize>,
    pub rng_seed: u64,
    /// A CSV written by `sample`, re-read and recomputed bit for bit.
    pub from_csv: Option<PathBuf>,
    pub threads: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            m: None,
            rng_seed: 1,
            from_csv: None,
            threads: 1,
        }
    }
}

/// One line of suite output.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckLine {
    pub id: String,
    pub passed: bool,
    /// `None` for exact checks.
    pub max_error: Option<f64>,
    pub detail: Option<String>,
}

impl CheckLine {
    fn exact(id: impl Into<String>, passed: bool) -> Self {
        CheckLine {
            id: id.into(),
            passed,
            max_error: None,
            detail: None,
        }
    }

    fn numeric(id: impl Into<String>, err: f64, tol: f64) -> Self {
        CheckLine {
            id: id.into(),
            passed: err <= tol,
            max_error: Some(err),
            detail: None,
        }
    }

    fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match self.max_error {
            Some(e) => write!(f, "{} {} {:.3e}", self.id, status, e)?,
            None => write!(f, "{} {} exact", self.id, status)?,
        }
        if let Some(d) = &self.detail {
            write!(f, " {d}")?;
        }
        Ok(())
    }
}

pub fn all_passed(lines: &[CheckLine]) -> bool {
    lines.iter().all(|l| l.passed)
}

/// Runs `suite`. I/O and CSV errors from `from_csv` propagate; every other
/// failure turns into a FAIL line.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed);
    match suite {
        Suite::Core => core_checks(&mut rng, &mut out),
        Suite::Operators => operator_checks(&mut rng, &mut out),
        Suite::Examples => example_checks(opts, &mut out),
        Suite::Hermite => hermite_checks(opts, &mut out),
        Suite::Gauss => gauss_checks(opts, &mut rng, &mut out),
        Suite::GaussFund => gauss_fund_checks(opts, &mut rng, &mut out),
        Suite::All => {
            for s in [
                Suite::Core,
                Suite::Operators,
                Suite::Examples,
                Suite::Hermite,
                Suite::Gauss,
                Suite::GaussFund,
            ] {
                out.extend(run_suite(s, opts)?);
            }
            return Ok(out);
        }
    }
    if let Some(path) = &opts.from_csv {
        out.push(csv_check(path)?);
    }
    Ok(out)
}

fn record(out: &mut Vec<CheckLine>, id: &str, check: impl FnOnce() -> Result<CheckLine>) {
    match check() {
        Ok(line) => out.push(line),
        Err(e) => out.push(CheckLine::exact(id, false).with_detail(format!("error: {e}"))),
    }
}

fn odd_dims(opts: &SuiteOptions, default: &[usize]) -> Vec<usize> {
    match opts.m {
        Some(m) => vec![m],
        None => default.to_vec(),
    }
}

// ---- random inputs ----

fn random_multivector(rng: &mut ChaCha8Rng, m: usize) -> ExactMultivector {
    let mut a = ExactMultivector::zero(m);
    for _ in 0..rng.gen_range(1..=4) {
        let mask = BladeMask::new(rng.gen_range(0..1u32 << m), m).expect("mask in range");
        let c = Rational::new(rng.gen_range(-6..=6).into(), rng.gen_range(1..=3).into());
        a = &a + &ExactMultivector::blade(m, mask, c);
    }
    a
}

fn random_poly(rng: &mut ChaCha8Rng, m: usize, max_deg: u32, with_x0: bool) -> CliffPoly {
    let mut p = CliffPoly::zero(m);
    for _ in 0..rng.gen_range(1..=3) {
        let mut e = vec![0; m + 1];
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            let v = if with_x0 {
                rng.gen_range(0..=m)
            } else {
                rng.gen_range(1..=m)
            };
            e[v] += 1;
        }
        let c = random_multivector(rng, m);
        p = &p + &CliffPoly::monomial(ExponentVector::new(e), c).expect("dimensions agree");
    }
    p
}

fn random_key(rng: &mut ChaCha8Rng, transcendental: bool) -> TermKey {
    let (exp, trig) = if transcendental {
        let trig = [Trig::None, Trig::Cos, Trig::Sin][rng.gen_range(0..3)];
        (rng.gen_bool(0.5), trig)
    } else {
        (false, Trig::None)
    };
    TermKey::new(
        rng.gen_range(0..=2),
        rng.gen_range(-2..=2),
        rng.gen_range(0..=1),
        exp,
        trig,
    )
}

fn random_expr(rng: &mut ChaCha8Rng, transcendental: bool) -> AxialExpr {
    let mut e = AxialExpr::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let c = rat(rng.gen_range(-3..=3));
        e = &e + &AxialExpr::term(c, random_key(rng, transcendental));
    }
    e
}

fn random_unit(rng: &mut ChaCha8Rng, m: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..m).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 0.1 {
            return v.into_iter().map(|x| x / n).collect();
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng, m: usize, x0_max: f64, r: (f64, f64)) -> EvalPoint {
    let x0 = rng.gen_range(-x0_max..=x0_max);
    let r = rng.gen_range(r.0..=r.1);
    EvalPoint::new(x0, random_unit(rng, m).into_iter().map(|x| x * r).collect())
}

/// The product sign of two blades by sorting the concatenated index list.
pub fn naive_blade_product(a: BladeMask, b: BladeMask) -> (bool, BladeMask) {
    let mut idx: Vec<usize> = a.indices().chain(b.indices()).collect();
    let mut neg = false;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                neg = !neg;
            }
        }
    }
    let mut bits = 0u32;
    let mut i = 0;
    while i < idx.len() {
        if i + 1 < idx.len() && idx[i] == idx[i + 1] {
            // e_j e_j = -1
            neg = !neg;
            i += 2;
        } else {
            bits |= 1 << (idx[i] - 1);
            i += 1;
        }
    }
    (
        neg,
        BladeMask::new(bits, 16).expect("at most 16 generators"),
    )
}

// ---- core ----

const CORE_CASES: usize = 200;

fn core_checks(rng: &mut ChaCha8Rng, out: &mut Vec<CheckLine>) {
    let dim = |rng: &mut ChaCha8Rng| rng.gen_range(1..=6usize);

    let mut ok = true;
    for m in 1..=5usize {
        for a in 0..1u32 << m {
            for b in 0..1u32 << m {
                let (a, b) = (BladeMask::new(a, m).unwrap(), BladeMask::new(b, m).unwrap());
                ok &= a.product(b) == naive_blade_product(a, b);
            }
        }
    }
    out.push(CheckLine::exact("clifford.blade_sign", ok));

    let mut checks: [(&str, bool); 5] = [
        ("clifford.associativity", true),
        ("clifford.vector_square", true),
        ("clifford.conjugation_antihom", true),
        ("clifford.norm_sq", true),
        ("clifford.grade_decomposition", true),
    ];
    for _ in 0..CORE_CASES {
        let m = dim(rng);
        let (a, b, c) = (
            random_multivector(rng, m),
            random_multivector(rng, m),
            random_multivector(rng, m),
        );
        checks[0].1 &= &(&a * &b) * &c == &a * &(&b * &c);
        let v = ExactMultivector::vector(
            &(0..m)
                .map(|_| rat(rng.gen_range(-5..=5)))
                .collect::<Vec<_>>(),
        );
        checks[1].1 &= &v * &v == ExactMultivector::scalar(m, -v.norm_sq());
        checks[2].1 &= (&a * &b).conjugate() == &b.conjugate() * &a.conjugate();
        let sum_sq = a.terms().fold(Rational::zero(), |acc, (_, q)| acc + q * q);
        checks[3].1 &= a.norm_sq() == sum_sq
            && (&a * &a.conjugate())
                .grade_project(0)
                .map(|s| s.scalar_part() == sum_sq)
                .unwrap_or(false);
        let parts = (0..=m).fold(ExactMultivector::zero(m), |acc, k| {
            &acc + &a.grade_project(k).unwrap()
        });
        checks[4].1 &= parts == a;
    }
    for (id, ok) in checks {
        out.push(CheckLine::exact(id, ok));
    }

    let (mut f1, mut f2, mut ck, mut ck_restrict) = (true, true, true, true);
    for _ in 0..CORE_CASES {
        let m = dim(rng);
        let p = random_poly(rng, m, 4, true);
        f1 &= p.dirac().dirac() == -&p.laplacian(false);
        f2 &= p.cr_conj_apply().cr_apply() == p.laplacian(true);
    }
    for _ in 0..100 {
        let m = rng.gen_range(1..=5);
        let f = random_poly(rng, m, 6, false);
        match ck_extend_poly(&f) {
            Ok(g) => {
                ck &= g.cr_apply().is_zero();
                ck_restrict &= g.restrict_x0_zero() == f;
            }
            Err(_) => ck = false,
        }
    }
    out.push(CheckLine::exact("poly.fact1_dirac_square", f1));
    out.push(CheckLine::exact("poly.fact2_cauchy_riemann", f2));
    out.push(CheckLine::exact("poly.ck_monogenic", ck));
    out.push(CheckLine::exact("poly.ck_restriction", ck_restrict));

    let mut parity = true;
    for m in 1..=6 {
        for s in 0..=4u32 {
            let r2s = (0..s).fold(CliffPoly::one(m), |acc, _| &acc * &CliffPoly::r_sq(m));
            let sign = if s % 2 == 0 { rat(1) } else { rat(-1) };
            parity &= CliffPoly::xvec_pow(m, 2 * s) == r2s.scale(&sign);
        }
    }
    out.push(CheckLine::exact("poly.xvec_parity", parity));
}

// ---- operators ----

const OPERATOR_CASES: usize = 50;

fn operator_checks(rng: &mut ChaCha8Rng, out: &mut Vec<CheckLine>) {
    let mut ok = [true; 5];
    for _ in 0..OPERATOR_CASES {
        let f = random_expr(rng, true);
        let n = rng.gen_range(0..=5);
        let fr = f.diff(Var::R);
        // (i)
        ok[0] &= fr.d_upper(n) == f.d_lower(n).diff(Var::R);
        // (ii)
        let du = f.d_upper(n);
        let lhs = fr.d_lower(n) - du.diff(Var::R);
        ok[1] &= lhs == du.mul_r_pow(-1).scale(&rat(2 * n as i64));
        ok[4] &= f.diff(Var::X0).diff(Var::R) == f.diff(Var::R).diff(Var::X0);
    }
    for _ in 0..OPERATOR_CASES {
        let f = random_expr(rng, false);
        let g = random_expr(rng, true);
        let n = rng.gen_range(0..=4);
        let fg = f.mul(&g).expect("rational factor");
        let mut lower = AxialExpr::zero();
        let mut upper = AxialExpr::zero();
        for nu in 0..=n {
            let c = int_rat(binomial(n, nu));
            let left = f.d_lower(n - nu);
            lower = &lower + &left.mul(&g.d_lower(nu)).expect("rational factor").scale(&c);
            upper = &upper + &left.mul(&g.d_upper(nu)).expect("rational factor").scale(&c);
        }
        ok[2] &= fg.d_lower(n) == lower;
        ok[3] &= fg.d_upper(n) == upper;
    }
    let ids = [
        "axial.property_i",
        "axial.property_ii",
        "axial.leibniz_iii",
        "axial.leibniz_iv",
        "axial.diff_commute",
    ];
    for (id, ok) in ids.into_iter().zip(ok) {
        out.push(CheckLine::exact(id, ok));
    }

    let mut round_trip = true;
    for _ in 0..OPERATOR_CASES {
        let e = random_expr(rng, true).d_lower(2);
        round_trip &= e
            .to_string()
            .parse::<AxialExpr>()
            .map(|p| p == e)
            .unwrap_or(false);
    }
    out.push(CheckLine::exact("axial.text_round_trip", round_trip));
}

// ---- examples ----

fn example_checks(opts: &SuiteOptions, out: &mut Vec<CheckLine>) {
    let p = FormParams::default();
    let forms: [(ClosedFormId, AxialExpr, bool, u32); 8] = [
        (ClosedFormId::E1, AxialExpr::r(), true, 1),
        (ClosedFormId::E1Upper, AxialExpr::x0(), false, 0),
        (
            ClosedFormId::E2,
            AxialExpr::x0().mul(&AxialExpr::q_inv(1)).unwrap(),
            true,
            0,
        ),
        (
            ClosedFormId::E3,
            AxialExpr::r().mul(&AxialExpr::q_inv(1)).unwrap(),
            false,
            0,
        ),
        (ClosedFormId::E4, AxialExpr::gauss(), true, 0),
        (ClosedFormId::E5, AxialExpr::cos(), true, 1),
        (ClosedFormId::E6, AxialExpr::sin(), true, 1),
        (ClosedFormId::E7, AxialExpr::sin(), false, 0),
    ];
    for (id, f, lower, from) in forms {
        record(out, id.name(), || {
            let mut ok = true;
            for n in from..=8 {
                let lhs = if lower { f.d_lower(n) } else { f.d_upper(n) };
                ok &= lhs == closed_form(id, n, p)?;
            }
            Ok(CheckLine::exact(id.name(), ok).with_detail(format!("n={from}..8")))
        });
    }
    record(out, "coeff_a.boundary", || {
        let mut ok = true;
        for n in 1..=10u32 {
            let a1 = int_rat(coeff_a(n, 1)?);
            let sign = if n % 2 == 1 { rat(1) } else { rat(-1) };
            ok &= a1 == sign * int_rat(double_factorial(2 * n as i64 - 3)?)
                && coeff_a(n, n)? == 1.into();
        }
        Ok(CheckLine::exact("coeff_a.boundary", ok))
    });

    let dims = odd_dims(opts, &[3, 5, 7]);
    record(out, "vekua.grid", || {
        let mut seeds = vec![
            SeedKind::Iz,
            SeedKind::InvZ,
            SeedKind::Gauss,
            SeedKind::GaussFund,
        ];
        seeds.extend((0..=10).map(SeedKind::ZPow));
        let mut ok = true;
        let mut count = 0;
        for &m in &dims {
            for k in 0..=2 {
                let pk = sample_pk(k, m)?;
                for &s in &seeds {
                    ok &= fueter(&seed(s)?, k, m, &pk)?.is_monogenic();
                    count += 1;
                }
            }
        }
        Ok(CheckLine::exact("vekua.grid", ok).with_detail(format!("pairs={count}")))
    });
    for &m in &dims {
        for k in 0..=2u32 {
            let id = format!("iz_full.m{m}.k{k}");
            if 2 * k as i64 + m as i64 - 4 < -1 {
                continue;
            }
            record(out, &id, || {
                let pk = sample_pk(k, m)?;
                let ft = fueter(&seed(SeedKind::Iz)?, k, m, &pk)?;
                let params = FormParams { m, k };
                let ok = ft.a == closed_form(ClosedFormId::IzFullA, 0, params)?
                    && ft.b == closed_form(ClosedFormId::IzFullB, 0, params)?;
                Ok(CheckLine::exact(id.clone(), ok))
            });
            let id = format!("inv_z_full.m{m}.k{k}");
            record(out, &id, || {
                let pk = sample_pk(k, m)?;
                let ft = fueter(&seed(SeedKind::InvZ)?, k, m, &pk)?;
                let params = FormParams { m, k };
                let ok = ft.a == closed_form(ClosedFormId::InvZFullA, 0, params)?
                    && ft.b == closed_form(ClosedFormId::InvZFullB, 0, params)?;
                Ok(CheckLine::exact(id.clone(), ok))
            });
        }
    }
    let tri_dims = odd_dims(opts, &[3, 5]);
    for &m in &tri_dims {
        for k in 0..=1u32 {
            for n in 0..=10u32 {
                let id = format!("triangle.n{n}.m{m}.k{k}");
                record(out, &id, || {
                    let t = triangle_check(n, k, m, &sample_pk(k, m)?)?;
                    let c = t
                        .constant
                        .map(|c| format!("c={c}"))
                        .unwrap_or_else(|| "c=-".into());
                    Ok(CheckLine::exact(id.clone(), t.holds).with_detail(c))
                });
            }
        }
    }
}

// ---- hermite ----

fn hermite_checks(opts: &SuiteOptions, out: &mut Vec<CheckLine>) {
    let dims = match opts.m {
        Some(m) => vec![m],
        None => vec![1, 2, 3, 4, 5, 7],
    };
    for &m in &dims {
        let id = format!("hermite.rec_vs_closed.m{m}");
        record(out, &id, || {
            let mut ok = true;
            for n in 0..=12 {
                ok &= hermite_rec(n, m)? == hermite_closed(n, m)?;
            }
            Ok(CheckLine::exact(id.clone(), ok).with_detail("n=0..12"))
        });
        let id = format!("hermite.low_order.m{m}");
        record(out, &id, || {
            let h2 = hermite_rec(2, m)?.poly;
            let h3 = hermite_rec(3, m)?.poly;
            let x = CliffPoly::xvec(m);
            let x2 = &x * &x;
            let ok = h2 == &x2 + &CliffPoly::one(m).scale(&rat(m as i64))
                && h3 == &(&x2 * &x) + &x.scale(&rat(m as i64 + 2));
            Ok(CheckLine::exact(id.clone(), ok))
        });
        let id = format!("hermite.grades.m{m}");
        record(out, &id, || {
            let mut ok = true;
            for n in 0..=12 {
                ok &= hermite_rec(n, m)?.poly.grades() == vec![(n % 2) as usize];
            }
            Ok(CheckLine::exact(id.clone(), ok))
        });
        let id = format!("hermite.radial.m{m}");
        record(out, &id, || {
            let rows = hermite_radial_rec(DEFAULT_SERIES_ORDER, m);
            let mut ok = true;
            for (n, row) in rows.iter().enumerate() {
                let closed = hermite_closed_coeffs(n as u32, m)?;
                ok &= row.iter().map(|h| int_rat(h.clone())).collect::<Vec<_>>() == closed;
            }
            Ok(
                CheckLine::exact(id.clone(), ok)
                    .with_detail(format!("n=0..{DEFAULT_SERIES_ORDER}")),
            )
        });
    }
    for m in dims.into_iter().filter(|m| m % 2 == 1) {
        let id = format!("hermite.axis_taylor.m{m}");
        record(out, &id, || {
            let terms = 41;
            let ok = restriction_taylor(m, terms)? == restriction_taylor_from_series(m, terms)?;
            Ok(CheckLine::exact(id.clone(), ok).with_detail("order=80"))
        });
    }
}

// ---- gauss ----

pub const SERIES_TOL: f64 = 1e-10;
pub const AXIS_TOL: f64 = 1e-12;
const GAUSS_POINTS: usize = 50;

fn gauss_checks(opts: &SuiteOptions, rng: &mut ChaCha8Rng, out: &mut Vec<CheckLine>) {
    for m in odd_dims(opts, &[3, 5]) {
        let id = format!("gauss.restriction.m{m}");
        record(out, &id, || {
            let g = gaussian_ck_pair(m)?;
            let (a, b) = g.restrict_x0_zero();
            Ok(CheckLine::exact(
                id.clone(),
                a == AxialExpr::gauss() && b.is_zero(),
            ))
        });
        let id = format!("gauss.vekua.m{m}");
        record(out, &id, || {
            Ok(CheckLine::exact(
                id.clone(),
                gaussian_ck_pair(m)?.is_monogenic(),
            ))
        });
        if m == 3 {
            record(out, "gauss.m3_formula", || {
                let g = gaussian_ck_pair(3)?;
                let p = FormParams::default();
                let ok = g.a == closed_form(ClosedFormId::GaussM3A, 0, p)?
                    && g.b == closed_form(ClosedFormId::GaussM3B, 0, p)?;
                Ok(CheckLine::exact("gauss.m3_formula", ok))
            });
        }
        let id = format!("gauss.series_vs_closed.m{m}");
        record(out, &id, || {
            let series = GaussSeries::new(m, DEFAULT_SERIES_ORDER)?;
            let closed = CompiledPair::new(&gaussian_ck_pair(m)?);
            let mut worst: f64 = 0.0;
            let mut tails = true;
            for _ in 0..GAUSS_POINTS {
                let pt = random_point(rng, m, 1.0, (0.3, 2.0));
                let s = series.eval(&pt)?;
                tails &= s.tail_ok();
                worst = worst.max(relative_error(
                    &s.value,
                    &closed.eval(&pt)?,
                    f64::MIN_POSITIVE,
                ));
            }
            let line = CheckLine::numeric(id.clone(), worst, SERIES_TOL);
            Ok(CheckLine {
                passed: line.passed && tails,
                ..line
            }
            .with_detail(format!("tail_ok={tails}")))
        });
        let id = format!("gauss.axis_branch.m{m}");
        record(out, &id, || {
            let series = GaussSeries::new(m, 40)?;
            let mut worst: f64 = 0.0;
            for i in 0..=20 {
                let x0 = -1.0 + 0.1 * i as f64;
                let s = series.eval(&EvalPoint::new(x0, vec![0.0; m]))?.value;
                let want = ck_gauss_restriction(x0, m)?;
                let mut err = s.max_abs_diff(&NumMultivector::scalar(m, want)) / want.abs();
                if m == 3 {
                    let paper = (x0 * x0 / 2.0).exp() * (1.0 + x0 * x0);
                    err = err.max((want - paper).abs() / paper);
                }
                worst = worst.max(err);
            }
            Ok(CheckLine::numeric(id.clone(), worst, AXIS_TOL))
        });
        let id = format!("gauss.fd_left.m{m}");
        record(out, &id, || {
            let g = CompiledPair::new(&gaussian_ck_pair(m)?);
            let mut worst: f64 = 0.0;
            for _ in 0..20 {
                let pt = random_point(rng, m, 1.0, (0.5, 2.0));
                worst = worst.max(fd_cr_residual(
                    |p| g.eval(p),
                    &pt,
                    &FdConfig::default(),
                    FdSide::Left,
                )?);
            }
            Ok(CheckLine::numeric(id.clone(), worst, FD_TOL))
        });
    }
}

// ---- gauss_fund ----

pub const PROBE_RADII: [f64; 4] = [1e-1, 1e-2, 1e-3, 1e-4];
pub const FD_RATIO_STEP: f64 = 1e-3;
pub const FD_RATIO_RANGE: (f64, f64) = (3.5, 4.5);
pub const DECAY_STABILITY: f64 = 0.05;

fn gauss_fund_checks(opts: &SuiteOptions, rng: &mut ChaCha8Rng, out: &mut Vec<CheckLine>) {
    for m in odd_dims(opts, &[3, 5]) {
        let id = format!("gauss_fund.decomposition.m{m}");
        record(out, &id, || {
            let raw = fueter(&seed(SeedKind::GaussFund)?, 0, m, &CliffPoly::one(m))?;
            let kernel = cauchy_kernel_pair(m)?.scale(&fundamental_scale(m)?);
            let ok = raw.try_sub(&kernel)?.is_monogenic() && entire_part_pair(m)?.is_monogenic();
            Ok(CheckLine::exact(id.clone(), ok))
        });
        let id = format!("gauss_fund.pole_cancellation.m{m}");
        record(out, &id, || {
            let rep = pole_probe(&entire_part_pair(m)?, &PROBE_RADII)?;
            let largest = rep.norms.iter().cloned().fold(0.0, f64::max);
            let mut line = CheckLine::exact(id.clone(), rep.bounded());
            line.max_error = Some(largest);
            Ok(line.with_detail(format!("|M| at r=1e-4: {:.6e}", rep.norms[3])))
        });
        let id = format!("gauss_fund.pole_present.m{m}");
        record(out, &id, || {
            let rep = pole_probe(&gaussian_fundamental_pair(m)?, &PROBE_RADII)?;
            Ok(CheckLine::exact(id.clone(), !rep.bounded()))
        });

        let pair = gaussian_fundamental_pair(m);
        let pts: Vec<EvalPoint> = (0..20)
            .map(|_| random_point(rng, m, 1.0, (0.5, 2.0)))
            .collect();
        for (side, name) in [(FdSide::Left, "left"), (FdSide::Right, "right")] {
            let id = format!("gauss_fund.fd_{name}.m{m}");
            record(out, &id, || {
                let f = CompiledPair::new(pair.as_ref().map_err(|e| Error::Domain(e.to_string()))?);
                let mut worst: f64 = 0.0;
                for pt in &pts {
                    worst = worst.max(fd_cr_residual(
                        |p| f.eval(p),
                        pt,
                        &FdConfig::default(),
                        side,
                    )?);
                }
                Ok(CheckLine::numeric(id.clone(), worst, FD_TOL))
            });
        }
        let id = format!("gauss_fund.fd_order.m{m}");
        record(out, &id, || {
            let f = CompiledPair::new(pair.as_ref().map_err(|e| Error::Domain(e.to_string()))?);
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for pt in &pts {
                for side in [FdSide::Left, FdSide::Right] {
                    let ratio = fd_convergence_ratio(|p| f.eval(p), pt, FD_RATIO_STEP, side)?;
                    lo = lo.min(ratio);
                    hi = hi.max(ratio);
                }
            }
            let ok = FD_RATIO_RANGE.0 <= lo && hi <= FD_RATIO_RANGE.1;
            let mut line = CheckLine::exact(id.clone(), ok);
            line.max_error = Some((4.0 - lo).abs().max((hi - 4.0).abs()));
            Ok(line.with_detail(format!("ratio in [{lo:.4}, {hi:.4}]")))
        });
        let id = format!("gauss_fund.decay.m{m}");
        record(out, &id, || {
            let p = gaussian_fundamental_pair(m)?;
            let coarse = decay_scan(&p, 2.0, 3.0, 8.0, (101, 101), opts.threads)?;
            let fine = decay_scan(&p, 2.0, 3.0, 8.0, (201, 201), opts.threads)?;
            let change = (fine.sup_value - coarse.sup_value).abs() / coarse.sup_value;
            let line = CheckLine::numeric(id.clone(), change, DECAY_STABILITY);
            Ok(CheckLine {
                passed: line.passed && coarse.bounded() && fine.bounded(),
                ..line
            }
            .with_detail(format!(
                "sup={:.6e} at x0={} r={}",
                coarse.sup_value, coarse.argmax_x0, coarse.argmax_r
            )))
        });
        let id = format!("inv_z.decay_flagged.m{m}");
        record(out, &id, || {
            let p = fueter(&seed(SeedKind::InvZ)?, 0, m, &CliffPoly::one(m))?;
            let rep = decay_scan(&p, 2.0, 3.0, 8.0, (101, 101), opts.threads)?;
            Ok(CheckLine::exact(id.clone(), rep.grows)
                .with_detail(format!("growth={:.3e}", rep.growth_ratio)))
        });
    }
}

/// Re-reads a sampled CSV and recomputes every row; the file passes if one of
/// the sample targets reproduces all values bit for bit.
fn csv_check(path: &PathBuf) -> Result<CheckLine> {
    let (m, rows) = read_csv(File::open(path)?)?;
    for target in SampleTarget::ALL {
        let f = CompiledPair::new(&target.pair(m)?);
        let same = rows.iter().all(|row| match f.eval(&row.point) {
            Ok(v) => bit_equal(&v, &row.value, m),
            Err(_) => false,
        });
        if same {
            return Ok(CheckLine::exact("csv.round_trip", true)
                .with_detail(format!("target={target} rows={}", rows.len())));
        }
    }
    Ok(CheckLine::exact("csv.round_trip", false).with_detail(format!("rows={}", rows.len())))
}

fn bit_equal(a: &NumMultivector, b: &NumMultivector, m: usize) -> bool {
    (0..1u32 << m).all(|bits| {
        let mask = BladeMask::new(bits, m).expect("mask in range");
        a.coeff(mask).to_bits() == b.coeff(mask).to_bits()
    })
}
