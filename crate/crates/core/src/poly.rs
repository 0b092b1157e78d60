//! Polynomials in `x0, x1, ..., xm` with exact multivector coefficients.
//!
//! Coefficients sit to the left of the (central) monomials. Terms are keyed
//! by [`ExponentVector`] in graded-lexicographic order, which also fixes the
//! order of the text form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::clifford::{check_dim, BladeMask, ExactMultivector, Multivector, NumMultivector};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int_rat, rat, Rational};

/// Series and recurrences refuse to go beyond this total degree by default.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// Exponents `(n0, n1, ..., nm)` of a monomial `x0^n0 x1^n1 ... xm^nm`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn zero(m: usize) -> Self {
        ExponentVector(vec![0; m + 1])
    }

    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn get(&self, var: usize) -> u32 {
        self.0[var]
    }

    fn with(&self, var: usize, value: u32) -> Self {
        let mut e = self.0.clone();
        e[var] = value;
        ExponentVector(e)
    }

    fn plus(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn render(&self) -> String {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| {
                if e == 1 {
                    format!("x{j}")
                } else {
                    format!("x{j}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial `Σ_α a_α x^α` with `a_α ∈ R_{0,m}` exact.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffPoly {
    dim: usize,
    terms: BTreeMap<ExponentVector, ExactMultivector>,
}

impl CliffPoly {
    pub fn zero(m: usize) -> Self {
        CliffPoly {
            dim: m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: ExactMultivector) -> Self {
        let mut p = Self::zero(c.dim());
        p.add_term(ExponentVector::zero(c.dim()), c);
        p
    }

    pub fn one(m: usize) -> Self {
        Self::constant(Multivector::one(m))
    }

    /// The coordinate `x_j`, `j = 0..=m`.
    pub fn var(m: usize, j: usize) -> Self {
        assert!(j <= m, "variable x{j} out of range for m = {m}");
        let mut p = Self::zero(m);
        p.add_term(ExponentVector::zero(m).with(j, 1), Multivector::one(m));
        p
    }

    pub fn monomial(exps: ExponentVector, coeff: ExactMultivector) -> Result<Self> {
        if exps.0.len() != coeff.dim() + 1 {
            return Err(Error::DimensionMismatch {
                left: exps.0.len() - 1,
                right: coeff.dim(),
            });
        }
        let mut p = Self::zero(coeff.dim());
        p.add_term(exps, coeff);
        Ok(p)
    }

    /// `x̲ = Σ_j x_j e_j`.
    pub fn xvec(m: usize) -> Self {
        let mut p = Self::zero(m);
        for j in 1..=m {
            p.add_term(
                ExponentVector::zero(m).with(j, 1),
                Multivector::generator(m, j),
            );
        }
        p
    }

    /// `x̲^j` by repeated multiplication.
    pub fn xvec_pow(m: usize, j: u32) -> Self {
        let x = Self::xvec(m);
        (0..j).fold(Self::one(m), |acc, _| &acc * &x)
    }

    /// `|x̲|^2 = Σ_j x_j^2`.
    pub fn r_sq(m: usize) -> Self {
        let mut p = Self::zero(m);
        for j in 1..=m {
            p.add_term(ExponentVector::zero(m).with(j, 2), Multivector::one(m));
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &ExactMultivector)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &ExponentVector) -> Option<&ExactMultivector> {
        self.terms.get(exps)
    }

    pub(crate) fn add_term(&mut self, exps: ExponentVector, c: ExactMultivector) {
        debug_assert_eq!(exps.0.len(), self.dim + 1);
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            Some(old) => {
                let new = &old + &c;
                if !new.is_zero() {
                    self.terms.insert(exps, new);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            out.add_term(e.clone(), c.scale(q));
        }
        out
    }

    /// Noncommutative product; coefficients multiply as `P_coeff · Q_coeff`.
    pub fn poly_mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_term(ea.plus(eb), ca.gp(cb)?);
            }
        }
        Ok(out)
    }

    /// `a · P` for a constant multivector `a`.
    pub fn left_mul(&self, a: &ExactMultivector) -> Result<Self> {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            out.add_term(e.clone(), a.gp(c)?);
        }
        Ok(out)
    }

    /// `∂/∂x_j`, `j = 0..=m`.
    pub fn derivative(&self, j: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            let n = e.get(j);
            if n > 0 {
                out.add_term(e.with(j, n - 1), c.scale(&rat(n as i64)));
            }
        }
        out
    }

    /// `∂_x̲ P = Σ_j e_j ∂_{x_j} P` with `e_j` acting from the left.
    pub fn dirac(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for j in 1..=self.dim {
            let ej = Multivector::generator(self.dim, j);
            for (e, c) in self.derivative(j).terms {
                out.add_term(e, &ej * &c);
            }
        }
        out
    }

    /// `∂_x P = ∂_{x0} P + ∂_x̲ P`.
    pub fn cr_apply(&self) -> Self {
        &self.derivative(0) + &self.dirac()
    }

    /// `∂̄_x P = ∂_{x0} P - ∂_x̲ P`.
    pub fn cr_conj_apply(&self) -> Self {
        &self.derivative(0) - &self.dirac()
    }

    pub fn laplacian(&self, include_x0: bool) -> Self {
        let first = if include_x0 { 0 } else { 1 };
        let mut out = Self::zero(self.dim);
        for j in first..=self.dim {
            for (e, c) in self.derivative(j).derivative(j).terms {
                out.add_term(e, c);
            }
        }
        out
    }

    pub fn depends_on_x0(&self) -> bool {
        self.terms.keys().any(|e| e.get(0) > 0)
    }

    /// Restriction to the hyperplane `x0 = 0`.
    pub fn restrict_x0_zero(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in self.terms() {
            if e.get(0) == 0 {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.degree()).max().unwrap_or(0)
    }

    /// Grades occurring in any coefficient.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.values().flat_map(|c| c.grades()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub fn eval(&self, x0: f64, xs: &[f64]) -> Result<NumMultivector> {
        if xs.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: xs.len(),
            });
        }
        let mut out = NumMultivector::zero(self.dim);
        for (e, c) in self.terms() {
            let mut mono = x0.powi(e.get(0) as i32);
            for (j, x) in xs.iter().enumerate() {
                mono *= x.powi(e.get(j + 1) as i32);
            }
            for (mask, q) in c.terms() {
                out.add_term(mask, crate::exact::to_f64(q) * mono);
            }
        }
        Ok(out)
    }

    /// Parses the text form, e.g. `2 * x0 x1^2 * e12 - 1/3 * x2`.
    pub fn parse(m: usize, s: &str) -> Result<Self> {
        check_dim(m)?;
        let mut out = Self::zero(m);
        let mut toks = s.split_whitespace().peekable();
        let mut negate = false;
        loop {
            let coef_tok = toks
                .next()
                .ok_or_else(|| Error::Parse(format!("incomplete polynomial `{s}`")))?;
            let mut coef: Rational = coef_tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{coef_tok}`")))?;
            if negate {
                coef = -coef;
            }
            let mut exps = ExponentVector::zero(m);
            let mut blade = BladeMask::SCALAR;
            while toks.peek() == Some(&"*") {
                toks.next();
                match toks.peek() {
                    Some(t) if t.starts_with('x') => {
                        while let Some(t) = toks.peek().filter(|t| t.starts_with('x')) {
                            let (var, pow) = parse_var(t, m)?;
                            exps.0[var] += pow;
                            toks.next();
                        }
                    }
                    Some(t) if t.starts_with('e') => {
                        let mv = ExactMultivector::parse(m, t)?;
                        blade = mv
                            .terms()
                            .next()
                            .map(|(b, _)| b)
                            .unwrap_or(BladeMask::SCALAR);
                        toks.next();
                    }
                    other => return Err(Error::Parse(format!("unexpected factor {other:?}"))),
                }
            }
            out.add_term(exps, Multivector::blade(m, blade, coef));
            match toks.next() {
                None => break,
                Some("+") => negate = false,
                Some("-") => negate = true,
                Some(t) => return Err(Error::Parse(format!("unexpected token `{t}`"))),
            }
        }
        Ok(out)
    }
}

fn parse_var(tok: &str, m: usize) -> Result<(usize, u32)> {
    let bad = || Error::Parse(format!("bad variable `{tok}`"));
    let body = tok.strip_prefix('x').ok_or_else(bad)?;
    let (idx, pow) = match body.split_once('^') {
        Some((i, p)) => (
            i.parse::<usize>().map_err(|_| bad())?,
            p.parse::<u32>().map_err(|_| bad())?,
        ),
        None => (body.parse::<usize>().map_err(|_| bad())?, 1),
    };
    if idx > m {
        return Err(bad());
    }
    Ok((idx, pow))
}

impl fmt::Display for CliffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono = e.render();
            for (mask, q) in c.terms() {
                let sep = match (first, q.is_negative()) {
                    (true, true) => "-",
                    (true, false) => "",
                    (false, true) => " - ",
                    (false, false) => " + ",
                };
                write!(f, "{sep}{}", q.abs())?;
                if !mono.is_empty() {
                    write!(f, " * {mono}")?;
                }
                if !mask.is_scalar() {
                    write!(f, " * {}", mask.render(self.dim))?;
                }
                first = false;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &CliffPoly {
    type Output = CliffPoly;

    /// # Panics
    /// On dimension mismatch.
    fn add(self, rhs: Self) -> CliffPoly {
        self.try_add(rhs).expect("polynomial dimensions must agree")
    }
}

impl std::ops::Sub for &CliffPoly {
    type Output = CliffPoly;

    fn sub(self, rhs: Self) -> CliffPoly {
        self.try_add(&-rhs)
            .expect("polynomial dimensions must agree")
    }
}

impl std::ops::Neg for &CliffPoly {
    type Output = CliffPoly;

    fn neg(self) -> CliffPoly {
        self.scale(&rat(-1))
    }
}

impl std::ops::Mul for &CliffPoly {
    type Output = CliffPoly;

    fn mul(self, rhs: Self) -> CliffPoly {
        self.poly_mul(rhs)
            .expect("polynomial dimensions must agree")
    }
}

/// Cauchy-Kowalevski extension `Σ_n (-x0)^n / n! ∂_x̲^n f` of a polynomial in `x̲`.
pub fn ck_extend_poly(f: &CliffPoly) -> Result<CliffPoly> {
    ck_extend_poly_capped(f, DEFAULT_DEGREE_CAP)
}

pub fn ck_extend_poly_capped(f: &CliffPoly, cap: u32) -> Result<CliffPoly> {
    if f.depends_on_x0() {
        return Err(Error::Domain(
            "CK-extension expects a polynomial in x̲ only".into(),
        ));
    }
    let degree = f.degree();
    if degree > cap {
        return Err(Error::DegreeCap { degree, cap });
    }
    let m = f.dim();
    let mut out = CliffPoly::zero(m);
    let mut power = f.clone();
    let mut n = 0u32;
    while !power.is_zero() {
        let q = Rational::new(
            if n % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            },
            factorial(n),
        );
        for (e, c) in power.terms() {
            out.add_term(e.with(0, n), c.scale(&q));
        }
        power = power.dirac();
        n += 1;
    }
    Ok(out)
}

/// Outcome of [`is_homogeneous_monogenic`].
#[derive(Clone, Debug, PartialEq)]
pub struct MonogenicReport {
    pub holds: bool,
    pub witness: Option<MonogenicWitness>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum MonogenicWitness {
    DependsOnX0(ExponentVector),
    WrongDegree(ExponentVector),
    DimensionMismatch(usize),
    DiracNonzero(CliffPoly),
}

impl fmt::Display for MonogenicWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonogenicWitness::DependsOnX0(e) => write!(f, "term {} depends on x0", e.render()),
            MonogenicWitness::WrongDegree(e) => {
                write!(f, "term {} has degree {}", e.render(), e.degree())
            }
            MonogenicWitness::DimensionMismatch(m) => {
                write!(f, "polynomial lives in dimension {m}")
            }
            MonogenicWitness::DiracNonzero(p) => write!(f, "dirac(P) = {p}"),
        }
    }
}

/// Checks `P(t x̲) = t^k P(x̲)` and `∂_x̲ P = 0` exactly.
pub fn is_homogeneous_monogenic(p: &CliffPoly, k: u32) -> MonogenicReport {
    let fail = |w| MonogenicReport {
        holds: false,
        witness: Some(w),
    };
    for e in p.terms.keys() {
        if e.get(0) > 0 {
            return fail(MonogenicWitness::DependsOnX0(e.clone()));
        }
        if e.degree() != k {
            return fail(MonogenicWitness::WrongDegree(e.clone()));
        }
    }
    let d = p.dirac();
    if !d.is_zero() {
        return fail(MonogenicWitness::DiracNonzero(d));
    }
    MonogenicReport {
        holds: true,
        witness: None,
    }
}

/// A shipped homogeneous monogenic polynomial of degree `k`.
///
/// `P_0 = 1`; for `k ≥ 1`, `P_k = ∂_x̲ Re (x1 + i x2)^{k+1} / (k+1)`, which gives
/// `P_1 = x1 e1 - x2 e2`. Needs `m ≥ 2` when `k ≥ 1`.
pub fn sample_pk(k: u32, m: usize) -> Result<CliffPoly> {
    check_dim(m)?;
    if k == 0 {
        return Ok(CliffPoly::one(m));
    }
    if m < 2 {
        return Err(Error::InvalidPk(format!("no shipped P_{k} for m = {m}")));
    }
    let mut h = CliffPoly::zero(m);
    let n = k + 1;
    for nu in (0..=n).step_by(2) {
        let sign = if nu % 4 == 0 { 1 } else { -1 };
        let exps = ExponentVector::zero(m).with(1, n - nu).with(2, nu);
        h.add_term(
            exps,
            Multivector::scalar(m, int_rat(binomial(n, nu) * sign)),
        );
    }
    Ok(h.dirac()
        .scale(&Rational::new(BigInt::one(), BigInt::from(n))))
}

/// `c_n(ν) = Π_{l=1}^{ν} (m + 2(n - l))`.
pub fn coeff_c(n: u32, nu: u32, m: usize) -> Result<BigInt> {
    if nu > n {
        return Err(Error::IndexOutOfRange(format!(
            "c_n(ν) needs ν ≤ n, got n = {n}, ν = {nu}"
        )));
    }
    Ok((1..=nu).fold(BigInt::one(), |acc, l| {
        acc * (m as i64 + 2 * (n as i64 - l as i64))
    }))
}

/// A generalized Hermite polynomial `H_n(x̲)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermiteResult {
    pub n: u32,
    pub m: usize,
    pub poly: CliffPoly,
}

impl HermiteResult {
    /// Coefficients `h_j` with `H_n = Σ_j h_j x̲^j`, recovered from the
    /// polynomial by peeling off powers of `x̲` from the top. `None` when the
    /// polynomial is not of that form.
    pub fn xvec_coeffs(&self) -> Option<Vec<Rational>> {
        let m = self.m;
        let mut rest = self.poly.clone();
        let mut coeffs = vec![Rational::zero(); self.n as usize + 1];
        for j in (0..=self.n).rev() {
            let probe = ExponentVector::zero(m).with(1, j);
            let blade = if j % 2 == 0 {
                BladeMask::SCALAR
            } else {
                BladeMask::generator(1)
            };
            let Some(q) = rest.coeff(&probe).and_then(|c| c.get(blade)).cloned() else {
                continue;
            };
            // x̲^j carries (-1)^{⌊j/2⌋} on x1^j
            let h = if (j / 2) % 2 == 0 { q } else { -q };
            rest = &rest - &CliffPoly::xvec_pow(m, j).scale(&h);
            coeffs[j as usize] = h;
        }
        rest.is_zero().then_some(coeffs)
    }

    /// Renders `H_n` as a polynomial in `x̲`, e.g. `x̲^3 + 5 x̲`.
    pub fn to_xvec_string(&self) -> Option<String> {
        let coeffs = self.xvec_coeffs()?;
        Some(render_xvec(&coeffs))
    }
}

pub(crate) fn render_xvec(coeffs: &[Rational]) -> String {
    let mut out = String::new();
    for (j, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sep = match (out.is_empty(), c.is_negative()) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let a = c.abs();
        let power = match j {
            0 => String::new(),
            1 => "x̲".to_string(),
            _ => format!("x̲^{j}"),
        };
        let body = match (j, a.is_one()) {
            (0, _) => a.to_string(),
            (_, true) => power,
            (_, false) => format!("{a} {power}"),
        };
        out.push_str(sep);
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn check_hermite_args(n: u32, m: usize) -> Result<()> {
    check_dim(m)?;
    if n > DEFAULT_DEGREE_CAP {
        return Err(Error::DegreeCap {
            degree: n,
            cap: DEFAULT_DEGREE_CAP,
        });
    }
    Ok(())
}

/// `H_0 = 1`, `H_{n+1} = x̲ H_n - ∂_x̲ H_n` on full polynomials.
pub fn hermite_rec(n: u32, m: usize) -> Result<HermiteResult> {
    check_hermite_args(n, m)?;
    let x = CliffPoly::xvec(m);
    let mut h = CliffPoly::one(m);
    for _ in 0..n {
        h = &(&x * &h) - &h.dirac();
    }
    Ok(HermiteResult { n, m, poly: h })
}

/// The closed form
/// `H_{2n} = Σ_ν C(n,ν) c_n(ν) x̲^{2(n-ν)}`,
/// `H_{2n+1} = Σ_ν C(n,ν) c_{n+1}(ν) x̲^{2(n-ν)+1}`.
pub fn hermite_closed(n: u32, m: usize) -> Result<HermiteResult> {
    check_hermite_args(n, m)?;
    let coeffs = hermite_closed_coeffs(n, m)?;
    let x = CliffPoly::xvec(m);
    let mut power = CliffPoly::one(m);
    let mut poly = CliffPoly::zero(m);
    for c in &coeffs {
        poly = &poly + &power.scale(c);
        power = &power * &x;
    }
    Ok(HermiteResult { n, m, poly })
}

/// Closed-form coefficients of `H_n` in the basis `x̲^j`.
pub fn hermite_closed_coeffs(n: u32, m: usize) -> Result<Vec<Rational>> {
    let half = n / 2;
    let odd = n % 2;
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for nu in 0..=half {
        let c = coeff_c(half + odd, nu, m)?;
        let j = 2 * (half - nu) + odd;
        coeffs[j as usize] = int_rat(binomial(half, nu) * c);
    }
    Ok(coeffs)
}

/// The Hermite recurrence carried out in the basis `x̲^j`, using
/// `∂_x̲ x̲^{2s} = -2s x̲^{2s-1}` and `∂_x̲ x̲^{2s+1} = -(m+2s) x̲^{2s}`.
/// Cheap enough for the high orders the Gaussian series needs.
pub fn hermite_radial_rec(n: u32, m: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for _ in 0..n {
        let prev = rows.last().expect("nonempty");
        let mut next = vec![BigInt::zero(); prev.len() + 1];
        for (j, h) in prev.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            next[j + 1] += h;
            if j > 0 {
                let factor = if j % 2 == 0 { j } else { m + j - 1 };
                next[j - 1] += h * BigInt::from(factor);
            }
        }
        rows.push(next);
    }
    rows
}
