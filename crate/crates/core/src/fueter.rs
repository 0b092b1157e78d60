//! Axial monogenic functions generated from holomorphic seeds.
//!
//! For odd `m` and a holomorphic `f = u + i v` the transform is computed as
//!
//! ```text
//! A = (2k+m-1)!! · D_r(k + (m-1)/2){u}
//! B = (2k+m-1)!! · D^r(k + (m-1)/2){v}
//! ```
//!
//! giving the axial function `(A + ω B) P_k(x̲)`. For polynomial seeds the
//! same function is also reachable through `Δ_x^{k+(m-1)/2}` acting on a
//! [`CliffPoly`]; [`fueter_via_laplacian`] provides that second route.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::axial::{parity, AxialExpr, Var};
use crate::clifford::{check_dim, Multivector};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int_rat, rat, Rational};
use crate::poly::{ck_extend_poly, is_homogeneous_monogenic, CliffPoly, ExponentVector};

/// `j!! = j (j-2) (j-4) ...` with `(-1)!! = 0!! = 1`.
pub fn double_factorial(j: i64) -> Result<BigInt> {
    if j < -1 {
        return Err(Error::IndexOutOfRange(format!("({j})!! is undefined")));
    }
    let mut acc = BigInt::one();
    let mut i = j;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    Ok(acc)
}

/// The coefficients `a_ν^(n)` of the trigonometric closed forms, generated by
/// `a_ν^(n+1) = -(2n-ν) a_ν^(n) + a_{ν-1}^(n)` from `a_1^(1) = 1`, with
/// `a_0^(n) = a_{n+1}^(n) = 0`.
#[derive(Clone, Debug)]
pub struct CoeffTableA {
    // rows[n][ν], ν = 0..=n+1, the two ends zero
    rows: Vec<Vec<BigInt>>,
}

impl CoeffTableA {
    pub fn build(max_n: u32) -> Self {
        let mut rows = vec![
            vec![BigInt::zero(); 2],
            vec![BigInt::zero(), BigInt::one(), BigInt::zero()],
        ];
        for n in 1..max_n.max(1) as usize {
            let prev = &rows[n];
            let mut next = vec![BigInt::zero(); n + 3];
            for nu in 1..=n + 1 {
                let keep = if nu <= n {
                    -BigInt::from(2 * n as i64 - nu as i64) * &prev[nu]
                } else {
                    BigInt::zero()
                };
                next[nu] = keep + &prev[nu - 1];
            }
            rows.push(next);
        }
        CoeffTableA { rows }
    }

    pub fn max_n(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    pub fn get(&self, n: u32, nu: u32) -> Result<BigInt> {
        if n == 0 || nu == 0 || nu > n {
            return Err(Error::IndexOutOfRange(format!(
                "a_ν^(n) needs 1 ≤ ν ≤ n, got n = {n}, ν = {nu}"
            )));
        }
        if n > self.max_n() {
            return Err(Error::IndexOutOfRange(format!(
                "table built up to n = {}, asked {n}",
                self.max_n()
            )));
        }
        Ok(self.rows[n as usize][nu as usize].clone())
    }
}

pub fn coeff_a(n: u32, nu: u32) -> Result<BigInt> {
    CoeffTableA::build(n).get(n, nu)
}

/// Named holomorphic seeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeedKind {
    /// `f(z) = i z`
    Iz,
    /// `f(z) = 1/z`
    InvZ,
    /// `f(z) = z^n`
    ZPow(u32),
    /// `f(z) = exp(z^2/2)`
    Gauss,
    /// `f(z) = exp(z^2/2)/z`
    GaussFund,
}

impl SeedKind {
    pub fn from_name(name: &str, n: Option<u32>) -> Result<Self> {
        match (name, n) {
            ("iz", _) => Ok(SeedKind::Iz),
            ("inv_z", _) => Ok(SeedKind::InvZ),
            ("z_pow", Some(n)) => Ok(SeedKind::ZPow(n)),
            ("z_pow", None) => Err(Error::UnknownSeed("z_pow needs an exponent n".into())),
            ("gauss", _) => Ok(SeedKind::Gauss),
            ("gauss_fund", _) => Ok(SeedKind::GaussFund),
            _ => Err(Error::UnknownSeed(name.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeedKind::Iz => "iz",
            SeedKind::InvZ => "inv_z",
            SeedKind::ZPow(_) => "z_pow",
            SeedKind::Gauss => "gauss",
            SeedKind::GaussFund => "gauss_fund",
        }
    }

    pub fn is_polynomial(self) -> bool {
        matches!(self, SeedKind::Iz | SeedKind::ZPow(_))
    }
}

impl FromStr for SeedKind {
    type Err = Error;

    /// Accepts `iz`, `inv_z`, `gauss`, `gauss_fund` and `z_pow:<n>`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((name, n)) => {
                let n = n.parse().map_err(|_| Error::UnknownSeed(s.to_string()))?;
                SeedKind::from_name(name, Some(n))
            }
            None => SeedKind::from_name(s, None),
        }
    }
}

impl fmt::Display for SeedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeedKind::ZPow(n) => write!(f, "z_pow:{n}"),
            other => f.write_str(other.name()),
        }
    }
}

/// `f(z) = u + i v` with `x → x0`, `y → r`.
#[derive(Clone, Debug)]
pub struct HoloSeed {
    pub name: String,
    pub u: AxialExpr,
    pub v: AxialExpr,
    pub n: Option<u32>,
}

impl HoloSeed {
    /// Builds a seed after checking `∂_{x0} u = ∂_r v` and `∂_r u = -∂_{x0} v`.
    pub fn new(name: impl Into<String>, u: AxialExpr, v: AxialExpr) -> Result<Self> {
        let name = name.into();
        let first = u.diff(Var::X0) - v.diff(Var::R);
        let second = u.diff(Var::R) + v.diff(Var::X0);
        if !first.is_zero() || !second.is_zero() {
            return Err(Error::NotHolomorphic(name));
        }
        Ok(HoloSeed {
            name,
            u,
            v,
            n: None,
        })
    }

    /// `Σ c_i f_i`; the transform is real-linear so this is a valid seed.
    pub fn linear_combination(
        name: impl Into<String>,
        parts: &[(Rational, &HoloSeed)],
    ) -> Result<Self> {
        let mut u = AxialExpr::zero();
        let mut v = AxialExpr::zero();
        for (c, s) in parts {
            u = &u + &s.u.scale(c);
            v = &v + &s.v.scale(c);
        }
        HoloSeed::new(name, u, v)
    }
}

pub fn seed(kind: SeedKind) -> Result<HoloSeed> {
    let (u, v) = match kind {
        SeedKind::Iz => (-&AxialExpr::r(), AxialExpr::x0()),
        SeedKind::InvZ => (
            AxialExpr::x0().mul(&AxialExpr::q_inv(1))?,
            -&AxialExpr::r().mul(&AxialExpr::q_inv(1))?,
        ),
        SeedKind::ZPow(n) => {
            let mut u = AxialExpr::zero();
            let mut v = AxialExpr::zero();
            for j in 0..=n {
                // i^j splits into real (j even) and imaginary (j odd) parts
                let c = int_rat(binomial(n, j)) * parity(j / 2);
                let t = AxialExpr::x0_pow(n - j).mul_r_pow(j as i32).scale(&c);
                if j % 2 == 0 {
                    u = &u + &t;
                } else {
                    v = &v + &t;
                }
            }
            (u, v)
        }
        SeedKind::Gauss => {
            let e = AxialExpr::gauss();
            (e.mul(&AxialExpr::cos())?, e.mul(&AxialExpr::sin())?)
        }
        SeedKind::GaussFund => {
            let eq = AxialExpr::gauss().mul(&AxialExpr::q_inv(1))?;
            let u = AxialExpr::cos().mul_x0_pow(1) + AxialExpr::sin().mul_r_pow(1);
            let v = AxialExpr::sin().mul_x0_pow(1) - AxialExpr::cos().mul_r_pow(1);
            (eq.mul(&u)?, eq.mul(&v)?)
        }
    };
    let mut s = HoloSeed::new(kind.to_string(), u, v)?;
    if let SeedKind::ZPow(n) = kind {
        s.n = Some(n);
    }
    Ok(s)
}

/// `(A + ω B) P_k` in dimension `m`.
#[derive(Clone, Debug)]
pub struct AxialPair {
    pub m: usize,
    pub k: u32,
    pub a: AxialExpr,
    pub b: AxialExpr,
    pub pk: CliffPoly,
}

impl AxialPair {
    /// The two Vekua residuals
    /// `∂_{x0}A - ∂_r B - (2k+m-1)/r · B` and `∂_{x0}B + ∂_r A`.
    pub fn vekua_residual(&self) -> (AxialExpr, AxialExpr) {
        let w = rat(2 * self.k as i64 + self.m as i64 - 1);
        let first = self.a.diff(Var::X0) - self.b.diff(Var::R) - self.b.mul_r_pow(-1).scale(&w);
        let second = self.b.diff(Var::X0) + self.a.diff(Var::R);
        (first, second)
    }

    pub fn is_monogenic(&self) -> bool {
        let (f, s) = self.vekua_residual();
        f.is_zero() && s.is_zero()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        AxialPair {
            a: self.a.scale(q),
            b: self.b.scale(q),
            ..self.clone()
        }
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        if self.m != other.m || self.k != other.k || self.pk != other.pk {
            return Err(Error::DimensionMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(AxialPair {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            ..self.clone()
        })
    }

    /// Semantic equality of `(A, B)` with the same `(m, k, P_k)`.
    pub fn same_function(&self, other: &Self) -> bool {
        self.m == other.m
            && self.k == other.k
            && self.pk == other.pk
            && self.a == other.a
            && self.b == other.b
    }

    pub fn restrict_x0_zero(&self) -> (AxialExpr, AxialExpr) {
        (self.a.restrict_x0_zero(), self.b.restrict_x0_zero())
    }
}

impl fmt::Display for AxialPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "m = {}", self.m)?;
        writeln!(f, "k = {}", self.k)?;
        writeln!(f, "pk = {}", self.pk)?;
        writeln!(f, "A = {}", self.a)?;
        write!(f, "B = {}", self.b)
    }
}

/// `k + (m-1)/2`.
pub fn fueter_order(k: u32, m: usize) -> u32 {
    k + (m as u32 - 1) / 2
}

fn check_odd(m: usize) -> Result<()> {
    check_dim(m)?;
    if m % 2 == 0 {
        return Err(Error::EvenDimension(m));
    }
    Ok(())
}

fn check_pk(pk: &CliffPoly, k: u32, m: usize) -> Result<()> {
    if pk.dim() != m {
        return Err(Error::InvalidPk(format!(
            "P_k has dimension {}, expected {m}",
            pk.dim()
        )));
    }
    let report = is_homogeneous_monogenic(pk, k);
    match report.witness {
        None => Ok(()),
        Some(w) => Err(Error::InvalidPk(format!(
            "not homogeneous monogenic of degree {k}: {w}"
        ))),
    }
}

/// `Ft[f, P_k]` through the radial operators.
pub fn fueter(s: &HoloSeed, k: u32, m: usize, pk: &CliffPoly) -> Result<AxialPair> {
    check_odd(m)?;
    check_pk(pk, k, m)?;
    let order = fueter_order(k, m);
    let c = int_rat(double_factorial(2 * k as i64 + m as i64 - 1)?);
    Ok(AxialPair {
        m,
        k,
        a: s.u.d_lower(order).scale(&c),
        b: s.v.d_upper(order).scale(&c),
        pk: pk.clone(),
    })
}

/// The closed-form right-hand sides available to [`closed_form`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormId {
    /// `D_r(n){r} = (-1)^{n+1} (2n-3)!! r^{-(2n-1)}`, `n ≥ 1`
    E1,
    /// `D^r(n){x0} = (-1)^n (2n-1)!! x0 r^{-2n}`
    E1Upper,
    /// `D_r(n){x0/Q} = (-1)^n 2^n n! x0 Q^{-(n+1)}`
    E2,
    /// `D^r(n){r/Q} = (-1)^n 2^n n! r Q^{-(n+1)}`
    E3,
    /// `D_r(n){E} = (-1)^n E`
    E4,
    /// `D_r(n){cos}`, `n ≥ 1`
    E5,
    /// `D_r(n){sin}`, `n ≥ 1`
    E6,
    /// `D^r(n){sin}`
    E7,
    /// `A` of `Ft[iz, P_k]`
    IzFullA,
    /// `B` of `Ft[iz, P_k]`
    IzFullB,
    /// `A` of `Ft[1/z, P_k]`
    InvZFullA,
    /// `B` of `Ft[1/z, P_k]`
    InvZFullB,
    /// `A` of the Gaussian CK-extension for `m = 3`
    GaussM3A,
    /// `B` of the Gaussian CK-extension for `m = 3`
    GaussM3B,
}

impl ClosedFormId {
    pub const ALL: [ClosedFormId; 14] = [
        ClosedFormId::E1,
        ClosedFormId::E1Upper,
        ClosedFormId::E2,
        ClosedFormId::E3,
        ClosedFormId::E4,
        ClosedFormId::E5,
        ClosedFormId::E6,
        ClosedFormId::E7,
        ClosedFormId::IzFullA,
        ClosedFormId::IzFullB,
        ClosedFormId::InvZFullA,
        ClosedFormId::InvZFullB,
        ClosedFormId::GaussM3A,
        ClosedFormId::GaussM3B,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedFormId::E1 => "e1",
            ClosedFormId::E1Upper => "e1_upper",
            ClosedFormId::E2 => "e2",
            ClosedFormId::E3 => "e3",
            ClosedFormId::E4 => "e4",
            ClosedFormId::E5 => "e5",
            ClosedFormId::E6 => "e6",
            ClosedFormId::E7 => "e7",
            ClosedFormId::IzFullA => "ex1_full_A",
            ClosedFormId::IzFullB => "ex1_full_B",
            ClosedFormId::InvZFullA => "ex2_full_A",
            ClosedFormId::InvZFullB => "ex2_full_B",
            ClosedFormId::GaussM3A => "prop2_m3_A",
            ClosedFormId::GaussM3B => "prop2_m3_B",
        }
    }
}

impl FromStr for ClosedFormId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClosedFormId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown closed form `{s}`")))
    }
}

/// Dimension and degree for the forms that depend on them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormParams {
    pub m: usize,
    pub k: u32,
}

impl Default for FormParams {
    fn default() -> Self {
        FormParams { m: 3, k: 0 }
    }
}

/// Builds the named closed form exactly.
pub fn closed_form(id: ClosedFormId, n: u32, params: FormParams) -> Result<AxialExpr> {
    let sign = parity(n);
    let two_n_fact = || int_rat(BigInt::from(2).pow(n) * factorial(n));
    let needs_n = |what: &str| Error::IndexOutOfRange(format!("{what} is asserted for n ≥ 1 only"));
    match id {
        ClosedFormId::E1 => {
            if n == 0 {
                return Err(needs_n("e1"));
            }
            let c = -sign * int_rat(double_factorial(2 * n as i64 - 3)?);
            Ok(AxialExpr::r_pow(-(2 * n as i32 - 1)).scale(&c))
        }
        ClosedFormId::E1Upper => {
            let c = sign * int_rat(double_factorial(2 * n as i64 - 1)?);
            Ok(AxialExpr::x0().mul_r_pow(-2 * n as i32).scale(&c))
        }
        ClosedFormId::E2 => Ok(AxialExpr::x0()
            .mul(&AxialExpr::q_inv(n + 1))?
            .scale(&(sign * two_n_fact()))),
        ClosedFormId::E3 => Ok(AxialExpr::r()
            .mul(&AxialExpr::q_inv(n + 1))?
            .scale(&(sign * two_n_fact()))),
        ClosedFormId::E4 => Ok(AxialExpr::gauss().scale(&sign)),
        ClosedFormId::E5 | ClosedFormId::E6 => {
            if n == 0 {
                return Err(needs_n(id.name()));
            }
            let table = CoeffTableA::build(n);
            let mut out = AxialExpr::zero();
            for nu in 1..=n {
                let shifted = if id == ClosedFormId::E5 {
                    AxialExpr::cos_shift(nu)
                } else {
                    AxialExpr::sin_shift(nu)
                };
                let t = shifted.mul_x0_pow(nu).mul_r_pow(nu as i32 - 2 * n as i32);
                out = &out + &t.scale(&int_rat(table.get(n, nu)?));
            }
            Ok(out)
        }
        ClosedFormId::E7 => {
            let table = CoeffTableA::build(n + 1);
            let mut out = AxialExpr::zero();
            for nu in 0..=n {
                let t = AxialExpr::sin_shift(nu)
                    .mul_x0_pow(nu)
                    .mul_r_pow(nu as i32 - 2 * n as i32);
                out = &out + &t.scale(&int_rat(table.get(n + 1, nu + 1)?));
            }
            Ok(out)
        }
        ClosedFormId::IzFullA | ClosedFormId::IzFullB => {
            let FormParams { m, k } = params;
            check_odd(m)?;
            let w = 2 * k as i64 + m as i64;
            if w - 4 < -1 {
                return Err(Error::IndexOutOfRange(format!(
                    "the iz constant needs (2k+m-4)!! with 2k+m-4 = {} < -1",
                    w - 4
                )));
            }
            let c = parity(fueter_order(k, m))
                * int_rat(double_factorial(w - 1)? * double_factorial(w - 4)?);
            if id == ClosedFormId::IzFullA {
                Ok(AxialExpr::r_pow(-(w as i32 - 2)).scale(&c))
            } else {
                Ok(AxialExpr::x0()
                    .mul_r_pow(-(w as i32 - 1))
                    .scale(&(c * rat(w - 2))))
            }
        }
        ClosedFormId::InvZFullA | ClosedFormId::InvZFullB => {
            let FormParams { m, k } = params;
            check_odd(m)?;
            let w = 2 * k as i64 + m as i64;
            let df = int_rat(double_factorial(w - 1)?);
            let c = parity(fueter_order(k, m)) * &df * &df;
            let q = AxialExpr::q_inv(((w + 1) / 2) as u32);
            if id == ClosedFormId::InvZFullA {
                Ok(q.mul_x0_pow(1).scale(&c))
            } else {
                Ok(q.mul_r_pow(1).scale(&-c))
            }
        }
        ClosedFormId::GaussM3A => {
            let inner = AxialExpr::cos() + AxialExpr::sin().mul_x0_pow(1).mul_r_pow(-1);
            AxialExpr::gauss().mul(&inner)
        }
        ClosedFormId::GaussM3B => {
            let inner = AxialExpr::sin() + AxialExpr::sin().mul_r_pow(-2)
                - AxialExpr::cos().mul_x0_pow(1).mul_r_pow(-1);
            AxialExpr::gauss().mul(&inner)
        }
    }
}

/// `Δ_x^{k+(m-1)/2}` applied to `Σ_ν C(n,ν) x0^{n-ν} x̲^ν · P_k`, the
/// polynomial image of `(u + ω v) P_k` for the seed `z^n`.
pub fn fueter_via_laplacian(n: u32, k: u32, m: usize, pk: &CliffPoly) -> Result<CliffPoly> {
    check_odd(m)?;
    check_pk(pk, k, m)?;
    let x = CliffPoly::xvec(m);
    let mut xpow = CliffPoly::one(m);
    let mut w = CliffPoly::zero(m);
    for nu in 0..=n {
        let x0 = CliffPoly::monomial(
            x0_exps(m, n - nu),
            Multivector::scalar(m, int_rat(binomial(n, nu))),
        )?;
        w = &w + &(&x0 * &xpow);
        xpow = &xpow * &x;
    }
    let mut out = &w * pk;
    for _ in 0..fueter_order(k, m) {
        out = out.laplacian(true);
    }
    Ok(out)
}

fn x0_exps(m: usize, a: u32) -> ExponentVector {
    let mut e = vec![0; m + 1];
    e[0] = a;
    ExponentVector::new(e)
}

/// Rewrites a polynomial axial pair as a [`CliffPoly`], using
/// `r^{2s} = (Σ x_j^2)^s` and `ω r^{2s+1} = x̲ (Σ x_j^2)^s`.
pub fn axial_to_poly(p: &AxialPair) -> Result<CliffPoly> {
    let m = p.m;
    let r2 = CliffPoly::r_sq(m);
    let x = CliffPoly::xvec(m);
    let mut out = CliffPoly::zero(m);
    for (part, odd) in [(&p.a, false), (&p.b, true)] {
        for t in part.terms() {
            let k = t.key;
            let plain = !k.exp && k.trig == crate::axial::Trig::None && k.q_pow == 0;
            let parity_ok = k.r_pow >= 0 && (k.r_pow % 2 == 1) == odd;
            if !plain || !parity_ok {
                let which = if odd { "B" } else { "A" };
                return Err(Error::NotPolynomial(format!(
                    "{which} contains the term {t}"
                )));
            }
            let s = (k.r_pow / 2) as u32;
            let coeff = Multivector::scalar(m, t.coeff.clone());
            let mut term = CliffPoly::monomial(x0_exps(m, k.x0_pow), coeff)?;
            for _ in 0..s {
                term = &term * &r2;
            }
            if odd {
                term = &term * &x;
            }
            out = &out + &term;
        }
    }
    Ok(&out * &p.pk)
}

/// The three routes to `Ft[z^n, P_k]` and the constant linking them.
#[derive(Clone, Debug)]
pub struct TriangleReport {
    pub n: u32,
    pub k: u32,
    pub m: usize,
    pub radial_route: CliffPoly,
    pub laplacian_route: CliffPoly,
    /// `CK[x̲^{n-(2k+m-1)} P_k]`, absent below the degree threshold.
    pub ck_route: Option<CliffPoly>,
    /// `c` with `Ft = c · CK[...]`, fixed by the `x0 = 0` restriction.
    pub constant: Option<Rational>,
    pub holds: bool,
}

pub fn triangle_check(n: u32, k: u32, m: usize, pk: &CliffPoly) -> Result<TriangleReport> {
    let radial = axial_to_poly(&fueter(&seed(SeedKind::ZPow(n))?, k, m, pk)?)?;
    let laplacian = fueter_via_laplacian(n, k, m, pk)?;
    let threshold = 2 * k + m as u32 - 1;
    let (ck_route, constant, ck_ok) = if n < threshold {
        (None, None, radial.is_zero())
    } else {
        let f = &CliffPoly::xvec_pow(m, n - threshold) * pk;
        let ck = ck_extend_poly(&f)?;
        let restricted = radial.restrict_x0_zero();
        let c = f.terms().next().and_then(|(e, fc)| {
            let (blade, q) = fc.terms().next()?;
            let rc = restricted
                .coeff(e)
                .map(|c| c.coeff(blade))
                .unwrap_or_else(Rational::zero);
            Some(rc / q)
        });
        let ok = match &c {
            Some(c) => radial == ck.scale(c),
            None => false,
        };
        (Some(ck), c, ok)
    };
    let holds = radial == laplacian && ck_ok;
    Ok(TriangleReport {
        n,
        k,
        m,
        radial_route: radial,
        laplacian_route: laplacian,
        ck_route,
        constant,
        holds,
    })
}

/// `(x0 Q^{-(m+1)/2}, -r Q^{-(m+1)/2})`, the axial form of `x̄ / |x|^{m+1}`.
pub fn cauchy_kernel_pair(m: usize) -> Result<AxialPair> {
    check_odd(m)?;
    let q = AxialExpr::q_inv((m as u32 + 1) / 2);
    Ok(AxialPair {
        m,
        k: 0,
        a: q.mul_x0_pow(1),
        b: -&q.mul_r_pow(1),
        pk: CliffPoly::one(m),
    })
}

/// `(-1)^{(m-1)/2} / (m-1)!!`, the factor turning `Ft[exp(z^2/2), 1]` into the
/// CK-extension of `exp(-|x̲|^2/2)`.
pub fn gaussian_ck_scale(m: usize) -> Result<Rational> {
    check_odd(m)?;
    let order = fueter_order(0, m);
    Ok(parity(order) / int_rat(double_factorial(m as i64 - 1)?))
}

/// The CK-extension of `exp(-|x̲|^2/2)` off the axis, as a scaled transform.
pub fn gaussian_ck_pair(m: usize) -> Result<AxialPair> {
    let ft = fueter(&seed(SeedKind::Gauss)?, 0, m, &CliffPoly::one(m))?;
    Ok(ft.scale(&gaussian_ck_scale(m)?))
}

/// `(-1)^{(m-1)/2} ((m-1)!!)^2`, the factor in front of `x̄/|x|^{m+1}` in
/// `Ft[exp(z^2/2)/z, 1]`.
pub fn fundamental_scale(m: usize) -> Result<Rational> {
    check_odd(m)?;
    let df = int_rat(double_factorial(m as i64 - 1)?);
    Ok(parity(fueter_order(0, m)) * &df * &df)
}

/// `Ft[exp(z^2/2)/z, 1]` divided by [`fundamental_scale`], so that it reads
/// `x̄/|x|^{m+1} + M(x)`.
pub fn gaussian_fundamental_pair(m: usize) -> Result<AxialPair> {
    let ft = fueter(&seed(SeedKind::GaussFund)?, 0, m, &CliffPoly::one(m))?;
    Ok(ft.scale(&(Rational::one() / fundamental_scale(m)?)))
}

/// The entire part `M = E - x̄/|x|^{m+1}` of the normalized fundamental solution.
pub fn entire_part_pair(m: usize) -> Result<AxialPair> {
    gaussian_fundamental_pair(m)?.try_sub(&cauchy_kernel_pair(m)?)
}
