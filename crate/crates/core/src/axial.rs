//! Exact calculus on functions of `(x0, r)`.
//!
//! Every expression is a finite sum of terms
//!
//! ```text
//! q · x0^a · r^b · Q^-p · E^g · T
//! ```
//!
//! with `q` rational, `a ≥ 0`, `b ∈ Z`, `p ≥ 0`, `Q = x0^2 + r^2`,
//! `E = exp((x0^2 - r^2)/2)`, `g ∈ {0, 1}` and `T ∈ {1, cos(x0 r), sin(x0 r)}`.
//! The set is closed under `∂_{x0}`, `∂_r` and multiplication by powers of
//! `x0` and `r`, which is all the radial operators `D_r(n)` and `D^r(n)` need.
//!
//! Term keys are not a normal form (`x0^2 Q^-1 + r^2 Q^-1 = 1`), so equality
//! is decided by clearing denominators inside each of the six
//! `(E^g, T)` classes and comparing polynomial numerators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, int_rat, rat, to_f64, Rational};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trig {
    #[default]
    None,
    Cos,
    Sin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X0,
    R,
}

/// Everything about a term except its coefficient.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub exp: bool,
    pub trig: Trig,
    pub q_pow: u32,
    pub x0_pow: u32,
    pub r_pow: i32,
}

impl TermKey {
    pub fn new(x0_pow: u32, r_pow: i32, q_pow: u32, exp: bool, trig: Trig) -> Self {
        TermKey {
            exp,
            trig,
            q_pow,
            x0_pow,
            r_pow,
        }
    }

    fn class(self) -> (bool, Trig) {
        (self.exp, self.trig)
    }
}

/// A single term `q · x0^a · r^b · Q^-p · E^g · T`.
#[derive(Clone, Debug, PartialEq)]
pub struct AxialTerm {
    pub coeff: Rational,
    pub key: TermKey,
}

/// A finite sum of [`AxialTerm`]s, merged on equal keys.
#[derive(Clone, Debug, Default)]
pub struct AxialExpr {
    terms: BTreeMap<TermKey, Rational>,
}

impl AxialExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(coeff: Rational, key: TermKey) -> Self {
        let mut e = Self::zero();
        e.add_term(key, coeff);
        e
    }

    pub fn constant(q: Rational) -> Self {
        Self::term(q, TermKey::default())
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn x0() -> Self {
        Self::term(rat(1), TermKey::new(1, 0, 0, false, Trig::None))
    }

    pub fn r() -> Self {
        Self::r_pow(1)
    }

    pub fn r_pow(b: i32) -> Self {
        Self::term(rat(1), TermKey::new(0, b, 0, false, Trig::None))
    }

    pub fn x0_pow(a: u32) -> Self {
        Self::term(rat(1), TermKey::new(a, 0, 0, false, Trig::None))
    }

    /// `Q^-p = (x0^2 + r^2)^-p`.
    pub fn q_inv(p: u32) -> Self {
        Self::term(rat(1), TermKey::new(0, 0, p, false, Trig::None))
    }

    /// `E = exp((x0^2 - r^2)/2)`.
    pub fn gauss() -> Self {
        Self::term(rat(1), TermKey::new(0, 0, 0, true, Trig::None))
    }

    pub fn cos() -> Self {
        Self::term(rat(1), TermKey::new(0, 0, 0, false, Trig::Cos))
    }

    pub fn sin() -> Self {
        Self::term(rat(1), TermKey::new(0, 0, 0, false, Trig::Sin))
    }

    /// `cos(x0 r + ν π/2)` folded into `±cos` / `±sin`.
    pub fn cos_shift(nu: u32) -> Self {
        match nu % 4 {
            0 => Self::cos(),
            1 => -&Self::sin(),
            2 => -&Self::cos(),
            _ => Self::sin(),
        }
    }

    /// `sin(x0 r + ν π/2)` folded into `±cos` / `±sin`.
    pub fn sin_shift(nu: u32) -> Self {
        match nu % 4 {
            0 => Self::sin(),
            1 => Self::cos(),
            2 => -&Self::sin(),
            _ => -&Self::cos(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = AxialTerm>>(terms: I) -> Self {
        let mut e = Self::zero();
        for t in terms {
            e.add_term(t.key, t.coeff);
        }
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = AxialTerm> + '_ {
        self.terms.iter().map(|(k, q)| AxialTerm {
            coeff: q.clone(),
            key: *k,
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// No stored terms. Semantic zero is [`AxialExpr::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: TermKey, q: Rational) {
        if q.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(old) => {
                let new = old + q;
                if !new.is_zero() {
                    self.terms.insert(key, new);
                }
            }
            None => {
                self.terms.insert(key, q);
            }
        }
    }

    fn map_terms(&self, f: impl Fn(TermKey, &Rational) -> (TermKey, Rational)) -> Self {
        let mut out = Self::zero();
        for (k, q) in &self.terms {
            let (k, q) = f(*k, q);
            out.add_term(k, q);
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map_terms(|k, q| (k, q * s))
    }

    pub fn mul_x0_pow(&self, a: u32) -> Self {
        self.map_terms(|mut k, q| {
            k.x0_pow += a;
            (k, q.clone())
        })
    }

    pub fn mul_r_pow(&self, b: i32) -> Self {
        self.map_terms(|mut k, q| {
            k.r_pow += b;
            (k, q.clone())
        })
    }

    /// Product of two expressions; fails when the result would need `E^2` or
    /// a product of two trigonometric factors.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (ka, qa) in &self.terms {
            for (kb, qb) in &other.terms {
                if ka.exp && kb.exp {
                    return Err(Error::UnsupportedProduct("E · E".into()));
                }
                let trig = match (ka.trig, kb.trig) {
                    (Trig::None, t) | (t, Trig::None) => t,
                    _ => return Err(Error::UnsupportedProduct("trig · trig".into())),
                };
                let key = TermKey {
                    exp: ka.exp || kb.exp,
                    trig,
                    q_pow: ka.q_pow + kb.q_pow,
                    x0_pow: ka.x0_pow + kb.x0_pow,
                    r_pow: ka.r_pow + kb.r_pow,
                };
                out.add_term(key, qa * qb);
            }
        }
        Ok(out)
    }

    /// Exact partial derivative in `x0` or `r`.
    pub fn diff(&self, var: Var) -> Self {
        let mut out = Self::zero();
        for (k, q) in &self.terms {
            let k = *k;
            match var {
                Var::X0 => {
                    if k.x0_pow > 0 {
                        out.add_term(
                            TermKey {
                                x0_pow: k.x0_pow - 1,
                                ..k
                            },
                            q * rat(k.x0_pow as i64),
                        );
                    }
                    if k.q_pow > 0 {
                        let key = TermKey {
                            x0_pow: k.x0_pow + 1,
                            q_pow: k.q_pow + 1,
                            ..k
                        };
                        out.add_term(key, q * rat(-2 * k.q_pow as i64));
                    }
                    if k.exp {
                        out.add_term(
                            TermKey {
                                x0_pow: k.x0_pow + 1,
                                ..k
                            },
                            q.clone(),
                        );
                    }
                    match k.trig {
                        Trig::None => {}
                        Trig::Cos => out.add_term(
                            TermKey {
                                r_pow: k.r_pow + 1,
                                trig: Trig::Sin,
                                ..k
                            },
                            -q.clone(),
                        ),
                        Trig::Sin => out.add_term(
                            TermKey {
                                r_pow: k.r_pow + 1,
                                trig: Trig::Cos,
                                ..k
                            },
                            q.clone(),
                        ),
                    }
                }
                Var::R => {
                    if k.r_pow != 0 {
                        out.add_term(
                            TermKey {
                                r_pow: k.r_pow - 1,
                                ..k
                            },
                            q * rat(k.r_pow as i64),
                        );
                    }
                    if k.q_pow > 0 {
                        let key = TermKey {
                            r_pow: k.r_pow + 1,
                            q_pow: k.q_pow + 1,
                            ..k
                        };
                        out.add_term(key, q * rat(-2 * k.q_pow as i64));
                    }
                    if k.exp {
                        out.add_term(
                            TermKey {
                                r_pow: k.r_pow + 1,
                                ..k
                            },
                            -q.clone(),
                        );
                    }
                    match k.trig {
                        Trig::None => {}
                        Trig::Cos => out.add_term(
                            TermKey {
                                x0_pow: k.x0_pow + 1,
                                trig: Trig::Sin,
                                ..k
                            },
                            -q.clone(),
                        ),
                        Trig::Sin => out.add_term(
                            TermKey {
                                x0_pow: k.x0_pow + 1,
                                trig: Trig::Cos,
                                ..k
                            },
                            q.clone(),
                        ),
                    }
                }
            }
        }
        out
    }

    /// `D_r(n){f} = (r^-1 ∂_r)^n f`.
    pub fn d_lower(&self, n: u32) -> Self {
        (0..n).fold(self.clone(), |f, _| f.diff(Var::R).mul_r_pow(-1))
    }

    /// `D^r(n){f} = ∂_r(D^r(n-1){f} / r)`.
    pub fn d_upper(&self, n: u32) -> Self {
        (0..n).fold(self.clone(), |f, _| f.mul_r_pow(-1).diff(Var::R))
    }

    /// Identically zero on `r > 0`.
    pub fn is_zero(&self) -> bool {
        self.class_numerators()
            .values()
            .all(|num| num.values().all(Zero::is_zero))
    }

    /// Semantic equality on `r > 0`.
    pub fn equals(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }

    /// Per `(E^g, T)` class: the numerator polynomial in `(x0, r)` obtained by
    /// multiplying the class by `r^B Q^P` with `B`, `P` the largest
    /// denominators present.
    fn class_numerators(&self) -> BTreeMap<(bool, Trig), BTreeMap<(u32, u32), Rational>> {
        let mut classes: BTreeMap<(bool, Trig), Vec<(TermKey, &Rational)>> = BTreeMap::new();
        for (k, q) in &self.terms {
            classes.entry(k.class()).or_default().push((*k, q));
        }
        let mut out = BTreeMap::new();
        for (class, terms) in classes {
            let b_clear = terms
                .iter()
                .map(|(k, _)| (-k.r_pow).max(0))
                .max()
                .unwrap_or(0);
            let p_clear = terms.iter().map(|(k, _)| k.q_pow).max().unwrap_or(0);
            let mut num: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
            for (k, q) in terms {
                let r_base = (k.r_pow + b_clear) as u32;
                let e = p_clear - k.q_pow;
                // Q^e = Σ_i C(e, i) x0^{2i} r^{2(e-i)}
                for i in 0..=e {
                    let c = int_rat(binomial(e, i)) * q;
                    let key = (k.x0_pow + 2 * i, r_base + 2 * (e - i));
                    *num.entry(key).or_insert_with(Rational::zero) += c;
                }
            }
            out.insert(class, num);
        }
        out
    }

    /// Restriction to `x0 = 0`: `cos → 1`, `sin → 0`, `Q → r^2`; `E` then
    /// stands for `exp(-r^2/2)`.
    pub fn restrict_x0_zero(&self) -> Self {
        let mut out = Self::zero();
        for (k, q) in &self.terms {
            if k.x0_pow > 0 || k.trig == Trig::Sin {
                continue;
            }
            let key = TermKey {
                exp: k.exp,
                trig: Trig::None,
                q_pow: 0,
                x0_pow: 0,
                r_pow: k.r_pow - 2 * k.q_pow as i32,
            };
            out.add_term(key, q.clone());
        }
        out
    }

    /// `f64` evaluation with every factor computed as written.
    pub fn eval(&self, x0: f64, r: f64) -> Result<f64> {
        self.compile().eval(x0, r)
    }

    /// Freezes the coefficients to `f64` for repeated evaluation.
    pub fn compile(&self) -> CompiledExpr {
        CompiledExpr {
            terms: self.terms.iter().map(|(k, q)| (to_f64(q), *k)).collect(),
        }
    }
}

/// An [`AxialExpr`] with `f64` coefficients.
#[derive(Clone, Debug)]
pub struct CompiledExpr {
    terms: Vec<(f64, TermKey)>,
}

impl CompiledExpr {
    pub fn eval(&self, x0: f64, r: f64) -> Result<f64> {
        if r < 0.0 || r.is_nan() {
            return Err(Error::Domain(format!("r = {r} must be nonnegative")));
        }
        let q = x0 * x0 + r * r;
        let e = ((x0 * x0 - r * r) / 2.0).exp();
        let (s, c) = (x0 * r).sin_cos();
        let mut acc = 0.0;
        for (coeff, k) in &self.terms {
            if k.r_pow < 0 && r == 0.0 {
                return Err(Error::Domain("negative power of r at r = 0".into()));
            }
            if k.q_pow > 0 && q == 0.0 {
                return Err(Error::Domain(
                    "negative power of x0^2 + r^2 at the origin".into(),
                ));
            }
            let mut v = coeff * x0.powi(k.x0_pow as i32) * r.powi(k.r_pow) / q.powi(k.q_pow as i32);
            if k.exp {
                v *= e;
            }
            match k.trig {
                Trig::None => {}
                Trig::Cos => v *= c,
                Trig::Sin => v *= s,
            }
            acc += v;
        }
        Ok(acc)
    }
}

impl PartialEq for AxialExpr {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Add for &AxialExpr {
    type Output = AxialExpr;

    fn add(self, rhs: Self) -> AxialExpr {
        let mut out = self.clone();
        for (k, q) in &rhs.terms {
            out.add_term(*k, q.clone());
        }
        out
    }
}

impl Sub for &AxialExpr {
    type Output = AxialExpr;

    fn sub(self, rhs: Self) -> AxialExpr {
        let mut out = self.clone();
        for (k, q) in &rhs.terms {
            out.add_term(*k, -q.clone());
        }
        out
    }
}

impl Neg for &AxialExpr {
    type Output = AxialExpr;

    fn neg(self) -> AxialExpr {
        self.scale(&rat(-1))
    }
}

impl Add for AxialExpr {
    type Output = AxialExpr;

    fn add(self, rhs: Self) -> AxialExpr {
        &self + &rhs
    }
}

impl Sub for AxialExpr {
    type Output = AxialExpr;

    fn sub(self, rhs: Self) -> AxialExpr {
        &self - &rhs
    }
}

impl fmt::Display for AxialTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.key;
        write!(f, "{}", self.coeff)?;
        match k.x0_pow {
            0 => {}
            1 => write!(f, "*x0")?,
            a => write!(f, "*x0^{a}")?,
        }
        match k.r_pow {
            0 => {}
            1 => write!(f, "*r")?,
            b => write!(f, "*r^{b}")?,
        }
        if k.q_pow > 0 {
            write!(f, "*Q^-{}", k.q_pow)?;
        }
        if k.exp {
            write!(f, "*E")?;
        }
        match k.trig {
            Trig::None => {}
            Trig::Cos => write!(f, "*cos")?,
            Trig::Sin => write!(f, "*sin")?,
        }
        Ok(())
    }
}

impl fmt::Display for AxialExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, mut t) in self.terms().enumerate() {
            let negative = t.coeff.is_negative();
            if negative {
                t.coeff = -t.coeff;
            }
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for AxialExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = AxialExpr::zero();
        let mut negate = false;
        let mut expect_term = true;
        for tok in s.split_whitespace() {
            match tok {
                "+" | "-" if !expect_term => {
                    negate = tok == "-";
                    expect_term = true;
                }
                _ if expect_term => {
                    let t = parse_term(tok)?;
                    out.add_term(t.key, if negate { -t.coeff } else { t.coeff });
                    negate = false;
                    expect_term = false;
                }
                _ => return Err(Error::Parse(format!("unexpected token `{tok}`"))),
            }
        }
        if expect_term {
            return Err(Error::Parse(format!("incomplete expression `{s}`")));
        }
        Ok(out)
    }
}

fn parse_term(tok: &str) -> Result<AxialTerm> {
    let bad = |what: &str| Error::Parse(format!("bad {what} in term `{tok}`"));
    let mut parts = tok.split('*');
    let coeff_str = parts.next().unwrap_or_default();
    let coeff: Rational = coeff_str.parse().map_err(|_| bad("coefficient"))?;
    let mut key = TermKey::default();
    for factor in parts {
        let (base, pow) = match factor.rsplit_once('^') {
            Some((b, p)) => (b, Some(p.parse::<i64>().map_err(|_| bad("exponent"))?)),
            None => (factor, None),
        };
        match (base, pow) {
            ("x0", p) => {
                let p = p.unwrap_or(1);
                if p < 0 {
                    return Err(bad("x0 exponent"));
                }
                key.x0_pow += p as u32;
            }
            ("r", p) => key.r_pow += p.unwrap_or(1) as i32,
            ("Q" | "(x0^2+r^2)", Some(p)) if p < 0 => key.q_pow += (-p) as u32,
            ("E", None) if !key.exp => key.exp = true,
            ("cos", None) if key.trig == Trig::None => key.trig = Trig::Cos,
            ("sin", None) if key.trig == Trig::None => key.trig = Trig::Sin,
            _ => return Err(bad("factor")),
        }
    }
    Ok(AxialTerm { coeff, key })
}

/// `(-1)^n` as a rational.
pub(crate) fn parity(n: u32) -> Rational {
    if n % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}
