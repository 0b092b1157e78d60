//! Arithmetic in the real Clifford algebra `R_{0,m}`.
//!
//! Basis blades `e_A` are stored as bit masks over `{1, ..., m}` (bit `j - 1`
//! stands for `e_j`), always in ascending index order. Multivectors keep a
//! sparse map from blade to coefficient with zero coefficients removed, so
//! structural equality coincides with algebraic equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Num;

use crate::error::{Error, Result};
use crate::exact::{to_f64, Rational};

/// Largest supported dimension; `2^16` blades.
pub const MAX_DIM: usize = 16;

/// Coefficient types a [`Multivector`] can carry.
pub trait Coeff:
    Clone + Num + Neg<Output = Self> + fmt::Debug + fmt::Display + FromStr + Send + Sync
{
}

impl<T> Coeff for T where
    T: Clone + Num + Neg<Output = T> + fmt::Debug + fmt::Display + FromStr + Send + Sync
{
}

pub type ExactMultivector = Multivector<Rational>;
pub type NumMultivector = Multivector<f64>;

pub(crate) fn check_dim(m: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&m) {
        Ok(())
    } else {
        Err(Error::InvalidDimension(m))
    }
}

/// A basis blade `e_A`, `A ⊂ {1, ..., m}`; the empty mask is the identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BladeMask(u32);

impl BladeMask {
    pub const SCALAR: BladeMask = BladeMask(0);

    pub fn new(bits: u32, m: usize) -> Result<Self> {
        if m > MAX_DIM || (m < 32 && bits >> m != 0) {
            return Err(Error::InvalidBlade { bits, m });
        }
        Ok(BladeMask(bits))
    }

    /// The generator `e_j` (1-based).
    pub fn generator(j: usize) -> Self {
        debug_assert!((1..=MAX_DIM).contains(&j));
        BladeMask(1 << (j - 1))
    }

    pub fn from_indices(indices: &[usize], m: usize) -> Result<Self> {
        let mut bits = 0u32;
        let mut last = 0;
        for &j in indices {
            if j == 0 || j > m || j <= last {
                return Err(Error::Parse(format!(
                    "blade indices {indices:?} must be strictly ascending within 1..={m}"
                )));
            }
            bits |= 1 << (j - 1);
            last = j;
        }
        Ok(BladeMask(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    /// 1-based generator indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1).map(|i| i + 1)
    }

    /// Sign and blade of `e_A e_B`.
    ///
    /// Each pair `(i in A, j in B)` with `i > j` costs one transposition, and
    /// each shared generator contracts through `e_j^2 = -1`.
    pub fn product(self, other: BladeMask) -> (bool, BladeMask) {
        let mut a = self.0 >> 1;
        let mut swaps = 0u32;
        while a != 0 {
            swaps += (a & other.0).count_ones();
            a >>= 1;
        }
        swaps += (self.0 & other.0).count_ones();
        (swaps % 2 == 1, BladeMask(self.0 ^ other.0))
    }

    /// Whether conjugation flips this blade: `(-1)^{k(k+1)/2}`.
    pub fn conjugate_flips(self) -> bool {
        let k = self.grade();
        (k * (k + 1) / 2) % 2 == 1
    }

    pub(crate) fn render(self, m: usize) -> String {
        let idx: Vec<String> = self.indices().map(|j| j.to_string()).collect();
        if m >= 10 {
            format!("e{}", idx.join("."))
        } else {
            format!("e{}", idx.concat())
        }
    }

    pub(crate) fn parse_token(tok: &str, m: usize) -> Result<Self> {
        let body = tok
            .strip_prefix('e')
            .ok_or_else(|| Error::Parse(format!("expected blade, found `{tok}`")))?;
        let indices: Vec<usize> = if body.contains('.') {
            body.split('.')
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad blade `{tok}`")))
                })
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad blade `{tok}`")))
                })
                .collect::<Result<_>>()?
        };
        if indices.is_empty() {
            return Err(Error::Parse(format!("empty blade `{tok}`")));
        }
        BladeMask::from_indices(&indices, m)
    }
}

/// Element `Σ_A a_A e_A` of `R_{0,m}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<S> {
    dim: usize,
    coeffs: BTreeMap<BladeMask, S>,
}

impl<S: Coeff> Multivector<S> {
    pub fn zero(m: usize) -> Self {
        debug_assert!(m <= MAX_DIM);
        Multivector {
            dim: m,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(m: usize, s: S) -> Self {
        Self::blade(m, BladeMask::SCALAR, s)
    }

    pub fn one(m: usize) -> Self {
        Self::scalar(m, S::one())
    }

    pub fn blade(m: usize, mask: BladeMask, s: S) -> Self {
        let mut mv = Self::zero(m);
        mv.add_term(mask, s);
        mv
    }

    /// The generator `e_j`, 1-based.
    pub fn generator(m: usize, j: usize) -> Self {
        Self::blade(m, BladeMask::generator(j), S::one())
    }

    /// The vector `Σ_j x_j e_j`.
    pub fn vector(xs: &[S]) -> Self {
        let m = xs.len();
        let mut mv = Self::zero(m);
        for (j, x) in xs.iter().enumerate() {
            mv.add_term(BladeMask::generator(j + 1), x.clone());
        }
        mv
    }

    pub fn from_terms<I>(m: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BladeMask, S)>,
    {
        check_dim(m)?;
        let mut mv = Self::zero(m);
        for (mask, s) in terms {
            BladeMask::new(mask.bits(), m)?;
            mv.add_term(mask, s);
        }
        Ok(mv)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, mask: BladeMask) -> Option<&S> {
        self.coeffs.get(&mask)
    }

    /// Coefficient of a blade, zero if absent.
    pub fn coeff(&self, mask: BladeMask) -> S {
        self.coeffs.get(&mask).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (BladeMask, &S)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    /// The set of grades carrying a nonzero coefficient.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.coeffs.keys().map(|b| b.grade()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    pub(crate) fn add_term(&mut self, mask: BladeMask, s: S) {
        if s.is_zero() {
            return;
        }
        match self.coeffs.remove(&mask) {
            Some(old) => {
                let new = old + s;
                if !new.is_zero() {
                    self.coeffs.insert(mask, new);
                }
            }
            None => {
                self.coeffs.insert(mask, s);
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
        for (mask, s) in other.terms() {
            out.add_term(mask, s.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.dim);
        for (mask, c) in self.terms() {
            out.add_term(mask, c.clone() * s.clone());
        }
        out
    }

    /// Geometric product.
    pub fn gp(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let (neg, mask) = ma.product(mb);
                let c = ca.clone() * cb.clone();
                out.add_term(mask, if neg { -c } else { c });
            }
        }
        Ok(out)
    }

    pub fn conjugate(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (mask, c) in self.terms() {
            out.add_term(
                mask,
                if mask.conjugate_flips() {
                    -c.clone()
                } else {
                    c.clone()
                },
            );
        }
        out
    }

    /// `[a]_k`.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.dim {
            return Err(Error::GradeOutOfRange {
                grade: k,
                m: self.dim,
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(mask, _)| mask.grade() == k)
            .map(|(mask, c)| (*mask, c.clone()))
            .collect();
        Ok(Multivector {
            dim: self.dim,
            coeffs,
        })
    }

    /// `|a|^2 = [a ā]_0 = Σ_A a_A^2`.
    pub fn norm_sq(&self) -> S {
        self.coeffs
            .values()
            .fold(S::zero(), |acc, c| acc + c.clone() * c.clone())
    }

    pub fn scalar_part(&self) -> S {
        self.coeff(BladeMask::SCALAR)
    }

    pub fn map<T: Coeff>(&self, f: impl Fn(&S) -> T) -> Multivector<T> {
        let mut out = Multivector::<T>::zero(self.dim);
        for (mask, c) in self.terms() {
            out.add_term(mask, f(c));
        }
        out
    }

    /// Parses the text form produced by `Display`, e.g. `3 - 2*e1 + 1*e12`.
    pub fn parse(m: usize, s: &str) -> Result<Self> {
        check_dim(m)?;
        let mut mv = Self::zero(m);
        let mut negate = false;
        let mut expect_term = true;
        for tok in s.split_whitespace() {
            match tok {
                "+" | "-" if !expect_term => {
                    negate = tok == "-";
                    expect_term = true;
                }
                _ if expect_term => {
                    let (mask, c) = parse_mv_term::<S>(tok, m)?;
                    mv.add_term(mask, if negate { -c } else { c });
                    negate = false;
                    expect_term = false;
                }
                _ => return Err(Error::Parse(format!("unexpected token `{tok}`"))),
            }
        }
        if expect_term {
            return Err(Error::Parse(format!("incomplete multivector `{s}`")));
        }
        Ok(mv)
    }
}

fn parse_mv_term<S: Coeff>(tok: &str, m: usize) -> Result<(BladeMask, S)> {
    let parse_coeff = |c: &str| {
        c.parse::<S>()
            .map_err(|_| Error::Parse(format!("bad coefficient `{c}`")))
    };
    match tok.split_once('*') {
        Some((c, b)) => Ok((BladeMask::parse_token(b, m)?, parse_coeff(c)?)),
        None if tok.starts_with('e') => Ok((BladeMask::parse_token(tok, m)?, S::one())),
        None if tok.starts_with("-e") => Ok((BladeMask::parse_token(&tok[1..], m)?, -S::one())),
        None => Ok((BladeMask::SCALAR, parse_coeff(tok)?)),
    }
}

impl Multivector<Rational> {
    /// Explicit lossy conversion to the `f64` variant.
    pub fn to_f64(&self) -> NumMultivector {
        self.map(to_f64)
    }
}

impl Multivector<f64> {
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut keys: Vec<BladeMask> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .map(|k| (self.coeff(k) - other.coeff(k)).abs())
            .fold(0.0, f64::max)
    }
}

impl<S: Coeff + PartialOrd> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mask, c)) in self.terms().enumerate() {
            let negative = *c < S::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mask.is_scalar() {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{}", mask.render(self.dim))?;
            }
        }
        Ok(())
    }
}

impl<S: Coeff> Add for &Multivector<S> {
    type Output = Multivector<S>;

    /// # Panics
    /// On dimension mismatch.
    fn add(self, rhs: Self) -> Multivector<S> {
        self.try_add(rhs)
            .expect("multivector dimensions must agree")
    }
}

impl<S: Coeff> Sub for &Multivector<S> {
    type Output = Multivector<S>;

    fn sub(self, rhs: Self) -> Multivector<S> {
        self.try_add(&-rhs)
            .expect("multivector dimensions must agree")
    }
}

impl<S: Coeff> Neg for &Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        self.map(|c| -c.clone())
    }
}

impl<S: Coeff> Mul for &Multivector<S> {
    type Output = Multivector<S>;

    fn mul(self, rhs: Self) -> Multivector<S> {
        self.gp(rhs).expect("multivector dimensions must agree")
    }
}

/// A paravector `x = x0 + Σ x_j e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Paravector<S> {
    pub x0: S,
    pub xs: Vec<S>,
}

impl<S: Coeff> Paravector<S> {
    pub fn new(x0: S, xs: Vec<S>) -> Self {
        Paravector { x0, xs }
    }

    pub fn dim(&self) -> usize {
        self.xs.len()
    }

    /// The vector part `x̲`.
    pub fn vector_part(&self) -> Multivector<S> {
        Multivector::vector(&self.xs)
    }

    pub fn to_multivector(&self) -> Multivector<S> {
        let mut mv = self.vector_part();
        mv.add_term(BladeMask::SCALAR, self.x0.clone());
        mv
    }

    /// `r^2 = Σ x_j^2`.
    pub fn r_sq(&self) -> S {
        self.xs
            .iter()
            .fold(S::zero(), |acc, x| acc + x.clone() * x.clone())
    }
}

impl Paravector<f64> {
    pub fn r(&self) -> f64 {
        self.r_sq().sqrt()
    }

    /// `ω = x̲ / r`; undefined on the axis.
    pub fn omega(&self) -> Result<NumMultivector> {
        let r = self.r();
        if r <= 0.0 {
            return Err(Error::Domain("ω = x̲/r is undefined at x̲ = 0".into()));
        }
        Ok(self.vector_part().scale(&(1.0 / r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn e(m: usize, idx: &[usize]) -> ExactMultivector {
        Multivector::blade(m, BladeMask::from_indices(idx, m).unwrap(), rat(1))
    }

    #[test]
    fn generator_products() {
        let m = 3;
        assert_eq!(&e(m, &[1]) * &e(m, &[1]), Multivector::scalar(m, rat(-1)));
        assert_eq!(&e(m, &[1]) * &e(m, &[2]), e(m, &[1, 2]));
        assert_eq!(&e(m, &[2]) * &e(m, &[1]), -&e(m, &[1, 2]));
        assert_eq!(&e(m, &[1, 2]) * &e(m, &[2]), -&e(m, &[1]));
    }

    #[test]
    fn conjugation_signs() {
        let m = 3;
        assert_eq!(
            Multivector::<Rational>::one(m).conjugate(),
            Multivector::one(m)
        );
        assert_eq!(e(m, &[1]).conjugate(), -&e(m, &[1]));
        assert_eq!(e(m, &[1, 2]).conjugate(), -&e(m, &[1, 2]));
        assert_eq!(e(m, &[1, 2, 3]).conjugate(), e(m, &[1, 2, 3]));
    }

    #[test]
    fn grade_projection() {
        let a = &Multivector::scalar(2, rat(3)) + &e(2, &[1]).scale(&rat(2));
        assert_eq!(a.grade_project(0).unwrap(), Multivector::scalar(2, rat(3)));
        assert_eq!(a.grade_project(1).unwrap(), e(2, &[1]).scale(&rat(2)));
        assert!(e(2, &[1, 2]).grade_project(1).unwrap().is_zero());
        assert!(matches!(
            a.grade_project(3),
            Err(Error::GradeOutOfRange { .. })
        ));
    }

    #[test]
    fn norms() {
        assert_eq!((&e(2, &[1]) + &e(2, &[2])).norm_sq(), rat(2));
        assert_eq!(Multivector::<Rational>::zero(4).norm_sq(), rat(0));
        let x = Multivector::vector(&[rat(1), rat(-2), rat(3)]);
        let sq = &x * &x;
        assert_eq!(x.norm_sq(), rat(14));
        assert_eq!(sq, Multivector::scalar(3, -x.norm_sq()));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            e(2, &[1]).gp(&e(3, &[1])),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
        assert!(BladeMask::new(0b1000, 3).is_err());
        assert!(Multivector::<f64>::parse(17, "1").is_err());
    }

    #[test]
    fn text_form() {
        let a = Multivector::<Rational>::parse(3, "3 - 2*e1 + 1*e12").unwrap();
        assert_eq!(a.to_string(), "3 - 2*e1 + 1*e12");
        let b = Multivector::<Rational>::parse(3, "-1/2*e23 + e1").unwrap();
        assert_eq!(b.to_string(), "1*e1 - 1/2*e23");
        assert_eq!(Multivector::<Rational>::zero(2).to_string(), "0");
        let wide = Multivector::<Rational>::generator(12, 11);
        assert_eq!(wide.to_string(), "1*e11");
        assert_eq!(
            Multivector::<Rational>::parse(12, "1*e1.11")
                .unwrap()
                .grades(),
            vec![2]
        );
        assert!(Multivector::<Rational>::parse(3, "1*e21").is_err());
        assert!(Multivector::<Rational>::parse(3, "1 +").is_err());
    }

    #[test]
    fn paravector_embedding() {
        let p = Paravector::new(1.0, vec![3.0, 4.0]);
        assert_eq!(p.r(), 5.0);
        let mv = p.to_multivector();
        assert_eq!(mv.scalar_part(), 1.0);
        assert_eq!(p.omega().unwrap().norm(), 1.0);
        assert!(Paravector::new(1.0, vec![0.0, 0.0]).omega().is_err());
    }
}
