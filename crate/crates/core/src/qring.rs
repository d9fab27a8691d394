//! Exact arithmetic in `Z[q^{±1/2}, β]` with `β = (q + q⁻¹)⁻¹`.
//!
//! Every element is stored as a Laurent polynomial in `q^{1/2}` divided by a
//! power of `α = q + q⁻¹`. Exponents are kept doubled so that `q^{m/2}` has
//! integer key `m`. The representation is canonical: when the denominator is
//! nontrivial, the numerator is not divisible by `α`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("negative alpha power {0}")]
    NegativeAlphaPow(i64),
    #[error("{0} is not a unit of the coefficient ring")]
    NotAUnit(String),
    #[error("malformed integer literal {0:?}")]
    BadInteger(String),
}

/// Laurent polynomial in `q^{1/2}` with integer coefficients.
///
/// Terms are sorted by ascending doubled exponent and no coefficient is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HalfLaurent {
    terms: Vec<(i32, BigInt)>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// `c · q^{e/2}`.
    pub fn monomial(doubled_exp: i32, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(doubled_exp, c)] }
        }
    }

    /// `q + q⁻¹`.
    pub fn alpha() -> Self {
        Self { terms: vec![(-2, BigInt::one()), (2, BigInt::one())] }
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) pairs.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i32, BigInt)>,
    {
        let mut terms: Vec<(i32, BigInt)> = pairs.into_iter().collect();
        terms.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i32, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(i32, BigInt)] {
        &self.terms
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (e, c) = &other.terms[j];
                    out.push((*e, if negate_other { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let (e, a) = &self.terms[i];
                    let b = &other.terms[j].1;
                    let c = if negate_other { a - b } else { a + b };
                    if !c.is_zero() {
                        out.push((*e, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 && other.terms.len() == 1 {
            let (ea, ca) = &self.terms[0];
            let (eb, cb) = &other.terms[0];
            return Self { terms: vec![(ea + eb, ca * cb)] };
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let mut dense: Vec<BigInt> = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                dense[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i32, c))
            .collect();
        Self { terms }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Substitutes `q^{1/2} ↦ q^{-1/2}`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<(i32, BigInt)> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        Self { terms }
    }

    /// Exact quotient by `α`, or `None` when `α` does not divide.
    pub fn div_alpha(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // α·X^{e-2} = X^e + X^{e-4} with X = q^{1/2}; eliminate from the top.
        let mut rem = self.terms.clone();
        let mut quot: Vec<(i32, BigInt)> = Vec::new();
        while let (Some(lo), Some(hi)) = (rem.first().map(|t| t.0), rem.last().map(|t| t.0)) {
            if hi - lo < 4 {
                return None;
            }
            let (e, c) = rem.pop().unwrap();
            let target = e - 4;
            match rem.binary_search_by_key(&target, |t| t.0) {
                Ok(pos) => {
                    rem[pos].1 -= &c;
                    if rem[pos].1.is_zero() {
                        rem.remove(pos);
                    }
                }
                Err(pos) => rem.insert(pos, (target, -c.clone())),
            }
            quot.push((e - 2, c));
        }
        quot.reverse();
        Some(Self { terms: quot })
    }

    /// Exact quotient `self / d` in `Z[q^{±1/2}]`, or `None` when `d` does
    /// not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (&(dtop, ref dlead), dlow) = (d.terms.last()?, d.terms[0].0);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((top, c)) = rem.terms.last().cloned() {
            if top - rem.terms[0].0 < dtop - dlow {
                return None;
            }
            let (k, r) = c.div_rem(dlead);
            if !r.is_zero() {
                return None;
            }
            let m = Self::monomial(top - dtop, k.clone());
            rem = rem.sub(&m.mul(d));
            quot.push((top - dtop, k));
        }
        Some(Self::from_pairs(quot))
    }

    /// Evaluates at `q^{1/2} = sign` (`sign` is `1` or `-1`).
    pub fn eval_at_unit(&self, sign: i32) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if sign < 0 && e.rem_euclid(2) == 1 { -c } else { c.clone() })
            .sum()
    }

    fn fmt_poly(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => write!(f, "{}", QPow(*e))?,
                (_, false) => write!(f, "{abs}*{}", QPow(*e))?,
            }
        }
        Ok(())
    }
}

/// Renders `q^{e/2}`.
struct QPow(i32);

impl fmt::Display for QPow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.0;
        if e == 2 {
            write!(f, "q")
        } else if e % 2 == 0 {
            write!(f, "q^{}", e / 2)
        } else {
            write!(f, "q^{{{e}/2}}")
        }
    }
}

/// Element of `Z[q^{±1/2}, β]` in canonical form `num / α^alpha_pow`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    num: HalfLaurent,
    alpha_pow: u32,
}

impl Default for RingElem {
    fn default() -> Self {
        Self::zero()
    }
}

fn alpha_power(k: u32) -> HalfLaurent {
    let mut p = HalfLaurent::one();
    let a = HalfLaurent::alpha();
    for _ in 0..k {
        p = p.mul(&a);
    }
    p
}

impl RingElem {
    /// Canonical constructor from doubled-exponent pairs and a denominator power.
    pub fn make<I>(pairs: I, alpha_pow: i64) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (i32, BigInt)>,
    {
        if alpha_pow < 0 {
            return Err(RingError::NegativeAlphaPow(alpha_pow));
        }
        Ok(Self::from_parts(HalfLaurent::from_pairs(pairs), alpha_pow as u32))
    }

    pub fn from_parts(num: HalfLaurent, alpha_pow: u32) -> Self {
        let mut r = Self { num, alpha_pow };
        r.canonicalize();
        r
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.alpha_pow = 0;
            return;
        }
        while self.alpha_pow > 0 {
            match self.num.div_alpha() {
                Some(q) => {
                    self.num = q;
                    self.alpha_pow -= 1;
                }
                None => break,
            }
        }
    }

    pub fn zero() -> Self {
        Self { num: HalfLaurent::zero(), alpha_pow: 0 }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self { num: HalfLaurent::monomial(0, BigInt::from(c)), alpha_pow: 0 }
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self { num: HalfLaurent::monomial(0, c), alpha_pow: 0 }
    }

    /// `q^{e/2}`.
    pub fn q_half_pow(doubled_exp: i32) -> Self {
        Self { num: HalfLaurent::monomial(doubled_exp, BigInt::one()), alpha_pow: 0 }
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Self::q_half_pow(2 * k)
    }

    pub fn alpha() -> Self {
        Self { num: HalfLaurent::alpha(), alpha_pow: 0 }
    }

    pub fn beta() -> Self {
        Self { num: HalfLaurent::one(), alpha_pow: 1 }
    }

    pub fn num(&self) -> &HalfLaurent {
        &self.num
    }

    pub fn alpha_pow(&self) -> u32 {
        self.alpha_pow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.alpha_pow == 0 && self.num.is_one()
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), alpha_pow: self.alpha_pow }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let k = self.alpha_pow.max(other.alpha_pow);
        let a = if self.alpha_pow < k { self.num.mul(&alpha_power(k - self.alpha_pow)) } else { self.num.clone() };
        let b = if other.alpha_pow < k { other.num.mul(&alpha_power(k - other.alpha_pow)) } else { other.num.clone() };
        Self::from_parts(a.add(&b), k)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let num = self.num.mul(&other.num);
        let k = self.alpha_pow + other.alpha_pow;
        if self.alpha_pow > 0 && other.alpha_pow > 0 {
            // Φ₈ is prime, so a product of α-free numerators is α-free.
            Self { num, alpha_pow: k }
        } else {
            Self::from_parts(num, k)
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// The mirror involution `q^{±1/2} ↦ q^{∓1/2}`; `α` is fixed.
    pub fn bar(&self) -> Self {
        Self { num: self.num.bar(), alpha_pow: self.alpha_pow }
    }

    /// Value at `q^{1/2} = 1`.
    pub fn spec_q1(&self) -> BigRational {
        self.spec_at(1)
    }

    /// Value at `q^{1/2} = sign`; `α` evaluates to 2 either way.
    pub fn spec_at(&self, sign: i32) -> BigRational {
        let n = self.num.eval_at_unit(sign);
        let d = BigInt::one() << (self.alpha_pow as usize);
        BigRational::new(n, d)
    }

    /// Splits a unit into `(±1, doubled q-exponent, α-exponent)`.
    fn unit_parts(&self) -> Option<(bool, i32, i64)> {
        if self.is_zero() {
            return None;
        }
        let mut num = self.num.clone();
        let mut j: i64 = 0;
        while num.terms.len() > 1 {
            num = num.div_alpha()?;
            j += 1;
        }
        let (e, c) = &num.terms[0];
        if !c.abs().is_one() {
            return None;
        }
        Some((c.is_negative(), *e, j - self.alpha_pow as i64))
    }

    /// Units are exactly `±q^{m/2} α^j`, `j ∈ Z`.
    pub fn is_unit(&self) -> bool {
        self.unit_parts().is_some()
    }

    pub fn unit_inverse(&self) -> Result<Self, RingError> {
        let (neg, e, j) = self.unit_parts().ok_or_else(|| RingError::NotAUnit(self.to_string()))?;
        let sign = BigInt::from(if neg { -1 } else { 1 });
        let mono = HalfLaurent::monomial(-e, sign);
        Ok(if j > 0 {
            Self { num: mono, alpha_pow: j as u32 }
        } else {
            Self { num: mono.mul(&alpha_power((-j) as u32)), alpha_pow: 0 }
        })
    }

    pub fn div_unit(&self, unit: &Self) -> Result<Self, RingError> {
        Ok(self.mul(&unit.unit_inverse()?))
    }

    /// Exact quotient in `R`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut dn = d.num.clone();
        let mut j = 0;
        while let Some(x) = dn.div_alpha() {
            dn = x;
            j += 1;
        }
        let q = self.num.div_exact(&dn)?;
        Some(Self::from_parts(q.mul(&alpha_power(d.alpha_pow)), self.alpha_pow + j))
    }

    /// True when the printed form needs parentheses inside a product.
    pub fn is_compound(&self) -> bool {
        !(self.num.terms.len() == 1 && (self.alpha_pow == 0 || self.num.is_one()))
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = match self.alpha_pow {
            0 => String::new(),
            1 => "b".to_string(),
            k => format!("b^{k}"),
        };
        if self.alpha_pow == 0 {
            self.num.fmt_poly(f)
        } else if self.num.is_one() {
            write!(f, "{b}")
        } else if self.num.terms.len() == 1 && self.num.terms[0].1 == BigInt::from(-1) && self.num.terms[0].0 == 0 {
            write!(f, "-{b}")
        } else {
            write!(f, "(")?;
            self.num.fmt_poly(f)?;
            write!(f, ")*{b}")
        }
    }
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        RingElem::add(self, rhs)
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        RingElem::sub(self, rhs)
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        RingElem::mul(self, rhs)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem::neg(self)
    }
}

impl AddAssign<&RingElem> for RingElem {
    fn add_assign(&mut self, rhs: &RingElem) {
        *self = RingElem::add(self, rhs);
    }
}

/// Integer that serializes as a JSON number when it fits in `i64`, else as a string.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_big(c: &BigInt) -> Self {
        match c.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(c.to_string()),
        }
    }

    fn to_big(&self) -> Result<BigInt, RingError> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(*v)),
            JsonInt::Big(s) => s.parse().map_err(|_| RingError::BadInteger(s.clone())),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RingElemRepr {
    num: Vec<(i32, JsonInt)>,
    #[serde(rename = "alphaPow")]
    alpha_pow: i64,
}

impl Serialize for RingElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RingElemRepr {
            num: self.num.terms.iter().map(|(e, c)| (*e, JsonInt::from_big(c))).collect(),
            alpha_pow: self.alpha_pow as i64,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = RingElemRepr::deserialize(d)?;
        let pairs = repr
            .num
            .iter()
            .map(|(e, c)| c.to_big().map(|c| (*e, c)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        RingElem::make(pairs, repr.alpha_pow).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(pairs: &[(i32, i64)], k: i64) -> RingElem {
        RingElem::make(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))), k).unwrap()
    }

    #[test]
    fn make_examples() {
        assert_eq!(r(&[(2, 1)], 0), RingElem::q_pow(1));
        assert_eq!(r(&[(2, 1), (-2, 1)], 1), RingElem::one());
        assert_eq!(r(&[(4, 1), (0, 2), (-4, 1)], 2), RingElem::one());
        assert_eq!(
            RingElem::make(vec![(0, BigInt::one())], -1),
            Err(RingError::NegativeAlphaPow(-1))
        );
    }

    #[test]
    fn zero_is_unique() {
        let z = r(&[(2, 1), (2, -1)], 3);
        assert!(z.is_zero());
        assert_eq!(z.alpha_pow(), 0);
        assert_eq!(z, RingElem::zero());
    }

    #[test]
    fn basic_identities() {
        let q = RingElem::q_pow(1);
        let qb = RingElem::q_pow(-1);
        assert!((&RingElem::alpha() * &RingElem::beta()).is_one());
        assert_eq!(&q + &qb, RingElem::alpha());
        let lhs = &(&q - &qb) * &(&q + &qb);
        assert_eq!(lhs, &RingElem::q_pow(2) - &RingElem::q_pow(-2));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(RingElem::q_half_pow(3).bar(), RingElem::q_half_pow(-3));
        assert_eq!(RingElem::beta().bar(), RingElem::beta());
        let d = &RingElem::q_pow(2) - &RingElem::q_pow(-2);
        assert_eq!(d.bar(), d.neg());
    }

    #[test]
    fn specialization_examples() {
        assert_eq!(RingElem::beta().spec_q1(), BigRational::new(1.into(), 2.into()));
        assert!((&RingElem::q_pow(2) - &RingElem::q_pow(-2)).spec_q1().is_zero());
        assert_eq!(RingElem::alpha().spec_q1(), BigRational::from_integer(2.into()));
        assert_eq!(RingElem::q_half_pow(1).spec_at(-1), BigRational::from_integer((-1).into()));
    }

    #[test]
    fn units() {
        let u = &RingElem::q_half_pow(-3) * &RingElem::alpha().pow(2);
        assert!(u.is_unit());
        assert!((&u * &u.unit_inverse().unwrap()).is_one());
        let b = RingElem::beta().pow(3).neg();
        assert!((&b * &b.unit_inverse().unwrap()).is_one());
        let non = &RingElem::q_pow(3) + &RingElem::q_pow(-3);
        assert!(!non.is_unit());
        assert!(!RingElem::from_int(2).is_unit());
        assert!(non.unit_inverse().is_err());
    }

    #[test]
    fn exact_division() {
        // (q - q⁻¹)(q³ + q⁻³) / (q - q⁻¹)
        let d = &RingElem::q_pow(1) - &RingElem::q_pow(-1);
        let x = &RingElem::q_pow(3) + &RingElem::q_pow(-3);
        assert_eq!((&d * &x).div_exact(&d), Some(x.clone()));
        // q³ + q⁻³ = α(q² − 1 + q⁻²), so β·(q² − 1 + q⁻²) · α = 1·(q² − 1 + q⁻²)
        let y = r(&[(4, 1), (0, -1), (-4, 1)], 0);
        assert_eq!(y.div_exact(&x), Some(RingElem::beta()));
        assert_eq!(RingElem::one().div_exact(&RingElem::from_int(2)), None);
        assert_eq!(x.div_exact(&d), None);
        assert_eq!(x.div_exact(&RingElem::zero()), None);
        let with_beta = &x * &RingElem::beta().pow(2);
        assert_eq!((&with_beta * &d).div_exact(&d), Some(with_beta));
    }

    #[test]
    fn alpha_cancels_in_sums() {
        // β·q + β·q⁻¹ = 1
        let s = &(&RingElem::beta() * &RingElem::q_pow(1)) + &(&RingElem::beta() * &RingElem::q_pow(-1));
        assert!(s.is_one());
    }

    #[test]
    fn display() {
        assert_eq!(RingElem::beta().to_string(), "b");
        assert_eq!((&RingElem::q_pow(2) - &RingElem::q_pow(-2)).to_string(), "q^2 - q^-2");
        assert_eq!(RingElem::q_half_pow(3).to_string(), "q^{3/2}");
        assert_eq!((&RingElem::beta() * &RingElem::q_pow(1)).to_string(), "(q)*b");
        assert_eq!(RingElem::alpha().to_string(), "q + q^-1");
    }

    #[test]
    fn json_round_trip() {
        let x = &(&RingElem::q_half_pow(-1) + &RingElem::from_int(7)) * &RingElem::beta().pow(2);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"num":[[-1,1],[0,7]],"alphaPow":2}"#);
        let back: RingElem = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        let big: RingElem = serde_json::from_str(r#"{"num":[[0,"123456789012345678901234567890"]],"alphaPow":0}"#).unwrap();
        assert_eq!(big.num().terms()[0].1.to_string(), "123456789012345678901234567890");
    }
}
