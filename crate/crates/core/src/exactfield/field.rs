use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::cyclotomic::Cyclo;
use super::modular::is_prime_u64;
use crate::error::{Error, Result};

/// Which exact field a computation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rationals,
    Cyclotomic { n: u32 },
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Prime { p } => p,
            _ => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Cyclotomic { n } => write!(f, "Q(zeta_{n})"),
            FieldSpec::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

/// A handle on an exact field. Cheap to clone.
#[derive(Clone)]
pub struct Field {
    spec: FieldSpec,
    cyclo: Option<Arc<Cyclo>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.spec)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}
impl Eq for Field {}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Self> {
        match spec {
            FieldSpec::Rationals => Ok(Field { spec, cyclo: None }),
            FieldSpec::Cyclotomic { n } => {
                if n == 0 {
                    return Err(Error::InvalidInput("cyclotomic order must be positive".into()));
                }
                Ok(Field {
                    spec,
                    cyclo: Some(Arc::new(Cyclo::new(n))),
                })
            }
            FieldSpec::Prime { p } => {
                if !is_prime_u64(p) || p >= (1u64 << 62) {
                    return Err(Error::InvalidInput(format!("{p} is not a supported prime")));
                }
                Ok(Field { spec, cyclo: None })
            }
        }
    }

    pub fn rationals() -> Self {
        Field::new(FieldSpec::Rationals).unwrap()
    }

    pub fn cyclotomic(n: u32) -> Self {
        Field::new(FieldSpec::Cyclotomic { n }).expect("cyclotomic order must be positive")
    }

    pub fn prime(p: u64) -> Result<Self> {
        Field::new(FieldSpec::Prime { p })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.characteristic()
    }

    /// Dimension over the prime field's rationals (1 for `Q` and `F_p`).
    pub fn degree(&self) -> usize {
        self.cyclo.as_ref().map_or(1, |c| c.phi)
    }

    pub(crate) fn cyclo(&self) -> Option<&Arc<Cyclo>> {
        self.cyclo.as_ref()
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        self.from_rational(&BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> FieldElem {
        self.from_rational(&BigRational::new(num.into(), den.into()))
    }

    /// Embeds a rational. Panics in `F_p` if the denominator is divisible by p.
    pub fn from_rational(&self, q: &BigRational) -> FieldElem {
        match self.spec {
            FieldSpec::Rationals => FieldElem::Rat(q.clone()),
            FieldSpec::Cyclotomic { .. } => {
                let c = self.cyclo.clone().unwrap();
                let mut coords = vec![BigRational::zero(); c.phi];
                coords[0] = q.clone();
                FieldElem::Cyc(c, coords)
            }
            FieldSpec::Prime { p } => {
                let num = mod_bigint(q.numer(), p);
                let den = mod_bigint(q.denom(), p);
                let inv = inv_mod_u64(den, p).expect("denominator divisible by the characteristic");
                FieldElem::Fp(mul_mod(num, inv, p), p)
            }
        }
    }

    /// The distinguished primitive n-th root `z` of `Q(ζₙ)`.
    pub fn zeta(&self) -> Option<FieldElem> {
        let c = self.cyclo.clone()?;
        let mut coords = vec![BigRational::zero(); c.phi];
        if c.phi == 1 {
            // n = 1 or 2: z = 1 or -1, i.e. minus the constant term of Φₙ
            coords[0] = BigRational::from_integer(-c.modulus[0].clone());
        } else {
            coords[1] = BigRational::one();
        }
        Some(FieldElem::Cyc(c, coords))
    }

    /// Builds an element of `Q(ζₙ)` from power-basis coordinates (reduced if longer than φ(n)).
    pub fn from_power_coords(&self, coords: &[BigRational]) -> FieldElem {
        match self.spec {
            FieldSpec::Cyclotomic { .. } => {
                let z = self.zeta().unwrap();
                let mut acc = self.zero();
                let mut pw = self.one();
                for c in coords {
                    acc += &(&pw * &self.from_rational(c));
                    pw = &pw * &z;
                }
                acc
            }
            _ => {
                let mut acc = self.zero();
                for (k, c) in coords.iter().enumerate() {
                    if k == 0 {
                        acc = self.from_rational(c);
                    } else if !c.is_zero() {
                        panic!("power coordinates beyond degree 0 in a non-cyclotomic field");
                    }
                }
                acc
            }
        }
    }

    pub fn check(&self, x: &FieldElem) -> Result<()> {
        if x.spec() == self.spec {
            Ok(())
        } else {
            Err(Error::FieldMismatch(format!("{} element in {}", x.spec(), self.spec)))
        }
    }
}

/// An exact scalar.
#[derive(Clone)]
pub enum FieldElem {
    Rat(BigRational),
    Cyc(Arc<Cyclo>, Vec<BigRational>),
    Fp(u64, u64),
}

impl FieldElem {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElem::Rat(_) => FieldSpec::Rationals,
            FieldElem::Cyc(c, _) => FieldSpec::Cyclotomic { n: c.n },
            FieldElem::Fp(_, p) => FieldSpec::Prime { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(q) => q.is_zero(),
            FieldElem::Cyc(_, v) => v.iter().all(Zero::is_zero),
            FieldElem::Fp(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rat(q) => q.is_one(),
            FieldElem::Cyc(_, v) => v[0].is_one() && v[1..].iter().all(Zero::is_zero),
            FieldElem::Fp(v, _) => *v == 1,
        }
    }

    pub fn zero_like(&self) -> FieldElem {
        match self {
            FieldElem::Rat(_) => FieldElem::Rat(BigRational::zero()),
            FieldElem::Cyc(c, v) => FieldElem::Cyc(c.clone(), vec![BigRational::zero(); v.len()]),
            FieldElem::Fp(_, p) => FieldElem::Fp(0, *p),
        }
    }

    pub fn one_like(&self) -> FieldElem {
        match self {
            FieldElem::Rat(_) => FieldElem::Rat(BigRational::one()),
            FieldElem::Cyc(c, v) => {
                let mut w = vec![BigRational::zero(); v.len()];
                w[0] = BigRational::one();
                FieldElem::Cyc(c.clone(), w)
            }
            FieldElem::Fp(_, p) => FieldElem::Fp(1, *p),
        }
    }

    /// Power-basis coordinates over `Q` (a single coordinate for `Q`; `None` for `F_p`).
    pub fn rational_coords(&self) -> Option<Vec<BigRational>> {
        match self {
            FieldElem::Rat(q) => Some(vec![q.clone()]),
            FieldElem::Cyc(_, v) => Some(v.clone()),
            FieldElem::Fp(..) => None,
        }
    }

    /// The value as a rational, if it lies in the prime field `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            FieldElem::Rat(q) => Some(q.clone()),
            FieldElem::Cyc(_, v) if v[1..].iter().all(Zero::is_zero) => Some(v[0].clone()),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElem::Rat(q) => FieldElem::Rat(q.recip()),
            FieldElem::Fp(v, p) => FieldElem::Fp(inv_mod_u64(*v, *p).unwrap(), *p),
            FieldElem::Cyc(c, v) => FieldElem::Cyc(c.clone(), cyc_inverse(c, v)),
        })
    }

    pub fn pow(&self, e: i64) -> Result<FieldElem> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            n >>= 1;
        }
        Ok(acc)
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        Ok(self * &other.inv()?)
    }

    /// Multiplicative order, searching up to `limit`.
    pub fn multiplicative_order(&self, limit: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc.is_one() {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    fn mismatch(&self, other: &FieldElem) -> ! {
        panic!("field mismatch: {} vs {}", self.spec(), other.spec())
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => a == b,
            (FieldElem::Cyc(c, a), FieldElem::Cyc(d, b)) => c.n == d.n && a == b,
            (FieldElem::Fp(a, p), FieldElem::Fp(b, q)) => a == b && p == q,
            _ => false,
        }
    }
}
impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.spec().hash(state);
        match self {
            FieldElem::Rat(q) => q.hash(state),
            FieldElem::Cyc(_, v) => v.hash(state),
            FieldElem::Fp(v, _) => v.hash(state),
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::literal::format_scalar(self))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::literal::format_scalar(self))
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a + b),
            (FieldElem::Cyc(c, a), FieldElem::Cyc(d, b)) if c.n == d.n => {
                FieldElem::Cyc(c.clone(), a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (FieldElem::Fp(a, p), FieldElem::Fp(b, q)) if p == q => {
                FieldElem::Fp(((*a as u128 + *b as u128) % *p as u128) as u64, *p)
            }
            _ => self.mismatch(rhs),
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a - b),
            (FieldElem::Cyc(c, a), FieldElem::Cyc(d, b)) if c.n == d.n => {
                FieldElem::Cyc(c.clone(), a.iter().zip(b).map(|(x, y)| x - y).collect())
            }
            (FieldElem::Fp(a, p), FieldElem::Fp(b, q)) if p == q => {
                FieldElem::Fp(((*a as u128 + (*p - *b) as u128) % *p as u128) as u64, *p)
            }
            _ => self.mismatch(rhs),
        }
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        match (self, rhs) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a * b),
            (FieldElem::Cyc(c, a), FieldElem::Cyc(d, b)) if c.n == d.n => {
                FieldElem::Cyc(c.clone(), cyc_mul(c, a, b))
            }
            (FieldElem::Fp(a, p), FieldElem::Fp(b, q)) if p == q => FieldElem::Fp(mul_mod(*a, *b, *p), *p),
            _ => self.mismatch(rhs),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rat(a) => FieldElem::Rat(-a),
            FieldElem::Cyc(c, a) => FieldElem::Cyc(c.clone(), a.iter().map(|x| -x).collect()),
            FieldElem::Fp(a, p) => FieldElem::Fp(if *a == 0 { 0 } else { p - a }, *p),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        match (&mut *self, rhs) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => *a += b,
            (FieldElem::Cyc(c, a), FieldElem::Cyc(d, b)) if c.n == d.n => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
            }
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        match (&mut *self, rhs) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => *a -= b,
            (FieldElem::Cyc(c, a), FieldElem::Cyc(d, b)) if c.n == d.n => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x -= y;
                }
            }
            _ => *self = &*self - rhs,
        }
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}

fn cyc_mul(c: &Cyclo, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let phi = c.phi;
    if phi == 1 {
        return vec![&a[0] * &b[0]];
    }
    let mut prod = vec![BigRational::zero(); 2 * phi - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            prod[i + j] += x * y;
        }
    }
    let mut out: Vec<BigRational> = prod[..phi].to_vec();
    for (k, high) in prod[phi..].iter().enumerate() {
        if high.is_zero() {
            continue;
        }
        for (o, r) in out.iter_mut().zip(&c.reduce[k]) {
            if !r.is_zero() {
                *o += high * BigRational::from_integer(r.clone());
            }
        }
    }
    out
}

// Extended Euclid in Q[t] against Φₙ.
fn cyc_inverse(c: &Cyclo, a: &[BigRational]) -> Vec<BigRational> {
    let phi = c.phi;
    let modulus: Vec<BigRational> = c.modulus.iter().cloned().map(BigRational::from_integer).collect();
    let mut r0 = trim(modulus);
    let mut r1 = trim(a.to_vec());
    let mut s0: Vec<BigRational> = vec![];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !(r1.len() == 1) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = trim(poly_sub(&s0, &poly_mul(&q, &s1)));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        if r1.is_empty() {
            unreachable!("Φₙ is irreducible, so a nonzero element is coprime to it");
        }
    }
    // r1 is a nonzero constant: s1 * a ≡ r1
    let k = r1[0].recip();
    let mut out = vec![BigRational::zero(); phi];
    for (i, x) in s1.iter().enumerate() {
        out[i] = x * &k;
    }
    out
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect()
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (vec![], trim(rem));
    }
    let lead_inv = b[db].recip();
    let mut quo = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quo.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, y) in b.iter().enumerate() {
            rem[k + i] -= &c * y;
        }
        quo[k] = c;
    }
    rem.truncate(db);
    (trim(quo), trim(rem))
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn mod_bigint(x: &BigInt, p: u64) -> u64 {
    let r = x % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().unwrap()
}

pub(crate) fn inv_mod_u64(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let q = Field::rationals();
        assert_eq!(q.one().inv().unwrap(), q.one());
        let k = Field::cyclotomic(4);
        let z = k.zeta().unwrap();
        assert_eq!(z.inv().unwrap(), -&z);
        assert_eq!(&z * &z, -k.one());
        let f = Field::prime(97).unwrap();
        assert_eq!(f.from_i64(3).inv().unwrap(), f.from_i64(65));
        assert_eq!(q.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn zeta_has_exact_order() {
        for n in [1u32, 2, 3, 4, 5, 6, 8, 12] {
            let k = Field::cyclotomic(n);
            let z = k.zeta().unwrap();
            assert_eq!(z.multiplicative_order(100), Some(n as u64), "n = {n}");
        }
    }

    #[test]
    fn cyclotomic_inverse_roundtrip() {
        let k = Field::cyclotomic(12);
        let z = k.zeta().unwrap();
        let a = &(&z * &z) + &k.from_ratio(3, 2);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        assert_eq!(b.inv().unwrap(), a);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, f.from_i64(6));
        assert_eq!(f.from_ratio(1, 2), f.from_i64(4));
        assert!(Field::prime(8).is_err());
    }
}
