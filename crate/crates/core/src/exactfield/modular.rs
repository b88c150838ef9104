//! Primality, rational reconstruction, and modular helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let m128 = m as u128;
    let mut base = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes `p ≡ 1 (mod n)` with `p ≥ start`, in increasing order.
pub fn primes_one_mod(n: u64, start: u64) -> impl Iterator<Item = u64> {
    let n = n.max(1);
    let first = start + (n + 1 - start % n) % n;
    (0u64..).map(move |k| first + k * n).filter(|&c| is_prime_u64(c))
}

/// Finds `a/b` with `|a|, b ≤ bound`, `gcd(b, modulus) = 1` and `a ≡ b·residue`.
///
/// Runs the half-extended Euclidean algorithm. When `2·bound² < modulus` the
/// answer is unique; for larger bounds the first candidate met is returned.
///
/// ```
/// use gsla_core::exactfield::rational_reconstruct;
/// use num_bigint::BigInt;
/// let r = rational_reconstruct(&BigInt::from(65), &BigInt::from(97), &BigInt::from(9)).unwrap();
/// assert_eq!(r.to_string(), "1/3");
/// ```
pub fn rational_reconstruct(residue: &BigInt, modulus: &BigInt, bound: &BigInt) -> Option<BigRational> {
    let mut r0 = modulus.clone();
    let mut r1 = residue.mod_floor(modulus);
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    while &r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *bound {
        return None;
    }
    if !t1.gcd(modulus).is_one() {
        return None;
    }
    let (a, b) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    Some(BigRational::new(a, b))
}

/// Reduces a rational modulo `m` (denominator must be invertible).
pub(crate) fn rational_mod(q: &BigRational, m: &BigInt) -> Option<BigInt> {
    let inv = mod_inverse(&q.denom().mod_floor(m), m)?;
    Some((q.numer() * inv).mod_floor(m))
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}
