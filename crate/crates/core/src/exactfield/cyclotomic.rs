//! Cyclotomic polynomials and the reduction data for `Q(ζₙ)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
///
/// Computed by dividing `tⁿ − 1` by `Φ_d` for every proper divisor `d`.
///
/// ```
/// use gsla_core::exactfield::cyclotomic_polynomial;
/// use num_bigint::BigInt;
/// let phi6: Vec<i64> = cyclotomic_polynomial(6).iter().map(|c| i64::try_from(c).unwrap()).collect();
/// assert_eq!(phi6, vec![1, -1, 1]);
/// ```
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_polynomial: n must be positive");
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            num = exact_monic_div(&num, &divisor);
        }
    }
    num
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

// Division by a monic integer polynomial that is known to be exact.
fn exact_monic_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quo = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quo[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quo
}

/// Multiplication data for `Q[t]/Φₙ(t)`.
#[derive(Debug)]
pub struct Cyclo {
    pub(crate) n: u32,
    pub(crate) phi: usize,
    /// Φₙ, lowest degree first, monic of degree `phi`.
    pub(crate) modulus: Vec<BigInt>,
    /// `reduce[k]` holds t^(phi + k) mod Φₙ in the power basis.
    pub(crate) reduce: Vec<Vec<BigInt>>,
}

impl Cyclo {
    pub(crate) fn new(n: u32) -> Self {
        let modulus = cyclotomic_polynomial(n);
        let phi = modulus.len() - 1;
        let mut reduce = Vec::new();
        // t^phi = -(c_0 + ... + c_{phi-1} t^{phi-1})
        let mut cur: Vec<BigInt> = modulus[..phi].iter().map(|c| -c).collect();
        for _ in 0..phi.saturating_sub(1).max(1) {
            reduce.push(cur.clone());
            // multiply cur by t and reduce
            let top = cur[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                for i in 0..phi {
                    next[i] -= &top * &modulus[i];
                }
            }
            cur = next;
        }
        Cyclo {
            n,
            phi,
            modulus,
            reduce,
        }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }
}
