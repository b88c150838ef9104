//! Commutative algebras given by structure constants, and the modular
//! idempotent-splitting engine.
//!
//! Over `Q` and `Q(ζₙ)` the algebra is reduced modulo a prime `p ≡ 1 (mod n)`
//! under every embedding `ζ ↦ r`, split over `F_p`, Hensel-lifted to `p^K`,
//! and the idempotent coordinates are recovered by rational reconstruction.
//! Nothing is returned without an exact check in the original field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Field, FieldElem};
use super::matrix::{vecops, Matrix};
use super::modular::{mod_inverse, primes_one_mod, rational_mod, rational_reconstruct};
use super::FieldSpec;
use crate::error::{Error, Result};

/// A finite-dimensional commutative algebra with unit.
#[derive(Clone, Debug)]
pub struct CommAlgebra {
    field: Field,
    dim: usize,
    /// `mult[i][j]` = coordinates of `bᵢ·bⱼ`
    mult: Vec<Vec<Vec<FieldElem>>>,
    unit: Vec<FieldElem>,
}

impl CommAlgebra {
    /// Validates commutativity, associativity and the unit.
    pub fn new(field: &Field, mult: Vec<Vec<Vec<FieldElem>>>, unit: Vec<FieldElem>) -> Result<Self> {
        let dim = unit.len();
        if dim == 0 {
            return Err(Error::InvalidInput("algebra must have positive dimension".into()));
        }
        if mult.len() != dim || mult.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(Error::DimensionMismatch("structure constant table has the wrong shape".into()));
        }
        let a = CommAlgebra {
            field: field.clone(),
            dim,
            mult,
            unit,
        };
        for i in 0..dim {
            for j in 0..i {
                if a.mult[i][j] != a.mult[j][i] {
                    return Err(Error::NotCommutative);
                }
            }
        }
        for i in 0..dim {
            let e = basis_vec(field, dim, i);
            if a.mul(&a.unit, &e) != e {
                return Err(Error::InvalidInput("unit does not act as the identity".into()));
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let left = a.mul(&a.mult[i][j], &basis_vec(field, dim, k));
                    let right = a.mul(&basis_vec(field, dim, i), &a.mult[j][k]);
                    if left != right {
                        return Err(Error::InvalidInput(format!("not associative at ({i},{j},{k})")));
                    }
                }
            }
        }
        Ok(a)
    }

    /// The algebra spanned by linearly independent, pairwise commuting square
    /// matrices (which must contain the identity in their span).
    pub fn from_matrices(field: &Field, mats: &[Matrix]) -> Result<Self> {
        let n = mats.first().map_or(0, Matrix::rows);
        let flat: Vec<Vec<FieldElem>> = mats.iter().map(|m| m.entries().to_vec()).collect();
        let coords = super::coords::Coordinatizer::new(field, n * n, flat)?;
        let d = mats.len();
        let mut mult = vec![vec![vec![]; d]; d];
        for i in 0..d {
            for j in 0..d {
                let prod = mats[i].mul(&mats[j])?;
                mult[i][j] = coords
                    .coords(prod.entries())
                    .ok_or_else(|| Error::InvalidInput("matrix span is not closed under products".into()))?;
            }
        }
        let unit = coords
            .coords(Matrix::identity(field, n).entries())
            .ok_or_else(|| Error::InvalidInput("identity is not in the matrix span".into()))?;
        CommAlgebra::new(field, mult, unit)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[FieldElem] {
        &self.unit
    }
    pub fn structure(&self) -> &[Vec<Vec<FieldElem>>] {
        &self.mult
    }

    pub fn mul(&self, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                vecops::axpy(&mut out, &(x * y), &self.mult[i][j]);
            }
        }
        out
    }

    /// Checks `eᵢ² = eᵢ`, `eᵢeⱼ = 0` and `Σ eᵢ = 1` exactly.
    pub fn is_complete_orthogonal(&self, ids: &[Vec<FieldElem>]) -> bool {
        let mut sum = vec![self.field.zero(); self.dim];
        for (i, e) in ids.iter().enumerate() {
            if vecops::is_zero(e) || self.mul(e, e) != *e {
                return false;
            }
            for f in &ids[..i] {
                if !vecops::is_zero(&self.mul(e, f)) {
                    return false;
                }
            }
            sum = vecops::add(&sum, e);
        }
        sum == self.unit
    }
}

fn basis_vec(field: &Field, n: usize, i: usize) -> Vec<FieldElem> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Tuning knobs for [`idempotents_commutative_with`].
#[derive(Clone, Debug)]
pub struct IdempotentOptions {
    /// Initial bound on reconstructed numerators/denominators, in bits.
    pub bound_bits: u32,
    /// Number of bound doublings tried per prime.
    pub retries: u32,
    /// Number of primes tried.
    pub primes: u32,
    pub seed: u64,
}

impl Default for IdempotentOptions {
    fn default() -> Self {
        IdempotentOptions {
            bound_bits: 64,
            retries: 3,
            primes: 3,
            seed: 0,
        }
    }
}

/// Primitive orthogonal idempotents summing to 1.
///
/// Complete and primitive when the algebra is split semisimple; a local
/// algebra yields just the unit.
///
/// ```
/// use gsla_core::exactfield::{idempotents_commutative, CommAlgebra, Field};
/// let q = Field::rationals();
/// let (z, o) = (q.zero(), q.one());
/// // span{1, u} with u² = 1
/// let mult = vec![vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
///                 vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]]];
/// let a = CommAlgebra::new(&q, mult, vec![o.clone(), z.clone()]).unwrap();
/// let ids = idempotents_commutative(&a).unwrap();
/// assert_eq!(ids.len(), 2);
/// assert!(a.is_complete_orthogonal(&ids));
/// ```
pub fn idempotents_commutative(a: &CommAlgebra) -> Result<Vec<Vec<FieldElem>>> {
    idempotents_commutative_with(a, &IdempotentOptions::default())
}

pub fn idempotents_commutative_with(a: &CommAlgebra, opts: &IdempotentOptions) -> Result<Vec<Vec<FieldElem>>> {
    if a.dim == 1 {
        return Ok(vec![a.unit.clone()]);
    }
    match a.field.spec() {
        FieldSpec::Prime { p } => {
            let consts = ModAlg::from_prime_field(a, p);
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let rounds = 4 + a.dim as u32 + if p < 64 { 8 } else { 0 };
            let ids = split_mod_p(&consts, p, rounds, &mut rng);
            let out: Vec<Vec<FieldElem>> = ids
                .iter()
                .map(|e| e.iter().map(|x| a.field.from_i64(x.to_i64().unwrap())).collect())
                .collect();
            if a.is_complete_orthogonal(&out) {
                Ok(out)
            } else {
                Err(Error::NonSplit("modular idempotents failed exact verification".into()))
            }
        }
        FieldSpec::Rationals | FieldSpec::Cyclotomic { .. } => lift_and_reconstruct(a, opts),
    }
}

/// Structure constants reduced modulo some integer `m`.
struct ModAlg {
    d: usize,
    m: BigInt,
    c: Vec<Vec<Vec<BigInt>>>,
    unit: Vec<BigInt>,
}

impl ModAlg {
    fn from_prime_field(a: &CommAlgebra, p: u64) -> ModAlg {
        let conv = |x: &FieldElem| match x {
            FieldElem::Fp(v, _) => BigInt::from(*v),
            _ => unreachable!("prime field element expected"),
        };
        ModAlg {
            d: a.dim,
            m: BigInt::from(p),
            c: a.mult.iter().map(|r| r.iter().map(|v| v.iter().map(conv).collect()).collect()).collect(),
            unit: a.unit.iter().map(conv).collect(),
        }
    }

    /// Image under `ζ ↦ r` modulo `m`; `None` if a denominator is not invertible.
    fn embed(a: &CommAlgebra, r_powers: &[BigInt], m: &BigInt) -> Option<ModAlg> {
        let conv = |x: &FieldElem| -> Option<BigInt> {
            let coords = x.rational_coords().expect("characteristic zero");
            let mut acc = BigInt::zero();
            for (c, rp) in coords.iter().zip(r_powers) {
                if !c.is_zero() {
                    acc += rational_mod(c, m)? * rp;
                }
            }
            Some(acc.mod_floor(m))
        };
        let mut c = Vec::with_capacity(a.dim);
        for row in &a.mult {
            let mut r = Vec::with_capacity(a.dim);
            for v in row {
                r.push(v.iter().map(conv).collect::<Option<Vec<_>>>()?);
            }
            c.push(r);
        }
        Some(ModAlg {
            d: a.dim,
            m: m.clone(),
            c,
            unit: a.unit.iter().map(conv).collect::<Option<Vec<_>>>()?,
        })
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, c) in out.iter_mut().zip(&self.c[i][j]) {
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out.iter().map(|x| x.mod_floor(&self.m)).collect()
    }

    fn lin(&self, terms: &[(BigInt, &[BigInt])]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.d];
        for (c, v) in terms {
            for (o, x) in out.iter_mut().zip(v.iter()) {
                *o += c * x;
            }
        }
        out.iter().map(|x| x.mod_floor(&self.m)).collect()
    }

    /// Rank over `F_p` of multiplication by `e` (requires `m` prime).
    fn image_rank(&self, e: &[BigInt]) -> usize {
        let p = self.m.to_u64().expect("prime modulus");
        let rows: Vec<Vec<u64>> = (0..self.d)
            .map(|j| {
                let mut bj = vec![BigInt::zero(); self.d];
                bj[j] = BigInt::one();
                self.mul(e, &bj).iter().map(|x| x.to_u64().unwrap()).collect()
            })
            .collect();
        rank_mod_p(rows, p)
    }
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let n = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..n {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][c], p);
        for x in rows[rank].iter_mut() {
            *x = mulm(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..n {
                    rows[i][j] = subm(rows[i][j], mulm(f, rows[rank][j], p), p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}
fn powm(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, b, p);
        }
        b = mulm(b, b, p);
        e >>= 1;
    }
    acc
}
fn inv_mod(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

/// Complete orthogonal idempotents of an algebra over `F_p`, by generalized
/// eigenspace splitting along random elements and refining by products.
fn split_mod_p(alg: &ModAlg, p: u64, rounds: u32, rng: &mut ChaCha8Rng) -> Vec<Vec<BigInt>> {
    let mut ids = vec![alg.unit.clone()];
    for _ in 0..rounds {
        if ids.len() == alg.d {
            break;
        }
        let a: Vec<BigInt> = (0..alg.d).map(|_| BigInt::from(rng.gen_range(0..p))).collect();
        let fresh = idempotents_of_element(alg, &a, p);
        let mut next = Vec::new();
        for e in &ids {
            for f in &fresh {
                let ef = alg.mul(e, f);
                if ef.iter().any(|x| !x.is_zero()) {
                    next.push(ef);
                }
            }
        }
        ids = next;
    }
    ids
}

/// Idempotents attached to the roots of the minimal polynomial of `a`, plus
/// the idempotent of the rootless part when it is nonzero.
fn idempotents_of_element(alg: &ModAlg, a: &[BigInt], p: u64) -> Vec<Vec<BigInt>> {
    let minpoly = minimal_polynomial(alg, a, p);
    let mut roots: Vec<(u64, usize)> = Vec::new();
    let mut rest = minpoly.clone();
    for x in 0..p {
        let mut mult = 0;
        while rest.len() > 1 && poly_eval(&rest, x, p) == 0 {
            rest = poly_div_linear(&rest, x, p);
            mult += 1;
        }
        if mult > 0 {
            roots.push((x, mult));
        }
        if rest.len() == 1 {
            break;
        }
    }
    let mut out = Vec::new();
    let mut total = vec![BigInt::zero(); alg.d];
    for &(lambda, k) in &roots {
        // q = minpoly / (x − λ)^k
        let mut q = minpoly.clone();
        for _ in 0..k {
            q = poly_div_linear(&q, lambda, p);
        }
        let scale = inv_mod(poly_eval(&q, lambda, p), p);
        let qa = eval_in_algebra(alg, &q, a);
        let mut e: Vec<BigInt> = qa.iter().map(|x| (x * BigInt::from(scale)) % BigInt::from(p)).collect();
        e = refine_idempotent(alg, e, 2 + alg.d);
        total = alg.lin(&[(BigInt::one(), &total), (BigInt::one(), &e)]);
        out.push(e);
    }
    let rem = alg.lin(&[(BigInt::one(), &alg.unit), (BigInt::from(-1), &total)]);
    if rem.iter().any(|x| !x.is_zero()) {
        out.push(rem);
    }
    out
}

/// Newton iteration `e ← 3e² − 2e³` until `e² = e` (modulo `alg.m`).
fn refine_idempotent(alg: &ModAlg, mut e: Vec<BigInt>, max_iter: usize) -> Vec<BigInt> {
    for _ in 0..max_iter {
        let e2 = alg.mul(&e, &e);
        if e2 == e {
            break;
        }
        let e3 = alg.mul(&e2, &e);
        e = alg.lin(&[(BigInt::from(3), &e2), (BigInt::from(-2), &e3)]);
    }
    e
}

fn minimal_polynomial(alg: &ModAlg, a: &[BigInt], p: u64) -> Vec<u64> {
    // echelon rows: (pivot, vector, combination over powers)
    let mut rows: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut power: Vec<BigInt> = alg.unit.clone();
    for k in 0..=alg.d {
        let mut v: Vec<u64> = power.iter().map(|x| x.to_u64().unwrap()).collect();
        let mut comb = vec![0u64; alg.d + 1];
        comb[k] = 1;
        for (piv, rv, rc) in &rows {
            let f = v[*piv];
            if f != 0 {
                for j in 0..v.len() {
                    v[j] = subm(v[j], mulm(f, rv[j], p), p);
                }
                for j in 0..comb.len() {
                    comb[j] = subm(comb[j], mulm(f, rc[j], p), p);
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => {
                comb.truncate(k + 1);
                return comb;
            }
            Some(piv) => {
                let inv = inv_mod(v[piv], p);
                for x in v.iter_mut() {
                    *x = mulm(*x, inv, p);
                }
                for x in comb.iter_mut() {
                    *x = mulm(*x, inv, p);
                }
                rows.push((piv, v, comb));
            }
        }
        power = alg.mul(&power, a);
    }
    unreachable!("minimal polynomial has degree at most the dimension")
}

fn poly_eval(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| addm(mulm(acc, x, p), c, p))
}

/// Exact division by `(x − λ)` (synthetic division, remainder dropped).
fn poly_div_linear(poly: &[u64], lambda: u64, p: u64) -> Vec<u64> {
    let n = poly.len();
    let mut out = vec![0u64; n - 1];
    let mut carry = 0u64;
    for k in (1..n).rev() {
        carry = addm(poly[k], mulm(carry, lambda, p), p);
        out[k - 1] = carry;
    }
    out
}

fn eval_in_algebra(alg: &ModAlg, poly: &[u64], a: &[BigInt]) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); alg.d];
    for &c in poly.iter().rev() {
        acc = alg.mul(&acc, a);
        acc = alg.lin(&[(BigInt::one(), &acc), (BigInt::from(c), &alg.unit)]);
    }
    acc
}

/// Primitive n-th root of unity modulo a prime `p ≡ 1 (mod n)`.
fn root_of_unity_mod(n: u64, p: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let prime_factors: Vec<u64> = {
        let mut f = vec![];
        let mut m = n;
        let mut q = 2;
        while q * q <= m {
            if m.is_multiple_of(q) {
                f.push(q);
                while m.is_multiple_of(q) {
                    m /= q;
                }
            }
            q += 1;
        }
        if m > 1 {
            f.push(m);
        }
        f
    };
    for x in 2..p {
        let r = powm(x, (p - 1) / n, p);
        if prime_factors.iter().all(|&q| powm(r, n / q, p) != 1) {
            return r;
        }
    }
    unreachable!("p ≡ 1 (mod n) has a primitive n-th root")
}

fn lift_and_reconstruct(a: &CommAlgebra, opts: &IdempotentOptions) -> Result<Vec<Vec<FieldElem>>> {
    let field = &a.field;
    let (n, phi, modulus_poly): (u64, usize, Vec<BigInt>) = match field.cyclo() {
        Some(c) => (c.n as u64, c.phi, c.modulus.clone()),
        None => (1, 1, vec![BigInt::from(-1), BigInt::one()]),
    };
    let exponents: Vec<u64> = (1..=n.max(1)).filter(|k| k.gcd(&n) == 1).collect();
    debug_assert_eq!(exponents.len(), phi);
    let mut last_reason = String::from("no attempt made");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed_1de7);
    for p in primes_one_mod(n, 1 << 12).take(opts.primes as usize) {
        let pb = BigInt::from(p);
        let r0 = root_of_unity_mod(n, p);
        let Some(base_p): Option<Vec<ModAlg>> = exponents
            .iter()
            .map(|&k| {
                let r = powm(r0, k, p);
                let powers = powers_mod(&BigInt::from(r), phi, &pb);
                ModAlg::embed(a, &powers, &pb)
            })
            .collect()
        else {
            last_reason = format!("prime {p} divides a denominator");
            continue;
        };
        // Split once per embedding; the lifting precision is raised on retry.
        let rounds = 6 + a.dim as u32;
        let split: Vec<Vec<Vec<BigInt>>> = base_p.iter().map(|alg| split_mod_p(alg, p, rounds, &mut rng)).collect();
        let count = split[0].len();
        if split.iter().any(|s| s.len() != count) {
            last_reason = format!("embeddings disagree on the number of idempotents mod {p}");
            continue;
        }
        let ranks: Vec<Vec<usize>> = base_p
            .iter()
            .zip(&split)
            .map(|(alg, ids)| ids.iter().map(|e| alg.image_rank(e)).collect())
            .collect();
        for attempt in 0..=opts.retries {
            let bits = opts.bound_bits << attempt;
            let bound = BigInt::one() << bits;
            let target: BigInt = BigInt::from(2) * &bound * &bound;
            let mut mk = pb.clone();
            while mk <= target {
                mk *= &pb;
            }
            // lift the root of Φₙ, then the embedded algebras and idempotents
            let r_lift = lift_root(&modulus_poly, r0, &mk, p);
            let lifted: Option<Vec<ModAlg>> = exponents
                .iter()
                .map(|&k| {
                    let r = r_lift.modpow(&BigInt::from(k), &mk);
                    ModAlg::embed(a, &powers_mod(&r, phi, &mk), &mk)
                })
                .collect();
            let Some(lifted) = lifted else {
                last_reason = format!("prime {p} divides a denominator");
                break;
            };
            let lifted_ids: Vec<Vec<Vec<BigInt>>> = lifted
                .iter()
                .zip(&split)
                .map(|(alg, ids)| ids.iter().map(|e| refine_idempotent(alg, e.clone(), 2 + 2 * bits as usize)).collect())
                .collect();
            let roots: Vec<BigInt> = exponents.iter().map(|&k| r_lift.modpow(&BigInt::from(k), &mk)).collect();
            let Some(vinv) = vandermonde_inverse(&roots, phi, &mk) else {
                last_reason = "singular Vandermonde system".into();
                break;
            };
            match match_and_reconstruct(a, &lifted_ids, &ranks, &vinv, &mk, &bound) {
                Ok(ids) => {
                    if a.is_complete_orthogonal(&ids) {
                        return Ok(ids);
                    }
                    last_reason = "reconstructed idempotents are not complete and orthogonal".into();
                }
                Err(reason) => last_reason = reason,
            }
        }
    }
    Err(Error::NonSplit(last_reason))
}

fn powers_mod(r: &BigInt, count: usize, m: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut acc = BigInt::one() % m;
    for _ in 0..count {
        out.push(acc.clone());
        acc = (&acc * r).mod_floor(m);
    }
    out
}

/// Newton lift of a simple root of `f` from `p` to `m = p^K`.
fn lift_root(f: &[BigInt], r0: u64, m: &BigInt, p: u64) -> BigInt {
    let df: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();
    let eval = |poly: &[BigInt], x: &BigInt| -> BigInt {
        poly.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
    };
    let mut r = BigInt::from(r0);
    let mut prec = BigInt::from(p);
    while &prec < m {
        prec = (&prec * &prec).min(m.clone());
        let fv = eval(f, &r);
        let dv = eval(&df, &r);
        let inv = mod_inverse(&dv, m).expect("Φₙ is separable modulo p when p ∤ n");
        r = (&r - fv * inv).mod_floor(m);
    }
    r
}

/// Inverse of `V[j][k] = root_j^k` modulo `m`, by Gauss–Jordan.
fn vandermonde_inverse(roots: &[BigInt], phi: usize, m: &BigInt) -> Option<Vec<Vec<BigInt>>> {
    let mut aug: Vec<Vec<BigInt>> = roots
        .iter()
        .enumerate()
        .map(|(j, r)| {
            let mut row = powers_mod(r, phi, m);
            row.extend((0..phi).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    for c in 0..phi {
        let piv = (c..phi).find(|&i| mod_inverse(&aug[i][c], m).is_some())?;
        aug.swap(c, piv);
        let inv = mod_inverse(&aug[c][c], m)?;
        for x in aug[c].iter_mut() {
            *x = (&*x * &inv).mod_floor(m);
        }
        for i in 0..phi {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                let pivot_row = aug[c].clone();
                for (x, y) in aug[i].iter_mut().zip(&pivot_row) {
                    *x = (&*x - &f * y).mod_floor(m);
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[phi..].to_vec()).collect())
}

fn match_and_reconstruct(
    a: &CommAlgebra,
    lifted: &[Vec<Vec<BigInt>>],
    ranks: &[Vec<usize>],
    vinv: &[Vec<BigInt>],
    m: &BigInt,
    bound: &BigInt,
) -> std::result::Result<Vec<Vec<FieldElem>>, String> {
    let phi = lifted.len();
    let count = lifted[0].len();
    let mut used: Vec<Vec<bool>> = vec![vec![false; count]; phi];
    let mut out = Vec::with_capacity(count);
    for i0 in 0..count {
        let rank = ranks[0][i0];
        // candidate lists per further embedding
        let cands: Vec<Vec<usize>> = (1..phi)
            .map(|j| (0..count).filter(|&c| !used[j][c] && ranks[j][c] == rank).collect())
            .collect();
        let mut choice = vec![0usize; phi.saturating_sub(1)];
        let mut found = None;
        'combos: loop {
            if cands.iter().any(Vec::is_empty) {
                break;
            }
            let picks: Vec<&Vec<BigInt>> = std::iter::once(&lifted[0][i0])
                .chain((1..phi).map(|j| &lifted[j][cands[j - 1][choice[j - 1]]]))
                .collect();
            if let Some(e) = reconstruct_element(a, &picks, vinv, m, bound) {
                if a.mul(&e, &e) == e {
                    found = Some((e, choice.clone()));
                    break 'combos;
                }
            }
            // advance odometer
            let mut k = 0;
            loop {
                if k == choice.len() {
                    break 'combos;
                }
                choice[k] += 1;
                if choice[k] < cands[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
        let Some((e, choice)) = found else {
            return Err(format!("no consistent reconstruction for idempotent #{i0}"));
        };
        for j in 1..phi {
            used[j][cands[j - 1][choice[j - 1]]] = true;
        }
        out.push(e);
    }
    Ok(out)
}

fn reconstruct_element(
    a: &CommAlgebra,
    per_embedding: &[&Vec<BigInt>],
    vinv: &[Vec<BigInt>],
    m: &BigInt,
    bound: &BigInt,
) -> Option<Vec<FieldElem>> {
    let phi = per_embedding.len();
    let mut out = Vec::with_capacity(a.dim);
    for i in 0..a.dim {
        let mut coords = Vec::with_capacity(phi);
        for row in vinv.iter().take(phi) {
            let mut c = BigInt::zero();
            for (j, v) in row.iter().enumerate() {
                c += v * &per_embedding[j][i];
            }
            let c = c.mod_floor(m);
            coords.push(rational_reconstruct(&c, m, bound)?);
        }
        out.push(match a.field.spec() {
            FieldSpec::Rationals => a.field.from_rational(&coords[0]),
            _ => a.field.from_power_coords(&coords),
        });
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Group algebra of `Z_n` over `field`.
    pub(crate) fn cyclic_group_algebra(field: &Field, n: usize) -> CommAlgebra {
        let mult = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = vec![field.zero(); n];
                        v[(i + j) % n] = field.one();
                        v
                    })
                    .collect()
            })
            .collect();
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        CommAlgebra::new(field, mult, unit).unwrap()
    }

    #[test]
    fn z2_over_rationals() {
        let q = Field::rationals();
        let a = cyclic_group_algebra(&q, 2);
        let ids = idempotents_commutative(&a).unwrap();
        let half = q.from_ratio(1, 2);
        let mut expect = vec![vec![half.clone(), half.clone()], vec![half.clone(), -&half]];
        let mut got = ids.clone();
        expect.sort_by_key(|v| format!("{v:?}"));
        got.sort_by_key(|v| format!("{v:?}"));
        assert_eq!(got, expect);
    }

    #[test]
    fn local_algebra_has_only_the_unit() {
        let q = Field::rationals();
        let (z, o) = (q.zero(), q.one());
        let mult = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
        ];
        let a = CommAlgebra::new(&q, mult, vec![o.clone(), z.clone()]).unwrap();
        assert_eq!(idempotents_commutative(&a).unwrap(), vec![vec![o, z]]);
    }

    #[test]
    fn z4_over_gaussian_rationals() {
        let k = Field::cyclotomic(4);
        let a = cyclic_group_algebra(&k, 4);
        let ids = idempotents_commutative(&a).unwrap();
        assert_eq!(ids.len(), 4);
        assert!(a.is_complete_orthogonal(&ids));
        // oracle: (1/4) Σ_k ζ^{-jk} u^k
        let z = k.zeta().unwrap();
        for j in 0..4i64 {
            let e: Vec<FieldElem> = (0..4i64).map(|kk| &k.from_ratio(1, 4) * &z.pow(-j * kk).unwrap()).collect();
            assert!(ids.contains(&e), "missing idempotent for j = {j}");
        }
    }

    #[test]
    fn z3_over_rationals_splits_partially() {
        // Q[Z₃] ≅ Q × Q(ζ₃): two idempotents over Q
        let q = Field::rationals();
        let a = cyclic_group_algebra(&q, 3);
        match idempotents_commutative(&a) {
            Ok(ids) => assert!(a.is_complete_orthogonal(&ids)),
            Err(Error::NonSplit(_)) => {}
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn prime_field_split() {
        let f = Field::prime(5).unwrap();
        let a = cyclic_group_algebra(&f, 4);
        let ids = idempotents_commutative(&a).unwrap();
        assert_eq!(ids.len(), 4);
        assert!(a.is_complete_orthogonal(&ids));
    }

    #[test]
    fn rejects_noncommutative_tables() {
        let q = Field::rationals();
        let (z, o) = (q.zero(), q.one());
        let mult = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), z.clone()], vec![z.clone(), z.clone()]],
        ];
        assert_eq!(CommAlgebra::new(&q, mult, vec![o, z]).unwrap_err(), Error::NotCommutative);
    }
}
