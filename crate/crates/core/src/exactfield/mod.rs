//! Exact scalars and linear algebra.
//!
//! Three field models are supported: `Q`, cyclotomic fields `Q(ζₙ)` (elements
//! stored as coordinates in `1, ζ, …, ζ^{φ(n)−1}` reduced modulo `Φₙ`), and
//! prime fields `F_p`. There is no floating point anywhere.
//!
//! ```
//! use gsla_core::exactfield::{primitive_root_of_unity, Field, FieldSpec};
//! let k = Field::cyclotomic(4);
//! let i = primitive_root_of_unity(&k, 4).unwrap();
//! assert_eq!(&i * &i, k.from_i64(-1));
//! assert!(primitive_root_of_unity(&Field::rationals(), 3).is_err());
//! ```

mod coords;
mod cyclotomic;
mod field;
mod idempotent;
mod literal;
mod matrix;
mod modular;
mod sparse;
mod subspace;

pub use coords::Coordinatizer;
pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclo};
pub use field::{Field, FieldElem, FieldSpec};
pub use idempotent::{idempotents_commutative, idempotents_commutative_with, CommAlgebra, IdempotentOptions};
pub use literal::{format_scalar, parse_scalar};
pub use matrix::{vecops, Matrix};
pub use modular::{is_prime_u64, primes_one_mod, rational_reconstruct};
pub use sparse::{SparseRow, SparseSystem};
pub use subspace::{SpanBuilder, Subspace};

use crate::error::{Error, Result};

/// An element of multiplicative order exactly `m`.
///
/// `Q(ζₙ)` needs `m | n`; `F_p` needs `m | p − 1` (the smallest such element is
/// returned); `Q` only has `±1`.
pub fn primitive_root_of_unity(field: &Field, m: u64) -> Result<FieldElem> {
    let no_root = || Error::NoSuchRoot {
        field: field.spec().to_string(),
        order: m,
    };
    if m == 0 {
        return Err(no_root());
    }
    match field.spec() {
        FieldSpec::Rationals => match m {
            1 => Ok(field.one()),
            2 => Ok(field.from_i64(-1)),
            _ => Err(no_root()),
        },
        FieldSpec::Cyclotomic { n } => {
            // Q(ζₙ) = Q(ζ₂ₙ) for odd n, generated by −ζ
            let n = n as u64;
            let zeta = field.zeta().expect("cyclotomic");
            let (order, base) = if n % 2 == 1 { (2 * n, -zeta) } else { (n, zeta) };
            if order % m != 0 {
                return Err(no_root());
            }
            base.pow((order / m) as i64)
        }
        FieldSpec::Prime { p } => {
            if (p - 1) % m != 0 {
                return Err(no_root());
            }
            (1..p)
                .map(|x| field.from_i64(x as i64))
                .find(|x| x.multiplicative_order(m) == Some(m))
                .ok_or_else(no_root)
        }
    }
}
