use num_integer::Integer;

use super::{
    diagonal_module, ex1, example0_algebra, matrix2_module, pair_module, pauli_sl2, sl2_gradings, sl2_irrep, sl2_pair, sl_n,
};
use crate::abgroup::{FinAbGroup, GroupElem, Subgroup};
use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldSpec};
use crate::gradedmod::GradedModule;
use crate::liecore::GradedLieAlgebra;
use crate::loopalg::loop_algebra;

/// Smallest cyclotomic field holding the roots of unity `Q` needs (and `i`
/// when the exponent is even).
pub fn loop_field(q: &FinAbGroup) -> Field {
    let e = q.exponent();
    let n = if e % 2 == 1 { e } else { e.lcm(&4) };
    Field::cyclotomic(n as u32)
}

/// One `(Q, P, a)` with `a` an `sl₂` grading by `Q/P`.
#[derive(Clone, Debug)]
pub struct LoopEntry {
    pub name: String,
    pub q: FinAbGroup,
    pub p: Subgroup,
    pub a: GradedLieAlgebra,
}

/// Every subgroup `P` of each group in `moduli_list`, with every `sl₂`
/// grading by `Q/P` from [`sl2_gradings`], over [`loop_field`].
pub fn loop_catalog(moduli_list: &[&[u64]]) -> Result<Vec<LoopEntry>> {
    let mut out = Vec::new();
    for moduli in moduli_list {
        let q = FinAbGroup::new(moduli.to_vec())?;
        let field = loop_field(&q);
        for p in q.subgroups() {
            let quo = q.quotient_by(&p)?;
            for (gname, a) in sl2_gradings(&field, &quo)? {
                let gens: Vec<String> = p.generators().iter().map(|g| g.to_string()).collect();
                out.push(LoopEntry {
                    name: format!("{q}/<{}>:{gname}", gens.join(",")),
                    q: q.clone(),
                    p: p.clone(),
                    a,
                });
            }
        }
    }
    Ok(out)
}

/// The groups used by the default loop catalog (all of order ≤ 8).
pub const LOOP_GROUPS: [&[u64]; 5] = [&[2], &[3], &[4], &[2, 2], &[2, 4]];

/// Parameters accepted by [`build`]; unused ones are ignored.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub field: Option<FieldSpec>,
    /// `sl_n` size, `sl2-irrep` highest weight, `diagonal-module` weight
    pub n: Option<usize>,
    pub h1: Option<usize>,
    pub h2: Option<usize>,
    /// prime for `example0`
    pub p: Option<u64>,
    /// `loop-sl2`: moduli of `Q`
    pub moduli: Option<Vec<u64>>,
    /// `loop-sl2`: generators of `P`
    pub p_gens: Vec<GroupElem>,
    /// `loop-sl2`: index into the gradings of `Q/P`
    pub grading: Option<usize>,
}

#[derive(Clone, Debug)]
pub enum Built {
    Algebra(GradedLieAlgebra),
    Module(GradedModule),
    /// `(Q, P, a)`, ready for `loop-build`
    LoopRequest(FinAbGroup, Subgroup, GradedLieAlgebra),
}

/// Name, parameters, and what the entry is.
pub const ENTRIES: [(&str, &str, &str); 14] = [
    ("sl2", "[--field]", "sl2, trivially graded"),
    ("sl-n", "--n N [--field]", "sl_n, trivially graded"),
    ("pauli-sl2", "[--field]", "sl2 graded by Z2xZ2 (h, e+f, e-f)"),
    ("sl2-pair", "[--field]", "sl2+sl2 graded by Z2 via the swap"),
    ("example0", "[--p P]", "g(Z_p, Z_p, sl2) over F_p, p = 3 by default"),
    ("loop-sl2", "--moduli M --p-gen G [--grading K]", "g(Q, P, sl2) for a grading of sl2 by Q/P"),
    ("loop-request", "--moduli M --p-gen G [--grading K]", "the loop-build request behind loop-sl2"),
    ("matrix2", "[--field]", "2x2 matrices over the Pauli-graded sl2"),
    ("sl2-irrep", "--n M [--field]", "irreducible sl2-module of dimension M+1"),
    ("pair-module", "--h1 A --h2 B [--field]", "L(A,B)+L(B,A) over sl2-pair"),
    ("diagonal-module", "--n H [--field]", "L(H,H) over sl2-pair"),
    ("ex1-w", "", "the two-dimensional module W of the worked example"),
    ("ex1-v", "", "its one-dimensional V graded by Q/P"),
    ("adjoint-pauli", "[--field]", "adjoint module of the Pauli-graded sl2"),
];

fn need<T: Clone>(v: &Option<T>, what: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::InvalidInput(format!("missing parameter --{what}")))
}

fn loop_request(params: &Params) -> Result<(FinAbGroup, Subgroup, GradedLieAlgebra)> {
    let q = FinAbGroup::new(need(&params.moduli, "moduli")?)?;
    for g in &params.p_gens {
        if g.coords().len() != q.rank() {
            return Err(Error::InvalidInput(format!("P generator {g} has the wrong rank")));
        }
    }
    let p = q.subgroup(&params.p_gens);
    let quo = q.quotient_by(&p)?;
    let field = match params.field {
        Some(spec) => Field::new(spec)?,
        None => loop_field(&q),
    };
    let mut gradings = sl2_gradings(&field, &quo)?;
    let k = params.grading.unwrap_or(if gradings.len() > 1 { 1 } else { 0 });
    if k >= gradings.len() {
        return Err(Error::InvalidInput(format!("--grading {k}: only {} gradings of sl2 by {quo}", gradings.len())));
    }
    let (_, a) = gradings.swap_remove(k);
    Ok((q, p, a))
}

/// Builds a catalog entry by name.
pub fn build(name: &str, params: &Params) -> Result<Built> {
    let field = |default: Field| -> Result<Field> {
        match params.field {
            Some(spec) => Field::new(spec),
            None => Ok(default),
        }
    };
    let q = Field::rationals;
    let qi = || Field::cyclotomic(4);
    Ok(match name {
        "sl2" => Built::Algebra(sl_n(&field(q())?, 2)?),
        "sl-n" => Built::Algebra(sl_n(&field(q())?, need(&params.n, "n")?)?),
        "pauli-sl2" => Built::Algebra(pauli_sl2(&field(qi())?)?),
        "sl2-pair" => Built::Algebra(sl2_pair(&field(q())?)?),
        "example0" => Built::Algebra(example0_algebra(params.p.unwrap_or(3))?.algebra),
        "loop-sl2" => {
            let (q, p, a) = loop_request(params)?;
            Built::Algebra(loop_algebra(&q, &p, &a)?.algebra)
        }
        "loop-request" => {
            let (q, p, a) = loop_request(params)?;
            Built::LoopRequest(q, p, a)
        }
        "matrix2" => Built::Module(matrix2_module(&field(qi())?)?),
        "sl2-irrep" => Built::Module(sl2_irrep(&field(q())?, need(&params.n, "n")?)?),
        "pair-module" => Built::Module(pair_module(&field(qi())?, need(&params.h1, "h1")?, need(&params.h2, "h2")?)?),
        "diagonal-module" => Built::Module(diagonal_module(&field(qi())?, need(&params.n, "n")?)?),
        "ex1-w" => Built::Module(ex1()?.w),
        "ex1-v" => Built::Module(ex1()?.v),
        "adjoint-pauli" => Built::Module(super::adjoint_module(&pauli_sl2(&field(qi())?)?)?),
        other => return Err(Error::InvalidInput(format!("unknown catalog entry {other:?}"))),
    })
}
