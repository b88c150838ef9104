//! Finite abelian groups `Z_{n₁} × … × Z_{n_k}`, their quotients, subgroups
//! and character groups.
//!
//! A [`FinAbGroup`] is either a plain product or a quotient of one by a
//! subgroup; quotient elements are represented by the lexicographically
//! least tuple of their coset.
//!
//! ```
//! use gsla_core::abgroup::{characters, FinAbGroup, GroupElem};
//! use gsla_core::exactfield::Field;
//! let q = FinAbGroup::new(vec![2, 2]).unwrap();
//! let chars = characters(&q, &Field::cyclotomic(4)).unwrap();
//! assert_eq!(chars.len(), 4);
//! let p = q.subgroup(&[GroupElem::new(vec![1, 0])]);
//! assert_eq!(p.order(), 2);
//! ```

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{primitive_root_of_unity, Field, FieldElem, Matrix};

/// Largest ambient group we are willing to enumerate.
pub const MAX_AMBIENT_ORDER: u64 = 4096;

/// A tuple of coordinates; reduced modulo the group's moduli once it has been
/// through [`FinAbGroup::canonical`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElem(pub Vec<u64>);

impl GroupElem {
    pub fn new(coords: Vec<u64>) -> Self {
        GroupElem(coords)
    }
    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

struct GroupData {
    moduli: Vec<u64>,
    /// elements of the subgroup factored out (just `0` for a plain product)
    sub: Vec<GroupElem>,
    sub_gens: Vec<GroupElem>,
    /// canonical representatives, sorted
    elements: Vec<GroupElem>,
    /// reduced ambient tuple → index of its canonical representative
    lookup: HashMap<GroupElem, usize>,
}

/// A finite abelian group, possibly a quotient. Cheap to clone.
#[derive(Clone)]
pub struct FinAbGroup {
    data: Arc<GroupData>,
}

impl PartialEq for FinAbGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || (self.data.moduli == other.data.moduli && self.data.sub == other.data.sub)
    }
}
impl Eq for FinAbGroup {}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = if self.data.moduli.is_empty() {
            "0".to_string()
        } else {
            self.data.moduli.iter().map(|n| format!("Z{n}")).collect::<Vec<_>>().join("x")
        };
        if self.is_quotient() {
            let gens: Vec<String> = self.data.sub_gens.iter().map(|g| g.to_string()).collect();
            write!(f, "{base}/<{}>", gens.join(","))
        } else {
            write!(f, "{base}")
        }
    }
}

fn enumerate_tuples(moduli: &[u64]) -> Vec<GroupElem> {
    let mut out = vec![GroupElem(vec![])];
    for &n in moduli {
        let mut next = Vec::with_capacity(out.len() * n as usize);
        for t in &out {
            for a in 0..n {
                let mut c = t.0.clone();
                c.push(a);
                next.push(GroupElem(c));
            }
        }
        out = next;
    }
    out
}

impl FinAbGroup {
    /// `Z_{n₁} × … × Z_{n_k}`; an empty list gives the trivial group.
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(Error::InvalidInput("group moduli must be positive".into()));
        }
        let order: u64 = moduli.iter().product();
        if order > MAX_AMBIENT_ORDER {
            return Err(Error::InvalidInput(format!("group of order {order} exceeds the cap {MAX_AMBIENT_ORDER}")));
        }
        let zero = GroupElem(vec![0; moduli.len()]);
        Self::build(moduli, vec![zero], vec![])
    }

    pub fn cyclic(n: u64) -> Self {
        FinAbGroup::new(vec![n]).expect("cyclic group")
    }

    pub fn trivial() -> Self {
        FinAbGroup::new(vec![]).expect("trivial group")
    }

    fn build(moduli: Vec<u64>, sub: Vec<GroupElem>, sub_gens: Vec<GroupElem>) -> Result<Self> {
        let all = enumerate_tuples(&moduli);
        let add = |a: &GroupElem, b: &GroupElem| -> GroupElem {
            GroupElem(a.0.iter().zip(&b.0).zip(&moduli).map(|((x, y), n)| (x + y) % n).collect())
        };
        let mut lookup = HashMap::with_capacity(all.len());
        let mut reps: BTreeSet<GroupElem> = BTreeSet::new();
        for a in &all {
            if lookup.contains_key(a) {
                continue;
            }
            let coset: Vec<GroupElem> = sub.iter().map(|s| add(a, s)).collect();
            let rep = coset.iter().min().unwrap().clone();
            reps.insert(rep.clone());
            for c in coset {
                lookup.insert(c, usize::MAX);
            }
            let _ = rep;
        }
        let elements: Vec<GroupElem> = reps.into_iter().collect();
        let index: HashMap<&GroupElem, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        for a in &all {
            let rep = sub.iter().map(|s| add(a, s)).min().unwrap();
            lookup.insert(a.clone(), index[&rep]);
        }
        let mut sub = sub;
        sub.sort();
        Ok(FinAbGroup {
            data: Arc::new(GroupData {
                moduli,
                sub,
                sub_gens,
                elements,
                lookup,
            }),
        })
    }

    pub fn moduli(&self) -> &[u64] {
        &self.data.moduli
    }

    pub fn rank(&self) -> usize {
        self.data.moduli.len()
    }

    pub fn order(&self) -> usize {
        self.data.elements.len()
    }

    pub fn ambient_order(&self) -> usize {
        self.data.moduli.iter().product::<u64>() as usize
    }

    pub fn is_quotient(&self) -> bool {
        self.data.sub.len() > 1
    }

    /// Generators of the subgroup factored out (empty for a plain product).
    pub fn quotient_generators(&self) -> &[GroupElem] {
        &self.data.sub_gens
    }

    /// Elements of the subgroup factored out.
    pub fn quotient_subgroup_elements(&self) -> &[GroupElem] {
        &self.data.sub
    }

    /// The plain product group with the same moduli.
    pub fn ambient(&self) -> FinAbGroup {
        if !self.is_quotient() {
            return self.clone();
        }
        FinAbGroup::new(self.data.moduli.clone()).expect("ambient group")
    }

    /// Exponent of the group itself (of the quotient, if this is one).
    pub fn exponent(&self) -> u64 {
        self.data.elements.iter().map(|a| self.order_of(a)).fold(1, |acc, k| acc.lcm(&k))
    }

    /// lcm of the moduli.
    pub fn ambient_exponent(&self) -> u64 {
        self.data.moduli.iter().fold(1, |acc, &n| acc.lcm(&n))
    }

    pub fn elements(&self) -> &[GroupElem] {
        &self.data.elements
    }

    pub fn zero(&self) -> GroupElem {
        GroupElem(vec![0; self.rank()])
    }

    fn reduce(&self, a: &GroupElem) -> Result<GroupElem> {
        if a.0.len() != self.rank() {
            return Err(Error::InvalidInput(format!(
                "element {a} has {} coordinates, group {self} needs {}",
                a.0.len(),
                self.rank()
            )));
        }
        Ok(GroupElem(a.0.iter().zip(&self.data.moduli).map(|(x, n)| x % n).collect()))
    }

    /// Index of the element (after reduction) in [`Self::elements`].
    pub fn index_of(&self, a: &GroupElem) -> Result<usize> {
        let r = self.reduce(a)?;
        Ok(self.data.lookup[&r])
    }

    /// Canonical representative of `a` (reduced, then least in its coset).
    pub fn canonical(&self, a: &GroupElem) -> Result<GroupElem> {
        Ok(self.data.elements[self.index_of(a)?].clone())
    }

    /// Like [`Self::canonical`] for elements known to have the right shape.
    pub fn canon(&self, a: &GroupElem) -> GroupElem {
        self.canonical(a).expect("element of the wrong rank")
    }

    pub fn add(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        let sum = GroupElem(a.0.iter().zip(&b.0).zip(&self.data.moduli).map(|((x, y), n)| (x + y) % n).collect());
        self.canon(&sum)
    }

    pub fn neg(&self, a: &GroupElem) -> GroupElem {
        let r = GroupElem(a.0.iter().zip(&self.data.moduli).map(|(x, n)| (n - x % n) % n).collect());
        self.canon(&r)
    }

    pub fn sub(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: u64, a: &GroupElem) -> GroupElem {
        let r = GroupElem(a.0.iter().zip(&self.data.moduli).map(|(x, n)| (x % n) * (k % n) % n).collect());
        self.canon(&r)
    }

    pub fn is_zero(&self, a: &GroupElem) -> bool {
        self.index_of(a).map(|i| i == 0).unwrap_or(false)
    }

    pub fn eq_elems(&self, a: &GroupElem, b: &GroupElem) -> bool {
        self.index_of(a).ok() == self.index_of(b).ok()
    }

    pub fn order_of(&self, a: &GroupElem) -> u64 {
        let zero_idx = self.index_of(&self.zero()).unwrap();
        let mut acc = self.canon(a);
        let mut k = 1;
        while self.index_of(&acc).unwrap() != zero_idx {
            acc = self.add(&acc, a);
            k += 1;
        }
        k
    }

    /// `Q/⟨gens⟩`; quotients of quotients factor out the combined subgroup.
    pub fn quotient(&self, gens: &[GroupElem]) -> Result<FinAbGroup> {
        let ambient = self.ambient();
        let mut all_gens = self.data.sub_gens.clone();
        for g in gens {
            all_gens.push(ambient.reduce(g)?);
        }
        let sub = closure(&ambient, &all_gens);
        let sub_gens = minimal_generators(&ambient, &sub);
        FinAbGroup::build(self.data.moduli.clone(), sub, sub_gens)
    }

    /// `Q/P` for a subgroup `P` of this group.
    pub fn quotient_by(&self, p: &Subgroup) -> Result<FinAbGroup> {
        if p.parent() != self {
            return Err(Error::GradingMismatch("subgroup belongs to a different group".into()));
        }
        self.quotient(&p.data.elements)
    }

    /// True when `self` is a quotient of `finer` (same moduli, larger kernel).
    pub fn is_coarsening_of(&self, finer: &FinAbGroup) -> bool {
        self.data.moduli == finer.data.moduli && finer.data.sub.iter().all(|s| self.data.sub.binary_search(s).is_ok())
    }

    /// Subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[GroupElem]) -> Subgroup {
        subgroup_generate(self, gens).expect("generators of the wrong rank")
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup(&[])
    }

    pub fn whole(&self) -> Subgroup {
        let gens = minimal_generators(self, self.elements());
        self.subgroup(&gens)
    }

    /// All subgroups, ordered by size and then by element list.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut seen: BTreeSet<Vec<GroupElem>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        let triv = self.trivial_subgroup();
        seen.insert(triv.data.elements.clone());
        queue.push_back(triv.clone());
        let mut out = vec![triv];
        while let Some(s) = queue.pop_front() {
            for g in self.elements() {
                if s.contains(g) {
                    continue;
                }
                let mut gens = s.data.generators.clone();
                gens.push(g.clone());
                let t = self.subgroup(&gens);
                if seen.insert(t.data.elements.clone()) {
                    queue.push_back(t.clone());
                    out.push(t);
                }
            }
        }
        out.sort_by(|a, b| (a.order(), &a.data.elements).cmp(&(b.order(), &b.data.elements)));
        out
    }
}

fn closure(g: &FinAbGroup, gens: &[GroupElem]) -> Vec<GroupElem> {
    let mut seen: BTreeSet<GroupElem> = BTreeSet::new();
    let zero = g.canon(&g.zero());
    seen.insert(zero.clone());
    let mut queue = VecDeque::from([zero]);
    let gens: Vec<GroupElem> = gens.iter().map(|x| g.canon(x)).collect();
    while let Some(a) = queue.pop_front() {
        for s in &gens {
            let b = g.add(&a, s);
            if seen.insert(b.clone()) {
                queue.push_back(b);
            }
        }
    }
    seen.into_iter().collect()
}

/// Greedy generating set: scan `elements` in order, keep those not yet generated.
fn minimal_generators(g: &FinAbGroup, elements: &[GroupElem]) -> Vec<GroupElem> {
    let mut gens: Vec<GroupElem> = Vec::new();
    let mut span: BTreeSet<GroupElem> = closure(g, &[]).into_iter().collect();
    for e in elements {
        let e = g.canon(e);
        if !span.contains(&e) {
            gens.push(e);
            span = closure(g, &gens).into_iter().collect();
        }
    }
    gens
}

struct SubgroupData {
    parent: FinAbGroup,
    elements: Vec<GroupElem>,
    generators: Vec<GroupElem>,
}

/// A subgroup, stored with its full sorted element list.
#[derive(Clone)]
pub struct Subgroup {
    data: Arc<SubgroupData>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.data.parent == other.data.parent && self.data.elements == other.data.elements
    }
}
impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let els: Vec<String> = self.data.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", els.join(", "))
    }
}

/// Smallest subgroup containing `gens` (breadth-first closure).
pub fn subgroup_generate(q: &FinAbGroup, gens: &[GroupElem]) -> Result<Subgroup> {
    let gens: Vec<GroupElem> = gens.iter().map(|g| q.canonical(g)).collect::<Result<_>>()?;
    let elements = closure(q, &gens);
    let generators = minimal_generators(q, &gens);
    Ok(Subgroup {
        data: Arc::new(SubgroupData {
            parent: q.clone(),
            elements,
            generators,
        }),
    })
}

impl Subgroup {
    pub fn parent(&self) -> &FinAbGroup {
        &self.data.parent
    }
    pub fn elements(&self) -> &[GroupElem] {
        &self.data.elements
    }
    pub fn generators(&self) -> &[GroupElem] {
        &self.data.generators
    }
    pub fn order(&self) -> usize {
        self.data.elements.len()
    }
    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }
    pub fn is_whole(&self) -> bool {
        self.order() == self.data.parent.order()
    }
    pub fn contains(&self, a: &GroupElem) -> bool {
        match self.data.parent.canonical(a) {
            Ok(c) => self.data.elements.binary_search(&c).is_ok(),
            Err(_) => false,
        }
    }
    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.data.elements.iter().all(|e| other.contains(e))
    }
}

/// A homomorphism `Q → k^*` with values in roots of unity.
///
/// Stored by its exponent tuple on the ambient product `Z_{n₁} × … × Z_{n_k}`;
/// characters of a quotient are those trivial on the factored-out subgroup.
#[derive(Clone)]
pub struct Character {
    group: FinAbGroup,
    exps: Vec<u64>,
    /// value at each element of `group`, by element index
    values: Arc<Vec<FieldElem>>,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.exps == other.exps
    }
}
impl Eq for Character {}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi{:?}", self.exps)
    }
}

impl Character {
    /// The character with exponent tuple `exps`.
    pub fn new(group: &FinAbGroup, field: &Field, exps: Vec<u64>) -> Result<Character> {
        if exps.len() != group.rank() {
            return Err(Error::InvalidInput("character exponent tuple has the wrong length".into()));
        }
        let exps: Vec<u64> = exps.iter().zip(group.moduli()).map(|(e, n)| e % n).collect();
        let big = group.ambient_exponent();
        let small = group.exponent();
        let omega = primitive_root_of_unity(field, small)?;
        let powers: Vec<FieldElem> = (0..small).map(|k| omega.pow(k as i64).expect("root of unity")).collect();
        let raw = |a: &GroupElem| -> u64 {
            a.0.iter()
                .zip(&exps)
                .zip(group.moduli())
                .map(|((x, e), n)| (x * e % n) * (big / n))
                .sum::<u64>()
                % big
        };
        for s in group.quotient_subgroup_elements() {
            if raw(s) != 0 {
                return Err(Error::KernelMismatch(format!(
                    "exponents {exps:?} are not trivial on {s} in {group}"
                )));
            }
        }
        let step = big / small;
        let values = group
            .elements()
            .iter()
            .map(|a| {
                let k = raw(a);
                debug_assert_eq!(k % step, 0);
                powers[(k / step) as usize].clone()
            })
            .collect();
        Ok(Character {
            group: group.clone(),
            exps,
            values: Arc::new(values),
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn field(&self) -> Field {
        // values[0] = f(0) = 1 carries the field
        match &self.values[0] {
            FieldElem::Rat(_) => Field::rationals(),
            other => Field::new(other.spec()).expect("valid field"),
        }
    }

    pub fn eval(&self, a: &GroupElem) -> FieldElem {
        let i = self.group.index_of(a).expect("element of the wrong rank");
        self.values[i].clone()
    }

    pub fn values(&self) -> &[FieldElem] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Order in the character group.
    pub fn order(&self) -> u64 {
        self.exps
            .iter()
            .zip(self.group.moduli())
            .map(|(&e, &n)| n / e.gcd(&n))
            .fold(1, |acc, k| acc.lcm(&k))
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Character) -> Character {
        assert!(self.group == other.group, "characters of different groups");
        let exps = self.exps.iter().zip(&other.exps).zip(self.group.moduli()).map(|((a, b), n)| (a + b) % n).collect();
        let values = self.values.iter().zip(other.values.iter()).map(|(x, y)| x * y).collect();
        Character {
            group: self.group.clone(),
            exps,
            values: Arc::new(values),
        }
    }

    pub fn inverse(&self) -> Character {
        let exps = self.exps.iter().zip(self.group.moduli()).map(|(e, n)| (n - e) % n).collect();
        let values = self.values.iter().map(|x| x.inv().expect("root of unity")).collect();
        Character {
            group: self.group.clone(),
            exps,
            values: Arc::new(values),
        }
    }

    /// The same exponent tuple read on another group with the same moduli
    /// (e.g. a quotient, or the ambient product).
    pub fn transfer(&self, group: &FinAbGroup) -> Result<Character> {
        if group.moduli() != self.group.moduli() {
            return Err(Error::GradingMismatch("groups have different moduli".into()));
        }
        Character::new(group, &self.field(), self.exps.clone())
    }
}

/// All `|Q|` characters of `q`, in lexicographic order of exponent tuples.
pub fn characters(q: &FinAbGroup, field: &Field) -> Result<Vec<Character>> {
    primitive_root_of_unity(field, q.exponent())?;
    let mut out = Vec::with_capacity(q.order());
    for exps in enumerate_tuples(q.moduli()) {
        match Character::new(q, field, exps.0) {
            Ok(c) => out.push(c),
            Err(Error::KernelMismatch(_)) => {}
            Err(e) => return Err(e),
        }
    }
    debug_assert_eq!(out.len(), q.order());
    Ok(out)
}

/// `P^⊥ = {f : f(α) = 1 for all α ∈ P}`.
pub fn annihilator(p: &Subgroup, chars: &[Character]) -> Vec<Character> {
    chars
        .iter()
        .filter(|f| p.elements().iter().all(|a| f.eval(a).is_one()))
        .cloned()
        .collect()
}

/// `{α : f(α) = 1 for all f}`, the dual of [`annihilator`].
pub fn fixed_subgroup(q: &FinAbGroup, chars: &[Character]) -> Subgroup {
    let fixed: Vec<GroupElem> = q
        .elements()
        .iter()
        .filter(|a| chars.iter().all(|f| f.eval(a).is_one()))
        .cloned()
        .collect();
    q.subgroup(&fixed)
}

/// Entry `(f, β)` is `f(α + β)`.
pub fn character_matrix(field: &Field, alpha: &GroupElem, betas: &[GroupElem], chars: &[Character]) -> Matrix {
    let mut m = Matrix::zeros(field, chars.len(), betas.len());
    for (i, f) in chars.iter().enumerate() {
        for (j, b) in betas.iter().enumerate() {
            m.set(i, j, f.eval(&f.group().add(alpha, b)));
        }
    }
    m
}

/// Representatives of the cosets of a subgroup `h` of the group of
/// characters `chars` (first member of each coset in enumeration order).
pub fn character_coset_reps(chars: &[Character], h: &[Character]) -> Vec<Character> {
    let mut reps: Vec<Character> = Vec::new();
    for f in chars {
        let covered = reps.iter().any(|r| {
            let q = f.mul(&r.inverse());
            h.contains(&q)
        });
        if !covered {
            reps.push(f.clone());
        }
    }
    reps
}

/// Sorted multiset of element orders — matches for isomorphic finite abelian groups.
pub fn order_profile(q: &FinAbGroup) -> Vec<u64> {
    let mut v: Vec<u64> = q.elements().iter().map(|a| q.order_of(a)).collect();
    v.sort_unstable();
    v
}

/// Sorted multiset of character orders.
pub fn character_order_profile(chars: &[Character]) -> Vec<u64> {
    let mut v: Vec<u64> = chars.iter().map(Character::order).collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ge(c: &[u64]) -> GroupElem {
        GroupElem::new(c.to_vec())
    }

    #[test]
    fn generate_examples() {
        let q = FinAbGroup::new(vec![2, 2]).unwrap();
        assert!(q.subgroup(&[]).is_trivial());
        assert_eq!(q.subgroup(&[ge(&[1, 1])]).elements(), &[ge(&[0, 0]), ge(&[1, 1])]);
        let z4 = FinAbGroup::cyclic(4);
        assert_eq!(z4.subgroup(&[ge(&[2])]).elements(), &[ge(&[0]), ge(&[2])]);
    }

    #[test]
    fn quotient_representatives() {
        let q = FinAbGroup::new(vec![2, 2]).unwrap();
        let qp = q.quotient(&[ge(&[1, 1])]).unwrap();
        assert_eq!(qp.order(), 2);
        assert_eq!(qp.elements(), &[ge(&[0, 0]), ge(&[0, 1])]);
        assert_eq!(qp.canon(&ge(&[1, 0])), ge(&[0, 1]));
        assert_eq!(qp.exponent(), 2);
        assert!(qp.is_coarsening_of(&q));
        let z4 = FinAbGroup::cyclic(4);
        let z4_2 = z4.quotient(&[ge(&[2])]).unwrap();
        assert_eq!(z4_2.exponent(), 2);
        assert_eq!(z4_2.ambient_exponent(), 4);
    }

    #[test]
    fn character_examples() {
        let z2 = FinAbGroup::cyclic(2);
        let q = Field::rationals();
        let chars = characters(&z2, &q).unwrap();
        assert_eq!(chars.len(), 2);
        assert_eq!(chars[1].values(), &[q.one(), q.from_i64(-1)]);
        let k = Field::cyclotomic(4);
        let v4 = FinAbGroup::new(vec![2, 2]).unwrap();
        for f in characters(&v4, &k).unwrap() {
            for x in f.values() {
                assert!(x == &k.one() || x == &k.from_i64(-1));
            }
        }
        let f3 = Field::prime(3).unwrap();
        assert!(matches!(characters(&FinAbGroup::cyclic(3), &f3), Err(Error::NoSuchRoot { .. })));
    }

    #[test]
    fn quotient_characters_need_only_the_quotient_exponent() {
        // Z4/⟨2⟩ ≅ Z2 has characters over Q even though Z4 does not.
        let z4 = FinAbGroup::cyclic(4);
        let quo = z4.quotient(&[ge(&[2])]).unwrap();
        let chars = characters(&quo, &Field::rationals()).unwrap();
        assert_eq!(chars.len(), 2);
        assert!(characters(&z4, &Field::rationals()).is_err());
    }

    #[test]
    fn annihilator_examples() {
        let k = Field::cyclotomic(4);
        let q = FinAbGroup::new(vec![2, 2]).unwrap();
        let chars = characters(&q, &k).unwrap();
        assert_eq!(annihilator(&q.trivial_subgroup(), &chars).len(), 4);
        let whole = annihilator(&q.whole(), &chars);
        assert_eq!(whole.len(), 1);
        assert!(whole[0].is_trivial());
        let p = q.subgroup(&[ge(&[1, 0])]);
        let perp = annihilator(&p, &chars);
        assert_eq!(perp.len(), 2);
        assert!(perp.iter().all(|f| f.exps()[0] == 0));
    }

    #[test]
    fn character_matrix_examples() {
        let q = Field::rationals();
        let z2 = FinAbGroup::cyclic(2);
        let chars = characters(&z2, &q).unwrap();
        let m = character_matrix(&q, &ge(&[0]), z2.elements(), &chars);
        assert_eq!(m, Matrix::from_i64(&q, &[&[1, 1], &[1, -1]]));
        assert_eq!(m.rank(), 2);
        let k = Field::cyclotomic(4);
        let z4 = FinAbGroup::cyclic(4);
        let chars = characters(&z4, &k).unwrap();
        assert_eq!(character_matrix(&k, &ge(&[0]), z4.elements(), &chars).rank(), 4);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(FinAbGroup::new(vec![2, 2]).unwrap().subgroups().len(), 5);
        assert_eq!(FinAbGroup::cyclic(4).subgroups().len(), 3);
        assert_eq!(FinAbGroup::cyclic(6).subgroups().len(), 4);
        assert_eq!(FinAbGroup::new(vec![2, 4]).unwrap().subgroups().len(), 8);
    }
}
