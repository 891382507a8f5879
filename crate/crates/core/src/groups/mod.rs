//! Finite group substrate: enumerated permutation groups, conjugacy classes,
//! brute-force centralizers, and Dehn/Coxeter quandles built from them.

mod coxeter;
mod perm;

use std::collections::HashMap;
use std::hash::Hash;

pub use coxeter::{coxeter_quandle, coxeter_system, CoxeterMatrix, CoxeterType};
pub use perm::{PermGroup, Permutation};

use crate::error::{Error, Result};
use crate::quandle::FiniteQuandle;

/// Default ceiling on enumerated group orders.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A fully enumerated finite group.
pub trait FiniteGroup {
    type Elem: Clone + Eq + Hash;

    /// All elements; index 0 is the identity.
    fn elements(&self) -> &[Self::Elem];
    fn index_of(&self, e: &Self::Elem) -> Option<usize>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn label(&self, e: &Self::Elem) -> String;

    fn order(&self) -> usize {
        self.elements().len()
    }

    fn identity(&self) -> &Self::Elem {
        &self.elements()[0]
    }

    /// `y x y^-1`.
    fn conjugate(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(y, x), &self.inv(y))
    }
}

/// Breadth-first closure of `generators` under right multiplication, starting
/// from `identity`. In a finite group this is the generated subgroup.
pub(crate) fn closure<E, F>(identity: E, generators: &[E], mul: F, cap: usize) -> Result<Vec<E>>
where
    E: Clone + Eq + Hash,
    F: Fn(&E, &E) -> E,
{
    let mut seen: HashMap<E, ()> = HashMap::new();
    seen.insert(identity.clone(), ());
    let mut elements = vec![identity];
    let mut k = 0;
    while k < elements.len() {
        for g in generators {
            let next = mul(&elements[k], g);
            if !seen.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { what: "group order", cap });
                }
                seen.insert(next.clone(), ());
                elements.push(next);
            }
        }
        k += 1;
    }
    Ok(elements)
}

/// `{ g x g^-1 : g in G }` as sorted element indices.
pub fn conjugacy_class<G: FiniteGroup>(group: &G, x: &G::Elem) -> Vec<usize> {
    let mut out: Vec<usize> = group
        .elements()
        .iter()
        .map(|g| group.index_of(&group.conjugate(x, g)).expect("closed"))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `{ g : g x = x g }` as sorted element indices.
pub fn centralizer<G: FiniteGroup>(group: &G, x: &G::Elem) -> Vec<usize> {
    group
        .elements()
        .iter()
        .enumerate()
        .filter(|(_, g)| group.mul(g, x) == group.mul(x, g))
        .map(|(i, _)| i)
        .collect()
}

/// All conjugacy classes, in order of least member.
pub fn conjugacy_classes<G: FiniteGroup>(group: &G) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; group.order()];
    let mut out = Vec::new();
    for i in 0..group.order() {
        if assigned[i] {
            continue;
        }
        let class = conjugacy_class(group, &group.elements()[i]);
        for &c in &class {
            assigned[c] = true;
        }
        out.push(class);
    }
    out
}

/// `Σ_n` generated by `(1 2)` and `(1 2 .. n)`.
pub fn symmetric_group(n: usize) -> Result<PermGroup> {
    symmetric_group_capped(n, 9)
}

pub fn symmetric_group_capped(n: usize, max_degree: usize) -> Result<PermGroup> {
    if n == 0 || n > max_degree {
        return Err(Error::CapExceeded { what: "symmetric group degree", cap: max_degree });
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::transposition(n, 0, 1));
        gens.push(Permutation::from_cycles(n, &[(0..n).collect()])?);
    }
    PermGroup::generate(n, gens, DEFAULT_GROUP_CAP)
}

/// Dihedral group of order `2m` acting on `m` points, generated by the
/// reflections `i -> -i` and `i -> 1 - i`.
pub fn dihedral_group(m: usize) -> Result<PermGroup> {
    if !(3..=50).contains(&m) {
        return Err(Error::CapExceeded { what: "dihedral group size", cap: 50 });
    }
    let (s, t) = dihedral_reflections(m);
    PermGroup::generate(m, vec![s, t], DEFAULT_GROUP_CAP)
}

pub(crate) fn dihedral_reflections(m: usize) -> (Permutation, Permutation) {
    let s = Permutation::from_images((0..m).map(|i| (m - i) % m).collect()).expect("reflection");
    let t = Permutation::from_images((0..m).map(|i| (m + 1 - i) % m).collect()).expect("reflection");
    (s, t)
}

/// Conjugation quandle of the whole group.
pub fn conjugation_quandle<G: FiniteGroup>(group: &G, cap: usize) -> Result<FiniteQuandle> {
    let all: Vec<G::Elem> = group.elements().to_vec();
    dehn_quandle(group, &all, cap)
}

/// Dehn quandle `D(A^G)`: the union of the conjugacy classes of `subset`
/// under `x * y = y x y^-1`. Elements are ordered by their index in `G`.
pub fn dehn_quandle<G: FiniteGroup>(group: &G, subset: &[G::Elem], cap: usize) -> Result<FiniteQuandle> {
    if subset.is_empty() {
        return Err(Error::InvalidArgument("subset must be non-empty".into()));
    }
    let mut member = vec![false; group.order()];
    for a in subset {
        let idx = group
            .index_of(a)
            .ok_or_else(|| Error::InvalidArgument(format!("{} is not in the group", group.label(a))))?;
        if member[idx] {
            continue;
        }
        for c in conjugacy_class(group, a) {
            member[c] = true;
        }
    }
    let elements: Vec<usize> = (0..group.order()).filter(|&i| member[i]).collect();
    if elements.len() > cap {
        return Err(Error::CapExceeded { what: "Dehn quandle size", cap });
    }
    let mut local = vec![usize::MAX; group.order()];
    for (i, &e) in elements.iter().enumerate() {
        local[e] = i;
    }
    let items = group.elements();
    let inverses: Vec<G::Elem> = elements.iter().map(|&e| group.inv(&items[e])).collect();
    let mut rows = Vec::with_capacity(elements.len());
    for &x in &elements {
        let row = elements
            .iter()
            .enumerate()
            .map(|(j, &y)| {
                let z = group.mul(&group.mul(&items[y], &items[x]), &inverses[j]);
                local[group.index_of(&z).expect("closed")]
            })
            .collect();
        rows.push(row);
    }
    let labels = elements.iter().map(|&e| group.label(&items[e])).collect();
    Ok(FiniteQuandle::trusted(rows)?.with_labels(labels))
}
