//! Finite quandles as explicit operation tables.

mod congruence;
mod iso;
mod json;

use std::collections::HashMap;

pub use congruence::{
    all_congruences, finite_n_quotient, n_quotient_congruence, smallest_nontrivial_quotient,
    Congruence, MinQuotient,
    DEFAULT_CONGRUENCE_BUDGET,
};
pub use iso::{find_isomorphism, invariant_signature};
pub use json::QuandleJson;

use crate::error::{Axiom, Error, Result};
use crate::groups::{PermGroup, Permutation};
use crate::presentation::{GroupPresentation, GroupWord, Sign};

/// Default ceiling on the number of elements a construction may produce.
pub const DEFAULT_QUANDLE_CAP: usize = 100_000;

/// A quandle on `{0, .., size-1}` given by its full operation table.
///
/// Row `x`, column `y` holds `x * y`. The inverse table (`z` with `z * y = x`)
/// is kept alongside so that `*^-1` is a lookup.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteQuandle {
    size: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for FiniteQuandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteQuandle")
            .field("size", &self.size)
            .field("rows", &self.rows())
            .finish()
    }
}

impl FiniteQuandle {
    /// Checks the three axioms and builds the quandle, or reports the first
    /// violated axiom with a witness.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::MalformedTable("a quandle is non-empty".into()));
        }
        let mut table = Vec::with_capacity(size * size);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::MalformedTable(format!(
                    "row {x} has {} entries, expected {size}",
                    row.len()
                )));
            }
            for (y, &z) in row.iter().enumerate() {
                if z >= size {
                    return Err(Error::MalformedTable(format!(
                        "entry ({x},{y}) = {z} out of range"
                    )));
                }
                table.push(z as u32);
            }
        }
        Self::from_flat(size, table)
    }

    /// Builds the table by evaluating `op(x, y)` for every pair, then validates.
    pub fn from_fn(size: usize, mut op: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::MalformedTable("a quandle is non-empty".into()));
        }
        let mut table = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                let z = op(x, y);
                if z >= size {
                    return Err(Error::MalformedTable(format!(
                        "entry ({x},{y}) = {z} out of range"
                    )));
                }
                table.push(z as u32);
            }
        }
        Self::from_flat(size, table)
    }

    pub(crate) fn from_flat(size: usize, table: Vec<u32>) -> Result<Self> {
        let q = Self::from_flat_unchecked(size, table)?;
        q.check_distributivity()?;
        Ok(q)
    }

    /// Builds the quandle checking idempotency and invertibility but not
    /// self-distributivity (the O(n^3) axiom).
    pub(crate) fn from_flat_unchecked(size: usize, table: Vec<u32>) -> Result<Self> {
        debug_assert_eq!(table.len(), size * size);
        for x in 0..size {
            if table[x * size + x] as usize != x {
                return Err(Error::AxiomViolation {
                    axiom: Axiom::Idempotency,
                    witness: vec![x],
                });
            }
        }
        let mut inverse = vec![u32::MAX; size * size];
        for y in 0..size {
            for x in 0..size {
                let z = table[x * size + y] as usize;
                let slot = &mut inverse[z * size + y];
                if *slot != u32::MAX {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::RightInvertibility,
                        witness: vec![*slot as usize, x, y],
                    });
                }
                *slot = x as u32;
            }
        }
        Ok(FiniteQuandle {
            size,
            table,
            inverse,
            labels: None,
        })
    }

    /// Builds a table that is known to be a quandle by construction, skipping
    /// the O(n^3) distributivity scan. The cheap axioms are still checked.
    pub fn trusted(rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        let table = rows.into_iter().flatten().map(|z| z as u32).collect();
        Self::from_flat_unchecked(size, table)
    }

    fn check_distributivity(&self) -> Result<()> {
        let n = self.size;
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(self.op(x, z), self.op(y, z)) {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::SelfDistributivity,
                            witness: vec![x, y, z],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Re-runs every axiom check on this table.
    pub fn validate(&self) -> Result<()> {
        Self::from_flat(self.size, self.table.clone()).map(|_| ())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y] as usize
    }

    /// The unique `z` with `z * y = x`.
    #[inline]
    pub fn op_inv(&self, x: usize, y: usize) -> usize {
        self.inverse[x * self.size + y] as usize
    }

    /// `x *^k y`; negative `k` uses the inverse translation.
    pub fn op_pow(&self, mut x: usize, y: usize, k: i64) -> usize {
        if k >= 0 {
            for _ in 0..k {
                x = self.op(x, y);
            }
        } else {
            for _ in 0..(-k) {
                x = self.op_inv(x, y);
            }
        }
        x
    }

    #[inline]
    pub fn op_signed(&self, x: usize, y: usize, sign: Sign) -> usize {
        match sign {
            Sign::Pos => self.op(x, y),
            Sign::Neg => self.op_inv(x, y),
        }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.size)
            .map(|r| r.iter().map(|&z| z as usize).collect())
            .collect()
    }

    /// The right translation `S_y : x -> x * y`.
    pub fn column(&self, y: usize) -> Permutation {
        Permutation::from_images((0..self.size).map(|x| self.op(x, y)).collect())
            .expect("columns of a quandle are bijections")
    }

    /// Order of `S_y`.
    pub fn column_order(&self, y: usize) -> usize {
        self.column(y).order()
    }

    /// True when every right translation has order dividing `n`.
    pub fn is_n_quandle(&self, n: usize) -> bool {
        assert!(n >= 1);
        (0..self.size).all(|y| {
            (0..self.size).all(|x| self.op_pow(x, y, n as i64) == x)
        })
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| self.op(x, y) == x))
    }

    /// Orbits of the inner automorphism group (connected components), each
    /// sorted, ordered by least member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.size;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, self.op(x, y)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = find(&mut parent, x);
            by_root[r].push(x);
        }
        by_root.into_iter().filter(|b| !b.is_empty()).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.orbits().len() == 1
    }

    /// The inner automorphism group generated by all columns, enumerated up to `cap` elements.
    pub fn inner_group(&self, cap: usize) -> Result<InnerGroup> {
        let mut generators: Vec<Permutation> = Vec::new();
        for y in 0..self.size {
            let c = self.column(y);
            if !generators.contains(&c) {
                generators.push(c);
            }
        }
        let group = PermGroup::generate(self.size, generators.clone(), cap)?;
        Ok(InnerGroup {
            columns: (0..self.size).map(|y| self.column(y)).collect(),
            group,
        })
    }

    /// `x -> order of S_x`.
    pub fn nu_profile(&self) -> Vec<usize> {
        (0..self.size).map(|y| self.column_order(y)).collect()
    }

    /// Presentation of `Env(Q) / <e_x^nu(x)>`: generators `e_x` for every
    /// element, relators `e_y e_x e_y^-1 e_{x*y}^-1`, and `e_x^nu(x)`.
    pub fn fq_presentation(&self) -> GroupPresentation {
        let generators = (0..self.size).map(|x| format!("e{x}")).collect();
        let mut relators = Vec::new();
        for x in 0..self.size {
            for y in 0..self.size {
                let w = GroupWord::from_letters(vec![
                    (y, Sign::Pos),
                    (x, Sign::Pos),
                    (y, Sign::Neg),
                    (self.op(x, y), Sign::Neg),
                ]);
                if !w.is_empty() {
                    relators.push(w);
                }
            }
        }
        for (x, nu) in self.nu_profile().into_iter().enumerate() {
            relators.push(GroupWord::from_letters(vec![(x, Sign::Pos); nu]));
        }
        GroupPresentation::new(generators, relators)
    }

    /// Quotient by a compatible partition; element `i` of the result is the
    /// `i`-th block in order of least member.
    pub fn quotient(&self, congruence: &Congruence) -> Result<FiniteQuandle> {
        congruence.quotient(self)
    }

    /// Subquandle generated by `seeds` (closed under `*` and `*^-1`), sorted.
    pub fn generated_subquandle(&self, seeds: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.size];
        let mut list: Vec<usize> = Vec::new();
        let mut frontier = 0;
        for &s in seeds {
            if !member[s] {
                member[s] = true;
                list.push(s);
            }
        }
        while frontier < list.len() {
            let e = list[frontier];
            frontier += 1;
            let mut i = 0;
            while i < list.len() {
                let m = list[i];
                for z in [
                    self.op(e, m),
                    self.op(m, e),
                    self.op_inv(e, m),
                    self.op_inv(m, e),
                ] {
                    if !member[z] {
                        member[z] = true;
                        list.push(z);
                    }
                }
                i += 1;
            }
        }
        list.sort_unstable();
        list
    }

    /// The sub-table on `elements` (which must be closed), relabelled densely.
    pub fn restrict(&self, elements: &[usize]) -> Result<FiniteQuandle> {
        let index: HashMap<usize, usize> =
            elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut rows = Vec::with_capacity(elements.len());
        for &x in elements {
            let mut row = Vec::with_capacity(elements.len());
            for &y in elements {
                let z = self.op(x, y);
                row.push(*index.get(&z).ok_or_else(|| {
                    Error::InvalidArgument(format!("element set not closed at ({x},{y})"))
                })?);
            }
            rows.push(row);
        }
        let q = FiniteQuandle::trusted(rows)?;
        Ok(match &self.labels {
            Some(l) => q.with_labels(elements.iter().map(|&e| l[e].clone()).collect()),
            None => q,
        })
    }

    /// Trivial quandle `x * y = x`.
    pub fn trivial(size: usize) -> FiniteQuandle {
        FiniteQuandle::from_fn(size, |x, _| x).expect("trivial quandle")
    }

    /// Dihedral quandle `R_m`: `i * j = 2j - i mod m`.
    pub fn dihedral(m: usize) -> FiniteQuandle {
        FiniteQuandle::from_fn(m, |i, j| (2 * j + m - i) % m).expect("dihedral quandle")
    }

    /// Alexander quandle on `Z_m`: `x * y = t x + (1 - t) y`, `t` a unit mod `m`.
    pub fn alexander(m: usize, t: usize) -> Result<FiniteQuandle> {
        if m == 0 || gcd(t as u64, m as u64) != 1 {
            return Err(Error::InvalidArgument(format!("{t} is not a unit mod {m}")));
        }
        let t = t % m;
        let one_minus_t = (1 + m - t) % m;
        FiniteQuandle::from_fn(m, |x, y| (t * x + one_minus_t * y) % m)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `Inn(Q)`: the columns `S_y` and the group they generate.
#[derive(Debug, Clone)]
pub struct InnerGroup {
    pub columns: Vec<Permutation>,
    pub group: PermGroup,
}

impl InnerGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conj_s3() -> FiniteQuandle {
        let g = crate::groups::symmetric_group(3).unwrap();
        crate::groups::conjugation_quandle(&g, DEFAULT_QUANDLE_CAP).unwrap()
    }

    #[test]
    fn dihedral_three_is_a_quandle() {
        // brute force over all 27 triples
        let q = FiniteQuandle::dihedral(3);
        for x in 0..3 {
            assert_eq!(q.op(x, x), x);
            for y in 0..3 {
                for z in 0..3 {
                    assert_eq!(q.op(q.op(x, y), z), q.op(q.op(x, z), q.op(y, z)));
                }
            }
        }
        assert!(q.validate().is_ok());
    }

    #[test]
    fn trivial_quandle_validates() {
        assert!(FiniteQuandle::new(vec![vec![0, 0, 0, 0], vec![1; 4], vec![2; 4], vec![3; 4]]).is_ok());
    }

    #[test]
    fn idempotency_violation_names_element() {
        let err = FiniteQuandle::new(vec![vec![1, 0], vec![0, 1]]).unwrap_err();
        match err {
            Error::AxiomViolation { axiom, witness } => {
                assert_eq!(axiom, Axiom::Idempotency);
                assert_eq!(witness, vec![0]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invertibility_and_distributivity_violations() {
        // column 1 maps both 0 and 1 to 1
        let err = FiniteQuandle::new(vec![vec![0, 1, 0], vec![1, 1, 1], vec![2, 2, 2]]).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { axiom: Axiom::RightInvertibility, .. }));
        // idempotent, invertible, not distributive
        let rows = vec![
            vec![0, 2, 1, 0],
            vec![2, 1, 0, 1],
            vec![1, 0, 2, 3],
            vec![3, 3, 3, 2],
        ];
        let bad = FiniteQuandle::new(rows);
        assert!(bad.is_err());
    }

    #[test]
    fn out_of_range_entry_is_malformed() {
        assert!(matches!(
            FiniteQuandle::new(vec![vec![0, 5], vec![1, 1]]),
            Err(Error::MalformedTable(_))
        ));
    }

    #[test]
    fn n_quandle_checks() {
        assert!(FiniteQuandle::dihedral(3).is_n_quandle(2));
        for n in 2..6 {
            assert!(FiniteQuandle::trivial(4).is_n_quandle(n));
        }
        assert!(!conj_s3().is_n_quandle(2));
        assert!(conj_s3().is_n_quandle(6));
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(FiniteQuandle::dihedral(3).orbits().len(), 1);
        assert_eq!(FiniteQuandle::trivial(3).orbits().len(), 3);
        let orbit_sizes: Vec<usize> = conj_s3().orbits().iter().map(Vec::len).collect();
        let mut sorted = orbit_sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 3]);
    }

    #[test]
    fn nu_profiles() {
        assert_eq!(FiniteQuandle::dihedral(3).nu_profile(), vec![2, 2, 2]);
        assert_eq!(FiniteQuandle::trivial(3).nu_profile(), vec![1, 1, 1]);
        let mut nu = conj_s3().nu_profile();
        nu.sort();
        assert_eq!(nu, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn trivial_fq_presentation_kills_every_generator() {
        let p = FiniteQuandle::trivial(3).fq_presentation();
        assert_eq!(p.generators().len(), 3);
        // commutator relators of x*y=x reduce to [e_y, e_x]; each e_x^1 present
        for x in 0..3 {
            assert!(p
                .relators()
                .iter()
                .any(|r| r.letters() == [(x, Sign::Pos)]));
        }
    }

    #[test]
    fn inner_group_of_r3_is_s3() {
        let inn = FiniteQuandle::dihedral(3).inner_group(1000).unwrap();
        assert_eq!(inn.order(), 6);
        for (y, c) in inn.columns.iter().enumerate() {
            assert_eq!(c.apply(y), y);
        }
    }

    #[test]
    fn alexander_requires_unit() {
        assert!(FiniteQuandle::alexander(6, 5).is_ok());
        assert!(FiniteQuandle::alexander(6, 2).is_err());
    }

    #[test]
    fn generated_subquandle_of_conjugation_quandle() {
        let q = conj_s3();
        // a transposition generates only itself
        let t = (0..6).find(|&x| q.column_order(x) == 2).unwrap();
        assert_eq!(q.generated_subquandle(&[t]), vec![t]);
    }
}
