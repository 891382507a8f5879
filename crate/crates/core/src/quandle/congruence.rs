//! Congruences (compatible partitions) of finite quandles.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;

use super::FiniteQuandle;
use crate::error::{Error, Result};

/// Default number of distinct congruences the lattice search may visit.
pub const DEFAULT_CONGRUENCE_BUDGET: usize = 200_000;

/// A partition of `{0, .., n-1}`, stored as `block_of[x]` = least member of
/// the block containing `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    block_of: Vec<usize>,
}

impl Congruence {
    pub fn discrete(n: usize) -> Self {
        Congruence {
            block_of: (0..n).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Congruence {
            block_of: vec![0; n],
        }
    }

    fn from_union_find(uf: &mut UnionFind) -> Self {
        let n = uf.parent.len();
        let mut least = vec![usize::MAX; n];
        let block_of = (0..n)
            .map(|x| {
                let r = uf.find(x);
                if least[r] == usize::MAX {
                    least[r] = x;
                }
                least[r]
            })
            .collect();
        Congruence { block_of }
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn num_blocks(&self) -> usize {
        self.block_of
            .iter()
            .enumerate()
            .filter(|&(x, &b)| x == b)
            .count()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            out[self.block_of[x]].push(x);
        }
        out.into_iter().filter(|b| !b.is_empty()).collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.block_of.iter().enumerate().all(|(x, &b)| x == b)
    }

    pub fn is_full(&self) -> bool {
        self.block_of.iter().all(|&b| b == 0)
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        (0..self.len()).all(|x| other.block_of[x] == other.block_of[self.block_of[x]])
    }

    /// Checks compatibility with the operation (and its inverse).
    pub fn is_compatible(&self, q: &FiniteQuandle) -> bool {
        let n = q.size();
        let blocks = self.num_blocks();
        let mut idx = vec![usize::MAX; n];
        let mut next = 0;
        for (x, &b) in self.block_of.iter().enumerate() {
            if b == x {
                idx[x] = next;
                next += 1;
            }
        }
        let mut image = vec![usize::MAX; blocks * blocks];
        for x in 0..n {
            for y in 0..n {
                let key = idx[self.block_of[x]] * blocks + idx[self.block_of[y]];
                let z = self.block_of[q.op(x, y)];
                if image[key] == usize::MAX {
                    image[key] = z;
                } else if image[key] != z {
                    return false;
                }
            }
        }
        true
    }

    /// The quotient quandle, elements numbered by block in order of least member.
    pub fn quotient(&self, q: &FiniteQuandle) -> Result<FiniteQuandle> {
        if self.len() != q.size() {
            return Err(Error::InvalidArgument("partition size mismatch".into()));
        }
        if !self.is_compatible(q) {
            return Err(Error::InvalidArgument(
                "partition is not compatible with the operation".into(),
            ));
        }
        let reps: Vec<usize> = (0..q.size()).filter(|&x| self.block_of[x] == x).collect();
        let mut index = vec![0; q.size()];
        for (i, &r) in reps.iter().enumerate() {
            index[r] = i;
        }
        let rows = reps
            .iter()
            .map(|&x| {
                reps.iter()
                    .map(|&y| index[self.block_of[q.op(x, y)]])
                    .collect()
            })
            .collect();
        let out = FiniteQuandle::trusted(rows)?;
        Ok(match q.labels() {
            Some(l) => out.with_labels(reps.iter().map(|&r| l[r].clone()).collect()),
            None => out,
        })
    }

    /// Least congruence containing `pairs`.
    pub fn generated_by(q: &FiniteQuandle, pairs: &[(usize, usize)]) -> Self {
        Self::generated_over(q, &Congruence::discrete(q.size()), pairs)
    }

    /// Least congruence containing `base` and `pairs`.
    pub fn generated_over(q: &FiniteQuandle, base: &Congruence, pairs: &[(usize, usize)]) -> Self {
        let n = q.size();
        let mut uf = UnionFind::new(n);
        for x in 0..n {
            uf.union(x, base.block_of[x]);
        }
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        close(q, &mut uf);
        Self::from_union_find(&mut uf)
    }

    /// Join in the congruence lattice.
    pub fn join(&self, other: &Congruence, q: &FiniteQuandle) -> Self {
        let pairs: Vec<(usize, usize)> = (0..self.len()).map(|x| (x, other.block_of[x])).collect();
        Self::generated_over(q, self, &pairs)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        self.parent[a.max(b)] = a.min(b);
        true
    }
}

/// Closes a union-find under compatibility: `x~x', y~y'` forces
/// `x*y ~ x'*y'`, and `z*y ~ z'*y'` with `y~y'` forces `z ~ z'`.
fn close(q: &FiniteQuandle, uf: &mut UnionFind) {
    let n = q.size();
    const UNSET: u32 = u32::MAX;
    let mut forward = vec![UNSET; n * n];
    let mut backward = vec![UNSET; n * n];
    loop {
        let mut changed = false;
        forward.fill(UNSET);
        backward.fill(UNSET);
        for y in 0..n {
            let cy = uf.find(y);
            for x in 0..n {
                let cx = uf.find(x);
                let cz = uf.find(q.op(x, y));
                let f = &mut forward[cx * n + cy];
                if *f == UNSET {
                    *f = cz as u32;
                } else if *f as usize != cz {
                    let other = *f as usize;
                    changed |= uf.union(other, cz);
                }
                let b = &mut backward[cz * n + cy];
                if *b == UNSET {
                    *b = cx as u32;
                } else if *b as usize != cx {
                    let other = *b as usize;
                    changed |= uf.union(other, cx);
                }
            }
        }
        if !changed {
            break;
        }
    }
}

/// Outcome of the smallest-quotient search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinQuotient {
    /// Order of the quandle searched.
    pub order: usize,
    /// Smallest quotient with at least two elements, counting the quandle
    /// itself. `None` only for the one-element quandle.
    pub smallest: Option<usize>,
    /// Smallest quotient with at least two elements coming from a congruence
    /// other than equality. `None` when every non-identity quotient is a point.
    pub smallest_proper: Option<usize>,
    /// A congruence realizing `smallest_proper`.
    pub witness: Option<Congruence>,
    /// Number of distinct non-full congruences visited.
    pub visited: usize,
}

fn principal_congruences(q: &FiniteQuandle) -> Vec<Congruence> {
    let n = q.size();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .collect();
    let mut principal: Vec<Congruence> = pairs
        .par_iter()
        .map(|&p| Congruence::generated_by(q, &[p]))
        .collect();
    let mut seen = HashSet::new();
    principal.retain(|c| seen.insert(c.clone()));
    principal
}

/// Searches the congruence lattice for the smallest quotient with at least
/// two elements. Every congruence is a join of principal ones, so closing the
/// principal congruences under joins visits every non-full congruence.
pub fn smallest_nontrivial_quotient(q: &FiniteQuandle, budget: usize) -> Result<MinQuotient> {
    let n = q.size();
    if n < 2 {
        return Ok(MinQuotient {
            order: n,
            smallest: None,
            smallest_proper: None,
            witness: None,
            visited: 0,
        });
    }
    let principal: Vec<Congruence> = principal_congruences(q)
        .into_iter()
        .filter(|c| !c.is_full())
        .collect();

    let mut seen: HashSet<Congruence> = HashSet::new();
    let mut queue: VecDeque<Congruence> = VecDeque::new();
    for c in &principal {
        if seen.insert(c.clone()) {
            queue.push_back(c.clone());
        }
    }
    if seen.len() > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    let mut best: Option<Congruence> = None;
    while let Some(c) = queue.pop_front() {
        let blocks = c.num_blocks();
        if best.as_ref().is_none_or(|b| blocks < b.num_blocks()) {
            best = Some(c.clone());
        }
        let joins: Vec<Congruence> = principal
            .par_iter()
            .filter(|p| !p.refines(&c))
            .map(|p| c.join(p, q))
            .filter(|j| !j.is_full())
            .collect();
        for j in joins {
            if seen.insert(j.clone()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                queue.push_back(j);
            }
        }
    }
    let smallest_proper = best.as_ref().map(Congruence::num_blocks);
    Ok(MinQuotient {
        order: n,
        smallest: Some(smallest_proper.map_or(n, |s| s.min(n))),
        smallest_proper,
        witness: best,
        visited: seen.len(),
    })
}

/// Every congruence of `q` (including equality and the full relation), sorted
/// by number of blocks descending. Exhaustive; meant for small quandles.
pub fn all_congruences(q: &FiniteQuandle, budget: usize) -> Result<Vec<Congruence>> {
    let n = q.size();
    let principal = principal_congruences(q);
    let mut seen: HashSet<Congruence> = HashSet::new();
    seen.insert(Congruence::discrete(n));
    let mut queue: VecDeque<Congruence> = principal.iter().cloned().collect();
    for c in &principal {
        seen.insert(c.clone());
    }
    while let Some(c) = queue.pop_front() {
        for p in &principal {
            if p.refines(&c) {
                continue;
            }
            let j = c.join(p, q);
            if seen.insert(j.clone()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                queue.push_back(j);
            }
        }
    }
    let mut out: Vec<Congruence> = seen.into_iter().collect();
    out.sort_by(|a, b| {
        b.num_blocks()
            .cmp(&a.num_blocks())
            .then_with(|| a.block_of.cmp(&b.block_of))
    });
    Ok(out)
}

/// The congruence generated by `x ~ x *^n y` for all `x, y`, i.e. the kernel
/// of `Q -> (Q)_n`.
pub fn n_quotient_congruence(q: &FiniteQuandle, n: usize) -> Congruence {
    let size = q.size();
    let mut pairs = Vec::new();
    for x in 0..size {
        for y in 0..size {
            let z = q.op_pow(x, y, n as i64);
            if z != x {
                pairs.push((x, z));
            }
        }
    }
    Congruence::generated_by(q, &pairs)
}

/// `(Q)_n`: the largest quotient of `q` in which every column has order dividing `n`.
pub fn finite_n_quotient(q: &FiniteQuandle, n: usize) -> Result<FiniteQuandle> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    n_quotient_congruence(q, n).quotient(q)
}
