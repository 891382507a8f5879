//! Isomorphism search between finite quandles.

use super::FiniteQuandle;

/// Per-element invariant: (size of its orbit, cycle type of its column).
pub fn invariant_signature(q: &FiniteQuandle) -> Vec<(usize, Vec<usize>)> {
    let mut orbit_size = vec![0; q.size()];
    for orbit in q.orbits() {
        for &x in &orbit {
            orbit_size[x] = orbit.len();
        }
    }
    (0..q.size())
        .map(|y| (orbit_size[y], q.column(y).cycle_type()))
        .collect()
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// Picks generators greedily: each next generator is the least element not in
/// the subquandle generated by the previous ones.
fn generating_sequence(q: &FiniteQuandle) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = vec![false; q.size()];
    while let Some(next) = (0..q.size()).find(|&x| !inside[x]) {
        gens.push(next);
        for x in q.generated_subquandle(&gens) {
            inside[x] = true;
        }
    }
    gens
}

struct Search<'a> {
    source: &'a FiniteQuandle,
    target: &'a FiniteQuandle,
    image: Vec<Option<usize>>,
    used: Vec<bool>,
    members: Vec<usize>,
}

impl Search<'_> {
    /// Assigns `x -> y` and closes the mapped set under the operation,
    /// propagating images. Returns the number of members added (for undo), or
    /// `None` on a conflict (state must then be rolled back by the caller
    /// using the recorded length).
    fn extend(&mut self, x: usize, y: usize) -> bool {
        if let Some(existing) = self.image[x] {
            return existing == y;
        }
        if self.used[y] {
            return false;
        }
        self.image[x] = Some(y);
        self.used[y] = true;
        self.members.push(x);
        let mut cursor = self.members.len() - 1;
        while cursor < self.members.len() {
            let e = self.members[cursor];
            let fe = self.image[e].unwrap();
            let mut i = 0;
            while i <= cursor {
                let m = self.members[i];
                let fm = self.image[m].unwrap();
                let pairs = [
                    (self.source.op(e, m), self.target.op(fe, fm)),
                    (self.source.op(m, e), self.target.op(fm, fe)),
                    (self.source.op_inv(e, m), self.target.op_inv(fe, fm)),
                    (self.source.op_inv(m, e), self.target.op_inv(fm, fe)),
                ];
                for (a, b) in pairs {
                    match self.image[a] {
                        Some(existing) if existing != b => return false,
                        Some(_) => {}
                        None => {
                            if self.used[b] {
                                return false;
                            }
                            self.image[a] = Some(b);
                            self.used[b] = true;
                            self.members.push(a);
                        }
                    }
                }
                i += 1;
            }
            cursor += 1;
        }
        true
    }

    fn rollback(&mut self, len: usize) {
        while self.members.len() > len {
            let x = self.members.pop().unwrap();
            let y = self.image[x].take().unwrap();
            self.used[y] = false;
        }
    }
}

/// Finds an isomorphism `phi` from `a` to `b` (`phi[x]` is the image of `x`),
/// or `None` when the quandles are not isomorphic.
///
/// Candidates are pruned by orbit size and column cycle type; the search then
/// only branches on images of a generating sequence of `a`, every other
/// image being forced by the operation.
pub fn find_isomorphism(a: &FiniteQuandle, b: &FiniteQuandle) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let sig_a = invariant_signature(a);
    let sig_b = invariant_signature(b);
    if sorted(&sig_a) != sorted(&sig_b) {
        return None;
    }
    if a.orbits().len() != b.orbits().len() {
        return None;
    }
    let gens = generating_sequence(a);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..b.size()).filter(|&y| sig_b[y] == sig_a[g]).collect())
        .collect();
    let mut search = Search {
        source: a,
        target: b,
        image: vec![None; a.size()],
        used: vec![false; b.size()],
        members: Vec::new(),
    };
    if descend(&mut search, &gens, &candidates, 0) {
        let phi: Vec<usize> = search.image.iter().map(|y| y.unwrap()).collect();
        debug_assert!(is_isomorphism(a, b, &phi));
        Some(phi)
    } else {
        None
    }
}

fn descend(search: &mut Search<'_>, gens: &[usize], candidates: &[Vec<usize>], depth: usize) -> bool {
    if depth == gens.len() {
        return search.members.len() == search.source.size();
    }
    let g = gens[depth];
    if search.image[g].is_some() {
        return descend(search, gens, candidates, depth + 1);
    }
    for &y in &candidates[depth] {
        if search.used[y] {
            continue;
        }
        let mark = search.members.len();
        if search.extend(g, y) && descend(search, gens, candidates, depth + 1) {
            return true;
        }
        search.rollback(mark);
    }
    false
}

/// Checks that `phi` is a bijective homomorphism.
pub fn is_isomorphism(a: &FiniteQuandle, b: &FiniteQuandle, phi: &[usize]) -> bool {
    if phi.len() != a.size() || a.size() != b.size() {
        return false;
    }
    let mut hit = vec![false; b.size()];
    for &y in phi {
        if y >= b.size() || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    (0..a.size()).all(|x| (0..a.size()).all(|y| phi[a.op(x, y)] == b.op(phi[x], phi[y])))
}
