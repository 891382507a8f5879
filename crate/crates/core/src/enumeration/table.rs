//! Action table shared by quandle and group enumeration.
//!
//! Rows are points of a set acted on (on the right) by the free group on the
//! generators. Column `2g` holds `x . g`, column `2g + 1` holds `x . g^-1`.
//! Coincidences are processed immediately with a union-find forwarding array
//! (the classical HLT scheme).

use super::Caps;

pub(crate) const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow {
    pub rows: usize,
}

pub(crate) type Step<T = ()> = std::result::Result<T, Overflow>;

#[inline]
pub(crate) fn inv(col: u32) -> u32 {
    col ^ 1
}

pub(crate) struct ActionTable {
    pub ncols: usize,
    pub table: Vec<u32>,
    forward: Vec<u32>,
    /// `(parent row, column)` of the definition that created each row.
    pub defined_by: Vec<(u32, u32)>,
    live: usize,
    defined: usize,
    merged: usize,
    caps: Caps,
    queue: Vec<u32>,
}

impl ActionTable {
    pub fn new(ngens: usize, caps: Caps) -> Self {
        ActionTable {
            ncols: 2 * ngens,
            table: Vec::new(),
            forward: Vec::new(),
            defined_by: Vec::new(),
            live: 0,
            defined: 0,
            merged: 0,
            caps,
            queue: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    #[cfg(test)]
    pub fn live(&self) -> usize {
        self.live
    }

    #[inline]
    pub fn get(&self, row: u32, col: u32) -> u32 {
        self.table[row as usize * self.ncols + col as usize]
    }

    #[inline]
    fn set(&mut self, row: u32, col: u32, value: u32) {
        self.table[row as usize * self.ncols + col as usize] = value;
    }

    #[inline]
    pub fn is_live(&self, row: u32) -> bool {
        self.forward[row as usize] == row
    }

    pub fn rep(&mut self, mut row: u32) -> u32 {
        let mut root = row;
        while self.forward[root as usize] != root {
            root = self.forward[root as usize];
        }
        while self.forward[row as usize] != root {
            let next = self.forward[row as usize];
            self.forward[row as usize] = root;
            row = next;
        }
        root
    }

    /// Allocates a row with no incoming definition edge.
    pub fn add_root(&mut self) -> Step<u32> {
        self.allocate((NONE, NONE))
    }

    fn allocate(&mut self, origin: (u32, u32)) -> Step<u32> {
        if self.live >= self.caps.max_rows || self.len() >= self.caps.max_total() {
            return Err(Overflow { rows: self.len() });
        }
        let row = self.len() as u32;
        self.forward.push(row);
        self.defined_by.push(origin);
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.live += 1;
        self.defined += 1;
        if self.caps.progress && self.defined.is_multiple_of(10_000) {
            eprintln!(
                "enumeration: {} rows defined, {} merged, {} live",
                self.defined, self.merged, self.live
            );
        }
        Ok(row)
    }

    /// Defines `row . col` as a fresh row.
    pub fn define(&mut self, row: u32, col: u32) -> Step<u32> {
        let new = self.allocate((row, col))?;
        self.set(row, col, new);
        self.set(new, inv(col), row);
        Ok(new)
    }

    /// Sets `row . col = target` (both entries must be free).
    pub fn link(&mut self, row: u32, col: u32, target: u32) {
        self.set(row, col, target);
        self.set(target, inv(col), row);
    }

    /// Follows `letters` from `row`, defining missing entries.
    pub fn trace_defining(&mut self, mut row: u32, letters: &[u32]) -> Step<u32> {
        for &c in letters {
            row = self.rep(row);
            let next = self.get(row, c);
            row = if next == NONE { self.define(row, c)? } else { next };
        }
        Ok(self.rep(row))
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.forward[kill as usize] = keep;
        self.live -= 1;
        self.merged += 1;
        self.queue.push(kill);
    }

    /// Identifies rows `a` and `b` and everything that follows.
    pub fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for col in 0..self.ncols as u32 {
                let target = self.get(dead, col);
                if target == NONE {
                    continue;
                }
                if self.get(target, inv(col)) == dead {
                    self.set(target, inv(col), NONE);
                }
                let mu = self.rep(dead);
                let nu = self.rep(target);
                let mu_next = self.get(mu, col);
                if mu_next != NONE {
                    self.merge(nu, mu_next);
                } else {
                    let nu_back = self.get(nu, inv(col));
                    if nu_back != NONE {
                        self.merge(mu, nu_back);
                    } else {
                        self.link(mu, col, nu);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `relator` at `row`, defining rows as needed until it closes.
    pub fn scan_and_fill(&mut self, row: u32, relator: &[u32]) -> Step {
        if relator.is_empty() {
            return Ok(());
        }
        let mut f = row;
        let mut b = row;
        let mut i = 0usize;
        let mut j = relator.len() - 1;
        loop {
            while i <= j {
                let next = self.get(f, relator[i]);
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                let next = self.get(b, inv(relator[j]));
                if next == NONE {
                    break;
                }
                b = next;
                if j == 0 {
                    // whole relator traced backwards
                    if f != b {
                        self.coincidence(f, b);
                    }
                    return Ok(());
                }
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.link(f, relator[i], b);
                return Ok(());
            }
            self.define(f, relator[i])?;
        }
    }

    /// HLT sweep: every live row gets every relator scanned and every entry
    /// defined, in row order.
    pub fn hlt(&mut self, relators: &[Vec<u32>]) -> Step {
        let mut row = 0u32;
        while (row as usize) < self.len() {
            if self.is_live(row) {
                for r in relators {
                    if !self.is_live(row) {
                        break;
                    }
                    self.scan_and_fill(row, r)?;
                }
                for col in 0..self.ncols as u32 {
                    if !self.is_live(row) {
                        break;
                    }
                    if self.get(row, col) == NONE {
                        self.define(row, col)?;
                    }
                }
            }
            row += 1;
        }
        Ok(())
    }

    /// Live rows in index order.
    pub fn live_rows(&self) -> Vec<u32> {
        (0..self.len() as u32).filter(|&r| self.is_live(r)).collect()
    }

    /// Compacts the live part: returns `(rows, dense index of each row)`.
    pub fn compact(&self) -> (Vec<u32>, Vec<u32>) {
        let rows = self.live_rows();
        let mut index = vec![NONE; self.len()];
        for (i, &r) in rows.iter().enumerate() {
            index[r as usize] = i as u32;
        }
        (rows, index)
    }
}
