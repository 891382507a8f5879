//! Coset enumeration for quandle presentations (Winker's method) and for
//! group presentations (Todd–Coxeter over the trivial subgroup).
//!
//! A quandle presented by `<S | u_i = v_i>` is enumerated as a set with a
//! right action of the free group on `S`: `x . g = x * g`. The table starts
//! with one row per generator (fixed by its own column) and imposes
//!
//! - each relation once, as an equality of elements traced from the generator rows;
//! - each relation at every row as an equality of right translations,
//!   `x * u = x * v`, i.e. the relator `op(u) op(v)^-1` where
//!   `op(a_0 *^{e_1} a_1 .. a_k) = a_k^-e_k .. a_1^-e_1 a_0 a_1^e_1 .. a_k^e_k`.
//!
//! Once the table closes, every row `z` has a representative word `W(z)` and
//! translation `op(z)` computed along the definition tree. The table is a
//! quandle exactly when each edge `x . g^e = z` satisfies
//! `op(z) = g^-e op(x) g^e` and each generator column equals the translation
//! of its row. Failures yield further (valid) relators and enumeration
//! resumes; each such relator forces at least one coincidence, so the loop
//! terminates.
//!
//! Overflow is evidence that the presented object may be infinite, not a proof.

mod table;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::{augment_n, GroupPresentation, GroupWord, Letter, QWord, QuandlePresentation, Sign};
use crate::quandle::{find_isomorphism, finite_n_quotient, FiniteQuandle};
use table::{inv, ActionTable, Overflow, NONE};

/// Row limits for an enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of simultaneously live rows.
    pub max_rows: usize,
    /// Maximum number of rows ever allocated; defaults to `4 * max_rows`.
    pub max_allocated: Option<usize>,
    /// Report progress on stderr every 10^4 definitions.
    pub progress: bool,
}

pub const DEFAULT_QUANDLE_ROWS: usize = 100_000;
pub const DEFAULT_GROUP_ROWS: usize = 1_000_000;

/// Largest table whose translations are materialized in the consistency phase.
pub const MAX_CONSISTENCY_ROWS: usize = 4096;

impl Caps {
    pub fn rows(max_rows: usize) -> Self {
        Caps {
            max_rows,
            max_allocated: None,
            progress: false,
        }
    }

    pub fn quandle() -> Self {
        Caps::rows(DEFAULT_QUANDLE_ROWS)
    }

    pub fn group() -> Self {
        Caps::rows(DEFAULT_GROUP_ROWS)
    }

    pub fn with_progress(mut self, progress: bool) -> Self {
        self.progress = progress;
        self
    }

    pub(crate) fn max_total(&self) -> usize {
        self.max_allocated
            .unwrap_or_else(|| self.max_rows.saturating_mul(4))
    }
}

/// Result of an enumeration: a finished object or an overflow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumOutcome<T> {
    Finished(T),
    Overflow { rows: usize, cap: usize },
}

#[derive(Serialize)]
struct OutcomeJson {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rows: Option<usize>,
}

impl<T> EnumOutcome<T> {
    pub fn is_finished(&self) -> bool {
        matches!(self, EnumOutcome::Finished(_))
    }

    pub fn finished(self) -> Option<T> {
        match self {
            EnumOutcome::Finished(t) => Some(t),
            EnumOutcome::Overflow { .. } => None,
        }
    }

    pub fn as_finished(&self) -> Option<&T> {
        match self {
            EnumOutcome::Finished(t) => Some(t),
            EnumOutcome::Overflow { .. } => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> EnumOutcome<U> {
        match self {
            EnumOutcome::Finished(t) => EnumOutcome::Finished(f(t)),
            EnumOutcome::Overflow { rows, cap } => EnumOutcome::Overflow { rows, cap },
        }
    }

    /// `{"status": "finished", "size": n}` or `{"status": "overflow", "cap": c, "rows": r}`.
    pub fn to_json(&self, size: impl Fn(&T) -> usize) -> String {
        let j = match self {
            EnumOutcome::Finished(t) => OutcomeJson {
                status: "finished",
                size: Some(size(t)),
                cap: None,
                rows: None,
            },
            EnumOutcome::Overflow { rows, cap } => OutcomeJson {
                status: "overflow",
                size: None,
                cap: Some(*cap),
                rows: Some(*rows),
            },
        };
        serde_json::to_string(&j).expect("serializable")
    }
}

/// A finished quandle enumeration.
#[derive(Debug, Clone)]
pub struct QuandleResult {
    /// Labelled by representative words.
    pub quandle: FiniteQuandle,
    /// Representative word of each element.
    pub words: Vec<QWord>,
    /// Element assigned to each generator.
    pub generators: Vec<usize>,
}

impl QuandleResult {
    pub fn size(&self) -> usize {
        self.quandle.size()
    }

    /// Checks every relation of `p` independently of the enumeration: as an
    /// equality of elements at the generator images, and as an equality of
    /// right translations at every element. Also checks that each
    /// representative word evaluates to its element.
    pub fn satisfies(&self, p: &QuandlePresentation) -> bool {
        let q = &self.quandle;
        let eval = |w: &QWord| crate::presentation::evaluate(w, q, &self.generators);
        let words_ok = self.words.iter().enumerate().all(|(x, w)| eval(w) == x);
        words_ok
            && p.relations().iter().all(|(u, v)| {
                let (a, b) = (eval(u), eval(v));
                a == b && (0..q.size()).all(|x| q.op(x, a) == q.op(x, b))
            })
    }
}

/// A finished group enumeration: the regular action on cosets of the
/// trivial subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupResult {
    pub order: usize,
    /// `cosets[i][2g]` is `i . g`, `cosets[i][2g+1]` is `i . g^-1`; coset 0 is the identity.
    pub cosets: Vec<Vec<u32>>,
}

fn col((g, s): Letter) -> u32 {
    2 * g as u32 + u32::from(s == Sign::Neg)
}

fn cols(letters: &[Letter]) -> Vec<u32> {
    letters.iter().map(|&l| col(l)).collect()
}

fn letter(c: u32) -> Letter {
    let s = if c & 1 == 0 { Sign::Pos } else { Sign::Neg };
    ((c / 2) as usize, s)
}

fn relator_cols(word: GroupWord) -> Vec<u32> {
    cols(word.cyclically_reduced().letters())
}

/// Winker enumeration of a quandle presentation.
pub fn enumerate_quandle(p: &QuandlePresentation, caps: Caps) -> Result<EnumOutcome<QuandleResult>> {
    let k = p.generators().len();
    if k == 0 {
        return Err(Error::InvalidArgument("a quandle presentation needs a generator".into()));
    }
    let mut t = ActionTable::new(k, caps);
    let overflow = |o: Overflow| EnumOutcome::Overflow { rows: o.rows, cap: caps.max_rows };
    macro_rules! step {
        ($e:expr) => {
            match $e {
                Ok(v) => v,
                Err(o) => return Ok(overflow(o)),
            }
        };
    }
    for g in 0..k {
        let row = step!(t.add_root());
        t.link(row, 2 * g as u32, row);
    }
    for (u, v) in p.relations() {
        let a = step!(t.trace_defining(u.base as u32, &cols(&u.tail)));
        let b = step!(t.trace_defining(v.base as u32, &cols(&v.tail)));
        t.coincidence(a, b);
    }
    let mut relators: Vec<Vec<u32>> = p
        .relations()
        .iter()
        .map(|(u, v)| {
            let w = GroupWord::from_letters(u.operator_letters())
                .concat(&GroupWord::from_letters(v.operator_letters()).inverse());
            relator_cols(w)
        })
        .filter(|r| !r.is_empty())
        .collect();
    loop {
        step!(t.hlt(&relators));
        match consistency(&mut t, k)? {
            Ok(result) => {
                let names = p.generators();
                let labels = result.words.iter().map(|w| w.display(names).to_string()).collect();
                let quandle = result.quandle.with_labels(labels);
                return Ok(EnumOutcome::Finished(QuandleResult { quandle, ..result }));
            }
            Err(extra) => {
                for r in extra {
                    if !relators.contains(&r) {
                        relators.push(r);
                    }
                }
            }
        }
    }
}

/// Representative words along the definition tree, for live rows in order.
fn tree_words(t: &mut ActionTable, rows: &[u32], index: &[u32]) -> Vec<QWord> {
    let mut words: Vec<QWord> = Vec::with_capacity(rows.len());
    for &r in rows {
        let (parent, c) = t.defined_by[r as usize];
        let w = if parent == NONE {
            QWord::generator(r as usize)
        } else {
            let p = t.rep(parent);
            let mut w = words[index[p as usize] as usize].clone();
            w.tail.push(letter(c));
            w
        };
        words.push(w);
    }
    words
}

const MAX_NEW_RELATORS: usize = 8;

/// Checks a closed table; on failure returns relators that the table violates.
fn consistency(t: &mut ActionTable, k: usize) -> Result<std::result::Result<QuandleResult, Vec<Vec<u32>>>> {
    let (rows, index) = t.compact();
    let n = rows.len();
    if n > MAX_CONSISTENCY_ROWS {
        return Err(Error::CapExceeded {
            what: "rows in the quandle consistency check",
            cap: MAX_CONSISTENCY_ROWS,
        });
    }
    let words = tree_words(t, &rows, &index);
    let step = |x: usize, c: u32, t: &ActionTable| index[t.get(rows[x], c) as usize] as usize;
    // ops[z][x] = x * z
    let mut ops: Vec<Vec<u32>> = Vec::with_capacity(n);
    for (z, &r) in rows.iter().enumerate() {
        let (parent, c) = t.defined_by[r as usize];
        let op: Vec<u32> = if parent == NONE {
            (0..n).map(|x| step(x, 2 * r, t) as u32).collect()
        } else {
            let p = index[t.rep(parent) as usize] as usize;
            debug_assert!(p < z);
            (0..n)
                .map(|x| {
                    let y = ops[p][step(x, inv(c), t)] as usize;
                    step(y, c, t) as u32
                })
                .collect()
        };
        ops.push(op);
    }
    let op_word = |z: usize| words[z].operator_letters();
    let mut extra: Vec<Vec<u32>> = Vec::new();
    'edges: for x in 0..n {
        for c in 0..2 * k as u32 {
            let z = step(x, c, t);
            let bad = (0..n).any(|y| {
                let expected = step(ops[x][step(y, inv(c), t)] as usize, c, t);
                ops[z][y] as usize != expected
            });
            if bad {
                // op(z) = c^-1 op(x) c
                let mut letters = op_word(z);
                letters.push(letter(inv(c)));
                letters.extend(GroupWord::from_letters(op_word(x)).inverse().letters());
                letters.push(letter(c));
                let r = relator_cols(GroupWord::from_letters(letters));
                if !r.is_empty() && !extra.contains(&r) {
                    extra.push(r);
                }
                if extra.len() >= MAX_NEW_RELATORS {
                    break 'edges;
                }
            }
        }
    }
    for g in 0..k {
        let z = index[t.rep(g as u32) as usize] as usize;
        if (0..n).any(|y| ops[z][y] as usize != step(y, 2 * g as u32, t)) {
            let mut letters = vec![(g, Sign::Pos)];
            letters.extend(GroupWord::from_letters(op_word(z)).inverse().letters());
            let r = relator_cols(GroupWord::from_letters(letters));
            if !r.is_empty() && !extra.contains(&r) {
                extra.push(r);
            }
        }
    }
    if !extra.is_empty() {
        return Ok(Err(extra));
    }
    let table: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| ops[y][x] as usize).collect())
        .collect();
    let quandle = FiniteQuandle::trusted(table)?;
    let generators = (0..k).map(|g| index[t.rep(g as u32) as usize] as usize).collect();
    Ok(Ok(QuandleResult {
        quandle,
        words,
        generators,
    }))
}

/// Todd–Coxeter enumeration of the cosets of the trivial subgroup.
pub fn enumerate_group(p: &GroupPresentation, caps: Caps) -> EnumOutcome<GroupResult> {
    let k = p.generators().len();
    let mut t = ActionTable::new(k, caps);
    let relators: Vec<Vec<u32>> = p
        .relators()
        .iter()
        .map(|r| relator_cols(r.clone()))
        .filter(|r| !r.is_empty())
        .collect();
    let run = t.add_root().and_then(|_| t.hlt(&relators));
    if let Err(o) = run {
        return EnumOutcome::Overflow { rows: o.rows, cap: caps.max_rows };
    }
    let (rows, index) = t.compact();
    let cosets = rows
        .iter()
        .map(|&r| (0..2 * k as u32).map(|c| index[t.get(r, c) as usize]).collect())
        .collect();
    EnumOutcome::Finished(GroupResult {
        order: rows.len(),
        cosets,
    })
}

/// Both routes to the `n`-quotient of a presented quandle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub n: usize,
    /// Size of the quandle presented by `P`.
    pub direct_size: usize,
    /// Size of its largest `n`-quandle quotient.
    pub quotient_size: usize,
    /// Size of the quandle presented by `augment_n(P, n)`.
    pub augmented_size: usize,
    pub isomorphic: bool,
}

/// Compares `finite_n_quotient(enumerate(P), n)` with `enumerate(augment_n(P, n))`.
pub fn quotient_consistency(p: &QuandlePresentation, n: usize, caps: Caps) -> Result<EnumOutcome<ConsistencyReport>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n-quotients need n >= 2, got {n}")));
    }
    let direct = match enumerate_quandle(p, caps)? {
        EnumOutcome::Finished(r) => r,
        EnumOutcome::Overflow { rows, cap } => return Ok(EnumOutcome::Overflow { rows, cap }),
    };
    let quotient = finite_n_quotient(&direct.quandle, n)?;
    let augmented = match enumerate_quandle(&augment_n(p, n), caps)? {
        EnumOutcome::Finished(r) => r,
        EnumOutcome::Overflow { rows, cap } => return Ok(EnumOutcome::Overflow { rows, cap }),
    };
    let isomorphic = find_isomorphism(&quotient, &augmented.quandle).is_some();
    Ok(EnumOutcome::Finished(ConsistencyReport {
        n,
        direct_size: direct.size(),
        quotient_size: quotient.size(),
        augmented_size: augmented.size(),
        isomorphic,
    }))
}
