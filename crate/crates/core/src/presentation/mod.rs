//! Quandle and group words, presentations, and the presentation DSL.
//!
//! A [`QWord`] `a_0 *^{e_1} a_1 ... *^{e_n} a_n` is always left associated.
//! Arbitrary parenthesizations are brought to that form by [`normalize`]
//! using `x *^e (y *^f z) = x *^-f z *^e y *^f z`.

mod builtins;
mod parse;

use std::fmt;

pub use builtins::{
    artin_group, artin_quandle, braid_group, coxeter_group, coxeter_quandle_presentation,
    resolve_builtin, trefoil_quandle, Builtin,
};
pub use parse::{parse, Presentation};

use crate::quandle::FiniteQuandle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// Letters `(generator, sign)`; used both for group words and for words of
/// right actions on enumeration rows.
pub type Letter = (usize, Sign);

fn free_reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for (g, s) in letters {
        match out.last() {
            Some(&(h, t)) if h == g && t == s.flip() => {
                out.pop();
            }
            _ => out.push((g, s)),
        }
    }
    out
}

fn invert(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|&(g, s)| (g, s.flip())).collect()
}

/// Left-associated quandle word `base *^{s_1} g_1 *^{s_2} g_2 ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QWord {
    pub base: usize,
    pub tail: Vec<Letter>,
}

impl QWord {
    pub fn generator(g: usize) -> Self {
        QWord {
            base: g,
            tail: Vec::new(),
        }
    }

    /// Builds the word and applies [`QWord::reduce`].
    pub fn new(base: usize, tail: Vec<Letter>) -> Self {
        let mut w = QWord { base, tail };
        w.reduce();
        w
    }

    /// Cancels `*^e g *^-e g` pairs and drops leading `*^e base` letters
    /// (`x * x = x`).
    pub fn reduce(&mut self) {
        let mut tail = free_reduce(self.tail.drain(..));
        let lead = tail.iter().take_while(|&&(g, _)| g == self.base).count();
        if lead > 0 {
            tail = free_reduce(tail.into_iter().skip(lead));
            // removal can expose new leading base letters
            while tail.first().is_some_and(|&(g, _)| g == self.base) {
                tail.remove(0);
                tail = free_reduce(tail);
            }
        }
        self.tail = tail;
    }

    /// `self *^sign rhs`, flattened: `x *^e (y tail) = x tail^-1 *^e y tail`.
    pub fn apply(&self, sign: Sign, rhs: &QWord) -> QWord {
        let mut tail = self.tail.clone();
        tail.extend(invert(&rhs.tail));
        tail.push((rhs.base, sign));
        tail.extend(rhs.tail.iter().copied());
        QWord::new(self.base, tail)
    }

    /// Letters of the right translation `S_w`: `x * w = x . tail^-1 . base . tail`.
    pub fn operator_letters(&self) -> Vec<Letter> {
        let mut out = invert(&self.tail);
        out.push((self.base, Sign::Pos));
        out.extend(self.tail.iter().copied());
        out
    }

    /// Image in the enveloping group: `a_n^{e_n} .. a_1^{e_1} a_0 a_1^{-e_1} .. a_n^{-e_n}`.
    pub fn envelope(&self) -> GroupWord {
        let prefix: Vec<Letter> = self.tail.iter().rev().copied().collect();
        let mut letters = prefix.clone();
        letters.push((self.base, Sign::Pos));
        letters.extend(invert(&prefix));
        GroupWord::from_letters(letters)
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.base).chain(self.tail.iter().map(|&(g, _)| g))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        QWordDisplay { word: self, names }
    }
}

struct QWordDisplay<'a> {
    word: &'a QWord,
    names: &'a [String],
}

impl fmt::Display for QWordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names[self.word.base])?;
        for &(g, s) in &self.word.tail {
            let op = match s {
                Sign::Pos => "*",
                Sign::Neg => "*-",
            };
            write!(f, " {op} {}", self.names[g])?;
        }
        Ok(())
    }
}

/// Quandle expression with arbitrary parenthesization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QExpr {
    Gen(usize),
    Op(Box<QExpr>, Sign, Box<QExpr>),
}

impl QExpr {
    pub fn op(lhs: QExpr, sign: Sign, rhs: QExpr) -> QExpr {
        QExpr::Op(Box::new(lhs), sign, Box::new(rhs))
    }

    /// Direct evaluation in a finite quandle (no normalization).
    pub fn evaluate(&self, q: &FiniteQuandle, assignment: &[usize]) -> usize {
        match self {
            QExpr::Gen(g) => assignment[*g],
            QExpr::Op(l, s, r) => {
                let (x, y) = (l.evaluate(q, assignment), r.evaluate(q, assignment));
                q.op_signed(x, y, *s)
            }
        }
    }
}

/// Rewrites an expression tree into its left-associated normal form.
pub fn normalize(expr: &QExpr) -> QWord {
    match expr {
        QExpr::Gen(g) => QWord::generator(*g),
        QExpr::Op(l, s, r) => normalize(l).apply(*s, &normalize(r)),
    }
}

/// Left-to-right fold of the table; `*^-1` uses the inverse column.
pub fn evaluate(word: &QWord, q: &FiniteQuandle, assignment: &[usize]) -> usize {
    word.tail
        .iter()
        .fold(assignment[word.base], |x, &(g, s)| q.op_signed(x, assignment[g], s))
}

/// Freely reduced group word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord(Vec<Letter>);

impl GroupWord {
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        GroupWord(free_reduce(letters))
    }

    /// `g^k`.
    pub fn power(g: usize, k: i64) -> Self {
        let s = if k >= 0 { Sign::Pos } else { Sign::Neg };
        GroupWord(vec![(g, s); k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupWord(invert(&self.0))
    }

    pub fn concat(&self, other: &GroupWord) -> Self {
        GroupWord::from_letters(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    /// Removes letters that cancel cyclically (`g w g^-1 -> w`).
    pub fn cyclically_reduced(&self) -> Self {
        let mut v = self.0.clone();
        while v.len() >= 2 {
            let (a, b) = (v[0], v[v.len() - 1]);
            if a.0 == b.0 && a.1 == b.1.flip() {
                v.pop();
                v.remove(0);
            } else {
                break;
            }
        }
        GroupWord(v)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        GroupWordDisplay { word: self, names }
    }
}

struct GroupWordDisplay<'a> {
    word: &'a GroupWord,
    names: &'a [String],
}

impl fmt::Display for GroupWordDisplay<'_> {
    /// Runs of one letter print as powers: `s s s` is `s^3`, `t^-1 t^-1` is `t^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let (g, s) = letters[i];
            let mut j = i;
            while j < letters.len() && letters[j] == (g, s) {
                j += 1;
            }
            let k = (j - i) as i64 * s.as_i32() as i64;
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(&self.names[g])?;
            if k != 1 {
                write!(f, "^{k}")?;
            }
            i = j;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<GroupWord>,
}

impl GroupPresentation {
    /// Empty relators are dropped.
    pub fn new(generators: Vec<String>, relators: Vec<GroupWord>) -> Self {
        let relators = relators.into_iter().filter(|r| !r.is_empty()).collect();
        GroupPresentation {
            generators,
            relators,
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[GroupWord] {
        &self.relators
    }

    pub fn with_relators(mut self, extra: impl IntoIterator<Item = GroupWord>) -> Self {
        self.relators.extend(extra.into_iter().filter(|r| !r.is_empty()));
        self
    }

    /// Appends `s^k` for every generator `s`.
    pub fn with_generator_powers(self, k: i64) -> Self {
        let extra: Vec<GroupWord> = (0..self.generators.len()).map(|g| GroupWord::power(g, k)).collect();
        self.with_relators(extra)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group< {} |", self.generators.join(", "))?;
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| r.display(&self.generators).to_string())
            .collect();
        if rels.is_empty() {
            f.write_str(" >")
        } else {
            write!(f, " {} >", rels.join(" ; "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandlePresentation {
    generators: Vec<String>,
    relations: Vec<(QWord, QWord)>,
}

impl QuandlePresentation {
    /// Stores each relation reduced, with common trailing letters removed
    /// from both sides (`u *^e g = v *^e g` iff `u = v`).
    pub fn new(generators: Vec<String>, relations: Vec<(QWord, QWord)>) -> Self {
        let relations = relations.into_iter().map(|(l, r)| cancel_trailing(l, r)).collect();
        QuandlePresentation {
            generators,
            relations,
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[(QWord, QWord)] {
        &self.relations
    }

    /// True when `assignment` satisfies every relation in `q`.
    pub fn holds_in(&self, q: &FiniteQuandle, assignment: &[usize]) -> bool {
        self.relations
            .iter()
            .all(|(l, r)| evaluate(l, q, assignment) == evaluate(r, q, assignment))
    }
}

fn cancel_trailing(mut l: QWord, mut r: QWord) -> (QWord, QWord) {
    l.reduce();
    r.reduce();
    while let (Some(a), Some(b)) = (l.tail.last(), r.tail.last()) {
        if a != b {
            break;
        }
        l.tail.pop();
        r.tail.pop();
    }
    l.reduce();
    r.reduce();
    (l, r)
}

impl fmt::Display for QuandlePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "quandle< {} |", self.generators.join(", "))?;
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|(l, r)| {
                format!(
                    "{} = {}",
                    l.display(&self.generators),
                    r.display(&self.generators)
                )
            })
            .collect();
        if rels.is_empty() {
            f.write_str(" >")
        } else {
            write!(f, " {} >", rels.join(" ; "))
        }
    }
}

/// Adds `x *^n y = x` for every ordered pair of distinct generators.
pub fn augment_n(p: &QuandlePresentation, n: usize) -> QuandlePresentation {
    assert!(n >= 2, "n-quandle quotients need n >= 2");
    let k = p.generators.len();
    let mut relations = p.relations.clone();
    for x in 0..k {
        for y in 0..k {
            if x != y {
                relations.push((QWord::new(x, vec![(y, Sign::Pos); n]), QWord::generator(x)));
            }
        }
    }
    QuandlePresentation::new(p.generators.clone(), relations)
}

/// Enveloping-group presentation on the presentation's generators: each
/// relation `u = v` becomes `û v̂^-1`; with `n`, the commutators
/// `e_x^n e_y e_x^-n e_y^-1` are appended for all `x != y`.
pub fn env_presentation(p: &QuandlePresentation, n: Option<usize>) -> GroupPresentation {
    let mut relators: Vec<GroupWord> = p
        .relations
        .iter()
        .map(|(l, r)| l.envelope().concat(&r.envelope().inverse()))
        .collect();
    if let Some(n) = n {
        let k = p.generators.len();
        for x in 0..k {
            for y in 0..k {
                if x == y {
                    continue;
                }
                let mut letters = vec![(x, Sign::Pos); n];
                letters.push((y, Sign::Pos));
                letters.extend(vec![(x, Sign::Neg); n]);
                letters.push((y, Sign::Neg));
                relators.push(GroupWord::from_letters(letters));
            }
        }
    }
    GroupPresentation::new(p.generators.clone(), relators)
}

/// Candidate presentation of `D(S^G)` from `G = <S | R>`: for every relator
/// `r = g_1^{e_1} .. g_k^{e_k}` and generator `x`, the relation
/// `x *^{e_k} g_k .. *^{e_1} g_1 = x` (conjugation of `x` by `r`).
pub fn dehn_presentation_from_group(gp: &GroupPresentation) -> QuandlePresentation {
    let k = gp.generators.len();
    let mut relations = Vec::new();
    for r in &gp.relators {
        let tail: Vec<Letter> = r.letters().iter().rev().copied().collect();
        for x in 0..k {
            relations.push((QWord::new(x, tail.clone()), QWord::generator(x)));
        }
    }
    QuandlePresentation::new(gp.generators.clone(), relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn g(i: usize) -> QExpr {
        QExpr::Gen(i)
    }

    #[test]
    fn one_rewrite_step() {
        // a*(b*c) -> a *- c * b * c
        let e = QExpr::op(g(0), Sign::Pos, QExpr::op(g(1), Sign::Pos, g(2)));
        let w = normalize(&e);
        assert_eq!(w, QWord { base: 0, tail: vec![(2, Sign::Neg), (1, Sign::Pos), (2, Sign::Pos)] });
        // checked in R_3 under every assignment
        let q = FiniteQuandle::dihedral(3);
        for a in 0..27 {
            let asg = [a % 3, (a / 3) % 3, a / 9];
            assert_eq!(e.evaluate(&q, &asg), evaluate(&w, &q, &asg));
        }
    }

    #[test]
    fn flat_word_is_unchanged() {
        let e = QExpr::op(g(0), Sign::Pos, g(1));
        assert_eq!(normalize(&e), QWord::new(0, vec![(1, Sign::Pos)]));
    }

    #[test]
    fn two_rewrite_steps_give_seven_letters() {
        let e = QExpr::op(
            g(0),
            Sign::Pos,
            QExpr::op(g(1), Sign::Pos, QExpr::op(g(2), Sign::Pos, g(3))),
        );
        let w = normalize(&e);
        assert_eq!(w.tail.len(), 7);
        let q = FiniteQuandle::dihedral(5);
        for a in 0..625usize {
            let asg = [a % 5, (a / 5) % 5, (a / 25) % 5, a / 125];
            assert_eq!(e.evaluate(&q, &asg), evaluate(&w, &q, &asg));
        }
    }

    #[test]
    fn evaluation_examples() {
        let q = FiniteQuandle::dihedral(3);
        assert_eq!(evaluate(&QWord::new(0, vec![(1, Sign::Pos)]), &q, &[0, 1]), 2);
        assert_eq!(evaluate(&QWord::generator(0), &q, &[2]), 2);
        let w = QWord { base: 0, tail: vec![(1, Sign::Neg), (1, Sign::Pos)] };
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(evaluate(&w, &q, &[a, b]), a);
            }
        }
    }

    #[test]
    fn reduction_rules() {
        let w = QWord::new(0, vec![(0, Sign::Pos), (1, Sign::Pos), (1, Sign::Neg), (0, Sign::Neg), (2, Sign::Pos)]);
        assert_eq!(w, QWord::new(0, vec![(2, Sign::Pos)]));
    }

    #[test]
    fn augmentation_counts() {
        let t = trefoil_quandle();
        assert_eq!(augment_n(&t, 2).relations().len(), 4);
        let free1 = QuandlePresentation::new(names(&["x"]), vec![]);
        assert_eq!(augment_n(&free1, 5).relations().len(), 0);
        let three = QuandlePresentation::new(names(&["a", "b", "c"]), vec![]);
        assert_eq!(augment_n(&three, 3).relations().len(), 6);
    }

    #[test]
    fn trefoil_envelope_is_braid_relation() {
        let env = env_presentation(&trefoil_quandle(), None);
        assert_eq!(env.relators().len(), 2);
        // a*b*a = b  ->  a b a b^-1 a^-1 b^-1
        let expected = GroupWord::from_letters(vec![
            (0, Sign::Pos),
            (1, Sign::Pos),
            (0, Sign::Pos),
            (1, Sign::Neg),
            (0, Sign::Neg),
            (1, Sign::Neg),
        ]);
        assert_eq!(env.relators()[0], expected);
        let env2 = env_presentation(&trefoil_quandle(), Some(2));
        assert_eq!(env2.relators().len(), 4);
        assert_eq!(env2.relators()[2].display(env2.generators()).to_string(), "a^2 b a^-2 b^-1");
        let free = env_presentation(&QuandlePresentation::new(names(&["x", "y"]), vec![]), None);
        assert!(free.relators().is_empty());
    }

    #[test]
    fn dehn_recipe_examples() {
        // r = s^2 on one generator: s * s * s = s, i.e. s = s after reduction
        let gp = GroupPresentation::new(names(&["s"]), vec![GroupWord::power(0, 2)]);
        let qp = dehn_presentation_from_group(&gp);
        assert_eq!(qp.relations(), &[(QWord::generator(0), QWord::generator(0))]);
        // commuting relator s t s^-1 t^-1 gives s*t = s and t*s = t
        let gp = GroupPresentation::new(
            names(&["s", "t"]),
            vec![GroupWord::from_letters(vec![(0, Sign::Pos), (1, Sign::Pos), (0, Sign::Neg), (1, Sign::Neg)])],
        );
        let qp = dehn_presentation_from_group(&gp);
        let trivial = FiniteQuandle::trivial(2);
        assert!(qp.holds_in(&trivial, &[0, 1]));
        // in R_3 two distinct elements do not commute, so the relations fail
        assert!(!qp.holds_in(&FiniteQuandle::dihedral(3), &[0, 1]));
    }

    #[test]
    fn display_powers() {
        let w = GroupWord::from_letters(vec![(0, Sign::Pos), (0, Sign::Pos), (1, Sign::Neg)]);
        assert_eq!(w.display(&names(&["s", "t"])).to_string(), "s^2 t^-1");
    }
}
