//! Named presentations: `trefoil-quandle`, `braid(n)`, `artin(M)`, `coxeter(M)`.
//!
//! `M` is anything [`CoxeterMatrix`] parses: a type name (`A3`, `B2`, `I2(5)`)
//! or rows (`1,3;3,1`).

use super::{
    augment_n, env_presentation, parse, GroupPresentation, GroupWord, Presentation, QWord,
    QuandlePresentation, Sign,
};
use crate::error::{Error, Result};
use crate::groups::CoxeterMatrix;

/// Both forms of a named presentation. Commands that need a quandle use
/// `quandle`, commands that need a group use `group`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Builtin {
    pub quandle: Option<QuandlePresentation>,
    pub group: Option<GroupPresentation>,
}

impl From<Presentation> for Builtin {
    fn from(p: Presentation) -> Self {
        match p {
            Presentation::Quandle(q) => Builtin { quandle: Some(q), group: None },
            Presentation::Group(g) => Builtin { quandle: None, group: Some(g) },
        }
    }
}

/// `quandle< a, b | a*b*a = b ; b*a*b = a >`.
pub fn trefoil_quandle() -> QuandlePresentation {
    match parse("quandle< a, b | a*b*a = b ; b*a*b = a >").expect("literal") {
        Presentation::Quandle(q) => q,
        Presentation::Group(_) => unreachable!(),
    }
}

fn simple_names(rank: usize) -> Vec<String> {
    (1..=rank).map(|i| format!("s{i}")).collect()
}

/// `x y x y ..` with `len` letters.
fn alternating(x: usize, y: usize, len: usize) -> Vec<usize> {
    (0..len).map(|k| if k % 2 == 0 { x } else { y }).collect()
}

/// Artin group: `(s_i s_j)_m = (s_j s_i)_m` for every finite `m = m_ij`.
pub fn artin_group(m: &CoxeterMatrix) -> GroupPresentation {
    let n = m.rank();
    let mut relators = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let e = m.get(i, j) as usize;
            if e == 0 {
                continue;
            }
            let mut letters: Vec<_> = alternating(i, j, e).into_iter().map(|g| (g, Sign::Pos)).collect();
            letters.extend(alternating(j, i, e).into_iter().rev().map(|g| (g, Sign::Neg)));
            relators.push(GroupWord::from_letters(letters));
        }
    }
    GroupPresentation::new(simple_names(n), relators)
}

/// Coxeter group: the Artin relators plus `s_i^2`.
pub fn coxeter_group(m: &CoxeterMatrix) -> GroupPresentation {
    artin_group(m).with_generator_powers(2)
}

/// Artin quandle presentation. For `m = m_ij`, conjugating by the
/// alternating word of length `m - 1` starting at `s_j` sends `s_i` to
/// `s_j` when `m` is odd and fixes it when `m` is even; both orientations
/// are included.
pub fn artin_quandle(m: &CoxeterMatrix) -> QuandlePresentation {
    let n = m.rank();
    let mut relations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let e = m.get(i, j) as usize;
            if i == j || e == 0 {
                continue;
            }
            let tail = alternating(j, i, e - 1).into_iter().map(|g| (g, Sign::Pos)).collect();
            let rhs = if e % 2 == 1 { j } else { i };
            relations.push((QWord::new(i, tail), QWord::generator(rhs)));
        }
    }
    QuandlePresentation::new(simple_names(n), relations)
}

/// Involutory quotient of the Artin quandle, which presents the Coxeter quandle.
pub fn coxeter_quandle_presentation(m: &CoxeterMatrix) -> QuandlePresentation {
    augment_n(&artin_quandle(m), 2)
}

/// Braid group `B_n` = Artin group of type `A_{n-1}`.
pub fn braid_group(n: usize) -> Result<GroupPresentation> {
    Ok(artin_group(&braid_matrix(n)?))
}

fn braid_matrix(n: usize) -> Result<CoxeterMatrix> {
    if !(2..=64).contains(&n) {
        return Err(Error::InvalidArgument(format!("braid({n}): need 2 <= n <= 64")));
    }
    let mut entries = vec![vec![2u32; n - 1]; n - 1];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = 1;
        if i + 1 < n - 1 {
            row[i + 1] = 3;
        }
        if i > 0 {
            row[i - 1] = 3;
        }
    }
    CoxeterMatrix::new(entries)
}

fn call<'a>(name: &'a str, head: &str) -> Option<&'a str> {
    name.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')
}

/// Resolves a built-in name; `None` when `name` is not of a built-in form.
pub fn resolve_builtin(name: &str) -> Option<Result<Builtin>> {
    let name = name.trim();
    if name == "trefoil-quandle" || name == "trefoil" {
        let q = trefoil_quandle();
        let g = env_presentation(&q, None);
        return Some(Ok(Builtin { quandle: Some(q), group: Some(g) }));
    }
    if let Some(arg) = call(name, "braid") {
        return Some(arg.trim().parse::<usize>().map_err(|_| Error::InvalidArgument(format!("bad braid index `{arg}`"))).and_then(|n| {
            let m = braid_matrix(n)?;
            Ok(Builtin { quandle: Some(artin_quandle(&m)), group: Some(artin_group(&m)) })
        }));
    }
    if let Some(arg) = call(name, "artin") {
        return Some(arg.parse::<CoxeterMatrix>().map(|m| Builtin {
            quandle: Some(artin_quandle(&m)),
            group: Some(artin_group(&m)),
        }));
    }
    if let Some(arg) = call(name, "coxeter") {
        return Some(arg.parse::<CoxeterMatrix>().map(|m| Builtin {
            quandle: Some(coxeter_quandle_presentation(&m)),
            group: Some(coxeter_group(&m)),
        }));
    }
    None
}
