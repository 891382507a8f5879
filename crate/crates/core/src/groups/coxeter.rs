use std::fmt;
use std::str::FromStr;

use super::{dehn_quandle, dihedral_reflections, PermGroup, Permutation, DEFAULT_GROUP_CAP};
use crate::error::{Error, Result};
use crate::quandle::FiniteQuandle;

/// Finite Coxeter types with a permutation realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxeterType {
    /// `A_n`: `Σ_{n+1}` with adjacent transpositions.
    A(usize),
    /// `B_n`: signed permutations of `n` letters acting on `2n` points.
    B(usize),
    /// `I_2(m)`: dihedral group of order `2m`.
    I2(usize),
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '_').collect();
        let bad = || Error::UnsupportedType(s.to_string());
        let number = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let ty = if let Some(rest) = compact.strip_prefix("I2(") {
            CoxeterType::I2(number(rest.strip_suffix(')').ok_or_else(bad)?)?)
        } else if let Some(rest) = compact.strip_prefix('A') {
            CoxeterType::A(number(rest)?)
        } else if let Some(rest) = compact.strip_prefix('B') {
            CoxeterType::B(number(rest)?)
        } else {
            return Err(bad());
        };
        let ok = match ty {
            CoxeterType::A(n) => (1..=8).contains(&n),
            CoxeterType::B(n) => (2..=4).contains(&n),
            CoxeterType::I2(m) => (3..=50).contains(&m),
        };
        if ok {
            Ok(ty)
        } else {
            Err(bad())
        }
    }
}

/// Symmetric matrix of Coxeter exponents `m_ij` (`m_ii = 1`, `0` for infinity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    entries: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(entries: Vec<Vec<u32>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidArgument("Coxeter matrix must be square".into()));
            }
            for (j, &m) in row.iter().enumerate() {
                let valid = if i == j { m == 1 } else { m == 0 || m >= 2 };
                if !valid || entries[j][i] != m {
                    return Err(Error::InvalidArgument(format!(
                        "invalid Coxeter exponent m[{i}][{j}] = {m}"
                    )));
                }
            }
        }
        Ok(CoxeterMatrix { entries })
    }

    pub fn of_type(ty: CoxeterType) -> Self {
        let n = match ty {
            CoxeterType::A(n) | CoxeterType::B(n) => n,
            CoxeterType::I2(_) => 2,
        };
        let mut entries = vec![vec![2; n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 1;
        }
        for i in 0..n.saturating_sub(1) {
            entries[i][i + 1] = 3;
            entries[i + 1][i] = 3;
        }
        match ty {
            CoxeterType::B(_) => {
                entries[0][1] = 4;
                entries[1][0] = 4;
            }
            CoxeterType::I2(m) => {
                entries[0][1] = m as u32;
                entries[1][0] = m as u32;
            }
            CoxeterType::A(_) => {}
        }
        CoxeterMatrix { entries }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    /// The finite type this matrix is the standard matrix of, if any.
    pub fn classify(&self) -> Option<CoxeterType> {
        let n = self.rank();
        let mut candidates = vec![CoxeterType::A(n)];
        if n >= 2 {
            candidates.push(CoxeterType::B(n));
        }
        if n == 2 && self.entries[0][1] >= 3 {
            candidates.push(CoxeterType::I2(self.entries[0][1] as usize));
        }
        candidates
            .into_iter()
            .find(|&t| CoxeterMatrix::of_type(t) == *self)
    }
}

impl FromStr for CoxeterMatrix {
    type Err = Error;

    /// Accepts a type name (`A3`, `B2`, `I2(5)`) or rows such as `1,3;3,1`
    /// (brackets optional, `inf` for an infinite exponent).
    fn from_str(s: &str) -> Result<Self> {
        if let Ok(ty) = s.parse::<CoxeterType>() {
            return Ok(CoxeterMatrix::of_type(ty));
        }
        let cleaned: String = s
            .replace("],", ";")
            .chars()
            .filter(|c| !matches!(c, '[' | ']' | ' '))
            .collect();
        let rows = cleaned
            .split([';', '|'])
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.split(',')
                    .map(|e| match e {
                        "inf" | "∞" => Ok(0),
                        _ => e
                            .parse::<u32>()
                            .map_err(|_| Error::InvalidArgument(format!("bad Coxeter entry `{e}`"))),
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        CoxeterMatrix::new(rows)
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join(";"))
    }
}

/// The Coxeter group of `ty` with its simple reflections, in the order of
/// the standard matrix.
pub fn coxeter_system(ty: CoxeterType) -> Result<(PermGroup, Vec<Permutation>)> {
    let simple = match ty {
        CoxeterType::A(n) => (0..n)
            .map(|i| Permutation::transposition(n + 1, i, i + 1))
            .collect::<Vec<_>>(),
        CoxeterType::I2(m) => {
            let (s, t) = dihedral_reflections(m);
            vec![s, t]
        }
        CoxeterType::B(n) => {
            // point i is +i, point n+i is -i
            let mut gens = vec![Permutation::transposition(2 * n, 0, n)];
            for i in 1..n {
                let mut images: Vec<usize> = (0..2 * n).collect();
                images.swap(i - 1, i);
                images.swap(n + i - 1, n + i);
                gens.push(Permutation::from_images(images)?);
            }
            gens
        }
    };
    let degree = simple[0].degree();
    let group = PermGroup::generate(degree, simple.clone(), DEFAULT_GROUP_CAP)?;
    Ok((group, simple))
}

/// Coxeter quandle `D(S^W)` of a realizable finite type.
pub fn coxeter_quandle(matrix: &CoxeterMatrix) -> Result<FiniteQuandle> {
    let ty = matrix
        .classify()
        .ok_or_else(|| Error::UnsupportedType(matrix.to_string()))?;
    let (group, simple) = coxeter_system(ty)?;
    dehn_quandle(&group, &simple, crate::quandle::DEFAULT_QUANDLE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quandle_of(ty: &str) -> FiniteQuandle {
        coxeter_quandle(&ty.parse().unwrap()).unwrap()
    }

    #[test]
    fn realizations_satisfy_coxeter_relations() {
        for ty in [CoxeterType::A(3), CoxeterType::B(3), CoxeterType::I2(5), CoxeterType::B(2)] {
            let m = CoxeterMatrix::of_type(ty);
            let (_, s) = coxeter_system(ty).unwrap();
            for i in 0..s.len() {
                for j in 0..s.len() {
                    assert_eq!(s[i].then(&s[j]).order() as u32, m.get(i, j), "{ty} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(coxeter_system(CoxeterType::A(3)).unwrap().0.order(), 24);
        assert_eq!(coxeter_system(CoxeterType::B(3)).unwrap().0.order(), 48);
        assert_eq!(coxeter_system(CoxeterType::I2(4)).unwrap().0.order(), 8);
    }

    #[test]
    fn quandle_sizes() {
        assert_eq!(quandle_of("A2").size(), 3);
        assert_eq!(quandle_of("A4").size(), 10);
        assert_eq!(quandle_of("B3").size(), 9);
        let i24 = quandle_of("I2(4)");
        assert_eq!(i24.size(), 4);
        let mut orbits: Vec<usize> = i24.orbits().iter().map(Vec::len).collect();
        orbits.sort();
        assert_eq!(orbits, vec![2, 2]);
        assert_eq!(quandle_of("I2(5)").orbits().len(), 1);
    }

    #[test]
    fn coxeter_quandles_are_involutory() {
        for ty in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "I2(3)", "I2(6)", "I2(7)"] {
            let q = quandle_of(ty);
            q.validate().unwrap();
            assert!(q.is_n_quandle(2), "{ty}");
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("A_3".parse::<CoxeterType>().unwrap(), CoxeterType::A(3));
        assert_eq!("I2(4)".parse::<CoxeterType>().unwrap(), CoxeterType::I2(4));
        assert!("D4".parse::<CoxeterType>().is_err());
        let m: CoxeterMatrix = "[[1,3],[3,1]]".parse().unwrap();
        assert_eq!(m.classify(), Some(CoxeterType::A(2)));
        let m: CoxeterMatrix = "1,4;4,1".parse().unwrap();
        // B2 and I2(4) share a matrix; A is tried first, then B
        assert_eq!(m.classify(), Some(CoxeterType::B(2)));
        assert!("1,3;2,1".parse::<CoxeterMatrix>().is_err());
        let affine: CoxeterMatrix = "1,inf;inf,1".parse().unwrap();
        assert!(coxeter_quandle(&affine).is_err());
    }
}
