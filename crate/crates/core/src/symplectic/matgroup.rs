use std::collections::HashMap;

use serde::Serialize;

use super::{
    centralizer_form_predicate, is_prime, sp_order_formula, twist, Curve, SympMatrix,
};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// A group of symplectic matrices over `Z_p`, enumerated breadth first.
/// Elements are indexed through a packed key (`ceil(log2 p)` bits per entry).
#[derive(Debug, Clone)]
pub struct MatGroup {
    g: usize,
    p: u32,
    generators: Vec<SympMatrix>,
    elements: Vec<SympMatrix>,
    index: HashMap<u128, usize>,
}

fn bits(p: u32) -> u32 {
    32 - (p - 1).leading_zeros().min(31)
}

fn pack(m: &SympMatrix) -> u128 {
    let b = bits(m.modulus());
    m.entries()
        .iter()
        .fold(0u128, |acc, &e| (acc << b) | e as u128)
}

impl MatGroup {
    pub fn generate(g: usize, p: u32, generators: Vec<SympMatrix>, cap: usize) -> Result<Self> {
        let d = 2 * g;
        if (d * d) as u32 * bits(p) > 128 {
            return Err(Error::InvalidArgument(format!(
                "Sp({d},{p}) entries do not fit a 128-bit key"
            )));
        }
        if generators.iter().any(|m| m.genus() != g || m.modulus() != p) {
            return Err(Error::InvalidArgument("generators of mixed shape".into()));
        }
        let identity = SympMatrix::identity(g, p);
        let mut index = HashMap::new();
        index.insert(pack(&identity), 0);
        let mut elements = vec![identity];
        let mut k = 0;
        while k < elements.len() {
            for s in &generators {
                let next = elements[k].mul(s);
                let key = pack(&next);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(key) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { what: "matrix group order", cap });
                    }
                    e.insert(elements.len());
                    elements.push(next);
                }
            }
            k += 1;
        }
        Ok(MatGroup {
            g,
            p,
            generators,
            elements,
            index,
        })
    }

    /// `Sp(2g, Z_p)`, generated by the twists along all `a_i`, `b_i`, `c_i`.
    pub fn symplectic(g: usize, p: u32, cap: usize) -> Result<Self> {
        let mut gens = Vec::new();
        for i in 1..=g {
            gens.push(twist(g, p, Curve::A(i)));
            gens.push(twist(g, p, Curve::B(i)));
        }
        for i in 1..g {
            gens.push(twist(g, p, Curve::C(i)));
        }
        Self::generate(g, p, gens, cap)
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn generators(&self) -> &[SympMatrix] {
        &self.generators
    }

    pub fn contains(&self, m: &SympMatrix) -> bool {
        self.index.contains_key(&pack(m))
    }
}

impl FiniteGroup for MatGroup {
    type Elem = SympMatrix;

    fn elements(&self) -> &[SympMatrix] {
        &self.elements
    }

    fn index_of(&self, e: &SympMatrix) -> Option<usize> {
        self.index.get(&pack(e)).copied()
    }

    fn mul(&self, a: &SympMatrix, b: &SympMatrix) -> SympMatrix {
        a.mul(b)
    }

    fn inv(&self, a: &SympMatrix) -> SympMatrix {
        a.inverse()
    }

    fn label(&self, e: &SympMatrix) -> String {
        e.to_string()
    }
}

/// Outcome of comparing the centralizer of `tau_{a_1}` in `Sp(2g, Z_p)`
/// with a second description of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerReport {
    pub g: usize,
    pub p: u32,
    pub group_order: usize,
    /// `p^{g^2} prod (p^{2i} - 1)`.
    pub order_formula: u128,
    pub centralizer_order: usize,
    /// Size of the other side (predicate set or generated subgroup).
    pub compared_order: usize,
    pub equal: bool,
    /// A matrix in exactly one of the two sets, if any.
    pub counterexample: Option<String>,
}

fn check_args(g: usize, p: u32) -> Result<()> {
    if g == 0 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("need g >= 1 and p prime, got g={g}, p={p}")));
    }
    Ok(())
}

fn brute_centralizer(sp: &MatGroup) -> Vec<bool> {
    let t = twist(sp.g, sp.p, Curve::A(1));
    sp.elements.iter().map(|m| m.mul(&t) == t.mul(m)).collect()
}

fn compare(sp: &MatGroup, central: &[bool], other: &[bool]) -> CentralizerReport {
    let counterexample = (0..sp.elements.len())
        .find(|&i| central[i] != other[i])
        .map(|i| sp.elements[i].to_string());
    CentralizerReport {
        g: sp.g,
        p: sp.p,
        group_order: sp.elements.len(),
        order_formula: sp_order_formula(sp.g, sp.p),
        centralizer_order: central.iter().filter(|&&b| b).count(),
        compared_order: other.iter().filter(|&&b| b).count(),
        equal: counterexample.is_none(),
        counterexample,
    }
}

/// The brute-force centralizer of `tau_{a_1} = I - E_{1,2}` in the fully
/// enumerated `Sp(2g, Z_p)` against [`centralizer_form_predicate`].
pub fn transvection_centralizer_check(g: usize, p: u32, cap: usize) -> Result<CentralizerReport> {
    check_args(g, p)?;
    let sp = MatGroup::symplectic(g, p, cap)?;
    let central = brute_centralizer(&sp);
    let predicate: Vec<bool> = sp.elements.iter().map(centralizer_form_predicate).collect();
    Ok(compare(&sp, &central, &predicate))
}

/// The same centralizer against the subgroup generated by the twists along
/// `a_1..a_g`, `b_2..b_g`, `c_1..c_{g-1}` together with `-I`.
pub fn centralizer_generation_check(g: usize, p: u32, cap: usize) -> Result<CentralizerReport> {
    check_args(g, p)?;
    let sp = MatGroup::symplectic(g, p, cap)?;
    let central = brute_centralizer(&sp);
    let mut gens: Vec<SympMatrix> = (1..=g).map(|i| twist(g, p, Curve::A(i))).collect();
    gens.extend((2..=g).map(|i| twist(g, p, Curve::B(i))));
    gens.extend((1..g).map(|i| twist(g, p, Curve::C(i))));
    gens.push(SympMatrix::neg_identity(g, p));
    let sub = MatGroup::generate(g, p, gens, cap)?;
    let generated: Vec<bool> = sp.elements.iter().map(|m| sub.contains(m)).collect();
    let mut report = compare(&sp, &central, &generated);
    // an element of the subgroup outside Sp would be missed by the scan above
    if sub.elements.len() != report.compared_order {
        report.equal = false;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(MatGroup::symplectic(1, 2, 1000).unwrap().order(), 6);
        assert_eq!(MatGroup::symplectic(1, 3, 1000).unwrap().order(), 24);
        assert_eq!(MatGroup::symplectic(2, 2, 1000).unwrap().order(), 720);
        assert!(MatGroup::symplectic(2, 2, 100).is_err());
    }

    #[test]
    fn centralizer_checks_small() {
        let r = transvection_centralizer_check(1, 2, 1000).unwrap();
        assert_eq!((r.group_order, r.centralizer_order), (6, 2));
        assert!(r.equal);
        let r = centralizer_generation_check(1, 3, 1000).unwrap();
        assert_eq!(r.centralizer_order, 6);
        assert!(r.equal);
        assert!(transvection_centralizer_check(1, 4, 1000).is_err());
    }

    #[test]
    fn packing_is_injective_on_small_groups() {
        let sp = MatGroup::symplectic(1, 5, 1000).unwrap();
        assert_eq!(sp.index.len(), sp.order());
        assert_eq!(bits(2), 1);
        assert_eq!(bits(3), 2);
        assert_eq!(bits(5), 3);
    }
}
