//! Projective primitive homological quandles `P_{g,n}`: primitive vectors of
//! `Z_n^{2g}` up to sign, with `x * y = x + form(x, y) y`.

use std::collections::HashMap;
use std::fmt;

use super::{form, is_primitive, modp};
use crate::error::{Error, Result};
use crate::quandle::{gcd, FiniteQuandle};

/// A primitive vector mod `n` up to sign, stored as the lexicographically
/// smaller of `v` and `-v` (entries in `[0, n)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimClass {
    n: u32,
    coords: Vec<u32>,
}

impl PrimClass {
    /// Class of `v` mod `n`; `v` must be primitive mod `n`.
    pub fn new(v: &[i64], n: u32) -> Result<Self> {
        if n < 2 || v.is_empty() || !v.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument("need n >= 2 and an even-length vector".into()));
        }
        let coords: Vec<u32> = v.iter().map(|&x| modp(x, n)).collect();
        if !is_primitive(&coords, n) {
            return Err(Error::NonPrimitive(v.to_vec()));
        }
        Ok(Self::canonical(coords, n))
    }

    fn canonical(coords: Vec<u32>, n: u32) -> Self {
        let neg: Vec<u32> = coords.iter().map(|&x| (n - x) % n).collect();
        PrimClass {
            n,
            coords: coords.min(neg),
        }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    /// `self + form(self, y) y`, re-canonicalized.
    pub fn op(&self, y: &PrimClass) -> PrimClass {
        let n = self.n;
        let c = form(&self.coords, &y.coords, n) as u64;
        let z = self
            .coords
            .iter()
            .zip(&y.coords)
            .map(|(&a, &b)| ((a as u64 + c * b as u64) % n as u64) as u32)
            .collect();
        Self::canonical(z, n)
    }
}

impl fmt::Display for PrimClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Reduction of an integral primitive vector mod `n`.
pub fn reduce_mod(v: &[i64], n: u32) -> Result<PrimClass> {
    let content = v.iter().fold(0u64, |acc, &x| gcd(acc, x.unsigned_abs()));
    if content != 1 {
        return Err(Error::NonPrimitive(v.to_vec()));
    }
    PrimClass::new(v, n)
}

/// All classes of `P_{g,n}` in increasing order.
pub fn primitive_classes(g: usize, n: u32, cap: usize) -> Result<Vec<PrimClass>> {
    if g == 0 || n < 2 {
        return Err(Error::InvalidArgument(format!("need g >= 1 and n >= 2, got g={g}, n={n}")));
    }
    let d = 2 * g;
    let total = (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if total > (cap as u128).saturating_mul(2 * n as u128).max(1 << 20) {
        return Err(Error::CapExceeded { what: "vectors scanned for P_{g,n}", cap });
    }
    let mut out = Vec::new();
    let mut v = vec![0u32; d];
    loop {
        if is_primitive(&v, n) {
            let c = PrimClass::canonical(v.clone(), n);
            if c.coords == v {
                if out.len() >= cap {
                    return Err(Error::CapExceeded { what: "P_{g,n} size", cap });
                }
                out.push(c);
            }
        }
        // odometer, last coordinate fastest
        let mut i = d;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            v[i] += 1;
            if v[i] < n {
                break;
            }
            v[i] = 0;
        }
    }
}

/// The quandle `P_{g,n}`, labelled by representative vectors.
pub fn p_quandle(g: usize, n: u32, cap: usize) -> Result<FiniteQuandle> {
    let classes = primitive_classes(g, n, cap)?;
    let index: HashMap<&PrimClass, usize> = classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let rows = classes
        .iter()
        .map(|x| classes.iter().map(|y| index[&x.op(y)]).collect())
        .collect();
    let labels = classes.iter().map(PrimClass::to_string).collect();
    Ok(FiniteQuandle::trusted(rows)?.with_labels(labels))
}
