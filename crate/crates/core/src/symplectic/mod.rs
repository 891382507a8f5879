//! `Sp(2g, Z_p)`, transvections, and mod-`p` images of Dehn twists.
//!
//! Basis order is `a_1, b_1, .., a_g, b_g` and the form is block diagonal
//! with blocks `[[0, 1], [-1, 0]]`:
//! `form(x, y) = sum_i x_{2i-1} y_{2i} - x_{2i} y_{2i-1}` (1-based).
//! The twist along a curve of class `v` acts as the transvection
//! `x -> x + form(x, v) v`; with these conventions the twist along `a_1` is
//! `I - E_{1,2}`.
//!
//! Homology classes of the standard curves:
//! `[a_i] = e_{2i-1}`, `[b_i] = e_{2i}`, `[c_i] = e_{2i-1} - e_{2i+1}`,
//! `[d_i] = e_1 - e_{2i+1}` (so `d_1 = c_1`). A transvection only depends
//! on `v` up to sign. Twist products multiply as matrices in written order.

mod homological;
mod matgroup;

use std::fmt;

pub use homological::{p_quandle, primitive_classes, reduce_mod, PrimClass};
pub use matgroup::{
    centralizer_generation_check, transvection_centralizer_check, CentralizerReport, MatGroup,
};

use crate::error::{Error, Result};
use crate::quandle::gcd;

pub(crate) fn modp(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `form(x, y)` reduced mod `p`.
pub fn form(x: &[u32], y: &[u32], p: u32) -> u32 {
    assert_eq!(x.len(), y.len());
    assert!(x.len().is_multiple_of(2), "vectors have even length");
    let p64 = p as u64;
    let mut s: u64 = 0;
    for i in (0..x.len()).step_by(2) {
        s += x[i] as u64 * y[i + 1] as u64 % p64;
        s += (p64 - x[i + 1] as u64 * y[i] as u64 % p64) % p64;
    }
    (s % p64) as u32
}

/// A `2g x 2g` matrix over `Z_p` with `A^T J A = J`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SympMatrix {
    g: usize,
    p: u32,
    entries: Vec<u32>,
}

impl SympMatrix {
    /// Checks entries and the symplectic condition.
    pub fn new(g: usize, p: u32, rows: Vec<Vec<i64>>) -> Result<Self> {
        let d = 2 * g;
        if g == 0 || p < 2 || rows.len() != d || rows.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidArgument(format!("need a {d}x{d} matrix, g >= 1, p >= 2")));
        }
        let entries = rows.into_iter().flatten().map(|x| modp(x, p)).collect();
        let m = SympMatrix { g, p, entries };
        if !m.is_symplectic() {
            return Err(Error::InvalidArgument("matrix does not preserve the form".into()));
        }
        Ok(m)
    }

    fn raw(g: usize, p: u32, entries: Vec<u32>) -> Self {
        let m = SympMatrix { g, p, entries };
        debug_assert!(m.is_symplectic());
        m
    }

    pub fn identity(g: usize, p: u32) -> Self {
        Self::scalar(g, p, 1)
    }

    pub fn neg_identity(g: usize, p: u32) -> Self {
        Self::scalar(g, p, p - 1)
    }

    fn scalar(g: usize, p: u32, a: u32) -> Self {
        let d = 2 * g;
        let mut entries = vec![0; d * d];
        for i in 0..d {
            entries[i * d + i] = a % p;
        }
        SympMatrix { g, p, entries }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        2 * self.g
    }

    /// 0-based entry.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.dim() + j]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.dim()).map(<[u32]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.dim()).map(|i| self.get(i, j)).collect()
    }

    /// Checks `A^T J A = J`, i.e. `form(A e_i, A e_j) = form(e_i, e_j)`.
    pub fn is_symplectic(&self) -> bool {
        let d = self.dim();
        let cols: Vec<Vec<u32>> = (0..d).map(|j| self.column(j)).collect();
        (0..d).all(|i| {
            (0..d).all(|j| form(&cols[i], &cols[j], self.p) == standard_form_entry(i, j, self.p))
        })
    }

    pub fn mul(&self, other: &SympMatrix) -> SympMatrix {
        assert_eq!((self.g, self.p), (other.g, other.p));
        let d = self.dim();
        let p = self.p as u64;
        let mut entries = vec![0u32; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    let e = &mut entries[i * d + j];
                    *e = ((*e as u64 + a * other.entries[k * d + j] as u64) % p) as u32;
                }
            }
        }
        SympMatrix { g: self.g, p: self.p, entries }
    }

    /// `A^-1 = J^-1 A^T J` with `J^-1 = -J`.
    pub fn inverse(&self) -> SympMatrix {
        let d = self.dim();
        // J has the single non-zero entry J_{i, i^1} = +1 (i even) or -1 (i odd)
        let sign = |i: usize| if i.is_multiple_of(2) { 1i64 } else { -1 };
        let mut entries = vec![0u32; d * d];
        for i in 0..d {
            for j in 0..d {
                let (k, l) = (i ^ 1, j ^ 1);
                let v = -sign(i) * self.get(l, k) as i64 * sign(l);
                entries[i * d + j] = modp(v, self.p);
            }
        }
        SympMatrix { g: self.g, p: self.p, entries }
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| self.get(i, j) as u64 * v[j] as u64)
                    .sum::<u64>()
                    % self.p as u64
            })
            .map(|x| x as u32)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.g, self.p)
    }

    pub fn order(&self) -> usize {
        let mut m = self.clone();
        let mut k = 1;
        while !m.is_identity() {
            m = m.mul(self);
            k += 1;
        }
        k
    }

    /// `I + sum c E_{i,j}` with 1-based indices, as printed in the literature.
    pub fn elementary(g: usize, p: u32, terms: &[(i64, usize, usize)]) -> Self {
        let mut m = Self::identity(g, p);
        let d = m.dim();
        for &(c, i, j) in terms {
            let e = &mut m.entries[(i - 1) * d + (j - 1)];
            *e = modp(*e as i64 + c, p);
        }
        m
    }
}

/// `form(e_i, e_j)` for 0-based basis indices.
fn standard_form_entry(i: usize, j: usize, p: u32) -> u32 {
    if i / 2 != j / 2 || i == j {
        0
    } else if i.is_multiple_of(2) {
        1
    } else {
        p - 1
    }
}

impl fmt::Display for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl fmt::Debug for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sp({},{}) {}", 2 * self.g, self.p, self)
    }
}

/// Primitive over `Z_p`: the entries and `p` have no common factor.
pub fn is_primitive(v: &[u32], p: u32) -> bool {
    v.iter().fold(p as u64, |acc, &x| gcd(acc, x as u64)) == 1
}

/// `x -> x + form(x, v) v`.
pub fn transvection(v: &[i64], p: u32) -> Result<SympMatrix> {
    let d = v.len();
    if d == 0 || !d.is_multiple_of(2) || p < 2 {
        return Err(Error::InvalidArgument("need an even-length vector and p >= 2".into()));
    }
    let v: Vec<u32> = v.iter().map(|&x| modp(x, p)).collect();
    if !is_primitive(&v, p) {
        return Err(Error::NonPrimitive(v.iter().map(|&x| x as i64).collect()));
    }
    let mut entries = vec![0u32; d * d];
    for j in 0..d {
        let mut e = vec![0u32; d];
        e[j] = 1;
        let c = form(&e, &v, p) as u64;
        for i in 0..d {
            entries[i * d + j] = ((e[i] as u64 + c * v[i] as u64) % p as u64) as u32;
        }
    }
    Ok(SympMatrix::raw(d / 2, p, entries))
}

fn basis(g: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; 2 * g];
    v[i - 1] = 1;
    v
}

/// Homology class of a standard curve, 1-based index.
pub fn curve_class(g: usize, curve: Curve) -> Vec<i64> {
    match curve {
        Curve::A(i) => basis(g, 2 * i - 1),
        Curve::B(i) => basis(g, 2 * i),
        Curve::C(i) => {
            let mut v = basis(g, 2 * i - 1);
            v[2 * i] = -1;
            v
        }
        Curve::D(i) => {
            let mut v = basis(g, 1);
            v[2 * i] = -1;
            v
        }
    }
}

/// Standard curves: `a_i, b_i` for `1 <= i <= g`; `c_i, d_i` for `1 <= i < g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curve {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
}

/// Twist images along every standard curve.
#[derive(Debug, Clone)]
pub struct TwistImages {
    pub a: Vec<SympMatrix>,
    pub b: Vec<SympMatrix>,
    pub c: Vec<SympMatrix>,
    pub d: Vec<SympMatrix>,
}

pub fn twist(g: usize, p: u32, curve: Curve) -> SympMatrix {
    transvection(&curve_class(g, curve), p).expect("standard curves are primitive")
}

pub fn twist_images(g: usize, p: u32) -> TwistImages {
    let all = |f: fn(usize) -> Curve, range: std::ops::Range<usize>| {
        range.map(|i| twist(g, p, f(i))).collect::<Vec<_>>()
    };
    TwistImages {
        a: all(Curve::A, 1..g + 1),
        b: all(Curve::B, 1..g + 1),
        c: all(Curve::C, 1..g),
        d: all(Curve::D, 1..g),
    }
}

/// `tau_{d_i} tau_{a_1}^-1 tau_{a_{i+1}}^-1`, for `1 <= i < g`.
pub fn m_matrix(g: usize, p: u32, i: usize) -> SympMatrix {
    twist(g, p, Curve::D(i))
        .mul(&twist(g, p, Curve::A(1)).inverse())
        .mul(&twist(g, p, Curve::A(i + 1)).inverse())
}

/// `M_i` conjugated by `X = tau_{a_{i+1}} tau_{b_{i+1}} tau_{a_{i+1}}`, as `X^-1 M_i X`.
pub fn n_matrix(g: usize, p: u32, i: usize) -> SympMatrix {
    let a = twist(g, p, Curve::A(i + 1));
    let x = a.mul(&twist(g, p, Curve::B(i + 1))).mul(&a);
    x.inverse().mul(&m_matrix(g, p, i)).mul(&x)
}

/// Printed form `I + E_{2i+1,2} + E_{1,2i+2}`.
pub fn expected_m(g: usize, p: u32, i: usize) -> SympMatrix {
    SympMatrix::elementary(g, p, &[(1, 2 * i + 1, 2), (1, 1, 2 * i + 2)])
}

/// Printed form `I - E_{2i+2,2} + E_{1,2i+1}`.
pub fn expected_n(g: usize, p: u32, i: usize) -> SympMatrix {
    SympMatrix::elementary(g, p, &[(-1, 2 * i + 2, 2), (1, 1, 2 * i + 1)])
}

/// Shape of the centralizer of `tau_{a_1}`: first column `(a, 0, .., 0)` and
/// second row `(0, a, 0, .., 0)` with `a = +-1`.
pub fn centralizer_form_predicate(m: &SympMatrix) -> bool {
    let d = m.dim();
    let p = m.modulus();
    let a = m.get(0, 0);
    if a != 1 && a != p - 1 {
        return false;
    }
    (1..d).all(|i| m.get(i, 0) == 0)
        && m.get(1, 1) == a
        && (0..d).filter(|&j| j != 1).all(|j| m.get(1, j) == 0)
}

/// `p^{g^2} prod_{i=1..g} (p^{2i} - 1)`.
pub fn sp_order_formula(g: usize, p: u32) -> u128 {
    let p = p as u128;
    let mut order = p.pow((g * g) as u32);
    for i in 1..=g {
        order *= p.pow(2 * i as u32) - 1;
    }
    order
}
