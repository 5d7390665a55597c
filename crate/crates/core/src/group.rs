//! Arithmetic and structural queries on the rank-two group `Z_m x Z_n`.
//!
//! Elements are always stored reduced, so equality and hashing are structural.
//! Torsion sets, subgroups and Klein cosets are computed from the divisor
//! structure of `m` and `n` rather than by scanning the group.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element `(x, y)` of `Z_m x Z_n`, reduced modulo `(m, n)`.
///
/// The derived ordering is lexicographic on `(x, y)`, which is the order used
/// for canonical codewords and for the search's element indexing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    pub x: u32,
    pub y: u32,
}

impl GroupElement {
    pub const ZERO: GroupElement = GroupElement { x: 0, y: 0 };

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    // Residue-class predicates used by the counting arguments for the bound.
    // They read the stored representative, so they only carry meaning when
    // the relevant modulus is divisible by 4 (resp. 2).

    /// `x = 2 (mod 4)`.
    pub fn in_a_s_dot(self) -> bool {
        self.x % 4 == 2
    }

    /// `x = 0 (mod 4)`.
    pub fn in_a_d_dot(self) -> bool {
        self.x % 4 == 0
    }

    /// `y` odd.
    pub fn in_a_dot_o(self) -> bool {
        self.y % 2 == 1
    }

    /// `x = 2 (mod 4)` and `y` even.
    pub fn in_a_se(self) -> bool {
        self.x % 4 == 2 && self.y % 2 == 0
    }

    /// `x = 0 (mod 4)` and `y` even.
    pub fn in_a_de(self) -> bool {
        self.x % 4 == 0 && self.y % 2 == 0
    }

    /// `x = 0 (mod 4)` and `y = 2 (mod 4)`.
    pub fn in_a_ds(self) -> bool {
        self.x % 4 == 0 && self.y % 4 == 2
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Parity class of an element when both moduli are even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityClass {
    Ee,
    Eo,
    Oe,
    Oo,
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParityClass::Ee => "ee",
            ParityClass::Eo => "eo",
            ParityClass::Oe => "oe",
            ParityClass::Oo => "oo",
        };
        f.write_str(s)
    }
}

/// The group `Z_m x Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridGroup {
    m: u32,
    n: u32,
}

impl GridGroup {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::param(format!("moduli must be positive, got ({m},{n})")));
        }
        Ok(GridGroup { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of elements, `mn`.
    pub fn order(&self) -> usize {
        self.m as usize * self.n as usize
    }

    /// The same group with the coordinates swapped.
    pub fn transposed(&self) -> GridGroup {
        GridGroup { m: self.n, n: self.m }
    }

    /// Builds an element from arbitrary integers, reducing them.
    pub fn elem(&self, x: i64, y: i64) -> GroupElement {
        GroupElement {
            x: x.rem_euclid(self.m as i64) as u32,
            y: y.rem_euclid(self.n as i64) as u32,
        }
    }

    pub fn contains(&self, a: GroupElement) -> bool {
        a.x < self.m && a.y < self.n
    }

    pub fn add(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement {
            x: ((a.x as u64 + b.x as u64) % self.m as u64) as u32,
            y: ((a.y as u64 + b.y as u64) % self.n as u64) as u32,
        }
    }

    pub fn negate(&self, a: GroupElement) -> GroupElement {
        GroupElement {
            x: (self.m - a.x) % self.m,
            y: (self.n - a.y) % self.n,
        }
    }

    pub fn sub(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.add(a, self.negate(b))
    }

    pub fn scale(&self, k: i64, a: GroupElement) -> GroupElement {
        self.elem(k * a.x as i64, k * a.y as i64)
    }

    /// Order of `a` as a group element.
    pub fn element_order(&self, a: GroupElement) -> u32 {
        let ox = self.m / self.m.gcd(&a.x);
        let oy = self.n / self.n.gcd(&a.y);
        ox.lcm(&oy)
    }

    /// Row-major index in `[0, mn)`.
    pub fn index(&self, a: GroupElement) -> usize {
        a.x as usize * self.n as usize + a.y as usize
    }

    pub fn from_index(&self, i: usize) -> GroupElement {
        GroupElement {
            x: (i / self.n as usize) as u32,
            y: (i % self.n as usize) as u32,
        }
    }

    /// All elements in row-major order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }

    /// `Omega(i) = { a : i*a = 0 }` for `i` in {2, 3, 4}, sorted.
    pub fn omega(&self, i: u32) -> Result<Vec<GroupElement>> {
        if !(2..=4).contains(&i) {
            return Err(Error::param(format!("omega is defined here for i in {{2,3,4}}, got {i}")));
        }
        let xs = torsion_of_cyclic(self.m, i);
        let ys = torsion_of_cyclic(self.n, i);
        Ok(product(&xs, &ys))
    }

    /// The subgroup `S x T` with `|S| = s`, `|T| = t`.
    pub fn subgroup(&self, s: u32, t: u32) -> Result<Vec<GroupElement>> {
        if s == 0 || t == 0 || self.m % s != 0 || self.n % t != 0 {
            return Err(Error::param(format!(
                "({s},{t}) does not divide ({},{})",
                self.m, self.n
            )));
        }
        let xs: Vec<u32> = (0..s).map(|k| k * (self.m / s)).collect();
        let ys: Vec<u32> = (0..t).map(|k| k * (self.n / t)).collect();
        Ok(product(&xs, &ys))
    }

    /// Every subgroup of order 3, each as a sorted element list.
    pub fn order3_subgroups(&self) -> Vec<Vec<GroupElement>> {
        let (m, n) = (self.m as i64, self.n as i64);
        let mut gens = Vec::new();
        if n % 3 == 0 {
            gens.push(self.elem(0, n / 3));
        }
        if m % 3 == 0 {
            gens.push(self.elem(m / 3, 0));
        }
        if m % 3 == 0 && n % 3 == 0 {
            gens.push(self.elem(m / 3, n / 3));
            gens.push(self.elem(m / 3, 2 * n / 3));
        }
        gens.into_iter().map(|g| self.cyclic_subgroup(g)).collect()
    }

    /// Every cyclic subgroup of order 4, each as a sorted element list.
    pub fn order4_cyclic_subgroups(&self) -> Vec<Vec<GroupElement>> {
        let (m, n) = (self.m as i64, self.n as i64);
        let (m4, n4, m2, n2) = (m % 4 == 0, n % 4 == 0, m % 2 == 0, n % 2 == 0);
        let mut gens = Vec::new();
        if m4 {
            gens.push(self.elem(m / 4, 0));
        }
        if m4 && n4 {
            gens.push(self.elem(m / 4, n / 4));
        }
        if m4 && n2 {
            gens.push(self.elem(m / 4, n / 2));
        }
        if m4 && n4 {
            gens.push(self.elem(m / 4, 3 * n / 4));
        }
        if n4 {
            gens.push(self.elem(0, n / 4));
        }
        if m2 && n4 {
            gens.push(self.elem(m / 2, n / 4));
        }
        gens.into_iter().map(|g| self.cyclic_subgroup(g)).collect()
    }

    /// The cyclic subgroup generated by `g`, sorted.
    pub fn cyclic_subgroup(&self, g: GroupElement) -> Vec<GroupElement> {
        let mut out = vec![GroupElement::ZERO];
        let mut cur = g;
        while !cur.is_zero() {
            out.push(cur);
            cur = self.add(cur, g);
        }
        out.sort();
        out
    }

    fn require_2mod4(&self) -> Result<()> {
        if self.m % 4 != 2 || self.n % 4 != 2 {
            return Err(Error::param(format!(
                "Klein cosets need m = n = 2 (mod 4), got ({},{})",
                self.m, self.n
            )));
        }
        Ok(())
    }

    /// The coset `D(x, y) = (x, y) + H` of the Klein subgroup
    /// `H = {(0,0), (0,n/2), (m/2,0), (m/2,n/2)}`, for `(x, y)` in
    /// `[0, m/2) x [0, n/2)`. Returned in the order
    /// `(x,y), (x,y+n/2), (x+m/2,y), (x+m/2,y+n/2)`.
    pub fn coset_d(&self, x: u32, y: u32) -> Result<[GroupElement; 4]> {
        self.require_2mod4()?;
        let (hm, hn) = (self.m / 2, self.n / 2);
        if x >= hm || y >= hn {
            return Err(Error::param(format!(
                "coset representative ({x},{y}) outside [0,{hm})x[0,{hn})"
            )));
        }
        Ok([
            GroupElement { x, y },
            GroupElement { x, y: y + hn },
            GroupElement { x: x + hm, y },
            GroupElement { x: x + hm, y: y + hn },
        ])
    }

    /// The unique member of `D(x, y)` in the given parity class.
    pub fn coset_member(&self, x: u32, y: u32, class: ParityClass) -> Result<GroupElement> {
        let coset = self.coset_d(x, y)?;
        for e in coset {
            if self.parity(e)? == class {
                return Ok(e);
            }
        }
        unreachable!("each Klein coset meets every parity class once when m = n = 2 (mod 4)")
    }

    pub fn parity(&self, a: GroupElement) -> Result<ParityClass> {
        if self.m % 2 != 0 || self.n % 2 != 0 {
            return Err(Error::param(format!(
                "parity classes need both moduli even, got ({},{})",
                self.m, self.n
            )));
        }
        Ok(match (a.x % 2, a.y % 2) {
            (0, 0) => ParityClass::Ee,
            (0, _) => ParityClass::Eo,
            (_, 0) => ParityClass::Oe,
            _ => ParityClass::Oo,
        })
    }
}

impl fmt::Display for GridGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}xZ{}", self.m, self.n)
    }
}

fn torsion_of_cyclic(modulus: u32, i: u32) -> Vec<u32> {
    let step = modulus / modulus.gcd(&i);
    (0..modulus).step_by(step as usize).collect()
}

fn product(xs: &[u32], ys: &[u32]) -> Vec<GroupElement> {
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for &x in xs {
        for &y in ys {
            out.push(GroupElement { x, y });
        }
    }
    out.sort();
    out
}

/// Ring isomorphism `Z_{n1 n2} -> Z_{n1} x Z_{n2}` for coprime factors.
#[derive(Debug, Clone, Copy)]
pub struct CrtSplit {
    n1: u64,
    n2: u64,
    /// Inverse of `n1` modulo `n2`.
    n1_inv: u64,
}

impl CrtSplit {
    pub fn modulus(&self) -> u64 {
        self.n1 * self.n2
    }

    pub fn split(&self, y: u64) -> (u64, u64) {
        let y = y % self.modulus();
        (y % self.n1, y % self.n2)
    }

    pub fn join(&self, a: u64, b: u64) -> u64 {
        let (a, b) = (a % self.n1, b % self.n2);
        let diff = (b + self.n2 - a % self.n2) % self.n2;
        a + self.n1 * ((diff * self.n1_inv) % self.n2)
    }
}

pub fn crt_split(modulus: u64, n1: u64, n2: u64) -> Result<CrtSplit> {
    if n1 == 0 || n2 == 0 || n1 * n2 != modulus {
        return Err(Error::param(format!("{n1} * {n2} != {modulus}")));
    }
    let eg = (n1 as i64).extended_gcd(&(n2 as i64));
    if eg.gcd != 1 {
        return Err(Error::param(format!("factors {n1} and {n2} are not coprime")));
    }
    let n1_inv = eg.x.rem_euclid(n2 as i64) as u64;
    Ok(CrtSplit { n1, n2, n1_inv })
}
