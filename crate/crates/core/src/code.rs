//! Codewords, codes and their difference structure.
//!
//! A codeword is a 3-subset of `Z_m x Z_n`. For cross-correlation 1 a family
//! is a code exactly when every codeword's difference multiplicity is within
//! the auto-correlation limit and the difference supports are pairwise
//! disjoint. [`Code::verify_shift`] checks the correlation definition directly
//! and is the reference; [`Code::verify_diff`] is the fast path.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{GridGroup, GroupElement};

/// Three distinct elements of a grid group.
///
/// Construction through [`Codeword::new`] rejects repeated or out-of-range
/// elements. The stored order is the caller's; [`canonicalize`] gives the
/// translation-invariant representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword([GroupElement; 3]);

impl Codeword {
    pub fn new(g: &GridGroup, elems: [GroupElement; 3]) -> Result<Self> {
        if let Some(bad) = elems.iter().find(|&&a| !g.contains(a)) {
            return Err(Error::param(format!("{bad} is not an element of {g}")));
        }
        if elems[0] == elems[1] || elems[0] == elems[2] || elems[1] == elems[2] {
            return Err(Error::param(format!(
                "degenerate codeword {{{},{},{}}}",
                elems[0], elems[1], elems[2]
            )));
        }
        Ok(Codeword(elems))
    }

    /// Convenience constructor from integer pairs, reduced into `g`.
    pub fn from_pairs(g: &GridGroup, pairs: [(i64, i64); 3]) -> Result<Self> {
        Codeword::new(g, pairs.map(|(x, y)| g.elem(x, y)))
    }

    pub fn elements(&self) -> [GroupElement; 3] {
        self.0
    }

    pub fn contains(&self, a: GroupElement) -> bool {
        self.0.contains(&a)
    }

    pub fn translate(&self, g: &GridGroup, by: GroupElement) -> Codeword {
        Codeword(self.0.map(|a| g.add(a, by)))
    }

    /// Swap the coordinates of every element.
    pub fn transposed(&self) -> Codeword {
        Codeword(self.0.map(|a| GroupElement { x: a.y, y: a.x }))
    }

    /// `|X ∩ (other + shift)|`.
    pub fn overlap(&self, g: &GridGroup, other: &Codeword, shift: GroupElement) -> usize {
        let shifted = other.translate(g, shift);
        self.0.iter().filter(|&&a| shifted.contains(a)).count()
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// The representative of `X` that contains `(0,0)`, is sorted, and is
/// lexicographically least among the three translates taking a member to zero.
pub fn canonicalize(g: &GridGroup, x: &Codeword) -> Codeword {
    x.0.iter()
        .map(|&a| {
            let mut t = x.translate(g, g.negate(a)).0;
            t.sort();
            Codeword(t)
        })
        .min()
        .expect("three translates")
}

/// Refinement of the support-size type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subtype {
    /// Support is `Omega(2) \ {0}`, the Klein subgroup minus zero.
    T3_1,
    /// Cyclic order-4 generator with first coordinate of order 4.
    T3_2,
    /// Cyclic order-4 generator with first coordinate of order at most 2.
    T3_3,
    /// Type 4, `a` odd; `n` odd so `b` carries no parity.
    T4_1,
    /// Type 4, `a` even; `n` odd, or `m = 2 (mod 4)` with `b` even.
    T4_2,
    T4_1_1,
    T4_1_2,
    T4_2_1,
    T4_2_2,
    T4_2_3,
}

impl Subtype {
    pub fn as_str(self) -> &'static str {
        match self {
            Subtype::T3_1 => "3.1",
            Subtype::T3_2 => "3.2",
            Subtype::T3_3 => "3.3",
            Subtype::T4_1 => "4.1",
            Subtype::T4_2 => "4.2",
            Subtype::T4_1_1 => "4.1.1",
            Subtype::T4_1_2 => "4.1.2",
            Subtype::T4_2_1 => "4.2.1",
            Subtype::T4_2_2 => "4.2.2",
            Subtype::T4_2_3 => "4.2.3",
        }
    }
}

/// Support-size type of a codeword plus the parity refinement when the
/// residues involved are well defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeLabel {
    pub major: u8,
    pub minor: Option<Subtype>,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.minor {
            Some(s) => f.write_str(s.as_str()),
            None => write!(f, "{}", self.major),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceProfile {
    /// The six ordered differences `a - b`, `a != b`.
    pub delta: [GroupElement; 6],
    /// Distinct members of `delta`, sorted.
    pub support: Vec<GroupElement>,
    /// Largest multiplicity in `delta`.
    pub lambda_x: u32,
    pub type_label: TypeLabel,
}

fn differences(g: &GridGroup, x: &Codeword) -> [GroupElement; 6] {
    let [a, b, c] = x.0;
    [
        g.sub(b, a),
        g.sub(a, b),
        g.sub(c, a),
        g.sub(a, c),
        g.sub(c, b),
        g.sub(b, c),
    ]
}

pub fn difference_profile(g: &GridGroup, x: &Codeword) -> DifferenceProfile {
    let delta = differences(g, x);
    let mut support = delta.to_vec();
    support.sort();
    support.dedup();
    let lambda_x = delta
        .iter()
        .map(|d| delta.iter().filter(|&e| e == d).count() as u32)
        .max()
        .unwrap_or(0);
    let type_label = label_from_support(g, &support);
    DifferenceProfile { delta, support, lambda_x, type_label }
}

pub fn classify(g: &GridGroup, x: &Codeword) -> TypeLabel {
    difference_profile(g, x).type_label
}

fn cyclic_order(modulus: u32, a: u32) -> u32 {
    modulus / num_integer::gcd(modulus, a)
}

fn label_from_support(g: &GridGroup, support: &[GroupElement]) -> TypeLabel {
    let major = support.len() as u8;
    let minor = match major {
        3 => Some(type3_subtype(g, support)),
        4 => type4_subtype(g, support),
        _ => None,
    };
    TypeLabel { major, minor }
}

fn type3_subtype(g: &GridGroup, support: &[GroupElement]) -> Subtype {
    // A 3-element support is either Omega(2)\{0} or {±gen, 2gen} with gen of
    // order 4.
    match support.iter().find(|&&a| g.element_order(a) == 4) {
        None => Subtype::T3_1,
        Some(&gen) => {
            if cyclic_order(g.m(), gen.x) == 4 {
                Subtype::T3_2
            } else {
                Subtype::T3_3
            }
        }
    }
}

fn type4_subtype(g: &GridGroup, support: &[GroupElement]) -> Option<Subtype> {
    // Type-4 supports are {±gen, ±2gen}; any valid choice of gen gives the same
    // residues whenever the refinement is defined.
    let gen = support.iter().copied().find(|&a| {
        let mut s = vec![a, g.negate(a), g.scale(2, a), g.scale(-2, a)];
        s.sort();
        s.dedup();
        s == support
    })?;
    let (m_even, n_even, m_div4) = (g.m() % 2 == 0, g.n() % 2 == 0, g.m() % 4 == 0);
    if !m_even {
        return None;
    }
    let (a, b) = (gen.x, gen.y);
    Some(if a % 2 == 1 {
        match (n_even, b % 2) {
            (false, _) => Subtype::T4_1,
            (true, 1) => Subtype::T4_1_1,
            (true, _) => Subtype::T4_1_2,
        }
    } else {
        match (n_even, b % 2) {
            (true, 1) => Subtype::T4_2_3,
            (true, _) if m_div4 => {
                if a % 4 == 2 {
                    Subtype::T4_2_1
                } else {
                    Subtype::T4_2_2
                }
            }
            _ => Subtype::T4_2,
        }
    })
}

/// Codeword counts per type.
///
/// Type-4 codewords whose refinement is undefined for the group are counted in
/// `n4_unrefined` (plain 4.1 / 4.2 when `n` is odd or `m = 2 (mod 4)`, and any
/// Type 4 when `m` is odd).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TypeCensus {
    pub n2: usize,
    pub n3_1: usize,
    pub n3_2: usize,
    pub n3_3: usize,
    pub n4_1_1: usize,
    pub n4_1_2: usize,
    pub n4_2_1: usize,
    pub n4_2_2: usize,
    pub n4_2_3: usize,
    pub n4_unrefined: usize,
    pub n5: usize,
    pub n6: usize,
}

impl TypeCensus {
    fn record(&mut self, label: TypeLabel) {
        use Subtype::*;
        match (label.major, label.minor) {
            (2, _) => self.n2 += 1,
            (3, Some(T3_1)) => self.n3_1 += 1,
            (3, Some(T3_2)) => self.n3_2 += 1,
            (3, Some(T3_3)) => self.n3_3 += 1,
            (4, Some(T4_1_1)) => self.n4_1_1 += 1,
            (4, Some(T4_1_2)) => self.n4_1_2 += 1,
            (4, Some(T4_2_1)) => self.n4_2_1 += 1,
            (4, Some(T4_2_2)) => self.n4_2_2 += 1,
            (4, Some(T4_2_3)) => self.n4_2_3 += 1,
            (4, _) => self.n4_unrefined += 1,
            (5, _) => self.n5 += 1,
            (6, _) => self.n6 += 1,
            other => unreachable!("support size {other:?} is impossible for a 3-subset"),
        }
    }

    pub fn n3(&self) -> usize {
        self.n3_1 + self.n3_2 + self.n3_3
    }

    pub fn n4(&self) -> usize {
        self.n4_1_1 + self.n4_1_2 + self.n4_2_1 + self.n4_2_2 + self.n4_2_3 + self.n4_unrefined
    }

    pub fn total(&self) -> usize {
        self.n2 + self.n3() + self.n4() + self.n5 + self.n6
    }

    /// `2 N2 + 3 N3 + 4 N4 + 5 N5 + 6 N6`, the number of differences used.
    pub fn covered_differences(&self) -> usize {
        2 * self.n2 + 3 * self.n3() + 4 * self.n4() + 5 * self.n5 + 6 * self.n6
    }

    /// Non-zero entries as `(label, count)` pairs in a fixed order.
    pub fn entries(&self) -> Vec<(&'static str, usize)> {
        vec![
            ("N2", self.n2),
            ("N3_1", self.n3_1),
            ("N3_2", self.n3_2),
            ("N3_3", self.n3_3),
            ("N4_1_1", self.n4_1_1),
            ("N4_1_2", self.n4_1_2),
            ("N4_2_1", self.n4_2_1),
            ("N4_2_2", self.n4_2_2),
            ("N4_2_3", self.n4_2_3),
            ("N4_unrefined", self.n4_unrefined),
            ("N5", self.n5),
            ("N6", self.n6),
        ]
    }
}

/// A correlation violation with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    AutoCorrelation {
        codeword: usize,
        shift: GroupElement,
        overlap: usize,
        limit: u32,
    },
    CrossCorrelation {
        first: usize,
        second: usize,
        shift: GroupElement,
        overlap: usize,
        limit: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AutoCorrelation { codeword, shift, overlap, limit } => write!(
                f,
                "auto-correlation: codeword #{codeword} meets its shift by {shift} in {overlap} points (limit {limit})"
            ),
            Violation::CrossCorrelation { first, second, shift, overlap, limit } => write!(
                f,
                "cross-correlation: codeword #{first} meets codeword #{second} shifted by {shift} in {overlap} points (limit {limit})"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(v) => Some(v),
        }
    }

    fn into_result(self) -> Result<()> {
        match self {
            Verdict::Valid => Ok(()),
            Verdict::Invalid(v) => Err(Error::InvalidCode(v)),
        }
    }
}

/// Non-zero elements covered by no codeword's difference support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Leave {
    pub uncovered: Vec<GroupElement>,
}

/// A family of weight-3 codewords with its correlation parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    group: GridGroup,
    lambda_a: u32,
    lambda_c: u32,
    codewords: Vec<Codeword>,
}

impl Code {
    pub fn new(group: GridGroup, lambda_a: u32, lambda_c: u32, codewords: Vec<Codeword>) -> Result<Self> {
        if lambda_a == 0 || lambda_c == 0 {
            return Err(Error::param("correlation limits must be at least 1"));
        }
        for c in &codewords {
            Codeword::new(&group, c.0)?;
        }
        Ok(Code { group, lambda_a, lambda_c, codewords })
    }

    pub fn empty(group: GridGroup, lambda_a: u32) -> Self {
        Code { group, lambda_a, lambda_c: 1, codewords: Vec::new() }
    }

    pub fn group(&self) -> GridGroup {
        self.group
    }

    pub fn lambda_a(&self) -> u32 {
        self.lambda_a
    }

    pub fn lambda_c(&self) -> u32 {
        self.lambda_c
    }

    pub fn codewords(&self) -> &[Codeword] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    /// The same codewords read with a different auto-correlation limit.
    pub fn with_lambda_a(mut self, lambda_a: u32) -> Self {
        self.lambda_a = lambda_a;
        self
    }

    pub fn transposed(&self) -> Code {
        Code {
            group: self.group.transposed(),
            lambda_a: self.lambda_a,
            lambda_c: self.lambda_c,
            codewords: self.codewords.iter().map(Codeword::transposed).collect(),
        }
    }

    /// Codewords in canonical form, in the original order.
    pub fn canonical_codewords(&self) -> Vec<Codeword> {
        self.codewords.iter().map(|c| canonicalize(&self.group, c)).collect()
    }

    pub fn census(&self) -> TypeCensus {
        let mut census = TypeCensus::default();
        for c in &self.codewords {
            census.record(classify(&self.group, c));
        }
        census
    }

    /// Checks both correlation conditions from their definition.
    ///
    /// `|X ∩ (Y + s)|` can only exceed zero when `s = x - y` for some
    /// `x ∈ X`, `y ∈ Y`, so those nine shifts per pair are the ones evaluated.
    /// The first violation in codeword order is reported: auto-correlation
    /// failures before cross-correlation ones, pairs ordered by `(first, second)`.
    pub fn verify_shift(&self) -> Verdict {
        let g = &self.group;
        for (i, x) in self.codewords.iter().enumerate() {
            for &a in &x.0 {
                for &b in &x.0 {
                    if a == b {
                        continue;
                    }
                    let shift = g.sub(a, b);
                    let overlap = x.overlap(g, x, shift);
                    if overlap > self.lambda_a as usize {
                        return Verdict::Invalid(Violation::AutoCorrelation {
                            codeword: i,
                            shift,
                            overlap,
                            limit: self.lambda_a,
                        });
                    }
                }
            }
        }
        let lambda_c = self.lambda_c;
        let cross = (0..self.codewords.len()).into_par_iter().find_map_first(|i| {
            let x = &self.codewords[i];
            for (j, y) in self.codewords.iter().enumerate().skip(i + 1) {
                for &a in &x.0 {
                    for &b in &y.0 {
                        let shift = g.sub(a, b);
                        let overlap = x.overlap(g, y, shift);
                        if overlap > lambda_c as usize {
                            return Some(Violation::CrossCorrelation {
                                first: i,
                                second: j,
                                shift,
                                overlap,
                                limit: lambda_c,
                            });
                        }
                    }
                }
            }
            None
        });
        match cross {
            Some(v) => Verdict::Invalid(v),
            None => Verdict::Valid,
        }
    }

    /// Difference-method check: every `λ(X) <= λa` and all supports disjoint.
    /// Only meaningful for cross-correlation 1.
    pub fn verify_diff(&self) -> Result<Verdict> {
        if self.lambda_c != 1 {
            return Err(Error::param(format!(
                "difference verification needs lambda_c = 1, got {}",
                self.lambda_c
            )));
        }
        let g = &self.group;
        let profiles: Vec<DifferenceProfile> =
            self.codewords.iter().map(|c| difference_profile(g, c)).collect();
        for (i, p) in profiles.iter().enumerate() {
            if p.lambda_x > self.lambda_a {
                let shift = *p
                    .delta
                    .iter()
                    .find(|d| p.delta.iter().filter(|e| e == d).count() as u32 == p.lambda_x)
                    .expect("a difference of maximal multiplicity");
                return Ok(Verdict::Invalid(Violation::AutoCorrelation {
                    codeword: i,
                    shift,
                    overlap: p.lambda_x as usize,
                    limit: self.lambda_a,
                }));
            }
        }
        let mut owner: HashMap<GroupElement, usize> = HashMap::new();
        for (i, p) in profiles.iter().enumerate() {
            for &d in &p.support {
                if let Some(&j) = owner.get(&d) {
                    let shift = self.shared_difference_shift(j, i, d);
                    let (x, y) = (&self.codewords[j], &self.codewords[i]);
                    return Ok(Verdict::Invalid(Violation::CrossCorrelation {
                        first: j,
                        second: i,
                        shift,
                        overlap: x.overlap(g, y, shift),
                        limit: 1,
                    }));
                }
            }
            for &d in &p.support {
                owner.insert(d, i);
            }
        }
        Ok(Verdict::Valid)
    }

    /// A shift `s` with `|X_first ∩ (X_second + s)| >= 2`, given that `d` is a
    /// difference of both codewords.
    fn shared_difference_shift(&self, first: usize, second: usize, d: GroupElement) -> GroupElement {
        let g = &self.group;
        let pick = |c: &Codeword| {
            for &a in &c.0 {
                for &b in &c.0 {
                    if a != b && g.sub(a, b) == d {
                        return a;
                    }
                }
            }
            unreachable!("{d} is a difference of {c}")
        };
        g.sub(pick(&self.codewords[first]), pick(&self.codewords[second]))
    }

    /// Fails with the violation unless the code passes [`Code::verify_diff`].
    pub fn ensure_valid(&self) -> Result<()> {
        self.verify_diff()?.into_result()
    }

    pub fn leave(&self) -> Result<Leave> {
        self.ensure_valid()?;
        let g = &self.group;
        let mut covered = vec![false; g.order()];
        covered[0] = true;
        for c in &self.codewords {
            for d in difference_profile(g, c).support {
                covered[g.index(d)] = true;
            }
        }
        let uncovered = covered
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| g.from_index(i))
            .collect();
        Ok(Leave { uncovered })
    }

    /// `(s, t)` when the leave together with zero is the subgroup `S x T`.
    pub fn regularity(&self) -> Result<Option<(u32, u32)>> {
        let leave = self.leave()?;
        Ok(regularity_of_leave(&self.group, &leave))
    }
}

pub(crate) fn regularity_of_leave(g: &GridGroup, leave: &Leave) -> Option<(u32, u32)> {
    let mut with_zero = leave.uncovered.clone();
    with_zero.push(GroupElement::ZERO);
    with_zero.sort();
    let s = with_zero.iter().filter(|a| a.y == 0).count() as u32;
    let t = with_zero.iter().filter(|a| a.x == 0).count() as u32;
    if g.m() % s != 0 || g.n() % t != 0 {
        return None;
    }
    (g.subgroup(s, t).ok()? == with_zero).then_some((s, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(m: u32, n: u32) -> GridGroup {
        GridGroup::new(m, n).unwrap()
    }

    fn cw(g: &GridGroup, p: [(i64, i64); 3]) -> Codeword {
        Codeword::from_pairs(g, p).unwrap()
    }

    fn e(x: u32, y: u32) -> GroupElement {
        GroupElement { x, y }
    }

    #[test]
    fn degenerate_codewords_rejected() {
        let g = grp(6, 6);
        assert!(Codeword::from_pairs(&g, [(0, 0), (0, 0), (1, 1)]).is_err());
        assert!(Codeword::new(&g, [e(0, 0), e(6, 0), e(1, 1)]).is_err());
    }

    #[test]
    fn profile_examples() {
        let g = grp(6, 6);
        let p = difference_profile(&g, &cw(&g, [(0, 0), (0, 2), (0, 4)]));
        assert_eq!(p.support, vec![e(0, 2), e(0, 4)]);
        assert_eq!(p.lambda_x, 3);
        assert_eq!(p.type_label.major, 2);

        let p = difference_profile(&g, &cw(&g, [(0, 0), (1, 1), (2, 2)]));
        assert_eq!(p.support, vec![e(1, 1), e(2, 2), e(4, 4), e(5, 5)]);
        assert_eq!(p.lambda_x, 2);
        assert_eq!(p.type_label.to_string(), "4.1.1");

        let p = difference_profile(&g, &cw(&g, [(0, 0), (1, 2), (2, 1)]));
        assert_eq!(p.support.len(), 6);
        assert_eq!(p.lambda_x, 1);
        assert_eq!(p.type_label.to_string(), "6");
    }

    #[test]
    fn classify_examples() {
        let g = grp(6, 6);
        assert_eq!(classify(&g, &cw(&g, [(0, 0), (0, 3), (3, 0)])).to_string(), "3.1");
        let g = grp(4, 2);
        assert_eq!(classify(&g, &cw(&g, [(0, 0), (1, 0), (2, 0)])).to_string(), "3.2");
        let g = grp(2, 4);
        assert_eq!(classify(&g, &cw(&g, [(0, 0), (0, 1), (0, 2)])).to_string(), "3.3");
        assert_eq!(classify(&g, &cw(&g, [(0, 0), (1, 1), (0, 2)])).to_string(), "3.3");
    }

    #[test]
    fn subtypes_only_when_defined() {
        // m odd: no parity refinement.
        let g = grp(5, 4);
        assert_eq!(classify(&g, &cw(&g, [(0, 0), (1, 1), (2, 2)])).minor, None);
        // n odd, m even: stops at 4.1 / 4.2.
        let g = grp(8, 5);
        assert_eq!(classify(&g, &cw(&g, [(0, 0), (1, 1), (2, 2)])).to_string(), "4.1");
        assert_eq!(classify(&g, &cw(&g, [(0, 0), (2, 1), (4, 2)])).to_string(), "4.2");
        // m = 2 (mod 4): 4.2 with b even is not split further.
        let g = grp(10, 10);
        assert_eq!(classify(&g, &cw(&g, [(0, 0), (2, 2), (4, 4)])).to_string(), "4.2");
        let g = grp(12, 12);
        assert_eq!(classify(&g, &cw(&g, [(0, 0), (2, 2), (4, 4)])).to_string(), "4.2.1");
        assert_eq!(classify(&g, &cw(&g, [(0, 0), (4, 2), (8, 4)])).to_string(), "4.2.2");
        assert_eq!(classify(&g, &cw(&g, [(0, 0), (4, 1), (8, 2)])).to_string(), "4.2.3");
        assert_eq!(classify(&g, &cw(&g, [(0, 0), (1, 2), (2, 4)])).to_string(), "4.1.2");
    }

    #[test]
    fn canonical_form() {
        let g = grp(6, 6);
        let want = cw(&g, [(0, 0), (1, 1), (2, 2)]);
        assert_eq!(canonicalize(&g, &cw(&g, [(1, 1), (2, 2), (3, 3)])), want);
        assert_eq!(canonicalize(&g, &cw(&g, [(0, 0), (5, 5), (4, 4)])), want);
        assert_eq!(canonicalize(&g, &want), want);
    }

    #[test]
    fn overlapping_supports_fail_cross_check() {
        let g = grp(1, 9);
        let code = Code::new(
            g,
            2,
            1,
            vec![cw(&g, [(0, 0), (0, 1), (0, 2)]), cw(&g, [(0, 0), (0, 2), (0, 4)])],
        )
        .unwrap();
        let v = code.verify_shift();
        assert!(matches!(v, Verdict::Invalid(Violation::CrossCorrelation { first: 0, second: 1, .. })));
        let d = code.verify_diff().unwrap();
        match d {
            Verdict::Invalid(Violation::CrossCorrelation { shift, overlap, .. }) => {
                assert!(overlap >= 2);
                assert!(code.codewords()[0].overlap(&g, &code.codewords()[1], shift) >= 2);
            }
            other => panic!("expected a cross violation, got {other:?}"),
        }
    }

    #[test]
    fn diff_rejects_lambda_c_above_one() {
        let g = grp(3, 3);
        let code = Code::new(g, 2, 2, vec![]).unwrap();
        assert!(code.verify_diff().is_err());
        assert!(code.verify_shift().is_valid());
    }

    #[test]
    fn empty_code_leave() {
        let g = grp(2, 2);
        let code = Code::empty(g, 2);
        assert!(code.verify_diff().unwrap().is_valid());
        assert_eq!(code.leave().unwrap().uncovered, vec![e(0, 1), e(1, 0), e(1, 1)]);
        assert_eq!(code.regularity().unwrap(), Some((2, 2)));
    }

    #[test]
    fn leave_of_invalid_code_is_an_error() {
        let g = grp(1, 9);
        let x = cw(&g, [(0, 0), (0, 1), (0, 2)]);
        let code = Code::new(g, 2, 1, vec![x, x]).unwrap();
        assert!(code.leave().is_err());
    }

    #[test]
    fn duplicated_codeword_is_a_cross_violation() {
        let g = grp(6, 6);
        let x = cw(&g, [(0, 0), (1, 2), (2, 1)]);
        let code = Code::new(g, 2, 1, vec![x, x]).unwrap();
        match code.verify_shift() {
            Verdict::Invalid(Violation::CrossCorrelation { overlap, shift, .. }) => {
                assert_eq!(overlap, 3);
                assert!(shift.is_zero());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn support_is_translation_invariant() {
        let g = grp(6, 4);
        let x = cw(&g, [(0, 0), (1, 3), (4, 1)]);
        let base = difference_profile(&g, &x).support;
        for s in g.elements() {
            assert_eq!(difference_profile(&g, &x.translate(&g, s)).support, base);
        }
    }
}
