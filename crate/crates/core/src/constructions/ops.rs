//! Recursive operations on codes: embedding, filling, inflation, doubling.

use crate::code::{canonicalize, Code, Codeword};
use crate::error::{Error, Result};
use crate::group::{crt_split, GridGroup, GroupElement, ParityClass};

use super::cdm::cdm;

use std::cell::RefCell;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Fill,
    Inflate,
    Double,
}

/// Group, size and regularity of a code passing through an operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub m: u32,
    pub n: u32,
    pub size: usize,
    pub lambda_a: u32,
    pub regularity: Option<(u32, u32)>,
    pub valid: bool,
}

impl Shape {
    fn of(code: &Code) -> Self {
        let g = code.group();
        Shape {
            m: g.m(),
            n: g.n(),
            size: code.len(),
            lambda_a: code.lambda_a(),
            regularity: code.regularity().ok().flatten(),
            valid: code.verify_diff().is_ok_and(|v| v.is_valid()),
        }
    }
}

/// One application of [`fill`], [`inflate`] or [`double`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub kind: OpKind,
    pub inputs: Vec<Shape>,
    /// The inflation factor, when there is one.
    pub factor: Option<u64>,
    pub output: Shape,
}

thread_local! {
    static TRACE: RefCell<Option<Vec<Step>>> = const { RefCell::new(None) };
}

fn note(kind: OpKind, inputs: &[&Code], factor: Option<u64>, output: &Code) {
    TRACE.with(|t| {
        if let Some(steps) = t.borrow_mut().as_mut() {
            steps.push(Step {
                kind,
                inputs: inputs.iter().map(|c| Shape::of(c)).collect(),
                factor,
                output: Shape::of(output),
            });
        }
    });
}

/// Run `f` and collect every operation it applies on this thread.
pub fn traced<R>(f: impl FnOnce() -> R) -> (R, Vec<Step>) {
    let outer = TRACE.with(|t| t.borrow_mut().replace(Vec::new()));
    let r = f();
    let steps = TRACE.with(|t| std::mem::replace(&mut *t.borrow_mut(), outer)).unwrap_or_default();
    (r, steps)
}

/// Re-read a code on `Z_1 x Z_(mn)` over `Z_m x Z_n` through the CRT
/// isomorphism; needs `gcd(m, n) = 1`.
pub fn embed_cyclic(code: &Code, m: u32, n: u32) -> Result<Code> {
    let src = code.group();
    if src.m() != 1 || src.n() as u64 != m as u64 * n as u64 {
        return Err(Error::param(format!("expected a code on Z_1 x Z_{}, got {src}", m * n)));
    }
    let split = crt_split(src.n() as u64, m as u64, n as u64)?;
    let g = GridGroup::new(m, n)?;
    let words = code
        .codewords()
        .iter()
        .map(|c| {
            let e = c.elements().map(|a| {
                let (x, y) = split.split(a.y as u64);
                GroupElement { x: x as u32, y: y as u32 }
            });
            Codeword::new(&g, e)
        })
        .collect::<Result<Vec<_>>>()?;
    Code::new(g, code.lambda_a(), code.lambda_c(), words)
}

/// Add the codewords of `inner`, scaled into the subgroup left by `outer`.
///
/// `outer` must be `(s, t)`-regular where `inner` lives on `Z_s x Z_t`. The
/// result's leave is the embedded leave of `inner`.
pub fn fill(outer: &Code, inner: &Code) -> Result<Code> {
    let (go, gi) = (outer.group(), inner.group());
    if outer.lambda_c() != 1 || inner.lambda_c() != 1 {
        return Err(Error::param("filling needs cross-correlation 1 on both codes"));
    }
    if outer.lambda_a() != inner.lambda_a() {
        return Err(Error::param(format!(
            "filling needs equal auto-correlation, got {} and {}",
            outer.lambda_a(),
            inner.lambda_a()
        )));
    }
    let reg = outer.regularity()?;
    if reg != Some((gi.m(), gi.n())) {
        return Err(Error::param(format!("outer code has regularity {reg:?}, inner code lives on {gi}")));
    }
    inner.ensure_valid()?;
    let (sx, sy) = ((go.m() / gi.m()) as i64, (go.n() / gi.n()) as i64);
    let mut words = outer.codewords().to_vec();
    for c in inner.codewords() {
        let e = c.elements().map(|a| go.elem(a.x as i64 * sx, a.y as i64 * sy));
        words.push(Codeword::new(&go, e)?);
    }
    let out = Code::new(go, outer.lambda_a(), 1, words)?;
    out.ensure_valid()?;
    note(OpKind::Fill, &[outer, inner], None, &out);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Rows,
    Cols,
}

/// Multiply one modulus by an odd `v` using the difference matrix with
/// columns `(0, i, 2i)`.
///
/// An `(s, t)`-regular code on `(m, n)` with auto-correlation 1 becomes
/// `(sv, t)`-regular on `(mv, n)` for [`Axis::Rows`], and analogously for
/// columns. The size grows by the factor `v`.
pub fn inflate(base: &Code, v: u64, axis: Axis) -> Result<Code> {
    if base.lambda_a() != 1 || base.lambda_c() != 1 {
        return Err(Error::param("inflation needs auto- and cross-correlation 1"));
    }
    let dm = cdm(v)?;
    let (s, t) = base
        .regularity()?
        .ok_or_else(|| Error::param("inflation needs a regular base code"))?;
    let gb = base.group();
    let v32 = v as u32;
    let g = match axis {
        Axis::Rows => GridGroup::new(gb.m() * v32, gb.n())?,
        Axis::Cols => GridGroup::new(gb.m(), gb.n() * v32)?,
    };
    let mut words = Vec::with_capacity(base.len() * v as usize);
    for c in base.codewords() {
        let e = c.elements();
        for col in 0..v as usize {
            let d = dm.column(col);
            let lifted: [GroupElement; 3] = std::array::from_fn(|i| match axis {
                Axis::Rows => g.elem(e[i].x as i64 + gb.m() as i64 * d[i] as i64, e[i].y as i64),
                Axis::Cols => g.elem(e[i].x as i64, e[i].y as i64 + gb.n() as i64 * d[i] as i64),
            });
            words.push(Codeword::new(&g, lifted)?);
        }
    }
    let out = Code::new(g, 1, 1, words)?;
    let want = match axis {
        Axis::Rows => (s * v32, t),
        Axis::Cols => (s, t * v32),
    };
    if out.regularity()? != Some(want) {
        return Err(Error::param(format!("inflated code is not {want:?}-regular")));
    }
    note(OpKind::Inflate, &[base], Some(v), &out);
    Ok(out)
}

/// Five codewords with auto-correlation 2 on `Z_2m x Z_2n` per codeword of a
/// code with auto-correlation 1 on `Z_m x Z_n`, for odd `m` and `n`.
pub fn double(base: &Code) -> Result<Code> {
    let gb = base.group();
    if gb.m() % 2 == 0 || gb.n() % 2 == 0 {
        return Err(Error::param(format!(
            "doubling needs both moduli = 2 (mod 4) after doubling, base is {gb}"
        )));
    }
    if base.lambda_a() != 1 || base.lambda_c() != 1 {
        return Err(Error::param("doubling needs a base code with auto- and cross-correlation 1"));
    }
    base.ensure_valid()?;
    let g = GridGroup::new(2 * gb.m(), 2 * gb.n())?;
    let mut words = Vec::with_capacity(5 * base.len());
    let z = GroupElement::ZERO;
    for c in base.codewords() {
        let [_, p1, p2] = canonicalize(&gb, c).elements();
        let d12 = gb.sub(p2, p1);
        let a1 = g.coset_member(p1.x, p1.y, ParityClass::Oo)?;
        let b1 = g.coset_member(p1.x, p1.y, ParityClass::Eo)?;
        let b3 = g.coset_member(p1.x, p1.y, ParityClass::Oe)?;
        let a2 = g.coset_member(p2.x, p2.y, ParityClass::Eo)?;
        let b2 = g.coset_member(p2.x, p2.y, ParityClass::Oe)?;
        let b4 = g.coset_member(p2.x, p2.y, ParityClass::Oo)?;
        let a3 = g.coset_member(d12.x, d12.y, ParityClass::Oe)?;
        for a in [a1, a2, a3] {
            words.push(Codeword::new(&g, [z, a, g.scale(2, a)])?);
        }
        words.push(Codeword::new(&g, [z, b1, b2])?);
        words.push(Codeword::new(&g, [z, b3, b4])?);
    }
    let out = Code::new(g, 2, 1, words)?;
    out.ensure_valid()?;
    note(OpKind::Double, &[base], None, &out);
    Ok(out)
}

/// Leave of a doubled code predicted from the base leave: the non-even
/// members of every coset over the base leave and zero, plus the doubles of
/// the base leave.
pub fn doubled_leave(base_group: &GridGroup, base_leave: &[GroupElement]) -> Result<Vec<GroupElement>> {
    let g = GridGroup::new(2 * base_group.m(), 2 * base_group.n())?;
    let mut out = Vec::new();
    for &p in base_leave.iter().chain(std::iter::once(&GroupElement::ZERO)) {
        for a in g.coset_d(p.x, p.y)? {
            if g.parity(a)? != ParityClass::Ee {
                out.push(a);
            }
        }
    }
    for &p in base_leave {
        out.push(g.elem(2 * p.x as i64, 2 * p.y as i64));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::csts::cyclic_sts;

    fn code(m: u32, n: u32, la: u32, words: &[[(i64, i64); 3]]) -> Code {
        let g = GridGroup::new(m, n).unwrap();
        let w = words.iter().map(|p| Codeword::from_pairs(&g, *p).unwrap()).collect();
        Code::new(g, la, 1, w).unwrap()
    }

    #[test]
    fn crt_embedding() {
        let c = embed_cyclic(&cyclic_sts(15).unwrap().to_code().unwrap(), 5, 3).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.regularity().unwrap(), Some((1, 3)));
        assert!(embed_cyclic(&cyclic_sts(15).unwrap().to_code().unwrap(), 15, 1).is_ok());
    }

    #[test]
    fn inflate_examples() {
        let base = cyclic_sts(7).unwrap().to_code().unwrap();
        let c = inflate(&base, 5, Axis::Rows).unwrap();
        assert_eq!(c.group(), GridGroup::new(5, 7).unwrap());
        assert_eq!(c.len(), 5);
        assert_eq!(c.regularity().unwrap(), Some((5, 1)));

        let nine = code(9, 3, 1, &[[(0, 0), (1, 0), (2, 1)], [(0, 0), (1, 2), (5, 0)], [(0, 0), (2, 0), (4, 2)]]);
        let c = inflate(&nine, 5, Axis::Cols).unwrap();
        assert_eq!(c.group(), GridGroup::new(9, 15).unwrap());
        assert_eq!(c.regularity().unwrap(), Some((3, 15)));

        assert_eq!(inflate(&nine, 1, Axis::Rows).unwrap(), nine);
        assert!(inflate(&nine, 4, Axis::Rows).is_err());
    }

    #[test]
    fn double_examples() {
        let base = code(1, 7, 1, &[[(0, 0), (0, 1), (0, 3)]]);
        let d = double(&base).unwrap();
        assert_eq!(d.group(), GridGroup::new(2, 14).unwrap());
        assert_eq!(d.len(), 5);
        assert_eq!(d.regularity().unwrap(), Some((2, 2)));

        let empty = Code::empty(GridGroup::new(3, 3).unwrap(), 1);
        let d = double(&empty).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.regularity().unwrap(), Some((6, 6)));
    }

    #[test]
    fn doubling_leave_law() {
        let base = embed_cyclic(&cyclic_sts(15).unwrap().to_code().unwrap(), 5, 3).unwrap();
        let d = double(&base).unwrap();
        let want = doubled_leave(&base.group(), &base.leave().unwrap().uncovered).unwrap();
        assert_eq!(d.leave().unwrap().uncovered, want);
        assert_eq!(d.regularity().unwrap(), Some((2, 6)));
    }

    #[test]
    fn tracing_records_steps() {
        let base = code(1, 7, 1, &[[(0, 0), (0, 1), (0, 3)]]);
        let (out, steps) = traced(|| double(&base).unwrap());
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].kind, OpKind::Double);
        assert_eq!(steps[0].output.size, out.len());
        let (_, none) = traced(|| ());
        assert!(none.is_empty());
        double(&base).unwrap();
    }

    #[test]
    fn fill_examples() {
        let outer = code(2, 6, 2, &[[(0, 0), (0, 1), (1, 2)], [(0, 0), (0, 3), (1, 0)]]);
        let inner = code(1, 3, 2, &[]);
        let f = fill(&outer, &inner).unwrap();
        assert_eq!(f, outer);
        let inner3 = code(1, 3, 3, &[[(0, 0), (0, 1), (0, 2)]]);
        let f = fill(&outer.clone().with_lambda_a(3), &inner3).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.leave().unwrap().uncovered.is_empty());
        assert!(fill(&outer, &code(3, 1, 2, &[])).is_err());
        assert!(fill(&outer, &inner3).is_err());
    }
}
