//! Exact search for maximum codes and for codes with a prescribed regular leave.
//!
//! A code with cross-correlation 1 is a packing of pairwise disjoint
//! difference supports, so the search is set packing over candidate supports.
//! Supports are closed under negation; the engine works on the classes
//! `{d, -d}` and weights each class by its number of elements.

mod dlx;

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds;
use crate::code::{canonicalize, difference_profile, Code, Codeword};
use crate::error::{Error, Result};
use crate::group::{GridGroup, GroupElement};

use dlx::{Control, CoverOutcome, PackingProblem, RootBranch};


/// A canonical codeword admissible for the search with its difference support
/// as a bit vector over the non-zero elements (row-major, `(0,0)` skipped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub codeword: Codeword,
    pub support: Vec<u64>,
    pub lambda_x: u32,
}

impl Candidate {
    pub fn support_size(&self) -> usize {
        self.support.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn disjoint(&self, other: &Candidate) -> bool {
        self.support.iter().zip(&other.support).all(|(a, b)| a & b == 0)
    }

    fn support_bits(&self) -> impl Iterator<Item = usize> + '_ {
        self.support.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

fn check_lambda_a(lambda_a: u32) -> Result<()> {
    if (1..=3).contains(&lambda_a) {
        Ok(())
    } else {
        Err(Error::param(format!("search supports auto-correlation 1..=3, got {lambda_a}")))
    }
}

/// One candidate per distinct support with `λ(X) <= λa` avoiding `forbidden`,
/// represented by its least canonical codeword, in codeword order.
pub fn enumerate_candidates(
    g: &GridGroup,
    lambda_a: u32,
    forbidden: &[GroupElement],
) -> Result<Vec<Candidate>> {
    check_lambda_a(lambda_a)?;
    let order = g.order();
    let words = (order.saturating_sub(1)).div_ceil(64).max(1);
    let mut blocked = vec![false; order];
    for &f in forbidden {
        blocked[g.index(f)] = true;
    }
    let mut by_support: HashMap<Vec<u64>, Candidate> = HashMap::new();
    for i in 1..order {
        for j in i + 1..order {
            let x = Codeword::new(g, [GroupElement::ZERO, g.from_index(i), g.from_index(j)])?;
            let p = difference_profile(g, &x);
            if p.lambda_x > lambda_a || p.support.iter().any(|&d| blocked[g.index(d)]) {
                continue;
            }
            let mut support = vec![0u64; words];
            for d in &p.support {
                let bit = g.index(*d) - 1;
                support[bit / 64] |= 1 << (bit % 64);
            }
            let codeword = canonicalize(g, &x);
            by_support
                .entry(support.clone())
                .and_modify(|c| {
                    if codeword < c.codeword {
                        c.codeword = codeword;
                    }
                })
                .or_insert(Candidate { codeword, support, lambda_x: p.lambda_x });
        }
    }
    let mut out: Vec<Candidate> = by_support.into_values().collect();
    out.sort_by_key(|a| a.codeword);
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub timeout: Option<Duration>,
    /// Only look for codes at least this large; if none exists the search
    /// falls back to an unrestricted run.
    pub lower_bound_hint: Option<usize>,
    /// Leave exactly the subgroup `S x T` (minus zero) uncovered.
    pub prescribed_leave: Option<(u32, u32)>,
    /// Stop as soon as the closed-form upper bound is reached.
    pub use_theorem_bound: bool,
    /// Worker threads for the root split; 0 means all available.
    pub workers: usize,
    pub seed: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            timeout: None,
            lower_bound_hint: None,
            prescribed_leave: None,
            use_theorem_bound: true,
            workers: 0,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub best_size: usize,
    pub witness: Code,
    pub proven_optimal: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Column layout of the packing problem: one column per negation class of
/// admissible elements.
struct Layout {
    col_weight: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

fn layout(g: &GridGroup, cands: &[Candidate], forbidden: &[GroupElement]) -> Layout {
    let order = g.order();
    let mut class_of = vec![usize::MAX; order];
    let mut col_weight = Vec::new();
    let blocked: Vec<usize> = forbidden.iter().map(|&f| g.index(f)).collect();
    for i in 1..order {
        if class_of[i] != usize::MAX || blocked.contains(&i) {
            continue;
        }
        let neg = g.index(g.negate(g.from_index(i)));
        class_of[i] = col_weight.len();
        class_of[neg] = col_weight.len();
        col_weight.push(if neg == i { 1 } else { 2 });
    }
    let rows = cands
        .iter()
        .map(|c| {
            let mut cols: Vec<usize> = c.support_bits().map(|b| class_of[b + 1]).collect();
            cols.sort();
            cols.dedup();
            cols
        })
        .collect();
    Layout { col_weight, rows }
}

fn closed_form_ceiling(m: u32, n: u32, lambda_a: u32) -> Result<usize> {
    let (m, n) = (m as u64, n as u64);
    Ok(match lambda_a {
        1 => bounds::theta_lambda1(m, n)?,
        _ => bounds::theta_best_upper(m, n, lambda_a)?,
    } as usize)
}

fn witness(g: GridGroup, lambda_a: u32, cands: &[Candidate], rows: &[usize]) -> Result<Code> {
    let mut words: Vec<Codeword> = rows.iter().map(|&r| cands[r].codeword).collect();
    words.sort();
    let code = Code::new(g, lambda_a, 1, words)?;
    code.ensure_valid()?;
    Ok(code)
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::param(format!("cannot start search workers: {e}")))
}

/// Maximum code for the given parameters with cross-correlation 1.
///
/// The result is proven optimal unless the timeout fired. With a prescribed
/// leave this is [`search_regular`].
pub fn max_code(m: u32, n: u32, lambda_a: u32, opts: &SearchOptions) -> Result<SearchResult> {
    if let Some((s, t)) = opts.prescribed_leave {
        return search_regular(m, n, lambda_a, s, t, opts);
    }
    check_lambda_a(lambda_a)?;
    let g = GridGroup::new(m, n)?;
    let start = Instant::now();
    let cands = enumerate_candidates(&g, lambda_a, &[])?;
    let lay = layout(&g, &cands, &[]);
    let ceiling = if opts.use_theorem_bound {
        closed_form_ceiling(m, n, lambda_a)?
    } else {
        usize::MAX
    };
    let ctl = Control::new(opts.timeout.map(|t| start + t));

    let run = |floor: usize| -> Result<Vec<usize>> {
        let best = AtomicUsize::new(floor);
        let problem = PackingProblem { col_weight: &lay.col_weight, rows: &lay.rows, ceiling, best: &best };
        let (root, branches) = problem.root();
        let explore = |b: &RootBranch| problem.run_branch(root.clone(), b, &ctl).best;
        let found: Vec<Vec<usize>> = if opts.workers == 1 {
            branches.iter().map(explore).collect()
        } else {
            pool(opts.workers)?.install(|| branches.par_iter().map(explore).collect())
        };
        // Largest wins; among equal sizes the least sorted codeword list.
        let key = |rows: &Vec<usize>| {
            let mut w: Vec<Codeword> = rows.iter().map(|&r| cands[r].codeword).collect();
            w.sort();
            w
        };
        Ok(found
            .into_iter()
            .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| key(b).cmp(&key(a))))
            .unwrap_or_default())
    };

    let mut rows = match opts.lower_bound_hint {
        Some(h) if h > 0 => run(h - 1)?,
        _ => run(0)?,
    };
    if rows.is_empty() && opts.lower_bound_hint.is_some_and(|h| h > 1) && !ctl.timed_out.load(Ordering::Relaxed) {
        rows = run(0)?;
    }
    let timed_out = ctl.timed_out.load(Ordering::Relaxed);
    let code = witness(g, lambda_a, &cands, &rows)?;
    Ok(SearchResult {
        best_size: code.len(),
        witness: code,
        proven_optimal: !timed_out,
        nodes_explored: ctl.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    })
}

/// Code whose leave together with zero is exactly the subgroup `S x T`.
///
/// Randomized restarts with growing node limits; an attempt that exhausts its
/// tree proves that no such code exists.
pub fn search_regular(
    m: u32,
    n: u32,
    lambda_a: u32,
    s: u32,
    t: u32,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    check_lambda_a(lambda_a)?;
    let g = GridGroup::new(m, n)?;
    let start = Instant::now();
    let leave: Vec<GroupElement> = g.subgroup(s, t)?.into_iter().filter(|a| !a.is_zero()).collect();
    let cands = enumerate_candidates(&g, lambda_a, &leave)?;
    let lay = layout(&g, &cands, &leave);
    match cover_with_restarts(&lay.col_weight, &lay.rows, opts.seed, opts.timeout.map(|d| start + d))? {
        Some((rows, nodes)) => {
            let code = witness(g, lambda_a, &cands, &rows)?;
            Ok(SearchResult {
                best_size: code.len(),
                witness: code,
                proven_optimal: true,
                nodes_explored: nodes,
                elapsed: start.elapsed(),
            })
        }
        None => Err(Error::NoSuchDesign(format!(
            "no ({s},{t})-regular code on Z_{m} x Z_{n} with auto-correlation {lambda_a}"
        ))),
    }
}

/// Exact cover by randomized restarts with a node limit growing by 10% per
/// attempt. `None` means an attempt exhausted its tree, so no cover exists.
pub(crate) fn cover_with_restarts(
    col_weight: &[usize],
    rows: &[Vec<usize>],
    seed: u64,
    deadline: Option<Instant>,
) -> Result<Option<(Vec<usize>, u64)>> {
    let ctl = Control::new(deadline);
    let mut limit = 1000u64;
    let mut attempt = 0u64;
    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        match dlx::exact_cover(col_weight, rows, &mut rng, limit, &ctl) {
            CoverOutcome::Found(rows) => return Ok(Some((rows, ctl.nodes.load(Ordering::Relaxed)))),
            CoverOutcome::Exhausted => return Ok(None),
            CoverOutcome::Limit => {
                if ctl.timed_out.load(Ordering::Relaxed) {
                    return Err(Error::Timeout { nodes: ctl.nodes.load(Ordering::Relaxed) });
                }
                attempt += 1;
                limit += limit / 10;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(m: u32, n: u32, la: u32) -> SearchResult {
        let r = max_code(m, n, la, &SearchOptions { workers: 1, ..Default::default() }).unwrap();
        assert!(r.proven_optimal);
        assert_eq!(r.best_size, r.witness.len());
        r
    }

    #[test]
    fn candidates_examples() {
        let g = GridGroup::new(2, 2).unwrap();
        let c = enumerate_candidates(&g, 2, &[]).unwrap();
        assert!(!c.is_empty());
        assert!(c.iter().all(|c| c.support_size() == 3));
        assert_eq!(c.len(), 1);

        let g = GridGroup::new(3, 3).unwrap();
        assert!(enumerate_candidates(&g, 2, &[]).unwrap().iter().all(|c| c.support_size() > 2));
        let c3 = enumerate_candidates(&g, 3, &[]).unwrap();
        assert_eq!(c3.iter().filter(|c| c.support_size() == 2).count(), 4);
    }

    #[test]
    fn candidate_supports_match_profiles() {
        let g = GridGroup::new(4, 6).unwrap();
        for c in enumerate_candidates(&g, 3, &[]).unwrap() {
            let p = difference_profile(&g, &c.codeword);
            assert_eq!(p.support.len(), c.support_size());
            assert_eq!(p.lambda_x, c.lambda_x);
        }
    }

    #[test]
    fn forbidden_elements_are_avoided() {
        let g = GridGroup::new(3, 5).unwrap();
        let leave: Vec<_> = g.subgroup(3, 1).unwrap().into_iter().filter(|a| !a.is_zero()).collect();
        for c in enumerate_candidates(&g, 1, &leave).unwrap() {
            let p = difference_profile(&g, &c.codeword);
            assert!(p.support.iter().all(|d| !leave.contains(d)));
        }
    }

    #[test]
    fn max_code_examples() {
        assert_eq!(exact(2, 2, 2).best_size, 1);
        assert_eq!(exact(3, 3, 3).best_size, 4);
        assert_eq!(exact(2, 6, 3).best_size, 3);
        assert_eq!(exact(4, 2, 2).best_size, 1);
    }

    #[test]
    fn regular_examples() {
        let opts = SearchOptions::default();
        let r = search_regular(5, 5, 1, 1, 1, &opts).unwrap();
        assert_eq!(r.best_size, 4);
        assert!(r.witness.census().n6 == 4);
        assert_eq!(r.witness.regularity().unwrap(), Some((1, 1)));

        let r = search_regular(9, 9, 1, 3, 3, &opts).unwrap();
        assert_eq!(r.best_size, 12);
        assert_eq!(r.witness.regularity().unwrap(), Some((3, 3)));

        let r = search_regular(3, 3, 1, 3, 3, &opts).unwrap();
        assert!(r.witness.is_empty());
    }

    #[test]
    fn regular_infeasible() {
        let err = search_regular(1, 9, 1, 1, 1, &SearchOptions::default()).unwrap_err();
        assert!(matches!(err, Error::NoSuchDesign(_)));
    }

    #[test]
    fn single_worker_runs_are_deterministic() {
        let a = exact(4, 6, 2).witness;
        let b = exact(4, 6, 2).witness;
        assert_eq!(a, b);
    }

    /// Memoized cover-or-leave recursion over the set of decided elements.
    fn naive_max(g: &GridGroup, la: u32) -> usize {
        let order = g.order();
        let mut sets: Vec<u64> = Vec::new();
        for i in 1..order {
            for j in i + 1..order {
                let x = Codeword::new(g, [GroupElement::ZERO, g.from_index(i), g.from_index(j)]).unwrap();
                let p = difference_profile(g, &x);
                if p.lambda_x <= la {
                    sets.push(p.support.iter().fold(0u64, |acc, d| acc | 1 << g.index(*d)));
                }
            }
        }
        sets.sort();
        sets.dedup();
        let full: u64 = ((1u128 << order) - 2) as u64;
        fn go(mask: u64, full: u64, sets: &[u64], memo: &mut HashMap<u64, usize>) -> usize {
            if mask == full {
                return 0;
            }
            if let Some(&v) = memo.get(&mask) {
                return v;
            }
            let e = (!mask & full).trailing_zeros();
            let mut best = go(mask | 1 << e, full, sets, memo);
            for &s in sets {
                if s >> e & 1 == 1 && s & mask == 0 {
                    best = best.max(1 + go(mask | s, full, sets, memo));
                }
            }
            memo.insert(mask, best);
            best
        }
        go(0, full, &sets, &mut HashMap::new())
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        for m in 1..=36u32 {
            for n in 1..=36 / m {
                if m * n < 3 {
                    continue;
                }
                let g = GridGroup::new(m, n).unwrap();
                for la in 1..=3 {
                    let want = naive_max(&g, la);
                    let got = max_code(m, n, la, &SearchOptions { use_theorem_bound: false, ..Default::default() })
                        .unwrap();
                    assert_eq!(got.best_size, want, "({m},{n}) la={la}");
                    assert!(got.best_size <= closed_form_ceiling(m, n, la).unwrap(), "({m},{n}) la={la}");
                }
            }
        }
    }
}
