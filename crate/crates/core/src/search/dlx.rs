//! Dancing-links engine for exact cover and maximum packing.
//!
//! Columns carry a weight (how many group elements they stand for) so the
//! packing bound can count uncovered elements rather than columns.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const ROOT: usize = 0;
const MAX_WEIGHT: usize = 8;

/// Shared search limits and progress counters.
pub(crate) struct Control {
    pub deadline: Option<Instant>,
    pub nodes: AtomicU64,
    pub stop: AtomicBool,
    pub timed_out: AtomicBool,
}

impl Control {
    pub fn new(deadline: Option<Instant>) -> Self {
        Control {
            deadline,
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            timed_out: AtomicBool::new(false),
        }
    }

    fn tick(&self, local: &mut u64) -> bool {
        *local += 1;
        if *local & 0x3ff == 0 {
            self.nodes.fetch_add(0x400, Ordering::Relaxed);
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out.store(true, Ordering::Relaxed);
                    self.stop.store(true, Ordering::Relaxed);
                }
            }
        }
        !self.stop.load(Ordering::Relaxed)
    }

    fn flush(&self, local: u64) {
        self.nodes.fetch_add(local & 0x3ff, Ordering::Relaxed);
    }
}

#[derive(Clone)]
pub(crate) struct Dlx {
    l: Vec<usize>,
    r: Vec<usize>,
    u: Vec<usize>,
    d: Vec<usize>,
    col: Vec<usize>,
    row: Vec<usize>,
    size: Vec<usize>,
    col_weight: Vec<usize>,
    row_weight: Vec<usize>,
    live_by_weight: [usize; MAX_WEIGHT + 1],
    uncovered: usize,
    chosen: Vec<usize>,
}

impl Dlx {
    /// `rows[i]` lists the columns of row `i`; rows are linked in `order`.
    pub fn new(col_weight: &[usize], rows: &[Vec<usize>], order: &[usize]) -> Self {
        let nc = col_weight.len();
        let mut x = Dlx {
            l: (0..=nc).map(|i| if i == 0 { nc } else { i - 1 }).collect(),
            r: (0..=nc).map(|i| if i == nc { 0 } else { i + 1 }).collect(),
            u: (0..=nc).collect(),
            d: (0..=nc).collect(),
            col: (0..=nc).collect(),
            row: vec![usize::MAX; nc + 1],
            size: vec![0; nc + 1],
            col_weight: std::iter::once(0).chain(col_weight.iter().copied()).collect(),
            row_weight: rows.iter().map(|r| r.iter().map(|&c| col_weight[c]).sum()).collect(),
            live_by_weight: [0; MAX_WEIGHT + 1],
            uncovered: col_weight.iter().sum(),
            chosen: Vec::new(),
        };
        for &ri in order {
            let first = x.l.len();
            for (k, &c) in rows[ri].iter().enumerate() {
                let h = c + 1;
                let node = first + k;
                x.col.push(h);
                x.row.push(ri);
                x.u.push(x.u[h]);
                x.d.push(h);
                let up = x.u[h];
                x.d[up] = node;
                x.u[h] = node;
                x.size[h] += 1;
                x.l.push(if k == 0 { first + rows[ri].len() - 1 } else { node - 1 });
                x.r.push(if k + 1 == rows[ri].len() { first } else { node + 1 });
            }
            x.live_by_weight[x.row_weight[ri].min(MAX_WEIGHT)] += 1;
        }
        x
    }

    fn cover(&mut self, h: usize) {
        let (l, r) = (self.l[h], self.r[h]);
        self.r[l] = r;
        self.l[r] = l;
        self.uncovered -= self.col_weight[h];
        let mut i = self.d[h];
        while i != h {
            self.live_by_weight[self.row_weight[self.row[i]].min(MAX_WEIGHT)] -= 1;
            let mut j = self.r[i];
            while j != i {
                let (uj, dj) = (self.u[j], self.d[j]);
                self.d[uj] = dj;
                self.u[dj] = uj;
                self.size[self.col[j]] -= 1;
                j = self.r[j];
            }
            i = self.d[i];
        }
    }

    fn uncover(&mut self, h: usize) {
        let mut i = self.u[h];
        while i != h {
            let mut j = self.l[i];
            while j != i {
                let (uj, dj) = (self.u[j], self.d[j]);
                self.d[uj] = j;
                self.u[dj] = j;
                self.size[self.col[j]] += 1;
                j = self.l[j];
            }
            self.live_by_weight[self.row_weight[self.row[i]].min(MAX_WEIGHT)] += 1;
            i = self.u[i];
        }
        self.uncovered += self.col_weight[h];
        let (l, r) = (self.l[h], self.r[h]);
        self.r[l] = h;
        self.l[r] = h;
    }

    /// Take the row through node `i`: cover every other column of it.
    fn select(&mut self, i: usize) {
        self.chosen.push(self.row[i]);
        let mut j = self.r[i];
        while j != i {
            self.cover(self.col[j]);
            j = self.r[j];
        }
    }

    fn deselect(&mut self, i: usize) {
        let mut j = self.l[i];
        while j != i {
            self.uncover(self.col[j]);
            j = self.l[j];
        }
        self.chosen.pop();
    }

    fn columns(&self) -> impl Iterator<Item = usize> + '_ {
        let mut h = self.r[ROOT];
        std::iter::from_fn(move || {
            if h == ROOT {
                return None;
            }
            let c = h;
            h = self.r[h];
            Some(c)
        })
    }

    fn nodes_of(&self, h: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size[h]);
        let mut i = self.d[h];
        while i != h {
            out.push(i);
            i = self.d[i];
        }
        out
    }

    /// Column with the fewest live rows; ties go to the earliest column.
    fn pick_column(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for h in self.columns() {
            if best.is_none_or(|b| self.size[h] < self.size[b]) {
                best = Some(h);
                if self.size[h] == 0 {
                    break;
                }
            }
        }
        best
    }

    /// Most rows that could still be added: smallest live rows first, while
    /// their weights fit in the uncovered elements.
    fn capacity(&self) -> usize {
        let mut room = self.uncovered;
        let mut added = 0;
        for w in 1..=MAX_WEIGHT {
            let cnt = self.live_by_weight[w];
            if cnt == 0 {
                continue;
            }
            let take = cnt.min(room / w);
            added += take;
            room -= take * w;
            if take < cnt {
                break;
            }
        }
        added
    }
}

pub(crate) enum CoverOutcome {
    Found(Vec<usize>),
    Exhausted,
    Limit,
}

/// One randomized exact-cover attempt bounded by `node_limit`.
pub(crate) fn exact_cover(
    col_weight: &[usize],
    rows: &[Vec<usize>],
    rng: &mut ChaCha8Rng,
    node_limit: u64,
    ctl: &Control,
) -> CoverOutcome {
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.shuffle(rng);
    let mut x = Dlx::new(col_weight, rows, &order);
    let mut local = 0u64;
    let out = cover_dfs(&mut x, rng, node_limit, ctl, &mut local);
    ctl.flush(local);
    match out {
        Some(true) => CoverOutcome::Found(x.chosen.clone()),
        Some(false) => CoverOutcome::Exhausted,
        None => CoverOutcome::Limit,
    }
}

fn cover_dfs(x: &mut Dlx, rng: &mut ChaCha8Rng, limit: u64, ctl: &Control, local: &mut u64) -> Option<bool> {
    if !ctl.tick(local) || *local > limit {
        return None;
    }
    if x.r[ROOT] == ROOT {
        return Some(true);
    }
    // Random tie-breaking among the columns of minimum size.
    let mut best = usize::MAX;
    let mut ties = 0u32;
    let mut h = ROOT;
    for c in x.columns() {
        let s = x.size[c];
        if s < best {
            best = s;
            h = c;
            ties = 1;
            if s == 0 {
                break;
            }
        } else if s == best {
            ties += 1;
            if rng.gen_range(0..ties) == 0 {
                h = c;
            }
        }
    }
    if best == 0 {
        return Some(false);
    }
    x.cover(h);
    for i in x.nodes_of(h) {
        x.select(i);
        let r = cover_dfs(x, rng, limit, ctl, local);
        if r != Some(false) {
            if r.is_none() {
                x.deselect(i);
                x.uncover(h);
            }
            return r;
        }
        x.deselect(i);
    }
    x.uncover(h);
    Some(false)
}

/// Result of a packing run over one subtree.
pub(crate) struct Packing {
    pub best: Vec<usize>,
}

/// Branches available at the root of a packing search.
pub(crate) enum RootBranch {
    Row(usize),
    Leave,
}

pub(crate) struct PackingProblem<'a> {
    pub col_weight: &'a [usize],
    pub rows: &'a [Vec<usize>],
    /// No packing can exceed this many rows.
    pub ceiling: usize,
    /// Shared best size across workers.
    pub best: &'a AtomicUsize,
}

impl PackingProblem<'_> {
    pub fn root(&self) -> (Dlx, Vec<RootBranch>) {
        let order: Vec<usize> = (0..self.rows.len()).collect();
        let x = Dlx::new(self.col_weight, self.rows, &order);
        let mut branches = Vec::new();
        if let Some(h) = x.pick_column() {
            branches.extend(x.nodes_of(h).into_iter().map(RootBranch::Row));
            branches.push(RootBranch::Leave);
        }
        (x, branches)
    }

    /// Explore one root branch on a private copy of the structure.
    pub fn run_branch(&self, mut x: Dlx, branch: &RootBranch, ctl: &Control) -> Packing {
        let mut local = 0u64;
        let mut best = Vec::new();
        match x.pick_column() {
            None => self.record(&x, &mut best, ctl),
            Some(h) => {
                x.cover(h);
                match *branch {
                    RootBranch::Row(i) => x.select(i),
                    RootBranch::Leave => {}
                }
                self.pack_dfs(&mut x, &mut best, ctl, &mut local);
            }
        }
        ctl.flush(local);
        Packing { best }
    }

    fn record(&self, x: &Dlx, best: &mut Vec<usize>, ctl: &Control) {
        if x.chosen.len() > best.len() {
            *best = x.chosen.clone();
        }
        self.best.fetch_max(x.chosen.len(), Ordering::Relaxed);
        if x.chosen.len() >= self.ceiling {
            ctl.stop.store(true, Ordering::Relaxed);
        }
    }

    fn pack_dfs(&self, x: &mut Dlx, best: &mut Vec<usize>, ctl: &Control, local: &mut u64) {
        if !ctl.tick(local) {
            return;
        }
        if x.chosen.len() > best.len() {
            self.record(x, best, ctl);
            if ctl.stop.load(Ordering::Relaxed) {
                return;
            }
        }
        let bound = (x.chosen.len() + x.capacity()).min(self.ceiling);
        if bound <= self.best.load(Ordering::Relaxed) {
            return;
        }
        let Some(h) = x.pick_column() else { return };
        x.cover(h);
        for i in x.nodes_of(h) {
            x.select(i);
            self.pack_dfs(x, best, ctl, local);
            x.deselect(i);
            if ctl.stop.load(Ordering::Relaxed) {
                x.uncover(h);
                return;
            }
        }
        // Leave this column uncovered; the column is already removed along
        // with every row through it.
        self.pack_dfs(x, best, ctl, local);
        x.uncover(h);
    }
}
