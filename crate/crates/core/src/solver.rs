//! Exact computation of `rvc`, `srvc`, `rc` and `src`.
//!
//! For each palette size `K`, starting at the diameter lower bound, the
//! solver enumerates colourings as restricted-growth strings (colour ids in
//! order of first use) depth first over the elements in id order: vertices
//! for `rvc`/`srvc`, sorted arcs for `rc`/`src`. The first valid colouring
//! at the first feasible `K` is the witness.
//!
//! Pruning treats every uncoloured element as carrying a colour of its own.
//! Splitting colour classes never destroys a rainbow path, so if some pair
//! has no rainbow path even then, no completion of the prefix is valid. A
//! pair whose rainbow path uses only coloured elements stays satisfied in
//! the whole subtree and is not checked again.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use core::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use core::time::Duration;

use crate::verify::{self, check_all, Searcher, Target, FRESH};
use crate::{ArcColouring, Digraph, DistanceMatrix, Error, Result, VertexColouring};

#[cfg(feature = "std")]
use std::time::Instant;

/// The four connection numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parameter {
    Rvc,
    Srvc,
    Rc,
    Src,
}

impl Parameter {
    pub const ALL: [Parameter; 4] = [
        Parameter::Rvc,
        Parameter::Srvc,
        Parameter::Rc,
        Parameter::Src,
    ];

    pub fn is_arc(self) -> bool {
        matches!(self, Parameter::Rc | Parameter::Src)
    }

    pub fn is_strong(self) -> bool {
        matches!(self, Parameter::Srvc | Parameter::Src)
    }

    pub fn name(self) -> &'static str {
        match self {
            Parameter::Rvc => "rvc",
            Parameter::Srvc => "srvc",
            Parameter::Rc => "rc",
            Parameter::Src => "src",
        }
    }

    pub(crate) fn target(self) -> Target {
        match self {
            Parameter::Rvc => Target::VertexPath,
            Parameter::Srvc => Target::VertexGeodesic,
            Parameter::Rc => Target::ArcPath,
            Parameter::Src => Target::ArcGeodesic,
        }
    }

    /// Diameter lower bound.
    pub fn lower_bound(self, diameter: usize) -> usize {
        if self.is_arc() {
            diameter
        } else {
            diameter.saturating_sub(1)
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rvc" => Ok(Parameter::Rvc),
            "srvc" => Ok(Parameter::Srvc),
            "rc" => Ok(Parameter::Rc),
            "src" => Ok(Parameter::Src),
            other => Err(Error::InvalidParameter(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    Vertex(VertexColouring),
    Arc(ArcColouring),
}

impl Witness {
    pub fn palette(&self) -> usize {
        match self {
            Witness::Vertex(c) => c.palette(),
            Witness::Arc(c) => c.palette(),
        }
    }

    pub fn colours(&self) -> &[u32] {
        match self {
            Witness::Vertex(c) => c.colours(),
            Witness::Arc(c) => c.colours(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Exact,
    /// A limit stopped the search; only `lower..=upper` is known.
    Inconclusive,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Complete colourings reached.
    pub colourings_tested: u64,
    /// Search nodes (partial colourings) visited.
    pub nodes_expanded: u64,
    /// Wall time; `None` without the `std` feature.
    pub elapsed: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub parameter: Parameter,
    pub status: SolveStatus,
    pub lower: usize,
    pub upper: usize,
    pub witness: Option<Witness>,
    /// Largest palette size known to admit no valid colouring.
    pub refuted_budget: Option<usize>,
    pub stats: SolveStats,
}

impl SolveResult {
    /// The exact value, when the search finished.
    pub fn value(&self) -> Option<usize> {
        match self.status {
            SolveStatus::Exact => Some(self.lower),
            SolveStatus::Inconclusive => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.status == SolveStatus::Exact
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    /// Largest palette size to try.
    pub max_budget: Option<usize>,
    /// Wall-clock limit (ignored without `std`).
    pub time_limit: Option<Duration>,
    /// Worker threads; values above 1 need the `std` feature.
    pub threads: usize,
    /// Plain enumeration of every colouring: no symmetry breaking, no
    /// pruning, no shortcuts.
    pub oracle_mode: bool,
    /// Limit on search nodes per palette size.
    pub max_nodes: Option<u64>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_budget: None,
            time_limit: None,
            threads: 1,
            oracle_mode: false,
            max_nodes: None,
        }
    }
}

/// Result of a single palette-size query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Feasible(Witness),
    Infeasible,
    Unknown,
}

pub fn compute_rvc(d: &Digraph, opts: &SolveOptions) -> Result<SolveResult> {
    compute(d, Parameter::Rvc, opts)
}

pub fn compute_srvc(d: &Digraph, opts: &SolveOptions) -> Result<SolveResult> {
    compute(d, Parameter::Srvc, opts)
}

pub fn compute_rc(d: &Digraph, opts: &SolveOptions) -> Result<SolveResult> {
    compute(d, Parameter::Rc, opts)
}

pub fn compute_src(d: &Digraph, opts: &SolveOptions) -> Result<SolveResult> {
    compute(d, Parameter::Src, opts)
}

struct Clock {
    #[cfg(feature = "std")]
    start: Instant,
}

impl Clock {
    fn start() -> Self {
        Clock {
            #[cfg(feature = "std")]
            start: Instant::now(),
        }
    }

    fn elapsed(&self) -> Option<Duration> {
        #[cfg(feature = "std")]
        {
            Some(self.start.elapsed())
        }
        #[cfg(not(feature = "std"))]
        {
            None
        }
    }

    fn expired(&self, limit: Option<Duration>) -> bool {
        match (limit, self.elapsed()) {
            (Some(l), Some(e)) => e >= l,
            _ => false,
        }
    }
}

/// Computes one parameter of a strongly connected digraph.
pub fn compute(d: &Digraph, param: Parameter, opts: &SolveOptions) -> Result<SolveResult> {
    let clock = Clock::start();
    let dist = d.distance_matrix();
    let diam = dist.max().ok_or(Error::NotStronglyConnected)?;
    let elements = if param.is_arc() {
        d.arc_count()
    } else {
        d.order()
    };
    let lower = param.lower_bound(diam);
    let mut stats = SolveStats::default();

    let exact = |k: usize, witness: Witness, stats: SolveStats| SolveResult {
        parameter: param,
        status: SolveStatus::Exact,
        lower: k,
        upper: k,
        witness: Some(witness),
        refuted_budget: k.checked_sub(1),
        stats,
    };

    if !opts.oracle_mode {
        let shortcut = match (param.is_arc(), diam) {
            (false, 0 | 1) => Some((0, Witness::Vertex(VertexColouring::empty(d.order())))),
            (false, 2) => Some((1, Witness::Vertex(VertexColouring::constant(d.order())))),
            (true, 0) => Some((0, Witness::Arc(ArcColouring::identity(0)))),
            (true, 1) => Some((1, Witness::Arc(ArcColouring::constant(elements)))),
            _ => None,
        };
        if let Some((k, w)) = shortcut {
            confirm(d, param, &w)?;
            stats.elapsed = clock.elapsed();
            return Ok(exact(k, w, stats));
        }
    }

    let cap = opts.max_budget.map_or(elements, |b| b.min(elements));
    let start = if opts.oracle_mode { 0 } else { lower };
    let mut refuted = start.checked_sub(1);
    for k in start..=cap {
        let outcome = run_level(
            d,
            &dist,
            param,
            k,
            k > start && !opts.oracle_mode,
            opts,
            &clock,
        )?;
        stats.colourings_tested += outcome.tested;
        stats.nodes_expanded += outcome.nodes;
        match outcome.result {
            Level::Found(w) => {
                confirm(d, param, &w)?;
                stats.elapsed = clock.elapsed();
                let mut r = exact(k, w, stats);
                r.refuted_budget = refuted;
                return Ok(r);
            }
            Level::Exhausted => refuted = Some(k),
            Level::Stopped => {
                stats.elapsed = clock.elapsed();
                return Ok(inconclusive(param, refuted, elements, stats));
            }
        }
    }
    if cap < elements {
        stats.elapsed = clock.elapsed();
        return Ok(inconclusive(param, refuted, elements, stats));
    }
    Err(Error::Internal(
        "no valid colouring with every element distinct".to_string(),
    ))
}

fn inconclusive(
    param: Parameter,
    refuted: Option<usize>,
    elements: usize,
    stats: SolveStats,
) -> SolveResult {
    SolveResult {
        parameter: param,
        status: SolveStatus::Inconclusive,
        lower: refuted.map_or(0, |r| r + 1),
        upper: elements,
        witness: None,
        refuted_budget: refuted,
        stats,
    }
}

/// Decides whether some colouring with at most `k` colours is valid.
pub fn decide(d: &Digraph, param: Parameter, k: usize, opts: &SolveOptions) -> Result<Decision> {
    let clock = Clock::start();
    let dist = d.distance_matrix();
    if !dist.is_complete() {
        return Err(Error::NotStronglyConnected);
    }
    let outcome = run_level(d, &dist, param, k, false, opts, &clock)?;
    Ok(match outcome.result {
        Level::Found(w) => {
            confirm(d, param, &w)?;
            Decision::Feasible(w)
        }
        Level::Exhausted => Decision::Infeasible,
        Level::Stopped => Decision::Unknown,
    })
}

fn confirm(d: &Digraph, param: Parameter, w: &Witness) -> Result<()> {
    let verdict = match w {
        Witness::Vertex(c) if !param.is_arc() => match param {
            Parameter::Rvc => verify::check_rvc(d, c)?,
            _ => verify::check_srvc(d, c)?,
        },
        Witness::Arc(c) if param.is_arc() => match param {
            Parameter::Rc => verify::check_rc(d, c)?,
            _ => verify::check_src(d, c)?,
        },
        _ => return Err(Error::Internal("witness of the wrong kind".to_string())),
    };
    if verdict.is_valid() {
        Ok(())
    } else {
        Err(Error::Internal(alloc::format!(
            "{param} witness failed verification: {verdict:?}"
        )))
    }
}

enum Level {
    Found(Witness),
    Exhausted,
    Stopped,
}

struct LevelOutcome {
    result: Level,
    tested: u64,
    nodes: u64,
}

fn witness_of(param: Parameter, colours: Vec<u32>, k: usize) -> Result<Witness> {
    Ok(if param.is_arc() {
        Witness::Arc(ArcColouring::new(colours, k)?)
    } else {
        Witness::Vertex(VertexColouring::new(colours, k)?)
    })
}

/// Searches palette size `k`. With `exactly`, colourings using fewer than
/// `k` colours are skipped (they were refuted at an earlier level).
fn run_level(
    d: &Digraph,
    dist: &DistanceMatrix,
    param: Parameter,
    k: usize,
    exactly: bool,
    opts: &SolveOptions,
    clock: &Clock,
) -> Result<LevelOutcome> {
    let target = param.target();
    let elements = if param.is_arc() {
        d.arc_count()
    } else {
        d.order()
    };
    if k > 64 {
        return Err(Error::PaletteTooLarge(k));
    }
    if k == 0 {
        let colours = vec![FRESH; elements];
        let ok =
            elements == 0 || (!param.is_arc() && check_all(d, dist, target, &colours).is_valid());
        let result = if ok {
            let w = if param.is_arc() {
                Witness::Arc(ArcColouring::identity(0))
            } else {
                Witness::Vertex(VertexColouring::empty(elements))
            };
            Level::Found(w)
        } else {
            Level::Exhausted
        };
        return Ok(LevelOutcome {
            result,
            tested: 1,
            nodes: 0,
        });
    }

    let n = d.order();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| {
            let duv = dist.raw(u, v);
            u != v && duv > if param.is_arc() { 1 } else { 2 }
        })
        .collect();
    let shared = Shared {
        nodes: AtomicU64::new(0),
        best: AtomicUsize::new(usize::MAX),
        stopped: AtomicBool::new(false),
        max_nodes: opts.max_nodes,
        time_limit: opts.time_limit,
        clock,
    };
    let problem = Problem {
        d,
        dist,
        target,
        k,
        exactly,
        plain: opts.oracle_mode,
        elements,
    };

    let threads = opts.threads.max(1);
    let outcome = if threads > 1 {
        run_parallel(&problem, &shared, pairs, threads)
    } else {
        let mut dfs = Dfs::new(&problem, &shared, usize::MAX);
        let r = dfs.visit(0, 0, pairs);
        dfs.flush();
        (r.map(|found| found.then(|| dfs.col.clone())), dfs.tested)
    };
    let (found, tested) = outcome;
    let nodes = shared.nodes.load(Ordering::Relaxed);
    let result = match found {
        Ok(Some(col)) => Level::Found(witness_of(param, col, k)?),
        Ok(None) => Level::Exhausted,
        Err(Stop) => Level::Stopped,
    };
    Ok(LevelOutcome {
        result,
        tested,
        nodes,
    })
}

#[cfg(feature = "std")]
fn run_parallel(
    problem: &Problem<'_>,
    shared: &Shared<'_>,
    pairs: Vec<(usize, usize)>,
    threads: usize,
) -> (core::result::Result<Option<Vec<u32>>, Stop>, u64) {
    use rayon::prelude::*;

    let mut depth = 0;
    let mut blocks = vec![Block {
        col: vec![FRESH; problem.elements],
        used: 0,
        pending: pairs,
    }];
    // Split until there is enough work to share out.
    while blocks.len() < 8 * threads && depth + 1 < problem.elements {
        let mut next = Vec::new();
        let mut dfs = Dfs::new(problem, shared, usize::MAX);
        for b in blocks {
            dfs.col = b.col;
            match dfs.expand(depth, b.used, &b.pending) {
                Ok(children) => next.extend(children),
                Err(Stop) => return (Err(Stop), dfs.tested),
            }
        }
        dfs.flush();
        blocks = next;
        depth += 1;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(_) => {
            let mut dfs = Dfs::new(problem, shared, usize::MAX);
            let mut first = None;
            for b in blocks {
                dfs.col = b.col;
                match dfs.visit(depth, b.used, b.pending) {
                    Ok(true) => {
                        first = Some(dfs.col.clone());
                        break;
                    }
                    Ok(false) => {}
                    Err(Stop) => return (Err(Stop), dfs.tested),
                }
            }
            dfs.flush();
            return (Ok(first), dfs.tested);
        }
    };
    let results: Vec<(usize, BlockResult, u64)> = pool.install(|| {
        blocks
            .into_par_iter()
            .enumerate()
            .map(|(i, b)| {
                if shared.best.load(Ordering::Relaxed) < i {
                    return (i, BlockResult::Cancelled, 0);
                }
                let mut dfs = Dfs::new(problem, shared, i);
                dfs.col = b.col;
                let r = match dfs.visit(depth, b.used, b.pending) {
                    Ok(true) => {
                        shared.best.fetch_min(i, Ordering::Relaxed);
                        BlockResult::Found(dfs.col.clone())
                    }
                    Ok(false) => BlockResult::Exhausted,
                    Err(Stop) if shared.stopped.load(Ordering::Relaxed) => BlockResult::Stopped,
                    Err(Stop) => BlockResult::Cancelled,
                };
                dfs.flush();
                (i, r, dfs.tested)
            })
            .collect()
    });
    let tested = results.iter().map(|r| r.2).sum();
    // Blocks are in enumeration order; the first decisive one settles it.
    for (_, r, _) in results {
        match r {
            BlockResult::Found(col) => return (Ok(Some(col)), tested),
            BlockResult::Stopped => return (Err(Stop), tested),
            BlockResult::Exhausted | BlockResult::Cancelled => {}
        }
    }
    (Ok(None), tested)
}

#[cfg(not(feature = "std"))]
fn run_parallel(
    problem: &Problem<'_>,
    shared: &Shared<'_>,
    pairs: Vec<(usize, usize)>,
    _threads: usize,
) -> (core::result::Result<Option<Vec<u32>>, Stop>, u64) {
    let mut dfs = Dfs::new(problem, shared, usize::MAX);
    let r = dfs.visit(0, 0, pairs);
    dfs.flush();
    (r.map(|found| found.then(|| dfs.col.clone())), dfs.tested)
}

#[cfg(feature = "std")]
enum BlockResult {
    Found(Vec<u32>),
    Exhausted,
    Stopped,
    Cancelled,
}

#[cfg(feature = "std")]
struct Block {
    col: Vec<u32>,
    used: usize,
    pending: Vec<(usize, usize)>,
}

struct Problem<'a> {
    d: &'a Digraph,
    dist: &'a DistanceMatrix,
    target: Target,
    k: usize,
    exactly: bool,
    plain: bool,
    elements: usize,
}

struct Shared<'a> {
    nodes: AtomicU64,
    best: AtomicUsize,
    stopped: AtomicBool,
    max_nodes: Option<u64>,
    time_limit: Option<Duration>,
    clock: &'a Clock,
}

/// A limit was hit, or a block earlier in enumeration order already won.
#[derive(Debug)]
struct Stop;

struct Dfs<'p, 'a> {
    problem: &'p Problem<'a>,
    shared: &'p Shared<'a>,
    searcher: Searcher<'a>,
    col: Vec<u32>,
    block: usize,
    local_nodes: u64,
    tested: u64,
    last_fail: Option<(usize, usize)>,
}

const FLUSH_EVERY: u64 = 1024;

impl<'p, 'a> Dfs<'p, 'a> {
    fn new(problem: &'p Problem<'a>, shared: &'p Shared<'a>, block: usize) -> Self {
        Dfs {
            problem,
            shared,
            searcher: Searcher::new(problem.d, problem.dist),
            col: vec![FRESH; problem.elements],
            block,
            local_nodes: 0,
            tested: 0,
            last_fail: None,
        }
    }

    fn flush(&mut self) {
        self.shared
            .nodes
            .fetch_add(self.local_nodes, Ordering::Relaxed);
        self.local_nodes = 0;
    }

    fn tick(&mut self) -> core::result::Result<(), Stop> {
        self.local_nodes += 1;
        if self.local_nodes < FLUSH_EVERY {
            return Ok(());
        }
        let total = self
            .shared
            .nodes
            .fetch_add(self.local_nodes, Ordering::Relaxed)
            + self.local_nodes;
        self.local_nodes = 0;
        let s = self.shared;
        if s.stopped.load(Ordering::Relaxed)
            || s.max_nodes.is_some_and(|m| total > m)
            || s.clock.expired(s.time_limit)
        {
            s.stopped.store(true, Ordering::Relaxed);
            return Err(Stop);
        }
        if s.best.load(Ordering::Relaxed) < self.block {
            return Err(Stop);
        }
        Ok(())
    }

    /// Colour range for the next element given `used` colours so far.
    fn choices(&self, used: usize) -> core::ops::Range<usize> {
        let p = self.problem;
        if p.plain {
            return 0..p.k;
        }
        0..(used + 1).min(p.k)
    }

    /// Re-checks `pending` after colouring another element. Returns the
    /// pairs still unresolved, or `None` if some pair can no longer be
    /// satisfied.
    fn filter(&mut self, pending: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
        let target = self.problem.target;
        let k = self.problem.k;
        if let Some((u, v)) = self.last_fail {
            if pending.contains(&(u, v)) && !self.searcher.search(target, &self.col, u, v, Some(k))
            {
                return None;
            }
        }
        let mut rest = Vec::with_capacity(pending.len());
        for &(u, v) in pending {
            if self.searcher.search(target, &self.col, u, v, None) {
                continue;
            }
            if !self.searcher.search(target, &self.col, u, v, Some(k)) {
                self.last_fail = Some((u, v));
                return None;
            }
            rest.push((u, v));
        }
        Some(rest)
    }

    fn leaf_ok(&self) -> bool {
        let p = self.problem;
        check_all(p.d, p.dist, p.target, &self.col).is_valid()
    }

    /// Depth-first search below a prefix of `depth` coloured elements.
    /// On success the witness is left in `self.col`.
    fn visit(
        &mut self,
        depth: usize,
        used: usize,
        pending: Vec<(usize, usize)>,
    ) -> core::result::Result<bool, Stop> {
        let p = self.problem;
        if depth == p.elements {
            self.tested += 1;
            return Ok(if p.plain {
                self.leaf_ok()
            } else {
                pending.is_empty()
            });
        }
        for c in self.choices(used) {
            let now_used = used.max(c + 1);
            if p.exactly && p.k - now_used > p.elements - depth - 1 {
                continue;
            }
            self.tick()?;
            self.col[depth] = c as u32;
            let next = if p.plain {
                Some(Vec::new())
            } else {
                self.filter(&pending)
            };
            if let Some(next) = next {
                if self.visit(depth + 1, now_used, next)? {
                    return Ok(true);
                }
            }
        }
        self.col[depth] = FRESH;
        Ok(false)
    }

    /// The surviving children of a prefix, in enumeration order.
    #[cfg(feature = "std")]
    fn expand(
        &mut self,
        depth: usize,
        used: usize,
        pending: &[(usize, usize)],
    ) -> core::result::Result<Vec<Block>, Stop> {
        let p = self.problem;
        let mut out = Vec::new();
        for c in self.choices(used) {
            let now_used = used.max(c + 1);
            if p.exactly && p.k - now_used > p.elements - depth - 1 {
                continue;
            }
            self.tick()?;
            self.col[depth] = c as u32;
            let next = if p.plain {
                Some(Vec::new())
            } else {
                self.filter(pending)
            };
            if let Some(next) = next {
                out.push(Block {
                    col: self.col.clone(),
                    used: now_used,
                    pending: next,
                });
            }
        }
        self.col[depth] = FRESH;
        Ok(out)
    }
}
