//! Rainbow path and geodesic checks for vertex and arc colourings.
//!
//! Every query is a search over states `(vertex, colour set)` where the
//! colour set is a `u64` mask, so palettes are limited to 64 colours. A
//! state is dropped when the same vertex was already reached with a subset
//! of its colours. Any walk the search accepts contains a rainbow path:
//! cutting out a cycle only removes colours.
//!
//! Vertex version: only internal vertices carry colour constraints, so a
//! path with at most one internal vertex is always rainbow. Arc version:
//! every arc on the path counts.

use alloc::vec;
use alloc::vec::Vec;

use crate::{ArcColouring, Digraph, DistanceMatrix, Error, Result, VertexColouring};

/// Outcome of a full colouring check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Valid,
    /// The lexicographically smallest ordered pair without a rainbow
    /// path (or geodesic).
    Invalid {
        from: usize,
        to: usize,
    },
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        self == Verdict::Valid
    }
}

/// Colour marking an element that is not coloured yet. It contributes no
/// mask bit, which models a colour not used anywhere else.
pub(crate) const FRESH: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Target {
    VertexPath,
    VertexGeodesic,
    ArcPath,
    ArcGeodesic,
}

impl Target {
    pub(crate) fn is_arc(self) -> bool {
        matches!(self, Target::ArcPath | Target::ArcGeodesic)
    }

    fn is_geodesic(self) -> bool {
        matches!(self, Target::VertexGeodesic | Target::ArcGeodesic)
    }
}

/// Reusable search state for one digraph.
pub(crate) struct Searcher<'a> {
    d: &'a Digraph,
    dist: &'a DistanceMatrix,
    seen: Vec<Vec<(u64, u32)>>,
    touched: Vec<usize>,
    stack: Vec<(usize, u64, u32)>,
    pub(crate) expanded: u64,
}

#[inline]
fn bit(c: u32) -> u64 {
    if c == FRESH {
        0
    } else {
        1u64 << c
    }
}

impl<'a> Searcher<'a> {
    pub(crate) fn new(d: &'a Digraph, dist: &'a DistanceMatrix) -> Self {
        Searcher {
            d,
            dist,
            seen: vec![Vec::new(); d.order()],
            touched: Vec::new(),
            stack: Vec::new(),
            expanded: 0,
        }
    }

    fn reset(&mut self) {
        for &w in &self.touched {
            self.seen[w].clear();
        }
        self.touched.clear();
        self.stack.clear();
    }

    /// Records `(z, mask, fresh)` unless some recorded state at `z` has a
    /// subset of `mask` and at most `fresh` uncoloured elements.
    #[inline]
    fn admit(&mut self, z: usize, mask: u64, fresh: u32) -> bool {
        let list = &mut self.seen[z];
        if list.iter().any(|&(m, f)| m & mask == m && f <= fresh) {
            return false;
        }
        if list.is_empty() {
            self.touched.push(z);
        }
        list.retain(|&(m, f)| !(m & mask == mask && f >= fresh));
        list.push((mask, fresh));
        true
    }

    /// Whether `u` reaches `v` along a rainbow path or geodesic under `col`
    /// (vertex colours or arc colours depending on `target`). Elements
    /// coloured [`FRESH`] are usable only with `fresh_budget = Some(k)`, and
    /// then the path may hold at most `k` coloured or fresh elements, each
    /// fresh one counting as a new colour.
    pub(crate) fn search(
        &mut self,
        target: Target,
        col: &[u32],
        u: usize,
        v: usize,
        fresh_budget: Option<usize>,
    ) -> bool {
        if u == v {
            return true;
        }
        let duv = self.dist.raw(u, v);
        if duv == u32::MAX {
            return false;
        }
        if duv == 1 {
            return true;
        }
        let found = self.run(target, col, u, v, duv, fresh_budget);
        self.reset();
        found
    }

    fn run(
        &mut self,
        target: Target,
        col: &[u32],
        u: usize,
        v: usize,
        duv: u32,
        fresh_budget: Option<usize>,
    ) -> bool {
        let d = self.d;
        let budget = fresh_budget.unwrap_or(usize::MAX);
        let dist = self.dist;
        let geodesic = target.is_geodesic();
        let arc = target.is_arc();
        self.stack.push((u, 0, 0));
        while let Some((w, mask, fresh)) = self.stack.pop() {
            self.expanded += 1;
            let dw = if geodesic { dist.raw(u, w) } else { 0 };
            let base = d.out_arc_offset(w);
            for (i, &z) in d.out_neighbours(w).iter().enumerate() {
                if z == u {
                    continue;
                }
                if geodesic && (dist.raw(u, z) != dw + 1 || dist.raw(z, v) != duv - dw - 1) {
                    continue;
                }
                let c = if arc { col[base + i] } else { col[z] };
                let (colour_mask, next_fresh) = if arc || z != v {
                    if c == FRESH && fresh_budget.is_none() {
                        continue;
                    }
                    let b = bit(c);
                    if mask & b != 0 {
                        continue;
                    }
                    let f = fresh + (c == FRESH) as u32;
                    if (mask | b).count_ones() as usize + f as usize > budget {
                        continue;
                    }
                    (mask | b, f)
                } else {
                    (mask, fresh)
                };
                if z == v {
                    return true;
                }
                if self.admit(z, colour_mask, next_fresh) {
                    self.stack.push((z, colour_mask, next_fresh));
                }
            }
        }
        false
    }
}

fn vertex_palette_colours(c: &VertexColouring) -> Result<Vec<u32>> {
    if c.palette() == 0 {
        // No colour to give any internal vertex.
        return Ok(vec![FRESH; c.len()]);
    }
    if c.palette() <= 64 {
        return Ok(c.colours().to_vec());
    }
    let k = c.compacted();
    if k.palette() > 64 {
        return Err(Error::PaletteTooLarge(k.palette()));
    }
    Ok(k.colours().to_vec())
}

fn arc_palette_colours(c: &ArcColouring) -> Result<Vec<u32>> {
    if c.palette() <= 64 {
        return Ok(c.colours().to_vec());
    }
    let k = c.compacted();
    if k.palette() > 64 {
        return Err(Error::PaletteTooLarge(k.palette()));
    }
    Ok(k.colours().to_vec())
}

fn check_vertex(d: &Digraph, v: usize) -> Result<()> {
    if v >= d.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: d.order(),
        });
    }
    Ok(())
}

fn pair_query(
    d: &Digraph,
    target: Target,
    col: &[u32],
    u: usize,
    v: usize,
    geodesic_needs_reach: bool,
) -> Result<bool> {
    check_vertex(d, u)?;
    check_vertex(d, v)?;
    let dist = d.distance_matrix();
    if geodesic_needs_reach && dist.get(u, v).is_none() {
        return Err(Error::Unreachable { from: u, to: v });
    }
    Ok(Searcher::new(d, &dist).search(target, col, u, v, None))
}

/// Some `u`-`v` path has internal vertices of pairwise distinct colours.
/// `u == v` counts as the trivial path.
pub fn has_rainbow_path(d: &Digraph, c: &VertexColouring, u: usize, v: usize) -> Result<bool> {
    c.check_order(d)?;
    pair_query(
        d,
        Target::VertexPath,
        &vertex_palette_colours(c)?,
        u,
        v,
        false,
    )
}

/// Some shortest `u`-`v` path is rainbow. Fails when `v` is unreachable.
pub fn has_rainbow_geodesic(d: &Digraph, c: &VertexColouring, u: usize, v: usize) -> Result<bool> {
    c.check_order(d)?;
    pair_query(
        d,
        Target::VertexGeodesic,
        &vertex_palette_colours(c)?,
        u,
        v,
        true,
    )
}

/// Some `u`-`v` path has arcs of pairwise distinct colours.
pub fn has_rainbow_arc_path(d: &Digraph, c: &ArcColouring, u: usize, v: usize) -> Result<bool> {
    c.check_size(d)?;
    pair_query(d, Target::ArcPath, &arc_palette_colours(c)?, u, v, false)
}

/// Some shortest `u`-`v` path has arcs of pairwise distinct colours.
pub fn has_rainbow_arc_geodesic(d: &Digraph, c: &ArcColouring, u: usize, v: usize) -> Result<bool> {
    c.check_size(d)?;
    pair_query(d, Target::ArcGeodesic, &arc_palette_colours(c)?, u, v, true)
}

/// Checks every ordered pair in lexicographic order.
pub(crate) fn check_all(
    d: &Digraph,
    dist: &DistanceMatrix,
    target: Target,
    col: &[u32],
) -> Verdict {
    let mut s = Searcher::new(d, dist);
    let n = d.order();
    for u in 0..n {
        for v in 0..n {
            if u != v && !s.search(target, col, u, v, None) {
                return Verdict::Invalid { from: u, to: v };
            }
        }
    }
    Verdict::Valid
}

fn strong_distances(d: &Digraph) -> Result<DistanceMatrix> {
    let dist = d.distance_matrix();
    if !dist.is_complete() {
        return Err(Error::NotStronglyConnected);
    }
    Ok(dist)
}

/// Every ordered pair has a rainbow path.
pub fn check_rvc(d: &Digraph, c: &VertexColouring) -> Result<Verdict> {
    c.check_order(d)?;
    let dist = strong_distances(d)?;
    Ok(check_all(
        d,
        &dist,
        Target::VertexPath,
        &vertex_palette_colours(c)?,
    ))
}

/// Every ordered pair has a rainbow geodesic.
pub fn check_srvc(d: &Digraph, c: &VertexColouring) -> Result<Verdict> {
    c.check_order(d)?;
    let dist = strong_distances(d)?;
    let col = vertex_palette_colours(c)?;
    let verdict = check_all(d, &dist, Target::VertexGeodesic, &col);
    debug_assert!(
        !verdict.is_valid() || check_all(d, &dist, Target::VertexPath, &col).is_valid(),
        "strong colouring that is not rainbow"
    );
    Ok(verdict)
}

/// Every ordered pair has an arc-rainbow path.
pub fn check_rc(d: &Digraph, c: &ArcColouring) -> Result<Verdict> {
    c.check_size(d)?;
    let dist = strong_distances(d)?;
    Ok(check_all(
        d,
        &dist,
        Target::ArcPath,
        &arc_palette_colours(c)?,
    ))
}

/// Every ordered pair has an arc-rainbow geodesic.
pub fn check_src(d: &Digraph, c: &ArcColouring) -> Result<Verdict> {
    c.check_size(d)?;
    let dist = strong_distances(d)?;
    let col = arc_palette_colours(c)?;
    let verdict = check_all(d, &dist, Target::ArcGeodesic, &col);
    debug_assert!(
        !verdict.is_valid() || check_all(d, &dist, Target::ArcPath, &col).is_valid(),
        "strong arc colouring that is not rainbow"
    );
    Ok(verdict)
}

pub fn is_rvc_colouring(d: &Digraph, c: &VertexColouring) -> Result<bool> {
    check_rvc(d, c).map(Verdict::is_valid)
}

pub fn is_srvc_colouring(d: &Digraph, c: &VertexColouring) -> Result<bool> {
    check_srvc(d, c).map(Verdict::is_valid)
}

pub fn is_rc_colouring(d: &Digraph, c: &ArcColouring) -> Result<bool> {
    check_rc(d, c).map(Verdict::is_valid)
}

pub fn is_src_colouring(d: &Digraph, c: &ArcColouring) -> Result<bool> {
    check_src(d, c).map(Verdict::is_valid)
}
