//! Directed cycles and spanning strongly connected subdigraphs of `↔C_n`.
//!
//! A cycle subdigraph keeps every forward arc `v_i -> v_{i+1}` and drops
//! some reverse arcs. Position `i` names the dropped arc `v_{i+1} -> v_i`,
//! which leaves `v_i -> v_{i+1}` asymmetric.
//!
//! The classifier rotates the asymmetric positions into a canonical layout
//! and measures the two bioriented segments:
//!
//! | kind   | positions after rotation       | segments              |
//! |--------|--------------------------------|-----------------------|
//! | K1     | `{n-1}`                        | `n-1, 0`              |
//! | D1     | `{n-1, l}`, `0 <= l <= n-3`    | `l, n-2-l`            |
//! | D2     | `{n-1, 0, 1}`                  | `n-3, 0`              |
//! | D3     | `{n-1, 0, l}`, `2 <= l <= n-3` | `l-1, n-2-l`          |
//! | D4     | `{n-1, 0, l, l+1}`, `1 <= l <= n-3` | `l-1, n-3-l`     |
//!
//! Everything else is `Other`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Digraph, Error, Result, VertexColouring};

/// `C→_n`: arcs `v_i -> v_{i+1 mod n}`.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(
            "directed cycle needs n >= 3".into(),
        ));
    }
    Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `↔C_n` without the reverse arcs named by `asym`.
pub fn cycle_subdigraph(n: usize, asym: &[usize]) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(
            "cycle subdigraph needs n >= 3".into(),
        ));
    }
    if let Some(&p) = asym.iter().find(|&&p| p >= n) {
        return Err(Error::VertexOutOfRange { vertex: p, n });
    }
    let dropped: BTreeSet<usize> = asym.iter().copied().collect();
    let forward = (0..n).map(|i| (i, (i + 1) % n));
    let backward = (0..n)
        .filter(|i| !dropped.contains(i))
        .map(|i| ((i + 1) % n, i));
    Digraph::new(n, forward.chain(backward))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleKind {
    K1,
    D1,
    D2,
    D3,
    D4,
    Other,
}

impl CycleKind {
    pub fn name(self) -> &'static str {
        match self {
            CycleKind::K1 => "K1",
            CycleKind::D1 => "D1",
            CycleKind::D2 => "D2",
            CycleKind::D3 => "D3",
            CycleKind::D4 => "D4",
            CycleKind::Other => "OTHER",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSubdigraphClass {
    pub kind: CycleKind,
    pub n: usize,
    /// Number of asymmetric arcs.
    pub k: usize,
    /// Lengths `(l(P), l(P'))` of the bioriented segments, for K1 to D4.
    pub segments: Option<(usize, usize)>,
    /// Rotation `r`: original vertex `v` sits at canonical position
    /// `(v + r) mod n`.
    pub rotation: usize,
    /// The `l` of the canonical layout (D1, D3, D4).
    pub ell: Option<usize>,
}

impl CycleSubdigraphClass {
    /// Original vertex at canonical position `j`.
    pub fn vertex_at(&self, j: usize) -> usize {
        (j + self.n - self.rotation % self.n) % self.n
    }
}

/// Recovers the asymmetric positions of a cycle subdigraph.
pub fn asymmetric_positions(d: &Digraph) -> Result<Vec<usize>> {
    let n = d.order();
    if n < 3 {
        return Err(Error::NotACycleSubdigraph);
    }
    let mut asym = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        if !d.has_arc(i, j) {
            return Err(Error::NotACycleSubdigraph);
        }
        if !d.has_arc(j, i) {
            asym.push(i);
        }
    }
    let extra = d.arc_count() - n - (n - asym.len());
    if extra != 0 || asym.is_empty() {
        return Err(Error::NotACycleSubdigraph);
    }
    Ok(asym)
}

fn rotate(set: &[usize], r: usize, n: usize) -> BTreeSet<usize> {
    set.iter().map(|&p| (p + r) % n).collect()
}

/// Classifies a spanning strongly connected subdigraph of `↔C_n` with at
/// least one asymmetric arc, on the labelling `v_0 .. v_{n-1}`.
pub fn classify_cycle_subdigraph(d: &Digraph) -> Result<CycleSubdigraphClass> {
    let asym = asymmetric_positions(d)?;
    Ok(classify_positions(d.order(), &asym))
}

/// Classification straight from the position set.
pub fn classify_positions(n: usize, asym: &[usize]) -> CycleSubdigraphClass {
    let set: BTreeSet<usize> = asym.iter().map(|&p| p % n).collect();
    let k = set.len();
    let other = CycleSubdigraphClass {
        kind: CycleKind::Other,
        n,
        k,
        segments: None,
        rotation: 0,
        ell: None,
    };
    let has = |p: usize| set.contains(&(p % n));
    // Positions p with p+1 also asymmetric: starts of consecutive pairs.
    let starts: Vec<usize> = set.iter().copied().filter(|&p| has(p + 1)).collect();
    let to_end = |p: usize| (n - 1 + n - p) % n;
    match k {
        1 => {
            let p = set.iter().next().copied().unwrap();
            CycleSubdigraphClass {
                kind: CycleKind::K1,
                n,
                k,
                segments: Some((n - 1, 0)),
                rotation: to_end(p),
                ell: None,
            }
        }
        2 => {
            let (mut a, mut b) = (
                set.iter().next().copied().unwrap(),
                set.iter().nth(1).copied().unwrap(),
            );
            // Adjacent across the wrap-around: start from the later one.
            if (b + 1) % n == a {
                core::mem::swap(&mut a, &mut b);
            }
            let r = to_end(a);
            let ell = (b + r) % n;
            CycleSubdigraphClass {
                kind: CycleKind::D1,
                n,
                k,
                segments: Some((ell, n - 2 - ell)),
                rotation: r,
                ell: Some(ell),
            }
        }
        3 if starts.len() == 2 && n >= 4 || (n == 3 && k == 3) => {
            // a, a+1, a+2: the start whose predecessor is not asymmetric.
            let a = set.iter().copied().find(|&p| !has(p + n - 1)).unwrap_or(0);
            CycleSubdigraphClass {
                kind: CycleKind::D2,
                n,
                k,
                segments: Some((n - 3, 0)),
                rotation: to_end(a),
                ell: None,
            }
        }
        3 if starts.len() == 1 => {
            let a = starts[0];
            let r = to_end(a);
            let ell = set
                .iter()
                .map(|&p| (p + r) % n)
                .find(|&p| p != n - 1 && p != 0)
                .unwrap();
            if (2..=n.saturating_sub(3)).contains(&ell) {
                CycleSubdigraphClass {
                    kind: CycleKind::D3,
                    n,
                    k,
                    segments: Some((ell - 1, n - 2 - ell)),
                    rotation: r,
                    ell: Some(ell),
                }
            } else {
                other
            }
        }
        4 => {
            // Split into two disjoint consecutive pairs.
            for &a in &starts {
                let r = to_end(a);
                let rotated = rotate(asym, r, n);
                let rest: Vec<usize> = rotated
                    .iter()
                    .copied()
                    .filter(|&p| p != n - 1 && p != 0)
                    .collect();
                if rest.len() == 2 && rest[1] == rest[0] + 1 && rest[0] >= 1 && rest[1] <= n - 2 {
                    let ell = rest[0];
                    return CycleSubdigraphClass {
                        kind: CycleKind::D4,
                        n,
                        k,
                        segments: Some((ell - 1, n - 3 - ell)),
                        rotation: r,
                        ell: Some(ell),
                    };
                }
            }
            other
        }
        _ => other,
    }
}

/// Which parameter a construction targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleTarget {
    Rvc,
    Srvc,
}

/// Lays out 1-based canonical colours on the original labelling, 0-based.
fn place(cls: &CycleSubdigraphClass, canonical: &[u32]) -> VertexColouring {
    let n = cls.n;
    let mut colours = vec![0u32; n];
    for (j, &c) in canonical.iter().enumerate() {
        colours[cls.vertex_at(j)] = c - 1;
    }
    VertexColouring::from_colours(colours).compacted()
}

/// `c(v_i) = i` for `1 <= i <= upto`, positions 0 and beyond `upto` zero.
fn staircase(n: usize, upto: usize) -> Vec<u32> {
    (0..n)
        .map(|i| if (1..=upto).contains(&i) { i as u32 } else { 0 })
        .collect()
}

/// The colouring from the proof for `target`, with exactly the predicted
/// number of colours. When the prediction is `n`, the identity colouring.
pub fn predicted_cycle_colouring(d: &Digraph, target: CycleTarget) -> Result<VertexColouring> {
    let cls = classify_cycle_subdigraph(d)?;
    let n = cls.n;
    let identity = || VertexColouring::identity(n);
    if n == 3 && cls.kind != CycleKind::Other {
        return Ok(VertexColouring::constant(n));
    }
    let half_up = n.div_ceil(2) as u32;
    let h = n / 2;
    let seg_ok = |limit: usize| cls.segments.is_some_and(|(a, b)| a <= limit && b <= limit);
    let strong = target == CycleTarget::Srvc;

    let equation3 = |cls: &CycleSubdigraphClass| {
        let mut c = staircase(n, n - 2);
        let (last, first) = match (cls.kind, cls.ell) {
            (CycleKind::D1, Some(l)) if (1..=n - 3).contains(&l) => (l as u32, l as u32 + 1),
            _ => (1, 2),
        };
        c[n - 1] = last;
        c[0] = first;
        place(cls, &c)
    };

    Ok(match cls.kind {
        CycleKind::K1 => {
            let mut c = staircase(n, n - 2);
            c[0] = half_up;
            c[n - 1] = half_up - 1;
            place(&cls, &c)
        }
        CycleKind::D1 => {
            if !strong || n <= 8 || seg_ok(h + 1) {
                equation3(&cls)
            } else if let Some(rot) = d1_case_ii_rotation(&cls) {
                let l = rot.ell.unwrap();
                let mut c = staircase(n, n - 1);
                c[0] = if l == 0 { h as u32 } else { l as u32 };
                place(&rot, &c)
            } else {
                identity()
            }
        }
        CycleKind::D2 => {
            if !strong || n <= 8 {
                equation3(&cls)
            } else {
                identity()
            }
        }
        CycleKind::D3 => {
            let l = cls.ell.unwrap();
            let mut c = staircase(n, n - 1);
            if !strong {
                c[0] = l as u32 + 1;
                place(&cls, &c)
            } else if n <= 10 || seg_ok(h + 1) {
                let bump = (n <= 10 && l == 2) || (n >= 11 && l + 3 == half_up as usize);
                c[0] = if bump { l as u32 + 1 } else { l as u32 };
                place(&cls, &c)
            } else {
                identity()
            }
        }
        CycleKind::D4 if n == 4 => VertexColouring::from_colours((0..4).map(|i| i % 2).collect()),
        CycleKind::D4 => {
            if !strong || n <= 8 || seg_ok(h) {
                let mut c = staircase(n, n - 1);
                c[0] = cls.ell.unwrap() as u32 + 1;
                place(&cls, &c)
            } else {
                identity()
            }
        }
        CycleKind::Other => identity(),
    })
}

/// For a D1 instance, the rotation whose first segment lies in
/// `{0, ⌊n/2⌋+2}`, if any.
fn d1_case_ii_rotation(cls: &CycleSubdigraphClass) -> Option<CycleSubdigraphClass> {
    let n = cls.n;
    let (s, t) = cls.segments?;
    let target = |x: usize| x == 0 || x == n / 2 + 2;
    if target(s) {
        return Some(cls.clone());
    }
    if target(t) {
        // Swap roles: rotate so the other asymmetric position sits at n-1.
        let l = cls.ell?;
        let r = (cls.rotation + n - 1 - l) % n;
        return Some(CycleSubdigraphClass {
            segments: Some((t, s)),
            rotation: r,
            ell: Some(t),
            ..cls.clone()
        });
    }
    None
}

/// Components of `D - {u, v}` as vertex lists, via weak connectivity.
fn components_without(d: &Digraph, u: usize, v: usize) -> Vec<Vec<usize>> {
    let n = d.order();
    let mut seen = vec![false; n];
    seen[u] = true;
    seen[v] = true;
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let w = comp[i];
            for &z in d.out_neighbours(w).iter().chain(d.in_neighbours(w)) {
                if !seen[z] {
                    seen[z] = true;
                    comp.push(z);
                }
            }
            i += 1;
        }
        comps.push(comp);
    }
    comps
}

/// Length of `comp` when it induces a bioriented path whose internal
/// vertices have distinct colours.
fn rainbow_bioriented_path_length(
    d: &Digraph,
    comp: &[usize],
    c: &VertexColouring,
) -> Option<usize> {
    let inside = |z: &usize| comp.contains(z);
    let mut ends = Vec::new();
    for &w in comp {
        let outs: Vec<usize> = d.out_neighbours(w).iter().copied().filter(inside).collect();
        let ins: Vec<usize> = d.in_neighbours(w).iter().copied().filter(inside).collect();
        if outs != ins || outs.len() > 2 {
            return None;
        }
        if outs.len() <= 1 {
            ends.push(w);
        }
    }
    if comp.len() == 1 {
        return Some(0);
    }
    if ends.len() != 2 {
        return None;
    }
    let mut used = BTreeSet::new();
    for &w in comp {
        if !ends.contains(&w) && !used.insert(c.colour(w)) {
            return None;
        }
    }
    Some(comp.len() - 1)
}

/// The hypothesis of the two-component lemma: for every same-coloured pair
/// `{u, v}`, `D - {u, v}` consists of exactly two rainbow bioriented paths.
/// Returns the longest such path over all pairs (0 when no colour repeats),
/// or `None` when the hypothesis fails.
pub fn claim2_max_length(d: &Digraph, c: &VertexColouring) -> Option<usize> {
    let n = d.order();
    if c.len() != n {
        return None;
    }
    let mut longest = 0;
    for u in 0..n {
        for v in u + 1..n {
            if c.colour(u) != c.colour(v) {
                continue;
            }
            let comps = components_without(d, u, v);
            if comps.len() != 2 {
                return None;
            }
            for comp in &comps {
                longest = longest.max(rainbow_bioriented_path_length(d, comp, c)?);
            }
        }
    }
    Some(longest)
}

/// Whether the two-component hypothesis holds (which makes `c` rainbow
/// vertex-connected; with every path of length at most `⌊n/2⌋`, strongly).
pub fn check_claim2_condition(d: &Digraph, c: &VertexColouring) -> bool {
    claim2_max_length(d, c).is_some()
}
