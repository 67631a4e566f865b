//! Simple digraphs on dense vertex ids `0..n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A finite simple digraph: no loops, no parallel arcs.
///
/// Arcs are kept sorted by `(tail, head)`. The out-arcs of a vertex are
/// therefore a contiguous run of the arc list, which is what gives every arc
/// its stable index (the order used by arc colourings and colouring files).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out_start: Vec<usize>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl Digraph {
    /// Builds a digraph, collapsing duplicate arcs.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyDigraph);
        }
        let mut list = Vec::new();
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        list.dedup();

        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for row in &mut in_adj {
            row.sort_unstable();
        }
        let mut out_start = Vec::with_capacity(n + 1);
        let mut acc = 0;
        for row in &out_adj {
            out_start.push(acc);
            acc += row.len();
        }
        out_start.push(acc);
        Ok(Digraph {
            n,
            arcs: list,
            out_start,
            out_adj,
            in_adj,
        })
    }

    /// Replaces each undirected edge by a pair of symmetric arcs.
    pub fn biorient<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut arcs = Vec::new();
        for (u, v) in edges {
            arcs.push((u, v));
            arcs.push((v, u));
        }
        Digraph::new(n, arcs)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in ascending `(tail, head)` order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbours(&self, u: usize) -> &[usize] {
        &self.out_adj[u]
    }

    pub fn in_neighbours(&self, u: usize) -> &[usize] {
        &self.in_adj[u]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_adj[u].len()
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.in_adj[u].len()
    }

    /// Index of the first out-arc of `u` in [`Digraph::arcs`].
    pub fn out_arc_offset(&self, u: usize) -> usize {
        self.out_start[u]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out_adj[u].binary_search(&v).is_ok()
    }

    pub fn arc_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n {
            return None;
        }
        self.out_adj[u]
            .binary_search(&v)
            .ok()
            .map(|i| self.out_start[u] + i)
    }

    /// `(u, v)` is asymmetric when `(v, u)` is absent.
    pub fn is_symmetric_arc(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    /// Every unordered pair carries exactly one arc.
    pub fn is_tournament(&self) -> bool {
        self.arcs.len() == self.n * (self.n - 1) / 2
            && self.arcs.iter().all(|&(u, v)| !self.has_arc(v, u))
    }

    /// True when every arc of `self` is an arc of `other` on the same vertices.
    pub fn is_spanning_subdigraph_of(&self, other: &Digraph) -> bool {
        self.n == other.n && self.arcs.iter().all(|&(u, v)| other.has_arc(u, v))
    }

    /// Copy with `(u, v)` removed; absent arcs are a no-op.
    pub fn without_arc(&self, u: usize, v: usize) -> Digraph {
        let arcs = self.arcs.iter().copied().filter(|&a| a != (u, v));
        Digraph::new(self.n, arcs).expect("subset of a valid arc set")
    }

    pub fn with_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        let arcs = self.arcs.iter().copied().chain(core::iter::once((u, v)));
        Digraph::new(self.n, arcs)
    }

    /// Breadth-first distances from `u`; `None` marks unreachable vertices.
    pub fn distances_from(&self, u: usize) -> Vec<Option<usize>> {
        bfs(&self.out_adj, u)
    }

    /// Distances into `v` (BFS on the reversed arcs).
    pub fn distances_to(&self, v: usize) -> Vec<Option<usize>> {
        bfs(&self.in_adj, v)
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let mut d = vec![DistanceMatrix::UNREACHABLE; self.n * self.n];
        for u in 0..self.n {
            for (v, dv) in self.distances_from(u).into_iter().enumerate() {
                if let Some(x) = dv {
                    d[u * self.n + v] = x as u32;
                }
            }
        }
        DistanceMatrix { n: self.n, d }
    }

    pub fn is_strongly_connected(&self) -> bool {
        let all = |row: Vec<Option<usize>>| row.iter().all(Option::is_some);
        all(self.distances_from(0)) && all(self.distances_to(0))
    }

    /// Maximum distance over ordered pairs. Fails when some pair is
    /// unreachable.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for u in 0..self.n {
            for d in self.distances_from(u) {
                best = best.max(d.ok_or(Error::NotStronglyConnected)?);
            }
        }
        Ok(best)
    }

    /// Eccentricity of `u`: its largest out-distance.
    pub fn eccentricity(&self, u: usize) -> Result<usize> {
        let mut best = 0;
        for (v, d) in self.distances_from(u).into_iter().enumerate() {
            best = best.max(d.ok_or(Error::Unreachable { from: u, to: v })?);
        }
        Ok(best)
    }

    /// Number of distinct shortest `u`-`v` paths. Saturates at `u64::MAX`.
    pub fn count_geodesics(&self, u: usize, v: usize) -> Result<u64> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        let mut dist = vec![usize::MAX; self.n];
        let mut count = vec![0u64; self.n];
        let mut queue = VecDeque::new();
        dist[u] = 0;
        count[u] = 1;
        queue.push_back(u);
        while let Some(w) = queue.pop_front() {
            for &z in &self.out_adj[w] {
                if dist[z] == usize::MAX {
                    dist[z] = dist[w] + 1;
                    queue.push_back(z);
                }
                if dist[z] == dist[w] + 1 {
                    count[z] = count[z].saturating_add(count[w]);
                }
            }
        }
        if dist[v] == usize::MAX {
            return Err(Error::Unreachable { from: u, to: v });
        }
        Ok(count[v])
    }

    /// One shortest `u`-`v` path, BFS-parent canonical: every vertex keeps
    /// the first (lowest-id among the earliest layer) discoverer as parent.
    pub fn shortest_path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        seen[u] = true;
        queue.push_back(u);
        while let Some(w) = queue.pop_front() {
            if w == v {
                break;
            }
            for &z in &self.out_adj[w] {
                if !seen[z] {
                    seen[z] = true;
                    parent[z] = w;
                    queue.push_back(z);
                }
            }
        }
        if !seen[v] {
            return Err(Error::Unreachable { from: u, to: v });
        }
        let mut path = vec![v];
        let mut w = v;
        while w != u {
            w = parent[w];
            path.push(w);
        }
        path.reverse();
        Ok(path)
    }

    /// Replaces `u` by a copy of `h`, fanning every arc at `u` out to all of
    /// the copy.
    ///
    /// Ids: vertices of `self` keep theirs; vertex 0 of `h` takes id `u` and
    /// vertex `j >= 1` of `h` takes id `n + j - 1`.
    pub fn expand_vertex(&self, u: usize, h: &Digraph) -> Result<Digraph> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.n,
            });
        }
        let n = self.n;
        let map = |j: usize| if j == 0 { u } else { n + j - 1 };
        let mut arcs = Vec::new();
        for &(x, y) in &self.arcs {
            if x == u {
                arcs.extend((0..h.n).map(|j| (map(j), y)));
            } else if y == u {
                arcs.extend((0..h.n).map(|j| (x, map(j))));
            } else {
                arcs.push((x, y));
            }
        }
        arcs.extend(h.arcs.iter().map(|&(a, b)| (map(a), map(b))));
        Digraph::new(n + h.n - 1, arcs)
    }

    /// `D ∘ H`: every vertex of `self` expanded to `h`. Vertex `(d, j)` gets
    /// id `d * |H| + j`.
    pub fn lexicographic_product(&self, h: &Digraph) -> Digraph {
        let hn = h.n;
        let mut arcs = Vec::new();
        for &(x, y) in &self.arcs {
            for a in 0..hn {
                for b in 0..hn {
                    arcs.push((x * hn + a, y * hn + b));
                }
            }
        }
        for d in 0..self.n {
            arcs.extend(h.arcs.iter().map(|&(a, b)| (d * hn + a, d * hn + b)));
        }
        Digraph::new(self.n * hn, arcs).expect("product of valid digraphs")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        if perm.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        Digraph::new(self.n, self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

fn bfs(adj: &[Vec<usize>], src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    let mut queue = VecDeque::new();
    dist[src] = Some(0);
    queue.push_back(src);
    while let Some(w) = queue.pop_front() {
        let next = dist[w].map(|d| d + 1);
        for &z in &adj[w] {
            if dist[z].is_none() {
                dist[z] = next;
                queue.push_back(z);
            }
        }
    }
    dist
}

/// All-pairs hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    const UNREACHABLE: u32 = u32::MAX;

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.d[u * self.n + v] {
            Self::UNREACHABLE => None,
            x => Some(x as usize),
        }
    }

    pub(crate) fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn is_complete(&self) -> bool {
        !self.d.contains(&Self::UNREACHABLE)
    }

    pub fn max(&self) -> Option<usize> {
        if self.is_complete() {
            self.d.iter().map(|&x| x as usize).max()
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Digraph {
        let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
        Digraph::new(n, arcs).unwrap()
    }

    fn bi_cycle(n: usize) -> Digraph {
        Digraph::biorient(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn build_examples() {
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.arc_count(), 3);
        let k1 = Digraph::new(1, []).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.arc_count(), 0);
        let dup = Digraph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(dup.arc_count(), 1);
    }

    #[test]
    fn build_errors() {
        assert_eq!(Digraph::new(2, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Digraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Digraph::new(0, []), Err(Error::EmptyDigraph));
        assert_eq!(Digraph::biorient(3, [(2, 2)]), Err(Error::Loop(2)));
    }

    #[test]
    fn adjacency_mirrors_arcs() {
        let d = Digraph::new(4, [(3, 0), (0, 2), (0, 1), (2, 0), (1, 3)]).unwrap();
        assert_eq!(d.arcs(), &[(0, 1), (0, 2), (1, 3), (2, 0), (3, 0)]);
        assert_eq!(d.out_neighbours(0), &[1, 2]);
        assert_eq!(d.in_neighbours(0), &[2, 3]);
        assert_eq!(d.arc_index(2, 0), Some(3));
        assert_eq!(d.arc_index(0, 3), None);
        assert_eq!(d.out_arc_offset(3), 4);
    }

    #[test]
    fn strong_connectivity() {
        assert!(directed_cycle(3).is_strongly_connected());
        assert!(!Digraph::new(2, [(0, 1)]).unwrap().is_strongly_connected());
        let p4 = Digraph::biorient(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_strongly_connected());
        assert!(Digraph::new(1, []).unwrap().is_strongly_connected());
    }

    #[test]
    fn distances() {
        let c5 = directed_cycle(5);
        let row: Vec<_> = c5
            .distances_from(0)
            .into_iter()
            .map(Option::unwrap)
            .collect();
        assert_eq!(row, vec![0, 1, 2, 3, 4]);
        let k4 = complete(4);
        let row: Vec<_> = k4
            .distances_from(0)
            .into_iter()
            .map(Option::unwrap)
            .collect();
        assert_eq!(row, vec![0, 1, 1, 1]);
        // C7({1,2}): 0 -> 6 needs three 2-jumps
        let c7 =
            Digraph::new(7, (0..7).flat_map(|i| [(i, (i + 1) % 7), (i, (i + 2) % 7)])).unwrap();
        assert_eq!(c7.distances_from(0)[6], Some(3));
        let one_way = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(one_way.distances_from(1)[0], None);
    }

    #[test]
    fn diameters() {
        for n in 2..7 {
            assert_eq!(complete(n).diameter(), Ok(1));
        }
        for n in 3..9 {
            assert_eq!(directed_cycle(n).diameter(), Ok(n - 1));
        }
        assert_eq!(bi_cycle(4).diameter(), Ok(2));
        assert_eq!(
            Digraph::new(2, [(0, 1)]).unwrap().diameter(),
            Err(Error::NotStronglyConnected)
        );
    }

    #[test]
    fn biorientation_examples() {
        let p3 = Digraph::biorient(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.arc_count(), 4);
        let c4 = bi_cycle(4);
        assert_eq!(c4.arc_count(), 8);
        let star = Digraph::biorient(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.arc_count(), 6);
        assert_eq!(star.diameter(), Ok(2));
    }

    #[test]
    fn expansion_examples() {
        let c3 = directed_cycle(3);
        let k2 = complete(2);
        let d4 = c3.expand_vertex(0, &k2).unwrap();
        assert_eq!(d4.order(), 4);
        assert_eq!(d4.diameter(), Ok(2));
        // vertex 0 of K2 keeps id 0, vertex 1 becomes 3
        assert!(d4.has_arc(0, 3) && d4.has_arc(3, 0));
        assert!(d4.has_arc(3, 1) && d4.has_arc(2, 3));

        let single = Digraph::new(1, []).unwrap();
        assert_eq!(c3.expand_vertex(1, &single).unwrap(), c3);

        let k3 = k2.expand_vertex(0, &k2).unwrap();
        assert_eq!(k3.arc_count(), 6);
        assert_eq!(k3.diameter(), Ok(1));
    }

    #[test]
    fn product_examples() {
        let c3 = directed_cycle(3);
        let single = Digraph::new(1, []).unwrap();
        assert_eq!(c3.lexicographic_product(&single), c3);
        assert_eq!(single.lexicographic_product(&c3), c3);
        let p = c3.lexicographic_product(&complete(2));
        assert_eq!(p.order(), 6);
        assert_eq!(p.arc_count(), 18);
    }

    #[test]
    fn geodesic_counts() {
        assert_eq!(bi_cycle(4).count_geodesics(0, 2), Ok(2));
        let c5 = directed_cycle(5);
        assert_eq!(c5.count_geodesics(0, 4), Ok(1));
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(c5.count_geodesics(u, v), Ok(1));
            }
        }
        let one_way = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(
            one_way.count_geodesics(1, 0),
            Err(Error::Unreachable { from: 1, to: 0 })
        );
    }

    #[test]
    fn canonical_shortest_path() {
        let c = bi_cycle(6);
        assert_eq!(c.shortest_path(0, 3).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(c.shortest_path(2, 2).unwrap(), vec![2]);
    }

    #[test]
    fn tournament_and_subdigraph_predicates() {
        let t = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(t.is_tournament());
        assert!(!bi_cycle(3).is_tournament());
        assert!(t.is_spanning_subdigraph_of(&bi_cycle(3)));
        assert!(!bi_cycle(3).is_spanning_subdigraph_of(&t));
    }
}
