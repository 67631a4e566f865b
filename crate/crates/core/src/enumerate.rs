//! Exhaustive small-order enumeration: digraphs up to isomorphism and
//! labelled tournaments.
//!
//! A digraph on `n <= 8` vertices is packed into a `u64` code with bit
//! `u * n + v` set for each arc `u -> v`. The canonical code of a digraph is
//! the code of its relabelling with the smallest search key, taken over the
//! relabellings that respect an iterated degree refinement.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Digraph, Error, Result};

/// Largest order accepted by the code functions.
pub const MAX_CODE_ORDER: usize = 8;
/// Largest order for [`digraph_class_codes`]; `n = 7` has about 8.8e8
/// classes.
pub const MAX_CLASS_ORDER: usize = 6;

type Rows = [u8; MAX_CODE_ORDER];

fn rows_of(n: usize, code: u64) -> Rows {
    let mut rows = [0u8; MAX_CODE_ORDER];
    for (u, row) in rows.iter_mut().enumerate().take(n) {
        *row = ((code >> (u * n)) & ((1 << n) - 1)) as u8;
    }
    rows
}

fn code_of(n: usize, rows: &Rows) -> u64 {
    (0..n).fold(0, |acc, u| acc | (rows[u] as u64) << (u * n))
}

/// The code of `d`, which must have at most [`MAX_CODE_ORDER`] vertices.
pub fn code(d: &Digraph) -> Result<u64> {
    let n = d.order();
    if n > MAX_CODE_ORDER {
        return Err(Error::InvalidParameter(alloc::format!(
            "codes need n <= {MAX_CODE_ORDER}"
        )));
    }
    Ok(d.arcs()
        .iter()
        .fold(0, |acc, &(u, v)| acc | 1 << (u * n + v)))
}

pub fn digraph_from_code(n: usize, code: u64) -> Result<Digraph> {
    if n == 0 || n > MAX_CODE_ORDER {
        return Err(Error::InvalidParameter(alloc::format!(
            "codes need 1 <= n <= {MAX_CODE_ORDER}"
        )));
    }
    let rows = rows_of(n, code);
    if (0..n).any(|u| rows[u] >> u & 1 == 1) || code >> (n * n) != 0 {
        return Err(Error::InvalidParameter(
            "code has a loop or an out-of-range bit".into(),
        ));
    }
    let arcs = (0..n).flat_map(|u| {
        (0..n)
            .filter(move |&v| rows[u] >> v & 1 == 1)
            .map(move |v| (u, v))
    });
    Digraph::new(n, arcs)
}

/// Strong connectivity of a coded digraph, by forward and backward
/// reachability from vertex 0.
pub fn code_is_strong(n: usize, code: u64) -> bool {
    let rows = rows_of(n, code);
    let mut cols = [0u8; MAX_CODE_ORDER];
    for u in 0..n {
        for (v, col) in cols.iter_mut().enumerate().take(n) {
            *col |= (rows[u] >> v & 1) << u;
        }
    }
    let full = ((1u16 << n) - 1) as u8;
    let reach = |adj: &Rows| {
        let mut seen = 1u8;
        let mut frontier = 1u8;
        while frontier != 0 {
            let mut next = 0;
            for u in 0..n {
                if frontier >> u & 1 == 1 {
                    next |= adj[u];
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    };
    reach(&rows) && reach(&cols)
}

/// Vertex cells after iterated refinement by out- and in-neighbour colour
/// counts, listed in an isomorphism-invariant order.
fn refined_cells(n: usize, rows: &Rows) -> Vec<Vec<usize>> {
    let mut colour = [0usize; MAX_CODE_ORDER];
    let mut cells = 1;
    loop {
        let mut keys = [(0u64, 0usize); MAX_CODE_ORDER];
        for u in 0..n {
            let mut key = colour[u] as u64;
            for v in 0..n {
                if rows[u] >> v & 1 == 1 {
                    key += 1 << (8 + 3 * colour[v]);
                }
                if rows[v] >> u & 1 == 1 {
                    key += 1 << (32 + 3 * colour[v]);
                }
            }
            keys[u] = (key, u);
        }
        let mut sorted: Vec<u64> = keys[..n].iter().map(|k| k.0).collect();
        sorted.sort_unstable();
        sorted.dedup();
        for u in 0..n {
            colour[u] = sorted.binary_search(&keys[u].0).unwrap();
        }
        if sorted.len() == cells {
            break;
        }
        cells = sorted.len();
    }
    let mut out = vec![Vec::new(); cells];
    for u in 0..n {
        out[colour[u]].push(u);
    }
    out
}

/// Bit of the search key for the pair of positions `(a, b)`: pairs are
/// ranked by `max(a, b)`, then `a`, then `b`, with rank 0 the most
/// significant bit. Fixing positions `0..=p` fixes the top `p(p+1)` bits.
fn key_bit(a: usize, b: usize) -> u32 {
    let m = a.max(b);
    let rank = m * (m - 1) + if a == m { b } else { m + a };
    63 - rank as u32
}

/// The canonical code of a coded digraph: the code of the relabelling that
/// minimises the search key.
pub fn canonical_code(n: usize, code: u64) -> u64 {
    let rows = rows_of(n, code);
    let cells = refined_cells(n, &rows);
    let slots: Vec<usize> = cells
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().map(move |_| i))
        .collect();
    let mut s = Search {
        n,
        rows: &rows,
        cells: &cells,
        slots: &slots,
        order: [0; MAX_CODE_ORDER],
        used: 0,
        best: u64::MAX,
        best_order: [0; MAX_CODE_ORDER],
    };
    s.run(0, 0);
    let mut out = [0u8; MAX_CODE_ORDER];
    for p in 0..n {
        for q in 0..n {
            out[p] |= (rows[s.best_order[p]] >> s.best_order[q] & 1) << q;
        }
    }
    code_of(n, &out)
}

struct Search<'a> {
    n: usize,
    rows: &'a Rows,
    cells: &'a [Vec<usize>],
    slots: &'a [usize],
    order: [usize; MAX_CODE_ORDER],
    used: u8,
    best: u64,
    best_order: [usize; MAX_CODE_ORDER],
}

impl Search<'_> {
    /// Fills position `p` with each unused vertex of its cell, cutting
    /// branches whose fixed key bits already exceed the best key.
    fn run(&mut self, p: usize, key: u64) {
        if p == self.n {
            if key < self.best {
                self.best = key;
                self.best_order = self.order;
            }
            return;
        }
        let mask = if p == 0 {
            0
        } else {
            !0u64 << (64 - p * (p + 1))
        };
        for &v in &self.cells[self.slots[p]] {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut next = key;
            for q in 0..p {
                let w = self.order[q];
                next |= ((self.rows[w] >> v & 1) as u64) << key_bit(q, p);
                next |= ((self.rows[v] >> w & 1) as u64) << key_bit(p, q);
            }
            if next & mask > self.best & mask {
                continue;
            }
            self.order[p] = v;
            self.used |= 1 << v;
            self.run(p + 1, next);
            self.used &= !(1 << v);
        }
    }
}

/// Canonical codes of every digraph on `n` vertices up to isomorphism,
/// sorted. Each class on `n` vertices is reached by adding one vertex to a
/// class on `n - 1` vertices in every possible way.
pub fn digraph_class_codes(n: usize) -> Result<Vec<u64>> {
    if n == 0 || n > MAX_CLASS_ORDER {
        return Err(Error::InvalidParameter(alloc::format!(
            "class enumeration needs 1 <= n <= {MAX_CLASS_ORDER}"
        )));
    }
    let mut classes = vec![0u64];
    for m in 2..=n {
        let mut next = Vec::new();
        for &c in &classes {
            let old = rows_of(m - 1, c);
            for out in 0u8..1 << (m - 1) {
                for inn in 0u8..1 << (m - 1) {
                    let mut rows = [0u8; MAX_CODE_ORDER];
                    for u in 0..m - 1 {
                        rows[u] = old[u] | (inn >> u & 1) << (m - 1);
                    }
                    rows[m - 1] = out;
                    next.push(canonical_code(m, code_of(m, &rows)));
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        classes = next;
    }
    Ok(classes)
}

/// Canonical codes of the strongly connected classes on `n` vertices.
pub fn strong_class_codes(n: usize) -> Result<Vec<u64>> {
    let mut codes = digraph_class_codes(n)?;
    codes.retain(|&c| code_is_strong(n, c));
    Ok(codes)
}

/// Every labelled tournament on `n` vertices: bit `i` of the index orients
/// the `i`-th pair `(u, v)`, `u < v`, in lexicographic order, as `u -> v`
/// when set.
pub fn tournaments(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    if !(1..=MAX_CODE_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(alloc::format!(
            "tournament enumeration needs 1 <= n <= {MAX_CODE_ORDER}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |bits| {
        let arcs = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if bits >> i & 1 == 1 { (u, v) } else { (v, u) });
        Digraph::new(n, arcs).unwrap()
    }))
}

/// The strongly connected labelled tournaments on `n` vertices.
pub fn strong_tournaments(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    Ok(tournaments(n)?.filter(Digraph::is_strongly_connected))
}
