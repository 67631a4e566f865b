//! Brute-force reference implementation for cross-checking the solver.
//!
//! Nothing here is shared with [`crate::solver`] or [`crate::verify`]: paths
//! are listed explicitly by enumerating every simple path, geodesics are the
//! shortest of those, and colourings are enumerated as all `K^N` tuples.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Digraph, Error, Parameter, Result};

/// Largest vertex count accepted for `rvc`/`srvc`.
pub const MAX_VERTICES: usize = 8;
/// Largest arc count accepted for `rc`/`src`.
pub const MAX_ARCS: usize = 14;

/// For one ordered pair: the element lists (internal vertices, or arc
/// indices) of the candidate paths.
struct PairPaths {
    candidates: Vec<Vec<usize>>,
}

fn all_simple_paths(d: &Digraph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn go(
        d: &Digraph,
        path: &mut Vec<usize>,
        on: &mut [bool],
        v: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let w = *path.last().unwrap();
        if w == v {
            out.push(path.clone());
            return;
        }
        for &z in d.out_neighbours(w) {
            if !on[z] {
                on[z] = true;
                path.push(z);
                go(d, path, on, v, out);
                path.pop();
                on[z] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; d.order()];
    on[u] = true;
    go(d, &mut vec![u], &mut on, v, &mut out);
    out
}

fn arc_position(d: &Digraph, a: usize, b: usize) -> usize {
    d.arcs().iter().position(|&x| x == (a, b)).unwrap()
}

fn pair_table(d: &Digraph, param: Parameter) -> Result<Vec<PairPaths>> {
    let n = d.order();
    let mut table = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let mut paths = all_simple_paths(d, u, v);
            if paths.is_empty() {
                return Err(Error::NotStronglyConnected);
            }
            if param.is_strong() {
                let shortest = paths.iter().map(Vec::len).min().unwrap();
                paths.retain(|p| p.len() == shortest);
            }
            let candidates = paths
                .into_iter()
                .map(|p| {
                    if param.is_arc() {
                        p.windows(2).map(|w| arc_position(d, w[0], w[1])).collect()
                    } else {
                        p[1..p.len() - 1].to_vec()
                    }
                })
                .collect();
            table.push(PairPaths { candidates });
        }
    }
    Ok(table)
}

fn all_distinct(elements: &[usize], colours: &[usize]) -> bool {
    for i in 0..elements.len() {
        for j in 0..i {
            if colours[elements[i]] == colours[elements[j]] {
                return false;
            }
        }
    }
    true
}

fn valid(table: &[PairPaths], colours: &[usize]) -> bool {
    table
        .iter()
        .all(|p| p.candidates.iter().any(|c| all_distinct(c, colours)))
}

fn guard(d: &Digraph, param: Parameter) -> Result<usize> {
    let (elements, limit) = if param.is_arc() {
        (d.arc_count(), MAX_ARCS)
    } else {
        (d.order(), MAX_VERTICES)
    };
    if elements > limit {
        return Err(Error::OracleGuard { elements, limit });
    }
    Ok(elements)
}

/// Whether some colouring with colours `0..k` makes `d` satisfy `param`.
///
/// With `k = 0` only paths without colourable elements count: vertex
/// versions then need every pair adjacent, arc versions need no pairs.
pub fn oracle_value(d: &Digraph, param: Parameter, k: usize) -> Result<bool> {
    let elements = guard(d, param)?;
    let table = pair_table(d, param)?;
    if k == 0 {
        return Ok(table.iter().all(|p| p.candidates.iter().any(Vec::is_empty)));
    }
    let mut colours = vec![0usize; elements];
    loop {
        if valid(&table, &colours) {
            return Ok(true);
        }
        // Odometer step over k^elements tuples.
        let mut i = 0;
        loop {
            if i == elements {
                return Ok(false);
            }
            colours[i] += 1;
            if colours[i] < k {
                break;
            }
            colours[i] = 0;
            i += 1;
        }
    }
}

/// Smallest `k` with [`oracle_value`] true.
pub fn oracle_minimum(d: &Digraph, param: Parameter) -> Result<usize> {
    let elements = guard(d, param)?;
    for k in 0..=elements {
        if oracle_value(d, param, k)? {
            return Ok(k);
        }
    }
    Err(Error::Internal(alloc::string::String::from(
        "distinct colouring rejected",
    )))
}

/// Checks one colouring (vertex colours or colours in sorted arc order).
pub fn oracle_check(d: &Digraph, param: Parameter, colours: &[u32]) -> Result<bool> {
    let elements = guard(d, param)?;
    if colours.len() != elements {
        return Err(Error::SizeMismatch {
            expected: elements,
            found: colours.len(),
        });
    }
    let table = pair_table(d, param)?;
    let wide: Vec<usize> = colours.iter().map(|&c| c as usize).collect();
    Ok(valid(&table, &wide))
}
