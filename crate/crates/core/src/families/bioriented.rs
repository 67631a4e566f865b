//! Biorientations of paths, cycles, wheels, stars and complete
//! (multipartite) graphs.

use alloc::vec::Vec;

use crate::{Digraph, Error, Result, VertexColouring};

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what.into()))
    }
}

/// `↔P_n` on `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Digraph> {
    need(n >= 2, "path needs n >= 2")?;
    Digraph::biorient(n, (1..n).map(|i| (i - 1, i)))
}

/// `↔C_n` with `v_i ~ v_{i+1 mod n}`.
pub fn cycle(n: usize) -> Result<Digraph> {
    need(n >= 3, "cycle needs n >= 3")?;
    Digraph::biorient(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `↔W_n`: the rim `↔C_n` on `0..n` plus the hub `n`.
pub fn wheel(n: usize) -> Result<Digraph> {
    need(n >= 3, "wheel needs n >= 3")?;
    let rim = (0..n).map(|i| (i, (i + 1) % n));
    let spokes = (0..n).map(|i| (i, n));
    Digraph::biorient(n + 1, rim.chain(spokes))
}

/// `↔K_n`.
pub fn complete(n: usize) -> Result<Digraph> {
    need(n >= 1, "complete graph needs n >= 1")?;
    Digraph::biorient(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `↔K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Result<Digraph> {
    need(leaves >= 1, "star needs a leaf")?;
    Digraph::biorient(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// `↔K_{n_1,...,n_t}`; class `j` occupies a contiguous id block in order.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Digraph> {
    need(
        sizes.len() >= 2,
        "complete multipartite graph needs two classes",
    )?;
    need(sizes.iter().all(|&s| s >= 1), "empty class")?;
    let mut class = Vec::new();
    for (j, &s) in sizes.iter().enumerate() {
        class.extend(std::iter::repeat_n(j, s));
    }
    let n = class.len();
    let class = &class;
    let edges = (0..n).flat_map(|u| {
        (u + 1..n)
            .filter(move |&v| class[u] != class[v])
            .map(move |v| (u, v))
    });
    Digraph::biorient(n, edges)
}

/// The alternating colouring `1,2,1,2,...` ending in a third colour, as
/// used for `↔C_7`, or the two half-runs `1..⌈n/2⌉, 1..⌊n/2⌋` used for
/// `n = 11` and `n >= 13`. Colour ids are 0-based.
pub fn cycle_colouring(n: usize) -> Result<VertexColouring> {
    if n == 7 {
        return VertexColouring::new(alloc::vec![0, 1, 0, 1, 0, 1, 2], 3);
    }
    need(n == 11 || n >= 13, "no half-run colouring for this order")?;
    let h = n.div_ceil(2);
    let colours = (0..n)
        .map(|i| if i < h { i } else { i - h } as u32)
        .collect();
    VertexColouring::new(colours, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_diameters() {
        assert_eq!(path(3).unwrap().arc_count(), 4);
        let c4 = cycle(4).unwrap();
        assert_eq!((c4.arc_count(), c4.diameter()), (8, Ok(2)));
        let w5 = wheel(5).unwrap();
        assert_eq!((w5.order(), w5.arc_count(), w5.diameter()), (6, 20, Ok(2)));
        let k22 = complete_multipartite(&[2, 2]).unwrap();
        assert_eq!((k22.arc_count(), k22.diameter()), (8, Ok(2)));
        assert_eq!(star(3).unwrap().arc_count(), 6);
        assert_eq!(complete(5).unwrap().diameter(), Ok(1));
        assert_eq!(wheel(3).unwrap(), complete(4).unwrap());
    }

    #[test]
    fn ranges() {
        assert!(path(1).is_err());
        assert!(cycle(2).is_err());
        assert!(complete_multipartite(&[3]).is_err());
        assert!(cycle_colouring(12).is_err());
    }

    #[test]
    fn half_run_colouring() {
        let c = cycle_colouring(13).unwrap();
        assert_eq!(c.palette(), 7);
        assert_eq!(&c.colours()[5..9], &[5, 6, 0, 1]);
        assert_eq!(cycle_colouring(11).unwrap().palette(), 6);
    }
}
