//! Small hand-built digraphs separating `src` from `srvc` monotonicity and
//! `rc` from `rvc`.
//!
//! `H1`/`D1` ids: `0 x`, `1 y`, `2..=5` the middle vertices `m1..m4`
//! (top to bottom), then `u1 v1 u2 v2 u3 v3 u4 v4` as `6..=13`.
//!
//! `H2`/`D2` ids: `0 x`, `1 y`, `2..=5` left middle `L1..L4`, `6..=9`
//! right middle `R1..R4` (`R4 = z`), `10..=13` `w1..w4`, then
//! `u1 v1 u2 v2 u3 v3 u4 v4` as `14..=21`.

use alloc::vec::Vec;

use crate::{ArcColouring, Digraph, Error, Result, VertexColouring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma5 {
    H1,
    D1,
    H2,
    D2,
}

impl Lemma5 {
    pub const ALL: [Lemma5; 4] = [Lemma5::H1, Lemma5::D1, Lemma5::H2, Lemma5::D2];

    pub fn name(self) -> &'static str {
        match self {
            Lemma5::H1 => "H1",
            Lemma5::D1 => "D1",
            Lemma5::H2 => "H2",
            Lemma5::D2 => "D2",
        }
    }
}

impl core::str::FromStr for Lemma5 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lemma5::ALL
            .into_iter()
            .find(|w| w.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(alloc::format!("unknown digraph {s}")))
    }
}

pub mod h1 {
    pub const X: usize = 0;
    pub const Y: usize = 1;
    pub const M: [usize; 4] = [2, 3, 4, 5];
    pub const U: [usize; 4] = [6, 8, 10, 12];
    pub const V: [usize; 4] = [7, 9, 11, 13];
}

pub mod h2 {
    pub const X: usize = 0;
    pub const Y: usize = 1;
    pub const L: [usize; 4] = [2, 3, 4, 5];
    pub const R: [usize; 4] = [6, 7, 8, 9];
    pub const Z: usize = 9;
    pub const W: [usize; 4] = [10, 11, 12, 13];
    pub const U: [usize; 4] = [14, 16, 18, 20];
    pub const V: [usize; 4] = [15, 17, 19, 21];
}

fn both(a: usize, b: usize) -> [(usize, usize); 2] {
    [(a, b), (b, a)]
}

fn h1_arcs() -> Vec<(usize, usize)> {
    use h1::*;
    let mut arcs = Vec::new();
    for m in M {
        arcs.extend(both(X, m));
        arcs.extend(both(Y, m));
    }
    for i in 0..4 {
        let hub = if i < 2 { X } else { Y };
        arcs.extend([(hub, U[i]), (U[i], V[i]), (V[i], hub)]);
    }
    arcs
}

fn h2_arcs() -> Vec<(usize, usize)> {
    use h2::*;
    let mut arcs = Vec::new();
    for i in 0..4 {
        arcs.extend(both(L[i], R[i]));
        arcs.extend(both(X, L[i]));
        arcs.extend(both(Y, R[i]));
    }
    for (a, b) in [
        (X, W[0]),
        (X, W[1]),
        (W[0], W[1]),
        (Y, W[2]),
        (Y, W[3]),
        (W[2], W[3]),
    ] {
        arcs.extend(both(a, b));
    }
    for i in 0..4 {
        arcs.extend([(W[i], U[i]), (U[i], V[i]), (V[i], W[i])]);
    }
    arcs
}

pub fn lemma5(which: Lemma5) -> Digraph {
    let (n, mut arcs) = match which {
        Lemma5::H1 | Lemma5::D1 => (14, h1_arcs()),
        Lemma5::H2 | Lemma5::D2 => (22, h2_arcs()),
    };
    match which {
        Lemma5::D1 => arcs.push((h1::X, h1::Y)),
        Lemma5::D2 => arcs.push((h2::X, h2::Z)),
        _ => {}
    }
    Digraph::new(n, arcs).unwrap()
}

/// The 6-colour arc-colouring of `H1`: symmetric middle pairs share a
/// colour, `u_i v_i` gets colour `i`.
pub fn lemma5_h1_colouring() -> ArcColouring {
    use h1::*;
    let d = lemma5(Lemma5::H1);
    // Figure colours are 1-based.
    let colour = |a: usize, b: usize| -> u32 {
        if let Some(i) = U.iter().position(|&u| u == a) {
            return i as u32 + 1;
        }
        if V.contains(&a) {
            return 5;
        }
        if U.contains(&b) {
            return 6;
        }
        let (hub, m) = if a == X || a == Y { (a, b) } else { (b, a) };
        let j = M.iter().position(|&x| x == m).unwrap();
        if hub == X {
            [3, 4, 3, 4][j]
        } else {
            [1, 1, 2, 2][j]
        }
    };
    ArcColouring::from_fn(&d, |a, b| colour(a, b) - 1)
}

/// The 8-colour vertex-colouring of `H2`.
pub fn lemma5_h2_colouring() -> VertexColouring {
    let mut c = [0u32; 22];
    // 1-based figure colours.
    let w = [1, 2, 3, 4];
    for i in 0..4 {
        c[h2::W[i]] = w[i];
        c[h2::L[i]] = [3, 4, 3, 4][i];
        c[h2::R[i]] = [1, 1, 2, 2][i];
        c[h2::U[i]] = 7;
        c[h2::V[i]] = 8;
    }
    c[h2::X] = 5;
    c[h2::Y] = 6;
    VertexColouring::new(c.iter().map(|x| x - 1).collect(), 8).unwrap()
}

/// `t = C(s-1, 3) + 1` directed triangles `v x_i y_i` sharing `v = 0`;
/// `x_i = 2i - 1`, `y_i = 2i`.
pub fn lemma6_fan(s: usize) -> Result<Digraph> {
    if s < 4 {
        return Err(Error::InvalidParameter("fan needs s >= 4".into()));
    }
    let t = (s - 1) * (s - 2) * (s - 3) / 6 + 1;
    let arcs = (1..=t).flat_map(|i| [(0, 2 * i - 1), (2 * i - 1, 2 * i), (2 * i, 0)]);
    Digraph::new(2 * t + 1, arcs)
}

/// `c(v) = 1`, `c(x_i) = 2`, `c(y_i) = 3` as ids 0, 1, 2.
pub fn lemma6_fan_colouring(s: usize) -> Result<VertexColouring> {
    let n = lemma6_fan(s)?.order();
    let colours = (0..n)
        .map(|v| if v == 0 { 0 } else { 2 - (v % 2) as u32 })
        .collect();
    VertexColouring::new(colours, 3)
}

/// `↔K_s` on `u_i = i` with a pendant `v_i = s + i` at each vertex.
pub fn lemma6_pendant(s: usize) -> Result<Digraph> {
    if s < 2 {
        return Err(Error::InvalidParameter(
            "pendant construction needs s >= 2".into(),
        ));
    }
    let clique = (0..s).flat_map(|i| (i + 1..s).map(move |j| (i, j)));
    let pendants = (0..s).map(|i| (i, s + i));
    Digraph::biorient(2 * s, clique.chain(pendants))
}

/// `u_i -> v_i` colour 1, `v_i -> u_i` colour 2, clique arcs colour 3.
pub fn lemma6_pendant_arc_colouring(s: usize) -> Result<ArcColouring> {
    let d = lemma6_pendant(s)?;
    Ok(ArcColouring::from_fn(&d, |a, b| match (a < s, b < s) {
        (true, false) => 0,
        (false, true) => 1,
        _ => 2,
    }))
}

/// Distinct colours on the clique, pendants colour 0.
pub fn lemma6_pendant_vertex_colouring(s: usize) -> Result<VertexColouring> {
    let colours = (0..2 * s)
        .map(|v| if v < s { v as u32 } else { 0 })
        .collect();
    VertexColouring::new(colours, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_rc_colouring, is_rvc_colouring, is_src_colouring, is_srvc_colouring};

    #[test]
    fn h1_facts() {
        let h = lemma5(Lemma5::H1);
        assert_eq!((h.order(), h.arc_count()), (14, 28));
        assert_eq!(h.diameter(), Ok(6));
        let c = lemma5_h1_colouring();
        assert_eq!(c.colours_used(), 6);
        assert!(is_src_colouring(&h, &c).unwrap());
        let d = lemma5(Lemma5::D1);
        assert_eq!(d.count_geodesics(h1::V[0], h1::U[2]), Ok(1));
        assert_eq!(
            d.shortest_path(h1::V[0], h1::U[2]),
            Ok(alloc::vec![h1::V[0], h1::X, h1::Y, h1::U[2]])
        );
        assert!(h.is_spanning_subdigraph_of(&d));
    }

    #[test]
    fn h2_facts() {
        let h = lemma5(Lemma5::H2);
        assert_eq!((h.order(), h.arc_count()), (22, 48));
        assert_eq!(h.diameter(), Ok(9));
        let c = lemma5_h2_colouring();
        assert_eq!(c.colours_used(), 8);
        assert!(is_srvc_colouring(&h, &c).unwrap());
        let d = lemma5(Lemma5::D2);
        assert_eq!(d.count_geodesics(h2::U[0], h2::V[2]), Ok(1));
        use h2::*;
        let expect = alloc::vec![U[0], V[0], W[0], X, Z, Y, W[2], U[2], V[2]];
        assert_eq!(d.shortest_path(U[0], V[2]), Ok(expect));
    }

    #[test]
    fn lemma6_shapes() {
        let f = lemma6_fan(4).unwrap();
        assert_eq!((f.order(), f.arc_count(), f.diameter()), (5, 6, Ok(4)));
        assert_eq!(lemma6_fan(5).unwrap().order(), 2 * 5 + 1);
        assert!(is_srvc_colouring(&f, &lemma6_fan_colouring(4).unwrap()).unwrap());
        let p = lemma6_pendant(2).unwrap();
        assert_eq!(p.diameter(), Ok(3));
        for s in 2..6 {
            let p = lemma6_pendant(s).unwrap();
            let c = lemma6_pendant_arc_colouring(s).unwrap();
            assert!(is_src_colouring(&p, &c).unwrap() && is_rc_colouring(&p, &c).unwrap());
            let c = lemma6_pendant_vertex_colouring(s).unwrap();
            assert!(is_rvc_colouring(&p, &c).unwrap());
        }
        assert!(lemma6_fan(3).is_err() && lemma6_pendant(1).is_err());
    }
}
