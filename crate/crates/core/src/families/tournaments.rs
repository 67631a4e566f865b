//! Tournaments: the small named ones, `T_{n,k}`, random sampling and the
//! two colourings that bound `srvc` and `rvc` from above.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Digraph, Error, Result, VertexColouring};

/// Attempts made by [`diameter_two_tournament`] before giving up.
pub const DIAM2_ATTEMPTS: usize = 100_000;

/// `T_4`: `C→_4` plus `v0 -> v2` and `v1 -> v3`.
pub fn t4() -> Digraph {
    Digraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap()
}

/// `T_{5,1}`: the cycles `v0 v1 v2 v3 v4` and `v0 v3 v1 v4 v2`.
pub fn t5_1() -> Digraph {
    let a = [0, 1, 2, 3, 4];
    let b = [0, 3, 1, 4, 2];
    let arcs = (0..5).flat_map(|i| [(a[i], a[(i + 1) % 5]), (b[i], b[(i + 1) % 5])]);
    Digraph::new(5, arcs).unwrap()
}

/// Transitive tournament: `i -> j` for `i < j`.
pub fn transitive_tournament(n: usize) -> Result<Digraph> {
    Digraph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `T_{k+2,k}` on `v_0 .. v_{k+1}`: the path `v_i -> v_{i+1}` and every
/// backward arc `v_j -> v_i` with `j - i >= 2`.
fn t_k2_k(k: usize) -> Result<Digraph> {
    let m = k + 2;
    let forward = (0..=k).map(|i| (i, i + 1));
    let backward = (0..m).flat_map(|i| (i + 2..m).map(move |j| (j, i)));
    Digraph::new(m, forward.chain(backward))
}

/// `T_{n,k}` for `k >= 2`, `n >= k+2`: `T_{k+2,k}` with `v_0` expanded to a
/// transitive tournament on `n-k-1` vertices (ids `0` and `k+2..n`).
/// For `k = 1` use [`t_n_1`].
pub fn t_nk(n: usize, k: usize) -> Result<Digraph> {
    if k < 2 || n < k + 2 {
        return Err(Error::InvalidParameter(
            "T_{n,k} needs k >= 2 and n >= k+2".into(),
        ));
    }
    let base = t_k2_k(k)?;
    base.expand_vertex(0, &transitive_tournament(n - k - 1)?)
}

/// `T_{n,k}` with an arbitrary tournament `t` on `n-k-1` vertices in place of
/// the transitive one.
pub fn t_nk_with(k: usize, t: &Digraph) -> Result<Digraph> {
    if k < 2 || !t.is_tournament() {
        return Err(Error::InvalidParameter(
            "T_{n,k} needs k >= 2 and a tournament".into(),
        ));
    }
    t_k2_k(k)?.expand_vertex(0, t)
}

/// A tournament on `n >= 5` vertices with `rvc = 1`: `T_{5,1}` for `n = 5`,
/// a seeded diameter-two search otherwise.
pub fn t_n_1(n: usize, seed: u64) -> Result<Digraph> {
    match n {
        5 => Ok(t5_1()),
        _ if n >= 6 => diameter_two_tournament(n, seed),
        _ => Err(Error::InvalidParameter("T_{n,1} needs n >= 5".into())),
    }
}

/// The colouring `c(v_i) = i` (`1 <= i <= k`), colour 1 on `v_{k+1}` and on
/// the expanded copy of `v_0`, as 0-based ids.
pub fn t_nk_colouring(n: usize, k: usize) -> Result<VertexColouring> {
    if k < 2 || n < k + 2 {
        return Err(Error::InvalidParameter(
            "T_{n,k} needs k >= 2 and n >= k+2".into(),
        ));
    }
    let colours = (0..n)
        .map(|v| {
            if (1..=k).contains(&v) {
                v as u32 - 1
            } else {
                0
            }
        })
        .collect();
    VertexColouring::new(colours, k)
}

/// A uniformly random orientation of `K_n`, resampled until strongly
/// connected.
pub fn random_tournament(n: usize, seed: u64) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(
            "strong tournament needs n >= 3".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let t = sample_tournament(n, &mut rng);
        if t.is_strongly_connected() {
            return Ok(t);
        }
    }
}

fn sample_tournament(n: usize, rng: &mut ChaCha8Rng) -> Digraph {
    let mut arcs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            arcs.push(if rng.gen::<bool>() { (i, j) } else { (j, i) });
        }
    }
    Digraph::new(n, arcs).unwrap()
}

/// Rejection search for a tournament of diameter 2.
pub fn diameter_two_tournament(n: usize, seed: u64) -> Result<Digraph> {
    if n < 6 {
        return Err(Error::InvalidParameter(
            "diameter-two search needs n >= 6".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..DIAM2_ATTEMPTS {
        let t = sample_tournament(n, &mut rng);
        if t.diameter().ok() == Some(2) {
            return Ok(t);
        }
    }
    Err(Error::SearchBudgetExhausted(alloc::format!(
        "no diameter-2 tournament on {n} vertices in {DIAM2_ATTEMPTS} attempts"
    )))
}

fn strong_tournament_diameter(t: &Digraph) -> Result<usize> {
    if !t.is_tournament() {
        return Err(Error::NotATournament);
    }
    t.diameter()
}

/// Colour `u, u'` with one colour and `v, v'` with another, everything else
/// distinct, where `(u, v)` is the first pair at maximum distance and
/// `u v' .. u' v` its canonical geodesic. Uses at most `n-2` colours.
pub fn tournament_two_pair_colouring(t: &Digraph) -> Result<VertexColouring> {
    let d = strong_tournament_diameter(t)?;
    let n = t.order();
    if n < 5 {
        return Err(Error::InvalidParameter(
            "two-pair colouring needs n >= 5".into(),
        ));
    }
    if d <= 2 {
        return Ok(VertexColouring::constant(n));
    }
    let dist = t.distance_matrix();
    let (u, v) = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .find(|&(u, v)| dist.get(u, v) == Some(d))
        .unwrap();
    let path = t.shortest_path(u, v)?;
    let v1 = path[1];
    let u1 = path[path.len() - 2];
    let mut colours = vec![u32::MAX; n];
    colours[u] = 0;
    colours[u1] = 0;
    colours[v] = 1;
    colours[v1] = 1;
    for (next, c) in (2..).zip(colours.iter_mut().filter(|c| **c == u32::MAX)) {
        *c = next;
    }
    VertexColouring::new(colours, n - 2)
}

/// Layered colouring around a vertex `a` of maximum eccentricity, with
/// colours `1..d-1` on the distance layers and four extra colours; at most
/// `d+3` colours after dropping unused ids.
pub fn tournament_layered_colouring(t: &Digraph) -> Result<VertexColouring> {
    let d = strong_tournament_diameter(t)?;
    let n = t.order();
    if d <= 2 {
        return Ok(VertexColouring::constant(n));
    }
    let a = (0..n).find(|&v| t.eccentricity(v).ok() == Some(d)).unwrap();
    let layer: Vec<usize> = t
        .distances_from(a)
        .into_iter()
        .map(|x| x.unwrap())
        .collect();
    let layer = &layer;
    let in_layer = |i: usize| (0..n).filter(move |&v| layer[v] == i);
    let inner_in = |v: usize| {
        t.in_neighbours(v)
            .iter()
            .filter(|&&w| layer[w] == layer[v])
            .count()
    };
    let inner_out = |v: usize| {
        t.out_neighbours(v)
            .iter()
            .filter(|&&w| layer[w] == layer[v])
            .count()
    };
    // Lowest id among the maxima.
    let p = in_layer(1)
        .max_by_key(|&v| (inner_in(v), core::cmp::Reverse(v)))
        .unwrap();
    let q = in_layer(d)
        .max_by_key(|&v| (inner_out(v), core::cmp::Reverse(v)))
        .unwrap();

    // Colour i in 1..d-1 is id i-1; alpha..delta are d-1..d+2.
    let (alpha, beta, gamma, delta) = (d as u32 - 1, d as u32, d as u32 + 1, d as u32 + 2);
    let mut c = vec![0u32; n];
    for v in 0..n {
        c[v] = match layer[v] {
            0 => beta,
            1 => 0,
            i if i == d => d as u32 - 3,
            i => i as u32 - 1,
        };
    }
    c[p] = alpha;
    c[q] = beta;

    let path = t.shortest_path(p, q)?;
    if path.len() - 1 == d - 1 {
        let r = *path.iter().find(|&&v| layer[v] == d - 2).unwrap();
        c[r] = gamma;
    } else {
        let (s, t2) = path
            .windows(2)
            .map(|w| (w[0], w[1]))
            .find(|&(x, y)| layer[x] == layer[y])
            .unwrap();
        let r = if layer[s] == d - 2 {
            t2
        } else {
            *path.iter().find(|&&v| layer[v] == d - 2).unwrap()
        };
        c[r] = gamma;
        c[s] = delta;
    }
    Ok(VertexColouring::new(c, d + 3)?.compacted())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_rvc_colouring, is_srvc_colouring};

    #[test]
    fn named_tournaments() {
        assert!(t4().is_tournament() && t4().is_strongly_connected());
        let t = t5_1();
        assert!(t.is_tournament());
        assert_eq!(t.diameter(), Ok(2));
    }

    #[test]
    fn t_nk_shape() {
        let t = t_nk(7, 5).unwrap();
        assert_eq!(t.arc_count(), 21);
        assert!(t.is_tournament());
        assert_eq!(t.diameter(), Ok(6));
        for (n, k) in [(6, 4), (8, 3), (5, 2), (8, 2)] {
            let t = t_nk(n, k).unwrap();
            let c = t_nk_colouring(n, k).unwrap();
            assert!(t.is_tournament() && t.is_strongly_connected(), "{n} {k}");
            assert_eq!(c.colours_used(), k);
            assert!(is_srvc_colouring(&t, &c).unwrap(), "{n} {k}");
        }
        assert!(t_nk(5, 4).is_err());
    }

    #[test]
    fn random_expansion() {
        let inner = random_tournament(4, 3).unwrap();
        let t = t_nk_with(3, &inner).unwrap();
        assert_eq!(t.order(), 8);
        assert!(is_srvc_colouring(&t, &t_nk_colouring(8, 3).unwrap()).unwrap());
    }

    #[test]
    fn diameter_two_search() {
        for n in 6..10 {
            let t = t_n_1(n, 1).unwrap();
            assert!(t.is_tournament());
            assert_eq!(t.diameter(), Ok(2));
        }
    }

    #[test]
    fn degree_sums() {
        for seed in 0..20 {
            let t = random_tournament(9, seed).unwrap();
            assert!(t.is_strongly_connected());
            for v in 0..9 {
                assert_eq!(t.in_degree(v) + t.out_degree(v), 8);
            }
        }
    }

    #[test]
    fn colourings_on_random_tournaments() {
        let mut seen_deep = false;
        for seed in 0..200 {
            let n = 5 + (seed as usize % 10);
            let t = random_tournament(n, seed).unwrap();
            let d = t.diameter().unwrap();
            seen_deep |= d >= 3;
            let c = tournament_two_pair_colouring(&t).unwrap();
            assert!(c.colours_used() <= n - 2);
            assert!(is_srvc_colouring(&t, &c).unwrap(), "seed {seed}");
            let c = tournament_layered_colouring(&t).unwrap();
            assert!(c.colours_used() <= d + 3);
            assert!(is_rvc_colouring(&t, &c).unwrap(), "seed {seed}");
        }
        assert!(seen_deep);
        let t = t_nk(7, 5).unwrap();
        assert!(is_srvc_colouring(&t, &tournament_two_pair_colouring(&t).unwrap()).unwrap());
        let t = t_nk(6, 4).unwrap();
        let c = tournament_layered_colouring(&t).unwrap();
        assert!(c.colours_used() <= 8 && is_rvc_colouring(&t, &c).unwrap());
    }
}
