//! Circulant digraphs `C_n(S)` and the colourings used for `C_n([k])`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Digraph, Error, Result, VertexColouring};

/// `C_n(S)`: arcs `v_i -> v_{i+s mod n}` for each jump `s`.
pub fn circulant(n: usize, jumps: &[usize]) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::InvalidParameter("circulant needs n >= 3".into()));
    }
    if jumps.is_empty() || jumps.iter().any(|&s| s == 0 || s >= n) {
        return Err(Error::InvalidParameter("jumps must lie in 1..n".into()));
    }
    Digraph::new(
        n,
        (0..n).flat_map(|i| jumps.iter().map(move |&s| (i, (i + s) % n))),
    )
}

/// `C_n([k])`, jumps `1..=k`, for `1 <= k <= n-2`.
pub fn circulant_k(n: usize, k: usize) -> Result<Digraph> {
    if k == 0 || k + 2 > n {
        return Err(Error::InvalidParameter(
            "circulant needs 1 <= k <= n-2".into(),
        ));
    }
    let jumps: Vec<usize> = (1..=k).collect();
    circulant(n, &jumps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CirculantVariant {
    /// `c(v_i) = ⌊i/k⌋`, `⌈n/k⌉` colours, strong.
    Block,
    /// `c(v_{r+lk}) = l mod a` on each `k`-jump cycle, `a = ⌈n/k⌉-1`
    /// colours; needs `k ∤ n`.
    Claim2Residue,
    /// `n = ak+1`, `(a-1) | n`: `c(v_{lk}) = l mod (a-1)`, strong.
    CaseBI,
    /// `n = ak+1`, `a < k+2`: colour 0 on `k+1` spread-out vertices of the
    /// `k`-jump cycle, `a` colours, strong.
    CaseBIISmallA,
    /// `n = ak`, `a ∈ {3, 4}`: `a-1` colours, strong.
    CaseCSmallA,
}

impl CirculantVariant {
    pub const ALL: [CirculantVariant; 5] = [
        CirculantVariant::Block,
        CirculantVariant::Claim2Residue,
        CirculantVariant::CaseBI,
        CirculantVariant::CaseBIISmallA,
        CirculantVariant::CaseCSmallA,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CirculantVariant::Block => "block",
            CirculantVariant::Claim2Residue => "claim2_residue",
            CirculantVariant::CaseBI => "case_b_i",
            CirculantVariant::CaseBIISmallA => "case_b_ii_small_a",
            CirculantVariant::CaseCSmallA => "case_c_small_a",
        }
    }

    /// Whether the colouring targets geodesics (otherwise paths only).
    pub fn is_strong(self) -> bool {
        self != CirculantVariant::Claim2Residue
    }

    /// Whether the variant's preconditions hold for `(n, k)`.
    pub fn applies(self, n: usize, k: usize) -> bool {
        if k == 0 || k + 2 > n {
            return false;
        }
        let a = n / k;
        match self {
            CirculantVariant::Block => true,
            CirculantVariant::Claim2Residue => !n.is_multiple_of(k) && a >= 2,
            CirculantVariant::CaseBI => n % k == 1 && a >= 3 && n.is_multiple_of(a - 1),
            CirculantVariant::CaseBIISmallA => n % k == 1 && a >= 3 && a < k + 2,
            CirculantVariant::CaseCSmallA => n.is_multiple_of(k) && (a == 3 || a == 4),
        }
    }
}

impl core::str::FromStr for CirculantVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CirculantVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| {
                Error::InvalidParameter(alloc::format!("unknown circulant colouring {s}"))
            })
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The colouring `variant` of `C_n([k])`.
pub fn circulant_colouring(
    n: usize,
    k: usize,
    variant: CirculantVariant,
) -> Result<VertexColouring> {
    if !variant.applies(n, k) {
        return Err(Error::InvalidParameter(alloc::format!(
            "{} colouring does not apply to n={n}, k={k}",
            variant.name()
        )));
    }
    let a = n / k;
    let mut c = vec![0u32; n];
    let palette = match variant {
        CirculantVariant::Block => {
            for (i, x) in c.iter_mut().enumerate() {
                *x = (i / k) as u32;
            }
            n.div_ceil(k)
        }
        CirculantVariant::Claim2Residue => {
            let g = gcd(n, k);
            for r in 0..g {
                for l in 0..n / g {
                    c[(r + l * k) % n] = (l % a) as u32;
                }
            }
            a
        }
        CirculantVariant::CaseBI => {
            for l in 0..n {
                c[l * k % n] = (l % (a - 1)) as u32;
            }
            a - 1
        }
        CirculantVariant::CaseBIISmallA => {
            let mut next = 0;
            for l in 0..n {
                let v = l * k % n;
                if l % (a - 1) == 0 && l / (a - 1) <= k {
                    c[v] = 0;
                } else {
                    c[v] = (next % (a - 1) + 1) as u32;
                    next += 1;
                }
            }
            a
        }
        CirculantVariant::CaseCSmallA => {
            let heads: &[u32] = if a == 3 { &[0, 0, 1] } else { &[0, 1, 0, 2] };
            let m = (a - 1) as u32;
            for (l, &h) in heads.iter().enumerate() {
                for r in 0..k {
                    c[l * k + r] = (h + r as u32) % m;
                }
            }
            a - 1
        }
    };
    VertexColouring::new(c, palette)
}
