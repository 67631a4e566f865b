//! Generators for every digraph family studied here, with the constructive
//! colourings that give their upper bounds.

mod bioriented;
mod circulant;
mod cycles;
mod lemmas;
mod tournaments;

use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use bioriented::{complete, complete_multipartite, cycle, cycle_colouring, path, star, wheel};
pub use circulant::{circulant, circulant_colouring, circulant_k, CirculantVariant};
pub use cycles::{
    asymmetric_positions, check_claim2_condition, claim2_max_length, classify_cycle_subdigraph,
    classify_positions, cycle_subdigraph, directed_cycle, predicted_cycle_colouring, CycleKind,
    CycleSubdigraphClass, CycleTarget,
};
pub use lemmas::{
    h1, h2, lemma5, lemma5_h1_colouring, lemma5_h2_colouring, lemma6_fan, lemma6_fan_colouring,
    lemma6_pendant, lemma6_pendant_arc_colouring, lemma6_pendant_vertex_colouring, Lemma5,
};
pub use tournaments::{
    diameter_two_tournament, random_tournament, t4, t5_1, t_n_1, t_nk, t_nk_colouring, t_nk_with,
    tournament_layered_colouring, tournament_two_pair_colouring, transitive_tournament,
    DIAM2_ATTEMPTS,
};

use crate::{Digraph, Error, Result};

/// A random digraph where each ordered pair is an arc with probability
/// `density`, resampled until strongly connected.
pub fn random_strong_digraph(n: usize, density: f64, seed: u64) -> Result<Digraph> {
    if n == 0 || !(density > 0.0 && density <= 1.0) {
        return Err(Error::InvalidParameter(
            "need n >= 1 and 0 < density <= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_bool(density) {
                    arcs.push((u, v));
                }
            }
        }
        let d = Digraph::new(n, arcs)?;
        if d.is_strongly_connected() {
            return Ok(d);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TournamentKind {
    T4,
    T5_1,
    /// `T_{n,k}`; `k = 1` goes through [`t_n_1`].
    Tnk {
        n: usize,
        k: usize,
    },
    Random {
        n: usize,
    },
    Diam2 {
        n: usize,
    },
}

/// A family tag with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Wheel { n: usize },
    Complete { n: usize },
    Star { leaves: usize },
    CompleteMultipartite { sizes: Vec<usize> },
    DirectedCycle { n: usize },
    CycleSubdigraph { n: usize, asym: Vec<usize> },
    Circulant { n: usize, jumps: Vec<usize> },
    CirculantK { n: usize, k: usize },
    Tournament { kind: TournamentKind, seed: u64 },
    Lemma5(Lemma5),
    Fan { s: usize },
    Pendant { s: usize },
}

fn join(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| alloc::format!("{x}")).collect();
    parts.join(" ")
}

impl FamilySpec {
    pub fn build(&self) -> Result<Digraph> {
        match self {
            FamilySpec::Path { n } => path(*n),
            FamilySpec::Cycle { n } => cycle(*n),
            FamilySpec::Wheel { n } => wheel(*n),
            FamilySpec::Complete { n } => complete(*n),
            FamilySpec::Star { leaves } => star(*leaves),
            FamilySpec::CompleteMultipartite { sizes } => complete_multipartite(sizes),
            FamilySpec::DirectedCycle { n } => directed_cycle(*n),
            FamilySpec::CycleSubdigraph { n, asym } => cycle_subdigraph(*n, asym),
            FamilySpec::Circulant { n, jumps } => circulant(*n, jumps),
            FamilySpec::CirculantK { n, k } => circulant_k(*n, *k),
            FamilySpec::Tournament { kind, seed } => match *kind {
                TournamentKind::T4 => Ok(t4()),
                TournamentKind::T5_1 => Ok(t5_1()),
                TournamentKind::Tnk { n, k: 1 } => t_n_1(n, *seed),
                TournamentKind::Tnk { n, k } => t_nk(n, k),
                TournamentKind::Random { n } => random_tournament(n, *seed),
                TournamentKind::Diam2 { n } => diameter_two_tournament(n, *seed),
            },
            FamilySpec::Lemma5(which) => Ok(lemma5(*which)),
            FamilySpec::Fan { s } => lemma6_fan(*s),
            FamilySpec::Pendant { s } => lemma6_pendant(*s),
        }
    }

    /// Short family name, as accepted on the command line.
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Star { .. } => "star",
            FamilySpec::CompleteMultipartite { .. } => "complete_multipartite",
            FamilySpec::DirectedCycle { .. } => "directed_cycle",
            FamilySpec::CycleSubdigraph { .. } => "cycle_subdigraph",
            FamilySpec::Circulant { .. } => "circulant_set",
            FamilySpec::CirculantK { .. } => "circulant",
            FamilySpec::Tournament { kind, .. } => match kind {
                TournamentKind::T4 => "t4",
                TournamentKind::T5_1 => "t5_1",
                TournamentKind::Tnk { .. } => "t_nk",
                TournamentKind::Random { .. } => "random_tournament",
                TournamentKind::Diam2 { .. } => "diam2_tournament",
            },
            FamilySpec::Lemma5(_) => "lemma5",
            FamilySpec::Fan { .. } => "fan",
            FamilySpec::Pendant { .. } => "pendant",
        }
    }

    /// Parameters as `key=value` pairs separated by spaces.
    pub fn params(&self) -> String {
        use alloc::format;
        match self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Complete { n }
            | FamilySpec::DirectedCycle { n } => format!("n={n}"),
            FamilySpec::Star { leaves } => format!("leaves={leaves}"),
            FamilySpec::CompleteMultipartite { sizes } => format!("sizes={}", join(sizes)),
            FamilySpec::CycleSubdigraph { n, asym } => format!("n={n} asym={}", join(asym)),
            FamilySpec::Circulant { n, jumps } => format!("n={n} jumps={}", join(jumps)),
            FamilySpec::CirculantK { n, k } => format!("n={n} k={k}"),
            FamilySpec::Tournament { kind, seed } => match kind {
                TournamentKind::T4 | TournamentKind::T5_1 => String::new(),
                TournamentKind::Tnk { n, k } => format!("n={n} k={k}"),
                TournamentKind::Random { n } | TournamentKind::Diam2 { n } => {
                    format!("n={n} seed={seed}")
                }
            },
            FamilySpec::Lemma5(which) => format!("which={}", which.name()),
            FamilySpec::Fan { s } | FamilySpec::Pendant { s } => format!("s={s}"),
        }
    }
}
