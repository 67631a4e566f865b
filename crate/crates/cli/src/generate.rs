//! Family instances and their constructive colourings by name.

use rainbow_core::families::{
    circulant_colouring, cycle_colouring, lemma5_h1_colouring, lemma5_h2_colouring,
    lemma6_fan_colouring, lemma6_pendant_arc_colouring, lemma6_pendant_vertex_colouring,
    predicted_cycle_colouring, random_strong_digraph, t_nk_colouring, tournament_layered_colouring,
    tournament_two_pair_colouring, CirculantVariant, CycleTarget, FamilySpec, Lemma5,
    TournamentKind,
};
use rainbow_core::{Digraph, Error, Result};

use crate::format::Colouring;

/// Family tags accepted by [`build`].
pub const FAMILIES: [&str; 19] = [
    "path",
    "cycle",
    "wheel",
    "complete",
    "star",
    "complete_multipartite",
    "directed_cycle",
    "cycle_subdigraph",
    "circulant_set",
    "circulant",
    "t4",
    "t5_1",
    "t_nk",
    "random_tournament",
    "diam2_tournament",
    "lemma5",
    "fan",
    "pendant",
    "random_digraph",
];

#[derive(Debug, Clone, Default)]
pub struct Request {
    pub family: String,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub s: Option<usize>,
    pub leaves: Option<usize>,
    pub which: Option<Lemma5>,
    pub sizes: Vec<usize>,
    pub asym: Vec<usize>,
    pub jumps: Vec<usize>,
    pub density: Option<f64>,
    pub seed: u64,
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required for {family}")))
}

impl Request {
    fn spec(&self) -> Result<FamilySpec> {
        let f = self.family.as_str();
        let n = || need(self.n, "n", f);
        let k = || need(self.k, "k", f);
        let s = || need(self.s, "s", f);
        let tournament = |kind| FamilySpec::Tournament {
            kind,
            seed: self.seed,
        };
        Ok(match f {
            "path" => FamilySpec::Path { n: n()? },
            "cycle" => FamilySpec::Cycle { n: n()? },
            "wheel" => FamilySpec::Wheel { n: n()? },
            "complete" => FamilySpec::Complete { n: n()? },
            "star" => FamilySpec::Star {
                leaves: need(self.leaves, "leaves", f)?,
            },
            "complete_multipartite" => FamilySpec::CompleteMultipartite {
                sizes: self.sizes.clone(),
            },
            "directed_cycle" => FamilySpec::DirectedCycle { n: n()? },
            "cycle_subdigraph" => FamilySpec::CycleSubdigraph {
                n: n()?,
                asym: self.asym.clone(),
            },
            "circulant_set" => FamilySpec::Circulant {
                n: n()?,
                jumps: self.jumps.clone(),
            },
            "circulant" => FamilySpec::CirculantK { n: n()?, k: k()? },
            "t4" => tournament(TournamentKind::T4),
            "t5_1" => tournament(TournamentKind::T5_1),
            "t_nk" => tournament(TournamentKind::Tnk { n: n()?, k: k()? }),
            "random_tournament" => tournament(TournamentKind::Random { n: n()? }),
            "diam2_tournament" => tournament(TournamentKind::Diam2 { n: n()? }),
            "lemma5" => FamilySpec::Lemma5(need(self.which, "which", f)?),
            "fan" => FamilySpec::Fan { s: s()? },
            "pendant" => FamilySpec::Pendant { s: s()? },
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family {other}; expected one of {}",
                    FAMILIES.join(", ")
                )))
            }
        })
    }
}

/// The digraph for `req`. Deterministic for a fixed seed.
pub fn build(req: &Request) -> Result<Digraph> {
    if req.family == "random_digraph" {
        let n = need(req.n, "n", "random_digraph")?;
        return random_strong_digraph(n, req.density.unwrap_or(0.35), req.seed);
    }
    req.spec()?.build()
}

/// Colouring names accepted for `family`.
pub fn colouring_names(family: &str) -> &'static [&'static str] {
    match family {
        "cycle" => &["half_run"],
        "directed_cycle" | "cycle_subdigraph" => &["rvc", "srvc"],
        "circulant" => &[
            "block",
            "claim2_residue",
            "case_b_i",
            "case_b_ii_small_a",
            "case_c_small_a",
        ],
        "t_nk" => &["layers", "two_pair", "layered"],
        "t4" => &["layered"],
        "t5_1" | "random_tournament" | "diam2_tournament" => &["two_pair", "layered"],
        "lemma5" => &["figure"],
        "fan" => &["figure"],
        "pendant" => &["vertex", "arc"],
        _ => &[],
    }
}

/// The constructive colouring `name` of the instance `d` built from `req`.
pub fn colouring(req: &Request, d: &Digraph, name: &str) -> Result<Colouring> {
    let f = req.family.as_str();
    if !colouring_names(f).contains(&name) {
        return Err(Error::InvalidParameter(format!(
            "no colouring {name} for {f}; available: {}",
            colouring_names(f).join(", ")
        )));
    }
    let vertex = |c| Ok(Colouring::Vertex(c));
    match (f, name) {
        ("cycle", _) => vertex(cycle_colouring(d.order())?),
        (_, "rvc") => vertex(predicted_cycle_colouring(d, CycleTarget::Rvc)?),
        (_, "srvc") => vertex(predicted_cycle_colouring(d, CycleTarget::Srvc)?),
        ("circulant", v) => vertex(circulant_colouring(
            d.order(),
            need(req.k, "k", f)?,
            v.parse::<CirculantVariant>()?,
        )?),
        ("t_nk", "layers") => vertex(t_nk_colouring(d.order(), need(req.k, "k", f)?)?),
        (_, "two_pair") => vertex(tournament_two_pair_colouring(d)?),
        (_, "layered") => vertex(tournament_layered_colouring(d)?),
        ("lemma5", _) => match need(req.which, "which", f)? {
            Lemma5::H1 => Ok(Colouring::Arc(lemma5_h1_colouring())),
            Lemma5::H2 => vertex(lemma5_h2_colouring()),
            other => Err(Error::InvalidParameter(format!(
                "the figure colours H1 and H2 only, not {}",
                other.name()
            ))),
        },
        ("fan", _) => vertex(lemma6_fan_colouring(need(req.s, "s", f)?)?),
        ("pendant", "vertex") => vertex(lemma6_pendant_vertex_colouring(need(req.s, "s", f)?)?),
        ("pendant", _) => Ok(Colouring::Arc(lemma6_pendant_arc_colouring(need(
            req.s, "s", f,
        )?)?)),
        _ => unreachable!("colouring_names lists only handled pairs"),
    }
}
