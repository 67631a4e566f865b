//! Closed-form values of `rvc`, `srvc`, `rc` and `src` for the families in
//! [`crate::families`].
//!
//! A [`Prediction`] is exact, an interval the value is known to lie in, a
//! pair of general bounds, a value that is only guaranteed above some size,
//! or an explicit "no claim" marker with the trivial bounds.

use alloc::string::String;
use core::fmt;

use crate::families::{CycleKind, CycleSubdigraphClass, Lemma5};
use crate::{Error, Parameter, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredictionForm {
    Exact(usize),
    /// The value is one of `lo..=hi`, and which one is open.
    Interval {
        lo: usize,
        hi: usize,
    },
    /// General upper and lower bounds.
    Bounds {
        lo: usize,
        hi: usize,
    },
    /// `value` holds when `guaranteed`; otherwise only `lo..=hi` is known.
    Conditional {
        value: usize,
        lo: usize,
        hi: usize,
        caveat: &'static str,
        guaranteed: bool,
    },
    /// No claim beyond `lo..=hi`.
    Silent {
        lo: usize,
        hi: usize,
        reason: &'static str,
    },
}

impl PredictionForm {
    pub fn lo(&self) -> usize {
        match *self {
            PredictionForm::Exact(v) => v,
            PredictionForm::Interval { lo, .. }
            | PredictionForm::Bounds { lo, .. }
            | PredictionForm::Conditional { lo, .. }
            | PredictionForm::Silent { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> usize {
        match *self {
            PredictionForm::Exact(v) => v,
            PredictionForm::Interval { hi, .. }
            | PredictionForm::Bounds { hi, .. }
            | PredictionForm::Conditional { hi, .. }
            | PredictionForm::Silent { hi, .. } => hi,
        }
    }

    /// The single value claimed, if any.
    pub fn exact(&self) -> Option<usize> {
        match *self {
            PredictionForm::Exact(v) => Some(v),
            PredictionForm::Conditional {
                value,
                guaranteed: true,
                ..
            } => Some(value),
            _ => None,
        }
    }

    /// Whether `value` is consistent with the claim.
    pub fn agrees(&self, value: usize) -> bool {
        match self.exact() {
            Some(v) => v == value,
            None => (self.lo()..=self.hi()).contains(&value),
        }
    }
}

impl fmt::Display for PredictionForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PredictionForm::Exact(v) => write!(f, "{v}"),
            PredictionForm::Interval { lo, hi } => write!(f, "one of {lo}..{hi}"),
            PredictionForm::Bounds { lo, hi } => write!(f, "between {lo} and {hi}"),
            PredictionForm::Conditional {
                value,
                lo,
                hi,
                caveat,
                guaranteed,
            } => {
                if *guaranteed {
                    write!(f, "{value} ({caveat})")
                } else {
                    write!(f, "{value} if {caveat}, else between {lo} and {hi}")
                }
            }
            PredictionForm::Silent { lo, hi, reason } => {
                write!(f, "no claim ({reason}); between {lo} and {hi}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub parameter: Parameter,
    pub form: PredictionForm,
    pub source: &'static str,
}

impl Prediction {
    fn new(parameter: Parameter, form: PredictionForm, source: &'static str) -> Self {
        Prediction {
            parameter,
            form,
            source,
        }
    }

    fn exact(parameter: Parameter, v: usize, source: &'static str) -> Self {
        Prediction::new(parameter, PredictionForm::Exact(v), source)
    }

    pub fn agrees(&self, value: usize) -> bool {
        self.form.agrees(value)
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.parameter, self.form)
    }
}

/// Predictions for one digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPrediction {
    pub rvc: Prediction,
    pub srvc: Prediction,
    pub rc: Option<Prediction>,
    pub src: Option<Prediction>,
}

impl FamilyPrediction {
    pub fn get(&self, p: Parameter) -> Option<&Prediction> {
        match p {
            Parameter::Rvc => Some(&self.rvc),
            Parameter::Srvc => Some(&self.srvc),
            Parameter::Rc => self.rc.as_ref(),
            Parameter::Src => self.src.as_ref(),
        }
    }

    fn vertex(v: usize, source: &'static str) -> Self {
        FamilyPrediction {
            rvc: Prediction::exact(Parameter::Rvc, v, source),
            srvc: Prediction::exact(Parameter::Srvc, v, source),
            rc: None,
            src: None,
        }
    }

    fn with_arc(
        mut self,
        rc: Option<PredictionForm>,
        src: Option<PredictionForm>,
        source: &'static str,
    ) -> Self {
        self.rc = rc.map(|f| Prediction::new(Parameter::Rc, f, source));
        self.src = src.map(|f| Prediction::new(Parameter::Src, f, source));
        self
    }
}

fn invalid(msg: &str) -> Error {
    Error::InvalidParameter(String::from(msg))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BiorientedFamily<'a> {
    Path(usize),
    Cycle(usize),
    Wheel(usize),
    Complete(usize),
    Star(usize),
    CompleteMultipartite(&'a [usize]),
}

const DIAM_ONE: &str = "complete biorientation: diameter 1";
const DIAM_TWO: &str = "diameter 2 gives value 1";

/// `↔P_n`, `↔C_n`, `↔W_n`, `↔K_n`, stars and complete multipartite graphs.
pub fn predict_bioriented(family: BiorientedFamily<'_>) -> Result<FamilyPrediction> {
    let complete = || {
        FamilyPrediction::vertex(0, DIAM_ONE).with_arc(
            Some(PredictionForm::Exact(1)),
            Some(PredictionForm::Exact(1)),
            DIAM_ONE,
        )
    };
    Ok(match family {
        BiorientedFamily::Path(n) if n >= 2 => {
            FamilyPrediction::vertex(n - 2, "bioriented path: n-2")
        }
        BiorientedFamily::Cycle(n) if n >= 3 => {
            let h = n.div_ceil(2);
            let (rvc, srvc) = match n {
                3 | 5 | 9 => (h - 2, h - 2),
                4 | 6 | 7 | 8 | 10 | 12 => (h - 1, h - 1),
                11 | 13 | 15 => (h - 1, h),
                _ => (h, h),
            };
            let source = "bioriented cycle table";
            FamilyPrediction {
                rvc: Prediction::exact(Parameter::Rvc, rvc, source),
                srvc: Prediction::exact(Parameter::Srvc, srvc, source),
                rc: None,
                src: None,
            }
        }
        BiorientedFamily::Wheel(3) => complete(),
        BiorientedFamily::Wheel(n) if n >= 4 => FamilyPrediction::vertex(1, "bioriented wheel: 1"),
        BiorientedFamily::Complete(n) if n >= 2 => complete(),
        BiorientedFamily::Star(1) => complete(),
        BiorientedFamily::Star(s) if s >= 2 => FamilyPrediction::vertex(1, DIAM_TWO),
        BiorientedFamily::CompleteMultipartite(sizes)
            if sizes.len() >= 2 && sizes.iter().all(|&s| s >= 1) =>
        {
            if sizes.iter().all(|&s| s == 1) {
                complete()
            } else {
                FamilyPrediction::vertex(1, "complete multipartite with a class of size >= 2: 1")
            }
        }
        _ => return Err(invalid("parameters outside the family's range")),
    })
}

/// `C→_n`: `n-2` for `n = 3, 4`, otherwise `n`; `rc = src = n`.
pub fn predict_directed_cycle(n: usize) -> Result<FamilyPrediction> {
    if n < 3 {
        return Err(invalid("directed cycle needs n >= 3"));
    }
    let v = if n <= 4 { n - 2 } else { n };
    Ok(
        FamilyPrediction::vertex(v, "directed cycle: n-2 for n <= 4, n for n >= 5").with_arc(
            Some(PredictionForm::Exact(n)),
            Some(PredictionForm::Exact(n)),
            "cycle subdigraph rc: n for k >= 3",
        ),
    )
}

/// Full case analysis for a spanning strong subdigraph of `↔C_n` with at
/// least one asymmetric arc.
pub fn predict_cycle_subdigraph(cls: &CycleSubdigraphClass) -> Result<FamilyPrediction> {
    let n = cls.n;
    if n < 3 || cls.k == 0 || cls.k > n {
        return Err(invalid("class inconsistent with n"));
    }
    if let Some((a, b)) = cls.segments {
        if a + b + cls.k != n {
            return Err(invalid("segment lengths inconsistent with n"));
        }
    }
    let h = n / 2;
    let seg = cls.segments.unwrap_or((0, 0));
    let both_at_most = |x: usize| seg.0 <= x && seg.1 <= x;
    use CycleKind::*;
    let (rvc, rvc_src) = match cls.kind {
        K1 | D1 | D2 => (n - 2, "cycle subdigraph: n-2 for k <= 2 or D2"),
        D4 if n == 4 => (n - 2, "cycle subdigraph: n-2 for D4 with n = 4"),
        D3 | D4 => (n - 1, "cycle subdigraph: n-1 for D3, or D4 with n >= 5"),
        Other => (n, "cycle subdigraph: n otherwise"),
    };
    let d1_edge = |x: usize| x == 0 || x == h + 2;
    let (srvc, srvc_src) = match cls.kind {
        K1 => (n - 2, "cycle subdigraph strong: n-2 for k = 1"),
        D1 if n <= 8 || both_at_most(h + 1) => (
            n - 2,
            "cycle subdigraph strong: n-2 for D1 with short segments",
        ),
        D1 if d1_edge(seg.0) || d1_edge(seg.1) => (
            n - 1,
            "cycle subdigraph strong: n-1 for D1 with a segment of 0 or n/2+2",
        ),
        D2 if n <= 8 => (n - 2, "cycle subdigraph strong: n-2 for D2 with n <= 8"),
        D4 if n == 4 => (n - 2, "cycle subdigraph strong: n-2 for D4 with n = 4"),
        D3 if n <= 10 || both_at_most(h + 1) => (
            n - 1,
            "cycle subdigraph strong: n-1 for D3 with short segments",
        ),
        D4 if n <= 8 || both_at_most(h) => (
            n - 1,
            "cycle subdigraph strong: n-1 for D4 with short segments",
        ),
        _ => (n, "cycle subdigraph strong: n otherwise"),
    };
    // n = 3 digraphs have diameter 2 and value 1 = n-2 throughout.
    let (rc, src) = if cls.k <= 2 {
        (PredictionForm::Exact(n - 1), None)
    } else {
        (PredictionForm::Exact(n), Some(PredictionForm::Exact(n)))
    };
    Ok(FamilyPrediction {
        rvc: Prediction::exact(Parameter::Rvc, rvc, rvc_src),
        srvc: Prediction::exact(Parameter::Srvc, srvc, srvc_src),
        rc: None,
        src: None,
    }
    .with_arc(
        Some(rc),
        src,
        "cycle subdigraph rc: n-1 for k <= 2, n for k >= 3",
    ))
}

/// Circulant `C_n([k])` for `1 <= k <= n-2`.
pub fn predict_circulant(n: usize, k: usize) -> Result<FamilyPrediction> {
    if n < 3 || k == 0 || k + 2 > n {
        return Err(invalid("circulant needs 1 <= k <= n-2"));
    }
    let arc = Some(PredictionForm::Exact(n.div_ceil(k)));
    let arc_src = "circulant rc = src = ceil(n/k)";
    if k == 1 {
        return predict_directed_cycle(n);
    }
    if k >= n / 2 {
        return Ok(
            FamilyPrediction::vertex(1, "circulant with k >= n/2 has diameter 2").with_arc(
                arc.clone(),
                arc,
                arc_src,
            ),
        );
    }
    let q = n.div_ceil(k);
    let a = n / k;
    let exact = |v: usize, s: &'static str| Prediction::exact(Parameter::Rvc, v, s);
    let (rvc, srvc) = match n % k {
        0 if a <= 4 => {
            let s = "circulant n = ak, a in {3,4}: a-1";
            (
                exact(a - 1, s),
                Prediction::exact(Parameter::Srvc, a - 1, s),
            )
        }
        0 => {
            let s = "circulant n = ak, a >= 5";
            (
                Prediction::new(
                    Parameter::Rvc,
                    PredictionForm::Interval { lo: a - 1, hi: a },
                    s,
                ),
                Prediction::exact(Parameter::Srvc, a, s),
            )
        }
        1 if n.is_multiple_of(a - 1) => {
            let s = "circulant n = ak+1, a-1 divides n: a-1";
            (
                exact(a - 1, s),
                Prediction::exact(Parameter::Srvc, a - 1, s),
            )
        }
        1 => {
            let s = "circulant n = ak+1, a-1 does not divide n";
            // a = k+2 forces n = (k+1)^2, which a-1 divides.
            let srvc = if a < k + 2 { a } else { a + 1 };
            (exact(a, s), Prediction::exact(Parameter::Srvc, srvc, s))
        }
        _ => {
            let s = "circulant n not 0 or 1 mod k";
            let srvc = PredictionForm::Conditional {
                value: q,
                lo: q - 1,
                hi: q,
                caveat: "n >= 2k(k+1)",
                guaranteed: n >= 2 * k * (k + 1),
            };
            (exact(q - 1, s), Prediction::new(Parameter::Srvc, srvc, s))
        }
    };
    Ok(FamilyPrediction {
        rvc,
        srvc,
        rc: None,
        src: None,
    }
    .with_arc(arc.clone(), arc, arc_src))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TournamentPredictionKind {
    T4,
    T5_1,
    Tnk {
        n: usize,
        k: usize,
    },
    /// Any strong tournament with `n` vertices and diameter `d`.
    Generic {
        n: usize,
        d: usize,
    },
}

pub fn predict_tournament(kind: TournamentPredictionKind) -> Result<FamilyPrediction> {
    use TournamentPredictionKind::*;
    let general_rc = |n: usize, d: usize| {
        let lo = d.max(if n >= 5 { 2 } else { d });
        let hi = if n >= 5 { (n - 1).min(d + 2) } else { d + 2 };
        PredictionForm::Bounds { lo, hi }
    };
    Ok(match kind {
        T4 => FamilyPrediction::vertex(2, "T4: 2").with_arc(
            Some(PredictionForm::Exact(3)),
            None,
            "T4: rc 3",
        ),
        T5_1 => FamilyPrediction::vertex(1, "T5,1: diameter 2").with_arc(
            Some(general_rc(5, 2)),
            None,
            "tournament rc bounds",
        ),
        Tnk { n, k } => {
            if n < 5 || k == 0 || k + 2 > n {
                return Err(invalid("T_{n,k} needs n >= 5 and 1 <= k <= n-2"));
            }
            let d = if k == 1 { 2 } else { k + 1 };
            FamilyPrediction::vertex(k, "T_{n,k}: k").with_arc(
                Some(general_rc(n, d)),
                None,
                "tournament rc bounds",
            )
        }
        Generic { n, d } => {
            if n < 3 || d < 1 || d > n - 1 {
                return Err(invalid("strong tournament needs n >= 3 and 1 <= d <= n-1"));
            }
            if n == 3 {
                return Ok(FamilyPrediction::vertex(1, "C3: 1"));
            }
            let lo = (d - 1).max(1);
            let s = "tournament: 1 <= rvc <= srvc <= n-2, d-1 <= rvc <= d+3";
            FamilyPrediction {
                rvc: Prediction::new(
                    Parameter::Rvc,
                    PredictionForm::Bounds {
                        lo,
                        hi: (n - 2).min(d + 3),
                    },
                    s,
                ),
                srvc: Prediction::new(Parameter::Srvc, PredictionForm::Bounds { lo, hi: n - 2 }, s),
                rc: None,
                src: None,
            }
            .with_arc(Some(general_rc(n, d)), None, "tournament rc bounds")
        }
    })
}

/// The spanning-subdigraph pairs where adding an arc raises the strong
/// number: `src` for `H1`/`D1`, `srvc` for `H2`/`D2`.
pub fn predict_lemma5(which: Lemma5) -> Prediction {
    let src = "strong numbers need not be monotone under adding arcs";
    match which {
        Lemma5::H1 => Prediction::exact(Parameter::Src, 6, src),
        Lemma5::D1 => Prediction::new(
            Parameter::Src,
            PredictionForm::Bounds { lo: 7, hi: 29 },
            src,
        ),
        Lemma5::H2 => Prediction::exact(Parameter::Srvc, 8, src),
        Lemma5::D2 => Prediction::new(
            Parameter::Srvc,
            PredictionForm::Bounds { lo: 9, hi: 22 },
            src,
        ),
    }
}

/// `t = C(s-1, 3) + 1` directed triangles sharing a vertex: vertex numbers
/// 3, arc numbers at least `s`.
pub fn predict_fan(s: usize) -> Result<FamilyPrediction> {
    if s < 4 {
        return Err(invalid("fan needs s >= 4"));
    }
    let arcs = 3 * ((s - 1) * (s - 2) * (s - 3) / 6 + 1);
    let bounds = PredictionForm::Bounds { lo: s, hi: arcs };
    Ok(FamilyPrediction::vertex(3, "triangle fan: 3").with_arc(
        Some(bounds.clone()),
        Some(bounds),
        "triangle fan: rc = src >= s",
    ))
}

/// `↔K_s` with a pendant at each vertex: vertex numbers `s`, arc numbers 3.
pub fn predict_pendant(s: usize) -> Result<FamilyPrediction> {
    if s < 2 {
        return Err(invalid("pendant construction needs s >= 2"));
    }
    Ok(
        FamilyPrediction::vertex(s, "clique with pendants: s").with_arc(
            Some(PredictionForm::Exact(3)),
            Some(PredictionForm::Exact(3)),
            "clique with pendants: rc = src = 3",
        ),
    )
}
