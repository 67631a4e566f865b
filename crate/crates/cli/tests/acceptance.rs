//! Acceptance criteria AC1-AC8. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.
//!
//! Expected values here are written out independently of the prediction
//! module: the published tables, or brute-force oracles.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rainbow_cli::reproduce::{run, Config, Evidence, TableRow, Tag};
use rainbow_core::enumerate::{digraph_from_code, strong_class_codes};
use rainbow_core::families::random_strong_digraph;
use rainbow_core::oracle::{oracle_check, oracle_value, MAX_ARCS};
use rainbow_core::solver::{compute, decide, Decision};
use rainbow_core::verify::{check_rvc, check_srvc};
use rainbow_core::{Digraph, Parameter, SolveOptions, VertexColouring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.1?}, limit {limit:?}"))
}

fn table(tag: Tag, cfg: Config) -> Result<Vec<TableRow>, String> {
    run(tag, &cfg).map_err(|e| format!("{tag}: {e}"))
}

fn param(row: &TableRow, key: &str) -> Option<usize> {
    row.params
        .split_whitespace()
        .find_map(|kv| kv.strip_prefix(key)?.strip_prefix('=')?.parse().ok())
}

fn find<'a>(
    rows: &'a [TableRow],
    family: &str,
    params: &str,
    parameter: &str,
) -> Option<&'a TableRow> {
    rows.iter()
        .find(|r| r.family == family && r.params == params && r.parameter == parameter)
}

fn exact(rows: &[TableRow], family: &str, params: &str, parameter: &str) -> Result<usize, String> {
    let r = find(rows, family, params, parameter)
        .ok_or_else(|| format!("no {family} {params} {parameter} row"))?;
    ensure(r.evidence == Evidence::Solver, || {
        format!("{family} {params} {parameter} not solved")
    })?;
    r.value()
        .ok_or_else(|| format!("{family} {params} {parameter}: {}", r.solver))
}

fn all_agree<'a>(rows: impl IntoIterator<Item = &'a TableRow>) -> Result<usize, String> {
    let mut count = 0;
    for r in rows {
        ensure(r.agree == Some(true), || {
            format!(
                "{} {} {}: predicted {}, got {}",
                r.family, r.params, r.parameter, r.predicted, r.solver
            )
        })?;
        count += 1;
    }
    Ok(count)
}

fn ac1() -> Check {
    let start = Instant::now();
    let rows = table(
        Tag::DirectedCycles,
        Config {
            min_n: Some(3),
            max_n: Some(9),
            ..Config::default()
        },
    )?;
    for n in 3..=9 {
        let expect = if n <= 4 { n - 2 } else { n };
        for p in ["rvc", "srvc"] {
            let v = exact(&rows, "directed_cycle", &format!("n={n}"), p)?;
            ensure(v == expect, || {
                format!("{p}(C{n}) = {v}, expected {expect}")
            })?;
        }
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("n=3..9 exact in {:.2?}", start.elapsed()))
}

/// Published values of `(rvc, srvc)` for the bioriented cycle.
fn cycle_table(n: usize) -> (usize, usize) {
    let h = n.div_ceil(2);
    match n {
        3 | 5 | 9 => (h - 2, h - 2),
        4 | 6 | 7 | 8 | 10 | 12 => (h - 1, h - 1),
        11 | 13 | 15 => (h - 1, h),
        _ => (h, h),
    }
}

fn ac2() -> Check {
    let start = Instant::now();
    let rows = table(
        Tag::BiorTable,
        Config {
            max_n: Some(16),
            solver_max_n: Some(13),
            ..Config::default()
        },
    )?;
    for n in 3..=13 {
        let (rvc, srvc) = cycle_table(n);
        let params = format!("n={n}");
        let got = (
            exact(&rows, "bioriented_cycle", &params, "rvc")?,
            exact(&rows, "bioriented_cycle", &params, "srvc")?,
        );
        ensure(got == (rvc, srvc), || {
            format!("C{n}: got {got:?}, expected {:?}", (rvc, srvc))
        })?;
    }
    let s11 = exact(&rows, "bioriented_cycle", "n=11", "srvc")?;
    let s12 = exact(&rows, "bioriented_cycle", "n=12", "srvc")?;
    ensure(s11 == 6 && s12 == 5, || {
        "srvc(C11) > srvc(C12) inversion missing".into()
    })?;
    for n in 14..=16 {
        let (rvc, srvc) = cycle_table(n);
        for (p, target) in [("rvc", rvc), ("srvc", srvc)] {
            let r = find(&rows, "bioriented_cycle", &format!("n={n}"), p)
                .ok_or_else(|| format!("no C{n} {p} row"))?;
            ensure(r.evidence == Evidence::Construction, || {
                format!("C{n} {p}: evidence {}", r.evidence.name())
            })?;
            let lower = n / 2 - 1;
            ensure(
                r.interval() == Some((lower, target)) && r.agree == Some(true),
                || format!("C{n} {p}: {} (want between {lower} and {target})", r.solver),
            )?;
        }
    }
    all_agree(&rows)?;
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "n=3..13 exact, n=14..16 construction, {} rows in {:.2?}",
        rows.len(),
        start.elapsed()
    ))
}

fn ac3() -> Check {
    let start = Instant::now();
    let rows = table(
        Tag::CycleSubdigraphs,
        Config {
            min_n: Some(4),
            max_n: Some(9),
            solver_max_n: Some(6),
            ..Config::default()
        },
    )?;
    for n in 4..=9 {
        let of_n = |p: &str| {
            rows.iter()
                .filter(move |r| param(r, "n") == Some(n) && r.parameter == p)
                .collect::<Vec<_>>()
        };
        for p in ["rvc", "srvc"] {
            let rs = of_n(p);
            ensure(rs.len() == (1 << n) - 1, || {
                format!("n={n} {p}: {} instances", rs.len())
            })?;
            ensure(rs.iter().all(|r| r.evidence == Evidence::Solver), || {
                format!("n={n} {p}: unsolved row")
            })?;
            all_agree(rs)?;
        }
        if n <= 6 {
            let rs = of_n("rc");
            ensure(rs.len() == (1 << n) - 1, || {
                format!("n={n} rc: {} instances", rs.len())
            })?;
            // The rc value: n-1 when at most two reverse arcs are missing, else n.
            for r in &rs {
                let k = r
                    .params
                    .split_whitespace()
                    .filter(|t| !t.contains('='))
                    .count()
                    + 1;
                let expect = if k <= 2 { n - 1 } else { n };
                ensure(r.value() == Some(expect), || {
                    format!("{} rc = {}, expected {expect}", r.params, r.solver)
                })?;
            }
        }
    }
    all_agree(&rows)?;
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "{} rows, 100% agreement, {:.2?}",
        rows.len(),
        start.elapsed()
    ))
}

fn ac4() -> Check {
    let start = Instant::now();
    let rows = table(
        Tag::Circulant,
        Config {
            min_n: Some(6),
            max_n: Some(12),
            ..Config::default()
        },
    )?;
    let mut instances = 0;
    for n in 6..=12 {
        for k in 2..n / 2 {
            instances += 1;
            for p in ["rvc", "srvc"] {
                exact(&rows, "circulant", &format!("n={n} k={k}"), p)?;
            }
        }
    }
    for ((n, k), (rvc, srvc)) in [((9, 2), (3, 3)), ((11, 2), (5, 6)), ((8, 2), (3, 3))] {
        let params = format!("n={n} k={k}");
        let got = (
            exact(&rows, "circulant", &params, "rvc")?,
            exact(&rows, "circulant", &params, "srvc")?,
        );
        ensure(got == (rvc, srvc), || {
            format!("C_{n}([{k}]): got {got:?}, expected {:?}", (rvc, srvc))
        })?;
    }
    let constructions = rows
        .iter()
        .filter(|r| r.evidence == Evidence::Construction)
        .count();
    ensure(constructions > 0, || {
        "no constructive colourings checked".into()
    })?;
    all_agree(&rows)?;
    let r10 = find(&rows, "circulant", "n=10 k=2", "rvc").ok_or("no (10,2) row")?;
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "{instances} instances, {constructions} constructions verified; (10,2) rvc predicted {} resolved to {}; {:.2?}",
        r10.predicted, r10.solver, start.elapsed()
    ))
}

fn ac5() -> Check {
    let start = Instant::now();
    let rows = table(
        Tag::Tournaments,
        Config {
            max_n: Some(8),
            samples: Some(0),
            ..Config::default()
        },
    )?;
    for n in [5, 6] {
        let summary: Vec<_> = rows
            .iter()
            .filter(|r| r.family == "strong_tournament" && param(r, "n") == Some(n))
            .collect();
        ensure(summary.len() == 2, || {
            format!("n={n}: missing exhaustive rows")
        })?;
        all_agree(summary)?;
    }
    for n in 5..=8 {
        for k in 1..=n - 2 {
            for p in ["rvc", "srvc"] {
                let v = exact(&rows, "t_nk", &format!("n={n} k={k}"), p)?;
                ensure(v == k, || format!("{p}(T_{n},{k}) = {v}"))?;
            }
        }
    }
    let sampled = table(
        Tag::Tournaments,
        Config {
            min_n: Some(9),
            max_n: Some(25),
            samples: Some(500),
            ..Config::default()
        },
    )?;
    let random: Vec<_> = sampled
        .iter()
        .filter(|r| r.family == "random_tournament")
        .collect();
    ensure(random.len() == 1000, || {
        format!("{} random rows", random.len())
    })?;
    ensure(
        random
            .iter()
            .all(|r| param(r, "n").is_some_and(|n| n <= 25)),
        || "order above 25".into(),
    )?;
    all_agree(random)?;
    within(start, Duration::from_secs(900))?;
    Ok(format!(
        "exhaustive n=5,6; T_nk grid n=5..8; 500 random tournaments; {:.2?}",
        start.elapsed()
    ))
}

fn ac6() -> Check {
    let rows = table(Tag::Lemma5, Config::default())?;
    let check = |params: &str, parameter: &str, expect: usize| -> Result<(), String> {
        let r = find(&rows, "lemma5", params, parameter)
            .ok_or_else(|| format!("no {params} {parameter} row"))?;
        ensure(r.value() == Some(expect) && r.agree == Some(true), || {
            format!("{params} {parameter} = {}", r.solver)
        })
    };
    check("which=H1", "diam", 6)?;
    check("which=H2", "diam", 9)?;
    check("which=D1", "geodesics v1->u3", 1)?;
    check("which=D2", "geodesics u1->v3", 1)?;
    for (params, parameter, v) in [("which=H1", "src", 6), ("which=H2", "srvc", 8)] {
        let r = find(&rows, "lemma5", params, parameter).ok_or("missing figure row")?;
        ensure(
            r.interval() == Some((v, v)) && r.agree == Some(true),
            || format!("{params} {parameter}: {}", r.solver),
        )?;
    }
    for (params, parameter) in [("which=D1", "src"), ("which=D2", "srvc")] {
        let r = find(&rows, "lemma5", params, parameter).ok_or("missing lower-bound row")?;
        ensure(r.evidence == Evidence::Skipped, || {
            format!("{params} unexpectedly solved")
        })?;
    }
    Ok(
        "src(H1)=6 and srvc(H2)=8 by figure colourings and diameter; unique geodesics in D1, D2; \
        lower bounds src(D1)>=7 and srvc(D2)>=9 NOT reproduced (exhaustive search infeasible)"
            .into(),
    )
}

fn ac7() -> Check {
    let start = Instant::now();
    let rows = table(Tag::Lemma6, Config::default())?;
    for p in ["rvc", "srvc"] {
        let v = exact(&rows, "fan", "s=4", p)?;
        ensure(v == 3, || format!("fan {p} = {v}"))?;
    }
    let rc = exact(&rows, "fan", "s=4", "rc")?;
    ensure(rc >= 4, || format!("fan rc = {rc}"))?;
    for s in [3, 4] {
        let params = format!("s={s}");
        for (p, expect) in [("rvc", s), ("srvc", s), ("rc", 3), ("src", 3)] {
            let v = exact(&rows, "pendant", &params, p)?;
            ensure(v == expect, || {
                format!("pendant s={s} {p} = {v}, expected {expect}")
            })?;
        }
    }
    all_agree(&rows)?;
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "fan s=4: rvc=srvc=3, rc={rc}; pendant s=3,4 exact; {:.2?}",
        start.elapsed()
    ))
}

/// Work budget for the plain `K^N` oracle on one refutation.
const ORACLE_WORK: f64 = 5e7;

/// Solver value against the oracle. `Ok(false)` when the oracle is out of
/// reach for this instance and parameter.
fn against_oracle(d: &Digraph, p: Parameter) -> Result<bool, String> {
    let r = compute(d, p, &SolveOptions::default()).map_err(|e| e.to_string())?;
    let v = r.value().ok_or("solver stopped without limits")?;
    let m = if p.is_arc() { d.arc_count() } else { d.order() };
    if p.is_arc() && m > MAX_ARCS || (v.saturating_sub(1) as f64).powi(m as i32) > ORACLE_WORK {
        return Ok(false);
    }
    let w = r.witness.ok_or("no witness")?;
    let ok = oracle_check(d, p, w.colours()).map_err(|e| e.to_string())?
        && w.palette() == v
        && (v == 0 || !oracle_value(d, p, v - 1).map_err(|e| e.to_string())?);
    ensure(ok, || {
        format!("{p} = {v} disputed by the oracle on {:?}", d.arcs())
    })?;
    Ok(true)
}

fn feasible(d: &Digraph, p: Parameter, k: usize) -> Result<bool, String> {
    match decide(d, p, k, &SolveOptions::default()).map_err(|e| e.to_string())? {
        Decision::Feasible(_) => Ok(true),
        Decision::Infeasible => Ok(false),
        Decision::Unknown => Err("decision stopped without limits".into()),
    }
}

fn small_diameter_equivalences(d: &Digraph) -> Result<(), String> {
    let diam = d.diameter().map_err(|e| e.to_string())?;
    let fail = || format!("equivalence fails on {:?}", d.arcs());
    if diam == 1 {
        for p in [Parameter::Rvc, Parameter::Srvc] {
            ensure(feasible(d, p, 0)?, fail)?;
        }
        for p in [Parameter::Rc, Parameter::Src] {
            ensure(feasible(d, p, 1)?, fail)?;
        }
        return Ok(());
    }
    let rvc1 = feasible(d, Parameter::Rvc, 1)?;
    ensure(
        rvc1 == feasible(d, Parameter::Srvc, 1)? && rvc1 == (diam == 2),
        fail,
    )?;
    ensure(
        feasible(d, Parameter::Rvc, 2)? == feasible(d, Parameter::Srvc, 2)?,
        fail,
    )?;
    // rc, src >= diam, so only diameter 2 can give value 2.
    if diam == 2 {
        ensure(
            feasible(d, Parameter::Rc, 2)? == feasible(d, Parameter::Src, 2)?,
            fail,
        )?;
    }
    Ok(())
}

fn ac8() -> Check {
    let start = Instant::now();
    let (mut compared, mut skipped) = (0usize, 0usize);
    let mut tally = |ok: bool| if ok { compared += 1 } else { skipped += 1 };
    for n in 1..=5 {
        for code in strong_class_codes(n).map_err(|e| e.to_string())? {
            let d = digraph_from_code(n, code).map_err(|e| e.to_string())?;
            for p in Parameter::ALL {
                tally(against_oracle(&d, p)?);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..200 {
        let n = 6 + i % 2;
        let d = random_strong_digraph(n, rng.gen_range(0.25..0.7), rng.gen())
            .map_err(|e| e.to_string())?;
        for p in Parameter::ALL {
            tally(against_oracle(&d, p)?);
        }
    }

    let mut classes = 0;
    for n in 2..=6 {
        for code in strong_class_codes(n).map_err(|e| e.to_string())? {
            let d = digraph_from_code(n, code).map_err(|e| e.to_string())?;
            small_diameter_equivalences(&d)?;
            classes += 1;
        }
    }

    let value = |d: &Digraph, p| -> Result<usize, String> {
        compute(d, p, &SolveOptions::default())
            .map_err(|e| e.to_string())?
            .value()
            .ok_or_else(|| "solver stopped".to_string())
    };
    for _ in 0..200 {
        let n = rng.gen_range(3..=7);
        let h = random_strong_digraph(n, rng.gen_range(0.25..0.6), rng.gen())
            .map_err(|e| e.to_string())?;
        let mut d = h.clone();
        for _ in 0..rng.gen_range(1..=4) {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && !d.has_arc(u, v) {
                d = d.with_arc(u, v).map_err(|e| e.to_string())?;
            }
        }
        let (a, b) = (value(&d, Parameter::Rvc)?, value(&h, Parameter::Rvc)?);
        ensure(a <= b, || {
            format!("rvc rose from {b} to {a} adding arcs to {:?}", h.arcs())
        })?;
    }

    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let d = random_strong_digraph(n, rng.gen_range(0.25..0.6), rng.gen())
            .map_err(|e| e.to_string())?;
        let strong = rng.gen_bool(0.5);
        let p = if strong {
            Parameter::Srvc
        } else {
            Parameter::Rvc
        };
        let w = compute(&d, p, &SolveOptions::default())
            .map_err(|e| e.to_string())?
            .witness;
        let Some(rainbow_core::solver::Witness::Vertex(c)) = w else {
            return Err("missing vertex witness".into());
        };
        let mut colours = c.colours().to_vec();
        let mut palette = c.palette();
        for _ in 0..rng.gen_range(1..=n) {
            colours[rng.gen_range(0..n)] = palette as u32;
            palette += 1;
        }
        let refined = VertexColouring::new(colours, palette).map_err(|e| e.to_string())?;
        let verdict = if strong {
            check_srvc(&d, &refined)
        } else {
            check_rvc(&d, &refined)
        };
        ensure(verdict.is_ok_and(|v| v.is_valid()), || {
            format!("refinement broke {p} on {:?}", d.arcs())
        })?;
    }

    Ok(format!(
        "oracle agreed on {compared} (parameter, digraph) pairs, {skipped} beyond the oracle budget; \
         small-diameter equivalences on {classes} classes n<=6; 200 spanning pairs; 200 refinements; {:.1?}",
        start.elapsed()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1", "directed cycles", ac1),
        ("AC2", "bioriented cycle table", ac2),
        ("AC3", "cycle subdigraphs", ac3),
        ("AC4", "circulant digraphs", ac4),
        ("AC5", "tournaments", ac5),
        ("AC6", "arc-addition pairs", ac6),
        ("AC7", "vertex versus arc numbers", ac7),
        ("AC8", "property suites", ac8),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS {id} {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id} {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
