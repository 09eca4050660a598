//! Acceptance criteria. Runs without the libtest harness so each PASS/FAIL
//! line is always printed; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use chromabound::colouring::{
    bound_for_class, chromatic_number_exact, colour_2k2_diamond, colour_p3p2_diamond, verify_colouring, Branch,
};
use chromabound::graph::fixtures::fig5_blowup;
use chromabound::graph::{fixture, Fixture};
use chromabound::harness::{generate_class_instances, run_on, run_suite, Instance, Colourer, Mode, SweepConfig, SweepReport};
use chromabound::partition::{build_partition, check_claims, clique_number, maximum_cliques, ViolationKind};
use chromabound::recognition::{check_class, is_perfect_small, ClassId, PatternId, PerfectMode};
use chromabound::{Graph, VertexSet};

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn no_failures(report: &SweepReport) -> Result<(), String> {
    ensure(report.passed(), || {
        let f = &report.failures[0];
        format!("{} failures, first: #{:?} {} {:?} {} on {}", report.failures.len(), f.index, f.property, f.witness, f.detail, f.graph)
    })
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn mycielski_fixture() -> Outcome {
    let start = Instant::now();
    let g = Fixture::MycielskiGrotzsch.build();
    ensure(check_class(&g, ClassId::P3P2DiamondFree).member, || "not (P3+P2, diamond)-free".into())?;
    let omega = clique_number(&g);
    let chi = chromatic_number_exact(&g).map_err(|e| e.to_string())?.colours_used;
    ensure((omega, chi) == (2, 4), || format!("w={omega} chi={chi}, expected 2 and 4"))?;
    let (col, trace) = colour_p3p2_diamond(&g).map_err(|e| e.to_string())?;
    ensure(matches!(verify_colouring(&g, &col), Ok(None)), || "colouring is improper".into())?;
    ensure(col.colours_used <= 4, || format!("{} colours", col.colours_used))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("w=2 chi=4 colours={} branch={} in {elapsed:?}", col.colours_used, trace.branch))
}

fn bound_table() -> Outcome {
    let cubic: Vec<usize> = (2..=6).map(|w| bound_for_class(ClassId::P3P2Free, w).colours).collect();
    ensure(cubic == [4, 10, 20, 35, 56], || format!("(P3+P2)-free bounds {cubic:?}"))?;
    for w in 2..=6 {
        ensure(bound_for_class(ClassId::P4P2Free, w).colours == cubic[w - 2], || format!("(P4+P2)-free at w={w}"))?;
    }
    let diamond: Vec<(usize, bool)> = (2..=7)
        .map(|w| {
            let b = bound_for_class(ClassId::P3P2DiamondFree, w);
            (b.colours, b.perfect)
        })
        .collect();
    let want = [(4, false), (6, false), (5, false), (5, true), (6, true), (7, true)];
    ensure(diamond == want, || format!("(P3+P2, diamond)-free bounds {diamond:?}"))?;
    let twok2: Vec<(usize, bool)> = (2..=6)
        .map(|w| {
            let b = bound_for_class(ClassId::TwoK2DiamondFree, w);
            (b.colours, b.perfect)
        })
        .collect();
    let want = [(3, false), (3, false), (4, true), (5, true), (6, true)];
    ensure(twok2 == want, || format!("(2K2, diamond)-free bounds {twok2:?}"))?;
    Ok("cubic 4,10,20,35,56; diamond classes match".into())
}

fn p3p2_exhaustive() -> Outcome {
    let start = Instant::now();
    let mut cfg = SweepConfig::new(ClassId::P3P2Free, 1, 8, Mode::EnumerateAll);
    cfg.all_orderings_max_omega = usize::MAX;
    cfg.max_cliques = usize::MAX;
    let report = run_suite(&cfg).map_err(|e| e.to_string())?;
    no_failures(&report)?;
    let mut expected_orderings = 0;
    for rec in &report.records {
        let g = chromabound::graph::io::decode_inline(&rec.graph).map_err(|e| e.to_string())?;
        let want = maximum_cliques(&g, usize::MAX).len() * factorial(rec.omega);
        ensure(rec.orderings == want, || format!("#{} checked {} orderings of {want}", rec.index, rec.orderings))?;
        expected_orderings += want;
        let chi = rec.chi.ok_or_else(|| format!("#{} has no exact chi", rec.index))?;
        for c in [Colourer::P3P2, Colourer::P4P2] {
            let run = rec.runs.iter().find(|r| r.colourer == c).ok_or_else(|| format!("#{} missing {}", rec.index, c.tag()))?;
            ensure(run.colours_used <= run.bound && run.colours_used >= chi, || {
                format!("#{} {} used {} (chi {chi}, bound {})", rec.index, c.tag(), run.colours_used, run.bound)
            })?;
        }
    }
    ensure(report.orderings_checked == expected_orderings, || "ordering total mismatch".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("{} graphs, {} orderings, 0 failures in {elapsed:.1?}", report.instances_tested, report.orderings_checked))
}

fn check_2k2_runs(report: &SweepReport) -> Result<(usize, usize), String> {
    let (mut needed_three, mut two) = (0, 0);
    for rec in &report.records {
        let Some(run) = rec.runs.iter().find(|r| r.colourer == Colourer::TwoK2Diamond) else {
            ensure(rec.omega < 2, || format!("#{} has no 2k2diamond run", rec.index))?;
            continue;
        };
        let chi = rec.chi.ok_or_else(|| format!("#{} has no exact chi", rec.index))?;
        let used = run.colours_used;
        let ok = match rec.omega {
            2 => used == chi && used <= 3,
            w => used == w && chi == w,
        };
        ensure(ok, || format!("#{} {} w={} chi={chi} used={used}", rec.index, rec.graph, rec.omega))?;
        if rec.omega == 2 {
            if used == 3 {
                needed_three += 1;
            } else {
                two += 1;
            }
        }
    }
    Ok((needed_three, two))
}

fn twok2_diamond_sweep() -> Outcome {
    let cfg = SweepConfig::new(ClassId::TwoK2DiamondFree, 1, 8, Mode::EnumerateAll);
    let mut corpus = generate_class_instances(&cfg).map_err(|e| e.to_string())?;
    let enumerated = corpus.len();
    corpus.extend((0..64).map(|i| {
        let k = [i / 16 + 1, i / 4 % 4 + 1, i % 4 + 1];
        Instance { source: format!("fig5_blowup{k:?}"), graph: fig5_blowup(k).unwrap() }
    }));
    ensure(corpus.iter().map(|i| i.graph.n()).max() == Some(15), || "largest blow-up is not 15 vertices".into())?;
    let report = run_on(&cfg, &corpus);
    no_failures(&report)?;
    let (three, two) = check_2k2_runs(&report)?;
    Ok(format!("{enumerated} graphs n<=8 (w=2: {three} need 3, {two} use 2) + 64 blow-ups up to n=15, 0 failures"))
}

fn twok2_diamond_perfect() -> Outcome {
    let mut reports = Vec::new();
    reports.push(run_suite(&SweepConfig::new(ClassId::TwoK2DiamondFree, 1, 8, Mode::EnumerateAll)).map_err(|e| e.to_string())?);
    let mut nine = SweepConfig::new(ClassId::TwoK2DiamondFree, 9, 9, Mode::RandomSample);
    nine.sample_count = 400;
    nine.seed = 9;
    reports.push(run_suite(&nine).map_err(|e| e.to_string())?);
    let (mut perfect, mut compared, mut at_nine) = (0, 0, 0);
    for report in &reports {
        no_failures(report)?;
        for rec in report.records.iter().filter(|r| r.n <= 9) {
            let (Some(h), Some(s)) = (rec.perfect.hole_search, rec.perfect.subgraph_sweep) else {
                return Err(format!("#{} n={} not checked in both modes", rec.index, rec.n));
            };
            ensure(h == s, || format!("modes disagree on {}", rec.graph))?;
            compared += 1;
            at_nine += usize::from(rec.n == 9);
            if rec.omega >= 4 {
                ensure(h && s, || format!("imperfect at w={}: {}", rec.omega, rec.graph))?;
                perfect += 1;
            }
        }
    }
    ensure(perfect > 0 && at_nine > 0, || "no instances with w>=4 or n=9".into())?;
    Ok(format!("{perfect} instances with w>=4 perfect in both modes; modes agree on {compared} ({at_nine} at n=9)"))
}

fn p3p2_diamond_perfect() -> Outcome {
    let mut cfg = SweepConfig::new(ClassId::P3P2DiamondFree, 5, 24, Mode::RandomSample);
    cfg.sample_count = 400;
    cfg.seed = 5;
    let report = run_suite(&cfg).map_err(|e| e.to_string())?;
    no_failures(&report)?;
    let high: Vec<_> = report.records.iter().filter(|r| r.omega >= 5).collect();
    ensure(high.len() >= 50, || format!("only {} instances with w>=5", high.len()))?;
    for rec in &high {
        ensure(rec.perfect.hole_search == Some(true), || format!("hole search on {}: {:?}", rec.graph, rec.perfect))?;
        ensure(rec.chi == Some(rec.omega), || format!("chi {:?} != w {} on {}", rec.chi, rec.omega, rec.graph))?;
    }
    Ok(format!("{} instances with w>=5, all perfect with chi=w", high.len()))
}

/// One copy each of the outer cycle BL, L, T, R, BR (copies are labelled `L'1` etc).
fn is_outer_cycle(g: &Graph, w: &[usize]) -> bool {
    let labels: BTreeSet<String> = w.iter().map(|&v| g.label(v).split('\'').next().unwrap_or("").to_string()).collect();
    w.len() == 5 && labels == ["BL", "L", "T", "R", "BR"].map(String::from).into_iter().collect()
}

fn fig5_checks(g: &Graph) -> Result<(), String> {
    ensure(check_class(g, ClassId::TwoK2DiamondFree).member, || "not (2K2, diamond)-free".into())?;
    let omega = clique_number(g);
    let chi = chromatic_number_exact(g).map_err(|e| e.to_string())?.colours_used;
    ensure((omega, chi) == (3, 3), || format!("w={omega} chi={chi}"))?;
    let (col, _) = colour_2k2_diamond(g).map_err(|e| e.to_string())?;
    ensure(col.colours_used == 3 && matches!(verify_colouring(g, &col), Ok(None)), || "colouring".into())?;
    for mode in [PerfectMode::HoleSearch, PerfectMode::SubgraphSweep] {
        let v = is_perfect_small(g, mode).map_err(|e| e.to_string())?;
        ensure(!v.perfect, || format!("{mode:?} reports perfect"))?;
        let w = v.witness.ok_or("no witness")?;
        ensure(w.validates(g), || format!("{mode:?} witness {w} does not validate"))?;
        if mode == PerfectMode::HoleSearch {
            ensure(matches!(w.pattern, PatternId::C5 | PatternId::Hole(5)), || format!("witness {w}"))?;
            ensure(is_outer_cycle(g, &w.vertices), || format!("witness {w} is not the outer 5-cycle"))?;
        }
    }
    Ok(())
}

fn fig5_fixture() -> Outcome {
    let g = Fixture::Fig5Base.build();
    fig5_checks(&g)?;
    let hole = is_perfect_small(&g, PerfectMode::HoleSearch).unwrap().witness.unwrap();
    let set: BTreeSet<usize> = hole.vertices.iter().copied().collect();
    ensure(set == (0..5).collect(), || format!("witness {hole}"))?;
    let mut checked = 0;
    for v in [1, 2, 3] {
        for k in 1..=3 {
            let b = g.multiply_vertex(v, k).map_err(|e| e.to_string())?;
            ensure(b.n() == g.n() + k - 1, || "vertex count".into())?;
            fig5_checks(&b).map_err(|e| format!("multiply {v} by {k}: {e}"))?;
            checked += 1;
        }
    }
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                fig5_checks(&fig5_blowup([a, b, c]).unwrap()).map_err(|e| format!("blow-up ({a},{b},{c}): {e}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("base plus {checked} multiplied graphs: in class, w=3, chi=3, outer C5 witness"))
}

fn case_tree_coverage() -> Outcome {
    let small = run_suite(&SweepConfig::new(ClassId::P3P2DiamondFree, 1, 8, Mode::EnumerateAll)).map_err(|e| e.to_string())?;
    let mut cfg = SweepConfig::new(ClassId::P3P2DiamondFree, 5, 20, Mode::RandomSample);
    cfg.sample_count = 400;
    let sampled = run_suite(&cfg).map_err(|e| e.to_string())?;
    let mut counts = small.branch_counts.clone();
    for (b, c) in &sampled.branch_counts {
        *counts.entry(*b).or_default() += c;
    }
    for report in [&small, &sampled] {
        no_failures(report)?;
        for rec in report.records.iter().filter(|r| r.omega == 4) {
            for run in &rec.runs {
                let b = run.branch.ok_or_else(|| format!("#{} has no branch", rec.index))?;
                let cap = if matches!(b, Branch::SingleCliqueComponent | Branch::ManyComponents | Branch::OnlyC12) { 4 } else { 5 };
                ensure(run.colours_used <= cap, || format!("{b} used {} on {}", run.colours_used, rec.graph))?;
            }
        }
    }
    let missing: Vec<_> = Branch::OMEGA_FOUR.iter().filter(|b| !counts.contains_key(b)).collect();
    ensure(missing.is_empty(), || format!("branches never taken: {missing:?}"))?;
    let shown: Vec<String> = Branch::OMEGA_FOUR.iter().map(|b| format!("{b}={}", counts[b])).collect();
    Ok(shown.join(" "))
}

fn corrupt_and_check(g: &Graph, class: ClassId) -> Result<usize, String> {
    let a = chromabound::partition::max_clique_exact(g);
    let p = build_partition(g, &a).map_err(|e| e.to_string())?;
    let mut detected = 0;
    let parts: Vec<((usize, usize), VertexSet)> = p.pairs.iter().map(|(k, s)| (*k, s.clone())).collect();
    for ((i, j), set) in parts {
        let Some(v) = set.first() else { continue };
        // drop v: it is then uncovered
        let mut q = p.clone();
        q.pairs.get_mut(&(i, j)).unwrap().remove(v);
        let check = check_claims(g, &q, class);
        let s = check.structure.ok_or_else(|| format!("dropping {v} from C{i},{j} went unnoticed"))?;
        ensure(s.kind == ViolationKind::Uncovered && s.witness == [v], || format!("dropping {v}: reported {s}"))?;
        detected += 1;
        // move v to I_1: it is not adjacent to exactly A - {1}
        let mut q = p.clone();
        q.pairs.get_mut(&(i, j)).unwrap().remove(v);
        q.missing[0].insert(v);
        let check = check_claims(g, &q, class);
        let s = check.structure.ok_or_else(|| format!("moving {v} to I1 went unnoticed"))?;
        ensure(s.witness.contains(&v), || format!("moving {v}: reported {s}"))?;
        detected += 1;
    }
    for (pos, set) in p.missing.iter().enumerate() {
        let Some(v) = set.first() else { continue };
        let mut q = p.clone();
        q.missing[(pos + 1) % p.omega()].insert(v);
        let check = check_claims(g, &q, class);
        let s = check.structure.ok_or_else(|| format!("duplicating {v} went unnoticed"))?;
        ensure(s.kind == ViolationKind::Overlap && s.witness == [v], || format!("duplicating {v}: reported {s}"))?;
        detected += 1;
    }
    Ok(detected)
}

fn negative_controls() -> Outcome {
    let mut injected = 0;
    for (class, n_max) in [
        (ClassId::P3P2Free, 6),
        (ClassId::P4P2Free, 6),
        (ClassId::P3P2DiamondFree, 7),
        (ClassId::TwoK2DiamondFree, 7),
    ] {
        let mut cfg = SweepConfig::new(class, 1, n_max, Mode::EnumerateAll);
        cfg.inject_every = Some(3);
        let report = run_suite(&cfg).map_err(|e| e.to_string())?;
        ensure(report.injected > 0, || format!("{class}: nothing injected"))?;
        ensure(report.failures.len() == report.injected, || {
            format!("{class}: {} failures for {} injections", report.failures.len(), report.injected)
        })?;
        for rec in &report.records {
            match (rec.injected, rec.failures.as_slice()) {
                (None, []) => {}
                (Some((u, v)), [f]) => ensure(f.property.ends_with(":proper") && f.witness == [u, v], || {
                    format!("{class} #{}: injected ({u},{v}) but reported {} {:?}", rec.index, f.property, f.witness)
                })?,
                (inj, fs) => return Err(format!("{class} #{}: injected {inj:?}, {} failures", rec.index, fs.len())),
            }
        }
        injected += report.injected;
    }
    let mut corrupted = 0;
    for (g, class) in [
        (fixture("mycielski_grotzsch").unwrap(), ClassId::P3P2DiamondFree),
        (fixture("fig3_w3x4").unwrap(), ClassId::P3P2Free),
        (fixture("fig5_base").unwrap(), ClassId::TwoK2DiamondFree),
        (fig5_blowup([2, 3, 2]).unwrap(), ClassId::TwoK2DiamondFree),
    ] {
        corrupted += corrupt_and_check(&g, class)?;
    }
    Ok(format!("{injected} injected colourings and {corrupted} corrupted partitions caught with exact witnesses"))
}

fn main() {
    let criteria: [(&str, Check); 9] = [
        ("1 mycielski fixture", mycielski_fixture),
        ("2 bound table", bound_table),
        ("3 exhaustive (P3+P2)-free n<=8", p3p2_exhaustive),
        ("4 (2K2, diamond)-free exact colours", twok2_diamond_sweep),
        ("5 (2K2, diamond)-free perfectness", twok2_diamond_perfect),
        ("6 (P3+P2, diamond)-free perfectness", p3p2_diamond_perfect),
        ("7 fig5 fixture", fig5_fixture),
        ("8 case-tree coverage", case_tree_coverage),
        ("9 negative controls", negative_controls),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{:.1?}]", start.elapsed()),
            Err(why) => {
                println!("FAIL criterion {name}: {why} [{:.1?}]", start.elapsed());
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
