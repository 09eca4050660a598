//! Runs every property check over a generated corpus.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::generate::{generate_class_instances, Instance, Mode, SweepConfig};
use crate::colouring::{
    bound_for_class, chromatic_number_exact, fresh_palette_bound, p3p2_diamond_from_partition, p3p2_from_partition,
    p4p2_from_partition, pair_set_bound, twok2_diamond_from_partition, verify_colouring, Branch, Colouring,
    EXACT_LIMIT,
};
use crate::error::Result;
use crate::graph::io::encode_inline;
use crate::graph::Graph;
use crate::partition::{check_claims, clique_number, maximum_cliques, partition_unchecked, WagonPartition};
use crate::recognition::{
    check_class, is_perfect_small, ClassId, PerfectMode, HOLE_SEARCH_LIMIT, SUBGRAPH_SWEEP_LIMIT,
};

/// Both perfectness modes are compared on every instance up to this size.
pub const MODE_AGREEMENT_LIMIT: usize = 9;

/// Constructive colourers exercised by the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Colourer {
    P3P2,
    P4P2,
    P3P2Diamond,
    TwoK2Diamond,
}

impl Colourer {
    pub fn tag(self) -> &'static str {
        match self {
            Colourer::P3P2 => "p3p2",
            Colourer::P4P2 => "p4p2",
            Colourer::P3P2Diamond => "p3p2diamond",
            Colourer::TwoK2Diamond => "2k2diamond",
        }
    }

    pub fn for_class(class: ClassId) -> &'static [Colourer] {
        match class {
            ClassId::P3P2Free | ClassId::TwoK2Free => &[Colourer::P3P2, Colourer::P4P2],
            ClassId::P4P2Free => &[Colourer::P4P2],
            ClassId::P3P2DiamondFree => &[Colourer::P3P2Diamond],
            ClassId::TwoK2DiamondFree => &[Colourer::TwoK2Diamond],
        }
    }

    fn min_omega(self) -> usize {
        match self {
            Colourer::P3P2 | Colourer::P4P2 => 0,
            Colourer::P3P2Diamond | Colourer::TwoK2Diamond => 2,
        }
    }
}

/// A failed property with the vertices that show it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Instance index; absent for sweep-level properties.
    pub index: Option<usize>,
    /// Graph in inline edge-list form `n:u-v,...`.
    pub graph: String,
    pub property: String,
    pub witness: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunRecord {
    pub colourer: Colourer,
    pub colours_used: usize,
    pub bound: usize,
    pub branch: Option<Branch>,
    pub fresh_colours: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectRecord {
    pub hole_search: Option<bool>,
    pub subgraph_sweep: Option<bool>,
    /// The class bound asserts perfection at this clique number.
    pub asserted: bool,
}

/// Per-instance outcome; one JSON line in the records file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub source: String,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub omega: usize,
    pub chi: Option<usize>,
    pub orderings: usize,
    /// Runs anchored at the first ordering.
    pub runs: Vec<RunRecord>,
    /// Branch counts over all orderings.
    pub branches: BTreeMap<Branch, usize>,
    pub perfect: PerfectRecord,
    /// Edge made monochromatic by injection mode.
    pub injected: Option<(usize, usize)>,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HistogramRow {
    pub colourer: Colourer,
    pub omega: usize,
    pub colours_used: usize,
    pub bound: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub instances_tested: usize,
    pub orderings_checked: usize,
    pub failures: Vec<Failure>,
    /// Colours used at the first ordering against the class bound, per `w`.
    pub histogram: Vec<HistogramRow>,
    pub branch_counts: BTreeMap<Branch, usize>,
    pub omega_counts: BTreeMap<usize, usize>,
    pub max_chi_by_omega: BTreeMap<usize, usize>,
    /// Instances where perfection was asserted and checked.
    pub perfect_checked: usize,
    /// Instances where the two perfectness modes were compared.
    pub modes_compared: usize,
    pub injected: usize,
    #[serde(skip)]
    pub records: Vec<InstanceRecord>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        let w = &mut out;
        writeln!(w, "class {} mode {} n {}..={} seed {}", c.class, c.mode, c.n_min, c.n_max, c.seed).unwrap();
        writeln!(
            w,
            "instances {} orderings {} failures {} injected {}",
            self.instances_tested,
            self.orderings_checked,
            self.failures.len(),
            self.injected
        )
        .unwrap();
        writeln!(w, "perfect checked {} modes compared {}", self.perfect_checked, self.modes_compared).unwrap();
        for (omega, count) in &self.omega_counts {
            let chi = self.max_chi_by_omega.get(omega).map_or("-".to_string(), |x| x.to_string());
            writeln!(w, "  w={omega}: {count} instances, max chi {chi}").unwrap();
        }
        for row in &self.histogram {
            writeln!(
                w,
                "  {} w={} colours={} bound={} count={}",
                row.colourer.tag(),
                row.omega,
                row.colours_used,
                row.bound,
                row.count
            )
            .unwrap();
        }
        for (branch, count) in &self.branch_counts {
            writeln!(w, "  branch {branch}: {count}").unwrap();
        }
        for f in self.failures.iter().take(20) {
            let idx = f.index.map_or("-".into(), |i| i.to_string());
            writeln!(w, "  FAIL #{idx} {} {:?} {} [{}]", f.property, f.witness, f.detail, f.graph).unwrap();
        }
        if self.failures.len() > 20 {
            writeln!(w, "  ... {} more failures", self.failures.len() - 20).unwrap();
        }
        out
    }

    /// One JSON object per instance, then a summary object.
    pub fn write_records<W: io::Write>(&self, mut out: W) -> io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut out, self)?;
        out.write_all(b"\n")
    }
}

/// Clique orderings checked for one instance; the first is the
/// lexicographically least maximum clique in ascending order.
fn clique_orderings(g: &Graph, omega: usize, cfg: &SweepConfig) -> Vec<Vec<usize>> {
    if omega == 0 {
        return vec![Vec::new()];
    }
    let cliques = maximum_cliques(g, cfg.max_cliques.max(1));
    let mut out = Vec::new();
    for q in cliques {
        if omega <= cfg.all_orderings_max_omega {
            out.extend(q.iter().copied().permutations(omega));
        } else {
            let mut sample = vec![q.clone()];
            sample.extend((1..omega).map(|r| {
                let mut rot = q.clone();
                rot.rotate_left(r);
                rot
            }));
            sample.push(q.iter().rev().copied().collect());
            out.extend(sample.into_iter().unique());
        }
    }
    out
}

struct Run {
    colouring: Colouring,
    branch: Option<Branch>,
    palettes: Option<(Vec<(usize, usize)>, usize)>,
}

fn run_colourer(c: Colourer, g: &Graph, p: &WagonPartition) -> Result<Run> {
    let wagon = |w: crate::colouring::WagonColouring| Run {
        palettes: Some((w.palettes.iter().map(|p| (p.j, p.size)).collect(), w.fresh_colours)),
        colouring: w.colouring,
        branch: None,
    };
    let traced = |(colouring, t): (Colouring, crate::colouring::CaseTrace)| Run {
        colouring,
        branch: Some(t.branch),
        palettes: None,
    };
    Ok(match c {
        Colourer::P3P2 => wagon(p3p2_from_partition(g, p)?),
        Colourer::P4P2 => wagon(p4p2_from_partition(g, p)?),
        Colourer::P3P2Diamond => traced(p3p2_diamond_from_partition(g, p)?),
        Colourer::TwoK2Diamond => traced(twok2_diamond_from_partition(g, p)?),
    })
}

fn check_instance(cfg: &SweepConfig, index: usize, inst: &Instance) -> InstanceRecord {
    let g = &inst.graph;
    let class = cfg.class;
    let encoded = encode_inline(g);
    let mut failures = Vec::new();
    let mut fail = |property: String, witness: Vec<usize>, detail: String| {
        failures.push(Failure { index: Some(index), graph: encoded.clone(), property, witness, detail });
    };
    let mut rec = InstanceRecord {
        index,
        source: inst.source.clone(),
        graph: encoded.clone(),
        n: g.n(),
        m: g.edge_count(),
        omega: 0,
        chi: None,
        orderings: 0,
        runs: Vec::new(),
        branches: BTreeMap::new(),
        perfect: PerfectRecord { hole_search: None, subgraph_sweep: None, asserted: false },
        injected: None,
        failures: Vec::new(),
    };

    let membership = check_class(g, class);
    if let Some(w) = membership.witness {
        fail("class".into(), w.vertices, format!("induced {}", w.pattern));
        rec.failures = failures;
        return rec;
    }
    let omega = clique_number(g);
    rec.omega = omega;
    let bound = bound_for_class(class, omega);

    let chi = (g.n() <= EXACT_LIMIT).then(|| chromatic_number_exact(g).map(|c| c.colours_used));
    let chi = match chi {
        Some(Ok(x)) => Some(x),
        Some(Err(e)) => {
            fail("oracle".into(), Vec::new(), e.to_string());
            None
        }
        None => None,
    };
    rec.chi = chi;
    if let Some(x) = chi {
        if x < omega {
            fail("oracle:chi_below_omega".into(), Vec::new(), format!("chi {x} < w {omega}"));
        }
        if x > bound.colours {
            fail("chi_bound".into(), Vec::new(), format!("chi {x} > bound {}", bound.colours));
        }
    }

    let inject_here = cfg.inject_every.is_some_and(|k| index.is_multiple_of(k)) && g.edge_count() > 0;
    let orderings = clique_orderings(g, omega, cfg);
    rec.orderings = orderings.len();
    for (k, a) in orderings.iter().enumerate() {
        let p = partition_unchecked(g, a);
        let claims = check_claims(g, &p, class);
        if let Some(v) = &claims.structure {
            fail("partition".into(), v.witness.clone(), format!("A={a:?}: {v}"));
        }
        for c in claims.failures() {
            let note = c.note.clone().unwrap_or_default();
            fail(format!("claim{}", c.claim), c.witness.clone().unwrap_or_default(), format!("A={a:?} {note}"));
        }

        let mut used_by = BTreeMap::new();
        for &colourer in Colourer::for_class(class) {
            if omega < colourer.min_omega() || (k > 0 && bound.perfect && colourer == Colourer::P3P2Diamond) {
                continue;
            }
            let name = colourer.tag();
            let mut run = match run_colourer(colourer, g, &p) {
                Ok(r) => r,
                Err(e) => {
                    fail(format!("{name}:error"), Vec::new(), format!("A={a:?}: {e}"));
                    continue;
                }
            };
            if inject_here && k == 0 && rec.injected.is_none() {
                let (u, v) = *g.edges().iter().min().expect("has an edge");
                let mut assignment = run.colouring.assignment.clone();
                assignment[v] = assignment[u];
                run.colouring = Colouring::new(assignment);
                rec.injected = Some((u, v));
            }
            match verify_colouring(g, &run.colouring) {
                Ok(None) => {}
                Ok(Some((u, v))) => {
                    fail(format!("{name}:proper"), vec![u, v], format!("A={a:?}"));
                    continue;
                }
                Err(e) => {
                    fail(format!("{name}:proper"), Vec::new(), e.to_string());
                    continue;
                }
            }
            let used = run.colouring.colours_used;
            used_by.insert(colourer, used);
            if used > bound.colours {
                fail(format!("{name}:bound"), a.clone(), format!("{used} colours > bound {}", bound.colours));
            }
            if let Some(x) = chi.filter(|&x| used < x) {
                fail(format!("{name}:below_chi"), a.clone(), format!("{used} colours < chi {x}"));
            }
            if let Some(b) = run.branch {
                *rec.branches.entry(b).or_default() += 1;
                if used > b.ceiling(omega) {
                    fail(format!("{name}:branch_ceiling"), a.clone(), format!("{b}: {used} > {}", b.ceiling(omega)));
                }
            }
            if colourer == Colourer::TwoK2Diamond {
                let exact = if omega >= 3 { Some(omega) } else { chi };
                if let Some(want) = exact.filter(|&want| want != used) {
                    fail(format!("{name}:exact"), a.clone(), format!("{used} colours, expected {want}"));
                }
            }
            if let Some((sizes, fresh)) = &run.palettes {
                if let Some(&(j, size)) = sizes.iter().find(|&&(j, size)| size > pair_set_bound(omega, j)) {
                    fail(format!("{name}:pair_palette"), a.clone(), format!("j={j} uses {size} fresh colours"));
                }
                if *fresh > fresh_palette_bound(omega) {
                    fail(format!("{name}:fresh_palette"), a.clone(), format!("{fresh} fresh colours"));
                }
            }
            if k == 0 {
                rec.runs.push(RunRecord {
                    colourer,
                    colours_used: used,
                    bound: bound.colours,
                    branch: run.branch,
                    fresh_colours: run.palettes.as_ref().map(|&(_, f)| f),
                });
            }
        }
        if let (Some(&a3), Some(&a4)) = (used_by.get(&Colourer::P3P2), used_by.get(&Colourer::P4P2)) {
            if a4 > a3 {
                fail("p4p2:worse_than_p3p2".into(), a.clone(), format!("{a4} > {a3}"));
            }
        }
    }

    let n = g.n();
    rec.perfect.asserted = bound.perfect;
    let want_hole = n <= HOLE_SEARCH_LIMIT && (bound.perfect || n <= MODE_AGREEMENT_LIMIT);
    let want_sweep = n <= SUBGRAPH_SWEEP_LIMIT && (bound.perfect || n <= MODE_AGREEMENT_LIMIT);
    let hole = want_hole.then(|| is_perfect_small(g, PerfectMode::HoleSearch).expect("within limit"));
    let sweep = want_sweep.then(|| is_perfect_small(g, PerfectMode::SubgraphSweep));
    let sweep = match sweep {
        Some(Ok(v)) => Some(v),
        Some(Err(e)) => {
            fail("perfect:subgraph_sweep".into(), Vec::new(), e.to_string());
            None
        }
        None => None,
    };
    rec.perfect.hole_search = hole.as_ref().map(|v| v.perfect);
    rec.perfect.subgraph_sweep = sweep.as_ref().map(|v| v.perfect);
    if bound.perfect {
        for (mode, verdict) in [("hole_search", &hole), ("subgraph_sweep", &sweep)] {
            if let Some(v) = verdict.as_ref().filter(|v| !v.perfect) {
                let w = v.witness.clone().map(|w| w.vertices).unwrap_or_default();
                fail(format!("perfect:{mode}"), w, "class bound asserts perfection".into());
            }
        }
        if let Some(x) = chi.filter(|&x| x != omega) {
            fail("perfect:chi_equals_omega".into(), Vec::new(), format!("chi {x} != w {omega}"));
        }
    }
    if let (Some(h), Some(s)) = (&hole, &sweep) {
        if h.perfect != s.perfect {
            let w = h.witness.clone().or(s.witness.clone()).map(|w| w.vertices).unwrap_or_default();
            fail("perfect:mode_agreement".into(), w, format!("hole_search {} subgraph_sweep {}", h.perfect, s.perfect));
        }
    }
    rec.failures = failures;
    rec
}

/// Generates the corpus for `cfg` and checks every instance.
pub fn run_suite(cfg: &SweepConfig) -> Result<SweepReport> {
    let instances = generate_class_instances(cfg)?;
    Ok(run_on(cfg, &instances))
}

/// Checks a given corpus under the settings of `cfg`.
pub fn run_on(cfg: &SweepConfig, instances: &[Instance]) -> SweepReport {
    let records: Vec<InstanceRecord> =
        instances.par_iter().enumerate().map(|(i, inst)| check_instance(cfg, i, inst)).collect();

    let mut report = SweepReport {
        config: cfg.clone(),
        instances_tested: records.len(),
        orderings_checked: 0,
        failures: Vec::new(),
        histogram: Vec::new(),
        branch_counts: BTreeMap::new(),
        omega_counts: BTreeMap::new(),
        max_chi_by_omega: BTreeMap::new(),
        perfect_checked: 0,
        modes_compared: 0,
        injected: 0,
        records: Vec::new(),
    };
    let mut hist: BTreeMap<(Colourer, usize, usize), (usize, usize)> = BTreeMap::new();
    for r in &records {
        report.orderings_checked += r.orderings;
        report.failures.extend(r.failures.iter().cloned());
        *report.omega_counts.entry(r.omega).or_default() += 1;
        if let Some(x) = r.chi {
            let e = report.max_chi_by_omega.entry(r.omega).or_default();
            *e = (*e).max(x);
        }
        for (&b, &count) in &r.branches {
            *report.branch_counts.entry(b).or_default() += count;
        }
        for run in &r.runs {
            hist.entry((run.colourer, r.omega, run.colours_used)).or_insert((run.bound, 0)).1 += 1;
        }
        if r.perfect.asserted && (r.perfect.hole_search.is_some() || r.perfect.subgraph_sweep.is_some()) {
            report.perfect_checked += 1;
        }
        if r.perfect.hole_search.is_some() && r.perfect.subgraph_sweep.is_some() {
            report.modes_compared += 1;
        }
        report.injected += r.injected.is_some() as usize;
    }
    report.histogram = hist
        .into_iter()
        .map(|((colourer, omega, colours_used), (bound, count))| HistogramRow { colourer, omega, colours_used, bound, count })
        .collect();

    if cfg.class.forbids_diamond() {
        let largest = instances.iter().map(|i| i.graph.n()).max().unwrap_or(0);
        for w in (2..=4).filter(|&w| w <= largest) {
            if !report.omega_counts.contains_key(&w) {
                report.failures.push(Failure {
                    index: None,
                    graph: String::new(),
                    property: "coverage".into(),
                    witness: Vec::new(),
                    detail: format!("no instance with w = {w}"),
                });
            }
        }
    }
    if cfg.mode == Mode::EnumerateAll && records.is_empty() {
        report.failures.push(Failure {
            index: None,
            graph: String::new(),
            property: "coverage".into(),
            witness: Vec::new(),
            detail: "enumeration produced no instances".into(),
        });
    }
    report.records = records;
    report
}
