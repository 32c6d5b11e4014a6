//! Named verification suites: every quantitative claim about the two-qubit
//! and two-qutrit graphs, the ring lines and the polar spaces, checked
//! against freshly computed values.

use std::error::Error;
use std::fmt::{self, Display};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::geometry::{
    build_pauli_graph, build_pauli_graph_with, classify_hyperplane, dual_graph, dual_structure, enumerate_mcs,
    exact_cover, find_ovoids, find_spreads, line_entanglement, line_entanglement_by_schmidt, mermin_arrangement,
    mub_deviation, partition_report, verify_polarization, BuildOptions, Entanglement, HyperplaneKind,
    PartitionName, PauliGraphBundle,
};
use crate::graph::{
    chromatic_number, complete_graph, girth, hypercube, is_isomorphic, is_strongly_regular, maximum_independent_set,
    minimum_vertex_cover, petersen_graph, spectrum, verify_isomorphism, vertex_connectivity, BitSet, LabeledGraph,
    Spectrum,
};
use crate::par::Exec;
use crate::pauli::{make_operator, symplectic_product, SymplecticIndex, SystemParams};
use crate::polar_space::{cross_validate, predicted_pg};
use crate::ring_lines::{
    builtin_ring, hyperplane_correspondence, pair_symmetric_subsets, projective_line, standard_pair, RingName,
};

type Outcome = Result<(), Box<dyn Error>>;

/// Random pairs per system for the group-law check.
pub const GROUP_LAW_SAMPLES: usize = 1000;

const GROUP_LAW_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub expected: String,
    pub measured: String,
    pub passed: bool,
    /// Shown for context; never affects the verdict.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Group {
    pub name: String,
    pub checks: Vec<CheckResult>,
    /// Wall time; kept out of serialized output.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Group {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            checks: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn push(&mut self, name: &str, expected: String, measured: String, passed: bool, informational: bool) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            expected,
            measured,
            passed,
            informational,
        });
    }

    /// Passes when both sides print the same.
    fn eq(&mut self, name: &str, expected: impl Display, measured: impl Display) {
        let (e, m) = (expected.to_string(), measured.to_string());
        let ok = e == m;
        self.push(name, e, m, ok, false);
    }

    fn truth(&mut self, name: &str, ok: bool, detail: impl Display) {
        let detail = detail.to_string();
        let measured = if detail.is_empty() { ok.to_string() } else { format!("{ok} ({detail})") };
        self.push(name, "true".into(), measured, ok, false);
    }

    fn info(&mut self, name: &str, expected: impl Display, measured: impl Display) {
        let (e, m) = (expected.to_string(), measured.to_string());
        let ok = e == m;
        self.push(name, e, m, ok, true);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.informational)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed && !c.informational)
    }
}

/// Runs `body`, turning an early error into a failed check.
fn run(name: &str, body: impl FnOnce(&mut Group) -> Outcome) -> Group {
    let start = Instant::now();
    let mut g = Group::new(name);
    if let Err(e) = body(&mut g) {
        g.push("completed without error", "ok".into(), e.to_string(), false, false);
    }
    g.elapsed = start.elapsed();
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    TwoQubit,
    TwoQutrit,
    RingLines,
    Polar,
    Oracle,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::TwoQubit,
        Suite::TwoQutrit,
        Suite::RingLines,
        Suite::Polar,
        Suite::Oracle,
        Suite::All,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::TwoQubit => "two_qubit",
            Suite::TwoQutrit => "two_qutrit",
            Suite::RingLines => "ring_lines",
            Suite::Polar => "polar",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite {} (expected two_qubit, two_qutrit, ring_lines, polar, oracle or all)", self.0)
    }
}

impl Error for UnknownSuite {}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub passed: bool,
    pub groups: Vec<Group>,
}

impl VerificationReport {
    pub fn elapsed(&self) -> Duration {
        self.groups.iter().map(|g| g.elapsed).sum()
    }
}

pub fn run_suite(suite: Suite) -> VerificationReport {
    let groups = match suite {
        Suite::TwoQubit => vec![
            two_qubit_graph(),
            two_qubit_subgraphs(),
            two_qubit_isomorphisms(),
            mermin_square(),
            w2_geometry(),
        ],
        Suite::TwoQutrit => vec![two_qutrit_graph(), two_qutrit_dual(), two_qutrit_mubs()],
        Suite::RingLines => vec![ring_lines()],
        Suite::Polar => vec![polar_spaces()],
        Suite::Oracle => vec![oracle_equivalence()],
        Suite::All => [Suite::TwoQubit, Suite::TwoQutrit, Suite::RingLines, Suite::Polar, Suite::Oracle]
            .into_iter()
            .flat_map(|s| run_suite(s).groups)
            .collect(),
    };
    VerificationReport {
        suite,
        passed: groups.iter().all(Group::passed),
        groups,
    }
}

fn bundle(p: u32, n: usize) -> Result<PauliGraphBundle, Box<dyn Error>> {
    Ok(build_pauli_graph(&SystemParams::new(p, n)?)?)
}

fn spec(pairs: &[(i64, usize)]) -> Spectrum {
    Spectrum::from_pairs(pairs)
}

fn opt(x: Option<usize>) -> String {
    x.map_or("-".into(), |x| x.to_string())
}

/// Isomorphism with the witness checked on every vertex pair.
fn iso_checked(g: &LabeledGraph, h: &LabeledGraph) -> Result<bool, Box<dyn Error>> {
    Ok(is_isomorphic(g, h)?.is_some_and(|m| verify_isomorphism(g, h, &m)))
}

fn partition_checks(g: &mut Group, b: &PauliGraphBundle, name: PartitionName) -> Outcome {
    let rep = partition_report(b, name)?;
    for c in &rep.checks {
        g.truth(&format!("{name}: {}", c.clause), c.passed, &c.detail);
    }
    Ok(())
}

/// Operator labels of the standard two-qubit subsets.
pub mod two_qubit_sets {
    pub const MS: [&str; 9] = ["4", "5", "6", "7", "8", "9", "10", "11", "12"];
    pub const BP: [&str; 6] = ["1", "2", "3", "a", "b", "c"];
    pub const FP: [&str; 7] = ["1", "2", "3", "a", "4", "5", "6"];
    pub const CB: [&str; 8] = ["b", "7", "8", "9", "c", "10", "11", "12"];
    pub const OVOID: [&str; 5] = ["1", "2", "6", "9", "12"];
}

pub fn two_qubit_graph() -> Group {
    run("two-qubit graph", |g| {
        let b = bundle(2, 2)?;
        let p4 = b.graph();
        g.eq("vertices", 15, p4.vertex_count());
        g.eq("edges", 45, p4.edge_count());
        g.eq("degree", 6, opt(p4.regular_degree()));
        g.eq("spectrum", spec(&[(-3, 5), (1, 9), (6, 1)]), spectrum(p4)?);
        g.eq("girth", 3, opt(girth(p4)));
        g.eq("vertex connectivity", 4, vertex_connectivity(p4)?);
        g.info("chromatic number", 4, chromatic_number(p4)?);
        Ok(())
    })
}

pub fn two_qubit_subgraphs() -> Group {
    use two_qubit_sets::*;
    run("two-qubit subgraphs", |g| {
        let b = bundle(2, 2)?;
        let p4 = b.graph();
        let cover = minimum_vertex_cover(p4)?;
        g.eq("minimum vertex cover size", 10, cover.len());
        let pg = p4.induced_subgraph(&cover);
        g.truth("cover is the Petersen graph", iso_checked(&pg, &petersen_graph())?, "");
        g.eq("PG spectrum", spec(&[(-2, 4), (1, 5), (3, 1)]), spectrum(&pg)?);
        g.eq("PG girth", 5, opt(girth(&pg)));
        g.eq("PG vertex connectivity", 3, vertex_connectivity(&pg)?);

        let sub = |labels: &[&str]| -> Result<LabeledGraph, Box<dyn Error>> { Ok(p4.induced_subgraph(&b.vertices_of(labels)?)) };
        let ms = sub(&MS)?;
        g.eq("MS spectrum", spec(&[(-2, 4), (1, 4), (4, 1)]), spectrum(&ms)?);
        g.eq("MS girth", 3, opt(girth(&ms)));
        g.eq("MS vertex connectivity", 3, vertex_connectivity(&ms)?);
        g.info("MS chromatic number", 3, chromatic_number(&ms)?);
        let bp = sub(&BP)?;
        g.eq("BP spectrum", spec(&[(-3, 1), (0, 4), (3, 1)]), spectrum(&bp)?);
        g.eq("BP girth", 4, opt(girth(&bp)));
        g.eq("BP vertex connectivity", 2, vertex_connectivity(&bp)?);
        g.info("BP chromatic number", 2, chromatic_number(&bp)?);
        let fp = sub(&FP)?;
        g.eq("FP spectrum", spec(&[(-2, 1), (-1, 3), (1, 2), (3, 1)]), spectrum(&fp)?);
        let cb = sub(&CB)?;
        g.eq("CB spectrum", spec(&[(-3, 1), (-1, 3), (1, 3), (3, 1)]), spectrum(&cb)?);
        g.truth("CB is a 3-cube", iso_checked(&cb, &hypercube(3))?, "");

        for name in [PartitionName::FpCb, PartitionName::BpMs, PartitionName::IPg] {
            partition_checks(g, &b, name)?;
        }
        Ok(())
    })
}

pub fn two_qubit_isomorphisms() -> Group {
    run("two-qubit isomorphisms", |g| {
        let b = bundle(2, 2)?;
        let l6 = complete_graph(6).line_graph().complement();
        g.truth("P4 is the complement of L(K6)", iso_checked(b.graph(), &l6)?, "");
        let l7 = complete_graph(7).line_graph().complement();
        let cover = minimum_vertex_cover(&l7)?;
        g.eq("minimum vertex cover of the complement of L(K7)", 15, cover.len());
        let induced = l7.induced_subgraph(&cover);
        g.truth("that cover induces P4", iso_checked(&induced, b.graph())?, "");
        Ok(())
    })
}

pub fn mermin_square() -> Group {
    run("Mermin square", |g| {
        let b = bundle(2, 2)?;
        let s = enumerate_mcs(&b)?;
        let grid = b.vertices_of(&two_qubit_sets::MS)?;
        let arr = mermin_arrangement(&s, &grid)?;
        let names: Vec<Vec<&str>> = arr.iter().map(|r| r.iter().map(|&v| b.label(v)).collect()).collect();
        g.info("arrangement", "[[\"4\", \"8\", \"12\"], [\"9\", \"10\", \"5\"], [\"11\", \"6\", \"7\"]]", format!("{names:?}"));
        let pol = verify_polarization(&b, &arr)?;
        g.truth("rows and columns commute, products are scalars", true, "");
        let exps = |xs: &[crate::pauli::PhaseScalar]| xs.iter().map(|x| x.exponent()).collect::<Vec<_>>();
        // Exponents of i: 2 is -1.
        g.eq("row phase exponents", "[2, 2, 2]", format!("{:?}", exps(&pol.rows)));
        g.eq("column phase exponents", "[0, 0, 0]", format!("{:?}", exps(&pol.columns)));
        g.eq("product of the six scalars", 2, pol.total().exponent());
        g.truth("Kochen-Specker witness", pol.is_kochen_specker_witness(), "");
        Ok(())
    })
}

pub fn w2_geometry() -> Group {
    run("W(2) geometry", |g| {
        let b = bundle(2, 2)?;
        let s = enumerate_mcs(&b)?;
        g.eq("lines", 15, s.line_count());
        let spreads = find_spreads(&s, None);
        g.eq("spreads", 6, spreads.len());
        let mut worst: f64 = 0.0;
        for sp in &spreads {
            let lines: Vec<Vec<usize>> = sp.iter().map(|&l| s.line(l).to_vec()).collect();
            worst = worst.max(mub_deviation(&b, &lines)?);
        }
        g.truth("spread bases mutually unbiased", worst < 1e-8, format!("max deviation {worst:.1e}"));
        let ovoids = find_ovoids(&s, None);
        g.eq("ovoids", 6, ovoids.len());
        g.truth(
            "ovoids are hyperplanes of ovoid type",
            ovoids.iter().all(|o| classify_hyperplane(&s, o).kind == HyperplaneKind::Ovoid),
            "",
        );
        let mut unentangled = 0;
        let mut agree = 0;
        for l in 0..s.line_count() {
            let comb = line_entanglement(&b, s.line(l))?;
            let num = line_entanglement_by_schmidt(&b, s.line(l))?;
            unentangled += usize::from(comb == Entanglement::Unentangled);
            agree += usize::from(comb == num);
        }
        g.eq("unentangled / entangled lines", "9 / 6", format!("{unentangled} / {}", s.line_count() - unentangled));
        g.eq("criterion agrees with Schmidt rank", 15, agree);
        Ok(())
    })
}

pub fn ring_lines() -> Group {
    run("ring lines", |g| {
        let m2 = builtin_ring(RingName::M2Z2);
        let line = projective_line(&m2);
        g.eq("M2(Z2) line points", 35, line.point_count());
        let units: Vec<&str> = m2.units().iter().map(|&u| m2.label(u)).collect();
        g.eq("units", "1′ 2′ 9′ 11′ 12′ 13′", units.join(" "));
        let (u0, v0) = standard_pair(&line);
        let (distant, neighbor) = pair_symmetric_subsets(&line, u0, v0)?;
        g.eq("pair-symmetric subsets", "6 + 9", format!("{} + {}", distant.len(), neighbor.len()));
        let b = bundle(2, 2)?;
        let ms = b.graph().induced_subgraph(&b.vertices_of(&two_qubit_sets::MS)?);
        let dg = line.distant_graph().induced_subgraph(&neighbor);
        g.truth("9-point distant graph is the MS graph", iso_checked(&dg, &ms)?, "");
        for (name, count) in [(RingName::F4, 5), (RingName::Z2xSq, 6), (RingName::Z2xZ2, 9)] {
            g.eq(&format!("{name} line points"), count, projective_line(&builtin_ring(name)).point_count());
        }
        let rep = hyperplane_correspondence(&b)?;
        for row in &rep.rows {
            g.truth(
                &format!("{} line <-> {}", row.ring, row.role),
                row.shape_ok && row.isomorphic,
                format!("{} points", row.line_points.len()),
            );
        }
        Ok(())
    })
}

/// MCS names of the two-qutrit structure, in table order.
const QUTRIT_PREFIXES: &str = "LMNPXYZ";

pub fn two_qutrit_graph() -> Group {
    run("two-qutrit graph", |g| {
        let b = bundle(3, 2)?;
        let p9 = b.graph();
        g.eq("vertices", 80, p9.vertex_count());
        g.eq("degree", 25, opt(p9.regular_degree()));
        g.eq("spectrum", spec(&[(-7, 15), (-1, 40), (5, 24), (25, 1)]), spectrum(p9)?);
        g.eq("strongly regular", false, is_strongly_regular(p9).is_some());
        let s = enumerate_mcs(&b)?;
        g.eq("maximal commuting sets", 40, s.line_count());
        g.eq("set size", "8", opt(s.uniform_orders().map(|(k, _)| k)));
        let mut names: Vec<String> = s.line_names().to_vec();
        names.sort();
        let mut expected: Vec<String> = QUTRIT_PREFIXES
            .chars()
            .flat_map(|c| {
                let count = if "LMNP".contains(c) { 4 } else { 8 };
                (1..=count).map(move |k| format!("{c}{k}"))
            })
            .collect();
        expected.sort();
        g.truth("every set matches a listed set", names == expected, format!("{} named", names.len()));
        Ok(())
    })
}

pub fn two_qutrit_dual() -> Group {
    run("two-qutrit dual", |g| {
        let b = bundle(3, 2)?;
        let s = enumerate_mcs(&b)?;
        let w = dual_graph(&s);
        let d = dual_structure(&s);
        g.eq("vertices", 40, w.vertex_count());
        g.eq("degree", 12, opt(w.regular_degree()));
        g.eq("spectrum", spec(&[(-4, 15), (2, 24), (12, 1)]), spectrum(&w)?);
        g.eq("independence number", 10, maximum_independent_set(&w)?.size);

        // Every vertex: 12 neighbours, and the other 27 split into three
        // ovoids through it.
        let ovoids = find_ovoids(&d, None);
        let mut splits = 0;
        for x in 0..w.vertex_count() {
            let nb = w.neighbors(x);
            let rest: Vec<usize> = (0..40).filter(|&v| v != x && !nb.contains(v)).collect();
            let rows: Vec<BitSet> = ovoids
                .iter()
                .filter(|o| o.contains(&x))
                .filter_map(|o| {
                    let idx: Option<Vec<usize>> = o
                        .iter()
                        .filter(|&&v| v != x)
                        .map(|v| rest.iter().position(|u| u == v))
                        .collect();
                    idx.map(|i| BitSet::from_indices(rest.len(), i))
                })
                .collect();
            let covers = exact_cover(rest.len(), &rows, Some(1), Exec::default());
            splits += usize::from(nb.len() == 12 && rest.len() == 27 && covers.first().is_some_and(|c| c.len() == 3));
        }
        g.eq("vertices whose 27 non-neighbours split into three ovoids", 40, splits);

        for name in [PartitionName::QutritOvoid, PartitionName::QutritPerp, PartitionName::QutritGrid] {
            partition_checks(g, &b, name)?;
        }
        Ok(())
    })
}

/// The distinguished ovoid of the dual, i.e. a spread of the two-qutrit lines.
pub const QUTRIT_SPREAD: [&str; 10] = ["L1", "M2", "N3", "P4", "X3", "X8", "Y4", "Y6", "Z2", "Z7"];

pub fn two_qutrit_mubs() -> Group {
    run("two-qutrit MUBs", |g| {
        let b = bundle(3, 2)?;
        let s = enumerate_mcs(&b)?;
        let lines: Vec<Vec<usize>> = s.lines_named(&QUTRIT_SPREAD)?.iter().map(|&l| s.line(l).to_vec()).collect();
        let mut covered: Vec<usize> = lines.iter().flatten().copied().collect();
        covered.sort_unstable();
        covered.dedup();
        g.eq("bases", 10, lines.len());
        g.eq("operators covered exactly once", "80 of 80", format!("{} of {}", covered.len(), lines.iter().map(Vec::len).sum::<usize>()));
        let dev = mub_deviation(&b, &lines)?;
        g.truth("pairwise unbiased", dev < 1e-8, format!("max deviation {dev:.1e}"));
        Ok(())
    })
}

/// Rows `N, v, L, D, r, l, lambda, mu, s, t, alpha` for qubits, N = 2, 3, 4.
pub const QUBIT_POLAR_ROWS: [[i64; 11]; 3] = [
    [2, 15, 15, 6, 1, -3, 1, 3, 2, 2, 1],
    [3, 63, 45, 30, 3, -5, 13, 15, 6, 4, 3],
    [4, 255, 153, 126, 7, -9, 61, 63, 14, 8, 7],
];

pub fn polar_spaces() -> Group {
    run("polar spaces", |g| {
        for row in QUBIT_POLAR_ROWS {
            let pg = predicted_pg(2, row[0] as u32)?;
            let got = [
                row[0],
                pg.v as i64,
                pg.lines as i64,
                pg.degree as i64,
                pg.r,
                pg.l,
                pg.lambda as i64,
                pg.mu as i64,
                pg.s as i64,
                pg.t as i64,
                pg.alpha as i64,
            ];
            g.eq(&format!("predicted row N = {}", row[0]), format!("{row:?}"), format!("{got:?}"));
        }
        for n in 2..=4 {
            let b = bundle(2, n)?;
            let cv = cross_validate(2, n as u32, &b)?;
            for c in &cv.checks {
                g.eq(&format!("N = {n}: {}", c.field), &c.expected, &c.measured);
            }
        }
        let b = bundle(3, 2)?;
        let cv = cross_validate(3, 2, &b)?;
        for c in &cv.checks {
            let name = format!("qutrits: {}", c.field);
            if c.informational {
                g.info(&name, &c.expected, &c.measured);
            } else {
                g.eq(&name, &c.expected, &c.measured);
            }
        }
        Ok(())
    })
}

/// Systems on which commutation is compared pair by pair.
pub const ORACLE_SYSTEMS: [(u32, usize); 5] = [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)];

pub fn oracle_equivalence() -> Group {
    run("oracle equivalence", |g| {
        let mut rng = ChaCha8Rng::seed_from_u64(GROUP_LAW_SEED);
        for (p, n) in ORACLE_SYSTEMS {
            let params = SystemParams::new(p, n)?;
            let options = BuildOptions {
                debug_oracle: true,
                ..BuildOptions::default()
            };
            let b = build_pauli_graph_with(&params, options)?;
            let count = b.vertex_count();
            let mut mismatches = 0;
            for u in 0..count {
                for v in u + 1..count {
                    let form = symplectic_product(b.symplectic(u), b.symplectic(v), p) == 0;
                    mismatches += usize::from(form != b.operator(u).commutes(b.operator(v))?);
                }
            }
            g.eq(&format!("({p}, {n}) commutation mismatches over all pairs"), 0, mismatches);

            let random = |rng: &mut ChaCha8Rng| {
                let mut coord = || (0..n).map(|_| rng.gen_range(0..p)).collect::<Vec<u32>>();
                let a = coord();
                SymplecticIndex::new(a, coord(), p)
            };
            let mut failures = 0;
            for _ in 0..GROUP_LAW_SAMPLES {
                let (u, v) = (random(&mut rng), random(&mut rng));
                let prod = make_operator(&params, &u)?.multiply(&make_operator(&params, &v)?)?;
                let sum = make_operator(&params, &u.add(&v, p))?;
                failures += usize::from(prod.equal_up_to_phase(&sum)?.is_none());
            }
            g.eq(&format!("({p}, {n}) group law failures in {GROUP_LAW_SAMPLES} pairs"), 0, failures);
        }
        Ok(())
    })
}
