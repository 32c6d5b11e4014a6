use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{
    classify_hyperplane, dual_graph, dual_structure, enumerate_mcs, exact_cover, find_ovoids, mub_deviation,
    GeometryError, HyperplaneKind, IncidenceStructure, PauliGraphBundle,
};
use crate::graph::{
    complete_bipartite, girth, hypercube, is_connected, is_isomorphic, maximum_independent_set, petersen_graph,
    rook_graph, spectrum, BitSet, LabeledGraph, Spectrum,
};
use crate::par::Exec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PartitionName {
    #[serde(rename = "FP_CB")]
    FpCb,
    #[serde(rename = "BP_MS")]
    BpMs,
    #[serde(rename = "I_PG")]
    IPg,
    #[serde(rename = "QUTRIT_GRID")]
    QutritGrid,
    #[serde(rename = "QUTRIT_OVOID")]
    QutritOvoid,
    #[serde(rename = "QUTRIT_PERP")]
    QutritPerp,
}

impl PartitionName {
    pub const ALL: [PartitionName; 6] = [
        PartitionName::FpCb,
        PartitionName::BpMs,
        PartitionName::IPg,
        PartitionName::QutritGrid,
        PartitionName::QutritOvoid,
        PartitionName::QutritPerp,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PartitionName::FpCb => "FP_CB",
            PartitionName::BpMs => "BP_MS",
            PartitionName::IPg => "I_PG",
            PartitionName::QutritGrid => "QUTRIT_GRID",
            PartitionName::QutritOvoid => "QUTRIT_OVOID",
            PartitionName::QutritPerp => "QUTRIT_PERP",
        }
    }

    /// The `(p, n)` system the partition lives in.
    pub fn system(&self) -> (u32, usize) {
        match self {
            PartitionName::FpCb | PartitionName::BpMs | PartitionName::IPg => (2, 2),
            _ => (3, 2),
        }
    }
}

impl fmt::Display for PartitionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PartitionName {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PartitionName::ALL
            .into_iter()
            .find(|p| p.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| GeometryError::UnknownPartition(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Part {
    pub name: String,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub clause: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub partition: PartitionName,
    pub parts: Vec<Part>,
    pub checks: Vec<Check>,
    /// Vertex correspondence exhibiting the main isomorphism claim, if any.
    pub witness: Option<Vec<(String, String)>>,
}

impl PartitionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn check(&mut self, clause: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            clause: clause.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    fn part(&mut self, name: &str, labels: Vec<String>) {
        self.parts.push(Part {
            name: name.to_string(),
            members: labels,
        });
    }

    fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Builds the named partition and checks each of its structural claims.
/// Fails with the first violated clause.
pub fn verify_partition(bundle: &PauliGraphBundle, name: PartitionName) -> Result<PartitionReport, GeometryError> {
    let report = partition_report(bundle, name)?;
    match report.first_failure() {
        None => Ok(report),
        Some(c) => Err(GeometryError::PartitionFailed {
            partition: name.to_string(),
            clause: c.clause.clone(),
            detail: c.detail.clone(),
        }),
    }
}

/// Like [`verify_partition`], but returns the report even when claims fail.
pub fn partition_report(bundle: &PauliGraphBundle, name: PartitionName) -> Result<PartitionReport, GeometryError> {
    let (p, n) = (bundle.params().p(), bundle.params().n());
    if name.system() != (p, n) {
        return Err(GeometryError::NotApplicable {
            partition: name.to_string(),
            p,
            n,
        });
    }
    let mut report = PartitionReport {
        partition: name,
        parts: Vec::new(),
        checks: Vec::new(),
        witness: None,
    };
    let s = enumerate_mcs(bundle)?;
    match name {
        PartitionName::FpCb => fp_cb(bundle, &s, &mut report)?,
        PartitionName::BpMs => bp_ms(bundle, &s, &mut report)?,
        PartitionName::IPg => i_pg(bundle, &s, &mut report)?,
        PartitionName::QutritGrid => qutrit_grid(bundle, &s, &mut report)?,
        PartitionName::QutritOvoid => qutrit_ovoid(&s, &mut report)?,
        PartitionName::QutritPerp => qutrit_perp(&s, &mut report)?,
    }
    Ok(report)
}

fn labels_of(g: &LabeledGraph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v).to_string()).collect()
}

fn complement_of(n: usize, part: &[usize]) -> Vec<usize> {
    (0..n).filter(|v| !part.contains(v)).collect()
}

fn spectrum_matches(g: &LabeledGraph, expected: &[(i64, usize)]) -> (bool, String) {
    match spectrum(g) {
        Ok(s) => (s == Spectrum::from_pairs(expected), s.to_string()),
        Err(e) => (false, e.to_string()),
    }
}

/// Isomorphism check returning a label-to-label witness.
fn isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> Result<Option<Vec<(String, String)>>, GeometryError> {
    Ok(is_isomorphic(g, h)?.map(|map| {
        map.iter()
            .enumerate()
            .map(|(u, &w)| (g.label(u).to_string(), h.label(w).to_string()))
            .collect()
    }))
}

/// Every edge `{u, v}` of the induced subgraph on `from` has `u v`
/// proportional to an operator in `to`.
fn edges_map_into(bundle: &PauliGraphBundle, from: &[usize], to: &[usize]) -> (bool, String) {
    for (i, &u) in from.iter().enumerate() {
        for &v in &from[i + 1..] {
            if !bundle.graph().is_adjacent(u, v) {
                continue;
            }
            let prod = bundle.operator(u).multiply(bundle.operator(v)).expect("same system");
            match bundle.identify(&prod) {
                Some((w, _)) if to.contains(&w) => {}
                _ => return (false, format!("{}.{} leaves the target set", bundle.label(u), bundle.label(v))),
            }
        }
    }
    (true, String::new())
}

/// For every line, the product of any two of its operators is a scalar
/// multiple of an operator on the same line, or of the identity.
fn lines_closed(bundle: &PauliGraphBundle, s: &IncidenceStructure, lines: &[usize]) -> (bool, String) {
    for &l in lines {
        let line = s.line(l);
        for (i, &u) in line.iter().enumerate() {
            for &v in &line[i + 1..] {
                let prod = bundle.operator(u).multiply(bundle.operator(v)).expect("same system");
                let ok = prod.as_scalar().is_some() || bundle.identify(&prod).is_some_and(|(w, _)| line.contains(&w));
                if !ok {
                    return (false, format!("{}.{} leaves line {}", bundle.label(u), bundle.label(v), s.line_name(l)));
                }
            }
        }
    }
    (true, format!("{} lines", lines.len()))
}

fn lines_inside(s: &IncidenceStructure, set: &[usize]) -> Vec<usize> {
    (0..s.line_count())
        .filter(|&l| s.line(l).iter().all(|x| set.contains(x)))
        .collect()
}

fn fp_cb(bundle: &PauliGraphBundle, s: &IncidenceStructure, r: &mut PartitionReport) -> Result<(), GeometryError> {
    let g = bundle.graph();
    let fp = bundle.vertices_of(&["1", "2", "3", "a", "4", "5", "6"])?;
    let cb = complement_of(g.vertex_count(), &fp);
    r.part("FP", labels_of(g, &fp));
    r.part("CB", labels_of(g, &cb));

    let c = classify_hyperplane(s, &fp);
    let reference = c.reference.map(|x| bundle.label(x).to_string());
    r.check(
        "FP is the perp-set of a",
        c.kind == HyperplaneKind::PerpSet && reference.as_deref() == Some("a"),
        format!("{:?} {:?}", c.kind, reference),
    );
    let fpg = g.induced_subgraph(&fp);
    let (ok, spec) = spectrum_matches(&fpg, &[(-2, 1), (-1, 3), (1, 2), (3, 1)]);
    r.check("FP spectrum {-2, -1^3, 1^2, 3}", ok && fpg.edge_count() == 9, spec);
    let (ok, detail) = lines_closed(bundle, s, &lines_inside(s, &fp));
    r.check("two operators on an FP line give the third", ok, detail);

    let cbg = g.induced_subgraph(&cb);
    let (ok, spec) = spectrum_matches(&cbg, &[(-3, 1), (-1, 3), (1, 3), (3, 1)]);
    r.check("CB spectrum {-3, -1^3, 1^3, 3}", ok && cbg.edge_count() == 12, spec);
    let witness = isomorphic(&cbg, &hypercube(3))?;
    r.check("CB is a 3-cube", witness.is_some(), "");
    r.witness = witness;
    let (ok, detail) = edges_map_into(bundle, &cb, &fp);
    r.check("CB edges map to FP vertices", ok, detail);
    Ok(())
}

fn bp_ms(bundle: &PauliGraphBundle, s: &IncidenceStructure, r: &mut PartitionReport) -> Result<(), GeometryError> {
    let g = bundle.graph();
    let bp = bundle.vertices_of(&["1", "2", "3", "a", "b", "c"])?;
    let ms = complement_of(g.vertex_count(), &bp);
    r.part("BP", labels_of(g, &bp));
    r.part("MS", labels_of(g, &ms));

    let bpg = g.induced_subgraph(&bp);
    let (ok, spec) = spectrum_matches(&bpg, &[(-3, 1), (0, 4), (3, 1)]);
    r.check("BP spectrum {-3, 0^4, 3}", ok, spec);
    let w = isomorphic(&bpg, &complete_bipartite(3, 3))?;
    r.check("BP is K[3,3]", w.is_some(), "");
    let (ok, detail) = edges_map_into(bundle, &bp, &ms);
    r.check("BP edges map to MS vertices", ok, detail);

    let c = classify_hyperplane(s, &ms);
    r.check(
        "MS is a 3x3 grid",
        c.kind == HyperplaneKind::Grid && c.grid == Some((3, 3)),
        format!("{:?} {:?}", c.kind, c.grid),
    );
    let msg = g.induced_subgraph(&ms);
    let (ok, spec) = spectrum_matches(&msg, &[(-2, 4), (1, 4), (4, 1)]);
    r.check("MS spectrum {-2^4, 1^4, 4}", ok, spec);
    let self_compl = isomorphic(&msg, &msg.complement())?;
    r.check("MS is self-complementary", self_compl.is_some(), "");
    let inside = lines_inside(s, &ms);
    let (ok, detail) = lines_closed(bundle, s, &inside);
    r.check("two operators on an MS line give the third", ok, detail);

    // Lines through two BP points form the dual grid.
    let through_bp = (0..s.line_count())
        .filter(|&l| s.line(l).iter().filter(|x| bp.contains(x)).count() == 2)
        .count();
    r.check(
        "9 lines share an edge of BP, 6 lie in MS",
        through_bp == 9 && inside.len() == 6,
        format!("{through_bp} + {}", inside.len()),
    );
    r.witness = w;
    Ok(())
}

fn i_pg(bundle: &PauliGraphBundle, s: &IncidenceStructure, r: &mut PartitionReport) -> Result<(), GeometryError> {
    let g = bundle.graph();
    let ind = bundle.vertices_of(&["1", "2", "6", "9", "12"])?;
    let pg = complement_of(g.vertex_count(), &ind);
    r.part("I", labels_of(g, &ind));
    r.part("PG", labels_of(g, &pg));

    r.check("I is independent", g.is_independent(&ind), "");
    let c = classify_hyperplane(s, &ind);
    r.check("I is an ovoid", c.kind == HyperplaneKind::Ovoid, format!("{:?}", c.kind));
    let alpha = maximum_independent_set(g)?.size;
    r.check(
        "PG is a minimum vertex cover",
        pg.len() == 10 && g.vertex_count() - alpha == pg.len(),
        format!("alpha = {alpha}, cover size {}", pg.len()),
    );
    let pgg = g.induced_subgraph(&pg);
    let (ok, spec) = spectrum_matches(&pgg, &[(-2, 4), (1, 5), (3, 1)]);
    r.check("PG spectrum {-2^4, 1^5, 3}", ok, spec);
    r.check("PG girth 5", girth(&pgg) == Some(5), format!("{:?}", girth(&pgg)));
    let witness = isomorphic(&pgg, &petersen_graph())?;
    r.check("PG is the Petersen graph", witness.is_some(), "");
    r.witness = witness;
    let (ok, detail) = edges_map_into(bundle, &pg, &ind);
    r.check("PG edges map to I vertices", ok, detail);
    Ok(())
}

fn names(prefixes: &str, count: usize) -> Vec<String> {
    prefixes
        .chars()
        .flat_map(|c| (1..=count).map(move |k| format!("{c}{k}")))
        .collect()
}

/// The forty lines, the dual structure, and the dual graph on line names.
fn dual_setup(s: &IncidenceStructure, r: &mut PartitionReport) -> (IncidenceStructure, LabeledGraph) {
    let d = dual_structure(s);
    let w = dual_graph(s);
    r.check(
        "dual graph: 40 vertices, 12-regular",
        w.vertex_count() == 40 && w.regular_degree() == Some(12),
        format!("{} vertices, degree {:?}", w.vertex_count(), w.regular_degree()),
    );
    (d, w)
}

fn qutrit_grid(bundle: &PauliGraphBundle, s: &IncidenceStructure, r: &mut PartitionReport) -> Result<(), GeometryError> {
    let (d, w) = dual_setup(s, r);
    let grid = s.lines_named(&names("LMNP", 4))?;
    let xs = s.lines_named(&names("X", 8))?;
    let cube = s.lines_named(&names("YZ", 8))?;
    r.part("grid", labels_of(&w, &grid));
    r.part("coclique", labels_of(&w, &xs));
    r.part("hypercube", labels_of(&w, &cube));

    let c = classify_hyperplane(&d, &grid);
    r.check(
        "L/M/N/P form a 4x4 grid hyperplane",
        c.kind == HyperplaneKind::Grid && c.grid == Some((4, 4)),
        format!("{:?} {:?}", c.kind, c.grid),
    );
    let gg = w.induced_subgraph(&grid);
    let witness = isomorphic(&gg, &rook_graph(4, 4))?;
    r.check("L/M/N/P induce the 4x4 grid graph", witness.is_some(), "");
    r.witness = witness;
    r.check("X1..X8 are pairwise disjoint", w.is_independent(&xs), "");
    let x_lines: Vec<Vec<usize>> = xs.iter().map(|&l| s.line(l).to_vec()).collect();
    let dev = mub_deviation(bundle, &x_lines)?;
    r.check("X1..X8 give mutually unbiased bases", dev < 1e-8, format!("deviation {dev:.2e}"));
    let cg = w.induced_subgraph(&cube);
    let iso = isomorphic(&cg, &hypercube(4))?;
    r.check("Y/Z induce a 4-cube", iso.is_some(), "");
    Ok(())
}

/// Vertices of a 40-vertex dual graph that are the standard ovoid.
const OVOID: [&str; 10] = ["L1", "M2", "N3", "P4", "X3", "X8", "Y4", "Y6", "Z2", "Z7"];

fn qutrit_ovoid(s: &IncidenceStructure, r: &mut PartitionReport) -> Result<(), GeometryError> {
    let (d, w) = dual_setup(s, r);
    let ovoid = s.lines_named(&OVOID)?;
    r.check("the ovoid is a 10-coclique", w.is_independent(&ovoid), "");
    let c = classify_hyperplane(&d, &ovoid);
    r.check("it meets every dual line once", c.kind == HyperplaneKind::Ovoid, format!("{:?}", c.kind));
    let alpha = maximum_independent_set(&w)?.size;
    r.check("independence number 10", alpha == 10, format!("{alpha}"));

    // Some ovoid vertex x splits the rest: its 12 neighbours form four
    // triangles (the dual lines through x), the other 18 a bipartite graph.
    let mut chosen = None;
    for &x in &ovoid {
        let attempt = ovoid_split(s, &w, &ovoid, x);
        if attempt.iter().all(|c| c.passed) {
            chosen = Some((x, attempt));
            break;
        }
        chosen.get_or_insert((x, attempt));
    }
    let (x, checks) = chosen.expect("ovoid is non-empty");
    r.checks.extend(checks);
    let triangles: Vec<usize> = w.neighbors(x).to_vec();
    let rest: Vec<usize> = (0..40).filter(|v| !ovoid.contains(v) && !triangles.contains(v)).collect();
    let (left, right) = two_colouring(&w.induced_subgraph(&rest)).unwrap_or_default();
    r.part("ovoid", labels_of(&w, &ovoid));
    r.part("coclique A", left.iter().map(|&k| w.label(rest[k]).to_string()).collect());
    r.part("coclique B", right.iter().map(|&k| w.label(rest[k]).to_string()).collect());
    r.part("triangles", labels_of(&w, &triangles));
    Ok(())
}

/// Claims about the split of the dual graph around ovoid vertex `x`.
fn ovoid_split(s: &IncidenceStructure, w: &LabeledGraph, ovoid: &[usize], x: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let mut push = |clause: &str, passed: bool, detail: String| {
        out.push(Check {
            clause: clause.to_string(),
            passed,
            detail,
        })
    };
    let nbrs = w.neighbors(x).to_vec();
    let tri = w.induced_subgraph(&nbrs);
    let components = components(&tri);
    let four_triangles = nbrs.len() == 12
        && components.len() == 4
        && components.iter().all(|c| c.len() == 3 && tri.is_clique(c));
    push(
        "the neighbours of an ovoid vertex form four triangles",
        four_triangles,
        format!("reference {}", w.label(x)),
    );
    // The MCSs of each triangle share the same operators; together these
    // operators make up the reference MCS.
    let mut shared: Vec<usize> = Vec::new();
    let mut common_ok = four_triangles;
    for comp in &components {
        let mut common = s.line(nbrs[comp[0]]).to_vec();
        for &k in &comp[1..] {
            common.retain(|p| s.line(nbrs[k]).contains(p));
        }
        common_ok &= !common.is_empty();
        shared.extend(common);
    }
    shared.sort_unstable();
    shared.dedup();
    push(
        "the operators shared within each triangle make up one MCS",
        common_ok && shared == s.line(x),
        format!("{} shared operators", shared.len()),
    );
    let rest: Vec<usize> = (0..w.vertex_count())
        .filter(|v| !ovoid.contains(v) && !nbrs.contains(v))
        .collect();
    let rg = w.induced_subgraph(&rest);
    let sides = two_colouring(&rg);
    let balanced = sides.as_ref().is_some_and(|(a, b)| a.len() == 9 && b.len() == 9);
    push(
        "the remaining 18 split into two 9-cocliques",
        rest.len() == 18 && balanced && is_connected(&rg),
        format!("{} vertices", rest.len()),
    );
    out
}

fn components(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            for v in g.neighbors(comp[k]).iter() {
                if !std::mem::replace(&mut seen[v], true) {
                    comp.push(v);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Sides of a proper 2-colouring (vertex 0 of each component on the left).
fn two_colouring(g: &LabeledGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    for comp in components(g) {
        side[comp[0]] = 0;
        let mut stack = vec![comp[0]];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u).iter() {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    stack.push(v);
                } else if side[v] == side[u] {
                    return None;
                }
            }
        }
    }
    let left = (0..n).filter(|&v| side[v] == 0).collect();
    let right = (0..n).filter(|&v| side[v] == 1).collect();
    Some((left, right))
}

/// Reference vertex for the perp-set split.
const PERP_REFERENCE: &str = "L1";

fn qutrit_perp(s: &IncidenceStructure, r: &mut PartitionReport) -> Result<(), GeometryError> {
    let (d, w) = dual_setup(s, r);
    let x = s.lines_named(&[PERP_REFERENCE])?[0];
    let perp: Vec<usize> = w.neighbors(x).to_vec();
    let mut closed = perp.clone();
    closed.push(x);
    closed.sort_unstable();
    let c = classify_hyperplane(&d, &closed);
    r.check(
        "the reference vertex and its 12 neighbours form a perp-set",
        perp.len() == 12 && c.kind == HyperplaneKind::PerpSet && c.reference == Some(x),
        format!("{:?}", c.kind),
    );
    let rest: Vec<usize> = (0..w.vertex_count()).filter(|v| !closed.contains(v)).collect();

    // Ovoids through x; removing x leaves 9-subsets of the remaining 27.
    let pieces: Vec<Vec<usize>> = find_ovoids(&d, None)
        .into_iter()
        .filter(|o| o.contains(&x))
        .map(|o| o.into_iter().filter(|&v| v != x).collect())
        .collect();
    let index: Vec<Vec<usize>> = pieces
        .iter()
        .map(|p| p.iter().map(|v| rest.iter().position(|u| u == v).unwrap_or(usize::MAX)).collect())
        .collect();
    let valid: Vec<usize> = (0..pieces.len())
        .filter(|&k| index[k].iter().all(|&i| i != usize::MAX))
        .collect();
    let rows: Vec<BitSet> = valid
        .iter()
        .map(|&k| BitSet::from_indices(rest.len(), index[k].iter().copied()))
        .collect();
    let covers = exact_cover(rest.len(), &rows, None, Exec::default());
    r.check(
        "the other 27 are three ovoids meeting only at the reference vertex",
        rest.len() == 27 && covers.first().is_some_and(|c| c.len() == 3),
        format!("{} ovoids through the reference, {} decompositions", pieces.len(), covers.len()),
    );
    r.part("reference", vec![w.label(x).to_string()]);
    r.part("perp-set", labels_of(&w, &perp));
    if let Some(cover) = covers.first() {
        for (k, &piece) in cover.iter().enumerate() {
            let mut ovoid = pieces[valid[piece]].clone();
            ovoid.push(x);
            ovoid.sort_unstable();
            r.part(&format!("ovoid {}", k + 1), labels_of(&w, &ovoid));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_pauli_graph;
    use crate::pauli::SystemParams;

    #[test]
    fn two_qubit_partitions_pass() {
        let b = build_pauli_graph(&SystemParams::new(2, 2).unwrap()).unwrap();
        for name in [PartitionName::FpCb, PartitionName::BpMs, PartitionName::IPg] {
            let rep = verify_partition(&b, name).unwrap();
            assert!(rep.passed(), "{name}: {:?}", rep.checks);
            assert!(rep.witness.is_some());
        }
        let rep = verify_partition(&b, PartitionName::IPg).unwrap();
        assert_eq!(rep.parts[1].members.len(), 10);
    }

    #[test]
    fn qutrit_partitions_pass() {
        let b = build_pauli_graph(&SystemParams::new(3, 2).unwrap()).unwrap();
        for name in [PartitionName::QutritGrid, PartitionName::QutritOvoid, PartitionName::QutritPerp] {
            let rep = partition_report(&b, name).unwrap();
            assert!(rep.passed(), "{name}: {:#?}", rep.checks);
            let mut all: Vec<&String> = rep.parts.iter().flat_map(|p| &p.members).collect();
            all.sort();
            all.dedup();
            assert_eq!(all.len(), 40);
        }
    }

    #[test]
    fn wrong_system_is_rejected() {
        let b = build_pauli_graph(&SystemParams::new(2, 2).unwrap()).unwrap();
        assert!(matches!(
            verify_partition(&b, PartitionName::QutritGrid),
            Err(GeometryError::NotApplicable { .. })
        ));
    }

    #[test]
    fn names_round_trip() {
        for name in PartitionName::ALL {
            assert_eq!(name.as_str().parse::<PartitionName>().unwrap(), name);
        }
        assert!("FP".parse::<PartitionName>().is_err());
    }
}
