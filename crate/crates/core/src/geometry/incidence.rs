use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::{GeometryError, PauliGraphBundle};
use crate::graph::{max_cliques_with, BitSet, LabeledGraph};
use crate::par::Exec;

/// Points and lines with incidence lookups in both directions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceStructure {
    points: Vec<String>,
    lines: Vec<Vec<usize>>,
    line_names: Vec<String>,
    #[serde(skip)]
    through: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    /// Lines are given as point-index lists; each is sorted and must name
    /// existing points.
    pub fn new(points: Vec<String>, lines: Vec<Vec<usize>>, line_names: Vec<String>) -> Result<Self, GeometryError> {
        assert_eq!(lines.len(), line_names.len(), "one name per line");
        let n = points.len();
        let mut through = vec![Vec::new(); n];
        let mut lines = lines;
        for (l, line) in lines.iter_mut().enumerate() {
            line.sort_unstable();
            line.dedup();
            for &x in line.iter() {
                if x >= n {
                    return Err(GeometryError::UnknownPoint(x.to_string()));
                }
                through[x].push(l);
            }
        }
        Ok(Self {
            points,
            lines,
            line_names,
            through,
        })
    }

    /// Lines named `l1, l2, ...` in the given order.
    pub fn with_numbered_lines(points: Vec<String>, lines: Vec<Vec<usize>>) -> Result<Self, GeometryError> {
        let names = (1..=lines.len()).map(|k| format!("l{k}")).collect();
        Self::new(points, lines, names)
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point_label(&self, x: usize) -> &str {
        &self.points[x]
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line(&self, l: usize) -> &[usize] {
        &self.lines[l]
    }

    pub fn line_name(&self, l: usize) -> &str {
        &self.line_names[l]
    }

    pub fn line_names(&self) -> &[String] {
        &self.line_names
    }

    pub fn line_index(&self, name: &str) -> Option<usize> {
        self.line_names.iter().position(|n| n == name)
    }

    /// Line indices for a list of names; fails on the first unknown one.
    pub fn lines_named<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>, GeometryError> {
        names
            .iter()
            .map(|n| {
                self.line_index(n.as_ref())
                    .ok_or_else(|| GeometryError::UnknownLine(n.as_ref().to_string()))
            })
            .collect()
    }

    /// Lines through point `x`, ascending.
    pub fn lines_through(&self, x: usize) -> &[usize] {
        &self.through[x]
    }

    /// Labels of the points on line `l`.
    pub fn line_labels(&self, l: usize) -> Vec<&str> {
        self.lines[l].iter().map(|&x| self.points[x].as_str()).collect()
    }

    pub fn line_set(&self, l: usize) -> BitSet {
        BitSet::from_indices(self.point_count(), self.lines[l].iter().copied())
    }

    /// `Some((s + 1, t + 1))` if every line has `s + 1` points and every
    /// point is on `t + 1` lines.
    pub fn uniform_orders(&self) -> Option<(usize, usize)> {
        let k = self.lines.first()?.len();
        let r = self.through.first()?.len();
        let ok = self.lines.iter().all(|l| l.len() == k) && self.through.iter().all(|t| t.len() == r);
        ok.then_some((k, r))
    }

    /// Points joined when they share a line.
    pub fn collinearity_graph(&self) -> LabeledGraph {
        let rows: Vec<BitSet> = (0..self.point_count())
            .map(|x| {
                let mut row = BitSet::new(self.point_count());
                for &l in &self.through[x] {
                    for &y in &self.lines[l] {
                        row.insert(y);
                    }
                }
                row.remove(x);
                row
            })
            .collect();
        LabeledGraph::from_adjacency(self.points.clone(), rows).expect("collinearity is symmetric")
    }
}

/// Maximal commuting sets of the bundle, i.e. the cliques of size `d - 1`.
///
/// Two-qutrit lines carry the conventional names `L1..L4, M1.., N1.., P1..,
/// X1..X8, Y1.., Z1..` and are listed in that order; elsewhere lines are
/// sorted by point indices and numbered.
pub fn enumerate_mcs(bundle: &PauliGraphBundle) -> Result<IncidenceStructure, GeometryError> {
    enumerate_mcs_with(bundle, Exec::default())
}

pub fn enumerate_mcs_with(bundle: &PauliGraphBundle, exec: Exec) -> Result<IncidenceStructure, GeometryError> {
    let d = bundle.params().dim();
    let cliques = max_cliques_with(bundle.graph(), d - 1, exec);
    let points = bundle.labels().to_vec();
    let (p, n) = (bundle.params().p(), bundle.params().n());
    if (p, n) != (3, 2) {
        return IncidenceStructure::with_numbered_lines(points, cliques);
    }
    let by_set: HashMap<Vec<usize>, usize> = cliques.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();
    let mut named = Vec::with_capacity(QUTRIT_LINES.len());
    let mut names = Vec::with_capacity(QUTRIT_LINES.len());
    let mut seen = vec![false; cliques.len()];
    for (name, members) in QUTRIT_LINES {
        let mut set = bundle.vertices_of(&members)?;
        set.sort_unstable();
        match by_set.get(&set) {
            Some(&k) if !std::mem::replace(&mut seen[k], true) => {}
            _ => return Err(GeometryError::UnnamedLine(members.join(","))),
        }
        named.push(set);
        names.push(name.to_string());
    }
    if named.len() != cliques.len() {
        return Err(GeometryError::UnnamedLine(format!(
            "{} cliques found, {} named",
            cliques.len(),
            named.len()
        )));
    }
    IncidenceStructure::new(points, named, names)
}

/// Names of the forty two-qutrit maximal commuting sets.
const QUTRIT_LINES: [(&str, [&str; 8]); 40] = [
    ("L1", ["1", "5", "a", "9", "13", "e", "41", "45"]),
    ("L2", ["2", "6", "a", "10", "14", "e", "42", "46"]),
    ("L3", ["3", "7", "a", "11", "15", "e", "43", "47"]),
    ("L4", ["4", "8", "a", "12", "16", "e", "44", "48"]),
    ("M1", ["1", "5", "b", "17", "21", "f", "49", "53"]),
    ("M2", ["2", "6", "b", "18", "22", "f", "50", "54"]),
    ("M3", ["3", "7", "b", "19", "23", "f", "51", "55"]),
    ("M4", ["4", "8", "b", "20", "24", "f", "52", "56"]),
    ("N1", ["1", "5", "c", "25", "29", "g", "57", "61"]),
    ("N2", ["2", "6", "c", "26", "30", "g", "58", "62"]),
    ("N3", ["3", "7", "c", "27", "31", "g", "59", "63"]),
    ("N4", ["4", "8", "c", "28", "32", "g", "60", "64"]),
    ("P1", ["1", "5", "d", "33", "37", "h", "65", "69"]),
    ("P2", ["2", "6", "d", "34", "38", "h", "66", "70"]),
    ("P3", ["3", "7", "d", "35", "39", "h", "67", "71"]),
    ("P4", ["4", "8", "d", "36", "40", "h", "68", "72"]),
    ("X1", ["9", "22", "32", "39", "45", "50", "60", "67"]),
    ("X2", ["10", "17", "27", "40", "46", "53", "63", "68"]),
    ("X3", ["11", "20", "30", "33", "47", "56", "58", "69"]),
    ("X4", ["12", "23", "25", "34", "48", "51", "61", "70"]),
    ("X5", ["13", "18", "28", "35", "41", "54", "64", "71"]),
    ("X6", ["14", "21", "31", "36", "42", "49", "59", "72"]),
    ("X7", ["15", "24", "26", "37", "43", "52", "62", "65"]),
    ("X8", ["16", "19", "29", "38", "44", "55", "57", "66"]),
    ("Y1", ["9", "23", "30", "40", "45", "51", "58", "68"]),
    ("Y2", ["10", "19", "32", "33", "46", "55", "60", "69"]),
    ("Y3", ["11", "22", "25", "36", "47", "50", "61", "72"]),
    ("Y4", ["12", "17", "26", "39", "48", "53", "62", "67"]),
    ("Y5", ["13", "20", "27", "34", "41", "56", "63", "70"]),
    ("Y6", ["14", "23", "28", "37", "42", "51", "64", "65"]),
    ("Y7", ["15", "18", "29", "40", "43", "54", "57", "68"]),
    ("Y8", ["16", "21", "30", "35", "44", "49", "58", "71"]),
    ("Z1", ["9", "24", "31", "38", "45", "52", "59", "66"]),
    ("Z2", ["10", "24", "25", "35", "46", "52", "61", "71"]),
    ("Z3", ["11", "17", "28", "38", "47", "53", "64", "66"]),
    ("Z4", ["12", "18", "31", "33", "48", "54", "59", "69"]),
    ("Z5", ["13", "19", "26", "36", "41", "55", "62", "72"]),
    ("Z6", ["14", "20", "29", "39", "42", "56", "57", "67"]),
    ("Z7", ["15", "21", "32", "34", "43", "49", "60", "70"]),
    ("Z8", ["16", "22", "27", "37", "44", "50", "63", "65"]),
];

/// Swaps the roles of points and lines. The new lines are the pencils
/// (sets of lines through one point); points with identical pencils give a
/// single line, named by joining their labels with `/`.
pub fn dual_structure(s: &IncidenceStructure) -> IncidenceStructure {
    let mut pencils: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for x in 0..s.point_count() {
        if !s.lines_through(x).is_empty() {
            pencils.entry(s.lines_through(x).to_vec()).or_default().push(x);
        }
    }
    // Order dual lines by their first original point.
    let mut entries: Vec<(Vec<usize>, Vec<usize>)> = pencils.into_iter().map(|(k, v)| (v, k)).collect();
    entries.sort();
    let names = entries
        .iter()
        .map(|(pts, _)| pts.iter().map(|&x| s.point_label(x)).collect::<Vec<_>>().join("/"))
        .collect();
    let lines = entries.into_iter().map(|(_, pencil)| pencil).collect();
    IncidenceStructure::new(s.line_names().to_vec(), lines, names).expect("pencils index existing lines")
}

/// Lines as vertices, adjacent when they share at least one point.
pub fn dual_graph(s: &IncidenceStructure) -> LabeledGraph {
    let sets: Vec<BitSet> = (0..s.line_count()).map(|l| s.line_set(l)).collect();
    LabeledGraph::from_predicate(s.line_names().to_vec(), Exec::default(), |u, v| !sets[u].is_disjoint(&sets[v]))
        .expect("line names are unique")
}

/// Point `x` together with every point collinear with it, sorted.
pub fn perp_set(s: &IncidenceStructure, x: usize) -> Result<Vec<usize>, GeometryError> {
    if x >= s.point_count() {
        return Err(GeometryError::UnknownPoint(x.to_string()));
    }
    let mut out: Vec<usize> = s.lines_through(x).iter().flat_map(|&l| s.line(l).iter().copied()).collect();
    out.push(x);
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_pauli_graph;
    use crate::pauli::SystemParams;

    fn w2() -> IncidenceStructure {
        enumerate_mcs(&build_pauli_graph(&SystemParams::new(2, 2).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn two_qubit_lines() {
        let s = w2();
        assert_eq!((s.point_count(), s.line_count()), (15, 15));
        assert_eq!(s.uniform_orders(), Some((3, 3)));
        assert_eq!(s.collinearity_graph().edge_count(), 45);
        let a = s.point_index("a").unwrap();
        assert_eq!(perp_set(&s, a).unwrap().len(), 7);
    }

    #[test]
    fn duals_of_the_two_qubit_structure() {
        let s = w2();
        let d = dual_structure(&s);
        assert_eq!((d.point_count(), d.line_count()), (15, 15));
        assert_eq!(d.uniform_orders(), Some((3, 3)));
        let g = dual_graph(&s);
        assert_eq!(g.regular_degree(), Some(6));
        assert_eq!(dual_structure(&d).line_count(), 15);
    }

    #[test]
    fn disjoint_lines_give_an_edgeless_dual() {
        let pts = (0..6).map(|k| k.to_string()).collect();
        let s = IncidenceStructure::with_numbered_lines(pts, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert_eq!(dual_graph(&s).edge_count(), 0);
    }

    #[test]
    fn isolated_point_perp_set_is_itself() {
        let pts = (0..3).map(|k| k.to_string()).collect();
        let s = IncidenceStructure::with_numbered_lines(pts, vec![vec![0, 1]]).unwrap();
        assert_eq!(perp_set(&s, 2).unwrap(), vec![2]);
        assert!(perp_set(&s, 3).is_err());
    }
}
