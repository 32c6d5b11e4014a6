use std::collections::HashMap;

use serde::Serialize;

use super::{FiniteRing, RingError};
use crate::graph::LabeledGraph;
use crate::par::Exec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RingLinePoint {
    /// Lexicographically least pair of the class, by element index.
    pub representative: (usize, usize),
    pub class: usize,
}

/// The projective line over a finite ring: classes of admissible pairs
/// under left multiplication by units.
#[derive(Debug, Clone)]
pub struct RingLine {
    ring: FiniteRing,
    points: Vec<RingLinePoint>,
    class_of: HashMap<(usize, usize), usize>,
    neighbor: LabeledGraph,
}

impl RingLine {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[RingLinePoint] {
        &self.points
    }

    pub fn label(&self, x: usize) -> &str {
        self.neighbor.label(x)
    }

    pub fn labels(&self) -> &[String] {
        self.neighbor.labels()
    }

    /// Point containing the pair `(a, b)`, if admissible.
    pub fn point_of_pair(&self, a: usize, b: usize) -> Option<usize> {
        self.class_of.get(&(a, b)).copied()
    }

    /// Point by a pair label such as `(3′,14′)`, with any representative.
    pub fn point_index(&self, label: &str) -> Option<usize> {
        let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('\'', "′");
        let r = &self.ring;
        let n = r.order();
        (0..n * n)
            .map(|k| (k / n, k % n))
            .find(|&(a, b)| format!("({},{})", r.label(a), r.label(b)) == wanted)
            .and_then(|(a, b)| self.point_of_pair(a, b))
    }

    /// Every admissible pair of a class.
    pub fn class_members(&self, x: usize) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self.class_of.iter().filter(|(_, &c)| c == x).map(|(&p, _)| p).collect();
        out.sort_unstable();
        out
    }

    pub fn are_neighbors(&self, x: usize, y: usize) -> bool {
        self.neighbor.is_adjacent(x, y)
    }

    pub fn are_distant(&self, x: usize, y: usize) -> bool {
        x != y && !self.neighbor.is_adjacent(x, y)
    }

    pub fn neighbor_graph(&self) -> &LabeledGraph {
        &self.neighbor
    }

    pub fn distant_graph(&self) -> LabeledGraph {
        self.neighbor.complement()
    }
}

/// `(a, b)` extends to an invertible matrix `[[a, b], [c, d]]`.
pub fn is_admissible(ring: &FiniteRing, a: usize, b: usize) -> bool {
    let n = ring.order();
    (0..n).any(|c| (0..n).any(|d| ring.matrix_invertible(a, b, c, d)))
}

pub fn projective_line(ring: &FiniteRing) -> RingLine {
    let n = ring.order();
    let units = ring.units();
    let mut class_of = HashMap::new();
    let mut reps = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if class_of.contains_key(&(a, b)) || !is_admissible(ring, a, b) {
                continue;
            }
            // (a, b) is the first pair of its orbit met in lexicographic order.
            let class = reps.len();
            reps.push((a, b));
            for &u in &units {
                class_of.insert((ring.mul(u, a), ring.mul(u, b)), class);
            }
        }
    }
    let points: Vec<RingLinePoint> = reps
        .iter()
        .enumerate()
        .map(|(class, &representative)| RingLinePoint { representative, class })
        .collect();
    let labels = reps
        .iter()
        .map(|&(a, b)| format!("({},{})", ring.label(a), ring.label(b)))
        .collect();
    let neighbor = LabeledGraph::from_predicate(labels, Exec::Sequential, |x, y| {
        let ((a, b), (c, d)) = (reps[x], reps[y]);
        !ring.matrix_invertible(a, b, c, d)
    })
    .expect("distinct labels");
    RingLine {
        ring: ring.clone(),
        points,
        class_of,
        neighbor,
    }
}

/// Points other than `u0`, `v0` that are distant from both, and those that
/// are neighbours of both.
pub fn pair_symmetric_subsets(line: &RingLine, u0: usize, v0: usize) -> Result<(Vec<usize>, Vec<usize>), RingError> {
    let n = line.point_count();
    if u0 >= n || v0 >= n || !line.are_distant(u0, v0) {
        let name = |x: usize| if x < n { line.label(x).to_string() } else { x.to_string() };
        return Err(RingError::NotDistant(name(u0), name(v0)));
    }
    let others = || (0..n).filter(|&x| x != u0 && x != v0);
    let distant = others().filter(|&x| line.are_distant(x, u0) && line.are_distant(x, v0)).collect();
    let neighbor = others().filter(|&x| line.are_neighbors(x, u0) && line.are_neighbors(x, v0)).collect();
    Ok((distant, neighbor))
}
