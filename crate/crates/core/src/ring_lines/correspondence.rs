use serde::Serialize;

use super::{builtin_ring, pair_symmetric_subsets, projective_line, RingError, RingLine, RingName};
use crate::geometry::{classify_hyperplane, enumerate_mcs, perp_set, HyperplaneKind, PauliGraphBundle};
use crate::graph::{is_isomorphic, LabeledGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Neighbor,
    Distant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceRow {
    pub ring: String,
    pub role: String,
    /// Relation on the ring-line points compared with commutation.
    pub relation: Relation,
    pub line_points: Vec<String>,
    pub operators: Vec<String>,
    /// The operator set has the expected hyperplane shape.
    pub shape_ok: bool,
    pub isomorphic: bool,
    pub witness: Option<Vec<(String, String)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceReport {
    pub rows: Vec<CorrespondenceRow>,
}

impl CorrespondenceReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.shape_ok && r.isomorphic)
    }
}

/// Matches ring-line point sets with operator subsets of the two-qubit
/// graph: sizes and relation graph against the commutation graph.
///
/// Rows: the lines over F4, Z2[x]/(x^2), Z2 x Z2 against an ovoid, a
/// perp-set without its reference point, and a grid; then the two
/// pair-symmetric subsets of the M2(Z2) line against the grid and its
/// complement.
pub fn hyperplane_correspondence(bundle: &PauliGraphBundle) -> Result<CorrespondenceReport, RingError> {
    let params = bundle.params();
    if (params.p(), params.n()) != (2, 2) {
        return Err(RingError::NotTwoQubits {
            p: params.p(),
            n: params.n(),
        });
    }
    let s = enumerate_mcs(bundle)?;
    let ovoid = bundle.vertices_of(&["1", "2", "6", "9", "12"])?;
    let a = bundle.vertices_of(&["a"])?[0];
    let perp = perp_set(&s, a)?;
    let perp_minus: Vec<usize> = perp.iter().copied().filter(|&x| x != a).collect();
    let grid = bundle.vertices_of(&["4", "5", "6", "7", "8", "9", "10", "11", "12"])?;
    let bp = bundle.vertices_of(&["1", "2", "3", "a", "b", "c"])?;

    let kind = |set: &[usize]| classify_hyperplane(&s, set).kind;
    let shapes = [
        kind(&ovoid) == HyperplaneKind::Ovoid,
        kind(&perp) == HyperplaneKind::PerpSet && perp_minus.len() == 6,
        kind(&grid) == HyperplaneKind::Grid,
    ];

    let mut rows = Vec::new();
    let whole = |name| {
        let line = projective_line(&builtin_ring(name));
        let all: Vec<usize> = (0..line.point_count()).collect();
        (line, all)
    };
    let (f4, f4_all) = whole(RingName::F4);
    rows.push(row(bundle, &f4, &f4_all, Relation::Neighbor, &ovoid, "ovoid", shapes[0])?);
    let (loc, loc_all) = whole(RingName::Z2xSq);
    rows.push(row(bundle, &loc, &loc_all, Relation::Neighbor, &perp_minus, "perp-set minus reference", shapes[1])?);
    let (prod, prod_all) = whole(RingName::Z2xZ2);
    rows.push(row(bundle, &prod, &prod_all, Relation::Distant, &grid, "grid", shapes[2])?);

    let m2 = projective_line(&builtin_ring(RingName::M2Z2));
    let (u0, v0) = standard_pair(&m2);
    let (both_distant, both_neighbor) = pair_symmetric_subsets(&m2, u0, v0)?;
    rows.push(row(bundle, &m2, &both_neighbor, Relation::Distant, &grid, "grid", shapes[2])?);
    let bp_ok = both_distant.len() == 6 && s.lines().iter().all(|l| l.iter().filter(|x| bp.contains(x)).count() != 3);
    rows.push(row(bundle, &m2, &both_distant, Relation::Neighbor, &bp, "complement of the grid", bp_ok)?);
    Ok(CorrespondenceReport { rows })
}

/// `U0 = (1, 0)` and `V0 = (0, 1)` on a ring line.
pub fn standard_pair(line: &RingLine) -> (usize, usize) {
    let r = line.ring();
    let u0 = line.point_of_pair(r.one(), r.zero()).expect("(1, 0) is admissible");
    let v0 = line.point_of_pair(r.zero(), r.one()).expect("(0, 1) is admissible");
    (u0, v0)
}

fn row(
    bundle: &PauliGraphBundle,
    line: &RingLine,
    points: &[usize],
    relation: Relation,
    operators: &[usize],
    role: &str,
    shape_ok: bool,
) -> Result<CorrespondenceRow, RingError> {
    let rel: LabeledGraph = match relation {
        Relation::Neighbor => line.neighbor_graph().induced_subgraph(points),
        Relation::Distant => line.distant_graph().induced_subgraph(points),
    };
    let ops = bundle.graph().induced_subgraph(operators);
    let map = if rel.vertex_count() == ops.vertex_count() {
        is_isomorphic(&rel, &ops)?
    } else {
        None
    };
    let witness = map.as_ref().map(|m| {
        m.iter()
            .enumerate()
            .map(|(x, &v)| (rel.label(x).to_string(), ops.label(v).to_string()))
            .collect()
    });
    Ok(CorrespondenceRow {
        ring: line.ring().name().to_string(),
        role: role.to_string(),
        relation,
        line_points: rel.labels().to_vec(),
        operators: ops.labels().to_vec(),
        shape_ok,
        isomorphic: map.is_some(),
        witness,
    })
}
