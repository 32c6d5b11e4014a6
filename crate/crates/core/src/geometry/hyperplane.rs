use std::collections::BTreeMap;

use serde::Serialize;

use super::{perp_set, IncidenceStructure};
use crate::graph::BitSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HyperplaneKind {
    PerpSet,
    Grid,
    Ovoid,
    OtherHyperplane,
    NotHyperplane,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HyperplaneClassification {
    pub kind: HyperplaneKind,
    /// Reference point of a perp-set.
    pub reference: Option<usize>,
    /// Number of lines in each of the two parallel classes of a grid.
    pub grid: Option<(usize, usize)>,
    /// `(|line ∩ H|, number of lines)` pairs, ascending.
    pub profile: Vec<(usize, usize)>,
}

/// Tests the hyperplane property (every line meets `subset` in one point or
/// lies inside it) and names the shape.
pub fn classify_hyperplane(s: &IncidenceStructure, subset: &[usize]) -> HyperplaneClassification {
    let n = s.point_count();
    let h = BitSet::from_indices(n, subset.iter().copied().filter(|&x| x < n));
    let meets: Vec<usize> = (0..s.line_count()).map(|l| s.line_set(l).intersection_len(&h)).collect();
    let mut profile = BTreeMap::new();
    for &m in &meets {
        *profile.entry(m).or_insert(0usize) += 1;
    }
    let mut out = HyperplaneClassification {
        kind: HyperplaneKind::NotHyperplane,
        reference: None,
        grid: None,
        profile: profile.into_iter().collect(),
    };
    let valid = subset.iter().all(|&x| x < n)
        && h.len() == subset.len()
        && (0..s.line_count()).all(|l| meets[l] == 1 || meets[l] == s.line(l).len());
    // Hyperplanes are proper, non-empty subsets.
    if !valid || h.is_empty() || h.len() == n {
        return out;
    }
    if meets.iter().all(|&m| m == 1) {
        out.kind = HyperplaneKind::Ovoid;
        return out;
    }
    for x in h.iter() {
        if perp_set(s, x).map(|p| p == h.to_vec()).unwrap_or(false) {
            out.kind = HyperplaneKind::PerpSet;
            out.reference = Some(x);
            return out;
        }
    }
    let inside: Vec<usize> = (0..s.line_count())
        .filter(|&l| meets[l] == s.line(l).len() && meets[l] > 1)
        .collect();
    if let Some(dims) = grid_shape(s, &inside, h.len()) {
        out.kind = HyperplaneKind::Grid;
        out.grid = Some(dims);
        return out;
    }
    out.kind = HyperplaneKind::OtherHyperplane;
    out
}

/// The lines `inside` form an `a x b` grid on `size` points: two classes of
/// pairwise disjoint lines, lines of different classes meeting once.
fn grid_shape(s: &IncidenceStructure, inside: &[usize], size: usize) -> Option<(usize, usize)> {
    let first = *inside.first()?;
    let set = |l: usize| s.line_set(l);
    let (class_a, class_b): (Vec<usize>, Vec<usize>) =
        inside.iter().partition(|&&l| l == first || set(l).is_disjoint(&set(first)));
    let disjoint = |class: &[usize]| {
        class
            .iter()
            .enumerate()
            .all(|(i, &u)| class[i + 1..].iter().all(|&v| set(u).is_disjoint(&set(v))))
    };
    let crossing = class_a
        .iter()
        .all(|&u| class_b.iter().all(|&v| set(u).intersection_len(&set(v)) == 1));
    let (a, b) = (class_a.len(), class_b.len());
    (a >= 2 && b >= 2 && disjoint(&class_a) && disjoint(&class_b) && crossing && a * b == size)
        .then_some((a.min(b), a.max(b)))
}
