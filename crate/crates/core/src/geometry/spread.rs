use super::{GeometryError, IncidenceStructure, PauliGraphBundle};
use crate::graph::BitSet;
use crate::par::{self, Exec};
use crate::pauli::{common_eigenbasis, overlap_sq, PauliOperator, StateVector};

/// Sets of pairwise disjoint lines covering every point, each sorted by line
/// index, in lexicographic order. With a `limit`, the first `limit` covers in
/// search order are kept (the same ones whichever way the search runs).
pub fn find_spreads(s: &IncidenceStructure, limit: Option<usize>) -> Vec<Vec<usize>> {
    find_spreads_with(s, limit, Exec::default())
}

pub fn find_spreads_with(s: &IncidenceStructure, limit: Option<usize>, exec: Exec) -> Vec<Vec<usize>> {
    let rows: Vec<BitSet> = (0..s.line_count()).map(|l| s.line_set(l)).collect();
    exact_cover(s.point_count(), &rows, limit, exec)
}

/// Point sets meeting every line exactly once, in the same format.
pub fn find_ovoids(s: &IncidenceStructure, limit: Option<usize>) -> Vec<Vec<usize>> {
    find_ovoids_with(s, limit, Exec::default())
}

pub fn find_ovoids_with(s: &IncidenceStructure, limit: Option<usize>, exec: Exec) -> Vec<Vec<usize>> {
    // Points on no line could be added freely; they are never part of an ovoid here.
    let rows: Vec<BitSet> = (0..s.point_count())
        .map(|x| BitSet::from_indices(s.line_count(), s.lines_through(x).iter().copied()))
        .collect();
    exact_cover(s.line_count(), &rows, limit, exec)
}

/// Algorithm X over bitsets: choose the uncovered column with the fewest
/// live rows, try each of them. The top-level branches are independent and
/// run on separate workers when `exec` allows.
pub fn exact_cover(universe: usize, rows: &[BitSet], limit: Option<usize>, exec: Exec) -> Vec<Vec<usize>> {
    let r = rows.len();
    let col_rows: Vec<BitSet> = (0..universe)
        .map(|c| BitSet::from_indices(r, (0..r).filter(|&k| rows[k].contains(c))))
        .collect();
    let conflicts: Vec<BitSet> = rows
        .iter()
        .map(|row| {
            let mut out = BitSet::new(r);
            for c in row.iter() {
                out.union_with(&col_rows[c]);
            }
            out
        })
        .collect();
    let search = Search {
        col_rows: &col_rows,
        conflicts: &conflicts,
        rows,
        limit,
    };
    let uncovered = BitSet::full(universe);
    let live = BitSet::from_indices(r, (0..r).filter(|&k| !rows[k].is_empty()));
    if limit == Some(0) {
        return Vec::new();
    }
    let Some(first) = search.choose(&uncovered, &live) else {
        return if uncovered.is_empty() { vec![Vec::new()] } else { Vec::new() };
    };
    let branches: Vec<usize> = col_rows[first].intersection(&live).to_vec();
    let found = par::map_slice(exec, &branches, |&k| {
        let mut out = Vec::new();
        let mut chosen = vec![k];
        search.descend(&uncovered.difference(&rows[k]), &live.difference(&conflicts[k]), &mut chosen, &mut out);
        out
    });
    let mut all: Vec<Vec<usize>> = found.into_iter().flatten().collect();
    if let Some(l) = limit {
        all.truncate(l);
    }
    for cover in &mut all {
        cover.sort_unstable();
    }
    all.sort();
    all
}

struct Search<'a> {
    col_rows: &'a [BitSet],
    conflicts: &'a [BitSet],
    rows: &'a [BitSet],
    limit: Option<usize>,
}

impl Search<'_> {
    /// Uncovered column with the fewest live rows; `None` when all are covered.
    fn choose(&self, uncovered: &BitSet, live: &BitSet) -> Option<usize> {
        uncovered.iter().min_by_key(|&c| self.col_rows[c].intersection_len(live))
    }

    fn descend(&self, uncovered: &BitSet, live: &BitSet, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if self.limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        let Some(c) = self.choose(uncovered, live) else {
            out.push(chosen.clone());
            return;
        };
        for k in self.col_rows[c].intersection(live).iter() {
            chosen.push(k);
            self.descend(&uncovered.difference(&self.rows[k]), &live.difference(&self.conflicts[k]), chosen, out);
            chosen.pop();
            if self.limit.is_some_and(|l| out.len() >= l) {
                return;
            }
        }
    }
}

/// Largest `| |<e|f>|^2 - 1/d |` over vectors `e`, `f` of the common
/// eigenbases of two different lines. Bases are mutually unbiased when
/// this is below `1e-8`.
pub fn mub_deviation(bundle: &PauliGraphBundle, lines: &[Vec<usize>]) -> Result<f64, GeometryError> {
    let bases = line_bases(bundle, lines)?;
    let inv_d = 1.0 / bundle.params().dim() as f64;
    let mut worst: f64 = 0.0;
    for (i, bi) in bases.iter().enumerate() {
        for bj in &bases[i + 1..] {
            for e in bi {
                for f in bj {
                    worst = worst.max((overlap_sq(e, f) - inv_d).abs());
                }
            }
        }
    }
    Ok(worst)
}

/// Common eigenbasis of the operators on each line.
pub fn line_bases(bundle: &PauliGraphBundle, lines: &[Vec<usize>]) -> Result<Vec<Vec<StateVector>>, GeometryError> {
    par::map_slice(Exec::default(), lines, |line| {
        let ops: Vec<PauliOperator> = line.iter().map(|&v| bundle.operator(v).clone()).collect();
        common_eigenbasis(&ops)
    })
    .into_iter()
    .map(|r| r.map_err(GeometryError::from))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_pauli_graph, enumerate_mcs};
    use crate::pauli::SystemParams;

    fn brute_cover(universe: usize, rows: &[BitSet]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << rows.len()) {
            let pick: Vec<usize> = (0..rows.len()).filter(|&k| mask >> k & 1 == 1).collect();
            if pick.iter().any(|&k| rows[k].is_empty()) {
                continue;
            }
            let total: usize = pick.iter().map(|&k| rows[k].len()).sum();
            let mut union = BitSet::new(universe);
            for &k in &pick {
                union.union_with(&rows[k]);
            }
            if total == universe && union.len() == universe {
                out.push(pick);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn exact_cover_matches_brute_force() {
        let mut seed = 7u64;
        for _ in 0..40 {
            let rows: Vec<BitSet> = (0..12)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    BitSet::from_indices(8, (0..8).filter(|&c| (seed >> (20 + c)) & 3 == 0))
                })
                .collect();
            let expected = brute_cover(8, &rows);
            assert_eq!(exact_cover(8, &rows, None, Exec::Sequential), expected);
            assert_eq!(exact_cover(8, &rows, None, Exec::Parallel), expected);
        }
    }

    #[test]
    fn limit_is_deterministic() {
        let b = build_pauli_graph(&SystemParams::new(2, 2).unwrap()).unwrap();
        let s = enumerate_mcs(&b).unwrap();
        let all = find_spreads(&s, None);
        assert_eq!(all.len(), 6);
        let two_seq = find_spreads_with(&s, Some(2), Exec::Sequential);
        let two_par = find_spreads_with(&s, Some(2), Exec::Parallel);
        assert_eq!(two_seq, two_par);
        assert_eq!(two_seq.len(), 2);
        assert!(find_spreads(&s, Some(0)).is_empty());
    }

    #[test]
    fn concurrent_lines_have_no_spread() {
        let pts = (0..5).map(|k| k.to_string()).collect();
        let s = IncidenceStructure::with_numbered_lines(pts, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 1, 3]]).unwrap();
        assert!(find_spreads(&s, None).is_empty());
    }

    #[test]
    fn repeated_line_is_fully_biased() {
        let b = build_pauli_graph(&SystemParams::new(2, 2).unwrap()).unwrap();
        let s = enumerate_mcs(&b).unwrap();
        let line = s.line(0).to_vec();
        let dev = mub_deviation(&b, &[line.clone(), line]).unwrap();
        assert!((dev - 0.75).abs() < 1e-9);
        for spread in find_spreads(&s, None) {
            let lines: Vec<Vec<usize>> = spread.iter().map(|&l| s.line(l).to_vec()).collect();
            assert!(mub_deviation(&b, &lines).unwrap() < 1e-8);
        }
    }
}
