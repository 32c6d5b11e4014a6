use serde::{Deserialize, Serialize};

use super::{spectrum, LabeledGraph};
use crate::par::{self, Exec};

/// Restricted eigenvalues and their multiplicities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgEigen {
    pub r: i64,
    pub l: i64,
    pub f: u64,
    pub g: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: usize,
    pub degree: usize,
    pub lambda: usize,
    pub mu: usize,
    /// `None` when the restricted eigenvalues are irrational (conference
    /// graphs) or `mu = 0`.
    pub eigen: Option<SrgEigen>,
}

impl SrgParams {
    pub fn quadruple(&self) -> (usize, usize, usize, usize) {
        (self.v, self.degree, self.lambda, self.mu)
    }
}

pub fn is_strongly_regular(g: &LabeledGraph) -> Option<SrgParams> {
    is_strongly_regular_with(g, Exec::default())
}

/// Detects an SRG by direct common-neighbour counts over all pairs.
///
/// Complete and edgeless graphs are excluded. When the restricted
/// eigenvalues are integral, their multiplicities are derived from
/// `(D, r, l)` and must agree with the numerical spectrum; a disagreement
/// panics since it means the counting or the eigensolver is wrong.
pub fn is_strongly_regular_with(g: &LabeledGraph, exec: Exec) -> Option<SrgParams> {
    let v = g.vertex_count();
    if v < 2 {
        return None;
    }
    let degree = g.regular_degree()?;
    if degree == 0 || degree == v - 1 {
        return None;
    }
    // Per row: (common count with neighbours, common count with non-neighbours),
    // each `None` if not constant along that row.
    let rows = par::map_range(exec, v, |u| {
        let mut lambda = None;
        let mut mu = None;
        for w in (0..v).filter(|&w| w != u) {
            let c = g.neighbors(u).intersection_len(g.neighbors(w));
            let slot = if g.is_adjacent(u, w) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                Some(_) => {}
            }
        }
        Some((lambda, mu))
    });
    let mut lambda = None;
    let mut mu = None;
    for row in rows {
        let (l, m) = row?;
        for (acc, x) in [(&mut lambda, l), (&mut mu, m)] {
            if let Some(x) = x {
                match *acc {
                    None => *acc = Some(x),
                    Some(y) if y != x => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (lambda, mu) = (lambda?, mu?);
    let eigen = restricted_eigenvalues(degree, lambda, mu).and_then(|(r, l)| {
        let (f, gm) = srg_multiplicities(degree as i64, r, l)?;
        Some(SrgEigen { r, l, f, g: gm })
    });
    if let Some(e) = eigen {
        let spec = spectrum(g).expect("SRG with integral r, l has an integral spectrum");
        let agrees = spec.multiplicity(degree as i64) == 1
            && spec.multiplicity(e.r) as u64 == e.f
            && spec.multiplicity(e.l) as u64 == e.g;
        assert!(agrees, "SRG multiplicities {e:?} disagree with spectrum {spec}");
    }
    Some(SrgParams {
        v,
        degree,
        lambda,
        mu,
        eigen,
    })
}

/// Roots of `x^2 - (lambda - mu) x - (D - mu)`, if integral; `r > l`.
fn restricted_eigenvalues(degree: usize, lambda: usize, mu: usize) -> Option<(i64, i64)> {
    let b = lambda as i64 - mu as i64;
    let disc = b * b + 4 * (degree as i64 - mu as i64);
    if disc < 0 {
        return None;
    }
    let s = disc.isqrt();
    if s * s != disc {
        return None;
    }
    // b and s share parity because disc = b^2 mod 4.
    Some(((b + s) / 2, (b - s) / 2))
}

/// Multiplicities of `r` and `l`:
/// `f = -D(l+1)(D-l) / ((D+rl)(r-l))`, `g = D(r+1)(D-r) / ((D+rl)(r-l))`,
/// in exact integers. `None` if a quotient is not a nonnegative integer
/// or the denominator vanishes.
pub fn srg_multiplicities(degree: i64, r: i64, l: i64) -> Option<(u64, u64)> {
    let den = (degree + r * l) as i128 * (r - l) as i128;
    if den == 0 {
        return None;
    }
    let d = degree as i128;
    let (r, l) = (r as i128, l as i128);
    let f_num = -d * (l + 1) * (d - l);
    let g_num = d * (r + 1) * (d - r);
    if f_num % den != 0 || g_num % den != 0 {
        return None;
    }
    let (f, g) = (f_num / den, g_num / den);
    if f < 0 || g < 0 {
        return None;
    }
    Some((f as u64, g as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, empty_graph, hypercube, petersen_graph, rook_graph};

    #[test]
    fn classic_srgs() {
        let p = is_strongly_regular(&petersen_graph()).unwrap();
        assert_eq!(p.quadruple(), (10, 3, 0, 1));
        assert_eq!(p.eigen, Some(SrgEigen { r: 1, l: -2, f: 5, g: 4 }));
        let t = complete_graph(6).line_graph().complement();
        let s = is_strongly_regular(&t).unwrap();
        assert_eq!(s.quadruple(), (15, 6, 1, 3));
        assert_eq!(s.eigen, Some(SrgEigen { r: 1, l: -3, f: 9, g: 5 }));
        let r = is_strongly_regular(&rook_graph(3, 3)).unwrap();
        assert_eq!(r.quadruple(), (9, 4, 1, 2));
    }

    #[test]
    fn conference_graph_has_no_integral_eigen() {
        let c5 = is_strongly_regular(&cycle_graph(5)).unwrap();
        assert_eq!(c5.quadruple(), (5, 2, 0, 1));
        assert_eq!(c5.eigen, None);
    }

    #[test]
    fn non_examples() {
        assert!(is_strongly_regular(&complete_graph(5)).is_none());
        assert!(is_strongly_regular(&empty_graph(5)).is_none());
        assert!(is_strongly_regular(&hypercube(3)).is_none());
        assert!(is_strongly_regular(&cycle_graph(7)).is_none());
        assert!(is_strongly_regular_with(&hypercube(4), Exec::Sequential).is_none());
    }

    #[test]
    fn multiplicity_formula() {
        assert_eq!(srg_multiplicities(6, 1, -3), Some((9, 5)));
        assert_eq!(srg_multiplicities(30, 3, -5), Some((35, 27)));
        assert_eq!(srg_multiplicities(126, 7, -9), Some((135, 119)));
        // D + rl = 0 (disjoint cliques).
        assert_eq!(srg_multiplicities(2, 1, -2), None);
    }
}
