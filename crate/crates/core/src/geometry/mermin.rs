use serde::Serialize;

use super::{classify_hyperplane, GeometryError, HyperplaneKind, IncidenceStructure, PauliGraphBundle};
use crate::pauli::{PauliOperator, PhaseScalar};

/// Row-major 3 x 3 array of vertices.
pub type Arrangement = [[usize; 3]; 3];

/// Lexicographically least (row-major, by vertex index) 3 x 3 arrangement
/// of a 9-point grid whose rows and columns are all lines.
pub fn mermin_arrangement(s: &IncidenceStructure, grid: &[usize]) -> Result<Arrangement, GeometryError> {
    let c = classify_hyperplane(s, grid);
    if grid.len() != 9 || c.kind != HyperplaneKind::Grid || c.grid != Some((3, 3)) {
        return Err(GeometryError::NotAGrid(format!("{:?}", c.kind)));
    }
    let mut pts = grid.to_vec();
    pts.sort_unstable();
    let lines: Vec<&[usize]> = s
        .lines()
        .iter()
        .map(Vec::as_slice)
        .filter(|l| l.len() == 3 && l.iter().all(|x| pts.binary_search(x).is_ok()))
        .collect();
    let mut cells = [usize::MAX; 9];
    let mut used = [false; 9];
    if fill(&pts, &lines, 0, &mut cells, &mut used) {
        Ok([
            [cells[0], cells[1], cells[2]],
            [cells[3], cells[4], cells[5]],
            [cells[6], cells[7], cells[8]],
        ])
    } else {
        Err(GeometryError::NotAGrid("no arrangement".into()))
    }
}

fn fill(pts: &[usize], lines: &[&[usize]], at: usize, cells: &mut [usize; 9], used: &mut [bool; 9]) -> bool {
    if at == 9 {
        return true;
    }
    let (r, c) = (at / 3, at % 3);
    for (k, &x) in pts.iter().enumerate() {
        if used[k] {
            continue;
        }
        cells[at] = x;
        let row: Vec<usize> = (0..=c).map(|j| cells[3 * r + j]).collect();
        let col: Vec<usize> = (0..=r).map(|i| cells[3 * i + c]).collect();
        let on_line = |set: &[usize]| set.len() < 2 || lines.iter().any(|l| set.iter().all(|x| l.contains(x)));
        if on_line(&row) && on_line(&col) {
            used[k] = true;
            if fill(pts, lines, at + 1, cells, used) {
                return true;
            }
            used[k] = false;
        }
    }
    cells[at] = usize::MAX;
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Polarization {
    pub rows: [PhaseScalar; 3],
    pub columns: [PhaseScalar; 3],
}

impl Polarization {
    /// Product of all six scalars.
    pub fn total(&self) -> PhaseScalar {
        self.rows
            .iter()
            .chain(&self.columns)
            .fold(PhaseScalar::one(self.rows[0].modulus()), |acc, &s| acc.compose(s))
    }

    /// Every operator enters the six products twice, so any assignment of
    /// eigenvalues multiplies to `+1`; a total of `-1` is contradictory.
    pub fn is_kochen_specker_witness(&self) -> bool {
        self.total().is_minus_one()
    }
}

/// Exact products along each row and column of the arrangement.
pub fn verify_polarization(bundle: &PauliGraphBundle, arr: &Arrangement) -> Result<Polarization, GeometryError> {
    let mut flat: Vec<usize> = arr.iter().flatten().copied().collect();
    flat.sort_unstable();
    flat.dedup();
    if flat.len() != 9 || flat.iter().any(|&v| v >= bundle.vertex_count()) {
        return Err(GeometryError::NotAGrid("arrangement needs 9 distinct vertices".into()));
    }
    let triple = |vs: [usize; 3]| -> Result<PhaseScalar, GeometryError> {
        let names = || vs.map(|v| bundle.label(v).to_string()).join(",");
        let ops: Vec<&PauliOperator> = vs.iter().map(|&v| bundle.operator(v)).collect();
        for i in 0..3 {
            for j in i + 1..3 {
                if !ops[i].commutes(ops[j])? {
                    return Err(GeometryError::NotCommuting(names()));
                }
            }
        }
        let prod = ops[0].multiply(ops[1])?.multiply(ops[2])?;
        prod.as_scalar().ok_or_else(|| GeometryError::NotScalar(names()))
    };
    let mut rows = [PhaseScalar::one(1); 3];
    let mut columns = [PhaseScalar::one(1); 3];
    for i in 0..3 {
        rows[i] = triple(arr[i])?;
        columns[i] = triple([arr[0][i], arr[1][i], arr[2][i]])?;
    }
    Ok(Polarization { rows, columns })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_pauli_graph, enumerate_mcs};
    use crate::pauli::SystemParams;

    fn setup() -> (PauliGraphBundle, IncidenceStructure) {
        let b = build_pauli_graph(&SystemParams::new(2, 2).unwrap()).unwrap();
        let s = enumerate_mcs(&b).unwrap();
        (b, s)
    }

    #[test]
    fn canonical_square_and_phases() {
        let (b, s) = setup();
        let ms = b.vertices_of(&["4", "5", "6", "7", "8", "9", "10", "11", "12"]).unwrap();
        let arr = mermin_arrangement(&s, &ms).unwrap();
        let labels = arr.map(|row| row.map(|v| b.label(v).to_string()));
        assert_eq!(labels, [["4", "8", "12"], ["9", "10", "5"], ["11", "6", "7"]].map(|r| r.map(String::from)));
        let pol = verify_polarization(&b, &arr).unwrap();
        assert!(pol.rows.iter().all(|s| s.exponent() == 2));
        assert!(pol.columns.iter().all(|s| s.exponent() == 0));
        assert!(pol.is_kochen_specker_witness());
    }

    #[test]
    fn input_order_does_not_matter() {
        let (b, s) = setup();
        let ms = b.vertices_of(&["12", "7", "5", "9", "4", "11", "6", "10", "8"]).unwrap();
        let sorted = b.vertices_of(&["4", "5", "6", "7", "8", "9", "10", "11", "12"]).unwrap();
        assert_eq!(mermin_arrangement(&s, &ms).unwrap(), mermin_arrangement(&s, &sorted).unwrap());
    }

    #[test]
    fn rejects_non_grids() {
        let (b, s) = setup();
        let bp = b.vertices_of(&["1", "2", "3", "a", "b", "c"]).unwrap();
        assert!(mermin_arrangement(&s, &bp).is_err());
        let line = b.vertices_of(&["4", "8", "12"]).unwrap();
        let arr = [[line[0], line[1], line[2]]; 3];
        assert!(verify_polarization(&b, &arr).is_err());
    }
}
