use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::{PauliError, PauliOperator};

pub type StateVector = DVector<Complex64>;

const RANK_TOL: f64 = 1e-8;

/// Orthonormal basis diagonalizing every operator of a commuting family.
///
/// Refines the space one operator at a time. For an operator `A` with
/// `A^m = c I` the spectral projectors are the exact polynomials
/// `P_t = (1/m) sum_j (A / lambda_t)^j` over the `m` roots `lambda_t` of `c`,
/// so each refinement step only needs monomial applications and a
/// Gram-Schmidt pass inside the current joint eigenspace.
pub fn common_eigenbasis(family: &[PauliOperator]) -> Result<Vec<StateVector>, PauliError> {
    let Some(first) = family.first() else {
        return Err(PauliError::EmptyFamily);
    };
    let d = first.dim();
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate().skip(i + 1) {
            if !a.commutes(b)? {
                return Err(PauliError::NonCommuting { first: i, second: j });
            }
        }
    }

    let mut spaces: Vec<Vec<StateVector>> = vec![(0..d)
        .map(|k| {
            let mut e = DVector::zeros(d);
            e[k] = Complex64::new(1.0, 0.0);
            e
        })
        .collect()];

    for op in family {
        let (m, c) = op.order_up_to_phase();
        let roots: Vec<Complex64> = (0..m)
            .map(|t| {
                let theta = 2.0
                    * std::f64::consts::PI
                    * (c.exponent() as f64 / c.modulus() as f64 + t as f64)
                    / m as f64;
                Complex64::from_polar(1.0, theta)
            })
            .collect();
        let mut refined = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() == 1 {
                refined.push(space);
                continue;
            }
            let mut found = 0;
            for &lambda in &roots {
                let images: Vec<StateVector> =
                    space.iter().map(|v| project(op, m, lambda, v)).collect();
                let basis = orthonormalize(images);
                if !basis.is_empty() {
                    found += basis.len();
                    refined.push(basis);
                }
            }
            if found != space.len() {
                return Err(PauliError::RankLoss {
                    expected: space.len(),
                    found,
                });
            }
        }
        spaces = refined;
    }
    Ok(spaces.into_iter().flatten().collect())
}

fn project(op: &PauliOperator, m: u32, lambda: Complex64, v: &StateVector) -> StateVector {
    let inv = lambda.conj();
    let mut term: Vec<Complex64> = v.iter().copied().collect();
    let mut acc = term.clone();
    for _ in 1..m {
        term = op.apply(&term).into_iter().map(|z| z * inv).collect();
        for (a, t) in acc.iter_mut().zip(&term) {
            *a += t;
        }
    }
    DVector::from_iterator(acc.len(), acc.into_iter().map(|z| z / m as f64))
}

fn orthonormalize(vectors: Vec<StateVector>) -> Vec<StateVector> {
    let mut basis: Vec<StateVector> = Vec::new();
    for mut v in vectors {
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for q in &basis {
                let overlap = q.dotc(&v);
                v -= q * overlap;
            }
        }
        let norm = v.norm();
        if norm > RANK_TOL {
            basis.push(v / Complex64::new(norm, 0.0));
        }
    }
    basis
}

/// Numerical Schmidt rank of a two-qudit state across the `p | p` cut.
pub fn schmidt_rank(state: &[Complex64], p: usize) -> Result<usize, PauliError> {
    if state.len() != p * p {
        return Err(PauliError::NotBipartite {
            len: state.len(),
            expected: p * p,
        });
    }
    let norm = state.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-6 {
        return Err(PauliError::NotNormalized {
            deviation: (norm - 1.0).abs(),
        });
    }
    let m = DMatrix::from_row_slice(p, p, state);
    let sv = m.singular_values();
    Ok(sv.iter().filter(|&&s| s > RANK_TOL).count())
}

/// `|<e|f>|^2` for two states.
pub fn overlap_sq(e: &StateVector, f: &StateVector) -> f64 {
    e.dotc(f).norm_sqr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{make_operator, SymplecticIndex, SystemParams};

    fn two_qubit(a: [u32; 2], b: [u32; 2]) -> PauliOperator {
        let params = SystemParams::new(2, 2).unwrap();
        make_operator(&params, &SymplecticIndex::new(a.to_vec(), b.to_vec(), 2)).unwrap()
    }

    fn check_basis(family: &[PauliOperator], basis: &[StateVector]) {
        let d = family[0].dim();
        assert_eq!(basis.len(), d);
        for (i, e) in basis.iter().enumerate() {
            for (j, f) in basis.iter().enumerate() {
                let g = e.dotc(f);
                let target = if i == j { 1.0 } else { 0.0 };
                assert!((g - Complex64::new(target, 0.0)).norm() < 1e-9);
            }
            for op in family {
                let image = DVector::from_vec(op.apply(e.as_slice()));
                let lambda = e.dotc(&image);
                assert!((image - e * lambda).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn diagonal_family_gives_computational_basis() {
        let zi = two_qubit([0, 0], [1, 0]);
        let iz = two_qubit([0, 0], [0, 1]);
        let family = [iz, zi];
        let basis = common_eigenbasis(&family).unwrap();
        check_basis(&family, &basis);
        for v in &basis {
            let support = v.iter().filter(|z| z.norm() > 1e-9).count();
            assert_eq!(support, 1);
        }
    }

    #[test]
    fn bell_line_has_entangled_eigenvectors() {
        let family = [
            two_qubit([1, 1], [0, 0]),
            two_qubit([1, 1], [1, 1]),
            two_qubit([0, 0], [1, 1]),
        ];
        let basis = common_eigenbasis(&family).unwrap();
        check_basis(&family, &basis);
        for v in &basis {
            assert_eq!(schmidt_rank(v.as_slice(), 2).unwrap(), 2);
        }
    }

    #[test]
    fn non_commuting_family_is_rejected() {
        let family = [two_qubit([0, 1], [0, 0]), two_qubit([0, 0], [0, 1])];
        assert_eq!(
            common_eigenbasis(&family),
            Err(PauliError::NonCommuting { first: 0, second: 1 })
        );
    }

    #[test]
    fn schmidt_rank_examples_and_errors() {
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        assert_eq!(schmidt_rank(&[one, z, z, z], 2).unwrap(), 1);
        assert_eq!(schmidt_rank(&[h, z, z, h], 2).unwrap(), 2);
        assert!(matches!(
            schmidt_rank(&[one, one, z, z], 2),
            Err(PauliError::NotNormalized { .. })
        ));
        assert!(matches!(schmidt_rank(&[one, z, z], 2), Err(PauliError::NotBipartite { .. })));
    }
}
