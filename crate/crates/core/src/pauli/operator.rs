use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{PauliError, SymplecticIndex, SystemParams};

/// A scalar `zeta^k`, `zeta` a primitive `M`-th root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhaseScalar {
    exponent: u32,
    modulus: u32,
}

impl PhaseScalar {
    pub fn new(exponent: u32, modulus: u32) -> Self {
        Self {
            exponent: exponent % modulus,
            modulus,
        }
    }

    pub fn one(modulus: u32) -> Self {
        Self::new(0, modulus)
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    /// `-1`, when it exists in the phase group.
    pub fn is_minus_one(&self) -> bool {
        self.modulus.is_multiple_of(2) && self.exponent == self.modulus / 2
    }

    pub fn compose(self, other: Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        Self::new(self.exponent + other.exponent, self.modulus)
    }

    pub fn inverse(self) -> Self {
        Self::new(self.modulus - self.exponent, self.modulus)
    }

    pub fn to_complex(self) -> Complex64 {
        root_of_unity(self.exponent, self.modulus)
    }
}

impl fmt::Display for PhaseScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.modulus, self.exponent) {
            (_, 0) => write!(f, "+1"),
            (4, 1) => write!(f, "+i"),
            (4, 2) => write!(f, "-1"),
            (4, 3) => write!(f, "-i"),
            (m, k) => write!(f, "w^{k} (w = e^(2 pi i/{m}))"),
        }
    }
}

pub(crate) fn root_of_unity(k: u32, m: u32) -> Complex64 {
    let theta = 2.0 * std::f64::consts::PI * (k % m) as f64 / m as f64;
    Complex64::from_polar(1.0, theta)
}

/// Exact monomial matrix: column `j` holds `zeta^{phase[j]}` in row `perm[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PauliOperator {
    modulus: u32,
    perm: Vec<u32>,
    phase: Vec<u32>,
}

impl PauliOperator {
    pub fn identity(dim: usize, modulus: u32) -> Self {
        Self {
            modulus,
            perm: (0..dim as u32).collect(),
            phase: vec![0; dim],
        }
    }

    /// Builds an operator from raw parts.
    ///
    /// # Panics
    /// If `perm` is not a bijection or the lengths differ.
    pub fn from_parts(perm: Vec<u32>, phase: Vec<u32>, modulus: u32) -> Self {
        assert_eq!(perm.len(), phase.len());
        let mut seen = vec![false; perm.len()];
        for &r in &perm {
            assert!(!std::mem::replace(&mut seen[r as usize], true), "not a permutation");
        }
        let phase = phase.into_iter().map(|k| k % modulus).collect();
        Self {
            modulus,
            perm,
            phase,
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn phase_exponents(&self) -> &[u32] {
        &self.phase
    }

    fn check_dim(&self, other: &Self) -> Result<(), PauliError> {
        if self.dim() != other.dim() || self.modulus != other.modulus {
            return Err(PauliError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    /// Exact product `self * other`.
    pub fn multiply(&self, other: &Self) -> Result<Self, PauliError> {
        self.check_dim(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let m = self.modulus;
        let (perm, phase) = other
            .perm
            .iter()
            .zip(&other.phase)
            .map(|(&mid, &ph)| {
                let mid = mid as usize;
                (self.perm[mid], (ph + self.phase[mid]) % m)
            })
            .unzip();
        Self {
            modulus: m,
            perm,
            phase,
        }
    }

    pub fn inverse(&self) -> Self {
        let m = self.modulus;
        let mut perm = vec![0u32; self.dim()];
        let mut phase = vec![0u32; self.dim()];
        for (j, (&row, &ph)) in self.perm.iter().zip(&self.phase).enumerate() {
            perm[row as usize] = j as u32;
            phase[row as usize] = (m - ph) % m;
        }
        Self {
            modulus: m,
            perm,
            phase,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.dim(), self.modulus);
        for _ in 0..k {
            acc = self.mul_unchecked(&acc);
        }
        acc
    }

    pub fn scaled(&self, s: PhaseScalar) -> Self {
        Self {
            modulus: self.modulus,
            perm: self.perm.clone(),
            phase: self.phase.iter().map(|&k| (k + s.exponent) % self.modulus).collect(),
        }
    }

    /// `Some(c)` when the operator equals `c * I`.
    pub fn as_scalar(&self) -> Option<PhaseScalar> {
        let first = *self.phase.first()?;
        let is_id = self.perm.iter().enumerate().all(|(j, &r)| r as usize == j);
        (is_id && self.phase.iter().all(|&k| k == first)).then(|| PhaseScalar::new(first, self.modulus))
    }

    /// `Some(k)` with `self = zeta^k * other`.
    pub fn equal_up_to_phase(&self, other: &Self) -> Result<Option<PhaseScalar>, PauliError> {
        self.check_dim(other)?;
        if self.perm != other.perm {
            return Ok(None);
        }
        let m = self.modulus;
        let k = (self.phase[0] + m - other.phase[0]) % m;
        let constant = self
            .phase
            .iter()
            .zip(&other.phase)
            .all(|(&x, &y)| (x + m - y) % m == k);
        Ok(constant.then(|| PhaseScalar::new(k, m)))
    }

    pub fn commutes(&self, other: &Self) -> Result<bool, PauliError> {
        self.check_dim(other)?;
        Ok(self.mul_unchecked(other) == other.mul_unchecked(self))
    }

    /// Smallest `m >= 1` with `self^m` scalar, and that scalar.
    pub fn order_up_to_phase(&self) -> (u32, PhaseScalar) {
        let mut acc = self.clone();
        let mut m = 1;
        loop {
            if let Some(c) = acc.as_scalar() {
                return (m, c);
            }
            acc = self.mul_unchecked(&acc);
            m += 1;
        }
    }

    /// Applies the operator to a state vector.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim()];
        for (j, (&row, &ph)) in self.perm.iter().zip(&self.phase).enumerate() {
            out[row as usize] = root_of_unity(ph, self.modulus) * v[j];
        }
        out
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let d = self.dim();
        let mut m = DMatrix::zeros(d, d);
        for (j, (&row, &ph)) in self.perm.iter().zip(&self.phase).enumerate() {
            m[(row as usize, j)] = root_of_unity(ph, self.modulus);
        }
        m
    }
}

/// Canonical operator for a symplectic index.
///
/// Each qudit contributes `X^a Z^b` acting as `|j> -> w^{b j} |j + a>`; for
/// qubits the `(1, 1)` slot carries the extra `i` so it is `sigma_y = i X Z`.
/// Qudit 0 is the leftmost tensor factor (most significant basis digit).
pub fn make_operator(
    params: &SystemParams,
    idx: &SymplecticIndex,
) -> Result<PauliOperator, PauliError> {
    if idx.n() != params.n() {
        return Err(PauliError::QuditMismatch {
            expected: params.n(),
            found: idx.n(),
        });
    }
    let p = params.p();
    let m = params.phase_modulus();
    let unit = m / p;
    let n = params.n();
    let d = params.dim();
    let y_fix: u32 = if p == 2 {
        idx.x_part()
            .iter()
            .zip(idx.z_part())
            .filter(|(&a, &b)| a == 1 && b == 1)
            .count() as u32
    } else {
        0
    };

    let mut perm = Vec::with_capacity(d);
    let mut phase = Vec::with_capacity(d);
    let mut digits = vec![0u32; n];
    for j in 0..d {
        let mut rest = j;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % p as usize) as u32;
            rest /= p as usize;
        }
        let mut row = 0usize;
        let mut ph = y_fix;
        for (k, &jk) in digits.iter().enumerate() {
            let (a, b) = (idx.x_part()[k], idx.z_part()[k]);
            row = row * p as usize + ((jk + a) % p) as usize;
            ph += unit * ((b * jk) % p);
        }
        perm.push(row as u32);
        phase.push(ph % m);
    }
    Ok(PauliOperator {
        modulus: m,
        perm,
        phase,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::symplectic_product;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn qubit(a: u32, b: u32) -> PauliOperator {
        let params = SystemParams::new(2, 1).unwrap();
        make_operator(&params, &SymplecticIndex::new(vec![a], vec![b], 2)).unwrap()
    }

    fn dense_close(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> bool {
        (a - b).iter().all(|z| z.norm() < 1e-12)
    }

    #[test]
    fn sigma_x_and_sigma_y() {
        let x = qubit(1, 0);
        assert_eq!(x.perm(), &[1, 0]);
        assert_eq!(x.phase_exponents(), &[0, 0]);

        // sigma_y = [[0, -i], [i, 0]]: column 0 holds +i, column 1 holds -i.
        let y = qubit(1, 1);
        assert_eq!(y.perm(), &[1, 0]);
        assert_eq!(y.phase_exponents(), &[1, 3]);
        let expected = DMatrix::from_row_slice(2, 2, &[c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]);
        assert!(dense_close(&y.to_dense(), &expected));

        let z = qubit(0, 1);
        let ixz = x.multiply(&z).unwrap().scaled(PhaseScalar::new(1, 4));
        assert_eq!(ixz, y);
    }

    #[test]
    fn qutrit_y_is_x_times_z() {
        let params = SystemParams::new(3, 1).unwrap();
        let op = |a, b| make_operator(&params, &SymplecticIndex::new(vec![a], vec![b], 3)).unwrap();
        let (z, x) = (op(0, 1), op(1, 0));
        assert_eq!(op(1, 1), x.multiply(&z).unwrap());
        assert_eq!(op(1, 2), x.multiply(&z.pow(2)).unwrap());
        // X cycles |j> -> |j+1>, Y additionally picks up w^j.
        let y = op(1, 1);
        assert_eq!(y.perm(), &[1, 2, 0]);
        assert_eq!(y.phase_exponents(), &[0, 1, 2]);
    }

    #[test]
    fn product_matches_dense_product() {
        let params = SystemParams::new(3, 2).unwrap();
        let a = make_operator(&params, &SymplecticIndex::new(vec![1, 2], vec![0, 1], 3)).unwrap();
        let b = make_operator(&params, &SymplecticIndex::new(vec![2, 2], vec![1, 1], 3)).unwrap();
        let exact = a.multiply(&b).unwrap().to_dense();
        assert!(dense_close(&exact, &(a.to_dense() * b.to_dense())));
    }

    #[test]
    fn inverse_and_scalars() {
        let params = SystemParams::new(3, 2).unwrap();
        let a = make_operator(&params, &SymplecticIndex::new(vec![1, 0], vec![2, 1], 3)).unwrap();
        let id = a.multiply(&a.inverse()).unwrap();
        assert_eq!(id.as_scalar(), Some(PhaseScalar::one(3)));
        assert_eq!(id, PauliOperator::identity(9, 3));
        assert_eq!(a.as_scalar(), None);
        assert_eq!(a.order_up_to_phase().0, 3);
    }

    #[test]
    fn equal_up_to_phase_detects_constant_offsets() {
        let y = qubit(1, 1);
        let minus_y = y.scaled(PhaseScalar::new(2, 4));
        assert_eq!(minus_y.equal_up_to_phase(&y).unwrap(), Some(PhaseScalar::new(2, 4)));
        assert_eq!(y.equal_up_to_phase(&y).unwrap(), Some(PhaseScalar::one(4)));
        assert_eq!(y.equal_up_to_phase(&qubit(1, 0)).unwrap(), None);
        assert_eq!(qubit(0, 1).equal_up_to_phase(&PauliOperator::identity(2, 4)).unwrap(), None);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let two = SystemParams::new(2, 2).unwrap();
        let big = make_operator(&two, &SymplecticIndex::new(vec![1, 0], vec![0, 0], 2)).unwrap();
        let small = qubit(1, 0);
        assert!(matches!(big.multiply(&small), Err(PauliError::DimensionMismatch { .. })));
        assert!(big.commutes(&small).is_err());
        let bad = SymplecticIndex::new(vec![1], vec![0], 2);
        assert!(matches!(make_operator(&two, &bad), Err(PauliError::QuditMismatch { .. })));
    }

    #[test]
    fn single_qubit_commutation_agrees_with_form() {
        let all = [(1, 0), (1, 1), (0, 1)];
        for &(a1, b1) in &all {
            for &(a2, b2) in &all {
                let u = SymplecticIndex::new(vec![a1], vec![b1], 2);
                let v = SymplecticIndex::new(vec![a2], vec![b2], 2);
                let commute = qubit(a1, b1).commutes(&qubit(a2, b2)).unwrap();
                assert_eq!(commute, symplectic_product(&u, &v, 2) == 0);
            }
        }
    }
}
