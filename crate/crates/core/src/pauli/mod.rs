//! Generalized Pauli operators of `n` qudits of prime dimension `p`.
//!
//! Operators are kept in two forms: the symplectic index `(a, b)` over
//! `Z_p^n x Z_p^n`, and an exact monomial matrix (a permutation together with
//! one root-of-unity phase per column). The monomial form makes products,
//! commutators and phase bookkeeping exact; the symplectic form is the cheap
//! route used to build graphs.

mod eigen;
mod operator;

pub use eigen::{common_eigenbasis, overlap_sq, schmidt_rank, StateVector};
pub use operator::{make_operator, PauliOperator, PhaseScalar};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PauliError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("a system needs at least one qudit")]
    NoQudits,
    #[error("Hilbert space dimension {p}^{n} is too large")]
    TooLarge { p: u32, n: usize },
    #[error("index has {found} qudits, system has {expected}")]
    QuditMismatch { expected: usize, found: usize },
    #[error("operator dimensions differ ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("operators {first} and {second} of the family do not commute")]
    NonCommuting { first: usize, second: usize },
    #[error("an eigenbasis needs a non-empty family")]
    EmptyFamily,
    #[error("state norm deviates from 1 by {deviation:e}")]
    NotNormalized { deviation: f64 },
    #[error("state length {len} is not p^2 = {expected}")]
    NotBipartite { len: usize, expected: usize },
    #[error("eigenspace refinement lost rank ({found} of {expected} vectors)")]
    RankLoss { expected: usize, found: usize },
}

/// Trial-division primality test.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u32;
    while k.saturating_mul(k) <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Qudit dimension, qudit count and the derived sizes of the system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SystemParams {
    p: u32,
    n: usize,
    d: usize,
    modulus: u32,
}

impl SystemParams {
    /// Largest Hilbert dimension accepted; monomial operators are O(d).
    pub const MAX_DIM: usize = 1 << 20;

    pub fn new(p: u32, n: usize) -> Result<Self, PauliError> {
        if !is_prime(p) {
            return Err(PauliError::NotPrime(p));
        }
        if n == 0 {
            return Err(PauliError::NoQudits);
        }
        let d = (p as usize)
            .checked_pow(n as u32)
            .filter(|&d| d <= Self::MAX_DIM)
            .ok_or(PauliError::TooLarge { p, n })?;
        let modulus = if p == 2 { 4 } else { p };
        Ok(Self { p, n, d, modulus })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Hilbert space dimension `p^n`.
    pub fn dim(&self) -> usize {
        self.d
    }

    /// Order `M` of the phase group: 4 for qubits (to hold `i`), `p` otherwise.
    pub fn phase_modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of non-identity operators, `d^2 - 1`.
    pub fn operator_count(&self) -> usize {
        self.d * self.d - 1
    }
}

/// Coordinates `(a, b)` of `X^a Z^b` in `Z_p^n x Z_p^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymplecticIndex {
    a: Vec<u32>,
    b: Vec<u32>,
}

impl SymplecticIndex {
    /// Builds an index, reducing every entry mod `p`.
    ///
    /// # Panics
    /// If `a` and `b` have different lengths.
    pub fn new(a: Vec<u32>, b: Vec<u32>, p: u32) -> Self {
        assert_eq!(a.len(), b.len(), "X and Z parts must have equal length");
        Self {
            a: a.into_iter().map(|x| x % p).collect(),
            b: b.into_iter().map(|x| x % p).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            a: vec![0; n],
            b: vec![0; n],
        }
    }

    /// Decodes the `k`-th index in base-`p` order over the flat vector `[a.., b..]`.
    pub fn from_rank(mut k: usize, params: &SystemParams) -> Self {
        let p = params.p as usize;
        let n = params.n;
        let mut flat = vec![0u32; 2 * n];
        for slot in flat.iter_mut().rev() {
            *slot = (k % p) as u32;
            k /= p;
        }
        let b = flat.split_off(n);
        Self { a: flat, b }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn x_part(&self) -> &[u32] {
        &self.a
    }

    pub fn z_part(&self) -> &[u32] {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&x| x == 0)
    }

    /// Flat coordinates `[a_1..a_n, b_1..b_n]`.
    pub fn to_flat(&self) -> Vec<u32> {
        self.a.iter().chain(&self.b).copied().collect()
    }

    pub fn add(&self, other: &Self, p: u32) -> Self {
        let add = |x: &[u32], y: &[u32]| x.iter().zip(y).map(|(u, v)| (u + v) % p).collect();
        Self {
            a: add(&self.a, &other.a),
            b: add(&self.b, &other.b),
        }
    }

    pub fn scale(&self, k: u32, p: u32) -> Self {
        let mul = |x: &[u32]| x.iter().map(|u| (u * k) % p).collect();
        Self {
            a: mul(&self.a),
            b: mul(&self.b),
        }
    }
}

/// The alternating form `<u, v> = u.a . v.b - v.a . u.b (mod p)`.
pub fn symplectic_product(u: &SymplecticIndex, v: &SymplecticIndex, p: u32) -> u32 {
    debug_assert_eq!(u.n(), v.n());
    let p = p as u64;
    let dot = |x: &[u32], y: &[u32]| -> u64 {
        x.iter()
            .zip(y)
            .map(|(&s, &t)| (s as u64 * t as u64) % p)
            .sum::<u64>()
            % p
    };
    ((dot(&u.a, &v.b) + p - dot(&v.a, &u.b)) % p) as u32
}
