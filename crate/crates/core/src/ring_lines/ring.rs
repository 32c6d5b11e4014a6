use std::fmt;
use std::str::FromStr;

use super::RingError;

/// Largest ring order accepted by [`FiniteRing::from_tables`].
pub const MAX_RING_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingName {
    Z2,
    F4,
    Z2xSq,
    Z2xZ2,
    M2Z2,
}

impl RingName {
    pub const ALL: [RingName; 5] = [RingName::Z2, RingName::F4, RingName::Z2xSq, RingName::Z2xZ2, RingName::M2Z2];

    pub fn as_str(&self) -> &'static str {
        match self {
            RingName::Z2 => "Z2",
            RingName::F4 => "F4",
            RingName::Z2xSq => "Z2x_sq",
            RingName::Z2xZ2 => "Z2xZ2",
            RingName::M2Z2 => "M2Z2",
        }
    }
}

impl fmt::Display for RingName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RingName {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RingName::ALL
            .into_iter()
            .find(|r| r.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| RingError::UnknownRing(s.to_string()))
    }
}

/// How invertibility of a 2x2 matrix over the ring is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invertibility {
    /// Commutative: the determinant is a unit.
    Determinant,
    /// Elements are 2x2 matrices over GF(2): rank of the 4x4 block matrix.
    Gf2Rank,
    /// Search for a right inverse column by column.
    Search,
}

/// A finite ring with unity given by full addition and multiplication tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    labels: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
    commutative: bool,
    inverses: Vec<Option<usize>>,
    /// Row-major `[a, b, c, d]` GF(2) matrix of each element, if the ring is M2(Z2).
    gf2: Option<Vec<[u8; 4]>>,
}

impl FiniteRing {
    /// Validates the tables exhaustively: abelian group under `add`,
    /// associative `mul` with a two-sided unity, both distributive laws.
    pub fn from_tables(
        name: impl Into<String>,
        labels: Vec<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
    ) -> Result<Self, RingError> {
        let n = labels.len();
        let bad = |msg: &str| Err(RingError::InvalidTable(msg.to_string()));
        if n == 0 || n > MAX_RING_ORDER {
            return Err(RingError::TooLarge(n));
        }
        let square = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|row| row.len() == n && row.iter().all(|&x| x < n));
        if !square(&add) || !square(&mul) {
            return bad("tables must be n x n with entries below n");
        }
        let all = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));
        let triples = || (0..n).flat_map(move |a| all().map(move |(b, c)| (a, b, c)));

        if !all().all(|(a, b)| add[a][b] == add[b][a]) {
            return bad("addition is not commutative");
        }
        if !triples().all(|(a, b, c)| add[add[a][b]][c] == add[a][add[b][c]]) {
            return bad("addition is not associative");
        }
        let Some(zero) = (0..n).find(|&z| (0..n).all(|a| add[z][a] == a)) else {
            return bad("no additive identity");
        };
        if !(0..n).all(|a| (0..n).any(|b| add[a][b] == zero)) {
            return bad("missing additive inverse");
        }
        if !triples().all(|(a, b, c)| mul[mul[a][b]][c] == mul[a][mul[b][c]]) {
            return bad("multiplication is not associative");
        }
        let Some(one) = (0..n).find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a)) else {
            return bad("no multiplicative unity");
        };
        let distributive = triples()
            .all(|(a, b, c)| mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]] && mul[add[a][b]][c] == add[mul[a][c]][mul[b][c]]);
        if !distributive {
            return bad("multiplication does not distribute over addition");
        }
        let commutative = all().all(|(a, b)| mul[a][b] == mul[b][a]);
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| mul[a][b] == one && mul[b][a] == one))
            .collect();
        Ok(Self {
            name: name.into(),
            labels,
            add,
            mul,
            zero,
            one,
            commutative,
            inverses,
            gf2: None,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// Element by label; an ASCII `'` is read as a prime.
    pub fn element(&self, label: &str) -> Option<usize> {
        let label = label.trim().replace('\'', "′");
        self.labels.iter().position(|l| *l == label)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.add[a][b] == self.zero).expect("validated ring")
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.inverses[a].is_some()
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.inverses[a]
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.order()).filter(|&a| self.is_unit(a)).collect()
    }

    /// All non-units, zero included. In a finite ring these are exactly
    /// the zero-divisors.
    pub fn zero_divisors(&self) -> Vec<usize> {
        (0..self.order()).filter(|&a| !self.is_unit(a)).collect()
    }

    /// GF(2) matrix of an element, for the 2x2 matrix ring.
    pub fn gf2_matrix(&self, a: usize) -> Option<[u8; 4]> {
        self.gf2.as_ref().map(|m| m[a])
    }

    pub fn invertibility(&self) -> Invertibility {
        if self.commutative {
            Invertibility::Determinant
        } else if self.gf2.is_some() {
            Invertibility::Gf2Rank
        } else {
            Invertibility::Search
        }
    }

    /// Is `[[a, b], [c, d]]` invertible over the ring?
    pub fn matrix_invertible(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        self.matrix_invertible_by(self.invertibility(), a, b, c, d)
    }

    /// Same, with an explicit method. `Determinant` needs commutativity and
    /// `Gf2Rank` the matrix representation; otherwise it falls back to search.
    pub fn matrix_invertible_by(&self, method: Invertibility, a: usize, b: usize, c: usize, d: usize) -> bool {
        match method {
            Invertibility::Determinant if self.commutative => {
                let det = self.add(self.mul(a, d), self.neg(self.mul(b, c)));
                self.is_unit(det)
            }
            Invertibility::Gf2Rank if self.gf2.is_some() => {
                let m = |x: usize| self.gf2_matrix(x).expect("checked");
                let (ma, mb, mc, md) = (m(a), m(b), m(c), m(d));
                // Rows of the 4x4 block matrix, one bit per column.
                let row = |x: [u8; 4], y: [u8; 4], r: usize| {
                    x[2 * r] | x[2 * r + 1] << 1 | y[2 * r] << 2 | y[2 * r + 1] << 3
                };
                gf2_rank([row(ma, mb, 0), row(ma, mb, 1), row(mc, md, 0), row(mc, md, 1)]) == 4
            }
            _ => self.has_right_inverse(a, b, c, d),
        }
    }

    /// In a finite ring a one-sided inverse of a square matrix is two-sided,
    /// so it is enough to solve `M x = e_1` and `M y = e_2`.
    fn has_right_inverse(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let n = self.order();
        let solves = |t0: usize, t1: usize| {
            (0..n).any(|x| (0..n).any(|y| self.add(self.mul(a, x), self.mul(b, y)) == t0 && self.add(self.mul(c, x), self.mul(d, y)) == t1))
        };
        solves(self.one, self.zero) && solves(self.zero, self.one)
    }
}

fn gf2_rank(mut rows: [u8; 4]) -> usize {
    let mut rank = 0;
    for bit in 0..4 {
        let Some(p) = (rank..4).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for i in 0..4 {
            if i != rank && rows[i] >> bit & 1 == 1 {
                rows[i] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// Matrices of the 2x2 matrix ring as `[a, b, c, d]`, in label order 1′..15′, 0′.
const M2Z2_MATRICES: [[u8; 4]; 16] = [
    [1, 0, 0, 1],
    [0, 1, 1, 0],
    [1, 1, 1, 1],
    [0, 0, 1, 1],
    [1, 0, 1, 0],
    [0, 1, 0, 1],
    [1, 1, 0, 0],
    [0, 1, 0, 0],
    [1, 1, 0, 1],
    [0, 0, 1, 0],
    [1, 0, 1, 1],
    [0, 1, 1, 1],
    [1, 1, 1, 0],
    [0, 0, 0, 1],
    [1, 0, 0, 0],
    [0, 0, 0, 0],
];

/// Tables from element codes and code-level operations.
fn tabulate(
    name: &str,
    labels: &[&str],
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
) -> Result<FiniteRing, RingError> {
    let n = labels.len();
    let table = |f: &dyn Fn(usize, usize) -> usize| (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
    FiniteRing::from_tables(name, labels.iter().map(|s| s.to_string()).collect(), table(&add), table(&mul))
}

/// Product of polynomials `c0 + c1 x` (bit 0 = c0) over Z2, reduced by
/// `x^2 = r` where `r` is again a 2-bit code.
fn poly_mul(a: usize, b: usize, r: usize) -> usize {
    let (a0, a1, b0, b1) = (a & 1, a >> 1 & 1, b & 1, b >> 1 & 1);
    let low = (a0 & b0) | ((a0 & b1) ^ (a1 & b0)) << 1;
    if a1 & b1 == 1 {
        low ^ r
    } else {
        low
    }
}

pub fn builtin_ring(name: RingName) -> FiniteRing {
    let ring = match name {
        RingName::Z2 => tabulate("Z2", &["0", "1"], |a, b| a ^ b, |a, b| a & b),
        // x^2 = x + 1
        RingName::F4 => tabulate("F4", &["0", "1", "x", "x+1"], |a, b| a ^ b, |a, b| poly_mul(a, b, 3)),
        // x^2 = 0
        RingName::Z2xSq => tabulate("Z2x_sq", &["0", "1", "x", "x+1"], |a, b| a ^ b, |a, b| poly_mul(a, b, 0)),
        RingName::Z2xZ2 => tabulate("Z2xZ2", &["(0,0)", "(1,0)", "(0,1)", "(1,1)"], |a, b| a ^ b, |a, b| a & b),
        RingName::M2Z2 => {
            let code = |m: [u8; 4]| M2Z2_MATRICES.iter().position(|x| *x == m).expect("closed");
            let labels: Vec<String> = (1..=15).map(|k| format!("{k}′")).chain(["0′".to_string()]).collect();
            let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
            tabulate(
                "M2Z2",
                &labels,
                |a, b| {
                    let (x, y) = (M2Z2_MATRICES[a], M2Z2_MATRICES[b]);
                    code([x[0] ^ y[0], x[1] ^ y[1], x[2] ^ y[2], x[3] ^ y[3]])
                },
                |a, b| {
                    let (x, y) = (M2Z2_MATRICES[a], M2Z2_MATRICES[b]);
                    code([
                        (x[0] & y[0]) ^ (x[1] & y[2]),
                        (x[0] & y[1]) ^ (x[1] & y[3]),
                        (x[2] & y[0]) ^ (x[3] & y[2]),
                        (x[2] & y[1]) ^ (x[3] & y[3]),
                    ])
                },
            )
            .map(|mut r| {
                r.gf2 = Some(M2Z2_MATRICES.to_vec());
                r
            })
        }
    };
    ring.expect("built-in tables are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(r: &FiniteRing, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| r.label(x).to_string()).collect()
    }

    #[test]
    fn matrix_ring_units() {
        let r = builtin_ring(RingName::M2Z2);
        assert_eq!(r.order(), 16);
        assert!(!r.is_commutative());
        assert_eq!(labels(&r, &r.units()), ["1′", "2′", "9′", "11′", "12′", "13′"]);
        assert_eq!(r.zero_divisors().len(), 10);
        assert_eq!((r.label(r.zero()), r.label(r.one())), ("0′", "1′"));
        // Units are exactly the matrices of odd determinant.
        for a in 0..16 {
            let m = r.gf2_matrix(a).unwrap();
            assert_eq!(r.is_unit(a), (m[0] & m[3]) ^ (m[1] & m[2]) == 1);
        }
        assert_eq!(r.element("9'"), r.element("9′"));
    }

    #[test]
    fn order_four_rings() {
        let f4 = builtin_ring(RingName::F4);
        assert_eq!((f4.units().len(), f4.zero_divisors().len()), (3, 1));
        let loc = builtin_ring(RingName::Z2xSq);
        assert_eq!(labels(&loc, &loc.units()), ["1", "x+1"]);
        let prod = builtin_ring(RingName::Z2xZ2);
        assert_eq!(labels(&prod, &prod.units()), ["(1,1)"]);
        assert_eq!(labels(&prod, &prod.zero_divisors()), ["(0,0)", "(1,0)", "(0,1)"]);
        for ring in [f4, loc, prod] {
            assert!(ring.is_commutative());
        }
    }

    #[test]
    fn invertibility_methods_agree() {
        for name in RingName::ALL {
            let r = builtin_ring(name);
            let n = r.order();
            for m in 0..n.pow(4) {
                let (a, b, c, d) = (m % n, m / n % n, m / n / n % n, m / n / n / n);
                let by_search = r.matrix_invertible_by(Invertibility::Search, a, b, c, d);
                assert_eq!(r.matrix_invertible(a, b, c, d), by_search, "{name} {a} {b} {c} {d}");
            }
        }
    }

    #[test]
    fn bad_tables_are_rejected() {
        let add = vec![vec![0, 1], vec![1, 0]];
        let not_distributive = vec![vec![0, 1], vec![1, 1]];
        let l = vec!["0".to_string(), "1".to_string()];
        assert!(matches!(
            FiniteRing::from_tables("bad", l.clone(), add.clone(), not_distributive),
            Err(RingError::InvalidTable(_))
        ));
        assert!(matches!(
            FiniteRing::from_tables("bad", l, add, vec![vec![0, 0], vec![0, 0]]),
            Err(RingError::InvalidTable(_))
        ));
        assert!("Z4".parse::<RingName>().is_err());
        assert_eq!("m2z2".parse::<RingName>().unwrap(), RingName::M2Z2);
    }
}
