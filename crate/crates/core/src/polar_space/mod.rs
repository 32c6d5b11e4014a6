//! Counting formulas for symplectic polar spaces W(2N-1, q) and the
//! partial-geometry parameters predicted for N-qudit Pauli graphs.

use serde::Serialize;
use thiserror::Error;

use crate::geometry::{enumerate_mcs, find_spreads, GeometryError, PauliGraphBundle};
use crate::graph::{is_strongly_regular, srg_multiplicities};

/// Largest operator count for which lines and a spread are enumerated
/// during cross-validation.
pub const LINE_COUNT_LIMIT: usize = 80;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolarError {
    #[error("q = {0} is not a prime power")]
    InvalidQ(u64),
    #[error("rank N = {0} is out of range")]
    InvalidRank(u32),
    #[error("counts overflow 64 bits")]
    Overflow,
    #[error("non-integral parameter: {0}")]
    NonIntegral(String),
    #[error("graph is for p = {p}, n = {n}, not q = {q}, N = {rank}")]
    WrongGraph { p: u32, n: usize, q: u64, rank: u32 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PolarSpaceParams {
    pub q: u64,
    pub rank: u32,
    /// Points `(q^2N - 1)/(q - 1)`.
    pub points: u64,
    /// Non-identity operators `q^2N - 1`; equals `points` for `q = 2`.
    pub operators: u64,
    /// Generators `(q + 1)(q^2 + 1)...(q^N + 1)`.
    pub generators: u64,
    pub spread_size: u64,
    /// Points per generator `(q^N - 1)/(q - 1)`.
    pub generator_size: u64,
    /// Points not perpendicular to a given point, `q^(2N-1)`.
    pub non_perpendicular: u64,
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q >= 2");
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

fn pow(q: u64, e: u32) -> Result<u64, PolarError> {
    q.checked_pow(e).ok_or(PolarError::Overflow)
}

fn exact_div(num: u64, den: u64, what: &str) -> Result<u64, PolarError> {
    if den == 0 || !num.is_multiple_of(den) {
        return Err(PolarError::NonIntegral(format!("{what} = {num}/{den}")));
    }
    Ok(num / den)
}

pub fn polar_counts(q: u64, rank: u32) -> Result<PolarSpaceParams, PolarError> {
    if !is_prime_power(q) {
        return Err(PolarError::InvalidQ(q));
    }
    if rank == 0 {
        return Err(PolarError::InvalidRank(rank));
    }
    let operators = pow(q, 2 * rank)? - 1;
    let generators = (1..=rank).try_fold(1u64, |acc, i| {
        acc.checked_mul(pow(q, i)? + 1).ok_or(PolarError::Overflow)
    })?;
    Ok(PolarSpaceParams {
        q,
        rank,
        points: exact_div(operators, q - 1, "points")?,
        operators,
        generators,
        spread_size: pow(q, rank)? + 1,
        generator_size: exact_div(pow(q, rank)? - 1, q - 1, "generator size")?,
        non_perpendicular: pow(q, 2 * rank - 1)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartialGeometryParams {
    pub s: u64,
    pub t: u64,
    pub alpha: u64,
    /// `(s+1)(st+alpha)/alpha`.
    pub v: u64,
    /// Lines `(t+1)(st+alpha)/alpha`.
    pub lines: u64,
    pub degree: u64,
    pub lambda: u64,
    pub mu: u64,
    /// Restricted eigenvalues `s - alpha` and `-t - 1`.
    pub r: i64,
    pub l: i64,
    pub f: u64,
    pub g: u64,
    /// Odd `q`: the graph on operators is not this SRG; the parameters
    /// describe the point graph only.
    pub expectation_only: bool,
}

impl PartialGeometryParams {
    pub fn srg(&self) -> (u64, u64, u64, u64) {
        (self.v, self.degree, self.lambda, self.mu)
    }

    /// `mu = alpha(t+1) = rl + D` and `lambda = s-1+t(alpha-1) = mu+r+l`.
    pub fn identities_hold(&self) -> bool {
        let (d, lambda, mu) = (self.degree as i64, self.lambda as i64, self.mu as i64);
        mu == (self.alpha * (self.t + 1)) as i64
            && mu == self.r * self.l + d
            && lambda == self.s as i64 - 1 + (self.t * self.alpha) as i64 - self.t as i64
            && lambda == mu + self.r + self.l
    }
}

pub fn predicted_pg(q: u64, rank: u32) -> Result<PartialGeometryParams, PolarError> {
    if !is_prime_power(q) {
        return Err(PolarError::InvalidQ(q));
    }
    if rank < 2 {
        return Err(PolarError::InvalidRank(rank));
    }
    let t = pow(q, rank - 1)?;
    let alpha = exact_div(t - 1, q - 1, "alpha")?;
    let s = q * alpha;
    let mul = |a: u64, b: u64| a.checked_mul(b).ok_or(PolarError::Overflow);
    let st_a = mul(s, t)? + alpha;
    let v = exact_div(mul(s + 1, st_a)?, alpha, "v")?;
    let lines = exact_div(mul(t + 1, st_a)?, alpha, "lines")?;
    let degree = mul(s, t + 1)?;
    let lambda = s - 1 + t * (alpha - 1);
    let mu = alpha * (t + 1);
    let (r, l) = (s as i64 - alpha as i64, -(t as i64) - 1);
    let (f, g) = srg_multiplicities(degree as i64, r, l)
        .ok_or_else(|| PolarError::NonIntegral(format!("multiplicities for D = {degree}, r = {r}, l = {l}")))?;
    Ok(PartialGeometryParams {
        s,
        t,
        alpha,
        v,
        lines,
        degree,
        lambda,
        mu,
        r,
        l,
        f,
        g,
        expectation_only: q % 2 == 1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldCheck {
    pub field: String,
    pub expected: String,
    pub measured: String,
    pub matches: bool,
    /// Reported but not required to match.
    pub informational: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub counts: PolarSpaceParams,
    pub predicted: PartialGeometryParams,
    pub checks: Vec<FieldCheck>,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.matches || c.informational)
    }
}

/// Compares a built Pauli graph with the predicted counts and SRG
/// parameters, field by field. For odd `q` the SRG fields are
/// informational since the operator graph is not strongly regular.
pub fn cross_validate(q: u64, rank: u32, bundle: &PauliGraphBundle) -> Result<CrossValidation, PolarError> {
    let params = bundle.params();
    if u64::from(params.p()) != q || params.n() != rank as usize {
        return Err(PolarError::WrongGraph {
            p: params.p(),
            n: params.n(),
            q,
            rank,
        });
    }
    let counts = polar_counts(q, rank)?;
    let predicted = predicted_pg(q, rank)?;
    let g = bundle.graph();
    let mut checks = Vec::new();
    let mut check = |field: &str, expected: String, measured: String, informational: bool| {
        checks.push(FieldCheck {
            field: field.to_string(),
            matches: expected == measured,
            expected,
            measured,
            informational,
        })
    };

    check("v", counts.operators.to_string(), g.vertex_count().to_string(), false);
    // Operators not commuting with a given one: q - 1 per non-perpendicular point.
    let non_commuting = counts.non_perpendicular * (q - 1);
    let degree = counts.operators - 1 - non_commuting;
    let measured_degree = g.regular_degree();
    check("D", degree.to_string(), fmt_opt(measured_degree), false);
    check(
        "non-neighbours",
        non_commuting.to_string(),
        fmt_opt(measured_degree.map(|d| g.vertex_count() - 1 - d)),
        false,
    );

    let srg = is_strongly_regular(g);
    let odd = predicted.expectation_only;
    // For odd q the operator graph is not strongly regular; the predicted
    // SRG is the graph on points, so its eigenvalues are shown only.
    let expected_srg = if odd { "not srg".to_string() } else { format!("srg{:?}", predicted.srg()) };
    let measured_srg = srg.map_or("not srg".to_string(), |s| format!("srg{:?}", s.quadruple()));
    check("srg", expected_srg, measured_srg, false);
    let eigen = srg.and_then(|s| s.eigen);
    check(
        "r, l",
        format!("{}, {}", predicted.r, predicted.l),
        eigen.map_or("-".into(), |e| format!("{}, {}", e.r, e.l)),
        odd,
    );
    check(
        "f, g",
        format!("{}, {}", predicted.f, predicted.g),
        eigen.map_or("-".into(), |e| format!("{}, {}", e.f, e.g)),
        odd,
    );

    if g.vertex_count() <= LINE_COUNT_LIMIT {
        let s = enumerate_mcs(bundle)?;
        check("generators", counts.generators.to_string(), s.line_count().to_string(), false);
        let operators_per_line = (counts.generator_size * (q - 1)).to_string();
        let sizes = s.uniform_orders().map(|(k, _)| k);
        check("generator size", operators_per_line, fmt_opt(sizes), false);
        let spread = find_spreads(&s, Some(1));
        check(
            "spread size",
            counts.spread_size.to_string(),
            fmt_opt(spread.first().map(Vec::len)),
            false,
        );
    }
    Ok(CrossValidation {
        counts,
        predicted,
        checks,
    })
}

fn fmt_opt(x: Option<usize>) -> String {
    x.map_or("-".into(), |x| x.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_pauli_graph;
    use crate::pauli::SystemParams;

    #[test]
    fn counts_for_qubits() {
        let c = polar_counts(2, 2).unwrap();
        assert_eq!(
            (c.points, c.generators, c.spread_size, c.generator_size, c.non_perpendicular),
            (15, 15, 5, 3, 8)
        );
        let c = polar_counts(2, 3).unwrap();
        assert_eq!((c.points, c.generators), (63, 135));
        assert_eq!(polar_counts(2, 4).unwrap().points, 255);
        assert_eq!(polar_counts(3, 2).unwrap().points, 40);
        assert!(polar_counts(6, 2).is_err());
        assert!(polar_counts(2, 0).is_err());
        assert_eq!(polar_counts(2, 40), Err(PolarError::Overflow));
    }

    #[test]
    fn predicted_partial_geometries() {
        let pg = predicted_pg(2, 2).unwrap();
        assert_eq!((pg.s, pg.t, pg.alpha, pg.srg()), (2, 2, 1, (15, 6, 1, 3)));
        let pg = predicted_pg(2, 3).unwrap();
        assert_eq!((pg.s, pg.t, pg.alpha, pg.srg()), (6, 4, 3, (63, 30, 13, 15)));
        let pg = predicted_pg(2, 4).unwrap();
        assert_eq!((pg.s, pg.t, pg.alpha, pg.srg()), (14, 8, 7, (255, 126, 61, 63)));
        assert_eq!((pg.f, pg.g), (135, 119));
        let w3 = predicted_pg(3, 2).unwrap();
        assert_eq!(w3.srg(), (40, 12, 2, 4));
        assert!(w3.expectation_only);
    }

    #[test]
    fn caption_identities_up_to_rank_eight() {
        for q in [2, 3, 4, 5, 7] {
            for rank in 2..=8 {
                let (Ok(pg), Ok(c)) = (predicted_pg(q, rank), polar_counts(q, rank)) else {
                    assert_ne!(q, 2, "N = {rank}");
                    continue;
                };
                assert!(pg.identities_hold(), "q = {q}, N = {rank}");
                assert_eq!(pg.v, c.points);
                assert_eq!(pg.f + pg.g + 1, pg.v);
                if q == 2 {
                    assert_eq!(pg.degree, pg.v - 1 - (1 << (2 * rank - 1)));
                }
            }
        }
    }

    #[test]
    fn cross_validation_on_built_graphs() {
        for (p, n) in [(2, 2), (2, 3), (3, 2)] {
            let b = build_pauli_graph(&SystemParams::new(p, n).unwrap()).unwrap();
            let cv = cross_validate(u64::from(p), n as u32, &b).unwrap();
            assert!(cv.passed(), "{:#?}", cv.checks);
        }
        let b = build_pauli_graph(&SystemParams::new(2, 2).unwrap()).unwrap();
        assert!(matches!(cross_validate(2, 3, &b), Err(PolarError::WrongGraph { .. })));
    }
}
