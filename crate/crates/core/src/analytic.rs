//! Analytically described limit objects and their certified finite nets.
//!
//! The truncated Lebesgue function `min(measure, c)` on the unit interval
//! and cut functions of step graphons have continuum-sized quotient sets;
//! these are approximated by finite nets over probability grids carrying an
//! explicit covering-radius bound, so every distance against them can be
//! reported as value plus-or-minus a certified error.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::profile::{QuotientSet, QuotientVector, DEFAULT_ENUM_BUDGET, ORBIT_K_CAP};
use crate::setfn::{SetFunction, TABLE_GROUND_CAP};
use crate::value::Value;

/// Name of the seeded generator used for graph sampling, recorded in output
/// metadata for reproducibility.
pub const SAMPLER_RNG: &str = "ChaCha8";

/// A finite net of an infinite quotient set with a proven covering radius.
#[derive(Debug, Clone)]
pub struct CertifiedNet<V> {
    pub quotient_set: QuotientSet<V>,
    /// Grid resolution `k / m` in the sum metric over parts.
    pub net_resolution: f64,
    /// Euclidean covering radius: every point of the true quotient set lies
    /// within this distance of the net.
    pub error_bound: f64,
}

/// Sidecar metadata for net exports.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetSidecar {
    pub resolution: f64,
    pub error_bound: f64,
}

impl<V: Value> CertifiedNet<V> {
    pub fn sidecar_json(&self) -> String {
        serde_json::to_string_pretty(&NetSidecar {
            resolution: self.net_resolution,
            error_bound: self.error_bound,
        })
        .expect("sidecar serializes")
    }
}

/// The truncation of Lebesgue measure on `[0,1]` at level `c`.
#[derive(Debug, Clone)]
pub struct TruncatedLebesgue<V> {
    c: V,
}

impl<V: Value> TruncatedLebesgue<V> {
    pub fn new(c: V) -> Result<Self> {
        check_truncation(&c)?;
        Ok(TruncatedLebesgue { c })
    }

    pub fn c(&self) -> &V {
        &self.c
    }

    pub fn quotient(&self, parts: &[V]) -> Result<QuotientVector<V>> {
        lambda_c_quotient(parts, &self.c)
    }

    pub fn net(&self, k: usize, m: usize) -> Result<CertifiedNet<V>> {
        lambda_c_net(k, &self.c, m)
    }

    pub fn dyadic_quotient(&self, depth: usize) -> Result<SetFunction<V>> {
        dyadic_quotient(&self.c, depth)
    }
}

fn check_truncation<V: Value>(c: &V) -> Result<()> {
    if *c <= V::zero() || *c >= V::one() {
        return Err(Error::InvalidInput(
            "truncation level c must lie strictly between 0 and 1".into(),
        ));
    }
    Ok(())
}

fn check_probability_vector<V: Value>(parts: &[V]) -> Result<()> {
    if parts.is_empty() {
        return Err(Error::InvalidInput("empty probability vector".into()));
    }
    let mut sum = V::zero();
    for p in parts {
        if *p < V::zero() {
            return Err(Error::InvalidInput(
                "probability vector entries must be nonnegative".into(),
            ));
        }
        sum = sum + p.clone();
    }
    let ok = if V::EXACT {
        sum == V::one()
    } else {
        (sum.to_f64_lossy() - 1.0).abs() <= 1e-9
    };
    if !ok {
        return Err(Error::InvalidInput(format!(
            "probability vector sums to {sum}, expected 1"
        )));
    }
    Ok(())
}

/// Quotient of the truncated Lebesgue function by a partition of `[0,1]`
/// into parts of the given measures: `coords[A] = min(sum of parts in A, c)`.
pub fn lambda_c_quotient<V: Value>(parts: &[V], c: &V) -> Result<QuotientVector<V>> {
    check_truncation(c)?;
    check_probability_vector(parts)?;
    let k = parts.len();
    if k > TABLE_GROUND_CAP {
        return Err(Error::GroundTooLarge {
            requested: k,
            cap: TABLE_GROUND_CAP,
            what: "quotient vector",
        });
    }
    let size = 1usize << k;
    let mut sums = vec![V::zero(); size];
    let mut coords = Vec::with_capacity(size);
    coords.push(V::zero());
    for a in 1..size {
        let low = a.trailing_zeros() as usize;
        sums[a] = sums[a & (a - 1)].clone() + parts[low].clone();
        coords.push(V::min_value(sums[a].clone(), c.clone()));
    }
    QuotientVector::new(k, coords)
}

/// Certified net of the k-quotient set of the truncated Lebesgue function,
/// over probability vectors with entries that are multiples of `1/m`.
///
/// Rounding any probability vector to the grid moves the part sums by at
/// most `k/m` in total, and truncation is 1-Lipschitz per coordinate, so the
/// covering radius is `(k/m) * sqrt(2^k)` in the Euclidean norm.
pub fn lambda_c_net<V: Value>(k: usize, c: &V, m: usize) -> Result<CertifiedNet<V>> {
    check_truncation(c)?;
    if k == 0 || k > ORBIT_K_CAP {
        return Err(Error::GroundTooLarge {
            requested: k,
            cap: ORBIT_K_CAP,
            what: "quotient set orbit operations",
        });
    }
    if m == 0 {
        return Err(Error::InvalidInput("grid modulus m must be positive".into()));
    }
    let count = compositions_count(m, k);
    if count > DEFAULT_ENUM_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            what: format!("lambda_c net grid with k={k}, m={m}"),
            required: count,
            bound: DEFAULT_ENUM_BUDGET,
        });
    }
    let mut vectors = Vec::new();
    let mut parts = vec![0usize; k];
    // nonincreasing grids suffice: relabeling is handled by canonicalization
    descend_grid(m, k, 0, m, &mut parts, &mut |grid| {
        let parts: Vec<V> = grid
            .iter()
            .map(|&j| V::from_int_ratio(j as i64, m as i64))
            .collect();
        vectors.push(lambda_c_quotient(&parts, c).expect("grid vector is valid"));
    });
    let quotient_set = QuotientSet::from_vectors(k, vectors)?;
    let resolution = k as f64 / m as f64;
    Ok(CertifiedNet {
        quotient_set,
        net_resolution: resolution,
        error_bound: resolution * 2f64.powi(k as i32).sqrt(),
    })
}

fn descend_grid(
    remaining: usize,
    slots: usize,
    idx: usize,
    max_part: usize,
    parts: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if idx == slots {
        if remaining == 0 {
            visit(parts);
        }
        return;
    }
    let slots_left = slots - idx;
    let hi = remaining.min(max_part);
    let lo = remaining.div_ceil(slots_left);
    for part in (lo..=hi).rev() {
        parts[idx] = part;
        descend_grid(remaining - part, slots, idx + 1, part, parts, visit);
    }
    parts[idx] = 0;
}

fn compositions_count(m: usize, k: usize) -> u128 {
    // C(m + k - 1, k - 1)
    let mut acc = 1u128;
    for i in 0..(k - 1) {
        acc = acc.saturating_mul((m + k - 1 - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// The truncated Lebesgue function quotiented by `2^depth` equal dyadic
/// intervals: `f(X) = min(|X| * 2^-depth, c)`, ground-permutation symmetric.
pub fn dyadic_quotient<V: Value>(c: &V, depth: usize) -> Result<SetFunction<V>> {
    check_truncation(c)?;
    if depth > 6 {
        return Err(Error::GroundTooLarge {
            requested: depth,
            cap: 6,
            what: "dyadic depth (ground 2^depth)",
        });
    }
    let n = 1usize << depth;
    let by_size = (0..=n)
        .map(|s| V::min_value(V::from_int_ratio(s as i64, n as i64), c.clone()))
        .collect();
    SetFunction::symmetric_from_sizes(n, by_size)
}

/// The normalized cut function of a graph: `f(X) = crossing_edges(X) / |V|^2`.
pub fn graph_cut_setfunction<V: Value>(graph: &Graph) -> Result<SetFunction<V>> {
    let n = graph.vertex_count();
    if n > TABLE_GROUND_CAP {
        return Err(Error::GroundTooLarge {
            requested: n,
            cap: TABLE_GROUND_CAP,
            what: "graph cut table",
        });
    }
    let denom = (n * n) as i64;
    let values = (0..1u64 << n)
        .map(|mask| V::from_int_ratio(graph.crossing_edges(mask) as i64, denom))
        .collect();
    SetFunction::from_values(n, values)
}

/// A step graphon: `q` steps with weights summing to 1 and a symmetric
/// value matrix with entries in `[0,1]`.
#[derive(Debug, Clone)]
pub struct StepGraphon<V> {
    weights: Vec<V>,
    values: Vec<Vec<V>>,
}

impl<V: Value> StepGraphon<V> {
    pub fn new(weights: Vec<V>, values: Vec<Vec<V>>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidInput("a step graphon needs q >= 1".into()));
        }
        for w in &weights {
            if *w <= V::zero() {
                return Err(Error::InvalidInput(
                    "step weights must be positive".into(),
                ));
            }
        }
        check_probability_vector(&weights)?;
        let q = weights.len();
        if values.len() != q || values.iter().any(|row| row.len() != q) {
            return Err(Error::InvalidInput(format!(
                "value matrix must be {q}x{q}"
            )));
        }
        for (i, row) in values.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if *v < V::zero() || *v > V::one() {
                    return Err(Error::InvalidInput(
                        "graphon values must lie in [0,1]".into(),
                    ));
                }
                if values[j][i] != *v {
                    return Err(Error::InvalidInput(
                        "graphon value matrix must be symmetric".into(),
                    ));
                }
            }
        }
        Ok(StepGraphon { weights, values })
    }

    pub fn constant(w: V) -> Result<Self> {
        StepGraphon::new(vec![V::one()], vec![vec![w]])
    }

    pub fn q(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[V] {
        &self.weights
    }

    pub fn values(&self) -> &[Vec<V>] {
        &self.values
    }

    pub fn max_value(&self) -> V {
        let mut best = V::zero();
        for row in &self.values {
            for v in row {
                if *v > best {
                    best = v.clone();
                }
            }
        }
        best
    }

    /// Cut quotient for an allocation of each step across `k` classes:
    /// `coords[A] = sum_ij W_ij m_i(A) (w_j - m_j(A))` with
    /// `m_i(A) = w_i * sum_{l in A} alloc[i][l]`. Exact because the graphon
    /// is constant on step rectangles.
    pub fn cut_quotient(&self, alloc: &[Vec<V>]) -> Result<QuotientVector<V>> {
        let q = self.q();
        if alloc.len() != q {
            return Err(Error::InvalidInput(format!(
                "allocation needs one row per step ({q})"
            )));
        }
        let k = alloc[0].len();
        if k == 0 || alloc.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidInput("ragged allocation matrix".into()));
        }
        if k > 16 {
            return Err(Error::GroundTooLarge {
                requested: k,
                cap: 16,
                what: "cut quotient classes",
            });
        }
        for row in alloc {
            check_probability_vector(row)?;
        }
        let size = 1usize << k;
        // rowsum[i][A] = fraction of step i allocated to the classes in A
        let mut rowsum = vec![vec![V::zero(); size]; q];
        for (i, row) in alloc.iter().enumerate() {
            for a in 1..size {
                let low = a.trailing_zeros() as usize;
                rowsum[i][a] = rowsum[i][a & (a - 1)].clone() + row[low].clone();
            }
        }
        let mut coords = Vec::with_capacity(size);
        for a in 0..size {
            let mut acc = V::zero();
            for i in 0..q {
                let mi = self.weights[i].clone() * rowsum[i][a].clone();
                if mi.is_zero() {
                    continue;
                }
                for j in 0..q {
                    let mj = self.weights[j].clone() * rowsum[j][a].clone();
                    acc = acc + self.values[i][j].clone() * mi.clone() * (self.weights[j].clone() - mj);
                }
            }
            coords.push(acc);
        }
        QuotientVector::new(k, coords)
    }

    /// Certified net of the k-quotient set over allocations on the `1/m`
    /// grid. The cut form is Lipschitz in the step masses with the frozen
    /// constant `2 * max(W) * q`, giving the covering radius
    /// `2 * max(W) * q * (k/m) * sqrt(2^k)`.
    pub fn net(&self, k: usize, m: usize) -> Result<CertifiedNet<V>> {
        if k == 0 || k > ORBIT_K_CAP {
            return Err(Error::GroundTooLarge {
                requested: k,
                cap: ORBIT_K_CAP,
                what: "quotient set orbit operations",
            });
        }
        if m == 0 {
            return Err(Error::InvalidInput("grid modulus m must be positive".into()));
        }
        let q = self.q();
        let per_row = compositions_count(m, k);
        let total = (0..q).fold(1u128, |acc, _| acc.saturating_mul(per_row));
        if total > DEFAULT_ENUM_BUDGET as u128 {
            return Err(Error::BudgetExceeded {
                what: format!("step graphon net grid with q={q}, k={k}, m={m}"),
                required: total,
                bound: DEFAULT_ENUM_BUDGET,
            });
        }
        // all compositions of m into k parts, as rational rows
        let mut rows: Vec<Vec<V>> = Vec::new();
        let mut scratch = vec![0usize; k];
        all_compositions(m, k, 0, &mut scratch, &mut |grid| {
            rows.push(
                grid.iter()
                    .map(|&j| V::from_int_ratio(j as i64, m as i64))
                    .collect(),
            );
        });
        let mut vectors = Vec::new();
        let mut choice = vec![0usize; q];
        loop {
            let alloc: Vec<Vec<V>> = choice.iter().map(|&c| rows[c].clone()).collect();
            vectors.push(self.cut_quotient(&alloc)?);
            // odometer over row choices
            let mut pos = 0;
            loop {
                if pos == q {
                    let quotient_set = QuotientSet::from_vectors(k, vectors)?;
                    let resolution = k as f64 / m as f64;
                    let lipschitz = 2.0 * self.max_value().to_f64_lossy() * q as f64;
                    return Ok(CertifiedNet {
                        quotient_set,
                        net_resolution: resolution,
                        error_bound: lipschitz * resolution * 2f64.powi(k as i32).sqrt(),
                    });
                }
                choice[pos] += 1;
                if choice[pos] < rows.len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Sample a random graph from the graphon: vertex types drawn from the
    /// step weights, edges independently with probability `W(type_u, type_v)`.
    /// Deterministic given the seed (ChaCha8).
    pub fn sample_graph(&self, n: usize, seed: u64) -> Result<Graph> {
        if n > 64 {
            return Err(Error::GroundTooLarge {
                requested: n,
                cap: 64,
                what: "sampled graph",
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cumulative: Vec<f64> = self
            .weights
            .iter()
            .scan(0.0, |acc, w| {
                *acc += w.to_f64_lossy();
                Some(*acc)
            })
            .collect();
        let types: Vec<usize> = (0..n)
            .map(|_| {
                let x: f64 = rng.gen();
                cumulative
                    .iter()
                    .position(|&c| x < c)
                    .unwrap_or(self.q() - 1)
            })
            .collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                let p = self.values[types[u]][types[v]].to_f64_lossy();
                if rng.gen::<f64>() < p {
                    edges.push((u as u8, v as u8));
                }
            }
        }
        Graph::new(n, edges)
    }

    /// Text form: line 1 `q`, line 2 the weights, then `q` matrix rows.
    pub fn parse_text(text: &str) -> Result<StepGraphon<V>> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, qline) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty graphon file".into(),
        })?;
        let q: usize = qline.trim().parse().map_err(|_| Error::Parse {
            line: 1,
            message: format!("expected the number of steps, got `{}`", qline.trim()),
        })?;
        let parse_row = |lineno: usize, line: &str, expect: usize| -> Result<Vec<V>> {
            let row: Vec<V> = line
                .split_whitespace()
                .map(|tok| {
                    V::parse_value(tok).ok_or(Error::Parse {
                        line: lineno,
                        message: format!("bad value `{tok}`"),
                    })
                })
                .collect::<Result<_>>()?;
            if row.len() != expect {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected {expect} values, found {}", row.len()),
                });
            }
            Ok(row)
        };
        let (widx, wline) = lines.next().ok_or(Error::Parse {
            line: 2,
            message: "missing weights line".into(),
        })?;
        let weights = parse_row(widx + 1, wline, q)?;
        let mut values = Vec::with_capacity(q);
        for _ in 0..q {
            let (idx, line) = lines.next().ok_or(Error::Parse {
                line: widx + 2,
                message: "missing matrix row".into(),
            })?;
            values.push(parse_row(idx + 1, line, q)?);
        }
        StepGraphon::new(weights, values)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.q());
        out.push_str(
            &self
                .weights
                .iter()
                .map(|w| w.render())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push('\n');
        for row in &self.values {
            out.push_str(
                &row.iter().map(|v| v.render()).collect::<Vec<_>>().join(" "),
            );
            out.push('\n');
        }
        out
    }
}

fn all_compositions(
    remaining: usize,
    slots: usize,
    idx: usize,
    parts: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if idx + 1 == slots {
        parts[idx] = remaining;
        visit(parts);
        return;
    }
    for part in (0..=remaining).rev() {
        parts[idx] = part;
        all_compositions(remaining - part, slots, idx + 1, parts, visit);
    }
}
