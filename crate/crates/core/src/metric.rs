//! Hausdorff distances between quotient sets and the aggregated
//! convergence pseudometric `d(f, g) = sum_k 2^-k d_H^k(Q_k(f), Q_k(g))`.
//!
//! Distances are computed in double precision from the stored values; that
//! conversion is the only inexact step on the rational path.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profile::{orbit_min_dist_sq, quotient_set, QuotientSet};
use crate::setfn::SetFunction;
use crate::subset::PermTables;
use crate::value::Value;

/// Hausdorff distance in the Euclidean norm on `R^(2^k)`, with point
/// distances minimized over block relabelings (equivalent to expanding both
/// sets to full orbits).
pub fn hausdorff<V: Value>(a: &QuotientSet<V>, b: &QuotientSet<V>) -> Result<f64> {
    if a.k() != b.k() {
        return Err(Error::KMismatch {
            left: a.k(),
            right: b.k(),
        });
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let tables = PermTables::new(a.k());
    let pa: Vec<Vec<f64>> = a.points().iter().map(|p| p.to_f64_coords()).collect();
    let pb: Vec<Vec<f64>> = b.points().iter().map(|p| p.to_f64_coords()).collect();
    Ok(directed(&pa, &pb, &tables).max(directed(&pb, &pa, &tables)))
}

/// One-sided Hausdorff distance with all-pairs scan and early exit.
fn directed(ps: &[Vec<f64>], qs: &[Vec<f64>], tables: &PermTables) -> f64 {
    let mut worst_sq = 0.0f64;
    for p in ps {
        let mut best_sq = f64::INFINITY;
        for q in qs {
            let d = orbit_min_dist_sq(p, q, tables);
            if d < best_sq {
                best_sq = d;
                if best_sq <= worst_sq {
                    // this point cannot raise the supremum
                    break;
                }
            }
        }
        if best_sq > worst_sq {
            worst_sq = best_sq;
        }
    }
    worst_sq.sqrt()
}

/// Truncated pseudometric value with an explicit bound on the omitted tail.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistanceReport {
    /// `sum_{k=1}^{k_max} 2^-k * per_k[k-1]`.
    pub value: f64,
    /// Upper bound on the omitted `sum_{k > k_max} 2^-k d_H^k` terms.
    pub tail_bound: f64,
    pub k_max: usize,
    /// `d_H^k` for `k = 1..=k_max`.
    pub per_k: Vec<f64>,
}

impl DistanceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Anything that can produce its k-quotient sets and a bound on its values.
pub trait ProfileSource<V: Value> {
    fn quotient_set(&self, k: usize) -> Result<QuotientSet<V>>;
    /// `(min, max)` over all attainable values; used for the tail bound.
    fn value_range(&self) -> (f64, f64);
}

impl<V: Value> ProfileSource<V> for SetFunction<V> {
    fn quotient_set(&self, k: usize) -> Result<QuotientSet<V>> {
        quotient_set(self, k)
    }

    fn value_range(&self) -> (f64, f64) {
        let (lo, hi) = self.value_bounds();
        (lo.to_f64_lossy(), hi.to_f64_lossy())
    }
}

/// Bound on `sum_{k > k_max} 2^-k d_H^k` for sets of vectors whose
/// coordinates live in a box of side `range`: each omitted term is at most
/// `range * sqrt(2^k)`, and the frozen closed form `2^-k_max * 2 * range *
/// sqrt(2^(k_max+1))` dominates the resulting geometric sum.
pub fn tail_bound_for_range(range: f64, k_max: usize) -> f64 {
    if range <= 0.0 {
        return 0.0;
    }
    2f64.powi(-(k_max as i32)) * 2.0 * range * 2f64.powi(k_max as i32 + 1).sqrt()
}

/// The convergence pseudometric truncated at `k_max`, with tail bound.
pub fn pseudometric_d<V: Value>(
    a: &impl ProfileSource<V>,
    b: &impl ProfileSource<V>,
    k_max: usize,
) -> Result<DistanceReport> {
    if k_max == 0 {
        return Err(Error::InvalidInput("k_max must be at least 1".into()));
    }
    let mut per_k = Vec::with_capacity(k_max);
    let mut value = 0.0;
    for k in 1..=k_max {
        let qa = a.quotient_set(k)?;
        let qb = b.quotient_set(k)?;
        let d = hausdorff(&qa, &qb)?;
        per_k.push(d);
        value += 2f64.powi(-(k as i32)) * d;
    }
    let (alo, ahi) = a.value_range();
    let (blo, bhi) = b.value_range();
    let range = (ahi.max(bhi) - alo.min(blo)).max(0.0);
    Ok(DistanceReport {
        value,
        tail_bound: tail_bound_for_range(range, k_max),
        k_max,
        per_k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::QuotientVector;
    use crate::value::Rat;

    fn rho(n: usize, r: usize) -> SetFunction<Rat> {
        let values = (0..1u64 << n)
            .map(|m| Rat::new((m.count_ones() as usize).min(r) as i128, n as i128))
            .collect();
        SetFunction::from_values(n, values).unwrap()
    }

    fn singleton(coords: &[f64]) -> QuotientSet<f64> {
        let k = coords.len().trailing_zeros() as usize;
        QuotientSet::from_vectors(
            k,
            vec![QuotientVector::new(k, coords.to_vec()).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn hausdorff_of_a_set_with_itself_is_zero() {
        let qs = quotient_set(&rho(4, 2), 2).unwrap();
        assert_eq!(hausdorff(&qs, &qs).unwrap(), 0.0);
    }

    #[test]
    fn hausdorff_between_singletons_is_the_point_distance() {
        let a = singleton(&[0.0, 0.25]);
        let b = singleton(&[0.0, 0.75]);
        assert!((hausdorff(&a, &b).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn hausdorff_rejects_mismatched_or_empty_inputs() {
        let a = quotient_set(&rho(2, 1), 1).unwrap();
        let b = quotient_set(&rho(2, 1), 2).unwrap();
        assert!(matches!(hausdorff(&a, &b), Err(Error::KMismatch { .. })));
    }

    #[test]
    fn orbit_min_matches_full_expansion() {
        // the canonical-representative computation equals the naive
        // all-pairs computation over fully expanded orbits
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let n = rng.gen_range(2..=5);
            let k = rng.gen_range(1..=4);
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut values: Vec<Rat> = (0..1u64 << n)
                    .map(|_| Rat::new(rng.gen_range(0..=6), 6))
                    .collect();
                values[0] = Rat::new(0, 1);
                SetFunction::from_values(n, values).unwrap()
            };
            let qa = quotient_set(&mk(&mut rng), k).unwrap();
            let qb = quotient_set(&mk(&mut rng), k).unwrap();
            let fast = hausdorff(&qa, &qb).unwrap();
            let slow = naive_expanded_hausdorff(&qa, &qb);
            assert!((fast - slow).abs() < 1e-12, "fast {fast} vs slow {slow}");
        }
    }

    fn naive_expanded_hausdorff(a: &QuotientSet<Rat>, b: &QuotientSet<Rat>) -> f64 {
        let ea = a.expand_orbits();
        let eb = b.expand_orbits();
        let pa: Vec<Vec<f64>> = ea.points().iter().map(|p| p.to_f64_coords()).collect();
        let pb: Vec<Vec<f64>> = eb.points().iter().map(|p| p.to_f64_coords()).collect();
        let dist = |p: &[f64], q: &[f64]| -> f64 {
            p.iter()
                .zip(q)
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt()
        };
        let one_way = |ps: &[Vec<f64>], qs: &[Vec<f64>]| -> f64 {
            ps.iter()
                .map(|p| {
                    qs.iter()
                        .map(|q| dist(p, q))
                        .fold(f64::INFINITY, f64::min)
                })
                .fold(0.0, f64::max)
        };
        one_way(&pa, &pb).max(one_way(&pb, &pa))
    }

    #[test]
    fn pseudometric_is_reflexively_zero() {
        let f = rho(4, 2);
        let report = pseudometric_d(&f, &f, 3).unwrap();
        assert_eq!(report.value, 0.0);
        assert!(report.per_k.iter().all(|&d| d == 0.0));
    }

    #[test]
    fn pseudometric_sees_convergence_toward_the_common_limit() {
        // rho(4,2) and rho(8,4) both head toward the same truncated measure;
        // the finer pair is closer than the coarser pair
        let near = pseudometric_d(&rho(4, 2), &rho(8, 4), 2).unwrap();
        let far = pseudometric_d(&rho(2, 1), &rho(8, 4), 2).unwrap();
        assert!(near.value > 0.0);
        assert!(near.value < far.value);
    }

    #[test]
    fn tail_bound_frozen_value() {
        // range 1, k_max 8: 2^-8 * 2 * sqrt(2^9)
        let got = tail_bound_for_range(1.0, 8);
        assert!((got - 0.176_776_695_296_636_89).abs() < 1e-15);
        // and it dominates the exact geometric tail sum
        let exact: f64 = (9..200).map(|k| 2f64.powi(-k) * 2f64.powi(k).sqrt()).sum();
        assert!(got >= exact);
    }

    #[test]
    fn report_json_shape() {
        let f = rho(2, 1);
        let report = pseudometric_d(&f, &f, 2).unwrap();
        let json = report.to_json();
        let back: DistanceReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.k_max, 2);
        assert_eq!(back.per_k.len(), 2);
    }
}
