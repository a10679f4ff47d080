//! Enumeration of k-quotient sets.
//!
//! The k-quotient set of a set function `f` on `[n]` collects the value
//! vectors of `f` quotiented by every map `[n] -> [k]`, non-surjective maps
//! included. The set is invariant under relabeling the k blocks, so points
//! are stored as canonical representatives: the lexicographically least
//! vector over all `k!` relabelings. Enumeration walks restricted-growth
//! strings (first-occurrence block labeling) instead of all `k^n` maps, and
//! switches to block-size compositions for ground-permutation-symmetric
//! functions, which is what makes `n = 64` feasible.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::setfn::SetFunction;
use crate::subset::PermTables;
use crate::value::Value;

/// Cap on `k` for orbit operations (canonical forms, orbit distances).
pub const ORBIT_K_CAP: usize = 6;

/// Default enumeration budget: the naive map count `k^n` (or the number of
/// block-size partitions on the symmetric path) must not exceed this.
pub const DEFAULT_ENUM_BUDGET: u64 = 10_000_000;

/// A single quotient value vector in `R^(2^k)`, indexed by subsets of `[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientVector<V> {
    k: usize,
    coords: Vec<V>,
}

impl<V: Value> QuotientVector<V> {
    pub fn new(k: usize, coords: Vec<V>) -> Result<Self> {
        if coords.len() != 1usize << k {
            return Err(Error::InvalidInput(format!(
                "quotient vector has {} coordinates, expected {}",
                coords.len(),
                1usize << k
            )));
        }
        if !coords[0].is_zero() {
            return Err(Error::InvalidInput(
                "quotient vectors satisfy coords[empty] = 0".into(),
            ));
        }
        Ok(QuotientVector { k, coords })
    }

    /// The quotient of `f` by `partition`, as a vector.
    pub fn from_quotient(f: &SetFunction<V>, partition: &Partition) -> Result<Self> {
        let g = f.quotient(partition)?;
        Ok(Self::from_setfunction(&g))
    }

    /// View a set function on `[k]` as a quotient vector.
    pub fn from_setfunction(g: &SetFunction<V>) -> Self {
        let k = g.ground_size();
        let coords = (0..1u64 << k).map(|m| g.evaluate(m).unwrap()).collect();
        QuotientVector { k, coords }
    }

    /// View the vector as a set function on `[k]`.
    pub fn to_setfunction(&self) -> SetFunction<V> {
        SetFunction::from_values(self.k, self.coords.clone()).expect("valid vector")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coords(&self) -> &[V] {
        &self.coords
    }

    pub fn get(&self, mask: u64) -> &V {
        &self.coords[mask as usize]
    }

    pub fn to_f64_coords(&self) -> Vec<f64> {
        self.coords.iter().map(|v| v.to_f64_lossy()).collect()
    }

    /// Canonical representative: lexicographic minimum over all `k!`
    /// relabelings, after snapping inexact coordinates.
    pub fn canonicalize(&self) -> QuotientVector<V> {
        let tables = PermTables::new(self.k);
        let snapped: Vec<V> = self.coords.iter().map(|v| v.snapped()).collect();
        QuotientVector {
            k: self.k,
            coords: canonical_coords(&snapped, &tables),
        }
    }
}

/// Lexicographically least relabeling of `coords` (already snapped).
fn canonical_coords<V: Value>(coords: &[V], tables: &PermTables) -> Vec<V> {
    let mut best: Option<Vec<V>> = None;
    for table in tables.tables() {
        let candidate_better = match &best {
            None => true,
            Some(best) => {
                let mut verdict = false;
                for (idx, b) in best.iter().enumerate() {
                    match coords[table[idx] as usize].total_cmp_value(b) {
                        Ordering::Less => {
                            verdict = true;
                            break;
                        }
                        Ordering::Greater => break,
                        Ordering::Equal => {}
                    }
                }
                verdict
            }
        };
        if candidate_better {
            best = Some(table.iter().map(|&old| coords[old as usize].clone()).collect());
        }
    }
    best.expect("at least the identity permutation")
}

fn lex_cmp<V: Value>(a: &[V], b: &[V]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp_value(y) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// A deduplicated, permutation-invariant set of quotient vectors, stored as
/// sorted canonical representatives.
#[derive(Debug, Clone)]
pub struct QuotientSet<V> {
    k: usize,
    points: Vec<QuotientVector<V>>,
    orbit_expanded: bool,
}

impl<V: Value> QuotientSet<V> {
    /// Canonicalize, deduplicate and sort the given vectors.
    pub fn from_vectors(k: usize, vectors: Vec<QuotientVector<V>>) -> Result<Self> {
        if k > ORBIT_K_CAP {
            return Err(Error::GroundTooLarge {
                requested: k,
                cap: ORBIT_K_CAP,
                what: "quotient set orbit operations",
            });
        }
        let tables = PermTables::new(k);
        let mut canon: BTreeMap<LexKey<V>, ()> = BTreeMap::new();
        for v in vectors {
            if v.k() != k {
                return Err(Error::KMismatch { left: k, right: v.k() });
            }
            let snapped: Vec<V> = v.coords.iter().map(|x| x.snapped()).collect();
            canon.insert(LexKey(canonical_coords(&snapped, &tables)), ());
        }
        Ok(QuotientSet {
            k,
            points: canon
                .into_keys()
                .map(|LexKey(coords)| QuotientVector { k, coords })
                .collect(),
            orbit_expanded: false,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Whether the stored points are a full orbit expansion rather than
    /// canonical representatives.
    pub fn is_orbit_expanded(&self) -> bool {
        self.orbit_expanded
    }

    pub fn points(&self) -> &[QuotientVector<V>] {
        &self.points
    }

    /// All `k!` relabelings of every stored point, deduplicated.
    pub fn expand_orbits(&self) -> QuotientSet<V> {
        let tables = PermTables::new(self.k);
        let mut seen: BTreeMap<LexKey<V>, ()> = BTreeMap::new();
        for p in &self.points {
            for table in tables.tables() {
                let coords: Vec<V> = table
                    .iter()
                    .map(|&old| p.coords[old as usize].clone())
                    .collect();
                seen.insert(LexKey(coords), ());
            }
        }
        QuotientSet {
            k: self.k,
            points: seen
                .into_keys()
                .map(|LexKey(coords)| QuotientVector { k: self.k, coords })
                .collect(),
            orbit_expanded: true,
        }
    }

    /// Membership up to block relabeling. `tol = 0` means exact match (after
    /// grid snapping for inexact scalars); `tol > 0` accepts any point within
    /// Euclidean distance `tol` under the orbit-minimized metric.
    pub fn contains_vector(&self, v: &QuotientVector<V>, tol: f64) -> Result<bool> {
        if v.k() != self.k {
            return Err(Error::KMismatch {
                left: self.k,
                right: v.k(),
            });
        }
        if tol == 0.0 {
            let canon = v.canonicalize();
            return Ok(self
                .points
                .binary_search_by(|p| lex_cmp(&p.coords, &canon.coords))
                .is_ok());
        }
        let tables = PermTables::new(self.k);
        let q = v.to_f64_coords();
        let tol_sq = tol * tol;
        Ok(self.points.iter().any(|p| {
            orbit_min_dist_sq(&p.to_f64_coords(), &q, &tables) <= tol_sq
        }))
    }

    /// Exact containment of every point of `other` in `self`.
    pub fn contains_all(&self, other: &QuotientSet<V>) -> Result<bool> {
        for p in &other.points {
            if !self.contains_vector(p, 0.0)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact set equality (canonical representatives coincide).
    pub fn set_eq(&self, other: &QuotientSet<V>) -> bool {
        self.k == other.k
            && self.points.len() == other.points.len()
            && self
                .points
                .iter()
                .zip(&other.points)
                .all(|(a, b)| lex_cmp(&a.coords, &b.coords) == Ordering::Equal)
    }

    /// CSV form: header `k,m0,...,m{2^k-1}`, one row per canonical point.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k");
        for m in 0..1usize << self.k {
            out.push_str(&format!(",m{m}"));
        }
        out.push('\n');
        for p in &self.points {
            out.push_str(&self.k.to_string());
            for v in &p.coords {
                out.push(',');
                out.push_str(&v.render());
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_csv(text: &str) -> Result<QuotientSet<V>> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty CSV".into(),
        })?;
        let cols = header.split(',').count();
        let mut k_opt = None;
        let mut vectors = Vec::new();
        for (idx, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let lineno = idx + 1;
            let mut fields = line.split(',');
            let k: usize = fields
                .next()
                .and_then(|s| s.trim().parse().ok())
                .ok_or(Error::Parse {
                    line: lineno,
                    message: "missing k column".into(),
                })?;
            if *k_opt.get_or_insert(k) != k {
                return Err(Error::Parse {
                    line: lineno,
                    message: "inconsistent k across rows".into(),
                });
            }
            let coords = fields
                .map(|s| {
                    V::parse_value(s).ok_or(Error::Parse {
                        line: lineno,
                        message: format!("bad value `{}`", s.trim()),
                    })
                })
                .collect::<Result<Vec<V>>>()?;
            if coords.len() != 1 << k || cols != (1 << k) + 1 {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected {} value columns for k={k}", 1 << k),
                });
            }
            vectors.push(QuotientVector::new(k, coords)?);
        }
        let k = k_opt.ok_or(Error::Parse {
            line: 2,
            message: "no data rows".into(),
        })?;
        QuotientSet::from_vectors(k, vectors)
    }
}

/// Squared Euclidean distance minimized over relabelings of `p`.
pub(crate) fn orbit_min_dist_sq(p: &[f64], q: &[f64], tables: &PermTables) -> f64 {
    let mut best = f64::INFINITY;
    for table in tables.tables() {
        let mut acc = 0.0;
        for (idx, &qi) in q.iter().enumerate() {
            let d = p[table[idx] as usize] - qi;
            acc += d * d;
            if acc >= best {
                break;
            }
        }
        if acc < best {
            best = acc;
        }
    }
    best
}

struct LexKey<V>(Vec<V>);

impl<V: Value> PartialEq for LexKey<V> {
    fn eq(&self, other: &Self) -> bool {
        lex_cmp(&self.0, &other.0) == Ordering::Equal
    }
}
impl<V: Value> Eq for LexKey<V> {}
impl<V: Value> PartialOrd for LexKey<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<V: Value> Ord for LexKey<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(&self.0, &other.0)
    }
}

/// Options for quotient set enumeration.
#[derive(Debug, Clone)]
pub struct EnumOptions {
    /// Bound on the naive enumeration count (`k^n`, or the number of
    /// block-size partitions on the symmetric path).
    pub budget: u64,
    /// Split the enumeration over assignment prefixes across threads. The
    /// result is identical to the sequential run.
    pub parallel: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            budget: DEFAULT_ENUM_BUDGET,
            parallel: false,
        }
    }
}

/// The k-quotient set of `f` (all maps `[n] -> [k]`, non-surjective included).
pub fn quotient_set<V: Value>(f: &SetFunction<V>, k: usize) -> Result<QuotientSet<V>> {
    quotient_set_opts(f, k, &EnumOptions::default())
}

/// Like [`quotient_set`] but enumerating in parallel over assignment prefixes.
pub fn quotient_set_parallel<V: Value>(f: &SetFunction<V>, k: usize) -> Result<QuotientSet<V>> {
    quotient_set_opts(
        f,
        k,
        &EnumOptions {
            parallel: true,
            ..EnumOptions::default()
        },
    )
}

pub fn quotient_set_opts<V: Value>(
    f: &SetFunction<V>,
    k: usize,
    opts: &EnumOptions,
) -> Result<QuotientSet<V>> {
    let map = enumerate(f, k, opts, false)?;
    Ok(QuotientSet {
        k,
        points: map
            .into_iter()
            .map(|(LexKey(coords), _)| QuotientVector { k, coords })
            .collect(),
        orbit_expanded: false,
    })
}

/// Canonical points of `Q_k(f)` together with a witness partition producing
/// each point (the lexicographically least witnessing assignment).
pub fn quotient_points_with_witnesses<V: Value>(
    f: &SetFunction<V>,
    k: usize,
) -> Result<Vec<(QuotientVector<V>, Partition)>> {
    let map = enumerate(f, k, &EnumOptions::default(), true)?;
    map.into_iter()
        .map(|(LexKey(coords), witness)| {
            let assignment = witness.expect("witness collection was requested");
            Ok((
                QuotientVector { k, coords },
                Partition::new(k, assignment)?,
            ))
        })
        .collect()
}

/// The quotient profile `(Q_1(f), ..., Q_{k_max}(f))`.
pub fn profile<V: Value>(f: &SetFunction<V>, k_max: usize) -> Result<Vec<QuotientSet<V>>> {
    (1..=k_max).map(|k| quotient_set(f, k)).collect()
}

type CanonMap<V> = BTreeMap<LexKey<V>, Option<Vec<u8>>>;

fn enumerate<V: Value>(
    f: &SetFunction<V>,
    k: usize,
    opts: &EnumOptions,
    witnesses: bool,
) -> Result<CanonMap<V>> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if k > ORBIT_K_CAP {
        return Err(Error::GroundTooLarge {
            requested: k,
            cap: ORBIT_K_CAP,
            what: "quotient set orbit operations",
        });
    }
    let n = f.ground_size();
    if let Some(by_size) = f.by_size_values() {
        let count = partition_count(n, k);
        if count > opts.budget as u128 {
            return Err(Error::BudgetExceeded {
                what: format!("symmetric quotient enumeration with n={n}, k={k}"),
                required: count,
                bound: opts.budget,
            });
        }
        return Ok(enumerate_symmetric(by_size, n, k, witnesses));
    }
    let naive: u128 = (0..n).fold(1u128, |acc, _| acc.saturating_mul(k as u128));
    if naive > opts.budget as u128 {
        return Err(Error::BudgetExceeded {
            what: format!("quotient enumeration with n={n}, k={k} (k^n maps)"),
            required: naive,
            bound: opts.budget,
        });
    }
    let tables = PermTables::new(k);
    if !opts.parallel || n < 4 {
        let mut acc: CanonMap<V> = BTreeMap::new();
        for_each_rgs(&[], 0, n, k, &mut |assignment| {
            record(f, k, &tables, assignment, witnesses, &mut acc);
        });
        Ok(acc)
    } else {
        // split over restricted-growth prefixes; merging by set union keeps
        // the result independent of the split
        let depth = 3.min(n);
        let mut prefixes: Vec<(Vec<u8>, u8)> = Vec::new();
        for_each_rgs(&[], 0, depth, k, &mut |prefix| {
            let maxp = prefix.iter().copied().max().unwrap_or(0);
            prefixes.push((prefix.to_vec(), maxp));
        });
        let merged = prefixes
            .into_par_iter()
            .map(|(prefix, maxp)| {
                let mut acc: CanonMap<V> = BTreeMap::new();
                for_each_rgs(&prefix, maxp, n, k, &mut |assignment| {
                    record(f, k, &tables, assignment, witnesses, &mut acc);
                });
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (key, wit) in b {
                    merge_witness(&mut a, key, wit);
                }
                a
            });
        Ok(merged)
    }
}

fn record<V: Value>(
    f: &SetFunction<V>,
    k: usize,
    tables: &PermTables,
    assignment: &[u8],
    witnesses: bool,
    acc: &mut CanonMap<V>,
) {
    let mut block_masks = [0u64; ORBIT_K_CAP];
    for (e, &b) in assignment.iter().enumerate() {
        block_masks[b as usize] |= 1u64 << e;
    }
    let size = 1usize << k;
    let mut union = vec![0u64; size];
    let mut coords = Vec::with_capacity(size);
    coords.push(V::zero());
    for a in 1..size {
        let low = a.trailing_zeros() as usize;
        union[a] = union[a & (a - 1)] | block_masks[low];
        coords.push(f.value_at(union[a]).snapped());
    }
    let key = LexKey(canonical_coords(&coords, tables));
    let wit = witnesses.then(|| assignment.to_vec());
    merge_witness(acc, key, wit);
}

fn merge_witness<V: Value>(acc: &mut CanonMap<V>, key: LexKey<V>, wit: Option<Vec<u8>>) {
    use std::collections::btree_map::Entry;
    match acc.entry(key) {
        Entry::Vacant(e) => {
            e.insert(wit);
        }
        Entry::Occupied(mut e) => {
            // keep the lexicographically least witness for determinism
            if let (Some(new), Some(old)) = (&wit, e.get()) {
                if new < old {
                    e.insert(wit);
                }
            }
        }
    }
}

fn enumerate_symmetric<V: Value>(
    by_size: &[V],
    n: usize,
    k: usize,
    witnesses: bool,
) -> CanonMap<V> {
    let tables = PermTables::new(k);
    let mut acc: CanonMap<V> = BTreeMap::new();
    let mut sizes = vec![0usize; k];
    descend_partitions(n, k, 0, n, &mut sizes, &mut |sizes| {
        let dim = 1usize << k;
        let mut sum = vec![0usize; dim];
        let mut coords = Vec::with_capacity(dim);
        coords.push(V::zero());
        for a in 1..dim {
            let low = a.trailing_zeros() as usize;
            sum[a] = sum[a & (a - 1)] + sizes[low];
            coords.push(by_size[sum[a]].clone().snapped());
        }
        let key = LexKey(canonical_coords(&coords, &tables));
        let wit = witnesses.then(|| {
            // contiguous blocks of the given sizes
            let mut assignment = Vec::with_capacity(n);
            for (b, &s) in sizes.iter().enumerate() {
                assignment.extend(std::iter::repeat(b as u8).take(s));
            }
            assignment
        });
        merge_witness(&mut acc, key, wit);
    });
    acc
}

/// Visit every nonincreasing k-tuple of nonnegative sizes summing to n.
fn descend_partitions(
    remaining: usize,
    slots: usize,
    idx: usize,
    max_part: usize,
    sizes: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if idx == slots {
        if remaining == 0 {
            visit(sizes);
        }
        return;
    }
    let slots_left = slots - idx;
    let hi = remaining.min(max_part);
    // need part * slots_left >= remaining for the tail to absorb the rest
    let lo = remaining.div_ceil(slots_left);
    for part in (lo..=hi).rev() {
        sizes[idx] = part;
        descend_partitions(remaining - part, slots, idx + 1, part, sizes, visit);
    }
    sizes[idx] = 0;
}

/// Number of partitions of `n` into at most `k` parts.
fn partition_count(n: usize, k: usize) -> u128 {
    // p(n, <= k) via the standard DP
    let mut dp = vec![0u128; n + 1];
    dp[0] = 1;
    for part in 1..=k.min(n.max(1)) {
        for total in part..=n {
            dp[total] = dp[total].saturating_add(dp[total - part]);
        }
    }
    dp[n]
}

/// Visit every restricted-growth completion of `prefix` to length `n` with
/// labels below `k` (first-occurrence block labeling).
fn for_each_rgs(prefix: &[u8], prefix_max: u8, n: usize, k: usize, visit: &mut impl FnMut(&[u8])) {
    debug_assert!(prefix.len() <= n);
    if n == 0 {
        visit(&[]);
        return;
    }
    if prefix.len() == n {
        visit(prefix);
        return;
    }
    let start = prefix.len();
    let mut a = prefix.to_vec();
    a.resize(n, 0);
    let mut maxp = vec![0u8; n];
    let recompute = |a: &[u8], maxp: &mut [u8], from: usize| {
        for j in from..n {
            maxp[j] = if j == 0 { a[0] } else { maxp[j - 1].max(a[j]) };
        }
    };
    // prefix positions never change; seed their running maxima
    for j in 0..start {
        maxp[j] = if j == 0 { a[0] } else { maxp[j - 1].max(a[j]) };
    }
    debug_assert!(start == 0 || maxp[start - 1] == prefix_max);
    recompute(&a, &mut maxp, start);
    loop {
        visit(&a);
        // rightmost position (after the prefix) that can still grow
        let mut i = n;
        loop {
            if i == start {
                return;
            }
            i -= 1;
            let limit = if i == 0 {
                0
            } else {
                (maxp[i - 1] + 1).min(k as u8 - 1)
            };
            if a[i] < limit {
                a[i] += 1;
                break;
            }
        }
        for x in a.iter_mut().take(n).skip(i + 1) {
            *x = 0;
        }
        recompute(&a, &mut maxp, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::Rat;

    fn rho(n: usize, r: usize) -> SetFunction<Rat> {
        let values = (0..1u64 << n)
            .map(|m| Rat::new((m.count_ones() as usize).min(r) as i128, n as i128))
            .collect();
        SetFunction::from_values(n, values).unwrap()
    }

    fn rvec(k: usize, coords: &[(i128, i128)]) -> QuotientVector<Rat> {
        QuotientVector::new(k, coords.iter().map(|&(n, d)| Rat::new(n, d)).collect()).unwrap()
    }

    #[test]
    fn rgs_counts_match_stirling_sums() {
        let mut count = 0usize;
        for_each_rgs(&[], 0, 3, 3, &mut |_| count += 1);
        assert_eq!(count, 5); // Bell(3)
        count = 0;
        for_each_rgs(&[], 0, 3, 2, &mut |_| count += 1);
        assert_eq!(count, 4); // S(3,1) + S(3,2)
        count = 0;
        for_each_rgs(&[], 0, 4, 2, &mut |_| count += 1);
        assert_eq!(count, 8); // 1 + 7
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partition_count(4, 2), 3); // 4, 3+1, 2+2
        assert_eq!(partition_count(64, 2), 33);
        assert_eq!(partition_count(6, 6), 11); // p(6)
    }

    #[test]
    fn quotient_set_of_rho21() {
        let qs = quotient_set(&rho(2, 1), 2).unwrap();
        assert_eq!(qs.len(), 2);
        let expected = [
            rvec(2, &[(0, 1), (0, 1), (1, 2), (1, 2)]),
            rvec(2, &[(0, 1), (1, 2), (1, 2), (1, 2)]),
        ];
        for e in &expected {
            assert!(qs.contains_vector(e, 0.0).unwrap());
        }
    }

    #[test]
    fn quotient_set_k1_is_a_single_point() {
        let qs = quotient_set(&rho(4, 2), 1).unwrap();
        assert_eq!(qs.len(), 1);
        assert_eq!(qs.points()[0].coords()[1], Rat::new(1, 2));
    }

    #[test]
    fn quotient_set_of_rho42_has_three_points() {
        // block sizes 0..4 give three distinct canonical vectors
        let qs = quotient_set(&rho(4, 2), 2).unwrap();
        assert_eq!(qs.len(), 3);
        for e in [
            rvec(2, &[(0, 1), (0, 1), (1, 2), (1, 2)]),
            rvec(2, &[(0, 1), (1, 4), (1, 2), (1, 2)]),
            rvec(2, &[(0, 1), (1, 2), (1, 2), (1, 2)]),
        ] {
            assert!(qs.contains_vector(&e, 0.0).unwrap());
        }
    }

    #[test]
    fn ideal_quotients_are_indicators() {
        let f = crate::setfn::ideal_setfunction::<Rat>(3, &[0b000, 0b001, 0b010, 0b011]).unwrap();
        let qs = quotient_set(&f, 2).unwrap();
        for p in qs.points() {
            let a_mask: u64 = (0..2)
                .filter(|&i| *p.get(1 << i) == Rat::new(1, 1))
                .map(|i| 1u64 << i)
                .sum();
            for x in 0..4u64 {
                let expect = if a_mask & x != 0 {
                    Rat::new(1, 1)
                } else {
                    Rat::new(0, 1)
                };
                assert_eq!(*p.get(x), expect);
            }
        }
    }

    #[test]
    fn contains_vector_examples() {
        let qs = quotient_set(&rho(2, 1), 2).unwrap();
        let stored = qs.points()[0].clone();
        assert!(qs.contains_vector(&stored, 0.0).unwrap());
        // transposed relabeling of a stored point is still contained
        let swapped = QuotientVector::new(
            2,
            vec![
                stored.coords()[0].clone(),
                stored.coords()[2].clone(),
                stored.coords()[1].clone(),
                stored.coords()[3].clone(),
            ],
        )
        .unwrap();
        assert!(qs.contains_vector(&swapped, 0.0).unwrap());
        let absent = rvec(2, &[(0, 1), (1, 4), (1, 4), (1, 2)]);
        assert!(!qs.contains_vector(&absent, 0.0).unwrap());
        // dimension mismatch
        let wrong = rvec(1, &[(0, 1), (1, 2)]);
        assert!(qs.contains_vector(&wrong, 0.0).is_err());
    }

    #[test]
    fn profile_is_quotient_closed() {
        let f = rho(4, 2);
        let p = Partition::new(2, vec![0, 0, 1, 1]).unwrap();
        let g = f.quotient(&p).unwrap();
        for k in 1..=3 {
            let qf = quotient_set(&f, k).unwrap();
            let qg = quotient_set(&g, k).unwrap();
            assert!(qf.contains_all(&qg).unwrap());
        }
    }

    #[test]
    fn symmetric_fast_path_matches_dense_enumeration() {
        let by_size: Vec<Rat> = (0..=6).map(|s| Rat::new(s.min(2), 6)).collect();
        let sym = SetFunction::symmetric_from_sizes(6, by_size).unwrap();
        let dense = sym.to_table().unwrap();
        for k in 1..=3 {
            let qs = quotient_set(&sym, k).unwrap();
            let qd = quotient_set(&dense, k).unwrap();
            assert!(qs.set_eq(&qd));
        }
    }

    #[test]
    fn symmetric_point_count_bound() {
        // |Q_k| of a symmetric function is at most the number of partitions
        // of n into at most k parts
        for (n, r, k) in [(6, 3, 2), (8, 4, 3), (12, 5, 3)] {
            let by_size: Vec<Rat> = (0..=n).map(|s| Rat::new(s.min(r), n as i128)).collect();
            let sym = SetFunction::symmetric_from_sizes(n as usize, by_size).unwrap();
            let qs = quotient_set(&sym, k).unwrap();
            assert!(qs.len() as u128 <= partition_count(n as usize, k));
        }
    }

    #[test]
    fn parallel_enumeration_is_identical() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut values: Vec<Rat> = (0..1u64 << 7)
            .map(|_| Rat::new(rng.gen_range(0..=8), 8))
            .collect();
        values[0] = Rat::new(0, 1);
        let f = SetFunction::from_values(7, values).unwrap();
        let seq = quotient_set(&f, 3).unwrap();
        let par = quotient_set_parallel(&f, 3).unwrap();
        assert!(seq.set_eq(&par));
    }

    #[test]
    fn witnesses_reproduce_their_points() {
        let f = rho(4, 2);
        for (point, witness) in quotient_points_with_witnesses(&f, 2).unwrap() {
            let v = QuotientVector::from_quotient(&f, &witness).unwrap();
            assert_eq!(v.canonicalize().coords(), point.coords());
        }
    }

    #[test]
    fn budget_error_names_the_bound() {
        let f = rho(8, 4);
        let err = quotient_set_opts(
            &f,
            3,
            &EnumOptions {
                budget: 10,
                parallel: false,
            },
        )
        .unwrap_err();
        match err {
            Error::BudgetExceeded { required, bound, .. } => {
                assert_eq!(required, 6561); // 3^8
                assert_eq!(bound, 10);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn csv_roundtrip() {
        let qs = quotient_set(&rho(4, 2), 2).unwrap();
        let parsed = QuotientSet::<Rat>::parse_csv(&qs.to_csv()).unwrap();
        assert!(qs.set_eq(&parsed));
    }
}
