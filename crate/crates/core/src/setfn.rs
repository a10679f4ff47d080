//! Finite set functions with exact value tables.
//!
//! A set function assigns a scalar to every subset of `[n]`, with the fixed
//! normalization `f(empty) = 0`. Two representations are supported: a dense
//! table over all `2^n` subsets (`n <= 24`), and a by-cardinality table for
//! functions invariant under all ground permutations (`n <= 64`), which is
//! what makes the large-`n` convergence experiments feasible.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::subset::{elements, full_mask};
use crate::value::Value;

/// Cap on the ground size of densely tabulated set functions.
pub const TABLE_GROUND_CAP: usize = 24;
/// Cap on the ground size of symmetric (by-cardinality) set functions.
pub const SYMMETRIC_GROUND_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq)]
enum Repr<V> {
    /// `values[mask]` for every subset mask; length `2^n`.
    Table(Vec<V>),
    /// `by_size[|X|]`; length `n + 1`. Marks the function ground-symmetric.
    BySize(Vec<V>),
}

/// A set function on subsets of `[n]` with `f(empty) = 0`.
#[derive(Debug, Clone)]
pub struct SetFunction<V> {
    ground_size: usize,
    repr: Repr<V>,
}

impl<V: Value> SetFunction<V> {
    /// Build from a dense value table of length `2^n`.
    pub fn from_values(ground_size: usize, values: Vec<V>) -> Result<Self> {
        if ground_size > TABLE_GROUND_CAP {
            return Err(Error::GroundTooLarge {
                requested: ground_size,
                cap: TABLE_GROUND_CAP,
                what: "dense set function table",
            });
        }
        if values.len() != 1usize << ground_size {
            return Err(Error::InvalidInput(format!(
                "value table has length {}, expected {}",
                values.len(),
                1usize << ground_size
            )));
        }
        if !values[0].is_zero() {
            return Err(Error::InvalidInput(
                "set functions are normalized to f(empty) = 0".into(),
            ));
        }
        Ok(SetFunction {
            ground_size,
            repr: Repr::Table(values),
        })
    }

    /// Build a ground-permutation-symmetric function from its by-cardinality
    /// values (`by_size[s]` is the value on every `s`-subset).
    pub fn symmetric_from_sizes(ground_size: usize, by_size: Vec<V>) -> Result<Self> {
        if ground_size > SYMMETRIC_GROUND_CAP {
            return Err(Error::GroundTooLarge {
                requested: ground_size,
                cap: SYMMETRIC_GROUND_CAP,
                what: "symmetric set function",
            });
        }
        if by_size.len() != ground_size + 1 {
            return Err(Error::InvalidInput(format!(
                "by-size table has length {}, expected {}",
                by_size.len(),
                ground_size + 1
            )));
        }
        if !by_size[0].is_zero() {
            return Err(Error::InvalidInput(
                "set functions are normalized to f(empty) = 0".into(),
            ));
        }
        Ok(SetFunction {
            ground_size,
            repr: Repr::BySize(by_size),
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// Whether the function is stored in the symmetric (by-cardinality)
    /// representation. Set at construction by the symmetric constructors.
    pub fn is_symmetric(&self) -> bool {
        matches!(self.repr, Repr::BySize(_))
    }

    pub fn full_mask(&self) -> u64 {
        full_mask(self.ground_size)
    }

    /// Value on the subset given by `mask`.
    pub fn evaluate(&self, mask: u64) -> Result<V> {
        if self.ground_size < 64 && mask > self.full_mask() {
            return Err(Error::MaskOutOfRange {
                mask,
                ground: self.ground_size,
            });
        }
        Ok(self.value_at(mask))
    }

    /// Value lookup without the range check; `mask` must be in range.
    pub(crate) fn value_at(&self, mask: u64) -> V {
        match &self.repr {
            Repr::Table(values) => values[mask as usize].clone(),
            Repr::BySize(by_size) => by_size[mask.count_ones() as usize].clone(),
        }
    }

    /// Value on the full ground set.
    pub fn total(&self) -> V {
        self.value_at(self.full_mask())
    }

    /// By-cardinality values if symmetric.
    pub fn by_size_values(&self) -> Option<&[V]> {
        match &self.repr {
            Repr::BySize(v) => Some(v),
            Repr::Table(_) => None,
        }
    }

    /// Expand to the dense representation (needs `n <= 24`).
    pub fn to_table(&self) -> Result<SetFunction<V>> {
        match &self.repr {
            Repr::Table(_) => Ok(self.clone()),
            Repr::BySize(by_size) => {
                if self.ground_size > TABLE_GROUND_CAP {
                    return Err(Error::GroundTooLarge {
                        requested: self.ground_size,
                        cap: TABLE_GROUND_CAP,
                        what: "dense set function table",
                    });
                }
                let values = (0..1u64 << self.ground_size)
                    .map(|m| by_size[m.count_ones() as usize].clone())
                    .collect();
                SetFunction::from_values(self.ground_size, values)
            }
        }
    }

    /// Smallest and largest value attained.
    pub fn value_bounds(&self) -> (V, V) {
        let values: &[V] = match &self.repr {
            Repr::Table(v) => v,
            Repr::BySize(v) => v,
        };
        let mut lo = values[0].clone();
        let mut hi = values[0].clone();
        for v in &values[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        (lo, hi)
    }

    /// Pointwise equality as functions (representation-agnostic).
    pub fn function_eq(&self, other: &SetFunction<V>) -> bool {
        if self.ground_size != other.ground_size {
            return false;
        }
        match (&self.repr, &other.repr) {
            (Repr::BySize(a), Repr::BySize(b)) => a == b,
            _ => {
                if self.ground_size > TABLE_GROUND_CAP {
                    // mixed representations only exist up to the table cap
                    return false;
                }
                (0..1u64 << self.ground_size).all(|m| self.value_at(m) == other.value_at(m))
            }
        }
    }

    /// Submodularity via the local exchange characterization:
    /// `f(S+i) + f(S+j) >= f(S) + f(S+i+j)` for all `S` and `i != j` outside `S`.
    pub fn is_submodular(&self) -> bool {
        match &self.repr {
            Repr::BySize(by_size) => {
                // exchange reduces to concavity in the cardinality
                (0..self.ground_size.saturating_sub(1)).all(|s| {
                    by_size[s + 1].clone() + by_size[s + 1].clone()
                        >= by_size[s].clone() + by_size[s + 2].clone()
                })
            }
            Repr::Table(values) => {
                let n = self.ground_size;
                for mask in 0..1u64 << n {
                    for i in 0..n {
                        if mask & (1 << i) != 0 {
                            continue;
                        }
                        for j in (i + 1)..n {
                            if mask & (1 << j) != 0 {
                                continue;
                            }
                            let si = (mask | 1 << i) as usize;
                            let sj = (mask | 1 << j) as usize;
                            let sij = (mask | 1 << i | 1 << j) as usize;
                            if values[si].clone() + values[sj].clone()
                                < values[mask as usize].clone() + values[sij].clone()
                            {
                                return false;
                            }
                        }
                    }
                }
                true
            }
        }
    }

    /// Monotonicity: `f(S) <= f(S + i)` for all `S` and `i` outside `S`.
    pub fn is_increasing(&self) -> bool {
        match &self.repr {
            Repr::BySize(by_size) => (0..self.ground_size).all(|s| by_size[s] <= by_size[s + 1]),
            Repr::Table(values) => {
                let n = self.ground_size;
                (0..1u64 << n).all(|mask| {
                    (0..n).all(|i| {
                        mask & (1 << i) != 0
                            || values[mask as usize] <= values[(mask | 1 << i) as usize]
                    })
                })
            }
        }
    }

    /// The quotient by a partition: `g(A) = f(union of the blocks in A)`.
    pub fn quotient(&self, partition: &Partition) -> Result<SetFunction<V>> {
        if partition.ground_size() != self.ground_size {
            return Err(Error::GroundSizeMismatch {
                left: self.ground_size,
                right: partition.ground_size(),
            });
        }
        let k = partition.num_blocks();
        if let Repr::BySize(by_size) = &self.repr {
            let sizes = partition.block_sizes();
            if k <= SYMMETRIC_GROUND_CAP && sizes.iter().all(|&s| s == sizes[0]) {
                // equal blocks keep the quotient symmetric
                let s = sizes[0];
                let out = (0..=k).map(|j| by_size[j * s].clone()).collect();
                return SetFunction::symmetric_from_sizes(k, out);
            }
            if k > TABLE_GROUND_CAP {
                return Err(Error::GroundTooLarge {
                    requested: k,
                    cap: TABLE_GROUND_CAP,
                    what: "quotient with unequal blocks",
                });
            }
            let mut union_size = vec![0usize; 1 << k];
            let mut values = Vec::with_capacity(1 << k);
            values.push(V::zero());
            for a in 1usize..1 << k {
                let low = a.trailing_zeros() as usize;
                union_size[a] = union_size[a & (a - 1)] + sizes[low];
                values.push(by_size[union_size[a]].clone());
            }
            return SetFunction::from_values(k, values);
        }
        if k > TABLE_GROUND_CAP {
            return Err(Error::GroundTooLarge {
                requested: k,
                cap: TABLE_GROUND_CAP,
                what: "quotient",
            });
        }
        let masks = partition.block_masks();
        let mut union = vec![0u64; 1 << k];
        let mut values = Vec::with_capacity(1 << k);
        values.push(V::zero());
        for a in 1usize..1 << k {
            let low = a.trailing_zeros() as usize;
            union[a] = union[a & (a - 1)] | masks[low];
            values.push(self.value_at(union[a]));
        }
        SetFunction::from_values(k, values)
    }

    /// Quotient by the iterated common refinement of `partitions`, together
    /// with, for each input partition, the map sending refined blocks onto
    /// its blocks. The empty list yields the one-block quotient.
    pub fn common_lift(&self, partitions: &[Partition]) -> Result<(SetFunction<V>, Vec<Vec<u8>>)> {
        let mut refinement = Partition::single_block(self.ground_size);
        for p in partitions {
            if p.ground_size() != self.ground_size {
                return Err(Error::GroundSizeMismatch {
                    left: self.ground_size,
                    right: p.ground_size(),
                });
            }
            refinement = refinement.common_refinement(p)?;
        }
        let lift = self.quotient(&refinement)?;
        let maps = partitions
            .iter()
            .map(|p| refinement.block_map_onto(p))
            .collect::<Result<Vec<_>>>()?;
        Ok((lift, maps))
    }

    /// Checks `f(union B_i) - f(union A_i) <= sum_i (f(B_i) - f(A_i))` for
    /// nested pairs `A_i <= B_i`. Requires `f` increasing and submodular.
    pub fn choquet_inequality_check(&self, pairs: &[(u64, u64)]) -> Result<bool> {
        for &(a, b) in pairs {
            if self.ground_size < 64 && (a > self.full_mask() || b > self.full_mask()) {
                return Err(Error::MaskOutOfRange {
                    mask: a.max(b),
                    ground: self.ground_size,
                });
            }
            if a & !b != 0 {
                return Err(Error::Precondition(format!(
                    "pair ({a:#x}, {b:#x}) is not nested"
                )));
            }
        }
        if !self.is_increasing() {
            return Err(Error::Precondition(
                "the set function is not increasing".into(),
            ));
        }
        if !self.is_submodular() {
            return Err(Error::Precondition(
                "the set function is not submodular".into(),
            ));
        }
        let union_a = pairs.iter().fold(0u64, |m, &(a, _)| m | a);
        let union_b = pairs.iter().fold(0u64, |m, &(_, b)| m | b);
        let lhs = self.value_at(union_b) - self.value_at(union_a);
        let mut rhs = V::zero();
        for &(a, b) in pairs {
            rhs = rhs + (self.value_at(b) - self.value_at(a));
        }
        Ok(lhs <= rhs)
    }

    /// Text form: `n=<int>` then one `<mask> <value>` line per subset.
    pub fn to_text(&self) -> Result<String> {
        let table = self.to_table()?;
        let values = match &table.repr {
            Repr::Table(v) => v,
            Repr::BySize(_) => unreachable!(),
        };
        let mut out = format!("n={}\n", self.ground_size);
        for (mask, v) in values.iter().enumerate() {
            out.push_str(&format!("{} {}\n", mask, v.render()));
        }
        Ok(out)
    }

    pub fn parse_text(text: &str) -> Result<SetFunction<V>> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty set function file".into(),
        })?;
        let n: usize = header
            .trim()
            .strip_prefix("n=")
            .and_then(|s| s.trim().parse().ok())
            .ok_or(Error::Parse {
                line: 1,
                message: format!("expected `n=<int>`, got `{}`", header.trim()),
            })?;
        if n > TABLE_GROUND_CAP {
            return Err(Error::GroundTooLarge {
                requested: n,
                cap: TABLE_GROUND_CAP,
                what: "dense set function table",
            });
        }
        let size = 1usize << n;
        let mut values: Vec<Option<V>> = vec![None; size];
        let mut seen = 0usize;
        for (idx, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let lineno = idx + 1;
            let (mask_tok, val_tok) = line.split_once(char::is_whitespace).ok_or(Error::Parse {
                line: lineno,
                message: format!("expected `<mask> <value>`, got `{line}`"),
            })?;
            let mask: usize = mask_tok.parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("bad subset mask `{mask_tok}`"),
            })?;
            if mask >= size {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("mask {mask} out of range for n={n}"),
                });
            }
            let value = V::parse_value(val_tok).ok_or(Error::Parse {
                line: lineno,
                message: format!("bad value `{}`", val_tok.trim()),
            })?;
            if values[mask].is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("duplicate entry for mask {mask}"),
                });
            }
            values[mask] = Some(value);
            seen += 1;
        }
        if seen != size {
            return Err(Error::Parse {
                line: seen + 2,
                message: format!("expected {size} entries, found {seen}"),
            });
        }
        let values: Vec<V> = values.into_iter().map(|v| v.unwrap()).collect();
        if !values[0].is_zero() {
            return Err(Error::Parse {
                line: 2,
                message: "f(empty) must be 0".into(),
            });
        }
        SetFunction::from_values(n, values)
    }
}

/// The 0-1 valued function `f(X) = 1 if X is outside the ideal, else 0`.
///
/// `ideal` is given as subset masks; it must contain the empty set and be
/// closed under taking subsets.
pub fn ideal_setfunction<V: Value>(n: usize, ideal: &[u64]) -> Result<SetFunction<V>> {
    if n > TABLE_GROUND_CAP {
        return Err(Error::GroundTooLarge {
            requested: n,
            cap: TABLE_GROUND_CAP,
            what: "ideal set function",
        });
    }
    let size = 1usize << n;
    let mut member = vec![false; size];
    for &m in ideal {
        if m >= size as u64 {
            return Err(Error::MaskOutOfRange { mask: m, ground: n });
        }
        member[m as usize] = true;
    }
    if !member[0] {
        return Err(Error::InvalidInput(
            "an ideal must contain the empty set".into(),
        ));
    }
    for m in 0..size {
        if !member[m] {
            continue;
        }
        for i in elements(m as u64) {
            if !member[m & !(1usize << i)] {
                return Err(Error::InvalidInput(format!(
                    "ideal is not downward closed: {:#x} is a member but {:#x} is not",
                    m,
                    m & !(1usize << i)
                )));
            }
        }
    }
    let values = member
        .iter()
        .map(|&inside| if inside { V::zero() } else { V::one() })
        .collect();
    SetFunction::from_values(n, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::Rat;

    pub(crate) fn rho(n: usize, r: usize) -> SetFunction<Rat> {
        // normalized uniform matroid rank, dense representation
        let values = (0..1u64 << n)
            .map(|m| Rat::new((m.count_ones() as usize).min(r) as i128, n as i128))
            .collect();
        SetFunction::from_values(n, values).unwrap()
    }

    fn cut_function(n: usize, edges: &[(usize, usize)]) -> SetFunction<Rat> {
        let values = (0..1u64 << n)
            .map(|m| {
                let crossing = edges
                    .iter()
                    .filter(|&&(u, v)| (m >> u & 1) != (m >> v & 1))
                    .count();
                Rat::new(crossing as i128, (n * n) as i128)
            })
            .collect();
        SetFunction::from_values(n, values).unwrap()
    }

    /// All-pairs submodularity straight from the definition; the slow oracle
    /// the exchange test is checked against.
    fn is_submodular_all_pairs(f: &SetFunction<Rat>) -> bool {
        let size = 1u64 << f.ground_size();
        for x in 0..size {
            for y in 0..size {
                if f.value_at(x) + f.value_at(y) < f.value_at(x & y) + f.value_at(x | y) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn evaluate_examples() {
        let f = rho(4, 2);
        assert_eq!(f.evaluate(0).unwrap(), Rat::new(0, 1));
        assert_eq!(f.evaluate(0b0111).unwrap(), Rat::new(2, 4));
        assert_eq!(f.evaluate(0b0001).unwrap(), Rat::new(1, 4));
        assert!(matches!(
            f.evaluate(0b10000),
            Err(Error::MaskOutOfRange { .. })
        ));
    }

    #[test]
    fn submodularity_examples() {
        assert!(rho(4, 2).is_submodular());
        let bad = SetFunction::from_values(
            2,
            vec![
                Rat::new(0, 1),
                Rat::new(0, 1),
                Rat::new(0, 1),
                Rat::new(1, 1),
            ],
        )
        .unwrap();
        assert!(!bad.is_submodular());
        // graph cut functions are submodular; cross-check the exchange test
        // against the all-pairs definition on small graphs
        let graphs: Vec<(usize, Vec<(usize, usize)>)> = vec![
            (3, vec![(0, 1), (1, 2)]),
            (4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]),
            (5, vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]),
            (6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]),
        ];
        for (n, edges) in graphs {
            let f = cut_function(n, &edges);
            assert!(f.is_submodular());
            assert!(is_submodular_all_pairs(&f));
        }
    }

    #[test]
    fn exchange_matches_all_pairs_definition() {
        // equivalence of the local test with the pairwise definition, n <= 5
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let mut values: Vec<Rat> = (0..1u64 << n)
                .map(|_| Rat::new(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
                .collect();
            values[0] = Rat::new(0, 1);
            let f = SetFunction::from_values(n, values).unwrap();
            assert_eq!(f.is_submodular(), is_submodular_all_pairs(&f));
        }
    }

    #[test]
    fn increasing_examples() {
        assert!(rho(4, 2).is_increasing());
        let zero = SetFunction::from_values(2, vec![Rat::new(0, 1); 4]).unwrap();
        assert!(zero.is_increasing());
        // path on 3 vertices: cut(V) = 0 < cut({endpoint}) = 1
        let path = cut_function(3, &[(0, 1), (1, 2)]);
        assert!(!path.is_increasing());
    }

    #[test]
    fn quotient_examples() {
        let f = rho(2, 1);
        let g = f.quotient(&Partition::identity(2)).unwrap();
        let half = Rat::new(1, 2);
        assert_eq!(g.value_at(0b00), Rat::new(0, 1));
        assert_eq!(g.value_at(0b01), half);
        assert_eq!(g.value_at(0b10), half);
        assert_eq!(g.value_at(0b11), half);

        let f = rho(4, 2);
        let one = f.quotient(&Partition::single_block(4)).unwrap();
        assert_eq!(one.ground_size(), 1);
        assert_eq!(one.value_at(0), Rat::new(0, 1));
        assert_eq!(one.value_at(1), f.total());

        let p = Partition::from_blocks(4, &[0b0011, 0b1100]).unwrap();
        let g = f.quotient(&p).unwrap();
        assert_eq!(g.value_at(0b01), half);
        assert_eq!(g.value_at(0b10), half);
        assert_eq!(g.value_at(0b11), half);
    }

    #[test]
    fn quotient_of_symmetric_repr_matches_table() {
        let by_size = (0..=6).map(|s| Rat::new(s.min(3), 6)).collect();
        let sym = SetFunction::symmetric_from_sizes(6, by_size).unwrap();
        let dense = sym.to_table().unwrap();
        let p = Partition::new(3, vec![0, 0, 1, 1, 1, 2]).unwrap();
        assert!(sym.quotient(&p).unwrap().function_eq(&dense.quotient(&p).unwrap()));
        // equal blocks keep the symmetric representation
        let q = Partition::new(3, vec![0, 0, 1, 1, 2, 2]).unwrap();
        let quo = sym.quotient(&q).unwrap();
        assert!(quo.is_symmetric());
        assert!(quo.function_eq(&dense.quotient(&q).unwrap()));
    }

    #[test]
    fn common_lift_examples() {
        let f = rho(4, 2);
        // single partition: lift is the quotient itself, identity block map
        let p = Partition::from_blocks(4, &[0b0011, 0b1100]).unwrap();
        let (lift, maps) = f.common_lift(std::slice::from_ref(&p)).unwrap();
        assert!(lift.function_eq(&f.quotient(&p).unwrap()));
        assert_eq!(maps, vec![vec![0, 1]]);

        // crossing pairs refine to singletons: the lift is f itself
        let p1 = Partition::from_blocks(4, &[0b0011, 0b1100]).unwrap();
        let p2 = Partition::from_blocks(4, &[0b0101, 0b1010]).unwrap();
        let (lift, maps) = f.common_lift(&[p1.clone(), p2.clone()]).unwrap();
        assert!(lift.function_eq(&f));
        // composing each block map reproduces the original quotients exactly
        for (p, map) in [(&p1, &maps[0]), (&p2, &maps[1])] {
            let push = Partition::new(p.num_blocks(), map.clone()).unwrap();
            assert!(lift.quotient(&push).unwrap().function_eq(&f.quotient(p).unwrap()));
        }

        // empty list: the one-block quotient
        let (lift, maps) = f.common_lift(&[]).unwrap();
        assert_eq!(lift.ground_size(), 1);
        assert_eq!(lift.value_at(1), f.total());
        assert!(maps.is_empty());
    }

    #[test]
    fn ideal_examples() {
        // ideal {empty} on [2]: f(X) = 1 for X nonempty
        let f = ideal_setfunction::<Rat>(2, &[0]).unwrap();
        assert_eq!(f.value_at(0), Rat::new(0, 1));
        for m in 1..4u64 {
            assert_eq!(f.value_at(m), Rat::new(1, 1));
        }

        // ideal = subsets of {1,2} on [3]: f(X) = 1(3 in X)
        let f = ideal_setfunction::<Rat>(3, &[0b000, 0b001, 0b010, 0b011]).unwrap();
        for m in 0..8u64 {
            let expect = if m & 0b100 != 0 {
                Rat::new(1, 1)
            } else {
                Rat::new(0, 1)
            };
            assert_eq!(f.value_at(m), expect);
        }
        assert!(f.is_increasing());
        assert!(f.is_submodular());

        // quotient by any 2-partition is some indicator psi_{2,A}
        for assignment in [[0u8, 0, 1], [0, 1, 0], [0, 1, 1]] {
            let p = Partition::new(2, assignment.to_vec()).unwrap();
            let g = f.quotient(&p).unwrap();
            let a_mask: u64 = (0..2)
                .filter(|&i| g.value_at(1 << i) == Rat::new(1, 1))
                .map(|i| 1 << i)
                .sum();
            for x in 0..4u64 {
                let expect = if a_mask & x != 0 {
                    Rat::new(1, 1)
                } else {
                    Rat::new(0, 1)
                };
                assert_eq!(g.value_at(x), expect);
            }
        }

        // non-downward-closed input is rejected
        assert!(ideal_setfunction::<Rat>(2, &[0, 0b11]).is_err());
        assert!(ideal_setfunction::<Rat>(2, &[0b01]).is_err());
    }

    #[test]
    fn choquet_examples() {
        let f = rho(4, 2);
        // single pair reduces to a triviality
        assert!(f.choquet_inequality_check(&[(0b0001, 0b0011)]).unwrap());
        // two disjoint nested pairs
        assert!(f
            .choquet_inequality_check(&[(0b0001, 0b0011), (0b0100, 0b1100)])
            .unwrap());
        // non-submodular input fails the precondition
        let bad = SetFunction::from_values(
            2,
            vec![
                Rat::new(0, 1),
                Rat::new(0, 1),
                Rat::new(0, 1),
                Rat::new(1, 1),
            ],
        )
        .unwrap();
        assert!(matches!(
            bad.choquet_inequality_check(&[(0, 1)]),
            Err(Error::Precondition(_))
        ));
        // non-nested pair fails
        assert!(matches!(
            f.choquet_inequality_check(&[(0b0011, 0b0001)]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn diminishing_returns_matches_exchange() {
        // the diminishing-returns reformulation as a cross-check only
        use crate::subset::submasks;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.gen_range(1..=5);
            let mut values: Vec<Rat> = (0..1u64 << n)
                .map(|_| Rat::new(rng.gen_range(-3..=3), rng.gen_range(1..=2)))
                .collect();
            values[0] = Rat::new(0, 1);
            let f = SetFunction::from_values(n, values).unwrap();
            let size = 1u64 << n;
            let mut dim_returns = true;
            'outer: for a in 0..size {
                for y in 0..size {
                    for x in submasks(y) {
                        if f.value_at(a | x) - f.value_at(x) < f.value_at(a | y) - f.value_at(y) {
                            dim_returns = false;
                            break 'outer;
                        }
                    }
                }
            }
            assert_eq!(f.is_submodular(), dim_returns);
        }
    }

    #[test]
    fn text_roundtrip_and_parse_errors() {
        let f = rho(3, 2);
        let text = f.to_text().unwrap();
        assert!(text.starts_with("n=3\n0 0/1\n"));
        let back = SetFunction::<Rat>::parse_text(&text).unwrap();
        assert!(back.function_eq(&f));

        let err = SetFunction::<Rat>::parse_text("n=1\n0 0/1\n1 oops\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = SetFunction::<Rat>::parse_text("n=1\n0 0/1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }
}
