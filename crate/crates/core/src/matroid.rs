//! Matroid rank oracles: uniform, sparse paving, graphic, and GF(2)-linear
//! matroids, with deletion/contraction minors, normalized rank functions,
//! and the quotient-based binary-matroid test cross-validated by a direct
//! excluded-minor search.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::setfn::SetFunction;
use crate::subset::{elements, full_mask, submasks};
use crate::value::Value;

/// Cap on the ground size of the brute-force excluded-minor search.
pub const BRUTEFORCE_GROUND_CAP: usize = 14;
/// Cap on exhaustive rank-axiom verification.
pub const AXIOM_CHECK_CAP: usize = 12;

/// A family of r-subsets of `[n]` with pairwise intersections of size at
/// most `r - 2`; drops those sets from rank `r` to `r - 1`.
#[derive(Debug, Clone)]
pub struct SparsePavingFamily {
    n: usize,
    r: u32,
    sets: Vec<u64>,
}

impl SparsePavingFamily {
    pub fn new(n: usize, r: u32, sets: Vec<u64>) -> Result<Self> {
        if r as usize > n {
            return Err(Error::InvalidInput(format!(
                "rank {r} exceeds ground size {n}"
            )));
        }
        let family = SparsePavingFamily { n, r, sets };
        family.validate()?;
        Ok(family)
    }

    fn validate(&self) -> Result<()> {
        if self.r == 0 && !self.sets.is_empty() {
            return Err(Error::InvalidInput(
                "a rank-0 paving family cannot have members".into(),
            ));
        }
        for &a in &self.sets {
            if self.n < 64 && a > full_mask(self.n) {
                return Err(Error::MaskOutOfRange {
                    mask: a,
                    ground: self.n,
                });
            }
            if a.count_ones() != self.r {
                return Err(Error::InvalidInput(format!(
                    "family member {a:#x} has size {}, expected {}",
                    a.count_ones(),
                    self.r
                )));
            }
        }
        for (i, &a) in self.sets.iter().enumerate() {
            for &b in &self.sets[i + 1..] {
                if a == b {
                    return Err(Error::InvalidInput(format!(
                        "family member {a:#x} listed twice"
                    )));
                }
                if (a & b).count_ones() + 2 > self.r {
                    return Err(Error::InvalidInput(format!(
                        "members {a:#x} and {b:#x} intersect in more than r-2 elements"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }
}

#[derive(Debug)]
enum RankKind {
    Uniform { n: usize, r: u32 },
    SparsePaving { r: u32, members: HashSet<u64> },
    Graphic { graph: Graph, table: Option<Vec<u8>> },
    Gf2 { columns: Vec<u32> },
}

impl RankKind {
    fn rank(&self, mask: u64) -> u32 {
        match self {
            RankKind::Uniform { r, .. } => mask.count_ones().min(*r),
            RankKind::SparsePaving { r, members } => {
                let size = mask.count_ones();
                if size + 1 <= *r {
                    size
                } else if members.contains(&mask) {
                    *r - 1
                } else {
                    *r
                }
            }
            RankKind::Graphic { graph, table } => match table {
                Some(t) => t[mask as usize] as u32,
                None => graph.forest_rank(mask),
            },
            RankKind::Gf2 { columns } => {
                let mut basis: Vec<u32> = Vec::new();
                let mut rank = 0u32;
                for i in elements(mask) {
                    let mut col = columns[i];
                    for &b in &basis {
                        let lead = 1u32 << (31 - b.leading_zeros());
                        if col & lead != 0 {
                            col ^= b;
                        }
                    }
                    if col != 0 {
                        basis.push(col);
                        rank += 1;
                    }
                }
                rank
            }
        }
    }
}

/// A matroid presented by its rank function. Deletion and contraction
/// produce views sharing the base oracle, so arbitrary minors are cheap.
#[derive(Debug, Clone)]
pub struct RankOracle {
    kind: Arc<(RankKind, usize)>, // (kind, base ground size)
    /// Current ground elements, as indices into the base ground.
    keep: Vec<u8>,
    /// Base-ground mask of contracted elements.
    contracted: u64,
    rank_of_contracted: u32,
}

impl RankOracle {
    fn fresh(kind: RankKind, base_ground: usize) -> RankOracle {
        RankOracle {
            kind: Arc::new((kind, base_ground)),
            keep: (0..base_ground as u8).collect(),
            contracted: 0,
            rank_of_contracted: 0,
        }
    }

    /// The uniform matroid: `rank(X) = min(|X|, r)`.
    pub fn uniform(n: usize, r: u32) -> Result<RankOracle> {
        if n > 64 {
            return Err(Error::GroundTooLarge {
                requested: n,
                cap: 64,
                what: "uniform matroid",
            });
        }
        if r as usize > n {
            return Err(Error::InvalidInput(format!(
                "uniform matroid rank {r} exceeds ground size {n}"
            )));
        }
        Ok(Self::fresh(RankKind::Uniform { n, r }, n))
    }

    /// The sparse paving matroid of a family: `|X|` below rank, `r - 1` on
    /// family members, `r` otherwise. Rank axioms are verified exhaustively
    /// at construction for small ground sets.
    pub fn sparse_paving(family: SparsePavingFamily) -> Result<RankOracle> {
        let n = family.n();
        let oracle = Self::fresh(
            RankKind::SparsePaving {
                r: family.r(),
                members: family.sets().iter().copied().collect(),
            },
            n,
        );
        if n <= 10 {
            oracle.verify_rank_axioms()?;
        }
        Ok(oracle)
    }

    /// The graphic matroid of a multigraph; ground set = edges.
    pub fn graphic(graph: Graph) -> Result<RankOracle> {
        let m = graph.edge_count();
        if m > 24 {
            return Err(Error::GroundTooLarge {
                requested: m,
                cap: 24,
                what: "graphic matroid",
            });
        }
        // memoize the whole subset lattice while it is small
        let table = (m <= 16).then(|| {
            (0..1u64 << m)
                .map(|mask| graph.forest_rank(mask) as u8)
                .collect()
        });
        Ok(Self::fresh(RankKind::Graphic { graph, table }, m))
    }

    /// The GF(2) linear matroid of the given columns (each a bitmask of at
    /// most 32 rows).
    pub fn gf2(columns: Vec<u32>) -> Result<RankOracle> {
        if columns.len() > 24 {
            return Err(Error::GroundTooLarge {
                requested: columns.len(),
                cap: 24,
                what: "GF(2) matroid",
            });
        }
        let n = columns.len();
        Ok(Self::fresh(RankKind::Gf2 { columns }, n))
    }

    pub fn ground_size(&self) -> usize {
        self.keep.len()
    }

    /// Rank of a subset of the current ground set.
    pub fn rank(&self, mask: u64) -> u32 {
        let mut base_mask = self.contracted;
        for i in elements(mask) {
            base_mask |= 1u64 << self.keep[i];
        }
        self.kind.0.rank(base_mask) - self.rank_of_contracted
    }

    /// Rank of the whole current ground set.
    pub fn rank_total(&self) -> u32 {
        self.rank(full_mask(self.ground_size()))
    }

    fn check_subset(&self, mask: u64) -> Result<()> {
        let n = self.ground_size();
        if n < 64 && mask > full_mask(n) {
            return Err(Error::MaskOutOfRange { mask, ground: n });
        }
        Ok(())
    }

    /// Delete the elements of `mask`: ranks of remaining subsets unchanged.
    pub fn delete(&self, mask: u64) -> Result<RankOracle> {
        self.check_subset(mask)?;
        let keep = self
            .keep
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 0)
            .map(|(_, &b)| b)
            .collect();
        Ok(RankOracle {
            kind: Arc::clone(&self.kind),
            keep,
            contracted: self.contracted,
            rank_of_contracted: self.rank_of_contracted,
        })
    }

    /// Contract the elements of `mask`: `rank'(X) = rank(X + mask) - rank(mask)`.
    pub fn contract(&self, mask: u64) -> Result<RankOracle> {
        self.check_subset(mask)?;
        let mut contracted = self.contracted;
        for i in elements(mask) {
            contracted |= 1u64 << self.keep[i];
        }
        let keep: Vec<u8> = self
            .keep
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 0)
            .map(|(_, &b)| b)
            .collect();
        let rank_of_contracted = self.kind.0.rank(contracted);
        Ok(RankOracle {
            kind: Arc::clone(&self.kind),
            keep,
            contracted,
            rank_of_contracted,
        })
    }

    /// Exhaustive check of the rank axioms (R1)-(R4).
    pub fn verify_rank_axioms(&self) -> Result<()> {
        let n = self.ground_size();
        if n > AXIOM_CHECK_CAP {
            return Err(Error::GroundTooLarge {
                requested: n,
                cap: AXIOM_CHECK_CAP,
                what: "exhaustive rank axiom verification",
            });
        }
        let size = 1u64 << n;
        let ranks: Vec<u32> = (0..size).map(|m| self.rank(m)).collect();
        if ranks[0] != 0 {
            return Err(Error::Precondition("(R1) rank(empty) != 0".into()));
        }
        for m in 0..size {
            if ranks[m as usize] > m.count_ones() {
                return Err(Error::Precondition(format!(
                    "(R3) rank({m:#x}) exceeds the set size"
                )));
            }
            for i in 0..n {
                if m >> i & 1 != 0 {
                    continue;
                }
                let mi = m | 1 << i;
                if ranks[m as usize] > ranks[mi as usize] {
                    return Err(Error::Precondition(format!(
                        "(R2) rank decreases from {m:#x} to {mi:#x}"
                    )));
                }
                for j in (i + 1)..n {
                    if m >> j & 1 != 0 {
                        continue;
                    }
                    let mj = m | 1 << j;
                    let mij = mi | 1 << j;
                    if ranks[mi as usize] + ranks[mj as usize]
                        < ranks[m as usize] + ranks[mij as usize]
                    {
                        return Err(Error::Precondition(format!(
                            "(R4) submodularity fails at {m:#x} with {i}, {j}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The normalized rank `rank(X) / n` as an exact set function. Pristine
    /// uniform matroids use the symmetric representation, which admits large
    /// ground sets.
    pub fn normalize<V: Value>(&self) -> Result<SetFunction<V>> {
        let n = self.ground_size();
        if let (RankKind::Uniform { r, .. }, true) =
            (&self.kind.0, self.contracted == 0 && self.is_identity_view())
        {
            let by_size = (0..=n)
                .map(|s| V::from_int_ratio((s as u32).min(*r) as i64, n as i64))
                .collect();
            return SetFunction::symmetric_from_sizes(n, by_size);
        }
        if n > crate::setfn::TABLE_GROUND_CAP {
            return Err(Error::GroundTooLarge {
                requested: n,
                cap: crate::setfn::TABLE_GROUND_CAP,
                what: "normalized rank table",
            });
        }
        let values = (0..1u64 << n)
            .map(|m| V::from_int_ratio(self.rank(m) as i64, n as i64))
            .collect();
        SetFunction::from_values(n, values)
    }

    fn is_identity_view(&self) -> bool {
        self.keep.len() == self.kind.1 && self.keep.iter().enumerate().all(|(i, &b)| i == b as usize)
    }
}

/// Verdict of the quotient-based binary test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryCheck {
    pub binary: bool,
    /// Set when the ground set has fewer than 4 elements and the verdict is
    /// vacuous.
    pub vacuous: bool,
}

/// Binary-matroid test through the 6-part quotient criterion: the matroid is
/// non-binary iff four distinct singletons `J_1..J_4` and a disjoint set
/// `J_5` exist with `rank(union of J_i over I + J_5) - rank(J_5) = min(|I|, 2)`
/// for every `I` in `[4]`.
pub fn is_binary_via_q6(m: &RankOracle) -> BinaryCheck {
    let n = m.ground_size();
    if n < 4 {
        return BinaryCheck {
            binary: true,
            vacuous: true,
        };
    }
    let full = full_mask(n);
    let mut quad = [0usize; 4];
    let found = four_combinations(n, &mut quad, 0, 0, &mut |quad| {
        let qmask: u64 = quad.iter().map(|&e| 1u64 << e).sum();
        let rest = full & !qmask;
        for j5 in submasks(rest) {
            if q6_condition(m, quad, j5) {
                return true;
            }
        }
        false
    });
    BinaryCheck {
        binary: !found,
        vacuous: false,
    }
}

fn four_combinations(
    n: usize,
    quad: &mut [usize; 4],
    idx: usize,
    start: usize,
    check: &mut impl FnMut(&[usize; 4]) -> bool,
) -> bool {
    if idx == 4 {
        return check(quad);
    }
    for e in start..n {
        quad[idx] = e;
        if four_combinations(n, quad, idx + 1, e + 1, check) {
            return true;
        }
    }
    false
}

fn q6_condition(m: &RankOracle, quad: &[usize; 4], j5: u64) -> bool {
    let r5 = m.rank(j5);
    for &e in quad {
        if m.rank(j5 | 1 << e) - r5 != 1 {
            return false;
        }
    }
    for i_set in 3u64..16 {
        if i_set.count_ones() < 2 {
            continue;
        }
        let mut mask = j5;
        for b in elements(i_set) {
            mask |= 1 << quad[b];
        }
        if m.rank(mask) - r5 != 2 {
            return false;
        }
    }
    true
}

/// Independent oracle for the same property: enumerate all minors on 4
/// elements (contract `C`, delete `D`) and look for the rank function
/// `min(|X|, 2)`.
pub fn has_u24_minor_bruteforce(m: &RankOracle) -> Result<bool> {
    let n = m.ground_size();
    if n > BRUTEFORCE_GROUND_CAP {
        return Err(Error::GroundTooLarge {
            requested: n,
            cap: BRUTEFORCE_GROUND_CAP,
            what: "brute-force minor enumeration",
        });
    }
    if n < 4 {
        return Ok(false);
    }
    let full = full_mask(n);
    let mut quad = [0usize; 4];
    let found = four_combinations(n, &mut quad, 0, 0, &mut |quad| {
        let rmask: u64 = quad.iter().map(|&e| 1u64 << e).sum();
        let rest = full & !rmask;
        for c in submasks(rest) {
            let contracted = m.contract(c).expect("mask in range");
            // d in the contracted labeling: everything except the 4 kept
            let kept_after_contract: Vec<usize> = (0..n)
                .filter(|&e| c >> e & 1 == 0)
                .collect();
            let mut d_new = 0u64;
            for (pos, &orig) in kept_after_contract.iter().enumerate() {
                if rmask >> orig & 1 == 0 {
                    d_new |= 1u64 << pos;
                }
            }
            let minor = contracted.delete(d_new).expect("mask in range");
            if minor_is_rank2_uniform(&minor) {
                return true;
            }
        }
        false
    });
    Ok(found)
}

fn minor_is_rank2_uniform(minor: &RankOracle) -> bool {
    debug_assert_eq!(minor.ground_size(), 4);
    (0..16u64).all(|x| minor.rank(x) == x.count_ones().min(2))
}

/// Parse a matroid description:
/// `uniform n r` | `paving n r` + one member mask per line |
/// `graphic` + one `u v` edge per line (1-based vertices) |
/// `gf2` + 0/1 matrix rows (columns are the matroid elements).
pub fn parse_matroid(text: &str) -> Result<RankOracle> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty matroid file".into(),
    })?;
    let mut toks = header.split_whitespace();
    let kind = toks.next().unwrap_or("");
    match kind {
        "uniform" | "paving" => {
            let n: usize = toks
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or(Error::Parse {
                    line: 1,
                    message: format!("`{kind}` needs a ground size"),
                })?;
            let r: u32 = toks
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or(Error::Parse {
                    line: 1,
                    message: format!("`{kind}` needs a rank"),
                })?;
            if kind == "uniform" {
                return RankOracle::uniform(n, r);
            }
            let mut sets = Vec::new();
            for (idx, line) in lines {
                let mask: u64 = line.trim().parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    message: format!("bad family member mask `{}`", line.trim()),
                })?;
                sets.push(mask);
            }
            RankOracle::sparse_paving(SparsePavingFamily::new(n, r, sets)?)
        }
        "graphic" => {
            let mut edges = Vec::new();
            let mut max_v = 0usize;
            for (idx, line) in lines {
                let mut it = line.split_whitespace();
                let parse = |tok: Option<&str>| -> Result<usize> {
                    tok.and_then(|s| s.parse::<usize>().ok())
                        .filter(|&v| v >= 1)
                        .ok_or(Error::Parse {
                            line: idx + 1,
                            message: format!("expected `u v` with 1-based vertices, got `{line}`"),
                        })
                };
                let u = parse(it.next())?;
                let v = parse(it.next())?;
                max_v = max_v.max(u).max(v);
                edges.push(((u - 1) as u8, (v - 1) as u8));
            }
            RankOracle::graphic(Graph::new(max_v, edges)?)
        }
        "gf2" => {
            let mut rows: Vec<Vec<u8>> = Vec::new();
            for (idx, line) in lines {
                let row = line
                    .split_whitespace()
                    .map(|tok| match tok {
                        "0" => Ok(0u8),
                        "1" => Ok(1u8),
                        _ => Err(Error::Parse {
                            line: idx + 1,
                            message: format!("matrix entries must be 0 or 1, got `{tok}`"),
                        }),
                    })
                    .collect::<Result<Vec<u8>>>()?;
                if let Some(prev) = rows.first() {
                    if prev.len() != row.len() {
                        return Err(Error::Parse {
                            line: idx + 1,
                            message: "ragged matrix rows".into(),
                        });
                    }
                }
                rows.push(row);
            }
            if rows.is_empty() || rows.len() > 32 {
                return Err(Error::Parse {
                    line: 2,
                    message: "gf2 needs between 1 and 32 matrix rows".into(),
                });
            }
            let cols = rows[0].len();
            let columns: Vec<u32> = (0..cols)
                .map(|c| {
                    rows.iter()
                        .enumerate()
                        .map(|(ri, row)| (row[c] as u32) << ri)
                        .sum()
                })
                .collect();
            RankOracle::gf2(columns)
        }
        other => Err(Error::Parse {
            line: 1,
            message: format!("unknown matroid kind `{other}`"),
        }),
    }
}
