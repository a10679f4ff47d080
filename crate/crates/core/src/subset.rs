//! Bitmask helpers for subsets of small ground sets.
//!
//! Ground elements are numbered from 1 in the external formats; bit `i` of a
//! mask corresponds to element `i + 1`.

/// The mask of the full ground set on `n` elements (`n <= 64`).
pub fn full_mask(n: usize) -> u64 {
    assert!(n <= 64, "ground size {n} exceeds 64");
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate all subsets of `[k]` as masks, ascending. Requires `k < 64`.
pub fn subsets(k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(k < 64);
    0..(1u64 << k)
}

/// Iterate all submasks of `mask`, including the empty set and `mask` itself.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some(cur.wrapping_sub(mask) & mask)
        };
        Some(cur)
    })
}

/// Indices of the set bits of `mask`, ascending.
pub fn elements(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// All permutations of `[k]`, identity first. `k <= 6` keeps this at 720.
pub fn permutations(k: usize) -> Vec<Vec<u8>> {
    assert!(k <= 6, "orbit operations are capped at k = 6");
    let mut out = Vec::new();
    let mut perm: Vec<u8> = (0..k as u8).collect();
    heap_permute(&mut perm, k, &mut out);
    out.sort();
    out
}

fn heap_permute(perm: &mut Vec<u8>, size: usize, out: &mut Vec<Vec<u8>>) {
    if size <= 1 {
        out.push(perm.clone());
        return;
    }
    for i in 0..size {
        heap_permute(perm, size - 1, out);
        if size % 2 == 0 {
            perm.swap(i, size - 1);
        } else {
            perm.swap(0, size - 1);
        }
    }
}

/// Index tables for the coordinate action of `S_k` on `R^(2^k)`.
///
/// `tables[p][new_mask] = old_mask`: the vector relabeled by permutation `p`
/// has its `new_mask` coordinate taken from `old_mask` of the original.
pub struct PermTables {
    k: usize,
    tables: Vec<Vec<u32>>,
}

impl PermTables {
    pub fn new(k: usize) -> Self {
        let perms = permutations(k);
        let size = 1usize << k;
        let mut tables = Vec::with_capacity(perms.len());
        for perm in &perms {
            // inv[new_label] = old_label
            let mut inv = vec![0u8; k];
            for (old, &new) in perm.iter().enumerate() {
                inv[new as usize] = old as u8;
            }
            let mut table = vec![0u32; size];
            for (new_mask, slot) in table.iter_mut().enumerate() {
                let mut old_mask = 0u32;
                for b in elements(new_mask as u64) {
                    old_mask |= 1 << inv[b];
                }
                *slot = old_mask;
            }
            tables.push(table);
        }
        PermTables { k, tables }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn tables(&self) -> &[Vec<u32>] {
        &self.tables
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_mask_edges() {
        assert_eq!(full_mask(0), 0);
        assert_eq!(full_mask(3), 0b111);
        assert_eq!(full_mask(64), u64::MAX);
    }

    #[test]
    fn submask_enumeration() {
        let got: Vec<u64> = submasks(0b101).collect();
        assert_eq!(got, vec![0b000, 0b001, 0b100, 0b101]);
        let empty: Vec<u64> = submasks(0).collect();
        assert_eq!(empty, vec![0]);
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(1).len(), 1);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn perm_tables_identity_first() {
        let pt = PermTables::new(3);
        // identity permutation maps every mask to itself
        assert!(pt.tables()[0]
            .iter()
            .enumerate()
            .all(|(i, &m)| i == m as usize));
    }

    #[test]
    fn perm_table_transposition() {
        // swapping labels 0 and 1 in k=2 swaps masks 0b01 and 0b10
        let pt = PermTables::new(2);
        let swap = pt
            .tables()
            .iter()
            .find(|t| t[1] == 2)
            .expect("transposition present");
        assert_eq!(swap[0], 0);
        assert_eq!(swap[1], 2);
        assert_eq!(swap[2], 1);
        assert_eq!(swap[3], 3);
    }
}
