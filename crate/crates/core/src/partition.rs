//! Partitions of a finite ground set into labeled, possibly empty blocks.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::subset::elements;

/// A partition of `[n]` into `k` labeled blocks. Blocks may be empty.
///
/// Internally labels are `0..k`; the text format uses 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    ground_size: usize,
    num_blocks: usize,
    assignment: Vec<u8>,
}

impl Partition {
    /// Build a partition from a block assignment; entries must be `< num_blocks`.
    pub fn new(num_blocks: usize, assignment: Vec<u8>) -> Result<Self> {
        if num_blocks == 0 {
            return Err(Error::InvalidPartition(
                "a partition needs at least one block".into(),
            ));
        }
        if num_blocks > 64 || assignment.len() > 64 {
            return Err(Error::GroundTooLarge {
                requested: num_blocks.max(assignment.len()),
                cap: 64,
                what: "partition",
            });
        }
        if let Some(&bad) = assignment.iter().find(|&&b| b as usize >= num_blocks) {
            return Err(Error::InvalidPartition(format!(
                "block label {bad} out of range for {num_blocks} blocks"
            )));
        }
        Ok(Partition {
            ground_size: assignment.len(),
            num_blocks,
            assignment,
        })
    }

    /// The partition of `[n]` into singletons.
    pub fn identity(n: usize) -> Self {
        Partition::new(n.max(1), (0..n as u8).collect()).expect("identity partition")
    }

    /// The one-block partition of `[n]`.
    pub fn single_block(n: usize) -> Self {
        Partition::new(1, vec![0; n]).expect("single block partition")
    }

    /// Build from explicit blocks given as bitmasks. Blocks must be disjoint
    /// and cover the ground set; empty masks yield empty blocks.
    pub fn from_blocks(ground_size: usize, blocks: &[u64]) -> Result<Self> {
        let mut assignment = vec![u8::MAX; ground_size];
        for (label, &mask) in blocks.iter().enumerate() {
            for e in elements(mask) {
                if e >= ground_size {
                    return Err(Error::MaskOutOfRange {
                        mask,
                        ground: ground_size,
                    });
                }
                if assignment[e] != u8::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "element {} appears in two blocks",
                        e + 1
                    )));
                }
                assignment[e] = label as u8;
            }
        }
        if let Some(e) = assignment.iter().position(|&b| b == u8::MAX) {
            return Err(Error::InvalidPartition(format!(
                "element {} not covered by any block",
                e + 1
            )));
        }
        Partition::new(blocks.len().max(1), assignment)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    pub fn assignment(&self) -> &[u8] {
        &self.assignment
    }

    /// Bitmask of each block over the ground set.
    pub fn block_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.num_blocks];
        for (e, &b) in self.assignment.iter().enumerate() {
            masks[b as usize] |= 1u64 << e;
        }
        masks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.num_blocks];
        for &b in &self.assignment {
            sizes[b as usize] += 1;
        }
        sizes
    }

    /// The common refinement; blocks are the nonempty pairwise intersections,
    /// labeled by first occurrence.
    pub fn common_refinement(&self, other: &Partition) -> Result<Partition> {
        if self.ground_size != other.ground_size {
            return Err(Error::GroundSizeMismatch {
                left: self.ground_size,
                right: other.ground_size,
            });
        }
        let mut labels: HashMap<(u8, u8), u8> = HashMap::new();
        let mut assignment = Vec::with_capacity(self.ground_size);
        for e in 0..self.ground_size {
            let key = (self.assignment[e], other.assignment[e]);
            let next = labels.len() as u8;
            let label = *labels.entry(key).or_insert(next);
            assignment.push(label);
        }
        Partition::new(labels.len().max(1), assignment)
    }

    /// True if every block of `self` is contained in one block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.ground_size != coarser.ground_size {
            return false;
        }
        let mut image = vec![u8::MAX; self.num_blocks];
        for e in 0..self.ground_size {
            let b = self.assignment[e] as usize;
            let target = coarser.assignment[e];
            if image[b] == u8::MAX {
                image[b] = target;
            } else if image[b] != target {
                return false;
            }
        }
        true
    }

    /// For a refinement of `coarser`, the map sending each block of `self`
    /// to the block of `coarser` containing it. Every block of `self` must
    /// be nonempty.
    pub fn block_map_onto(&self, coarser: &Partition) -> Result<Vec<u8>> {
        if self.ground_size != coarser.ground_size {
            return Err(Error::GroundSizeMismatch {
                left: self.ground_size,
                right: coarser.ground_size,
            });
        }
        let mut image = vec![u8::MAX; self.num_blocks];
        for e in 0..self.ground_size {
            let b = self.assignment[e] as usize;
            let target = coarser.assignment[e];
            if image[b] == u8::MAX {
                image[b] = target;
            } else if image[b] != target {
                return Err(Error::InvalidPartition(
                    "partition does not refine the target".into(),
                ));
            }
        }
        if image.iter().any(|&t| t == u8::MAX) {
            return Err(Error::InvalidPartition(
                "empty block has no image under the block map".into(),
            ));
        }
        Ok(image)
    }

    /// Relabel blocks by first occurrence and drop empty blocks.
    pub fn canonical_relabel(&self) -> Partition {
        let mut labels: HashMap<u8, u8> = HashMap::new();
        let mut assignment = Vec::with_capacity(self.ground_size);
        for &b in &self.assignment {
            let next = labels.len() as u8;
            let label = *labels.entry(b).or_insert(next);
            assignment.push(label);
        }
        Partition::new(labels.len().max(1), assignment).expect("canonical relabeling is valid")
    }

    /// Text form: `k=<blocks>` then the 1-based assignment on one line.
    pub fn to_text(&self) -> String {
        let labels: Vec<String> = self
            .assignment
            .iter()
            .map(|&b| (b as usize + 1).to_string())
            .collect();
        format!("k={}\n{}\n", self.num_blocks, labels.join(" "))
    }

    pub fn parse_text(text: &str) -> Result<Partition> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "empty partition file".into(),
        })?;
        let k: usize = header
            .trim()
            .strip_prefix("k=")
            .and_then(|s| s.trim().parse().ok())
            .ok_or(Error::Parse {
                line: 1,
                message: format!("expected `k=<int>`, got `{}`", header.trim()),
            })?;
        let (lineno, body) = lines
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or(Error::Parse {
                line: 2,
                message: "missing assignment line".into(),
            })?;
        let mut assignment = Vec::new();
        for tok in body.split_whitespace() {
            let label: usize = tok.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                message: format!("bad block label `{tok}`"),
            })?;
            if label == 0 || label > k {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("block label {label} out of range 1..={k}"),
                });
            }
            assignment.push((label - 1) as u8);
        }
        Partition::new(k, assignment)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(spec: &[&[usize]]) -> Partition {
        // blocks given as 1-based element lists
        let n: usize = spec.iter().map(|b| b.len()).sum();
        let masks: Vec<u64> = spec
            .iter()
            .map(|b| b.iter().map(|&e| 1u64 << (e - 1)).sum())
            .collect();
        Partition::from_blocks(n, &masks).unwrap()
    }

    #[test]
    fn refinement_of_crossing_pairs_is_singletons() {
        let p1 = parts(&[&[1, 2], &[3, 4]]);
        let p2 = parts(&[&[1, 3], &[2, 4]]);
        let r = p1.common_refinement(&p2).unwrap();
        assert_eq!(r.num_blocks(), 4);
        assert!(r.block_sizes().iter().all(|&s| s == 1));
        assert!(r.refines(&p1));
        assert!(r.refines(&p2));
    }

    #[test]
    fn refinement_is_idempotent_up_to_relabeling() {
        let p = Partition::new(3, vec![2, 0, 2, 1]).unwrap();
        let r = p.common_refinement(&p).unwrap();
        assert_eq!(r, p.canonical_relabel());
    }

    #[test]
    fn one_block_is_identity_for_refinement() {
        let p = Partition::new(2, vec![0, 1, 0]).unwrap();
        let one = Partition::single_block(3);
        let r = p.common_refinement(&one).unwrap();
        assert_eq!(r, p.canonical_relabel());
    }

    #[test]
    fn empty_blocks_are_legal() {
        let p = Partition::new(3, vec![0, 0]).unwrap();
        assert_eq!(p.block_sizes(), vec![2, 0, 0]);
        assert_eq!(p.canonical_relabel().num_blocks(), 1);
    }

    #[test]
    fn block_map_reproduces_coarser_labels() {
        let fine = parts(&[&[1], &[2], &[3], &[4]]);
        let coarse = parts(&[&[1, 2], &[3, 4]]);
        let map = fine.block_map_onto(&coarse).unwrap();
        assert_eq!(map, vec![0, 0, 1, 1]);
        assert!(coarse.block_map_onto(&fine).is_err());
    }

    #[test]
    fn ground_size_mismatch_is_an_error() {
        let a = Partition::single_block(3);
        let b = Partition::single_block(4);
        assert!(matches!(
            a.common_refinement(&b),
            Err(Error::GroundSizeMismatch { .. })
        ));
    }

    #[test]
    fn text_roundtrip() {
        let p = Partition::new(3, vec![0, 2, 1, 0]).unwrap();
        let parsed = Partition::parse_text(&p.to_text()).unwrap();
        assert_eq!(parsed, p);
    }

    #[test]
    fn parse_rejects_out_of_range_labels() {
        let err = Partition::parse_text("k=2\n1 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
