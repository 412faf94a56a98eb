//! Set partitions of `{0..n-1}` in restricted-growth-string form.
//!
//! The RGS is the sole internal representation: element `i` carries the
//! label of its class, label 0 for element 0, and each label is at most one
//! more than the maximum of the earlier labels. Class lists are derived
//! views. Enumeration is in lexicographic RGS order, which starts at the
//! all-zero string -- the indiscrete partition -- and ends at the discrete
//! one.
//!
//! Naming note: `common_coarsening` is the finest partition coarser than
//! both arguments (merge overlapping classes) and `common_refinement` the
//! coarsest partition finer than both (classwise intersections). The
//! operations are named by effect, never by lattice symbol.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("not a restricted growth string: {0}")]
    BadRgs(String),
    #[error("ground sets differ ({left} vs {right})")]
    GroundMismatch { left: usize, right: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("paper partition indices are defined for orders 3 and 4, not {0}")]
    UnsupportedOrder(usize),
}

/// A partition of `{0..n-1}`.
#[derive(Clone, Eq)]
pub struct Partition {
    rgs: Vec<u8>,
    classes: Vec<Vec<usize>>,
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.rgs == other.rgs
    }
}

impl std::hash::Hash for Partition {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rgs.hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rgs.cmp(&other.rgs)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl fmt::Display for Partition {
    /// Class syntax: elements joined by `+` within a class, classes by `|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() == 0 {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                c.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join("+")
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

fn classes_of_rgs(rgs: &[u8]) -> Vec<Vec<usize>> {
    let nclasses = rgs.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
    let mut classes = vec![Vec::new(); nclasses];
    for (x, &l) in rgs.iter().enumerate() {
        classes[l as usize].push(x);
    }
    classes
}

fn rgs_valid(rgs: &[u8]) -> bool {
    let mut max: i32 = -1;
    for &l in rgs {
        if (l as i32) > max + 1 {
            return false;
        }
        max = max.max(l as i32);
    }
    true
}

impl Partition {
    /// Builds a partition from a restricted growth string.
    pub fn from_rgs(rgs: Vec<u8>) -> Result<Self, PartitionError> {
        if !rgs_valid(&rgs) {
            return Err(PartitionError::BadRgs(format!("{rgs:?}")));
        }
        let classes = classes_of_rgs(&rgs);
        Ok(Partition { rgs, classes })
    }

    /// Builds a partition from any labeling, renumbering labels to RGS form.
    pub fn from_labels(labels: &[usize]) -> Self {
        let cap = labels.iter().copied().max().map_or(1, |m| m + 1);
        let mut remap: Vec<Option<u8>> = vec![None; cap];
        let mut next = 0u8;
        let mut rgs = Vec::with_capacity(labels.len());
        for &l in labels {
            let slot = &mut remap[l];
            let lab = match slot {
                Some(lab) => *lab,
                None => {
                    let lab = next;
                    *slot = Some(lab);
                    next += 1;
                    lab
                }
            };
            rgs.push(lab);
        }
        let classes = classes_of_rgs(&rgs);
        Partition { rgs, classes }
    }

    /// Builds a partition from explicit classes; they must cover `{0..n-1}`
    /// disjointly.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self, PartitionError> {
        let mut labels = vec![usize::MAX; n];
        for (ci, class) in classes.iter().enumerate() {
            for &x in class {
                if x >= n || labels[x] != usize::MAX {
                    return Err(PartitionError::Parse(format!(
                        "classes do not partition 0..{n}"
                    )));
                }
                labels[x] = ci;
            }
        }
        if labels.iter().any(|&l| l == usize::MAX) {
            return Err(PartitionError::Parse(format!(
                "classes do not cover 0..{n}"
            )));
        }
        Ok(Self::from_labels(&labels))
    }

    /// The discrete partition (all singletons).
    pub fn discrete(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    /// The indiscrete partition (one class), or the empty partition at n=0.
    pub fn indiscrete(n: usize) -> Self {
        Self::from_labels(&vec![0; n.max(1)][..n])
    }

    /// Parses either class syntax `0|1+2|3` or RGS syntax `0.0.1.2`.
    /// The expected ground-set size disambiguates and validates.
    pub fn parse(text: &str, n: usize) -> Result<Self, PartitionError> {
        let text = text.trim();
        if n == 0 {
            if text.is_empty() || text == "empty" {
                return Ok(Self::discrete(0));
            }
            return Err(PartitionError::Parse("expected empty partition".into()));
        }
        let p = if text.contains('.') || !text.contains(|c| c == '|' || c == '+') && n == 1 {
            // RGS form.
            let labels: Result<Vec<usize>, _> = text
                .split('.')
                .map(|w| {
                    w.trim()
                        .parse::<usize>()
                        .map_err(|_| PartitionError::Parse(format!("bad RGS label `{w}`")))
                })
                .collect();
            let labels = labels?;
            let rgs: Vec<u8> = labels.iter().map(|&l| l as u8).collect();
            Self::from_rgs(rgs)?
        } else {
            let mut classes = Vec::new();
            for chunk in text.split('|') {
                let class: Result<Vec<usize>, _> = chunk
                    .split('+')
                    .map(|w| {
                        w.trim()
                            .parse::<usize>()
                            .map_err(|_| PartitionError::Parse(format!("bad element `{w}`")))
                    })
                    .collect();
                classes.push(class?);
            }
            Self::from_classes(n, &classes)?
        };
        if p.len() != n {
            return Err(PartitionError::GroundMismatch {
                left: p.len(),
                right: n,
            });
        }
        Ok(p)
    }

    /// RGS form `0.0.1.2`.
    pub fn rgs_string(&self) -> String {
        self.rgs
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    /// Ground-set size.
    pub fn len(&self) -> usize {
        self.rgs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rgs.is_empty()
    }

    /// Classes in order of their minimum element.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class label of an element.
    pub fn class_of(&self, x: usize) -> usize {
        self.rgs[x] as usize
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    pub fn is_indiscrete(&self) -> bool {
        self.num_classes() <= 1
    }

    /// Elements that form singleton classes.
    pub fn singletons(&self) -> Vec<usize> {
        self.classes
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c[0])
            .collect()
    }

    /// True when `set` is a union of classes.
    pub fn is_class_union(&self, set: &std::collections::BTreeSet<usize>) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|x| set.contains(x)) || c.iter().all(|x| !set.contains(x)))
    }

    /// True when every class of `coarser` is a union of classes of `self`.
    pub fn is_refinement(&self, coarser: &Partition) -> Result<bool, PartitionError> {
        if self.len() != coarser.len() {
            return Err(PartitionError::GroundMismatch {
                left: self.len(),
                right: coarser.len(),
            });
        }
        Ok(self
            .classes
            .iter()
            .all(|c| c.iter().all(|&x| coarser.rgs[x] == coarser.rgs[c[0]])))
    }

    /// The finest partition coarser than both: merge overlapping classes to
    /// a fixed point (union-find over the two class structures).
    pub fn common_coarsening(&self, other: &Partition) -> Result<Partition, PartitionError> {
        if self.len() != other.len() {
            return Err(PartitionError::GroundMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let n = self.len();
        let mut uf = UnionFind::new(n);
        for p in [self, other] {
            for class in p.classes() {
                for w in class.windows(2) {
                    uf.union(w[0], w[1]);
                }
            }
        }
        let labels: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
        Ok(Partition::from_labels(&labels))
    }

    /// The coarsest partition finer than both: classwise intersections.
    /// Ground sets must be equal; for the disjoint-union case used by the
    /// semigroup constructions see [`Partition::shift_concat`].
    pub fn common_refinement(&self, other: &Partition) -> Result<Partition, PartitionError> {
        if self.len() != other.len() {
            return Err(PartitionError::GroundMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        let n = self.len();
        let mut pair_label = std::collections::BTreeMap::new();
        let mut labels = Vec::with_capacity(n);
        for x in 0..n {
            let key = (self.rgs[x], other.rgs[x]);
            let next = pair_label.len();
            let l = *pair_label.entry(key).or_insert(next);
            labels.push(l);
        }
        Ok(Partition::from_labels(&labels))
    }

    /// Common refinement over disjoint ground sets: `other`'s ground set is
    /// taken to sit immediately after this one's, and the class lists are
    /// concatenated side by side.
    pub fn shift_concat(&self, other: &Partition) -> Partition {
        let offset = self.len();
        let mut labels: Vec<usize> = self.rgs.iter().map(|&l| l as usize).collect();
        let shift = self.num_classes();
        labels.extend(other.rgs.iter().map(|&l| l as usize + shift));
        let _ = offset;
        Partition::from_labels(&labels)
    }

    /// The partition induced on a subset of the ground set, reindexed by
    /// increasing element order.
    pub fn restrict_to(&self, subset: &std::collections::BTreeSet<usize>) -> Partition {
        let labels: Vec<usize> = subset.iter().map(|&x| self.rgs[x] as usize).collect();
        Partition::from_labels(&labels)
    }

    /// The 1-based index of this partition in the order-3 or order-4
    /// partition catalog used by the census reports.
    pub fn paper_index(&self) -> Result<usize, PartitionError> {
        let catalog: &[&[u8]] = match self.len() {
            3 => &PAPER_INDEX_3,
            4 => &PAPER_INDEX_4,
            n => return Err(PartitionError::UnsupportedOrder(n)),
        };
        Ok(catalog
            .iter()
            .position(|&r| r == self.rgs.as_slice())
            .expect("catalog covers all partitions")
            + 1)
    }

    /// Looks up an order-3/4 partition by its 1-based catalog index.
    pub fn from_paper_index(n: usize, index: usize) -> Result<Partition, PartitionError> {
        let catalog: &[&[u8]] = match n {
            3 => &PAPER_INDEX_3,
            4 => &PAPER_INDEX_4,
            n => return Err(PartitionError::UnsupportedOrder(n)),
        };
        catalog
            .get(index.wrapping_sub(1))
            .map(|&r| Partition::from_rgs(r.to_vec()).expect("catalog entries are valid"))
            .ok_or(PartitionError::Parse(format!("no partition index {index}")))
    }
}

/// Catalog order for the five partitions of a 3-set: discrete first,
/// indiscrete last, pair merges in between.
const PAPER_INDEX_3: [&[u8]; 5] = [
    &[0, 1, 2], // 1: discrete
    &[0, 1, 1], // 2: {1,2}
    &[0, 0, 1], // 3: {0,1}
    &[0, 1, 0], // 4: {0,2}
    &[0, 0, 0], // 5: indiscrete
];

/// Catalog order for the fifteen partitions of a 4-set.
const PAPER_INDEX_4: [&[u8]; 15] = [
    &[0, 1, 2, 3], // 1: discrete
    &[0, 0, 1, 2], // 2: {0,1}
    &[0, 1, 0, 2], // 3: {0,2}
    &[0, 1, 2, 0], // 4: {0,3}
    &[0, 0, 1, 1], // 5: {0,1}{2,3}
    &[0, 1, 0, 1], // 6: {0,2}{1,3}
    &[0, 1, 1, 0], // 7: {0,3}{1,2}
    &[0, 1, 1, 2], // 8: {1,2}
    &[0, 1, 2, 1], // 9: {1,3}
    &[0, 1, 2, 2], // 10: {2,3}
    &[0, 0, 0, 1], // 11: {0,1,2}
    &[0, 0, 1, 0], // 12: {0,1,3}
    &[0, 1, 0, 0], // 13: {0,2,3}
    &[0, 1, 1, 1], // 14: {1,2,3}
    &[0, 0, 0, 0], // 15: indiscrete
];

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller root so labels stay first-occurrence ordered.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out
            .checked_mul((n - i) as u128)
            .expect("binomial overflow")
            / (i as u128 + 1);
    }
    out
}

/// Exact Bell number via the Bell-triangle recurrence.
pub fn bell(n: usize) -> u128 {
    let mut row: Vec<u128> = vec![1];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &v in &row {
            let prev = *next.last().unwrap();
            next.push(prev.checked_add(v).expect("Bell number overflow"));
        }
        row = next;
    }
    row[0]
}

/// Streams all partitions of `{0..n-1}` in lexicographic RGS order.
pub fn enumerate_partitions(n: usize) -> PartitionIter {
    PartitionIter {
        next: Some(vec![0; n]),
        prefix_len: 0,
    }
}

/// Streams the partitions whose RGS starts with `prefix` (which must itself
/// be a valid RGS prefix), in lexicographic order. Splitting the full
/// stream over all prefixes of a fixed length partitions the work with no
/// duplicates.
pub fn enumerate_partitions_with_prefix(n: usize, prefix: &[u8]) -> PartitionIter {
    assert!(prefix.len() <= n, "prefix longer than ground set");
    assert!(rgs_valid(prefix), "invalid RGS prefix");
    let mut first = prefix.to_vec();
    first.resize(n, 0);
    PartitionIter {
        next: Some(first),
        prefix_len: prefix.len(),
    }
}

/// All valid RGS prefixes of a given length, in lexicographic order.
pub fn rgs_prefixes(len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for p in &out {
            let max = p.iter().copied().max().map_or(0, |m| m + 1);
            for l in 0..=max {
                let mut q = p.clone();
                q.push(l);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

pub struct PartitionIter {
    next: Option<Vec<u8>>,
    prefix_len: usize,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let n = current.len();
        // Compute the successor before handing out the current string.
        let mut succ = current.clone();
        let mut advanced = false;
        if n > self.prefix_len {
            // Rightmost position (beyond the frozen prefix) that can grow:
            // label i may rise to at most 1 + max of the earlier labels.
            let mut caps = vec![0u8; n];
            let mut m = 0u8;
            for i in 0..n {
                caps[i] = m; // 1 + max of labels strictly before i
                m = m.max(succ[i] + 1);
            }
            for i in (self.prefix_len.max(1)..n).rev() {
                if succ[i] < caps[i] {
                    succ[i] += 1;
                    for v in succ.iter_mut().skip(i + 1) {
                        *v = 0;
                    }
                    advanced = true;
                    break;
                }
            }
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(Partition::from_rgs(current).expect("successor preserves RGS validity"))
    }
}
