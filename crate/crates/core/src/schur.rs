//! Schur ring verification, enumeration, and analysis.
//!
//! A partition of a semigroup is a Schur ring when every class-by-class
//! product (as a semigroup-ring element) has coefficients constant on every
//! class. Monoid mode additionally requires the identity to be a singleton
//! class; group mode additionally requires every class's inverse set to be
//! a union of classes.
//!
//! Two enumeration strategies ship: `Naive` scans all Bell(n) partitions
//! and is the oracle; `Pruned` grows partitions class by class with early
//! rejection and restriction to refinements of a base partition (by default
//! the decomposability imposition base). Both agree as sets.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use thiserror::Error;

use crate::cayley::{automorphism_group, CayleyTable};
use crate::partition::{
    enumerate_partitions, enumerate_partitions_with_prefix, rgs_prefixes, Partition,
    PartitionError,
};
use crate::ring::{is_class_constant, product, set_product, simple_quantity, ElementVector};
use crate::structure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("monoid mode requires an identity element")]
    NoIdentity,
    #[error("group mode requires a group table")]
    NotAGroup,
    #[error("base partition is over {base} elements, table has {table}")]
    BadBase { base: usize, table: usize },
    #[error("partition is over {partition} elements, table has {table}")]
    GroundMismatch { partition: usize, table: usize },
    #[error("{0} is not a union of partition classes")]
    NotClassUnion(String),
    #[error("{0} is not closed under products")]
    NotSubsemigroup(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Which closure axioms a partition must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SchurMode {
    Semigroup,
    Monoid,
    Group,
}

impl SchurMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            SchurMode::Semigroup => "semigroup",
            SchurMode::Monoid => "monoid",
            SchurMode::Group => "group",
        }
    }
}

impl std::str::FromStr for SchurMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "semigroup" | "s" => Ok(SchurMode::Semigroup),
            "monoid" | "m" => Ok(SchurMode::Monoid),
            "group" | "g" => Ok(SchurMode::Group),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

/// Enumeration strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Scan all Bell(n) partitions; the oracle path.
    Naive,
    /// Incremental class-growing with early rejection; the fast path.
    Pruned,
}

impl std::str::FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "naive" => Ok(Strategy::Naive),
            "pruned" => Ok(Strategy::Pruned),
            other => Err(format!("unknown strategy `{other}`")),
        }
    }
}

/// The result of an enumeration: the rings found, sorted by RGS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurRingSet {
    pub table: CayleyTable,
    pub mode: SchurMode,
    pub rings: Vec<Partition>,
    /// True when produced by exhaustive enumeration over all partitions.
    pub complete: bool,
}

impl SchurRingSet {
    pub fn len(&self) -> usize {
        self.rings.len()
    }
    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }
    pub fn contains(&self, p: &Partition) -> bool {
        self.rings.binary_search(p).is_ok()
    }
}

/// A witness that a partition fails the Schur ring axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Product of classes `x` and `y` takes different coefficients on two
    /// elements of the same class.
    NotClassConstant {
        class_x: usize,
        class_y: usize,
        elem_u: usize,
        elem_v: usize,
        coeff_u: u64,
        coeff_v: u64,
    },
    /// Monoid/group mode: the identity is fused with another element.
    IdentityNotSingleton { identity: usize },
    /// Group mode: the inverse set of a class is not a union of classes.
    InversesNotClassClosed { class: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotClassConstant {
                class_x,
                class_y,
                elem_u,
                elem_v,
                coeff_u,
                coeff_v,
            } => write!(
                f,
                "product of classes {class_x} and {class_y} has coefficient {coeff_u} on \
                 element {elem_u} but {coeff_v} on element {elem_v} of the same class"
            ),
            Violation::IdentityNotSingleton { identity } => {
                write!(f, "identity {identity} is not a singleton class")
            }
            Violation::InversesNotClassClosed { class } => {
                write!(f, "inverse set of class {class} is not a union of classes")
            }
        }
    }
}

fn mode_prerequisites(t: &CayleyTable, mode: SchurMode) -> Result<(), SchurError> {
    match mode {
        SchurMode::Semigroup => Ok(()),
        SchurMode::Monoid => t.identity().map(|_| ()).ok_or(SchurError::NoIdentity),
        SchurMode::Group => {
            if t.is_group() {
                Ok(())
            } else {
                Err(SchurError::NotAGroup)
            }
        }
    }
}

/// Element-wise inverse table of a group.
fn inverse_table(t: &CayleyTable) -> Vec<usize> {
    let e = t.identity().expect("group has an identity");
    let n = t.order();
    (0..n)
        .map(|x| (0..n).find(|&y| t.get(x, y) == e).expect("group inverses"))
        .collect()
}

/// Full check with a witness for failures; used by `is_schur_ring` and the
/// CLI `check` command.
pub fn schur_violation(
    t: &CayleyTable,
    p: &Partition,
    mode: SchurMode,
) -> Result<Option<Violation>, SchurError> {
    if p.len() != t.order() {
        return Err(SchurError::GroundMismatch {
            partition: p.len(),
            table: t.order(),
        });
    }
    mode_prerequisites(t, mode)?;
    let n = t.order();
    if mode != SchurMode::Semigroup {
        let e = t.identity().expect("checked above");
        if p.classes()[p.class_of(e)].len() != 1 {
            return Ok(Some(Violation::IdentityNotSingleton { identity: e }));
        }
    }
    let classes = p.classes();
    let mut coeffs = vec![0u64; n];
    for (xi, x) in classes.iter().enumerate() {
        for (yi, y) in classes.iter().enumerate() {
            coeffs.iter_mut().for_each(|c| *c = 0);
            for &a in x {
                for &b in y {
                    coeffs[t.get(a, b)] += 1;
                }
            }
            for class in classes {
                let c0 = coeffs[class[0]];
                for &z in &class[1..] {
                    if coeffs[z] != c0 {
                        return Ok(Some(Violation::NotClassConstant {
                            class_x: xi,
                            class_y: yi,
                            elem_u: class[0],
                            elem_v: z,
                            coeff_u: c0,
                            coeff_v: coeffs[z],
                        }));
                    }
                }
            }
        }
    }
    if mode == SchurMode::Group {
        let inv = inverse_table(t);
        for (xi, x) in classes.iter().enumerate() {
            let star: BTreeSet<usize> = x.iter().map(|&a| inv[a]).collect();
            if !p.is_class_union(&star) {
                return Ok(Some(Violation::InversesNotClassClosed { class: xi }));
            }
        }
    }
    Ok(None)
}

/// True when the partition is a Schur ring of the requested mode.
pub fn is_schur_ring(t: &CayleyTable, p: &Partition, mode: SchurMode) -> Result<bool, SchurError> {
    Ok(schur_violation(t, p, mode)?.is_none())
}

/// Exhaustively enumerates the Schur rings of a table.
///
/// `base` restricts the scan to refinements of the given partition; when
/// absent, the pruned strategy defaults to the decomposability imposition
/// base (every Schur ring refines it) and the naive strategy scans
/// everything.
pub fn enumerate_schur_rings(
    t: &CayleyTable,
    mode: SchurMode,
    strategy: Strategy,
    base: Option<&Partition>,
) -> Result<SchurRingSet, SchurError> {
    enumerate_schur_rings_jobs(t, mode, strategy, base, 1)
}

/// As [`enumerate_schur_rings`], splitting work across `jobs` threads by
/// RGS prefix. Results are merged deterministically, so the output is
/// independent of `jobs`.
pub fn enumerate_schur_rings_jobs(
    t: &CayleyTable,
    mode: SchurMode,
    strategy: Strategy,
    base: Option<&Partition>,
    jobs: usize,
) -> Result<SchurRingSet, SchurError> {
    mode_prerequisites(t, mode)?;
    if let Some(b) = base {
        if b.len() != t.order() {
            return Err(SchurError::BadBase {
                base: b.len(),
                table: t.order(),
            });
        }
    }
    let n = t.order();
    let jobs = jobs.max(1);
    let mut rings = if jobs == 1 || n < 3 {
        enumerate_prefix(t, mode, strategy, base, &[])?
    } else {
        // Split the partition space on RGS prefixes. Prefix length 3 gives
        // Bell(3) = 5 slices; 4 gives 15. Enough to balance a desk machine.
        let plen = if jobs <= 4 { 3 } else { 4 }.min(n - 1);
        let prefixes = rgs_prefixes(plen);
        let counter = AtomicUsize::new(0);
        let slices: Vec<std::sync::Mutex<Result<Vec<Partition>, SchurError>>> = (0..prefixes
            .len())
            .map(|_| std::sync::Mutex::new(Ok(Vec::new())))
            .collect();
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let i = counter.fetch_add(1, Ordering::Relaxed);
                    if i >= prefixes.len() {
                        break;
                    }
                    let result = enumerate_prefix(t, mode, strategy, base, &prefixes[i]);
                    *slices[i].lock().unwrap() = result;
                });
            }
        });
        let mut merged = Vec::new();
        for slot in slices {
            merged.extend(slot.into_inner().unwrap()?);
        }
        merged
    };
    rings.sort();
    rings.dedup();
    debug_assert!(
        rings.binary_search(&Partition::discrete(n)).is_ok(),
        "discrete partition is always a Schur ring"
    );
    Ok(SchurRingSet {
        table: t.clone(),
        mode,
        rings,
        complete: true,
    })
}

fn enumerate_prefix(
    t: &CayleyTable,
    mode: SchurMode,
    strategy: Strategy,
    base: Option<&Partition>,
    prefix: &[u8],
) -> Result<Vec<Partition>, SchurError> {
    match strategy {
        Strategy::Naive => {
            let iter = if prefix.is_empty() {
                enumerate_partitions(t.order())
            } else {
                enumerate_partitions_with_prefix(t.order(), prefix)
            };
            let mut out = Vec::new();
            for p in iter {
                if let Some(b) = base {
                    if !p.is_refinement(b)? {
                        continue;
                    }
                }
                if is_schur_ring(t, &p, mode)? {
                    out.push(p);
                }
            }
            Ok(out)
        }
        Strategy::Pruned => {
            let default_base;
            let base = match base {
                Some(b) => b,
                None => {
                    default_base = structure::imposition_base(t);
                    &default_base
                }
            };
            let mut search = PrunedSearch::new(t, mode, base, prefix);
            search.run();
            Ok(search.out)
        }
    }
}

/// The number of Schur rings of a table in the given mode.
pub fn omega(t: &CayleyTable, mode: SchurMode) -> Result<usize, SchurError> {
    Ok(enumerate_schur_rings(t, mode, Strategy::Pruned, None)?.len())
}

/// Class-growing search with early rejection. Partitions are built one
/// complete class at a time (classes in order of their minimum element, so
/// class creation order equals RGS label order); a branch dies as soon as a
/// product of two completed classes fails constancy on a completed class.
struct PrunedSearch<'a> {
    t: &'a CayleyTable,
    mode: SchurMode,
    base: &'a Partition,
    prefix: &'a [u8],
    identity: Option<usize>,
    inverse: Option<Vec<usize>>,
    classes: Vec<Vec<usize>>,
    assigned: Vec<bool>,
    out: Vec<Partition>,
}

impl<'a> PrunedSearch<'a> {
    fn new(t: &'a CayleyTable, mode: SchurMode, base: &'a Partition, prefix: &'a [u8]) -> Self {
        let identity = t.identity();
        let inverse = (mode == SchurMode::Group).then(|| inverse_table(t));
        PrunedSearch {
            t,
            mode,
            base,
            prefix,
            identity,
            inverse,
            classes: Vec::new(),
            assigned: vec![false; t.order()],
            out: Vec::new(),
        }
    }

    fn run(&mut self) {
        self.dfs(0);
    }

    fn emit(&mut self) {
        let n = self.t.order();
        let mut labels = vec![0usize; n];
        for (li, class) in self.classes.iter().enumerate() {
            for &x in class {
                labels[x] = li;
            }
        }
        let p = Partition::from_labels(&labels);
        // The incremental checks are necessary conditions only; confirm in
        // full before emitting.
        if is_schur_ring(self.t, &p, self.mode).unwrap_or(false) {
            self.out.push(p);
        }
    }

    fn dfs(&mut self, nassigned: usize) {
        let n = self.t.order();
        if nassigned == n {
            self.emit();
            return;
        }
        let seed = (0..n).find(|&x| !self.assigned[x]).unwrap();
        let label = self.classes.len();
        // Under a frozen RGS prefix the seed's label is forced.
        if seed < self.prefix.len() && self.prefix[seed] as usize != label {
            return;
        }
        // Pool of elements that may share the seed's class: unassigned,
        // larger, in the same base class. The identity never fuses in
        // monoid/group mode.
        let pool: Vec<usize> = (seed + 1..n)
            .filter(|&x| {
                !self.assigned[x]
                    && self.base.class_of(x) == self.base.class_of(seed)
                    && !(self.mode != SchurMode::Semigroup && Some(x) == self.identity)
            })
            .collect();
        let seed_is_identity = Some(seed) == self.identity && self.mode != SchurMode::Semigroup;
        let nmasks: u64 = if seed_is_identity {
            1
        } else {
            1u64 << pool.len()
        };
        'mask: for mask in 0..nmasks {
            let mut class = Vec::with_capacity(pool.len() + 1);
            class.push(seed);
            for (bit, &x) in pool.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    class.push(x);
                }
            }
            // Prefix consistency for the new class.
            for (x, &want) in self.prefix.iter().enumerate() {
                if self.assigned[x] || x == seed {
                    continue;
                }
                let inside = class.contains(&x);
                if inside != (want as usize == label) {
                    continue 'mask;
                }
            }
            if !self.admissible(&class) {
                continue;
            }
            for &x in &class {
                self.assigned[x] = true;
            }
            self.classes.push(class);
            self.dfs(nassigned + self.classes.last().unwrap().len());
            let class = self.classes.pop().unwrap();
            for &x in &class {
                self.assigned[x] = false;
            }
        }
    }

    /// Necessary conditions for any completion once `class` is committed:
    /// every product among completed classes must be constant on every
    /// completed class (unassigned elements stay unconstrained), and in
    /// group mode inverse sets must not cut a completed class.
    fn admissible(&self, class: &[usize]) -> bool {
        let t = self.t;
        let check_pair = |a: &[usize], b: &[usize]| -> bool {
            let prod = set_product(t, a, b);
            let coeffs = prod.coeffs();
            for d in self.classes.iter().map(Vec::as_slice).chain([class]) {
                let c0 = coeffs[d[0]];
                if d[1..].iter().any(|&z| coeffs[z] != c0) {
                    return false;
                }
            }
            true
        };
        if !check_pair(class, class) {
            return false;
        }
        for c in &self.classes {
            if !check_pair(c, class) || !check_pair(class, c) {
                return false;
            }
            // Old products must also be constant on the new class.
            for c2 in &self.classes {
                let prod = set_product(t, c, c2);
                let coeffs = prod.coeffs();
                let c0 = coeffs[class[0]];
                if class[1..].iter().any(|&z| coeffs[z] != c0) {
                    return false;
                }
            }
        }
        if let Some(inv) = &self.inverse {
            let star: BTreeSet<usize> = class.iter().map(|&x| inv[x]).collect();
            for d in self.classes.iter().map(Vec::as_slice).chain([class]) {
                let hits = d.iter().filter(|x| star.contains(x)).count();
                if hits != 0 && hits != d.len() {
                    return false;
                }
            }
        }
        true
    }
}

/// The unique coarsest Schur ring: the fold of `common_coarsening` over the
/// complete (semigroup-mode) enumeration. Every enumerated ring refines it.
pub fn coarsest_schur_ring(t: &CayleyTable) -> Result<Partition, SchurError> {
    let set = enumerate_schur_rings(t, SchurMode::Semigroup, Strategy::Pruned, None)?;
    let mut coarsest = Partition::discrete(t.order());
    for ring in &set.rings {
        coarsest = coarsest.common_coarsening(ring)?;
    }
    for ring in &set.rings {
        debug_assert!(ring.is_refinement(&coarsest).unwrap());
    }
    // The pairwise common coarsening of Schur rings is itself a Schur ring,
    // so the fold must land inside the enumerated set.
    debug_assert!(set.contains(&coarsest));
    Ok(coarsest)
}

/// Restricts a Schur ring to a class-union subsemigroup, reindexed over the
/// induced subtable.
pub fn restrict(
    t: &CayleyTable,
    p: &Partition,
    subset: &BTreeSet<usize>,
) -> Result<Partition, SchurError> {
    if p.len() != t.order() {
        return Err(SchurError::GroundMismatch {
            partition: p.len(),
            table: t.order(),
        });
    }
    if !p.is_class_union(subset) {
        return Err(SchurError::NotClassUnion(format!("{subset:?}")));
    }
    if !t.is_subsemigroup(subset) {
        return Err(SchurError::NotSubsemigroup(format!("{subset:?}")));
    }
    Ok(p.restrict_to(subset))
}

/// Tags attached to a single Schur ring by `classify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RingTag {
    Discrete,
    Indiscrete,
    /// One singleton class plus the rest: `{eps, G - eps}`.
    Trivial,
    /// Orbit partition of some subgroup of Aut(G).
    Automorphic,
    /// Automorphism group too large for the subgroup scan; the automorphic
    /// tag is undetermined.
    AutomorphicUnknown,
}

/// Largest automorphism group the subgroup scan will take on.
const AUT_SCAN_CAP: usize = 24;

/// All applicable tags for a ring of `t`.
pub fn classify(t: &CayleyTable, p: &Partition) -> BTreeSet<RingTag> {
    let mut tags = BTreeSet::new();
    let n = t.order();
    if p.is_discrete() {
        tags.insert(RingTag::Discrete);
    }
    if n > 0 && p.is_indiscrete() {
        tags.insert(RingTag::Indiscrete);
    }
    if n >= 2 && p.num_classes() == 2 {
        let mut sizes: Vec<usize> = p.classes().iter().map(Vec::len).collect();
        sizes.sort();
        if sizes == [1, n - 1] {
            tags.insert(RingTag::Trivial);
        }
    }
    let auts = automorphism_group(t);
    if auts.len() > AUT_SCAN_CAP {
        tags.insert(RingTag::AutomorphicUnknown);
    } else {
        let orbit_partitions = orbit_partitions_of_subgroups(t, &auts);
        if orbit_partitions.contains(p) {
            tags.insert(RingTag::Automorphic);
        }
    }
    tags
}

/// Orbit partitions of every subgroup of Aut(t) reachable from generator
/// subsets of size <= 2 (all of them, for the group sizes met at desk
/// scale), deduplicated and sorted.
fn orbit_partitions_of_subgroups(t: &CayleyTable, auts: &[crate::cayley::Morphism]) -> Vec<Partition> {
    let n = t.order();
    let maps: Vec<Vec<usize>> = auts.iter().map(|m| m.map.clone()).collect();
    let mut subgroups: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    let mut gens: Vec<Vec<&Vec<usize>>> = vec![vec![]];
    for g in &maps {
        gens.push(vec![g]);
        for h in &maps {
            gens.push(vec![g, h]);
        }
    }
    for gen in gens {
        let mut closure: BTreeSet<Vec<usize>> = BTreeSet::new();
        closure.insert((0..n).collect());
        for g in gen {
            closure.insert(g.clone());
        }
        loop {
            let mut grew = false;
            let snapshot: Vec<Vec<usize>> = closure.iter().cloned().collect();
            for a in &snapshot {
                for b in &snapshot {
                    let ab: Vec<usize> = a.iter().map(|&x| b[x]).collect();
                    if closure.insert(ab) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        subgroups.insert(closure.into_iter().collect());
    }
    let mut partitions: BTreeSet<Partition> = BTreeSet::new();
    for subgroup in subgroups {
        let mut labels: Vec<usize> = (0..n).collect();
        // Union-find over x ~ sigma(x).
        fn find(labels: &mut Vec<usize>, x: usize) -> usize {
            if labels[x] != x {
                let r = find(labels, labels[x]);
                labels[x] = r;
            }
            labels[x]
        }
        for sigma in &subgroup {
            for x in 0..n {
                let (a, b) = (find(&mut labels, x), find(&mut labels, sigma[x]));
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    labels[hi] = lo;
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|x| find(&mut labels, x)).collect();
        partitions.insert(Partition::from_labels(&roots));
    }
    partitions.into_iter().collect()
}

/// Orbit partitions of every subgroup of Aut(t): the automorphic Schur
/// rings. Each is verified against `is_schur_ring`.
pub fn automorphic_schur_rings(t: &CayleyTable) -> SchurRingSet {
    let auts = automorphism_group(t);
    let rings = orbit_partitions_of_subgroups(t, &auts);
    for p in &rings {
        assert!(
            is_schur_ring(t, p, SchurMode::Semigroup).unwrap(),
            "orbit partition {p} failed the Schur check"
        );
    }
    SchurRingSet {
        table: t.clone(),
        mode: SchurMode::Semigroup,
        rings,
        complete: false,
    }
}

/// Convenience wrapper: the product of two class indicator vectors.
pub fn class_product(t: &CayleyTable, p: &Partition, x: usize, y: usize) -> ElementVector {
    let cx = simple_quantity(t, &p.classes()[x].iter().copied().collect());
    let cy = simple_quantity(t, &p.classes()[y].iter().copied().collect());
    product(t, &cx, &cy)
}

/// Checks post hoc that every class-pair product of an enumerated ring is
/// class-constant. Used by the verification suites.
pub fn closure_witness_holds(t: &CayleyTable, p: &Partition) -> bool {
    let m = p.num_classes();
    for x in 0..m {
        for y in 0..m {
            if !is_class_constant(&class_product(t, p, x, y), p) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn rings_of(spec: &str, mode: SchurMode) -> SchurRingSet {
        let t = families::build_str(spec).unwrap();
        enumerate_schur_rings(&t, mode, Strategy::Naive, None).unwrap()
    }

    #[test]
    fn is_schur_ring_examples() {
        let z3 = families::build_str("Z(3)").unwrap();
        let p = Partition::parse("0|1+2", 3).unwrap();
        assert!(is_schur_ring(&z3, &p, SchurMode::Semigroup).unwrap());

        let o3 = families::build_str("O(3)").unwrap();
        let fused = Partition::parse("0+1|2", 3).unwrap();
        assert!(!is_schur_ring(&o3, &fused, SchurMode::Semigroup).unwrap());

        let s3 = families::build_str("group(S3)").unwrap();
        let all = Partition::indiscrete(6);
        assert!(is_schur_ring(&s3, &all, SchurMode::Semigroup).unwrap());
        assert!(matches!(
            is_schur_ring(&s3, &all, SchurMode::Group),
            Ok(false)
        ));
    }

    #[test]
    fn mode_prerequisites_enforced() {
        let o3 = families::build_str("O(3)").unwrap();
        assert_eq!(
            is_schur_ring(&o3, &Partition::discrete(3), SchurMode::Monoid),
            Err(SchurError::NoIdentity)
        );
        let ch2 = families::build_str("CH(2)").unwrap();
        assert_eq!(
            omega(&ch2, SchurMode::Group),
            Err(SchurError::NotAGroup)
        );
    }

    #[test]
    fn omega_examples() {
        assert_eq!(rings_of("LO(3)", SchurMode::Semigroup).len(), 5);
        assert_eq!(rings_of("CH(4)", SchurMode::Semigroup).len(), 1);
        assert_eq!(rings_of("group(S3)", SchurMode::Group).len(), 10);
        assert_eq!(rings_of("group(S3)", SchurMode::Monoid).len(), 22);
        assert_eq!(rings_of("group(S3)", SchurMode::Semigroup).len(), 45);
        // Null semigroups: Bell(n-1).
        let o5 = families::build_str("O(5)").unwrap();
        assert_eq!(omega(&o5, SchurMode::Semigroup).unwrap(), 15);
    }

    #[test]
    fn pruned_equals_naive() {
        for spec in [
            "O(4)",
            "LO(4)",
            "Z(4)",
            "K1(3)",
            "Zmn(2,3)",
            "ORO(2,2)",
            "Onk(4,2,123)",
            "group(S3)",
            "OLO3(2,2,1)",
            "LOZ(3)",
        ] {
            let t = families::build_str(spec).unwrap();
            let naive =
                enumerate_schur_rings(&t, SchurMode::Semigroup, Strategy::Naive, None).unwrap();
            let pruned =
                enumerate_schur_rings(&t, SchurMode::Semigroup, Strategy::Pruned, None).unwrap();
            assert_eq!(naive.rings, pruned.rings, "strategy mismatch on {spec}");
        }
    }

    #[test]
    fn jobs_do_not_change_output() {
        let t = families::build_str("LOZ(3)").unwrap();
        let one = enumerate_schur_rings_jobs(&t, SchurMode::Semigroup, Strategy::Naive, None, 1)
            .unwrap();
        let four = enumerate_schur_rings_jobs(&t, SchurMode::Semigroup, Strategy::Naive, None, 4)
            .unwrap();
        let four_pruned =
            enumerate_schur_rings_jobs(&t, SchurMode::Semigroup, Strategy::Pruned, None, 4)
                .unwrap();
        assert_eq!(one.rings, four.rings);
        assert_eq!(one.rings, four_pruned.rings);
        assert_eq!(one.len(), 12);
    }

    #[test]
    fn coarsest_examples() {
        let ch5 = families::build_str("CH(5)").unwrap();
        assert!(coarsest_schur_ring(&ch5).unwrap().is_discrete());
        let o4 = families::build_str("O(4)").unwrap();
        assert_eq!(
            coarsest_schur_ring(&o4).unwrap(),
            Partition::parse("0|1+2+3", 4).unwrap()
        );
        let band = families::build_str("prod(LO(2),RO(2))").unwrap();
        assert!(coarsest_schur_ring(&band).unwrap().is_indiscrete());
    }

    #[test]
    fn restrict_examples() {
        // Z_6 ring {e | z^3 | z^2+z^4 | z+z^5} restricted to the subgroup
        // {e, z^2, z^4}.
        let z6 = families::build_str("Z(6)").unwrap();
        let p = Partition::from_classes(6, &[vec![0], vec![3], vec![2, 4], vec![1, 5]]).unwrap();
        assert!(is_schur_ring(&z6, &p, SchurMode::Semigroup).unwrap());
        let sub: BTreeSet<usize> = [0, 2, 4].into_iter().collect();
        let restricted = restrict(&z6, &p, &sub).unwrap();
        assert_eq!(restricted, Partition::parse("0|1+2", 3).unwrap());
        let subtable = z6.subtable(&sub).unwrap();
        assert!(is_schur_ring(&subtable, &restricted, SchurMode::Semigroup).unwrap());

        // Errors by name.
        let not_union: BTreeSet<usize> = [0, 2].into_iter().collect();
        assert!(matches!(
            restrict(&z6, &p, &not_union),
            Err(SchurError::NotClassUnion(_))
        ));
        let q = Partition::discrete(6);
        let not_closed: BTreeSet<usize> = [1].into_iter().collect();
        assert!(matches!(
            restrict(&z6, &q, &not_closed),
            Err(SchurError::NotSubsemigroup(_))
        ));
        // Restricting the discrete partition to a subsemigroup stays discrete.
        let r = restrict(&z6, &q, &sub).unwrap();
        assert!(r.is_discrete());
    }

    #[test]
    fn classify_examples() {
        let o4 = families::build_str("O(4)").unwrap();
        let discrete = Partition::discrete(4);
        let tags = classify(&o4, &discrete);
        assert!(tags.contains(&RingTag::Discrete));
        assert!(tags.contains(&RingTag::Automorphic));

        let trivial = Partition::parse("0|1+2+3", 4).unwrap();
        assert!(classify(&o4, &trivial).contains(&RingTag::Trivial));

        let band = families::build_str("prod(LO(2),RO(2))").unwrap();
        let tags = classify(&band, &Partition::indiscrete(4));
        assert!(tags.contains(&RingTag::Indiscrete));
        assert!(tags.contains(&RingTag::Automorphic));
    }

    #[test]
    fn automorphic_rings_examples() {
        // All five Schur rings of LO_2 x RO_2 are automorphic: the five
        // subgroups of S_2 x S_2.
        let band = families::build_str("prod(LO(2),RO(2))").unwrap();
        let autos = automorphic_schur_rings(&band);
        let full = enumerate_schur_rings(&band, SchurMode::Semigroup, Strategy::Naive, None)
            .unwrap();
        assert_eq!(autos.rings, full.rings);
        assert_eq!(autos.len(), 5);

        let o3 = families::build_str("O(3)").unwrap();
        let autos = automorphic_schur_rings(&o3);
        assert_eq!(autos.len(), 2);

        let z1 = families::build_str("Z(1)").unwrap();
        assert_eq!(automorphic_schur_rings(&z1).len(), 1);
    }

    #[test]
    fn violation_witnesses() {
        let o3 = families::build_str("O(3)").unwrap();
        let fused = Partition::parse("0+1|2", 3).unwrap();
        match schur_violation(&o3, &fused, SchurMode::Semigroup).unwrap() {
            Some(Violation::NotClassConstant { coeff_u, coeff_v, .. }) => {
                assert_ne!(coeff_u, coeff_v)
            }
            other => panic!("expected constancy violation, got {other:?}"),
        }
        let z2 = families::build_str("Z(2)").unwrap();
        let ind = Partition::indiscrete(2);
        assert_eq!(
            schur_violation(&z2, &ind, SchurMode::Monoid).unwrap(),
            Some(Violation::IdentityNotSingleton { identity: 0 })
        );
    }

    #[test]
    fn order_zero_table() {
        let empty = CayleyTable::validate(&[]).unwrap();
        let rings = enumerate_schur_rings(&empty, SchurMode::Semigroup, Strategy::Naive, None)
            .unwrap();
        assert_eq!(rings.len(), 1);
    }
}
