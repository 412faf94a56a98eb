//! Decomposability analysis: power ideals, layer sets, nilpotency, the
//! imposition base partition, indivisible idempotents, and the layered
//! enumeration recipe for 3-nilpotent semigroups.
//!
//! The power chain is G >= G^2 >= G^3 >= ... with G^{k+1} the set of
//! products of G^k with G; the k-th layer is the difference G^k - G^{k+1},
//! and the chain's fixed point is the stable core. Every Schur ring
//! refines the partition made of the nonempty layers plus the stable core,
//! which is what makes the layers useful as an enumeration base.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cayley::CayleyTable;
use crate::partition::Partition;
use crate::ring::set_product;
use crate::schur::{SchurMode, SchurRingSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("table is not 3-nilpotent (G^3 != {{zero}})")]
    Not3Nilpotent,
}

/// The power-ideal chain and layer data of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionProfile {
    /// `powers[k]` is G^{k+1}: powers[0] = G, powers[1] = G^2, ... ending at
    /// the first repeated set (the fixed point, included once).
    pub powers: Vec<BTreeSet<usize>>,
    /// `layers[k]` is the set of (k+1)-decomposable elements
    /// G^{k+1} - G^{k+2}; trailing empty layers are trimmed.
    pub layers: Vec<BTreeSet<usize>>,
    /// The stable intersection of the power chain.
    pub ginfty: BTreeSet<usize>,
    /// Least `k` with G^k = {zero}, when the semigroup is a zero-semigroup
    /// and the chain collapses to the zero.
    pub nilpotency_class: Option<usize>,
}

impl DecompositionProfile {
    /// Indecomposable elements: those never appearing in the table body.
    pub fn indecomposables(&self) -> &BTreeSet<usize> {
        static EMPTY: BTreeSet<usize> = BTreeSet::new();
        self.layers.first().unwrap_or(&EMPTY)
    }

    /// Text report: one line per layer, then the stable core and
    /// nilpotency.
    pub fn report(&self) -> String {
        let fmt_set = |s: &BTreeSet<usize>| {
            let inner: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        };
        let mut out = String::new();
        for (k, layer) in self.layers.iter().enumerate() {
            out.push_str(&format!("I_{}: {}\n", k + 1, fmt_set(layer)));
        }
        out.push_str(&format!("G^inf: {}\n", fmt_set(&self.ginfty)));
        match self.nilpotency_class {
            Some(c) => out.push_str(&format!("nilpotency: {c}\n")),
            None => out.push_str("nilpotency: none\n"),
        }
        out
    }
}

/// Computes the power chain until its fixed point.
pub fn decomposition_profile(t: &CayleyTable) -> DecompositionProfile {
    let n = t.order();
    let full: BTreeSet<usize> = (0..n).collect();
    let mut powers = vec![full.clone()];
    loop {
        let prev = powers.last().unwrap();
        let mut next = BTreeSet::new();
        for &x in prev {
            for y in 0..n {
                next.insert(t.get(x, y));
            }
        }
        if next.is_empty() && prev.is_empty() {
            break;
        }
        if &next == prev {
            break;
        }
        powers.push(next);
    }
    let ginfty = powers.last().unwrap().clone();
    let mut layers = Vec::new();
    for w in powers.windows(2) {
        let diff: BTreeSet<usize> = w[0].difference(&w[1]).copied().collect();
        layers.push(diff);
    }
    while layers.last().is_some_and(BTreeSet::is_empty) {
        layers.pop();
    }
    let nilpotency_class = t.zero().and_then(|z| {
        let zero_set: BTreeSet<usize> = [z].into_iter().collect();
        powers
            .iter()
            .position(|p| p == &zero_set)
            .map(|idx| idx + 1)
    });
    // Layers and the stable core partition the ground set.
    debug_assert_eq!(
        layers.iter().map(BTreeSet::len).sum::<usize>() + ginfty.len(),
        n
    );
    DecompositionProfile {
        powers,
        layers,
        ginfty,
        nilpotency_class,
    }
}

/// Elements that never occur as a product.
pub fn indecomposables(t: &CayleyTable) -> BTreeSet<usize> {
    let n = t.order();
    let mut seen = vec![false; n];
    for i in 0..n {
        for j in 0..n {
            seen[t.get(i, j)] = true;
        }
    }
    (0..n).filter(|&x| !seen[x]).collect()
}

/// The partition with one class per nonempty layer plus one class for the
/// stable core (dropped when empty). Every Schur ring refines it.
pub fn imposition_base(t: &CayleyTable) -> Partition {
    let profile = decomposition_profile(t);
    let n = t.order();
    let mut labels = vec![usize::MAX; n];
    let mut next = 0;
    if !profile.ginfty.is_empty() {
        for &x in &profile.ginfty {
            labels[x] = next;
        }
        next += 1;
    }
    for layer in &profile.layers {
        if layer.is_empty() {
            continue;
        }
        for &x in layer {
            labels[x] = next;
        }
        next += 1;
    }
    debug_assert!(labels.iter().all(|&l| l != usize::MAX));
    Partition::from_labels(&labels)
}

/// Idempotents whose only factorization is their own square.
pub fn indivisible_idempotents(t: &CayleyTable) -> BTreeSet<usize> {
    let n = t.order();
    (0..n)
        .filter(|&x| {
            t.get(x, x) == x
                && (0..n).all(|a| {
                    (0..n).all(|b| t.get(a, b) != x || (a == x && b == x))
                })
        })
        .collect()
}

/// Is the table 3-nilpotent: a zero-semigroup with G^3 = {zero}.
pub fn is_3nilpotent(t: &CayleyTable) -> bool {
    match t.zero() {
        None => false,
        Some(z) => {
            let n = t.order();
            (0..n).all(|a| {
                (0..n).all(|b| (0..n).all(|c| t.get(t.get(a, b), c) == z))
            })
        }
    }
}

/// Enumerates every Schur ring of a 3-nilpotent semigroup by the layered
/// recipe: pick any partition of the indecomposables, impose the induced
/// multiplicity equivalence on the second layer, then take any refinement
/// of it. The output agrees set-for-set with the generic enumerator.
pub fn riisr_enumerate_3nilpotent(t: &CayleyTable) -> Result<SchurRingSet, StructureError> {
    if !is_3nilpotent(t) {
        return Err(StructureError::Not3Nilpotent);
    }
    let n = t.order();
    let zero = t.zero().expect("3-nilpotent implies zero");
    let profile = decomposition_profile(t);
    let i1: Vec<usize> = profile.layers.first().cloned().unwrap_or_default().into_iter().collect();
    let i2: Vec<usize> = profile
        .layers
        .get(1)
        .cloned()
        .unwrap_or_default()
        .into_iter()
        .collect();
    debug_assert!(profile.layers.len() <= 2);
    let mut rings = Vec::new();
    for p1 in crate::partition::enumerate_partitions(i1.len()) {
        // Classes of the first layer, in ambient element indices.
        let classes1: Vec<Vec<usize>> = p1
            .classes()
            .iter()
            .map(|c| c.iter().map(|&k| i1[k]).collect())
            .collect();
        // Multiplicity equivalence on the second layer: two elements are
        // equivalent when their multiplicities agree in every product of
        // first-layer classes.
        let mut signature: Vec<Vec<u64>> = vec![Vec::new(); i2.len()];
        for a in &classes1 {
            for b in &classes1 {
                let prod = set_product(t, a, b);
                for (pos, &x) in i2.iter().enumerate() {
                    signature[pos].push(prod.coeffs()[x]);
                }
            }
        }
        let mut sig_label: Vec<usize> = Vec::with_capacity(i2.len());
        let mut seen: Vec<&Vec<u64>> = Vec::new();
        for s in &signature {
            match seen.iter().position(|&v| v == s) {
                Some(k) => sig_label.push(k),
                None => {
                    sig_label.push(seen.len());
                    seen.push(s);
                }
            }
        }
        let equivalence = Partition::from_labels(&sig_label);
        // Any refinement of the equivalence on the second layer completes a
        // ring together with the zero as a singleton.
        for p2 in crate::partition::enumerate_partitions(i2.len()) {
            if !p2.is_refinement(&equivalence).unwrap() {
                continue;
            }
            let mut labels = vec![usize::MAX; n];
            labels[zero] = 0;
            for (pos, &x) in i1.iter().enumerate() {
                labels[x] = 1 + p1.class_of(pos);
            }
            let shift = 1 + p1.num_classes();
            for (pos, &x) in i2.iter().enumerate() {
                labels[x] = shift + p2.class_of(pos);
            }
            rings.push(Partition::from_labels(&labels));
        }
    }
    rings.sort();
    rings.dedup();
    Ok(SchurRingSet {
        table: t.clone(),
        mode: SchurMode::Semigroup,
        rings,
        complete: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::schur::{enumerate_schur_rings, Strategy};

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn profile_of_monogenic_nilpotent() {
        // Z_{3,1}: z, z^2, z^3 with z^3 the zero. Indices are exponent
        // order: z = 0, z^2 = 1, z^3 = 2.
        let t = families::build_str("Zmn(3,1)").unwrap();
        let p = decomposition_profile(&t);
        assert_eq!(p.layers.len(), 2);
        assert_eq!(p.layers[0], set(&[0]));
        assert_eq!(p.layers[1], set(&[1]));
        assert_eq!(p.ginfty, set(&[2]));
        assert_eq!(p.nilpotency_class, Some(3));
    }

    #[test]
    fn profile_of_encoded_3nilpotent() {
        let t = families::build_str("Onk(4,2,123)").unwrap();
        let p = decomposition_profile(&t);
        assert_eq!(p.layers[0], set(&[4, 5]));
        assert_eq!(p.layers[1], set(&[1, 2, 3]));
        assert_eq!(p.ginfty, set(&[0]));
        assert_eq!(p.nilpotency_class, Some(3));
    }

    #[test]
    fn groups_have_no_layers() {
        for spec in ["Z(4)", "group(S3)"] {
            let t = families::build_str(spec).unwrap();
            let p = decomposition_profile(&t);
            assert!(p.layers.is_empty());
            assert_eq!(p.ginfty.len(), t.order());
            assert_eq!(p.nilpotency_class, None);
        }
    }

    #[test]
    fn indecomposable_examples() {
        let o4 = families::build_str("O(4)").unwrap();
        assert_eq!(indecomposables(&o4), set(&[1, 2, 3]));
        for spec in ["Z(4)", "e(LO(2))", "group(S3)"] {
            let monoid = families::build_str(spec).unwrap();
            assert!(indecomposables(&monoid).is_empty(), "monoid {spec}");
        }
        let z41 = families::build_str("Zmn(4,1)").unwrap();
        assert_eq!(indecomposables(&z41), set(&[0]));
    }

    #[test]
    fn imposition_base_examples() {
        let t = families::build_str("Onk(4,2,123)").unwrap();
        assert_eq!(
            imposition_base(&t),
            Partition::parse("0|1+2+3|4+5", 6).unwrap()
        );
        let z5 = families::build_str("Z(5)").unwrap();
        assert!(imposition_base(&z5).is_indiscrete());
        let o4 = families::build_str("O(4)").unwrap();
        assert_eq!(imposition_base(&o4), Partition::parse("0|1+2+3", 4).unwrap());
    }

    #[test]
    fn indivisible_idempotent_examples() {
        let k13 = families::build_str("K1(3)").unwrap();
        assert_eq!(indivisible_idempotents(&k13), set(&[1, 2, 3]));
        let ge = families::build_str("e(O(2))").unwrap();
        let e = ge.identity().unwrap();
        assert_eq!(indivisible_idempotents(&ge), set(&[e]));
        // OROP_2: in the associative completion both adjoined idempotents
        // are indivisible (the zero and the marked element are not), and a
        // ring may still fuse them with nothing else.
        let orop = families::build_str("OROP(2)").unwrap();
        let idem = indivisible_idempotents(&orop);
        assert_eq!(idem, set(&[2, 3]));
    }

    #[test]
    fn riisr_matches_generic_enumerator() {
        for spec in ["Onk(4,2,123)", "O(4)", "Onk(2,2,6)", "Onk(2,2,2)", "O(5)"] {
            let t = families::build_str(spec).unwrap();
            assert!(is_3nilpotent(&t), "{spec} should be 3-nilpotent");
            let riisr = riisr_enumerate_3nilpotent(&t).unwrap();
            let generic =
                enumerate_schur_rings(&t, SchurMode::Semigroup, Strategy::Naive, None).unwrap();
            assert_eq!(riisr.rings, generic.rings, "riisr mismatch on {spec}");
        }
        // Not 3-nilpotent: the semilattice K_{1,3} keeps its idempotents.
        let k13 = families::build_str("K1(3)").unwrap();
        assert_eq!(
            riisr_enumerate_3nilpotent(&k13),
            Err(StructureError::Not3Nilpotent)
        );
    }

    #[test]
    fn riisr_examples() {
        let t = families::build_str("Onk(4,2,123)").unwrap();
        let rings = riisr_enumerate_3nilpotent(&t).unwrap();
        assert_eq!(rings.len(), 3);
        assert!(rings.contains(&Partition::parse("0|1+2|3|4+5", 6).unwrap()));
        assert!(rings.contains(&Partition::parse("0|1|2|3|4+5", 6).unwrap()));
        assert!(rings.contains(&Partition::discrete(6)));

        // O_4 is 2-nilpotent, hence vacuously 3-nilpotent: Bell(3) rings.
        let o4 = families::build_str("O(4)").unwrap();
        assert_eq!(riisr_enumerate_3nilpotent(&o4).unwrap().len(), 5);

        // A maximally nilpotent semigroup of order n has exactly two rings:
        // clone the generator of the monogenic nilpotent semigroup.
        let t = families::build_str("clone(Zmn(4,1), x=0)").unwrap();
        assert_eq!(
            enumerate_schur_rings(&t, SchurMode::Semigroup, Strategy::Naive, None)
                .unwrap()
                .len(),
            2
        );
        assert!(riisr_enumerate_3nilpotent(&t).is_err());
    }
}
