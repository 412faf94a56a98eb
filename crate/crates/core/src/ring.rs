//! Exact integer arithmetic in the semigroup ring.
//!
//! Rational coefficients are never materialized: closure of a partition's
//! span under multiplication is equivalent to class-constancy of every
//! class-by-class product, which keeps the hot loop integer-only.

use std::collections::BTreeSet;

use crate::cayley::CayleyTable;
use crate::partition::Partition;

/// A semigroup-ring element with nonnegative integer coefficients: entry
/// `x` is the coefficient of element `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementVector {
    coeffs: Vec<u64>,
}

impl ElementVector {
    pub fn zero(n: usize) -> Self {
        ElementVector {
            coeffs: vec![0; n],
        }
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        ElementVector { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Total coefficient mass.
    pub fn mass(&self) -> u64 {
        self.coeffs
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .expect("coefficient mass overflow")
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &ElementVector) -> ElementVector {
        assert_eq!(self.len(), other.len(), "length mismatch");
        ElementVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| a.checked_add(b).expect("coefficient overflow"))
                .collect(),
        }
    }
}

/// The 0/1 indicator vector of a subset, viewed in the semigroup ring.
pub fn simple_quantity(t: &CayleyTable, set: &BTreeSet<usize>) -> ElementVector {
    let mut v = ElementVector::zero(t.order());
    for &x in set {
        assert!(x < t.order(), "element {x} out of range");
        v.coeffs[x] = 1;
    }
    v
}

/// Bilinear product: coefficient of `z` is the sum of `u[x] * v[y]` over
/// all pairs with `x * y = z`.
pub fn product(t: &CayleyTable, u: &ElementVector, v: &ElementVector) -> ElementVector {
    let n = t.order();
    assert_eq!(u.len(), n, "length mismatch");
    assert_eq!(v.len(), n, "length mismatch");
    let mut out = ElementVector::zero(n);
    for x in 0..n {
        let cu = u.coeffs[x];
        if cu == 0 {
            continue;
        }
        for y in 0..n {
            let cv = v.coeffs[y];
            if cv == 0 {
                continue;
            }
            let z = t.get(x, y);
            let term = cu.checked_mul(cv).expect("coefficient overflow");
            out.coeffs[z] = out.coeffs[z].checked_add(term).expect("coefficient overflow");
        }
    }
    out
}

/// Product of two subsets as multisets, specialised for the enumeration hot
/// loop: coefficients counted straight off the element lists.
pub fn set_product(t: &CayleyTable, xs: &[usize], ys: &[usize]) -> ElementVector {
    let mut out = ElementVector::zero(t.order());
    for &x in xs {
        for &y in ys {
            out.coeffs[t.get(x, y)] += 1;
        }
    }
    out
}

/// True when the coefficients are constant on every class of `p`.
pub fn is_class_constant(v: &ElementVector, p: &Partition) -> bool {
    assert_eq!(v.len(), p.len(), "length mismatch");
    p.classes().iter().all(|class| {
        let mut it = class.iter();
        match it.next() {
            None => true,
            Some(&first) => {
                let c = v.coeffs[first];
                it.all(|&x| v.coeffs[x] == c)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use proptest::prelude::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn simple_quantities_are_indicators() {
        let o3 = families::build_str("O(3)").unwrap();
        assert_eq!(simple_quantity(&o3, &set(&[1, 2])).coeffs(), &[0, 1, 1]);
        let z3 = families::build_str("Z(3)").unwrap();
        assert_eq!(simple_quantity(&z3, &set(&[])).coeffs(), &[0, 0, 0]);
        let lo4 = families::build_str("LO(4)").unwrap();
        assert_eq!(
            simple_quantity(&lo4, &set(&[0, 1, 2, 3])).coeffs(),
            &[1, 1, 1, 1]
        );
    }

    #[test]
    fn null_semigroup_products_collapse_to_zero() {
        let o3 = families::build_str("O(3)").unwrap();
        let x = simple_quantity(&o3, &set(&[1, 2]));
        assert_eq!(product(&o3, &x, &x).coeffs(), &[4, 0, 0]);
    }

    #[test]
    fn cyclic_group_square_of_nonidentity_class() {
        // Oracle: expand the four ordered products z*z, z*z^2, z^2*z, z^2*z^2
        // over Z_3 with e = 0, z = 1, z^2 = 2.
        let z3 = families::build_str("Z(3)").unwrap();
        let mut oracle = vec![0u64; 3];
        for x in [1, 2] {
            for y in [1, 2] {
                oracle[z3.get(x, y)] += 1;
            }
        }
        assert_eq!(oracle, vec![2, 1, 1]);
        let x = simple_quantity(&z3, &set(&[1, 2]));
        assert_eq!(product(&z3, &x, &x).coeffs(), oracle.as_slice());
    }

    #[test]
    fn semilattice_square_keeps_class() {
        // Over K_{1,2}: X = {1,2} gives X^2 = X + |X|(|X|-1) theta.
        let k12 = families::build_str("K1(2)").unwrap();
        let x = simple_quantity(&k12, &set(&[1, 2]));
        assert_eq!(product(&k12, &x, &x).coeffs(), &[2, 1, 1]);
    }

    #[test]
    fn class_constancy() {
        let p = Partition::parse("0|1+2", 3).unwrap();
        assert!(is_class_constant(
            &ElementVector::from_coeffs(vec![4, 0, 0]),
            &p
        ));
        assert!(!is_class_constant(
            &ElementVector::from_coeffs(vec![2, 1, 0]),
            &p
        ));
        let q = Partition::parse("0|1+2", 3).unwrap();
        assert!(is_class_constant(
            &ElementVector::from_coeffs(vec![2, 1, 1]),
            &q
        ));
    }

    proptest! {
        /// Mass conservation and bilinearity over a pool of small tables.
        #[test]
        fn product_mass_and_bilinearity(
            idx in 0usize..4,
            u in proptest::collection::vec(0u64..6, 4),
            v in proptest::collection::vec(0u64..6, 4),
            w in proptest::collection::vec(0u64..6, 4),
        ) {
            let specs = ["O(4)", "LO(4)", "Z(4)", "K1(3)"];
            let t = families::build_str(specs[idx]).unwrap();
            let u = ElementVector::from_coeffs(u);
            let v = ElementVector::from_coeffs(v);
            let w = ElementVector::from_coeffs(w);
            let uv = product(&t, &u, &v);
            prop_assert_eq!(uv.mass(), u.mass() * v.mass());
            // product(u + w, v) == product(u, v) + product(w, v)
            let lhs = product(&t, &u.add(&w), &v);
            let rhs = uv.add(&product(&t, &w, &v));
            prop_assert_eq!(lhs, rhs);
        }

        /// Associativity lifts from the table to simple quantities, and the
        /// opposite table multiplies with swapped arguments.
        #[test]
        fn product_associativity_and_opposite(
            idx in 0usize..4,
            xs in proptest::collection::btree_set(0usize..4, 0..4),
            ys in proptest::collection::btree_set(0usize..4, 0..4),
            zs in proptest::collection::btree_set(0usize..4, 0..4),
        ) {
            let specs = ["O(4)", "LO(4)", "Z(4)", "Zmn(2,3)"];
            let t = families::build_str(specs[idx]).unwrap();
            let x = simple_quantity(&t, &xs);
            let y = simple_quantity(&t, &ys);
            let z = simple_quantity(&t, &zs);
            let left = product(&t, &product(&t, &x, &y), &z);
            let right = product(&t, &x, &product(&t, &y, &z));
            prop_assert_eq!(left, right);
            let op = t.opposite();
            prop_assert_eq!(product(&op, &x, &y), product(&t, &y, &x));
        }
    }
}
