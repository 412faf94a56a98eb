//! Constructors for the named semigroup families and the one-element and
//! two-semigroup extensions built on them.
//!
//! Every constructor compiles a symbolic [`Family`] description into a
//! validated [`CayleyTable`]; associativity is re-checked even for
//! constructions that are associative by proof. Numbering conventions:
//! zero-bearing families put the zero at index 0; extensions append new
//! elements at the end so existing indices stay stable.

mod parser;

pub use parser::parse;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use thiserror::Error;

use crate::cayley::{parse_cay_stream, CayleyTable, TableError};
use crate::partition::Partition;
use crate::schur::{is_schur_ring, SchurMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("roster precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown group table `{0}`")]
    UnknownGroup(String),
    /// A constructor produced a non-associative table. This cannot happen
    /// for the shipped families; it indicates a defect in the constructor
    /// itself.
    #[error("internal defect: constructor emitted an invalid table ({0})")]
    Internal(TableError),
}

/// A symbolic family description with parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Null semigroup: every product is the zero.
    O(usize),
    /// Left-null: xy = x.
    LO(usize),
    /// Right-null: xy = y.
    RO(usize),
    /// Chain semilattice on {0..n-1} under min (zero first).
    CH(usize),
    /// Star semilattice: n idempotents over a zero.
    K1(usize),
    /// Cyclic group of order n.
    Z(usize),
    /// Monogenic semigroup with index m and period n.
    Zmn(usize, usize),
    /// 3-nilpotent semigroup on m + n elements with encoded product block.
    Onk(usize, usize, u128),
    /// Left-null over nilpotent block, encoded.
    LOO(usize, usize, usize, u128),
    /// Band with encoded block.
    LORO(usize, usize, usize, u128),
    /// Null semigroup with a left-identity-like and right-identity-like
    /// idempotent pair.
    OROP(usize),
    /// Ideal extension of a null semigroup: O_n below `base`.
    OG(Box<Family>, usize),
    /// Two-sided rostered extension of OG.
    OGmn(Box<Family>, usize, usize),
    /// OGmn specialised to a left-null top: order l + m + n - 1.
    OLO3(usize, usize, usize),
    /// Left-null semi-stacked with a cyclic group acting by rotation.
    LOZ(usize),
    /// Embedded group table by name.
    Group(String),
    /// Adjoin an identity (appended at the end).
    AdjoinIdentity(Box<Family>),
    /// Adjoin a zero (appended at the end).
    AdjoinZero(Box<Family>),
    /// Adjoin a mutant zero: absorbs everything but squares to the old zero.
    Mutant(Box<Family>),
    /// Adjoin a clone of element x.
    Clone { base: Box<Family>, x: usize },
    /// Adjoin an idempotent clone of an idempotent x.
    IdemClone { base: Box<Family>, x: usize },
    Opposite(Box<Family>),
    DirectProduct(Box<Family>, Box<Family>),
    /// Disjoint union where the left factor absorbs: gh = hg = g.
    Stack(Box<Family>, Box<Family>),
    /// Disjoint union of zero-semigroups where cross products fall to the
    /// zero on the left factor's side; the left factor may also be
    /// left-null (semi-twist).
    Twist(Box<Family>, Box<Family>),
    /// Twist with the two zeros identified.
    Unite(Box<Family>, Box<Family>),
    /// Left-null semi-stack with an explicit permutation action: one
    /// permutation of {0..n-1} per element of the base.
    SemiStack {
        n: usize,
        base: Box<Family>,
        phi: Vec<Vec<usize>>,
    },
    /// One-element rostered extension.
    Roster {
        base: Box<Family>,
        x: usize,
        h: Vec<usize>,
        k: Vec<usize>,
    },
    /// Idempotent-flavoured roster (requires x idempotent and H = K).
    RosterHat {
        base: Box<Family>,
        x: usize,
        h: Vec<usize>,
    },
}

/// Which square rule a roster uses, derived from the stabilizer pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RosterCase {
    /// H <= K: x'x' = x'x.
    A,
    /// K <= H: x'x' = xx'.
    B,
    /// x in H and K: x'x' = x'.
    C,
    /// x outside H and K: x'x' = x^2.
    D,
    /// Hat variant square rule.
    Hat,
}

fn embedded_groups() -> &'static Vec<(CayleyTable, crate::cayley::CayMeta)> {
    static GROUPS: OnceLock<Vec<(CayleyTable, crate::cayley::CayMeta)>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        parse_cay_stream(include_str!("../../data/groups.cay"))
            .expect("embedded group tables are valid")
    })
}

/// Loads an embedded or composite group table by name.
pub fn group_table(name: &str) -> Result<CayleyTable, FamilyError> {
    let upper = name.to_ascii_uppercase();
    match upper.as_str() {
        "V4" => return build(&Family::DirectProduct(
            Box::new(Family::Z(2)),
            Box::new(Family::Z(2)),
        )),
        "E8" => {
            return build(&Family::DirectProduct(
                Box::new(Family::DirectProduct(
                    Box::new(Family::Z(2)),
                    Box::new(Family::Z(2)),
                )),
                Box::new(Family::Z(2)),
            ))
        }
        "E9" => return build(&Family::DirectProduct(
            Box::new(Family::Z(3)),
            Box::new(Family::Z(3)),
        )),
        "Z4XZ2" => return build(&Family::DirectProduct(
            Box::new(Family::Z(4)),
            Box::new(Family::Z(2)),
        )),
        "Z6XZ2" => return build(&Family::DirectProduct(
            Box::new(Family::Z(6)),
            Box::new(Family::Z(2)),
        )),
        _ => {}
    }
    embedded_groups()
        .iter()
        .find(|(t, _)| t.name().is_some_and(|n| n.eq_ignore_ascii_case(name)))
        .map(|(t, _)| t.clone())
        .ok_or_else(|| FamilyError::UnknownGroup(name.to_string()))
}

fn table(order: usize, f: impl FnMut(usize, usize) -> usize) -> Result<CayleyTable, FamilyError> {
    CayleyTable::from_fn(order, f).map_err(FamilyError::Internal)
}

fn positive(n: usize, what: &str) -> Result<(), FamilyError> {
    if n == 0 {
        Err(FamilyError::BadParameter(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

/// Decodes `k` into `count` digits base `base`, most significant first.
fn decode_digits(k: u128, base: usize, count: usize) -> Result<Vec<usize>, FamilyError> {
    let limit = (base as u128)
        .checked_pow(count as u32)
        .ok_or_else(|| FamilyError::BadParameter("block code range overflow".into()))?;
    if k >= limit {
        return Err(FamilyError::BadParameter(format!(
            "block code {k} out of range (must be < {base}^{count} = {limit})"
        )));
    }
    let mut digits = vec![0usize; count];
    let mut rest = k;
    for d in digits.iter_mut().rev() {
        *d = (rest % base as u128) as usize;
        rest /= base as u128;
    }
    Ok(digits)
}

/// Re-encodes digits (most significant first) into an integer code.
fn encode_digits(digits: &[usize], base: usize) -> u128 {
    digits
        .iter()
        .fold(0u128, |acc, &d| acc * base as u128 + d as u128)
}

/// Compiles a family description into a validated table. The table carries
/// the spec text as its name.
pub fn build(f: &Family) -> Result<CayleyTable, FamilyError> {
    let t = build_inner(f)?;
    Ok(t.named(f.to_string()))
}

/// Parses the spec mini-language and compiles the result.
pub fn build_str(spec: &str) -> Result<CayleyTable, FamilyError> {
    build(&parse(spec)?)
}

fn build_inner(f: &Family) -> Result<CayleyTable, FamilyError> {
    match f {
        Family::O(n) => {
            positive(*n, "order")?;
            table(*n, |_, _| 0)
        }
        Family::LO(n) => {
            positive(*n, "order")?;
            table(*n, |i, _| i)
        }
        Family::RO(n) => {
            positive(*n, "order")?;
            table(*n, |_, j| j)
        }
        Family::CH(n) => {
            positive(*n, "order")?;
            table(*n, |i, j| i.min(j))
        }
        Family::K1(n) => {
            positive(*n, "branch count")?;
            table(*n + 1, |i, j| if i == j { i } else { 0 })
        }
        Family::Z(n) => {
            positive(*n, "order")?;
            table(*n, |i, j| (i + j) % n)
        }
        Family::Zmn(m, n) => {
            positive(*m, "index")?;
            positive(*n, "period")?;
            let (m, n) = (*m, *n);
            // Element i stands for z^{i+1}.
            table(m + n - 1, |i, j| {
                let e = i + j + 2;
                if e <= m + n - 1 {
                    e - 1
                } else {
                    m + (e - m) % n - 1
                }
            })
        }
        Family::Onk(m, n, k) => {
            positive(*m, "m")?;
            let digits = decode_digits(*k, *m, n * n)?;
            table(*m + *n, |x, y| {
                if x < *m || y < *m {
                    0
                } else {
                    digits[(x - *m) * *n + (y - *m)]
                }
            })
        }
        Family::LOO(l, m, n, k) => {
            positive(*l, "l")?;
            let digits = decode_digits(*k, *l, n * m)?;
            table(*l + *m + *n, |x, y| {
                if x < l + m {
                    x
                } else if y < *l || y >= l + m {
                    0
                } else {
                    digits[(x - l - m) * *m + (y - l)]
                }
            })
        }
        Family::LORO(l, m, n, k) => {
            positive(*l, "l")?;
            let digits = decode_digits(*k, *l, n * m)?;
            table(*l + *m + *n, |x, y| {
                if x < l + m {
                    x
                } else if y < *l || y >= l + m {
                    y
                } else {
                    digits[(x - l - m) * *m + (y - l)]
                }
            })
        }
        Family::OROP(n) => {
            if *n < 2 {
                return Err(FamilyError::BadParameter("OROP needs n >= 2".into()));
            }
            let n = *n;
            let (alpha, beta) = (n, n + 1);
            // The null block absorbs; alpha left-identifies it, beta
            // right-identifies it. Associativity forces beta * alpha to the
            // zero; alpha * beta marks the distinguished nonzero element.
            table(n + 2, move |x, y| {
                match (x, y) {
                    _ if x < n && y < n => 0,
                    _ if x < n && y == alpha => 0,
                    _ if x == alpha && y < n => y,
                    _ if x < n && y == beta => x,
                    _ if x == beta && y < n => 0,
                    (a, b) if a == alpha && b == alpha => alpha,
                    (a, b) if a == beta && b == beta => beta,
                    (a, b) if a == alpha && b == beta => 1,
                    _ => 0, // beta * alpha
                }
            })
        }
        Family::OG(base, n) => {
            positive(*n, "null part order")?;
            let g = build_inner(base)?;
            let m = g.order();
            table(*n + m, |x, y| {
                if x < *n {
                    0
                } else if y < *n {
                    y
                } else {
                    g.get(x - n, y - n) + n
                }
            })
        }
        Family::OGmn(base, m, n) => {
            positive(*n, "roster depth")?;
            let g = build_inner(base)?;
            let gsize = g.order();
            let mut t = build_inner(&Family::OG(base.clone(), *m))?;
            let g_indices: BTreeSet<usize> = (*m..*m + gsize).collect();
            let empty = BTreeSet::new();
            for _ in 1..*n {
                let (next, _) = roster(&t, 0, &empty, &g_indices)?;
                t = next;
            }
            Ok(t)
        }
        Family::OLO3(l, m, n) => build_inner(&Family::OGmn(Box::new(Family::LO(*n)), *l, *m)),
        Family::LOZ(n) => {
            positive(*n, "order")?;
            let phi: Vec<Vec<usize>> = (0..*n)
                .map(|j| (0..*n).map(|x| (x + j) % n).collect())
                .collect();
            build_inner(&Family::SemiStack {
                n: *n,
                base: Box::new(Family::Z(*n)),
                phi,
            })
        }
        Family::Group(name) => group_table(name),
        Family::AdjoinIdentity(base) => Ok(adjoin_identity(&build_inner(base)?)),
        Family::AdjoinZero(base) => Ok(adjoin_zero(&build_inner(base)?)),
        Family::Mutant(base) => {
            let g = build_inner(base)?;
            let theta = g.zero().ok_or_else(|| {
                FamilyError::BadParameter("mutant extension requires a zero-semigroup".into())
            })?;
            let all: BTreeSet<usize> = (0..g.order()).collect();
            let (t, _) = roster_hat(&g, theta, &all)?;
            Ok(t)
        }
        Family::Clone { base, x } => {
            let g = build_inner(base)?;
            clone_element(&g, *x)
        }
        Family::IdemClone { base, x } => {
            let g = build_inner(base)?;
            clone_idem(&g, *x)
        }
        Family::Opposite(base) => Ok(build_inner(base)?.opposite()),
        Family::DirectProduct(a, b) => {
            let (ta, tb) = (build_inner(a)?, build_inner(b)?);
            let (na, nb) = (ta.order(), tb.order());
            positive(na * nb, "product order")?;
            table(na * nb, |x, y| {
                let (xa, xb) = (x / nb, x % nb);
                let (ya, yb) = (y / nb, y % nb);
                ta.get(xa, ya) * nb + tb.get(xb, yb)
            })
        }
        Family::Stack(a, b) => {
            let (ta, tb) = (build_inner(a)?, build_inner(b)?);
            let na = ta.order();
            table(na + tb.order(), |x, y| match (x < na, y < na) {
                (true, true) => ta.get(x, y),
                (false, false) => tb.get(x - na, y - na) + na,
                (true, false) => x,
                (false, true) => y,
            })
        }
        Family::Twist(a, b) => {
            let (ta, tb) = (build_inner(a)?, build_inner(b)?);
            let na = ta.order();
            let zb = tb.zero().ok_or_else(|| {
                FamilyError::BadParameter("twist requires a zero in the second factor".into())
            })?;
            if let Some(za) = ta.zero() {
                table(na + tb.order(), |x, y| match (x < na, y < na) {
                    (true, true) => ta.get(x, y),
                    (false, false) => tb.get(x - na, y - na) + na,
                    (true, false) => za,
                    (false, true) => zb + na,
                })
            } else if (0..na).all(|i| (0..na).all(|j| ta.get(i, j) == i)) {
                // Semi-twist: a left-null top over a zero-semigroup.
                table(na + tb.order(), |x, y| match (x < na, y < na) {
                    (true, true) => ta.get(x, y),
                    (false, false) => tb.get(x - na, y - na) + na,
                    (true, false) => x,
                    (false, true) => zb + na,
                })
            } else {
                Err(FamilyError::BadParameter(
                    "twist requires zero-semigroups (or a left-null first factor)".into(),
                ))
            }
        }
        Family::Unite(a, b) => {
            let (ta, tb) = (build_inner(a)?, build_inner(b)?);
            let za = ta.zero().ok_or_else(|| {
                FamilyError::BadParameter("unite requires zero-semigroups".into())
            })?;
            let zb = tb.zero().ok_or_else(|| {
                FamilyError::BadParameter("unite requires zero-semigroups".into())
            })?;
            let (na, nb) = (ta.order(), tb.order());
            // New indices: 0 = united zero, then a's nonzeros, then b's.
            let map_a = |x: usize| if x == za { 0 } else if x < za { x + 1 } else { x };
            let map_b =
                |x: usize| if x == zb { 0 } else if x < zb { x + na } else { x + na - 1 };
            // (belongs to a?, index within its factor); the united zero
            // counts as a's zero, which agrees with b through the maps.
            let unmap = |v: usize| -> (bool, usize) {
                if v == 0 {
                    (true, za)
                } else if v < na {
                    (true, if v <= za { v - 1 } else { v })
                } else {
                    let w = v - na + 1;
                    (false, if w <= zb { w - 1 } else { w })
                }
            };
            table(na + nb - 1, |x, y| {
                let (xa, xi) = unmap(x);
                let (ya, yi) = unmap(y);
                match (xa, ya) {
                    (true, true) => map_a(ta.get(xi, yi)),
                    (false, false) => map_b(tb.get(xi, yi)),
                    // Cross products fall into the united zero.
                    _ => 0,
                }
            })
        }
        Family::SemiStack { n, base, phi } => {
            positive(*n, "left-null order")?;
            let g = build_inner(base)?;
            let m = g.order();
            if phi.len() != m {
                return Err(FamilyError::BadParameter(format!(
                    "semi-stack action needs one permutation per base element ({m})"
                )));
            }
            for (gi, p) in phi.iter().enumerate() {
                let mut seen = vec![false; *n];
                if p.len() != *n || p.iter().any(|&v| v >= *n || std::mem::replace(&mut seen[v], true)) {
                    return Err(FamilyError::BadParameter(format!(
                        "action of element {gi} is not a permutation of 0..{n}"
                    )));
                }
            }
            // Homomorphism law: phi[g h] = phi[g] . phi[h].
            for a in 0..m {
                for b in 0..m {
                    let ab = g.get(a, b);
                    if (0..*n).any(|x| phi[ab][x] != phi[a][phi[b][x]]) {
                        return Err(FamilyError::BadParameter(format!(
                            "action is not a homomorphism at ({a},{b})"
                        )));
                    }
                }
            }
            table(*n + m, |x, y| match (x < *n, y < *n) {
                (true, true) => x,
                (false, false) => g.get(x - n, y - n) + n,
                (true, false) => x,
                (false, true) => phi[x - n][y],
            })
        }
        Family::Roster { base, x, h, k } => {
            let g = build_inner(base)?;
            let hs: BTreeSet<usize> = h.iter().copied().collect();
            let ks: BTreeSet<usize> = k.iter().copied().collect();
            Ok(roster(&g, *x, &hs, &ks)?.0)
        }
        Family::RosterHat { base, x, h } => {
            let g = build_inner(base)?;
            let hs: BTreeSet<usize> = h.iter().copied().collect();
            Ok(roster_hat(&g, *x, &hs)?.0)
        }
    }
}

/// Adjoins a fresh identity at the end of the table. When the base is
/// already a monoid the new identity supersedes the old one.
pub fn adjoin_identity(t: &CayleyTable) -> CayleyTable {
    let n = t.order();
    CayleyTable::from_fn(n + 1, |x, y| {
        if x == n {
            y
        } else if y == n {
            x
        } else {
            t.get(x, y)
        }
    })
    .expect("adjoining an identity preserves associativity")
}

/// Adjoins a fresh zero at the end of the table.
pub fn adjoin_zero(t: &CayleyTable) -> CayleyTable {
    let n = t.order();
    CayleyTable::from_fn(n + 1, |x, y| if x == n || y == n { n } else { t.get(x, y) })
        .expect("adjoining a zero preserves associativity")
}

/// Left stabilizer of x: elements y with yx = x.
pub fn left_stabilizer(t: &CayleyTable, x: usize) -> BTreeSet<usize> {
    (0..t.order()).filter(|&y| t.get(y, x) == x).collect()
}

/// Right stabilizer of x: elements y with xy = x.
pub fn right_stabilizer(t: &CayleyTable, x: usize) -> BTreeSet<usize> {
    (0..t.order()).filter(|&y| t.get(x, y) == x).collect()
}

fn check_stabilizer_subsemigroup(
    t: &CayleyTable,
    set: &BTreeSet<usize>,
    stab: &BTreeSet<usize>,
    side: &str,
) -> Result<(), FamilyError> {
    for &y in set {
        if y >= t.order() {
            return Err(FamilyError::Precondition(format!(
                "{side} stabilizer member {y} out of range"
            )));
        }
        if !stab.contains(&y) {
            return Err(FamilyError::Precondition(format!(
                "non-stabilizer member: {y} does not {side}-stabilize the rostered element"
            )));
        }
    }
    if !t.is_subsemigroup(set) {
        return Err(FamilyError::Precondition(format!(
            "{side} stabilizer set is not a subsemigroup"
        )));
    }
    let complement: BTreeSet<usize> = (0..t.order()).filter(|v| !set.contains(v)).collect();
    if !t.is_ideal(&complement) {
        return Err(FamilyError::Precondition(format!(
            "non-prime complement: the complement of the {side} stabilizer set is not an ideal"
        )));
    }
    Ok(())
}

/// Derives the applicable square-rule case in priority order.
fn roster_case(x: usize, h: &BTreeSet<usize>, k: &BTreeSet<usize>) -> Result<RosterCase, FamilyError> {
    if h.is_subset(k) {
        Ok(RosterCase::A)
    } else if k.is_subset(h) {
        Ok(RosterCase::B)
    } else if h.contains(&x) && k.contains(&x) {
        Ok(RosterCase::C)
    } else if !h.contains(&x) && !k.contains(&x) {
        Ok(RosterCase::D)
    } else {
        Err(FamilyError::Precondition(
            "condition (*) failure: stabilizer sets are incomparable and the rostered element \
             lies in exactly one of them"
                .into(),
        ))
    }
}

/// Adjoins a mutated clone of `x` whose stabilizer behavior is dictated by
/// `h` (left) and `k` (right). Returns the extended table and the derived
/// square-rule case.
pub fn roster(
    t: &CayleyTable,
    x: usize,
    h: &BTreeSet<usize>,
    k: &BTreeSet<usize>,
) -> Result<(CayleyTable, RosterCase), FamilyError> {
    let n = t.order();
    if x >= n {
        return Err(FamilyError::Precondition(format!(
            "rostered element {x} out of range"
        )));
    }
    check_stabilizer_subsemigroup(t, h, &left_stabilizer(t, x), "left")?;
    check_stabilizer_subsemigroup(t, k, &right_stabilizer(t, x), "right")?;
    let case = roster_case(x, h, k)?;
    let clone = n;
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row: Vec<usize> = (0..n).map(|j| t.get(i, j)).collect();
        row.push(if h.contains(&i) { clone } else { t.get(i, x) });
        rows.push(row);
    }
    let mut last: Vec<usize> = (0..n)
        .map(|j| if k.contains(&j) { clone } else { t.get(x, j) })
        .collect();
    let square = match case {
        RosterCase::A => last[x],              // x'x
        RosterCase::B => rows[x][clone],       // xx'
        RosterCase::C => clone,                // x'
        RosterCase::D => t.get(x, x),          // x^2
        RosterCase::Hat => unreachable!(),
    };
    last.push(square);
    rows.push(last);
    let built = CayleyTable::validate(&rows).map_err(FamilyError::Internal)?;
    Ok((built, case))
}

/// The hat-variant roster: requires an idempotent `x` and a single
/// stabilizer set on both sides; the clone's square flips between the
/// clone and `x` depending on whether `x` stabilizes its clone.
pub fn roster_hat(
    t: &CayleyTable,
    x: usize,
    h: &BTreeSet<usize>,
) -> Result<(CayleyTable, RosterCase), FamilyError> {
    let n = t.order();
    if x >= n {
        return Err(FamilyError::Precondition(format!(
            "rostered element {x} out of range"
        )));
    }
    if t.get(x, x) != x {
        return Err(FamilyError::Precondition(format!(
            "hat roster requires an idempotent, but {x}^2 != {x}"
        )));
    }
    check_stabilizer_subsemigroup(t, h, &left_stabilizer(t, x), "left")?;
    check_stabilizer_subsemigroup(t, h, &right_stabilizer(t, x), "right")?;
    let clone = n;
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row: Vec<usize> = (0..n).map(|j| t.get(i, j)).collect();
        row.push(if h.contains(&i) { clone } else { t.get(i, x) });
        rows.push(row);
    }
    let mut last: Vec<usize> = (0..n)
        .map(|j| if h.contains(&j) { clone } else { t.get(x, j) })
        .collect();
    // x'x is x' when x in H, else x^2 = x; the square is the other one.
    let square = if last[x] == clone { t.get(x, x) } else { clone };
    last.push(square);
    rows.push(last);
    let built = CayleyTable::validate(&rows).map_err(FamilyError::Internal)?;
    Ok((built, RosterCase::Hat))
}

/// Adjoins a clone of `x`: the new element copies x's row and column and
/// squares to x^2.
pub fn clone_element(t: &CayleyTable, x: usize) -> Result<CayleyTable, FamilyError> {
    let empty = BTreeSet::new();
    Ok(roster(t, x, &empty, &empty)?.0)
}

/// Adjoins an idempotent clone of an idempotent `x`.
pub fn clone_idem(t: &CayleyTable, x: usize) -> Result<CayleyTable, FamilyError> {
    let empty = BTreeSet::new();
    Ok(roster_hat(t, x, &empty)?.0)
}

/// Iterated roster: adjoins one clone per entry of `xs` (a multiset), all
/// sharing the stabilizer pair. The clones must not stabilize each other,
/// so the rostered elements must avoid both stabilizer sets. The result is
/// independent of the order of `xs`, which is asserted by rebuilding in
/// reverse order.
pub fn iterated_roster(
    t: &CayleyTable,
    xs: &[usize],
    h: &BTreeSet<usize>,
    k: &BTreeSet<usize>,
) -> Result<CayleyTable, FamilyError> {
    for &x in xs {
        if h.contains(&x) || k.contains(&x) {
            return Err(FamilyError::Precondition(format!(
                "rostered element {x} may not lie in a stabilizer set of an iterated roster"
            )));
        }
        let gx = left_stabilizer(t, x);
        let xg = right_stabilizer(t, x);
        if !h.is_subset(&gx) || !k.is_subset(&xg) {
            return Err(FamilyError::Precondition(format!(
                "stabilizer sets must stabilize every rostered element; {x} fails"
            )));
        }
    }
    let build_in_order = |order: &[usize]| -> Result<CayleyTable, FamilyError> {
        let mut current = t.clone();
        for &x in order {
            let (next, _) = roster(&current, x, h, k)?;
            current = next;
        }
        Ok(current)
    };
    let forward = build_in_order(xs)?;
    let reversed: Vec<usize> = xs.iter().rev().copied().collect();
    let backward = build_in_order(&reversed)?;
    // Match the clone blocks back up: reversal puts the clone of xs[i] at
    // position n + (len - 1 - i).
    let n = t.order();
    let m = xs.len();
    let perm: Vec<usize> = (0..n + m)
        .map(|v| if v < n { v } else { n + (m - 1 - (v - n)) })
        .collect();
    assert_eq!(
        backward.relabel(&perm).entries(),
        forward.entries(),
        "iterated roster must be order-independent"
    );
    Ok(forward)
}

/// Lifts a Schur ring across an iterated roster: the clone block becomes
/// one new class. Requires the rostered set to be a union of ring classes
/// and both stabilizer sets to be class-union subsemigroups.
pub fn roster_schur_lift(
    t: &CayleyTable,
    p: &Partition,
    xs: &[usize],
    h: &BTreeSet<usize>,
    k: &BTreeSet<usize>,
) -> Result<Partition, FamilyError> {
    let xset: BTreeSet<usize> = xs.iter().copied().collect();
    if !p.is_class_union(&xset) {
        return Err(FamilyError::Precondition(
            "rostered set is not a union of ring classes".into(),
        ));
    }
    for (set, side) in [(h, "left"), (k, "right")] {
        if !set.is_empty() {
            if !p.is_class_union(set) {
                return Err(FamilyError::Precondition(format!(
                    "{side} stabilizer set is not a union of ring classes"
                )));
            }
            if !t.is_subsemigroup(set) {
                return Err(FamilyError::Precondition(format!(
                    "{side} stabilizer set is not a subsemigroup"
                )));
            }
        }
    }
    let extended = iterated_roster(t, xs, h, k)?;
    let n = t.order();
    let mut labels: Vec<usize> = (0..n).map(|x| p.class_of(x)).collect();
    let clone_class = p.num_classes();
    labels.extend(std::iter::repeat(clone_class).take(xs.len()));
    let lifted = Partition::from_labels(&labels);
    debug_assert!(
        is_schur_ring(&extended, &lifted, SchurMode::Semigroup).unwrap_or(false),
        "rostered lift must be a Schur ring"
    );
    Ok(lifted)
}

/// Reports the normalized form of an encoded-block spec: the nilpotent
/// encodings shrink their first block while its top element never occurs
/// in the product matrix. Other specs normalize to themselves.
pub fn normalize(f: &Family) -> Result<Family, FamilyError> {
    match f {
        Family::Onk(m, n, k) => {
            let (mut m, mut n) = (*m, *n);
            let mut digits = decode_digits(*k, m, n * n)?;
            while m >= 2 && !digits.contains(&(m - 1)) {
                // Move the top null element into the encoded block with a
                // fresh zero row and column.
                let old = n;
                n += 1;
                m -= 1;
                let mut grown = vec![0usize; n * n];
                for r in 0..old {
                    for c in 0..old {
                        grown[(r + 1) * n + (c + 1)] = digits[r * old + c];
                    }
                }
                digits = grown;
            }
            Ok(Family::Onk(m, n, encode_digits(&digits, m)))
        }
        Family::LOO(l, m, n, k) => {
            let (mut l, mut m) = (*l, *m);
            let n = *n;
            let mut digits = decode_digits(*k, l, n * m)?;
            while l >= 2 && !digits.contains(&(l - 1)) {
                // Move the top left-null element into the middle block with
                // a fresh zero column.
                let old = m;
                m += 1;
                l -= 1;
                let mut grown = vec![0usize; n * m];
                for r in 0..n {
                    for c in 0..old {
                        grown[r * m + (c + 1)] = digits[r * old + c];
                    }
                }
                digits = grown;
            }
            Ok(Family::LOO(l, m, n, encode_digits(&digits, l)))
        }
        other => Ok(other.clone()),
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::O(n) => write!(f, "O({n})"),
            Family::LO(n) => write!(f, "LO({n})"),
            Family::RO(n) => write!(f, "RO({n})"),
            Family::CH(n) => write!(f, "CH({n})"),
            Family::K1(n) => write!(f, "K1({n})"),
            Family::Z(n) => write!(f, "Z({n})"),
            Family::Zmn(m, n) => write!(f, "Zmn({m},{n})"),
            Family::Onk(m, n, k) => write!(f, "Onk({m},{n},{k})"),
            Family::LOO(l, m, n, k) => write!(f, "LOO({l},{m},{n},{k})"),
            Family::LORO(l, m, n, k) => write!(f, "LORO({l},{m},{n},{k})"),
            Family::OROP(n) => write!(f, "OROP({n})"),
            Family::OG(b, n) => write!(f, "OG({b},{n})"),
            Family::OGmn(b, m, n) => write!(f, "OGmn({b},{m},{n})"),
            Family::OLO3(l, m, n) => write!(f, "OLO3({l},{m},{n})"),
            Family::LOZ(n) => write!(f, "LOZ({n})"),
            Family::Group(name) => write!(f, "group({name})"),
            Family::AdjoinIdentity(b) => write!(f, "e({b})"),
            Family::AdjoinZero(b) => write!(f, "theta({b})"),
            Family::Mutant(b) => write!(f, "mutant({b})"),
            Family::Clone { base, x } => write!(f, "clone({base}, x={x})"),
            Family::IdemClone { base, x } => write!(f, "idemclone({base}, x={x})"),
            Family::Opposite(b) => write!(f, "op({b})"),
            Family::DirectProduct(a, b) => write!(f, "prod({a},{b})"),
            Family::Stack(a, b) => write!(f, "stack({a},{b})"),
            Family::Twist(a, b) => write!(f, "twist({a},{b})"),
            Family::Unite(a, b) => write!(f, "unite({a},{b})"),
            Family::SemiStack { n, base, phi } => {
                let perms: Vec<String> = phi
                    .iter()
                    .map(|p| {
                        p.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                write!(f, "semistack({n},{base},phi=[{}])", perms.join("; "))
            }
            Family::Roster { base, x, h, k } => {
                let fmt_set = |s: &[usize]| {
                    s.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                write!(
                    f,
                    "roster({base}, x={x}, H={{{}}}, K={{{}}})",
                    fmt_set(h),
                    fmt_set(k)
                )
            }
            Family::RosterHat { base, x, h } => {
                let hs = h
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                write!(f, "rosterhat({base}, x={x}, H={{{hs}}})")
            }
        }
    }
}

#[cfg(test)]
mod tests;
