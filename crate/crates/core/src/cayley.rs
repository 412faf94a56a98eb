//! Cayley-table representation of finite semigroups.
//!
//! A semigroup of order `n` is an `n x n` table over element indices
//! `0..n`; entry `(i, j)` is the product `i * j`. Associativity is checked
//! exhaustively on construction, so a [`CayleyTable`] value is always a
//! genuine semigroup. The order-0 (empty) table is legal and vacuously
//! valid.
//!
//! Equivalence of semigroups means isomorphism or anti-isomorphism; the
//! canonical form of a table is the lexicographically minimal relabeling
//! (row-major), and the equivalence canonical form additionally minimizes
//! over the opposite table.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;


/// Errors raised when validating a raw multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    /// An entry does not name an element of the semigroup.
    #[error("entry ({row},{col}) = {value} out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    /// The table is not associative; the triple is the first witness found.
    #[error("not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    /// The flat entry buffer does not have `order * order` cells.
    #[error("expected {expected} entries for order {order}, got {got}")]
    BadShape {
        order: usize,
        expected: usize,
        got: usize,
    },
}

/// Errors raised when reading the `.cay` text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("record starting at line {line}: {source}")]
    Invalid { line: usize, source: TableError },
}

/// A validated finite semigroup given by its multiplication table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<u8>,
    name: Option<String>,
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable(order {}", self.order)?;
        if let Some(name) = &self.name {
            write!(f, ", {name}")?;
        }
        write!(f, ")[")?;
        for i in 0..self.order {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.order {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Checks associativity of a fully filled flat table, returning the first
/// failing triple.
fn associativity_witness(order: usize, entries: &[u8]) -> Option<(usize, usize, usize)> {
    let at = |i: usize, j: usize| entries[i * order + j] as usize;
    for i in 0..order {
        for j in 0..order {
            let ij = at(i, j);
            for k in 0..order {
                if at(ij, k) != at(i, at(j, k)) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

impl CayleyTable {
    /// Validates a raw table given as rows of element indices.
    ///
    /// Rejects out-of-range entries and non-associative tables, naming the
    /// first witness triple.
    pub fn validate(rows: &[Vec<usize>]) -> Result<Self, TableError> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(TableError::BadShape {
                    order,
                    expected: order * order,
                    got: rows.iter().map(Vec::len).sum(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(TableError::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        order,
                    });
                }
                entries.push(v as u8);
            }
        }
        Self::from_flat(order, entries)
    }

    /// Validates a flat row-major entry buffer.
    pub fn from_flat(order: usize, entries: Vec<u8>) -> Result<Self, TableError> {
        if entries.len() != order * order {
            return Err(TableError::BadShape {
                order,
                expected: order * order,
                got: entries.len(),
            });
        }
        if let Some((i, j)) = entries
            .iter()
            .enumerate()
            .find(|(_, &v)| v as usize >= order)
            .map(|(p, _)| (p / order, p % order))
        {
            return Err(TableError::EntryOutOfRange {
                row: i,
                col: j,
                value: entries[i * order + j] as usize,
                order,
            });
        }
        if let Some((i, j, k)) = associativity_witness(order, &entries) {
            return Err(TableError::NotAssociative { i, j, k });
        }
        Ok(CayleyTable {
            order,
            entries,
            name: None,
        })
    }

    /// Builds a table from a product function, then validates it.
    pub fn from_fn(
        order: usize,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, TableError> {
        let mut rows = Vec::with_capacity(order);
        for i in 0..order {
            rows.push((0..order).map(|j| f(i, j)).collect());
        }
        Self::validate(&rows)
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Product of elements `i` and `j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.order + j] as usize
    }

    /// Row-major entry buffer.
    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Optional label.
    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Returns the same table with a label attached.
    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Drops the label (canonical forms and census records carry none).
    pub fn unnamed(mut self) -> Self {
        self.name = None;
        self
    }

    /// The opposite semigroup: entry `(i, j)` is this table's `(j, i)`.
    pub fn opposite(&self) -> CayleyTable {
        let mut entries = vec![0u8; self.order * self.order];
        for i in 0..self.order {
            for j in 0..self.order {
                entries[i * self.order + j] = self.entries[j * self.order + i];
            }
        }
        // A transposed associative table is associative.
        CayleyTable {
            order: self.order,
            entries,
            name: None,
        }
    }

    /// Applies a relabeling permutation: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> CayleyTable {
        debug_assert_eq!(perm.len(), self.order);
        let n = self.order;
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[perm[i] * n + perm[j]] = perm[self.get(i, j)] as u8;
            }
        }
        CayleyTable {
            order: n,
            entries,
            name: None,
        }
    }

    /// True when products commute.
    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| (i + 1..n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// True when the table is a group: nonempty, has an identity, and every
    /// row and column is a permutation.
    pub fn is_group(&self) -> bool {
        let n = self.order;
        if n == 0 {
            return false;
        }
        if self.roles().identities.is_empty() {
            return false;
        }
        for i in 0..n {
            let row: BTreeSet<usize> = (0..n).map(|j| self.get(i, j)).collect();
            let col: BTreeSet<usize> = (0..n).map(|j| self.get(j, i)).collect();
            if row.len() != n || col.len() != n {
                return false;
            }
        }
        true
    }

    /// Role sets (zeros, identities, idempotents) per element.
    pub fn roles(&self) -> ElementRoles {
        let n = self.order;
        let mut roles = ElementRoles::default();
        for x in 0..n {
            if (0..n).all(|y| self.get(x, y) == x) {
                roles.left_zeros.insert(x);
            }
            if (0..n).all(|y| self.get(y, x) == x) {
                roles.right_zeros.insert(x);
            }
            if (0..n).all(|y| self.get(x, y) == y) {
                roles.left_identities.insert(x);
            }
            if (0..n).all(|y| self.get(y, x) == y) {
                roles.right_identities.insert(x);
            }
            if self.get(x, x) == x {
                roles.idempotents.insert(x);
            }
        }
        roles.zeros = roles
            .left_zeros
            .intersection(&roles.right_zeros)
            .copied()
            .collect();
        roles.identities = roles
            .left_identities
            .intersection(&roles.right_identities)
            .copied()
            .collect();
        roles
    }

    /// The zero element, if the semigroup has one.
    pub fn zero(&self) -> Option<usize> {
        let n = self.order;
        (0..n).find(|&x| (0..n).all(|y| self.get(x, y) == x && self.get(y, x) == x))
    }

    /// The identity element, if the semigroup has one.
    pub fn identity(&self) -> Option<usize> {
        let n = self.order;
        (0..n).find(|&x| (0..n).all(|y| self.get(x, y) == y && self.get(y, x) == y))
    }

    /// True when `set` is closed under products.
    pub fn is_subsemigroup(&self, set: &BTreeSet<usize>) -> bool {
        set.iter()
            .all(|&x| set.iter().all(|&y| set.contains(&self.get(x, y))))
    }

    /// True when `set` is a two-sided ideal.
    pub fn is_ideal(&self, set: &BTreeSet<usize>) -> bool {
        set.iter().all(|&x| {
            (0..self.order).all(|y| set.contains(&self.get(x, y)) && set.contains(&self.get(y, x)))
        })
    }

    /// The subtable induced on a subsemigroup, with elements reindexed in
    /// increasing order.
    pub fn subtable(&self, set: &BTreeSet<usize>) -> Option<CayleyTable> {
        if !self.is_subsemigroup(set) {
            return None;
        }
        let elems: Vec<usize> = set.iter().copied().collect();
        let pos = |v: usize| elems.iter().position(|&e| e == v).unwrap();
        let m = elems.len();
        let mut entries = Vec::with_capacity(m * m);
        for &x in &elems {
            for &y in &elems {
                entries.push(pos(self.get(x, y)) as u8);
            }
        }
        Some(CayleyTable {
            order: m,
            entries,
            name: None,
        })
    }

    /// Lexicographically minimal relabeling, row-major.
    pub fn canonical_form(&self) -> CayleyTable {
        let n = self.order;
        if n <= 1 {
            return self.clone().unnamed();
        }
        let mut best = self.entries.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut image = vec![0u8; n * n];
        loop {
            // Compare perm(self) with best, writing the image as we go.
            if relabel_less(self, &perm, &best, &mut image) {
                best.copy_from_slice(&image);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        CayleyTable {
            order: n,
            entries: best,
            name: None,
        }
    }

    /// True when the table equals its own canonical form.
    pub fn is_canonical(&self) -> bool {
        let n = self.order;
        if n <= 1 {
            return true;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut image = vec![0u8; n * n];
        loop {
            if relabel_less(self, &perm, &self.entries, &mut image) {
                return false;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        true
    }

    /// Minimum of the canonical forms of the table and its opposite: the
    /// representative of the equivalence (isomorphism or anti-isomorphism)
    /// class.
    pub fn equivalence_canonical_form(&self) -> CayleyTable {
        let a = self.canonical_form();
        let b = self.opposite().canonical_form();
        if a.entries <= b.entries {
            a
        } else {
            b
        }
    }
}

/// Computes `perm(table)` into `image` while comparing with `best`
/// row-major; returns true when strictly smaller. Aborts at the first
/// position that is strictly larger.
fn relabel_less(table: &CayleyTable, perm: &[usize], best: &[u8], image: &mut [u8]) -> bool {
    let n = table.order;
    let mut inv = vec![0usize; n];
    for (x, &px) in perm.iter().enumerate() {
        inv[px] = x;
    }
    let mut less = false;
    for i in 0..n {
        for j in 0..n {
            let v = perm[table.get(inv[i], inv[j])] as u8;
            image[i * n + j] = v;
            if !less {
                if v > best[i * n + j] {
                    return false;
                }
                if v < best[i * n + j] {
                    less = true;
                }
            }
        }
    }
    less
}

/// Advances `perm` to the next permutation in lexicographic order.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Role sets of a semigroup's elements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ElementRoles {
    pub left_zeros: BTreeSet<usize>,
    pub right_zeros: BTreeSet<usize>,
    pub zeros: BTreeSet<usize>,
    pub left_identities: BTreeSet<usize>,
    pub right_identities: BTreeSet<usize>,
    pub identities: BTreeSet<usize>,
    pub idempotents: BTreeSet<usize>,
}

/// Whether a bijection preserves or reverses products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismKind {
    Isomorphism,
    AntiIsomorphism,
}

/// A witness bijection between two semigroups of the same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub map: Vec<usize>,
    pub kind: MorphismKind,
}

impl Morphism {
    /// Composition `other . self` (apply `self` first). Both must be
    /// isomorphisms of the same object for the result to be one.
    pub fn compose(&self, other: &Morphism) -> Vec<usize> {
        self.map.iter().map(|&x| other.map[x]).collect()
    }
}

/// Cheap relabeling invariants used to prune the morphism search.
fn invariants(t: &CayleyTable) -> Vec<(bool, bool, bool, bool, bool, usize, usize)> {
    let n = t.order();
    let roles = t.roles();
    let mut occ = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            occ[t.get(i, j)] += 1;
        }
    }
    (0..n)
        .map(|x| {
            (
                roles.idempotents.contains(&x),
                roles.left_zeros.contains(&x),
                roles.right_zeros.contains(&x),
                roles.left_identities.contains(&x),
                roles.right_identities.contains(&x),
                occ[x],
                // Row profile: how many distinct values the row takes.
                (0..n).map(|j| t.get(x, j)).collect::<BTreeSet<_>>().len(),
            )
        })
        .collect()
}

fn find_isomorphism(a: &CayleyTable, b: &CayleyTable) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let ia = invariants(a);
    let ib = invariants(b);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // Each product constraint (x, y) is checked exactly when the last of
    // x, y, x*y gets its image assigned, so a full assignment is verified.
    fn extend(
        a: &CayleyTable,
        b: &CayleyTable,
        ia: &[(bool, bool, bool, bool, bool, usize, usize)],
        ib: &[(bool, bool, bool, bool, bool, usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
    ) -> bool {
        let n = a.order();
        if depth == n {
            return true;
        }
        'cand: for v in 0..n {
            if used[v] || ia[depth] != ib[v] {
                continue;
            }
            map[depth] = v;
            used[v] = true;
            for x in 0..=depth {
                for y in 0..=depth {
                    let p = a.get(x, y);
                    if x.max(y).max(p) == depth {
                        if b.get(map[x], map[y]) != map[p] {
                            map[depth] = usize::MAX;
                            used[v] = false;
                            continue 'cand;
                        }
                    }
                }
            }
            if extend(a, b, ia, ib, map, used, depth + 1) {
                return true;
            }
            map[depth] = usize::MAX;
            used[v] = false;
        }
        false
    }
    if extend(a, b, &ia, &ib, &mut map, &mut used, 0) {
        Some(map)
    } else {
        None
    }
}

/// Searches for a bijection of the requested kind between two tables of the
/// same order. Absence is a value, not an error.
pub fn find_morphism(a: &CayleyTable, b: &CayleyTable, kind: MorphismKind) -> Option<Morphism> {
    let map = match kind {
        MorphismKind::Isomorphism => find_isomorphism(a, b)?,
        // An anti-isomorphism a -> b is an isomorphism a -> b^op.
        MorphismKind::AntiIsomorphism => find_isomorphism(a, &b.opposite())?,
    };
    Some(Morphism { map, kind })
}

/// True when the two tables are isomorphic or anti-isomorphic.
pub fn equivalent(a: &CayleyTable, b: &CayleyTable) -> bool {
    find_morphism(a, b, MorphismKind::Isomorphism).is_some()
        || find_morphism(a, b, MorphismKind::AntiIsomorphism).is_some()
}

/// All automorphisms of a table, found by exhaustive backtracking.
pub fn automorphism_group(t: &CayleyTable) -> Vec<Morphism> {
    let n = t.order();
    if n == 0 {
        return vec![Morphism {
            map: Vec::new(),
            kind: MorphismKind::Isomorphism,
        }];
    }
    let inv = invariants(t);
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        t: &CayleyTable,
        inv: &[(bool, bool, bool, bool, bool, usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
        out: &mut Vec<Morphism>,
    ) {
        let n = t.order();
        if depth == n {
            out.push(Morphism {
                map: map.clone(),
                kind: MorphismKind::Isomorphism,
            });
            return;
        }
        'cand: for v in 0..n {
            if used[v] || inv[depth] != inv[v] {
                continue;
            }
            map[depth] = v;
            used[v] = true;
            for x in 0..=depth {
                for y in 0..=depth {
                    let p = t.get(x, y);
                    if x.max(y).max(p) == depth && t.get(map[x], map[y]) != map[p] {
                        map[depth] = usize::MAX;
                        used[v] = false;
                        continue 'cand;
                    }
                }
            }
            extend(t, inv, map, used, depth + 1, out);
            map[depth] = usize::MAX;
            used[v] = false;
        }
    }
    extend(t, &inv, &mut map, &mut used, 0, &mut out);
    out
}

// ---------------------------------------------------------------------------
// `.cay` text format
// ---------------------------------------------------------------------------

/// Metadata carried by `.cay` comment lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CayMeta {
    pub name: Option<String>,
    pub forsythe: Option<usize>,
    pub gap: Option<usize>,
}

/// Serializes one table (with optional metadata) in `.cay` form.
pub fn write_cay(t: &CayleyTable, meta: &CayMeta, out: &mut String) {
    if let Some(name) = &meta.name {
        out.push_str("# name: ");
        out.push_str(name);
        out.push('\n');
    }
    if let Some(f) = meta.forsythe {
        out.push_str(&format!("# forsythe: {f:03}\n"));
    }
    if let Some(g) = meta.gap {
        out.push_str(&format!("# gap: {g}\n"));
    }
    out.push_str(&format!("{}\n", t.order()));
    for i in 0..t.order() {
        let row: Vec<String> = (0..t.order()).map(|j| t.get(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// Serializes a stream of tables, records separated by one blank line.
pub fn write_cay_stream(records: &[(CayleyTable, CayMeta)]) -> String {
    let mut out = String::new();
    for (idx, (t, meta)) in records.iter().enumerate() {
        if idx > 0 {
            out.push('\n');
        }
        write_cay(t, meta, &mut out);
    }
    out
}

/// Parses a `.cay` stream into validated tables with their metadata.
pub fn parse_cay_stream(input: &str) -> Result<Vec<(CayleyTable, CayMeta)>, CayParseError> {
    let mut records = Vec::new();
    let mut lines = input.lines().enumerate().peekable();
    loop {
        // Skip blank separators.
        while matches!(lines.peek(), Some((_, l)) if l.trim().is_empty()) {
            lines.next();
        }
        let Some(&(start, _)) = lines.peek() else {
            break;
        };
        let mut meta = CayMeta::default();
        // Leading comment lines.
        while matches!(lines.peek(), Some((_, l)) if l.trim_start().starts_with('#')) {
            let (lineno, l) = lines.next().unwrap();
            let body = l.trim_start().trim_start_matches('#').trim();
            if let Some((key, value)) = body.split_once(':') {
                let value = value.trim();
                match key.trim() {
                    "name" => meta.name = Some(value.to_string()),
                    "forsythe" => {
                        meta.forsythe =
                            Some(value.parse().map_err(|_| CayParseError::Syntax {
                                line: lineno + 1,
                                msg: format!("bad forsythe index `{value}`"),
                            })?)
                    }
                    "gap" => {
                        meta.gap = Some(value.parse().map_err(|_| CayParseError::Syntax {
                            line: lineno + 1,
                            msg: format!("bad gap id `{value}`"),
                        })?)
                    }
                    _ => {} // unknown keys are ignored
                }
            }
        }
        let Some((lineno, header)) = lines.next() else {
            return Err(CayParseError::Syntax {
                line: start + 1,
                msg: "missing order line".into(),
            });
        };
        let order: usize = header.trim().parse().map_err(|_| CayParseError::Syntax {
            line: lineno + 1,
            msg: format!("expected order, got `{}`", header.trim()),
        })?;
        let mut rows = Vec::with_capacity(order);
        for _ in 0..order {
            let Some((lineno, l)) = lines.next() else {
                return Err(CayParseError::Syntax {
                    line: start + 1,
                    msg: format!("record truncated: expected {order} rows"),
                });
            };
            let row: Result<Vec<usize>, _> =
                l.split_whitespace().map(|w| w.parse::<usize>()).collect();
            let row = row.map_err(|_| CayParseError::Syntax {
                line: lineno + 1,
                msg: format!("bad row `{l}`"),
            })?;
            if row.len() != order {
                return Err(CayParseError::Syntax {
                    line: lineno + 1,
                    msg: format!("expected {} entries, got {}", order, row.len()),
                });
            }
            rows.push(row);
        }
        let mut table = CayleyTable::validate(&rows).map_err(|e| CayParseError::Invalid {
            line: start + 1,
            source: e,
        })?;
        if let Some(name) = &meta.name {
            table = table.named(name.clone());
        }
        records.push((table, meta));
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, Family};

    fn t(rows: &[&[usize]]) -> CayleyTable {
        CayleyTable::validate(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn validate_accepts_small_semigroups() {
        // O_2, Z_2, CH_2 (max form).
        t(&[&[0, 0], &[0, 0]]);
        t(&[&[0, 1], &[1, 0]]);
        t(&[&[0, 1], &[1, 1]]);
    }

    #[test]
    fn validate_rejects_with_witness() {
        let rows = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 2]];
        match CayleyTable::validate(&rows) {
            Err(TableError::NotAssociative { i, j, k }) => {
                let at = |a: usize, b: usize| rows[a][b];
                assert_ne!(at(at(i, j), k), at(i, at(j, k)));
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
        let oob = vec![vec![0, 3], vec![0, 0]];
        assert!(matches!(
            CayleyTable::validate(&oob),
            Err(TableError::EntryOutOfRange { value: 3, .. })
        ));
    }

    #[test]
    fn order_zero_is_legal() {
        let e = CayleyTable::validate(&[]).unwrap();
        assert_eq!(e.order(), 0);
        assert_eq!(e.canonical_form(), e);
        assert_eq!(e.opposite(), e);
    }

    #[test]
    fn roles_match_definitions() {
        let o3 = families::build(&Family::O(3)).unwrap();
        let r = o3.roles();
        assert_eq!(r.zeros.iter().copied().collect::<Vec<_>>(), vec![0]);
        assert_eq!(r.idempotents.iter().copied().collect::<Vec<_>>(), vec![0]);

        // Every element of LO_3 is a left-zero and a right-identity.
        let lo3 = families::build(&Family::LO(3)).unwrap();
        let r = lo3.roles();
        assert_eq!(r.left_zeros.len(), 3);
        assert_eq!(r.right_identities.len(), 3);
        assert_eq!(r.idempotents.len(), 3);
        assert!(r.zeros.is_empty());

        let z2e = families::build_str("e(Z(2))").unwrap();
        let r = z2e.roles();
        assert_eq!(r.identities.len(), 1);
        assert!(r.zeros.is_empty());
    }

    #[test]
    fn opposite_is_involution() {
        for spec in ["LO(2)", "Z(3)", "ORO(2,1)", "K1(2)"] {
            let t = families::build_str(spec).unwrap();
            assert_eq!(t.opposite().opposite(), t.clone().unnamed());
        }
        let lo2 = families::build_str("LO(2)").unwrap();
        let ro2 = families::build_str("RO(2)").unwrap();
        assert_eq!(lo2.opposite(), ro2.unnamed());
        let z3 = families::build_str("Z(3)").unwrap();
        assert_eq!(z3.opposite(), z3.clone().unnamed());
    }

    #[test]
    fn canonical_form_is_relabeling_invariant_and_idempotent() {
        let o3 = families::build(&Family::O(3)).unwrap();
        let canon = o3.canonical_form();
        // Brute-force oracle: minimum over all 6 relabelings.
        let mut perms = vec![];
        let mut p = vec![0, 1, 2];
        loop {
            perms.push(p.clone());
            if !next_permutation(&mut p) {
                break;
            }
        }
        assert_eq!(perms.len(), 6);
        let oracle = perms
            .iter()
            .map(|q| o3.relabel(q))
            .min_by(|a, b| a.entries.cmp(&b.entries))
            .unwrap();
        assert_eq!(canon, oracle);
        for q in &perms {
            assert_eq!(o3.relabel(q).canonical_form(), canon);
        }
        assert_eq!(canon.canonical_form(), canon);
        // The zero lands at index 0.
        assert_eq!(canon.zero(), Some(0));
    }

    #[test]
    fn equivalence_canonical_merges_opposites() {
        let lo2 = families::build_str("LO(2)").unwrap();
        let ro2 = families::build_str("RO(2)").unwrap();
        assert_eq!(
            lo2.equivalence_canonical_form(),
            ro2.equivalence_canonical_form()
        );
    }

    #[test]
    fn morphism_search_matches_canonical_forms() {
        let a = families::build_str("LO(2)").unwrap();
        let b = families::build_str("RO(2)").unwrap();
        assert!(find_morphism(&a, &b, MorphismKind::Isomorphism).is_none());
        let m = find_morphism(&a, &b, MorphismKind::AntiIsomorphism).unwrap();
        assert_eq!(m.kind, MorphismKind::AntiIsomorphism);
        // Anti-isomorphism witness: map(i*j) = map(j) * map(i).
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.map[a.get(i, j)], b.get(m.map[j], m.map[i]));
            }
        }

        let z4 = families::build_str("Z(4)").unwrap();
        let v4 = families::build_str("prod(Z(2),Z(2))").unwrap();
        assert!(find_morphism(&z4, &v4, MorphismKind::Isomorphism).is_none());

        // Exhausting both bijections of a 2-set: CH_2 and Z_2 differ.
        let ch2 = families::build_str("CH(2)").unwrap();
        let z2 = families::build_str("Z(2)").unwrap();
        assert!(find_morphism(&ch2, &z2, MorphismKind::Isomorphism).is_none());
    }

    #[test]
    fn iso_presence_iff_equal_canonical_forms() {
        let tables: Vec<CayleyTable> = [
            "O(3)",
            "LO(3)",
            "RO(3)",
            "CH(3)",
            "Z(3)",
            "K1(2)",
            "Zmn(2,2)",
            "e(Z(2))",
        ]
        .iter()
        .map(|s| families::build_str(s).unwrap())
        .collect();
        for a in &tables {
            for b in &tables {
                let iso = find_morphism(a, b, MorphismKind::Isomorphism).is_some();
                assert_eq!(iso, a.canonical_form() == b.canonical_form());
                let equiv = equivalent(a, b);
                assert_eq!(
                    equiv,
                    a.equivalence_canonical_form() == b.equivalence_canonical_form()
                );
            }
        }
    }

    #[test]
    fn automorphism_groups_of_named_families() {
        let o3 = families::build_str("O(3)").unwrap();
        assert_eq!(automorphism_group(&o3).len(), 2);
        let lo3 = families::build_str("LO(3)").unwrap();
        assert_eq!(automorphism_group(&lo3).len(), 6);
        let z4 = families::build_str("Z(4)").unwrap();
        assert_eq!(automorphism_group(&z4).len(), 2);
    }

    #[test]
    fn automorphisms_form_a_group() {
        let t = families::build_str("prod(LO(2),RO(2))").unwrap();
        let auts = automorphism_group(&t);
        assert_eq!(auts.len(), 4);
        let maps: BTreeSet<Vec<usize>> = auts.iter().map(|m| m.map.clone()).collect();
        // Contains the identity, closed under composition and inverse.
        assert!(maps.contains(&(0..t.order()).collect::<Vec<_>>()));
        for a in &auts {
            for b in &auts {
                assert!(maps.contains(&a.compose(b)));
            }
            let mut inv = vec![0usize; t.order()];
            for (x, &y) in a.map.iter().enumerate() {
                inv[y] = x;
            }
            assert!(maps.contains(&inv));
        }
    }

    #[test]
    fn cay_round_trip() {
        let records: Vec<(CayleyTable, CayMeta)> = [
            ("O(3)", "O_3"),
            ("LO(3)", "LO_3"),
            ("Z(3)", "Z_3"),
        ]
        .iter()
        .enumerate()
        .map(|(i, (spec, name))| {
            let t = families::build_str(spec).unwrap();
            (
                t,
                CayMeta {
                    name: Some(name.to_string()),
                    forsythe: Some(i),
                    gap: None,
                },
            )
        })
        .collect();
        let text = write_cay_stream(&records);
        let parsed = parse_cay_stream(&text).unwrap();
        assert_eq!(parsed.len(), records.len());
        for ((t, m), (t2, m2)) in records.iter().zip(&parsed) {
            assert_eq!(t.entries(), t2.entries());
            assert_eq!(m, m2);
        }
        // Byte-identical round trip.
        assert_eq!(write_cay_stream(&parsed), text);
    }

    #[test]
    fn cay_rejects_bad_input() {
        let bad = "2\n0 1\n1 2\n";
        assert!(matches!(
            parse_cay_stream(bad),
            Err(CayParseError::Invalid { .. })
        ));
        let nonassoc = "3\n0 1 2\n1 2 0\n2 0 2\n";
        match parse_cay_stream(nonassoc) {
            Err(CayParseError::Invalid { source, .. }) => {
                assert!(matches!(source, TableError::NotAssociative { .. }));
            }
            other => panic!("expected invalid record, got {other:?}"),
        }
        let truncated = "3\n0 0 0\n0 0 0\n";
        assert!(matches!(
            parse_cay_stream(truncated),
            Err(CayParseError::Syntax { .. })
        ));
    }
}
