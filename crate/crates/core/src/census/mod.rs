//! Census of finite semigroups: generation up to equivalence, lexicographic
//! ranking, catalog import/export, and the order-4 GAP crosswalk.
//!
//! Generation fills Cayley tables cell by cell in row-major order with
//! incremental associativity checking and lexicographic minimality pruning,
//! keeping one representative per isomorphism class (the lex-minimal
//! table); anti-isomorphic duplicates are removed in a final pass. Records
//! are sorted by table and indexed from 0, which reproduces the classical
//! lexicographic ordering of the small-semigroup catalogs.

mod generate;

pub use generate::{generate_minimal_tables, GenerateOptions};

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cayley::{parse_cay_stream, write_cay_stream, CayMeta, CayParseError, CayleyTable};
use crate::reference;

/// Hard cap on from-scratch generation; larger orders must be imported.
pub const MAX_GENERATED_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("census generation is capped at order {MAX_GENERATED_ORDER} (requested {0})")]
    OrderTooLarge(usize),
    #[error(transparent)]
    Parse(#[from] CayParseError),
    #[error("checkpoint io: {0}")]
    Checkpoint(String),
}

/// One row of the census: a canonical table with its rank and metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    /// 0-based rank of the table in lexicographic order.
    pub forsythe: usize,
    pub table: CayleyTable,
    /// GAP smallsemi id, known for order 4 from the embedded crosswalk.
    pub gap: Option<usize>,
    /// Family label, known for orders <= 4.
    pub family: Option<String>,
}

/// Generates all semigroups of order `n` up to equivalence (isomorphism or
/// anti-isomorphism), one lexicographically minimal table per class, sorted
/// and ranked.
pub fn generate_all(n: usize) -> Result<Vec<CensusRecord>, CensusError> {
    generate_all_jobs(n, 1, None)
}

/// As [`generate_all`] with a worker count and an optional checkpoint
/// directory (progress dumps every 10^4 accepted tables per worker).
pub fn generate_all_jobs(
    n: usize,
    jobs: usize,
    checkpoint_dir: Option<&std::path::Path>,
) -> Result<Vec<CensusRecord>, CensusError> {
    if n > MAX_GENERATED_ORDER {
        return Err(CensusError::OrderTooLarge(n));
    }
    let mut tables = generate_minimal_tables(&GenerateOptions {
        order: n,
        jobs: jobs.max(1),
        checkpoint_dir: checkpoint_dir.map(|p| p.to_path_buf()),
    })?;
    // Anti-isomorphism dedup: keep a table only when it is the minimum of
    // its equivalence class.
    tables.retain(|t| {
        let op_canon = t.opposite().canonical_form();
        t.entries() <= op_canon.entries()
    });
    tables.sort();
    Ok(rank_tables(n, tables))
}

fn rank_tables(n: usize, tables: Vec<CayleyTable>) -> Vec<CensusRecord> {
    tables
        .into_iter()
        .enumerate()
        .map(|(idx, table)| CensusRecord {
            forsythe: idx,
            gap: reference::gap_of_forsythe(n, idx),
            family: reference::family_label(n, idx).map(str::to_string),
            table,
        })
        .collect()
}

/// Looks up the GAP smallsemi id of an order-4 census record.
pub fn crosswalk_gap(record: &CensusRecord) -> Option<usize> {
    if record.table.order() == 4 {
        reference::gap_of_forsythe(4, record.forsythe)
    } else {
        None
    }
}

/// Parses a `.cay` stream into census records. Tables are validated on
/// parse; ranks and metadata come from the stream when present, otherwise
/// from the record position.
pub fn import_tables(input: &str) -> Result<Vec<CensusRecord>, CensusError> {
    let parsed = parse_cay_stream(input)?;
    Ok(parsed
        .into_iter()
        .enumerate()
        .map(|(idx, (table, meta))| CensusRecord {
            forsythe: meta.forsythe.unwrap_or(idx),
            gap: meta.gap,
            family: meta.name,
            table,
        })
        .collect())
}

/// Serializes census records as a `.cay` stream; `import_tables` composed
/// with `export_tables` is the identity on such streams.
pub fn export_tables(records: &[CensusRecord]) -> String {
    let stream: Vec<(CayleyTable, CayMeta)> = records
        .iter()
        .map(|r| {
            (
                r.table.clone(),
                CayMeta {
                    name: r.family.clone(),
                    forsythe: Some(r.forsythe),
                    gap: r.gap,
                },
            )
        })
        .collect();
    write_cay_stream(&stream)
}

/// Re-ranks imported tables the census way: canonicalize each table up to
/// equivalence, dedup, sort, index from 0.
pub fn rank_imported(records: Vec<CensusRecord>) -> Vec<CensusRecord> {
    let order = records.first().map_or(0, |r| r.table.order());
    let set: BTreeSet<CayleyTable> = records
        .into_iter()
        .map(|r| r.table.equivalence_canonical_form())
        .collect();
    rank_tables(order, set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn tiny_census_counts() {
        assert_eq!(generate_all(0).unwrap().len(), 1);
        assert_eq!(generate_all(1).unwrap().len(), 1);
        assert_eq!(generate_all(2).unwrap().len(), 4);
        assert_eq!(generate_all(3).unwrap().len(), 18);
    }

    #[test]
    fn order_two_rows_in_catalog_order() {
        let records = generate_all(2).unwrap();
        let expect = ["O(2)", "CH(2)", "LO(2)", "Z(2)"];
        for (record, spec) in records.iter().zip(expect) {
            let t = families::build_str(spec).unwrap();
            assert_eq!(
                record.table,
                t.equivalence_canonical_form(),
                "row {} should be {spec}",
                record.forsythe
            );
        }
    }

    #[test]
    fn generated_tables_are_equivalence_canonical_and_distinct() {
        for n in 2..=4 {
            let records = generate_all(n).unwrap();
            for (idx, r) in records.iter().enumerate() {
                assert_eq!(r.forsythe, idx);
                assert_eq!(r.table, r.table.equivalence_canonical_form());
            }
            for w in records.windows(2) {
                assert!(w[0].table < w[1].table, "sorted and distinct");
            }
        }
    }

    #[test]
    fn jobs_do_not_change_generation() {
        let one = generate_all_jobs(4, 1, None).unwrap();
        let four = generate_all_jobs(4, 4, None).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn order_cap_enforced() {
        assert!(matches!(
            generate_all(7),
            Err(CensusError::OrderTooLarge(7))
        ));
    }

    #[test]
    fn import_export_round_trip() {
        let records = generate_all(3).unwrap();
        let text = export_tables(&records);
        let imported = import_tables(&text).unwrap();
        assert_eq!(imported.len(), 18);
        assert_eq!(export_tables(&imported), text);
        for (a, b) in records.iter().zip(&imported) {
            assert_eq!(a.forsythe, b.forsythe);
            assert_eq!(a.table.entries(), b.table.entries());
        }
    }

    #[test]
    fn import_rejects_bad_tables() {
        let bad = "3\n0 1 2\n1 2 0\n2 0 2\n";
        assert!(matches!(import_tables(bad), Err(CensusError::Parse(_))));
    }

    #[test]
    fn ranking_imported_non_canonical_tables() {
        // Scramble some order-3 tables; ranking must land back on the
        // census order.
        let records = generate_all(3).unwrap();
        let scrambled: Vec<CensusRecord> = records
            .iter()
            .map(|r| {
                let perm: Vec<usize> = (0..3).rev().collect();
                CensusRecord {
                    forsythe: 99,
                    gap: None,
                    family: None,
                    table: r.table.relabel(&perm),
                }
            })
            .collect();
        let ranked = rank_imported(scrambled);
        assert_eq!(ranked.len(), records.len());
        for (a, b) in ranked.iter().zip(&records) {
            assert_eq!(a.forsythe, b.forsythe);
            assert_eq!(a.table, b.table);
        }
    }
}
