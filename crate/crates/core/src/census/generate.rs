//! Orderly generation of lexicographically minimal Cayley tables.
//!
//! The table is filled in row-major order. Two prunes drive the search:
//!
//! * associativity, checked incrementally -- a triple is tested the moment
//!   the last of the four cells it references is assigned;
//! * minimality, tested against every relabeling permutation -- a partial
//!   table whose permuted image is conclusively smaller on the filled
//!   prefix can never complete to a lex-minimal table.
//!
//! The permutation sweep runs at row boundaries (and in full at the
//! leaves), which keeps its cost a small fraction of the associativity
//! work. Accepted leaves are exactly the minimal representatives of the
//! isomorphism classes; the anti-isomorphism pass happens in the caller.
//!
//! Work splits across threads at first-row assignments: the row-0
//! candidates are enumerated up front and handed to workers through an
//! atomic cursor, and per-candidate outputs are concatenated in candidate
//! order so the result is independent of the worker count.

use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::cayley::{next_permutation, CayleyTable};

use super::CensusError;

const UNSET: u8 = u8::MAX;
const CHECKPOINT_EVERY: usize = 10_000;

#[derive(Debug, Clone)]
pub struct GenerateOptions {
    pub order: usize,
    pub jobs: usize,
    pub checkpoint_dir: Option<PathBuf>,
}

struct Perms {
    /// (perm, inverse) pairs for every non-identity permutation.
    pairs: Vec<(Vec<u8>, Vec<u8>)>,
}

fn all_perms(n: usize) -> Perms {
    let mut pairs = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        if p.iter().enumerate().any(|(i, &v)| i != v) {
            let mut inv = vec![0u8; n];
            for (i, &v) in p.iter().enumerate() {
                inv[v] = i as u8;
            }
            pairs.push((p.iter().map(|&v| v as u8).collect(), inv));
        }
        if !next_permutation(&mut p) {
            break;
        }
    }
    Perms { pairs }
}

/// True when `left == right` may still fail: checks the triple (a, b, c)
/// if all referenced cells are set; unset cells defer the check.
#[inline]
fn triple_ok(t: &[u8], n: usize, a: usize, b: usize, c: usize) -> bool {
    let ab = t[a * n + b];
    if ab == UNSET {
        return true;
    }
    let bc = t[b * n + c];
    if bc == UNSET {
        return true;
    }
    let left = t[ab as usize * n + c];
    if left == UNSET {
        return true;
    }
    let right = t[a * n + bc as usize];
    if right == UNSET {
        return true;
    }
    left == right
}

/// All associativity constraints that become decidable when cell (i, j) is
/// assigned.
fn assoc_ok(t: &[u8], n: usize, i: usize, j: usize) -> bool {
    for c in 0..n {
        if !triple_ok(t, n, i, j, c) || !triple_ok(t, n, c, i, j) {
            return false;
        }
    }
    // The new cell may close a triple as an outer product: (a, b, j) when
    // a*b = i, and (i, b, c) when b*c = j.
    for a in 0..n {
        for b in 0..n {
            let ab = t[a * n + b];
            if ab as usize == i && !triple_ok(t, n, a, b, j) {
                return false;
            }
            if ab as usize == j && !triple_ok(t, n, i, a, b) {
                return false;
            }
        }
    }
    true
}

/// True when some permuted image of the filled prefix is conclusively
/// smaller than the prefix itself (so no completion is minimal).
fn dominated(t: &[u8], n: usize, filled: usize, perms: &Perms) -> bool {
    'perm: for (perm, inv) in &perms.pairs {
        for q in 0..filled {
            let (i, j) = (q / n, q % n);
            let src = t[inv[i] as usize * n + inv[j] as usize];
            if src == UNSET {
                continue 'perm; // image undetermined here: inconclusive
            }
            let v = perm[src as usize];
            match v.cmp(&t[q]) {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => continue 'perm,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    false
}

struct Search<'a> {
    n: usize,
    perms: &'a Perms,
    table: Vec<u8>,
    out: Vec<CayleyTable>,
    accepted: usize,
    checkpoint: Option<CheckpointFile>,
}

struct CheckpointFile {
    file: std::fs::File,
    pending: String,
}

impl<'a> Search<'a> {
    fn fill(&mut self, pos: usize) {
        let n = self.n;
        if pos == n * n {
            if !dominated(&self.table, n, pos, self.perms) {
                let rows: Vec<Vec<usize>> = (0..n)
                    .map(|i| (0..n).map(|j| self.table[i * n + j] as usize).collect())
                    .collect();
                let t = CayleyTable::validate(&rows)
                    .expect("incremental checks guarantee a valid table");
                self.accepted += 1;
                if let Some(cp) = &mut self.checkpoint {
                    let mut text = String::new();
                    crate::cayley::write_cay(&t, &Default::default(), &mut text);
                    text.push('\n');
                    cp.pending.push_str(&text);
                    if self.accepted % CHECKPOINT_EVERY == 0 {
                        let _ = cp.file.write_all(cp.pending.as_bytes());
                        let _ = cp.file.flush();
                        cp.pending.clear();
                    }
                }
                self.out.push(t);
            }
            return;
        }
        let (i, j) = (pos / n, pos % n);
        // The minimal table always has an idempotent at 0.
        let values: std::ops::Range<u8> = if pos == 0 { 0..1 } else { 0..n as u8 };
        for v in values {
            self.table[pos] = v;
            if assoc_ok(&self.table, n, i, j) {
                // Permutation sweep once per completed row.
                let at_row_end = j == n - 1;
                if !at_row_end || !dominated(&self.table, n, pos + 1, self.perms) {
                    self.fill(pos + 1);
                }
            }
        }
        self.table[pos] = UNSET;
    }

    fn finish(mut self) -> Vec<CayleyTable> {
        if let Some(cp) = &mut self.checkpoint {
            if !cp.pending.is_empty() {
                let _ = cp.file.write_all(cp.pending.as_bytes());
                let _ = cp.file.flush();
            }
        }
        self.out
    }
}

/// Enumerates the row-0 candidates: assignments of the first row that pass
/// the incremental checks and the row-boundary domination test.
fn first_rows(n: usize, perms: &Perms) -> Vec<Vec<u8>> {
    let mut rows = Vec::new();
    let mut table = vec![UNSET; n * n];
    fn rec(table: &mut Vec<u8>, n: usize, pos: usize, perms: &Perms, rows: &mut Vec<Vec<u8>>) {
        if pos == n {
            if !dominated(table, n, n, perms) {
                rows.push(table[..n].to_vec());
            }
            return;
        }
        let values: std::ops::Range<u8> = if pos == 0 { 0..1 } else { 0..n as u8 };
        for v in values {
            table[pos] = v;
            if assoc_ok(table, n, 0, pos) {
                rec(table, n, pos + 1, perms, rows);
            }
        }
        table[pos] = UNSET;
    }
    rec(&mut table, n, 0, perms, &mut rows);
    rows
}

/// Generates all lexicographically minimal associative tables of the given
/// order (one per isomorphism class).
pub fn generate_minimal_tables(opts: &GenerateOptions) -> Result<Vec<CayleyTable>, CensusError> {
    let n = opts.order;
    if n == 0 {
        return Ok(vec![CayleyTable::validate(&[]).expect("empty table")]);
    }
    if n == 1 {
        return Ok(vec![CayleyTable::validate(&[vec![0]]).expect("trivial table")]);
    }
    let perms = all_perms(n);
    let starts = first_rows(n, &perms);
    let jobs = opts.jobs.min(starts.len()).max(1);
    let open_checkpoint = |worker: usize| -> Result<Option<CheckpointFile>, CensusError> {
        match &opts.checkpoint_dir {
            None => Ok(None),
            Some(dir) => {
                std::fs::create_dir_all(dir)
                    .map_err(|e| CensusError::Checkpoint(e.to_string()))?;
                let path = dir.join(format!("order{n}-worker{worker}.cay"));
                let file = std::fs::File::create(&path)
                    .map_err(|e| CensusError::Checkpoint(e.to_string()))?;
                Ok(Some(CheckpointFile {
                    file,
                    pending: String::new(),
                }))
            }
        }
    };
    if jobs == 1 {
        let mut search = Search {
            n,
            perms: &perms,
            table: vec![UNSET; n * n],
            out: Vec::new(),
            accepted: 0,
            checkpoint: open_checkpoint(0)?,
        };
        for row in &starts {
            search.table[..n].copy_from_slice(row);
            search.fill(n);
        }
        return Ok(search.finish());
    }
    let cursor = AtomicUsize::new(0);
    let slots: Vec<Mutex<Vec<CayleyTable>>> =
        (0..starts.len()).map(|_| Mutex::new(Vec::new())).collect();
    let checkpoint_err: Mutex<Option<CensusError>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for worker in 0..jobs {
            let cursor = &cursor;
            let slots = &slots;
            let starts = &starts;
            let perms = &perms;
            let checkpoint_err = &checkpoint_err;
            let checkpoint = match open_checkpoint(worker) {
                Ok(cp) => cp,
                Err(e) => {
                    *checkpoint_err.lock().unwrap() = Some(e);
                    continue;
                }
            };
            scope.spawn(move || {
                let mut search = Search {
                    n,
                    perms,
                    table: vec![UNSET; n * n],
                    out: Vec::new(),
                    accepted: 0,
                    checkpoint,
                };
                loop {
                    let idx = cursor.fetch_add(1, Ordering::Relaxed);
                    if idx >= starts.len() {
                        break;
                    }
                    search.table[..n].copy_from_slice(&starts[idx]);
                    search.fill(n);
                    let produced = std::mem::take(&mut search.out);
                    *slots[idx].lock().unwrap() = produced;
                }
                let _ = search.finish();
            });
        }
    });
    if let Some(e) = checkpoint_err.into_inner().unwrap() {
        return Err(e);
    }
    let mut out = Vec::new();
    for slot in slots {
        out.extend(slot.into_inner().unwrap());
    }
    Ok(out)
}
