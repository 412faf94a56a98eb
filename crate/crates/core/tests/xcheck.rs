// Temporary cross-check (will become part of the acceptance suite).
use semischur::census;
use semischur::families;
use semischur::reference;
use semischur::schur::{enumerate_schur_rings, SchurMode, Strategy};

#[test]
fn xcheck_catalog_rows() {
    for n in [3usize, 4] {
        let records = census::generate_all(n).unwrap();
        let mut bad = 0;
        for r in &records {
            let rings = enumerate_schur_rings(&r.table, SchurMode::Semigroup, Strategy::Pruned, None).unwrap();
            let mut got: Vec<usize> = rings.rings.iter().map(|p| p.paper_index().unwrap()).collect();
            got.sort();
            let want: Vec<usize> = match n {
                3 => reference::ORDER3_ROWS[r.forsythe].2.to_vec(),
                _ => reference::ORDER4_ROWS[r.forsythe].1.to_vec(),
            };
            if got != want {
                bad += 1;
                println!("order {n} rank {:03}: engine rings {:?} vs table {:?}", r.forsythe, got, want);
            }
            let spec = reference::family_label(n, r.forsythe).unwrap();
            match families::build_str(spec) {
                Ok(t) => {
                    let canon = t.equivalence_canonical_form();
                    if canon != r.table {
                        let actual = records.iter().position(|x| x.table == canon);
                        println!("order {n} rank {:03}: label `{spec}` lands on {:?}", r.forsythe, actual);
                        bad += 1;
                    }
                }
                Err(e) => { println!("order {n} rank {:03}: label `{spec}` fails: {e}", r.forsythe); bad += 1; }
            }
        }
        println!("order {n}: {bad} mismatches");
        assert_eq!(bad, 0, "order {n} catalog mismatches");
    }
}
