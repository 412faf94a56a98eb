use super::*;
use crate::schur::{enumerate_schur_rings, omega, SchurMode, Strategy};

fn omega_of(t: &CayleyTable) -> usize {
    omega(t, SchurMode::Semigroup).unwrap()
}

#[test]
fn atomic_tables_match_definitions() {
    let lo3 = build_str("LO(3)").unwrap();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(lo3.get(i, j), i);
        }
    }
    let ro2 = build_str("RO(2)").unwrap();
    assert_eq!(ro2.entries(), &[0, 1, 0, 1]);
    // Chain with the absorbing end first.
    let ch3 = build_str("CH(3)").unwrap();
    assert_eq!(ch3.zero(), Some(0));
    assert_eq!(ch3.identity(), Some(2));
    // Star semilattice: idempotents over a zero.
    let k12 = build_str("K1(2)").unwrap();
    assert_eq!(k12.entries(), &[0, 0, 0, 0, 1, 0, 0, 0, 2]);
}

#[test]
fn encoded_block_families() {
    // The 6x6 table with bottom-right block [[1,3],[2,3]].
    let t = build_str("Onk(4,2,123)").unwrap();
    assert_eq!(t.order(), 6);
    for (x, y, want) in [(4, 4, 1), (4, 5, 3), (5, 4, 2), (5, 5, 3)] {
        assert_eq!(t.get(x, y), want);
    }
    for x in 0..6 {
        for y in 0..4 {
            assert_eq!(t.get(x, y), 0);
            assert_eq!(t.get(y, x), 0);
        }
    }

    // k = 6 decodes to the block [[0,1],[1,0]] over the middle band.
    let t = build_str("LOO(2,2,2,6)").unwrap();
    assert_eq!(t.order(), 6);
    for (x, y, want) in [(4, 2, 0), (4, 3, 1), (5, 2, 1), (5, 3, 0)] {
        assert_eq!(t.get(x, y), want);
    }
    for x in 0..4 {
        for y in 0..6 {
            assert_eq!(t.get(x, y), x, "left-null band");
        }
    }

    let t = build_str("LORO(2,1,2,1)").unwrap();
    assert_eq!(t.order(), 5);
    assert_eq!(t.get(3, 2), 0);
    assert_eq!(t.get(4, 2), 1);
    assert_eq!(t.get(3, 0), 0);
    assert_eq!(t.get(3, 4), 4);

    // Out-of-range block codes are rejected.
    assert!(matches!(
        build_str("Onk(2,2,16)"),
        Err(FamilyError::BadParameter(_))
    ));
}

#[test]
fn normalization_shrinks_unused_top_elements() {
    // O(3,1,0): the single product row is all zero, so both non-zero
    // null elements migrate into the encoded block.
    let f = parse("Onk(3,1,0)").unwrap();
    let norm = normalize(&f).unwrap();
    assert_eq!(norm, Family::Onk(1, 3, 0));
    // The normalized spec builds an isomorphic table.
    assert_eq!(
        build(&f).unwrap().canonical_form(),
        build(&norm).unwrap().canonical_form()
    );
    // A block that uses its top element stays put.
    let f = parse("Onk(4,2,123)").unwrap();
    assert_eq!(normalize(&f).unwrap(), f);
    // LOO: k = 6 uses digit 1, so l stays 2.
    let f = parse("LOO(2,2,2,6)").unwrap();
    assert_eq!(normalize(&f).unwrap(), f);
    let f = parse("LOO(2,2,1,0)").unwrap();
    let norm = normalize(&f).unwrap();
    assert_eq!(norm, Family::LOO(1, 3, 1, 0));
    assert_eq!(
        build(&f).unwrap().canonical_form(),
        build(&norm).unwrap().canonical_form()
    );
}

#[test]
fn clone_examples() {
    // Cloning both elements of the 2-element group gives three Schur
    // rings: the two lifted from the base plus the fully discrete one.
    let t = build_str("clone(clone(Z(2), x=0), x=1)").unwrap();
    assert_eq!(omega_of(&t), 3);
    // The rejected fourth candidate: {e+g, e', g'} fails because the
    // clone's square is not a primitive set.
    let p = crate::partition::Partition::from_classes(4, &[vec![0, 1], vec![2], vec![3]]).unwrap();
    assert!(!crate::schur::is_schur_ring(&t, &p, SchurMode::Semigroup).unwrap());

    // Cloning the zero of a null semigroup grows the null semigroup.
    for n in 2..5 {
        let t = build(&Family::Clone {
            base: Box::new(Family::O(n)),
            x: 0,
        })
        .unwrap();
        let bigger = build(&Family::O(n + 1)).unwrap();
        assert_eq!(t.canonical_form(), bigger.canonical_form());
    }

    // Idempotent clone of the zero pins both zeros: Bell(n-1) rings.
    for n in 2..5 {
        let t = build(&Family::IdemClone {
            base: Box::new(Family::O(n)),
            x: 0,
        })
        .unwrap();
        assert_eq!(omega_of(&t) as u128, crate::partition::bell(n - 1));
    }

    assert!(matches!(
        build_str("idemclone(Zmn(3,1), x=0)"),
        Err(FamilyError::Precondition(_))
    ));
}

#[test]
fn roster_examples_from_small_extensions() {
    // (CH_2 twist Z_1) rostered at 2 with (empty, {1}): three Schur rings.
    let t = build_str("roster(twist(CH(2),Z(1)), x=2, H={}, K={1})").unwrap();
    assert_eq!(t.get(3, 1), 3, "only nontrivial clone product");
    assert_eq!(t.get(3, 3), 2);
    assert_eq!(omega_of(&t), 3);

    // K_{1,2} rostered at the zero with ({1},{2}): two Schur rings.
    let t = build_str("roster(K1(2), x=0, H={1}, K={2})").unwrap();
    assert_eq!(t.get(1, 3), 3);
    assert_eq!(t.get(3, 2), 3);
    assert_eq!(t.get(3, 3), 0);
    assert_eq!(omega_of(&t), 2);

    // ORO_{2,1} rostered (hat) at the zero with H = {2}: two rings, and the
    // plain roster at the same data gives the same two.
    let hat = build_str("rosterhat(ORO(2,1), x=0, H={2})").unwrap();
    let plain = build_str("roster(ORO(2,1), x=0, H={2}, K={2})").unwrap();
    assert_eq!(omega_of(&hat), 2);
    assert_eq!(omega_of(&plain), 2);
    let rings_hat = enumerate_schur_rings(&hat, SchurMode::Semigroup, Strategy::Naive, None)
        .unwrap()
        .rings;
    let rings_plain = enumerate_schur_rings(&plain, SchurMode::Semigroup, Strategy::Naive, None)
        .unwrap()
        .rings;
    assert_eq!(rings_hat, rings_plain);
}

#[test]
fn roster_preconditions_reported_by_name() {
    // Non-stabilizer member.
    match build_str("roster(O(2), x=1, H={1}, K={})") {
        Err(FamilyError::Precondition(msg)) => assert!(msg.contains("non-stabilizer")),
        other => panic!("expected precondition failure, got {other:?}"),
    }
    // Non-prime complement: {0} left-stabilizes 0 in ORO_{2,1} but its
    // complement {1,2} is not an ideal.
    match build_str("roster(ORO(2,1), x=0, H={0}, K={})") {
        Err(FamilyError::Precondition(msg)) => assert!(msg.contains("non-prime")),
        other => panic!("expected precondition failure, got {other:?}"),
    }
    // Hat on a non-idempotent.
    match build_str("rosterhat(Zmn(2,2), x=0, H={})") {
        Err(FamilyError::Precondition(msg)) => assert!(msg.contains("idempotent")),
        other => panic!("expected precondition failure, got {other:?}"),
    }
}

#[test]
fn condition_star_cases() {
    // H subset of K: case (a).
    let o = build_str("ORO(2,1)").unwrap();
    let h: std::collections::BTreeSet<usize> = [].into();
    let k: std::collections::BTreeSet<usize> = [2].into();
    let (_, case) = roster(&o, 0, &h, &k).unwrap();
    assert_eq!(case, RosterCase::A);
    let (_, case) = roster(&o, 0, &k, &h).unwrap();
    assert_eq!(case, RosterCase::B);
    // Equal stabilizer sets are comparable, so the first case wins even
    // with the rostered element inside both; the square rules coincide
    // there.
    let ch2 = build_str("CH(2)").unwrap();
    let all: std::collections::BTreeSet<usize> = [0, 1].into();
    let (with_all, case) = roster(&ch2, 0, &all, &all).unwrap();
    assert_eq!(case, RosterCase::A);
    assert_eq!(with_all.get(2, 2), 2, "clone of a stabilized idempotent");
    // x outside both: K_{1,2} at the zero with incomparable idempotent
    // stabilizers.
    let k12 = build_str("K1(2)").unwrap();
    let h: std::collections::BTreeSet<usize> = [1].into();
    let k: std::collections::BTreeSet<usize> = [2].into();
    let (_, case) = roster(&k12, 0, &h, &k).unwrap();
    assert_eq!(case, RosterCase::D);
}

#[test]
fn iterated_roster_identities() {
    // OG_n as an iterated roster of the zero over G^theta.
    let z2 = build_str("Z(2)").unwrap();
    let z2_theta = build_str("theta(Z(2))").unwrap();
    let theta = z2_theta.zero().unwrap();
    let g_inside: std::collections::BTreeSet<usize> = (0..z2.order()).collect();
    let empty = std::collections::BTreeSet::new();
    let by_roster = iterated_roster(&z2_theta, &[theta, theta], &g_inside, &empty).unwrap();
    let og3 = build_str("OZ(3,2)").unwrap();
    assert_eq!(by_roster.canonical_form(), og3.canonical_form());

    // O_n by cloning the zero repeatedly.
    let o2 = build_str("O(2)").unwrap();
    let grown = iterated_roster(&o2, &[0, 0, 0], &empty, &empty).unwrap();
    assert_eq!(
        grown.canonical_form(),
        build_str("O(5)").unwrap().canonical_form()
    );

    // RO_n = RO_{n-1} rostered at its first element with (RO_{n-1}, empty).
    let ro2 = build_str("RO(2)").unwrap();
    let all: std::collections::BTreeSet<usize> = (0..2).collect();
    let (ro3, _) = roster(&ro2, 0, &all, &empty).unwrap();
    assert_eq!(
        ro3.canonical_form(),
        build_str("RO(3)").unwrap().canonical_form()
    );
}

#[test]
fn roster_lift_examples() {
    // Z_2 ring {e+g} lifted across the double clone of both elements.
    let z2 = build_str("Z(2)").unwrap();
    let p = crate::partition::Partition::indiscrete(2);
    let empty = std::collections::BTreeSet::new();
    let lifted = roster_schur_lift(&z2, &p, &[0, 1], &empty, &empty).unwrap();
    assert_eq!(
        lifted,
        crate::partition::Partition::parse("0+1|2+3", 4).unwrap()
    );

    // Discrete lift across a singleton clone stays discrete.
    let o2 = build_str("O(2)").unwrap();
    let lifted =
        roster_schur_lift(&o2, &crate::partition::Partition::discrete(2), &[1], &empty, &empty)
            .unwrap();
    assert!(lifted.is_discrete());

    // Trivial ring of O_2 lifted across the clone of the nonzero element.
    let trivial = crate::partition::Partition::parse("0|1", 2).unwrap();
    let lifted = roster_schur_lift(&o2, &trivial, &[1], &empty, &empty).unwrap();
    let clone_table = build_str("clone(O(2), x=1)").unwrap();
    assert!(crate::schur::is_schur_ring(&clone_table, &lifted, SchurMode::Semigroup).unwrap());
    assert_eq!(lifted, crate::partition::Partition::parse("0|1|2", 3).unwrap());

    // Precondition: the rostered set must be a union of ring classes.
    let bad = roster_schur_lift(
        &z2,
        &crate::partition::Partition::indiscrete(2),
        &[0],
        &empty,
        &empty,
    );
    assert!(matches!(bad, Err(FamilyError::Precondition(_))));
}

#[test]
fn identity_catalog_up_to_equivalence() {
    let pairs = [
        // OG_1 over G equals G^theta.
        ("OG(Z(2),1)", "theta(Z(2))"),
        ("OG(LO(2),1)", "theta(LO(2))"),
        // Twisting by the trivial group from a left-null top grows the
        // left-null semigroup.
        ("twist(LO(2),Z(1))", "LO(3)"),
        ("twist(LO(3),Z(1))", "LO(4)"),
        // Uniting a star semilattice with a 2-chain adds a branch.
        ("unite(K1(2),CH(2))", "K1(3)"),
        // Uniting null semigroups adds their nonzero parts.
        ("unite(O(3),O(2))", "O(4)"),
        // Monogenic with index 1 is the cyclic group.
        ("Zmn(1,4)", "Z(4)"),
        ("Zmn(1,3)", "Z(3)"),
        // The chain grows by adjoining a zero.
        ("theta(CH(3))", "CH(4)"),
        // The one-element left-null top is the trivial group, and both
        // twist readings agree there.
        ("twist(Z(1),O(3))", "twist(LO(1),O(3))"),
        ("OG(RO(1),1)", "theta(RO(1))"),
    ];
    for (a, b) in pairs {
        let ta = build_str(a).unwrap();
        let tb = build_str(b).unwrap();
        assert_eq!(
            ta.equivalence_canonical_form(),
            tb.equivalence_canonical_form(),
            "{a} should be equivalent to {b}"
        );
    }
}

#[test]
fn embedded_group_tables() {
    for (name, order) in [
        ("S3", 6),
        ("D4", 8),
        ("D5", 10),
        ("D6", 12),
        ("D7", 14),
        ("Q8", 8),
        ("Dic12", 12),
        ("A4", 12),
        ("V4", 4),
        ("E8", 8),
        ("E9", 9),
        ("Z4xZ2", 8),
        ("Z6xZ2", 12),
    ] {
        let t = group_table(name).unwrap();
        assert_eq!(t.order(), order, "{name}");
        assert!(t.is_group(), "{name} must be a group");
        assert_eq!(t.identity(), Some(0), "{name} identity at 0");
    }
    assert!(group_table("nope").is_err());
    // Q8 is not D4; Dic12 is not D6 or A4.
    let q8 = group_table("Q8").unwrap();
    let d4 = group_table("D4").unwrap();
    assert_ne!(q8.canonical_form(), d4.canonical_form());
}

#[test]
fn mutant_and_adjoined_elements() {
    let t = build_str("mutant(Zmn(3,1))").unwrap();
    let mu = 3;
    let theta = build_str("Zmn(3,1)").unwrap().zero().unwrap();
    for x in 0..3 {
        assert_eq!(t.get(x, mu), mu);
        assert_eq!(t.get(mu, x), mu);
    }
    assert_eq!(t.get(mu, mu), theta);

    let ge = build_str("e(LO(2))").unwrap();
    assert_eq!(ge.identity(), Some(2));
    let gz = build_str("theta(LO(2))").unwrap();
    assert_eq!(gz.zero(), Some(2));
    assert!(matches!(
        build_str("mutant(LO(2))"),
        Err(FamilyError::BadParameter(_))
    ));
}

#[test]
fn stack_twist_unite_shapes() {
    let st = build_str("stack(Z(2),CH(2))").unwrap();
    // The group block absorbs the chain block on both sides.
    for g in 0..2 {
        for h in 2..4 {
            assert_eq!(st.get(g, h), g);
            assert_eq!(st.get(h, g), g);
        }
    }
    let tw = build_str("twist(O(2),O(2))").unwrap();
    assert_eq!(tw.get(1, 3), 0, "cross product falls to the left zero");
    assert_eq!(tw.get(3, 1), 2, "cross product falls to the right zero");
    let un = build_str("unite(O(2),O(2))").unwrap();
    assert_eq!(un.order(), 3);
    assert_eq!(un.zero(), Some(0));
    assert!(matches!(
        build_str("twist(Z(2),Z(2))"),
        Err(FamilyError::BadParameter(_))
    ));
}

#[test]
fn semistack_validation() {
    // LOZ_2 by hand.
    let loz2 = build_str("LOZ(2)").unwrap();
    assert_eq!(loz2.get(2, 0), 0, "identity acts trivially");
    assert_eq!(loz2.get(3, 0), 1, "generator rotates");
    assert_eq!(loz2.get(0, 3), 0, "left-null absorbs on the right");
    // A non-homomorphism action is rejected (the identity of Z_2 may not
    // act by the transposition).
    assert!(matches!(
        build_str("semistack(2, Z(2), phi=[1 0; 0 1])").err(),
        Some(FamilyError::BadParameter(_))
    ));
    // A non-permutation is rejected.
    assert!(matches!(
        build_str("semistack(2, Z(2), phi=[0 0; 1 0])").err(),
        Some(FamilyError::BadParameter(_))
    ));
}
