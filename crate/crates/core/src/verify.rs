//! Named verification suites: each runs a family of instances against the
//! engine and reports pass/fail per instance. The CLI `verify` command and
//! the acceptance tests both drive these.

use std::collections::BTreeSet;

use crate::cayley::CayleyTable;
use crate::census;
use crate::families;
use crate::partition::{bell, binomial, Partition};
use crate::reference;
use crate::schur::{
    self, enumerate_schur_rings, enumerate_schur_rings_jobs, SchurMode, Strategy,
};
use crate::structure;

/// Outcome of one named check inside a suite.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub outcome: Result<(), String>,
}

impl Instance {
    fn check(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Instance {
        Instance {
            name: name.into(),
            outcome: if ok { Ok(()) } else { Err(detail()) },
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(
        name: impl Into<String>,
        got: T,
        want: T,
    ) -> Instance {
        let ok = got == want;
        Instance {
            name: name.into(),
            outcome: if ok {
                Ok(())
            } else {
                Err(format!("expected {want:?}, got {got:?}"))
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub suite: String,
    pub instances: Vec<Instance>,
}

impl SuiteResult {
    pub fn passed(&self) -> usize {
        self.instances.iter().filter(|i| i.outcome.is_ok()).count()
    }
    pub fn failed(&self) -> usize {
        self.instances.len() - self.passed()
    }
    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
    pub fn first_failure(&self) -> Option<&Instance> {
        self.instances.iter().find(|i| i.outcome.is_err())
    }
}

/// The registered suite names.
pub const SUITE_NAMES: [&str; 20] = [
    "nullschur",
    "leftnull",
    "bipartite",
    "oro",
    "oo",
    "och",
    "olo",
    "orop",
    "monogenic",
    "chain",
    "adjoin",
    "stack",
    "semitwist",
    "spots",
    "bounds",
    "imposition",
    "riisr",
    "structure",
    "table1",
    "identities",
];

fn omega_str(spec: &str) -> usize {
    let t = families::build_str(spec).expect("suite spec must build");
    schur::omega(&t, SchurMode::Semigroup).expect("semigroup mode never fails")
}

fn omega_jobs(t: &CayleyTable, jobs: usize) -> usize {
    enumerate_schur_rings_jobs(t, SchurMode::Semigroup, Strategy::Pruned, None, jobs)
        .expect("semigroup mode never fails")
        .len()
}

/// Runs one suite. `max_n` caps the parameter ranges where meaningful;
/// `jobs` parallelizes the heavier enumerations.
pub fn run_suite(suite: &str, max_n: usize, jobs: usize) -> Result<SuiteResult, String> {
    let instances = match suite {
        "nullschur" => nullschur(max_n.min(7)),
        "leftnull" => leftnull(max_n.min(6)),
        "bipartite" => bipartite(max_n.min(5)),
        "oro" => oro(max_n.min(6)),
        "oo" => oo(max_n.min(7)),
        "och" => och(max_n.min(6)),
        "olo" => olo(max_n.min(6)),
        "orop" => orop(max_n.min(5)),
        "monogenic" => monogenic(max_n.min(7)),
        "chain" => chain(max_n.min(7)),
        "adjoin" => adjoin(max_n.min(5), jobs),
        "stack" => stack(max_n.min(6)),
        "semitwist" => semitwist(max_n.min(6)),
        "spots" => spots(),
        "bounds" => bounds(),
        "imposition" => imposition(max_n.min(5), jobs),
        "riisr" => riisr(max_n.min(5), jobs),
        "structure" => structure_suite(max_n.min(5), jobs),
        "table1" => table1(max_n.min(15), jobs),
        "identities" => identities(),
        other => return Err(format!("unknown suite `{other}`")),
    };
    Ok(SuiteResult {
        suite: suite.to_string(),
        instances,
    })
}

fn nullschur(max_n: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let got = omega_str(&format!("O({n})"));
        out.push(Instance::eq(
            format!("rings over the order-{n} null semigroup"),
            got as u128,
            bell(n - 1),
        ));
    }
    // The coarsest ring of a null semigroup is one singleton plus the rest.
    let o4 = families::build_str("O(4)").unwrap();
    let coarsest = schur::coarsest_schur_ring(&o4).unwrap();
    out.push(Instance::eq(
        "coarsest ring of O(4) is the trivial one",
        coarsest,
        Partition::parse("0|1+2+3", 4).unwrap(),
    ));
    out
}

fn leftnull(max_n: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let got = omega_str(&format!("LO({n})"));
        out.push(Instance::eq(
            format!("rings over the order-{n} left-null semigroup"),
            got as u128,
            bell(n),
        ));
    }
    // Converse uniqueness: only the left-null table attains Bell(n), with
    // the order-2 exception where the 2-element group does as well.
    for n in 2..=max_n.min(5) {
        let records = census::generate_all(n).unwrap();
        let attainers: Vec<usize> = records
            .iter()
            .filter(|r| {
                schur::omega(&r.table, SchurMode::Semigroup).unwrap() as u128 == bell(n)
            })
            .map(|r| r.forsythe)
            .collect();
        let lo = families::build_str(&format!("LO({n})"))
            .unwrap()
            .equivalence_canonical_form();
        let lo_rank = records.iter().position(|r| r.table == lo).unwrap();
        let expect: Vec<usize> = if n == 2 {
            let z2 = families::build_str("Z(2)").unwrap().equivalence_canonical_form();
            let z2_rank = records.iter().position(|r| r.table == z2).unwrap();
            let mut v = vec![lo_rank, z2_rank];
            v.sort();
            v
        } else {
            vec![lo_rank]
        };
        out.push(Instance::eq(
            format!("order-{n} semigroups attaining the full Bell count"),
            attainers,
            expect,
        ));
    }
    out
}

fn bipartite(max_n: usize) -> Vec<Instance> {
    (1..=max_n)
        .map(|n| {
            Instance::eq(
                format!("rings over the {n}-branch star semilattice"),
                omega_str(&format!("K1({n})")) as u128,
                bell(n),
            )
        })
        .collect()
}

fn oro(max_total: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for m in 1..max_total {
        for n in 1..=max_total.saturating_sub(m) {
            out.push(Instance::eq(
                format!("rings over ORO({m},{n})"),
                omega_str(&format!("ORO({m},{n})")) as u128,
                bell(m + n - 1),
            ));
        }
    }
    out
}

fn oo(max_total: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..max_total {
        for m in 1..=max_total.saturating_sub(n) {
            out.push(Instance::eq(
                format!("rings over OO({n},{m})"),
                omega_str(&format!("OO({n},{m})")) as u128,
                bell(n - 1) * bell(m - 1),
            ));
        }
    }
    out
}

fn och(max_total: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for m in 1..max_total {
        for n in 1..=max_total.saturating_sub(m) {
            out.push(Instance::eq(
                format!("rings over OCH({m},{n})"),
                omega_str(&format!("OCH({m},{n})")) as u128,
                bell(m - 1),
            ));
        }
    }
    out
}

/// Ring count of the null-over-left-null extension per the classification
/// of its rings.
fn olo_expected(m: usize, n: usize) -> u128 {
    let mut total = bell(m - 1) * bell(n);
    for k in 1..m {
        total += binomial(m - 1, k) * bell(m - k - 1);
    }
    total
}

fn olo(max_total: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for m in 1..max_total {
        for n in 1..=max_total.saturating_sub(m) {
            out.push(Instance::eq(
                format!("rings over OLO({m},{n})"),
                omega_str(&format!("OLO({m},{n})")) as u128,
                olo_expected(m, n),
            ));
        }
    }
    // The two-sided rostered variant, against its closed form.
    for (l, m, n) in [(2, 2, 1), (1, 2, 2), (2, 1, 2), (2, 2, 2), (3, 2, 1)] {
        if l + m + n - 1 > max_total {
            continue;
        }
        let mut expect = bell(l - 1) * bell(m + n - 1);
        for k in 1..l {
            expect += binomial(l - 1, k) * (bell(l - k - 1) * bell(n - 1) + 1);
        }
        out.push(Instance::eq(
            format!("rings over OLO3({l},{m},{n})"),
            omega_str(&format!("OLO3({l},{m},{n})")) as u128,
            expect,
        ));
    }
    out
}

fn orop(max_n: usize) -> Vec<Instance> {
    (2..=max_n)
        .map(|n| {
            Instance::eq(
                format!("rings over OROP({n})"),
                omega_str(&format!("OROP({n})")) as u128,
                2 * bell(n - 2),
            )
        })
        .collect()
}

fn monogenic(max_order: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for m in 2..=max_order {
        for n in 1..=max_order + 1 - m {
            out.push(Instance::eq(
                format!("rings over Zmn({m},{n})"),
                omega_str(&format!("Zmn({m},{n})")),
                1,
            ));
        }
    }
    out
}

fn chain(max_n: usize) -> Vec<Instance> {
    (1..=max_n)
        .map(|n| {
            Instance::eq(
                format!("rings over CH({n})"),
                omega_str(&format!("CH({n})")),
                1,
            )
        })
        .collect()
}

fn adjoin(max_order: usize, jobs: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=max_order.min(5) {
        let records = census::generate_all(n).unwrap();
        let mut ok = true;
        let mut detail = String::new();
        for r in &records {
            let base = schur::omega(&r.table, SchurMode::Semigroup).unwrap();
            for (tag, t) in [
                ("identity", families::adjoin_identity(&r.table)),
                ("zero", families::adjoin_zero(&r.table)),
            ] {
                let got = omega_jobs(&t, jobs);
                if got != base {
                    ok = false;
                    detail = format!(
                        "order-{n} rank {}: adjoining an {tag} gave {got} rings, base has {base}",
                        r.forsythe
                    );
                }
            }
        }
        out.push(Instance::check(
            format!("adjoined identity/zero preserve ring counts, order {n}"),
            ok,
            || detail,
        ));
    }
    out
}

fn semitwist(max_total: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    // Zero-semigroups of orders 2..4 from the census, skipping the trivial
    // group.
    let mut zero_tables: Vec<CayleyTable> = Vec::new();
    for order in 2..=4usize {
        for r in census::generate_all(order).unwrap() {
            if r.table.zero().is_some() {
                zero_tables.push(r.table);
            }
        }
    }
    for n in 1..=3usize {
        for g in &zero_tables {
            if n + g.order() > max_total {
                continue;
            }
            let lo = families::build_str(&format!("LO({n})")).unwrap();
            let combined = semitwist_table(&lo, g);
            let want = bell(n) * schur::omega(g, SchurMode::Semigroup).unwrap() as u128;
            let got = schur::omega(&combined, SchurMode::Semigroup).unwrap() as u128;
            out.push(Instance::eq(
                format!("rings over LO({n}) twisted onto a {}-element zero-semigroup", g.order()),
                got,
                want,
            ));
        }
    }
    out
}

fn semitwist_table(lo: &CayleyTable, g: &CayleyTable) -> CayleyTable {
    let n = lo.order();
    let z = g.zero().expect("zero-semigroup");
    CayleyTable::from_fn(n + g.order(), |x, y| match (x < n, y < n) {
        (true, true) => x,
        (true, false) => x,
        (false, true) => z + n,
        (false, false) => g.get(x - n, y - n) + n,
    })
    .expect("semi-twist is associative")
}

fn stack(max_total: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    // Deterministic sample of census pairs with combined order <= max.
    let mut rng: u64 = 0x5eed_cafe;
    let mut next = move || {
        rng ^= rng << 13;
        rng ^= rng >> 7;
        rng ^= rng << 17;
        rng
    };
    let pools: Vec<Vec<CayleyTable>> = (1..=4usize)
        .map(|n| {
            census::generate_all(n)
                .unwrap()
                .into_iter()
                .map(|r| r.table)
                .collect()
        })
        .collect();
    let mut pairs: Vec<(CayleyTable, CayleyTable)> = Vec::new();
    for a_order in 1..=3usize {
        for b_order in 1..=max_total.saturating_sub(a_order).min(4) {
            let left = &pools[a_order - 1];
            let right = &pools[b_order - 1];
            for _ in 0..4 {
                let g = left[(next() as usize) % left.len()].clone();
                let h = right[(next() as usize) % right.len()].clone();
                pairs.push((g, h));
            }
        }
    }
    for (g, h) in pairs {
        let stacked = CayleyTable::from_fn(g.order() + h.order(), |x, y| {
            let na = g.order();
            match (x < na, y < na) {
                (true, true) => g.get(x, y),
                (false, false) => h.get(x - na, y - na) + na,
                (true, false) => x,
                (false, true) => y,
            }
        })
        .expect("stack is associative");
        let want = schur::omega(&g, SchurMode::Semigroup).unwrap()
            * schur::omega(&h, SchurMode::Semigroup).unwrap();
        let got = schur::omega(&stacked, SchurMode::Semigroup).unwrap();
        out.push(Instance::eq(
            format!(
                "stack of census tables of orders {} and {}",
                g.order(),
                h.order()
            ),
            got,
            want,
        ));
    }
    out
}

fn spots() -> Vec<Instance> {
    [
        ("LOZ(3)", 12usize),
        ("OZ(3,2)", 7),
        ("OZ(2,3)", 4),
        ("OLO(3,2)", 7),
        ("ORO(3,2)", 15),
        ("OLO(2,3)", 6),
        ("Onk(4,2,123)", 3),
        ("LOO(2,2,2,6)", 4),
        ("LORO(2,1,2,1)", 3),
        ("OLO3(2,2,1)", 4),
    ]
    .into_iter()
    .map(|(spec, want)| Instance::eq(format!("rings over {spec}"), omega_str(spec), want))
    .collect()
}

fn bounds() -> Vec<Instance> {
    let mut out = Vec::new();
    // Encoded 3-nilpotent: Bell(n) <= rings <= Bell(m-1) Bell(n).
    for (m, n) in [(2usize, 2usize), (3, 2), (4, 2), (2, 3)] {
        let codes = [0u128, 1, 5, 9];
        for k in codes {
            let spec = format!("Onk({m},{n},{k})");
            if families::build_str(&spec).is_err() {
                continue;
            }
            let got = omega_str(&spec) as u128;
            let ok = bell(n) <= got && got <= bell(m - 1) * bell(n);
            out.push(Instance::check(format!("ring bounds for {spec}"), ok, || {
                format!(
                    "{got} outside [{}, {}]",
                    bell(n),
                    bell(m - 1) * bell(n)
                )
            }));
        }
    }
    for (l, m, n) in [(2usize, 1usize, 1usize), (2, 1, 2), (2, 2, 1), (2, 2, 2)] {
        for k in [0u128, 1, 2, 6] {
            for kind in ["LOO", "LORO"] {
                let spec = format!("{kind}({l},{m},{n},{k})");
                if families::build_str(&spec).is_err() {
                    continue;
                }
                let got = omega_str(&spec) as u128;
                let upper_l = if kind == "LOO" { bell(l - 1) } else { bell(l) };
                let ok = bell(m) * bell(n) <= got && got <= upper_l * bell(m) * bell(n);
                out.push(Instance::check(format!("ring bounds for {spec}"), ok, || {
                    format!(
                        "{got} outside [{}, {}]",
                        bell(m) * bell(n),
                        upper_l * bell(m) * bell(n)
                    )
                }));
            }
        }
    }
    // Coarsest-ring product bound over the order-4 census.
    let mut ok = true;
    let mut detail = String::new();
    for r in census::generate_all(4).unwrap() {
        let rings = enumerate_schur_rings(&r.table, SchurMode::Semigroup, Strategy::Pruned, None)
            .unwrap();
        let coarsest = schur::coarsest_schur_ring(&r.table).unwrap();
        let bound: u128 = coarsest
            .classes()
            .iter()
            .map(|c| bell(c.len()))
            .product();
        if (rings.len() as u128) > bound {
            ok = false;
            detail = format!(
                "rank {}: {} rings exceed the coarsest-class bound {bound}",
                r.forsythe,
                rings.len()
            );
        }
    }
    out.push(Instance::check(
        "ring count bounded by the product of Bell numbers over coarsest classes (order 4)",
        ok,
        || detail,
    ));
    out
}

fn imposition(max_order: usize, jobs: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        let mut ok = true;
        let mut detail = String::new();
        'rows: for r in census::generate_all(n).unwrap() {
            let base = structure::imposition_base(&r.table);
            let rings = enumerate_schur_rings_jobs(
                &r.table,
                SchurMode::Semigroup,
                Strategy::Pruned,
                None,
                jobs,
            )
            .unwrap();
            for p in &rings.rings {
                if !p.is_refinement(&base).unwrap() {
                    ok = false;
                    detail = format!("rank {}: ring {p} does not refine {base}", r.forsythe);
                    break 'rows;
                }
                // Power ideals are unions of ring classes.
                let profile = structure::decomposition_profile(&r.table);
                for power in &profile.powers {
                    if !p.is_class_union(power) {
                        ok = false;
                        detail =
                            format!("rank {}: a power ideal splits ring {p}", r.forsythe);
                        break 'rows;
                    }
                }
            }
        }
        out.push(Instance::check(
            format!("imposition base refinement over the order-{n} census"),
            ok,
            || detail,
        ));
    }
    out
}

fn riisr(max_order: usize, jobs: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 2..=max_order {
        let mut checked = 0usize;
        let mut ok = true;
        let mut detail = String::new();
        for r in census::generate_all(n).unwrap() {
            if !structure::is_3nilpotent(&r.table) {
                continue;
            }
            checked += 1;
            let layered = structure::riisr_enumerate_3nilpotent(&r.table).unwrap();
            let generic = enumerate_schur_rings_jobs(
                &r.table,
                SchurMode::Semigroup,
                Strategy::Pruned,
                None,
                jobs,
            )
            .unwrap();
            if layered.rings != generic.rings {
                ok = false;
                detail = format!("rank {} disagrees", r.forsythe);
            }
        }
        out.push(Instance::check(
            format!("layered enumeration matches generic on {checked} tables of order {n}"),
            ok,
            || detail,
        ));
    }
    out
}

/// Meet closure, singleton closure, opposite invariance, zero/identity
/// pinning, and pruned-vs-naive equality over the census.
fn structure_suite(max_order: usize, jobs: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        let records = census::generate_all(n).unwrap();
        let mut meet_ok = true;
        let mut singleton_ok = true;
        let mut opposite_ok = true;
        let mut pinning_ok = true;
        let mut strategies_ok = true;
        let mut detail = String::new();
        for r in &records {
            let rings = enumerate_schur_rings_jobs(
                &r.table,
                SchurMode::Semigroup,
                Strategy::Pruned,
                None,
                jobs,
            )
            .unwrap();
            let naive =
                enumerate_schur_rings(&r.table, SchurMode::Semigroup, Strategy::Naive, None)
                    .unwrap();
            if rings.rings != naive.rings {
                strategies_ok = false;
                detail = format!("rank {}: pruned != naive", r.forsythe);
            }
            for a in &rings.rings {
                for b in &rings.rings {
                    let met = a.common_coarsening(b).unwrap();
                    if !rings.contains(&met) {
                        meet_ok = false;
                        detail = format!("rank {}: meet of {a} and {b} missing", r.forsythe);
                    }
                }
                let singles: BTreeSet<usize> = a.singletons().into_iter().collect();
                if !r.table.is_subsemigroup(&singles) {
                    singleton_ok = false;
                    detail = format!("rank {}: singleton set of {a} not closed", r.forsythe);
                }
                if let Some(z) = r.table.zero() {
                    if a.classes()[a.class_of(z)].len() != 1 {
                        pinning_ok = false;
                        detail = format!("rank {}: zero fused in {a}", r.forsythe);
                    }
                }
            }
            let op_rings =
                enumerate_schur_rings(&r.table.opposite(), SchurMode::Semigroup, Strategy::Naive, None)
                    .unwrap();
            if op_rings.rings != rings.rings {
                opposite_ok = false;
                detail = format!("rank {}: opposite ring set differs", r.forsythe);
            }
            // Identity pinning applies to adjoined identities; check on the
            // extension of each table.
            if n < max_order {
                let ext = families::adjoin_identity(&r.table);
                let e = ext.identity().unwrap();
                for p in
                    enumerate_schur_rings(&ext, SchurMode::Semigroup, Strategy::Naive, None)
                        .unwrap()
                        .rings
                {
                    if p.classes()[p.class_of(e)].len() != 1 {
                        pinning_ok = false;
                        detail = format!("rank {}: adjoined identity fused", r.forsythe);
                    }
                }
            }
        }
        out.push(Instance::check(
            format!("meet closure over the order-{n} census"),
            meet_ok,
            || detail.clone(),
        ));
        out.push(Instance::check(
            format!("singleton subsemigroup closure over the order-{n} census"),
            singleton_ok,
            || detail.clone(),
        ));
        out.push(Instance::check(
            format!("opposite invariance over the order-{n} census"),
            opposite_ok,
            || detail.clone(),
        ));
        out.push(Instance::check(
            format!("zero/identity pinning over the order-{n} census"),
            pinning_ok,
            || detail.clone(),
        ));
        out.push(Instance::check(
            format!("pruned matches naive over the order-{n} census"),
            strategies_ok,
            || detail.clone(),
        ));
    }
    out
}

fn table1(max_order: usize, jobs: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for row in &reference::GROUP_RING_COUNTS {
        if row.order > max_order {
            continue;
        }
        let t = families::build_str(row.spec).unwrap();
        let semigroup = omega_jobs(&t, jobs);
        let monoid =
            enumerate_schur_rings_jobs(&t, SchurMode::Monoid, Strategy::Pruned, None, jobs)
                .unwrap()
                .len();
        let group = enumerate_schur_rings_jobs(&t, SchurMode::Group, Strategy::Pruned, None, jobs)
            .unwrap()
            .len();
        out.push(Instance::eq(
            format!("{} ring counts (group, monoid, semigroup)", row.name),
            (group, monoid, semigroup),
            (row.group, row.monoid, row.semigroup),
        ));
        // Mode monotonicity, strict in the middle for nontrivial groups.
        let strict_ok = group <= monoid
            && monoid <= semigroup
            && (row.order == 1 || monoid < semigroup);
        out.push(Instance::check(
            format!("{} mode monotonicity", row.name),
            strict_ok,
            || format!("({group}, {monoid}, {semigroup}) violates monotonicity"),
        ));
    }
    out
}

fn identities() -> Vec<Instance> {
    let pairs = [
        ("OG(Z(2),1)", "theta(Z(2))"),
        ("OG(LO(3),1)", "theta(LO(3))"),
        ("twist(LO(2),Z(1))", "LO(3)"),
        ("twist(LO(3),Z(1))", "LO(4)"),
        ("twist(LO(1),Z(2))", "twist(Z(1),Z(2))"),
        ("unite(K1(2),CH(2))", "K1(3)"),
        ("unite(K1(3),CH(2))", "K1(4)"),
        ("unite(O(3),O(2))", "O(4)"),
        ("unite(O(4),O(2))", "O(5)"),
        ("Zmn(1,4)", "Z(4)"),
        ("Zmn(1,5)", "Z(5)"),
        ("theta(CH(3))", "CH(4)"),
        ("theta(CH(4))", "CH(5)"),
    ];
    pairs
        .into_iter()
        .map(|(a, b)| {
            let ta = families::build_str(a).unwrap().equivalence_canonical_form();
            let tb = families::build_str(b).unwrap().equivalence_canonical_form();
            Instance::check(format!("{a} equivalent to {b}"), ta == tb, || {
                "canonical forms differ".to_string()
            })
        })
        .collect()
}

/// A quick census cross-check: generated counts and the order-4 crosswalk.
pub fn census_counts(max_order: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 0..=max_order.min(5) {
        let got = census::generate_all(n).unwrap().len();
        out.push(Instance::eq(
            format!("census count at order {n}"),
            got,
            reference::CENSUS_COUNTS[n],
        ));
    }
    out
}
