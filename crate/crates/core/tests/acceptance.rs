//! Acceptance suite. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion does. Run with `--nocapture` to see the lines.

use std::sync::OnceLock;

use itertools::Itertools;
use unrep_core::catalog;
use unrep_core::clifford::{
    clifford_monoid_unreps, component_underrep_existence, decompose, theorem_c_check_with,
};
use unrep_core::corpus::{
    self, groups_up_to_iso, monoids_up_to_iso, random_bijections, semigroups_up_to_iso, Instance,
};
use unrep_core::heap::{
    beta_square_check, epsilon_torsor_witness, group_from_identity, heap_axioms_check,
    heap_torsor_action, pseudounit_duality_check, pseudounits, theorem_centralizer_check,
    torsor_check, HeapCarrier,
};
use unrep_core::unrep::{enumerate_maps, idempotent_determination_check, Strategy};
use unrep_core::{
    cyclic_unrep, enumerate_unreps, enumerate_unreps_bruteforce, is_faithful, monoid_unreps,
    represent, verify_action_hom, MulTable, TransSemigroup,
};

const SAMPLE_SEED: u64 = 0x5eed_2024;
const SAMPLES: usize = 1000;

fn instances() -> &'static [Instance] {
    static CORPUS: OnceLock<Vec<Instance>> = OnceLock::new();
    CORPUS.get_or_init(corpus::transformation_corpus)
}

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, checked: usize, what: &str) -> Outcome {
    if failures.is_empty() {
        Outcome {
            ok: true,
            detail: format!("{checked} {what}"),
        }
    } else {
        Outcome {
            ok: false,
            detail: format!(
                "{} of {checked} {what} failed; first: {}",
                failures.len(),
                failures[0]
            ),
        }
    }
}

fn maps(s: &TransSemigroup) -> Vec<Vec<usize>> {
    enumerate_unreps(s)
        .unwrap()
        .into_iter()
        .map(|u| u.map.phi().to_vec())
        .collect()
}

fn c01_left_zero_counterexample() -> Outcome {
    let n = enumerate_unreps(&catalog::lz4()).unwrap().len();
    Outcome {
        ok: n == 0,
        detail: format!("LZ4 has {n} unrepresentations"),
    }
}

fn c02_constant_band_law() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=4 {
        let constants = catalog::constants(n);
        for band in corpus::left_zero_bands(n) {
            checked += 1;
            let unreps = enumerate_unreps(&band).unwrap();
            let is_constants = band == constants;
            if unreps.is_empty() == is_constants {
                failures.push(format!("{:?}: {} unreps", band.elements(), unreps.len()));
            } else if is_constants
                && (unreps.len() != 1 || unreps[0].induced != catalog::left_zero_table(n))
            {
                failures.push(format!("constant maps on {n} points"));
            }
        }
    }
    outcome(failures, checked, "left-zero bands")
}

fn c03_cyclic_construction() -> Outcome {
    let mut failures = Vec::new();
    for n in 2..=7 {
        let p = catalog::cycle(n);
        for z in 0..n {
            let (s, map) = cyclic_unrep(&p, z).unwrap();
            if !verify_action_hom(&s, map.phi()) {
                failures.push(format!("n = {n}, z = {z}: not an action homomorphism"));
            }
        }
        let s = catalog::cyclic_group(n);
        let items: Vec<_> = enumerate_unreps(&s)
            .unwrap()
            .into_iter()
            .map(|u| u.map)
            .collect();
        if items.len() != n {
            failures.push(format!("n = {n}: {} unrepresentations", items.len()));
            continue;
        }
        let g = group_from_identity(&HeapCarrier::new(&s, items).unwrap(), 0).unwrap();
        if g.order() != n || !g.is_cyclic() {
            failures.push(format!("n = {n}: heap group is not cyclic of order {n}"));
        }
    }
    outcome(failures, 6, "cycle lengths")
}

fn c04_bijection() -> Outcome {
    let cliff4_table = MulTable::new(catalog::cliff4().comp_rows()).unwrap();
    let tables: Vec<MulTable> = (1..=5)
        .flat_map(groups_up_to_iso)
        .chain((1..=4).flat_map(monoids_up_to_iso))
        .chain([cliff4_table])
        .collect();
    let mut failures = Vec::new();
    for t in &tables {
        let r = represent(t);
        if !r.faithful {
            failures.push(format!("{:?} is not faithful", t.rows()));
            continue;
        }
        let unreps = enumerate_unreps(&r.semigroup).unwrap();
        let hits: Vec<_> = unreps.iter().filter(|u| u.induced == *t).collect();
        if hits.len() != 1 {
            failures.push(format!("{:?}: {} matching unreps", t.rows(), hits.len()));
            continue;
        }
        // ℓ∘k: representing the induced table gives back φ.
        if hits[0].map.phi() != r.rep_map {
            failures.push(format!("{:?}: φ differs from the representation", t.rows()));
        }
    }
    let mut o = outcome(failures, tables.len(), "faithful tables");
    o.ok &= tables.len() >= 50;
    o
}

fn c05_oracle_equivalence() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for inst in instances().iter().filter(|i| i.semigroup.degree() <= 6) {
        checked += 1;
        let fast = enumerate_unreps(&inst.semigroup).unwrap();
        let oracle = enumerate_unreps_bruteforce(&inst.semigroup).unwrap();
        if fast != oracle {
            failures.push(format!("{}: {} vs {}", inst.name, fast.len(), oracle.len()));
        }
    }
    outcome(failures, checked, "instances")
}

fn heap(s: &TransSemigroup) -> HeapCarrier {
    let items = enumerate_unreps(s)
        .unwrap()
        .into_iter()
        .map(|u| u.map)
        .collect();
    HeapCarrier::new(s, items).unwrap()
}

fn c06_heap_axioms() -> Outcome {
    let failures = [
        ("CYC4", catalog::cyc4()),
        ("REG_S3", catalog::reg_s3()),
        ("CLIFF4", catalog::cliff4()),
    ]
    .into_iter()
    .filter(|(_, s)| !heap_axioms_check(&heap(s)))
    .map(|(name, _)| name.to_string())
    .collect();
    outcome(failures, 3, "heaps")
}

fn c07_centralizer_theorem() -> Outcome {
    let named = [catalog::cyc4(), catalog::reg_s3(), catalog::cliff4()];
    let swept: Vec<&TransSemigroup> = named
        .iter()
        .chain(
            instances()
                .iter()
                .map(|i| &i.semigroup)
                .filter(|s| s.degree() <= 5 && !maps(s).is_empty()),
        )
        .collect();
    let mut failures = Vec::new();
    for s in &swept {
        if let Err(e) = theorem_centralizer_check(s, 0) {
            failures.push(format!("{:?}: {e}", s.elements()));
        }
    }
    outcome(failures, swept.len(), "semigroups")
}

fn c08_pseudounit_duality() -> Outcome {
    let tables: Vec<MulTable> = (1..=5).flat_map(monoids_up_to_iso).collect();
    let mut failures = Vec::new();
    for t in &tables {
        let v = pseudounit_duality_check(t).unwrap();
        if !v.holds() || v.pseudounit_count != t.units().len() {
            failures.push(format!("{:?}: {v:?}", t.rows()));
        }
    }
    for n in 1..=5 {
        let p = pseudounits(&catalog::left_zero_table(n)).unwrap();
        if p.len() != 1 {
            failures.push(format!(
                "left-zero table of order {n} has {} pseudounits",
                p.len()
            ));
        }
    }
    outcome(failures, tables.len() + 5, "tables")
}

fn c09_monoid_determination() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for inst in instances() {
        let s = &inst.semigroup;
        if !s.is_monoid() || maps(s).is_empty() {
            continue;
        }
        checked += 1;
        if monoid_unreps(s).unwrap() != enumerate_unreps_bruteforce(s).unwrap() {
            failures.push(inst.name.clone());
        }
    }
    outcome(failures, checked, "monoids with unrepresentations")
}

fn c10_torsor_and_beta() -> Outcome {
    let mut failures = Vec::new();
    for (name, s) in [("CYC4", catalog::cyc4()), ("REG_S3", catalog::reg_s3())] {
        let h = heap(&s);
        for e in 0..h.len() {
            let (g, action) = heap_torsor_action(&h, e).unwrap();
            if !torsor_check(&g, &action) {
                failures.push(format!("{name}: heap action with identity {e}"));
            }
        }
        let v = beta_square_check(&s).unwrap();
        if !v.holds() {
            failures.push(format!("{name}: {v:?}"));
        }
        match epsilon_torsor_witness(&s).unwrap() {
            Some(w) if w.beta_is_witness && w.torsor => {}
            other => failures.push(format!("{name}: witness {other:?}")),
        }
    }
    outcome(failures, 2, "groups")
}

fn c11_idempotent_determination() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for inst in instances() {
        let s = &inst.semigroup;
        if !s.classify().is_inverse {
            continue;
        }
        let unreps = enumerate_unreps(s).unwrap();
        if unreps.is_empty() {
            continue;
        }
        checked += 1;
        for u in &unreps {
            let r = idempotent_determination_check(s, &u.map).unwrap();
            if !r.failures.is_empty() {
                failures.push(format!(
                    "{}: φ = {:?} fails at {:?}",
                    inst.name,
                    u.map.phi(),
                    r.failures
                ));
            }
        }
        let via_idempotents = enumerate_maps(s, Strategy::Idempotent).unwrap();
        let oracle = enumerate_maps(s, Strategy::BruteForce).unwrap();
        if via_idempotents != oracle {
            failures.push(format!(
                "{}: idempotent route differs from brute force",
                inst.name
            ));
        }
    }
    outcome(
        failures,
        checked,
        "inverse semigroups with unrepresentations",
    )
}

fn c12_theorem_c() -> Outcome {
    let mut failures = Vec::new();
    let mut bijections_checked = 0;
    let mut cases: Vec<(String, TransSemigroup)> = vec![("CLIFF4".into(), catalog::cliff4())];
    cases.extend(
        instances()
            .iter()
            .filter(|i| {
                i.semigroup.len() == i.semigroup.degree() && i.semigroup.classify().is_clifford
            })
            .map(|i| (i.name.clone(), i.semigroup.clone())),
    );
    for (name, s) in &cases {
        let n = s.degree();
        let dec = decompose(s).unwrap();
        let mut candidates: Vec<Vec<usize>> = if n <= 4 {
            (0..n).permutations(n).collect()
        } else {
            random_bijections(n, SAMPLES, SAMPLE_SEED)
        };
        // sampled bijections are almost never unrepresentations
        candidates.extend(maps(s));
        for phi in &candidates {
            bijections_checked += 1;
            let v = theorem_c_check_with(s, &dec, phi).unwrap();
            if !v.agree() {
                failures.push(format!("{name}: φ = {phi:?} gives {v:?}"));
            }
        }
    }
    let mut o = outcome(failures, bijections_checked, "bijections");
    o.detail = format!("{} over {} Clifford instances", o.detail, cases.len());
    o
}

fn c13_clifford_existence() -> Outcome {
    let cliff4 = clifford_monoid_unreps(&catalog::cliff4()).unwrap();
    let mut failures = Vec::new();
    if cliff4.len() != 2 {
        failures.push(format!("CLIFF4 has {} unrepresentations", cliff4.len()));
    }
    let mut checked = 1;
    for inst in instances() {
        let s = &inst.semigroup;
        let class = s.classify();
        if s.degree() > 5 || !class.is_clifford || !class.is_monoid {
            continue;
        }
        checked += 1;
        match clifford_monoid_unreps(s) {
            Ok(found) if found == enumerate_unreps(s).unwrap() => {}
            Ok(found) => failures.push(format!(
                "{}: {} unreps by evaluation",
                inst.name,
                found.len()
            )),
            Err(e) => failures.push(format!("{}: {e}", inst.name)),
        }
        if s.len() == s.degree() {
            let c = component_underrep_existence(s).unwrap();
            if !c.consistent() {
                failures.push(format!("{}: component existence {c:?}", inst.name));
            }
        }
    }
    outcome(failures, checked, "Clifford monoids")
}

fn c14_inverse_faithfulness() -> Outcome {
    let tables: Vec<MulTable> = (1..=4)
        .flat_map(semigroups_up_to_iso)
        .filter(|t| t.classify().is_inverse)
        .chain(corpus::inverse_semigroups_up_to_iso(5))
        .collect();
    let failures = tables
        .iter()
        .filter(|t| !is_faithful(t))
        .map(|t| format!("{:?}", t.rows()))
        .collect();
    outcome(failures, tables.len(), "inverse-semigroup tables")
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 14] = [
        ("left-zero counterexample", c01_left_zero_counterexample),
        ("constant-band law", c02_constant_band_law),
        ("cyclic construction", c03_cyclic_construction),
        ("k/l bijection", c04_bijection),
        ("oracle equivalence", c05_oracle_equivalence),
        ("heap axioms", c06_heap_axioms),
        ("centralizer theorem", c07_centralizer_theorem),
        ("pseudounit duality", c08_pseudounit_duality),
        ("monoid determination", c09_monoid_determination),
        ("torsor and beta-square", c10_torsor_and_beta),
        ("idempotent determination", c11_idempotent_determination),
        ("theorem C equivalence", c12_theorem_c),
        ("Clifford existence lemma", c13_clifford_existence),
        ("inverse-semigroup faithfulness", c14_inverse_faithfulness),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2} {name}: {}", k + 1, o.detail);
        if !o.ok {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
