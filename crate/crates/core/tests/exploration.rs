use std::collections::BTreeSet;

use sgtrim::explorer::{explore, plan_roots, visited_semigroups, ExplorationTask};
use sgtrim::oracle::enumerate_all_by_subsets;
use sgtrim::properties::is_cutting;
use sgtrim::{PropertySpec, Ratio, Semigroup, Target};

fn keys(v: &[Semigroup]) -> BTreeSet<Vec<u32>> {
    v.iter().map(|s| s.primitives().to_vec()).collect()
}

fn prop(s: &str) -> PropertySpec {
    s.parse().unwrap()
}

#[test]
fn counts_match_subset_enumeration() {
    let r = explore(&ExplorationTask::full(12, Target::CountAll)).unwrap();
    for g in 1..=12 {
        let total: u128 = (2..=13).map(|m| r.counts.get(m, g).unwrap()).sum();
        assert_eq!(total, enumerate_all_by_subsets(g).unwrap().len() as u128, "genus {g}");
    }
}

#[test]
fn incremental_state_audited() {
    let mut task = ExplorationTask::full(10, Target::CountAll);
    task.audit_every = 1;
    explore(&task).unwrap();
    let mut task = ExplorationTask::full(22, Target::CountAll).workers(3);
    task.audit_every = 1000;
    explore(&task).unwrap();
    let mut task = ExplorationTask::trimmed(14, Target::WilfNegative);
    task.roots = plan_roots(14, Target::CountAll);
    task.audit_every = 1;
    explore(&task).unwrap();
}

#[test]
fn chain_splitting_covers_each_tree() {
    for gamma in 1..=12 {
        let mut whole = ExplorationTask::full(gamma, Target::CountAll);
        whole.split_chains = Some(false);
        let mut split = whole.clone();
        split.split_chains = Some(true);
        let a = visited_semigroups(&whole).unwrap();
        let b = visited_semigroups(&split).unwrap();
        assert_eq!(a.len(), b.len(), "gamma {gamma}: a node is visited twice");
        assert_eq!(keys(&a), keys(&b), "gamma {gamma}");
    }
}

#[test]
fn chain_splitting_keeps_counts_and_pruning() {
    let cases = [
        (40, Target::WilfNegative),
        (40, Target::LittleDensity(Ratio::integer(3))),
        (30, Target::NonGeneric(Ratio::integer(3))),
        (26, Target::CountAll),
    ];
    for (gamma, target) in cases {
        let mut whole = ExplorationTask::trimmed(gamma, target);
        whole.split_chains = Some(false);
        let mut split = whole.clone();
        split.split_chains = Some(true);
        let (a, b) = (explore(&whole).unwrap(), explore(&split).unwrap());
        assert_eq!(a.counts, b.counts);
        assert_eq!(a.pruned, b.pruned);
        assert_eq!(a.hits, b.hits);
    }
}

#[test]
fn trimming_visits_exactly_the_non_cutting() {
    let all = visited_semigroups(&ExplorationTask::full(12, Target::CountAll)).unwrap();
    for p in ["D_3", "D_5/2", "H_3", "H_4", "G_10", "G_12"].map(prop) {
        let mut task = ExplorationTask::full(12, Target::CountAll);
        task.trim = vec![p];
        let visited = visited_semigroups(&task).unwrap();
        let expected: Vec<Semigroup> = all.iter().filter(|s| !is_cutting(s, &p)).cloned().collect();
        assert_eq!(keys(&visited), keys(&expected), "{p}");
        // cut where the parent is still visited
        let pruned: u128 = explore(&task).unwrap().pruned.rows().iter().map(|r| r.count).sum();
        let frontier = all.iter().filter(|s| is_cutting(s, &p) && !is_cutting(&s.parent().unwrap(), &p)).count();
        assert_eq!(pruned, frontier as u128, "{p}");
    }
}

#[test]
fn trimmed_searches_find_the_same_hits() {
    let targets = [
        Target::WilfNegative,
        Target::EliahouNegative,
        Target::ZeroWilfNontrivial,
        Target::LittleDensity(Ratio::integer(3)),
        Target::LittleDensity(Ratio::new(5, 2).unwrap()),
        Target::NonGeneric(Ratio::integer(3)),
        Target::NonGeneric(Ratio::integer(4)),
    ];
    for gamma in [8, 12, 16] {
        for t in targets {
            let full = explore(&ExplorationTask::full(gamma, t)).unwrap();
            let trimmed = explore(&ExplorationTask::trimmed(gamma, t)).unwrap();
            assert_eq!(full.hits, trimmed.hits, "{t:?} at genus {gamma}");
        }
    }
}

#[test]
fn hits_match_target_definitions() {
    let all = visited_semigroups(&ExplorationTask::full(12, Target::CountAll)).unwrap();
    let r = explore(&ExplorationTask::full(12, Target::NonGeneric(Ratio::integer(3)))).unwrap();
    let expected: BTreeSet<Vec<u32>> = all
        .iter()
        .filter(|s| s.conductor() > 3 * s.multiplicity())
        .map(|s| s.primitives().to_vec())
        .collect();
    let got: BTreeSet<Vec<u32>> = r.hits.iter().map(|h| h.semigroup().primitives().to_vec()).collect();
    assert_eq!(got, expected);
    for h in &r.hits {
        let s = h.semigroup();
        assert_eq!((h.genus, h.conductor, h.edim), (s.genus(), s.conductor(), s.edim()));
        assert_eq!(h.invariants, s.invariants());
    }
    let sorted = r.hits.windows(2).all(|w| (w[0].genus, w[0].multiplicity) <= (w[1].genus, w[1].multiplicity));
    assert!(sorted);
}

#[test]
fn large_multiplicity_is_generic() {
    let roots = (21..=31).map(|m| Semigroup::superficial(m).unwrap()).collect();
    let r = explore(&ExplorationTask::new(roots, 30, Target::NonGeneric(Ratio::integer(3)))).unwrap();
    assert!(r.hits.is_empty());
}

#[test]
fn worker_count_does_not_change_results() {
    for t in [Target::CountAll, Target::NonGeneric(Ratio::integer(3)), Target::LittleDensity(Ratio::integer(3))] {
        let base = explore(&ExplorationTask::trimmed(24, t)).unwrap();
        for w in [2, 3, 8] {
            let r = explore(&ExplorationTask::trimmed(24, t).workers(w)).unwrap();
            assert_eq!(r.counts, base.counts);
            assert_eq!(r.pruned, base.pruned);
            assert_eq!(r.hits, base.hits);
        }
    }
}

#[test]
fn invalid_tasks_rejected() {
    let o = Semigroup::superficial(5).unwrap();
    assert!(explore(&ExplorationTask::new(vec![o.clone()], 3, Target::CountAll)).is_err());
    assert!(explore(&ExplorationTask::new(vec![o.clone()], 0, Target::CountAll)).is_err());
    assert!(explore(&ExplorationTask::new(vec![o], 10, Target::CountAll).workers(0)).is_err());
    assert!(explore(&ExplorationTask::new(vec![Semigroup::naturals()], 10, Target::CountAll)).is_err());
}

#[test]
fn little_density_small_table() {
    let r = explore(&ExplorationTask::trimmed(25, Target::LittleDensity(Ratio::integer(3)))).unwrap();
    let led = r.hits_by_genus();
    assert_eq!(&led[20..=25], &[0, 3, 1, 0, 4, 11]);
    assert!(led[..21].iter().all(|&n| n == 0));
}
