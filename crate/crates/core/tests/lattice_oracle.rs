use std::collections::BTreeSet;

use shifted_burnside::group::catalog_entries;
use shifted_burnside::lattice::{all_subgroups, conjugacy_classes_of_subgroups};
use shifted_burnside::{catalog_lookup, FiniteGroup, Group};

// Naive closure: keep multiplying until nothing new appears.
fn closure(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = gens.iter().copied().collect();
    set.insert(g.identity());
    loop {
        let items: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &items {
            for &b in &items {
                set.insert(g.mul(a, b));
            }
        }
        if set.len() == before {
            return items;
        }
    }
}

// Every catalog group of order at most 24 has rank at most 3, so subgroups
// generated by triples exhaust the lattice.
fn brute_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let mut out = BTreeSet::new();
    for x in 0..n {
        for y in x..n {
            for z in y..n {
                out.insert(closure(g, &[x, y, z]));
            }
        }
    }
    out
}

#[test]
fn lattice_matches_brute_force_up_to_order_24() {
    for e in catalog_entries().iter().filter(|e| e.order <= 24) {
        let g = catalog_lookup(e.name).unwrap();
        let fast: BTreeSet<Vec<usize>> = all_subgroups(&g).unwrap().iter().map(|s| s.iter().collect()).collect();
        assert_eq!(fast, brute_subgroups(&g), "{}", e.name);
        for s in &fast {
            assert_eq!(g.order() % s.len(), 0, "Lagrange fails in {}", e.name);
        }
    }
}

#[test]
fn classes_partition_the_lattice() {
    for name in ["S3", "D8", "Q8", "A4", "D12", "Dic3", "S4"] {
        let g = catalog_lookup(name).unwrap();
        let classes = conjugacy_classes_of_subgroups(&g).unwrap();
        let total: usize = classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(total, all_subgroups(&g).unwrap().len(), "{name}");
        for c in &classes {
            assert!(c.members.contains(&c.representative));
            assert_eq!(g.order() % c.members.len(), 0, "{name}: class size divides |G|");
        }
    }
}
