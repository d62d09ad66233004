use super::{FiniteGroup, Group, Permutation};
use crate::error::{Error, Result};

/// Number of isomorphism types of each order `1..=15`.
pub const ISOMORPHISM_TYPE_COUNTS: [usize; 15] = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1];

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub order: usize,
    pub aliases: &'static [&'static str],
}

const fn entry(name: &'static str, order: usize, aliases: &'static [&'static str]) -> CatalogEntry {
    CatalogEntry {
        name,
        order,
        aliases,
    }
}

static ENTRIES: &[CatalogEntry] = &[
    entry("C1", 1, &["1"]),
    entry("C2", 2, &[]),
    entry("C3", 3, &[]),
    entry("C4", 4, &[]),
    entry("V4", 4, &["C2xC2"]),
    entry("C5", 5, &[]),
    entry("C6", 6, &[]),
    entry("S3", 6, &["D6"]),
    entry("C7", 7, &[]),
    entry("C8", 8, &[]),
    entry("C4xC2", 8, &["C2xC4"]),
    entry("C2xC2xC2", 8, &["C2^3"]),
    entry("D8", 8, &["D4"]),
    entry("Q8", 8, &["Dic2"]),
    entry("C9", 9, &[]),
    entry("C3xC3", 9, &["C3^2"]),
    entry("C10", 10, &[]),
    entry("D10", 10, &["D5"]),
    entry("C11", 11, &[]),
    entry("C12", 12, &[]),
    entry("C6xC2", 12, &["C2xC6"]),
    entry("A4", 12, &[]),
    entry("D12", 12, &[]),
    entry("Dic3", 12, &["Q12", "C3:C4"]),
    entry("C13", 13, &[]),
    entry("C14", 14, &[]),
    entry("D14", 14, &["D7"]),
    entry("C15", 15, &[]),
    entry("C16", 16, &[]),
    entry("D16", 16, &[]),
    entry("Q16", 16, &["Dic4"]),
    entry("S4", 24, &[]),
];

pub fn catalog_entries() -> &'static [CatalogEntry] {
    ENTRIES
}

fn perm(degree: usize, cycles: &str) -> Permutation {
    Permutation::parse_cycles(degree, cycles).expect("static cycle notation")
}

fn build(name: &str) -> FiniteGroup {
    let c = FiniteGroup::cyclic;
    let g = match name {
        "V4" => c(2).direct_product(&c(2)),
        "S3" => FiniteGroup::dihedral(3),
        "C4xC2" => c(4).direct_product(&c(2)),
        "C2xC2xC2" => c(2).direct_product(&c(2)).direct_product(&c(2)),
        "D8" => FiniteGroup::dihedral(4),
        "Q8" => FiniteGroup::dicyclic(2),
        "C3xC3" => c(3).direct_product(&c(3)),
        "D10" => FiniteGroup::dihedral(5),
        "C6xC2" => c(6).direct_product(&c(2)),
        "A4" => FiniteGroup::from_permutations("A4", 4, &[perm(4, "(1,2,3)"), perm(4, "(1,2)(3,4)")])
            .expect("A4"),
        "D12" => FiniteGroup::dihedral(6),
        "Dic3" => FiniteGroup::dicyclic(3),
        "D14" => FiniteGroup::dihedral(7),
        "D16" => FiniteGroup::dihedral(8),
        "Q16" => FiniteGroup::dicyclic(4),
        "S4" => FiniteGroup::from_permutations("S4", 4, &[perm(4, "(1,2,3,4)"), perm(4, "(1,2)")])
            .expect("S4"),
        cyclic => {
            let n: usize = cyclic[1..].parse().expect("cyclic catalog name");
            c(n)
        }
    };
    g.with_name(name)
}

fn resolve(name: &str) -> Option<&'static CatalogEntry> {
    let key = name.trim();
    ENTRIES.iter().find(|e| {
        e.name.eq_ignore_ascii_case(key) || e.aliases.iter().any(|a| a.eq_ignore_ascii_case(key))
    })
}

/// Looks up a group by catalog label or alias (case-insensitive).
pub fn catalog_lookup(name: &str) -> Result<FiniteGroup> {
    let e = resolve(name).ok_or_else(|| Error::UnknownGroup {
        name: name.to_string(),
        known: ENTRIES.iter().map(|e| e.name).collect::<Vec<_>>().join(", "),
    })?;
    let g = build(e.name);
    debug_assert_eq!(g.order(), e.order);
    Ok(g)
}

/// Every catalog group of order strictly below `bound`, checked against the
/// known number of isomorphism types per order.
pub fn groups_below(bound: usize) -> Result<Vec<FiniteGroup>> {
    groups_with_orders(1..bound)
}

/// Every catalog group whose order lies in `orders`, checked against the
/// known number of isomorphism types per order.
pub fn groups_with_orders(orders: std::ops::Range<usize>) -> Result<Vec<FiniteGroup>> {
    let mut out = Vec::new();
    for order in orders {
        let here: Vec<FiniteGroup> = ENTRIES
            .iter()
            .filter(|e| e.order == order)
            .map(|e| build(e.name))
            .collect();
        let expected = ISOMORPHISM_TYPE_COUNTS.get(order.wrapping_sub(1)).copied();
        match expected {
            Some(n) if n == here.len() => out.extend(here),
            _ => {
                return Err(Error::CatalogIncomplete {
                    order,
                    expected: expected.unwrap_or(0),
                    found: here.len(),
                })
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{center, is_isomorphic};

    #[test]
    fn every_entry_builds_with_its_order() {
        for e in ENTRIES {
            let g = catalog_lookup(e.name).unwrap();
            assert_eq!(g.order(), e.order, "{}", e.name);
            assert_eq!(g.name(), e.name);
        }
        assert_eq!(ENTRIES.iter().filter(|e| e.order <= 15).count(), 28);
    }

    #[test]
    fn aliases_resolve() {
        assert_eq!(catalog_lookup("D4").unwrap(), catalog_lookup("D8").unwrap());
        assert_eq!(catalog_lookup("c2xc2").unwrap(), catalog_lookup("V4").unwrap());
        let err = catalog_lookup("M11").unwrap_err().to_string();
        assert!(err.contains("Q8") && err.contains("S4"));
    }

    #[test]
    fn same_order_entries_are_pairwise_non_isomorphic() {
        for order in 1..=16 {
            let gs: Vec<FiniteGroup> = ENTRIES
                .iter()
                .filter(|e| e.order == order)
                .map(|e| build(e.name))
                .collect();
            for i in 0..gs.len() {
                for j in 0..i {
                    assert!(!is_isomorphic(&gs[i], &gs[j]), "{} ~ {}", gs[i].name(), gs[j].name());
                }
            }
        }
    }

    #[test]
    fn trivial_and_small_examples() {
        assert_eq!(catalog_lookup("C1").unwrap().order(), 1);
        let s3 = catalog_lookup("S3").unwrap();
        assert!(!s3.is_abelian());
        assert!(center(&s3).is_trivial());
    }

    #[test]
    fn catalog_below_sixteen_is_complete() {
        let gs = groups_below(16).unwrap();
        assert_eq!(gs.len(), 28);
        assert!(groups_below(17).is_err());
    }

    #[test]
    fn lookups_are_deterministic() {
        for e in ENTRIES {
            assert_eq!(build(e.name), build(e.name));
        }
    }
}
