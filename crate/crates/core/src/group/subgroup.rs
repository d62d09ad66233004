use std::cmp::Ordering;
use std::fmt;

use super::Group;
use crate::bitset::BitSet;

/// A subgroup, stored as the set of its member indices in the parent group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: BitSet,
    order: usize,
}

impl Subgroup {
    /// Wraps a member set without checking closure.
    pub fn from_bits(members: BitSet) -> Self {
        let order = members.count();
        Subgroup { members, order }
    }

    pub fn whole(parent_order: usize) -> Self {
        Subgroup::from_bits(BitSet::full(parent_order))
    }

    pub fn trivial(parent_order: usize, identity: usize) -> Self {
        Subgroup::from_bits(BitSet::from_indices(parent_order, [identity]))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn parent_order(&self) -> usize {
        self.members.universe()
    }

    pub fn bits(&self) -> &BitSet {
        &self.members
    }

    pub fn into_bits(self) -> BitSet {
        self.members
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.parent_order()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_bits(self.members.intersection(&other.members))
    }

    /// Checks the subgroup axioms against `group`.
    pub fn is_closed<G: Group>(&self, group: &G) -> bool {
        if !self.contains(group.identity()) {
            return false;
        }
        let elems: Vec<usize> = self.iter().collect();
        elems.iter().all(|&a| {
            self.contains(group.inv(a)) && elems.iter().all(|&b| self.contains(group.mul(a, b)))
        })
    }

    /// A greedy generating sequence: scan members in index order and keep
    /// each one not already generated by the previous picks.
    pub fn generators<G: Group>(&self, group: &G) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = group.trivial();
        for x in self.iter() {
            if !span.contains(x) {
                gens.push(x);
                span = generate(group, &gens);
            }
        }
        gens
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.cmp(&other.members)
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

/// The subgroup generated by `gens`.
pub fn generate<G: Group>(group: &G, gens: &[usize]) -> Subgroup {
    extend(group, &group.trivial(), gens)
}

/// The subgroup generated by `base` together with `extra`, where `base` is
/// already a subgroup.
pub fn extend<G: Group>(group: &G, base: &Subgroup, extra: &[usize]) -> Subgroup {
    let base_gens = if base.is_trivial() {
        Vec::new()
    } else {
        base.generators(group)
    };
    extend_with_gens(group, base, &base_gens, extra)
}

/// Same as [`extend`] with the generators of `base` supplied by the caller.
///
/// The result is grown as a union of right cosets `base·y`: multiplying a
/// coset on the right by a generator yields another right coset, so it
/// suffices to track one representative per coset.
pub fn extend_with_gens<G: Group>(
    group: &G,
    base: &Subgroup,
    base_gens: &[usize],
    extra: &[usize],
) -> Subgroup {
    let base_elems: Vec<usize> = base.iter().collect();
    let gens: Vec<usize> = base_gens.iter().chain(extra).copied().collect();
    let mut members = base.members.clone();
    let mut reps = vec![group.identity()];
    let mut i = 0;
    while i < reps.len() {
        let r = reps[i];
        i += 1;
        for &s in &gens {
            let y = group.mul(r, s);
            if !members.contains(y) {
                for &b in &base_elems {
                    members.insert(group.mul(b, y));
                }
                reps.push(y);
            }
        }
    }
    Subgroup::from_bits(members)
}

/// `^x s = { x y x⁻¹ : y ∈ s }`.
pub fn conjugate_subgroup<G: Group>(group: &G, s: &Subgroup, x: usize) -> Subgroup {
    let xi = group.inv(x);
    let mut bits = BitSet::new(group.order());
    for y in s.iter() {
        bits.insert(group.mul(group.mul(x, y), xi));
    }
    Subgroup::from_bits(bits)
}

pub fn normalizer<G: Group>(group: &G, s: &Subgroup) -> Subgroup {
    let members = (0..group.order()).filter(|&x| {
        let xi = group.inv(x);
        s.iter().all(|y| s.contains(group.mul(group.mul(x, y), xi)))
    });
    Subgroup::from_bits(BitSet::from_indices(group.order(), members))
}

pub fn is_normal<G: Group>(group: &G, s: &Subgroup) -> bool {
    normalizer(group, s).is_whole()
}

pub fn center<G: Group>(group: &G) -> Subgroup {
    let n = group.order();
    let members = (0..n).filter(|&z| (0..n).all(|x| group.mul(z, x) == group.mul(x, z)));
    Subgroup::from_bits(BitSet::from_indices(n, members))
}

/// One representative per double coset `a\g/b`, each the smallest element
/// index of its double coset, in increasing order.
pub fn double_cosets<G: Group>(group: &G, a: &Subgroup, b: &Subgroup) -> Vec<usize> {
    let n = group.order();
    let mut seen = BitSet::new(n);
    let a_elems: Vec<usize> = a.iter().collect();
    let b_elems: Vec<usize> = b.iter().collect();
    let mut reps = Vec::new();
    for x in 0..n {
        if seen.contains(x) {
            continue;
        }
        reps.push(x);
        for &u in &a_elems {
            let ux = group.mul(u, x);
            for &v in &b_elems {
                seen.insert(group.mul(ux, v));
            }
        }
    }
    reps
}

/// Size of the double coset `a·x·b`.
pub fn double_coset_size<G: Group>(group: &G, a: &Subgroup, b: &Subgroup, x: usize) -> usize {
    let mut seen = BitSet::new(group.order());
    for u in a.iter() {
        let ux = group.mul(u, x);
        for v in b.iter() {
            seen.insert(group.mul(ux, v));
        }
    }
    seen.count()
}
