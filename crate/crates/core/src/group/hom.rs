use std::collections::HashSet;

use super::{Group, Subgroup};
use crate::bitset::BitSet;

const UNSET: u32 = u32::MAX;

/// A homomorphism from a subgroup of a source group into a codomain group.
/// The image table is indexed by source element; entries outside the
/// domain are unset.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupHom {
    domain: Subgroup,
    images: Vec<u32>,
}

impl GroupHom {
    /// Builds a map from explicit `(x, f(x))` pairs covering the domain.
    /// Does not check the homomorphism property; see [`GroupHom::respects`].
    pub fn from_pairs(domain: Subgroup, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut images = vec![UNSET; domain.parent_order()];
        for (x, y) in pairs {
            images[x] = y as u32;
        }
        debug_assert!(domain.iter().all(|x| images[x] != UNSET));
        GroupHom { domain, images }
    }

    /// The homomorphism sending all of `domain` to `identity`.
    pub fn trivial(domain: Subgroup, identity: usize) -> Self {
        let pairs: Vec<(usize, usize)> = domain.iter().map(|x| (x, identity)).collect();
        GroupHom::from_pairs(domain, pairs)
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        let y = self.images[x];
        assert!(y != UNSET, "element {x} outside the domain");
        y as usize
    }

    /// Images of the domain members in increasing member order.
    pub fn table(&self) -> Vec<usize> {
        self.domain.iter().map(|x| self.images[x] as usize).collect()
    }

    pub fn image(&self, codomain_order: usize) -> Subgroup {
        Subgroup::from_bits(BitSet::from_indices(codomain_order, self.table()))
    }

    pub fn kernel(&self, codomain_identity: usize) -> Subgroup {
        let n = self.domain.parent_order();
        Subgroup::from_bits(BitSet::from_indices(
            n,
            self.domain
                .iter()
                .filter(|&x| self.images[x] as usize == codomain_identity),
        ))
    }

    pub fn is_injective(&self) -> bool {
        let t = self.table();
        t.iter().collect::<HashSet<_>>().len() == t.len()
    }

    /// Checks `f(xy) = f(x)f(y)` on all pairs of the domain.
    pub fn respects<S: Group, C: Group>(&self, source: &S, codomain: &C) -> bool {
        let elems: Vec<usize> = self.domain.iter().collect();
        elems.iter().all(|&x| {
            elems.iter().all(|&y| {
                self.apply(source.mul(x, y)) == codomain.mul(self.apply(x), self.apply(y))
            })
        })
    }

    /// `outer ∘ self`, where `outer` is defined on the whole codomain.
    pub fn then(&self, outer: &GroupHom) -> GroupHom {
        let pairs: Vec<(usize, usize)> = self
            .domain
            .iter()
            .map(|x| (x, outer.apply(self.apply(x))))
            .collect();
        GroupHom::from_pairs(self.domain.clone(), pairs)
    }
}

/// Extends the partial assignment `gens[i] -> imgs[i]` to the subgroup the
/// generators span, verifying every edge `x -> x·g`. Returns `None` when the
/// assignment is inconsistent.
fn extend_assignment<S: Group, C: Group>(
    source: &S,
    codomain: &C,
    gens: &[usize],
    imgs: &[usize],
) -> Option<Vec<u32>> {
    let mut images = vec![UNSET; source.order()];
    images[source.identity()] = codomain.identity() as u32;
    let mut queue = vec![source.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        let fx = images[x] as usize;
        for (&g, &a) in gens.iter().zip(imgs) {
            let y = source.mul(x, g);
            let fy = codomain.mul(fx, a) as u32;
            if images[y] == UNSET {
                images[y] = fy;
                queue.push(y);
            } else if images[y] != fy {
                return None;
            }
        }
    }
    Some(images)
}

/// Every homomorphism `d -> codomain`, duplicate free, ordered
/// lexicographically by the images of the greedy generating sequence of `d`.
pub fn all_homomorphisms<S: Group, C: Group>(
    source: &S,
    d: &Subgroup,
    codomain: &C,
) -> Vec<GroupHom> {
    let gens = d.generators(source);
    let orders: Vec<usize> = gens.iter().map(|&g| source.element_order(g)).collect();
    let candidates: Vec<Vec<usize>> = orders
        .iter()
        .map(|&n| {
            (0..codomain.order())
                .filter(|&y| n % codomain.element_order(y) == 0)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut imgs = Vec::with_capacity(gens.len());
    search(source, codomain, d, &gens, &candidates, &mut imgs, &mut out);
    out
}

fn search<S: Group, C: Group>(
    source: &S,
    codomain: &C,
    d: &Subgroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    imgs: &mut Vec<usize>,
    out: &mut Vec<GroupHom>,
) {
    let k = imgs.len();
    if k == gens.len() {
        let images = extend_assignment(source, codomain, gens, imgs).expect("checked at last level");
        out.push(GroupHom {
            domain: d.clone(),
            images,
        });
        return;
    }
    for &a in &candidates[k] {
        imgs.push(a);
        // prune on the subgroup spanned by the first k+1 generators
        if extend_assignment(source, codomain, &gens[..=k], imgs).is_some() {
            search(source, codomain, d, gens, candidates, imgs, out);
        }
        imgs.pop();
    }
}

/// The automorphism group of `g` with a fixed transversal of `Inn(g)`.
#[derive(Clone, Debug)]
pub struct Automorphisms {
    /// All automorphisms, sorted by image table.
    pub all: Vec<GroupHom>,
    pub inner_count: usize,
    /// One automorphism per coset of `Inn(g)`: the smallest image table in it.
    pub out_reps: Vec<GroupHom>,
}

impl Automorphisms {
    pub fn aut_order(&self) -> usize {
        self.all.len()
    }

    pub fn out_order(&self) -> usize {
        self.all.len() / self.inner_count
    }

    /// A generating set, chosen greedily in table order.
    pub fn generators(&self) -> Vec<GroupHom> {
        let mut gens: Vec<GroupHom> = Vec::new();
        let mut closure: HashSet<Vec<usize>> = HashSet::new();
        for f in &self.all {
            if closure.contains(&f.table()) {
                continue;
            }
            gens.push(f.clone());
            closure = close_under(&gens);
        }
        gens
    }
}

// Elements generated by `gens`, as image tables.
fn close_under(gens: &[GroupHom]) -> HashSet<Vec<usize>> {
    let mut seen = HashSet::new();
    let mut stack: Vec<GroupHom> = gens.to_vec();
    while let Some(a) = stack.pop() {
        if !seen.insert(a.table()) {
            continue;
        }
        for g in gens {
            let b = a.then(g);
            if !seen.contains(&b.table()) {
                stack.push(b);
            }
        }
    }
    seen
}

/// The inner automorphism `c_x : y ↦ x y x⁻¹`.
pub fn inner_automorphism<G: Group>(g: &G, x: usize) -> GroupHom {
    let pairs: Vec<(usize, usize)> = (0..g.order()).map(|y| (y, g.conj(x, y))).collect();
    GroupHom::from_pairs(g.whole(), pairs)
}

pub fn automorphisms<G: Group>(g: &G) -> Automorphisms {
    let n = g.order();
    let mut all: Vec<GroupHom> = all_homomorphisms(g, &g.whole(), g)
        .into_iter()
        .filter(|f| f.image(n).order() == n)
        .collect();
    all.sort_by_key(GroupHom::table);
    let inner: Vec<GroupHom> = {
        let mut seen = HashSet::new();
        (0..n)
            .map(|x| inner_automorphism(g, x))
            .filter(|c| seen.insert(c.table()))
            .collect()
    };
    let mut covered: HashSet<Vec<usize>> = HashSet::new();
    let mut out_reps = Vec::new();
    for sigma in &all {
        if covered.contains(&sigma.table()) {
            continue;
        }
        for c in &inner {
            covered.insert(c.then(sigma).table());
        }
        out_reps.push(sigma.clone());
    }
    Automorphisms {
        inner_count: inner.len(),
        all,
        out_reps,
    }
}

/// Exhaustive isomorphism test.
pub fn is_isomorphic<A: Group, B: Group>(a: &A, b: &B) -> bool {
    if a.order() != b.order() || a.is_abelian() != b.is_abelian() {
        return false;
    }
    let n = a.order();
    all_homomorphisms(a, &a.whole(), b)
        .iter()
        .any(|f| f.image(n).order() == n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog_lookup, FiniteGroup};

    // Independent count: every map on generator images that survives the
    // relation check, without pruning.
    fn brute_hom_count<S: Group, C: Group>(s: &S, c: &C) -> usize {
        let elems: Vec<usize> = (0..s.order()).collect();
        let gens = s.whole().generators(s);
        let mut count = 0;
        let mut idx = vec![0usize; gens.len()];
        loop {
            let imgs: Vec<usize> = idx.clone();
            if let Some(images) = extend_assignment(s, c, &gens, &imgs) {
                if elems.iter().all(|&x| {
                    elems.iter().all(|&y| {
                        images[s.mul(x, y)] as usize
                            == c.mul(images[x] as usize, images[y] as usize)
                    })
                }) {
                    count += 1;
                }
            }
            let mut k = 0;
            loop {
                if k == idx.len() {
                    return count;
                }
                idx[k] += 1;
                if idx[k] < c.order() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn automorphism_generators_generate() {
        for name in ["C2", "C4", "V4", "S3", "Q8", "C2xC2xC2", "C3xC3"] {
            let g = catalog_lookup(name).unwrap();
            let auts = automorphisms(&g);
            let gens = auts.generators();
            let mut seen: HashSet<Vec<usize>> = HashSet::new();
            let id: Vec<usize> = (0..g.order()).collect();
            seen.insert(id.clone());
            let mut stack = vec![GroupHom::from_pairs(g.whole(), id.into_iter().enumerate())];
            while let Some(a) = stack.pop() {
                for s in &gens {
                    let b = a.then(s);
                    if seen.insert(b.table()) {
                        stack.push(b);
                    }
                }
            }
            assert_eq!(seen.len(), auts.aut_order(), "{name}");
            assert!(gens.len() <= (auts.aut_order() as f64).log2() as usize + 1, "{name}");
        }
    }

    #[test]
    fn hom_counts_small_cases() {
        let c3 = catalog_lookup("C3").unwrap();
        let c4 = catalog_lookup("C4").unwrap();
        let c2 = catalog_lookup("C2").unwrap();
        let q8 = catalog_lookup("Q8").unwrap();
        assert_eq!(all_homomorphisms(&c3, &c3.whole(), &c4).len(), 1);
        assert_eq!(all_homomorphisms(&c4, &c4.whole(), &c4).len(), 4);
        assert_eq!(all_homomorphisms(&q8, &q8.whole(), &c2).len(), 4);
        assert_eq!(brute_hom_count(&c4, &c4), 4);
        assert_eq!(brute_hom_count(&q8, &c2), 4);
    }

    #[test]
    fn homs_respect_multiplication() {
        let s3 = catalog_lookup("S3").unwrap();
        let d8 = catalog_lookup("D8").unwrap();
        let homs = all_homomorphisms(&d8, &d8.whole(), &s3);
        assert_eq!(homs.len(), brute_hom_count(&d8, &s3));
        for f in &homs {
            assert!(f.respects(&d8, &s3));
        }
        let set: HashSet<_> = homs.iter().map(GroupHom::table).collect();
        assert_eq!(set.len(), homs.len());
    }

    #[test]
    fn automorphism_counts() {
        let cases = [("C4", 2, 2), ("S3", 6, 1), ("Q8", 24, 6), ("V4", 6, 6), ("C5", 4, 4)];
        for (name, aut, out) in cases {
            let g = catalog_lookup(name).unwrap();
            let a = automorphisms(&g);
            assert_eq!(a.aut_order(), aut, "{name}");
            assert_eq!(a.out_order(), out, "{name}");
            assert_eq!(a.out_reps.len(), out, "{name}");
        }
    }

    #[test]
    fn isomorphism_test_distinguishes() {
        let q8 = catalog_lookup("Q8").unwrap();
        assert!(is_isomorphic(&q8, &FiniteGroup::dicyclic(2)));
        assert!(!is_isomorphic(&q8, &catalog_lookup("D8").unwrap()));
    }
}
