//! Subgroup lattices, conjugacy classes of subgroups, and the graph-shaped
//! subgroups of triple products used by the essential-algebra pipeline.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{all_homomorphisms, conjugate_subgroup, extend_with_gens, Group, Subgroup};
use crate::product::TripleProduct;

/// Largest group whose full lattice is enumerated.
pub const LATTICE_BOUND: usize = 4096;

/// A conjugacy class of subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    pub class_index: usize,
    /// The smallest member in [`Subgroup`] order.
    pub representative: Subgroup,
    /// All conjugates, sorted, duplicate free.
    pub members: Vec<Subgroup>,
}

/// Every subgroup of `g`, sorted by (order, sorted element list).
///
/// Subgroups are grown layer by layer: each layer adjoins one more cyclic
/// subgroup to the subgroups found in the previous one. Every subgroup is a
/// join of cyclic subgroups, so the layers exhaust the lattice.
pub fn all_subgroups<G: Group>(g: &G) -> Result<Vec<Subgroup>> {
    let n = g.order();
    if n > LATTICE_BOUND {
        return Err(Error::OrderBound {
            order: n,
            bound: LATTICE_BOUND,
        });
    }
    let trivial = g.trivial();
    let mut cyclic: Vec<(Subgroup, usize)> = Vec::new();
    let mut seen_cyclic: HashMap<BitSet, ()> = HashMap::new();
    for x in 0..n {
        let c = extend_with_gens(g, &trivial, &[], &[x]);
        if seen_cyclic.insert(c.bits().clone(), ()).is_none() {
            cyclic.push((c, x));
        }
    }
    cyclic.sort();

    let mut found: HashMap<BitSet, ()> = HashMap::new();
    let mut all: Vec<Subgroup> = Vec::new();
    let mut layer: Vec<(Subgroup, Vec<usize>)> = Vec::new();
    for (c, x) in &cyclic {
        found.insert(c.bits().clone(), ());
        all.push(c.clone());
        if !c.is_trivial() {
            layer.push((c.clone(), vec![*x]));
        }
    }

    while !layer.is_empty() {
        let produced: Vec<Vec<(Subgroup, Vec<usize>)>> = layer
            .par_iter()
            .map(|(s, gens)| {
                let mut local: HashMap<BitSet, ()> = HashMap::new();
                let mut out = Vec::new();
                for (c, x) in &cyclic {
                    if c.is_subgroup_of(s) {
                        continue;
                    }
                    let j = extend_with_gens(g, s, gens, &[*x]);
                    if local.insert(j.bits().clone(), ()).is_none() {
                        let mut jg = gens.clone();
                        jg.push(*x);
                        out.push((j, jg));
                    }
                }
                out
            })
            .collect();
        let mut next = Vec::new();
        for batch in produced {
            for (j, jg) in batch {
                if found.insert(j.bits().clone(), ()).is_none() {
                    all.push(j.clone());
                    next.push((j, jg));
                }
            }
        }
        next.sort();
        layer = next;
    }
    all.sort();
    Ok(all)
}

/// Partitions a conjugation-closed family of subgroups into conjugacy
/// classes, conjugating by `conjugators` (which must reach every conjugate,
/// e.g. a transversal of the center). Classes are ordered by representative.
pub fn classes_of_family<G: Group>(
    g: &G,
    conjugators: &[usize],
    mut family: Vec<Subgroup>,
) -> Vec<SubgroupClass> {
    family.sort();
    family.dedup();
    let index: HashMap<&BitSet, usize> = family.iter().enumerate().map(|(i, s)| (s.bits(), i)).collect();
    let mut assigned = vec![false; family.len()];
    let mut classes = Vec::new();
    for i in 0..family.len() {
        if assigned[i] {
            continue;
        }
        let rep = &family[i];
        let mut members: Vec<usize> = Vec::new();
        for &x in conjugators {
            let c = conjugate_subgroup(g, rep, x);
            let j = *index
                .get(c.bits())
                .expect("family must be closed under conjugation");
            if !assigned[j] {
                assigned[j] = true;
                members.push(j);
            }
        }
        members.sort_unstable();
        classes.push(SubgroupClass {
            class_index: classes.len(),
            representative: rep.clone(),
            members: members.into_iter().map(|j| family[j].clone()).collect(),
        });
    }
    classes
}

/// Elements of `g` forming a transversal of its center.
pub fn center_transversal<G: Group>(g: &G) -> Vec<usize> {
    let z = crate::group::center(g);
    let mut seen = BitSet::new(g.order());
    let mut out = Vec::new();
    for x in 0..g.order() {
        if seen.contains(x) {
            continue;
        }
        out.push(x);
        for c in z.iter() {
            seen.insert(g.mul(x, c));
        }
    }
    out
}

pub fn conjugacy_classes_of_subgroups<G: Group>(g: &G) -> Result<Vec<SubgroupClass>> {
    let subs = all_subgroups(g)?;
    Ok(classes_of_family(g, &center_transversal(g), subs))
}

/// True when `p_1(D)` is the first factor and `k_1(D)` is trivial, and
/// likewise for the second coordinate.
pub fn is_gen_shaped(p: &TripleProduct, d: &Subgroup) -> bool {
    p.projection(d, 0).is_whole()
        && p.projection(d, 1).is_whole()
        && p.kernel(d, 0).is_trivial()
        && p.kernel(d, 1).is_trivial()
}

/// Every `L ≤ X×Y×Z` with `p_1(L) = X` and `k_1(L) = 1`, i.e. every graph
/// `{(f(a), a) : a ∈ A}` of a surjection `f : A ↠ X` from some `A ≤ Y×Z`.
///
/// With `reduced`, only those that also have `p_2(L) = Y` and `k_2(L) = 1`.
pub fn graph_subgroups(p: &TripleProduct, reduced: bool) -> Result<Vec<Subgroup>> {
    let x = p.factor(0);
    let yz = p.pair_group(1, 2);
    let nz = p.factor(2).order();
    let ny = p.factor(1).order();
    let stride = yz.order();
    let sub_a = all_subgroups(&yz)?;
    let per_a: Vec<Vec<Subgroup>> = sub_a
        .par_iter()
        .filter(|a| a.order() % x.order() == 0)
        .filter(|a| {
            !reduced || {
                let mut proj = BitSet::new(ny);
                a.iter().for_each(|e| {
                    proj.insert(e / nz);
                });
                proj.count() == ny
            }
        })
        .map(|a| {
            all_homomorphisms(&yz, a, x)
                .into_iter()
                .filter(|f| f.image(x.order()).is_whole())
                .map(|f| {
                    Subgroup::from_bits(BitSet::from_indices(
                        p.order(),
                        a.iter().map(|e| f.apply(e) * stride + e),
                    ))
                })
                .filter(|l| !reduced || p.kernel(l, 1).is_trivial())
                .collect()
        })
        .collect();
    Ok(per_a.into_iter().flatten().collect())
}

/// Conjugacy classes of generating subgroups of `G×G×T`: full first and
/// second projections, trivial first and second kernels. Built directly from
/// graphs of surjections.
pub fn gen_classes(p: &TripleProduct) -> Result<Vec<SubgroupClass>> {
    check_square(p)?;
    let family = graph_subgroups(p, true)?;
    Ok(classes_of_family(p, &p.conjugators(), family))
}

/// The same classes, by filtering the full lattice of `G×G×T`.
pub fn gen_classes_by_filter(p: &TripleProduct) -> Result<Vec<SubgroupClass>> {
    check_square(p)?;
    let classes = conjugacy_classes_of_subgroups(p)?;
    let kept: Vec<SubgroupClass> = classes
        .into_iter()
        .filter(|c| is_gen_shaped(p, &c.representative))
        .enumerate()
        .map(|(i, mut c)| {
            c.class_index = i;
            c
        })
        .collect();
    Ok(kept)
}

fn check_square(p: &TripleProduct) -> Result<()> {
    if !p.factor(0).same_table(p.factor(1)) {
        return Err(Error::AmbientMismatch(format!(
            "generating classes need G×G×T, got {}",
            p.name()
        )));
    }
    Ok(())
}
