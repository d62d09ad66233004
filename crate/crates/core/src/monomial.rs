//! The product-type classes `D_{σ,α,T0} = {(α(t)σ(g), g, t)}`, their
//! conjugacy, their multiplication law, and the count `Prod`.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::group::{
    all_homomorphisms, automorphisms, center, conjugate_subgroup, double_cosets, inner_automorphism,
    normalizer, Automorphisms, FiniteGroup, Group, GroupHom, Subgroup,
};
use crate::lattice::{all_subgroups, conjugacy_classes_of_subgroups};
use crate::product::TripleProduct;

/// A subgroup `X ≤ T` with a homomorphism `φ : X → Z(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialPair {
    pub x: Subgroup,
    pub phi: GroupHom,
}

/// Data `(σ, α, T0)` of the subgroup `D_{σ,α,T0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LpDescriptor {
    pub sigma: GroupHom,
    pub alpha: GroupHom,
    pub t0: Subgroup,
}

type CanonicalKey = (Subgroup, Vec<usize>, Vec<usize>);

/// Groups `G`, `T` with the data shared by every descriptor computation.
#[derive(Clone, Debug)]
pub struct MonomialContext {
    g: FiniteGroup,
    t: FiniteGroup,
    center: Subgroup,
    center_group: FiniteGroup,
    center_embedding: Vec<usize>,
    auts: Automorphisms,
    inner: Vec<GroupHom>,
}

impl MonomialContext {
    pub fn new(g: &FiniteGroup, t: &FiniteGroup) -> Self {
        let z = center(g);
        let (center_group, center_embedding) = FiniteGroup::from_subgroup(g, &z, "Z");
        let mut seen = HashSet::new();
        let inner = (0..g.order())
            .map(|x| inner_automorphism(g, x))
            .filter(|c| seen.insert(c.table()))
            .collect();
        MonomialContext {
            g: g.clone(),
            t: t.clone(),
            center: z,
            center_group,
            center_embedding,
            auts: automorphisms(g),
            inner,
        }
    }

    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn t(&self) -> &FiniteGroup {
        &self.t
    }

    pub fn automorphisms(&self) -> &Automorphisms {
        &self.auts
    }

    /// `Hom(x, Z(G))` with images as elements of `G`.
    pub fn central_homs(&self, x: &Subgroup) -> Vec<GroupHom> {
        all_homomorphisms(&self.t, x, &self.center_group)
            .into_iter()
            .map(|f| GroupHom::from_pairs(x.clone(), x.iter().map(|a| (a, self.center_embedding[f.apply(a)]))))
            .collect()
    }

    pub fn identity_descriptor(&self) -> LpDescriptor {
        let t0 = self.t.whole();
        LpDescriptor {
            sigma: GroupHom::from_pairs(self.g.whole(), (0..self.g.order()).map(|x| (x, x))),
            alpha: GroupHom::trivial(t0.clone(), self.g.identity()),
            t0,
        }
    }

    /// `{(α(t)σ(g), g, t) : g ∈ G, t ∈ T0}`.
    pub fn build_d(&self, desc: &LpDescriptor, p: &TripleProduct) -> Subgroup {
        let g = &self.g;
        let members = desc.t0.iter().flat_map(|t| {
            let a = desc.alpha.apply(t);
            (0..g.order()).map(move |x| p.encode(g.mul(a, desc.sigma.apply(x)), x, t))
        });
        Subgroup::from_bits(BitSet::from_indices(p.order(), members))
    }

    /// `β∘c_{t⁻¹}` on `^t T1`: `x ↦ β(t⁻¹ x t)`.
    pub fn conjugate_hom(&self, beta: &GroupHom, t: usize) -> GroupHom {
        let tg = &self.t;
        let dom = conjugate_subgroup(tg, beta.domain(), t);
        let ti = tg.inv(t);
        let pairs: Vec<(usize, usize)> = dom.iter().map(|x| (x, beta.apply(tg.conj(ti, x)))).collect();
        GroupHom::from_pairs(dom, pairs)
    }

    /// Whether some `(g, t)` has `T0 = ^t T1`, `σ = τ∘c_g` and `α = β∘c_{t⁻¹}`.
    pub fn lp_conjugacy_equal(&self, d1: &LpDescriptor, d2: &LpDescriptor) -> bool {
        let sigma_ok = self.inner.iter().any(|c| c.then(&d2.sigma) == d1.sigma);
        sigma_ok
            && (0..self.t.order()).any(|t| {
                let b = self.conjugate_hom(&d2.alpha, t);
                b.domain() == &d1.t0 && b == d1.alpha
            })
    }

    fn canonical_key(&self, d: &LpDescriptor) -> CanonicalKey {
        let (t0, alpha) = (0..self.t.order())
            .map(|t| {
                let b = self.conjugate_hom(&d.alpha, t);
                (b.domain().clone(), b.table())
            })
            .min()
            .expect("T is nonempty");
        let sigma = self
            .inner
            .iter()
            .map(|c| c.then(&d.sigma).table())
            .min()
            .expect("identity is inner");
        (t0, alpha, sigma)
    }

    /// The member of the conjugacy class of `d` minimizing
    /// `(T0, α table, σ table)`.
    pub fn canonical(&self, d: &LpDescriptor) -> LpDescriptor {
        let (t0, alpha, sigma) = self.canonical_key(d);
        LpDescriptor {
            sigma: GroupHom::from_pairs(self.g.whole(), sigma.into_iter().enumerate()),
            alpha: GroupHom::from_pairs(t0.clone(), t0.iter().zip(alpha)),
            t0,
        }
    }

    /// One canonical descriptor per conjugacy class of the subgroups
    /// `D_{σ,α,T0}`, sorted.
    pub fn lp_classes(&self) -> Vec<LpDescriptor> {
        let subs = all_subgroups(&self.t).expect("T within the lattice bound");
        let raw: Vec<LpDescriptor> = subs
            .iter()
            .flat_map(|x| {
                let homs = self.central_homs(x);
                self.auts.out_reps.iter().flat_map(move |s| {
                    homs.clone().into_iter().map(move |a| LpDescriptor {
                        sigma: s.clone(),
                        alpha: a,
                        t0: x.clone(),
                    })
                })
            })
            .collect();
        let mut keyed: Vec<(CanonicalKey, LpDescriptor)> =
            raw.par_iter().map(|d| (self.canonical_key(d), self.canonical(d))).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        keyed.into_iter().map(|(_, d)| d).collect()
    }

    /// `|Out(G)| · Σ_{X ∈ [S_T]} |Hom(X, Z(G)) / N_T(X)|`, where `u ∈ N_T(X)`
    /// acts by `f ↦ f∘c_u`.
    pub fn prod_count(&self) -> usize {
        let classes = conjugacy_classes_of_subgroups(&self.t).expect("T within the lattice bound");
        let per_class: usize = classes
            .iter()
            .map(|c| {
                let x = &c.representative;
                let homs = self.central_homs(x);
                let index: std::collections::HashMap<Vec<usize>, usize> =
                    homs.iter().enumerate().map(|(i, f)| (f.table(), i)).collect();
                let mut uf = UnionFind::new(homs.len());
                for u in normalizer(&self.t, x).iter() {
                    for (i, f) in homs.iter().enumerate() {
                        let moved: Vec<usize> = x.iter().map(|y| f.apply(self.t.conj(u, y))).collect();
                        uf.union(i, index[&moved]);
                    }
                }
                uf.components()
            })
            .sum();
        self.auts.out_order() * per_class
    }

    /// `D_{σ,α,T0} ∘ D_{τ,β,T1} = ⊔_t D_{στ, α·(σ∘ᵗβ), T0∩ᵗT1}` over
    /// `t ∈ [T0\T/T1]`.
    pub fn lp_product(&self, d1: &LpDescriptor, d2: &LpDescriptor) -> Vec<LpDescriptor> {
        let g = &self.g;
        double_cosets(&self.t, &d1.t0, &d2.t0)
            .into_iter()
            .map(|t| {
                let beta = self.conjugate_hom(&d2.alpha, t);
                let dom = d1.t0.intersection(beta.domain());
                let alpha = GroupHom::from_pairs(
                    dom.clone(),
                    dom.iter()
                        .map(|x| (x, g.mul(d1.alpha.apply(x), d1.sigma.apply(beta.apply(x)))))
                        .collect::<Vec<_>>(),
                );
                LpDescriptor {
                    sigma: d2.sigma.then(&d1.sigma),
                    alpha,
                    t0: dom,
                }
            })
            .collect()
    }

    /// `(X1, φ)·(X2, ψ) = Σ_{g ∈ [X1\T/X2]} (X1 ∩ ᵍX2, φ·ᵍψ)`.
    pub fn monomial_product(&self, a: &MonomialPair, b: &MonomialPair) -> Vec<MonomialPair> {
        let g = &self.g;
        double_cosets(&self.t, &a.x, &b.x)
            .into_iter()
            .map(|t| {
                let psi = self.conjugate_hom(&b.phi, t);
                let dom = a.x.intersection(psi.domain());
                let phi = GroupHom::from_pairs(
                    dom.clone(),
                    dom.iter().map(|x| (x, g.mul(a.phi.apply(x), psi.apply(x)))).collect::<Vec<_>>(),
                );
                MonomialPair { x: dom, phi }
            })
            .collect()
    }

    /// `τ(X, α) = (X, τ∘α)`.
    pub fn twist(&self, tau: &GroupHom, p: &MonomialPair) -> MonomialPair {
        MonomialPair {
            x: p.x.clone(),
            phi: p.phi.then(tau),
        }
    }

    pub fn is_central(&self, f: &GroupHom) -> bool {
        f.table().into_iter().all(|y| self.center.contains(y))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

pub fn prod_count(g: &FiniteGroup, t: &FiniteGroup) -> usize {
    MonomialContext::new(g, t).prod_count()
}

pub fn lp_classes(g: &FiniteGroup, t: &FiniteGroup) -> Vec<LpDescriptor> {
    MonomialContext::new(g, t).lp_classes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog_lookup;
    use crate::lattice::is_gen_shaped;
    use crate::star::diagonal_times_t;

    fn g(name: &str) -> FiniteGroup {
        catalog_lookup(name).unwrap()
    }

    #[test]
    fn counts_with_trivial_t() {
        let c1 = FiniteGroup::cyclic(1);
        for (name, out) in [("C2", 1), ("C3", 2), ("C4", 2), ("V4", 6), ("S3", 1), ("C5", 4)] {
            let ctx = MonomialContext::new(&g(name), &c1);
            assert_eq!(ctx.prod_count(), out, "{name}");
            assert_eq!(ctx.lp_classes().len(), out, "{name}");
        }
    }

    #[test]
    fn coprime_center_count() {
        // Hom(X, C3) is trivial for every X ≤ C4; three classes of X, |Out(C3)| = 2
        assert_eq!(prod_count(&g("C3"), &g("C4")), 6);
    }

    #[test]
    fn identity_descriptor_builds_diagonal() {
        let (c4, q8) = (g("C4"), g("Q8"));
        let ctx = MonomialContext::new(&c4, &q8);
        let p = TripleProduct::new(&c4, &c4, &q8).unwrap();
        let d = ctx.build_d(&ctx.identity_descriptor(), &p);
        assert_eq!(d, diagonal_times_t(&p));
    }

    #[test]
    fn built_subgroups_have_generating_shape() {
        let (c4, c4t) = (g("C4"), g("C4"));
        let ctx = MonomialContext::new(&c4, &c4t);
        let p = TripleProduct::new(&c4, &c4, &c4t).unwrap();
        for d in ctx.lp_classes() {
            let s = ctx.build_d(&d, &p);
            assert!(s.is_closed(&p));
            assert_eq!(s.order(), 4 * d.t0.order());
            assert!(is_gen_shaped(&p, &s));
            let pk = p.projections_and_kernels(&s);
            assert_eq!(pk.p[2], d.t0);
            assert_eq!(pk.k[2], d.alpha.kernel(c4.identity()));
        }
    }

    #[test]
    fn inversion_is_not_inner_in_c4() {
        let c4 = g("C4");
        let ctx = MonomialContext::new(&c4, &c4);
        let id = ctx.identity_descriptor();
        let inv = LpDescriptor {
            sigma: GroupHom::from_pairs(c4.whole(), (0..4).map(|x| (x, c4.inv(x)))),
            ..id.clone()
        };
        assert!(ctx.lp_conjugacy_equal(&id, &id));
        assert!(!ctx.lp_conjugacy_equal(&id, &inv));
    }

    #[test]
    fn identity_is_a_unit_for_lp_product() {
        let (s3, c3) = (g("S3"), g("C3"));
        let ctx = MonomialContext::new(&s3, &c3);
        let id = ctx.identity_descriptor();
        for d in ctx.lp_classes() {
            assert_eq!(ctx.lp_product(&d, &id), vec![d.clone()]);
        }
    }
}
