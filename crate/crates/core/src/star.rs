//! The star product of subgroups of triple products, the κ factor, the
//! Mackey formula for composing transitive bisets, and the map α.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{conjugate_subgroup, double_cosets, normalizer, FiniteGroup, Group, Subgroup};
use crate::product::TripleProduct;

/// The three ambients `G×H×T`, `H×K×T` and `G×K×T` of a star product,
/// together with `H×T`, where the Mackey double cosets live.
#[derive(Clone, Debug)]
pub struct StarFrame {
    left: TripleProduct,
    right: TripleProduct,
    out: TripleProduct,
    ht: FiniteGroup,
}

impl StarFrame {
    /// Frame for `G×H×T` and `H×K×T`.
    pub fn new(left: &TripleProduct, right: &TripleProduct) -> Result<Self> {
        if !left.factor(1).same_table(right.factor(0)) {
            return Err(Error::AmbientMismatch(format!(
                "middle factor of {} differs from first factor of {}",
                left.name(),
                right.name()
            )));
        }
        if !left.factor(2).same_table(right.factor(2)) {
            return Err(Error::AmbientMismatch(format!(
                "third factors of {} and {} differ",
                left.name(),
                right.name()
            )));
        }
        let out = TripleProduct::with_bound(left.factor(0), right.factor(1), left.factor(2), usize::MAX)?;
        let ht = left.pair_group(1, 2);
        Ok(StarFrame {
            left: left.clone(),
            right: right.clone(),
            out,
            ht,
        })
    }

    /// Frame built from the four groups `G, H, K, T`.
    pub fn from_groups(g: &FiniteGroup, h: &FiniteGroup, k: &FiniteGroup, t: &FiniteGroup) -> Result<Self> {
        let left = TripleProduct::new(g, h, t)?;
        let right = TripleProduct::new(h, k, t)?;
        StarFrame::new(&left, &right)
    }

    pub fn left(&self) -> &TripleProduct {
        &self.left
    }

    pub fn right(&self) -> &TripleProduct {
        &self.right
    }

    pub fn out(&self) -> &TripleProduct {
        &self.out
    }

    /// `H×T` with index `h·|T| + t`.
    pub fn middle(&self) -> &FiniteGroup {
        &self.ht
    }

    /// `D∗E = {(g,k,t) : ∃h, (g,h,t) ∈ D, (h,k,t) ∈ E}`.
    pub fn star(&self, d: &Subgroup, e: &Subgroup) -> Subgroup {
        // hash join on the shared (h, t) coordinates
        let mut by_key: Vec<Vec<u32>> = vec![Vec::new(); self.ht.order()];
        for x in e.iter() {
            let k = self.right.project(1, x);
            by_key[self.right.project_pair(0, 2, x)].push(k as u32);
        }
        let mut bits = BitSet::new(self.out.order());
        for x in d.iter() {
            let [g, _, t] = self.left.decode(x);
            for &k in &by_key[self.left.project_pair(1, 2, x)] {
                bits.insert(self.out.encode(g, k as usize, t));
            }
        }
        Subgroup::from_bits(bits)
    }

    /// `κ(D, E) = |k_2(D) ∩ k_1(E)| / |H|`.
    pub fn kappa(&self, d: &Subgroup, e: &Subgroup) -> BigRational {
        let h = self.left.factor(1);
        let common = (0..h.order())
            .filter(|&x| d.contains(self.left.embed(1, x)) && e.contains(self.right.embed(0, x)))
            .count();
        BigRational::new(BigInt::from(common), BigInt::from(h.order()))
    }

    /// Bilinear extension of `(D, E) ↦ κ(D, E)·(D∗E)`.
    pub fn star_kappa(&self, u: &SparseGroupedVector, v: &SparseGroupedVector) -> SparseGroupedVector {
        let mut out = SparseGroupedVector::new();
        for (d, a) in u.iter() {
            for (e, b) in v.iter() {
                out.add_term(self.star(d, e), a * b * self.kappa(d, e));
            }
        }
        out
    }

    /// Double coset representatives `(h, t)` of `p_{2,3}(L)\(H×T)/p_{1,3}(M)`,
    /// as indices of `H×T`, in increasing order.
    pub fn mackey_representatives(&self, l: &Subgroup, m: &Subgroup) -> Vec<usize> {
        let a = self.left.pair_projection(l, 1, 2);
        let b = self.right.pair_projection(m, 0, 2);
        double_cosets(&self.ht, &a, &b)
    }

    /// `^{(h,1,t)}M` for an index `(h, t)` of `H×T`.
    pub fn conjugate_right(&self, m: &Subgroup, ht: usize) -> Subgroup {
        let nt = self.right.factor(2).order();
        let x = self.right.encode(ht / nt, self.right.factor(1).identity(), ht % nt);
        conjugate_subgroup(&self.right, m, x)
    }

    /// Stabilizers of the transitive summands of `[GHT/L] ×^d_H [HKT/M]`:
    /// one `L ∗ ^{(h,1,t)}M` per Mackey double coset representative.
    pub fn mackey_compose(&self, l: &Subgroup, m: &Subgroup) -> Vec<Subgroup> {
        self.mackey_representatives(l, m)
            .into_iter()
            .map(|x| self.star(l, &self.conjugate_right(m, x)))
            .collect()
    }

    /// Checks `k_1(D) ⊆ k_1(D∗E) ⊆ p_1(D∗E) ⊆ p_1(D)`, the matching chain
    /// through `E` on the second coordinate, and
    /// `k_3(D) ∩ k_3(E) ⊆ k_3(D∗E) ⊆ p_3(D∗E) ⊆ p_3(D) ∩ p_3(E)`.
    pub fn inclusion_chains_hold(&self, d: &Subgroup, e: &Subgroup, de: &Subgroup) -> bool {
        let (l, r, o) = (&self.left, &self.right, &self.out);
        let chain = |a: &Subgroup, b: &Subgroup, c: &Subgroup, f: &Subgroup| {
            a.is_subgroup_of(b) && b.is_subgroup_of(c) && c.is_subgroup_of(f)
        };
        let t_low = l.kernel(d, 2).intersection(&r.kernel(e, 2));
        let t_high = l.projection(d, 2).intersection(&r.projection(e, 2));
        chain(&l.kernel(d, 0), &o.kernel(de, 0), &o.projection(de, 0), &l.projection(d, 0))
            && chain(&r.kernel(e, 1), &o.kernel(de, 1), &o.projection(de, 1), &r.projection(e, 1))
            && chain(&t_low, &o.kernel(de, 2), &o.projection(de, 2), &t_high)
    }
}

/// Exact rational combination of subgroups, without stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseGroupedVector {
    entries: BTreeMap<Subgroup, BigRational>,
}

impl SparseGroupedVector {
    pub fn new() -> Self {
        SparseGroupedVector::default()
    }

    pub fn basis(s: Subgroup) -> Self {
        let mut v = SparseGroupedVector::new();
        v.add_term(s, BigRational::one());
        v
    }

    pub fn add_term(&mut self, s: Subgroup, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.entries.entry(s) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &SparseGroupedVector) {
        for (s, c) in other.iter() {
            self.add_term(s.clone(), c.clone());
        }
    }

    pub fn scaled(&self, c: &BigRational) -> SparseGroupedVector {
        let mut v = SparseGroupedVector::new();
        for (s, a) in self.iter() {
            v.add_term(s.clone(), a * c);
        }
        v
    }

    pub fn get(&self, s: &Subgroup) -> BigRational {
        self.entries.get(s).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Subgroup, &BigRational)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `α([P/U]) = [N_P(U):U]·Σ U'` over the conjugates `U'` of `U`.
pub fn alpha_transitive<G: Group>(p: &G, u: &Subgroup) -> SparseGroupedVector {
    let n = normalizer(p, u);
    let coeff = BigRational::from_integer(BigInt::from(n.order() / u.order()));
    let mut v = SparseGroupedVector::new();
    let mut seen = std::collections::HashSet::new();
    for x in 0..p.order() {
        let c = conjugate_subgroup(p, u, x);
        if seen.insert(c.bits().clone()) {
            v.add_term(c, coeff.clone());
        }
    }
    v
}

/// α extended linearly over a multiset of stabilizers.
pub fn alpha_of_multiset<G: Group>(p: &G, stabilizers: &[Subgroup]) -> SparseGroupedVector {
    let mut v = SparseGroupedVector::new();
    for s in stabilizers {
        v.add(&alpha_transitive(p, s));
    }
    v
}

/// `D = X∗Y` through the section `D_1 = p_1(D)/k_1(D)`.
#[derive(Clone, Debug)]
pub struct GoursatFactor {
    pub section: FiniteGroup,
    /// Ambient `H×D_1×T` of `x`.
    pub left: TripleProduct,
    pub x: Subgroup,
    /// Ambient `D_1×K×T` of `y`.
    pub right: TripleProduct,
    pub y: Subgroup,
}

/// Factors `d ≤ H×K×T` as `x∗y` with `x = {(h,[h],t) : h ∈ p_1(d), t ∈ T}`
/// and `y = {([h],k,t) : (h,k,t) ∈ d}`.
pub fn goursat_factor(p: &TripleProduct, d: &Subgroup) -> Result<GoursatFactor> {
    let h = p.factor(0);
    let t = p.factor(2);
    let p1 = p.projection(d, 0);
    let k1 = p.kernel(d, 0);
    let (section, coset) = FiniteGroup::quotient(h, &p1, &k1, "D1");
    let left = TripleProduct::with_bound(h, &section, t, usize::MAX)?;
    let right = TripleProduct::with_bound(&section, p.factor(1), t, usize::MAX)?;
    let x = BitSet::from_indices(
        left.order(),
        p1.iter()
            .flat_map(|a| (0..t.order()).map(move |z| (a, z)))
            .map(|(a, z)| left.encode(a, coset[a], z)),
    );
    let y = BitSet::from_indices(
        right.order(),
        d.iter().map(|e| {
            let [a, k, z] = p.decode(e);
            right.encode(coset[a], k, z)
        }),
    );
    Ok(GoursatFactor {
        section,
        left,
        x: Subgroup::from_bits(x),
        right,
        y: Subgroup::from_bits(y),
    })
}

/// `Δ(G)×T` inside `G×G×T`.
pub fn diagonal_times_t(p: &TripleProduct) -> Subgroup {
    let g = p.factor(0);
    let t = p.factor(2);
    Subgroup::from_bits(BitSet::from_indices(
        p.order(),
        (0..g.order()).flat_map(|a| (0..t.order()).map(move |z| p.encode(a, a, z))),
    ))
}
