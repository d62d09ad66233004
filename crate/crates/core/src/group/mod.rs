//! Finite groups as explicit multiplication tables.

mod catalog;
mod hom;
mod perm;
mod subgroup;

pub use catalog::{catalog_entries, catalog_lookup, groups_below, groups_with_orders, CatalogEntry, ISOMORPHISM_TYPE_COUNTS};
pub use hom::{
    all_homomorphisms, automorphisms, inner_automorphism, is_isomorphic, Automorphisms, GroupHom,
};
pub use perm::{parse_perm_group, Permutation};
pub use subgroup::{
    center, conjugate_subgroup, double_coset_size, double_cosets, extend, extend_with_gens,
    generate, is_normal, normalizer, Subgroup,
};

use crate::error::{Error, Result};

/// Largest group whose table is checked for associativity at construction.
pub const ASSOCIATIVITY_CHECK_BOUND: usize = 256;

/// Abstract access to a finite group on element indices `0..order()`.
pub trait Group: Sync {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;

    /// `^x g = x g x⁻¹`.
    #[inline]
    fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }

    fn element_order(&self, a: usize) -> usize {
        let e = self.identity();
        let mut x = a;
        let mut n = 1;
        while x != e {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    fn whole(&self) -> Subgroup {
        Subgroup::whole(self.order())
    }

    fn trivial(&self) -> Subgroup {
        Subgroup::trivial(self.order(), self.identity())
    }
}

/// A finite group stored as a dense multiplication table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    identity: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
}

impl FiniteGroup {
    /// Builds and validates a group from a row-major table `table[a * n + b] = ab`.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<u32>) -> Result<Self> {
        let name = name.into();
        let bad = |reason: String| Error::InvalidTable {
            name: name.clone(),
            reason,
        };
        if order == 0 || table.len() != order * order {
            return Err(bad(format!("table has {} entries for order {order}", table.len())));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(bad("entry out of range".into()));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] as usize == x && table[x * order + e] as usize == x))
            .ok_or_else(|| bad("no two-sided identity".into()))?;
        let mut inverse = vec![0u32; order];
        for (x, slot) in inverse.iter_mut().enumerate() {
            let y = (0..order)
                .find(|&y| table[x * order + y] as usize == identity)
                .ok_or_else(|| bad(format!("element {x} has no inverse")))?;
            if table[y * order + x] as usize != identity {
                return Err(bad(format!("inverse of {x} is one-sided")));
            }
            *slot = y as u32;
        }
        for row in 0..order {
            let mut seen = vec![false; order];
            for col in 0..order {
                let v = table[row * order + col] as usize;
                if std::mem::replace(&mut seen[v], true) {
                    return Err(bad(format!("row {row} is not a permutation")));
                }
            }
        }
        if order <= ASSOCIATIVITY_CHECK_BOUND {
            for a in 0..order {
                for b in 0..order {
                    let ab = table[a * order + b] as usize;
                    for c in 0..order {
                        let bc = table[b * order + c] as usize;
                        if table[ab * order + c] != table[a * order + bc] {
                            return Err(bad(format!("({a}{b}){c} != {a}({b}{c})")));
                        }
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name,
            order,
            identity,
            table,
            inverse,
        })
    }

    fn from_fn(name: &str, order: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(f(a, b) as u32);
            }
        }
        FiniteGroup::from_table(name, order, table).expect("formula defines a group")
    }

    /// Table equality, ignoring names.
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.order == other.order && self.table == other.table
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `C_n` with element `i` standing for `a^i`.
    pub fn cyclic(n: usize) -> Self {
        FiniteGroup::from_fn(&format!("C{n}"), n, |a, b| (a + b) % n)
    }

    /// Dihedral group of order `2n`; element `i + n*j` is `r^i s^j`.
    pub fn dihedral(n: usize) -> Self {
        FiniteGroup::from_fn(&format!("D{}", 2 * n), 2 * n, |x, y| {
            let (a, b) = (x % n, x / n);
            let (c, d) = (y % n, y / n);
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            rot + n * ((b + d) % 2)
        })
    }

    /// Dicyclic group of order `4n` (`Q8` for `n = 2`); element `i + 2n*j` is `a^i x^j`
    /// with `x a x⁻¹ = a⁻¹` and `x² = a^n`.
    pub fn dicyclic(n: usize) -> Self {
        let m = 2 * n;
        FiniteGroup::from_fn(&format!("Dic{n}"), 2 * m, |x, y| {
            let (i, j) = (x % m, x / m);
            let (k, l) = (y % m, y / m);
            if j == 0 {
                (i + k) % m + m * l
            } else {
                let base = (i + m - k) % m;
                if l == 0 {
                    base + m
                } else {
                    (base + n) % m
                }
            }
        })
    }

    /// Direct product with element `(x, y)` at index `x * |other| + y`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let (n1, n2) = (self.order, other.order);
        let mut table = Vec::with_capacity(n1 * n2 * n1 * n2);
        for a in 0..n1 * n2 {
            let (a1, a2) = (a / n2, a % n2);
            for b in 0..n1 * n2 {
                let (b1, b2) = (b / n2, b % n2);
                table.push((self.mul(a1, b1) * n2 + other.mul(a2, b2)) as u32);
            }
        }
        let name = format!("{}x{}", self.name, other.name);
        let inverse = (0..n1 * n2)
            .map(|a| (self.inv(a / n2) * n2 + other.inv(a % n2)) as u32)
            .collect();
        FiniteGroup {
            name,
            order: n1 * n2,
            identity: self.identity * n2 + other.identity,
            table,
            inverse,
        }
    }

    /// Materializes a subgroup as a group of its own; returns it with the
    /// embedding (new index -> parent index), members in increasing order.
    pub fn from_subgroup<G: Group>(parent: &G, s: &Subgroup, name: &str) -> (FiniteGroup, Vec<usize>) {
        let elems: Vec<usize> = s.iter().collect();
        let mut pos = vec![usize::MAX; parent.order()];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i;
        }
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for &a in &elems {
            for &b in &elems {
                table.push(pos[parent.mul(a, b)] as u32);
            }
        }
        let group = FiniteGroup::from_table(name, n, table).expect("closed subset");
        (group, elems)
    }

    /// Quotient `P/N` of a subgroup `P` by a normal subgroup `N ⊴ P`. Cosets are
    /// numbered by their smallest member; returns the group and the map
    /// parent element -> coset index (`usize::MAX` outside `P`).
    pub fn quotient<G: Group>(parent: &G, p: &Subgroup, n: &Subgroup, name: &str) -> (FiniteGroup, Vec<usize>) {
        let mut coset = vec![usize::MAX; parent.order()];
        let mut reps = Vec::new();
        for x in p.iter() {
            if coset[x] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(x);
            for k in n.iter() {
                coset[parent.mul(x, k)] = idx;
            }
        }
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(coset[parent.mul(a, b)] as u32);
            }
        }
        let group = FiniteGroup::from_table(name, m, table).expect("normal subgroup quotient");
        (group, coset)
    }
}

impl Group for FiniteGroup {
    #[inline]
    fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }
}
