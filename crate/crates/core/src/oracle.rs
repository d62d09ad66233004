//! Brute-force composition of transitive bisets on explicit coset spaces.
//! Independent of the Mackey formula and used to certify it.

use crate::error::{Error, Result};
use crate::group::{conjugate_subgroup, Group, Subgroup};
use crate::lattice::center_transversal;
use crate::star::StarFrame;

/// Largest `|GHT/L|·|HKT/M|` the oracle will build.
pub const ORBIT_POINT_BOUND: usize = 1_000_000;

/// Left cosets `xS` with the left action of the ambient group on them.
struct CosetSpace {
    coset_of: Vec<u32>,
    reps: Vec<usize>,
}

impl CosetSpace {
    fn new<G: Group>(group: &G, s: &Subgroup) -> Self {
        let n = group.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for y in s.iter() {
                coset_of[group.mul(x, y)] = id;
            }
        }
        CosetSpace { coset_of, reps }
    }

    fn len(&self) -> usize {
        self.reps.len()
    }

    fn act<G: Group>(&self, group: &G, e: usize, c: usize) -> usize {
        self.coset_of[group.mul(e, self.reps[c])] as usize
    }
}

/// Stabilizers of the orbits of `GKT` on `GHT/L ×^d_H HKT/M`, where `H`
/// identifies `(x, y)` with `((1,h,1)x, (h,1,1)y)` and `(g,k,t)` sends
/// `[x, y]` to `[(g,1,t)x, (1,k,t)y]`. One stabilizer per orbit.
pub fn orbit_compose_oracle(frame: &StarFrame, l: &Subgroup, m: &Subgroup) -> Result<Vec<Subgroup>> {
    let (left, right, out) = (frame.left(), frame.right(), frame.out());
    let xs = CosetSpace::new(left, l);
    let ys = CosetSpace::new(right, m);
    let points = xs.len() * ys.len();
    if points > ORBIT_POINT_BOUND {
        return Err(Error::OrderBound {
            order: points,
            bound: ORBIT_POINT_BOUND,
        });
    }
    let ny = ys.len();
    let h = left.factor(1);

    // classes of the middle H-action
    let mut class = vec![u32::MAX; points];
    let mut class_rep = Vec::new();
    for p in 0..points {
        if class[p] != u32::MAX {
            continue;
        }
        let id = class_rep.len() as u32;
        class_rep.push(p);
        let (cx, cy) = (p / ny, p % ny);
        for a in 0..h.order() {
            let qx = xs.act(left, left.embed(1, a), cx);
            let qy = ys.act(right, right.embed(0, a), cy);
            class[qx * ny + qy] = id;
        }
    }

    let act = |e: usize, c: usize| -> usize {
        let [g, k, t] = out.decode(e);
        let p = class_rep[c];
        let qx = xs.act(left, left.encode(g, left.factor(1).identity(), t), p / ny);
        let qy = ys.act(right, right.encode(right.factor(0).identity(), k, t), p % ny);
        class[qx * ny + qy] as usize
    };

    let mut seen = vec![false; class_rep.len()];
    let mut stabilizers = Vec::new();
    for c in 0..class_rep.len() {
        if seen[c] {
            continue;
        }
        let mut stab = crate::bitset::BitSet::new(out.order());
        for e in 0..out.order() {
            let img = act(e, c);
            seen[img] = true;
            if img == c {
                stab.insert(e);
            }
        }
        stabilizers.push(Subgroup::from_bits(stab));
    }
    Ok(stabilizers)
}

/// Smallest conjugate of `s`.
pub fn canonical_conjugate<G: Group>(group: &G, conjugators: &[usize], s: &Subgroup) -> Subgroup {
    conjugators
        .iter()
        .map(|&x| conjugate_subgroup(group, s, x))
        .min()
        .unwrap_or_else(|| s.clone())
}

/// Sorted canonical conjugates: equal iff the multisets of conjugacy
/// classes agree.
pub fn class_multiset<G: Group>(group: &G, items: &[Subgroup]) -> Vec<Subgroup> {
    let conj = center_transversal(group);
    let mut v: Vec<Subgroup> = items.iter().map(|s| canonical_conjugate(group, &conj, s)).collect();
    v.sort();
    v
}
