use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{center, FiniteGroup, Group, Subgroup};

/// Default bound on the order of a triple product.
pub const PRODUCT_BOUND: usize = 4096;

/// `X×Y×Z` with mixed-radix indices: `(x, y, z) ↦ (x·|Y| + y)·|Z| + z`.
///
/// Multiplication is componentwise through the factor tables; the product
/// table itself is never materialized.
#[derive(Clone, Debug)]
pub struct TripleProduct {
    factors: [FiniteGroup; 3],
    coords: Vec<[u32; 3]>,
    identity: usize,
}

/// Projections and line kernels of a subgroup of a triple product.
///
/// `p[i]` and `k[i]` live in factor `i`; the pair versions live in
/// [`TripleProduct::pair_group`] for the pairs `(0,1)`, `(0,2)`, `(1,2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionsKernels {
    pub p: [Subgroup; 3],
    pub k: [Subgroup; 3],
    pub p12: Subgroup,
    pub p13: Subgroup,
    pub p23: Subgroup,
    pub k12: Subgroup,
    pub k13: Subgroup,
    pub k23: Subgroup,
}

impl TripleProduct {
    pub fn new(x: &FiniteGroup, y: &FiniteGroup, z: &FiniteGroup) -> Result<Self> {
        TripleProduct::with_bound(x, y, z, PRODUCT_BOUND)
    }

    pub fn with_bound(x: &FiniteGroup, y: &FiniteGroup, z: &FiniteGroup, bound: usize) -> Result<Self> {
        let order = x.order() * y.order() * z.order();
        if order > bound {
            return Err(Error::OrderBound { order, bound });
        }
        let (ny, nz) = (y.order(), z.order());
        let coords = (0..order)
            .map(|e| [(e / (ny * nz)) as u32, ((e / nz) % ny) as u32, (e % nz) as u32])
            .collect();
        let identity = (x.identity() * ny + y.identity()) * nz + z.identity();
        Ok(TripleProduct {
            factors: [x.clone(), y.clone(), z.clone()],
            coords,
            identity,
        })
    }

    pub fn factor(&self, i: usize) -> &FiniteGroup {
        &self.factors[i]
    }

    pub fn factors(&self) -> &[FiniteGroup; 3] {
        &self.factors
    }

    pub fn name(&self) -> String {
        format!(
            "{}x{}x{}",
            self.factors[0].name(),
            self.factors[1].name(),
            self.factors[2].name()
        )
    }

    #[inline]
    pub fn encode(&self, x: usize, y: usize, z: usize) -> usize {
        (x * self.factors[1].order() + y) * self.factors[2].order() + z
    }

    #[inline]
    pub fn decode(&self, e: usize) -> [usize; 3] {
        let c = self.coords[e];
        [c[0] as usize, c[1] as usize, c[2] as usize]
    }

    #[inline]
    pub fn project(&self, i: usize, e: usize) -> usize {
        self.coords[e][i] as usize
    }

    /// Image of `x ∈ factor(i)` under the i-th embedding.
    pub fn embed(&self, i: usize, x: usize) -> usize {
        let mut c = [
            self.factors[0].identity(),
            self.factors[1].identity(),
            self.factors[2].identity(),
        ];
        c[i] = x;
        self.encode(c[0], c[1], c[2])
    }

    /// `factor(i) × factor(j)` with index `a·|factor(j)| + b`.
    pub fn pair_group(&self, i: usize, j: usize) -> FiniteGroup {
        self.factors[i].direct_product(&self.factors[j])
    }

    #[inline]
    pub fn project_pair(&self, i: usize, j: usize, e: usize) -> usize {
        let c = self.coords[e];
        c[i] as usize * self.factors[j].order() + c[j] as usize
    }

    /// `p_i(D)` as a subgroup of factor `i`.
    pub fn projection(&self, d: &Subgroup, i: usize) -> Subgroup {
        Subgroup::from_bits(BitSet::from_indices(
            self.factors[i].order(),
            d.iter().map(|e| self.project(i, e)),
        ))
    }

    /// `k_i(D)`: elements of factor `i` whose embedding lies in `D`.
    pub fn kernel(&self, d: &Subgroup, i: usize) -> Subgroup {
        let f = &self.factors[i];
        Subgroup::from_bits(BitSet::from_indices(
            f.order(),
            (0..f.order()).filter(|&x| d.contains(self.embed(i, x))),
        ))
    }

    pub fn pair_projection(&self, d: &Subgroup, i: usize, j: usize) -> Subgroup {
        let n = self.factors[i].order() * self.factors[j].order();
        Subgroup::from_bits(BitSet::from_indices(n, d.iter().map(|e| self.project_pair(i, j, e))))
    }

    pub fn pair_kernel(&self, d: &Subgroup, i: usize, j: usize) -> Subgroup {
        let other = 3 - i - j;
        let nj = self.factors[j].order();
        let n = self.factors[i].order() * nj;
        let members = d.iter().filter_map(|e| {
            let c = self.decode(e);
            (c[other] == self.factors[other].identity()).then(|| c[i] * nj + c[j])
        });
        Subgroup::from_bits(BitSet::from_indices(n, members))
    }

    pub fn projections_and_kernels(&self, d: &Subgroup) -> ProjectionsKernels {
        ProjectionsKernels {
            p: [0, 1, 2].map(|i| self.projection(d, i)),
            k: [0, 1, 2].map(|i| self.kernel(d, i)),
            p12: self.pair_projection(d, 0, 1),
            p13: self.pair_projection(d, 0, 2),
            p23: self.pair_projection(d, 1, 2),
            k12: self.pair_kernel(d, 0, 1),
            k13: self.pair_kernel(d, 0, 2),
            k23: self.pair_kernel(d, 1, 2),
        }
    }

    /// The product with the first two factors exchanged.
    pub fn swapped(&self) -> TripleProduct {
        TripleProduct::with_bound(&self.factors[1], &self.factors[0], &self.factors[2], usize::MAX)
            .expect("unbounded")
    }

    /// Image of `d` under `(x, y, z) ↦ (y, x, z)` in [`TripleProduct::swapped`].
    pub fn swap_subgroup(&self, d: &Subgroup) -> Subgroup {
        let target_y = self.factors[0].order();
        let nz = self.factors[2].order();
        let n = self.order();
        Subgroup::from_bits(BitSet::from_indices(
            n,
            d.iter().map(|e| {
                let [x, y, z] = self.decode(e);
                (y * target_y + x) * nz + z
            }),
        ))
    }

    /// The center, as the product of the factor centers.
    pub fn center(&self) -> Subgroup {
        let zs = [0, 1, 2].map(|i| center(&self.factors[i]));
        Subgroup::from_bits(BitSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&e| {
                let c = self.decode(e);
                (0..3).all(|i| zs[i].contains(c[i]))
            }),
        ))
    }

    /// A left transversal of the center: conjugating by these elements
    /// reaches every conjugate of any subgroup.
    pub fn conjugators(&self) -> Vec<usize> {
        let z = self.center();
        let mut seen = BitSet::new(self.order());
        let mut out = Vec::new();
        for x in 0..self.order() {
            if seen.contains(x) {
                continue;
            }
            out.push(x);
            for c in z.iter() {
                seen.insert(self.mul(x, c));
            }
        }
        out
    }
}

impl Group for TripleProduct {
    #[inline]
    fn order(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        let (p, q) = (self.coords[a], self.coords[b]);
        self.encode(
            self.factors[0].mul(p[0] as usize, q[0] as usize),
            self.factors[1].mul(p[1] as usize, q[1] as usize),
            self.factors[2].mul(p[2] as usize, q[2] as usize),
        )
    }

    #[inline]
    fn inv(&self, a: usize) -> usize {
        let p = self.coords[a];
        self.encode(
            self.factors[0].inv(p[0] as usize),
            self.factors[1].inv(p[1] as usize),
            self.factors[2].inv(p[2] as usize),
        )
    }
}
