//! Exact rank over the rationals: an incremental fraction-free row space and
//! a batch Bareiss elimination.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type SparseRow = Vec<(usize, BigInt)>;

/// Row space of integer vectors, kept in echelon form with primitive rows.
#[derive(Clone, Debug)]
pub struct RowSpace {
    width: usize,
    // each row's first entry is its pivot, positive; pivots are distinct
    echelon: Vec<SparseRow>,
    pivot_of: HashMap<usize, usize>,
    // the rows that raised the rank, as given
    independent: Vec<Vec<(usize, u64)>>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace {
            width,
            echelon: Vec::new(),
            pivot_of: HashMap::new(),
            independent: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.echelon.len()
    }

    /// Rows that increased the rank, in insertion order.
    pub fn independent_rows(&self) -> Vec<Vec<u64>> {
        self.independent
            .iter()
            .map(|r| {
                let mut d = vec![0; self.width];
                for &(i, x) in r {
                    d[i] = x;
                }
                d
            })
            .collect()
    }

    // Eliminates pivot columns left to right; a basis row has no entries
    // before its pivot, so earlier columns of `v` are never disturbed.
    fn reduce(&self, mut v: SparseRow) -> SparseRow {
        let mut from = 0;
        while let Some((pos, bi)) = v
            .iter()
            .enumerate()
            .skip(from)
            .find_map(|(i, (c, _))| self.pivot_of.get(c).map(|&b| (i, b)))
        {
            let b = &self.echelon[bi];
            let coeff = v[pos].1.clone();
            let piv = &b[0].1;
            let g = coeff.gcd(piv);
            let (mv, mb) = (piv / &g, &coeff / &g);
            v = combine(&v, &mv, b, &mb);
            make_primitive(&mut v);
            from = pos;
        }
        v
    }

    /// True when `v` lies in the row space.
    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(to_sparse_signed(v)).is_empty()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: &[u64]) -> bool {
        assert_eq!(row.len(), self.width, "row width");
        let sparse: Vec<(usize, u64)> = row.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, x)).collect();
        self.insert_sparse(&sparse)
    }

    /// Adds a row given as `(column, value)` pairs in increasing column order.
    pub fn insert_sparse(&mut self, row: &[(usize, u64)]) -> bool {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(row.iter().all(|&(i, _)| i < self.width));
        let v = self.reduce(to_sparse(row));
        if v.is_empty() {
            return false;
        }
        let mut v = v;
        if v[0].1.is_negative() {
            for e in v.iter_mut() {
                e.1 = -e.1.clone();
            }
        }
        self.pivot_of.insert(v[0].0, self.echelon.len());
        self.echelon.push(v);
        self.independent.push(row.iter().copied().filter(|&(_, x)| x != 0).collect());
        true
    }

    pub fn independent_count(&self) -> usize {
        self.independent.len()
    }

    /// The `i`-th rank-raising row, sparse.
    pub fn independent_row(&self, i: usize) -> &[(usize, u64)] {
        &self.independent[i]
    }

    /// Rational coefficients `c` with `Σ c_i·r_i = target` over the
    /// independent rows `r_i`, if `target` lies in the row space.
    pub fn solve(&self, target: &[i64]) -> Option<Vec<BigRational>> {
        if !self.contains(target) {
            return None;
        }
        let rows: Vec<Vec<BigRational>> = self
            .independent_rows()
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        let t: Vec<BigRational> = target.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        solve_combination(&rows, &t)
    }
}

fn to_sparse(row: &[(usize, u64)]) -> SparseRow {
    let mut v: SparseRow = row
        .iter()
        .filter(|(_, x)| *x != 0)
        .map(|&(i, x)| (i, BigInt::from(x)))
        .collect();
    make_primitive(&mut v);
    v
}

fn to_sparse_signed(row: &[i64]) -> SparseRow {
    let mut v: SparseRow = row
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| (i, BigInt::from(x)))
        .collect();
    make_primitive(&mut v);
    v
}

// a·u − b·w, merged over sorted columns
fn combine(u: &SparseRow, a: &BigInt, w: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(u.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < w.len() {
        let next = match (u.get(i), w.get(j)) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                i += 1;
                j += 1;
                (x.0, a * &x.1 - b * &y.1)
            }
            (Some(x), Some(y)) if x.0 < y.0 => {
                i += 1;
                (x.0, a * &x.1)
            }
            (Some(x), None) => {
                i += 1;
                (x.0, a * &x.1)
            }
            (_, Some(y)) => {
                j += 1;
                (y.0, -(b * &y.1))
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}

fn make_primitive(v: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g > BigInt::one() {
        for e in v.iter_mut() {
            e.1 = &e.1 / &g;
        }
    }
}

// Gaussian elimination on the transposed system Σ c_i rows_i = target.
fn solve_combination(rows: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = rows.len();
    let width = target.len();
    // augmented matrix: one equation per column
    let mut a: Vec<Vec<BigRational>> = (0..width)
        .map(|c| {
            let mut eq: Vec<BigRational> = rows.iter().map(|r| r[c].clone()).collect();
            eq.push(target[c].clone());
            eq
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..width).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..width {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=n {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|eq| !eq[n].is_zero()) {
        return None;
    }
    let mut out = vec![BigRational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = a[i][n].clone();
    }
    Some(out)
}

/// Rank by fraction-free Bareiss elimination.
pub fn rank_exact(rows: &[Vec<u64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), width, "rows must be rectangular");
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..width {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let piv_row = &top[rank];
        for row in rest.iter_mut() {
            for j in c + 1..width {
                let v = (&piv_row[c] * &row[j] - &row[c] * &piv_row[j]) / &prev;
                row[j] = v;
            }
            row[c] = BigInt::zero();
        }
        prev = piv_row[c].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
