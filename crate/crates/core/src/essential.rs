//! The essential algebra pipeline: generating classes, factorization scan
//! through every smaller group, exact rank, and the four report numbers.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::cache::{cached_family, LatticeCache};
use crate::error::{Error, Result};
use crate::group::{automorphisms, groups_with_orders, FiniteGroup, Group, Subgroup};
use crate::lattice::{classes_of_family, graph_subgroups, is_gen_shaped, SubgroupClass};
use crate::monomial::prod_count;
use crate::product::TripleProduct;
use crate::rank::RowSpace;
use crate::star::StarFrame;

/// Knobs of the factorization scan.
#[derive(Clone, Debug, Default)]
pub struct ScanConfig {
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Restrict `L` to `p_2(L) = H, k_2(L) = 1` (and `M` symmetrically).
    /// Yields the same factored set and the same row space.
    pub reduced: bool,
    /// Check the inclusion chains of every star product computed.
    pub check_inclusions: bool,
    /// Compose only representatives of the `Aut(G)×Aut(H)×Aut(T)`-orbits of
    /// `L`, then close the factored set and the row space under
    /// `Aut(G)×Aut(G)×Aut(T)`. Same results, far fewer pairs.
    pub symmetry: bool,
    /// Keep every composition row (for CSV dumps). With `symmetry`, only
    /// the rows actually composed are kept.
    pub keep_rows: bool,
    pub cache_dir: Option<PathBuf>,
}

/// Where a composition row came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowSource {
    pub h: String,
    pub l_id: usize,
    pub m_id: usize,
}

/// Multiplicities of generating classes in `[GHT/L] ∘ [HGT/M]`, stored
/// sparsely as `(class index, multiplicity)` in increasing index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionRow {
    pub source: RowSource,
    pub len: usize,
    pub entries: Vec<(usize, u64)>,
}

impl CompositionRow {
    pub fn to_dense(&self) -> Vec<u64> {
        let mut v = vec![0; self.len];
        for &(i, x) in &self.entries {
            v[i] = x;
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HBreakdown {
    pub h: String,
    pub candidate_classes: usize,
    pub pairs: usize,
    /// Generating classes first reached through this `H`.
    pub factored_here: usize,
    pub zero_rows: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Timings {
    pub lattice: u64,
    pub scan: u64,
    pub rank: u64,
}

/// The four counts with their breakdown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EssentialReport {
    pub g: String,
    pub t: String,
    pub gen: usize,
    pub st_prime: usize,
    pub dim: usize,
    pub prod: usize,
    pub per_h: Vec<HBreakdown>,
    pub timings_ms: Timings,
}

/// Everything the scan produced, kept for witnesses and dumps.
#[derive(Clone, Debug)]
pub struct EssentialScan {
    pub product: TripleProduct,
    pub classes: Vec<SubgroupClass>,
    lookup: HashMap<BitSet, usize>,
    pub factored: BTreeSet<usize>,
    pub space: RowSpace,
    pub rows: Vec<CompositionRow>,
    pub per_h: Vec<HBreakdown>,
    pub inclusion_checks: usize,
    pub inclusion_failures: usize,
    pub timings_ms: Timings,
}

impl EssentialScan {
    pub fn gen(&self) -> usize {
        self.classes.len()
    }

    pub fn st_prime(&self) -> usize {
        self.gen() - self.factored.len()
    }

    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn dim(&self) -> usize {
        self.gen() - self.rank()
    }

    /// Index of the generating class containing `s`.
    pub fn class_of(&self, s: &Subgroup) -> Option<usize> {
        self.lookup.get(s.bits()).copied()
    }

    /// Coefficients over the independent composition rows that produce the
    /// combination `Σ c·e_i` of class indicators, if it lies in the row space.
    pub fn kernel_witness(&self, combination: &[(usize, i64)]) -> Option<Vec<BigRational>> {
        let mut target = vec![0i64; self.gen()];
        for &(i, c) in combination {
            target[i] += c;
        }
        self.space.solve(&target)
    }

    /// Rows as CSV lines `H,l_id,m_id,v0,v1,...` (only with `keep_rows`).
    pub fn write_csv(&self, mut w: impl Write) -> std::io::Result<()> {
        for r in &self.rows {
            write!(w, "{},{},{}", r.source.h, r.source.l_id, r.source.m_id)?;
            for x in r.to_dense() {
                write!(w, ",{x}")?;
            }
            writeln!(w)?;
        }
        Ok(())
    }
}

/// Image of `l ≤ G×H×T` under `(g, h, t) ↦ (h, g, t)`.
pub fn swap_to_hgt(ght: &TripleProduct, l: &Subgroup) -> Subgroup {
    ght.swap_subgroup(l)
}

/// Classes of `L ≤ G×H×T` with `p_1(L) = G` and `k_1(L) = 1`; with
/// `reduced`, also `p_2(L) = H` and `k_2(L) = 1`.
pub fn candidate_h_classes(
    g: &FiniteGroup,
    h: &FiniteGroup,
    t: &FiniteGroup,
    reduced: bool,
    cache: Option<&LatticeCache>,
) -> Result<(TripleProduct, Vec<SubgroupClass>)> {
    let ght = TripleProduct::new(g, h, t)?;
    let kind = if reduced { "cand-reduced" } else { "cand" };
    let key = format!("{kind}-{}-{}-{}", g.name(), h.name(), t.name());
    let family = cached_family(cache, &key, ght.order(), || graph_subgroups(&ght, reduced))?;
    let classes = classes_of_family(&ght, &ght.conjugators(), family);
    Ok((ght, classes))
}

/// Generating classes of `G×G×T`.
pub fn generating_classes(
    g: &FiniteGroup,
    t: &FiniteGroup,
    cache: Option<&LatticeCache>,
) -> Result<(TripleProduct, Vec<SubgroupClass>)> {
    let p = TripleProduct::new(g, g, t)?;
    let key = format!("gen-{}-{}", g.name(), t.name());
    let family = cached_family(cache, &key, p.order(), || graph_subgroups(&p, true))?;
    let classes = classes_of_family(&p, &p.conjugators(), family);
    Ok((p, classes))
}

fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::ThreadPool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// The intermediate groups to scan: every isomorphism type `H` with
/// `|G| ≤ |H|·|T|` and `|H| < |G|`. A candidate `L ≤ G×H×T` is the graph
/// of a surjection from a subgroup of `H×T` onto `G`, so smaller `H` have
/// none.
pub fn intermediate_groups(g: &FiniteGroup, t: &FiniteGroup) -> Result<Vec<FiniteGroup>> {
    let lo = g.order().div_ceil(t.order()).max(1);
    groups_with_orders(lo..g.order())
}

/// Runs the pipeline for `G`, `T`, scanning through every intermediate
/// group of order below `|G|`.
pub fn essential_scan(g: &FiniteGroup, t: &FiniteGroup, cfg: &ScanConfig) -> Result<EssentialScan> {
    let hs = intermediate_groups(g, t)?;
    factorization_scan(g, t, &hs, cfg)
}

/// Runs the pipeline with an explicit list of intermediate groups.
pub fn factorization_scan(
    g: &FiniteGroup,
    t: &FiniteGroup,
    h_catalog: &[FiniteGroup],
    cfg: &ScanConfig,
) -> Result<EssentialScan> {
    with_threads(cfg.threads, || scan_inner(g, t, h_catalog, cfg))?
}

struct PairOutcome {
    entries: Vec<(usize, u64)>,
    checks: usize,
    failures: usize,
}

// Pairs composed per parallel batch; bounds the memory held by outcomes.
const CHUNK: usize = 32;

type Tables = [Vec<usize>; 3];

fn identity_table(n: usize) -> Vec<usize> {
    (0..n).collect()
}

// Generators of Aut(X)×Aut(Y)×Aut(Z), each acting on one coordinate.
fn coordinate_generators(p: &TripleProduct) -> Vec<Tables> {
    let mut out = Vec::new();
    for i in 0..3 {
        for a in automorphisms(p.factor(i)).generators() {
            let mut t: Tables = [0, 1, 2].map(|j| identity_table(p.factor(j).order()));
            t[i] = a.table();
            out.push(t);
        }
    }
    out
}

fn apply_tables(p: &TripleProduct, maps: &Tables, s: &Subgroup) -> Subgroup {
    Subgroup::from_bits(BitSet::from_indices(
        p.order(),
        s.iter().map(|e| {
            let [x, y, z] = p.decode(e);
            p.encode(maps[0][x], maps[1][y], maps[2][z])
        }),
    ))
}

fn member_lookup(classes: &[SubgroupClass]) -> HashMap<BitSet, usize> {
    let mut lookup = HashMap::new();
    for c in classes {
        for m in &c.members {
            lookup.insert(m.bits().clone(), c.class_index);
        }
    }
    lookup
}

// The permutation of class indices induced by each generator.
fn class_permutations(
    p: &TripleProduct,
    classes: &[SubgroupClass],
    lookup: &HashMap<BitSet, usize>,
    gens: &[Tables],
) -> Result<Vec<Vec<u32>>> {
    gens.iter()
        .map(|t| {
            classes
                .par_iter()
                .map(|c| {
                    let img = apply_tables(p, t, &c.representative);
                    lookup
                        .get(img.bits())
                        .map(|&i| i as u32)
                        .ok_or_else(|| Error::GenLookup(format!("{img:?}")))
                })
                .collect()
        })
        .collect()
}

// Smallest class index of each orbit.
fn orbit_representatives(perms: &[Vec<u32>], n: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut reps = Vec::new();
    for c in 0..n {
        if seen[c] {
            continue;
        }
        reps.push(c);
        seen[c] = true;
        let mut stack = vec![c];
        while let Some(x) = stack.pop() {
            for p in perms {
                let y = p[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    reps
}

fn saturate(set: &mut BTreeSet<usize>, fresh: Vec<usize>, perms: &[Vec<u32>]) {
    let mut stack = fresh;
    while let Some(x) = stack.pop() {
        for p in perms {
            let y = p[x] as usize;
            if set.insert(y) {
                stack.push(y);
            }
        }
    }
}

fn permute_row(row: &[(usize, u64)], perm: &[u32]) -> Vec<(usize, u64)> {
    let mut v: Vec<(usize, u64)> = row.iter().map(|&(i, x)| (perm[i] as usize, x)).collect();
    v.sort_unstable();
    v
}

fn scan_inner(g: &FiniteGroup, t: &FiniteGroup, h_catalog: &[FiniteGroup], cfg: &ScanConfig) -> Result<EssentialScan> {
    let cache = cfg.cache_dir.as_ref().map(LatticeCache::new);
    let mut timings = Timings::default();

    let clock = Instant::now();
    let (p, classes) = generating_classes(g, t, cache.as_ref())?;
    let lookup = member_lookup(&classes);
    let gen_perms = if cfg.symmetry {
        class_permutations(&p, &classes, &lookup, &coordinate_generators(&p))?
    } else {
        Vec::new()
    };
    timings.lattice += clock.elapsed().as_millis() as u64;

    let width = classes.len();
    let mut space = RowSpace::new(width);
    let mut factored = BTreeSet::new();
    let mut rows = Vec::new();
    let mut per_h = Vec::new();
    let mut seen_rows: HashSet<Vec<(usize, u64)>> = HashSet::new();
    let (mut checks, mut failures) = (0, 0);

    for h in h_catalog {
        if h.order() >= g.order() {
            continue;
        }
        let clock = Instant::now();
        let (ght, cand) = candidate_h_classes(g, h, t, cfg.reduced, cache.as_ref())?;
        let hgt = ght.swapped();
        let l_ids: Vec<usize> = if cfg.symmetry && !cand.is_empty() {
            let cand_lookup = member_lookup(&cand);
            let perms = class_permutations(&ght, &cand, &cand_lookup, &coordinate_generators(&ght))?;
            orbit_representatives(&perms, cand.len())
        } else {
            (0..cand.len()).collect()
        };
        let ms: Vec<Subgroup> = cand.iter().map(|c| swap_to_hgt(&ght, &c.representative)).collect();
        let frame = StarFrame::new(&ght, &hgt)?;
        timings.lattice += clock.elapsed().as_millis() as u64;

        let before = factored.len();
        let mut fresh = Vec::new();
        let mut zero_rows = 0;
        for chunk in l_ids.chunks(CHUNK) {
            let clock = Instant::now();
            let outcomes: Vec<Vec<PairOutcome>> = chunk
                .par_iter()
                .map(|&li| {
                    let l = &cand[li].representative;
                    ms.iter()
                        .map(|m| compose_pair(&frame, &p, &lookup, l, m, cfg.check_inclusions))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            timings.scan += clock.elapsed().as_millis() as u64;

            let clock = Instant::now();
            for (&li, row) in chunk.iter().zip(outcomes) {
                for (mi, o) in row.into_iter().enumerate() {
                    checks += o.checks;
                    failures += o.failures;
                    if o.entries.is_empty() {
                        zero_rows += 1;
                        continue;
                    }
                    for &(i, _) in &o.entries {
                        if factored.insert(i) {
                            fresh.push(i);
                        }
                    }
                    if cfg.keep_rows {
                        rows.push(CompositionRow {
                            source: RowSource {
                                h: h.name().to_string(),
                                l_id: li,
                                m_id: mi,
                            },
                            len: width,
                            entries: o.entries.clone(),
                        });
                    }
                    if seen_rows.insert(o.entries.clone()) {
                        space.insert_sparse(&o.entries);
                    }
                }
            }
            timings.rank += clock.elapsed().as_millis() as u64;
        }
        saturate(&mut factored, fresh, &gen_perms);
        per_h.push(HBreakdown {
            h: h.name().to_string(),
            candidate_classes: cand.len(),
            pairs: l_ids.len() * ms.len(),
            factored_here: factored.len() - before,
            zero_rows,
        });
    }

    if cfg.symmetry {
        // close the row space under the generators; rank-raising rows are
        // themselves images of composition rows
        let clock = Instant::now();
        let mut i = 0;
        while i < space.independent_count() {
            let row = space.independent_row(i).to_vec();
            for perm in &gen_perms {
                let img = permute_row(&row, perm);
                if seen_rows.insert(img.clone()) {
                    space.insert_sparse(&img);
                }
            }
            i += 1;
        }
        timings.rank += clock.elapsed().as_millis() as u64;
    }

    Ok(EssentialScan {
        product: p,
        classes,
        lookup,
        factored,
        space,
        rows,
        per_h,
        inclusion_checks: checks,
        inclusion_failures: failures,
        timings_ms: timings,
    })
}

fn compose_pair(
    frame: &StarFrame,
    p: &TripleProduct,
    lookup: &HashMap<BitSet, usize>,
    l: &Subgroup,
    m: &Subgroup,
    check: bool,
) -> Result<PairOutcome> {
    let mut counts: Vec<(usize, u64)> = Vec::new();
    let (mut checks, mut failures) = (0, 0);
    for x in frame.mackey_representatives(l, m) {
        let mx = frame.conjugate_right(m, x);
        let s = frame.star(l, &mx);
        if check {
            checks += 1;
            if !frame.inclusion_chains_hold(l, &mx, &s) {
                failures += 1;
            }
        }
        if !is_gen_shaped(p, &s) {
            continue;
        }
        let idx = *lookup.get(s.bits()).ok_or_else(|| Error::GenLookup(format!("{s:?}")))?;
        match counts.iter_mut().find(|e| e.0 == idx) {
            Some(e) => e.1 += 1,
            None => counts.push((idx, 1)),
        }
    }
    counts.sort_unstable();
    Ok(PairOutcome {
        entries: counts,
        checks,
        failures,
    })
}

/// Gen, St′, Dim and Prod for `G`, `T`.
pub fn essential_report(g: &FiniteGroup, t: &FiniteGroup, cfg: &ScanConfig) -> Result<EssentialReport> {
    let scan = essential_scan(g, t, cfg)?;
    let prod = prod_count(g, t);
    // both follow from the theory; a violation is a bug here
    assert!(scan.st_prime() <= scan.dim() && scan.dim() <= scan.gen(), "St' <= Dim <= Gen violated");
    assert!(prod <= scan.st_prime(), "Prod <= St' violated");
    Ok(EssentialReport {
        g: g.name().to_string(),
        t: t.name().to_string(),
        gen: scan.gen(),
        st_prime: scan.st_prime(),
        dim: scan.dim(),
        prod,
        per_h: scan.per_h,
        timings_ms: scan.timings_ms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog_lookup;
    use crate::lattice::gen_classes_by_filter;

    fn g(name: &str) -> FiniteGroup {
        catalog_lookup(name).unwrap()
    }

    #[test]
    fn swap_is_involutive_and_exchanges_projections() {
        let (c4, c2) = (g("C4"), g("C2"));
        let (ght, cand) = candidate_h_classes(&c4, &c2, &c4, false, None).unwrap();
        let hgt = ght.swapped();
        for c in &cand {
            let l = &c.representative;
            let m = swap_to_hgt(&ght, l);
            assert_eq!(&swap_to_hgt(&hgt, &m), l);
            let (a, b) = (ght.projections_and_kernels(l), hgt.projections_and_kernels(&m));
            assert_eq!((&a.p[0], &a.p[1], &a.k[0], &a.k[1]), (&b.p[1], &b.p[0], &b.k[1], &b.k[0]));
        }
    }

    #[test]
    fn candidates_agree_with_lattice_filter() {
        let (c4, c2) = (g("C4"), g("C2"));
        let (ght, cand) = candidate_h_classes(&c4, &c2, &c4, false, None).unwrap();
        let all = crate::lattice::conjugacy_classes_of_subgroups(&ght).unwrap();
        let filtered: Vec<Subgroup> = all
            .into_iter()
            .map(|c| c.representative)
            .filter(|l| ght.projection(l, 0).is_whole() && ght.kernel(l, 0).is_trivial())
            .collect();
        let got: Vec<Subgroup> = cand.into_iter().map(|c| c.representative).collect();
        assert_eq!(got, filtered);
    }

    #[test]
    fn generating_classes_match_filter_path() {
        let (c4, c2) = (g("C4"), g("C2"));
        let (p, fast) = generating_classes(&c4, &c2, None).unwrap();
        assert_eq!(fast, gen_classes_by_filter(&p).unwrap());
    }

    fn same_result(a: &EssentialScan, b: &EssentialScan) {
        assert_eq!(a.classes, b.classes);
        assert_eq!(a.factored, b.factored);
        assert_eq!(a.rank(), b.rank());
        let mut both = a.space.clone();
        for i in 0..b.space.independent_count() {
            assert!(!both.insert_sparse(b.space.independent_row(i)));
        }
    }

    #[test]
    fn reduced_and_symmetric_scans_match_the_plain_scan() {
        for (gn, tn) in [("C4", "C4"), ("C4", "Q8"), ("S3", "C2"), ("V4", "C2"), ("C6", "C2")] {
            let (gg, tt) = (g(gn), g(tn));
            let plain = essential_scan(&gg, &tt, &ScanConfig::default()).unwrap();
            for (reduced, symmetry) in [(true, false), (false, true), (true, true)] {
                let cfg = ScanConfig {
                    reduced,
                    symmetry,
                    ..Default::default()
                };
                same_result(&plain, &essential_scan(&gg, &tt, &cfg).unwrap());
            }
        }
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let (gg, tt) = (g("C4"), g("C4"));
        let one = essential_scan(&gg, &tt, &ScanConfig { threads: Some(1), ..Default::default() }).unwrap();
        let two = essential_scan(&gg, &tt, &ScanConfig { threads: Some(2), ..Default::default() }).unwrap();
        same_result(&one, &two);
    }

    #[test]
    fn skipped_intermediate_groups_have_no_candidates() {
        let (c6, c2) = (g("C6"), g("C2"));
        let kept: Vec<usize> = intermediate_groups(&c6, &c2).unwrap().iter().map(|h| h.order()).collect();
        assert!(kept.iter().all(|&n| (3..6).contains(&n)));
        for h in crate::group::groups_below(3).unwrap() {
            let (_, cand) = candidate_h_classes(&c6, &h, &c2, false, None).unwrap();
            assert!(cand.is_empty(), "{}", h.name());
        }
        let s4 = g("S4");
        assert!(intermediate_groups(&s4, &FiniteGroup::cyclic(1)).unwrap().is_empty());
    }

    #[test]
    fn product_type_classes_are_unfactored_generators() {
        for (gn, tn) in [("C4", "C4"), ("C4", "Q8"), ("S3", "C2"), ("C6", "C2")] {
            let (gg, tt) = (g(gn), g(tn));
            let scan = essential_scan(&gg, &tt, &ScanConfig::default()).unwrap();
            let ctx = crate::monomial::MonomialContext::new(&gg, &tt);
            let mut seen = BTreeSet::new();
            for d in ctx.lp_classes() {
                let built = ctx.build_d(&d, &scan.product);
                let c = scan.class_of(&built).expect("product-type subgroup is a generator");
                assert!(!scan.factored.contains(&c), "({gn},{tn}): {d:?} factors");
                assert!(seen.insert(c), "({gn},{tn}): two descriptors share class {c}");
            }
        }
    }

    #[test]
    fn trivial_t_counts_are_outer_automorphism_counts() {
        let c1 = FiniteGroup::cyclic(1);
        for (name, out) in [("C2", 1), ("C4", 2), ("S3", 1)] {
            let r = essential_report(&g(name), &c1, &ScanConfig::default()).unwrap();
            assert_eq!((r.gen, r.st_prime, r.dim, r.prod), (out, out, out, out), "{name}");
        }
    }
}
