//! Named verification suites. Each is deterministic given its seed and
//! reports every failing instance it finds.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::essential::{essential_scan, ScanConfig};
use crate::error::{Error, Result};
use crate::group::{automorphisms, catalog_entries, catalog_lookup, generate, FiniteGroup, Group, Subgroup};
use crate::lattice::{all_subgroups, center_transversal};
use crate::monomial::{LpDescriptor, MonomialContext, MonomialPair};
use crate::oracle::{canonical_conjugate, class_multiset, orbit_compose_oracle};
use crate::product::TripleProduct;
use crate::star::{alpha_of_multiset, alpha_transitive, diagonal_times_t, SparseGroupedVector, StarFrame};

pub const SUITES: [&str; 7] = [
    "star-axioms",
    "mackey-oracle",
    "alpha-hom",
    "lp-law",
    "abelian-iso",
    "coprime-iso",
    "sonigual",
];

/// Largest `|G×G×T|` covered by the catalog-wide suites.
pub const SUITE_PRODUCT_BOUND: usize = 1024;

const MAX_REPORTED: usize = 20;

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
    failure_count: usize,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(what());
            }
        }
    }

    pub fn failure_count(&self) -> usize {
        self.failure_count
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    match name {
        "star-axioms" => star_axioms(seed, 600),
        "mackey-oracle" => mackey_oracle(seed, 250),
        "alpha-hom" => alpha_hom(seed, 120),
        "lp-law" => lp_law(),
        "abelian-iso" => abelian_iso(),
        "coprime-iso" => coprime_iso(),
        "sonigual" => sonigual(),
        other => Err(Error::Parse(format!(
            "unknown suite `{other}`; available: {}",
            SUITES.join(", ")
        ))),
    }
}

fn small_groups() -> Vec<FiniteGroup> {
    ["C1", "C2", "C3", "C4", "V4"]
        .iter()
        .map(|n| catalog_lookup(n).expect("catalog"))
        .collect()
}

fn pick<'a>(rng: &mut ChaCha8Rng, groups: &'a [FiniteGroup]) -> &'a FiniteGroup {
    groups.choose(rng).expect("nonempty")
}

/// The subgroup generated by up to three random elements.
pub fn random_subgroup<G: Group>(rng: &mut ChaCha8Rng, g: &G) -> Subgroup {
    let k = rng.gen_range(0..=3);
    let gens: Vec<usize> = (0..k).map(|_| rng.gen_range(0..g.order())).collect();
    generate(g, &gens)
}

fn frame(a: &FiniteGroup, b: &FiniteGroup, c: &FiniteGroup, t: &FiniteGroup) -> StarFrame {
    StarFrame::from_groups(a, b, c, t).expect("small frame")
}

/// Associativity of ∗, the κ cocycle identity, the unit `|G|(Δ(G)×T)`,
/// conjugation compatibility and the inclusion chains, on random triples.
pub fn star_axioms(seed: u64, count: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups = small_groups();
    let mut rep = SuiteReport::new("star-axioms");
    for case in 0..count {
        let (g, h, k, j, t) = (
            pick(&mut rng, &groups),
            pick(&mut rng, &groups),
            pick(&mut rng, &groups),
            pick(&mut rng, &groups),
            pick(&mut rng, &groups),
        );
        let ghk = frame(g, h, k, t);
        let gkj = frame(g, k, j, t);
        let hkj = frame(h, k, j, t);
        let ghj = frame(g, h, j, t);
        let d = random_subgroup(&mut rng, ghk.left());
        let e = random_subgroup(&mut rng, ghk.right());
        let f = random_subgroup(&mut rng, hkj.right());
        let de = ghk.star(&d, &e);
        let ef = hkj.star(&e, &f);
        let label = || format!("case {case}: G={} H={} K={} J={} T={}", g.name(), h.name(), k.name(), j.name(), t.name());
        rep.check(de.is_closed(ghk.out()), || format!("{}: D∗E not a subgroup", label()));
        rep.check(gkj.star(&de, &f) == ghj.star(&d, &ef), || format!("{}: associativity", label()));
        let lhs = ghk.kappa(&d, &e) * gkj.kappa(&de, &f);
        let rhs = ghj.kappa(&d, &ef) * hkj.kappa(&e, &f);
        rep.check(lhs == rhs, || format!("{}: κ cocycle", label()));
        rep.check(ghk.inclusion_chains_hold(&d, &e, &de), || format!("{}: inclusion chains", label()));

        // unit on both sides
        let gg = frame(g, g, h, t);
        let unit = SparseGroupedVector::basis(diagonal_times_t(gg.left()))
            .scaled(&num_rational::BigRational::from_integer(g.order().into()));
        let v = SparseGroupedVector::basis(d.clone());
        rep.check(gg.star_kappa(&unit, &v) == v, || format!("{}: left unit", label()));
        let hh = frame(g, h, h, t);
        let unit_h = SparseGroupedVector::basis(diagonal_times_t(hh.right()))
            .scaled(&num_rational::BigRational::from_integer(h.order().into()));
        rep.check(hh.star_kappa(&v, &unit_h) == v, || format!("{}: right unit", label()));

        // (D∗E)^{(x,z,s)} = D^{(x,1,s)} ∗ E^{(1,z,s)}
        let (x, z, s) = (rng.gen_range(0..g.order()), rng.gen_range(0..k.order()), rng.gen_range(0..t.order()));
        let (l, r, o) = (ghk.left(), ghk.right(), ghk.out());
        let conj_out = crate::group::conjugate_subgroup(o, &de, o.encode(x, z, s));
        let dl = crate::group::conjugate_subgroup(l, &d, l.encode(x, h.identity(), s));
        let er = crate::group::conjugate_subgroup(r, &e, r.encode(h.identity(), z, s));
        rep.check(conj_out == ghk.star(&dl, &er), || format!("{}: conjugation compatibility", label()));
    }
    Ok(rep)
}

/// Mackey formula against the explicit orbit decomposition.
pub fn mackey_oracle(seed: u64, count: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups = small_groups();
    let mut rep = SuiteReport::new("mackey-oracle");
    for case in 0..count {
        let (g, h, k, t) = (
            pick(&mut rng, &groups),
            pick(&mut rng, &groups),
            pick(&mut rng, &groups),
            pick(&mut rng, &groups),
        );
        let f = frame(g, h, k, t);
        let l = random_subgroup(&mut rng, f.left());
        let m = random_subgroup(&mut rng, f.right());
        let a = class_multiset(f.out(), &f.mackey_compose(&l, &m));
        let b = class_multiset(f.out(), &orbit_compose_oracle(&f, &l, &m)?);
        rep.check(a == b, || {
            format!(
                "case {case}: G={} H={} K={} T={} L={l:?} M={m:?}: mackey {a:?} vs orbits {b:?}",
                g.name(),
                h.name(),
                k.name(),
                t.name()
            )
        });
    }
    Ok(rep)
}

/// `α(a ×^d b) = α(a) ∗^κ α(b)`, with the composition taken from the orbit
/// oracle.
pub fn alpha_hom(seed: u64, count: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups = small_groups();
    let mut rep = SuiteReport::new("alpha-hom");
    for case in 0..count {
        let (g, h, k, t) = (
            pick(&mut rng, &groups),
            pick(&mut rng, &groups),
            pick(&mut rng, &groups),
            pick(&mut rng, &groups),
        );
        let f = frame(g, h, k, t);
        let l = random_subgroup(&mut rng, f.left());
        let m = random_subgroup(&mut rng, f.right());
        let composed = orbit_compose_oracle(&f, &l, &m)?;
        let lhs = alpha_of_multiset(f.out(), &composed);
        let rhs = f.star_kappa(&alpha_transitive(f.left(), &l), &alpha_transitive(f.right(), &m));
        rep.check(lhs == rhs, || {
            format!("case {case}: G={} H={} K={} T={} L={l:?} M={m:?}", g.name(), h.name(), k.name(), t.name())
        });
    }
    Ok(rep)
}

/// Every descriptor `(σ, α, T0)` with `σ ∈ Aut(G)`, `T0 ≤ T`, `α : T0 → Z(G)`.
pub fn all_descriptors(ctx: &MonomialContext) -> Vec<LpDescriptor> {
    let subs = all_subgroups(ctx.t()).expect("small T");
    let mut out = Vec::new();
    for x in &subs {
        for a in ctx.central_homs(x) {
            for s in &ctx.automorphisms().all {
                out.push(LpDescriptor {
                    sigma: s.clone(),
                    alpha: a.clone(),
                    t0: x.clone(),
                });
            }
        }
    }
    out
}

/// The multiplication law of the product-type classes against the Mackey
/// formula, the twisted monomial product, and double coset independence.
pub fn lp_law() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lp-law");
    for (gn, tn) in [("C4", "C4"), ("S3", "C3"), ("C2", "V4")] {
        let (g, t) = (catalog_lookup(gn)?, catalog_lookup(tn)?);
        let ctx = MonomialContext::new(&g, &t);
        let p = TripleProduct::new(&g, &g, &t)?;
        let f = StarFrame::new(&p, &p)?;
        let descs = all_descriptors(&ctx);
        for d1 in &descs {
            for d2 in &descs {
                let prod = ctx.lp_product(d1, d2);
                let built: Vec<Subgroup> = prod.iter().map(|d| ctx.build_d(d, &p)).collect();
                let via_mackey = f.mackey_compose(&ctx.build_d(d1, &p), &ctx.build_d(d2, &p));
                rep.check(class_multiset(&p, &built) == class_multiset(&p, &via_mackey), || {
                    format!("({gn},{tn}): lp_product vs Mackey for {d1:?} ∘ {d2:?}")
                });

                // same law through the monomial product of (T0, α) with σ·(T1, β)
                let a = MonomialPair {
                    x: d1.t0.clone(),
                    phi: d1.alpha.clone(),
                };
                let b = ctx.twist(
                    &d1.sigma,
                    &MonomialPair {
                        x: d2.t0.clone(),
                        phi: d2.alpha.clone(),
                    },
                );
                let mono: Vec<LpDescriptor> = ctx
                    .monomial_product(&a, &b)
                    .into_iter()
                    .map(|m| LpDescriptor {
                        sigma: d2.sigma.then(&d1.sigma),
                        alpha: m.phi,
                        t0: m.x,
                    })
                    .collect();
                rep.check(mono == prod, || format!("({gn},{tn}): monomial product for {d1:?} ∘ {d2:?}"));

                // any representative of a double coset gives the same class
                let mut alt = prod.clone();
                alt.iter_mut().for_each(|d| *d = ctx.canonical(d));
                alt.sort_by_key(|d| (d.t0.clone(), d.alpha.table(), d.sigma.table()));
                let mut other = lp_product_with_largest_reps(&ctx, d1, d2);
                other.iter_mut().for_each(|d| *d = ctx.canonical(d));
                other.sort_by_key(|d| (d.t0.clone(), d.alpha.table(), d.sigma.table()));
                rep.check(alt == other, || format!("({gn},{tn}): representative dependence for {d1:?} ∘ {d2:?}"));
            }
            // twist law at descriptor level: τ(X, α) = (X, τ∘α)
            for tau in &ctx.automorphisms().all {
                let tw = ctx.twist(
                    tau,
                    &MonomialPair {
                        x: d1.t0.clone(),
                        phi: d1.alpha.clone(),
                    },
                );
                let ok = tw.x == d1.t0 && d1.t0.iter().all(|x| tw.phi.apply(x) == tau.apply(d1.alpha.apply(x)));
                rep.check(ok && ctx.is_central(&tw.phi), || format!("({gn},{tn}): twist of {d1:?}"));
            }
        }
        let classes = ctx.lp_classes();
        rep.check(classes.len() == ctx.prod_count(), || {
            format!("({gn},{tn}): |lp_classes| = {} vs prod_count = {}", classes.len(), ctx.prod_count())
        });
    }
    Ok(rep)
}

// lp_product with each double coset represented by its largest element.
fn lp_product_with_largest_reps(ctx: &MonomialContext, d1: &LpDescriptor, d2: &LpDescriptor) -> Vec<LpDescriptor> {
    let t = ctx.t();
    let g = ctx.g();
    let mut seen = crate::bitset::BitSet::new(t.order());
    let mut reps = Vec::new();
    for x in (0..t.order()).rev() {
        if seen.contains(x) {
            continue;
        }
        reps.push(x);
        for u in d1.t0.iter() {
            for v in d2.t0.iter() {
                seen.insert(t.mul(t.mul(u, x), v));
            }
        }
    }
    reps.into_iter()
        .map(|x| {
            let beta = ctx.conjugate_hom(&d2.alpha, x);
            let dom = d1.t0.intersection(beta.domain());
            let alpha = crate::group::GroupHom::from_pairs(
                dom.clone(),
                dom.iter()
                    .map(|y| (y, g.mul(d1.alpha.apply(y), d1.sigma.apply(beta.apply(y)))))
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

/// Descriptor-level conjugacy against conjugacy of the built subgroups.
pub fn sonigual() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("sonigual");
    for (gn, tn) in [("C4", "C4"), ("S3", "C3"), ("Q8", "C2")] {
        let (g, t) = (catalog_lookup(gn)?, catalog_lookup(tn)?);
        let ctx = MonomialContext::new(&g, &t);
        let p = TripleProduct::new(&g, &g, &t)?;
        let conj = center_transversal(&p);
        let descs = all_descriptors(&ctx);
        let canon: Vec<Subgroup> = descs
            .iter()
            .map(|d| canonical_conjugate(&p, &conj, &ctx.build_d(d, &p)))
            .collect();
        for (i, d1) in descs.iter().enumerate() {
            for (j, d2) in descs.iter().enumerate() {
                let by_desc = ctx.lp_conjugacy_equal(d1, d2);
                rep.check(by_desc == (canon[i] == canon[j]), || {
                    format!("({gn},{tn}): {d1:?} vs {d2:?}: descriptors say {by_desc}")
                });
                rep.check(by_desc == (ctx.canonical(d1) == ctx.canonical(d2)), || {
                    format!("({gn},{tn}): canonical form disagrees for {d1:?} vs {d2:?}")
                });
            }
        }
    }
    Ok(rep)
}

/// Catalog pairs `(G, T)` with `|G×G×T| ≤ 1024` accepted by `filter`.
pub fn catalog_pairs(filter: impl Fn(&FiniteGroup, &FiniteGroup) -> bool) -> Vec<(FiniteGroup, FiniteGroup)> {
    let groups: Vec<FiniteGroup> = catalog_entries()
        .iter()
        .map(|e| catalog_lookup(e.name).expect("catalog"))
        .collect();
    let mut out = Vec::new();
    for g in &groups {
        for t in &groups {
            if g.order() * g.order() * t.order() <= SUITE_PRODUCT_BOUND && filter(g, t) {
                out.push((g.clone(), t.clone()));
            }
        }
    }
    out
}

fn suite_config() -> ScanConfig {
    ScanConfig {
        reduced: true,
        symmetry: true,
        ..Default::default()
    }
}

/// `Dim = St′` and `|lp_classes| = Prod` for every abelian catalog pair in range.
pub fn abelian_iso() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("abelian-iso");
    for (g, t) in catalog_pairs(|g, t| g.is_abelian() && t.is_abelian()) {
        let scan = essential_scan(&g, &t, &suite_config())?;
        rep.check(scan.dim() == scan.st_prime(), || {
            format!("({}, {}): Dim {} vs St' {}", g.name(), t.name(), scan.dim(), scan.st_prime())
        });
        let ctx = MonomialContext::new(&g, &t);
        let (prod, lp) = (ctx.prod_count(), ctx.lp_classes().len());
        rep.check(prod == lp, || {
            format!("({}, {}): Prod {prod} vs |lp_classes| {lp}", g.name(), t.name())
        });
    }
    Ok(rep)
}

/// `Gen = St′ = Dim = Prod` and nothing factors, for coprime catalog pairs.
pub fn coprime_iso() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("coprime-iso");
    for (g, t) in catalog_pairs(|g, t| num_integer::gcd(g.order(), t.order()) == 1) {
        let scan = essential_scan(&g, &t, &suite_config())?;
        let ctx = MonomialContext::new(&g, &t);
        let prod = ctx.prod_count();
        let lp = ctx.lp_classes().len();
        let nums = [scan.gen(), scan.st_prime(), scan.dim(), prod, lp];
        rep.check(nums.iter().all(|&x| x == nums[0]) && scan.factored.is_empty(), || {
            format!(
                "({}, {}): Gen {} St' {} Dim {} Prod {} |lp_classes| {} factored {}",
                g.name(),
                t.name(),
                nums[0],
                nums[1],
                nums[2],
                nums[3],
                nums[4],
                scan.factored.len()
            )
        });
    }
    Ok(rep)
}

/// `|Out(G)|` via the automorphism enumerator.
pub fn out_order(g: &FiniteGroup) -> usize {
    automorphisms(g).out_order()
}
