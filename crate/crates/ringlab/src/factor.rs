//! Divisor and factorization enumeration in R[X], tiered irreducibility,
//! sets of lengths of powers of X, and Fletcher U-decompositions.
//!
//! Over a local base the divisor search is pruned through R/nil: a divisor of
//! a polynomial with nonzero reduction must reduce to (unit)·(monic divisor),
//! so candidates enumerate a monic divisor pattern, a unit lift, and
//! nilpotent-coefficient tails. Over a decomposable base everything proceeds
//! componentwise. Verdicts that depend on a degree bound carry their tier.

use crate::elem::{assoc_class_reps, classify_element};
use crate::error::{Error, Result};
use crate::poly::{
    classify_poly, cofactors, divides_bounded, is_unit_poly, polys_up_to, reduce_mod_nil,
    split_components, Poly, Tier,
};
use crate::ring::FiniteRing;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

/// Default degree bound: deg f plus the nilpotency index of the base.
pub fn default_deg_bound(f: &Poly) -> usize {
    f.deg_or0() + f.ring().nilpotency_index()
}

/// Search-space guard for the unpruned fallback paths.
const BRUTE_CAP: u64 = 4_000_000;

fn check_brute(size: usize, bound: usize) -> Result<()> {
    let space = (size as u64).checked_pow(bound as u32 + 1);
    match space {
        Some(s) if s <= BRUTE_CAP => Ok(()),
        _ => Err(Error::SearchSpace(format!(
            "unpruned divisor space {size}^{} exceeds the cap",
            bound + 1
        ))),
    }
}

/// Shared memo tables for one enumeration session over a fixed ring.
#[derive(Default)]
pub struct SearchCtx {
    divisors: HashMap<(Vec<u32>, usize), Arc<Vec<Poly>>>,
    irreducible: HashMap<(Vec<u32>, usize), bool>,
}

impl SearchCtx {
    pub fn new() -> Self {
        Self::default()
    }
}

// ---------------------------------------------------------------------------
// Divisor enumeration
// ---------------------------------------------------------------------------

/// All divisors of f with degree <= bound (every g such that g·h = f for some
/// h of degree <= bound), as concrete polynomials.
pub fn all_divisors(ctx: &mut SearchCtx, f: &Poly, bound: usize) -> Result<Arc<Vec<Poly>>> {
    let key = (f.coeffs().to_vec(), bound);
    if let Some(v) = ctx.divisors.get(&key) {
        return Ok(v.clone());
    }
    let r = f.ring().clone();
    let mut out: Vec<Poly> = Vec::new();
    if r.is_local() {
        let fbar = reduce_mod_nil(f);
        if fbar.is_zero() {
            // no mod-nil pruning available
            check_brute(r.size(), bound)?;
            for g in polys_up_to(&r, bound) {
                if !g.is_zero() && divides_bounded(&g, f, bound) {
                    out.push(g);
                }
            }
            if f.is_zero() {
                out.insert(0, Poly::zero(r.clone()));
            }
        } else {
            let (rbar, _) = r.mod_nil();
            // monic divisor patterns of fbar over the residue field
            let mut patterns: Vec<Poly> = Vec::new();
            for d in monic_polys(&rbar, bound.min(fbar.deg_or0())) {
                if divides_bounded(&d, &fbar, fbar.deg_or0()) {
                    patterns.push(d);
                }
            }
            let nil: Vec<u32> = r.nilradical();
            let space = (patterns.len() as u64)
                .saturating_mul(rbar.size() as u64 - 1)
                .saturating_mul((nil.len() as u64).saturating_pow(bound as u32 + 1));
            if space > BRUTE_CAP {
                return Err(Error::SearchSpace(format!(
                    "divisor lift space {space} exceeds the cap for {} at bound {bound}",
                    f.display()
                )));
            }
            let units_bar: Vec<u32> = rbar.units_list();
            // preimages per residue class
            let mut pre: HashMap<u32, Vec<u32>> = HashMap::new();
            let (_, proj) = r.mod_nil();
            for a in r.elements() {
                pre.entry(proj[a as usize]).or_default().push(a);
            }
            for pat in &patterns {
                for &u in &units_bar {
                    let target = pat.scale_by(&rbar, u);
                    // enumerate lifts: coefficients over preimage classes,
                    // positions above deg(target) over the nilradical
                    let mut coeffs = vec![0u32; bound + 1];
                    enum_lifts(&r, &pre, &nil, &target, bound, 0, &mut coeffs, &mut |g| {
                        if !g.is_zero() && divides_bounded(&g, f, bound) {
                            out.push(g);
                        }
                    });
                }
            }
            out.sort_by(Poly::cmp_key);
            out.dedup();
        }
    } else {
        // componentwise: divisors of f are exactly the assemblies of
        // component divisors
        let parts = split_components(f);
        let comps = r.local_components();
        let mut per: Vec<Vec<Poly>> = Vec::new();
        for p in &parts {
            let mut sub = SearchCtx::new();
            per.push(all_divisors(&mut sub, p, bound)?.as_ref().clone());
        }
        let mut idx = vec![0usize; per.len()];
        loop {
            let chosen: Vec<Poly> = idx.iter().zip(&per).map(|(&i, v)| v[i].clone()).collect();
            out.push(crate::poly::reassemble_components(&r, &chosen));
            let mut k = 0;
            loop {
                if k == idx.len() {
                    break;
                }
                idx[k] += 1;
                if idx[k] < per[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
        let _ = comps;
        out.sort_by(Poly::cmp_key);
        out.dedup();
    }
    let arc = Arc::new(out);
    ctx.divisors.insert(key, arc.clone());
    Ok(arc)
}

fn enum_lifts(
    r: &Arc<FiniteRing>,
    pre: &HashMap<u32, Vec<u32>>,
    nil: &[u32],
    target: &Poly,
    bound: usize,
    pos: usize,
    coeffs: &mut Vec<u32>,
    emit: &mut dyn FnMut(Poly),
) {
    if pos > bound {
        emit(Poly::new(r.clone(), coeffs.clone()));
        return;
    }
    let choices: &[u32] = if pos <= target.deg_or0() && !target.is_zero() {
        &pre[&target.coeff(pos)]
    } else {
        nil
    };
    for &c in choices {
        coeffs[pos] = c;
        enum_lifts(r, pre, nil, target, bound, pos + 1, coeffs, emit);
    }
    coeffs[pos] = 0;
}

/// Monic polynomials of degree 0..=max_deg over a ring (used on residue
/// fields for divisor patterns).
fn monic_polys(r: &Arc<FiniteRing>, max_deg: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    for d in 0..=max_deg {
        let mut coeffs = vec![0u32; d + 1];
        coeffs[d] = r.one();
        loop {
            out.push(Poly::new(r.clone(), coeffs.clone()));
            let mut i = 0;
            while i < d {
                coeffs[i] += 1;
                if coeffs[i] < r.size() as u32 {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    out
}

impl Poly {
    fn scale_by(&self, r: &Arc<FiniteRing>, u: u32) -> Poly {
        let coeffs = self.coeffs().iter().map(|&c| r.mul(u, c)).collect();
        Poly::new(r.clone(), coeffs)
    }
}

/// Divisors grouped into associate classes; representatives are the minimal
/// members found (degree, then coefficient order).
#[derive(Debug, Clone)]
pub struct DivisorClasses {
    pub reps: Vec<Poly>,
    pub tier: Tier,
}

pub fn divisors_poly(ctx: &mut SearchCtx, f: &Poly, bound: usize) -> Result<DivisorClasses> {
    let all = all_divisors(ctx, f, bound)?;
    let mut reps: Vec<Poly> = Vec::new();
    'outer: for g in all.iter() {
        for rep in &reps {
            let fwd = divides_bounded(rep, g, bound);
            let bwd = divides_bounded(g, rep, bound);
            if fwd && bwd {
                continue 'outer;
            }
        }
        reps.push(g.clone());
    }
    let r = f.ring();
    let tier = if r.is_reduced() && !classify_poly(f).zero_divisor {
        Tier::Exact
    } else {
        Tier::Bounded
    };
    Ok(DivisorClasses { reps, tier })
}

// ---------------------------------------------------------------------------
// Irreducibility
// ---------------------------------------------------------------------------

/// Tiered irreducibility of a nonunit polynomial: exact for constants, for
/// nonunit factors of X^n over an indecomposable base, and over reduced
/// bases; otherwise a bounded search for a factorization into two nonunits.
pub fn is_irreducible_poly(ctx: &mut SearchCtx, f: &Poly, bound: usize) -> Result<(bool, Tier)> {
    if is_unit_poly(f) {
        return Err(Error::UnitSubject(f.display()));
    }
    let key = (f.coeffs().to_vec(), bound);
    if let Some(&v) = ctx.irreducible.get(&key) {
        // tier recomputed below; cached verdicts only
        let tier = irreducibility_tier(ctx, f, bound);
        return Ok((v, tier));
    }
    let r = f.ring().clone();
    if f.is_constant() {
        let v = classify_element(&r, f.coeff(0)).irreducible;
        ctx.irreducible.insert(key, v);
        return Ok((v, Tier::Exact));
    }
    if !r.is_local() {
        // a product element is irreducible iff exactly one component is a
        // nonunit and that component is irreducible
        let parts = split_components(f);
        let nonunits: Vec<usize> = parts
            .iter()
            .enumerate()
            .filter(|(_, p)| !is_unit_poly(p))
            .map(|(i, _)| i)
            .collect();
        let v = if nonunits.len() != 1 {
            false
        } else {
            let mut sub = SearchCtx::new();
            is_irreducible_poly(&mut sub, &parts[nonunits[0]], bound)?.0
        };
        ctx.irreducible.insert(key, v);
        return Ok((v, irreducibility_tier(ctx, f, bound)));
    }
    // local base: R[X] is presimplifiable, so irreducible iff no nonunit
    // divisor pair multiplies to f
    let divs = all_divisors(ctx, f, bound)?;
    let mut verdict = true;
    'outer: for g in divs.iter() {
        if is_unit_poly(g) {
            continue;
        }
        for h in cofactors(g, f, bound) {
            if !is_unit_poly(&h) {
                verdict = false;
                break 'outer;
            }
        }
    }
    ctx.irreducible.insert(key, verdict);
    let tier = if !verdict {
        Tier::Exact
    } else {
        irreducibility_tier(ctx, f, bound)
    };
    Ok((verdict, tier))
}

fn irreducibility_tier(_ctx: &mut SearchCtx, f: &Poly, bound: usize) -> Tier {
    let r = f.ring();
    if f.is_constant() {
        return Tier::Exact;
    }
    if r.is_reduced() {
        return Tier::Exact;
    }
    if r.is_indecomposable() && divides_power_of_x(f, bound) {
        return Tier::Exact;
    }
    Tier::Bounded
}

/// Does f divide X^n for some n within reach of the bound?
pub fn divides_power_of_x(f: &Poly, bound: usize) -> bool {
    let r = f.ring().clone();
    let maxn = f.deg_or0() + bound;
    for n in f.deg_or0().max(1)..=maxn {
        let xn = Poly::x(r.clone()).pow(n);
        if divides_bounded(f, &xn, bound.max(n)) {
            return true;
        }
    }
    false
}

/// Indecomposability via the pruned divisor enumeration (same criterion as
/// `poly::is_indecomposable_poly`, usable on larger carriers).
pub fn is_indecomposable_via_divisors(
    ctx: &mut SearchCtx,
    f: &Poly,
    bound: usize,
) -> Result<(bool, Tier)> {
    let r = f.ring();
    if f.is_zero() {
        return Ok((r.is_domain(), Tier::Exact));
    }
    let divisors = all_divisors(ctx, f, bound)?;
    for g in divisors.iter() {
        if g.is_zero() || crate::poly::strongly_assoc_to_constant(g) {
            continue;
        }
        for h in cofactors(g, f, bound) {
            if !crate::poly::strongly_assoc_to_constant(&h) {
                return Ok((false, Tier::Exact));
            }
        }
    }
    let tier = if r.is_reduced() && bound >= f.deg_or0().max(1) {
        Tier::Exact
    } else {
        Tier::Bounded
    };
    Ok((true, tier))
}

// ---------------------------------------------------------------------------
// Atomic factorizations in R[X]
// ---------------------------------------------------------------------------

/// One atomic factorization: concrete factors (product = subject exactly)
/// plus the multiset of atom class ids that keys its isomorphism class.
#[derive(Debug, Clone, Serialize)]
pub struct PolyFactorization {
    pub factors: Vec<Poly>,
    pub class_ids: Vec<usize>,
}

/// All atomic factorizations of a polynomial up to order and associates.
#[derive(Debug, Clone, Serialize)]
pub struct PolyFactorizations {
    /// one concrete representative per isomorphism class
    pub classes: Vec<PolyFactorization>,
    /// atom class id -> representative polynomial
    pub atom_reps: Vec<Poly>,
    pub cap_hit: bool,
    pub deg_bound: usize,
    pub len_cap: usize,
}

impl PolyFactorizations {
    pub fn lengths(&self) -> BTreeSet<usize> {
        self.classes.iter().map(|c| c.factors.len()).collect()
    }
}

impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.display())
    }
}

struct AtomRegistry {
    reps: Vec<Poly>,
    /// irreducibility verdict per class, evaluated once on the first member
    is_atom: Vec<Option<bool>>,
    bound: usize,
}

impl AtomRegistry {
    fn new(bound: usize) -> AtomRegistry {
        AtomRegistry {
            reps: Vec::new(),
            is_atom: Vec::new(),
            bound,
        }
    }

    fn class_of(&mut self, g: &Poly) -> usize {
        for (i, rep) in self.reps.iter().enumerate() {
            if divides_bounded(rep, g, self.bound) && divides_bounded(g, rep, self.bound) {
                if g.cmp_key(rep) == std::cmp::Ordering::Less {
                    self.reps[i] = g.clone();
                }
                return i;
            }
        }
        self.reps.push(g.clone());
        self.is_atom.push(None);
        self.reps.len() - 1
    }

    fn atom_status(&mut self, ctx: &mut SearchCtx, cid: usize) -> Result<bool> {
        if let Some(v) = self.is_atom[cid] {
            return Ok(v);
        }
        let rep = self.reps[cid].clone();
        let v = is_irreducible_poly(ctx, &rep, self.bound)?.0;
        self.is_atom[cid] = Some(v);
        Ok(v)
    }
}

/// Enumerate atomic factorizations of f, complete within the given degree
/// bound and length cap. Zero subjects require `allow_zero`.
pub fn atomic_factorizations_poly(
    f: &Poly,
    deg_bound: usize,
    len_cap: usize,
    allow_zero: bool,
) -> Result<PolyFactorizations> {
    if is_unit_poly(f) {
        return Err(Error::UnitSubject(f.display()));
    }
    if f.is_zero() && !allow_zero {
        return Err(Error::ZeroSubject);
    }
    let r = f.ring().clone();
    if r.is_local() {
        return atomic_factorizations_local(f, deg_bound, len_cap);
    }
    // componentwise: every atom has exactly one nonunit component, so a
    // factorization of f interleaves per-component μ-factorizations
    let parts = split_components(f);
    let comps = r.local_components();
    let mut per: Vec<PolyFactorizations> = Vec::new();
    for p in &parts {
        per.push(atomic_factorizations_local(p, deg_bound, len_cap)?);
    }
    let mut out: Vec<PolyFactorization> = Vec::new();
    let mut atom_reg = AtomRegistry::new(deg_bound);
    let mut idx = vec![0usize; per.len()];
    let cap_hit = per.iter().any(|p| p.cap_hit);
    'assembly: loop {
        // assemble one combination
        let mut factors: Vec<Poly> = Vec::new();
        let mut total_len = 0;
        for (j, p) in per.iter().enumerate() {
            if p.classes.is_empty() {
                // component subject is a unit there: nothing to contribute
                continue;
            }
            let f_j = &p.classes[idx[j]];
            total_len += f_j.factors.len();
            for g in &f_j.factors {
                // embed: g in component j, 1 elsewhere
                let mut embedded: Vec<u32> = Vec::new();
                let d = g.deg_or0();
                for i in 0..=d {
                    let mut coeff = r.component_embed(j, g.coeff(i));
                    if i == 0 {
                        for (l, (_, e_l)) in comps.iter().enumerate() {
                            if l != j {
                                let one_l = r.mul(*e_l, r.one());
                                coeff = r.add(coeff, one_l);
                            }
                        }
                    }
                    embedded.push(coeff);
                }
                factors.push(Poly::new(r.clone(), embedded));
            }
        }
        if total_len <= len_cap && !factors.is_empty() {
            // fix the product up to the unit discrepancy by adjusting the
            // first factor
            let mut prod = Poly::one(r.clone());
            for g in &factors {
                prod = prod.mul(g);
            }
            if let Some(u) = unit_quotient(f, &prod, deg_bound) {
                factors[0] = factors[0].mul(&u);
                let mut ids: Vec<usize> = factors.iter().map(|g| atom_reg.class_of(g)).collect();
                ids.sort_unstable();
                factors.sort_by(Poly::cmp_key);
                if !out.iter().any(|o| o.class_ids == ids) {
                    out.push(PolyFactorization {
                        factors,
                        class_ids: ids,
                    });
                }
            }
        }
        // next combination
        let mut k = 0;
        loop {
            if k == idx.len() {
                break 'assembly;
            }
            if per[k].classes.is_empty() {
                k += 1;
                continue;
            }
            idx[k] += 1;
            if idx[k] < per[k].classes.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
    out.sort_by(|a, b| {
        a.class_ids
            .len()
            .cmp(&b.class_ids.len())
            .then_with(|| a.class_ids.cmp(&b.class_ids))
    });
    Ok(PolyFactorizations {
        classes: out,
        atom_reps: atom_reg.reps,
        cap_hit,
        deg_bound,
        len_cap,
    })
}

/// u with f = prod·u and u a unit, if any (bounded search).
fn unit_quotient(f: &Poly, prod: &Poly, bound: usize) -> Option<Poly> {
    if prod.is_zero() {
        return f.is_zero().then(|| Poly::one(f.ring().clone()));
    }
    cofactors(prod, f, bound).into_iter().find(is_unit_poly_ref)
}

fn is_unit_poly_ref(p: &Poly) -> bool {
    is_unit_poly(p)
}

fn atomic_factorizations_local(
    f: &Poly,
    deg_bound: usize,
    len_cap: usize,
) -> Result<PolyFactorizations> {
    let mut ctx = SearchCtx::new();
    let mut atom_reg = AtomRegistry::new(deg_bound);
    // unit subject: empty factorization list (used by the componentwise path)
    if is_unit_poly(f) {
        return Ok(PolyFactorizations {
            classes: vec![PolyFactorization {
                factors: Vec::new(),
                class_ids: Vec::new(),
            }],
            atom_reps: Vec::new(),
            cap_hit: false,
            deg_bound,
            len_cap,
        });
    }
    let mut found: BTreeMap<Vec<usize>, Vec<Poly>> = BTreeMap::new();
    let mut cap_hit = false;
    let mut path: Vec<(usize, Poly)> = Vec::new();
    dfs_factor(
        &mut ctx,
        &mut atom_reg,
        f,
        deg_bound,
        len_cap,
        &mut path,
        &mut found,
        &mut cap_hit,
    )?;
    let classes: Vec<PolyFactorization> = found
        .into_iter()
        .map(|(ids, factors)| PolyFactorization {
            factors,
            class_ids: ids,
        })
        .collect();
    Ok(PolyFactorizations {
        classes,
        atom_reps: atom_reg.reps,
        cap_hit,
        deg_bound,
        len_cap,
    })
}

#[allow(clippy::too_many_arguments)]
fn dfs_factor(
    ctx: &mut SearchCtx,
    atom_reg: &mut AtomRegistry,
    target: &Poly,
    deg_bound: usize,
    len_left: usize,
    path: &mut Vec<(usize, Poly)>,
    found: &mut BTreeMap<Vec<usize>, Vec<Poly>>,
    cap_hit: &mut bool,
) -> Result<()> {
    if is_unit_poly(target) && !path.is_empty() {
        // absorb the unit into the last factor; classes are unchanged
        let mut ids: Vec<usize> = path.iter().map(|(i, _)| *i).collect();
        ids.sort_unstable();
        if !found.contains_key(&ids) {
            let mut factors: Vec<Poly> = path.iter().map(|(_, g)| g.clone()).collect();
            let last = factors.last_mut().unwrap();
            *last = last.mul(target);
            factors.sort_by(Poly::cmp_key);
            found.insert(ids, factors);
        }
        return Ok(());
    }
    if len_left == 0 {
        if !is_unit_poly(target) {
            *cap_hit = true;
        }
        return Ok(());
    }
    let divisors = all_divisors(ctx, target, deg_bound)?;
    // atoms only, one per class (completeness: any factorization rewrites to
    // one whose next factor is a class representative)
    let mut seen_classes: Vec<usize> = Vec::new();
    let candidates: Vec<Poly> = divisors.as_ref().clone();
    for g in candidates {
        if is_unit_poly(&g) || g.is_zero() {
            continue;
        }
        let cid = atom_reg.class_of(&g);
        if seen_classes.contains(&cid) {
            continue;
        }
        seen_classes.push(cid);
        if !atom_reg.atom_status(ctx, cid)? {
            continue;
        }
        for h in cofactors(&g, target, deg_bound) {
            path.push((cid, g.clone()));
            dfs_factor(ctx, atom_reg, &h, deg_bound, len_left - 1, path, found, cap_hit)?;
            path.pop();
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Sets of lengths of X^n
// ---------------------------------------------------------------------------

/// Lengths of atomic factorizations of X^n.
#[derive(Debug, Clone, Serialize)]
pub struct LengthSet {
    pub lengths: BTreeSet<usize>,
    pub deg_bound: usize,
    pub len_cap: usize,
    /// true when raising the caps cannot add lengths
    pub saturated: bool,
}

/// Set of lengths of X^n: componentwise sums over the local decomposition;
/// over a local base every nonunit factor of X^n drops degree mod nil, so the
/// enumeration is exact with length cap n.
pub fn set_of_lengths_xn(r: &Arc<FiniteRing>, n: usize, deg_bound: usize) -> Result<LengthSet> {
    if n == 0 {
        return Err(Error::Semantic("n must be >= 1".into()));
    }
    let comps = r.local_components();
    let mut total: BTreeSet<usize> = [0usize].into();
    for (c, _) in &comps {
        let l = lengths_xn_local(c, n, deg_bound)?;
        let mut next = BTreeSet::new();
        for &a in &total {
            for &b in &l {
                next.insert(a + b);
            }
        }
        total = next;
    }
    Ok(LengthSet {
        lengths: total,
        deg_bound,
        len_cap: n * comps.len(),
        saturated: true,
    })
}

fn lengths_xn_local(r: &Arc<FiniteRing>, n: usize, deg_bound: usize) -> Result<BTreeSet<usize>> {
    let xn = Poly::x(r.clone()).pow(n);
    let mut ctx = SearchCtx::new();
    let mut memo: HashMap<Vec<u32>, BTreeSet<usize>> = HashMap::new();
    lengths_rec(&mut ctx, &xn, deg_bound, &mut memo)
}

fn lengths_rec(
    ctx: &mut SearchCtx,
    target: &Poly,
    deg_bound: usize,
    memo: &mut HashMap<Vec<u32>, BTreeSet<usize>>,
) -> Result<BTreeSet<usize>> {
    if is_unit_poly(target) {
        return Ok([0usize].into());
    }
    let key = target.coeffs().to_vec();
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    // placeholder against cycles; factors of X^n strictly drop mod-nil degree
    memo.insert(key.clone(), BTreeSet::new());
    let mut out = BTreeSet::new();
    let divisors = all_divisors(ctx, target, deg_bound)?;
    let candidates: Vec<Poly> = divisors.as_ref().clone();
    for g in candidates {
        if is_unit_poly(&g) || g.is_zero() {
            continue;
        }
        if !is_irreducible_poly(ctx, &g, deg_bound)?.0 {
            continue;
        }
        for h in cofactors(&g, target, deg_bound) {
            for l in lengths_rec(ctx, &h, deg_bound, memo)? {
                out.insert(l + 1);
            }
        }
    }
    memo.insert(key, out.clone());
    Ok(out)
}

// ---------------------------------------------------------------------------
// The factorization of X
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct XFactorization {
    /// canonical factors (1,...,X,...,1), one per local component
    pub factors: Vec<Poly>,
    /// number of isomorphism classes found by independent bounded search
    pub uniqueness_count: usize,
    /// every component is a domain, so the factors are prime
    pub primes: bool,
}

pub fn factor_x(r: &Arc<FiniteRing>, deg_bound: usize) -> Result<XFactorization> {
    let comps = r.local_components();
    let mut factors = Vec::new();
    for (j, _) in comps.iter().enumerate() {
        // (1-e_j) + e_j X
        let e = comps[j].1;
        let const_term = r.sub(r.one(), e);
        factors.push(Poly::new(r.clone(), vec![const_term, e]));
    }
    let mut prod = Poly::one(r.clone());
    for g in &factors {
        prod = prod.mul(g);
    }
    debug_assert_eq!(prod, Poly::x(r.clone()));
    let x = Poly::x(r.clone());
    let enumerated = atomic_factorizations_poly(&x, deg_bound, comps.len() + 2, false)?;
    let primes = comps.iter().all(|(c, _)| c.is_domain());
    Ok(XFactorization {
        factors,
        uniqueness_count: enumerated.classes.len(),
        primes,
    })
}

// ---------------------------------------------------------------------------
// U-decompositions (ring elements)
// ---------------------------------------------------------------------------

/// Fletcher U-decomposition a = a_1···a_k ⌈b_1···b_n⌉.
#[derive(Debug, Clone, Serialize)]
pub struct UDecomposition {
    pub subject: u32,
    pub irrelevant: Vec<u32>,
    pub relevant: Vec<u32>,
}

/// U(r) = {s : s·(r) = (r)}.
pub fn u_set(r: &FiniteRing, x: u32) -> Vec<u32> {
    let pid = r.principal_ideal(x);
    r.elements()
        .filter(|&s| {
            let mut img: Vec<u32> = pid.iter().map(|&p| r.mul(s, p)).collect();
            img.sort_unstable();
            img.dedup();
            img == pid
        })
        .collect()
}

fn product(r: &FiniteRing, xs: &[u32]) -> u32 {
    xs.iter().fold(r.one(), |acc, &x| r.mul(acc, x))
}

/// Refine an atomic factorization into a U-decomposition, backtracking over
/// removal orders until the defining conditions hold.
pub fn refine_to_u_decomposition(
    r: &FiniteRing,
    subject: u32,
    factors: &[u32],
) -> Option<UDecomposition> {
    fn rec(r: &FiniteRing, irrelevant: &mut Vec<u32>, relevant: Vec<u32>) -> Option<(Vec<u32>, Vec<u32>)> {
        // eligible moves: b_j in U(prod of the others)
        let mut eligible = Vec::new();
        for j in 0..relevant.len() {
            let others: Vec<u32> = relevant
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != j)
                .map(|(_, &b)| b)
                .collect();
            let u = u_set(r, product(r, &others));
            if u.contains(&relevant[j]) {
                eligible.push(j);
            }
        }
        if eligible.is_empty() {
            // relevant part final; verify the irrelevant side
            let u = u_set(r, product(r, &relevant));
            if irrelevant.iter().all(|a| u.contains(a)) {
                return Some((irrelevant.clone(), relevant));
            }
            return None;
        }
        for j in eligible {
            let mut rest = relevant.clone();
            let moved = rest.remove(j);
            irrelevant.push(moved);
            if let Some(res) = rec(r, irrelevant, rest) {
                return Some(res);
            }
            irrelevant.pop();
        }
        None
    }
    let mut irrelevant = Vec::new();
    let (irrelevant, relevant) = rec(r, &mut irrelevant, factors.to_vec())?;
    Some(UDecomposition {
        subject,
        irrelevant,
        relevant,
    })
}

/// One U-decomposition of a nonunit, built by refining an atomic
/// factorization found by search.
pub fn u_decomposition(r: &Arc<FiniteRing>, a: u32, len_cap: usize) -> Result<UDecomposition> {
    if r.is_unit(a) {
        return Err(Error::UnitSubject(r.elem_label(a)));
    }
    if a == 0 && r.is_domain() {
        // 0 is irreducible in a domain: 0 = ⌈0⌉
        return Ok(UDecomposition {
            subject: 0,
            irrelevant: vec![],
            relevant: vec![0],
        });
    }
    let facts = crate::elem::atomic_factorizations_elem(r, a, len_cap)?;
    for concrete in &facts.concrete {
        if let Some(u) = refine_to_u_decomposition(r, a, concrete) {
            return Ok(u);
        }
    }
    Err(Error::Inconsistency {
        flag: "u-decomposition".into(),
        ring: r.label().to_string(),
        witness: r.elem_label(a),
    })
}

/// Definition-side Fletcher UFR decider: every nonunit has a U-decomposition
/// and all relevant parts agree up to order and associates (within caps).
pub fn is_fletcher_ufr(r: &Arc<FiniteRing>, len_cap: usize) -> Result<bool> {
    let reps = assoc_class_reps(r);
    for a in r.elements() {
        if r.is_unit(a) {
            continue;
        }
        let mut relevant_keys: BTreeSet<Vec<u32>> = BTreeSet::new();
        if a == 0 && r.is_domain() {
            continue;
        }
        let facts = crate::elem::atomic_factorizations_elem(r, a, len_cap)?;
        if facts.concrete.is_empty() {
            return Ok(false); // not atomic (cannot happen over a finite ring)
        }
        for concrete in &facts.concrete {
            match refine_to_u_decomposition(r, a, concrete) {
                None => return Ok(false),
                Some(u) => {
                    let mut key: Vec<u32> =
                        u.relevant.iter().map(|&b| reps[b as usize]).collect();
                    key.sort_unstable();
                    relevant_keys.insert(key);
                }
            }
        }
        if relevant_keys.len() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Weakly prime lift probe
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ProbeEntry {
    pub element: String,
    pub deg_bound: usize,
    /// the element is prime in R, hence prime (and weakly prime) in R[X];
    /// "none" is then exact rather than bounded
    pub prime_shortcut: bool,
    /// (f, g, f·g) with a | fg != 0, a ∤ f, a ∤ g, if found
    pub witness: Option<(String, String, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub ring: String,
    pub entries: Vec<ProbeEntry>,
}

/// For each weakly prime ring element, search R[X] for a witness that it is
/// not weakly prime as a polynomial (a | fg != 0 with a dividing neither).
/// Constant divisibility is coefficientwise, hence exact. Prime elements
/// short-circuit: R/(a) a domain makes (R/(a))[X] a domain, so a stays prime.
pub fn probe_weakly_prime_lift(r: &Arc<FiniteRing>, deg_bound: usize) -> ProbeReport {
    let mut entries = Vec::new();
    for a in r.elements() {
        let c = classify_element(r, a);
        if !c.weakly_prime {
            continue;
        }
        if c.prime {
            entries.push(ProbeEntry {
                element: r.elem_label(a),
                deg_bound,
                prime_shortcut: true,
                witness: None,
            });
            continue;
        }
        let pid: Vec<bool> = {
            let mut v = vec![false; r.size()];
            for p in r.principal_ideal(a) {
                v[p as usize] = true;
            }
            v
        };
        let divides_const = |f: &Poly| f.coeffs().iter().all(|&c| pid[c as usize]);
        let candidates: Vec<Poly> = polys_up_to(r, deg_bound)
            .into_iter()
            .filter(|f| !f.is_zero() && !divides_const(f))
            .collect();
        let mut witness = None;
        'search: for (i, f) in candidates.iter().enumerate() {
            for g in &candidates[i..] {
                let fg = f.mul(g);
                if !fg.is_zero() && divides_const(&fg) {
                    witness = Some((f.display(), g.display(), fg.display()));
                    break 'search;
                }
            }
        }
        entries.push(ProbeEntry {
            element: r.elem_label(a),
            deg_bound,
            prime_shortcut: false,
            witness,
        });
    }
    ProbeReport {
        ring: r.label().to_string(),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build;

    fn p(r: &Arc<FiniteRing>, s: &str) -> Poly {
        Poly::parse(r, s).unwrap()
    }

    #[test]
    fn divisors_of_x2_over_field() {
        let z5 = build("Z(5)").unwrap();
        let mut ctx = SearchCtx::new();
        let d = divisors_poly(&mut ctx, &p(&z5, "X^2"), 3).unwrap();
        assert_eq!(d.tier, Tier::Exact);
        let mut reps: Vec<String> = d.reps.iter().map(|g| g.display()).collect();
        reps.sort();
        assert_eq!(reps, ["1", "X", "X^2"]);
    }

    #[test]
    fn divisors_of_x2_over_z4() {
        let z4 = build("Z(4)").unwrap();
        let mut ctx = SearchCtx::new();
        let d = divisors_poly(&mut ctx, &p(&z4, "X^2"), 4).unwrap();
        let reps: BTreeSet<String> = d.reps.iter().map(|g| g.display()).collect();
        for want in ["1", "X", "X+2", "X^2"] {
            assert!(reps.contains(want), "missing {want}; got {reps:?}");
        }
        assert_eq!(reps.len(), 4);
        // X(X+2) = X^2+2X is NOT a divisor of X^2 (the X-coefficient of any
        // multiple is even) but it does divide X^3
        let x3 = p(&z4, "X^3");
        assert!(!divides_bounded(&p(&z4, "X^2+2X"), &p(&z4, "X^2"), 4));
        assert!(divides_bounded(&p(&z4, "X^2+2X"), &x3, 4));
    }

    #[test]
    fn divisors_of_x_over_z4() {
        let z4 = build("Z(4)").unwrap();
        let mut ctx = SearchCtx::new();
        let d = divisors_poly(&mut ctx, &p(&z4, "X"), 3).unwrap();
        let reps: BTreeSet<String> = d.reps.iter().map(|g| g.display()).collect();
        assert_eq!(reps, ["1".to_string(), "X".to_string()].into());
    }

    #[test]
    fn irreducibility_examples() {
        let z4 = build("Z(4)").unwrap();
        let mut ctx = SearchCtx::new();
        let (v, _) = is_irreducible_poly(&mut ctx, &p(&z4, "X^3+2"), 5).unwrap();
        assert!(v, "X^3+2 over Z4");
        let (v, t) = is_irreducible_poly(&mut ctx, &p(&z4, "X"), 3).unwrap();
        assert!(v && t == Tier::Exact);

        let z6 = build("Z(6)").unwrap();
        let mut ctx = SearchCtx::new();
        let (v, t) = is_irreducible_poly(&mut ctx, &p(&z6, "X"), 2).unwrap();
        assert!(!v && t == Tier::Exact, "X over Z6 reducible: (2+3X)(3+2X)");

        let z2z2 = build("Z(2)xZ(2)").unwrap();
        let mut ctx = SearchCtx::new();
        let c = p(&z2z2, "(0,1)");
        let (v, t) = is_irreducible_poly(&mut ctx, &c, 2).unwrap();
        assert!(v && t == Tier::Exact);
    }

    #[test]
    fn factorizations_of_2x_over_z4() {
        let z4 = build("Z(4)").unwrap();
        let f = atomic_factorizations_poly(&p(&z4, "2X"), 3, 4, false).unwrap();
        assert_eq!(f.classes.len(), 2, "2X = 2·X = 2·(X+2): {:?}", f.classes);
        for c in &f.classes {
            let mut prod = Poly::one(z4.clone());
            for g in &c.factors {
                prod = prod.mul(g);
            }
            assert_eq!(prod, p(&z4, "2X"));
        }
    }

    #[test]
    fn factorizations_of_2x_plus_2_over_z4() {
        let z4 = build("Z(4)").unwrap();
        let f = atomic_factorizations_poly(&p(&z4, "2X+2"), 3, 4, false).unwrap();
        assert_eq!(f.classes.len(), 2, "2X+2 = 2(X+1) = 2(X+3)");
    }

    #[test]
    fn factorizations_of_x2_over_z4() {
        let z4 = build("Z(4)").unwrap();
        let f = atomic_factorizations_poly(&p(&z4, "X^2"), 4, 4, false).unwrap();
        assert_eq!(f.classes.len(), 2, "X^2 = X·X = (X+2)^2");
        let lengths = f.lengths();
        assert_eq!(lengths, [2usize].into());
    }

    #[test]
    fn zero_subject_needs_flag() {
        let z4 = build("Z(4)").unwrap();
        let zero = Poly::zero(z4.clone());
        assert!(matches!(
            atomic_factorizations_poly(&zero, 2, 3, false),
            Err(Error::ZeroSubject)
        ));
        let f = atomic_factorizations_poly(&zero, 2, 3, true).unwrap();
        assert!(!f.classes.is_empty());
        assert!(f.cap_hit, "0 = 2·2·... extends past any cap");
    }

    #[test]
    fn lengths_of_xn_over_z4_small() {
        let z4 = build("Z(4)").unwrap();
        let expect = [
            (1usize, vec![1usize]),
            (2, vec![2]),
            (3, vec![3]),
            (4, vec![2, 4]),
        ];
        for (n, want) in expect {
            let l = set_of_lengths_xn(&z4, n, n + 2).unwrap();
            assert_eq!(
                l.lengths,
                want.iter().copied().collect::<BTreeSet<_>>(),
                "L(X^{n}) over Z4"
            );
            assert!(l.saturated);
        }
    }

    #[test]
    fn lengths_over_field_are_singletons() {
        let z5 = build("Z(5)").unwrap();
        let l = set_of_lengths_xn(&z5, 3, 4).unwrap();
        assert_eq!(l.lengths, [3usize].into());
    }

    #[test]
    fn factor_x_examples() {
        let z6 = build("Z(6)").unwrap();
        let fx = factor_x(&z6, 3).unwrap();
        assert_eq!(fx.factors.len(), 2);
        assert_eq!(fx.uniqueness_count, 1);
        assert!(fx.primes);

        let z4 = build("Z(4)").unwrap();
        let fx = factor_x(&z4, 3).unwrap();
        assert_eq!(fx.factors.len(), 1);
        assert_eq!(fx.uniqueness_count, 1);
        assert!(!fx.primes);

        let z8c = build("Z(2)xZ(2)xZ(2)").unwrap();
        let fx = factor_x(&z8c, 2).unwrap();
        assert_eq!(fx.factors.len(), 3);
        assert_eq!(fx.uniqueness_count, 1);
        assert!(fx.primes);
    }

    #[test]
    fn u_sets_and_decompositions() {
        let z4 = build("Z(4)").unwrap();
        assert_eq!(u_set(&z4, 2), vec![1, 3]);
        let u = u_decomposition(&z4, 0, 4).unwrap();
        assert!(u.irrelevant.is_empty() || u.irrelevant.iter().all(|&x| x == 2));
        assert_eq!(u.relevant, vec![2, 2]);

        let z6 = build("Z(6)").unwrap();
        assert_eq!(u_set(&z6, 2), vec![1, 2, 4, 5]);
        let u = u_decomposition(&z6, 2, 3).unwrap();
        let reps = assoc_class_reps(&z6);
        let rel: Vec<u32> = u.relevant.iter().map(|&b| reps[b as usize]).collect();
        assert_eq!(rel, vec![2]);
    }

    #[test]
    fn fletcher_examples() {
        assert!(is_fletcher_ufr(&build("Z(4)").unwrap(), 5).unwrap());
        assert!(is_fletcher_ufr(&build("Z(6)").unwrap(), 5).unwrap());
        // local with M^2 = 0 but two generators: relevant parts differ for 0
        assert!(!is_fletcher_ufr(&build("Z(2)[s,t]/(s^2,s*t,t^2)").unwrap(), 5).unwrap());
    }

    #[test]
    fn weakly_prime_probe_runs() {
        let z4 = build("Z(4)").unwrap();
        let rep = probe_weakly_prime_lift(&z4, 2);
        assert_eq!(rep.entries.len(), 1); // 2 is the only weakly prime
        assert!(rep.entries[0].witness.is_none(), "2 stays prime in Z4[X]");

        let stq = build("Z(2)[s,t]/(s^2,s*t,t^2)").unwrap();
        let rep = probe_weakly_prime_lift(&stq, 2);
        assert!(!rep.entries.is_empty());
    }
}
