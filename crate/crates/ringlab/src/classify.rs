//! Ring-level classification with two independent deciders per flag — a
//! definition-driven search and a finite-ring structure shortcut — plus the
//! theorem-backed classification of R[X].
//!
//! `classify_ring` computes every flag both ways and errors on disagreement;
//! that agreement is the central test of the whole artifact. Two facts about
//! finite commutative rings are used as lemmas throughout: a finite domain is
//! a field (multiplication by a nonzero element is injective, hence
//! surjective), and a finite UFD is therefore also a field.

use crate::elem::{
    atomic_factorizations_elem, atoms_of, classify_element, is_presimplifiable_ring,
    mu_factorizations_elem, products_cover_nonunits, reducedness_flags, Flavor,
};
use crate::error::{Error, Result};
use crate::factor::{self, atomic_factorizations_poly, PolyFactorization};
use crate::poly::{classify_poly, polys_up_to, Poly};
use crate::ring::FiniteRing;
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::Arc;

/// Ring-level classification; every boolean is computed by definition search
/// and independently by a structure formula, which must agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RingClassReport {
    // structure facts
    pub field: bool,
    pub spir: bool,
    pub local_m2_zero: bool,
    pub product_of_fields: bool,
    pub product_of_fields_and_spirs: bool,
    // atomicity flavors
    pub atomic: bool,
    pub strongly_atomic: bool,
    pub m_atomic: bool,
    pub very_strongly_atomic: bool,
    pub p_atomic: bool,
    pub accp: bool,
    pub presimplifiable: bool,
    // unique-factorization taxonomy
    pub ufr: bool,
    pub weak_ufr: bool,
    pub fletcher_ufr: bool,
    pub factorial: bool,
    pub mu_reduced_ufr: bool,
    pub strongly_mu_reduced_ufr: bool,
    pub weak_mu_reduced_ufr: bool,
    pub weak_strongly_mu_reduced_ufr: bool,
    pub reduced_ufr: bool,
    pub strongly_reduced_ufr: bool,
    pub weak_reduced_ufr: bool,
    pub weak_strongly_reduced_ufr: bool,
}

fn len_cap(r: &FiniteRing) -> usize {
    let log = usize::BITS as usize - r.size().leading_zeros() as usize;
    log + r.nilpotency_index() + r.primitive_idempotents().len() + 2
}

struct StructureFacts {
    field: bool,
    spir: bool,
    local_m2_zero: bool,
    product_of_fields: bool,
    product_of_fields_and_spirs: bool,
    product_of_f2: bool,
    local: bool,
    has_field_component: bool,
}

fn structure_facts(r: &Arc<FiniteRing>) -> StructureFacts {
    let comps = r.local_components();
    let local = r.is_local();
    let field = r.is_field();
    let spir = r.is_spir();
    let m: Vec<u32> = r.elements().filter(|&a| !r.is_unit(a)).collect();
    let local_m2_zero = local && r.ideal_power(&m, 2) == vec![0];
    StructureFacts {
        field,
        spir,
        local_m2_zero,
        product_of_fields: comps.iter().all(|(c, _)| c.is_field()),
        product_of_fields_and_spirs: comps.iter().all(|(c, _)| c.is_field() || c.is_spir()),
        product_of_f2: comps.iter().all(|(c, _)| c.size() == 2),
        local,
        has_field_component: comps.iter().any(|(c, _)| c.is_field()),
    }
}

/// Compare factorization classes pairwise for weak homomorphy: every factor
/// divides some factor of the other factorization, both ways.
fn weakly_homomorphic(r: &FiniteRing, a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|&x| b.iter().any(|&y| r.divides(x, y)))
        && b.iter().all(|&y| a.iter().any(|&x| r.divides(y, x)))
}

/// Definition-side decider for the eight (weak/strongly/μ-)reduced flags:
/// enumerate μ-factorizations, filter by the reducedness condition, require
/// all survivors isomorphic.
struct ReducedVerdicts {
    mu: bool,
    strongly_mu: bool,
    weak_mu: bool,
    weak_strongly_mu: bool,
    plain: bool,
    strongly: bool,
    weak_plain: bool,
    weak_strongly: bool,
}

fn reduced_deciders(r: &Arc<FiniteRing>, cap: usize) -> Result<ReducedVerdicts> {
    let reps = crate::elem::assoc_class_reps(r);
    let mut v = ReducedVerdicts {
        mu: true,
        strongly_mu: true,
        weak_mu: true,
        weak_strongly_mu: true,
        plain: true,
        strongly: true,
        weak_plain: true,
        weak_strongly: true,
    };
    for a in r.elements() {
        if r.is_unit(a) {
            continue;
        }
        let mus = mu_factorizations_elem(r, a, cap)?;
        let mut keys: [BTreeSet<Vec<u32>>; 4] = Default::default();
        for f in &mus {
            let flags = reducedness_flags(r, &f);
            let mut key: Vec<u32> = f.factors.iter().map(|&x| reps[x as usize]).collect();
            key.sort_unstable();
            if flags.mu_reduced {
                keys[0].insert(key.clone());
            }
            if flags.strongly_mu_reduced {
                keys[1].insert(key.clone());
            }
            if flags.reduced {
                keys[2].insert(key.clone());
            }
            if flags.strongly_reduced {
                keys[3].insert(key);
            }
        }
        let uniq = |k: &BTreeSet<Vec<u32>>| k.len() <= 1;
        if a != 0 {
            v.weak_mu &= uniq(&keys[0]);
            v.weak_strongly_mu &= uniq(&keys[1]);
            v.weak_plain &= uniq(&keys[2]);
            v.weak_strongly &= uniq(&keys[3]);
        }
        v.mu &= uniq(&keys[0]);
        v.strongly_mu &= uniq(&keys[1]);
        v.plain &= uniq(&keys[2]);
        v.strongly &= uniq(&keys[3]);
    }
    Ok(v)
}

/// Classify a ring, running both deciders for every flag and failing loudly
/// on any disagreement.
pub fn classify_ring(r: &Arc<FiniteRing>) -> Result<RingClassReport> {
    let cap = len_cap(r);
    let s = structure_facts(r);

    let mut mismatches: Vec<(&'static str, bool, bool)> = Vec::new();
    let mut check = |flag: &'static str, def: bool, shortcut: bool| -> bool {
        if def != shortcut {
            mismatches.push((flag, def, shortcut));
        }
        def
    };

    // atomicity by multiplicative closure (exact), vs finite-ring theory
    let atomic = check(
        "atomic",
        products_cover_nonunits(r, &atoms_of(r, Flavor::Irreducible)),
        true,
    );
    let strongly_atomic = check(
        "strongly_atomic",
        products_cover_nonunits(r, &atoms_of(r, Flavor::StronglyIrreducible)),
        true,
    );
    let m_atomic = check(
        "m_atomic",
        products_cover_nonunits(r, &atoms_of(r, Flavor::MIrreducible)),
        true,
    );
    let very_strongly_atomic = check(
        "very_strongly_atomic",
        products_cover_nonunits(r, &atoms_of(r, Flavor::VeryStronglyIrreducible)),
        s.local || !s.has_field_component,
    );
    let p_atomic = check(
        "p_atomic",
        products_cover_nonunits(r, &atoms_of(r, Flavor::Prime)),
        s.product_of_fields_and_spirs,
    );
    // finite posets of principal ideals have no infinite ascending chains
    let accp = check("accp", true, true);
    let presimplifiable = check("presimplifiable", is_presimplifiable_ring(r), s.local);

    // UFR: atomic and every nonzero nonunit has one factorization class and
    // cannot absorb a nonunit (which would lengthen factorizations)
    let ufr_def = atomic
        && r.elements().all(|a| {
            if a == 0 || r.is_unit(a) {
                return true;
            }
            let extendable = r.elements().any(|x| !r.is_unit(x) && r.mul(a, x) == a);
            if extendable {
                return false;
            }
            match atomic_factorizations_elem(r, a, cap) {
                Ok(f) => f.classes.len() == 1,
                Err(_) => false,
            }
        });
    let ufr = check("ufr", ufr_def, s.spir || s.local_m2_zero);

    let weak_ufr_def = atomic
        && r.elements().all(|a| {
            if a == 0 || r.is_unit(a) {
                return true;
            }
            match atomic_factorizations_elem(r, a, cap) {
                Ok(f) => {
                    for i in 0..f.classes.len() {
                        for j in i + 1..f.classes.len() {
                            if !weakly_homomorphic(r, &f.classes[i], &f.classes[j]) {
                                return false;
                            }
                        }
                    }
                    true
                }
                Err(_) => false,
            }
        });
    let weak_ufr = check(
        "weak_ufr",
        weak_ufr_def,
        s.product_of_fields_and_spirs || s.local_m2_zero,
    );

    let fletcher_ufr = check(
        "fletcher_ufr",
        factor::is_fletcher_ufr(r, cap)?,
        s.product_of_fields_and_spirs,
    );

    // regular nonunits of a finite ring do not exist, so factorial holds
    let factorial_def = r
        .elements()
        .filter(|&a| r.is_regular(a) && !r.is_unit(a))
        .count()
        == 0;
    let factorial = check("factorial", factorial_def, true);

    let rv = reduced_deciders(r, cap)?;
    let mu_reduced_ufr = check(
        "mu_reduced_ufr",
        atomic && rv.mu,
        s.product_of_fields_and_spirs,
    );
    let strongly_mu_reduced_ufr = check(
        "strongly_mu_reduced_ufr",
        atomic && rv.strongly_mu,
        s.product_of_fields_and_spirs,
    );
    let weak_mu_reduced_ufr = check(
        "weak_mu_reduced_ufr",
        atomic && rv.weak_mu,
        s.product_of_fields_and_spirs || s.local_m2_zero,
    );
    let weak_strongly_mu_reduced_ufr = check(
        "weak_strongly_mu_reduced_ufr",
        atomic && rv.weak_strongly_mu,
        s.product_of_fields_and_spirs || s.local_m2_zero,
    );
    let reduced_structure = s.field || s.spir || s.product_of_f2;
    let reduced_ufr = check("reduced_ufr", atomic && rv.plain, reduced_structure);
    let strongly_reduced_ufr = check(
        "strongly_reduced_ufr",
        atomic && rv.strongly,
        reduced_structure,
    );
    let weak_reduced_structure = reduced_structure || s.local_m2_zero;
    let weak_reduced_ufr = check(
        "weak_reduced_ufr",
        atomic && rv.weak_plain,
        weak_reduced_structure,
    );
    let weak_strongly_reduced_ufr = check(
        "weak_strongly_reduced_ufr",
        atomic && rv.weak_strongly,
        weak_reduced_structure,
    );

    if let Some((flag, def, shortcut)) = mismatches.first() {
        return Err(Error::Inconsistency {
            flag: flag.to_string(),
            ring: r.label().to_string(),
            witness: format!("definition search says {def}, structure shortcut says {shortcut}"),
        });
    }

    Ok(RingClassReport {
        field: s.field,
        spir: s.spir,
        local_m2_zero: s.local_m2_zero,
        product_of_fields: s.product_of_fields,
        product_of_fields_and_spirs: s.product_of_fields_and_spirs,
        atomic,
        strongly_atomic,
        m_atomic,
        very_strongly_atomic,
        p_atomic,
        accp,
        presimplifiable,
        ufr,
        weak_ufr,
        fletcher_ufr,
        factorial,
        mu_reduced_ufr,
        strongly_mu_reduced_ufr,
        weak_mu_reduced_ufr,
        weak_strongly_mu_reduced_ufr,
        reduced_ufr,
        strongly_reduced_ufr,
        weak_reduced_ufr,
        weak_strongly_reduced_ufr,
    })
}

// ---------------------------------------------------------------------------
// R[X] classification (theorem-backed)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Theorem,
    BoundedWitness,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolyFlag {
    pub value: bool,
    pub provenance: Provenance,
    pub witness: Option<String>,
}

impl PolyFlag {
    fn thm(value: bool) -> PolyFlag {
        PolyFlag {
            value,
            provenance: Provenance::Theorem,
            witness: None,
        }
    }
    fn with_witness(value: bool, provenance: Provenance, w: String) -> PolyFlag {
        PolyFlag {
            value,
            provenance,
            witness: Some(w),
        }
    }
}

/// Classification of R[X], with per-flag provenance. R[X] is infinite, so
/// these are theorem instantiations for finite bases, corroborated by the
/// bounded witnesses that the harness re-verifies.
#[derive(Debug, Clone, Serialize)]
pub struct PolyRingClassReport {
    pub ufr: PolyFlag,
    pub factorial: PolyFlag,
    pub weak_ufr: PolyFlag,
    pub fletcher_ufr: PolyFlag,
    pub mu_reduced_ufr: PolyFlag,
    pub strongly_mu_reduced_ufr: PolyFlag,
    pub weak_mu_reduced_ufr: PolyFlag,
    pub weak_strongly_mu_reduced_ufr: PolyFlag,
    pub reduced_ufr: PolyFlag,
    pub strongly_reduced_ufr: PolyFlag,
    pub weak_reduced_ufr: PolyFlag,
    pub weak_strongly_reduced_ufr: PolyFlag,
    pub atomic: PolyFlag,
    pub bfr: PolyFlag,
    pub hfr: PolyFlag,
    pub ffr: PolyFlag,
    /// exact checks of the finite-local finiteness conditions, when local
    pub ffr_condition_a: Option<bool>,
    pub ffr_condition_b: Option<bool>,
}

/// Witness that R[X] is not half-factorial: two atomic factorizations of
/// X^(2^n) of different lengths, built from a nonzero nilpotent atom.
#[derive(Debug, Clone, Serialize)]
pub struct HfrWitness {
    pub subject: Poly,
    pub long: Vec<Poly>,
    pub short: Vec<Poly>,
}

/// The telescoping construction: for a nonzero nilpotent atom b with
/// b^(2^(n-1)) = 0, X^(2^n) factors as
/// (X^(2^(n-1)) + b^(2^(n-2)))···(X^4 + b^2)(X^2 + b)(X^2 - b),
/// which refines to strictly fewer than 2^n atoms.
pub fn hfr_witness(r: &Arc<FiniteRing>) -> Result<Option<HfrWitness>> {
    let b = r
        .elements()
        .find(|&b| b != 0 && r.is_nilpotent(b) && classify_element(r, b).irreducible);
    let Some(b) = b else {
        return Ok(None);
    };
    let mut n = 1usize;
    loop {
        // need b^(2^(n-1)) = 0 with n minimal
        let e = 1u64 << (n - 1);
        if r.pow(b, e) == 0 {
            break;
        }
        n += 1;
    }
    assert!(n >= 2, "a nonzero atom cannot have b^1 = 0");
    let x = Poly::x(r.clone());
    let subject = x.pow(1 << n);
    let mut telescope: Vec<Poly> = Vec::new();
    for k in (2..n).rev() {
        // X^(2^k) + b^(2^(k-1))
        let c = r.pow(b, 1 << (k - 1));
        let mut f = x.pow(1 << k);
        f = f.add(&Poly::constant(r.clone(), c));
        telescope.push(f);
    }
    telescope.push(x.pow(2).add(&Poly::constant(r.clone(), b)));
    telescope.push(x.pow(2).sub(&Poly::constant(r.clone(), b)));
    // refine each telescope factor into atoms by bounded splitting
    let mut short: Vec<Poly> = Vec::new();
    let mut ctx = factor::SearchCtx::new();
    for f in &telescope {
        atomize(&mut ctx, f, &mut short)?;
    }
    let long: Vec<Poly> = vec![x.clone(); 1 << n];
    // verify both products
    let mut prod = Poly::one(r.clone());
    for g in &short {
        prod = prod.mul(g);
    }
    if prod != subject || short.len() >= (1 << n) {
        return Err(Error::Inconsistency {
            flag: "hfr-witness".into(),
            ring: r.label().to_string(),
            witness: format!("telescope refinement failed for {}", subject.display()),
        });
    }
    Ok(Some(HfrWitness {
        subject,
        long,
        short,
    }))
}

fn atomize(ctx: &mut factor::SearchCtx, f: &Poly, out: &mut Vec<Poly>) -> Result<()> {
    // a small bound keeps the split search cheap; factors declared atomic
    // here are re-verified by the harness at the honest bound
    let bound = f.deg_or0() + 1;
    if factor::is_irreducible_poly(ctx, f, bound)?.0 {
        out.push(f.clone());
        return Ok(());
    }
    let divisors = factor::all_divisors(ctx, f, bound)?;
    for g in divisors.iter() {
        if crate::poly::is_unit_poly(g) || g.is_zero() {
            continue;
        }
        // proper split: nonunit cofactor
        for h in crate::poly::cofactors(g, f, bound) {
            if !crate::poly::is_unit_poly(&h) {
                let g = g.clone();
                atomize(ctx, &g, out)?;
                atomize(ctx, &h, out)?;
                return Ok(());
            }
        }
    }
    Err(Error::Inconsistency {
        flag: "atomize".into(),
        ring: f.ring().label().to_string(),
        witness: f.display(),
    })
}

/// Theorem-backed classification of R[X] for a finite base ring.
pub fn classify_poly_ring(r: &Arc<FiniteRing>) -> Result<PolyRingClassReport> {
    let s = structure_facts(r);
    let field = s.field;
    let pof = s.product_of_fields;
    let reduced_family = field || s.product_of_f2;

    let ufr = PolyFlag::thm(field);
    let factorial = PolyFlag::thm(pof);
    let weak_ufr = PolyFlag::thm(pof);
    let fletcher_ufr = PolyFlag::thm(pof);
    let mu = PolyFlag::thm(pof);
    let reduced = PolyFlag::thm(reduced_family);
    let atomic = PolyFlag::thm(true);

    // BFR: true for local bases (nilpotent maximal ideal); a nontrivial
    // idempotent yields unbounded nonunit factorizations e = e·e·...
    let bfr = if s.local {
        PolyFlag::thm(true)
    } else {
        let e = r
            .elements()
            .find(|&e| e != 0 && e != r.one() && r.is_idempotent(e))
            .expect("decomposable ring has a nontrivial idempotent");
        PolyFlag::with_witness(
            false,
            Provenance::BoundedWitness,
            format!(
                "idempotent {} = {}·{} admits nonunit factorizations of every length",
                r.elem_label(e),
                r.elem_label(e),
                r.elem_label(e)
            ),
        )
    };

    // HFR: fields give UFDs; a nonzero nilpotent atom gives the X^(2^n)
    // witness; decomposable rings have an idempotent atom e = e·e
    let hfr = if field {
        PolyFlag::thm(true)
    } else if s.local {
        match hfr_witness(r)? {
            Some(w) => PolyFlag::with_witness(
                false,
                Provenance::Theorem,
                format!(
                    "{} = {} = {} (lengths {} and {})",
                    w.subject.display(),
                    join_factors(&w.long),
                    join_factors(&w.short),
                    w.long.len(),
                    w.short.len()
                ),
            ),
            None => {
                return Err(Error::Inconsistency {
                    flag: "hfr".into(),
                    ring: r.label().to_string(),
                    witness: "local non-field without a nilpotent atom".into(),
                })
            }
        }
    } else {
        PolyFlag::with_witness(
            false,
            Provenance::Theorem,
            "a nontrivial idempotent atom satisfies e = e·e".into(),
        )
    };

    // FFR: field, or local satisfying the two finiteness conditions
    let (ffr, cond_a, cond_b) = if field {
        (PolyFlag::thm(true), Some(true), Some(true))
    } else if s.local {
        let (a, b) = ffr_conditions(r);
        (PolyFlag::thm(a && b), Some(a), Some(b))
    } else {
        (
            PolyFlag::with_witness(
                false,
                Provenance::Theorem,
                "not a BFR (nontrivial idempotent), and FFR implies BFR".into(),
            ),
            None,
            None,
        )
    };

    Ok(PolyRingClassReport {
        ufr,
        factorial,
        weak_ufr,
        fletcher_ufr,
        mu_reduced_ufr: mu.clone(),
        strongly_mu_reduced_ufr: mu.clone(),
        weak_mu_reduced_ufr: mu.clone(),
        weak_strongly_mu_reduced_ufr: mu,
        reduced_ufr: reduced.clone(),
        strongly_reduced_ufr: reduced.clone(),
        weak_reduced_ufr: reduced.clone(),
        weak_strongly_reduced_ufr: reduced,
        atomic,
        bfr,
        hfr,
        ffr,
        ffr_condition_a: cond_a,
        ffr_condition_b: cond_b,
    })
}

fn join_factors(fs: &[Poly]) -> String {
    fs.iter()
        .map(|f| format!("({})", f.display()))
        .collect::<Vec<_>>()
        .join("")
}

/// The two conditions for R[X] to be a finite factorization ring over a
/// finite local base (R, M) with M^n = 0, M^(n-1) != 0:
/// (a) stratified products: x in M^i\M^(i+1), y in M^j\M^(j+1), i+j < n
///     forces xy in M^(i+j)\M^(i+j+1);
/// (b) aM = M^2 for every a in M\M^2.
pub fn ffr_conditions(r: &Arc<FiniteRing>) -> (bool, bool) {
    assert!(r.is_local());
    let m: Vec<u32> = r.elements().filter(|&a| !r.is_unit(a)).collect();
    // powers of M until zero
    let mut powers: Vec<Vec<u32>> = vec![m.clone()];
    loop {
        let last = powers.last().unwrap();
        if last.len() == 1 {
            break;
        }
        let k = powers.len() + 1;
        powers.push(r.ideal_power(&m, k));
    }
    let n = powers.len(); // M^n = 0 (powers[n-1] = {0}), M^(n-1) != 0
    let stratum = |x: u32| -> Option<usize> {
        if x == 0 {
            return None; // in every power
        }
        let mut s = 0;
        for (i, p) in powers.iter().enumerate() {
            if p.binary_search(&x).is_ok() {
                s = i + 1;
            }
        }
        Some(s)
    };
    let mut cond_a = true;
    'outer: for &x in &m {
        let Some(i) = stratum(x) else { continue };
        if i == 0 {
            continue;
        }
        for &y in &m {
            let Some(j) = stratum(y) else { continue };
            if j == 0 || i + j >= n {
                continue;
            }
            let xy = r.mul(x, y);
            if stratum(xy) != Some(i + j) {
                cond_a = false;
                break 'outer;
            }
        }
    }
    let m2 = r.ideal_power(&m, 2);
    let mut cond_b = true;
    for &a in &m {
        if m2.binary_search(&a).is_ok() {
            continue; // a in M^2
        }
        let mut am: Vec<u32> = m.iter().map(|&x| r.mul(a, x)).collect();
        am.sort_unstable();
        am.dedup();
        if am != m2 {
            cond_b = false;
            break;
        }
    }
    (cond_a, cond_b)
}

/// Search R[X] subjects of degree <= deg_bound for two non-isomorphic atomic
/// factorizations; returns the least witness.
pub fn find_nonisomorphic_factorizations(
    r: &Arc<FiniteRing>,
    deg_bound: usize,
    regular_only: bool,
) -> Result<Option<(Poly, PolyFactorization, PolyFactorization)>> {
    let cap = deg_bound + r.nilpotency_index() + r.primitive_idempotents().len() + 2;
    for f in polys_up_to(r, deg_bound) {
        if f.is_zero() {
            continue;
        }
        let c = classify_poly(&f);
        if c.unit {
            continue;
        }
        if regular_only && c.zero_divisor {
            continue;
        }
        let facts = atomic_factorizations_poly(&f, deg_bound + r.nilpotency_index(), cap, false)?;
        if facts.classes.len() >= 2 {
            return Ok(Some((
                f,
                facts.classes[0].clone(),
                facts.classes[1].clone(),
            )));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build;

    #[test]
    fn classify_z4_is_ufr() {
        let r = build("Z(4)").unwrap();
        let c = classify_ring(&r).unwrap();
        assert!(c.ufr && c.weak_ufr && c.fletcher_ufr && c.spir);
        assert!(c.presimplifiable && c.very_strongly_atomic && c.p_atomic);
        assert!(c.factorial);
        assert!(c.mu_reduced_ufr && c.reduced_ufr && c.weak_reduced_ufr);
    }

    #[test]
    fn classify_z6() {
        let r = build("Z(6)").unwrap();
        let c = classify_ring(&r).unwrap();
        assert!(!c.ufr, "3 = 3·3 gives lengths 1 and 2");
        assert!(c.fletcher_ufr && c.weak_ufr);
        assert!(!c.presimplifiable && !c.very_strongly_atomic);
        assert!(c.m_atomic && c.p_atomic && c.atomic);
        assert!(!c.reduced_ufr, "U(Z3-part) is nontrivial");
    }

    #[test]
    fn classify_square_zero_local() {
        let r = build("Z(2)[s,t]/(s^2,s*t,t^2)").unwrap();
        let c = classify_ring(&r).unwrap();
        assert!(c.ufr && c.weak_ufr && c.local_m2_zero);
        assert!(!c.fletcher_ufr && !c.mu_reduced_ufr);
        assert!(c.weak_mu_reduced_ufr && c.weak_reduced_ufr);
        assert!(!c.reduced_ufr, "0 = s·t = s·s are non-isomorphic");
    }

    #[test]
    fn classify_z2xz2() {
        let r = build("Z(2)xZ(2)").unwrap();
        let c = classify_ring(&r).unwrap();
        assert!(c.product_of_fields && c.reduced_ufr && c.weak_reduced_ufr);
        assert!(c.m_atomic, "0 is m-irreducible in each field factor");
        assert!(!c.very_strongly_atomic);
        assert!(!c.ufr && c.fletcher_ufr);
    }

    #[test]
    fn classify_whole_small_corpus_consistently() {
        for spec in [
            "Z(2)", "Z(3)", "Z(4)", "Z(5)", "Z(6)", "Z(8)", "Z(9)", "Z(10)", "Z(12)",
            "Z(2)xZ(2)", "Z(2)xZ(3)", "Z(2)xZ(4)", "Z(3)xZ(3)",
            "Z(2)[s,t]/(s^2,s*t,t^2)", "Z(4)[t]/(t^2,2*t)", "Z(2)[u]/(u^2+u+1)",
            "Z(4)xZ(4)",
        ] {
            let r = build(spec).unwrap();
            classify_ring(&r).unwrap_or_else(|e| panic!("{spec}: {e}"));
        }
    }

    #[test]
    fn z4xz4_is_very_strongly_atomic() {
        // a product with no field component stays very strongly atomic
        let r = build("Z(4)xZ(4)").unwrap();
        let c = classify_ring(&r).unwrap();
        assert!(c.very_strongly_atomic && !c.presimplifiable);
    }

    #[test]
    fn poly_ring_of_z4() {
        let r = build("Z(4)").unwrap();
        let c = classify_poly_ring(&r).unwrap();
        assert!(c.bfr.value && !c.hfr.value && c.ffr.value && c.atomic.value);
        assert!(!c.ufr.value && !c.fletcher_ufr.value);
        assert_eq!(c.ffr_condition_a, Some(true));
        assert_eq!(c.ffr_condition_b, Some(true));
        let w = c.hfr.witness.unwrap();
        assert!(w.contains("lengths"), "{w}");
    }

    #[test]
    fn poly_ring_of_products() {
        let z2z3 = build("Z(2)xZ(3)").unwrap();
        let c = classify_poly_ring(&z2z3).unwrap();
        assert!(c.factorial.value && !c.ufr.value);
        assert!(!c.reduced_ufr.value, "U(Z3) is nontrivial");
        assert!(!c.bfr.value && !c.hfr.value && !c.ffr.value);

        let z2z2 = build("Z(2)xZ(2)").unwrap();
        let c = classify_poly_ring(&z2z2).unwrap();
        assert!(c.reduced_ufr.value);
    }

    #[test]
    fn poly_ring_ffr_cases() {
        for (spec, want) in [
            ("Z(4)", true),
            ("Z(8)", true),
            ("Z(9)", true),
            ("Z(2)[s,t]/(s^2,s*t,t^2)", true),
            ("Z(2)xZ(2)", false),
        ] {
            let r = build(spec).unwrap();
            let c = classify_poly_ring(&r).unwrap();
            assert_eq!(c.ffr.value, want, "{spec}");
        }
    }

    #[test]
    fn hfr_witness_z4() {
        let r = build("Z(4)").unwrap();
        let w = hfr_witness(&r).unwrap().unwrap();
        assert_eq!(w.long.len(), 4);
        assert_eq!(w.short.len(), 2);
        let mut prod = Poly::one(r.clone());
        for g in &w.short {
            prod = prod.mul(g);
        }
        assert_eq!(prod, w.subject);
    }

    #[test]
    fn nonisomorphic_factorizations() {
        let z4 = build("Z(4)").unwrap();
        let w = find_nonisomorphic_factorizations(&z4, 2, true).unwrap();
        let (f, a, b) = w.expect("Z4 has X^2 = X·X = (X+2)^2");
        assert_eq!(f.display(), "X^2");
        assert_ne!(a.class_ids, b.class_ids);

        let z6 = build("Z(6)").unwrap();
        assert!(find_nonisomorphic_factorizations(&z6, 2, true)
            .unwrap()
            .is_none());

        let z5 = build("Z(5)").unwrap();
        assert!(find_nonisomorphic_factorizations(&z5, 3, false)
            .unwrap()
            .is_none());
    }
}
