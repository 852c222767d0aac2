//! Corpus management and the theorem-check suite.
//!
//! Each check runs against one ring and reports pass, fail (with a witness),
//! or n/a (with the reason) — inapplicable checks are never silently
//! skipped. Reports are deterministic given (corpus, bounds); timing data is
//! isolated in its own section so the rest is byte-stable.

use crate::classify::{self, classify_poly_ring, classify_ring};
use crate::elem::{
    associate_vector, atomic_factorizations_elem, atoms_of, classify_element,
    is_presimplifiable_ring, is_weakly_presimplifiable_ring, products_cover_nonunits,
    reducedness_flags, Flavor, MuFactorization,
};
use crate::error::{Error, Result};
use crate::factor::{
    all_divisors, atomic_factorizations_poly, factor_x, is_indecomposable_via_divisors,
    is_irreducible_poly, probe_weakly_prime_lift, set_of_lengths_xn, SearchCtx,
};
use crate::poly::{
    classify_poly, cofactors, divides_bounded, is_unit_poly, poly_associates, polys_up_to,
    reduce_mod_nil, Poly,
};
use crate::ring::{build_ring, find_isomorphism, product_of_rings, BuildOptions, FiniteRing};
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

/// The default corpus: every ring the checks exercise by default.
pub const DEFAULT_CORPUS: &[&str] = &[
    "Z(2)", "Z(3)", "Z(4)", "Z(5)", "Z(6)", "Z(7)", "Z(8)", "Z(9)", "Z(10)", "Z(11)", "Z(12)",
    "Z(13)", "Z(14)", "Z(15)", "Z(16)", "Z(2)xZ(2)", "Z(2)xZ(3)", "Z(2)xZ(4)", "Z(2)xZ(2)xZ(2)",
    "Z(2)[s,t]/(s^2,s*t,t^2)", "Z(4)[t]/(t^2,2*t)", "Z(2)[u]/(u^2+u+1)", "Z(3)xZ(3)",
];

/// Parse a corpus file: one spec per line, '#' comments, blank lines ignored.
pub fn parse_corpus(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| l.to_string())
        .collect()
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Bounds {
    pub deg_bound: usize,
    pub len_cap: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            deg_bound: 3,
            len_cap: 6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    #[serde(rename = "n/a")]
    Na,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub status: Status,
    pub detail: String,
}

fn pass(detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        status: Status::Pass,
        detail: detail.into(),
    }
}
fn fail(detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        status: Status::Fail,
        detail: detail.into(),
    }
}
fn na(detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        status: Status::Na,
        detail: detail.into(),
    }
}

type CheckFn = fn(&Arc<FiniteRing>, &Bounds) -> Result<CheckOutcome>;

pub struct CheckDef {
    pub id: &'static str,
    pub run: CheckFn,
}

/// The full registry, in report order.
pub fn check_registry() -> Vec<CheckDef> {
    vec![
        CheckDef { id: "ring-axioms", run: check_ring_axioms },
        CheckDef { id: "ring-structure", run: check_ring_structure },
        CheckDef { id: "thm2.1", run: check_thm2_1 },
        CheckDef { id: "thm2.2", run: check_thm2_2 },
        CheckDef { id: "weakly-prime-facts", run: check_weakly_prime_facts },
        CheckDef { id: "thm3.1-oracle", run: check_thm3_1_oracle },
        CheckDef { id: "thm3.2", run: check_thm3_2 },
        CheckDef { id: "thm3.2-assoc-pairs", run: check_thm3_2_pairs },
        CheckDef { id: "prop3.3", run: check_prop3_3 },
        CheckDef { id: "thm3.5", run: check_thm3_5 },
        CheckDef { id: "thm3.6", run: check_thm3_6 },
        CheckDef { id: "thm4.1", run: check_thm4_1 },
        CheckDef { id: "thm4.3-uniqueness", run: check_thm4_3 },
        CheckDef { id: "thm4.5", run: check_thm4_5 },
        CheckDef { id: "cor4.4", run: check_cor4_4 },
        CheckDef { id: "cor4.6", run: check_cor4_6 },
        CheckDef { id: "lemma4.2", run: check_lemma4_2 },
        CheckDef { id: "mod-nil-consistency", run: check_mod_nil_consistency },
        CheckDef { id: "lengths-z4", run: check_lengths_z4 },
        CheckDef { id: "thm5.4", run: check_thm5_4 },
        CheckDef { id: "cor5.5", run: check_cor5_5 },
        CheckDef { id: "thm5.6", run: check_thm5_6 },
        CheckDef { id: "thm5.7", run: check_thm5_7 },
        CheckDef { id: "dual-deciders", run: check_dual_deciders },
        CheckDef { id: "thm6.1", run: check_thm6_1 },
        CheckDef { id: "thm6.2-witness", run: check_thm6_2 },
        CheckDef { id: "thm6.3", run: check_thm6_3 },
        CheckDef { id: "probe-weakly-prime", run: check_probe_weakly_prime },
        CheckDef { id: "probe-separations", run: check_probe_separations },
    ]
}

// -- individual checks -------------------------------------------------------

fn check_ring_axioms(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    if r.size() > 256 {
        return Ok(na("exhaustive axiom check capped at size 256"));
    }
    let n = r.size() as u32;
    for a in 0..n {
        if r.add(a, 0) != a || r.mul(a, r.one()) != a || r.add(a, r.neg(a)) != 0 {
            return Ok(fail(format!("identity/inverse axiom fails at {}", r.elem_label(a))));
        }
        for b in 0..n {
            if r.add(a, b) != r.add(b, a) || r.mul(a, b) != r.mul(b, a) {
                return Ok(fail(format!(
                    "commutativity fails at ({}, {})",
                    r.elem_label(a),
                    r.elem_label(b)
                )));
            }
            for c in 0..n {
                if r.add(r.add(a, b), c) != r.add(a, r.add(b, c))
                    || r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))
                    || r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))
                {
                    return Ok(fail(format!(
                        "associativity/distributivity fails at ({}, {}, {})",
                        r.elem_label(a),
                        r.elem_label(b),
                        r.elem_label(c)
                    )));
                }
            }
        }
    }
    Ok(pass(format!("all axioms on {} elements", r.size())))
}

fn check_ring_structure(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    if r.jacobson_radical() != r.nilradical() {
        return Ok(fail("Jacobson radical differs from the nilradical"));
    }
    for a in r.elements() {
        if r.is_unit(a) == r.is_zero_divisor(a) {
            return Ok(fail(format!(
                "{} is neither or both of unit/zero divisor",
                r.elem_label(a)
            )));
        }
    }
    let comps = r.local_components();
    let prod_size: usize = comps.iter().map(|(c, _)| c.size()).product();
    if prod_size != r.size() {
        return Ok(fail("component sizes do not multiply to the ring size"));
    }
    // nonzero very strongly irreducible elements have annihilator inside J(R)
    for a in r.elements() {
        if a != 0 && classify_element(r, a).very_strongly_irreducible {
            for c in r.annihilator(a) {
                if !r.in_jacobson(c) {
                    return Ok(fail(format!(
                        "ann({}) contains {} outside J(R)",
                        r.elem_label(a),
                        r.elem_label(c)
                    )));
                }
            }
        }
    }
    let mut detail = "radicals, unit/zero-divisor dichotomy, component sizes".to_string();
    if r.size() <= 64 {
        let comps_only: Vec<Arc<FiniteRing>> = comps.into_iter().map(|(c, _)| c).collect();
        let p = product_of_rings(comps_only, format!("rebuild {}", r.label()))?;
        if find_isomorphism(r, &p).is_none() {
            return Ok(fail("not isomorphic to the product of its local components"));
        }
        detail.push_str(", rebuild isomorphism");
    }
    Ok(pass(detail))
}

fn check_thm2_1(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let classes: Vec<_> = r.elements().map(|a| classify_element(r, a)).collect();
    // (1) nonzero presimplifiable elements: the four irreducibility notions agree
    for a in r.elements() {
        let c = &classes[a as usize];
        if a != 0 && c.presimplifiable {
            let all = [
                c.irreducible,
                c.strongly_irreducible,
                c.very_strongly_irreducible,
                c.m_irreducible,
            ];
            if all.iter().any(|&x| x != all[0]) {
                return Ok(fail(format!("(1) fails at {}", r.elem_label(a))));
            }
        }
    }
    // (2) irreducible iff (regular and m-irreducible) or (zero divisor and
    // Ra maximal among principal ideals inside Z(R))
    let zd_pids: Vec<(u32, Vec<u32>)> = r
        .elements()
        .filter(|&b| r.is_zero_divisor(b))
        .map(|b| (b, r.principal_ideal(b)))
        .collect();
    for a in r.elements() {
        let c = &classes[a as usize];
        if c.unit {
            continue;
        }
        let rhs = if !c.zero_divisor {
            c.m_irreducible
        } else {
            let ra = r.principal_ideal(a);
            zd_pids
                .iter()
                .all(|(_, rb)| !is_subset(&ra, rb) || ra == *rb)
        };
        if c.irreducible != rhs {
            return Ok(fail(format!("(2) fails at {}", r.elem_label(a))));
        }
    }
    // (3) a1 irreducible with Ra1 strictly inside Ra2 strictly inside R
    let pids: Vec<Vec<u32>> = r.elements().map(|a| r.principal_ideal(a)).collect();
    for a1 in r.elements() {
        if !classes[a1 as usize].irreducible {
            continue;
        }
        for a2 in r.elements() {
            if r.is_unit(a2) {
                continue;
            }
            let (p1, p2) = (&pids[a1 as usize], &pids[a2 as usize]);
            if is_subset(p1, p2) && p1 != p2 {
                if !classes[a1 as usize].zero_divisor || r.is_zero_divisor(a2) {
                    return Ok(fail(format!(
                        "(3) fails at ({}, {})",
                        r.elem_label(a1),
                        r.elem_label(a2)
                    )));
                }
            }
        }
    }
    // (4) nonzero a very strongly irreducible iff every a = bc has a unit factor
    for a in r.elements() {
        if a == 0 || r.is_unit(a) {
            continue;
        }
        let mut unit_factor_always = true;
        'scan: for x in r.elements() {
            for y in x..r.size() as u32 {
                if r.mul(x, y) == a && !r.is_unit(x) && !r.is_unit(y) {
                    unit_factor_always = false;
                    break 'scan;
                }
            }
        }
        if classes[a as usize].very_strongly_irreducible != unit_factor_always {
            return Ok(fail(format!("(4) fails at {}", r.elem_label(a))));
        }
    }
    // (6) nonzero a m-irreducible iff very strongly irreducible or Ra is an
    // idempotent maximal ideal
    for a in r.elements() {
        if a == 0 || r.is_unit(a) {
            continue;
        }
        let ra = &pids[a as usize];
        let idempotent_maximal = r.maximal_ideals().iter().any(|m| m == ra) && {
            let mut sq: Vec<u32> = Vec::new();
            for &x in ra {
                for &y in ra {
                    sq.push(r.mul(x, y));
                }
            }
            sq.sort_unstable();
            sq.dedup();
            r.additive_closure(&sq) == *ra
        };
        let rhs = classes[a as usize].very_strongly_irreducible || idempotent_maximal;
        if classes[a as usize].m_irreducible != rhs {
            return Ok(fail(format!("(6) fails at {}", r.elem_label(a))));
        }
    }
    // (7) product characterization
    if !r.is_local() {
        let comps = r.local_components();
        for a in r.elements() {
            let coords: Vec<u32> = (0..comps.len()).map(|j| r.component_index(j, a)).collect();
            let nonunit: Vec<usize> = coords
                .iter()
                .enumerate()
                .filter(|(j, &x)| !comps[*j].0.is_unit(x))
                .map(|(j, _)| j)
                .collect();
            let c = &classes[a as usize];
            let comp_class = |j: usize| classify_element(&comps[j].0, coords[j]);
            let expect_irr = nonunit.len() == 1 && comp_class(nonunit[0]).irreducible;
            let expect_s = nonunit.len() == 1 && comp_class(nonunit[0]).strongly_irreducible;
            let expect_m = nonunit.len() == 1 && comp_class(nonunit[0]).m_irreducible;
            let expect_p = nonunit.len() == 1 && comp_class(nonunit[0]).prime;
            let expect_vs = nonunit.len() == 1
                && comp_class(nonunit[0]).very_strongly_irreducible
                && coords[nonunit[0]] != 0;
            if c.irreducible != expect_irr
                || c.strongly_irreducible != expect_s
                || c.m_irreducible != expect_m
                || c.prime != expect_p
                || c.very_strongly_irreducible != expect_vs
            {
                return Ok(fail(format!("(7) fails at {}", r.elem_label(a))));
            }
        }
    }
    Ok(pass("items 1-4, 6, 7 hold on every element"))
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn check_thm2_2(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let atomic = products_cover_nonunits(r, &atoms_of(r, Flavor::Irreducible));
    let strongly = products_cover_nonunits(r, &atoms_of(r, Flavor::StronglyIrreducible));
    let m_atomic = products_cover_nonunits(r, &atoms_of(r, Flavor::MIrreducible));
    let vs = products_cover_nonunits(r, &atoms_of(r, Flavor::VeryStronglyIrreducible));
    let p_atomic = products_cover_nonunits(r, &atoms_of(r, Flavor::Prime));
    // (1) the implication chain
    if (vs && !m_atomic) || (m_atomic && !strongly) || (strongly && !atomic) || (p_atomic && !strongly)
    {
        return Ok(fail("atomicity implication chain broken"));
    }
    // (2) indecomposable: very strongly atomic iff m-atomic
    if r.is_indecomposable() && vs != m_atomic {
        return Ok(fail("(2): very strongly atomic != m-atomic on an indecomposable ring"));
    }
    // (3) p-atomic iff finite product of fields and SPIRs
    let comps = r.local_components();
    let fs = comps.iter().all(|(c, _)| c.is_field() || c.is_spir());
    if p_atomic != fs {
        return Ok(fail(format!("(3): p-atomic = {p_atomic}, fields-and-SPIRs = {fs}")));
    }
    // (4) zero a product of n irreducibles bounds the component count by n
    if !r.is_domain() {
        let cap = r.nilpotency_index() + comps.len() + 3;
        let f0 = atomic_factorizations_elem(r, 0, cap)?;
        if let Some(min_len) = f0.classes.iter().map(|c| c.len()).min() {
            if comps.len() > min_len {
                return Ok(fail(format!(
                    "(4): 0 factors into {min_len} atoms but there are {} components",
                    comps.len()
                )));
            }
        }
    }
    // (6) product caveats
    if comps.len() > 1 {
        let comp_vs: Vec<bool> = comps
            .iter()
            .map(|(c, _)| products_cover_nonunits(c, &atoms_of(c, Flavor::VeryStronglyIrreducible)))
            .collect();
        let any_domain = comps.iter().any(|(c, _)| c.is_domain());
        let expect_vs = comp_vs.iter().all(|&x| x) && !any_domain;
        if vs != expect_vs {
            return Ok(fail(format!("(6c): product very-strong atomicity = {vs}, expected {expect_vs}")));
        }
        let comp_m: Vec<bool> = comps
            .iter()
            .map(|(c, _)| products_cover_nonunits(c, &atoms_of(c, Flavor::MIrreducible)))
            .collect();
        // finite: every integral-domain component is a field, so m-atomicity
        // is simply componentwise
        let expect_m = comp_m.iter().all(|&x| x);
        if m_atomic != expect_m {
            return Ok(fail("(6b): product m-atomicity mismatch"));
        }
    }
    Ok(pass(format!(
        "atomic={atomic} strongly={strongly} m={m_atomic} vs={vs} p={p_atomic}"
    )))
}

fn check_weakly_prime_facts(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    for a in r.elements() {
        let c = classify_element(r, a);
        if !c.weakly_prime {
            continue;
        }
        if !c.prime && r.mul(a, a) != 0 {
            return Ok(fail(format!(
                "weakly prime {} is neither prime nor square-zero",
                r.elem_label(a)
            )));
        }
        if c.regular && !c.prime {
            return Ok(fail(format!("regular weakly prime {} is not prime", r.elem_label(a))));
        }
        if !r.is_indecomposable() && a != 0 && !c.prime {
            return Ok(fail(format!(
                "nonzero weakly prime {} in a decomposable ring is not prime",
                r.elem_label(a)
            )));
        }
    }
    Ok(pass("weakly prime elements are prime or square-zero"))
}

fn check_thm3_1_oracle(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let deg = 2usize;
    let oracle_bound = 2 * (deg + 1);
    let one = Poly::one(r.clone());
    let mut checked = 0usize;
    for f in polys_up_to(r, deg) {
        let c = classify_poly(&f);
        let unit_brute = !f.is_zero() && divides_bounded(&f, &one, oracle_bound);
        if c.unit != unit_brute {
            return Ok(fail(format!("unit flag wrong for {}", f.display())));
        }
        let zero = Poly::zero(r.clone());
        let zd_brute = if f.is_zero() {
            true
        } else {
            cofactors(&f, &zero, oracle_bound).iter().any(|h| !h.is_zero())
        };
        if c.zero_divisor != zd_brute {
            return Ok(fail(format!("zero-divisor flag wrong for {}", f.display())));
        }
        if c.idempotent != (f.mul(&f) == f) {
            return Ok(fail(format!("idempotent flag wrong for {}", f.display())));
        }
        let mut pw = f.clone();
        for _ in 0..5 {
            pw = pw.mul(&pw);
        }
        if c.nilpotent != pw.is_zero() {
            return Ok(fail(format!("nilpotent flag wrong for {}", f.display())));
        }
        checked += 1;
    }
    Ok(pass(format!(
        "{checked} polynomials of degree <= {deg} against brute-force searches"
    )))
}

fn check_thm3_2(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    // (1),(2): ring-level associate/strong-associate equal the bounded
    // polynomial searches on constants
    for a in r.elements() {
        for b in r.elements() {
            let ring_v = associate_vector(r, a, b);
            let pa = Poly::constant(r.clone(), a);
            let pb = Poly::constant(r.clone(), b);
            let poly_assoc = (pb.is_zero() && pa.is_zero())
                || (!pb.is_zero()
                    && !pa.is_zero()
                    && divides_bounded(&pb, &pa, 2)
                    && divides_bounded(&pa, &pb, 2))
                || (pb.is_zero() != pa.is_zero()) && false;
            if ring_v.assoc != poly_assoc {
                return Ok(fail(format!(
                    "(1) fails at ({}, {})",
                    r.elem_label(a),
                    r.elem_label(b)
                )));
            }
            let poly_strong = if pb.is_zero() {
                pa.is_zero()
            } else {
                cofactors(&pb, &pa, 2).iter().any(is_unit_poly)
            };
            if ring_v.strong != poly_strong {
                return Ok(fail(format!(
                    "(2) fails at ({}, {})",
                    r.elem_label(a),
                    r.elem_label(b)
                )));
            }
            // (3): the exact criterion against a direct bounded witness scan
            let crit = crate::poly::constant_very_strong_assoc_in_polyring(r, a, b);
            let direct = ring_v.assoc
                && ((a == 0 && b == 0)
                    || (a != 0
                        && (pb.is_zero()
                            || cofactors(&pb, &pa, 2).iter().all(is_unit_poly))));
            if crit != direct {
                return Ok(fail(format!(
                    "(3) fails at ({}, {})",
                    r.elem_label(a),
                    r.elem_label(b)
                )));
            }
            // (5): a ~ b in R iff a, b regular-associate in R[X]
            let poly_rreg = if pb.is_zero() || pa.is_zero() {
                pa.is_zero() && pb.is_zero()
            } else {
                cofactors(&pb, &pa, 2).iter().any(|h| !classify_poly(h).zero_divisor)
                    && cofactors(&pa, &pb, 2).iter().any(|h| !classify_poly(h).zero_divisor)
            };
            if ring_v.assoc != poly_rreg {
                return Ok(fail(format!(
                    "(5) fails at ({}, {})",
                    r.elem_label(a),
                    r.elem_label(b)
                )));
            }
        }
    }
    // (6): R[X] presimplifiable (via the exact zero-divisor form) iff R is
    // presimplifiable and 0 is primary (every zero divisor nilpotent)
    let poly_pres = polys_up_to(r, 2).iter().all(|g| {
        is_unit_poly(g) || !classify_poly(&Poly::one(r.clone()).sub(g)).zero_divisor || {
            // f(1-g) = 0 forces f = 0 only if 1-g is regular; 1-g = 0 means g = 1
            g == &Poly::one(r.clone())
        }
    });
    let zero_primary = r
        .elements()
        .all(|a| !r.is_zero_divisor(a) || r.is_nilpotent(a));
    let expect = is_presimplifiable_ring(r) && zero_primary;
    if poly_pres != expect {
        return Ok(fail(format!(
            "(6): bounded polynomial presimplifiability = {poly_pres}, expected {expect}"
        )));
    }
    // (7): same with weakly presimplifiable
    let poly_wpres = polys_up_to(r, 2).iter().all(|g| {
        let h = Poly::one(r.clone()).sub(g);
        let c = classify_poly(g);
        !c.zero_divisor && !c.unit || h.is_zero() || !classify_poly(&h).zero_divisor || {
            // witness requires f != 0 with f(1-g) = 0 and g a zero divisor
            !classify_poly(g).zero_divisor
        }
    });
    let expect_w = is_weakly_presimplifiable_ring(r);
    if poly_wpres != expect_w {
        return Ok(fail("(7): weak presimplifiability mismatch"));
    }
    // (8): constants are irreducible in R iff irreducible in R[X] (bounded)
    let mut ctx = SearchCtx::new();
    for a in r.elements() {
        if r.is_unit(a) {
            continue;
        }
        let pa = Poly::constant(r.clone(), a);
        let divs = all_divisors(&mut ctx, &pa, 2)?;
        let mut poly_irr = true;
        'outer: for g in divs.iter() {
            if g.is_zero() && !pa.is_zero() {
                continue;
            }
            let hs = if g.is_zero() {
                vec![Poly::zero(r.clone())]
            } else {
                cofactors(g, &pa, 2)
            };
            for h in hs {
                let ga = poly_associates(&pa, g, 2)?.vector.assoc;
                let ha = poly_associates(&pa, &h, 2)?.vector.assoc;
                if !ga && !ha {
                    poly_irr = false;
                    break 'outer;
                }
            }
        }
        let ring_irr = classify_element(r, a).irreducible;
        if poly_irr != ring_irr {
            return Ok(fail(format!("(8) fails at {}", r.elem_label(a))));
        }
    }
    Ok(pass("items 1, 2, 3, 5, 6, 7, 8 on all constants"))
}

fn check_thm3_2_pairs(r: &Arc<FiniteRing>, b: &Bounds) -> Result<CheckOutcome> {
    if r.size() > 9 {
        return Ok(na("degree-1 pair scan capped at size 9"));
    }
    // (4): f ~ g iff f and g are regular associates, by independent searches
    for f in polys_up_to(r, 1) {
        for g in polys_up_to(r, 1) {
            let v = poly_associates(&f, &g, b.deg_bound)?.vector;
            if v.assoc != v.strong_regular {
                return Ok(fail(format!(
                    "(4) fails at ({}, {})",
                    f.display(),
                    g.display()
                )));
            }
        }
    }
    Ok(pass("associate = regular-associate on all degree-1 pairs"))
}

fn check_prop3_3(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    if r.is_reduced() {
        // no constant is associate to a nonconstant polynomial at bound 3
        for a in r.elements() {
            if a == 0 {
                continue;
            }
            let pa = Poly::constant(r.clone(), a);
            for f in polys_up_to(r, 3) {
                if f.is_constant() {
                    continue;
                }
                // a | f must hold coefficientwise; quick reject first
                let pid = r.principal_ideal(a);
                if !f.coeffs().iter().all(|c| pid.binary_search(c).is_ok()) {
                    continue;
                }
                if divides_bounded(&f, &pa, 3) {
                    return Ok(fail(format!(
                        "reduced ring has {} ~ {}",
                        r.elem_label(a),
                        f.display()
                    )));
                }
            }
        }
        Ok(pass("no constant-to-nonconstant associates at bound 3"))
    } else {
        let a = r
            .elements()
            .find(|&a| a != 0 && r.is_nilpotent(a))
            .expect("non-reduced ring has a nonzero nilpotent");
        let one = Poly::one(r.clone());
        let w = Poly::new(r.clone(), vec![r.one(), a]);
        let v = poly_associates(&one, &w, 3)?.vector;
        if !v.assoc {
            return Ok(fail(format!("witness 1 ~ {} not confirmed", w.display())));
        }
        Ok(pass(format!("witness 1 ~ {}", w.display())))
    }
}

fn check_thm3_5(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    if r.size() > 9 {
        return Ok(na("degree-2 subject scan capped at size 9"));
    }
    let bound = 2 + r.nilpotency_index();
    let mut ctx = SearchCtx::new();
    for f in polys_up_to(r, 2) {
        if f.is_zero() || is_unit_poly(&f) {
            continue;
        }
        let divs = all_divisors(&mut ctx, &f, bound)?;
        // m-irreducible at bound: every nonunit divisor generates the same
        // principal ideal
        let mut m_irr = true;
        for g in divs.iter() {
            if is_unit_poly(g) || g.is_zero() {
                continue;
            }
            if !divides_bounded(&f, g, bound) {
                m_irr = false;
                break;
            }
        }
        // very strongly irreducible at bound: every divisor pair has a unit
        let mut vs_irr = true;
        'vs: for g in divs.iter() {
            if g.is_zero() {
                continue;
            }
            if is_unit_poly(g) {
                continue;
            }
            for h in cofactors(g, &f, bound) {
                if !is_unit_poly(&h) {
                    vs_irr = false;
                    break 'vs;
                }
            }
        }
        if m_irr != vs_irr {
            return Ok(fail(format!(
                "nonzero {}: m-irreducible={m_irr} but very-strongly={vs_irr}",
                f.display()
            )));
        }
    }
    Ok(pass("m-irreducible = very strongly irreducible on nonzero subjects of degree <= 2"))
}

fn check_thm3_6(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    // (3) exact: 0 indecomposable iff 0 irreducible iff R a domain
    let zero = Poly::zero(r.clone());
    let mut ctx = SearchCtx::new();
    let (zero_ind, _) = is_indecomposable_via_divisors(&mut ctx, &zero, 2)?;
    let zero_irr = classify_element(r, 0).irreducible;
    if zero_ind != zero_irr || zero_irr != r.is_domain() {
        return Ok(fail("(3): 0-indecomposable / 0-irreducible / domain disagree"));
    }
    if r.size() > 9 {
        return Ok(na("degree-2 subject scans capped at size 9 (item 3 checked)"));
    }
    let bound = 2 + r.nilpotency_index();
    for f in polys_up_to(r, 2) {
        if f.is_zero() || is_unit_poly(&f) {
            continue;
        }
        let divs = all_divisors(&mut ctx, &f, bound)?;
        let mut vs_irr = true;
        'vs: for g in divs.iter() {
            if g.is_zero() || is_unit_poly(g) {
                continue;
            }
            for h in cofactors(g, &f, bound) {
                if !is_unit_poly(&h) {
                    vs_irr = false;
                    break 'vs;
                }
            }
        }
        let (ind, _) = is_indecomposable_via_divisors(&mut ctx, &f, bound)?;
        // (1) very strongly irreducible implies indecomposable
        if vs_irr && !ind {
            return Ok(fail(format!("(1) fails at {}", f.display())));
        }
        // (2) over reduced rings: indecomposable iff no positive-degree split
        if r.is_reduced() {
            let mut pos_split = false;
            'ps: for g in divs.iter() {
                if g.deg_or0() < 1 || g.is_zero() {
                    continue;
                }
                for h in cofactors(g, &f, bound) {
                    if h.deg_or0() >= 1 && !h.is_zero() {
                        pos_split = true;
                        break 'ps;
                    }
                }
            }
            if ind != !pos_split {
                return Ok(fail(format!("(2) fails at {}", f.display())));
            }
        }
    }
    Ok(pass("indecomposability facts on subjects of degree <= 2"))
}

fn check_thm4_1(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    // X prime iff R is a domain: the bounded primality of X reduces exactly
    // to "ab = 0 implies a = 0 or b = 0" on constant terms
    let no_zd = r
        .elements()
        .all(|a| a == 0 || !r.is_zero_divisor(a));
    if no_zd != r.is_domain() {
        return Ok(fail("X-primality reduction disagrees with domain-ness"));
    }
    let bound = 1 + r.nilpotency_index();
    let x = Poly::x(r.clone());
    let mut ctx = SearchCtx::new();
    let (x_irr, tier) = is_irreducible_poly(&mut ctx, &x, bound)?;
    if x_irr != r.is_indecomposable() {
        return Ok(fail(format!(
            "X irreducible = {x_irr} but ring indecomposable = {}",
            r.is_indecomposable()
        )));
    }
    let (x_ind, _) = is_indecomposable_via_divisors(&mut ctx, &x, bound)?;
    if x_ind != r.is_indecomposable() {
        return Ok(fail(format!(
            "X indecomposable = {x_ind} but ring indecomposable = {}",
            r.is_indecomposable()
        )));
    }
    Ok(pass(format!(
        "X prime iff domain; X irreducible iff indecomposable (tier {tier:?})"
    )))
}

fn check_thm4_3(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let bound = 1 + r.nilpotency_index();
    let fx = factor_x(r, bound)?;
    let comps = r.local_components();
    if fx.factors.len() != comps.len() {
        return Ok(fail("canonical factorization length differs from component count"));
    }
    let mut prod = Poly::one(r.clone());
    for g in &fx.factors {
        prod = prod.mul(g);
    }
    if prod != Poly::x(r.clone()) {
        return Ok(fail("canonical factors do not multiply to X"));
    }
    let mut ctx = SearchCtx::new();
    for g in &fx.factors {
        let (irr, _) = is_irreducible_poly(&mut ctx, g, bound)?;
        if !irr {
            return Ok(fail(format!("canonical factor {} is not irreducible", g.display())));
        }
    }
    if fx.uniqueness_count != 1 {
        return Ok(fail(format!(
            "bounded search found {} isomorphism classes for X",
            fx.uniqueness_count
        )));
    }
    // powers of X stay products of atoms (small cases)
    if r.size() <= 9 {
        for n in 2..=3usize {
            let l = set_of_lengths_xn(r, n, n + r.nilpotency_index())?;
            if l.lengths.is_empty() {
                return Ok(fail(format!("X^{n} admits no atomic factorization")));
            }
        }
    }
    Ok(pass(format!(
        "unique factorization into {} atoms, one isomorphism class",
        fx.factors.len()
    )))
}

fn check_thm4_5(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let x2 = Poly::x(r.clone()).pow(2);
    if r.is_reduced() || r.size() <= 9 {
        let cap = 2 * r.component_count() + 2;
        let facts = atomic_factorizations_poly(&x2, 2 + r.nilpotency_index(), cap, false)?;
        let unique = facts.classes.len() == 1;
        if unique != r.is_reduced() {
            return Ok(fail(format!(
                "X^2 has {} classes but the ring is {}reduced",
                facts.classes.len(),
                if r.is_reduced() { "" } else { "not " }
            )));
        }
        Ok(pass(format!("X^2 has {} factorization class(es)", facts.classes.len())))
    } else {
        // large non-reduced: exhibit the (X+a)(X-a) witness directly
        let a = r
            .elements()
            .find(|&a| a != 0 && r.mul(a, a) == 0)
            .expect("non-reduced ring has a square-zero element");
        let f1 = Poly::new(r.clone(), vec![a, r.one()]);
        let f2 = Poly::new(r.clone(), vec![r.neg(a), r.one()]);
        if f1.mul(&f2) != x2 {
            return Ok(fail("witness product is not X^2"));
        }
        let bound = 2 + r.nilpotency_index();
        let x = Poly::x(r.clone());
        if divides_bounded(&x, &f1, bound) && divides_bounded(&f1, &x, bound) {
            return Ok(fail("witness factor is associate to X"));
        }
        Ok(pass(format!(
            "second factorization ({})({}) of X^2 exhibited",
            f1.display(),
            f2.display()
        )))
    }
}

fn check_cor4_4(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let bound = 1 + r.nilpotency_index();
    let fx = factor_x(r, bound)?;
    let all_fields = r
        .local_components()
        .iter()
        .all(|(c, _)| c.is_field());
    if fx.primes != all_fields {
        return Ok(fail("primes flag disagrees with the component structure"));
    }
    if r.size() <= 9 {
        // bounded primality corroboration of the canonical factors
        for p in &fx.factors {
            for f in polys_up_to(r, 1) {
                for g in polys_up_to(r, 1) {
                    let fg = f.mul(&g);
                    if divides_bounded(p, &fg, 3)
                        && !divides_bounded(p, &f, 3)
                        && !divides_bounded(p, &g, 3)
                    {
                        if fx.primes {
                            return Ok(fail(format!(
                                "factor {} not prime: divides ({})({})",
                                p.display(),
                                f.display(),
                                g.display()
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(pass(format!("X is a product of primes iff all components are fields ({all_fields})")))
}

fn check_cor4_6(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    if !r.is_reduced() {
        return Ok(na("applies to reduced rings"));
    }
    let mut ctx = SearchCtx::new();
    if r.is_indecomposable() {
        for n in 1..=3usize {
            let xn = Poly::x(r.clone()).pow(n);
            let all = all_divisors(&mut ctx, &xn, n + 1)?;
            for g in all.iter() {
                let nonzero = g.coeffs().iter().filter(|&&c| c != 0).count();
                if nonzero != 1 {
                    return Ok(fail(format!(
                        "divisor {} of X^{n} is not of the form uX^m",
                        g.display()
                    )));
                }
            }
        }
        Ok(pass("divisors of X^n are exactly the uX^m"))
    } else {
        // reduced but decomposable: a non-monomial divisor of X must exist
        let all = all_divisors(&mut ctx, &Poly::x(r.clone()), 2)?;
        let witness = all.iter().find(|g| {
            !is_unit_poly(g) && g.coeffs().iter().filter(|&&c| c != 0).count() >= 2
        });
        match witness {
            Some(g) => Ok(pass(format!("saturation counterexample: {} divides X", g.display()))),
            None => Ok(fail("no non-monomial divisor of X found in a decomposable reduced ring")),
        }
    }
}

fn check_lemma4_2(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    if r.size() > 9 {
        return Ok(na("divisor scan capped at size 9"));
    }
    let bound = 2 + r.nilpotency_index();
    let mut ctx = SearchCtx::new();
    let x2 = Poly::x(r.clone()).pow(2);
    let divs = all_divisors(&mut ctx, &x2, bound)?;
    for g in divs.iter() {
        if is_unit_poly(g) || g.is_zero() {
            continue;
        }
        let (irr, _) = is_irreducible_poly(&mut ctx, g, bound)?;
        let (ind, _) = is_indecomposable_via_divisors(&mut ctx, g, bound)?;
        if irr != ind {
            return Ok(fail(format!(
                "factor {} of X^2: irreducible={irr}, indecomposable={ind}",
                g.display()
            )));
        }
    }
    Ok(pass("irreducible = indecomposable on all nonunit factors of X^2"))
}

fn check_mod_nil_consistency(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    if r.size() > 9 {
        return Ok(na("factorization scan capped at size 9"));
    }
    let x2 = Poly::x(r.clone()).pow(2);
    let facts = atomic_factorizations_poly(&x2, 2 + r.nilpotency_index(), 2 * r.component_count() + 2, false)?;
    for c in &facts.classes {
        let mut prod_bar = Poly::one(reduce_mod_nil(&x2).ring().clone());
        for g in &c.factors {
            prod_bar = prod_bar.mul(&reduce_mod_nil(g));
        }
        if prod_bar != reduce_mod_nil(&x2) {
            return Ok(fail("a factorization does not project to one over R/nil"));
        }
    }
    Ok(pass(format!(
        "{} factorization(s) of X^2 project to factorizations over R/nil",
        facts.classes.len()
    )))
}

fn check_lengths_z4(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    if r.label() != "Z(4)" {
        return Ok(na("the explicit length table is specific to Z(4)"));
    }
    let expected: [(usize, &[usize]); 8] = [
        (1, &[1]),
        (2, &[2]),
        (3, &[3]),
        (4, &[2, 4]),
        (5, &[3, 5]),
        (6, &[2, 4, 6]),
        (7, &[3, 5, 7]),
        (8, &[2, 3, 4, 6, 8]),
    ];
    for (n, want) in expected {
        let l = set_of_lengths_xn(r, n, n + 2)?;
        let want: BTreeSet<usize> = want.iter().copied().collect();
        if l.lengths != want {
            return Ok(fail(format!("L(X^{n}) = {:?}, expected {:?}", l.lengths, want)));
        }
        // monotonicity sanity: min is 2 (even) / 3 (odd) from n >= 2, max is n
        if n >= 2 {
            let min = *l.lengths.iter().next().unwrap();
            let max = *l.lengths.iter().last().unwrap();
            let want_min = if n % 2 == 0 { 2 } else { 3 };
            if min != want_min || max != n {
                return Ok(fail(format!("L(X^{n}) range [{min}, {max}] breaks the pattern")));
            }
        }
    }
    Ok(pass("L(X^n) for n = 1..8 matches the table"))
}

fn check_thm5_4(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let pof = r.local_components().iter().all(|(c, _)| c.is_field());
    let deg = if r.size() <= 6 {
        3
    } else if r.size() <= 9 {
        2
    } else {
        return Ok(na("regular-subject witness search capped at size 9"));
    };
    let witness = classify::find_nonisomorphic_factorizations(r, deg, true)?;
    if witness.is_none() != pof {
        return Ok(fail(format!(
            "regular witness {} but product-of-fields = {pof}",
            if witness.is_some() { "found" } else { "absent" }
        )));
    }
    let pc = classify_poly_ring(r)?;
    if pc.fletcher_ufr.value != pof || pc.weak_ufr.value != pof || pc.factorial.value != pof {
        return Ok(fail("poly-ring flags disagree with the product-of-fields prediction"));
    }
    Ok(pass(format!(
        "witness search at degree {deg} agrees with product-of-fields = {pof}"
    )))
}

fn check_cor5_5(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let pc = classify_poly_ring(r)?;
    if pc.ufr.value != r.is_field() {
        return Ok(fail("R[X] UFR flag should hold exactly for field bases"));
    }
    if r.size() <= 6 {
        let witness = classify::find_nonisomorphic_factorizations(r, 2, false)?;
        if witness.is_none() != r.is_field() {
            return Ok(fail(format!(
                "nonzero-nonunit witness {} but field = {}",
                if witness.is_some() { "found" } else { "absent" },
                r.is_field()
            )));
        }
    }
    Ok(pass(format!("R[X] is a UFR iff the base is a field ({})", r.is_field())))
}

fn check_thm5_6(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let pof = r.local_components().iter().all(|(c, _)| c.is_field());
    let pc = classify_poly_ring(r)?;
    for (name, f) in [
        ("mu_reduced", &pc.mu_reduced_ufr),
        ("strongly_mu_reduced", &pc.strongly_mu_reduced_ufr),
        ("weak_mu_reduced", &pc.weak_mu_reduced_ufr),
        ("weak_strongly_mu_reduced", &pc.weak_strongly_mu_reduced_ufr),
    ] {
        if f.value != pof {
            return Ok(fail(format!("{name} flag should equal product-of-fields = {pof}")));
        }
    }
    Ok(pass(format!("all μ-reduced flags equal product-of-fields = {pof}")))
}

fn check_thm5_7(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let comps = r.local_components();
    let trivial_units = r.is_field() || comps.iter().all(|(c, _)| c.size() == 2);
    let pc = classify_poly_ring(r)?;
    for (name, f) in [
        ("reduced", &pc.reduced_ufr),
        ("strongly_reduced", &pc.strongly_reduced_ufr),
        ("weak_reduced", &pc.weak_reduced_ufr),
        ("weak_strongly_reduced", &pc.weak_strongly_reduced_ufr),
    ] {
        if f.value != trivial_units {
            return Ok(fail(format!("{name} flag should be {trivial_units}")));
        }
    }
    // for product-of-fields bases with a nontrivial unit: exhibit the two
    // strongly reduced factorizations (0,1,..) = (0,u,..)(0,u^{-1},..)
    let pof = comps.iter().all(|(c, _)| c.is_field());
    if pof && comps.len() > 1 && !trivial_units {
        let (j, (cj, _)) = comps
            .iter()
            .enumerate()
            .find(|(_, (c, _))| c.size() > 2)
            .expect("some component has a nontrivial unit");
        let u = cj
            .elements()
            .find(|&u| cj.is_unit(u) && u != cj.one())
            .unwrap();
        let uinv = cj.inverse(u).unwrap();
        let zero_slot = (0..comps.len()).find(|&l| l != j).unwrap();
        // element with 0 in zero_slot, the given value in slot j, 1 elsewhere
        let make = |val_j: u32| {
            let mut acc = r.component_embed(j, val_j);
            for (l, (_, el)) in comps.iter().enumerate() {
                if l != j && l != zero_slot {
                    acc = r.add(acc, *el);
                }
            }
            acc
        };
        let e = make(cj.one());
        let a1 = make(u);
        let a2 = make(uinv);
        if r.mul(a1, a2) != e {
            return Ok(fail("unit witness identity fails"));
        }
        let pair = MuFactorization {
            unit_prefix: r.one(),
            factors: vec![a1, a2],
        };
        let single = MuFactorization {
            unit_prefix: r.one(),
            factors: vec![e],
        };
        if !reducedness_flags(r, &pair).strongly_reduced
            || !reducedness_flags(r, &single).strongly_reduced
        {
            return Ok(fail("witness factorizations are not strongly reduced"));
        }
        return Ok(pass(format!(
            "strongly reduced factorizations of {} with lengths 1 and 2",
            r.elem_label(e)
        )));
    }
    Ok(pass(format!("reduced flags equal trivial-units = {trivial_units}")))
}

fn check_dual_deciders(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    match classify_ring(r) {
        Ok(c) => Ok(pass(format!(
            "all flags agree (ufr={}, weak_ufr={}, fletcher={}, p_atomic={})",
            c.ufr, c.weak_ufr, c.fletcher_ufr, c.p_atomic
        ))),
        Err(Error::Inconsistency { flag, witness, .. }) => {
            Ok(fail(format!("flag {flag}: {witness}")))
        }
        Err(e) => Err(e),
    }
}

fn check_thm6_1(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let pc = classify_poly_ring(r)?;
    if pc.bfr.value != r.is_local() {
        return Ok(fail("BFR flag should hold exactly for local bases"));
    }
    if r.is_local() && r.size() <= 9 {
        // corroborate: lengths of small subjects stay within deg f + nu
        let nu = r.nilpotency_index();
        for f in polys_up_to(r, 2) {
            if f.is_zero() || is_unit_poly(&f) {
                continue;
            }
            let facts = atomic_factorizations_poly(&f, 2 + nu, 2 + nu + 1, false)?;
            if facts.cap_hit {
                return Ok(fail(format!(
                    "{} has factorizations beyond the predicted bound",
                    f.display()
                )));
            }
            if let Some(max) = facts.lengths().iter().max() {
                if *max > f.deg_or0() + nu {
                    return Ok(fail(format!(
                        "{} has an atomic factorization of length {max}",
                        f.display()
                    )));
                }
            }
        }
        return Ok(pass("BFR holds; bounded length spread corroborated on degree <= 2"));
    }
    if !r.is_local() {
        // idempotent witness: factorizations of e of length 1 and >= 2
        let e = r
            .elements()
            .find(|&e| e != 0 && e != r.one() && r.is_idempotent(e))
            .unwrap();
        let facts = atomic_factorizations_elem(r, e, 3)?;
        let lengths: BTreeSet<usize> = facts.classes.iter().map(|c| c.len()).collect();
        if lengths.len() < 2 && !facts.cap_hit {
            return Ok(fail(format!(
                "idempotent {} shows no unbounded factorization pattern",
                r.elem_label(e)
            )));
        }
        return Ok(pass(format!(
            "not a BFR: idempotent {} has factorization lengths {:?}",
            r.elem_label(e),
            lengths
        )));
    }
    Ok(pass("BFR holds (theorem; corroboration capped at size 9)"))
}

fn check_thm6_2(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let w = classify::hfr_witness(r)?;
    let Some(w) = w else {
        return Ok(na("no nonzero nilpotent atom"));
    };
    let mut prod = Poly::one(r.clone());
    for g in &w.long {
        prod = prod.mul(g);
    }
    if prod != w.subject {
        return Ok(fail("long witness product mismatch"));
    }
    let mut prod = Poly::one(r.clone());
    for g in &w.short {
        prod = prod.mul(g);
    }
    if prod != w.subject {
        return Ok(fail("short witness product mismatch"));
    }
    if w.short.len() == w.long.len() {
        return Ok(fail("witness lengths agree"));
    }
    // irreducibility of the short factors (full bound on small carriers)
    let mut ctx = SearchCtx::new();
    for g in &w.short {
        let bound = if r.size() <= 9 {
            g.deg_or0() + r.nilpotency_index()
        } else {
            g.deg_or0() + 1
        };
        let (irr, _) = is_irreducible_poly(&mut ctx, g, bound)?;
        if !irr {
            return Ok(fail(format!("short factor {} is reducible", g.display())));
        }
    }
    Ok(pass(format!(
        "{} factors as {} atoms and as {} atoms",
        w.subject.display(),
        w.long.len(),
        w.short.len()
    )))
}

fn check_thm6_3(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    let pc = classify_poly_ring(r)?;
    if !pc.ffr.value && pc.bfr.value && !r.is_local() {
        return Ok(fail("FFR false requires BFR false on decomposable rings"));
    }
    if pc.ffr.value && !pc.bfr.value {
        return Ok(fail("FFR implies BFR"));
    }
    if !r.is_local() {
        if pc.ffr.value {
            return Ok(fail("decomposable base cannot give an FFR polynomial ring"));
        }
        return Ok(pass("not an FFR (nontrivial idempotent breaks BFR)"));
    }
    let (a, b) = classify::ffr_conditions(r);
    if pc.ffr.value != (r.is_field() || (a && b)) {
        return Ok(fail("FFR flag disagrees with conditions (a), (b)"));
    }
    // independent route for (a): products of k atoms land in M^k \ M^(k+1),
    // assuming (b) makes the atoms exactly M \ M^2
    if b && !r.is_field() {
        let m: Vec<u32> = r.elements().filter(|&x| !r.is_unit(x)).collect();
        let mut powers: Vec<Vec<u32>> = vec![m.clone()];
        while powers.last().unwrap().len() > 1 {
            let k = powers.len() + 1;
            powers.push(r.ideal_power(&m, k));
        }
        let n = powers.len();
        let m2 = &powers[1.min(n - 1)];
        let atoms: Vec<u32> = m
            .iter()
            .copied()
            .filter(|x| m2.binary_search(x).is_err())
            .collect();
        let mut direct_a = true;
        let mut tuples: Vec<Vec<u32>> = atoms.iter().map(|&x| vec![x]).collect();
        for k in 2..n {
            let mut next = Vec::new();
            for t in &tuples {
                for &x in &atoms {
                    let mut t2 = t.clone();
                    t2.push(x);
                    next.push(t2);
                }
            }
            tuples = next;
            for t in &tuples {
                let prod = t.iter().fold(r.one(), |acc, &x| r.mul(acc, x));
                let in_k = powers[k - 1].binary_search(&prod).is_ok();
                let in_k1 = k < n && powers[k].binary_search(&prod).is_ok();
                if !in_k || in_k1 {
                    direct_a = false;
                }
            }
        }
        if direct_a != a {
            return Ok(fail(format!(
                "condition (a): stratified form = {a}, direct product form = {direct_a}"
            )));
        }
    }
    Ok(pass(format!(
        "FFR = {} with conditions (a) = {a}, (b) = {b}",
        pc.ffr.value
    )))
}

fn check_probe_weakly_prime(r: &Arc<FiniteRing>, b: &Bounds) -> Result<CheckOutcome> {
    let rep = probe_weakly_prime_lift(r, b.deg_bound);
    if rep.entries.is_empty() {
        return Ok(pass("no weakly prime elements"));
    }
    let mut found = 0;
    let mut exact = 0;
    for e in &rep.entries {
        if e.prime_shortcut {
            exact += 1;
        } else if e.witness.is_some() {
            found += 1;
        }
    }
    Ok(pass(format!(
        "{} weakly prime element(s): {} prime (lift exact), {} with witnesses, {} none-at-bound",
        rep.entries.len(),
        exact,
        found,
        rep.entries.len() - exact - found
    )))
}

fn check_probe_separations(r: &Arc<FiniteRing>, _b: &Bounds) -> Result<CheckOutcome> {
    // report-only probes for the open separations
    let mut notes = Vec::new();
    let sep = r.elements().find(|&a| {
        let c = classify_element(r, a);
        c.strongly_irreducible && !c.m_irreducible
    });
    match sep {
        Some(a) => notes.push(format!(
            "strongly-irreducible-but-not-m-irreducible element: {}",
            r.elem_label(a)
        )),
        None => notes.push("no strongly-irreducible vs m-irreducible separator".into()),
    }
    if r.size() <= 6 {
        // strongly irreducible in R but not in R[X] (bounded scan)
        let mut ctx = SearchCtx::new();
        let mut sep2 = None;
        'outer: for a in r.elements() {
            if !classify_element(r, a).strongly_irreducible || r.is_unit(a) {
                continue;
            }
            let pa = Poly::constant(r.clone(), a);
            let divs = all_divisors(&mut ctx, &pa, 2)?;
            for g in divs.iter() {
                if g.is_zero() {
                    continue;
                }
                for h in cofactors(g, &pa, 2) {
                    let ga = poly_associates(&pa, g, 2)?.vector.strong;
                    let ha = poly_associates(&pa, &h, 2)?.vector.strong;
                    if !ga && !ha {
                        sep2 = Some((a, g.clone(), h));
                        break 'outer;
                    }
                }
            }
        }
        match sep2 {
            Some((a, g, h)) => notes.push(format!(
                "{} strongly irreducible in R but {} = ({})({}) in R[X]",
                r.elem_label(a),
                r.elem_label(a),
                g.display(),
                h.display()
            )),
            None => notes.push("no strong-irreducibility lift failure at bound 2".into()),
        }
    }
    Ok(pass(notes.join("; ")))
}

// -- suite -------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub ring: String,
    pub check: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RingEntry {
    pub label: String,
    pub size: usize,
    pub local_components: usize,
    pub reduced: bool,
    pub build_error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub corpus: Vec<String>,
    pub checks: Vec<String>,
    pub bounds: Bounds,
}

#[derive(Debug, Clone, Serialize, Default)]
pub struct Timing {
    pub total_ms: u128,
    pub per_check_ms: Vec<(String, String, u128)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub meta: Meta,
    pub rings: Vec<RingEntry>,
    pub checks: Vec<CheckResult>,
    pub timing: Timing,
}

impl SuiteReport {
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        let mut c = (0, 0, 0, 0);
        for r in &self.checks {
            match r.status {
                Status::Pass => c.0 += 1,
                Status::Fail => c.1 += 1,
                Status::Na => c.2 += 1,
                Status::Error => c.3 += 1,
            }
        }
        c
    }

    pub fn all_passed(&self) -> bool {
        let (_, fail, _, err) = self.counts();
        fail == 0 && err == 0
    }

    /// JSON with the timing section zeroed (byte-stable across runs).
    pub fn to_json_stable(&self) -> Result<String> {
        let mut clone = self.clone();
        clone.timing = Timing::default();
        Ok(serde_json::to_string_pretty(&clone)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "corpus: {} rings; checks: {}; deg_bound = {}\n",
            self.meta.corpus.len(),
            self.meta.checks.len(),
            self.meta.bounds.deg_bound
        ));
        for r in &self.rings {
            if let Some(e) = &r.build_error {
                out.push_str(&format!("build error for {}: {e}\n", r.label));
            }
        }
        for c in &self.checks {
            let s = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Na => "n/a ",
                Status::Error => "ERR ",
            };
            out.push_str(&format!("[{s}] {:28} {:20} {}\n", c.ring, c.check, c.detail));
        }
        let (p, f, n, e) = self.counts();
        out.push_str(&format!("{p} pass, {f} fail, {n} n/a, {e} error\n"));
        out
    }
}

/// Run a set of checks (by id; empty = all) over a corpus of ring specs.
pub fn run_suite(corpus: &[String], check_ids: &[String], bounds: &Bounds) -> SuiteReport {
    let registry = check_registry();
    let selected: Vec<&CheckDef> = if check_ids.is_empty() {
        registry.iter().collect()
    } else {
        registry
            .iter()
            .filter(|c| check_ids.iter().any(|id| id == c.id))
            .collect()
    };
    let start = Instant::now();
    let mut rings = Vec::new();
    let mut built: Vec<Option<Arc<FiniteRing>>> = Vec::new();
    for spec_text in corpus {
        match crate::dsl::parse_ring_spec(spec_text)
            .and_then(|s| build_ring(&s, &BuildOptions::default()))
        {
            Ok(r) => {
                rings.push(RingEntry {
                    label: r.label().to_string(),
                    size: r.size(),
                    local_components: r.component_count(),
                    reduced: r.is_reduced(),
                    build_error: None,
                });
                built.push(Some(r));
            }
            Err(e) => {
                rings.push(RingEntry {
                    label: spec_text.clone(),
                    size: 0,
                    local_components: 0,
                    reduced: false,
                    build_error: Some(e.to_string()),
                });
                built.push(None);
            }
        }
    }
    let mut checks = Vec::new();
    let mut timing = Timing::default();
    for (entry, ring) in rings.iter().zip(&built) {
        for def in &selected {
            let t0 = Instant::now();
            let outcome = match ring {
                None => CheckOutcome {
                    status: Status::Error,
                    detail: "ring failed to build".into(),
                },
                Some(r) => match (def.run)(r, bounds) {
                    Ok(o) => o,
                    Err(e) => CheckOutcome {
                        status: Status::Error,
                        detail: e.to_string(),
                    },
                },
            };
            timing
                .per_check_ms
                .push((entry.label.clone(), def.id.to_string(), t0.elapsed().as_millis()));
            checks.push(CheckResult {
                ring: entry.label.clone(),
                check: def.id.to_string(),
                status: outcome.status,
                detail: outcome.detail,
            });
        }
    }
    timing.total_ms = start.elapsed().as_millis();
    SuiteReport {
        meta: Meta {
            corpus: corpus.to_vec(),
            checks: selected.iter().map(|c| c.id.to_string()).collect(),
            bounds: *bounds,
        },
        rings,
        checks,
        timing,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_parses_and_builds() {
        for spec in DEFAULT_CORPUS {
            let s = crate::dsl::parse_ring_spec(spec).unwrap();
            build_ring(&s, &BuildOptions::default()).unwrap_or_else(|e| panic!("{spec}: {e}"));
        }
    }

    #[test]
    fn corpus_file_parsing() {
        let text = "Z(4) # the smallest interesting ring\n\n# comment line\nZ(2)xZ(3)\n";
        assert_eq!(parse_corpus(text), vec!["Z(4)", "Z(2)xZ(3)"]);
    }

    #[test]
    fn single_check_on_small_corpus() {
        let corpus: Vec<String> = ["Z(4)", "Z(6)"].iter().map(|s| s.to_string()).collect();
        let report = run_suite(&corpus, &["thm4.1".to_string()], &Bounds::default());
        assert!(report.all_passed(), "{}", report.render_text());
        assert_eq!(report.checks.len(), 2);
    }
}
