//! Polynomials over a finite ring: exact arithmetic, coefficient-formula
//! classification, reduction mod the nilradical, splitting along the local
//! decomposition, and associate testing with explicit confidence tiers.

use crate::elem::AssocVector;
use crate::error::{Error, Result};
use crate::ring::{split_signed, strip_parens, FiniteRing};
use serde::Serialize;
use std::cmp::Ordering;
use std::sync::Arc;

/// Confidence of a search-based verdict. A `Bounded` answer may flip to a
/// definite one under a larger bound; `Exact` never does.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Tier {
    Exact,
    Bounded,
}

/// A polynomial with coefficients in a fixed ring, trailing zeros trimmed.
/// The zero polynomial has an empty coefficient vector (degree "-inf").
#[derive(Clone)]
pub struct Poly {
    ring: Arc<FiniteRing>,
    coeffs: Vec<u32>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.coeffs == other.coeffs
    }
}
impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ring.id().hash(state);
        self.coeffs.hash(state);
    }
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Poly {
    pub fn new(ring: Arc<FiniteRing>, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { ring, coeffs }
    }

    pub fn zero(ring: Arc<FiniteRing>) -> Poly {
        Poly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(ring: Arc<FiniteRing>, a: u32) -> Poly {
        Poly::new(ring, vec![a])
    }

    pub fn one(ring: Arc<FiniteRing>) -> Poly {
        let a = ring.one();
        Poly::constant(ring, a)
    }

    /// The monomial u·X^k.
    pub fn monomial(ring: Arc<FiniteRing>, u: u32, k: usize) -> Poly {
        let mut c = vec![0u32; k + 1];
        c[k] = u;
        Poly::new(ring, c)
    }

    pub fn x(ring: Arc<FiniteRing>) -> Poly {
        let one = ring.one();
        Poly::monomial(ring, one, 1)
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// None for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_or0(&self) -> usize {
        self.deg().unwrap_or(0)
    }

    fn same_ring(&self, other: &Poly) {
        assert_eq!(
            self.ring.id(),
            other.ring.id(),
            "polynomials over different rings"
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.same_ring(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ring.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(self.ring.clone(), coeffs)
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.ring.neg(c)).collect();
        Poly::new(self.ring.clone(), coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.ring.clone());
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = vec![0u32; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.ring.add(coeffs[i + j], self.ring.mul(a, b));
            }
        }
        Poly::new(self.ring.clone(), coeffs)
    }

    pub fn scale(&self, c: u32) -> Poly {
        let coeffs = self.coeffs.iter().map(|&a| self.ring.mul(c, a)).collect();
        Poly::new(self.ring.clone(), coeffs)
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one(self.ring.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, a: u32) -> u32 {
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = self.ring.add(self.ring.mul(acc, a), c);
        }
        acc
    }

    /// f(X + a), via Horner over the shifted variable.
    pub fn shift_x(&self, a: u32) -> Poly {
        let x_plus_a = Poly::new(self.ring.clone(), vec![a, self.ring.one()]);
        let mut acc = Poly::zero(self.ring.clone());
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(&x_plus_a).add(&Poly::constant(self.ring.clone(), c));
        }
        acc
    }

    /// Deterministic order: degree, then coefficient vector.
    pub fn cmp_key(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// Text form "2X^3+X+1", with composite coefficient labels parenthesized.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mut label = self.ring.elem_label(c);
            if label.contains('+') || label.contains('-') {
                if strip_parens(&label).is_none() {
                    label = format!("({label})");
                }
            }
            let term = if i == 0 {
                label
            } else {
                let xpart = if i == 1 {
                    "X".to_string()
                } else {
                    format!("X^{i}")
                };
                if c == self.ring.one() {
                    xpart
                } else {
                    format!("{label}{xpart}")
                }
            };
            terms.push(term);
        }
        terms.join("+")
    }

    /// Parse the display format back into a polynomial.
    pub fn parse(ring: &Arc<FiniteRing>, text: &str) -> Result<Poly> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Semantic("empty polynomial".into()));
        }
        let mut acc = Poly::zero(ring.clone());
        for (sign, term) in split_signed(text) {
            if term.is_empty() {
                return Err(Error::Semantic(format!("empty term in {text:?}")));
            }
            // find the X at top parenthesis level
            let mut depth = 0;
            let mut xpos = None;
            for (i, ch) in term.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    'X' if depth == 0 => {
                        xpos = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let t = match xpos {
                None => Poly::constant(ring.clone(), ring.parse_elem(term)?),
                Some(i) => {
                    let coeff_txt = term[..i].trim().trim_end_matches('*').trim();
                    let c = if coeff_txt.is_empty() {
                        ring.one()
                    } else {
                        ring.parse_elem(coeff_txt)?
                    };
                    let rest = &term[i + 1..];
                    let k: usize = if rest.trim().is_empty() {
                        1
                    } else {
                        let rest = rest.trim();
                        let Some(exp) = rest.strip_prefix('^') else {
                            return Err(Error::Semantic(format!("bad term {term:?}")));
                        };
                        exp.trim()
                            .parse()
                            .map_err(|_| Error::Semantic(format!("bad exponent in {term:?}")))?
                    };
                    Poly::monomial(ring.clone(), c, k)
                }
            };
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
        }
        Ok(acc)
    }
}

/// All polynomials of degree <= max_deg (including 0), in deterministic order.
pub fn polys_up_to(ring: &Arc<FiniteRing>, max_deg: usize) -> Vec<Poly> {
    let size = ring.size() as u64;
    let mut out = vec![Poly::zero(ring.clone())];
    for d in 0..=max_deg {
        // exactly degree d: leading coefficient nonzero
        let mut idx = vec![0u32; d + 1];
        idx[d] = 1;
        loop {
            out.push(Poly {
                ring: ring.clone(),
                coeffs: idx.clone(),
            });
            // increment little-endian with leading digit >= 1
            let mut i = 0;
            loop {
                if i == d {
                    idx[i] += 1;
                    if idx[i] as u64 == size {
                        idx[i] = 1;
                        i += 1;
                    } else {
                        break;
                    }
                } else {
                    idx[i] += 1;
                    if idx[i] as u64 == size {
                        idx[i] = 0;
                        i += 1;
                    } else {
                        break;
                    }
                }
                if i > d {
                    break;
                }
            }
            if i > d {
                break;
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Division
// ---------------------------------------------------------------------------

/// All h with g·h = f and deg h <= bound. `g` must be nonzero.
pub fn cofactors(g: &Poly, f: &Poly, bound: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    cofactor_search(g, f, bound, &mut |h| {
        out.push(h);
        true
    });
    out
}

/// Does some h with g·h = f, deg h <= bound exist?
pub fn divides_bounded(g: &Poly, f: &Poly, bound: usize) -> bool {
    if g.is_zero() {
        return f.is_zero();
    }
    let mut found = false;
    cofactor_search(g, f, bound, &mut |_| {
        found = true;
        false
    });
    found
}

/// DFS over cofactor coefficients; `emit` returns false to stop early.
fn cofactor_search(g: &Poly, f: &Poly, bound: usize, emit: &mut dyn FnMut(Poly) -> bool) {
    assert!(!g.is_zero(), "cofactor search needs a nonzero divisor");
    let ring = g.ring().clone();
    // strip the common power of X in g
    let alpha = g.coeffs.iter().take_while(|&&c| c == 0).count();
    if !f.is_zero() {
        if f.coeffs.len() < alpha || f.coeffs[..alpha].iter().any(|&c| c != 0) {
            return;
        }
    }
    let gs: Vec<u32> = g.coeffs[alpha..].to_vec();
    let fs: Vec<u32> = if f.is_zero() {
        Vec::new()
    } else {
        f.coeffs[alpha..].to_vec()
    };
    let fdeg_plus = fs.len(); // fs[i] valid below this
    let gd = gs.len() - 1;
    if !f.is_zero() && fdeg_plus > gd + bound + 1 {
        return; // product degree can drop but never exceed gd + bound
    }
    let fat = |i: usize| -> u32 {
        if i < fdeg_plus {
            fs[i]
        } else {
            0
        }
    };
    let mut h = vec![0u32; bound + 1];
    fn rec(
        ring: &Arc<FiniteRing>,
        gs: &[u32],
        fat: &dyn Fn(usize) -> u32,
        gd: usize,
        bound: usize,
        t: usize,
        h: &mut Vec<u32>,
        emit: &mut dyn FnMut(Poly) -> bool,
    ) -> bool {
        if t > bound {
            // verify the remaining equations
            for tt in bound + 1..=gd + bound {
                let mut s = 0u32;
                for (i, &gi) in gs.iter().enumerate() {
                    if i <= tt && tt - i <= bound {
                        s = ring.add(s, ring.mul(gi, h[tt - i]));
                    }
                }
                if s != fat(tt) {
                    return true;
                }
            }
            return emit(Poly::new(ring.clone(), h.clone()));
        }
        let mut known = 0u32;
        for i in 1..=gd.min(t) {
            known = ring.add(known, ring.mul(gs[i], h[t - i]));
        }
        let rhs = ring.sub(fat(t), known);
        // g0 * h[t] = rhs
        let g0 = gs[0];
        if ring.is_unit(g0) {
            let x = ring.mul(ring.inverse(g0).unwrap(), rhs);
            h[t] = x;
            if !rec(ring, gs, fat, gd, bound, t + 1, h, emit) {
                return false;
            }
            h[t] = 0;
        } else {
            for x in ring.solve_mul(g0, rhs) {
                h[t] = x;
                if !rec(ring, gs, fat, gd, bound, t + 1, h, emit) {
                    return false;
                }
                h[t] = 0;
            }
        }
        true
    }
    rec(&ring, &gs, &fat, gd, bound, 0, &mut h, emit);
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// Coefficient-formula classification of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PolyClass {
    pub unit: bool,
    pub zero_divisor: bool,
    pub nilpotent: bool,
    pub idempotent: bool,
    pub regular: bool,
}

/// Classify via the coefficient formulas: unit iff the constant term is a
/// unit and every higher coefficient nilpotent; zero divisor iff a nonzero
/// constant annihilates the whole polynomial; idempotent iff a constant
/// idempotent; nilpotent iff every coefficient is nilpotent.
pub fn classify_poly(f: &Poly) -> PolyClass {
    let r = f.ring();
    let unit = !f.is_zero()
        && r.is_unit(f.coeff(0))
        && f.coeffs().iter().skip(1).all(|&c| r.is_nilpotent(c));
    let zero_divisor = f.is_zero()
        || r
            .elements()
            .skip(1)
            .any(|c| f.coeffs().iter().all(|&a| r.mul(c, a) == 0));
    let idempotent = f.is_constant() && (f.is_zero() || r.is_idempotent(f.coeff(0)));
    let nilpotent = f.coeffs().iter().all(|&c| r.is_nilpotent(c));
    PolyClass {
        unit,
        zero_divisor,
        nilpotent,
        idempotent,
        regular: !zero_divisor,
    }
}

pub fn is_unit_poly(f: &Poly) -> bool {
    classify_poly(f).unit
}

pub fn is_regular_poly(f: &Poly) -> bool {
    !classify_poly(f).zero_divisor
}

/// Coefficientwise projection into R/nil(R).
pub fn reduce_mod_nil(f: &Poly) -> Poly {
    let (q, proj) = f.ring().mod_nil();
    let coeffs = f.coeffs().iter().map(|&c| proj[c as usize]).collect();
    Poly::new(q, coeffs)
}

/// Componentwise projections along the local decomposition.
pub fn split_components(f: &Poly) -> Vec<Poly> {
    let r = f.ring();
    r.local_components()
        .iter()
        .enumerate()
        .map(|(j, (c, _))| {
            let coeffs = f
                .coeffs()
                .iter()
                .map(|&a| r.component_index(j, a))
                .collect();
            Poly::new(c.clone(), coeffs)
        })
        .collect()
}

/// Inverse of `split_components`.
pub fn reassemble_components(r: &Arc<FiniteRing>, parts: &[Poly]) -> Poly {
    let n = parts.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    let coeffs = (0..n)
        .map(|i| {
            let mut acc = 0u32;
            for (j, p) in parts.iter().enumerate() {
                acc = r.add(acc, r.component_embed(j, p.coeff(i)));
            }
            acc
        })
        .collect();
    Poly::new(r.clone(), coeffs)
}

// ---------------------------------------------------------------------------
// Associates in R[X]
// ---------------------------------------------------------------------------

/// Associate vector for polynomials, with the confidence tier of the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PolyAssoc {
    pub vector: AssocVector,
    pub tier: Tier,
}

/// Decide the associate relations between f and g, searching cofactors up to
/// degree `bound` each way. Constants short-circuit to exact ring-level
/// answers; a reduced base with both polynomials regular is also exact.
pub fn poly_associates(f: &Poly, g: &Poly, bound: usize) -> Result<PolyAssoc> {
    let r = f.ring().clone();
    if bound < f.deg_or0().max(g.deg_or0()) {
        return Err(Error::BoundTooSmall {
            required: f.deg_or0().max(g.deg_or0()),
            given: bound,
        });
    }
    if f.is_constant() && g.is_constant() {
        let a = f.coeff(0);
        let b = g.coeff(0);
        let ring_vec = crate::elem::associate_vector(&r, a, b);
        let very_strong = constant_very_strong_assoc_in_polyring(&r, a, b);
        // regular variants of constants: a witness of failure can always be
        // truncated to degree <= 1, so a bounded scan at bound >= 1 is exact
        let very_strong_regular = constant_very_strong_regular(&r, a, b);
        return Ok(PolyAssoc {
            vector: AssocVector {
                assoc: ring_vec.assoc,
                strong: ring_vec.strong,
                very_strong,
                strong_regular: ring_vec.assoc,
                very_strong_regular,
            },
            tier: Tier::Exact,
        });
    }

    let f_div_g = divisor_witnesses(g, f, bound); // r with r·g = f
    let g_div_f = divisor_witnesses(f, g, bound);
    let assoc = !f_div_g.is_empty() && !g_div_f.is_empty();
    let strong = f_div_g.iter().any(is_unit_poly);
    let strong_regular = f_div_g.iter().any(is_regular_poly) && g_div_f.iter().any(is_regular_poly);
    let both_zero = f.is_zero() && g.is_zero();
    let very_strong =
        assoc && (both_zero || (!f.is_zero() && f_div_g.iter().all(is_unit_poly)));
    let very_strong_regular =
        assoc && (both_zero || (!f.is_zero() && f_div_g.iter().all(is_regular_poly)));
    let tier = if r.is_reduced() && is_regular_poly(f) && is_regular_poly(g) {
        Tier::Exact
    } else {
        Tier::Bounded
    };
    Ok(PolyAssoc {
        vector: AssocVector {
            assoc,
            strong,
            very_strong,
            strong_regular,
            very_strong_regular,
        },
        tier,
    })
}

fn divisor_witnesses(g: &Poly, f: &Poly, bound: usize) -> Vec<Poly> {
    if g.is_zero() {
        // r·0 = f only for f = 0, witnessed by every r; return 0 and 1
        return if f.is_zero() {
            vec![Poly::zero(f.ring().clone()), Poly::one(f.ring().clone())]
        } else {
            Vec::new()
        };
    }
    cofactors(g, f, bound)
}

/// Exact decision of a ≅ b inside R[X] for ring constants: a ≅ b in R and
/// either a = 0 or ann(b) ⊆ nil(R).
pub fn constant_very_strong_assoc_in_polyring(r: &FiniteRing, a: u32, b: u32) -> bool {
    let ring_vec = crate::elem::associate_vector(r, a, b);
    if !ring_vec.very_strong {
        return false;
    }
    a == 0 || r.annihilator(b).iter().all(|&c| r.is_nilpotent(c))
}

/// a ≅ᵣ b inside R[X] for constants; exact (failure witnesses truncate to
/// degree 1: r0 + cX with c in ann(b)).
fn constant_very_strong_regular(r: &FiniteRing, a: u32, b: u32) -> bool {
    let assoc = r.divides(b, a) && r.divides(a, b);
    if !assoc {
        return false;
    }
    if a == 0 && b == 0 {
        return true;
    }
    if a == 0 {
        return false;
    }
    // every r0 with a = r0·b must be regular...
    for r0 in r.solve_mul(b, a) {
        if !r.is_regular(r0) {
            return false;
        }
        // ...and remain regular after adding any ann(b)-tail of length 1
        for c in r.annihilator(b) {
            if c == 0 {
                continue;
            }
            // r0 + cX regular iff no d != 0 kills both
            let bad = r
                .elements()
                .skip(1)
                .any(|d| r.mul(d, r0) == 0 && r.mul(d, c) == 0);
            if bad {
                return false;
            }
        }
    }
    true
}

/// Is g strongly associate (in R[X]) to some ring constant? Exact: g = a·u
/// with u a unit forces u's truncation to deg g to work as well.
pub fn strongly_assoc_to_constant(g: &Poly) -> bool {
    let r = g.ring();
    if g.is_zero() {
        return true; // g = 0·1
    }
    'cand: for a in r.elements() {
        // need h with a·h = g, h0 a unit, tail nilpotent
        for (i, &gi) in g.coeffs().iter().enumerate() {
            let ok = if i == 0 {
                r.elements().any(|x| r.is_unit(x) && r.mul(a, x) == gi)
            } else {
                r.elements().any(|x| r.is_nilpotent(x) && r.mul(a, x) == gi)
            };
            if !ok {
                continue 'cand;
            }
        }
        return true;
    }
    false
}

/// Indecomposability: every factorization f = gh has g or h strongly
/// associate to a constant.
pub fn is_indecomposable_poly(f: &Poly, bound: usize) -> (bool, Tier) {
    let r = f.ring();
    if f.is_zero() {
        // exact: 0 is indecomposable iff 0 is irreducible iff R is a domain
        return (r.is_domain(), Tier::Exact);
    }
    for g in polys_up_to(f.ring(), bound) {
        if g.is_zero() || strongly_assoc_to_constant(&g) {
            continue;
        }
        for h in cofactors(&g, f, bound) {
            if !strongly_assoc_to_constant(&h) {
                return (false, Tier::Exact);
            }
        }
    }
    let tier = if r.is_reduced() && bound >= f.deg_or0().max(1) {
        Tier::Exact
    } else {
        Tier::Bounded
    };
    (true, tier)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::build;

    fn p(r: &Arc<FiniteRing>, s: &str) -> Poly {
        Poly::parse(r, s).unwrap()
    }

    #[test]
    fn product_identities_from_small_rings() {
        let z4 = build("Z(4)").unwrap();
        let f = p(&z4, "X+2");
        assert_eq!(f.mul(&f), p(&z4, "X^2"));

        let z6 = build("Z(6)").unwrap();
        let g = p(&z6, "3X+2").mul(&p(&z6, "2X+3"));
        assert_eq!(g, p(&z6, "X"));

        let one = Poly::one(z4.clone());
        assert_eq!(f.mul(&one), f);
    }

    #[test]
    fn display_and_parse_round_trip() {
        let z4 = build("Z(4)").unwrap();
        for s in ["2X^3+X+1", "X^2", "0", "3", "2X", "X^2+2X+2"] {
            let f = p(&z4, s);
            assert_eq!(f.display(), s, "round trip {s}");
            assert_eq!(Poly::parse(&z4, &f.display()).unwrap(), f);
        }
        let z2z2 = build("Z(2)xZ(2)").unwrap();
        let f = p(&z2z2, "(0,1)X+(1,1)");
        assert_eq!(Poly::parse(&z2z2, &f.display()).unwrap(), f);
        let stq = build("Z(2)[s,t]/(s^2,s*t,t^2)").unwrap();
        let f = p(&stq, "(1+s)X^2+t");
        assert_eq!(Poly::parse(&stq, &f.display()).unwrap(), f);
    }

    #[test]
    fn classification_formulas() {
        let z4 = build("Z(4)").unwrap();
        assert!(classify_poly(&p(&z4, "2X+1")).unit);
        assert!(classify_poly(&p(&z4, "2X+2")).nilpotent);
        assert!(!classify_poly(&p(&z4, "X")).zero_divisor);

        let z6 = build("Z(6)").unwrap();
        assert!(classify_poly(&p(&z6, "2X+2")).zero_divisor);
        assert!(classify_poly(&p(&z6, "3")).idempotent);
        assert!(!classify_poly(&p(&z6, "3X+1")).unit);
    }

    #[test]
    fn classifier_agrees_with_brute_force_small() {
        // full enumeration at degree <= 2 over Z4 and Z6 against searches
        for spec in ["Z(4)", "Z(6)"] {
            let r = build(spec).unwrap();
            let one = Poly::one(r.clone());
            let zero = Poly::zero(r.clone());
            for f in polys_up_to(&r, 2) {
                let c = classify_poly(&f);
                let unit_brute = !f.is_zero() && divides_bounded(&f, &one, 4);
                assert_eq!(c.unit, unit_brute, "{spec}: unit {f:?}");
                let zd_brute = polys_up_to(&r, 4)
                    .iter()
                    .any(|g| !g.is_zero() && f.mul(g) == zero);
                assert_eq!(c.zero_divisor, zd_brute, "{spec}: zd {f:?}");
                assert_eq!(c.idempotent, f.mul(&f) == f, "{spec}: idem {f:?}");
                let mut pw = f.clone();
                for _ in 0..4 {
                    pw = pw.mul(&pw);
                }
                assert_eq!(c.nilpotent, pw.is_zero(), "{spec}: nilp {f:?}");
            }
        }
    }

    #[test]
    fn mod_nil_reduction() {
        let z4 = build("Z(4)").unwrap();
        let f = p(&z4, "X+2");
        let fbar = reduce_mod_nil(&f);
        assert_eq!(fbar.ring().size(), 2);
        assert_eq!(fbar.coeffs(), &[0, 1]); // X over Z2
        assert!(reduce_mod_nil(&p(&z4, "2X+2")).is_zero());

        let z6 = build("Z(6)").unwrap();
        let g = p(&z6, "5X^2+3");
        let gbar = reduce_mod_nil(&g);
        assert_eq!(gbar.ring().size(), 6);
        assert_eq!(gbar.coeffs(), g.coeffs());
    }

    #[test]
    fn component_split_round_trip() {
        let z6 = build("Z(6)").unwrap();
        for f in polys_up_to(&z6, 2) {
            let parts = split_components(&f);
            assert_eq!(reassemble_components(&z6, &parts), f);
        }
        // X splits to (X, X)
        let parts = split_components(&p(&z6, "X"));
        assert!(parts.iter().all(|q| q.deg() == Some(1)));
    }

    #[test]
    fn cofactor_search_finds_divisions() {
        let z4 = build("Z(4)").unwrap();
        let x2 = p(&z4, "X^2");
        let hs = cofactors(&p(&z4, "X+2"), &x2, 3);
        assert!(hs.contains(&p(&z4, "X+2")));
        // X does not divide X+2
        assert!(!divides_bounded(&p(&z4, "X"), &p(&z4, "X+2"), 4));
        assert!(!divides_bounded(&p(&z4, "X+2"), &p(&z4, "X"), 4));
    }

    #[test]
    fn associates_basics() {
        let z4 = build("Z(4)").unwrap();
        let a = poly_associates(&p(&z4, "X"), &p(&z4, "X+2"), 4).unwrap();
        assert!(!a.vector.assoc);
        let b = poly_associates(&p(&z4, "X"), &p(&z4, "3X"), 4).unwrap();
        assert!(b.vector.strong);
        // associates of different degrees: X ~ X+2X^2 = X(1+2X)
        let c = poly_associates(&p(&z4, "X"), &p(&z4, "2X^2+X"), 4).unwrap();
        assert!(c.vector.assoc && c.vector.strong);

        let z6 = build("Z(6)").unwrap();
        let d = poly_associates(&p(&z6, "2"), &p(&z6, "4"), 3).unwrap();
        assert!(d.vector.assoc && d.tier == Tier::Exact);
    }

    #[test]
    fn regular_assoc_matches_plain_assoc_in_polyring() {
        // f ~ g iff f ≈ᵣ g: checked by independent bounded searches
        for spec in ["Z(4)", "Z(6)"] {
            let r = build(spec).unwrap();
            for f in polys_up_to(&r, 1) {
                for g in polys_up_to(&r, 1) {
                    let v = poly_associates(&f, &g, 3).unwrap().vector;
                    assert_eq!(v.assoc, v.strong_regular, "{spec} {f:?} {g:?}");
                }
            }
        }
    }

    #[test]
    fn constant_very_strong_in_polyring() {
        let z4 = build("Z(4)").unwrap();
        assert!(constant_very_strong_assoc_in_polyring(&z4, 2, 2));
        assert!(constant_very_strong_assoc_in_polyring(&z4, 0, 0));
        let z6 = build("Z(6)").unwrap();
        assert!(!constant_very_strong_assoc_in_polyring(&z6, 2, 4));
        // 3 ≅ 3 fails in Z6[X]? ann(3) = {0,2,4} ⊄ nil = {0}; and 3 ≅ 3 in R
        // already fails (3 = 3·3 with 3 a nonunit), so false for two reasons
        assert!(!constant_very_strong_assoc_in_polyring(&z6, 3, 3));
    }

    #[test]
    fn indecomposable_examples() {
        let z6 = build("Z(6)").unwrap();
        let (dec, tier) = is_indecomposable_poly(&p(&z6, "X"), 2);
        assert!(!dec && tier == Tier::Exact);
        let (zero_dec, t0) = is_indecomposable_poly(&Poly::zero(z6.clone()), 2);
        assert!(!zero_dec && t0 == Tier::Exact);

        let z4 = build("Z(4)").unwrap();
        let (x_ind, _) = is_indecomposable_poly(&p(&z4, "X"), 3);
        assert!(x_ind);

        let z5 = build("Z(5)").unwrap();
        let (ind, tier) = is_indecomposable_poly(&p(&z5, "X^2+1"), 2);
        // X^2+1 = (X+2)(X+3) over Z5
        assert!(!ind && tier == Tier::Exact);
    }

    #[test]
    fn shift_and_eval() {
        let z4 = build("Z(4)").unwrap();
        let f = p(&z4, "X^2+2X+1");
        assert_eq!(f.eval(1), 0); // 1+2+1 = 4 = 0
        let g = f.shift_x(2); // f(X+2) = (X+3)^2 = X^2 + 6X + 9 = X^2+2X+1
        assert_eq!(g, p(&z4, "X^2+2X+1"));
        let h = p(&z4, "X").shift_x(2);
        assert_eq!(h, p(&z4, "X+2"));
    }

    #[test]
    fn polys_up_to_counts() {
        let z4 = build("Z(4)").unwrap();
        // 1 zero + 4^1-1... degree 0: 3 nonzero constants + zero = 4; deg 1: 4*3; deg 2: 16*3
        assert_eq!(polys_up_to(&z4, 0).len(), 4);
        assert_eq!(polys_up_to(&z4, 1).len(), 4 + 12);
        assert_eq!(polys_up_to(&z4, 2).len(), 4 + 12 + 48);
    }
}
