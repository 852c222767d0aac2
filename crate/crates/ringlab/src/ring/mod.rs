//! Finite commutative rings with exact arithmetic and precomputed structure.
//!
//! Elements are canonical indices `0..size`, with index 0 always the zero
//! element. Every structural set (units, zero divisors, nilradical, Jacobson
//! radical, idempotents, local decomposition) is computed by exhaustive
//! search at build time; rings are immutable afterwards and safe to share.

mod iso;
mod realize;

pub use iso::find_isomorphism;

use crate::dsl::{render_ring_spec, RingSpec};
use crate::error::{Error, Result};
use realize::{realize_poly_quotient, BasisData};
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Build-time configuration.
#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Hard cap on carrier size ("not finite" beyond this).
    pub size_cap: usize,
    /// Operation tables are memoized only up to this size.
    pub table_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            size_cap: 1 << 16,
            table_cap: 4096,
        }
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

#[derive(Clone)]
enum Ops {
    Modular {
        n: u64,
    },
    Product {
        comps: Vec<Arc<FiniteRing>>,
    },
    Basis(Arc<BasisData>),
    Idealization {
        base: Arc<FiniteRing>,
        module_size: usize,
        /// canonical parent representative of each module element
        rep: Arc<Vec<u32>>,
        /// parent element -> module element
        coset: Arc<Vec<u32>>,
    },
    Quotient {
        parent: RawRing,
        proj: Arc<Vec<u32>>,
        rep: Arc<Vec<u32>>,
    },
    Subset {
        parent: RawRing,
        carrier: Arc<Vec<u32>>,
        inv: Arc<HashMap<u32, u32>>,
    },
}

/// Arithmetic core: enough to evaluate operations without the cache layer.
#[derive(Clone)]
struct RawRing {
    size: usize,
    ops: Box<Ops>,
    tables: Option<Arc<Tables>>,
}

impl RawRing {
    fn add(&self, a: u32, b: u32) -> u32 {
        if let Some(t) = &self.tables {
            return t.add[a as usize * self.size + b as usize];
        }
        self.add_raw(a, b)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if let Some(t) = &self.tables {
            return t.mul[a as usize * self.size + b as usize];
        }
        self.mul_raw(a, b)
    }

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        match &*self.ops {
            Ops::Modular { n } => ((a as u64 + b as u64) % n) as u32,
            Ops::Product { comps } => {
                let xs = decompose(comps, a);
                let ys = decompose(comps, b);
                let parts: Vec<u32> = xs
                    .iter()
                    .zip(&ys)
                    .zip(comps)
                    .map(|((&x, &y), c)| c.add(x, y))
                    .collect();
                compose(comps, &parts)
            }
            Ops::Basis(data) => {
                let xs = basis_decode(data, a);
                let ys = basis_decode(data, b);
                let sum: Vec<u64> = xs
                    .iter()
                    .zip(&ys)
                    .zip(&data.moduli)
                    .map(|((&x, &y), &d)| (x + y) % d)
                    .collect();
                basis_encode(data, &sum)
            }
            Ops::Idealization {
                base,
                module_size,
                rep,
                coset,
            } => {
                let (r1, w1) = (a as usize / module_size, a as usize % module_size);
                let (r2, w2) = (b as usize / module_size, b as usize % module_size);
                let r = base.add(r1 as u32, r2 as u32);
                let w = coset[base.add(rep[w1], rep[w2]) as usize];
                r * *module_size as u32 + w
            }
            Ops::Quotient { parent, proj, rep } => {
                proj[parent.add(rep[a as usize], rep[b as usize]) as usize]
            }
            Ops::Subset {
                parent,
                carrier,
                inv,
            } => inv[&parent.add(carrier[a as usize], carrier[b as usize])],
        }
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        match &*self.ops {
            Ops::Modular { n } => ((a as u64 * b as u64) % n) as u32,
            Ops::Product { comps } => {
                let xs = decompose(comps, a);
                let ys = decompose(comps, b);
                let parts: Vec<u32> = xs
                    .iter()
                    .zip(&ys)
                    .zip(comps)
                    .map(|((&x, &y), c)| c.mul(x, y))
                    .collect();
                compose(comps, &parts)
            }
            Ops::Basis(data) => {
                let xs = basis_decode(data, a);
                let ys = basis_decode(data, b);
                let r = data.moduli.len();
                let mut acc = vec![0u64; r];
                for i in 0..r {
                    if xs[i] == 0 {
                        continue;
                    }
                    for j in 0..r {
                        if ys[j] == 0 {
                            continue;
                        }
                        let c = xs[i] * ys[j];
                        for (k, v) in data.mul[i][j].iter().enumerate() {
                            acc[k] = (acc[k] + c * v) % data.moduli[k];
                        }
                    }
                }
                basis_encode(data, &acc)
            }
            Ops::Idealization {
                base,
                module_size,
                rep,
                coset,
            } => {
                let (r1, w1) = (a as usize / module_size, a as usize % module_size);
                let (r2, w2) = (b as usize / module_size, b as usize % module_size);
                let r = base.mul(r1 as u32, r2 as u32);
                let cross = base.add(
                    base.mul(rep[w1], r2 as u32),
                    base.mul(rep[w2], r1 as u32),
                );
                r * *module_size as u32 + coset[cross as usize]
            }
            Ops::Quotient { parent, proj, rep } => {
                proj[parent.mul(rep[a as usize], rep[b as usize]) as usize]
            }
            Ops::Subset {
                parent,
                carrier,
                inv,
            } => inv[&parent.mul(carrier[a as usize], carrier[b as usize])],
        }
    }

    fn neg_raw(&self, a: u32) -> u32 {
        match &*self.ops {
            Ops::Modular { n } => ((n - a as u64) % n) as u32,
            Ops::Product { comps } => {
                let xs = decompose(comps, a);
                let parts: Vec<u32> = xs.iter().zip(comps).map(|(&x, c)| c.neg(x)).collect();
                compose(comps, &parts)
            }
            Ops::Basis(data) => {
                let xs = basis_decode(data, a);
                let neg: Vec<u64> = xs
                    .iter()
                    .zip(&data.moduli)
                    .map(|(&x, &d)| (d - x) % d)
                    .collect();
                basis_encode(data, &neg)
            }
            Ops::Idealization {
                base,
                module_size,
                rep,
                coset,
            } => {
                let (r1, w1) = (a as usize / module_size, a as usize % module_size);
                let r = base.neg(r1 as u32);
                let w = coset[base.neg(rep[w1]) as usize];
                r * *module_size as u32 + w
            }
            Ops::Quotient { parent, proj, rep } => proj[parent.neg_raw(rep[a as usize]) as usize],
            Ops::Subset {
                parent,
                carrier,
                inv,
            } => inv[&parent.neg_raw(carrier[a as usize])],
        }
    }

    fn one_index(&self) -> u32 {
        match &*self.ops {
            Ops::Modular { .. } => 1,
            Ops::Product { comps } => {
                let parts: Vec<u32> = comps.iter().map(|c| c.one()).collect();
                compose(comps, &parts)
            }
            Ops::Basis(_) => 1,
            Ops::Idealization {
                base, module_size, ..
            } => base.one() * *module_size as u32,
            Ops::Quotient { parent, proj, .. } => proj[parent.one_index() as usize],
            Ops::Subset { .. } => unreachable!("subring identity is supplied by the builder"),
        }
    }

    fn elem_label(&self, a: u32) -> String {
        match &*self.ops {
            Ops::Modular { .. } => a.to_string(),
            Ops::Product { comps } => {
                let parts = decompose(comps, a);
                let inner: Vec<String> = parts
                    .iter()
                    .zip(comps)
                    .map(|(&p, c)| c.elem_label(p))
                    .collect();
                format!("({})", inner.join(","))
            }
            Ops::Basis(data) => {
                let coeffs = basis_decode(data, a);
                let mut terms = Vec::new();
                for (i, &c) in coeffs.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let mon = render_mon(&data.mons[i], &data.vars);
                    if mon.is_empty() {
                        terms.push(c.to_string());
                    } else if c == 1 {
                        terms.push(mon);
                    } else {
                        terms.push(format!("{c}*{mon}"));
                    }
                }
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
            Ops::Idealization {
                base,
                module_size,
                rep,
                ..
            } => {
                let (r, w) = (a as usize / module_size, a as usize % module_size);
                format!(
                    "({},{})",
                    base.elem_label(r as u32),
                    base.elem_label(rep[w])
                )
            }
            Ops::Quotient { parent, rep, .. } => parent.elem_label(rep[a as usize]),
            Ops::Subset {
                parent, carrier, ..
            } => parent.elem_label(carrier[a as usize]),
        }
    }

    fn parse_elem(&self, text: &str) -> Result<u32> {
        let text = text.trim();
        match &*self.ops {
            Ops::Modular { n } => {
                let v: i64 = text
                    .parse()
                    .map_err(|_| Error::Semantic(format!("bad element {text:?}")))?;
                Ok(v.rem_euclid(*n as i64) as u32)
            }
            Ops::Product { comps } => {
                let inner = strip_parens(text)
                    .ok_or_else(|| Error::Semantic(format!("expected tuple, got {text:?}")))?;
                let parts = split_top(inner, ',');
                if parts.len() != comps.len() {
                    return Err(Error::Semantic(format!(
                        "expected {}-tuple, got {text:?}",
                        comps.len()
                    )));
                }
                let idxs: Vec<u32> = parts
                    .iter()
                    .zip(comps)
                    .map(|(p, c)| c.parse_elem(p))
                    .collect::<Result<_>>()?;
                Ok(compose(comps, &idxs))
            }
            Ops::Basis(data) => {
                let body = strip_parens(text).unwrap_or(text);
                let mut acc = 0u32;
                for (sign, term) in split_signed(body) {
                    let e = self.parse_basis_term(data, term)?;
                    let e = if sign < 0 { self.neg_raw(e) } else { e };
                    acc = self.add(acc, e);
                }
                Ok(acc)
            }
            Ops::Idealization {
                base,
                module_size,
                coset,
                ..
            } => {
                let inner = strip_parens(text)
                    .ok_or_else(|| Error::Semantic(format!("expected pair, got {text:?}")))?;
                let parts = split_top(inner, ',');
                if parts.len() != 2 {
                    return Err(Error::Semantic(format!("expected pair, got {text:?}")));
                }
                let r = base.parse_elem(parts[0])?;
                let w = coset[base.parse_elem(parts[1])? as usize];
                Ok(r * *module_size as u32 + w)
            }
            Ops::Quotient { parent, proj, .. } => {
                let p = parent.parse_elem(text)?;
                Ok(proj[p as usize])
            }
            Ops::Subset { parent, inv, .. } => {
                let p = parent.parse_elem(text)?;
                inv.get(&p)
                    .copied()
                    .ok_or_else(|| Error::Semantic(format!("{text:?} is not in the subring")))
            }
        }
    }

    fn parse_basis_term(&self, data: &BasisData, term: &str) -> Result<u32> {
        // term := atoms joined by '*'; atom := int | var ('^' int)?
        let one = 1u32; // Basis rings encode the identity at index 1
        let mut coeff: u64 = 1;
        let mut elem = one;
        for atom in term.split('*') {
            let atom = atom.trim();
            if atom.is_empty() {
                return Err(Error::Semantic(format!("empty factor in {term:?}")));
            }
            if atom.bytes().all(|c| c.is_ascii_digit()) {
                coeff = coeff.wrapping_mul(atom.parse::<u64>().unwrap_or(0));
                continue;
            }
            let (name, exp) = match atom.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Semantic(format!("bad exponent in {atom:?}")))?,
                ),
                None => (atom, 1),
            };
            let vi = data
                .vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::Semantic(format!("unknown generator {name:?}")))?;
            let v = basis_encode(data, &data.var_elems[vi]);
            for _ in 0..exp {
                elem = self.mul(elem, v);
            }
        }
        // coeff·1
        let char_bound = data.moduli[0];
        let mut c = 0u32;
        for _ in 0..(coeff % char_bound.max(1)) {
            c = self.add(c, one);
        }
        Ok(self.mul(c, elem))
    }
}

fn decompose(comps: &[Arc<FiniteRing>], mut idx: u32) -> Vec<u32> {
    let mut out = vec![0u32; comps.len()];
    for (i, c) in comps.iter().enumerate().rev() {
        out[i] = idx % c.size() as u32;
        idx /= c.size() as u32;
    }
    out
}

fn compose(comps: &[Arc<FiniteRing>], parts: &[u32]) -> u32 {
    let mut idx = 0u32;
    for (c, &p) in comps.iter().zip(parts) {
        idx = idx * c.size() as u32 + p;
    }
    idx
}

fn basis_decode(data: &BasisData, idx: u32) -> Vec<u64> {
    let mut idx = idx as u64;
    let mut out = vec![0u64; data.moduli.len()];
    for (i, &d) in data.moduli.iter().enumerate() {
        out[i] = idx % d;
        idx /= d;
    }
    out
}

fn basis_encode(data: &BasisData, coeffs: &[u64]) -> u32 {
    let mut idx = 0u64;
    for (i, &d) in data.moduli.iter().enumerate().rev() {
        idx = idx * d + coeffs[i];
    }
    idx as u32
}

/// A realized finite commutative ring with all structural caches.
pub struct FiniteRing {
    id: u64,
    label: String,
    spec: Option<RingSpec>,
    raw: RawRing,
    one: u32,
    neg_table: Vec<u32>,
    units: Vec<bool>,
    inverse: Vec<u32>,
    zero_divisors: Vec<bool>,
    nilpotents: Vec<bool>,
    jacobson: Vec<bool>,
    idempotents: Vec<bool>,
    characteristic: usize,
    nilpotency_index: usize,
    primitive_idempotents: Vec<u32>,
    components: Vec<Arc<FiniteRing>>,
    component_proj: Vec<Arc<Vec<u32>>>,
    mod_nil: Option<(Arc<FiniteRing>, Arc<Vec<u32>>)>,
    maximal_ideals: Vec<Vec<u32>>,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRing({}, size {})", self.label, self.size())
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}
impl Eq for FiniteRing {}

impl FiniteRing {
    pub fn id(&self) -> u64 {
        self.id
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn spec(&self) -> Option<&RingSpec> {
        self.spec.as_ref()
    }
    pub fn size(&self) -> usize {
        self.raw.size
    }
    pub fn zero(&self) -> u32 {
        0
    }
    pub fn one(&self) -> u32 {
        self.one
    }
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size() as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.raw.add(a, b)
    }
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.raw.mul(a, b)
    }
    pub fn neg(&self, a: u32) -> u32 {
        self.neg_table[a as usize]
    }
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Embed a small nonnegative integer (k·1).
    pub fn from_int(&self, k: u64) -> u32 {
        let mut acc = 0u32;
        for _ in 0..(k % self.characteristic as u64) {
            acc = self.add(acc, self.one);
        }
        acc
    }

    pub fn is_unit(&self, a: u32) -> bool {
        self.units[a as usize]
    }
    pub fn is_zero_divisor(&self, a: u32) -> bool {
        self.zero_divisors[a as usize]
    }
    pub fn is_regular(&self, a: u32) -> bool {
        !self.zero_divisors[a as usize]
    }
    pub fn is_nilpotent(&self, a: u32) -> bool {
        self.nilpotents[a as usize]
    }
    pub fn is_idempotent(&self, a: u32) -> bool {
        self.idempotents[a as usize]
    }
    pub fn in_jacobson(&self, a: u32) -> bool {
        self.jacobson[a as usize]
    }

    pub fn inverse(&self, a: u32) -> Option<u32> {
        self.units[a as usize].then_some(self.inverse[a as usize])
    }

    pub fn units_list(&self) -> Vec<u32> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }
    pub fn nilradical(&self) -> Vec<u32> {
        self.elements().filter(|&a| self.is_nilpotent(a)).collect()
    }
    pub fn jacobson_radical(&self) -> Vec<u32> {
        self.elements().filter(|&a| self.in_jacobson(a)).collect()
    }
    pub fn idempotents_list(&self) -> Vec<u32> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }
    pub fn zero_divisors_list(&self) -> Vec<u32> {
        self.elements()
            .filter(|&a| self.is_zero_divisor(a))
            .collect()
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    /// Least k >= 1 with nil(R)^k = 0 (1 for reduced rings).
    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency_index
    }

    pub fn is_reduced(&self) -> bool {
        self.nilpotency_index == 1
    }
    pub fn is_indecomposable(&self) -> bool {
        self.primitive_idempotents.len() == 1
    }
    /// Finite commutative: local iff indecomposable.
    pub fn is_local(&self) -> bool {
        self.is_indecomposable()
    }
    pub fn is_field(&self) -> bool {
        self.units.iter().filter(|&&u| u).count() == self.size() - 1
    }
    pub fn is_domain(&self) -> bool {
        self.elements().filter(|&a| self.is_zero_divisor(a)).count() <= 1
    }

    /// Special principal ideal ring: local with principal maximal ideal.
    pub fn is_spir(&self) -> bool {
        if !self.is_local() {
            return false;
        }
        let m: Vec<u32> = self.elements().filter(|&a| !self.is_unit(a)).collect();
        self.elements()
            .any(|a| !self.is_unit(a) && self.principal_ideal(a) == m)
    }

    pub fn primitive_idempotents(&self) -> &[u32] {
        &self.primitive_idempotents
    }

    /// Local components with their embedding idempotents. A local ring is its
    /// own single component.
    pub fn local_components(self: &Arc<Self>) -> Vec<(Arc<FiniteRing>, u32)> {
        if self.components.is_empty() {
            vec![(self.clone(), self.one)]
        } else {
            self.components
                .iter()
                .cloned()
                .zip(self.primitive_idempotents.iter().copied())
                .collect()
        }
    }

    pub fn component_count(&self) -> usize {
        self.primitive_idempotents.len()
    }

    /// Projection of an element into local component `j`.
    pub fn component_index(&self, j: usize, a: u32) -> u32 {
        if self.components.is_empty() {
            a
        } else {
            self.component_proj[j][a as usize]
        }
    }

    /// Embed a component element back into the ring.
    pub fn component_embed(&self, j: usize, c: u32) -> u32 {
        if self.components.is_empty() {
            c
        } else {
            match &*self.components[j].raw.ops {
                Ops::Subset { carrier, .. } => carrier[c as usize],
                _ => unreachable!("components are carrier subsets"),
            }
        }
    }

    /// R/nil(R) with its projection (identity for reduced rings).
    pub fn mod_nil(self: &Arc<Self>) -> (Arc<FiniteRing>, Arc<Vec<u32>>) {
        match &self.mod_nil {
            None => (
                self.clone(),
                Arc::new((0..self.size() as u32).collect::<Vec<u32>>()),
            ),
            Some((q, p)) => (q.clone(), p.clone()),
        }
    }

    pub fn maximal_ideals(&self) -> &[Vec<u32>] {
        &self.maximal_ideals
    }

    // -- ideals ------------------------------------------------------------

    /// Ra = {ra : r in R}, sorted.
    pub fn principal_ideal(&self, a: u32) -> Vec<u32> {
        let mut v: Vec<u32> = self.elements().map(|r| self.mul(r, a)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// a | b, i.e. b in Ra.
    pub fn divides(&self, a: u32, b: u32) -> bool {
        self.elements().any(|r| self.mul(r, a) == b)
    }

    /// ann(a) = {c : ca = 0}, sorted.
    pub fn annihilator(&self, a: u32) -> Vec<u32> {
        self.elements().filter(|&c| self.mul(c, a) == 0).collect()
    }

    /// All x with a·x = c.
    pub fn solve_mul(&self, a: u32, c: u32) -> Vec<u32> {
        self.elements().filter(|&x| self.mul(a, x) == c).collect()
    }

    /// Additive closure of a set (subgroup generated by it).
    pub fn additive_closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.size()];
        seen[0] = true;
        let mut frontier: Vec<u32> = vec![0];
        for &g in gens {
            if !seen[g as usize] {
                seen[g as usize] = true;
                frontier.push(g);
            }
        }
        let mut i = 0;
        while i < frontier.len() {
            let x = frontier[i];
            i += 1;
            for &g in gens {
                let y = self.add(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    frontier.push(y);
                }
            }
        }
        let mut out: Vec<u32> = frontier;
        out.sort_unstable();
        out
    }

    /// k-th power of a set ideal, as a sorted element set.
    pub fn ideal_power(&self, ideal: &[u32], k: usize) -> Vec<u32> {
        let mut cur: Vec<u32> = ideal.to_vec();
        cur.sort_unstable();
        for _ in 1..k {
            let mut prods = Vec::new();
            for &a in &cur {
                for &b in ideal {
                    prods.push(self.mul(a, b));
                }
            }
            prods.sort_unstable();
            prods.dedup();
            cur = self.additive_closure(&prods);
        }
        cur
    }

    // -- labels ------------------------------------------------------------

    /// Canonical textual label of an element.
    pub fn elem_label(&self, a: u32) -> String {
        self.raw.elem_label(a)
    }

    /// Parse an element label back into an index.
    pub fn parse_elem(&self, text: &str) -> Result<u32> {
        self.raw.parse_elem(text)
    }

    /// Assembled structural summary.
    pub fn structure_report(self: &Arc<Self>) -> StructureReport {
        let labels =
            |v: Vec<u32>| -> Vec<String> { v.into_iter().map(|a| self.elem_label(a)).collect() };
        StructureReport {
            label: self.label.clone(),
            size: self.size(),
            units: labels(self.units_list()),
            zero_divisors: labels(self.zero_divisors_list()),
            nilradical: labels(self.nilradical()),
            idempotents: labels(self.idempotents_list()),
            is_field: self.is_field(),
            is_domain: self.is_domain(),
            is_local: self.is_local(),
            is_reduced: self.is_reduced(),
            is_indecomposable: self.is_indecomposable(),
            is_spir: self.is_spir(),
            characteristic: self.characteristic,
            nilpotency_index: self.nilpotency_index,
            local_components: self
                .local_components()
                .iter()
                .map(|(c, e)| (format!("size {}", c.size()), self.elem_label(*e)))
                .collect(),
        }
    }
}

fn render_mon(exps: &[u32], vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        if e == 1 {
            parts.push(vars[i].clone());
        } else if e > 1 {
            parts.push(format!("{}^{}", vars[i], e));
        }
    }
    parts.join("*")
}

pub(crate) fn strip_parens(s: &str) -> Option<&str> {
    let s = s.trim();
    if !s.starts_with('(') || !s.ends_with(')') {
        return None;
    }
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i != s.len() - 1 {
                    return None;
                }
            }
            _ => {}
        }
    }
    Some(&s[1..s.len() - 1])
}

pub(crate) fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts
}

/// Split "a+b-c" at top level into signed chunks.
pub(crate) fn split_signed(s: &str) -> Vec<(i32, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut sign = 1i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                if i > start {
                    out.push((sign, s[start..i].trim()));
                    sign = 1;
                }
                if c == '-' {
                    sign = -sign;
                }
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((sign, s[start..].trim()));
    out
}

/// Structural summary of a ring (element sets rendered as labels).
#[derive(Debug, Clone, serde::Serialize)]
pub struct StructureReport {
    pub label: String,
    pub size: usize,
    pub units: Vec<String>,
    pub zero_divisors: Vec<String>,
    pub nilradical: Vec<String>,
    pub idempotents: Vec<String>,
    pub is_field: bool,
    pub is_domain: bool,
    pub is_local: bool,
    pub is_reduced: bool,
    pub is_indecomposable: bool,
    pub is_spir: bool,
    pub characteristic: usize,
    pub nilpotency_index: usize,
    pub local_components: Vec<(String, String)>,
}

// ---------------------------------------------------------------------------
// Building
// ---------------------------------------------------------------------------

/// Realize a ring spec. The carrier cap and table cap come from `opts`.
pub fn build_ring(spec: &RingSpec, opts: &BuildOptions) -> Result<Arc<FiniteRing>> {
    let label = render_ring_spec(spec);
    match spec {
        RingSpec::Modular(n) => {
            if *n as usize > opts.size_cap {
                return Err(Error::NotFinite {
                    variable: String::new(),
                    detail: format!("Z({n}) exceeds the size cap {}", opts.size_cap),
                });
            }
            let raw = RawRing {
                size: *n as usize,
                ops: Box::new(Ops::Modular { n: *n }),
                tables: None,
            };
            let one = raw.one_index();
            from_raw(label, Some(spec.clone()), raw, one, opts)
        }
        RingSpec::Product(fs) => {
            let comps: Vec<Arc<FiniteRing>> = fs
                .iter()
                .map(|f| build_ring(f, opts))
                .collect::<Result<_>>()?;
            let mut size: u128 = 1;
            for c in &comps {
                size *= c.size() as u128;
                if size > opts.size_cap as u128 {
                    return Err(Error::NotFinite {
                        variable: String::new(),
                        detail: format!("product exceeds the size cap {}", opts.size_cap),
                    });
                }
            }
            let raw = RawRing {
                size: size as usize,
                ops: Box::new(Ops::Product { comps }),
                tables: None,
            };
            let one = raw.one_index();
            from_raw(label, Some(spec.clone()), raw, one, opts)
        }
        RingSpec::PolyQuotient {
            base,
            vars,
            relations,
        } => {
            let n = match **base {
                RingSpec::Modular(n) => n,
                _ => {
                    return Err(Error::Semantic(
                        "polynomial quotients are only supported over Z(n)".into(),
                    ))
                }
            };
            let data = realize_poly_quotient(n, vars, relations, opts.size_cap)?;
            let size = data.size;
            let raw = RawRing {
                size,
                ops: Box::new(Ops::Basis(Arc::new(data))),
                tables: None,
            };
            from_raw(label, Some(spec.clone()), raw, 1, opts)
        }
        RingSpec::Idealization { base, modulus } => {
            let base_ring = build_ring(base, opts)?;
            if base_ring.characteristic() % *modulus as usize != 0 {
                return Err(Error::Semantic(format!(
                    "idealization modulus {modulus} does not divide the characteristic {}",
                    base_ring.characteristic()
                )));
            }
            let m_elem = base_ring.from_int(*modulus);
            let ideal = base_ring.principal_ideal(m_elem);
            let (rep, coset) = coset_structure(&base_ring.raw, &ideal);
            let module_size = rep.len();
            let size = base_ring.size() * module_size;
            if size > opts.size_cap {
                return Err(Error::NotFinite {
                    variable: String::new(),
                    detail: format!("idealization exceeds the size cap {}", opts.size_cap),
                });
            }
            let one = base_ring.one() * module_size as u32;
            let raw = RawRing {
                size,
                ops: Box::new(Ops::Idealization {
                    base: base_ring,
                    module_size,
                    rep: Arc::new(rep),
                    coset: Arc::new(coset),
                }),
                tables: None,
            };
            from_raw(label, Some(spec.clone()), raw, one, opts)
        }
    }
}

/// Convenience: parse then build with default options.
pub fn build(text: &str) -> Result<Arc<FiniteRing>> {
    build_ring(&crate::dsl::parse_ring_spec(text)?, &BuildOptions::default())
}

/// Direct product of already-built rings (used by the rebuild check).
pub fn product_of_rings(comps: Vec<Arc<FiniteRing>>, label: String) -> Result<Arc<FiniteRing>> {
    let size: usize = comps.iter().map(|c| c.size()).product();
    let raw = RawRing {
        size,
        ops: Box::new(Ops::Product { comps }),
        tables: None,
    };
    let one = raw.one_index();
    from_raw(label, None, raw, one, &BuildOptions::default())
}

/// Quotient by an ideal given as an element set. Verifies the ideal axioms
/// and returns the ring with the projection map.
pub fn quotient_ring(
    r: &Arc<FiniteRing>,
    ideal: &[u32],
) -> Result<(Arc<FiniteRing>, Arc<Vec<u32>>)> {
    let mut sorted = ideal.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.first() != Some(&0) {
        return Err(Error::NotAnIdeal {
            a: "0".into(),
            b: "0".into(),
            detail: "does not contain 0".into(),
        });
    }
    let inset = |x: u32| sorted.binary_search(&x).is_ok();
    for &a in &sorted {
        for &b in &sorted {
            if !inset(r.add(a, b)) {
                return Err(Error::NotAnIdeal {
                    a: r.elem_label(a),
                    b: r.elem_label(b),
                    detail: "not closed under addition".into(),
                });
            }
        }
    }
    for x in r.elements() {
        for &a in &sorted {
            if !inset(r.mul(x, a)) {
                return Err(Error::NotAnIdeal {
                    a: r.elem_label(x),
                    b: r.elem_label(a),
                    detail: "not closed under outer multiplication".into(),
                });
            }
        }
    }
    let (rep, proj) = coset_structure(&r.raw, &sorted);
    let size = rep.len();
    let label = format!("{}/I{}", r.label(), sorted.len());
    let proj = Arc::new(proj);
    let raw = RawRing {
        size,
        ops: Box::new(Ops::Quotient {
            parent: r.raw.clone(),
            proj: proj.clone(),
            rep: Arc::new(rep),
        }),
        tables: None,
    };
    let one = proj[r.one() as usize];
    let q = from_raw(label, None, raw, one, &BuildOptions::default())?;
    Ok((q, proj))
}

/// Canonical coset representatives (minimal index) and the projection map
/// for the additive cosets of a subgroup.
fn coset_structure(raw: &RawRing, subgroup: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let size = raw.size;
    let mut proj = vec![u32::MAX; size];
    let mut rep = Vec::new();
    for x in 0..size as u32 {
        if proj[x as usize] != u32::MAX {
            continue;
        }
        let id = rep.len() as u32;
        rep.push(x);
        for &i in subgroup {
            proj[raw.add(x, i) as usize] = id;
        }
    }
    (rep, proj)
}

fn subring_by_idempotent(
    parent: &Arc<FiniteRing>,
    e: u32,
    opts: &BuildOptions,
) -> Result<(Arc<FiniteRing>, Arc<Vec<u32>>)> {
    let carrier: Vec<u32> = parent
        .elements()
        .filter(|&x| parent.mul(x, e) == x)
        .collect();
    let inv: HashMap<u32, u32> = carrier
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i as u32))
        .collect();
    let proj: Vec<u32> = parent.elements().map(|x| inv[&parent.mul(x, e)]).collect();
    let size = carrier.len();
    let one = inv[&e];
    let raw = RawRing {
        size,
        ops: Box::new(Ops::Subset {
            parent: parent.raw.clone(),
            carrier: Arc::new(carrier),
            inv: Arc::new(inv),
        }),
        tables: None,
    };
    let label = format!("{}|e={}", parent.label(), parent.elem_label(e));
    let c = from_raw(label, None, raw, one, opts)?;
    Ok((c, Arc::new(proj)))
}

/// Core build pipeline: memoize tables, compute every structural cache.
fn from_raw(
    label: String,
    spec: Option<RingSpec>,
    mut raw: RawRing,
    one: u32,
    opts: &BuildOptions,
) -> Result<Arc<FiniteRing>> {
    let size = raw.size;
    if size == 0 {
        return Err(Error::Semantic("empty carrier".into()));
    }
    if size <= opts.table_cap && raw.tables.is_none() {
        let mut add = vec![0u32; size * size];
        let mut mul = vec![0u32; size * size];
        for a in 0..size as u32 {
            for b in 0..size as u32 {
                add[a as usize * size + b as usize] = raw.add_raw(a, b);
                mul[a as usize * size + b as usize] = raw.mul_raw(a, b);
            }
        }
        raw.tables = Some(Arc::new(Tables { add, mul }));
    }

    let neg_table: Vec<u32> = (0..size as u32).map(|a| raw.neg_raw(a)).collect();

    // zero divisors: a with ab = 0 for some b != 0 (so 0 itself qualifies)
    let mut zero_divisors = vec![false; size];
    for a in 0..size as u32 {
        zero_divisors[a as usize] = (1..size as u32).any(|b| raw.mul(a, b) == 0);
    }
    let mut units = vec![false; size];
    let mut inverse = vec![0u32; size];
    for a in 0..size as u32 {
        if let Some(b) = (0..size as u32).find(|&b| raw.mul(a, b) == one) {
            units[a as usize] = true;
            inverse[a as usize] = b;
        }
    }
    if size > 1 {
        if let Some(a) = (0..size).find(|&a| units[a] == zero_divisors[a]) {
            return Err(Error::Inconsistency {
                flag: "unit-vs-zero-divisor".into(),
                ring: label,
                witness: format!("element {a}"),
            });
        }
    }

    // nilpotents by power doubling
    let steps = usize::BITS - (size - 1).leading_zeros() + 1;
    let mut nilpotents = vec![false; size];
    for a in 0..size as u32 {
        let mut x = a;
        for _ in 0..steps {
            x = raw.mul(x, x);
        }
        nilpotents[a as usize] = x == 0;
    }

    let idempotents: Vec<bool> = (0..size as u32).map(|a| raw.mul(a, a) == a).collect();

    // J(R) = {x : 1 - xy is a unit for all y}
    let jacobson: Vec<bool> = (0..size as u32)
        .map(|x| {
            (0..size as u32).all(|y| {
                let p = raw.mul(x, y);
                let v = raw.add(one, neg_table[p as usize]);
                units[v as usize]
            })
        })
        .collect();

    let characteristic = {
        let mut k = 1usize;
        let mut acc = one;
        while acc != 0 {
            acc = raw.add(acc, one);
            k += 1;
        }
        k
    };

    let ring = FiniteRing {
        id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
        label,
        spec,
        raw,
        one,
        neg_table,
        units,
        inverse,
        zero_divisors,
        nilpotents,
        jacobson,
        idempotents,
        characteristic,
        nilpotency_index: 1,
        primitive_idempotents: Vec::new(),
        components: Vec::new(),
        component_proj: Vec::new(),
        mod_nil: None,
        maximal_ideals: Vec::new(),
    };
    let mut arc = Arc::new(ring);

    // nilpotency index of the nilradical
    let nil: Vec<u32> = arc.nilradical();
    let nilpotency_index = if nil.len() == 1 {
        1
    } else {
        let mut k = 1;
        let mut cur = nil.clone();
        while cur.len() > 1 {
            k += 1;
            let mut prods = Vec::new();
            for &a in &cur {
                for &b in &nil {
                    prods.push(arc.mul(a, b));
                }
            }
            prods.sort_unstable();
            prods.dedup();
            cur = arc.additive_closure(&prods);
        }
        k
    };

    // primitive idempotents: minimal nonzero under f <= e iff fe = f
    let idems: Vec<u32> = arc.idempotents_list();
    let mut primitive = Vec::new();
    for &e in &idems {
        if e == 0 {
            continue;
        }
        let minimal = idems
            .iter()
            .all(|&f| f == 0 || f == e || arc.mul(f, e) != f);
        if minimal {
            primitive.push(e);
        }
    }
    primitive.sort_unstable();

    {
        let inner = Arc::get_mut(&mut arc).expect("sole owner");
        inner.nilpotency_index = nilpotency_index;
        inner.primitive_idempotents = primitive;
    }

    // components (only when decomposable; a local ring is its own component)
    if arc.primitive_idempotents.len() > 1 {
        let prims = arc.primitive_idempotents.clone();
        let mut comps = Vec::new();
        let mut projs = Vec::new();
        for &e in &prims {
            let (c, p) = subring_by_idempotent(&arc, e, opts)?;
            comps.push(c);
            projs.push(p);
        }
        let inner = Arc::get_mut(&mut arc).expect("sole owner");
        inner.components = comps;
        inner.component_proj = projs;
    }

    // mod-nil quotient (None for reduced rings)
    if nil.len() > 1 {
        let q = quotient_ring(&arc, &nil)?;
        let inner = Arc::get_mut(&mut arc).expect("sole owner");
        inner.mod_nil = Some(q);
    }

    // maximal ideals from the local decomposition
    let maximal_ideals: Vec<Vec<u32>> = if arc.components.is_empty() {
        vec![arc.elements().filter(|&a| !arc.is_unit(a)).collect()]
    } else {
        (0..arc.components.len())
            .map(|j| {
                arc.elements()
                    .filter(|&a| !arc.components[j].is_unit(arc.component_proj[j][a as usize]))
                    .collect()
            })
            .collect()
    };
    let inner = Arc::get_mut(&mut arc).expect("sole owner");
    inner.maximal_ideals = maximal_ideals;

    Ok(arc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(text: &str) -> Arc<FiniteRing> {
        build(text).unwrap()
    }

    fn labels(r: &Arc<FiniteRing>, v: Vec<u32>) -> Vec<String> {
        v.into_iter().map(|a| r.elem_label(a)).collect()
    }

    /// Exhaustive commutative-ring axiom check (used for every corpus ring
    /// of size <= 256).
    pub(crate) fn assert_ring_axioms(r: &FiniteRing) {
        let n = r.size() as u32;
        assert!(n <= 256, "axiom check is exhaustive; keep it small");
        for a in 0..n {
            assert_eq!(r.add(a, 0), a);
            assert_eq!(r.add(a, r.neg(a)), 0);
            assert_eq!(r.mul(a, r.one()), a);
            for b in 0..n {
                assert_eq!(r.add(a, b), r.add(b, a));
                assert_eq!(r.mul(a, b), r.mul(b, a));
                for c in 0..n {
                    assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
                    assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
                    assert_eq!(
                        r.mul(a, r.add(b, c)),
                        r.add(r.mul(a, b), r.mul(a, c)),
                        "distributivity fails in {}",
                        r.label()
                    );
                }
            }
        }
    }

    #[test]
    fn modular_basics() {
        let r = b("Z(4)");
        assert_eq!(r.size(), 4);
        assert_eq!(labels(&r, r.units_list()), ["1", "3"]);
        assert_eq!(labels(&r, r.nilradical()), ["0", "2"]);
        assert!(r.is_local() && r.is_spir() && !r.is_field());
        assert_eq!(r.nilpotency_index(), 2);
        assert_eq!(r.characteristic(), 4);
        assert_ring_axioms(&r);
    }

    #[test]
    fn z6_structure() {
        let r = b("Z(6)");
        assert_eq!(labels(&r, r.units_list()), ["1", "5"]);
        assert_eq!(labels(&r, r.idempotents_list()), ["0", "1", "3", "4"]);
        let comps = r.local_components();
        let mut sizes: Vec<usize> = comps.iter().map(|(c, _)| c.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [2, 3]);
        assert!(r.is_reduced() && !r.is_local());
        assert_ring_axioms(&r);
    }

    #[test]
    fn poly_quotient_square_zero_maximal_ideal() {
        // Z(2)[s,t]/(s^2, s*t, t^2): 8 elements a + bs + ct
        let r = b("Z(2)[s,t]/(s^2,s*t,t^2)");
        assert_eq!(r.size(), 8);
        assert_eq!(r.units_list().len(), 4); // 1 + M
        assert!(r.is_local() && !r.is_spir());
        assert_eq!(r.nilpotency_index(), 2);
        // M^2 = 0
        let m: Vec<u32> = r.elements().filter(|&a| !r.is_unit(a)).collect();
        assert_eq!(r.ideal_power(&m, 2), vec![0]);
        assert_ring_axioms(&r);
    }

    #[test]
    fn poly_quotient_field_f4() {
        let r = b("Z(2)[u]/(u^2+u+1)");
        assert_eq!(r.size(), 4);
        assert!(r.is_field());
        for a in r.elements().skip(1) {
            assert!(r.inverse(a).is_some(), "nonzero {} not invertible", a);
        }
        // u^3 = 1
        let u = r.parse_elem("u").unwrap();
        assert_eq!(r.pow(u, 3), r.one());
        assert_ring_axioms(&r);
    }

    #[test]
    fn poly_quotient_z4_t_cubed() {
        let r = b("Z(4)[t]/(t^3)");
        assert_eq!(r.size(), 64);
        assert!(r.is_local());
        assert_ring_axioms(&r);
    }

    #[test]
    fn poly_quotient_z4_t2_2t() {
        let r = b("Z(4)[t]/(t^2,2*t)");
        assert_eq!(r.size(), 8);
        assert!(r.is_local() && !r.is_spir());
        let m: Vec<u32> = r.elements().filter(|&a| !r.is_unit(a)).collect();
        assert_eq!(m.len(), 4);
        assert_eq!(r.ideal_power(&m, 2), vec![0]);
        assert_ring_axioms(&r);
    }

    #[test]
    fn infinite_quotient_rejected() {
        match build("Z(4)[t]/(2*t)") {
            Err(Error::NotFinite { variable, .. }) => assert_eq!(variable, "t"),
            other => panic!("expected not-finite, got {other:?}"),
        }
    }

    #[test]
    fn zero_ring_rejected() {
        assert!(matches!(build("Z(2)[v]/(v,1)"), Err(Error::Semantic(_))));
    }

    #[test]
    fn idealization_z4_mod2() {
        // Id(Z(4),2): Z4 (+) Z4/(2), 8 elements, local with M^2 != 0
        let r = b("Id(Z(4),2)");
        assert_eq!(r.size(), 8);
        assert!(r.is_local());
        assert_ring_axioms(&r);
        // (0,1) squares to zero; (2,0)*(0,1) = (0, 2*1) = (0,0) since 2*1 = 0 mod 2
        let a = r.parse_elem("(0,1)").unwrap();
        assert_eq!(r.mul(a, a), 0);
    }

    #[test]
    fn idealization_modulus_must_divide_characteristic() {
        assert!(matches!(build("Id(Z(4),3)"), Err(Error::Semantic(_))));
    }

    #[test]
    fn principal_ideals_and_annihilators() {
        let z4 = b("Z(4)");
        assert_eq!(z4.principal_ideal(2), vec![0, 2]);
        assert_eq!(z4.annihilator(2), vec![0, 2]);
        assert_eq!(z4.annihilator(z4.one()), vec![0]);
        let z6 = b("Z(6)");
        assert!(z6.divides(2, 4) && z6.divides(4, 2));
    }

    #[test]
    fn quotients() {
        let z4 = b("Z(4)");
        let (q, proj) = quotient_ring(&z4, &z4.nilradical()).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(proj[2], proj[0]);

        let z6 = b("Z(6)");
        let (q6, _) = quotient_ring(&z6, &[0]).unwrap();
        assert_eq!(q6.size(), 6);
        assert!(find_isomorphism(&z6, &q6).is_some());

        let stq = b("Z(2)[s,t]/(s^2,s*t,t^2)");
        let m: Vec<u32> = stq.elements().filter(|&a| !stq.is_unit(a)).collect();
        let (f2, _) = quotient_ring(&stq, &m).unwrap();
        assert_eq!(f2.size(), 2);
        assert!(f2.is_field());
    }

    #[test]
    fn non_ideal_rejected() {
        let z6 = b("Z(6)");
        // {0, 1} is not closed under addition into itself... it is (1+1=2 no).
        assert!(matches!(
            quotient_ring(&z6, &[0, 1]),
            Err(Error::NotAnIdeal { .. })
        ));
    }

    #[test]
    fn jacobson_equals_nil_on_corpus() {
        for spec in [
            "Z(2)", "Z(4)", "Z(6)", "Z(8)", "Z(12)", "Z(2)xZ(4)",
            "Z(2)[s,t]/(s^2,s*t,t^2)", "Z(4)[t]/(t^2,2*t)", "Z(2)[u]/(u^2+u+1)",
            "Id(Z(4),2)",
        ] {
            let r = b(spec);
            assert_eq!(r.jacobson_radical(), r.nilradical(), "J != nil in {spec}");
            for a in r.elements() {
                assert_eq!(r.is_unit(a), !r.is_zero_divisor(a), "{spec} elem {a}");
            }
        }
    }

    #[test]
    fn rebuild_from_components_is_isomorphic() {
        for spec in ["Z(6)", "Z(12)", "Z(2)xZ(4)", "Z(2)xZ(2)xZ(2)", "Z(10)", "Z(15)"] {
            let r = b(spec);
            let comps: Vec<Arc<FiniteRing>> =
                r.local_components().into_iter().map(|(c, _)| c).collect();
            let p = product_of_rings(comps, format!("rebuild {spec}")).unwrap();
            assert!(
                find_isomorphism(&r, &p).is_some(),
                "{spec} not isomorphic to the product of its local components"
            );
        }
    }

    #[test]
    fn product_labels_round_trip() {
        let r = b("Z(2)xZ(3)");
        for a in r.elements() {
            let l = r.elem_label(a);
            assert_eq!(r.parse_elem(&l).unwrap(), a, "label {l}");
        }
        let e = r.parse_elem("(1,2)").unwrap();
        assert_eq!(r.elem_label(e), "(1,2)");
    }

    #[test]
    fn basis_labels_round_trip() {
        for spec in ["Z(2)[s,t]/(s^2,s*t,t^2)", "Z(4)[t]/(t^2,2*t)", "Z(2)[u]/(u^2+u+1)"] {
            let r = b(spec);
            for a in r.elements() {
                let l = r.elem_label(a);
                assert_eq!(r.parse_elem(&l).unwrap(), a, "{spec}: label {l}");
            }
        }
    }

    #[test]
    fn maximal_ideals_match_components() {
        let z6 = b("Z(6)");
        let mut ms = z6.maximal_ideals().to_vec();
        ms.sort();
        assert_eq!(ms, vec![vec![0, 2, 4], vec![0, 3]]);
        let z4 = b("Z(4)");
        assert_eq!(z4.maximal_ideals(), &[vec![0, 2]]);
    }

    #[test]
    fn characteristic_and_from_int() {
        let r = b("Z(6)");
        assert_eq!(r.characteristic(), 6);
        assert_eq!(r.from_int(8), r.from_int(2));
        let f4 = b("Z(2)[u]/(u^2+u+1)");
        assert_eq!(f4.characteristic(), 2);
    }
}
