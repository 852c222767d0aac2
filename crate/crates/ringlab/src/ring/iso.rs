//! Ring isomorphism search for small carriers.
//!
//! Finds a generating set of the first ring (closure under + and · starting
//! from {0, 1}), then tries images for the generators in the second ring,
//! filtered by elementary invariants, replaying the closure derivation and
//! verifying the full homomorphism property.

use super::FiniteRing;

#[derive(Clone, Copy)]
enum Deriv {
    Zero,
    One,
    Gen(usize),
    Add(u32, u32),
    Mul(u32, u32),
}

/// Elements of the subring generated by {0,1} ∪ gens, with one derivation
/// per element, in discovery order.
fn generate(r: &FiniteRing, gens: &[u32]) -> Vec<(u32, Deriv)> {
    let mut deriv: Vec<Option<Deriv>> = vec![None; r.size()];
    let mut order: Vec<(u32, Deriv)> = Vec::new();
    let push = |x: u32, d: Deriv, deriv: &mut Vec<Option<Deriv>>, order: &mut Vec<(u32, Deriv)>| {
        if deriv[x as usize].is_none() {
            deriv[x as usize] = Some(d);
            order.push((x, d));
        }
    };
    push(0, Deriv::Zero, &mut deriv, &mut order);
    push(r.one(), Deriv::One, &mut deriv, &mut order);
    for (i, &g) in gens.iter().enumerate() {
        push(g, Deriv::Gen(i), &mut deriv, &mut order);
    }
    let mut i = 0;
    while i < order.len() {
        let (x, _) = order[i];
        for j in 0..=i {
            let (y, _) = order[j];
            push(r.add(x, y), Deriv::Add(x, y), &mut deriv, &mut order);
            push(r.mul(x, y), Deriv::Mul(x, y), &mut deriv, &mut order);
        }
        i += 1;
    }
    order
}

fn generating_set(r: &FiniteRing) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    loop {
        let closure = generate(r, &gens);
        if closure.len() == r.size() {
            return gens;
        }
        let mut seen = vec![false; r.size()];
        for (x, _) in &closure {
            seen[*x as usize] = true;
        }
        let next = (0..r.size() as u32)
            .find(|&x| !seen[x as usize])
            .expect("closure incomplete");
        gens.push(next);
    }
}

fn additive_order(r: &FiniteRing, a: u32) -> usize {
    let mut k = 1;
    let mut acc = a;
    while acc != 0 {
        acc = r.add(acc, a);
        k += 1;
    }
    k
}

fn profile(r: &FiniteRing, a: u32) -> (usize, bool, bool, bool, bool) {
    (
        additive_order(r, a),
        r.is_unit(a),
        r.is_nilpotent(a),
        r.is_idempotent(a),
        r.is_zero_divisor(a),
    )
}

/// Search for a ring isomorphism; returns the element map if one exists.
/// Intended for small rings (the rebuild checks cap at size 64).
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<u32>> {
    if a.size() != b.size() {
        return None;
    }
    let gens = generating_set(a);
    let plan = generate(a, &gens);
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| {
            let p = profile(a, g);
            (0..b.size() as u32)
                .filter(|&h| profile(b, h) == p)
                .collect()
        })
        .collect();
    let mut images = vec![0u32; gens.len()];
    try_assign(a, b, &plan, &candidates, &mut images, 0)
}

fn try_assign(
    a: &FiniteRing,
    b: &FiniteRing,
    plan: &[(u32, Deriv)],
    candidates: &[Vec<u32>],
    images: &mut Vec<u32>,
    k: usize,
) -> Option<Vec<u32>> {
    if k == candidates.len() {
        return replay(a, b, plan, images);
    }
    for &cand in &candidates[k] {
        images[k] = cand;
        if let Some(map) = try_assign(a, b, plan, candidates, images, k + 1) {
            return Some(map);
        }
    }
    None
}

fn replay(a: &FiniteRing, b: &FiniteRing, plan: &[(u32, Deriv)], images: &[u32]) -> Option<Vec<u32>> {
    let mut map = vec![u32::MAX; a.size()];
    let mut hit = vec![false; b.size()];
    for &(x, d) in plan {
        let y = match d {
            Deriv::Zero => 0,
            Deriv::One => b.one(),
            Deriv::Gen(i) => images[i],
            Deriv::Add(p, q) => b.add(map[p as usize], map[q as usize]),
            Deriv::Mul(p, q) => b.mul(map[p as usize], map[q as usize]),
        };
        map[x as usize] = y;
        if hit[y as usize] {
            return None; // not injective
        }
        hit[y as usize] = true;
    }
    // full homomorphism check
    for x in 0..a.size() as u32 {
        for y in 0..a.size() as u32 {
            if map[a.add(x, y) as usize] != b.add(map[x as usize], map[y as usize])
                || map[a.mul(x, y) as usize] != b.mul(map[x as usize], map[y as usize])
            {
                return None;
            }
        }
    }
    Some(map)
}
