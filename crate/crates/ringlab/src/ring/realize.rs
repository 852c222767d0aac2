//! Realization of Z(n)[vars]/(relations) on a finite monomial basis.
//!
//! The quotient is computed as an abelian group Z^M / L where M is the set
//! of monomials up to a degree bound and L is the lattice spanned by n·m for
//! every monomial m together with every monomial shift of every relation that
//! fits under the bound. Integer row reduction (entries normalized mod n,
//! which is valid because n·m always lies in L) yields, for each monomial, a
//! pivot d | n: monomials with pivot 1 rewrite into strictly smaller ones,
//! the rest form the basis with coefficient moduli d.
//!
//! The bound escalates until the basis is closed under multiplication and the
//! reduction map commutes with multiplication by variables (checked, with any
//! violation fed back into the lattice). When that fixpoint is reached the
//! candidate is the quotient ring: it maps onto the true quotient and the
//! true quotient maps onto it.

use crate::dsl::{mon_cmp, RelPoly};
use crate::error::{Error, Result};
use std::collections::HashMap;

type Mon = Vec<u32>;

/// A realized quotient: basis monomials (ascending graded-lex, `[0,..]` first),
/// their coefficient moduli, and multiplication structure constants.
#[derive(Debug)]
pub(crate) struct BasisData {
    pub vars: Vec<String>,
    pub mons: Vec<Mon>,
    pub moduli: Vec<u64>,
    /// mul[i][j] = canonical coefficient vector of basis\[i\]·basis\[j\].
    pub mul: Vec<Vec<Vec<u64>>>,
    /// Canonical coefficient vector of each generator variable.
    pub var_elems: Vec<Vec<u64>>,
    pub size: usize,
}

fn monomials_up_to(num_vars: usize, deg: u32) -> Vec<Mon> {
    fn rec(out: &mut Vec<Mon>, cur: &mut Mon, var: usize, left: u32) {
        if var == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[var] = e;
            rec(out, cur, var + 1, left - e);
        }
        cur[var] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; num_vars];
    rec(&mut out, &mut cur, 0, deg);
    out.sort_by(|a, b| mon_cmp(a, b));
    out
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

struct Lattice {
    ncols: usize,
    n: i64,
    /// pivots[j]: row with first nonzero (positive, dividing n) at column j.
    pivots: Vec<Vec<i64>>,
}

impl Lattice {
    fn new(ncols: usize, n: i64, rows: Vec<Vec<i64>>) -> Lattice {
        let mut lat = Lattice {
            ncols,
            n,
            pivots: vec![Vec::new(); ncols],
        };
        // n·e_j rows make every column full rank from the start.
        for j in 0..ncols {
            let mut r = vec![0i64; ncols];
            r[j] = n;
            lat.pivots[j] = r;
        }
        for r in rows {
            lat.insert(r);
        }
        lat.normalize();
        lat
    }

    fn center(&self, v: &mut [i64]) {
        for e in v.iter_mut() {
            *e = e.rem_euclid(self.n);
        }
    }

    /// Insert one lattice vector, refining pivots.
    fn insert(&mut self, mut r: Vec<i64>) {
        self.center(&mut r);
        let mut j = 0;
        while j < self.ncols {
            if r[j] == 0 {
                j += 1;
                continue;
            }
            let pj = self.pivots[j][j];
            let rem = r[j].rem_euclid(pj);
            if rem == 0 {
                let q = r[j] / pj;
                for k in j..self.ncols {
                    r[k] -= q * self.pivots[j][k];
                }
                self.center(&mut r);
                j += 1;
            } else {
                // gcd-combine with the pivot
                let (g, a, b) = ext_gcd(pj, r[j]);
                let up = pj / g;
                let ur = r[j] / g;
                let mut newp = vec![0i64; self.ncols];
                let mut rem_row = vec![0i64; self.ncols];
                for k in 0..self.ncols {
                    newp[k] = a * self.pivots[j][k] + b * r[k];
                    rem_row[k] = ur * self.pivots[j][k] - up * r[k];
                }
                self.center(&mut newp);
                self.center(&mut rem_row);
                if newp[j] == 0 {
                    // g divides n and n·e_j is in the lattice, so this only
                    // happens when g == n was reduced away; restore pivot n.
                    newp = vec![0; self.ncols];
                    newp[j] = self.n;
                }
                debug_assert!(newp[j] > 0 && self.n % newp[j] == 0);
                self.pivots[j] = newp;
                r = rem_row;
                // rem_row has zero at column j; continue inserting the rest
            }
        }
    }

    /// Reduce trailing entries of every pivot row so reduction is canonical.
    fn normalize(&mut self) {
        for j in (0..self.ncols).rev() {
            let row = std::mem::take(&mut self.pivots[j]);
            let row = self.reduce_tail(row, j);
            self.pivots[j] = row;
        }
    }

    fn reduce_tail(&self, mut row: Vec<i64>, j: usize) -> Vec<i64> {
        for k in j + 1..self.ncols {
            let dk = self.pivots[k][k];
            let q = row[k].div_euclid(dk);
            if q != 0 {
                for l in k..self.ncols {
                    row[l] -= q * self.pivots[k][l];
                }
            }
        }
        row
    }

    /// Canonical form: every coordinate in [0, d_j).
    fn reduce(&self, mut v: Vec<i64>) -> Vec<i64> {
        for j in 0..self.ncols {
            let dj = self.pivots[j][j];
            let q = v[j].div_euclid(dj);
            if q != 0 {
                for k in j..self.ncols {
                    v[k] -= q * self.pivots[j][k];
                }
            }
        }
        v
    }

    fn diag(&self, j: usize) -> i64 {
        self.pivots[j][j]
    }
}

pub(crate) fn realize_poly_quotient(
    n: u64,
    vars: &[String],
    relations: &[RelPoly],
    size_cap: usize,
) -> Result<BasisData> {
    const DEG_CAP: u32 = 40;
    const MON_CAP: usize = 6000;

    let nv = vars.len();
    let max_rel_deg = relations.iter().map(|r| r.total_degree()).max().unwrap_or(1);
    let mut bound = max_rel_deg.max(2);
    let mut widest_hint = vars.first().cloned().unwrap_or_default();

    loop {
        if bound > DEG_CAP {
            return Err(grow_error(&widest_hint, bound));
        }
        let mons_asc = monomials_up_to(nv, bound);
        if mons_asc.len() > MON_CAP {
            return Err(grow_error(&widest_hint, bound));
        }
        // Columns in descending graded-lex order: larger monomials rewrite
        // into smaller ones.
        let mons: Vec<Mon> = mons_asc.iter().rev().cloned().collect();
        let ncols = mons.len();
        let pos: HashMap<Mon, usize> = mons
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();

        // All shifts of all relations that fit under the bound.
        let mut rows = Vec::new();
        for rel in relations {
            let rdeg = rel.total_degree();
            for shift in &mons {
                let sdeg: u32 = shift.iter().sum();
                if sdeg + rdeg > bound {
                    continue;
                }
                let mut row = vec![0i64; ncols];
                for t in &rel.terms {
                    let m: Mon = t.exps.iter().zip(shift).map(|(a, b)| a + b).collect();
                    row[pos[&m]] += t.coeff as i64;
                }
                rows.push(row);
            }
        }
        let mut lat = Lattice::new(ncols, n as i64, rows);

        let phi = |lat: &Lattice, j: usize| -> Vec<i64> {
            let mut v = vec![0i64; ncols];
            v[j] = 1;
            lat.reduce(v)
        };

        let mut escalate = false;
        'saturate: loop {
            let basis: Vec<usize> = (0..ncols).filter(|&j| lat.diag(j) >= 2).collect();
            // The monomial 1 sits in the last column.
            if lat.diag(ncols - 1) < 2 {
                return Err(Error::Semantic(
                    "quotient collapses to the zero ring (1 = 0)".into(),
                ));
            }
            let top_deg = basis
                .iter()
                .map(|&j| mons[j].iter().sum::<u32>())
                .max()
                .unwrap_or(0);
            let work_deg = (2 * top_deg).max(max_rel_deg).max(top_deg + 1);
            if work_deg > bound {
                escalate = true;
                break 'saturate;
            }

            // Reduction must commute with multiplication by each variable on
            // every monomial in the working range; feed violations back in.
            let mut new_rows: Vec<Vec<i64>> = Vec::new();
            for j in 0..ncols {
                let mdeg: u32 = mons[j].iter().sum();
                if mdeg >= work_deg {
                    continue;
                }
                let fj = phi(&lat, j);
                for v in 0..nv {
                    let mut shifted = mons[j].clone();
                    shifted[v] += 1;
                    let lhs = phi(&lat, pos[&shifted]);
                    let mut rhs = vec![0i64; ncols];
                    for &b in &basis {
                        if fj[b] == 0 {
                            continue;
                        }
                        let mut bm = mons[b].clone();
                        bm[v] += 1;
                        let red = phi(&lat, pos[&bm]);
                        for k in 0..ncols {
                            rhs[k] += fj[b] * red[k];
                        }
                    }
                    let rhs = lat.reduce(rhs);
                    if lhs != rhs {
                        let diff: Vec<i64> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                        new_rows.push(diff);
                    }
                }
            }
            if new_rows.is_empty() {
                // Associativity of the induced product on basis triples.
                for &b1 in &basis {
                    for &b2 in &basis {
                        let m12: Mon = mons[b1].iter().zip(&mons[b2]).map(|(a, b)| a + b).collect();
                        let Some(&p12) = pos.get(&m12) else {
                            escalate = true;
                            break 'saturate;
                        };
                        let f12 = phi(&lat, p12);
                        for &b3 in &basis {
                            let lhs = mul_reduced(&lat, &pos, &mons, &basis, &f12, b3, ncols);
                            let m23: Mon =
                                mons[b2].iter().zip(&mons[b3]).map(|(a, b)| a + b).collect();
                            let f23 = phi(&lat, pos[&m23]);
                            let rhs = mul_reduced(&lat, &pos, &mons, &basis, &f23, b1, ncols);
                            if lhs != rhs {
                                let diff: Vec<i64> =
                                    lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                                new_rows.push(diff);
                            }
                        }
                    }
                }
            }
            if new_rows.is_empty() {
                break 'saturate;
            }
            for r in new_rows {
                lat.insert(r);
            }
            lat.normalize();
        }

        if escalate {
            let live: Vec<usize> = (0..ncols).filter(|&j| lat.diag(j) >= 2).collect();
            widest_hint = widest_var(vars, &mons, &live);
            bound += 1;
            continue;
        }

        // Converged: collect the basis in ascending order.
        let basis_desc: Vec<usize> = (0..ncols).filter(|&j| lat.diag(j) >= 2).collect();
        let basis_asc: Vec<usize> = basis_desc.iter().rev().copied().collect();
        let mut size: u128 = 1;
        for &j in &basis_asc {
            size *= lat.diag(j) as u128;
            if size > size_cap as u128 {
                return Err(Error::NotFinite {
                    variable: widest_var(vars, &mons, &basis_asc),
                    detail: format!("carrier exceeds the size cap {size_cap}"),
                });
            }
        }
        let to_basis_vec = |full: &[i64], basis_asc: &[usize]| -> Vec<u64> {
            basis_asc.iter().map(|&j| full[j] as u64).collect()
        };
        let r = basis_asc.len();
        let mut mul = vec![vec![Vec::new(); r]; r];
        for (i, &bi) in basis_asc.iter().enumerate() {
            for (j, &bj) in basis_asc.iter().enumerate() {
                let m: Mon = mons[bi].iter().zip(&mons[bj]).map(|(a, b)| a + b).collect();
                let red = phi(&lat, pos[&m]);
                mul[i][j] = to_basis_vec(&red, &basis_asc);
            }
        }
        let mut var_elems = Vec::new();
        for v in 0..nv {
            let mut m = vec![0u32; nv];
            m[v] = 1;
            let red = phi(&lat, pos[&m]);
            var_elems.push(to_basis_vec(&red, &basis_asc));
        }
        return Ok(BasisData {
            vars: vars.to_vec(),
            mons: basis_asc.iter().map(|&j| mons[j].clone()).collect(),
            moduli: basis_asc.iter().map(|&j| lat.diag(j) as u64).collect(),
            mul,
            var_elems,
            size: size as usize,
        });
    }
}

fn mul_reduced(
    lat: &Lattice,
    pos: &HashMap<Mon, usize>,
    mons: &[Mon],
    basis: &[usize],
    vec: &[i64],
    by: usize,
    ncols: usize,
) -> Vec<i64> {
    let mut out = vec![0i64; ncols];
    for &b in basis {
        if vec[b] == 0 {
            continue;
        }
        let m: Mon = mons[b].iter().zip(&mons[by]).map(|(a, c)| a + c).collect();
        let mut unit = vec![0i64; ncols];
        unit[pos[&m]] = 1;
        let red = lat.reduce(unit);
        for k in 0..ncols {
            out[k] += vec[b] * red[k];
        }
    }
    lat.reduce(out)
}

fn widest_var(vars: &[String], mons: &[Mon], basis: &[usize]) -> String {
    let top = basis
        .iter()
        .max_by_key(|&&j| mons[j].iter().sum::<u32>())
        .map(|&j| mons[j].clone())
        .unwrap_or_default();
    let vi = top
        .iter()
        .enumerate()
        .max_by_key(|(_, &e)| e)
        .map(|(i, _)| i)
        .unwrap_or(0);
    vars.get(vi).cloned().unwrap_or_default()
}

fn grow_error(variable: &str, bound: u32) -> Error {
    Error::NotFinite {
        variable: variable.to_string(),
        detail: format!("monomial closure still growing at degree bound {bound}"),
    }
}
