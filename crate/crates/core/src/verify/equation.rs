//! Ansatz spaces for the couplings `a(x)`, `b(x)` and the linear system
//! behind the obstruction identity
//! `l·φ2·(μ∂φ1 − a) = s·φ1·(b − μ∂φ2)`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::cases::Chart;
use super::VerifyError;
use crate::rootsys::{Root, Weight};
use crate::symalg::lie::{derive, Side};
use crate::symalg::linalg::Mat;
use crate::symalg::{q, Mono, Poly, Q};

/// Guards the dense elimination.
pub const MAX_UNKNOWNS: usize = 64;
pub const MAX_ROWS: usize = 100_000;

/// Monomials `Π x_i^{e_i}` with `Σ e_i·(−root_i) = weight`.
pub fn monomials_of_weight(roots: &[Root], weight: &Weight) -> Vec<Mono> {
    let target: Option<Vec<i64>> = (-weight).to_ints();
    let Some(target) = target else { return Vec::new() };
    if target.iter().any(|&c| c < 0) || roots.iter().any(|r| r.iter().all(|&c| c == 0)) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; roots.len()];
    fill(roots, 0, &mut target.clone(), &mut exps, &mut out);
    out.sort();
    out
}

fn fill(roots: &[Root], i: usize, rest: &mut [i64], exps: &mut [u32], out: &mut Vec<Mono>) {
    if rest.iter().all(|&c| c == 0) {
        out.push(Mono::from_exponents(exps));
        return;
    }
    if i == roots.len() {
        return;
    }
    // skip root i
    fill(roots, i + 1, rest, exps, out);
    let r = &roots[i];
    let mut taken = 0;
    while r.iter().zip(rest.iter()).all(|(a, b)| a <= b) {
        for (b, a) in rest.iter_mut().zip(r) {
            *b -= a;
        }
        taken += 1;
        exps[i] = taken;
        fill(roots, i + 1, rest, exps, out);
    }
    for (b, a) in rest.iter_mut().zip(r) {
        *b += a * taken as i64;
    }
    exps[i] = 0;
}

/// `∂/∂x_γ|₀ φ(u·x)`, written in the same variable indices.
pub fn gamma_derivative(chart: &Chart, phi: &Poly) -> Result<Poly, VerifyError> {
    let g = chart.gamma_index()?;
    Ok(derive(phi, &chart.rep.field(g, Side::Right)?))
}

/// Polynomials in `span(monos)` killed by every field in `fields`; returned
/// as a basis in row-reduced form.
pub fn invariant_span(monos: &[Mono], fields: &[Vec<Poly>]) -> Vec<Poly> {
    if monos.is_empty() {
        return Vec::new();
    }
    let images: Vec<Vec<Poly>> = monos
        .iter()
        .map(|m| {
            let p = Poly::monomial(m.clone(), q(1));
            fields.iter().map(|f| derive(&p, f)).collect()
        })
        .collect();
    let mut cols = Vec::new();
    for (j, img) in images.iter().enumerate() {
        for (k, p) in img.iter().enumerate() {
            cols.push((j, k, p));
        }
    }
    let mut row_index: BTreeMap<(usize, Mono), usize> = BTreeMap::new();
    let mut entries = Vec::new();
    for (j, k, p) in cols {
        for (m, c) in p.terms() {
            let n = row_index.len();
            let r = *row_index.entry((k, m.clone())).or_insert(n);
            entries.push((r, j, c.clone()));
        }
    }
    let mut a = Mat::zeros(row_index.len(), monos.len());
    for (r, j, c) in entries {
        a[(r, j)] += c;
    }
    let kernel = if row_index.is_empty() { identity_rows(monos.len()) } else { a.kernel() };
    let basis: Vec<Poly> = kernel.iter().map(|v| combine(monos, v)).collect();
    reduce_basis(&basis)
}

fn identity_rows(n: usize) -> Vec<Vec<Q>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { q(1) } else { Q::zero() }).collect()).collect()
}

fn combine(monos: &[Mono], v: &[Q]) -> Poly {
    let mut p = Poly::zero();
    for (m, c) in monos.iter().zip(v) {
        if !c.is_zero() {
            p.add_term(m.clone(), c.clone());
        }
    }
    p
}

/// Coordinates of `polys` over the union of their monomials.
pub fn coefficient_matrix(polys: &[Poly]) -> (Vec<Mono>, Mat) {
    let mut monos: Vec<Mono> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monos.sort();
    monos.dedup();
    monos.reverse();
    let mut a = Mat::zeros(polys.len(), monos.len());
    for (i, p) in polys.iter().enumerate() {
        for (j, m) in monos.iter().enumerate() {
            a[(i, j)] = p.coeff(m);
        }
    }
    (monos, a)
}

/// Canonical basis of the span: reduced row echelon form over the monomials
/// in decreasing order.
pub fn reduce_basis(polys: &[Poly]) -> Vec<Poly> {
    if polys.is_empty() {
        return Vec::new();
    }
    let (monos, a) = coefficient_matrix(polys);
    let (r, pivots) = a.rref();
    (0..pivots.len()).map(|i| combine(&monos, r.row(i))).collect()
}

pub fn same_span(a: &[Poly], b: &[Poly]) -> bool {
    reduce_basis(a) == reduce_basis(b)
}

pub fn span_contains(space: &[Poly], p: &Poly) -> bool {
    let mut all = space.to_vec();
    all.push(p.clone());
    reduce_basis(&all).len() == reduce_basis(space).len()
}

/// Monomials of the weight, invariant under left translation along `stabilizer`.
pub fn ansatz_space(chart: &Chart, weight: &Weight, stabilizer: &[usize]) -> Result<Vec<Poly>, VerifyError> {
    let monos = monomials_of_weight(chart.roots(), weight);
    let fields: Vec<Vec<Poly>> = stabilizer
        .iter()
        .map(|&k| chart.rep.field(k, Side::Left))
        .collect::<Result<_, _>>()?;
    Ok(invariant_span(&monos, &fields))
}

/// Invariance of a single polynomial under left translation along `stabilizer`.
pub fn is_invariant(chart: &Chart, p: &Poly, stabilizer: &[usize]) -> Result<bool, VerifyError> {
    for &k in stabilizer {
        if !derive(p, &chart.rep.field(k, Side::Left)?).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Inputs of the obstruction identity.
#[derive(Clone, Debug)]
pub struct FinalSystem {
    pub phi1: Poly,
    pub phi2: Poly,
    pub dphi1: Poly,
    pub dphi2: Poly,
    pub a_space: Vec<Poly>,
    pub b_space: Vec<Poly>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum FinalVerdict {
    Infeasible,
    /// A solution with `(a, b) ≠ 0`.
    Feasible { mu: String, a: Vec<String>, b: Vec<String> },
}

impl FinalVerdict {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, FinalVerdict::Infeasible)
    }
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub mu: Q,
    pub a: Vec<Q>,
    pub b: Vec<Q>,
}

impl FinalSystem {
    /// The identity is linear in `(μ, a, b)`; returns a kernel vector with
    /// nonzero `(a, b)` block when one exists.
    pub fn solve(&self, l: u32, s: u32) -> Result<Option<Witness>, VerifyError> {
        if l == 0 || s == 0 {
            return Err(VerifyError::Inconsistent("l and s must be positive".into()));
        }
        let (lq, sq) = (q(l as i64), q(s as i64));
        let mut cols = Vec::with_capacity(1 + self.a_space.len() + self.b_space.len());
        cols.push(&(&self.phi2 * &self.dphi1).scale(&lq) + &(&self.phi1 * &self.dphi2).scale(&sq));
        for a in &self.a_space {
            cols.push((&self.phi2 * a).scale(&-lq.clone()));
        }
        for b in &self.b_space {
            cols.push((&self.phi1 * b).scale(&-sq.clone()));
        }
        let (monos, t) = coefficient_matrix(&cols);
        if cols.len() > MAX_UNKNOWNS || monos.len() > MAX_ROWS {
            return Err(VerifyError::TooLarge { unknowns: cols.len(), rows: monos.len() });
        }
        let kernel = t.transpose().kernel();
        let na = self.a_space.len();
        // a kernel vector with nonzero (a,b) block exists iff the block
        // projection of the kernel basis has positive rank
        let pick = kernel.into_iter().find(|v| v[1..].iter().any(|c| !c.is_zero()));
        Ok(pick.map(|v| Witness { mu: v[0].clone(), a: v[1..1 + na].to_vec(), b: v[1 + na..].to_vec() }))
    }

    pub fn verdict(&self, l: u32, s: u32) -> Result<FinalVerdict, VerifyError> {
        Ok(match self.solve(l, s)? {
            None => FinalVerdict::Infeasible,
            Some(w) => FinalVerdict::Feasible {
                mu: w.mu.to_string(),
                a: w.a.iter().map(|c| c.to_string()).collect(),
                b: w.b.iter().map(|c| c.to_string()).collect(),
            },
        })
    }

    pub fn scaled(&self, c1: &Q, c2: &Q) -> FinalSystem {
        FinalSystem {
            phi1: self.phi1.scale(c1),
            phi2: self.phi2.scale(c2),
            dphi1: self.dphi1.scale(c1),
            dphi2: self.dphi2.scale(c2),
            a_space: self.a_space.clone(),
            b_space: self.b_space.clone(),
        }
    }
}

/// Builds the system for a two-colour chart: `a` lives at weight
/// `wt(φ1)+γ` and is invariant along the stabilizer of `moving.0`, `b`
/// likewise for `φ2` and `moving.1`.
pub fn final_system(chart: &Chart, phi1: &Poly, phi2: &Poly, moving: (usize, usize)) -> Result<FinalSystem, VerifyError> {
    let gamma = chart.gamma.clone().ok_or_else(|| VerifyError::GammaNotInChart(chart.label.clone()))?;
    let w1 = &chart.weight(phi1)? + &gamma;
    let w2 = &chart.weight(phi2)? + &gamma;
    Ok(FinalSystem {
        phi1: phi1.clone(),
        phi2: phi2.clone(),
        dphi1: gamma_derivative(chart, phi1)?,
        dphi2: gamma_derivative(chart, phi2)?,
        a_space: ansatz_space(chart, &w1, &chart.stabilizer_directions(moving.0))?,
        b_space: ansatz_space(chart, &w2, &chart.stabilizer_directions(moving.1))?,
    })
}

/// A system solvable by construction: `φ1 = φ2`, `a = b = ∂φ`.
pub fn self_test_system() -> FinalSystem {
    let x = Poly::var(0);
    let y = Poly::var(1);
    let phi = &(&x * &x) + &y;
    let d = Poly::var(0).scale(&q(2));
    FinalSystem {
        phi1: phi.clone(),
        phi2: phi,
        dphi1: d.clone(),
        dphi2: d.clone(),
        a_space: vec![d.clone()],
        b_space: vec![d],
    }
}
