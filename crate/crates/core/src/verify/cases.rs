//! Explicit matrix realizations of the unipotent radicals used in the
//! two-colour rank-1 cases, with their root-coordinate charts.

use std::collections::BTreeSet;

use num_traits::Zero;

use super::VerifyError;
use crate::rootsys::{Family, Root, RootSystem, Weight};
use crate::symalg::lie::{self, Rep};
use crate::symalg::linalg::Mat;
use crate::symalg::matrix::PolyMatrix;
use crate::symalg::{q, Poly, Ring};

/// Unipotent radical `R^u(P_X)` in coordinates of the first kind.
#[derive(Clone, Debug)]
pub struct Chart {
    pub label: String,
    pub n: usize,
    pub rs: RootSystem,
    pub sp: BTreeSet<usize>,
    pub gamma: Option<Weight>,
    pub rep: Rep,
    /// `x1..xd`, weighted by the negative roots.
    pub x: Ring,
    /// `u1..ud`, the same indices read as translation parameters.
    pub u: Ring,
    /// Signs of the invariant bilinear form, when the realization has one.
    pub form: Option<Vec<i32>>,
}

fn rings(roots: &[Root]) -> (Ring, Ring) {
    let mut x = Ring::new();
    let mut u = Ring::new();
    for (i, r) in roots.iter().enumerate() {
        let w = -Weight::from_ints(r);
        x.add_var(&format!("x{}", i + 1), Some(w.clone()));
        u.add_var(&format!("u{}", i + 1), Some(w));
    }
    (x, u)
}

impl Chart {
    fn new(
        label: &str,
        n: usize,
        rs: RootSystem,
        sp: BTreeSet<usize>,
        gamma: Option<Weight>,
        rep: Rep,
        form: Option<Vec<i32>>,
    ) -> Result<Chart, VerifyError> {
        let (x, u) = rings(rep.roots());
        let chart = Chart { label: label.to_string(), n, rs, sp, gamma, rep, x, u, form };
        if !chart.labeling_is_bijective() {
            return Err(VerifyError::Inconsistent(format!("{label}: coordinates do not match Φ⁺ ∖ Φ_sp")));
        }
        Ok(chart)
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn roots(&self) -> &[Root] {
        self.rep.roots()
    }

    pub fn index_of(&self, root: &[i64]) -> Option<usize> {
        self.rep.index_of(root)
    }

    pub fn index_of_weight(&self, w: &Weight) -> Option<usize> {
        self.index_of(&w.to_ints()?)
    }

    pub fn gamma_index(&self) -> Result<usize, VerifyError> {
        let g = self.gamma.as_ref().ok_or_else(|| VerifyError::GammaNotInChart(self.label.clone()))?;
        self.index_of_weight(g).ok_or_else(|| VerifyError::GammaNotInChart(self.label.clone()))
    }

    pub fn var(&self, root: &[i64]) -> Result<Poly, VerifyError> {
        self.index_of(root)
            .map(Poly::var)
            .ok_or_else(|| VerifyError::Inconsistent(format!("{}: no coordinate for root {root:?}", self.label)))
    }

    /// The chart roots are exactly `Φ⁺ ∖ Φ_sp`, each once.
    pub fn labeling_is_bijective(&self) -> bool {
        let ours: BTreeSet<&Root> = self.roots().iter().collect();
        let want = self.rs.chart_coordinates(&self.sp);
        ours.len() == self.roots().len() && want.len() == ours.len() && want.iter().all(|r| ours.contains(r))
    }

    /// Chart directions with zero coefficient on `moving`: the subgroup that
    /// fixes the colour moved by that root.
    pub fn stabilizer_directions(&self, moving: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.roots()[i][moving] == 0).collect()
    }

    pub fn generic_exp(&self) -> Result<PolyMatrix, VerifyError> {
        Ok(self.rep.generic().nilpotent_exp()?)
    }

    pub fn weight(&self, p: &Poly) -> Result<Weight, VerifyError> {
        Ok(self.x.t_weight(p, self.rank())?)
    }

    /// Every basis element preserves the bilinear form.
    pub fn preserves_form(&self) -> bool {
        match &self.form {
            None => true,
            Some(eps) => self.rep.basis().iter().all(|b| PolyMatrix::from_const(b).is_skew_about_antidiagonal(eps)),
        }
    }

    pub fn coordinate_table(&self) -> Vec<(String, String)> {
        self.x.names().iter().cloned().zip(self.roots().iter().map(|r| Weight::from_ints(r).pretty())).collect()
    }
}

fn set(v: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
    v.into_iter().collect()
}

/// Basis element `e_ij - ε_iε_j e_{N+1-j,N+1-i}` (1-based), preserving the
/// antidiagonal form with signs `eps`.
fn form_unit(size: usize, eps: &[i32], i: usize, j: usize) -> Mat {
    let mut m = Mat::zeros(size, size);
    m[(i - 1, j - 1)] = q(1);
    let (pi, pj) = (size + 1 - j, size + 1 - i);
    if (pi, pj) != (i, j) {
        let s = -(eps[i - 1] * eps[j - 1]);
        m[(pi - 1, pj - 1)] = q(s as i64);
    }
    m
}

#[allow(clippy::too_many_arguments)]
fn realize(
    label: &str,
    n: usize,
    rs: RootSystem,
    sp: BTreeSet<usize>,
    gamma: Weight,
    size: usize,
    eps: Vec<i32>,
    entries: Vec<(Root, (usize, usize))>,
) -> Result<Chart, VerifyError> {
    let mut basis = Vec::new();
    let mut roots = Vec::new();
    for r in rs.chart_coordinates(&sp) {
        let &(_, (i, j)) = entries
            .iter()
            .find(|(er, _)| *er == r)
            .ok_or_else(|| VerifyError::Inconsistent(format!("{label}: root {r:?} has no matrix position")))?;
        basis.push(form_unit(size, &eps, i, j));
        roots.push(r);
    }
    let rep = Rep::new(size, basis, roots)?;
    Chart::new(label, n, rs, sp, Some(gamma), rep, Some(eps))
}

fn int_root(w: &Weight) -> Root {
    w.to_ints().expect("root lattice element")
}

/// `so_{2n+1}`, spherical root `α1+…+αn`, `S^p = {α2..α_{n-1}}`.
pub fn case_9b(n: usize) -> Result<Chart, VerifyError> {
    if n < 2 {
        return Err(VerifyError::InvalidRank { case: "9B".into(), n });
    }
    let rs = RootSystem::build(Family::B, n)?;
    let size = 2 * n + 1;
    // ε_i = α_i + … + α_n
    let e = |i: usize| Weight::from_ints(&(1..=n).map(|k| i64::from(k >= i)).collect::<Vec<_>>());
    let mut entries = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            entries.push((int_root(&(&e(i) - &e(j))), (i, j)));
            entries.push((int_root(&(&e(i) + &e(j))), (i, size + 1 - j)));
        }
        entries.push((int_root(&e(i)), (i, n + 1)));
    }
    let gamma = Weight::from_ints(&vec![1; n]);
    realize("9B", n, rs, set(1..n.saturating_sub(1)), gamma, size, vec![1; size], entries)
}

/// `sp_{2n}`, spherical root `α1+2α2+…+2α_{n-1}+αn`, `S^p = {α3..αn}`.
pub fn case_9c(n: usize) -> Result<Chart, VerifyError> {
    if n < 3 {
        return Err(VerifyError::InvalidRank { case: "9C".into(), n });
    }
    let rs = RootSystem::build(Family::C, n)?;
    let size = 2 * n;
    // 2ε_i = 2(α_i + … + α_{n-1}) + α_n
    let two_e = |i: usize| {
        Weight::from_ints(&(1..=n).map(|k| if k == n { 1 } else { 2 * i64::from(k >= i) }).collect::<Vec<_>>())
    };
    let half = crate::symalg::qq(1, 2);
    let e = |i: usize| two_e(i).scale(&half);
    let mut entries = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            entries.push((int_root(&(&e(i) - &e(j))), (i, j)));
            entries.push((int_root(&(&e(i) + &e(j))), (i, size + 1 - j)));
        }
        entries.push((int_root(&two_e(i)), (i, size + 1 - i)));
    }
    let eps: Vec<i32> = (1..=size).map(|i| if i <= n { 1 } else { -1 }).collect();
    let mut g = vec![2i64; n];
    g[0] = 1;
    g[n - 1] = 1;
    realize("9C", n, rs, set(2..n), Weight::from_ints(&g), size, eps, entries)
}

/// The nilradical of `Lie(G2) ⊂ so_8`, coordinates `x1..x6` in the listed order.
pub const G2_MATRIX: [[&str; 8]; 8] = [
    ["0", "0", "x2", "-x4", "x4", "x5", "x3", "0"],
    ["x6", "0", "x4", "-x5", "x5", "x1", "0", "-x3"],
    ["0", "0", "0", "x6", "-x6", "0", "-x1", "-x5"],
    ["0", "0", "0", "0", "0", "x6", "-x5", "-x4"],
    ["0", "0", "0", "0", "0", "-x6", "x5", "x4"],
    ["0", "0", "0", "0", "0", "0", "-x4", "-x2"],
    ["0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "-x6", "0"],
];

/// Roots of `x1..x6` in the basis (α1 short, α2 long).
pub const G2_ROOTS: [[i64; 2]; 6] = [[3, 1], [0, 1], [3, 2], [1, 1], [2, 1], [1, 0]];

/// `G2 ⊂ SO_8`, spherical root `α1+α2`, `S^p = ∅`.
pub fn case_15() -> Result<Chart, VerifyError> {
    let rs = RootSystem::build(Family::G, 2)?;
    let roots: Vec<Root> = G2_ROOTS.iter().map(|r| r.to_vec()).collect();
    let (x, _) = rings(&roots);
    let mut basis = vec![Mat::zeros(8, 8); 6];
    for (i, row) in G2_MATRIX.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            let p = x.parse(s)?;
            if p.degree().unwrap_or(1) != 1 || !p.constant_term().is_zero() {
                return Err(VerifyError::Inconsistent(format!("entry ({}, {}) is not linear", i + 1, j + 1)));
            }
            for (k, b) in basis.iter_mut().enumerate() {
                b[(i, j)] = p.derivative(k).constant_term();
            }
        }
    }
    let rep = Rep::new(8, basis, roots)?;
    Chart::new("15", 1, rs, BTreeSet::new(), Some(Weight::from_ints(&[1, 1])), rep, Some(vec![1; 8]))
}

/// Full upper unipotent of `SL_{n+1}`: the chart of the flag variety.
pub fn flag_chart(n: usize) -> Result<Chart, VerifyError> {
    let rs = RootSystem::build(Family::A, n)?;
    let rep = lie::type_a_rep(n + 1);
    Chart::new("A-flag", n, rs, BTreeSet::new(), None, rep, None)
}

pub fn build(label: &str, n: Option<usize>) -> Result<Chart, VerifyError> {
    match label {
        "9B" => case_9b(n.unwrap_or(2)),
        "9C" => case_9c(n.unwrap_or(3)),
        "15" => case_15(),
        other => Err(VerifyError::UnknownCase(other.to_string())),
    }
}

/// Colour equations `(φ1, φ2)` computed from the matrix realization.
///
/// 9B: corner entry, rescaled so that `x_γ²` has coefficient 1, and a square
/// root of the upper-right `n×n` minor. 9C: corner entry and upper-right
/// `2×2` minor. 15: a square root of the upper-right `3×3` determinant and
/// the upper-right `2×2` minor.
pub fn colour_equations(chart: &Chart) -> Result<(Poly, Poly), VerifyError> {
    let ex = chart.generic_exp()?;
    let size = chart.rep.size();
    let corner = ex.get(0, size - 1).clone();
    match chart.label.as_str() {
        "9B" => {
            let g = chart.gamma_index()?;
            let sq = crate::symalg::Mono::from_exponents(&square_at(g, chart.dim()));
            let c = corner.coeff(&sq);
            if c.is_zero() {
                return Err(VerifyError::Inconsistent("corner entry has no x_γ² term".into()));
            }
            let phi1 = corner.scale(&c.recip());
            let minor = ex.upper_right_minor(chart.n).monic();
            let (_, phi2) = minor
                .sqrt_up_to_sign()
                .ok_or_else(|| VerifyError::Inconsistent("upper-right minor is not a square".into()))?;
            Ok((phi1, phi2))
        }
        "9C" => Ok((corner, ex.upper_right_minor(2))),
        "15" => Ok((pfaffian_15(&ex)?, ex.upper_right_minor(2))),
        other => Err(VerifyError::UnknownCase(other.to_string())),
    }
}

/// Square root of minus the upper-right `3×3` determinant, normalized to
/// the integral form with `x1x4` coefficient 360.
pub fn pfaffian_15(ex: &PolyMatrix) -> Result<Poly, VerifyError> {
    let det = ex.upper_right_minor(3).monic();
    let (_, root) = det
        .sqrt_up_to_sign()
        .ok_or_else(|| VerifyError::Inconsistent("upper-right 3x3 determinant is not a square".into()))?;
    let x1x4 = crate::symalg::Mono::from_exponents(&[1, 0, 0, 1, 0, 0]);
    let c = root.coeff(&x1x4);
    if c.is_zero() {
        return Err(VerifyError::Inconsistent("pfaffian has no x1x4 term".into()));
    }
    Ok(root.scale(&(q(360) / c)))
}

fn square_at(i: usize, d: usize) -> Vec<u32> {
    let mut e = vec![0; d];
    e[i] = 2;
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charts_have_expected_sizes() {
        assert_eq!(case_9b(2).unwrap().dim(), 4);
        assert_eq!(case_9b(3).unwrap().dim(), 8);
        assert_eq!(case_9c(3).unwrap().dim(), 8);
        assert_eq!(case_9c(4).unwrap().dim(), 12);
        assert_eq!(case_15().unwrap().dim(), 6);
        assert!(case_9b(1).is_err());
        assert!(case_9c(2).is_err());
    }

    #[test]
    fn realizations_preserve_their_forms() {
        for c in [case_9b(2), case_9b(3), case_9c(3), case_9c(4), case_15()] {
            let c = c.unwrap();
            assert!(c.preserves_form(), "{}", c.label);
            assert!(c.labeling_is_bijective());
        }
    }

    #[test]
    fn g2_matrix_matches_the_display() {
        let c = case_15().unwrap();
        let m = c.rep.generic();
        assert!(m.get(0, 1).is_zero());
        assert_eq!(m.get(0, 2), &Poly::var(1));
        assert_eq!(m.get(1, 0), &Poly::var(5));
        assert_eq!(m.get(7, 6), &-&Poly::var(5));
        let zeros = vec![Poly::zero(); 6];
        assert!(c.rep.element(&zeros).is_zero());
    }

    #[test]
    fn colour_equation_weights() {
        let c = case_9c(3).unwrap();
        let (p1, p2) = colour_equations(&c).unwrap();
        let g = c.gamma.clone().unwrap();
        assert_eq!(c.weight(&p2).unwrap(), -g.scale(&q(2)));
        assert_eq!(c.weight(&p1).unwrap(), -(&g + &Weight::simple(3, 0)));
    }
}
