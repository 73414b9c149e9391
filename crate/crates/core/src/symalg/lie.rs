//! Nilpotent matrix Lie algebras with a root-space basis, and the group law
//! of the corresponding unipotent group in coordinates of the first kind.

use num_traits::Zero;

use super::linalg::Mat;
use super::matrix::PolyMatrix;
use super::poly::Poly;
use super::{Q, SymError};
use crate::rootsys::Root;

/// Side of a one-parameter perturbation `exp(tE)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// `exp(tE)·g`: fields generating left translations.
    Left,
    /// `g·exp(tE)`: left-invariant fields, i.e. `∂/∂x|₀ f(g·x)`.
    Right,
}

/// Basis of root-space matrices; each element owns a matrix position where
/// all other basis elements vanish.
#[derive(Clone, Debug)]
pub struct Rep {
    size: usize,
    basis: Vec<Mat>,
    roots: Vec<Root>,
    pivots: Vec<(usize, usize)>,
}

impl Rep {
    pub fn new(size: usize, basis: Vec<Mat>, roots: Vec<Root>) -> Result<Rep, SymError> {
        if basis.len() != roots.len() {
            return Err(SymError::Dimension(format!("{} matrices for {} roots", basis.len(), roots.len())));
        }
        let mut pivots = Vec::with_capacity(basis.len());
        for (k, b) in basis.iter().enumerate() {
            if b.rows != size || b.cols != size {
                return Err(SymError::Dimension(format!("basis element {k} is not {size}x{size}")));
            }
            let pos = (0..size)
                .flat_map(|i| (0..size).map(move |j| (i, j)))
                .find(|&(i, j)| {
                    !b[(i, j)].is_zero()
                        && basis.iter().enumerate().all(|(l, o)| l == k || o[(i, j)].is_zero())
                })
                .ok_or(SymError::NoPrivatePosition(k))?;
            pivots.push(pos);
        }
        Ok(Rep { size, basis, roots, pivots })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn index_of(&self, root: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r.as_slice() == root)
    }

    /// `Σ coords[k] E_k`.
    pub fn element(&self, coords: &[Poly]) -> PolyMatrix {
        let mut m = PolyMatrix::zero(self.size);
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.size {
                for j in 0..self.size {
                    if !b[(i, j)].is_zero() {
                        let e = m.get(i, j) + &c.scale(&b[(i, j)]);
                        m.set(i, j, e);
                    }
                }
            }
        }
        m
    }

    /// Generic element in variables `0..dim`.
    pub fn generic(&self) -> PolyMatrix {
        let vars: Vec<Poly> = (0..self.dim()).map(Poly::var).collect();
        self.element(&vars)
    }

    /// Coordinates of `m` in the basis, checking the residual.
    pub fn coords(&self, m: &PolyMatrix) -> Result<Vec<Poly>, SymError> {
        let coords: Vec<Poly> = self
            .pivots
            .iter()
            .zip(&self.basis)
            .map(|(&(i, j), b)| m.get(i, j).scale(&b[(i, j)].recip()))
            .collect();
        if !self.element(&coords).sub(m).is_zero() {
            return Err(SymError::NotInSpan);
        }
        Ok(coords)
    }

    /// `z` with `exp(Σ z E) = exp(Σ u E)·exp(Σ x E)`.
    pub fn group_law(&self, u: &[Poly], x: &[Poly]) -> Result<Vec<Poly>, SymError> {
        self.check_len(u)?;
        self.check_len(x)?;
        let a = self.element(u).nilpotent_exp()?;
        let b = self.element(x).nilpotent_exp()?;
        self.coords(&a.mul(&b).unipotent_log()?)
    }

    pub fn inverse(&self, x: &[Poly]) -> Vec<Poly> {
        x.iter().map(|p| -p).collect()
    }

    /// `d/dt` at `t = 0` of the coordinates of `exp(B)·exp(tE_dir)` (or the
    /// mirrored product), with `B = Σ base_k E_k`.
    pub fn first_order(&self, base: &[Poly], dir: usize, side: Side) -> Result<Vec<Poly>, SymError> {
        self.check_len(base)?;
        let m = self.element(base).nilpotent_exp()?;
        let e = PolyMatrix::from_const(&self.basis[dir]);
        let dm = match side {
            Side::Right => m.mul(&e),
            Side::Left => e.mul(&m),
        };
        let n = m.sub(&PolyMatrix::identity(self.size));
        // d/dt log(I + N + t dN) = Σ_k (-1)^{k+1}/k Σ_j N^j dN N^{k-1-j}
        let powers = n.nilpotent_powers()?;
        let mut out = PolyMatrix::zero(self.size);
        for k in 1..=self.size {
            let mut s = PolyMatrix::zero(self.size);
            for j in 0..k {
                let (Some(l), Some(r)) = (powers.get(j), powers.get(k - 1 - j)) else { continue };
                s = s.add(&l.mul(&dm).mul(r));
            }
            if s.is_zero() {
                continue;
            }
            let sign: i64 = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&s.scale(&Q::new(sign.into(), (k as i64).into())));
        }
        self.coords(&out)
    }

    /// Vector field of `first_order` at the generic point `x_0..x_{d-1}`.
    pub fn field(&self, dir: usize, side: Side) -> Result<Vec<Poly>, SymError> {
        let vars: Vec<Poly> = (0..self.dim()).map(Poly::var).collect();
        self.first_order(&vars, dir, side)
    }

    fn check_len(&self, v: &[Poly]) -> Result<(), SymError> {
        if v.len() != self.dim() {
            return Err(SymError::Dimension(format!("{} coordinates for a {}-dimensional algebra", v.len(), self.dim())));
        }
        Ok(())
    }
}

/// Directional derivative `Σ_i field_i ∂f/∂x_i`.
pub fn derive(f: &Poly, field: &[Poly]) -> Poly {
    let mut out = Poly::zero();
    for (i, c) in field.iter().enumerate() {
        if c.is_zero() || !f.uses_var(i) {
            continue;
        }
        out += &(&f.derivative(i) * c);
    }
    out
}

/// Strictly upper triangular `sl_n` in the basis `e_ij` (i < j), roots in the
/// simple-root basis of `A_{n-1}`.
pub fn type_a_rep(n: usize) -> Rep {
    let mut basis = Vec::new();
    let mut roots = Vec::new();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.sort_by_key(|&(i, j)| (j - i, i));
    for (i, j) in pairs {
        let mut m = Mat::zeros(n, n);
        m[(i, j)] = super::q(1);
        basis.push(m);
        let mut r = vec![0; n - 1];
        for k in r.iter_mut().take(j).skip(i) {
            *k = 1;
        }
        roots.push(r);
    }
    Rep::new(n, basis, roots).expect("matrix units have private positions")
}

/// Abelian algebra of `n` commuting matrices `e_{0,k}` in size `n + 1`.
pub fn abelian_rep(n: usize) -> Rep {
    let basis = (1..=n)
        .map(|k| {
            let mut m = Mat::zeros(n + 1, n + 1);
            m[(0, k)] = super::q(1);
            m
        })
        .collect();
    let roots = (0..n).map(|k| {
        let mut r = vec![0; n];
        r[k] = 1;
        r
    });
    Rep::new(n + 1, basis, roots.collect()).expect("matrix units have private positions")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symalg::{q, qq};

    #[test]
    fn abelian_law_is_addition() {
        let rep = abelian_rep(3);
        let u: Vec<Poly> = (0..3).map(Poly::var).collect();
        let x: Vec<Poly> = (3..6).map(Poly::var).collect();
        let z = rep.group_law(&u, &x).unwrap();
        for k in 0..3 {
            assert_eq!(z[k], &u[k] + &x[k]);
        }
    }

    #[test]
    fn a2_law_has_half_commutator() {
        let rep = type_a_rep(3);
        // basis order: α1, α2, α1+α2
        assert_eq!(rep.roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let u: Vec<Poly> = (0..3).map(Poly::var).collect();
        let x: Vec<Poly> = (3..6).map(Poly::var).collect();
        let z = rep.group_law(&u, &x).unwrap();
        let half = qq(1, 2);
        let expect = &(&(&u[2] + &x[2]) + &(&u[0] * &x[1]).scale(&half)) - &(&u[1] * &x[0]).scale(&half);
        assert_eq!(z[2], expect);
        let zero: Vec<Poly> = vec![Poly::zero(); 3];
        assert_eq!(rep.group_law(&u, &zero).unwrap(), u);
    }

    #[test]
    fn fields_match_group_law_derivative() {
        let rep = type_a_rep(3);
        let t = 6;
        let u: Vec<Poly> = (0..3).map(Poly::var).collect();
        for dir in 0..3 {
            let mut tx = vec![Poly::zero(); 3];
            tx[dir] = Poly::var(t);
            let right: Vec<Poly> =
                rep.group_law(&u, &tx).unwrap().iter().map(|p| p.derivative(t).set_zero(&[t])).collect();
            assert_eq!(rep.first_order(&u, dir, Side::Right).unwrap(), right);
            let left: Vec<Poly> =
                rep.group_law(&tx, &u).unwrap().iter().map(|p| p.derivative(t).set_zero(&[t])).collect();
            assert_eq!(rep.first_order(&u, dir, Side::Left).unwrap(), left);
        }
    }

    #[test]
    fn projection_rejects_outside_span() {
        let rep = type_a_rep(3);
        let mut m = PolyMatrix::zero(3);
        m.set(1, 0, Poly::constant(q(1)));
        assert_eq!(rep.coords(&m), Err(SymError::NotInSpan));
    }
}
