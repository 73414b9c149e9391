use num_traits::One;

use super::linalg::Mat;
use super::poly::Poly;
use super::{q, Q, SymError};

/// Square matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(n: usize) -> PolyMatrix {
        PolyMatrix { n, entries: vec![Poly::zero(); n * n] }
    }

    pub fn identity(n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn from_const(m: &Mat) -> PolyMatrix {
        assert_eq!(m.rows, m.cols);
        let mut out = PolyMatrix::zero(m.rows);
        for i in 0..m.rows {
            for j in 0..m.cols {
                out.set(i, j, Poly::constant(m[(i, j)].clone()));
            }
        }
        out
    }

    /// Constant matrix, if every entry is constant.
    pub fn to_const(&self) -> Option<Mat> {
        let mut out = Mat::zeros(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let e = self.get(i, j);
                if e.degree().unwrap_or(0) > 0 {
                    return None;
                }
                out[(i, j)] = e.constant_term();
            }
        }
        Some(out)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.n + j] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn add(&self, o: &PolyMatrix) -> PolyMatrix {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &PolyMatrix) -> PolyMatrix {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> PolyMatrix {
        PolyMatrix { n: self.n, entries: self.entries.iter().map(|e| e.scale(c)).collect() }
    }

    pub fn mul(&self, o: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut out = PolyMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    /// Skew-symmetry about the antidiagonal with signs `eps`:
    /// `X[j'][i'] = -eps_i eps_j X[i][j]` for `k' = n-1-k`.
    pub fn is_skew_about_antidiagonal(&self, eps: &[i32]) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let s = -(eps[i] * eps[j]);
                self.get(n - 1 - j, n - 1 - i) == &self.get(i, j).scale(&q(s as i64))
            })
        })
    }

    /// Powers `N^0 .. N^k` until the first zero power; errors if `N^n != 0`.
    pub fn nilpotent_powers(&self) -> Result<Vec<PolyMatrix>, SymError> {
        let mut powers = vec![PolyMatrix::identity(self.n)];
        loop {
            let next = powers.last().unwrap().mul(self);
            if next.is_zero() {
                return Ok(powers);
            }
            if powers.len() >= self.n {
                return Err(SymError::NotNilpotent);
            }
            powers.push(next);
        }
    }

    /// `exp(N)` for nilpotent `N`, a finite sum.
    pub fn nilpotent_exp(&self) -> Result<PolyMatrix, SymError> {
        let powers = self.nilpotent_powers()?;
        let mut out = PolyMatrix::zero(self.n);
        let mut fact = Q::one();
        for (k, p) in powers.iter().enumerate() {
            if k > 0 {
                fact *= q(k as i64);
            }
            out = out.add(&p.scale(&fact.recip()));
        }
        Ok(out)
    }

    /// `log(U)` for unipotent `U`.
    pub fn unipotent_log(&self) -> Result<PolyMatrix, SymError> {
        let nil = self.sub(&PolyMatrix::identity(self.n));
        let powers = nil.nilpotent_powers().map_err(|_| SymError::NotUnipotent)?;
        let mut out = PolyMatrix::zero(self.n);
        for (k, p) in powers.iter().enumerate().skip(1) {
            let c = Q::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, (k as i64).into());
            out = out.add(&p.scale(&c));
        }
        Ok(out)
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Poly {
        assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return Poly::one();
        }
        if rows.len() == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let mut acc = Poly::zero();
        let r0 = rows[0];
        for (k, &c) in cols.iter().enumerate() {
            let e = self.get(r0, c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let m = self.minor(&rows[1..], &sub_cols);
            let t = e * &m;
            if k % 2 == 0 {
                acc += &t;
            } else {
                acc = &acc - &t;
            }
        }
        acc
    }

    /// Upper-right `k x k` minor.
    pub fn upper_right_minor(&self, k: usize) -> Poly {
        let rows: Vec<usize> = (0..k).collect();
        let cols: Vec<usize> = (self.n - k..self.n).collect();
        self.minor(&rows, &cols)
    }

    pub fn compose(&self, images: &[Poly]) -> PolyMatrix {
        self.map(|p| p.compose(images))
    }

    pub fn eval(&self, point: &[Q]) -> Mat {
        let mut out = Mat::zeros(self.n, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = self.get(i, j).eval(point);
            }
        }
        out
    }

    pub fn has_unit_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == &Poly::one())
    }

    pub fn identity_like(&self) -> bool {
        self == &PolyMatrix::identity(self.n)
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|p| -p)
    }

    pub fn is_strictly_upper(&self) -> bool {
        (0..self.n).all(|i| (0..=i).all(|j| self.get(i, j).is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_zero_and_single_entry() {
        assert!(PolyMatrix::zero(4).nilpotent_exp().unwrap().identity_like());
        let mut n = PolyMatrix::zero(3);
        n.set(0, 1, Poly::var(0));
        let e = n.nilpotent_exp().unwrap();
        assert_eq!(e, PolyMatrix::identity(3).add(&n));
    }

    #[test]
    fn non_nilpotent_rejected() {
        let mut n = PolyMatrix::zero(2);
        n.set(0, 1, Poly::one());
        n.set(1, 0, Poly::one());
        assert_eq!(n.nilpotent_exp(), Err(SymError::NotNilpotent));
        assert_eq!(PolyMatrix::identity(2).scale(&q(2)).unipotent_log(), Err(SymError::NotUnipotent));
    }

    #[test]
    fn log_exp_roundtrip_symbolic() {
        let mut n = PolyMatrix::zero(4);
        let mut v = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                n.set(i, j, Poly::var(v));
                v += 1;
            }
        }
        let e = n.nilpotent_exp().unwrap();
        assert!(e.has_unit_diagonal());
        assert_eq!(e.unipotent_log().unwrap(), n);
    }

    #[test]
    fn minor_of_generic_2x2() {
        let mut m = PolyMatrix::zero(3);
        for (k, (i, j)) in [(0, 1), (0, 2), (1, 1), (1, 2)].into_iter().enumerate() {
            m.set(i, j, Poly::var(k));
        }
        let d = m.upper_right_minor(2);
        let expect = &(&Poly::var(0) * &Poly::var(3)) - &(&Poly::var(1) * &Poly::var(2));
        assert_eq!(d, expect);
    }
}
