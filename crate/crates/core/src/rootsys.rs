//! Finite irreducible root systems in the simple-root basis.
//!
//! Simple roots follow Bourbaki numbering. For `B_n` the last root is short,
//! for `C_n` it is long, for `G2` the first root is short and for `F4` the
//! first two are long. In `E_n` the root `α2` is attached to `α4`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::symalg::linalg::Mat;
use crate::symalg::{q, Q};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    pub fn valid_rank(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 3,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }

    /// Closed-form `|Φ⁺|`.
    pub fn positive_root_count(self, n: usize) -> usize {
        match self {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Family, RootError> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(RootError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("no irreducible root system of type {0}{1}")]
    InvalidType(Family, usize),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

/// Element of the rational weight lattice, in the simple-root basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![Q::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Weight {
        Weight(v.iter().map(|&x| q(x)).collect())
    }

    pub fn simple(rank: usize, i: usize) -> Weight {
        let mut w = Weight::zero(rank);
        w.0[i] = q(1);
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Indices with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect()
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|x| if x.is_integer() { i64::try_from(x.to_integer()).ok() } else { None })
            .collect()
    }

    /// Display as a combination of simple roots, e.g. `α1+2α2`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            if a != q(1) {
                out.push_str(&a.to_string());
            }
            out.push_str(&format!("α{}", i + 1));
        }
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        &self + &o
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        &self - &o
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

/// Integer root vector in the simple-root basis.
pub type Root = Vec<i64>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// Squared lengths `(α_i, α_i)`, short roots normalized to 1 or 2.
    pub lengths: Vec<i64>,
    pub positive_roots: Vec<Root>,
    pub fundamental_weights: Vec<Weight>,
}

fn gram(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match family {
        Family::A | Family::D | Family::E => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            match family {
                Family::A => (0..n - 1).for_each(|i| link(&mut g, i, i + 1, -1)),
                Family::D => {
                    (0..n - 2).for_each(|i| link(&mut g, i, i + 1, -1));
                    link(&mut g, n - 3, n - 1, -1);
                }
                _ => {
                    link(&mut g, 0, 2, -1);
                    link(&mut g, 1, 3, -1);
                    (2..n - 1).for_each(|i| link(&mut g, i, i + 1, -1));
                }
            }
        }
        Family::B => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = if i == n - 1 { 2 } else { 4 };
            }
            (0..n - 2).for_each(|i| link(&mut g, i, i + 1, -2));
            link(&mut g, n - 2, n - 1, -2);
        }
        Family::C => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = if i == n - 1 { 4 } else { 2 };
            }
            (0..n - 2).for_each(|i| link(&mut g, i, i + 1, -1));
            link(&mut g, n - 2, n - 1, -2);
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        Family::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
    }
    g
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<RootSystem, RootError> {
        if !family.valid_rank(rank) {
            return Err(RootError::InvalidType(family, rank));
        }
        let g = gram(family, rank);
        let lengths: Vec<i64> = (0..rank).map(|i| g[i][i]).collect();
        let cartan: Vec<Vec<i64>> =
            (0..rank).map(|i| (0..rank).map(|j| 2 * g[i][j] / g[j][j]).collect()).collect();
        let mut rs = RootSystem { family, rank, cartan, lengths, positive_roots: Vec::new(), fundamental_weights: Vec::new() };
        rs.positive_roots = rs.generate_positive_roots();
        rs.fundamental_weights = rs.solve_fundamental_weights();
        Ok(rs)
    }

    /// `⟨β, α_j^∨⟩` for an integer root vector.
    pub fn pair_root(&self, beta: &[i64], j: usize) -> i64 {
        (0..self.rank).map(|i| beta[i] * self.cartan[i][j]).sum()
    }

    /// `⟨v, α_j^∨⟩`.
    pub fn pair(&self, v: &Weight, j: usize) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.rank {
            if !v.0[i].is_zero() {
                acc += &v.0[i] * q(self.cartan[i][j]);
            }
        }
        acc
    }

    /// Invariant form `(v, w)` with the normalization of `lengths`.
    pub fn form(&self, v: &Weight, w: &Weight) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                let gij = self.cartan[i][j] * self.lengths[j];
                if gij != 0 {
                    acc += &v.0[i] * &w.0[j] * Q::new(gij.into(), 2.into());
                }
            }
        }
        acc
    }

    pub fn reflect(&self, v: &Weight, i: usize) -> Weight {
        let c = self.pair(v, i);
        let mut out = v.clone();
        out.0[i] -= c;
        out
    }

    // Root strings: β + α_i is a root iff p > 0 where q - p = ⟨β, α_i^∨⟩ and
    // q is the length of the downward string.
    fn generate_positive_roots(&self) -> Vec<Root> {
        let n = self.rank;
        let mut set: HashSet<Root> = HashSet::new();
        let mut layer: Vec<Root> = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        set.extend(layer.iter().cloned());
        let mut all = layer.clone();
        while !layer.is_empty() {
            let mut next: Vec<Root> = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let mut down = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if set.contains(&probe) {
                            down += 1;
                        } else {
                            break;
                        }
                    }
                    let up = down - self.pair_root(beta, i);
                    if up > 0 {
                        let mut r = beta.clone();
                        r[i] += 1;
                        if set.insert(r.clone()) {
                            next.push(r);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        sort_roots(&mut all);
        all
    }

    fn solve_fundamental_weights(&self) -> Vec<Weight> {
        // ω_k = Σ_i c_i α_i with Σ_i c_i cartan[i][j] = δ_jk
        let n = self.rank;
        let a = Mat::from_rows((0..n).map(|j| (0..n).map(|i| q(self.cartan[i][j])).collect()).collect());
        let inv = a.inverse().expect("Cartan matrix is invertible");
        (0..n).map(|k| Weight((0..n).map(|i| inv[(i, k)].clone()).collect())).collect()
    }

    pub fn fundamental_weight(&self, i: usize) -> &Weight {
        &self.fundamental_weights[i]
    }

    pub fn rho(&self) -> Weight {
        self.fundamental_weights.iter().fold(Weight::zero(self.rank), |acc, w| &acc + w)
    }

    pub fn is_dominant(&self, v: &Weight) -> bool {
        (0..self.rank).all(|i| !self.pair(v, i).is_negative())
    }

    /// Image of `v` under the longest Weyl element.
    ///
    /// The word is found by descending `ρ` to its anti-dominant representative;
    /// the same reflections are applied to `v`.
    pub fn w0_apply(&self, v: &Weight) -> Weight {
        let mut cur = self.rho();
        let mut out = v.clone();
        while let Some(i) = (0..self.rank).find(|&i| self.pair(&cur, i) > Q::zero()) {
            cur = self.reflect(&cur, i);
            out = self.reflect(&out, i);
        }
        out
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        let neg: Vec<i64> = r.iter().map(|x| -x).collect();
        self.positive_roots.iter().any(|p| p.as_slice() == r || *p == neg)
    }

    pub fn is_positive_root(&self, r: &[i64]) -> bool {
        self.positive_roots.iter().any(|p| p.as_slice() == r)
    }

    /// Positive roots supported on `subset` (0-based indices).
    pub fn sub_system(&self, subset: &BTreeSet<usize>) -> Vec<Root> {
        self.positive_roots
            .iter()
            .filter(|r| r.iter().enumerate().all(|(i, c)| *c == 0 || subset.contains(&i)))
            .cloned()
            .collect()
    }

    /// `Φ⁺ ∖ Φ_{sp}`, ordered by height, then lexicographically decreasing.
    pub fn chart_coordinates(&self, sp: &BTreeSet<usize>) -> Vec<Root> {
        let sub: HashSet<Root> = self.sub_system(sp).into_iter().collect();
        self.positive_roots.iter().filter(|r| !sub.contains(*r)).cloned().collect()
    }

    /// Dynkin adjacency.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }
}

pub fn height(r: &[i64]) -> i64 {
    r.iter().sum()
}

/// Height, then lexicographically decreasing coefficient vector.
pub fn sort_roots(roots: &mut [Root]) {
    roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
}

pub fn root_to_weight(r: &[i64]) -> Weight {
    Weight::from_ints(r)
}
