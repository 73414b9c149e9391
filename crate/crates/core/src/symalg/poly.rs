use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{q, Q};

/// Sparse monomial: sorted `(variable, exponent)` pairs, exponents nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(Vec<(u32, u32)>);

impl Mono {
    pub fn one() -> Mono {
        Mono(Vec::new())
    }

    pub fn var(v: usize) -> Mono {
        Mono(vec![(v as u32, 1)])
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn from_exponents(exps: &[u32]) -> Mono {
        Mono(
            exps.iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(v, e)| (v as u32, *e))
                .collect(),
        )
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| *w as usize == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|(v, e)| (*v as usize, *e))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Mono(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::new();
        let mut j = 0;
        for &(v, e) in &self.0 {
            let mut e = e;
            if j < other.0.len() && other.0[j].0 == v {
                if other.0[j].1 > e {
                    return None;
                }
                e -= other.0[j].1;
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if e > 0 {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Mono(out))
    }

    /// Square root when every exponent is even.
    pub fn sqrt(&self) -> Option<Mono> {
        if self.0.iter().any(|(_, e)| e % 2 == 1) {
            return None;
        }
        Some(Mono(self.0.iter().map(|(v, e)| (*v, e / 2)).collect()))
    }

    /// Removes variable `v` and returns its exponent.
    fn split(&self, v: usize) -> (u32, Mono) {
        let mut e0 = 0;
        let rest = self
            .0
            .iter()
            .filter(|(w, e)| {
                if *w as usize == v {
                    e0 = *e;
                    false
                } else {
                    true
                }
            })
            .copied()
            .collect();
        (e0, Mono(rest))
    }
}

impl Ord for Mono {
    /// Graded lexicographic order, `x0 > x1 > ...`.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            if a.0 != b.0 {
                // smaller variable index present with positive exponent wins
                return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial over the rationals.
///
/// Variables are plain indices; names and T-weights live in a [`super::Ring`].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Mono::one(), c);
        p
    }

    pub fn int(c: i64) -> Poly {
        Poly::constant(q(c))
    }

    pub fn var(v: usize) -> Poly {
        Poly::monomial(Mono::var(v), Q::one())
    }

    pub fn monomial(m: Mono, c: Q) -> Poly {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Leading term in graded lex order.
    pub fn leading(&self) -> Option<(&Mono, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::degree).max()
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&Mono::one())
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn derivative(&self, v: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            if e == 0 {
                continue;
            }
            let m2 = if e > 1 { rest.mul(&Mono(vec![(v as u32, e - 1)])) } else { rest };
            out.add_term(m2, c * q(e as i64));
        }
        out
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// Largest variable index occurring, plus one.
    pub fn var_bound(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v + 1))
            .max()
            .unwrap_or(0)
    }

    /// Replaces variable `v` by `p`.
    pub fn substitute(&self, v: usize, p: &Poly) -> Poly {
        let mut powers: Vec<Poly> = vec![Poly::one()];
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * p;
                powers.push(next);
            }
            out += &(&powers[e as usize] * &Poly::monomial(rest, c.clone()));
        }
        out
    }

    /// Simultaneous substitution `x_i -> images[i]`; variables beyond the
    /// slice are left untouched.
    pub fn compose(&self, images: &[Poly]) -> Poly {
        let mut cache: Vec<Vec<Poly>> = vec![vec![Poly::one()]; images.len()];
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            let mut keep = Vec::new();
            for (v, e) in m.factors() {
                if v < images.len() {
                    let pw = &mut cache[v];
                    while pw.len() <= e as usize {
                        let next = pw.last().unwrap() * &images[v];
                        pw.push(next);
                    }
                    t = &t * &pw[e as usize];
                } else {
                    keep.push((v as u32, e));
                }
            }
            if !keep.is_empty() {
                t = &t * &Poly::monomial(Mono(keep), Q::one());
            }
            out += &t;
        }
        out
    }

    /// Sets the listed variables to zero.
    pub fn set_zero(&self, vars: &[usize]) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|v| m.exponent(*v) == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Full evaluation; missing variables count as zero.
    pub fn eval(&self, point: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                match point.get(v) {
                    Some(x) => t *= num_traits::pow(x.clone(), e as usize),
                    None => {
                        t = Q::zero();
                        break;
                    }
                }
            }
            acc += t;
        }
        acc
    }

    /// Drops all terms of degree above `d` in variable `v`.
    pub fn truncate(&self, v: usize, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of_power(&self, v: usize, k: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            if e == k {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Rescales so that the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    /// `Some(c)` with `self = c * other`.
    pub fn ratio_to(&self, other: &Poly) -> Option<Q> {
        if self.is_zero() && other.is_zero() {
            return Some(Q::one());
        }
        let (m, c) = other.leading()?;
        let r = self.coeff(m) / c;
        if r.is_zero() {
            return None;
        }
        if &other.scale(&r) == self {
            Some(r)
        } else {
            None
        }
    }

    /// Exact square root up to sign: returns `(sign, s)` with `self = sign * s^2`.
    pub fn sqrt_up_to_sign(&self) -> Option<(i32, Poly)> {
        for sign in [1i32, -1] {
            let target = if sign == 1 { self.clone() } else { -self };
            if let Some(s) = target.sqrt() {
                return Some((sign, s));
            }
        }
        None
    }

    /// Exact square root with positive leading coefficient, if one exists.
    pub fn sqrt(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (lm, lc) = self.leading()?;
        let m0 = lm.sqrt()?;
        let c0 = q_sqrt(lc)?;
        let t0 = Poly::monomial(m0.clone(), c0.clone());
        let two_c0 = &c0 * q(2);
        let mut s = t0;
        // terms of s are produced in strictly decreasing order, so the loop
        // is bounded by the number of monomials below m0
        loop {
            let r = self - &(&s * &s);
            let Some((rm, rc)) = r.leading() else { return Some(s) };
            let next = rm.div(&m0)?;
            if next >= m0 {
                return None;
            }
            if let Some((low, _)) = s.terms.iter().next() {
                if &next >= low {
                    return None;
                }
            }
            s.add_term(next, rc / &two_c0);
        }
    }
}

fn q_sqrt(c: &Q) -> Option<Q> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    if &(&n * &n) == c.numer() && &(&d * &d) == c.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.var_bound()).map(|i| format!("v{i}")).collect();
        f.write_str(&render(self, &names))
    }
}

/// Canonical rendering: terms in decreasing order, explicit rational coefficients.
pub fn render(p: &Poly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !a.is_one() || m.is_one() {
            factors.push(a.to_string());
        }
        for (v, e) in m.factors() {
            let name = names.get(v).cloned().unwrap_or_else(|| format!("v{v}"));
            if e == 1 {
                factors.push(name);
            } else {
                factors.push(format!("{name}^{e}"));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
