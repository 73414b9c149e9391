//! Jacobian ranks at the origin of translated sections on the canonical chart.
//!
//! A section is a polynomial in the chart coordinates `x_0..x_{d-1}`
//! followed by the normal coordinate `y` at index `d`. Translating by `u`
//! and differentiating at the origin gives one row per (section, `u`):
//! left-invariant derivatives at `u` in the `x` directions and `∂_y` at `(u, 0)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cases::Chart;
use super::VerifyError;
use crate::exec::{self, Mode};
use crate::symalg::lie::Side;
use crate::symalg::linalg::Mat;
use crate::symalg::{qq, Poly, Q};

/// Precomputed left-invariant fields of a chart.
pub struct Jacobian<'a> {
    chart: &'a Chart,
    fields: Vec<Vec<Poly>>,
    with_y: bool,
}

impl<'a> Jacobian<'a> {
    pub fn new(chart: &'a Chart, with_y: bool) -> Result<Jacobian<'a>, VerifyError> {
        let fields = (0..chart.dim()).map(|i| chart.rep.field(i, Side::Right)).collect::<Result<_, _>>()?;
        Ok(Jacobian { chart, fields, with_y })
    }

    pub fn cols(&self) -> usize {
        self.chart.dim() + usize::from(self.with_y)
    }

    fn row(&self, sigma: &Poly, u: &[Q]) -> Vec<Q> {
        let d = self.chart.dim();
        let mut point = u.to_vec();
        point.push(Q::from_integer(0.into()));
        let grad: Vec<Q> = (0..d).map(|j| sigma.derivative(j).eval(&point)).collect();
        let mut row: Vec<Q> = self
            .fields
            .iter()
            .map(|f| f.iter().zip(&grad).map(|(p, g)| p.eval(u) * g).sum())
            .collect();
        if self.with_y {
            row.push(sigma.derivative(d).eval(&point));
        }
        row
    }

    /// Exact rank of the stacked rows for every section at every translation.
    pub fn rank(&self, sections: &[Poly], translations: &[Vec<Q>]) -> Result<usize, VerifyError> {
        let d = self.chart.dim();
        if let Some(u) = translations.iter().find(|u| u.len() != d) {
            return Err(VerifyError::Inconsistent(format!("translation has {} coordinates, chart has {d}", u.len())));
        }
        let bound = d + usize::from(self.with_y);
        if let Some(s) = sections.iter().find(|s| s.var_bound() > bound) {
            return Err(VerifyError::Inconsistent(format!("section uses variable {} beyond the chart", s.var_bound() - 1)));
        }
        let rows: Vec<Vec<Q>> =
            translations.iter().flat_map(|u| sections.iter().map(move |s| self.row(s, u))).collect();
        if rows.is_empty() {
            return Ok(0);
        }
        Ok(Mat::from_rows(rows).rank())
    }

    /// Largest rank over `trials` draws of `count` translations, each trial
    /// seeded with `seed + trial`.
    pub fn sampled_rank(
        &self,
        sections: &[Poly],
        count: usize,
        trials: usize,
        seed: u64,
        mode: Mode,
    ) -> Result<usize, VerifyError> {
        let d = self.chart.dim();
        let ranks = exec::map_range(mode, trials, |t| {
            let us = random_points(d, count, seed.wrapping_add(t as u64));
            self.rank(sections, &us)
        });
        let mut best = 0;
        for r in ranks {
            best = best.max(r?);
        }
        Ok(best)
    }
}

/// Rational points with numerators in `-5..=5` and denominators in `1..=3`.
pub fn random_points(dim: usize, count: usize, seed: u64) -> Vec<Vec<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..dim).map(|_| qq(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::cases;

    #[test]
    fn flag_corner_has_rank_d_minus_one() {
        let c = cases::flag_chart(2).unwrap();
        let corner = c.generic_exp().unwrap().get(0, 2).clone();
        let j = Jacobian::new(&c, false).unwrap();
        assert_eq!(j.sampled_rank(&[corner], 6, 3, 1, Mode::Sequential).unwrap(), c.dim() - 1);
    }

    #[test]
    fn equal_sections_have_rank_at_most_one() {
        let c = cases::flag_chart(2).unwrap();
        let corner = c.generic_exp().unwrap().get(0, 2).clone();
        let j = Jacobian::new(&c, false).unwrap();
        let pts = random_points(c.dim(), 1, 9);
        assert!(j.rank(&[corner.clone(), corner], &pts).unwrap() <= 1);
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(random_points(3, 2, 7), random_points(3, 2, 7));
        assert_ne!(random_points(3, 2, 7), random_points(3, 2, 8));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let c = cases::flag_chart(2).unwrap();
        let j = Jacobian::new(&c, false).unwrap();
        assert!(j.rank(&[Poly::var(0)], &random_points(2, 1, 0)).is_err());
    }
}
