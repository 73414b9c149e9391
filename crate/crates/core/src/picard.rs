//! Line bundles on a wonderful variety, written `δ = Σ n_D D` over colours.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::classify::Instance;
use crate::descriptor::{Colour, Descriptor};
use crate::rootsys::{RootError, RootSystem, Weight};
use crate::symalg::{q, Q};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PicardError {
    #[error("bundle has coefficients for {got:?}, descriptor has colours {want:?}")]
    ColourMismatch { got: Vec<String>, want: Vec<String> },
    #[error("unknown colour {0:?}")]
    UnknownColour(String),
    #[error("spherical root {0} is not bounded by any colour; the section weights are infinite")]
    Unbounded(String),
    #[error("bundle is not globally generated")]
    NotGloballyGenerated,
    #[error("entry {0} is strict; very ampleness is covered by the immersion criterion")]
    StrictEntry(String),
    #[error("entry {0} has no transcribed pole data")]
    NoPoleData(String),
    #[error("bundle is not ample")]
    NotAmple,
    #[error(transparent)]
    Root(#[from] RootError),
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct LineBundle {
    pub coeffs: BTreeMap<String, i64>,
}

impl LineBundle {
    pub fn new(d: &Descriptor, coeffs: &[i64]) -> Result<LineBundle, PicardError> {
        if coeffs.len() != d.colours.len() {
            return Err(PicardError::ColourMismatch {
                got: (0..coeffs.len()).map(|i| format!("#{}", i + 1)).collect(),
                want: d.colours.iter().map(|c| c.id.clone()).collect(),
            });
        }
        Ok(LineBundle { coeffs: d.colours.iter().map(|c| c.id.clone()).zip(coeffs.iter().copied()).collect() })
    }

    pub fn uniform(d: &Descriptor, n: i64) -> LineBundle {
        LineBundle { coeffs: d.colours.iter().map(|c| (c.id.clone(), n)).collect() }
    }

    pub fn zero(d: &Descriptor) -> LineBundle {
        LineBundle::uniform(d, 0)
    }

    pub fn add(&self, other: &LineBundle) -> LineBundle {
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &other.coeffs {
            *coeffs.entry(k.clone()).or_insert(0) += v;
        }
        LineBundle { coeffs }
    }

    fn check(&self, d: &Descriptor) -> Result<(), PicardError> {
        let want: BTreeSet<&String> = d.colours.iter().map(|c| &c.id).collect();
        let got: BTreeSet<&String> = self.coeffs.keys().collect();
        if want != got {
            return Err(PicardError::ColourMismatch {
                got: got.into_iter().cloned().collect(),
                want: want.into_iter().cloned().collect(),
            });
        }
        Ok(())
    }

    fn get(&self, id: &str) -> i64 {
        self.coeffs.get(id).copied().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BundleClass {
    Ample,
    GloballyGenerated,
    Neither,
}

pub fn classify_bundle(d: &Descriptor, l: &LineBundle) -> Result<BundleClass, PicardError> {
    l.check(d)?;
    let v: Vec<i64> = l.coeffs.values().copied().collect();
    Ok(if v.iter().all(|&n| n > 0) {
        BundleClass::Ample
    } else if v.iter().all(|&n| n >= 0) {
        BundleClass::GloballyGenerated
    } else {
        BundleClass::Neither
    })
}

fn doubled_in_sigma(d: &Descriptor, a: usize) -> bool {
    let w = Weight::simple(d.rank, a).scale(&q(2));
    d.sigma.contains(&w)
}

/// Intersection multiplicity of the colour with the closed orbit.
pub fn colour_multiplicity(d: &Descriptor, colour: &Colour) -> u8 {
    if colour.moving.iter().any(|&a| doubled_in_sigma(d, a)) {
        2
    } else {
        1
    }
}

/// Weight of the restriction of `O(D)` to the closed orbit.
pub fn restrict_to_z(rs: &RootSystem, d: &Descriptor, colour: &Colour) -> Weight {
    let mut w = Weight::zero(rs.rank);
    for &a in &colour.moving {
        w = &w + rs.fundamental_weight(a);
    }
    w.scale(&q(colour_multiplicity(d, colour) as i64))
}

/// `χ_L = Σ n_D · restrict_to_z(D)`.
pub fn canonical_weight(d: &Descriptor, l: &LineBundle) -> Result<Weight, PicardError> {
    l.check(d)?;
    let rs = d.root_system()?;
    Ok(canonical_weight_in(&rs, d, l))
}

fn canonical_weight_in(rs: &RootSystem, d: &Descriptor, l: &LineBundle) -> Weight {
    let mut chi = Weight::zero(rs.rank);
    for c in &d.colours {
        chi = &chi + &restrict_to_z(rs, d, c).scale(&q(l.get(&c.id)));
    }
    chi
}

/// Highest weights of the simple modules in `Γ(X, L)`.
pub fn section_weights(d: &Descriptor, l: &LineBundle) -> Result<BTreeSet<Weight>, PicardError> {
    if classify_bundle(d, l)? == BundleClass::Neither {
        return Err(PicardError::NotGloballyGenerated);
    }
    let rs = d.root_system()?;
    let chi = canonical_weight_in(&rs, d, l);
    // c_γ ≤ n_D / ρ_D(γ) for every colour pairing positively with γ
    let mut bounds = Vec::with_capacity(d.sigma.len());
    for (k, g) in d.sigma.iter().enumerate() {
        let b = d
            .colours
            .iter()
            .filter_map(|c| {
                let r = *c.rho.get(k)?;
                (r > 0).then(|| l.get(&c.id).div_euclid(r))
            })
            .min()
            .ok_or_else(|| PicardError::Unbounded(g.pretty()))?;
        bounds.push(b);
    }
    let mut out = BTreeSet::new();
    let mut c = vec![0i64; d.sigma.len()];
    loop {
        let admissible = d.colours.iter().all(|col| {
            let pull: i64 = c.iter().enumerate().map(|(k, ck)| ck * col.rho.get(k).copied().unwrap_or(0)).sum();
            l.get(&col.id) - pull >= 0
        });
        if admissible {
            let mut w = chi.clone();
            for (ck, g) in c.iter().zip(&d.sigma) {
                w = &w - &g.scale(&q(*ck));
            }
            if rs.is_dominant(&w) {
                out.insert(w);
            }
        }
        // odometer over 0..=bounds
        let mut i = 0;
        loop {
            if i == c.len() {
                return Ok(out);
            }
            if c[i] < bounds[i] {
                c[i] += 1;
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// `1/f_γ ∈ Γ(X, L)`: every colour coefficient covers the pole order there.
pub fn very_ample_witness(entry: &Instance, coeffs: &[i64]) -> Result<bool, PicardError> {
    if entry.self_normalizing {
        return Err(PicardError::StrictEntry(entry.label.clone()));
    }
    if coeffs.len() != entry.colours.len() {
        return Err(PicardError::ColourMismatch {
            got: (0..coeffs.len()).map(|i| format!("#{}", i + 1)).collect(),
            want: (0..entry.colours.len()).map(|i| format!("D{}", i + 1)).collect(),
        });
    }
    if coeffs.iter().any(|&n| n <= 0) {
        return Err(PicardError::NotAmple);
    }
    let mut ok = true;
    for (c, &n) in entry.colours.iter().zip(coeffs) {
        let pole = c.pole.ok_or_else(|| PicardError::NoPoleData(entry.label.clone()))?;
        ok &= n - pole >= 0;
    }
    Ok(ok)
}

/// Pairing helper for reports: `⟨χ, α_i∨⟩` for every simple root.
pub fn dominant_coordinates(rs: &RootSystem, w: &Weight) -> Vec<Q> {
    (0..rs.rank).map(|i| rs.pair(w, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Table;
    use crate::descriptor::examples::*;
    use crate::rootsys::Family;

    #[test]
    fn bundle_classes() {
        let d = flag_variety(Family::A, 2);
        assert_eq!(classify_bundle(&d, &LineBundle::new(&d, &[1, 1]).unwrap()), Ok(BundleClass::Ample));
        assert_eq!(classify_bundle(&d, &LineBundle::new(&d, &[0, 1]).unwrap()), Ok(BundleClass::GloballyGenerated));
        assert_eq!(classify_bundle(&d, &LineBundle::new(&d, &[-1, 1]).unwrap()), Ok(BundleClass::Neither));
        assert!(LineBundle::new(&d, &[1]).is_err());
    }

    #[test]
    fn multiplicities_and_restrictions() {
        let p2 = p2(true);
        assert_eq!(colour_multiplicity(&p2, &p2.colours[0]), 2);
        let pp = p1_times_p1();
        assert!(pp.colours.iter().all(|c| colour_multiplicity(&pp, c) == 1));
        let rs = RootSystem::build(Family::A, 1).unwrap();
        assert_eq!(restrict_to_z(&rs, &p2, &p2.colours[0]), rs.fundamental_weight(0).scale(&q(2)));
        assert_eq!(restrict_to_z(&rs, &pp, &pp.colours[0]), rs.fundamental_weight(0).clone());
        let a3 = RootSystem::build(Family::A, 3).unwrap();
        let mut d = flag_variety(Family::A, 3);
        d.colours = vec![Colour { id: "D".into(), moving: [0, 2].into_iter().collect(), rho: vec![] }];
        assert_eq!(restrict_to_z(&a3, &d, &d.colours[0]), a3.fundamental_weight(0) + a3.fundamental_weight(2));
    }

    #[test]
    fn canonical_weights() {
        let d = flag_variety(Family::B, 3);
        let rs = d.root_system().unwrap();
        let chi = canonical_weight(&d, &LineBundle::uniform(&d, 1)).unwrap();
        let mut rho = Weight::zero(3);
        for i in 0..3 {
            rho = &rho + rs.fundamental_weight(i);
        }
        assert_eq!(chi, rho);
        let p2 = p2(true);
        assert_eq!(canonical_weight(&p2, &LineBundle::uniform(&p2, 1)).unwrap(), Weight::from_ints(&[1]));
        assert!(canonical_weight(&p2, &LineBundle::zero(&p2)).unwrap().is_zero());
    }

    #[test]
    fn section_weight_examples() {
        let g = flag_variety(Family::A, 2);
        let l = LineBundle::new(&g, &[2, 1]).unwrap();
        let chi = canonical_weight(&g, &l).unwrap();
        assert_eq!(section_weights(&g, &l).unwrap(), [chi].into_iter().collect());
        let pp = p1_times_p1();
        let l = LineBundle::uniform(&pp, 1);
        let expect: BTreeSet<Weight> = [Weight::from_ints(&[1]), Weight::zero(1)].into_iter().collect();
        assert_eq!(section_weights(&pp, &l).unwrap(), expect);
        let mut loose = pp.clone();
        for c in &mut loose.colours {
            c.rho = vec![0];
        }
        assert!(matches!(section_weights(&loose, &l), Err(PicardError::Unbounded(_))));
    }

    #[test]
    fn very_ample_on_non_strict_entries() {
        let t = Table::builtin();
        let b = t.get("7B").unwrap().instantiate(2).unwrap();
        assert_eq!(very_ample_witness(&b, &[1]), Ok(true));
        let g = t.get("13").unwrap().instantiate(2).unwrap();
        assert_eq!(very_ample_witness(&g, &[3]), Ok(true));
        let mut hypothetical = g.clone();
        hypothetical.colours[0].pole = Some(2);
        assert_eq!(very_ample_witness(&hypothetical, &[1]), Ok(false));
        let strict = t.get("15").unwrap().instantiate(2).unwrap();
        assert!(matches!(very_ample_witness(&strict, &[1, 1]), Err(PicardError::StrictEntry(_))));
    }
}
