//! Combinatorial invariants of a wonderful variety.
//!
//! Indices are 0-based in memory and 1-based in files.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{Family, RootError, RootSystem, Weight};
use crate::symalg::Q;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Colour {
    pub id: String,
    pub moving: BTreeSet<usize>,
    /// `⟨ρ(D), γ⟩` for each spherical root, in `sigma` order.
    pub rho: Vec<i64>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Descriptor {
    pub family: Family,
    pub rank: usize,
    /// Declared rank of the variety; must equal `sigma.len()`.
    pub variety_rank: usize,
    pub sigma: Vec<Weight>,
    pub sp: BTreeSet<usize>,
    pub colours: Vec<Colour>,
    /// The centre of `G` acts trivially.
    pub adjoint: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub field: String,
    pub rule: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.rule)
    }
}

#[derive(Debug, Error)]
pub enum DescriptorError {
    #[error("invalid descriptor file: {0}")]
    Schema(String),
    #[error("spherical root index {0} out of range")]
    IndexOutOfRange(usize),
    #[error(transparent)]
    Root(#[from] RootError),
}

fn v(field: impl Into<String>, rule: impl Into<String>) -> Violation {
    Violation { field: field.into(), rule: rule.into() }
}

impl Descriptor {
    pub fn root_system(&self) -> Result<RootSystem, RootError> {
        RootSystem::build(self.family, self.rank)
    }

    pub fn colour(&self, id: &str) -> Option<&Colour> {
        self.colours.iter().find(|c| c.id == id)
    }

    /// No simple root moves two colours.
    pub fn is_strictness_candidate(&self) -> bool {
        self.colours.iter().enumerate().all(|(i, a)| {
            self.colours.iter().skip(i + 1).all(|b| a.moving.is_disjoint(&b.moving))
        })
    }

    fn simple_root_in_sigma(&self, a: usize) -> bool {
        let w = Weight::simple(self.rank, a);
        self.sigma.contains(&w)
    }

    /// All invariant violations; empty iff valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let rs = match self.root_system() {
            Ok(rs) => rs,
            Err(e) => return vec![v("diagram", e.to_string())],
        };
        if self.sigma.len() != self.variety_rank {
            out.push(v("sigma", format!("{} spherical roots for declared rank {}", self.sigma.len(), self.variety_rank)));
        }
        for (k, g) in self.sigma.iter().enumerate() {
            let f = format!("sigma[{k}]");
            if g.rank() != self.rank {
                out.push(v(&f, format!("has {} coefficients, expected {}", g.rank(), self.rank)));
                continue;
            }
            if g.is_zero() {
                out.push(v(&f, "spherical root is zero"));
            }
            if !g.is_nonneg() {
                out.push(v(&f, "negative coefficient"));
            }
            if self.adjoint && !g.is_integral() {
                out.push(v(&f, "non-integral coefficient with adjoint action"));
            }
        }
        for &s in &self.sp {
            if s >= self.rank {
                out.push(v("sp", format!("index {} out of range", s + 1)));
            }
        }
        let mut ids = BTreeSet::new();
        for c in &self.colours {
            let f = format!("colours[{}]", c.id);
            if !ids.insert(c.id.clone()) {
                out.push(v(&f, "duplicate colour id"));
            }
            if c.moving.is_empty() || c.moving.len() > 2 {
                out.push(v(&f, format!("{} moving roots, expected 1 or 2", c.moving.len())));
            }
            if let Some(&bad) = c.moving.iter().find(|&&a| a >= self.rank) {
                out.push(v(&f, format!("moving root {} out of range", bad + 1)));
                continue;
            }
            if c.moving.len() == 2 {
                let m: Vec<usize> = c.moving.iter().copied().collect();
                if rs.cartan[m[0]][m[1]] != 0 {
                    out.push(v(&f, format!("moving roots α{} and α{} are not orthogonal", m[0] + 1, m[1] + 1)));
                }
            }
            for a in &c.moving {
                if self.sp.contains(a) {
                    out.push(v(&f, format!("moving root α{} lies in sp", a + 1)));
                }
            }
            if c.rho.len() != self.sigma.len() {
                out.push(v(&f, format!("{} ρ-pairings for {} spherical roots", c.rho.len(), self.sigma.len())));
            }
        }
        for a in 0..self.rank {
            let movers: Vec<&Colour> = self.colours.iter().filter(|c| c.moving.contains(&a)).collect();
            let allowed = if self.simple_root_in_sigma(a) { 2 } else { 1 };
            if movers.len() > allowed {
                out.push(v(
                    "colours",
                    format!("α{} moves {} colours ({})", a + 1, movers.len(), if allowed == 2 { "at most 2 since α ∈ Σ" } else { "at most 1" }),
                ));
            }
        }
        out
    }

    /// Rank-1 descriptor for the `i`-th spherical root.
    pub fn rank1_slice(&self, i: usize) -> Result<Descriptor, DescriptorError> {
        let g = self.sigma.get(i).ok_or(DescriptorError::IndexOutOfRange(i))?;
        let supp = g.support();
        let colours = self
            .colours
            .iter()
            .filter(|c| c.rho.get(i).is_some_and(|r| *r != 0) || c.moving.iter().any(|a| supp.contains(a)))
            .map(|c| Colour { id: c.id.clone(), moving: c.moving.clone(), rho: vec![c.rho.get(i).copied().unwrap_or(0)] })
            .collect();
        Ok(Descriptor {
            family: self.family,
            rank: self.rank,
            variety_rank: 1,
            sigma: vec![g.clone()],
            sp: self.sp.clone(),
            colours,
            adjoint: self.adjoint,
        })
    }

    pub fn from_json(s: &str) -> Result<Descriptor, DescriptorError> {
        let f: DescriptorFile = serde_json::from_str(s).map_err(|e| DescriptorError::Schema(e.to_string()))?;
        f.into_descriptor()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DescriptorFile::from(self)).expect("serializable")
    }
}

/// Rational number in a file: an integer or a `"p/q"` string.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonQ {
    Int(i64),
    Str(String),
}

impl JsonQ {
    pub fn to_q(&self) -> Result<Q, String> {
        match self {
            JsonQ::Int(i) => Ok(crate::symalg::q(*i)),
            JsonQ::Str(s) => s.trim().parse::<Q>().map_err(|_| format!("not a rational number: {s:?}")),
        }
    }

    pub fn from_q(x: &Q) -> JsonQ {
        if x.is_integer() {
            if let Ok(i) = i64::try_from(x.to_integer()) {
                return JsonQ::Int(i);
            }
        }
        JsonQ::Str(x.to_string())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColourFile {
    pub id: String,
    pub moving: Vec<usize>,
    #[serde(default)]
    pub rho: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorFile {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub family: String,
    pub rank: usize,
    pub variety_rank: usize,
    pub sigma: Vec<Vec<JsonQ>>,
    #[serde(default)]
    pub sp: Vec<usize>,
    pub colours: Vec<ColourFile>,
    #[serde(default = "default_true")]
    pub adjoint: bool,
}

fn default_version() -> u32 {
    SCHEMA_VERSION
}

fn default_true() -> bool {
    true
}

fn one_based(i: usize, what: &str) -> Result<usize, DescriptorError> {
    i.checked_sub(1).ok_or_else(|| DescriptorError::Schema(format!("{what}: indices are 1-based, got 0")))
}

impl DescriptorFile {
    pub fn into_descriptor(self) -> Result<Descriptor, DescriptorError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(DescriptorError::Schema(format!("unsupported schema_version {}", self.schema_version)));
        }
        let family: Family = self.family.parse()?;
        let sigma = self
            .sigma
            .iter()
            .map(|g| g.iter().map(JsonQ::to_q).collect::<Result<Vec<_>, _>>().map(Weight))
            .collect::<Result<Vec<_>, _>>()
            .map_err(DescriptorError::Schema)?;
        let sp = self.sp.iter().map(|&i| one_based(i, "sp")).collect::<Result<_, _>>()?;
        let colours = self
            .colours
            .into_iter()
            .map(|c| {
                Ok(Colour {
                    moving: c.moving.iter().map(|&i| one_based(i, "moving")).collect::<Result<_, _>>()?,
                    id: c.id,
                    rho: c.rho,
                })
            })
            .collect::<Result<_, DescriptorError>>()?;
        Ok(Descriptor { family, rank: self.rank, variety_rank: self.variety_rank, sigma, sp, colours, adjoint: self.adjoint })
    }
}

impl From<&Descriptor> for DescriptorFile {
    fn from(d: &Descriptor) -> DescriptorFile {
        DescriptorFile {
            schema_version: SCHEMA_VERSION,
            family: d.family.to_string(),
            rank: d.rank,
            variety_rank: d.variety_rank,
            sigma: d.sigma.iter().map(|g| g.0.iter().map(JsonQ::from_q).collect()).collect(),
            sp: d.sp.iter().map(|i| i + 1).collect(),
            colours: d
                .colours
                .iter()
                .map(|c| ColourFile { id: c.id.clone(), moving: c.moving.iter().map(|i| i + 1).collect(), rho: c.rho.clone() })
                .collect(),
            adjoint: d.adjoint,
        }
    }
}

/// Ready-made descriptors used in examples and tests.
pub mod examples {
    use super::*;

    fn colour(id: &str, moving: &[usize], rho: &[i64]) -> Colour {
        Colour { id: id.to_string(), moving: moving.iter().copied().collect(), rho: rho.to_vec() }
    }

    /// `P¹×P¹` under diagonal `SL2`.
    pub fn p1_times_p1() -> Descriptor {
        Descriptor {
            family: Family::A,
            rank: 1,
            variety_rank: 1,
            sigma: vec![Weight::from_ints(&[1])],
            sp: BTreeSet::new(),
            colours: vec![colour("D+", &[0], &[1]), colour("D-", &[0], &[1])],
            adjoint: true,
        }
    }

    /// `P² = P(Sym² C²)`.
    pub fn p2(adjoint: bool) -> Descriptor {
        Descriptor {
            family: Family::A,
            rank: 1,
            variety_rank: 1,
            sigma: vec![Weight::from_ints(&[2])],
            sp: BTreeSet::new(),
            colours: vec![colour("D", &[0], &[2])],
            adjoint,
        }
    }

    /// Rank-0 flag variety `G/B`: one colour per simple root.
    pub fn flag_variety(family: Family, rank: usize) -> Descriptor {
        Descriptor {
            family,
            rank,
            variety_rank: 0,
            sigma: vec![],
            sp: BTreeSet::new(),
            colours: (0..rank).map(|i| colour(&format!("D{}", i + 1), &[i], &[])).collect(),
            adjoint: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    #[test]
    fn p1p1_is_valid() {
        assert!(p1_times_p1().validate().is_empty());
        assert!(!p1_times_p1().is_strictness_candidate());
        assert!(p2(true).validate().is_empty());
        assert!(flag_variety(Family::A, 2).validate().is_empty());
    }

    #[test]
    fn negative_root_rejected() {
        let mut d = p1_times_p1();
        d.sigma = vec![Weight::from_ints(&[-1])];
        let vs = d.validate();
        assert!(vs.iter().any(|x| x.field == "sigma[0]" && x.rule.contains("negative")));
    }

    #[test]
    fn non_orthogonal_pair_rejected() {
        let mut d = flag_variety(Family::A, 2);
        d.colours = vec![Colour { id: "D".into(), moving: [0, 1].into_iter().collect(), rho: vec![] }];
        let vs = d.validate();
        assert!(vs.iter().any(|x| x.rule.contains("not orthogonal")), "{vs:?}");
        let mut d3 = flag_variety(Family::A, 3);
        d3.colours = vec![
            Colour { id: "D".into(), moving: [0, 2].into_iter().collect(), rho: vec![] },
            Colour { id: "E".into(), moving: [1].into_iter().collect(), rho: vec![] },
        ];
        assert!(d3.validate().is_empty());
    }

    #[test]
    fn moving_in_sp_and_shared_roots_rejected() {
        let mut d = p2(true);
        d.sp.insert(0);
        assert!(d.validate().iter().any(|x| x.rule.contains("lies in sp")));
        let mut d = flag_variety(Family::A, 2);
        d.colours.push(Colour { id: "X".into(), moving: [0].into_iter().collect(), rho: vec![] });
        assert!(d.validate().iter().any(|x| x.rule.contains("moves 2 colours")));
    }

    #[test]
    fn slices() {
        let d = p1_times_p1();
        assert_eq!(d.rank1_slice(0).unwrap(), d);
        assert!(d.rank1_slice(1).is_err());
        let two = Descriptor {
            family: Family::A,
            rank: 2,
            variety_rank: 2,
            sigma: vec![Weight::from_ints(&[1, 0]), Weight::from_ints(&[0, 1])],
            sp: BTreeSet::new(),
            colours: vec![
                Colour { id: "A".into(), moving: [0].into_iter().collect(), rho: vec![1, -1] },
                Colour { id: "B".into(), moving: [0].into_iter().collect(), rho: vec![1, 0] },
                Colour { id: "C".into(), moving: [1].into_iter().collect(), rho: vec![0, 1] },
            ],
            adjoint: true,
        };
        let s = two.rank1_slice(0).unwrap();
        assert_eq!(s.sigma, vec![Weight::from_ints(&[1, 0])]);
        assert_eq!(s.sp, two.sp);
        assert_eq!(s.colours.iter().map(|c| c.id.as_str()).collect::<Vec<_>>(), vec!["A", "B"]);
        assert_eq!(s.rank1_slice(0).unwrap(), s);
    }

    #[test]
    fn json_roundtrip() {
        let d = p1_times_p1();
        let back = Descriptor::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        let half = r#"{"family":"A","rank":3,"variety_rank":1,"sigma":[["1/2",1,"1/2"]],"sp":[1,3],
            "colours":[{"id":"D","moving":[2],"rho":[1]}],"adjoint":false}"#;
        let d = Descriptor::from_json(half).unwrap();
        assert!(d.validate().is_empty());
        assert!(Descriptor::from_json(r#"{"family":"A"}"#).is_err());
        assert!(Descriptor::from_json(&half.replace("\"sp\":[1,3]", "\"sp\":[0]")).is_err());
    }
}
