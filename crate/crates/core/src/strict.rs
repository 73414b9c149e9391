//! Simple immersibility: condition (R') on every spherical root, plus the
//! centre acting trivially.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::classify::Table;
use crate::descriptor::Descriptor;
use crate::exec::{self, Mode};
use crate::picard::{self, LineBundle, PicardError};
use crate::rootsys::{RootError, Weight};
use crate::symalg::q;

#[derive(Debug, Error)]
pub enum StrictError {
    #[error("descriptor is invalid: {0}")]
    Invalid(String),
    #[error("not simply immersible: {0}")]
    NotImmersible(String),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Picard(#[from] PicardError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootVerdict {
    pub index: usize,
    pub gamma: String,
    pub pass: bool,
    /// Table entries with spherical root `2γ` and the same `S^p`.
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub immersible: bool,
    pub adjoint: bool,
    pub roots: Vec<RootVerdict>,
}

impl Verdict {
    pub fn failing_roots(&self) -> impl Iterator<Item = &RootVerdict> {
        self.roots.iter().filter(|r| !r.pass)
    }
}

fn ensure_valid(d: &Descriptor) -> Result<(), StrictError> {
    let vs = d.validate();
    if vs.is_empty() {
        Ok(())
    } else {
        Err(StrictError::Invalid(vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")))
    }
}

pub fn check_r_prime(d: &Descriptor, table: &Table) -> Result<Vec<RootVerdict>, StrictError> {
    check_r_prime_with(d, table, Mode::default())
}

pub fn check_r_prime_with(d: &Descriptor, table: &Table, mode: Mode) -> Result<Vec<RootVerdict>, StrictError> {
    ensure_valid(d)?;
    let rs = d.root_system()?;
    Ok(exec::map_range(mode, d.sigma.len(), |i| {
        let g = &d.sigma[i];
        let doubled = g.scale(&q(2));
        let witnesses: Vec<String> = table.lookup(&rs, &doubled, &d.sp).into_iter().map(|m| m.label).collect();
        RootVerdict { index: i, gamma: g.pretty(), pass: witnesses.is_empty(), witnesses }
    }))
}

pub fn is_simply_immersible(d: &Descriptor, table: &Table) -> Result<Verdict, StrictError> {
    let roots = check_r_prime(d, table)?;
    let immersible = d.adjoint && roots.iter().all(|r| r.pass);
    Ok(Verdict { immersible, adjoint: d.adjoint, roots })
}

/// `χ_L` for every ample `L` with colour coefficients in `[1, bound]`.
///
/// Each weight determines a unique simple immersion `X → P(V(χ_L)*)`.
pub fn admissible_module_weights(d: &Descriptor, table: &Table, bound: i64) -> Result<BTreeSet<Weight>, StrictError> {
    let v = is_simply_immersible(d, table)?;
    if !v.immersible {
        let why = if !v.adjoint {
            "the centre acts nontrivially".to_string()
        } else {
            let bad: Vec<String> = v.failing_roots().map(|r| format!("{} (witness {})", r.gamma, r.witnesses.join(", "))).collect();
            format!("condition (R') fails on {}", bad.join("; "))
        };
        return Err(StrictError::NotImmersible(why));
    }
    let mut out = BTreeSet::new();
    if bound < 1 {
        return Ok(out);
    }
    let k = d.colours.len();
    let mut coeffs = vec![1i64; k];
    loop {
        out.insert(picard::canonical_weight(d, &LineBundle::new(d, &coeffs)?)?);
        let mut i = 0;
        loop {
            if i == k {
                return Ok(out);
            }
            if coeffs[i] < bound {
                coeffs[i] += 1;
                break;
            }
            coeffs[i] = 1;
            i += 1;
        }
    }
}
