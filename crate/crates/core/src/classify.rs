//! Rank-1 cuspidal wonderful varieties, stored as rank patterns and
//! instantiated on demand.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::descriptor::{Colour, Descriptor};
use crate::rootsys::{Family, RootSystem, Weight};
use crate::symalg::{q, Q};

/// The table shipped with the crate.
pub const BUILTIN_TABLE: &str = include_str!("../data/classification.json");

/// How many ranks past `rank_min` the loader instantiates when checking an
/// unbounded family.
const VALIDATION_SPAN: usize = 4;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("entry {label}: {field}: {rule}")]
    Entry { label: String, field: String, rule: String },
}

fn entry_err(label: &str, field: &str, rule: impl Into<String>) -> TableError {
    TableError::Entry { label: label.to_string(), field: field.to_string(), rule: rule.into() }
}

/// Index expression: an integer, `n`, `n-k` or `n+k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexExpr {
    uses_n: bool,
    offset: i64,
}

impl IndexExpr {
    pub fn parse(s: &str) -> Result<IndexExpr, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Ok(k) = s.parse::<i64>() {
            return Ok(IndexExpr { uses_n: false, offset: k });
        }
        let rest = s.strip_prefix('n').ok_or_else(|| format!("bad index expression {s:?}"))?;
        let offset = if rest.is_empty() {
            0
        } else if let Some(k) = rest.strip_prefix('-') {
            -k.parse::<i64>().map_err(|_| format!("bad index expression {s:?}"))?
        } else if let Some(k) = rest.strip_prefix('+') {
            k.parse::<i64>().map_err(|_| format!("bad index expression {s:?}"))?
        } else {
            return Err(format!("bad index expression {s:?}"));
        };
        Ok(IndexExpr { uses_n: true, offset })
    }

    /// 1-based value at rank `n`.
    pub fn eval(&self, n: usize) -> i64 {
        self.offset + if self.uses_n { n as i64 } else { 0 }
    }
}

impl fmt::Display for IndexExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.uses_n, self.offset) {
            (false, k) => write!(f, "{k}"),
            (true, 0) => write!(f, "n"),
            (true, k) if k < 0 => write!(f, "n{k}"),
            (true, k) => write!(f, "n+{k}"),
        }
    }
}

/// Inclusive range of indices; empty when `lo > hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexRange {
    pub lo: IndexExpr,
    pub hi: IndexExpr,
}

impl IndexRange {
    fn parse(s: &str) -> Result<IndexRange, String> {
        match s.split_once("..") {
            Some((a, b)) => Ok(IndexRange { lo: IndexExpr::parse(a)?, hi: IndexExpr::parse(b)? }),
            None => {
                let e = IndexExpr::parse(s)?;
                Ok(IndexRange { lo: e.clone(), hi: e })
            }
        }
    }

    fn indices(&self, n: usize) -> Result<Vec<usize>, String> {
        let (lo, hi) = (self.lo.eval(n), self.hi.eval(n));
        (lo..=hi)
            .map(|i| {
                if i < 1 || i as usize > n {
                    Err(format!("index {i} out of range 1..{n}"))
                } else {
                    Ok(i as usize - 1)
                }
            })
            .collect()
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// Term of a spherical-root pattern such as `2*a[2..n-1]` or `1/2*a(n-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaTerm {
    pub coeff: Q,
    pub range: IndexRange,
}

impl GammaTerm {
    pub fn parse(s: &str) -> Result<GammaTerm, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (coeff, body) = match s.split_once('*') {
            Some((c, b)) => (c.parse::<Q>().map_err(|_| format!("bad coefficient in {s:?}"))?, b.to_string()),
            None => (q(1), s.clone()),
        };
        let idx = body.strip_prefix('a').ok_or_else(|| format!("expected a simple root in {s:?}"))?;
        let range = if let Some(inner) = idx.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            IndexRange::parse(inner)?
        } else if let Some(inner) = idx.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            IndexRange::parse(inner)?
        } else {
            IndexRange::parse(idx)?
        };
        Ok(GammaTerm { coeff, range })
    }
}

impl fmt::Display for GammaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff != q(1) {
            write!(f, "{}*", self.coeff)?;
        }
        if self.range.lo == self.range.hi {
            let i = self.range.lo.to_string();
            if i.len() > 1 && i.starts_with('n') {
                write!(f, "a({i})")
            } else {
                write!(f, "a{i}")
            }
        } else {
            write!(f, "a[{}]", self.range)
        }
    }
}

pub fn render_index_set(set: &[IndexRange]) -> String {
    format!("{{{}}}", set.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(","))
}

/// Parses `{}`, `{1,3..n}`, `{2..n-1}`.
pub fn parse_index_set(s: &str) -> Result<Vec<IndexRange>, String> {
    let t = s.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| format!("index set must be braced: {s:?}"))?;
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner.split(',').map(IndexRange::parse).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IndexJson {
    Int(i64),
    Str(String),
}

impl IndexJson {
    fn parse(&self) -> Result<IndexExpr, String> {
        match self {
            IndexJson::Int(i) => Ok(IndexExpr { uses_n: false, offset: *i }),
            IndexJson::Str(s) => IndexExpr::parse(s),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColourJson {
    pub moving: Vec<IndexJson>,
    pub rho_gamma: i64,
    pub pole: Option<i64>,
}

/// One row of the data file, as written.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryJson {
    pub label: String,
    pub family: String,
    pub rank_min: usize,
    #[serde(default)]
    pub rank_max: Option<usize>,
    pub rank_param: bool,
    pub gamma: Vec<String>,
    pub sp: String,
    pub colours: Vec<ColourJson>,
    pub self_normalizing: bool,
    #[serde(default = "default_true")]
    pub adjoint: bool,
    #[serde(default)]
    pub same_as: Option<String>,
    pub source: String,
}

fn default_true() -> bool {
    true
}

#[derive(Clone, Debug)]
pub struct ColourPattern {
    pub moving: Vec<IndexExpr>,
    pub rho_gamma: i64,
    /// Pole order of `1/f_γ` on the colour, when transcribed.
    pub pole: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct Rank1Entry {
    pub label: String,
    pub family: Family,
    pub rank_min: usize,
    pub rank_max: Option<usize>,
    pub rank_param: bool,
    pub gamma: Vec<GammaTerm>,
    pub sp: Vec<IndexRange>,
    pub colours: Vec<ColourPattern>,
    pub self_normalizing: bool,
    pub adjoint: bool,
    pub same_as: Option<String>,
    pub source: String,
}

/// An entry at a concrete rank. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub label: String,
    pub family: Family,
    pub rank: usize,
    pub gamma: Weight,
    pub sp: BTreeSet<usize>,
    pub colours: Vec<InstanceColour>,
    pub self_normalizing: bool,
    pub adjoint: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceColour {
    pub moving: BTreeSet<usize>,
    pub rho_gamma: i64,
    pub pole: Option<i64>,
}

impl Rank1Entry {
    /// Label with any `(n=...)` qualifier removed.
    pub fn base_label(&self) -> &str {
        self.label.split('(').next().unwrap_or(&self.label)
    }

    pub fn allows_rank(&self, n: usize) -> bool {
        n >= self.rank_min && self.rank_max.is_none_or(|m| n <= m) && self.family.valid_rank(n)
    }

    pub fn instantiate(&self, n: usize) -> Result<Instance, String> {
        if !self.allows_rank(n) {
            return Err(format!("rank {n} outside the range of entry {}", self.label));
        }
        let mut gamma = Weight::zero(n);
        for t in &self.gamma {
            for i in t.range.indices(n)? {
                gamma.0[i] += &t.coeff;
            }
        }
        let mut sp = BTreeSet::new();
        for r in &self.sp {
            sp.extend(r.indices(n)?);
        }
        let colours = self
            .colours
            .iter()
            .map(|c| {
                let moving = c
                    .moving
                    .iter()
                    .map(|e| {
                        let i = e.eval(n);
                        if i < 1 || i as usize > n {
                            Err(format!("moving root {i} out of range 1..{n}"))
                        } else {
                            Ok(i as usize - 1)
                        }
                    })
                    .collect::<Result<_, _>>()?;
                Ok(InstanceColour { moving, rho_gamma: c.rho_gamma, pole: c.pole })
            })
            .collect::<Result<_, String>>()?;
        Ok(Instance {
            label: self.label.clone(),
            family: self.family,
            rank: n,
            gamma,
            sp,
            colours,
            self_normalizing: self.self_normalizing,
            adjoint: self.adjoint,
        })
    }

    pub fn to_descriptor(&self, n: usize) -> Result<Descriptor, String> {
        Ok(self.instantiate(n)?.to_descriptor())
    }

    /// Ranks checked by the loader: the whole range, or a window above `rank_min`.
    pub fn sample_ranks(&self) -> Vec<usize> {
        let hi = self.rank_max.unwrap_or(self.rank_min + VALIDATION_SPAN);
        (self.rank_min..=hi).filter(|&n| self.allows_rank(n)).collect()
    }

    fn from_json(e: EntryJson) -> Result<Rank1Entry, TableError> {
        let l = e.label.clone();
        let family: Family = e.family.parse().map_err(|err: crate::rootsys::RootError| entry_err(&l, "family", err.to_string()))?;
        if !family.valid_rank(e.rank_min) {
            return Err(entry_err(&l, "rank_min", format!("{}{} is not a valid type", family, e.rank_min)));
        }
        if let Some(m) = e.rank_max {
            if m < e.rank_min {
                return Err(entry_err(&l, "rank_max", "smaller than rank_min"));
            }
            if e.rank_param && m == e.rank_min {
                return Err(entry_err(&l, "rank_param", "parametric entry with a single rank"));
            }
        } else if !e.rank_param {
            return Err(entry_err(&l, "rank_max", "required for non-parametric entries"));
        }
        let gamma = e
            .gamma
            .iter()
            .map(|s| GammaTerm::parse(s))
            .collect::<Result<_, _>>()
            .map_err(|m| entry_err(&l, "gamma", m))?;
        let sp = parse_index_set(&e.sp).map_err(|m| entry_err(&l, "sp", m))?;
        let colours = e
            .colours
            .iter()
            .map(|c| {
                Ok(ColourPattern {
                    moving: c.moving.iter().map(IndexJson::parse).collect::<Result<_, _>>()?,
                    rho_gamma: c.rho_gamma,
                    pole: c.pole,
                })
            })
            .collect::<Result<_, String>>()
            .map_err(|m| entry_err(&l, "colours", m))?;
        Ok(Rank1Entry {
            label: e.label,
            family,
            rank_min: e.rank_min,
            rank_max: e.rank_max,
            rank_param: e.rank_param,
            gamma,
            sp,
            colours,
            self_normalizing: e.self_normalizing,
            adjoint: e.adjoint,
            same_as: e.same_as,
            source: e.source,
        })
    }

    fn check(&self) -> Result<(), TableError> {
        let l = &self.label;
        for n in self.sample_ranks() {
            let inst = self.instantiate(n).map_err(|m| entry_err(l, "pattern", m))?;
            let at = |f: &str| format!("{f} (n={n})");
            if inst.gamma.is_zero() {
                return Err(entry_err(l, &at("gamma"), "spherical root is zero"));
            }
            if !inst.gamma.is_nonneg() {
                return Err(entry_err(l, &at("gamma"), "negative coefficient"));
            }
            if inst.adjoint && !inst.gamma.is_integral() {
                return Err(entry_err(l, &at("gamma"), "non-integral coefficient on an adjoint entry"));
            }
            let rs = RootSystem::build(self.family, n).map_err(|err| entry_err(l, "family", err.to_string()))?;
            for (k, c) in inst.colours.iter().enumerate() {
                if let Some(a) = c.moving.iter().find(|a| inst.sp.contains(a)) {
                    return Err(entry_err(l, &at(&format!("colours[{k}]")), format!("moving root α{} lies in sp", a + 1)));
                }
                if let Some(p) = c.pole {
                    if p < 1 {
                        return Err(entry_err(l, &at(&format!("colours[{k}]")), "pole order must be positive"));
                    }
                }
                let expect = inst.expected_rho(&rs, c);
                if expect != Some(c.rho_gamma) {
                    return Err(entry_err(
                        l,
                        &at(&format!("colours[{k}]")),
                        format!("rho_gamma {} but the moving roots give {expect:?}", c.rho_gamma),
                    ));
                }
            }
            for a in 0..n {
                let movers = inst.colours.iter().filter(|c| c.moving.contains(&a)).count();
                let limit = if inst.gamma == Weight::simple(n, a) { 2 } else { 1 };
                if movers > limit {
                    return Err(entry_err(l, &at("colours"), format!("α{} moves {movers} colours", a + 1)));
                }
            }
            let vs = inst.to_descriptor().validate();
            if let Some(v) = vs.first() {
                return Err(entry_err(l, &at("descriptor"), v.to_string()));
            }
        }
        Ok(())
    }
}

impl Instance {
    /// `⟨ρ(D), γ⟩` forced by the moving roots: `1` for a root in Σ,
    /// `⟨γ, α∨⟩/2` when `2α = γ`, and `⟨γ, α∨⟩` otherwise.
    fn expected_rho(&self, rs: &RootSystem, c: &InstanceColour) -> Option<i64> {
        let mut total = Q::from_integer(0.into());
        for &a in &c.moving {
            let simple = Weight::simple(self.rank, a);
            let pairing = rs.pair(&self.gamma, a);
            if self.gamma == simple {
                total += q(1);
            } else if self.gamma == simple.scale(&q(2)) {
                total += pairing / q(2);
            } else {
                total += pairing;
            }
        }
        total.is_integer().then(|| i64::try_from(total.to_integer()).ok()).flatten()
    }

    pub fn to_descriptor(&self) -> Descriptor {
        let colours = self
            .colours
            .iter()
            .enumerate()
            .map(|(k, c)| Colour { id: format!("D{}", k + 1), moving: c.moving.clone(), rho: vec![c.rho_gamma] })
            .collect();
        Descriptor {
            family: self.family,
            rank: self.rank,
            variety_rank: 1,
            sigma: vec![self.gamma.clone()],
            sp: self.sp.clone(),
            colours,
            adjoint: self.adjoint,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub entries: Vec<Rank1Entry>,
}

/// A table entry matched at a concrete rank, with the relabelling `perm`
/// sending the entry's simple root `i` to the queried root `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Match {
    pub label: String,
    pub rank: usize,
    pub perm: Vec<usize>,
}

impl Table {
    pub fn load(bytes: &[u8]) -> Result<Table, TableError> {
        let rows: Vec<EntryJson> = serde_json::from_slice(bytes).map_err(|e| TableError::Schema(e.to_string()))?;
        let mut seen = BTreeSet::new();
        let mut entries = Vec::with_capacity(rows.len());
        for r in rows {
            if !seen.insert(r.label.clone()) {
                return Err(TableError::DuplicateLabel(r.label));
            }
            let e = Rank1Entry::from_json(r)?;
            e.check()?;
            entries.push(e);
        }
        for e in &entries {
            if let Some(a) = &e.same_as {
                if !seen.contains(a) {
                    return Err(entry_err(&e.label, "same_as", format!("unknown label {a:?}")));
                }
            }
        }
        Ok(Table { entries })
    }

    pub fn builtin() -> Table {
        Table::load(BUILTIN_TABLE.as_bytes()).expect("shipped table is valid")
    }

    pub fn get(&self, label: &str) -> Option<&Rank1Entry> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn restrict_family(&self, family: Family) -> Table {
        Table { entries: self.entries.iter().filter(|e| e.family == family).cloned().collect() }
    }

    /// Adjoint entries whose generic stabilizer is not self-normalizing.
    pub fn non_strict_entries(&self) -> Vec<&Rank1Entry> {
        self.entries.iter().filter(|e| e.adjoint && !e.self_normalizing).collect()
    }

    /// Every entry with a nontrivial normalizer quotient, adjoint or not.
    pub fn nontrivial_normalizer_entries(&self) -> Vec<&Rank1Entry> {
        self.entries.iter().filter(|e| !e.self_normalizing).collect()
    }

    /// Entries with spherical root `gamma` and the same `sp`, compared on
    /// the support of `gamma` up to diagram isomorphism.
    pub fn lookup(&self, rs: &RootSystem, gamma: &Weight, sp: &BTreeSet<usize>) -> Vec<Match> {
        let sub: Vec<usize> = gamma.support().into_iter().collect();
        if sub.is_empty() || gamma.rank() != rs.rank {
            return vec![];
        }
        let touches = sp.iter().any(|s| !sub.contains(s) && sub.iter().any(|&t| rs.adjacent(*s, t)));
        if touches {
            return vec![];
        }
        let sp_local: BTreeSet<usize> = sp.iter().copied().filter(|s| sub.contains(s)).collect();
        let k = sub.len();
        let mut out = Vec::new();
        for e in &self.entries {
            if !e.allows_rank(k) {
                continue;
            }
            let Ok(inst) = e.instantiate(k) else { continue };
            let Ok(model) = RootSystem::build(e.family, k) else { continue };
            let mut found = None;
            for_each_isomorphism(&model, rs, &sub, &mut |perm| {
                let gamma_ok = (0..k).all(|i| inst.gamma.0[i] == gamma.0[perm[i]]);
                let sp_ok = inst.sp.iter().map(|&i| perm[i]).collect::<BTreeSet<_>>() == sp_local;
                if gamma_ok && sp_ok {
                    found = Some(perm.to_vec());
                    true
                } else {
                    false
                }
            });
            if let Some(perm) = found {
                out.push(Match { label: e.label.clone(), rank: k, perm });
            }
        }
        out
    }
}

/// Calls `f` on every bijection `perm: 0..k → sub` carrying the Cartan matrix
/// of `model` onto that of `rs` restricted to `sub`, until `f` returns true.
fn for_each_isomorphism(model: &RootSystem, rs: &RootSystem, sub: &[usize], f: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(
        model: &RootSystem,
        rs: &RootSystem,
        sub: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let i = perm.len();
        if i == sub.len() {
            return f(perm);
        }
        for (slot, &target) in sub.iter().enumerate() {
            if used[slot] {
                continue;
            }
            let consistent = (0..i).all(|j| {
                model.cartan[i][j] == rs.cartan[target][perm[j]] && model.cartan[j][i] == rs.cartan[perm[j]][target]
            });
            if !consistent {
                continue;
            }
            used[slot] = true;
            perm.push(target);
            if go(model, rs, sub, perm, used, f) {
                return true;
            }
            perm.pop();
            used[slot] = false;
        }
        false
    }
    go(model, rs, sub, &mut Vec::new(), &mut vec![false; sub.len()], f);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn expressions() {
        assert_eq!(IndexExpr::parse("n-1").unwrap().eval(5), 4);
        assert_eq!(IndexExpr::parse("3").unwrap().eval(5), 3);
        assert!(IndexExpr::parse("m").is_err());
        let t = GammaTerm::parse("2*a[2..n-1]").unwrap();
        assert_eq!(t.coeff, q(2));
        assert_eq!(t.range.indices(4).unwrap(), vec![1, 2]);
        assert_eq!(t.range.indices(2).unwrap(), Vec::<usize>::new());
        let h = GammaTerm::parse("1/2*a(n-1)").unwrap();
        assert_eq!(h.range.indices(5).unwrap(), vec![3]);
        assert_eq!(parse_index_set("{1,3..n}").unwrap().len(), 2);
        assert!(parse_index_set("1,2").is_err());
        for src in ["2*a[2..n-1]", "1/2*a(n-1)", "an", "a1"] {
            assert_eq!(GammaTerm::parse(src).unwrap().to_string(), src);
        }
        assert_eq!(render_index_set(&parse_index_set("{1,3..n}").unwrap()), "{1,3..n}");
    }

    #[test]
    fn builtin_loads() {
        let t = Table::builtin();
        let nine_b = t.get("9B").unwrap().instantiate(3).unwrap();
        assert_eq!(nine_b.gamma, Weight::from_ints(&[1, 1, 1]));
        assert_eq!(nine_b.sp, set(&[1]));
        assert_eq!(nine_b.colours.iter().map(|c| c.moving.clone()).collect::<Vec<_>>(), vec![set(&[0]), set(&[2])]);
        let nine_c = t.get("9C").unwrap().instantiate(4).unwrap();
        assert_eq!(nine_c.gamma, Weight::from_ints(&[1, 2, 2, 1]));
        assert_eq!(nine_c.sp, set(&[2, 3]));
        let g2 = t.get("15").unwrap().instantiate(2).unwrap();
        assert_eq!(g2.gamma, Weight::from_ints(&[1, 1]));
        assert!(g2.sp.is_empty());
    }

    #[test]
    fn non_strict_labels() {
        let t = Table::builtin();
        let labels: BTreeSet<&str> = t.non_strict_entries().iter().map(|e| e.label.as_str()).collect();
        assert_eq!(labels, ["1A(n=2)", "7B", "7C(n=2)", "13"].into_iter().collect());
        assert!(t.restrict_family(Family::G).non_strict_entries().iter().all(|e| e.label == "13"));
        assert!(Table::default().non_strict_entries().is_empty());
    }

    #[test]
    fn rejects_bad_rows() {
        let row = |colours: &str, extra: &str| {
            format!(
                r#"[{{"label":"X","family":"A","rank_min":2,"rank_max":2,"rank_param":false,"gamma":["a1","a2"],
                "sp":"{{2}}","colours":{colours},"self_normalizing":true,"source":"test"{extra}}}]"#
            )
        };
        let moving_in_sp = row(r#"[{"moving":[2],"rho_gamma":1,"pole":null}]"#, "");
        let err = Table::load(moving_in_sp.as_bytes()).unwrap_err().to_string();
        assert!(err.contains("X") && err.contains("lies in sp"), "{err}");
        let neg = moving_in_sp.replace(r#"["a1","a2"]"#, r#"["a1","-1*a2"]"#);
        assert!(Table::load(neg.as_bytes()).unwrap_err().to_string().contains("negative"));
        let dup = r#"[{"label":"2","family":"A","rank_min":1,"rank_max":1,"rank_param":false,"gamma":["2*a1"],"sp":"{}",
            "colours":[{"moving":[1],"rho_gamma":2,"pole":null}],"self_normalizing":true,"source":"t"}]"#;
        let twice = format!("[{},{}]", &dup[1..dup.len() - 1], &dup[1..dup.len() - 1]);
        assert!(matches!(Table::load(twice.as_bytes()), Err(TableError::DuplicateLabel(_))));
        assert!(matches!(Table::load(b"{}"), Err(TableError::Schema(_))));
        let wrong_rho = dup.replace(r#""rho_gamma":2"#, r#""rho_gamma":1"#);
        assert!(Table::load(wrong_rho.as_bytes()).unwrap_err().to_string().contains("rho_gamma"));
    }

    #[test]
    fn lookup_examples() {
        let t = Table::builtin();
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        let hits = t.lookup(&a1, &Weight::from_ints(&[2]), &BTreeSet::new());
        assert_eq!(hits.iter().map(|m| m.label.as_str()).collect::<Vec<_>>(), vec!["2"]);
        assert!(t.lookup(&a1, &Weight::from_ints(&[3]), &BTreeSet::new()).is_empty());
        let g2 = RootSystem::build(Family::G, 2).unwrap();
        let hits = t.lookup(&g2, &Weight::from_ints(&[1, 1]), &BTreeSet::new());
        assert_eq!(hits.iter().map(|m| m.label.as_str()).collect::<Vec<_>>(), vec!["15"]);
    }

    #[test]
    fn lookup_on_a_sub_diagram() {
        let t = Table::builtin();
        // A3 with γ = 2α3: the A1 entry (2) on the last node.
        let a3 = RootSystem::build(Family::A, 3).unwrap();
        let hits = t.lookup(&a3, &Weight::from_ints(&[0, 0, 2]), &set(&[0]));
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].perm, vec![2]);
        // an sp root adjacent to the support blocks the match
        assert!(t.lookup(&a3, &Weight::from_ints(&[0, 0, 2]), &set(&[1])).is_empty());
    }

    #[test]
    fn lookup_respects_diagram_automorphisms() {
        let t = Table::builtin();
        let a3 = RootSystem::build(Family::A, 3).unwrap();
        let g = Weight::from_ints(&[1, 2, 1]);
        let direct = t.lookup(&a3, &g, &set(&[0, 2]));
        assert_eq!(direct.iter().map(|m| m.label.as_str()).collect::<Vec<_>>(), vec!["6A"]);
        // B2 = C2: the C2 doubled root matches both spellings
        let c2 = RootSystem::build(Family::C, 2).unwrap();
        let mut labels: Vec<String> = t.lookup(&c2, &Weight::from_ints(&[2, 2]), &set(&[0])).into_iter().map(|m| m.label).collect();
        labels.sort();
        assert_eq!(labels, vec!["8B", "8C"]);
    }
}
