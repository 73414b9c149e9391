//! Seeded property checks shared by the acceptance runner and the property suite.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wonderful::classify::Table;
use wonderful::picard::{self, LineBundle};
use wonderful::rootsys::{Family, RootSystem, Weight};
use wonderful::symalg::lie::{self, Rep};
use wonderful::symalg::linalg::Mat;
use wonderful::symalg::matrix::PolyMatrix;
use wonderful::symalg::{q, qq, Poly, Q};
use wonderful::verify::cases;

pub type Outcome = Result<String, String>;

pub fn irreducible_types(max_rank: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for n in 1..=max_rank {
            if f.valid_rank(n) {
                out.push(RootSystem::build(f, n).expect("valid type"));
            }
        }
    }
    out
}

/// `w0² = 1` on fundamental weights and `w0(Φ⁺) = Φ⁻`.
pub fn w0_properties(max_rank: usize) -> Outcome {
    let types = irreducible_types(max_rank);
    for rs in &types {
        for i in 0..rs.rank {
            let w = rs.fundamental_weight(i);
            if &rs.w0_apply(&rs.w0_apply(w)) != w {
                return Err(format!("{}: w0 is not an involution on ω{}", rs.name(), i + 1));
            }
        }
        let mut images = std::collections::BTreeSet::new();
        for r in &rs.positive_roots {
            let img = rs.w0_apply(&Weight::from_ints(r));
            let neg = (-&img).to_ints().ok_or_else(|| format!("{}: w0 image is not integral", rs.name()))?;
            if !rs.is_positive_root(&neg) {
                return Err(format!("{}: w0({r:?}) is not a negative root", rs.name()));
            }
            images.insert(neg);
        }
        if images.len() != rs.positive_roots.len() {
            return Err(format!("{}: w0 is not injective on Φ⁺", rs.name()));
        }
    }
    Ok(format!("{} types", types.len()))
}

/// `⟨ω_i, α_j∨⟩ = δ_ij` exactly.
pub fn fundamental_pairing(max_rank: usize) -> Outcome {
    let types = irreducible_types(max_rank);
    for rs in &types {
        for i in 0..rs.rank {
            for j in 0..rs.rank {
                let want = if i == j { q(1) } else { q(0) };
                if rs.pair(rs.fundamental_weight(i), j) != want {
                    return Err(format!("{}: ⟨ω{}, α{}∨⟩ ≠ δ", rs.name(), i + 1, j + 1));
                }
            }
        }
    }
    Ok(format!("{} types", types.len()))
}

fn rand_q(rng: &mut ChaCha8Rng) -> Q {
    qq(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

/// Strictly upper triangular, conjugated by a random permutation.
pub fn random_nilpotent(rng: &mut ChaCha8Rng, size: usize) -> Mat {
    let mut perm: Vec<usize> = (0..size).collect();
    perm.shuffle(rng);
    let mut m = Mat::zeros(size, size);
    for i in 0..size {
        for j in i + 1..size {
            if rng.gen_bool(0.6) {
                m[(perm[i], perm[j])] = rand_q(rng);
            }
        }
    }
    m
}

pub fn exp_log_roundtrip(count: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..count {
        let size = rng.gen_range(1..=8);
        let n = PolyMatrix::from_const(&random_nilpotent(&mut rng, size));
        let e = n.nilpotent_exp().map_err(|e| format!("matrix {k}: {e}"))?;
        let back = e.unipotent_log().map_err(|e| format!("matrix {k}: {e}"))?;
        if !back.sub(&n).is_zero() {
            return Err(format!("matrix {k} (size {size}): log(exp(N)) ≠ N"));
        }
    }
    Ok(format!("{count} matrices"))
}

pub fn shipped_representations() -> Vec<(String, Rep)> {
    let mut out = vec![
        ("sl3".to_string(), lie::type_a_rep(3)),
        ("sl4".to_string(), lie::type_a_rep(4)),
        ("abelian3".to_string(), lie::abelian_rep(3)),
    ];
    for c in [cases::case_9b(2), cases::case_9b(3), cases::case_9c(3), cases::case_9c(4), cases::case_15()] {
        let c = c.expect("case builds");
        let name = if c.label == "15" { "G2 in so8".to_string() } else { format!("{}(n={})", c.label, c.n) };
        out.push((name, c.rep.clone()));
    }
    out
}

fn rand_point(rng: &mut ChaCha8Rng, d: usize) -> Vec<Poly> {
    (0..d).map(|_| Poly::constant(rand_q(rng))).collect()
}

/// Identity, associativity and inverses of the group law on constant points.
pub fn group_law_properties(rep: &Rep, count: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = rep.dim();
    let zero = vec![Poly::zero(); d];
    let err = |e: wonderful::symalg::SymError| e.to_string();
    for k in 0..count {
        let (u, v, w) = (rand_point(&mut rng, d), rand_point(&mut rng, d), rand_point(&mut rng, d));
        if rep.group_law(&zero, &u).map_err(err)? != u || rep.group_law(&u, &zero).map_err(err)? != u {
            return Err(format!("triple {k}: identity fails"));
        }
        let left = rep.group_law(&rep.group_law(&u, &v).map_err(err)?, &w).map_err(err)?;
        let right = rep.group_law(&u, &rep.group_law(&v, &w).map_err(err)?).map_err(err)?;
        if left != right {
            return Err(format!("triple {k}: associativity fails"));
        }
        if rep.group_law(&u, &rep.inverse(&u)).map_err(err)?.iter().any(|p| !p.is_zero()) {
            return Err(format!("triple {k}: inverse fails"));
        }
    }
    Ok(format!("{count} triples"))
}

/// `χ_L ∈ section_weights(L)` for random globally generated bundles on
/// every table entry.
pub fn section_weights_contain_chi(count: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = Table::builtin();
    let mut checked = 0;
    for e in &t.entries {
        for n in e.sample_ranks().into_iter().take(2) {
            let d = e.to_descriptor(n).map_err(|s| format!("{}: {s}", e.label))?;
            for _ in 0..count {
                let cs: Vec<i64> = d.colours.iter().map(|_| rng.gen_range(0..=4)).collect();
                let l = LineBundle::new(&d, &cs).map_err(|x| x.to_string())?;
                let chi = picard::canonical_weight(&d, &l).map_err(|x| x.to_string())?;
                match picard::section_weights(&d, &l) {
                    Ok(ws) if ws.contains(&chi) => checked += 1,
                    Ok(_) => return Err(format!("{} n={n} {cs:?}: χ_L missing", e.label)),
                    Err(picard::PicardError::Unbounded(_)) => {}
                    Err(x) => return Err(format!("{} n={n} {cs:?}: {x}", e.label)),
                }
            }
        }
    }
    Ok(format!("{checked} bundles"))
}
