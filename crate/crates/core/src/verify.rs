//! Exhaustive verification suites at small rank.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::graphs::{catalog, check_axioms, ck_graph_b};
use crate::insertion::{kraskiewicz_insert, q_prime};
use crate::little::{applicable_bumps, canonical_bump, little_bump};
use crate::permutations::{
    beta_i, reduced_words, reduced_words_of_length, transition_data, SignedPermutation, Word,
};
use crate::tableaux::{delta, enumerate_sst};
use crate::Error;

/// Failures beyond this many are counted but not recorded.
const MAX_WITNESSES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Transition,
    Qpreserve,
    Ckcommute,
    SdegAxioms,
    InsertionBijection,
    Peaks,
    Delta,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Transition,
        Suite::Qpreserve,
        Suite::Ckcommute,
        Suite::SdegAxioms,
        Suite::InsertionBijection,
        Suite::Peaks,
        Suite::Delta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Transition => "transition",
            Suite::Qpreserve => "qpreserve",
            Suite::Ckcommute => "ckcommute",
            Suite::SdegAxioms => "sdeg-axioms",
            Suite::InsertionBijection => "insertion-bijection",
            Suite::Peaks => "peaks",
            Suite::Delta => "delta",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Bounds for a run. `rank` selects `B_rank`; `max_len` caps word length;
/// `max_cells` caps `|λ|` for standard graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub rank: usize,
    pub max_len: usize,
    pub max_cells: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            rank: 3,
            max_len: 6,
            max_cells: 8,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub instances: usize,
    pub passed: usize,
    pub failures: Vec<String>,
    pub elapsed_secs: f64,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.passed == self.instances
    }
}

fn run_instances<T: Sync>(
    suite: &str,
    items: &[T],
    check: impl Fn(&T) -> Result<(), String> + Sync,
) -> VerificationReport {
    let start = Instant::now();
    let mut failures: Vec<String> = items
        .par_iter()
        .filter_map(|x| check(x).err())
        .collect();
    let failed = failures.len();
    failures.truncate(MAX_WITNESSES);
    VerificationReport {
        suite: suite.to_string(),
        instances: items.len(),
        passed: items.len() - failed,
        failures,
        elapsed_secs: start.elapsed().as_secs_f64(),
    }
}

fn words_up_to(rank: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len)
        .flat_map(|len| reduced_words_of_length(rank, len))
        .collect()
}

/// The canonical bump maps `R(w)` bijectively onto `⨆_{w′ ∈ T(w)} R(w′)`.
pub fn check_transition(w: &SignedPermutation) -> Result<(), String> {
    let td = transition_data(w).map_err(|e| e.to_string())?;
    let words = reduced_words(w);
    let mut images = BTreeSet::new();
    for a in &words {
        let b = canonical_bump(a).map_err(|e| format!("{a}: {e}"))?;
        if td.targets.binary_search(&b.evaluate()).is_err() {
            return Err(format!("{w}: {a} ↦ {b} lands outside T(w)"));
        }
        if !images.insert(b.clone()) {
            return Err(format!("{w}: {b} is hit twice"));
        }
    }
    let target_count: usize = td.targets.iter().map(|t| reduced_words(t).len()).sum();
    if target_count != words.len() {
        return Err(format!("{w}: |R(w)| = {} but targets hold {target_count}", words.len()));
    }
    Ok(())
}

/// Every bump of `a` keeps its recording tableau and its peak set.
pub fn check_bump_invariants(a: &Word) -> Result<(), String> {
    let q = q_prime(a).map_err(|e| e.to_string())?;
    for (t, d) in applicable_bumps(a) {
        let b = little_bump(a, t, d).map_err(|e| format!("{a} {t} {d:?}: {e}"))?.result;
        if b.peaks() != a.peaks() {
            return Err(format!("{a} {t} {d:?}: peaks change in {b}"));
        }
        if q_prime(&b).map_err(|e| e.to_string())? != q {
            return Err(format!("{a} {t} {d:?}: Q′ changes in {b}"));
        }
    }
    Ok(())
}

/// `B^δ(β_k(a)) = β_k(B^δ(a))` for every applicable bump and window.
pub fn check_ck_commute(a: &Word) -> Result<(), String> {
    let e = |x: Error| format!("{a}: {x}");
    for (t, d) in applicable_bumps(a) {
        let b = little_bump(a, t, d).map_err(e)?.result;
        for k in 1..=a.len().saturating_sub(3) {
            let left = little_bump(&beta_i(a, k).map_err(e)?, t, d).map_err(e)?.result;
            let right = beta_i(&b, k).map_err(e)?;
            if left != right {
                return Err(format!("{a} {t} {d:?} k={k}: {left} ≠ {right}"));
            }
        }
    }
    Ok(())
}

/// `a ↦ (P′, Q′)` is injective on `R(w)` and each `P′` fiber meets every
/// standard tableau of its shape.
pub fn check_insertion_bijection(w: &SignedPermutation) -> Result<(), String> {
    let mut fibers: BTreeMap<_, BTreeSet<_>> = BTreeMap::new();
    for a in reduced_words(w) {
        let pair = kraskiewicz_insert(&a).map_err(|e| e.to_string())?;
        if !fibers.entry(pair.p).or_default().insert(pair.q) {
            return Err(format!("{w}: two words share a pair at {a}"));
        }
    }
    for (p, qs) in fibers {
        let all: BTreeSet<_> = enumerate_sst(p.shape()).into_iter().collect();
        if qs != all {
            return Err(format!("{w}: fiber of shape {} misses tableaux", p.shape()));
        }
    }
    Ok(())
}

pub fn run_suite(suite: Suite, bounds: Bounds) -> VerificationReport {
    let name = suite.name();
    let Bounds {
        rank,
        max_len,
        max_cells,
    } = bounds;
    match suite {
        Suite::Transition => {
            let ws: Vec<_> = SignedPermutation::all(rank)
                .into_iter()
                .filter(|w| !w.is_increasing() && w.length() <= max_len)
                .collect();
            run_instances(name, &ws, check_transition)
        }
        Suite::Qpreserve => run_instances(name, &words_up_to(rank, max_len), check_bump_invariants),
        Suite::Ckcommute => {
            run_instances(name, &reduced_words_of_length(rank, max_len), check_ck_commute)
        }
        Suite::SdegAxioms => {
            enum Item {
                Standard(usize),
                Ck(SignedPermutation),
            }
            let mut items: Vec<Item> = catalog()
                .iter()
                .enumerate()
                .filter(|(_, (lam, _))| lam.size() <= max_cells)
                .map(|(k, _)| Item::Standard(k))
                .collect();
            items.extend(SignedPermutation::all(rank).into_iter().map(Item::Ck));
            run_instances(name, &items, |it| {
                let (what, g) = match it {
                    Item::Standard(k) => (format!("SG{}", catalog()[*k].0), catalog()[*k].1.clone()),
                    Item::Ck(w) => (format!("CK_B({w})"), ck_graph_b(w)),
                };
                let r = check_axioms(&g);
                if r.passed() {
                    Ok(())
                } else {
                    Err(format!("{what}: {r:?}"))
                }
            })
        }
        Suite::InsertionBijection => {
            run_instances(name, &SignedPermutation::all(rank), check_insertion_bijection)
        }
        Suite::Peaks => run_instances(name, &words_up_to(rank, max_len), |a| {
            let q = q_prime(a).map_err(|e| e.to_string())?;
            if q.peaks() == a.peaks() {
                Ok(())
            } else {
                Err(format!("{a}: peaks {:?} vs {:?}", a.peaks(), q.peaks()))
            }
        }),
        Suite::Delta => {
            let words: Vec<Word> = words_up_to(rank, max_len)
                .into_iter()
                .filter(|a| !a.is_empty())
                .collect();
            run_instances(name, &words, |a| {
                let q = q_prime(a).map_err(|e| e.to_string())?;
                let lhs = delta(&q).map_err(|e| e.to_string())?;
                let rhs = q_prime(&a.slice(2, a.len())).map_err(|e| e.to_string())?;
                if lhs == rhs {
                    Ok(())
                } else {
                    Err(format!("{a}: Δ(Q′) = {lhs:?}, Q′(tail) = {rhs:?}"))
                }
            })
        }
    }
}
