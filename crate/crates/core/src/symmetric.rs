//! Peak quasisymmetric functions, Schur Q-functions and type C Stanley
//! symmetric functions, truncated to finitely many variables.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, AddAssign, Mul};
use std::sync::Mutex;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::insertion::p_prime;
use crate::permutations::{
    is_admissible_peak_set, reduced_words, transition_data, SignedPermutation,
};
use crate::tableaux::{enumerate_sst, StrictPartition};
use crate::{Error, Result};

/// A homogeneous polynomial in `m` variables, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePolynomial {
    num_vars: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<u32>, i64>,
}

impl FinitePolynomial {
    pub fn zero(num_vars: usize, degree: usize) -> Self {
        Self {
            num_vars,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 1.
    pub fn one(num_vars: usize) -> Self {
        let mut p = Self::zero(num_vars, 0);
        p.coeffs.insert(vec![0; num_vars], 1);
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.coeffs
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.coeffs.get(exponents).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: i64) {
        match self.coeffs.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if c != 0 {
                    v.insert(c);
                }
            }
        }
    }

    /// Invariant under every permutation of the variables. Adjacent swaps
    /// generate the symmetric group, so those are all that is checked.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(e, &c)| {
            (1..e.len()).all(|k| {
                let mut f = e.clone();
                f.swap(k - 1, k);
                self.coefficient(&f) == c
            })
        })
    }
}

impl AddAssign<&FinitePolynomial> for FinitePolynomial {
    fn add_assign(&mut self, rhs: &FinitePolynomial) {
        assert_eq!(self.num_vars, rhs.num_vars);
        if self.is_zero() {
            self.degree = rhs.degree;
        }
        for (e, &c) in &rhs.coeffs {
            self.add_term(e.clone(), c);
        }
    }
}

impl Add for FinitePolynomial {
    type Output = FinitePolynomial;

    fn add(mut self, rhs: FinitePolynomial) -> FinitePolynomial {
        self += &rhs;
        self
    }
}

impl Mul<i64> for &FinitePolynomial {
    type Output = FinitePolynomial;

    fn mul(self, k: i64) -> FinitePolynomial {
        let mut out = FinitePolynomial::zero(self.num_vars, self.degree);
        if k != 0 {
            out.coeffs = self.coeffs.iter().map(|(e, &c)| (e.clone(), c * k)).collect();
        }
        out
    }
}

impl Serialize for FinitePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(
            self.coeffs
                .iter()
                .map(|(e, c)| (format!("[{}]", e.iter().join(",")), c)),
        )
    }
}

fn theta_uncached(peaks: &BTreeSet<usize>, d: usize, m: usize) -> FinitePolynomial {
    let mut out = FinitePolynomial::zero(m, d);
    if d == 0 {
        return FinitePolynomial::one(m);
    }
    // Weakly increasing sequences i_1 ≤ … ≤ i_d in [m].
    for seq in (0..m).combinations_with_replacement(d) {
        let bad = (2..d).any(|k| peaks.contains(&k) && seq[k - 2] == seq[k - 1] && seq[k - 1] == seq[k]);
        if bad {
            continue;
        }
        let mut exps = vec![0u32; m];
        for &i in &seq {
            exps[i] += 1;
        }
        let distinct = exps.iter().filter(|&&e| e > 0).count();
        out.add_term(exps, 1 << distinct);
    }
    out
}

/// `Θ_P^d` in `m` variables.
pub fn theta(peaks: &BTreeSet<usize>, d: usize, m: usize) -> Result<FinitePolynomial> {
    if !is_admissible_peak_set(peaks, d) {
        return Err(Error::InadmissiblePeakSet {
            peaks: peaks.iter().copied().collect(),
            len: d,
        });
    }
    type Key = (Vec<usize>, usize, usize);
    static CACHE: Mutex<Option<HashMap<Key, FinitePolynomial>>> = Mutex::new(None);
    let key = (peaks.iter().copied().collect::<Vec<_>>(), d, m);
    if let Some(p) = CACHE.lock().unwrap().get_or_insert_with(HashMap::new).get(&key) {
        return Ok(p.clone());
    }
    let p = theta_uncached(peaks, d, m);
    CACHE.lock().unwrap().get_or_insert_with(HashMap::new).insert(key, p.clone());
    Ok(p)
}

/// `Q_μ = Σ_{T ∈ SST(μ)} Θ_{peaks(T)}`.
pub fn q_schur(mu: &StrictPartition, m: usize) -> FinitePolynomial {
    let d = mu.size();
    let mut out = FinitePolynomial::zero(m, d);
    for t in enumerate_sst(mu) {
        out += &theta(&t.peaks(), d, m).expect("tableau peak sets are admissible");
    }
    out
}

/// `F^C_w = Σ_{a ∈ R(w)} Θ_{peaks(a)}`.
pub fn stanley_c(w: &SignedPermutation, m: usize) -> FinitePolynomial {
    let d = w.length();
    let mut out = FinitePolynomial::zero(m, d);
    for a in reduced_words(w) {
        out += &theta(&a.peaks(), d, m).expect("word peak sets are admissible");
    }
    out
}

/// Coefficients `g_w^μ` of `F^C_w` in the Schur Q basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QExpansion {
    pub terms: BTreeMap<StrictPartition, u64>,
}

impl QExpansion {
    /// `Σ g_w^μ Q_μ` in `m` variables.
    pub fn to_polynomial(&self, m: usize, degree: usize) -> FinitePolynomial {
        let mut out = FinitePolynomial::zero(m, degree);
        for (mu, &g) in &self.terms {
            out += &(&q_schur(mu, m) * g as i64);
        }
        out
    }

    /// `Σ g_w^μ |SST(μ)|`.
    pub fn word_count(&self) -> u64 {
        self.terms.iter().map(|(mu, &g)| g * mu.count_sst()).sum()
    }
}

impl Serialize for QExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.terms.iter().map(|(mu, g)| (format!("{:?}", mu.parts()), g)))
    }
}

/// Number of distinct insertion tableaux `P′(a)` of each shape, `a ∈ R(w)`.
pub fn g_coefficients(w: &SignedPermutation) -> QExpansion {
    let ps: BTreeSet<_> = reduced_words(w)
        .iter()
        .map(|a| p_prime(a).expect("reduced"))
        .collect();
    let mut terms = BTreeMap::new();
    for p in ps {
        *terms.entry(p.shape().clone()).or_insert(0) += 1;
    }
    QExpansion { terms }
}

/// The strict partition `μ` with `w = w(μ)`, for increasing `w`.
pub fn partition_of_increasing(w: &SignedPermutation) -> Option<StrictPartition> {
    if !w.is_increasing() {
        return None;
    }
    let parts = w
        .window()
        .iter()
        .take_while(|&&x| x < 0)
        .map(|&x| x.unsigned_abs() as usize)
        .collect();
    StrictPartition::new(parts).ok()
}

/// Expand `w` through `T(w)` until every leaf is increasing. Returns leaf
/// multiplicities.
pub fn transition_expand(w: &SignedPermutation) -> BTreeMap<SignedPermutation, u64> {
    fn go(
        w: &SignedPermutation,
        memo: &mut HashMap<SignedPermutation, BTreeMap<SignedPermutation, u64>>,
    ) -> BTreeMap<SignedPermutation, u64> {
        if let Some(m) = memo.get(w) {
            return m.clone();
        }
        let out = match transition_data(w) {
            Err(_) => BTreeMap::from([(w.clone(), 1)]),
            Ok(td) => {
                let mut acc = BTreeMap::new();
                for t in &td.targets {
                    for (leaf, k) in go(t, memo) {
                        *acc.entry(leaf).or_insert(0) += k;
                    }
                }
                acc
            }
        };
        memo.insert(w.clone(), out.clone());
        out
    }
    go(w, &mut HashMap::new())
}

/// Leaf multiplicities of [`transition_expand`] collected by shape.
pub fn expansion_by_shape(w: &SignedPermutation) -> QExpansion {
    let mut terms = BTreeMap::new();
    for (leaf, k) in transition_expand(w) {
        let mu = partition_of_increasing(&leaf).expect("leaves are increasing");
        *terms.entry(mu).or_insert(0) += k;
    }
    QExpansion { terms }
}
