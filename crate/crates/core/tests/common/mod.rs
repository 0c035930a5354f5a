//! Brute-force reference implementations on plain vectors, written without
//! the library so the integration tests have something independent to compare
//! against.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

pub type Perm = Vec<i32>;

/// Drop trailing fixed points.
pub fn trim(mut w: Perm) -> Perm {
    while w.last().is_some_and(|&x| x == w.len() as i32) {
        w.pop();
    }
    w
}

fn padded(w: &[i32], n: usize) -> Perm {
    let mut v = w.to_vec();
    v.extend(w.len() as i32 + 1..=n as i32);
    v
}

/// `inv + nsp + neg`: the usual length formula for signed permutations.
pub fn length(w: &[i32]) -> usize {
    let n = w.len();
    let mut l = w.iter().filter(|&&x| x < 0).count();
    for i in 0..n {
        for j in i + 1..n {
            l += usize::from(w[i] > w[j]) + usize::from(w[i] + w[j] < 0);
        }
    }
    l
}

/// `w · s_a`.
pub fn times_generator(w: &[i32], a: u32) -> Perm {
    let mut v = padded(w, a as usize + 1);
    if a == 0 {
        v[0] = -v[0];
    } else {
        v.swap(a as usize - 1, a as usize);
    }
    trim(v)
}

pub fn evaluate(word: &[u32]) -> Perm {
    word.iter().fold(Vec::new(), |w, &a| times_generator(&w, a))
}

fn value(w: &[i32], k: i32) -> i32 {
    let m = k.unsigned_abs() as usize;
    let x = if m <= w.len() { w[m - 1] } else { m as i32 };
    if k < 0 {
        -x
    } else {
        x
    }
}

/// `w · t_{ij}` for `i ≠ ±j`, `j > 0`: swaps the values at `i` and `j`
/// (and at `-i`, `-j`). For `i = -j` the value at `j` is negated.
pub fn times_reflection(w: &[i32], i: i32, j: i32) -> Perm {
    let n = w.len().max(i.unsigned_abs() as usize).max(j as usize);
    let mut v = padded(w, n);
    let (wi, wj) = (value(w, i), value(w, j));
    v[j as usize - 1] = wi;
    if i > 0 {
        v[i as usize - 1] = wj;
    } else if i != -j {
        v[(-i) as usize - 1] = -wj;
    }
    trim(v)
}

pub fn right_descents(w: &[i32]) -> Vec<u32> {
    let l = length(w);
    (0..=w.len() as u32)
        .filter(|&a| length(&times_generator(w, a)) < l)
        .collect()
}

/// `|R(w)|` by the descent recursion.
pub fn count_words(w: &[i32], memo: &mut HashMap<Perm, u64>) -> u64 {
    let w = trim(w.to_vec());
    if w.is_empty() {
        return 1;
    }
    if let Some(&c) = memo.get(&w) {
        return c;
    }
    let c = right_descents(&w)
        .into_iter()
        .map(|a| count_words(&times_generator(&w, a), memo))
        .sum();
    memo.insert(w, c);
    c
}

/// `R(w)` by the descent recursion.
pub fn words(w: &[i32]) -> BTreeSet<Vec<u32>> {
    let w = trim(w.to_vec());
    if w.is_empty() {
        return BTreeSet::from([vec![]]);
    }
    let mut out = BTreeSet::new();
    for a in right_descents(&w) {
        for mut u in words(&times_generator(&w, a)) {
            u.push(a);
            out.insert(u);
        }
    }
    out
}

/// Every signed permutation of `[n]`, trimmed.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out: Vec<Perm> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for x in 1..=n as i32 {
                for s in [x, -x] {
                    if !p.iter().any(|&y| y.abs() == x) {
                        let mut q = p.clone();
                        q.push(s);
                        next.push(q);
                    }
                }
            }
        }
        out = next;
    }
    let mut out: Vec<Perm> = out.into_iter().map(trim).collect();
    out.sort();
    out.dedup();
    out
}

pub fn is_increasing(w: &[i32]) -> bool {
    w.windows(2).all(|p| p[0] < p[1])
}

/// `(r, s, T(w))`: the lexicographically last inversion among positive
/// positions, and every `v t_{ir}` with `i < r` of the same length as `w`,
/// with `i` searched well past the window.
pub fn transition_targets(w: &[i32]) -> Option<(i32, i32, BTreeSet<Perm>)> {
    let n = w.len() as i32;
    let mut last = None;
    for r in 1..=n {
        for s in r + 1..=n {
            if value(w, r) > value(w, s) {
                last = Some((r, s));
            }
        }
    }
    let (r, s) = last?;
    let v = times_reflection(w, r, s);
    let l = length(w);
    let targets = (-(n + 6)..r)
        .filter(|&i| i != 0)
        .map(|i| times_reflection(&v, i, r))
        .filter(|u| length(u) == l)
        .collect();
    Some((r, s, targets))
}

pub fn peaks(a: &[u32]) -> BTreeSet<usize> {
    (1..a.len().saturating_sub(1))
        .filter(|&k| a[k - 1] < a[k] && a[k] > a[k + 1])
        .map(|k| k + 1)
        .collect()
}

/// Strict partitions of `n`.
pub fn strict_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Standard shifted tableaux of shape `lam`, as rows bottom first, by
/// placing the largest entry in each removable corner.
pub fn standard_shifted(lam: &[usize]) -> Vec<Vec<Vec<u32>>> {
    let n: usize = lam.iter().sum();
    if n == 0 {
        return vec![lam.iter().map(|_| vec![]).collect()];
    }
    let mut out = Vec::new();
    for r in 0..lam.len() {
        let shorter = lam[r] - 1;
        let ok = if r + 1 < lam.len() {
            shorter > lam[r + 1]
        } else {
            true
        };
        if !ok {
            continue;
        }
        let mut smaller = lam.to_vec();
        smaller[r] = shorter;
        let trimmed: Vec<usize> = smaller.iter().copied().filter(|&p| p > 0).collect();
        for mut t in standard_shifted(&trimmed) {
            t.resize(lam.len(), vec![]);
            t[r].push(n as u32);
            out.push(t);
        }
    }
    out
}

/// Multiset of vertex keys → count, for comparing graphs up to labels.
pub fn tally<K: Ord>(it: impl IntoIterator<Item = K>) -> BTreeMap<K, usize> {
    let mut m = BTreeMap::new();
    for k in it {
        *m.entry(k).or_insert(0) += 1;
    }
    m
}
