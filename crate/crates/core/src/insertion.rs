//! Edelman-Greene insertion for type A words and Kraśkiewicz insertion for
//! type B words.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::permutations::Word;
use crate::tableaux::{decreasing_prefix, ShiftedTableau};
use crate::{Error, Result};

/// Insertion and recording tableaux of the same shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InsertionPair<T> {
    pub p: T,
    pub q: T,
}

/// An ordinary (unshifted) tableau, bottom row first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YoungTableau {
    pub rows: Vec<Vec<u32>>,
}

impl YoungTableau {
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows.iter().rev() {
            writeln!(f, "{}", row.iter().join(" "))?;
        }
        Ok(())
    }
}

/// One Edelman-Greene row insertion of `k` into an increasing row. Returns
/// the letter bumped out, if any.
fn eg_row_insert(row: &mut Vec<i64>, k: i64) -> Option<i64> {
    let Some(idx) = row.iter().position(|&x| x > k) else {
        row.push(k);
        return None;
    };
    let x = row[idx];
    if x == k + 1 && row.contains(&k) {
        return Some(k + 1);
    }
    row[idx] = k;
    Some(x)
}

/// Type A Edelman-Greene insertion.
pub fn eg_insert(a: &Word) -> Result<InsertionPair<YoungTableau>> {
    if a.letters().contains(&0) {
        return Err(Error::ZeroLetter(a.to_string()));
    }
    a.require_reduced()?;
    let mut p: Vec<Vec<i64>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (t, &letter) in a.letters().iter().enumerate() {
        let mut carry = Some(letter as i64);
        let mut r = 0;
        while let Some(k) = carry {
            if r == p.len() {
                p.push(Vec::new());
                q.push(Vec::new());
            }
            carry = eg_row_insert(&mut p[r], k);
            if carry.is_none() {
                q[r].push(t as u32 + 1);
            }
            r += 1;
        }
    }
    Ok(InsertionPair {
        p: YoungTableau {
            rows: p.into_iter().map(|r| r.into_iter().map(|x| x as u32).collect()).collect(),
        },
        q: YoungTableau { rows: q },
    })
}

/// Kraśkiewicz row insertion of `k` into a unimodal row. Returns the new row
/// and the letter passed to the next row.
///
/// Inserting 0 into a row whose minimum is 0 always passes 0 on. If the
/// decreasing part already ends in `1 0` the row is unchanged; otherwise the
/// leading 1 of the increasing part moves in front of the 0.
pub fn unimodal_insert(row: &[u32], k: u32) -> (Vec<u32>, Option<u32>) {
    let j = decreasing_prefix(row);
    let (dec, inc) = row.split_at(j);
    if k == 0 && dec.last() == Some(&0) && inc.first() == Some(&1) {
        let mut out = dec[..j - 1].to_vec();
        if out.last() == Some(&1) {
            return (row.to_vec(), Some(0));
        }
        out.extend([1, 0]);
        out.extend(&inc[1..]);
        return (out, Some(0));
    }
    let mut v: Vec<i64> = inc.iter().map(|&x| x as i64).collect();
    let bumped = if k == 0 && dec.last() == Some(&0) {
        Some(1)
    } else {
        eg_row_insert(&mut v, k as i64)
    };
    let (u, out) = match bumped {
        Some(kk) => {
            let mut neg: Vec<i64> = dec.iter().map(|&x| -(x as i64)).collect();
            let out = eg_row_insert(&mut neg, -kk).map(|x| (-x) as u32);
            (neg.into_iter().map(|x| (-x) as u32).collect(), out)
        }
        None => (dec.to_vec(), None),
    };
    let mut new_row: Vec<u32> = u;
    new_row.extend(v.into_iter().map(|x| x as u32));
    (new_row, out)
}

/// Kraśkiewicz insertion, giving `(P′, Q′)`.
pub fn kraskiewicz_insert(a: &Word) -> Result<InsertionPair<ShiftedTableau>> {
    a.require_reduced()?;
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (t, &letter) in a.letters().iter().enumerate() {
        let mut carry = Some(letter);
        let mut r = 0;
        while let Some(k) = carry {
            if r == p.len() {
                p.push(Vec::new());
                q.push(Vec::new());
            }
            let (row, out) = unimodal_insert(&p[r], k);
            p[r] = row;
            carry = out;
            if carry.is_none() {
                q[r].push(t as u32 + 1);
            }
            r += 1;
        }
    }
    let p = ShiftedTableau::unimodal(p)
        .map_err(|e| Error::Invariant(format!("insertion tableau of {a}: {e}")))?;
    let q = ShiftedTableau::standard(q)
        .map_err(|e| Error::Invariant(format!("recording tableau of {a}: {e}")))?;
    Ok(InsertionPair { p, q })
}

pub fn q_prime(a: &Word) -> Result<ShiftedTableau> {
    Ok(kraskiewicz_insert(a)?.q)
}

pub fn p_prime(a: &Word) -> Result<ShiftedTableau> {
    Ok(kraskiewicz_insert(a)?.p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::{reduced_words, reduced_words_of_length, SignedPermutation};
    use crate::tableaux::delta;
    use std::collections::{BTreeMap, BTreeSet};

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn eg_regressions() {
        let pair = eg_insert(&word("1343")).unwrap();
        assert_eq!(pair.p.rows, vec![vec![1, 3, 4], vec![4]]);
        assert_eq!(pair.q.rows, vec![vec![1, 2, 3], vec![4]]);
        let pair = eg_insert(&word("1")).unwrap();
        assert_eq!(pair.p.rows, vec![vec![1]]);
        assert!(eg_insert(&word("0")).is_err());
        assert!(eg_insert(&word("11")).is_err());
    }

    #[test]
    fn eg_preserves_ascents() {
        let w = SignedPermutation::new(vec![2, 1, 5, 4, 3]).unwrap();
        let mut ps = BTreeSet::new();
        for a in reduced_words(&w) {
            let pair = eg_insert(&a).unwrap();
            let q = &pair.q.rows;
            let row_of = |v: u32| q.iter().position(|r| r.contains(&v)).unwrap();
            // i is an ascent of Q when i+1 is not strictly above i.
            let asc: BTreeSet<usize> = (1..a.len())
                .filter(|&i| row_of(i as u32 + 1) <= row_of(i as u32))
                .collect();
            assert_eq!(asc, a.ascents(), "{a}");
            ps.insert(pair.p);
        }
        assert_eq!(ps.len(), 3);
    }

    #[test]
    fn unimodal_rows() {
        assert_eq!(unimodal_insert(&[3, 4], 3), (vec![4, 3], Some(3)));
        assert_eq!(unimodal_insert(&[], 5), (vec![5], None));
        let (row, out) = unimodal_insert(&[0], 0);
        assert_eq!(row, vec![1]);
        assert_eq!(out, Some(0));
    }

    #[test]
    fn kraskiewicz_regressions() {
        let pair = kraskiewicz_insert(&word("1343")).unwrap();
        assert_eq!(pair.p.rows(), &[vec![4, 3, 4], vec![1]]);
        assert_eq!(pair.q.rows(), &[vec![1, 2, 3], vec![4]]);

        let a = word("021032101");
        assert_eq!(a.evaluate(), SignedPermutation::new(vec![-3, -4, -1, 2]).unwrap());
        let pair = kraskiewicz_insert(&a).unwrap();
        assert_eq!(pair.p.rows(), &[vec![3, 2, 1, 0, 1], vec![2, 1, 0], vec![0]]);
        assert_eq!(
            pair.q.rows(),
            &[vec![1, 2, 4, 5, 9], vec![3, 6, 8], vec![7]]
        );

        let pair = kraskiewicz_insert(&word("0")).unwrap();
        assert_eq!(pair.p.rows(), &[vec![0]]);
        assert_eq!(pair.q.rows(), &[vec![1]]);
        assert!(kraskiewicz_insert(&word("00")).is_err());
    }

    #[test]
    fn reading_word_of_p_is_reduced() {
        for len in 0..=6 {
            for a in reduced_words_of_length(3, len) {
                let pair = kraskiewicz_insert(&a).unwrap();
                let read = Word::new(pair.p.reading_word());
                assert!(read.is_reduced(), "{a}");
                assert_eq!(read.evaluate(), a.evaluate(), "{a}");
                assert_eq!(pair.q.peaks(), a.peaks(), "{a}");
                if !a.is_empty() {
                    let tail = a.slice(2, a.len());
                    assert_eq!(delta(&pair.q).unwrap(), q_prime(&tail).unwrap(), "{a}");
                }
            }
        }
    }

    #[test]
    fn insertion_is_a_bijection_onto_pairs() {
        for w in SignedPermutation::all(3) {
            let words = reduced_words(&w);
            let pairs: BTreeSet<_> = words
                .iter()
                .map(|a| {
                    let pr = kraskiewicz_insert(a).unwrap();
                    (pr.p, pr.q)
                })
                .collect();
            assert_eq!(pairs.len(), words.len());
            let mut by_p: BTreeMap<ShiftedTableau, usize> = BTreeMap::new();
            for (p, _) in &pairs {
                *by_p.entry(p.clone()).or_default() += 1;
            }
            for (p, count) in by_p {
                assert_eq!(count as u64, p.shape().count_sst(), "{w}");
            }
        }
    }
}
