use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::SignedPermutation;
use crate::{Error, Result};

/// A word in the generators `s_0, s_1, …` of `B_∞`; letter `0` is `s_0`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn max_letter(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    /// `s_{a_1} s_{a_2} ⋯ s_{a_p}`, multiplied left to right.
    pub fn evaluate(&self) -> SignedPermutation {
        let n = self.max_letter().map_or(1, |m| m as usize + 1);
        let mut w: Vec<i32> = (1..=n as i32).collect();
        for &a in &self.0 {
            if a == 0 {
                w[0] = -w[0];
            } else {
                w.swap(a as usize - 1, a as usize);
            }
        }
        SignedPermutation::from_window_unchecked(w)
    }

    pub fn is_reduced(&self) -> bool {
        let mut w = SignedPermutation::identity();
        for &a in &self.0 {
            if w.has_right_descent(a) {
                return false;
            }
            w = w.mul_generator(a);
        }
        true
    }

    pub(crate) fn require_reduced(&self) -> Result<()> {
        if self.is_reduced() {
            Ok(())
        } else {
            Err(Error::NotReduced(self.to_string()))
        }
    }

    /// The word with the letter at 1-based position `i` removed.
    pub fn delete(&self, i: usize) -> Word {
        let mut v = self.0.clone();
        v.remove(i - 1);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The subword of positions `from..=to` (1-based, inclusive).
    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from - 1..to].to_vec())
    }

    /// `{i : a_i < a_{i+1}}`, 1-based.
    pub fn ascents(&self) -> BTreeSet<usize> {
        (1..self.len())
            .filter(|&i| self.at(i) < self.at(i + 1))
            .collect()
    }

    /// `{i : a_i > a_{i+1}}`, 1-based.
    pub fn descents(&self) -> BTreeSet<usize> {
        (1..self.len())
            .filter(|&i| self.at(i) > self.at(i + 1))
            .collect()
    }

    /// `{1 < i < p : a_{i-1} < a_i > a_{i+1}}`.
    pub fn peaks(&self) -> BTreeSet<usize> {
        peak_set(&self.0)
    }
}

/// Peak positions (1-based) of any sequence.
pub fn peak_set<T: PartialOrd>(seq: &[T]) -> BTreeSet<usize> {
    (1..seq.len().saturating_sub(1))
        .filter(|&k| seq[k - 1] < seq[k] && seq[k] > seq[k + 1])
        .map(|k| k + 1)
        .collect()
}

/// No peak at position 1 or `len`, and no two adjacent peaks.
pub fn is_admissible_peak_set(peaks: &BTreeSet<usize>, len: usize) -> bool {
    peaks.iter().all(|&p| p > 1 && p < len) && peaks.iter().tuple_windows().all(|(a, b)| b - a > 1)
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a < 10) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            write!(f, "[{}]", self.0.iter().join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("ε")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts a digit string such as `0120312` or a bracketed list `[0,12,3]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            let body = s.trim_start_matches('[').trim_end_matches(']');
            body.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad letter {c:?} in {s:?}"))))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        }
    }
}

/// All reduced words of `w`, in lexicographic order.
///
/// Recurses over right descents with a memo keyed on the permutation.
pub fn reduced_words(w: &SignedPermutation) -> Vec<Word> {
    let mut memo: HashMap<SignedPermutation, Vec<Word>> = HashMap::new();
    let mut out = reduced_words_memo(w, &mut memo);
    out.sort();
    out
}

fn reduced_words_memo(
    w: &SignedPermutation,
    memo: &mut HashMap<SignedPermutation, Vec<Word>>,
) -> Vec<Word> {
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let out = if w.rank() == 0 {
        vec![Word::empty()]
    } else {
        let mut out = Vec::new();
        for a in w.right_descents() {
            for mut prefix in reduced_words_memo(&w.mul_generator(a), memo) {
                prefix.0.push(a);
                out.push(prefix);
            }
        }
        out
    };
    memo.insert(w.clone(), out.clone());
    out
}

/// Number of reduced words of `w`.
pub fn count_reduced_words(w: &SignedPermutation) -> u64 {
    fn go(w: &SignedPermutation, memo: &mut HashMap<SignedPermutation, u64>) -> u64 {
        if w.rank() == 0 {
            return 1;
        }
        if let Some(&c) = memo.get(w) {
            return c;
        }
        let c = w
            .right_descents()
            .into_iter()
            .map(|a| go(&w.mul_generator(a), memo))
            .sum();
        memo.insert(w.clone(), c);
        c
    }
    go(w, &mut HashMap::new())
}

/// Every reduced word of length `len` using letters `0..rank`, i.e. the
/// reduced words of all elements of `B_rank` of that length, sorted.
pub fn reduced_words_of_length(rank: usize, len: usize) -> Vec<Word> {
    fn extend(
        prefix: &mut Vec<u32>,
        w: &SignedPermutation,
        rank: u32,
        len: usize,
        out: &mut Vec<Word>,
    ) {
        if prefix.len() == len {
            out.push(Word(prefix.clone()));
            return;
        }
        for a in 0..rank {
            if !w.has_right_descent(a) {
                prefix.push(a);
                extend(prefix, &w.mul_generator(a), rank, len, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &SignedPermutation::identity(), rank as u32, len, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i32]) -> SignedPermutation {
        SignedPermutation::new(v.to_vec()).unwrap()
    }

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(word("0120312").evaluate(), w(&[3, 4, -2, -1]));
        assert_eq!(word("1021201").evaluate(), w(&[1, -3, -2]));
        assert_eq!(Word::empty().evaluate(), SignedPermutation::identity());
        assert_eq!(word("121").evaluate(), w(&[3, 2, 1]));
    }

    #[test]
    fn reducedness() {
        assert!(word("0101").is_reduced());
        assert!(!word("00").is_reduced());
        assert!(word("1343").is_reduced());
        assert!(!word("1212").is_reduced());
        assert!(Word::empty().is_reduced());
        for a in reduced_words_of_length(3, 5) {
            assert_eq!(a.evaluate().length(), 5);
        }
    }

    #[test]
    fn peak_examples() {
        assert_eq!(word("4565").peaks(), BTreeSet::from([3]));
        assert!(word("7267").peaks().is_empty());
        assert_eq!(word("1343").ascents(), BTreeSet::from([1, 2]));
        assert_eq!(word("1343").descents(), BTreeSet::from([3]));
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible_peak_set(&BTreeSet::from([2, 4]), 5));
        assert!(!is_admissible_peak_set(&BTreeSet::from([2, 3]), 5));
        assert!(!is_admissible_peak_set(&BTreeSet::from([1]), 5));
        assert!(!is_admissible_peak_set(&BTreeSet::from([5]), 5));
    }

    #[test]
    fn reduced_word_catalog() {
        let got = reduced_words(&w(&[2, 1, 5, 4, 3]));
        let mut want: Vec<Word> = ["1343", "3143", "3413", "3431", "4341", "4314", "4134", "1434"]
            .iter()
            .map(|s| word(s))
            .collect();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(reduced_words(&SignedPermutation::identity()), vec![Word::empty()]);
        assert_eq!(reduced_words(&w(&[-1, -2])), vec![word("0101"), word("1010")]);
    }

    #[test]
    fn counts_agree_with_enumeration() {
        for v in SignedPermutation::all(3) {
            assert_eq!(count_reduced_words(&v), reduced_words(&v).len() as u64);
        }
    }

    #[test]
    fn parse_formats() {
        assert_eq!(word("[0,12,3]").letters(), &[0, 12, 3]);
        assert_eq!(Word::new(vec![0, 12]).to_string(), "[0,12]");
        assert!("01a".parse::<Word>().is_err());
    }
}
