//! Signed Little bumps.
//!
//! A bump starts at the cross of an inversion `(i, j)` and pushes it one row
//! in a fixed direction. Rows are signed levels, and a cross on the x-axis
//! moves off it to level `±1`. Whenever the word stops being reduced, the
//! pair of wires just pushed crosses a second time; that second cross is
//! pushed next, in the same direction. The letter of a cross at level `r` is
//! `|r|`, so a push written as a letter change flips sign below the axis.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::insertion::q_prime;
use crate::permutations::{transition_data, SignedPermutation, Transposition, Word};
use crate::wiring::{find_defect, WiringDiagram};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(try_from = "i32")]
pub enum Direction {
    Down,
    Up,
}

impl Direction {
    pub fn sign(self) -> i32 {
        match self {
            Direction::Down => -1,
            Direction::Up => 1,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Direction::Down => Direction::Up,
            Direction::Up => Direction::Down,
        }
    }

    fn of_sign(s: i32) -> Self {
        if s < 0 {
            Direction::Down
        } else {
            Direction::Up
        }
    }
}

impl TryFrom<i32> for Direction {
    type Error = Error;

    fn try_from(v: i32) -> Result<Self> {
        match v {
            -1 => Ok(Direction::Down),
            1 => Ok(Direction::Up),
            _ => Err(Error::Parse(format!("direction must be ±1, got {v}"))),
        }
    }
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i32(self.sign())
    }
}

/// Record of one bump. `steps[n]` is the push producing
/// `intermediate_words[n]`; its direction is the change of the letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BumpTrace {
    pub input: Word,
    pub start: (Transposition, Direction),
    pub steps: Vec<(usize, Direction)>,
    pub intermediate_words: Vec<Word>,
    pub result: Word,
}

impl Serialize for BumpTrace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Start {
            i: i32,
            j: i32,
            delta: Direction,
        }
        #[derive(Serialize)]
        struct Step {
            position: usize,
            delta: Direction,
            word: String,
        }
        let (t, d) = self.start;
        let steps: Vec<Step> = self
            .steps
            .iter()
            .zip(&self.intermediate_words)
            .map(|(&(position, delta), w)| Step {
                position,
                delta,
                word: w.to_string(),
            })
            .collect();
        let mut st = s.serialize_struct("BumpTrace", 4)?;
        st.serialize_field("input", &self.input.to_string())?;
        st.serialize_field("start", &Start { i: t.i, j: t.j, delta: d })?;
        st.serialize_field("steps", &steps)?;
        st.serialize_field("result", &self.result.to_string())?;
        st.end()
    }
}

fn check_bump(a: &Word, t: Transposition) -> Result<SignedPermutation> {
    a.require_reduced()?;
    let w = a.evaluate();
    if w.value(t.i) <= w.value(t.j) {
        return Err(Error::NotAnInversion(t.i, t.j));
    }
    if w.mul_transposition(t).length() + 1 != w.length() {
        return Err(Error::LengthCondition(t.i, t.j));
    }
    Ok(w)
}

/// Move the cross at `level` in column `k` one row in direction `dir`.
fn push_level(b: &Word, k: usize, level: i32, dir: Direction) -> (Word, i32, Direction) {
    let new_level = if level == 0 { dir.sign() } else { level + dir.sign() };
    let recorded = if level == 0 {
        Direction::Up
    } else {
        Direction::of_sign(new_level.abs() - level.abs())
    };
    let mut letters = b.letters().to_vec();
    letters[k - 1] = new_level.unsigned_abs();
    (Word::new(letters), new_level, recorded)
}

/// `B^δ_{(i,j)}(a)`. The pair is used in the orientation given, so
/// `(i, j)` and `(-j, -i)` start from mirrored crosses.
pub fn little_bump(a: &Word, t: Transposition, delta: Direction) -> Result<BumpTrace> {
    let w = check_bump(a, t)?;
    let limit = 2 * w.length();
    let start = WiringDiagram::build(a).crossing_of_inversion(t)?;

    let mut steps = Vec::new();
    let mut words = Vec::new();
    let (mut b, mut level, rec) = push_level(a, start.column, start.level, delta);
    let mut k = start.column;
    steps.push((k, rec));
    words.push(b.clone());
    while let Some(l) = find_defect(&b, k)? {
        let d = WiringDiagram::build(&b);
        let tracked = d
            .crossing_at_level(k, level)
            .expect("pushed cross is present")
            .wires;
        let next = d.find_in_column(l, tracked).ok_or_else(|| {
            Error::Invariant(format!("wires {tracked:?} do not meet again at column {l} of {b}"))
        })?;
        let (nb, nl, rec) = push_level(&b, l, next.level, delta);
        b = nb;
        level = nl;
        k = l;
        steps.push((k, rec));
        words.push(b.clone());
        if steps.len() > limit {
            return Err(Error::Invariant(format!(
                "bump of {a} at ({}, {}) exceeded {limit} pushes",
                t.i, t.j
            )));
        }
    }
    Ok(BumpTrace {
        input: a.clone(),
        start: (t, delta),
        steps,
        intermediate_words: words,
        result: b,
    })
}

/// The bump result together with the second reflection: for a downward bump
/// at `(j, k)` the result lies in `R(x t_{jk} t_{ij})` with `i < j`, for an
/// upward bump at `(i, j)` in `R(x t_{ij} t_{jk})` with `k > j`.
pub fn bump_image_target(
    a: &Word,
    t: Transposition,
    delta: Direction,
) -> Result<(Word, Transposition)> {
    let trace = little_bump(a, t, delta)?;
    let u = a.evaluate().mul_transposition(t);
    let y = trace.result.evaluate();
    let r = Transposition::from_permutation(&u.inverse().compose(&y))
        .ok_or_else(|| Error::Invariant(format!("{} is not one reflection from {u}", trace.result)))?;
    let oriented = [r, r.mirrored()].into_iter().find(|c| match delta {
        Direction::Down => c.j == t.i,
        Direction::Up => c.i == t.j,
    });
    let r = oriented.ok_or_else(|| {
        Error::Invariant(format!("second reflection {r} does not meet ({}, {})", t.i, t.j))
    })?;
    Ok((trace.result, r))
}

/// `B^-_{(r,s)}` for the transition pair of `evaluate(a)`.
pub fn canonical_bump(a: &Word) -> Result<Word> {
    a.require_reduced()?;
    let td = transition_data(&a.evaluate())?;
    Ok(little_bump(a, Transposition { i: td.r, j: td.s }, Direction::Down)?.result)
}

/// Repeated canonical bumps until the word belongs to an increasing element.
pub fn to_increasing(a: &Word) -> Result<Word> {
    a.require_reduced()?;
    let mut b = a.clone();
    while !b.evaluate().is_increasing() {
        b = canonical_bump(&b)?;
    }
    Ok(b)
}

/// Whether `a` and `b` are connected by Little bumps, decided by comparing
/// recording tableaux.
pub fn communicate(a: &Word, b: &Word) -> Result<bool> {
    Ok(q_prime(a)? == q_prime(b)?)
}

/// Every `(t, δ)` for which a bump of `a` is defined, in both orientations of
/// each pair.
pub fn applicable_bumps(a: &Word) -> Vec<(Transposition, Direction)> {
    let w = a.evaluate();
    let len = w.length();
    let mut out = BTreeSet::new();
    for t in w.inversion_set() {
        if w.mul_transposition(t).length() + 1 != len {
            continue;
        }
        for o in [t, t.mirrored()] {
            for d in [Direction::Down, Direction::Up] {
                out.insert(((o.i, o.j), d));
            }
        }
    }
    out.into_iter()
        .map(|((i, j), d)| (Transposition { i, j }, d))
        .collect()
}

/// Communication classes found by breadth-first search over bumps, among
/// words whose letters stay below `letter_cap`. Returns a class id per word.
pub fn bump_classes(seeds: &[Word], letter_cap: u32) -> Result<BTreeMap<Word, usize>> {
    let mut class: BTreeMap<Word, usize> = BTreeMap::new();
    let mut next_id = 0;
    for seed in seeds {
        if class.contains_key(seed) {
            continue;
        }
        let id = next_id;
        next_id += 1;
        class.insert(seed.clone(), id);
        let mut queue = VecDeque::from([seed.clone()]);
        while let Some(a) = queue.pop_front() {
            for (t, d) in applicable_bumps(&a) {
                let b = little_bump(&a, t, d)?.result;
                if b.max_letter().is_some_and(|m| m >= letter_cap) {
                    continue;
                }
                if let Some(&other) = class.get(&b) {
                    if other != id {
                        return Err(Error::Invariant(format!(
                            "bump from {a} reached {b} in an earlier class"
                        )));
                    }
                    continue;
                }
                class.insert(b.clone(), id);
                queue.push_back(b);
            }
        }
    }
    Ok(class)
}
