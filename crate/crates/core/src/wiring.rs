//! Wiring diagrams of words in the generators of `B_∞`.
//!
//! Wires sit at nonzero integer positions. The cross of a letter `a > 0` at
//! level `a` swaps positions `a` and `a+1`, and its mirror at level `-a`
//! swaps `-a` and `-a-1`. A letter `0` gives a single cross at level 0 that
//! swaps `1` and `-1`. Wires are labelled at the right edge by their
//! position, so the label at position `q` just right of column `k` is
//! `w^k(q)` with `w^k = s_{a_p} ⋯ s_{a_{k+1}}`.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::permutations::{SignedPermutation, Transposition, Word};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct WiringDiagram {
    word: Word,
    n: usize,
    /// `partials[k] = w^k` for `k = 0..=p`.
    partials: Vec<SignedPermutation>,
}

/// A cross at `(column, level)` between wires `x < y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Crossing {
    pub column: usize,
    pub level: i32,
    pub wires: (i32, i32),
}

fn ordered(a: i32, b: i32) -> (i32, i32) {
    (a.min(b), a.max(b))
}

impl WiringDiagram {
    pub fn build(a: &Word) -> Self {
        let n = a.max_letter().map_or(1, |m| m as usize + 1);
        let p = a.len();
        let mut partials = vec![SignedPermutation::identity(); p + 1];
        for k in (1..=p).rev() {
            partials[k - 1] = partials[k].mul_generator(a.at(k));
        }
        Self {
            word: a.clone(),
            n,
            partials,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Wires are labelled by `[-n] ∪ [n]`.
    pub fn wire_bound(&self) -> usize {
        self.n
    }

    /// `w^k`; `w^0` is the inverse of the evaluated word.
    pub fn partial(&self, k: usize) -> &SignedPermutation {
        &self.partials[k]
    }

    /// Wire at position `q` immediately right of column `k`.
    pub fn label(&self, k: usize, q: i32) -> i32 {
        self.partials[k].value(q)
    }

    /// The crosses of column `k`: one at level 0 for the letter 0, otherwise
    /// the upper cross followed by its mirror.
    pub fn crossings_at(&self, k: usize) -> Vec<Crossing> {
        let a = self.word.at(k) as i32;
        let lab = |q| self.label(k, q);
        if a == 0 {
            vec![Crossing {
                column: k,
                level: 0,
                wires: ordered(lab(-1), lab(1)),
            }]
        } else {
            vec![
                Crossing {
                    column: k,
                    level: a,
                    wires: ordered(lab(a), lab(a + 1)),
                },
                Crossing {
                    column: k,
                    level: -a,
                    wires: ordered(lab(-a), lab(-a - 1)),
                },
            ]
        }
    }

    pub fn crossings(&self) -> Vec<Crossing> {
        (1..=self.word.len()).flat_map(|k| self.crossings_at(k)).collect()
    }

    /// Where wires `t.i` and `t.j` cross. The mirrored pair crosses in the
    /// same column at the opposite level.
    pub fn crossing_of_inversion(&self, t: Transposition) -> Result<Crossing> {
        self.word.require_reduced()?;
        let want = ordered(t.i, t.j);
        self.crossings()
            .into_iter()
            .find(|c| c.wires == want)
            .ok_or(Error::NotAnInversion(t.i, t.j))
    }

    /// The cross of column `k` between the given wires, if they meet there.
    pub fn find_in_column(&self, k: usize, wires: (i32, i32)) -> Option<Crossing> {
        let want = ordered(wires.0, wires.1);
        self.crossings_at(k).into_iter().find(|c| c.wires == want)
    }

    pub fn crossing_at_level(&self, k: usize, level: i32) -> Option<Crossing> {
        self.crossings_at(k).into_iter().find(|c| c.level == level)
    }

    /// Labels read upward along the left edge, i.e. the long form of `w⁻¹`.
    pub fn left_edge(&self) -> Vec<i32> {
        let n = self.n as i32;
        (-n..=n).filter(|&q| q != 0).map(|q| self.label(0, q)).collect()
    }

    /// DOT graph with one node per cross and the wire ids as edge labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph wiring {\n  rankdir=LR;\n");
        for c in self.crossings() {
            let _ = writeln!(
                s,
                "  c{}_{} [label=\"{}@{}\", shape=box];",
                c.column,
                level_id(c.level),
                c.column,
                c.level
            );
        }
        // Follow every wire from the left edge to the right edge.
        let n = self.n as i32;
        for wire in (-n..=n).filter(|&q| q != 0) {
            let mut prev = format!("L{}", level_id(wire));
            for c in self.crossings() {
                if c.wires.0 == wire || c.wires.1 == wire {
                    let node = format!("c{}_{}", c.column, level_id(c.level));
                    let _ = writeln!(s, "  {prev} -> {node} [label=\"{wire}\"];");
                    prev = node;
                }
            }
            let _ = writeln!(s, "  {prev} -> R{} [label=\"{wire}\"];", level_id(wire));
        }
        s.push_str("}\n");
        s
    }
}

fn level_id(level: i32) -> String {
    if level < 0 {
        format!("m{}", -level)
    } else {
        level.to_string()
    }
}

/// Text rendering: one line per wire position, top to bottom, labels at
/// both edges, `X` on the rows touched by each cross.
impl fmt::Display for WiringDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n as i32;
        let p = self.word.len();
        let crossings = self.crossings();
        for q in (-n..=n).rev().filter(|&q| q != 0) {
            write!(f, "{:>3} ", self.label(0, q))?;
            for k in 1..=p {
                let hit = crossings.iter().any(|c| {
                    c.column == k
                        && match c.level {
                            0 => q.abs() == 1,
                            l if l > 0 => q == l || q == l + 1,
                            l => q == l || q == l - 1,
                        }
                });
                f.write_str(if hit { "-X" } else { "--" })?;
            }
            writeln!(f, "- {q:>3}")?;
        }
        Ok(())
    }
}

/// `P^δ_i`: add `δ` to `a_i`; a `0` always becomes `1`.
pub fn push(a: &Word, i: usize, delta: i32) -> Result<Word> {
    if i == 0 || i > a.len() {
        return Err(Error::OutOfRange {
            index: i,
            max: a.len(),
        });
    }
    if delta.abs() != 1 {
        return Err(Error::Precondition(format!("push direction must be ±1, got {delta}")));
    }
    let mut letters = a.letters().to_vec();
    letters[i - 1] = match letters[i - 1] {
        0 => 1,
        x => (x as i32 + delta) as u32,
    };
    Ok(Word::new(letters))
}

/// For `a` whose deletion at `k` is reduced: `None` if `a` is itself reduced,
/// otherwise the unique other position whose deletion gives a reduced word
/// of the same element.
pub fn find_defect(a: &Word, k: usize) -> Result<Option<usize>> {
    if k == 0 || k > a.len() {
        return Err(Error::OutOfRange {
            index: k,
            max: a.len(),
        });
    }
    let without = a.delete(k);
    if !without.is_reduced() {
        return Err(Error::Precondition(format!(
            "{a} with position {k} deleted is not reduced"
        )));
    }
    if a.is_reduced() {
        return Ok(None);
    }
    let target = without.evaluate();
    let mut found = (1..=a.len()).filter(|&j| {
        j != k && {
            let b = a.delete(j);
            b.is_reduced() && b.evaluate() == target
        }
    });
    let j = found
        .next()
        .ok_or_else(|| Error::Invariant(format!("no defect found in {a} away from {k}")))?;
    if let Some(other) = found.next() {
        return Err(Error::Invariant(format!(
            "defect of {a} at {k} is not unique: {j} and {other}"
        )));
    }
    Ok(Some(j))
}
