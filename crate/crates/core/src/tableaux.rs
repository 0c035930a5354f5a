//! Strict partitions and shifted tableaux.
//!
//! Rows are stored bottom row first (French notation). Row `i` of a shifted
//! shape occupies columns `i..=λ_i + i - 1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Rows whose last cell can be removed leaving a strict partition.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&r| self.parts.get(r + 1).is_none_or(|&next| self.parts[r] > next + 1))
            .map(|r| r + 1)
            .collect()
    }

    fn remove_from_row(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Self { parts }
    }

    /// Every strict partition of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Self> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            if rest == 0 {
                out.push(StrictPartition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Strict partitions of every size from 1 to `n`.
    pub fn all_up_to(n: usize) -> Vec<Self> {
        (1..=n).flat_map(Self::all_of_size).collect()
    }

    /// Number of standard shifted tableaux, by corner removal.
    pub fn count_sst(&self) -> u64 {
        if self.parts.is_empty() {
            return 1;
        }
        self.corners()
            .into_iter()
            .map(|r| self.remove_from_row(r).count_sst())
            .sum()
    }
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<StrictPartition> for Vec<usize> {
    fn from(p: StrictPartition) -> Self {
        p.parts
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// A filling of a shifted shape. Which axioms hold depends on the
/// constructor: [`ShiftedTableau::standard`] or [`ShiftedTableau::unimodal`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedTableau {
    shape: StrictPartition,
    rows: Vec<Vec<u32>>,
}

fn is_unimodal(row: &[u32]) -> bool {
    let j = decreasing_prefix(row);
    row[j.saturating_sub(1)..].windows(2).all(|w| w[0] < w[1])
}

/// Length of the strictly decreasing prefix; the middle of a unimodal row.
pub(crate) fn decreasing_prefix(row: &[u32]) -> usize {
    if row.is_empty() {
        return 0;
    }
    1 + row.windows(2).take_while(|w| w[0] > w[1]).count()
}

impl ShiftedTableau {
    fn shape_of(rows: &[Vec<u32>]) -> Result<StrictPartition> {
        StrictPartition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau(format!("row lengths {rows:?} are not strictly decreasing")))
    }

    /// Rows bottom first; entries a bijection onto `[n]`, increasing along
    /// rows and up columns.
    pub fn standard(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Self::shape_of(&rows)?;
        let t = Self { shape, rows };
        let n = t.size() as u32;
        let entries: BTreeSet<u32> = t.rows.iter().flatten().copied().collect();
        if entries.len() != t.size() || entries.iter().any(|&e| e == 0 || e > n) {
            return Err(Error::InvalidTableau(format!("{t:?} is not a bijection onto [{n}]")));
        }
        for (i, j) in t.cells() {
            let e = t.get(i, j).unwrap();
            let right = t.get(i, j + 1).is_none_or(|x| x > e);
            let above = t.get(i + 1, j).is_none_or(|x| x > e);
            if !right || !above {
                return Err(Error::InvalidTableau(format!("{t:?} decreases at ({i},{j})")));
            }
        }
        Ok(t)
    }

    /// Rows bottom first; each row decreasing then increasing.
    pub fn unimodal(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Self::shape_of(&rows)?;
        if let Some(r) = rows.iter().find(|r| !is_unimodal(r)) {
            return Err(Error::InvalidTableau(format!("row {r:?} is not unimodal")));
        }
        Ok(Self { shape, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        let shape = StrictPartition {
            parts: rows.iter().map(Vec::len).collect(),
        };
        Self { shape, rows }
    }

    pub fn empty() -> Self {
        Self::from_rows_unchecked(Vec::new())
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry at row `i`, column `j` (both 1-based, `i ≤ j`).
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        if i == 0 || j < i {
            return None;
        }
        self.rows.get(i - 1)?.get(j - i).copied()
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| (0..row.len()).map(move |c| (r + 1, r + 1 + c)))
            .collect()
    }

    /// Rows read left to right, from the top row down.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// `j` is a peak when it appears after both `j-1` and `j+1` in the
    /// reading word.
    pub fn peaks(&self) -> BTreeSet<usize> {
        let pos = positions(&self.reading_word());
        let n = pos.len() - 1;
        (2..n).filter(|&j| pos[j] > pos[j - 1] && pos[j] > pos[j + 1]).collect()
    }

    /// The same cells refilled from a new reading word.
    fn with_reading_word(&self, word: &[u32]) -> Self {
        let mut it = word.iter().copied();
        let mut rows: Vec<Vec<u32>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for row in rows.iter_mut().rev() {
            for e in row.iter_mut() {
                *e = it.next().expect("reading word covers every cell");
            }
        }
        Self {
            shape: self.shape.clone(),
            rows,
        }
    }

    fn to_skew(&self) -> SkewShiftedTableau {
        SkewShiftedTableau {
            cells: self
                .cells()
                .into_iter()
                .map(|(i, j)| ((i, j), self.get(i, j).unwrap()))
                .collect(),
        }
    }
}

/// `pos[v]` is the index of `v` in a permutation of `[n]`; index 0 unused.
fn positions(word: &[u32]) -> Vec<usize> {
    let mut pos = vec![0; word.len() + 1];
    for (idx, &v) in word.iter().enumerate() {
        pos[v as usize] = idx;
    }
    pos
}

/// Text in French notation: top row first, each row indented by its
/// starting column.
impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().flatten().max().map_or(1, |m| m.to_string().len());
        for (r, row) in self.rows.iter().enumerate().rev() {
            let indent = " ".repeat(r * (width + 1));
            let body = row.iter().map(|e| format!("{e:>width$}")).join(" ");
            writeln!(f, "{indent}{body}")?;
        }
        Ok(())
    }
}

/// Cells of a shifted skew shape with their entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShiftedTableau {
    pub cells: BTreeMap<(usize, usize), u32>,
}

impl SkewShiftedTableau {
    /// Whether an empty cell sits directly left of or below some cell that
    /// might slide into it, with no filled cell to its left or below.
    fn is_inner_corner(&self, (i, j): (usize, usize)) -> bool {
        if i == 0 || j < i || self.cells.contains_key(&(i, j)) {
            return false;
        }
        let left_filled = j > i && self.cells.contains_key(&(i, j - 1));
        let below_filled = i > 1 && self.cells.contains_key(&(i - 1, j));
        !left_filled && !below_filled
    }

    /// Jeu de taquin slide into `empty`: the smaller of the right and upper
    /// neighbours moves in, until the hole reaches the outer boundary.
    pub fn jdt_slide(&self, empty: (usize, usize)) -> Result<Self> {
        if !self.is_inner_corner(empty) {
            return Err(Error::NotInnerCorner(empty.0, empty.1));
        }
        let mut cells = self.cells.clone();
        let (mut i, mut j) = empty;
        loop {
            let right = cells.get(&(i, j + 1)).map(|&e| (e, (i, j + 1)));
            let above = if i < j {
                cells.get(&(i + 1, j)).map(|&e| (e, (i + 1, j)))
            } else {
                None
            };
            let Some((e, from)) = [right, above].into_iter().flatten().min() else {
                break;
            };
            cells.remove(&from);
            cells.insert((i, j), e);
            (i, j) = from;
        }
        Ok(Self { cells })
    }

    /// Reassemble a straight shifted shape.
    pub fn to_straight(&self) -> Result<ShiftedTableau> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (&(i, j), &e) in &self.cells {
            if rows.len() < i {
                rows.resize(i, Vec::new());
            }
            if j != i + rows[i - 1].len() {
                return Err(Error::InvalidTableau(format!("cell ({i},{j}) leaves a gap")));
            }
            rows[i - 1].push(e);
        }
        ShiftedTableau::standard(rows)
    }
}

/// Every standard shifted tableau of shape `λ`, sorted.
pub fn enumerate_sst(lambda: &StrictPartition) -> Vec<ShiftedTableau> {
    fn go(shape: &StrictPartition) -> Vec<Vec<Vec<u32>>> {
        if shape.parts.is_empty() {
            return vec![Vec::new()];
        }
        let n = shape.size() as u32;
        let mut out = Vec::new();
        for r in shape.corners() {
            for mut rows in go(&shape.remove_from_row(r)) {
                if rows.len() < r {
                    rows.push(Vec::new());
                }
                rows[r - 1].push(n);
                out.push(rows);
            }
        }
        out
    }
    let mut out: Vec<_> = go(lambda)
        .into_iter()
        .map(ShiftedTableau::from_rows_unchecked)
        .collect();
    out.sort();
    out
}

/// `U_λ`: `1..λ_1` in the bottom row, the next `λ_2` values above, and so on.
pub fn u_max(lambda: &StrictPartition) -> ShiftedTableau {
    let mut next = 1;
    let rows = lambda
        .parts()
        .iter()
        .map(|&len| {
            let row = (next..next + len as u32).collect();
            next += len as u32;
            row
        })
        .collect();
    ShiftedTableau::from_rows_unchecked(rows)
}

/// Remove the 1, slide into `(1,1)`, subtract 1 from every entry.
pub fn delta(q: &ShiftedTableau) -> Result<ShiftedTableau> {
    if q.size() == 0 {
        return Err(Error::EmptyTableau);
    }
    let mut skew = q.to_skew();
    skew.cells.remove(&(1, 1));
    let slid = skew.jdt_slide((1, 1))?;
    let cells = slid.cells.into_iter().map(|(c, e)| (c, e - 1)).collect();
    SkewShiftedTableau { cells }.to_straight()
}

/// Order-preserving relabelling onto `1..=len`.
pub fn flatten(seq: &[u32]) -> Result<Vec<u32>> {
    let sorted: Vec<u32> = seq.iter().copied().sorted().collect();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateValues);
    }
    Ok(seq
        .iter()
        .map(|v| sorted.binary_search(v).unwrap() as u32 + 1)
        .collect())
}

/// Patterns of `h_1` on permutations of `[4]`: `(fixed letters by position,
/// positions of x and y)`. `0` marks x or y.
const H1_PATTERNS: [[u32; 4]; 8] = [
    [1, 0, 2, 0],
    [0, 1, 2, 0],
    [1, 0, 4, 0],
    [0, 1, 4, 0],
    [4, 0, 1, 0],
    [0, 4, 1, 0],
    [4, 0, 3, 0],
    [0, 4, 3, 0],
];

fn h1(p: [u32; 4]) -> [u32; 4] {
    for pat in H1_PATTERNS {
        if pat.iter().zip(&p).all(|(&q, &v)| q == 0 || q == v) {
            let free: Vec<usize> = (0..4).filter(|&k| pat[k] == 0).collect();
            let mut out = p;
            out.swap(free[0], free[1]);
            return out;
        }
    }
    p
}

/// Haiman's shifted dual equivalence `h_i` on a permutation of `[n]`,
/// acting on the values `i..=i+3`.
pub fn h_move(pi: &[u32], i: usize) -> Result<Vec<u32>> {
    let n = pi.len();
    if flatten(pi)? != pi {
        return Err(Error::NotAPermutation(pi.to_vec()));
    }
    if n < 4 || i == 0 || i > n - 3 {
        return Err(Error::OutOfRange {
            index: i,
            max: n.saturating_sub(3),
        });
    }
    let lo = i as u32;
    let idx: Vec<usize> = (0..n).filter(|&k| (lo..lo + 4).contains(&pi[k])).collect();
    let local: [u32; 4] = std::array::from_fn(|k| pi[idx[k]] - lo + 1);
    let moved = h1(local);
    let mut out = pi.to_vec();
    for (k, &pos) in idx.iter().enumerate() {
        out[pos] = moved[k] + lo - 1;
    }
    Ok(out)
}

/// `h_i` acting on the reading word of a standard tableau.
pub fn h_move_tableau(t: &ShiftedTableau, i: usize) -> Result<ShiftedTableau> {
    let word = h_move(&t.reading_word(), i)?;
    let out = t.with_reading_word(&word);
    ShiftedTableau::standard(out.rows.clone())
        .map_err(|_| Error::Invariant(format!("h_{i} of {t:?} is not standard")))
}

/// Inverse of a permutation of `[n]` in one-line notation.
pub fn inverse_permutation(pi: &[u32]) -> Vec<u32> {
    let mut inv = vec![0; pi.len()];
    for (k, &v) in pi.iter().enumerate() {
        inv[v as usize - 1] = k as u32 + 1;
    }
    inv
}
