use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An element of `B_∞`, stored in short one-line form `[w(1), …, w(n)]`.
///
/// The window is always trimmed of trailing fixed points, so the identity has
/// an empty window and structural equality coincides with equality in `B_∞`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(window));
            }
            seen[a] = true;
        }
        Ok(Self::from_window_unchecked(window))
    }

    pub(crate) fn from_window_unchecked(mut window: Vec<i32>) -> Self {
        while window.last().is_some_and(|&x| x == window.len() as i32) {
            window.pop();
        }
        Self { window }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// The trimmed window `w(1..n)`.
    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Size of the trimmed window.
    pub fn rank(&self) -> usize {
        self.window.len()
    }

    /// The window extended with fixed points to at least `n` entries.
    pub fn padded(&self, n: usize) -> Vec<i32> {
        let mut v = self.window.clone();
        v.extend(v.len() as i32 + 1..=n as i32);
        v
    }

    /// `w(k)` for any nonzero integer `k`, using `w(-k) = -w(k)`.
    pub fn value(&self, k: i32) -> i32 {
        debug_assert!(k != 0);
        let a = k.unsigned_abs() as usize;
        let v = if a <= self.window.len() {
            self.window[a - 1]
        } else {
            a as i32
        };
        if k > 0 {
            v
        } else {
            -v
        }
    }

    /// Long form `[w(-n), …, w(-1), w(1), …, w(n)]`.
    pub fn long_form(&self, n: usize) -> Vec<i32> {
        let n = n as i32;
        (1..=n)
            .rev()
            .map(|k| self.value(-k))
            .chain((1..=n).map(|k| self.value(k)))
            .collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.window.len()];
        for (idx, &x) in self.window.iter().enumerate() {
            let pos = idx as i32 + 1;
            inv[x.unsigned_abs() as usize - 1] = if x > 0 { pos } else { -pos };
        }
        Self::from_window_unchecked(inv)
    }

    /// The product `self · other`, acting as `(uv)(k) = u(v(k))`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rank().max(other.rank());
        let window = (1..=n as i32)
            .map(|k| self.value(other.value(k)))
            .collect();
        Self::from_window_unchecked(window)
    }

    /// Right multiplication by a reflection, `w · t_{ij}`.
    pub fn mul_transposition(&self, t: Transposition) -> Self {
        self.compose(&t.to_permutation())
    }

    /// Right multiplication by the generator `s_a`.
    pub fn mul_generator(&self, a: u32) -> Self {
        let a = a as usize;
        let mut v = self.padded(a + 1);
        if a == 0 {
            v[0] = -v[0];
        } else {
            v.swap(a - 1, a);
        }
        Self::from_window_unchecked(v)
    }

    /// Type B inversion set: pairs `(i, j)` with `i ∈ [-n] ∪ [n]`, `j ∈ [n]`,
    /// `|i| ≤ j` and `w(i) > w(j)`.
    pub fn inversion_set(&self) -> Vec<Transposition> {
        let n = self.rank() as i32;
        let mut out = Vec::new();
        for j in 1..=n {
            for i in (-j..=j).filter(|&i| i != 0 && i != j) {
                if self.value(i) > self.value(j) {
                    out.push(Transposition { i, j });
                }
            }
        }
        out
    }

    /// Coxeter length, computed as the size of the inversion set.
    pub fn length(&self) -> usize {
        let n = self.rank() as i32;
        let mut count = 0;
        for j in 1..=n {
            let wj = self.value(j);
            for i in 1..j {
                let wi = self.value(i);
                count += usize::from(wi > wj) + usize::from(-wi > wj);
            }
            count += usize::from(wj < 0);
        }
        count
    }

    /// Whether `s_a` is a right descent, i.e. `ℓ(w s_a) < ℓ(w)`.
    pub fn has_right_descent(&self, a: u32) -> bool {
        if a == 0 {
            self.value(1) < 0
        } else {
            self.value(a as i32) > self.value(a as i32 + 1)
        }
    }

    pub fn right_descents(&self) -> Vec<u32> {
        (0..self.rank() as u32)
            .filter(|&a| self.has_right_descent(a))
            .collect()
    }

    /// `w(1) < w(2) < ⋯`.
    pub fn is_increasing(&self) -> bool {
        self.window.windows(2).all(|p| p[0] < p[1])
    }

    /// All elements of `B_n`, in lexicographic order of their padded windows.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out: Vec<Vec<i32>> = (1..=n as i32)
            .permutations(n)
            .flat_map(|perm| {
                (0..1u32 << n).map(move |signs| {
                    perm.iter()
                        .enumerate()
                        .map(|(b, &x)| if signs >> b & 1 == 1 { -x } else { x })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        out.sort();
        out.into_iter().map(Self::from_window_unchecked).collect()
    }
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(w: SignedPermutation) -> Self {
        w.window
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window.iter().join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Accepts `[3,4,-2,-1]`, `3,4,-2,-1` or whitespace separated values.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let window = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(window)
    }
}

/// The signed reflection `t_{ij}` for nonzero `i < j`.
///
/// The pair is kept in the orientation it was created with, since a Little
/// bump at `(i, j)` and at `(-j, -i)` start from mirrored crossings. Equality
/// and hashing are those of group elements: `t_{ij} = t_{-j,-i}`.
#[derive(Clone, Copy, Serialize, Deserialize)]
pub struct Transposition {
    pub i: i32,
    pub j: i32,
}

impl Transposition {
    pub fn new(i: i32, j: i32) -> Result<Self> {
        if i == 0 || j == 0 || i >= j {
            return Err(Error::InvalidTransposition(i, j));
        }
        Ok(Self { i, j })
    }

    /// The mirrored encoding `(-j, -i)` of the same reflection.
    pub fn mirrored(self) -> Self {
        Self {
            i: -self.j,
            j: -self.i,
        }
    }

    /// Lexicographically minimal encoding among `(i, j)` and `(-j, -i)`.
    pub fn canonical(self) -> Self {
        let m = self.mirrored();
        if (m.i, m.j) < (self.i, self.j) {
            m
        } else {
            self
        }
    }

    /// The encoding with `j > 0` and `|i| ≤ j`, as listed by
    /// [`SignedPermutation::inversion_set`].
    pub fn inversion_form(self) -> Self {
        if self.j > 0 && self.i.abs() <= self.j {
            self
        } else {
            self.mirrored()
        }
    }

    pub fn to_permutation(self) -> SignedPermutation {
        let n = self.i.abs().max(self.j.abs());
        let window = (1..=n)
            .map(|k| {
                if k == self.i {
                    self.j
                } else if k == self.j {
                    self.i
                } else if k == -self.i {
                    -self.j
                } else if k == -self.j {
                    -self.i
                } else {
                    k
                }
            })
            .collect();
        SignedPermutation::from_window_unchecked(window)
    }

    /// Recognizes a signed permutation that is a single reflection.
    pub fn from_permutation(w: &SignedPermutation) -> Option<Self> {
        let moved: Vec<i32> = (1..=w.rank() as i32).filter(|&k| w.value(k) != k).collect();
        let t = match moved.as_slice() {
            [k] if w.value(*k) == -k => Self { i: -k, j: *k },
            [p, q] => {
                let wp = w.value(*p);
                if wp == *q {
                    Self { i: *p, j: *q }
                } else if wp == -q {
                    Self { i: -q, j: *p }
                } else {
                    return None;
                }
            }
            _ => return None,
        };
        (t.to_permutation() == *w).then_some(t)
    }
}

impl PartialEq for Transposition {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.canonical(), other.canonical());
        (a.i, a.j) == (b.i, b.j)
    }
}

impl Eq for Transposition {}

impl Hash for Transposition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let c = self.canonical();
        (c.i, c.j).hash(state);
    }
}

impl PartialOrd for Transposition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Transposition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let (a, b) = (self.canonical(), other.canonical());
        (a.i, a.j).cmp(&(b.i, b.j))
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t({},{})", self.i, self.j)
    }
}

impl fmt::Debug for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_length(w: &SignedPermutation) -> usize {
        let n = w.rank() as i32;
        let mut c = 0;
        for j in 1..=n {
            for i in -n..=n {
                if i != 0 && i.abs() <= j && w.value(i) > w.value(j) {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn lengths() {
        assert_eq!(SignedPermutation::identity().length(), 0);
        let w0 = SignedPermutation::new(vec![-1, -2]).unwrap();
        assert_eq!(w0.length(), 4);
        let w = SignedPermutation::new(vec![3, 4, -2, -1]).unwrap();
        assert_eq!(w.length(), 7);
        for w in SignedPermutation::all(4) {
            assert_eq!(w.length(), brute_length(&w));
            assert_eq!(w.inversion_set().len(), w.length());
        }
    }

    #[test]
    fn inversion_set_small() {
        assert!(SignedPermutation::identity().inversion_set().is_empty());
        let w = SignedPermutation::new(vec![-1]).unwrap();
        let inv = w.inversion_set();
        assert_eq!(inv.len(), 1);
        assert_eq!((inv[0].i, inv[0].j), (-1, 1));
    }

    #[test]
    fn trimming_and_validation() {
        let w = SignedPermutation::new(vec![2, 1, 3, 4]).unwrap();
        assert_eq!(w.window(), &[2, 1]);
        assert_eq!(SignedPermutation::new(vec![1, 2, 3]).unwrap(), SignedPermutation::identity());
        assert!(SignedPermutation::new(vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![3, 1]).is_err());
        assert!(SignedPermutation::new(vec![0]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let w: SignedPermutation = "[3,4,-2,-1]".parse().unwrap();
        assert_eq!(w.to_string(), "[3,4,-2,-1]");
        assert!("[1,x]".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn long_form_of_example() {
        let w = SignedPermutation::new(vec![-3, 4, 2, -1]).unwrap();
        assert_eq!(w.long_form(4), vec![1, -2, -4, 3, -3, 4, 2, -1]);
    }

    #[test]
    fn transposition_encodings() {
        let t = Transposition::new(-2, 1).unwrap();
        assert_eq!(t, Transposition::new(-1, 2).unwrap());
        assert_eq!((t.canonical().i, t.canonical().j), (-2, 1));
        let f = t.inversion_form();
        assert_eq!((f.i, f.j), (-1, 2));
        assert!(Transposition::new(1, 1).is_err());
        assert!(Transposition::new(0, 1).is_err());
        for (i, j) in [(-3, 2), (1, 3), (-2, 2), (-3, -1)] {
            let t = Transposition::new(i, j).unwrap();
            let p = t.to_permutation();
            assert_eq!(p.compose(&p), SignedPermutation::identity());
            assert_eq!(Transposition::from_permutation(&p), Some(t));
        }
    }

    #[test]
    fn inverse_and_compose() {
        for w in SignedPermutation::all(3) {
            assert_eq!(w.compose(&w.inverse()), SignedPermutation::identity());
            assert_eq!(w.inverse().length(), w.length());
        }
    }
}
