//! Elementary Coxeter-Knuth moves in types A and B.

use super::word::peak_set;
use super::Word;
use crate::{Error, Result};

fn has_peak_at(q: &[u32; 4], pos: usize) -> bool {
    q[pos - 2] < q[pos - 1] && q[pos - 1] > q[pos]
}

fn reverse4(q: [u32; 4]) -> [u32; 4] {
    [q[3], q[2], q[1], q[0]]
}

/// β on a window whose peak sits at position 2.
fn beta_peak_two(q: [u32; 4]) -> Option<[u32; 4]> {
    if q == [0, 1, 0, 1] {
        return Some([1, 0, 1, 0]);
    }
    let [p, x, y, z] = q;
    // a b+1 b b+1 -> a b b+1 b
    if y >= 1 && x == y + 1 && z == x && p < y {
        return Some([p, y, x, y]);
    }
    // b b+1 b a -> b+1 b b+1 a
    if x == p + 1 && y == p && z < p {
        return Some([x, p, x, z]);
    }
    (0..3).find_map(|j| {
        if q[j].abs_diff(q[j + 1]) <= 1 {
            return None;
        }
        let mut r = q;
        r.swap(j, j + 1);
        has_peak_at(&r, 3).then_some(r)
    })
}

/// The type B elementary Coxeter-Knuth involution β on a reduced word of
/// length 4. Windows without a peak are fixed.
pub fn ck_move_b(q: &Word) -> Result<Word> {
    let letters: [u32; 4] = q
        .letters()
        .try_into()
        .map_err(|_| Error::Precondition(format!("β needs a word of length 4, got {q}")))?;
    q.require_reduced()?;
    let moved = if has_peak_at(&letters, 2) {
        beta_peak_two(letters)
    } else if has_peak_at(&letters, 3) {
        beta_peak_two(reverse4(letters)).map(reverse4)
    } else {
        Some(letters)
    };
    moved
        .map(|m| Word::new(m.to_vec()))
        .ok_or_else(|| Error::Invariant(format!("no Coxeter-Knuth rule applies to {q}")))
}

/// `β_i`: apply β to positions `i..=i+3` (1-based) of a reduced word.
pub fn beta_i(a: &Word, i: usize) -> Result<Word> {
    if a.len() < 4 || i == 0 || i > a.len() - 3 {
        return Err(Error::OutOfRange {
            index: i,
            max: a.len().saturating_sub(3),
        });
    }
    let window = ck_move_b(&a.slice(i, i + 3))?;
    let mut letters = a.letters().to_vec();
    letters[i - 1..i + 3].copy_from_slice(window.letters());
    Ok(Word::new(letters))
}

/// Type A elementary Coxeter-Knuth relation at positions `i, i+1, i+2`.
///
/// `i k j ↔ k i j` and `j i k ↔ j k i` for `i < j < k`, plus the braid
/// `x (x+1) x ↔ (x+1) x (x+1)`. Windows with no applicable relation are
/// returned unchanged.
pub fn ck_move_a(a: &Word, i: usize) -> Result<Word> {
    if a.letters().contains(&0) {
        return Err(Error::ZeroLetter(a.to_string()));
    }
    if a.len() < 3 || i == 0 || i > a.len() - 2 {
        return Err(Error::OutOfRange {
            index: i,
            max: a.len().saturating_sub(2),
        });
    }
    a.require_reduced()?;
    let mut letters = a.letters().to_vec();
    let (x, y, z) = (letters[i - 1], letters[i], letters[i + 1]);
    let between = |v: u32, lo: u32, hi: u32| lo.min(hi) < v && v < lo.max(hi);
    if x == z && x.abs_diff(y) == 1 {
        letters[i - 1] = y;
        letters[i] = x;
        letters[i + 1] = y;
    } else if between(z, x, y) {
        letters.swap(i - 1, i);
    } else if between(x, y, z) {
        letters.swap(i, i + 1);
    }
    Ok(Word::new(letters))
}

/// Whether β moves the window at `i`, equivalently whether `i+1` or `i+2`
/// is a peak of `a`.
pub fn beta_acts(a: &Word, i: usize) -> bool {
    let peaks = peak_set(a.letters());
    peaks.contains(&(i + 1)) || peaks.contains(&(i + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::reduced_words_of_length;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn beta_examples() {
        assert_eq!(ck_move_b(&word("0101")).unwrap(), word("1010"));
        assert_eq!(ck_move_b(&word("3431")).unwrap(), word("4341"));
        assert_eq!(ck_move_b(&word("1234")).unwrap(), word("1234"));
        assert_eq!(beta_i(&word("1343"), 1).unwrap(), word("1434"));
        assert_eq!(beta_i(&word("0101"), 1).unwrap(), word("1010"));
        // a b+1 b b+1 with a = 1, b = 3
        assert_eq!(ck_move_b(&word("1434")).unwrap(), word("1343"));
    }

    #[test]
    fn beta_errors() {
        assert!(ck_move_b(&word("0011")).is_err());
        assert!(ck_move_b(&word("010")).is_err());
        assert!(beta_i(&word("0101"), 2).is_err());
        assert!(beta_i(&word("0101"), 0).is_err());
    }

    #[test]
    fn beta_is_an_involution_on_rank_five() {
        for q in reduced_words_of_length(5, 4) {
            let b = ck_move_b(&q).unwrap();
            assert_eq!(ck_move_b(&b).unwrap(), q, "{q}");
            assert_eq!(b.evaluate(), q.evaluate());
            assert_eq!(b == q, q.peaks().is_empty(), "{q}");
        }
    }

    #[test]
    fn type_a_moves() {
        assert_eq!(ck_move_a(&word("121"), 1).unwrap(), word("212"));
        assert_eq!(ck_move_a(&word("135"), 1).unwrap(), word("135"));
        assert_eq!(ck_move_a(&word("3143"), 1).unwrap(), word("3413"));
        assert_eq!(ck_move_a(&word("3143"), 2).unwrap(), word("3413"));
        assert_eq!(ck_move_a(&word("1343"), 2).unwrap(), word("1434"));
        assert!(ck_move_a(&word("101"), 1).is_err());
        assert!(ck_move_a(&word("13"), 1).is_err());
    }
}
