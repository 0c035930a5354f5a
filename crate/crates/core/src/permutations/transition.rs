use super::{SignedPermutation, Transposition};
use crate::tableaux::StrictPartition;
use crate::{Error, Result};

/// The data driving one step of the transition equation for `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionData {
    pub r: i32,
    pub s: i32,
    /// `v = w t_{rs}`, one shorter than `w`.
    pub v: SignedPermutation,
    /// `T(w)`, sorted.
    pub targets: Vec<SignedPermutation>,
}

/// `(r, s)` is the lexicographically largest pair `0 < r < s` with
/// `w(r) > w(s)`; `T(w)` collects every `v t_{ir}` with `i < r`, `i ≠ 0`,
/// of the same length as `w`.
pub fn transition_data(w: &SignedPermutation) -> Result<TransitionData> {
    let n = w.rank() as i32;
    let (r, s) = (1..=n)
        .rev()
        .find_map(|r| {
            (r + 1..=n)
                .rev()
                .find(|&s| w.value(r) > w.value(s))
                .map(|s| (r, s))
        })
        .ok_or_else(|| Error::Increasing(w.to_string()))?;
    let v = w.mul_transposition(Transposition { i: r, j: s });
    let len = w.length();
    debug_assert_eq!(v.length() + 1, len);
    // Beyond -(n+1) the reflection moves a fixed point past every value of v
    // and the length jumps by more than one.
    let mut targets: Vec<SignedPermutation> = (-(n + 1)..r)
        .filter(|&i| i != 0)
        .map(|i| v.mul_transposition(Transposition { i, j: r }))
        .filter(|u| u.length() == len)
        .collect();
    targets.sort();
    targets.dedup();
    Ok(TransitionData { r, s, v, targets })
}

/// `w(μ)`: the negated parts of `μ` followed by the rest of `[μ_1]` in
/// increasing order.
pub fn increasing_of_partition(mu: &StrictPartition) -> SignedPermutation {
    let parts = mu.parts();
    let Some(&top) = parts.first() else {
        return SignedPermutation::identity();
    };
    let mut window: Vec<i32> = parts.iter().map(|&p| -(p as i32)).collect();
    window.extend((1..=top as i32).filter(|k| !parts.contains(&(*k as usize))));
    SignedPermutation::from_window_unchecked(window)
}
