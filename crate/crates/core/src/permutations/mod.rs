//! Signed permutations, words in the generators of `B_∞`, and the moves
//! between reduced words.

mod ck;
mod signed;
mod transition;
mod word;

pub use ck::{beta_acts, beta_i, ck_move_a, ck_move_b};
pub use signed::{SignedPermutation, Transposition};
pub use transition::{increasing_of_partition, transition_data, TransitionData};
pub use word::{
    count_reduced_words, is_admissible_peak_set, peak_set, reduced_words,
    reduced_words_of_length, Word,
};
