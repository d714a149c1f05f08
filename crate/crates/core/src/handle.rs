//! Handle reduction on signed braid words.
//!
//! This is the reference decision procedure for the s₁-sign of a braid. It
//! works on words only and shares no code with the Garside normal forms, so
//! that the two can be checked against each other.

use crate::error::{Error, Result};
use crate::order::Sign;

/// Hard ceiling on reduction steps per query.
pub const STEP_LIMIT: usize = 1_000_000;

/// A letter `s_index^exp` with a 1-based index and `exp = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub index: u16,
    pub exp: i8,
}

impl Letter {
    pub fn new(index: u16, exp: i8) -> Self {
        Letter { index, exp }
    }
}

/// The s₁-sign of the braid represented by `word`.
///
/// Positive if the braid has an expression with `s₁` but no `s₁⁻¹`,
/// negative in the mirror case, `InG1` if it lies in `⟨s₂, …⟩`.
pub fn handle_reduction_sign(word: &[Letter]) -> Result<Sign> {
    sign_with_limit(word, STEP_LIMIT)
}

pub fn sign_with_limit(word: &[Letter], limit: usize) -> Result<Sign> {
    let mut w: Vec<Letter> = word.to_vec();
    let mut steps = 0;
    loop {
        if let Some(sign) = main_sign(&w) {
            return Ok(sign);
        }
        if steps == limit {
            return Err(Error::StepLimit(limit));
        }
        let (start, end) = first_handle(&w).expect("a word with both s1 signs contains a handle");
        reduce(&mut w, start, end);
        steps += 1;
    }
}

/// The sign if the `s₁` letters of `w` all carry the same exponent.
fn main_sign(w: &[Letter]) -> Option<Sign> {
    let mut pos = false;
    let mut neg = false;
    for l in w.iter().filter(|l| l.index == 1) {
        if l.exp > 0 {
            pos = true;
        } else {
            neg = true;
        }
    }
    match (pos, neg) {
        (false, false) => Some(Sign::InG1),
        (true, false) => Some(Sign::Positive),
        (false, true) => Some(Sign::Negative),
        (true, true) => None,
    }
}

/// The handle `s_i^e v s_i^{−e}` that ends first, with `v` using only
/// generators above `i`. Ending first makes it a permitted handle: any handle
/// inside `v` would end earlier.
fn first_handle(w: &[Letter]) -> Option<(usize, usize)> {
    for j in 1..w.len() {
        let close = w[j];
        for k in (0..j).rev() {
            let l = w[k];
            if l.index < close.index {
                break;
            }
            if l.index == close.index {
                if l.exp == -close.exp {
                    return Some((k, j));
                }
                break;
            }
        }
    }
    None
}

/// `s_i^e v s_i^{−e} ↦ v'` where every `s_{i+1}^d` of `v` becomes
/// `s_{i+1}^{−e} s_i^d s_{i+1}^e`.
fn reduce(w: &mut Vec<Letter>, start: usize, end: usize) {
    let i = w[start].index;
    let e = w[start].exp;
    let mut out = Vec::with_capacity(w.len() + 2 * (end - start));
    out.extend_from_slice(&w[..start]);
    for &l in &w[start + 1..end] {
        if l.index == i + 1 {
            out.push(Letter::new(i + 1, -e));
            out.push(Letter::new(i, l.exp));
            out.push(Letter::new(i + 1, e));
        } else {
            out.push(l);
        }
    }
    out.extend_from_slice(&w[end + 1..]);
    *w = out;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(pairs: &[(u16, i8)]) -> Vec<Letter> {
        pairs.iter().map(|&(i, e)| Letter::new(i, e)).collect()
    }

    #[test]
    fn already_reduced_words() {
        assert_eq!(handle_reduction_sign(&word(&[(1, 1), (2, -1)])).unwrap(), Sign::Positive);
        assert_eq!(
            handle_reduction_sign(&word(&[(2, 1), (1, -1), (2, -1)])).unwrap(),
            Sign::Negative
        );
        assert_eq!(handle_reduction_sign(&word(&[(2, 1), (2, 1), (2, 1)])).unwrap(), Sign::InG1);
        assert_eq!(handle_reduction_sign(&[]).unwrap(), Sign::InG1);
    }

    #[test]
    fn free_cancellation() {
        assert_eq!(handle_reduction_sign(&word(&[(1, 1), (1, -1)])).unwrap(), Sign::InG1);
        assert_eq!(
            handle_reduction_sign(&word(&[(1, 1), (2, 1), (1, -1)])).unwrap(),
            Sign::Positive,
        );
    }

    #[test]
    fn braid_relation_is_detected() {
        // s1⁻¹ (s2 s1 s2) s1⁻¹ = s2
        let w = word(&[(1, -1), (2, 1), (1, 1), (2, 1), (1, -1)]);
        assert_eq!(handle_reduction_sign(&w).unwrap(), Sign::InG1);
        let w = word(&[(1, -1), (2, 1), (1, 1), (1, 1)]);
        assert_eq!(handle_reduction_sign(&w).unwrap(), Sign::Positive);
    }

    #[test]
    fn step_limit_trips() {
        let w = word(&[(1, 1), (2, 1), (1, -1), (2, -1), (1, 1), (2, 1), (1, -1)]);
        assert_eq!(sign_with_limit(&w, 1), Err(Error::StepLimit(1)));
    }
}
