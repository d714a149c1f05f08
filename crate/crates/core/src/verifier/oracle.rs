//! Oracles that work on positive words and the defining relations only.

use std::collections::{BTreeSet, VecDeque};

use super::{enumerate_monoid, CheckReport};
use crate::error::{Error, Result};
use crate::garside::{Atom, Forms, Garside, GarsideModel, Parabolic};

/// All positive words equal to `word` in the monoid, by closing under the
/// defining relations in both directions.
pub fn word_class<M: GarsideModel>(model: &M, word: &[Atom]) -> BTreeSet<Vec<Atom>> {
    let mut rules = Vec::new();
    for (l, r) in model.relations() {
        rules.push((l.clone(), r.clone()));
        rules.push((r, l));
    }
    let mut seen = BTreeSet::new();
    seen.insert(word.to_vec());
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for (l, r) in &rules {
            if l.len() > w.len() {
                continue;
            }
            for i in 0..=w.len() - l.len() {
                if w[i..i + l.len()] == l[..] {
                    let mut v = w[..i].to_vec();
                    v.extend_from_slice(r);
                    v.extend_from_slice(&w[i + l.len()..]);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
    }
    seen
}

/// The N-tail of the element of `word`, found by listing every right divisor
/// in N and taking the unique maximum. Returns a word for it.
pub fn brute_force_tail<M: GarsideModel>(model: &M, word: &[Atom], n: &[Atom]) -> Result<Vec<Atom>> {
    let class = word_class(model, word);
    // Every right divisor shows up as a suffix of some word of the class.
    let mut candidates: BTreeSet<Vec<Atom>> = BTreeSet::new();
    for w in &class {
        for i in 0..=w.len() {
            let suffix = &w[i..];
            if suffix.iter().all(|a| n.contains(a)) {
                candidates.insert(suffix.to_vec());
            }
        }
    }
    // Group the candidate suffixes into elements.
    let mut elements: Vec<BTreeSet<Vec<Atom>>> = Vec::new();
    for c in candidates {
        if !elements.iter().any(|e| e.contains(&c)) {
            elements.push(word_class(model, &c));
        }
    }
    let divides = |small: &BTreeSet<Vec<Atom>>, big: &BTreeSet<Vec<Atom>>| {
        big.iter().any(|b| small.iter().any(|s| b.ends_with(s)))
    };
    let maxima: Vec<&BTreeSet<Vec<Atom>>> = elements
        .iter()
        .filter(|x| elements.iter().all(|y| divides(y, x)))
        .collect();
    match maxima.as_slice() {
        [one] => Ok(one.iter().next().cloned().unwrap_or_default()),
        _ => Err(Error::InvalidStructure(format!(
            "no unique maximal N-right divisor among {} candidates",
            elements.len()
        ))),
    }
}

/// `tail(a, N) = brute_force_tail(a, N)` on all monoid elements of length at
/// most `max_len`, for each of the given parabolics.
pub fn check_tail_oracle<M: GarsideModel>(model: &M, parabolics: &[Vec<Atom>], max_len: usize) -> CheckReport {
    let mut report = CheckReport::new("tail-oracle");
    let elements = enumerate_monoid(model, max_len);
    let ps: Vec<Parabolic<M::Simple>> = parabolics
        .iter()
        .map(|p| model.parabolic(p).expect("parabolic atoms"))
        .collect();
    for (a, w) in &elements {
        for (atoms, p) in parabolics.iter().zip(&ps) {
            let fast = model.tail(a, p);
            let slow = brute_force_tail(model, w, atoms).and_then(|t| model.normalize(&t));
            report.check(matches!((&fast, &slow), (Ok(x), Ok(y)) if x == y), || {
                format!("a = {w:?}, N = {atoms:?}: tail {fast:?}, oracle {slow:?}")
            });
        }
    }
    report.set("elements", elements.len());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidModel;

    #[test]
    fn class_of_s1_s1_s2() {
        // s1 s2 s1 s1 = s2 s2 s1 s2 via s1s2s1 = s2s1s2 and back
        let m = BraidModel::new(2).unwrap();
        let w = [Atom(0), Atom(1), Atom(0), Atom(0)];
        let class = word_class(&m, &w);
        assert!(class.contains(&vec![Atom(1), Atom(0), Atom(1), Atom(0)]));
        assert!(class.contains(&vec![Atom(1), Atom(1), Atom(0), Atom(1)]));
    }

    #[test]
    fn brute_force_tail_examples() {
        let m = BraidModel::new(2).unwrap();
        let com = [Atom(1), Atom(1), Atom(0), Atom(1), Atom(1)];
        assert_eq!(brute_force_tail(&m, &com, &[Atom(1)]).unwrap(), vec![Atom(1), Atom(1)]);
        assert_eq!(brute_force_tail(&m, &[Atom(0)], &[Atom(1)]).unwrap(), vec![]);
        let theta = [Atom(0), Atom(1), Atom(1), Atom(0)];
        assert_eq!(brute_force_tail(&m, &theta, &[Atom(1)]).unwrap(), vec![]);
    }
}
