use std::collections::HashSet;

use rand::Rng;

use crate::garside::{Atom, Element, Forms, Garside, GarsideModel, SignedLetter};

/// All monoid elements of word length at most `max_len`, each once, with
/// the first word found for it. Ordered by length, then discovery.
pub fn enumerate_monoid<M: GarsideModel>(model: &M, max_len: usize) -> Vec<(Element<M::Simple>, Vec<Atom>)> {
    grow_monoid(model, max_len, |_| true)
}

/// All Δ-unmovable elements of word length at most `max_len`.
///
/// Δ is central, so a Δ-divisible element only has Δ-divisible right
/// multiples and the search can prune there.
pub fn enumerate_unmovable<M: GarsideModel>(model: &M, max_len: usize) -> Vec<(Element<M::Simple>, Vec<Atom>)> {
    grow_monoid(model, max_len, |a| model.is_unmovable(a))
}

fn grow_monoid<M: GarsideModel>(
    model: &M,
    max_len: usize,
    keep: impl Fn(&Element<M::Simple>) -> bool,
) -> Vec<(Element<M::Simple>, Vec<Atom>)> {
    let atoms: Vec<(Atom, Element<M::Simple>)> = model
        .atoms()
        .into_iter()
        .map(|a| (a, model.atom_element(a).expect("model atom")))
        .collect();
    let mut seen = HashSet::new();
    seen.insert(model.one());
    let mut out = vec![(model.one(), Vec::new())];
    let mut frontier = 0..1;
    for _ in 0..max_len {
        let start = out.len();
        for i in frontier.clone() {
            for (a, x) in &atoms {
                let e = model.multiply(&out[i].0, x);
                if keep(&e) && seen.insert(e.clone()) {
                    let mut w = out[i].1.clone();
                    w.push(*a);
                    out.push((e, w));
                }
            }
        }
        frontier = start..out.len();
    }
    out
}

/// All group elements given by signed words of length at most `max_len`,
/// each once, with a shortest signed word.
pub fn enumerate_group<M: GarsideModel>(model: &M, max_len: usize) -> Vec<(Element<M::Simple>, Vec<SignedLetter>)> {
    let mut letters = Vec::new();
    for a in model.atoms() {
        let x = model.atom_element(a).expect("model atom");
        letters.push(((a, 1i8), x.clone()));
        letters.push(((a, -1i8), model.inverse(&x)));
    }
    let mut seen = HashSet::new();
    seen.insert(model.one());
    let mut out = vec![(model.one(), Vec::new())];
    let mut frontier = 0..1;
    for _ in 0..max_len {
        let start = out.len();
        for i in frontier.clone() {
            for (l, x) in &letters {
                let e = model.multiply(&out[i].0, x);
                if seen.insert(e.clone()) {
                    let mut w = out[i].1.clone();
                    w.push(*l);
                    out.push((e, w));
                }
            }
        }
        frontier = start..out.len();
    }
    out
}

/// A uniformly random signed word of length in `0..=max_len` over the
/// given atoms.
pub fn random_signed_word<R: Rng>(rng: &mut R, atoms: &[Atom], max_len: usize) -> Vec<SignedLetter> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let a = atoms[rng.gen_range(0..atoms.len())];
            (a, if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect()
}
