//! Signs from the order layer against handle reduction, which never sees a
//! normal form.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{enumerate_unmovable, random_signed_word, CheckReport, EnumerationBudget};
use crate::braid::BraidModel;
use crate::context::GroupContext;
use crate::dihedral::DihedralModel;
use crate::garside::{Atom, Garside, GarsideModel, SignedLetter};
use crate::handle::{handle_reduction_sign, Letter};
use crate::order::OrderedModel;

fn braid_letters(word: &[SignedLetter]) -> Vec<Letter> {
    word.iter().map(|&(a, e)| Letter::new(a.0 as u16 + 1, e)).collect()
}

/// The order-layer sign of random braids equals their s₁-sign.
pub fn check_handle_signs(model: &BraidModel, samples: usize, max_len: usize, seed: u64) -> CheckReport {
    let s = model.dehornoy_structure().expect("braid structure");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let atoms = model.atoms();
    let words: Vec<Vec<SignedLetter>> = (0..samples).map(|_| random_signed_word(&mut rng, &atoms, max_len)).collect();
    let rows: Vec<_> = words
        .par_iter()
        .map(|w| {
            let alpha = model.from_signed_word(w).expect("braid atoms");
            (w, s.sign(&alpha), handle_reduction_sign(&braid_letters(w)))
        })
        .collect();
    let mut report = CheckReport::new("handle-signs").with_seed(seed);
    for (w, ours, oracle) in rows {
        if let Ok(sg) = &ours {
            report.count(&sg.to_string());
        }
        report.check(ours.is_ok() && ours == oracle, || format!("{w:?}: order {ours:?}, handle {oracle:?}"));
    }
    report
}

/// The breadth criterion for `Ω^{−k} a` equals the s₁-sign, over all
/// unmovable `a` of length at most `max_len` and `k = 1..=max_k`.
pub fn check_breadth_criterion(model: &BraidModel, max_len: usize, max_k: usize) -> CheckReport {
    let elements = enumerate_unmovable(model, max_len);
    let omega_inv: Vec<SignedLetter> = model
        .simple_word(model.omega())
        .into_iter()
        .rev()
        .map(|a| (a, -1))
        .collect();
    let cases: Vec<(usize, i64)> = (0..elements.len())
        .flat_map(|i| (1..=max_k as i64).map(move |k| (i, k)))
        .collect();
    let rows: Vec<_> = cases
        .par_iter()
        .map(|&(i, k)| {
            let (a, w) = &elements[i];
            let mut word = Vec::new();
            for _ in 0..k {
                word.extend_from_slice(&omega_inv);
            }
            word.extend(w.iter().map(|&x| (x, 1i8)));
            let ours = model.breadth_sign(a, k);
            let oracle = handle_reduction_sign(&braid_letters(&word));
            (w, k, ours, oracle)
        })
        .collect();
    let mut report = CheckReport::new("breadth-criterion");
    for (w, k, ours, oracle) in rows {
        if let Ok(sg) = &ours {
            report.count(&sg.to_string());
        }
        report.check(ours.is_ok() && ours == oracle, || {
            format!("a = {w:?}, k = {k}: breadth {ours:?}, handle {oracle:?}")
        });
    }
    report.set("elements", elements.len());
    report
}

/// The order-layer sign of random `α ∈ I₂(m)` equals the r₁-sign of `ι(α)`,
/// where `ι(α)` is the image word of the random word itself.
pub fn check_crisp_signs(model: &DihedralModel, samples: usize, max_len: usize, seed: u64) -> CheckReport {
    let s = model.dehornoy_structure().expect("dihedral structure");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let atoms = [Atom(0), Atom(1)];
    let words: Vec<Vec<SignedLetter>> = (0..samples).map(|_| random_signed_word(&mut rng, &atoms, max_len)).collect();
    let rows: Vec<_> = words
        .par_iter()
        .map(|w| {
            let alpha = model.from_signed_word(w).expect("dihedral atoms");
            let image = model.crisp_embed_word(w).expect("dihedral atoms");
            (w, s.sign(&alpha), handle_reduction_sign(&image))
        })
        .collect();
    let mut report = CheckReport::new("crisp-signs").with_seed(seed);
    for (w, ours, oracle) in rows {
        if let Ok(sg) = &ours {
            report.count(&sg.to_string());
        }
        report.check(ours.is_ok() && ours == oracle, || format!("{w:?}: order {ours:?}, ι handle {oracle:?}"));
    }
    report
}

/// Braids: random words against handle reduction, plus the breadth
/// criterion. Dihedral groups: random words against their crisp images.
pub fn cross_validate_signs(ctx: &GroupContext, budget: &EnumerationBudget) -> CheckReport {
    let mut report = CheckReport::new("cross").with_seed(budget.seed);
    match ctx {
        GroupContext::Braid(b) => {
            report.absorb(check_handle_signs(b, budget.samples, budget.max_len, budget.seed));
            report.absorb(check_breadth_criterion(b, budget.max_len, budget.max_power));
        }
        GroupContext::Dihedral(d) => {
            report.absorb(check_crisp_signs(d, budget.samples, budget.max_len, budget.seed));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cross_checks() {
        let b3 = BraidModel::new(2).unwrap();
        assert!(check_handle_signs(&b3, 100, 8, 1).pass);
        assert!(check_breadth_criterion(&b3, 4, 3).pass);
        let d5 = DihedralModel::new(5).unwrap();
        let r = check_crisp_signs(&d5, 100, 8, 2);
        assert!(r.pass, "{r}");
    }
}
