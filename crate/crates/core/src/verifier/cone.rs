use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{enumerate_group, random_signed_word, CheckReport, EnumerationBudget};
use crate::garside::{Element, Garside, GarsideModel};
use crate::order::{Comparison, DehornoyStructure, OrderChain, OrderedModel, Sign};

/// Exactly one of negative, positive, in `G₁` for every element given by a
/// signed word of length at most `max_len`.
pub fn check_trichotomy<M: GarsideModel>(s: &DehornoyStructure<M>, max_len: usize) -> CheckReport {
    let mut report = CheckReport::new("trichotomy");
    let elements = enumerate_group(s.model(), max_len);
    let results: Vec<(Result<Sign, String>, String)> = elements
        .par_iter()
        .map(|(a, w)| {
            let r = s.sign(a).map_err(|e| e.to_string());
            (r, format!("{w:?}"))
        })
        .collect();
    for (r, w) in results {
        match r {
            Ok(sign) => {
                report.instance();
                report.count(&sign.to_string());
            }
            Err(e) => {
                report.instance();
                report.fail(format!("{w}: {e}"));
            }
        }
    }
    report.set("elements", elements.len());
    report
}

fn random_element<M: GarsideModel>(model: &M, rng: &mut ChaCha8Rng, atoms: &[crate::garside::Atom], max_len: usize) -> Element<M::Simple> {
    let w = random_signed_word(rng, atoms, max_len);
    model.from_signed_word(&w).expect("model atoms")
}

/// Trichotomy (exhaustive), then on random samples: `PP ⊂ P`,
/// `G₁ P G₁ ⊂ P`, and the order laws of the chain.
pub fn check_cone_axioms<M: OrderedModel>(chain: &OrderChain<M>, budget: &EnumerationBudget) -> CheckReport {
    let s = &chain.levels()[0];
    let model = s.model();
    let mut report = CheckReport::new("cone-axioms").with_seed(budget.seed);
    report.absorb(check_trichotomy(s, budget.max_len));

    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let atoms = model.atoms();
    let g1_atoms = s.g1().atoms().to_vec();
    let mut closure = CheckReport::new("closure");
    let mut absorption = CheckReport::new("absorption");
    let mut positives = Vec::new();
    let mut attempts = 0;
    while positives.len() < budget.samples && attempts < 50 * budget.samples.max(1) {
        attempts += 1;
        let a = random_element(model, &mut rng, &atoms, budget.max_len.max(1));
        if s.sign(&a).ok() == Some(Sign::Positive) {
            positives.push(a);
        }
    }
    for i in 0..positives.len() {
        let a = &positives[i];
        let b = &positives[(i * 7 + 3) % positives.len()];
        let ab = model.multiply(a, b);
        let sg = s.sign(&ab);
        closure.check(sg == Ok(Sign::Positive), || format!("{a:?} · {b:?}: {sg:?}"));

        let g = random_element(model, &mut rng, &g1_atoms, budget.max_len.max(1));
        let h = random_element(model, &mut rng, &g1_atoms, budget.max_len.max(1));
        let gah = model.multiply(&model.multiply(&g, a), &h);
        let sg = s.sign(&gah);
        absorption.check(sg == Ok(Sign::Positive), || format!("{g:?} · {a:?} · {h:?}: {sg:?}"));
    }
    report.absorb(closure);
    report.absorb(absorption);
    report.absorb(check_order_laws(chain, budget.samples, budget.max_len, budget.seed));
    report
}

/// Antisymmetry, transitivity and left invariance of `compare` on random
/// triples.
pub fn check_order_laws<M: OrderedModel>(chain: &OrderChain<M>, samples: usize, max_len: usize, seed: u64) -> CheckReport {
    let model = chain.top();
    let atoms = model.atoms();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[Element<M::Simple>; 4]> = (0..samples)
        .map(|_| {
            [
                random_element(model, &mut rng, &atoms, max_len),
                random_element(model, &mut rng, &atoms, max_len),
                random_element(model, &mut rng, &atoms, max_len),
                random_element(model, &mut rng, &atoms, max_len),
            ]
        })
        .collect();
    let rows: Vec<Vec<String>> = triples
        .par_iter()
        .map(|[a, b, c, g]| {
            let mut fails = Vec::new();
            let cmp = |x: &Element<M::Simple>, y: &Element<M::Simple>| chain.compare(x, y).map_err(|e| e.to_string());
            let run = || -> Result<Vec<String>, String> {
                let mut f = Vec::new();
                let ab = cmp(a, b)?;
                let ba = cmp(b, a)?;
                if ab != ba.reverse() || (ab == Comparison::Equal) != (a == b) {
                    f.push(format!("antisymmetry: {a:?} vs {b:?}: {ab} / {ba}"));
                }
                let bc = cmp(b, c)?;
                let ac = cmp(a, c)?;
                let transitive = match (ab, bc) {
                    (Comparison::Less, Comparison::Less) => ac == Comparison::Less,
                    (Comparison::Greater, Comparison::Greater) => ac == Comparison::Greater,
                    (Comparison::Equal, x) | (x, Comparison::Equal) => ac == x,
                    _ => true,
                };
                if !transitive {
                    f.push(format!("transitivity: {a:?}, {b:?}, {c:?}: {ab}, {bc}, {ac}"));
                }
                let gab = cmp(&model.multiply(g, a), &model.multiply(g, b))?;
                if gab != ab {
                    f.push(format!("left invariance: γ = {g:?}, {a:?} vs {b:?}: {ab} / {gab}"));
                }
                Ok(f)
            };
            match run() {
                Ok(f) => fails.extend(f),
                Err(e) => fails.push(e),
            }
            fails
        })
        .collect();
    let mut report = CheckReport::new("order-laws").with_seed(seed);
    for fails in rows {
        report.instance();
        for f in fails {
            report.fail(f);
        }
    }
    report.set("epsilon", chain.epsilon().to_vec());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidModel;
    use crate::dihedral::DihedralModel;

    #[test]
    fn trichotomy_small() {
        let s = BraidModel::new(2).unwrap().dehornoy_structure().unwrap();
        let r = check_trichotomy(&s, 3);
        assert!(r.pass, "{r}");
    }

    #[test]
    fn cone_axioms_small() {
        let d = DihedralModel::new(5).unwrap();
        let chain = OrderChain::standard(&d, &[1, -1]).unwrap();
        let budget = EnumerationBudget {
            max_len: 4,
            max_power: 2,
            samples: 40,
            seed: 7,
        };
        let r = check_cone_axioms(&chain, &budget);
        assert!(r.pass, "{r}");
    }
}
