use std::collections::BTreeMap;

use proptest::prelude::*;

use garside::braid::BraidModel;
use garside::dihedral::DihedralModel;
use garside::garside::{Atom, Element, Forms, Garside, GarsideModel, SignedLetter};
use garside::order::{Comparison, OrderChain, OrderedModel, Sign};
use garside::verifier::{enumerate_monoid, word_class};

fn all_words(rank: usize, len: usize) -> Vec<Vec<Atom>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..rank {
                let mut v: Vec<Atom> = w.clone();
                v.push(Atom(a));
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Two words have the same normal form iff the defining relations connect
/// them.
fn normal_form_soundness<M: GarsideModel>(model: &M, len: usize) {
    let words = all_words(model.rank(), len);
    let mut by_form: BTreeMap<String, Vec<&Vec<Atom>>> = BTreeMap::new();
    for w in &words {
        let nf = model.normalize(w).unwrap();
        by_form.entry(format!("{nf:?}")).or_default().push(w);
    }
    for group in by_form.values() {
        let class = word_class(model, group[0]);
        let mut g: Vec<Vec<Atom>> = group.iter().map(|w| (*w).clone()).collect();
        g.sort();
        let c: Vec<Vec<Atom>> = class.into_iter().collect();
        assert_eq!(g, c, "class of {:?}", group[0]);
    }
}

#[test]
fn normal_forms_are_sound() {
    normal_form_soundness(&BraidModel::new(2).unwrap(), 8);
    normal_form_soundness(&BraidModel::new(3).unwrap(), 6);
    normal_form_soundness(&DihedralModel::new(4).unwrap(), 8);
    normal_form_soundness(&DihedralModel::new(5).unwrap(), 8);
}

fn lattice_laws<M: GarsideModel>(model: &M, len: usize) {
    let elems: Vec<Element<M::Simple>> = enumerate_monoid(model, len).into_iter().map(|(a, _)| a).collect();
    for a in &elems {
        for b in &elems {
            let g = model.right_gcd(a, b);
            let l = model.right_lcm(a, b);
            assert_eq!(g, model.right_gcd(b, a));
            assert_eq!(l, model.right_lcm(b, a));
            assert!(model.right_divides(&g, a) && model.right_divides(&g, b));
            assert!(model.right_divides(a, &l) && model.right_divides(b, &l));
            assert_eq!(model.right_gcd(a, &l), *a);
            assert_eq!(model.right_lcm(a, &g), *a);
            for c in &elems {
                if model.right_divides(c, a) && model.right_divides(c, b) {
                    assert!(model.right_divides(c, &g));
                }
                if model.right_divides(a, c) && model.right_divides(b, c) {
                    assert!(model.right_divides(&l, c));
                }
            }
            let lg = model.left_gcd(a, b);
            assert!(model.left_divides(&lg, a) && model.left_divides(&lg, b));
            let ll = model.left_lcm(a, b);
            assert!(model.left_divides(a, &ll) && model.left_divides(b, &ll));
            if g.is_identity() {
                let alpha = model.multiply(a, &model.inverse(b));
                let expected = model.canonical_length(a).unwrap() + model.canonical_length(b).unwrap();
                assert_eq!(model.group_length(&alpha), expected);
                assert_eq!(model.orthogonal_form(&alpha), (a.clone(), b.clone()));
            }
        }
    }
}

#[test]
fn lattice_laws_hold() {
    lattice_laws(&BraidModel::new(2).unwrap(), 4);
    lattice_laws(&DihedralModel::new(5).unwrap(), 4);
    lattice_laws(&DihedralModel::new(4).unwrap(), 4);
}

fn parabolic_convexity<M: GarsideModel>(model: &M, len: usize) {
    let elems: Vec<Element<M::Simple>> = enumerate_monoid(model, len).into_iter().map(|(a, _)| a).collect();
    for atom in model.atoms() {
        let h = model.parabolic(&[atom]).unwrap();
        for beta in elems.iter().filter(|b| model.in_parabolic_monoid(b, &h)) {
            for gamma in &elems {
                if model.right_divides(gamma, beta) {
                    assert!(model.in_parabolic_monoid(gamma, &h));
                }
            }
        }
    }
}

#[test]
fn parabolics_are_convex() {
    parabolic_convexity(&BraidModel::new(3).unwrap(), 4);
    parabolic_convexity(&DihedralModel::new(6).unwrap(), 6);
}

#[test]
fn alternating_forms_recompose() {
    let b = BraidModel::new(3).unwrap();
    let s = b.dehornoy_structure().unwrap();
    for (a, _) in enumerate_monoid(&b, 5) {
        let f = b.alternating_form(&a, s.h(), s.g1()).unwrap();
        assert_eq!(b.recompose(&f), a);
        assert_eq!(f.depth, f.breadth / 2);
    }
    let d = DihedralModel::new(7).unwrap();
    let s = d.dehornoy_structure().unwrap();
    for (a, _) in enumerate_monoid(&d, 9) {
        assert_eq!(d.recompose(&d.alternating_form(&a, s.h(), s.g1()).unwrap()), a);
    }
}

fn signed_word(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<SignedLetter>> {
    prop::collection::vec((0..rank, prop::bool::ANY), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(a, p)| (Atom(a), if p { 1 } else { -1 })).collect())
}

fn positive_word(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<Atom>> {
    prop::collection::vec((0..rank).prop_map(Atom), 0..=max_len)
}

fn group_axioms<M: GarsideModel>(m: &M, x: &[SignedLetter], y: &[SignedLetter], z: &[SignedLetter]) {
    let (a, b, c) = (m.from_signed_word(x).unwrap(), m.from_signed_word(y).unwrap(), m.from_signed_word(z).unwrap());
    assert_eq!(m.multiply(&m.multiply(&a, &b), &c), m.multiply(&a, &m.multiply(&b, &c)));
    assert!(m.multiply(&a, &m.inverse(&a)).is_identity());
    assert!(m.multiply(&m.inverse(&a), &a).is_identity());
    assert_eq!(m.inverse(&m.inverse(&a)), a);
    assert_eq!(m.from_delta_form(&m.delta_form(&a)), a);
    let form = m.delta_form(&a);
    assert!(m.is_unmovable(&form.unmovable));
    let (p, q) = m.orthogonal_form(&a);
    assert!(m.right_gcd(&p, &q).is_identity());
    assert_eq!(m.multiply(&p, &m.inverse(&q)), a);
    // The signed word read back gives the same element.
    assert_eq!(m.from_signed_word(&m.signed_word(&a)).unwrap(), a);
}

fn complement_laws<M: GarsideModel>(m: &M, w: &[Atom]) {
    let a = m.delta_form(&m.normalize(w).unwrap()).unmovable;
    let c = m.complement(&a).unwrap();
    let p = m.canonical_length(&a).unwrap();
    assert_eq!(m.multiply(&a, &c), m.delta_power(p));
    assert!(m.is_unmovable(&c));
    assert_eq!(m.canonical_length(&c).unwrap(), p);
    assert_eq!(m.complement(&c).unwrap(), a);
}

fn sign_laws<M: OrderedModel>(m: &M, w: &[SignedLetter], eps: &[i8]) {
    let s = m.dehornoy_structure().unwrap();
    let a = m.from_signed_word(w).unwrap();
    let sign = s.sign(&a).unwrap();
    let inv = s.sign(&m.inverse(&a)).unwrap();
    let flipped = match sign {
        Sign::Negative => Sign::Positive,
        Sign::Positive => Sign::Negative,
        Sign::InG1 => Sign::InG1,
    };
    assert_eq!(inv, flipped);
    let chain = OrderChain::standard(m, eps).unwrap();
    let c = chain.compare(&m.one(), &a).unwrap();
    assert_eq!(c == Comparison::Equal, a.is_identity());
    // Outside G₁ the top level decides: 1 < α iff α ∈ P^{ε₁}.
    let expected = match (sign, eps[0]) {
        (Sign::Positive, 1) | (Sign::Negative, -1) => Some(Comparison::Less),
        (Sign::Positive, _) | (Sign::Negative, _) => Some(Comparison::Greater),
        (Sign::InG1, _) => None,
    };
    if let Some(e) = expected {
        assert_eq!(c, e);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn braid_group_axioms(x in signed_word(3, 12), y in signed_word(3, 12), z in signed_word(3, 12)) {
        group_axioms(&BraidModel::new(3).unwrap(), &x, &y, &z);
    }

    #[test]
    fn dihedral_group_axioms(m in 4usize..9, x in signed_word(2, 14), y in signed_word(2, 14), z in signed_word(2, 14)) {
        group_axioms(&DihedralModel::new(m).unwrap(), &x, &y, &z);
    }

    #[test]
    fn complements_are_involutive(w in positive_word(3, 10), v in positive_word(2, 12), m in 4usize..9) {
        complement_laws(&BraidModel::new(3).unwrap(), &w);
        complement_laws(&DihedralModel::new(m).unwrap(), &v);
    }

    #[test]
    fn braid_sign_laws(w in signed_word(3, 12), eps in prop::collection::vec(prop::sample::select(vec![1i8, -1]), 3)) {
        sign_laws(&BraidModel::new(3).unwrap(), &w, &eps);
    }

    #[test]
    fn dihedral_sign_laws(m in 4usize..9, w in signed_word(2, 14), eps in prop::collection::vec(prop::sample::select(vec![1i8, -1]), 2)) {
        sign_laws(&DihedralModel::new(m).unwrap(), &w, &eps);
    }

    #[test]
    fn block_path_matches_generic_path(m in 4usize..10, x in signed_word(2, 16), y in signed_word(2, 16)) {
        let d = DihedralModel::new(m).unwrap();
        let (a, b) = (d.from_signed_word(&x).unwrap(), d.from_signed_word(&y).unwrap());
        let (p, q) = (d.block_from_signed(&x).unwrap(), d.block_from_signed(&y).unwrap());
        prop_assert_eq!(d.element_to_block(&a), p.clone());
        prop_assert_eq!(d.block_to_element(&p), a.clone());
        prop_assert_eq!(d.multiply_dihedral(&p, &q), d.element_to_block(&d.multiply(&a, &b)));
        prop_assert_eq!(d.inverse_dihedral(&p), d.element_to_block(&d.inverse(&a)));
        let (u, k) = d.dihedral_delta_form(&p);
        let f = d.delta_form(&a);
        prop_assert_eq!(k, f.power);
        prop_assert_eq!(d.block_to_element(&u), f.unmovable);
        // The letter swap is conjugation by Ω only when m is odd.
        if m % 2 == 1 {
            prop_assert_eq!(d.phi(&p), d.element_to_block(&d.conjugate_element_by_omega(&a)));
        }
    }

    #[test]
    fn braid_rev_is_an_anti_automorphism(x in positive_word(3, 10), y in positive_word(3, 10)) {
        let b = BraidModel::new(3).unwrap();
        let (a, c) = (b.normalize(&x).unwrap(), b.normalize(&y).unwrap());
        let lhs = b.rev(&b.multiply(&a, &c)).unwrap();
        let rhs = b.multiply(&b.rev(&c).unwrap(), &b.rev(&a).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(b.rev(&b.rev(&a).unwrap()).unwrap(), a);
    }
}
