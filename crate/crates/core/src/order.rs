//! Dehornoy structures and the left orders they induce.
//!
//! For a pair of parabolics `(H, G₁)`, an element with Δ-form `a Δ^{−k}` is
//! negative when `k ≥ 1` and `dpt(a) < ζk + 1`, positive when its inverse is
//! negative. Everything else has to lie in `G₁`; this is checked at runtime,
//! not assumed. Iterating down a chain of such structures and finishing on an
//! infinite cyclic group gives a family of left orders indexed by ε-vectors.

use std::fmt;

use serde::Serialize;

use crate::braid::BraidModel;
use crate::dihedral::{DihedralModel, S, T};
use crate::error::{Error, Result};
use crate::garside::{Atom, Element, Forms, Garside, GarsideModel, Parabolic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Negative,
    Positive,
    InG1,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Positive => "positive",
            Sign::InG1 => "in_g1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    Less,
    Equal,
    Greater,
}

impl Comparison {
    pub fn reverse(self) -> Self {
        match self {
            Comparison::Less => Comparison::Greater,
            Comparison::Equal => Comparison::Equal,
            Comparison::Greater => Comparison::Less,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Less => "Less",
            Comparison::Equal => "Equal",
            Comparison::Greater => "Greater",
        })
    }
}

/// `a = θ^k · a0` with `k ≥ 1` and `a0 ∈ M₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaDecomposition<S> {
    pub k: u32,
    pub a0: Element<S>,
}

/// A validated pair `(H, G₁)` of parabolics with its constants.
#[derive(Clone, Debug)]
pub struct DehornoyStructure<M: GarsideModel> {
    model: M,
    h: Parabolic<M::Simple>,
    g1: Parabolic<M::Simple>,
    zeta: i64,
    theta: Element<M::Simple>,
}

impl<M: GarsideModel> DehornoyStructure<M> {
    /// Builds and validates the structure. Condition A is checked for
    /// `k = 1, 2`; the verifier checks further powers.
    pub fn new(model: M, h_atoms: &[Atom], g1_atoms: &[Atom], zeta: i64) -> Result<Self> {
        let invalid = |msg: &str| Err(Error::InvalidStructure(msg.to_string()));
        let h = model.parabolic(h_atoms)?;
        let g1 = model.parabolic(g1_atoms)?;
        let all = model.atoms();
        if h.atoms() == all.as_slice() {
            return invalid("H is the whole group");
        }
        if g1.atoms() == all.as_slice() {
            return invalid("G1 is the whole group");
        }
        if !all.iter().all(|a| h.contains_atom(*a) || g1.contains_atom(*a)) {
            return Err(Error::GenerationViolated);
        }
        if zeta < 1 {
            return invalid("zeta must be at least 1");
        }
        let delta = model.delta_power(1);
        let delta1 = g1.delta().clone();
        for &a in &all {
            let x = model.atom_element(a)?;
            if model.multiply(&delta, &x) != model.multiply(&x, &delta) {
                return invalid("Δ is not central");
            }
            if g1.contains_atom(a) && model.multiply(&delta1, &x) != model.multiply(&x, &delta1) {
                return invalid("Δ₁ is not central in G1");
            }
        }
        let theta = model.multiply(&delta, &model.inverse(&delta1));
        if !theta.is_positive() {
            return invalid("θ = ΔΔ₁⁻¹ is not in the monoid");
        }
        let s = DehornoyStructure {
            model,
            h,
            g1,
            zeta,
            theta,
        };
        for k in 1..=2 {
            let d = s.depth(&s.model.delta_power(k))?;
            if d as i64 != zeta * k + 1 {
                return Err(Error::InvalidStructure(format!(
                    "Condition A fails at k = {k}: dpt(Δ^k) = {d}, expected {}",
                    zeta * k + 1
                )));
            }
        }
        Ok(s)
    }

    pub fn model(&self) -> &M {
        &self.model
    }

    pub fn h(&self) -> &Parabolic<M::Simple> {
        &self.h
    }

    pub fn g1(&self) -> &Parabolic<M::Simple> {
        &self.g1
    }

    pub fn zeta(&self) -> i64 {
        self.zeta
    }

    pub fn theta(&self) -> &Element<M::Simple> {
        &self.theta
    }

    /// `Δ₁`, the Garside element of `G₁`.
    pub fn delta1(&self) -> &Element<M::Simple> {
        self.g1.delta()
    }

    /// `Λ`, the Garside element of `H`.
    pub fn lambda(&self) -> &Element<M::Simple> {
        self.h.delta()
    }

    pub fn depth(&self, a: &Element<M::Simple>) -> Result<usize> {
        Ok(self.model.alternating_form(a, &self.h, &self.g1)?.depth)
    }

    pub fn in_m1(&self, a: &Element<M::Simple>) -> bool {
        self.model.in_parabolic_monoid(a, &self.g1)
    }

    pub fn in_g1(&self, alpha: &Element<M::Simple>) -> bool {
        self.model.parabolic_member(alpha, &self.g1)
    }

    /// `Some((k, a0))` iff `a = θ^k a0` with `k ≥ 1` and `a0 ∈ M₁`.
    pub fn theta_decompose(&self, a: &Element<M::Simple>) -> Result<Option<ThetaDecomposition<M::Simple>>> {
        let (mut rest, a0) = self.model.split_tail(a, &self.g1)?;
        let mut k = 0;
        while !rest.is_identity() {
            match self.model.divide_right(&rest, &self.theta) {
                Some(r) => rest = r,
                None => return Ok(None),
            }
            k += 1;
        }
        Ok((k >= 1).then_some(ThetaDecomposition { k, a0 }))
    }

    /// `a ∈ Θ̄ = Θ ∪ M₁`.
    pub fn in_theta_bar(&self, a: &Element<M::Simple>) -> Result<bool> {
        Ok(self.in_m1(a) || self.theta_decompose(a)?.is_some())
    }

    pub fn is_negative(&self, alpha: &Element<M::Simple>) -> Result<bool> {
        let form = self.model.delta_form(alpha);
        let k = -form.power;
        if k < 1 {
            return Ok(false);
        }
        Ok((self.depth(&form.unmovable)? as i64) < self.zeta * k + 1)
    }

    /// The (H, G₁)-sign, with the trichotomy enforced.
    pub fn sign(&self, alpha: &Element<M::Simple>) -> Result<Sign> {
        let neg = self.is_negative(alpha)?;
        let pos = self.is_negative(&self.model.inverse(alpha))?;
        let in_g1 = self.in_g1(alpha);
        match (neg, pos, in_g1) {
            (true, false, false) => Ok(Sign::Negative),
            (false, true, false) => Ok(Sign::Positive),
            (false, false, true) => Ok(Sign::InG1),
            _ => Err(Error::TrichotomyViolation(format!(
                "{alpha:?}: negative={neg}, positive={pos}, in G1={in_g1}"
            ))),
        }
    }
}

/// An element of `G₁` re-expressed in the next level of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Projected<M: GarsideModel> {
    Level(M, Element<M::Simple>),
    /// The bottom infinite cyclic group, by exponent.
    Cyclic(i64),
}

/// Models carrying a standard Dehornoy structure whose `G₁` is again such a
/// model or infinite cyclic.
pub trait OrderedModel: GarsideModel + Sized {
    fn dehornoy_structure(&self) -> Result<DehornoyStructure<Self>>;

    /// The model `G₁` is isomorphic to, or `None` when it is infinite cyclic.
    fn g1_submodel(&self) -> Option<Self>;

    /// Re-expresses an element of `G₁` in the next level.
    fn project(&self, alpha: &Element<Self::Simple>) -> Result<Projected<Self>>;
}

fn project_by_orthogonal_form<M: GarsideModel>(
    model: &M,
    alpha: &Element<M::Simple>,
    g1: &Parabolic<M::Simple>,
) -> Result<(Vec<Atom>, Vec<Atom>)> {
    if !model.parabolic_member(alpha, g1) {
        return Err(Error::NotInParabolic);
    }
    let (a, b) = model.orthogonal_form(alpha);
    Ok((model.positive_word(&a)?, model.positive_word(&b)?))
}

impl OrderedModel for BraidModel {
    fn dehornoy_structure(&self) -> Result<DehornoyStructure<Self>> {
        let n = self.generators();
        if n < 2 {
            return Err(Error::InvalidParameter("braid structures need n ≥ 2".into()));
        }
        let h: Vec<Atom> = (0..n - 1).map(Atom).collect();
        let g1: Vec<Atom> = (1..n).map(Atom).collect();
        DehornoyStructure::new(self.clone(), &h, &g1, 1)
    }

    fn g1_submodel(&self) -> Option<Self> {
        let n = self.generators();
        (n >= 3).then(|| BraidModel::new(n - 1).expect("smaller braid context"))
    }

    fn project(&self, alpha: &Element<Self::Simple>) -> Result<Projected<Self>> {
        let g1: Vec<Atom> = (1..self.generators()).map(Atom).collect();
        let g1 = self.parabolic(&g1)?;
        let (a, b) = project_by_orthogonal_form(self, alpha, &g1)?;
        match self.g1_submodel() {
            None => Ok(Projected::Cyclic(a.len() as i64 - b.len() as i64)),
            Some(sub) => {
                let shift = |w: Vec<Atom>| -> Vec<Atom> { w.into_iter().map(|x| Atom(x.0 - 1)).collect() };
                let a = sub.normalize(&shift(a))?;
                let b = sub.normalize(&shift(b))?;
                let e = sub.multiply(&a, &sub.inverse(&b));
                Ok(Projected::Level(sub, e))
            }
        }
    }
}

impl OrderedModel for DihedralModel {
    fn dehornoy_structure(&self) -> Result<DehornoyStructure<Self>> {
        DehornoyStructure::new(self.clone(), &[S], &[T], self.zeta() as i64)
    }

    fn g1_submodel(&self) -> Option<Self> {
        None
    }

    fn project(&self, alpha: &Element<Self::Simple>) -> Result<Projected<Self>> {
        let g1 = self.parabolic(&[T])?;
        let (a, b) = project_by_orthogonal_form(self, alpha, &g1)?;
        Ok(Projected::Cyclic(a.len() as i64 - b.len() as i64))
    }
}

/// A chain of Dehornoy structures ending in an infinite cyclic group, with a
/// sign choice for each level.
#[derive(Clone, Debug)]
pub struct OrderChain<M: GarsideModel> {
    levels: Vec<DehornoyStructure<M>>,
    epsilon: Vec<i8>,
}

impl<M: OrderedModel> OrderChain<M> {
    /// Number of ε entries the standard chain of `model` takes.
    pub fn depth_of(model: &M) -> usize {
        let mut d = 1;
        let mut cur = model.g1_submodel();
        while let Some(m) = cur {
            d += 1;
            cur = m.g1_submodel();
        }
        d + 1
    }

    /// The standard chain `G ⊃ G₁ ⊃ ⋯` with the given ε-vector.
    pub fn standard(model: &M, epsilon: &[i8]) -> Result<Self> {
        let mut levels = vec![model.dehornoy_structure()?];
        let mut cur = model.g1_submodel();
        while let Some(m) = cur {
            levels.push(m.dehornoy_structure()?);
            cur = m.g1_submodel();
        }
        if epsilon.len() != levels.len() + 1 {
            return Err(Error::InvalidParameter(format!(
                "ε must have {} entries, got {}",
                levels.len() + 1,
                epsilon.len()
            )));
        }
        if epsilon.iter().any(|e| *e != 1 && *e != -1) {
            return Err(Error::InvalidParameter("ε entries must be ±1".into()));
        }
        Ok(OrderChain {
            levels,
            epsilon: epsilon.to_vec(),
        })
    }

    pub fn epsilon(&self) -> &[i8] {
        &self.epsilon
    }

    pub fn levels(&self) -> &[DehornoyStructure<M>] {
        &self.levels
    }

    pub fn top(&self) -> &M {
        self.levels[0].model()
    }

    /// Whether `γ` lies in the positive cone `P^ε`; `None` for the identity.
    pub fn cone_sign(&self, gamma: &Element<M::Simple>) -> Result<Option<bool>> {
        if gamma.is_identity() {
            return Ok(None);
        }
        let mut cur = gamma.clone();
        for (i, level) in self.levels.iter().enumerate() {
            let eps = self.epsilon[i];
            match level.sign(&cur)? {
                Sign::Positive => return Ok(Some(eps > 0)),
                Sign::Negative => return Ok(Some(eps < 0)),
                Sign::InG1 => match level.model().project(&cur)? {
                    Projected::Level(_, e) => cur = e,
                    Projected::Cyclic(x) => {
                        debug_assert_ne!(x, 0);
                        let eps = self.epsilon[i + 1];
                        return Ok(Some((x > 0) == (eps > 0)));
                    }
                },
            }
        }
        unreachable!("the last level of a chain projects to the cyclic group")
    }

    /// `α < β` iff `α⁻¹β ∈ P^ε`.
    pub fn compare(&self, alpha: &Element<M::Simple>, beta: &Element<M::Simple>) -> Result<Comparison> {
        let m = self.top();
        let gamma = m.multiply(&m.inverse(alpha), beta);
        Ok(match self.cone_sign(&gamma)? {
            None => Comparison::Equal,
            Some(true) => Comparison::Less,
            Some(false) => Comparison::Greater,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_sign_examples() {
        let m = BraidModel::new(2).unwrap();
        let s = m.dehornoy_structure().unwrap();
        assert_eq!(s.sign(&m.delta_power(-1)).unwrap(), Sign::Negative);
        let s1inv = m.inverse(&m.word(&[1]).unwrap());
        assert_eq!(s.sign(&s1inv).unwrap(), Sign::Negative);
        assert_eq!(s.sign(&m.word(&[2, 2]).unwrap()).unwrap(), Sign::InG1);
        assert_eq!(s.sign(&m.word(&[1]).unwrap()).unwrap(), Sign::Positive);
    }

    #[test]
    fn s1_inverse_delta_form() {
        let m = BraidModel::new(2).unwrap();
        let s1inv = m.inverse(&m.word(&[1]).unwrap());
        let form = m.delta_form(&s1inv);
        assert_eq!(form.power, -1);
        assert_eq!(form.unmovable, m.word(&[2, 2, 1, 2, 2]).unwrap());
        let s = m.dehornoy_structure().unwrap();
        assert_eq!(s.depth(&form.unmovable).unwrap(), 1);
    }

    #[test]
    fn dihedral_sign_examples() {
        for m in 4..=7 {
            let d = DihedralModel::new(m).unwrap();
            let s = d.dehornoy_structure().unwrap();
            assert_eq!(s.sign(&d.letters("t").unwrap()).unwrap(), Sign::InG1);
            assert_eq!(s.sign(&d.delta_power(-1)).unwrap(), Sign::Negative);
        }
    }

    #[test]
    fn membership_examples() {
        let m = BraidModel::new(2).unwrap();
        let s = m.dehornoy_structure().unwrap();
        assert!(s.in_g1(&m.word(&[2]).unwrap()));
        let a = m.multiply(&m.word(&[1]).unwrap(), &m.inverse(&m.word(&[2]).unwrap()));
        assert!(!s.in_g1(&a));
        let d1 = m.pow(s.delta1(), -3);
        assert!(s.in_g1(&d1));
    }

    #[test]
    fn theta_decompose_examples() {
        let m = BraidModel::new(2).unwrap();
        let s = m.dehornoy_structure().unwrap();
        let th = s.theta().clone();
        let a = m.multiply(&m.multiply(&th, &th), &m.word(&[2]).unwrap());
        let d = s.theta_decompose(&a).unwrap().unwrap();
        assert_eq!((d.k, d.a0), (2, m.word(&[2]).unwrap()));
        assert!(s.theta_decompose(&m.word(&[1]).unwrap()).unwrap().is_none());
        for k in 1..=3 {
            let d = s.theta_decompose(&m.delta_power(k)).unwrap().unwrap();
            assert_eq!(d.k as i64, k);
            assert_eq!(d.a0, m.pow(s.delta1(), k));
        }
    }

    #[test]
    fn projection_examples() {
        let b3 = BraidModel::new(2).unwrap();
        assert_eq!(b3.project(&b3.word(&[2]).unwrap()).unwrap(), Projected::Cyclic(1));
        let b4 = BraidModel::new(3).unwrap();
        let a = b4.multiply(&b4.word(&[2, 3]).unwrap(), &b4.inverse(&b4.word(&[2]).unwrap()));
        let b3e = b3.multiply(&b3.word(&[1, 2]).unwrap(), &b3.inverse(&b3.word(&[1]).unwrap()));
        assert_eq!(b4.project(&a).unwrap(), Projected::Level(b3.clone(), b3e));
        let d = DihedralModel::new(5).unwrap();
        assert_eq!(d.project(&d.letters("ttttt").unwrap()).unwrap(), Projected::Cyclic(5));
        assert_eq!(b4.project(&b4.word(&[1]).unwrap()), Err(Error::NotInParabolic));
    }

    #[test]
    fn compare_examples() {
        let b3 = BraidModel::new(2).unwrap();
        let chain = OrderChain::standard(&b3, &[1, 1]).unwrap();
        assert_eq!(chain.compare(&b3.one(), &b3.word(&[1]).unwrap()).unwrap(), Comparison::Less);
        let a = b3.word(&[1, 2, 2]).unwrap();
        assert_eq!(chain.compare(&a, &a).unwrap(), Comparison::Equal);

        let d = DihedralModel::new(5).unwrap();
        let t = d.letters("t").unwrap();
        let pp = OrderChain::standard(&d, &[1, 1]).unwrap();
        let pm = OrderChain::standard(&d, &[1, -1]).unwrap();
        assert_eq!(pp.compare(&d.one(), &t).unwrap(), Comparison::Less);
        assert_eq!(pm.compare(&d.one(), &t).unwrap(), Comparison::Greater);
    }

    #[test]
    fn chain_lengths() {
        assert_eq!(OrderChain::depth_of(&BraidModel::new(2).unwrap()), 2);
        assert_eq!(OrderChain::depth_of(&BraidModel::new(4).unwrap()), 4);
        assert_eq!(OrderChain::depth_of(&DihedralModel::new(6).unwrap()), 2);
        assert!(OrderChain::standard(&DihedralModel::new(6).unwrap(), &[1]).is_err());
    }
}
