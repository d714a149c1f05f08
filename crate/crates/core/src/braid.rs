//! Type A: the braid group on `n + 1` strands with its classical Garside
//! structure. Simples are positive permutation braids.

use std::fmt;

use crate::error::{Error, Result};
use crate::garside::{Atom, Element, Forms, Garside, GarsideModel};
use crate::order::Sign;

/// Largest supported strand count.
pub const MAX_STRANDS: usize = 16;

/// A permutation braid on at most [`MAX_STRANDS`] strands.
///
/// Entry `j` is where the array `[0, 1, …]` ends up after applying the
/// position swaps of a positive word: right multiplication by `s_i` swaps
/// positions `i - 1` and `i`, left multiplication swaps values.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm([u8; MAX_STRANDS]);

impl Perm {
    fn identity() -> Self {
        let mut p = [0u8; MAX_STRANDS];
        for (j, v) in p.iter_mut().enumerate() {
            *v = j as u8;
        }
        Perm(p)
    }

    fn inverse(self) -> Self {
        let mut q = [0u8; MAX_STRANDS];
        for j in 0..MAX_STRANDS {
            q[self.0[j] as usize] = j as u8;
        }
        Perm(q)
    }

    /// Composite `self · other`.
    fn then(self, other: Perm) -> Self {
        let mut c = [0u8; MAX_STRANDS];
        for (j, v) in c.iter_mut().enumerate() {
            *v = self.0[other.0[j] as usize];
        }
        Perm(c)
    }

    fn right_descent(&self, i: usize) -> bool {
        self.0[i] > self.0[i + 1]
    }

    fn left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i] > inv.0[i + 1]
    }

    pub fn images(&self, strands: usize) -> &[u8] {
        &self.0[..strands]
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let end = (0..MAX_STRANDS)
            .rev()
            .find(|&j| self.0[j] as usize != j)
            .map_or(0, |j| j + 1);
        write!(f, "Perm{:?}", &self.0[..end])
    }
}

/// The braid group `B_{n+1}` with generators `s_1, …, s_n`
/// (`Atom(i - 1)` is `s_i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidModel {
    n: usize,
}

impl BraidModel {
    /// A braid context with `n` generators. `n = 1` (the infinite cyclic
    /// group) is accepted so that parabolic projections can bottom out in it.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n + 1 > MAX_STRANDS {
            return Err(Error::InvalidParameter(format!(
                "braid contexts need 1 ≤ n ≤ {} generators, got {n}",
                MAX_STRANDS - 1
            )));
        }
        Ok(BraidModel { n })
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn strands(&self) -> usize {
        self.n + 1
    }

    /// The target of the crisp embedding of `I₂(m)`: `B_m`.
    pub fn crisp_target_context(m: usize) -> Result<Self> {
        if m < 4 {
            return Err(Error::InvalidParameter(format!(
                "dihedral parameter must be at least 4, got {m}"
            )));
        }
        BraidModel::new(m - 1)
    }

    fn swap(i: usize) -> Perm {
        let mut p = Perm::identity();
        p.0.swap(i, i + 1);
        p
    }

    /// The element `s_i` for a 1-based index.
    pub fn generator(&self, i: usize) -> Result<Element<Perm>> {
        if i == 0 || i > self.n {
            return Err(Error::UnknownAtom(i));
        }
        self.atom_element(Atom(i - 1))
    }

    /// The element of a word given as 1-based generator indices.
    pub fn word(&self, indices: &[usize]) -> Result<Element<Perm>> {
        let atoms: Vec<Atom> = indices
            .iter()
            .map(|&i| {
                if i == 0 || i > self.n {
                    Err(Error::UnknownAtom(i))
                } else {
                    Ok(Atom(i - 1))
                }
            })
            .collect::<Result<_>>()?;
        self.normalize(&atoms)
    }

    /// `Δ₁ = (s₂ ⋯ s_n)^n`, the Garside element of `⟨s₂, …, s_n⟩`.
    pub fn delta1(&self) -> Result<Element<Perm>> {
        let w: Vec<usize> = (2..=self.n).collect();
        Ok(self.pow(&self.word(&w)?, self.n as i64))
    }

    /// `Λ = (s₁ ⋯ s_{n−1})^n`, the Garside element of `⟨s₁, …, s_{n−1}⟩`.
    pub fn lambda(&self) -> Result<Element<Perm>> {
        let w: Vec<usize> = (1..self.n).collect();
        Ok(self.pow(&self.word(&w)?, self.n as i64))
    }

    /// `θ = s₁ ⋯ s_{n−1} s_n² s_{n−1} ⋯ s₁`.
    pub fn theta(&self) -> Result<Element<Perm>> {
        let mut w: Vec<usize> = (1..=self.n).collect();
        w.extend((1..=self.n).rev());
        self.word(&w)
    }

    /// The reversal anti-automorphism of the monoid.
    pub fn rev(&self, a: &Element<Perm>) -> Result<Element<Perm>> {
        let mut w = self.positive_word(a)?;
        w.reverse();
        self.normalize(&w)
    }

    /// Conjugation by Ω, `s_i ↦ s_{n+1−i}`.
    pub fn flip(&self, a: &Element<Perm>) -> Element<Perm> {
        self.conjugate_element_by_omega(a)
    }

    /// `N₂ = ⟨s₁, …, s_{n−1}⟩` and `N₁ = ⟨s₂, …, s_n⟩`.
    pub fn breadth_pair(&self) -> Result<(crate::garside::Parabolic<Perm>, crate::garside::Parabolic<Perm>)> {
        let n2: Vec<Atom> = (0..self.n - 1).map(Atom).collect();
        let n1: Vec<Atom> = (1..self.n).map(Atom).collect();
        Ok((self.parabolic(&n2)?, self.parabolic(&n1)?))
    }

    /// The braid breadth `bh(a)` with respect to `(N₂, N₁)`.
    pub fn breadth(&self, a: &Element<Perm>) -> Result<usize> {
        let (n2, n1) = self.breadth_pair()?;
        Ok(self.alternating_form(a, &n2, &n1)?.breadth)
    }

    /// The s₁-sign of `Ω^{−k} a` read off the breadth of `a`:
    /// negative iff `k ≥ max(1, bh(a) − 1)`.
    ///
    /// When the criterion says "not negative" the element is classified as in
    /// `⟨s₂, …, s_n⟩` or positive by a membership test.
    pub fn breadth_sign(&self, a: &Element<Perm>, k: i64) -> Result<Sign> {
        if !a.is_positive() {
            return Err(Error::NotPositive);
        }
        if k < 1 {
            return Err(Error::InvalidParameter(format!("k must be at least 1, got {k}")));
        }
        let bh = self.breadth(a)? as i64;
        if k >= (bh - 1).max(1) {
            return Ok(Sign::Negative);
        }
        let (_, n1) = self.breadth_pair()?;
        let alpha = self.multiply(&self.omega_power(-k), a);
        Ok(if self.parabolic_member(&alpha, &n1) {
            Sign::InG1
        } else {
            Sign::Positive
        })
    }
}

impl GarsideModel for BraidModel {
    type Simple = Perm;

    fn rank(&self) -> usize {
        self.n
    }

    fn delta_exponent(&self) -> u32 {
        2
    }

    fn identity(&self) -> Perm {
        Perm::identity()
    }

    fn omega(&self) -> Perm {
        let mut p = Perm::identity();
        p.0[..=self.n].reverse();
        p
    }

    fn atom(&self, atom: Atom) -> Result<Perm> {
        if atom.0 >= self.n {
            return Err(Error::UnknownAtom(atom.0));
        }
        Ok(Self::swap(atom.0))
    }

    fn atom_name(&self, atom: Atom) -> String {
        format!("s{}", atom.0 + 1)
    }

    fn contains(&self, s: &Perm) -> bool {
        let mut seen = [false; MAX_STRANDS];
        for j in 0..MAX_STRANDS {
            let v = s.0[j] as usize;
            if v >= MAX_STRANDS || seen[v] || (j > self.n && v != j) {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    fn compose(&self, a: Perm, b: Perm) -> Perm {
        a.then(b)
    }

    fn right_quotient(&self, u: Perm, z: Perm) -> Perm {
        u.then(z.inverse())
    }

    fn left_quotient(&self, z: Perm, u: Perm) -> Perm {
        z.inverse().then(u)
    }

    fn right_meet(&self, a: Perm, b: Perm) -> Perm {
        let (mut a, mut b) = (a, b);
        let mut d = Perm::identity();
        'strip: loop {
            for i in 0..self.n {
                if a.right_descent(i) && b.right_descent(i) {
                    a.0.swap(i, i + 1);
                    b.0.swap(i, i + 1);
                    d = Self::swap(i).then(d);
                    continue 'strip;
                }
            }
            return d;
        }
    }

    fn left_meet(&self, a: Perm, b: Perm) -> Perm {
        let (mut a, mut b) = (a, b);
        let mut d = Perm::identity();
        'strip: loop {
            for i in 0..self.n {
                if a.left_descent(i) && b.left_descent(i) {
                    let s = Self::swap(i);
                    a = s.then(a);
                    b = s.then(b);
                    d.0.swap(i, i + 1);
                    continue 'strip;
                }
            }
            return d;
        }
    }

    fn conjugate_by_omega(&self, a: Perm) -> Perm {
        let top = self.n;
        let mut c = Perm::identity();
        for j in 0..=top {
            c.0[j] = (top - a.0[top - j] as usize) as u8;
        }
        c
    }

    fn simple_word(&self, s: Perm) -> Vec<Atom> {
        let mut p = s;
        let mut w = Vec::new();
        'strip: loop {
            for i in 0..self.n {
                if p.right_descent(i) {
                    p.0.swap(i, i + 1);
                    w.push(Atom(i));
                    continue 'strip;
                }
            }
            w.reverse();
            return w;
        }
    }

    fn parabolic_omega(&self, atoms: &[Atom]) -> Result<Perm> {
        let mut sorted = atoms.to_vec();
        sorted.sort();
        sorted.dedup();
        if let Some(a) = sorted.iter().find(|a| a.0 >= self.n) {
            return Err(Error::UnknownAtom(a.0));
        }
        let mut p = Perm::identity();
        let mut k = 0;
        while k < sorted.len() {
            let lo = sorted[k].0;
            let mut hi = lo;
            while k + 1 < sorted.len() && sorted[k + 1].0 == hi + 1 {
                k += 1;
                hi += 1;
            }
            p.0[lo..=hi + 1].reverse();
            k += 1;
        }
        Ok(p)
    }

    fn relations(&self) -> Vec<(Vec<Atom>, Vec<Atom>)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let (a, b) = (Atom(i), Atom(j));
                if j == i + 1 {
                    out.push((vec![a, b, a], vec![b, a, b]));
                } else {
                    out.push((vec![a, b], vec![b, a]));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::NormalForm;

    fn b3() -> BraidModel {
        BraidModel::new(2).unwrap()
    }

    fn simples(m: &BraidModel, idx: &[&[usize]]) -> Vec<Perm> {
        idx.iter()
            .map(|w| {
                let e = m.word(w).unwrap();
                assert_eq!(e.power(), 0);
                assert_eq!(e.part().len(), 1);
                e.part().factors()[0]
            })
            .collect()
    }

    #[test]
    fn normal_form_of_s1_s1_s2() {
        let m = b3();
        let e = m.word(&[1, 1, 2]).unwrap();
        assert_eq!(*e.part(), NormalForm(simples(&m, &[&[1], &[1, 2]])));
        assert_eq!(e.power(), 0);
    }

    #[test]
    fn meet_hook_examples() {
        let m = b3();
        let omega = m.omega();
        let s1s2 = simples(&m, &[&[1, 2]])[0];
        // s1 s1 s2 has greedy tail s1s2
        let e = m.word(&[1, 1, 2]).unwrap();
        assert_eq!(m.right_meet(m.right_head(&e), omega), s1s2);
        assert_eq!(m.right_meet(omega, omega), omega);
        let s1 = m.atom(Atom(0)).unwrap();
        assert_eq!(m.right_meet(s1, omega), s1);
    }

    #[test]
    fn omega_words_and_rank() {
        let m = BraidModel::new(3).unwrap();
        let omega = m.word(&[1, 2, 3, 1, 2, 1]).unwrap();
        assert_eq!(omega, m.omega_power(1));
        assert_eq!(m.simple_word(m.omega()).len(), 6);
    }

    #[test]
    fn braid_relations_hold() {
        for n in 2..=5 {
            let m = BraidModel::new(n).unwrap();
            for (l, r) in m.relations() {
                assert_eq!(m.normalize(&l).unwrap(), m.normalize(&r).unwrap());
            }
        }
    }

    #[test]
    fn theta_times_delta1_is_delta() {
        for n in 2..=5 {
            let m = BraidModel::new(n).unwrap();
            let prod = m.multiply(&m.theta().unwrap(), &m.delta1().unwrap());
            assert_eq!(prod, m.delta_power(1));
        }
    }

    #[test]
    fn parabolic_omega_of_runs() {
        let m = BraidModel::new(4).unwrap();
        let w = m.parabolic_omega(&[Atom(0), Atom(2), Atom(3)]).unwrap();
        let expect = m.word(&[1, 3, 4, 3]).unwrap();
        assert_eq!(m.from_simple(w), expect);
    }

    #[test]
    fn rev_examples() {
        let m = b3();
        assert_eq!(m.rev(&m.word(&[1, 2]).unwrap()).unwrap(), m.word(&[2, 1]).unwrap());
        assert_eq!(m.rev(&m.omega_power(1)).unwrap(), m.omega_power(1));
        let th = m.theta().unwrap();
        assert_eq!(m.rev(&th).unwrap(), th);
    }

    #[test]
    fn flip_examples() {
        let m = BraidModel::new(3).unwrap();
        assert_eq!(m.flip(&m.word(&[1]).unwrap()), m.word(&[3]).unwrap());
        assert_eq!(m.flip(&m.omega_power(1)), m.omega_power(1));
        let a = m.from_signed_word(&[(Atom(0), 1), (Atom(1), -1), (Atom(2), 1)]).unwrap();
        assert_eq!(m.flip(&m.flip(&a)), a);
    }

    #[test]
    fn crisp_targets() {
        assert_eq!(BraidModel::crisp_target_context(4).unwrap().generators(), 3);
        assert_eq!(BraidModel::crisp_target_context(5).unwrap().generators(), 4);
        assert_eq!(BraidModel::crisp_target_context(6).unwrap().generators(), 5);
        assert!(BraidModel::crisp_target_context(3).is_err());
    }

    #[test]
    fn breadth_sign_examples() {
        let m = b3();
        assert_eq!(m.breadth_sign(&m.one(), 1).unwrap(), Sign::Negative);
        let th = m.theta().unwrap();
        assert_eq!(m.breadth(&th).unwrap(), 4);
        assert_ne!(m.breadth_sign(&th, 1).unwrap(), Sign::Negative);
        assert_eq!(m.breadth_sign(&th, 3).unwrap(), Sign::Negative);
        for j in 1..4 {
            let a = m.word(&vec![2; j]).unwrap();
            assert_eq!(m.breadth_sign(&a, 1).unwrap(), Sign::Negative);
        }
    }
}
