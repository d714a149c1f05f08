//! The dihedral Artin groups `I₂(m) = ⟨s, t | Π(s,t,m) = Π(t,s,m)⟩`, m ≥ 4.
//!
//! Two representations are provided. [`DihedralModel`] implements the generic
//! [`GarsideModel`] contract with alternating words as simples. The block
//! path ([`DihedralElement`]) stores an Ω-unmovable word by its exponent
//! blocks, which makes depth and first/last letters direct to read. The two
//! are cross-checked in tests.

use std::fmt;

use serde::Serialize;

use crate::braid::BraidModel;
use crate::error::{Error, Result};
use crate::garside::{Atom, Element, Garside, GarsideModel};
use crate::handle::Letter as BraidLetter;

pub const S: Atom = Atom(0);
pub const T: Atom = Atom(1);

fn other(x: u8) -> u8 {
    1 - x
}

/// A simple element: the alternating word of length `len` starting with
/// `first` (0 = s, 1 = t). The identity is `(0, 0)` and Ω is `(0, m)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralSimple {
    first: u8,
    len: u16,
}

impl fmt::Debug for DihedralSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut x = self.first;
        let mut s = String::new();
        for _ in 0..self.len {
            s.push(if x == 0 { 's' } else { 't' });
            x = other(x);
        }
        if s.is_empty() {
            s.push('1');
        }
        write!(f, "{s}")
    }
}

impl DihedralSimple {
    fn last(self) -> u8 {
        if self.len % 2 == 1 {
            self.first
        } else {
            other(self.first)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DihedralModel {
    m: usize,
}

impl DihedralModel {
    pub fn new(m: usize) -> Result<Self> {
        if m < 4 {
            return Err(Error::InvalidParameter(format!(
                "dihedral parameter must be at least 4, got {m}"
            )));
        }
        if m > u16::MAX as usize {
            return Err(Error::InvalidParameter(format!("dihedral parameter {m} is too large")));
        }
        Ok(DihedralModel { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_even(&self) -> bool {
        self.m.is_multiple_of(2)
    }

    /// `k = ⌊m/2⌋`.
    pub fn k(&self) -> usize {
        self.m / 2
    }

    fn simple(&self, first: u8, len: usize) -> DihedralSimple {
        if len == 0 || len == self.m {
            DihedralSimple {
                first: 0,
                len: len as u16,
            }
        } else {
            DihedralSimple {
                first,
                len: len as u16,
            }
        }
    }

    fn simple_ending(&self, last: u8, len: usize) -> DihedralSimple {
        let first = if len % 2 == 1 { last } else { other(last) };
        self.simple(first, len)
    }

    /// The element of a word over `s` (`Atom(0)`) and `t` (`Atom(1)`).
    pub fn letters(&self, word: &str) -> Result<Element<DihedralSimple>> {
        let atoms = parse_letters(word)?;
        self.normalize(&atoms)
    }

    /// `Δ₁`: `t` for even `m`, `t²` for odd `m`.
    pub fn delta1(&self) -> Element<DihedralSimple> {
        let t = self.atom_element(T).expect("t is an atom");
        self.pow(&t, self.delta_exponent() as i64)
    }

    /// `Λ`: `s` for even `m`, `s²` for odd `m`.
    pub fn lambda(&self) -> Element<DihedralSimple> {
        let s = self.atom_element(S).expect("s is an atom");
        self.pow(&s, self.delta_exponent() as i64)
    }

    /// `θ = Δ Δ₁⁻¹`.
    pub fn theta(&self) -> Element<DihedralSimple> {
        self.multiply(&self.delta_power(1), &self.inverse(&self.delta1()))
    }

    /// `ζ`: `k − 1` for even `m`, `2k − 1` for odd `m`.
    pub fn zeta(&self) -> usize {
        if self.is_even() {
            self.k() - 1
        } else {
            2 * self.k() - 1
        }
    }

    // ---- block path ----

    /// Normal form of a positive word given as letters (0 = s, 1 = t).
    pub fn normalize_dihedral(&self, letters: &[u8]) -> DihedralElement {
        let mut acc = Accumulator::new(self.m, Vec::new(), 0);
        for &x in letters {
            acc.push(x);
        }
        acc.finish()
    }

    pub fn block_from_signed(&self, word: &[(Atom, i8)]) -> Result<DihedralElement> {
        let mut out = DihedralElement::identity();
        for &(a, e) in word {
            if a.0 > 1 {
                return Err(Error::UnknownAtom(a.0));
            }
            let x = a.0 as u8;
            let letter = self.normalize_dihedral(&[x]);
            out = if e > 0 {
                self.multiply_dihedral(&out, &letter)
            } else {
                self.multiply_dihedral(&out, &self.inverse_dihedral(&letter))
            };
        }
        Ok(out)
    }

    pub fn multiply_dihedral(&self, x: &DihedralElement, y: &DihedralElement) -> DihedralElement {
        let mut acc = Accumulator::new(self.m, x.word.letters(), x.power);
        for l in y.word.letters() {
            acc.push(l);
        }
        let mut out = acc.finish();
        out.power += y.power;
        out
    }

    pub fn inverse_dihedral(&self, x: &DihedralElement) -> DihedralElement {
        // x⁻¹ = c·Ω⁻¹ where c is the alternating word of length m − 1
        // starting with the other letter.
        let mut acc = Accumulator::new(self.m, Vec::new(), -x.power);
        for l in x.word.letters().into_iter().rev() {
            let mut y = other(l);
            for _ in 0..self.m - 1 {
                acc.push(y);
                y = other(y);
            }
            acc.power -= 1;
        }
        acc.finish()
    }

    /// The number of `s`-blocks of an Ω-unmovable element.
    pub fn depth_dihedral(&self, a: &DihedralElement) -> Result<usize> {
        if a.power != 0 {
            return Err(Error::NotOmegaUnmovable);
        }
        Ok(a.word.depth())
    }

    /// `(σ(a), τ(a))`, the first and last letters of an Ω-unmovable `a ≠ 1`.
    pub fn first_last_letters(&self, a: &DihedralElement) -> Result<(Atom, Atom)> {
        if a.power != 0 {
            return Err(Error::NotOmegaUnmovable);
        }
        let b = &a.word.blocks;
        if b.len() == 1 && b[0] == 0 {
            return Err(Error::TrivialElement);
        }
        let first = if b[0] != 0 { T } else { S };
        let last = if b[b.len() - 1] != 0 { T } else { S };
        Ok((first, last))
    }

    /// The letter swap `s ↔ t`.
    pub fn phi(&self, a: &DihedralElement) -> DihedralElement {
        let letters: Vec<u8> = a.word.letters().into_iter().map(other).collect();
        let mut out = self.normalize_dihedral(&letters);
        out.power += a.power;
        out
    }

    /// `(unmovable, k)` with `α = unmovable · Δ^k`.
    pub fn dihedral_delta_form(&self, a: &DihedralElement) -> (DihedralElement, i64) {
        let e = self.delta_exponent() as i64;
        let unmovable = DihedralElement {
            word: a.word.clone(),
            power: a.power.rem_euclid(e),
        };
        (unmovable, a.power.div_euclid(e))
    }

    pub fn block_to_element(&self, a: &DihedralElement) -> Element<DihedralSimple> {
        let atoms: Vec<Atom> = a.word.letters().into_iter().map(|x| Atom(x as usize)).collect();
        let w = self.normalize(&atoms).expect("letters are atoms");
        self.multiply(&w, &self.omega_power(a.power))
    }

    pub fn element_to_block(&self, a: &Element<DihedralSimple>) -> DihedralElement {
        let mut letters = Vec::new();
        for &u in a.part().factors() {
            letters.extend(self.simple_word(u).into_iter().map(|x| x.0 as u8));
        }
        let mut out = self.normalize_dihedral(&letters);
        debug_assert_eq!(out.power, 0);
        out.power = a.power();
        out
    }

    // ---- embedding ----

    /// The braid word `ι(x)` of a letter (0 = s, 1 = t), 1-based generators
    /// of `B_m`.
    fn crisp_letter(&self, x: u8) -> Vec<u16> {
        let k = self.k() as u16;
        if x == 0 {
            (0..k).map(|i| 2 * i + 1).collect()
        } else if self.is_even() {
            (1..k).map(|i| 2 * i).collect()
        } else {
            (1..=k).map(|i| 2 * i).collect()
        }
    }

    /// Image of a signed word under ι, as a signed braid word.
    pub fn crisp_embed_word(&self, word: &[(Atom, i8)]) -> Result<Vec<BraidLetter>> {
        let mut out = Vec::new();
        for &(a, e) in word {
            if a.0 > 1 {
                return Err(Error::UnknownAtom(a.0));
            }
            out.extend(self.crisp_letter(a.0 as u8).into_iter().map(|i| BraidLetter::new(i, e)));
        }
        Ok(out)
    }

    /// `ι(α)` normalized in the target braid context.
    pub fn crisp_embed(
        &self,
        alpha: &Element<DihedralSimple>,
        target: &BraidModel,
    ) -> Result<Element<crate::braid::Perm>> {
        if target.generators() != self.m - 1 {
            return Err(Error::ContextMismatch);
        }
        let word = self.crisp_embed_word(&self.signed_word(alpha))?;
        let signed: Vec<(Atom, i8)> = word
            .iter()
            .map(|l| (Atom(l.index as usize - 1), l.exp))
            .collect();
        target.from_signed_word(&signed)
    }
}

fn parse_letters(word: &str) -> Result<Vec<Atom>> {
    word.char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| match c {
            's' => Ok(S),
            't' => Ok(T),
            _ => Err(Error::Syntax {
                offset: i,
                message: format!("expected s or t, found `{c}`"),
            }),
        })
        .collect()
}

/// Streaming right multiplication by letters: keeps the word Ω-unmovable by
/// cutting every alternating run of length `m` into a power of Ω.
struct Accumulator {
    m: usize,
    word: Vec<u8>,
    power: i64,
    /// Length of the alternating suffix of `word`.
    run: usize,
}

impl Accumulator {
    fn new(m: usize, word: Vec<u8>, power: i64) -> Self {
        let mut acc = Accumulator {
            m,
            word,
            power,
            run: 0,
        };
        acc.run = acc.suffix_run();
        acc
    }

    fn suffix_run(&self) -> usize {
        let w = &self.word;
        if w.is_empty() {
            return 0;
        }
        let mut r = 1;
        while r < w.len() && w[w.len() - r - 1] != w[w.len() - r] {
            r += 1;
        }
        r
    }

    fn push(&mut self, x: u8) {
        // w · Ω^q · x = w · φ^q(x) · Ω^q, φ the Ω-conjugation.
        let x = if self.m % 2 == 1 && self.power.rem_euclid(2) == 1 {
            other(x)
        } else {
            x
        };
        self.run = match self.word.last() {
            Some(&y) if y != x => self.run + 1,
            _ => 1,
        };
        self.word.push(x);
        if self.run == self.m {
            // w' · Π(·,·,m) = w' · Ω
            let keep = self.word.len() - self.m;
            self.word.truncate(keep);
            self.power += 1;
            self.run = self.suffix_run();
        }
    }

    fn finish(self) -> DihedralElement {
        DihedralElement {
            word: BlockWord::from_letters(&self.word),
            power: self.power,
        }
    }
}

/// Exponent blocks `(u_p, v_p, …, u_1, v_1, u_0)` of the word
/// `t^{u_p} s^{v_p} ⋯ t^{u_1} s^{v_1} t^{u_0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BlockWord {
    pub blocks: Vec<u32>,
}

impl BlockWord {
    pub fn from_letters(letters: &[u8]) -> Self {
        let mut blocks = vec![0u32];
        for &x in letters {
            let on_t_block = blocks.len() % 2 == 1;
            if (x == 1) == on_t_block {
                *blocks.last_mut().expect("nonempty") += 1;
            } else {
                blocks.push(1);
            }
        }
        if blocks.len() % 2 == 0 {
            blocks.push(0);
        }
        BlockWord { blocks }
    }

    pub fn letters(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for (i, &b) in self.blocks.iter().enumerate() {
            let x = if i % 2 == 0 { 1 } else { 0 };
            out.extend(std::iter::repeat_n(x, b as usize));
        }
        out
    }

    /// `p`, the number of `s`-blocks.
    pub fn depth(&self) -> usize {
        self.blocks.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }
}

/// `word · Ω^power` with `word` Ω-unmovable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DihedralElement {
    pub word: BlockWord,
    pub power: i64,
}

impl DihedralElement {
    pub fn identity() -> Self {
        DihedralElement {
            word: BlockWord { blocks: vec![0] },
            power: 0,
        }
    }
}

impl GarsideModel for DihedralModel {
    type Simple = DihedralSimple;

    fn rank(&self) -> usize {
        2
    }

    fn delta_exponent(&self) -> u32 {
        if self.is_even() {
            1
        } else {
            2
        }
    }

    fn identity(&self) -> DihedralSimple {
        self.simple(0, 0)
    }

    fn omega(&self) -> DihedralSimple {
        self.simple(0, self.m)
    }

    fn atom(&self, atom: Atom) -> Result<DihedralSimple> {
        if atom.0 > 1 {
            return Err(Error::UnknownAtom(atom.0));
        }
        Ok(self.simple(atom.0 as u8, 1))
    }

    fn atom_name(&self, atom: Atom) -> String {
        match atom.0 {
            0 => "s".into(),
            1 => "t".into(),
            i => format!("?{i}"),
        }
    }

    fn contains(&self, s: &DihedralSimple) -> bool {
        let len = s.len as usize;
        s.first <= 1 && len <= self.m && ((len != 0 && len != self.m) || s.first == 0)
    }

    fn compose(&self, a: DihedralSimple, b: DihedralSimple) -> DihedralSimple {
        if a.len == 0 {
            return b;
        }
        if b.len == 0 {
            return a;
        }
        debug_assert!(a.last() != b.first);
        self.simple(a.first, a.len as usize + b.len as usize)
    }

    fn right_quotient(&self, u: DihedralSimple, z: DihedralSimple) -> DihedralSimple {
        if z.len == 0 {
            return u;
        }
        if z == u {
            return self.identity();
        }
        let len = (u.len - z.len) as usize;
        // The quotient ends just before z starts.
        self.simple_ending(other(z.first), len)
    }

    fn left_quotient(&self, z: DihedralSimple, u: DihedralSimple) -> DihedralSimple {
        if z.len == 0 {
            return u;
        }
        if z == u {
            return self.identity();
        }
        let len = (u.len - z.len) as usize;
        self.simple(other(z.last()), len)
    }

    fn right_meet(&self, a: DihedralSimple, b: DihedralSimple) -> DihedralSimple {
        let omega = self.omega();
        if a == omega {
            return b;
        }
        if b == omega {
            return a;
        }
        if a.len == 0 || b.len == 0 || a.last() != b.last() {
            return self.identity();
        }
        self.simple_ending(a.last(), a.len.min(b.len) as usize)
    }

    fn left_meet(&self, a: DihedralSimple, b: DihedralSimple) -> DihedralSimple {
        let omega = self.omega();
        if a == omega {
            return b;
        }
        if b == omega {
            return a;
        }
        if a.len == 0 || b.len == 0 || a.first != b.first {
            return self.identity();
        }
        self.simple(a.first, a.len.min(b.len) as usize)
    }

    fn conjugate_by_omega(&self, a: DihedralSimple) -> DihedralSimple {
        if self.is_even() {
            a
        } else {
            self.simple(other(a.first), a.len as usize)
        }
    }

    fn simple_word(&self, s: DihedralSimple) -> Vec<Atom> {
        let mut x = s.first;
        let mut w = Vec::with_capacity(s.len as usize);
        for _ in 0..s.len {
            w.push(Atom(x as usize));
            x = other(x);
        }
        w
    }

    fn parabolic_omega(&self, atoms: &[Atom]) -> Result<DihedralSimple> {
        let mut has = [false; 2];
        for a in atoms {
            if a.0 > 1 {
                return Err(Error::UnknownAtom(a.0));
            }
            has[a.0] = true;
        }
        Ok(match has {
            [false, false] => self.identity(),
            [true, false] => self.simple(0, 1),
            [false, true] => self.simple(1, 1),
            [true, true] => self.omega(),
        })
    }

    fn relations(&self) -> Vec<(Vec<Atom>, Vec<Atom>)> {
        let st = self.simple_word(DihedralSimple { first: 0, len: self.m as u16 });
        let ts = self.simple_word(DihedralSimple { first: 1, len: self.m as u16 });
        vec![(st, ts)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::Forms;

    fn blocks(m: &DihedralModel, w: &str) -> DihedralElement {
        let letters: Vec<u8> = parse_letters(w).unwrap().iter().map(|a| a.0 as u8).collect();
        m.normalize_dihedral(&letters)
    }

    #[test]
    fn normalize_examples() {
        let m4 = DihedralModel::new(4).unwrap();
        let tst = blocks(&m4, "tst");
        assert_eq!(tst.word.blocks, vec![1, 1, 1]);
        assert_eq!(tst.power, 0);
        assert_eq!(m4.depth_dihedral(&tst).unwrap(), 1);

        let tstst = blocks(&m4, "tstst");
        assert_eq!(tstst.word.blocks, vec![1]);
        assert_eq!(tstst.power, 1);

        let m5 = DihedralModel::new(5).unwrap();
        let omega = blocks(&m5, "ststs");
        assert!(omega.word.is_empty());
        assert_eq!(omega.power, 1);
    }

    #[test]
    fn multiply_examples() {
        let m4 = DihedralModel::new(4).unwrap();
        let st = m4.multiply_dihedral(&blocks(&m4, "s"), &blocks(&m4, "t"));
        assert_eq!(st.word.blocks, vec![0, 1, 1]);
        assert_eq!(st.power, 0);

        let m5 = DihedralModel::new(5).unwrap();
        let omega = blocks(&m5, "ststs");
        let r = m5.multiply_dihedral(&omega, &blocks(&m5, "s"));
        assert_eq!(r.word.blocks, vec![1]);
        assert_eq!(r.power, 1);

        let theta = m5.element_to_block(&m5.theta());
        let d1 = m5.element_to_block(&m5.delta1());
        let r = m5.multiply_dihedral(&theta, &d1);
        assert!(r.word.is_empty());
        assert_eq!(r.power, 2);
    }

    #[test]
    fn theta_values() {
        let m4 = DihedralModel::new(4).unwrap();
        assert_eq!(m4.theta(), m4.letters("sts").unwrap());
        let m5 = DihedralModel::new(5).unwrap();
        assert_eq!(m5.theta(), m5.letters("ststtsts").unwrap());
        let th = m5.element_to_block(&m5.theta());
        assert_eq!(m5.depth_dihedral(&th).unwrap(), 4);
        let th4 = m4.element_to_block(&m4.theta());
        assert_eq!(m4.depth_dihedral(&th4).unwrap(), 2);
        assert!(m5.is_omega_unmovable(&m5.theta()));
    }

    #[test]
    fn depth_of_identity_and_movable() {
        let m = DihedralModel::new(6).unwrap();
        assert_eq!(m.depth_dihedral(&DihedralElement::identity()).unwrap(), 0);
        let movable = blocks(&m, "ststst");
        assert_eq!(m.depth_dihedral(&movable), Err(Error::NotOmegaUnmovable));
    }

    #[test]
    fn first_last_examples() {
        let m = DihedralModel::new(5).unwrap();
        assert_eq!(m.first_last_letters(&blocks(&m, "sts")).unwrap(), (S, S));
        assert_eq!(m.first_last_letters(&blocks(&m, "tst")).unwrap(), (T, T));
        assert_eq!(m.first_last_letters(&blocks(&m, "tss")).unwrap(), (T, S));
        assert_eq!(
            m.first_last_letters(&DihedralElement::identity()),
            Err(Error::TrivialElement)
        );
    }

    #[test]
    fn phi_examples() {
        let m = DihedralModel::new(5).unwrap();
        assert_eq!(m.phi(&blocks(&m, "sts")), blocks(&m, "tst"));
        let omega = blocks(&m, "ststs");
        assert_eq!(m.phi(&omega), omega);
        let a = blocks(&m, "sstst");
        assert_eq!(m.phi(&m.phi(&a)), a);
    }

    #[test]
    fn delta_form_examples() {
        let m5 = DihedralModel::new(5).unwrap();
        let omega = blocks(&m5, "ststs");
        let (u, k) = m5.dihedral_delta_form(&omega);
        assert_eq!((u, k), (omega.clone(), 0));

        let t_omega3 = DihedralElement {
            word: BlockWord::from_letters(&[1]),
            power: 3,
        };
        let (u, k) = m5.dihedral_delta_form(&t_omega3);
        assert_eq!(k, 1);
        assert_eq!(u.word.blocks, vec![1]);
        assert_eq!(u.power, 1);

        let m4 = DihedralModel::new(4).unwrap();
        let dinv = DihedralElement {
            word: BlockWord::from_letters(&[]),
            power: -1,
        };
        let (u, k) = m4.dihedral_delta_form(&dinv);
        assert_eq!((u.word.is_empty(), u.power, k), (true, 0, -1));
    }

    #[test]
    fn crisp_examples() {
        let m4 = DihedralModel::new(4).unwrap();
        let b4 = BraidModel::crisp_target_context(4).unwrap();
        let s = m4.letters("s").unwrap();
        assert_eq!(m4.crisp_embed(&s, &b4).unwrap(), b4.word(&[1, 3]).unwrap());
        let delta = m4.letters("stst").unwrap();
        assert_eq!(m4.crisp_embed(&delta, &b4).unwrap(), b4.omega_power(1));

        let m5 = DihedralModel::new(5).unwrap();
        let b5 = BraidModel::crisp_target_context(5).unwrap();
        let t = m5.letters("t").unwrap();
        assert_eq!(m5.crisp_embed(&t, &b5).unwrap(), b5.word(&[2, 4]).unwrap());
        assert_eq!(m5.crisp_embed(&t, &b4), Err(Error::ContextMismatch));
    }

    #[test]
    fn complement_example() {
        let m = DihedralModel::new(4).unwrap();
        let s = m.letters("s").unwrap();
        assert_eq!(m.complement(&s).unwrap(), m.letters("tst").unwrap());
    }
}
