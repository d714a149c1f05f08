//! Textual words.
//!
//! ```text
//! WORD := "1" | TERM ((WS | ".")+ TERM)*
//! TERM := GEN ("^" INT)?
//! GEN  := "s" DIGITS | "s" | "t" | "W" | "D"
//! ```
//!
//! `W` is Ω and `D` is Δ. Exponents are nonzero signed integers.

use crate::braid::BraidModel;
use crate::dihedral::{DihedralModel, S, T};
use crate::error::{Error, Result};
use crate::garside::{Atom, Element, Garside, GarsideModel, SignedLetter};

/// Largest accepted exponent magnitude.
pub const MAX_EXPONENT: i64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `s` followed by a 1-based index.
    Indexed(usize),
    S,
    T,
    Omega,
    Delta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub generator: Generator,
    pub exponent: i64,
    /// Byte offset of the term in the source text.
    pub offset: usize,
}

/// A parsed word; the empty list is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordExpr {
    pub terms: Vec<Term>,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

pub fn parse_word(text: &str) -> Result<WordExpr> {
    let bytes = text.as_bytes();
    let is_sep = |b: u8| b == b'.' || b.is_ascii_whitespace();
    let mut i = 0;
    while i < bytes.len() && bytes[i].is_ascii_whitespace() {
        i += 1;
    }
    let body_end = {
        let mut e = bytes.len();
        while e > i && bytes[e - 1].is_ascii_whitespace() {
            e -= 1;
        }
        e
    };
    if i == body_end {
        return Err(syntax(i, "empty word (write 1 for the identity)"));
    }
    if &bytes[i..body_end] == b"1" {
        return Ok(WordExpr { terms: Vec::new() });
    }
    let mut terms = Vec::new();
    loop {
        let start = i;
        let generator = match bytes.get(i) {
            Some(b's') => {
                i += 1;
                let d0 = i;
                while i < body_end && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == d0 {
                    Generator::S
                } else {
                    let idx: usize = text[d0..i]
                        .parse()
                        .map_err(|_| syntax(d0, "generator index out of range"))?;
                    Generator::Indexed(idx)
                }
            }
            Some(b't') => {
                i += 1;
                Generator::T
            }
            Some(b'W') => {
                i += 1;
                Generator::Omega
            }
            Some(b'D') => {
                i += 1;
                Generator::Delta
            }
            Some(_) => {
                let c = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(i, format!("expected a generator, found `{c}`")));
            }
            None => return Err(syntax(i, "expected a generator")),
        };
        let mut exponent = 1;
        if i < body_end && bytes[i] == b'^' {
            i += 1;
            let n0 = i;
            if i < body_end && (bytes[i] == b'-' || bytes[i] == b'+') {
                i += 1;
            }
            let d0 = i;
            while i < body_end && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i == d0 {
                return Err(syntax(d0, "expected an integer exponent"));
            }
            exponent = text[n0..i]
                .parse::<i64>()
                .ok()
                .filter(|e| e.abs() <= MAX_EXPONENT)
                .ok_or_else(|| syntax(n0, format!("exponent magnitude exceeds {MAX_EXPONENT}")))?;
            if exponent == 0 {
                return Err(syntax(n0, "exponent must be nonzero"));
            }
        }
        terms.push(Term {
            generator,
            exponent,
            offset: start,
        });
        if i == body_end {
            return Ok(WordExpr { terms });
        }
        if !is_sep(bytes[i]) {
            let c = text[i..].chars().next().unwrap_or('?');
            return Err(syntax(i, format!("expected a separator, found `{c}`")));
        }
        while i < body_end && is_sep(bytes[i]) {
            i += 1;
        }
    }
}

/// How a model names its generators in text.
pub trait WordContext: GarsideModel {
    fn resolve(&self, g: Generator, offset: usize) -> Result<Atom>;

    /// The text name of an atom.
    fn name(&self, a: Atom) -> String {
        self.atom_name(a)
    }
}

impl WordContext for BraidModel {
    fn resolve(&self, g: Generator, _offset: usize) -> Result<Atom> {
        match g {
            Generator::Indexed(i) if i >= 1 && i <= self.generators() => Ok(Atom(i - 1)),
            Generator::Indexed(i) => Err(Error::UnknownGenerator(format!("s{i}"))),
            Generator::S => Err(Error::UnknownGenerator("s".into())),
            Generator::T => Err(Error::UnknownGenerator("t".into())),
            Generator::Omega | Generator::Delta => unreachable!("handled by the caller"),
        }
    }
}

impl WordContext for DihedralModel {
    fn resolve(&self, g: Generator, _offset: usize) -> Result<Atom> {
        match g {
            Generator::S => Ok(S),
            Generator::T => Ok(T),
            Generator::Indexed(i) => Err(Error::UnknownGenerator(format!("s{i}"))),
            Generator::Omega | Generator::Delta => unreachable!("handled by the caller"),
        }
    }
}

/// Expands a parsed word into a signed word over atoms.
pub fn expand<M: WordContext>(model: &M, expr: &WordExpr) -> Result<Vec<SignedLetter>> {
    let mut out = Vec::new();
    for t in &expr.terms {
        let base: Vec<SignedLetter> = match t.generator {
            Generator::Omega | Generator::Delta => {
                let omega = model.simple_word(model.omega());
                let reps = if t.generator == Generator::Delta {
                    model.delta_exponent() as usize
                } else {
                    1
                };
                let mut w = Vec::new();
                for _ in 0..reps {
                    w.extend(omega.iter().map(|&a| (a, 1i8)));
                }
                w
            }
            g => vec![(model.resolve(g, t.offset)?, 1)],
        };
        let inverse: Vec<SignedLetter> = base.iter().rev().map(|&(a, e)| (a, -e)).collect();
        let piece = if t.exponent > 0 { &base } else { &inverse };
        for _ in 0..t.exponent.unsigned_abs() {
            out.extend_from_slice(piece);
        }
    }
    Ok(out)
}

/// Parses text into a signed word over the model's atoms.
pub fn parse_signed<M: WordContext>(model: &M, text: &str) -> Result<Vec<SignedLetter>> {
    expand(model, &parse_word(text)?)
}

/// Parses text into an element.
pub fn parse_element<M: WordContext>(model: &M, text: &str) -> Result<Element<M::Simple>> {
    model.from_signed_word(&parse_signed(model, text)?)
}

/// Run-length text of a signed word, e.g. `s2^2 s1 s2^-1`; `1` if empty.
pub fn format_signed<M: WordContext>(model: &M, word: &[SignedLetter]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let (a, e) = word[i];
        let mut j = i;
        while j < word.len() && word[j] == (a, e) {
            j += 1;
        }
        let count = (j - i) as i64 * e as i64;
        parts.push(if count == 1 {
            model.name(a)
        } else {
            format!("{}^{}", model.name(a), count)
        });
        i = j;
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// A canonical positive word for a monoid element: letters are peeled off
/// the right end, always taking the highest-index atom that right-divides
/// what is left.
pub fn canonical_word<M: GarsideModel>(model: &M, a: &Element<M::Simple>) -> Result<Vec<Atom>> {
    if !a.is_positive() {
        return Err(Error::NotPositive);
    }
    let atoms = model.atoms();
    let mut rest = a.clone();
    let mut out = Vec::new();
    while !rest.is_identity() {
        let head = model.right_head(&rest);
        let x = atoms
            .iter()
            .rev()
            .copied()
            .find(|&x| {
                let s = model.atom(x).expect("model atom");
                model.right_meet(head, s) == s
            })
            .expect("a nontrivial element has a final letter");
        out.push(x);
        rest = model.multiply(&rest, &model.inverse(&model.atom_element(x)?));
    }
    out.reverse();
    Ok(out)
}

/// Text of an element. Monoid elements are written as their canonical
/// word; others as the letters of the Ω-unmovable part followed by `W^q`.
pub fn format_element<M: WordContext>(model: &M, a: &Element<M::Simple>) -> String {
    if let Ok(w) = canonical_word(model, a) {
        let letters: Vec<SignedLetter> = w.into_iter().map(|x| (x, 1)).collect();
        return format_signed(model, &letters);
    }
    let mut letters: Vec<SignedLetter> = Vec::new();
    for &u in a.part().factors() {
        letters.extend(model.simple_word(u).into_iter().map(|x| (x, 1)));
    }
    let body = format_signed(model, &letters);
    if a.part().is_empty() {
        format!("W^{}", a.power())
    } else {
        format!("{body} W^{}", a.power())
    }
}

/// Text of the greedy factors, e.g. `[s1 | s1 s2]`.
pub fn format_factors<M: WordContext>(model: &M, a: &Element<M::Simple>) -> Vec<String> {
    let mut out: Vec<String> = a
        .part()
        .factors()
        .iter()
        .map(|&u| {
            let w: Vec<SignedLetter> = model.simple_word(u).into_iter().map(|x| (x, 1)).collect();
            format_signed(model, &w)
        })
        .collect();
    for _ in 0..a.power().max(0) {
        out.push("W".into());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let b3 = BraidModel::new(2).unwrap();
        assert_eq!(
            parse_signed(&b3, "s1 s2^-1").unwrap(),
            vec![(Atom(0), 1), (Atom(1), -1)]
        );
        let d = parse_signed(&b3, "D^-1").unwrap();
        assert_eq!(b3.from_signed_word(&d).unwrap(), b3.delta_power(-1));
        let i25 = DihedralModel::new(5).unwrap();
        assert_eq!(parse_signed(&i25, "s.t.s").unwrap(), vec![(S, 1), (T, 1), (S, 1)]);
        assert_eq!(parse_word("1").unwrap().terms, vec![]);
        assert_eq!(parse_word(" W^2 ").unwrap().terms.len(), 1);
    }

    #[test]
    fn parse_errors() {
        let b3 = BraidModel::new(2).unwrap();
        assert_eq!(
            parse_word("s1 x"),
            Err(Error::Syntax {
                offset: 3,
                message: "expected a generator, found `x`".into()
            })
        );
        assert!(matches!(parse_word("s1^0"), Err(Error::Syntax { offset: 3, .. })));
        assert!(matches!(parse_word("s1s2"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_word(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("s1^"), Err(Error::Syntax { offset: 3, .. })));
        assert_eq!(parse_signed(&b3, "s3"), Err(Error::UnknownGenerator("s3".into())));
        assert_eq!(parse_signed(&b3, "t"), Err(Error::UnknownGenerator("t".into())));
        let i24 = DihedralModel::new(4).unwrap();
        assert_eq!(parse_signed(&i24, "s1"), Err(Error::UnknownGenerator("s1".into())));
    }

    #[test]
    fn format_round_trip() {
        let b3 = BraidModel::new(2).unwrap();
        let a = parse_element(&b3, "s2^2 s1 s2^2").unwrap();
        assert_eq!(format_element(&b3, &a), "s2^2 s1 s2^2");
        assert_eq!(format_element(&b3, &b3.one()), "1");
        assert_eq!(format_element(&b3, &b3.delta_power(-1)), "W^-2");
        let i24 = DihedralModel::new(4).unwrap();
        let a = parse_element(&i24, "t s t s t").unwrap();
        assert_eq!(format_element(&i24, &a), "s t s t^2");
        assert_eq!(format_element(&i24, &i24.inverse(&a)), "s t s W^-2");
        assert_eq!(format_factors(&b3, &parse_element(&b3, "s1 s1 s2").unwrap()), vec!["s1", "s1 s2"]);
    }
}
