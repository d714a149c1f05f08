//! Generic Garside machinery.
//!
//! A concrete model (braids, dihedral Artin groups) only describes its simple
//! elements: the divisors of its base element Ω together with products,
//! quotients, meets and conjugation by Ω. Everything else (greedy normal
//! forms, lattice operations, Δ-forms, tails, alternating forms) is derived
//! here once, through the [`Garside`] extension trait.
//!
//! Elements are stored as `part · Ω^power` where `part` is the right-greedy
//! normal form of an Ω-unmovable monoid element. The Garside element used by
//! the order layer is Δ = Ω^e with `e = delta_exponent()`, chosen so that Δ
//! is central.

mod element;
mod forms;
mod ops;

pub use element::{AlternatingForm, DeltaForm, Element, NormalForm, Parabolic};
pub use forms::Forms;
pub use ops::Garside;

use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// A standard generator of the ambient Artin group, indexed from zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Atom(pub usize);

/// A letter of a signed word: an atom and an exponent of ±1.
pub type SignedLetter = (Atom, i8);

/// The contract a concrete Garside structure has to provide.
///
/// All simple-level hooks may assume their documented preconditions; they are
/// only ever called by the generic algorithms with valid arguments.
pub trait GarsideModel: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Simple: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    /// Number of atoms.
    fn rank(&self) -> usize;

    /// The exponent `e` with Δ = Ω^e central.
    fn delta_exponent(&self) -> u32;

    fn identity(&self) -> Self::Simple;

    fn omega(&self) -> Self::Simple;

    fn atom(&self, atom: Atom) -> Result<Self::Simple>;

    fn atom_name(&self, atom: Atom) -> String;

    /// Whether `s` is a simple element of this model at all.
    fn contains(&self, s: &Self::Simple) -> bool;

    /// `a · b`, assuming the product is simple.
    fn compose(&self, a: Self::Simple, b: Self::Simple) -> Self::Simple;

    /// `u · z⁻¹`, assuming `z ≤_R u`.
    fn right_quotient(&self, u: Self::Simple, z: Self::Simple) -> Self::Simple;

    /// `z⁻¹ · u`, assuming `z ≤_L u`.
    fn left_quotient(&self, z: Self::Simple, u: Self::Simple) -> Self::Simple;

    fn right_meet(&self, a: Self::Simple, b: Self::Simple) -> Self::Simple;

    fn left_meet(&self, a: Self::Simple, b: Self::Simple) -> Self::Simple;

    /// `Ω a Ω⁻¹`.
    fn conjugate_by_omega(&self, a: Self::Simple) -> Self::Simple;

    /// A positive word representing `s`.
    fn simple_word(&self, s: Self::Simple) -> Vec<Atom>;

    /// The right lcm of the given atoms, i.e. the Ω-level Garside element of
    /// the standard parabolic they generate.
    fn parabolic_omega(&self, atoms: &[Atom]) -> Result<Self::Simple>;

    /// The defining relations of the monoid, as pairs of equal positive words.
    fn relations(&self) -> Vec<(Vec<Atom>, Vec<Atom>)>;

    fn atoms(&self) -> Vec<Atom> {
        (0..self.rank()).map(Atom).collect()
    }
}
