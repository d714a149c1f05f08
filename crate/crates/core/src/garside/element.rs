use super::Atom;

/// Right-greedy normal form `u_p ⋯ u_2 u_1`, stored left to right, so the
/// last entry is `u_1`. No factor is trivial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NormalForm<S>(pub Vec<S>);

impl<S> NormalForm<S> {
    pub fn factors(&self) -> &[S] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A group element `part · Ω^power` with `part` Ω-unmovable.
///
/// This is the unique internal representation: two elements are equal as
/// group elements iff they are equal as values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element<S> {
    pub(crate) part: NormalForm<S>,
    pub(crate) power: i64,
}

impl<S: Copy> Element<S> {
    pub(crate) fn from_parts(part: Vec<S>, power: i64) -> Self {
        Element {
            part: NormalForm(part),
            power,
        }
    }

    pub fn part(&self) -> &NormalForm<S> {
        &self.part
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    /// Whether the element lies in the monoid.
    pub fn is_positive(&self) -> bool {
        self.power >= 0
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0 && self.part.is_empty()
    }

    /// The Ω-supremum of a monoid element (its greedy factor count).
    pub fn sup(&self) -> i64 {
        self.part.len() as i64 + self.power
    }
}

/// The Δ-form `unmovable · Δ^power` of a group element, Δ = Ω^e.
///
/// `unmovable` is a monoid element whose Ω-power is below `e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeltaForm<S> {
    pub unmovable: Element<S>,
    pub power: i64,
}

/// A standard parabolic submonoid together with its Garside elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parabolic<S> {
    pub(crate) atoms: Vec<Atom>,
    pub(crate) omega: S,
    pub(crate) delta: Element<S>,
}

impl<S: Copy> Parabolic<S> {
    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// The parabolic Ω-level element (the right lcm of its atoms).
    pub fn omega(&self) -> S {
        self.omega
    }

    /// The parabolic Garside element δ, i.e. the Ω-level element to the
    /// power `e` of the ambient structure.
    pub fn delta(&self) -> &Element<S> {
        &self.delta
    }

    pub fn contains_atom(&self, a: Atom) -> bool {
        self.atoms.contains(&a)
    }
}

/// The right alternating form `a_p ⋯ a_2 a_1` with respect to `(N2, N1)`.
///
/// Odd-index factors are N1-tails, even-index ones N2-tails. `a_1` may be
/// trivial and is kept so that the breadth keeps its parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingForm<S> {
    /// Factors `a_p, …, a_1` in left-to-right order.
    pub factors: Vec<Element<S>>,
    pub breadth: usize,
    pub depth: usize,
}
