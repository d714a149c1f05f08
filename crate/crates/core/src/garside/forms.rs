use super::{AlternatingForm, Atom, DeltaForm, Element, Garside, GarsideModel, Parabolic};
use crate::error::{Error, Result};

/// Δ-forms, complements, parabolic tails and alternating forms.
pub trait Forms: Garside {
    fn delta_form(&self, alpha: &Element<Self::Simple>) -> DeltaForm<Self::Simple> {
        let e = self.delta_exponent() as i64;
        DeltaForm {
            unmovable: Element::from_parts(alpha.part.0.clone(), alpha.power.rem_euclid(e)),
            power: alpha.power.div_euclid(e),
        }
    }

    fn from_delta_form(&self, form: &DeltaForm<Self::Simple>) -> Element<Self::Simple> {
        self.multiply(&form.unmovable, &self.delta_power(form.power))
    }

    /// `Δ ⋬_R a` for a monoid element.
    fn is_unmovable(&self, a: &Element<Self::Simple>) -> bool {
        a.is_positive() && a.power < self.delta_exponent() as i64
    }

    /// `Ω ⋬_R a` for a monoid element.
    fn is_omega_unmovable(&self, a: &Element<Self::Simple>) -> bool {
        a.power == 0
    }

    /// `com(a)` with `a · com(a) = Δ^{lg(a)}`.
    fn complement(&self, a: &Element<Self::Simple>) -> Result<Element<Self::Simple>> {
        if !self.is_unmovable(a) {
            return Err(Error::NotUnmovable);
        }
        let p = self.canonical_length(a)?;
        Ok(self.multiply(&self.inverse(a), &self.delta_power(p)))
    }

    /// The standard parabolic generated by `atoms`.
    fn parabolic(&self, atoms: &[Atom]) -> Result<Parabolic<Self::Simple>> {
        let mut atoms = atoms.to_vec();
        atoms.sort();
        atoms.dedup();
        for &a in &atoms {
            self.atom(a)?;
        }
        let omega = self.parabolic_omega(&atoms)?;
        let delta = self.pow(&self.from_simple(omega), self.delta_exponent() as i64);
        Ok(Parabolic {
            atoms,
            omega,
            delta,
        })
    }

    /// Whether a monoid element lies in the parabolic submonoid.
    fn in_parabolic_monoid(&self, a: &Element<Self::Simple>, x: &Parabolic<Self::Simple>) -> bool {
        if !a.is_positive() {
            return false;
        }
        if a.power > 0 && x.omega != self.omega() {
            return false;
        }
        a.part
            .factors()
            .iter()
            .all(|&u| self.right_meet(u, x.omega) == u)
    }

    /// Whether a group element lies in the parabolic subgroup, decided on its
    /// orthogonal form.
    fn parabolic_member(&self, alpha: &Element<Self::Simple>, x: &Parabolic<Self::Simple>) -> bool {
        let (a, b) = self.orthogonal_form(alpha);
        self.in_parabolic_monoid(&a, x) && self.in_parabolic_monoid(&b, x)
    }

    /// The N-tail: the greatest right divisor of `a` lying in `N`.
    fn tail(
        &self,
        a: &Element<Self::Simple>,
        n: &Parabolic<Self::Simple>,
    ) -> Result<Element<Self::Simple>> {
        Ok(self.split_tail(a, n)?.1)
    }

    /// `(a · τ_N(a)⁻¹, τ_N(a))`.
    fn split_tail(
        &self,
        a: &Element<Self::Simple>,
        n: &Parabolic<Self::Simple>,
    ) -> Result<(Element<Self::Simple>, Element<Self::Simple>)> {
        if !a.is_positive() {
            return Err(Error::NotPositive);
        }
        let id = self.identity();
        let mut rest = a.clone();
        let mut tail = self.one();
        loop {
            let d = self.right_meet(self.right_head(&rest), n.omega);
            if d == id {
                return Ok((rest, tail));
            }
            let d = self.from_simple(d);
            rest = self.multiply(&rest, &self.inverse(&d));
            tail = self.multiply(&d, &tail);
        }
    }

    /// The right alternating form of `a` with respect to `(n2, n1)`.
    fn alternating_form(
        &self,
        a: &Element<Self::Simple>,
        n2: &Parabolic<Self::Simple>,
        n1: &Parabolic<Self::Simple>,
    ) -> Result<AlternatingForm<Self::Simple>> {
        if !a.is_positive() {
            return Err(Error::NotPositive);
        }
        let covered = self
            .atoms()
            .iter()
            .all(|x| n1.contains_atom(*x) || n2.contains_atom(*x));
        if !covered {
            return Err(Error::GenerationViolated);
        }
        let mut factors = Vec::new();
        let mut rest = a.clone();
        loop {
            let n = if factors.len() % 2 == 0 { n1 } else { n2 };
            let (r, f) = self.split_tail(&rest, n)?;
            if !factors.is_empty() && f.is_identity() {
                // Both tails trivial on a nontrivial element: the atoms do
                // not generate.
                return Err(Error::GenerationViolated);
            }
            factors.push(f);
            rest = r;
            if rest.is_identity() {
                break;
            }
        }
        factors.reverse();
        let breadth = factors.len();
        Ok(AlternatingForm {
            factors,
            breadth,
            depth: breadth / 2,
        })
    }

    /// Recomposes an alternating form.
    fn recompose(&self, form: &AlternatingForm<Self::Simple>) -> Element<Self::Simple> {
        form.factors
            .iter()
            .fold(self.one(), |acc, f| self.multiply(&acc, f))
    }
}

impl<M: GarsideModel> Forms for M {}
