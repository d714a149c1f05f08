use super::{Atom, Element, GarsideModel, SignedLetter};
use crate::error::{Error, Result};

/// Normal forms, products, inverses and lattice operations, available on
/// every [`GarsideModel`].
pub trait Garside: GarsideModel {
    fn one(&self) -> Element<Self::Simple> {
        Element::from_parts(Vec::new(), 0)
    }

    /// `Ω^k`.
    fn omega_power(&self, k: i64) -> Element<Self::Simple> {
        Element::from_parts(Vec::new(), k)
    }

    /// `Δ^k = Ω^{ek}`.
    fn delta_power(&self, k: i64) -> Element<Self::Simple> {
        self.omega_power(k * self.delta_exponent() as i64)
    }

    /// The element represented by a single simple.
    fn from_simple(&self, s: Self::Simple) -> Element<Self::Simple> {
        let mut e = self.one();
        right_mul_simple(self, &mut e, s);
        e
    }

    fn atom_element(&self, a: Atom) -> Result<Element<Self::Simple>> {
        Ok(self.from_simple(self.atom(a)?))
    }

    /// Greedy normal form of a positive word.
    fn normalize(&self, word: &[Atom]) -> Result<Element<Self::Simple>> {
        let mut e = self.one();
        for &a in word {
            let s = self.atom(a)?;
            right_mul_simple(self, &mut e, s);
        }
        Ok(e)
    }

    /// The element represented by a signed word.
    fn from_signed_word(&self, word: &[SignedLetter]) -> Result<Element<Self::Simple>> {
        let mut e = self.one();
        for &(a, sign) in word {
            let s = self.atom(a)?;
            if sign > 0 {
                right_mul_simple(self, &mut e, s);
            } else {
                e = self.multiply(&e, &self.inverse(&self.from_simple(s)));
            }
        }
        Ok(e)
    }

    fn multiply(
        &self,
        a: &Element<Self::Simple>,
        b: &Element<Self::Simple>,
    ) -> Element<Self::Simple> {
        let mut out = a.clone();
        for &u in b.part.factors() {
            right_mul_simple(self, &mut out, u);
        }
        out.power += b.power;
        out
    }

    fn inverse(&self, a: &Element<Self::Simple>) -> Element<Self::Simple> {
        // (u_p ⋯ u_1 Ω^q)⁻¹ = Ω^{-q} ∏_{i=1..p} (u_i⁻¹Ω) Ω⁻¹
        let mut out = self.omega_power(-a.power);
        let omega = self.omega();
        for &u in a.part.factors().iter().rev() {
            let r = self.left_quotient(u, omega);
            right_mul_simple(self, &mut out, r);
            out.power -= 1;
        }
        out
    }

    fn pow(&self, a: &Element<Self::Simple>, k: i64) -> Element<Self::Simple> {
        let base = if k < 0 { self.inverse(a) } else { a.clone() };
        let mut out = self.one();
        for _ in 0..k.unsigned_abs() {
            out = self.multiply(&out, &base);
        }
        out
    }

    /// `α⁻¹ β`.
    fn left_divide(
        &self,
        a: &Element<Self::Simple>,
        b: &Element<Self::Simple>,
    ) -> Element<Self::Simple> {
        self.multiply(&self.inverse(a), b)
    }

    /// The greatest simple right divisor `a ∧_R Ω` of a monoid element.
    fn right_head(&self, a: &Element<Self::Simple>) -> Self::Simple {
        if a.power > 0 {
            self.omega()
        } else {
            a.part.factors().last().copied().unwrap_or_else(|| self.identity())
        }
    }

    /// The greatest simple left divisor `a ∧_L Ω` of a monoid element.
    fn left_head(&self, a: &Element<Self::Simple>) -> Self::Simple {
        if a.power > 0 {
            return self.omega();
        }
        let omega = self.omega();
        let mut h = self.identity();
        for &u in a.part.factors().iter().rev() {
            let room = self.left_quotient(u, omega);
            h = self.compose(u, self.left_meet(h, room));
        }
        h
    }

    /// Whether `b ≤_R a`, i.e. `a = c·b` for a monoid element `c`.
    fn right_divides(&self, b: &Element<Self::Simple>, a: &Element<Self::Simple>) -> bool {
        self.divide_right(a, b).is_some()
    }

    /// Whether `b ≤_L a`, i.e. `a = b·c` for a monoid element `c`.
    fn left_divides(&self, b: &Element<Self::Simple>, a: &Element<Self::Simple>) -> bool {
        self.left_divide(b, a).is_positive()
    }

    /// The monoid element `c` with `a = c·b`, if `b ≤_R a`.
    fn divide_right(
        &self,
        a: &Element<Self::Simple>,
        b: &Element<Self::Simple>,
    ) -> Option<Element<Self::Simple>> {
        let c = self.multiply(a, &self.inverse(b));
        c.is_positive().then_some(c)
    }

    fn right_gcd(
        &self,
        a: &Element<Self::Simple>,
        b: &Element<Self::Simple>,
    ) -> Element<Self::Simple> {
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut g = self.one();
        let id = self.identity();
        loop {
            let d = self.right_meet(self.right_head(&a), self.right_head(&b));
            if d == id {
                return g;
            }
            let d = self.from_simple(d);
            let dinv = self.inverse(&d);
            a = self.multiply(&a, &dinv);
            b = self.multiply(&b, &dinv);
            g = self.multiply(&d, &g);
        }
    }

    fn left_gcd(
        &self,
        a: &Element<Self::Simple>,
        b: &Element<Self::Simple>,
    ) -> Element<Self::Simple> {
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut g = self.one();
        let id = self.identity();
        loop {
            let d = self.left_meet(self.left_head(&a), self.left_head(&b));
            if d == id {
                return g;
            }
            let d = self.from_simple(d);
            let dinv = self.inverse(&d);
            a = self.multiply(&dinv, &a);
            b = self.multiply(&dinv, &b);
            g = self.multiply(&g, &d);
        }
    }

    /// The least common right multiple for `≤_R`: the smallest `w` with
    /// `a ≤_R w` and `b ≤_R w`.
    fn right_lcm(
        &self,
        a: &Element<Self::Simple>,
        b: &Element<Self::Simple>,
    ) -> Element<Self::Simple> {
        let n = a.sup().max(b.sup());
        let top = self.omega_power(n);
        let ca = self.multiply(&top, &self.inverse(a));
        let cb = self.multiply(&top, &self.inverse(b));
        let g = self.left_gcd(&ca, &cb);
        self.multiply(&self.inverse(&g), &top)
    }

    /// The least common left multiple for `≤_L`.
    fn left_lcm(
        &self,
        a: &Element<Self::Simple>,
        b: &Element<Self::Simple>,
    ) -> Element<Self::Simple> {
        let n = a.sup().max(b.sup());
        let top = self.omega_power(n);
        let ca = self.multiply(&self.inverse(a), &top);
        let cb = self.multiply(&self.inverse(b), &top);
        let g = self.right_gcd(&ca, &cb);
        self.multiply(&top, &self.inverse(&g))
    }

    /// The unique `(a, b)` with `α = a b⁻¹` and `a ∧_R b = 1`.
    fn orthogonal_form(
        &self,
        alpha: &Element<Self::Simple>,
    ) -> (Element<Self::Simple>, Element<Self::Simple>) {
        if alpha.power >= 0 {
            return (alpha.clone(), self.one());
        }
        let a0 = Element::from_parts(alpha.part.0.clone(), 0);
        let b0 = self.omega_power(-alpha.power);
        let g = self.right_gcd(&a0, &b0);
        let ginv = self.inverse(&g);
        (self.multiply(&a0, &ginv), self.multiply(&b0, &ginv))
    }

    /// `lg` of a monoid element with respect to `Div(Δ)`: the least `p` with
    /// `a ≤_R Δ^p`.
    fn canonical_length(&self, a: &Element<Self::Simple>) -> Result<i64> {
        if !a.is_positive() {
            return Err(Error::NotPositive);
        }
        let e = self.delta_exponent() as i64;
        Ok((a.sup() + e - 1).div_euclid(e))
    }

    /// `lg` of a group element: the sum over its orthogonal form.
    fn group_length(&self, alpha: &Element<Self::Simple>) -> i64 {
        let (a, b) = self.orthogonal_form(alpha);
        let e = self.delta_exponent() as i64;
        (a.sup() + e - 1).div_euclid(e) + (b.sup() + e - 1).div_euclid(e)
    }

    /// A positive word for a monoid element, or an error for negative Ω-power.
    fn positive_word(&self, a: &Element<Self::Simple>) -> Result<Vec<Atom>> {
        if !a.is_positive() {
            return Err(Error::NotPositive);
        }
        let mut w = Vec::new();
        for &u in a.part.factors() {
            w.extend(self.simple_word(u));
        }
        let omega = self.simple_word(self.omega());
        for _ in 0..a.power {
            w.extend(omega.iter().copied());
        }
        Ok(w)
    }

    /// A signed word for any element: the Ω-unmovable part followed by the
    /// Ω-power.
    fn signed_word(&self, a: &Element<Self::Simple>) -> Vec<SignedLetter> {
        let mut w: Vec<SignedLetter> = Vec::new();
        for &u in a.part.factors() {
            w.extend(self.simple_word(u).into_iter().map(|x| (x, 1)));
        }
        let omega = self.simple_word(self.omega());
        for _ in 0..a.power.unsigned_abs() {
            if a.power > 0 {
                w.extend(omega.iter().map(|&x| (x, 1)));
            } else {
                w.extend(omega.iter().rev().map(|&x| (x, -1)));
            }
        }
        w
    }

    fn conjugate_element_by_omega(&self, a: &Element<Self::Simple>) -> Element<Self::Simple> {
        let part = a.part.factors().iter().map(|&u| self.conjugate_by_omega(u)).collect();
        Element::from_parts(part, a.power)
    }
}

impl<M: GarsideModel> Garside for M {}

/// Right-multiplies `e` by the simple `x`, restoring the invariants.
fn right_mul_simple<M: GarsideModel>(m: &M, e: &mut Element<M::Simple>, x: M::Simple) {
    let id = m.identity();
    if x == id {
        return;
    }
    // part · Ω^q · x = part · φ^q(x) · Ω^q
    let mut carry = if e.power.rem_euclid(2) == 1 { m.conjugate_by_omega(x) } else { x };
    let omega = m.omega();
    let factors = &mut e.part.0;
    let mut i = factors.len();
    while i > 0 && carry != id {
        i -= 1;
        let u = factors[i];
        let z = m.right_meet(u, m.right_quotient(omega, carry));
        factors[i] = m.compose(z, carry);
        carry = m.right_quotient(u, z);
    }
    if carry != id {
        factors.insert(0, carry);
    }
    // Ω factors of a right-greedy form sit at its right end.
    while factors.last() == Some(&omega) {
        factors.pop();
        e.power += 1;
    }
    debug_assert!(!factors.contains(&id));
}
