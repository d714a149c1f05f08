//! The depth and Θ̄ lemmas behind Condition B, each instantiated over an
//! enumeration. Every sub-check is named by the property it tests.

use rayon::prelude::*;

use super::{enumerate_group, enumerate_monoid, CheckReport, EnumerationBudget};
use crate::braid::BraidModel;
use crate::context::GroupContext;
use crate::dihedral::{DihedralModel, DihedralSimple, S, T};
use crate::garside::{Atom, Element, Forms, Garside, GarsideModel};
use crate::order::{DehornoyStructure, OrderedModel};
use crate::word::{format_element, WordContext};

type Outcome = Option<std::result::Result<(), String>>;

/// Runs `f` on every item in parallel. `None` means the item is outside the
/// hypotheses; the count of those is kept as coverage.
fn run<T: Sync>(name: &str, items: &[T], f: impl Fn(&T) -> Outcome + Sync + Send) -> CheckReport {
    let rows: Vec<Outcome> = items.par_iter().map(f).collect();
    let mut report = CheckReport::new(name);
    let mut skipped = 0;
    for r in rows {
        match r {
            None => skipped += 1,
            Some(Ok(())) => report.instance(),
            Some(Err(trace)) => {
                report.instance();
                report.fail(trace);
            }
        }
    }
    report.coverage.insert("outside_hypotheses".into(), skipped);
    report
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}

fn expect(ok: bool, trace: impl FnOnce() -> String) -> Outcome {
    Some(if ok { Ok(()) } else { Err(trace()) })
}

/// Statements valid for every Dehornoy structure satisfying Condition A.
fn generic_suite<M: OrderedModel + WordContext>(s: &DehornoyStructure<M>, budget: &EnumerationBudget) -> Vec<CheckReport> {
    let model = s.model();
    let fmt = |a: &Element<M::Simple>| format_element(model, a);
    let dpt = |a: &Element<M::Simple>| s.depth(a).map(|d| d as i64).unwrap_or(-1);
    let theta = s.theta().clone();
    let monoid: Vec<Element<M::Simple>> = enumerate_monoid(model, budget.max_len).into_iter().map(|(a, _)| a).collect();
    let m1: Vec<&Element<M::Simple>> = monoid.iter().filter(|a| s.in_m1(a)).collect();
    let ks: Vec<i64> = (1..=budget.max_power.max(1) as i64).collect();
    let mut out = Vec::new();

    out.push(run("theta-coprime-to-m1", &m1, |a| {
        let gcd = model.right_gcd(&theta, a);
        let lcm = model.right_lcm(&theta, a);
        let ta = model.multiply(&theta, a);
        let at = model.multiply(a, &theta);
        expect(gcd.is_identity() && lcm == ta && ta == at, || {
            format!("a = {}: gcd {}, lcm {}, θa {}, aθ {}", fmt(a), fmt(&gcd), fmt(&lcm), fmt(&ta), fmt(&at))
        })
    }));

    let theta_cases: Vec<(i64, &Element<M::Simple>)> = ks.iter().flat_map(|&k| m1.iter().map(move |a| (k, *a))).collect();
    out.push(run("theta-power-depth", &theta_cases, |&(k, a0)| {
        let a = model.multiply(&model.pow(&theta, k), a0);
        let d = dpt(&a);
        expect(d == s.zeta() * k + 1, || format!("θ^{k} · {}: dpt {d}, expected {}", fmt(a0), s.zeta() * k + 1))
    }));

    out.push(run("theta-power-unmovable", &theta_cases, |&(k, a0)| {
        let a = model.multiply(&model.pow(&theta, k), a0);
        let unmovable = model.is_unmovable(&a);
        let blocked = !model.right_divides(s.delta1(), a0);
        expect(unmovable == blocked, || {
            format!("θ^{k} · {}: unmovable {unmovable}, Δ₁ ⋬ a0 {blocked}", fmt(a0))
        })
    }));

    let unmovable: Vec<&Element<M::Simple>> = monoid.iter().filter(|a| model.is_unmovable(a)).collect();
    out.push(run("complement-preserves-theta-bar", &unmovable, |a| {
        let c = model.complement(a).ok()?;
        let x = s.in_theta_bar(a);
        let y = s.in_theta_bar(&c);
        expect(matches!((&x, &y), (Ok(p), Ok(q)) if p == q), || {
            format!("a = {} ({x:?}), com(a) = {} ({y:?})", fmt(a), fmt(&c))
        })
    }));

    let group: Vec<Element<M::Simple>> = enumerate_group(model, budget.max_len).into_iter().map(|(a, _)| a).collect();
    out.push(run("g1-delta-form", &group, |alpha| {
        if !s.in_g1(alpha) || s.in_m1(alpha) {
            return None;
        }
        let form = model.delta_form(alpha);
        let k = -form.power;
        let dec = s.theta_decompose(&form.unmovable);
        let ok = k >= 1 && matches!(&dec, Ok(Some(d)) if d.k as i64 == k);
        expect(ok, || {
            format!(
                "α = {}: Δ-form ({}, {}), θ-decomposition {:?}",
                fmt(alpha),
                fmt(&form.unmovable),
                form.power,
                dec.map(|d| d.map(|d| (d.k, fmt(&d.a0))))
            )
        })
    }));

    let bar: Vec<bool> = monoid.par_iter().map(|a| s.in_theta_bar(a).unwrap_or(false)).collect();
    out.push(run("theta-bar-closure", &pairs(monoid.len()), |&(i, j)| {
        if !bar[i] || bar[j] {
            return None;
        }
        let (a, b) = (&monoid[i], &monoid[j]);
        let ab = s.in_theta_bar(&model.multiply(a, b));
        let ba = s.in_theta_bar(&model.multiply(b, a));
        expect(ab == Ok(false) && ba == Ok(false), || {
            format!("a = {} ∈ Θ̄, b = {} ∉ Θ̄: ab {ab:?}, ba {ba:?}", fmt(a), fmt(b))
        })
    }));

    let delta_cases: Vec<(i64, &Element<M::Simple>)> = (0..=budget.max_power as i64)
        .flat_map(|k| unmovable.iter().map(move |a| (k, *a)))
        .collect();
    out.push(run("g1-numerator-in-theta-bar", &delta_cases, |&(k, a)| {
        let alpha = model.multiply(a, &model.delta_power(-k));
        if !s.in_g1(&alpha) {
            return None;
        }
        let bar = s.in_theta_bar(a);
        expect(bar == Ok(true), || format!("{} · Δ^-{k} ∈ G₁ but Θ̄ membership {bar:?}", fmt(a)))
    }));
    out
}

fn braid_suite(model: &BraidModel, budget: &EnumerationBudget) -> Vec<CheckReport> {
    let s = model.dehornoy_structure().expect("braid structure");
    let fmt = |a: &Element<crate::braid::Perm>| format_element(model, a);
    let dpt = |a: &Element<crate::braid::Perm>| s.depth(a).map(|d| d as i64).unwrap_or(-1);
    let theta = s.theta().clone();
    let monoid: Vec<_> = enumerate_monoid(model, budget.max_len).into_iter().map(|(a, _)| a).collect();
    let mut out = Vec::new();

    out.push(run("reversal-depth", &monoid, |a| {
        let r = model.rev(a).ok()?;
        expect(dpt(&r) == dpt(a), || format!("a = {}: dpt {}, rev(a) = {} dpt {}", fmt(a), dpt(a), fmt(&r), dpt(&r)))
    }));

    let shift_cases: Vec<(i64, &Element<_>)> = (1..=budget.max_power.clamp(1, 2) as i64)
        .flat_map(|k| monoid.iter().map(move |a| (k, a)))
        .collect();
    out.push(run("theta-shift-depth", &shift_cases, |&(k, a)| {
        if s.in_m1(a) {
            return None;
        }
        let at = model.multiply(a, &model.pow(&theta, k));
        expect(dpt(&at) == dpt(a) + k, || format!("a = {} (dpt {}): dpt(aθ^{k}) = {}", fmt(a), dpt(a), dpt(&at)))
    }));

    let info: Vec<(bool, bool, i64)> = monoid
        .par_iter()
        .map(|a| (s.in_m1(a), matches!(s.theta_decompose(a), Ok(Some(_))), dpt(a)))
        .collect();
    out.push(run("m1-factor-depth", &pairs(monoid.len()), |&(i, j)| {
        if !info[i].0 || info[j].0 {
            return None;
        }
        let (a, b) = (&monoid[i], &monoid[j]);
        let ab = dpt(&model.multiply(a, b));
        let ba = dpt(&model.multiply(b, a));
        expect(ab == info[j].2 && ba == info[j].2, || {
            format!("a = {} ∈ M₁, b = {} (dpt {}): dpt(ab) {ab}, dpt(ba) {ba}", fmt(a), fmt(b), info[j].2)
        })
    }));

    out.push(run("theta-factor-depth", &pairs(monoid.len()), |&(i, j)| {
        if !info[i].1 || info[j].0 {
            return None;
        }
        let (a, b) = (&monoid[i], &monoid[j]);
        let expected = info[i].2 + info[j].2 - 1;
        let ab = dpt(&model.multiply(a, b));
        let ba = dpt(&model.multiply(b, a));
        expect(ab == expected && ba == expected, || {
            format!("a = {} ∈ Θ, b = {}: dpt(ab) {ab}, dpt(ba) {ba}, expected {expected}", fmt(a), fmt(b))
        })
    }));
    out
}

/// Ω-unmovable elements with their depth, first and last letters.
struct Unit {
    a: Element<DihedralSimple>,
    depth: i64,
    ends: Option<(Atom, Atom)>,
}

fn dihedral_units(model: &DihedralModel, s: &DehornoyStructure<DihedralModel>, items: Vec<Element<DihedralSimple>>) -> Vec<Unit> {
    items
        .into_par_iter()
        .map(|a| {
            let block = model.element_to_block(&a);
            Unit {
                depth: s.depth(&a).map(|d| d as i64).unwrap_or(-1),
                ends: model.first_last_letters(&block).ok(),
                a,
            }
        })
        .collect()
}

/// All simples `u ≠ 1, Ω`: alternating words of length `1..m`.
fn proper_simples(model: &DihedralModel) -> Vec<Element<DihedralSimple>> {
    let mut out = Vec::new();
    for first in [S, T] {
        for len in 1..model.m() {
            let w: Vec<Atom> = (0..len).map(|i| if (i % 2 == 0) == (first == S) { S } else { T }).collect();
            out.push(model.normalize(&w).expect("dihedral atoms"));
        }
    }
    out
}

fn dihedral_suite(model: &DihedralModel, budget: &EnumerationBudget) -> Vec<CheckReport> {
    let s = model.dehornoy_structure().expect("dihedral structure");
    let fmt = |a: &Element<DihedralSimple>| format_element(model, a);
    let dpt = |a: &Element<DihedralSimple>| s.depth(a).map(|d| d as i64).unwrap_or(-1);
    let k = model.k() as i64;
    let omega = model.from_simple(model.omega());
    let units = dihedral_units(
        model,
        &s,
        enumerate_monoid(model, budget.max_len)
            .into_iter()
            .map(|(a, _)| a)
            .filter(|a| model.is_omega_unmovable(a))
            .collect(),
    );
    let simples = dihedral_units(model, &s, proper_simples(model));
    let mut out = Vec::new();

    out.push(run("block-depth-agreement", &units, |u| {
        let block = model.element_to_block(&u.a);
        let d = model.depth_dihedral(&block).map(|d| d as i64);
        let first_is_s = model.left_divides(&model.from_simple(model.atom(S).ok()?), &u.a);
        let first_ok = match u.ends {
            Some((f, _)) => (f == S) == first_is_s,
            None => u.a.is_identity(),
        };
        expect(d == Ok(u.depth) && first_ok, || {
            format!("a = {}: alternating depth {}, block depth {d:?}, ends {:?}", fmt(&u.a), u.depth, u.ends)
        })
    }));

    let s_junction = |x: &Unit, y: &Unit| matches!((x.ends, y.ends), (Some((_, S)), Some((S, _))));
    out.push(run("product-depth", &pairs(units.len()), |&(i, j)| {
        let (x, y) = (&units[i], &units[j]);
        let ab = model.multiply(&x.a, &y.a);
        if !model.is_omega_unmovable(&ab) {
            return None;
        }
        let expected = x.depth + y.depth - s_junction(x, y) as i64;
        let d = dpt(&ab);
        expect(d == expected, || {
            format!("a = {}, b = {}, ab = {}: dpt {d}, expected {expected}", fmt(&x.a), fmt(&y.a), fmt(&ab))
        })
    }));

    // Splits of Ω into two simples, the trivial ones included in the even
    // case where Ω = Δ.
    let mut splits = simples.iter().collect::<Vec<_>>();
    let ends = dihedral_units(model, &s, vec![model.one(), omega.clone()]);
    if model.is_even() {
        splits.extend(ends.iter());
    }
    out.push(run("omega-split-depth", &splits, |x| {
        let b = model.multiply(&model.inverse(&x.a), &omega);
        let sum = x.depth + dpt(&b);
        let expected = if model.is_even() {
            k
        } else if x.ends.map(|e| e.0) == Some(S) {
            k + 1
        } else {
            k
        };
        expect(sum == expected, || format!("a = {}, b = {}: depth sum {sum}, expected {expected}", fmt(&x.a), fmt(&b)))
    }));

    if model.is_even() {
        return out;
    }

    out.push(run("phi-depth-shift", &units, |u| {
        let (f, l) = u.ends?;
        let p = model.conjugate_element_by_omega(&u.a);
        let expected = match (f, l) {
            (T, T) => u.depth + 1,
            (S, S) => u.depth - 1,
            _ => u.depth,
        };
        expect(dpt(&p) == expected, || format!("c = {}: dpt(φ(c)) {}, expected {expected}", fmt(&u.a), dpt(&p)))
    }));

    out.push(run("omega-shift-depth", &units, |u| {
        let c = model.multiply(&u.a, &omega);
        let expected = match u.ends {
            Some((_, S)) => u.depth + k - 1,
            _ => u.depth + k,
        };
        expect(dpt(&c) == expected, || format!("c = {}: dpt(cΩ) {}, expected {expected}", fmt(&u.a), dpt(&c)))
    }));

    // b with a·φ(b) = Ω, so φ(b) = a⁻¹Ω.
    let twisted_partner = |a: &Element<DihedralSimple>| {
        model.conjugate_element_by_omega(&model.multiply(&model.inverse(a), &omega))
    };
    out.push(run("twisted-omega-split-depth", &simples, |x| {
        let b = twisted_partner(&x.a);
        let sum = x.depth + dpt(&b);
        let expected = if x.ends.map(|e| e.1) == Some(S) { k + 1 } else { k };
        expect(sum == expected, || format!("a = {}, b = {}: depth sum {sum}, expected {expected}", fmt(&x.a), fmt(&b)))
    }));

    out.push(run("quadruple-depth", &pairs(simples.len()), |&(i, j)| {
        let (a1, a2) = (&simples[i], &simples[j]);
        let b1 = model.multiply(&model.inverse(&a1.a), &omega);
        let b2 = twisted_partner(&a2.a);
        let bs = dihedral_units(model, &s, vec![b1, b2]);
        let (e1, e2) = (a1.ends?, a2.ends?);
        let (f1, f2) = (bs[0].ends?, bs[1].ends?);
        if e1.0 != e2.1 || f1.1 != f2.0 {
            return None;
        }
        let u = [e1.0, e2.0].iter().filter(|&&x| x == S).count() as i64;
        let v = [f1.1, f2.1].iter().filter(|&&x| x == S).count() as i64;
        let sum = a1.depth + a2.depth + bs[0].depth + bs[1].depth;
        let expected = 2 * k - 1 + u + v;
        expect(sum == expected, || {
            format!(
                "a1 = {}, a2 = {}, b1 = {}, b2 = {}: depth sum {sum}, expected {expected}",
                fmt(&a1.a),
                fmt(&a2.a),
                fmt(&bs[0].a),
                fmt(&bs[1].a)
            )
        })
    }));
    out
}

/// Every lemma that applies to the context, over all elements of word
/// length at most `budget.max_len` and powers up to `budget.max_power`.
pub fn check_lemma_suite(ctx: &GroupContext, budget: &EnumerationBudget) -> CheckReport {
    let mut report = CheckReport::new("lemmas");
    let subs = match ctx {
        GroupContext::Braid(b) => {
            let s = b.dehornoy_structure().expect("braid structure");
            let mut v = generic_suite(&s, budget);
            v.extend(braid_suite(b, budget));
            v
        }
        GroupContext::Dihedral(d) => {
            let s = d.dehornoy_structure().expect("dihedral structure");
            let mut v = generic_suite(&s, budget);
            v.extend(dihedral_suite(d, budget));
            v
        }
    };
    for sub in subs {
        report.absorb(sub);
    }
    report
}
