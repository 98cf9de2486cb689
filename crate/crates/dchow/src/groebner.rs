//! Buchberger's algorithm over F_p for homogeneous ideals: reduced Groebner
//! bases with tracked generator combinations, normal forms, membership and
//! containment tests, and leading-term data.

use std::collections::BTreeSet;
use std::sync::{Mutex, OnceLock};

use crate::algebra::{same_context, Ctx, FieldElement, Monomial, Polynomial};
use crate::error::{Error, Result};

/// One element of a Groebner basis together with the polynomial combination
/// of the original generators that produced it.
#[derive(Clone, Debug)]
pub struct GbElement {
    /// Monic basis polynomial.
    pub poly: Polynomial,
    /// `poly = sum_i cofactors[i] * generators[i]`.
    pub cofactors: Vec<Polynomial>,
}

#[derive(Debug)]
pub struct GroebnerData {
    /// Reduced basis: monic, no leading term divides another, tails reduced,
    /// sorted ascending by leading term.
    pub basis: Vec<GbElement>,
    /// True when the degree cap discarded at least one S-pair.
    pub truncated: bool,
}

/// A homogeneous ideal: named generators plus a lazily computed reduced
/// Groebner basis.  The basis cache is filled by the first accessor; the
/// handle is read-only afterwards and safe to share across workers.
pub struct IdealHandle {
    ctx: Ctx,
    generators: Vec<(String, Polynomial)>,
    degree_cap: Option<u32>,
    gb: OnceLock<GroebnerData>,
    /// Prefix of Hilbert-function values computed by the linear-algebra
    /// ladder, cached degree by degree.
    pub(crate) hf_linalg_cache: Mutex<Vec<u64>>,
}

impl IdealHandle {
    /// Build an ideal from named homogeneous generators.  Zero polynomials
    /// are dropped (they arise naturally as mod-p images of p-divisible
    /// classes); non-homogeneous generators are an error.
    pub fn new(ctx: &Ctx, generators: Vec<(String, Polynomial)>) -> Result<Self> {
        Self::with_cap(ctx, generators, None)
    }

    /// As `new`, with a Buchberger truncation degree: S-pairs above the cap
    /// are discarded, which is sound for all degree-wise questions up to the
    /// cap.  Reports must state when a basis is truncated.
    pub fn with_cap(
        ctx: &Ctx,
        generators: Vec<(String, Polynomial)>,
        degree_cap: Option<u32>,
    ) -> Result<Self> {
        let mut kept = Vec::with_capacity(generators.len());
        for (name, g) in generators {
            if !same_context(g.ctx(), ctx) {
                return Err(Error::Context(format!(
                    "generator `{name}` lives in a different ring context"
                )));
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::Grading(format!(
                    "generator `{name}` is not homogeneous"
                )));
            }
            kept.push((name, g));
        }
        Ok(IdealHandle {
            ctx: ctx.clone(),
            generators: kept,
            degree_cap,
            gb: OnceLock::new(),
            hf_linalg_cache: Mutex::new(Vec::new()),
        })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn generators(&self) -> &[(String, Polynomial)] {
        &self.generators
    }

    pub fn degree_cap(&self) -> Option<u32> {
        self.degree_cap
    }

    /// The reduced Groebner basis, computed on first access.
    pub fn groebner_basis(&self) -> &GroebnerData {
        self.gb.get_or_init(|| buchberger(self))
    }

    pub fn is_truncated(&self) -> bool {
        self.groebner_basis().truncated
    }

    /// Complete reduction: no term of the result is divisible by any basis
    /// leading term, and `f - result` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.reduce_with_quotients(f).0
    }

    /// Reduction that also returns the quotient against each basis element,
    /// so `f = sum_k q_k * basis_k + remainder` can be checked directly.
    pub fn reduce_with_quotients(&self, f: &Polynomial) -> (Polynomial, Vec<Polynomial>) {
        let data = self.groebner_basis();
        reduce(f, &data.basis, |e| &e.poly)
    }

    /// True iff `f` reduces to zero.
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// True iff every generator of `other` reduces to zero against `self`.
    pub fn contains_ideal(&self, other: &IdealHandle) -> Result<bool> {
        if !same_context(&self.ctx, &other.ctx) {
            return Err(Error::Context(
                "ideal containment across different contexts".into(),
            ));
        }
        Ok(other.generators.iter().all(|(_, g)| self.contains(g)))
    }

    /// Minimal generating set of the leading-term ideal: the leading
    /// monomials of the reduced basis.
    pub fn leading_term_ideal(&self) -> Vec<Monomial> {
        self.groebner_basis()
            .basis
            .iter()
            .map(|e| e.poly.leading().expect("basis elements nonzero").0.clone())
            .collect()
    }
}

/// `ideal_containment(inner, outer)` per the verification pipeline:
/// does `inner` sit inside `outer`?
pub fn ideal_containment(inner: &IdealHandle, outer: &IdealHandle) -> Result<bool> {
    outer.contains_ideal(inner)
}

/// Generic reduction against a list of monic reducers.  Returns the remainder
/// and the per-reducer quotients.
fn reduce<'c, E>(
    f: &Polynomial,
    reducers: &'c [E],
    poly_of: impl Fn(&'c E) -> &'c Polynomial,
) -> (Polynomial, Vec<Polynomial>) {
    let ctx = f.ctx().clone();
    let lts: Vec<(Monomial, &Polynomial)> = reducers
        .iter()
        .map(|e| {
            let p = poly_of(e);
            (p.leading().expect("reducers nonzero").0.clone(), p)
        })
        .collect();
    let mut quotients = vec![Polynomial::zero(&ctx); reducers.len()];
    let mut remainder_terms: Vec<(Monomial, FieldElement)> = Vec::new();
    let mut work = f.clone();
    'outer: while let Some((m, c)) = work.leading().map(|(m, c)| (m.clone(), c)) {
        for (k, (lt, g)) in lts.iter().enumerate() {
            if lt.divides(&m) {
                let shift = lt.div(&m).expect("divides");
                // reducers are monic: subtract c * shift * g.
                work = &work - &g.mul_term(&shift, c);
                quotients[k] =
                    &quotients[k] + &Polynomial::monomial(&ctx, shift, c.value() as i64);
                continue 'outer;
            }
        }
        remainder_terms.push((m.clone(), c));
        work = &work - &Polynomial::monomial(&ctx, m, c.value() as i64);
    }
    (Polynomial::from_terms(&ctx, remainder_terms), quotients)
}

struct WorkElement {
    poly: Polynomial,
    cofactors: Vec<Polynomial>,
    lt: Monomial,
}

fn buchberger(ideal: &IdealHandle) -> GroebnerData {
    let ctx = &ideal.ctx;
    let ngens = ideal.generators.len();
    let mut basis: Vec<WorkElement> = Vec::new();
    let mut truncated = false;

    let make_element = |poly: Polynomial, cofactors: Vec<Polynomial>| -> WorkElement {
        let (lt, lc) = {
            let (m, c) = poly.leading().expect("nonzero");
            (m.clone(), c)
        };
        let inv = lc.inv();
        WorkElement {
            poly: poly.scale(inv),
            cofactors: cofactors.iter().map(|c| c.scale(inv)).collect(),
            lt,
        }
    };

    for (i, (_, g)) in ideal.generators.iter().enumerate() {
        let mut cof = vec![Polynomial::zero(ctx); ngens];
        cof[i] = Polynomial::one(ctx);
        basis.push(make_element(g.clone(), cof));
    }

    // Pair queue in normal-strategy order: lcm degree first, then generator
    // indices, which makes the run deterministic for a fixed input order.
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push_pairs = |basis: &[WorkElement],
                          n: usize,
                          queue: &mut BTreeSet<(u32, usize, usize)>,
                          pending: &mut BTreeSet<(usize, usize)>,
                          truncated: &mut bool| {
        for i in 0..n {
            let lcm = basis[i].lt.lcm(&basis[n].lt);
            let deg = lcm.weighted_degree(ctx.weights());
            if let Some(cap) = ideal.degree_cap {
                if deg > cap {
                    *truncated = true;
                    continue;
                }
            }
            queue.insert((deg, i, n));
            pending.insert((i, n));
        }
    };
    for n in 1..basis.len() {
        push_pairs(&basis, n, &mut queue, &mut pending, &mut truncated);
    }

    while let Some(&(deg, i, j)) = queue.iter().next() {
        queue.remove(&(deg, i, j));
        pending.remove(&(i, j));

        // Buchberger's first criterion: coprime leading terms.
        if basis[i].lt.is_coprime(&basis[j].lt) {
            continue;
        }
        // Chain criterion: some k with LT_k | lcm(i,j) and both mixed pairs
        // already treated.
        let lcm = basis[i].lt.lcm(&basis[j].lt);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lt.divides(&lcm)
                && !pending.contains(&ordered(i, k))
                && !pending.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }

        // S-polynomial, with cofactors carried along.
        let ui = basis[i].lt.div(&lcm).expect("lcm divisible");
        let uj = basis[j].lt.div(&lcm).expect("lcm divisible");
        let one = FieldElement::one(ctx.prime());
        let spoly = &basis[i].poly.mul_term(&ui, one) - &basis[j].poly.mul_term(&uj, one);
        if spoly.is_zero() {
            continue;
        }
        let scof: Vec<Polynomial> = (0..ngens)
            .map(|g| {
                &basis[i].cofactors[g].mul_term(&ui, one)
                    - &basis[j].cofactors[g].mul_term(&uj, one)
            })
            .collect();

        let (rem, quots) = reduce(&spoly, &basis, |e| &e.poly);
        if rem.is_zero() {
            continue;
        }
        let mut rem_cof = scof;
        for (k, q) in quots.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for g in 0..ngens {
                rem_cof[g] = &rem_cof[g] - &(q * &basis[k].cofactors[g]);
            }
        }
        let n = basis.len();
        basis.push(make_element(rem, rem_cof));
        push_pairs(&basis, n, &mut queue, &mut pending, &mut truncated);
    }

    // Minimalize: drop elements whose leading term is divisible by another
    // kept element's, scanning in ascending leading-term order.
    let order = ctx.order();
    let weights = ctx.weights().to_vec();
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by(|&a, &b| order.cmp(&basis[a].lt, &basis[b].lt, &weights));
    let mut kept: Vec<usize> = Vec::new();
    for &i in &idx {
        if !kept.iter().any(|&k| basis[k].lt.divides(&basis[i].lt)) {
            kept.push(i);
        }
    }

    // Tail-reduce each kept element against the others.
    let minimal: Vec<WorkElement> = kept
        .iter()
        .map(|&i| WorkElement {
            poly: basis[i].poly.clone(),
            cofactors: basis[i].cofactors.clone(),
            lt: basis[i].lt.clone(),
        })
        .collect();
    let mut reduced: Vec<GbElement> = Vec::with_capacity(minimal.len());
    for (i, e) in minimal.iter().enumerate() {
        let others: Vec<&WorkElement> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, o)| o)
            .collect();
        let (rem, quots) = reduce(&e.poly, &others, |o| &o.poly);
        debug_assert!(!rem.is_zero(), "minimal element reduced away");
        let mut cof = e.cofactors.clone();
        for (k, q) in quots.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for g in 0..ideal.generators.len() {
                cof[g] = &cof[g] - &(q * &others[k].cofactors[g]);
            }
        }
        reduced.push(GbElement {
            poly: rem,
            cofactors: cof,
        });
    }

    GroebnerData {
        basis: reduced,
        truncated,
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, RingContext};

    fn ideal(ctx: &Ctx, gens: &[&str]) -> IdealHandle {
        let named = gens
            .iter()
            .enumerate()
            .map(|(i, s)| (format!("g{i}"), parse_polynomial(ctx, s).unwrap()))
            .collect();
        IdealHandle::new(ctx, named).unwrap()
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let ctx = RingContext::flag(3, 2);
        let i = IdealHandle::new(&ctx, vec![]).unwrap();
        assert!(i.groebner_basis().basis.is_empty());
        assert!(i.leading_term_ideal().is_empty());
        let f = parse_polynomial(&ctx, "t1^2 + t2").unwrap();
        assert_eq!(i.normal_form(&f), f);
        assert!(i.contains(&Polynomial::zero(&ctx)));
    }

    #[test]
    fn grevlex_example_leading_terms() {
        // (t1 + t2, t1 t2) has leading terms {t1, t2^2} under grevlex.
        let ctx = RingContext::flag(3, 2);
        let i = ideal(&ctx, &["t1 + t2", "t1*t2"]);
        let mut lts: Vec<Vec<u32>> = i
            .leading_term_ideal()
            .iter()
            .map(|m| m.exps().to_vec())
            .collect();
        lts.sort();
        assert_eq!(lts, vec![vec![0, 2], vec![1, 0]]);
    }

    #[test]
    fn generators_reduce_to_zero_and_combinations_track() {
        let ctx = RingContext::flag(2, 3);
        let i = ideal(&ctx, &["c2^2", "c2*c3", "c3^2", "c1^4"]);
        for (_, g) in i.generators() {
            assert!(i.contains(g));
        }
        // Every basis element must be the tracked combination of generators.
        for e in &i.groebner_basis().basis {
            let mut acc = Polynomial::zero(&ctx);
            for (cof, (_, g)) in e.cofactors.iter().zip(i.generators()) {
                acc = &acc + &(cof * g);
            }
            assert_eq!(acc, e.poly);
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_complete() {
        let ctx = RingContext::flag(3, 2);
        let i = ideal(&ctx, &["c1^2", "c1*c2", "c2^2"]);
        let f = parse_polynomial(&ctx, "t1^3 + t1*t2 + t2").unwrap();
        let nf = i.normal_form(&f);
        assert_eq!(i.normal_form(&nf), nf);
        // No term of nf is divisible by a basis leading term.
        for lt in i.leading_term_ideal() {
            for (m, _) in nf.terms() {
                assert!(!lt.divides(m));
            }
        }
        // f - nf lies in the ideal, witnessed by the tracked quotients.
        let (rem, quots) = i.reduce_with_quotients(&f);
        let mut acc = rem;
        for (q, e) in quots.iter().zip(&i.groebner_basis().basis) {
            acc = &acc + &(q * &e.poly);
        }
        assert_eq!(acc, f);
    }

    #[test]
    fn degree_zero_survives_proper_ideals() {
        let ctx = RingContext::flag(3, 2);
        let i = ideal(&ctx, &["c1^2", "c1*c2", "c2^2"]);
        let one = Polynomial::one(&ctx);
        assert_eq!(i.normal_form(&one), one);
    }

    #[test]
    fn membership_examples() {
        let ctx = RingContext::flag(3, 2);
        // c1 c2^2 is a multiple of a generator.
        let i = ideal(&ctx, &["c1^2", "c1*c2", "c2^2"]);
        assert!(i.contains(&parse_polynomial(&ctx, "c1*c2^2").unwrap()));
        // c1 c2 survives against (c1^2, c1^3, c2^3).
        let j = ideal(&ctx, &["c1^2", "c1^3", "c2^3"]);
        assert!(!j.contains(&parse_polynomial(&ctx, "c1*c2").unwrap()));
    }

    #[test]
    fn product_generator_membership_rank_4() {
        // p1 * pbar2 is itself a generator product of the squares ideal.
        let ctx = RingContext::flag(3, 4);
        let b: Vec<Polynomial> = ["p1", "pbar2", "p3", "p4"]
            .iter()
            .map(|s| parse_polynomial(&ctx, s).unwrap())
            .collect();
        let mut gens = Vec::new();
        for i in 0..4 {
            for j in i..4 {
                gens.push((format!("b{}b{}", i + 1, j + 1), &b[i] * &b[j]));
            }
        }
        let ker = IdealHandle::new(&ctx, gens).unwrap();
        let f = &b[0] * &b[1];
        assert!(ker.contains(&f));
    }

    #[test]
    fn ideal_containment_examples() {
        let ctx = RingContext::flag(2, 3);
        let ker = ideal(&ctx, &["c2^2", "c2*c3", "c3^2", "c1^4"]);
        let im = ideal(&ctx, &["c2^2", "c3^2", "c1^8"]);
        assert!(ideal_containment(&im, &ker).unwrap());
        assert!(ideal_containment(&ker, &ker).unwrap());
        assert!(!ideal_containment(&ker, &im).unwrap());
    }

    #[test]
    fn containment_spin9_style() {
        let ctx = RingContext::flag(2, 4);
        let ker = ideal(&ctx, &["c2^2", "c2*c3", "c3^2", "c4", "c1^8"]);
        let im = ideal(&ctx, &["c2^2", "c3^2", "c1^8", "c4^4"]);
        assert!(ideal_containment(&im, &ker).unwrap());
    }

    #[test]
    fn buchberger_criterion_on_cached_basis() {
        // All S-polynomials of the reduced basis reduce to zero, checked
        // without any pair-skipping shortcuts.
        let ctx = RingContext::flag(3, 2);
        for gens in [
            vec!["t1 + t2", "t1*t2"],
            vec!["c1^2", "c1*c2", "c2^2"],
            vec!["c1^2", "c1^3", "c2^3"],
        ] {
            let i = ideal(&ctx, &gens);
            let basis = &i.groebner_basis().basis;
            for a in 0..basis.len() {
                for b in a + 1..basis.len() {
                    let (la, _) = basis[a].poly.leading().unwrap();
                    let (lb, _) = basis[b].poly.leading().unwrap();
                    let lcm = la.lcm(lb);
                    let one = FieldElement::one(3);
                    let s = &basis[a].poly.mul_term(&la.div(&lcm).unwrap(), one)
                        - &basis[b].poly.mul_term(&lb.div(&lcm).unwrap(), one);
                    assert!(i.normal_form(&s).is_zero());
                }
            }
        }
    }

    #[test]
    fn reduced_basis_shape() {
        let ctx = RingContext::flag(3, 2);
        let i = ideal(&ctx, &["t1 + t2", "t1*t2", "t2^3"]);
        let basis = &i.groebner_basis().basis;
        for (a, ea) in basis.iter().enumerate() {
            assert_eq!(ea.poly.leading().unwrap().1.value(), 1, "monic");
            for (b, eb) in basis.iter().enumerate() {
                if a == b {
                    continue;
                }
                let la = ea.poly.leading().unwrap().0;
                // No leading term divides any term of another element.
                for (m, _) in eb.poly.terms() {
                    assert!(!la.divides(m), "basis not fully reduced");
                }
            }
        }
    }

    #[test]
    fn degree_cap_truncates_and_flags() {
        let ctx = RingContext::flag(2, 3);
        let gens: Vec<(String, Polynomial)> = ["c1^2", "c2^2", "c3^2"]
            .iter()
            .enumerate()
            .map(|(i, s)| (format!("g{i}"), parse_polynomial(&ctx, s).unwrap()))
            .collect();
        let capped = IdealHandle::with_cap(&ctx, gens.clone(), Some(4)).unwrap();
        let full = IdealHandle::new(&ctx, gens).unwrap();
        assert!(capped.is_truncated());
        assert!(!full.is_truncated());
        // Leading terms of degree <= cap agree.
        let mut a: Vec<_> = capped
            .leading_term_ideal()
            .into_iter()
            .filter(|m| m.weighted_degree(ctx.weights()) <= 4)
            .map(|m| m.exps().to_vec())
            .collect();
        let mut b: Vec<_> = full
            .leading_term_ideal()
            .into_iter()
            .filter(|m| m.weighted_degree(ctx.weights()) <= 4)
            .map(|m| m.exps().to_vec())
            .collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_inhomogeneous_generators() {
        let ctx = RingContext::flag(3, 2);
        let g = parse_polynomial(&ctx, "t1 + 1").unwrap();
        assert!(IdealHandle::new(&ctx, vec![("g".into(), g)]).is_err());
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let ctx = RingContext::flag(2, 3);
        let i = ideal(&ctx, &["t1*t2", "t3^2"]);
        let mut lts: Vec<Vec<u32>> = i
            .leading_term_ideal()
            .iter()
            .map(|m| m.exps().to_vec())
            .collect();
        lts.sort();
        assert_eq!(lts, vec![vec![0, 0, 2], vec![1, 1, 0]]);
    }
}
