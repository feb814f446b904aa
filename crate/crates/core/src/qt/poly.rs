//! Sparse bivariate polynomials in `q`, `t` with integer coefficients.
//!
//! Terms are kept sorted by `(q_exp, t_exp)` in strictly descending lexicographic
//! order with no zero coefficients, so structural equality is polynomial equality.
//! The gcd first tries the heuristic method (evaluate at large integers, take
//! the integer gcd, lift by balanced digits, confirm by division). When that
//! fails it treats a polynomial as univariate in `q` over `Z[t]` and runs a
//! primitive pseudo-remainder sequence, with contents computed recursively in `Z[t]`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(q, t)`.
pub type Exp = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Exp, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(qe: u32, te: u32, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![((qe, te), c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp, BigInt)>>(terms: I) -> Self {
        let mut acc: HashMap<Exp, BigInt> = HashMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Exp, BigInt>) -> Self {
        let mut terms: Vec<(Exp, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| std::cmp::Reverse(a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// The coefficient if this is a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [((0, 0), c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exp) -> BigInt {
        self.terms
            .binary_search_by(|probe| e.cmp(&probe.0))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    /// Leading term under lexicographic order with `q > t`.
    pub fn leading_lex(&self) -> Option<&(Exp, BigInt)> {
        self.terms.first()
    }

    /// Leading term under graded-lex order with `q > t`.
    pub fn leading_graded(&self) -> Option<&(Exp, BigInt)> {
        self.terms
            .iter()
            .max_by(|a, b| graded_key(a.0).cmp(&graded_key(b.0)))
    }

    /// Terms sorted graded-lex descending (total degree, then `q` exponent).
    pub fn graded_terms(&self) -> Vec<(Exp, BigInt)> {
        let mut v = self.terms.clone();
        v.sort_by_key(|a| std::cmp::Reverse(graded_key(a.0)));
        v
    }

    pub fn q_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .0).max().unwrap_or(0)
    }

    pub fn t_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .1).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .0 + t.0 .1).max().unwrap_or(0)
    }

    /// Smallest exponents of `q` and `t` across all terms.
    pub fn min_exps(&self) -> Exp {
        let mq = self.terms.iter().map(|t| t.0 .0).min().unwrap_or(0);
        let mt = self.terms.iter().map(|t| t.0 .1).min().unwrap_or(0);
        (mq, mt)
    }

    /// Non-negative gcd of the integer coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 > b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 > a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            let ((oq, ot), c) = &other.terms[0];
            return self.mul_term(*oq, *ot, c);
        }
        if self.terms.len() == 1 {
            let ((sq, st), c) = &self.terms[0];
            return other.mul_term(*sq, *st, c);
        }
        let mut acc: HashMap<Exp, BigInt> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = (ea.0 + eb.0, ea.1 + eb.1);
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    /// Multiplies by `c * q^qe * t^te`.
    pub fn mul_term(&self, qe: u32, te: u32, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|((a, b), d)| ((a + qe, b + te), d * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(0, 0, c)
    }

    /// Divides every coefficient by `c`; panics if a division is inexact.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, d)| {
                    let (quo, rem) = d.div_rem(c);
                    assert!(rem.is_zero(), "inexact scalar division");
                    (*e, quo)
                })
                .collect(),
        }
    }

    /// Divides by `q^qe t^te`; panics if some term is not divisible.
    pub fn div_monomial(&self, qe: u32, te: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a - qe, b - te), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self` in `Z[q,t]`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if d.is_one() {
            return Some(self.clone());
        }
        if let Some(c) = d.as_constant() {
            if self.terms.iter().any(|(_, x)| !x.is_multiple_of(&c)) {
                return None;
            }
            return Some(self.div_scalar_exact(&c));
        }
        let ((dq, dt), dc) = d.terms[0].clone();
        if d.terms.len() == 1 {
            if self
                .terms
                .iter()
                .any(|((a, b), x)| *a < dq || *b < dt || !x.is_multiple_of(&dc))
            {
                return None;
            }
            return Some(Poly {
                terms: self
                    .terms
                    .iter()
                    .map(|((a, b), x)| ((a - dq, b - dt), x / &dc))
                    .collect(),
            });
        }
        let mut rem = self.clone();
        let mut quot: Vec<(Exp, BigInt)> = Vec::new();
        while let Some(((rq, rt), rc)) = rem.terms.first().cloned() {
            if rq < dq || rt < dt {
                return None;
            }
            let (c, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let (mq, mt) = (rq - dq, rt - dt);
            rem = rem.sub(&d.mul_term(mq, mt, &c));
            quot.push(((mq, mt), c));
        }
        quot.sort_unstable_by_key(|a| std::cmp::Reverse(a.0));
        Some(Poly { terms: quot })
    }

    /// Greatest common divisor in `Z[q,t]`, normalized with positive lex-leading coefficient.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.normalize_sign();
        }
        if b.is_zero() {
            return a.normalize_sign();
        }
        let ig = a.content().gcd(&b.content());
        let (va, wa) = a.min_exps();
        let (vb, wb) = b.min_exps();
        let (mq, mt) = (va.min(vb), wa.min(wb));
        let unit = Poly::monomial(mq, mt, ig.clone());
        if a.is_monomial() || b.is_monomial() {
            return unit;
        }
        let ap = a.div_monomial(va, wa).div_scalar_exact(&a.content());
        let bp = b.div_monomial(vb, wb).div_scalar_exact(&b.content());
        if ap == bp {
            return unit.mul(&ap).normalize_sign();
        }
        if ap.as_constant().is_some() || bp.as_constant().is_some() {
            return unit;
        }
        if let Some(g) = heuristic_gcd(&ap, &bp) {
            return unit.mul(&g).normalize_sign();
        }
        let g = dense_gcd(to_dense(&ap), to_dense(&bp));
        unit.mul(&from_dense(&g)).normalize_sign()
    }

    /// Multiplies by -1 if needed so that the lex-leading coefficient is positive.
    pub fn normalize_sign(&self) -> Poly {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for ((a, b), c) in &self.terms {
            acc += BigRational::from_integer(c.clone()) * num_traits::pow(q.clone(), *a as usize) * num_traits::pow(t.clone(), *b as usize);
        }
        acc
    }

    /// Substitutes `q -> q^a t^b`, `t -> q^c t^d` (non-negative exponents).
    pub fn subs_monomial(&self, q_to: Exp, t_to: Exp) -> Poly {
        Self::from_terms(self.terms.iter().map(|((x, y), c)| {
            (
                (x * q_to.0 + y * t_to.0, x * q_to.1 + y * t_to.1),
                c.clone(),
            )
        }))
    }

    /// The polynomial in `t` obtained by setting `q = 0`.
    pub fn at_q_zero(&self) -> Poly {
        Poly {
            terms: self.terms.iter().filter(|t| t.0 .0 == 0).cloned().collect(),
        }
    }

    /// Substitutes `q -> q^2`, `t -> t^2` without re-sorting work beyond the map.
    pub fn square_vars(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((2 * a, 2 * b), c.clone()))
                .collect(),
        }
    }
}

fn max_norm(p: &Poly) -> BigInt {
    p.terms.iter().map(|(_, c)| c.abs()).max().unwrap_or_default()
}

/// Replaces `t` by `xi`, giving a polynomial in `q` alone.
fn eval_t(p: &Poly, xi: &BigInt) -> Poly {
    Poly::from_terms(p.terms.iter().map(|((a, b), c)| ((*a, 0), c * xi.pow(*b))))
}

/// Balanced base-`xi` digits of `c`, least significant first.
fn balanced_digits(c: &BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half = xi / 2;
    let mut c = c.clone();
    let mut out = Vec::new();
    while !c.is_zero() {
        let mut d = c.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        c = (&c - &d) / xi;
        out.push(d);
    }
    out
}

/// Lifts each coefficient to a polynomial in variable `t` (when `in_t`) or `q`.
fn lift(p: &Poly, xi: &BigInt, in_t: bool) -> Poly {
    let mut terms = Vec::new();
    for ((a, _), c) in &p.terms {
        for (i, d) in balanced_digits(c, xi).into_iter().enumerate() {
            let e = if in_t { (*a, i as u32) } else { (i as u32, 0) };
            terms.push((e, d));
        }
    }
    let g = Poly::from_terms(terms);
    let c = g.content();
    if c.is_zero() {
        return g;
    }
    g.div_scalar_exact(&c).normalize_sign()
}

fn divides_both(g: &Poly, a: &Poly, b: &Poly) -> bool {
    !g.is_zero() && a.exact_div(g).is_some() && b.exact_div(g).is_some()
}

fn next_xi(xi: &BigInt) -> BigInt {
    xi * BigInt::from(73794) / BigInt::from(27011)
}

/// Heuristic gcd of univariate polynomials in `q`, both primitive.
fn heuristic_gcd_q(a: &Poly, b: &Poly) -> Option<Poly> {
    let mut xi: BigInt = BigInt::from(2) * max_norm(a).min(max_norm(b)) + 29;
    for _ in 0..6 {
        let ev = |p: &Poly| -> BigInt { p.terms.iter().map(|((e, _), c)| c * xi.pow(*e)).sum() };
        let gamma = ev(a).gcd(&ev(b));
        let g = lift(&Poly::constant(gamma), &xi, false);
        if divides_both(&g, a, b) {
            return Some(g);
        }
        xi = next_xi(&xi);
    }
    None
}

/// Pseudo-remainder gcd of univariate polynomials in `q`.
fn prs_gcd_q(a: &Poly, b: &Poly) -> Poly {
    let dense = |p: &Poly| -> UPoly {
        let mut v = vec![BigInt::zero(); p.q_degree() as usize + 1];
        for ((e, _), c) in &p.terms {
            v[*e as usize] = c.clone();
        }
        v
    };
    let g = u_gcd(&dense(a), &dense(b));
    Poly::from_terms(g.into_iter().enumerate().map(|(e, c)| ((e as u32, 0), c)))
}

/// Heuristic gcd of primitive polynomials with no monomial factor; `None` when it gives up.
fn heuristic_gcd(a: &Poly, b: &Poly) -> Option<Poly> {
    if a.t_degree() == 0 && b.t_degree() == 0 {
        return heuristic_gcd_q(a, b);
    }
    let mut xi: BigInt = BigInt::from(2) * max_norm(a).min(max_norm(b)) + 29;
    for _ in 0..6 {
        let (ea, eb) = (eval_t(a, &xi), eval_t(b, &xi));
        if ea.q_degree() == a.q_degree() && eb.q_degree() == b.q_degree() {
            let ca = ea.content().gcd(&eb.content());
            let (pa, pb) = (ea.div_scalar_exact(&ea.content()), eb.div_scalar_exact(&eb.content()));
            let gq = if pa.is_one() || pb.is_one() {
                Poly::one()
            } else {
                heuristic_gcd_q(&pa, &pb).unwrap_or_else(|| prs_gcd_q(&pa, &pb))
            };
            let g = lift(&gq.scale(&ca), &xi, true);
            if divides_both(&g, a, b) {
                return Some(g);
            }
        }
        xi = next_xi(&xi);
    }
    None
}

fn graded_key(e: Exp) -> (u32, u32) {
    (e.0 + e.1, e.0)
}

// Dense helpers. A `UPoly` is a polynomial in t (index = degree); a `Dense` is a
// polynomial in q (index = degree) whose coefficients are `UPoly`s.

type UPoly = Vec<BigInt>;
type Dense = Vec<UPoly>;

fn to_dense(p: &Poly) -> Dense {
    let dq = p.q_degree() as usize;
    let mut out: Dense = vec![Vec::new(); dq + 1];
    for ((a, b), c) in &p.terms {
        let row = &mut out[*a as usize];
        if row.len() <= *b as usize {
            row.resize(*b as usize + 1, BigInt::zero());
        }
        row[*b as usize] = c.clone();
    }
    out
}

fn from_dense(d: &Dense) -> Poly {
    let mut terms = Vec::new();
    for (a, row) in d.iter().enumerate().rev() {
        for (b, c) in row.iter().enumerate().rev() {
            if !c.is_zero() {
                terms.push(((a as u32, b as u32), c.clone()));
            }
        }
    }
    Poly { terms }
}

fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_is_zero(p: &UPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn u_deg(p: &UPoly) -> usize {
    p.len().saturating_sub(1)
}

fn u_content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_scale_div(p: &UPoly, c: &BigInt) -> UPoly {
    p.iter().map(|x| x / c).collect()
}

fn u_primitive(p: &UPoly) -> UPoly {
    let mut c = u_content(p);
    if p.last().is_some_and(|x| x.is_negative()) {
        c = -c;
    }
    if c.is_zero() {
        return Vec::new();
    }
    u_scale_div(p, &c)
}

/// Pseudo-remainder over Z (sign and scaling are discarded by the caller).
fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    u_trim(&mut r);
    let db = u_deg(b);
    let lb = b[db].clone();
    while !r.is_empty() && u_deg(&r) >= db {
        let dr = u_deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (j, y) in b.iter().enumerate() {
            r[j + shift] -= &lr * y;
        }
        u_trim(&mut r);
    }
    r
}

fn u_exact_div(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    u_trim(&mut r);
    if r.is_empty() {
        return Vec::new();
    }
    let db = u_deg(b);
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); u_deg(&r) + 1 - db.min(u_deg(&r))];
    while !r.is_empty() && u_deg(&r) >= db {
        let dr = u_deg(&r);
        let (c, rem) = r[dr].div_rem(lb);
        assert!(rem.is_zero(), "inexact univariate division");
        let shift = dr - db;
        for (j, y) in b.iter().enumerate() {
            r[j + shift] -= &c * y;
        }
        q[shift] = c;
        u_trim(&mut r);
    }
    assert!(r.is_empty(), "inexact univariate division");
    u_trim(&mut q);
    q
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if u_is_zero(a) {
        return u_primitive_with_content(b);
    }
    if u_is_zero(b) {
        return u_primitive_with_content(a);
    }
    let ig = u_content(a).gcd(&u_content(b));
    let mut x = u_primitive(a);
    let mut y = u_primitive(b);
    if u_deg(&x) < u_deg(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() && u_deg(&y) > 0 {
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    let g = if y.is_empty() { x } else { vec![BigInt::one()] };
    let g = u_primitive(&g);
    g.into_iter().map(|c| c * &ig).collect()
}

fn u_primitive_with_content(p: &UPoly) -> UPoly {
    let mut p = p.clone();
    u_trim(&mut p);
    if p.last().is_some_and(|x| x.is_negative()) {
        p = p.into_iter().map(|x| -x).collect();
    }
    p
}

fn d_trim(p: &mut Dense) {
    while p.last().is_some_and(u_is_zero) {
        p.pop();
    }
}

fn d_deg(p: &Dense) -> usize {
    p.len().saturating_sub(1)
}

fn d_content(p: &Dense) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if u_is_zero(c) {
            continue;
        }
        g = if g.is_empty() { u_primitive_with_content(c) } else { u_gcd(&g, c) };
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn d_div_content(p: &Dense, c: &UPoly) -> Dense {
    if c.len() == 1 && c[0].is_one() {
        return p.clone();
    }
    p.iter()
        .map(|x| if u_is_zero(x) { Vec::new() } else { u_exact_div(x, c) })
        .collect()
}

fn d_primitive(p: &Dense) -> Dense {
    let c = d_content(p);
    if c.is_empty() {
        return Vec::new();
    }
    let mut out = d_div_content(p, &c);
    if let Some(top) = out.last() {
        if top.last().is_some_and(|x| x.is_negative()) {
            out = out
                .into_iter()
                .map(|row| row.into_iter().map(|x| -x).collect())
                .collect();
        }
    }
    out
}

fn d_prem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    d_trim(&mut r);
    let db = d_deg(b);
    let lb = b[db].clone();
    while !r.is_empty() && d_deg(&r) >= db {
        let dr = d_deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x = u_mul(x, &lb);
        }
        for (j, y) in b.iter().enumerate() {
            let sub = u_mul(&lr, y);
            let tgt = &mut r[j + shift];
            if tgt.len() < sub.len() {
                tgt.resize(sub.len(), BigInt::zero());
            }
            for (k, s) in sub.into_iter().enumerate() {
                tgt[k] -= s;
            }
            u_trim(tgt);
        }
        d_trim(&mut r);
    }
    r
}

/// gcd of two polynomials that are primitive over Z and not divisible by q or t.
fn dense_gcd(a: Dense, b: Dense) -> Dense {
    let ca = d_content(&a);
    let cb = d_content(&b);
    let c = u_gcd(&ca, &cb);
    let mut x = d_div_content(&a, &ca);
    let mut y = d_div_content(&b, &cb);
    if d_deg(&x) < d_deg(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() && d_deg(&y) > 0 {
        let r = d_prem(&x, &y);
        x = y;
        y = d_primitive(&r);
    }
    let g = if y.is_empty() { d_primitive(&x) } else { vec![vec![BigInt::one()]] };
    g.iter().map(|row| u_mul(row, &c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((u32, u32), i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        // (1 - q t)(1 + t) and (1 - q t)(1 - q^2)
        let f = p(&[((0, 0), 1), ((1, 1), -1)]);
        let a = f.mul(&p(&[((0, 0), 1), ((0, 1), 1)]));
        let b = f.mul(&p(&[((0, 0), 1), ((2, 0), -1)]));
        let g = Poly::gcd(&a, &b);
        assert_eq!(g, f.normalize_sign());
    }

    #[test]
    fn gcd_with_content_and_monomials() {
        let a = p(&[((2, 1), 6), ((1, 1), 4)]); // 2 q t (3q + 2)
        let b = p(&[((1, 2), 9), ((0, 2), 6)]); // 3 t^2 (3q + 2)
        assert_eq!(Poly::gcd(&a, &b), p(&[((1, 1), 3), ((0, 1), 2)]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = p(&[((1, 0), 1), ((0, 1), -1)]);
        let b = p(&[((1, 0), 1), ((0, 1), 1)]);
        assert!(Poly::gcd(&a, &b).is_one());
    }

    #[test]
    fn exact_division() {
        let a = p(&[((0, 0), 1), ((0, 2), -1)]);
        let b = p(&[((0, 0), 1), ((0, 1), -1)]);
        assert_eq!(a.exact_div(&b).unwrap(), p(&[((0, 0), 1), ((0, 1), 1)]));
        assert!(b.exact_div(&a).is_none());
    }


    #[test]
    fn heuristic_matches_prs() {
        let f = p(&[((0, 0), 1), ((1, 2), -1)]);
        let g = p(&[((0, 0), 1), ((3, 0), -1), ((1, 1), 2)]);
        let a = f.mul(&g).mul(&p(&[((0, 0), 1), ((0, 1), 1)]));
        let b = f.mul(&g).mul(&p(&[((0, 0), 2), ((2, 1), -1)]));
        let prs = from_dense(&dense_gcd(to_dense(&a), to_dense(&b))).normalize_sign();
        assert_eq!(heuristic_gcd(&a, &b).unwrap(), prs);
        assert_eq!(Poly::gcd(&a, &b), prs);
    }

    #[test]
    fn gcd_univariate_in_t() {
        // 1 - t^4 and 1 - t^6 share 1 - t^2
        let a = p(&[((0, 0), 1), ((0, 4), -1)]);
        let b = p(&[((0, 0), 1), ((0, 6), -1)]);
        let g = Poly::gcd(&a, &b);
        assert_eq!(g, p(&[((0, 0), 1), ((0, 2), -1)]).normalize_sign());
    }
}
