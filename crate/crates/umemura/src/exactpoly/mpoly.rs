//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! `MPoly<N>` is a polynomial in a fixed list of `N` variables with
//! `BigRational` coefficients, stored as a map from exponent vectors to
//! nonzero coefficients. The map is a `BTreeMap`, so equality of values is
//! equality of polynomials and iteration order is deterministic.
//!
//! The crate works in two variable lists:
//!   * `(z, w, a, b)` for the Umemura families (`Poly4`, names [`ZWAB`]);
//!   * `(v, B1, B2)` for the Toda ladder in the variable
//!     v = sqrt(t/(t-1)) + sqrt((t-1)/t) (`Poly3`, names [`VBB`]).
//!
//! Variables 0 and 1 of a `Poly4` are always the pair tied by the quotient
//! relation w^2 - z^2 = 1; the derivation [`delta`](super::delta) and the
//! Hirota bracket act on that pair.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// The scalar of the exact kernel: an arbitrary-precision rational, always in
/// lowest terms with positive denominator (guaranteed by `num_rational`).
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Lossy conversion to f64 (for numeric evaluation only).
pub trait ToF64Lossy {
    fn to_f64_lossy(&self) -> f64;
}

impl ToF64Lossy for Rational {
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Rational n/d.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector; entry `i` is the exponent of variable `i`.
pub type Exps<const N: usize> = [u32; N];

/// Variable names for the `(z, w, a, b)` family polynomials.
pub const ZWAB: [&str; 4] = ["z", "w", "a", "b"];
/// Variable names after the substitution a = -4 b1^2, b = -4 b2^2.
pub const ZWB12: [&str; 4] = ["z", "w", "b1", "b2"];
/// Variable names for the Toda ladder polynomials.
pub const VBB: [&str; 3] = ["v", "B1", "B2"];

/// A sparse multivariate polynomial over `Rational` in `N` ordered variables.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly<const N: usize> {
    terms: BTreeMap<Exps<N>, Rational>,
}

/// Four-variable polynomial `(z, w, a, b)`.
pub type Poly4 = MPoly<4>;
/// Three-variable polynomial `(v, B1, B2)`.
pub type Poly3 = MPoly<3>;

impl<const N: usize> MPoly<N> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert([0; N], c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    /// The polynomial consisting of the single variable `var`.
    pub fn var(var: usize) -> Self {
        Self::monomial(Rational::one(), {
            let mut e = [0; N];
            e[var] = 1;
            e
        })
    }

    pub fn monomial(c: Rational, exps: Exps<N>) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps<N>, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of an exponent vector (zero if absent).
    pub fn coeff(&self, exps: &Exps<N>) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&[0; N])
    }

    /// Returns `Some(c)` if the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.terms.len() == 1 {
            self.terms.get(&[0; N]).cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    fn insert_add(map: &mut BTreeMap<Exps<N>, Rational>, exps: Exps<N>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match map.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_term(&mut self, exps: Exps<N>, c: Rational) {
        Self::insert_add(&mut self.terms, exps, c);
    }

    fn all_integer(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `var`.
    pub fn deriv(&self, var: usize) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut f = *e;
            f[var] -= 1;
            Self::insert_add(&mut out, f, c * rat(e[var] as i64));
        }
        MPoly { terms: out }
    }

    /// Substitute variable `var` by a polynomial in the same variable list.
    pub fn subst(&self, var: usize, image: &MPoly<N>) -> MPoly<N> {
        let max_e = self.degree_in(var);
        let mut powers = Vec::with_capacity(max_e as usize + 1);
        powers.push(MPoly::<N>::one());
        for _ in 0..max_e {
            let next = powers.last().unwrap() * image;
            powers.push(next);
        }
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut rest = *e;
            let k = rest[var];
            rest[var] = 0;
            out += &MPoly::monomial(c.clone(), rest) * &powers[k as usize];
        }
        out
    }

    /// Substitute variable `var` by a rational constant.
    pub fn subst_const(&self, var: usize, value: &Rational) -> MPoly<N> {
        self.subst(var, &MPoly::constant(value.clone()))
    }

    /// Evaluation homomorphism into `MPoly<M>`: variable `i` maps to
    /// `images[i]`.
    pub fn map_vars<const M: usize>(&self, images: &[MPoly<M>; N]) -> MPoly<M> {
        // Per-variable power caches keep repeated monomial images cheap.
        let mut powers: Vec<Vec<MPoly<M>>> =
            (0..N).map(|i| vec![MPoly::<M>::one(), images[i].clone()]).collect();
        let mut out = MPoly::<M>::zero();
        for (e, c) in &self.terms {
            let mut term = MPoly::<M>::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = &term * &powers[i][k as usize];
                }
            }
            out += term;
        }
        out
    }

    /// Evaluate at a point with `f64` coordinates.
    pub fn eval_f64(&self, point: [f64; N]) -> f64 {
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut t = c.to_f64().unwrap_or(f64::NAN);
            for (i, &k) in e.iter().enumerate() {
                t *= point[i].powi(k as i32);
            }
            acc += t;
        }
        acc
    }

    /// Exact division: returns `r` with `r * q == self`, or the failure
    /// witness. Division is by leading terms in graded-lex order; over a
    /// field this terminates with zero remainder exactly when `q` divides.
    pub fn exact_div(&self, q: &MPoly<N>) -> Result<MPoly<N>, DivError<N>> {
        if q.is_zero() {
            return Err(DivError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(MPoly::zero());
        }
        // Dense single-pass long division when the dividend's degree box is
        // compact. When the division is exact every intermediate monomial
        // stays inside the box; an excursion outside it can only mean the
        // division fails, and the sparse path recomputes the witness.
        if let Some(result) = self.dense_exact_div(q) {
            return result;
        }
        let (qe, qc) = q.leading_term();
        // Remainder keyed by graded-lex order so the leading term is the
        // last entry and updates stay in place.
        let mut rem: BTreeMap<GrlexKey<N>, Rational> =
            self.terms.iter().map(|(e, c)| (GrlexKey(*e), c.clone())).collect();
        let mut quot = MPoly::zero();
        while let Some((&GrlexKey(re), rc)) = rem.iter().next_back() {
            let mut fe = [0u32; N];
            let mut divisible = true;
            for i in 0..N {
                if re[i] < qe[i] {
                    divisible = false;
                    break;
                }
                fe[i] = re[i] - qe[i];
            }
            if !divisible {
                let remainder = MPoly {
                    terms: rem.into_iter().map(|(k, c)| (k.0, c)).collect(),
                };
                return Err(DivError::NotDivisible { remainder });
            }
            let fc = rc / qc;
            for (e2, c2) in &q.terms {
                let mut e = fe;
                for i in 0..N {
                    e[i] += e2[i];
                }
                let dec = &fc * c2;
                match rem.entry(GrlexKey(e)) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-dec);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= dec;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quot.add_term(fe, fc);
        }
        Ok(quot)
    }

    /// Dense descending-order long division; `None` means the box is too
    /// large (or an index escaped it) and the sparse path must run.
    fn dense_exact_div(&self, q: &MPoly<N>) -> Option<Result<MPoly<N>, DivError<N>>> {
        const MAX_DIV_CELLS: u64 = 2_000_000;
        let mut dims = [0usize; N];
        let mut volume: u64 = 1;
        for i in 0..N {
            dims[i] = self.degree_in(i) as usize + 1;
            volume = volume.checked_mul(dims[i] as u64)?;
            if volume > MAX_DIV_CELLS {
                return None;
            }
        }
        let mut strides = [0usize; N];
        let mut s = 1usize;
        for i in (0..N).rev() {
            strides[i] = s;
            s *= dims[i];
        }
        let index = |e: &Exps<N>| -> usize {
            (0..N).map(|i| e[i] as usize * strides[i]).sum()
        };
        let unindex = |mut idx: usize| -> Exps<N> {
            let mut e = [0u32; N];
            for i in 0..N {
                e[i] = (idx / strides[i]) as u32;
                idx %= strides[i];
            }
            e
        };

        // Box cells in descending graded-lex order.
        let mut order: Vec<u32> = (0..volume as u32).collect();
        order.sort_unstable_by(|a, b| {
            grlex(&unindex(*b as usize), &unindex(*a as usize))
        });

        let (qe, qc) = q.leading_term();

        // Integer dividend and divisor: run the whole division on raw
        // integers (quotient coefficients are checked to stay integral, and
        // if one is not, the rational path below re-runs).
        'int: {
            if !(self.all_integer() && q.all_integer()) {
                break 'int;
            }
            let qc_int = qc.numer();
            let q_off: Vec<(Exps<N>, &BigInt)> = q
                .terms
                .iter()
                .filter(|(e, _)| **e != qe)
                .map(|(e, c)| (*e, c.numer()))
                .collect();
            let mut cells: Vec<BigInt> = vec![BigInt::from(0); volume as usize];
            for (e, c) in &self.terms {
                cells[index(e)] = c.numer().clone();
            }
            let mut quot = MPoly::zero();
            for &cell in &order {
                let idx = cell as usize;
                if cells[idx].is_zero() {
                    continue;
                }
                let e = unindex(idx);
                let mut fe = [0u32; N];
                for i in 0..N {
                    if e[i] < qe[i] {
                        let terms: BTreeMap<Exps<N>, Rational> = cells
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(j, c)| (unindex(j), Rational::from_integer(c.clone())))
                            .collect();
                        return Some(Err(DivError::NotDivisible {
                            remainder: MPoly { terms },
                        }));
                    }
                    fe[i] = e[i] - qe[i];
                }
                use num_integer::Integer;
                let (fc, frem) = cells[idx].div_rem(qc_int);
                if !frem.is_zero() {
                    break 'int; // rational quotient coefficient
                }
                cells[idx] = BigInt::from(0);
                for (e2, n2) in &q_off {
                    let mut t = fe;
                    let mut ok = true;
                    for i in 0..N {
                        t[i] += e2[i];
                        if t[i] as usize >= dims[i] {
                            ok = false;
                            break;
                        }
                    }
                    if !ok {
                        return None; // escaped the box; sparse path decides
                    }
                    cells[index(&t)] -= &fc * *n2;
                }
                quot.add_term(fe, Rational::from_integer(fc));
            }
            return Some(Ok(quot));
        }

        let mut cells: Vec<Rational> = vec![Rational::zero(); volume as usize];
        for (e, c) in &self.terms {
            cells[index(e)] = c.clone();
        }
        let q_offsets: Vec<(Exps<N>, &Rational)> = q
            .terms
            .iter()
            .filter(|(e, _)| **e != qe)
            .map(|(e, c)| (*e, c))
            .collect();

        let mut quot = MPoly::zero();
        for &cell in &order {
            let idx = cell as usize;
            if cells[idx].is_zero() {
                continue;
            }
            let e = unindex(idx);
            let mut fe = [0u32; N];
            for i in 0..N {
                if e[i] < qe[i] {
                    // Leading term not divisible: collect the remainder.
                    let terms: BTreeMap<Exps<N>, Rational> = cells
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(j, c)| (unindex(j), c.clone()))
                        .collect();
                    return Some(Err(DivError::NotDivisible {
                        remainder: MPoly { terms },
                    }));
                }
                fe[i] = e[i] - qe[i];
            }
            let fc = &cells[idx] / qc;
            cells[idx] = Rational::zero();
            for (e2, c2) in &q_offsets {
                let mut t = fe;
                let mut ok = true;
                for i in 0..N {
                    t[i] += e2[i];
                    if t[i] as usize >= dims[i] {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    return None; // escaped the box; sparse path decides
                }
                let dec = &fc * *c2;
                cells[index(&t)] -= dec;
            }
            quot.add_term(fe, fc);
        }
        Some(Ok(quot))
    }

    /// Leading term in graded-lex order. Panics on the zero polynomial.
    fn leading_term(&self) -> (Exps<N>, &Rational) {
        let (e, c) = self
            .terms
            .iter()
            .max_by(|(e1, _), (e2, _)| grlex(e1, e2))
            .expect("leading term of zero polynomial");
        (*e, c)
    }

    /// Canonical text form: terms sorted by total degree then lexicographic
    /// exponent order (both descending), coefficients as `num/den`.
    pub fn to_text(&self, names: &[&str; N]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Exps<N>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        let mut out = String::new();
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            write!(out, "{}", fmt_coeff(&c.abs())).unwrap();
            for (v, &k) in e.iter().enumerate() {
                if k == 1 {
                    write!(out, "*{}", names[v]).unwrap();
                } else if k > 1 {
                    write!(out, "*{}^{}", names[v], k).unwrap();
                }
            }
        }
        out
    }

    /// LaTeX form with the same term order as [`to_text`](Self::to_text).
    pub fn to_latex(&self, names: &[&str; N]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Exps<N>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        let mut out = String::new();
        for (i, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let a = c.abs();
            let unit = a.is_one() && e.iter().any(|&k| k > 0);
            if !unit {
                if a.denom().is_one() {
                    write!(out, "{}", a.numer()).unwrap();
                } else {
                    write!(out, "\\frac{{{}}}{{{}}}", a.numer(), a.denom()).unwrap();
                }
            }
            for (v, &k) in e.iter().enumerate() {
                if k == 1 {
                    write!(out, " {}", names[v]).unwrap();
                } else if k > 1 {
                    write!(out, " {}^{{{}}}", names[v], k).unwrap();
                }
            }
        }
        out.trim().to_string()
    }

    /// JSON-ready list of terms in the canonical order.
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        let mut keys: Vec<&Exps<N>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        keys.iter()
            .map(|e| JsonTerm {
                coeff: fmt_coeff(&self.terms[*e]),
                exps: e.to_vec(),
            })
            .collect()
    }

    /// Parse the canonical text form back. Accepts what `to_text` emits plus
    /// harmless variations (leading `+`, `num/den` with explicit sign).
    pub fn parse(input: &str, names: &[&str; N]) -> Result<Self, ParseError> {
        let s = input.trim();
        if s.is_empty() {
            return Err(ParseError("empty input".into()));
        }
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        // Split into signed terms at top level (no parentheses in the form).
        let mut terms: Vec<(i32, String)> = Vec::new();
        let mut sign = 1i32;
        let mut cur = String::new();
        let mut chars = s.chars().peekable();
        while let Some(ch) = chars.next() {
            match ch {
                '+' | '-' => {
                    // Sign separators are surrounded by the term text; an
                    // exponent like ^2 never contains signs in this format.
                    if cur.trim().is_empty() && terms.is_empty() && ch == '-' && sign == 1 {
                        sign = -1;
                    } else if cur.trim().is_empty() && terms.is_empty() && ch == '+' {
                        // leading plus
                    } else {
                        terms.push((sign, std::mem::take(&mut cur)));
                        sign = if ch == '-' { -1 } else { 1 };
                    }
                }
                _ => cur.push(ch),
            }
        }
        terms.push((sign, cur));
        for (sgn, body) in terms {
            let body = body.trim();
            if body.is_empty() {
                return Err(ParseError("dangling sign".into()));
            }
            let mut coeff = Rational::one();
            let mut exps = [0u32; N];
            let mut saw_coeff = false;
            for factor in body.split('*') {
                let f = factor.trim();
                if f.is_empty() {
                    return Err(ParseError(format!("empty factor in `{body}`")));
                }
                if f.chars().next().unwrap().is_ascii_digit() {
                    if saw_coeff {
                        return Err(ParseError(format!("two coefficients in `{body}`")));
                    }
                    saw_coeff = true;
                    coeff = parse_rational(f)?;
                } else {
                    let (name, exp) = match f.split_once('^') {
                        Some((n, e)) => {
                            let k: u32 = e
                                .trim()
                                .parse()
                                .map_err(|_| ParseError(format!("bad exponent `{e}`")))?;
                            (n.trim(), k)
                        }
                        None => (f, 1),
                    };
                    let var = names
                        .iter()
                        .position(|&n| n == name)
                        .ok_or_else(|| ParseError(format!("unknown variable `{name}`")))?;
                    exps[var] += exp;
                }
            }
            if sgn < 0 {
                coeff = -coeff;
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }
}

/// One serialized polynomial term: coefficient as `num/den`, exponent vector
/// in the fixed variable order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonTerm {
    pub coeff: String,
    pub exps: Vec<u32>,
}

fn fmt_coeff(c: &Rational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let parse_int = |t: &str| -> Result<BigInt, ParseError> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| ParseError(format!("bad integer `{t}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(ParseError("zero denominator".into()));
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Graded-lex comparison of exponent vectors.
pub fn grlex<const N: usize>(a: &Exps<N>, b: &Exps<N>) -> std::cmp::Ordering {
    let ta: u32 = a.iter().sum();
    let tb: u32 = b.iter().sum();
    ta.cmp(&tb).then_with(|| a.cmp(b))
}

/// Dense accumulation grid for products of integer polynomials whose degree
/// box is compact.
///
/// When both factors are homogeneous in the (var 0, var 1) pair — true of
/// every raw family polynomial, whose (z, w) support lies on one line — the
/// grid drops that dimension and reconstructs the second exponent from the
/// known total on extraction.
struct DenseGrid<const N: usize> {
    dims: [usize; N],
    strides: [usize; N],
    /// Total var0 + var1 degree of every product term, when uniform.
    zw_total: Option<u32>,
}

impl<const N: usize> DenseGrid<N> {
    const MAX_CELLS: u64 = 6_000_000;

    fn uniform_pair_total(p: &MPoly<N>) -> Option<u32> {
        if N < 2 {
            return None;
        }
        let mut it = p.terms.keys();
        let first = it.next()?;
        let total = first[0] + first[1];
        it.all(|e| e[0] + e[1] == total).then_some(total)
    }

    fn plan(a: &MPoly<N>, b: &MPoly<N>, pairs: u64) -> Option<Self> {
        let zw_total = match (Self::uniform_pair_total(a), Self::uniform_pair_total(b)) {
            (Some(x), Some(y)) => Some(x + y),
            _ => None,
        };
        let mut dims = [0usize; N];
        for i in 0..N {
            dims[i] = (a.degree_in(i) + b.degree_in(i) + 1) as usize;
        }
        if zw_total.is_some() {
            dims[1] = 1;
        }
        let mut volume: u64 = 1;
        for &d in &dims {
            volume = volume.checked_mul(d as u64)?;
            if volume > Self::MAX_CELLS {
                return None;
            }
        }
        // Hashing wins when the grid would be mostly empty.
        if volume > pairs.saturating_mul(4) {
            return None;
        }
        let mut strides = [0usize; N];
        let mut s = 1usize;
        for i in (0..N).rev() {
            strides[i] = s;
            s *= dims[i];
        }
        if zw_total.is_some() {
            strides[1] = 0;
        }
        Some(DenseGrid { dims, strides, zw_total })
    }

    fn volume(&self) -> usize {
        self.dims.iter().product()
    }

    fn index(&self, e: &Exps<N>) -> usize {
        let mut idx = 0;
        for i in 0..N {
            idx += e[i] as usize * self.strides[i];
        }
        idx
    }

    fn extract(&self, cells: Vec<BigInt>) -> MPoly<N> {
        let mut terms = BTreeMap::new();
        for (idx, c) in cells.into_iter().enumerate() {
            if !c.is_zero() {
                let mut e = [0u32; N];
                let mut rest = idx;
                for i in 0..N {
                    if self.strides[i] == 0 {
                        continue;
                    }
                    e[i] = (rest / self.strides[i]) as u32;
                    rest %= self.strides[i];
                }
                if let Some(total) = self.zw_total {
                    e[1] = total - e[0];
                }
                terms.insert(e, Rational::from_integer(c));
            }
        }
        MPoly { terms }
    }

    fn multiply(&self, small: &MPoly<N>, big: &MPoly<N>) -> MPoly<N> {
        // Squares: accumulate only ordered pairs and double the off-diagonal.
        if small == big {
            return self.square(small);
        }
        let big_terms: Vec<(usize, &BigInt)> =
            big.terms.iter().map(|(e, c)| (self.index(e), c.numer())).collect();
        let small_terms: Vec<(usize, &BigInt)> =
            small.terms.iter().map(|(e, c)| (self.index(e), c.numer())).collect();
        let cells = accumulate_threaded(self.volume(), &small_terms, &big_terms);
        self.extract(cells)
    }

    fn square(&self, p: &MPoly<N>) -> MPoly<N> {
        let terms: Vec<(usize, &BigInt)> =
            p.terms.iter().map(|(e, c)| (self.index(e), c.numer())).collect();
        let volume = self.volume();
        let n_threads = threads_for(terms.len() as u64 * terms.len() as u64 / 2);
        let chunks = balanced_triangle_chunks(terms.len(), n_threads);
        let mut grids: Vec<Vec<BigInt>> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|range| {
                    let terms = &terms;
                    let range = range.clone();
                    scope.spawn(move || {
                        let mut cells = vec![BigInt::from(0); volume];
                        for i in range {
                            let (ei, ni) = terms[i];
                            let sq = ni * ni;
                            cells[ei + ei] += sq;
                            for &(ej, nj) in &terms[i + 1..] {
                                let mut prod = ni * nj;
                                prod *= 2;
                                cells[ei + ej] += prod;
                            }
                        }
                        cells
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("square worker")).collect()
        });
        let mut cells = grids.pop().expect("at least one chunk");
        for grid in grids {
            for (acc, c) in cells.iter_mut().zip(grid) {
                if !c.is_zero() {
                    *acc += c;
                }
            }
        }
        self.extract(cells)
    }
}

fn threads_for(pairs: u64) -> usize {
    if pairs < 4_000_000 {
        1
    } else {
        std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8)
    }
}

/// Split `0..n` into `k` ranges with roughly equal triangle work
/// sum_{i in range} (n - i).
fn balanced_triangle_chunks(n: usize, k: usize) -> Vec<std::ops::Range<usize>> {
    if k <= 1 || n == 0 {
        return vec![0..n];
    }
    let total: u64 = (n as u64) * (n as u64 + 1) / 2;
    let per = total / k as u64 + 1;
    let mut out = Vec::new();
    let mut start = 0usize;
    let mut acc = 0u64;
    for i in 0..n {
        acc += (n - i) as u64;
        if acc >= per && out.len() + 1 < k {
            out.push(start..i + 1);
            start = i + 1;
            acc = 0;
        }
    }
    out.push(start..n);
    out
}

fn accumulate_threaded(
    volume: usize,
    small_terms: &[(usize, &BigInt)],
    big_terms: &[(usize, &BigInt)],
) -> Vec<BigInt> {
    let pairs = small_terms.len() as u64 * big_terms.len() as u64;
    let n_threads = threads_for(pairs).min(small_terms.len().max(1));
    if n_threads <= 1 {
        let mut cells = vec![BigInt::from(0); volume];
        for &(base, n1) in small_terms {
            for &(off, n2) in big_terms {
                cells[base + off] += n1 * n2;
            }
        }
        return cells;
    }
    let chunk = small_terms.len().div_ceil(n_threads);
    let mut grids: Vec<Vec<BigInt>> = std::thread::scope(|scope| {
        let handles: Vec<_> = small_terms
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut cells = vec![BigInt::from(0); volume];
                    for &(base, n1) in part {
                        for &(off, n2) in big_terms {
                            cells[base + off] += n1 * n2;
                        }
                    }
                    cells
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("mul worker")).collect()
    });
    let mut cells = grids.pop().expect("at least one chunk");
    for grid in grids {
        for (acc, c) in cells.iter_mut().zip(grid) {
            if !c.is_zero() {
                *acc += c;
            }
        }
    }
    cells
}

/// Exponent vector wrapper ordered by graded-lex.
#[derive(Clone, Copy, PartialEq, Eq)]
struct GrlexKey<const N: usize>(Exps<N>);

impl<const N: usize> Ord for GrlexKey<N> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        grlex(&self.0, &other.0)
    }
}

impl<const N: usize> PartialOrd for GrlexKey<N> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum DivError<const N: usize> {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible; nonzero remainder with {} terms", remainder.num_terms())]
    NotDivisible { remainder: MPoly<N> },
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("parse error: {0}")]
pub struct ParseError(pub String);

impl<const N: usize> Add for &MPoly<N> {
    type Output = MPoly<N>;
    fn add(self, rhs: &MPoly<N>) -> MPoly<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<const N: usize> AddAssign<MPoly<N>> for MPoly<N> {
    fn add_assign(&mut self, rhs: MPoly<N>) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<const N: usize> Sub for &MPoly<N> {
    type Output = MPoly<N>;
    fn sub(self, rhs: &MPoly<N>) -> MPoly<N> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<const N: usize> Neg for &MPoly<N> {
    type Output = MPoly<N>;
    fn neg(self) -> MPoly<N> {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<const N: usize> Mul for &MPoly<N> {
    type Output = MPoly<N>;
    fn mul(self, rhs: &MPoly<N>) -> MPoly<N> {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        // Integer-only polynomials (the overwhelmingly common case in the
        // family constructions) multiply without any gcd reduction. When the
        // result's degree box is compact relative to the work, accumulate in
        // a dense grid to skip hashing entirely.
        if small.all_integer() && big.all_integer() {
            let pairs = small.terms.len() as u64 * big.terms.len() as u64;
            if let Some(grid) = DenseGrid::plan(self, rhs, pairs) {
                return grid.multiply(small, big);
            }
            let mut acc: FxHashMap<Exps<N>, BigInt> =
                FxHashMap::with_capacity_and_hasher(big.terms.len() * 2, Default::default());
            for (e1, c1) in &small.terms {
                let n1 = c1.numer();
                for (e2, c2) in &big.terms {
                    let mut e = *e1;
                    for i in 0..N {
                        e[i] += e2[i];
                    }
                    let prod = n1 * c2.numer();
                    match acc.entry(e) {
                        std::collections::hash_map::Entry::Vacant(v) => {
                            v.insert(prod);
                        }
                        std::collections::hash_map::Entry::Occupied(mut o) => {
                            *o.get_mut() += prod;
                        }
                    }
                }
            }
            return MPoly {
                terms: acc
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (e, Rational::from_integer(c)))
                    .collect(),
            };
        }
        // Accumulate in a hash map; the BTreeMap rebuild at the end is cheap
        // relative to the coefficient arithmetic.
        let mut acc: FxHashMap<Exps<N>, Rational> =
            FxHashMap::with_capacity_and_hasher(big.terms.len() * 2, Default::default());
        for (e1, c1) in &small.terms {
            for (e2, c2) in &big.terms {
                let mut e = *e1;
                for i in 0..N {
                    e[i] += e2[i];
                }
                let prod = c1 * c2;
                match acc.entry(e) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += prod;
                    }
                }
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl<const N: usize> std::fmt::Debug for MPoly<N> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: [&str; N] = match N {
            3 => std::array::from_fn(|i| VBB[i]),
            4 => std::array::from_fn(|i| ZWAB[i]),
            _ => std::array::from_fn(|_| "x"),
        };
        write!(f, "{}", self.to_text(&names))
    }
}
