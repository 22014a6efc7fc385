//! Exact scalars: rationals and rational functions in formal parameters.
//!
//! A [`Scalar`] is an element of `Q` or of the rational-function field
//! `Q(g_1,...,g_k)` in formal parameters. Formal parameters model field
//! elements that are linearly independent over `Q` (the paper-style `gamma`
//! vectors) without ever touching real numbers: a nonzero polynomial in the
//! `g_i` is guaranteed nonzero as a field element.
//!
//! Representation is canonical: polynomials keep sorted monomials with
//! gcd-reduced rational coefficients, fractions are reduced by polynomial
//! gcd, and denominators are monic under lexicographic term order. Structural
//! equality therefore decides field equality.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational number.
pub type Rat = BigRational;

/// Convenience constructor for a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational written as `p` or `p/q` (lowest terms not required).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator {n:?}")))?;
    let den: BigInt = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator {d:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rat::new(num, den))
}

/// Render a rational as `p` or `p/q` in lowest terms.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A monomial in the formal parameters: exponent vector with trailing zeros
/// trimmed, so `g1*g3` is `[1, 0, 1]` and the constant monomial is `[]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(Vec<u16>);

impl Mono {
    fn one() -> Self {
        Mono(Vec::new())
    }

    fn var(i: usize) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = 1;
        Mono(v)
    }

    fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn exp(&self, i: usize) -> u16 {
        self.0.get(i).copied().unwrap_or(0)
    }

    fn nvars(&self) -> usize {
        self.0.len()
    }

    fn mul(&self, other: &Mono) -> Mono {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.exp(i) + other.exp(i));
        }
        Mono::trim(v)
    }

    /// Componentwise quotient, if `other` divides `self`.
    fn div(&self, other: &Mono) -> Option<Mono> {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let (a, b) = (self.exp(i), other.exp(i));
            if a < b {
                return None;
            }
            v.push(a - b);
        }
        Some(Mono::trim(v))
    }

    fn trim(mut v: Vec<u16>) -> Mono {
        while v.last() == Some(&0) {
            v.pop();
        }
        Mono(v)
    }
}

// Lexicographic order on padded exponent vectors; total degree is not used.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let n = self.0.len().max(other.0.len());
        for i in 0..n {
            match self.exp(i).cmp(&other.exp(i)) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial over `Q` with canonical sorted-term storage.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Mono::one(), r);
        }
        Poly { terms }
    }

    /// The formal parameter with 0-based index `i` (displayed as `g{i+1}`).
    pub fn var(i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(i), Rat::one());
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(Mono::is_one)
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    fn nvars(&self) -> usize {
        self.terms.keys().map(Mono::nvars).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Leading (lex-largest) term.
    fn lead(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    fn mul_mono(&self, m: &Mono, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v * c))
                .collect(),
        }
    }

    /// Exact division; returns `None` when `self` is not a polynomial
    /// multiple of `div`.
    pub fn exact_div(&self, div: &Poly) -> Option<Poly> {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        let (dm, dc) = {
            let (m, c) = div.lead().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.lead().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            rem = &rem - &div.mul_mono(&qm, &qc);
            quo.add_term(qm, qc);
        }
        Some(quo)
    }

    /// Monic normalization: scale so the lex-leading coefficient is 1.
    fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = Rat::one() / c;
                self.scale(&inv)
            }
        }
    }

    /// Degree in variable `v`.
    fn deg_in(&self, v: usize) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Highest variable index that actually occurs, if any.
    fn main_var(&self) -> Option<usize> {
        let n = self.nvars();
        if n == 0 {
            None
        } else {
            Some(n - 1)
        }
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `v`,
    /// indexed by degree; coefficients involve only the other variables.
    fn univariate_in(&self, v: usize) -> Vec<Poly> {
        let d = self.deg_in(v) as usize;
        let mut coeffs = vec![Poly::zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            let mut stripped: Vec<u16> = (0..m.nvars()).map(|i| m.exp(i)).collect();
            if v < stripped.len() {
                stripped[v] = 0;
            }
            coeffs[e].add_term(Mono::trim(stripped), c.clone());
        }
        coeffs
    }

    fn from_univariate(coeffs: &[Poly], v: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let mut pow = vec![0u16; v + 1];
            pow[v] = e as u16;
            let m = Mono::trim(pow);
            for (km, kc) in &c.terms {
                out.add_term(km.mul(&m), kc.clone());
            }
        }
        out
    }

    /// Content with respect to `v`: gcd of the univariate coefficients.
    fn content_in(&self, v: usize) -> Poly {
        let mut g = Poly::zero();
        for c in self.univariate_in(v) {
            if !c.is_zero() {
                g = poly_gcd(&g, &c);
            }
        }
        g
    }

    /// Greatest common divisor, monic-normalized.
    pub fn gcd(&self, other: &Poly) -> Poly {
        poly_gcd(self, other)
    }

    /// Iterate `(exponents, coefficient)` pairs, lex-descending.
    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Rat)> {
        self.terms.iter().rev().map(|(m, c)| (m.0.as_slice(), c))
    }
}

/// Pseudo-remainder of `f` by `g` as univariate polynomials in `v`.
fn pseudo_rem(f: &[Poly], g: &[Poly]) -> Vec<Poly> {
    let dg = g.len() - 1;
    let lcg = g.last().unwrap().clone();
    let mut f: Vec<Poly> = f.to_vec();
    loop {
        while f.last().map(Poly::is_zero).unwrap_or(false) {
            f.pop();
        }
        if f.is_empty() || f.len() - 1 < dg {
            return f;
        }
        let df = f.len() - 1;
        let lf = f.last().unwrap().clone();
        // f := lcg*f - lf * g * x^(df-dg)
        let mut next = vec![Poly::zero(); df + 1];
        for (i, c) in f.iter().enumerate() {
            next[i] = c * &lcg;
        }
        for (i, c) in g.iter().enumerate() {
            next[i + df - dg] = &next[i + df - dg] - &(c * &lf);
        }
        next.pop(); // leading terms cancel exactly
        f = next;
    }
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let v = a.main_var().unwrap().max(b.main_var().unwrap());
    if a.deg_in(v) == 0 || b.deg_in(v) == 0 {
        // v occurs in only one argument; gcd divides the other's content
        let ca = a.content_in(v);
        let cb = b.content_in(v);
        return poly_gcd(&ca, &cb);
    }
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = poly_gcd(&ca, &cb);
    let pa: Vec<Poly> = a
        .univariate_in(v)
        .iter()
        .map(|q| q.exact_div(&ca).expect("content divides"))
        .collect();
    let pb: Vec<Poly> = b
        .univariate_in(v)
        .iter()
        .map(|q| q.exact_div(&cb).expect("content divides"))
        .collect();
    let (mut f, mut g) = if pa.len() >= pb.len() {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&f, &g);
        if r.is_empty() {
            break;
        }
        // strip content of the remainder to keep the sequence primitive
        let rp = Poly::from_univariate(&r, v);
        let rc = rp.content_in(v);
        let r: Vec<Poly> = r
            .iter()
            .map(|q| q.exact_div(&rc).expect("content divides"))
            .collect();
        f = g;
        g = r;
    }
    let gp = Poly::from_univariate(&g, v);
    let gc = gp.content_in(v);
    let prim = gp.exact_div(&gc).expect("content divides");
    (&prim * &c).monic()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(rat_to_string(&abs));
            }
            for i in 0..m.nvars() {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(format!("g{}", i + 1)),
                    e => factors.push(format!("g{}^{}", i + 1, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Element of `Q` or `Q(g_1,...,g_k)`, stored as a reduced fraction of
/// polynomials with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rat(rat(n, 1))
    }

    pub fn from_rat(r: Rat) -> Self {
        Scalar {
            num: Poly::constant(r),
            den: Poly::one(),
        }
    }

    /// The formal parameter `g{i+1}` as a field element.
    pub fn param(i: usize) -> Self {
        Scalar {
            num: Poly::var(i),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar {
            num: p,
            den: Poly::one(),
        }
    }

    fn reduce(num: Poly, den: Poly) -> Scalar {
        assert!(!den.is_zero(), "zero denominator in scalar");
        if num.is_zero() {
            return Scalar::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        // make the denominator monic so representatives are canonical
        let lc = den.lead().unwrap().1.clone();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Scalar { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }

    /// True when the scalar lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    /// True when the scalar is an integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.denom().is_one() {
            Some(r.numer().clone())
        } else {
            None
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("inverse of zero scalar".into()));
        }
        Ok(Scalar::reduce(self.den.clone(), self.num.clone()))
    }

    /// Parse the textual form produced by `Display`.
    pub fn parse(s: &str) -> Result<Scalar> {
        let mut p = Parser {
            chars: s.chars().collect(),
            pos: 0,
        };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!("trailing input in scalar {s:?}")));
        }
        Ok(v)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Scalar::reduce(num, den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Scalar::reduce(num, den)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "scalar division by zero");
        Scalar::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            if let Some(r) = self.num.as_constant() {
                return write!(f, "{}", rat_to_string(&r));
            }
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

// Recursive-descent parser for the Display grammar.
struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.peek().map(|c| c.is_whitespace()).unwrap_or(false) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        self.skip_ws();
        let negate = self.eat('-');
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = &acc + &t;
            } else if self.eat('-') {
                let t = self.term()?;
                acc = &acc - &t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                let t = self.factor()?;
                acc = &acc * &t;
            } else if self.eat('/') {
                let t = self.factor()?;
                if t.is_zero() {
                    return Err(Error::Parse("division by zero in scalar".into()));
                }
                acc = &acc / &t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.uint()?;
            let mut acc = Scalar::one();
            for _ in 0..e {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("expected ')'".into()));
                }
                Ok(v)
            }
            Some('g') => {
                self.pos += 1;
                let i = self.uint()?;
                if i == 0 {
                    return Err(Error::Parse("parameter indices start at 1".into()));
                }
                Ok(Scalar::param(i as usize - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(Scalar::from_rat(Rat::from(BigInt::from(n))))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected integer".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: usize) -> Scalar {
        Scalar::param(i)
    }

    #[test]
    fn rational_normal_form() {
        let a = &Scalar::from_rat(rat(2, 4)) + &Scalar::from_rat(rat(1, 4));
        assert_eq!(a, Scalar::from_rat(rat(3, 4)));
        assert_eq!(a.to_string(), "3/4");
        assert_eq!(Scalar::from_int(-5).to_string(), "-5");
    }

    #[test]
    fn field_axioms_smoke() {
        let x = &(&g(0) * &g(0)) - &(&g(1) * &g(1)); // g1^2 - g2^2
        let y = &g(0) - &g(1);
        let q = &x / &y;
        let expected = &g(0) + &g(1);
        assert_eq!(q, expected);
        assert!((&(&q * &y) - &x).is_zero());
    }

    #[test]
    fn gcd_reduces_fractions() {
        // (g1^2 + 2 g1 g2 + g2^2) / (g1 + g2) = g1 + g2
        let s = &g(0) + &g(1);
        let sq = &s * &s;
        let q = &sq / &s;
        assert_eq!(q, s);
    }

    #[test]
    fn division_and_inverse() {
        let x = &(&g(0) * &g(1)) + &Scalar::from_int(1);
        let inv = x.inv().unwrap();
        assert!((&(&x * &inv) - &Scalar::one()).is_zero());
    }

    #[test]
    fn display_parse_round_trip() {
        let cases = [
            Scalar::from_rat(rat(-7, 3)),
            &(&g(0) * &g(0)) + &Scalar::from_rat(rat(1, 2)),
            &(&g(0) - &g(1)) / &(&g(1) + &Scalar::from_int(2)),
            Scalar::zero(),
            -&g(2),
        ];
        for c in &cases {
            let s = c.to_string();
            let back = Scalar::parse(&s).unwrap();
            assert_eq!(&back, c, "round trip failed for {s}");
        }
    }

    #[test]
    fn exact_div_detects_non_multiples() {
        let a = &Poly::var(0) * &Poly::var(0);
        let b = Poly::var(1);
        assert!(a.exact_div(&b).is_none());
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn multivariate_gcd() {
        // gcd((g1+g2)*g3, (g1+g2)*g1) = g1+g2 up to a unit
        let s = &(&Poly::var(0) + &Poly::var(1)) * &Poly::var(2);
        let t = &(&Poly::var(0) + &Poly::var(1)) * &Poly::var(0);
        let d = s.gcd(&t);
        assert!(s.exact_div(&d).is_some());
        assert!(t.exact_div(&d).is_some());
        assert!(!d.is_constant());
    }
}
