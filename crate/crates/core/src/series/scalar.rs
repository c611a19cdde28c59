use std::collections::BTreeMap;
use std::fmt;

use super::field::Field;
use super::SeriesError;

/// A Laurent polynomial: a finite sum of `c * t^e` with nonzero `c`.
///
/// Stands in for an element of the Laurent series field. Every quantity the
/// library manipulates has finite support once reduced modulo a suitable
/// power of `t`, so truncation is always explicit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentScalar<F: Field> {
    terms: BTreeMap<i32, F>,
}

impl<F: Field> Default for LaurentScalar<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> LaurentScalar<F> {
    pub fn zero() -> Self {
        LaurentScalar { terms: BTreeMap::new() }
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::monomial(0, F::one(ctx))
    }

    /// `c * t^e`; zero when `c` is zero.
    pub fn monomial(e: i32, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentScalar { terms }
    }

    /// `t^e` with unit coefficient.
    pub fn t_pow(ctx: &F::Ctx, e: i32) -> Self {
        Self::monomial(e, F::one(ctx))
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, F)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Valuation: the smallest exponent present, `None` standing for +∞.
    pub fn val(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent present.
    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, e: i32) -> Option<&F> {
        self.terms.get(&e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &F)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the lowest term.
    pub fn leading(&self) -> Option<&F> {
        self.terms.values().next()
    }

    fn add_term(&mut self, e: i32, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let s = existing.add(c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentScalar { terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, &c1.mul(c2));
            }
        }
        out
    }

    /// Product truncated to exponents below `bound`.
    pub fn mul_below(&self, other: &Self, bound: i32) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                if e1 + e2 >= bound {
                    break;
                }
                out.add_term(e1 + e2, &c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentScalar { terms: self.terms.iter().map(|(e, x)| (*e, x.mul(c))).collect() }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentScalar { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Keeps only the terms with exponent `< bound`.
    pub fn truncate_below(&self, bound: i32) -> Self {
        LaurentScalar { terms: self.terms.range(..bound).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// Keeps only the terms with exponent `>= bound`.
    pub fn part_at_least(&self, bound: i32) -> Self {
        LaurentScalar { terms: self.terms.range(bound..).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// Inverse of a unit power series (nonzero constant term, no negative
    /// exponents) modulo `t^precision`.
    pub fn unit_inverse(&self, precision: i32) -> Self {
        assert!(
            self.val() == Some(0),
            "unit_inverse needs a power series with nonzero constant term"
        );
        let c0_inv = self.terms[&0].inv().expect("nonzero constant term");
        let ctx = c0_inv.ctx();
        let mut inv: Vec<F> = Vec::with_capacity(precision.max(1) as usize);
        for k in 0..precision.max(1) {
            if k == 0 {
                inv.push(c0_inv.clone());
                continue;
            }
            let mut acc = F::zero(&ctx);
            for (e, c) in self.terms.range(1..=k) {
                acc = acc.add(&c.mul(&inv[(k - e) as usize]));
            }
            inv.push(acc.neg().mul(&c0_inv));
        }
        Self::from_terms(inv.into_iter().enumerate().map(|(k, c)| (k as i32, c)))
    }

    /// Text form: `c*t^k` terms joined by `+`, lowest exponent first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                let shown = if c.is_negative() { c.neg() } else { c.clone() };
                out.push_str(&format!("{}*t^{}", shown.to_text(), e));
            } else {
                out.push_str(&format!("{}*t^{}", c.to_text(), e));
            }
        }
        out
    }

    /// Parses the text form. Accepts `c*t^k`, `t^k`, `c*t`, `t` and bare `c`.
    pub fn parse(ctx: &F::Ctx, text: &str) -> Result<Self, SeriesError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(SeriesError::Parse("empty Laurent polynomial".into()));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            let ch = bytes[i];
            let prev = bytes[i - 1];
            if (ch == b'+' || ch == b'-') && prev != b'^' && prev != b'*' && prev != b'/' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);
        let mut out = Self::zero();
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('+') {
                Some(rest) => (false, rest),
                None => match piece.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, piece),
                },
            };
            let (coeff_text, exp) = match body.find('t') {
                Some(pos) => {
                    let coeff = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        let digits = rest.strip_prefix('^').ok_or_else(|| {
                            SeriesError::Parse(format!("bad term `{piece}`"))
                        })?;
                        digits
                            .parse::<i32>()
                            .map_err(|_| SeriesError::Parse(format!("bad exponent in `{piece}`")))?
                    };
                    (if coeff.is_empty() { "1" } else { coeff }, exp)
                }
                None => (body, 0),
            };
            let mut c = F::parse(ctx, coeff_text)?;
            if sign {
                c = c.neg();
            }
            out.add_term(exp, &c);
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Debug for LaurentScalar<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<F: Field> fmt::Display for LaurentScalar<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
