//! Sparse multivariate polynomials over the rationals with named variables.
//! Monomials are ordered graded-lexicographically (total degree first, then
//! variable names), which fixes both the canonical printing and the meaning
//! of "lowest-degree homogeneous part".

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ring::Rational;

/// Exponent vector: variable name -> positive power. No zero exponents stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(name: &str) -> Self {
        let mut m = BTreeMap::new();
        m.insert(name.to_string(), 1);
        Monomial(m)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn degree_of(&self, var: &str) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (v, e) in &other.0 {
            *out.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }

    /// Remove one factor of `var` (caller guarantees it divides).
    fn strip_var(&self, var: &str) -> Monomial {
        let mut out = self.0.clone();
        match out.get_mut(var) {
            Some(e) if *e > 1 => *e -= 1,
            Some(_) => {
                out.remove(var);
            }
            None => panic!("strip_var on monomial without {var}"),
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                // lexicographic on the (sorted) variable sequence: the
                // earlier name with the higher power wins
                let mut a = self.0.iter();
                let mut b = other.0.iter();
                loop {
                    match (a.next(), b.next()) {
                        (None, None) => return std::cmp::Ordering::Equal,
                        (None, Some(_)) => return std::cmp::Ordering::Less,
                        (Some(_), None) => return std::cmp::Ordering::Greater,
                        (Some((va, ea)), Some((vb, eb))) => {
                            // smaller name = earlier variable = compare first
                            match va.cmp(vb) {
                                std::cmp::Ordering::Equal => match ea.cmp(eb) {
                                    std::cmp::Ordering::Equal => continue,
                                    ord => return ord,
                                },
                                // a monomial whose first variable is earlier
                                // is larger in lex order
                                std::cmp::Ordering::Less => return std::cmp::Ordering::Greater,
                                std::cmp::Ordering::Greater => return std::cmp::Ordering::Less,
                            }
                        }
                    }
                }
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial: monomial -> nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MPoly { terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(name), Rational::one());
        MPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).min()
    }

    /// Sum of the terms of minimal total degree; zero stays zero.
    pub fn lowest_degree_part(&self) -> MPoly {
        let Some(d) = self.min_degree() else {
            return MPoly::zero();
        };
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Variables actually occurring.
    pub fn support(&self) -> std::collections::BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.0.keys().cloned())
            .collect()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_of(var))
            .max()
            .unwrap_or(0)
    }

    /// Split as A * var + B where neither part mentions `var`. Errors if the
    /// polynomial has degree > 1 in `var`.
    pub fn split_linear(&self, var: &str) -> Option<(MPoly, MPoly)> {
        if self.degree_in(var) > 1 {
            return None;
        }
        let mut a = MPoly::zero();
        let mut b = MPoly::zero();
        for (m, c) in &self.terms {
            if m.degree_of(var) == 1 {
                a.terms.insert(m.strip_var(var), c.clone());
            } else {
                b.terms.insert(m.clone(), c.clone());
            }
        }
        Some((a, b))
    }

    /// Evaluate with every variable bound. Panics on unbound variables; the
    /// callers in this crate always evaluate closed assignments.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in &m.0 {
                let val = assignment
                    .get(v)
                    .unwrap_or_else(|| panic!("unbound variable {v}"));
                for _ in 0..*e {
                    term *= val.clone();
                }
            }
            acc += term;
        }
        acc
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
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
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        let mut out = self;
        for (m, c) in rhs.terms {
            out.insert_term(m, c);
        }
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        let mut out = self;
        for (m, c) in rhs.terms {
            out.insert_term(m, -c);
        }
        out
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(Rational::one())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // descending monomial order for stable, human-friendly output
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = m
                .0
                .iter()
                .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            let mono = mono.join("*");
            let lead_one = c.abs() == Rational::one() && !mono.is_empty();
            if k == 0 {
                if c < &Rational::zero() {
                    write!(f, "-")?;
                }
            } else if c < &Rational::zero() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if lead_one {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn x() -> MPoly {
        MPoly::var("x")
    }
    fn y() -> MPoly {
        MPoly::var("y")
    }

    #[test]
    fn arithmetic_and_display() {
        let p = x() * y() + MPoly::from_int(3) - x();
        assert_eq!(p.to_string(), "x*y - x + 3");
        let q = p.clone() * MPoly::from_int(2);
        assert_eq!(q.to_string(), "2*x*y - 2*x + 6");
        assert!((p.clone() - p).is_zero());
    }

    #[test]
    fn lowest_degree_part_pinned() {
        assert!(MPoly::zero().lowest_degree_part().is_zero());
        let p = MPoly::from_int(3) + x() + x() * y();
        assert_eq!(p.lowest_degree_part(), MPoly::from_int(3));
        // x^2 y + x y + x^3 -> xy
        let p = x() * x() * y() + x() * y() + x() * x() * x();
        assert_eq!(p.lowest_degree_part(), x() * y());
    }

    #[test]
    fn lowest_degree_multiplicative() {
        let p = x() + x() * x();
        let q = y() + MPoly::from_int(5) * x() * y();
        let lhs = (p.clone() * q.clone()).lowest_degree_part();
        let rhs = p.lowest_degree_part() * q.lowest_degree_part();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn split_linear() {
        let p = x() * y() + y() + MPoly::from_int(2);
        let (a, b) = p.split_linear("x").unwrap();
        assert_eq!(a, y());
        assert_eq!(b, y() + MPoly::from_int(2));
        let sq = x() * x();
        assert!(sq.split_linear("x").is_none());
    }

    #[test]
    fn eval_closed() {
        let p = x() * y() - MPoly::from_int(1);
        let mut env = BTreeMap::new();
        env.insert("x".to_string(), rat(2));
        env.insert("y".to_string(), rat(5));
        assert_eq!(p.eval(&env), rat(9));
    }

    #[test]
    fn graded_order() {
        // degree dominates, then lex on names
        let m_x = Monomial::var("x");
        let m_y = Monomial::var("y");
        let m_xy = m_x.mul(&m_y);
        assert!(m_xy > m_x);
        assert!(m_x > m_y); // "x" earlier than "y" wins lex
    }
}
