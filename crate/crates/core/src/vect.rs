//! Exact linear combinations over the tree basis.
//!
//! All coefficients are arbitrary-precision rationals; zero coefficients are
//! never stored.  [`TreeVector`] models elements of the algebra,
//! [`TensorVector`] elements of the twofold tensor product, and
//! [`TripleTensorVector`] the threefold one (needed for coassociativity
//! checks).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::tree::PlanarTree;

/// Coefficient field: exact rationals.
pub type Coeff = BigRational;

pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn coeff_ratio(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A finite formal sum of basis keys with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSum<K: Ord>(BTreeMap<K, Coeff>);

pub type TreeVector = FormalSum<PlanarTree>;
pub type TensorVector = FormalSum<(PlanarTree, PlanarTree)>;
pub type TripleTensorVector = FormalSum<(PlanarTree, PlanarTree, PlanarTree)>;

impl<K: Ord> Default for FormalSum<K> {
    fn default() -> Self {
        FormalSum(BTreeMap::new())
    }
}

impl<K: Ord + Clone> FormalSum<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `k` with coefficient 1.
    pub fn basis(k: K) -> Self {
        Self::term(k, Coeff::one())
    }

    pub fn term(k: K, c: Coeff) -> Self {
        let mut s = Self::zero();
        s.add_term(k, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Coeff)> {
        self.0.iter()
    }

    /// Coefficient of `k`, zero if absent.
    pub fn coeff(&self, k: &K) -> Coeff {
        self.0.get(k).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, k: K, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(k);
        match entry {
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

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), -c.clone());
        }
    }

    pub fn plus(mut self, other: &Self) -> Self {
        self.add_assign(other);
        self
    }

    pub fn minus(mut self, other: &Self) -> Self {
        self.sub_assign(other);
        self
    }

    pub fn scaled(mut self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        for v in self.0.values_mut() {
            *v *= c.clone();
        }
        self
    }

    pub fn negated(self) -> Self {
        self.scaled(&-Coeff::one())
    }

    /// Re-keys every term; coefficients of colliding keys are added.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> FormalSum<L> {
        let mut out = FormalSum::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Coeff)> for FormalSum<K> {
    fn from_iter<I: IntoIterator<Item = (K, Coeff)>>(iter: I) -> Self {
        let mut s = Self::zero();
        for (k, c) in iter {
            s.add_term(k, c);
        }
        s
    }
}

/// Key rendering used by the `Display` impls: trees print canonically and
/// tensor factors are joined by `⊗`.
pub trait RenderKey {
    fn render(&self) -> String;
}

impl RenderKey for PlanarTree {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl RenderKey for (PlanarTree, PlanarTree) {
    fn render(&self) -> String {
        format!("{}⊗{}", self.0, self.1)
    }
}

impl RenderKey for (PlanarTree, PlanarTree, PlanarTree) {
    fn render(&self) -> String {
        format!("{}⊗{}⊗{}", self.0, self.1, self.2)
    }
}

impl<K: Ord + RenderKey> fmt::Display for FormalSum<K> {
    /// Terms in canonical key order as `c*KEY`, joined by ` + `; reduced
    /// fractions, `0` for the zero vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in &self.0 {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}*{}", c, k.render())?;
        }
        Ok(())
    }
}

/// The Kronecker pairing `<t, s> = delta_{t,s}` extended bilinearly.
pub fn pairing(x: &TreeVector, y: &TreeVector) -> Coeff {
    // iterate over the smaller support
    let (small, large) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    let mut acc = Coeff::zero();
    for (k, c) in small.iter() {
        acc += c.clone() * large.coeff(k);
    }
    acc
}

/// `x ⊗ y` as an element of the tensor square.
pub fn tensor_of(x: &TreeVector, y: &TreeVector) -> TensorVector {
    let mut out = TensorVector::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_term((a.clone(), b.clone()), ca.clone() * cb.clone());
        }
    }
    out
}

impl FromStr for TreeVector {
    type Err = Error;

    /// Parses a vector literal: signed terms `c*TREE` or `c/d*TREE` (or a bare
    /// `TREE` with coefficient 1) joined by `+` or `-`.  Whitespace is
    /// ignored.  The Unicode minus sign is accepted alongside `-`.
    fn from_str(s: &str) -> Result<Self> {
        let normalized: String = s.replace('\u{2212}', "-");
        let cleaned: String = normalized.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse {
                at: 0,
                msg: "empty vector literal".into(),
            });
        }
        if cleaned == "0" {
            return Ok(TreeVector::zero());
        }
        let mut out = TreeVector::zero();
        let bytes = cleaned.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            // joiner and/or term sign; `+ -c*T` is allowed
            let mut sign = Coeff::one();
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            // optional rational coefficient followed by '*'
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
                i += 1;
            }
            let coeff = if i > start && i < bytes.len() && bytes[i] == b'*' {
                let c: Coeff = cleaned[start..i].parse().map_err(|e| Error::Parse {
                    at: start,
                    msg: format!("bad coefficient: {e}"),
                })?;
                i += 1; // consume '*'
                c
            } else {
                i = start;
                Coeff::one()
            };
            // tree literal: scan a balanced region
            let tree_start = i;
            match bytes.get(i) {
                Some(b'|') => i += 1,
                Some(b'(') => {
                    let mut depth = 0usize;
                    while i < bytes.len() {
                        match bytes[i] {
                            b'(' => depth += 1,
                            b')' => {
                                depth -= 1;
                                if depth == 0 {
                                    i += 1;
                                    break;
                                }
                            }
                            _ => {}
                        }
                        i += 1;
                    }
                    if depth != 0 && i >= bytes.len() {
                        // fall through; tree parser reports the error
                    }
                }
                _ => {
                    return Err(Error::Parse {
                        at: i,
                        msg: "expected a tree literal".into(),
                    })
                }
            }
            let tree: PlanarTree = cleaned[tree_start..i].parse()?;
            out.add_term(tree, sign * coeff);
            // next joiner must be + or -
            if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                return Err(Error::Parse {
                    at: i,
                    msg: format!("expected '+' or '-', found '{}'", bytes[i] as char),
                });
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    #[test]
    fn module_axioms_on_simple_sums() {
        let y = TreeVector::basis(t("(|,|)"));
        assert_eq!(y.clone().plus(&TreeVector::zero()), y);
        let two = y.clone().scaled(&coeff_int(2));
        let three = y.clone().scaled(&coeff_int(3));
        assert_eq!(two.plus(&three), y.clone().scaled(&coeff_int(5)));
        assert!(y.clone().minus(&y).is_zero());
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let mut v = TreeVector::zero();
        v.add_term(t("(|,|)"), coeff_int(0));
        assert!(v.is_zero());
        v.add_term(t("(|,|)"), coeff_int(2));
        v.add_term(t("(|,|)"), coeff_int(-2));
        assert!(v.is_zero());
    }

    #[test]
    fn pairing_examples() {
        let y = TreeVector::basis(t("(|,|)"));
        assert_eq!(pairing(&y, &y), coeff_int(1));
        let balais = TreeVector::basis(t("(|,|,|)"));
        let balaisg = TreeVector::basis(t("((|,|),|)"));
        assert_eq!(pairing(&balais, &balaisg), coeff_int(0));
    }

    #[test]
    fn display_is_canonical_and_sorted() {
        let mut v = TreeVector::zero();
        v.add_term(t("(|,|,|)"), coeff_int(1));
        v.add_term(t("((|,|),|)"), coeff_int(1));
        v.add_term(t("(|,(|,|))"), coeff_int(1));
        assert_eq!(v.to_string(), "1*((|,|),|) + 1*(|,(|,|)) + 1*(|,|,|)");
        assert_eq!(TreeVector::zero().to_string(), "0");
        let half = TreeVector::term(t("(|,|)"), coeff_ratio(-1, 2));
        assert_eq!(half.to_string(), "-1/2*(|,|)");
    }

    #[test]
    fn vector_literals_parse() {
        let v: TreeVector = "1*(|,|,|) + -1/2*((|,|),|)".parse().unwrap();
        assert_eq!(v.coeff(&t("(|,|,|)")), coeff_int(1));
        assert_eq!(v.coeff(&t("((|,|),|)")), coeff_ratio(-1, 2));
        let w: TreeVector = "(|,|) - (|,|)".parse().unwrap();
        assert!(w.is_zero());
        let u: TreeVector = "3/2*(|,|)".parse().unwrap();
        assert_eq!(u.coeff(&t("(|,|)")), coeff_ratio(3, 2));
        assert!("".parse::<TreeVector>().is_err());
        assert!("2*".parse::<TreeVector>().is_err());
    }

    #[test]
    fn tensor_product_of_sums() {
        let y = TreeVector::basis(t("(|,|)"));
        let sum = y.clone().plus(&TreeVector::basis(t("|")));
        let tens = tensor_of(&sum, &y);
        assert_eq!(tens.len(), 2);
        assert_eq!(tens.coeff(&(t("|"), t("(|,|)"))), coeff_int(1));
        assert_eq!(tens.coeff(&(t("(|,|)"), t("(|,|)"))), coeff_int(1));
    }
}
