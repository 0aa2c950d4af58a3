//! The rational cohomology ring of a product of copies of a fixed smooth
//! projective curve, in its Künneth word basis.
//!
//! For a genus-`g` curve the factors contribute letters `1`, `α_t`, `β_t`
//! (`t = 0..2g-1`, the symplectic basis of `H^1`) and `pt`; a class on
//! `C^{×k}` is a rational combination of length-`k` words.  Products of
//! words multiply letter-by-letter with the Koszul sign rule for moving
//! odd letters past each other, and the only nonzero odd products are
//! `α_t·β_t = pt = -β_t·α_t`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntersectError;

/// The ambient product `C^{×factors}` with `C` of the given genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductRing {
    pub genus: u32,
    pub factors: usize,
}

impl ProductRing {
    pub fn new(genus: u32, factors: usize) -> Self {
        ProductRing { genus, factors }
    }
}

/// One tensor-factor letter of a Künneth word.  The odd part of the
/// curve's cohomology is organized into `genus` symplectic pairs
/// `(α_t, β_t)`, `t < genus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Letter {
    One,
    /// `α_t`, odd.
    Alpha(u32),
    /// `β_t`, odd; `α_t·β_t = pt`.
    Beta(u32),
    Point,
}

impl Letter {
    fn degree(self) -> i64 {
        match self {
            Letter::One => 0,
            Letter::Alpha(_) | Letter::Beta(_) => 1,
            Letter::Point => 2,
        }
    }

    fn is_odd(self) -> bool {
        self.degree() == 1
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::One => write!(f, "1"),
            Letter::Alpha(t) => write!(f, "a{t}"),
            Letter::Beta(t) => write!(f, "b{t}"),
            Letter::Point => write!(f, "pt"),
        }
    }
}

/// A cohomology class: a rational combination of Künneth words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClass {
    ring: ProductRing,
    terms: BTreeMap<Vec<Letter>, BigRational>,
}

/// `α_t·β_u` and friends: the sign and result of multiplying two letters,
/// `None` when the product vanishes.
fn letter_mul(x: Letter, y: Letter) -> Option<(i32, Letter)> {
    match (x, y) {
        (Letter::One, t) | (t, Letter::One) => Some((1, t)),
        (Letter::Alpha(i), Letter::Beta(j)) if i == j => Some((1, Letter::Point)),
        (Letter::Beta(i), Letter::Alpha(j)) if i == j => Some((-1, Letter::Point)),
        _ => None,
    }
}

impl CohClass {
    pub fn zero(ring: ProductRing) -> Self {
        CohClass {
            ring,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1 ⊗ ... ⊗ 1`.
    pub fn unit(ring: ProductRing) -> Self {
        Self::word(ring, vec![Letter::One; ring.factors], BigRational::one())
    }

    /// A single word with coefficient.
    pub fn word(ring: ProductRing, letters: Vec<Letter>, coeff: BigRational) -> Self {
        assert_eq!(letters.len(), ring.factors, "word length must match ring");
        for l in &letters {
            if let Letter::Alpha(t) | Letter::Beta(t) = l {
                assert!(*t < ring.genus, "symplectic pair index {t} out of range");
            }
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(letters, coeff);
        }
        CohClass { ring, terms }
    }

    /// The point class pulled back from factor `i`.
    pub fn point_at(ring: ProductRing, i: usize) -> Self {
        assert!(i < ring.factors);
        let mut letters = vec![Letter::One; ring.factors];
        letters[i] = Letter::Point;
        Self::word(ring, letters, BigRational::one())
    }

    /// The class of the diagonal `{x_i = x_j}`:
    /// `pt_i + pt_j - Σ_t (α_t^{(i)} β_t^{(j)} - β_t^{(i)} α_t^{(j)})`.
    pub fn diagonal(ring: ProductRing, i: usize, j: usize) -> Self {
        assert!(i != j && i < ring.factors && j < ring.factors);
        let (i, j) = (i.min(j), i.max(j));
        let mut acc = Self::point_at(ring, i).add(&Self::point_at(ring, j)).unwrap();
        for t in 0..ring.genus {
            let mut ab = vec![Letter::One; ring.factors];
            ab[i] = Letter::Alpha(t);
            ab[j] = Letter::Beta(t);
            let mut ba = vec![Letter::One; ring.factors];
            ba[i] = Letter::Beta(t);
            ba[j] = Letter::Alpha(t);
            acc = acc
                .add(&Self::word(ring, ab, -BigRational::one()))
                .unwrap()
                .add(&Self::word(ring, ba, BigRational::one()))
                .unwrap();
        }
        acc
    }

    pub fn ring(&self) -> ProductRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &BigRational)> {
        self.terms.iter()
    }

    fn check_ring(&self, rhs: &Self) -> Result<(), IntersectError> {
        if self.ring != rhs.ring {
            return Err(IntersectError::RingMismatch {
                left: (self.ring.genus, self.ring.factors),
                right: (rhs.ring.genus, rhs.ring.factors),
            });
        }
        Ok(())
    }

    fn add_word(&mut self, letters: Vec<Letter>, coeff: BigRational) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(letters) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, IntersectError> {
        self.check_ring(rhs)?;
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_word(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, IntersectError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        CohClass {
            ring: self.ring,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring);
        }
        CohClass {
            ring: self.ring,
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    /// Graded product with the Koszul sign rule.
    pub fn mul(&self, rhs: &Self) -> Result<Self, IntersectError> {
        self.check_ring(rhs)?;
        let mut out = Self::zero(self.ring);
        for (u, cu) in &self.terms {
            for (v, cv) in &rhs.terms {
                // Sign from commuting v_j (j < i) past u_i: one factor of
                // -1 per odd pair with the u-letter to the right.
                let mut parity = 0u32;
                let mut odd_v_seen = 0u32;
                let mut letters = Vec::with_capacity(self.ring.factors);
                let mut sign = 1i32;
                let mut vanished = false;
                for (&ul, &vl) in u.iter().zip(v.iter()) {
                    if ul.is_odd() {
                        parity += odd_v_seen;
                    }
                    match letter_mul(ul, vl) {
                        None => {
                            vanished = true;
                            break;
                        }
                        Some((s, l)) => {
                            sign *= s;
                            letters.push(l);
                        }
                    }
                    if vl.is_odd() {
                        odd_v_seen += 1;
                    }
                }
                if vanished {
                    continue;
                }
                let mut coeff = cu * cv;
                if (parity % 2 == 1) != (sign < 0) {
                    coeff = -coeff;
                }
                out.add_word(letters, coeff);
            }
        }
        Ok(out)
    }

    /// Total cohomological degree of the words present; `None` when zero
    /// or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut deg = None;
        for w in self.terms.keys() {
            let d: i64 = w.iter().map(|l| l.degree()).sum();
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// The part of total degree `d`.
    pub fn component(&self, d: i64) -> Self {
        CohClass {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.iter().map(|l| l.degree()).sum::<i64>() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Integrate over the whole product: the coefficient of the top word
    /// `pt ⊗ ... ⊗ pt`.
    pub fn integrate(&self) -> BigRational {
        let top = vec![Letter::Point; self.ring.factors];
        self.terms.get(&top).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Push forward along the projection that forgets the first factor:
    /// words with `pt` in position 0 drop it, all others die (odd classes
    /// integrate to zero on the fibre).
    pub fn push_first(&self) -> Result<Self, IntersectError> {
        if self.ring.factors < 2 {
            return Err(IntersectError::Arity {
                expected: 2,
                got: self.ring.factors,
            });
        }
        let target = ProductRing::new(self.ring.genus, self.ring.factors - 1);
        let mut out = Self::zero(target);
        for (w, c) in &self.terms {
            if w[0] == Letter::Point {
                out.add_word(w[1..].to_vec(), c.clone());
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let word: Vec<String> = w.iter().map(|l| l.to_string()).collect();
            write!(f, "{}·[{}]", c, word.join(","))?;
        }
        Ok(())
    }
}

/// Solve `target = Σ x_i·dict_i` exactly; `None` when no (unique or any)
/// rational solution exists.
pub fn express_in(dict: &[CohClass], target: &CohClass) -> Option<Vec<BigRational>> {
    // Collect the word support.
    let mut words: std::collections::BTreeSet<Vec<Letter>> = std::collections::BTreeSet::new();
    for d in dict {
        words.extend(d.terms.keys().cloned());
    }
    words.extend(target.terms.keys().cloned());
    let words: Vec<Vec<Letter>> = words.into_iter().collect();
    let rows = words.len();
    let cols = dict.len();
    // Augmented matrix [A | b].
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = dict
                .iter()
                .map(|d| d.terms.get(&words[r]).cloned().unwrap_or_else(BigRational::zero))
                .collect();
            row.push(
                target
                    .terms
                    .get(&words[r])
                    .cloned()
                    .unwrap_or_else(BigRational::zero),
            );
            row
        })
        .collect();
    // Gaussian elimination.
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let factor = m[r][c].clone();
                for k in 0..=cols {
                    let delta = &factor * &m[rank][k];
                    m[r][k] -= delta;
                }
            }
        }
        pivot_of_col[c] = rank;
        rank += 1;
    }
    // Unique solution requires full column rank and consistency.
    if pivot_of_col.iter().any(|&p| p == usize::MAX) {
        return None;
    }
    for r in rank..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    Some((0..cols).map(|c| m[pivot_of_col[c]][cols].clone()).collect())
}
