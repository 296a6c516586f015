use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::scalar::{binomial, Scalar};
use crate::symfunc::vars::{Alphabet, VarId};

type Poly<C> = Polynomial<VarId, C>;

/// Truncated generating series `Σ_{i=0}^{N} z^i c_i` with polynomial
/// coefficients. Results of every operation are valid through `z^N`.
#[derive(Clone, PartialEq, Debug)]
pub struct AlphabetSeries<C> {
    coeffs: Vec<Poly<C>>,
}

impl<C: Scalar> AlphabetSeries<C> {
    /// A series from its coefficients; truncation is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Poly<C>>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the z^0 coefficient");
        AlphabetSeries { coeffs }
    }

    pub fn one(truncation: usize) -> Self {
        let mut coeffs = vec![Poly::zero(); truncation + 1];
        coeffs[0] = Poly::one();
        AlphabetSeries { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly<C>] {
        &self.coeffs
    }

    /// Coefficient of `z^i`; zero for negative `i`. Panics past truncation.
    pub fn coeff(&self, i: i64) -> Poly<C> {
        if i < 0 {
            return Poly::zero();
        }
        let i = i as usize;
        assert!(i <= self.truncation(), "z^{i} lies beyond truncation {}", self.truncation());
        self.coeffs[i].clone()
    }

    /// Product truncated to the smaller of the two truncations.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let coeffs = (0..=n)
            .map(|i| {
                (0..=i).fold(Poly::zero(), |acc, a| {
                    let (x, y) = (&self.coeffs[a], &other.coeffs[i - a]);
                    if x.is_zero() || y.is_zero() {
                        acc
                    } else {
                        acc + x * y
                    }
                })
            })
            .collect();
        AlphabetSeries { coeffs }
    }

    /// `self^k`, truncated at the same order.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.truncation()), |acc, _| acc.mul(self))
    }

    /// Multiplies by `(1 + z·letter)^r`: adds `r` copies of a letter to the
    /// alphabet. The letter must be a single term.
    pub fn add_letter(&self, r: u32, letter: &Poly<C>) -> Result<Self> {
        if letter.len() > 1 {
            return Err(Error::LetterNotMonomial(letter.len()));
        }
        let n = self.truncation();
        let factor = (0..=n)
            .map(|t| letter.pow(t as u32).scale(&binomial(r as u64, t as u64)))
            .collect();
        Ok(self.mul(&AlphabetSeries { coeffs: factor }))
    }
}

/// `Σ_{i=0}^{N} z^i Λ^i(alphabet)`, with `Λ^0` kept as a variable.
pub fn series_of_alphabet<C: Scalar>(alphabet: Alphabet, truncation: usize) -> AlphabetSeries<C> {
    AlphabetSeries {
        coeffs: (0..=truncation)
            .map(|i| Poly::term(C::one(), Monomial::var(VarId::Lambda(alphabet, i as u32))))
            .collect(),
    }
}

/// `series^k`; the coefficient of `z^i` is `Λ^i(k·alphabet)` for a pure
/// alphabet series.
pub fn series_power<C: Scalar>(series: &AlphabetSeries<C>, k: u32) -> AlphabetSeries<C> {
    assert!(k >= 1, "series_power needs k >= 1");
    series.pow(k)
}

/// `Λ^i(k·alphabet)`, zero for negative `i`.
pub fn lambda_of_multiple<C: Scalar>(alphabet: Alphabet, k: u32, i: i64, truncation: usize) -> Result<Poly<C>> {
    if i > truncation as i64 {
        return Err(Error::Truncation { truncation, index: i });
    }
    if i < 0 {
        return Ok(Poly::zero());
    }
    Ok(MultiplePowers::new(alphabet, truncation).lambda(k, i))
}

/// Powers `s, s^2, …` of one alphabet series, computed incrementally and
/// kept for reuse when building a whole matrix of `Λ^i(k·alphabet)`.
#[derive(Clone, Debug)]
pub struct MultiplePowers<C> {
    base: AlphabetSeries<C>,
    powers: Vec<AlphabetSeries<C>>,
}

impl<C: Scalar> MultiplePowers<C> {
    pub fn new(alphabet: Alphabet, truncation: usize) -> Self {
        MultiplePowers {
            base: series_of_alphabet(alphabet, truncation),
            powers: Vec::new(),
        }
    }

    pub fn truncation(&self) -> usize {
        self.base.truncation()
    }

    /// `Λ^i(k·alphabet)`; zero for negative `i`.
    pub fn lambda(&mut self, k: u32, i: i64) -> Poly<C> {
        assert!(k >= 1);
        if i < 0 {
            return Poly::zero();
        }
        while self.powers.len() < k as usize {
            let next = match self.powers.last() {
                Some(last) => mul_by_pure(last, &self.base),
                None => self.base.clone(),
            };
            self.powers.push(next);
        }
        self.powers[k as usize - 1].coeff(i)
    }
}

// Multiplication by a series whose coefficients are single variables, which
// is all an alphabet series is; avoids the general product's extra clones.
fn mul_by_pure<C: Scalar>(s: &AlphabetSeries<C>, pure: &AlphabetSeries<C>) -> AlphabetSeries<C> {
    let n = s.truncation().min(pure.truncation());
    let letters: Vec<Option<Monomial<VarId>>> = pure
        .coeffs
        .iter()
        .map(|p| p.terms().next().map(|(m, _)| m.clone()))
        .collect();
    let coeffs = (0..=n)
        .map(|i| {
            let mut acc = Poly::zero();
            for a in 0..=i {
                if let Some(m) = &letters[i - a] {
                    for (sm, c) in s.coeffs[a].terms() {
                        acc.add_term(sm.mul(m), c.clone());
                    }
                }
            }
            acc
        })
        .collect();
    AlphabetSeries { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{MultiPoly, Rational};
    use proptest::prelude::*;

    fn a(i: u32) -> MultiPoly {
        MultiPoly::var(VarId::a(i))
    }

    fn x() -> MultiPoly {
        MultiPoly::var(VarId::X)
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn alphabet_series_emits_symbols() {
        let s = series_of_alphabet::<Rational>(Alphabet::A, 3);
        assert_eq!(s.truncation(), 3);
        for i in 0..=3 {
            assert_eq!(s.coeff(i), a(i as u32));
        }
        let d = series_of_alphabet::<Rational>(Alphabet::D, 0);
        assert_eq!(d.coeffs(), &[MultiPoly::var(VarId::d(0))]);
        let e = series_of_alphabet::<Rational>(Alphabet::E, 2);
        assert_eq!(e.coeff(2), MultiPoly::var(VarId::e(2)));
    }

    #[test]
    fn square_of_alphabet_gives_monge_column_entry() {
        let s = series_power(&series_of_alphabet::<Rational>(Alphabet::A, 3), 2);
        let expected = (&a(0) * &a(3)).scale(&int(2)) + (&a(1) * &a(2)).scale(&int(2));
        assert_eq!(s.coeff(3), expected);
        let s1 = series_power(&series_of_alphabet::<Rational>(Alphabet::A, 3), 1);
        assert_eq!(s1, series_of_alphabet(Alphabet::A, 3));
    }

    #[test]
    fn cube_by_brute_force_expansion() {
        // (c0 + c1 z + c2 z^2)^3 at z^2: choose positions of the z's.
        let s = series_power(&series_of_alphabet::<Rational>(Alphabet::A, 2), 3);
        let expected = (&a(0).pow(2) * &a(2)).scale(&int(3)) + (&a(0) * &a(1).pow(2)).scale(&int(3));
        assert_eq!(s.coeff(2), expected);
    }

    #[test]
    fn lambda_of_multiple_cases() {
        let l = lambda_of_multiple::<Rational>(Alphabet::A, 2, 3, 5).unwrap();
        assert_eq!(l, (&a(0) * &a(3)).scale(&int(2)) + (&a(1) * &a(2)).scale(&int(2)));
        assert!(lambda_of_multiple::<Rational>(Alphabet::D, 3, -2, 5).unwrap().is_zero());
        assert_eq!(lambda_of_multiple::<Rational>(Alphabet::A, 1, 4, 5).unwrap(), a(4));
        assert!(lambda_of_multiple::<Rational>(Alphabet::A, 1, 6, 5).is_err());
    }

    #[test]
    fn letter_addition() {
        let s = series_of_alphabet::<Rational>(Alphabet::A, 1).add_letter(1, &x()).unwrap();
        assert_eq!(s.coeff(1), &a(1) + &(&x() * &a(0)));
        let s = series_of_alphabet::<Rational>(Alphabet::A, 2).add_letter(2, &x()).unwrap();
        let expected = &(&a(2) + &(&x() * &a(1)).scale(&int(2))) + &(&x().pow(2) * &a(0));
        assert_eq!(s.coeff(2), expected);
        let base = series_of_alphabet::<Rational>(Alphabet::A, 4);
        assert_eq!(base.add_letter(3, &MultiPoly::zero()).unwrap(), base);
        assert!(base.add_letter(1, &(&x() + &a(1))).is_err());
    }

    #[test]
    fn inverse_letter_cancels_against_x() {
        let inv = MultiPoly::var(VarId::XInv);
        let s = series_of_alphabet::<Rational>(Alphabet::A, 1).add_letter(1, &inv).unwrap();
        let lhs = &x() * &s.coeff(1);
        assert_eq!(lhs, &(&x() * &a(1)) + &a(0));
    }

    #[test]
    fn mixed_truncations_take_the_minimum() {
        let s = series_of_alphabet::<Rational>(Alphabet::A, 5);
        let t = series_of_alphabet::<Rational>(Alphabet::A, 2);
        assert_eq!(s.mul(&t).truncation(), 2);
    }

    proptest! {
        #[test]
        fn product_law(j in 1u32..4, k in 1u32..4, i in 0i64..6) {
            let mut pw = MultiplePowers::<Rational>::new(Alphabet::A, 6);
            let lhs = pw.lambda(j + k, i);
            let rhs = (0..=i).fold(MultiPoly::zero(), |acc, a| acc + &pw.lambda(j, a) * &pw.lambda(k, i - a));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn letter_copies_compose(r in 1u32..5, k in 1u32..3) {
            let s = series_power(&series_of_alphabet::<Rational>(Alphabet::A, 5), k);
            let once = s.add_letter(r, &x()).unwrap();
            let mut iter = s.clone();
            for _ in 0..r {
                iter = iter.add_letter(1, &x()).unwrap();
            }
            prop_assert_eq!(once, iter);
        }
    }
}
