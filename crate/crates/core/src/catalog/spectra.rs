use num_rational::Ratio;
use num_traits::{One, Zero};

use super::GermKind;
use crate::error::{Error, Result};
use crate::scalar::{fmt_rational, frac, int, SpectralInt};
use crate::spectrum::Spectrum;

/// Largest common weight denominator accepted by [`spectrum_from_weights`].
const MAX_WEIGHT_DENOMINATOR: usize = 1 << 20;

pub const E6R1_ROW_NOTE: &str = "E_{6r+1}: the closed-form row (0) + sum_{i=1,2} sum_{j=1..3r} (-i/3 + 2j/(6r+3)) \
is not symmetric about 0 (for r = 1 it gives 1/3 and a doubled 0 instead of 2/9 and 4/9); \
the expansion of the weights (1/3, 2/(6r+3)) is used instead";

/// Spectrum of a two-variable weighted-homogeneous germ with weights `w1, w2`:
/// the expansion of
///
/// ```text
/// Σ n_α t^{α+1} = (t^{w1} - t)/(1 - t^{w1}) · (t^{w2} - t)/(1 - t^{w2})
/// ```
///
/// Both weights are written over a common denominator `D`; with `s = t^{1/D}`
/// the right-hand side is a quotient of integer polynomials in `s` that divides
/// exactly for genuine weight systems.
pub fn spectrum_from_weights<T: SpectralInt>(w1: &Ratio<T>, w2: &Ratio<T>) -> Result<Spectrum<T>> {
    let zero = Ratio::<T>::zero();
    let one = Ratio::<T>::one();
    for w in [w1, w2] {
        if *w <= zero || *w >= one {
            return Err(Error::InvalidArgument(format!("weight {} must lie in ]0,1[", fmt_rational(w))));
        }
    }
    let den = w1.denom().lcm(w2.denom());
    let big = || Error::InvalidArgument(format!("weight denominator {den} too large"));
    let d = den.to_usize().filter(|&d| d <= MAX_WEIGHT_DENOMINATOR).ok_or_else(big)?;
    let scaled = |w: &Ratio<T>| (w * Ratio::from_integer(den.clone())).to_integer().to_usize().ok_or_else(big);
    let (a, b) = (scaled(w1)?, scaled(w2)?);

    // s^{a+b} (1 - s^{D-a}) (1 - s^{D-b})
    let mut numer = vec![0i128; 2 * d + 1];
    numer[a + b] += 1;
    numer[d + b] -= 1;
    numer[a + d] -= 1;
    numer[2 * d] += 1;

    let quotient = divide_by_binomial(&divide_by_binomial(&numer, a)?, b)?;

    let mut s = Spectrum::empty();
    for (e, &c) in quotient.iter().enumerate() {
        if c < 0 {
            return Err(Error::InvalidArgument(format!(
                "weights ({}, {}) give a negative coefficient",
                fmt_rational(w1),
                fmt_rational(w2)
            )));
        }
        if c > 0 {
            let e = i64::try_from(e).map_err(|_| big())?;
            let alpha = Ratio::new(T::from_i64_exact(e), den.clone()) - &one;
            s.add(alpha, c as u64);
        }
    }

    let expected = (one.clone() / w1 - &one) * (one.clone() / w2 - &one);
    if Ratio::from_integer(T::from_u64(s.total()).ok_or_else(big)?) != expected {
        return Err(Error::InvalidArgument(format!(
            "weights ({}, {}) do not define an isolated weighted-homogeneous singularity",
            fmt_rational(w1),
            fmt_rational(w2)
        )));
    }
    Ok(s)
}

/// Exact quotient of `poly` by `1 - s^m`; errors on a non-zero remainder.
fn divide_by_binomial(poly: &[i128], m: usize) -> Result<Vec<i128>> {
    let inexact = || Error::InvalidArgument("generating function does not divide exactly".into());
    if m == 0 || poly.len() <= m {
        return Err(inexact());
    }
    let len = poly.len() - m;
    // q(s) - s^m q(s) = poly(s)  =>  q_i = poly_i + q_{i-m}
    let mut q = vec![0i128; len];
    for i in 0..len {
        q[i] = poly[i] + if i >= m { q[i - m] } else { 0 };
    }
    for i in len..poly.len() {
        let from_q = -q[i - m] + if i < len { q[i] } else { 0 };
        if from_q != poly[i] {
            return Err(inexact());
        }
    }
    while q.last() == Some(&0) {
        q.pop();
    }
    Ok(q)
}

/// `J_{k,i}` with `i > 0`: negative spectral numbers from two groups, zero
/// carries whatever multiplicity is left, positives by symmetry about 0.
///
/// Group 1 has denominator `3k` and numerators `-2k+1, …, -⌈3k/2⌉` together
/// with `-k+1, …, -1`. Group 2 has denominator `6k+2i` and numerators the
/// integers in `]-(3k+i), 0[` of the same parity as `i`.
pub(super) fn j_family_spectrum<T: SpectralInt>(k: u32, i: u32) -> Result<Spectrum<T>> {
    let mu = 6 * i64::from(k) - 2 + i64::from(i);
    let [first, second] = j_negative_groups::<T>(k, i);
    let negatives = first.sum(&second);

    let neg = negatives.total() as i64;
    let zero_mult = mu - 2 * neg;
    if zero_mult < 0 {
        return Err(Error::InvalidClass(format!("J{k}_{i}: {neg} negative spectral numbers exceed half of μ = {mu}")));
    }
    let mut s = negatives.clone();
    for (alpha, &m) in &negatives {
        s.add(-alpha.clone(), m);
    }
    s.add(int(0), zero_mult as u64);
    Ok(s)
}

/// The two groups of negative spectral numbers of the curve germ `J_{k,i}`, `i > 0`.
pub fn j_negative_groups<T: SpectralInt>(k: u32, i: u32) -> [Spectrum<T>; 2] {
    let (kk, ii) = (i64::from(k), i64::from(i));
    let first_stop = if k.is_multiple_of(2) { -3 * kk / 2 } else { (-3 * kk - 1) / 2 };
    let first = (-2 * kk + 1..=first_stop).chain(-kk + 1..=-1).map(|num| frac(num, 3 * kk));
    let second = (-(3 * kk + ii) + 1..0).filter(|l| (l - ii).rem_euclid(2) == 0).map(|num| frac(num, 6 * kk + 2 * ii));
    [Spectrum::from_values(first), Spectrum::from_values(second)]
}

/// Spectrum of a catalog class as written out by its closed-form row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow<T: SpectralInt> {
    pub spectrum: Spectrum<T>,
    /// Set when the closed-form row was not reproduced.
    pub discrepancy: Option<&'static str>,
}

pub(super) fn table_row<T: SpectralInt>(kind: &GermKind) -> Result<TableRow<T>> {
    let i = i64::from;
    let arithmetic =
        |offset: Ratio<T>, step_den: i64, count: i64| (1..=count).map(move |j| offset.clone() + frac::<T>(j, step_den));
    let half = frac::<T>(-1, 2);
    let (m23, m13) = (frac::<T>(-2, 3), frac::<T>(-1, 3));
    let spectrum = match *kind {
        GermKind::A(k) => Spectrum::from_values(arithmetic(half, i(k) + 1, i(k))),
        GermKind::D(k) => {
            let step = 2 * i(k) - 2;
            let mut s = Spectrum::from_values((1..i(k)).map(|j| half.clone() + frac::<T>(2 * j - 1, step)));
            s.add(int(0), 1);
            s
        }
        GermKind::E6r(r) => Spectrum::from_values(arithmetic(m23, 3 * i(r) + 1, 3 * i(r)).chain(arithmetic(
            m13,
            3 * i(r) + 1,
            3 * i(r),
        ))),
        GermKind::E6r2(r) => Spectrum::from_values(arithmetic(m23, 3 * i(r) + 2, 3 * i(r) + 1).chain(arithmetic(
            m13,
            3 * i(r) + 2,
            3 * i(r) + 1,
        ))),
        GermKind::J(k, 0) => Spectrum::from_values(arithmetic(m23, 3 * i(k), 3 * i(k) - 1).chain(arithmetic(
            m13,
            3 * i(k),
            3 * i(k) - 1,
        ))),
        GermKind::E6r1(_) => {
            return Ok(TableRow { spectrum: kind.curve_spectrum()?, discrepancy: Some(E6R1_ROW_NOTE) });
        }
        GermKind::J(..) => return Err(Error::NotWeightedHomogeneous(kind.to_string())),
    };
    Ok(TableRow { spectrum, discrepancy: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Family;
    use num_bigint::BigInt;

    type S = Spectrum<BigInt>;

    fn k(s: &str) -> GermKind {
        s.parse().unwrap()
    }

    #[test]
    fn weights_expansion_examples() {
        let d4 = spectrum_from_weights::<BigInt>(&frac(1, 3), &frac(1, 3)).unwrap();
        assert_eq!(d4, S::from_fractions(&[(-1, 3, 1), (0, 1, 2), (1, 3, 1)]).unwrap());
        let a1 = spectrum_from_weights::<BigInt>(&frac(1, 2), &frac(1, 2)).unwrap();
        assert_eq!(a1, S::from_fractions(&[(0, 1, 1)]).unwrap());
    }

    /// E_7 oracle: s^5 (1 - s + s^2)(1 + s + ... + s^6) with s = t^{1/9}.
    #[test]
    fn e7_matches_hand_expansion() {
        let left = [1i64, -1, 1];
        let right = [1i64; 7];
        let mut poly = vec![0i64; 5 + left.len() + right.len() - 1];
        for (p, a) in left.iter().enumerate() {
            for (q, b) in right.iter().enumerate() {
                poly[5 + p + q] += a * b;
            }
        }
        let oracle = S::from_pairs(
            poly.iter().enumerate().filter(|(_, &c)| c != 0).map(|(e, &c)| (frac(e as i64 - 9, 9), c as u64)),
        )
        .unwrap();
        assert_eq!(oracle.total(), 7);
        let e7 = spectrum_from_weights::<BigInt>(&frac(1, 3), &frac(2, 9)).unwrap();
        assert_eq!(e7, oracle);
        assert_eq!(
            e7,
            S::from_fractions(&[(-4, 9, 1), (-2, 9, 1), (-1, 9, 1), (0, 1, 1), (1, 9, 1), (2, 9, 1), (4, 9, 1)])
                .unwrap()
        );
    }

    #[test]
    fn bad_weights_rejected() {
        assert!(spectrum_from_weights::<BigInt>(&frac(0, 1), &frac(1, 2)).is_err());
        assert!(spectrum_from_weights::<BigInt>(&frac(1, 1), &frac(1, 2)).is_err());
        assert!(spectrum_from_weights::<BigInt>(&frac(2, 5), &frac(2, 5)).is_err());
    }

    #[test]
    fn curve_spectrum_examples() {
        assert_eq!(k("A2").curve_spectrum::<BigInt>().unwrap(), S::from_fractions(&[(-1, 6, 1), (1, 6, 1)]).unwrap());
        let j20 = S::from_values((1..=2).flat_map(|i| (1..=5).map(move |j| frac(i, 3) + frac(j, 6) - int(1))));
        assert_eq!(j20.total(), 10);
        assert_eq!(k("J2_0").curve_spectrum::<BigInt>().unwrap(), j20);
    }

    #[test]
    fn j24_spectrum() {
        let s = k("J2_4").curve_spectrum::<BigInt>().unwrap();
        let neg =
            S::from_fractions(&[(-1, 2, 1), (-2, 5, 1), (-3, 10, 1), (-1, 5, 1), (-1, 6, 1), (-1, 10, 1)]).unwrap();
        assert_eq!(s.negative_part(), neg);
        assert_eq!(s.multiplicity(&int(0)), 2);
        assert_eq!(s.total(), 14);
        assert!(s.is_symmetric(&int(0)));
    }

    #[test]
    fn table_rows_agree_with_expansion() {
        for g in GermKind::up_to_milnor(200, &Family::ALL).into_iter().filter(|g| g.is_weighted_homogeneous()) {
            let row = g.table_spectrum::<BigInt>().unwrap();
            assert_eq!(row.spectrum, g.curve_spectrum::<BigInt>().unwrap(), "{g}");
            assert_eq!(row.discrepancy.is_some(), matches!(g, GermKind::E6r1(_)), "{g}");
        }
        assert!(k("J2_1").table_spectrum::<BigInt>().is_err());
    }

    #[test]
    fn divide_by_binomial_detects_remainder() {
        // (1 - s^4) / (1 - s^2) = 1 + s^2
        assert_eq!(divide_by_binomial(&[1, 0, 0, 0, -1], 2).unwrap(), vec![1, 0, 1]);
        assert!(divide_by_binomial(&[1, 0, 0, -1], 2).is_err());
    }
}
